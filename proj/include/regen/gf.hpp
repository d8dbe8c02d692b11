#ifndef REGEN_GF_HPP
#define REGEN_GF_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace regen::gf {

inline bool is_prime(std::uint32_t q) {
    if (q < 2) return false;
    for (std::uint64_t p = 2; p * p <= q; ++p)
        if (q % p == 0) return false;
    return true;
}

inline std::uint32_t check_prime(std::uint32_t q) {
    if (!is_prime(q)) throw std::invalid_argument("field order must be prime");
    return q;
}

inline std::uint32_t addm(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
    return (a + b) % q;
}
inline std::uint32_t subm(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
    return (a + q - b) % q;
}
inline std::uint32_t mulm(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
    return static_cast<std::uint32_t>(std::uint64_t(a) * b % q);
}
inline std::uint32_t powm(std::uint32_t a, std::uint64_t e, std::uint32_t q) {
    std::uint32_t r = 1 % q;
    while (e) {
        if (e & 1) r = mulm(r, a, q);
        a = mulm(a, a, q);
        e >>= 1;
    }
    return r;
}
inline std::uint32_t invm(std::uint32_t a, std::uint32_t q) {
    if (a % q == 0) throw std::domain_error("inverse of zero");
    return powm(a % q, q - 2, q);
}

/// Residue mod a prime q. Arithmetic between mismatched moduli throws.
struct Element {
    std::uint32_t value = 0;
    std::uint32_t modulus = 2;

    Element() = default;
    Element(std::uint32_t v, std::uint32_t q) : value(v % check_prime(q)), modulus(q) {}

    friend Element operator+(Element a, Element b) { a.same(b); return {addm(a.value, b.value, a.modulus), a.modulus}; }
    friend Element operator-(Element a, Element b) { a.same(b); return {subm(a.value, b.value, a.modulus), a.modulus}; }
    friend Element operator*(Element a, Element b) { a.same(b); return {mulm(a.value, b.value, a.modulus), a.modulus}; }
    friend Element operator/(Element a, Element b) { a.same(b); return {mulm(a.value, invm(b.value, a.modulus), a.modulus), a.modulus}; }
    friend bool operator==(const Element&, const Element&) = default;

  private:
    void same(const Element& other) const {
        if (modulus != other.modulus) throw std::invalid_argument("mixed field moduli");
    }
};

/// Dense matrix over GF(q). Everything here is tiny, so plain Gaussian
/// elimination is used throughout.
class Matrix {
  public:
    Matrix(int rows, int cols, std::uint32_t q)
        : rows_(rows), cols_(cols), q_(check_prime(q)), a_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static Matrix identity(int n, std::uint32_t q) {
        Matrix m(n, n, q);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint32_t modulus() const { return q_; }

    std::uint32_t& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    std::uint32_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    void set(int r, int c, std::uint32_t v) { at(r, c) = v % q_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    Matrix operator*(const Matrix& rhs) const {
        require_same_field(rhs);
        if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        Matrix out(rows_, rhs.cols_, q_);
        for (int i = 0; i < rows_; ++i)
            for (int t = 0; t < cols_; ++t) {
                const std::uint32_t v = at(i, t);
                if (!v) continue;
                for (int j = 0; j < rhs.cols_; ++j)
                    out.at(i, j) = addm(out.at(i, j), mulm(v, rhs.at(t, j), q_), q_);
            }
        return out;
    }

    Matrix operator+(const Matrix& rhs) const {
        require_same_field(rhs);
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
        Matrix out(rows_, cols_, q_);
        for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = addm(a_[i], rhs.a_[i], q_);
        return out;
    }

    /// Vertical concatenation.
    Matrix vstack(const Matrix& below) const {
        require_same_field(below);
        if (cols_ != below.cols_) throw std::invalid_argument("vstack column mismatch");
        Matrix out(rows_ + below.rows_, cols_, q_);
        std::copy(a_.begin(), a_.end(), out.a_.begin());
        std::copy(below.a_.begin(), below.a_.end(), out.a_.begin() + a_.size());
        return out;
    }

    Matrix row(int r) const {
        Matrix out(1, cols_, q_);
        for (int j = 0; j < cols_; ++j) out.at(0, j) = at(r, j);
        return out;
    }

    int rank() const {
        Matrix m = *this;
        return m.forward_eliminate();
    }

    /// Exact solution of (*this) * x = rhs; particular solution with free
    /// variables set to zero. nullopt when inconsistent.
    std::optional<Matrix> solve(const Matrix& rhs) const {
        require_same_field(rhs);
        if (rows_ != rhs.rows_) throw std::invalid_argument("solve dimension mismatch");
        // Augment and reduce to RREF.
        Matrix aug(rows_, cols_ + rhs.cols_, q_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            for (int j = 0; j < rhs.cols_; ++j) aug.at(i, cols_ + j) = rhs.at(i, j);
        }
        std::vector<int> pivot_col;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int p = -1;
            for (int i = r; i < rows_; ++i)
                if (aug.at(i, c)) { p = i; break; }
            if (p < 0) continue;
            aug.swap_rows(p, r);
            const std::uint32_t inv = invm(aug.at(r, c), q_);
            for (int j = c; j < aug.cols_; ++j) aug.at(r, j) = mulm(aug.at(r, j), inv, q_);
            for (int i = 0; i < rows_; ++i) {
                if (i == r || !aug.at(i, c)) continue;
                const std::uint32_t f = aug.at(i, c);
                for (int j = c; j < aug.cols_; ++j)
                    aug.at(i, j) = subm(aug.at(i, j), mulm(f, aug.at(r, j), q_), q_);
            }
            pivot_col.push_back(c);
            ++r;
        }
        for (int i = r; i < rows_; ++i)
            for (int j = 0; j < rhs.cols_; ++j)
                if (aug.at(i, cols_ + j)) return std::nullopt;
        Matrix x(cols_, rhs.cols_, q_);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < rhs.cols_; ++j)
                x.at(pivot_col[i], j) = aug.at(i, cols_ + j);
        return x;
    }

    Matrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
        auto x = solve(identity(rows_, q_));
        if (!x || rank() != rows_) throw std::domain_error("singular matrix");
        return *x;
    }

  private:
    void require_same_field(const Matrix& other) const {
        if (q_ != other.q_) throw std::invalid_argument("mixed field moduli");
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

    // Row echelon, returns rank. Destroys contents.
    int forward_eliminate() {
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int p = -1;
            for (int i = r; i < rows_; ++i)
                if (at(i, c)) { p = i; break; }
            if (p < 0) continue;
            swap_rows(p, r);
            const std::uint32_t inv = invm(at(r, c), q_);
            for (int j = c; j < cols_; ++j) at(r, j) = mulm(at(r, j), inv, q_);
            for (int i = r + 1; i < rows_; ++i) {
                const std::uint32_t f = at(i, c);
                if (!f) continue;
                for (int j = c; j < cols_; ++j)
                    at(i, j) = subm(at(i, j), mulm(f, at(r, j), q_), q_);
            }
            ++r;
        }
        return r;
    }

    int rows_, cols_;
    std::uint32_t q_;
    std::vector<std::uint32_t> a_;
};

inline Matrix vstack_all(const std::vector<Matrix>& parts) {
    if (parts.empty()) throw std::invalid_argument("vstack_all: empty");
    Matrix out = parts.front();
    for (size_t i = 1; i < parts.size(); ++i) out = out.vstack(parts[i]);
    return out;
}

}  // namespace regen::gf

#endif
