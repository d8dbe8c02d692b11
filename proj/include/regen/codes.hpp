#ifndef REGEN_CODES_HPP
#define REGEN_CODES_HPP

#include "regen/gf.hpp"
#include "regen/tradeoff.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace regen::codes {

using gf::Matrix;

/// One repair recipe: each helper applies its transmit matrix to its stored
/// column, the stacked transmissions go through the combining matrix, and the
/// result equals the failed node's stored column.
struct RepairScheme {
    int failed;
    int d_hat;
    std::vector<int> helpers;       // small-code node ids, ascending
    std::vector<Matrix> transmit;   // per helper, t_i x alpha_hat
    Matrix combine;                 // alpha_hat x sum(t_i)

    int bandwidth_subsymbols() const {
        int total = 0;
        for (const auto& w : transmit) total += w.rows();
        return total;
    }
};

class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An (k_hat+2, k_hat) MSR code over GF(q) at subsymbol granularity:
/// 2 subsymbols per node, file of 2*k_hat subsymbols, one subsymbol per
/// helper at the top repair degree. Exhaustively validated at build time.
class MsrSmallCode {
  public:
    static MsrSmallCode build(int n_hat, int k_hat, std::uint32_t q);

    int n_hat() const { return n_hat_; }
    int k_hat() const { return k_hat_; }
    std::uint32_t modulus() const { return q_; }
    int alpha_subsymbols() const { return 2; }
    int file_subsymbols() const { return 2 * k_hat_; }

    const Matrix& generator(int node) const { return gen_.at(node); }

    /// Scheme for the given failed node and helper set (any supported size).
    const RepairScheme& scheme(int failed, std::vector<int> helpers) const {
        std::sort(helpers.begin(), helpers.end());
        auto it = schemes_.find({failed, helpers});
        if (it == schemes_.end())
            throw std::invalid_argument("no repair scheme for this failed/helper combination");
        return it->second;
    }

    const std::map<std::pair<int, std::vector<int>>, RepairScheme>& schemes() const {
        return schemes_;
    }

    void validate() const;

  private:
    MsrSmallCode(int n_hat, int k_hat, std::uint32_t q)
        : n_hat_(n_hat), k_hat_(k_hat), q_(gf::check_prime(q)) {}

    void add_scheme(RepairScheme s) {
        std::vector<int> key = s.helpers;
        schemes_.emplace(std::make_pair(s.failed, std::move(key)), std::move(s));
    }

    void build_whole_file_schemes();
    void build_top_degree_schemes_by_search();
    void build_replication();
    void build_searched_mds();
    void build_product_matrix();

    int n_hat_, k_hat_;
    std::uint32_t q_;
    std::vector<Matrix> gen_;  // per node: 2 x file_subsymbols
    std::map<std::pair<int, std::vector<int>>, RepairScheme> schemes_;
};

namespace detail {

inline void for_each_subset(int n, int r, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    if (r > n) return;
    while (true) {
        f(idx);
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Representatives of the projective line over GF(q)^2: (1,0) and (t,1).
inline std::vector<Matrix> projective_line(std::uint32_t q) {
    std::vector<Matrix> out;
    Matrix e(1, 2, q);
    e.at(0, 0) = 1;
    out.push_back(e);
    for (std::uint32_t t = 0; t < q; ++t) {
        Matrix w(1, 2, q);
        w.at(0, 0) = t;
        w.at(0, 1) = 1;
        out.push_back(w);
    }
    return out;
}

}  // namespace detail

inline void MsrSmallCode::build_whole_file_schemes() {
    const int M = file_subsymbols();
    for (int f = 0; f < n_hat_; ++f) {
        std::vector<int> others;
        for (int i = 0; i < n_hat_; ++i)
            if (i != f) others.push_back(i);
        detail::for_each_subset(n_hat_ - 1, k_hat_, [&](const std::vector<int>& idx) {
            RepairScheme s{f, k_hat_, {}, {}, Matrix(0, 0, q_)};
            std::vector<Matrix> stacked;
            for (int i : idx) {
                s.helpers.push_back(others[i]);
                s.transmit.push_back(Matrix::identity(2, q_));
                stacked.push_back(gen_[others[i]]);
            }
            const Matrix T = gf::vstack_all(stacked);  // M x M, invertible by MDS
            if (T.rank() != M)
                throw ValidationError("reconstruction rank deficiency blocks whole-file repair");
            s.combine = gen_[f] * T.inverse();
            add_scheme(std::move(s));
        });
    }
}

inline void MsrSmallCode::build_top_degree_schemes_by_search() {
    // Degree n_hat-1 = k_hat+1: every other node sends one subsymbol. Search
    // one projective transmit vector per helper until the failed node's rows
    // fall in the span of the transmissions.
    const auto lines = detail::projective_line(q_);
    for (int f = 0; f < n_hat_; ++f) {
        std::vector<int> helpers;
        for (int i = 0; i < n_hat_; ++i)
            if (i != f) helpers.push_back(i);
        const int h = static_cast<int>(helpers.size());
        std::vector<size_t> pick(h, 0);
        bool found = false;
        while (!found) {
            std::vector<Matrix> rows;
            RepairScheme s{f, n_hat_ - 1, helpers, {}, Matrix(0, 0, q_)};
            for (int i = 0; i < h; ++i) {
                s.transmit.push_back(lines[pick[i]]);
                rows.push_back(lines[pick[i]] * gen_[helpers[i]]);
            }
            const Matrix T = gf::vstack_all(rows);
            // C * T = G_f has a solution iff G_f's rows lie in rowspace(T);
            // solve the transposed system T^t C^t = G_f^t.
            Matrix Tt(T.cols(), T.rows(), q_);
            for (int r = 0; r < T.rows(); ++r)
                for (int c = 0; c < T.cols(); ++c) Tt.at(c, r) = T.at(r, c);
            Matrix Gt(T.cols(), 2, q_);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < T.cols(); ++c) Gt.at(c, r) = gen_[f].at(r, c);
            if (auto ct = Tt.solve(Gt)) {
                Matrix C(2, T.rows(), q_);
                for (int r = 0; r < 2; ++r)
                    for (int c = 0; c < T.rows(); ++c) C.at(r, c) = ct->at(c, r);
                s.combine = std::move(C);
                add_scheme(std::move(s));
                found = true;
                break;
            }
            int i = h - 1;
            while (i >= 0 && pick[i] + 1 == lines.size()) pick[i--] = 0;
            if (i < 0) break;
            ++pick[i];
        }
        if (!found)
            throw ValidationError("no one-subsymbol-per-helper repair scheme exists for node " +
                                  std::to_string(f) + " over this field");
    }
}

inline void MsrSmallCode::build_replication() {
    // (3,1): every node stores the whole 2-subsymbol file.
    for (int i = 0; i < 3; ++i) gen_.push_back(Matrix::identity(2, q_));
    // Degree 2: one subsymbol from each helper.
    for (int f = 0; f < 3; ++f) {
        std::vector<int> helpers;
        for (int i = 0; i < 3; ++i)
            if (i != f) helpers.push_back(i);
        RepairScheme s{f, 2, helpers, {}, Matrix::identity(2, q_)};
        Matrix w0(1, 2, q_), w1(1, 2, q_);
        w0.at(0, 0) = 1;
        w1.at(0, 1) = 1;
        s.transmit = {w0, w1};
        add_scheme(std::move(s));
    }
    build_whole_file_schemes();
}

inline void MsrSmallCode::build_searched_mds() {
    // (4,2): systematic nodes plus two parities. Candidate parity blocks are
    // drawn from a fixed-seed generator until both the MDS property and the
    // degree-3 repair search succeed.
    std::mt19937_64 rng(0x5eedc0de);
    const int M = 4;
    for (int attempt = 0; attempt < 4096; ++attempt) {
        gen_.clear();
        schemes_.clear();
        Matrix g0(2, M, q_), g1(2, M, q_), g2(2, M, q_), g3(2, M, q_);
        g0.at(0, 0) = g0.at(1, 1) = 1;
        g1.at(0, 2) = g1.at(1, 3) = 1;
        for (auto* g : {&g2, &g3})
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < M; ++c) g->at(r, c) = static_cast<std::uint32_t>(rng() % q_);
        gen_ = {g0, g1, g2, g3};
        bool mds = true;
        detail::for_each_subset(4, 2, [&](const std::vector<int>& idx) {
            if (gen_[idx[0]].vstack(gen_[idx[1]]).rank() != M) mds = false;
        });
        if (!mds) continue;
        try {
            build_top_degree_schemes_by_search();
        } catch (const ValidationError&) {
            continue;
        }
        build_whole_file_schemes();
        return;
    }
    throw ValidationError("field too small: no (4,2) code with aligned repair found");
}

inline void MsrSmallCode::build_product_matrix() {
    // (5,3) at repair degree 4 = 2*k_hat - 2: product-matrix layout. The
    // message is a pair of symmetric 2x2 matrices (6 free subsymbols); node i
    // with encoding vector (phi_i, lambda_i * phi_i), phi_i = (1, theta_i),
    // lambda_i = theta_i^2.
    std::vector<std::uint32_t> theta;
    std::vector<bool> used_sq(q_, false);
    for (std::uint32_t t = 1; t < q_ && theta.size() < 5; ++t) {
        const std::uint32_t sq = gf::mulm(t, t, q_);
        if (used_sq[sq]) continue;
        used_sq[sq] = true;
        theta.push_back(t);
    }
    if (theta.size() < 5)
        throw ValidationError("field too small: need 5 elements with distinct squares");
    // File symbol order: s1_00, s1_01, s1_11, s2_00, s2_01, s2_11.
    const int M = 6;
    for (int i = 0; i < 5; ++i) {
        const std::uint32_t t = theta[i];
        const std::uint32_t lam = gf::mulm(t, t, q_);
        Matrix g(2, M, q_);
        // row j = phi . S1[:,j] + lambda * phi . S2[:,j], phi = (1, t)
        g.at(0, 0) = 1;
        g.at(0, 1) = t;
        g.at(0, 3) = lam;
        g.at(0, 4) = gf::mulm(lam, t, q_);
        g.at(1, 1) = 1;
        g.at(1, 2) = t;
        g.at(1, 4) = lam;
        g.at(1, 5) = gf::mulm(lam, t, q_);
        gen_.push_back(g);
    }
    // Degree-4 repair: helper j sends its stored pair dotted with phi_f.
    for (int f = 0; f < 5; ++f) {
        std::vector<int> helpers;
        for (int i = 0; i < 5; ++i)
            if (i != f) helpers.push_back(i);
        RepairScheme s{f, 4, helpers, {}, Matrix(0, 0, q_)};
        std::vector<Matrix> rows;
        for (int h : helpers) {
            Matrix w(1, 2, q_);
            w.at(0, 0) = 1;
            w.at(0, 1) = theta[f];
            s.transmit.push_back(w);
            rows.push_back(w * gen_[h]);
        }
        const Matrix T = gf::vstack_all(rows);  // 4 x 6
        Matrix Tt(M, 4, q_), Gt(M, 2, q_);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < M; ++c) Tt.at(c, r) = T.at(r, c);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < M; ++c) Gt.at(c, r) = gen_[f].at(r, c);
        auto ct = Tt.solve(Gt);
        if (!ct) throw ValidationError("product-matrix repair system inconsistent");
        Matrix C(2, 4, q_);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 4; ++c) C.at(r, c) = ct->at(c, r);
        s.combine = std::move(C);
        add_scheme(std::move(s));
    }
    build_whole_file_schemes();
}

inline MsrSmallCode MsrSmallCode::build(int n_hat, int k_hat, std::uint32_t q) {
    if (n_hat - k_hat != 2 || k_hat < 1)
        throw std::invalid_argument("MsrSmallCode: supported regime is n_hat = k_hat + 2");
    if (q < 5) throw std::invalid_argument("MsrSmallCode: field order must be at least 5");
    MsrSmallCode code(n_hat, k_hat, q);
    switch (k_hat) {
        case 1: code.build_replication(); break;
        case 2: code.build_searched_mds(); break;
        case 3: code.build_product_matrix(); break;
        default:
            throw ValidationError(
                "construction unsatisfiable: no finite single-subsymbol repair construction "
                "implemented for k_hat > 3");
    }
    code.validate();
    return code;
}

inline void MsrSmallCode::validate() const {
    const int M = file_subsymbols();
    // Reconstruction: every k_hat-subset stacks to full rank.
    detail::for_each_subset(n_hat_, k_hat_, [&](const std::vector<int>& idx) {
        std::vector<Matrix> parts;
        for (int i : idx) parts.push_back(gen_[i]);
        if (gf::vstack_all(parts).rank() != M)
            throw ValidationError("reconstruction invariant violated: k_hat-subset rank below file size");
    });
    // Every scheme reproduces the failed node's generator rows exactly, at
    // the advertised bandwidth.
    for (const auto& [key, s] : schemes_) {
        std::vector<Matrix> rows;
        for (size_t i = 0; i < s.helpers.size(); ++i)
            rows.push_back(s.transmit[i] * gen_[s.helpers[i]]);
        if (s.combine * gf::vstack_all(rows) != gen_[s.failed])
            throw ValidationError("exact-repair invariant violated for a stored scheme");
        const int expect = s.d_hat == k_hat_ ? 2 * k_hat_ : s.d_hat == n_hat_ - 1 ? n_hat_ - 1 : -1;
        if (s.bandwidth_subsymbols() != expect)
            throw ValidationError("repair bandwidth does not match the per-degree optimum");
    }
    // Both supported degrees must be covered for every node.
    for (int f = 0; f < n_hat_; ++f) {
        std::vector<int> all;
        for (int i = 0; i < n_hat_; ++i)
            if (i != f) all.push_back(i);
        scheme(f, all);
    }
}

/// Small code placed at `placement` inside an n-node system; the remaining
/// positions store nothing.
struct HeterogeneousCode {
    MsrSmallCode small;
    int n;
    std::vector<int> placement;  // role r lives at position placement[r]
};

inline HeterogeneousCode extend_with_empty_nodes(MsrSmallCode small, int n,
                                                 std::vector<int> placement) {
    if (static_cast<int>(placement.size()) != small.n_hat())
        throw std::invalid_argument("placement size must equal n_hat");
    for (int p : placement)
        if (p < 0 || p >= n) throw std::invalid_argument("placement position out of range");
    return {std::move(small), n, std::move(placement)};
}

class RepairMismatch : public std::runtime_error {
  public:
    RepairMismatch(int failed, std::vector<int> helpers)
        : std::runtime_error(describe(failed, helpers)), failed_node(failed),
          helper_set(std::move(helpers)) {}

    int failed_node;
    std::vector<int> helper_set;

  private:
    static std::string describe(int f, const std::vector<int>& hs) {
        std::string s = "exact repair mismatch: failed=" + std::to_string(f) + " helpers={";
        for (size_t i = 0; i < hs.size(); ++i) s += (i ? "," : "") + std::to_string(hs[i]);
        return s + "}";
    }
};

struct RepairResult {
    long long total_subsymbols = 0;
    std::vector<long long> per_copy_subsymbols;
    std::vector<Matrix> replacement;  // per copy; 0x1 where the node is empty
};

/// All n! permuted copies of a heterogeneous code, each carrying an
/// independently seeded file. Storage is identical across nodes.
class GluedCode {
  public:
    static GluedCode build(const SystemParams& params, const HeterogeneousCode& het,
                           std::uint64_t seed, bool cap_override = false, int cap = 7) {
        if (!cap_override && params.n > cap)
            throw std::length_error(
                "n! copies exceed the desk-scale cap (n > " + std::to_string(cap) +
                "); pass the cap override to proceed");
        return GluedCode(params, het, seed);
    }

    const SystemParams& params() const { return params_; }
    const MsrSmallCode& small() const { return small_; }
    std::uint64_t seed() const { return seed_; }
    int copies() const { return static_cast<int>(perms_.size()); }
    long long total_file_subsymbols() const {
        return static_cast<long long>(copies()) * small_.file_subsymbols();
    }

    /// Role of `position` in copy `c`, or -1 when the position is empty there.
    int role_of(int c, int position) const { return pos_to_role_[c][position]; }

    const Matrix& file(int c) const { return files_[c]; }
    const Matrix& stored(int c, int role) const { return stored_[c][role]; }

    long long node_storage_subsymbols(int position) const {
        long long total = 0;
        for (int c = 0; c < copies(); ++c)
            if (role_of(c, position) >= 0) total += small_.alpha_subsymbols();
        return total;
    }

    /// Recover every copy's file from the given k positions.
    std::vector<Matrix> reconstruct(const std::vector<int>& positions) const {
        if (static_cast<int>(positions.size()) != params_.k)
            throw std::invalid_argument("reconstruct: need exactly k positions");
        std::vector<Matrix> out;
        out.reserve(copies());
        for (int c = 0; c < copies(); ++c) {
            std::vector<Matrix> gens, vals;
            for (int p : positions) {
                const int r = role_of(c, p);
                if (r < 0) continue;
                gens.push_back(small_.generator(r));
                vals.push_back(stored_[c][r]);
            }
            const Matrix G = gf::vstack_all(gens);
            if (G.rank() != small_.file_subsymbols())
                throw std::logic_error("reconstruction rank deficiency in a validated build");
            auto x = G.solve(gf::vstack_all(vals));
            if (!x) throw std::logic_error("reconstruction system inconsistent");
            out.push_back(std::move(*x));
        }
        return out;
    }

    /// Repair one node from d helpers, copy by copy, verifying exactness and
    /// tallying transmitted subsymbols.
    RepairResult repair(int failed, std::vector<int> helpers) const {
        if (static_cast<int>(helpers.size()) != params_.d)
            throw std::invalid_argument("repair: need exactly d helpers");
        std::sort(helpers.begin(), helpers.end());
        for (int h : helpers)
            if (h == failed) throw std::invalid_argument("repair: failed node among helpers");
        RepairResult res;
        for (int c = 0; c < copies(); ++c) {
            const int rf = role_of(c, failed);
            if (rf < 0) {
                res.per_copy_subsymbols.push_back(0);
                res.replacement.emplace_back(0, 1, small_.modulus());
                continue;
            }
            std::vector<int> small_helpers;  // roles, ascending
            for (int h : helpers) {
                const int r = role_of(c, h);
                if (r >= 0) small_helpers.push_back(r);
            }
            std::sort(small_helpers.begin(), small_helpers.end());
            const int top = small_.n_hat() - 1;
            std::vector<int> use;
            if (static_cast<int>(small_helpers.size()) >= top)
                use = small_helpers;  // == all other small-code roles
            else if (static_cast<int>(small_helpers.size()) >= small_.k_hat())
                use.assign(small_helpers.begin(), small_helpers.begin() + small_.k_hat());
            else
                throw std::logic_error("helper set meets fewer than k_hat small-code nodes");
            const RepairScheme& s = small_.scheme(rf, use);
            std::vector<Matrix> received;
            for (size_t i = 0; i < s.helpers.size(); ++i)
                received.push_back(s.transmit[i] * stored_[c][s.helpers[i]]);
            Matrix replacement = s.combine * gf::vstack_all(received);
            if (replacement != stored_[c][rf]) throw RepairMismatch(failed, helpers);
            res.per_copy_subsymbols.push_back(s.bandwidth_subsymbols());
            res.total_subsymbols += s.bandwidth_subsymbols();
            res.replacement.push_back(std::move(replacement));
        }
        return res;
    }

    /// Test hook: corrupt one stored subsymbol.
    void tamper(int position) {
        for (int c = 0; c < copies(); ++c) {
            const int r = role_of(c, position);
            if (r < 0) continue;
            auto& m = stored_[c][r];
            m.at(0, 0) = gf::addm(m.at(0, 0), 1, small_.modulus());
            return;
        }
    }

    /// Deterministic text dump: field, generators, repair schemes, per-copy
    /// permutation and file.
    void serialize(std::ostream& os) const {
        os << "regentk glued-code v1\n";
        os << "field " << small_.modulus() << "\n";
        os << "params n=" << params_.n << " k=" << params_.k << " d=" << params_.d << "\n";
        os << "small n_hat=" << small_.n_hat() << " k_hat=" << small_.k_hat()
           << " alpha_sub=" << small_.alpha_subsymbols()
           << " file_sub=" << small_.file_subsymbols() << "\n";
        os << "seed " << seed_ << "\n";
        os << "copies " << copies() << "\n";
        for (int r = 0; r < small_.n_hat(); ++r) {
            os << "generator role " << r << "\n";
            dump(os, small_.generator(r));
        }
        for (const auto& [key, s] : small_.schemes()) {
            os << "scheme failed=" << s.failed << " dhat=" << s.d_hat << " helpers=";
            for (size_t i = 0; i < s.helpers.size(); ++i) os << (i ? "," : "") << s.helpers[i];
            os << "\n";
            for (size_t i = 0; i < s.helpers.size(); ++i) {
                os << "transmit helper=" << s.helpers[i] << "\n";
                dump(os, s.transmit[i]);
            }
            os << "combine\n";
            dump(os, s.combine);
        }
        for (int c = 0; c < copies(); ++c) {
            os << "copy " << c << " roles";
            for (int p = 0; p < params_.n; ++p) os << " " << pos_to_role_[c][p];
            os << "\nfile";
            for (int i = 0; i < files_[c].rows(); ++i) os << " " << files_[c].at(i, 0);
            os << "\n";
        }
    }

  private:
    GluedCode(const SystemParams& params, const HeterogeneousCode& het, std::uint64_t seed)
        : params_(params), small_(het.small), seed_(seed) {
        if (het.n != params.n)
            throw std::invalid_argument("heterogeneous code size does not match system params");
        std::vector<int> perm(params.n);
        std::iota(perm.begin(), perm.end(), 0);
        std::mt19937_64 rng(seed);
        const std::uint32_t q = small_.modulus();
        do {
            perms_.push_back(perm);
            std::vector<int> roles(params.n, -1);
            for (int r = 0; r < small_.n_hat(); ++r) roles[perm[het.placement[r]]] = r;
            pos_to_role_.push_back(std::move(roles));
            Matrix f(small_.file_subsymbols(), 1, q);
            for (int i = 0; i < f.rows(); ++i) f.at(i, 0) = static_cast<std::uint32_t>(rng() % q);
            std::vector<Matrix> stored;
            for (int r = 0; r < small_.n_hat(); ++r) stored.push_back(small_.generator(r) * f);
            files_.push_back(std::move(f));
            stored_.push_back(std::move(stored));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    static void dump(std::ostream& os, const Matrix& m) {
        for (int r = 0; r < m.rows(); ++r) {
            for (int c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m.at(r, c);
            os << "\n";
        }
    }

    SystemParams params_;
    MsrSmallCode small_;
    std::uint64_t seed_;
    std::vector<std::vector<int>> perms_;
    std::vector<std::vector<int>> pos_to_role_;
    std::vector<Matrix> files_;                 // per copy, file_sub x 1
    std::vector<std::vector<Matrix>> stored_;   // per copy, per role, 2 x 1
};

inline GluedCode glue_all_permutations(const SystemParams& params, const HeterogeneousCode& het,
                                       std::uint64_t seed, bool cap_override = false) {
    return GluedCode::build(params, het, seed, cap_override);
}

/// Convenience: build, place at the first n_hat positions, and glue.
inline GluedCode build_glued(const SystemParams& params, int k_hat, std::uint32_t q,
                             std::uint64_t seed, bool cap_override = false) {
    if (params.n - params.k != 2 && params.n != k_hat + 2)
        throw std::invalid_argument("concrete builds require n - k = 2 (or n = n_hat)");
    MsrSmallCode small = MsrSmallCode::build(k_hat + 2, k_hat, q);
    std::vector<int> placement(small.n_hat());
    std::iota(placement.begin(), placement.end(), 0);
    HeterogeneousCode het = extend_with_empty_nodes(std::move(small), params.n, std::move(placement));
    return glue_all_permutations(params, het, seed, cap_override);
}

}  // namespace regen::codes

#endif
