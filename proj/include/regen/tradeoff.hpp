#ifndef REGEN_TRADEOFF_HPP
#define REGEN_TRADEOFF_HPP

#include "regen/combinat.hpp"
#include "regen/rational.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace regen {

/// The big-system triple (n, k, d) plus the file size everything is
/// normalized against.
struct SystemParams {
    int n;
    int k;
    int d;
    Rational file_size;

    SystemParams(int n_, int k_, int d_, Rational file_size_ = 1)
        : n(n_), k(k_), d(d_), file_size(std::move(file_size_)) {
        if (!(1 <= k && k <= d && d <= n - 1))
            throw std::invalid_argument("SystemParams: need 1 <= k <= d <= n-1");
        if (file_size <= 0) throw std::invalid_argument("SystemParams: file size must be positive");
    }
};

/// How the small code's parity count is matched to the big system:
/// n_hat - k_hat = n - k (reconstruction) or n - d (repair).
enum class ParityRule { Reconstruction, Repair };

/// Parameters of the embedded MSR building block. Its file size is
/// k_hat * alpha_hat.
struct SmallCode {
    int n_hat;
    int k_hat;
    Rational alpha_hat;
    ParityRule rule;

    Rational file_size() const { return k_hat * alpha_hat; }
};

enum class Provenance {
    Msr,
    Mbr,
    FunctionalVertex,
    SpaceShare,
    Baseline,
    Construction1,
    Construction2,
};

struct TradeoffPoint {
    Rational alpha;
    Rational gamma;
    Provenance provenance;
    int k_hat = 0;  // meaningful for the per-k_hat constructions

    std::string label() const {
        switch (provenance) {
            case Provenance::Msr: return "MSR";
            case Provenance::Mbr: return "MBR";
            case Provenance::FunctionalVertex: return "FUNCTIONAL-VERTEX";
            case Provenance::SpaceShare: return "SPACE-SHARE";
            case Provenance::Baseline: return "BASELINE";
            case Provenance::Construction1: return "CONSTRUCTION1(" + std::to_string(k_hat) + ")";
            case Provenance::Construction2: return "CONSTRUCTION2(" + std::to_string(k_hat) + ")";
        }
        return "?";
    }
};

/// Maximum file size under functional repair for given per-node storage and
/// total repair bandwidth.
inline Rational functional_capacity(const SystemParams& p, const Rational& alpha,
                                    const Rational& gamma) {
    if (alpha < 0 || gamma < 0)
        throw std::invalid_argument("functional_capacity: alpha, gamma must be nonnegative");
    Rational total = 0;
    for (int i = 0; i < p.k; ++i) {
        const Rational piece = (p.d - i) * gamma / p.d;
        total += std::min(alpha, piece);
    }
    return total;
}

/// Smallest gamma whose functional capacity reaches the file size, solved on
/// the active piecewise-linear segment.
inline Rational min_functional_gamma(const SystemParams& p, const Rational& alpha) {
    const Rational& M = p.file_size;
    if (alpha * p.k < M)
        throw std::domain_error("min_functional_gamma: alpha below M/k, infeasible");
    std::vector<Rational> candidates;
    // j terms saturated at alpha, the rest on the gamma slope.
    for (int j = 0; j < p.k; ++j) {
        long long s = 0;
        for (int i = j; i < p.k; ++i) s += p.d - i;
        const Rational rem = M - j * alpha;
        if (rem <= 0) continue;
        candidates.push_back(p.d * rem / s);
    }
    candidates.push_back(p.d * alpha / (p.d - p.k + 1));  // all terms saturated
    Rational best;
    bool have = false;
    for (const auto& g : candidates) {
        if (g < 0) continue;
        if (functional_capacity(p, alpha, g) >= M && (!have || g < best)) {
            best = g;
            have = true;
        }
    }
    if (!have) throw std::logic_error("min_functional_gamma: no feasible segment");
    return best;
}

inline TradeoffPoint msr_point(const SystemParams& p) {
    return {p.file_size / p.k,
            ratio(Int(p.d) * num(p.file_size), Int(p.k) * (p.d - p.k + 1) * den(p.file_size)),
            Provenance::Msr};
}

inline TradeoffPoint mbr_point(const SystemParams& p) {
    const Rational v = 2 * p.d * p.file_size / (Int(p.k) * (2 * p.d - p.k + 1));
    return {v, v, Provenance::Mbr};
}

/// Ideal universal-MSR repair bandwidth of the small code at degree d_hat.
inline Rational small_code_bandwidth(const SmallCode& c, int d_hat) {
    if (d_hat < c.k_hat || d_hat > c.n_hat - 1)
        throw std::invalid_argument("small_code_bandwidth: d_hat out of range");
    return d_hat * c.alpha_hat / (d_hat - c.k_hat + 1);
}

inline SmallCode match_small_code(const SystemParams& p, int k_hat, ParityRule rule) {
    const int hi = rule == ParityRule::Reconstruction ? p.k : p.d;
    if (k_hat < 1 || k_hat > hi)
        throw std::invalid_argument("match_small_code: k_hat out of range");
    const int parities = rule == ParityRule::Reconstruction ? p.n - p.k : p.n - p.d;
    return {k_hat + parities, k_hat, p.file_size / k_hat, rule};
}

namespace detail {

/// Per-non-empty-node average bandwidth of the permuted-copies code built on
/// `small`, at big-system repair degree d. Weighted mix of the small code's
/// per-degree bandwidths over the hypergeometric helper split.
inline Rational average_nonempty_bandwidth(const SystemParams& p, const SmallCode& small) {
    const int nh = small.n_hat;
    const int d_lo = std::max(small.k_hat, p.d - (p.n - nh));
    const int d_hi = std::min(nh - 1, p.d);
    Rational g = 0;
    for (int dh = d_lo; dh <= d_hi; ++dh)
        g += small_code_bandwidth(small, dh) * hypergeom_weight(p.n - 1, nh - 1, p.d, dh);
    return g;
}

struct RawPoint {
    Rational alpha;
    Rational gamma;
    Rational file_size;  // what the pair gets normalized by
};

}  // namespace detail

inline detail::RawPoint construction1_raw(const SystemParams& p, int k_hat) {
    const SmallCode small = match_small_code(p, k_hat, ParityRule::Reconstruction);
    const Rational alpha = Rational(small.n_hat) / p.n * small.alpha_hat;
    const Rational gamma = Rational(small.n_hat) / p.n * detail::average_nonempty_bandwidth(p, small);
    return {alpha, gamma, small.file_size()};
}

inline TradeoffPoint construction1_point(const SystemParams& p, int k_hat) {
    const auto raw = construction1_raw(p, k_hat);
    return {raw.alpha / raw.file_size, raw.gamma / raw.file_size, Provenance::Construction1, k_hat};
}

/// Average bandwidth gamma_1 for repairing a non-empty node,
/// normalized by file size.
inline Rational construction1_gamma_nonempty(const SystemParams& p, int k_hat) {
    const SmallCode small = match_small_code(p, k_hat, ParityRule::Reconstruction);
    return detail::average_nonempty_bandwidth(p, small) / small.file_size();
}

/// File size supportable by any k nodes of the (n, d, d) view; the sum runs
/// over every overlap with nonzero hypergeometric weight.
inline Rational construction2_file_size(const SystemParams& p, const SmallCode& small) {
    if (small.rule != ParityRule::Repair)
        throw std::invalid_argument("construction2_file_size: small code must use the repair parity rule");
    const int nh = small.n_hat;
    Rational mk = 0;
    for (int w = std::max(0, p.k - (p.n - nh)); w <= std::min(p.k, nh); ++w)
        mk += std::min(w, small.k_hat) * small.alpha_hat * hypergeom_weight(p.n, nh, p.k, w);
    return mk;
}

inline detail::RawPoint construction2_raw(const SystemParams& p, int k_hat) {
    const SmallCode small = match_small_code(p, k_hat, ParityRule::Repair);
    const Rational alpha = Rational(small.n_hat) / p.n * small.alpha_hat;
    const Rational gamma = Rational(small.n_hat) / p.n * detail::average_nonempty_bandwidth(p, small);
    return {alpha, gamma, construction2_file_size(p, small)};
}

inline TradeoffPoint construction2_point(const SystemParams& p, int k_hat) {
    const auto raw = construction2_raw(p, k_hat);
    return {raw.alpha / raw.file_size, raw.gamma / raw.file_size, Provenance::Construction2, k_hat};
}

/// The single-term whole-small-file repair point: what layered codes achieve
/// at d = k, extended to d > k through the same M_k normalization as
/// Construction 2.
inline detail::RawPoint baseline_raw(const SystemParams& p, int k_hat) {
    const SmallCode small = match_small_code(p, k_hat, ParityRule::Repair);
    const Rational alpha = Rational(small.n_hat) / p.n * small.alpha_hat;
    return {alpha, k_hat * alpha, construction2_file_size(p, small)};
}

inline TradeoffPoint baseline_point(const SystemParams& p, int k_hat) {
    const auto raw = baseline_raw(p, k_hat);
    return {raw.alpha / raw.file_size, raw.gamma / raw.file_size, Provenance::Baseline, k_hat};
}

/// Vertices of the functional-repair boundary, from the MBR end to the MSR
/// end of the curve.
inline std::vector<TradeoffPoint> functional_curve_vertices(const SystemParams& p) {
    std::vector<TradeoffPoint> out;
    for (int j = 0; j < p.k; ++j) {
        long long s = 0;
        for (int i = j; i < p.k; ++i) s += p.d - i;
        // Vertex where term j sits exactly at its breakpoint.
        const Rational alpha = (p.d - j) * p.file_size / (s + Int(j) * (p.d - j));
        out.push_back({alpha, p.d * alpha / (p.d - j), Provenance::FunctionalVertex, 0});
    }
    std::reverse(out.begin(), out.end());  // ascending alpha
    return out;
}

/// Pareto-minimal anchors on the lower convex envelope, alpha ascending,
/// slopes strictly increasing.
inline std::vector<TradeoffPoint> hull_vertices(std::vector<TradeoffPoint> anchors) {
    if (anchors.empty()) throw std::invalid_argument("hull_vertices: empty region");
    std::sort(anchors.begin(), anchors.end(), [](const TradeoffPoint& a, const TradeoffPoint& b) {
        return a.alpha != b.alpha ? a.alpha < b.alpha : a.gamma < b.gamma;
    });
    // Pareto filter: keep strictly decreasing gamma (ties on alpha keep the
    // first, i.e. minimal gamma).
    std::vector<TradeoffPoint> pareto;
    for (const auto& pt : anchors) {
        if (!pareto.empty() && pareto.back().alpha == pt.alpha) continue;
        if (!pareto.empty() && pt.gamma >= pareto.back().gamma) continue;
        pareto.push_back(pt);
    }
    if (pareto.empty()) pareto.push_back(anchors.front());
    // Lower convex envelope; collinear interior points dropped.
    std::vector<TradeoffPoint> hull;
    for (const auto& pt : pareto) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            const Rational cross = (b.alpha - a.alpha) * (pt.gamma - a.gamma) -
                                   (b.gamma - a.gamma) * (pt.alpha - a.alpha);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    return hull;
}

/// Anchor set whose up-right quadrant union, convexified, is achievable.
struct Region {
    std::vector<TradeoffPoint> anchors;

    std::vector<TradeoffPoint> hull() const { return hull_vertices(anchors); }
};

inline Region theorem1_region(const SystemParams& p) {
    if (p.d != p.k) throw std::invalid_argument("theorem1_region: requires d = k");
    Region r;
    for (int kh = 1; kh <= p.k; ++kh) r.anchors.push_back(construction1_point(p, kh));
    r.anchors.push_back(msr_point(p));
    r.anchors.push_back(mbr_point(p));
    return r;
}

inline Region theorem2_region(const SystemParams& p) {
    Region r;
    for (int kh = 1; kh <= p.k; ++kh) r.anchors.push_back(construction1_point(p, kh));
    for (int kh = 1; kh <= p.d; ++kh) r.anchors.push_back(construction2_point(p, kh));
    r.anchors.push_back(msr_point(p));
    r.anchors.push_back(mbr_point(p));
    return r;
}

inline Region space_sharing_curve(const SystemParams& p) {
    return Region{{msr_point(p), mbr_point(p)}};
}

}  // namespace regen

#endif
