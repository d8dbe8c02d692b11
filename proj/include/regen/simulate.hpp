#ifndef REGEN_SIMULATE_HPP
#define REGEN_SIMULATE_HPP

#include "regen/codes.hpp"
#include "regen/combinat.hpp"
#include "regen/tradeoff.hpp"

#include <nlohmann/json.hpp>

#include <bit>
#include <cstdint>
#include <ostream>
#include <vector>

namespace regen::simulate {

/// Exhaustive repair measurements over a glued code, all values normalized
/// exactly after the sweep.
struct RepairLedger {
    struct Entry {
        int failed;
        std::vector<int> helpers;
        long long subsymbols;  // summed over all copies
    };

    Rational alpha;                     // per-node storage / total file
    Rational gamma;                     // mean over (failed, helpers) of total bw / total file
    std::vector<Rational> gamma_per_node;
    Rational gamma_nonempty_per_copy;   // mean bw per copy-file when the failed node is non-empty
    std::vector<Entry> entries;
    long long total_file_subsymbols = 0;
    int copies = 0;
    std::uint64_t seed = 0;

    void to_csv(std::ostream& os, int decimal_digits = 12) const {
        os << "failed,helpers,subsymbols,gamma_exact,gamma\n";
        for (const auto& e : entries) {
            const Rational g = ratio(e.subsymbols, total_file_subsymbols);
            os << e.failed << ",\"";
            for (size_t i = 0; i < e.helpers.size(); ++i) os << (i ? " " : "") << e.helpers[i];
            os << "\"," << e.subsymbols << "," << to_fraction_string(g) << ","
               << to_decimal_string(g, decimal_digits) << "\n";
        }
    }

    nlohmann::json to_json(int decimal_digits = 12) const {
        nlohmann::json j;
        j["seed"] = seed;
        j["copies"] = copies;
        j["total_file_subsymbols"] = total_file_subsymbols;
        j["alpha_exact"] = to_fraction_string(alpha);
        j["alpha"] = to_decimal_string(alpha, decimal_digits);
        j["gamma_exact"] = to_fraction_string(gamma);
        j["gamma"] = to_decimal_string(gamma, decimal_digits);
        j["gamma_nonempty_per_copy_exact"] = to_fraction_string(gamma_nonempty_per_copy);
        j["gamma_nonempty_per_copy"] = to_decimal_string(gamma_nonempty_per_copy, decimal_digits);
        j["gamma_per_node_exact"] = nlohmann::json::array();
        for (const auto& g : gamma_per_node) j["gamma_per_node_exact"].push_back(to_fraction_string(g));
        j["entries"] = nlohmann::json::array();
        for (const auto& e : entries)
            j["entries"].push_back({{"failed", e.failed}, {"helpers", e.helpers},
                                    {"subsymbols", e.subsymbols}});
        return j;
    }
};

/// Repair every node from every helper set, verifying exactness on the way.
/// A mismatch surfaces as codes::RepairMismatch naming the offending pair.
inline RepairLedger sweep_repairs(const codes::GluedCode& code) {
    const auto& p = code.params();
    RepairLedger ledger;
    ledger.copies = code.copies();
    ledger.seed = code.seed();
    ledger.total_file_subsymbols = code.total_file_subsymbols();
    ledger.alpha = ratio(code.node_storage_subsymbols(0), ledger.total_file_subsymbols);
    for (int i = 1; i < p.n; ++i)
        if (code.node_storage_subsymbols(i) != code.node_storage_subsymbols(0))
            throw std::logic_error("storage uniformity violated across glued nodes");

    long long grand_total = 0;
    long long nonempty_total = 0;
    long long nonempty_cases = 0;  // (failed, helpers, copy) triples with a non-empty failed node
    std::vector<long long> per_node(p.n, 0);
    long long sets_per_node = 0;
    for (int f = 0; f < p.n; ++f) {
        std::vector<int> others;
        for (int i = 0; i < p.n; ++i)
            if (i != f) others.push_back(i);
        long long sets = 0;
        codes::detail::for_each_subset(p.n - 1, p.d, [&](const std::vector<int>& idx) {
            std::vector<int> helpers;
            for (int i : idx) helpers.push_back(others[i]);
            const auto res = code.repair(f, helpers);
            ledger.entries.push_back({f, helpers, res.total_subsymbols});
            grand_total += res.total_subsymbols;
            per_node[f] += res.total_subsymbols;
            nonempty_total += res.total_subsymbols;
            ++sets;
        });
        for (int c = 0; c < code.copies(); ++c)
            if (code.role_of(c, f) >= 0) nonempty_cases += sets;
        sets_per_node = sets;
    }
    const long long pairs = sets_per_node * p.n;
    ledger.gamma = ratio(grand_total, pairs) / ledger.total_file_subsymbols;
    for (int f = 0; f < p.n; ++f)
        ledger.gamma_per_node.push_back(
            ratio(per_node[f], sets_per_node) / ledger.total_file_subsymbols);
    ledger.gamma_nonempty_per_copy =
        ratio(nonempty_total, nonempty_cases * code.small().file_subsymbols());
    return ledger;
}

/// Exact normalized information content of a node subset: summed generator
/// rank across copies over the total file size. Empty subset is 0.
inline Rational subset_information(const codes::GluedCode& code, const std::vector<int>& positions) {
    if (positions.empty()) return 0;
    long long total_rank = 0;
    for (int c = 0; c < code.copies(); ++c) {
        std::vector<gf::Matrix> gens;
        for (int p : positions) {
            const int r = code.role_of(c, p);
            if (r >= 0) gens.push_back(code.small().generator(r));
        }
        if (!gens.empty()) total_rank += gf::vstack_all(gens).rank();
    }
    return ratio(total_rank, code.total_file_subsymbols());
}

/// Brute-force average information in a k-subset, enumerating every placement
/// of the small code against every k-subset of nodes under the ideal MSR
/// model H_w = min(w, k_hat) * alpha_hat. Independent check of the closed
/// form in construction2_file_size.
inline Rational mk_oracle(const SystemParams& p, int k_hat, int cap = 20) {
    if (k_hat < 1 || k_hat > p.d) throw std::invalid_argument("mk_oracle: k_hat out of range");
    if (p.n > cap)
        throw std::length_error("mk_oracle: n exceeds the double-enumeration cap of " +
                                std::to_string(cap));
    const int nh = k_hat + (p.n - p.d);
    std::vector<std::uint32_t> placements, subsets;
    codes::detail::for_each_subset(p.n, nh, [&](const std::vector<int>& idx) {
        std::uint32_t m = 0;
        for (int i : idx) m |= 1u << i;
        placements.push_back(m);
    });
    codes::detail::for_each_subset(p.n, p.k, [&](const std::vector<int>& idx) {
        std::uint32_t m = 0;
        for (int i : idx) m |= 1u << i;
        subsets.push_back(m);
    });
    unsigned long long sum = 0;
    for (const auto pm : placements)
        for (const auto sm : subsets)
            sum += std::min(std::popcount(pm & sm), k_hat);
    const Int count = Int(placements.size()) * Int(subsets.size());
    // alpha_hat = file_size / k_hat
    return ratio(Int(sum), count * k_hat) * p.file_size;
}

}  // namespace regen::simulate

#endif
