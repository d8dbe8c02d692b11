#include "regen/simulate.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace regen;

TEST_CASE("(5,3,3) sweep reproduces the analytic averages") {
    const SystemParams p{5, 3, 3};
    const auto code = codes::build_glued(p, 2, 5, 7);
    const auto ledger = simulate::sweep_repairs(code);
    CHECK(ledger.alpha == Rational(2, 5));
    CHECK(ledger.gamma == Rational(3, 4));
    CHECK(ledger.gamma_nonempty_per_copy == Rational(15, 16));
    // glued symmetry: every node has the same average
    for (const auto& g : ledger.gamma_per_node) CHECK(g == Rational(3, 4));
    CHECK(ledger.entries.size() == 5 * 4);
}

TEST_CASE("sweep on a tampered code aborts with the offending pair") {
    const SystemParams p{5, 3, 3};
    auto code = codes::build_glued(p, 2, 5, 7);
    code.tamper(2);
    CHECK_THROWS_AS(simulate::sweep_repairs(code), codes::RepairMismatch);
}

TEST_CASE("degenerate build matches small-code MSR values directly") {
    const SystemParams p{4, 2, 2};
    const auto ledger = simulate::sweep_repairs(codes::build_glued(p, 2, 5, 3));
    // n = n_hat: alpha = alpha_hat = 1/2; repair always downloads the file
    CHECK(ledger.alpha == Rational(1, 2));
    CHECK(ledger.gamma == 1);
    const auto analytic = construction1_point(p, 2);
    CHECK(ledger.alpha == analytic.alpha);
    CHECK(ledger.gamma == analytic.gamma);
}

TEST_CASE("measured averages equal construction 1 for every concrete build") {
    struct Case { int n, k, d, k_hat; std::uint32_t q; };
    for (const auto& c : {Case{5, 3, 3, 2, 5}, Case{4, 2, 2, 2, 5}, Case{5, 3, 3, 1, 5},
                          Case{6, 4, 4, 2, 5}, Case{5, 3, 4, 2, 7}}) {
        const SystemParams p{c.n, c.k, c.d};
        const auto ledger = simulate::sweep_repairs(codes::build_glued(p, c.k_hat, c.q, 11));
        const auto analytic = construction1_point(p, c.k_hat);
        CHECK(ledger.alpha == analytic.alpha);
        CHECK(ledger.gamma == analytic.gamma);
        CHECK(ledger.gamma_nonempty_per_copy == construction1_gamma_nonempty(p, c.k_hat));
    }
}

TEST_CASE("subset information") {
    const SystemParams p{5, 3, 3};
    const auto code = codes::build_glued(p, 2, 5, 7);
    // any k-subset holds the full file
    codes::detail::for_each_subset(5, 3, [&](const std::vector<int>& idx) {
        CHECK(simulate::subset_information(code, idx) == 1);
    });
    // a single node holds (n_hat/n) * alpha_hat = 2/5
    for (int node = 0; node < 5; ++node)
        CHECK(simulate::subset_information(code, {node}) == Rational(2, 5));
    CHECK(simulate::subset_information(code, {}) == 0);
}

TEST_CASE("information model matches min(w, k_hat) on the degenerate build") {
    const SystemParams p{4, 2, 2};
    const auto code = codes::build_glued(p, 2, 5, 3);
    for (int w = 1; w <= 4; ++w) {
        std::vector<int> subset;
        for (int i = 0; i < w; ++i) subset.push_back(i);
        CHECK(simulate::subset_information(code, subset) == Rational(std::min(w, 2), 2));
    }
}

TEST_CASE("mk oracle examples") {
    CHECK(simulate::mk_oracle(SystemParams(6, 3, 4), 2) == Rational(9, 10));
    // d = k: every k-subset meets at least k_hat small nodes
    CHECK(simulate::mk_oracle(SystemParams(6, 3, 3), 2) == 1);
    CHECK_THROWS_AS(simulate::mk_oracle(SystemParams(61, 55, 59), 2), std::length_error);
    CHECK_THROWS_AS(simulate::mk_oracle(SystemParams(6, 3, 4), 5), std::invalid_argument);
}

TEST_CASE("oracle agrees with the closed form") {
    for (int n = 4; n <= 9; ++n)
        for (int k = 1; k <= n - 1; ++k)
            for (int d = k; d <= n - 1; ++d) {
                const SystemParams p{n, k, d};
                for (int kh = 1; kh <= d; ++kh) {
                    const auto small = match_small_code(p, kh, ParityRule::Repair);
                    CHECK(simulate::mk_oracle(p, kh) == construction2_file_size(p, small));
                }
            }
}

TEST_CASE("ledger export round-trips key values") {
    const SystemParams p{4, 2, 2};
    const auto ledger = simulate::sweep_repairs(codes::build_glued(p, 2, 5, 3));
    const auto j = ledger.to_json();
    CHECK(j["alpha_exact"] == "1/2");
    CHECK(j["gamma_exact"] == "1");
    CHECK(j["entries"].size() == ledger.entries.size());
    std::ostringstream csv;
    ledger.to_csv(csv);
    CHECK(csv.str().rfind("failed,helpers,subsymbols", 0) == 0);
    CHECK(csv.str().find("\n") != std::string::npos);
}
