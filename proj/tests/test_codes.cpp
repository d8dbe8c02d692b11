#include "regen/codes.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace regen;
using codes::GluedCode;
using codes::MsrSmallCode;

TEST_CASE("(4,2) small code: bandwidths and reconstruction") {
    const auto code = MsrSmallCode::build(4, 2, 5);
    CHECK(code.alpha_subsymbols() == 2);
    CHECK(code.file_subsymbols() == 4);

    // degree-3 repair moves 3 subsymbols, degree-2 the whole file
    const auto& top = code.scheme(1, {0, 2, 3});
    CHECK(top.bandwidth_subsymbols() == 3);
    const auto& whole = code.scheme(1, {0, 2});
    CHECK(whole.bandwidth_subsymbols() == 4);

    // every node pair stacks to full rank
    codes::detail::for_each_subset(4, 2, [&](const std::vector<int>& idx) {
        CHECK(code.generator(idx[0]).vstack(code.generator(idx[1])).rank() == 4);
    });

    CHECK_THROWS_AS(code.scheme(0, {1}), std::invalid_argument);
}

TEST_CASE("(3,1) replication small code") {
    const auto code = MsrSmallCode::build(3, 1, 5);
    CHECK(code.file_subsymbols() == 2);
    CHECK(code.scheme(0, {1, 2}).bandwidth_subsymbols() == 2);
    CHECK(code.scheme(0, {1}).bandwidth_subsymbols() == 2);
}

TEST_CASE("(5,3) product-matrix small code") {
    const auto code = MsrSmallCode::build(5, 3, 11);
    CHECK(code.file_subsymbols() == 6);
    CHECK(code.scheme(2, {0, 1, 3, 4}).bandwidth_subsymbols() == 4);
    CHECK(code.scheme(2, {0, 1, 4}).bandwidth_subsymbols() == 6);
    // too-small field: fewer than 5 distinct squares
    CHECK_THROWS_AS(MsrSmallCode::build(5, 3, 5), codes::ValidationError);
}

TEST_CASE("unsupported small-code parameters") {
    CHECK_THROWS_AS(MsrSmallCode::build(5, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(MsrSmallCode::build(6, 4, 11), codes::ValidationError);
    CHECK_THROWS_AS(MsrSmallCode::build(4, 2, 4), std::invalid_argument);
}

TEST_CASE("extend with empty nodes") {
    auto small = MsrSmallCode::build(4, 2, 5);
    const auto het = codes::extend_with_empty_nodes(small, 5, {0, 1, 2, 3});
    CHECK(het.n == 5);
    CHECK(het.placement.size() == 4);
    CHECK_THROWS_AS(codes::extend_with_empty_nodes(small, 5, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(codes::extend_with_empty_nodes(small, 5, {0, 1, 2, 7}), std::invalid_argument);
    // identity extension
    const auto same = codes::extend_with_empty_nodes(small, 4, {0, 1, 2, 3});
    CHECK(same.n == 4);
}

TEST_CASE("glued (5,3,3) code: shape and storage") {
    const SystemParams p{5, 3, 3};
    const auto code = codes::build_glued(p, 2, 5, 7);
    CHECK(code.copies() == 120);
    CHECK(code.total_file_subsymbols() == 480);
    // every node is non-empty in 4/5 of the copies
    for (int node = 0; node < 5; ++node)
        CHECK(code.node_storage_subsymbols(node) == 96 * 2);
}

TEST_CASE("glued code reconstruction from every k-subset") {
    const SystemParams p{5, 3, 3};
    const auto code = codes::build_glued(p, 2, 5, 7);
    codes::detail::for_each_subset(5, 3, [&](const std::vector<int>& idx) {
        const auto files = code.reconstruct(idx);
        REQUIRE(static_cast<int>(files.size()) == code.copies());
        for (int c = 0; c < code.copies(); ++c) CHECK(files[c] == code.file(c));
    });
    CHECK_THROWS_AS(code.reconstruct({0, 1}), std::invalid_argument);
}

TEST_CASE("per-copy repair bandwidth cases") {
    const SystemParams p{5, 3, 3};
    const auto code = codes::build_glued(p, 2, 5, 7);
    const auto res = code.repair(0, {1, 2, 3});
    for (int c = 0; c < code.copies(); ++c) {
        const int bw = static_cast<int>(res.per_copy_subsymbols[c]);
        if (code.role_of(c, 0) < 0) {
            CHECK(bw == 0);  // empty failure downloads nothing
            continue;
        }
        int small_helpers = 0;
        for (int h : {1, 2, 3})
            if (code.role_of(c, h) >= 0) ++small_helpers;
        CHECK(bw == (small_helpers == 3 ? 3 : 4));
    }
}

TEST_CASE("repair argument validation") {
    const SystemParams p{5, 3, 3};
    const auto code = codes::build_glued(p, 2, 5, 7);
    CHECK_THROWS_AS(code.repair(0, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(code.repair(0, {1, 2}), std::invalid_argument);
}

TEST_CASE("tampered storage is caught") {
    const SystemParams p{5, 3, 3};
    auto code = codes::build_glued(p, 2, 5, 7);
    code.tamper(0);
    bool caught = false;
    for (int f = 0; f < 5 && !caught; ++f) {
        std::vector<int> helpers;
        for (int i = 0; i < 5; ++i)
            if (i != f) helpers.push_back(i);
        helpers.resize(3);
        try {
            code.repair(f, helpers);
        } catch (const codes::RepairMismatch& e) {
            caught = true;
            CHECK(e.helper_set.size() == 3);
        }
    }
    CHECK(caught);
}

TEST_CASE("n! cap and override") {
    const SystemParams p{8, 6, 6};
    CHECK_THROWS_AS(codes::build_glued(p, 2, 5, 7), std::length_error);
}

TEST_CASE("degenerate glue with no empty nodes") {
    const SystemParams p{4, 2, 2};
    const auto code = codes::build_glued(p, 2, 5, 3);
    CHECK(code.copies() == 24);
    for (int node = 0; node < 4; ++node)
        CHECK(code.node_storage_subsymbols(node) == 24 * 2);
    codes::detail::for_each_subset(4, 2, [&](const std::vector<int>& idx) {
        const auto files = code.reconstruct(idx);
        for (int c = 0; c < code.copies(); ++c) CHECK(files[c] == code.file(c));
    });
}

TEST_CASE("serialization is deterministic and seed-sensitive") {
    const SystemParams p{5, 3, 3};
    std::ostringstream a, b, c;
    codes::build_glued(p, 2, 5, 7).serialize(a);
    codes::build_glued(p, 2, 5, 7).serialize(b);
    codes::build_glued(p, 2, 5, 8).serialize(c);
    CHECK(a.str() == b.str());
    CHECK(a.str() != c.str());
    CHECK(a.str().rfind("regentk glued-code v1\nfield 5\nparams n=5 k=3 d=3\n", 0) == 0);
}
