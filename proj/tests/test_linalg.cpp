#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/linalg.hpp"

using namespace domcert;

namespace {

RatMat M(std::initializer_list<std::initializer_list<int>> rows) {
    RatMat out;
    for (const auto& r : rows) {
        RatVec row;
        for (int v : r) row.emplace_back(v);
        out.push_back(std::move(row));
    }
    return out;
}

RatVec V(std::initializer_list<int> v) {
    RatVec out;
    for (int x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("rank and solve") {
    CHECK(matrix_rank(M({{1, 2}, {2, 4}})) == 1);
    CHECK(matrix_rank(M({{1, 2}, {3, 4}})) == 2);
    CHECK(matrix_rank(M({{0, 0}, {0, 0}})) == 0);

    auto x = solve_linear(M({{2, 1}, {0, 1}}), V({3, 1}));
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);

    CHECK_FALSE(solve_linear(M({{1, 1}, {2, 2}}), V({1, 3})).has_value());

    // underdetermined consistent system
    auto y = solve_linear(M({{1, 1, 1}}), V({5}));
    REQUIRE(y.has_value());
    CHECK((*y)[0] + (*y)[1] + (*y)[2] == 5);

    // overdetermined consistent system
    auto z = solve_linear(M({{1, 0}, {0, 1}, {1, 1}}), V({2, 3, 5}));
    REQUIRE(z.has_value());
    CHECK((*z)[0] == 2);
    CHECK((*z)[1] == 3);
}

TEST_CASE("invert") {
    auto inv = invert(M({{2, 1}, {1, 1}}));
    REQUIRE(inv.has_value());
    CHECK((*inv)[0][0] == 1);
    CHECK((*inv)[0][1] == -1);
    CHECK((*inv)[1][0] == -1);
    CHECK((*inv)[1][1] == 2);
    CHECK_FALSE(invert(M({{1, 2}, {2, 4}})).has_value());

    RatMat a = M({{3, 1, 0}, {1, 4, 1}, {0, 2, 5}});
    auto ai = invert(a);
    REQUIRE(ai.has_value());
    for (int c = 0; c < 3; ++c) {
        RatVec col(3);
        for (int r = 0; r < 3; ++r) col[size_t(r)] = (*ai)[size_t(r)][size_t(c)];
        RatVec e = mat_vec(a, col);
        for (int r = 0; r < 3; ++r) CHECK(e[size_t(r)] == (r == c ? 1 : 0));
    }
}

TEST_CASE("nullspace vector") {
    RatVec n = nullspace_vector(M({{1, 1, 1}, {0, 1, 2}}));
    // orthogonal to both rows and nonzero
    CHECK(n[0] + n[1] + n[2] == 0);
    CHECK(n[1] + 2 * n[2] == 0);
    bool nonzero = false;
    for (const auto& v : n) nonzero = nonzero || v != 0;
    CHECK(nonzero);
    CHECK_THROWS_AS(nullspace_vector(M({{1, 0}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("nonnegative solvability") {
    // (1,1) is in the cone of (2,0) and (1,1)
    CHECK(nonneg_combination_exists(M({{2, 1}, {0, 1}}), V({1, 1})));
    CHECK(nonneg_combination_exists(M({{2, 1}, {0, 1}}), V({3, 1})));
    // (1,2) needs a negative multiple of (2,0)
    CHECK_FALSE(nonneg_combination_exists(M({{2, 1}, {0, 1}}), V({1, 2})));
    // zero target is always reachable
    CHECK(nonneg_combination_exists(M({{2, 1}, {0, 1}}), V({0, 0})));
    // inconsistent system
    CHECK_FALSE(nonneg_combination_exists(M({{1, 1}, {1, 1}}), V({1, 2})));
    // negative right hand side entries are handled
    CHECK(nonneg_combination_exists(M({{-1, 0}, {0, 1}}), V({-2, 3})));
    CHECK_FALSE(nonneg_combination_exists(M({{1, 0}, {0, 1}}), V({-2, 3})));
}

TEST_CASE("column hermite form") {
    IntMat w = {{Int(2), Int(1)}, {Int(0), Int(1)}};
    IntMat h = column_hermite(w);
    CHECK(h[0][1] == 0);
    CHECK(h[0][0] > 0);
    CHECK(h[1][1] > 0);
    CHECK(h[0][0] * h[1][1] == 2);  // lattice index preserved

    IntMat w2 = {{Int(4), Int(2), Int(0)}, {Int(2), Int(4), Int(2)}, {Int(0), Int(2), Int(4)}};
    IntMat h2 = column_hermite(w2);
    Int det = h2[0][0] * h2[1][1] * h2[2][2];
    CHECK(det == 32);  // |det w2| = 32
    CHECK(h2[0][1] == 0);
    CHECK(h2[0][2] == 0);
    CHECK(h2[1][2] == 0);

    IntMat sing = {{Int(1), Int(2)}, {Int(2), Int(4)}};
    CHECK_THROWS_AS(column_hermite(sing), std::invalid_argument);
}
