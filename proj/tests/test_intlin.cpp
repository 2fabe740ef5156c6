#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coh1/intlin.hpp"

#include <random>

using namespace coh1::intlin;

namespace {

std::mt19937 rng(20260824);

Int rnd(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

IntMatrix random_matrix(int max_dim, int max_abs) {
    int r = std::uniform_int_distribution<int>(1, max_dim)(rng);
    int c = std::uniform_int_distribution<int>(1, max_dim)(rng);
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = rnd(-max_abs, max_abs);
    return m;
}

bool is_unimodular(const IntMatrix& m) { return abs(det(m)) == 1; }

}  // namespace

TEST_CASE("ext_gcd certificates on fixed pairs") {
    auto c = ext_gcd(12, 18);
    CHECK(c.g == 6);
    CHECK(c.valid());
    CHECK(ext_gcd(0, 0).g == 0);
    CHECK(ext_gcd(0, 0).valid());
    CHECK(ext_gcd(-4, 6).g == 2);
    CHECK(ext_gcd(-4, 6).valid());
    CHECK(ext_gcd(7, 0).g == 7);
    CHECK(ext_gcd(0, -5).g == 5);
}

TEST_CASE("ext_gcd canonical choice is minimal in psi") {
    auto c = ext_gcd(5, 3);
    // any other certificate differs by a shift; |psi| must be minimal
    for (Int t = -5; t <= 5; ++t) {
        auto s = bezout_shift(c, t);
        CHECK(s.valid());
        if (t != 0) CHECK(abs(s.psi) >= abs(c.psi));
    }
}

TEST_CASE("ext_gcd certificates valid on 1000 random pairs") {
    for (int i = 0; i < 1000; ++i) {
        Int x = rnd(-1000, 1000), y = rnd(-1000, 1000);
        auto c = ext_gcd(x, y);
        CHECK(c.valid());
        CHECK(c.x == x);
        CHECK(c.y == y);
        auto s = bezout_shift(c, rnd(-10, 10));
        CHECK(s.valid());
    }
}

TEST_CASE("smith normal form on fixed matrices") {
    IntMatrix m(2, 2, {2, 4, 6, 8});
    auto s = smith_normal_form(m);
    CHECK(s.diag == std::vector<Int>{2, 4});

    IntMatrix id3 = IntMatrix::identity(3);
    CHECK(smith_normal_form(id3).diag == std::vector<Int>{1, 1, 1});

    IntMatrix z(2, 3);
    CHECK(smith_normal_form(z).diag == std::vector<Int>{0, 0});
    CHECK(smith_normal_form(z).rank() == 0);
}

TEST_CASE("SNF invariants on 1000 random matrices") {
    for (int trial = 0; trial < 1000; ++trial) {
        IntMatrix m = random_matrix(6, 20);
        auto s = smith_normal_form(m);
        REQUIRE(is_unimodular(s.left));
        REQUIRE(is_unimodular(s.right));
        IntMatrix prod = s.left.mul(m).mul(s.right);
        int n = int(s.diag.size());
        for (int i = 0; i < prod.rows; ++i)
            for (int j = 0; j < prod.cols; ++j) {
                Int expect = (i == j && i < n) ? s.diag[i] : 0;
                REQUIRE(prod(i, j) == expect);
            }
        for (int i = 0; i + 1 < n; ++i) {
            REQUIRE(s.diag[i] >= 0);
            if (s.diag[i] != 0) {
                if (s.diag[i + 1] != 0) REQUIRE(s.diag[i + 1] % s.diag[i] == 0);
            } else {
                REQUIRE(s.diag[i + 1] == 0);  // zeros trail
            }
        }
    }
}

TEST_CASE("determinant matches diagonal product and handles sign") {
    IntMatrix m(3, 3, {2, 0, 1, 1, 3, -1, 0, 4, 2});
    CHECK(det(m) == 2 * (3 * 2 + 4) - 0 + 1 * 4);
    IntMatrix sw(2, 2, {0, 1, 1, 0});
    CHECK(det(sw) == -1);
    for (int trial = 0; trial < 200; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 5)(rng);
        IntMatrix m2(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m2(i, j) = rnd(-10, 10);
        auto s = smith_normal_form(m2);
        Int dprod = 1;
        for (const Int& d : s.diag) dprod *= d;
        CHECK(abs(det(m2)) == dprod);
    }
}

TEST_CASE("kernel basis spans the kernel and is primitive") {
    IntMatrix m(1, 4, {1, 0, 0, -1});
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 3);
    for (const auto& v : k) {
        Int dot = 0;
        for (int j = 0; j < 4; ++j) dot += m(0, j) * v[j];
        CHECK(dot == 0);
    }
    // kernel vectors extend to a basis of Z^4
    auto full = complete_to_unimodular(k);
    CHECK(full.size() == 4);
    CHECK(is_unimodular(IntMatrix::from_columns(full)));
}

TEST_CASE("kernel of random maps has complementary rank") {
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix m = random_matrix(5, 8);
        auto s = smith_normal_form(m);
        auto k = kernel_basis(m);
        CHECK(int(k.size()) == m.cols - s.rank());
        for (const auto& v : k) {
            auto mv = m.apply(v);
            for (const auto& x : mv) CHECK(x == 0);
        }
    }
}

TEST_CASE("quotient_order equals |det| on full-rank square systems") {
    for (int trial = 0; trial < 300; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 5)(rng);
        IntMatrix g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = rnd(-10, 10);
        std::vector<Vec> ambient, gens;
        for (int j = 0; j < n; ++j) gens.push_back(g.column(j));
        for (int j = 0; j < n; ++j) ambient.push_back(IntMatrix::identity(n).column(j));
        Int d = abs(det(g));
        Int q = quotient_order(ambient, gens);
        CHECK(q == d);
    }
}

TEST_CASE("quotient_order in a proper sublattice basis") {
    // ambient = 2Z x 3Z, gens = columns of diag(4, 3): index 2
    std::vector<Vec> ambient = {{2, 0}, {0, 3}};
    std::vector<Vec> gens = {{4, 0}, {0, 3}};
    CHECK(quotient_order(ambient, gens) == 2);
    CHECK(quotient_order(ambient, {{4, 0}}) == 0);  // rank deficit -> infinite
    CHECK_THROWS_WITH_AS(quotient_order(ambient, {{1, 0}}), doctest::Contains("not a sublattice"),
                         std::invalid_argument);
}

TEST_CASE("complete_to_unimodular rejects non-primitive input") {
    CHECK_THROWS_AS((void)complete_to_unimodular({{2, 0}}), std::invalid_argument);
    auto full = complete_to_unimodular({{2, 1}});
    CHECK(full.size() == 2);
    CHECK(full[0] == Vec{2, 1});
    CHECK(is_unimodular(IntMatrix::from_columns(full)));
}
