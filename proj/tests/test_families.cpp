#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coh1/families.hpp"
#include "coh1/oracle.hpp"

using namespace coh1;
using namespace coh1::families;
using abgroup::FgAbelian;
using abgroup::GradedGroups;
using abgroup::Kind;
using intlin::Int;
using intlin::abs;
using intlin::gcd;

namespace {

const catalog::Catalog& cat() {
    static const auto c = catalog::Catalog::builtin();
    return c;
}

GradedGroups product_cohomology(std::vector<std::string> atoms) {
    return abgroup::poincare_cohomology(cat().product_profile(atoms));
}

}  // namespace

TEST_CASE("validation catches the stated conditions") {
    CHECK(validate(N7A{{1, 0, 1}, {0, 1, 1}}).empty());
    CHECK_FALSE(validate(N7A{{2, 4, 1}, {0, 1, 1}}).empty());      // non-primitive
    CHECK_FALSE(validate(N7A{{1, 0, 1}, {-1, 0, 2}}).empty());     // coincide, flag unset
    CHECK(validate(N7A{{1, 0, 1}, {-1, 0, 2}, true}).empty());
    CHECK_FALSE(validate(N7A{{1, 0, 1}, {0, 1, 1}, true}).empty());

    CHECK(validate(N7B{1, 3, 4, 1}).empty());
    CHECK_FALSE(validate(N7B{1, 3, 4, 3}).empty());   // n_plus outside {1,2}
    CHECK_FALSE(validate(N7B{2, 3, 6, 1}).empty());   // n_minus not 0 mod 4
    CHECK_FALSE(validate(N7B{3, 2, 8, 2}).empty());   // p != +/- n_minus/4 mod n_minus
    CHECK_FALSE(validate(N7B{1, 2, 4, 1}).empty());   // q even forces n_plus = 2
    CHECK(validate(N7B{1, 2, 4, 2}).empty());

    CHECK(validate(N7C{1, 3, 2}).empty());
    CHECK_FALSE(validate(N7C{1, 3, 3}).empty());      // gcd(q,n) != 1
    CHECK_FALSE(validate(N7C{2, 4, 1}).empty());

    CHECK(validate(N7D{1, 1, 0, 1, 2, 1}).empty());
    CHECK_FALSE(validate(N7D{1, 1, 1, 1, 2, 1}).empty());  // m*nu - n*mu != 1

    CHECK(validate(N7E{1, 1, 0, 1, {1, 1, 1}, {0, 1, 1}}).empty());
    CHECK_FALSE(validate(N7E{1, 2, 1, 1, {1, 1, 1}, {0, 1, 1}}).empty());  // m*nu - n*mu != 1
    CHECK_FALSE(validate(N7E{1, 1, 0, 1, {1, 1, 1}, {-1, -1, 2}}).empty());  // coincide

    CHECK(validate(N7H{1, 2, 1, 3}).empty());
    CHECK_FALSE(validate(N7H{2, 2, 1, 3}).empty());
    CHECK(validate(N7G{}).empty());
    CHECK(validate(N7I{}).empty());
}

TEST_CASE("symmetric-profile families reproduce product cohomology") {
    auto s3s2s2 = product_cohomology({"S3", "S2", "S2"});
    CHECK(homology_n7d(N7D{1, 1, 0, 1, 2, 1}, cat()) == s3s2s2);
    CHECK(homology_n7a(N7A{{1, 2, 1}, {-1, -2, 3}, true}, cat()) == s3s2s2);
    CHECK(homology_n7f(N7F{1, 1, 2}, cat()) == product_cohomology({"S5", "S2"}));
    CHECK(homology_n7g(N7G{}, cat()) == product_cohomology({"CP2", "S3"}));
    CHECK(homology_n7i(N7I{}, cat()) == product_cohomology({"S4", "S3"}));
}

TEST_CASE("N7C: H^4 = Z/q^2") {
    for (long long q : {1, 2, 3, 5}) {
        auto g = homology_n7c(N7C{1, q, 2 - (q % 2 == 0 ? 1 : 0)});
        CHECK(g.kind == Kind::cohomology);
        CHECK(g.at(4) == FgAbelian::cyclic(Int(q) * q));
        CHECK(g.at(5) == FgAbelian::free(1));
        CHECK(g.at(2) == FgAbelian::free(1));
    }
    CHECK_THROWS_WITH_AS(homology_n7c(N7C{1, 0, 1}), doctest::Contains("product action"),
                         std::invalid_argument);
}

TEST_CASE("N7B: alpha and the self-extension of Z/(q/gcd(q,2))") {
    for (long long q = -9; q <= 9; ++q) {
        if (q == 0) continue;
        for (long long np : {1, 2}) {
            if (q % 2 == 0 && np == 1) continue;
            N7B d{(q % 2 != 0) ? 1 : 3, q, 4, np};
            if (!validate(FamilyDiagram{d}).empty()) continue;
            auto g = homology_n7b(d);
            Int alpha = (np == 1 && q % 2 != 0) ? 2 : 1;
            CHECK(g.at(5) == FgAbelian::free(1).direct_sum(FgAbelian::cyclic(alpha)));
            REQUIRE(g.extension_slot.has_value());
            const auto& ext = g.extension_slot->second;
            Int s = abs(Int(q)) / gcd(Int(q), Int(2));
            CHECK(ext.sub == FgAbelian::cyclic(s));
            CHECK(ext.quot == FgAbelian::cyclic(s));
            // sub = quot, so the "beta in {1, gamma}" clause holds trivially
        }
    }
    CHECK_THROWS_WITH_AS(homology_n7b(N7B{1, 0, 4, 2}), doctest::Contains("product action"),
                         std::invalid_argument);
}

TEST_CASE("N7H: H^4 = Z/(a_- a_+ n_- n_+)") {
    for (long long nm = 0; nm <= 4; ++nm)
        for (long long np = 0; np <= 4; ++np) {
            if (nm == 0 && np == 0) {
                CHECK_THROWS_AS(homology_n7h(N7H{1, 0, 1, 0}, cat()), std::invalid_argument);
                continue;
            }
            // distinct circles (1, n-), (1, n+) (or (-1, n+) when the slopes tie)
            N7H d{1, nm, nm == np ? -1 : 1, np};
            if (!validate(FamilyDiagram{d}).empty()) continue;
            auto g = homology_n7h(d, cat());
            if (nm * np == 0) {
                CHECK(g == product_cohomology({"CP2", "S3"}));
                continue;
            }
            torus::CircleWithFinite cm{d.m_minus, d.n_minus, d.b_minus},
                cp{d.m_plus, d.n_plus, d.b_plus};
            Int h = torus::finite_product_order(cm, cp);
            Int am = h / d.b_minus, ap = h / d.b_plus;
            CHECK(g.at(4) == FgAbelian::cyclic(abs(am * ap * nm * np)));
            CHECK(g.at(5) == FgAbelian::free(1));
        }
}

TEST_CASE("N7H with nontrivial finite parts") {
    for (long long bm : {1, 2, 3})
        for (long long bp : {1, 2, 3}) {
            N7H d{1, 2, 1, 3, bm, bp};
            if (!validate(FamilyDiagram{d}).empty()) continue;
            auto g = homology_n7h(d, cat());
            torus::CircleWithFinite cm{1, 2, bm}, cp{1, 3, bp};
            Int h = torus::finite_product_order(cm, cp);
            CHECK(g.at(4) == FgAbelian::cyclic(abs((h / bm) * (h / bp) * Int(6))));
        }
}

TEST_CASE("N7A basic diagram: trivial H^4") {
    // frozen: |H^4| = 1 for (1,0)b1 / (0,1)b1 on both the determinant and
    // lattice-quotient paths
    N7A d{{1, 0, 1}, {0, 1, 1}};
    auto g = homology_n7a(d, cat());
    CHECK(g.at(4).trivial());
    CHECK(g.at(3).trivial());
    CHECK(g.at(2) == FgAbelian::free(2));
    CHECK(g.at(5) == FgAbelian::free(2));
    REQUIRE(g.extension_slot.has_value());
    CHECK(g.extension_slot->second.resolved.has_value());

    auto rho = torus::build_rho(d.minus, d.plus, 1);
    CHECK(n7a_h4_order(rho, d.minus, d.plus) == 1);
    CHECK(oracle::n7a_h4_oracle(rho, d.minus, d.plus) == 1);
}

TEST_CASE("N7A infinite ray: (p-,q-) = +/-(p+,-q+)") {
    N7A d{{1, 1, 1}, {1, -1, 1}};
    auto g = homology_n7a(d, cat());
    REQUIRE(g.extension_slot.has_value());
    const auto& ext = g.extension_slot->second;
    CHECK(ext.sub == FgAbelian::free(1));           // beta = 0: infinite sub
    CHECK(ext.quot == FgAbelian::cyclic(2));        // gamma = 2
    CHECK_FALSE(ext.resolved.has_value());          // open
    CHECK(g.at(4).rank == 1);
}

TEST_CASE("N7A delta matches gcd(h/b-, h/b+)") {
    std::vector<N7A> diagrams = {
        {{1, 2, 2}, {1, 3, 2}}, {{2, 1, 3}, {1, -2, 2}}, {{1, 1, 4}, {2, -1, 2}},
    };
    for (const auto& d : diagrams) {
        Int h = torus::finite_product_order(d.minus, d.plus);
        auto rho = torus::build_rho(d.minus, d.plus, h);
        auto v = n7a_vectors(rho, d.minus, d.plus);
        CHECK(v.delta == gcd(h / d.minus.b, h / d.plus.b));
        // the completion extends the kernel basis to Z^4
        auto cols = v.kernel_w;
        cols.push_back(v.completion);
        CHECK(abs(intlin::det(intlin::IntMatrix::from_columns(cols))) == 1);
    }
}

TEST_CASE("N7E fixture: beta = 2, gamma = 1") {
    // frozen from the lattice oracle: minus=(1,1) b1, plus=(0,1) b1, m=n=1,
    // mu=0, nu=1 has h=1, a=1, so gamma=1 and |H^4| = beta = 2
    N7E d{1, 1, 0, 1, {1, 1, 1}, {0, 1, 1}};
    auto g = homology_n7e(d, cat());
    REQUIRE(g.extension_slot.has_value());
    const auto& ext = g.extension_slot->second;
    CHECK(ext.quot == FgAbelian::zero());
    CHECK(ext.sub == FgAbelian::cyclic(2));
    CHECK(g.at(4) == FgAbelian::cyclic(2));

    auto rho = torus::build_rho(d.minus, d.plus, 1);
    CHECK(oracle::n7e_h4_oracle(rho, d.m, d.n, d.minus, d.plus) == 2);
}

TEST_CASE("N7E degenerate slopes give infinite beta") {
    // q_- q_+ m n = 0 makes the H^4 subgroup infinite
    N7E d{1, 1, 0, 1, {1, 0, 1}, {1, 1, 1}};
    REQUIRE(validate(FamilyDiagram{d}).empty());
    auto g = homology_n7e(d, cat());
    REQUIRE(g.extension_slot.has_value());
    CHECK(g.extension_slot->second.sub == FgAbelian::free(1));
}

TEST_CASE("compute dispatches by family") {
    CHECK(compute(FamilyDiagram{N7G{}}, cat()) == homology_n7g(N7G{}, cat()));
    CHECK(compute(FamilyDiagram{N7C{1, 3, 2}}, cat()) == homology_n7c(N7C{1, 3, 2}));
    CHECK_THROWS_AS(compute(FamilyDiagram{N7C{2, 4, 1}}, cat()), std::invalid_argument);
}

TEST_CASE("every computed profile passes the structural checks") {
    std::vector<FamilyDiagram> diagrams = {
        N7A{{1, 0, 1}, {0, 1, 1}},    N7A{{1, 2, 2}, {1, 3, 2}},
        N7B{1, 3, 4, 1},              N7B{3, 2, 4, 2},
        N7C{1, 5, 2},                 N7D{1, 1, 0, 1, 2, 1},
        N7E{1, 1, 0, 1, {1, 1, 1}, {0, 1, 1}},
        N7F{1, 1, 3},                 N7G{},
        N7H{1, 2, 1, 3},              N7I{},
    };
    for (const auto& d : diagrams) {
        CAPTURE(family_name(d));
        auto g = compute(d, cat());
        CHECK(g.dim == 7);
        CHECK(g.profile_violations().empty());
        auto hom = abgroup::poincare_homology(g);
        CHECK(hom.profile_violations().empty());
        CHECK(hom.at(0) == FgAbelian::free(1));
    }
}
