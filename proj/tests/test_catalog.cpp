#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coh1/catalog.hpp"

using namespace coh1::catalog;
using coh1::abgroup::FgAbelian;

TEST_CASE("builtin atoms") {
    auto c = Catalog::builtin();
    for (int n = 2; n <= 7; ++n) CHECK(c.has("S" + std::to_string(n)));
    CHECK(c.has("CP2"));
    CHECK_FALSE(c.has("S8"));
    CHECK_THROWS_WITH_AS(c.atom("S8"), doctest::Contains("unknown atom"), std::invalid_argument);
    const auto& cp2 = c.atom("CP2");
    CHECK(cp2.groups.at(2) == FgAbelian::free(1));
    CHECK(cp2.groups.at(1).trivial());
    CHECK(cp2.groups.profile_violations().empty());
}

TEST_CASE("product profiles via Kunneth") {
    auto c = Catalog::builtin();
    auto s2s5 = c.product_profile({"S2", "S5"});
    CHECK(s2s5.dim == 7);
    CHECK(s2s5.at(2) == FgAbelian::free(1));
    CHECK(s2s5.at(5) == FgAbelian::free(1));
    CHECK(s2s5.at(7) == FgAbelian::free(1));
    CHECK(s2s5.at(1).trivial());
    CHECK(s2s5.at(3).trivial());

    auto s3s2s2 = c.low_dim("S3 x S2 x S2");
    CHECK(s3s2s2.dim == 7);
    CHECK(s3s2s2.at(2) == FgAbelian::free(2));
    CHECK(s3s2s2.at(3) == FgAbelian::free(1));
    CHECK(s3s2s2.at(4) == FgAbelian::free(1));
    CHECK(s3s2s2.at(5) == FgAbelian::free(2));

    CHECK_THROWS_AS(c.product_profile({"S5", "S5"}), std::invalid_argument);
    CHECK_THROWS_AS(c.product_profile({}), std::invalid_argument);
}

TEST_CASE("N6D profile is CP2 x S2") {
    auto g = Catalog::builtin().low_dim("N6D-profile");
    CHECK(g.dim == 6);
    CHECK(g.at(2) == FgAbelian::free(2));
    CHECK(g.at(4) == FgAbelian::free(2));
    CHECK(g.at(3).trivial());
}

TEST_CASE("atoms require citations and valid profiles") {
    auto c = Catalog::builtin();
    SpaceAtom nameless{"X5", sphere(5), ""};
    CHECK_THROWS_WITH_AS(c.add(nameless), doctest::Contains("citation"), std::invalid_argument);
    SpaceAtom broken{"X5", sphere(5), "somewhere"};
    broken.groups.groups[1] = FgAbelian::free(1);
    CHECK_THROWS_AS(c.add(broken), std::invalid_argument);
}

TEST_CASE("atom file round trip") {
    std::string text =
        "atom SU3/SO3\n"
        "dim 5\n"
        "groups Z; 0; Z/2; 0; 0; Z\n"
        "citation D. Barden, Simply connected five-manifolds, Ann. of Math. 82 (1965)\n";
    auto c = parse_atom_file(text);
    REQUIRE(c.has("SU3/SO3"));
    const auto& wu = c.atom("SU3/SO3");
    CHECK(wu.groups.dim == 5);
    CHECK(wu.groups.at(2) == FgAbelian::cyclic(2));
    CHECK(render_atom_file(c) == text);
    // and once more through the parser
    CHECK(render_atom_file(parse_atom_file(render_atom_file(c))) == text);

    CHECK_THROWS_WITH_AS(parse_atom_file("atom X\ndim 2\nwhatever 3\n"),
                         doctest::Contains("unknown key"), std::invalid_argument);
    // missing citation
    CHECK_THROWS_AS(parse_atom_file("atom X\ndim 2\ngroups Z; 0; Z\n"), std::invalid_argument);
}

TEST_CASE("shipped atom data file loads") {
    auto c = Catalog::load(std::string(DATA_DIR) + "/atoms.txt");
    CHECK(c.has("SU3/SO3"));
    CHECK(c.has("S5"));
    auto g = c.atom("SU3/SO3").groups;
    CHECK(g.profile_violations().empty());
}

TEST_CASE("dim7 profile from H2 and H3") {
    auto g = dim7_from_h2_h3(FgAbelian::make(1, {2}), FgAbelian::cyclic(3));
    CHECK(g.at(2) == FgAbelian::make(1, {2}));
    CHECK(g.at(3) == FgAbelian::cyclic(3));
    CHECK(g.at(4) == FgAbelian::cyclic(2));   // torsion of H_2, rank of H_3
    CHECK(g.at(5) == FgAbelian::free(1));     // rank of H_2
    CHECK(g.profile_violations().empty());
}

TEST_CASE("brieskorn profiles") {
    auto d7 = brieskorn(7);
    CHECK(d7.at(2).trivial());
    CHECK(d7.at(3) == FgAbelian::cyclic(7));
    CHECK(d7.at(4).trivial());
    // d=1 is the sphere profile
    CHECK(brieskorn(1) == sphere(7));
    CHECK_THROWS_AS(brieskorn(0), std::invalid_argument);
}

TEST_CASE("P-family templates") {
    auto a = p_family(PType::A, 0);
    CHECK(a.at(2) == FgAbelian::free(1));
    CHECK(a.at(3) == FgAbelian::free(1));

    auto az2 = p_family(PType::A, 3, PVariant::Z2);
    CHECK(az2.at(2) == FgAbelian::make(1, {2}));
    CHECK(az2.at(3) == FgAbelian::cyclic(3));

    auto c1 = p_family(PType::C, 1);
    CHECK(c1.at(2).trivial());
    CHECK(c1.at(3).trivial());

    CHECK_THROWS_AS(p_family(PType::B, 2, PVariant::Z2), std::invalid_argument);
    CHECK_THROWS_AS(p_family(PType::A, 0, PVariant::Z2), std::invalid_argument);
    CHECK_THROWS_AS(p_family(PType::A, -1), std::invalid_argument);
}
