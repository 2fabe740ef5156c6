#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coh1/oracle.hpp"

using namespace coh1;
using namespace coh1::oracle;
using intlin::Int;
using intlin::Vec;
using torus::CircleWithFinite;

TEST_CASE("mv_quotient_order basics") {
    // ker of [1 0 0 -1] is rank 3; generators spanning an index-2 sublattice
    Vec row{1, 0, 0, -1};
    std::vector<Vec> gens = {{0, 2, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}};
    CHECK(mv_quotient_order(row, gens) == 2);
    std::vector<Vec> full = {{0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}};
    CHECK(mv_quotient_order(row, full) == 1);
    // rank-deficient generators leave an infinite quotient
    CHECK(mv_quotient_order(row, {{0, 1, 0, 0}, {0, 0, 1, 0}}) == 0);
    CHECK_THROWS_WITH_AS(mv_quotient_order(row, {{1, 0, 0, 0}}), doctest::Contains("not a cycle"),
                         std::invalid_argument);
}

TEST_CASE("im_i4_order") {
    CHECK(im_i4_order(1, 1, 1) == 1);
    CHECK(im_i4_order(2, 3, 1) == 6);   // lcm
    CHECK(im_i4_order(4, 6, 2) == 12);  // enumerate 24 pairs, kernel of the difference map
    CHECK(im_i4_order(4, 4, 4) == 4);
    CHECK(im_i4_order(6, 4, 1) == 24);
    CHECK_THROWS_WITH_AS(im_i4_order(4, 6, 4), doctest::Contains("delta mismatch"),
                         std::invalid_argument);
    CHECK_THROWS_AS(im_i4_order(0, 2, 1), std::invalid_argument);
    // closed form branch beyond the enumeration cutoff
    CHECK(im_i4_order(1200, 1800, 600) == Int(1200) * 1800 / 600);
}

TEST_CASE("n7a oracle equals the determinant formula on a small box") {
    for (long long pm = 1; pm <= 2; ++pm)
        for (long long qm = -2; qm <= 2; ++qm)
            for (long long qp = -2; qp <= 2; ++qp) {
                CircleWithFinite minus{pm, qm, 2}, plus{1, qp, 3};
                if (intlin::gcd(Int(pm), Int(qm)) != 1 || intlin::gcd(Int(1), Int(qp)) != 1)
                    continue;
                if (torus::same_circle(minus, plus)) continue;
                if (pm == 1 && qm == -qp) continue;  // infinite ray
                if (!torus::finite_parts_consistent(minus, plus)) continue;
                Int h = torus::finite_product_order(minus, plus);
                auto rho = torus::build_rho(minus, plus, h);
                CHECK(families::n7a_h4_order(rho, minus, plus) ==
                      n7a_h4_oracle(rho, minus, plus));
            }
}

TEST_CASE("subgroup enumeration report") {
    CheckReport report;
    subgroup_enum_check(report, {1, 1, 4}, {1, -1, 4});  // the order-8 product example
    subgroup_enum_check(report, {1, 2, 2}, {1, 3, 2});
    subgroup_enum_check(report, {2, 1, 1}, {-2, 1, 3});
    CHECK(report.mismatches == 0);
    bool saw_product = false;
    for (const auto& r : report.records)
        if (r.quantity == "finite_product_order" && r.lattice_value == 8) saw_product = true;
    CHECK(saw_product);
    auto text = report.render();
    CHECK(text.find("MISMATCH") == std::string::npos);
    CHECK(text.find("mismatches: 0") != std::string::npos);
}

TEST_CASE("coinciding circles: both paths report the error") {
    CheckReport report;
    subgroup_enum_check(report, {1, 2, 2}, {-1, -2, 3});
    REQUIRE(report.records.size() == 1);
    CHECK(report.records[0].quantity == "coincide-error");
    CHECK(report.records[0].ok);
    CHECK(report.mismatches == 0);
}

TEST_CASE("enumeration sweep over a slope box is clean") {
    CheckReport report;
    for (long long pm = 0; pm <= 3; ++pm)
        for (long long qm = -3; qm <= 3; ++qm) {
            if (intlin::gcd(Int(pm), Int(qm)) != 1) continue;
            if (pm == 0 && qm != 1) continue;
            for (long long b1 : {1, 4})
                for (long long b2 : {2, 3})
                    subgroup_enum_check(report, {pm, qm, b1}, {1, 1, b2});
        }
    CHECK(report.mismatches == 0);
    CHECK(report.records.size() > 20);
}
