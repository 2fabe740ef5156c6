#include "coh1/oracle.hpp"

#include <sstream>
#include <stdexcept>

namespace coh1::oracle {

using intlin::abs;
using intlin::gcd;
using intlin::IntMatrix;
using intlin::lcm;
using torus::hat_coeffs;

Int mv_quotient_order(const Vec& row, const std::vector<Vec>& gens) {
    IntMatrix m(1, int(row.size()));
    for (int j = 0; j < m.cols; ++j) m(0, j) = row[j];
    for (const Vec& g : gens) {
        Int dot = 0;
        for (size_t i = 0; i < row.size(); ++i) dot += row[i] * g[i];
        if (dot != 0) throw std::invalid_argument("not a cycle");
    }
    auto kernel = intlin::kernel_basis(m);
    if (kernel.empty()) return gens.empty() ? Int(1) : Int(0);
    return intlin::quotient_order(kernel, gens);
}

Int im_i4_order(const Int& m1, const Int& m2, const Int& delta) {
    if (m1 < 1 || m2 < 1 || delta < 1 || m1 % delta != 0 || m2 % delta != 0)
        throw std::invalid_argument("delta mismatch");
    Int order;
    if (m1 <= 1000 && m2 <= 1000) {
        long long a = m1.convert_to<long long>(), b = m2.convert_to<long long>(),
                  d = delta.convert_to<long long>();
        long long count = 0;
        for (long long i = 0; i < a; ++i)
            for (long long j = 0; j < b; ++j)
                if ((i - j) % d == 0) ++count;
        order = count;
    } else {
        order = m1 * m2 / delta;
    }
    if (delta == gcd(m1, m2) && order != lcm(m1, m2))
        throw std::logic_error("im_i4_order: kernel order is not lcm(m1, m2)");
    return order;
}

Int n7a_h4_oracle(const torus::RhoData& rho, const CircleWithFinite& minus,
                  const CircleWithFinite& plus) {
    const Int &A = rho.A, &B = rho.B, &D = rho.D, &E = rho.E;
    Vec row{B, E, A, D};
    Vec x{-D, A, -E, B};
    auto hm = hat_coeffs(rho, minus);
    auto hp = hat_coeffs(rho, plus);
    Vec ym{minus.q * hm.q_hat, -minus.q * hm.p_hat, minus.p * hm.q_hat, -minus.p * hm.p_hat};
    Vec yp{plus.q * hp.q_hat, -plus.q * hp.p_hat, plus.p * hp.q_hat, -plus.p * hp.p_hat};
    Int delta3 = mv_quotient_order(row, {x, ym, yp});
    if (delta3 == 0) return 0;
    Int hbm = rho.h / minus.b, hbp = rho.h / plus.b;
    return delta3 * im_i4_order(hbm, hbp, gcd(hbm, hbp));
}

Int n7e_h4_oracle(const torus::RhoData& rho, const Int& m, const Int& n,
                  const CircleWithFinite& minus, const CircleWithFinite& plus) {
    const Int &A = rho.A, &D = rho.D;
    Vec row{A * m, D * m, -A * n, -D * n};
    Vec x{D * n, -A * n, -D * m, A * m};
    auto hm = hat_coeffs(rho, minus);
    auto hp = hat_coeffs(rho, plus);
    Vec ym{n * hm.q_hat, -n * hm.p_hat, m * hm.q_hat, -m * hm.p_hat};
    Vec yp{n * hp.q_hat, -n * hp.p_hat, m * hp.q_hat, -m * hp.p_hat};
    Int delta3 = mv_quotient_order(row, {x, ym, yp});
    if (delta3 == 0) return 0;
    Int m1 = abs(rho.h * minus.q / minus.b), m2 = abs(rho.h * plus.q / plus.b);
    return delta3 * im_i4_order(m1, m2, gcd(A, D));
}

namespace {

// grid points of denominator N lying on both circles
long long circle_pair_grid_count(long long N, long long pm, long long qm, long long pp, long long qp) {
    auto on = [N](long long p, long long q, long long i, long long j) {
        return ((q * i - p * j) % N + N) % N == 0;
    };
    long long count = 0;
    for (long long i = 0; i < N; ++i)
        for (long long j = 0; j < N; ++j)
            if (on(pm, qm, i, j) && on(pp, qp, i, j)) ++count;
    return count;
}

std::string describe(const CircleWithFinite& minus, const CircleWithFinite& plus) {
    std::ostringstream os;
    os << "(" << minus.p << "," << minus.q << ")b" << minus.b << " / (" << plus.p << "," << plus.q
       << ")b" << plus.b;
    return os.str();
}

}  // namespace

void subgroup_enum_check(CheckReport& report, const CircleWithFinite& minus,
                         const CircleWithFinite& plus) {
    std::string diag = describe(minus, plus);
    auto add = [&](const std::string& what, const Int& lattice, const Int& brute) {
        report.records.push_back({diag, what, lattice, brute, lattice == brute});
        if (lattice != brute) ++report.mismatches;
    };

    if (torus::same_circle(minus, plus)) {
        // both paths must report the coincide error
        bool lattice_throws = false, enum_throws = false;
        try {
            torus::circle_intersection_count(minus, plus);
        } catch (const std::invalid_argument&) {
            lattice_throws = true;
        }
        try {
            torus::lens_order(minus, plus, torus::finite_product_order(minus, plus));
        } catch (const std::invalid_argument&) {
            enum_throws = true;
        }
        add("coincide-error", lattice_throws ? 1 : 0, enum_throws ? 1 : 0);
        return;
    }

    Int a = torus::circle_intersection_count(minus, plus);
    long long aa = a.convert_to<long long>();
    long long pm = minus.p.convert_to<long long>(), qm = minus.q.convert_to<long long>();
    long long pp = plus.p.convert_to<long long>(), qp = plus.q.convert_to<long long>();
    if (aa <= 1000)
        add("circle_intersection_count", a, circle_pair_grid_count(aa, pm, qm, pp, qp));

    // product order via closure enumeration
    Int h = torus::finite_product_order(minus, plus);
    long long N = lcm(minus.b, plus.b).convert_to<long long>();
    std::vector<std::pair<long long, long long>> gens;
    for (auto g : {torus::finite_subgroup_numerators(minus, N), torus::finite_subgroup_numerators(plus, N)})
        if (g.size() > 1) gens.push_back(g[1]);
    add("finite_product_order", h, Int(torus::subgroup_closure(N, gens).size()));

    // index d via grid scan of the circle intersection against the closure of H
    {
        long long M = lcm(lcm(minus.b, plus.b), a).convert_to<long long>();
        std::vector<std::pair<long long, long long>> hg;
        for (auto g : {torus::finite_subgroup_numerators(minus, M), torus::finite_subgroup_numerators(plus, M)})
            if (g.size() > 1) hg.push_back(g[1]);
        auto H = torus::subgroup_closure(M, hg);
        auto on = [M](long long p, long long q, long long i, long long j) {
            return ((q * i - p * j) % M + M) % M == 0;
        };
        long long both = 0, in_h = 0;
        for (long long i = 0; i < M; ++i)
            for (long long j = 0; j < M; ++j)
                if (on(pm, qm, i, j) && on(pp, qp, i, j)) {
                    ++both;
                    if (H.count({i, j})) ++in_h;
                }
        add("intersection_order", a, Int(both));
        add("finite_index_d", torus::finite_index_d(minus, plus), Int(both / in_h));
    }

    // lens order: intersection of the image circles under rho, counted on the
    // grid of their slope determinant
    Int r = torus::lens_order(minus, plus, h);
    if (r <= 1000 && torus::finite_parts_consistent(minus, plus)) {
        auto rho = torus::build_rho(minus, plus, h);
        auto hm = hat_coeffs(rho, minus);
        auto hp = hat_coeffs(rho, plus);
        Int k0 = abs(hm.p_hat * hp.q_hat - hm.q_hat * hp.p_hat);
        Int r_enum = k0 == 0 ? Int(0)
                             : Int(circle_pair_grid_count(
                                   k0.convert_to<long long>(), hm.p_hat.convert_to<long long>(),
                                   hm.q_hat.convert_to<long long>(), hp.p_hat.convert_to<long long>(),
                                   hp.q_hat.convert_to<long long>()));
        add("lens_order", r, r_enum);
    }
}

std::string CheckReport::render() const {
    std::ostringstream os;
    for (const auto& r : records)
        os << r.diagram << " | " << r.quantity << " | formula=" << r.lattice_value
           << " | oracle=" << r.enum_value << " | " << (r.ok ? "OK" : "MISMATCH") << "\n";
    os << "mismatches: " << mismatches << "\n";
    return os.str();
}

}  // namespace coh1::oracle
