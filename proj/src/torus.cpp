#include "coh1/torus.hpp"

#include <stdexcept>

namespace coh1::torus {

using intlin::abs;
using intlin::ext_gcd;
using intlin::gcd;
using intlin::lcm;
using intlin::smith_normal_form;

void validate_circle(const CircleWithFinite& c) {
    if (c.p == 0 && c.q == 0) throw std::invalid_argument("circle slope must be nonzero");
    if (gcd(c.p, c.q) != 1) throw std::invalid_argument("circle slope must be primitive");
    if (c.b < 1) throw std::invalid_argument("finite subgroup order must be positive");
}

bool same_circle(const CircleWithFinite& a, const CircleWithFinite& b) {
    return (a.p == b.p && a.q == b.q) || (a.p == -b.p && a.q == -b.q);
}

Int circle_intersection_signed(const CircleWithFinite& minus, const CircleWithFinite& plus) {
    return plus.q * minus.p - minus.q * plus.p;
}

Int circle_intersection_count(const CircleWithFinite& minus, const CircleWithFinite& plus) {
    validate_circle(minus);
    validate_circle(plus);
    if (same_circle(minus, plus)) throw std::invalid_argument("circles coincide");
    return abs(circle_intersection_signed(minus, plus));
}

std::set<std::pair<long long, long long>> subgroup_closure(
    long long N, const std::vector<std::pair<long long, long long>>& gens) {
    auto norm = [N](long long x) { return ((x % N) + N) % N; };
    std::set<std::pair<long long, long long>> seen{{0, 0}};
    std::vector<std::pair<long long, long long>> frontier{{0, 0}};
    while (!frontier.empty()) {
        std::vector<std::pair<long long, long long>> next;
        for (const auto& [x, y] : frontier)
            for (const auto& [gx, gy] : gens) {
                std::pair<long long, long long> e{norm(x + gx), norm(y + gy)};
                if (seen.insert(e).second) next.push_back(e);
            }
        frontier = std::move(next);
    }
    return seen;
}

std::vector<std::pair<long long, long long>> finite_subgroup_numerators(
    const CircleWithFinite& c, long long N) {
    long long b = c.b.convert_to<long long>();
    if (N % b != 0) throw std::invalid_argument("denominator not divisible by subgroup order");
    long long step = N / b;
    long long p = c.p.convert_to<long long>(), q = c.q.convert_to<long long>();
    auto norm = [N](long long x) { return ((x % N) + N) % N; };
    std::vector<std::pair<long long, long long>> out;
    for (long long k = 0; k < b; ++k) out.push_back({norm(k * p % N * step % N), norm(k * q % N * step % N)});
    return out;
}

namespace {

constexpr long long kEnumCutoff = 10000;

Int product_order_lattice(const CircleWithFinite& minus, const CircleWithFinite& plus) {
    Int N = lcm(minus.b, plus.b);
    IntMatrix m(2, 4);
    m(0, 0) = N;
    m(1, 1) = N;
    m(0, 2) = minus.p * (N / minus.b);
    m(1, 2) = minus.q * (N / minus.b);
    m(0, 3) = plus.p * (N / plus.b);
    m(1, 3) = plus.q * (N / plus.b);
    auto s = smith_normal_form(m);
    return N * N / (s.diag[0] * s.diag[1]);
}

Int product_order_enum(const CircleWithFinite& minus, const CircleWithFinite& plus) {
    long long N = lcm(minus.b, plus.b).convert_to<long long>();
    std::vector<std::pair<long long, long long>> gens;
    for (auto g : {finite_subgroup_numerators(minus, N), finite_subgroup_numerators(plus, N)})
        if (g.size() > 1) gens.push_back(g[1]);
    return Int(subgroup_closure(N, gens).size());
}

}  // namespace

Int finite_product_order(const CircleWithFinite& minus, const CircleWithFinite& plus) {
    validate_circle(minus);
    validate_circle(plus);
    Int h = product_order_lattice(minus, plus);
    if (minus.b * plus.b <= kEnumCutoff && product_order_enum(minus, plus) != h)
        throw std::logic_error("finite_product_order: lattice and enumeration methods disagree");
    return h;
}

bool finite_parts_consistent(const CircleWithFinite& minus, const CircleWithFinite& plus) {
    validate_circle(minus);
    validate_circle(plus);
    long long N = lcm(minus.b, plus.b).convert_to<long long>();
    std::vector<std::pair<long long, long long>> gens;
    for (auto g : {finite_subgroup_numerators(minus, N), finite_subgroup_numerators(plus, N)})
        if (g.size() > 1) gens.push_back(g[1]);
    auto H = subgroup_closure(N, gens);
    for (const CircleWithFinite* c : {&minus, &plus}) {
        long long p = c->p.convert_to<long long>(), q = c->q.convert_to<long long>();
        long long on_circle = 0;
        for (const auto& [i, j] : H)
            if ((q * i - p * j) % N == 0) ++on_circle;
        if (on_circle != c->b) return false;
    }
    return true;
}

BezoutChooser canonical_chooser() {
    return [](const Int& x, const Int& y) { return ext_gcd(x, y); };
}

Int RhoData::entry_gcd() const { return gcd(gcd(A, B), gcd(D, E)); }

RhoData build_rho(const CircleWithFinite& minus, const CircleWithFinite& plus, const Int& h,
                  const BezoutChooser& choose) {
    validate_circle(minus);
    validate_circle(plus);
    if (same_circle(minus, plus)) throw std::invalid_argument("circles coincide");
    if (h != finite_product_order(minus, plus))
        throw std::invalid_argument("h does not match generated finite subgroup");
    if (!finite_parts_consistent(minus, plus))
        throw std::invalid_argument("product subgroup meets a circle in more than b elements");

    Int a = circle_intersection_signed(minus, plus);
    RhoData r;
    r.h = h;
    r.cert_minus = choose(minus.p, minus.q);
    if (!r.cert_minus.valid() || r.cert_minus.g != 1)
        throw std::logic_error("build_rho: bad certificate for the minus slope");
    r.c = plus.p * r.cert_minus.psi - plus.q * r.cert_minus.phi;

    Int k = minus.b * plus.b / h;  // = gcd(b_- c, a)
    if (gcd(minus.b * r.c, a) != k)
        throw std::logic_error("build_rho: gcd(b_-c, a) != b_-b_+/h");
    Int u = minus.b * r.c / k;  // = hc/b_+
    Int v = a / k;              // = ha/(b_-b_+)
    r.cert_step3 = choose(u, v);
    if (!r.cert_step3.valid() || r.cert_step3.g != 1)
        throw std::logic_error("build_rho: bad certificate in step 3");

    // rho4 * rho3 * rho2 * rho1
    Int s3 = r.cert_step3.psi, f3 = r.cert_step3.phi;
    Int s1 = r.cert_minus.psi, f1 = r.cert_minus.phi;
    Int hb = h / minus.b;
    // rho3 * rho2 = [[s3*b_-, -f3], [-v*b_-, u]]; then * rho1, then rho4 scales row 0
    r.A = hb * (s3 * minus.b * s1 + f3 * minus.q);
    r.B = hb * (-s3 * minus.b * f1 - f3 * minus.p);
    r.D = -v * minus.b * s1 - u * minus.q;
    r.E = v * minus.b * f1 + u * minus.p;

    if (abs(r.det()) != h) throw std::logic_error("build_rho: |AE-BD| != h");
    for (const CircleWithFinite* c : {&minus, &plus})
        if (gcd(r.A * c->p + r.B * c->q, r.D * c->p + r.E * c->q) != c->b)
            throw std::logic_error("build_rho: image gcd does not match b");
    return r;
}

HatCoeffs hat_coeffs(const RhoData& rho, const CircleWithFinite& circle) {
    Int top = rho.A * circle.p + rho.B * circle.q;
    Int bot = rho.D * circle.p + rho.E * circle.q;
    if (top % circle.b != 0 || bot % circle.b != 0)
        throw std::logic_error("hat_coeffs: image not divisible by b");
    HatCoeffs hc{top / circle.b, bot / circle.b};
    if (gcd(hc.p_hat, hc.q_hat) != 1) throw std::logic_error("hat_coeffs: not coprime");
    return hc;
}

Int lens_order(const CircleWithFinite& minus, const CircleWithFinite& plus, const Int& h) {
    Int a = circle_intersection_count(minus, plus);
    Int num = a * h;
    Int den = minus.b * plus.b;
    if (num % den != 0) throw std::logic_error("lens_order: non-integral order");
    return num / den;
}

Int finite_index_d(const CircleWithFinite& minus, const CircleWithFinite& plus) {
    Int a = circle_intersection_count(minus, plus);
    long long aa = a.convert_to<long long>();
    long long N = lcm(lcm(minus.b, plus.b), a).convert_to<long long>();
    auto norm = [N](long long x) { return ((x % N) + N) % N; };

    std::vector<std::pair<long long, long long>> gens;
    for (auto g : {finite_subgroup_numerators(minus, N), finite_subgroup_numerators(plus, N)})
        if (g.size() > 1) gens.push_back(g[1]);
    auto H = subgroup_closure(N, gens);

    long long p = minus.p.convert_to<long long>(), q = minus.q.convert_to<long long>();
    long long step = N / aa;
    long long in_h = 0;
    for (long long k = 0; k < aa; ++k)
        if (H.count({norm(k * p % N * step % N), norm(k * q % N * step % N)})) ++in_h;
    return a / in_h;
}

}  // namespace coh1::torus
