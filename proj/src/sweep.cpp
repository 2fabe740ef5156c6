#include "coh1/sweep.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coh1::sweep {

using families::N7A;
using families::N7E;
using intlin::gcd;
using torus::CircleWithFinite;

namespace {

// projective representatives of primitive slopes in the box
std::vector<std::pair<long long, long long>> slopes(int bound, bool nonzero_q) {
    std::vector<std::pair<long long, long long>> out;
    if (!nonzero_q) out.push_back({0, 1});
    for (long long p = 1; p <= bound; ++p)
        for (long long q = -bound; q <= bound; ++q) {
            if (nonzero_q && q == 0) continue;
            if (gcd(Int(p), Int(q)) != 1) continue;
            out.push_back({p, q});
        }
    return out;
}

std::string circle_params(const CircleWithFinite& m, const CircleWithFinite& p) {
    std::ostringstream os;
    os << "(" << m.p << "," << m.q << ")b" << m.b << " (" << p.p << "," << p.q << ")b" << p.b;
    return os.str();
}

SweepRecord compute_record(const FamilyDiagram& d) {
    SweepRecord rec;
    rec.diagram = d;
    try {
        static const auto cat = catalog::Catalog::builtin();  // read-only after init
        auto groups = families::compute(d, cat);
        if (!groups.extension_slot) throw std::logic_error("sweep family without extension data");
        const auto& ext = groups.extension_slot->second;
        rec.beta = ext.sub.order();
        rec.gamma = ext.quot.order();
        rec.h4_formula = ext.total_order();
        if (const N7A* a = std::get_if<N7A>(&d)) {
            rec.params = circle_params(a->minus, a->plus);
            Int h = torus::finite_product_order(a->minus, a->plus);
            auto rho = torus::build_rho(a->minus, a->plus, h);
            rec.h4_oracle = oracle::n7a_h4_oracle(rho, a->minus, a->plus);
        } else if (const N7E* e = std::get_if<N7E>(&d)) {
            std::ostringstream os;
            os << circle_params(e->minus, e->plus) << " m" << e->m << " n" << e->n;
            rec.params = os.str();
            Int h = torus::finite_product_order(e->minus, e->plus);
            auto rho = torus::build_rho(e->minus, e->plus, h);
            rec.h4_oracle = oracle::n7e_h4_oracle(rho, e->m, e->n, e->minus, e->plus);
        } else {
            throw std::invalid_argument("sweep supports the determinant-formula families only");
        }
        rec.agree = rec.h4_formula == rec.h4_oracle;
    } catch (const std::exception& ex) {
        rec.error = ex.what();
        rec.agree = false;
    }
    return rec;
}

}  // namespace

std::vector<FamilyDiagram> enumerate_diagrams(const std::string& family, const SweepBounds& bounds) {
    std::vector<FamilyDiagram> out;
    if (family == "N7A") {
        auto sl = slopes(bounds.slope, false);
        for (auto sm : sl)
            for (auto sp : sl)
                for (long long bm = 1; bm <= bounds.b; ++bm)
                    for (long long bp = 1; bp <= bounds.b; ++bp) {
                        N7A d{{sm.first, sm.second, bm}, {sp.first, sp.second, bp}, false};
                        if (torus::same_circle(d.minus, d.plus)) continue;
                        // skip the infinite-H^4 ray: (p_-,q_-) = +/-(p_+,-q_+)
                        if (sm.first == sp.first && sm.second == -sp.second) continue;
                        if (sm.first == -sp.first && sm.second == sp.second) continue;
                        if (families::validate(FamilyDiagram{d}).empty()) out.push_back(d);
                    }
    } else if (family == "N7E") {
        auto sl = slopes(bounds.slope, true);
        std::vector<std::array<long long, 2>> mn;
        for (long long m = -bounds.mn; m <= bounds.mn; ++m)
            for (long long n = -bounds.mn; n <= bounds.mn; ++n)
                if (m != 0 && n != 0 && gcd(Int(m), Int(n)) == 1) mn.push_back({m, n});
        for (auto sm : sl)
            for (auto sp : sl)
                for (long long bm = 1; bm <= bounds.b; ++bm)
                    for (long long bp = 1; bp <= bounds.b; ++bp)
                        for (auto [m, n] : mn) {
                            // canonical mu, nu with m*nu - n*mu = 1
                            auto cert = intlin::ext_gcd(Int(m), Int(n));
                            if (cert.g != 1) continue;
                            N7E d{m, n, cert.phi, cert.psi,
                                  {sm.first, sm.second, bm}, {sp.first, sp.second, bp}};
                            if (torus::same_circle(d.minus, d.plus)) continue;
                            if (families::validate(FamilyDiagram{d}).empty()) out.push_back(d);
                        }
    } else {
        throw std::invalid_argument("unknown sweep family '" + family + "' (expected N7A or N7E)");
    }
    return out;
}

std::vector<SweepRecord> run_serial(const std::vector<FamilyDiagram>& diagrams) {
    std::vector<SweepRecord> out(diagrams.size());
    for (size_t i = 0; i < diagrams.size(); ++i) out[i] = compute_record(diagrams[i]);
    return out;
}

std::vector<SweepRecord> run_parallel(const std::vector<FamilyDiagram>& diagrams) {
    std::vector<SweepRecord> out(diagrams.size());
    const long long n = static_cast<long long>(diagrams.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (long long i = 0; i < n; ++i) out[i] = compute_record(diagrams[i]);
    return out;
}

std::string render_table(const std::vector<SweepRecord>& records) {
    std::ostringstream os;
    for (const auto& r : records) {
        os << families::family_name(r.diagram) << " | " << r.params;
        if (!r.error.empty()) {
            os << " | error: " << r.error << "\n";
            continue;
        }
        os << " | gamma=" << r.gamma << " beta=" << r.beta << " | formula=" << r.h4_formula
           << " oracle=" << r.h4_oracle << " | " << (r.agree ? "OK" : "MISMATCH") << "\n";
    }
    os << "diagrams: " << records.size() << ", disagreements: " << count_disagreements(records)
       << "\n";
    return os.str();
}

int count_disagreements(const std::vector<SweepRecord>& records) {
    int n = 0;
    for (const auto& r : records)
        if (!r.agree) ++n;
    return n;
}

}  // namespace coh1::sweep
