#include "coh1/abgroup.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coh1::abgroup {

using intlin::abs;
using intlin::gcd;
using intlin::lcm;

Int FgAbelian::order() const {
    if (rank > 0) return 0;
    Int p = 1;
    for (const Int& d : torsion) p *= d;
    return p;
}

FgAbelian FgAbelian::cyclic(const Int& d) {
    if (d == 0) return free(1);
    Int a = abs(d);
    if (a == 1) return zero();
    return {0, {a}};
}

FgAbelian FgAbelian::make(int rank, std::vector<Int> cyclic_orders) {
    if (rank < 0) throw std::invalid_argument("FgAbelian: negative rank");
    std::vector<Int> t;
    for (Int& d : cyclic_orders) {
        if (d == 0) { ++rank; continue; }
        d = abs(d);
        if (d > 1) t.push_back(d);
    }
    // gcd/lcm passes until the chain stabilizes
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < t.size(); ++i)
            for (size_t j = i + 1; j < t.size(); ++j)
                if (t[j] % t[i] != 0) {
                    Int g = gcd(t[i], t[j]);
                    t[j] = t[i] / g * t[j];
                    t[i] = g;
                    changed = true;
                }
    }
    std::sort(t.begin(), t.end());
    std::erase(t, Int(1));
    return {rank, std::move(t)};
}

FgAbelian FgAbelian::direct_sum(const FgAbelian& o) const {
    std::vector<Int> all = torsion;
    all.insert(all.end(), o.torsion.begin(), o.torsion.end());
    return make(rank + o.rank, std::move(all));
}

FgAbelian tensor(const FgAbelian& a, const FgAbelian& b) {
    std::vector<Int> t;
    for (const Int& d : a.torsion)
        for (int i = 0; i < b.rank; ++i) t.push_back(d);
    for (const Int& d : b.torsion)
        for (int i = 0; i < a.rank; ++i) t.push_back(d);
    for (const Int& da : a.torsion)
        for (const Int& db : b.torsion) t.push_back(gcd(da, db));
    return FgAbelian::make(a.rank * b.rank, std::move(t));
}

FgAbelian tor(const FgAbelian& a, const FgAbelian& b) {
    std::vector<Int> t;
    for (const Int& da : a.torsion)
        for (const Int& db : b.torsion) t.push_back(gcd(da, db));
    return FgAbelian::make(0, std::move(t));
}

std::string render(const FgAbelian& g) {
    if (g.trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (g.rank == 1) {
        os << "Z";
        first = false;
    } else if (g.rank > 1) {
        os << "Z^" << g.rank;
        first = false;
    }
    for (const Int& d : g.torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

FgAbelian parse_group(const std::string& s) {
    if (s == "0") return FgAbelian::zero();
    int rank = 0;
    std::vector<Int> torsion;
    std::istringstream is(s);
    std::string tok;
    bool expect_term = true;
    while (is >> tok) {
        if (tok == "+") {
            if (expect_term) throw std::invalid_argument("parse_group: misplaced '+' in \"" + s + "\"");
            expect_term = true;
            continue;
        }
        if (!expect_term) throw std::invalid_argument("parse_group: missing '+' in \"" + s + "\"");
        expect_term = false;
        if (tok == "Z") {
            rank += 1;
        } else if (tok.rfind("Z^", 0) == 0) {
            rank += std::stoi(tok.substr(2));
        } else if (tok.rfind("Z/", 0) == 0) {
            torsion.push_back(Int(tok.substr(2)));
        } else {
            throw std::invalid_argument("parse_group: bad term \"" + tok + "\"");
        }
    }
    if (expect_term) throw std::invalid_argument("parse_group: trailing '+' in \"" + s + "\"");
    FgAbelian g = FgAbelian::make(rank, torsion);
    if (render(g) != s) throw std::invalid_argument("parse_group: not in canonical form: \"" + s + "\"");
    return g;
}

Int ExtensionDatum::total_order() const {
    Int a = sub.order(), b = quot.order();
    if (a == 0 || b == 0) return 0;
    return a * b;
}

bool ExtensionDatum::consistent() const {
    if (!resolved) return true;
    if (resolved->order() != total_order()) return false;
    // for cyclic sub and quot the middle group Z/d1 + Z/d2 is realizable
    // exactly when d1 | gcd(|sub|, |quot|)
    if (sub.torsion.size() <= 1 && quot.torsion.size() <= 1 && sub.finite() && quot.finite()) {
        Int a = sub.order(), b = quot.order();
        if (resolved->rank != 0) return false;
        if (int(resolved->torsion.size()) > 2) return false;
        if (resolved->torsion.size() == 2 && gcd(a, b) % resolved->torsion.front() != 0)
            return false;
    }
    return true;
}

int GradedGroups::euler_char() const {
    int chi = 0;
    for (int k = 0; k <= dim; ++k) chi += (k % 2 == 0 ? 1 : -1) * groups[k].rank;
    return chi;
}

std::vector<std::string> GradedGroups::profile_violations() const {
    std::vector<std::string> v;
    if (int(groups.size()) != dim + 1) {
        v.push_back("wrong number of graded pieces");
        return v;
    }
    if (groups[0] != FgAbelian::free(1)) v.push_back("H0 is not Z");
    if (groups[dim] != FgAbelian::free(1)) v.push_back("top group is not Z");
    if (dim % 2 == 1 && euler_char() != 0) v.push_back("nonzero Euler characteristic in odd dimension");
    if (extension_slot) {
        const auto& [deg, ext] = *extension_slot;
        if (deg < 0 || deg > dim)
            v.push_back("extension slot degree out of range");
        else if (groups[deg].order() != ext.total_order())
            v.push_back("extension slot order mismatch");
        if (!ext.consistent()) v.push_back("resolved extension inconsistent with sub/quot");
    }
    return v;
}

FgAbelian from_presentation(const IntMatrix& relations) {
    intlin::SmithDecomposition d = intlin::smith_normal_form(relations);
    std::vector<Int> t;
    int nonzero = 0;
    for (const Int& di : d.diag)
        if (di != 0) {
            ++nonzero;
            t.push_back(di);
        }
    return FgAbelian::make(relations.cols - nonzero, std::move(t));
}

namespace {

GradedGroups dual(const GradedGroups& g, Kind target) {
    auto bad = [&] {
        return std::invalid_argument("not a closed orientable manifold profile");
    };
    if (int(g.groups.size()) != g.dim + 1) throw bad();
    if (g.groups[0] != FgAbelian::free(1) || g.groups[g.dim] != FgAbelian::free(1)) throw bad();
    GradedGroups r;
    r.dim = g.dim;
    r.kind = target;
    r.groups.assign(g.groups.rbegin(), g.groups.rend());
    if (g.extension_slot)
        r.extension_slot = {g.dim - g.extension_slot->first, g.extension_slot->second};
    return r;
}

}  // namespace

GradedGroups poincare_homology(const GradedGroups& c) {
    if (c.kind != Kind::cohomology)
        throw std::invalid_argument("poincare_homology: expected a cohomology profile");
    return dual(c, Kind::homology);
}

GradedGroups poincare_cohomology(const GradedGroups& h) {
    if (h.kind != Kind::homology)
        throw std::invalid_argument("poincare_cohomology: expected a homology profile");
    return dual(h, Kind::cohomology);
}

GradedGroups kunneth(const GradedGroups& a, const GradedGroups& b) {
    if (a.kind != Kind::homology || b.kind != Kind::homology)
        throw std::invalid_argument("kunneth: expected homology profiles");
    if (a.extension_slot || b.extension_slot)
        throw std::invalid_argument("resolve or propagate extension first");
    GradedGroups r;
    r.dim = a.dim + b.dim;
    r.kind = Kind::homology;
    r.groups.assign(r.dim + 1, FgAbelian::zero());
    for (int k = 0; k <= r.dim; ++k) {
        FgAbelian acc;
        for (int i = 0; i <= a.dim; ++i) {
            int j = k - i;
            if (j >= 0 && j <= b.dim) acc = acc.direct_sum(tensor(a.at(i), b.at(j)));
            int jt = k - 1 - i;
            if (jt >= 0 && jt <= b.dim) acc = acc.direct_sum(tor(a.at(i), b.at(jt)));
        }
        r.groups[k] = acc;
    }
    return r;
}

}  // namespace coh1::abgroup
