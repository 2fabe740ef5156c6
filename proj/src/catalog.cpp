#include "coh1/catalog.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace coh1::catalog {

using abgroup::Kind;

GradedGroups sphere(int n) {
    if (n < 1) throw std::invalid_argument("sphere: dimension must be positive");
    GradedGroups g;
    g.dim = n;
    g.kind = Kind::homology;
    g.groups.assign(n + 1, FgAbelian::zero());
    g.groups[0] = FgAbelian::free(1);
    g.groups[n] = g.groups[n].direct_sum(FgAbelian::free(1));
    return g;
}

namespace {

GradedGroups cp2() {
    GradedGroups g;
    g.dim = 4;
    g.kind = Kind::homology;
    g.groups = {FgAbelian::free(1), FgAbelian::zero(), FgAbelian::free(1), FgAbelian::zero(),
                FgAbelian::free(1)};
    return g;
}

}  // namespace

Catalog Catalog::builtin() {
    Catalog c;
    for (int n = 2; n <= 7; ++n) {
        std::string name = "S" + std::to_string(n);
        c.add({name, sphere(n), "sphere"});
    }
    c.add({"CP2", cp2(), "complex projective plane"});
    return c;
}

void Catalog::add(SpaceAtom a) {
    if (a.citation.empty())
        throw std::invalid_argument("atom '" + a.name + "' lacks a citation");
    auto v = a.groups.profile_violations();
    if (!v.empty())
        throw std::invalid_argument("atom '" + a.name + "' is not a closed-manifold profile: " + v.front());
    atoms_[a.name] = std::move(a);
}

bool Catalog::has(const std::string& name) const { return atoms_.count(name) > 0; }

const SpaceAtom& Catalog::atom(const std::string& name) const {
    auto it = atoms_.find(name);
    if (it == atoms_.end()) throw std::invalid_argument("unknown atom '" + name + "'");
    return it->second;
}

std::vector<std::string> Catalog::names() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : atoms_) out.push_back(k);
    return out;
}

GradedGroups Catalog::product_profile(const std::vector<std::string>& names) const {
    if (names.empty()) throw std::invalid_argument("product_profile: empty atom list");
    GradedGroups acc = atom(names[0]).groups;
    for (size_t i = 1; i < names.size(); ++i) {
        acc = abgroup::kunneth(acc, atom(names[i]).groups);
        if (acc.dim > 7) throw std::invalid_argument("product_profile: dimension exceeds 7");
    }
    return acc;
}

GradedGroups Catalog::low_dim(const std::string& name) const {
    if (name == "N6D-profile") return product_profile({"CP2", "S2"});
    if (has(name)) return atom(name).groups;
    // "A x B x C" product names
    std::vector<std::string> parts;
    std::istringstream is(name);
    std::string tok;
    while (is >> tok) {
        if (tok == "x") continue;
        parts.push_back(tok);
    }
    if (parts.size() > 1) return product_profile(parts);
    throw std::invalid_argument("unknown atom '" + name + "'");
}

Catalog Catalog::load(const std::string& atom_file) {
    std::ifstream in(atom_file);
    if (!in) throw std::runtime_error("cannot open atom file: " + atom_file);
    std::stringstream ss;
    ss << in.rdbuf();
    Catalog file_atoms = parse_atom_file(ss.str());
    Catalog c = builtin();
    for (const std::string& n : file_atoms.names()) c.add(file_atoms.atom(n));
    return c;
}

std::string render_atom_file(const Catalog& c) {
    std::ostringstream os;
    bool first = true;
    for (const std::string& n : c.names()) {
        const SpaceAtom& a = c.atom(n);
        if (!first) os << "\n";
        first = false;
        os << "atom " << a.name << "\n";
        os << "dim " << a.groups.dim << "\n";
        os << "groups ";
        for (int k = 0; k <= a.groups.dim; ++k) {
            if (k) os << "; ";
            os << abgroup::render(a.groups.at(k));
        }
        os << "\n";
        os << "citation " << a.citation << "\n";
    }
    return os.str();
}

Catalog parse_atom_file(const std::string& text) {
    Catalog c;
    std::istringstream is(text);
    std::string line;
    SpaceAtom cur;
    bool open = false;
    auto flush = [&] {
        if (open) c.add(cur);
        cur = {};
        open = false;
    };
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto sp = line.find(' ');
        std::string key = line.substr(0, sp);
        std::string val = sp == std::string::npos ? "" : line.substr(sp + 1);
        if (key == "atom") {
            flush();
            cur.name = val;
            open = true;
        } else if (key == "dim") {
            cur.groups.dim = std::stoi(val);
            cur.groups.kind = Kind::homology;
        } else if (key == "groups") {
            std::istringstream gs(val);
            std::string g;
            cur.groups.groups.clear();
            while (std::getline(gs, g, ';')) {
                size_t a = g.find_first_not_of(' ');
                size_t b = g.find_last_not_of(' ');
                cur.groups.groups.push_back(abgroup::parse_group(g.substr(a, b - a + 1)));
            }
        } else if (key == "citation") {
            cur.citation = val;
        } else {
            throw std::invalid_argument("atom file line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    flush();
    return c;
}

GradedGroups dim7_from_h2_h3(const FgAbelian& h2, const FgAbelian& h3) {
    GradedGroups g;
    g.dim = 7;
    g.kind = Kind::homology;
    // H_4 = Z^{rank H_3} + torsion(H_2), H_5 = Z^{rank H_2} by duality + UCT
    FgAbelian h4 = FgAbelian::make(h3.rank, h2.torsion);
    g.groups = {FgAbelian::free(1), FgAbelian::zero(), h2, h3, h4,
                FgAbelian::free(h2.rank), FgAbelian::zero(), FgAbelian::free(1)};
    return g;
}

GradedGroups brieskorn(const Int& d) {
    if (d < 1) throw std::invalid_argument("brieskorn: d must be >= 1");
    return dim7_from_h2_h3(FgAbelian::zero(), FgAbelian::cyclic(d));
}

GradedGroups p_family(PType type, const Int& r, PVariant variant) {
    if (r < 0) throw std::invalid_argument("p_family: r must be nonnegative");
    if (variant == PVariant::Z2) {
        if (type != PType::A) throw std::invalid_argument("p_family: Z2 variant only for type A");
        if (r == 0) throw std::invalid_argument("p_family: Z2 variant requires r > 0");
    }
    FgAbelian h2;
    switch (type) {
        case PType::A:
            h2 = variant == PVariant::Z2 ? FgAbelian::make(1, {2}) : FgAbelian::free(1);
            break;
        case PType::B:
        case PType::D:
            h2 = FgAbelian::free(1);
            break;
        case PType::C:
            h2 = FgAbelian::zero();
            break;
    }
    return dim7_from_h2_h3(h2, FgAbelian::cyclic(r));
}

}  // namespace coh1::catalog
