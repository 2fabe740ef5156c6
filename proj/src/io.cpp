#include "coh1/io.hpp"

#include "coh1/oracle.hpp"

#include <json.hpp>

#include <set>
#include <sstream>
#include <stdexcept>

namespace coh1::io {

using families::FamilyDiagram;
using json = nlohmann::json;

namespace {

// pulls typed fields out of one diagram object and rejects leftovers
class FieldReader {
public:
    FieldReader(const json& obj, std::string context) : obj_(obj), ctx_(std::move(context)) {
        if (!obj.is_object()) throw std::invalid_argument(ctx_ + ": diagram entry is not an object");
        used_.insert("family");
        used_.insert("schema");
    }

    Int num(const std::string& name) {
        require(name);
        if (!obj_.at(name).is_number_integer())
            throw std::invalid_argument(ctx_ + ": field '" + name + "' must be an integer");
        return Int(obj_.at(name).get<long long>());
    }

    Int num_or(const std::string& name, long long fallback) {
        return obj_.contains(name) ? num(name) : Int(fallback);
    }

    bool flag_or(const std::string& name, bool fallback) {
        if (!obj_.contains(name)) return fallback;
        require(name);
        if (!obj_.at(name).is_boolean())
            throw std::invalid_argument(ctx_ + ": field '" + name + "' must be a boolean");
        return obj_.at(name).get<bool>();
    }

    std::string str(const std::string& name) {
        require(name);
        if (!obj_.at(name).is_string())
            throw std::invalid_argument(ctx_ + ": field '" + name + "' must be a string");
        return obj_.at(name).get<std::string>();
    }

    std::string str_or(const std::string& name, const std::string& fallback) {
        return obj_.contains(name) ? str(name) : fallback;
    }

    void finish() const {
        for (auto it = obj_.begin(); it != obj_.end(); ++it)
            if (!used_.count(it.key()))
                throw std::invalid_argument(ctx_ + ": unknown field '" + it.key() + "'");
    }

private:
    void require(const std::string& name) {
        if (!obj_.contains(name))
            throw std::invalid_argument(ctx_ + ": missing field '" + name + "'");
        used_.insert(name);
    }

    const json& obj_;
    std::string ctx_;
    std::set<std::string> used_;
};

torus::CircleWithFinite circle(FieldReader& f, const std::string& side) {
    return {f.num("p_" + side), f.num("q_" + side), f.num_or("b_" + side, 1)};
}

InputDiagram parse_diagram(const json& obj, const std::string& ctx) {
    FieldReader f(obj, ctx);
    if (!obj.contains("family"))
        throw std::invalid_argument(ctx + ": missing field 'family'");
    std::string fam = obj.at("family").get<std::string>();
    InputDiagram out;
    out.family = fam;
    if (fam == "N7A") {
        families::N7A d{circle(f, "minus"), circle(f, "plus"), false};
        d.equal_circles = f.flag_or("equal_circles", torus::same_circle(d.minus, d.plus));
        out.req = FamilyDiagram{d};
    } else if (fam == "N7B") {
        out.req = FamilyDiagram{families::N7B{f.num("p"), f.num("q"), f.num("n_minus"), f.num("n_plus")}};
    } else if (fam == "N7C") {
        out.req = FamilyDiagram{families::N7C{f.num("p"), f.num("q"), f.num("n")}};
    } else if (fam == "N7D") {
        out.req = FamilyDiagram{
            families::N7D{f.num("m"), f.num("n"), f.num("mu"), f.num("nu"), f.num("p"), f.num_or("a", 1)}};
    } else if (fam == "N7E") {
        out.req = FamilyDiagram{families::N7E{f.num("m"), f.num("n"), f.num("mu"), f.num("nu"),
                                              circle(f, "minus"), circle(f, "plus")}};
    } else if (fam == "N7F") {
        out.req = FamilyDiagram{families::N7F{f.num("p"), f.num("a"), f.num("n")}};
    } else if (fam == "N7G") {
        out.req = FamilyDiagram{families::N7G{}};
    } else if (fam == "N7H") {
        out.req = FamilyDiagram{families::N7H{f.num("m_minus"), f.num("n_minus"), f.num("m_plus"),
                                              f.num("n_plus"), f.num_or("b_minus", 1),
                                              f.num_or("b_plus", 1)}};
    } else if (fam == "N7I") {
        out.req = FamilyDiagram{families::N7I{}};
    } else if (fam == "brieskorn") {
        CatalogRequest r;
        r.kind = fam;
        r.d = f.num("d");
        out.req = r;
    } else if (fam == "P7A" || fam == "P7B" || fam == "P7C" || fam == "P7D") {
        CatalogRequest r;
        r.kind = fam;
        r.r = f.num("r");
        std::string variant = f.str_or("variant", "plain");
        if (variant != "plain" && variant != "Z2")
            throw std::invalid_argument(ctx + ": variant must be 'plain' or 'Z2'");
        r.z2 = variant == "Z2";
        out.req = r;
    } else if (fam == "atom") {
        CatalogRequest r;
        r.kind = fam;
        r.name = f.str("name");
        out.req = r;
    } else {
        throw std::invalid_argument(ctx + ": unknown family '" + fam + "'");
    }
    f.finish();
    // echo of the raw fields, key-sorted by the json object
    std::ostringstream os;
    bool first = true;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (it.key() == "family" || it.key() == "schema") continue;
        if (!first) os << " ";
        first = false;
        os << it.key() << "=" << it.value().dump();
    }
    out.params = os.str();
    return out;
}

}  // namespace

std::vector<InputDiagram> parse_input(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw std::invalid_argument("input root must be an object");
    if (!root.contains("schema") || root.at("schema") != 1)
        throw std::invalid_argument("input must carry \"schema\": 1");
    std::vector<InputDiagram> out;
    if (root.contains("diagrams")) {
        const json& arr = root.at("diagrams");
        if (!arr.is_array()) throw std::invalid_argument("'diagrams' must be an array");
        for (size_t i = 0; i < arr.size(); ++i)
            out.push_back(parse_diagram(arr[i], "diagram " + std::to_string(i + 1)));
        for (auto it = root.begin(); it != root.end(); ++it)
            if (it.key() != "schema" && it.key() != "diagrams")
                throw std::invalid_argument("unknown top-level field '" + it.key() + "'");
    } else {
        out.push_back(parse_diagram(root, "diagram 1"));
    }
    return out;
}

std::string Classification::render() const {
    std::ostringstream os;
    os << label;
    if (label == "type-1") os << " (gamma=" << gamma << ")";
    if (label == "type-2")
        os << " (alpha=" << alpha << " beta=" << beta << " gamma=" << gamma << ")";
    if (ambiguous) os << " [also matches type-1]";
    for (const auto& w : warnings) os << " warning: " << w;
    return os.str();
}

Classification classify_theorem_type(const GradedGroups& h) {
    if (h.dim != 7 || h.kind != abgroup::Kind::homology)
        throw std::invalid_argument("classifier expects a dim-7 homology profile");
    Classification c;
    const FgAbelian& h2 = h.at(2);
    const FgAbelian& h3 = h.at(3);

    bool torsion_free = true;
    for (const auto& g : h.groups)
        if (!g.torsion.empty()) torsion_free = false;
    if (torsion_free && !h.extension_slot) {
        c.label = "symmetric-profile";
        return c;
    }

    if (h2.trivial() && h3.finite()) {
        c.label = "type-1";
        c.gamma = h3.order();
        c.beta = 1;
        return c;
    }

    c.label = "type-2";
    Int t = 1;
    for (const auto& d : h2.torsion) t *= d;
    c.alpha = h2.torsion.empty() ? Int(0) : t;
    if (h2.torsion.size() > 1 || h2.rank < 1 || h2.rank > 2)
        c.warnings.push_back("H_2 outside the tabulated shapes");
    if (c.alpha != 0 && c.alpha != 1 && c.alpha != 2)
        c.warnings.push_back("alpha outside {0,1,2}");
    if (h.extension_slot && h.extension_slot->first == 3) {
        const auto& ext = h.extension_slot->second;
        c.beta = ext.sub.order();
        c.gamma = ext.quot.order();
        if (c.alpha != 0 && ext.resolved && c.beta != 1 && c.beta != c.gamma)
            c.warnings.push_back("resolved beta outside {1, gamma}");
    } else {
        c.beta = 1;
        c.gamma = h3.order();
    }
    if (h2.trivial()) c.ambiguous = true;  // also presentable with H_2 = 0
    return c;
}

DiagramResult evaluate(const InputDiagram& d, const catalog::Catalog& cat, bool with_check) {
    DiagramResult res;
    res.input = d;
    try {
        if (const FamilyDiagram* fam = std::get_if<FamilyDiagram>(&d.req)) {
            res.violations = families::validate(*fam);
            if (!res.violations.empty()) return res;
            res.cohomology = families::compute(*fam, cat);
            res.homology = abgroup::poincare_homology(*res.cohomology);
            if (with_check) {
                if (const auto* a = std::get_if<families::N7A>(fam); a && !a->equal_circles) {
                    Int h = torus::finite_product_order(a->minus, a->plus);
                    auto rho = torus::build_rho(a->minus, a->plus, h);
                    res.check = {res.cohomology->extension_slot->second.total_order(),
                                 oracle::n7a_h4_oracle(rho, a->minus, a->plus)};
                } else if (const auto* e = std::get_if<families::N7E>(fam)) {
                    Int h = torus::finite_product_order(e->minus, e->plus);
                    auto rho = torus::build_rho(e->minus, e->plus, h);
                    res.check = {res.cohomology->extension_slot->second.total_order(),
                                 oracle::n7e_h4_oracle(rho, e->m, e->n, e->minus, e->plus)};
                }
            }
        } else {
            const auto& r = std::get<CatalogRequest>(d.req);
            GradedGroups hom;
            if (r.kind == "brieskorn") {
                hom = catalog::brieskorn(r.d);
            } else if (r.kind == "atom") {
                hom = cat.low_dim(r.name);
            } else {
                catalog::PType t = r.kind == "P7A"   ? catalog::PType::A
                                   : r.kind == "P7B" ? catalog::PType::B
                                   : r.kind == "P7C" ? catalog::PType::C
                                                     : catalog::PType::D;
                hom = catalog::p_family(t, r.r,
                                        r.z2 ? catalog::PVariant::Z2 : catalog::PVariant::plain);
            }
            res.homology = hom;
            res.cohomology = abgroup::poincare_cohomology(hom);
        }
        if (res.homology && res.homology->dim == 7)
            res.classification = classify_theorem_type(*res.homology);
    } catch (const std::exception& ex) {
        res.error = ex.what();
    }
    return res;
}

namespace {

std::string render_extension_line(int degree, const abgroup::ExtensionDatum& e, bool cohomology) {
    std::ostringstream os;
    std::string h = (cohomology ? "H" : "H_") + std::to_string(degree);
    os << h << ": 0 -> " << abgroup::render(e.sub) << " -> " << h << " -> "
       << abgroup::render(e.quot) << " -> 0 ";
    if (e.resolved)
        os << "(resolved = " << abgroup::render(*e.resolved) << ")";
    else
        os << "(open)";
    return os.str();
}

void render_groups_text(std::ostringstream& os, const GradedGroups& g, const std::string& title) {
    bool coh = g.kind == abgroup::Kind::cohomology;
    os << "  " << title << ":";
    for (int k = 0; k <= g.dim; ++k) {
        os << " H" << (coh ? "^" : "_") << k << "=" << abgroup::render(g.at(k));
    }
    os << "\n";
    if (g.extension_slot)
        os << "  " << render_extension_line(g.extension_slot->first, g.extension_slot->second, coh)
           << "\n";
}

json groups_to_json(const GradedGroups& g) {
    json out;
    out["dim"] = g.dim;
    out["kind"] = g.kind == abgroup::Kind::cohomology ? "cohomology" : "homology";
    json arr = json::array();
    for (int k = 0; k <= g.dim; ++k) arr.push_back(abgroup::render(g.at(k)));
    out["groups"] = arr;
    if (g.extension_slot) {
        const auto& [deg, e] = *g.extension_slot;
        json ext;
        ext["degree"] = deg;
        ext["sub"] = abgroup::render(e.sub);
        ext["quot"] = abgroup::render(e.quot);
        if (e.resolved) ext["resolved"] = abgroup::render(*e.resolved);
        out["extension"] = ext;
    }
    return out;
}

}  // namespace

std::string render_results(const std::vector<DiagramResult>& results, Format f, bool show_homology,
                           bool show_cohomology) {
    if (f == Format::json) {
        json root;
        root["schema"] = 1;
        json arr = json::array();
        for (const auto& r : results) {
            json e;
            e["family"] = r.input.family;
            e["params"] = r.input.params;
            if (!r.violations.empty()) e["violations"] = r.violations;
            if (!r.error.empty()) e["error"] = r.error;
            if (show_cohomology && r.cohomology) e["cohomology"] = groups_to_json(*r.cohomology);
            if (show_homology && r.homology) e["homology"] = groups_to_json(*r.homology);
            if (r.classification) e["classification"] = r.classification->render();
            if (r.check) {
                e["check"] = {{"formula", r.check->first.str()},
                              {"oracle", r.check->second.str()},
                              {"agree", r.check->first == r.check->second}};
            }
            arr.push_back(e);
        }
        root["results"] = arr;
        return root.dump(2) + "\n";
    }
    std::ostringstream os;
    for (const auto& r : results) {
        os << r.input.family;
        if (!r.input.params.empty()) os << " " << r.input.params;
        os << "\n";
        if (!r.violations.empty()) {
            for (const auto& v : r.violations) os << "  invalid: " << v << "\n";
            continue;
        }
        if (!r.error.empty()) {
            os << "  error: " << r.error << "\n";
            continue;
        }
        if (show_cohomology && r.cohomology) render_groups_text(os, *r.cohomology, "cohomology");
        if (show_homology && r.homology) render_groups_text(os, *r.homology, "homology");
        if (r.classification) os << "  classification: " << r.classification->render() << "\n";
        if (r.check)
            os << "  check: formula=" << r.check->first << " oracle=" << r.check->second << " "
               << (r.check->first == r.check->second ? "OK" : "MISMATCH") << "\n";
    }
    return os.str();
}

std::vector<std::vector<FgAbelian>> parse_result_groups(const std::string& json_text) {
    json root = json::parse(json_text);
    std::vector<std::vector<FgAbelian>> out;
    for (const auto& e : root.at("results")) {
        for (const char* key : {"cohomology", "homology"}) {
            if (!e.contains(key)) continue;
            std::vector<FgAbelian> gs;
            for (const auto& s : e.at(key).at("groups"))
                gs.push_back(abgroup::parse_group(s.get<std::string>()));
            out.push_back(std::move(gs));
        }
    }
    return out;
}

bool all_ok(const std::vector<DiagramResult>& results) {
    for (const auto& r : results) {
        if (!r.violations.empty() || !r.error.empty()) return false;
        if (r.check && r.check->first != r.check->second) return false;
        if (r.classification && !r.classification->warnings.empty()) return false;
    }
    return true;
}

}  // namespace coh1::io
