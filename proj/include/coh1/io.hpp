#pragma once

#include "coh1/catalog.hpp"
#include "coh1/families.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

// Diagram-file parsing, result rendering (text and JSON) and the Table-I
// shape classifier.

namespace coh1::io {

using abgroup::FgAbelian;
using abgroup::GradedGroups;
using intlin::Int;

// closed-form entries computed by catalog lookup rather than a group diagram
struct CatalogRequest {
    std::string kind;  // "brieskorn", "P7A".."P7D", "atom"
    Int d = 0;         // brieskorn degree
    Int r = 0;         // P^7 parameter
    bool z2 = false;   // P7A variant with H_2 torsion
    std::string name;  // atom name, products allowed
};

using Request = std::variant<families::FamilyDiagram, CatalogRequest>;

struct InputDiagram {
    std::string family;
    Request req;
    std::string params;  // printable echo of the parsed fields
};

// Accepts {"schema":1, "diagrams":[{...},...]} or a single flat diagram object
// carrying "schema":1. Unknown fields and missing fields are hard errors.
std::vector<InputDiagram> parse_input(const std::string& text);

struct Classification {
    std::string label;  // type-1 | type-2 | symmetric-profile
    Int alpha = 0, beta = 0, gamma = 0;
    bool ambiguous = false;  // also matches the type-1 shape
    std::vector<std::string> warnings;

    std::string render() const;
};

// match a dim-7 homology profile against the exceptional-set shapes;
// alpha is the torsion order of H_2 (0 when H_2 is torsion free)
Classification classify_theorem_type(const GradedGroups& homology);

struct DiagramResult {
    InputDiagram input;
    std::vector<std::string> violations;  // validation failures; skip compute
    std::optional<GradedGroups> cohomology;
    std::optional<GradedGroups> homology;
    std::optional<Classification> classification;
    std::optional<std::pair<Int, Int>> check;  // formula vs oracle |H^4|
    std::string error;
};

DiagramResult evaluate(const InputDiagram& d, const catalog::Catalog& cat, bool with_check);

enum class Format { text, json };

std::string render_results(const std::vector<DiagramResult>& results, Format f,
                           bool show_homology, bool show_cohomology);

// group lists recovered from a rendered JSON report; rendering then re-parsing
// reproduces the groups bit-exactly
std::vector<std::vector<FgAbelian>> parse_result_groups(const std::string& json_text);

// true iff every diagram validated, computed, and (if requested) checked clean
bool all_ok(const std::vector<DiagramResult>& results);

}  // namespace coh1::io
