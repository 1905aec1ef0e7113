#pragma once

// Verification reports shared by the command-line tool, the acceptance
// runner and the Python module.

#include "jtkk/tkk.hpp"

#include <string_view>

namespace jtkk {

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;
    friend bool operator==(const Check&, const Check&) = default;
};

struct Fact {
    std::string key;
    std::string value;
    friend bool operator==(const Fact&, const Fact&) = default;
};

struct Section {
    std::string title;
    std::vector<Fact> facts;
    std::vector<Check> checks;
    friend bool operator==(const Section&, const Section&) = default;
};

struct Report {
    std::string subject;
    std::vector<Section> sections;

    Section& section(const std::string& title);
    const Section* find(const std::string& title) const;
    const Check* check(const std::string& name) const;
    const Fact* fact(const std::string& key) const;
    std::size_t failures() const;
    bool ok() const { return failures() == 0; }
    friend bool operator==(const Report&, const Report&) = default;
};

std::string render_human(const std::vector<Report>& reports);
/// JSON, one check or fact per line, stable field names.
std::string render_machine(const std::vector<Report>& reports);
std::vector<Report> parse_machine(std::string_view text);

enum class Construction { kan, ko, kotilde, ti_inn, ti_der };
std::string to_string(Construction c);
/// "kan", "ko", "kotilde", "ti-inn", "ti-der"; throws std::invalid_argument.
Construction parse_construction(const std::string& s);
TkkAlgebra build(const JordanAlgebra& v, Construction c);

/// A catalog name or an AlgebraSpec file. Exactly one member is set.
struct Source {
    std::string label;
    std::optional<JordanAlgebra> jordan;
    std::optional<SuperAlgebra> lie;
    std::size_t dim() const { return jordan ? jordan->dim() : lie ? lie->dim() : 0; }
};
/// Throws CatalogError for unknown names, ParseError or AlgebraError for bad files.
Source load_source(const std::string& s);

std::string dims_string(const std::array<std::size_t, 3>& d);
std::string parity_string(std::pair<std::size_t, std::size_t> p);
/// "L_{e2}" for basis index 1.
std::string basis_name(std::size_t i);

Report dims_report(const JordanAlgebra& v);
Report tkk_report(const JordanAlgebra& v, Construction c);
Report verify_jordan(const JordanAlgebra& v);
Report verify_lie(const SuperAlgebra& g, bool expect_simple);
Report verify_source(const Source& s);

}  // namespace jtkk
