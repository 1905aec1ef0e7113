#include "jtkk/serialize.hpp"

#include "json.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace jtkk {

using nlohmann::json;

namespace {

bool same_entry(const ProductEntry& a, const ProductEntry& b) {
    return a.i == b.i && a.j == b.j && a.k == b.k && a.coeff == b.coeff;
}

AlgebraKind kind_of(const std::string& s, const std::string& field) {
    if (s == "plain") return AlgebraKind::plain;
    if (s == "jordan") return AlgebraKind::jordan;
    if (s == "lie") return AlgebraKind::lie;
    throw ParseError(field + ": unknown algebra kind \"" + s + "\"");
}

const json& field(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(path + key + ": missing");
    return *it;
}

std::vector<int> int_list(const json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path + ": expected a list");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) throw ParseError(path + "[" + std::to_string(i) + "]: expected an integer");
        out.push_back(j[i].get<int>());
    }
    return out;
}

Rational coefficient(const json& j, const std::string& path) {
    static const std::regex pattern("^-?[0-9]+(/[1-9][0-9]*)?$");
    if (!j.is_string()) throw ParseError(path + ": coefficient must be a string \"p/q\"");
    std::string s = j.get<std::string>();
    if (!std::regex_match(s, pattern)) throw ParseError(path + ": malformed coefficient \"" + s + "\"");
    Rational r = parse_rational(s);
    if (to_string(r) != s) throw ParseError(path + ": coefficient \"" + s + "\" is not in lowest terms");
    return r;
}

std::size_t index(const json& j, const std::string& path) {
    if (!j.is_number_unsigned()) throw ParseError(path + ": expected a nonnegative integer");
    return j.get<std::size_t>();
}

}  // namespace

bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.schema_version == b.schema_version && a.name == b.name && a.kind == b.kind && a.parities == b.parities &&
           a.zdegrees == b.zdegrees && a.metadata == b.metadata &&
           std::equal(a.products.begin(), a.products.end(), b.products.begin(), b.products.end(), same_entry);
}

AlgebraSpec to_spec(const SuperAlgebra& a, std::map<std::string, std::string> metadata) {
    AlgebraSpec s;
    s.name = a.name();
    s.kind = a.kind();
    s.parities = a.parities();
    s.zdegrees = a.zdegrees();
    s.products = a.entries();
    s.metadata = std::move(metadata);
    return s;
}

SuperAlgebra from_spec(const AlgebraSpec& s) {
    return SuperAlgebra::make(s.name, s.kind, s.parities, s.zdegrees, s.products);
}

std::string save(const AlgebraSpec& s) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"schema_version\": " << s.schema_version << ",\n";
    out << "  \"name\": " << json(s.name).dump() << ",\n";
    out << "  \"kind\": " << json(to_string(s.kind)).dump() << ",\n";
    out << "  \"parities\": " << json(s.parities).dump() << ",\n";
    if (s.zdegrees) out << "  \"zdegrees\": " << json(*s.zdegrees).dump() << ",\n";
    out << "  \"products\": [";
    for (std::size_t n = 0; n < s.products.size(); ++n) {
        const auto& e = s.products[n];
        nlohmann::ordered_json row = {{"i", e.i}, {"j", e.j}, {"k", e.k}, {"coeff", to_string(e.coeff)}};
        out << (n ? ",\n    " : "\n    ") << row.dump();
    }
    out << (s.products.empty() ? "],\n" : "\n  ],\n");
    out << "  \"metadata\": " << json(s.metadata).dump() << "\n";
    out << "}\n";
    return out.str();
}

AlgebraSpec load(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        throw ParseError("line " + std::to_string(line) + ": " + e.what());
    }
    if (!doc.is_object()) throw ParseError("top level: expected an object");
    AlgebraSpec s;
    const json& ver = field(doc, "schema_version", "");
    if (!ver.is_number_integer()) throw ParseError("schema_version: expected an integer");
    s.schema_version = ver.get<int>();
    if (s.schema_version != kSchemaVersion)
        throw ParseError("schema_version: unsupported version " + std::to_string(s.schema_version));
    const json& name = field(doc, "name", "");
    if (!name.is_string()) throw ParseError("name: expected a string");
    s.name = name.get<std::string>();
    if (auto it = doc.find("kind"); it != doc.end()) {
        if (!it->is_string()) throw ParseError("kind: expected a string");
        s.kind = kind_of(it->get<std::string>(), "kind");
    }
    s.parities = int_list(field(doc, "parities", ""), "parities");
    if (auto it = doc.find("zdegrees"); it != doc.end() && !it->is_null()) s.zdegrees = int_list(*it, "zdegrees");
    const json& prods = field(doc, "products", "");
    if (!prods.is_array()) throw ParseError("products: expected a list");
    for (std::size_t n = 0; n < prods.size(); ++n) {
        std::string path = "products[" + std::to_string(n) + "]";
        const json& p = prods[n];
        if (!p.is_object()) throw ParseError(path + ": expected an object");
        s.products.push_back({index(field(p, "i", path + "."), path + ".i"), index(field(p, "j", path + "."), path + ".j"),
                              index(field(p, "k", path + "."), path + ".k"),
                              coefficient(field(p, "coeff", path + "."), path + ".coeff")});
    }
    if (auto it = doc.find("metadata"); it != doc.end()) {
        if (!it->is_object()) throw ParseError("metadata: expected an object");
        for (const auto& [k, v] : it->items()) s.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
    return s;
}

void save_file(const std::string& path, const AlgebraSpec& s) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << save(s);
    if (!f) throw std::runtime_error("write failed: " + path);
}

AlgebraSpec load_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return load(ss.str());
}

}  // namespace jtkk
