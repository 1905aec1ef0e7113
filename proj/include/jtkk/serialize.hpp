#pragma once

// Line-oriented JSON text for algebras given by structure constants.

#include "jtkk/superspace.hpp"

#include <map>
#include <string>
#include <string_view>

namespace jtkk {

inline constexpr int kSchemaVersion = 1;

struct AlgebraSpec {
    int schema_version = kSchemaVersion;
    std::string name;
    AlgebraKind kind = AlgebraKind::plain;
    std::vector<int> parities;
    std::optional<std::vector<int>> zdegrees;
    std::vector<ProductEntry> products;
    std::map<std::string, std::string> metadata;

    friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b);
};

AlgebraSpec to_spec(const SuperAlgebra& a, std::map<std::string, std::string> metadata = {});
SuperAlgebra from_spec(const AlgebraSpec& s);

/// One product per line; output is deterministic.
std::string save(const AlgebraSpec& s);
/// Throws ParseError with a line number (syntax) or field path (content).
AlgebraSpec load(std::string_view text);

void save_file(const std::string& path, const AlgebraSpec& s);
AlgebraSpec load_file(const std::string& path);

}  // namespace jtkk
