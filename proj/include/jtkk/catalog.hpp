#pragma once

// Built-in Jordan and Lie superalgebras.

#include "jtkk/jordan.hpp"

#include <string>
#include <vector>

namespace jtkk {

class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CatalogInfo {
    std::string name;
    std::string params;       // accepted parameter syntax
    std::string description;
    bool external = false;    // defining table comes from outside literature
};

std::vector<CatalogInfo> jordan_catalog_info();
std::vector<CatalogInfo> lie_catalog_info();

JordanAlgebra j19();
JordanAlgebra kac_k();
JordanAlgebra trunc_poly(int k);                 // 3 <= k <= 8
JordanAlgebra full_matrix(int m, int n);         // 1 <= m+n <= 3
JordanAlgebra form_algebra(int p, int q2);       // p + q2 <= 5, q2 even
JordanAlgebra dt_algebra(const Rational& t);     // t not in {0, -1}

/// "j19", "kacK", "trunc_poly:5", "full_matrix:1,1", "form:1,2", "dt:1/2".
JordanAlgebra jordan_catalog(const std::string& spec);
bool is_jordan_catalog_name(const std::string& spec);
bool is_external(const std::string& spec);

SuperAlgebra gl(int m, int n);
SuperAlgebra sl(int m, int n);
SuperAlgebra psl(int n);
SuperAlgebra pgl(int n);
SuperAlgebra pe(int n);
SuperAlgebra spe(int n);
SuperAlgebra q(int n);
SuperAlgebra sq(int n);
SuperAlgebra psq(int n);
SuperAlgebra pq(int n);
/// Exterior algebra with the Poisson bracket; Z-degree |S| - 2.
SuperAlgebra poisson(int n);
SuperAlgebra h_tilde(int n);
SuperAlgebra h(int n);
SuperAlgebra w(int n);
/// KC ⋉ H~(n) inside W(n).
SuperAlgebra kc_h_tilde(int n);
/// KC ⋉ (H~(n-2) ⋉ Λ(n-2)).
SuperAlgebra kc_h_tilde_lambda(int n);

/// "gl:2,1", "sl:1,2", "psl:2", "pgl:2", "pe:3", "spe:3", "q:2", "sq:2",
/// "psq:3", "pq:2", "Lambda:3", "Htilde:4", "H:4", "W:3", "KCHtilde:3",
/// "KCHtildeLambda:4".
SuperAlgebra lie_catalog(const std::string& spec);
bool is_lie_catalog_name(const std::string& spec);

/// Catalog Lie entries expected to be simple (zero center, derived = self).
std::vector<std::string> simple_lie_entries();

/// Every Jordan catalog instance exercised by the acceptance suite.
std::vector<std::string> shipped_jordan_entries();
std::vector<std::string> shipped_lie_entries();

}  // namespace jtkk
