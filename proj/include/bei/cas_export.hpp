#pragma once

#include "bei/graph.hpp"
#include "bei/ideal.hpp"

#include <string>

namespace bei {

enum class CasDialect { CoCoA5, Macaulay2 };

struct CasOptions {
    CasDialect dialect = CasDialect::Macaulay2;
    // 0 for the rationals, otherwise a prime p for the field with p elements.
    int characteristic = 0;
};

// Script that declares K[x_1..x_n, y_1..y_n], builds J_G and every prime of
// the decomposition, checks that J_G equals their intersection, and prints
// the minimal generator count, dimension and depth of S/J_G.
std::string export_cas_script(const Graph& g, const Decomposition& d,
                              const CasOptions& options = {});

} // namespace bei
