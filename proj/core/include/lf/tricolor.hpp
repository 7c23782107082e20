#pragma once

#include <gmpxx.h>

#include <vector>

#include "lf/diagram.hpp"

namespace lf {

struct ColoringSpace {
  int dimension = 0;
  mpz_class count = 1;                 // 3^dimension
  std::vector<std::vector<int>> basis;  // arc -> GF(3)
  bool colorable() const { return count > 3; }
};

/// Solutions over GF(3): 2*over = under_in + under_out at every crossing and
/// one common colour on all arcs at each graph vertex.
ColoringSpace count_tricolorings(const Diagram& d);

/// The linear system behind count_tricolorings, one row per equation.
std::vector<std::vector<int>> tricoloring_equations(const Diagram& d);

/// True iff the arc colouring satisfies every equation.
bool is_tricoloring(const Diagram& d, const std::vector<int>& colours);

}  // namespace lf
