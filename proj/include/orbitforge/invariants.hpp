#pragma once

#include <vector>

#include "orbitforge/quadform.hpp"
#include "orbitforge/symbols.hpp"

namespace orbitforge {

/// Jordan type of a nilpotent matrix, parts in decreasing order. Part m has
/// multiplicity rank(T^{m-1}) - 2 rank(T^m) + rank(T^{m+1}). Throws
/// InvalidInput if T is not nilpotent.
std::vector<int> jordan_partition(const Matrix& t);

/// Smallest k with Q identically zero on T^k(ker T^m).
int chi_of(const QuadraticSpace& space, const Matrix& t, int m);

/// The symbol read off from T directly: Jordan parts with their
/// multiplicities and chi_of at each part.
Symbol measured_symbol(const QuadraticSpace& space, const Matrix& t);

}  // namespace orbitforge
