#pragma once
// Small exact dense linear algebra over Q: just enough to solve the linear
// systems the engine meets (membership tests in number fields, cofactor
// identities).  Sizes are tiny, so plain fraction Gaussian elimination is the
// right tool.

#include <optional>
#include <vector>

#include "arclift/rational.hpp"

namespace arclift {

using QMatrix = std::vector<std::vector<Rational>>;
using QVector = std::vector<Rational>;

// One solution of A x = b (any solution if the system is underdetermined),
// or nullopt if the system is inconsistent.  A is row-major, rows may be
// fewer or more than columns.
std::optional<QVector> solve_linear(QMatrix a, QVector b);

}  // namespace arclift
