#pragma once

#include "cluster/laurent.hpp"
#include "cluster/matrix.hpp"
#include "doctest.h"
#include "generators.hpp"

namespace cluster {
inline doctest::String toString(const LaurentPolynomial& p) { return p.str().c_str(); }
inline doctest::String toString(const Matrix& m) { return ("\n" + format_matrix(m)).c_str(); }
}  // namespace cluster
