// SPDX-License-Identifier: Apache-2.0
//
// Dense exact linear algebra over Q for the small matrices used here
// (dimension <= 8).
#pragma once

#include <optional>
#include <vector>

#include "hnbound/scalar.hpp"

namespace hnb {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

RationalMatrix identity_matrix(int n);
int matrix_rank(RationalMatrix m);
Rational determinant(RationalMatrix m);
/// nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);
/// A nonzero vector v with m v = 0, when the null space is nontrivial.
std::optional<RationalVector> null_vector(const RationalMatrix& m, int cols);
RationalMatrix transpose(const RationalMatrix& m);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
bool is_symmetric(const RationalMatrix& m);

}  // namespace hnb
