#pragma once

#include "hstar/int_matrix.hpp"

namespace hstar {

/// U * M * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithNormalForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
};

/// Pivot rule: the entry of smallest nonzero absolute value in the active
/// submatrix, scanning row by row; ties go to the lowest index. The rule is
/// fixed so outputs are reproducible.
SmithNormalForm smith_normal_form(const IntMatrix& m);

/// U * M == H, U unimodular. H is lower triangular in the echelon sense: the
/// pivot of row i sits strictly right of the pivot of row i-1, pivots are
/// positive and every entry below a pivot is reduced into [0, pivot).
struct HermiteNormalForm {
  IntMatrix H;
  IntMatrix U;
};

/// Requires full row rank; raises RankDeficient otherwise.
HermiteNormalForm hermite_normal_form(const IntMatrix& m);

/// Basis of the row lattice of an arbitrary integer matrix: the nonzero rows
/// of its Hermite form, in order. Rank-deficient input is fine here.
IntMatrix row_lattice_basis(const IntMatrix& m);

/// det(M) * M^{-1}, which is integral. `det` receives det(M); raises
/// Degenerate for singular input.
IntMatrix scaled_inverse(const IntMatrix& m, BigInt& det);

}  // namespace hstar
