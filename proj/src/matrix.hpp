#pragma once

#include "exact.hpp"
#include <vector>

namespace k3lat {

using IntVec = std::vector<Int>;
using IntMat = std::vector<std::vector<Int>>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>;

IntMat identity_mat(std::size_t n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_apply(const IntMat& a, const IntVec& v);
IntMat mat_transpose(const IntMat& a);
RatMat rat_mul(const RatMat& a, const RatMat& b);
RatMat to_rat(const IntMat& a);

// exact determinant by fraction-free (Bareiss) elimination
Int det_bareiss(IntMat a);

// exact determinant over Q by ordinary elimination (independent route, used as oracle)
Rat det_gauss(RatMat a);

// inertia (pos, neg, zero) of a symmetric rational matrix by symmetric
// elimination with the standard zero-pivot repair
struct Inertia {
    int pos = 0, neg = 0, zero = 0;
};
Inertia symmetric_inertia(RatMat a);

// diagonalization of a symmetric rational matrix by simultaneous row/column
// operations; returns the diagonal entries (congruent diagonal form)
RatVec symmetric_diagonalize(RatMat a);

// rational inverse; throws on singular input
RatMat rat_inverse(RatMat a);

// Smith normal form: U*a*V = S diagonal with s1 | s2 | ... ; returns S
// diagonal entries (non-negative) and the transforms.
struct SmithResult {
    IntVec diag;
    IntMat left;   // U
    IntMat right;  // V
};
SmithResult smith_normal_form(IntMat a);

// basis of the saturated integer kernel of the map x -> a*x (a is m x n),
// returned as columns stacked into rows of the result (each row one basis
// vector of length n)
IntMat integer_kernel(const IntMat& a);

// Hermite-style row reduction of a rational matrix spanning a lattice in Q^n:
// returns a basis (rows) of the Z-span of the input rows. Rows may be
// linearly dependent; the result has full row rank.
RatMat lattice_row_basis(const RatMat& rows);

} // namespace k3lat
