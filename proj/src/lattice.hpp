#pragma once

#include "matrix.hpp"
#include <optional>
#include <string>

namespace k3lat {

struct SignaturePair {
    int pos = 0, neg = 0;
    bool operator==(const SignaturePair&) const = default;
};

// A free finite-rank Z-module with a nondegenerate integer symmetric
// bilinear form, immutable after construction.
class IntLattice {
  public:
    IntLattice() = default;  // the rank-0 lattice
    IntLattice(IntMat gram, std::string label = "");

    std::size_t rank() const { return gram_.size(); }
    const IntMat& gram() const { return gram_; }
    const std::string& label() const { return label_; }

    Int pair(const IntVec& a, const IntVec& b) const;
    Int norm(const IntVec& v) const { return pair(v, v); }

    Int determinant() const;
    SignaturePair signature() const;
    bool is_even() const;
    bool is_definite() const;

  private:
    IntMat gram_;
    std::string label_;
};

IntLattice make_standard(const std::string& name);
IntLattice lat_u();
IntLattice lat_a(int k);
IntLattice lat_d(int k);
IntLattice lat_e(int k);
IntLattice lat_diag(const Int& n);  // <n>

IntLattice direct_sum(const IntLattice& l1, const IntLattice& l2);
IntLattice rescale(const IntLattice& l, const Int& a);

bool is_primitive(const IntLattice& l, const IntVec& v);

// saturated orthogonal complement of a single vector; throws if degenerate
IntLattice orthogonal_complement(const IntLattice& l, const IntVec& v);

struct ScaleNorm {
    Int scale;     // gcd of all Gram entries
    Int norm_gcd;  // gcd of the values <x,x> over the lattice
    bool operator==(const ScaleNorm&) const = default;
};
ScaleNorm scale_and_norm(const IntLattice& l);

// isometry test for definite lattices of rank <= 12 by short-vector
// backtracking; rejects indefinite input
bool is_isometric_definite(const IntLattice& l1, const IntLattice& l2);

// all vectors of a positive-definite lattice with given norm (up to sign:
// one of v, -v is listed)
std::vector<IntVec> vectors_of_norm(const IntMat& posdef_gram, const Int& target);

} // namespace k3lat
