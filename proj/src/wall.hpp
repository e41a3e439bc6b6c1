#pragma once

#include "discform.hpp"
#include "lattice.hpp"
#include <array>

namespace k3lat {

// T = U + U + <-1> + <-1> with its standard basis {e1,...,e6}; Y-vectors use
// the basis {2g1,2g2,2g3,2g4,g5+g6,g5-g6} of the sublattice of special
// divisor classes. Conversions between the two systems are explicit.

using TVector = std::array<Int, 6>;
using YVector = std::array<Int, 6>;

const IntLattice& lattice_t();      // U+U+<-1>^2
const IntLattice& lattice_t2();     // T(2) = U(2)^2+A1^2
const FiniteQuadraticForm& q_t2();  // on the standard generators g_i/2

enum class VectorType { ordinary, characteristic };

Int t_norm(const TVector& x);
bool t_primitive(const TVector& x);

VectorType vector_type(const TVector& x);  // requires primitive
TVector canonical_rep(const Int& norm, VectorType type);
bool orbit_equivalent(const TVector& x1, const TVector& x2);

Rat delta_of_t(const TVector& x);
Int delta_of_y(const YVector& y);  // requires gcd 1

TVector embed_y(const YVector& y);            // (2y1,2y2,2y3,2y4,y5+y6,y5-y6)
std::optional<YVector> unembed(const TVector& x);  // inverse when the shape fits

struct YClassification {
    VectorType parity_case;
    TVector representative;
    Int delta;
};
YClassification classify_y(const YVector& y);

int n_delta(const Int& delta);  // {15,10,6,1}; errors for delta = 3 mod 4

// class of the primitive representative in T(2)*/T(2) = F_2^6, coordinates
// w.r.t. the standard generators g_i/2
std::array<int, 6> f2_image(const YVector& y);

IntLattice complement_in_t(const TVector& x);

struct RationalFormClass {
    int rank = 0;
    SignaturePair signature;
    Rat disc_squarefree;            // representative of disc mod squares
    std::map<Int, int> hasse;       // place -> symbol; place 0 = infinity
};
RationalFormClass rational_class_of_complement(const TVector& x);
RationalFormClass rational_class_of_diag(const std::vector<Rat>& coeffs);

// Hasse symbols at odd places absent from both factorizations are +1
bool same_rational_class(const RationalFormClass& a, const RationalFormClass& b);

// a fixed list of verified integer isometries of T (for property tests)
std::vector<IntMat> t_isometry_samples();

// the component-exchange isometries: c = diag(1,1,-1,-1,1,1) swaps the two
// components of the period domain, a = diag(1,1,1,1) + swap(e5,e6) has
// determinant -1
IntMat component_exchange_c();
IntMat component_exchange_a();

} // namespace k3lat
