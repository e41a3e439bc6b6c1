#pragma once

#include "matrix.hpp"
#include <array>

namespace k3lat {

// exact arithmetic in Q(i)
struct GaussianScalar {
    Rat re, im;

    GaussianScalar() : re(0), im(0) {}
    GaussianScalar(Rat r) : re(std::move(r)), im(0) {}
    GaussianScalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    GaussianScalar operator+(const GaussianScalar& o) const { return {re + o.re, im + o.im}; }
    GaussianScalar operator-(const GaussianScalar& o) const { return {re - o.re, im - o.im}; }
    GaussianScalar operator-() const { return {-re, -im}; }
    GaussianScalar operator*(const GaussianScalar& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianScalar conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }
    GaussianScalar inverse() const {
        Rat n = norm();
        require(n != 0, "division by zero in Q(i)");
        return {re / n, -im / n};
    }
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_gaussian_integer() const { return den(re) == 1 && den(im) == 1; }
    bool operator==(const GaussianScalar&) const = default;
};

using GaussMat = std::vector<std::vector<GaussianScalar>>;
using GaussVec = std::vector<GaussianScalar>;

GaussMat gmat_identity(std::size_t n);
GaussMat gmat_mul(const GaussMat& a, const GaussMat& b);
GaussMat gmat_conj_transpose(const GaussMat& a);
GaussMat gmat_transpose(const GaussMat& a);
GaussMat gmat_inverse(GaussMat a);
GaussianScalar gmat_det(const GaussMat& a);
bool gmat_eq(const GaussMat& a, const GaussMat& b);
bool gmat_gaussian_integral(const GaussMat& a);

const GaussMat& j_matrix();  // the 4x4 block matrix J

// A* (iJ) A = iJ, i.e. A preserves the hermitian form of signature (2,2)
bool is_u22(const GaussMat& a);
bool is_su22(const GaussMat& a);  // additionally det A = 1

// induced map on Lambda^2 V in the signed pair basis
// f1=e1^e2, f2=-e3^e4, f3=e1^e4, f4=-e2^e3, f5=e1^e3, f6=e2^e4
GaussMat wedge_square(const GaussMat& a);

// Gram matrices on the f-basis: the wedge form -q and the hermitian form -g
IntMat minus_q_gram_f();
RatMat minus_g_gram_f();

// phi: SU(2,2;Z[i]) -> SO(T)+; conjugates wedge_square by the f -> g change
// of basis; errors on non-integral results
IntMat phi(const GaussMat& a);

IntMat tau_tilde();

// skew matrix M(y) attached to a Y-vector
GaussMat m_of_y(const std::array<Int, 6>& y);
GaussianScalar pfaffian(const GaussMat& skew4);

// the exact equivariance law tA M(y) A = M(S0 phi(A)^-1 S0^-1 y); the fixed
// unimodular S0 matches the M(y) slot conventions to our Y-coordinates
bool pfaffian_equivariance(const GaussMat& a, const std::array<Int, 6>& y);
const IntMat& equivariance_twist();  // S0 in Y-coordinates

bool in_h2(const GaussMat& w2);  // (W - W*)/(2i) positive definite
bool divisor_membership(const GaussMat& w2, const std::array<Int, 6>& y);

// Pluecker coordinates (f-basis) of the row span of (W | I2)
GaussVec period_point(const GaussMat& w2);
GaussianScalar plucker_wedge_value(const GaussVec& z);  // <z,z> w.r.t. -q; 0 on the quadric
Rat hermitian_norm(const GaussVec& z);                  // z* (-g) z, real

// verified sample elements of SU(2,2;Z[i]) (products of unitary
// transvections, J, and diag(i,-i,i,-i)); deterministic for a given seed
std::vector<GaussMat> su22_generators();
std::vector<GaussMat> su22_samples(std::size_t count, std::uint64_t seed, int word_len = 5);

// phi transported to Y-coordinates (integer matrix)
IntMat phi_y(const GaussMat& a);

} // namespace k3lat
