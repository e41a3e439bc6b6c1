#pragma once

#include "exact.hpp"
#include <map>
#include <set>
#include <vector>

namespace k3lat {

// places of Q: 0 encodes the infinite place, otherwise a prime
using Place = Int;
using RamSet = std::set<Place>;

// deterministic trial division up to 10^6; errors beyond
std::map<Int, int> factorize(Int n);
std::map<Int, int> factorize_rat(const Rat& r);  // negative exponents for the denominator

bool is_prime_small(const Int& p);

// standard local Hilbert symbol (a,b)_p, exact
int hilbert_symbol(const Rat& a, const Rat& b, const Place& p);

struct QuaternionAlgebra {
    Rat a, b;
};

RamSet ramification(const QuaternionAlgebra& q);
bool quat_is_split(const QuaternionAlgebra& q);

bool sum_of_two_squares(const Int& delta);

RamSet brauer_tensor(const RamSet& r1, const RamSet& r2);

struct DiagonalQuadraticForm {
    std::vector<Rat> coefficients;  // all nonzero
};

int hasse_invariant(const DiagonalQuadraticForm& f, const Place& p);
bool rational_equivalence(const DiagonalQuadraticForm& f1, const DiagonalQuadraticForm& f2);

Rat squarefree_part(const Rat& r);
Rat discriminant_class(const DiagonalQuadraticForm& f);  // squarefree rep of the product

// even Clifford algebra of a diagonal form of rank 3, 4 or 5 (rank-2 helper
// returns the center discriminant only)
struct EvenClifford {
    int rank = 0;
    // rank 3: quaternion symbol; rank 4: symbol with center extension by
    // sqrt(d); rank 5: Brauer class of a quaternion tensor product
    std::vector<std::pair<Rat, Rat>> symbols;
    Rat center_disc = 0;  // rank 4 only: d = (-1)^m a_1...a_m
    RamSet brauer;        // reduced Brauer class (rank 3 and 5)
};
EvenClifford even_clifford(const DiagonalQuadraticForm& f);

struct KSReport {
    Int delta;
    RamSet clifford_class;   // Brauer class of Cl^+(diag(2,-2,-2,-2,2*delta))
    RamSet minus_one_delta;  // class of (-1, delta)
    bool is_split = false;
    int ks_dimension = 16;
    std::string decomposition;
};
KSReport kuga_satake_report(const Int& delta);

} // namespace k3lat
