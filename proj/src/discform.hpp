#pragma once

#include "lattice.hpp"
#include <map>
#include <optional>

namespace k3lat {

// finite abelian group with Q/Z bilinear and Q/2Z quadratic form, presented
// by independent generators of the given orders
class FiniteQuadraticForm {
  public:
    FiniteQuadraticForm(std::vector<Int> orders, RatMat b, RatVec q);

    std::size_t ngens() const { return orders_.size(); }
    const std::vector<Int>& orders() const { return orders_; }
    Int group_order() const;

    // elements are exponent tuples reduced mod orders
    using Elem = std::vector<Int>;
    Elem zero() const { return Elem(ngens(), 0); }
    Elem reduce(Elem e) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem smul(const Int& k, const Elem& a) const;

    Rat q_of(const Elem& e) const;           // in [0,2)
    Rat b_of(const Elem& a, const Elem& b) const;  // in [0,1)
    Rat q_gen(std::size_t i) const { return q_[i]; }
    Rat b_gen(std::size_t i, std::size_t j) const { return b_[i][j]; }

    Int elem_order(const Elem& e) const;

    std::vector<Elem> all_elements() const;  // requires group_order() <= 1024

    FiniteQuadraticForm negate() const;
    FiniteQuadraticForm orthogonal_sum(const FiniteQuadraticForm& other) const;

    bool is_two_elementary() const;
    bool q_integer_valued() const;  // checked on all elements when order <= 2^10

    bool operator==(const FiniteQuadraticForm&) const = default;

  private:
    std::vector<Int> orders_;
    RatMat b_;
    RatVec q_;
};

// map between finite quadratic forms given by generator images
struct FiniteIsometry {
    std::vector<FiniteQuadraticForm::Elem> images;

    FiniteQuadraticForm::Elem apply(const FiniteQuadraticForm& target,
                                    const FiniteQuadraticForm::Elem& e) const;
};

struct DiscGroup {
    std::vector<Int> invariant_factors;  // d_i >= 2, d_i | d_{i+1}
    RatMat generators;                   // rows: rational coords in the lattice basis
};

DiscGroup discriminant_group(const IntLattice& l);

// discriminant form of an even lattice on the Smith-normal-form generators
FiniteQuadraticForm discriminant_form(const IntLattice& l);

// discriminant form presented on explicitly given independent generators
// (rational coordinate rows); orders must annihilate the classes
FiniteQuadraticForm form_on_generators(const IntLattice& l, const std::vector<Int>& orders,
                                       const RatMat& generators);

// exponent tuple of the class of a dual vector w.r.t. the generators of
// discriminant_group(l)
FiniteQuadraticForm::Elem class_of(const IntLattice& l, const RatVec& dual_vec);

struct NikulinInvariants {
    SignaturePair signature;
    int length = 0;
    bool integer_parity = false;  // true iff q takes only integer values
    bool operator==(const NikulinInvariants&) const = default;
};

NikulinInvariants nikulin_invariants(const IntLattice& l);
bool nikulin_equivalent(const IntLattice& l1, const IntLattice& l2);

// anti-isometry sigma with q2(sigma x) = -q1(x), b2 = -b1; lexicographically
// first witness, or nullopt if none exists
std::optional<FiniteIsometry> find_anti_isometry(const FiniteQuadraticForm& f1,
                                                 const FiniteQuadraticForm& f2);
// isometry (q2 = q1, b2 = b1)
std::optional<FiniteIsometry> find_isometry(const FiniteQuadraticForm& f1,
                                            const FiniteQuadraticForm& f2);

bool verify_anti_isometry(const FiniteQuadraticForm& f1, const FiniteQuadraticForm& f2,
                          const FiniteIsometry& sigma);

// orbit partition of the group elements under the full isometry group of
// (b, q); pairwise equivalence is decided by backtracking a full isometry
// with a prescribed image, orbits merged by union-find
std::vector<std::vector<FiniteQuadraticForm::Elem>> isometry_orbits(const FiniteQuadraticForm& f);

// overlattice generated by L and the given dual classes (rational coordinate
// rows); classes must generate an isotropic subgroup
IntLattice glue_overlattice(const IntLattice& l, const RatMat& glue_classes);

struct EnhanceResult {
    IntLattice ns;
    IntLattice t;
};

// lattice enhancement: declare v in M algebraic, glue L + <v^2> by the
// matched order-2 classes
EnhanceResult enhance(const IntLattice& l, const IntLattice& m, const FiniteIsometry& gamma,
                      const IntVec& v);

} // namespace k3lat
