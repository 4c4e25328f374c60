#ifndef QWB_DISTRIBUTIVITY_HPP
#define QWB_DISTRIBUTIVITY_HPP

#include "qwb/presheaf.hpp"

namespace qwb {

/// Representative of the supremum of a presheaf: the x0 with
/// a(x0, z) = extend(a, psi)(z) for all z, if any.
std::optional<int> supremum(const VCat& X, const Vec& psi);

/// Left adjoint of the Yoneda embedding, if X is cocomplete.
std::optional<VFunctor> cocomplete_sup(const PresheafCat& PX);

/// Complete distributivity data: t -| sup -| yoneda, with theta the
/// totally-below module of t.
struct CcdWitness {
  VCat base;
  PresheafCat PX;
  VFunctor sup;   // PX -> X
  VFunctor t;     // X -> PX
  VModule theta;  // X -> X, theta(x,y) = t(y)(x)
};

std::optional<CcdWitness> ccd_witness(const VCat& X, std::uint64_t cap = kDefaultCap);

/// Object indices of the equaliser S(L) = {x | t(x) = y(x)} (totally compact
/// elements), in object order.
std::vector<int> totally_compact(const CcdWitness& w);

/// eta_X : X -> S(D X), the corestricted Yoneda embedding. `sd_objs` are the
/// PX indices forming S(PX).
VFunctor eta_functor(const VCat& X, const PresheafCat& PX, const std::vector<int>& sd_objs,
                     const VCat& SD);

/// eps_L : L -> P(S L), x -> restriction of x^* to SL.
VFunctor eps_functor(const CcdWitness& w, const std::vector<int>& sl_objs,
                     const PresheafCat& PSL);

/// Left adjoint of eps_L: psi in P(SL) -> Sup_L(psi . i^*).
VFunctor eps_left_adjoint(const CcdWitness& w, const std::vector<int>& sl_objs,
                          const PresheafCat& PSL);

/// Every x is a supremum of the totally compact elements below it
/// (up to object equivalence when L is not separated).
bool is_totally_algebraic(const CcdWitness& w);

/// x (+) u: supremum of the presheaf a(-, x) (x) u. Empty when the presheaf
/// has no representative (X not cocomplete enough).
std::optional<int> tensor_action(const VCat& X, int x, Elem u);

/// Direct oracle for boolean X: theta(x,y) = top iff every subset S with
/// y <= lub(S) has x below some member of S. Quantifies over raw subsets and
/// computes least upper bounds by scanning the underlying order, so it shares
/// no code with the presheaf-based witness it cross-checks.
VRel totally_below_oracle(const VCat& X);

/// Direct lattice-theoretic distributivity test for boolean lattices:
/// meet distributes over join.
bool is_distributive_lattice(const VCat& X);

/// Boolean X is a (complete) lattice: all binary joins/meets plus top and
/// bottom exist in the underlying order.
bool is_lattice(const VCat& X);

}  // namespace qwb

#endif
