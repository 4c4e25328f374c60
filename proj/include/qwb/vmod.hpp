#ifndef QWB_VMOD_HPP
#define QWB_VMOD_HPP

#include <optional>

#include "qwb/vcat.hpp"

namespace qwb {

/// A module (distributor) between V-categories: a V-relation absorbing both
/// structure matrices under composition.
struct VModule {
  VCat dom, cod;
  VRel rel;

  friend bool operator==(const VModule& a, const VModule& b) { return a.rel == b.rel; }
};

bool is_module(const VCat& X, const VCat& Y, const VRel& r);

/// Identity module of X: its structure matrix.
VModule identity_module(const VCat& X);

/// Module composition, phi: X->Y first, psi: Y->Z second; result X->Z.
VModule mod_compose(const VModule& phi, const VModule& psi);

/// Companion f_* : X->Y, (x,y) -> b(f x, y).
VModule companion(const VFunctor& f);
/// Conjoint f^* : Y->X, (y,x) -> b(y, f x).
VModule conjoint(const VFunctor& f);

/// phi: X->Y is left adjoint to psi: Y->X when a <= psi.phi and phi.psi <= b.
bool check_adjunction(const VModule& phi, const VModule& psi);

/// Right adjoint of f, exhaustively searched via the g with f_* = g^*.
std::optional<VFunctor> functor_adjoint(const VFunctor& f);

/// Left adjoint of f, exhaustively searched via the g with g_* = f^*.
std::optional<VFunctor> functor_left_adjoint(const VFunctor& f);

/// Colimit of h: A->X weighted by psi: A->B, i.e. the f: B->X with
/// f_* = extend(h_*, psi). Searches a representative per object of B.
std::optional<VFunctor> weighted_colimit(const VFunctor& h, const VModule& psi);

}  // namespace qwb

#endif
