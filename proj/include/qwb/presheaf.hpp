#ifndef QWB_PRESHEAF_HPP
#define QWB_PRESHEAF_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "qwb/vmod.hpp"

namespace qwb {

/// A presheaf on X (module X -> 1), stored as a vector over the objects of X.
using Vec = std::vector<Elem>;

constexpr std::uint64_t kDefaultCap = 1000000;

/// Contravariant presheaf law: join_y a(x,y) (x) psi(y) <= psi(x).
bool is_presheaf(const VCat& X, const Vec& psi);
/// Covariant presheaf (module 1 -> X) law: join_x phi(x) (x) a(x,y) <= phi(y).
bool is_copresheaf(const VCat& X, const Vec& phi);

/// [phi, psi] = meet_x hom(phi(x), psi(x)).
Elem psh_hom(const Quantale& q, const Vec& phi, const Vec& psi);

/// The representable x^* = a(-, x).
Vec yoneda_vec(const VCat& X, int x);

/// The presheaf V-category PX: all presheaves in lexicographic vector order,
/// equipped with the pointwise-hom structure.
struct PresheafCat {
  VCat base;
  std::vector<Vec> elements;
  VCat cat;
  std::map<Vec, int> index;

  int size() const { return static_cast<int>(elements.size()); }
  const Vec& at(int i) const { return elements[static_cast<size_t>(i)]; }
  /// Index of a vector, or -1 when it is not a presheaf.
  int find(const Vec& v) const;
};

PresheafCat build_presheaves(const VCat& X, std::uint64_t cap = kDefaultCap);

/// All covariant presheaves (modules 1 -> X) in lexicographic order.
std::vector<Vec> enumerate_copresheaves(const VCat& X, std::uint64_t cap = kDefaultCap);

/// All contravariant presheaves as raw vectors, without building the
/// presheaf category (no quadratic hom table).
std::vector<Vec> enumerate_presheaves(const VCat& X, std::uint64_t cap = kDefaultCap);

/// Yoneda embedding as a V-functor X -> PX.
VFunctor yoneda(const PresheafCat& PX);

/// Module X -> Y as a map PX -> PY by psi -> psi . phi  (precomposition,
/// i.e. compose(phi.rel, column)); used for inverse images and Kleisli data.
Vec precompose(const VRel& phi, const Vec& psi);

/// Direct image Pf = - . f^* : PX -> PY and inverse image - . f_* : PY -> PX.
std::pair<VFunctor, VFunctor> presheaf_functor(const VFunctor& f, const PresheafCat& PX,
                                               const PresheafCat& PY);

/// Multiplication of the presheaf monad, pointwise:
/// m(Psi)(x) = join_phi phi(x) (x) Psi(phi), for Psi a presheaf on PX.
Vec monad_mult(const PresheafCat& PX, const Vec& Psi);

struct KzReport {
  bool sampled = false;          // PPX too large, laws checked on generated witnesses only
  bool unit_laws = false;        // m . P(y) = 1 = m . y_P
  bool assoc_law = false;        // m . Pm = m . m_P (on enumerated/witness Psi)
  bool oplax = false;            // P(y_X) <= y_PX pointwise
  bool algebra_iff_retract = false;  // h . y = 1  <=>  algebra, and then h -| y
  std::vector<std::string> notes;
  bool ok() const { return unit_laws && assoc_law && oplax && algebra_iff_retract; }
};

KzReport kz_check(const VCat& X, std::uint64_t cap = kDefaultCap);

/// The full sub-V-category of PX on presheaves with a left adjoint
/// (Lawvere/Cauchy points); returns the member indices into PX.
std::vector<int> right_adjoint_presheaves(const PresheafCat& PX);

/// True when psi: X -> 1 has a left adjoint phi: 1 -> X.
bool is_right_adjoint_presheaf(const VCat& X, const Vec& psi);

}  // namespace qwb

#endif
