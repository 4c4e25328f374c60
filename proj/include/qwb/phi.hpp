#ifndef QWB_PHI_HPP
#define QWB_PHI_HPP

#include <functional>

#include "qwb/presheaf.hpp"

namespace qwb {

/// A class of modules selected columnwise: a module X -> Y belongs to the
/// family iff every column (a presheaf on X) passes `member`.
struct PhiFamily {
  std::string name;
  std::function<bool(const VCat&, const Vec&)> member;
};

/// Every presheaf.
PhiFamily family_all();
/// join_x psi(x) = top. For non-integral quantales the two readings of
/// "inhabited" diverge; this one is implemented and callers are warned.
PhiFamily family_inhabited();
/// psi preserves finite infima of copresheaves: psi.(phi1 /\ phi2) =
/// psi.phi1 /\ psi.phi2 and psi.T = T, with . the scalar composite
/// join_x phi(x) (x) psi(x). Boolean members are the directed (irreducible)
/// down-sets.
PhiFamily family_finite_sup();
/// psi = u (x) x^* for some object x and quantale element u.
PhiFamily family_tensor();

/// Columnwise module membership.
bool module_in_family(const PhiFamily& fam, const VModule& phi);

/// All modules X -> Y (columns restricted to fam), lexicographic by column.
std::vector<VModule> enumerate_modules(const VCat& X, const VCat& Y, const PhiFamily& fam,
                                       std::uint64_t cap = kDefaultCap);

struct SaturationReport {
  long checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Closure of the family under composition, checked in two equivalent forms:
/// psi.f^* and psi.g_* stay in the family (for functors f and functors g
/// whose companion is in the family), and psi.phi stays in the family for
/// family modules phi: X -> Y and psi in Phi[Y]. The latter is the general
/// subcategory closure, reduced columnwise to target 1.
SaturationReport check_saturated(const PhiFamily& fam, const std::vector<VCat>& universe,
                                 std::uint64_t cap = kDefaultCap);

struct PhiPresheafCat {
  VCat base;
  PhiFamily family;
  std::vector<Vec> elements;  // the members of Phi[X], in PX order
  VCat cat;
  VFunctor yphi;  // corestricted Yoneda, base -> cat

  int size() const { return static_cast<int>(elements.size()); }
  const Vec& at(int i) const { return elements[static_cast<size_t>(i)]; }
  int find(const Vec& v) const;
};

PhiPresheafCat phi_presheaves(const VCat& X, const PhiFamily& fam,
                              std::uint64_t cap = kDefaultCap);

/// Phi-cocompleteness: the left adjoint of the corestricted Yoneda.
std::optional<VFunctor> phi_sup(const PhiPresheafCat& PhiX);

/// Phi-distributivity data: t -| sup -| yphi.
struct PhiCcdWitness {
  PhiPresheafCat PhiX;
  VFunctor sup;   // PhiX.cat -> base
  VFunctor t;     // base -> PhiX.cat
  VModule theta;  // base -> base
};

std::optional<PhiCcdWitness> phi_ccd_witness(const VCat& X, const PhiFamily& fam,
                                             std::uint64_t cap = kDefaultCap);

/// The equaliser criterion: A = {x | yphi(x) = t(x)}, i its inclusion;
/// algebraic iff i is Phi-dense (columns of i_* in the family) and
/// i_* . i^* = theta.
bool is_phi_algebraic(const PhiCcdWitness& w);

/// Soberness via the right-adjoint part of PhiX: the corestricted Yoneda
/// must be bijective on objects up to equivalence onto
/// {psi in PhiX | psi has a left adjoint}.
bool is_phi_sober(const VCat& X, const PhiFamily& fam, std::uint64_t cap = kDefaultCap);

/// f: A -> X is Phi-dense when its companion lies in the family.
bool is_phi_dense(const PhiFamily& fam, const VFunctor& f);

/// Kleisli composite of family modules phi: X -> Y, psi: Y -> Z computed as
/// mate(psi.phi) = m^Phi . Phi(mate phi) . mate psi; true when it agrees
/// with plain module composition.
bool kleisli_agrees(const VModule& phi, const VModule& psi, const PhiFamily& fam,
                    std::uint64_t cap = kDefaultCap);

}  // namespace qwb

#endif
