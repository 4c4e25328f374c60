#ifndef QWB_KAROUBI_HPP
#define QWB_KAROUBI_HPP

#include "qwb/phi.hpp"

namespace qwb {

/// Object of the idempotent splitting completion of the module category:
/// a base together with an idempotent family module.
struct KarObject {
  VCat base;
  VModule theta;  // X -> X, theta.theta = theta
  PhiFamily family;
};

std::vector<std::string> validate_kar(const KarObject& k);

/// Morphism (X,theta) -> (X',theta'): a family module phi: X -> X' absorbed
/// by both idempotents.
struct KarMorphism {
  KarObject src, tgt;
  VModule phi;
};

bool is_kar_morphism(const KarObject& a, const KarObject& b, const VModule& phi);

KarMorphism kar_identity(const KarObject& k);
/// f: a->b first, then g: b->c.
KarMorphism kar_compose(const KarMorphism& f, const KarMorphism& g);

/// The concrete splitting of -.theta on PhiX.
struct SplitS {
  PhiPresheafCat PhiX;
  std::vector<int> s_objs;  // PhiX indices of S(X,theta) = {psi | psi.theta = psi}
  VCat S;
  std::vector<int> r;        // retraction PhiX -> S, psi -> psi.theta
  VFunctor theta_hat;        // X -> S, corestricted mate of theta
  VModule theta_hat_plus;    // X -> S
  VModule theta_hat_upper;   // S -> X
  VModule omega;             // S -> S, theta_hat_plus then theta_hat_upper
};

SplitS split_S(const KarObject& k, std::uint64_t cap = kDefaultCap);

/// I(X) = (X, theta) from a Phi-distributivity witness.
KarObject split_I(const PhiCcdWitness& w);

/// f^#: the kar morphism (X',theta') -> (X,theta) induced by a
/// Phi-cocontinuous f: X -> X' (theta' first, then f^*, then theta).
VModule functor_image(const VFunctor& f, const VModule& thetaX, const VModule& thetaY);

struct RoundtripReport {
  bool forward_back = false;  // x -> x^*.theta -> Sup gives x (up to equivalence)
  bool back_forward = false;  // psi -> Sup psi -> (Sup psi)^*.theta gives psi
  bool hat_identities = false;  // hat-theta^+ . hat-theta_+ = theta and the
                                // other composite = omega
  std::vector<std::string> notes;
  bool ok() const { return forward_back && back_forward && hat_identities; }
};

/// X vs S(I(X)) for a Phi-distributive X.
RoundtripReport roundtrip_SI(const PhiCcdWitness& w, std::uint64_t cap = kDefaultCap);
/// (X,theta) vs I(S(X,theta)); also certifies the hat-module identities.
RoundtripReport roundtrip_IS(const KarObject& k, std::uint64_t cap = kDefaultCap);

struct GeneralSplitResult {
  std::optional<VFunctor> section;  // t: X -> PhiX with h.t = 1 and t -| h
  int section_count = 0;            // sections found by the full search
};

/// Splitting search for an algebra h: PhiX -> X.
GeneralSplitResult general_split(const PhiPresheafCat& PhiX, const VFunctor& h);

/// All idempotent family modules on X.
std::vector<VModule> idempotent_modules(const VCat& X, const PhiFamily& fam,
                                        std::uint64_t cap = kDefaultCap);

/// Isomorphism in kar: a pair of mutually inverse KarMorphisms exists.
bool kar_isomorphic(const KarObject& a, const KarObject& b, std::uint64_t cap = kDefaultCap);

}  // namespace qwb

#endif
