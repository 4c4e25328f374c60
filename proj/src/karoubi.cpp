#include "qwb/karoubi.hpp"

namespace qwb {

std::vector<std::string> validate_kar(const KarObject& k) {
  std::vector<std::string> out;
  if (!is_module(k.base, k.base, k.theta.rel)) out.push_back("theta is not a module");
  if (!(mod_compose(k.theta, k.theta) == k.theta)) out.push_back("theta is not idempotent");
  if (!module_in_family(k.family, k.theta)) out.push_back("theta is not a family module");
  return out;
}

bool is_kar_morphism(const KarObject& a, const KarObject& b, const VModule& phi) {
  if (!is_module(a.base, b.base, phi.rel)) return false;
  if (!module_in_family(a.family, phi)) return false;
  // phi absorbed on both sides: theta_a first, and theta_b last
  return mod_compose(a.theta, phi) == phi && mod_compose(phi, b.theta) == phi;
}

KarMorphism kar_identity(const KarObject& k) { return {k, k, k.theta}; }

KarMorphism kar_compose(const KarMorphism& f, const KarMorphism& g) {
  return {f.src, g.tgt, mod_compose(f.phi, g.phi)};
}

SplitS split_S(const KarObject& k, std::uint64_t cap) {
  SplitS sp;
  sp.PhiX = phi_presheaves(k.base, k.family, cap);
  const VCat& X = k.base;
  const Quantale& q = *X.q;
  auto retract = [&](const Vec& psi) {
    Vec out(static_cast<size_t>(X.size()), q.bottom());
    for (int x = 0; x < X.size(); ++x)
      for (int y = 0; y < X.size(); ++y)
        out[static_cast<size_t>(x)] =
            q.join(out[static_cast<size_t>(x)],
                   q.tensor(k.theta.rel.at(x, y), psi[static_cast<size_t>(y)]));
    return out;
  };
  std::vector<int> pos(static_cast<size_t>(sp.PhiX.size()), -1);
  for (int i = 0; i < sp.PhiX.size(); ++i)
    if (retract(sp.PhiX.at(i)) == sp.PhiX.at(i)) {
      pos[static_cast<size_t>(i)] = static_cast<int>(sp.s_objs.size());
      sp.s_objs.push_back(i);
    }
  sp.S = full_subcat(sp.PhiX.cat, sp.s_objs);
  sp.r.assign(static_cast<size_t>(sp.PhiX.size()), -1);
  for (int i = 0; i < sp.PhiX.size(); ++i) {
    int j = sp.PhiX.find(retract(sp.PhiX.at(i)));
    sp.r[static_cast<size_t>(i)] = pos[static_cast<size_t>(j)];
  }
  std::vector<int> hat(static_cast<size_t>(X.size()), -1);
  for (int x = 0; x < X.size(); ++x) {
    Vec col(static_cast<size_t>(X.size()));
    for (int y = 0; y < X.size(); ++y) col[static_cast<size_t>(y)] = k.theta.rel.at(y, x);
    int i = sp.PhiX.find(col);
    if (i < 0 || pos[static_cast<size_t>(i)] < 0)
      throw std::invalid_argument("split_S: mate of theta misses S(X,theta)");
    hat[static_cast<size_t>(x)] = pos[static_cast<size_t>(i)];
  }
  sp.theta_hat = VFunctor{X, sp.S, std::move(hat)};
  sp.theta_hat_plus = mod_compose(k.theta, companion(sp.theta_hat));
  sp.theta_hat_upper = mod_compose(conjoint(sp.theta_hat), k.theta);
  sp.omega = mod_compose(sp.theta_hat_upper, sp.theta_hat_plus);
  return sp;
}

KarObject split_I(const PhiCcdWitness& w) { return {w.PhiX.base, w.theta, w.PhiX.family}; }

VModule functor_image(const VFunctor& f, const VModule& thetaX, const VModule& thetaY) {
  return mod_compose(mod_compose(thetaY, conjoint(f)), thetaX);
}

RoundtripReport roundtrip_SI(const PhiCcdWitness& w, std::uint64_t cap) {
  RoundtripReport rep;
  const VCat& X = w.PhiX.base;
  KarObject k = split_I(w);
  SplitS sp = split_S(k, cap);
  rep.forward_back = true;
  rep.back_forward = true;
  for (int x = 0; x < X.size(); ++x) {
    // x^*.theta is the theta column at x, an element of S; Sup must return x
    int i = sp.s_objs[static_cast<size_t>(sp.theta_hat(x))];
    int wi = w.PhiX.find(sp.PhiX.at(i));
    if (wi < 0 || !objects_equivalent(X, w.sup(wi), x)) {
      rep.forward_back = false;
      rep.notes.push_back("Sup(x^*.theta) is not equivalent to x for " + X.objects[static_cast<size_t>(x)]);
    }
  }
  for (size_t j = 0; j < sp.s_objs.size(); ++j) {
    const Vec& psi = sp.PhiX.at(sp.s_objs[j]);
    int wi = w.PhiX.find(psi);
    int x = w.sup(wi);
    Vec col(static_cast<size_t>(X.size()));
    for (int y = 0; y < X.size(); ++y) col[static_cast<size_t>(y)] = w.theta.rel.at(y, x);
    if (col != psi) {
      rep.back_forward = false;
      rep.notes.push_back("(Sup psi)^*.theta differs from psi");
    }
  }
  rep.hat_identities = mod_compose(sp.theta_hat_plus, sp.theta_hat_upper) == k.theta &&
                       mod_compose(sp.theta_hat_upper, sp.theta_hat_plus) == sp.omega;
  return rep;
}

RoundtripReport roundtrip_IS(const KarObject& k, std::uint64_t cap) {
  RoundtripReport rep;
  SplitS sp = split_S(k, cap);
  KarObject kS{sp.S, sp.omega, k.family};
  // hat-theta_+ and hat-theta^+ are kar morphisms and compose to the two
  // kar identities: this is the (X,theta) ~ IS(X,theta) isomorphism
  rep.forward_back = is_kar_morphism(k, kS, sp.theta_hat_plus) &&
                     mod_compose(sp.theta_hat_plus, sp.theta_hat_upper) == k.theta;
  rep.back_forward = is_kar_morphism(kS, k, sp.theta_hat_upper) &&
                     mod_compose(sp.theta_hat_upper, sp.theta_hat_plus) == sp.omega &&
                     validate_kar(kS).empty();
  // S(X,theta) is Phi-distributive with theta_S = omega and
  // Sup^Phi_S = -.hat-theta_+
  rep.hat_identities = false;
  auto wS = phi_ccd_witness(sp.S, k.family, cap);
  if (!wS) {
    rep.notes.push_back("S(X,theta) is not Phi-distributive");
    return rep;
  }
  if (!(wS->theta.rel == sp.omega.rel)) {
    rep.notes.push_back("theta of S(X,theta) differs from omega");
    return rep;
  }
  bool supform = true;
  for (int i = 0; i < wS->PhiX.size(); ++i) {
    const Vec& Psi = wS->PhiX.at(i);
    // Psi . hat-theta_+ as a presheaf on X must be the S-element Sup(Psi)
    const Quantale& q = *k.base.q;
    Vec out(static_cast<size_t>(k.base.size()), q.bottom());
    for (int x = 0; x < k.base.size(); ++x)
      for (size_t j = 0; j < sp.s_objs.size(); ++j)
        out[static_cast<size_t>(x)] =
            q.join(out[static_cast<size_t>(x)],
                   q.tensor(sp.theta_hat_plus.rel.at(x, static_cast<int>(j)),
                            Psi[j]));
    int target = sp.s_objs[static_cast<size_t>(wS->sup(i))];
    if (sp.PhiX.find(out) != target) { supform = false; break; }
  }
  rep.hat_identities = supform;
  if (!supform) rep.notes.push_back("Sup on S(X,theta) is not -.hat-theta_+");
  return rep;
}

GeneralSplitResult general_split(const PhiPresheafCat& PhiX, const VFunctor& h) {
  GeneralSplitResult res;
  const VCat& X = PhiX.base;
  const int n = X.size();
  const int m = PhiX.size();
  if (n == 0) {
    res.section = VFunctor{X, PhiX.cat, {}};
    res.section_count = 1;
    return res;
  }
  std::vector<int> map(static_cast<size_t>(n), 0);
  while (true) {
    bool sec = true;
    for (int x = 0; x < n && sec; ++x) sec = h(map[static_cast<size_t>(x)]) == x;
    if (sec) {
      VFunctor t{X, PhiX.cat, map};
      if (validate_functor(t).empty() && companion(t) == conjoint(h)) {
        ++res.section_count;
        if (!res.section) res.section = t;
      }
    }
    int p = n - 1;
    while (p >= 0 && map[static_cast<size_t>(p)] + 1 == m) {
      map[static_cast<size_t>(p)] = 0;
      --p;
    }
    if (p < 0) break;
    ++map[static_cast<size_t>(p)];
  }
  return res;
}

std::vector<VModule> idempotent_modules(const VCat& X, const PhiFamily& fam,
                                        std::uint64_t cap) {
  std::vector<VModule> out;
  for (VModule& m : enumerate_modules(X, X, fam, cap))
    if (mod_compose(m, m) == m) out.push_back(std::move(m));
  return out;
}

bool kar_isomorphic(const KarObject& a, const KarObject& b, std::uint64_t cap) {
  if (!same_quantale(*a.base.q, *b.base.q)) return false;
  std::vector<VModule> fwd, bwd;
  for (VModule& m : enumerate_modules(a.base, b.base, a.family, cap))
    if (is_kar_morphism(a, b, m)) fwd.push_back(std::move(m));
  for (VModule& m : enumerate_modules(b.base, a.base, a.family, cap))
    if (is_kar_morphism(b, a, m)) bwd.push_back(std::move(m));
  for (const VModule& f : fwd)
    for (const VModule& g : bwd)
      if (mod_compose(f, g) == a.theta && mod_compose(g, f) == b.theta) return true;
  return false;
}

}  // namespace qwb
