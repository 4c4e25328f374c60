#include "qwb/vmod.hpp"

namespace qwb {

bool is_module(const VCat& X, const VCat& Y, const VRel& r) {
  if (r.rows != X.size() || r.cols != Y.size())
    throw std::invalid_argument("is_module: shape mismatch");
  return compose(X.hom, r) == r && compose(r, Y.hom) == r;
}

VModule identity_module(const VCat& X) { return {X, X, X.hom}; }

VModule mod_compose(const VModule& phi, const VModule& psi) {
  if (!(phi.cod == psi.dom)) throw std::invalid_argument("mod_compose: shape mismatch");
  return {phi.dom, psi.cod, compose(phi.rel, psi.rel)};
}

VModule companion(const VFunctor& f) {
  VRel r(f.dom.q, f.dom.size(), f.cod.size());
  for (int x = 0; x < f.dom.size(); ++x)
    for (int y = 0; y < f.cod.size(); ++y) r.at(x, y) = f.cod.a(f(x), y);
  return {f.dom, f.cod, std::move(r)};
}

VModule conjoint(const VFunctor& f) {
  VRel r(f.dom.q, f.cod.size(), f.dom.size());
  for (int y = 0; y < f.cod.size(); ++y)
    for (int x = 0; x < f.dom.size(); ++x) r.at(y, x) = f.cod.a(y, f(x));
  return {f.cod, f.dom, std::move(r)};
}

bool check_adjunction(const VModule& phi, const VModule& psi) {
  if (!(phi.dom == psi.cod) || !(phi.cod == psi.dom))
    throw std::invalid_argument("check_adjunction: shape mismatch");
  return rel_leq(phi.dom.hom, compose(phi.rel, psi.rel)) &&
         rel_leq(compose(psi.rel, phi.rel), phi.cod.hom);
}

std::optional<VFunctor> functor_adjoint(const VFunctor& f) {
  const VCat& X = f.dom;
  const VCat& Y = f.cod;
  const VModule fstar = companion(f);
  // representability shortcut: g(y) must satisfy b(f x, y) = a(x, g y) for all x;
  // scan X per y, fall back over remaining candidates implicitly (the scan IS
  // the exhaustive search, since any valid g(y) is found by it).
  std::vector<int> g(static_cast<size_t>(Y.size()), -1);
  for (int y = 0; y < Y.size(); ++y) {
    for (int c = 0; c < X.size(); ++c) {
      bool ok = true;
      for (int x = 0; x < X.size(); ++x)
        if (fstar.rel.at(x, y) != X.a(x, c)) { ok = false; break; }
      if (ok) { g[static_cast<size_t>(y)] = c; break; }
    }
    if (g[static_cast<size_t>(y)] < 0) return std::nullopt;
  }
  VFunctor gf{Y, X, std::move(g)};
  if (!validate_functor(gf).empty()) return std::nullopt;
  return gf;
}

std::optional<VFunctor> functor_left_adjoint(const VFunctor& f) {
  const VCat& X = f.dom;
  const VCat& Y = f.cod;
  const VModule fupper = conjoint(f);  // Y x X
  std::vector<int> g(static_cast<size_t>(Y.size()), -1);
  for (int y = 0; y < Y.size(); ++y) {
    for (int c = 0; c < X.size(); ++c) {
      bool ok = true;
      for (int x = 0; x < X.size(); ++x)
        if (fupper.rel.at(y, x) != X.a(c, x)) { ok = false; break; }
      if (ok) { g[static_cast<size_t>(y)] = c; break; }
    }
    if (g[static_cast<size_t>(y)] < 0) return std::nullopt;
  }
  VFunctor gf{Y, X, std::move(g)};
  if (!validate_functor(gf).empty()) return std::nullopt;
  return gf;
}

std::optional<VFunctor> weighted_colimit(const VFunctor& h, const VModule& psi) {
  if (!(h.dom == psi.dom)) throw std::invalid_argument("weighted_colimit: shape mismatch");
  const VCat& X = h.cod;
  const VCat& B = psi.cod;
  VRel ext = extend(companion(h).rel, psi.rel);  // B x X
  std::vector<int> fmap(static_cast<size_t>(B.size()), -1);
  for (int b = 0; b < B.size(); ++b) {
    for (int c = 0; c < X.size(); ++c) {
      bool ok = true;
      for (int z = 0; z < X.size(); ++z)
        if (ext.at(b, z) != X.a(c, z)) { ok = false; break; }
      if (ok) { fmap[static_cast<size_t>(b)] = c; break; }
    }
    if (fmap[static_cast<size_t>(b)] < 0) return std::nullopt;
  }
  VFunctor f{B, X, std::move(fmap)};
  if (!validate_functor(f).empty()) return std::nullopt;
  return f;
}

}  // namespace qwb
