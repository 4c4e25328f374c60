#include "qwb/distributivity.hpp"

#include <algorithm>

namespace qwb {

std::optional<int> supremum(const VCat& X, const Vec& psi) {
  const Quantale& q = *X.q;
  const int n = X.size();
  // extension of psi along the identity: ext(z) = meet_x hom(psi(x), a(x,z))
  Vec ext(static_cast<size_t>(n));
  for (int z = 0; z < n; ++z) {
    Elem acc = q.top();
    for (int x = 0; x < n; ++x)
      acc = q.meet(acc, q.hom(psi[static_cast<size_t>(x)], X.a(x, z)));
    ext[static_cast<size_t>(z)] = acc;
  }
  for (int c = 0; c < n; ++c) {
    bool ok = true;
    for (int z = 0; z < n; ++z)
      if (X.a(c, z) != ext[static_cast<size_t>(z)]) { ok = false; break; }
    if (ok) return c;
  }
  return std::nullopt;
}

std::optional<VFunctor> cocomplete_sup(const PresheafCat& PX) {
  std::vector<int> map(static_cast<size_t>(PX.size()), -1);
  for (int i = 0; i < PX.size(); ++i) {
    auto s = supremum(PX.base, PX.at(i));
    if (!s) return std::nullopt;
    map[static_cast<size_t>(i)] = *s;
  }
  VFunctor sup{PX.cat, PX.base, std::move(map)};
  if (!validate_functor(sup).empty()) return std::nullopt;
  if (!(companion(sup) == conjoint(yoneda(PX)))) return std::nullopt;
  return sup;
}

std::optional<CcdWitness> ccd_witness(const VCat& X, std::uint64_t cap) {
  PresheafCat PX = build_presheaves(X, cap);
  auto sup = cocomplete_sup(PX);
  if (!sup) return std::nullopt;
  const Quantale& q = *X.q;
  const int n = X.size();
  std::vector<int> tmap(static_cast<size_t>(n), -1);
  VRel theta(X.q, n, n);
  for (int y = 0; y < n; ++y) {
    Vec ty(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
      Elem acc = q.top();
      for (int i = 0; i < PX.size(); ++i)
        acc = q.meet(acc, q.hom(X.a(y, (*sup)(i)), PX.at(i)[static_cast<size_t>(x)]));
      ty[static_cast<size_t>(x)] = acc;
      theta.at(x, y) = acc;
    }
    int idx = PX.find(ty);
    if (idx < 0) return std::nullopt;
    tmap[static_cast<size_t>(y)] = idx;
  }
  VFunctor t{X, PX.cat, std::move(tmap)};
  if (!validate_functor(t).empty()) return std::nullopt;
  if (!(companion(t) == conjoint(*sup))) return std::nullopt;
  return CcdWitness{X, std::move(PX), std::move(*sup), std::move(t),
                    VModule{X, X, std::move(theta)}};
}

std::vector<int> totally_compact(const CcdWitness& w) {
  std::vector<int> out;
  for (int x = 0; x < w.base.size(); ++x)
    if (w.t(x) == w.PX.find(yoneda_vec(w.base, x))) out.push_back(x);
  return out;
}

VFunctor eta_functor(const VCat& X, const PresheafCat& PX, const std::vector<int>& sd_objs,
                     const VCat& SD) {
  std::vector<int> map(static_cast<size_t>(X.size()), -1);
  for (int x = 0; x < X.size(); ++x) {
    int rep = PX.find(yoneda_vec(X, x));
    auto it = std::find(sd_objs.begin(), sd_objs.end(), rep);
    if (it == sd_objs.end())
      throw std::invalid_argument("eta_functor: representable not totally compact");
    map[static_cast<size_t>(x)] = static_cast<int>(it - sd_objs.begin());
  }
  return {X, SD, std::move(map)};
}

VFunctor eps_functor(const CcdWitness& w, const std::vector<int>& sl_objs,
                     const PresheafCat& PSL) {
  const VCat& L = w.base;
  std::vector<int> map(static_cast<size_t>(L.size()), -1);
  for (int x = 0; x < L.size(); ++x) {
    Vec v(sl_objs.size());
    for (size_t z = 0; z < sl_objs.size(); ++z) v[z] = L.a(sl_objs[z], x);
    int idx = PSL.find(v);
    if (idx < 0) throw std::invalid_argument("eps_functor: restricted representable missing");
    map[static_cast<size_t>(x)] = idx;
  }
  return {L, PSL.cat, std::move(map)};
}

VFunctor eps_left_adjoint(const CcdWitness& w, const std::vector<int>& sl_objs,
                          const PresheafCat& PSL) {
  const VCat& L = w.base;
  const Quantale& q = *L.q;
  std::vector<int> map(static_cast<size_t>(PSL.size()), -1);
  for (int i = 0; i < PSL.size(); ++i) {
    const Vec& psi = PSL.at(i);
    // left Kan extension of psi along the inclusion SL -> L
    Vec ext(static_cast<size_t>(L.size()), q.bottom());
    for (int x = 0; x < L.size(); ++x)
      for (size_t z = 0; z < sl_objs.size(); ++z)
        ext[static_cast<size_t>(x)] =
            q.join(ext[static_cast<size_t>(x)], q.tensor(L.a(x, sl_objs[z]), psi[z]));
    auto s = supremum(L, ext);
    if (!s) throw std::invalid_argument("eps_left_adjoint: base is not cocomplete");
    map[static_cast<size_t>(i)] = *s;
  }
  return {PSL.cat, L, std::move(map)};
}

bool is_totally_algebraic(const CcdWitness& w) {
  const VCat& L = w.base;
  const Quantale& q = *L.q;
  const std::vector<int> sl = totally_compact(w);
  for (int x = 0; x < L.size(); ++x) {
    // x^* . i_* . i^* as a presheaf on L
    Vec v(static_cast<size_t>(L.size()), q.bottom());
    for (int y = 0; y < L.size(); ++y)
      for (int z : sl)
        v[static_cast<size_t>(y)] =
            q.join(v[static_cast<size_t>(y)], q.tensor(L.a(y, z), L.a(z, x)));
    auto s = supremum(L, v);
    if (!s || !objects_equivalent(L, *s, x)) return false;
  }
  return true;
}

std::optional<int> tensor_action(const VCat& X, int x, Elem u) {
  const Quantale& q = *X.q;
  Vec v(static_cast<size_t>(X.size()));
  for (int y = 0; y < X.size(); ++y)
    v[static_cast<size_t>(y)] = q.tensor(X.a(y, x), u);
  return supremum(X, v);
}

namespace {

// least upper bound of a subset (as bitmask) in the underlying order of a
// boolean V-category; -1 when none exists
int subset_lub(const VCat& X, unsigned mask) {
  const Elem k = X.q->unit();
  const int n = X.size();
  int best = -1;
  for (int c = 0; c < n; ++c) {
    bool upper = true;
    for (int x = 0; x < n && upper; ++x)
      if ((mask >> x) & 1u) upper = X.q->leq(k, X.a(x, c));
    if (!upper) continue;
    if (best < 0 || X.q->leq(k, X.a(c, best))) best = c;
  }
  if (best < 0) return -1;
  for (int c = 0; c < n; ++c) {
    bool upper = true;
    for (int x = 0; x < n && upper; ++x)
      if ((mask >> x) & 1u) upper = X.q->leq(k, X.a(x, c));
    if (upper && !X.q->leq(k, X.a(best, c))) return -1;
  }
  return best;
}

}  // namespace

VRel totally_below_oracle(const VCat& X) {
  if (X.q->size() != 2) throw std::invalid_argument("totally_below_oracle: boolean only");
  const Elem k = X.q->unit();
  const int n = X.size();
  if (n > 20) throw std::invalid_argument("totally_below_oracle: carrier too large");
  VRel theta(X.q, n, n, X.q->top());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int lub = subset_lub(X, mask);
    if (lub < 0) continue;
    for (int y = 0; y < n; ++y) {
      if (!X.q->leq(k, X.a(y, lub))) continue;  // y <= lub S
      for (int x = 0; x < n; ++x) {
        bool in_down = false;
        for (int s = 0; s < n && !in_down; ++s)
          if (((mask >> s) & 1u) && X.q->leq(k, X.a(x, s))) in_down = true;
        if (!in_down) theta.at(x, y) = X.q->bottom();
      }
    }
  }
  return theta;
}

bool is_lattice(const VCat& X) {
  const int n = X.size();
  if (n == 0) return false;
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    if (subset_lub(X, mask) < 0) return false;
  return true;  // all joins exist in a finite poset => all meets exist
}

bool is_distributive_lattice(const VCat& X) {
  if (!is_lattice(X)) return false;
  const int n = X.size();
  auto lub2 = [&](int a, int b) { return subset_lub(X, (1u << a) | (1u << b)); };
  auto glb2 = [&](int a, int b) {
    // meet via the opposite order
    const Elem k = X.q->unit();
    int best = -1;
    for (int c = 0; c < n; ++c) {
      if (!(X.q->leq(k, X.a(c, a)) && X.q->leq(k, X.a(c, b)))) continue;
      if (best < 0 || X.q->leq(k, X.a(best, c))) best = c;
    }
    return best;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (glb2(a, lub2(b, c)) != lub2(glb2(a, b), glb2(a, c))) return false;
  return true;
}

}  // namespace qwb
