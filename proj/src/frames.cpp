#include "qwb/frames.hpp"

#include <algorithm>
#include <set>

#include "qwb/distributivity.hpp"

namespace qwb {

MeetSemilattice make_semilattice(std::vector<std::string> labels, std::vector<char> leq) {
  MeetSemilattice L;
  L.labels = std::move(labels);
  L.leq_ = std::move(leq);
  const int n = L.size();
  if (L.leq_.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("make_semilattice: order table size mismatch");
  L.meet_.assign(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int best = -1;
      for (int c = 0; c < n; ++c) {
        if (!(L.le(c, x) && L.le(c, y))) continue;
        if (best < 0 || L.le(best, c)) best = c;
      }
      if (best >= 0) {
        for (int c = 0; c < n; ++c)
          if (L.le(c, x) && L.le(c, y) && !L.le(c, best)) { best = -1; break; }
      }
      L.meet_[static_cast<size_t>(x) * n + y] = best;
    }
  for (int c = 0; c < n; ++c) {
    bool top = true;
    for (int x = 0; x < n && top; ++x) top = L.le(x, c);
    if (top) { L.top_ = c; break; }
  }
  return L;
}

std::vector<std::string> validate_semilattice(const MeetSemilattice& L) {
  std::vector<std::string> out;
  const int n = L.size();
  for (int x = 0; x < n; ++x)
    if (!L.le(x, x)) out.push_back("order not reflexive at " + L.labels[static_cast<size_t>(x)]);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x != y && L.le(x, y) && L.le(y, x))
        out.push_back("order not antisymmetric at " + L.labels[static_cast<size_t>(x)] + "," +
                      L.labels[static_cast<size_t>(y)]);
      for (int z = 0; z < n; ++z)
        if (L.le(x, y) && L.le(y, z) && !L.le(x, z))
          out.push_back("order not transitive at " + L.labels[static_cast<size_t>(x)] + "," +
                        L.labels[static_cast<size_t>(y)] + "," + L.labels[static_cast<size_t>(z)]);
    }
  if (L.top() < 0) out.push_back("no top element");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (L.meet(x, y) < 0)
        out.push_back("missing meet of " + L.labels[static_cast<size_t>(x)] + "," +
                      L.labels[static_cast<size_t>(y)]);
  return out;
}

std::optional<int> lat_join(const MeetSemilattice& L, int x, int y) {
  const int n = L.size();
  int best = -1;
  for (int c = 0; c < n; ++c) {
    if (!(L.le(x, c) && L.le(y, c))) continue;
    if (best < 0 || L.le(c, best)) best = c;
  }
  if (best < 0) return std::nullopt;
  for (int c = 0; c < n; ++c)
    if (L.le(x, c) && L.le(y, c) && !L.le(best, c)) return std::nullopt;
  return best;
}

std::optional<int> lat_bottom(const MeetSemilattice& L) {
  for (int c = 0; c < L.size(); ++c) {
    bool bot = true;
    for (int x = 0; x < L.size() && bot; ++x) bot = L.le(c, x);
    if (bot) return c;
  }
  return std::nullopt;
}

bool is_frame(const MeetSemilattice& L) {
  if (!validate_semilattice(L).empty()) return false;
  if (!lat_bottom(L)) return false;
  const int n = L.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!lat_join(L, x, y)) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int lhs = L.meet(a, *lat_join(L, b, c));
        int rhs = *lat_join(L, L.meet(a, b), L.meet(a, c));
        if (lhs != rhs) return false;
      }
  return true;
}

bool FiniteSpace::is_open(std::uint32_t m) const {
  return std::binary_search(opens.begin(), opens.end(), m);
}

std::vector<std::string> validate_space(const FiniteSpace& X) {
  std::vector<std::string> out;
  if (!X.is_open(0)) out.push_back("empty set not open");
  if (!X.is_open(X.full())) out.push_back("full set not open");
  for (std::uint32_t a : X.opens)
    for (std::uint32_t b : X.opens) {
      if (!X.is_open(a | b)) out.push_back("opens not closed under union");
      if (!X.is_open(a & b)) out.push_back("opens not closed under intersection");
      if (!out.empty()) return out;
    }
  return out;
}

VCat space_order(const FiniteSpace& X) {
  QuantalePtr q = make_boolean();
  VCat C(q, X.labels);
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < X.size(); ++y) {
      bool le = true;
      for (std::uint32_t o : X.opens)
        if ((o >> y) & 1u) {
          if (!((o >> x) & 1u)) { le = false; break; }
        }
      C.hom.at(x, y) = le ? q->top() : q->bottom();
    }
  return C;
}

FiniteSpace alexandrov(const VCat& X) {
  if (X.size() > 20) throw std::invalid_argument("alexandrov: carrier too large");
  const Elem k = X.q->unit();
  FiniteSpace S;
  S.labels = X.objects;
  for (std::uint32_t m = 0; m < (1u << X.size()); ++m) {
    bool down = true;
    for (int y = 0; y < X.size() && down; ++y)
      if ((m >> y) & 1u)
        for (int x = 0; x < X.size() && down; ++x)
          if (X.q->leq(k, X.a(x, y)) && !((m >> x) & 1u)) down = false;
    if (down) S.opens.push_back(m);
  }
  return S;
}

FilterSpace filter_space(const MeetSemilattice& L) {
  const int n = L.size();
  if (n > 16) throw std::invalid_argument("filter_space: semilattice too large");
  FilterSpace F;
  F.base = L;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (!((m >> L.top()) & 1u)) continue;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      if ((m >> x) & 1u) {
        for (int y = 0; y < n && ok; ++y) {
          if (L.le(x, y) && !((m >> y) & 1u)) ok = false;       // up-closed
          if (((m >> y) & 1u) && !((m >> L.meet(x, y)) & 1u)) ok = false;  // meet-closed
        }
      }
    if (ok) F.filters.push_back(m);
  }
  const int nf = static_cast<int>(F.filters.size());
  F.xsharp.assign(static_cast<size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (int f = 0; f < nf; ++f)
      if ((F.filters[static_cast<size_t>(f)] >> x) & 1u)
        F.xsharp[static_cast<size_t>(x)] |= (1u << f);
  // label each filter by a minimal element (all filters are principal at
  // finite scale: the meet of the members generates)
  for (int f = 0; f < nf; ++f) {
    std::uint32_t m = F.filters[static_cast<size_t>(f)];
    int gen = L.top();
    for (int x = 0; x < n; ++x)
      if ((m >> x) & 1u) gen = L.meet(gen, x);
    F.space.labels.push_back("^" + L.labels[static_cast<size_t>(gen)]);
  }
  // topology generated by the basic opens x^#: all unions (the basics are
  // already closed under intersection since (x/\y)^# = x^# /\ y^#)
  std::set<std::uint32_t> opens{0u};
  for (std::uint32_t sel = 0; sel < (1u << n); ++sel) {
    std::uint32_t u = 0;
    for (int x = 0; x < n; ++x)
      if ((sel >> x) & 1u) u |= F.xsharp[static_cast<size_t>(x)];
    opens.insert(u);
  }
  F.space.opens.assign(opens.begin(), opens.end());
  return F;
}

bool is_meet_hom(const MeetSemilattice& L, const MeetSemilattice& M,
                 const std::vector<int>& f) {
  if (f.size() != static_cast<size_t>(L.size())) return false;
  if (f[static_cast<size_t>(L.top())] != M.top()) return false;
  for (int x = 0; x < L.size(); ++x)
    for (int y = 0; y < L.size(); ++y)
      if (f[static_cast<size_t>(L.meet(x, y))] !=
          M.meet(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]))
        return false;
  return true;
}

std::vector<std::vector<int>> all_meet_homs(const MeetSemilattice& L,
                                            const MeetSemilattice& M) {
  std::vector<std::vector<int>> out;
  if (L.size() == 0) return out;
  std::vector<int> f(static_cast<size_t>(L.size()), 0);
  while (true) {
    if (is_meet_hom(L, M, f)) out.push_back(f);
    int p = L.size() - 1;
    while (p >= 0 && f[static_cast<size_t>(p)] + 1 == M.size()) {
      f[static_cast<size_t>(p)] = 0;
      --p;
    }
    if (p < 0) break;
    ++f[static_cast<size_t>(p)];
  }
  return out;
}

namespace {

int filter_index(const FilterSpace& F, std::uint32_t mask) {
  auto it = std::find(F.filters.begin(), F.filters.end(), mask);
  if (it == F.filters.end()) throw std::invalid_argument("not a filter");
  return static_cast<int>(it - F.filters.begin());
}

}  // namespace

FMapPair F_on_maps(const FilterSpace& FL, const FilterSpace& FM, const std::vector<int>& f) {
  if (!is_meet_hom(FL.base, FM.base, f))
    throw std::invalid_argument("F_on_maps: not a meet-homomorphism");
  FMapPair out;
  for (std::uint32_t fl : FL.filters) {
    std::uint32_t img = 0;
    for (int m = 0; m < FM.base.size(); ++m) {
      for (int x = 0; x < FL.base.size(); ++x)
        if (((fl >> x) & 1u) && FM.base.le(f[static_cast<size_t>(x)], m)) {
          img |= (1u << m);
          break;
        }
    }
    out.Ff.push_back(filter_index(FM, img));
  }
  for (std::uint32_t g : FM.filters) {
    std::uint32_t pre = 0;
    for (int x = 0; x < FL.base.size(); ++x)
      if ((g >> f[static_cast<size_t>(x)]) & 1u) pre |= (1u << x);
    out.shriek.push_back(filter_index(FL, pre));
  }
  return out;
}

std::uint32_t alpha(const FilterSpace& FL, int x) { return FL.xsharp[static_cast<size_t>(x)]; }

int beta_by_meet(const FilterSpace& FL, std::uint32_t A) {
  int acc = FL.base.top();
  for (int x = 0; x < FL.base.size(); ++x)
    if ((A & ~FL.xsharp[static_cast<size_t>(x)]) == 0) acc = FL.base.meet(acc, x);
  return acc;
}

std::optional<int> beta_by_join(const FilterSpace& FL, std::uint32_t A) {
  auto bot = lat_bottom(FL.base);
  if (!bot) return std::nullopt;
  int acc = *bot;
  for (int y = 0; y < FL.base.size(); ++y)
    if ((FL.xsharp[static_cast<size_t>(y)] & ~A) == 0) {
      auto j = lat_join(FL.base, acc, y);
      if (!j) return std::nullopt;
      acc = *j;
    }
  return acc;
}

Lambda lambda_space(const FiniteSpace& X) {
  Lambda lam;
  lam.X = X;
  const int n = X.size();
  if (n > 20) throw std::invalid_argument("lambda_space: space too large");
  VCat ord = space_order(X);
  const Elem k = ord.q->unit();
  auto le = [&](int x, int y) { return ord.q->leq(k, ord.a(x, y)); };
  for (std::uint32_t C = 0; C < (1u << n); ++C) {
    if (!X.is_open(X.full() & ~C)) continue;  // continuity: complement open
    // brute-force right adjoint g: 2 -> X with phi(x) <= b iff x <= g(b)
    bool adj = false;
    for (int g0 = 0; g0 < n && !adj; ++g0)
      for (int g1 = 0; g1 < n && !adj; ++g1) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
          bool phi0 = !((C >> x) & 1u);  // phi(x) <= 0
          if (phi0 != le(x, g0)) ok = false;
          if (!le(x, g1)) ok = false;  // phi(x) <= 1 always
        }
        adj = ok;
      }
    if (adj || n == 0) lam.closed.push_back(C);
  }
  return lam;
}

std::optional<MeetSemilattice> pt_semilattice(const Lambda& lam) {
  const int m = lam.size();
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) labels.push_back("p" + std::to_string(i));
  std::vector<char> leq(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      // Pt order is opposite to the pointwise order on Lambda
      leq[static_cast<size_t>(i) * m + j] =
          ((lam.closed[static_cast<size_t>(j)] & ~lam.closed[static_cast<size_t>(i)]) == 0)
              ? 1
              : 0;
  MeetSemilattice L = make_semilattice(std::move(labels), std::move(leq));
  if (!validate_semilattice(L).empty()) return std::nullopt;
  return L;
}

RhoVerdict rho_check(const MeetSemilattice& L) {
  RhoVerdict v;
  if (!is_frame(L)) {
    v.note = "not a frame";
    return v;
  }
  v.applies = true;
  FilterSpace FL = filter_space(L);
  Lambda lam = lambda_space(FL.space);
  const std::uint32_t full = FL.space.full();
  std::vector<std::uint32_t> phi(static_cast<size_t>(L.size()));
  for (int x = 0; x < L.size(); ++x) {
    phi[static_cast<size_t>(x)] = full & ~FL.xsharp[static_cast<size_t>(x)];
    if (!std::binary_search(lam.closed.begin(), lam.closed.end(), phi[static_cast<size_t>(x)])) {
      v.note = "phi_x is not a point";
      return v;
    }
  }
  // bijective onto Lambda(FL)
  std::set<std::uint32_t> image(phi.begin(), phi.end());
  if (image.size() != phi.size() || image.size() != lam.closed.size()) {
    v.note = "rho not bijective";
    return v;
  }
  // x <= y iff phi_y <= phi_x pointwise
  for (int x = 0; x < L.size(); ++x)
    for (int y = 0; y < L.size(); ++y)
      if (L.le(x, y) !=
          ((phi[static_cast<size_t>(y)] & ~phi[static_cast<size_t>(x)]) == 0)) {
        v.note = "rho not an order isomorphism";
        return v;
      }
  v.iso = true;
  return v;
}

SigmaVerdict sigma_check(const FiniteSpace& X) {
  SigmaVerdict v;
  VCat ord = space_order(X);
  auto w = ccd_witness(ord);
  if (!w) {
    v.note = "space is not completely distributive";
    return v;
  }
  v.applies = true;
  Lambda lam = lambda_space(X);
  auto pt = pt_semilattice(lam);
  if (!pt) {
    v.note = "Pt(X) is not a meet-semilattice";
    return v;
  }
  FilterSpace FPt = filter_space(*pt);
  std::vector<int> sigma(static_cast<size_t>(X.size()), -1);
  for (int x = 0; x < X.size(); ++x) {
    std::uint32_t filt = 0;
    for (int i = 0; i < lam.size(); ++i)
      if (!((lam.closed[static_cast<size_t>(i)] >> x) & 1u)) filt |= (1u << i);
    auto it = std::find(FPt.filters.begin(), FPt.filters.end(), filt);
    if (it == FPt.filters.end()) {
      v.note = "sigma(x) is not a filter";
      return v;
    }
    sigma[static_cast<size_t>(x)] = static_cast<int>(it - FPt.filters.begin());
  }
  // bijective
  std::set<int> img(sigma.begin(), sigma.end());
  if (img.size() != sigma.size() || img.size() != FPt.filters.size()) {
    v.note = "sigma not bijective";
    return v;
  }
  // continuous both ways
  for (std::uint32_t O : FPt.space.opens) {
    std::uint32_t pre = 0;
    for (int x = 0; x < X.size(); ++x)
      if ((O >> sigma[static_cast<size_t>(x)]) & 1u) pre |= (1u << x);
    if (!X.is_open(pre)) {
      v.note = "sigma not continuous";
      return v;
    }
  }
  for (std::uint32_t U : X.opens) {
    std::uint32_t imgmask = 0;
    for (int x = 0; x < X.size(); ++x)
      if ((U >> x) & 1u) imgmask |= (1u << sigma[static_cast<size_t>(x)]);
    if (!FPt.space.is_open(imgmask)) {
      v.note = "inverse of sigma not continuous";
      return v;
    }
  }
  v.homeo = true;
  return v;
}

}  // namespace qwb
