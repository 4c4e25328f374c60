#include "qwb/enumerate.hpp"

#include <stdexcept>

namespace qwb {

namespace {

/// Check every complete composable triple that involves the freshly filled
/// cell (x,y); cells are filled row-major, so (i,j) is known iff
/// i*n+j <= x*n+y.
bool partial_ok(const VCat& X, int x, int y) {
  const Quantale& q = *X.q;
  int n = X.size();
  auto known = [&](int i, int j) { return i * n + j <= x * n + y; };
  if (x == y && !q.leq(q.unit(), X.a(x, x))) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // triple (i, x, y): a(i,x) (x) a(x,y) <= a(i,y)
      if (known(i, x) && known(i, y) &&
          !q.leq(q.tensor(X.a(i, x), X.a(x, y)), X.a(i, y)))
        return false;
      // triple (x, y, j)
      if (known(y, j) && known(x, j) &&
          !q.leq(q.tensor(X.a(x, y), X.a(y, j)), X.a(x, j)))
        return false;
      // triple (x, j, y), with (x,y) as the outer cell
      if (known(x, j) && known(j, y) &&
          !q.leq(q.tensor(X.a(x, j), X.a(j, y)), X.a(x, y)))
        return false;
    }
  return true;
}

}  // namespace

std::vector<VCat> enumerate_vcats(const QuantalePtr& q, int n, long long cap) {
  std::vector<VCat> out;
  VCat X = VCat::discrete(q, n);
  long long visited = 0;
  std::function<void(int)> rec = [&](int cell) {
    if (++visited > cap) throw CapExceeded("enumerate_vcats: candidate cap exceeded");
    if (cell == n * n) {
      out.push_back(X);
      return;
    }
    int x = cell / n, y = cell % n;
    for (Elem v = 0; v < q->size(); ++v) {
      X.hom.at(x, y) = v;
      if (partial_ok(X, x, y)) rec(cell + 1);
    }
    X.hom.at(x, y) = q->bottom();
  };
  rec(0);
  return out;
}

long long count_preorders_via_closure(int n) {
  if (n > 4) throw std::invalid_argument("count_preorders_via_closure: n <= 4");
  long long count = 0;
  const std::uint32_t cells = static_cast<std::uint32_t>(n * n);
  for (std::uint32_t m = 0; m < (1u << cells); ++m) {
    bool rel[16];
    for (std::uint32_t c = 0; c < cells; ++c) rel[c] = (m >> c) & 1u;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = rel[i * n + i];
    if (!ok) continue;
    bool cl[16];
    std::copy(rel, rel + cells, cl);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (cl[i * n + k])
          for (int j = 0; j < n; ++j)
            if (cl[k * n + j]) cl[i * n + j] = true;
    if (std::equal(rel, rel + cells, cl)) ++count;
  }
  return count;
}

std::vector<VCat> enumerate_posets(int n) {
  QuantalePtr b = make_boolean();
  std::vector<VCat> layer{VCat::discrete(b, 0)};
  const Elem top = b->top(), bot = b->bottom();
  for (int k = 0; k < n; ++k) {
    std::vector<VCat> next;
    for (const VCat& P : layer) {
      auto le = [&](int i, int j) { return P.a(i, j) == top; };
      // strict down-sets D and up-sets U for the new element k, disjoint,
      // with d < u for every d in D, u in U
      for (std::uint32_t D = 0; D < (1u << k); ++D) {
        bool dok = true;
        for (int i = 0; i < k && dok; ++i)
          if ((D >> i) & 1u)
            for (int j = 0; j < k; ++j)
              if (le(j, i) && !((D >> j) & 1u)) dok = false;
        if (!dok) continue;
        for (std::uint32_t U = 0; U < (1u << k); ++U) {
          if (D & U) continue;
          bool uok = true;
          for (int i = 0; i < k && uok; ++i)
            if ((U >> i) & 1u) {
              for (int j = 0; j < k && uok; ++j)
                if (le(i, j) && !((U >> j) & 1u)) uok = false;
              for (int d = 0; d < k && uok; ++d)
                if (((D >> d) & 1u) && !le(d, i)) uok = false;
            }
          if (!uok) continue;
          VCat Q = VCat::discrete(b, k + 1);
          for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) Q.hom.at(i, j) = P.a(i, j);
          for (int i = 0; i < k; ++i) {
            Q.hom.at(i, k) = ((D >> i) & 1u) ? top : bot;
            Q.hom.at(k, i) = ((U >> i) & 1u) ? top : bot;
          }
          next.push_back(std::move(Q));
        }
      }
    }
    layer = std::move(next);
  }
  return layer;
}

namespace {

/// Subset lub in a boolean poset, or -1.
int poset_lub(const VCat& X, std::uint32_t S) {
  const Elem top = X.q->top();
  int n = X.size();
  for (int u = 0; u < n; ++u) {
    bool ub = true;
    for (int s = 0; s < n && ub; ++s)
      if (((S >> s) & 1u) && X.a(s, u) != top) ub = false;
    if (!ub) continue;
    bool least = true;
    for (int v = 0; v < n && least; ++v) {
      bool vub = true;
      for (int s = 0; s < n && vub; ++s)
        if (((S >> s) & 1u) && X.a(s, v) != top) vub = false;
      if (vub && X.a(u, v) != top) least = false;
    }
    if (least) return u;
  }
  return -1;
}

bool poset_is_lattice(const VCat& X) {
  int n = X.size();
  for (std::uint32_t S = 0; S < (1u << n); ++S)
    if (poset_lub(X, S) < 0) return false;
  return true;
}

}  // namespace

std::vector<VCat> enumerate_lattices(int n) {
  std::vector<VCat> out;
  for (int k = 1; k <= n; ++k)
    for (VCat& P : enumerate_posets(k))
      if (poset_is_lattice(P)) out.push_back(std::move(P));
  return out;
}

std::vector<MeetSemilattice> enumerate_frames(int n) {
  std::vector<MeetSemilattice> out;
  for (int k = 1; k <= n; ++k)
    for (const VCat& P : enumerate_posets(k)) {
      if (!poset_is_lattice(P)) continue;
      std::vector<char> leq(static_cast<size_t>(k) * k, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          leq[static_cast<size_t>(i) * k + j] = P.a(i, j) == P.q->top() ? 1 : 0;
      MeetSemilattice L = make_semilattice(P.objects, std::move(leq));
      if (is_frame(L)) out.push_back(std::move(L));
    }
  return out;
}

std::vector<VFunctor> all_functors(const VCat& X, const VCat& Y) {
  std::vector<VFunctor> out;
  if (X.size() == 0) {
    out.push_back({X, Y, {}});
    return out;
  }
  if (Y.size() == 0) return out;
  for (std::vector<int>& map : all_maps(X.size(), Y.size())) {
    VFunctor f{X, Y, std::move(map)};
    if (validate_functor(f).empty()) out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::vector<int>> all_maps(int dom, int cod) {
  std::vector<std::vector<int>> out;
  if (dom == 0) {
    out.emplace_back();
    return out;
  }
  if (cod == 0) return out;
  std::vector<int> map(static_cast<size_t>(dom), 0);
  while (true) {
    out.push_back(map);
    int p = dom - 1;
    while (p >= 0 && map[static_cast<size_t>(p)] + 1 == cod) {
      map[static_cast<size_t>(p)] = 0;
      --p;
    }
    if (p < 0) break;
    ++map[static_cast<size_t>(p)];
  }
  return out;
}

}  // namespace qwb
