#include "doctest.h"
#include "helpers.hpp"
#include "qwb/enumerate.hpp"
#include "qwb/ultra.hpp"

using namespace qwb;
using namespace qwb::testing;

namespace {

/// All boolean relations n x m.
std::vector<VRel> all_rels(const QuantalePtr& b, int n, int m) {
  std::vector<VRel> out;
  for (std::uint32_t mask = 0; mask < (1u << (n * m)); ++mask) {
    VRel r(b, n, m);
    for (int c = 0; c < n * m; ++c)
      r.m[static_cast<size_t>(c)] = (mask >> c) & 1u ? b->top() : b->bottom();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

TEST_CASE("ultrafilter counts and principality") {
  CHECK(ultrafilters(0).count() == 0);
  for (int n = 1; n <= 4; ++n) {
    UltraSpace U = ultrafilters(n);
    CHECK(U.count() == n);  // on a finite set every ultrafilter is principal
    UltraSpace P = principal_ultrafilters(n);
    CHECK(U.families == P.families);
    for (int x = 0; x < n; ++x) {
      std::uint32_t fam = U.families[static_cast<size_t>(U.principal[static_cast<size_t>(x)])];
      // the principal ultrafilter at x consists of exactly the sets containing x
      for (std::uint32_t A = 0; A < (1u << n); ++A)
        CHECK((((fam >> A) & 1u) != 0) == (((A >> x) & 1u) != 0));
    }
  }
}

TEST_CASE("sharp sets") {
  UltraSpace U = ultrafilters(3);
  for (std::uint32_t A = 0; A < 8; ++A) {
    std::uint32_t sharpA = sharp(U, A);
    for (int i = 0; i < U.count(); ++i)
      CHECK((((sharpA >> i) & 1u) != 0) ==
            (((U.families[static_cast<size_t>(i)] >> A) & 1u) != 0));
  }
}

TEST_CASE("barr extension collapses along principal ultrafilters") {
  QuantalePtr b = make_boolean();
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m) {
      UltraSpace UX = ultrafilters(n), UY = ultrafilters(m);
      for (const VRel& r : all_rels(b, n, m)) {
        VRel Ur = barr_extension(r, UX, UY);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < m; ++y)
            CHECK(Ur.at(UX.principal[static_cast<size_t>(x)],
                        UY.principal[static_cast<size_t>(y)]) == r.at(x, y));
        // U(r degree) = (Ur) degree
        CHECK(barr_extension(opposite(r), UY, UX) == opposite(Ur));
      }
    }
}

TEST_CASE("barr extension of a function graph is the graph of the induced map") {
  QuantalePtr b = make_boolean();
  UltraSpace U2 = ultrafilters(2), U3 = ultrafilters(3);
  for (const std::vector<int>& f : all_maps(2, 3)) {
    VRel graph(b, 2, 3);
    for (int x = 0; x < 2; ++x) graph.at(x, f[static_cast<size_t>(x)]) = b->top();
    VRel Ug = barr_extension(graph, U2, U3);
    for (int i = 0; i < U2.count(); ++i) {
      int hits = 0;
      for (int j = 0; j < U3.count(); ++j)
        if (Ug.at(i, j) == b->top()) ++hits;
      CHECK(hits == 1);  // still a function
    }
  }
}

TEST_CASE("monad laws") {
  for (int n = 1; n <= 3; ++n) {
    UltraSpace UX = ultrafilters(n);
    UltraSpace UUX = ultrafilters(UX.count());
    std::vector<int> m = monad_mult_ultra(UX, UUX);
    // m . e_U = id: the principal ultrafilter on a principal ultrafilter
    // multiplies to the underlying point
    for (int i = 0; i < UX.count(); ++i)
      CHECK(m[static_cast<size_t>(UUX.principal[static_cast<size_t>(i)])] == i);
  }
}

TEST_CASE("kleisli composition under the principal collapse") {
  QuantalePtr b = make_boolean();
  for (int n = 1; n <= 2; ++n) {
    UltraSpace UX = ultrafilters(n), UUX = ultrafilters(UX.count());
    for (int m = 1; m <= 2; ++m) {
      UltraSpace UY = ultrafilters(m);
      for (const VRel& rp : all_rels(b, n, m)) {
        // lift r: X -> Y to r: UX -> Y along the principal bijection
        VRel r(b, UX.count(), m);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < m; ++y)
            r.at(UX.principal[static_cast<size_t>(x)], y) = rp.at(x, y);
        // e degree: UX -> X is the opposite of the principal graph
        VRel e(b, n, UX.count());
        for (int x = 0; x < n; ++x) e.at(x, UX.principal[static_cast<size_t>(x)]) = b->top();
        VRel edeg = opposite(e);

        // r o e degree = r
        CHECK(kleisli_compose(edeg, r, UX, UX, UUX) == r);
        // e degree o r contains r
        VRel edegY(b, UY.count(), m);
        for (int y = 0; y < m; ++y) edegY.at(UY.principal[static_cast<size_t>(y)], y) = b->top();
        CHECK(rel_leq(r, kleisli_compose(r, edegY, UX, UY, UUX)));
        // plain-vs-kleisli agreement for composable pairs
        for (const VRel& sp : all_rels(b, m, n)) {
          VRel s(b, UY.count(), n);
          for (int y = 0; y < m; ++y)
            for (int z = 0; z < n; ++z)
              s.at(UY.principal[static_cast<size_t>(y)], z) = sp.at(y, z);
          VRel k = kleisli_compose(r, s, UX, UY, UUX);
          VRel plain = compose(rp, sp);
          for (int x = 0; x < n; ++x)
            for (int z = 0; z < n; ++z)
              CHECK(k.at(UX.principal[static_cast<size_t>(x)], z) == plain.at(x, z));
        }
      }
    }
  }
}

TEST_CASE("convergence of a finite space is idempotent iff the order is transitive") {
  QuantalePtr b = make_boolean();
  for (VCat& X : enumerate_posets(3)) {
    int n = X.size();
    if (n == 0) continue;
    UltraSpace UX = ultrafilters(n), UUX = ultrafilters(UX.count());
    // convergence relation under the collapse: the structure matrix lifted to UX
    VRel a(b, UX.count(), n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        a.at(UX.principal[static_cast<size_t>(x)], y) = X.a(x, y);
    CHECK(kleisli_compose(a, a, UX, UX, UUX) == a);  // a o a = a: transitive + reflexive
  }
}
