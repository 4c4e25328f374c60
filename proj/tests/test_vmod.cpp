#include "doctest.h"
#include "helpers.hpp"
#include "qwb/distributivity.hpp"
#include "qwb/enumerate.hpp"
#include "qwb/presheaf.hpp"
#include "qwb/vmod.hpp"

using namespace qwb;
using namespace qwb::testing;

TEST_CASE("structure matrix is the identity module") {
  VCat X = bool_chain(3);
  CHECK(is_module(X, X, X.hom));
  VModule id = identity_module(X);
  CHECK(id.rel == X.hom);

  // a non-down-closed subset of a chain is not a module X -> 1
  QuantalePtr b = make_boolean();
  VCat one = VCat::discrete(b, 1);
  VRel notdown(b, 3, 1);
  notdown.at(1, 0) = b->top();  // {1} without 0
  CHECK_FALSE(is_module(X, one, notdown));
  VRel down(b, 3, 1);
  down.at(0, 0) = b->top();
  down.at(1, 0) = b->top();
  CHECK(is_module(X, one, down));

  // chain(2): a vector violating a(x,y) (x) psi(y) <= psi(x) at one pair
  QuantalePtr c2 = make_chain(2);
  VCat C = VCat::discrete(c2, 2);
  C.hom.at(0, 1) = c2->find_label("1");
  VCat cone = VCat::discrete(c2, 1);
  VRel v(c2, 2, 1);
  v.at(0, 0) = c2->find_label("inf");
  v.at(1, 0) = c2->find_label("0");  // a(0,1) (x) 0 = 1, not <= inf
  CHECK_FALSE(is_module(C, cone, v));
}

TEST_CASE("companions and conjoints") {
  VCat X = bool_chain(3);
  QuantalePtr b = X.q;
  VFunctor id = VFunctor::identity(X);
  CHECK(companion(id).rel == X.hom);
  CHECK(conjoint(id).rel == X.hom);

  // a point x: 1 -> X has x^* the down-set and x_* the up-set of x
  VCat one = VCat::discrete(b, 1);
  VFunctor pt{one, X, {1}};
  VModule comp = companion(pt), conj = conjoint(pt);
  for (int z = 0; z < 3; ++z) {
    CHECK((conj.rel.at(z, 0) == b->top()) == (z <= 1));  // down-set of 1
    CHECK((comp.rel.at(0, z) == b->top()) == (z >= 1));  // up-set of 1
  }

  // chain metric: f_*(x,y) = distance from f(x) to y
  QuantalePtr c3 = make_chain(3);
  VCat M = VCat::discrete(c3, 2);
  M.hom.at(0, 1) = c3->find_label("2");
  VFunctor f{M, M, {0, 0}};
  CHECK(companion(f).rel.at(1, 1) == c3->find_label("2"));  // b(f(1), 1) = b(0,1)
}

TEST_CASE("companion-conjoint adjunction and functoriality") {
  for (VCat& X : enumerate_posets(3))
    for (const VFunctor& f : all_functors(X, X)) {
      CHECK(check_adjunction(companion(f), conjoint(f)));
      for (const VFunctor& g : all_functors(X, X)) {
        VFunctor gf = compose(f, g);
        CHECK(mod_compose(companion(f), companion(g)).rel == companion(gf).rel);
        CHECK(mod_compose(conjoint(g), conjoint(f)).rel == conjoint(gf).rel);
        // (-)_* is order reversing, (-)^* order preserving
        bool fg = functor_leq(f, g);
        CHECK(fg == rel_leq(conjoint(f).rel, conjoint(g).rel));
        CHECK(fg == rel_leq(companion(g).rel, companion(f).rel));
      }
    }
}

TEST_CASE("swapping a companion-conjoint pair breaks the adjunction") {
  VCat X = bool_chain(2);
  VCat one = VCat::discrete(X.q, 1);
  VFunctor pt{one, X, {0}};  // bottom point of the 2-chain
  CHECK(check_adjunction(companion(pt), conjoint(pt)));
  CHECK_FALSE(check_adjunction(conjoint(pt), companion(pt)));
}

TEST_CASE("adjoint pairs of presheaves are representable on boolean posets") {
  // phi -| psi with psi: X -> 1 holds iff psi = x^* and phi = x_* for some x
  QuantalePtr b = make_boolean();
  VCat one = VCat::discrete(b, 1);
  for (VCat& X : enumerate_posets(3)) {
    int n = X.size();
    std::vector<Vec> presheaves = enumerate_presheaves(X);
    std::vector<Vec> cops = enumerate_copresheaves(X);
    for (const Vec& psi : presheaves)
      for (const Vec& phi : cops) {
        VRel rp(b, n, 1), rc(b, 1, n);
        for (int x = 0; x < n; ++x) {
          rp.at(x, 0) = psi[static_cast<size_t>(x)];
          rc.at(0, x) = phi[static_cast<size_t>(x)];
        }
        if (!is_module(X, one, rp) || !is_module(one, X, rc)) continue;
        bool adj = check_adjunction(VModule{one, X, rc}, VModule{X, one, rp});
        bool repr = false;
        for (int x = 0; x < n && !repr; ++x) {
          bool okd = true, oku = true;
          for (int z = 0; z < n; ++z) {
            if (psi[static_cast<size_t>(z)] != X.a(z, x)) okd = false;
            if (phi[static_cast<size_t>(z)] != X.a(x, z)) oku = false;
          }
          repr = okd && oku;
        }
        CHECK(adj == repr);
      }
  }
}

TEST_CASE("functor adjoints") {
  VCat X = bool_chain(3);
  QuantalePtr b = X.q;
  auto gid = functor_adjoint(VFunctor::identity(X));
  REQUIRE(gid.has_value());
  CHECK(gid->map == VFunctor::identity(X).map);

  // pointwise cross-check: f(x) <= y iff x <= g(y), on every adjoint pair found
  for (VCat& A : enumerate_posets(3))
    for (const VFunctor& f : all_functors(A, X)) {
      auto g = functor_adjoint(f);
      if (!g) continue;
      for (int x = 0; x < A.size(); ++x)
        for (int y = 0; y < X.size(); ++y)
          CHECK((X.a(f(x), y) == b->top()) == (A.a(x, (*g)(y)) == b->top()));
    }

  // a monotone map that destroys a join has no right adjoint
  VCat D = powerset2();
  VFunctor crush{D, bool_chain(2), {0, 0, 0, 1}};
  REQUIRE(validate_functor(crush).empty());
  CHECK_FALSE(functor_adjoint(crush).has_value());
}

TEST_CASE("extension of modules is the presheaf hom of the mates") {
  QuantalePtr b = make_boolean();
  VCat X = bool_chain(2);
  PresheafCat PX = build_presheaves(X);
  for (VCat& Y : enumerate_posets(2))
    for (VCat& Z : enumerate_posets(2)) {
      // modules X -> Y and X -> Z have presheaf columns on X
      for (std::uint32_t mp = 0; mp < (1u << (2 * Y.size())); ++mp)
        for (std::uint32_t ms = 0; ms < (1u << (2 * Z.size())); ++ms) {
          VRel phi(b, 2, Y.size()), psi(b, 2, Z.size());
          for (int c = 0; c < 2 * Y.size(); ++c)
            phi.m[static_cast<size_t>(c)] = (mp >> c) & 1u ? b->top() : b->bottom();
          for (int c = 0; c < 2 * Z.size(); ++c)
            psi.m[static_cast<size_t>(c)] = (ms >> c) & 1u ? b->top() : b->bottom();
          if (!is_module(X, Y, phi) || !is_module(X, Z, psi)) continue;
          VRel e = extend(psi, phi);
          for (int y = 0; y < Y.size(); ++y)
            for (int z = 0; z < Z.size(); ++z) {
              Vec cy = {phi.at(0, y), phi.at(1, y)};
              Vec cz = {psi.at(0, z), psi.at(1, z)};
              CHECK(e.at(y, z) == psh_hom(*b, cy, cz));
            }
        }
    }
}

TEST_CASE("weighted colimits") {
  QuantalePtr b = make_boolean();
  VCat X = bool_chain(3);

  // identity weight returns the diagram functor itself
  for (VCat& A : enumerate_posets(2))
    for (const VFunctor& h : all_functors(A, X)) {
      auto f = weighted_colimit(h, identity_module(A));
      REQUIRE(f.has_value());
      CHECK(f->map == h.map);
    }

  // in a non-cocomplete category a weight can have no representable extension
  VCat D = VCat::discrete(b, 2);
  VCat one = VCat::discrete(b, 1);
  VRel full(b, 2, 1, b->top());
  REQUIRE(is_module(D, one, full));
  CHECK_FALSE(weighted_colimit(VFunctor::identity(D), VModule{D, one, full}).has_value());
}

TEST_CASE("colimit of a mate weighted by psi is the mate of the composite") {
  QuantalePtr b = make_boolean();
  VCat Y = bool_chain(2);
  VCat Z = bool_chain(2);
  VCat X = bool_chain(2);
  PresheafCat PX = build_presheaves(X);
  auto mate = [&](const VRel& r) {  // module X -> W as object map W -> PX
    std::vector<int> map;
    for (int w = 0; w < r.cols; ++w) {
      Vec col(static_cast<size_t>(r.rows));
      for (int x = 0; x < r.rows; ++x) col[static_cast<size_t>(x)] = r.at(x, w);
      map.push_back(PX.find(col));
    }
    return map;
  };
  for (std::uint32_t mp = 0; mp < 16; ++mp)
    for (std::uint32_t ms = 0; ms < 16; ++ms) {
      VRel phi(b, 2, 2), psi(b, 2, 2);
      for (int c = 0; c < 4; ++c) {
        phi.m[static_cast<size_t>(c)] = (mp >> c) & 1u ? b->top() : b->bottom();
        psi.m[static_cast<size_t>(c)] = (ms >> c) & 1u ? b->top() : b->bottom();
      }
      if (!is_module(X, Y, phi) || !is_module(Y, Z, psi)) continue;
      std::vector<int> phihat = mate(phi);
      VFunctor f{Y, PX.cat, phihat};
      REQUIRE(validate_functor(f).empty());
      auto colim = weighted_colimit(f, VModule{Y, Z, psi});
      REQUIRE(colim.has_value());
      VModule composite = mod_compose(VModule{X, Y, phi}, VModule{Y, Z, psi});
      CHECK(colim->map == mate(composite.rel));
    }
}

TEST_CASE("right adjoint presheaves") {
  QuantalePtr b = make_boolean();

  // empty category: no right adjoint presheaves
  VCat empty = VCat::discrete(b, 0);
  PresheafCat Pe = build_presheaves(empty);
  CHECK(right_adjoint_presheaves(Pe).empty());

  // separated boolean posets: exactly the representables
  for (VCat& X : enumerate_posets(3)) {
    PresheafCat PX = build_presheaves(X);
    std::vector<int> reps;
    for (int x = 0; x < X.size(); ++x) reps.push_back(PX.find(yoneda_vec(X, x)));
    std::sort(reps.begin(), reps.end());
    CHECK(right_adjoint_presheaves(PX) == reps);
  }

  // chain(2), one object with a = unit: only the representable has an adjoint
  QuantalePtr c2 = make_chain(2);
  VCat O = VCat::discrete(c2, 1);
  PresheafCat PO = build_presheaves(O);
  std::vector<int> tilde = right_adjoint_presheaves(PO);
  REQUIRE(tilde.size() == 1);
  CHECK(PO.at(tilde[0]) == yoneda_vec(O, 0));
}
