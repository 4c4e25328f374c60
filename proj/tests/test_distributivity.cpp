#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "qwb/distributivity.hpp"
#include "qwb/enumerate.hpp"

using namespace qwb;
using namespace qwb::testing;

TEST_CASE("suprema of presheaves") {
  QuantalePtr b = make_boolean();
  VCat C3 = bool_chain(3);

  // representables have themselves as supremum
  for (int x = 0; x < 3; ++x) {
    auto s = supremum(C3, yoneda_vec(C3, x));
    REQUIRE(s.has_value());
    CHECK(*s == x);
  }

  // the full down-set of a chain has the top as supremum
  Vec full(3, b->top());
  auto s = supremum(C3, full);
  REQUIRE(s.has_value());
  CHECK(*s == 2);

  // in a discrete 2-element category the two-point down-set has no supremum
  VCat D = VCat::discrete(b, 2);
  CHECK_FALSE(supremum(D, Vec{b->top(), b->top()}).has_value());
}

TEST_CASE("cocomplete boolean categories are the complete lattices") {
  for (int n = 1; n <= 4; ++n)
    for (VCat& X : enumerate_posets(n)) {
      PresheafCat PX = build_presheaves(X);
      CHECK(cocomplete_sup(PX).has_value() == is_lattice(X));
    }
  // the empty category: its only presheaf has no representative
  PresheafCat Pe = build_presheaves(VCat::discrete(make_boolean(), 0));
  CHECK(Pe.size() == 1);
  CHECK_FALSE(cocomplete_sup(Pe).has_value());
}

TEST_CASE("ccd witness on the powerset of two elements") {
  VCat P = powerset2();  // objects: {}, {a}, {b}, {a,b}
  QuantalePtr b = P.q;
  auto w = ccd_witness(P);
  REQUIRE(w.has_value());

  VRel oracle = totally_below_oracle(P);
  CHECK(w->theta.rel == oracle);

  // nothing is totally below the bottom; atoms are totally below what contains them
  CHECK(oracle.at(0, 0) == b->bottom());
  CHECK(oracle.at(0, 3) == b->top());   // {} below-below {a,b}
  CHECK(oracle.at(1, 3) == b->top());   // {a} below-below {a,b}
  CHECK(oracle.at(3, 3) == b->bottom());  // the top splits over its atoms
  CHECK(is_totally_algebraic(*w));
}

TEST_CASE("M3 is not completely distributive") {
  VCat L = m3();
  REQUIRE(is_lattice(L));
  CHECK_FALSE(is_distributive_lattice(L));
  CHECK_FALSE(ccd_witness(L).has_value());
}

TEST_CASE("every presheaf category is ccd and totally algebraic") {
  for (VCat& X : enumerate_posets(2)) {
    PresheafCat PX = build_presheaves(X);
    auto w = ccd_witness(PX.cat);
    REQUIRE(w.has_value());
    CHECK(is_totally_algebraic(*w));

    // totally compact elements of PX are exactly the representables
    std::vector<int> sl = totally_compact(*w);
    std::vector<int> reps;
    for (int x = 0; x < X.size(); ++x) reps.push_back(PX.find(yoneda_vec(X, x)));
    std::sort(reps.begin(), reps.end());
    CHECK(sl == reps);
  }

  // P(2-chain) is the 3-chain; its compact part is the 2-chain of representables
  PresheafCat P2 = build_presheaves(bool_chain(2));
  auto w = ccd_witness(P2.cat);
  REQUIRE(w.has_value());
  std::vector<int> sl = totally_compact(*w);
  CHECK(sl.size() == 2);
  CHECK(vcat_isomorphic(full_subcat(P2.cat, sl), bool_chain(2)));
}

TEST_CASE("ccd equals totally algebraic equals distributive on small lattices") {
  for (int n = 1; n <= 5; ++n)
    for (VCat& L : enumerate_posets(n)) {
      if (!is_lattice(L)) continue;
      auto w = ccd_witness(L);
      bool dist = is_distributive_lattice(L);
      CHECK(w.has_value() == dist);
      if (w) CHECK(is_totally_algebraic(*w) == dist);
    }
}

TEST_CASE("tensor action") {
  QuantalePtr c3 = make_chain(3);

  // acting by the unit is the identity, on a cocomplete chain(3) category
  VCat Y = VCat::discrete(c3, 2);
  Y.hom.at(0, 1) = c3->find_label("2");
  REQUIRE(validate(Y).empty());
  PresheafCat PY = build_presheaves(Y);
  int yp = PY.find(yoneda_vec(Y, 0)), yq = PY.find(yoneda_vec(Y, 1));
  for (int i = 0; i < PY.size(); ++i) {
    auto same = tensor_action(PY.cat, i, c3->unit());
    REQUIRE(same.has_value());
    CHECK(objects_equivalent(PY.cat, *same, i));
  }

  // a(x (+) u, y) = hom(u, a(x, y)): shifting the source by 1 leaves distance 1
  auto shifted = tensor_action(PY.cat, yp, c3->find_label("1"));
  REQUIRE(shifted.has_value());
  CHECK(PY.cat.a(*shifted, yq) == c3->hom(c3->find_label("1"), c3->find_label("2")));
  CHECK(PY.cat.a(*shifted, yq) == c3->find_label("1"));
}
