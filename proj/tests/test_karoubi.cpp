#include "doctest.h"
#include "helpers.hpp"
#include "qwb/distributivity.hpp"
#include "qwb/enumerate.hpp"
#include "qwb/karoubi.hpp"

using namespace qwb;
using namespace qwb::testing;

TEST_CASE("kar objects and morphisms") {
  QuantalePtr b = make_boolean();
  VCat X = bool_chain(2);
  PhiFamily fam = family_all();

  KarObject idk{X, identity_module(X), fam};
  CHECK(validate_kar(idk).empty());

  // the identity of (X, theta) is theta itself, and composition is associative
  for (const VModule& th : idempotent_modules(X, fam)) {
    KarObject k{X, th, fam};
    CHECK(validate_kar(k).empty());
    KarMorphism e = kar_identity(k);
    CHECK(e.phi.rel == th.rel);
    CHECK(kar_compose(e, e).phi.rel == th.rel);
  }

  // the embedding X -> (X, a) is full: every module is a kar morphism
  for (VCat& Y : enumerate_posets(2)) {
    KarObject ky{Y, identity_module(Y), fam};
    for (const VModule& m : enumerate_modules(X, Y, fam))
      CHECK(is_kar_morphism(idk, ky, m));
  }
}

TEST_CASE("splitting S on a one-loop idempotent") {
  QuantalePtr b = make_boolean();
  VCat D = VCat::discrete(b, 2);  // points p, q
  PhiFamily fam = family_all();

  VRel loop(b, 2, 2);
  loop.at(0, 0) = b->top();  // theta relates p to p only
  VModule theta{D, D, loop};
  REQUIRE(is_module(D, D, loop));
  REQUIRE(mod_compose(theta, theta).rel == loop);

  KarObject k{D, theta, fam};
  SplitS s = split_S(k);
  CHECK(s.s_objs.size() == 2);  // {} and {p}
  CHECK(vcat_isomorphic(s.S, bool_chain(2)));

  // r is a retraction of the inclusion: r(s(psi)) = psi
  for (size_t i = 0; i < s.s_objs.size(); ++i)
    CHECK(s.r[static_cast<size_t>(s.s_objs[i])] == static_cast<int>(i));

  RoundtripReport rep = roundtrip_IS(k);
  CHECK(rep.ok());

  // theta = a gives S = PhiX
  KarObject ka{D, identity_module(D), fam};
  CHECK(split_S(ka).s_objs.size() == static_cast<size_t>(phi_presheaves(D, fam).size()));
}

TEST_CASE("I and the SI roundtrip on distributive objects") {
  PhiFamily fam = family_all();
  for (VCat& Y : enumerate_posets(2)) {
    PhiPresheafCat PhiY = phi_presheaves(Y, fam);
    auto w = phi_ccd_witness(PhiY.cat, fam);
    REQUIRE(w.has_value());
    KarObject k = split_I(*w);
    CHECK(validate_kar(k).empty());
    CHECK(roundtrip_SI(*w).ok());

    // the identity functor's image is theta itself
    CHECK(functor_image(VFunctor::identity(PhiY.cat), k.theta, k.theta).rel == k.theta.rel);
  }
}

TEST_CASE("general splitting of algebras") {
  PhiFamily fam = family_all();

  // free algebras split, with the unique section being yoneda
  VCat X = bool_chain(2);
  PhiPresheafCat PhiX = phi_presheaves(X, fam);
  auto h = phi_sup(PhiX);
  REQUIRE(h.has_value());
  GeneralSplitResult free_split = general_split(PhiX, *h);
  CHECK(free_split.section_count == 1);
  REQUIRE(free_split.section.has_value());
  auto radj = functor_adjoint(*free_split.section);
  REQUIRE(radj.has_value());
  CHECK(radj->map == h->map);  // the unique section is left adjoint to the algebra

  // the M3 completion has no phi-cocontinuous section
  VCat L = m3();
  PhiPresheafCat PhiL = phi_presheaves(L, fam);
  auto hl = phi_sup(PhiL);
  REQUIRE(hl.has_value());  // M3 is a complete lattice, so the sup map exists
  GeneralSplitResult no_split = general_split(PhiL, *hl);
  CHECK(no_split.section_count == 0);
  CHECK_FALSE(no_split.section.has_value());

  // where a section exists it is unique and left adjoint to the algebra
  VCat C = bool_chain(3);
  PhiPresheafCat PhiC = phi_presheaves(C, fam);
  auto hc = phi_sup(PhiC);
  REQUIRE(hc.has_value());
  GeneralSplitResult cs = general_split(PhiC, *hc);
  CHECK(cs.section_count == 1);
  REQUIRE(cs.section.has_value());
  auto rc = functor_adjoint(*cs.section);
  REQUIRE(rc.has_value());
  CHECK(rc->map == hc->map);
}

TEST_CASE("kar isomorphism distinguishes the splittings") {
  QuantalePtr b = make_boolean();
  PhiFamily fam = family_all();
  VCat D = VCat::discrete(b, 2);

  VRel loop(b, 2, 2);
  loop.at(0, 0) = b->top();
  KarObject kp{D, VModule{D, D, loop}, fam};

  VRel loopq(b, 2, 2);
  loopq.at(1, 1) = b->top();
  KarObject kq{D, VModule{D, D, loopq}, fam};

  KarObject kid{D, identity_module(D), fam};

  CHECK(kar_isomorphic(kp, kq));        // both split to the 2-chain
  CHECK_FALSE(kar_isomorphic(kp, kid));  // the 2-chain is not the 4-element PhiD
  CHECK(kar_isomorphic(kid, kid));
}
