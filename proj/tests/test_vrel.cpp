#include <vector>

#include "doctest.h"
#include "qwb/vrel.hpp"

using namespace qwb;

namespace {

/// All boolean relations of the given shape.
std::vector<VRel> all_bool_rels(const QuantalePtr& b, int rows, int cols) {
  std::vector<VRel> out;
  int cells = rows * cols;
  for (std::uint32_t m = 0; m < (1u << cells); ++m) {
    VRel r(b, rows, cols);
    for (int c = 0; c < cells; ++c)
      r.m[static_cast<size_t>(c)] = (m >> c) & 1u ? b->top() : b->bottom();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

TEST_CASE("composition on chain singletons adds distances") {
  QuantalePtr q = make_chain(9);
  VRel r(q, 1, 1, q->find_label("2"));
  VRel s(q, 1, 1, q->find_label("3"));
  CHECK(compose(r, s).at(0, 0) == q->find_label("5"));
}

TEST_CASE("identity laws and an empty composite") {
  QuantalePtr b = make_boolean();
  for (const VRel& r : all_bool_rels(b, 2, 3)) {
    CHECK(compose(r, VRel::identity(b, 3)) == r);
    CHECK(compose(VRel::identity(b, 2), r) == r);
  }
  // r relates x1-y1 only, s relates y2-z1 only: no common middle point
  VRel r(b, 1, 2), s(b, 2, 1);
  r.at(0, 0) = b->top();
  s.at(1, 0) = b->top();
  CHECK(compose(r, s).at(0, 0) == b->bottom());
}

TEST_CASE("opposite is an involution and reverses composition") {
  QuantalePtr b = make_boolean();
  CHECK(opposite(VRel::identity(b, 3)) == VRel::identity(b, 3));
  for (const VRel& r : all_bool_rels(b, 2, 2)) {
    CHECK(opposite(opposite(r)) == r);
    for (const VRel& s : all_bool_rels(b, 2, 2))
      CHECK(opposite(compose(r, s)) == compose(opposite(s), opposite(r)));
  }
}

TEST_CASE("extend matches the boolean quantifier form") {
  QuantalePtr b = make_boolean();
  for (const VRel& phi : all_bool_rels(b, 2, 2))
    for (const VRel& psi : all_bool_rels(b, 2, 2)) {
      VRel e = extend(psi, phi);
      for (int y = 0; y < 2; ++y)
        for (int z = 0; z < 2; ++z) {
          bool forall = true;
          for (int x = 0; x < 2; ++x)
            if (phi.at(x, y) == b->top() && psi.at(x, z) != b->top()) forall = false;
          CHECK((e.at(y, z) == b->top()) == forall);
        }
    }
}

TEST_CASE("extend and lift along the identity") {
  QuantalePtr q = make_chain(3);
  VRel psi(q, 2, 2);
  psi.at(0, 0) = q->find_label("1");
  psi.at(0, 1) = q->find_label("inf");
  psi.at(1, 0) = q->find_label("0");
  psi.at(1, 1) = q->find_label("3");
  CHECK(extend(psi, VRel::identity(q, 2)) == psi);
  CHECK(lift(VRel::identity(q, 2), psi) == psi);
}

TEST_CASE("residual adjunctions, exhaustive on small boolean relations") {
  QuantalePtr b = make_boolean();
  auto rels22 = all_bool_rels(b, 2, 2);
  for (const VRel& phi : rels22)
    for (const VRel& psi : rels22) {
      VRel e = extend(psi, phi);  // largest rho with rho.phi <= psi
      VRel l = lift(phi, psi);    // largest rho with phi.rho <= psi
      for (const VRel& rho : rels22) {
        CHECK(rel_leq(compose(phi, rho), psi) == rel_leq(rho, e));
        CHECK(rel_leq(compose(rho, phi), psi) == rel_leq(rho, l));
      }
    }
}

TEST_CASE("lift along a constant-1 chain matrix subtracts one with floor") {
  QuantalePtr q = make_chain(3);
  VRel phi(q, 2, 2, q->find_label("1"));
  VRel psi(q, 2, 2);
  psi.at(0, 0) = q->find_label("0");
  psi.at(0, 1) = q->find_label("2");
  psi.at(1, 0) = q->find_label("3");
  psi.at(1, 1) = q->find_label("inf");
  VRel l = lift(phi, psi);
  // (phi |> psi)(x,y) = meet_z hom(1, psi(x,z)) = max over z of psi(x,z)-1 floored,
  // and quantale meet is the numeric max, so each row collapses to one value.
  auto minus_one = [&](Elem v) {
    // hom(1, inf) is 3, not inf: 3 (+) 1 already truncates past the cap
    if (v == q->find_label("inf")) return q->find_label("3");
    return v == q->find_label("0") ? v : q->find_label(std::to_string(std::stoi(q->label(v)) - 1));
  };
  for (int x = 0; x < 2; ++x) {
    Elem want = q->top();
    for (int z = 0; z < 2; ++z) want = q->meet(want, minus_one(psi.at(x, z)));
    for (int y = 0; y < 2; ++y) CHECK(l.at(x, y) == want);
  }
}

TEST_CASE("residual laws") {
  QuantalePtr b = make_boolean();
  for (const VRel& phi : all_bool_rels(b, 2, 2))
    for (const VRel& psi : all_bool_rels(b, 2, 2)) {
      CHECK(rel_leq(compose(phi, extend(psi, phi)), psi));
      CHECK(rel_leq(compose(lift(phi, psi), phi), psi));
    }
}
