#include "doctest.h"
#include "qwb/quantale.hpp"

using namespace qwb;

TEST_CASE("boolean quantale tables") {
  QuantalePtr b = make_boolean();
  Elem bot = b->bottom(), top = b->top();
  CHECK(b->size() == 2);
  CHECK(b->unit() == top);
  CHECK(b->tensor(top, bot) == bot);
  CHECK(b->hom(top, bot) == bot);
  CHECK(b->hom(bot, bot) == top);
  CHECK(b->hom(bot, top) == top);
  CHECK(b->join_all(std::vector<Elem>{}) == bot);  // empty join is bottom
  CHECK(validate(*b).empty());
}

TEST_CASE("chain quantales") {
  QuantalePtr c5 = make_chain(5);
  CHECK(validate(*c5).empty());
  CHECK(c5->integral());
  Elem three = c5->find_label("3"), five = c5->find_label("5");
  CHECK(c5->hom(three, five) == c5->find_label("2"));  // max{y-x, 0}
  for (Elem x = 0; x < c5->size(); ++x) CHECK(c5->hom(x, x) == c5->unit());
  Elem inf5 = c5->find_label("inf");
  // truncation matters: 3 + 3 already overflows past 5, so the least z with
  // z (+) 3 = inf is 3, not inf
  CHECK(c5->hom(three, inf5) == three);
  CHECK(c5->hom(inf5, five) == c5->find_label("0"));

  QuantalePtr c3 = make_chain(3);
  CHECK(validate(*c3).empty());
  Elem two = c3->find_label("2");
  CHECK(c3->tensor(two, two) == c3->find_label("inf"));  // 4 exceeds the cap

  QuantalePtr c0 = make_chain(0);
  CHECK(c0->size() == 2);  // {0, inf}
  CHECK(validate(*c0).empty());
}

TEST_CASE("chain order is numerically reversed") {
  QuantalePtr c3 = make_chain(3);
  CHECK(c3->top() == c3->find_label("0"));
  CHECK(c3->bottom() == c3->find_label("inf"));
  CHECK(c3->leq(c3->find_label("2"), c3->find_label("1")));
  CHECK_FALSE(c3->leq(c3->find_label("1"), c3->find_label("2")));
  // quantale join = numeric min, meet = numeric max
  CHECK(c3->join(c3->find_label("1"), c3->find_label("2")) == c3->find_label("1"));
  CHECK(c3->meet(c3->find_label("1"), c3->find_label("2")) == c3->find_label("2"));
}

TEST_CASE("validate rejects a broken tensor") {
  // boolean carrier with tensor redefined as join: unit law fails (k (x) bot = top)
  std::vector<char> leq = {1, 1, 0, 1};
  std::vector<Elem> tensor = {0, 1, 1, 1};
  QuantalePtr bad = make_quantale("bad", {"bot", "top"}, leq, tensor, 1);
  CHECK_FALSE(validate(*bad).empty());
}

TEST_CASE("residuation holds exhaustively on chain(3)") {
  QuantalePtr q = make_chain(3);
  for (Elem x = 0; x < q->size(); ++x)
    for (Elem y = 0; y < q->size(); ++y)
      for (Elem z = 0; z < q->size(); ++z)
        CHECK(q->leq(q->tensor(x, z), y) == q->leq(z, q->hom(x, y)));
}

TEST_CASE("hom of the unit and meets") {
  QuantalePtr q = make_chain(2);
  for (Elem y = 0; y < q->size(); ++y) CHECK(q->hom(q->unit(), y) == y);
  for (Elem x = 0; x < q->size(); ++x)
    for (Elem a = 0; a < q->size(); ++a)
      for (Elem b = 0; b < q->size(); ++b)
        CHECK(q->hom(x, q->meet(a, b)) == q->meet(q->hom(x, a), q->hom(x, b)));
}
