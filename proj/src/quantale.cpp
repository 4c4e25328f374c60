#include "qwb/quantale.hpp"

#include <algorithm>

namespace qwb {

Quantale::Quantale(std::string name, std::vector<std::string> labels,
                   std::vector<char> leq_table, std::vector<Elem> tensor_table, Elem unit)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      leq_(std::move(leq_table)),
      tensor_(std::move(tensor_table)),
      unit_(unit) {
  const int n = size();
  if (static_cast<int>(leq_.size()) != n * n || static_cast<int>(tensor_.size()) != n * n)
    throw std::invalid_argument("quantale: table size does not match carrier");
  if (unit_ < 0 || unit_ >= n) throw std::invalid_argument("quantale: unit not in carrier");

  // bottom / top: least / greatest element of leq (fall back to 0 on bad data).
  bottom_ = top_ = 0;
  for (Elem x = 0; x < n; ++x) {
    bool is_bot = true, is_top = true;
    for (Elem y = 0; y < n; ++y) {
      if (!leq(x, y)) is_bot = false;
      if (!leq(y, x)) is_top = false;
    }
    if (is_bot) bottom_ = x;
    if (is_top) top_ = x;
  }

  join_.assign(static_cast<size_t>(n) * n, -1);
  meet_.assign(static_cast<size_t>(n) * n, -1);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (!leq(x, z) || !leq(y, z)) continue;
        bool least = true;
        for (Elem w = 0; w < n; ++w)
          if (leq(x, w) && leq(y, w) && !leq(z, w)) { least = false; break; }
        if (least) { join_[idx(x, y)] = z; break; }
      }
      for (Elem z = 0; z < n; ++z) {
        if (!leq(z, x) || !leq(z, y)) continue;
        bool greatest = true;
        for (Elem w = 0; w < n; ++w)
          if (leq(w, x) && leq(w, y) && !leq(w, z)) { greatest = false; break; }
        if (greatest) { meet_[idx(x, y)] = z; break; }
      }
    }

  // hom(x,y) = join of { z | x (x) z <= y }
  hom_.assign(static_cast<size_t>(n) * n, bottom_);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem acc = bottom_;
      for (Elem z = 0; z < n; ++z)
        if (leq(tensor(x, z), y)) acc = join_[idx(acc, z)] >= 0 ? join_[idx(acc, z)] : acc;
      hom_[idx(x, y)] = acc;
    }
}

Elem Quantale::find_label(const std::string& s) const {
  auto it = std::find(labels_.begin(), labels_.end(), s);
  return it == labels_.end() ? -1 : static_cast<Elem>(it - labels_.begin());
}

QuantalePtr make_quantale(std::string name, std::vector<std::string> labels,
                          std::vector<char> leq, std::vector<Elem> tensor, Elem unit) {
  return std::make_shared<Quantale>(std::move(name), std::move(labels), std::move(leq),
                                    std::move(tensor), unit);
}

QuantalePtr make_boolean() {
  // carrier {bot, top}
  std::vector<char> leq = {1, 1, 0, 1};
  std::vector<Elem> tensor = {0, 0, 0, 1};  // meet
  return make_quantale("boolean", {"bot", "top"}, std::move(leq), std::move(tensor), 1);
}

QuantalePtr make_chain(int n) {
  if (n < 0) throw std::invalid_argument("make_chain: n must be >= 0");
  // carrier 0..n plus inf at index n+1; quantale order x <= y iff y <= x numerically,
  // inf below everything.
  const int m = n + 2;
  const int inf = n + 1;
  std::vector<std::string> labels;
  for (int i = 0; i <= n; ++i) labels.push_back(std::to_string(i));
  labels.push_back("inf");
  std::vector<char> leq(static_cast<size_t>(m) * m, 0);
  auto num = [&](Elem x) { return x == inf ? n + 1 : x; };
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y) leq[static_cast<size_t>(x) * m + y] = num(y) <= num(x) ? 1 : 0;
  std::vector<Elem> tensor(static_cast<size_t>(m) * m, inf);
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y) {
      if (x == inf || y == inf) { tensor[static_cast<size_t>(x) * m + y] = inf; continue; }
      int s = x + y;
      tensor[static_cast<size_t>(x) * m + y] = s > n ? inf : s;
    }
  return make_quantale("chain(" + std::to_string(n) + ")", std::move(labels), std::move(leq),
                       std::move(tensor), 0);
}

std::vector<std::string> validate(const Quantale& q) {
  std::vector<std::string> bad;
  const int n = q.size();
  auto lbl = [&](Elem x) { return q.label(x); };

  // partial order
  for (Elem x = 0; x < n; ++x)
    if (!q.leq(x, x)) { bad.push_back("order not reflexive at " + lbl(x)); break; }
  for (Elem x = 0; x < n && bad.empty(); ++x)
    for (Elem y = 0; y < n; ++y)
      if (x != y && q.leq(x, y) && q.leq(y, x)) {
        bad.push_back("order not antisymmetric at (" + lbl(x) + "," + lbl(y) + ")");
        x = n; break;
      }
  for (Elem x = 0; x < n && bad.empty(); ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (q.leq(x, y) && q.leq(y, z) && !q.leq(x, z)) {
          bad.push_back("order not transitive at (" + lbl(x) + "," + lbl(y) + "," + lbl(z) + ")");
          x = y = n; break;
        }

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (q.join(x, y) < 0) { bad.push_back("missing join of (" + lbl(x) + "," + lbl(y) + ")"); }
      if (q.meet(x, y) < 0) { bad.push_back("missing meet of (" + lbl(x) + "," + lbl(y) + ")"); }
      if (!bad.empty()) return bad;
    }

  // tensor laws
  for (Elem x = 0; x < n; ++x) {
    if (q.tensor(x, q.unit()) != x) {
      bad.push_back("unit law fails at " + lbl(x));
      return bad;
    }
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (q.tensor(x, y) != q.tensor(y, x)) {
        bad.push_back("commutativity fails at (" + lbl(x) + "," + lbl(y) + ")");
        return bad;
      }
      for (Elem z = 0; z < n; ++z)
        if (q.tensor(q.tensor(x, y), z) != q.tensor(x, q.tensor(y, z))) {
          bad.push_back("associativity fails at (" + lbl(x) + "," + lbl(y) + "," + lbl(z) + ")");
          return bad;
        }
    }

  // distribution over arbitrary joins: every subset of the carrier
  if (n <= 20) {
    for (Elem x = 0; x < n; ++x) {
      for (unsigned long s = 0; s < (1ul << n); ++s) {
        Elem j = q.bottom(), jt = q.bottom();
        for (Elem y = 0; y < n; ++y)
          if (s >> y & 1) { j = q.join(j, y); jt = q.join(jt, q.tensor(x, y)); }
        if (q.tensor(x, j) != jt) {
          bad.push_back("tensor does not distribute over a join (witness x=" + lbl(x) + ")");
          return bad;
        }
      }
    }
  }

  // residuation adjunction for the derived hom
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (q.leq(q.tensor(x, z), y) != q.leq(z, q.hom(x, y))) {
          bad.push_back("residuation fails at (" + lbl(x) + "," + lbl(y) + "," + lbl(z) + ")");
          return bad;
        }
  return bad;
}

bool same_quantale(const Quantale& a, const Quantale& b) {
  if (&a == &b) return true;
  if (a.size() != b.size() || a.unit() != b.unit()) return false;
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != b.leq(x, y) || a.tensor(x, y) != b.tensor(x, y)) return false;
  return true;
}

}  // namespace qwb
