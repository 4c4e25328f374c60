#include "qwb/vrel.hpp"

namespace qwb {

namespace {
void require_same_quantale(const VRel& a, const VRel& b) {
  if (!same_quantale(*a.q, *b.q)) throw std::invalid_argument("vrel: quantale mismatch");
}
}  // namespace

VRel VRel::identity(const QuantalePtr& q, int n) {
  VRel r(q, n, n);
  for (int i = 0; i < n; ++i) r.at(i, i) = q->unit();
  return r;
}

VRel compose(const VRel& r, const VRel& s) {
  require_same_quantale(r, s);
  if (r.cols != s.rows) throw std::invalid_argument("compose: dimension mismatch");
  const Quantale& q = *r.q;
  VRel out(r.q, r.rows, s.cols);
  for (int x = 0; x < r.rows; ++x)
    for (int z = 0; z < s.cols; ++z) {
      Elem acc = q.bottom();
      for (int y = 0; y < r.cols; ++y) acc = q.join(acc, q.tensor(r.at(x, y), s.at(y, z)));
      out.at(x, z) = acc;
    }
  return out;
}

VRel opposite(const VRel& r) {
  VRel out(r.q, r.cols, r.rows);
  for (int i = 0; i < r.rows; ++i)
    for (int j = 0; j < r.cols; ++j) out.at(j, i) = r.at(i, j);
  return out;
}

VRel extend(const VRel& psi, const VRel& phi) {
  require_same_quantale(psi, phi);
  if (psi.rows != phi.rows) throw std::invalid_argument("extend: dimension mismatch");
  const Quantale& q = *psi.q;
  VRel out(psi.q, phi.cols, psi.cols);
  for (int y = 0; y < phi.cols; ++y)
    for (int z = 0; z < psi.cols; ++z) {
      Elem acc = q.top();
      for (int x = 0; x < psi.rows; ++x) acc = q.meet(acc, q.hom(phi.at(x, y), psi.at(x, z)));
      out.at(y, z) = acc;
    }
  return out;
}

VRel lift(const VRel& phi, const VRel& psi) {
  require_same_quantale(psi, phi);
  if (psi.cols != phi.cols) throw std::invalid_argument("lift: dimension mismatch");
  const Quantale& q = *psi.q;
  VRel out(psi.q, psi.rows, phi.rows);
  for (int x = 0; x < psi.rows; ++x)
    for (int y = 0; y < phi.rows; ++y) {
      Elem acc = q.top();
      for (int z = 0; z < psi.cols; ++z) acc = q.meet(acc, q.hom(phi.at(y, z), psi.at(x, z)));
      out.at(x, y) = acc;
    }
  return out;
}

bool rel_leq(const VRel& a, const VRel& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("rel_leq: shape mismatch");
  for (size_t i = 0; i < a.m.size(); ++i)
    if (!a.q->leq(a.m[i], b.m[i])) return false;
  return true;
}

VRel rel_join(const VRel& a, const VRel& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("rel_join: shape mismatch");
  VRel out = a;
  for (size_t i = 0; i < a.m.size(); ++i) out.m[i] = a.q->join(a.m[i], b.m[i]);
  return out;
}

VRel rel_meet(const VRel& a, const VRel& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("rel_meet: shape mismatch");
  VRel out = a;
  for (size_t i = 0; i < a.m.size(); ++i) out.m[i] = a.q->meet(a.m[i], b.m[i]);
  return out;
}

}  // namespace qwb
