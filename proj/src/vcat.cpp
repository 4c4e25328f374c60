#include "qwb/vcat.hpp"

#include <algorithm>
#include <numeric>

namespace qwb {

VCat::VCat(QuantalePtr quant, std::vector<std::string> objs)
    : q(std::move(quant)), objects(std::move(objs)), hom(q, static_cast<int>(objects.size()),
                                                         static_cast<int>(objects.size())) {
  for (int i = 0; i < size(); ++i) hom.at(i, i) = q->unit();
}

VCat VCat::discrete(const QuantalePtr& q, int n) {
  std::vector<std::string> objs;
  for (int i = 0; i < n; ++i) objs.push_back("x" + std::to_string(i));
  return VCat(q, std::move(objs));
}

std::vector<std::string> validate(const VCat& X) {
  std::vector<std::string> bad;
  const int n = X.size();
  if (X.hom.rows != n || X.hom.cols != n) {
    bad.push_back("structure matrix shape mismatch");
    return bad;
  }
  const Quantale& q = *X.q;
  for (int x = 0; x < n; ++x)
    if (!q.leq(q.unit(), X.a(x, x))) {
      bad.push_back("not reflexive at " + X.objects[static_cast<size_t>(x)]);
      return bad;
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (!q.leq(q.tensor(X.a(x, y), X.a(y, z)), X.a(x, z))) {
          bad.push_back("not transitive at (" + X.objects[static_cast<size_t>(x)] + "," +
                        X.objects[static_cast<size_t>(y)] + "," + X.objects[static_cast<size_t>(z)] + ")");
          return bad;
        }
  return bad;
}

VCat op(const VCat& X) {
  VCat Y = X;
  Y.hom = opposite(X.hom);
  return Y;
}

VCat tensor(const VCat& X, const VCat& Y) {
  if (!same_quantale(*X.q, *Y.q)) throw std::invalid_argument("tensor: quantale mismatch");
  std::vector<std::string> objs;
  for (const auto& x : X.objects)
    for (const auto& y : Y.objects) objs.push_back("(" + x + "," + y + ")");
  VCat Z(X.q, std::move(objs));
  const int ny = Y.size();
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < ny; ++y)
      for (int x2 = 0; x2 < X.size(); ++x2)
        for (int y2 = 0; y2 < ny; ++y2)
          Z.hom.at(x * ny + y, x2 * ny + y2) = X.q->tensor(X.a(x, x2), Y.a(y, y2));
  return Z;
}

VCat underlying_order(const VCat& X) {
  auto two = make_boolean();
  VCat Y(two, X.objects);
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < X.size(); ++y)
      Y.hom.at(x, y) = X.q->leq(X.q->unit(), X.a(x, y)) ? two->unit() : two->bottom();
  return Y;
}

bool objects_equivalent(const VCat& X, int x, int y) {
  return X.q->leq(X.q->unit(), X.a(x, y)) && X.q->leq(X.q->unit(), X.a(y, x));
}

bool is_separated(const VCat& X) {
  for (int x = 0; x < X.size(); ++x)
    for (int y = x + 1; y < X.size(); ++y)
      if (objects_equivalent(X, x, y)) return false;
  return true;
}

VFunctor VFunctor::identity(const VCat& X) {
  VFunctor f{X, X, {}};
  f.map.resize(static_cast<size_t>(X.size()));
  std::iota(f.map.begin(), f.map.end(), 0);
  return f;
}

std::vector<std::string> validate_functor(const VFunctor& f) {
  std::vector<std::string> bad;
  if (!same_quantale(*f.dom.q, *f.cod.q)) {
    bad.push_back("quantale mismatch");
    return bad;
  }
  if (static_cast<int>(f.map.size()) != f.dom.size()) {
    bad.push_back("map size mismatch");
    return bad;
  }
  for (int x : f.map)
    if (x < 0 || x >= f.cod.size()) {
      bad.push_back("map image out of range");
      return bad;
    }
  for (int x = 0; x < f.dom.size(); ++x)
    for (int y = 0; y < f.dom.size(); ++y)
      if (!f.dom.q->leq(f.dom.a(x, y), f.cod.a(f(x), f(y)))) {
        bad.push_back("not a contraction at (" + f.dom.objects[static_cast<size_t>(x)] + "," +
                      f.dom.objects[static_cast<size_t>(y)] + ")");
        return bad;
      }
  return bad;
}

VFunctor compose(const VFunctor& f, const VFunctor& g) {
  if (!(f.cod == g.dom)) throw std::invalid_argument("functor compose: shape mismatch");
  VFunctor h{f.dom, g.cod, {}};
  h.map.reserve(f.map.size());
  for (int x : f.map) h.map.push_back(g.map[static_cast<size_t>(x)]);
  return h;
}

bool functor_leq(const VFunctor& f, const VFunctor& g) {
  if (!(f.dom == g.dom) || !(f.cod == g.cod))
    throw std::invalid_argument("functor_leq: shape mismatch");
  for (int x = 0; x < f.dom.size(); ++x)
    if (!f.cod.q->leq(f.cod.q->unit(), f.cod.a(f(x), g(x)))) return false;
  return true;
}

SeparatedQuotient separated_quotient(const VCat& X) {
  const int n = X.size();
  std::vector<int> cls(static_cast<size_t>(n), -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    for (size_t c = 0; c < reps.size(); ++c)
      if (objects_equivalent(X, x, reps[c])) { cls[static_cast<size_t>(x)] = static_cast<int>(c); break; }
    if (cls[static_cast<size_t>(x)] < 0) {
      cls[static_cast<size_t>(x)] = static_cast<int>(reps.size());
      reps.push_back(x);
    }
  }
  VCat Q = full_subcat(X, reps);
  VFunctor proj{X, Q, cls};
  return {std::move(Q), std::move(proj), std::move(cls)};
}

VCat full_subcat(const VCat& X, const std::vector<int>& objs) {
  std::vector<std::string> names;
  for (int i : objs) names.push_back(X.objects[static_cast<size_t>(i)]);
  VCat S(X.q, std::move(names));
  for (size_t i = 0; i < objs.size(); ++i)
    for (size_t j = 0; j < objs.size(); ++j)
      S.hom.at(static_cast<int>(i), static_cast<int>(j)) = X.a(objs[i], objs[j]);
  return S;
}

bool vcat_isomorphic(const VCat& X, const VCat& Y) {
  if (X.size() != Y.size() || !same_quantale(*X.q, *Y.q)) return false;
  const int n = X.size();
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n; ++y)
        if (X.a(x, y) != Y.a(perm[static_cast<size_t>(x)], perm[static_cast<size_t>(y)])) {
          ok = false;
          break;
        }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace qwb
