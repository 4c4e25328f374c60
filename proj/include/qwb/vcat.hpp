#ifndef QWB_VCAT_HPP
#define QWB_VCAT_HPP

#include <string>
#include <vector>

#include "qwb/vrel.hpp"

namespace qwb {

/// A finite V-category: object labels plus the structure matrix a,
/// reflexive (k <= a(x,x)) and transitive (a(x,y) (x) a(y,z) <= a(x,z)).
struct VCat {
  QuantalePtr q;
  std::vector<std::string> objects;
  VRel hom;  // square, objects x objects

  VCat() = default;
  VCat(QuantalePtr quant, std::vector<std::string> objs);
  /// Discrete V-category on n anonymous objects.
  static VCat discrete(const QuantalePtr& q, int n);

  int size() const { return static_cast<int>(objects.size()); }
  Elem a(int x, int y) const { return hom.at(x, y); }

  friend bool operator==(const VCat& x, const VCat& y) {
    return x.hom == y.hom && same_quantale(*x.q, *y.q);
  }
};

std::vector<std::string> validate(const VCat& X);

VCat op(const VCat& X);
VCat tensor(const VCat& X, const VCat& Y);

/// Boolean shadow: x <= y iff k <= a(x,y).
VCat underlying_order(const VCat& X);

/// x ~ y when k <= a(x,y) and k <= a(y,x).
bool objects_equivalent(const VCat& X, int x, int y);
bool is_separated(const VCat& X);

struct VFunctor {
  VCat dom, cod;
  std::vector<int> map;

  int operator()(int x) const { return map[static_cast<size_t>(x)]; }
  static VFunctor identity(const VCat& X);
};

std::vector<std::string> validate_functor(const VFunctor& f);
VFunctor compose(const VFunctor& f, const VFunctor& g);  // f first

/// Pointwise hom order on functors: f <= g iff k <= b(f x, g x) for all x.
bool functor_leq(const VFunctor& f, const VFunctor& g);

struct SeparatedQuotient {
  VCat quotient;
  VFunctor projection;
  std::vector<int> cls;  // object -> class index
};
SeparatedQuotient separated_quotient(const VCat& X);

/// Full sub-V-category on the given object indices.
VCat full_subcat(const VCat& X, const std::vector<int>& objs);

/// Structural isomorphism search (object bijection preserving hom exactly).
bool vcat_isomorphic(const VCat& X, const VCat& Y);

}  // namespace qwb

#endif
