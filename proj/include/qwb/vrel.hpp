#ifndef QWB_VREL_HPP
#define QWB_VREL_HPP

#include <vector>

#include "qwb/quantale.hpp"

namespace qwb {

/// A V-valued matrix between finite carriers, stored dense and row-major.
/// Composition convention throughout: (s.r)(x,z) = join_y r(x,y) (x) s(y,z),
/// written here as compose(r, s) with r applied first.
struct VRel {
  QuantalePtr q;
  int rows = 0;
  int cols = 0;
  std::vector<Elem> m;

  VRel() = default;
  VRel(QuantalePtr quant, int r, int c, Elem fill = -1)
      : q(std::move(quant)), rows(r), cols(c),
        m(static_cast<size_t>(r) * c, fill < 0 ? q->bottom() : fill) {}

  Elem at(int i, int j) const { return m[static_cast<size_t>(i) * cols + j]; }
  Elem& at(int i, int j) { return m[static_cast<size_t>(i) * cols + j]; }

  static VRel identity(const QuantalePtr& q, int n);

  friend bool operator==(const VRel& a, const VRel& b) {
    return a.rows == b.rows && a.cols == b.cols && a.m == b.m;
  }
};

/// compose(r: X->Y, s: Y->Z): apply r first. Throws on shape or quantale mismatch.
VRel compose(const VRel& r, const VRel& s);

VRel opposite(const VRel& r);

/// Extension of psi along phi: the largest rho with compose(phi, rho) <= psi.
/// psi: X->Z, phi: X->Y, result: Y->Z with (y,z) -> meet_x hom(phi(x,y), psi(x,z)).
VRel extend(const VRel& psi, const VRel& phi);

/// Lifting of psi along phi: the largest rho with compose(rho, phi) <= psi.
/// phi: Y->Z, psi: X->Z, result: X->Y with (x,y) -> meet_z hom(phi(y,z), psi(x,z)).
VRel lift(const VRel& phi, const VRel& psi);

/// Pointwise order in the quantale order.
bool rel_leq(const VRel& a, const VRel& b);

VRel rel_join(const VRel& a, const VRel& b);
VRel rel_meet(const VRel& a, const VRel& b);

}  // namespace qwb

#endif
