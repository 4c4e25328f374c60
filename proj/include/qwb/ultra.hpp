#ifndef QWB_ULTRA_HPP
#define QWB_ULTRA_HPP

#include <cstdint>

#include "qwb/vrel.hpp"

namespace qwb {

/// Ultrafilters on a finite carrier {0..n-1}. A subset of the carrier is a
/// bitmask s < 2^n; a family of subsets is a bitmask over those, so n <= 4
/// in brute-force mode.
struct UltraSpace {
  int n = 0;
  std::vector<std::uint32_t> families;  // ascending
  std::vector<int> principal;           // x -> index of the principal ultrafilter

  int count() const { return static_cast<int>(families.size()); }
};

bool is_ultrafilter(int n, std::uint32_t fam);

/// Brute force over all 2^(2^n) families; n <= 4.
UltraSpace ultrafilters(int n);
/// Principal mode: just {dot-x | x}; n <= 20 (carrier of the result).
UltraSpace principal_ultrafilters(int n);

/// A^# = {ultrafilters containing A}, as a bitmask over the carrier of UX.
std::uint32_t sharp(const UltraSpace& UX, std::uint32_t A);

/// Barr extension of a boolean relation r: X -> Y to UX -> UY via the
/// double-quantifier formula. Throws on non-boolean input.
VRel barr_extension(const VRel& r, const UltraSpace& UX, const UltraSpace& UY);

/// m_X: UUX -> UX, per-index; UUX must be the ultrafilter space on the
/// carrier of UX.
std::vector<int> monad_mult_ultra(const UltraSpace& UX, const UltraSpace& UUX);

/// Kleisli composite of r: UX -> Y and s: UY -> Z, i.e. s . Ur . m_X degree.
VRel kleisli_compose(const VRel& r, const VRel& s, const UltraSpace& UX,
                     const UltraSpace& UY, const UltraSpace& UUX);

}  // namespace qwb

#endif
