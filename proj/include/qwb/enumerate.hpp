#ifndef QWB_ENUMERATE_HPP
#define QWB_ENUMERATE_HPP

#include <cstdint>
#include <functional>

#include "qwb/frames.hpp"
#include "qwb/vcat.hpp"

namespace qwb {

/// All labelled V-categories on n objects over q, by depth-first fill of the
/// structure matrix with partial reflexivity/transitivity pruning. Throws
/// CapExceeded when more than `cap` matrices would be visited.
std::vector<VCat> enumerate_vcats(const QuantalePtr& q, int n, long long cap = 10000000);

/// Independent boolean cross-check: count matrices whose Warshall closure
/// (with the diagonal forced) equals the matrix itself.
long long count_preorders_via_closure(int n);

/// All labelled partial orders on n elements as boolean V-categories, built
/// incrementally by attaching one element at a time via a (down-set, up-set)
/// pair.
std::vector<VCat> enumerate_posets(int n);

/// Labelled posets filtered to lattices / to frames (distributive lattices).
std::vector<VCat> enumerate_lattices(int n);
std::vector<MeetSemilattice> enumerate_frames(int n);

/// All functors X -> Y (maps passing validate_functor).
std::vector<VFunctor> all_functors(const VCat& X, const VCat& Y);

/// All maps {0..dom-1} -> {0..cod-1} as index vectors, odometer order.
std::vector<std::vector<int>> all_maps(int dom, int cod);

}  // namespace qwb

#endif
