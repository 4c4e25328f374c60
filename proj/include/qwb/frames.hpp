#ifndef QWB_FRAMES_HPP
#define QWB_FRAMES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qwb/vcat.hpp"

namespace qwb {

/// Finite meet-semilattice given by its order table; meets and top derived.
struct MeetSemilattice {
  std::vector<std::string> labels;
  std::vector<char> leq_;  // row-major
  std::vector<int> meet_;  // derived, -1 where missing
  int top_ = -1;

  int size() const { return static_cast<int>(labels.size()); }
  bool le(int x, int y) const { return leq_[static_cast<size_t>(x) * labels.size() + y] != 0; }
  int meet(int x, int y) const { return meet_[static_cast<size_t>(x) * labels.size() + y]; }
  int top() const { return top_; }
};

MeetSemilattice make_semilattice(std::vector<std::string> labels, std::vector<char> leq);
std::vector<std::string> validate_semilattice(const MeetSemilattice& L);

/// Binary join when it exists.
std::optional<int> lat_join(const MeetSemilattice& L, int x, int y);
std::optional<int> lat_bottom(const MeetSemilattice& L);
/// All binary joins exist, a bottom exists, and meet distributes over join.
bool is_frame(const MeetSemilattice& L);

/// A finite topological space: points and open sets as bitmasks.
struct FiniteSpace {
  std::vector<std::string> labels;
  std::vector<std::uint32_t> opens;  // sorted, unique

  int size() const { return static_cast<int>(labels.size()); }
  std::uint32_t full() const {
    return size() == 32 ? 0xffffffffu : ((1u << size()) - 1u);
  }
  bool is_open(std::uint32_t m) const;
};

std::vector<std::string> validate_space(const FiniteSpace& X);

/// Underlying order (dual of the specialisation order): x <= y iff every
/// open containing y contains x. Boolean VCat.
VCat space_order(const FiniteSpace& X);
/// Alexandrov space of a boolean VCat: opens are the down-sets.
FiniteSpace alexandrov(const VCat& X);

/// The filter space FL: all (possibly improper) filters, topology generated
/// by the basic opens x^#.
struct FilterSpace {
  MeetSemilattice base;
  std::vector<std::uint32_t> filters;  // element masks, ascending
  std::vector<std::uint32_t> xsharp;   // per element of L: filter mask
  FiniteSpace space;                   // points are the filters
};

FilterSpace filter_space(const MeetSemilattice& L);

bool is_meet_hom(const MeetSemilattice& L, const MeetSemilattice& M,
                 const std::vector<int>& f);
/// All top-and-meet preserving maps L -> M.
std::vector<std::vector<int>> all_meet_homs(const MeetSemilattice& L,
                                            const MeetSemilattice& M);

/// Ff(filter) = up-closure of the image; f_!(filter) = preimage.
struct FMapPair {
  std::vector<int> Ff;       // FL filter index -> FM filter index
  std::vector<int> shriek;   // FM filter index -> FL filter index
};
FMapPair F_on_maps(const FilterSpace& FL, const FilterSpace& FM, const std::vector<int>& f);

/// alpha(x) = x^#; the two beta formulas (meet over {x | A <= x^#} and join
/// over {y | y^# <= A}).
std::uint32_t alpha(const FilterSpace& FL, int x);
int beta_by_meet(const FilterSpace& FL, std::uint32_t A);
std::optional<int> beta_by_join(const FilterSpace& FL, std::uint32_t A);

/// Lambda(X): continuous left adjoint maps X -> Sierpinski 2 ({1} closed),
/// each stored as its closed set phi^{-1}(1). Pointwise order is mask
/// inclusion; Pt(X) is the opposite order.
struct Lambda {
  FiniteSpace X;
  std::vector<std::uint32_t> closed;  // ascending

  int size() const { return static_cast<int>(closed.size()); }
};

Lambda lambda_space(const FiniteSpace& X);
/// Pt(X) = Lambda(X)^op as a meet-semilattice; empty when some meet is
/// missing (possible only for non-ccd X).
std::optional<MeetSemilattice> pt_semilattice(const Lambda& lam);

struct RhoVerdict {
  bool applies = false;  // L is a frame
  bool iso = false;      // rho_L: L -> Pt(FL) bijective with x<=y iff phi_y<=phi_x
  std::string note;
};
RhoVerdict rho_check(const MeetSemilattice& L);

struct SigmaVerdict {
  bool applies = false;  // X passes the ccd criterion on its order shadow
  bool homeo = false;    // sigma_X: X -> F(Pt(X)) a homeomorphism
  std::string note;
};
SigmaVerdict sigma_check(const FiniteSpace& X);

}  // namespace qwb

#endif
