#ifndef QWB_QUANTALE_HPP
#define QWB_QUANTALE_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwb {

/// Index into a quantale carrier.
using Elem = int;

/// Thrown when an enumeration would exceed its configured candidate cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite commutative unital quantale given by explicit tables.
///
/// The order table is primary; joins, meets, bottom, top and the internal hom
/// are derived from it (hom by exhaustive maximization, so it cannot drift
/// from the tensor table). Instances are immutable after construction.
class Quantale {
 public:
  Quantale(std::string name, std::vector<std::string> labels,
           std::vector<char> leq, std::vector<Elem> tensor, Elem unit);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& name() const { return name_; }
  const std::string& label(Elem x) const { return labels_.at(static_cast<size_t>(x)); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool leq(Elem x, Elem y) const { return leq_[idx(x, y)] != 0; }
  Elem tensor(Elem x, Elem y) const { return tensor_[idx(x, y)]; }
  Elem unit() const { return unit_; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  /// Binary join/meet; -1 in the table means the bound does not exist
  /// (only possible for invalid input data; validate() reports it).
  Elem join(Elem x, Elem y) const { return join_[idx(x, y)]; }
  Elem meet(Elem x, Elem y) const { return meet_[idx(x, y)]; }
  Elem hom(Elem x, Elem y) const { return hom_[idx(x, y)]; }

  template <typename Range>
  Elem join_all(const Range& xs) const {
    Elem acc = bottom_;
    for (Elem x : xs) acc = join(acc, x);
    return acc;
  }
  template <typename Range>
  Elem meet_all(const Range& xs) const {
    Elem acc = top_;
    for (Elem x : xs) acc = meet(acc, x);
    return acc;
  }

  /// Index of a label, or -1.
  Elem find_label(const std::string& s) const;

  bool integral() const { return top_ == unit_; }

 private:
  size_t idx(Elem x, Elem y) const { return static_cast<size_t>(x) * labels_.size() + static_cast<size_t>(y); }

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<char> leq_;
  std::vector<Elem> tensor_;
  Elem unit_;
  Elem bottom_ = 0, top_ = 0;
  std::vector<Elem> join_, meet_, hom_;
};

using QuantalePtr = std::shared_ptr<const Quantale>;

/// The two-element quantale {bot, top} with tensor = meet, unit = top.
QuantalePtr make_boolean();

/// Truncated addition chain {0, 1, ..., n, inf} with the numerically
/// reversed order (0 is top and unit, inf is absorbing bottom).
QuantalePtr make_chain(int n);

QuantalePtr make_quantale(std::string name, std::vector<std::string> labels,
                          std::vector<char> leq, std::vector<Elem> tensor, Elem unit);

/// Exhaustive axiom check; each violation is one human-readable line,
/// empty result means valid.
std::vector<std::string> validate(const Quantale& q);

/// True when two references denote the same quantale (pointer or structural).
bool same_quantale(const Quantale& a, const Quantale& b);

}  // namespace qwb

#endif
