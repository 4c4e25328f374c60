#ifndef QWB_TESTS_HELPERS_HPP
#define QWB_TESTS_HELPERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qwb/vcat.hpp"

namespace qwb::testing {

/// Boolean chain poset 0 < 1 < ... < n-1.
inline VCat bool_chain(int n) {
  QuantalePtr b = make_boolean();
  VCat X = VCat::discrete(b, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) X.hom.at(i, j) = b->top();
  return X;
}

/// Boolean VCat from an explicit row-major 0/1 order table.
inline VCat bool_cat(int n, const std::vector<int>& leq) {
  QuantalePtr b = make_boolean();
  VCat X = VCat::discrete(b, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      X.hom.at(i, j) = leq[static_cast<size_t>(i) * n + j] ? b->top() : b->bottom();
  return X;
}

/// The five-element non-distributive lattice: bottom, three atoms, top.
inline VCat m3() {
  return bool_cat(5, {1, 1, 1, 1, 1,   // bottom
                      0, 1, 0, 0, 1,   // atom a
                      0, 0, 1, 0, 1,   // atom b
                      0, 0, 0, 1, 1,   // atom c
                      0, 0, 0, 0, 1}); // top
}

/// Powerset of a 2-element set as a boolean lattice: {}, {a}, {b}, {a,b}.
inline VCat powerset2() {
  return bool_cat(4, {1, 1, 1, 1,
                      0, 1, 0, 1,
                      0, 0, 1, 1,
                      0, 0, 0, 1});
}

}  // namespace qwb::testing

#endif
