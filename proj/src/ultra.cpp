#include "qwb/ultra.hpp"

#include <algorithm>
#include <stdexcept>

namespace qwb {

bool is_ultrafilter(int n, std::uint32_t fam) {
  const std::uint32_t nsub = 1u << n;
  const std::uint32_t full = nsub - 1u;
  auto has = [&](std::uint32_t A) { return (fam >> A) & 1u; };
  if (has(0) || !has(full)) return false;
  for (std::uint32_t A = 0; A < nsub; ++A) {
    if (has(A)) {
      for (std::uint32_t B = 0; B < nsub; ++B) {
        if ((A & ~B) == 0 && !has(B)) return false;  // up-closed
        if (has(B) && !has(A & B)) return false;     // meet-closed
      }
    }
    if (has(A) == has(full & ~A)) return false;  // maximal and proper
  }
  return true;
}

UltraSpace ultrafilters(int n) {
  if (n < 0 || n > 4) throw std::invalid_argument("ultrafilters: brute force needs n <= 4");
  UltraSpace U;
  U.n = n;
  const std::uint32_t nsub = 1u << n;
  const std::uint64_t nfam = 1ull << nsub;
  for (std::uint64_t fam = 0; fam < nfam; ++fam)
    if (is_ultrafilter(n, static_cast<std::uint32_t>(fam)))
      U.families.push_back(static_cast<std::uint32_t>(fam));
  U.principal.assign(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    std::uint32_t dot = 0;
    for (std::uint32_t A = 0; A < nsub; ++A)
      if ((A >> x) & 1u) dot |= (1u << A);
    auto it = std::find(U.families.begin(), U.families.end(), dot);
    if (it == U.families.end()) throw std::logic_error("principal ultrafilter missing");
    U.principal[static_cast<size_t>(x)] = static_cast<int>(it - U.families.begin());
  }
  return U;
}

UltraSpace principal_ultrafilters(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("principal_ultrafilters: n too large");
  UltraSpace U;
  U.n = n;
  // n > 4 would overflow the family bitmask; cap subset masks at what fits
  if (n > 4) throw std::invalid_argument("principal_ultrafilters: family masks need n <= 4");
  const std::uint32_t nsub = 1u << n;
  for (int x = 0; x < n; ++x) {
    std::uint32_t dot = 0;
    for (std::uint32_t A = 0; A < nsub; ++A)
      if ((A >> x) & 1u) dot |= (1u << A);
    U.families.push_back(dot);
    U.principal.push_back(x);
  }
  std::sort(U.families.begin(), U.families.end());
  for (int x = 0; x < n; ++x) {
    std::uint32_t dot = 0;
    for (std::uint32_t A = 0; A < nsub; ++A)
      if ((A >> x) & 1u) dot |= (1u << A);
    U.principal[static_cast<size_t>(x)] = static_cast<int>(
        std::find(U.families.begin(), U.families.end(), dot) - U.families.begin());
  }
  return U;
}

std::uint32_t sharp(const UltraSpace& UX, std::uint32_t A) {
  std::uint32_t out = 0;
  for (int i = 0; i < UX.count(); ++i)
    if ((UX.families[static_cast<size_t>(i)] >> A) & 1u) out |= (1u << i);
  return out;
}

VRel barr_extension(const VRel& r, const UltraSpace& UX, const UltraSpace& UY) {
  if (r.q->size() != 2)
    throw std::invalid_argument("barr_extension: boolean relations only");
  if (r.rows != UX.n || r.cols != UY.n)
    throw std::invalid_argument("barr_extension: shape mismatch");
  const Elem top = r.q->top();
  const Elem bot = r.q->bottom();
  VRel out(r.q, UX.count(), UY.count(), bot);
  const std::uint32_t nsx = 1u << UX.n;
  const std::uint32_t nsy = 1u << UY.n;
  for (int i = 0; i < UX.count(); ++i)
    for (int j = 0; j < UY.count(); ++j) {
      bool rel = true;
      for (std::uint32_t A = 0; A < nsx && rel; ++A) {
        if (!((UX.families[static_cast<size_t>(i)] >> A) & 1u)) continue;
        for (std::uint32_t B = 0; B < nsy && rel; ++B) {
          if (!((UY.families[static_cast<size_t>(j)] >> B) & 1u)) continue;
          bool found = false;
          for (int x = 0; x < UX.n && !found; ++x)
            if ((A >> x) & 1u)
              for (int y = 0; y < UY.n && !found; ++y)
                if (((B >> y) & 1u) && r.at(x, y) == top) found = true;
          rel = found;
        }
      }
      if (rel) out.at(i, j) = top;
    }
  return out;
}

std::vector<int> monad_mult_ultra(const UltraSpace& UX, const UltraSpace& UUX) {
  if (UUX.n != UX.count()) throw std::invalid_argument("monad_mult_ultra: carrier mismatch");
  std::vector<int> m;
  const std::uint32_t nsub = 1u << UX.n;
  for (int i = 0; i < UUX.count(); ++i) {
    std::uint32_t fam = 0;
    for (std::uint32_t A = 0; A < nsub; ++A)
      if ((UUX.families[static_cast<size_t>(i)] >> sharp(UX, A)) & 1u) fam |= (1u << A);
    auto it = std::find(UX.families.begin(), UX.families.end(), fam);
    if (it == UX.families.end())
      throw std::logic_error("monad_mult_ultra: result is not an ultrafilter");
    m.push_back(static_cast<int>(it - UX.families.begin()));
  }
  return m;
}

VRel kleisli_compose(const VRel& r, const VRel& s, const UltraSpace& UX,
                     const UltraSpace& UY, const UltraSpace& UUX) {
  if (r.q->size() != 2) throw std::invalid_argument("kleisli_compose: boolean only");
  if (r.rows != UX.count() || s.rows != UY.count())
    throw std::invalid_argument("kleisli_compose: shape mismatch");
  const Elem top = r.q->top();
  VRel Ur = barr_extension(r, UUX, UY);  // U(UX) -> U(Y)
  std::vector<int> m = monad_mult_ultra(UX, UUX);
  VRel out(r.q, UX.count(), s.cols, r.q->bottom());
  for (int rho = 0; rho < UX.count(); ++rho)
    for (int z = 0; z < s.cols; ++z) {
      bool hit = false;
      for (int big = 0; big < UUX.count() && !hit; ++big) {
        if (m[static_cast<size_t>(big)] != rho) continue;
        for (int j = 0; j < UY.count() && !hit; ++j)
          if (Ur.at(big, j) == top && s.at(j, z) == top) hit = true;
      }
      if (hit) out.at(rho, z) = top;
    }
  return out;
}

}  // namespace qwb
