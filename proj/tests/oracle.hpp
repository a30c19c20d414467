#ifndef IDEALSPACE_TESTS_ORACLE_HPP
#define IDEALSPACE_TESTS_ORACLE_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "idealspace/ring.hpp"

namespace idealspace::testing {

// Every subset of R that contains 0 and is closed under addition and under
// multiplication by ring elements.
inline std::set<std::vector<std::size_t>> oracle_ideals(const FiniteRing& r) {
  std::set<std::vector<std::size_t>> out;
  const std::size_t n = r.size();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    auto in = [&](Element x) { return (mask >> x) & 1U; };
    if (!in(r.zero())) continue;
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) {
      if (!in(a)) continue;
      for (Element b = 0; b < n && ok; ++b) {
        if (in(b) && !in(r.add(a, b))) ok = false;
        if (!in(r.mul(a, b))) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<std::size_t> members;
    for (Element x = 0; x < n; ++x)
      if (in(x)) members.push_back(x);
    out.insert(members);
  }
  return out;
}

}  // namespace idealspace::testing

#endif  // IDEALSPACE_TESTS_ORACLE_HPP
