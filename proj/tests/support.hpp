#ifndef IDEALSPACE_TESTS_SUPPORT_HPP
#define IDEALSPACE_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "idealspace/hom.hpp"
#include "idealspace/ideal.hpp"
#include "idealspace/render.hpp"
#include "idealspace/ring_expr.hpp"
#include "idealspace/spectrum.hpp"
#include "idealspace/topology.hpp"

namespace idealspace::testing {

inline RingPtr ring(const std::string& expr) { return parse_ring_expression(expr); }

inline Element elem(const RingPtr& r, const std::string& name) {
  auto e = r->find(name);
  if (!e) throw std::runtime_error("no element " + name + " in " + r->label());
  return *e;
}

inline Ideal gen(const RingPtr& r, std::initializer_list<std::string> names) {
  std::vector<Element> g;
  for (const auto& n : names) g.push_back(elem(r, n));
  return generate_ideal(r, g);
}

/// ASCII labels of the points in s.
inline std::vector<std::string> labels(const Spectrum& spec, PointSet s) {
  std::vector<std::string> out;
  s.for_each([&](std::size_t p) { out.push_back(ideal_label(spec.point(p))); });
  return out;
}

inline std::vector<std::string> all_labels(const Spectrum& spec) { return labels(spec, spec.all()); }

/// Point set from ASCII labels.
inline PointSet points(const Spectrum& spec, std::initializer_list<std::string> names) {
  PointSet s;
  for (const auto& n : names) {
    bool found = false;
    for (std::size_t p = 0; p < spec.size(); ++p)
      if (ideal_label(spec.point(p)) == n) {
        s.insert(p);
        found = true;
      }
    if (!found) throw std::runtime_error("no point " + n);
  }
  return s;
}

inline std::vector<std::string> suite() {
  return {"Z2", "Z4", "Z6", "Z8", "Z12", "Z36", "Z2xZ2xZ2", "Z2xZ4", "Z6xZ6"};
}

/// Every ring of order at most 16 reachable by the expression grammar, up to
/// the obvious isomorphisms, plus a few quotient and localization forms.
inline std::vector<std::string> small_rings() {
  std::vector<std::string> out;
  for (int n = 2; n <= 16; ++n) out.push_back("Z" + std::to_string(n));
  for (const char* e : {"Z2xZ2", "Z2xZ3", "Z2xZ4", "Z2xZ5", "Z2xZ6", "Z2xZ7", "Z2xZ8", "Z3xZ3", "Z3xZ4",
                        "Z3xZ5", "Z4xZ4", "Z2xZ2xZ2", "Z2xZ2xZ3", "Z2xZ2xZ4", "Z2xZ2xZ2xZ2", "Z12/(4)",
                        "Z12@(2)", "Z4xZ4/((2,2))"})
    out.emplace_back(e);
  return out;
}

}  // namespace idealspace::testing

#endif  // IDEALSPACE_TESTS_SUPPORT_HPP
