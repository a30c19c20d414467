#ifndef IDEALSPACE_KERNELS_HPP
#define IDEALSPACE_KERNELS_HPP

// Data-parallel inner loops. Every kernel has a serial reference version and
// an OpenMP version that must return identical results; the tests compare
// them and bench/ measures them against each other.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "idealspace/bitset.hpp"
#include "idealspace/ring.hpp"

namespace idealspace::kernels {

namespace serial {

std::optional<AxiomViolation> ring_axioms(std::size_t size, std::span<const Element> add,
                                          std::span<const Element> mul, Element zero,
                                          Element one);

/// All finite unions of the generators (the generators included), sorted by
/// family_less. Throws CapExceeded when the family grows past cap.
std::vector<PointSet> union_closure(std::span<const PointSet> generators, std::size_t cap);

/// All intersections of the generators, plus `full` as the empty
/// intersection, sorted by family_less.
std::vector<PointSet> intersection_closure(std::span<const PointSet> generators, PointSet full,
                                           std::size_t cap);

}  // namespace serial

namespace parallel {

std::optional<AxiomViolation> ring_axioms(std::size_t size, std::span<const Element> add,
                                          std::span<const Element> mul, Element zero,
                                          Element one);

std::vector<PointSet> union_closure(std::span<const PointSet> generators, std::size_t cap);

std::vector<PointSet> intersection_closure(std::span<const PointSet> generators, PointSet full,
                                           std::size_t cap);

}  // namespace parallel

inline std::vector<PointSet> union_closure(std::span<const PointSet> generators, std::size_t cap,
                                           Exec exec) {
  return exec == Exec::serial ? serial::union_closure(generators, cap)
                              : parallel::union_closure(generators, cap);
}

inline std::vector<PointSet> intersection_closure(std::span<const PointSet> generators,
                                                  PointSet full, std::size_t cap, Exec exec) {
  return exec == Exec::serial ? serial::intersection_closure(generators, full, cap)
                              : parallel::intersection_closure(generators, full, cap);
}

}  // namespace idealspace::kernels

#endif  // IDEALSPACE_KERNELS_HPP
