#ifndef IDEALSPACE_TOPOLOGY_HPP
#define IDEALSPACE_TOPOLOGY_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "idealspace/bitset.hpp"
#include "idealspace/spectrum.hpp"
#include "idealspace/verdict.hpp"

namespace idealspace {

/// A topology on points 0..points-1 given by its closed sets.
struct FiniteSpace {
  std::size_t points = 0;
  /// Sorted by family_less; contains ∅ and the full set.
  std::vector<PointSet> closed;

  PointSet full() const { return PointSet::full(points); }
  bool is_closed(PointSet s) const;
  /// Smallest closed superset.
  PointSet closure(PointSet s) const;
  /// The subspace on y, points renumbered in ascending order.
  FiniteSpace subspace(PointSet y) const;

  /// The topology generated by a closed subbase.
  static FiniteSpace from_subbase(std::size_t points, std::span<const PointSet> subbase,
                                  const Limits& limits = {}, Exec exec = Exec::parallel);
};

std::optional<std::pair<std::size_t, std::size_t>> t0_violation(const FiniteSpace& x);
/// A point whose singleton is not closed.
std::optional<std::size_t> t1_violation(const FiniteSpace& x);

struct IrreducibleSet {
  PointSet set;
  /// Points whose closure is the whole set.
  PointSet generic;
};

bool is_irreducible(const FiniteSpace& x, PointSet closed_set);
std::vector<IrreducibleSet> irreducible_closed_sets(const FiniteSpace& x);
/// An irreducible closed set without exactly one generic point.
std::optional<IrreducibleSet> sobriety_violation(const FiniteSpace& x);
/// A nonempty proper subset that is both open and closed.
std::optional<PointSet> disconnection(const FiniteSpace& x);
/// Nonempty disjoint A, B in family with A ∪ B = full; A is taken from the
/// largest member down.
std::optional<std::pair<PointSet, PointSet>> strong_disconnection(std::span<const PointSet> family,
                                                                  PointSet full);

/// The coarse lower topology on a spectrum.
class TopologySpace {
 public:
  TopologySpace(Spectrum spectrum, std::vector<PointSet> subbase, std::vector<std::size_t> subbase_ideals,
                std::vector<PointSet> base, FiniteSpace space)
      : spectrum_(std::move(spectrum)),
        subbase_(std::move(subbase)),
        subbase_ideals_(std::move(subbase_ideals)),
        base_(std::move(base)),
        space_(std::move(space)) {}

  const Spectrum& spectrum() const { return spectrum_; }
  /// Distinct hulls, sorted by family_less.
  const std::vector<PointSet>& subbase() const { return subbase_; }
  /// k(A) for each subbase member A, as lattice positions; A = h(k(A)).
  const std::vector<std::size_t>& subbase_ideals() const { return subbase_ideals_; }
  /// Finite unions of subbase members.
  const std::vector<PointSet>& base() const { return base_; }
  const std::vector<PointSet>& closed_family() const { return space_.closed; }
  const FiniteSpace& space() const { return space_; }
  std::size_t size() const { return space_.points; }
  PointSet full() const { return space_.full(); }

 private:
  Spectrum spectrum_;
  std::vector<PointSet> subbase_;
  std::vector<std::size_t> subbase_ideals_;
  std::vector<PointSet> base_;
  FiniteSpace space_;
};

/// Throws CapExceeded above limits.max_points points or
/// limits.max_closed_sets members in a family.
TopologySpace generate_topology(const Spectrum& spec, const Limits& limits = {},
                                Exec exec = Exec::parallel);

PointSet closure_of(const TopologySpace& t, PointSet s);

VerdictReport is_T0(const TopologySpace& t);
VerdictReport is_T1(const TopologySpace& t);
VerdictReport is_sober(const TopologySpace& t);
VerdictReport is_connected(const TopologySpace& t);
/// Finite spaces are quasi-compact; the witness records whether the
/// partition-of-unity route applies.
VerdictReport is_quasi_compact(const TopologySpace& t);

enum class Family { subbase, base };
VerdictReport strongly_disconnects(const TopologySpace& t, Family family);

/// Whether h(a), h(b) are nonempty, disjoint and cover the space. On failure
/// the witness names the largest uncovered point or the shared points.
VerdictReport pair_disconnects(const TopologySpace& t, std::size_t a, std::size_t b);

/// For h(a), h(b) strongly disconnecting the space of a ring with zero
/// Jacobson radical whose spectrum holds every maximal ideal: the idempotent
/// e in a with 1 - e in b.
Element extract_idempotent(const TopologySpace& t, std::size_t a, std::size_t b);

/// Whether f (points of x to points of y, a bijection) maps the closed sets
/// of x exactly onto those of y.
bool verify_homeomorphism(std::span<const std::size_t> f, const FiniteSpace& x, const FiniteSpace& y);

}  // namespace idealspace

#endif  // IDEALSPACE_TOPOLOGY_HPP
