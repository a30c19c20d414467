#ifndef IDEALSPACE_SPECTRUM_HPP
#define IDEALSPACE_SPECTRUM_HPP

#include <optional>
#include <vector>

#include <json.hpp>

#include "idealspace/bitset.hpp"
#include "idealspace/hom.hpp"
#include "idealspace/ideal.hpp"
#include "idealspace/verdict.hpp"

namespace idealspace {

/// The ideals of one kind, R excluded, in canonical lattice order. Hulls of
/// every lattice member are precomputed.
class Spectrum {
 public:
  /// Throws CapExceeded beyond PointSet::kMaxPoints points.
  Spectrum(LatticePtr lattice, SpectrumKind kind, Exec exec = Exec::parallel);

  const LatticePtr& lattice() const { return lattice_; }
  const RingPtr& ring() const { return lattice_->ring(); }
  SpectrumKind kind() const { return kind_; }

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  PointSet all() const { return PointSet::full(points_.size()); }

  /// Lattice position of point p.
  std::size_t lattice_index(std::size_t p) const { return points_[p]; }
  const Ideal& point(std::size_t p) const { return (*lattice_)[points_[p]]; }
  std::optional<std::size_t> point_of(std::size_t lattice_index) const;

  /// h(a) for the lattice member at the given position.
  PointSet hull(std::size_t lattice_index) const { return hulls_[lattice_index]; }
  PointSet hull(const Ideal& a) const { return hulls_[lattice_->index_of(a)]; }

  /// Lattice position of k(S); k(∅) is R.
  std::size_t kernel(PointSet s) const;
  const Ideal& kernel_ideal(PointSet s) const { return (*lattice_)[kernel(s)]; }

 private:
  LatticePtr lattice_;
  SpectrumKind kind_;
  std::vector<std::size_t> points_;
  std::vector<long> point_of_;
  std::vector<PointSet> hulls_;
};

/// Enumerates the lattice and builds the spectrum.
Spectrum make_spectrum(const RingPtr& ring, SpectrumKind kind, const Limits& limits = {});

/// Names of the points in s, ascending.
nlohmann::json point_set_json(const Spectrum& spec, PointSet s);

/// {k(S) : S ⊆ X} as ascending lattice positions; R (from S = ∅) included.
std::vector<std::size_t> image_of_kernel(const Spectrum& spec);

struct MipWitness {
  std::size_t a;  // lattice positions
  std::size_t b;
  std::size_t s;  // point
};

/// a, b range over im(k) from the largest down, s over points ascending.
std::optional<MipWitness> find_mip_failure(const Spectrum& spec);
VerdictReport check_mip(const Spectrum& spec);

/// k(h(a)) as a lattice position.
std::size_t x_radical(const Spectrum& spec, std::size_t lattice_index);
Ideal x_radical(const Spectrum& spec, const Ideal& a);

/// Largest proper ideal with empty hull, if any.
std::optional<std::size_t> partition_of_unity_violation(const Spectrum& spec);
bool has_partition_of_unity(const Spectrum& spec);

/// Whether every maximal ideal of the ring is a point.
bool contains_all_maximal(const Spectrum& spec);

/// f^{-1}(b) lies in X(R) for every b in X(R'). An empty X(R') is vacuous.
VerdictReport check_contraction_property(SpectrumKind kind, const RingHom& f,
                                         const Limits& limits = {});
/// Same, with both spectra already built (source over f's source ring).
VerdictReport check_contraction_property(const Spectrum& source, const Spectrum& target,
                                         const RingHom& f);

}  // namespace idealspace

#endif  // IDEALSPACE_SPECTRUM_HPP
