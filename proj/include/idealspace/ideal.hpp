#ifndef IDEALSPACE_IDEAL_HPP
#define IDEALSPACE_IDEAL_HPP

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "idealspace/bitset.hpp"
#include "idealspace/ring.hpp"

namespace idealspace {

using ElementSet = BitSet;

/// An ideal of a finite ring, stored as its membership set.
class Ideal {
 public:
  /// Checks the ideal axioms; throws InvalidIdeal otherwise.
  Ideal(RingPtr ring, ElementSet members);

  /// Skips the axiom check. For sets that are ideals by construction.
  static Ideal trusted(RingPtr ring, ElementSet members);

  const RingPtr& ring() const { return ring_; }
  const ElementSet& members() const { return members_; }
  std::size_t size() const { return members_.count(); }
  bool contains(Element x) const { return members_.test(x); }
  bool proper() const { return members_.count() != ring_->size(); }
  bool is_zero() const { return members_.count() == 1; }
  bool is_subset_of(const Ideal& other) const { return members_.is_subset_of(other.members_); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_ == b.ring_ && a.members_ == b.members_;
  }

 private:
  Ideal(RingPtr ring, ElementSet members, bool /*trusted*/)
      : ring_(std::move(ring)), members_(std::move(members)) {}

  RingPtr ring_;
  ElementSet members_;
};

/// Smallest ideal containing gens (closure under addition and ring
/// multiplication).
Ideal generate_ideal(const RingPtr& ring, std::span<const Element> gens);
Ideal zero_ideal(const RingPtr& ring);
Ideal unit_ideal(const RingPtr& ring);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, std::size_t k);

/// {x : x^k in a for some 1 <= k <= |R|}.
Ideal radical(const Ideal& a);

/// A short generating set: a single generator when the ideal is principal.
std::vector<Element> generators_of(const Ideal& a);

/// Kinds of spectra. The order here is the canonical reporting order.
enum class SpectrumKind { Spc, Max, Spn, Min, Prp, Rad, Prm, Nil, Nip, Irr, Irc, Prn, Reg, Fgn, Irs };

inline constexpr std::array<SpectrumKind, 15> kAllKinds = {
    SpectrumKind::Spc, SpectrumKind::Max, SpectrumKind::Spn, SpectrumKind::Min,
    SpectrumKind::Prp, SpectrumKind::Rad, SpectrumKind::Prm, SpectrumKind::Nil,
    SpectrumKind::Nip, SpectrumKind::Irr, SpectrumKind::Irc, SpectrumKind::Prn,
    SpectrumKind::Reg, SpectrumKind::Fgn, SpectrumKind::Irs};

/// "Spc", "Max", ...
std::string_view kind_name(SpectrumKind kind);
/// Case-insensitive; throws UnknownName.
SpectrumKind parse_kind(std::string_view tag);

/// All ideals of one ring in canonical order (by size, then by member list):
/// index 0 is the zero ideal and the last index is R.
class IdealLattice {
 public:
  IdealLattice(RingPtr ring, std::vector<Ideal> ideals);

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return ideals_.size(); }
  const Ideal& operator[](std::size_t i) const { return ideals_[i]; }
  const std::vector<Ideal>& ideals() const { return ideals_; }

  std::size_t zero_index() const { return 0; }
  std::size_t unit_index() const { return ideals_.size() - 1; }

  /// ideals[i] is a subset of ideals[j].
  bool leq(std::size_t i, std::size_t j) const { return leq_[i].test(j); }

  std::optional<std::size_t> find(const ElementSet& members) const;
  /// Throws UnknownName if the ideal is not in this lattice.
  std::size_t index_of(const Ideal& a) const;

  /// Positions of a+b and a∩b. Tabulated for lattices up to 1024 ideals.
  std::size_t sum_index(std::size_t i, std::size_t j) const;
  std::size_t meet_index(std::size_t i, std::size_t j) const;

 private:
  RingPtr ring_;
  std::vector<Ideal> ideals_;
  std::vector<BitSet> leq_;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> meet_;
  std::unordered_map<BitSet, std::size_t, BitSetHash> index_;
};

using LatticePtr = std::shared_ptr<const IdealLattice>;

/// Closure of the principal ideals under pairwise sums, plus the zero ideal.
LatticePtr enumerate_ideals(const RingPtr& ring, const Limits& limits = {});

/// Whether lattice[index] belongs to the spectrum of the given kind. Every
/// kind except Fgn rejects R.
bool classify(const IdealLattice& lattice, std::size_t index, SpectrumKind kind);

/// Convenience overload; enumerates the ideal lattice of a's ring.
bool classify(const Ideal& a, SpectrumKind kind);

/// classify() for every lattice member.
std::vector<bool> classify_all(const IdealLattice& lattice, SpectrumKind kind,
                               Exec exec = Exec::parallel);

}  // namespace idealspace

#endif  // IDEALSPACE_IDEAL_HPP
