#ifndef IDEALSPACE_HOM_HPP
#define IDEALSPACE_HOM_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "idealspace/ideal.hpp"
#include "idealspace/ring.hpp"

namespace idealspace {

/// A unity-preserving ring homomorphism given pointwise.
class RingHom {
 public:
  /// Verifies additivity, multiplicativity and 1 -> 1 on all pairs.
  RingHom(RingPtr source, RingPtr target, std::vector<Element> map);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::vector<Element>& map() const { return map_; }
  Element operator()(Element x) const { return map_[x]; }

  bool is_surjective() const;
  bool is_injective() const;

  friend bool operator==(const RingHom& a, const RingHom& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.map_ == b.map_;
  }

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<Element> map_;
};

/// A multiplicatively closed subset containing 1.
class MultiplicativeSet {
 public:
  /// The multiplicative closure of gens together with 1.
  static MultiplicativeSet generated_by(RingPtr ring, std::span<const Element> gens);

  const RingPtr& ring() const { return ring_; }
  const ElementSet& members() const { return members_; }
  const std::vector<Element>& generators() const { return generators_; }
  bool contains(Element x) const { return members_.test(x); }

 private:
  MultiplicativeSet(RingPtr ring, ElementSet members, std::vector<Element> gens)
      : ring_(std::move(ring)), members_(std::move(members)), generators_(std::move(gens)) {}

  RingPtr ring_;
  ElementSet members_;
  std::vector<Element> generators_;
};

/// R/a with the smallest member of each coset as representative (and name),
/// plus the canonical surjection. An empty label is derived from R and a.
std::pair<RingPtr, RingHom> make_quotient(const RingPtr& ring, const Ideal& a,
                                          std::string label = {});

/// R_S realised as eR, where e is the idempotent power of the product of all
/// members of S; the hom is r -> re.
std::pair<RingPtr, RingHom> localize(const MultiplicativeSet& s, std::string label = {});

/// The idempotent e with R_S = eR.
Element localization_idempotent(const MultiplicativeSet& s);

/// All unity-preserving homs R -> R'. Throws CapExceeded when |R|*|R'| is
/// above limits.max_hom_work.
std::vector<RingHom> enumerate_homs(const RingPtr& source, const RingPtr& target,
                                    const Limits& limits = {});

/// A ring isomorphism source -> target, if one exists.
std::optional<RingHom> find_isomorphism(const RingPtr& source, const RingPtr& target,
                                        const Limits& limits = {});

/// {x : 1 - rx is a unit for every r}, equal to the intersection of the
/// maximal ideals.
Ideal jacobson_radical(const RingPtr& ring);

/// f^{-1}(b), an ideal of the source.
Ideal contraction(const RingHom& f, const Ideal& b);

Ideal kernel_of(const RingHom& f);

/// Every element a admits x with a = axa.
bool is_von_neumann_regular(const FiniteRing& ring);

}  // namespace idealspace

#endif  // IDEALSPACE_HOM_HPP
