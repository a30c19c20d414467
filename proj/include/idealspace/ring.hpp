#ifndef IDEALSPACE_RING_HPP
#define IDEALSPACE_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "idealspace/error.hpp"

namespace idealspace {

using Element = std::uint32_t;

/// A finite commutative ring with identity stored as dense operation tables
/// over element indices 0..size-1. Immutable once constructed.
class FiniteRing {
 public:
  /// Validates table shapes and every ring axiom over all element triples.
  /// Size-1 rings are rejected.
  FiniteRing(std::size_t size, std::vector<Element> add, std::vector<Element> mul, Element zero,
             Element one, std::string label, std::vector<std::string> names,
             Exec exec = Exec::parallel);

  std::size_t size() const { return size_; }
  Element zero() const { return zero_; }
  Element one() const { return one_; }
  const std::string& label() const { return label_; }

  Element add(Element a, Element b) const { return add_[a * size_ + b]; }
  Element mul(Element a, Element b) const { return mul_[a * size_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element power(Element a, std::size_t k) const;

  bool is_unit(Element a) const { return inverse_[a].has_value(); }
  std::optional<Element> inverse(Element a) const { return inverse_[a]; }
  bool is_zero_divisor(Element a) const;
  bool is_idempotent(Element a) const { return mul(a, a) == a; }
  bool is_nilpotent(Element a) const;
  std::size_t additive_order(Element a) const;

  /// The image of the integer k under Z -> R.
  Element from_integer(long long k) const;

  const std::string& name(Element a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Element> find(const std::string& name) const;

  std::span<const Element> add_table() const { return add_; }
  std::span<const Element> mul_table() const { return mul_; }

 private:
  std::size_t size_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::vector<std::optional<Element>> inverse_;
  Element zero_;
  Element one_;
  std::string label_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> by_name_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// Z/nZ with elements named "0".."n-1".
RingPtr make_zmod(long long n, const Limits& limits = {});

/// Componentwise product. Element i encodes its components in mixed radix with
/// the first factor most significant; names are comma tuples.
RingPtr make_product(std::span<const RingPtr> rings, const Limits& limits = {});

/// Describes the first failing ring axiom, if any.
struct AxiomViolation {
  std::string axiom;
  Element a = 0, b = 0, c = 0;
};

/// Exhaustive check of the commutative ring axioms over all triples.
std::optional<AxiomViolation> check_ring_axioms(std::size_t size, std::span<const Element> add,
                                                std::span<const Element> mul, Element zero,
                                                Element one, Exec exec = Exec::parallel);

}  // namespace idealspace

#endif  // IDEALSPACE_RING_HPP
