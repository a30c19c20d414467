#ifndef IDEALSPACE_BITSET_HPP
#define IDEALSPACE_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace idealspace {

/// A fixed-universe dynamic bitset. Used for element sets of a ring and for
/// rows of the inclusion matrix of an ideal lattice.
class BitSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitSet() = default;
  explicit BitSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  static BitSet full(std::size_t universe) {
    BitSet b(universe);
    for (std::size_t i = 0; i < universe; ++i) b.set(i);
    return b;
  }

  std::size_t universe() const { return universe_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  std::size_t count() const {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool none() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const BitSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  BitSet& operator&=(const BitSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BitSet& operator|=(const BitSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }

  friend bool operator==(const BitSet& a, const BitSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Calls f(i) for every set bit, ascending.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto tz = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * kWordBits + tz);
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// Ordering by cardinality, then by the ascending member lists compared
  /// lexicographically. Zero ideal first, whole ring last.
  friend bool canonical_less(const BitSet& a, const BitSet& b) {
    const std::size_t ca = a.count();
    const std::size_t cb = b.count();
    if (ca != cb) return ca < cb;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      const Word diff = a.words_[i] ^ b.words_[i];
      if (diff != 0) {
        const Word lowest = diff & (~diff + 1);
        return (a.words_[i] & lowest) != 0;
      }
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

struct BitSetHash {
  std::size_t operator()(const BitSet& b) const { return b.hash(); }
};

/// A set of spectrum points. Spectra are limited to 64 points so a point set
/// is a single machine word.
class PointSet {
 public:
  static constexpr std::size_t kMaxPoints = 64;

  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr PointSet singleton(std::size_t p) { return PointSet(std::uint64_t{1} << p); }
  static constexpr PointSet full(std::size_t n) {
    return PointSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t p) const { return (bits_ >> p) & 1U; }
  constexpr void insert(std::size_t p) { bits_ |= std::uint64_t{1} << p; }
  constexpr void erase(std::size_t p) { bits_ &= ~(std::uint64_t{1} << p); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool is_subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
  constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
  constexpr PointSet minus(PointSet o) const { return PointSet(bits_ & ~o.bits_); }
  constexpr PointSet& operator|=(PointSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr PointSet& operator&=(PointSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  constexpr auto operator<=>(const PointSet&) const = default;

  template <class F>
  void for_each(F&& f) const {
    std::uint64_t b = bits_;
    while (b != 0) {
      f(static_cast<std::size_t>(std::countr_zero(b)));
      b &= b - 1;
    }
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Family order: by cardinality, then by mask value.
inline bool family_less(PointSet a, PointSet b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.bits() < b.bits();
}

}  // namespace idealspace

#endif  // IDEALSPACE_BITSET_HPP
