#include "idealspace/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace idealspace {

namespace {

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring())
    throw Error(ErrorKind::MixedRings, "ideals belong to different rings");
}

// Additive span of a set that already absorbs multiplication.
ElementSet sum_set(const FiniteRing& r, const ElementSet& a, const ElementSet& b) {
  ElementSet out(r.size());
  a.for_each([&](std::size_t x) {
    b.for_each([&](std::size_t y) { out.set(r.add(static_cast<Element>(x), static_cast<Element>(y))); });
  });
  return out;
}

constexpr std::size_t kDenseTableLimit = 1024;

}  // namespace

Ideal::Ideal(RingPtr ring, ElementSet members) : ring_(std::move(ring)), members_(std::move(members)) {
  const FiniteRing& r = *ring_;
  if (members_.universe() != r.size())
    throw Error(ErrorKind::InvalidIdeal, "member set has the wrong universe");
  if (!members_.test(r.zero())) throw Error(ErrorKind::InvalidIdeal, "missing zero");
  const auto elems = members_.to_vector();
  for (std::size_t x : elems) {
    for (std::size_t y : elems)
      if (!members_.test(r.add(static_cast<Element>(x), static_cast<Element>(y))))
        throw Error(ErrorKind::InvalidIdeal, "not closed under addition");
    for (Element s = 0; s < r.size(); ++s)
      if (!members_.test(r.mul(s, static_cast<Element>(x))))
        throw Error(ErrorKind::InvalidIdeal, "does not absorb multiplication");
  }
}

Ideal Ideal::trusted(RingPtr ring, ElementSet members) {
  return Ideal(std::move(ring), std::move(members), true);
}

Ideal generate_ideal(const RingPtr& ring, std::span<const Element> gens) {
  const FiniteRing& r = *ring;
  ElementSet members(r.size());
  std::vector<Element> list;
  auto push = [&](Element x) {
    if (!members.test(x)) {
      members.set(x);
      list.push_back(x);
    }
  };
  push(r.zero());
  for (Element g : gens) push(g);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Element z = list[i];
    for (Element s = 0; s < r.size(); ++s) push(r.mul(s, z));
    // Sums against everything admitted so far; later arrivals pair with z in
    // their own turn.
    for (std::size_t j = 0; j <= i; ++j) push(r.add(z, list[j]));
  }
  return Ideal::trusted(ring, std::move(members));
}

Ideal zero_ideal(const RingPtr& ring) {
  ElementSet m(ring->size());
  m.set(ring->zero());
  return Ideal::trusted(ring, std::move(m));
}

Ideal unit_ideal(const RingPtr& ring) { return Ideal::trusted(ring, ElementSet::full(ring->size())); }

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return Ideal::trusted(a.ring(), sum_set(*a.ring(), a.members(), b.members()));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const FiniteRing& r = *a.ring();
  std::vector<Element> products;
  ElementSet seen(r.size());
  a.members().for_each([&](std::size_t x) {
    b.members().for_each([&](std::size_t y) {
      const Element p = r.mul(static_cast<Element>(x), static_cast<Element>(y));
      if (!seen.test(p)) {
        seen.set(p);
        products.push_back(p);
      }
    });
  });
  return generate_ideal(a.ring(), products);
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return Ideal::trusted(a.ring(), a.members() & b.members());
}

Ideal ideal_power(const Ideal& a, std::size_t k) {
  Ideal p = unit_ideal(a.ring());
  for (std::size_t i = 0; i < k; ++i) p = ideal_product(p, a);
  return p;
}

Ideal radical(const Ideal& a) {
  const FiniteRing& r = *a.ring();
  ElementSet out(r.size());
  for (Element x = 0; x < r.size(); ++x) {
    Element p = x;
    for (std::size_t k = 1; k <= r.size(); ++k) {
      if (a.contains(p)) {
        out.set(x);
        break;
      }
      p = r.mul(p, x);
    }
  }
  return Ideal::trusted(a.ring(), std::move(out));
}

std::vector<Element> generators_of(const Ideal& a) {
  const RingPtr& ring = a.ring();
  if (a.is_zero()) return {ring->zero()};
  std::vector<Element> found;
  a.members().for_each([&](std::size_t x) {
    if (!found.empty()) return;
    const Element g = static_cast<Element>(x);
    if (generate_ideal(ring, std::span(&g, 1)) == a) found.push_back(g);
  });
  if (!found.empty()) return found;

  std::vector<Element> gens;
  Ideal cur = zero_ideal(ring);
  a.members().for_each([&](std::size_t x) {
    if (!cur.contains(static_cast<Element>(x))) {
      gens.push_back(static_cast<Element>(x));
      cur = generate_ideal(ring, gens);
    }
  });
  return gens;
}

std::string_view kind_name(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::Spc: return "Spc";
    case SpectrumKind::Max: return "Max";
    case SpectrumKind::Spn: return "Spn";
    case SpectrumKind::Min: return "Min";
    case SpectrumKind::Prp: return "Prp";
    case SpectrumKind::Rad: return "Rad";
    case SpectrumKind::Prm: return "Prm";
    case SpectrumKind::Nil: return "Nil";
    case SpectrumKind::Nip: return "Nip";
    case SpectrumKind::Irr: return "Irr";
    case SpectrumKind::Irc: return "Irc";
    case SpectrumKind::Prn: return "Prn";
    case SpectrumKind::Reg: return "Reg";
    case SpectrumKind::Fgn: return "Fgn";
    case SpectrumKind::Irs: return "Irs";
  }
  return "?";
}

SpectrumKind parse_kind(std::string_view tag) {
  for (SpectrumKind k : kAllKinds) {
    const std::string_view name = kind_name(k);
    if (name.size() != tag.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < name.size() && same; ++i)
      same = std::tolower(static_cast<unsigned char>(name[i])) ==
             std::tolower(static_cast<unsigned char>(tag[i]));
    if (same) return k;
  }
  throw Error(ErrorKind::UnknownName, "unknown spectrum kind '" + std::string(tag) + "'");
}

IdealLattice::IdealLattice(RingPtr ring, std::vector<Ideal> ideals)
    : ring_(std::move(ring)), ideals_(std::move(ideals)) {
  std::sort(ideals_.begin(), ideals_.end(),
            [](const Ideal& a, const Ideal& b) { return canonical_less(a.members(), b.members()); });
  const std::size_t n = ideals_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(ideals_[i].members(), i).second)
      throw Error(ErrorKind::InvalidIdeal, "duplicate ideal in lattice");
  }
  leq_.assign(n, BitSet(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (ideals_[i].is_subset_of(ideals_[j])) leq_[i].set(j);

  if (n <= kDenseTableLimit) {
    join_.resize(n * n);
    meet_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const std::size_t s = index_of(ideal_sum(ideals_[i], ideals_[j]));
        const std::size_t m = index_of(ideal_intersect(ideals_[i], ideals_[j]));
        join_[i * n + j] = join_[j * n + i] = s;
        meet_[i * n + j] = meet_[j * n + i] = m;
      }
    }
  }
}

std::optional<std::size_t> IdealLattice::find(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t IdealLattice::index_of(const Ideal& a) const {
  if (a.ring() != ring_) throw Error(ErrorKind::MixedRings, "ideal of a different ring");
  auto i = find(a.members());
  if (!i) throw Error(ErrorKind::UnknownName, "ideal not in lattice");
  return *i;
}

std::size_t IdealLattice::sum_index(std::size_t i, std::size_t j) const {
  if (!join_.empty()) return join_[i * size() + j];
  return index_of(ideal_sum(ideals_[i], ideals_[j]));
}

std::size_t IdealLattice::meet_index(std::size_t i, std::size_t j) const {
  if (!meet_.empty()) return meet_[i * size() + j];
  return index_of(ideal_intersect(ideals_[i], ideals_[j]));
}

LatticePtr enumerate_ideals(const RingPtr& ring, const Limits& limits) {
  const FiniteRing& r = *ring;
  if (r.size() > limits.max_ring_size)
    throw Error(ErrorKind::CapExceeded, "ring exceeds size cap " + std::to_string(limits.max_ring_size));

  std::vector<ElementSet> principal;
  std::unordered_set<BitSet, BitSetHash> seen;
  std::vector<ElementSet> found;
  auto admit = [&](ElementSet s) {
    if (seen.insert(s).second) {
      if (seen.size() > limits.max_ideals)
        throw Error(ErrorKind::CapExceeded,
                    "ideal lattice exceeds " + std::to_string(limits.max_ideals) + " ideals");
      found.push_back(std::move(s));
    }
  };
  admit(zero_ideal(ring).members());
  for (Element x = 0; x < r.size(); ++x) {
    ElementSet p = generate_ideal(ring, std::span(&x, 1)).members();
    if (std::find(principal.begin(), principal.end(), p) == principal.end()) principal.push_back(p);
    admit(std::move(p));
  }
  // Every ideal of a finite ring is a finite sum of principal ideals.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& p : principal) admit(sum_set(r, found[i], p));
  }

  std::vector<Ideal> ideals;
  ideals.reserve(found.size());
  for (auto& s : found) ideals.push_back(Ideal::trusted(ring, std::move(s)));
  return std::make_shared<const IdealLattice>(ring, std::move(ideals));
}

namespace {

bool is_prime(const IdealLattice& L, std::size_t i) {
  if (i == L.unit_index()) return false;
  const Ideal& a = L[i];
  const FiniteRing& r = *L.ring();
  for (Element x = 0; x < r.size(); ++x) {
    if (a.contains(x)) continue;
    for (Element y = 0; y < r.size(); ++y)
      if (!a.contains(y) && a.contains(r.mul(x, y))) return false;
  }
  return true;
}

bool is_maximal(const IdealLattice& L, std::size_t i) {
  if (i == L.unit_index()) return false;
  for (std::size_t j = 0; j < L.unit_index(); ++j)
    if (j != i && L.leq(i, j)) return false;
  return true;
}

bool is_primary(const IdealLattice& L, std::size_t i) {
  if (i == L.unit_index()) return false;
  const Ideal& a = L[i];
  const Ideal rad = radical(a);
  const FiniteRing& r = *L.ring();
  for (Element x = 0; x < r.size(); ++x) {
    if (a.contains(x)) continue;
    for (Element y = 0; y < r.size(); ++y)
      if (a.contains(r.mul(x, y)) && !rad.contains(y)) return false;
  }
  return true;
}

bool is_nilpotent_ideal(const IdealLattice& L, std::size_t i) {
  const Ideal& a = L[i];
  Ideal p = a;
  for (std::size_t k = 1; k <= L.ring()->size(); ++k) {
    if (p.is_zero()) return true;
    Ideal next = ideal_product(p, a);
    if (next == p) return false;
    p = std::move(next);
  }
  return p.is_zero();
}

bool is_principal(const IdealLattice& L, std::size_t i) {
  const Ideal& a = L[i];
  bool principal = false;
  a.members().for_each([&](std::size_t x) {
    if (principal) return;
    const Element g = static_cast<Element>(x);
    principal = generate_ideal(L.ring(), std::span(&g, 1)) == a;
  });
  return principal;
}

}  // namespace

bool classify(const IdealLattice& L, std::size_t i, SpectrumKind kind) {
  const bool proper = i != L.unit_index();
  const Ideal& a = L[i];
  const FiniteRing& r = *L.ring();
  const std::size_t n = L.size();

  switch (kind) {
    case SpectrumKind::Prp:
      return proper;
    case SpectrumKind::Spc:
      return is_prime(L, i);
    case SpectrumKind::Max:
      return is_maximal(L, i);
    case SpectrumKind::Spn: {
      if (!is_prime(L, i)) return false;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && L.leq(j, i) && is_prime(L, j)) return false;
      return true;
    }
    case SpectrumKind::Min: {
      if (!proper || i == L.zero_index()) return false;
      for (std::size_t j = 1; j < n; ++j)
        if (j != i && L.leq(j, i)) return false;
      return true;
    }
    case SpectrumKind::Rad:
      return proper && radical(a) == a;
    case SpectrumKind::Prm:
      return is_primary(L, i);
    case SpectrumKind::Nil: {
      if (!proper) return false;
      bool all = true;
      a.members().for_each([&](std::size_t x) { all = all && r.is_nilpotent(static_cast<Element>(x)); });
      return all;
    }
    case SpectrumKind::Nip:
      return proper && is_nilpotent_ideal(L, i);
    case SpectrumKind::Irr: {
      if (!proper) return false;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || !L.leq(i, j)) continue;
        for (std::size_t k = j + 1; k < n; ++k)
          if (k != i && L.leq(i, k) && L.meet_index(j, k) == i) return false;
      }
      return true;
    }
    case SpectrumKind::Irc: {
      if (!proper) return false;
      ElementSet meet = ElementSet::full(r.size());
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && L.leq(i, j)) meet &= L[j].members();
      return meet != a.members();
    }
    case SpectrumKind::Prn:
      return proper && is_principal(L, i);
    case SpectrumKind::Reg: {
      if (!proper) return false;
      bool found = false;
      a.members().for_each([&](std::size_t x) { found = found || !r.is_zero_divisor(static_cast<Element>(x)); });
      return found;
    }
    case SpectrumKind::Fgn:
      return true;
    case SpectrumKind::Irs: {
      if (!proper) return false;
      for (std::size_t j = 0; j < n; ++j) {
        if (L.leq(j, i)) continue;
        for (std::size_t k = j + 1; k < n; ++k)
          if (!L.leq(k, i) && L.leq(L.meet_index(j, k), i)) return false;
      }
      return true;
    }
  }
  return false;
}

bool classify(const Ideal& a, SpectrumKind kind) {
  const LatticePtr L = enumerate_ideals(a.ring());
  return classify(*L, L->index_of(a), kind);
}

std::vector<bool> classify_all(const IdealLattice& lattice, SpectrumKind kind, Exec exec) {
  const std::size_t n = lattice.size();
  std::vector<char> flags(n, 0);
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) flags[i] = classify(lattice, i, kind) ? 1 : 0;
  } else {
    const auto sn = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < sn; ++i)
      flags[static_cast<std::size_t>(i)] = classify(lattice, static_cast<std::size_t>(i), kind) ? 1 : 0;
  }
  return {flags.begin(), flags.end()};
}

}  // namespace idealspace
