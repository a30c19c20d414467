#include "idealspace/hom.hpp"

#include <algorithm>

namespace idealspace {

RingHom::RingHom(RingPtr source, RingPtr target, std::vector<Element> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  const FiniteRing& s = *source_;
  const FiniteRing& t = *target_;
  if (map_.size() != s.size()) throw Error(ErrorKind::InvalidHom, "map must be total on the source");
  for (Element x : map_)
    if (x >= t.size()) throw Error(ErrorKind::InvalidHom, "image out of range");
  if (map_[s.one()] != t.one()) throw Error(ErrorKind::InvalidHom, "1 must map to 1");
  for (Element a = 0; a < s.size(); ++a) {
    for (Element b = 0; b < s.size(); ++b) {
      if (map_[s.add(a, b)] != t.add(map_[a], map_[b]))
        throw Error(ErrorKind::InvalidHom, "map is not additive");
      if (map_[s.mul(a, b)] != t.mul(map_[a], map_[b]))
        throw Error(ErrorKind::InvalidHom, "map is not multiplicative");
    }
  }
}

bool RingHom::is_surjective() const {
  std::vector<char> hit(target_->size(), 0);
  for (Element x : map_) hit[x] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool RingHom::is_injective() const {
  std::vector<char> hit(target_->size(), 0);
  for (Element x : map_) {
    if (hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

MultiplicativeSet MultiplicativeSet::generated_by(RingPtr ring, std::span<const Element> gens) {
  const FiniteRing& r = *ring;
  ElementSet members(r.size());
  std::vector<Element> list;
  auto push = [&](Element x) {
    if (!members.test(x)) {
      members.set(x);
      list.push_back(x);
    }
  };
  push(r.one());
  for (Element g : gens) push(g);
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) push(r.mul(list[i], list[j]));
  return MultiplicativeSet(std::move(ring), std::move(members),
                           std::vector<Element>(gens.begin(), gens.end()));
}

namespace {

std::string join_names(const FiniteRing& r, std::span<const Element> elems) {
  std::string s;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) s += ",";
    s += r.name(elems[i]);
  }
  return s;
}

}  // namespace

std::pair<RingPtr, RingHom> make_quotient(const RingPtr& ring, const Ideal& a, std::string label) {
  if (a.ring() != ring) throw Error(ErrorKind::MixedRings, "ideal of a different ring");
  if (!a.proper()) throw Error(ErrorKind::ImproperIdeal, "cannot take the quotient by R");
  const FiniteRing& r = *ring;
  const std::size_t n = r.size();

  std::vector<Element> rep(n);
  for (Element x = 0; x < n; ++x) {
    Element best = x;
    a.members().for_each([&](std::size_t m) { best = std::min(best, r.add(x, static_cast<Element>(m))); });
    rep[x] = best;
  }
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x)
    if (rep[x] == x) reps.push_back(x);
  std::vector<Element> cls(n);
  for (Element x = 0; x < n; ++x)
    cls[x] = static_cast<Element>(std::lower_bound(reps.begin(), reps.end(), rep[x]) - reps.begin());

  const std::size_t m = reps.size();
  std::vector<Element> add(m * m), mul(m * m);
  std::vector<std::string> names(m);
  for (std::size_t i = 0; i < m; ++i) {
    names[i] = r.name(reps[i]);
    for (std::size_t j = 0; j < m; ++j) {
      add[i * m + j] = cls[r.add(reps[i], reps[j])];
      mul[i * m + j] = cls[r.mul(reps[i], reps[j])];
    }
  }
  if (label.empty()) label = r.label() + "/(" + join_names(r, generators_of(a)) + ")";
  auto q = std::make_shared<const FiniteRing>(m, std::move(add), std::move(mul), cls[r.zero()],
                                              cls[r.one()], std::move(label), std::move(names));
  RingHom f(ring, q, std::move(cls));
  return {q, std::move(f)};
}

Element localization_idempotent(const MultiplicativeSet& s) {
  const FiniteRing& r = *s.ring();
  if (s.contains(r.zero()))
    throw Error(ErrorKind::ZeroInMultiplicativeSet, "0 lies in the multiplicative set");
  Element p = r.one();
  s.members().for_each([&](std::size_t x) { p = r.mul(p, static_cast<Element>(x)); });
  Element q = p;
  for (std::size_t k = 1; k <= 2 * r.size() + 1; ++k) {
    if (r.mul(q, q) == q) return q;
    q = r.mul(q, p);
  }
  throw Error(ErrorKind::InvalidTable, "no idempotent power found");
}

std::pair<RingPtr, RingHom> localize(const MultiplicativeSet& s, std::string label) {
  const RingPtr& ring = s.ring();
  const FiniteRing& r = *ring;
  const Element e = localization_idempotent(s);

  std::vector<Element> elems;
  std::vector<long> pos(r.size(), -1);
  for (Element x = 0; x < r.size(); ++x) pos[r.mul(x, e)] = 0;
  for (Element x = 0; x < r.size(); ++x)
    if (pos[x] == 0) {
      pos[x] = static_cast<long>(elems.size());
      elems.push_back(x);
    }
  const std::size_t m = elems.size();
  std::vector<Element> add(m * m), mul(m * m);
  std::vector<std::string> names(m);
  for (std::size_t i = 0; i < m; ++i) {
    names[i] = r.name(elems[i]);
    for (std::size_t j = 0; j < m; ++j) {
      add[i * m + j] = static_cast<Element>(pos[r.add(elems[i], elems[j])]);
      mul[i * m + j] = static_cast<Element>(pos[r.mul(elems[i], elems[j])]);
    }
  }
  if (label.empty()) label = r.label() + "@(" + join_names(r, s.generators()) + ")";
  auto loc = std::make_shared<const FiniteRing>(m, std::move(add), std::move(mul),
                                                static_cast<Element>(pos[r.zero()]),
                                                static_cast<Element>(pos[e]), std::move(label),
                                                std::move(names));
  std::vector<Element> map(r.size());
  for (Element x = 0; x < r.size(); ++x) map[x] = static_cast<Element>(pos[r.mul(x, e)]);
  RingHom f(ring, loc, std::move(map));
  return {loc, std::move(f)};
}

namespace {

constexpr long kUnset = -1;

struct HomSearch {
  const FiniteRing& src;
  const FiniteRing& dst;
  std::vector<Element> gens;
  std::vector<long> map;
  std::vector<Element> mapped;
  std::vector<std::vector<Element>> results;

  // Extends the map from the current additive span by g -> t. Returns false on
  // a conflict; newly assigned elements are appended to `mapped`.
  bool extend(Element g, Element t) {
    const std::size_t ord = src.additive_order(g);
    const std::size_t base = mapped.size();
    for (std::size_t i = 0; i < base; ++i) {
      Element y = mapped[i];
      auto val = static_cast<Element>(map[y]);
      for (std::size_t k = 1; k < ord; ++k) {
        y = src.add(y, g);
        val = dst.add(val, t);
        if (map[y] == kUnset) {
          map[y] = val;
          mapped.push_back(y);
        } else if (map[y] != static_cast<long>(val)) {
          return false;
        }
      }
    }
    for (Element a : mapped)
      for (Element b : mapped) {
        const long ab = map[src.mul(a, b)];
        if (ab != kUnset && ab != static_cast<long>(dst.mul(static_cast<Element>(map[a]),
                                                              static_cast<Element>(map[b]))))
          return false;
      }
    return true;
  }

  void undo(std::size_t mark) {
    while (mapped.size() > mark) {
      map[mapped.back()] = kUnset;
      mapped.pop_back();
    }
  }

  void run(std::size_t i) {
    if (i == gens.size()) {
      std::vector<Element> m(src.size());
      for (Element x = 0; x < src.size(); ++x) m[x] = static_cast<Element>(map[x]);
      results.push_back(std::move(m));
      return;
    }
    const Element g = gens[i];
    const std::size_t ord = src.additive_order(g);
    for (Element t = 0; t < dst.size(); ++t) {
      if (i == 0 && t != dst.one()) continue;
      // ord(g) * t must vanish.
      Element mult = dst.zero();
      for (std::size_t k = 0; k < ord; ++k) mult = dst.add(mult, t);
      if (mult != dst.zero()) continue;
      const std::size_t mark = mapped.size();
      if (extend(g, t)) run(i + 1);
      undo(mark);
    }
  }
};

}  // namespace

std::vector<RingHom> enumerate_homs(const RingPtr& source, const RingPtr& target,
                                    const Limits& limits) {
  if (source->size() * target->size() > limits.max_hom_work)
    throw Error(ErrorKind::CapExceeded, "|R|*|R'| exceeds hom enumeration cap " +
                                            std::to_string(limits.max_hom_work));
  const FiniteRing& s = *source;
  HomSearch search{s, *target, {}, std::vector<long>(s.size(), kUnset), {}, {}};

  // Additive generators, starting with 1 so its image is forced first.
  std::vector<char> in_span(s.size(), 0);
  std::vector<Element> span{s.zero()};
  in_span[s.zero()] = 1;
  auto absorb = [&](Element g) {
    const std::size_t base = span.size();
    for (std::size_t i = 0; i < base; ++i) {
      Element y = span[i];
      for (y = s.add(y, g); !in_span[y]; y = s.add(y, g)) {
        in_span[y] = 1;
        span.push_back(y);
      }
    }
  };
  search.gens.push_back(s.one());
  absorb(s.one());
  for (Element x = 0; x < s.size(); ++x) {
    if (!in_span[x]) {
      search.gens.push_back(x);
      absorb(x);
    }
  }

  search.map[s.zero()] = target->zero();
  search.mapped.push_back(s.zero());
  search.run(0);

  std::vector<RingHom> homs;
  homs.reserve(search.results.size());
  for (auto& m : search.results) homs.emplace_back(source, target, std::move(m));
  return homs;
}

std::optional<RingHom> find_isomorphism(const RingPtr& source, const RingPtr& target,
                                        const Limits& limits) {
  if (source->size() != target->size()) return std::nullopt;
  for (auto& f : enumerate_homs(source, target, limits))
    if (f.is_injective()) return f;
  return std::nullopt;
}

Ideal jacobson_radical(const RingPtr& ring) {
  const FiniteRing& r = *ring;
  ElementSet members(r.size());
  for (Element x = 0; x < r.size(); ++x) {
    bool in = true;
    for (Element s = 0; s < r.size() && in; ++s) in = r.is_unit(r.sub(r.one(), r.mul(s, x)));
    if (in) members.set(x);
  }
  return Ideal::trusted(ring, std::move(members));
}

Ideal contraction(const RingHom& f, const Ideal& b) {
  if (b.ring() != f.target()) throw Error(ErrorKind::MixedRings, "ideal is not in the hom's target");
  ElementSet members(f.source()->size());
  for (Element x = 0; x < f.source()->size(); ++x)
    if (b.contains(f(x))) members.set(x);
  return Ideal::trusted(f.source(), std::move(members));
}

Ideal kernel_of(const RingHom& f) { return contraction(f, zero_ideal(f.target())); }

bool is_von_neumann_regular(const FiniteRing& r) {
  for (Element a = 0; a < r.size(); ++a) {
    bool ok = false;
    for (Element x = 0; x < r.size() && !ok; ++x) ok = r.mul(r.mul(a, x), a) == a;
    if (!ok) return false;
  }
  return true;
}

}  // namespace idealspace
