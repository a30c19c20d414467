#include "idealspace/topology.hpp"

#include <algorithm>
#include <stdexcept>

#include "idealspace/hom.hpp"
#include "idealspace/kernels.hpp"
#include "idealspace/render.hpp"

namespace idealspace {

bool FiniteSpace::is_closed(PointSet s) const {
  return std::binary_search(closed.begin(), closed.end(), s, family_less);
}

PointSet FiniteSpace::closure(PointSet s) const {
  PointSet c = full();
  for (PointSet k : closed)
    if (s.is_subset_of(k)) c &= k;
  return c;
}

namespace {

PointSet compress(PointSet s, PointSet y) {
  PointSet out;
  std::size_t j = 0;
  y.for_each([&](std::size_t p) {
    if (s.contains(p)) out.insert(j);
    ++j;
  });
  return out;
}

}  // namespace

FiniteSpace FiniteSpace::subspace(PointSet y) const {
  FiniteSpace sub;
  sub.points = y.count();
  for (PointSet c : closed) sub.closed.push_back(compress(c & y, y));
  std::sort(sub.closed.begin(), sub.closed.end(), family_less);
  sub.closed.erase(std::unique(sub.closed.begin(), sub.closed.end()), sub.closed.end());
  return sub;
}

FiniteSpace FiniteSpace::from_subbase(std::size_t points, std::span<const PointSet> subbase,
                                      const Limits& limits, Exec exec) {
  if (points > PointSet::kMaxPoints)
    throw Error(ErrorKind::CapExceeded, "more than 64 points");
  std::vector<PointSet> gens(subbase.begin(), subbase.end());
  gens.emplace_back();
  const auto base = kernels::union_closure(gens, limits.max_closed_sets, exec);
  FiniteSpace x;
  x.points = points;
  x.closed = kernels::intersection_closure(base, PointSet::full(points), limits.max_closed_sets, exec);
  return x;
}

std::optional<std::pair<std::size_t, std::size_t>> t0_violation(const FiniteSpace& x) {
  std::vector<PointSet> cl(x.points);
  for (std::size_t p = 0; p < x.points; ++p) cl[p] = x.closure(PointSet::singleton(p));
  for (std::size_t p = 0; p < x.points; ++p)
    for (std::size_t q = p + 1; q < x.points; ++q)
      if (cl[p] == cl[q]) return std::pair{p, q};
  return std::nullopt;
}

std::optional<std::size_t> t1_violation(const FiniteSpace& x) {
  for (std::size_t p = 0; p < x.points; ++p)
    if (!x.is_closed(PointSet::singleton(p))) return p;
  return std::nullopt;
}

namespace {

PointSet generic_points(const std::vector<PointSet>& point_closures, PointSet c) {
  PointSet g;
  c.for_each([&](std::size_t p) {
    if (point_closures[p] == c) g.insert(p);
  });
  return g;
}

// Pairwise-union test: C is reducible iff two of its maximal proper closed
// subsets already cover it.
bool reducible_by_pairs(const FiniteSpace& x, PointSet c) {
  std::vector<PointSet> below;
  for (PointSet k : x.closed)
    if (k != c && k.is_subset_of(c)) below.push_back(k);
  std::vector<PointSet> maximal;
  for (PointSet k : below) {
    bool is_max = true;
    for (PointSet o : below)
      if (o != k && k.is_subset_of(o)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(k);
  }
  for (std::size_t i = 0; i < maximal.size(); ++i)
    for (std::size_t j = i; j < maximal.size(); ++j)
      if ((maximal[i] | maximal[j]) == c) return true;
  return false;
}

std::vector<PointSet> point_closures(const FiniteSpace& x) {
  std::vector<PointSet> cl(x.points);
  for (std::size_t p = 0; p < x.points; ++p) cl[p] = x.closure(PointSet::singleton(p));
  return cl;
}

}  // namespace

bool is_irreducible(const FiniteSpace& x, PointSet c) {
  if (c.empty()) return false;
  const auto cl = point_closures(x);
  if (!generic_points(cl, c).empty()) return true;
  return !reducible_by_pairs(x, c);
}

std::vector<IrreducibleSet> irreducible_closed_sets(const FiniteSpace& x) {
  const auto cl = point_closures(x);
  std::vector<IrreducibleSet> out;
  for (PointSet c : x.closed) {
    if (c.empty()) continue;
    const PointSet g = generic_points(cl, c);
    if (!g.empty() || !reducible_by_pairs(x, c)) out.push_back({c, g});
  }
  return out;
}

std::optional<IrreducibleSet> sobriety_violation(const FiniteSpace& x) {
  for (const auto& irr : irreducible_closed_sets(x))
    if (irr.generic.count() != 1) return irr;
  return std::nullopt;
}

std::optional<PointSet> disconnection(const FiniteSpace& x) {
  const PointSet full = x.full();
  for (PointSet c : x.closed) {
    if (c.empty() || c == full) continue;
    if (x.is_closed(full.minus(c))) return c;
  }
  return std::nullopt;
}

std::optional<std::pair<PointSet, PointSet>> strong_disconnection(std::span<const PointSet> family,
                                                                  PointSet full) {
  std::vector<PointSet> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end(), family_less);
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    const PointSet a = *it;
    const PointSet b = full.minus(a);
    if (a.empty() || b.empty() || !a.is_subset_of(full)) continue;
    if (std::binary_search(sorted.begin(), sorted.end(), b, family_less)) return std::pair{a, b};
  }
  return std::nullopt;
}

TopologySpace generate_topology(const Spectrum& spec, const Limits& limits, Exec exec) {
  if (spec.size() > limits.max_points)
    throw Error(ErrorKind::CapExceeded, std::string(kind_name(spec.kind())) + "(" + spec.ring()->label() +
                                            ") has " + std::to_string(spec.size()) +
                                            " points, above the cap of " +
                                            std::to_string(limits.max_points));
  const IdealLattice& L = *spec.lattice();
  std::vector<PointSet> subbase;
  for (std::size_t i = 0; i < L.size(); ++i) subbase.push_back(spec.hull(i));
  std::sort(subbase.begin(), subbase.end(), family_less);
  subbase.erase(std::unique(subbase.begin(), subbase.end()), subbase.end());
  std::vector<std::size_t> ideals;
  ideals.reserve(subbase.size());
  for (PointSet a : subbase) ideals.push_back(spec.kernel(a));

  auto base = kernels::union_closure(subbase, limits.max_closed_sets, exec);
  FiniteSpace space;
  space.points = spec.size();
  space.closed = kernels::intersection_closure(base, spec.all(), limits.max_closed_sets, exec);
  return TopologySpace(spec, std::move(subbase), std::move(ideals), std::move(base), std::move(space));
}

PointSet closure_of(const TopologySpace& t, PointSet s) { return t.space().closure(s); }

namespace {

VerdictReport base_report(const TopologySpace& t, const char* id, const char* anchor) {
  VerdictReport r;
  r.id = id;
  r.anchor = anchor;
  r.ring = t.spectrum().ring()->label();
  r.kind = std::string(kind_name(t.spectrum().kind()));
  return r;
}

bool vacuous_if_empty(const TopologySpace& t, VerdictReport& r) {
  if (t.size() != 0) return false;
  r.status = Status::vacuous;
  r.notes = "empty spectrum";
  return true;
}

nlohmann::json point_json(const TopologySpace& t, std::size_t p) {
  return ideal_json(t.spectrum().point(p));
}

}  // namespace

VerdictReport is_T0(const TopologySpace& t) {
  auto r = base_report(t, "t0", "distinct points have distinct closures");
  if (vacuous_if_empty(t, r)) return r;
  if (auto v = t0_violation(t.space())) {
    r.status = Status::fails;
    r.witness = {{"p", point_json(t, v->first)}, {"q", point_json(t, v->second)}};
  } else {
    r.status = Status::holds;
  }
  return r;
}

VerdictReport is_T1(const TopologySpace& t) {
  auto r = base_report(t, "t1", "every singleton is closed");
  if (vacuous_if_empty(t, r)) return r;
  if (auto v = t1_violation(t.space())) {
    r.status = Status::fails;
    r.witness = {{"point", point_json(t, *v)},
                 {"closure", point_set_json(t.spectrum(), t.space().closure(PointSet::singleton(*v)))}};
  } else {
    r.status = Status::holds;
  }
  return r;
}

VerdictReport is_sober(const TopologySpace& t) {
  auto r = base_report(t, "sober", "every nonempty irreducible closed set has exactly one generic point");
  if (vacuous_if_empty(t, r)) return r;
  if (auto v = sobriety_violation(t.space())) {
    r.status = Status::fails;
    r.witness = {{"set", point_set_json(t.spectrum(), v->set)},
                 {"generic", point_set_json(t.spectrum(), v->generic)}};
  } else {
    r.status = Status::holds;
  }
  return r;
}

VerdictReport is_connected(const TopologySpace& t) {
  auto r = base_report(t, "connected", "no nonempty proper clopen subset");
  if (vacuous_if_empty(t, r)) return r;
  if (auto c = disconnection(t.space())) {
    r.status = Status::fails;
    r.witness = {{"A", point_set_json(t.spectrum(), *c)},
                 {"B", point_set_json(t.spectrum(), t.full().minus(*c))}};
  } else {
    r.status = Status::holds;
  }
  return r;
}

VerdictReport is_quasi_compact(const TopologySpace& t) {
  auto r = base_report(t, "quasi_compact", "every open cover has a finite subcover");
  if (vacuous_if_empty(t, r)) return r;
  r.status = Status::holds;
  const bool pou = has_partition_of_unity(t.spectrum());
  r.witness = {{"partition_of_unity", pou}};
  r.notes = pou ? "finite space; partition of unity also applies"
                : "finite space; partition of unity does not apply";
  return r;
}

VerdictReport strongly_disconnects(const TopologySpace& t, Family family) {
  auto r = base_report(t, family == Family::subbase ? "strong_disconnection_subbase" : "strong_disconnection_base",
                       "two nonempty disjoint family members cover the space");
  if (vacuous_if_empty(t, r)) return r;
  const auto& fam = family == Family::subbase ? t.subbase() : t.base();
  if (auto pr = strong_disconnection(fam, t.full())) {
    r.status = Status::holds;
    const Spectrum& spec = t.spectrum();
    r.witness = {{"A", point_set_json(spec, pr->first)}, {"B", point_set_json(spec, pr->second)}};
    if (family == Family::subbase) {
      r.witness["a"] = ideal_json(spec.kernel_ideal(pr->first));
      r.witness["b"] = ideal_json(spec.kernel_ideal(pr->second));
    }
  } else {
    r.status = Status::fails;
  }
  return r;
}

VerdictReport pair_disconnects(const TopologySpace& t, std::size_t a, std::size_t b) {
  auto r = base_report(t, "pair_disconnection", "h(a), h(b) nonempty, disjoint and covering");
  const Spectrum& spec = t.spectrum();
  const IdealLattice& L = *spec.lattice();
  const PointSet ha = spec.hull(a);
  const PointSet hb = spec.hull(b);
  r.witness = {{"a", ideal_json(L[a])}, {"b", ideal_json(L[b])}};
  const PointSet uncovered = t.full().minus(ha | hb);
  if (ha.empty() || hb.empty()) {
    r.status = Status::fails;
    r.witness["empty_hull"] = ha.empty() ? "a" : "b";
  } else if (!(ha & hb).empty()) {
    r.status = Status::fails;
    r.witness["shared"] = point_set_json(spec, ha & hb);
  } else if (!uncovered.empty()) {
    r.status = Status::fails;
    std::size_t largest = 0;
    uncovered.for_each([&](std::size_t p) { largest = p; });
    r.witness["uncovered"] = point_json(t, largest);
  } else {
    r.status = Status::holds;
  }
  return r;
}

Element extract_idempotent(const TopologySpace& t, std::size_t a, std::size_t b) {
  const Spectrum& spec = t.spectrum();
  const IdealLattice& L = *spec.lattice();
  const RingPtr& ring = spec.ring();
  const FiniteRing& r = *ring;
  if (!jacobson_radical(ring).is_zero())
    throw Error(ErrorKind::HypothesisViolated, "Jacobson radical is not zero");
  if (!contains_all_maximal(spec))
    throw Error(ErrorKind::HypothesisViolated, "spectrum misses a maximal ideal");
  const PointSet ha = spec.hull(a);
  const PointSet hb = spec.hull(b);
  if (ha.empty() || hb.empty()) throw Error(ErrorKind::HypothesisViolated, "a hull is empty");
  if (!(ha & hb).empty()) throw Error(ErrorKind::HypothesisViolated, "hulls are not disjoint");
  if ((ha | hb) != t.full()) throw Error(ErrorKind::HypothesisViolated, "hulls do not cover the space");

  const Ideal& ia = L[a];
  const Ideal& ib = L[b];
  std::optional<Element> x;
  ia.members().for_each([&](std::size_t m) {
    if (!x && ib.contains(r.sub(r.one(), static_cast<Element>(m)))) x = static_cast<Element>(m);
  });
  if (!x) throw Error(ErrorKind::NoPartitionFound, "no x in a, y in b with x + y = 1");

  const Element e = *x;
  const Element f = r.sub(r.one(), e);
  if (r.mul(e, f) != r.zero() || !r.is_idempotent(e) || e == r.zero() || e == r.one() ||
      generate_ideal(ring, std::span(&e, 1)) != ia || generate_ideal(ring, std::span(&f, 1)) != ib)
    throw std::logic_error("extracted element is not the expected idempotent");
  return e;
}

bool verify_homeomorphism(std::span<const std::size_t> f, const FiniteSpace& x, const FiniteSpace& y) {
  if (f.size() != x.points || x.points != y.points) return false;
  PointSet hit;
  for (std::size_t v : f) {
    if (v >= y.points || hit.contains(v)) return false;
    hit.insert(v);
  }
  if (x.closed.size() != y.closed.size()) return false;
  std::vector<PointSet> image;
  image.reserve(x.closed.size());
  for (PointSet c : x.closed) {
    PointSet m;
    c.for_each([&](std::size_t p) { m.insert(f[p]); });
    image.push_back(m);
  }
  std::sort(image.begin(), image.end(), family_less);
  return image == y.closed;
}

}  // namespace idealspace
