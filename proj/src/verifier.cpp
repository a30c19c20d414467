#include "idealspace/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>

#include <omp.h>

#include "idealspace/hom.hpp"
#include "idealspace/render.hpp"
#include "idealspace/ring_expr.hpp"
#include "idealspace/spectrum.hpp"
#include "idealspace/topology.hpp"

namespace idealspace {

namespace {

using json = nlohmann::json;

constexpr CheckInfo kRegistry[] = {
    {"T01", "hull and kernel form an order-reversing Galois connection; h(R)=∅, h(o)=X, k(∅)=R; "
            "h(a)∪h(b) ⊆ h(a∩b) ⊆ h(ab); ∩h(a_i) = h(Σa_i); k(∪S_i) = ∩k(S_i); h(√a) ⊆ h(a)",
     true},
    {"T02", "h(a)=h(√a) for every ideal ⟺ for every point ⟺ every point is radical", true},
    {"T03", "hk is a Kuratowski closure operator ⟺ m.i.p. holds over im(k)", true},
    {"T04", "X = im(k) ⟺ X is closed under intersections", true},
    {"T05", "hk is a Kuratowski closure operator ⟺ C_hk is a closed base of the hull-kernel topology", true},
    {"T06", "X-radical: a ⊆ kh(a) ⊆ √a; kh(a)=a on points; h(a)=h(kh(a)); h(a) ⊆ h(b) ⟺ kh(b) ⊆ kh(a); "
            "over regular rings h(a) ⊆ h(b) ⟺ b ⊆ a; C_h = C_hk",
     true},
    {"T07", "every ideal space is T0", true},
    {"T08", "an ideal space is T1 ⟺ X ⊆ Max(R)", true},
    {"T09", "h(a) with a ∈ h(a) is the closure of a and irreducible; nonempty subbasic closed sets of "
            "Prp(R) are irreducible",
     true},
    {"T10", "an ideal space is sober ⟺ every nonempty irreducible closed h(a) contains a", true},
    {"T11", "Irs(R) and Prp(R) are sober", true},
    {"T12", "partition of unity ⟺ X contains every maximal ideal", true},
    {"T13", "a quasi-compact ideal space is disconnected ⟺ its closed base strongly disconnects it", true},
    {"T14", "zero Jacobson radical, every maximal ideal in X and a strongly disconnecting subbase give a "
            "nontrivial idempotent e with the pair h(⟨e⟩), h(⟨1-e⟩)",
     true},
    {"T15", "the closed base generated by the hulls is closed under binary intersections, with "
            "(∪h(a_i)) ∩ (∪h(b_j)) = ∪h(a_i+b_j)",
     true},
    {"T16", "o ∈ X implies the ideal space is connected", true},
    {"T17", "partition of unity implies quasi-compactness", true},
    {"T18", "under the contraction-ideal property, f*: X(R') -> X(R) is continuous", true},
    {"T19", "under the contraction-ideal property, a surjective f makes X(R') homeomorphic to h(ker f)", true},
    {"T20", "under the contraction-ideal property, f*(X(R')) is dense ⟺ ker f ⊆ ∩X", true},
    {"T21", "under the contraction-ideal property, X(R_S) is homeomorphic to the points of X missing S", true},
    {"T22", "under the contraction-ideal property, X(R/a) is homeomorphic to h(a)", true},
    {"T23", "m.i.p. fails for Min, Prp, Prn, Fgn, Rad, Irr and Prm on suitable rings", false},
    {"T24", "a ring meeting the idempotent hypotheses whose subbase does not strongly disconnect Prp(R)", false},
};

bool in_kinds(SpectrumKind k, std::initializer_list<SpectrumKind> ks) {
  return std::find(ks.begin(), ks.end(), k) != ks.end();
}

// ---------------------------------------------------------------------------
// Per-ring and per-(ring, kind) data.

struct HomData {
  enum class How { quotient, localization } how;
  RingHom f;
  LatticePtr target;
  std::size_t ideal = 0;      // quotients: lattice position of the ideal
  ElementSet multiplicative;  // localizations: S
};

struct RingData {
  RingPtr ring;
  LatticePtr lattice;
  Limits limits;
  std::vector<HomData> homs;

  std::once_flag surjective_once;
  std::vector<HomData> surjective;
  std::optional<std::string> surjective_error;

  const std::vector<HomData>& surjective_homs() {
    std::call_once(surjective_once, [&] {
      try {
        for (std::size_t a = 0; a < lattice->unit_index(); ++a) {
          auto [q, canonical] = make_quotient(ring, (*lattice)[a]);
          LatticePtr tl = enumerate_ideals(q, limits);
          for (auto& f : enumerate_homs(ring, q, limits))
            if (f.is_surjective()) surjective.push_back({HomData::How::quotient, std::move(f), tl, a, {}});
        }
      } catch (const Error& e) {
        surjective.clear();
        surjective_error = e.what();
      }
    });
    if (surjective_error) throw Error(ErrorKind::CapExceeded, *surjective_error);
    return surjective;
  }
};

std::shared_ptr<RingData> build_ring_data(RingPtr ring, const Limits& limits) {
  auto rd = std::make_shared<RingData>();
  rd->ring = ring;
  rd->limits = limits;
  rd->lattice = enumerate_ideals(ring, limits);
  const IdealLattice& L = *rd->lattice;
  for (std::size_t a = 0; a < L.unit_index(); ++a) {
    auto [q, f] = make_quotient(ring, L[a]);
    rd->homs.push_back({HomData::How::quotient, std::move(f), enumerate_ideals(q, limits), a, {}});
  }
  std::vector<Element> seen;
  const FiniteRing& r = *ring;
  for (Element x = 0; x < r.size(); ++x) {
    if (r.is_nilpotent(x)) continue;
    const auto s = MultiplicativeSet::generated_by(ring, std::span(&x, 1));
    const Element e = localization_idempotent(s);
    if (std::find(seen.begin(), seen.end(), e) != seen.end()) continue;
    seen.push_back(e);
    auto [loc, f] = localize(s);
    rd->homs.push_back({HomData::How::localization, std::move(f), enumerate_ideals(loc, limits), 0, s.members()});
  }
  return rd;
}

struct Context {
  RingData& rd;
  SpectrumKind kind;
  Exec exec;
  Spectrum spec;
  std::optional<TopologySpace> topo_;
  std::optional<std::vector<std::size_t>> kernels_;

  Context(RingData& data, SpectrumKind k, Exec e) : rd(data), kind(k), exec(e), spec(data.lattice, k, e) {}

  const IdealLattice& L() const { return *rd.lattice; }
  std::size_t n() const { return spec.size(); }

  const TopologySpace& topo() {
    if (!topo_) topo_.emplace(generate_topology(spec, rd.limits, exec));
    return *topo_;
  }

  // k(S) for every S, tabulated when |X| <= 16.
  const std::vector<std::size_t>& kernels() {
    if (!kernels_) {
      const std::size_t count = std::size_t{1} << n();
      std::vector<std::size_t> k(count);
      k[0] = L().unit_index();
      for (std::size_t m = 1; m < count; ++m) {
        const auto low = static_cast<std::size_t>(std::countr_zero(m));
        k[m] = L().meet_index(k[m & (m - 1)], spec.lattice_index(low));
      }
      kernels_ = std::move(k);
    }
    return *kernels_;
  }

  json I(std::size_t lattice_index) const { return ideal_json(L()[lattice_index]); }
  json P(PointSet s) const { return point_set_json(spec, s); }
};

// Records the first failure of each named property.
struct Findings {
  json failed = json::object();
  void record(const std::string& property, json detail) {
    if (!failed.contains(property)) failed[property] = std::move(detail);
  }
  bool any() const { return !failed.empty(); }
};

void finish(VerdictReport& r, const Findings& f) {
  if (f.any()) {
    r.status = Status::fails;
    r.witness["failed"] = f.failed;
  } else {
    r.status = Status::holds;
  }
}

// Every subset when n <= limit, otherwise a fixed pseudo-random sample plus
// the empty and full sets.
template <class F>
void for_subsets(std::size_t n, std::size_t limit, std::size_t samples, F&& f) {
  if (n <= limit) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) f(PointSet(m));
    return;
  }
  const PointSet full = PointSet::full(n);
  std::mt19937_64 rng(0x1dea15);
  f(PointSet{});
  f(full);
  for (std::size_t i = 0; i < samples; ++i) f(PointSet(rng()) & full);
}

bool subset_of_family(const std::vector<PointSet>& sorted, PointSet s) {
  return std::binary_search(sorted.begin(), sorted.end(), s, family_less);
}

std::string hom_label(const HomData& h) {
  return std::string(h.how == HomData::How::quotient ? "quotient " : "localization ") +
         h.f.source()->label() + " -> " + h.f.target()->label();
}

// ---------------------------------------------------------------------------
// Checks.

void t01(Context& c, VerdictReport& r) {
  Findings f;
  const Spectrum& S = c.spec;
  const IdealLattice& L = c.L();
  const std::size_t N = L.size();

  for_subsets(c.n(), 12, 4096, [&](PointSet s) {
    const std::size_t k = S.kernel(s);
    const PointSet hk = S.hull(k);
    if (!s.is_subset_of(hk)) f.record("closure_extensive", {{"S", c.P(s)}});
    if (S.hull(S.kernel(hk)) != hk) f.record("closure_idempotent", {{"S", c.P(s)}});
    for (std::size_t a = 0; a < N; ++a)
      if (s.is_subset_of(S.hull(a)) != L.leq(a, k)) f.record("galois", {{"S", c.P(s)}, {"a", c.I(a)}});
    for (std::size_t p = 0; p < c.n(); ++p) {
      if (s.contains(p)) continue;
      PointSet t = s;
      t.insert(p);
      if (!L.leq(S.kernel(t), k)) f.record("kernel_order_reversing", {{"S", c.P(s)}, {"T", c.P(t)}});
    }
  });

  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      if (L.leq(a, b) && !S.hull(b).is_subset_of(S.hull(a)))
        f.record("hull_order_reversing", {{"a", c.I(a)}, {"b", c.I(b)}});

  if (!S.hull(L.unit_index()).empty()) f.record("hull_of_R", json::object());
  if (S.hull(L.zero_index()) != S.all()) f.record("hull_of_zero", json::object());
  if (S.kernel(PointSet{}) != L.unit_index()) f.record("kernel_of_empty", json::object());

  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = 0; b < N; ++b) {
      const std::size_t m = L.meet_index(a, b);
      const std::size_t p = L.index_of(ideal_product(L[a], L[b]));
      if (!(S.hull(a) | S.hull(b)).is_subset_of(S.hull(m)) || !S.hull(m).is_subset_of(S.hull(p)))
        f.record("intersection_product", {{"a", c.I(a)}, {"b", c.I(b)}});
    }
  }

  // Hulls of sums over every sublist of the lattice (pairs and triples for
  // larger lattices).
  if (N <= 16) {
    const std::size_t count = std::size_t{1} << N;
    std::vector<std::size_t> sum(count);
    std::vector<PointSet> inter(count);
    sum[0] = L.zero_index();
    inter[0] = S.all();
    for (std::size_t m = 1; m < count; ++m) {
      const auto low = static_cast<std::size_t>(std::countr_zero(m));
      sum[m] = L.sum_index(sum[m & (m - 1)], low);
      inter[m] = inter[m & (m - 1)] & S.hull(low);
      if (inter[m] != S.hull(sum[m])) {
        json fam = json::array();
        for (std::size_t i = 0; i < N; ++i)
          if ((m >> i) & 1U) fam.push_back(c.I(i));
        f.record("hull_of_sum", {{"family", fam}});
      }
    }
  } else {
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = a; b < N; ++b)
        for (std::size_t d = b; d < N; ++d) {
          const std::size_t s = L.sum_index(L.sum_index(a, b), d);
          if ((S.hull(a) & S.hull(b) & S.hull(d)) != S.hull(s))
            f.record("hull_of_sum", {{"family", {c.I(a), c.I(b), c.I(d)}}});
        }
  }

  // k(S ∪ T) = k(S) ∩ k(T).
  const std::size_t n = c.n();
  auto check_pair = [&](PointSet s, PointSet t) {
    if (S.kernel(s | t) != L.meet_index(S.kernel(s), S.kernel(t)))
      f.record("kernel_of_union", {{"S", c.P(s)}, {"T", c.P(t)}});
  };
  if (n <= 8) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
      for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t) check_pair(PointSet(s), PointSet(t));
  } else {
    std::mt19937_64 rng(0xc0ffee);
    const PointSet full = S.all();
    for (int i = 0; i < 4096; ++i) check_pair(PointSet(rng()) & full, PointSet(rng()) & full);
  }

  for (std::size_t a = 0; a < N; ++a)
    if (!S.hull(L.index_of(radical(L[a]))).is_subset_of(S.hull(a))) f.record("hull_of_radical", {{"a", c.I(a)}});

  finish(r, f);
}

void t02(Context& c, VerdictReport& r) {
  const Spectrum& S = c.spec;
  const IdealLattice& L = c.L();
  std::vector<std::size_t> rad(L.size());
  for (std::size_t a = 0; a < L.size(); ++a) rad[a] = L.index_of(radical(L[a]));

  std::optional<std::size_t> w1, w2, w3;
  for (std::size_t a = 0; a < L.size() && !w1; ++a)
    if (S.hull(a) != S.hull(rad[a])) w1 = a;
  for (std::size_t p = 0; p < S.size() && !w2; ++p)
    if (S.hull(S.lattice_index(p)) != S.hull(rad[S.lattice_index(p)])) w2 = S.lattice_index(p);
  for (std::size_t p = 0; p < S.size() && !w3; ++p)
    if (rad[S.lattice_index(p)] != S.lattice_index(p)) w3 = S.lattice_index(p);

  const bool c1 = !w1, c2 = !w2, c3 = !w3;
  r.witness = {{"all_ideals", c1}, {"all_points", c2}, {"points_radical", c3}};
  if (w1) r.witness["ideal_counterexample"] = c.I(*w1);
  if (w3) r.witness["non_radical_point"] = c.I(*w3);
  r.status = (c1 == c2 && c2 == c3) ? Status::holds : Status::fails;
}

struct UnionAxiom {
  bool reduced = true;
  std::optional<std::pair<std::size_t, std::size_t>> reduced_witness;
  std::optional<bool> exhaustive;
  std::optional<std::pair<PointSet, PointSet>> exhaustive_witness;
};

// hk(A ∪ B) = hk(A) ∪ hk(B): reduced over im(k), exhaustively over subset
// pairs when |X| <= exhaustive_limit.
UnionAxiom union_axiom(Context& c, std::size_t exhaustive_limit) {
  UnionAxiom u;
  const Spectrum& S = c.spec;
  const IdealLattice& L = c.L();
  const auto imk = image_of_kernel(S);
  for (auto ia = imk.rbegin(); ia != imk.rend() && u.reduced; ++ia)
    for (auto ib = imk.rbegin(); ib != imk.rend() && u.reduced; ++ib)
      if (S.hull(L.meet_index(*ia, *ib)) != (S.hull(*ia) | S.hull(*ib))) {
        u.reduced = false;
        u.reduced_witness = std::pair{*ia, *ib};
      }
  if (c.n() <= exhaustive_limit) {
    const auto& k = c.kernels();
    std::vector<PointSet> hk(k.size());
    for (std::size_t m = 0; m < k.size(); ++m) hk[m] = S.hull(k[m]);
    bool ok = true;
    for (std::size_t a = 0; a < hk.size() && ok; ++a)
      for (std::size_t b = 0; b < hk.size() && ok; ++b)
        if (hk[a | b] != (hk[a] | hk[b])) {
          ok = false;
          u.exhaustive_witness = std::pair{PointSet(a), PointSet(b)};
        }
    u.exhaustive = ok;
  }
  return u;
}

void t03(Context& c, VerdictReport& r) {
  const auto mip = find_mip_failure(c.spec);
  const auto u = union_axiom(c, 10);
  r.witness = {{"mip", !mip}, {"kuratowski", u.reduced}};
  r.witness["exhaustive"] = u.exhaustive ? json(*u.exhaustive) : json(nullptr);
  if (mip)
    r.witness["mip_witness"] = {{"a", c.I(mip->a)}, {"b", c.I(mip->b)}, {"s", c.I(c.spec.lattice_index(mip->s))}};
  if (u.reduced_witness) r.witness["union_witness"] = {{"a", c.I(u.reduced_witness->first)}, {"b", c.I(u.reduced_witness->second)}};
  if (u.exhaustive_witness)
    r.witness["subset_witness"] = {{"A", c.P(u.exhaustive_witness->first)}, {"B", c.P(u.exhaustive_witness->second)}};
  const bool agree = (!mip == u.reduced) && (!u.exhaustive || *u.exhaustive == u.reduced);
  r.status = agree ? Status::holds : Status::fails;
}

void t04(Context& c, VerdictReport& r) {
  const Spectrum& S = c.spec;
  const IdealLattice& L = c.L();
  bool closed = true;
  for (std::size_t p = 0; p < S.size() && closed; ++p)
    for (std::size_t q = p + 1; q < S.size() && closed; ++q)
      if (!S.point_of(L.meet_index(S.lattice_index(p), S.lattice_index(q)))) closed = false;

  auto imk = image_of_kernel(S);
  std::vector<std::size_t> points;
  for (std::size_t p = 0; p < S.size(); ++p) points.push_back(S.lattice_index(p));
  const bool equals_full = imk == points;
  std::vector<std::size_t> nonempty;
  for (std::size_t i : imk)
    if (i != L.unit_index()) nonempty.push_back(i);
  const bool equals_nonempty = nonempty == points;

  r.witness = {{"closed_under_intersections", closed},
               {"equals_image_of_nonempty_subsets", equals_nonempty},
               {"equals_full_image", equals_full}};
  r.notes = "im(k) always contains k(∅) = R, which is never a point; compared on nonempty subsets";
  r.status = equals_nonempty == closed ? Status::holds : Status::fails;
}

void t05(Context& c, VerdictReport& r) {
  const Spectrum& S = c.spec;
  const auto u = union_axiom(c, 10);
  const bool kur = u.exhaustive ? *u.exhaustive : u.reduced;

  std::vector<PointSet> chk;
  if (c.n() <= 16) {
    for (std::size_t k : c.kernels()) chk.push_back(S.hull(k));
  } else {
    for (std::size_t a : image_of_kernel(S)) chk.push_back(S.hull(a));
  }
  std::sort(chk.begin(), chk.end(), family_less);
  chk.erase(std::unique(chk.begin(), chk.end()), chk.end());
  bool base = true;
  std::optional<std::pair<PointSet, PointSet>> gap;
  for (std::size_t i = 0; i < chk.size() && base; ++i)
    for (std::size_t j = i + 1; j < chk.size() && base; ++j)
      if (!subset_of_family(chk, chk[i] | chk[j])) {
        base = false;
        gap = std::pair{chk[i], chk[j]};
      }

  r.witness = {{"kuratowski", kur}, {"closed_base", base}};
  if (gap) r.witness["union_not_in_family"] = {{"A", c.P(gap->first)}, {"B", c.P(gap->second)}};
  r.status = kur == base ? Status::holds : Status::fails;

  if (kur && base && c.n() <= 12) {
    const auto& k = c.kernels();
    const TopologySpace& t = c.topo();
    for (std::size_t m = 0; m < k.size(); ++m) {
      if (closure_of(t, PointSet(m)) != S.hull(k[m])) {
        r.status = Status::fails;
        r.witness["closure_mismatch"] = c.P(PointSet(m));
        break;
      }
    }
  }
}

void t06(Context& c, VerdictReport& r) {
  Findings f;
  const Spectrum& S = c.spec;
  const IdealLattice& L = c.L();
  const std::size_t N = L.size();
  std::vector<std::size_t> xr(N), rad(N);
  for (std::size_t a = 0; a < N; ++a) {
    xr[a] = x_radical(S, a);
    rad[a] = L.index_of(radical(L[a]));
  }
  for (std::size_t a = 0; a < N; ++a)
    if (!L.leq(a, xr[a]) || !L.leq(xr[a], rad[a]))
      f.record("sandwich", {{"a", c.I(a)}, {"x_radical", c.I(xr[a])}, {"radical", c.I(rad[a])}});
  for (std::size_t p = 0; p < S.size(); ++p)
    if (xr[S.lattice_index(p)] != S.lattice_index(p)) f.record("fixed_points", {{"a", c.I(S.lattice_index(p))}});
  for (std::size_t a = 0; a < N; ++a)
    if (S.hull(a) != S.hull(xr[a])) f.record("hull_invariance", {{"a", c.I(a)}});
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      if (S.hull(a).is_subset_of(S.hull(b)) != L.leq(xr[b], xr[a]))
        f.record("order_criterion", {{"a", c.I(a)}, {"b", c.I(b)}});

  const bool regular = is_von_neumann_regular(*c.rd.ring);
  r.witness["regular_ring"] = regular;
  if (regular) {
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b)
        if (S.hull(a).is_subset_of(S.hull(b)) != L.leq(b, a))
          f.record("regular_order_criterion", {{"a", c.I(a)}, {"b", c.I(b)}});
  }

  std::vector<PointSet> ch, chk;
  for (std::size_t a = 0; a < N; ++a) ch.push_back(S.hull(a));
  if (c.n() <= 16) {
    for (std::size_t k : c.kernels()) chk.push_back(S.hull(k));
  } else {
    for (std::size_t a : image_of_kernel(S)) chk.push_back(S.hull(a));
  }
  for (auto* v : {&ch, &chk}) {
    std::sort(v->begin(), v->end(), family_less);
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  if (ch != chk) f.record("families_agree", {{"C_h", ch.size()}, {"C_hk", chk.size()}});
  finish(r, f);
}

void t07(Context& c, VerdictReport& r) {
  const auto v = is_T0(c.topo());
  r.status = v.status;
  r.witness = v.witness;
}

void t08(Context& c, VerdictReport& r) {
  const auto bad = t1_violation(c.topo().space());
  std::optional<std::size_t> non_max;
  for (std::size_t p = 0; p < c.n() && !non_max; ++p)
    if (!classify(c.L(), c.spec.lattice_index(p), SpectrumKind::Max)) non_max = p;
  const bool t1 = !bad;
  const bool sub = !non_max;
  r.witness = {{"t1", t1}, {"subset_of_max", sub}};
  if (bad) r.witness["non_closed_point"] = c.I(c.spec.lattice_index(*bad));
  if (non_max) r.witness["non_maximal_point"] = c.I(c.spec.lattice_index(*non_max));
  r.status = t1 == sub ? Status::holds : Status::fails;
}

void t09(Context& c, VerdictReport& r) {
  Findings f;
  const TopologySpace& t = c.topo();
  const Spectrum& S = c.spec;
  for (std::size_t p = 0; p < S.size(); ++p) {
    const std::size_t a = S.lattice_index(p);
    const PointSet h = S.hull(a);
    if (closure_of(t, PointSet::singleton(p)) != h) f.record("closure_of_point", {{"a", c.I(a)}});
    if (!is_irreducible(t.space(), h)) f.record("irreducible", {{"a", c.I(a)}});
  }
  if (c.kind == SpectrumKind::Prp) {
    for (std::size_t i = 0; i < t.subbase().size(); ++i) {
      const PointSet a = t.subbase()[i];
      if (!a.empty() && !is_irreducible(t.space(), a))
        f.record("prp_subbase_irreducible", {{"a", c.I(t.subbase_ideals()[i])}});
    }
  }
  finish(r, f);
}

void t10(Context& c, VerdictReport& r) {
  const TopologySpace& t = c.topo();
  const Spectrum& S = c.spec;
  const IdealLattice& L = c.L();
  const bool sober = !sobriety_violation(t.space());
  const auto irr = irreducible_closed_sets(t.space());

  bool criterion = true;
  bool ircs = true;
  json criterion_witness, ircs_witness;
  for (const auto& ic : irr) {
    if (!subset_of_family(t.subbase(), ic.set)) {
      if (ircs) ircs_witness = c.P(ic.set);
      ircs = false;
      continue;
    }
    const std::size_t a = S.kernel(ic.set);
    const auto p = S.point_of(a);
    if (!p || !ic.set.contains(*p)) {
      if (criterion) criterion_witness = c.I(a);
      criterion = false;
    }
  }

  // The reading over every ideal a with h(a) irreducible, and hull
  // collisions where exactly one of a, b lies in its own hull.
  std::vector<PointSet> irr_sets;
  for (const auto& ic : irr) irr_sets.push_back(ic.set);
  std::sort(irr_sets.begin(), irr_sets.end(), family_less);
  bool strong = true;
  json strong_witness;
  for (std::size_t a = 0; a < L.size() && strong; ++a) {
    const PointSet h = S.hull(a);
    if (!h.empty() && subset_of_family(irr_sets, h)) {
      const auto p = S.point_of(a);
      if (!p) {
        strong = false;
        strong_witness = c.I(a);
      }
    }
  }
  json collision;
  for (std::size_t a = 0; a < L.size() && collision.is_null(); ++a)
    for (std::size_t b = a + 1; b < L.size() && collision.is_null(); ++b)
      if (S.hull(a) == S.hull(b) && S.point_of(a).has_value() != S.point_of(b).has_value())
        collision = {{"a", c.I(a)}, {"b", c.I(b)}};

  r.witness = {{"sober", sober}, {"criterion", criterion}, {"irreducible_sets_are_hulls", ircs},
               {"all_ideals_reading", strong}};
  if (!criterion_witness.is_null()) r.witness["criterion_witness"] = criterion_witness;
  if (!ircs_witness.is_null()) r.witness["irreducible_set_not_a_hull"] = ircs_witness;
  if (!strong_witness.is_null()) r.witness["all_ideals_reading_witness"] = strong_witness;
  if (!collision.is_null()) r.witness["hull_collision"] = collision;
  r.notes = "criterion read with a = k(C), the largest ideal with hull C";
  r.status = sober == criterion ? Status::holds : Status::fails;
}

void t11(Context& c, VerdictReport& r) {
  const auto v = is_sober(c.topo());
  r.status = v.status;
  r.witness = v.witness;
}

void t12(Context& c, VerdictReport& r) {
  const auto v = partition_of_unity_violation(c.spec);
  const bool pou = !v;
  const bool all_max = contains_all_maximal(c.spec);
  r.witness = {{"partition_of_unity", pou}, {"contains_all_maximal", all_max}};
  if (v) r.witness["proper_ideal_with_empty_hull"] = c.I(*v);
  r.status = pou == all_max ? Status::holds : Status::fails;
}

void t13(Context& c, VerdictReport& r) {
  const TopologySpace& t = c.topo();
  const auto clopen = disconnection(t.space());
  const auto sd = strong_disconnection(t.base(), t.full());
  r.witness = {{"quasi_compact", true}, {"disconnected", clopen.has_value()}, {"base_strongly_disconnects", sd.has_value()}};
  if (sd) r.witness["pair"] = {{"A", c.P(sd->first)}, {"B", c.P(sd->second)}};
  r.status = clopen.has_value() == sd.has_value() ? Status::holds : Status::fails;
}

void t14(Context& c, VerdictReport& r) {
  const TopologySpace& t = c.topo();
  const bool jzero = jacobson_radical(c.rd.ring).is_zero();
  const bool all_max = contains_all_maximal(c.spec);
  const auto sd = strong_disconnection(t.subbase(), t.full());
  r.witness = {{"jacobson_zero", jzero}, {"contains_all_maximal", all_max}, {"subbase_strongly_disconnects", sd.has_value()}};
  if (!jzero || !all_max || !sd) {
    r.status = Status::vacuous;
    r.notes = "hypotheses not met";
    return;
  }
  const std::size_t a = c.spec.kernel(sd->first);
  const std::size_t b = c.spec.kernel(sd->second);
  r.witness["a"] = c.I(a);
  r.witness["b"] = c.I(b);
  try {
    const Element e = extract_idempotent(t, a, b);
    const FiniteRing& R = *c.rd.ring;
    const Element f = R.sub(R.one(), e);
    const Ideal ie = generate_ideal(c.rd.ring, std::span(&e, 1));
    const Ideal iff = generate_ideal(c.rd.ring, std::span(&f, 1));
    r.witness["e"] = R.name(e);
    r.witness["one_minus_e"] = R.name(f);
    const bool pair_ok = c.spec.hull(ie) == sd->first && c.spec.hull(iff) == sd->second;
    r.status = pair_ok ? Status::holds : Status::fails;
  } catch (const Error& e) {
    r.status = Status::fails;
    r.witness["error"] = e.what();
  } catch (const std::logic_error& e) {
    r.status = Status::fails;
    r.witness["error"] = e.what();
  }
}

void t15(Context& c, VerdictReport& r) {
  Findings f;
  const TopologySpace& t = c.topo();
  const Spectrum& S = c.spec;
  const IdealLattice& L = c.L();
  const auto& base = t.base();
  const auto& sub = t.subbase();
  const auto& subi = t.subbase_ideals();

  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i + 1; j < base.size(); ++j)
      if (!subset_of_family(base, base[i] & base[j]))
        f.record("closed_under_intersection", {{"A", c.P(base[i])}, {"B", c.P(base[j])}});

  for (PointSet a : base) {
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < sub.size(); ++i)
      if (!sub[i].empty() && sub[i].is_subset_of(a)) reps.push_back(i);
    for (std::size_t j = 0; j < sub.size(); ++j) {
      PointSet u;
      for (std::size_t i : reps) u |= S.hull(L.sum_index(subi[i], subi[j]));
      if (u != (a & sub[j])) f.record("sum_identity", {{"A", c.P(a)}, {"b", c.I(subi[j])}});
    }
  }
  r.witness["base_size"] = base.size();
  finish(r, f);
}

void t16(Context& c, VerdictReport& r) {
  const bool has_zero = c.spec.point_of(c.L().zero_index()).has_value();
  const bool connected = !disconnection(c.topo().space());
  r.witness = {{"zero_in_X", has_zero}, {"connected", connected}};
  if (!has_zero) {
    r.status = Status::vacuous;
    r.notes = connected ? "o is not a point yet the space is connected: the converse fails here"
                        : "o is not a point";
    return;
  }
  r.status = connected ? Status::holds : Status::fails;
}

void t17(Context& c, VerdictReport& r) {
  if (!has_partition_of_unity(c.spec)) {
    r.status = Status::vacuous;
    r.notes = "no partition of unity";
    return;
  }
  const TopologySpace& t = c.topo();
  const IdealLattice& L = c.L();
  // Finite spaces are quasi-compact. The sum route: nonempty subbasic closed
  // sets with empty intersection have ideals summing to R.
  PointSet all = t.full();
  for (PointSet a : t.subbase())
    if (!a.empty()) all &= a;
  r.witness["quasi_compact"] = true;
  if (!all.empty()) {
    r.status = Status::holds;
    r.notes = "the nonempty subbasic closed sets meet";
    return;
  }
  PointSet acc = t.full();
  std::size_t sum = L.zero_index();
  json fam = json::array();
  for (std::size_t i = t.subbase().size(); i-- > 0 && !acc.empty();) {
    const PointSet a = t.subbase()[i];
    if (a.empty() || (acc & a) == acc) continue;
    acc &= a;
    sum = L.sum_index(sum, t.subbase_ideals()[i]);
    fam.push_back(c.I(t.subbase_ideals()[i]));
  }
  r.witness["subfamily"] = fam;
  r.witness["sum_is_R"] = sum == L.unit_index();
  r.status = sum == L.unit_index() ? Status::holds : Status::fails;
}

// f*: X(R') -> X(R) for one hom, with the target's spectrum and topology.
struct HomView {
  const HomData& hd;
  Spectrum target;
  std::optional<TopologySpace> topo;
  std::vector<std::size_t> fstar;  // point of X(R) per point of X(R')
  bool contraction = true;
  json contraction_witness;
};

HomView make_view(Context& c, const HomData& hd, bool topology) {
  HomView v{hd, Spectrum(hd.target, c.kind, c.exec), std::nullopt, {}, true, {}};
  for (std::size_t q = 0; q < v.target.size(); ++q) {
    const Ideal pre = contraction(hd.f, v.target.point(q));
    const auto p = c.spec.point_of(c.L().index_of(pre));
    if (!p) {
      v.contraction = false;
      v.contraction_witness = {{"b", ideal_json(v.target.point(q))}, {"preimage", ideal_json(pre)}};
      break;
    }
    v.fstar.push_back(*p);
  }
  if (topology && v.contraction && !v.target.empty()) v.topo.emplace(generate_topology(v.target, c.rd.limits, c.exec));
  return v;
}

// Combines per-hom outcomes: any failure fails; otherwise holds when at least
// one instance was non-vacuous.
struct HomTally {
  std::size_t holds = 0, vacuous = 0;
  std::optional<json> failure;

  void finish(VerdictReport& r) const {
    r.witness["instances"] = holds;
    r.witness["vacuous_instances"] = vacuous;
    if (failure) {
      r.status = Status::fails;
      r.witness["failure"] = *failure;
    } else {
      r.status = holds > 0 ? Status::holds : Status::vacuous;
      if (holds == 0) r.notes = "no hom satisfies the contraction-ideal property with a nonempty target spectrum";
    }
  }
};

PointSet image_of(const HomView& v) {
  PointSet y;
  for (std::size_t p : v.fstar) y.insert(p);
  return y;
}

// Whether f* is a homeomorphism of X(R') onto the subspace y of X(R).
bool homeomorphic_onto(Context& c, const HomView& v, PointSet y) {
  if (image_of(v) != y || v.fstar.size() != y.count()) return false;
  std::vector<std::size_t> rank(c.n(), 0);
  std::size_t j = 0;
  y.for_each([&](std::size_t p) { rank[p] = j++; });
  std::vector<std::size_t> map;
  for (std::size_t p : v.fstar) map.push_back(rank[p]);
  return verify_homeomorphism(map, v.topo->space(), c.topo().space().subspace(y));
}

bool usable(const HomView& v) { return v.contraction && !v.target.empty(); }

void t18(Context& c, VerdictReport& r) {
  HomTally tally;
  const TopologySpace& t = c.topo();
  for (const auto& hd : c.rd.homs) {
    if (tally.failure) break;
    const HomView v = make_view(c, hd, true);
    if (!usable(v)) {
      ++tally.vacuous;
      continue;
    }
    bool ok = true;
    json why;
    for (PointSet cl : t.closed_family()) {
      PointSet pre;
      for (std::size_t q = 0; q < v.fstar.size(); ++q)
        if (cl.contains(v.fstar[q])) pre.insert(q);
      if (!v.topo->space().is_closed(pre)) {
        ok = false;
        why = {{"closed_set", c.P(cl)}};
        break;
      }
    }
    // (f*)^{-1}(h(a)) = h(<f(a)>)
    for (std::size_t a = 0; a < c.L().size() && ok; ++a) {
      std::vector<Element> img;
      c.L()[a].members().for_each([&](std::size_t x) { img.push_back(hd.f(static_cast<Element>(x))); });
      const PointSet expect = v.target.hull(generate_ideal(hd.f.target(), img));
      PointSet pre;
      for (std::size_t q = 0; q < v.fstar.size(); ++q)
        if (c.spec.hull(a).contains(v.fstar[q])) pre.insert(q);
      if (pre != expect) {
        ok = false;
        why = {{"a", c.I(a)}};
      }
    }
    if (ok) {
      ++tally.holds;
    } else {
      why["hom"] = hom_label(hd);
      tally.failure = why;
    }
  }
  tally.finish(r);
}

void t19(Context& c, VerdictReport& r) {
  HomTally tally;
  for (const auto& hd : c.rd.surjective_homs()) {
    if (tally.failure) break;
    const HomView v = make_view(c, hd, true);
    if (!usable(v)) {
      ++tally.vacuous;
      continue;
    }
    const PointSet y = c.spec.hull(kernel_of(hd.f));
    if (homeomorphic_onto(c, v, y)) {
      ++tally.holds;
    } else {
      tally.failure = json{{"hom", hom_label(hd)}, {"kernel", ideal_json(kernel_of(hd.f))},
                           {"image", c.P(image_of(v))}, {"hull_of_kernel", c.P(y)}};
    }
  }
  tally.finish(r);
}

void t20(Context& c, VerdictReport& r) {
  HomTally tally;
  const TopologySpace& t = c.topo();
  const std::size_t kx = c.spec.kernel(c.spec.all());
  for (const auto& hd : c.rd.homs) {
    if (tally.failure) break;
    const HomView v = make_view(c, hd, false);
    if (!usable(v)) {
      ++tally.vacuous;
      continue;
    }
    const bool dense = closure_of(t, image_of(v)) == t.full();
    const std::size_t ker = c.L().index_of(kernel_of(hd.f));
    const bool crit = c.L().leq(ker, kx);
    if (dense == crit) {
      ++tally.holds;
    } else {
      tally.failure = json{{"hom", hom_label(hd)}, {"dense", dense}, {"kernel_in_intersection", crit}};
    }
  }
  tally.finish(r);
}

void t21(Context& c, VerdictReport& r) {
  HomTally tally;
  for (const auto& hd : c.rd.homs) {
    if (tally.failure) break;
    if (hd.how != HomData::How::localization) continue;
    const HomView v = make_view(c, hd, true);
    if (!usable(v)) {
      ++tally.vacuous;
      continue;
    }
    PointSet y;
    for (std::size_t p = 0; p < c.n(); ++p)
      if ((c.spec.point(p).members() & hd.multiplicative).none()) y.insert(p);
    if (homeomorphic_onto(c, v, y)) {
      ++tally.holds;
    } else {
      tally.failure = json{{"hom", hom_label(hd)}, {"image", c.P(image_of(v))}, {"points_missing_S", c.P(y)}};
    }
  }
  tally.finish(r);
}

void t22(Context& c, VerdictReport& r) {
  HomTally tally;
  for (const auto& hd : c.rd.homs) {
    if (tally.failure) break;
    if (hd.how != HomData::How::quotient) continue;
    const HomView v = make_view(c, hd, true);
    if (!usable(v)) {
      ++tally.vacuous;
      continue;
    }
    const PointSet y = c.spec.hull(hd.ideal);
    if (homeomorphic_onto(c, v, y)) {
      ++tally.holds;
    } else {
      tally.failure = json{{"hom", hom_label(hd)}, {"image", c.P(image_of(v))}, {"hull", c.P(y)}};
    }
  }
  tally.finish(r);
}

void t23(Context& c, VerdictReport& r) {
  const auto w = find_mip_failure(c.spec);
  const std::string& label = c.rd.ring->label();
  if (label == "Z36") r.notes = "analog: Z36 stands in for Z";
  if (w) {
    r.status = Status::fails;
    r.witness = {{"a", c.I(w->a)}, {"b", c.I(w->b)}, {"s", c.I(c.spec.lattice_index(w->s))}};
  } else {
    r.status = Status::holds;
    if (in_kinds(c.kind, {SpectrumKind::Irr, SpectrumKind::Prm}))
      r.notes = "no failure on this ring; these kinds need a ring with a non-distributive ideal lattice";
  }
}

void t24(Context& c, VerdictReport& r) {
  const FiniteRing& R = *c.rd.ring;
  const IdealLattice& L = c.L();
  if (R.label() == "Z6xZ6") r.notes = "analog: Z6xZ6 stands in for ZxZ";
  if (!jacobson_radical(c.rd.ring).is_zero()) {
    r.status = Status::vacuous;
    r.witness["jacobson_zero"] = false;
    return;
  }
  std::optional<std::pair<Element, Element>> pair;
  for (Element e = 0; e < R.size() && !pair; ++e) {
    if (!R.is_idempotent(e) || e == R.zero() || e == R.one()) continue;
    const Element f = R.sub(R.one(), e);
    if (e < f) pair = std::pair{f, e};
  }
  if (!pair) {
    r.status = Status::vacuous;
    r.witness["nontrivial_idempotent"] = false;
    return;
  }
  const TopologySpace& t = c.topo();
  const Element e = pair->first, f = pair->second;
  const std::size_t a = L.index_of(generate_ideal(c.rd.ring, std::span(&e, 1)));
  const std::size_t b = L.index_of(generate_ideal(c.rd.ring, std::span(&f, 1)));
  const auto pd = pair_disconnects(t, a, b);
  const bool sd = strong_disconnection(t.subbase(), t.full()).has_value();
  r.witness = pd.witness;
  r.witness["e"] = R.name(e);
  r.witness["subbase_strongly_disconnects"] = sd;
  r.status = sd ? Status::holds : Status::fails;
}

using CheckFn = void (*)(Context&, VerdictReport&);

constexpr CheckFn kChecks[] = {t01, t02, t03, t04, t05, t06, t07, t08, t09, t10, t11, t12,
                               t13, t14, t15, t16, t17, t18, t19, t20, t21, t22, t23, t24};

std::size_t check_position(std::string_view id) {
  const auto reg = check_registry();
  for (std::size_t i = 0; i < reg.size(); ++i)
    if (reg[i].id == id) return i;
  throw Error(ErrorKind::UnknownName, "unknown check '" + std::string(id) + "'");
}

VerdictReport blank(const CheckInfo& info, const std::string& ring, SpectrumKind kind) {
  VerdictReport r;
  r.id = std::string(info.id);
  r.anchor = std::string(info.anchor);
  r.ring = ring;
  r.kind = std::string(kind_name(kind));
  return r;
}

VerdictReport run_in_context(std::size_t pos, Context& c, bool timing) {
  const CheckInfo& info = check_registry()[pos];
  VerdictReport r = blank(info, c.rd.ring->label(), c.kind);
  const auto start = std::chrono::steady_clock::now();
  try {
    if (c.spec.empty()) {
      r.status = Status::vacuous;
      r.notes = "empty spectrum";
    } else {
      kChecks[pos](c, r);
    }
  } catch (const Error& e) {
    r.status = Status::error;
    r.witness = json::object();
    r.notes = e.what();
  }
  if (timing)
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::span<const CheckInfo> check_registry() { return kRegistry; }

const CheckInfo& find_check(std::string_view id) { return kRegistry[check_position(id)]; }

bool applies(std::string_view id, SpectrumKind kind) {
  find_check(id);
  if (id == "T11") return in_kinds(kind, {SpectrumKind::Irs, SpectrumKind::Prp});
  if (id == "T23")
    return in_kinds(kind, {SpectrumKind::Min, SpectrumKind::Prp, SpectrumKind::Prn, SpectrumKind::Fgn,
                           SpectrumKind::Rad, SpectrumKind::Irr, SpectrumKind::Prm});
  if (id == "T24") return kind == SpectrumKind::Prp;
  return true;
}

VerdictReport run_check(std::string_view id, const RingPtr& ring, SpectrumKind kind, const Limits& limits) {
  const std::size_t pos = check_position(id);
  if (!applies(id, kind)) {
    VerdictReport r = blank(kRegistry[pos], ring->label(), kind);
    r.notes = "not applicable to this kind";
    return r;
  }
  try {
    auto rd = build_ring_data(ring, limits);
    Context c(*rd, kind, Exec::parallel);
    return run_in_context(pos, c, false);
  } catch (const Error& e) {
    VerdictReport r = blank(kRegistry[pos], ring->label(), kind);
    r.status = Status::error;
    r.notes = e.what();
    return r;
  }
}

std::vector<std::string> default_suite() {
  return {"Z2", "Z4", "Z6", "Z8", "Z12", "Z36", "Z2xZ2xZ2", "Z2xZ4", "Z6xZ6"};
}

bool is_theorem_failure(const VerdictReport& r) {
  if (r.status != Status::fails) return false;
  for (const auto& info : kRegistry)
    if (info.id == r.id) return info.theorem_form;
  return true;
}

std::vector<VerdictReport> run_suite(const SuiteConfig& cfg) {
  std::vector<std::size_t> checks;
  if (cfg.checks.empty()) {
    for (std::size_t i = 0; i < std::size(kRegistry); ++i) checks.push_back(i);
  } else {
    for (const auto& id : cfg.checks) checks.push_back(check_position(id));
    std::sort(checks.begin(), checks.end());
    checks.erase(std::unique(checks.begin(), checks.end()), checks.end());
  }

  struct RingSlot {
    std::shared_ptr<RingData> data;
    std::string label;
    std::string error;
  };
  std::vector<RingSlot> rings(cfg.rings.size());
  for (std::size_t i = 0; i < cfg.rings.size(); ++i) {
    rings[i].label = cfg.rings[i];
    try {
      RingPtr ring = parse_ring_expression(cfg.rings[i], cfg.limits);
      rings[i].label = ring->label();
      rings[i].data = build_ring_data(ring, cfg.limits);
    } catch (const Error& e) {
      rings[i].error = e.what();
    }
  }

  const std::size_t nk = cfg.kinds.size();
  const std::size_t tasks = rings.size() * nk;
  std::vector<std::vector<VerdictReport>> out(tasks);
  const int threads = cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::size_t t = 0; t < tasks; ++t) {
    const RingSlot& slot = rings[t / nk];
    const SpectrumKind kind = cfg.kinds[t % nk];
    std::vector<VerdictReport>& items = out[t];
    std::optional<Context> ctx;
    std::string error = slot.error;
    if (error.empty()) {
      try {
        ctx.emplace(*slot.data, kind, Exec::serial);
      } catch (const Error& e) {
        error = e.what();
      }
    }
    for (std::size_t pos : checks) {
      const CheckInfo& info = kRegistry[pos];
      if (!applies(info.id, kind)) continue;
      if (!error.empty()) {
        VerdictReport r = blank(info, slot.label, kind);
        r.status = Status::error;
        r.notes = error;
        items.push_back(std::move(r));
        continue;
      }
      items.push_back(run_in_context(pos, *ctx, cfg.timing));
    }
  }

  std::vector<VerdictReport> flat;
  for (auto& v : out)
    for (auto& r : v) flat.push_back(std::move(r));
  return flat;
}

namespace {

std::pair<long long, long long> parse_range(std::string_view s, std::string_view family) {
  const auto dots = s.find("..");
  if (dots == std::string_view::npos) throw ParseError(0, "family '" + std::string(family) + "' needs a range A..B");
  auto num = [&](std::string_view t) {
    if (t.empty() || t.size() > 9 || !std::all_of(t.begin(), t.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw ParseError(0, "bad bound in family '" + std::string(family) + "'");
    return std::stoll(std::string(t));
  };
  return {num(s.substr(0, dots)), num(s.substr(dots + 2))};
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::vector<std::string> expand_family(std::string_view family) {
  const auto colon = family.find(':');
  if (colon == std::string_view::npos) throw ParseError(0, "family must look like name:args");
  const std::string_view name = family.substr(0, colon);
  const std::string_view args = family.substr(colon + 1);
  std::vector<std::string> out;
  if (name == "list") {
    std::size_t start = 0;
    while (start <= args.size()) {
      const auto semi = args.find(';', start);
      const auto item = args.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
      if (!item.empty()) out.emplace_back(item);
      if (semi == std::string_view::npos) break;
      start = semi + 1;
    }
    return out;
  }
  const auto [lo, hi] = parse_range(args, family);
  if (name == "zn") {
    for (long long n = lo; n <= hi; ++n) out.push_back("Z" + std::to_string(n));
  } else if (name == "fields") {
    for (long long n = lo; n <= hi; ++n)
      if (is_prime(n)) out.push_back("Z" + std::to_string(n));
  } else if (name == "prod") {
    for (long long m = lo; m <= hi; ++m)
      for (long long n = m; n <= hi; ++n) out.push_back("Z" + std::to_string(m) + "xZ" + std::to_string(n));
  } else {
    throw ParseError(0, "unknown family '" + std::string(name) + "'");
  }
  return out;
}

SearchResult search_counterexamples(std::string_view check, std::string_view family,
                                    std::span<const SpectrumKind> kinds, const Limits& limits, int jobs) {
  const std::size_t pos = check_position(check);
  const bool mip_target = check == "T03" || check == "T05" || check == "T23";
  const auto exprs = expand_family(family);
  std::vector<SpectrumKind> ks(kinds.begin(), kinds.end());
  if (ks.empty()) ks.assign(kAllKinds.begin(), kAllKinds.end());

  std::vector<std::shared_ptr<RingData>> data(exprs.size());
  std::vector<std::string> errors(exprs.size());
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    try {
      data[i] = build_ring_data(parse_ring_expression(exprs[i], limits), limits);
    } catch (const Error& e) {
      errors[i] = e.what();
    }
  }

  const std::size_t tasks = exprs.size() * ks.size();
  std::vector<std::optional<Counterexample>> hits(tasks);
  std::vector<std::optional<VerdictReport>> errs(tasks);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::size_t t = 0; t < tasks; ++t) {
    const std::size_t ri = t / ks.size();
    const SpectrumKind kind = ks[t % ks.size()];
    if (!applies(check, kind)) continue;
    const CheckInfo& info = kRegistry[pos];
    if (!data[ri]) {
      if (t % ks.size() == 0) {
        VerdictReport r = blank(info, exprs[ri], kind);
        r.status = Status::error;
        r.notes = errors[ri];
        errs[t] = std::move(r);
      }
      continue;
    }
    try {
      Context c(*data[ri], kind, Exec::serial);
      if (mip_target) {
        if (find_mip_failure(c.spec)) {
          VerdictReport r = check_mip(c.spec);
          r.id = std::string(info.id);
          r.anchor = std::string(info.anchor);
          hits[t] = Counterexample{data[ri]->ring->label(), kind, c.n(), std::move(r)};
        }
      } else {
        VerdictReport r = run_in_context(pos, c, false);
        if (r.status == Status::fails)
          hits[t] = Counterexample{data[ri]->ring->label(), kind, c.n(), std::move(r)};
        else if (r.status == Status::error)
          errs[t] = std::move(r);
      }
    } catch (const Error& e) {
      VerdictReport r = blank(info, data[ri]->ring->label(), kind);
      r.status = Status::error;
      r.notes = e.what();
      errs[t] = std::move(r);
    }
  }

  SearchResult result;
  for (auto& h : hits)
    if (h) result.hits.push_back(std::move(*h));
  for (auto& e : errs)
    if (e) result.errors.push_back(std::move(*e));
  auto kind_pos = [](SpectrumKind k) { return std::find(kAllKinds.begin(), kAllKinds.end(), k) - kAllKinds.begin(); };
  std::stable_sort(result.hits.begin(), result.hits.end(), [&](const Counterexample& a, const Counterexample& b) {
    if (a.points != b.points) return a.points < b.points;
    if (a.ring != b.ring) return a.ring < b.ring;
    return kind_pos(a.kind) < kind_pos(b.kind);
  });
  return result;
}

}  // namespace idealspace
