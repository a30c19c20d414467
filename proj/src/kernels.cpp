#include "idealspace/kernels.hpp"

#include <algorithm>
#include <unordered_set>

namespace idealspace::kernels {

namespace {

// Checks that involve at most two elements. Cheap; shared by both versions.
std::optional<AxiomViolation> low_arity_axioms(std::size_t n, std::span<const Element> add,
                                               std::span<const Element> mul, Element zero,
                                               Element one) {
  for (Element a = 0; a < n; ++a) {
    if (add[a * n + zero] != a) return AxiomViolation{"additive identity", a, zero, 0};
    if (mul[a * n + one] != a) return AxiomViolation{"multiplicative identity", a, one, 0};
    bool has_neg = false;
    for (Element b = 0; b < n && !has_neg; ++b) has_neg = add[a * n + b] == zero;
    if (!has_neg) return AxiomViolation{"additive inverse", a, 0, 0};
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (add[a * n + b] != add[b * n + a]) return AxiomViolation{"additive commutativity", a, b, 0};
      if (mul[a * n + b] != mul[b * n + a]) return AxiomViolation{"multiplicative commutativity", a, b, 0};
    }
  }
  return std::nullopt;
}

// First violating (b, c) for a fixed first argument a.
std::optional<AxiomViolation> triple_axioms_for(Element a, std::size_t n,
                                                std::span<const Element> add,
                                                std::span<const Element> mul) {
  for (Element b = 0; b < n; ++b) {
    const Element ab_sum = add[a * n + b];
    const Element ab_prod = mul[a * n + b];
    for (Element c = 0; c < n; ++c) {
      if (add[ab_sum * n + c] != add[a * n + add[b * n + c]])
        return AxiomViolation{"additive associativity", a, b, c};
      if (mul[ab_prod * n + c] != mul[a * n + mul[b * n + c]])
        return AxiomViolation{"multiplicative associativity", a, b, c};
      if (mul[a * n + add[b * n + c]] != add[ab_prod * n + mul[a * n + c]])
        return AxiomViolation{"distributivity", a, b, c};
    }
  }
  return std::nullopt;
}

std::vector<PointSet> unique_generators(std::span<const PointSet> generators) {
  std::vector<PointSet> g(generators.begin(), generators.end());
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

void throw_cap(std::size_t cap) {
  throw Error(ErrorKind::CapExceeded,
              "closed-set family exceeds " + std::to_string(cap) + " members");
}

template <class Op>
std::vector<PointSet> close_serial(std::span<const PointSet> generators,
                                   std::optional<PointSet> extra, std::size_t cap, Op op) {
  const std::vector<PointSet> gens = unique_generators(generators);
  std::unordered_set<std::uint64_t> seen;
  std::vector<PointSet> family;
  auto add = [&](PointSet s) {
    if (seen.insert(s.bits()).second) {
      if (seen.size() > cap) throw_cap(cap);
      family.push_back(s);
    }
  };
  for (PointSet g : gens) add(g);
  if (extra) add(*extra);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const PointSet cur = family[i];
    for (PointSet g : gens) add(op(cur, g));
  }
  std::sort(family.begin(), family.end(), family_less);
  return family;
}

template <class Op>
std::vector<PointSet> close_parallel(std::span<const PointSet> generators,
                                     std::optional<PointSet> extra, std::size_t cap, Op op) {
  const std::vector<PointSet> gens = unique_generators(generators);
  std::unordered_set<std::uint64_t> seen;
  std::vector<PointSet> family;
  std::vector<PointSet> frontier;
  auto admit = [&](PointSet s) {
    if (seen.insert(s.bits()).second) {
      family.push_back(s);
      frontier.push_back(s);
    }
  };
  for (PointSet g : gens) admit(g);
  if (extra) admit(*extra);
  if (family.size() > cap) throw_cap(cap);

  while (!frontier.empty()) {
    std::vector<PointSet> candidates;
    const auto fsize = static_cast<long long>(frontier.size());
#pragma omp parallel
    {
      std::vector<PointSet> local;
#pragma omp for schedule(static) nowait
      for (long long i = 0; i < fsize; ++i) {
        for (PointSet g : gens) {
          const PointSet s = op(frontier[static_cast<std::size_t>(i)], g);
          if (seen.count(s.bits()) == 0) local.push_back(s);
        }
      }
#pragma omp critical
      candidates.insert(candidates.end(), local.begin(), local.end());
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    frontier.clear();
    for (PointSet s : candidates) admit(s);
    if (family.size() > cap) throw_cap(cap);
  }
  std::sort(family.begin(), family.end(), family_less);
  return family;
}

constexpr auto kUnion = [](PointSet a, PointSet b) { return a | b; };
constexpr auto kMeet = [](PointSet a, PointSet b) { return a & b; };

}  // namespace

namespace serial {

std::optional<AxiomViolation> ring_axioms(std::size_t size, std::span<const Element> add,
                                          std::span<const Element> mul, Element zero,
                                          Element one) {
  if (auto v = low_arity_axioms(size, add, mul, zero, one)) return v;
  for (Element a = 0; a < size; ++a)
    if (auto v = triple_axioms_for(a, size, add, mul)) return v;
  return std::nullopt;
}

std::vector<PointSet> union_closure(std::span<const PointSet> generators, std::size_t cap) {
  return close_serial(generators, std::nullopt, cap, kUnion);
}

std::vector<PointSet> intersection_closure(std::span<const PointSet> generators, PointSet full,
                                           std::size_t cap) {
  return close_serial(generators, full, cap, kMeet);
}

}  // namespace serial

namespace parallel {

std::optional<AxiomViolation> ring_axioms(std::size_t size, std::span<const Element> add,
                                          std::span<const Element> mul, Element zero,
                                          Element one) {
  if (auto v = low_arity_axioms(size, add, mul, zero, one)) return v;
  std::vector<std::optional<AxiomViolation>> per_row(size);
  const auto n = static_cast<long long>(size);
#pragma omp parallel for schedule(dynamic)
  for (long long a = 0; a < n; ++a)
    per_row[static_cast<std::size_t>(a)] =
        triple_axioms_for(static_cast<Element>(a), size, add, mul);
  for (auto& v : per_row)
    if (v) return v;
  return std::nullopt;
}

std::vector<PointSet> union_closure(std::span<const PointSet> generators, std::size_t cap) {
  return close_parallel(generators, std::nullopt, cap, kUnion);
}

std::vector<PointSet> intersection_closure(std::span<const PointSet> generators, PointSet full,
                                           std::size_t cap) {
  return close_parallel(generators, full, cap, kMeet);
}

}  // namespace parallel

}  // namespace idealspace::kernels
