#include "idealspace/spectrum.hpp"

#include <algorithm>

#include "idealspace/render.hpp"

namespace idealspace {

Spectrum::Spectrum(LatticePtr lattice, SpectrumKind kind, Exec exec)
    : lattice_(std::move(lattice)), kind_(kind) {
  const IdealLattice& L = *lattice_;
  const auto member = classify_all(L, kind, exec);
  point_of_.assign(L.size(), -1);
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (!member[i] || i == L.unit_index()) continue;
    point_of_[i] = static_cast<long>(points_.size());
    points_.push_back(i);
  }
  if (points_.size() > PointSet::kMaxPoints)
    throw Error(ErrorKind::CapExceeded, std::string(kind_name(kind)) + "(" + ring()->label() +
                                            ") has more than " +
                                            std::to_string(PointSet::kMaxPoints) + " points");
  hulls_.resize(L.size());
  for (std::size_t i = 0; i < L.size(); ++i) {
    PointSet h;
    for (std::size_t p = 0; p < points_.size(); ++p)
      if (L.leq(i, points_[p])) h.insert(p);
    hulls_[i] = h;
  }
}

std::optional<std::size_t> Spectrum::point_of(std::size_t lattice_index) const {
  const long p = point_of_[lattice_index];
  if (p < 0) return std::nullopt;
  return static_cast<std::size_t>(p);
}

std::size_t Spectrum::kernel(PointSet s) const {
  std::size_t k = lattice_->unit_index();
  s.for_each([&](std::size_t p) { k = lattice_->meet_index(k, points_[p]); });
  return k;
}

Spectrum make_spectrum(const RingPtr& ring, SpectrumKind kind, const Limits& limits) {
  return Spectrum(enumerate_ideals(ring, limits), kind);
}

nlohmann::json point_set_json(const Spectrum& spec, PointSet s) {
  nlohmann::json out = nlohmann::json::array();
  s.for_each([&](std::size_t p) { out.push_back(ideal_label(spec.point(p), true)); });
  return out;
}

std::vector<std::size_t> image_of_kernel(const Spectrum& spec) {
  const IdealLattice& L = *spec.lattice();
  std::vector<char> in(L.size(), 0);
  std::vector<std::size_t> list;
  auto push = [&](std::size_t i) {
    if (!in[i]) {
      in[i] = 1;
      list.push_back(i);
    }
  };
  push(L.unit_index());
  for (std::size_t p = 0; p < spec.size(); ++p) push(spec.lattice_index(p));
  // k(S ∪ T) = k(S) ∩ k(T): closing the point set under binary meets gives
  // every k(S) with S nonempty.
  for (std::size_t i = 1; i < list.size(); ++i)
    for (std::size_t j = 1; j < i; ++j) push(L.meet_index(list[i], list[j]));
  std::sort(list.begin(), list.end());
  return list;
}

std::optional<MipWitness> find_mip_failure(const Spectrum& spec) {
  const IdealLattice& L = *spec.lattice();
  const auto imk = image_of_kernel(spec);
  for (auto ia = imk.rbegin(); ia != imk.rend(); ++ia) {
    for (auto ib = imk.rbegin(); ib != imk.rend(); ++ib) {
      const std::size_t m = L.meet_index(*ia, *ib);
      for (std::size_t s = 0; s < spec.size(); ++s) {
        const std::size_t si = spec.lattice_index(s);
        if (L.leq(m, si) && !L.leq(*ia, si) && !L.leq(*ib, si)) return MipWitness{*ia, *ib, s};
      }
    }
  }
  return std::nullopt;
}

VerdictReport check_mip(const Spectrum& spec) {
  VerdictReport r;
  r.id = "mip";
  r.anchor = "a∩b ⊆ s implies a ⊆ s or b ⊆ s for a, b in im(k), s in X";
  r.ring = spec.ring()->label();
  r.kind = std::string(kind_name(spec.kind()));
  if (auto w = find_mip_failure(spec)) {
    const IdealLattice& L = *spec.lattice();
    r.status = Status::fails;
    r.witness = {{"a", ideal_json(L[w->a])}, {"b", ideal_json(L[w->b])}, {"s", ideal_json(spec.point(w->s))}};
  } else {
    r.status = Status::holds;
  }
  return r;
}

std::size_t x_radical(const Spectrum& spec, std::size_t lattice_index) {
  return spec.kernel(spec.hull(lattice_index));
}

Ideal x_radical(const Spectrum& spec, const Ideal& a) {
  return (*spec.lattice())[x_radical(spec, spec.lattice()->index_of(a))];
}

std::optional<std::size_t> partition_of_unity_violation(const Spectrum& spec) {
  const IdealLattice& L = *spec.lattice();
  for (std::size_t i = L.unit_index(); i-- > 0;)
    if (spec.hull(i).empty()) return i;
  return std::nullopt;
}

bool has_partition_of_unity(const Spectrum& spec) { return !partition_of_unity_violation(spec); }

bool contains_all_maximal(const Spectrum& spec) {
  const IdealLattice& L = *spec.lattice();
  for (std::size_t i = 0; i < L.unit_index(); ++i)
    if (classify(L, i, SpectrumKind::Max) && !spec.point_of(i)) return false;
  return true;
}

VerdictReport check_contraction_property(const Spectrum& source, const Spectrum& target,
                                         const RingHom& f) {
  if (source.ring() != f.source() || target.ring() != f.target())
    throw Error(ErrorKind::MixedRings, "spectra do not match the hom");
  VerdictReport r;
  r.id = "contraction";
  r.anchor = "f^{-1}(b) lies in X(R) whenever b lies in X(R')";
  r.ring = f.source()->label() + " -> " + f.target()->label();
  r.kind = std::string(kind_name(source.kind()));
  if (target.empty()) {
    r.status = Status::vacuous;
    r.notes = "target spectrum is empty";
    return r;
  }
  const IdealLattice& L = *source.lattice();
  for (std::size_t p = 0; p < target.size(); ++p) {
    const Ideal c = contraction(f, target.point(p));
    const std::size_t ci = L.index_of(c);
    if (!source.point_of(ci)) {
      r.status = Status::fails;
      r.witness = {{"b", ideal_json(target.point(p))}, {"preimage", ideal_json(c)}};
      return r;
    }
  }
  r.status = Status::holds;
  return r;
}

VerdictReport check_contraction_property(SpectrumKind kind, const RingHom& f, const Limits& limits) {
  const Spectrum source(enumerate_ideals(f.source(), limits), kind);
  const Spectrum target(enumerate_ideals(f.target(), limits), kind);
  return check_contraction_property(source, target, f);
}

}  // namespace idealspace
