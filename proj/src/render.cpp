#include "idealspace/render.hpp"

namespace idealspace {

std::string ideal_label(const Ideal& a, bool ascii) {
  const FiniteRing& r = *a.ring();
  std::string s = ascii ? "<" : "⟨";
  const auto gens = generators_of(a);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ",";
    s += r.name(gens[i]);
  }
  s += ascii ? ">" : "⟩";
  return s;
}

nlohmann::json ideal_json(const Ideal& a) {
  nlohmann::json elems = nlohmann::json::array();
  a.members().for_each([&](std::size_t x) { elems.push_back(a.ring()->name(static_cast<Element>(x))); });
  return {{"name", ideal_label(a, true)}, {"elements", std::move(elems)}};
}

}  // namespace idealspace
