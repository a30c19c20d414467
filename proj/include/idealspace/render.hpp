#ifndef IDEALSPACE_RENDER_HPP
#define IDEALSPACE_RENDER_HPP

#include <string>

#include <json.hpp>

#include "idealspace/ideal.hpp"

namespace idealspace {

/// "<2>" (ascii) or "⟨2⟩", listing generators_of(a).
std::string ideal_label(const Ideal& a, bool ascii = true);

/// {"name": "<2>", "elements": ["0", "2", ...]}
nlohmann::json ideal_json(const Ideal& a);

}  // namespace idealspace

#endif  // IDEALSPACE_RENDER_HPP
