#ifndef IDEALSPACE_VERDICT_HPP
#define IDEALSPACE_VERDICT_HPP

#include <string>
#include <string_view>

#include <json.hpp>

namespace idealspace {

/// `error` marks a suite item whose computation raised (for example a cap).
enum class Status { holds, fails, vacuous, error };

std::string_view to_string(Status status);
/// Throws UnknownName.
Status parse_status(std::string_view text);

/// Outcome of one check on one (ring, kind) instance.
struct VerdictReport {
  std::string id;
  std::string anchor;
  std::string ring;
  std::string kind;
  Status status = Status::vacuous;
  nlohmann::json witness = nlohmann::json::object();
  std::string notes;
  double runtime_ms = 0.0;

  friend bool operator==(const VerdictReport&, const VerdictReport&) = default;
};

void to_json(nlohmann::json& j, const VerdictReport& r);
void from_json(const nlohmann::json& j, VerdictReport& r);

}  // namespace idealspace

#endif  // IDEALSPACE_VERDICT_HPP
