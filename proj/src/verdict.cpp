#include "idealspace/verdict.hpp"

#include "idealspace/error.hpp"

namespace idealspace {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::vacuous: return "vacuous";
    case Status::error: return "error";
  }
  return "error";
}

Status parse_status(std::string_view text) {
  if (text == "holds") return Status::holds;
  if (text == "fails") return Status::fails;
  if (text == "vacuous") return Status::vacuous;
  if (text == "error") return Status::error;
  throw Error(ErrorKind::UnknownName, "unknown status '" + std::string(text) + "'");
}

void to_json(nlohmann::json& j, const VerdictReport& r) {
  j = nlohmann::json{{"id", r.id},
                     {"anchor", r.anchor},
                     {"ring", r.ring},
                     {"kind", r.kind},
                     {"status", std::string(to_string(r.status))},
                     {"witness", r.witness},
                     {"notes", r.notes},
                     {"runtime_ms", r.runtime_ms}};
}

void from_json(const nlohmann::json& j, VerdictReport& r) {
  j.at("id").get_to(r.id);
  j.at("anchor").get_to(r.anchor);
  j.at("ring").get_to(r.ring);
  j.at("kind").get_to(r.kind);
  r.status = parse_status(j.at("status").get<std::string>());
  r.witness = j.at("witness");
  r.notes = j.value("notes", std::string{});
  r.runtime_ms = j.at("runtime_ms").get<double>();
}

}  // namespace idealspace
