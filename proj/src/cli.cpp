#include "idealspace/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "idealspace/hom.hpp"
#include "idealspace/render.hpp"
#include "idealspace/ring_expr.hpp"
#include "idealspace/spectrum.hpp"
#include "idealspace/topology.hpp"
#include "idealspace/verifier.hpp"

namespace idealspace::cli {

namespace {

using json = nlohmann::json;

struct Options {
  std::vector<std::string> rings;
  std::vector<std::string> kinds;
  std::string check;
  std::string props;
  std::string format = "text";
  std::string family = "zn:2..40";
  std::string out;
  int jobs = 0;
  std::size_t max_ideals = Limits{}.max_ideals;
  std::size_t max_closed_sets = Limits{}.max_closed_sets;
  bool ascii = false;
  bool timing = false;
  bool list = false;
};

// Display width of UTF-8 text, one column per code point.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> w;
    for (const auto& row : rows_) {
      if (w.size() < row.size()) w.resize(row.size(), 0);
      for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], width(row[i]));
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line += std::string(w[i] - width(row[i]) + 2, ' ');
      }
      os << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

// Angle brackets of ideal names become ⟨ ⟩ unless ascii output is asked for.
std::string pretty(std::string s, bool ascii) {
  if (ascii) return s;
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '<') {
      out += "⟨";
    } else if (s[i] == '>' && (i == 0 || s[i - 1] != '-')) {
      out += "⟩";
    } else {
      out += s[i];
    }
  }
  return out;
}

// Ideal objects collapse to their names for text output.
json compact(const json& j) {
  if (j.is_object() && j.contains("name") && j.contains("elements")) return j["name"];
  if (j.is_object() || j.is_array()) {
    json out = j;
    for (auto it = out.begin(); it != out.end(); ++it) *it = compact(*it);
    return out;
  }
  return j;
}

std::string witness_text(const json& w, bool ascii) { return w.empty() ? "" : pretty(compact(w).dump(), ascii); }

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<SpectrumKind> resolve_kinds(const std::vector<std::string>& args) {
  std::vector<SpectrumKind> out;
  for (const auto& arg : args)
    for (const auto& tag : split(arg, ',')) {
      if (tag == "all") {
        out.assign(kAllKinds.begin(), kAllKinds.end());
        return out;
      }
      const SpectrumKind k = parse_kind(tag);
      if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    }
  if (out.empty()) out.assign(kAllKinds.begin(), kAllKinds.end());
  return out;
}

std::vector<std::string> resolve_checks(const std::string& arg) {
  std::vector<std::string> out;
  for (const auto& id : split(arg, ',')) {
    if (id == "all") return {};
    out.emplace_back(find_check(id).id);
  }
  return out;
}

Limits limits_of(const Options& o) {
  Limits l;
  l.max_ideals = o.max_ideals;
  l.max_closed_sets = o.max_closed_sets;
  return l;
}

std::vector<RingPtr> parse_rings(const Options& o) {
  if (o.rings.empty()) throw Error(ErrorKind::ParseError, "--ring is required");
  std::vector<RingPtr> rings;
  for (const auto& e : o.rings) rings.push_back(parse_ring_expression(e, limits_of(o)));
  return rings;
}

std::string elements_text(const FiniteRing& r, std::vector<Element> xs) {
  std::vector<std::string> names;
  for (Element x : xs) names.push_back(r.name(x));
  return join(names, " ");
}

int cmd_ring(const Options& o, std::ostream& os) {
  for (const RingPtr& ring : parse_rings(o)) {
    const FiniteRing& r = *ring;
    std::vector<Element> all, units, idem, nil;
    for (Element x = 0; x < r.size(); ++x) {
      all.push_back(x);
      if (r.is_unit(x)) units.push_back(x);
      if (r.is_idempotent(x)) idem.push_back(x);
      if (r.is_nilpotent(x)) nil.push_back(x);
    }
    const auto lattice = enumerate_ideals(ring, limits_of(o));
    const Ideal j = jacobson_radical(ring);
    const bool regular = is_von_neumann_regular(r);
    if (o.format == "json") {
      auto names = [&](const std::vector<Element>& xs) {
        json a = json::array();
        for (Element x : xs) a.push_back(r.name(x));
        return a;
      };
      os << json{{"ring", r.label()},     {"size", r.size()},          {"elements", names(all)},
                 {"units", names(units)}, {"idempotents", names(idem)}, {"nilpotents", names(nil)},
                 {"jacobson", ideal_label(j)}, {"regular", regular},     {"ideals", lattice->size()}}
                .dump()
         << '\n';
    } else {
      Table t({"ring", r.label()});
      t.add({"size", std::to_string(r.size())});
      t.add({"elements", elements_text(r, all)});
      t.add({"units", elements_text(r, units)});
      t.add({"idempotents", elements_text(r, idem)});
      t.add({"nilpotents", elements_text(r, nil)});
      t.add({"jacobson", ideal_label(j, o.ascii)});
      t.add({"regular", regular ? "yes" : "no"});
      t.add({"ideals", std::to_string(lattice->size())});
      t.print(os);
    }
  }
  return kOk;
}

int cmd_ideals(const Options& o, std::ostream& os) {
  for (const RingPtr& ring : parse_rings(o)) {
    const auto lattice = enumerate_ideals(ring, limits_of(o));
    const IdealLattice& L = *lattice;
    Table t({"#", "ideal", "size", "kinds"});
    for (std::size_t i = 0; i < L.size(); ++i) {
      std::vector<std::string> kinds;
      for (SpectrumKind k : kAllKinds)
        if (i != L.unit_index() && classify(L, i, k)) kinds.emplace_back(kind_name(k));
      if (o.format == "json") {
        json rec = ideal_json(L[i]);
        rec["ring"] = ring->label();
        rec["index"] = i;
        rec["kinds"] = kinds;
        os << rec.dump() << '\n';
      } else {
        t.add({std::to_string(i), ideal_label(L[i], o.ascii), std::to_string(L[i].size()), join(kinds, " ")});
      }
    }
    if (o.format != "json") {
      os << ring->label() << ": " << L.size() << " ideals\n";
      t.print(os);
    }
  }
  return kOk;
}

int cmd_spectrum(const Options& o, std::ostream& os) {
  const auto kinds = resolve_kinds(o.kinds);
  for (const RingPtr& ring : parse_rings(o)) {
    const auto lattice = enumerate_ideals(ring, limits_of(o));
    Table t({"kind", "points", "members"});
    for (SpectrumKind k : kinds) {
      const Spectrum spec(lattice, k);
      std::vector<std::string> names;
      for (std::size_t p = 0; p < spec.size(); ++p) names.push_back(ideal_label(spec.point(p), o.ascii || o.format == "json"));
      if (o.format == "json") {
        os << json{{"ring", ring->label()}, {"kind", kind_name(k)}, {"points", names}}.dump() << '\n';
      } else {
        t.add({std::string(kind_name(k)), std::to_string(spec.size()), join(names, " ")});
      }
    }
    if (o.format != "json") {
      os << ring->label() << '\n';
      t.print(os);
    }
  }
  return kOk;
}

const std::vector<std::string>& all_props() {
  static const std::vector<std::string> props = {"t0",           "t1",           "sober",
                                                 "connected",    "quasi_compact", "strong_subbase",
                                                 "strong_base"};
  return props;
}

VerdictReport run_prop(const std::string& prop, const TopologySpace& t) {
  if (prop == "t0") return is_T0(t);
  if (prop == "t1") return is_T1(t);
  if (prop == "sober") return is_sober(t);
  if (prop == "connected") return is_connected(t);
  if (prop == "quasi_compact") return is_quasi_compact(t);
  if (prop == "strong_subbase") return strongly_disconnects(t, Family::subbase);
  return strongly_disconnects(t, Family::base);
}

std::string verdict_word(Status s) {
  switch (s) {
    case Status::holds: return "yes";
    case Status::fails: return "no";
    case Status::vacuous: return "vacuous";
    case Status::error: return "error";
  }
  return "error";
}

int cmd_topology(const Options& o, std::ostream& os) {
  std::vector<std::string> props = o.props.empty() ? all_props() : split(o.props, ',');
  for (const auto& p : props)
    if (std::find(all_props().begin(), all_props().end(), p) == all_props().end())
      throw Error(ErrorKind::UnknownName, "unknown property '" + p + "'");
  const auto kinds = resolve_kinds(o.kinds);
  const Limits limits = limits_of(o);
  for (const RingPtr& ring : parse_rings(o)) {
    const auto lattice = enumerate_ideals(ring, limits);
    for (SpectrumKind k : kinds) {
      const Spectrum spec(lattice, k);
      const TopologySpace t = generate_topology(spec, limits);
      if (o.format == "json") {
        for (const auto& p : props) os << json(run_prop(p, t)).dump() << '\n';
        continue;
      }
      os << kind_name(k) << '(' << ring->label() << "): " << t.size() << " points, " << t.closed_family().size()
         << " closed sets\n";
      Table tab({"property", "value", "witness"});
      for (const auto& p : props) {
        const VerdictReport r = run_prop(p, t);
        tab.add({p, verdict_word(r.status), r.witness.empty() ? r.notes : witness_text(r.witness, o.ascii)});
      }
      tab.print(os);
    }
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& os) {
  if (o.list) {
    os << "| id | statement | form |\n|---|---|---|\n";
    for (const auto& c : check_registry())
      os << "| " << c.id << " | " << c.anchor << " | " << (c.theorem_form ? "theorem" : "counterexample") << " |\n";
    return kOk;
  }
  SuiteConfig cfg;
  cfg.kinds = resolve_kinds(o.kinds);
  cfg.checks = resolve_checks(o.check);
  cfg.limits = limits_of(o);
  cfg.jobs = o.jobs;
  cfg.timing = o.timing;
  if (o.rings.empty()) {
    cfg.rings = default_suite();
  } else {
    for (const auto& e : o.rings) parse_ring_expression(e, cfg.limits);
    cfg.rings = o.rings;
  }
  const auto reports = run_suite(cfg);

  bool failed = false, capped = false;
  std::map<Status, std::size_t> counts;
  for (const auto& r : reports) {
    failed = failed || is_theorem_failure(r);
    capped = capped || r.status == Status::error;
    ++counts[r.status];
  }
  if (o.format == "json") {
    for (const auto& r : reports) os << json(r).dump() << '\n';
  } else {
    Table t({"id", "ring", "kind", "status", "witness"});
    for (const auto& r : reports) {
      std::string w = witness_text(r.witness, o.ascii);
      if (!r.notes.empty()) w += (w.empty() ? "" : "  ") + ("(" + r.notes + ")");
      std::string status(to_string(r.status));
      if (o.timing) status += " " + std::to_string(r.runtime_ms) + "ms";
      t.add({r.id, r.ring, r.kind, status, w});
    }
    t.print(os);
    os << reports.size() << " reports: " << counts[Status::holds] << " holds, " << counts[Status::fails]
       << " fails, " << counts[Status::vacuous] << " vacuous, " << counts[Status::error] << " error\n";
  }
  if (failed) return kTheoremFailed;
  return capped ? kCapExceeded : kOk;
}

int cmd_search(const Options& o, std::ostream& os, std::ostream& err) {
  if (o.check.empty() || o.check == "all") throw Error(ErrorKind::ParseError, "search needs a single --check ID");
  const std::string id(find_check(o.check).id);
  const auto kinds = resolve_kinds(o.kinds);
  expand_family(o.family);
  const auto result = search_counterexamples(id, o.family, kinds, limits_of(o), o.jobs);
  if (o.format == "json") {
    for (const auto& h : result.hits) os << json(h.report).dump() << '\n';
  } else {
    Table t({"points", "ring", "kind", "witness"});
    for (const auto& h : result.hits)
      t.add({std::to_string(h.points), h.ring, std::string(kind_name(h.kind)), witness_text(h.report.witness, o.ascii)});
    t.print(os);
    os << result.hits.size() << " hits\n";
  }
  for (const auto& e : result.errors) err << e.ring << ' ' << e.kind << ": " << e.notes << '\n';
  return result.errors.empty() ? kOk : kCapExceeded;
}

}  // namespace

int execute(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite ring ideal spaces: enumeration, topology and verification", "idealspace"};
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--ring", o.rings, "ring expression, e.g. Z12, Z2xZ2xZ2, Z12/(4), Z12@(2)");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-ideals", o.max_ideals, "cap on ideals per ring");
    sub->add_option("--max-closed-sets", o.max_closed_sets, "cap on closed sets per topology");
    sub->add_flag("--ascii", o.ascii, "render ideals as <g> instead of ⟨g⟩");
    sub->add_option("--out", o.out, "write output to this file");
  };
  auto kinds = [&](CLI::App* sub) { sub->add_option("--kind", o.kinds, "spectrum kind tag or all (repeatable)"); };

  auto* ring = app.add_subcommand("ring", "ring summary");
  common(ring);
  auto* ideals = app.add_subcommand("ideals", "ideal lattice with kind membership");
  common(ideals);
  auto* spectrum = app.add_subcommand("spectrum", "spectrum points per kind");
  common(spectrum);
  kinds(spectrum);
  auto* topology = app.add_subcommand("topology", "topological properties of ideal spaces");
  common(topology);
  kinds(topology);
  topology->add_option("--props", o.props, "comma list of t0,t1,sober,connected,quasi_compact,strong_subbase,strong_base");
  auto* verify = app.add_subcommand("verify", "run the check registry over rings and kinds");
  common(verify);
  kinds(verify);
  verify->add_option("--check", o.check, "check id, comma list or all");
  verify->add_option("--jobs", o.jobs, "parallel width");
  verify->add_flag("--timing", o.timing, "record runtime_ms");
  verify->add_flag("--list", o.list, "print the check registry as a table");
  auto* search = app.add_subcommand("search", "counterexample search over a ring family");
  common(search);
  kinds(search);
  search->add_option("--check", o.check, "check id")->required();
  search->add_option("--family", o.family, "zn:A..B, fields:A..B, prod:A..B or list:E1;E2");
  search->add_option("--jobs", o.jobs, "parallel width");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      err << "cannot open " << o.out << '\n';
      return kUsage;
    }
  }
  std::ostream& os = o.out.empty() ? out : file;

  try {
    if (ring->parsed()) return cmd_ring(o, os);
    if (ideals->parsed()) return cmd_ideals(o, os);
    if (spectrum->parsed()) return cmd_spectrum(o, os);
    if (topology->parsed()) return cmd_topology(o, os);
    if (verify->parsed()) return cmd_verify(o, os);
    return cmd_search(o, os, err);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.kind() == ErrorKind::CapExceeded ? kCapExceeded : kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace idealspace::cli
