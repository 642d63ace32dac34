#include "vibqubit/config.hpp"

#include <cmath>
#include <set>

#include "json.hpp"

namespace vibq::cli {

using nlohmann::json;

const char* to_string(Mode m) {
  switch (m) {
    case Mode::evolve: return "evolve";
    case Mode::qubit: return "qubit";
    case Mode::cat: return "cat";
    case Mode::scan: return "scan";
    case Mode::validate: return "validate";
  }
  return "?";
}

std::optional<Mode> mode_from_string(std::string_view s) {
  for (Mode m : {Mode::evolve, Mode::qubit, Mode::cat, Mode::scan, Mode::validate}) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

namespace {

const std::set<std::string> kKeys = {
    "mode",      "nu",        "omega",         "eta",           "delta",
    "times",     "t_min",     "t_max",         "t_steps",       "dim",
    "guard",     "seed",      "output",        "format",        "pipeline",
    "outcome",   "scan_eta",  "scan_omega",    "threads",       "wigner_extent",
    "wigner_points",          "wigner_projection"};

double number(const json& doc, const std::string& key, double fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (!v.is_number()) throw ConfigError(key, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(key, "must be finite");
  return x;
}

long long integer(const json& doc, const std::string& key, long long fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (!v.is_number_integer()) throw ConfigError(key, "expected an integer");
  return v.get<long long>();
}

std::string text(const json& doc, const std::string& key, const std::string& fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (!v.is_string()) throw ConfigError(key, "expected a string");
  return v.get<std::string>();
}

std::vector<double> grid(const json& doc, const std::string& key,
                         std::vector<double> fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (!v.is_array() || v.empty()) throw ConfigError(key, "expected a nonempty array of numbers");
  std::vector<double> out;
  for (const json& x : v) {
    if (!x.is_number()) throw ConfigError(key, "expected a nonempty array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

void require_increasing(const std::vector<double>& g, const std::string& key) {
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (!(g[i] > g[i - 1])) throw ConfigError(key, "grid must be strictly increasing");
  }
}

std::vector<double> time_grid(const json& doc) {
  const bool explicit_times = doc.contains("times");
  const bool ranged = doc.contains("t_min") || doc.contains("t_max") || doc.contains("t_steps");
  if (explicit_times && ranged) {
    throw ConfigError("times", "give either 'times' or 't_min'/'t_max'/'t_steps', not both");
  }
  if (explicit_times) return grid(doc, "times", {});
  const double t_min = number(doc, "t_min", 0.0);
  const double t_max = number(doc, "t_max", 10.0);
  const long long steps = integer(doc, "t_steps", 11);
  if (steps < 1) throw ConfigError("t_steps", "must be >= 1");
  if (steps == 1) return {t_min};
  if (!(t_max > t_min)) throw ConfigError("t_max", "must exceed t_min");
  std::vector<double> out;
  for (long long k = 0; k < steps; ++k) {
    out.push_back(t_min + (t_max - t_min) * static_cast<double>(k) / static_cast<double>(steps - 1));
  }
  return out;
}

}  // namespace

RunConfig parse_config(std::string_view source) {
  json doc;
  try {
    doc = json::parse(source);
  } catch (const json::parse_error& e) {
    throw ConfigError("<document>", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("<document>", "expected a flat JSON object");
  for (const auto& item : doc.items()) {
    if (!kKeys.count(item.key())) throw ConfigError(item.key(), "unknown key");
    if (item.value().is_object()) throw ConfigError(item.key(), "nested objects are not allowed");
  }

  RunConfig cfg;
  if (!doc.contains("mode")) throw ConfigError("mode", "required");
  const auto mode = mode_from_string(text(doc, "mode", ""));
  if (!mode) throw ConfigError("mode", "expected one of evolve, qubit, cat, scan, validate");
  cfg.mode = *mode;

  cfg.params.nu = number(doc, "nu", 1.0);
  cfg.params.omega = number(doc, "omega", 2.0);
  cfg.params.eta = number(doc, "eta", 0.3);
  cfg.params.delta = number(doc, "delta", 0.0);
  if (!(cfg.params.nu > 0.0)) throw ConfigError("nu", "must be > 0");
  if (!(cfg.params.omega >= 0.0)) throw ConfigError("omega", "must be >= 0");
  if (!(cfg.params.eta >= 0.0)) throw ConfigError("eta", "must be >= 0");

  const long long dim = integer(doc, "dim", 64);
  if (dim < 16 || dim > 1024) throw ConfigError("dim", "must lie in [16, 1024]");
  cfg.dim = static_cast<int>(dim);
  const long long guard = integer(doc, "guard", kDefaultGuard);
  if (guard < 4 || guard > dim / 4) throw ConfigError("guard", "must lie in [4, dim/4]");
  cfg.guard = static_cast<int>(guard);

  if (doc.contains("seed")) {
    const long long seed = integer(doc, "seed", 0);
    if (seed < 0) throw ConfigError("seed", "must be >= 0");
    cfg.seed = static_cast<std::uint64_t>(seed);
  }
  cfg.output = text(doc, "output", "");

  const std::string format = text(doc, "format", "csv");
  if (format == "csv") cfg.format = Format::csv;
  else if (format == "json") cfg.format = Format::json;
  else throw ConfigError("format", "expected csv or json");

  const std::string pipeline = text(doc, "pipeline", "exact");
  if (pipeline == "exact") cfg.pipeline = Pipeline::exact;
  else if (pipeline == "analytic") cfg.pipeline = Pipeline::analytic;
  else if (pipeline == "closed_form") cfg.pipeline = Pipeline::closed_form;
  else throw ConfigError("pipeline", "expected exact, analytic or closed_form");
  if (cfg.pipeline == Pipeline::closed_form && cfg.mode != Mode::qubit) {
    throw ConfigError("pipeline", "closed_form is only available in qubit mode");
  }

  const std::string outcome = text(doc, "outcome", "e");
  if (outcome == "e") cfg.outcome = OutcomeChoice::excited;
  else if (outcome == "g") cfg.outcome = OutcomeChoice::ground;
  else if (outcome == "sample") cfg.outcome = OutcomeChoice::sample;
  else throw ConfigError("outcome", "expected e, g or sample");
  if (cfg.outcome == OutcomeChoice::sample && cfg.mode == Mode::scan) {
    throw ConfigError("outcome", "scan uses a deterministic outcome (e or g)");
  }

  if (cfg.params.delta != 0.0 &&
      !(cfg.mode == Mode::evolve && cfg.pipeline == Pipeline::exact)) {
    throw ConfigError("delta", "nonzero detuning is only supported by evolve with the exact pipeline");
  }

  cfg.times = time_grid(doc);
  require_increasing(cfg.times, "times");
  for (double t : cfg.times) {
    if (!std::isfinite(t)) throw ConfigError("times", "must be finite");
  }

  cfg.scan_etas = grid(doc, "scan_eta", {0.05, 0.1, 0.2, 0.3});
  cfg.scan_omegas = grid(doc, "scan_omega", {cfg.params.omega});
  require_increasing(cfg.scan_etas, "scan_eta");
  require_increasing(cfg.scan_omegas, "scan_omega");
  for (double e : cfg.scan_etas) {
    if (!(e >= 0.0)) throw ConfigError("scan_eta", "values must be >= 0");
  }
  for (double o : cfg.scan_omegas) {
    if (!(o >= 0.0)) throw ConfigError("scan_omega", "values must be >= 0");
  }

  const long long threads = integer(doc, "threads", 0);
  if (threads < 0) throw ConfigError("threads", "must be >= 0");
  cfg.threads = static_cast<unsigned>(threads);

  cfg.wigner.extent = number(doc, "wigner_extent", 4.0);
  if (!(cfg.wigner.extent > 0.0)) throw ConfigError("wigner_extent", "must be > 0");
  const long long points = integer(doc, "wigner_points", 81);
  if (points < 2 || points > 1001) throw ConfigError("wigner_points", "must lie in [2, 1001]");
  cfg.wigner.points = static_cast<int>(points);

  const std::string projection = text(doc, "wigner_projection", "plus");
  if (projection == "e") cfg.wigner_projection = Projection::excited;
  else if (projection == "g") cfg.wigner_projection = Projection::ground;
  else if (projection == "plus") cfg.wigner_projection = Projection::plus;
  else if (projection == "minus") cfg.wigner_projection = Projection::minus;
  else throw ConfigError("wigner_projection", "expected e, g, plus or minus");

  return cfg;
}

}  // namespace vibq::cli
