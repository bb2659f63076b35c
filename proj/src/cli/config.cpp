#include "qsl/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qsl/errors.hpp"

namespace qsl::cli {

namespace {

using nlohmann::json;

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

[[noreturn]] void field_error(std::string_view field, const std::string& detail) {
  throw InputError(std::string(field) + ": " + detail);
}

void require(bool ok, std::string_view field, double value, std::string_view constraint) {
  if (!ok) {
    std::ostringstream msg;
    msg.precision(17);
    msg << value << " violates " << constraint;
    field_error(field, msg.str());
  }
}

void require_present(const std::optional<double>& v, std::string_view field, std::string_view axis) {
  if (!v) field_error(field, "required when sweeping " + std::string(axis));
}

void require_absent(const std::optional<double>& v, std::string_view field, std::string_view reason) {
  if (v) field_error(field, std::string(reason));
}

double number(const json& value, std::string_view field) {
  if (!value.is_number()) field_error(field, "expected a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) field_error(field, "expected a finite number");
  return x;
}

std::string text(const json& value, std::string_view field) {
  if (!value.is_string()) field_error(field, "expected a string");
  return value.get<std::string>();
}

}  // namespace

std::string_view to_string(Axis axis) noexcept {
  switch (axis) {
    case Axis::temperature: return "temperature";
    case Axis::p_tau: return "p_tau";
    case Axis::concurrence: return "concurrence";
    case Axis::alpha: return "alpha";
  }
  return "?";
}

Axis parse_axis(std::string_view value) {
  const std::string t = lowercase(value);
  for (Axis a : {Axis::temperature, Axis::p_tau, Axis::concurrence, Axis::alpha}) {
    if (t == to_string(a)) return a;
  }
  field_error("axis", "'" + std::string(value) + "' is not one of temperature, p_tau, concurrence, alpha");
}

std::string_view to_string(OutputFormat format) noexcept { return format == OutputFormat::csv ? "csv" : "json"; }

OutputFormat parse_format(std::string_view value) {
  const std::string t = lowercase(value);
  if (t == "csv") return OutputFormat::csv;
  if (t == "json") return OutputFormat::json;
  field_error("format", "'" + std::string(value) + "' is not one of csv, json");
}

std::string_view to_string(FigureId id) noexcept {
  switch (id) {
    case FigureId::fig1: return "fig1";
    case FigureId::fig2: return "fig2";
    case FigureId::fig3: return "fig3";
    case FigureId::fig4: return "fig4";
    case FigureId::fig5: return "fig5";
    case FigureId::fig6: return "fig6";
  }
  return "?";
}

FigureId parse_figure_id(std::string_view value) {
  const std::string t = lowercase(value);
  for (FigureId id : {FigureId::fig1, FigureId::fig2, FigureId::fig3, FigureId::fig4, FigureId::fig5, FigureId::fig6}) {
    if (t == to_string(id)) return id;
  }
  field_error("figure", "'" + std::string(value) + "' is not one of fig1 .. fig6");
}

std::optional<double> SweepConfig::effective_temperature() const {
  if (temperature) return temperature;
  if (mass) return hawking_temperature(*mass);
  return std::nullopt;
}

std::pair<double, double> SweepConfig::range() const {
  double default_hi = 1.0;
  if (axis == Axis::concurrence) {
    const auto t = effective_temperature();
    default_hi = t ? max_concurrence(omega, *t) : 0.0;
  }
  return {lo.value_or(0.0), hi.value_or(default_hi)};
}

void SweepConfig::validate() const {
  const std::string_view axis_name = to_string(axis);
  require(omega > 0.0, "omega", omega, "omega > 0");
  require(count >= 2, "count", count, "count >= 2");
  if (axis == Axis::temperature && (!lo || !hi)) field_error("range", "required when sweeping temperature");
  if (lo.has_value() != hi.has_value()) field_error("range", "needs both lo and hi");

  if (temperature) require(*temperature >= 0.0, "temperature", *temperature, "T >= 0");
  if (mass) require(*mass > 0.0, "mass", *mass, "M > 0");
  if (temperature && mass) {
    const double implied = hawking_temperature(*mass);
    if (std::abs(implied - *temperature) > 1e-12 * *temperature) {
      field_error("mass", "inconsistent with temperature (T = 1/(8 pi M))");
    }
  }
  if (alpha) require(*alpha >= 0.0 && *alpha <= 1.0, "alpha", *alpha, "[0, 1]");
  if (p_tau) require(*p_tau >= 0.0 && *p_tau <= 1.0, "p_tau", *p_tau, "[0, 1]");
  if (alpha && concurrence) field_error("concurrence", "give either alpha or concurrence, not both");

  switch (axis) {
    case Axis::temperature:
      require_absent(temperature, "temperature", "is the sweep axis");
      require_absent(mass, "mass", "cannot be fixed while sweeping temperature");
      require_absent(concurrence, "concurrence", "depends on temperature; fix alpha instead");
      require_present(alpha, "alpha", axis_name);
      require_present(p_tau, "p_tau", axis_name);
      break;
    case Axis::p_tau:
      require_absent(p_tau, "p_tau", "is the sweep axis");
      if (!effective_temperature()) field_error("temperature", "required when sweeping p_tau");
      if (!alpha && !concurrence) field_error("alpha", "alpha or concurrence is required when sweeping p_tau");
      break;
    case Axis::concurrence:
      require_absent(concurrence, "concurrence", "is the sweep axis");
      require_absent(alpha, "alpha", "is determined by the concurrence axis");
      if (!effective_temperature()) field_error("temperature", "required when sweeping concurrence");
      require_present(p_tau, "p_tau", axis_name);
      break;
    case Axis::alpha:
      require_absent(alpha, "alpha", "is the sweep axis");
      require_absent(concurrence, "concurrence", "is determined by the alpha axis");
      if (!effective_temperature()) field_error("temperature", "required when sweeping alpha");
      require_present(p_tau, "p_tau", axis_name);
      break;
  }

  const auto [r_lo, r_hi] = range();
  require(r_lo < r_hi, "range", r_hi, "lo < hi");
  switch (axis) {
    case Axis::temperature: require(r_lo >= 0.0, "range", r_lo, "T >= 0"); break;
    case Axis::p_tau: require(r_lo >= 0.0 && r_hi <= 1.0, "range", r_lo < 0.0 ? r_lo : r_hi, "[0, 1]"); break;
    case Axis::alpha: require(r_lo >= 0.0 && r_hi <= 1.0, "range", r_lo < 0.0 ? r_lo : r_hi, "[0, 1]"); break;
    case Axis::concurrence: {
      const double c_max = max_concurrence(omega, *effective_temperature());
      require(r_lo >= 0.0 && r_hi <= c_max * (1.0 + 1e-12), "range", r_lo < 0.0 ? r_lo : r_hi, "[0, c_max]");
      break;
    }
  }
  if (concurrence) {
    const double c_max = max_concurrence(omega, *effective_temperature());
    require(*concurrence >= 0.0 && *concurrence <= c_max * (1.0 + 1e-12), "concurrence", *concurrence, "[0, c_max]");
  }
}

ParsedConfig parse_config(std::string_view source) {
  json doc;
  try {
    doc = json::parse(source.begin(), source.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("config syntax error: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("config: top level must be a JSON object");

  if (doc.contains("figure")) {
    static const std::set<std::string> allowed = {"figure", "output"};
    for (const auto& [key, value] : doc.items()) {
      if (!allowed.count(key)) field_error(key, "unknown key for a figure config");
    }
    FigureRequest request{parse_figure_id(text(doc["figure"], "figure"))};
    if (doc.contains("output")) request.output = text(doc["output"], "output");
    return request;
  }

  static const std::set<std::string> allowed = {"channel", "axis",  "range", "count",       "omega",
                                                "temperature", "mass", "alpha", "concurrence", "p_tau",
                                                "branch",  "output", "format"};
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.count(key)) field_error(key, "unknown key");
  }

  SweepConfig c;
  if (!doc.contains("channel")) field_error("channel", "required");
  if (!doc.contains("axis")) field_error("axis", "required");
  try {
    c.channel = parse_channel_kind(text(doc["channel"], "channel"));
  } catch (const InputError& e) {
    field_error("channel", e.what());
  }
  c.axis = parse_axis(text(doc["axis"], "axis"));
  if (doc.contains("range")) {
    const json& r = doc["range"];
    if (!r.is_array() || r.size() != 2) field_error("range", "expected [lo, hi]");
    c.lo = number(r[0], "range");
    c.hi = number(r[1], "range");
  }
  if (doc.contains("count")) {
    const json& v = doc["count"];
    if (!v.is_number_integer()) field_error("count", "expected an integer");
    c.count = v.get<int>();
  }
  if (doc.contains("omega")) c.omega = number(doc["omega"], "omega");
  auto optional_number = [&](const char* key, std::optional<double>& slot) {
    if (doc.contains(key)) slot = number(doc[key], key);
  };
  optional_number("temperature", c.temperature);
  optional_number("mass", c.mass);
  optional_number("alpha", c.alpha);
  optional_number("concurrence", c.concurrence);
  optional_number("p_tau", c.p_tau);
  if (doc.contains("branch")) {
    try {
      c.branch = parse_branch(text(doc["branch"], "branch"));
    } catch (const InputError& e) {
      field_error("branch", e.what());
    }
  }
  if (doc.contains("output")) c.output = text(doc["output"], "output");
  if (doc.contains("format")) c.format = parse_format(text(doc["format"], "format"));
  c.validate();
  return c;
}

std::string serialize_config(const ParsedConfig& config) {
  json doc = json::object();
  if (const auto* figure = std::get_if<FigureRequest>(&config)) {
    doc["figure"] = std::string(to_string(figure->id));
    doc["output"] = figure->output;
    return doc.dump(2) + "\n";
  }
  const auto& c = std::get<SweepConfig>(config);
  doc["channel"] = std::string(to_string(c.channel));
  doc["axis"] = std::string(to_string(c.axis));
  if (c.lo && c.hi) doc["range"] = {*c.lo, *c.hi};
  doc["count"] = c.count;
  doc["omega"] = c.omega;
  auto put = [&](const char* key, const std::optional<double>& v) {
    if (v) doc[key] = *v;
  };
  put("temperature", c.temperature);
  put("mass", c.mass);
  put("alpha", c.alpha);
  put("concurrence", c.concurrence);
  put("p_tau", c.p_tau);
  doc["branch"] = std::string(to_string(c.branch));
  if (!c.output.empty()) doc["output"] = c.output;
  doc["format"] = std::string(to_string(c.format));
  return doc.dump(2) + "\n";
}

}  // namespace qsl::cli
