#include "lanesim/config.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "lanesim/errors.hpp"

namespace lanesim {

namespace {

std::string trim(const std::string& s) {
  const size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

/// Parsed file: "section.key" -> value, plus consumption tracking so unknown
/// keys can be reported with their path.
class KeyTable {
public:
  KeyTable(const std::string& text, std::string origin) : origin_(std::move(origin)) {
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']') {
          fail(Errc::SchemaError, origin_ + ":" + std::to_string(lineno) + ": unterminated section");
        }
        section = trim(line.substr(1, line.size() - 2));
        continue;
      }
      const size_t eq = line.find('=');
      if (eq == std::string::npos) {
        fail(Errc::SchemaError,
             origin_ + ":" + std::to_string(lineno) + ": expected key = value, got '" + line + "'");
      }
      const std::string key = section + "." + trim(line.substr(0, eq));
      values_[key] = trim(line.substr(eq + 1));
    }
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  std::string get(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end()) {
      fail(Errc::SchemaError, origin_ + ": missing required key '" + key + "'");
    }
    consumed_.insert(it->first);
    return it->second;
  }

  std::string get_or(const std::string& key, const std::string& fallback) {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    consumed_.insert(it->first);
    return it->second;
  }

  double number(const std::string& key) { return to_number(key, get(key)); }

  double number_or(const std::string& key, double fallback) {
    if (!has(key)) return fallback;
    return to_number(key, get(key));
  }

  void finish() const {
    for (const auto& [key, value] : values_) {
      if (consumed_.count(key) == 0) {
        fail(Errc::SchemaError, origin_ + ": unknown key '" + key + "'");
      }
    }
  }

  double to_number(const std::string& key, const std::string& v) const {
    try {
      size_t used = 0;
      const double x = std::stod(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      return x;
    } catch (const std::exception&) {
      fail(Errc::SchemaError, origin_ + ": key '" + key + "': not a number: '" + v + "'");
    }
  }

  const std::string& origin() const { return origin_; }

private:
  std::string origin_;
  std::map<std::string, std::string> values_;
  std::set<std::string> consumed_;
};

std::vector<double> number_list(KeyTable& t, const std::string& key, const std::string& raw) {
  std::vector<double> out;
  std::string item;
  std::istringstream ss(raw);
  while (ss >> item) {
    if (!item.empty() && item.back() == ',') item.pop_back();
    if (item.empty()) continue;
    out.push_back(t.to_number(key, item));
  }
  return out;
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
  KeyTable t(text, origin);
  RunConfig c;

  c.name = t.get_or("run.name", "run");
  const std::string boundary = t.get_or("grid.boundary", "zero_pad");
  BoundaryMode bmode;
  if (boundary == "zero_pad") {
    bmode = BoundaryMode::ZeroPad;
  } else if (boundary == "periodic") {
    bmode = BoundaryMode::Periodic;
  } else {
    fail(Errc::SchemaError, origin + ": grid.boundary must be zero_pad or periodic");
  }
  c.grid = build_grid(t.number("grid.x_min"), t.number("grid.x_max"), t.number("grid.dx"), bmode);
  c.t_end = t.number("time.t_end");

  const std::string cfl_mode = t.get_or("time.cfl_mode", "adaptive");
  if (cfl_mode == "adaptive") {
    c.cfl.mode = CflController::Mode::Adaptive;
  } else if (cfl_mode == "fixed") {
    c.cfl.mode = CflController::Mode::Fixed;
  } else {
    fail(Errc::SchemaError, origin + ": time.cfl_mode must be fixed or adaptive");
  }
  c.cfl.cfl_cap = t.number_or("time.cfl_cap", 0.5);
  c.cfl.fd_eps = t.number_or("time.fd_eps", 1e-6);

  const int count = static_cast<int>(t.number("lanes.count"));
  if (count < 1 || count > 64) {
    fail(Errc::SchemaError, origin + ": lanes.count must be in [1, 64]");
  }
  for (int j = 1; j <= count; ++j) {
    c.lanes.push_back(velocity_from_string(t.get("lanes.velocity_" + std::to_string(j))));
    c.initial.push_back(profile_from_string(t.get("lanes.initial_" + std::to_string(j))));
  }

  const std::string flux = t.get_or("flux.mode", "godunov");
  if (flux == "godunov") {
    c.flux.kind = FluxMode::Kind::LocalGodunov;
  } else if (flux == "nonlocal") {
    c.flux.kind = FluxMode::Kind::NonlocalDownstream;
    c.flux.kernel.family = kernel_family_from_name(t.get("flux.kernel"));
    c.flux.kernel.range = t.number("flux.range");
  } else {
    fail(Errc::SchemaError, origin + ": flux.mode must be godunov or nonlocal");
  }

  const std::string source = t.get_or("source.mode", "local");
  if (source == "local") {
    c.source.kind = SourceMode::Kind::Local;
  } else if (source == "nonlocal_forward" || source == "nonlocal_symmetric") {
    c.source.kind = source == "nonlocal_forward" ? SourceMode::Kind::NonlocalForward
                                                 : SourceMode::Kind::NonlocalSymmetric;
    c.source.kernel.family = kernel_family_from_name(t.get("source.kernel"));
    c.source.kernel.range = t.number("source.range");
  } else {
    fail(Errc::SchemaError, origin + ": source.mode must be local, nonlocal_forward or nonlocal_symmetric");
  }

  if (t.has("output.snapshot_times")) {
    c.snapshot_times = number_list(t, "output.snapshot_times", t.get("output.snapshot_times"));
  } else {
    c.snapshot_times = {c.t_end};
  }
  c.timeseries_stride = static_cast<int>(t.number_or("output.timeseries_stride", 1.0));

  t.finish();
  validate_config(c);
  return c;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(Errc::IoError, "cannot open config file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

std::string render_config(const RunConfig& c) {
  std::ostringstream os;
  os.precision(17);
  os << "[run]\nname = " << c.name << "\n\n";
  os << "[grid]\nx_min = " << c.grid.x_min << "\nx_max = " << c.grid.x_max
     << "\ndx = " << c.grid.dx << "\nboundary = "
     << (c.grid.periodic() ? "periodic" : "zero_pad") << "\n\n";
  os << "[time]\nt_end = " << c.t_end << "\ncfl_mode = "
     << (c.cfl.mode == CflController::Mode::Adaptive ? "adaptive" : "fixed")
     << "\ncfl_cap = " << c.cfl.cfl_cap << "\nfd_eps = " << c.cfl.fd_eps << "\n\n";
  os << "[lanes]\ncount = " << c.lanes.size() << "\n";
  for (size_t j = 0; j < c.lanes.size(); ++j) {
    os << "velocity_" << j + 1 << " = " << velocity_to_string(c.lanes[j]) << "\n";
    os << "initial_" << j + 1 << " = " << profile_to_string(c.initial[j]) << "\n";
  }
  os << "\n[flux]\nmode = " << (c.flux.nonlocal() ? "nonlocal" : "godunov") << "\n";
  if (c.flux.nonlocal()) {
    os << "kernel = " << kernel_family_name(c.flux.kernel.family) << "\nrange = "
       << c.flux.kernel.range << "\n";
  }
  os << "\n[source]\nmode = ";
  switch (c.source.kind) {
    case SourceMode::Kind::Local:
      os << "local\n";
      break;
    case SourceMode::Kind::NonlocalForward:
      os << "nonlocal_forward\n";
      break;
    case SourceMode::Kind::NonlocalSymmetric:
      os << "nonlocal_symmetric\n";
      break;
  }
  if (c.source.nonlocal()) {
    os << "kernel = " << kernel_family_name(c.source.kernel.family) << "\nrange = "
       << c.source.kernel.range << "\n";
  }
  os << "\n[output]\nsnapshot_times =";
  for (const double ts : c.snapshot_times) os << " " << ts;
  os << "\ntimeseries_stride = " << c.timeseries_stride << "\n";
  return os.str();
}

}  // namespace lanesim
