#include "lanesim/profiles.hpp"

#include <array>
#include <cmath>
#include <map>
#include <sstream>

#include "lanesim/errors.hpp"

namespace lanesim {

namespace {

// 5-point Gauss-Legendre rule on [-1,1]
constexpr std::array<double, 5> kGlNodes = {
    -0.9061798459386639928, -0.5384693101056830910, 0.0, 0.5384693101056830910,
    0.9061798459386639928};
constexpr std::array<double, 5> kGlWeights = {
    0.2369268850561890875, 0.4786286704993664831, 0.5688888888888888889, 0.4786286704993664831,
    0.2369268850561890875};

double bump_q(double y) {
  if (y <= 0.0 || y >= 1.0) return 0.0;
  const double w = y * (1.0 - y);
  return 4.0 * w * w;
}

std::map<std::string, double> parse_kv(const std::string& text, const std::string& origin) {
  std::map<std::string, double> kv;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const size_t eq = item.find('=');
    if (eq == std::string::npos) {
      fail(Errc::SchemaError, origin + ": expected key=value, got '" + item + "'");
    }
    try {
      size_t used = 0;
      const double v = std::stod(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
      kv[item.substr(0, eq)] = v;
    } catch (const std::exception&) {
      fail(Errc::SchemaError, origin + ": bad number in '" + item + "'");
    }
  }
  return kv;
}

}  // namespace

double profile_value(const ProfileSpec& p, double x) {
  switch (p.kind) {
    case ProfileSpec::Kind::Constant:
      return p.value;
    case ProfileSpec::Kind::SinSq: {
      if (x < 0.0 || x > 2.0) return 0.0;
      const double s = std::sin(0.5 * M_PI * x);
      return s * s;
    }
    case ProfileSpec::Kind::BumpQ:
      return bump_q(p.scale * x + p.shift);
    case ProfileSpec::Kind::Riemann:
      return x < p.x0 ? p.left : p.right;
  }
  return 0.0;
}

std::vector<double> cell_averages(const ProfileSpec& p, const Grid1D& grid) {
  std::vector<double> avg(static_cast<size_t>(grid.n_cells));
  if (p.kind == ProfileSpec::Kind::Constant) {
    std::fill(avg.begin(), avg.end(), p.value);
    return avg;
  }
  if (p.kind == ProfileSpec::Kind::Riemann) {
    for (int k = 0; k < grid.n_cells; ++k) {
      const double a = grid.left_interface(k);
      const double b = grid.right_interface(k);
      const double cut = std::clamp(p.x0, a, b);
      avg[static_cast<size_t>(k)] = (p.left * (cut - a) + p.right * (b - cut)) / grid.dx;
    }
    return avg;
  }
  for (int k = 0; k < grid.n_cells; ++k) {
    const double mid = grid.cell_center(k);
    const double half = 0.5 * grid.dx;
    double acc = 0.0;
    for (size_t q = 0; q < kGlNodes.size(); ++q) {
      acc += kGlWeights[q] * profile_value(p, mid + half * kGlNodes[q]);
    }
    avg[static_cast<size_t>(k)] = 0.5 * acc;  // weights sum to 2 on [-1,1]
  }
  return avg;
}

LaneGridState init_from_profile(std::span<const ProfileSpec> profiles, const Grid1D& grid) {
  LaneGridState state = LaneGridState::zeros(static_cast<int>(profiles.size()), grid.n_cells);
  for (int j = 0; j < state.lanes; ++j) {
    const ProfileSpec& p = profiles[static_cast<size_t>(j)];
    const std::vector<double> avg = cell_averages(p, grid);
    for (int k = 0; k < grid.n_cells; ++k) {
      const double v = avg[static_cast<size_t>(k)];
      if (!(v >= 0.0 && v <= 1.0) || !std::isfinite(v)) {
        fail(Errc::ProfileOutOfRange, "lane " + std::to_string(j + 1) + " cell " +
                                          std::to_string(k) + " averages to " + std::to_string(v));
      }
      state.at(j, k) = v;
    }
  }
  return state;
}

ProfileSpec profile_from_string(const std::string& text) {
  ProfileSpec p;
  const size_t colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "sin_sq") {
    if (!args.empty()) fail(Errc::SchemaError, "sin_sq takes no parameters");
    p.kind = ProfileSpec::Kind::SinSq;
    return p;
  }
  if (head == "constant") {
    auto kv = parse_kv(args, "constant");
    if (!kv.count("value")) fail(Errc::SchemaError, "constant needs value=");
    p.kind = ProfileSpec::Kind::Constant;
    p.value = kv["value"];
    return p;
  }
  if (head == "bump_q") {
    auto kv = parse_kv(args, "bump_q");
    p.kind = ProfileSpec::Kind::BumpQ;
    if (kv.count("scale")) p.scale = kv["scale"];
    if (kv.count("shift")) p.shift = kv["shift"];
    return p;
  }
  if (head == "riemann") {
    auto kv = parse_kv(args, "riemann");
    for (const char* key : {"left", "right", "x0"}) {
      if (!kv.count(key)) fail(Errc::SchemaError, std::string("riemann needs ") + key + "=");
    }
    p.kind = ProfileSpec::Kind::Riemann;
    p.left = kv["left"];
    p.right = kv["right"];
    p.x0 = kv["x0"];
    return p;
  }
  fail(Errc::SchemaError, "unknown profile '" + text + "'");
}

std::string profile_to_string(const ProfileSpec& p) {
  std::ostringstream os;
  switch (p.kind) {
    case ProfileSpec::Kind::Constant:
      os << "constant:value=" << p.value;
      break;
    case ProfileSpec::Kind::SinSq:
      os << "sin_sq";
      break;
    case ProfileSpec::Kind::BumpQ:
      os << "bump_q:scale=" << p.scale << ",shift=" << p.shift;
      break;
    case ProfileSpec::Kind::Riemann:
      os << "riemann:left=" << p.left << ",right=" << p.right << ",x0=" << p.x0;
      break;
  }
  return os.str();
}

}  // namespace lanesim
