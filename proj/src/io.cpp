#include "lanesim/io.hpp"

#include <array>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "lanesim/config.hpp"
#include "lanesim/errors.hpp"

namespace lanesim {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    fail(Errc::IoError, "cannot open '" + path + "' for writing");
  }
  out << content;
  if (!out) {
    fail(Errc::IoError, "write failed for '" + path + "'");
  }
}

std::string snapshot_csv(const Snapshot& snap, const Grid1D& grid) {
  std::string s = "x";
  for (int j = 1; j <= snap.state.lanes; ++j) s += ",rho_" + std::to_string(j);
  s += "\n";
  for (int k = 0; k < grid.n_cells; ++k) {
    s += format_double(grid.cell_center(k));
    for (int j = 0; j < snap.state.lanes; ++j) {
      s += ",";
      s += format_double(snap.state.at(j, k));
    }
    s += "\n";
  }
  return s;
}

std::string timeseries_csv(const std::vector<TimeSeriesRow>& series, int lanes) {
  std::string s = "t";
  for (int j = 1; j <= lanes; ++j) s += ",mass_" + std::to_string(j);
  for (int j = 1; j <= lanes; ++j) s += ",tv_" + std::to_string(j);
  s += "\n";
  for (const TimeSeriesRow& row : series) {
    s += format_double(row.t);
    for (const double m : row.mass) s += "," + format_double(m);
    for (const double tv : row.tv) s += "," + format_double(tv);
    s += "\n";
  }
  return s;
}

std::string snapshot_filename(double t) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", t);
  std::string tag = buf;
  for (char& ch : tag) {
    if (ch == '.') ch = 'p';
    if (ch == '-') ch = 'm';
    if (ch == '+') ch = '_';
  }
  return "snapshot_t" + tag + ".csv";
}

}  // namespace

void emit_snapshot_csv(const Snapshot& snap, const Grid1D& grid, const std::string& path) {
  write_file(path, snapshot_csv(snap, grid));
}

void emit_timeseries_csv(const std::vector<TimeSeriesRow>& series, int lanes,
                         const std::string& path) {
  write_file(path, timeseries_csv(series, lanes));
}

void write_run_outputs(const RunConfig& config, const RunOutput& out, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    fail(Errc::IoError, "cannot create output directory '" + dir + "': " + ec.message());
  }

  nlohmann::json files = nlohmann::json::array();
  std::string combined;
  auto emit = [&](const std::string& name, const std::string& content) {
    write_file(dir + "/" + name, content);
    const std::string h = sha1_hex(content);
    files.push_back({{"path", name}, {"sha1", h}});
    combined += h;
  };

  for (const Snapshot& snap : out.snapshots) {
    emit(snapshot_filename(snap.t), snapshot_csv(snap, out.grid));
  }
  const int lanes = static_cast<int>(config.lanes.size());
  emit("timeseries.csv", timeseries_csv(out.series, lanes));
  emit("config.resolved.ini", render_config(config));

  nlohmann::json meta;
  meta["name"] = config.name;
  meta["steps"] = out.steps;
  meta["final_time"] = out.final_state.t;
  meta["lanes"] = lanes;
  meta["cells"] = out.grid.n_cells;
  meta["config"] = render_config(config);
  meta["outputs"] = files;
  meta["content_hash"] = sha1_hex(combined);
  write_file(dir + "/run.json", meta.dump(2) + "\n");
}

// Compact SHA-1 (FIPS 180-1), enough for content hashing of run outputs.
std::string sha1_hex(std::string_view bytes) {
  std::array<uint32_t, 5> h = {0x67452301u, 0xEFCDAB89u, 0x98BADCFEu, 0x10325476u, 0xC3D2E1F0u};
  const uint64_t ml = static_cast<uint64_t>(bytes.size()) * 8;

  std::string msg(bytes);
  msg.push_back(static_cast<char>(0x80));
  while (msg.size() % 64 != 56) msg.push_back('\0');
  for (int i = 7; i >= 0; --i) msg.push_back(static_cast<char>((ml >> (8 * i)) & 0xFF));

  auto rotl = [](uint32_t x, int s) { return (x << s) | (x >> (32 - s)); };
  for (size_t chunk = 0; chunk < msg.size(); chunk += 64) {
    uint32_t w[80];
    for (int i = 0; i < 16; ++i) {
      w[i] = (static_cast<uint32_t>(static_cast<unsigned char>(msg[chunk + 4 * i])) << 24) |
             (static_cast<uint32_t>(static_cast<unsigned char>(msg[chunk + 4 * i + 1])) << 16) |
             (static_cast<uint32_t>(static_cast<unsigned char>(msg[chunk + 4 * i + 2])) << 8) |
             static_cast<uint32_t>(static_cast<unsigned char>(msg[chunk + 4 * i + 3]));
    }
    for (int i = 16; i < 80; ++i) {
      w[i] = rotl(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);
    }
    uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4];
    for (int i = 0; i < 80; ++i) {
      uint32_t f, k;
      if (i < 20) {
        f = (b & c) | (~b & d);
        k = 0x5A827999u;
      } else if (i < 40) {
        f = b ^ c ^ d;
        k = 0x6ED9EBA1u;
      } else if (i < 60) {
        f = (b & c) | (b & d) | (c & d);
        k = 0x8F1BBCDCu;
      } else {
        f = b ^ c ^ d;
        k = 0xCA62C1D6u;
      }
      const uint32_t tmp = rotl(a, 5) + f + e + k + w[i];
      e = d;
      d = c;
      c = rotl(b, 30);
      b = a;
      a = tmp;
    }
    h[0] += a;
    h[1] += b;
    h[2] += c;
    h[3] += d;
    h[4] += e;
  }

  std::string hex;
  hex.reserve(40);
  for (const uint32_t v : h) {
    char buf[9];
    std::snprintf(buf, sizeof(buf), "%08x", v);
    hex += buf;
  }
  return hex;
}

}  // namespace lanesim
