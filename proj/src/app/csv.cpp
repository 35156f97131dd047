#include "tcqed/app.hpp"

#include "tcqed/error.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace tcqed {
namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

double to_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw Error(Errc::InvalidArgument, "bad CSV number '" + s + "'");
  return v;
}

}  // namespace

std::string csv_header(bool with_oracle) {
  std::string h = "t,a1,a2,a3_re,a3_im,a5,a6,negativity,bell";
  if (with_oracle) h += ",negativity_oracle,bell_oracle";
  return h;
}

std::string csv_row(const TrajectoryRecord& r, bool with_oracle) {
  std::string line = fmt17(r.t);
  for (double v : {r.a1, r.a2, r.a3_re, r.a3_im, r.a5, r.a6, r.negativity, r.bell}) {
    line += ',';
    line += fmt17(v);
  }
  if (with_oracle) {
    if (!r.negativity_oracle || !r.bell_oracle) {
      throw Error(Errc::InvalidArgument, "record has no oracle values");
    }
    line += ',' + fmt17(*r.negativity_oracle) + ',' + fmt17(*r.bell_oracle);
  }
  return line;
}

void write_csv(std::ostream& out, std::span<const std::string> metadata, std::span<const TrajectoryRecord> rows,
               bool with_oracle) {
  for (const auto& m : metadata) out << "# " << m << '\n';
  out << csv_header(with_oracle) << '\n';
  for (const auto& r : rows) out << csv_row(r, with_oracle) << '\n';
}

std::vector<TrajectoryRecord> read_csv(std::istream& in) {
  std::vector<TrajectoryRecord> rows;
  std::string line;
  std::optional<bool> with_oracle;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!with_oracle) {
      if (line == csv_header(false)) {
        with_oracle = false;
      } else if (line == csv_header(true)) {
        with_oracle = true;
      } else {
        throw Error(Errc::InvalidArgument, "unrecognised CSV header: " + line);
      }
      continue;
    }
    const auto cells = split(line);
    const std::size_t expected = *with_oracle ? 11 : 9;
    if (cells.size() != expected) throw Error(Errc::InvalidArgument, "wrong column count in: " + line);
    TrajectoryRecord r;
    r.t = to_double(cells[0]);
    r.a1 = to_double(cells[1]);
    r.a2 = to_double(cells[2]);
    r.a3_re = to_double(cells[3]);
    r.a3_im = to_double(cells[4]);
    r.a5 = to_double(cells[5]);
    r.a6 = to_double(cells[6]);
    r.negativity = to_double(cells[7]);
    r.bell = to_double(cells[8]);
    if (*with_oracle) {
      r.negativity_oracle = to_double(cells[9]);
      r.bell_oracle = to_double(cells[10]);
    }
    rows.push_back(r);
  }
  return rows;
}

std::vector<std::string> describe_config(const RunConfig& cfg) {
  const auto& p = cfg.params;
  std::vector<std::string> lines;
  if (!cfg.label.empty()) lines.push_back("panel: " + cfg.label);
  lines.push_back("params: g=" + fmt17(p.g) + " omega=" + fmt17(p.omega) + " big_omega=" + fmt17(p.big_omega) +
                  " gamma=" + fmt17(p.gamma) + " n=" + std::to_string(p.n) + " theta=" + fmt17(p.theta));
  lines.push_back("grid: t_max=" + fmt17(cfg.t_max) + " steps=" + std::to_string(cfg.steps) +
                  " n_max=" + std::to_string(cfg.n_max > 0 ? cfg.n_max : default_n_max(p)) +
                  " oracle=" + (cfg.with_oracle ? "yes" : "no"));
  if (!cfg.reconstructed.empty()) {
    std::string r = "reconstructed:";
    for (const auto& name : cfg.reconstructed) r += " " + name;
    lines.push_back(r);
  }
  return lines;
}

}  // namespace tcqed
