#include "qillum/io.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "qillum/error.hpp"

namespace qillum {

std::string format_fixed(double v, int decimals) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  if (n < 0 || n >= static_cast<int>(sizeof buf)) throw DomainError("value too large to format");
  std::string s(buf, static_cast<std::size_t>(n));
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

void write_records(std::ostream& os, std::span<const AdvantageRecord> records) {
  if (records.empty()) throw DomainError("no records to write");
  std::string out;
  out.reserve(records.size() * 180 + kRecordHeader.size() + 1);
  out += kRecordHeader;
  out += '\n';
  for (const auto& r : records) {
    for (double v : r.c.components()) out += format_fixed(v) + ',';
    for (double v : r.lambda) out += format_fixed(v) + ',';
    for (double v : {r.concurrence, r.eof, r.delta_in, r.chi_q, r.chi_c, r.qa, r.delta_enc})
      out += format_fixed(v) + ',';
    out += r.separable ? '1' : '0';
    out += '\n';
  }
  os << out;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("write failed: " + path.string());
}

void write_records_file(const std::filesystem::path& path,
                        std::span<const AdvantageRecord> records) {
  std::ostringstream os;
  write_records(os, records);
  write_text_file(path, os.str());
}

namespace {

double parse_double(std::string_view field, std::size_t line) {
  double v = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (ec != std::errc{} || ptr != end || field.empty())
    throw FormatError("line " + std::to_string(line) + ": bad number '" + std::string(field) + "'");
  return v;
}

}  // namespace

std::vector<AdvantageRecord> read_records(std::istream& is) {
  std::string text;
  if (!std::getline(is, text) || text != kRecordHeader)
    throw FormatError("line 1: record header mismatch");
  std::vector<AdvantageRecord> out;
  std::size_t line = 1;
  while (std::getline(is, text)) {
    ++line;
    std::vector<std::string_view> fields;
    std::string_view rest(text);
    for (;;) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 15)
      throw FormatError("line " + std::to_string(line) + ": expected 15 fields, got " +
                        std::to_string(fields.size()));
    std::array<double, 14> v{};
    for (std::size_t i = 0; i < 14; ++i) v[i] = parse_double(fields[i], line);
    AdvantageRecord r;
    try {
      r.c = CorrelationVector(v[0], v[1], v[2]);
    } catch (const DomainError& e) {
      throw FormatError("line " + std::to_string(line) + ": " + e.what());
    }
    r.lambda = {v[3], v[4], v[5], v[6]};
    r.concurrence = v[7];
    r.eof = v[8];
    r.delta_in = v[9];
    r.chi_q = v[10];
    r.chi_c = v[11];
    r.qa = v[12];
    r.delta_enc = v[13];
    if (fields[14] == "1") r.separable = true;
    else if (fields[14] == "0") r.separable = false;
    else throw FormatError("line " + std::to_string(line) + ": separable must be 0 or 1");
    out.push_back(r);
  }
  return out;
}

std::vector<AdvantageRecord> read_records_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string());
  return read_records(f);
}

void write_cluster(std::ostream& os, const ClusterGrid& grid) {
  const std::string x(to_string(grid.x_axis));
  const std::string y(to_string(grid.y_axis));
  std::string out = x + "_bin," + y + "_bin," + x + "_center," + y + "_center," +
                    std::string(to_string(grid.stat)) +
                    ",population,witness_c1,witness_c2,witness_c3\n";
  for (const auto& [key, cell] : grid.cells) {
    out += std::to_string(key.first) + ',' + std::to_string(key.second) + ',';
    out += format_fixed((key.first + 0.5) / grid.mesh) + ',';
    out += format_fixed((key.second + 0.5) / grid.mesh) + ',';
    out += format_fixed(cell.value) + ',' + std::to_string(cell.population);
    for (double v : cell.witness.components()) out += ',' + format_fixed(v);
    out += '\n';
  }
  os << out;
}

void write_toy_curves(std::ostream& os, std::span<const ToyDetectionPoint> points) {
  std::string out = "eta,p_joint,p_local,i_joint,i_local\n";
  for (const auto& p : points) {
    out += format_fixed(p.eta) + ',' + format_fixed(p.p_joint_posterior) + ',' +
           format_fixed(p.p_local_posterior) + ',' + format_fixed(p.i_joint) + ',' +
           format_fixed(p.i_local) + '\n';
  }
  os << out;
}

}  // namespace qillum
