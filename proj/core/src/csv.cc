#include "pnmcts/csv.h"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace pnmcts {
namespace {

template <typename T>
T ParseNumber(const std::string& text, const char* column) {
  T value{};
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string("csv: bad ") + column + " '" +
                                text + "'");
  }
  return value;
}

double ParseReal(const std::string& text, const char* column) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw std::invalid_argument(std::string("csv: bad ") + column + " '" +
                                text + "'");
  }
  return v;
}

std::string FormatReal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

// Consumes and checks the header line.
void ExpectHeader(std::istream& in, std::string_view header) {
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw std::invalid_argument("csv: expected header '" + std::string(header) +
                                "'");
  }
}

}  // namespace

std::string CsvEscape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> CsvSplit(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (quoted) throw std::invalid_argument("csv: unterminated quote");
  fields.push_back(std::move(current));
  return fields;
}

void WriteMatchCsv(std::ostream& out, std::span<const MatchRecord> records) {
  out << kMatchCsvHeader << "\n";
  for (const auto& r : records) {
    out << CsvEscape(r.game) << ',' << CsvEscape(r.agent_a) << ','
        << CsvEscape(r.agent_b) << ',' << (r.a_first ? 1 : 0) << ','
        << ToString(r.result) << ',' << r.plies << ',' << r.sims_a_h1 << ','
        << r.sims_b_h1 << ',' << r.seed << "\n";
  }
}

std::vector<MatchRecord> ReadMatchCsv(std::istream& in) {
  ExpectHeader(in, kMatchCsvHeader);
  std::vector<MatchRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = CsvSplit(line);
    if (f.size() != 9) {
      throw std::invalid_argument("csv: expected 9 match columns, got " +
                                  std::to_string(f.size()));
    }
    MatchRecord r;
    r.game = f[0];
    r.agent_a = f[1];
    r.agent_b = f[2];
    r.a_first = ParseNumber<int>(f[3], "a_first") != 0;
    r.result = ParseMatchResult(f[4]);
    r.plies = ParseNumber<int>(f[5], "plies");
    r.sims_a_h1 = ParseNumber<std::uint64_t>(f[6], "sims_a_h1");
    r.sims_b_h1 = ParseNumber<std::uint64_t>(f[7], "sims_b_h1");
    r.seed = ParseNumber<std::uint64_t>(f[8], "seed");
    records.push_back(std::move(r));
  }
  return records;
}

void WriteSeriesCsv(std::ostream& out, std::span<const SeriesStats> rows) {
  out << kSeriesCsvHeader << "\n";
  for (const auto& s : rows) {
    out << CsvEscape(s.label) << ',' << s.n << ',' << s.wins << ',' << s.draws
        << ',' << s.losses << ',' << FormatReal(s.p) << ','
        << FormatReal(s.margin) << "\n";
  }
}

std::vector<SeriesStats> ReadSeriesCsv(std::istream& in) {
  ExpectHeader(in, kSeriesCsvHeader);
  std::vector<SeriesStats> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = CsvSplit(line);
    if (f.size() != 7) {
      throw std::invalid_argument("csv: expected 7 series columns");
    }
    SeriesStats s;
    s.label = f[0];
    s.n = ParseNumber<int>(f[1], "n");
    s.wins = ParseNumber<int>(f[2], "wins");
    s.draws = ParseNumber<int>(f[3], "draws");
    s.losses = ParseNumber<int>(f[4], "losses");
    s.p = ParseReal(f[5], "p");
    s.margin = ParseReal(f[6], "margin");
    rows.push_back(std::move(s));
  }
  return rows;
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path + " for writing: " +
                  std::strerror(errno));
  }
  out << contents;
  out.flush();
  if (!out) throw IoError("write to " + path + " failed");
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path + " for reading: " +
                  std::strerror(errno));
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace pnmcts
