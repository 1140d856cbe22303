#ifndef PNMCTS_CSV_H_
#define PNMCTS_CSV_H_

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pnmcts/stats.h"

namespace pnmcts {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kMatchCsvHeader =
    "game,agent_a,agent_b,a_first,result,plies,sims_a_h1,sims_b_h1,seed";
inline constexpr std::string_view kSeriesCsvHeader =
    "label,n,wins,draws,losses,p,margin";

// RFC 4180 quoting: fields holding ',', '"' or newlines are quoted.
std::string CsvEscape(std::string_view field);
// Splits one CSV line; throws std::invalid_argument on unbalanced quotes.
std::vector<std::string> CsvSplit(std::string_view line);

void WriteMatchCsv(std::ostream& out, std::span<const MatchRecord> records);
std::vector<MatchRecord> ReadMatchCsv(std::istream& in);
void WriteSeriesCsv(std::ostream& out, std::span<const SeriesStats> rows);
std::vector<SeriesStats> ReadSeriesCsv(std::istream& in);

// Writes a whole file; failures raise IoError naming the path.
void WriteFile(const std::string& path, const std::string& contents);
std::string ReadFile(const std::string& path);

}  // namespace pnmcts

#endif  // PNMCTS_CSV_H_
