#include "pnmcts/harness.h"

#include <cstdio>
#include <sstream>

#include "pnmcts/csv.h"

namespace pnmcts {

std::string FormatOverheadCsv(const std::vector<OverheadResult>& rows) {
  std::ostringstream out;
  out << kOverheadCsvHeader << "\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.2f,%.2f,%.6f", r.mean_sims_pnmcts,
                  r.mean_sims_mcts, r.ratio);
    out << CsvEscape(r.game) << ',' << r.n << ',' << r.budget.ToString() << ','
        << CsvEscape(r.pnmcts_label) << ',' << CsvEscape(r.mcts_label) << ','
        << buf << "\n";
  }
  return out.str();
}

SweepParameter ParseSweepParameter(std::string_view name) {
  if (name == "c_pn") return SweepParameter::kCpn;
  if (name == "contempt") return SweepParameter::kContempt;
  if (name == "time") return SweepParameter::kTime;
  throw std::invalid_argument("sweep parameter must be c_pn, contempt or time");
}

void ApplySweepValue(SweepParameter parameter, std::string_view value,
                     SearchConfig& config_a, SearchConfig& config_b) {
  switch (parameter) {
    case SweepParameter::kCpn: {
      ExperimentConfig tmp;
      tmp.search = config_a;
      SetConfigValue(tmp, "c_pn", value);
      config_a = tmp.search;
      break;
    }
    case SweepParameter::kContempt:
      config_a.contempt = ParseContempt(value);
      break;
    case SweepParameter::kTime: {
      const Budget b = Budget::Parse("ms:" + std::string(value));
      config_a.budget = b;
      config_b.budget = b;
      break;
    }
  }
  config_a.Validate();
  config_b.Validate();
}

}  // namespace pnmcts
