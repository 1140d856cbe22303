#include "pnmcts/pns.h"

namespace pnmcts {

std::string_view ToString(SolveStatus s) {
  switch (s) {
    case SolveStatus::kProven:
      return "proven";
    case SolveStatus::kDisproven:
      return "disproven";
    case SolveStatus::kUnknown:
      return "unknown";
  }
  return "?";
}

}  // namespace pnmcts
