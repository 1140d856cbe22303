#include "pnmcts/games.h"

#include <stdexcept>

#include "pnmcts/csv.h"

namespace pnmcts {

AnyGame MakeGame(std::string_view name, std::optional<int> max_plies) {
  if (name == "loa7" || name == "loa8") {
    const int size = name == "loa7" ? 7 : 8;
    return Loa(size, max_plies.value_or(Loa::kDefaultMaxPlies));
  }
  if (name == "awari") return Awari(max_plies.value_or(Awari::kDefaultMaxPlies));
  if (name == "knightthrough") {
    return Knightthrough(max_plies.value_or(Knightthrough::kDefaultMaxPlies));
  }
  if (name.starts_with("tree:")) {
    const std::string path(name.substr(5));
    return TreeGame::FromText(ReadFile(path));
  }
  throw std::invalid_argument(
      "unknown game '" + std::string(name) +
      "' (expected loa7, loa8, awari, knightthrough or tree:<file>)");
}

std::string GameName(const AnyGame& game) {
  return std::visit([](const auto& g) { return g.name(); }, game);
}

}  // namespace pnmcts
