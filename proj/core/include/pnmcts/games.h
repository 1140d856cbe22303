#ifndef PNMCTS_GAMES_H_
#define PNMCTS_GAMES_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "pnmcts/awari.h"
#include "pnmcts/knightthrough.h"
#include "pnmcts/loa.h"
#include "pnmcts/tree_game.h"

namespace pnmcts {

using AnyGame = std::variant<Loa, Awari, Knightthrough, TreeGame>;

// "loa7", "loa8", "awari", "knightthrough" or "tree:<file>". A positive
// `max_plies` overrides the game's default cap (ignored for trees).
AnyGame MakeGame(std::string_view name, std::optional<int> max_plies = {});

// Game name as it appears in serialized positions.
std::string GameName(const AnyGame& game);

}  // namespace pnmcts

#endif  // PNMCTS_GAMES_H_
