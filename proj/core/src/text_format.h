#ifndef PNMCTS_SRC_TEXT_FORMAT_H_
#define PNMCTS_SRC_TEXT_FORMAT_H_

#include <array>
#include <string>
#include <string_view>

#include "pnmcts/game.h"

namespace pnmcts::internal {

// A position line `<game-name>:<board-cells>:<to-move>:<captures>:<ply>`,
// each field with its 1-based column in the source text.
struct PositionFields {
  std::array<std::string_view, 5> field;
  std::array<int, 5> column;
};

enum FieldIndex { kName = 0, kCells = 1, kToMove = 2, kCaptures = 3, kPly = 4 };

PositionFields SplitPositionFields(std::string_view text,
                                   const std::string& expected_name);

Player ParsePlayerField(const PositionFields& f);
int ParsePlyField(const PositionFields& f);
int ParseInt(std::string_view text, int column);

char PlayerChar(Player p);

}  // namespace pnmcts::internal

#endif  // PNMCTS_SRC_TEXT_FORMAT_H_
