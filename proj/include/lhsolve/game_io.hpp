#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "lhsolve/game.hpp"

namespace lhsolve {

// Game text format: "m n" on the first line, then m rows of A and m rows of B,
// each with n whitespace-separated decimals. Lines beginning with '#' and
// blank lines are skipped.

Game parse_game_text(std::string_view text);
Game read_game_file(const std::string& path);

/// Values are written with 17 significant digits so that parsing the result
/// reproduces every double exactly.
std::string serialize_game_text(const Game& g);
void write_game_file(const Game& g, const std::string& path);

/// Two lines of decimals: x, then y.
MixedProfile<double> parse_profile_text(std::string_view text);
MixedProfile<double> read_profile_file(const std::string& path);

std::string format_double(double v);

}  // namespace lhsolve
