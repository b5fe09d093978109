#include "lhsolve/game_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace lhsolve {

namespace {

struct TextLine {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::vector<TextLine> content_lines(std::string_view text) {
  std::vector<TextLine> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    if (!line.empty() && line.front() == '#') continue;

    TextLine parsed{number, {}};
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && is_space(line[pos])) ++pos;
      std::size_t end = pos;
      while (end < line.size() && !is_space(line[end])) ++end;
      if (end > pos) parsed.tokens.push_back(line.substr(pos, end - pos));
      pos = end;
    }
    if (!parsed.tokens.empty()) lines.push_back(std::move(parsed));
  }
  return lines;
}

double parse_real(std::string_view token, std::size_t line) {
  double v = 0;
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line, "not a number: '" + std::string(token) + "'");
  return v;
}

int parse_size(std::string_view token, std::size_t line) {
  int v = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line, "not an integer: '" + std::string(token) + "'");
  if (v < 1) throw ParseError(line, "dimensions must be at least 1");
  return v;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

Vector<double> parse_row(const TextLine& line) {
  Vector<double> v(static_cast<Index>(line.tokens.size()));
  for (std::size_t k = 0; k < line.tokens.size(); ++k)
    v(static_cast<Index>(k)) = parse_real(line.tokens[k], line.number);
  return v;
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                       std::chars_format::general, 17);
  return std::string(buf.data(), ptr);
}

Game parse_game_text(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "empty game text");
  const auto& header = lines.front();
  if (header.tokens.size() != 2)
    throw ParseError(header.number, "expected header 'm n'");
  const int m = parse_size(header.tokens[0], header.number);
  const int n = parse_size(header.tokens[1], header.number);

  std::array<Matrix<double>, 2> mats{Matrix<double>(m, n),
                                     Matrix<double>(m, n)};
  std::size_t next = 1;
  for (int which = 0; which < 2; ++which) {
    const char* name = which == 0 ? "A" : "B";
    for (int i = 0; i < m; ++i) {
      if (next >= lines.size()) {
        const std::size_t at = lines.back().number + 1;
        throw ParseError(at, std::string("missing row ") +
                                 std::to_string(i + 1) + " of " + name);
      }
      const auto& line = lines[next++];
      if (line.tokens.size() != static_cast<std::size_t>(n))
        throw ParseError(line.number,
                         std::string("row ") + std::to_string(i + 1) + " of " +
                             name + ": expected " + std::to_string(n) +
                             " values, found " +
                             std::to_string(line.tokens.size()));
      mats[which].row(i) = parse_row(line).transpose();
    }
  }
  if (next != lines.size())
    throw ParseError(lines[next].number, "unexpected trailing data");

  try {
    return Game(std::move(mats[0]), std::move(mats[1]));
  } catch (const InvalidInput& e) {
    throw ParseError(header.number, e.what());
  }
}

Game read_game_file(const std::string& path) {
  return parse_game_text(slurp(path));
}

std::string serialize_game_text(const Game& g) {
  std::string out;
  if (g.meta() && !g.meta()->generator.empty())
    out += "# " + g.meta()->generator + " seed=" +
           std::to_string(g.meta()->seed) + "\n";
  out += std::to_string(g.m()) + " " + std::to_string(g.n()) + "\n";
  for (const auto* mat : {&g.A(), &g.B()}) {
    for (Index i = 0; i < mat->rows(); ++i) {
      for (Index j = 0; j < mat->cols(); ++j) {
        if (j > 0) out += ' ';
        out += format_double((*mat)(i, j));
      }
      out += '\n';
    }
  }
  return out;
}

void write_game_file(const Game& g, const std::string& path) {
  spit(serialize_game_text(g), path);
}

MixedProfile<double> parse_profile_text(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.size() != 2)
    throw ParseError(lines.empty() ? 1 : lines.back().number,
                     "profile needs exactly two lines (x, then y)");
  return {parse_row(lines[0]), parse_row(lines[1])};
}

MixedProfile<double> read_profile_file(const std::string& path) {
  return parse_profile_text(slurp(path));
}

}  // namespace lhsolve
