#include "iewds/egt_format.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "iewds/errors.hpp"

namespace iewds {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool is_id(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::string expect_id(std::string_view token, std::size_t line) {
  if (!is_id(token)) throw ParseError(line, "invalid node id '" + std::string(token) + "'");
  return std::string(token);
}

int parse_small_int(std::string_view token, std::size_t line, const char* what) {
  try {
    const Rational q = parse_rational(token);
    if (q.denominator() != 1 || q.numerator() > 1'000'000 || q.numerator() < -1'000'000) throw std::invalid_argument("");
    return static_cast<int>(q.numerator());
  } catch (const std::invalid_argument&) {
    throw ParseError(line, std::string("expected an integer ") + what + ", got '" + std::string(token) + "'");
  }
}

}  // namespace

GameDescription parse_description(std::string_view text) {
  GameDescription d;
  bool have_header = false;
  bool have_root = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split_tokens(line);
    if (tok.empty()) continue;

    if (!have_header) {
      if (tok[0] != "game" || tok.size() != 2) throw ParseError(line_no, "expected 'game <n>' as the first line");
      d.players = parse_small_int(tok[1], line_no, "player count");
      if (d.players < 1) throw ParseError(line_no, "player count must be at least 1");
      have_header = true;
      continue;
    }
    if (have_root) throw ParseError(line_no, "content after the 'root' line");

    if (tok[0] == "node") {
      if (tok.size() < 6 || tok[2] != "player" || tok[4] != "children") {
        throw ParseError(line_no, "expected 'node <id> player <i> children <id> ...'");
      }
      RawNode n;
      n.id = expect_id(tok[1], line_no);
      n.turn = parse_small_int(tok[3], line_no, "player");
      for (std::size_t k = 5; k < tok.size(); ++k) n.children.push_back(expect_id(tok[k], line_no));
      n.line = line_no;
      d.nodes.push_back(std::move(n));
    } else if (tok[0] == "leaf") {
      if (tok.size() < 3 || tok[2] != "payoffs") throw ParseError(line_no, "expected 'leaf <id> payoffs <q1> ... <qn>'");
      RawNode n;
      n.id = expect_id(tok[1], line_no);
      n.leaf = true;
      for (std::size_t k = 3; k < tok.size(); ++k) {
        try {
          n.payoffs.push_back(parse_rational(tok[k]));
        } catch (const std::invalid_argument& e) {
          throw ParseError(line_no, e.what());
        }
      }
      n.line = line_no;
      d.nodes.push_back(std::move(n));
    } else if (tok[0] == "root") {
      if (tok.size() != 2) throw ParseError(line_no, "expected 'root <id>'");
      d.root = expect_id(tok[1], line_no);
      have_root = true;
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(tok[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(0, "missing 'game <n>' header");
  if (!have_root) throw ParseError(line_no, "missing final 'root <id>' line");
  return d;
}

GameTree parse_game(std::string_view text) { return GameTree::build(parse_description(text)); }

std::string serialize_game(const GameTree& game) {
  std::ostringstream out;
  out << "game " << game.players() << "\n";
  for (NodeId v = 0; v < game.size(); ++v) {
    if (game.is_leaf(v)) {
      out << "leaf " << game.label(v) << " payoffs";
      for (const auto& q : game.payoffs(v)) out << ' ' << to_string(q);
    } else {
      out << "node " << game.label(v) << " player " << game.turn(v) << " children";
      for (NodeId c : game.children(v)) out << ' ' << game.label(c);
    }
    out << "\n";
  }
  out << "root " << game.label(game.root()) << "\n";
  return out.str();
}

GameTree load_game_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LookupError("cannot open game file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_game(buf.str());
}

}  // namespace iewds
