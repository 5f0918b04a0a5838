#include "pga/parser.hpp"

#include <charconv>
#include <cstdint>
#include <optional>
#include <vector>

namespace pga {
namespace {

// Parser-level limits so that arbitrary input cannot demand absurd
// allocations downstream (padding, unfolding, extraction).
constexpr std::uint64_t kMaxJumpCounter = 1'000'000'000'000'000ULL;
constexpr std::uint64_t kMaxRepeatCounter = 1'000'000ULL;
constexpr std::size_t kMaxNesting = 4'000;

enum class Tok : std::uint8_t { Semi, LParen, RParen, OmegaOp, Instr, End };

struct Token {
  Tok kind;
  std::size_t pos;  // 1-based character index
  std::optional<Instruction> instr;
};

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_name_start(char c) { return c >= 'a' && c <= 'z'; }
bool is_name_char(char c) { return is_name_start(c) || is_digit(c) || c == '.'; }

struct Lexer {
  std::string_view text;
  std::size_t i = 0;

  [[noreturn]] void fail(std::size_t pos, const std::string& msg) const {
    throw ParseError(pos, msg);
  }

  std::uint64_t number(const char* what, bool allow_zero, std::uint64_t max) {
    const std::size_t start = i;
    while (i < text.size() && is_digit(text[i])) ++i;
    if (i == start) fail(start + 1, std::string("expected a number after '") + what + "'");
    const std::string_view digits = text.substr(start, i - start);
    if (digits.size() > 1 && digits[0] == '0')
      fail(start + 1, "malformed number: leading zero");
    std::uint64_t value = 0;
    const auto r = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (r.ec != std::errc{} || value > max)
      fail(start + 1, std::string("counter after '") + what + "' is too large");
    if (!allow_zero && value == 0)
      fail(start + 1, std::string("counter after '") + what + "' must be positive");
    return value;
  }

  std::string name(std::size_t at) {
    if (i >= text.size() || !is_name_start(text[i]))
      fail(i + 1, "expected an instruction name (lowercase letter)");
    const std::size_t start = i;
    while (i < text.size() && is_name_char(text[i])) ++i;
    (void)at;
    return std::string(text.substr(start, i - start));
  }

  std::vector<Token> lex() {
    std::vector<Token> out;
    while (i < text.size()) {
      const char c = text[i];
      const std::size_t pos = i + 1;
      if (is_space(c)) {
        ++i;
        continue;
      }
      switch (c) {
        case ';':
          ++i;
          out.push_back({Tok::Semi, pos, {}});
          break;
        case '(':
          ++i;
          out.push_back({Tok::LParen, pos, {}});
          break;
        case ')':
          ++i;
          out.push_back({Tok::RParen, pos, {}});
          break;
        case '^':
          if (i + 1 >= text.size() || text[i + 1] != 'w')
            fail(pos + 1, "expected 'w' after '^'");
          i += 2;
          out.push_back({Tok::OmegaOp, pos, {}});
          break;
        case '!':
          ++i;
          out.push_back({Tok::Instr, pos, Instruction::halt()});
          break;
        case '#':
          if (i + 1 < text.size() && text[i + 1] == '#') {
            i += 2;
            out.push_back({Tok::Instr, pos,
                           Instruction::repeat(number("##", false, kMaxRepeatCounter))});
          } else {
            ++i;
            out.push_back({Tok::Instr, pos,
                           Instruction::jump(number("#", true, kMaxJumpCounter))});
          }
          break;
        case '\\':
          if (i + 2 >= text.size() || text[i + 1] != '#' || text[i + 2] != '#')
            fail(pos + 1, "expected '##' after '\\'");
          i += 3;
          out.push_back({Tok::Instr, pos,
                         Instruction::repeat(number("\\##", false, kMaxRepeatCounter))});
          break;
        case '+':
          ++i;
          out.push_back({Tok::Instr, pos, Instruction::pos_test(name(pos))});
          break;
        case '-':
          ++i;
          out.push_back({Tok::Instr, pos, Instruction::neg_test(name(pos))});
          break;
        default:
          if (is_name_start(c)) {
            out.push_back({Tok::Instr, pos, Instruction::basic(name(pos))});
          } else {
            fail(pos, std::string("unexpected character '") + c + "'");
          }
      }
    }
    out.push_back({Tok::End, text.size() + 1, {}});
    return out;
  }
};

const char* describe(const Token& t) {
  switch (t.kind) {
    case Tok::Semi:
      return "';'";
    case Tok::LParen:
      return "'('";
    case Tok::RParen:
      return "')'";
    case Tok::OmegaOp:
      return "'^w'";
    case Tok::Instr:
      return "instruction";
    case Tok::End:
      return "end of input";
  }
  return "token";
}

struct PgaParser {
  const std::vector<Token>& toks;
  std::size_t at = 0;
  std::size_t depth = 0;

  const Token& peek() const { return toks[at]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(t.pos, msg);
  }

  PgaTerm parse_seq() {
    if (++depth > kMaxNesting) fail(peek(), "nesting too deep");
    std::vector<PgaTerm> items;
    items.push_back(parse_rep());
    while (peek().kind == Tok::Semi) {
      ++at;
      items.push_back(parse_rep());
    }
    --depth;
    return concat_all(items);
  }

  PgaTerm parse_rep() {
    PgaTerm a = parse_atom();
    if (peek().kind == Tok::OmegaOp) {
      ++at;
      return PgaTerm::omega(std::move(a));
    }
    return a;
  }

  PgaTerm parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Instr:
        if (t.instr->kind() == InstrKind::Repeat)
          fail(t, "repeat instruction is not allowed in program terms");
        ++at;
        return PgaTerm::prim(*t.instr);
      case Tok::LParen: {
        ++at;
        PgaTerm inner = parse_seq();
        if (peek().kind != Tok::RParen)
          fail(peek(), std::string("expected ')', found ") + describe(peek()));
        ++at;
        return inner;
      }
      default:
        fail(t, std::string("expected an instruction or '(', found ") + describe(t));
    }
  }
};

}  // namespace

PgaTerm parse_pga(std::string_view text) {
  Lexer lex{text};
  const std::vector<Token> toks = lex.lex();
  if (toks.front().kind == Tok::End) throw ParseError(1, "empty input");
  PgaParser p{toks};
  PgaTerm t = p.parse_seq();
  if (p.peek().kind != Tok::End)
    throw ParseError(p.peek().pos,
                     std::string("unexpected ") + describe(p.peek()));
  return t;
}

LSeq parse_l(std::string_view text) {
  Lexer lex{text};
  const std::vector<Token> toks = lex.lex();
  if (toks.front().kind == Tok::End) throw ParseError(1, "empty input");
  LSeq out;
  std::size_t at = 0;
  for (;;) {
    const Token& t = toks[at];
    switch (t.kind) {
      case Tok::Instr:
        out.items.push_back(*t.instr);
        ++at;
        break;
      case Tok::OmegaOp:
        throw ParseError(t.pos, "'^w' is not allowed in flat sequences");
      case Tok::LParen:
      case Tok::RParen:
        throw ParseError(t.pos, "parentheses are not allowed in flat sequences");
      default:
        throw ParseError(t.pos,
                         std::string("expected an instruction, found ") + describe(t));
    }
    if (toks[at].kind == Tok::Semi) {
      ++at;
      continue;
    }
    break;
  }
  if (toks[at].kind != Tok::End)
    throw ParseError(toks[at].pos,
                     std::string("unexpected ") + describe(toks[at]));
  return out;
}

Dialect detect_dialect(std::string_view text) {
  std::size_t first_caret = 0;  // 1-based, 0 = absent
  std::size_t first_rep = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '^' && first_caret == 0) first_caret = i + 1;
    if (text[i] == '#' && i + 1 < text.size() && text[i + 1] == '#') {
      if (first_rep == 0) first_rep = i + 1;
      ++i;
    }
  }
  if (first_caret != 0 && first_rep != 0)
    throw ParseError(std::max(first_caret, first_rep),
                     "conflicting dialect markers: both '^w' and '##' present");
  return first_rep != 0 ? Dialect::Pgla : Dialect::Pga;
}

}  // namespace pga
