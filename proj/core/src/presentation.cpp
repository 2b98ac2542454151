#include "invqm/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include "invqm/error.hpp"

namespace invqm {

namespace {

  bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  // Recursive-descent parser over a single line of text. `line` and
  // `column_offset` only affect error positions.
  class WordParser {
   public:
    WordParser(std::string_view text,
               std::vector<std::string> const& names,
               std::size_t line,
               std::size_t column_offset)
        : _text(text), _names(names), _line(line), _column_offset(column_offset) {}

    FreeWord parse_all() {
      skip_separators();
      if (at_end()) {
        fail("empty word (write 1 for the identity)");
      }
      FreeWord w = parse_word();
      skip_separators();
      if (!at_end()) {
        fail("unexpected character '" + std::string(1, peek()) + "'");
      }
      return w;
    }

   private:
    std::string_view                _text;
    std::vector<std::string> const& _names;
    std::size_t                     _line;
    std::size_t                     _column_offset;
    std::size_t                     _pos = 0;

    [[noreturn]] void fail(std::string const& what) const {
      fail_at(what, _pos);
    }
    [[noreturn]] void fail_at(std::string const& what, std::size_t pos) const {
      throw ParseError(what, _line, _column_offset + pos + 1);
    }

    bool at_end() const { return _pos >= _text.size(); }
    char peek() const { return _text[_pos]; }

    void skip_spaces() {
      while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
        ++_pos;
      }
    }
    void skip_separators() {
      while (!at_end() && (std::isspace(static_cast<unsigned char>(peek())) || peek() == '*')) {
        ++_pos;
      }
    }

    bool starts_atom() const {
      if (at_end()) {
        return false;
      }
      char c = peek();
      return is_ident_start(c) || c == '(' || c == '[' || c == '1';
    }

    FreeWord parse_word() {
      skip_separators();
      if (!starts_atom()) {
        if (at_end()) {
          fail("unexpected end of input, expected a generator");
        }
        fail("unexpected character '" + std::string(1, peek()) + "', expected a generator");
      }
      FreeWord w(_names.size());
      while (true) {
        skip_separators();
        if (!starts_atom()) {
          break;
        }
        w = multiply(w, parse_term());
      }
      return w;
    }

    FreeWord parse_term() {
      FreeWord atom = parse_atom();
      skip_spaces();
      if (!at_end() && peek() == '^') {
        ++_pos;
        skip_spaces();
        long const k = parse_int();
        atom = power(atom, k);
      }
      return atom;
    }

    long parse_int() {
      std::size_t const start = _pos;
      bool parens = false;
      if (!at_end() && peek() == '(') {
        parens = true;
        ++_pos;
        skip_spaces();
      }
      bool negative = false;
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        negative = peek() == '-';
        ++_pos;
      }
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("expected an integer exponent");
      }
      long value = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        if (value > (std::numeric_limits<long>::max() - 9) / 10) {
          fail_at("exponent too large", start);
        }
        value = value * 10 + (peek() - '0');
        ++_pos;
      }
      if (parens) {
        skip_spaces();
        if (at_end() || peek() != ')') {
          fail("expected ')' after exponent");
        }
        ++_pos;
      }
      return negative ? -value : value;
    }

    FreeWord parse_atom() {
      char const c = peek();
      if (c == '(') {
        ++_pos;
        FreeWord inner = parse_word();
        skip_separators();
        expect(')');
        return inner;
      }
      if (c == '[') {
        ++_pos;
        FreeWord left = parse_word();
        skip_separators();
        expect(',');
        FreeWord right = parse_word();
        skip_separators();
        expect(']');
        return commutator(left, right);
      }
      if (c == '1') {
        ++_pos;
        return FreeWord(_names.size());
      }
      std::size_t const start = _pos;
      while (!at_end() && is_ident_char(peek())) {
        ++_pos;
      }
      return resolve_identifier(_text.substr(start, _pos - start), start);
    }

    void expect(char c) {
      if (at_end()) {
        fail(std::string("unexpected end of input, expected '") + c + "'");
      }
      if (peek() != c) {
        fail(std::string("expected '") + c + "' but found '" + peek() + "'");
      }
      ++_pos;
    }

    std::optional<Letter> single_token(std::string_view token) const {
      for (std::size_t i = 0; i < _names.size(); ++i) {
        if (_names[i] == token) {
          return Letter{static_cast<int>(i + 1), 1};
        }
      }
      if (token.size() == 1 && std::isupper(static_cast<unsigned char>(token[0]))) {
        std::string const lower(
            1, static_cast<char>(std::tolower(static_cast<unsigned char>(token[0]))));
        for (std::size_t i = 0; i < _names.size(); ++i) {
          if (_names[i] == lower) {
            return Letter{static_cast<int>(i + 1), -1};
          }
        }
      }
      return std::nullopt;
    }

    // Splits an identifier into generator names and uppercase inverses,
    // preferring the longest match at each position and backtracking.
    bool split(std::string_view token, std::vector<Letter>& out) const {
      if (token.empty()) {
        return true;
      }
      for (std::size_t len = token.size(); len >= 1; --len) {
        if (auto l = single_token(token.substr(0, len))) {
          out.push_back(*l);
          if (split(token.substr(len), out)) {
            return true;
          }
          out.pop_back();
        }
      }
      return false;
    }

    FreeWord resolve_identifier(std::string_view token, std::size_t start) const {
      std::vector<Letter> letters;
      if (!split(token, letters)) {
        fail_at("unknown generator '" + std::string(token) + "'", start);
      }
      return FreeWord(_names.size(), letters);
    }
  };

  bool is_identifier(std::string_view s) {
    return !s.empty() && is_ident_start(s.front())
           && std::all_of(s.begin(), s.end(), is_ident_char);
  }

  std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
      s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.remove_suffix(1);
    }
    return s;
  }

}  // namespace

void Presentation::validate() const {
  std::set<std::string> seen;
  for (auto const& name : names) {
    if (!is_identifier(name)) {
      throw PreconditionError("invalid generator name '" + name + "'");
    }
    if (!seen.insert(name).second) {
      throw PreconditionError("duplicate generator name '" + name + "'");
    }
  }
  for (auto const& r : relators) {
    if (r.rank() != names.size()) {
      throw PreconditionError("relator rank does not match number of generators");
    }
  }
}

FreeWord parse_word(std::string_view text, std::vector<std::string> const& names) {
  return WordParser(text, names, 1, 0).parse_all();
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    auto end = text.find('\n', begin);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    ++line_no;
    std::string_view line = text.substr(begin, end - begin);
    begin = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    if (trim(line).empty()) {
      if (end == text.size()) {
        break;
      }
      continue;
    }
    auto const colon = line.find(':');
    if (colon == std::string_view::npos) {
      auto const indent = line.size() - trim(line).size();
      throw ParseError("expected 'gens:' or 'rel:'", line_no, indent + 1);
    }
    auto const key = trim(line.substr(0, colon));
    auto const body = line.substr(colon + 1);
    if (key == "gens") {
      if (have_gens) {
        throw ParseError("duplicate 'gens:' line", line_no, 1);
      }
      have_gens = true;
      std::size_t pos = 0;
      while (pos <= body.size()) {
        auto comma = body.find(',', pos);
        if (comma == std::string_view::npos) {
          comma = body.size();
        }
        auto const raw  = body.substr(pos, comma - pos);
        auto const name = trim(raw);
        auto const lead = raw.find_first_not_of(" \t");
        auto const col  = colon + 1 + pos + (lead == std::string_view::npos ? 0 : lead) + 1;
        if (!is_identifier(name)) {
          throw ParseError("invalid generator name '" + std::string(name) + "'", line_no, col);
        }
        if (std::find(p.names.begin(), p.names.end(), name) != p.names.end()) {
          throw ParseError("duplicate generator name '" + std::string(name) + "'", line_no, col);
        }
        p.names.emplace_back(name);
        pos = comma + 1;
      }
    } else if (key == "rel") {
      if (!have_gens) {
        throw ParseError("'rel:' before 'gens:'", line_no, 1);
      }
      p.relators.push_back(WordParser(body, p.names, line_no, colon + 1).parse_all());
    } else {
      throw ParseError("unknown directive '" + std::string(key) + "'", line_no, 1);
    }
    if (end == text.size()) {
      break;
    }
  }
  if (!have_gens) {
    throw ParseError("missing 'gens:' line", line_no == 0 ? 1 : line_no, 1);
  }
  return p;
}

std::string render_presentation(Presentation const& p) {
  std::ostringstream out;
  out << "gens: ";
  for (std::size_t i = 0; i < p.names.size(); ++i) {
    out << (i == 0 ? "" : ", ") << p.names[i];
  }
  out << '\n';
  for (auto const& r : p.relators) {
    out << "rel: " << (r.is_identity() ? std::string("1") : render(r, p.names)) << '\n';
  }
  return out.str();
}

Presentation load_presentation(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw PreconditionError("cannot open presentation file '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_presentation(buffer.str());
}

}  // namespace invqm
