#include "invqm/rational.hpp"

#include <cctype>

#include "invqm/error.hpp"

namespace invqm {

namespace {
  bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      s.remove_prefix(1);
    }
    if (s.empty()) {
      return false;
    }
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        return false;
      }
    }
    return true;
  }
}  // namespace

Rat parse_rat(std::string_view text) {
  auto const slash = text.find('/');
  auto num_text    = text.substr(0, slash);
  auto den_text
      = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text)) {
    throw PreconditionError("invalid rational literal '" + std::string(text) + "'");
  }
  if (num_text.front() == '+') {
    num_text.remove_prefix(1);
  }
  if (den_text.front() == '+') {
    den_text.remove_prefix(1);
  }
  Int num(std::string(num_text), 10);
  Int den(std::string(den_text), 10);
  if (den == 0) {
    throw PreconditionError("zero denominator in '" + std::string(text) + "'");
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(Int const& z) { return z.get_str(); }

std::string to_string(Rat const& r) {
  // mpq_class::get_str already prints "p" for integral values.
  return r.get_str();
}

}  // namespace invqm
