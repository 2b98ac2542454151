#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "invqm/word.hpp"

namespace invqm {

/// A finite presentation <a_1, ..., a_n | r_1, ..., r_m>.
struct Presentation {
  std::vector<std::string> names;
  std::vector<FreeWord>    relators;

  [[nodiscard]] std::size_t rank() const noexcept { return names.size(); }

  /// Checks names are distinct identifiers and relators live in F_rank.
  void validate() const;
};

/// Parses a word expression over the given generator names.
///
/// Grammar:
///   word := term+            (terms separated by whitespace or '*')
///   term := atom ('^' int)?
///   atom := name | Name-inverse | '1' | '(' word ')' | '[' word ',' word ']'
///
/// An uppercase single letter denotes the inverse of the matching lowercase
/// generator when it is not itself a generator name. Juxtaposed names such
/// as "abAB" or "a1a2" are split into known names.
FreeWord parse_word(std::string_view text, std::vector<std::string> const& names);

/// Parses the presentation file format:
///   # comment
///   gens: a, b, c
///   rel: [a,b]^2
///   rel: ...
/// Throws ParseError with 1-based line/column on malformed input.
Presentation parse_presentation(std::string_view text);

/// Inverse of parse_presentation (up to comments and spacing).
std::string render_presentation(Presentation const& p);

/// Reads and parses a presentation file. Throws PreconditionError if the
/// file cannot be opened.
Presentation load_presentation(std::string const& path);

}  // namespace invqm
