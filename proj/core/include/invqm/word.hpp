#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace invqm {

/// A generator a_gen (sign +1) or its inverse (sign -1). Generators are
/// 1-based.
struct Letter {
  int gen  = 1;
  int sign = 1;

  [[nodiscard]] constexpr Letter inverse() const noexcept { return {gen, -sign}; }
  [[nodiscard]] constexpr bool cancels(Letter other) const noexcept {
    return gen == other.gen && sign == -other.sign;
  }
  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;
};

/// A freely reduced word in the free group F_n of rank n.
///
/// Every constructor reduces eagerly, so two FreeWords compare equal exactly
/// when they represent the same element of F_n.
class FreeWord {
 public:
  /// The identity of F_rank.
  explicit FreeWord(std::size_t rank) : _rank(rank) {}

  /// Reduces `letters`. Throws PreconditionError if a generator index lies
  /// outside [1, rank] or a sign is not +-1.
  FreeWord(std::size_t rank, std::span<Letter const> letters);
  FreeWord(std::size_t rank, std::initializer_list<Letter> letters)
      : FreeWord(rank, std::span<Letter const>(letters.begin(), letters.size())) {}

  /// a_gen^sign as a word.
  static FreeWord generator(std::size_t rank, int gen, int sign = 1);

  [[nodiscard]] std::size_t rank() const noexcept { return _rank; }
  [[nodiscard]] std::span<Letter const> letters() const noexcept { return _letters; }
  [[nodiscard]] std::size_t length() const noexcept { return _letters.size(); }
  [[nodiscard]] bool is_identity() const noexcept { return _letters.empty(); }
  [[nodiscard]] Letter operator[](std::size_t i) const { return _letters[i]; }

  friend bool operator==(FreeWord const&, FreeWord const&) = default;
  friend auto operator<=>(FreeWord const& a, FreeWord const& b) {
    if (auto c = a._rank <=> b._rank; c != 0) {
      return c;
    }
    return a._letters <=> b._letters;
  }

 private:
  std::size_t         _rank;
  std::vector<Letter> _letters;
};

/// Free reduction of an arbitrary letter sequence.
FreeWord reduce(std::size_t rank, std::span<Letter const> letters);

FreeWord multiply(FreeWord const& u, FreeWord const& v);
FreeWord invert(FreeWord const& w);
FreeWord power(FreeWord const& w, long k);
/// g w g^-1
FreeWord conjugate(FreeWord const& g, FreeWord const& w);
/// [u, v] = u v u^-1 v^-1
FreeWord commutator(FreeWord const& u, FreeWord const& v);

inline FreeWord operator*(FreeWord const& u, FreeWord const& v) { return multiply(u, v); }

/// Signed exponent sum of each generator (index 0 holds generator 1).
std::vector<std::int64_t> exponent_sums(FreeWord const& w);

/// True iff w lies in [F_n, F_n], i.e. every exponent sum vanishes.
bool is_in_commutator_subgroup(FreeWord const& w);

/// Cyclic reduction: the shortest conjugate obtained by stripping matching
/// first/last letters.
FreeWord cyclically_reduce(FreeWord const& w);

/// a, b, c, ... for rank <= 26, otherwise a1, a2, ..., an.
std::vector<std::string> default_names(std::size_t rank);

/// Space separated rendering, e.g. "a b A B". Inverses of single lowercase
/// letter names print as the uppercase letter, other inverses as "x^-1".
/// The identity renders as "1".
std::string render(FreeWord const& w, std::span<std::string const> names);
std::string render(FreeWord const& w);

}  // namespace invqm
