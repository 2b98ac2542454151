#include "invqm/word.hpp"

#include <algorithm>
#include <cctype>

#include "invqm/error.hpp"

namespace invqm {

namespace {
  void check_letter(std::size_t rank, Letter l) {
    if (l.gen < 1 || static_cast<std::size_t>(l.gen) > rank) {
      throw PreconditionError("generator index " + std::to_string(l.gen)
                              + " out of range for rank " + std::to_string(rank));
    }
    if (l.sign != 1 && l.sign != -1) {
      throw PreconditionError("letter sign must be +1 or -1");
    }
  }

  void check_same_rank(FreeWord const& u, FreeWord const& v) {
    if (u.rank() != v.rank()) {
      throw PreconditionError("rank mismatch: " + std::to_string(u.rank()) + " vs "
                              + std::to_string(v.rank()));
    }
  }

  // "A" for a single lowercase name "a", unless "A" is itself a generator.
  std::string uppercase_inverse(std::string const& name, std::span<std::string const> names) {
    if (name.size() != 1 || !std::islower(static_cast<unsigned char>(name[0]))) {
      return {};
    }
    std::string upper(1, static_cast<char>(std::toupper(static_cast<unsigned char>(name[0]))));
    if (std::find(names.begin(), names.end(), upper) != names.end()) {
      return {};
    }
    return upper;
  }

  // Appends `letters` onto a stack that is already reduced.
  void push_reduced(std::vector<Letter>& stack, std::span<Letter const> letters) {
    for (Letter l : letters) {
      if (!stack.empty() && stack.back().cancels(l)) {
        stack.pop_back();
      } else {
        stack.push_back(l);
      }
    }
  }
}  // namespace

FreeWord::FreeWord(std::size_t rank, std::span<Letter const> letters) : _rank(rank) {
  for (Letter l : letters) {
    check_letter(rank, l);
  }
  _letters.reserve(letters.size());
  push_reduced(_letters, letters);
}

FreeWord FreeWord::generator(std::size_t rank, int gen, int sign) {
  Letter const l{gen, sign};
  return FreeWord(rank, std::span<Letter const>(&l, 1));
}

FreeWord reduce(std::size_t rank, std::span<Letter const> letters) {
  return FreeWord(rank, letters);
}

FreeWord multiply(FreeWord const& u, FreeWord const& v) {
  check_same_rank(u, v);
  std::vector<Letter> out(u.letters().begin(), u.letters().end());
  push_reduced(out, v.letters());
  return FreeWord(u.rank(), out);
}

FreeWord invert(FreeWord const& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return FreeWord(w.rank(), out);
}

FreeWord power(FreeWord const& w, long k) {
  FreeWord base = k < 0 ? invert(w) : w;
  unsigned long n = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1 : static_cast<unsigned long>(k);
  FreeWord result(w.rank());
  // Square and multiply keeps intermediate reductions cheap for large k.
  while (n > 0) {
    if (n & 1UL) {
      result = multiply(result, base);
    }
    n >>= 1;
    if (n > 0) {
      base = multiply(base, base);
    }
  }
  return result;
}

FreeWord conjugate(FreeWord const& g, FreeWord const& w) {
  check_same_rank(g, w);
  return multiply(multiply(g, w), invert(g));
}

FreeWord commutator(FreeWord const& u, FreeWord const& v) {
  check_same_rank(u, v);
  return multiply(multiply(u, v), multiply(invert(u), invert(v)));
}

std::vector<std::int64_t> exponent_sums(FreeWord const& w) {
  std::vector<std::int64_t> sums(w.rank(), 0);
  for (Letter l : w.letters()) {
    sums[static_cast<std::size_t>(l.gen - 1)] += l.sign;
  }
  return sums;
}

bool is_in_commutator_subgroup(FreeWord const& w) {
  auto const sums = exponent_sums(w);
  return std::all_of(sums.begin(), sums.end(), [](std::int64_t s) { return s == 0; });
}

FreeWord cyclically_reduce(FreeWord const& w) {
  auto const letters = w.letters();
  std::size_t first = 0;
  std::size_t last  = letters.size();
  while (last - first >= 2 && letters[first].cancels(letters[last - 1])) {
    ++first;
    --last;
  }
  return FreeWord(w.rank(), letters.subspan(first, last - first));
}

std::vector<std::string> default_names(std::size_t rank) {
  std::vector<std::string> names;
  names.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    if (rank <= 26) {
      names.emplace_back(1, static_cast<char>('a' + i));
    } else {
      names.push_back("a" + std::to_string(i + 1));
    }
  }
  return names;
}

std::string render(FreeWord const& w, std::span<std::string const> names) {
  if (names.size() < w.rank()) {
    throw PreconditionError("not enough generator names to render word");
  }
  if (w.is_identity()) {
    return "1";
  }
  std::string out;
  for (Letter l : w.letters()) {
    if (!out.empty()) {
      out += ' ';
    }
    auto const& name = names[static_cast<std::size_t>(l.gen - 1)];
    if (l.sign > 0) {
      out += name;
    } else if (auto upper = uppercase_inverse(name, names); !upper.empty()) {
      out += upper;
    } else {
      out += name + "^-1";
    }
  }
  return out;
}

std::string render(FreeWord const& w) {
  auto const names = default_names(w.rank());
  return render(w, names);
}

}  // namespace invqm
