#include "invqm/transgression.hpp"

#include "invqm/error.hpp"

namespace invqm {

FreeWord StandardSection::operator()(VecZ const& m) const {
  if (m.size() != _rank) {
    throw PreconditionError("section argument has the wrong length");
  }
  FreeWord w(_rank);
  for (std::size_t i = 0; i < _rank; ++i) {
    if (m[i] == 0) {
      continue;
    }
    if (!m[i].fits_slong_p()) {
      throw PreconditionError("section exponent too large");
    }
    w = w * power(FreeWord::generator(_rank, static_cast<int>(i + 1)), m[i].get_si());
  }
  return w;
}

Rat lift_F(InvariantHom const& f, FreeWord const& g) {
  if (f.rank != g.rank()) {
    throw PreconditionError("rank mismatch between homomorphism and word");
  }
  StandardSection const s(g.rank());
  return hom_eval(f, g * invert(s(abelianize(g))));
}

namespace {
  VecZ add(VecZ const& x, VecZ const& y) {
    if (x.size() != y.size()) {
      throw PreconditionError("vector length mismatch");
    }
    VecZ out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      out[i] = x[i] + y[i];
    }
    return out;
  }
}  // namespace

Rat transgress(InvariantHom const& f, VecZ const& x, VecZ const& y) {
  if (x.size() != f.rank || y.size() != f.rank) {
    throw PreconditionError("cocycle arguments must lie in Z^n");
  }
  StandardSection const s(f.rank);
  FreeWord const sx = s(x);
  FreeWord const sy = s(y);
  return lift_F(f, sx) - lift_F(f, sx * sy) + lift_F(f, sy);
}

Rat TransgressionCocycle::operator()(VecZ const& x, VecZ const& y) const {
  auto key = std::make_pair(x, y);
  {
    std::lock_guard<std::mutex> lock(_mutex);
    if (auto it = _memo.find(key); it != _memo.end()) {
      return it->second;
    }
  }
  Rat value = transgress(_f, x, y);
  std::lock_guard<std::mutex> lock(_mutex);
  _memo.emplace(std::move(key), value);
  return value;
}

Rat TransgressionCocycle::coboundary(VecZ const& x, VecZ const& y, VecZ const& z) const {
  auto const& a = *this;
  return a(y, z) - a(add(x, y), z) + a(x, add(y, z)) - a(x, y);
}

std::size_t TransgressionCocycle::memo_size() const {
  std::lock_guard<std::mutex> lock(_mutex);
  return _memo.size();
}

Rat antisym_pairing(InvariantHom const& f, VecZ const& x, VecZ const& y) {
  return transgress(f, y, x) - transgress(f, x, y);
}

MatQ cup_class_matrix(InvariantHom const& f) {
  std::size_t const n = f.rank;
  MatQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        continue;
      }
      VecZ ei(n);
      VecZ ej(n);
      ei[i] = 1;
      ej[j] = 1;
      m(i, j) = antisym_pairing(f, ei, ej);
    }
  }
  return m;
}

std::size_t cup_map_rank(std::size_t n) {
  // Columns indexed by the alpha basis, rows by matrix entries.
  auto const ps = pairs(n);
  MatQ map(n * n, ps.size());
  for (std::size_t c = 0; c < ps.size(); ++c) {
    auto const cup = cup_class_matrix(InvariantHom::alpha(n, ps[c].first, ps[c].second));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        map(i * n + j, c) = cup(i, j);
      }
    }
  }
  return rank(map);
}

}  // namespace invqm
