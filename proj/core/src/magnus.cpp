#include "invqm/magnus.hpp"

#include <algorithm>

#include "invqm/error.hpp"

namespace invqm {

WedgeVec::WedgeVec(std::size_t n, VecQ c) : rank(n), coeffs(std::move(c)) {
  if (coeffs.size() != choose2(n)) {
    throw PreconditionError("wedge vector length does not match C(n,2)");
  }
}

WedgeVec WedgeVec::basis(std::size_t n, std::size_t i, std::size_t j) {
  WedgeVec v(n);
  v.coeffs[pair_index(n, i, j)] = 1;
  return v;
}

Rat WedgeVec::at(std::size_t i, std::size_t j) const {
  if (i == j) {
    return 0;
  }
  if (i > j) {
    return -coeffs[pair_index(rank, j, i)];
  }
  return coeffs[pair_index(rank, i, j)];
}

bool WedgeVec::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](Rat const& x) { return x == 0; });
}

WedgeVec& WedgeVec::operator+=(WedgeVec const& other) {
  if (other.rank != rank) {
    throw PreconditionError("rank mismatch in wedge sum");
  }
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    coeffs[k] += other.coeffs[k];
  }
  return *this;
}

WedgeVec& WedgeVec::operator-=(WedgeVec const& other) {
  if (other.rank != rank) {
    throw PreconditionError("rank mismatch in wedge difference");
  }
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    coeffs[k] -= other.coeffs[k];
  }
  return *this;
}

WedgeVec& WedgeVec::operator*=(Rat const& s) {
  for (auto& c : coeffs) {
    c *= s;
  }
  return *this;
}

WedgeVec wedge(VecQ const& u, VecQ const& v) {
  if (u.size() != v.size()) {
    throw PreconditionError("wedge of vectors of different length");
  }
  std::size_t const n = u.size();
  WedgeVec w(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      w.coeffs[k] = u[i] * v[j] - u[j] * v[i];
    }
  }
  return w;
}

InvariantHom::InvariantHom(std::size_t n, VecQ c) : rank(n), coeffs(std::move(c)) {
  if (coeffs.size() != choose2(n)) {
    throw PreconditionError("invariant homomorphism length does not match C(n,2)");
  }
}

InvariantHom InvariantHom::alpha(std::size_t n, std::size_t i, std::size_t j) {
  InvariantHom h(n);
  h.coeffs[pair_index(n, i, j)] = 1;
  return h;
}

Rat InvariantHom::pair(WedgeVec const& v) const {
  if (v.rank != rank) {
    throw PreconditionError("rank mismatch between homomorphism and wedge class");
  }
  Rat s = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    s += coeffs[k] * v.coeffs[k];
  }
  return s;
}

InvariantHom& InvariantHom::operator+=(InvariantHom const& other) {
  if (other.rank != rank) {
    throw PreconditionError("rank mismatch in homomorphism sum");
  }
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    coeffs[k] += other.coeffs[k];
  }
  return *this;
}

InvariantHom& InvariantHom::operator*=(Rat const& s) {
  for (auto& c : coeffs) {
    c *= s;
  }
  return *this;
}

VecZ abelianize(FreeWord const& w) {
  VecZ v(w.rank());
  for (Letter l : w.letters()) {
    v[static_cast<std::size_t>(l.gen - 1)] += l.sign;
  }
  return v;
}

VecQ abelianize_q(FreeWord const& w) {
  VecQ v(w.rank());
  for (Letter l : w.letters()) {
    v[static_cast<std::size_t>(l.gen - 1)] += l.sign;
  }
  return v;
}

std::pair<VecQ, QuadCoeffs> magnus_deg2(FreeWord const& w) {
  std::size_t const n = w.rank();
  VecQ linear(n);
  MatQ quad(n, n);
  // (1 + L + Q)(1 + l + q) = 1 + (L + l) + (Q + q + L l) in degree <= 2.
  for (Letter letter : w.letters()) {
    auto const g = static_cast<std::size_t>(letter.gen - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (linear[i] != 0) {
        quad(i, g) += linear[i] * letter.sign;
      }
    }
    if (letter.sign < 0) {
      quad(g, g) += 1;
    }
    linear[g] += letter.sign;
  }
  return {std::move(linear), QuadCoeffs{std::move(quad)}};
}

namespace {
  void require_commutator_subgroup(FreeWord const& w, char const* op) {
    if (!is_in_commutator_subgroup(w)) {
      throw PreconditionError(std::string(op)
                              + ": word has nonzero abelianization (not in [F,F])");
    }
  }
}  // namespace

WedgeVec wedge_class(FreeWord const& w) {
  require_commutator_subgroup(w, "wedge_class");
  auto const [linear, quad] = magnus_deg2(w);
  std::size_t const n = w.rank();
  WedgeVec v(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      v.coeffs[k] = (quad.matrix(i, j) - quad.matrix(j, i)) / 2;
    }
  }
  return v;
}

WedgeVec pair_sum_class(FreeWord const& w) {
  require_commutator_subgroup(w, "pair_sum_class");
  std::size_t const n = w.rank();
  auto const letters = w.letters();
  // Raw integer tally over all position pairs p < q, halved at the end.
  std::vector<long> raw(choose2(n), 0);
  for (std::size_t p = 0; p < letters.size(); ++p) {
    for (std::size_t q = p + 1; q < letters.size(); ++q) {
      auto const sp = static_cast<std::size_t>(letters[p].gen);
      auto const sq = static_cast<std::size_t>(letters[q].gen);
      if (sp == sq) {
        continue;
      }
      long const eps = letters[p].sign * letters[q].sign;
      if (sp < sq) {
        raw[pair_index(n, sp, sq)] += eps;
      } else {
        raw[pair_index(n, sq, sp)] -= eps;
      }
    }
  }
  WedgeVec v(n);
  for (std::size_t k = 0; k < raw.size(); ++k) {
    v.coeffs[k] = Rat(raw[k], 2);
    v.coeffs[k].canonicalize();
  }
  return v;
}

WedgeVec quadratic_class(FreeWord const& w) {
  std::size_t const n = w.rank();
  // prefix[g] = signed count of generator g seen so far.
  std::vector<long> prefix(n, 0);
  std::vector<Int>  raw(choose2(n));
  for (Letter l : w.letters()) {
    auto const q = static_cast<std::size_t>(l.gen);
    for (std::size_t p = 1; p <= n; ++p) {
      long const c = prefix[p - 1];
      if (c == 0 || p == q) {
        continue;
      }
      if (p < q) {
        raw[pair_index(n, p, q)] += c * l.sign;
      } else {
        raw[pair_index(n, q, p)] -= c * l.sign;
      }
    }
    prefix[q - 1] += l.sign;
  }
  WedgeVec v(n);
  for (std::size_t k = 0; k < raw.size(); ++k) {
    v.coeffs[k] = Rat(raw[k], 2);
    v.coeffs[k].canonicalize();
  }
  return v;
}

Rat alpha_eval(std::size_t i, std::size_t j, FreeWord const& w) {
  if (i < 1 || j <= i || j > w.rank()) {
    throw PreconditionError("alpha index out of range");
  }
  return wedge_class(w).coeffs[pair_index(w.rank(), i, j)];
}

Rat hom_eval(InvariantHom const& phi, FreeWord const& w) {
  if (phi.rank != w.rank()) {
    throw PreconditionError("rank mismatch between homomorphism and word");
  }
  return phi.pair(wedge_class(w));
}

}  // namespace invqm
