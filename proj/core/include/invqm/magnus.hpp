#pragma once

#include <cstddef>
#include <vector>

#include "invqm/linalg.hpp"
#include "invqm/rational.hpp"
#include "invqm/word.hpp"

namespace invqm {

/// Element of the exterior square of Q^n, stored as one coefficient per
/// pair (i < j) in lexicographic order.
struct WedgeVec {
  std::size_t rank = 0;
  VecQ        coeffs;

  explicit WedgeVec(std::size_t n) : rank(n), coeffs(choose2(n)) {}
  WedgeVec(std::size_t n, VecQ c);

  /// e_i ^ e_j for 1-based i < j.
  static WedgeVec basis(std::size_t n, std::size_t i, std::size_t j);

  /// Coefficient of e_i ^ e_j; for i > j returns minus the (j, i) entry.
  [[nodiscard]] Rat at(std::size_t i, std::size_t j) const;
  [[nodiscard]] bool is_zero() const;

  WedgeVec& operator+=(WedgeVec const& other);
  WedgeVec& operator-=(WedgeVec const& other);
  WedgeVec& operator*=(Rat const& s);
  friend WedgeVec operator+(WedgeVec a, WedgeVec const& b) { return a += b; }
  friend WedgeVec operator-(WedgeVec a, WedgeVec const& b) { return a -= b; }
  friend WedgeVec operator*(Rat const& s, WedgeVec a) { return a *= s; }
  friend bool operator==(WedgeVec const&, WedgeVec const&) = default;
};

/// u ^ v for vectors of length n.
WedgeVec wedge(VecQ const& u, VecQ const& v);

/// Degree-2 coefficients of the truncated Magnus expansion.
struct QuadCoeffs {
  MatQ matrix;
};

/// A linear functional on the exterior square: the pairing with its dual
/// coefficients. On [F_n, F_n] it defines an F_n-invariant homomorphism.
struct InvariantHom {
  std::size_t rank = 0;
  VecQ        coeffs;

  explicit InvariantHom(std::size_t n) : rank(n), coeffs(choose2(n)) {}
  InvariantHom(std::size_t n, VecQ c);

  /// The dual basis element alpha_{i,j}: 1 on [a_i, a_j], 0 on the other
  /// basic commutators.
  static InvariantHom alpha(std::size_t n, std::size_t i, std::size_t j);

  /// <this, v>
  [[nodiscard]] Rat pair(WedgeVec const& v) const;

  InvariantHom& operator+=(InvariantHom const& other);
  InvariantHom& operator*=(Rat const& s);
  friend InvariantHom operator+(InvariantHom a, InvariantHom const& b) { return a += b; }
  friend InvariantHom operator*(Rat const& s, InvariantHom a) { return a *= s; }
  friend bool operator==(InvariantHom const&, InvariantHom const&) = default;
};

/// Signed exponent sums as an integer vector.
VecZ abelianize(FreeWord const& w);
VecQ abelianize_q(FreeWord const& w);

/// Image of w under a_i -> 1 + x_i, a_i^-1 -> 1 - x_i + x_i^2 in the free
/// associative algebra truncated above degree 2.
std::pair<VecQ, QuadCoeffs> magnus_deg2(FreeWord const& w);

/// Class of w in gamma_2 / gamma_3 = exterior square, normalized so that
/// [a_k, a_l] maps to e_k ^ e_l. Computed from the Magnus coefficients as
/// (Q_ij - Q_ji) / 2. Throws PreconditionError when w is not in [F_n, F_n].
WedgeVec wedge_class(FreeWord const& w);

/// Same class by direct enumeration of letter pairs:
/// 1/2 sum_{p<q} eps_p eps_q e_{s_p} ^ e_{s_q}. Independent check of
/// wedge_class; throws PreconditionError when w is not in [F_n, F_n].
WedgeVec pair_sum_class(FreeWord const& w);

/// The pair-sum quadratic class without the commutator subgroup
/// precondition. For products it satisfies
///   q(uv) = q(u) + q(v) + 1/2 ab(u) ^ ab(v).
WedgeVec quadratic_class(FreeWord const& w);

/// alpha_{i,j}(w) for w in [F_n, F_n].
Rat alpha_eval(std::size_t i, std::size_t j, FreeWord const& w);
/// phi(w) for w in [F_n, F_n].
Rat hom_eval(InvariantHom const& phi, FreeWord const& w);

}  // namespace invqm
