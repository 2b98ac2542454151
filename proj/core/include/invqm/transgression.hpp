#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <utility>

#include "invqm/linalg.hpp"
#include "invqm/magnus.hpp"

namespace invqm {

/// Set-theoretic section Z^n -> F_n, m -> a_1^{m_1} ... a_n^{m_n}.
class StandardSection {
 public:
  explicit StandardSection(std::size_t rank) : _rank(rank) {}

  [[nodiscard]] std::size_t rank() const noexcept { return _rank; }
  [[nodiscard]] FreeWord operator()(VecZ const& m) const;

 private:
  std::size_t _rank;
};

/// Extension of f from [F_n, F_n] to all of F_n along the standard section:
/// F(g) = f(g s(ab g)^-1).
Rat lift_F(InvariantHom const& f, FreeWord const& g);

/// The 2-cochain alpha(x, y) = dF(s(x), s(y)) on Gamma = Z^n with the
/// coboundary convention dF(g1, g2) = F(g1) - F(g1 g2) + F(g2). For an
/// invariant homomorphism f this is an honest 2-cocycle representing the
/// transgression of f in H^2(Z^n).
Rat transgress(InvariantHom const& f, VecZ const& x, VecZ const& y);

/// Memoized cocycle for repeated evaluation. Concurrent calls are safe and
/// return identical values.
class TransgressionCocycle {
 public:
  explicit TransgressionCocycle(InvariantHom f) : _f(std::move(f)) {}

  [[nodiscard]] InvariantHom const& hom() const noexcept { return _f; }
  Rat operator()(VecZ const& x, VecZ const& y) const;

  /// (d alpha)(x, y, z) = alpha(y, z) - alpha(x + y, z) + alpha(x, y + z) - alpha(x, y)
  Rat coboundary(VecZ const& x, VecZ const& y, VecZ const& z) const;

  [[nodiscard]] std::size_t memo_size() const;

 private:
  InvariantHom                                  _f;
  mutable std::mutex                            _mutex;
  mutable std::map<std::pair<VecZ, VecZ>, Rat>  _memo;
};

/// alpha(y, x) - alpha(x, y). With the coboundary convention above this
/// equals f([s(x), s(y)]), the value on the commutator of the lifts.
Rat antisym_pairing(InvariantHom const& f, VecZ const& x, VecZ const& y);

/// n x n skew matrix of antisym_pairing on the standard basis. For
/// f = sum c_ij alpha_ij it is the skew matrix with (i, j) entry c_ij.
MatQ cup_class_matrix(InvariantHom const& f);

/// Rank of the linear map f -> cup_class_matrix(f) on the C(n,2)-dimensional
/// space of invariant homomorphisms. Full rank certifies that the
/// transgression is injective.
std::size_t cup_map_rank(std::size_t n);

}  // namespace invqm
