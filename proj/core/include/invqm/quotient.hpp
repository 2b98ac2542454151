#pragma once

#include <cstddef>
#include <vector>

#include "invqm/linalg.hpp"
#include "invqm/presentation.hpp"

namespace invqm {

/// Z^free_rank x Z/t_1 x ... x Z/t_k with t_1 | t_2 | ... | t_k, t_i > 1.
struct AbelianQuotient {
  std::size_t free_rank = 0;
  VecZ        torsion;
};

/// Rows are the exponent-sum vectors of the relators (#relators x rank).
MatZ relator_matrix(Presentation const& p);

/// G / [G, G] for G given by a presentation, via Smith normal form.
AbelianQuotient abelian_quotient(Presentation const& p);

/// Real cohomology of a finitely generated abelian group; torsion is
/// invisible over R.
std::size_t h1_dim(AbelianQuotient const& gamma);
std::size_t h2_dim(AbelianQuotient const& gamma);

enum class TorusShape {
  surface,  ///< A is the symplectic action of a mapping class, n = 2l
  free,     ///< A is the action of an automorphism of F_n on Z^n
};

/// Z^n semidirect Z, the generator of Z acting on Z^n by A.
class SemidirectQuotient {
 public:
  /// Validates |det A| = 1 and, for the surface shape, that A is symplectic
  /// of even size. Throws PreconditionError otherwise.
  SemidirectQuotient(TorusShape shape, MatZ a, bool hyperbolicity_asserted = false);

  [[nodiscard]] TorusShape shape() const noexcept { return _shape; }
  [[nodiscard]] MatZ const& matrix() const noexcept { return _a; }
  [[nodiscard]] std::size_t n() const noexcept { return _a.rows(); }
  /// Surface genus l (n / 2); only meaningful for the surface shape.
  [[nodiscard]] std::size_t genus() const noexcept { return _a.rows() / 2; }
  /// Pseudo-Anosov (surface) or atoroidal (free) monodromy, as asserted by
  /// the caller. Never verified here.
  [[nodiscard]] bool hyperbolicity_asserted() const noexcept { return _asserted; }

  /// dim Ker(I - A)
  [[nodiscard]] std::size_t fixed_dim() const;
  /// dim Ker(I - wedge^2 A)
  [[nodiscard]] std::size_t wedge_fixed_dim() const;

 private:
  TorusShape _shape;
  MatZ       _a;
  bool       _asserted;
};

/// dim H^2(Z^n x_A Z) = dim Ker(I - A) + dim Ker(I - wedge^2 A).
std::size_t h2_dim_semidirect(SemidirectQuotient const& gamma);

/// dim H^2(G) of the total group: surface bundle over the circle gives
/// dim Ker(I - A) + 1, free-by-cyclic gives dim Ker(I - A).
std::size_t h2_dim_total_space(SemidirectQuotient const& gamma);

}  // namespace invqm
