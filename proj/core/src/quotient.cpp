#include "invqm/quotient.hpp"

#include "invqm/error.hpp"
#include "invqm/magnus.hpp"

namespace invqm {

MatZ relator_matrix(Presentation const& p) {
  MatZ m(p.relators.size(), p.rank());
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    auto const ab = abelianize(p.relators[i]);
    for (std::size_t j = 0; j < p.rank(); ++j) {
      m(i, j) = ab[j];
    }
  }
  return m;
}

AbelianQuotient abelian_quotient(Presentation const& p) {
  p.validate();
  AbelianQuotient q;
  q.free_rank = p.rank();
  if (p.relators.empty()) {
    return q;
  }
  for (auto const& d : smith_normal_form(relator_matrix(p)).diagonal()) {
    if (d != 0) {
      --q.free_rank;
      if (d > 1) {
        q.torsion.push_back(d);
      }
    }
  }
  return q;
}

std::size_t h1_dim(AbelianQuotient const& gamma) { return gamma.free_rank; }

std::size_t h2_dim(AbelianQuotient const& gamma) { return choose2(gamma.free_rank); }

SemidirectQuotient::SemidirectQuotient(TorusShape shape, MatZ a, bool hyperbolicity_asserted)
    : _shape(shape), _a(std::move(a)), _asserted(hyperbolicity_asserted) {
  if (!_a.is_square() || _a.rows() == 0) {
    throw PreconditionError("monodromy matrix must be square and nonempty");
  }
  if (abs(determinant(_a)) != 1) {
    throw PreconditionError("monodromy matrix must have determinant +-1");
  }
  if (_shape == TorusShape::surface) {
    if (_a.rows() % 2 != 0) {
      throw PreconditionError("surface monodromy must have even dimension 2l");
    }
    if (!is_symplectic(_a)) {
      throw PreconditionError("surface monodromy must be symplectic");
    }
  }
}

std::size_t SemidirectQuotient::fixed_dim() const {
  return fixed_space_dim(to_rational(_a));
}

std::size_t SemidirectQuotient::wedge_fixed_dim() const {
  return fixed_space_dim(to_rational(exterior_square(_a)));
}

std::size_t h2_dim_semidirect(SemidirectQuotient const& gamma) {
  return gamma.fixed_dim() + gamma.wedge_fixed_dim();
}

std::size_t h2_dim_total_space(SemidirectQuotient const& gamma) {
  // Surface bundles pick up the fundamental class of the fibre; for F_n the
  // fibre has no H^2 and only H^1(Z; H^1(F_n)) = coker(I - A^T) survives.
  if (gamma.shape() == TorusShape::surface) {
    return gamma.fixed_dim() + 1;
  }
  return gamma.fixed_dim();
}

}  // namespace invqm
