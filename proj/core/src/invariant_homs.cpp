#include "invqm/invariant_homs.hpp"

#include <algorithm>

#include "invqm/error.hpp"
#include "invqm/quotient.hpp"

namespace invqm {

namespace {

  // Nonzero rows of the RREF of the given vectors.
  std::vector<VecQ> echelon_basis(std::vector<VecQ> const& vectors, std::size_t width) {
    MatQ m(vectors.size(), width);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      for (std::size_t j = 0; j < width; ++j) {
        m(i, j) = vectors[i][j];
      }
    }
    auto const [r, pivots] = rref(m);
    std::vector<VecQ> out;
    out.reserve(pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      out.push_back(r.row(k));
    }
    return out;
  }

  // Integer basis of {c : c M = 0}: rows of U matching zero rows of D.
  std::vector<VecZ> left_kernel(MatZ const& m) {
    std::vector<VecZ> out;
    if (m.rows() == 0) {
      return out;
    }
    auto const s = smith_normal_form(m);
    for (std::size_t k = 0; k < m.rows(); ++k) {
      bool const zero_row = k >= m.cols() || s.D(k, k) == 0;
      if (zero_row) {
        out.push_back(s.U.row(k));
      }
    }
    return out;
  }

}  // namespace

ConstraintSpace constraint_space(Presentation const& p) {
  p.validate();
  std::size_t const n = p.rank();
  std::vector<VecQ> generators;

  for (auto const& r : p.relators) {
    auto const ab = abelianize_q(r);
    bool const trivial = std::all_of(ab.begin(), ab.end(), [](Rat const& x) { return x == 0; });
    if (trivial) {
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      VecQ e(n);
      e[j] = 1;
      generators.push_back(wedge(e, ab).coeffs);
    }
  }

  std::vector<WedgeVec> classes;
  classes.reserve(p.relators.size());
  for (auto const& r : p.relators) {
    classes.push_back(quadratic_class(r));
  }
  for (auto const& c : left_kernel(relator_matrix(p))) {
    WedgeVec combo(n);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] != 0) {
        combo += Rat(c[i]) * classes[i];
      }
    }
    generators.push_back(std::move(combo.coeffs));
  }

  ConstraintSpace w;
  w.rank = n;
  for (auto& v : echelon_basis(generators, choose2(n))) {
    w.basis.emplace_back(n, std::move(v));
  }
  return w;
}

std::size_t inv_hom_dim(Presentation const& p) {
  return choose2(p.rank()) - constraint_space(p).dim();
}

InvHomSpace inv_hom_basis(Presentation const& p) {
  auto const w = constraint_space(p);
  std::size_t const n = p.rank();
  MatQ m(w.dim(), choose2(n));
  for (std::size_t i = 0; i < w.dim(); ++i) {
    for (std::size_t j = 0; j < choose2(n); ++j) {
      m(i, j) = w.basis[i].coeffs[j];
    }
  }
  InvHomSpace space;
  for (auto& v : echelon_basis(kernel_basis(m), choose2(n))) {
    space.basis.emplace_back(n, std::move(v));
  }
  space.dimension = space.basis.size();
  return space;
}

std::optional<VecZ> relator_combination(Presentation const& p, FreeWord const& w) {
  if (w.rank() != p.rank()) {
    throw PreconditionError("word rank does not match presentation");
  }
  auto const ab = abelianize(w);
  std::size_t const m = p.relators.size();
  std::size_t const n = p.rank();
  if (m == 0) {
    if (std::all_of(ab.begin(), ab.end(), [](Int const& x) { return x == 0; })) {
      return VecZ{};
    }
    return std::nullopt;
  }
  // c M = b  <=>  (c U^-1) D = b V  with U M V = D.
  auto const s = smith_normal_form(relator_matrix(p));
  VecZ bv(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      bv[j] += ab[k] * s.V(k, j);
    }
  }
  VecZ y(m);
  for (std::size_t j = 0; j < n; ++j) {
    Int const d = j < m ? s.D(j, j) : Int(0);
    if (d == 0) {
      if (bv[j] != 0) {
        return std::nullopt;
      }
      continue;
    }
    if (!mpz_divisible_p(bv[j].get_mpz_t(), d.get_mpz_t())) {
      return std::nullopt;
    }
    y[j] = bv[j] / d;
  }
  VecZ c(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      c[i] += y[k] * s.U(k, i);
    }
  }
  return c;
}

Rat evaluate_on_quotient(InvariantHom const& phi, FreeWord const& w, Presentation const& p) {
  if (phi.rank != p.rank()) {
    throw PreconditionError("homomorphism rank does not match presentation");
  }
  for (auto const& b : constraint_space(p).basis) {
    if (phi.pair(b) != 0) {
      throw PreconditionError("functional does not annihilate the relator constraints");
    }
  }
  auto const c = relator_combination(p, w);
  if (!c) {
    throw PreconditionError("word does not represent an element of [G, G]");
  }
  FreeWord lifted = w;
  for (std::size_t i = 0; i < c->size(); ++i) {
    if ((*c)[i] != 0) {
      if (!(*c)[i].fits_slong_p()) {
        throw PreconditionError("relator exponent too large");
      }
      lifted = multiply(lifted, power(p.relators[i], -(*c)[i].get_si()));
    }
  }
  return hom_eval(phi, lifted);
}

}  // namespace invqm
