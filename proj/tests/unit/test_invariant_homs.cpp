#include <doctest.h>

#include "invqm/dimension.hpp"
#include "invqm/error.hpp"
#include "invqm/invariant_homs.hpp"
#include "oracles.hpp"

using namespace invqm;
using namespace invqm::testing;

namespace {

WedgeVec surface_vector(std::size_t l) {
  WedgeVec v(2 * l);
  for (std::size_t i = 1; i <= l; ++i) {
    v += WedgeVec::basis(2 * l, 2 * i - 1, 2 * i);
  }
  return v;
}

/// Span test: appending v to the basis does not raise the rank.
bool in_span(std::vector<WedgeVec> const& basis, WedgeVec const& v) {
  MatQ m(basis.size() + 1, v.coeffs.size());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t c = 0; c < v.coeffs.size(); ++c) {
      m(r, c) = basis[r].coeffs[c];
    }
  }
  for (std::size_t c = 0; c < v.coeffs.size(); ++c) {
    m(basis.size(), c) = v.coeffs[c];
  }
  return rank_by_gauss(m) == basis.size();
}

/// Random product of conjugated relators and their inverses.
FreeWord random_relator_product(Rng& rng, Presentation const& p, std::size_t factors) {
  FreeWord out(p.rank());
  for (std::size_t k = 0; k < factors; ++k) {
    auto const& r = p.relators[uniform(rng, 0, p.relators.size() - 1)];
    auto const g  = random_word(rng, p.rank(), 6);
    out           = out * conjugate(g, uniform(rng, 0, 1) == 0 ? r : invert(r));
  }
  return out;
}

}  // namespace

TEST_SUITE("invariant_homs") {
  TEST_CASE("free groups have no constraints") {
    for (std::size_t n = 2; n <= 5; ++n) {
      auto const p = free_group_presentation(n);
      CHECK(constraint_space(p).dim() == 0);
      CHECK(inv_hom_dim(p) == choose2(n));
      auto const b = inv_hom_basis(p);
      REQUIRE(b.basis.size() == choose2(n));
      std::size_t k = 0;
      for (auto const& [i, j] : pairs(n)) {
        CHECK(b.basis[k++] == InvariantHom::alpha(n, i, j));
      }
    }
  }

  TEST_CASE("surface groups: the constraint space is the symplectic vector") {
    for (std::size_t l = 2; l <= 4; ++l) {
      auto const p = surface_presentation(l);
      auto const w = constraint_space(p);
      REQUIRE(w.dim() == 1);
      CHECK(in_span(w.basis, surface_vector(l)));
      CHECK(inv_hom_dim(p) == l * (2 * l - 1) - 1);
    }
  }

  TEST_CASE("circle bundles") {
    for (auto const& [l, n] : {std::pair{2L, 1L}, {2L, 3L}, {3L, 2L}, {2L, -1L}}) {
      auto const p = circle_bundle_presentation(static_cast<std::size_t>(l), n);
      auto const w = constraint_space(p);
      CHECK(w.dim() == static_cast<std::size_t>(2 * l));
      CHECK(inv_hom_dim(p) == static_cast<std::size_t>(l * (2 * l + 1) - 2 * l));
      for (long j = 1; j <= 2 * l; ++j) {
        CHECK(in_span(w.basis, WedgeVec::basis(static_cast<std::size_t>(2 * l + 1),
                                               static_cast<std::size_t>(j),
                                               static_cast<std::size_t>(2 * l + 1))));
      }
    }
  }

  TEST_CASE("one relator powers and their free products") {
    for (std::size_t n = 2; n <= 4; ++n) {
      for (std::size_t k = 1; k <= 3; ++k) {
        CHECK(inv_hom_dim(one_relator_power_presentation(n, k)) == choose2(n) - 1);
      }
    }
    for (std::size_t k = 1; k <= 3; ++k) {
      CHECK(inv_hom_dim(remark_group_presentation(k)) == choose2(2 * k) - k);
    }
  }

  TEST_CASE("relators deep in the lower central series impose nothing") {
    auto const p = parse_presentation("gens: a, b, c\nrel: [a,[b,c]]\nrel: [[a,b],[a,c]]\nrel: [c,[c,[a,b]]]\n");
    CHECK(inv_hom_dim(p) == 3);
  }

  TEST_CASE("relators with nonzero abelianization") {
    // <a, b | a>: N = [G,G] is trivial.
    CHECK(inv_hom_dim(parse_presentation("gens: a, b\nrel: a\n")) == 0);
    // Z^2 x Z/2 style: a^2 alone kills e_1 ^ e_j.
    CHECK(inv_hom_dim(parse_presentation("gens: a, b, c\nrel: a^2\n")) == 1);
    // Two relators with dependent abelianizations combine into a new class.
    auto const p = parse_presentation("gens: a, b, c\nrel: a b\nrel: b a\n");
    CHECK(inv_hom_dim(p) == 1);
  }

  TEST_CASE("basis annihilates constraints exactly") {
    for (auto const& p : {surface_presentation(3), circle_bundle_presentation(2, 5),
                          remark_group_presentation(2),
                          parse_presentation("gens: a, b, c, d\nrel: a^3 [b,c]\nrel: [a,d]^2 b^2\n")}) {
      auto const b = inv_hom_basis(p);
      auto const w = constraint_space(p);
      CHECK(b.dimension + w.dim() == choose2(p.rank()));
      CHECK(b.basis.size() == b.dimension);
      for (auto const& phi : b.basis) {
        for (auto const& c : w.basis) {
          CHECK(phi.pair(c) == 0);
        }
      }
    }
  }

  TEST_CASE("adding a relator never raises the dimension") {
    auto rng = make_rng(51);
    for (int t = 0; t < 20; ++t) {
      Presentation p{{"a", "b", "c", "d"}, {}};
      std::size_t prev = inv_hom_dim(p);
      for (int k = 0; k < 4; ++k) {
        p.relators.push_back(random_word(rng, 4, 10));
        auto const d = inv_hom_dim(p);
        CHECK(d <= prev);
        prev = d;
      }
    }
  }

  TEST_CASE("evaluation on the quotient is independent of the lift") {
    auto rng = make_rng(52);
    std::vector<Presentation> const groups{
        surface_presentation(2),
        parse_presentation("gens: a, b, c\nrel: [a,b]^2 [a,[a,c]]\n"),
        circle_bundle_presentation(2, 3),
        parse_presentation("gens: a, b, c, d\nrel: a^2 b\nrel: c^3\n"),
    };
    for (auto const& p : groups) {
      auto const basis = inv_hom_basis(p).basis;
      REQUIRE_FALSE(basis.empty());
      for (auto const& r : p.relators) {
        if (relator_combination(p, r)) {
          for (auto const& phi : basis) {
            CHECK(evaluate_on_quotient(phi, r, p) == 0);
          }
        }
      }
      for (int t = 0; t < 25; ++t) {
        auto const w   = random_commutator_word(rng, p.rank(), 16);
        auto const phi = basis[uniform(rng, 0, basis.size() - 1)];
        auto const rel = random_relator_product(rng, p, uniform(rng, 1, 3));
        Rat const base = evaluate_on_quotient(phi, w, p);
        CHECK(evaluate_on_quotient(phi, w * rel, p) == base);
        CHECK(evaluate_on_quotient(phi, rel * w, p) == base);
      }
    }
  }

  TEST_CASE("evaluation reduces to hom_eval without relators") {
    auto rng = make_rng(53);
    auto const p = free_group_presentation(3);
    for (int t = 0; t < 20; ++t) {
      auto const w = random_commutator_word(rng, 3, 20);
      CHECK(evaluate_on_quotient(InvariantHom::alpha(3, 1, 3), w, p) == alpha_eval(1, 3, w));
    }
    CHECK_THROWS_AS(evaluate_on_quotient(InvariantHom::alpha(3, 1, 3), FreeWord::generator(3, 1), p),
                    PreconditionError);
  }

  TEST_CASE("evaluation rejects functionals that do not descend") {
    auto const p = surface_presentation(2);
    CHECK_THROWS_AS(evaluate_on_quotient(InvariantHom::alpha(4, 1, 2), FreeWord(4), p), PreconditionError);
  }
}
