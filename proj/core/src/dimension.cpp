#include "invqm/dimension.hpp"

#include <sstream>

#include "invqm/error.hpp"
#include "invqm/invariant_homs.hpp"

namespace invqm {

std::string_view to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::equality:
      return "equality";
    case BoundStatus::upper_bound:
      return "upper_bound";
    case BoundStatus::unknown:
      return "unknown";
  }
  return "unknown";
}

std::string_view to_string(HypothesisState s) {
  switch (s) {
    case HypothesisState::automatic:
      return "automatic";
    case HypothesisState::asserted:
      return "asserted";
    case HypothesisState::unknown:
      return "unknown";
  }
  return "unknown";
}

Hypotheses Hypotheses::for_presentation(bool assert_hyperbolic) {
  Hypotheses h;
  h.comparison_surjective
      = assert_hyperbolic ? HypothesisState::asserted : HypothesisState::unknown;
  return h;
}

namespace {

  std::string describe(AbelianQuotient const& q) {
    std::ostringstream out;
    out << "Z^" << q.free_rank;
    for (auto const& t : q.torsion) {
      out << " x Z/" << t.get_str();
    }
    return out.str();
  }

  void note_hypotheses(DimensionReport& r) {
    auto const& h = r.hypotheses;
    std::string line = "quotient boundedly 3-acyclic: ";
    line += to_string(h.quotient_boundedly_3_acyclic);
    if (h.quotient_boundedly_3_acyclic == HypothesisState::automatic) {
      line += " (" + h.acyclicity_reason + ")";
    }
    r.provenance.push_back(line);
    r.provenance.push_back(std::string("comparison map H^2_b(G) -> H^2(G) surjective: ")
                           + std::string(to_string(h.comparison_surjective)));
  }

  long as_long(std::size_t x) { return static_cast<long>(x); }

  // Shared gate for the semidirect shapes: equalities need the asserted
  // hyperbolicity of G, upper bounds need only bounded 3-acyclicity.
  DimensionReport semidirect_report(SemidirectQuotient const& gamma,
                                    std::string const& kind,
                                    std::string const& monodromy_condition) {
    std::size_t const k1 = gamma.fixed_dim();
    std::size_t const k2 = gamma.wedge_fixed_dim();
    std::size_t const h2g = h2_dim_total_space(gamma);

    DimensionReport r;
    r.hypotheses.acyclicity_reason = "solvable quotient Z^n x Z";
    r.hypotheses.comparison_surjective = gamma.hyperbolicity_asserted()
                                             ? HypothesisState::asserted
                                             : HypothesisState::unknown;
    r.h2_gamma = k1 + k2;
    r.h2_g     = h2g;

    // The second space is H^2(G) itself in both shapes: dim Ker(I - A) plus
    // the fibre class for surfaces.
    long const second = as_long(h2g);
    long const h1_bound
        = gamma.shape() == TorusShape::surface ? as_long(k2) - 1 : as_long(k2);

    auto const status = gamma.hyperbolicity_asserted() ? BoundStatus::equality
                                                       : BoundStatus::upper_bound;
    r.q_mod_ext    = {as_long(r.h2_gamma), status};
    r.q_mod_h1_ext = {second, status};
    r.h1_ng        = {h1_bound, status};

    r.provenance.push_back(kind + ": n = " + std::to_string(gamma.n())
                           + ", dim Ker(I - A) = " + std::to_string(k1)
                           + ", dim Ker(I - wedge^2 A) = " + std::to_string(k2));
    r.provenance.push_back("dim H^2(Gamma) = dim Ker(I - A) + dim Ker(I - wedge^2 A) = "
                           + std::to_string(r.h2_gamma));
    r.provenance.push_back("dim H^2(G) = " + std::to_string(h2g));
    note_hypotheses(r);
    if (gamma.hyperbolicity_asserted()) {
      r.provenance.push_back(monodromy_condition + " asserted: G hyperbolic, values are equalities");
    } else {
      r.provenance.push_back(monodromy_condition
                             + " not asserted: q_mod_ext <= dim H^2(Gamma) and "
                               "q_mod_h1_ext <= dim H^2(G) are upper bounds");
    }
    return r;
  }

  std::size_t require(std::optional<std::size_t> const& v, char const* what) {
    if (!v) {
      throw PreconditionError(std::string("preset requires --") + what);
    }
    return *v;
  }

  Presentation with_default_names(std::size_t n) {
    Presentation p;
    for (std::size_t i = 1; i <= n; ++i) {
      p.names.push_back("a" + std::to_string(i));
    }
    return p;
  }

  FreeWord gen(std::size_t n, std::size_t i) { return FreeWord::generator(n, static_cast<int>(i)); }

}  // namespace

DimensionReport analyze_presentation(Presentation const& p, bool assert_hyperbolic) {
  return analyze_presentation(p, Hypotheses::for_presentation(assert_hyperbolic));
}

DimensionReport analyze_presentation(Presentation const& p, Hypotheses const& h) {
  auto const gamma = abelian_quotient(p);
  std::size_t const h2 = h2_dim(gamma);
  std::size_t const h1ng = inv_hom_dim(p);

  DimensionReport r;
  r.hypotheses = h;
  r.h2_gamma   = h2;
  r.h1_ng      = {as_long(h1ng), BoundStatus::equality};

  long const first  = as_long(h2);
  long const second = as_long(h2) - as_long(h1ng);

  r.provenance.push_back("Gamma = G/[G,G] = " + describe(gamma) + ", dim H^2(Gamma) = "
                         + std::to_string(h2));
  r.provenance.push_back("dim H^1(N)^G = C(n,2) - dim W = " + std::to_string(h1ng)
                         + " (invariant homomorphisms killing the relator constraints)");
  note_hypotheses(r);

  if (h.quotient_boundedly_3_acyclic == HypothesisState::unknown) {
    r.q_mod_ext    = {first, BoundStatus::unknown};
    r.q_mod_h1_ext = {second, BoundStatus::unknown};
    r.provenance.push_back("quotient acyclicity unknown: no bound is claimed");
    return r;
  }
  if (h.comparison_surjective != HypothesisState::unknown) {
    r.q_mod_ext    = {first, BoundStatus::equality};
    r.q_mod_h1_ext = {second, BoundStatus::equality};
    r.provenance.push_back(
        "surjective comparison map: q_mod_ext = dim H^2(Gamma), "
        "q_mod_h1_ext = dim H^2(Gamma) - dim H^1(N)^G");
  } else if (h1ng == h2 && h.n_is_commutator_subgroup) {
    r.q_mod_ext    = {first, BoundStatus::equality};
    r.q_mod_h1_ext = {0, BoundStatus::equality};
    r.provenance.push_back(
        "squeeze: H^1(N)^G injects into Q(N)^G/i*Q(G) and dim H^1(N)^G = dim H^2(Gamma), "
        "so both values are exact without a comparison-map hypothesis");
  } else {
    r.q_mod_ext    = {first, BoundStatus::upper_bound};
    r.q_mod_h1_ext = {second, BoundStatus::upper_bound};
    r.provenance.push_back(
        "comparison map not asserted surjective: values are upper bounds "
        "(q_mod_ext >= dim H^1(N)^G = " + std::to_string(h1ng) + ")");
  }
  return r;
}

DimensionReport analyze_mapping_torus(SemidirectQuotient const& gamma) {
  if (gamma.shape() != TorusShape::surface) {
    throw PreconditionError("analyze_mapping_torus needs the surface shape");
  }
  if (gamma.genus() < 2) {
    throw PreconditionError("surface bundles need genus l > 1");
  }
  return semidirect_report(gamma, "surface bundle, genus " + std::to_string(gamma.genus()),
                           "pseudo-Anosov monodromy");
}

DimensionReport analyze_free_by_cyclic(SemidirectQuotient const& gamma) {
  if (gamma.shape() != TorusShape::free) {
    throw PreconditionError("analyze_free_by_cyclic needs the free shape");
  }
  if (gamma.n() < 2) {
    throw PreconditionError("free-by-cyclic groups need rank n > 1");
  }
  return semidirect_report(gamma, "free-by-cyclic", "atoroidal automorphism");
}

Presentation free_group_presentation(std::size_t n) {
  if (n < 1) {
    throw PreconditionError("free group rank must be at least 1");
  }
  return with_default_names(n);
}

Presentation surface_presentation(std::size_t l) {
  if (l < 1) {
    throw PreconditionError("surface genus must be at least 1");
  }
  std::size_t const n = 2 * l;
  Presentation p = with_default_names(n);
  FreeWord r(n);
  for (std::size_t i = 1; i < n; i += 2) {
    r = r * commutator(gen(n, i), gen(n, i + 1));
  }
  p.relators.push_back(r);
  return p;
}

Presentation one_relator_power_presentation(std::size_t n, std::size_t k) {
  if (n < 2 || k < 1) {
    throw PreconditionError("one-relator power needs n >= 2 and k >= 1");
  }
  Presentation p = with_default_names(n);
  p.relators.push_back(power(commutator(gen(n, 1), gen(n, 2)), static_cast<long>(k)));
  return p;
}

Presentation remark_group_presentation(std::size_t k) {
  if (k < 1) {
    throw PreconditionError("remark group needs k >= 1");
  }
  std::size_t const n = 2 * k;
  Presentation p = with_default_names(n);
  for (std::size_t i = 1; i < n; i += 2) {
    p.relators.push_back(power(commutator(gen(n, i), gen(n, i + 1)), 2));
  }
  return p;
}

Presentation circle_bundle_presentation(std::size_t l, long euler) {
  if (l < 1) {
    throw PreconditionError("circle bundle base genus must be at least 1");
  }
  std::size_t const n = 2 * l + 1;
  Presentation p = with_default_names(n);
  FreeWord fibre = gen(n, n);
  FreeWord surface(n);
  for (std::size_t i = 1; i < 2 * l; i += 2) {
    surface = surface * commutator(gen(n, i), gen(n, i + 1));
  }
  // [a1,a2]...[a_{2l-1},a_{2l}] = a_{2l+1}^{-e}
  p.relators.push_back(surface * power(fibre, euler));
  for (std::size_t i = 1; i <= 2 * l; ++i) {
    p.relators.push_back(commutator(gen(n, i), fibre));
  }
  return p;
}

std::vector<std::string> preset_names() {
  return {"free",         "surface",          "torelli_torus", "free_torus",
          "one_relator_power", "remark_group", "circle_bundle"};
}

DimensionReport preset(std::string_view name, PresetParams const& params) {
  DimensionReport r;
  if (name == "free") {
    // Free groups are hyperbolic.
    r = analyze_presentation(free_group_presentation(require(params.rank, "rank")), true);
  } else if (name == "surface") {
    std::size_t const l = require(params.genus, "genus");
    r = analyze_presentation(surface_presentation(l), true);
  } else if (name == "torelli_torus") {
    std::size_t const l = require(params.genus, "genus");
    r = analyze_mapping_torus(
        SemidirectQuotient(TorusShape::surface, MatZ::identity(2 * l), true));
  } else if (name == "free_torus") {
    if (!params.matrix) {
      throw PreconditionError("preset requires --matrix");
    }
    r = analyze_free_by_cyclic(
        SemidirectQuotient(TorusShape::free, *params.matrix, params.assert_hyperbolic));
  } else if (name == "one_relator_power") {
    std::size_t const n = require(params.rank, "rank");
    std::size_t const k = require(params.power, "power");
    if (k < 2) {
      throw PreconditionError("one_relator_power needs k >= 2 (torsion)");
    }
    // One-relator groups with torsion are hyperbolic.
    r = analyze_presentation(one_relator_power_presentation(n, k), true);
  } else if (name == "remark_group") {
    // Free products of hyperbolic one-relator groups with torsion.
    r = analyze_presentation(remark_group_presentation(require(params.power, "power")), true);
  } else if (name == "circle_bundle") {
    std::size_t const l = require(params.genus, "genus");
    if (!params.euler || *params.euler == 0) {
      throw PreconditionError("circle_bundle requires a nonzero --euler number");
    }
    if (l < 2) {
      throw PreconditionError("circle_bundle requires genus l > 1");
    }
    r = analyze_presentation(circle_bundle_presentation(l, *params.euler), false);
  } else {
    throw PreconditionError("unknown preset '" + std::string(name) + "'");
  }
  r.provenance.insert(r.provenance.begin(), "preset: " + std::string(name));
  return r;
}

}  // namespace invqm
