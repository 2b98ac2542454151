#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invqm/linalg.hpp"
#include "invqm/presentation.hpp"
#include "invqm/quotient.hpp"

namespace invqm {

enum class BoundStatus {
  equality,
  upper_bound,
  unknown,
};

std::string_view to_string(BoundStatus s);

/// A dimension together with how much of it is proved.
struct Bounded {
  long        value  = 0;
  BoundStatus status = BoundStatus::unknown;

  friend bool operator==(Bounded const&, Bounded const&) = default;
};

enum class HypothesisState {
  automatic,  ///< holds for the quotient shape (abelian, abelian-by-cyclic)
  asserted,   ///< supplied by the caller, not checked
  unknown,
};

std::string_view to_string(HypothesisState s);

/// Inputs the dimension formulas depend on but which cannot be decided
/// here.
struct Hypotheses {
  HypothesisState quotient_boundedly_3_acyclic = HypothesisState::automatic;
  std::string     acyclicity_reason            = "solvable quotient";
  /// Surjectivity of H^2_b(G) -> H^2(G); holds for Gromov hyperbolic G.
  HypothesisState comparison_surjective = HypothesisState::unknown;
  bool            n_is_commutator_subgroup = true;

  static Hypotheses for_presentation(bool assert_hyperbolic);
};

/// The two headline dimensions
///   q_mod_ext    = dim Q(N)^G / i*Q(G)
///   q_mod_h1_ext = dim Q(N)^G / (H^1(N)^G + i*Q(G))
/// with the cohomological inputs they were assembled from.
struct DimensionReport {
  Bounded                    q_mod_ext;
  Bounded                    q_mod_h1_ext;
  Bounded                    h1_ng;
  std::size_t                h2_gamma = 0;
  std::optional<std::size_t> h2_g;
  Hypotheses                 hypotheses;
  std::vector<std::string>   provenance;
};

/// (G, N) = (F_n / <<r_1, ..., r_m>>, [G, G]). Gamma is abelian, so bounded
/// 3-acyclicity is automatic. Both values are equalities when the comparison
/// map is asserted surjective, or when dim H^1(N)^G = dim H^2(Gamma) (then
/// the injection of H^1(N)^G squeezes the first value and forces the second
/// to 0); otherwise they are upper bounds.
DimensionReport analyze_presentation(Presentation const& p, Hypotheses const& h);
DimensionReport analyze_presentation(Presentation const& p, bool assert_hyperbolic = false);

/// Surface bundle over the circle with monodromy acting on H_1 by A
/// (symplectic, genus l > 1). Equalities need a pseudo-Anosov monodromy,
/// recorded by gamma.hyperbolicity_asserted().
DimensionReport analyze_mapping_torus(SemidirectQuotient const& gamma);

/// F_n x_psi Z with psi acting on Z^n by A (n > 1). Equalities need an
/// atoroidal psi, recorded by gamma.hyperbolicity_asserted().
DimensionReport analyze_free_by_cyclic(SemidirectQuotient const& gamma);

/// Parameters for the named example families.
struct PresetParams {
  std::optional<std::size_t> rank {};     ///< free(n), one_relator_power(n, k)
  std::optional<std::size_t> genus {};    ///< surface, torelli_torus, circle_bundle
  std::optional<std::size_t> power {};    ///< one_relator_power k, remark_group k
  std::optional<long>        euler {};    ///< circle_bundle Euler number
  std::optional<MatZ>        matrix {};   ///< free_torus
  bool                       assert_hyperbolic = false;  ///< free_torus only
};

std::vector<std::string> preset_names();

/// Runs one of: free, surface, torelli_torus, free_torus, one_relator_power,
/// remark_group, circle_bundle. Throws PreconditionError for an unknown
/// name or missing/invalid parameters.
DimensionReport preset(std::string_view name, PresetParams const& params);

Presentation free_group_presentation(std::size_t n);
/// <a1..a2l | [a1,a2]...[a_{2l-1},a_{2l}]>
Presentation surface_presentation(std::size_t l);
/// <a1..an | [a1,a2]^k>
Presentation one_relator_power_presentation(std::size_t n, std::size_t k);
/// <a1..a2k | [a1,a2]^2, ..., [a_{2k-1},a_{2k}]^2>
Presentation remark_group_presentation(std::size_t k);
/// <a1..a_{2l+1} | [a1,a2]...[a_{2l-1},a_{2l}] a_{2l+1}^e, [a_i, a_{2l+1}]>
Presentation circle_bundle_presentation(std::size_t l, long euler);

}  // namespace invqm
