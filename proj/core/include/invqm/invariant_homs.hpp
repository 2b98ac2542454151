#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "invqm/magnus.hpp"
#include "invqm/presentation.hpp"

namespace invqm {

/// Subspace W of the exterior square cut out by the relators: an invariant
/// homomorphism on [F_n, F_n] descends to [G, G] exactly when it kills W.
struct ConstraintSpace {
  std::size_t           rank = 0;
  std::vector<WedgeVec> basis;  ///< reduced row echelon, linearly independent

  [[nodiscard]] std::size_t dim() const noexcept { return basis.size(); }
};

/// G-invariant homomorphisms on N = [G, G], as functionals on the exterior
/// square annihilating the constraint space.
struct InvHomSpace {
  std::size_t               dimension = 0;
  std::vector<InvariantHom> basis;  ///< reduced row echelon order
};

/// W = span{ e_j ^ ab(r_i) } + span{ sum_i c_i q(r_i) : c M = 0 }, where M
/// is the relator exponent-sum matrix and q is the pair-sum quadratic class.
///
/// Conjugating a relator by g shifts its class by ab(g) ^ ab(r), and the
/// cross terms of a product of relators are 1/2 ab(r_i) ^ ab(r_k); both lie
/// in the first span, so only the combinations with zero total
/// abelianization contribute new directions. Those combinations are read off
/// an integer basis of the left kernel of M from its Smith normal form.
ConstraintSpace constraint_space(Presentation const& p);

std::size_t inv_hom_dim(Presentation const& p);
InvHomSpace inv_hom_basis(Presentation const& p);

/// Integer coefficients c with sum_i c_i ab(r_i) = ab(w), or nullopt when w
/// does not represent an element of [G, G].
std::optional<VecZ> relator_combination(Presentation const& p, FreeWord const& w);

/// phi evaluated on the element of N represented by w: w is multiplied by
/// prod r_i^{-c_i} to land in [F_n, F_n] and then paired with phi. The result
/// does not depend on the lift. Throws PreconditionError when w is not in N
/// or phi does not annihilate the constraint space.
Rat evaluate_on_quotient(InvariantHom const& phi, FreeWord const& w, Presentation const& p);

}  // namespace invqm
