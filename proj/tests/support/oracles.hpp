#pragma once

// Test-only reference implementations. Each one follows a different route
// from the library code it checks.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "invqm/linalg.hpp"
#include "invqm/magnus.hpp"
#include "invqm/word.hpp"

namespace invqm::testing {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t salt = 0) { return Rng(0x5eed'1234'abcdULL ^ salt); }

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive
long uniform_int(Rng& rng, long lo, long hi);                   // inclusive

Letter random_letter(Rng& rng, std::size_t rank);
/// Reduction of a random letter string of length <= max_length.
FreeWord random_word(Rng& rng, std::size_t rank, std::size_t max_length);
/// Random element of [F_n, F_n]: a shuffled multiset of letters paired with
/// their inverses, then reduced; length <= max_length.
FreeWord random_commutator_word(Rng& rng, std::size_t rank, std::size_t max_length);

MatQ random_matq(Rng& rng, std::size_t rows, std::size_t cols, long bound);
MatZ random_matz(Rng& rng, std::size_t rows, std::size_t cols, long bound);
/// Product of `steps` random elementary integer matrices.
MatZ random_unimodular(Rng& rng, std::size_t n, std::size_t steps);
/// Product of random elementary symplectic factors for the block form
/// J = [[0, I], [-I, 0]]: [[I, S], [0, I]], [[I, 0], [S, I]] with S symmetric,
/// and diag(U, U^-T) with U elementary.
MatZ random_symplectic(Rng& rng, std::size_t l, std::size_t steps);

/// Rank by textbook Gaussian elimination over Q with partial pivoting on the
/// first nonzero entry.
std::size_t rank_by_gauss(MatQ m);

/// Invariant factors d_1 | d_2 | ... from determinantal divisors
/// D_k = gcd of all k x k minors, d_k = D_k / D_{k-1}. Zeros are included.
std::vector<Int> invariant_factors_by_minors(MatZ const& a);

/// Coefficient of e_i ^ e_j in the wedge class of w in [F_n, F_n], as
/// sum over letters a_j^e of e * (exponent sum of a_i strictly before it).
Int wedge_coeff_by_prefix(FreeWord const& w, std::size_t i, std::size_t j);
WedgeVec wedge_by_prefix(FreeWord const& w);

/// Entry ((i,j),(k,l)) of the exterior square as a 2x2 minor, written
/// against (A e_k) ^ (A e_l) expanded in the standard basis.
MatQ exterior_square_by_columns(MatQ const& a);

/// Occurrence counts computed without greedy shortcuts: big by testing every
/// start, little by dynamic programming over prefixes.
std::size_t count_big(FreeWord const& pattern, FreeWord const& x);
std::size_t count_little(FreeWord const& pattern, FreeWord const& x);

/// Product over k = n-1 down to 0 of a^k [a, b] a^-k.
FreeWord power_commutator_expansion(FreeWord const& a, FreeWord const& b, std::size_t n);

}  // namespace invqm::testing
