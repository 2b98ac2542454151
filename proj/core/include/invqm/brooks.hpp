#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invqm/rational.hpp"
#include "invqm/word.hpp"

namespace invqm {

enum class CountMode {
  big,     ///< every occurrence, overlaps allowed
  little,  ///< maximal number of pairwise disjoint occurrences
};

std::string_view to_string(CountMode m);
CountMode parse_count_mode(std::string_view text);

/// Occurrences of `pattern` as a subword of the reduced word `x`.
std::size_t count_occurrences(FreeWord const& pattern, FreeWord const& x, CountMode mode);

/// A linear combination of counting functions sum_k c_k C_{w_k}.
///
/// Counting happens in x as written, so C_w alone is not a quasimorphism;
/// Brooks quasimorphisms are the antisymmetric combinations C_w - C_{w^-1}.
class CountingQM {
 public:
  struct Term {
    FreeWord base;
    Rat      coeff;
  };

  /// Throws PreconditionError on an empty base word or a rank mismatch.
  CountingQM(std::size_t rank, std::vector<Term> terms, CountMode mode = CountMode::big);

  /// C_w - C_{w^-1}
  static CountingQM brooks(FreeWord const& w, CountMode mode = CountMode::big);
  /// C_{a_gen} - C_{a_gen^-1}: the exponent sum of one generator, a
  /// homomorphism.
  static CountingQM exponent_sum(std::size_t rank, int gen);

  /// Parses "ab:1,ba:-1/2" against the generator names.
  static CountingQM parse(std::string_view terms,
                          std::vector<std::string> const& names,
                          CountMode mode = CountMode::big);

  [[nodiscard]] std::size_t rank() const noexcept { return _rank; }
  [[nodiscard]] CountMode mode() const noexcept { return _mode; }
  [[nodiscard]] std::vector<Term> const& terms() const noexcept { return _terms; }

  Rat operator()(FreeWord const& x) const;

 private:
  std::size_t       _rank;
  std::vector<Term> _terms;
  CountMode         _mode;
};

/// Stabilized slope of k -> f(x^k).
struct HomogenizedEval {
  Rat         value;
  std::size_t horizon = 0;  ///< Kmax used
  std::size_t window  = 0;  ///< terminal steps over which the slope was constant
};

/// Evaluates f(x^k) for k <= kmax; if f(x^{k+1}) - f(x^k) is constant over
/// the last max(4, kmax / 4) steps, returns that constant. Throws
/// HorizonExceeded otherwise and PreconditionError when kmax < 4.
HomogenizedEval homogenize(CountingQM const& f, FreeWord const& x, std::size_t kmax = 32);
Rat homogenize_eval(CountingQM const& f, FreeWord const& x, std::size_t kmax = 32);

struct ConjugationWitness {
  FreeWord x;
  FreeWord g;
  Rat      value_x;
  Rat      value_conjugate;
};

struct ConjugationReport {
  std::size_t                     checked = 0;
  std::vector<ConjugationWitness> failures;

  [[nodiscard]] bool ok() const noexcept { return failures.empty(); }
};

/// Checks fbar(g x g^-1) == fbar(x) exactly on each (x, g) sample.
ConjugationReport conjugation_invariance_check(
    CountingQM const& f,
    std::vector<std::pair<FreeWord, FreeWord>> const& samples,
    std::size_t kmax = 32);

enum class CertificateKind {
  lower,  ///< max over an exhaustive enumeration, with a witness
  upper,  ///< supplied by the caller
};

struct DefectCertificate {
  Rat                                         bound;
  CertificateKind                             kind = CertificateKind::lower;
  std::size_t                                 max_length = 0;  ///< lower only
  std::optional<std::pair<FreeWord, FreeWord>> witness;         ///< lower only
  std::string                                 provenance;

  static DefectCertificate upper(Rat bound, std::string provenance);
};

/// All reduced words of length <= max_length, shortest first, generators in
/// the order a_1, a_1^-1, a_2, a_2^-1, ...
std::vector<FreeWord> enumerate_reduced_words(std::size_t rank, std::size_t max_length);

/// max |f(xy) - f(x) - f(y)| over reduced x, y with |x|, |y| <= max_length.
/// The witness is the first maximizing pair in enumeration order, so it does
/// not depend on the thread count.
DefectCertificate defect_lower_bound(CountingQM const& f,
                                     std::size_t max_length,
                                     std::size_t threads = 0);

/// |fbar(x)| / (2 D) for a caller-certified upper bound D on the defect of
/// fbar. This is a certified lower bound for scl (or scl_{G,N} when f is
/// G-invariant on N). Throws PreconditionError unless the certificate is an
/// upper bound with D > 0.
Rat bavard_lower_bound(CountingQM const& f,
                       FreeWord const& x,
                       DefectCertificate const& defect,
                       std::size_t kmax = 32);

/// Same arithmetic with any certificate; `certified` is false for lower
/// certificates, whose ratio is only indicative.
struct BavardEstimate {
  Rat         value;
  Rat         homogenized;
  bool        certified = false;
  std::string label;
};

BavardEstimate bavard_estimate(CountingQM const& f,
                               FreeWord const& x,
                               DefectCertificate const& defect,
                               std::size_t kmax = 32);

enum class QuotientClass {
  solvable,
  amenable,
  generic,
};

/// Renders the comparison between scl_G and scl_{G,N} on [G, N] that holds
/// once every G-invariant quasimorphism on N extends up to an invariant
/// homomorphism. `c` is required (and must be >= 1) for the generic class.
std::string equivalence_report(QuotientClass cls, std::optional<Rat> const& c = std::nullopt);

}  // namespace invqm
