#include "invqm/brooks.hpp"

#include <algorithm>
#include <thread>

#include "invqm/error.hpp"
#include "invqm/presentation.hpp"

namespace invqm {

std::string_view to_string(CountMode m) {
  return m == CountMode::big ? "big" : "little";
}

CountMode parse_count_mode(std::string_view text) {
  if (text == "big") {
    return CountMode::big;
  }
  if (text == "little") {
    return CountMode::little;
  }
  throw PreconditionError("unknown counting mode '" + std::string(text) + "' (expected big or little)");
}

std::size_t count_occurrences(FreeWord const& pattern, FreeWord const& x, CountMode mode) {
  auto const p = pattern.letters();
  auto const s = x.letters();
  if (p.empty() || p.size() > s.size()) {
    return 0;
  }
  std::size_t count = 0;
  std::size_t i     = 0;
  // Leftmost-greedy is optimal for disjoint occurrences of a single pattern.
  while (i + p.size() <= s.size()) {
    if (std::equal(p.begin(), p.end(), s.begin() + static_cast<std::ptrdiff_t>(i))) {
      ++count;
      i += mode == CountMode::big ? 1 : p.size();
    } else {
      ++i;
    }
  }
  return count;
}

CountingQM::CountingQM(std::size_t rank, std::vector<Term> terms, CountMode mode)
    : _rank(rank), _terms(std::move(terms)), _mode(mode) {
  for (auto const& t : _terms) {
    if (t.base.is_identity()) {
      throw PreconditionError("counting quasimorphism base words must be nonempty");
    }
    if (t.base.rank() != rank) {
      throw PreconditionError("counting quasimorphism base word has the wrong rank");
    }
  }
}

CountingQM CountingQM::brooks(FreeWord const& w, CountMode mode) {
  return CountingQM(w.rank(), {{w, Rat(1)}, {invert(w), Rat(-1)}}, mode);
}

CountingQM CountingQM::exponent_sum(std::size_t rank, int gen) {
  return brooks(FreeWord::generator(rank, gen), CountMode::big);
}

CountingQM CountingQM::parse(std::string_view text,
                             std::vector<std::string> const& names,
                             CountMode mode) {
  std::vector<Term> terms;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    auto item = text.substr(start, end - start);
    auto const colon = item.rfind(':');
    if (colon == std::string_view::npos) {
      throw PreconditionError("term '" + std::string(item) + "' lacks ':coefficient'");
    }
    auto coeff = item.substr(colon + 1);
    while (!coeff.empty() && coeff.front() == ' ') {
      coeff.remove_prefix(1);
    }
    while (!coeff.empty() && coeff.back() == ' ') {
      coeff.remove_suffix(1);
    }
    terms.push_back({parse_word(item.substr(0, colon), names), parse_rat(coeff)});
    start = end + 1;
  }
  return CountingQM(names.size(), std::move(terms), mode);
}

Rat CountingQM::operator()(FreeWord const& x) const {
  if (x.rank() != _rank) {
    throw PreconditionError("word rank does not match the quasimorphism");
  }
  Rat total = 0;
  for (auto const& t : _terms) {
    auto const c = count_occurrences(t.base, x, _mode);
    if (c != 0) {
      total += t.coeff * Rat(static_cast<unsigned long>(c));
    }
  }
  return total;
}

HomogenizedEval homogenize(CountingQM const& f, FreeWord const& x, std::size_t kmax) {
  if (kmax < 4) {
    throw PreconditionError("homogenization horizon must be at least 4");
  }
  std::size_t const window = std::max<std::size_t>(4, kmax / 4);
  std::vector<Rat> diffs;
  diffs.reserve(kmax);
  Rat prev = 0;
  FreeWord xk(x.rank());
  for (std::size_t k = 1; k <= kmax; ++k) {
    xk = xk * x;
    Rat cur = f(xk);
    diffs.push_back(cur - prev);
    prev = std::move(cur);
  }
  auto const tail = diffs.end() - static_cast<std::ptrdiff_t>(window);
  Rat const slope = *tail;
  if (!std::all_of(tail, diffs.end(), [&](Rat const& d) { return d == slope; })) {
    throw HorizonExceeded("homogenization did not stabilize within " + std::to_string(kmax)
                          + " powers of " + render(x));
  }
  return {slope, kmax, window};
}

Rat homogenize_eval(CountingQM const& f, FreeWord const& x, std::size_t kmax) {
  return homogenize(f, x, kmax).value;
}

ConjugationReport conjugation_invariance_check(
    CountingQM const& f,
    std::vector<std::pair<FreeWord, FreeWord>> const& samples,
    std::size_t kmax) {
  ConjugationReport report;
  for (auto const& [x, g] : samples) {
    Rat vx = homogenize_eval(f, x, kmax);
    Rat vg = homogenize_eval(f, conjugate(g, x), kmax);
    ++report.checked;
    if (vx != vg) {
      report.failures.push_back({x, g, std::move(vx), std::move(vg)});
    }
  }
  return report;
}

DefectCertificate DefectCertificate::upper(Rat bound, std::string provenance) {
  DefectCertificate c;
  c.bound      = std::move(bound);
  c.kind       = CertificateKind::upper;
  c.provenance = std::move(provenance);
  return c;
}

std::vector<FreeWord> enumerate_reduced_words(std::size_t rank, std::size_t max_length) {
  std::vector<Letter> alphabet;
  for (int g = 1; g <= static_cast<int>(rank); ++g) {
    alphabet.push_back({g, 1});
    alphabet.push_back({g, -1});
  }
  std::vector<std::vector<Letter>> level{{}};
  std::vector<FreeWord> out{FreeWord(rank)};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::vector<Letter>> next;
    for (auto const& w : level) {
      for (auto const l : alphabet) {
        if (!w.empty() && w.back().cancels(l)) {
          continue;
        }
        auto v = w;
        v.push_back(l);
        out.emplace_back(rank, std::span<Letter const>(v));
        next.push_back(std::move(v));
      }
    }
    level = std::move(next);
  }
  return out;
}

namespace {

struct Best {
  Rat         value = -1;
  std::size_t i     = 0;
  std::size_t j     = 0;

  [[nodiscard]] bool beats(Best const& o) const {
    if (value != o.value) {
      return value > o.value;
    }
    return std::pair(i, j) < std::pair(o.i, o.j);
  }
};

}  // namespace

DefectCertificate defect_lower_bound(CountingQM const& f, std::size_t max_length, std::size_t threads) {
  if (max_length < 1) {
    throw PreconditionError("defect enumeration length must be at least 1");
  }
  auto const words = enumerate_reduced_words(f.rank(), max_length);
  std::vector<Rat> values;
  values.reserve(words.size());
  for (auto const& w : words) {
    values.push_back(f(w));
  }

  if (threads == 0) {
    threads = std::max(1U, std::thread::hardware_concurrency());
  }
  threads = std::min(threads, words.size());
  std::vector<Best> partial(threads);
  auto worker = [&](std::size_t t) {
    Best best;
    for (std::size_t i = t; i < words.size(); i += threads) {
      for (std::size_t j = 0; j < words.size(); ++j) {
        Rat d = f(words[i] * words[j]) - values[i] - values[j];
        d     = abs(d);
        if (d > best.value) {
          best = {std::move(d), i, j};
        }
      }
    }
    partial[t] = std::move(best);
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) {
      pool.emplace_back(worker, t);
    }
    worker(0);
  }
  Best best = partial.front();
  for (auto const& b : partial) {
    if (b.beats(best)) {
      best = b;
    }
  }

  DefectCertificate c;
  c.bound      = best.value;
  c.kind       = CertificateKind::lower;
  c.max_length = max_length;
  c.witness    = std::pair(words[best.i], words[best.j]);
  c.provenance = "exhaustive enumeration of reduced pairs with |x|, |y| <= " + std::to_string(max_length);
  return c;
}

BavardEstimate bavard_estimate(CountingQM const& f,
                               FreeWord const& x,
                               DefectCertificate const& defect,
                               std::size_t kmax) {
  BavardEstimate e;
  e.homogenized = homogenize_eval(f, x, kmax);
  e.certified   = defect.kind == CertificateKind::upper;
  if (defect.bound <= 0) {
    if (e.certified) {
      throw PreconditionError("defect upper bound must be positive");
    }
    // A zero enumerated defect gives no information about the ratio.
    e.value = 0;
    e.label = "indicative - not a certified bound (enumerated defect is zero)";
    return e;
  }
  e.value = abs(e.homogenized) / (2 * defect.bound);
  e.label = e.certified ? "certified lower bound given the supplied defect certificate"
                        : "indicative - not a certified bound";
  return e;
}

Rat bavard_lower_bound(CountingQM const& f,
                       FreeWord const& x,
                       DefectCertificate const& defect,
                       std::size_t kmax) {
  if (defect.kind != CertificateKind::upper) {
    throw PreconditionError("a certified Bavard bound needs an upper defect certificate");
  }
  return bavard_estimate(f, x, defect, kmax).value;
}

std::string equivalence_report(QuotientClass cls, std::optional<Rat> const& c) {
  std::string const premise =
      "Assuming every G-invariant homogeneous quasimorphism on N is the sum of an invariant "
      "homomorphism and the restriction of a homogeneous quasimorphism on G: ";
  switch (cls) {
    case QuotientClass::solvable:
      return premise + "G/N solvable, so scl_G = scl_{G,N} on [G,N].";
    case QuotientClass::amenable:
      return premise + "G/N amenable, so scl_G(x) <= scl_{G,N}(x) <= 2 scl_G(x) for x in [G,N].";
    case QuotientClass::generic:
      break;
  }
  if (!c) {
    throw PreconditionError("the generic comparison needs an explicit constant C");
  }
  if (*c < 1) {
    throw PreconditionError("comparison constant must satisfy C >= 1");
  }
  return premise + "scl_G(x) <= scl_{G,N}(x) <= " + to_string(*c) + " scl_G(x) for x in [G,N].";
}

}  // namespace invqm
