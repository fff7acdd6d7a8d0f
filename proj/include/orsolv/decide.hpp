#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orsolv/magnus.hpp"
#include "orsolv/words.hpp"

namespace orsolv::decide {

struct InternalContradictionError : std::logic_error {
  using std::logic_error::logic_error;
};

// Returns the nonzero integer k with w in r^k [<<r>>, <<r>>], if any:
// w must be trivial in F/<<r>> and the Fox 1-chain of w must be k times the
// chain of r after projection to the quotient ring. Negative k means w lies
// in (r^-1)^|k| [<<r>>, <<r>>]. r must be nonempty and cyclically reduced.
std::optional<mpz_class> divisibility(const Word& w, const Word& r,
                                      const Alphabet& alphabet,
                                      magnus::ResourceBudget budget = {});

enum class CandidateStatus {
  passed,
  not_in_closure,
  chain_mismatch,
  inconclusive,
};

struct TraceEntry {
  Word candidate;
  CandidateStatus status;
  long k = 0;  // for passed entries, after sign folding
};

struct Witness {
  Word r;  // sign-folded so that k >= 1
  mpz_class k = 1;
  std::vector<TraceEntry> trace;
};

enum class SearchOutcome { found, none_found, inconclusive };

struct WitnessSearch {
  SearchOutcome outcome = SearchOutcome::none_found;
  std::optional<Witness> witness;
  std::string note;           // set for inconclusive results
  std::size_t calls = 0;      // oracle calls spent on candidate screening
};

// Enumerate candidates up to max_r_len, keep those passing divisibility,
// select one whose normal closure contains every other passing candidate.
// max_r_len <= 0 means the full default |w|.
WitnessSearch find_witness(const Word& w, const Alphabet& alphabet,
                           int max_r_len = 0, magnus::ResourceBudget budget = {},
                           int threads = 1);

enum class VerdictKind { residually_q_solvable, not_residually_q_solvable, inconclusive };

struct Verdict {
  VerdictKind kind = VerdictKind::inconclusive;
  std::optional<Witness> witness;
  bool bounded_search = false;  // user lowered max_r_len below |core(w)|
  std::string note;
  std::size_t budget_used = 0;
};

// Decides whether F(S)/<<w>> is residually rationally solvable: find the
// witness r, then check conjugacy of w with r or r^-1. With a user-lowered
// max_r_len a NO verdict stays sound while a YES verdict degrades to
// inconclusive, because an unexamined longer candidate could be a witness.
Verdict decide(const Word& w, const Alphabet& alphabet, int max_r_len = 0,
               magnus::ResourceBudget budget = {}, int threads = 1);

}  // namespace orsolv::decide
