#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>

#include "orsolv/words.hpp"

namespace orsolv::magnus {

// Caps on the breakdown recursion and on rewriting work. The word problem for
// one-relator groups is decidable but can be non-elementary (Baumslag-Gersten
// inputs), so every entry point is metered and fails loudly instead of
// degrading silently.
struct ResourceBudget {
  int max_depth = 64;
  std::size_t max_word_length = 1'000'000;
  std::size_t max_oracle_calls = 10'000'000;
};

// Budget exhaustion. Callers must treat this as inconclusive, never as a
// verdict.
struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
class SolverImpl;
}

// Decision structure for triviality in F(S)/<<r>>, built by the classical
// Magnus-Moldavanskii breakdown: HNN splitting over a generator with zero
// exponent sum in the relator (decided by Britton pinch rewriting), a change
// of variables when every exponent sum is nonzero, free and torsion base
// cases at the leaves.
//
// Instances carry lazily built sub-solvers and memo state and are not
// synchronized; concurrent workers take one instance each.
class WordProblemSolver {
 public:
  WordProblemSolver(Presentation p, ResourceBudget budget);
  ~WordProblemSolver();
  WordProblemSolver(WordProblemSolver&&) noexcept;
  WordProblemSolver& operator=(WordProblemSolver&&) noexcept;

  const Presentation& presentation() const;

  // True iff w = 1 in F(S)/<<r>>. Throws BudgetExceededError when the budget
  // runs out.
  bool is_trivial(const Word& w);

  // One line per breakdown node, for inspection and tests.
  std::string describe_tree() const;

  // Number of oracle steps consumed so far.
  std::size_t calls_used() const;

 private:
  std::unique_ptr<detail::SolverImpl> impl_;
};

WordProblemSolver build_solver(Presentation p, ResourceBudget budget = {});

// Membership of w in the normal closure <<r>> inside F(S): triviality of w in
// the one-relator quotient.
bool in_normal_closure(const Word& w, const Word& r, const Alphabet& alphabet,
                       ResourceBudget budget = {});

}  // namespace orsolv::magnus
