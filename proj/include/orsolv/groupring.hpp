#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <vector>

#include "orsolv/magnus.hpp"
#include "orsolv/words.hpp"

namespace orsolv::groupring {

using Rational = mpq_class;

// Finite formal sum of group elements with rational coefficients. Keys are
// reduced words in the normalization regime of the context that produced the
// element; zero coefficients are never stored.
struct GroupRingElement {
  std::map<Word, Rational, ShortlexLess> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const Word& g, const Rational& c);
  std::vector<Word> support() const;

  bool operator==(const GroupRingElement& o) const { return terms == o.terms; }
};

GroupRingElement gr_scalar(const Rational& c);
GroupRingElement gr_of(const Word& g, const Rational& c = 1);
GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement gr_neg(const GroupRingElement& a);

// Group ring over the free group F(S) or over a one-relator quotient
// identified through the word-problem solver. Quotient keys are normalized to
// the first-seen representative of their equality class; equality verdicts
// are memoized per context instance.
class QuotientContext {
 public:
  // free group context
  explicit QuotientContext(Alphabet alphabet);
  // one-relator quotient context
  QuotientContext(Presentation p, magnus::ResourceBudget budget);

  bool is_quotient() const { return solver_ != nullptr; }
  const Alphabet& alphabet() const { return alphabet_; }

  // canonical representative of the class of w
  Word normalize(const Word& w);

 private:
  Alphabet alphabet_;
  std::unique_ptr<magnus::WordProblemSolver> solver_;
  std::vector<Word> reps_;
  std::map<Word, std::size_t, ShortlexLess> memo_;
};

// Ring product with like terms merged under the context's equality.
GroupRingElement gr_multiply(const GroupRingElement& a, const GroupRingElement& b,
                             QuotientContext& ctx);

// Fox free differential calculus over the free group: the unique map with
// ds/ds = 1, dx/ds = 0 for x != s, d(uv)/ds = du/ds + u dv/ds.
GroupRingElement fox_derivative(const Word& w, Gen s, const Alphabet& alphabet);

// Keys re-normalized under the quotient's equality oracle.
GroupRingElement project_to_quotient(const GroupRingElement& e, QuotientContext& ctx);

// Per generator s: the projection of dw/ds to the quotient ring, i.e. the
// 1-chain of the w-path in the Cayley graph of the quotient read from the
// identity vertex.
std::vector<GroupRingElement> chain_vector(const Word& w, QuotientContext& ctx);

// Checks the support-lemma biconditional supp(ab) in supp(b) <=> supp(a)={1}
// for one pair over the free group; both elements must be nonzero.
bool support_lemma_probe(const GroupRingElement& a, const GroupRingElement& b,
                         QuotientContext& free_ctx);

std::string format_element(const GroupRingElement& e, const Alphabet& alphabet);

}  // namespace orsolv::groupring
