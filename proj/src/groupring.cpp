#include "orsolv/groupring.hpp"

#include <algorithm>
#include <sstream>

namespace orsolv::groupring {

void GroupRingElement::add_term(const Word& g, const Rational& c) {
  if (c == 0) return;
  auto it = terms.find(g);
  if (it == terms.end()) {
    terms.emplace(g, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

std::vector<Word> GroupRingElement::support() const {
  std::vector<Word> s;
  s.reserve(terms.size());
  for (auto& [g, c] : terms) s.push_back(g);
  return s;
}

GroupRingElement gr_scalar(const Rational& c) {
  GroupRingElement e;
  e.add_term({}, c);
  return e;
}

GroupRingElement gr_of(const Word& g, const Rational& c) {
  GroupRingElement e;
  e.add_term(reduce_letters(g), c);
  return e;
}

GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out = a;
  for (auto& [g, c] : b.terms) out.add_term(g, c);
  return out;
}

GroupRingElement gr_neg(const GroupRingElement& a) {
  GroupRingElement out;
  for (auto& [g, c] : a.terms) out.terms.emplace(g, -c);
  return out;
}

QuotientContext::QuotientContext(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

QuotientContext::QuotientContext(Presentation p, magnus::ResourceBudget budget)
    : alphabet_(p.alphabet),
      solver_(std::make_unique<magnus::WordProblemSolver>(std::move(p), budget)) {
  // Seed the representative table with the identity and the generators, in
  // letter order, so that classes touching them get short canonical names.
  normalize({});
  for (Gen g = 0; g < alphabet_.size(); ++g) {
    normalize({make_letter(g)});
    normalize({make_letter(g, true)});
  }
}

Word QuotientContext::normalize(const Word& w) {
  Word r = reduce_letters(w);
  if (!solver_) return r;
  auto it = memo_.find(r);
  if (it != memo_.end()) return reps_[it->second];
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    if (solver_->is_trivial(concat_reduce(r, inverse(reps_[i])))) {
      memo_.emplace(r, i);
      return reps_[i];
    }
  }
  reps_.push_back(r);
  memo_.emplace(r, reps_.size() - 1);
  return r;
}

GroupRingElement gr_multiply(const GroupRingElement& a, const GroupRingElement& b,
                             QuotientContext& ctx) {
  GroupRingElement out;
  for (auto& [g, c] : a.terms)
    for (auto& [h, d] : b.terms)
      out.add_term(ctx.normalize(concat_reduce(g, h)), c * d);
  return out;
}

GroupRingElement fox_derivative(const Word& w, Gen s, const Alphabet& alphabet) {
  if (s < 0 || s >= alphabet.size())
    throw UnknownGeneratorError("fox derivative: generator outside alphabet");
  GroupRingElement out;
  Word prefix;
  for (Letter l : reduce(w, alphabet)) {
    if (gen_of(l) == s) {
      if (!is_inverse(l)) {
        // d(u s v)/ds gains u * 1
        out.add_term(prefix, 1);
      } else {
        // d(u s^-1 v)/ds gains -u s^-1
        Word key = prefix;
        key.push_back(l);
        out.add_term(reduce_letters(key), -1);
      }
    }
    prefix.push_back(l);
  }
  return out;
}

GroupRingElement project_to_quotient(const GroupRingElement& e, QuotientContext& ctx) {
  GroupRingElement out;
  for (auto& [g, c] : e.terms) out.add_term(ctx.normalize(g), c);
  return out;
}

std::vector<GroupRingElement> chain_vector(const Word& w, QuotientContext& ctx) {
  std::vector<GroupRingElement> chain;
  chain.reserve(ctx.alphabet().size());
  for (Gen s = 0; s < ctx.alphabet().size(); ++s)
    chain.push_back(project_to_quotient(fox_derivative(w, s, ctx.alphabet()), ctx));
  return chain;
}

bool support_lemma_probe(const GroupRingElement& a, const GroupRingElement& b,
                         QuotientContext& free_ctx) {
  GroupRingElement ab = gr_multiply(a, b, free_ctx);
  bool contained = true;
  for (auto& [g, c] : ab.terms)
    if (!b.terms.count(g)) contained = false;
  bool scalar = a.terms.size() == 1 && a.terms.begin()->first.empty();
  return contained == scalar;
}

std::string format_element(const GroupRingElement& e, const Alphabet& alphabet) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [g, c] : e.terms) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (!g.empty()) os << "*" << format_word(g, alphabet);
  }
  return os.str();
}

}  // namespace orsolv::groupring
