#include "orsolv/decide.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "orsolv/groupring.hpp"

namespace orsolv::decide {

namespace {

// chain(w) = k * chain(r) componentwise in Z[F/<<r>>], k a nonzero integer
std::optional<mpz_class> chain_ratio(const std::vector<groupring::GroupRingElement>& cw,
                                     const std::vector<groupring::GroupRingElement>& cr) {
  std::optional<mpq_class> ratio;
  for (std::size_t s = 0; s < cw.size(); ++s) {
    if (cr[s].is_zero() != cw[s].is_zero()) return std::nullopt;
    if (cr[s].is_zero()) continue;
    if (cw[s].terms.size() != cr[s].terms.size()) return std::nullopt;
    auto iw = cw[s].terms.begin();
    for (auto ir = cr[s].terms.begin(); ir != cr[s].terms.end(); ++ir, ++iw) {
      if (iw->first != ir->first) return std::nullopt;
      mpq_class q = iw->second / ir->second;
      if (!ratio)
        ratio = q;
      else if (*ratio != q)
        return std::nullopt;
    }
  }
  if (!ratio) return std::nullopt;  // both chains vanish: k would be zero
  if (ratio->get_den() != 1) return std::nullopt;
  mpz_class k = ratio->get_num();
  if (k == 0) return std::nullopt;
  return k;
}

struct CandidateResult {
  TraceEntry entry;
  Word passing_form;  // the rotation with k >= 1, when passed
  bool inconclusive = false;
  std::size_t calls = 0;
};

// The membership w in r^k [<<r>>, <<r>>] is not invariant under rotating r:
// conjugating r translates its chain inside the group ring. Candidates are
// enumerated per rotation-and-inversion class, so the chain test sweeps every
// form of the class; the normal closure, the solver and chain(w) are shared.
CandidateResult evaluate_candidate(const Word& w, const Word& cand,
                                   const Alphabet& alphabet,
                                   const magnus::ResourceBudget& budget) {
  CandidateResult res;
  res.entry.candidate = cand;
  try {
    groupring::QuotientContext ctx({alphabet, cand}, budget);
    {
      magnus::WordProblemSolver solver({alphabet, cand}, budget);
      bool in_closure = solver.is_trivial(w);
      res.calls = solver.calls_used();
      if (!in_closure) {
        res.entry.status = CandidateStatus::not_in_closure;
        return res;
      }
    }
    auto cw = groupring::chain_vector(w, ctx);
    std::vector<Word> forms;
    for (const Word& base : {cand, inverse(cand)}) {
      Word rot = base;
      for (std::size_t i = 0; i < base.size(); ++i) {
        forms.push_back(rot);
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      }
    }
    for (const Word& form : forms) {
      auto cr = groupring::chain_vector(form, ctx);
      auto k = chain_ratio(cw, cr);
      if (k && *k >= 1) {
        res.entry.status = CandidateStatus::passed;
        res.entry.k = static_cast<long>(k->get_si());
        res.passing_form = form;
        return res;
      }
    }
    res.entry.status = CandidateStatus::chain_mismatch;
  } catch (const magnus::BudgetExceededError&) {
    res.entry.status = CandidateStatus::inconclusive;
    res.inconclusive = true;
  }
  return res;
}

}  // namespace

std::optional<mpz_class> divisibility(const Word& w, const Word& r,
                                      const Alphabet& alphabet,
                                      magnus::ResourceBudget budget) {
  if (r.empty() || !is_cyclically_reduced(r))
    throw std::invalid_argument("divisibility requires a nonempty cyclically reduced relator");
  groupring::QuotientContext ctx({alphabet, r}, budget);
  {
    magnus::WordProblemSolver solver({alphabet, r}, budget);
    if (!solver.is_trivial(w)) return std::nullopt;
  }
  auto cw = groupring::chain_vector(w, ctx);
  auto cr = groupring::chain_vector(r, ctx);
  return chain_ratio(cw, cr);
}

WitnessSearch find_witness(const Word& w, const Alphabet& alphabet, int max_r_len,
                           magnus::ResourceBudget budget, int threads) {
  WitnessSearch out;
  Word core = cyclic_reduce(reduce(w, alphabet)).core;
  if (core.empty()) {
    // degenerate case r = 1: the quotient is the free group itself
    out.outcome = SearchOutcome::found;
    out.witness = Witness{{}, 1, {}};
    return out;
  }
  int maxlen = max_r_len > 0 ? max_r_len : static_cast<int>(core.size());
  bool bounded = maxlen < static_cast<int>(core.size());

  std::vector<Word> cands = enumerate_candidates(core, alphabet, maxlen);
  std::vector<CandidateResult> results(cands.size());

  if (threads <= 1 || cands.size() < 2) {
    for (std::size_t i = 0; i < cands.size(); ++i)
      results[i] = evaluate_candidate(core, cands[i], alphabet, budget);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= cands.size()) return;
        results[i] = evaluate_candidate(core, cands[i], alphabet, budget);
      }
    };
    std::vector<std::thread> pool;
    int n = std::min<int>(threads, static_cast<int>(cands.size()));
    pool.reserve(n);
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Witness best;
  bool any_inconclusive = false;
  for (auto& res : results) out.calls += res.calls;
  struct Passer {
    Word r;
    mpz_class k;
  };
  std::vector<Passer> passers;
  for (auto& res : results) {
    best.trace.push_back(res.entry);
    any_inconclusive = any_inconclusive || res.inconclusive;
    if (res.entry.status != CandidateStatus::passed) continue;
    passers.push_back({res.passing_form, mpz_class(res.entry.k)});
  }

  if (any_inconclusive) {
    out.outcome = SearchOutcome::inconclusive;
    out.note = "budget exhausted on at least one candidate";
    out.witness = std::nullopt;
    return out;
  }
  if (passers.empty()) {
    out.outcome = SearchOutcome::none_found;
    return out;
  }

  // maximal passer: its normal closure contains every other passer
  std::vector<std::size_t> maximal;
  for (std::size_t i = 0; i < passers.size(); ++i) {
    bool all = true;
    try {
      magnus::WordProblemSolver solver({alphabet, passers[i].r}, budget);
      for (std::size_t j = 0; all && j < passers.size(); ++j) {
        if (j == i) continue;
        all = solver.is_trivial(passers[j].r);
      }
    } catch (const magnus::BudgetExceededError&) {
      out.outcome = SearchOutcome::inconclusive;
      out.note = "budget exhausted during maximality selection";
      return out;
    }
    if (all) maximal.push_back(i);
  }
  if (maximal.empty()) {
    if (bounded) {
      out.outcome = SearchOutcome::inconclusive;
      out.note = "bounded search found passing candidates but no maximal one";
      return out;
    }
    throw InternalContradictionError(
        "passing candidates exist but none is maximal under full enumeration");
  }
  std::size_t pick = maximal[0];
  for (std::size_t m : maximal)
    if (shortlex_less(passers[m].r, passers[pick].r)) pick = m;

  best.r = passers[pick].r;
  best.k = passers[pick].k;
  out.outcome = SearchOutcome::found;
  out.witness = std::move(best);
  return out;
}

Verdict decide(const Word& w, const Alphabet& alphabet, int max_r_len,
               magnus::ResourceBudget budget, int threads) {
  Verdict v;
  Word core = cyclic_reduce(reduce(w, alphabet)).core;
  if (core.empty()) {
    v.kind = VerdictKind::residually_q_solvable;
    v.witness = Witness{{}, 1, {}};
    return v;
  }
  int maxlen = max_r_len > 0 ? max_r_len : static_cast<int>(core.size());
  v.bounded_search = maxlen < static_cast<int>(core.size());

  WitnessSearch ws = find_witness(core, alphabet, maxlen, budget, threads);
  v.budget_used = ws.calls;
  if (ws.outcome == SearchOutcome::inconclusive) {
    v.kind = VerdictKind::inconclusive;
    v.note = ws.note;
    return v;
  }
  if (ws.outcome == SearchOutcome::none_found) {
    if (v.bounded_search) {
      // cannot certify YES: unexamined longer candidates might pass
      v.kind = VerdictKind::inconclusive;
      v.note = "no witness within the bounded candidate length";
      return v;
    }
    throw InternalContradictionError(
        "full enumeration found no passing candidate; w itself must pass");
  }

  v.witness = ws.witness;
  bool conj = is_conjugate(core, v.witness->r) || is_conjugate(core, inverse(v.witness->r));
  if (conj) {
    if (v.bounded_search) {
      v.kind = VerdictKind::inconclusive;
      v.note = "bounded search: YES verdicts require full enumeration";
    } else {
      v.kind = VerdictKind::residually_q_solvable;
    }
  } else {
    v.kind = VerdictKind::not_residually_q_solvable;
  }
  return v;
}

}  // namespace orsolv::decide
