#include "orsolv/cayley.hpp"

#include <algorithm>

namespace orsolv::cayley {

namespace {

// First-seen normalization against the growing vertex list.
struct VertexTable {
  magnus::WordProblemSolver* solver;
  std::vector<Word>* reps;
  std::map<Word, int, ShortlexLess> memo;

  // Index of the class of w among reps, or -1 when unseen.
  int find(const Word& w) {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    for (int i = 0; i < static_cast<int>(reps->size()); ++i) {
      if (solver->is_trivial(concat_reduce(w, inverse((*reps)[i])))) {
        memo.emplace(w, i);
        return i;
      }
    }
    return -1;
  }

  int add(const Word& w) {
    reps->push_back(w);
    int id = static_cast<int>(reps->size()) - 1;
    memo[w] = id;
    return id;
  }
};

}  // namespace

Ball build_ball(const Word& r, const Alphabet& alphabet, int radius,
                magnus::ResourceBudget budget, std::size_t vertex_cap) {
  if (radius < 0) throw std::invalid_argument("negative ball radius");
  Ball ball;
  ball.alphabet = alphabet;
  ball.relator = reduce_letters(r);
  ball.radius = radius;

  magnus::WordProblemSolver solver({alphabet, ball.relator}, budget);
  VertexTable table{&solver, &ball.vertices, {}};
  table.add({});
  ball.dist.push_back(0);

  // breadth-first in (distance, vertex order, letter order); representatives
  // come out shortest and first-seen shortlex
  for (int v = 0; v < static_cast<int>(ball.vertices.size()); ++v) {
    if (ball.dist[v] >= radius) continue;
    for (Gen g = 0; g < alphabet.size(); ++g) {
      for (int s = 0; s < 2; ++s) {
        Word u = concat_reduce(ball.vertices[v], {make_letter(g, s == 1)});
        if (table.find(u) >= 0) continue;
        if (ball.vertices.size() >= vertex_cap)
          throw BallTooLargeError("ball vertex cap exceeded");
        table.add(u);
        ball.dist.push_back(ball.dist[v] + 1);
      }
    }
  }

  for (int v = 0; v < static_cast<int>(ball.vertices.size()); ++v) {
    for (Gen g = 0; g < alphabet.size(); ++g) {
      Word u = concat_reduce(ball.vertices[v], {make_letter(g)});
      int t = table.find(u);
      if (t < 0) continue;  // endpoint outside the ball
      int idx = static_cast<int>(ball.edges.size());
      ball.edge_at[{v, g}] = idx;
      ball.edge_into[{t, g}] = idx;
      ball.edges.push_back({v, g, t});
    }
  }
  return ball;
}

namespace {

struct ChainTrace {
  std::map<int, mpz_class> coeff;  // edge index -> coefficient
  int endpoint = 0;
};

ChainTrace trace(const Word& w, const Ball& ball) {
  ChainTrace tr;
  int cur = 0;
  for (Letter l : w) {
    Gen g = gen_of(l);
    if (!is_inverse(l)) {
      auto e = ball.edge_from(cur, g);
      if (!e) throw PathEscapesBallError("path leaves the ball; radius too small");
      tr.coeff[*e] += 1;
      if (tr.coeff[*e] == 0) tr.coeff.erase(*e);
      cur = ball.edges[*e].dst;
    } else {
      // an inverse letter traverses the forward g-edge into cur backwards
      auto e = ball.edge_to(cur, g);
      if (!e) throw PathEscapesBallError("path leaves the ball; radius too small");
      tr.coeff[*e] -= 1;
      if (tr.coeff[*e] == 0) tr.coeff.erase(*e);
      cur = ball.edges[*e].src;
    }
  }
  tr.endpoint = cur;
  return tr;
}

}  // namespace

std::optional<mpz_class> chain_multiple_check(const Word& w, const Word& r,
                                              const Ball& ball) {
  if (reduce_letters(r) != ball.relator)
    throw std::invalid_argument("ball was built for a different relator");
  ChainTrace cw = trace(reduce_letters(w), ball);
  if (cw.endpoint != 0) return std::nullopt;  // w nontrivial in the quotient
  if (cw.coeff.empty()) return std::nullopt;  // k would be zero
  ChainTrace cr = trace(ball.relator, ball);
  if (cr.endpoint != 0)
    throw PathEscapesBallError("relator loop does not close; ball inconsistent");
  if (cr.coeff.empty()) return std::nullopt;

  auto it = cr.coeff.begin();
  mpz_class base = it->second;
  mpz_class top = cw.coeff.count(it->first) ? cw.coeff.at(it->first) : mpz_class(0);
  if (top == 0 || top % base != 0) return std::nullopt;
  mpz_class k = top / base;
  if (k == 0) return std::nullopt;

  for (auto& [e, c] : cr.coeff) {
    auto f = cw.coeff.find(e);
    if (f == cw.coeff.end() || f->second != k * c) return std::nullopt;
  }
  for (auto& [e, c] : cw.coeff) {
    if (!cr.coeff.count(e)) return std::nullopt;
  }
  return k;
}

}  // namespace orsolv::cayley
