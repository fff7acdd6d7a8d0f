#include "orsolv/intlin.hpp"

#include <algorithm>
#include <cstdlib>

namespace orsolv::intlin {

namespace {

// Smallest nonzero |entry| in the trailing submatrix starting at (s, s).
bool find_pivot(const IntMatrix& m, int s, int& pr, int& pc) {
  bool found = false;
  Int best;
  for (int r = s; r < m.rows(); ++r) {
    for (int c = s; c < m.cols(); ++c) {
      const Int& v = m.at(r, c);
      if (v == 0) continue;
      Int a = abs(v);
      if (!found || a < best) {
        found = true;
        best = a;
        pr = r;
        pc = c;
      }
    }
  }
  return found;
}

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

}  // namespace

std::vector<Int> smith_normal_form(IntMatrix m) {
  const int n = std::min(m.rows(), m.cols());
  std::vector<Int> factors;
  factors.reserve(n);

  for (int s = 0; s < n; ++s) {
    int pr, pc;
    if (!find_pivot(m, s, pr, pc)) break;
    swap_rows(m, s, pr);
    swap_cols(m, s, pc);

    for (;;) {
      // Clear column s below the pivot, then row s; repeat while remainders
      // knock the pivot around.
      bool dirty = false;
      for (int r = s + 1; r < m.rows(); ++r) {
        if (m.at(r, s) == 0) continue;
        Int q = m.at(r, s) / m.at(s, s);  // truncated division; remainder shrinks
        if (q != 0)
          for (int c = s; c < m.cols(); ++c) m.at(r, c) -= q * m.at(s, c);
        if (m.at(r, s) != 0) {
          swap_rows(m, s, r);
          dirty = true;
        }
      }
      if (dirty) continue;
      for (int c = s + 1; c < m.cols(); ++c) {
        if (m.at(s, c) == 0) continue;
        Int q = m.at(s, c) / m.at(s, s);
        if (q != 0)
          for (int r = s; r < m.rows(); ++r) m.at(r, c) -= q * m.at(r, s);
        if (m.at(s, c) != 0) {
          swap_cols(m, s, c);
          dirty = true;
        }
      }
      if (!dirty) break;
    }

    // Divisibility fix-up: pivot must divide every remaining entry.
    bool redo = false;
    for (int r = s + 1; r < m.rows() && !redo; ++r) {
      for (int c = s + 1; c < m.cols() && !redo; ++c) {
        if (m.at(r, c) % m.at(s, s) != 0) {
          for (int cc = s; cc < m.cols(); ++cc) m.at(s, cc) += m.at(r, cc);
          redo = true;
        }
      }
    }
    if (redo) {
      --s;
      continue;
    }
    factors.push_back(abs(m.at(s, s)));
  }

  while (static_cast<int>(factors.size()) < n) factors.emplace_back(0);
  return factors;
}

H1Data h1_of_presentation(const Presentation& p) {
  const int ngens = p.alphabet.size();
  IntMatrix rel(ngens, 1);
  ExponentVector ev = exponent_vector(p.relator, p.alphabet);
  for (int g = 0; g < ngens; ++g) rel.at(g, 0) = Int(static_cast<long>(ev[g]));

  auto factors = smith_normal_form(rel);
  int rank = 0;
  H1Data h;
  for (const Int& d : factors) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) h.torsion.push_back(d);
  }
  h.betti = ngens - rank;
  return h;
}

}  // namespace orsolv::intlin
