#include "orsolv/words.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace orsolv {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("alphabet must be nonempty");
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty generator name");
    if (!index_.emplace(names_[i], i).second)
      throw std::invalid_argument("duplicate generator name: " + names_[i]);
  }
}

Alphabet Alphabet::from_letters(const std::string& letters) {
  std::vector<std::string> names;
  for (char c : letters) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (!std::islower(static_cast<unsigned char>(c)))
      throw std::invalid_argument(std::string("generator letters must be lowercase: ") + c);
    names.emplace_back(1, c);
  }
  return Alphabet(std::move(names));
}

std::optional<Gen> Alphabet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return letter_rank(a[i]) < letter_rank(b[i]);
  }
  return false;
}

Word reduce_letters(const Word& raw) {
  Word out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back() == inv(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word reduce(const Word& raw, const Alphabet& alphabet) {
  for (Letter l : raw) {
    if (l == 0 || gen_of(l) >= alphabet.size())
      throw UnknownGeneratorError("letter outside alphabet");
  }
  return reduce_letters(raw);
}

Word concat_reduce(const Word& a, const Word& b) {
  Word out = a;
  for (Letter l : b) {
    if (!out.empty() && out.back() == inv(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inv(*it));
  return out;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == inv(w[i + 1])) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) return false;
  return w.size() < 2 || w.front() != inv(w.back());
}

CyclicReduction cyclic_reduce(const Word& w) {
  CyclicReduction r;
  r.core = w;
  while (r.core.size() >= 2 && r.core.front() == inv(r.core.back())) {
    r.conjugator.push_back(r.core.back());
    r.core.pop_back();
    r.core.erase(r.core.begin());
  }
  std::reverse(r.conjugator.begin(), r.conjugator.end());
  return r;
}

Word least_rotation(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  Word rot = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (shortlex_less(rot, best)) best = rot;
  }
  return best;
}

bool is_conjugate(const Word& u, const Word& v) {
  Word cu = cyclic_reduce(u).core;
  Word cv = cyclic_reduce(v).core;
  if (cu.size() != cv.size()) return false;
  return least_rotation(cu) == least_rotation(cv);
}

Word canonical_class_rep(const Word& w) {
  Word a = least_rotation(w);
  Word b = least_rotation(inverse(w));
  return shortlex_less(b, a) ? b : a;
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) throw EmptyWordError("primitive_root of empty word");
  const std::size_t n = w.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i + d < n; ++i)
      if (w[i] != w[i + d]) ok = false;
    if (ok) {
      PrimitiveRoot r;
      r.root.assign(w.begin(), w.begin() + d);
      r.power = static_cast<int>(n / d);
      return r;
    }
  }
  return {w, 1};  // unreachable
}

ExponentVector exponent_vector(const Word& w, const Alphabet& alphabet) {
  ExponentVector v(alphabet.size(), 0);
  for (Letter l : w) v[gen_of(l)] += is_inverse(l) ? -1 : 1;
  return v;
}

namespace {

bool exponent_compatible(const ExponentVector& ew, const ExponentVector& er) {
  bool w_zero = std::all_of(ew.begin(), ew.end(), [](long long x) { return x == 0; });
  if (w_zero)
    return std::all_of(er.begin(), er.end(), [](long long x) { return x == 0; });
  // need ew = k * er for some nonzero integer k
  long long k = 0;
  for (std::size_t i = 0; i < ew.size(); ++i) {
    if (er[i] == 0) {
      if (ew[i] != 0) return false;
      continue;
    }
    if (ew[i] % er[i] != 0) return false;
    long long ki = ew[i] / er[i];
    if (ki == 0) return false;
    if (k == 0)
      k = ki;
    else if (k != ki)
      return false;
  }
  return k != 0;
}

void dfs_candidates(const Alphabet& alphabet, int max_len, Word& cur,
                    const ExponentVector& ew, std::vector<Word>& out) {
  if (!cur.empty()) {
    if (is_cyclically_reduced(cur) && canonical_class_rep(cur) == cur) {
      ExponentVector er(alphabet.size(), 0);
      for (Letter l : cur) er[gen_of(l)] += is_inverse(l) ? -1 : 1;
      if (exponent_compatible(ew, er)) out.push_back(cur);
    }
  }
  if (static_cast<int>(cur.size()) == max_len) return;
  for (Gen g = 0; g < alphabet.size(); ++g) {
    for (int s = 0; s < 2; ++s) {
      Letter l = make_letter(g, s == 1);
      if (!cur.empty() && cur.back() == inv(l)) continue;
      cur.push_back(l);
      dfs_candidates(alphabet, max_len, cur, ew, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<Word> enumerate_candidates(const Word& w, const Alphabet& alphabet,
                                       int max_len) {
  std::vector<Word> out;
  if (w.empty() || max_len <= 0) return out;
  ExponentVector ew = exponent_vector(w, alphabet);
  Word cur;
  dfs_candidates(alphabet, max_len, cur, ew, out);
  std::sort(out.begin(), out.end(), ShortlexLess{});
  return out;
}

Word parse_word(const std::string& text, const Alphabet& alphabet) {
  Word raw;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
    std::string name(1, upper ? static_cast<char>(std::tolower(c)) : c);
    auto g = alphabet.find(name);
    if (!g) throw UnknownGeneratorError("unknown generator: " + std::string(1, c));
    raw.push_back(make_letter(*g, upper));
  }
  return reduce_letters(raw);
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  std::string out;
  for (Letter l : w) {
    const std::string& n = alphabet.name(gen_of(l));
    if (n.size() != 1) throw std::invalid_argument("multi-letter generator name in text format");
    char c = n[0];
    out.push_back(is_inverse(l) ? static_cast<char>(std::toupper(c)) : c);
  }
  return out;
}

}  // namespace orsolv
