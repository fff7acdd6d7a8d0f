#include "orsolv/magnus.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

// Solver layout
// -------------
// build_node() classifies a presentation <S | r> and returns a decision node:
//
//   FreeNode     r empty.
//   TorsionNode  supp(r) = {x}: the quotient is Z/n * F(S - x), decided by
//                free-product syllable normal forms.
//   ProductNode  supp(r) proper: free factor split, inner node over supp(r).
//   HnnNode      some t in supp(r) has zero exponent sum: HNN extension over
//                t with one-relator base on subscripted generators
//                x_i = t^-i x t^i; triviality by Britton pinch rewriting.
//   ChangeNode   every exponent sum nonzero: embed via y |-> v^a (adjoining
//                an a-th root), Tietze twist x = u v^-b, and split the image
//                over v. The twisted relator loses the y letters, so the
//                measure (relator length through HNN bases) still descends.
//
// Britton rewriting needs constructive membership in the associated Magnus
// subgroups of the base, so every node also answers member(w, Y): is w in the
// subgroup generated by the generator subset Y, and if so as which Y-word.
// Membership pushes through HNN nodes land in the "staircase" group
// < x_i | shifted relators > where finitely many shifts are relevant; those
// windows are chained as amalgams of copies of the base, glued along free
// Magnus subgroups (AmalgamNode), with coset bookkeeping resolved inside the
// free subgroup generated by the union of the two generator subsets.

namespace orsolv::magnus {
namespace detail {

using GenSet = std::vector<char>;  // mask indexed by generator

namespace {

long exp_sum(const Word& w, Gen g) {
  long s = 0;
  for (Letter l : w)
    if (gen_of(l) == g) s += is_inverse(l) ? -1 : 1;
  return s;
}

GenSet support_of(const Word& w, int ngens) {
  GenSet s(ngens, 0);
  for (Letter l : w) s[gen_of(l)] = 1;
  return s;
}

int popcount(const GenSet& s) {
  int n = 0;
  for (char c : s) n += (c != 0);
  return n;
}

bool letters_in(const Word& w, const GenSet& s) {
  for (Letter l : w)
    if (!s[gen_of(l)]) return false;
  return true;
}

GenSet set_union(const GenSet& a, const GenSet& b) {
  GenSet u(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) u[i] = a[i] || b[i];
  return u;
}

void append_power(Word& out, Gen g, long e) {
  for (long i = 0; i < std::labs(e); ++i) out.push_back(make_letter(g, e < 0));
}

}  // namespace

struct Ctx {
  ResourceBudget budget;
  std::size_t calls = 0;
  int depth = 0;

  void charge(std::size_t n = 1) {
    calls += n;
    if (calls > budget.max_oracle_calls)
      throw BudgetExceededError("oracle call budget exhausted");
  }
  void check_len(std::size_t n) {
    if (n > budget.max_word_length)
      throw BudgetExceededError("rewritten word length budget exhausted");
  }
};

struct DepthGuard {
  Ctx& ctx;
  explicit DepthGuard(Ctx& c) : ctx(c) {
    if (++ctx.depth > ctx.budget.max_depth)
      throw BudgetExceededError("recursion depth budget exhausted");
  }
  ~DepthGuard() { --ctx.depth; }
};

class Node;
using NodePtr = std::shared_ptr<Node>;

NodePtr build_node(int ngens, const Word& relator, Ctx* ctx);

class Node {
 public:
  Node(int ngens, GenSet support, Ctx* ctx)
      : ngens_(ngens), support_(std::move(support)), ctx_(ctx) {}
  virtual ~Node() = default;

  int ngens() const { return ngens_; }
  const GenSet& support() const { return support_; }

  virtual bool trivial(const Word& w) = 0;
  // Witness as a reduced word whose letters lie in Y, or nullopt.
  virtual std::optional<Word> member(const Word& w, const GenSet& Y) = 0;
  virtual void describe(std::ostream& os, int indent) const = 0;

  // Find c in <C> with g*c in <Ys>; returns (c, omega) where omega is the
  // <Ys>-word equal to g*c. Default route: both subsets generate inside the
  // free Magnus subgroup <Ys u C>, where the coset equation is a suffix
  // computation.
  virtual std::optional<std::pair<Word, Word>> coset_meet(const Word& g,
                                                          const GenSet& Ys,
                                                          const GenSet& C) {
    GenSet u = set_union(Ys, C);
    bool magnus = false;
    for (Gen x = 0; x < ngens_; ++x)
      if (support_[x] && !u[x]) magnus = true;
    if (!magnus && popcount(support_) > 0)
      throw BudgetExceededError("coset query outside the Magnus range");
    auto gh = member(g, u);
    if (!gh) return std::nullopt;
    // maximal C-suffix of gh
    std::size_t cut = gh->size();
    while (cut > 0 && C[gen_of((*gh)[cut - 1])]) --cut;
    Word alpha(gh->begin(), gh->begin() + cut);
    Word beta(gh->begin() + cut, gh->end());
    if (!letters_in(alpha, Ys)) return std::nullopt;
    return std::make_pair(inverse(beta), alpha);
  }

 protected:
  int ngens_;
  GenSet support_;
  Ctx* ctx_;
};

// ---------------------------------------------------------------------------

class FreeNode final : public Node {
 public:
  FreeNode(int ngens, Ctx* ctx) : Node(ngens, GenSet(ngens, 0), ctx) {}

  bool trivial(const Word& w) override {
    ctx_->charge(w.size() + 1);
    return reduce_letters(w).empty();
  }

  std::optional<Word> member(const Word& w, const GenSet& Y) override {
    ctx_->charge(w.size() + 1);
    Word r = reduce_letters(w);
    if (!letters_in(r, Y)) return std::nullopt;
    return r;
  }

  void describe(std::ostream& os, int indent) const override {
    os << std::string(indent, ' ') << "free(" << ngens_ << ")\n";
  }
};

// Quotient (Z/n) * F(rest) for relator x^n; n = 1 kills x.
class TorsionNode final : public Node {
 public:
  TorsionNode(int ngens, Gen x, long n, Ctx* ctx)
      : Node(ngens, GenSet(ngens, 0), ctx), x_(x), n_(n) {
    support_[x_] = 1;
  }

  Word normal_form(const Word& w) {
    Word cur = reduce_letters(w);
    for (;;) {
      ctx_->charge(cur.size() + 1);
      ctx_->check_len(cur.size());
      Word out;
      bool changed = false;
      std::size_t i = 0;
      while (i < cur.size()) {
        if (gen_of(cur[i]) == x_) {
          long e = 0;
          while (i < cur.size() && gen_of(cur[i]) == x_) {
            e += is_inverse(cur[i]) ? -1 : 1;
            ++i;
          }
          long em = ((e % n_) + n_) % n_;
          if (em != e) changed = true;
          append_power(out, x_, em);
        } else {
          out.push_back(cur[i++]);
        }
      }
      Word red = reduce_letters(out);
      if (red.size() != out.size()) changed = true;
      if (!changed) return red;
      cur = std::move(red);
    }
  }

  bool trivial(const Word& w) override { return normal_form(w).empty(); }

  std::optional<Word> member(const Word& w, const GenSet& Y) override {
    // With x in Y the whole torsion factor is included, without it no
    // x-syllable may survive; either way the normal form decides.
    Word nf = normal_form(w);
    if (!letters_in(nf, Y)) return std::nullopt;
    return nf;
  }

  void describe(std::ostream& os, int indent) const override {
    if (n_ == 1)
      os << std::string(indent, ' ') << "free-quotient(kill g" << x_ << ")\n";
    else
      os << std::string(indent, ' ') << "torsion(g" << x_ << "^" << n_ << ")\n";
  }

 private:
  Gen x_;
  long n_;
};

// Free factor split: inner one-relator group on supp(r), free on the rest.
class ProductNode final : public Node {
 public:
  ProductNode(int ngens, NodePtr inner, std::vector<int> to_inner,
              std::vector<Gen> from_inner, Ctx* ctx)
      : Node(ngens, GenSet(ngens, 0), ctx),
        inner_(std::move(inner)),
        to_inner_(std::move(to_inner)),
        from_inner_(std::move(from_inner)) {
    for (Gen g = 0; g < ngens; ++g)
      if (to_inner_[g] >= 0) support_[g] = 1;
  }

  bool trivial(const Word& w) override {
    auto syls = normal_form(w);
    return syls.empty();
  }

  std::optional<Word> member(const Word& w, const GenSet& Y) override {
    auto syls = normal_form(w);
    Word out;
    for (auto& s : syls) {
      if (s.inner) {
        GenSet yin(from_inner_.size(), 0);
        for (std::size_t i = 0; i < from_inner_.size(); ++i)
          if (Y[from_inner_[i]]) yin[i] = 1;
        auto om = inner_->member(map_in(s.w), yin);
        if (!om) return std::nullopt;
        Word back = map_out(*om);
        out.insert(out.end(), back.begin(), back.end());
      } else {
        if (!letters_in(s.w, Y)) return std::nullopt;
        out.insert(out.end(), s.w.begin(), s.w.end());
      }
    }
    return reduce_letters(out);
  }

  void describe(std::ostream& os, int indent) const override {
    os << std::string(indent, ' ') << "free-product(free rank "
       << ngens_ - static_cast<int>(from_inner_.size()) << ")\n";
    inner_->describe(os, indent + 2);
  }

 private:
  struct Syl {
    bool inner;
    Word w;  // outer letters
  };

  Word map_in(const Word& w) const {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(make_letter(to_inner_[gen_of(l)], is_inverse(l)));
    return out;
  }
  Word map_out(const Word& w) const {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(make_letter(from_inner_[gen_of(l)], is_inverse(l)));
    return out;
  }

  std::vector<Syl> split(const Word& w) const {
    std::vector<Syl> syls;
    for (Letter l : w) {
      bool in = to_inner_[gen_of(l)] >= 0;
      if (syls.empty() || syls.back().inner != in) syls.push_back({in, {}});
      syls.back().w.push_back(l);
    }
    return syls;
  }

  std::vector<Syl> normal_form(const Word& w) {
    std::vector<Syl> syls = split(reduce_letters(w));
    for (;;) {
      ctx_->charge(syls.size() + 1);
      bool changed = false;
      for (std::size_t i = 0; i < syls.size(); ++i) {
        bool dead = syls[i].inner ? inner_->trivial(map_in(syls[i].w))
                                  : reduce_letters(syls[i].w).empty();
        if (dead) {
          syls.erase(syls.begin() + i);
          changed = true;
          break;
        }
      }
      if (!changed) return syls;
      // merge neighbours of equal type after a deletion
      std::vector<Syl> merged;
      for (auto& s : syls) {
        if (!merged.empty() && merged.back().inner == s.inner) {
          merged.back().w = concat_reduce(merged.back().w, s.w);
        } else {
          merged.push_back(std::move(s));
        }
      }
      syls = std::move(merged);
    }
  }

  NodePtr inner_;
  std::vector<int> to_inner_;   // outer gen -> inner gen or -1
  std::vector<Gen> from_inner_;  // inner gen -> outer gen
};

// ---------------------------------------------------------------------------
// Subscripted-generator machinery shared by HnnNode and the staircase layer.

struct PairKey {
  Gen g;
  int sub;
  bool operator<(const PairKey& o) const {
    return g != o.g ? g < o.g : sub < o.sub;
  }
  bool operator==(const PairKey& o) const { return g == o.g && sub == o.sub; }
};

struct PLetter {
  PairKey p;
  bool inv;
};

// Maps a word over an outer id space into `inner` whose alphabet is a subset.
class RemapNode final : public Node {
 public:
  RemapNode(int outer_ngens, NodePtr inner, std::vector<int> to_inner,
            std::vector<Gen> from_inner, Ctx* ctx)
      : Node(outer_ngens, GenSet(outer_ngens, 0), ctx),
        inner_(std::move(inner)),
        to_inner_(std::move(to_inner)),
        from_inner_(std::move(from_inner)) {
    const GenSet& is = inner_->support();
    for (std::size_t i = 0; i < from_inner_.size(); ++i)
      if (is[i]) support_[from_inner_[i]] = 1;
  }

  const std::vector<Gen>& from_inner() const { return from_inner_; }

  Word map_in(const Word& w) const {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) {
      int t = to_inner_[gen_of(l)];
      assert(t >= 0);
      out.push_back(make_letter(t, is_inverse(l)));
    }
    return out;
  }
  Word map_out(const Word& w) const {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(make_letter(from_inner_[gen_of(l)], is_inverse(l)));
    return out;
  }
  GenSet set_in(const GenSet& Y) const {
    GenSet out(from_inner_.size(), 0);
    for (std::size_t i = 0; i < from_inner_.size(); ++i)
      if (Y[from_inner_[i]]) out[i] = 1;
    return out;
  }

  bool trivial(const Word& w) override { return inner_->trivial(map_in(w)); }

  std::optional<Word> member(const Word& w, const GenSet& Y) override {
    auto r = inner_->member(map_in(w), set_in(Y));
    if (!r) return std::nullopt;
    return map_out(*r);
  }

  std::optional<std::pair<Word, Word>> coset_meet(const Word& g, const GenSet& Ys,
                                                  const GenSet& C) override {
    auto r = inner_->coset_meet(map_in(g), set_in(Ys), set_in(C));
    if (!r) return std::nullopt;
    return std::make_pair(map_out(r->first), map_out(r->second));
  }

  void describe(std::ostream& os, int indent) const override {
    os << std::string(indent, ' ') << "remap\n";
    inner_->describe(os, indent + 2);
  }

 private:
  NodePtr inner_;
  std::vector<int> to_inner_;
  std::vector<Gen> from_inner_;
};

// Amalgamated product left *_<shared> right, the staircase gluing. <shared>
// is free and Magnus in both factors.
class AmalgamNode final : public Node {
 public:
  AmalgamNode(int ngens, NodePtr left, NodePtr right, GenSet lgens, GenSet rgens,
              Ctx* ctx)
      : Node(ngens, set_union(left->support(), right->support()), ctx),
        left_(std::move(left)),
        right_(std::move(right)),
        lgens_(std::move(lgens)),
        rgens_(std::move(rgens)) {
    shared_.assign(ngens, 0);
    for (Gen g = 0; g < ngens; ++g) shared_[g] = lgens_[g] && rgens_[g];
  }

  bool trivial(const Word& w) override {
    auto syls = normal_form(w);
    if (syls.empty()) return true;
    if (syls.size() == 1) {
      if (syls[0].side == 0) return reduce_letters(syls[0].w).empty();
      return factor(syls[0].side)->trivial(syls[0].w);
    }
    return false;
  }

  std::optional<Word> member(const Word& w, const GenSet& Y) override {
    auto syls = normal_form(w);
    if (syls.empty()) return Word{};
    if (syls.size() == 1 && syls[0].side == 0) {
      Word r = reduce_letters(syls[0].w);
      if (!letters_in(r, Y)) return std::nullopt;
      return r;
    }
    if (syls.size() == 1) {
      GenSet yf = intersect(Y, side_gens(syls[0].side));
      return factor(syls[0].side)->member(syls[0].w, yf);
    }
    // Coset scan: w = d_1 ... d_k with alternating factor syllables; keep the
    // pending shared-subgroup correction on the left.
    Word c;  // element of <shared>
    Word out;
    for (auto& s : syls) {
      assert(s.side != 0);
      Word g = concat_reduce(c, s.w);
      GenSet yf = intersect(Y, side_gens(s.side));
      auto met = factor(s.side)->coset_meet(g, yf, shared_);
      if (!met) return std::nullopt;
      out = concat_reduce(out, met->second);
      c = inverse(met->first);
    }
    if (!letters_in(c, Y)) return std::nullopt;
    out = concat_reduce(out, c);
    return out;
  }

  void describe(std::ostream& os, int indent) const override {
    os << std::string(indent, ' ') << "amalgam\n";
    left_->describe(os, indent + 2);
    right_->describe(os, indent + 2);
  }

 private:
  struct Syl {
    int side;  // 0 = pure shared, 1 = left, 2 = right
    Word w;
  };

  Node* factor(int side) const { return side == 1 ? left_.get() : right_.get(); }
  const GenSet& side_gens(int side) const { return side == 1 ? lgens_ : rgens_; }

  static GenSet intersect(const GenSet& a, const GenSet& b) {
    GenSet out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
    return out;
  }

  int classify(Letter l) const {
    Gen g = gen_of(l);
    if (shared_[g]) return 0;
    if (lgens_[g]) return 1;
    assert(rgens_[g]);
    return 2;
  }

  std::vector<Syl> merge_pass(std::vector<Syl> syls) const {
    // attach shared syllables to a factor neighbour, merge equal sides
    std::vector<Syl> out;
    for (auto& s : syls) {
      Word red = reduce_letters(s.w);
      if (red.empty()) continue;
      s.w = std::move(red);
      if (!out.empty() &&
          (out.back().side == s.side || out.back().side == 0 || s.side == 0)) {
        int side = out.back().side == 0 ? s.side : out.back().side;
        out.back().side = side;
        out.back().w = concat_reduce(out.back().w, s.w);
        if (out.back().w.empty()) out.pop_back();
      } else {
        out.push_back(std::move(s));
      }
    }
    return out;
  }

  std::vector<Syl> normal_form(const Word& w) {
    std::vector<Syl> syls;
    for (Letter l : reduce_letters(w)) {
      int side = classify(l);
      if (syls.empty() || (syls.back().side != side))
        syls.push_back({side, {}});
      syls.back().w.push_back(l);
    }
    syls = merge_pass(std::move(syls));
    for (;;) {
      ctx_->charge(syls.size() + 1);
      bool changed = false;
      for (auto& s : syls) {
        if (s.side == 0) continue;
        if (letters_in(s.w, shared_)) {
          s.side = 0;  // degenerated back to a shared word
          changed = true;
          continue;
        }
        auto om = factor(s.side)->member(s.w, shared_);
        if (om) {
          s.side = 0;
          s.w = *om;
          changed = true;
        }
      }
      if (!changed) break;
      syls = merge_pass(std::move(syls));
    }
    // drop a lone trailing/leading shared word only if empty; keep otherwise
    return syls;
  }

  NodePtr left_, right_;
  GenSet lgens_, rgens_, shared_;
};

// ---------------------------------------------------------------------------

// HNN extension over a zero-exponent-sum generator t. Base one-relator group
// on subscripted generators x_i = t^-i x t^i with i inside the relator
// window; conjugation by t^-1 shifts subscripts up.
class HnnNode final : public Node {
 public:
  HnnNode(int ngens, Word relator, Gen stable, Ctx* ctx)
      : Node(ngens, GenSet(ngens, 1), ctx),
        relator_(std::move(relator)),
        stable_(stable) {
    build_base();
  }

  Gen stable() const { return stable_; }

  bool trivial(const Word& w) override {
    if (exp_sum(w, stable_) != 0) return false;
    auto segs = to_segments(w);
    britton(segs);
    // a pinch-free word still holding stable letters is nontrivial (Britton)
    if (segs.size() != 1) return false;
    assert(segs[0].e == 0);
    return base_->trivial(segs[0].h);
  }

  std::optional<Word> member(const Word& w, const GenSet& Y) override {
    DepthGuard dg(*ctx_);
    if (Y[stable_]) {
      long j = exp_sum(w, stable_);
      GenSet yprime = Y;
      yprime[stable_] = 0;
      Pattern pat{yprime, Pattern::Any, 0};
      auto om = staircase_member(pair_stream(w), pat);
      if (!om) return std::nullopt;
      Word out = pairs_to_word(*om);
      append_power(out, stable_, j);
      return reduce_letters(out);
    }
    if (exp_sum(w, stable_) != 0) return std::nullopt;
    Pattern pat{Y, Pattern::Zero, 0};
    auto om = staircase_member(pair_stream(w), pat);
    if (!om) return std::nullopt;
    return reduce_letters(pairs_to_word(*om));
  }

  // Membership in < t^delta, Y' > with t the stable letter; witness as an
  // outer word whose stable-letter runs are all multiples of delta.
  std::optional<Word> member_stable_power(const Word& w, long delta,
                                          const GenSet& yprime) {
    DepthGuard dg(*ctx_);
    assert(delta != 0 && !yprime[stable_]);
    long j = exp_sum(w, stable_);
    if (j % delta != 0) return std::nullopt;
    Pattern pat{yprime, Pattern::Mod, delta};
    auto om = staircase_member(pair_stream(w), pat);
    if (!om) return std::nullopt;
    Word out = pairs_to_word(*om);
    append_power(out, stable_, j);
    return reduce_letters(out);
  }

  void describe(std::ostream& os, int indent) const override {
    os << std::string(indent, ' ') << "hnn(stable g" << stable_ << ", base relator len "
       << rel_tilde_.size() << ")\n";
    base_->describe(os, indent + 2);
  }

 private:
  struct Seg {
    long e;  // power of the stable letter in front of h
    Word h;  // word over base ids
  };

  // Maintains the normalized segment list: only the leading segment may have
  // e = 0, a zero-power gap concatenates the neighbouring base words, and
  // base words stay freely reduced.
  struct SegBuilder {
    std::vector<Seg> segs{{0, {}}};
    void push_t(long e) {
      if (e == 0) return;
      if (!segs.back().h.empty()) segs.push_back({0, {}});
      segs.back().e += e;
      if (segs.back().e == 0 && segs.size() > 1) segs.pop_back();
    }
    void push_h(Letter l) {
      Word& h = segs.back().h;
      if (!h.empty() && h.back() == inv(l))
        h.pop_back();
      else
        h.push_back(l);
    }
    void push_word(const Word& w) {
      for (Letter l : w) push_h(l);
    }
    void push_seg(const Seg& s) {
      push_t(s.e);
      push_word(s.h);
    }
  };

  struct Pattern {
    GenSet gens;  // outer generators allowed (stable letter excluded)
    enum Kind { Zero, Any, Mod } kind;
    long delta;
    bool contains(Gen g, int sub) const {
      if (!gens[g]) return false;
      switch (kind) {
        case Zero: return sub == 0;
        case Any: return true;
        case Mod: return sub % delta == 0;
      }
      return false;
    }
  };

  void build_base() {
    // subscript = -(prefix exponent sum of the stable letter)
    lo_.assign(ngens_, 0);
    hi_.assign(ngens_, 0);
    std::vector<char> seen(ngens_, 0);
    long p = 0;
    for (Letter l : relator_) {
      Gen g = gen_of(l);
      if (g == stable_) {
        p += is_inverse(l) ? -1 : 1;
        continue;
      }
      int sub = static_cast<int>(-p);
      if (!seen[g]) {
        seen[g] = 1;
        lo_[g] = hi_[g] = sub;
      } else {
        lo_[g] = std::min(lo_[g], sub);
        hi_[g] = std::max(hi_[g], sub);
      }
    }
    base_off_.assign(ngens_, -1);
    int nb = 0;
    for (Gen g = 0; g < ngens_; ++g) {
      if (g == stable_) continue;
      assert(seen[g]);  // supp(relator) covers the alphabet here
      base_off_[g] = nb;
      nb += hi_[g] - lo_[g] + 1;
    }
    nbase_ = nb;
    base_pair_.resize(nb);
    for (Gen g = 0; g < ngens_; ++g) {
      if (g == stable_) continue;
      for (int i = lo_[g]; i <= hi_[g]; ++i)
        base_pair_[base_off_[g] + (i - lo_[g])] = PairKey{g, i};
    }

    rel_tilde_.clear();
    p = 0;
    for (Letter l : relator_) {
      Gen g = gen_of(l);
      if (g == stable_) {
        p += is_inverse(l) ? -1 : 1;
        continue;
      }
      rel_tilde_.push_back(make_letter(base_id(g, static_cast<int>(-p)), is_inverse(l)));
    }
    base_ = build_node(nbase_, rel_tilde_, ctx_);

    lowerA_.assign(nbase_, 0);
    upperB_.assign(nbase_, 0);
    for (Gen g = 0; g < ngens_; ++g) {
      if (g == stable_) continue;
      for (int i = lo_[g]; i < hi_[g]; ++i) lowerA_[base_id(g, i)] = 1;
      for (int i = lo_[g] + 1; i <= hi_[g]; ++i) upperB_[base_id(g, i)] = 1;
    }
  }

  int base_id(Gen g, int sub) const {
    assert(g != stable_ && sub >= lo_[g] && sub <= hi_[g]);
    return base_off_[g] + (sub - lo_[g]);
  }

  Word shift(const Word& h, int d) const {
    Word out;
    out.reserve(h.size());
    for (Letter l : h) {
      PairKey p = base_pair_[gen_of(l)];
      out.push_back(make_letter(base_id(p.g, p.sub + d), is_inverse(l)));
    }
    return out;
  }

  // w as prod t^{e_j} h_j with h_j over base ids; out-of-window original
  // letters are window-clamped via g = t^c (g,c) t^-c.
  std::vector<Seg> to_segments(const Word& w) {
    SegBuilder b;
    for (Letter l : w) {
      ctx_->charge();
      Gen g = gen_of(l);
      if (g == stable_) {
        b.push_t(is_inverse(l) ? -1 : 1);
        continue;
      }
      int c = std::clamp(0, lo_[g], hi_[g]);
      b.push_t(c);
      b.push_h(make_letter(base_id(g, c), is_inverse(l)));
      b.push_t(-c);
    }
    return std::move(b.segs);
  }

  void britton(std::vector<Seg>& segs) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t j = 0; j + 1 < segs.size(); ++j) {
        long e1 = segs[j].e;
        long e2 = segs[j + 1].e;
        const Word& h = segs[j].h;
        std::optional<Word> om;
        int d = 0;
        if (e1 < 0 && e2 > 0) {
          om = base_->member(h, lowerA_);  // t^-1 h t pinch
          d = +1;
        } else if (e1 > 0 && e2 < 0) {
          om = base_->member(h, upperB_);  // t h t^-1 pinch
          d = -1;
        } else {
          continue;
        }
        ctx_->charge();
        if (!om) continue;
        SegBuilder b;
        for (std::size_t i = 0; i < j; ++i) b.push_seg(segs[i]);
        b.push_t(segs[j].e + d);
        b.push_word(shift(*om, d));
        b.push_t(segs[j + 1].e - d);
        b.push_word(segs[j + 1].h);
        for (std::size_t i = j + 2; i < segs.size(); ++i) b.push_seg(segs[i]);
        segs = std::move(b.segs);
        progress = true;
        break;
      }
    }
  }

  std::vector<PLetter> pair_stream(const Word& w) const {
    std::vector<PLetter> out;
    long p = 0;
    for (Letter l : w) {
      Gen g = gen_of(l);
      if (g == stable_) {
        p += is_inverse(l) ? -1 : 1;
        continue;
      }
      out.push_back({PairKey{g, static_cast<int>(-p)}, is_inverse(l)});
    }
    return out;
  }

  Word pairs_to_word(const std::vector<PLetter>& pls) const {
    Word out;
    for (const PLetter& pl : pls) {
      append_power(out, stable_, -pl.p.sub);
      out.push_back(make_letter(pl.p.g, pl.inv));
      append_power(out, stable_, pl.p.sub);
    }
    return reduce_letters(out);
  }

  // Membership of a subscripted word in the pattern subgroup of the
  // staircase group < x_i | shifted relators >.
  std::optional<std::vector<PLetter>> staircase_member(std::vector<PLetter> wp,
                                                       const Pattern& pat) {
    // free reduction over pairs
    {
      std::vector<PLetter> red;
      for (auto& pl : wp) {
        if (!red.empty() && red.back().p == pl.p && red.back().inv != pl.inv)
          red.pop_back();
        else
          red.push_back(pl);
      }
      wp = std::move(red);
    }
    if (wp.empty()) return wp;

    // Working window: per-generator subscript intervals spanning the query,
    // widened to the nearest pattern anchors. The subgroup generated by an
    // interval-closed set of subscripted generators carries the induced
    // presentation, whose relators are exactly the shifts supported inside
    // the window.
    struct Interval {
      bool used = false;
      int lo = 0, hi = 0;
      void add(int s) {
        if (!used) {
          used = true;
          lo = hi = s;
        } else {
          lo = std::min(lo, s);
          hi = std::max(hi, s);
        }
      }
      bool contains(int s) const { return used && lo <= s && s <= hi; }
    };
    std::vector<Interval> win(ngens_);
    for (auto& pl : wp) win[pl.p.g].add(pl.p.sub);
    for (Gen g = 0; g < ngens_; ++g) {
      if (!win[g].used || !pat.gens[g]) continue;
      if (pat.kind == Pattern::Zero) {
        win[g].add(0);
      } else if (pat.kind == Pattern::Mod) {
        long d = std::labs(pat.delta);
        long lo = win[g].lo, hi = win[g].hi;
        long flo = (lo >= 0 ? lo / d : -((-lo + d - 1) / d)) * d;  // floor multiple
        long fhi = (hi >= 0 ? (hi + d - 1) / d : -((-hi) / d)) * d;  // ceil multiple
        win[g].add(static_cast<int>(flo));
        win[g].add(static_cast<int>(fhi));
      }
    }
    std::vector<PairKey> rel_pairs;
    for (Letter l : rel_tilde_) rel_pairs.push_back(base_pair_[gen_of(l)]);
    int jlo = 0, jhi = -1;
    {
      // candidate shift range from the window extents
      bool any = false;
      for (auto& rp : rel_pairs) {
        const Interval& iv = win[rp.g];
        if (!iv.used) continue;
        int lo = iv.lo - rp.sub, hi = iv.hi - rp.sub;
        if (!any) {
          jlo = lo;
          jhi = hi;
          any = true;
        } else {
          jlo = std::min(jlo, lo);
          jhi = std::max(jhi, hi);
        }
      }
      if (!any) jhi = jlo - 1;
    }
    // A shift is relevant when it meets the window and every support pair is
    // either inside the window or a pattern position (witness letters may sit
    // anywhere in the pattern subgroup).
    std::set<int> shifts;
    for (int j = jlo; j <= jhi; ++j) {
      bool meets = false, ok = true;
      for (auto& rp : rel_pairs) {
        int sub = rp.sub + j;
        bool inwin = win[rp.g].contains(sub);
        if (inwin) meets = true;
        if (!inwin && !pat.contains(rp.g, sub)) ok = false;
      }
      if (ok && meets) shifts.insert(j);
    }
    ctx_->charge(shifts.size() + wp.size() + 1);
    if (shifts.size() > 64)
      throw BudgetExceededError("staircase window exceeded the shift cap");

    // pair space: window pairs of each shift, plus the word's own pairs
    std::map<PairKey, int> pidx;
    std::vector<PairKey> pairs;
    auto intern = [&](PairKey k) {
      auto it = pidx.find(k);
      if (it != pidx.end()) return it->second;
      int id = static_cast<int>(pairs.size());
      pidx.emplace(k, id);
      pairs.push_back(k);
      return id;
    };
    std::vector<GenSet> shift_gens;
    std::vector<int> shift_list(shifts.begin(), shifts.end());
    for (int j : shift_list) {
      for (Gen g = 0; g < ngens_; ++g) {
        if (g == stable_) continue;
        for (int i = lo_[g]; i <= hi_[g]; ++i) intern(PairKey{g, i + j});
      }
    }
    for (auto& pl : wp) intern(pl.p);
    const int np = static_cast<int>(pairs.size());
    shift_gens.reserve(shift_list.size());
    for (int j : shift_list) {
      GenSet gs(np, 0);
      for (Gen g = 0; g < ngens_; ++g) {
        if (g == stable_) continue;
        for (int i = lo_[g]; i <= hi_[g]; ++i) gs[intern(PairKey{g, i + j})] = 1;
      }
      shift_gens.push_back(std::move(gs));
    }

    GenSet pat_mask(np, 0);
    GenSet core_mask(np, 0);
    for (int i = 0; i < np; ++i) {
      if (pat.contains(pairs[i].g, pairs[i].sub)) pat_mask[i] = 1;
      for (auto& gs : shift_gens)
        if (gs[i]) core_mask[i] = 1;
    }

    // chain the shifts into an amalgam over the pair space
    NodePtr core;
    GenSet core_gens(np, 0);
    for (std::size_t si = 0; si < shift_list.size(); ++si) {
      int j = shift_list[si];
      std::vector<int> to_inner(np, -1);
      std::vector<Gen> from_inner(nbase_);
      for (Gen g = 0; g < ngens_; ++g) {
        if (g == stable_) continue;
        for (int i = lo_[g]; i <= hi_[g]; ++i) {
          int pid = intern(PairKey{g, i + j});
          to_inner[pid] = base_id(g, i);
          from_inner[base_id(g, i)] = pid;
        }
      }
      NodePtr fac = std::make_shared<RemapNode>(np, base_, std::move(to_inner),
                                                std::move(from_inner), ctx_);
      if (!core) {
        core = fac;
        core_gens = shift_gens[si];
      } else {
        core = std::make_shared<AmalgamNode>(np, core, fac, core_gens,
                                             shift_gens[si], ctx_);
        core_gens = set_union(core_gens, shift_gens[si]);
      }
    }

    // free product split: core syllables vs free pairs outside every window
    Word wide;
    wide.reserve(wp.size());
    for (auto& pl : wp) wide.push_back(make_letter(intern(pl.p), pl.inv));

    struct FSyl {
      bool in_core;
      Word w;
    };
    auto split = [&](const Word& w) {
      std::vector<FSyl> syls;
      for (Letter l : w) {
        bool in = core_mask[gen_of(l)] != 0;
        if (syls.empty() || syls.back().in_core != in) syls.push_back({in, {}});
        syls.back().w.push_back(l);
      }
      return syls;
    };
    std::vector<FSyl> syls = split(wide);
    if (core) {
      for (;;) {
        ctx_->charge(syls.size() + 1);
        bool changed = false;
        for (std::size_t i = 0; i < syls.size(); ++i) {
          bool dead = syls[i].in_core ? core->trivial(syls[i].w)
                                      : reduce_letters(syls[i].w).empty();
          if (dead) {
            syls.erase(syls.begin() + i);
            changed = true;
            break;
          }
        }
        if (!changed) break;
        std::vector<FSyl> merged;
        for (auto& s : syls) {
          if (!merged.empty() && merged.back().in_core == s.in_core)
            merged.back().w = concat_reduce(merged.back().w, s.w);
          else
            merged.push_back(std::move(s));
        }
        syls = std::move(merged);
      }
    }

    Word flat;
    for (auto& s : syls) {
      if (s.in_core && core) {
        auto om = core->member(s.w, pat_mask);
        if (!om) return std::nullopt;
        flat = concat_reduce(flat, *om);
      } else {
        if (!letters_in(s.w, pat_mask)) return std::nullopt;
        flat = concat_reduce(flat, s.w);
      }
    }
    std::vector<PLetter> out;
    out.reserve(flat.size());
    for (Letter l : flat) out.push_back({pairs[gen_of(l)], is_inverse(l)});
    return out;
  }

  Word relator_;
  Gen stable_;
  std::vector<int> lo_, hi_, base_off_;
  int nbase_ = 0;
  std::vector<PairKey> base_pair_;
  Word rel_tilde_;
  NodePtr base_;
  GenSet lowerA_, upperB_;
};

// ---------------------------------------------------------------------------

// Every exponent sum nonzero. For a pair (x, y) with sums (a, b), the group
// embeds into <u, v, rest | r[x -> u v^-b, y -> v^a]> where v now has zero
// exponent sum; triviality and membership push through the embedding. The
// pair is chosen per query so that x (the twisted image) stays outside the
// queried subgroup.
class ChangeNode final : public Node {
 public:
  ChangeNode(int ngens, Word relator, Ctx* ctx)
      : Node(ngens, GenSet(ngens, 1), ctx), relator_(std::move(relator)) {}

  bool trivial(const Word& w) override {
    Entry& e = entry(0, 1);
    return e.trivial(*this, w);
  }

  std::optional<Word> member(const Word& w, const GenSet& Y) override {
    DepthGuard dg(*ctx_);
    Gen x = -1, y_out = -1, y_in = -1;
    for (Gen g = 0; g < ngens_; ++g) {
      if (!Y[g]) {
        if (x < 0)
          x = g;
        else if (y_out < 0)
          y_out = g;
      } else if (y_in < 0) {
        y_in = g;
      }
    }
    assert(x >= 0);  // Magnus subsets omit a generator
    if (y_out >= 0) {
      Entry& e = entry(x, y_out);
      auto om = e.node_member(*this, w, Y);
      return om;  // witness uses untouched generators only
    }
    assert(y_in >= 0);
    Entry& e = entry(x, y_in);
    return e.member_with_root(*this, w, Y, y_in);
  }

  void describe(std::ostream& os, int indent) const override {
    os << std::string(indent, ' ') << "change-of-variables(relator len "
       << relator_.size() << ")\n";
    if (auto it = inners_.find({0, 1}); it != inners_.end() && it->second.supp_node)
      it->second.supp_node->describe(os, indent + 2);
  }

 private:
  struct Entry {
    Gen x, y;       // outer ids; inner alphabet reuses them as u := x, v := y
    long a, b;      // a = exp sum of x, b = exp sum of y in the relator
    Word rbar;      // twisted relator over inner ids
    GenSet supp;    // support of rbar
    // solver over supp(rbar) (dense remap); HNN with stable v when v in supp
    NodePtr supp_node;
    std::vector<int> to_supp;
    std::vector<Gen> from_supp;
    HnnNode* hnn = nullptr;  // set when v in supp(rbar)

    Word translate(const Word& w) const {
      Word out;
      out.reserve(w.size());
      for (Letter l : w) {
        Gen g = gen_of(l);
        bool invl = is_inverse(l);
        if (g == x) {
          // x -> u v^-b, x^-1 -> v^b u^-1
          if (!invl) {
            out.push_back(make_letter(x));
            append_power(out, y, -b);
          } else {
            append_power(out, y, b);
            out.push_back(make_letter(x, true));
          }
        } else if (g == y) {
          append_power(out, y, invl ? -a : a);
        } else {
          out.push_back(l);
        }
      }
      return reduce_letters(out);
    }

    Word map_supp_in(const Word& w) const {
      Word out;
      for (Letter l : w) out.push_back(make_letter(to_supp[gen_of(l)], is_inverse(l)));
      return out;
    }
    Word map_supp_out(const Word& w) const {
      Word out;
      for (Letter l : w) out.push_back(make_letter(from_supp[gen_of(l)], is_inverse(l)));
      return out;
    }

    bool trivial(ChangeNode& cn, const Word& w) {
      Word t = translate(w);
      cn.ctx_->check_len(t.size());
      cn.ctx_->charge(t.size() + 1);
      return product_scan(cn, t, nullptr, nullptr);
    }

    std::optional<Word> node_member(ChangeNode& cn, const Word& w, const GenSet& Y) {
      // plain push: x, y both outside Y
      Word t = translate(w);
      cn.ctx_->check_len(t.size());
      Word out;
      if (!product_scan(cn, t, &Y, &out)) return std::nullopt;
      return reduce_letters(out);
    }

    std::optional<Word> member_with_root(ChangeNode& cn, const Word& w,
                                         const GenSet& Y, Gen yg) {
      // target <y, Y - y> pushes to <v^a, Y - y>
      Word t = translate(w);
      cn.ctx_->check_len(t.size());
      GenSet yprime = Y;
      yprime[yg] = 0;
      Word out;
      if (!root_scan(cn, t, yprime, out)) return std::nullopt;
      // fold v^a blocks back to y
      Word back;
      std::size_t i = 0;
      while (i < out.size()) {
        Gen g = gen_of(out[i]);
        if (g == y) {
          long e = 0;
          while (i < out.size() && gen_of(out[i]) == y) {
            e += is_inverse(out[i]) ? -1 : 1;
            ++i;
          }
          assert(e % a == 0);
          append_power(back, yg, e / a);
        } else {
          back.push_back(out[i++]);
        }
      }
      return reduce_letters(back);
    }

    // Splits t into supp(rbar)-syllables and free leftovers and walks the
    // free-product normal form. Y == nullptr: triviality test. Otherwise
    // collect a witness over Y into *out.
    bool product_scan(ChangeNode& cn, const Word& t, const GenSet* Y, Word* out) {
      struct Syl {
        bool in;
        Word w;
      };
      auto split = [&](const Word& w) {
        std::vector<Syl> syls;
        for (Letter l : w) {
          bool in = supp[gen_of(l)] != 0;
          if (syls.empty() || syls.back().in != in) syls.push_back({in, {}});
          syls.back().w.push_back(l);
        }
        return syls;
      };
      std::vector<Syl> syls = split(reduce_letters(t));
      for (;;) {
        cn.ctx_->charge(syls.size() + 1);
        bool changed = false;
        for (std::size_t i = 0; i < syls.size(); ++i) {
          bool dead = syls[i].in ? supp_node->trivial(map_supp_in(syls[i].w))
                                 : reduce_letters(syls[i].w).empty();
          if (dead) {
            syls.erase(syls.begin() + i);
            changed = true;
            break;
          }
        }
        if (!changed) break;
        std::vector<Syl> merged;
        for (auto& s : syls) {
          if (!merged.empty() && merged.back().in == s.in)
            merged.back().w = concat_reduce(merged.back().w, s.w);
          else
            merged.push_back(std::move(s));
        }
        syls = std::move(merged);
      }
      if (!Y) return syls.empty();
      for (auto& s : syls) {
        if (s.in) {
          GenSet yin(from_supp.size(), 0);
          for (std::size_t g = 0; g < from_supp.size(); ++g)
            if ((*Y)[from_supp[g]]) yin[g] = 1;
          auto om = supp_node->member(map_supp_in(s.w), yin);
          if (!om) return false;
          Word back = map_supp_out(*om);
          out->insert(out->end(), back.begin(), back.end());
        } else {
          if (!letters_in(s.w, *Y)) return false;
          out->insert(out->end(), s.w.begin(), s.w.end());
        }
      }
      return true;
    }

    // Membership in <v^a> * <Y'> split across supp(rbar) syllables and free
    // leftovers (v may sit on either side depending on supp(rbar)).
    bool root_scan(ChangeNode& cn, const Word& t, const GenSet& yprime, Word& out) {
      struct Syl {
        bool in;
        Word w;
      };
      auto split = [&](const Word& w) {
        std::vector<Syl> syls;
        for (Letter l : w) {
          bool in = supp[gen_of(l)] != 0;
          if (syls.empty() || syls.back().in != in) syls.push_back({in, {}});
          syls.back().w.push_back(l);
        }
        return syls;
      };
      std::vector<Syl> syls = split(reduce_letters(t));
      for (;;) {
        cn.ctx_->charge(syls.size() + 1);
        bool changed = false;
        for (std::size_t i = 0; i < syls.size(); ++i) {
          bool dead = syls[i].in ? supp_node->trivial(map_supp_in(syls[i].w))
                                 : reduce_letters(syls[i].w).empty();
          if (dead) {
            syls.erase(syls.begin() + i);
            changed = true;
            break;
          }
        }
        if (!changed) break;
        std::vector<Syl> merged;
        for (auto& s : syls) {
          if (!merged.empty() && merged.back().in == s.in)
            merged.back().w = concat_reduce(merged.back().w, s.w);
          else
            merged.push_back(std::move(s));
        }
        syls = std::move(merged);
      }
      for (auto& s : syls) {
        if (s.in) {
          if (supp[y]) {
            GenSet yin(from_supp.size(), 0);
            for (std::size_t g = 0; g < from_supp.size(); ++g)
              if (from_supp[g] != y && yprime[from_supp[g]]) yin[g] = 1;
            assert(hnn);
            auto om = hnn->member_stable_power(map_supp_in(s.w), a, yin);
            if (!om) return false;
            Word back = map_supp_out(*om);
            out.insert(out.end(), back.begin(), back.end());
          } else {
            GenSet yin(from_supp.size(), 0);
            for (std::size_t g = 0; g < from_supp.size(); ++g)
              if (yprime[from_supp[g]]) yin[g] = 1;
            auto om = supp_node->member(map_supp_in(s.w), yin);
            if (!om) return false;
            Word back = map_supp_out(*om);
            out.insert(out.end(), back.begin(), back.end());
          }
        } else {
          // free leftovers: v-runs must be multiples of a, other letters in Y'
          std::size_t i = 0;
          const Word& sw = s.w;
          while (i < sw.size()) {
            Gen g = gen_of(sw[i]);
            if (g == y) {
              long e = 0;
              while (i < sw.size() && gen_of(sw[i]) == y) {
                e += is_inverse(sw[i]) ? -1 : 1;
                ++i;
              }
              if (e % a != 0) return false;
              append_power(out, y, e);
            } else {
              if (!yprime[g]) return false;
              out.push_back(sw[i++]);
            }
          }
        }
      }
      return true;
    }
  };

  Entry& entry(Gen x, Gen y) {
    auto key = std::make_pair(x, y);
    auto it = inners_.find(key);
    if (it != inners_.end()) return it->second;
    Entry e;
    e.x = x;
    e.y = y;
    e.a = exp_sum(relator_, x);
    e.b = exp_sum(relator_, y);
    e.rbar = e.translate(relator_);
    e.rbar = cyclic_reduce(e.rbar).core;
    e.supp = support_of(e.rbar, ngens_);
    // dense remap of supp(rbar)
    e.to_supp.assign(ngens_, -1);
    for (Gen g = 0; g < ngens_; ++g) {
      if (!e.supp[g]) continue;
      e.to_supp[g] = static_cast<int>(e.from_supp.size());
      e.from_supp.push_back(g);
    }
    Word rloc = e.map_supp_in(e.rbar);
    if (e.supp[y]) {
      auto hnn = std::make_shared<HnnNode>(static_cast<int>(e.from_supp.size()),
                                           rloc, e.to_supp[y], ctx_);
      e.hnn = hnn.get();
      e.supp_node = hnn;
    } else {
      e.supp_node = build_node(static_cast<int>(e.from_supp.size()), rloc, ctx_);
    }
    auto [pos, ok] = inners_.emplace(key, std::move(e));
    return pos->second;
  }

  Word relator_;
  std::map<std::pair<Gen, Gen>, Entry> inners_;
};

// ---------------------------------------------------------------------------

NodePtr build_node(int ngens, const Word& relator, Ctx* ctx) {
  DepthGuard dg(*ctx);
  ctx->charge(relator.size() + 1);
  Word r = cyclic_reduce(reduce_letters(relator)).core;
  if (r.empty()) return std::make_shared<FreeNode>(ngens, ctx);

  GenSet supp = support_of(r, ngens);
  int nsupp = popcount(supp);
  if (nsupp == 1)
    return std::make_shared<TorsionNode>(ngens, gen_of(r[0]),
                                         static_cast<long>(r.size()), ctx);

  if (nsupp < ngens) {
    std::vector<int> to_inner(ngens, -1);
    std::vector<Gen> from_inner;
    for (Gen g = 0; g < ngens; ++g) {
      if (!supp[g]) continue;
      to_inner[g] = static_cast<int>(from_inner.size());
      from_inner.push_back(g);
    }
    Word rloc;
    rloc.reserve(r.size());
    for (Letter l : r) rloc.push_back(make_letter(to_inner[gen_of(l)], is_inverse(l)));
    NodePtr inner = build_node(nsupp, rloc, ctx);
    return std::make_shared<ProductNode>(ngens, std::move(inner), std::move(to_inner),
                                         std::move(from_inner), ctx);
  }

  for (Gen t = 0; t < ngens; ++t)
    if (exp_sum(r, t) == 0) return std::make_shared<HnnNode>(ngens, r, t, ctx);
  return std::make_shared<ChangeNode>(ngens, r, ctx);
}

class SolverImpl {
 public:
  SolverImpl(Presentation p, ResourceBudget budget) : pres_(std::move(p)) {
    ctx_.budget = budget;
    root_ = build_node(pres_.alphabet.size(), pres_.relator, &ctx_);
  }

  Presentation pres_;
  Ctx ctx_;
  NodePtr root_;
};

}  // namespace detail

WordProblemSolver::WordProblemSolver(Presentation p, ResourceBudget budget)
    : impl_(std::make_unique<detail::SolverImpl>(std::move(p), budget)) {}
WordProblemSolver::~WordProblemSolver() = default;
WordProblemSolver::WordProblemSolver(WordProblemSolver&&) noexcept = default;
WordProblemSolver& WordProblemSolver::operator=(WordProblemSolver&&) noexcept = default;

const Presentation& WordProblemSolver::presentation() const { return impl_->pres_; }

bool WordProblemSolver::is_trivial(const Word& w) {
  Word r = reduce(w, impl_->pres_.alphabet);
  return impl_->root_->trivial(r);
}

std::string WordProblemSolver::describe_tree() const {
  std::ostringstream os;
  impl_->root_->describe(os, 0);
  return os.str();
}

std::size_t WordProblemSolver::calls_used() const { return impl_->ctx_.calls; }

WordProblemSolver build_solver(Presentation p, ResourceBudget budget) {
  return WordProblemSolver(std::move(p), budget);
}

bool in_normal_closure(const Word& w, const Word& r, const Alphabet& alphabet,
                       ResourceBudget budget) {
  WordProblemSolver s(Presentation{alphabet, reduce_letters(r)}, budget);
  return s.is_trivial(w);
}

}  // namespace orsolv::magnus
