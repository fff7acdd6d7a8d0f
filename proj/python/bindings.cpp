#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "orsolv/cayley.hpp"
#include "orsolv/decide.hpp"
#include "orsolv/groupring.hpp"
#include "orsolv/intlin.hpp"
#include "orsolv/magnus.hpp"
#include "orsolv/words.hpp"

namespace py = pybind11;
using namespace orsolv;

namespace {

Alphabet alph(const std::string& gens) { return Alphabet::from_letters(gens); }

magnus::ResourceBudget budget_of(long depth, long length, long calls) {
  magnus::ResourceBudget b;
  if (depth > 0) b.max_depth = static_cast<int>(depth);
  if (length > 0) b.max_word_length = length;
  if (calls > 0) b.max_oracle_calls = calls;
  return b;
}

py::dict witness_dict(const decide::Witness& w, const Alphabet& a) {
  py::dict d;
  d["r"] = format_word(w.r, a);
  d["k"] = std::stol(w.k.get_str());
  py::list trace;
  for (auto& e : w.trace) {
    py::dict row;
    row["candidate"] = format_word(e.candidate, a);
    row["status"] = static_cast<int>(e.status);
    if (e.status == decide::CandidateStatus::passed) row["k"] = e.k;
    trace.append(row);
  }
  d["trace"] = trace;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "residual rational solvability of one-relator groups";

  py::register_exception<magnus::BudgetExceededError>(m, "BudgetExceededError");
  py::register_exception<UnknownGeneratorError>(m, "UnknownGeneratorError");

  m.def(
      "reduce_word",
      [](const std::string& gens, const std::string& word) {
        Alphabet a = alph(gens);
        return format_word(parse_word(word, a), a);
      },
      py::arg("gens"), py::arg("word"), "freely reduce a word");

  m.def(
      "cyclic_reduce",
      [](const std::string& gens, const std::string& word) {
        Alphabet a = alph(gens);
        auto r = cyclic_reduce(parse_word(word, a));
        return py::make_tuple(format_word(r.core, a), format_word(r.conjugator, a));
      },
      py::arg("gens"), py::arg("word"));

  m.def(
      "is_conjugate",
      [](const std::string& gens, const std::string& u, const std::string& v) {
        Alphabet a = alph(gens);
        return is_conjugate(parse_word(u, a), parse_word(v, a));
      },
      py::arg("gens"), py::arg("u"), py::arg("v"));

  m.def(
      "primitive_root",
      [](const std::string& gens, const std::string& w) {
        Alphabet a = alph(gens);
        auto p = primitive_root(parse_word(w, a));
        return py::make_tuple(format_word(p.root, a), p.power);
      },
      py::arg("gens"), py::arg("word"));

  m.def(
      "exponent_vector",
      [](const std::string& gens, const std::string& w) {
        Alphabet a = alph(gens);
        auto e = exponent_vector(parse_word(w, a), a);
        py::dict d;
        for (Gen g = 0; g < a.size(); ++g) d[py::str(a.name(g))] = e[g];
        return d;
      },
      py::arg("gens"), py::arg("word"));

  m.def(
      "enumerate_candidates",
      [](const std::string& gens, const std::string& w, int max_len) {
        Alphabet a = alph(gens);
        std::vector<std::string> out;
        for (auto& c : enumerate_candidates(parse_word(w, a), a, max_len))
          out.push_back(format_word(c, a));
        return out;
      },
      py::arg("gens"), py::arg("word"), py::arg("max_len"));

  m.def(
      "smith_normal_form",
      [](const std::vector<std::vector<long>>& rows) {
        intlin::IntMatrix mat(static_cast<int>(rows.size()),
                              rows.empty() ? 0 : static_cast<int>(rows[0].size()));
        for (int r = 0; r < mat.rows(); ++r)
          for (int c = 0; c < mat.cols(); ++c) mat.at(r, c) = rows[r][c];
        std::vector<long> out;
        for (auto& d : intlin::smith_normal_form(mat)) out.push_back(std::stol(d.get_str()));
        return out;
      },
      py::arg("matrix"));

  m.def(
      "h1",
      [](const std::string& gens, const std::string& rel) {
        Alphabet a = alph(gens);
        auto h = intlin::h1_of_presentation({a, parse_word(rel, a)});
        py::dict d;
        d["betti"] = h.betti;
        py::list tors;
        for (auto& t : h.torsion) tors.append(std::stol(t.get_str()));
        d["torsion"] = tors;
        return d;
      },
      py::arg("gens"), py::arg("rel"));

  m.def(
      "fox_derivative",
      [](const std::string& gens, const std::string& w, const std::string& s) {
        Alphabet a = alph(gens);
        auto g = a.find(s);
        if (!g) throw UnknownGeneratorError("unknown generator: " + s);
        auto d = groupring::fox_derivative(parse_word(w, a), *g, a);
        std::vector<std::pair<std::string, std::string>> out;
        for (auto& [key, c] : d.terms) out.emplace_back(c.get_str(), format_word(key, a));
        return out;
      },
      py::arg("gens"), py::arg("word"), py::arg("generator"));

  m.def(
      "wp_is_trivial",
      [](const std::string& gens, const std::string& rel, const std::string& w,
         long depth, long length, long calls) {
        Alphabet a = alph(gens);
        magnus::WordProblemSolver solver({a, parse_word(rel, a)},
                                         budget_of(depth, length, calls));
        return solver.is_trivial(parse_word(w, a));
      },
      py::arg("gens"), py::arg("rel"), py::arg("word"), py::arg("depth") = 0,
      py::arg("length") = 0, py::arg("calls") = 0);

  m.def(
      "in_normal_closure",
      [](const std::string& gens, const std::string& w, const std::string& rel,
         long depth, long length, long calls) {
        Alphabet a = alph(gens);
        return magnus::in_normal_closure(parse_word(w, a), parse_word(rel, a), a,
                                         budget_of(depth, length, calls));
      },
      py::arg("gens"), py::arg("word"), py::arg("rel"), py::arg("depth") = 0,
      py::arg("length") = 0, py::arg("calls") = 0);

  m.def(
      "build_ball",
      [](const std::string& gens, const std::string& rel, int radius) {
        Alphabet a = alph(gens);
        auto ball = cayley::build_ball(parse_word(rel, a), a, radius);
        py::dict d;
        py::list verts;
        for (auto& v : ball.vertices) verts.append(format_word(v, a));
        py::list edges;
        for (auto& e : ball.edges)
          edges.append(py::make_tuple(e.src, a.name(e.gen), e.dst));
        d["vertices"] = verts;
        d["edges"] = edges;
        return d;
      },
      py::arg("gens"), py::arg("rel"), py::arg("radius"));

  m.def(
      "chain_multiple_check",
      [](const std::string& gens, const std::string& w, const std::string& rel,
         int radius) -> std::optional<long> {
        Alphabet a = alph(gens);
        Word word = parse_word(w, a);
        int rad = radius > 0 ? radius : static_cast<int>(word.size());
        auto ball = cayley::build_ball(parse_word(rel, a), a, rad);
        auto k = cayley::chain_multiple_check(word, parse_word(rel, a), ball);
        if (!k) return std::nullopt;
        return std::stol(k->get_str());
      },
      py::arg("gens"), py::arg("word"), py::arg("rel"), py::arg("radius") = 0);

  m.def(
      "divisibility",
      [](const std::string& gens, const std::string& w,
         const std::string& rel) -> std::optional<long> {
        Alphabet a = alph(gens);
        auto k = decide::divisibility(parse_word(w, a), parse_word(rel, a), a);
        if (!k) return std::nullopt;
        return std::stol(k->get_str());
      },
      py::arg("gens"), py::arg("word"), py::arg("rel"));

  m.def(
      "find_witness",
      [](const std::string& gens, const std::string& w, int max_r_len,
         int threads) -> std::optional<py::dict> {
        Alphabet a = alph(gens);
        auto ws = decide::find_witness(parse_word(w, a), a, max_r_len, {}, threads);
        if (ws.outcome != decide::SearchOutcome::found) return std::nullopt;
        return witness_dict(*ws.witness, a);
      },
      py::arg("gens"), py::arg("word"), py::arg("max_r_len") = 0, py::arg("threads") = 1);

  m.def(
      "decide",
      [](const std::string& gens, const std::string& w, int max_r_len, int threads) {
        Alphabet a = alph(gens);
        auto v = decide::decide(parse_word(w, a), a, max_r_len, {}, threads);
        py::dict d;
        d["verdict"] = v.kind == decide::VerdictKind::residually_q_solvable ? "yes"
                       : v.kind == decide::VerdictKind::not_residually_q_solvable ? "no"
                                                                                  : "inconclusive";
        d["bounded_search"] = v.bounded_search;
        if (!v.note.empty()) d["note"] = v.note;
        if (v.witness) d["witness"] = witness_dict(*v.witness, a);
        return d;
      },
      py::arg("gens"), py::arg("word"), py::arg("max_r_len") = 0, py::arg("threads") = 1);
}
