// Command line front end: decide | witness | wp | nc-member | ball | fox | h1.
// Exit codes: decisions use 0 / 1 / 2 (yes-trivial / no-nontrivial /
// inconclusive); 64 flags a usage error, 70 an internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "orsolv/cayley.hpp"
#include "orsolv/decide.hpp"
#include "orsolv/groupring.hpp"
#include "orsolv/intlin.hpp"
#include "orsolv/magnus.hpp"
#include "orsolv/words.hpp"

using json = nlohmann::json;
using namespace orsolv;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct CommonOpts {
  std::string pres_file;
  std::string gens;
  std::string rel;
  std::string word;
  bool json_out = false;
  int threads = 1;
  long budget_depth = 0;
  long budget_length = 0;
  long budget_calls = 0;
  CLI::Option* rel_opt = nullptr;
};

long env_long(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  return std::atol(v);
}

magnus::ResourceBudget make_budget(const CommonOpts& o) {
  magnus::ResourceBudget b;
  b.max_depth = static_cast<int>(env_long("ORSOLV_BUDGET_DEPTH", b.max_depth));
  b.max_word_length = env_long("ORSOLV_BUDGET_LENGTH", static_cast<long>(b.max_word_length));
  b.max_oracle_calls = env_long("ORSOLV_BUDGET_CALLS", static_cast<long>(b.max_oracle_calls));
  if (o.budget_depth > 0) b.max_depth = static_cast<int>(o.budget_depth);
  if (o.budget_length > 0) b.max_word_length = o.budget_length;
  if (o.budget_calls > 0) b.max_oracle_calls = o.budget_calls;
  return b;
}

void add_common(CLI::App* app, CommonOpts& o, bool with_word) {
  app->add_option("--pres", o.pres_file, "presentation file (gens:/rel: lines)");
  app->add_option("--gens", o.gens, "generator letters, e.g. ab");
  o.rel_opt = app->add_option("--rel", o.rel, "relator word");
  if (with_word) app->add_option("--word", o.word, "input word")->required();
  app->add_flag("--json", o.json_out, "machine readable output");
  app->add_option("--threads", o.threads, "worker threads for candidate screening");
  app->add_option("--budget-depth", o.budget_depth, "max breakdown recursion depth");
  app->add_option("--budget-length", o.budget_length, "max rewritten word length");
  app->add_option("--budget-calls", o.budget_calls, "max oracle calls");
}

Presentation load_presentation(const CommonOpts& o) {
  std::string gens = o.gens;
  std::string rel = o.rel;
  bool rel_seen = o.rel_opt && o.rel_opt->count() > 0;
  if (!o.pres_file.empty()) {
    std::ifstream in(o.pres_file);
    if (!in) throw std::invalid_argument("cannot open presentation file: " + o.pres_file);
    std::string line;
    auto strip = [](std::string s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
      return s;
    };
    while (std::getline(in, line)) {
      if (line.rfind("gens:", 0) == 0) {
        if (gens.empty()) gens = strip(line.substr(5));
      } else if (line.rfind("rel:", 0) == 0) {
        if (!rel_seen) rel = strip(line.substr(4));
      }
    }
  }
  if (gens.empty()) throw std::invalid_argument("no generators given (--gens or --pres)");
  Alphabet alphabet = Alphabet::from_letters(gens);
  return {alphabet, parse_word(rel, alphabet)};
}

json budget_report(std::size_t used, const magnus::ResourceBudget& b) {
  return json{{"oracle_calls_used", used},
              {"max_oracle_calls", b.max_oracle_calls},
              {"max_depth", b.max_depth},
              {"max_word_length", b.max_word_length}};
}

const char* status_name(decide::CandidateStatus s) {
  switch (s) {
    case decide::CandidateStatus::passed: return "passed";
    case decide::CandidateStatus::not_in_closure: return "not_in_closure";
    case decide::CandidateStatus::chain_mismatch: return "chain_mismatch";
    case decide::CandidateStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

json trace_json(const std::vector<decide::TraceEntry>& trace, const Alphabet& a) {
  json out = json::array();
  for (auto& e : trace) {
    json row{{"candidate", format_word(e.candidate, a)}, {"status", status_name(e.status)}};
    if (e.status == decide::CandidateStatus::passed) row["k"] = e.k;
    out.push_back(row);
  }
  return out;
}

int run_witness(const CommonOpts& o, int max_r_len) {
  Presentation p = load_presentation(o);
  auto budget = make_budget(o);
  const Alphabet& a = p.alphabet;
  auto ws = decide::find_witness(p.relator, a, max_r_len, budget, o.threads);
  json out{{"outcome", ws.outcome == decide::SearchOutcome::found        ? "found"
            : ws.outcome == decide::SearchOutcome::none_found ? "none"
                                                              : "inconclusive"}};
  if (ws.witness) {
    out["r"] = format_word(ws.witness->r, a);
    out["k"] = ws.witness->k.get_str();
    out["trace"] = trace_json(ws.witness->trace, a);
  }
  if (!ws.note.empty()) out["note"] = ws.note;
  if (o.json_out) {
    std::cout << out.dump(2) << "\n";
  } else if (ws.witness) {
    std::cout << "witness r = " << format_word(ws.witness->r, a)
              << ", k = " << ws.witness->k.get_str() << "\n";
  } else {
    std::cout << "no witness (" << ws.note << ")\n";
  }
  return ws.outcome == decide::SearchOutcome::found ? kExitYes : kExitInconclusive;
}

int run_decide(const CommonOpts& o, int max_r_len) {
  Presentation p = load_presentation(o);
  auto budget = make_budget(o);
  const Alphabet& a = p.alphabet;

  decide::Verdict v = decide::decide(p.relator, a, max_r_len, budget, o.threads);
  std::string verdict = v.kind == decide::VerdictKind::residually_q_solvable ? "residually_q_solvable"
                        : v.kind == decide::VerdictKind::not_residually_q_solvable
                            ? "not_residually_q_solvable"
                            : "inconclusive";
  json out{{"verdict", verdict}};
  if (v.witness) {
    const auto& wit = *v.witness;
    std::string gen_names;
    for (Gen g = 0; g < a.size(); ++g) gen_names += a.name(g);
    out["r"] = format_word(wit.r, a);
    out["k"] = wit.k.get_str();
    out["k_sign_folded"] = canonical_class_rep(wit.r) != least_rotation(wit.r);
    out["max_quotient"] = json{{"gens", gen_names}, {"rel", format_word(wit.r, a)}};
    out["trace"] = trace_json(wit.trace, a);
  }
  if (!v.note.empty()) out["note"] = v.note;
  out["bounded_search"] = v.bounded_search;
  out["budget_report"] = budget_report(v.budget_used, budget);
  if (o.json_out) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "verdict: " << verdict << "\n";
    if (v.witness)
      std::cout << "witness r = " << format_word(v.witness->r, a)
                << ", k = " << v.witness->k.get_str() << "\n";
    if (!v.note.empty()) std::cout << "note: " << v.note << "\n";
  }
  switch (v.kind) {
    case decide::VerdictKind::residually_q_solvable: return kExitYes;
    case decide::VerdictKind::not_residually_q_solvable: return kExitNo;
    default: return kExitInconclusive;
  }
}

int run_wp(const CommonOpts& o) {
  Presentation p = load_presentation(o);
  auto budget = make_budget(o);
  Word w = parse_word(o.word, p.alphabet);
  std::string result;
  int code;
  std::size_t used = 0;
  try {
    magnus::WordProblemSolver solver(p, budget);
    bool trivial = solver.is_trivial(w);
    used = solver.calls_used();
    result = trivial ? "trivial" : "nontrivial";
    code = trivial ? kExitYes : kExitNo;
  } catch (const magnus::BudgetExceededError&) {
    result = "inconclusive";
    code = kExitInconclusive;
  }
  if (o.json_out) {
    json out{{"result", result},
             {"word", format_word(w, p.alphabet)},
             {"rel", format_word(p.relator, p.alphabet)},
             {"budget_report", budget_report(used, budget)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << result << "\n";
  }
  return code;
}

int run_ball(const CommonOpts& o, int radius) {
  Presentation p = load_presentation(o);
  auto ball = cayley::build_ball(p.relator, p.alphabet, radius, make_budget(o));
  json verts = json::array();
  for (auto& v : ball.vertices) verts.push_back(format_word(v, p.alphabet));
  json edges = json::array();
  for (auto& e : ball.edges)
    edges.push_back(json::array({e.src, p.alphabet.name(e.gen), e.dst}));
  json out{{"vertices", verts}, {"edges", edges}, {"radius", radius}};
  if (o.json_out) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << ball.vertices.size() << " vertices, " << ball.edges.size()
              << " edges at radius " << radius << "\n";
  }
  return kExitYes;
}

int run_fox(const CommonOpts& o, const std::string& gen_name) {
  Presentation p = load_presentation(o);  // relator optional; alphabet needed
  Word w = parse_word(o.word, p.alphabet);
  auto g = p.alphabet.find(gen_name);
  if (!g) throw std::invalid_argument("unknown generator: " + gen_name);
  auto d = groupring::fox_derivative(w, *g, p.alphabet);
  if (o.json_out) {
    json pairs = json::array();
    for (auto& [key, c] : d.terms)
      pairs.push_back(json::array({c.get_str(), format_word(key, p.alphabet)}));
    std::cout << pairs.dump(2) << "\n";
  } else {
    std::cout << groupring::format_element(d, p.alphabet) << "\n";
  }
  return kExitYes;
}

int run_h1(const CommonOpts& o) {
  Presentation p = load_presentation(o);
  auto h = intlin::h1_of_presentation(p);
  json tors = json::array();
  for (auto& t : h.torsion) tors.push_back(t.get_str());
  json out{{"betti", h.betti}, {"torsion", tors}};
  std::cout << out.dump(o.json_out ? 2 : -1) << "\n";
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-relator group residual rational solvability toolkit"};
  app.require_subcommand(1);

  CommonOpts o_decide, o_witness, o_wp, o_nc, o_ball, o_fox, o_h1;
  int max_r_len = 0, radius = 0;
  std::string fox_gen;

  auto* c_decide = app.add_subcommand("decide", "decide residual Q-solvability of F/<<w>>");
  add_common(c_decide, o_decide, false);
  c_decide->add_option("--max-r-len", max_r_len, "bound candidate length (NO stays sound)");

  auto* c_witness = app.add_subcommand("witness", "find the witness r and k for the relator");
  add_common(c_witness, o_witness, false);
  c_witness->add_option("--max-r-len", max_r_len, "bound candidate length");

  auto* c_wp = app.add_subcommand("wp", "word problem in F/<<rel>>");
  add_common(c_wp, o_wp, true);

  auto* c_nc = app.add_subcommand("nc-member", "membership of --word in <<--rel>>");
  add_common(c_nc, o_nc, true);

  auto* c_ball = app.add_subcommand("ball", "Cayley ball of F/<<rel>>");
  add_common(c_ball, o_ball, false);
  c_ball->add_option("--radius", radius, "ball radius")->required();

  auto* c_fox = app.add_subcommand("fox", "fox derivative of --word");
  add_common(c_fox, o_fox, true);
  c_fox->add_option("--generator", fox_gen, "differentiate with respect to")->required();

  auto* c_h1 = app.add_subcommand("h1", "rational first homology of F/<<rel>>");
  add_common(c_h1, o_h1, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (c_decide->parsed()) return run_decide(o_decide, max_r_len);
    if (c_witness->parsed()) return run_witness(o_witness, max_r_len);
    if (c_wp->parsed()) return run_wp(o_wp);
    if (c_nc->parsed()) return run_wp(o_nc);
    if (c_ball->parsed()) return run_ball(o_ball, radius);
    if (c_fox->parsed()) return run_fox(o_fox, fox_gen);
    if (c_h1->parsed()) return run_h1(o_h1);
  } catch (const UnknownGeneratorError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const magnus::BudgetExceededError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
