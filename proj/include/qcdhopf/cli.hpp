#ifndef QCDHOPF_CLI_HPP
#define QCDHOPF_CLI_HPP

// Batch front end.  Every subcommand prints one JSON document on standard
// output and returns 0 (success or check passed), 1 (a checked property
// failed; the document carries a witness) or 2 (bad input).

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "brst.hpp"
#include "coupling.hpp"
#include "enumerate.hpp"
#include "green.hpp"
#include "hopf.hpp"
#include "renorm.hpp"

namespace qcdhopf::cli {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Result {
  int code = 0;
  json body;
};

inline const char* status(bool pass) { return pass ? "pass" : "fail"; }

// ---------------------------------------------------------------------------
// JSON helpers

inline json poly_json(const Poly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) {
    json t = {{"l_deg", e[0]}, {"t_deg", e[1]}, {"coeff", to_string(c)}};
    if (e[2] != 0) t["s_deg"] = e[2];
    out.push_back(std::move(t));
  }
  return out;
}

/// Laurent series in the same term layout as rule files.
inline json laurent_json(const Laurent& x) {
  json terms = json::array();
  for (const auto& [k, p] : x.terms()) {
    for (const auto& [e, c] : p.terms()) {
      json t = {{"z", k}, {"l_deg", e[0]}, {"t_deg", e[1]}, {"coeff", to_string(c)}};
      if (e[2] != 0) t["s_deg"] = e[2];
      terms.push_back(std::move(t));
    }
  }
  json out = {{"series", std::move(terms)}};
  out["precision"] = x.exact() ? json(nullptr) : json(x.precision());
  return out;
}

/// λ-series grouped by ℓ-degree: {"<l_deg>": [{"monomial", "coeff"}]}.
inline json lambda_table(const LambdaSeries& x) {
  json out = json::object();
  for (const auto& [k, p] : x.terms()) {
    for (const auto& [e, c] : p.terms()) {
      json t = {{"monomial", key_string(k)}, {"coeff", to_string(c)}};
      if (e[1] != 0) t["t_deg"] = e[1];
      out[std::to_string(e[0])].push_back(std::move(t));
    }
  }
  return out;
}

inline std::vector<GraphId> generators_of(const TensorElement& t) {
  std::set<GraphId> s;
  for (const auto& [k, c] : t.terms()) {
    s.insert(k.first.begin(), k.first.end());
    s.insert(k.second.begin(), k.second.end());
  }
  std::vector<GraphId> v(s.begin(), s.end());
  std::sort(v.begin(), v.end(), generator_less);
  return v;
}

inline std::vector<GraphId> generators_of(const HopfElement& x) {
  std::set<GraphId> s;
  for (const auto& [m, c] : x.terms()) s.insert(m.begin(), m.end());
  std::vector<GraphId> v(s.begin(), s.end());
  std::sort(v.begin(), v.end(), generator_less);
  return v;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline FeynGraph read_graph(const std::string& path) { return parse_graph(read_file(path)); }

inline void check_window(int loops, int max_v5) {
  if (loops < 1) throw InputError("--loops must be at least 1");
  if (max_v5 < 0) throw InputError("--max-v5 must be nonnegative");
}

// ---------------------------------------------------------------------------
// Subcommands

inline Result cmd_gen(const std::string& residue, int loops, int max_v5) {
  const Residue r = parse_residue(residue);
  check_window(loops, max_v5);
  json graphs = json::array();
  for (const FeynGraph& g : enumerate_graphs(r, loops, max_v5)) {
    graphs.push_back({{"hash", key_hash(canonicalize(g).key)},
                      {"symmetry", symmetry_factor(g)},
                      {"graph", graph_to_json(g)}});
  }
  json body = {{"residue", residue}, {"loops", loops}, {"max_v5", max_v5},
               {"count", graphs.size()}, {"graphs", std::move(graphs)}};
  return {0, std::move(body)};
}

inline SubgraphPolicy parse_policy(const std::string& s) {
  if (s == "any") return SubgraphPolicy::AnyEdgeSubset;
  if (s == "full") return SubgraphPolicy::Full;
  throw InputError("unknown subgraph policy: " + s);
}

inline Result cmd_coproduct(const std::string& input, const std::string& policy) {
  const SubgraphPolicy pol = parse_policy(policy);
  const GraphId id = intern(read_graph(input));
  const std::string hash = info(id).hash;

  std::filesystem::path cache_file;
  if (const char* dir = std::getenv("QCD_HOPF_CACHE_DIR"); dir && *dir) {
    cache_file = std::filesystem::path(dir) / ("coproduct-" + hash + "-" + policy + ".json");
    if (std::filesystem::exists(cache_file)) return {0, json::parse(read_file(cache_file.string()))};
  }
  const TensorElement t = coproduct(id, pol);
  json body = {{"input", hash},
               {"policy", policy},
               {"graphs", graph_table(generators_of(t))},
               {"coproduct", to_json(t)}};
  if (!cache_file.empty()) {
    std::filesystem::create_directories(cache_file.parent_path());
    std::ofstream(cache_file) << body.dump() << "\n";
  }
  return {0, std::move(body)};
}

inline Result cmd_antipode(const std::string& input) {
  const GraphId id = intern(read_graph(input));
  const HopfElement x = HopfElement::generator(id);
  const HopfElement s = antipode(id);
  const bool pass = antipode_left(x).is_zero() && antipode_right(x).is_zero();
  json body = {{"input", info(id).hash},
               {"graphs", graph_table(generators_of(s))},
               {"antipode", to_json(s)},
               {"status", status(pass)}};
  return {pass ? 0 : 1, std::move(body)};
}

inline Result residual_result(json body, const TensorElement& residual) {
  const bool pass = residual.is_zero();
  body["status"] = status(pass);
  if (!pass) {
    body["witness"] = {{"residual", to_json(residual)},
                       {"graphs", graph_table(generators_of(residual))}};
  }
  return {pass ? 0 : 1, std::move(body)};
}

inline Result cmd_green(const std::string& residue, const std::string& alpha, int loops, int max_v5,
                        bool series) {
  const Residue r = parse_residue(residue);
  const Q a = parse_q(alpha);
  check_window(loops, max_v5);
  const TruncationSpec w{loops, max_v5};
  json body = {{"check", "green_coproduct"}, {"residue", residue}, {"alpha", to_string(a)},
               {"window", {loops, max_v5}}};
  if (series) {
    HopfElement x = series_power(green_function(r, w), a, w);
    body["series"] = to_json(x);
    body["graphs"] = graph_table(generators_of(x));
  }
  return residual_result(std::move(body), green_coproduct_residual(r, a, w));
}

inline Result cmd_y(const std::string& vertex, int loops, int max_v5, bool series) {
  const Residue r = parse_residue(vertex);
  if (!std::holds_alternative<VertexKind>(r)) throw InputError("--vertex must be v1..v5");
  check_window(loops, max_v5);
  const TruncationSpec w{loops, max_v5};
  const VertexKind v = std::get<VertexKind>(r);
  json body = {{"check", "y_coproduct"}, {"vertex", vertex}, {"window", {loops, max_v5}}};
  if (series) {
    HopfElement x = truncate(y_element(v, w), w);
    body["series"] = to_json(x);
    body["graphs"] = graph_table(generators_of(x));
  }
  return residual_result(std::move(body), y_coproduct_residual(v, w));
}

inline Result cmd_st_check(int loops, int max_v5, const std::string& family, bool unsplit) {
  check_window(loops, max_v5);
  StFamily fam;
  if (family == "equivalent") fam = StFamily::Equivalent;
  else if (family == "pairwise") fam = StFamily::Pairwise;
  else throw InputError("unknown generator family: " + family);
  const TruncationSpec w{loops, max_v5};
  const auto gens = st_ideal_generators(w, fam, !unsplit);
  WindowBasis basis(w);
  IdealBasis ideal(basis, elements(gens));
  const IdealCheckReport rep = hopf_ideal_check(ideal, gens);
  json labels = json::array();
  for (const auto& g : gens) labels.push_back(g.label);
  json body = {{"check", "hopf_ideal"},
               {"family", family},
               {"split_d5", !unsplit},
               {"window", {loops, max_v5}},
               {"generators", std::move(labels)},
               {"basis_size", rep.basis_size},
               {"ideal_rank", rep.ideal_rank},
               {"status", status(rep.pass)}};
  if (!rep.pass) {
    json failures = json::array();
    for (const auto& f : rep.failures) {
      failures.push_back({{"generator", f.generator},
                          {"right", monomial_json(f.right)},
                          {"left_residual", to_json(f.left_residual)}});
    }
    body["witness"] = {{"failures", std::move(failures)}, {"count", rep.failures.size()}};
  }
  return {rep.pass ? 0 : 1, std::move(body)};
}

inline OverlapPolicy parse_overlaps(const std::string& s) {
  if (s == "throw") return OverlapPolicy::Throw;
  if (s == "primitive") return OverlapPolicy::Primitive;
  if (s == "forests") return OverlapPolicy::ForestSum;
  throw InputError("unknown overlap policy: " + s);
}

inline Result cmd_birkhoff(const std::string& rules, bool mu, const std::string& overlaps,
                           const std::vector<std::string>& inputs, int loops) {
  const OverlapPolicy ov = parse_overlaps(overlaps);
  std::vector<std::pair<std::string, GraphId>> targets;
  int max_loops = 0;
  if (inputs.empty()) {
    if (loops < 1) throw InputError("--loops must be at least 1");
    for (int n = 1; n <= loops; ++n) {
      for (bool b : {false, true}) {
        targets.emplace_back("R" + std::to_string(n) + (b ? "_bullet" : ""),
                             intern(quark_rainbow(n, b)));
      }
    }
  } else {
    for (const auto& p : inputs) targets.emplace_back(p, intern(read_graph(p)));
  }
  for (const auto& [label, id] : targets) {
    max_loops = std::max(max_loops, info(id).loops);
    coproduct(id);  // interns every subgraph and cograph before overrides are resolved
  }
  std::unordered_map<GraphId, Laurent> overrides;
  if (rules != "nested") overrides = parse_rule_overrides(json::parse(read_file(rules)));
  const int order = max_loops + 1;
  const Character gamma = toy_character(mu, order, ov, std::move(overrides));
  const BirkhoffPair bp = birkhoff(gamma);
  const Character rec = convolve(inverse(bp.minus), bp.plus);

  bool pass = true;
  json rows = json::array();
  for (const auto& [label, id] : targets) {
    const Laurent g = gamma(id), m = bp.minus(id), p = bp.plus(id);
    const bool l_free = m.degree(Var::Ell) == 0;
    const bool pole_free = p.pole_free();
    const bool recon = agree(rec(id), g);
    pass = pass && l_free && pole_free && recon;
    rows.push_back({{"label", label},
                    {"hash", info(id).hash},
                    {"loops", info(id).loops},
                    {"gamma", laurent_json(g)},
                    {"minus", laurent_json(m)},
                    {"plus", laurent_json(p)},
                    {"minus_mass_scale_free", l_free},
                    {"plus_pole_free", pole_free},
                    {"reconstruction", recon}});
  }
  json body = {{"rules", rules}, {"mu", mu}, {"overlaps", overlaps}, {"order", order},
               {"graphs", std::move(rows)}, {"status", status(pass)}};
  return {pass ? 0 : 1, std::move(body)};
}

inline Result cmd_rg(int loops, int max_v5) {
  check_window(loops, max_v5);
  const TruncationSpec w{loops, max_v5};
  const Character gamma = toy_character(true, loops + 1, OverlapPolicy::ForestSum);
  const BirkhoffPair bp = birkhoff(gamma);
  const Character F = rg_character(bp.minus);
  auto at_s = [](const Poly& p) { return p.substitute(Var::T, Poly::var(Var::S)); };
  auto F_mono = [&](const Monomial& m, bool s) {
    Poly r(1);
    for (GraphId g : m) r = r * (s ? at_s(F(g).coeff(0)) : F(g).coeff(0));
    return r;
  };

  bool group_law = true;
  json rows = json::array();
  for (GraphId id : window_generators(w)) {
    const Poly ft = F(id).coeff(0);
    Poly conv;
    for (const auto& [k, c] : coproduct(id).terms()) {
      conv += F_mono(k.first, false) * F_mono(k.second, true) * Poly(c);
    }
    const Poly shifted = ft.substitute(Var::T, Poly::var(Var::T) + Poly::var(Var::S));
    const bool law = shifted == conv;
    group_law = group_law && law;
    rows.push_back({{"hash", info(id).hash},
                    {"loops", info(id).loops},
                    {"F_t", poly_json(ft)},
                    {"beta", poly_json(ft.coefficient(Var::T, 1))},
                    {"group_law", law}});
  }
  json body = {{"window", {loops, max_v5}},
               {"rules", "toy, forest sum"},
               {"pole_cancellation", "pass"},
               {"generators", std::move(rows)},
               {"status", status(group_law)}};
  return {group_law ? 0 : 1, std::move(body)};
}

inline Result cmd_beta(int loops, int max_v5) {
  check_window(loops, max_v5);
  const TruncationSpec w{loops, max_v5};
  const Character seed = toy_character(true, loops + 1, OverlapPolicy::ForestSum);
  const StSolution st = st_character(seed, w);
  const BirkhoffPair bp = birkhoff(st.character);
  const RunningCouplings rc = running_couplings(bp, w);
  const auto residuals = beta_identity_residuals(rc);

  json beta = json::object(), running = json::object(), ident = json::object();
  for (int j = 1; j <= 5; ++j) {
    beta["lambda" + std::to_string(j)] = lambda_table(rc.beta[j - 1]);
    running["lambda" + std::to_string(j)] = lambda_table(rc.coupling[j - 1]);
  }
  bool pass = true;
  for (int i = 1; i <= 4; ++i) {
    pass = pass && residuals[i - 1].terms().empty();
    ident["lambda" + std::to_string(i)] = lambda_table(residuals[i - 1]);
  }
  json action = json::array();
  for (const auto& t : beta_on_action(rc.beta)) {
    action.push_back({{"term", t.term}, {"monomial", t.label},
                      {"beta", lambda_table(t.beta)}});
  }
  json body = {{"window", {loops, max_v5}},
               {"character", "st_character(toy rules, forest sum)"},
               {"beta", std::move(beta)},
               {"running", std::move(running)},
               {"identity_residuals", std::move(ident)},
               {"action", std::move(action)},
               {"status", status(pass)}};
  return {pass ? 0 : 1, std::move(body)};
}

inline Result cmd_brst(const std::string& algebra, std::uint64_t seed, long trials,
                       const std::string& g, const std::string& lambda5) {
  if (trials < 0) throw InputError("--trials must be nonnegative");
  const ColorAlgebra alg = ColorAlgebra::by_name(algebra);
  bool pass = true;
  json checks = json::array();
  for (const BrstReport& r : brst_check_all(alg, seed, trials, parse_q(g), parse_q(lambda5))) {
    json c = {{"check", r.check}, {"status", status(r.pass)}, {"trials", r.trials}};
    if (!r.pass) c["witness"] = r.witness;
    pass = pass && r.pass;
    checks.push_back(std::move(c));
  }
  json body = {{"algebra", algebra}, {"seed", seed}, {"trials", trials},
               {"checks", std::move(checks)}, {"status", status(pass)}};
  return {pass ? 0 : 1, std::move(body)};
}

// ---------------------------------------------------------------------------
// Dispatch

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Renormalization Hopf algebra of QCD: graphs, identities, BRST checks"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the JSON output");

  std::string residue = "e1", input, policy = "any", alpha = "1", vertex = "v1";
  std::string family = "equivalent", rules = "nested", overlaps = "forests";
  std::string algebra = "su2", g = "1", lambda5 = "3/7";
  std::vector<std::string> inputs;
  int loops = 1, max_v5 = 0;
  bool series = false, unsplit = false, mu = false;
  std::uint64_t seed = 1;
  long trials = 1000;

  auto window = [&](CLI::App* c) {
    c->add_option("--loops", loops, "Maximal loop number")->capture_default_str();
    c->add_option("--max-v5", max_v5, "Mass-vertex bound")->capture_default_str();
  };
  Result res;
  std::function<Result()> action;

  auto* gen = app.add_subcommand("gen", "Enumerate 1PI graphs of a residue");
  gen->add_option("--residue", residue, "e1|e2|e3|v1..v5")->required();
  window(gen);
  gen->callback([&] { action = [&] { return cmd_gen(residue, loops, max_v5); }; });

  auto* cop = app.add_subcommand("coproduct", "Coproduct of a graph");
  cop->add_option("-i,--input", input, "Graph JSON file")->required();
  cop->add_option("--policy", policy, "Subgraph policy: any|full")->capture_default_str();
  cop->callback([&] { action = [&] { return cmd_coproduct(input, policy); }; });

  auto* ant = app.add_subcommand("antipode", "Antipode of a graph");
  ant->add_option("-i,--input", input, "Graph JSON file")->required();
  ant->callback([&] { action = [&] { return cmd_antipode(input); }; });

  auto* grn = app.add_subcommand("green", "Coproduct formula for a power of a Green's function");
  grn->add_option("--residue", residue, "e1|e2|e3|v1..v5")->required();
  grn->add_option("--alpha", alpha, "Rational exponent")->capture_default_str();
  grn->add_flag("--series", series, "Include the series itself");
  window(grn);
  grn->callback([&] { action = [&] { return cmd_green(residue, alpha, loops, max_v5, series); }; });

  auto* ycmd = app.add_subcommand("y", "Coproduct formula for an effective coupling Y_v");
  ycmd->add_option("--vertex", vertex, "v1..v5")->required();
  ycmd->add_flag("--series", series, "Include the series itself");
  window(ycmd);
  ycmd->callback([&] { action = [&] { return cmd_y(vertex, loops, max_v5, series); }; });

  auto* st = app.add_subcommand("st-check", "Hopf-ideal check for the Slavnov-Taylor generators");
  st->add_option("--family", family, "equivalent|pairwise")->capture_default_str();
  st->add_flag("--unsplit", unsplit, "Do not split generators by mass-vertex degree");
  window(st);
  st->callback([&] { action = [&] { return cmd_st_check(loops, max_v5, family, unsplit); }; });

  auto* bk = app.add_subcommand("birkhoff", "Birkhoff decomposition of toy Feynman rules");
  bk->add_option("--rules", rules, "nested, or a rule-override JSON file")->capture_default_str();
  bk->add_flag("--mu", mu, "Include the unit of mass");
  bk->add_option("--overlaps", overlaps, "throw|primitive|forests")->capture_default_str();
  bk->add_option("-i,--input", inputs, "Graph JSON files (default: quark rainbows)");
  bk->add_option("--loops", loops, "Rainbow depth when no input is given");
  bk->callback([&] {
    if (bk->count("--loops") == 0) loops = 3;
    action = [&] { return cmd_birkhoff(rules, mu, overlaps, inputs, loops); };
  });

  auto* rg = app.add_subcommand("rg", "Renormalization-group flow F_t on window generators");
  window(rg);
  rg->callback([&] { action = [&] { return cmd_rg(loops, max_v5); }; });

  auto* bt = app.add_subcommand("beta", "Beta functions of the couplings");
  window(bt);
  bt->callback([&] { action = [&] { return cmd_beta(loops, max_v5); }; });

  auto* br = app.add_subcommand("brst-check", "Component-level BRST checks");
  br->add_option("--algebra", algebra, "su2|su3")->capture_default_str();
  br->add_option("--seed", seed, "Random seed")->capture_default_str();
  br->add_option("--trials", trials, "Random trials per check")->capture_default_str();
  br->add_option("--g", g, "Coupling constant")->capture_default_str();
  br->add_option("--lambda5", lambda5, "Mass coupling")->capture_default_str();
  br->callback([&] { action = [&] { return cmd_brst(algebra, seed, trials, g, lambda5); }; });

  auto emit = [&](const Result& r) {
    out << (pretty ? r.body.dump(2) : r.body.dump()) << "\n";
    return r.code;
  };
  auto input_error = [&](const std::string& msg) {
    err << msg << "\n";
    return emit({2, {{"error", msg}}});
  };
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return input_error(e.what());
  }
  try {
    return emit(action());
  } catch (const InputError& e) {
    return input_error(e.what());
  } catch (const GraphError& e) {
    return input_error(e.what());
  } catch (const OverlapError& e) {
    return input_error(e.what());
  } catch (const json::exception& e) {
    return input_error(e.what());
  } catch (const std::invalid_argument& e) {
    return input_error(e.what());
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return emit({1, {{"status", "fail"}, {"witness", e.what()}}});
  }
}

}  // namespace qcdhopf::cli

#endif  // QCDHOPF_CLI_HPP
