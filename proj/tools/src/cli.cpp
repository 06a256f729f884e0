#include "blackwell/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "blackwell/detmdp.hpp"
#include "blackwell/instances.hpp"
#include "blackwell/io.hpp"
#include "blackwell/laurent.hpp"
#include "blackwell/oracle.hpp"
#include "blackwell/policy_iteration.hpp"
#include "blackwell/random_facet.hpp"

namespace blackwell::cli {
namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string algorithm = "howard";
  std::uint64_t seed = 0;
  std::size_t batch_size = 2;
  std::string policy;
  std::string format = "json";
  bool trace = false;
  std::size_t budget = kDefaultBudget;
  std::string mode = "deviation";
  std::string width = "1e-6";
  std::optional<double> log_width;
  std::string family;
  std::vector<std::string> params;
  std::string output;
  bool laurent = false;
  std::string r1;
  std::string r2;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Mdp load_mdp(const std::string& path) {
  Mdp m;
  try {
    m = parse_mdp(read_file(path));
  } catch (const FormatError& e) {
    throw InputError(path + ": " + e.what());
  }
  const auto diags = validate_mdp(m);
  if (!diags.empty()) {
    std::string msg = path + ": invalid MDP";
    for (const auto& d : diags) msg += "\n  " + d.message;
    throw InputError(msg);
  }
  return m;
}

Policy policy_arg(const Mdp& m, const std::string& text) {
  Policy pi;
  try {
    pi = parse_policy(text);
  } catch (const FormatError&) {
    // Also accept a plain comma-separated list.
    try {
      pi = parse_policy("[" + text + "]");
    } catch (const FormatError& e) {
      throw UsageError(std::string("--policy: ") + e.what());
    }
  }
  try {
    require_valid_policy(m, pi);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--policy: ") + e.what());
  }
  return pi;
}

Json pair_json(const StateAction& p) { return Json{{"s", p.state}, {"a", p.action}}; }

Json ratfun_json(const RationalFunction& r) {
  return Json{{"num", coefficient_strings(r.num())}, {"den", coefficient_strings(r.den())}};
}

double round6(double x) { return std::isfinite(x) ? std::round(x * 1e6) / 1e6 + 0.0 : x; }

void emit(std::ostream& out, const Options& o, const Json& j, const std::string& text) {
  if (o.format == "text") {
    out << text;
  } else {
    out << j.dump(2) << "\n";
  }
}

std::string policy_text(const Policy& pi) {
  std::string s;
  for (std::size_t i = 0; i < pi.size(); ++i) s += (i ? " " : "") + std::to_string(pi[i]);
  return s;
}

Json header(const char* command) { return Json{{"schema", "1"}, {"command", command}}; }

// ---- commands ------------------------------------------------------------

int cmd_solve(const Options& o, std::ostream& out) {
  const Mdp m = load_mdp(o.input);
  const Policy pi0 = o.policy.empty() ? first_action_policy(m) : policy_arg(m, o.policy);
  Json j = header("solve");
  j["algorithm"] = o.algorithm;
  Policy result;
  std::size_t iterations = 0;
  Json trace = Json::array();

  if (o.algorithm == "detmdp") {
    if (!is_deterministic(m)) throw PreconditionError("detmdp requires DMDP: every action must have a single successor");
    result = detmdp2_blackwell(m);
  } else if (o.algorithm == "random-facet") {
    FacetOptions fo;
    fo.seed = o.seed;
    fo.record_transcript = o.trace;
    FacetResult r = random_facet_blackwell(m, pi0, fo);
    result = r.policy;
    iterations = r.switches;
    for (const auto& e : r.transcript) {
      const char* kind = e.kind == FacetEvent::Kind::Pick ? "pick" : e.kind == FacetEvent::Kind::Switch ? "switch" : "return";
      Json ev{{"event", kind}, {"depth", e.depth}};
      if (e.kind != FacetEvent::Kind::Return) ev["pair"] = pair_json(e.pair);
      ev["policy"] = e.policy;
      trace.push_back(std::move(ev));
    }
  } else {
    SwitchRule rule;
    if (o.algorithm == "howard") {
      rule = SwitchRule::howard();
    } else if (o.algorithm == "max-gain") {
      rule = SwitchRule::max_gain();
    } else if (o.algorithm == "bspi") {
      rule = SwitchRule::batch_switching(o.batch_size);
    } else {
      rule = SwitchRule::randomized_simple(o.seed);
    }
    PiResult r = generic_pi(m, pi0, rule);
    result = r.policy;
    iterations = r.trace.iterations();
    for (const auto& step : r.trace.steps) {
      Json sw = Json::array();
      for (const auto& p : step.switched) sw.push_back(pair_json(p));
      trace.push_back(Json{{"policy", step.policy}, {"switched", std::move(sw)}});
    }
  }
  j["policy"] = result;
  if (o.algorithm != "detmdp") j["iterations"] = iterations;
  if (o.trace && o.algorithm != "detmdp") j["trace"] = std::move(trace);
  std::string text = "policy: " + policy_text(result) + "\n";
  if (o.algorithm != "detmdp") text += "iterations: " + std::to_string(iterations) + "\n";
  emit(out, o, j, text);
  return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const Mdp m = load_mdp(o.input);
  const BoResult r = brute_force_bo_set(m, o.budget);
  Json j = header("oracle");
  j["policy_count"] = m.policy_count();
  j["certified"] = r.certified;
  j["bo_set"] = r.bo_set;
  Json values = Json::array();
  for (const auto& v : r.values) values.push_back(ratfun_json(v));
  j["values"] = std::move(values);
  std::string text;
  for (const auto& pi : r.bo_set) text += policy_text(pi) + "\n";
  emit(out, o, j, text);
  return kOk;
}

Precision precision_from(const Options& o) {
  Precision p;
  try {
    p.width = parse_decimal(o.width);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--width: ") + e.what());
  }
  if (sgn(p.width) <= 0) throw UsageError("--width must be positive");
  if (o.log_width) {
    if (!(*o.log_width > 0)) throw UsageError("--log-width must be positive");
    p.log_width = o.log_width;
  }
  return p;
}

int cmd_threshold(const Options& o, std::ostream& out) {
  const Mdp m = load_mdp(o.input);
  const Precision precision = precision_from(o);
  Json j = header("threshold");
  j["mode"] = o.mode;
  ThresholdInterval iv;
  if (o.mode == "exact") {
    GammaBwResult r = gamma_bw_exact(m, precision, o.budget);
    iv = r.interval;
    j["bo_set"] = r.bo_set;
  } else {
    const Policy pi = o.policy.empty() ? generic_pi(m, first_action_policy(m), SwitchRule::howard()).policy
                                       : policy_arg(m, o.policy);
    iv = deviation_threshold(m, pi, precision);
    j["policy"] = pi;
    if (iv.witness) j["witness"] = pair_json(*iv.witness);
  }
  j["lo"] = to_string(iv.lo);
  j["hi"] = to_string(iv.hi);
  j["lo_decimal"] = to_decimal(iv.lo, 20);
  j["hi_decimal"] = to_decimal(iv.hi, 20);
  j["u_lo"] = round6(iv.u_lo());
  j["u_hi"] = round6(iv.u_hi());
  std::ostringstream text;
  text << "interval: [" << to_decimal(iv.lo, 20) << ", " << to_decimal(iv.hi, 20) << "]\n"
       << "u: [" << round6(iv.u_lo()) << ", " << round6(iv.u_hi()) << "]\n";
  emit(out, o, j, text.str());
  return kOk;
}

InstanceSpec spec_from(const Options& o) {
  InstanceSpec spec;
  try {
    spec.family = parse_family(o.family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<std::string> items;
  for (const auto& p : o.params) {
    std::stringstream ss(p);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) items.push_back(item);
    }
  }
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--params: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    try {
      if (key == "n") {
        spec.n = std::stoull(value);
      } else if (key == "eps" || key == "epsilon") {
        spec.epsilon = parse_decimal(value);
      } else if (key == "k") {
        spec.k = std::stoull(value);
      } else if (key == "seed") {
        spec.seed = std::stoull(value);
      } else if (key == "branching") {
        spec.branching = std::stoull(value);
      } else {
        throw UsageError("--params: unknown key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw UsageError("--params: bad value for '" + key + "': '" + value + "'");
    }
  }
  return spec;
}

int cmd_generate(const Options& o, std::ostream& out) {
  const InstanceSpec spec = spec_from(o);
  Mdp m;
  try {
    m = generate(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string text = format_mdp(m);
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f || !(f << text)) throw InputError("cannot write '" + o.output + "'");
  }
  return kOk;
}

int cmd_evaluate(const Options& o, std::ostream& out) {
  const Mdp m = load_mdp(o.input);
  const Policy pi = o.policy.empty() ? first_action_policy(m) : policy_arg(m, o.policy);
  const SymbolicValue v = policy_evaluate_symbolic(m, pi);
  Json j = header("evaluate");
  j["policy"] = pi;
  Json values = Json::array();
  std::string text;
  for (std::size_t s = 0; s < m.n(); ++s) {
    const RationalFunction r = v.value(s);
    values.push_back(ratfun_json(r));
    text += "v[" + std::to_string(s) + "] = " + r.to_string() + "\n";
  }
  j["values"] = std::move(values);
  Json improving = Json::array();
  for (const auto& ip : improving_pairs_with_gaps(m, pi, v)) {
    improving.push_back(pair_json(ip.pair));
    text += "improving: (" + std::to_string(ip.pair.state) + ", " + std::to_string(ip.pair.action) + ")\n";
  }
  j["improving_pairs"] = std::move(improving);
  if (o.laurent) {
    std::size_t max_actions = 0;
    for (std::size_t s = 0; s < m.n(); ++s) max_actions = std::max(max_actions, m.num_actions(s));
    Json rows = Json::array();
    for (std::size_t a = 0; a < max_actions; ++a) {
      const PsiMatrix psi = psi_matrix(m, pi, a);
      for (std::size_t s = 0; s < m.n(); ++s) {
        if (a >= m.num_actions(s) || a == pi[s]) continue;
        Json col = Json::array();
        for (const auto& c : psi.columns) col.push_back(to_string(c[s]));
        Json row{{"s", s}, {"a", a}, {"psi", std::move(col)}};
        row["j0"] = psi.first_nonzero[s] ? Json(*psi.first_nonzero[s]) : Json(nullptr);
        row["improving"] = sgn(psi.leading(s)) > 0;
        text += "psi(" + std::to_string(s) + ", " + std::to_string(a) + "): leading " + to_string(psi.leading(s)) + "\n";
        rows.push_back(std::move(row));
      }
    }
    j["laurent"] = std::move(rows);
  }
  emit(out, o, j, text);
  return kOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  std::string t1 = o.r1;
  std::string t2 = o.r2;
  if (!o.input.empty()) {
    if (!t1.empty() || !t2.empty()) throw UsageError("use either --input or --r1/--r2");
    try {
      const auto doc = nlohmann::json::parse(read_file(o.input));
      t1 = doc.at("r1").dump();
      t2 = doc.at("r2").dump();
    } catch (const nlohmann::json::exception& e) {
      throw InputError(o.input + ": " + e.what());
    }
  }
  if (t1.empty() || t2.empty()) throw UsageError("compare-ratfun needs --r1 and --r2, or --input");
  RationalFunction r1;
  RationalFunction r2;
  try {
    r1 = parse_ratfun(t1);
    r2 = parse_ratfun(t2);
  } catch (const FormatError& e) {
    throw InputError(e.what());
  }
  const MuOrdering ord = mu_compare(r1, r2);
  Json j = header("compare-ratfun");
  j["result"] = to_string(ord);
  emit(out, o, j, std::string(to_string(ord)) + "\n");
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Blackwell-optimal planning for finite MDPs", "blackwell"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"json", "text"};

  auto* solve = app.add_subcommand("solve", "Compute a Blackwell-optimal policy");
  solve->add_option("--input,-i", o.input, "MDP JSON file")->required();
  solve->add_option("--algorithm,-a", o.algorithm, "Solver")
      ->check(CLI::IsMember({"howard", "max-gain", "bspi", "rspi", "random-facet", "detmdp"}));
  auto* seed = solve->add_option("--seed", o.seed, "Seed for rspi and random-facet");
  auto* batch = solve->add_option("--batch-size", o.batch_size, "Batch size for bspi")->check(CLI::PositiveNumber);
  solve->add_option("--initial-policy", o.policy, "Initial policy, e.g. [0,1,0]");
  solve->add_option("--format", o.format)->check(CLI::IsMember(formats));
  solve->add_flag("--trace", o.trace, "Include the iteration trace");

  auto* oracle = app.add_subcommand("oracle", "Enumerate all policies and print the Blackwell-optimal set");
  oracle->add_option("--input,-i", o.input, "MDP JSON file")->required();
  oracle->add_option("--budget", o.budget, "Maximum number of policies");
  oracle->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* threshold = app.add_subcommand("threshold", "Certified interval for a threshold discount factor");
  threshold->add_option("--input,-i", o.input, "MDP JSON file")->required();
  threshold->add_option("--mode", o.mode, "deviation: one-step deviations from a BO policy; exact: full set equality")
      ->check(CLI::IsMember({"deviation", "exact"}));
  threshold->add_option("--width", o.width, "Maximum interval width (decimal or p/q)");
  threshold->add_option("--log-width", o.log_width, "Maximum width in u = -log10(1 - g)");
  threshold->add_option("--policy", o.policy, "Policy for deviation mode (default: computed)");
  threshold->add_option("--budget", o.budget, "Maximum number of policies (exact mode)");
  threshold->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* gen = app.add_subcommand("generate", "Write a benchmark instance as MDP JSON");
  gen->add_option("--family", o.family, "fig1a, fig1b, fig3, lower-bound, healthcare, random")->required();
  gen->add_option("--params", o.params, "Comma-separated key=value: n, eps, k, seed, branching");
  gen->add_option("--output,-o", o.output, "Output file (default: stdout)");

  auto* eval = app.add_subcommand("evaluate", "Symbolic values and improving pairs of a policy");
  eval->add_option("--input,-i", o.input, "MDP JSON file")->required();
  eval->add_option("--policy", o.policy, "Policy (default: all zeros)");
  eval->add_flag("--laurent", o.laurent, "Dump the Laurent psi coefficients per (s, a)");
  eval->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* cmp = app.add_subcommand("compare-ratfun", "Compare two rational functions near 1");
  cmp->add_option("--r1", o.r1, R"(JSON {"num": [...], "den": [...]})");
  cmp->add_option("--r2", o.r2, "Second rational function");
  cmp->add_option("--input,-i", o.input, R"(JSON file {"r1": ..., "r2": ...})");
  cmp->add_option("--format", o.format)->check(CLI::IsMember(formats));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (solve->parsed()) {
      if (seed->count() > 0 && o.algorithm != "rspi" && o.algorithm != "random-facet") {
        throw UsageError("--seed applies only to rspi and random-facet");
      }
      if (batch->count() > 0 && o.algorithm != "bspi") throw UsageError("--batch-size applies only to bspi");
      return cmd_solve(o, out);
    }
    if (oracle->parsed()) return cmd_oracle(o, out);
    if (threshold->parsed()) return cmd_threshold(o, out);
    if (gen->parsed()) return cmd_generate(o, out);
    if (eval->parsed()) return cmd_evaluate(o, out);
    if (cmp->parsed()) return cmd_compare(o, out);
    return kUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidMdp;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const NotDeterministic& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  }
}

}  // namespace blackwell::cli
