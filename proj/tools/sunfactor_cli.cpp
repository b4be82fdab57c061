// sunfactor: path-factor, sun-toughness and robustness reports for small graphs.
//
// Exit codes: 0 ok, 1 verified property fails, 2 input error, 3 budget exceeded.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sunfactor/report.hpp"
#include "sunfactor/sunfactor.hpp"

namespace {

using namespace sunfactor;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct InputArgs {
  std::string input;  // graph6 string or path
  std::string file;
  std::string family;
  FamilyParams params;
};

struct BudgetArgs {
  int max_order = 20;
  int search_max_order = 40;
  std::size_t budget = 1'000'000;
};

void add_input_options(CLI::App* cmd, InputArgs& in, bool with_lm = true) {
  cmd->add_option("input", in.input, "graph6 string, or path to a graph6 / edge-list file ('-' for stdin)");
  cmd->add_option("--file", in.file, "graph6 file (one graph per line) or edge-list file");
  cmd->add_option("--family", in.family, "generate the input from a named family");
  cmd->add_option("--n", in.params.n, "family parameter n");
  cmd->add_option("--a", in.params.a, "family parameter a");
  cmd->add_option("--b", in.params.b, "family parameter b");
  cmd->add_option("--k", in.params.k, "family parameter k (copies)");
  cmd->add_option("--core", in.params.core, "big_sun_on_core core: complete | cycle");
  if (with_lm) {
    cmd->add_option("--l", in.params.l, "family parameter l");
    cmd->add_option("--m", in.params.m, "family parameter m");
  }
}

void add_budget_options(CLI::App* cmd, BudgetArgs& b) {
  cmd->add_option("--max-order", b.max_order, "exact-mode vertex bound for subset sweeps")->capture_default_str();
  cmd->add_option("--search-max-order", b.search_max_order, "vertex bound for path factor search")
      ->capture_default_str();
  cmd->add_option("--budget", b.budget, "maximum deletions checked per robustness query")->capture_default_str();
}

PathFactorOptions path_options(const BudgetArgs& b) {
  PathFactorOptions p;
  p.criterion_max_order = b.max_order;
  p.search_max_order = b.search_max_order;
  return p;
}

// "-" reads standard input.
std::string slurp(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

// Edge-list files start with a bare integer; graph6 bytes never include digits.
std::vector<Graph> read_graph_file(const std::string& path) {
  const std::string text = slurp(path);
  std::istringstream lines(text);
  std::string first;
  while (std::getline(lines, first) && first.find_first_not_of(" \t\r") == std::string::npos) {
  }
  if (!first.empty() && std::isdigit(static_cast<unsigned char>(first[first.find_first_not_of(" \t")])))
    return {parse_edge_list(text)};
  std::vector<Graph> out;
  std::istringstream again(text);
  std::string line;
  while (std::getline(again, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

std::vector<Graph> resolve_inputs(const InputArgs& in) {
  int sources = (!in.input.empty()) + (!in.file.empty()) + (!in.family.empty());
  if (sources != 1) throw InputError("give exactly one of: graph6/path argument, --file, --family");
  if (!in.family.empty()) return {generate_family(in.family, in.params)};
  if (!in.file.empty()) return read_graph_file(in.file);
  std::error_code ec;
  if (in.input == "-" || std::filesystem::is_regular_file(in.input, ec)) return read_graph_file(in.input);
  return {parse_graph6(in.input)};
}

json input_descriptor(const InputArgs& in, const Graph& g) {
  json d = {{"graph6", to_graph6(g)}};
  if (!in.family.empty()) d["family"] = in.family;
  if (!in.file.empty()) d["file"] = in.file;
  return d;
}

void emit(const json& doc, bool pretty) { std::cout << (pretty ? doc.dump(2) : doc.dump()) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path factors, sun toughness and (P>=3) robustness of small graphs"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  // analyze
  InputArgs analyze_in;
  BudgetArgs analyze_budget;
  bool timing = false;
  auto* analyze = app.add_subcommand("analyze", "report every computed quantity and a certificate");
  add_input_options(analyze, analyze_in);
  add_budget_options(analyze, analyze_budget);
  analyze->add_flag("--timing", timing, "include wall-clock timing (makes output nondeterministic)");

  // certify
  InputArgs certify_in;
  BudgetArgs certify_budget;
  auto* certify_cmd = app.add_subcommand("certify", "path factor or obstruction certificate");
  add_input_options(certify_cmd, certify_in);
  add_budget_options(certify_cmd, certify_budget);

  // toughness
  InputArgs tough_in;
  BudgetArgs tough_budget;
  auto* toughness = app.add_subcommand("toughness", "exact sun toughness with witness");
  add_input_options(toughness, tough_in);
  add_budget_options(toughness, tough_budget);

  // sigma
  InputArgs sigma_in;
  int sigma_order = 3;
  auto* sigma = app.add_subcommand("sigma", "minimum degree sum over independent k-sets");
  add_input_options(sigma, sigma_in);
  sigma->add_option("--order", sigma_order, "size k of the independent sets")->capture_default_str();

  // verify
  InputArgs verify_in;
  BudgetArgs verify_budget;
  std::string property;
  bool list_all = false;
  auto* verify = app.add_subcommand("verify", "check (P>=3,l)-factor criticality or (P>=3,m)-factor deletedness");
  verify->add_option("property", property, "critical | deleted")->required()->check(CLI::IsMember({"critical", "deleted"}));
  add_input_options(verify, verify_in);
  add_budget_options(verify, verify_budget);
  verify->add_flag("--all", list_all, "list every failing deletion instead of the first");

  // hunt
  std::string theorem_name;
  int hunt_l = 0;
  int hunt_m = 0;
  std::optional<int> exhaustive_n;
  std::string hunt_file;
  std::optional<int> gnp_n;
  double gnp_p = 0.5;
  std::optional<std::uint64_t> seed;
  std::size_t count = 100;
  unsigned jobs = 1;
  BudgetArgs hunt_budget;
  auto* hunt_cmd = app.add_subcommand("hunt", "search a corpus for counterexamples to a theorem");
  hunt_cmd->add_option("--theorem", theorem_name, "T2 | T3 | T4 | T5")->required();
  hunt_cmd->add_option("--l", hunt_l, "l for T2/T3");
  hunt_cmd->add_option("--m", hunt_m, "m for T4/T5");
  hunt_cmd->add_option("--exhaustive", exhaustive_n, "all labeled graphs on n <= 7 vertices");
  hunt_cmd->add_option("--file", hunt_file, "graph6 corpus file");
  hunt_cmd->add_option("--gnp", gnp_n, "G(n,p) corpus on this many vertices");
  hunt_cmd->add_option("--p", gnp_p, "edge probability for --gnp")->capture_default_str();
  hunt_cmd->add_option("--seed", seed, "seed for --gnp (required)");
  hunt_cmd->add_option("--count", count, "graphs drawn for --gnp")->capture_default_str();
  hunt_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  add_budget_options(hunt_cmd, hunt_budget);

  // gen
  InputArgs gen_in;
  auto* gen_cmd = app.add_subcommand("gen", "print a family member as graph6");
  gen_cmd->add_option("--family", gen_in.family, "family name")->required();
  gen_cmd->add_option("--n", gen_in.params.n, "parameter n");
  gen_cmd->add_option("--a", gen_in.params.a, "parameter a");
  gen_cmd->add_option("--b", gen_in.params.b, "parameter b");
  gen_cmd->add_option("--k", gen_in.params.k, "parameter k");
  gen_cmd->add_option("--l", gen_in.params.l, "parameter l");
  gen_cmd->add_option("--m", gen_in.params.m, "parameter m");
  gen_cmd->add_option("--core", gen_in.params.core, "complete | cycle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze) {
      AnalysisOptions opts;
      opts.exact.max_order = analyze_budget.max_order;
      opts.path = path_options(analyze_budget);
      opts.timing = timing;
      int code = kExitOk;
      for (const Graph& g : resolve_inputs(analyze_in)) {
        Analysis a = sunfactor::analyze(g, opts);
        a.report["input"] = input_descriptor(analyze_in, g);
        if (a.skipped) code = kExitBudget;
        emit(a.report, pretty);
      }
      return code;
    }

    if (*certify_cmd) {
      int code = kExitOk;
      for (const Graph& g : resolve_inputs(certify_in)) {
        json doc = {{"input", input_descriptor(certify_in, g)}};
        try {
          Certificate cert = certify(g, path_options(certify_budget));
          doc["has_p3_factor"] = std::holds_alternative<PathFactor>(cert);
          doc["certificate"] = to_json(cert);
          doc["valid"] = validates(cert, g);
        } catch (const BudgetExceeded& e) {
          doc["has_p3_factor"] = "skipped";
          doc["reason"] = e.what();
          code = kExitBudget;
        }
        emit(doc, pretty);
      }
      return code;
    }

    if (*toughness) {
      int code = kExitOk;
      ExactOptions exact;
      exact.max_order = tough_budget.max_order;
      for (const Graph& g : resolve_inputs(tough_in)) {
        json doc = {{"input", input_descriptor(tough_in, g)}};
        try {
          doc["sun_toughness"] = to_json(sun_toughness(g, exact));
        } catch (const BudgetExceeded& e) {
          doc["sun_toughness"] = "skipped";
          doc["reason"] = e.what();
          code = kExitBudget;
        }
        emit(doc, pretty);
      }
      return code;
    }

    if (*sigma) {
      for (const Graph& g : resolve_inputs(sigma_in)) {
        json doc = {{"input", input_descriptor(sigma_in, g)}, {"k", sigma_order}};
        doc["sigma"] = to_json(sigma_k(g, sigma_order));
        emit(doc, pretty);
      }
      return kExitOk;
    }

    if (*verify) {
      const bool critical = property == "critical";
      const int param = critical ? verify_in.params.l : verify_in.params.m;
      if (critical ? verify->count("--l") == 0 : verify->count("--m") == 0)
        throw InputError(critical ? "verify critical needs --l" : "verify deleted needs --m");
      RobustnessOptions opts;
      opts.budget = verify_budget.budget;
      opts.list_all = list_all;
      opts.path = path_options(verify_budget);
      int code = kExitOk;
      for (const Graph& g : resolve_inputs(verify_in)) {
        json doc = {{"input", input_descriptor(verify_in, g)}};
        try {
          RobustnessVerdict v = critical ? is_critical(g, param, opts) : is_deleted(g, param, opts);
          doc["verdict"] = to_json(v);
          if (!v.holds && code == kExitOk) code = kExitPropertyFails;
        } catch (const BudgetExceeded& e) {
          doc["verdict"] = "skipped";
          doc["reason"] = e.what();
          code = kExitBudget;
        }
        emit(doc, pretty);
      }
      return code;
    }

    if (*hunt_cmd) {
      Theorem theorem = parse_theorem(theorem_name);
      const int param = property_of(theorem) == Property::Critical ? hunt_l : hunt_m;
      if (param < 1)
        throw InputError(property_of(theorem) == Property::Critical ? "T2/T3 need --l >= 1" : "T4/T5 need --m >= 1");
      int sources = exhaustive_n.has_value() + !hunt_file.empty() + gnp_n.has_value();
      if (sources != 1) throw InputError("give exactly one corpus: --exhaustive, --file, or --gnp");
      CorpusSpec spec = Exhaustive{0};
      if (exhaustive_n) {
        spec = Exhaustive{*exhaustive_n};
      } else if (!hunt_file.empty()) {
        spec = Graph6File{hunt_file};
      } else {
        if (!seed) throw InputError("--gnp requires an explicit --seed");
        spec = Gnp{*gnp_n, gnp_p, *seed, count};
      }
      Corpus corpus(spec);
      HuntOptions opts;
      opts.jobs = std::max(1U, jobs);
      opts.robustness.budget = hunt_budget.budget;
      opts.robustness.path = path_options(hunt_budget);
      opts.exact.max_order = hunt_budget.max_order;
      opts.progress = [](std::size_t done, std::size_t total) {
        std::cerr << "\rhunt: " << done << "/" << total << std::flush;
        if (done == total) std::cerr << '\n';
      };
      HuntReport report = sunfactor::hunt(corpus, theorem, param, opts);
      emit(to_json(report), pretty);
      return report.skipped > 0 ? kExitBudget : kExitOk;
    }

    if (*gen_cmd) {
      std::cout << to_graph6(generate_family(gen_in.family, gen_in.params)) << '\n';
      return kExitOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    emit(json{{"skipped", true}, {"reason", e.what()}}, pretty);
    return kExitBudget;
  }
  return kExitOk;
}
