#include "pebbling/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <random>

#include "pebbling/core.hpp"
#include "pebbling/error.hpp"
#include "pebbling/io.hpp"
#include "pebbling/numbers.hpp"
#include "pebbling/reductions.hpp"
#include "pebbling/solver.hpp"
#include "pebbling/x4c.hpp"

namespace pebbling::cli {

namespace {

using json = nlohmann::ordered_json;

struct Settings {
  std::string instance_path;
  std::uint64_t node_cap = 10'000'000;
  bool json_output = false;
  std::uint64_t seed = 1;
  std::string target;
  std::string demand_kind;
  std::string certificate_path;
  std::string reduction;
  std::string x4c_path;
  std::size_t random_n = 2;
  std::size_t random_m = 3;
  bool warm_start = false;
  bool serial = false;
};

class Command {
 public:
  Command(const Settings& settings, std::ostream& out) : s_(settings), out_(out) {}

  int solve() {
    const InstanceFile inst = load();
    const Demand d = require_demand(inst);
    return report_solve("solve", inst.graph, is_cover_solvable(inst.graph, inst.config, d, solver_options()));
  }

  int reach() {
    const InstanceFile inst = load();
    const Vertex t = named(inst.graph, s_.target);
    return report_solve("reach", inst.graph, is_reachable(inst.graph, inst.config, t, solver_options()));
  }

  int canonical() {
    const InstanceFile inst = load();
    const CanonicalResult r = is_canonical_solvable(inst.graph, inst.config, solver_options());
    json unreachable = json::array();
    for (Vertex v : r.unreachable) unreachable.push_back(inst.graph.name(v));
    if (s_.json_output) {
      emit({{"command", "canonical"},
            {"status", r.solvable ? "solvable" : "unsolvable"},
            {"unreachable", unreachable},
            {"stats", stats_json(r.stats)}});
    } else {
      out_ << "status: " << (r.solvable ? "solvable" : "unsolvable") << '\n';
      if (!r.solvable) {
        out_ << "unreachable:";
        for (Vertex v : r.unreachable) out_ << ' ' << inst.graph.name(v);
        out_ << '\n';
      }
    }
    return r.solvable ? kOk : kNegative;
  }

  int number() {
    const InstanceFile inst = load();
    Demand d;
    if (s_.demand_kind.empty()) {
      d = require_demand(inst);
    } else if (s_.demand_kind == "unit") {
      d = Demand::unit(inst.graph.size());
    } else if (s_.demand_kind.rfind("reach:", 0) == 0) {
      d = Demand::reach(inst.graph.size(), named(inst.graph, s_.demand_kind.substr(6)));
    } else {
      throw ParseError(0, "--demand-kind must be unit or reach:NAME");
    }
    return report_number("number", inst.graph, cover_pebbling_number(inst.graph, d, number_options()),
                         stacking_lower_bound(inst.graph, d));
  }

  int pi() {
    const InstanceFile inst = load();
    return report_number("pi", inst.graph, pebbling_number(inst.graph, number_options()), std::nullopt);
  }

  int oracle() {
    const InstanceFile inst = load();
    const Demand d = require_demand(inst);
    const bool ok = oracle_solvable(inst.graph, inst.config, d, OracleOptions{s_.node_cap});
    if (s_.json_output)
      emit({{"command", "oracle"}, {"status", ok ? "solvable" : "unsolvable"}});
    else
      out_ << "status: " << (ok ? "solvable" : "unsolvable") << '\n';
    return ok ? kOk : kNegative;
  }

  int verify() {
    const InstanceFile inst = load();
    const Demand d = require_demand(inst);
    const MoveList moves = read_certificate_file(s_.certificate_path, inst.graph);
    const auto violated = first_violation(inst.graph, inst.config, d, moves);
    const bool acyclic = !moves.has_directed_cycle();
    if (s_.json_output) {
      json doc{{"command", "verify"},
               {"status", violated ? "invalid" : "verified"},
               {"total_moves", moves.total_moves()},
               {"acyclic", acyclic}};
      if (violated) {
        const Configuration after = apply_moves(inst.graph, inst.config, moves);
        doc["violated_vertex"] = inst.graph.name(*violated);
        doc["final_count"] = after[*violated];
        doc["required"] = d[*violated];
      }
      emit(doc);
    } else if (violated) {
      const Configuration after = apply_moves(inst.graph, inst.config, moves);
      out_ << "status: invalid\nviolated: " << inst.graph.name(*violated) << " ends with " << after[*violated]
           << ", needs " << d[*violated] << '\n';
    } else {
      out_ << "status: verified\ntotal_moves: " << moves.total_moves() << '\n';
    }
    return violated ? kNegative : kOk;
  }

  int reduce() {
    ReducedInstance reduced = build_reduction();
    if (s_.json_output) {
      json doc = instance_json(reduced);
      doc["command"] = "reduce";
      doc["reduction"] = s_.reduction;
      doc["instance"] = write_instance(to_instance_file(reduced));
      if (s_.reduction != "cover-to-canonical") {
        const X4CInstance x4c = load_x4c();
        doc["x4c"] = write_x4c(x4c);
        if (auto cover = x4c_solve(x4c)) {
          json sets = json::array();
          for (std::size_t i : *cover) sets.push_back(i + 1);
          doc["exact_cover"] = sets;
        } else {
          doc["exact_cover"] = nullptr;
        }
      }
      emit(doc);
    } else {
      out_ << write_instance(to_instance_file(reduced));
    }
    return kOk;
  }

  int gamma_command() {
    const InstanceFile inst = load();
    const Demand d = require_demand(inst);
    const Vertex t = named(inst.graph, s_.target);
    const PotentialValue value = gamma(inst.graph, inst.config, d, t);
    const auto witness = gamma_witness(inst.graph, inst.config, d);
    if (s_.json_output) {
      emit({{"command", "gamma"},
            {"target", inst.graph.name(t)},
            {"numerator", wide_to_string(value.numerator)},
            {"log2_denominator", value.log2_denominator},
            {"negative", value.negative()},
            {"witness", witness ? json(inst.graph.name(*witness)) : json(nullptr)}});
    } else {
      out_ << "gamma(" << inst.graph.name(t) << "): " << value.to_string() << '\n';
      if (witness) out_ << "witness: " << inst.graph.name(*witness) << '\n';
    }
    return kOk;
  }

 private:
  InstanceFile load() const {
    if (s_.instance_path.empty()) throw ParseError(0, "--instance FILE is required");
    return read_instance_file(s_.instance_path);
  }

  X4CInstance load_x4c() const {
    if (!s_.x4c_path.empty()) return read_x4c_file(s_.x4c_path);
    std::mt19937_64 rng(s_.seed);
    return X4CInstance::random(s_.random_n, s_.random_m, rng);
  }

  ReducedInstance build_reduction() const {
    if (s_.reduction == "x4c-cover") return reduce_to_cover_solvability(load_x4c());
    if (s_.reduction == "x4c-number") return reduce_to_number_threshold(load_x4c());
    const InstanceFile inst = load();
    return reduce_cover_to_canonical(inst.graph, inst.config);
  }

  static Demand require_demand(const InstanceFile& inst) {
    if (!inst.demand) throw ParseError(0, "instance has no demand (add 'demand_kind' or 'demand' lines)");
    return *inst.demand;
  }

  static Vertex named(const Graph& g, const std::string& name) {
    if (name.empty()) throw ParseError(0, "--target NAME is required");
    auto v = g.index_of(name);
    if (!v) throw ParseError(0, "unknown vertex '" + name + "'");
    return *v;
  }

  SolverOptions solver_options() const {
    SolverOptions options;
    options.node_cap = s_.node_cap;
    return options;
  }

  NumberOptions number_options() const {
    NumberOptions options;
    options.solver = solver_options();
    options.warm_start = s_.warm_start;
    options.parallel = !s_.serial;
    return options;
  }

  static json stats_json(const SolveStats& stats) {
    return {{"nodes_expanded", stats.nodes_expanded}, {"max_depth", stats.max_depth}};
  }

  static json counts_json(const Graph& g, std::span<const Count> counts) {
    json doc = json::object();
    for (Vertex v = 0; v < g.size(); ++v) doc[g.name(v)] = counts[v];
    return doc;
  }

  static json instance_json(const ReducedInstance& r) {
    const Graph& g = r.graph;
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
    json roles = json::object();
    for (Vertex v = 0; v < r.roles.size(); ++v) roles[g.name(v)] = std::string(role_tag(r.roles[v]));
    return {{"vertices", g.names()},
            {"edges", edges},
            {"config", counts_json(g, r.config.counts())},
            {"demand", counts_json(g, r.demand.counts())},
            {"target", r.target ? json(g.name(*r.target)) : json(nullptr)},
            {"threshold", r.threshold ? json(*r.threshold) : json(nullptr)},
            {"roles", roles},
            {"trivial", r.trivial}};
  }

  int report_solve(const std::string& command, const Graph& g, const SolveResult& r) {
    if (s_.json_output) {
      json doc{{"command", command},
               {"status", r.solvable() ? "solvable" : "unsolvable"},
               {"witness", r.witness ? json(g.name(*r.witness)) : json(nullptr)},
               {"stats", stats_json(r.stats)}};
      json cert = json::array();
      if (r.certificate)
        for (const auto& [key, count] : r.certificate->entries())
          cert.push_back({{"from", g.name(key.first)}, {"to", g.name(key.second)}, {"count", count}});
      doc["certificate"] = r.certificate ? cert : json(nullptr);
      emit(doc);
    } else {
      out_ << "status: " << (r.solvable() ? "solvable" : "unsolvable") << '\n';
      if (r.witness) out_ << "witness: " << g.name(*r.witness) << '\n';
      if (r.certificate) out_ << "certificate:\n" << write_certificate(*r.certificate, g);
    }
    return r.solvable() ? kOk : kNegative;
  }

  int report_number(const std::string& command, const Graph& g, const NumberResult& r, std::optional<Count> stacking) {
    if (s_.json_output) {
      json doc{{"command", command},
               {"value", r.value},
               {"extremal_config", counts_json(g, r.extremal_config.counts())},
               {"configs_checked", r.configs_checked}};
      if (stacking) doc["stacking_lower_bound"] = *stacking;
      emit(doc);
    } else {
      out_ << "value: " << r.value << "\nextremal:";
      for (Vertex v = 0; v < g.size(); ++v) out_ << ' ' << g.name(v) << '=' << r.extremal_config[v];
      out_ << "\nconfigs_checked: " << r.configs_checked << '\n';
    }
    return kOk;
  }

  void emit(const json& doc) { out_ << doc.dump(2) << '\n'; }

  const Settings& s_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact graph pebbling: cover solvability, reachability, pebbling numbers, reductions", "pebble"};
  app.require_subcommand(1);
  app.add_option("--instance", s.instance_path, "Instance file");
  app.add_option("--node-cap", s.node_cap, "Search node cap (oracle: state cap)");
  app.add_flag("--json", s.json_output, "Machine-readable report");
  app.add_option("--seed", s.seed, "Seed for randomly generated X4C instances");

  auto* solve = app.add_subcommand("solve", "Decide cover solvability for the instance demand");
  auto* reach = app.add_subcommand("reach", "Decide whether a vertex is reachable");
  reach->add_option("--target", s.target, "Target vertex")->required();
  auto* canonical = app.add_subcommand("canonical", "Decide canonical pebbling solvability");
  auto* number = app.add_subcommand("number", "Cover pebbling number of the demand");
  number->add_option("--demand-kind", s.demand_kind, "unit | reach:NAME (default: instance demand)");
  auto* pi = app.add_subcommand("pi", "Pebbling number of the graph");
  for (auto* sub : {number, pi}) {
    sub->add_flag("--warm-start", s.warm_start, "Start the sweep at the stacking bound");
    sub->add_flag("--serial", s.serial, "Use the serial reference sweep");
  }
  auto* oracle = app.add_subcommand("oracle", "Breadth-first reference decision");
  auto* verify = app.add_subcommand("verify", "Check a move-list certificate");
  verify->add_option("--certificate", s.certificate_path, "Certificate file")->required();
  auto* reduce = app.add_subcommand("reduce", "Build a reduction instance");
  reduce->add_option("kind", s.reduction, "x4c-cover | x4c-number | cover-to-canonical")
      ->required()
      ->check(CLI::IsMember({"x4c-cover", "x4c-number", "cover-to-canonical"}));
  reduce->add_option("--x4c", s.x4c_path, "X4C instance file (default: random from --seed)");
  reduce->add_option("--n", s.random_n, "Random X4C universe size / 4");
  reduce->add_option("--m", s.random_m, "Random X4C set count");
  auto* gamma_cmd = app.add_subcommand("gamma", "Potential of the instance at a vertex");
  gamma_cmd->add_option("--target", s.target, "Vertex")->required();
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  auto fail = [&](int code, const std::string& message) {
    err << "error: " << message << '\n';
    if (s.json_output) out << json{{"status", code == kBudget ? "budget-exceeded" : "error"}, {"message", message}}.dump(2) << '\n';
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail(kUsage, e.what());
  }

  Command command(s, out);
  try {
    if (solve->parsed()) return command.solve();
    if (reach->parsed()) return command.reach();
    if (canonical->parsed()) return command.canonical();
    if (number->parsed()) return command.number();
    if (pi->parsed()) return command.pi();
    if (oracle->parsed()) return command.oracle();
    if (verify->parsed()) return command.verify();
    if (reduce->parsed()) return command.reduce();
    if (gamma_cmd->parsed()) return command.gamma_command();
  } catch (const BudgetExceeded& e) {
    return fail(kBudget, e.what());
  } catch (const Error& e) {
    return fail(kUsage, e.what());
  }
  return fail(kUsage, "no command");
}

}  // namespace pebbling::cli
