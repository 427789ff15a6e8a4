// tuttesim: evaluate Tutte polynomials of multigraphs at the quantum points
// x = -i cot(pi/4k), y = e^{i pi/2k}, and quantum circuit amplitudes mapped
// onto them.  Exit codes: 0 success, 1 input error, 2 internal or arithmetic
// error.

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tuttesim/amplitude.hpp"
#include "tuttesim/backend.hpp"
#include "tuttesim/bench.hpp"
#include "tuttesim/engine.hpp"
#include "tuttesim/graph_io.hpp"
#include "tuttesim/oracle.hpp"
#include "tuttesim/scalar_io.hpp"
#include "tuttesim/selfcheck.hpp"

namespace {

using namespace tuttesim;

struct PruneFlags {
  bool no_components = false, no_bicomponents = false, no_multicycle = false,
       no_vertigan = false, no_planar_fkt = false, planar_fkt = false,
       no_mod4k = false;

  void add_to(CLI::App* cmd) {
    cmd->add_flag("--no-components", no_components,
                  "disable the connected-component split");
    cmd->add_flag("--no-bicomponents", no_bicomponents,
                  "disable the biconnected-component split");
    cmd->add_flag("--no-multicycle", no_multicycle,
                  "disable the multicycle closed form");
    cmd->add_flag("--no-vertigan", no_vertigan,
                  "disable the Vertigan (Clifford) fast path");
    cmd->add_flag("--no-planar-fkt", no_planar_fkt,
                  "disable planar FKT pruning");
    cmd->add_flag("--planar-fkt", planar_fkt,
                  "force planar FKT pruning on (float backend only)");
    cmd->add_flag("--no-mod-4k-simplify", no_mod4k,
                  "disable multiplicity reduction mod 4k");
  }

  PruningToggles resolve(bool exact_backend) const {
    PruningToggles t = default_toggles(exact_backend);
    if (no_components) t.components = false;
    if (no_bicomponents) t.bicomponents = false;
    if (no_multicycle) t.multicycle = false;
    if (no_vertigan) t.vertigan = false;
    if (no_mod4k) t.mod4k_simplify = false;
    if (planar_fkt) t.planar_fkt = true;
    if (no_planar_fkt) t.planar_fkt = false;
    if (t.planar_fkt && exact_backend)
      throw std::invalid_argument(
          "--planar-fkt requires --backend float (exact Pfaffians are not "
          "supported)");
    return t;
  }
};

int thread_default() {
  if (const char* env = std::getenv("TUTTESIM_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

void print_stats_text(const EvalStats& st) {
  std::cout << "total_leaves: " << st.total_leaves() << "\n"
            << "leaves: empty=" << st.leaves_empty
            << " vertigan=" << st.leaves_vertigan
            << " multicycle=" << st.leaves_multicycle
            << " planar=" << st.leaves_planar << "\n"
            << "recursion_nodes: " << st.recursion_nodes << "\n";
}

void print_report_json(const std::string& value_str,
                       std::complex<double> approx, const EvalStats& st) {
  std::cout << "{\"value\":\"" << value_str << "\",\"value_re\":"
            << format_double(approx.real())
            << ",\"value_im\":" << format_double(approx.imag())
            << ",\"total_leaves\":" << st.total_leaves()
            << ",\"leaves_empty\":" << st.leaves_empty
            << ",\"leaves_vertigan\":" << st.leaves_vertigan
            << ",\"leaves_multicycle\":" << st.leaves_multicycle
            << ",\"leaves_planar\":" << st.leaves_planar
            << ",\"recursion_nodes\":" << st.recursion_nodes << "}\n";
}

void print_report_csv(const std::string& value_str, const EvalStats& st) {
  std::cout << "value,total_leaves,empty,vertigan,multicycle,planar,"
               "recursion_nodes\n"
            << '"' << value_str << '"' << ',' << st.total_leaves() << ','
            << st.leaves_empty << ',' << st.leaves_vertigan << ','
            << st.leaves_multicycle << ',' << st.leaves_planar << ','
            << st.recursion_nodes << "\n";
}

bool close_enough(std::complex<double> a, std::complex<double> b) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= 1e-9 * scale;
}

int run_eval(const std::string& path, int k, const std::string& heuristic,
             const std::string& backend, const PruneFlags& flags, bool oracle,
             bool json, bool csv, int threads) {
  Multigraph g = load_graph_json(path);
  Heuristic h = parse_heuristic(heuristic);
  bool exact = backend == "exact";
  PruningToggles t = flags.resolve(exact);
  std::string value_str;
  std::complex<double> approx;
  EvalStats st;
  bool oracle_ok = true;
  std::string oracle_str;
  if (exact) {
    ExactBackend b(k);
    auto res = evaluate(g, b, h, t, threads);
    value_str = format_scalar(res.value);
    approx = res.value.to_complex();
    st = res.stats;
    if (oracle) {
      Cyclo ov = TuttePoly::subset_expansion(g).eval_quantum(b);
      oracle_ok = ov == res.value;
      oracle_str = format_scalar(ov);
    }
  } else {
    FloatBackend b(k);
    auto res = evaluate(g, b, h, t, threads);
    value_str = format_scalar(res.value);
    approx = res.value;
    st = res.stats;
    if (oracle) {
      std::complex<double> ov = TuttePoly::subset_expansion(g).eval_quantum(b);
      oracle_ok = close_enough(ov, res.value);
      oracle_str = format_scalar(ov);
    }
  }
  if (json) {
    print_report_json(value_str, approx, st);
  } else if (csv) {
    print_report_csv(value_str, st);
  } else {
    std::cout << "value: " << value_str << "\n";
    print_stats_text(st);
  }
  if (oracle) {
    std::cout << "oracle: " << oracle_str << "\n"
              << "oracle_match: " << (oracle_ok ? "yes" : "no") << "\n";
    if (!oracle_ok) throw std::logic_error("oracle mismatch");
  }
  return 0;
}

int run_amplitude(const std::string& circuit_path,
                  const std::string& xprogram_path, const std::string& outcome,
                  const std::string& heuristic, const std::string& backend,
                  const PruneFlags& flags, bool oracle, bool json,
                  int threads) {
  Heuristic h = parse_heuristic(heuristic);
  bool exact = backend == "exact";
  Circuit circ;
  XProgram xp;
  bool is_circuit = !circuit_path.empty();
  if (is_circuit) {
    std::ifstream in(circuit_path);
    if (!in)
      throw std::invalid_argument("cannot open circuit file: " + circuit_path);
    circ = Circuit::parse(in);
  } else {
    std::ifstream in(xprogram_path);
    if (!in)
      throw std::invalid_argument("cannot open x-program file: " +
                                  xprogram_path);
    xp = XProgram::parse(in);
  }
  if (is_circuit && !outcome.empty())
    throw std::invalid_argument("--outcome applies to --xprogram input");
  std::vector<bool> out_bits;
  if (!outcome.empty()) {
    if (static_cast<int>(outcome.size()) != xp.cols)
      throw std::invalid_argument("--outcome width must match program columns");
    for (char c : outcome) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("--outcome must be a bit-string");
      out_bits.push_back(c == '1');
    }
  }
  int k = is_circuit ? circ.k : xp.k;
  std::string value_str;
  std::complex<double> approx;
  EvalStats st;
  auto run = [&](auto backend_obj) {
    PruningToggles t = flags.resolve(decltype(backend_obj)::exact);
    if (is_circuit) {
      auto res = amplitude(circ, backend_obj, h, t, threads);
      value_str = format_scalar(res.value);
      approx = decltype(backend_obj)::approx(res.value);
      st = res.stats;
    } else if (!outcome.empty()) {
      auto res = amplitude_for_outcome(xp, out_bits, 2L * xp.k, backend_obj, h,
                                       t, threads);
      value_str = format_scalar(res.value);
      approx = decltype(backend_obj)::approx(res.value);
      st = res.stats;
    } else {
      auto res = xprogram_amplitude(xp, backend_obj, h, t, threads);
      value_str = format_scalar(res.value);
      approx = decltype(backend_obj)::approx(res.value);
      st = res.stats;
    }
  };
  if (exact)
    run(ExactBackend(k));
  else
    run(FloatBackend(k));
  if (json) {
    print_report_json(value_str, approx, st);
  } else {
    std::cout << "amplitude: " << value_str << "\n";
    print_stats_text(st);
  }
  if (oracle) {
    std::complex<double> sv;
    if (is_circuit) {
      sv = statevector_amplitude(circ, 0);
    } else {
      uint64_t idx = 0;
      for (int c = 0; c < xp.cols; ++c)
        if (!out_bits.empty() && out_bits[c]) idx |= 1ULL << c;
      sv = statevector_amplitude(xp, idx);
    }
    bool ok = close_enough(sv, approx);
    std::cout << "oracle: " << format_complex(sv) << "\n"
              << "oracle_match: " << (ok ? "yes" : "no") << "\n";
    if (!ok) throw std::logic_error("oracle mismatch");
  }
  return 0;
}

int run_bench(const std::string& cls, int n, int count, uint64_t seed, int k,
              double p, bool random_vertex_weights, const std::string& out_path,
              const std::string& jsonl_path, int threads) {
  InstanceSpec spec;
  spec.cls = parse_instance_class(cls);
  spec.n = n;
  spec.k = k;
  spec.seed = seed;
  spec.p = p;
  spec.random_vertex_weights = random_vertex_weights;
  std::vector<Heuristic> hs;
  for (const auto& [h, name] : heuristic_names()) hs.push_back(h);
  std::ofstream jsonl_file;
  std::ostream* jsonl = nullptr;
  if (!jsonl_path.empty()) {
    jsonl_file.open(jsonl_path);
    if (!jsonl_file)
      throw std::invalid_argument("cannot open jsonl file: " + jsonl_path);
    jsonl = &jsonl_file;
  }
  SuiteStats stats = run_suite(spec, count, hs, threads, jsonl);
  std::string csv = suite_csv(stats);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << csv;
  }
  return 0;
}

int run_selfcheck(uint64_t seed, int trials) {
  auto results = run_identity_suite(seed, trials);
  int failures = 0;
  for (const auto& r : results) {
    std::cout << (r.passed() ? "PASS" : "FAIL") << " " << r.name
              << " (trials=" << r.trials << ", failures=" << r.failures
              << ", max_err=" << format_double(r.max_err) << ")\n";
    failures += r.failures;
  }
  if (failures > 0) throw std::logic_error("selfcheck identities failed");
  std::cout << "selfcheck: all identities hold\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "tuttesim: quantum circuit amplitudes via Tutte-polynomial "
      "deletion-contraction"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = thread_default();
  app.add_option("--threads", threads,
                 "parallel branch evaluation (default TUTTESIM_THREADS or 1)");

  auto* eval = app.add_subcommand("eval", "evaluate T(G; x(k), y(k))");
  std::string eval_graph, eval_heuristic = "vertex-order",
              eval_backend = "exact";
  int eval_k = 2;
  bool eval_oracle = false, eval_json = false, eval_csv = false;
  PruneFlags eval_flags;
  eval->add_option("--graph", eval_graph, "graph JSON file")->required();
  eval->add_option("--k", eval_k, "quantum point parameter k >= 1")->required();
  eval->add_option("--heuristic", eval_heuristic,
                   "non-vertigan|vertex-order|min-degree|max-degree|"
                   "min-degree-sum|max-degree-sum");
  eval->add_option("--backend", eval_backend, "exact|float")
      ->check(CLI::IsMember({"exact", "float"}));
  eval_flags.add_to(eval);
  eval->add_flag("--oracle", eval_oracle,
                 "cross-check against the subset-expansion oracle");
  eval->add_flag("--json", eval_json, "emit the report as JSON");
  eval->add_flag("--csv", eval_csv, "emit the report as a CSV row");

  auto* amp = app.add_subcommand("amplitude", "compute circuit amplitudes");
  std::string amp_circuit, amp_xprogram, amp_outcome,
      amp_heuristic = "vertex-order", amp_backend = "exact";
  bool amp_oracle = false, amp_json = false;
  PruneFlags amp_flags;
  amp->add_option("--circuit", amp_circuit, "circuit file (H/RX/RXX)");
  amp->add_option("--xprogram", amp_xprogram, "x-program file");
  amp->add_option("--outcome", amp_outcome,
                  "outcome bit-string (x-program input only)");
  amp->add_option("--heuristic", amp_heuristic, "edge-selection heuristic");
  amp->add_option("--backend", amp_backend, "exact|float")
      ->check(CLI::IsMember({"exact", "float"}));
  amp_flags.add_to(amp);
  amp->add_flag("--oracle", amp_oracle,
                "cross-check against the statevector oracle");
  amp->add_flag("--json", amp_json, "emit the report as JSON");

  auto* bench = app.add_subcommand("bench", "random-instance heuristic suite");
  std::string bench_class = "dense", bench_out, bench_jsonl;
  int bench_n = 8, bench_count = 16, bench_k = 2;
  uint64_t bench_seed = 1;
  double bench_p = 0.5;
  bool bench_rvw = false;
  bench->add_option("--class", bench_class, "dense|sparse")
      ->check(CLI::IsMember({"dense", "sparse"}));
  bench->add_option("--n", bench_n, "vertex count");
  bench->add_option("--count", bench_count, "instance count");
  bench->add_option("--seed", bench_seed, "suite seed");
  bench->add_option("--k", bench_k, "quantum point parameter (default 2)");
  bench->add_option("--p", bench_p, "sparse edge probability (default 0.5)");
  bench->add_flag("--random-vertex-weights", bench_rvw,
                  "draw random vertex weights instead of zero");
  bench->add_option("--out", bench_out, "CSV output file (default stdout)");
  bench->add_option("--jsonl", bench_jsonl, "per-instance JSON-lines log");

  auto* self = app.add_subcommand("selfcheck", "run the identity suite");
  uint64_t self_seed = 2024;
  int self_trials = 50;
  self->add_option("--seed", self_seed, "suite seed");
  self->add_option("--trials", self_trials, "trials per identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(eval))
      return run_eval(eval_graph, eval_k, eval_heuristic, eval_backend,
                      eval_flags, eval_oracle, eval_json, eval_csv, threads);
    if (app.got_subcommand(amp)) {
      if (amp_circuit.empty() == amp_xprogram.empty())
        throw std::invalid_argument(
            "amplitude needs exactly one of --circuit or --xprogram");
      return run_amplitude(amp_circuit, amp_xprogram, amp_outcome,
                           amp_heuristic, amp_backend, amp_flags, amp_oracle,
                           amp_json, threads);
    }
    if (app.got_subcommand(bench))
      return run_bench(bench_class, bench_n, bench_count, bench_seed, bench_k,
                       bench_p, bench_rvw, bench_out, bench_jsonl, threads);
    if (app.got_subcommand(self)) return run_selfcheck(self_seed, self_trials);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
