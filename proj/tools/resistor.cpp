// resistor: a command-line front end for the resistance-distance toolkit.
//
// Subcommands: gen, resist, matrix, compare, reduce, embed, approx,
// conjecture, count, formula. Graphs travel as edge-list text ("u v [w]",
// 1-based, '#' comments, optional "n <count>" header); "-" reads stdin.
// RESISTOR_MODE=exact|float sets the default numeric mode.
//
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 disconnected graph,
// 4 backend not applicable, 5 resource budget exceeded, 6 numeric error,
// 7 cross-backend discrepancy (FAIL).

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "resistor/backends.hpp"
#include "resistor/closed_forms.hpp"
#include "resistor/reductions.hpp"
#include "resistor/trace_io.hpp"

using namespace resistor;
using nlohmann::json;

namespace {

enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kDisconnected = 3,
  kNotApplicable = 4,
  kResource = 5,
  kNumeric = 6,
  kFail = 7,
};

struct GlobalOpts {
  std::string mode = "exact";
  bool json_output = false;
  bool timing = false;
};

std::string read_input_text(const std::string& source) {
  if (source == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(source);
  if (!in) throw std::invalid_argument("cannot open input file: " + source);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text, int n) {
  std::vector<std::pair<int, int>> out;
  if (text == "all") {
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) out.emplace_back(u, v);
    return out;
  }
  std::istringstream ss(text);
  std::string chunk;
  while (std::getline(ss, chunk, ';')) {
    auto comma = chunk.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad pair: " + chunk);
    int u = std::stoi(chunk.substr(0, comma));
    int v = std::stoi(chunk.substr(comma + 1));
    if (u < 1 || v < 1 || u > n || v > n) throw std::invalid_argument("pair out of range: " + chunk);
    if (u == v) throw std::invalid_argument("pair with equal endpoints: " + chunk);
    out.emplace_back(u, v);
  }
  if (out.empty()) throw std::invalid_argument("no pairs given");
  return out;
}

template <class S>
std::string render_value(const S& value) {
  if constexpr (is_exact_v<S>)
    return format_scalar(value) + " = " + format_decimal(value);
  else
    return format_decimal(value);
}

/// FamilySpec from the CLI's (family, params) words.
families::FamilySpec parse_family(const std::string& family, const std::vector<int>& params) {
  using namespace families;
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("family '" + family + "' expects " + std::to_string(k) +
                                  " integer parameter(s)");
  };
  if (family == "path") {
    need(1);
    return Path{params[0]};
  }
  if (family == "ipath") {
    need(1);
    return Path{params[0], true};
  }
  if (family == "cycle") {
    need(1);
    return Cycle{params[0]};
  }
  if (family == "ladder") {
    need(1);
    return Ladder{params[0]};
  }
  if (family == "fan") {
    need(1);
    return Fan{params[0]};
  }
  if (family == "wheel") {
    need(1);
    return Wheel{params[0]};
  }
  if (family == "s2tree") {
    need(1);
    return Straight2Tree{params[0]};
  }
  if (family == "bent2tree") {
    if (params.size() < 2) throw std::invalid_argument("bent2tree expects n k1 [k2 ...]");
    return Bent2Tree{params[0], std::vector<int>(params.begin() + 1, params.end())};
  }
  if (family == "k-tree" || family == "ktree") {
    need(2);
    return LinearKTree{params[0], params[1]};
  }
  if (family == "flower") {
    need(2);
    return CompleteFlower{params[0], params[1]};
  }
  if (family == "trigrid") {
    need(1);
    return TriangularGrid{params[0]};
  }
  if (family == "grid") {
    need(2);
    return Grid{params[0], params[1]};
  }
  if (family == "blocktower") {
    need(1);
    return BlockTower{params[0]};
  }
  throw std::invalid_argument("unknown family: " + family + " (try: path ipath cycle ladder fan "
                              "wheel s2tree bent2tree ktree flower trigrid grid blocktower)");
}

// ---------------------------------------------------------------------------

int cmd_gen(const std::string& family, const std::vector<int>& params, const std::string& out_path) {
  auto g = families::generate<Rat>(parse_family(family, params));
  if (out_path.empty() || out_path == "-") {
    write_edge_list(std::cout, g);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    write_edge_list(out, g);
  }
  return kOk;
}

template <class S>
int run_resist(const GlobalOpts& opts, const std::string& source, const std::string& pairs_text,
               const std::vector<Backend>& backends, const std::string& trace_path) {
  auto g = read_edge_list_string<S>(read_input_text(source));
  require_connected(g, "resist");
  auto pairs = parse_pairs(pairs_text, g.vertex_count());

  auto t0 = std::chrono::steady_clock::now();
  json report;
  report["input"] = source;
  report["mode"] = is_exact_v<S> ? "exact" : "float";
  report["backends"] = json::array();
  for (auto b : backends) report["backends"].push_back(backend_name(b));
  report["pairs"] = json::array();
  bool fail = false;

  std::vector<TransformStep<S>> last_trace;
  for (auto [u, v] : pairs) {
    json row;
    row["u"] = u;
    row["v"] = v;
    std::optional<S> reference;
    for (auto b : backends) {
      std::vector<TransformStep<S>> trace;
      auto value = backend_resistance(g, b, u - 1, v - 1, &trace);
      if (b == Backend::Transform && !trace.empty()) last_trace = trace;
      json cell;
      if (!value) {
        cell = nullptr;
      } else {
        if constexpr (is_exact_v<S>) cell = format_scalar(*value);
        else cell = *value;
        if (!reference) {
          reference = *value;
        } else if constexpr (is_exact_v<S>) {
          if (*reference != *value) fail = true;
        }
      }
      row[backend_name(b)] = cell;
    }
    if (reference) {
      row["decimal"] = format_decimal(*reference);
    }
    report["pairs"].push_back(row);
  }
  report["status"] = fail ? "FAIL" : "ok";
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  if (opts.timing) report["elapsed_ms"] = ms;

  if (!trace_path.empty() && !last_trace.empty()) {
    std::ofstream out(trace_path);
    if (!out) throw std::invalid_argument("cannot open trace file: " + trace_path);
    if (trace_path.size() > 5 && trace_path.substr(trace_path.size() - 5) == ".json")
      out << trace_to_json(last_trace).dump(2) << "\n";
    else
      write_trace_text(out, last_trace);
  }

  if (opts.json_output) {
    std::cout << report.dump(2) << "\n";
  } else {
    for (const auto& row : report["pairs"]) {
      std::cout << "r(" << row["u"].get<int>() << "," << row["v"].get<int>() << ")";
      for (auto b : backends) {
        const auto& cell = row[backend_name(b)];
        std::cout << "  " << backend_name(b) << "=";
        if (cell.is_null())
          std::cout << "n/a";
        else if (cell.is_string())
          std::cout << cell.get<std::string>();
        else
          std::cout << format_decimal(cell.get<double>());
      }
      if (row.contains("decimal")) std::cout << "  (" << row["decimal"].get<std::string>() << ")";
      std::cout << "\n";
    }
    if (opts.timing) std::cout << "elapsed: " << ms << " ms\n";
    if (fail) std::cout << "FAIL: exact backends disagree\n";
  }
  return fail ? kFail : kOk;
}

template <class S>
int run_matrix(const GlobalOpts& opts, const std::string& source) {
  auto g = read_edge_list_string<S>(read_input_text(source));
  require_connected(g, "matrix");
  auto omega = resistance_matrix(g);
  const int n = g.vertex_count();
  if (opts.json_output) {
    json rows = json::array();
    for (int i = 0; i < n; ++i) {
      json row = json::array();
      for (int j = 0; j < n; ++j) {
        if constexpr (is_exact_v<S>) row.push_back(format_scalar(omega(i, j)));
        else row.push_back(omega(i, j));
      }
      rows.push_back(row);
    }
    std::cout << json{{"omega", rows}}.dump(2) << "\n";
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (j) std::cout << "\t";
        if constexpr (is_exact_v<S>) std::cout << format_scalar(omega(i, j));
        else std::cout << format_decimal(omega(i, j));
      }
      std::cout << "\n";
    }
  }
  return kOk;
}

template <class S>
int run_compare(const GlobalOpts& opts, const std::string& source,
                const std::vector<Backend>& backends) {
  auto g = read_edge_list_string<S>(read_input_text(source));
  require_connected(g, "compare");
  const int n = g.vertex_count();

  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::pair<Backend, Matrix<S>>> results;
  for (auto b : backends) {
    auto m = backend_matrix(g, b);
    if (m) results.emplace_back(b, std::move(*m));
  }
  if (results.empty()) throw not_applicable("compare: no backend applies to this input");

  bool fail = false;
  double max_disc = 0;
  for (std::size_t k = 1; k < results.size(); ++k)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if constexpr (is_exact_v<S>) {
          if (results[k].second(i, j) != results[0].second(i, j)) fail = true;
        } else {
          double d = std::abs(results[k].second(i, j) - results[0].second(i, j));
          max_disc = std::max(max_disc, d);
        }
      }
  if constexpr (!is_exact_v<S>) fail = max_disc > 1e-6;

  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  json report;
  report["input"] = source;
  report["mode"] = is_exact_v<S> ? "exact" : "float";
  report["pairs_checked"] = n * (n - 1) / 2;
  report["backends"] = json::array();
  for (const auto& [b, m] : results) report["backends"].push_back(backend_name(b));
  if constexpr (is_exact_v<S>) report["max_discrepancy"] = fail ? "nonzero" : "0";
  else report["max_discrepancy"] = max_disc;
  report["status"] = fail ? "FAIL" : "ok";
  if (opts.timing) report["elapsed_ms"] = ms;

  if (opts.json_output) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "backends:";
    for (const auto& [b, m] : results) std::cout << " " << backend_name(b);
    std::cout << "\npairs checked: " << n * (n - 1) / 2
              << "\nmax discrepancy: " << report["max_discrepancy"].dump()
              << "\nstatus: " << (fail ? "FAIL" : "ok") << "\n";
    if (opts.timing) std::cout << "elapsed: " << ms << " ms\n";
  }
  return fail ? kFail : kOk;
}

template <class S>
int run_reduce(const GlobalOpts& opts, const std::string& source, int u, int v,
               const std::string& trace_path) {
  auto g = read_edge_list_string<S>(read_input_text(source));
  require_connected(g, "reduce");
  if (u < 1 || v < 1 || u > g.vertex_count() || v > g.vertex_count() || u == v)
    throw std::invalid_argument("reduce: bad terminal pair");
  auto res = reduce_two_terminal(g, u - 1, v - 1);
  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) throw std::invalid_argument("cannot open trace file: " + trace_path);
    if (trace_path.size() > 5 && trace_path.substr(trace_path.size() - 5) == ".json")
      out << trace_to_json(res.trace).dump(2) << "\n";
    else
      write_trace_text(out, res.trace);
  }
  if (opts.json_output) {
    json j;
    j["reduced"] = res.reduced;
    j["steps"] = res.trace.size();
    if (res.reduced) {
      if constexpr (is_exact_v<S>) j["resistance"] = format_scalar(res.resistance);
      else j["resistance"] = res.resistance;
      j["decimal"] = format_decimal(res.resistance);
    }
    std::cout << j.dump(2) << "\n";
  } else if (res.reduced) {
    std::cout << "r(" << u << "," << v << ") = " << render_value(res.resistance) << "  ["
              << res.trace.size() << " steps]\n";
  } else {
    std::cout << "not reduced after " << res.trace.size()
              << " steps; fall back to an algebraic backend\n";
  }
  return res.reduced ? kOk : kNotApplicable;
}

int run_embed(const GlobalOpts& opts, const std::string& source) {
  auto g = read_edge_list_string<double>(read_input_text(source));
  require_connected(g, "embed");
  auto emb = simplex_embed(g);
  if (opts.json_output) {
    json rows = json::array();
    for (int i = 0; i < emb.coords.rows(); ++i) {
      json row = json::array();
      for (int k = 0; k < emb.coords.cols(); ++k) row.push_back(emb.coords(i, k));
      rows.push_back(row);
    }
    std::cout << json{{"coordinates", rows}}.dump(2) << "\n";
  } else {
    // CSV: vertex, x1..x_{n-1}
    for (int i = 0; i < emb.coords.rows(); ++i) {
      std::cout << i + 1;
      for (int k = 0; k < emb.coords.cols(); ++k) std::cout << "," << format_decimal(emb.coords(i, k));
      std::cout << "\n";
    }
  }
  return kOk;
}

int run_approx(const GlobalOpts& opts, const std::string& source, const std::string& method,
               const std::string& pairs_text, int t, double epsilon, std::uint64_t seed,
               int walks) {
  auto g = read_edge_list_string<double>(read_input_text(source));
  require_connected(g, "approx");
  auto pairs = parse_pairs(pairs_text, g.vertex_count());
  json out;
  out["method"] = method;
  out["seed"] = seed;
  json rows = json::array();
  if (method == "spectral") {
    auto st = spectral_prepare(g);
    int tt = t > 0 ? t : st.usable;
    out["t"] = tt;
    for (auto [u, v] : pairs)
      rows.push_back({{"u", u}, {"v", v}, {"estimate", spectral_estimate(st, tt, u - 1, v - 1)}});
  } else if (method == "sketch") {
    auto sk = sketch_build(g, epsilon, seed);
    out["epsilon"] = epsilon;
    out["dimension"] = sk.dimension;
    for (auto [u, v] : pairs)
      rows.push_back({{"u", u}, {"v", v}, {"estimate", sketch_query(sk, u - 1, v - 1)}});
  } else if (method == "commute") {
    out["walks"] = walks;
    for (auto [u, v] : pairs) {
      auto est = commute_time_estimate(g, u - 1, v - 1, walks, seed);
      rows.push_back({{"u", u},
                      {"v", v},
                      {"estimate", est.resistance},
                      {"stderr", est.resistance_stderr},
                      {"mean_commute", est.mean_commute}});
    }
  } else {
    throw std::invalid_argument("approx: method must be spectral, sketch, or commute");
  }
  out["pairs"] = rows;
  if (opts.json_output) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& row : rows) {
      std::cout << "r(" << row["u"].get<int>() << "," << row["v"].get<int>() << ") ~ "
                << format_decimal(row["estimate"].get<double>());
      if (row.contains("stderr"))
        std::cout << " +- " << format_decimal(row["stderr"].get<double>());
      std::cout << "\n";
    }
  }
  return kOk;
}

int run_conjecture(const GlobalOpts& opts, int which, int n_max, int k) {
  auto rows = conjecture_probe(which, n_max, k);
  if (opts.json_output) {
    json arr = json::array();
    for (const auto& r : rows) {
      json row{{"n", r.n}, {"value", r.value}};
      if (!std::isnan(r.difference)) row["difference"] = r.difference;
      if (!std::isnan(r.conjectured)) row["conjectured"] = r.conjectured;
      if (!std::isnan(r.lower_bound)) row["lower_bound"] = r.lower_bound;
      arr.push_back(row);
    }
    std::cout << json{{"conjecture", which}, {"rows", arr}}.dump(2) << "\n";
  } else {
    std::cout << "n\tvalue\tdifference\tconjectured\tbound\n";
    for (const auto& r : rows) {
      std::cout << r.n << "\t" << format_decimal(r.value) << "\t";
      std::cout << (std::isnan(r.difference) ? std::string("-") : format_decimal(r.difference));
      std::cout << "\t";
      std::cout << (std::isnan(r.conjectured) ? std::string("-") : format_decimal(r.conjectured));
      std::cout << "\t";
      std::cout << (std::isnan(r.lower_bound) ? std::string("-") : format_decimal(r.lower_bound));
      std::cout << "\n";
    }
  }
  return kOk;
}

int run_count(const GlobalOpts& opts, const std::string& source, const std::string& pair_text) {
  auto g = read_edge_list_string<Rat>(read_input_text(source));
  require_connected(g, "count");
  Rat trees = count_spanning_trees_det(g);
  json out;
  out["spanning_trees"] = format_scalar(trees);
  if (!pair_text.empty()) {
    auto pairs = parse_pairs(pair_text, g.vertex_count());
    json arr = json::array();
    for (auto [u, v] : pairs) {
      Rat f = count_separating_2forests_det(g, u - 1, v - 1);
      arr.push_back({{"u", u}, {"v", v}, {"forests", format_scalar(f)},
                     {"resistance", format_scalar(f / trees)}});
    }
    out["separating_2forests"] = arr;
  }
  if (opts.json_output) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "spanning trees: " << format_scalar(trees) << "\n";
    if (out.contains("separating_2forests"))
      for (const auto& row : out["separating_2forests"])
        std::cout << "F(" << row["u"].get<int>() << "," << row["v"].get<int>()
                  << ") = " << row["forests"].get<std::string>()
                  << "   r = " << row["resistance"].get<std::string>() << "\n";
  }
  return kOk;
}

int run_formula(const GlobalOpts& opts, const std::string& family, const std::vector<int>& params,
                const std::string& pair_text, bool all_pairs, bool as_printed) {
  json out;
  out["family"] = family;
  json rows = json::array();
  auto emit = [&](int u, int v, const Rat& value) {
    rows.push_back({{"u", u}, {"v", v}, {"value", format_scalar(value)},
                    {"decimal", format_decimal(value)}});
  };
  if (family == "s2tree") {
    if (params.size() != 1) throw std::invalid_argument("formula s2tree expects n");
    int n = params[0];
    auto run = [&](int u, int v) { emit(u, v, straight_2tree_resistance(n, u, v)); };
    if (all_pairs)
      for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) run(u, v);
    else
      for (auto [u, v] : parse_pairs(pair_text, n)) run(u, v);
  } else if (family == "bent2tree") {
    if (params.size() < 2) throw std::invalid_argument("formula bent2tree expects n k1 [k2 ...]");
    int n = params[0];
    std::vector<int> bends(params.begin() + 1, params.end());
    auto run = [&](int u, int v) { emit(u, v, bent_2tree_resistance(n, bends, u, v)); };
    if (all_pairs)
      for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) run(u, v);
    else
      for (auto [u, v] : parse_pairs(pair_text, n)) run(u, v);
  } else if (family == "fan") {
    if (params.size() != 1) throw std::invalid_argument("formula fan expects n");
    int n = params[0];
    auto run = [&](int u, int v) {
      if (v == n + 1) emit(u, v, fan_hub_resistance(n, u, as_printed));
      else emit(u, v, fan_resistance(n, u, v));
    };
    if (all_pairs)
      for (int u = 1; u <= n + 1; ++u)
        for (int v = u + 1; v <= n + 1; ++v) run(u, v);
    else
      for (auto [u, v] : parse_pairs(pair_text, n + 1)) run(u, v);
  } else if (family == "wheel") {
    if (params.size() != 1) throw std::invalid_argument("formula wheel expects n");
    int n = params[0];
    auto run = [&](int u, int v) { emit(u, v, wheel_resistance(n, u, v)); };
    if (all_pairs)
      for (int u = 1; u <= n + 1; ++u)
        for (int v = u + 1; v <= n + 1; ++v) run(u, v);
    else
      for (auto [u, v] : parse_pairs(pair_text, n + 1)) run(u, v);
  } else if (family == "flower") {
    if (params.size() != 2) throw std::invalid_argument("formula flower expects n m");
    int n = params[0], m = params[1];
    auto fl = families::complete_flower<Rat>(n, m);
    auto classify = [&](int x) {
      return x % (m - 1) == m - 2 ? FlowerVertexClass::CutSet : FlowerVertexClass::Interior;
    };
    auto run = [&](int u, int v) {
      int d = flower_petal_separation(n, m, u - 1, v - 1);
      emit(u, v, flower_resistance(n, m, classify(u - 1), classify(v - 1), d, as_printed));
    };
    if (all_pairs)
      for (int u = 1; u <= fl.vertex_count(); ++u)
        for (int v = u + 1; v <= fl.vertex_count(); ++v) run(u, v);
    else
      for (auto [u, v] : parse_pairs(pair_text, fl.vertex_count())) run(u, v);
  } else if (family == "ladder") {
    if (params.size() != 1) throw std::invalid_argument("formula ladder expects n");
    int n = params[0];
    auto ends = ladder_end_resistances(n);
    emit(1, 2, ends.r_1_2);
    emit(1, 2 * n - 1, ends.r_1_2nm1);
    emit(1, 2 * n, ends.r_1_2n);
  } else {
    throw std::invalid_argument("formula: family must be one of s2tree bent2tree fan wheel "
                                "flower ladder");
  }
  out["values"] = rows;
  if (opts.json_output) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& row : rows)
      std::cout << "r(" << row["u"].get<int>() << "," << row["v"].get<int>()
                << ") = " << row["value"].get<std::string>() << " = "
                << row["decimal"].get<std::string>() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"resistance-distance toolkit"};
  app.require_subcommand(1);

  GlobalOpts opts;
  const char* env_mode = std::getenv("RESISTOR_MODE");
  if (env_mode) opts.mode = env_mode;
  app.add_option("--mode", opts.mode, "numeric mode: exact or float")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_flag("--json", opts.json_output, "emit JSON instead of tables");
  app.add_flag("--timing", opts.timing, "include wall-clock timing in reports");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a named family graph");
  std::string family;
  std::vector<int> params;
  std::string out_path;
  gen->add_option("family", family)->required();
  gen->add_option("params", params, "integer parameters");
  gen->add_option("--out", out_path, "output file (default stdout)");

  // resist
  auto* resist = app.add_subcommand("resist", "compute resistances with chosen backends");
  std::string source = "-", pairs_text = "all", backend_text = "pseudoinverse", trace_path;
  resist->add_option("input", source, "edge-list file or - for stdin");
  resist->add_option("--pairs", pairs_text, "u,v;u,v;... or 'all'");
  resist->add_option("--backend", backend_text, "backend name, comma list, or 'all'");
  resist->add_option("--trace", trace_path, "write the transform trace here (.json for JSON)");

  // matrix
  auto* matrix = app.add_subcommand("matrix", "all-pairs resistance matrix");
  std::string msource = "-";
  matrix->add_option("input", msource);

  // compare
  auto* compare = app.add_subcommand("compare", "run several backends over all pairs");
  std::string csource = "-", cbackends = "all";
  compare->add_option("input", csource);
  compare->add_option("--backends", cbackends, "comma list or 'all'");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "two-terminal network reduction with trace");
  std::string rsource = "-", terminals = "", rtrace;
  reduce->add_option("input", rsource);
  reduce->add_option("--terminals", terminals, "u,v")->required();
  reduce->add_option("--trace", rtrace, "trace output file (.json for JSON)");

  // embed
  auto* embed = app.add_subcommand("embed", "simplex embedding coordinates (CSV)");
  std::string esource = "-";
  embed->add_option("input", esource);

  // approx
  auto* approx = app.add_subcommand("approx", "approximate estimators");
  std::string asource = "-", method = "spectral", apairs = "all";
  int t = 0, walks = 100000;
  double epsilon = 0.1;
  std::uint64_t seed = 1;
  approx->add_option("input", asource);
  approx->add_option("--method", method, "spectral | sketch | commute");
  approx->add_option("--pairs", apairs);
  approx->add_option("--t", t, "retained eigenpairs (spectral; default all)");
  approx->add_option("--epsilon", epsilon, "sketch accuracy target");
  approx->add_option("--seed", seed);
  approx->add_option("--walks", walks, "random walks (commute)");

  // conjecture
  auto* conjecture = app.add_subcommand("conjecture", "numeric probes for the conjectures");
  int which = 1, n_max = 20, ktree = 2;
  conjecture->add_option("which", which, "1..4")->required();
  conjecture->add_option("--n-max", n_max);
  conjecture->add_option("--k", ktree, "K for conjecture 1 (default 2)");

  // count
  auto* count = app.add_subcommand("count", "spanning-tree and 2-forest counts");
  std::string cntsource = "-", cntpair;
  count->add_option("input", cntsource);
  count->add_option("--pair", cntpair, "u,v (optional; repeatable via ;)");

  // formula
  auto* formula = app.add_subcommand("formula", "closed-form family resistances");
  std::string ffamily, fpair;
  std::vector<int> fparams;
  bool all_pairs = false, as_printed = false;
  formula->add_option("family", ffamily)->required();
  formula->add_option("params", fparams);
  formula->add_option("--pair", fpair, "u,v (formula vertex labels)");
  formula->add_flag("--all-pairs", all_pairs);
  formula->add_flag("--as-printed", as_printed, "use the uncorrected published variants");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_gen(family, params, out_path);

    if (*resist) {
      std::vector<Backend> backends;
      if (backend_text == "all") {
        backends = all_backends();
      } else {
        std::istringstream ss(backend_text);
        std::string word;
        while (std::getline(ss, word, ',')) backends.push_back(backend_from_name(word));
      }
      return opts.mode == "exact"
                 ? run_resist<Rat>(opts, source, pairs_text, backends, trace_path)
                 : run_resist<double>(opts, source, pairs_text, backends, trace_path);
    }
    if (*matrix)
      return opts.mode == "exact" ? run_matrix<Rat>(opts, msource) : run_matrix<double>(opts, msource);
    if (*compare) {
      std::vector<Backend> backends;
      if (cbackends == "all") {
        backends = all_backends();
      } else {
        std::istringstream ss(cbackends);
        std::string word;
        while (std::getline(ss, word, ',')) backends.push_back(backend_from_name(word));
      }
      return opts.mode == "exact" ? run_compare<Rat>(opts, csource, backends)
                                  : run_compare<double>(opts, csource, backends);
    }
    if (*reduce) {
      auto comma = terminals.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("terminals must be u,v");
      int u = std::stoi(terminals.substr(0, comma));
      int v = std::stoi(terminals.substr(comma + 1));
      return opts.mode == "exact" ? run_reduce<Rat>(opts, rsource, u, v, rtrace)
                                  : run_reduce<double>(opts, rsource, u, v, rtrace);
    }
    if (*embed) return run_embed(opts, esource);
    if (*approx) return run_approx(opts, asource, method, apairs, t, epsilon, seed, walks);
    if (*conjecture) return run_conjecture(opts, which, n_max, ktree);
    if (*count) return run_count(opts, cntsource, cntpair);
    if (*formula) return run_formula(opts, ffamily, fparams, fpair, all_pairs, as_printed);
  } catch (const disconnected_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDisconnected;
  } catch (const not_applicable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotApplicable;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const numeric_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumeric;
  } catch (const singular_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
