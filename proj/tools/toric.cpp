// Command-line front end for the toric library.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toric/io.hpp"
#include "toric/toric.hpp"
#include "toric/verify.hpp"

namespace {

using namespace toric;

struct Options {
  std::string format = "json";
  std::string perm;
  std::string dag_file;
  std::string basis;
  std::string kind;
  std::string mode;
  std::string target;
  std::vector<std::string> args;
  int n = -1;
  int m = -1;
  int order = 10;
  bool parallel = false;
  bool cyclic = false;
};

Subset parse_set(const std::string& text) {
  Subset s;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '{' || c == '}' || c == ',' || c == ' ') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(std::string("unexpected character '") + c + "' in set", static_cast<long>(i));
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > Subset::kMaxElement) throw ParseError("set element too large", static_cast<long>(i));
      ++i;
    }
    s.insert(v);
  }
  return s;
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got \"" + text + "\"", 0);
  }
  if (used != text.size()) throw ParseError("trailing characters in \"" + text + "\"", static_cast<long>(used));
  return v;
}

json set_list(const std::vector<StatSet>& sets) {
  json j = json::array();
  for (Subset s : sets) j.push_back(subset_json(s));
  return j;
}

int cmd_stats(const Options& o) {
  const Perm w = Perm::parse(o.perm);
  json j = {{"word", w.to_string()},
            {"des", subset_json(des_set(w))},
            {"pk", subset_json(peak_set(w))},
            {"cdes", subset_json(w.empty() ? Subset{} : cdes_set(w))},
            {"cpk", subset_json(w.empty() ? Subset{} : cpeak_set(w))}};
  if (!w.empty()) {
    j["cdes_multiset"] = set_list(cyclic_stat_multiset(CyclicClass::of(w), CyclicStat::cdes));
    j["cpk_multiset"] = set_list(cyclic_stat_multiset(CyclicClass::of(w), CyclicStat::cpeak));
  }
  if (o.format == "tsv") {
    for (const char* key : {"des", "pk", "cdes", "cpk"}) std::cout << key << '\t' << j[key].dump() << '\n';
  } else {
    std::cout << j.dump() << '\n';
  }
  return 0;
}

std::optional<Dag> input_dag(const Options& o) {
  if (!o.dag_file.empty()) return read_dag_file(o.dag_file);
  if (!o.perm.empty()) return Dag::total_order(Perm::parse(o.perm));
  return std::nullopt;
}

Dag require_dag(const Options& o) {
  if (auto d = input_dag(o)) return *d;
  throw Error("this command needs --dag FILE or --perm WORD");
}

int cmd_expand(const Options& o) {
  const std::string& k = o.kind;
  auto size_and_set = [&]() -> std::pair<int, Subset> {
    if (o.args.empty()) throw Error("expand " + k + " needs N and a set, e.g. `expand " + k + " 4 1,3`");
    return {parse_int(o.args[0]), o.args.size() > 1 ? parse_set(o.args[1]) : Subset{}};
  };
  auto emit_linear = [&](const QSym& q) {
    std::cout << to_json(q, o.basis.empty() ? "M" : o.basis).dump() << '\n';
    return 0;
  };
  auto emit_cyclic = [&](const CQSym& q) {
    std::cout << to_json(q, o.basis.empty() ? "Mcyc" : o.basis).dump() << '\n';
    return 0;
  };
  if (k == "delta") return emit_linear(delta_dag(require_dag(o)));
  if (k == "delta-cyc") return emit_cyclic(delta_toric(toric_class(require_dag(o))));
  const auto [n, s] = size_and_set();
  if (k == "M") return emit_linear(monomial(n, s));
  if (k == "F") return emit_linear(fundamental(n, s));
  if (k == "K") return emit_linear(k_peak(s, n));
  if (k == "Mcyc") return emit_cyclic(cyclic_monomial(n, s));
  if (k == "Fcyc") return emit_cyclic(cyclic_fundamental(n, s));
  if (k == "Kcyc") return emit_cyclic(kcyc(s, n));
  throw Error("unknown kind " + k + " (expected delta, delta-cyc, M, F, K, Mcyc, Fcyc, Kcyc)");
}

int cmd_extensions(const Options& o) {
  const Dag d = require_dag(o);
  std::vector<std::string> words;
  if (o.mode == "linear") {
    for (const Perm& w : linear_extensions(d)) words.push_back(w.to_string());
  } else if (o.mode == "toric") {
    for (const CyclicClass& c : toric_extensions(d)) words.push_back(c.canonical().to_string());
  } else if (o.mode == "class") {
    const ToricClass tc = toric_class(d);
    if (o.format == "tsv") {
      for (const Dag& member : tc.members()) std::cout << member.to_string() << '\n';
    } else {
      json j = to_json(tc);
      j["all"] = json::array();
      for (const Dag& member : tc.members()) j["all"].push_back(to_json(member));
      j["toric_poset"] = is_toric_poset(tc);
      std::cout << j.dump() << '\n';
    }
    return 0;
  } else {
    throw Error("extensions mode must be linear, toric or class");
  }
  if (o.format == "tsv") {
    for (const auto& w : words) std::cout << w << '\n';
  } else {
    std::cout << json(words).dump() << '\n';
  }
  return 0;
}

int cmd_enumerate(const Options& o) {
  const int m = o.m < 0 ? 1 : o.m;
  if (o.mode == "markings") {
    const Perm w = Perm::parse(o.perm);
    for (const Marking& mk : enumerate_markings(w, m)) {
      if (o.format == "tsv") {
        std::cout << mk.to_string() << '\n';
      } else {
        std::cout << json{{"bars", mk.bars}, {"marked", subset_json(mk.marked)}}.dump() << '\n';
      }
    }
    return 0;
  }
  if (o.mode != "enriched") throw Error("enumerate mode must be enriched or markings");
  const Dag d = require_dag(o);
  const auto maps = o.cyclic ? enumerate_enriched_toric(toric_class(d), m, o.parallel) : enumerate_enriched(d, m, o.parallel);
  for (const EnrichedMap& f : maps) {
    if (o.format == "tsv") {
      bool first = true;
      for (const auto& [v, x] : f.entries()) {
        std::cout << (first ? "" : "\t") << v << '=' << x.value();
        first = false;
      }
      std::cout << '\n';
    } else {
      std::cout << to_json(f).dump() << '\n';
    }
  }
  return 0;
}

int cmd_order_poly(const Options& o) {
  const int max_m = o.m < 0 ? 6 : o.m;
  std::vector<std::string> cols;
  std::vector<std::vector<Int>> rows;
  if (o.dag_file.empty()) {
    const Perm w = Perm::parse(o.perm);
    const CyclicClass cw = CyclicClass::of(w);
    cols = {"omega", "omega_cyc"};
    for (int m = 0; m <= max_m; ++m) rows.push_back({omega(w, m), omega_cyc(cw, m)});
  } else {
    const Dag d = read_dag_file(o.dag_file);
    const ToricClass tc = toric_class(d);
    cols = {"omega", "omega_toric"};
    for (int m = 0; m <= max_m; ++m) rows.push_back({omega_dag(d, m), omega_toric(tc, m)});
  }
  if (o.format == "json") {
    json out = json::array();
    for (int m = 0; m <= max_m; ++m) {
      json row = {{"m", m}};
      for (std::size_t c = 0; c < cols.size(); ++c) row[cols[c]] = int_json(rows[static_cast<std::size_t>(m)][c]);
      out.push_back(std::move(row));
    }
    std::cout << out.dump() << '\n';
    return 0;
  }
  std::cout << 'm';
  for (const auto& c : cols) std::cout << '\t' << c;
  std::cout << '\n';
  for (int m = 0; m <= max_m; ++m) {
    std::cout << m;
    for (const Int& v : rows[static_cast<std::size_t>(m)]) std::cout << '\t' << v;
    std::cout << '\n';
  }
  return 0;
}

int cmd_series(const Options& o) {
  const Perm w = Perm::parse(o.perm);
  const std::size_t order = static_cast<std::size_t>(std::max(o.order, 0));
  const auto coeffs = o.cyclic ? gf_omega_cyc(CyclicClass::of(w), order) : gf_omega(w, order);
  json out = json::array();
  for (const Int& c : coeffs) out.push_back(int_json(c));
  std::cout << out.dump() << '\n';
  return 0;
}

int cmd_verify(const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto checks = run_suite(o.target, Bounds{o.n, o.m, o.parallel});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool all = true;
  if (o.format == "json") {
    json out = json::array();
    for (const Check& c : checks) {
      out.push_back({{"suite", c.suite},
                     {"check", c.name},
                     {"passed", c.passed()},
                     {"cases", c.cases},
                     {"failures", c.failures},
                     {"first_failure", c.first_failure}});
      all = all && c.passed();
    }
    std::cout << out.dump() << '\n';
  } else {
    for (const Check& c : checks) {
      std::cout << c.suite << '\t' << c.name << '\t' << (c.passed() ? "pass" : "FAIL") << '\t' << c.cases;
      if (!c.passed()) std::cout << '\t' << c.failures << " failures, first: " << c.first_failure;
      std::cout << '\n';
      all = all && c.passed();
    }
  }
  std::cerr << "verify " << o.target << ": " << checks.size() << " checks in " << secs << " s\n";
  return all ? 0 : 1;
}

int cmd_table(const Options& o) {
  const bool tsv = o.format == "tsv";
  json out = json::array();
  auto emit = [&](const std::vector<std::string>& cells, json row) {
    if (tsv) {
      for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "\t" : "") << cells[i];
      std::cout << '\n';
    } else {
      out.push_back(std::move(row));
    }
  };
  if (o.target == "table1" || o.target == "mcyc") {
    const int n = o.target == "table1" ? 4 : (o.n < 0 ? 4 : o.n);
    for (Subset cls : cyclic_subset_classes(n)) {
      const QSym q = cyclic_monomial_as_qsym(n, cls);
      const std::string alpha = psi_class(cls, n).to_string();
      emit({alpha, q.to_string()}, {{"composition", alpha}, {"expansion", to_json(q)}});
    }
  } else if (o.target == "kcyc") {
    const int n = o.n < 0 ? 4 : o.n;
    for (Subset s : cyclic_peak_classes(n)) {
      const CQSym k = kcyc(s, n);
      emit({s.to_string(), k.to_string()}, {{"peak_set", subset_json(s)}, {"expansion", to_json(k)}});
    }
  } else if (o.target == "triangular") {
    const TriangularReport r = kcyc_triangular_matrix(o.n < 0 ? 4 : o.n);
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      std::vector<std::string> cells{r.rows[i].to_string()};
      json vals = json::array();
      for (const Int& v : r.matrix[i]) {
        cells.push_back(v.str());
        vals.push_back(int_json(v));
      }
      emit(cells, {{"row", subset_json(r.rows[i])}, {"col", subset_json(r.cols[i])}, {"entries", vals}});
    }
    if (!tsv) out = {{"rows", out}, {"upper_triangular", r.upper_triangular}, {"nonzero_diagonal", r.nonzero_diagonal},
                     {"rank", r.rank}};
  } else {
    throw Error("unknown table " + o.target + " (expected table1, mcyc, kcyc, triangular)");
  }
  if (!tsv) std::cout << out.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enriched toric partitions and cyclic quasi-symmetric functions"};
  app.require_subcommand(1);
  Options o;

  auto* stats = app.add_subcommand("stats", "Descent and peak statistics of a permutation");
  stats->add_option("word", o.perm, "Permutation in one-line notation")->required();

  auto* expand = app.add_subcommand("expand", "Expand an element in a basis");
  expand->add_option("kind", o.kind, "delta, delta-cyc, M, F, K, Mcyc, Fcyc or Kcyc")->required();
  expand->add_option("args", o.args, "N and a set such as 1,3");
  expand->add_option("--dag", o.dag_file, "DAG as a JSON file");
  expand->add_option("--perm", o.perm, "Permutation, read as a total order");
  expand->add_option("--basis", o.basis, "Output basis: M, F, Mcyc or Fcyc");

  auto* ext = app.add_subcommand("extensions", "Linear or toric extensions of a DAG");
  ext->add_option("mode", o.mode, "linear, toric or class")->required();
  ext->add_option("--dag", o.dag_file, "DAG as a JSON file");
  ext->add_option("--perm", o.perm, "Permutation, read as a total order");

  auto* en = app.add_subcommand("enumerate", "List enriched partitions or markings");
  en->add_option("mode", o.mode, "enriched or markings")->required();
  en->add_option("--dag", o.dag_file, "DAG as a JSON file");
  en->add_option("--perm", o.perm, "Permutation");
  en->add_option("--m", o.m, "Bound on |f|");
  en->add_flag("--toric", o.cyclic, "Enumerate enriched toric partitions");
  en->add_flag("--parallel", o.parallel, "Split the search across threads");

  auto* op = app.add_subcommand("order-poly", "Table of order polynomial values");
  op->add_option("--perm", o.perm, "Permutation");
  op->add_option("--dag", o.dag_file, "DAG as a JSON file");
  op->add_option("--m", o.m, "Largest m");

  auto* se = app.add_subcommand("series", "Coefficients of the order polynomial generating function");
  se->add_option("--perm", o.perm, "Permutation")->required();
  se->add_option("--order", o.order, "Highest power of t");
  se->add_flag("--cyclic", o.cyclic, "Use the cyclic generating function");

  auto* ve = app.add_subcommand("verify", "Run a self-check suite");
  ve->add_option("suite", o.target, "Suite name or all")->required();
  ve->add_option("--n", o.n, "Size bound");
  ve->add_option("--m", o.m, "Value bound");
  ve->add_flag("--parallel", o.parallel, "Parallel enumeration");

  auto* ta = app.add_subcommand("table", "Print a reference table");
  ta->add_option("name", o.target, "table1, mcyc, kcyc or triangular")->required();
  ta->add_option("--n", o.n, "Degree");

  for (auto* sub : {stats, expand, ext, en, op, se, ve, ta})
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*stats) return cmd_stats(o);
    if (*expand) return cmd_expand(o);
    if (*ext) return cmd_extensions(o);
    if (*en) return cmd_enumerate(o);
    if (*op) {
      if (o.perm.empty() && o.dag_file.empty()) throw Error("order-poly needs --perm or --dag");
      if (!op->get_option("--format")->count()) o.format = "tsv";
      return cmd_order_poly(o);
    }
    if (*se) return cmd_series(o);
    if (*ve) {
      if (o.target != "all" && std::find(suite_names().begin(), suite_names().end(), o.target) == suite_names().end()) {
        std::cerr << "error: unknown suite " << o.target << "; available: all";
        for (const auto& s : suite_names()) std::cerr << ", " << s;
        std::cerr << '\n';
        return 2;
      }
      if (!ve->get_option("--format")->count()) o.format = "tsv";
      return cmd_verify(o);
    }
    if (*ta) return cmd_table(o);
  } catch (const toric::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
