// Command-line front end: exact tables, series, verification suites, and
// asymptotic reports for connected bipartite graph counts by Betti number.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bicensus/basic_graphs.hpp"
#include "bicensus/census.hpp"
#include "bicensus/diag_asympt.hpp"
#include "bicensus/gf.hpp"
#include "bicensus/oracle.hpp"

using namespace bicensus;

namespace {

int resolve_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("BICENSUS_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

// Writes to --out if given, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct Row {
  std::vector<std::pair<std::string, std::string>> cells;  // key -> value
  std::vector<int> quoted;  // indices whose JSON value is a string
};

void emit_rows(std::ostream& os, const std::string& format, const std::vector<Row>& rows) {
  if (rows.empty()) return;
  if (format == "json") {
    os << "[";
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i) os << ',';
      os << "{";
      for (size_t j = 0; j < rows[i].cells.size(); ++j) {
        if (j) os << ',';
        bool q = false;
        for (int qi : rows[i].quoted) q = q || qi == static_cast<int>(j);
        os << '"' << rows[i].cells[j].first << "\":";
        if (q) os << '"' << rows[i].cells[j].second << '"';
        else os << rows[i].cells[j].second;
      }
      os << "}";
    }
    os << "]\n";
    return;
  }
  char sep = (format == "csv") ? ',' : '\t';
  for (size_t j = 0; j < rows[0].cells.size(); ++j)
    os << (j ? std::string(1, sep) : "") << rows[0].cells[j].first;
  os << '\n';
  for (const Row& row : rows) {
    for (size_t j = 0; j < row.cells.size(); ++j)
      os << (j ? std::string(1, sep) : "") << row.cells[j].second;
    os << '\n';
  }
}

int run_census(int k, int max_n, const std::string& format, const std::string& out) {
  CountTable ct(max_n, k);
  Sink sink(out);
  std::vector<Row> rows;
  for (int r = 0; r <= max_n; ++r)
    for (int s = 0; s + r <= max_n; ++s) {
      Row row;
      row.cells = {{"r", std::to_string(r)},
                   {"s", std::to_string(s)},
                   {"k", std::to_string(k)},
                   {"count", ct.at(r, s, k).get_str()}};
      row.quoted = {3};
      rows.push_back(row);
    }
  emit_rows(sink.os(), format, rows);
  return 0;
}

int run_diagonal(int k, int max_n, const std::string& format, const std::string& out) {
  CountTable ct(max_n, k);
  Sink sink(out);
  std::vector<Row> rows;
  for (int n = 0; n <= max_n; ++n) {
    Row row;
    row.cells = {{"n", std::to_string(n)},
                 {"k", std::to_string(k)},
                 {"count", ct.diagonal_count(n, k).get_str()}};
    row.quoted = {2};
    rows.push_back(row);
  }
  emit_rows(sink.os(), format, rows);
  return 0;
}

int run_series(int k, int order, const std::string& route, const std::string& format,
               const std::string& out) {
  BiSeries f;
  if (route == "census") {
    CountTable ct(2 * order, k);
    f = ct.to_biseries(k, order);
  } else if (route == "closed") {
    GFWorkspace ws = build_workspace(order);
    f = (k == 0) ? ws.T : fk_closed(ws, k);
  } else if (route == "pde") {
    if (k < 2) {
      std::cerr << "series: route pde requires --k >= 2\n";
      return 2;
    }
    GFWorkspace ws = build_workspace(order);
    std::vector<BiSeries> known{ws.T, f1_closed(ws)};
    for (int j = 2; j <= k; ++j) known.push_back(solve_pde(ws, known));
    f = known[k];
  } else {
    std::cerr << "series: unknown route " << route << "\n";
    return 2;
  }
  Sink sink(out);
  std::vector<Row> rows;
  for (int r = 0; r <= order; ++r)
    for (int s = 0; s <= order; ++s) {
      if (f.coeff(r, s) == 0) continue;
      Row row;
      row.cells = {{"r", std::to_string(r)},
                   {"s", std::to_string(s)},
                   {"coeff", f.coeff(r, s).get_str()},
                   {"count", f.count(r, s).get_str()}};
      row.quoted = {2, 3};
      rows.push_back(row);
    }
  emit_rows(sink.os(), format, rows);
  return 0;
}

int run_oracle(int r, int s, int q, int threads, const std::string& out) {
  Sink sink(out);
  sink.os() << count_bipartite(r, s, q, threads).get_str() << "\n";
  return 0;
}

int run_asympt(int k, std::vector<int> ns, const std::string& format, const std::string& out) {
  if (ns.empty()) {
    if (k == 1) ns = {100, 400, 1000, 2000};
    else ns = {50, 100, 200, 400};
  }
  std::vector<DiagReport> reps = asymptotic_report(k, ns);
  Sink sink(out);
  std::vector<Row> rows;
  for (const DiagReport& rep : reps) {
    std::ostringstream ratio, resid;
    ratio.precision(8);
    ratio << rep.ratio;
    resid.precision(8);
    resid << rep.residual_ratio;
    Row row;
    row.cells = {{"n", std::to_string(rep.n)},
                 {"k", std::to_string(rep.k)},
                 {"exact", rep.exact_decimal},
                 {"ratio_to_main_term", ratio.str()}};
    row.quoted = {2, 3};
    if (k == 2) {
      row.cells.push_back({"residual_ratio", resid.str()});
      row.quoted.push_back(4);
    }
    rows.push_back(row);
  }
  emit_rows(sink.os(), format, rows);
  return 0;
}

bool verify_oracle(std::ostream& os, int threads) {
  CountTable ct(8, 9);
  bool ok = true;
  for (int r = 0; r <= 8; ++r)
    for (int s = 0; s + r <= 8; ++s) {
      if (r + s == 0 || static_cast<long>(r) * s > 30) continue;
      for (int q = 0; q <= r * s; ++q) {
        int k = q - r - s + 1;
        Int expect = (k < 0 || k > 9) ? Int(0) : ct.at(r, s, k);
        if (count_bipartite(r, s, q, threads) != expect) {
          os << "FAIL oracle r=" << r << " s=" << s << " q=" << q << "\n";
          ok = false;
        }
      }
    }
  return ok;
}

bool verify_closed(std::ostream& os, int order) {
  CountTable ct(2 * order, 4);
  GFWorkspace ws = build_workspace(order);
  bool ok = true;
  for (int k = 1; k <= 4; ++k) {
    if (!(fk_closed(ws, k) == ct.to_biseries(k, order))) {
      os << "FAIL closed-form series k=" << k << "\n";
      ok = false;
    }
  }
  return ok;
}

bool verify_pde(std::ostream& os, int order) {
  CountTable ct(2 * order, 4);
  GFWorkspace ws = build_workspace(order);
  std::vector<BiSeries> known{ws.T, f1_closed(ws)};
  bool ok = true;
  for (int k = 2; k <= 4; ++k) {
    known.push_back(solve_pde(ws, known));
    if (!(known[k] == ct.to_biseries(k, order))) {
      os << "FAIL pde series k=" << k << "\n";
      ok = false;
    }
  }
  return ok;
}

bool verify_identities(std::ostream& os, int order) {
  GFWorkspace ws = build_workspace(order);
  bool ok = true;
  for (const IdentityResult& res : identity_suite(ws)) {
    if (!res.pass) {
      os << "FAIL identity " << res.name << "\n";
      ok = false;
    }
  }
  return ok;
}

bool verify_sec4(std::ostream& os) {
  bool ok = true;
  for (const CheckLine& c : w_diag_check(30))
    if (!c.pass) { os << "FAIL " << c.detail << "\n"; ok = false; }
  for (const CheckLine& c : conv_power_check(20, 10))
    if (!c.pass) { os << "FAIL " << c.detail << "\n"; ok = false; }
  CountTable ct(12, 1);
  for (int n = 4; n <= 12; ++n)
    if (nbi1_formula(n) != ct.diagonal_count(n, 1)) {
      os << "FAIL unicycle formula vs census n=" << n << "\n";
      ok = false;
    }
  for (int n = 4; n <= 30; ++n)
    if (nbi1_formula(n) != nbi1_convolution(n)) {
      os << "FAIL unicycle formula vs convolution n=" << n << "\n";
      ok = false;
    }
  auto forms = f2_diagonal_forms(30);
  if (!(forms.composed == forms.single_rational && forms.composed == forms.partial_fraction)) {
    os << "FAIL bicycle diagonal forms\n";
    ok = false;
  }
  return ok;
}

bool verify_bg2(std::ostream& os, int order) {
  CountTable ct(2 * order, 2);
  GFWorkspace ws = build_workspace(order);
  BiSeries sum(order, order);
  for (const BasicGraphSpec& spec : bg2_catalog()) sum = add(sum, j_series(spec, ws));
  if (!(sum == ct.to_biseries(2, order))) {
    os << "FAIL basic-graph sum vs F_2\n";
    return false;
  }
  return true;
}

bool verify_sec6(std::ostream& os) {
  bool ok = true;
  for (const ClassCheck& c : section6_checks_k2()) {
    if (!c.b_sum_zero) { os << "FAIL " << c.cls << " b-sum\n"; ok = false; }
    if (!c.a_sum_matches) { os << "FAIL " << c.cls << " a-sum\n"; ok = false; }
  }
  return ok;
}

int run_verify(const std::string& suite, int order, int threads, const std::string& out) {
  Sink sink(out);
  std::ostream& os = sink.os();
  bool ok = true;
  auto want = [&](const char* name) { return suite == "all" || suite == name; };
  if (want("oracle")) { bool r = verify_oracle(os, threads); os << (r ? "ok" : "FAIL") << " oracle\n"; ok = ok && r; }
  if (want("closed")) { bool r = verify_closed(os, order); os << (r ? "ok" : "FAIL") << " closed\n"; ok = ok && r; }
  if (want("pde")) { bool r = verify_pde(os, order); os << (r ? "ok" : "FAIL") << " pde\n"; ok = ok && r; }
  if (want("identities")) { bool r = verify_identities(os, order); os << (r ? "ok" : "FAIL") << " identities\n"; ok = ok && r; }
  if (want("sec4")) { bool r = verify_sec4(os); os << (r ? "ok" : "FAIL") << " sec4\n"; ok = ok && r; }
  if (want("bg2")) { bool r = verify_bg2(os, order); os << (r ? "ok" : "FAIL") << " bg2\n"; ok = ok && r; }
  if (want("sec6")) { bool r = verify_sec6(os); os << (r ? "ok" : "FAIL") << " sec6\n"; ok = ok && r; }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact census of connected bipartite graphs by Betti number"};
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads, "worker thread cap (default: BICENSUS_THREADS or 1)");

  std::string format = "text", out;
  int k = 1, max_n = 8, order = 10, r = 2, s = 2, q = 4;
  std::string route = "census", suite = "all";
  std::vector<int> ns;

  CLI::App* census = app.add_subcommand("census", "table of counts N(r,s,k)");
  census->add_option("--k", k, "Betti number")->check(CLI::NonNegativeNumber);
  census->add_option("--max-n", max_n, "max r+s")->check(CLI::PositiveNumber);
  census->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "text"}));
  census->add_option("--out", out, "output file (default stdout)");

  CLI::App* diag = app.add_subcommand("diagonal", "diagonal counts over n vertices");
  diag->add_option("--k", k)->check(CLI::NonNegativeNumber);
  diag->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
  diag->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "text"}));
  diag->add_option("--out", out);

  CLI::App* series = app.add_subcommand("series", "F_k coefficients by one route");
  series->add_option("--k", k)->check(CLI::NonNegativeNumber);
  series->add_option("--order", order, "truncation order")->check(CLI::PositiveNumber);
  series->add_option("--route", route)->check(CLI::IsMember({"census", "closed", "pde"}));
  series->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "text"}));
  series->add_option("--out", out);

  CLI::App* verify = app.add_subcommand("verify", "cross-validation suites");
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "oracle", "closed", "pde", "identities", "sec4", "bg2", "sec6"}));
  verify->add_option("--order", order)->check(CLI::PositiveNumber);
  verify->add_option("--out", out);

  CLI::App* asympt = app.add_subcommand("asympt", "asymptotic-law report");
  asympt->add_option("--k", k)->check(CLI::Range(1, 2));
  asympt->add_option("--n", ns, "vertex counts (repeatable)");
  asympt->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "text"}));
  asympt->add_option("--out", out);

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force connected subgraph count");
  oracle->add_option("--r", r)->check(CLI::NonNegativeNumber);
  oracle->add_option("--s", s)->check(CLI::NonNegativeNumber);
  oracle->add_option("--q", q)->check(CLI::NonNegativeNumber);
  oracle->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    int nthreads = resolve_threads(threads);
    if (census->parsed()) return run_census(k, max_n, format, out);
    if (diag->parsed()) return run_diagonal(k, max_n, format, out);
    if (series->parsed()) return run_series(k, order, route, format, out);
    if (verify->parsed()) return run_verify(suite, order, nthreads, out);
    if (asympt->parsed()) return run_asympt(k, ns, format, out);
    if (oracle->parsed()) return run_oracle(r, s, q, nthreads, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
