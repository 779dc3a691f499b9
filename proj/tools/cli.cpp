// Copyright 2026 The bubblecalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "bubblecalc/effective.hpp"
#include "bubblecalc/gaussian.hpp"
#include "bubblecalc/montecarlo.hpp"
#include "bubblecalc/serialize.hpp"
#include "bubblecalc/tree.hpp"
#include "bubblecalc/weingarten.hpp"

namespace bubblecalc::cli {

namespace {

struct Common {
  unsigned threads = 0;
  bool csv = false;
  std::string out_file;
};

struct Check {
  std::string name;
  std::string verdict;  // PASS, FAIL or SKIP
  std::string lhs;
  std::string rhs;
};

/// What a command produced: a JSON report and optionally a CSV table.
struct Result {
  Json report;
  std::string csv;
  std::vector<Check> checks;

  bool failed() const {
    return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.verdict == "FAIL"; });
  }
};

Json checks_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"verdict", c.verdict}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("expected a comma-separated list of integers, got \"" + text + "\"");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::string join(const std::vector<int>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string poly_csv(const std::vector<std::pair<std::string, LaurentPoly>>& polys) {
  std::string s = "which,exp,coeff\n";
  for (const auto& [which, p] : polys) {
    const auto& t = p.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
      s += which + "," + std::to_string(it->first) + "," + rational_to_string(it->second) + "\n";
    }
  }
  return s;
}

// ---- expect ----

struct ExpectArgs {
  std::string file;
  int alpha = 0;
  std::optional<long> numeric_n;
  std::string dims;
  int n_max = OracleOptions{}.n_max;
};

Result cmd_expect(const ExpectArgs& a, const Common& common) {
  const Bubble b = bubble_from_json(read_json_file(a.file));
  const OracleOptions opts{a.n_max, common.threads};
  const auto res = rescale(gaussian_expectation(b, opts), b.n(), a.alpha);
  Result r;
  Json outputs = to_json(res);
  outputs["display"] = {{"raw", res.raw.to_string()}, {"scaled", res.scaled.to_string()}};
  const auto lead = leading_term(res.raw);
  outputs["dominant_contractions"] = {{"exp", lead.exponent}, {"count", rational_to_string(lead.coefficient)}};
  if (a.numeric_n) {
    const Rational x(*a.numeric_n);
    outputs["numeric"] = {{"N", *a.numeric_n},
                          {"raw", rational_to_string(res.raw.evaluate(x))},
                          {"scaled", rational_to_string(res.scaled.evaluate(x))}};
  }
  if (!a.dims.empty()) {
    std::vector<long> dims;
    for (int v : parse_int_list(a.dims)) dims.push_back(v);
    outputs["per_color_dimensions"] = {{"dims", dims}, {"value", per_color_dimensions(b, dims, opts).get_str()}};
  }
  r.report = {{"command", "expect"},
              {"inputs", {{"file", a.file}, {"alpha", a.alpha}, {"d", b.d()}, {"n", b.n()}}},
              {"outputs", outputs}};
  r.csv = poly_csv({{"raw", res.raw}, {"scaled", res.scaled}});
  return r;
}

// ---- effective ----

struct EffectiveArgs {
  std::string file;
  std::string split = "2,4";
  bool diagnostics = false;
  int n_max = OracleOptions{}.n_max;
};

Result cmd_effective(const EffectiveArgs& a, const Common& common) {
  const Bubble b = bubble_from_json(read_json_file(a.file));
  const ColorSplit split = ColorSplit::parse(b.d(), a.split);
  const ChainDecomposition chains = require_chains(b, split);
  const auto expansion = effective_observable(chains, split, {WeingartenOptions{}, common.threads});
  const auto reconstructed = laguerre_reconstruct(expansion, {WishartOptions{}.max_total, common.threads});
  Result r;
  Json outputs = {{"chain_lengths", chains.chain_lengths},
                  {"expansion", to_json(expansion)},
                  {"display", expansion.to_string()},
                  {"reconstruct", to_json(reconstructed)}};
  Check check{"laguerre reconstruction equals Wick oracle", "SKIP", reconstructed.to_string(), ""};
  if (b.n() <= a.n_max) {
    const auto oracle = gaussian_expectation(b, {a.n_max, common.threads});
    outputs["oracle"] = to_json(oracle);
    check.rhs = oracle.to_string();
    check.verdict = oracle == reconstructed ? "PASS" : "FAIL";
  } else {
    check.rhs = "oracle not run: n = " + std::to_string(b.n()) + " exceeds n_max = " + std::to_string(a.n_max);
  }
  r.checks.push_back(check);
  if (a.diagnostics) {
    const auto diag = scaling_diagnostics(chains, split);
    int best = diag.front().exponent;
    for (const auto& d : diag) best = std::max(best, d.exponent);
    Json maximal = Json::array();
    for (const auto& d : diag) {
      if (d.exponent == best) maximal.push_back({{"sigma", d.sigma.one_based()}, {"tau", d.tau.one_based()}});
    }
    outputs["diagnostics"] = {{"max_exponent", best}, {"maximal_pairs", maximal}};
    r.csv = diagnostics_csv(diag, split);
  } else {
    r.csv = "powers,coeff\n";
    for (const auto& [powers, c] : expansion.terms) r.csv += join(powers, " ") + "," + c.to_string() + "\n";
  }
  r.report = {{"command", "effective"},
              {"inputs", {{"file", a.file}, {"split", split.to_string()}, {"d", b.d()}, {"n", b.n()}}},
              {"outputs", outputs}};
  return r;
}

// ---- tree ----

struct TreeArgs {
  std::string file;
  std::vector<int> enumerate;
  int alpha = 2;
};

Result cmd_tree(const TreeArgs& a, const Common& common) {
  std::vector<CornerLabeledTree> trees;
  Json inputs;
  if (!a.enumerate.empty()) {
    if (a.enumerate.size() != 2) throw std::invalid_argument("--enumerate takes V K");
    trees = enumerate_trees(a.enumerate[0], a.enumerate[1]);
    inputs = {{"enumerate", {{"max_vertices", a.enumerate[0]}, {"max_total_label", a.enumerate[1]}}}};
  } else if (!a.file.empty()) {
    trees.push_back(tree_from_json(read_json_file(a.file)));
    inputs = {{"file", a.file}};
  } else {
    throw std::invalid_argument("tree: give a tree file or --enumerate V K");
  }
  inputs["alpha"] = a.alpha;
  Result r;
  r.csv = "tree,vertices,n,totals,predicted,oracle_exp,oracle_coeff,verdict\n";
  Json rows = Json::array();
  for (const auto& t : trees) {
    const Bubble b = tree_to_bubble(t);
    const BigInt predicted = catalan_product(t);
    const auto lead = leading_term(rescale(gaussian_expectation(b, {OracleOptions{}.n_max, common.threads}), b.n(), a.alpha).scaled);
    const bool ok = lead.coefficient == Rational(predicted);
    const std::string verdict = ok ? "PASS" : "FAIL";
    r.checks.push_back({"Catalan product " + t.to_string(), verdict, predicted.get_str(), rational_to_string(lead.coefficient)});
    rows.push_back({{"tree", t.to_string()},
                    {"vertex_totals", t.vertex_totals()},
                    {"n", b.n()},
                    {"predicted", predicted.get_str()},
                    {"oracle_leading", to_json(lead)},
                    {"verdict", verdict}});
    r.csv += t.to_string() + "," + std::to_string(t.vertex_count()) + "," + std::to_string(b.n()) + "," +
             join(t.vertex_totals(), " ") + "," + predicted.get_str() + "," + std::to_string(lead.exponent) + "," +
             rational_to_string(lead.coefficient) + "," + verdict + "\n";
  }
  r.report = {{"command", "tree"}, {"inputs", inputs}, {"outputs", {{"trees", rows}}}};
  return r;
}

// ---- weingarten ----

struct WeingartenArgs {
  int n = 2;
  std::string dim = "N^2";
  int n_max = WeingartenOptions{}.n_max;
};

Result cmd_weingarten(const WeingartenArgs& a, const Common&) {
  const Dimension dim = Dimension::parse(a.dim);
  const auto table = weingarten_table(a.n, dim, {a.n_max});
  Result r;
  Json display = Json::array();
  r.csv = "partition,value\n";
  for (std::size_t i = 0; i < table.values.size(); ++i) {
    const auto& cls = table.classes.classes[i];
    display.push_back({{"partition", cls.to_string()}, {"value", table.values[i].to_string()}});
    r.csv += "\"" + cls.to_string() + "\",\"" + table.values[i].to_string() + "\"\n";
  }
  r.report = {{"command", "weingarten"},
              {"inputs", {{"n", a.n}, {"dim", dim.to_string()}}},
              {"outputs", {{"table", to_json(table)}, {"display", display}}}};
  return r;
}

// ---- wishart ----

struct WishartArgs {
  std::string lengths;
  std::string rows = "N";
  std::string cols = "N";
  int max_total = WishartOptions{}.max_total;
};

Result cmd_wishart(const WishartArgs& a, const Common& common) {
  const auto lengths = parse_int_list(a.lengths);
  const Dimension rows = Dimension::parse(a.rows);
  const Dimension cols = Dimension::parse(a.cols);
  const auto m = wishart_moment_exact(lengths, rows, cols, {a.max_total, common.threads});
  Result r;
  r.report = {{"command", "wishart"},
              {"inputs", {{"lengths", lengths}, {"rows", rows.to_string()}, {"cols", cols.to_string()}}},
              {"outputs", {{"moment", to_json(m)}, {"display", m.to_string()}, {"leading", to_json(leading_term(m))}}}};
  r.csv = poly_csv({{"moment", m}});
  return r;
}

// ---- mc ----

struct McArgs {
  std::string file;
  long N = 2;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  double variance = 1.0;
  std::string order = "greedy";
  int n_max = OracleOptions{}.n_max;
};

Result cmd_mc(const McArgs& a, const Common& common) {
  const Bubble b = bubble_from_json(read_json_file(a.file));
  SampleSpec spec{static_cast<int>(a.N), b.d(), a.variance, a.samples, a.seed};
  EstimateOptions opts{common.threads, a.order == "linear" ? ContractionOrder::linear : ContractionOrder::greedy};
  const Estimate est = estimate_expectation(b, spec, opts);
  Result r;
  Json outputs = to_json(est);
  outputs["imag_mean"] = est.imag_mean;
  if (b.n() <= a.n_max) {
    const BigInt exact = per_color_dimensions(b, std::vector<long>(static_cast<std::size_t>(b.d()), a.N),
                                              {a.n_max, common.threads});
    const double value = exact.get_d() * std::pow(a.variance, b.n());
    const double z = est.std_error > 0 ? std::abs(est.mean - value) / est.std_error : 0.0;
    outputs["oracle"] = {{"value", value}, {"z", z}};
    std::ostringstream lhs;
    lhs.precision(17);
    lhs << est.mean << " +- " << est.std_error;
    std::ostringstream rhs;
    rhs.precision(17);
    rhs << value;
    r.checks.push_back({"Monte Carlo within 5 standard errors of the Wick oracle", z <= 5 ? "PASS" : "FAIL", lhs.str(),
                        rhs.str()});
  }
  r.report = {{"command", "mc"},
              {"inputs",
               {{"file", a.file}, {"N", a.N}, {"variance", a.variance}, {"samples", a.samples}, {"seed", a.seed},
                {"order", a.order}}},
              {"outputs", outputs}};
  std::ostringstream csv;
  csv.precision(17);
  csv << "mean,stderr,samples,seed\n" << est.mean << ',' << est.std_error << ',' << est.samples << ',' << est.seed << '\n';
  r.csv = csv.str();
  return r;
}

// ---- bubble ----

struct BubbleArgs {
  int necklace_k = 0;
  std::string split = "2,4";
  int d = 4;
  std::string tree_file;
};

Result cmd_bubble(const BubbleArgs& a, const Common&) {
  Bubble b;
  if (!a.tree_file.empty()) {
    b = tree_to_bubble(tree_from_json(read_json_file(a.tree_file)));
  } else if (a.necklace_k > 0) {
    b = necklace(ColorSplit::parse(a.d, a.split), a.necklace_k);
  } else {
    throw std::invalid_argument("bubble: give --necklace K or --tree FILE");
  }
  Result r;
  r.report = to_json(b);
  r.csv = "color,images\n";
  for (int c = 1; c <= b.d(); ++c) r.csv += std::to_string(c) + "," + join(b.color(c).one_based(), " ") + "\n";
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and Monte Carlo expectations of invariant tensor observables", "bubblecalc"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "Worker threads (0: all cores); results do not depend on it");
  app.add_flag("--csv", common.csv, "Emit a CSV table instead of JSON");
  app.add_option("--out", common.out_file, "Write the primary output to FILE");

  ExpectArgs ex;
  auto* expect = app.add_subcommand("expect", "Exact Gaussian expectation by Wick enumeration");
  expect->add_option("file", ex.file, "Bubble file")->required();
  expect->add_option("--alpha", ex.alpha, "Covariance N^-alpha");
  expect->add_option("--numeric-N", ex.numeric_n, "Also evaluate at this N");
  expect->add_option("--dims", ex.dims, "Per-color dimensions d1,...,dd");
  expect->add_option("--n-max", ex.n_max, "Oracle bound");

  EffectiveArgs ef;
  auto* effective = app.add_subcommand("effective", "Effective observable in power sums, cross-checked");
  effective->add_option("file", ef.file, "Bubble file")->required();
  effective->add_option("--split", ef.split, "Column colors, e.g. 2,4");
  effective->add_flag("--diagnostics", ef.diagnostics, "Per-(sigma,tau) N-power counting");
  effective->add_option("--n-max", ef.n_max, "Oracle bound");

  TreeArgs tr;
  auto* tree = app.add_subcommand("tree", "Catalan-product law for corner-labeled trees");
  tree->add_option("file", tr.file, "Tree file");
  tree->add_option("--enumerate", tr.enumerate, "All trees with at most V vertices and total label K")->expected(2);
  tree->add_option("--alpha", tr.alpha, "Covariance N^-alpha");

  WeingartenArgs wg;
  auto* weingarten = app.add_subcommand("weingarten", "Weingarten function table");
  weingarten->add_option("n", wg.n, "Symmetric group order")->required();
  weingarten->add_option("--dim", wg.dim, "N, N^p or an integer");
  weingarten->add_option("--n-max", wg.n_max, "Bound on n");

  WishartArgs wi;
  auto* wishart = app.add_subcommand("wishart", "Exact complex Wishart trace moment");
  wishart->add_option("lengths", wi.lengths, "Comma-separated trace powers, e.g. 2 or 1,1")->required();
  wishart->add_option("--rows", wi.rows, "Row dimension");
  wishart->add_option("--cols", wi.cols, "Column dimension");
  wishart->add_option("--max-total", wi.max_total, "Bound on the total degree");

  McArgs mc;
  auto* mcs = app.add_subcommand("mc", "Monte Carlo estimate");
  mcs->add_option("file", mc.file, "Bubble file")->required();
  mcs->add_option("-N,--numeric-N", mc.N, "Per-color dimension")->check(CLI::PositiveNumber);
  mcs->add_option("--samples", mc.samples, "Sample count");
  mcs->add_option("--seed", mc.seed, "Random seed");
  mcs->add_option("--variance", mc.variance, "Per-entry complex variance");
  mcs->add_option("--order", mc.order, "Contraction order")->check(CLI::IsMember({"greedy", "linear"}));
  mcs->add_option("--n-max", mc.n_max, "Oracle bound for the concordance check");

  BubbleArgs bu;
  auto* bubble = app.add_subcommand("bubble", "Write a bubble file for a necklace or a tree");
  bubble->add_option("--necklace", bu.necklace_k, "Necklace length k");
  bubble->add_option("--split", bu.split, "Column colors");
  bubble->add_option("--d", bu.d, "Number of colors");
  bubble->add_option("--tree", bu.tree_file, "Tree file");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  const auto start = std::chrono::steady_clock::now();
  Result result;
  try {
    if (*expect) result = cmd_expect(ex, common);
    else if (*effective) result = cmd_effective(ef, common);
    else if (*tree) result = cmd_tree(tr, common);
    else if (*weingarten) result = cmd_weingarten(wg, common);
    else if (*wishart) result = cmd_wishart(wi, common);
    else if (*mcs) result = cmd_mc(mc, common);
    else result = cmd_bubble(bu, common);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  if (!result.checks.empty()) result.report["checks"] = checks_json(result.checks);
  const std::string text = common.csv ? result.csv : result.report.dump(2) + "\n";
  if (common.out_file.empty()) {
    out << text;
  } else {
    std::ofstream f(common.out_file);
    if (!f) {
      err << "error: cannot write " << common.out_file << "\n";
      return kError;
    }
    f << text;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << "wall time: " << secs << " s\n";
  for (const auto& c : result.checks) {
    if (c.verdict == "FAIL") err << "FAIL: " << c.name << ": " << c.lhs << " vs " << c.rhs << "\n";
  }
  return result.failed() ? kCheckFailed : kOk;
}

}  // namespace bubblecalc::cli
