// Copyright 2026 The estimand-algebra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "estimand_cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "estimand/contrasts.hpp"
#include "estimand/error.hpp"
#include "estimand/estimand_class.hpp"
#include "estimand/io.hpp"
#include "estimand/limits.hpp"
#include "estimand/permutations.hpp"
#include "estimand/ratio_scale.hpp"
#include "estimand/render_eval.hpp"
#include "estimand/residual.hpp"

namespace estimand::cli {

namespace {

constexpr int kSchemaVersion = 1;

class Fnv1a {
 public:
  void update(std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash_ ^= c;
      hash_ *= 1099511628211ull;
    }
    // Field separator so ("ab", "c") and ("a", "bc") differ.
    hash_ ^= 0xff;
    hash_ *= 1099511628211ull;
  }
  std::string hex() const {
    std::ostringstream s;
    s << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << hash_;
    return s.str();
  }

 private:
  std::uint64_t hash_ = 1469598103934665603ull;
};

struct Report {
  std::string command;
  Json verdicts = Json::object();
  Json witnesses = Json::object();
  Json result = Json::object();
  std::vector<std::string> lines;
  int exit_code = kSuccess;
};

class Context {
 public:
  explicit Context(const std::vector<std::string>& args) {
    for (const auto& a : args) digest_.update(a);
  }

  Json load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    digest_.update(buffer.str());
    return parse_exact_json(buffer.str());
  }

  std::string digest() const { return digest_.hex(); }

 private:
  Fnv1a digest_;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::not_invariant: return kPropertyFails;
    case ErrorKind::domain: return kDomain;
    case ErrorKind::internal: return kInternal;
    default: return kInvalidInput;
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

SubsetMask parse_target(const std::string& text, int k) {
  std::string body = text;
  if (!body.empty() && body.front() == '[') {
    return subset_from_json(parse_exact_json(body), k);
  }
  if (body.size() == static_cast<std::size_t>(k) &&
      body.find_first_not_of("01") == std::string::npos && k > 1) {
    return SubsetMask::from_state_string(body);
  }
  std::vector<int> idx;
  std::stringstream ss(body);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      idx.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw ValidationError("target '" + text + "' must be an index list such as 1,2");
    }
  }
  return SubsetMask::from_indices(k, idx);
}

Json coeff_map(const EstimandExpression& e) { return expression_to_json(e).at("coeffs"); }

std::string label(SubsetMask y) { return "Δ" + y.to_string(); }

// ---------------------------------------------------------------------------

struct Options {
  std::string generator, perm, weights, out, scale = "difference", cls, mu, format = "unicode",
                                                  target, link = "risk-ratio", out_dir;
  int k = 0;
  int grid = 0;
  bool definitional = false;
  bool all = false;
  std::vector<std::string> names;
};

void cmd_check_invariance(Context& ctx, const Options& o, Report& r) {
  const GeneratorMatrix h = generator_from_json(ctx.load(o.generator));
  const InvarianceVerdict v =
      o.definitional ? is_invariant_definitional(h) : is_invariant_multiset_test(h);
  const std::string method = o.definitional ? "definitional" : "multiset";
  const std::string regime = h.regime() == EntryRegime::unit ? "unit" : "fractional";
  r.verdicts["invariant"] = v.invariant;
  r.result = {{"method", method}, {"checked", v.checked}, {"regime", regime},
              {"basis", h.basis() == Basis::canonical ? "canonical" : "expanded"}};
  r.lines.push_back("invariant: " + yes_no(v.invariant));
  r.lines.push_back("method: " + method);
  r.lines.push_back("permutations checked: " + std::to_string(v.checked));
  r.lines.push_back("entry regime: " + regime);
  if (!v.invariant) {
    r.witnesses["sigma"] = v.witness->to_string();
    r.lines.push_back("witness: " + v.witness->to_string());
    r.exit_code = kPropertyFails;
  }
}

void cmd_algorithm1(Context& ctx, const Options& o, Report& r) {
  const GeneratorMatrix h = generator_from_json(ctx.load(o.generator));
  const LabelPermutation sigma = LabelPermutation::parse(o.perm);
  try {
    const RowPermutation pr = algorithm1_recover_row_permutation(h, sigma);
    const ColumnPermutation pc = induce_for(h, sigma);
    const bool exact = pr.apply(h.matrix()) == apply_columns(h.matrix(), pc);
    r.verdicts["matched"] = true;
    r.verdicts["exact"] = exact;
    r.result = {{"sigma", sigma.to_string()}, {"row_image", pr.image_one_based()}};
    r.lines.push_back("sigma: " + sigma.to_string());
    r.lines.push_back("row permutation: " + pr.to_string());
    r.lines.push_back("P_r H = H P_c: " + yes_no(exact));
    if (!exact) throw InternalError("recovered row permutation is not exact");
  } catch (const NotInvariantError& e) {
    r.verdicts["matched"] = false;
    r.witnesses["unmatched_row"] = e.unmatched_row();
    r.lines.push_back("sigma: " + sigma.to_string());
    r.lines.push_back("no matching: row " + std::to_string(e.unmatched_row()) +
                      " has no partner");
    r.exit_code = kPropertyFails;
  }
}

void emit_class(const Json& doc, const Options& o, Report& r, bool json_mode) {
  const std::string text = dump_canonical(doc);
  if (!o.out.empty()) {
    write_file(o.out, text);
    r.result["written"] = o.out;
    r.lines.push_back("wrote " + o.out);
  } else if (json_mode) {
    r.result["class"] = doc;
  } else {
    r.lines.push_back(text.substr(0, text.size() - 1));
  }
}

void cmd_build_class(Context& ctx, const Options& o, Report& r, bool json_mode) {
  const WeightSpec weights =
      o.weights.empty() ? WeightSpec::point_mass(o.k) : weights_from_json(ctx.load(o.weights));
  if (weights.k() != o.k) {
    throw DimensionError("weights are for K = " + std::to_string(weights.k()) + ", --k is " +
                         std::to_string(o.k));
  }
  r.result["k"] = o.k;
  r.result["scale"] = o.scale;
  if (o.scale == "difference") {
    const EstimandClass cls = build_class(o.k, weights);
    r.result["members"] = cls.members().size();
    emit_class(class_to_json(cls), o, r, json_mode);
  } else {
    const RatioClass cls = build_ratio_class(o.k, ratio_link_from_string(o.scale), weights);
    r.result["members"] = cls.members().size();
    emit_class(class_to_json(cls), o, r, json_mode);
  }
}

void cmd_check_class(Context& ctx, const Options& o, Report& r) {
  const ClassDocument doc = class_from_json(ctx.load(o.cls));
  r.result["k"] = doc.k;
  r.result["scale"] = doc.scale;
  InvarianceVerdict v;
  if (doc.difference) {
    const EstimandClass& cls = *doc.difference;
    v = check_class_invariance(cls);
    const std::size_t rk = completeness_rank(cls);
    const bool complete = rk == (std::size_t{1} << doc.k) - 1;
    const bool cond1 = check_condition1(cls.weights());
    const bool res_free = is_residual_free(cls);
    r.result["weight_kind"] = std::string(to_string(cls.weights().kind()));
    r.result["completeness_rank"] = rk;
    r.verdicts["complete"] = complete;
    r.verdicts["residual_free"] = res_free;
    r.lines.push_back("weight kind: " + std::string(to_string(cls.weights().kind())));
    if (cls.weights().kind() == WeightKind::permutable) {
      r.verdicts["condition1"] = nullptr;
      r.lines.push_back("weight symmetry condition: not applicable (permutable weights)");
    } else {
      r.verdicts["condition1"] = cond1;
      r.lines.push_back("weight symmetry condition: " + yes_no(cond1));
    }
    r.lines.push_back("completeness rank: " + std::to_string(rk) + " of " +
                      std::to_string((std::size_t{1} << doc.k) - 1));
    r.lines.push_back("residual-free: " + yes_no(res_free));
  } else {
    v = check_ratio_class_invariance(*doc.ratio);
  }
  r.verdicts["invariant"] = v.invariant;
  r.result["checked"] = v.checked;
  r.lines.insert(r.lines.begin(), "invariant: " + yes_no(v.invariant));
  if (!v.invariant) {
    r.witnesses["sigma"] = v.witness->to_string();
    r.lines.insert(r.lines.begin() + 1, "witness: " + v.witness->to_string());
    r.exit_code = kPropertyFails;
  }
}

const EstimandClass& require_difference(const ClassDocument& doc, const char* what) {
  if (!doc.difference) throw ArgumentError(std::string(what) + " needs a difference-scale class");
  return *doc.difference;
}

void cmd_residual(Context& ctx, const Options& o, Report& r) {
  const ClassDocument doc = class_from_json(ctx.load(o.cls));
  const EstimandClass& cls = require_difference(doc, "residual");
  const ResidualReport rep = residual_coefficients(cls);
  r.verdicts["residual_free"] = rep.is_residual_free;
  r.result["coeffs"] = coeff_map(rep.coeffs);
  r.lines.push_back("residual-free: " + yes_no(rep.is_residual_free));
  for (SubsetMask z : [&] {
         std::vector<SubsetMask> all;
         const CanonicalOrdering ord = enumerate_by_cardinality(cls.k());
         for (std::size_t i = 0; i < ord.size(); ++i) all.push_back(ord.mask_of(i));
         return all;
       }()) {
    r.lines.push_back("coef" + z.to_string() + " = " + to_string(rep.coeffs.coefficient(z)));
  }
  r.lines.push_back("res = " + render_expression(rep.coeffs, RenderFormat::unicode));
  if (!o.mu.empty()) {
    const MuTable mu = mu_from_json(ctx.load(o.mu), cls.k());
    const Rational value = evaluate(rep.coeffs, mu);
    r.result["value"] = rational_to_json(value);
    r.lines.push_back("res value = " + to_string(value));
  }
}

void cmd_decompose(Context& ctx, const Options& o, Report& r, bool scale_given) {
  const ClassDocument doc = class_from_json(ctx.load(o.cls));
  const MuTable mu = mu_from_json(ctx.load(o.mu), doc.k);
  const std::string scale = scale_given ? o.scale : doc.scale;
  r.result["scale"] = scale;
  if (scale == "difference") {
    const EstimandClass& cls = require_difference(doc, "difference-scale decompose");
    Json members = Json::object();
    for (const EstimandExpression& m : cls.members()) {
      const Rational v = evaluate(m, mu);
      members[m.target()->to_string()] = rational_to_json(v);
      r.lines.push_back(label(*m.target()) + " = " + to_string(v));
    }
    const Rational sum = evaluate(inclusion_exclusion_sum(cls), mu);
    const Rational me = evaluate(maximal_effect(cls.k()), mu);
    Rational res = sum - me;
    r.result["members"] = std::move(members);
    r.result["inclusion_exclusion_sum"] = rational_to_json(sum);
    r.result["maximal_effect"] = rational_to_json(me);
    r.result["res"] = rational_to_json(res);
    r.verdicts["residual_free"] = is_residual_free(cls);
    r.lines.push_back("inclusion-exclusion sum = " + to_string(sum));
    r.lines.push_back("maximal effect = " + to_string(me));
    r.lines.push_back("res = " + to_string(res));
    return;
  }
  const RatioLink link = ratio_link_from_string(scale);
  const RatioClass cls = doc.ratio && doc.ratio->link() == link
                             ? *doc.ratio
                             : build_ratio_class(doc.k, link,
                                                 doc.difference ? doc.difference->weights()
                                                                : WeightSpec::point_mass(doc.k));
  const MultiplicativeDecomposition dec = multiplicative_decomposition(cls, mu);
  Json members = Json::object();
  for (std::size_t i = 0; i < cls.members().size(); ++i) {
    const SubsetMask y = cls.members()[i].target();
    members[y.to_string()] = rational_to_json(dec.member_values[i]);
    r.lines.push_back(label(y) + " = " + to_string(dec.member_values[i]));
  }
  r.result["members"] = std::move(members);
  r.result["product"] = rational_to_json(dec.product);
  r.result["expected"] = rational_to_json(dec.expected);
  r.verdicts["identity_holds"] = dec.identity_holds;
  r.lines.push_back("inclusion-exclusion product = " + to_string(dec.product));
  r.lines.push_back("g(f(∅))/g(f(X)) = " + to_string(dec.expected));
  r.lines.push_back("identity holds: " + yes_no(dec.identity_holds));
  if (!dec.identity_holds) throw InternalError("multiplicative decomposition identity failed");
}

void cmd_df(const Options& o, Report& r) {
  const std::int64_t df = degrees_of_freedom(o.k);
  r.result = {{"k", o.k}, {"df", df}};
  r.lines.push_back(std::to_string(df));
}

void cmd_render(Context& ctx, const Options& o, Report& r) {
  const ClassDocument doc = class_from_json(ctx.load(o.cls));
  const RenderFormat fmt = render_format_from_string(o.format);
  std::optional<SubsetMask> only;
  if (!o.target.empty()) only = parse_target(o.target, doc.k);
  Json rendered = Json::object();
  auto emit = [&](SubsetMask y, const std::string& text) {
    if (only && *only != y) return;
    rendered[y.to_string()] = text;
    if (only) {
      r.lines.push_back(text);
    } else {
      r.lines.push_back(y.to_string() + ": " + text);
    }
  };
  if (doc.difference) {
    for (const auto& m : doc.difference->members()) emit(*m.target(), render_expression(m, fmt));
  } else {
    for (const auto& m : doc.ratio->members()) emit(m.target(), render_expression(m, fmt));
  }
  r.result = {{"format", o.format}, {"rendered", std::move(rendered)}};
}

void cmd_eval(Context& ctx, const Options& o, Report& r) {
  const ClassDocument doc = class_from_json(ctx.load(o.cls));
  const MuTable mu = mu_from_json(ctx.load(o.mu), doc.k);
  const SubsetMask y = parse_target(o.target, doc.k);
  if (y.is_empty()) throw ArgumentError("--target must be a nonempty subset");
  const Rational v = doc.difference ? evaluate(doc.difference->member(y), mu)
                                    : evaluate(doc.ratio->member(y), mu);
  r.result = {{"target", subset_to_json(y)}, {"value", rational_to_json(v)}};
  r.lines.push_back(to_string(v));
}

void cmd_gen_examples(const Options& o, Report& r) {
  std::vector<std::string> names = o.names;
  if (o.all) names = example_names();
  if (names.empty()) throw ArgumentError("name a fixture or pass --all");
  if (names.size() > 1 && o.out_dir.empty()) {
    throw ArgumentError("several fixtures need --out-dir");
  }
  Json written = Json::array();
  for (const auto& name : names) {
    const std::string text = example_fixture(name);
    if (!o.out_dir.empty()) {
      std::filesystem::create_directories(o.out_dir);
      const std::string path = (std::filesystem::path(o.out_dir) / (name + ".json")).string();
      write_file(path, text);
      written.push_back(path);
      r.lines.push_back("wrote " + path);
    } else if (!o.out.empty()) {
      write_file(o.out, text);
      written.push_back(o.out);
      r.lines.push_back("wrote " + o.out);
    } else {
      r.result["fixture"] = parse_exact_json(text);
      r.lines.push_back(text.substr(0, text.size() - 1));
    }
  }
  r.result["written"] = std::move(written);
}

void cmd_uniqueness_probe(const Options& o, Report& r) {
  const UniquenessReport rep = uniqueness_probe(o.k, o.grid);
  r.verdicts["only_point_mass"] = rep.only_point_mass;
  Json tables = Json::array();
  for (const auto& entries : rep.residual_free_tables) {
    Json t = Json::array();
    for (const auto& e : entries) {
      t.push_back({{"T", subset_to_json(e.t)}, {"Y", subset_to_json(e.y)}, {"w", rational_to_json(e.w)}});
    }
    tables.push_back(std::move(t));
  }
  r.result = {{"k", rep.k},
              {"grid_denominator", rep.grid_denominator},
              {"tables_inspected", rep.tables_inspected},
              {"residual_free_count", rep.residual_free_count},
              {"residual_free_tables", std::move(tables)}};
  r.lines.push_back("tables inspected: " + std::to_string(rep.tables_inspected));
  r.lines.push_back("residual-free tables: " + std::to_string(rep.residual_free_count));
  r.lines.push_back("only point-mass: " + yes_no(rep.only_point_mass));
  if (!rep.only_point_mass) {
    r.witnesses["residual_free_tables"] = r.result["residual_free_tables"];
    r.exit_code = kPropertyFails;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and checking of permutation-invariant estimand classes",
               "estimand-algebra"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_mode = false;
  app.add_flag("--json", json_mode, "Write a machine-readable run report to stdout");

  Options o;
  auto* check_inv = app.add_subcommand("check-invariance", "Test a generator matrix for invariance");
  check_inv->add_option("--generator", o.generator, "Generator matrix JSON")->required();
  check_inv->add_flag("--definitional", o.definitional, "Use row matching instead of multisets");

  auto* alg1 = app.add_subcommand("algorithm1", "Recover the row permutation for one relabeling");
  alg1->add_option("--generator", o.generator, "Generator matrix JSON")->required();
  alg1->add_option("--perm", o.perm, "Label permutation such as 2,1")->required();

  auto* build = app.add_subcommand("build-class", "Build the estimand class for K variables");
  build->add_option("--k", o.k, "Number of action variables")->required();
  build->add_option("--weights", o.weights, "Weight specification JSON (default point-mass)");
  build->add_option("--out", o.out, "Output file (default stdout)");
  build->add_option("--scale", o.scale, "difference, risk-ratio or odds-ratio")
      ->check(CLI::IsMember({"difference", "risk-ratio", "odds-ratio"}));

  auto* ratio = app.add_subcommand("ratio", "Build a ratio-scale class (build-class --scale)");
  ratio->add_option("--k", o.k, "Number of action variables")->required();
  ratio->add_option("--link", o.link, "risk-ratio or odds-ratio")
      ->check(CLI::IsMember({"risk-ratio", "odds-ratio"}));
  ratio->add_option("--weights", o.weights, "Weight specification JSON (must be point-mass)");
  ratio->add_option("--out", o.out, "Output file (default stdout)");

  auto* check_cls = app.add_subcommand("check-class", "Check invariance and completeness of a class");
  check_cls->add_option("--class", o.cls, "Class JSON")->required();

  auto* resid = app.add_subcommand("residual", "Residual effect coefficients of a class");
  resid->add_option("--class", o.cls, "Class JSON")->required();
  resid->add_option("--mu", o.mu, "Mu table JSON");

  auto* decomp = app.add_subcommand("decompose", "Evaluate the inclusion-exclusion decomposition");
  decomp->add_option("--class", o.cls, "Class JSON")->required();
  decomp->add_option("--mu", o.mu, "Mu table JSON")->required();
  auto* scale_opt = decomp->add_option("--scale", o.scale, "difference, risk-ratio or odds-ratio")
                        ->check(CLI::IsMember({"difference", "risk-ratio", "odds-ratio"}));

  auto* df = app.add_subcommand("df", "Degrees of freedom of invariant weights");
  df->add_option("--k", o.k, "Number of action variables")->required();

  auto* render = app.add_subcommand("render", "Render class members");
  render->add_option("--class", o.cls, "Class JSON")->required();
  render->add_option("--format", o.format, "unicode, latex or markdown")
      ->check(CLI::IsMember({"unicode", "latex", "markdown"}));
  render->add_option("--target", o.target, "Only this Y, as an index list");

  auto* eval = app.add_subcommand("eval", "Evaluate one member against a mu table");
  eval->add_option("--class", o.cls, "Class JSON")->required();
  eval->add_option("--mu", o.mu, "Mu table JSON")->required();
  eval->add_option("--target", o.target, "Y as an index list such as 1,2")->required();

  auto* gen = app.add_subcommand("gen-examples", "Write golden fixtures");
  gen->add_option("names", o.names, "Fixture names")
      ->check(CLI::IsMember(example_names()));
  gen->add_flag("--all", o.all, "Every fixture");
  gen->add_option("--out", o.out, "Output file for a single fixture");
  gen->add_option("--out-dir", o.out_dir, "Directory receiving <name>.json files");

  auto* probe = app.add_subcommand("uniqueness-probe", "Grid search for residual-free weights");
  probe->add_option("--k", o.k, "Number of action variables")->required();
  probe->add_option("--grid", o.grid, "Grid denominator D")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    const int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    if (code != 0) {
      err << app.help();
      return kUsage;
    }
    return kSuccess;
  }

  if (auto cap = max_k_override()) {
    err << "warning: ESTIMAND_ALGEBRA_MAX_K=" << *cap
        << " overrides the default K caps for sweeps and classes\n";
  }

  Context ctx(args);
  Report report;
  report.command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  std::optional<std::pair<ErrorKind, std::string>> failure;
  try {
    const std::string& c = report.command;
    if (c == "check-invariance") cmd_check_invariance(ctx, o, report);
    else if (c == "algorithm1") cmd_algorithm1(ctx, o, report);
    else if (c == "build-class") cmd_build_class(ctx, o, report, json_mode);
    else if (c == "ratio") {
      o.scale = o.link;
      cmd_build_class(ctx, o, report, json_mode);
    } else if (c == "check-class") cmd_check_class(ctx, o, report);
    else if (c == "residual") cmd_residual(ctx, o, report);
    else if (c == "decompose") cmd_decompose(ctx, o, report, scale_opt->count() > 0);
    else if (c == "df") cmd_df(o, report);
    else if (c == "render") cmd_render(ctx, o, report);
    else if (c == "eval") cmd_eval(ctx, o, report);
    else if (c == "gen-examples") cmd_gen_examples(o, report);
    else if (c == "uniqueness-probe") cmd_uniqueness_probe(o, report);
  } catch (const Error& e) {
    failure.emplace(e.kind(), e.what());
    report.exit_code = exit_code_for(e.kind());
  } catch (const std::exception& e) {
    failure.emplace(ErrorKind::internal, e.what());
    report.exit_code = kInternal;
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (json_mode) {
    Json j = {{"schema_version", kSchemaVersion},
              {"command", report.command},
              {"inputs_digest", ctx.digest()},
              {"verdicts", report.verdicts},
              {"witnesses", report.witnesses},
              {"result", report.result},
              {"exit_code", report.exit_code},
              {"timing", {{"elapsed_ms", elapsed}}}};
    if (failure) {
      j["error"] = {{"kind", std::string(to_string(failure->first))}, {"message", failure->second}};
    }
    out << j.dump(2) << "\n";
  } else {
    for (const auto& line : report.lines) out << line << "\n";
  }
  if (failure) err << "error: " << failure->second << "\n";
  return report.exit_code;
}

}  // namespace estimand::cli
