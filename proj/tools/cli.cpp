#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "jsobolev/analysis.hpp"
#include "jsobolev/kernel_bounds.hpp"
#include "jsobolev/quadrature.hpp"
#include "jsobolev/sobolev.hpp"

namespace jsobolev::cli {
namespace {

using nlohmann::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kCommands = {"eval",  "coeffs",       "partial-sum", "norms", "sweep-p",
                                            "asym",  "kernel-check", "hardy-check", "window"};

// Flag names double as config-file keys.
const std::vector<std::pair<std::string, std::string>> kFlags = {
    {"alpha", "Jacobi parameter alpha > -1 (default 0)"},
    {"beta", "Jacobi parameter beta > -1 (default 0)"},
    {"m", "Sobolev order m >= 1 (default 1)"},
    {"p", "Exponent p (default 2)"},
    {"p-grid", "Exponent grid: lo:hi:step or a comma list"},
    {"degrees", "Degree ladder: list, a:b:*2, a:b[:step] or 16,32,...,1024"},
    {"n", "Degree / truncation"},
    {"f", "Test function: q<j>, poly:<c0,c1,...>, expx, onemx:<gamma>, sin:<k>"},
    {"resolution", "Quadrature resolution (kernel-check: grid size, hardy-check: r points)"},
    {"r", "Abel parameter in [0.9, 0.995] (default 0.99)"},
    {"out", "Output file; stdout then carries a one-line summary"},
    {"format", "csv (default) or json"},
    {"x", "Evaluation points for eval (list or lo:hi:step)"},
    {"ell", "Derivative order (eval, asym)"},
    {"k", "Derivative order k (asym)"},
    {"metric", "norm-product (default), sobolev or jacobi"},
    {"variant", "Hardy variant: standard, adjoint or both (default)"},
};

const char* kSchemas =
    "CSV schemas:\n"
    "  eval          j,ell,x,value\n"
    "  coeffs        j,coeff\n"
    "  partial-sum   n,error\n"
    "  norms         n,value\n"
    "  sweep-p       p,n,value,slope_window_flag   (flag: slope=<s>;window=<in|out>)\n"
    "  asym          j,value\n"
    "  kernel-check  region,sup,count\n"
    "  hardy-check   variant,value,finite,argmax\n"
    "  window        p_lower,p_upper\n"
    "Config file: JSON object whose keys are flag names; flags override it.\n"
    "JSOBOLEV_RESOLUTION sets the default resolution.\n";

[[noreturn]] void usage_error(const std::string& what) { throw DomainError(what); }

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double to_double(const std::string& name, const std::string& text) {
  double value = 0.0;
  const std::string s = trim(text);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(value)) {
    usage_error("invalid number for " + name + ": '" + text + "'");
  }
  return value;
}

int to_int(const std::string& name, const std::string& text) {
  int value = 0;
  const std::string s = trim(text);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    usage_error("invalid integer for " + name + ": '" + text + "'");
  }
  return value;
}

double round12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ---- tables ---------------------------------------------------------------

using Cell = std::variant<int, double, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

std::string to_csv(const Table& t) {
  std::string s;
  for (std::size_t i = 0; i < t.header.size(); ++i) s += (i ? "," : "") + t.header[i];
  s += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) s += ',';
      if (const int* iv = std::get_if<int>(&row[i])) {
        s += std::to_string(*iv);
      } else if (const double* dv = std::get_if<double>(&row[i])) {
        s += fmt17(*dv);
      } else {
        s += std::get<std::string>(row[i]);
      }
    }
    s += '\n';
  }
  return s;
}

json rows_json(const Table& t) {
  json values = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit([&](const auto& v) { obj[t.header[i]] = v; }, row[i]);
    }
    values.push_back(std::move(obj));
  }
  return values;
}

// ---- configuration ----------------------------------------------------------

struct Settings {
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const { return values.count(key) != 0; }
  std::string str(const std::string& key, const std::string& fallback) const {
    const auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
  }
  double real(const std::string& key, double fallback) const {
    return has(key) ? to_double("--" + key, values.at(key)) : fallback;
  }
  int integer(const std::string& key, int fallback) const {
    return has(key) ? to_int("--" + key, values.at(key)) : fallback;
  }
};

void merge_config_file(const std::string& path, Settings& settings) {
  std::ifstream in(path);
  if (!in) usage_error("cannot read config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    usage_error("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) usage_error("config file must hold a JSON object");
  for (const auto& [key, value] : doc.items()) {
    const bool known = std::any_of(kFlags.begin(), kFlags.end(), [&](const auto& f) { return f.first == key; });
    if (!known) usage_error("unknown config key '" + key + "'");
    if (settings.has(key)) continue;  // flags win
    if (value.is_string()) {
      settings.values[key] = value.get<std::string>();
    } else if (value.is_number()) {
      settings.values[key] = value.dump();
    } else {
      usage_error("config key '" + key + "' must be a string or a number");
    }
  }
}

// ---- shared helpers ---------------------------------------------------------

struct Common {
  double alpha;
  double beta;
  int m;
  int resolution;  // 0 = library default
};

Common common(const Settings& s) {
  Common c{s.real("alpha", 0.0), s.real("beta", 0.0), s.integer("m", 1), 0};
  SobolevParams(c.alpha, c.beta, c.m);  // validates
  if (s.has("resolution")) {
    c.resolution = s.integer("resolution", 0);
  } else if (const char* env = std::getenv("JSOBOLEV_RESOLUTION"); env != nullptr && *env != '\0') {
    c.resolution = to_int("JSOBOLEV_RESOLUTION", env);
  }
  if (c.resolution < 0) usage_error("--resolution must be positive");
  return c;
}

json params_json(const Common& c) { return {{"alpha", c.alpha}, {"beta", c.beta}, {"m", c.m}}; }

FunctionBundle make_function(const std::string& text, const SobolevParams& sp) {
  if (text.empty()) usage_error("--f is required");
  if (text == "expx") return exp_bundle(std::max(8, sp.m()));
  if (text.size() > 1 && text[0] == 'q' && std::isdigit(static_cast<unsigned char>(text[1]))) {
    const int j = to_int("--f", text.substr(1));
    return q_bundle(sp, j);
  }
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? std::string() : text.substr(colon + 1);
  if (kind == "poly") {
    std::vector<double> coeffs;
    for (const auto& c : split(arg, ',')) coeffs.push_back(to_double("--f", c));
    if (coeffs.empty()) usage_error("poly: needs coefficients");
    return polynomial_bundle(coeffs);
  }
  if (kind == "onemx") return one_minus_x_power_bundle(to_double("--f", arg), std::max(8, sp.m()));
  if (kind == "sin") return sine_bundle(to_double("--f", arg), std::max(8, sp.m()));
  usage_error("unknown test function '" + text + "'");
}

std::optional<GrowthFit> try_fit(const std::vector<int>& degrees, const std::vector<double>& values) {
  try {
    return fit_growth(degrees, values);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

json fit_json(const std::optional<GrowthFit>& fit) {
  if (!fit) return nullptr;
  return {{"slope", fit->exponent}, {"r2", fit->r2}};
}

std::string fit_text(const std::optional<GrowthFit>& fit) {
  return fit ? " slope=" + shortest(fit->exponent) : std::string();
}

enum class Metric { kNormProduct, kSobolev, kJacobi };

Metric parse_metric(const std::string& text) {
  if (text == "norm-product") return Metric::kNormProduct;
  if (text == "sobolev") return Metric::kSobolev;
  if (text == "jacobi") return Metric::kJacobi;
  usage_error("unknown --metric '" + text + "' (norm-product, sobolev, jacobi)");
}

double metric_value(Metric metric, const SobolevParams& sp, int n, double p) {
  switch (metric) {
    case Metric::kNormProduct: return norm_product(sp, n, p);
    case Metric::kSobolev: return q_sobolev_norm(sp, n, p);
    case Metric::kJacobi: return jacobi_lp_norm(sp.jacobi(), n, p);
  }
  return 0.0;
}

void validate_metric_p(Metric metric, double p) {
  if (metric == Metric::kNormProduct && !(p > 1.0)) usage_error("norm-product needs p > 1");
  if (!(p >= 1.0)) usage_error("p must be >= 1");
}

// ---- commands -------------------------------------------------------------

struct Result {
  Table table;
  json summary;             // JSON document for --format json
  std::string line;         // one-line stdout summary
  bool always_print_line = false;
};

Result cmd_eval(const Settings& s) {
  const Common c = common(s);
  const SobolevParams sp(c.alpha, c.beta, c.m);
  const int n = s.integer("n", 5);
  const int ell = s.integer("ell", 0);
  if (n < 0 || ell < 0) usage_error("--n and --ell must be >= 0");
  const std::vector<double> xs = parse_reals(s.str("x", "0"));
  Result r;
  r.table.header = {"j", "ell", "x", "value"};
  for (double x : xs) {
    for (int j = 0; j <= n; ++j) r.table.rows.push_back({j, ell, x, q_eval(sp, j, ell, x)});
  }
  r.summary = {{"experiment", "eval"}, {"params", params_json(c)},
               {"grid", {{"n", n}, {"ell", ell}, {"x", xs}}}, {"values", rows_json(r.table)}};
  r.line = "eval: q_" + std::to_string(n) + "^(" + std::to_string(ell) + ")(" + shortest(xs.front()) +
           ")=" + shortest(q_eval(sp, n, ell, xs.front()));
  return r;
}

Result cmd_coeffs(const Settings& s) {
  const Common c = common(s);
  const SobolevParams sp(c.alpha, c.beta, c.m);
  const FunctionBundle f = make_function(s.str("f", ""), sp);
  const int n = s.integer("n", 10);
  if (n < 0) usage_error("--n must be >= 0");
  const Expansion e = partial_sum(sp, f, n, c.resolution);
  Result r;
  r.table.header = {"j", "coeff"};
  double biggest = 0.0;
  for (int j = 0; j <= n; ++j) {
    r.table.rows.push_back({j, e.coeffs[static_cast<std::size_t>(j)]});
    biggest = std::max(biggest, std::abs(e.coeffs[static_cast<std::size_t>(j)]));
  }
  r.summary = json::parse(expansion_to_json(e));
  r.line = "coeffs: f=" + f.name + " n=" + std::to_string(n) + " max|c|=" + shortest(biggest);
  return r;
}

Result cmd_partial_sum(const Settings& s) {
  const Common c = common(s);
  const SobolevParams sp(c.alpha, c.beta, c.m);
  const FunctionBundle f = make_function(s.str("f", ""), sp);
  const double p = s.real("p", 2.0);
  if (!(p >= 1.0)) usage_error("p must be >= 1");
  std::vector<int> truncations;
  if (s.has("degrees")) {
    truncations = parse_degrees(s.str("degrees", ""));
  } else {
    const int n = s.integer("n", 10);
    if (n < 0) usage_error("--n must be >= 0");
    for (int j = 0; j <= n; ++j) truncations.push_back(j);
  }
  const ConvergenceResult conv = convergence_experiment(sp, f, p, truncations, c.resolution);
  Result r;
  r.table.header = {"n", "error"};
  for (std::size_t i = 0; i < truncations.size(); ++i) r.table.rows.push_back({truncations[i], conv.errors[i]});
  const auto fit = try_fit(truncations, conv.errors);
  r.summary = {{"experiment", "partial-sum"},
               {"params", params_json(c)},
               {"grid", {{"f", f.name}, {"p", p}, {"degrees", truncations}}},
               {"values", rows_json(r.table)},
               {"fit", fit_json(fit)}};
  r.line = "partial-sum: f=" + f.name + " p=" + shortest(p) + " n=" + std::to_string(truncations.back()) +
           " error=" + shortest(conv.errors.back()) + fit_text(fit);
  return r;
}

Result cmd_norms(const Settings& s) {
  const Common c = common(s);
  const SobolevParams sp(c.alpha, c.beta, c.m);
  const double p = s.real("p", 2.0);
  const Metric metric = parse_metric(s.str("metric", "norm-product"));
  validate_metric_p(metric, p);
  const std::vector<int> degrees = parse_degrees(s.str("degrees", "16:1024:*2"));
  std::vector<double> values;
  Result r;
  r.table.header = {"n", "value"};
  for (int n : degrees) {
    values.push_back(metric_value(metric, sp, n, p));
    r.table.rows.push_back({n, values.back()});
  }
  const auto fit = try_fit(degrees, values);
  r.summary = {{"experiment", "norms"},
               {"params", params_json(c)},
               {"grid", {{"metric", s.str("metric", "norm-product")}, {"p", p}, {"degrees", degrees}}},
               {"values", rows_json(r.table)},
               {"fit", fit_json(fit)}};
  r.line = "norms: metric=" + s.str("metric", "norm-product") + " p=" + shortest(p) +
           " n=" + std::to_string(degrees.back()) + " value=" + shortest(values.back()) + fit_text(fit);
  return r;
}

Result cmd_sweep_p(const Settings& s) {
  const Common c = common(s);
  const SobolevParams sp(c.alpha, c.beta, c.m);
  const std::string metric_name = s.str("metric", "norm-product");
  const Metric metric = parse_metric(metric_name);
  const std::vector<double> ps = parse_reals(s.str("p-grid", "1.4:3.0:0.1"));
  for (double p : ps) validate_metric_p(metric, p);
  const std::vector<int> degrees = parse_degrees(s.str("degrees", "16:1024:*2"));
  const CriticalWindow window =
      metric == Metric::kJacobi ? jacobi_partial_sum_window(c.alpha, c.beta) : critical_window(c.alpha, c.beta, c.m);

  Result r;
  r.table.header = {"p", "n", "value", "slope_window_flag"};
  json fits = json::array();
  int inside_flat = 0;
  for (double p : ps) {
    std::vector<double> values;
    for (int n : degrees) values.push_back(metric_value(metric, sp, n, p));
    const auto fit = try_fit(degrees, values);
    const std::string flag = "slope=" + (fit ? fmt17(fit->exponent) : std::string("nan")) +
                             ";window=" + (window.contains(p) ? "in" : "out");
    for (std::size_t i = 0; i < degrees.size(); ++i) r.table.rows.push_back({p, degrees[i], values[i], flag});
    json entry = fit_json(fit);
    if (entry.is_null()) entry = json::object();
    entry["p"] = p;
    entry["window"] = window.contains(p) ? "in" : "out";
    fits.push_back(entry);
    if (window.contains(p)) ++inside_flat;
  }
  r.summary = {{"experiment", "sweep-p"},
               {"params", params_json(c)},
               {"grid", {{"metric", metric_name}, {"p", ps}, {"degrees", degrees}}},
               {"window", {{"p_lower", window.p_lower}, {"p_upper", window.p_upper}}},
               {"values", rows_json(r.table)},
               {"fit", fits}};
  r.line = "sweep-p: metric=" + metric_name + " " + std::to_string(ps.size()) + " exponents (" +
           std::to_string(inside_flat) + " inside window " + shortest(window.p_lower) + ".." +
           shortest(window.p_upper) + ") x " + std::to_string(degrees.size()) + " degrees";
  return r;
}

Result cmd_asym(const Settings& s) {
  const Common c = common(s);
  const SobolevParams sp(c.alpha, c.beta, c.m);
  const int k = s.integer("k", c.m);
  const int ell = s.integer("ell", c.m);
  const std::vector<int> degrees = parse_degrees(s.str("degrees", "16:4096:*2"));
  const AsymRatio ratio = asym_ratio_check(sp, k, ell, degrees);
  Result r;
  r.table.header = {"j", "value"};
  for (std::size_t i = 0; i < degrees.size(); ++i) r.table.rows.push_back({degrees[i], ratio.values[i]});
  r.summary = {{"experiment", "asym"},
               {"params", params_json(c)},
               {"grid", {{"k", k}, {"ell", ell}, {"degrees", degrees}}},
               {"values", rows_json(r.table)},
               {"limit", ratio.limit},
               {"max", ratio.max_value}};
  r.line = "asym: k=" + std::to_string(k) + " ell=" + std::to_string(ell) + " last=" +
           shortest(ratio.values.back()) + " limit=" + shortest(ratio.limit);
  return r;
}

Result cmd_kernel_check(const Settings& s) {
  const Common c = common(s);
  const double r_abel = s.real("r", 0.99);
  const int grid = c.resolution > 0 ? c.resolution : 80;
  const KernelBoundReport report = check_kernel_bound(c.alpha, c.beta, c.m, r_abel, grid, grid);
  Result r;
  r.table.header = {"region", "sup", "count"};
  for (int i = 0; i < 3; ++i) {
    r.table.rows.push_back({i + 1, report.region_sup[static_cast<std::size_t>(i)],
                            report.region_count[static_cast<std::size_t>(i)]});
  }
  r.summary = json::parse(to_json(report));
  r.line = "kernel-check: r=" + shortest(r_abel) + " sup=[" + shortest(report.region_sup[0]) + "," +
           shortest(report.region_sup[1]) + "," + shortest(report.region_sup[2]) + "]";
  return r;
}

Result cmd_hardy_check(const Settings& s) {
  const Common c = common(s);
  const double p = s.real("p", 2.0);
  const std::string which = s.str("variant", "both");
  std::vector<HardyVariant> variants;
  if (which == "standard" || which == "both") variants.push_back(HardyVariant::kStandard);
  if (which == "adjoint" || which == "both") variants.push_back(HardyVariant::kAdjoint);
  if (variants.empty()) usage_error("unknown --variant '" + which + "' (standard, adjoint, both)");
  HardyOptions options;
  if (c.resolution > 0) options.r_points = c.resolution;
  Result r;
  r.table.header = {"variant", "value", "finite", "argmax"};
  r.line = "hardy-check: p=" + shortest(p);
  for (HardyVariant v : variants) {
    const HardyResult h = hardy_supremum(p, c.alpha, c.beta, v, options);
    r.table.rows.push_back({to_string(v), h.value, h.finite ? 1 : 0, h.argmax});
    r.line += " " + to_string(v) + "=" + shortest(h.value);
  }
  r.summary = {{"experiment", "hardy-check"},
               {"params", params_json(c)},
               {"grid", {{"p", p}, {"r_points", options.r_points}}},
               {"values", rows_json(r.table)}};
  return r;
}

Result cmd_window(const Settings& s) {
  const Common c = common(s);
  const CriticalWindow w = critical_window(c.alpha, c.beta, c.m);
  Result r;
  r.table.header = {"p_lower", "p_upper"};
  r.table.rows.push_back({w.p_lower, w.p_upper});
  r.summary = {{"experiment", "window"}, {"params", params_json(c)}, {"values", rows_json(r.table)}};
  r.line = "p_lower=" + shortest(w.p_lower) + " p_upper=" + shortest(w.p_upper);
  r.always_print_line = true;
  return r;
}

Result dispatch(const std::string& command, const Settings& s) {
  if (command == "eval") return cmd_eval(s);
  if (command == "coeffs") return cmd_coeffs(s);
  if (command == "partial-sum") return cmd_partial_sum(s);
  if (command == "norms") return cmd_norms(s);
  if (command == "sweep-p") return cmd_sweep_p(s);
  if (command == "asym") return cmd_asym(s);
  if (command == "kernel-check") return cmd_kernel_check(s);
  if (command == "hardy-check") return cmd_hardy_check(s);
  return cmd_window(s);
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file '" + path + "'");
  file << data;
  file.flush();
  if (!file) throw IoError("failed writing output file '" + path + "'");
}

}  // namespace

std::string shortest(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::vector<int> parse_degrees(const std::string& text) {
  const std::string name = "--degrees";
  std::vector<int> out;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() < 2 || parts.size() > 3) usage_error("degree range must be a:b, a:b:step or a:b:*k");
    const int lo = to_int(name, parts[0]);
    const int hi = to_int(name, parts[1]);
    if (lo < 0 || hi < lo) usage_error("degree range needs 0 <= a <= b");
    if (parts.size() == 3 && !parts[2].empty() && parts[2][0] == '*') {
      const int factor = to_int(name, parts[2].substr(1));
      if (factor < 2 || lo < 1) usage_error("geometric ladder needs a >= 1 and factor >= 2");
      for (long long d = lo; d <= hi; d *= factor) out.push_back(static_cast<int>(d));
    } else {
      const int step = parts.size() == 3 ? to_int(name, parts[2]) : 1;
      if (step < 1) usage_error("degree step must be >= 1");
      for (long long d = lo; d <= hi; d += step) out.push_back(static_cast<int>(d));
    }
  } else {
    const auto parts = split(text, ',');
    const auto dots = std::find(parts.begin(), parts.end(), "...");
    if (dots != parts.end()) {
      const auto at = static_cast<std::size_t>(dots - parts.begin());
      if (at < 2 || at + 2 != parts.size()) usage_error("ellipsis form is a,b,...,z");
      const int a = to_int(name, parts[at - 2]);
      const int b = to_int(name, parts[at - 1]);
      const int z = to_int(name, parts[at + 1]);
      for (std::size_t i = 0; i + 2 < at; ++i) out.push_back(to_int(name, parts[i]));
      // Geometric when it lands on z, otherwise arithmetic.
      std::vector<int> tail;
      if (a >= 1 && b % a == 0 && b / a >= 2) {
        for (long long d = a; d <= z; d *= b / a) tail.push_back(static_cast<int>(d));
      }
      if ((tail.empty() || tail.back() != z) && b > a) {
        tail.clear();
        for (long long d = a; d <= z; d += b - a) tail.push_back(static_cast<int>(d));
      }
      if (tail.empty() || tail.back() != z) usage_error("cannot reach " + parts[at + 1] + " from " + parts[at - 2] + "," + parts[at - 1]);
      out.insert(out.end(), tail.begin(), tail.end());
    } else {
      for (const auto& part : parts) out.push_back(to_int(name, part));
    }
  }
  if (out.empty()) usage_error("empty degree list");
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 0 || (i > 0 && out[i] <= out[i - 1])) usage_error("degrees must be non-negative and increasing");
  }
  return out;
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) usage_error("range must be lo:hi:step");
    const double lo = to_double("range", parts[0]);
    const double hi = to_double("range", parts[1]);
    const double step = to_double("range", parts[2]);
    if (!(step > 0.0) || hi < lo) usage_error("range needs lo <= hi and step > 0");
    const auto count = static_cast<long long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    if (count > 100000) usage_error("range has too many points");
    for (long long i = 0; i < count; ++i) out.push_back(round12(lo + static_cast<double>(i) * step));
  } else {
    for (const auto& part : split(text, ',')) out.push_back(to_double("list", part));
  }
  if (out.empty()) usage_error("empty list");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jacobi-Sobolev expansions, norms and bound checks"};
  app.footer(kSchemas);
  std::string command;
  app.add_option("command", command, "eval | coeffs | partial-sum | norms | sweep-p | asym | kernel-check | hardy-check | window")
      ->required();
  std::map<std::string, std::string> raw;
  std::map<std::string, CLI::Option*> options;
  for (const auto& [name, help] : kFlags) options[name] = app.add_option("--" + name, raw[name], help);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file");

  std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 expects reversed order
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end()) {
    err << "error: unknown command '" << command << "'\n\n" << app.help();
    return 2;
  }

  try {
    Settings settings;
    for (const auto& [name, opt] : options) {
      if (opt->count() > 0) settings.values[name] = raw[name];
    }
    if (!config_path.empty()) merge_config_file(config_path, settings);
    const std::string format = settings.str("format", "csv");
    if (format != "csv" && format != "json") usage_error("--format must be csv or json");

    const Result result = dispatch(command, settings);
    const std::string data = format == "csv" ? to_csv(result.table) : result.summary.dump(2) + "\n";
    if (settings.has("out")) {
      write_file(settings.str("out", ""), data);
      out << result.line << '\n';
    } else if (result.always_print_line) {
      out << result.line << '\n';
    } else {
      out << data;
    }
    return 0;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace jsobolev::cli
