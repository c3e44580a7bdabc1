#include "zetasum/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "zetasum/checks.hpp"
#include "zetasum/integrals.hpp"

namespace zetasum::cli {
namespace {

using nlohmann::json;

constexpr double kNoEstimate = std::numeric_limits<double>::quiet_NaN();

enum class ParamKind { complex, real, integer };

struct ParamSpec {
  const char* name;
  ParamKind kind;
};

using Params = std::map<std::string, Complex>;
using Evaluator = std::function<EvalResult(const Params&, const Settings&)>;

struct Target {
  const char* name;
  std::vector<ParamSpec> params;
  Evaluator eval;
  const char* oracle_name;  // nullptr when the target has no independent oracle
  Evaluator oracle;
};

EvalResult closed(Complex v) { return {v, kNoEstimate, Method::closed_form}; }

int as_int(const Params& p, const char* name) { return static_cast<int>(p.at(name).real()); }

double as_real(const Params& p, const char* name) { return p.at(name).real(); }

AParam a_of(const Params& p, const char* name = "a") { return AParam(p.at(name)); }

LambdaParam lambda_of(const Params& p) { return LambdaParam(p.at("lambda")); }

SeriesQuery series_query(const Params& p, bool with_lambda) {
  SeriesQuery q;
  q.t = p.at("t");
  q.a = a_of(p);
  q.p = as_int(p, "p");
  if (with_lambda) q.lambda = lambda_of(p);
  return q;
}

// Hurwitz zeta through the contour: Gamma(1 - s) I(s) off the positive
// integers, the Log-weighted form at s = n + 1.
EvalResult zeta_by_contour(Complex s, AParam a, const ContourSpec& spec) {
  if (is_integer(s) && s.real() >= 2.0) return hankel_zeta_family(ZetaSelector::pos, s - 1.0, a, spec);
  return hankel_zeta_family(ZetaSelector::cont, s, a, spec);
}

const std::vector<Target>& targets() {
  using K = ParamKind;
  static const std::vector<Target> list = {
      {"hurwitz_zeta", {{"s", K::complex}, {"a", K::complex}},
       [](const Params& p, const Settings& st) { return hurwitz_zeta(p.at("s"), a_of(p), st.euler_maclaurin); },
       "contour", [](const Params& p, const Settings& st) { return zeta_by_contour(p.at("s"), a_of(p), st.contour); }},
      {"hurwitz_zeta_sderiv", {{"s", K::complex}, {"a", K::complex}},
       [](const Params& p, const Settings& st) {
         return hurwitz_zeta_sderiv(p.at("s"), a_of(p), st.euler_maclaurin);
       },
       "contour",
       [](const Params& p, const Settings& st) {
         const Complex s = p.at("s");
         if (is_integer(s) && s.real() <= 0.0) {
           const int n = static_cast<int>(-s.real());
           EvalResult r = hankel_zeta_family(ZetaSelector::g, static_cast<double>(n), a_of(p), st.contour);
           r.value -= psi_int(n) * zeta_neg_int(n, a_of(p));
           return r;
         }
         // Centered difference of the contour values.
         const double h = 1e-4;
         const EvalResult hi = zeta_by_contour(s + h, a_of(p), st.contour);
         const EvalResult lo = zeta_by_contour(s - h, a_of(p), st.contour);
         return EvalResult{(hi.value - lo.value) / (2.0 * h), 1e-7 * std::abs(hi.value), Method::contour};
       }},
      {"zeta_neg_int", {{"n", K::integer}, {"a", K::complex}},
       [](const Params& p, const Settings&) { return closed(zeta_neg_int(as_int(p, "n"), a_of(p))); }, "contour",
       [](const Params& p, const Settings& st) {
         return hankel_zeta_family(ZetaSelector::neg, p.at("n"), a_of(p), st.contour);
       }},
      {"g", {{"n", K::integer}, {"a", K::complex}},
       [](const Params& p, const Settings&) {
         const GFamilyValue v = g(as_int(p, "n"), a_of(p));
         return EvalResult{v.value, v.abs_err, Method::euler_maclaurin};
       },
       "contour",
       [](const Params& p, const Settings& st) {
         return hankel_zeta_family(ZetaSelector::g, p.at("n"), a_of(p), st.contour);
       }},
      {"digamma", {{"s", K::complex}}, [](const Params& p, const Settings&) { return digamma(p.at("s")); }, "contour",
       [](const Params& p, const Settings& st) {
         EvalResult r = hankel_gamma_family(GammaSelector::psi_plus_gamma, p.at("s"), st.contour);
         r.value -= constants().gamma;
         return r;
       }},
      {"log_gamma", {{"s", K::complex}}, [](const Params& p, const Settings&) { return log_gamma(p.at("s")); },
       "contour",
       [](const Params& p, const Settings& st) {
         return hankel_gamma_family(GammaSelector::log_gamma, p.at("s"), st.contour);
       }},
      {"barnes_log_g", {{"a", K::complex}}, [](const Params& p, const Settings&) { return barnes_log_g(a_of(p)); },
       "contour", [](const Params& p, const Settings& st) { return hankel_barnes(a_of(p), st.contour); }},
      {"bernoulli_poly", {{"n", K::integer}, {"x", K::complex}},
       [](const Params& p, const Settings&) { return closed(bernoulli_poly(as_int(p, "n"), p.at("x"))); }, "contour",
       [](const Params& p, const Settings& st) {
         // B_n(x) = -n zeta(1 - n, x) for n >= 1.
         const int n = as_int(p, "n");
         if (n < 1) throw DomainError("bernoulli_poly oracle: requires n >= 1");
         EvalResult r = hankel_zeta_family(ZetaSelector::neg, static_cast<double>(n - 1), a_of(p, "x"), st.contour);
         r.value *= -static_cast<double>(n);
         r.abs_err *= n;
         return r;
       }},
      {"stirling2", {{"n", K::integer}, {"k", K::integer}},
       [](const Params& p, const Settings&) {
         return EvalResult{static_cast<double>(stirling2(as_int(p, "n"), as_int(p, "k"))), 0.0, Method::closed_form};
       },
       nullptr, nullptr},
      {"geometric_poly", {{"n", K::integer}, {"x", K::complex}},
       [](const Params& p, const Settings&) { return closed(geometric_poly(as_int(p, "n"), p.at("x"))); }, nullptr,
       nullptr},
      {"lerch_phi", {{"lambda", K::complex}, {"s", K::complex}, {"a", K::complex}},
       [](const Params& p, const Settings& st) { return lerch_phi(lambda_of(p), p.at("s"), a_of(p), st.lerch); },
       "contour",
       [](const Params& p, const Settings& st) {
         const Complex s = p.at("s");
         if (s == Complex(1.0, 0.0)) {
           return hankel_lerch_family(LerchSelector::phi_one, lambda_of(p), 0.0, a_of(p), st.contour);
         }
         return hankel_lerch_family(LerchSelector::phi_cont, lambda_of(p), s, a_of(p), st.contour);
       }},
      {"lerch_phi_sderiv", {{"lambda", K::complex}, {"s", K::complex}, {"a", K::complex}},
       [](const Params& p, const Settings& st) {
         return lerch_phi_sderiv(lambda_of(p), p.at("s"), a_of(p), st.lerch);
       },
       "contour",
       [](const Params& p, const Settings& st) {
         const Complex s = p.at("s");
         if (!(is_integer(s) && s.real() <= 0.0)) {
           throw UsageError("lerch_phi_sderiv has a contour oracle only at s = 0, -1, -2, ...");
         }
         const int n = static_cast<int>(-s.real());
         EvalResult r =
             hankel_lerch_family(LerchSelector::phi_deriv, lambda_of(p), static_cast<double>(n), a_of(p), st.contour);
         r.value -= psi_int(n) * lerch_phi_neg(lambda_of(p), n, a_of(p));
         return r;
       }},
      {"lerch_phi_neg", {{"lambda", K::complex}, {"m", K::integer}, {"a", K::complex}},
       [](const Params& p, const Settings&) { return closed(lerch_phi_neg(lambda_of(p), as_int(p, "m"), a_of(p))); },
       "series",
       [](const Params& p, const Settings& st) {
         return lerch_phi(lambda_of(p), -p.at("m"), a_of(p), st.lerch);
       }},
      {"lerch_sderiv_neg", {{"lambda", K::complex}, {"m", K::integer}, {"a", K::complex}},
       [](const Params& p, const Settings&) {
         return lerch_phi_sderiv_neg(lambda_of(p), as_int(p, "m"), a_of(p), SDerivMethod::l_derivatives);
       },
       "kernel_integral",
       [](const Params& p, const Settings&) {
         return lerch_phi_sderiv_neg(lambda_of(p), as_int(p, "m"), a_of(p), SDerivMethod::kernel_integral);
       }},
      {"l_function", {{"lambda", K::complex}, {"a", K::complex}},
       [](const Params& p, const Settings&) { return l_function(lambda_of(p), a_of(p), LMethod::series); },
       "integral",
       [](const Params& p, const Settings&) { return l_function(lambda_of(p), a_of(p), LMethod::integral); }},
      {"S", {{"t", K::complex}, {"a", K::complex}, {"p", K::integer}},
       [](const Params& p, const Settings&) { return closed(s_closed(series_query(p, false))); }, "bruteforce",
       [](const Params& p, const Settings& st) {
         return series_bruteforce(SeriesFamily::S, series_query(p, false), st.series);
       }},
      {"T", {{"t", K::complex}, {"a", K::complex}, {"p", K::integer}},
       [](const Params& p, const Settings&) { return closed(t_closed(series_query(p, false))); }, "bruteforce",
       [](const Params& p, const Settings& st) {
         return series_bruteforce(SeriesFamily::T, series_query(p, false), st.series);
       }},
      {"lerch_series", {{"lambda", K::complex}, {"t", K::complex}, {"a", K::complex}, {"p", K::integer}},
       [](const Params& p, const Settings&) { return closed(lerch_series_closed(series_query(p, true))); },
       "bruteforce",
       [](const Params& p, const Settings& st) {
         return series_bruteforce(SeriesFamily::LERCH, series_query(p, true), st.series);
       }},
      {"log_gamma_moment", {{"t", K::complex}, {"a", K::complex}, {"m", K::integer}},
       [](const Params& p, const Settings&) {
         return closed(log_gamma_moment({p.at("t"), a_of(p), as_int(p, "m")}));
       },
       "quadrature",
       [](const Params& p, const Settings&) {
         return log_gamma_moment_quadrature({p.at("t"), a_of(p), as_int(p, "m")});
       }},
      {"psi_moment", {{"t", K::complex}, {"a", K::complex}, {"p", K::integer}},
       [](const Params& p, const Settings&) { return closed(psi_moment(p.at("t"), a_of(p), as_int(p, "p"))); },
       "quadrature",
       [](const Params& p, const Settings&) { return psi_moment_quadrature(p.at("t"), a_of(p), as_int(p, "p")); }},
      {"negative_polygamma", {{"k", K::integer}, {"t", K::real}},
       [](const Params& p, const Settings&) { return closed(negative_polygamma(as_int(p, "k"), as_real(p, "t"))); },
       "quadrature",
       [](const Params& p, const Settings&) {
         return negative_polygamma_quadrature(as_int(p, "k"), as_real(p, "t"));
       }},
      {"g_integral", {{"m", K::integer}, {"a", K::complex}, {"t", K::complex}},
       [](const Params& p, const Settings&) { return closed(g_integral_rule(as_int(p, "m"), a_of(p), p.at("t"))); },
       "quadrature",
       [](const Params& p, const Settings&) { return g_integral_quadrature(as_int(p, "m"), a_of(p), p.at("t")); }},
  };
  return list;
}

const Target& find_target(const std::string& name) {
  for (const Target& t : targets())
    if (name == t.name) return t;
  throw UsageError("unknown target '" + name + "' (see --list)");
}

const std::vector<std::string> kParamNames = {"s", "a", "t", "p", "n", "m", "k", "x", "lambda"};

// ---------------------------------------------------------------- parsing

double parse_double(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("malformed number '" + std::string(text) + "'");
  }
  return v;
}

Complex checked_param(const ParamSpec& spec, Complex v) {
  if (spec.kind == ParamKind::complex) return v;
  if (v.imag() != 0.0) throw UsageError(std::string("parameter --") + spec.name + " must be real");
  if (spec.kind == ParamKind::integer && !is_integer(v)) {
    throw UsageError(std::string("parameter --") + spec.name + " must be an integer");
  }
  return v;
}

// ------------------------------------------------------------------ output

enum class Format { human, csv, json };

Format parse_format(const std::string& name) {
  if (name == "human") return Format::human;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw UsageError("unknown output format '" + name + "'");
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_field(fields[i]);
  }
  return line + "\n";
}

json json_number(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

json json_scalar(Complex z) {
  if (z.imag() == 0.0) return json_number(z.real());
  return json{{"re", json_number(z.real())}, {"im", json_number(z.imag())}};
}

std::string human_scalar(Complex z) {
  if (z.imag() == 0.0) return format_number(z.real());
  return format_number(z.real()) + (std::signbit(z.imag()) ? " - " : " + ") + format_number(std::abs(z.imag())) + "i";
}

std::string human_params(const Target& t, const Params& p) {
  std::string s = std::string(t.name) + "(";
  for (std::size_t i = 0; i < t.params.size(); ++i) {
    if (i) s += ", ";
    s += std::string(t.params[i].name) + "=" + human_scalar(p.at(t.params[i].name));
  }
  return s + ")";
}

// One evaluated point: the result or the error that stopped it.
struct Row {
  Params params;
  std::optional<EvalResult> result;
  std::string error;
  int code = kOk;
};

template <class F>
Row evaluate_row(const Params& params, F&& f) {
  Row row;
  row.params = params;
  try {
    row.result = f();
  } catch (const ConvergenceError& e) {
    row.error = e.what();
    row.code = kConvergence;
    row.result = EvalResult{e.best(), e.error_bound(), Method::series};
  } catch (const DomainError& e) {
    row.error = e.what();
    row.code = kDomain;
  } catch (const Error& e) {
    row.error = e.what();
    row.code = kDomain;
  }
  return row;
}

std::vector<std::string> value_header(const Target& t) {
  std::vector<std::string> h;
  for (const ParamSpec& p : t.params) h.emplace_back(p.name);
  for (const char* c : {"value_re", "value_im", "abs_err", "method", "error"}) h.emplace_back(c);
  return h;
}

std::vector<std::string> value_fields(const Target& t, const Row& row) {
  std::vector<std::string> f;
  for (const ParamSpec& p : t.params) f.push_back(format_scalar(row.params.at(p.name)));
  if (row.result && row.code != kConvergence) {
    f.push_back(format_number(row.result->value.real()));
    f.push_back(format_number(row.result->value.imag()));
    f.push_back(format_number(row.result->abs_err));
    f.emplace_back(to_string(row.result->method));
  } else {
    f.insert(f.end(), {"", "", "", ""});
  }
  f.push_back(row.error);
  return f;
}

json value_json(const Target& t, const Row& row) {
  json params = json::object();
  for (const ParamSpec& p : t.params) {
    const Complex v = row.params.at(p.name);
    params[p.name] = p.kind == ParamKind::integer ? json(static_cast<long>(v.real())) : json_scalar(v);
  }
  json j{{"target", t.name}, {"params", params}};
  if (row.result && row.code != kConvergence) {
    j["value"] = json{{"re", json_number(row.result->value.real())}, {"im", json_number(row.result->value.imag())}};
    j["abs_err"] = json_number(row.result->abs_err);
    j["method"] = std::string(to_string(row.result->method));
  }
  if (!row.error.empty()) j["error"] = row.error;
  return j;
}

// --------------------------------------------------------------- settings

Settings load_settings(const std::string& config_path) {
  Settings st;
  std::string path = config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("ZETASUM_CONFIG")) path = env;
  }
  if (path.empty()) return st;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  apply_config(st, buf.str());
  return st;
}

struct Flags {
  std::string output = "human";
  std::string config;
  std::optional<double> epsilon, ray_cutoff, tail_tol, contour_tol, rel_tol;
  std::optional<int> n_circle, n_ray;
  std::optional<long> max_terms;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("-o,--output", f.output, "Output format: human, csv or json");
  cmd->add_option("--config", f.config, "JSON settings file (default: $ZETASUM_CONFIG)");
  cmd->add_option("--epsilon", f.epsilon, "Contour circle radius");
  cmd->add_option("--ray-cutoff", f.ray_cutoff, "Contour ray cutoff (0 = automatic)");
  cmd->add_option("--n-circle", f.n_circle, "Gauss-Legendre nodes on the contour circle");
  cmd->add_option("--n-ray", f.n_ray, "Gauss-Legendre nodes per contour panel");
  cmd->add_option("--tail-tol", f.tail_tol, "Ray truncation threshold");
  cmd->add_option("--contour-tol", f.contour_tol, "Node-doubling agreement required of contour values");
  cmd->add_option("--max-terms", f.max_terms, "Term budget of brute-force series");
  cmd->add_option("--rel-tol", f.rel_tol, "Relative tail tolerance of brute-force series");
}

Settings resolve_settings(const Flags& f) {
  Settings st = load_settings(f.config);
  if (f.epsilon) st.contour.epsilon = *f.epsilon;
  if (f.ray_cutoff) st.contour.ray_cutoff = *f.ray_cutoff;
  if (f.n_circle) st.contour.n_circle = *f.n_circle;
  if (f.n_ray) st.contour.n_ray = *f.n_ray;
  if (f.tail_tol) st.contour.tail_tol = *f.tail_tol;
  if (f.contour_tol) st.contour.tol = *f.contour_tol;
  if (f.max_terms) st.series.max_terms = *f.max_terms;
  if (f.rel_tol) st.series.rel_tol = *f.rel_tol;
  try {
    validate(st.contour);
  } catch (const DomainError& e) {
    throw UsageError(std::string("invalid settings: ") + e.what());
  }
  if (st.series.max_terms < 10 || !(st.series.rel_tol > 0.0)) {
    throw UsageError("invalid settings: series needs max_terms >= 10 and rel_tol > 0");
  }
  return st;
}

// ----------------------------------------------------------------- verbs

struct ParamFlags {
  std::map<std::string, std::string> raw;
};

void add_params(CLI::App* cmd, ParamFlags& pf) {
  for (const std::string& name : kParamNames) {
    cmd->add_option("--" + name, pf.raw[name], "Parameter " + name + " (x or re,im)");
  }
}

const std::string& require_param(const ParamFlags& pf, const Target& t, const ParamSpec& spec) {
  const std::string& raw = pf.raw.at(spec.name);
  if (raw.empty()) throw UsageError(std::string(t.name) + " requires --" + spec.name);
  return raw;
}

void reject_extra_params(const ParamFlags& pf, const Target& t) {
  for (const auto& [name, raw] : pf.raw) {
    if (raw.empty()) continue;
    bool used = false;
    for (const ParamSpec& p : t.params) used = used || name == p.name;
    if (!used) throw UsageError(std::string(t.name) + " does not take --" + name);
  }
}

Params scalar_params(const ParamFlags& pf, const Target& t) {
  reject_extra_params(pf, t);
  Params p;
  for (const ParamSpec& spec : t.params) p[spec.name] = checked_param(spec, parse_scalar(require_param(pf, t, spec)));
  return p;
}

int print_error_row(const Row& row, std::ostream& err) {
  if (row.code == kConvergence) {
    err << "error: " << row.error << " (best " << human_scalar(row.result->value) << ", bound "
        << format_number(row.result->abs_err) << ")\n";
  } else {
    err << "error: " << row.error << "\n";
  }
  return row.code;
}

int do_eval(const std::string& target_name, const ParamFlags& pf, const Flags& flags, std::ostream& out,
            std::ostream& err) {
  const Target& t = find_target(target_name);
  const Format fmt = parse_format(flags.output);
  const Params params = scalar_params(pf, t);
  const Settings st = resolve_settings(flags);
  const Row row = evaluate_row(params, [&] { return t.eval(params, st); });
  if (row.code != kOk) return print_error_row(row, err);
  switch (fmt) {
    case Format::human:
      out << human_params(t, params) << " = " << human_scalar(row.result->value) << "\n"
          << "  abs_err " << format_number(row.result->abs_err) << ", method " << to_string(row.result->method)
          << "\n";
      break;
    case Format::csv:
      out << csv_row(value_header(t)) << csv_row(value_fields(t, row));
      break;
    case Format::json:
      out << value_json(t, row).dump(2) << "\n";
      break;
  }
  return kOk;
}

int do_oracle(const std::string& target_name, const ParamFlags& pf, const Flags& flags, std::ostream& out,
              std::ostream& err) {
  const Target& t = find_target(target_name);
  if (!t.oracle) throw UsageError(std::string(t.name) + " has no independent oracle");
  const Format fmt = parse_format(flags.output);
  const Params params = scalar_params(pf, t);
  const Settings st = resolve_settings(flags);
  const Row primary = evaluate_row(params, [&] { return t.eval(params, st); });
  if (primary.code != kOk) return print_error_row(primary, err);
  const Row oracle = evaluate_row(params, [&] { return t.oracle(params, st); });
  if (oracle.code != kOk) return print_error_row(oracle, err);
  const double dev = deviation(primary.result->value, oracle.result->value);
  switch (fmt) {
    case Format::human:
      out << human_params(t, params) << "\n"
          << "  value   " << human_scalar(primary.result->value) << "  [" << to_string(primary.result->method)
          << ", abs_err " << format_number(primary.result->abs_err) << "]\n"
          << "  oracle  " << human_scalar(oracle.result->value) << "  [" << t.oracle_name << ", abs_err "
          << format_number(oracle.result->abs_err) << "]\n"
          << "  deviation " << format_number(dev) << "\n";
      break;
    case Format::csv: {
      std::vector<std::string> header = value_header(t);
      header.pop_back();
      for (const char* c : {"oracle", "oracle_re", "oracle_im", "oracle_err", "deviation"}) header.emplace_back(c);
      std::vector<std::string> fields = value_fields(t, primary);
      fields.pop_back();
      fields.insert(fields.end(),
                    {t.oracle_name, format_number(oracle.result->value.real()),
                     format_number(oracle.result->value.imag()), format_number(oracle.result->abs_err),
                     format_number(dev)});
      out << csv_row(header) << csv_row(fields);
      break;
    }
    case Format::json: {
      json j = value_json(t, primary);
      j["oracle"] = json{{"name", t.oracle_name},
                         {"value", {{"re", json_number(oracle.result->value.real())},
                                    {"im", json_number(oracle.result->value.imag())}}},
                         {"abs_err", json_number(oracle.result->abs_err)}};
      j["deviation"] = json_number(dev);
      out << j.dump(2) << "\n";
      break;
    }
  }
  return kOk;
}

int do_sweep(const std::string& target_name, const ParamFlags& pf, const Flags& flags, std::ostream& out) {
  const Target& t = find_target(target_name);
  const Format fmt = parse_format(flags.output);
  if (fmt == Format::human) throw UsageError("sweep writes csv or json; pass --output csv or --output json");
  reject_extra_params(pf, t);
  std::vector<std::vector<Complex>> axes;
  for (const ParamSpec& spec : t.params) {
    std::vector<Complex> values = parse_values(require_param(pf, t, spec));
    for (Complex& v : values) v = checked_param(spec, v);
    axes.push_back(std::move(values));
  }
  const Settings st = resolve_settings(flags);

  // Row-major over the parameters in target order, first parameter slowest.
  std::vector<Row> rows;
  std::vector<std::size_t> index(axes.size(), 0);
  for (bool done = false; !done;) {
    Params p;
    for (std::size_t i = 0; i < axes.size(); ++i) p[t.params[i].name] = axes[i][index[i]];
    rows.push_back(evaluate_row(p, [&] { return t.eval(p, st); }));
    done = true;
    for (std::size_t i = axes.size(); i-- > 0;) {
      if (++index[i] < axes[i].size()) {
        done = false;
        break;
      }
      index[i] = 0;
    }
  }

  if (fmt == Format::csv) {
    out << csv_row(value_header(t));
    for (const Row& r : rows) out << csv_row(value_fields(t, r));
  } else {
    json arr = json::array();
    for (const Row& r : rows) arr.push_back(value_json(t, r));
    out << arr.dump(2) << "\n";
  }
  return kOk;
}

int do_check(const std::vector<std::string>& ids, const Flags& flags, std::ostream& out) {
  const Format fmt = parse_format(flags.output);
  std::vector<std::string> resolved;
  try {
    resolved = resolve_check_ids(ids.empty() ? std::vector<std::string>{"all"} : ids);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const Settings st = resolve_settings(flags);
  const CheckConfig cfg{st.contour, st.series};
  std::vector<CheckReport> reports;
  for (const std::string& id : resolved) reports.push_back(run_check(id, cfg));
  bool all = true;
  for (const CheckReport& r : reports) all = all && r.passed;

  switch (fmt) {
    case Format::human: {
      std::size_t passed = 0;
      for (const CheckReport& r : reports) {
        char line[512];
        std::snprintf(line, sizeof line, "%-26s %s  grid=%-4zu max_dev=%-10.3g tol=%-8.0e %.3fs", r.id.c_str(),
                      r.passed ? "PASS" : "FAIL", r.grid_size, r.max_deviation, r.tolerance, r.wall_seconds);
        out << line;
        if (!r.passed) out << "  worst: " << r.worst_point;
        if (!r.failure.empty()) out << "  (" << r.failure << ")";
        out << "\n";
        passed += r.passed ? 1 : 0;
      }
      out << passed << "/" << reports.size() << " identity suites passed\n";
      break;
    }
    case Format::csv:
      out << csv_row({"id", "grid_size", "max_deviation", "tolerance", "passed", "wall_seconds", "worst_point",
                      "failure"});
      for (const CheckReport& r : reports) {
        out << csv_row({r.id, std::to_string(r.grid_size), format_number(r.max_deviation), format_number(r.tolerance),
                        r.passed ? "true" : "false", format_number(r.wall_seconds), r.worst_point, r.failure});
      }
      break;
    case Format::json: {
      json arr = json::array();
      for (const CheckReport& r : reports) {
        arr.push_back({{"id", r.id},
                       {"grid_size", r.grid_size},
                       {"max_deviation", json_number(r.max_deviation)},
                       {"tolerance", r.tolerance},
                       {"passed", r.passed},
                       {"wall_seconds", r.wall_seconds},
                       {"worst_point", r.worst_point},
                       {"failure", r.failure}});
      }
      out << arr.dump(2) << "\n";
      break;
    }
  }
  return all ? kOk : kCheckFailed;
}

void list_targets(std::ostream& out) {
  for (const Target& t : targets()) {
    out << t.name;
    for (const ParamSpec& p : t.params) out << " --" << p.name;
    if (t.oracle_name) out << "   [oracle: " << t.oracle_name << "]";
    out << "\n";
  }
}

}  // namespace

// ------------------------------------------------------------ public API

void apply_config(Settings& st, const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw UsageError("config must be a JSON object");
  auto section = [&](const char* name, auto&& apply) {
    if (!doc.contains(name)) return;
    const json& s = doc.at(name);
    if (!s.is_object()) throw UsageError(std::string("config section '") + name + "' must be an object");
    for (const auto& [key, value] : s.items()) {
      try {
        if (!apply(key, value)) throw UsageError(std::string("unknown config key '") + name + "." + key + "'");
      } catch (const json::type_error&) {
        throw UsageError(std::string("config key '") + name + "." + key + "' has the wrong type");
      }
    }
  };
  for (const auto& [key, value] : doc.items()) {
    if (key != "contour" && key != "series" && key != "lerch" && key != "euler_maclaurin") {
      throw UsageError("unknown config section '" + key + "'");
    }
  }
  section("contour", [&](const std::string& k, const json& v) {
    if (k == "epsilon") st.contour.epsilon = v.get<double>();
    else if (k == "ray_cutoff") st.contour.ray_cutoff = v.get<double>();
    else if (k == "n_circle") st.contour.n_circle = v.get<int>();
    else if (k == "n_ray") st.contour.n_ray = v.get<int>();
    else if (k == "tail_tol") st.contour.tail_tol = v.get<double>();
    else if (k == "tol") st.contour.tol = v.get<double>();
    else return false;
    return true;
  });
  section("series", [&](const std::string& k, const json& v) {
    if (k == "max_terms") st.series.max_terms = v.get<long>();
    else if (k == "rel_tol") st.series.rel_tol = v.get<double>();
    else return false;
    return true;
  });
  section("lerch", [&](const std::string& k, const json& v) {
    if (k == "max_terms") st.lerch.max_terms = v.get<long>();
    else if (k == "rel_tol") st.lerch.rel_tol = v.get<double>();
    else return false;
    return true;
  });
  section("euler_maclaurin", [&](const std::string& k, const json& v) {
    if (k == "shift") st.euler_maclaurin.shift = v.get<int>();
    else if (k == "order") st.euler_maclaurin.order = v.get<int>();
    else if (k == "adaptive") st.euler_maclaurin.adaptive = v.get<bool>();
    else if (k == "direct_margin") st.euler_maclaurin.direct_margin = v.get<double>();
    else return false;
    return true;
  });
}

Complex parse_scalar(std::string_view text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_double(text), 0.0};
  return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

std::vector<Complex> parse_values(std::string_view text) {
  if (text.starts_with("linspace(")) {
    if (!text.ends_with(")")) throw UsageError("malformed linspace '" + std::string(text) + "'");
    const std::string_view inner = text.substr(9, text.size() - 10);
    std::vector<double> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= inner.size(); ++i) {
      if (i == inner.size() || inner[i] == ',') {
        parts.push_back(parse_double(inner.substr(start, i - start)));
        start = i + 1;
      }
    }
    if (parts.size() != 3 || parts[2] < 1 || parts[2] != std::floor(parts[2])) {
      throw UsageError("linspace takes (lo,hi,n) with integer n >= 1");
    }
    if (!std::isfinite(parts[0]) || !std::isfinite(parts[1])) throw UsageError("linspace bounds must be finite");
    const int n = static_cast<int>(parts[2]);
    std::vector<Complex> out;
    for (int i = 0; i < n; ++i) {
      const double v = n == 1 ? parts[0] : parts[0] + (parts[1] - parts[0]) * i / (n - 1);
      out.emplace_back(i == n - 1 ? parts[1] : v, 0.0);
    }
    return out;
  }
  std::vector<Complex> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      out.push_back(parse_scalar(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  for (Complex v : out)
    if (!is_finite(v)) throw UsageError("parameter values must be finite");
  return out;
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_scalar(Complex z) {
  if (z.imag() == 0.0) return format_number(z.real());
  return format_number(z.real()) + "," + format_number(z.imag());
}

std::vector<std::string> target_names() {
  std::vector<std::string> out;
  for (const Target& t : targets()) out.emplace_back(t.name);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hurwitz zeta, Lerch transcendent and related series and integrals"};
  app.require_subcommand(1);

  Flags flags;
  ParamFlags params;
  std::string target;
  bool list = false;
  std::vector<std::string> ids;

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a function");
  eval->add_option("target", target, "Function name (see --list)");
  eval->add_flag("--list", list, "List targets and their parameters");
  add_params(eval, params);
  add_common(eval, flags);

  CLI::App* oracle = app.add_subcommand("oracle", "Evaluate a function and its independent oracle");
  oracle->add_option("target", target, "Function name (see --list)");
  oracle->add_flag("--list", list, "List targets and their parameters");
  add_params(oracle, params);
  add_common(oracle, flags);

  CLI::App* sweep = app.add_subcommand("sweep", "Evaluate a function over a parameter grid");
  sweep->add_option("target", target, "Function name (see --list)");
  add_params(sweep, params);
  add_common(sweep, flags);
  sweep->footer("Parameter values: x, re,im, v1;v2;... or linspace(lo,hi,n)");

  CLI::App* check = app.add_subcommand("check", "Run identity suites (default: all)");
  check->add_option("ids", ids, "Suite ids, or 'all'");
  check->add_flag("--list", list, "List suite ids");
  add_common(check, flags);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) {
      if (list) {
        for (const std::string& id : check_ids()) out << id << "\n";
        return kOk;
      }
      return do_check(ids, flags, out);
    }
    if (list) {
      list_targets(out);
      return kOk;
    }
    if (target.empty()) throw UsageError("a target is required (see --list)");
    if (eval->parsed()) return do_eval(target, params, flags, out, err);
    if (oracle->parsed()) return do_oracle(target, params, flags, out, err);
    return do_sweep(target, params, flags, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kConvergence;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace zetasum::cli
