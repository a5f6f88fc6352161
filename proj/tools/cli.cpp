#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

#include "toric/action.hpp"
#include "toric/coefficients.hpp"
#include "toric/error.hpp"
#include "toric/oracles.hpp"
#include "toric/rational.hpp"

namespace toric::cli {

namespace {

using json = nlohmann::json;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_short(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

Rational read_rational(const json& j, const std::string& field) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number()) return parse_rational(j.dump());
  throw InvalidArgument("field '" + field + "' must be a number or a rational string");
}

unsigned read_exponent(const json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > 4096)
    throw InvalidArgument("field '" + field + "' must be a non-negative integer");
  return static_cast<unsigned>(j.get<long long>());
}

BivariatePoly read_custom_g(const json& j) {
  if (!j.is_array()) throw InvalidArgument("field 'custom_G' must be a list of terms");
  BivariatePoly g;
  for (const auto& term : j) {
    if (term.is_object()) {
      if (!term.contains("coefficient") || !term.contains("e1") || !term.contains("e2"))
        throw InvalidArgument("custom_G terms need 'coefficient', 'e1' and 'e2'");
      g.add_term(read_rational(term["coefficient"], "coefficient"), read_exponent(term["e1"], "e1"),
                 read_exponent(term["e2"], "e2"));
    } else if (term.is_array() && term.size() == 3) {
      g.add_term(read_rational(term[0], "coefficient"), read_exponent(term[1], "e1"),
                 read_exponent(term[2], "e2"));
    } else {
      throw InvalidArgument("custom_G terms must be objects or [coefficient, e1, e2] triples");
    }
  }
  return g;
}

std::string describe(const SystemSpec& spec) {
  const auto& p = spec.params;
  std::string s = "m=" + to_string(p.m) + " f=" + to_string(p.f);
  switch (spec.kind) {
    case SystemKind::Stark:
    case SystemKind::FrozenHill: s += " g=" + to_string(p.g); break;
    case SystemKind::Generalized: s += " g=" + to_string(p.g) + " n=" + std::to_string(p.n); break;
    default: break;
  }
  return s;
}

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += to_string(v[i]);
  }
  return s;
}

json big_list(const std::vector<BigInt>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

void print_half(std::ostream& out, int index, const HalfSignReport& h) {
  out << "half " << index << ": ";
  if (h.has_barrier)
    out << "barrier u* = " << fmt17(h.u_barrier) << ", V* = " << fmt17(h.v_barrier);
  else
    out << "no barrier";
  out << "; bounded u-range (0, " << fmt17(h.u_max) << "]";
  out << "; V' " << to_string(h.dv) << "; V'' " << to_string(h.ddv) << '\n';
}

int report_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  switch (e.kind()) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::NotSeparable:
    case ErrorKind::UnsupportedShape:
    case ErrorKind::NoCriticalValues: return kInvalidInput;
    case ErrorKind::NoBoundedComponent: return kNoBoundedComponent;
    case ErrorKind::Numeric: return kNumericFailure;
  }
  return kNumericFailure;
}

}  // namespace

SystemSpec parse_system_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("spec must be a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string()) throw InvalidArgument("spec needs a string field 'kind'");

  SystemSpec spec;
  spec.kind = parse_system_kind(j["kind"].get<std::string>());
  if (j.contains("m")) spec.params.m = read_rational(j["m"], "m");
  if (j.contains("g")) spec.params.g = read_rational(j["g"], "g");
  if (j.contains("f")) spec.params.f = read_rational(j["f"], "f");
  if (j.contains("n")) {
    const auto& n = j["n"];
    if (!n.is_number_integer() || n.get<long long>() < 1 || n.get<long long>() > kMaxCoefficientOrder)
      throw InvalidArgument("field 'n' must be an integer in [1, " + std::to_string(kMaxCoefficientOrder) + "]");
    spec.params.n = static_cast<unsigned>(n.get<long long>());
  }
  if (j.contains("custom_G")) spec.params.custom_g = read_custom_g(j["custom_G"]);
  if (spec.kind == SystemKind::Custom && !j.contains("custom_G"))
    throw InvalidArgument("custom systems need a 'custom_G' list");
  return spec;
}

SystemSpec load_system_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read spec file '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_system_spec(ss.str());
}

void write_curve_csv(const MomentMapCurve& curve, std::ostream& os) {
  os << "a,b,I1,I2,dI2_dI1,d2I2_dI12\n";
  for (const auto& s : curve.samples) {
    os << fmt17(s.a) << ',' << fmt17(s.b) << ',' << fmt17(s.I1) << ',' << fmt17(s.I2) << ','
       << fmt17(s.slope) << ',' << fmt17(s.curvature) << '\n';
  }
}

void write_curve_json(const MomentMapCurve& curve, std::ostream& os) {
  json rows = json::array();
  for (const auto& s : curve.samples) rows.push_back({s.a, s.b, s.I1, s.I2, s.slope, s.curvature});
  json doc = {
      {"columns", {"a", "b", "I1", "I2", "dI2_dI1", "d2I2_dI12"}},
      {"m_level", curve.m_level},
      {"margin", curve.margin},
      {"rows", rows},
  };
  os << doc.dump(2) << '\n';
}

int cmd_coeffs(const CoeffsOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.n < 1 || opts.n > static_cast<long>(kMaxCoefficientOrder)) {
    err << "error: n must lie in [1, " << kMaxCoefficientOrder << "], got " << opts.n << '\n';
    return kInvalidInput;
  }
  const auto n = static_cast<unsigned>(opts.n);
  const auto table = ck_table(n);
  const auto pos = dk_positivity(table);
  const bool cn_is_one = table.c.back() == 1;

  if (opts.json) {
    json doc = {
        {"n", n},
        {"C", big_list(table.c)},
        {"d", big_list(table.d_small)},
        {"D", big_list(table.big_d)},
        {"D_index_range", {0, n - 1}},
        {"all_positive", pos.all_positive},
        {"cn_is_one", cn_is_one},
    };
    doc["first_violation"] = pos.first_violation ? json(*pos.first_violation) : json(nullptr);
    out << doc.dump(2) << '\n';
    return kOk;
  }
  out << "n: " << n << '\n';
  out << "C: " << join(table.c) << '\n';
  out << "d: " << join(table.d_small) << '\n';
  out << "D: " << join(table.big_d) << '\n';
  out << "D index range: k = 0.." << n - 1 << " (k = n would need C_{n+1}, which is undefined)\n";
  out << "all-positive: " << (pos.all_positive ? "true" : "false");
  if (pos.first_violation) out << " (first violation at k = " << *pos.first_violation << ')';
  out << '\n';
  out << "cn_is_one: " << (cn_is_one ? "true" : "false") << '\n';
  return kOk;
}

int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.samples < 3) {
    err << "error: --samples must be at least 3\n";
    return kInvalidInput;
  }
  if (!(opts.margin > 0.0 && opts.margin < 0.5)) {
    err << "error: --margin must lie in (0, 0.5)\n";
    return kInvalidInput;
  }
  if (!(opts.tolerance >= 0.0)) {
    err << "error: --tolerance must be non-negative\n";
    return kInvalidInput;
  }
  if (opts.format != "csv" && opts.format != "json") {
    err << "error: --format must be csv or json\n";
    return kInvalidInput;
  }
  if (opts.threads < 1) {
    err << "error: --threads must be at least 1\n";
    return kInvalidInput;
  }

  try {
    const auto spec = load_system_spec(opts.spec_path);
    const auto pot = build_system(spec.kind, spec.params);
    const auto sys = separate(pot, spec.params.f);

    out << "system: " << to_string(spec.kind) << '\n';
    out << "parameters: " << describe(spec) << '\n';
    out << "G(q1,q2) = " << pot.G.to_string("q1", "q2") << '\n';
    out << "V1(u) = " << sys.v1.to_string("u") << '\n';
    out << "V2(u) = " << sys.v2.to_string("u") << '\n';
    out << "level: kappa = " << to_string(sys.kappa) << ", m = " << to_string(sys.m_level) << '\n';

    const auto regime = classify_energy(sys, pot);
    out << "energy regime: " << to_string(regime) << '\n';
    if (spec.kind == SystemKind::FrozenHill || spec.kind == SystemKind::Generalized) {
      if (sign(pot.g) > 0) {
        const auto cv = critical_values(pot.n, to_double(pot.m), to_double(pot.g));
        out << "critical values: E1 = " << fmt17(cv.e1) << ", E2 = " << fmt17(cv.e2) << '\n';
      }
    }
    if (regime == EnergyRegime::AboveFirstCritical) {
      err << "error: energy above first critical value (H = -f with f = " << to_string(spec.params.f)
          << "); the bounded component is not separated\n";
      return kNoBoundedComponent;
    }

    VerdictOptions vo;
    vo.always_curve = opts.out.has_value();
    vo.tol_zero = opts.tolerance;
    vo.curve.n_samples = opts.samples;
    vo.curve.margin = opts.margin;
    vo.curve.threads = opts.threads;
    const auto v = verdict(sys, vo);

    print_half(out, 1, v.criterion.halves[0]);
    print_half(out, 2, v.criterion.halves[1]);
    out << "criterion 3: " << to_string(v.criterion.kind);
    if (!v.criterion.note.empty()) out << " (" << v.criterion.note << ')';
    out << '\n';
    if (v.curve) {
      int pos = 0, neg = 0, flat = 0;
      for (int s : v.curvature_signs) (s > 0 ? pos : s < 0 ? neg : flat)++;
      out << "curve: " << v.curve->samples.size() << " samples, curvature > 0 at " << pos << ", < 0 at " << neg
          << ", flat at " << flat << " (tolerance " << fmt_short(opts.tolerance) << ")\n";
    }
    if (!v.note.empty()) out << "note: " << v.note << '\n';
    out << "verdict: " << to_string(v.kind) << " (" << to_string(v.method) << ")\n";

    if (opts.out) {
      std::ofstream file(*opts.out, std::ios::binary);
      if (!file) {
        err << "error: cannot write '" << opts.out->string() << "'\n";
        return kInvalidInput;
      }
      if (opts.format == "json")
        write_curve_json(*v.curve, file);
      else
        write_curve_csv(*v.curve, file);
      out << "curve written: " << opts.out->string() << '\n';
    }
    return kOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_audit(const AuditOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.n_max < 1 || opts.n_max > static_cast<long>(kMaxCoefficientOrder)) {
    err << "error: --n-max must lie in [1, " << kMaxCoefficientOrder << "], got " << opts.n_max << '\n';
    return kInvalidInput;
  }
  if (opts.mc_samples < 100) {
    err << "error: --mc-samples must be at least 100\n";
    return kInvalidInput;
  }
  if (opts.threads < 1) {
    err << "error: --threads must be at least 1\n";
    return kInvalidInput;
  }

  bool ok = true;
  try {
    const auto ids = identity_audit(static_cast<unsigned>(opts.n_max));
    for (const auto& e : ids.entries) {
      out << "identity n=" << e.n << ": C = " << join(e.table_c)
          << " | brute force " << (e.coefficients_match ? "match" : "MISMATCH")
          << " | C_0=1 " << (e.c0_is_one ? "yes" : "NO") << " | C_n=1 " << (e.cn_is_one ? "yes" : "NO")
          << " | d_k " << (e.d_small_ok ? "ok" : "BAD") << " | C_n sum " << (e.cn_expression_ok ? "ok" : "BAD")
          << " | pullback identity " << (e.identity_holds ? "holds" : "FAILS")
          << " | D_k > 0 " << (e.positivity.all_positive ? "yes" : "no") << '\n';
    }
    out << "identity audit: " << ids.mismatches << " mismatches\n";
    ok = ok && ids.mismatches == 0;

    struct Reference {
      const char* name;
      HalfSystem half;
      double step;
      double tol;
    };
    // V(u) = u / 2 and V(u) = 2u - u^3, each with kappa = 1/2.
    std::vector<Reference> refs;
    refs.push_back({"harmonic", HalfSystem(Rational(1, 2), UnivariatePoly(std::vector<Rational>{0, Rational(1, 2)})), 1e-4, 1e-8});
    refs.push_back({"frozen-hill f=2 g=1", HalfSystem(Rational(1, 2), UnivariatePoly(std::vector<Rational>{0, 2, 0, -1})), 1e-5, 1e-6});

    for (const auto& r : refs) {
      const double top = std::isfinite(r.half.a_max) ? r.half.a_max : 2.0;
      std::vector<double> grid;
      for (int i = 1; i <= 9; ++i) grid.push_back(0.1 * i * top);
      const auto rep = fd_derivative_audit(r.half, grid, r.step);
      const bool pass = rep.worst() <= r.tol && rep.nan_sites == 0;
      out << "fd audit " << r.name << ": A' " << fmt17(rep.max_rel_A1) << ", A'' " << fmt17(rep.max_rel_A2)
          << ", I' " << fmt17(rep.max_rel_I1) << ", I'' " << fmt17(rep.max_rel_I2) << " (tolerance "
          << fmt_short(r.tol) << ", " << rep.sites << " sites) " << (pass ? "PASS" : "FAIL") << '\n';
      ok = ok && pass;
    }

    for (const auto& r : refs) {
      const double a = std::isfinite(r.half.a_max) ? 0.5 * r.half.a_max : 1.0;
      const auto est = mc_area(r.half, a, opts.mc_samples, opts.seed, opts.threads);
      const double exact = 2.0 * std::numbers::pi * action(r.half, a).I;
      const double dev = std::abs(est.value - exact);
      const bool pass = dev <= 3.0 * est.stderr_;
      out << "area " << r.name << " at a=" << fmt17(a) << ": quadrature " << fmt17(exact) << ", monte carlo "
          << fmt17(est.value) << " +- " << fmt17(est.stderr_) << " (" << est.n_samples << " samples, seed "
          << est.rng_seed << ") deviation " << fmt17(dev / est.stderr_) << " sigma " << (pass ? "PASS" : "FAIL")
          << '\n';
      ok = ok && pass;
    }
  } catch (const Error& e) {
    return report_error(e, err);
  }
  out << "audit: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kOk : kAuditFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Concave/convex toric domain analysis for separable Stark-type systems", "toric"};
  app.require_subcommand(1);

  CoeffsOptions co;
  auto* coeffs = app.add_subcommand("coeffs", "Print the C_k, d_k and D_k tables for order n");
  coeffs->add_option("--n", co.n, "Order n >= 1")->required();
  coeffs->add_flag("--json", co.json, "Emit a JSON document");

  AnalyzeOptions ao;
  auto add_analyze_flags = [&ao](CLI::App* sub) {
    sub->add_option("spec", ao.spec_path, "System spec file (JSON)")->required();
    sub->add_option("--samples", ao.samples, "Curve sample count")->capture_default_str();
    sub->add_option("--format", ao.format, "Curve file format: csv or json")->capture_default_str();
    sub->add_option("--margin", ao.margin, "Relative margin kept from the interval ends")->capture_default_str();
    sub->add_option("--tolerance", ao.tolerance, "Curvature zero band")->capture_default_str();
    sub->add_option("--threads", ao.threads, "Worker threads")->capture_default_str();
  };
  std::string analyze_out, curve_out;
  auto* analyze = app.add_subcommand("analyze", "Classify a system and optionally write its moment-map curve");
  add_analyze_flags(analyze);
  analyze->add_option("--out", analyze_out, "Curve output file");
  auto* curve = app.add_subcommand("curve", "Same as analyze, with --out required");
  add_analyze_flags(curve);
  curve->add_option("--out", curve_out, "Curve output file")->required();

  AuditOptions uo;
  auto* audit = app.add_subcommand("audit", "Run the built-in cross-checks");
  audit->add_option("--n-max", uo.n_max, "Largest order for the identity audit")->capture_default_str();
  audit->add_option("--mc-samples", uo.mc_samples, "Monte Carlo samples per area check")->capture_default_str();
  audit->add_option("--seed", uo.seed, "Monte Carlo seed")->capture_default_str();
  audit->add_option("--threads", uo.threads, "Worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  if (coeffs->parsed()) return cmd_coeffs(co, out, err);
  if (audit->parsed()) return cmd_audit(uo, out, err);
  if (analyze->parsed()) {
    if (!analyze_out.empty()) ao.out = analyze_out;
    return cmd_analyze(ao, out, err);
  }
  ao.out = curve_out;
  return cmd_analyze(ao, out, err);
}

}  // namespace toric::cli
