// mfvar: batch front door to the library. Every subcommand writes one table
// (CSV or JSON) to stdout or --out.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "mfvar/mfvar.hpp"

namespace {

using mfvar::cplx;
using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::string command;
  std::string spec = "d2";
  std::string alpha;  // "RE,IM"; empty selects the registry default
  std::uint64_t N = 10000;
  double Q = 0;  // 0 selects a per-command default
  double K = 10;
  double Q0 = 0;
  double delta = 0.1;
  double eps = 0.05;
  double C = 11;
  double D = 50;
  double A = 0;
  double B = 0;
  double V = 5;
  double T = 8;
  int J = 4;
  std::uint64_t q = 1;
  std::uint64_t M = 0;
  std::uint64_t rows = 0;
  double x = 0;
  std::optional<double> beta;
  std::optional<double> kappa;
  std::string kind = "hs";
  bool quick = false;
  std::string out;
  std::string format = "csv";
};

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::string name;
  std::vector<std::pair<std::string, Cell>> summary;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return mfvar::fmt15(*d);
  return std::get<std::string>(c);
}

ordered_json cell_json(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return mfvar::fmt15(*d);
    return mfvar::round15(*d);
  }
  return std::get<std::string>(c);
}

Cell I(std::uint64_t v) { return static_cast<std::int64_t>(v); }
Cell S(bool b) { return std::string(b ? "true" : "false"); }

std::vector<std::pair<std::string, std::string>> config_echo(const RunConfig& cfg, const mfvar::RegisteredSpec& rs) {
  std::vector<std::pair<std::string, std::string>> e = {
      {"command", cfg.command},
      {"spec", cfg.spec},
      {"alpha", mfvar::format_alpha(rs.params.alpha)},
      {"beta", mfvar::fmt15(rs.params.beta)},
      {"kappa", mfvar::fmt15(rs.params.kappa)},
      {"N", std::to_string(cfg.N)},
      {"Q", mfvar::fmt15(cfg.Q)},
      {"K", mfvar::fmt15(cfg.K)},
      {"Q0", mfvar::fmt15(cfg.Q0)},
      {"delta", mfvar::fmt15(cfg.delta)},
      {"eps", mfvar::fmt15(cfg.eps)},
      {"C", mfvar::fmt15(cfg.C)},
      {"D", mfvar::fmt15(cfg.D)},
      {"A", mfvar::fmt15(cfg.A)},
      {"B", mfvar::fmt15(cfg.B)},
      {"V", mfvar::fmt15(cfg.V)},
      {"J", std::to_string(cfg.J)},
      {"q", std::to_string(cfg.q)},
      {"threads", std::to_string(mfvar::worker_count())},
  };
  if (cfg.command == "audit") e.emplace_back("kind", cfg.kind);
  return e;
}

void emit(std::ostream& os, const RunConfig& cfg, const mfvar::RegisteredSpec& rs, const Table& t) {
  const std::string schema = "mfvar." + t.name + "/" + std::to_string(kSchemaVersion);
  if (cfg.format == "json") {
    ordered_json doc;
    doc["schema"] = schema;
    ordered_json conf = ordered_json::object();
    for (const auto& [k, v] : config_echo(cfg, rs)) conf[k] = v;
    doc["config"] = conf;
    ordered_json summ = ordered_json::object();
    for (const auto& [k, v] : t.summary) summ[k] = cell_json(v);
    doc["summary"] = summ;
    doc["columns"] = t.columns;
    ordered_json rows = ordered_json::array();
    for (const auto& r : t.rows) {
      ordered_json row = ordered_json::array();
      for (const auto& c : r) row.push_back(cell_json(c));
      rows.push_back(row);
    }
    doc["rows"] = rows;
    os << doc.dump(2) << "\n";
    return;
  }
  mfvar::CsvWriter w(os);
  w.comment("schema=" + schema);
  for (const auto& [k, v] : config_echo(cfg, rs)) w.comment("config " + k + "=" + v);
  for (const auto& [k, v] : t.summary) w.comment("summary " + k + "=" + cell_text(v));
  w.row(t.columns);
  for (const auto& r : t.rows) {
    std::vector<std::string> fields;
    for (const auto& c : r) fields.push_back(cell_text(c));
    w.row(fields);
  }
}

std::shared_ptr<const mfvar::FactorTable> table_for(std::uint64_t N) {
  return std::make_shared<const mfvar::FactorTable>(mfvar::build_factor_table(std::max<std::uint64_t>(N, 2)));
}

std::uint64_t q_or(const RunConfig& cfg, double fallback) {
  return static_cast<std::uint64_t>(std::floor(cfg.Q > 0 ? cfg.Q : fallback));
}

Table cmd_sieve(const RunConfig& cfg, const mfvar::RegisteredSpec& rs) {
  const auto ft = table_for(cfg.N);
  const auto f = mfvar::sieve_multiplicative(rs.spec, ft, cfg.N);
  Table t{"sieve", {}, {"n", "re", "im"}, {}};
  std::uint64_t primes = 0;
  for (auto p : ft->primes) primes += p <= cfg.N;
  t.summary = {{"prime_count", I(primes)}};
  const std::uint64_t rows = cfg.rows > 0 ? std::min(cfg.rows, cfg.N) : cfg.N;
  for (std::uint64_t n = 1; n <= rows; ++n) t.rows.push_back({I(n), f.values[n].real(), f.values[n].imag()});
  return t;
}

Table cmd_twisted(const RunConfig& cfg, const mfvar::RegisteredSpec& rs) {
  const auto f = mfvar::sieve_multiplicative(rs.spec, table_for(cfg.N), cfg.N);
  const std::uint64_t Q = q_or(cfg, 10);
  mfvar::require(Q >= 1, "twisted: need Q >= 1");
  Table t{"twisted", {}, {"q", "squarefree", "sum_re", "sum_im", "factored_re", "factored_im"}, {}};
  for (std::uint64_t q = 1; q <= Q; ++q) {
    const cplx s = mfvar::twisted_sum(f, q, cfg.N);
    std::vector<Cell> row = {I(q), S(mfvar::is_squarefree(q)), s.real(), s.imag()};
    if (mfvar::is_squarefree(q)) {
      const cplx g = mfvar::twisted_sum_factored(f, q, cfg.N);
      row.insert(row.end(), {g.real(), g.imag()});
    } else {
      row.insert(row.end(), {std::string(), std::string()});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table cmd_variance(const RunConfig& cfg, const mfvar::RegisteredSpec& rs) {
  const auto f = mfvar::sieve_multiplicative(rs.spec, table_for(cfg.N), cfg.N);
  const std::uint64_t Q = q_or(cfg, std::sqrt(static_cast<double>(cfg.N)));
  const auto vb = mfvar::variance_progressions(f, Q, cfg.N);
  Table t{"variance", {}, {"q", "per_q", "cumulative"}, {}};
  t.summary = {{"Q", I(vb.Q)}, {"total", vb.total}, {"parseval", vb.parseval}, {"ratio", vb.ratio}};
  mfvar::CompensatedReal cum;
  for (std::uint64_t q = 1; q <= Q; ++q) {
    cum += vb.per_q[q];
    t.rows.push_back({I(q), vb.per_q[q], cum.value()});
  }
  return t;
}

mfvar::ArcConfig arc_config(const RunConfig& cfg) {
  const double Nd = static_cast<double>(cfg.N);
  mfvar::ArcConfig ac;
  ac.K = cfg.K;
  ac.Q = cfg.Q > 0 ? cfg.Q : std::pow(Nd, 0.75);
  ac.Q0 = cfg.Q0 > 0 ? cfg.Q0 : Nd * std::log(Nd) / ac.Q;
  ac.M = cfg.M > 0 ? cfg.M : mfvar::default_grid_size(cfg.N);
  return ac;
}

std::string joined(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

Table cmd_arcs(const RunConfig& cfg, const mfvar::RegisteredSpec& rs) {
  const auto f = mfvar::sieve_multiplicative(rs.spec, table_for(cfg.N), cfg.N);
  const auto ac = arc_config(cfg);
  const auto arcs = mfvar::arc_integrals(mfvar::view(f), cfg.N, ac);
  const double parseval = mfvar::parseval_sum(mfvar::view(f), cfg.N);
  Table t{"arcs", {}, {"arc", "integral", "points"}, {}};
  t.summary = {{"K", ac.K},       {"Q", ac.Q},
               {"Q0", ac.Q0},     {"M", I(ac.M)},
               {"parseval", parseval}, {"range_violations", joined(ac.violations(cfg.N))}};
  t.rows.push_back({std::string("major"), arcs.major, I(arcs.major_points)});
  t.rows.push_back({std::string("minor"), arcs.minor, I(arcs.M - arcs.major_points)});
  t.rows.push_back({std::string("total"), arcs.major + arcs.minor, I(arcs.M)});
  return t;
}

Table cmd_meanvalue(const RunConfig& cfg, const mfvar::RegisteredSpec& rs) {
  const double x = cfg.x > 0 ? cfg.x : static_cast<double>(cfg.N);
  mfvar::require(x >= 2, "meanvalue: need x >= 2");
  const auto xi = static_cast<std::uint64_t>(std::floor(x));
  const auto co = mfvar::lambda_coeffs(rs.spec, rs.params.alpha, cfg.q, cfg.N, cfg.J);
  const cplx pred = cfg.q == 1 ? mfvar::mean_value_prediction(co, x) : mfvar::coprime_mean_value_prediction(co, x);
  const auto f = mfvar::sieve_multiplicative(rs.spec, table_for(xi), xi);
  const cplx direct = mfvar::direct_mean_value(f, xi, cfg.q);
  Table t{"meanvalue", {}, {"x", "q", "predicted_re", "predicted_im", "direct_re", "direct_im", "rel_error"}, {}};
  t.rows.push_back({x, I(cfg.q), pred.real(), pred.imag(), direct.real(), direct.imag(), mfvar::relative_error(pred, direct)});
  return t;
}

Table cmd_coeffs(const RunConfig& cfg, const mfvar::RegisteredSpec& rs, ordered_json* record) {
  const auto co = mfvar::lambda_coeffs(rs.spec, rs.params.alpha, cfg.q, cfg.N, cfg.J);
  const double abs_c0 = std::abs(co.c[0]);
  const bool c0_ok = std::pow(std::log(static_cast<double>(cfg.N)), 1.0 - cfg.delta) * abs_c0 >= 1.0;
  Table t{"coeffs", {}, {"j", "c_re", "c_im", "lambda_re", "lambda_im"}, {}};
  t.summary = {{"abs_c0", abs_c0}, {"c0_condition_holds", S(c0_ok)}};
  for (int j = 0; j <= co.J; ++j) {
    t.rows.push_back({static_cast<std::int64_t>(j), co.c[j].real(), co.c[j].imag(), co.lambda[j].real(), co.lambda[j].imag()});
  }
  if (record) {
    auto pair = [](cplx z) { return ordered_json::array({mfvar::round15(z.real()), mfvar::round15(z.imag())}); };
    ordered_json& r = *record;
    r["spec"] = co.spec;
    r["alpha"] = pair(co.alpha);
    r["N"] = co.N;
    r["J"] = co.J;
    r["c"] = ordered_json::array();
    r["lambda"] = ordered_json::array();
    for (int j = 0; j <= co.J; ++j) {
      r["c"].push_back(pair(co.c[j]));
      r["lambda"].push_back(pair(co.lambda[j]));
    }
    r["q"] = co.q;
    r["abs_c0"] = mfvar::round15(abs_c0);
    r["c0_condition_holds"] = c0_ok;
  }
  return t;
}

Table audit_hs(const RunConfig& cfg, const mfvar::RegisteredSpec& rs) {
  const auto f = mfvar::sieve_multiplicative(rs.spec, table_for(cfg.N), cfg.N);
  const auto ac = arc_config(cfg);
  mfvar::HSAuditParams hp;
  hp.alpha = rs.params.alpha;
  hp.delta = cfg.delta;
  hp.T = cfg.T;
  hp.C = cfg.C;
  const auto r = mfvar::hs_inequality_audit(f, cfg.N, std::floor(ac.Q), ac, hp);
  Table t{"audit_hs", {}, {"quantity", "value"}, {}};
  t.summary = {{"holds_raw", S(r.holds_raw)},
               {"holds_slack", S(r.holds_slack)},
               {"cs_holds", S(r.cs_holds)},
               {"chain_holds", S(r.chain_holds)},
               {"range_violations", joined(r.violations)}};
  const std::vector<std::pair<std::string, double>> q = {
      {"Q", r.Q},
      {"Q0", r.Q0},
      {"K", r.K},
      {"M", static_cast<double>(r.M)},
      {"V", r.V},
      {"minor", r.minor},
      {"major", r.major},
      {"parseval", r.parseval},
      {"q_minor", r.q_minor},
      {"q_minor_slack", r.q_minor_slack},
      {"err_grid", r.err_grid},
      {"err_tail", r.err_tail},
      {"bound_raw", r.bound_raw},
      {"bound_slack", r.bound_slack},
      {"R", r.R},
      {"mixed_minor", r.mixed_minor},
      {"tilde_minor", r.tilde_minor},
      {"cs_bound", r.cs_bound},
      {"tilde_parseval", r.tilde_parseval},
      {"tilde_undamped", r.tilde_undamped},
  };
  for (const auto& [k, v] : q) t.rows.push_back({k, v});
  return t;
}

Table audit_ratio(const RunConfig& cfg, const mfvar::RegisteredSpec& rs) {
  std::vector<std::uint64_t> grid;
  for (std::uint64_t n = 1024; n <= cfg.N; n *= 2) grid.push_back(n);
  mfvar::require(!grid.empty(), "audit ratio: need N >= 1024");
  const auto rows = mfvar::ratio_experiment(rs.spec, rs.params.alpha, rs.params.beta, grid, 0.5 + cfg.delta);
  Table t{"audit_ratio", {}, {"N", "Q", "V", "q_parseval", "ratio", "predicted"}, {}};
  for (const auto& r : rows) t.rows.push_back({I(r.N), I(r.Q), r.V, r.q_parseval, r.ratio, r.predicted});
  return t;
}

Table audit_mertens(const RunConfig& cfg, const mfvar::RegisteredSpec& rs) {
  const auto r = mfvar::mertens_theta_sum(rs.spec, rs.params.alpha, static_cast<double>(cfg.N), cfg.delta, cfg.V,
                                          rs.params.beta);
  Table t{"audit_mertens", {}, {"lhs", "comparison", "ratio", "window_low", "window_high", "prime_count", "empty"}, {}};
  t.rows.push_back({r.lhs, r.comparison, r.ratio, r.window_low, r.window_high, I(r.prime_count), S(r.empty)});
  return t;
}

Table audit_kappa(const RunConfig& cfg, const mfvar::RegisteredSpec& rs) {
  const auto f = mfvar::sieve_multiplicative(rs.spec, table_for(cfg.N), cfg.N);
  const auto r = mfvar::check_kappa_bound(f, rs.params.kappa);
  Table t{"audit_kappa", {}, {"violator"}, {}};
  t.summary = {{"max_ratio", r.max_ratio}, {"violators", I(r.violators.size())}, {"holds", S(r.holds())}};
  const std::uint64_t rows = cfg.rows > 0 ? cfg.rows : 100;
  for (std::size_t i = 0; i < r.violators.size() && i < rows; ++i) t.rows.push_back({I(r.violators[i])});
  return t;
}

Table audit_admissible(const RunConfig& cfg, const mfvar::RegisteredSpec& rs) {
  mfvar::AdmissibilityParams ap;
  ap.C = cfg.C;
  ap.A = cfg.A;
  ap.B = cfg.B;
  ap.D = cfg.D;
  ap.eps = cfg.eps;
  ap.delta = cfg.delta;
  ap.N = cfg.N;
  ap.KQ0 = cfg.K * cfg.Q0;
  ap.kappa = rs.params.kappa;
  ap.A1 = rs.params.A1;
  const auto r = mfvar::q_admissible(cfg.q, ap, rs.spec);
  auto opt = [](const std::optional<std::uint64_t>& v) -> Cell { return v ? I(*v) : Cell(std::string()); };
  Table t{"audit_admissible", {}, {"condition", "status"}, {}};
  t.summary = {{"admissible", S(r.admissible())},
               {"t", opt(r.t)},
               {"s", opt(r.s)},
               {"s_prime", opt(r.s_prime)},
               {"a_prime_sum", r.a_prime_sum},
               {"a_prime_budget", r.a_prime_budget},
               {"a_sum", r.a_sum}};
  const std::vector<std::pair<std::string, mfvar::CondStatus>> conds = {
      {"1", r.c1},   {"2", r.c2},   {"3a", r.c3a}, {"3b", r.c3b}, {"3c", r.c3c}, {"3d", r.c3d},
      {"4", r.c4},   {"5a", r.c5a}, {"5b", r.c5b}, {"5c", r.c5c}, {"6", r.c6},
  };
  for (const auto& [k, v] : conds) t.rows.push_back({k, std::string(mfvar::to_string(v))});
  return t;
}

Table audit_tail(const RunConfig& cfg, const mfvar::RegisteredSpec& rs) {
  const auto r = mfvar::tail_sums(cfg.q, rs.params.kappa);
  Table t{"audit_tail", {}, {"series_34", "series_1", "ratio1", "ratio2"}, {}};
  t.rows.push_back({r.series_34, r.series_1, r.ratio1, r.ratio2});
  return t;
}

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
  const auto run = mfvar::run_acceptance(cfg.quick);
  for (const auto& c : run.criteria) os << mfvar::format_result_line(c) << "\n";
  for (const auto& n : run.notes) os << "INFO " << n << "\n";
  std::size_t passed = 0;
  for (const auto& c : run.criteria) passed += c.passed;
  os << passed << "/" << run.criteria.size() << " criteria passed\n";
  return run.all_passed() ? 0 : 1;
}

void add_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--spec", cfg.spec, "function name: d_alpha:RE,IM, d<k>, two_squares, d0, a*b, a^e");
  sub->add_option("--alpha", cfg.alpha, "alpha as RE,IM (default from the function registry)");
  sub->add_option("--beta", cfg.beta, "override the registry beta");
  sub->add_option("--kappa", cfg.kappa, "override the registry kappa");
  // Accepts 1e6-style input; the value must be a positive integer.
  sub->add_option_function<double>(
      "--N",
      [&cfg](double v) {
        if (!(v >= 1) || v != std::floor(v) || v > 1.8e19) throw CLI::ValidationError("--N", "must be a positive integer");
        cfg.N = static_cast<std::uint64_t>(v);
      },
      "length / truncation point");
  sub->add_option("--Q", cfg.Q, "modulus range");
  sub->add_option("--K", cfg.K, "arc width parameter");
  sub->add_option("--Q0", cfg.Q0, "major-arc denominator scale");
  sub->add_option("--M", cfg.M, "FFT grid size (power of two)");
  sub->add_option("--delta", cfg.delta);
  sub->add_option("--eps", cfg.eps);
  sub->add_option("--C", cfg.C);
  sub->add_option("--D", cfg.D);
  sub->add_option("--A", cfg.A, "0 selects the derived default");
  sub->add_option("--B", cfg.B, "0 selects the derived default");
  sub->add_option("--V", cfg.V);
  sub->add_option("--T", cfg.T, "smooth-weight sharpness");
  sub->add_option("--J", cfg.J, "number of coefficients beyond c_0");
  sub->add_option("--q", cfg.q, "single modulus")->check(CLI::PositiveNumber);
  sub->add_option("--x", cfg.x, "mean-value cutoff (default N)");
  sub->add_option("--rows", cfg.rows, "row cap for long tables");
  sub->add_option("--out", cfg.out, "output path (default stdout)");
  sub->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"mfvar: multiplicative functions in arithmetic progressions"};
  app.require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"sieve", "tabulate f(n) for n <= N"},
      {"twisted", "Ramanujan-twisted sums for q <= Q"},
      {"variance", "V(Q, f) with the per-modulus breakdown"},
      {"arcs", "major/minor arc integrals of the exponential sum"},
      {"meanvalue", "Selberg-Delange prediction against the direct sum"},
      {"coeffs", "c_j and lambda_j coefficients"},
      {"audit", "hs | ratio | mertens | kappa | admissible | tail"},
      {"verify", "acceptance suite"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_flags(sub, cfg);
    if (name == "audit") {
      sub->add_option("--kind", cfg.kind)->check(CLI::IsMember({"hs", "ratio", "mertens", "kappa", "admissible", "tail"}));
    }
    if (name == "verify") sub->add_flag("--quick", cfg.quick, "reduced-scale identity suites only");
    sub->callback([&cfg, n = name] { cfg.command = n; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out, std::ios::binary);
    if (!file) {
      std::cerr << "mfvar: cannot open " << cfg.out << "\n";
      return 2;
    }
  }
  std::ostream& os = cfg.out.empty() ? std::cout : file;

  try {
    if (cfg.command == "verify") return cmd_verify(cfg, os);

    mfvar::RegisteredSpec rs = mfvar::parse_spec(cfg.spec);
    if (!cfg.alpha.empty()) rs.params.alpha = mfvar::parse_complex(cfg.alpha);
    if (cfg.beta) rs.params.beta = *cfg.beta;
    if (cfg.kappa) rs.params.kappa = *cfg.kappa;

    Table t;
    if (cfg.command == "sieve") {
      t = cmd_sieve(cfg, rs);
    } else if (cfg.command == "twisted") {
      t = cmd_twisted(cfg, rs);
    } else if (cfg.command == "variance") {
      t = cmd_variance(cfg, rs);
    } else if (cfg.command == "arcs") {
      t = cmd_arcs(cfg, rs);
    } else if (cfg.command == "meanvalue") {
      t = cmd_meanvalue(cfg, rs);
    } else if (cfg.command == "coeffs") {
      ordered_json record;
      t = cmd_coeffs(cfg, rs, cfg.format == "json" ? &record : nullptr);
      if (cfg.format == "json") {
        // The coefficient record keeps its own flat layout; config is echoed alongside.
        ordered_json doc;
        doc["schema"] = "mfvar.coeffs/" + std::to_string(kSchemaVersion);
        ordered_json conf = ordered_json::object();
        for (const auto& [k, v] : config_echo(cfg, rs)) conf[k] = v;
        doc["config"] = conf;
        for (auto it = record.begin(); it != record.end(); ++it) doc[it.key()] = it.value();
        os << doc.dump(2) << "\n";
        return 0;
      }
    } else if (cfg.kind == "hs") {
      t = audit_hs(cfg, rs);
    } else if (cfg.kind == "ratio") {
      t = audit_ratio(cfg, rs);
    } else if (cfg.kind == "mertens") {
      t = audit_mertens(cfg, rs);
    } else if (cfg.kind == "kappa") {
      t = audit_kappa(cfg, rs);
    } else if (cfg.kind == "admissible") {
      t = audit_admissible(cfg, rs);
    } else {
      t = audit_tail(cfg, rs);
    }
    emit(os, cfg, rs, t);
    return 0;
  } catch (const mfvar::CapacityError& e) {
    std::cerr << "mfvar: capacity: " << e.what() << "\n";
    return 3;
  } catch (const mfvar::PreconditionError& e) {
    std::cerr << "mfvar: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "mfvar: invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "mfvar: error: " << e.what() << "\n";
    return 1;
  }
}
