#include "sixj/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include "sixj/asymptotics.hpp"
#include "sixj/geometry.hpp"
#include "sixj/harness.hpp"
#include "sixj/scaled_float.hpp"
#include "sixj/symbols.hpp"

namespace sixj {

namespace {

struct Options {
  std::vector<std::string> spins;
  std::string kind = "super";
  std::int64_t k = 1;
  std::int64_t k_from = 1;
  std::int64_t k_to = 1;
  std::int64_t k_step = 1;
  std::string out_path;
  std::string format = "csv";
  std::string in_path = "-";
};


ScanKind scan_kind(const std::string& kind) { return kind == "su2" ? ScanKind::su2 : ScanKind::super; }

void add_spins(CLI::App* cmd, Options& o) {
  cmd->add_option("spins", o.spins, "j1 j2 j3 J1 J2 J3 as half-integers (3/2, 1.5, 2)")->expected(6)->required();
}

void add_kind(CLI::App* cmd, Options& o) {
  cmd->add_option("--kind", o.kind, "su2 or super")->check(CLI::IsMember({"su2", "super"}))->capture_default_str();
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
}

void print_value(std::ostream& out, const ExactSymbol& v) {
  const ScaledFloat f = exact_to_scaled(v);
  out << "value " << v << '\n';
  out << "coeff " << to_string(v.coeff()) << '\n';
  out << "radicand " << to_string(v.radicand()) << '\n';
  out << "float " << std::setprecision(17) << f.to_double() << '\n';
  out << "mantissa " << f.mantissa() << '\n';
  out << "exp2 " << f.exp2() << '\n';
}

void run_eval(const Options& o, std::ostream& out) {
  const SpinSextuple s = SpinSextuple::parse(o.spins).scaled(o.k);
  out << "symbol " << format(s) << '\n';
  if (o.kind == "su2") {
    print_value(out, sixj_standard_exact(s));
  } else {
    const SuperEvaluation ev = sixj_super_evaluate(s);
    out << "parity " << to_string(ev.parity) << '\n';
    print_value(out, ev.value);
  }
}

void run_classify(const Options& o, std::ostream& out) {
  const SpinSextuple s = SpinSextuple::parse(o.spins);
  const TriangleData t = triangle_sums(s);
  check_admissible(t, Algebra::osp12);
  const Parity parity = classify_parity(t);
  out << to_string(parity) << '\n';
  for (std::size_t i = 0; i < 4; ++i) out << "v" << i + 1 << ' ' << format(t.v[i]) << '\n';
  for (std::size_t j = 0; j < 3; ++j) out << "p" << j + 1 << ' ' << format(t.p[j]) << '\n';
  out << "su2_admissible " << (is_admissible(s, Algebra::su2) ? "yes" : "no") << '\n';
  if (parity == Parity::beta) {
    const BetaDecomposition bd = beta_decompose(s, t);
    out << "jstar " << spin_name(bd.jstar_index) << " = " << format(bd.jstar) << '\n';
    out << "Jstar " << spin_name(column_companion(bd.jstar_index)) << " = " << format(bd.Jstar) << '\n';
  }
}

void run_geometry(const Options& o, std::ostream& out) {
  const SpinSextuple s = SpinSextuple::parse(o.spins);
  const TetGeometry g = tet_from_spins(s);
  out << std::setprecision(17);
  out << "cayley_menger " << to_string(cayley_menger(s)) << '\n';
  out << "volume " << g.volume << '\n';
  for (std::size_t i = 0; i < 6; ++i) {
    out << "theta_ext_" << spin_name(i) << ' ' << g.theta_ext[i] << '\n';
  }
}

void run_asym(const Options& o, std::ostream& out) {
  const SpinSextuple s = SpinSextuple::parse(o.spins);
  check_admissible(s, o.kind == "su2" ? Algebra::su2 : Algebra::osp12);
  const TetGeometry g = tet_from_spins(s);
  const AsymptoticResult a = o.kind == "su2" ? asym_standard(s, o.k, g) : asym_super(s, o.k, g);
  out << std::setprecision(17);
  out << "formula " << to_string(a.formula) << '\n';
  out << "k " << o.k << '\n';
  out << "amplitude " << a.amplitude << '\n';
  out << "angle " << a.angle << '\n';
  out << "value " << a.value << '\n';
}

void emit(const Options& o, const std::vector<ScanRecord>& records, std::ostream& os) {
  if (o.format == "json") {
    write_json(os, records);
  } else {
    write_csv(os, records);
  }
}

void run_scan(const Options& o, std::ostream& out) {
  const SpinSextuple s = SpinSextuple::parse(o.spins);
  const auto records = scan(s, scan_kind(o.kind), k_range(o.k_from, o.k_to, o.k_step));
  if (o.out_path.empty()) {
    emit(o, records, out);
    return;
  }
  std::ofstream file(o.out_path);
  if (!file) throw Error(ErrorKind::Io, "cannot open " + o.out_path);
  emit(o, records, file);
  if (!file) throw Error(ErrorKind::Io, "write failed for " + o.out_path);
}

void run_slope(const Options& o, std::ostream& out) {
  std::vector<ScanRecord> records;
  auto load = [&](std::istream& is) { records = o.format == "json" ? read_json(is) : read_csv(is); };
  if (o.in_path == "-") {
    load(std::cin);
  } else {
    std::ifstream file(o.in_path);
    if (!file) throw Error(ErrorKind::Io, "cannot open " + o.in_path);
    load(file);
  }
  const SlopeFit fit = envelope_slope(records);
  out << std::setprecision(17);
  out << "slope " << fit.slope << '\n';
  out << "intercept " << fit.intercept << '\n';
  out << "r_squared " << fit.r_squared << '\n';
  out << "n_points " << fit.n_points << '\n';
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
      return 2;
    case ErrorKind::TriangleViolation:
    case ErrorKind::IntegralityViolation:
    case ErrorKind::ParityViolation:
    case ErrorKind::ShiftViolation:
      return 3;
    case ErrorKind::NonEuclidean:
    case ErrorKind::DegenerateFactor:
      return 4;
    default:
      return 1;
  }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and asymptotic 6j and super 6j symbols", "sixj"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "exact symbol: canonical coeff, radicand and float");
  add_spins(eval, o);
  add_kind(eval, o);
  eval->add_option("--k", o.k, "scale all spins by k")->check(CLI::PositiveNumber)->capture_default_str();

  auto* classify = app.add_subcommand("classify", "parity and triangle data");
  add_spins(classify, o);

  auto* geometry = app.add_subcommand("geometry", "tetrahedron volume and exterior dihedral angles");
  add_spins(geometry, o);

  auto* asym = app.add_subcommand("asym", "large-k asymptotic value at a given k");
  add_spins(asym, o);
  add_kind(asym, o);
  asym->add_option("--k", o.k, "scale factor")->check(CLI::PositiveNumber)->required();

  auto* scan_cmd = app.add_subcommand("scan", "exact against asymptotic over a range of k");
  add_spins(scan_cmd, o);
  add_kind(scan_cmd, o);
  scan_cmd->add_option("--k-from", o.k_from)->check(CLI::PositiveNumber)->required();
  scan_cmd->add_option("--k-to", o.k_to)->check(CLI::PositiveNumber)->required();
  scan_cmd->add_option("--k-step", o.k_step)->check(CLI::PositiveNumber)->capture_default_str();
  scan_cmd->add_option("--out", o.out_path, "output file instead of stdout");
  add_format(scan_cmd, o);

  auto* slope = app.add_subcommand("slope", "log-log envelope slope of a scan file");
  slope->add_option("file", o.in_path, "scan output, - for stdin")->capture_default_str();
  add_format(slope, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) run_eval(o, out);
    if (*classify) run_classify(o, out);
    if (*geometry) run_geometry(o, out);
    if (*asym) run_asym(o, out);
    if (*scan_cmd) run_scan(o, out);
    if (*slope) run_slope(o, out);
  } catch (const ScanError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace sixj
