// Command-line front end: validation, curvature, derivations, soliton
// feasibility, classification, and parameter sweeps over the catalog
// families. Exit codes: 0 = success (verdicts never change it), 1 = bad
// parameters or an invalid input algebra, 2 = I/O or parse failure.

#include "ricsol/io.hpp"

#include <CLI11.hpp>

#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace ricsol;

constexpr double kPi = 3.141592653589793;

struct Options {
  std::optional<std::string> input;
  std::optional<std::string> family;
  std::optional<std::size_t> n;
  std::optional<double> theta;
  std::optional<double> theta_deg;
  std::optional<std::string> cos_s;
  std::optional<std::string> sin_s;
  std::optional<std::string> alpha_s;
  double tol = 1e-9;
  bool exact = false;
  std::optional<std::string> out;
  std::string format = "json";
  std::size_t n_min = 2, n_max = 2, theta_steps = 5;
};

void add_mode_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--tol", o.tol, "feasibility and rank tolerance (float mode)")
      ->capture_default_str();
  cmd->add_flag("--exact", o.exact, "exact rational arithmetic (angles as --cos/--sin pairs)");
  cmd->add_option("--out", o.out, "write output to this file instead of stdout");
}

void add_family_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--input", o.input, "algebra JSON file");
  cmd->add_option("--family", o.family,
                  "catalog family: solvable-model | lie-hypersurface | heisenberg | r-alpha");
  cmd->add_option("--n", o.n,
                  "family parameter: n for solvable-model/lie-hypersurface, odd dimension for "
                  "heisenberg");
  cmd->add_option("--theta", o.theta, "angle in radians, in [0, pi/2]");
  cmd->add_option("--theta-deg", o.theta_deg, "angle in degrees, in [0, 90]");
  cmd->add_option("--cos", o.cos_s, "cosine of the angle (rational like 3/5, or decimal)");
  cmd->add_option("--sin", o.sin_s, "sine of the angle (rational like 4/5, or decimal)");
  cmd->add_option("--alpha", o.alpha_s, "r-alpha parameter (rational or decimal)");
}

void write_output(const Options& o, const std::string& text) {
  if (!o.out) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(*o.out);
  if (!f) throw ParseError("cannot write " + *o.out);
  f << text;
  if (text.empty() || text.back() != '\n') f << '\n';
  if (!f) throw ParseError("cannot write " + *o.out);
}

template <class K>
K parse_cli_scalar(const std::string& s, const char* what) {
  if (auto r = parse_rational(s)) return FieldTraits<K>::from_ratio(*r);
  if constexpr (!FieldTraits<K>::exact) {
    double d;
    if (detail::parse_double_literal(s, d)) return d;
  }
  throw ParameterError(std::string(what) + ": unparseable value \"" + s + "\"" +
                       (FieldTraits<K>::exact ? " (exact mode needs integers or p/q)" : ""));
}

template <class K>
AnglePair<K> resolve_angle(const Options& o) {
  const int sources = (o.theta ? 1 : 0) + (o.theta_deg ? 1 : 0) + (o.cos_s || o.sin_s ? 1 : 0);
  if (sources > 1)
    throw ParameterError("give the angle once: --theta, --theta-deg, or --cos with --sin");
  if (o.cos_s || o.sin_s) {
    if (!o.cos_s || !o.sin_s) throw ParameterError("--cos and --sin must be given together");
    return angle_from_pair<K>(parse_cli_scalar<K>(*o.cos_s, "--cos"),
                              parse_cli_scalar<K>(*o.sin_s, "--sin"));
  }
  if constexpr (FieldTraits<K>::exact)
    throw ParameterError("exact mode requires the angle as a rational --cos/--sin pair");
  else {
    if (o.theta) return angle_from_radians<K>(*o.theta);
    if (o.theta_deg) return angle_from_radians<K>(*o.theta_deg * kPi / 180.0);
    throw ParameterError("missing angle: --theta, --theta-deg, or --cos/--sin");
  }
}

template <class K>
K tolerance(const Options& o) {
  if constexpr (FieldTraits<K>::exact)
    return K(0);
  else
    return o.tol;
}

std::size_t require_n(const Options& o) {
  if (!o.n) throw ParameterError("this family requires --n");
  return *o.n;
}

/// Resolves --input / --family to a metric algebra. File inputs are
/// validated and rejected (exit 1) when the axioms fail; catalog algebras
/// are correct by construction.
template <class K>
MetricLieAlgebra<K> resolve_algebra(const Options& o) {
  if (o.input && o.family) throw ParameterError("give either --input or --family, not both");
  if (o.input) {
    MetricLieAlgebra<K> m = load_algebra_file<K>(*o.input);
    ValidationReport<K> rep = validate(m, tolerance<K>(o));
    if (!rep.ok) {
      std::string detail = rep.messages.empty() ? "" : (": " + rep.messages.front());
      throw ParameterError("input algebra failed validation" + detail);
    }
    return m;
  }
  if (!o.family) throw ParameterError("an algebra source is required: --input or --family");

  const std::string& fam = *o.family;
  if (fam == "solvable-model") return build_solvable_model<K>(require_n(o)).metric_algebra;
  if (fam == "lie-hypersurface")
    return build_lie_hypersurface<K>(require_n(o), resolve_angle<K>(o)).metric_algebra;
  if (fam == "heisenberg") return build_heisenberg<K>(require_n(o));
  if (fam == "r-alpha") {
    if (!o.alpha_s) throw ParameterError("family r-alpha requires --alpha");
    return build_r_alpha<K>(parse_cli_scalar<K>(*o.alpha_s, "--alpha")).metric_algebra;
  }
  throw ParameterError("unknown family \"" + fam +
                       "\" (solvable-model | lie-hypersurface | heisenberg | r-alpha)");
}

enum class Command { Validate, Curvature, Derivations, Soliton, Classify, Sweep };

template <class K>
int run(Command cmd, const Options& o) {
  const K tol = tolerance<K>(o);
  switch (cmd) {
    case Command::Validate: {
      if (!o.input) throw ParameterError("validate requires --input");
      MetricLieAlgebra<K> m = load_algebra_file<K>(*o.input);
      write_output(o, validation_to_json(validate(m, tol)).dump(2));
      return 0;
    }
    case Command::Curvature: {
      MetricLieAlgebra<K> m = resolve_algebra<K>(o);
      write_output(o, curvature_to_json(curvature_report(m)).dump(2));
      return 0;
    }
    case Command::Derivations: {
      MetricLieAlgebra<K> m = resolve_algebra<K>(o);
      write_output(o, derivations_to_json(derivation_basis(m, tol)).dump(2));
      return 0;
    }
    case Command::Soliton: {
      MetricLieAlgebra<K> m = resolve_algebra<K>(o);
      write_output(o, soliton_to_json(soliton_solve(m, tol), m.algebra.basis_names()).dump(2));
      return 0;
    }
    case Command::Classify: {
      if (!o.n) throw ParameterError("classify requires --n");
      ClassificationRecord<K> rec = classify_hypersurface<K>(*o.n, resolve_angle<K>(o), tol);
      write_output(o, classification_to_json(rec).dump(2));
      return 0;
    }
    case Command::Sweep: {
      SweepManifest<K> sweep = run_sweep<K>(o.n_min, o.n_max, o.theta_steps, tol);
      if (o.format == "csv")
        write_output(o, manifest_to_csv(sweep));
      else
        write_output(o, manifest_to_json(sweep, utc_timestamp()).dump(2));
      return 0;
    }
  }
  return 1;  // unreachable
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvature, derivations and algebraic Ricci soliton feasibility of metric Lie "
               "algebras"};
  app.set_version_flag("--version", ricsol::kVersion);
  app.require_subcommand(1);

  Options o;
  Command cmd = Command::Validate;

  CLI::App* validate_cmd = app.add_subcommand("validate", "check the Lie and metric axioms");
  validate_cmd->add_option("--input", o.input, "algebra JSON file")->required();
  add_mode_flags(validate_cmd, o);
  validate_cmd->callback([&] { cmd = Command::Validate; });

  CLI::App* curvature_cmd =
      app.add_subcommand("curvature", "connection, Riemann and Ricci curvature");
  add_family_flags(curvature_cmd, o);
  add_mode_flags(curvature_cmd, o);
  curvature_cmd->callback([&] { cmd = Command::Curvature; });

  CLI::App* derivations_cmd = app.add_subcommand("derivations", "basis of the derivation algebra");
  add_family_flags(derivations_cmd, o);
  add_mode_flags(derivations_cmd, o);
  derivations_cmd->callback([&] { cmd = Command::Derivations; });

  CLI::App* soliton_cmd =
      app.add_subcommand("soliton", "decide Ric = c id + D over the derivation algebra");
  add_family_flags(soliton_cmd, o);
  add_mode_flags(soliton_cmd, o);
  soliton_cmd->callback([&] { cmd = Command::Soliton; });

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "full record for one hypersurface algebra s(theta)");
  add_family_flags(classify_cmd, o);
  add_mode_flags(classify_cmd, o);
  classify_cmd->callback([&] { cmd = Command::Classify; });

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "classification over an (n, theta) grid");
  sweep_cmd->add_option("--n-min", o.n_min, "smallest n (>= 2)")->capture_default_str();
  sweep_cmd->add_option("--n-max", o.n_max, "largest n")->capture_default_str();
  sweep_cmd->add_option("--theta-steps", o.theta_steps, "grid points on [0, pi/2] (>= 2)")
      ->capture_default_str();
  sweep_cmd->add_option("--format", o.format, "json | csv")->capture_default_str();
  add_mode_flags(sweep_cmd, o);
  sweep_cmd->callback([&] { cmd = Command::Sweep; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (o.format != "json" && o.format != "csv")
      throw ricsol::ParameterError("--format must be json or csv");
    return o.exact ? run<ricsol::Rational>(cmd, o) : run<double>(cmd, o);
  } catch (const ricsol::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ricsol::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ricsol::MetricError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ricsol::StructuralError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
