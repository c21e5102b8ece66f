#include "bandinv/cli.hpp"

#include <cmath>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "bandinv/error.hpp"
#include "bandinv/io.hpp"
#include "bandinv/reconstruct.hpp"
#include "bandinv/springchain.hpp"

namespace bandinv::cli {

namespace {

template <class T>
std::string join(const std::vector<T>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    if constexpr (std::is_floating_point_v<T>)
      s += io::format_double(v[i]);
    else
      s += std::to_string(v[i]);
  }
  return s;
}

std::string profile_line(const DegenerationProfile& p) {
  return "m = [" + join(p.m, ",") + "], j0 = " + std::to_string(p.j0);
}

void check_caps(std::size_t n, std::size_t big_n) {
  if (n > kMaxBand || big_n > kMaxDim)
    throw Error(Errc::InvalidArgument, "this tool handles n <= " + std::to_string(kMaxBand) + " and N <= " +
                                           std::to_string(kMaxDim));
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    io::write_file(path, text);
}

struct Options {
  std::string input;
  std::string output;
  std::string t_file;
  std::string t_out;
  double tol_zero = 1e-8;
  double tol = 1e-8;
  double perturb = 0.0;
  bool verify_band = false;
  bool summary = false;
  bool freq = false;
  bool matrix = false;
  bool cf = false;
};

int cmd_validate(const Options& o, std::ostream& out) {
  const BandMatrix a = io::parse_matrix(io::read_file(o.input));
  check_caps(a.half_bandwidth(), a.dim());
  DegenerationProfile p;
  try {
    p = validate_band(a);
  } catch (const Error& e) {
    // Everything validate_band rejects is a class violation here.
    if (e.code() == Errc::InvalidArgument) throw Error(Errc::MembershipViolation, e.what());
    throw;
  }
  out << profile_line(p) << "\n";
  if (p.empty_run) out << "warning: a constrained diagonal has an empty positive run\n";
  return kOk;
}

int cmd_direct(const Options& o, std::ostream& out) {
  const BandMatrix a = io::parse_matrix(io::read_file(o.input));
  check_caps(a.half_bandwidth(), a.dim());
  validate_band(a);
  SpectralFunction sigma = spectral_function_identity(a);
  if (!o.t_file.empty()) sigma = transform_sigma(sigma, io::parse_tinit(io::read_file(o.t_file)));
  emit(o.output, io::dump_sigma(sigma), out);
  if (o.summary) {
    const DenseMatrix mass = total_mass(sigma);
    const DenseMatrix dev = mass - DenseMatrix::identity(sigma.n());
    out << "jumps: " << sigma.dim() << "\n";
    for (std::size_t i = 0; i < mass.rows(); ++i) {
      std::vector<double> row(mass.cols());
      for (std::size_t j = 0; j < mass.cols(); ++j) row[j] = mass(i, j);
      out << (i == 0 ? "sum of jumps: [" : "              [") << join(row, ", ") << "]\n";
    }
    out << "deviation from identity: " << io::format_double(dev.max_abs()) << "\n";
  }
  return kOk;
}

void diagnostics(const Reconstruction& r, std::ostream& out) {
  const GSOutput& gs = r.diagnostics;
  out << "basis heights: [" << join(gs.pheights, ",") << "]\n";
  out << "generator heights: [" << join(gs.qheights, ",") << "]\n";
  out << "height sum: " << gs.height_sum() << " (expected " << gs.expected_height_sum() << ")\n";
  out << "iterations: " << gs.iterations << "\n";
  out << profile_line(r.profile) << "\n";
  if (r.profile.empty_run) out << "warning: a constrained diagonal has an empty positive run\n";
}

int cmd_inverse(const Options& o, std::ostream& out) {
  const SpectralFunction sigma = io::parse_sigma(io::read_file(o.input));
  check_caps(sigma.n(), sigma.dim());
  const Reconstruction r = reconstruct(sigma, {.tol_zero = o.tol_zero, .verify_band = o.verify_band});
  emit(o.output, io::dump_matrix(r.matrix), out);
  if (!o.t_out.empty()) io::write_file(o.t_out, io::dump_tinit(r.tinit));
  diagnostics(r, out);
  return kOk;
}

int cmd_spring(const Options& o, std::ostream& out) {
  const SpringChain c = io::parse_chain(io::read_file(o.input));
  check_caps(2, c.masses.size());
  const BandMatrix l = build_spring_matrix(c);
  const bool freq = o.freq || !(o.matrix || o.cf);
  if (o.matrix) emit(o.output, io::dump_matrix(l), out);
  if (freq) out << join(frequencies(l), ", ") << "\n";
  if (o.cf) {
    const std::size_t big_n = c.masses.size();
    if (big_n < 4) out << "no interior index (needs N >= 4)\n";
    for (std::size_t j = 2; j + 2 <= big_n; ++j) {
      const auto r = continued_fraction_check(c, j);
      out << "j = " << j << ": lhs = " << io::format_double(r.lhs) << ", residual = " << io::format_double(r.residual);
      try {
        out << ", literal form residual = " << io::format_double(continued_fraction_literal(c, j).residual);
      } catch (const Error&) {
        out << ", literal form undefined";
      }
      out << "\n";
    }
  }
  return kOk;
}

int cmd_roundtrip(const Options& o, std::ostream& out) {
  const BandMatrix a = io::parse_matrix(io::read_file(o.input));
  check_caps(a.half_bandwidth(), a.dim());
  validate_band(a);
  const RoundTrip rt = roundtrip(a, {.tol_zero = o.tol_zero, .verify_band = o.verify_band}, o.perturb);
  out << "max deviation: " << io::format_double(rt.matrix_deviation) << "\n";
  out << "initial-condition deviation: " << io::format_double(rt.tinit_deviation) << "\n";
  if (rt.scalar_deviation) out << "scalar oracle deviation: " << io::format_double(*rt.scalar_deviation) << "\n";
  const bool ok = rt.matrix_deviation <= o.tol && rt.tinit_deviation <= o.tol &&
                  (!rt.scalar_deviation || *rt.scalar_deviation <= o.tol);
  out << (ok ? "ok" : "FAILED") << " (tol " << io::format_double(o.tol) << ")\n";
  return ok ? kOk : kNumerical;
}

int exit_for(const Error& e) {
  switch (e.error_class()) {
    case ErrorClass::Usage: return kParse;
    case ErrorClass::Validation: return kValidation;
    case ErrorClass::Numerical: return kNumerical;
  }
  return kValidation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Direct and inverse spectral problems for band symmetric matrices", "bandinv"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "check class membership and print the degeneration profile");
  validate->add_option("matrix", o.input, "matrix file")->required();

  auto* direct = app.add_subcommand("direct", "spectral function of a matrix");
  direct->add_option("matrix", o.input, "matrix file")->required();
  direct->add_option("-t,--tinit", o.t_file, "initial-condition matrix file (default identity)");
  direct->add_option("-o,--output", o.output, "spectral function file (default stdout)");
  direct->add_flag("--summary", o.summary, "print the sum of all jumps");

  auto* inverse = app.add_subcommand("inverse", "reconstruct a matrix from its spectral function");
  inverse->add_option("sigma", o.input, "spectral function file")->required();
  inverse->add_option("-o,--output", o.output, "matrix file (default stdout)");
  inverse->add_option("-t,--tinit-out", o.t_out, "where to write the initial-condition matrix");
  inverse->add_option("--tol-zero", o.tol_zero, "zero-norm threshold factor")->check(CLI::PositiveNumber);
  inverse->add_flag("--verify-band", o.verify_band, "check every entry outside the band");

  auto* spring = app.add_subcommand("spring", "mass-spring chain tools");
  spring->add_option("chain", o.input, "chain file")->required();
  spring->add_flag("--frequencies", o.freq, "oscillation frequencies, ascending");
  spring->add_flag("--matrix", o.matrix, "print the chain matrix");
  spring->add_flag("--cf-check", o.cf, "continued-fraction residual per interior body");
  spring->add_option("-o,--output", o.output, "matrix file for --matrix (default stdout)");

  auto* rt = app.add_subcommand("roundtrip", "direct then inverse, report the deviation");
  rt->add_option("matrix", o.input, "matrix file")->required();
  rt->add_option("--tol", o.tol, "accepted deviation")->check(CLI::NonNegativeNumber);
  rt->add_option("--tol-zero", o.tol_zero, "zero-norm threshold factor")->check(CLI::PositiveNumber);
  rt->add_flag("--verify-band", o.verify_band, "check every entry outside the band");
  rt->add_option("--perturb", o.perturb, "debug: shift the first node of the intermediate spectral function");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kParse;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*direct) return cmd_direct(o, out);
    if (*inverse) return cmd_inverse(o, out);
    if (*spring) return cmd_spring(o, out);
    return cmd_roundtrip(o, out);
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e);
  }
}

}  // namespace bandinv::cli
