// dcx: file-based front end for the real-part diagonalization toolkit.
// Exit codes: 0 success, 2 input error, 3 degraded accuracy,
// 4 eigensolver non-convergence, 5 fit divergence.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "dcx/decomp.hpp"
#include "dcx/errors.hpp"
#include "dcx/fit.hpp"
#include "dcx/io.hpp"
#include "dcx/lift.hpp"
#include "dcx/rank.hpp"
#include "dcx/signrank.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDegraded = 3;
constexpr int kExitNoConverge = 4;
constexpr int kExitDiverged = 5;

constexpr double kDegradedResidual = 1e-8;

dcx::RealMatrix load_real_square(const std::string& path) {
  dcx::AnyMatrix m = dcx::parse_matrix_file(path);
  const auto* r = std::get_if<dcx::RealMatrix>(&m);
  if (r == nullptr) {
    throw dcx::ArgumentError("'" + path + "' must contain a real matrix");
  }
  if (!r->square()) {
    throw dcx::ShapeError("'" + path + "' must be square, got " +
                          std::to_string(r->rows()) + "x" +
                          std::to_string(r->cols()));
  }
  return *r;
}

int cmd_lift(const std::string& input, const std::string& output, bool imag) {
  const dcx::RealMatrix a = load_real_square(input);
  const dcx::ComplexMatrix x = imag ? dcx::lift_imag(a) : dcx::lift_real(a);
  dcx::write_matrix_file(output, x);
  return kExitOk;
}

int cmd_decompose(const std::string& input, const std::string& output,
                  long long rank, double auto_tol, bool emit_basis) {
  const auto t0 = std::chrono::steady_clock::now();
  const dcx::RealMatrix a = load_real_square(input);

  dcx::UnitaryDiag d;
  if (auto_tol > 0.0) {
    d = dcx::diagonalize_rank_bounded(a, auto_tol);
  } else if (rank >= 0) {
    d = dcx::truncate(dcx::unitary_diagonalize(a),
                      static_cast<std::size_t>(rank));
  } else {
    d = dcx::unitary_diagonalize(a);
  }

  const dcx::RealMatrix recon = dcx::reconstruct_real(d);
  const double residual = dcx::frobenius_norm(dcx::sub(recon, a)) /
                          std::max(1.0, dcx::frobenius_norm(a));
  const std::size_t rank_input = dcx::numerical_rank(a, 1e-12);

  std::ostringstream rep;
  rep << "n: " << d.n << '\n';
  rep << "r: " << d.r << '\n';
  rep << "residual: " << dcx::format_double(residual) << '\n';
  rep << "rank_input: " << rank_input << '\n';
  rep << "rank_bound_2k: " << 2 * rank_input << '\n';
  rep << "lambda:";
  for (const dcx::cplx& l : d.lambda) rep << ' ' << dcx::format_complex(l);
  rep << '\n';
  if (emit_basis) {
    for (std::size_t i = 0; i < d.n; ++i) {
      rep << "S[" << i << "]:";
      for (std::size_t j = 0; j < d.r; ++j) {
        rep << ' ' << dcx::format_complex(d.S(i, j));
      }
      rep << '\n';
    }
  }
  {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      throw dcx::ArgumentError("cannot open '" + output + "' for writing");
    }
    out << rep.str();
    if (!out) throw dcx::ArgumentError("failed writing '" + output + "'");
  }

  // Timing is per-run noise, so it goes to stderr; the report file stays
  // byte-identical across runs.
  const auto t1 = std::chrono::steady_clock::now();
  const double ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  std::cerr << "elapsed_ms: " << ms << '\n';

  if (residual > kDegradedResidual) {
    std::cerr << "degraded: residual " << dcx::format_double(residual)
              << " above " << dcx::format_double(kDegradedResidual) << '\n';
    return kExitDegraded;
  }
  return kExitOk;
}

int cmd_signcheck(const std::string& input) {
  dcx::AnyMatrix m = dcx::parse_matrix_file(input);
  const auto* y = std::get_if<dcx::SignMatrix>(&m);
  if (y == nullptr) {
    throw dcx::ArgumentError("'" + input + "' must contain a sign matrix");
  }
  if (!y->square()) {
    throw dcx::ShapeError("'" + input + "' must be square, got " +
                          std::to_string(y->rows()) + "x" +
                          std::to_string(y->cols()));
  }
  std::size_t plus = 0;
  std::size_t minus = 0;
  for (std::size_t i = 0; i < y->rows(); ++i) {
    ((*y)(i, i) > 0 ? plus : minus) += 1;
  }
  std::cout << "rank1_feasible: "
            << (dcx::rank1_sign_feasible(*y) ? "true" : "false") << '\n';
  std::cout << "diag_plus: " << plus << '\n';
  std::cout << "diag_minus: " << minus << '\n';
  return kExitOk;
}

int cmd_fit(const std::string& input, const std::string& output,
            const dcx::FitConfig& config, const std::string& loss_name) {
  dcx::FitConfig cfg = config;
  if (loss_name == "squared") {
    cfg.loss = dcx::Loss::squared;
  } else if (loss_name == "logistic") {
    cfg.loss = dcx::Loss::logistic;
  } else {
    throw dcx::ArgumentError("unknown loss '" + loss_name +
                             "' (expected squared or logistic)");
  }

  dcx::AnyMatrix m = dcx::parse_matrix_file(input);
  const dcx::SignMatrix* sign_target = std::get_if<dcx::SignMatrix>(&m);
  std::optional<dcx::FitTarget> target;
  if (const auto* r = std::get_if<dcx::RealMatrix>(&m)) {
    target.emplace(*r);
  } else if (sign_target != nullptr) {
    target.emplace(*sign_target);
  } else {
    throw dcx::ArgumentError("'" + input +
                             "' must contain a real or sign matrix");
  }

  const dcx::FitResult res = dcx::fit_lowrank(*target, cfg);

  // Model file: E block then w as a single-row block.
  std::ostringstream buf;
  dcx::serialize_matrix(buf, res.model.E);
  dcx::serialize_matrix(
      buf, dcx::ComplexMatrix(1, res.model.m, res.model.w));
  {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      throw dcx::ArgumentError("cannot open '" + output + "' for writing");
    }
    out << buf.str();
    if (!out) throw dcx::ArgumentError("failed writing '" + output + "'");
  }

  std::cout << "loss: " << dcx::format_double(res.loss_trace.back()) << '\n';
  if (sign_target != nullptr) {
    std::cout << "sign_accuracy: "
              << dcx::format_double(dcx::sign_accuracy(res.model, *sign_target))
              << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"real-part unitary diagonalization toolkit"};
  app.require_subcommand(1);

  std::string input;
  std::string output;

  CLI::App* lift = app.add_subcommand(
      "lift", "write the normal lift X = A + iA^T of a real square matrix");
  bool lift_imag_flag = false;
  lift->add_option("input", input, "real matrix file")->required();
  lift->add_option("output", output, "destination complex matrix file")
      ->required();
  lift->add_flag("--imag", lift_imag_flag,
                 "use the X = A^T + iA variant (Im(X) = A)");

  CLI::App* dec = app.add_subcommand(
      "decompose", "diagonalize A = Re(S Lambda S*) and write a report");
  long long rank = -1;
  double auto_tol = 0.0;
  bool emit_basis = false;
  dec->add_option("input", input, "real matrix file")->required();
  dec->add_option("output", output, "destination report file")->required();
  CLI::Option* rank_opt =
      dec->add_option("--rank", rank, "truncate to this many eigenpairs");
  CLI::Option* tol_opt = dec->add_option(
      "--auto-tol", auto_tol, "drop eigenvalues with |lambda| <= tol*max");
  rank_opt->excludes(tol_opt);
  tol_opt->excludes(rank_opt);
  dec->add_flag("--emit-basis", emit_basis, "append the S columns");

  CLI::App* sc =
      app.add_subcommand("signcheck", "rank-1 feasibility of a sign pattern");
  sc->add_option("input", input, "sign matrix file")->required();

  CLI::App* fit = app.add_subcommand(
      "fit", "gradient-descent low-rank real-part factor model");
  dcx::FitConfig cfg;
  std::string loss_name = "squared";
  fit->add_option("input", input, "real or sign matrix file")->required();
  fit->add_option("output", output, "destination model file")->required();
  fit->add_option("--rank", cfg.m, "model rank m")->required();
  fit->add_option("--loss", loss_name, "squared or logistic");
  fit->add_option("--seed", cfg.seed, "RNG seed");
  fit->add_option("--epochs", cfg.epochs, "gradient steps");
  fit->add_option("--lr", cfg.learning_rate, "learning rate");
  fit->add_option("--l2", cfg.l2, "L2 regularization weight");
  fit->add_option("--init-scale", cfg.init_scale, "Gaussian init scale");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (lift->parsed()) return cmd_lift(input, output, lift_imag_flag);
    if (dec->parsed()) {
      if (rank_opt->count() > 0 && rank < 1) {
        throw dcx::ArgumentError("--rank must be >= 1");
      }
      if (tol_opt->count() > 0 && !(auto_tol > 0.0)) {
        throw dcx::ArgumentError("--auto-tol must be > 0");
      }
      return cmd_decompose(input, output, rank_opt->count() > 0 ? rank : -1,
                           tol_opt->count() > 0 ? auto_tol : 0.0, emit_basis);
    }
    if (sc->parsed()) return cmd_signcheck(input);
    if (fit->parsed()) return cmd_fit(input, output, cfg, loss_name);
  } catch (const dcx::ConvergenceError& e) {
    std::cerr << "error: " << e.what()
              << " (residual " << dcx::format_double(e.residual()) << ")\n";
    return kExitNoConverge;
  } catch (const dcx::DivergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDiverged;
  } catch (const dcx::ParseError& e) {
    std::cerr << "error: " << e.what() << " at line " << e.line()
              << ", column " << e.column() << '\n';
    return kExitInput;
  } catch (const dcx::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
