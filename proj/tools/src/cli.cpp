// Copyright 2026 The Sphering Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sphering/cli/cli.hpp"

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "sphering/cli/csv.hpp"
#include "sphering/diagnostics.hpp"
#include "sphering/errors.hpp"
#include "sphering/moments.hpp"

namespace sphering::cli {

namespace {

std::string Fixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

void PrintVector(std::ostream& os, const Vector& v, int precision) {
  for (Index i = 0; i < v.size(); ++i) {
    os << (i ? " " : "") << Fixed(v(i), precision);
  }
  os << '\n';
}

void PrintMatrix(std::ostream& os, const Matrix& m, int precision) {
  const int width = precision + 4;
  for (Index i = 0; i < m.rows(); ++i) {
    os << ' ';
    for (Index j = 0; j < m.cols(); ++j) {
      const std::string cell = Fixed(m(i, j), precision);
      os << std::string(static_cast<std::size_t>(
                            std::max<int>(1, width - static_cast<int>(cell.size()))),
                        ' ')
         << cell;
    }
    os << '\n';
  }
}

void PrintCertificate(std::ostream& os, const char* name, const Certificate& c) {
  char residual[32];
  std::snprintf(residual, sizeof residual, "%.3e", c.residual);
  os << "  " << name << ": " << (c.holds ? "yes" : "no") << " (residual "
     << residual << ", expected " << (c.expected ? "yes" : "no") << ")\n";
}

void Diagnose(const CliConfig& config, const DataMatrix& x, std::ostream& os) {
  const int p = config.precision;
  auto model = std::make_shared<const CovarianceModel>(BuildModel(x));
  const Whitener whitener = BuildWhitener(config.method, model);
  const CrossStats stats = ComputeCrossStats(whitener);
  const StructureCertificates certs = CheckStructure(stats, config.method);

  os << "method: " << MethodName(config.method) << '\n';
  os << "observations: " << x.rows() << '\n';
  os << "variables: " << x.cols() << "\n\n";
  os << "W (whitening matrix)\n";
  PrintMatrix(os, whitener.matrix(), p);
  os << "Phi = cov(z, x)\n";
  PrintMatrix(os, stats.phi, p);
  os << "Psi = cor(z, x)\n";
  PrintMatrix(os, stats.psi, p);
  os << '\n';
  os << "trace(Phi): " << Fixed(stats.trace_phi, p) << '\n';
  os << "trace(Psi): " << Fixed(stats.trace_psi, p) << '\n';
  os << "diag(Phi Phi^T): ";
  PrintVector(os, stats.phi_row_sq, p);
  os << "max diag(Phi Phi^T): " << Fixed(stats.phi_row_sq.maxCoeff(), p) << '\n';
  os << "diag(Psi Psi^T): ";
  PrintVector(os, stats.psi_row_sq, p);
  os << "max diag(Psi Psi^T): " << Fixed(stats.psi_row_sq.maxCoeff(), p) << '\n';
  os << "diag(Psi^T Psi): ";
  PrintVector(os, stats.psi_col_sq, p);
  os << "cor(z_i, x_i): ";
  PrintVector(os, stats.diag_psi, p);
  os << "E|z - x|^2: " << Fixed(stats.squared_distance, p) << '\n';
  os << "\nstructure\n";
  PrintCertificate(os, "Phi symmetric", certs.phi_symmetric);
  PrintCertificate(os, "Psi symmetric", certs.psi_symmetric);
  PrintCertificate(os, "Phi lower triangular", certs.phi_lower_triangular);
  PrintCertificate(os, "Psi lower triangular", certs.psi_lower_triangular);

  if (config.check_optimality) {
    const OptimalityCheck check =
        SampleOptimality(*model, config.rotations, config.seed);
    os << "\noptimality (" << check.rotations << " random rotations, seed "
       << config.seed << ")\n";
    auto line = [&](const char* name, double optimum, double sampled) {
      os << "  " << name << ": optimum " << Fixed(optimum, p)
         << ", best sampled " << Fixed(sampled, p) << ", "
         << (sampled <= optimum + 1e-9 ? "ok" : "VIOLATED") << '\n';
    };
    line("g1 = trace(Q1 Sigma^1/2)", check.g1_optimum, check.g1_sampled_max);
    line("g2 = trace(Q2 rho^1/2)", check.g2_optimum, check.g2_sampled_max);
    line("h1[1]", check.h1_first_optimum, check.h1_first_sampled_max);
    line("h2[1]", check.h2_first_optimum, check.h2_first_sampled_max);
  }
}

}  // namespace

void Execute(const CliConfig& config, std::ostream& out) {
  std::ofstream file;
  if (config.output) {
    file.open(*config.output, std::ios::binary);
    if (!file) throw IoError("cannot open '" + *config.output + "' for writing");
  }
  std::ostream& os = config.output ? file : out;

  const DataMatrix x = ReadCsv(config.input);
  if (config.command == "whiten") {
    const Whitener w = BuildWhitener(config.method, BuildModel(x));
    WriteCsv(Whiten(x, w, config.center), os);
  } else if (config.command == "diagnose") {
    Diagnose(config, x, os);
  } else if (config.command == "compare") {
    os << FormatReport(CompareAll(x), config.precision);
  } else {
    throw InvalidInput("unknown command '" + config.command + "'");
  }
  os.flush();
  if (!os) throw IoError("error writing output");
}

int Run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Whitening and decorrelation of tabular data", "sphering"};
  app.require_subcommand(1);

  CliConfig config;
  std::string method_name;
  std::string output;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-i,--input", config.input,
                    "CSV file with a header row, or 'iris' for the bundled data")
        ->required();
    cmd->add_option("-o,--output", output, "Write to this file instead of stdout");
  };

  CLI::App* whiten = app.add_subcommand("whiten", "Whiten a CSV file");
  add_common(whiten);
  whiten->add_option("-m,--method", method_name,
                     "zca, pca, cholesky, zca-cor or pca-cor")
      ->required();
  whiten->add_flag("!--no-center", config.center,
                   "Do not subtract column means before whitening");

  CLI::App* diagnose = app.add_subcommand(
      "diagnose", "Cross-covariance, cross-correlation and objectives");
  add_common(diagnose);
  diagnose->add_option("-m,--method", method_name,
                       "zca, pca, cholesky, zca-cor or pca-cor")
      ->required();
  diagnose->add_option("-p,--precision", config.precision, "Decimal places")
      ->check(CLI::Range(1, 12));
  diagnose->add_flag("--check-optimality", config.check_optimality,
                     "Compare the objectives against random rotations");
  diagnose->add_option("--seed", config.seed, "Seed for the random rotations");
  diagnose->add_option("--rotations", config.rotations,
                       "Number of random rotations")
      ->check(CLI::PositiveNumber);

  CLI::App* compare =
      app.add_subcommand("compare", "Compare all five whitening methods");
  add_common(compare);
  compare->add_option("-p,--precision", config.precision, "Decimal places")
      ->check(CLI::Range(1, 12));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  config.command = app.get_subcommands().front()->get_name();
  if (!output.empty()) config.output = output;

  try {
    if (config.command != "compare") config.method = ParseMethod(method_name);
    Execute(config, out);
  } catch (const NotPositiveDefinite& e) {
    err << "error: covariance is not positive definite: " << e.what() << '\n';
    return kExitNotPositiveDefinite;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitOk;
}

}  // namespace sphering::cli
