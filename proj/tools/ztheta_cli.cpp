// Copyright 2026 The ztheta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end for the ztheta library.
//
// Subcommands:
//   dedekind   run the Dedekind index criterion on an arbitrary monic f and p
//   taylor     compare the valuation prediction with the criterion for one (n, p)
//   scan       sweep a range of n and primes, reporting any disagreement
//   disc       check the closed form for the discriminant of f_n
//
// Exit codes: 0 on success / agreement, 1 when a comparison fails
// (disagreement or mismatch), 2 on usage or input errors.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ztheta/dedekind.hpp"
#include "ztheta/int_poly.hpp"
#include "ztheta/mod_resultant.hpp"
#include "ztheta/primes.hpp"
#include "ztheta/scan.hpp"
#include "ztheta/taylor.hpp"

namespace {

using json = nlohmann::ordered_json;

// Parses "24,24,12,4,1" into ascending coefficients. GMP accepts arbitrary
// precision decimal strings, so coefficients are not limited to 64 bits.
std::vector<ztheta::Integer> parse_coeffs(const std::string& text) {
  std::vector<ztheta::Integer> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) {
      throw std::invalid_argument("empty coefficient in --coeffs");
    }
    const auto last = token.find_last_not_of(" \t");
    const std::string trimmed = token.substr(first, last - first + 1);
    try {
      out.emplace_back(trimmed);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad coefficient '" + trimmed + "' in --coeffs");
    }
  }
  if (out.empty()) {
    throw std::invalid_argument("--coeffs must contain at least one value");
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string true_false(bool b) { return b ? "true" : "false"; }

json case_to_json(const ztheta::TaylorCase& c) {
  json row;
  row["n"] = c.n;
  row["p"] = c.p;
  row["vp"] = c.vp_factorial;
  row["predicted_divisible"] = c.predicted_divisible;
  row["dedekind_divisible"] = c.dedekind_divisible;
  row["agree"] = c.agree;
  return row;
}

void case_to_csv(std::ostream& os, const ztheta::TaylorCase& c) {
  os << c.n << ',' << c.p << ',' << c.vp_factorial << ','
     << true_false(c.predicted_divisible) << ','
     << true_false(c.dedekind_divisible) << ',' << true_false(c.agree) << '\n';
}

constexpr const char* kCsvHeader = "n,p,vp,predicted,dedekind,agree";

int run_dedekind(const std::string& coeffs, uint64_t p, uint64_t seed) {
  const ztheta::IntPoly f(parse_coeffs(coeffs));
  const auto report = ztheta::dedekind_test(f, p, seed);

  std::cout << "f = " << report.f << "\n";
  std::cout << "p = " << report.p << "\n";
  std::cout << "f mod p = " << ztheta::reduce_mod_p(report.f, report.p) << "\n";
  std::cout << "factorization:";
  for (const auto& fv : report.per_factor) {
    std::cout << " (" << fv.factor << ")^" << fv.exponent;
  }
  std::cout << "\n";
  std::cout << "M = " << report.m_poly << "\n";
  for (const auto& fv : report.per_factor) {
    std::cout << "factor " << fv.factor << ": e = " << fv.exponent;
    if (fv.needs_check) {
      std::cout << ", divides M mod p: " << yes_no(fv.divides_m);
    } else {
      std::cout << ", no repeated factor check needed";
    }
    std::cout << "\n";
  }
  if (report.index_divisible_by_p) {
    std::cout << "verdict: " << p << " DIVIDES index\n";
  } else {
    std::cout << "verdict: " << p << " does not divide index\n";
  }
  return 0;
}

int run_taylor(uint32_t n, uint64_t p, uint64_t seed, const std::string& format) {
  const auto c = ztheta::verify_case(n, p, seed);
  if (format == "json") {
    std::cout << case_to_json(c).dump() << "\n";
  } else if (format == "csv") {
    std::cout << kCsvHeader << "\n";
    case_to_csv(std::cout, c);
  } else {
    std::cout << "n = " << c.n << ", p = " << c.p << "\n";
    std::cout << "v_" << c.p << "(" << c.n << "!) = " << c.vp_factorial << "\n";
    std::cout << "predicted: "
              << (c.predicted_divisible ? "divisible" : "not divisible") << "\n";
    std::cout << "dedekind:  "
              << (c.dedekind_divisible ? "divisible" : "not divisible") << "\n";
    std::cout << (c.agree ? "AGREE" : "DISAGREE") << "\n";
  }
  return c.agree ? 0 : 1;
}

int run_scan(uint32_t n_min, uint32_t n_max, const std::vector<uint64_t>& primes,
             uint64_t seed, unsigned jobs, const std::string& format) {
  ztheta::ScanConfig cfg;
  cfg.n_min = n_min;
  cfg.n_max = n_max;
  cfg.primes = primes;
  cfg.seed = seed;
  cfg.jobs = jobs;
  const auto result = ztheta::run_scan(cfg);

  if (format == "json") {
    for (const auto& c : result.cases) {
      std::cout << case_to_json(c).dump() << "\n";
    }
  } else if (format == "csv") {
    std::cout << kCsvHeader << "\n";
    for (const auto& c : result.cases) {
      case_to_csv(std::cout, c);
    }
  }

  std::ostream& summary = (format == "human") ? std::cout : std::cerr;
  summary << "scanned " << result.cases.size() << " cases, n in [" << n_min
          << "," << n_max << "]\n";
  if (format == "human") {
    for (const auto& c : result.cases) {
      if (!c.agree) {
        summary << "DISAGREE n=" << c.n << " p=" << c.p
                << " vp=" << c.vp_factorial
                << " predicted=" << true_false(c.predicted_divisible)
                << " dedekind=" << true_false(c.dedekind_divisible) << "\n";
      }
    }
  }
  summary << "disagreements: " << result.disagreements << "\n";
  return result.disagreements == 0 ? 0 : 1;
}

int run_disc(uint32_t n, const std::string& method) {
  const auto f = ztheta::taylor_monic(n);
  const ztheta::Integer actual = (method == "prs")
                                     ? ztheta::discriminant(f)
                                     : ztheta::discriminant_modular(f);
  ztheta::Integer predicted = ztheta::pow_integer(ztheta::factorial(n), n);
  if ((static_cast<uint64_t>(n) * (n - 1) / 2) % 2 == 1) {
    predicted = -predicted;
  }
  std::cout << "n = " << n << "\n";
  std::cout << "disc f_" << n << " = " << actual << "\n";
  std::cout << "(-1)^(n(n-1)/2) * (n!)^n = " << predicted << "\n";
  const bool match = actual == predicted;
  std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
  return match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Index divisibility for truncated exponential Taylor polynomials"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ztheta 1.0.0");

  std::string coeffs;
  uint32_t n = 1;
  uint64_t p = 2;
  uint64_t seed = ztheta::kDefaultScanSeed;
  uint64_t ded_seed = ztheta::kDefaultFactorSeed;
  uint32_t n_min = 1;
  uint32_t n_max = 60;
  std::vector<uint64_t> primes;
  unsigned jobs = 1;
  std::string format = "human";
  std::string method = "modular";

  auto* ded = app.add_subcommand(
      "dedekind", "Run the Dedekind criterion for a monic polynomial and a prime");
  ded->add_option("--coeffs", coeffs,
                  "Ascending coefficients, comma separated (constant term first)")
      ->required();
  ded->add_option("--p", p, "Prime to test")->required();
  ded->add_option("--seed", ded_seed, "Seed for the factorization RNG");

  auto* tay = app.add_subcommand(
      "taylor", "Compare prediction and criterion for one (n, p) pair");
  tay->add_option("--n", n, "Degree of the truncated Taylor polynomial")
      ->required();
  tay->add_option("--p", p, "Prime to test")->required();
  tay->add_option("--seed", seed, "Base seed for per case RNG derivation");
  tay->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}));

  auto* scan = app.add_subcommand(
      "scan", "Sweep degrees and primes, comparing prediction with criterion");
  scan->add_option("--n-min", n_min, "Smallest degree, at least 1");
  scan->add_option("--n-max", n_max, "Largest degree");
  scan->add_option("--primes", primes,
                   "Explicit primes to test for every n (default: all p <= n)")
      ->delimiter(',');
  scan->add_option("--seed", seed, "Base seed for per case RNG derivation");
  scan->add_option("--jobs", jobs, "Worker threads, 1 = serial reference path");
  scan->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}));

  auto* disc = app.add_subcommand(
      "disc", "Verify the discriminant closed form for one degree");
  disc->add_option("--n", n, "Degree of the truncated Taylor polynomial")
      ->required();
  disc->add_option("--method", method, "Resultant backend")
      ->check(CLI::IsMember({"modular", "prs"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (ded->parsed()) return run_dedekind(coeffs, p, ded_seed);
    if (tay->parsed()) return run_taylor(n, p, seed, format);
    if (scan->parsed()) return run_scan(n_min, n_max, primes, seed, jobs, format);
    if (disc->parsed()) return run_disc(n, method);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
