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

// Benchmark comparing the serial reference kernels with the OpenMP-backed
// ones on the same inputs, verifying agreement on every measured value.
// Discriminants: subresultant PRS vs the CRT route. Scans: jobs = 1 vs the
// available hardware threads.

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <iomanip>
#include <iostream>

#include "ztheta/int_poly.hpp"
#include "ztheta/mod_resultant.hpp"
#include "ztheta/scan.hpp"
#include "ztheta/taylor.hpp"

using namespace ztheta;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double time_best_of(int reps, F&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto start = Clock::now();
        fn();
        const double took =
            std::chrono::duration<double>(Clock::now() - start).count();
        if (took < best) best = took;
    }
    return best;
}

void print_row(const std::string& label, double serial, double parallel) {
    std::cout << std::left << std::setw(26) << label << std::right
              << std::setw(12) << std::fixed << std::setprecision(4) << serial
              << std::setw(12) << parallel << std::setw(10)
              << std::setprecision(2) << serial / parallel << "x\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::cout << "ztheta benchmarks (" << threads << " thread"
              << (threads == 1 ? "" : "s") << " available)\n\n";

    std::cout << std::left << std::setw(26) << "discriminant of f_n"
              << std::right << std::setw(12) << "prs [s]" << std::setw(12)
              << "crt [s]" << std::setw(10) << "speedup" << "\n";
    for (unsigned n : {40u, 80u, 120u, 150u}) {
        const IntPoly f = taylor_monic(n);
        Integer a, b;
        const int reps = n <= 80 ? 3 : 1;
        const double t_prs = time_best_of(reps, [&] { a = discriminant(f); });
        const double t_crt = time_best_of(reps, [&] { b = discriminant_modular(f); });
        if (a != b) {
            std::cerr << "MISMATCH at n = " << n << "\n";
            return 1;
        }
        print_row("n = " + std::to_string(n), t_prs, t_crt);
    }

    std::cout << "\n"
              << std::left << std::setw(26) << "scan, all p <= n"
              << std::right << std::setw(12) << "jobs=1 [s]" << std::setw(12)
              << "jobs=hw [s]" << std::setw(10) << "speedup" << "\n";
    for (unsigned n_max : {40u, 60u, 80u}) {
        ScanConfig serial_cfg;
        serial_cfg.n_max = n_max;
        ScanConfig par_cfg = serial_cfg;
        par_cfg.jobs = static_cast<unsigned>(threads);

        ScanResult rs, rp;
        const double t_s = time_best_of(2, [&] { rs = run_scan(serial_cfg); });
        const double t_p = time_best_of(2, [&] { rp = run_scan(par_cfg); });
        if (!(rs.cases == rp.cases)) {
            std::cerr << "MISMATCH at n_max = " << n_max << "\n";
            return 1;
        }
        print_row("n <= " + std::to_string(n_max), t_s, t_p);
    }
    return 0;
}
