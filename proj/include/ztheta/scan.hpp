/*
   Copyright 2026 The ztheta Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ZTHETA_SCAN_HPP
#define ZTHETA_SCAN_HPP

#include <cstdint>
#include <vector>

#include "ztheta/taylor.hpp"

namespace ztheta {

// Exhaustive (n, p) sweep of verify_case. With an empty prime list every
// prime p <= n is used for each n; an explicit list is applied as given to
// every n in range (entries must be prime). Rows always come back sorted by
// (n, p) regardless of the execution path.
struct ScanConfig {
    unsigned n_min = 1;
    unsigned n_max = 60;
    std::vector<uint64_t> primes;
    uint64_t seed = kDefaultScanSeed;
    unsigned jobs = 1;
};

struct ScanResult {
    std::vector<TaylorCase> cases;
    size_t disagreements = 0;
};

// jobs == 1 runs the plain serial loop, the reference path; jobs > 1 runs the
// identical case list under an OpenMP parallel-for (falling back to serial
// when OpenMP is unavailable). Both paths fill a preallocated slot per case,
// so the output is byte-for-byte independent of scheduling.
ScanResult run_scan(const ScanConfig& config);

}  // namespace ztheta

#endif  // ZTHETA_SCAN_HPP
