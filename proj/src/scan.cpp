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

#include "ztheta/scan.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "ztheta/primes.hpp"

namespace ztheta {

ScanResult run_scan(const ScanConfig& config) {
    if (config.n_min < 1) throw std::invalid_argument("run_scan: n_min must be >= 1");
    if (config.n_min > config.n_max) throw std::invalid_argument("run_scan: n_min > n_max");
    if (config.n_max > kDefaultMaxDegree) {
        throw std::invalid_argument("run_scan: n_max exceeds the degree guard");
    }
    if (config.jobs < 1) throw std::invalid_argument("run_scan: jobs must be >= 1");

    std::vector<uint64_t> explicit_primes = config.primes;
    if (!explicit_primes.empty()) {
        for (uint64_t p : explicit_primes) {
            if (!is_prime(p)) {
                throw std::invalid_argument("run_scan: composite entry in prime list: " + std::to_string(p));
            }
        }
        std::sort(explicit_primes.begin(), explicit_primes.end());
        explicit_primes.erase(std::unique(explicit_primes.begin(), explicit_primes.end()),
                              explicit_primes.end());
    }

    std::vector<std::pair<unsigned, uint64_t>> case_list;
    if (explicit_primes.empty()) {
        const std::vector<uint64_t> sieve = primes_up_to(config.n_max);
        for (unsigned n = config.n_min; n <= config.n_max; ++n) {
            for (uint64_t p : sieve) {
                if (p > n) break;
                case_list.emplace_back(n, p);
            }
        }
    } else {
        for (unsigned n = config.n_min; n <= config.n_max; ++n) {
            for (uint64_t p : explicit_primes) case_list.emplace_back(n, p);
        }
    }

    ScanResult result;
    result.cases.resize(case_list.size());
    bool failed = false;
    std::string failure;

    if (config.jobs == 1) {
        for (size_t i = 0; i < case_list.size(); ++i) {
            result.cases[i] = verify_case(case_list[i].first, case_list[i].second, config.seed);
        }
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(static_cast<int>(config.jobs))
        for (long i = 0; i < static_cast<long>(case_list.size()); ++i) {
            try {
                const auto& [n, p] = case_list[static_cast<size_t>(i)];
                result.cases[static_cast<size_t>(i)] = verify_case(n, p, config.seed);
            } catch (const std::exception& e) {
#pragma omp critical
                {
                    failed = true;
                    failure = e.what();
                }
            }
        }
#else
        for (size_t i = 0; i < case_list.size(); ++i) {
            result.cases[i] = verify_case(case_list[i].first, case_list[i].second, config.seed);
        }
#endif
    }
    if (failed) throw std::runtime_error("run_scan: worker failed: " + failure);

    for (const TaylorCase& c : result.cases) {
        if (!c.agree) ++result.disagreements;
    }
    return result;
}

}  // namespace ztheta
