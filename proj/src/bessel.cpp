// Copyright 2026 The timbrecolor Authors
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

#include "timbrecolor/bessel.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "timbrecolor/error.hpp"

namespace timbrecolor {

namespace {

constexpr double kSeriesLimit = 12.0;

long double seriesJ(int order, long double x) {
    const long double half = x / 2.0L;
    const long double half_sq = half * half;
    // (x/2)^n / n!
    long double term = 1.0L;
    for (int k = 1; k <= order; ++k) {
        term *= half / static_cast<long double>(k);
    }
    long double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= -half_sq / (static_cast<long double>(k) * static_cast<long double>(k + order));
        sum += term;
        if (std::fabs(term) < 1e-22L * std::fabs(sum) && k > half) {
            break;
        }
        if (term == 0.0L) {
            break;
        }
    }
    return sum;
}

// Downward recurrence J_{k-1} = (2k/x) J_k - J_{k+1}, started far enough above
// max(order, x) that the seed error has decayed below working precision.
long double millerJ(int order, long double x) {
    const int top = std::max(order, static_cast<int>(x));
    int start = top + 30 + static_cast<int>(std::sqrt(60.0L * top));
    start += start % 2;

    constexpr long double kRescaleAbove = 1e300L;
    long double next = 0.0L;  // J_{k+1}
    long double curr = 1e-300L;  // J_k
    long double wanted = 0.0L;
    long double norm = 0.0L;  // J_0 + 2 sum J_2k, accumulated unnormalised
    for (int k = start; k > 0; --k) {
        const long double prev = (2.0L * k / x) * curr - next;
        next = curr;
        curr = prev;  // now J_{k-1}
        if ((k - 1) % 2 == 0 && k - 1 > 0) {
            norm += 2.0L * curr;
        }
        if (k - 1 == order) {
            wanted = curr;
        }
        if (std::fabs(curr) > kRescaleAbove) {
            curr /= kRescaleAbove;
            next /= kRescaleAbove;
            wanted /= kRescaleAbove;
            norm /= kRescaleAbove;
        }
    }
    norm += curr;  // J_0
    if (order == 0) {
        wanted = curr;
    }
    return wanted / norm;
}

}  // namespace

double besselJ(int order, double argument) {
    if (order < 0) {
        throw DomainError("besselJ: negative order " + std::to_string(order) +
                          " (use J_{-n} = (-1)^n J_n)");
    }
    if (!(argument >= 0.0) || argument > kMaxBesselArgument) {
        throw DomainError("besselJ: argument " + std::to_string(argument) + " outside [0, " +
                          std::to_string(kMaxBesselArgument) + "]");
    }
    if (argument == 0.0) {
        return order == 0 ? 1.0 : 0.0;
    }
    if (argument <= kSeriesLimit) {
        return static_cast<double>(seriesJ(order, argument));
    }
    return static_cast<double>(millerJ(order, argument));
}

double BesselCoefficients::at(int order) const {
    const int n = order < 0 ? -order : order;
    if (n > maxOrder) {
        return 0.0;
    }
    const double v = values[static_cast<std::size_t>(n)];
    return (order < 0 && n % 2 == 1) ? -v : v;
}

double BesselCoefficients::energy() const {
    double sum = values.empty() ? 0.0 : values[0] * values[0];
    for (std::size_t n = 1; n < values.size(); ++n) {
        sum += 2.0 * values[n] * values[n];
    }
    return sum;
}

int energyTruncationOrder(double modulationIndex, double tailTolerance) {
    if (!(tailTolerance > 0.0 && tailTolerance < 1.0)) {
        throw DomainError("energyTruncationOrder: tail tolerance must lie in (0, 1)");
    }
    const int limit = static_cast<int>(2.0 * modulationIndex) + 60;
    double j0 = besselJ(0, modulationIndex);
    double energy = j0 * j0;
    int order = 0;
    while (1.0 - energy >= tailTolerance) {
        if (order >= limit) {
            throw DomainError("energyTruncationOrder: tail tolerance not reachable in double precision");
        }
        ++order;
        const double v = besselJ(order, modulationIndex);
        energy += 2.0 * v * v;
    }
    return order;
}

BesselCoefficients besselRow(double modulationIndex, double tailTolerance) {
    if (!(tailTolerance > 0.0 && tailTolerance < 1.0)) {
        throw DomainError("besselRow: tail tolerance must lie in (0, 1)");
    }
    // Both tails must drop below the tolerance: the energy tail 1 - sum J_n^2
    // (L2 error of the truncated series) and the amplitude tail
    // sum_{|n|>N} |J_n| (worst-case pointwise error). The energy tail alone
    // leaves neglected lines of size ~sqrt(tol).
    // Past n = I the terms fall off faster than geometrically; 2I + 60 is far
    // into the negligible range for every admissible I.
    const int limit = static_cast<int>(2.0 * modulationIndex) + 60;
    std::vector<double> j;
    j.push_back(besselJ(0, modulationIndex));
    for (int n = 1; n <= limit; ++n) {
        j.push_back(besselJ(n, modulationIndex));
        if (n > modulationIndex && std::fabs(j.back()) < 1e-30 * tailTolerance) break;
    }
    // amplitudeTail[n] = sum_{|m| > n} |J_m| for the computed range.
    std::vector<double> amplitudeTail(j.size(), 0.0);
    for (std::size_t n = j.size() - 1; n-- > 0;) {
        amplitudeTail[n] = amplitudeTail[n + 1] + 2.0 * std::fabs(j[n + 1]);
    }

    BesselCoefficients row;
    row.modulationIndex = modulationIndex;
    double energy = j[0] * j[0];
    std::size_t order = 0;
    while (1.0 - energy >= tailTolerance || amplitudeTail[order] >= tailTolerance) {
        if (order + 1 >= j.size()) {
            throw DomainError("besselRow: tail tolerance not reachable in double precision");
        }
        ++order;
        energy += 2.0 * j[order] * j[order];
    }
    row.maxOrder = static_cast<int>(order);
    row.values.assign(j.begin(), j.begin() + static_cast<std::ptrdiff_t>(order) + 1);
    return row;
}

}  // namespace timbrecolor
