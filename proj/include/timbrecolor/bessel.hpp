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

#pragma once

#include <vector>

namespace timbrecolor {

/// Default energy tail bound used to truncate the sideband series.
inline constexpr double kDefaultTailTolerance = 1e-10;

/// Largest argument accepted by besselJ.
inline constexpr double kMaxBesselArgument = 1000.0;

/// J_0(I) .. J_N(I) for one modulation index. Negative orders follow from
/// J_{-n} = (-1)^n J_n.
struct BesselCoefficients {
    double modulationIndex = 0.0;
    int maxOrder = 0;
    std::vector<double> values;

    /// J_n for any n in [-maxOrder, maxOrder].
    double at(int order) const;

    /// Sum over n in [-N, N] of J_n^2.
    double energy() const;
};

/// Bessel function of the first kind J_order(argument).
///
/// Power series (summed in long double) for argument <= 12, Miller's downward
/// recurrence normalised by J_0 + 2 sum J_2k = 1 above that. Absolute error is
/// below 1e-12 for argument <= 50.
///
/// Throws DomainError for a negative order, a negative argument or an argument
/// above kMaxBesselArgument.
double besselJ(int order, double argument);

/// Smallest N for which 1 - sum_{|n|<=N} J_n(I)^2 < tailTolerance: the order
/// that carries all but tailTolerance of the energy. Used for bandwidth checks.
int energyTruncationOrder(double modulationIndex, double tailTolerance = kDefaultTailTolerance);

/// Smallest N for which both 1 - sum_{|n|<=N} J_n(I)^2 and sum_{|n|>N} |J_n(I)|
/// are below tailTolerance, together with J_0(I)..J_N(I). tailTolerance must
/// lie in (0, 1).
BesselCoefficients besselRow(double modulationIndex, double tailTolerance = kDefaultTailTolerance);

}  // namespace timbrecolor
