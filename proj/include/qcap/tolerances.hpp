// Copyright 2026 The qcap Authors
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

namespace qcap {

// Shared numerical tolerances. These are part of the observable contract
// (error thresholds, clipping rules, bound slacks) and must not drift
// between modules.
inline constexpr double kHermitianTol = 1e-9;       // max |m - m^dagger| entry
inline constexpr double kUnitTraceTol = 1e-9;       // |tr(rho) - 1|
inline constexpr double kNegativeEigTol = 1e-9;     // eigenvalue < -this invalidates a state
inline constexpr double kEigClip = 1e-12;           // eigenvalues in [-clip, 0) are clipped to 0
inline constexpr double kUnitNormTol = 1e-10;       // | ||psi||^2 - 1 |
inline constexpr double kPriorSumTol = 1e-10;       // | sum p_i - 1 |
inline constexpr double kUnitaryTol = 1e-9;         // max |u^dagger u - I| entry
inline constexpr double kBoundSlack = 1e-9;         // slack added to analytic bounds in checks
inline constexpr double kJacobiRelThreshold = 1e-12;  // off-diag Frobenius < this * (1 + ||input||_F)
inline constexpr int kJacobiMaxSweeps = 100;

}  // namespace qcap
