// Copyright 2026 The entsim developers
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

namespace entsim {

/**
 * Central numerical tolerance configuration. All validity checks in the
 * library pull their defaults from one instance so property tests have a
 * single knob to turn.
 */
struct Tolerances {
    /// Entrywise matrix equality, trace and norm checks.
    double equality = 1e-12;
    /// How non-Hermitian a matrix may be before the eigensolver rejects it.
    double hermiticity = 1e-10;
    /// Eigenvalues of states may dip this far below zero and are clamped.
    double psd_slack = 1e-10;
    /// Imaginary residue allowed in quantities that must be real.
    double imag_residue = 1e-10;
    /// Accumulated drift allowed in an outcome distribution before sampling
    /// refuses to renormalize.
    double probability_drift = 1e-9;
    /// Off-diagonal residual target for the Jacobi eigensolver.
    double jacobi_offdiag = 1e-12;
};

inline constexpr Tolerances kTol{};

}  // namespace entsim
