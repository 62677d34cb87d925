// Copyright 2026 The davn Authors
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

#pragma once

// Exact construction and diagnosis of the four-qudit state |Psi>_1234, the
// four-qubit seed state |Psi_4>, and their reduced density matrices and joint
// Z-measurement statistics.

#include <cstddef>
#include <string>
#include <vector>

#include "davn/gauss.hpp"
#include "davn/pauli.hpp"
#include "davn/state_vector.hpp"

namespace davn {

/// The 56-component four-qudit state. Every amplitude is in {1, i, -1, -i};
/// the physical state is this vector divided by sqrt(56).
StateVector build_psi_1234();

/// |Psi_4> = |0000> - |S(2,2)> on qubits (levels = 2, digit 0 = up,
/// digit 1 = down); the physical state is this vector divided by sqrt(7).
StateVector build_psi4_qubit();

/// |Psi_4> pushed through the basis map up -> |0>, down -> |1> on qudits.
StateVector build_psi4_embedded();

/// sum_k |k k>, the two-qudit maximally entangled state (unnormalized).
StateVector build_qudit_bell_pair();

/// A single computational basis state |k>.
StateVector build_product_state(const BasisKet& ket);

/// Relabels a two-level state into the four-level space: digit 0 stays 0 and
/// digit 1 becomes `target_digit`. Amplitudes are unchanged.
StateVector embed_qubit_state(const StateVector& s, int target_digit);

/// Phase c (always +1 or -1) with X^{d/2} Z^{d/2} = c Z^{d/2} X^{d/2} for the
/// d-level clock and shift operators. Computed by acting with both orderings
/// on every basis ket with exact omega = e^{2 pi i/d} exponents.
/// Requires d even and 2 <= d <= 64.
Phase commutation_phase_audit(int d);

/// Density matrix with entries numerator(r, c) / denominator, numerators in
/// Z[i]. The denominator is the squared norm of the state it came from.
class DensityMatrix {
  public:
    DensityMatrix(int dim, std::int64_t denominator);

    int dim() const { return dim_; }
    std::int64_t denominator() const { return denom_; }
    const GaussScalar& numerator(int r, int c) const { return entries_.at(static_cast<std::size_t>(r * dim_ + c)); }
    GaussScalar& numerator(int r, int c) { return entries_.at(static_cast<std::size_t>(r * dim_ + c)); }

    /// Real diagonal entry as a reduced fraction.
    Rational diagonal(int r) const;
    Rational trace() const;
    bool is_hermitian() const;
    bool is_diagonal() const;
    /// True iff the matrix is exactly I/dim.
    bool is_maximally_mixed() const;

    /// "diag(2/7, 3/14, 2/7, 3/14)" for diagonal matrices, a full grid otherwise.
    std::string to_string() const;

  private:
    int dim_;
    std::int64_t denom_;
    std::vector<GaussScalar> entries_;
};

/// Exact partial trace over every site except `site` (0-based).
DensityMatrix reduced_density(const StateVector& s, std::size_t site);

struct NonStabilizerVerdict {
    std::vector<DensityMatrix> rho;            // one per site
    std::vector<bool> maximally_mixed;         // rho[j] == I/d exactly
    bool non_stabilizer = false;               // some site deviates
};

/// Single-site marginal test. A fully entangled stabilizer state has every
/// marginal equal to I/d, so any deviation certifies non-stabilizerness. The
/// fully-entangled precondition is not checked here.
NonStabilizerVerdict nonstabilizer_test(const StateVector& s);

struct StabilizerAudit {
    bool stabilized = false;          // Z_1...Z_n s == s exactly
    bool observation_holds = false;   // per ket: digit sum = 0 mod d  <=>  ket fixed by Z_1...Z_n
    std::size_t kets_checked = 0;
    std::size_t kets_with_zero_digit_sum = 0;
};

/// Checks Z_1 Z_2 ... Z_n |s> = |s> (for qubit-level states Z is sigma_z,
/// i.e. the d = 4 word Z^2 restricted to digits {0, 1}) and audits the
/// digit-sum criterion in both directions on the support of s.
StabilizerAudit check_global_stabilizer(const StateVector& s);

/// The word whose action on s is Z_1 ... Z_n for the state's local dimension.
PauliWord global_z_word(const StateVector& s);

/// |<o|s>|^2 / norm_sq.
Rational joint_z_probability(const StateVector& s, const OutcomeTuple& o);

/// Outcomes with nonzero probability, in ascending ket order.
std::vector<OutcomeTuple> z_support(const StateVector& s);

}  // namespace davn
