// Copyright 2026 The ionrot Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace ionrot {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Thrown when two objects built over different truncated bases are combined.
struct BasisMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Truncated two-mode number-state basis. Flat indices run row-major:
/// mode-a occupation is the outer index, mode-b the inner one. This
/// ordering is fixed; file formats depend on it.
struct Basis {
    int cutoff_a = 0;  // max occupation in mode a, inclusive
    int cutoff_b = 0;
    int dim = 1;

    static Basis make(int cutoff_a, int cutoff_b);

    int index(int n_a, int n_b) const { return n_a * (cutoff_b + 1) + n_b; }
    int occ_a(int flat) const { return flat / (cutoff_b + 1); }
    int occ_b(int flat) const { return flat % (cutoff_b + 1); }

    bool operator==(const Basis&) const = default;
};

enum class FockMode { A, B };
enum class LadderKind { Lower, Raise };

/// Annihilation/creation operator on one mode, embedded in the two-mode
/// space. Matrix elements that would raise an occupation past the cutoff
/// are dropped.
Matrix ladder_op(FockMode mode, LadderKind kind, const Basis& basis);

/// Normal-ordered monomial a^dag^m a^mu b^dag^nu b^n.
Matrix monomial_op(int m, int mu, int nu, int n, const Basis& basis);

struct StateVector {
    Basis basis;
    Vector amps;

    double norm() const { return amps.norm(); }
    void normalize();
};

struct CoherentState {
    StateVector state;        // renormalized over the truncated basis
    double truncated_norm;    // norm captured by the basis before renormalization
    bool tail_warning;        // truncated_norm < 1 - 1e-6
};

/// Two-mode coherent state |alpha_a>|alpha_b> projected onto the basis.
CoherentState coherent_state(Complex alpha_a, Complex alpha_b, const Basis& basis);

Complex overlap(const StateVector& x, const StateVector& y);
Complex expectation(const Matrix& op, const StateVector& x);

/// max elementwise |H - H^dag|.
double hermiticity_defect(const Matrix& h);

/// Kronecker product with mode-a factors on the outer (row-major) index.
Matrix kron(const Matrix& a, const Matrix& b);

double factorial(int n);

}  // namespace ionrot
