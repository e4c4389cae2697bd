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

#include "ionrot/fock.hpp"

#include <cmath>

namespace ionrot {

Basis Basis::make(int cutoff_a, int cutoff_b)
{
    if (cutoff_a < 0 || cutoff_b < 0) {
        throw std::invalid_argument("Basis cutoffs must be non-negative");
    }
    Basis b;
    b.cutoff_a = cutoff_a;
    b.cutoff_b = cutoff_b;
    b.dim = (cutoff_a + 1) * (cutoff_b + 1);
    return b;
}

double factorial(int n)
{
    double f = 1.0;
    for (int k = 2; k <= n; ++k) {
        f *= k;
    }
    return f;
}

namespace {

// single-mode annihilation operator on a (cutoff+1)-dimensional space
Matrix lower_single(int cutoff)
{
    Matrix m = Matrix::Zero(cutoff + 1, cutoff + 1);
    for (int n = 1; n <= cutoff; ++n) {
        m(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return m;
}

Matrix power(const Matrix& m, int p)
{
    Matrix out = Matrix::Identity(m.rows(), m.cols());
    for (int k = 0; k < p; ++k) {
        out = m * out;
    }
    return out;
}

}  // namespace

Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix ladder_op(FockMode mode, LadderKind kind, const Basis& basis)
{
    const int cut = (mode == FockMode::A) ? basis.cutoff_a : basis.cutoff_b;
    Matrix single = lower_single(cut);
    if (kind == LadderKind::Raise) {
        single = single.adjoint().eval();
    }
    if (mode == FockMode::A) {
        return kron(single, Matrix::Identity(basis.cutoff_b + 1, basis.cutoff_b + 1));
    }
    return kron(Matrix::Identity(basis.cutoff_a + 1, basis.cutoff_a + 1), single);
}

Matrix monomial_op(int m, int mu, int nu, int n, const Basis& basis)
{
    if (m < 0 || mu < 0 || nu < 0 || n < 0) {
        throw std::invalid_argument("monomial_op exponents must be non-negative");
    }
    const Matrix la = lower_single(basis.cutoff_a);
    const Matrix lb = lower_single(basis.cutoff_b);
    const Matrix part_a = power(la.adjoint(), m) * power(la, mu);
    const Matrix part_b = power(lb.adjoint(), nu) * power(lb, n);
    return kron(part_a, part_b);
}

void StateVector::normalize()
{
    const double n = amps.norm();
    if (n == 0.0) {
        throw std::invalid_argument("cannot normalize a zero state");
    }
    amps /= n;
}

CoherentState coherent_state(Complex alpha_a, Complex alpha_b, const Basis& basis)
{
    const double pref = std::exp(-0.5 * (std::norm(alpha_a) + std::norm(alpha_b)));
    Vector amps(basis.dim);
    for (int na = 0; na <= basis.cutoff_a; ++na) {
        for (int nb = 0; nb <= basis.cutoff_b; ++nb) {
            const Complex ca = std::pow(alpha_a, na) / std::sqrt(factorial(na));
            const Complex cb = std::pow(alpha_b, nb) / std::sqrt(factorial(nb));
            amps(basis.index(na, nb)) = pref * ca * cb;
        }
    }
    CoherentState out;
    out.truncated_norm = amps.norm();
    out.tail_warning = out.truncated_norm < 1.0 - 1e-6;
    out.state = StateVector{basis, amps};
    out.state.normalize();
    return out;
}

Complex overlap(const StateVector& x, const StateVector& y)
{
    if (!(x.basis == y.basis)) {
        throw BasisMismatch("overlap: states built on different bases");
    }
    return x.amps.dot(y.amps);  // Eigen's dot conjugates the left argument
}

Complex expectation(const Matrix& op, const StateVector& x)
{
    if (op.rows() != x.basis.dim || op.cols() != x.basis.dim) {
        throw BasisMismatch("expectation: operator dimension does not match state");
    }
    return x.amps.dot(op * x.amps);
}

double hermiticity_defect(const Matrix& h)
{
    return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace ionrot
