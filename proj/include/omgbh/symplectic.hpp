// symplectic.hpp — isometry parameters and the symplectic matrices they induce
// on the three modes (a: outgoing, b: interior, c: infalling signal).

#pragma once

#include <Eigen/Dense>

#include "omgbh/errors.hpp"

namespace omgbh {

using Mat3 = Eigen::Matrix3d;
using Mat6 = Eigen::Matrix<double, 6, 6>;

// sin(x)/x, continuous at 0.
double sinc(double x);

// (1 - cos x)/x^2, continuous at 0 (limit 1/2).
double cosc(double x);

// Parameters of the three-mode isometry exp(X),
//   X = r*kappa*(a'b' - ab) + s*(a'c - ac'),   kappa^2 = s^2/r^2 - 1.
// Complete positivity of the induced a-channel requires s >= r >= 0.
// r*kappa = sqrt(s^2 - r^2) stays finite for all admissible inputs, so that
// product is what gets stored; kappa itself diverges as r -> 0.
struct BlackHoleParams {
    double r;
    double s;
    double r_kappa;  // sqrt(s^2 - r^2)

    BlackHoleParams(double r_in, double s_in);
};

struct BogoliubovCoeffs {
    double alpha;  // cos r
    double beta;   // +sqrt(s^2/r^2 - 1) sin r  (positive branch)
    double gamma;  // -(s/r) sin r

    // alpha^2 - beta^2 + gamma^2, equal to 1 for every valid parameter pair
    double normalization() const { return alpha * alpha - beta * beta + gamma * gamma; }
};

// Omega = omega ⊕ omega ⊕ ... (n copies), omega = [[0,1],[-1,0]].
Eigen::MatrixXd symplectic_form(int n_modes);

// Coefficients of the outgoing field operator A = alpha a + beta b' + gamma c,
// evaluated through sinc so the r -> 0 limit is exact.
BogoliubovCoeffs bogoliubov_coeffs(const BlackHoleParams& p);

// 3x3 matrix mapping the operator list {a, b', c} to {A, B', C}.
// Row 0 carries (alpha, -beta, gamma); see bogoliubov_coeffs.
Mat3 build_L(const BlackHoleParams& p);

// Quadrature-basis symplectic matrix S = Sigma^{-1} (L ⊕ L) Sigma acting on
// (q_a, p_a, q_b, p_b, q_c, p_c), with the ladder list interleaved as
// {a, a', b, b', c, c'} and Sigma = sigma ⊕ sigma ⊕ sigma, sigma = [[1,i],[1,-i]].
// hbar = 2 throughout: the vacuum covariance is the identity.
Mat6 embed_and_quadrature(const Mat3& L);

// max |M Omega M^T - Omega| <= tol
bool is_symplectic(const Eigen::MatrixXd& M, double tol = 1e-10);

}  // namespace omgbh
