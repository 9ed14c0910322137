// omg_channel.hpp — one-mode Gaussian channels as (T, N) pairs, covariance
// evolution, and the classification predicates on the (tau, y) plane.

#pragma once

#include <Eigen/Dense>
#include <string>

#include "omgbh/errors.hpp"

namespace omgbh {

using Mat2 = Eigen::Matrix2d;

enum class ChannelClass { A1, A2, B1, B2, B2Identity, CLoss, CAmp, D };

enum class CapacityStatus { Zero, Exact, PositiveLowerBound, Unknown, Infinite };

std::string to_string(ChannelClass c);
std::string to_string(CapacityStatus s);

// Second-moment matrix of an m-mode Gaussian state, hbar = 2 (vacuum = id).
class CovarianceMatrix {
public:
    explicit CovarianceMatrix(Eigen::MatrixXd V, double sym_tol = 1e-9);

    int modes() const { return static_cast<int>(V_.rows() / 2); }
    const Eigen::MatrixXd& matrix() const { return V_; }

    // V + i Omega >= -tol (for one mode equivalently det V >= 1, V > 0)
    bool is_physical(double tol = 1e-9) const;

    static CovarianceMatrix vacuum(int n_modes = 1);
    static CovarianceMatrix thermal(double mean_n);         // (2n+1) id
    static CovarianceMatrix squeezed_vacuum(double zeta);   // diag(e^{2z}, e^{-2z})

private:
    Eigen::MatrixXd V_;
};

// Completely positive one-mode Gaussian map V -> T V T^t + N.
// tau and y are recomputed from the matrices on every call.
struct OneModeChannel {
    Mat2 T;
    Mat2 N;

    double tau() const { return T.determinant(); }
    double y() const;
    int rank_r(double tol = 1e-10) const;  // min(rank T, rank N)
};

// Validates N symmetric (within tol) and complete positivity
// y >= |tau - 1| - tol, min eig N >= -tol. Throws CpViolationError with the
// offending (tau, y) otherwise.
OneModeChannel make_channel(const Mat2& T, const Mat2& N, double tol = 1e-9);

// Canonical representative of the class containing the point (tau, y):
// T = sqrt(tau) id for tau >= 0, sqrt(-tau) sigma_z for tau < 0, N = y id.
OneModeChannel canonical_channel(double tau, double y, double tol = 1e-9);

CovarianceMatrix apply(const OneModeChannel& ch, const CovarianceMatrix& v_in);

// Class label from (tau, rank) with tol-band boundaries. Points within tol of
// tau = 1 report the classical-noise family, discriminated by rank N:
// 0 -> B2Identity, 1 -> B1, 2 -> B2.
ChannelClass classify(const OneModeChannel& ch, double tol = 1e-9);

// y >= |tau| + 1, boundary inclusive.
bool is_entanglement_breaking(double tau, double y);

// Capacity status of the completely positive point (tau, y):
//   Infinite            |tau-1| <= tol and y <= tol (noiseless identity)
//   Zero                y >= tau - tol (antidegradable composition region;
//                       wins ties with Exact at (1/2, 1/2))
//   Exact               degradable boundary y = tau-1 (tau >= 1) or
//                       y = 1-tau (1/2 <= tau <= 1)
//   PositiveLowerBound  y < tau and the infinite-power coherent information
//                       is positive
//   Unknown             y < tau, coherent information <= 0
CapacityStatus capacity_region(double tau, double y, double tol = 1e-9);

}  // namespace omgbh
