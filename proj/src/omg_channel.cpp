#include "omgbh/omg_channel.hpp"

#include <cmath>
#include <complex>

#include "omgbh/capacity.hpp"
#include "omgbh/symplectic.hpp"

namespace omgbh {

std::string to_string(ChannelClass c) {
    switch (c) {
        case ChannelClass::A1: return "A1";
        case ChannelClass::A2: return "A2";
        case ChannelClass::B1: return "B1";
        case ChannelClass::B2: return "B2";
        case ChannelClass::B2Identity: return "B2Identity";
        case ChannelClass::CLoss: return "CLoss";
        case ChannelClass::CAmp: return "CAmp";
        case ChannelClass::D: return "D";
    }
    return "?";
}

std::string to_string(CapacityStatus s) {
    switch (s) {
        case CapacityStatus::Zero: return "Zero";
        case CapacityStatus::Exact: return "Exact";
        case CapacityStatus::PositiveLowerBound: return "PositiveLowerBound";
        case CapacityStatus::Unknown: return "Unknown";
        case CapacityStatus::Infinite: return "Infinite";
    }
    return "?";
}

CovarianceMatrix::CovarianceMatrix(Eigen::MatrixXd V, double sym_tol) : V_(std::move(V)) {
    if (V_.rows() != V_.cols() || V_.rows() == 0 || V_.rows() % 2 != 0) {
        throw std::invalid_argument("CovarianceMatrix: need square 2m x 2m matrix");
    }
    if ((V_ - V_.transpose()).cwiseAbs().maxCoeff() > sym_tol) {
        throw std::invalid_argument("CovarianceMatrix: matrix not symmetric");
    }
    V_ = 0.5 * (V_ + V_.transpose().eval());
}

bool CovarianceMatrix::is_physical(double tol) const {
    using Cx = std::complex<double>;
    const int n = static_cast<int>(V_.rows());
    Eigen::MatrixXcd H = V_.cast<Cx>();
    const Eigen::MatrixXd omega = symplectic_form(n / 2);
    H += Cx(0, 1) * omega.cast<Cx>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

CovarianceMatrix CovarianceMatrix::vacuum(int n_modes) {
    return CovarianceMatrix(Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

CovarianceMatrix CovarianceMatrix::thermal(double mean_n) {
    if (!(mean_n >= 0.0)) {
        throw std::invalid_argument("thermal: mean photon number must be >= 0");
    }
    return CovarianceMatrix((2.0 * mean_n + 1.0) * Eigen::MatrixXd::Identity(2, 2));
}

CovarianceMatrix CovarianceMatrix::squeezed_vacuum(double zeta) {
    Eigen::MatrixXd V(2, 2);
    V << std::exp(2.0 * zeta), 0.0,
         0.0, std::exp(-2.0 * zeta);
    return CovarianceMatrix(V);
}

double OneModeChannel::y() const {
    return std::sqrt(std::max(N.determinant(), 0.0));
}

namespace {

int matrix_rank2(const Mat2& M, double tol) {
    Eigen::JacobiSVD<Mat2> svd(M);
    const auto& sv = svd.singularValues();
    const double thresh = tol * std::max(1.0, sv(0));
    int rank = 0;
    for (int i = 0; i < 2; ++i) {
        if (sv(i) > thresh) ++rank;
    }
    return rank;
}

}  // namespace

int OneModeChannel::rank_r(double tol) const {
    return std::min(matrix_rank2(T, tol), matrix_rank2(N, tol));
}

OneModeChannel make_channel(const Mat2& T, const Mat2& N, double tol) {
    if (std::abs(N(0, 1) - N(1, 0)) > tol) {
        throw std::invalid_argument("make_channel: N must be symmetric");
    }
    OneModeChannel ch{T, 0.5 * (N + N.transpose())};
    Eigen::SelfAdjointEigenSolver<Mat2> es(ch.N, Eigen::EigenvaluesOnly);
    const double tau = ch.tau();
    const double y = ch.y();
    if (es.eigenvalues().minCoeff() < -tol) {
        throw CpViolationError("make_channel: N not positive semidefinite", tau, y);
    }
    if (y < std::abs(tau - 1.0) - tol) {
        throw CpViolationError("make_channel: y < |tau - 1|", tau, y);
    }
    return ch;
}

OneModeChannel canonical_channel(double tau, double y, double tol) {
    Mat2 T;
    if (tau >= 0.0) {
        T = std::sqrt(tau) * Mat2::Identity();
    } else {
        T << std::sqrt(-tau), 0.0,
             0.0, -std::sqrt(-tau);
    }
    return make_channel(T, y * Mat2::Identity(), tol);
}

CovarianceMatrix apply(const OneModeChannel& ch, const CovarianceMatrix& v_in) {
    if (v_in.modes() != 1) {
        throw std::invalid_argument("apply: input must be a one-mode covariance");
    }
    if (!v_in.is_physical()) {
        throw std::invalid_argument("apply: input covariance violates V + i omega >= 0");
    }
    const Eigen::MatrixXd& V = v_in.matrix();
    return CovarianceMatrix(ch.T * V * ch.T.transpose() + ch.N);
}

ChannelClass classify(const OneModeChannel& ch, double tol) {
    const double tau = ch.tau();
    if (tau < -tol) return ChannelClass::D;
    if (std::abs(tau) <= tol) {
        return matrix_rank2(ch.T, tol) == 0 ? ChannelClass::A1 : ChannelClass::A2;
    }
    if (std::abs(tau - 1.0) <= tol) {
        switch (matrix_rank2(ch.N, tol)) {
            case 0: return ChannelClass::B2Identity;
            case 1: return ChannelClass::B1;
            default: return ChannelClass::B2;
        }
    }
    return tau < 1.0 ? ChannelClass::CLoss : ChannelClass::CAmp;
}

bool is_entanglement_breaking(double tau, double y) {
    return y >= std::abs(tau) + 1.0;
}

CapacityStatus capacity_region(double tau, double y, double tol) {
    if (y < std::abs(tau - 1.0) - tol) {
        throw CpViolationError("capacity_region: point not completely positive", tau, y);
    }
    if (std::abs(tau - 1.0) <= tol && y <= tol) {
        return CapacityStatus::Infinite;
    }
    if (y >= tau - tol) {
        return CapacityStatus::Zero;
    }
    if (tau >= 1.0 - tol && std::abs(y - (tau - 1.0)) <= tol) {
        return CapacityStatus::Exact;
    }
    if (tau >= 0.5 - tol && tau <= 1.0 + tol && std::abs(y - (1.0 - tau)) <= tol) {
        return CapacityStatus::Exact;
    }
    // Here y < tau forces tau > |tau - 1| hence tau > 1/2, so the limit
    // formula below is always in its supported range.
    const double limit = coherent_info_limit(tau, y, LogBase::bits());
    return limit > 0.0 ? CapacityStatus::PositiveLowerBound : CapacityStatus::Unknown;
}

}  // namespace omgbh
