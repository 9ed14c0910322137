#include "omgbh/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "omgbh/blackhole_map.hpp"

namespace omgbh {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

LogBase::LogBase(double base) : base_(base) {
    if (!(base > 1.0) || !std::isfinite(base)) {
        throw std::invalid_argument("LogBase: base must be finite and > 1");
    }
    ln_base_ = std::log(base);
}

LogBase LogBase::nats() { return LogBase(std::exp(1.0)); }

double g_entropy(double x, LogBase base) {
    if (x < 0.0) {
        throw std::invalid_argument("g_entropy: argument must be >= 0");
    }
    if (x == 0.0) return 0.0;
    // (1+x) log(1+x) - x log x  =  x log1p(1/x) + log1p(x)
    return (x * std::log1p(1.0 / x) + std::log1p(x)) / base.ln_base();
}

double k_noise(double tau, double y) {
    const double k = 0.5 * (y - std::abs(1.0 - tau));
    if (k < -1e-9) {
        throw CpViolationError("k_noise: y < |1 - tau|", tau, y);
    }
    return std::max(k, 0.0);
}

double coherent_info_at(double tau, double y, double mean_n, LogBase base) {
    if (tau <= 0.0) {
        throw UnsupportedClassError("coherent_info_at: requires tau > 0");
    }
    if (tau == 1.0) {
        throw std::invalid_argument(
            "coherent_info_at: tau = 1 is handled by coherent_info_limit");
    }
    if (!(mean_n >= 0.0)) {
        throw std::invalid_argument("coherent_info_at: mean_n must be >= 0");
    }
    const double K = k_noise(tau, y);
    const double N = mean_n;
    // c = N' - tau N: thermal noise, plus the vacuum gain term above tau = 1
    const double c = (tau < 1.0) ? K : tau - 1.0 + K;
    const double n_out = tau * N + c;

    // D^2 = (N + N' + 1)^2 - 4 tau N (N+1), expanded so every term is
    // nonnegative (no large-N cancellation):
    const double one_minus_tau = 1.0 - tau;
    const double d2 = one_minus_tau * one_minus_tau * N * N +
                      2.0 * N * ((1.0 + tau) * (c + 1.0) - 2.0 * tau) +
                      (c + 1.0) * (c + 1.0);
    if (d2 < 0.0) {
        throw InternalInconsistencyError("coherent_info_at: D^2 < 0");
    }
    const double D = std::sqrt(d2);

    double x_plus = 0.5 * (D + n_out - N - 1.0);
    double x_minus = 0.5 * (D - n_out + N - 1.0);
    // x± are photon numbers; rounding in the large-N regime can push them a
    // scale-relative hair below zero.
    const double clamp_floor =
        -(1e-12 + 64.0 * std::numeric_limits<double>::epsilon() * (N + n_out + 2.0));
    for (double* x : {&x_plus, &x_minus}) {
        if (*x < 0.0) {
            if (*x < clamp_floor) {
                throw InternalInconsistencyError("coherent_info_at: x± < 0");
            }
            *x = 0.0;
        }
    }
    return g_entropy(n_out, base) - g_entropy(x_plus, base) - g_entropy(x_minus, base);
}

double coherent_info_limit(double tau, double y, LogBase base) {
    if (tau <= 0.0) {
        throw UnsupportedClassError("coherent_info_limit: requires tau > 0");
    }
    const double K = k_noise(tau, y);
    if (tau == 1.0) {
        if (K <= 0.0) return kInf;
        return -1.0 / base.ln_base() - base.log(K);
    }
    const double at = std::abs(1.0 - tau);
    const double k = K / at;
    // k log k - (1+k) log(1+k) + log(tau/|1-tau|)
    //   = log(tau) - log(|1-tau| + K) - k log1p(1/k)
    const double corr = (k > 0.0) ? k * std::log1p(1.0 / k) / base.ln_base() : 0.0;
    return base.log(tau) - base.log(at + K) - corr;
}

std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& V) {
    if (!V.is_physical()) {
        throw std::invalid_argument("symplectic_eigenvalues: invalid covariance");
    }
    const int m = V.modes();
    const Eigen::MatrixXd omega = symplectic_form(m);
    Eigen::EigenSolver<Eigen::MatrixXd> es(omega * V.matrix(), false);
    std::vector<double> all(2 * m);
    for (int i = 0; i < 2 * m; ++i) {
        all[static_cast<size_t>(i)] = std::abs(es.eigenvalues()(i));
    }
    std::sort(all.begin(), all.end(), std::greater<>());
    std::vector<double> nus(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        nus[static_cast<size_t>(i)] = all[static_cast<size_t>(2 * i)];
    }
    return nus;
}

double gaussian_entropy(const CovarianceMatrix& V, LogBase base) {
    double h = 0.0;
    for (double nu : symplectic_eigenvalues(V)) {
        h += g_entropy(0.5 * (std::max(nu, 1.0) - 1.0), base);
    }
    return h;
}

double mean_photon_number(const CovarianceMatrix& V) {
    if (V.modes() != 1) {
        throw std::invalid_argument("mean_photon_number: one-mode covariance expected");
    }
    return (V.matrix().trace() - 2.0) / 4.0;
}

PairCoherentInfo pair_coherent_info(const BlackHoleParams& p, double mean_n,
                                    LogBase base) {
    if (!(mean_n >= 0.0)) {
        throw std::invalid_argument("pair_coherent_info: mean_n must be >= 0");
    }
    const Mat6 S = black_hole_symplectic(p);
    Mat6 V_in = Mat6::Identity();
    V_in.block<2, 2>(4, 4) = (2.0 * mean_n + 1.0) * Mat2::Identity();
    const Mat6 V_out = S * V_in * S.transpose();
    const double h_a = gaussian_entropy(CovarianceMatrix(V_out.block<2, 2>(0, 0)), base);
    const double h_bc = gaussian_entropy(CovarianceMatrix(V_out.block<4, 4>(2, 2)), base);
    const double ic_a = h_a - h_bc;
    return {ic_a, -ic_a};
}

namespace {

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

CapacityReport capacity_report(double tau, double y, LogBase base) {
    constexpr double tol = 1e-9;
    CapacityReport rep;
    rep.tau = tau;
    rep.y = y;
    rep.k = k_noise(tau, y);  // validates CP
    rep.status = capacity_region(tau, y, tol);

    std::string branch;
    if (tau > tol) {
        rep.coh_info_limit = coherent_info_limit(tau, y, base);
        if (std::abs(tau - 1.0) <= tol && tau != 1.0) {
            // evaluate the singular class on its own branch
            rep.coh_info_limit = coherent_info_limit(1.0, y, base);
        }
        if (tau == 1.0 || std::abs(tau - 1.0) <= tol) {
            branch = rep.k <= tol ? "identity point"
                                  : "tau=1 classical-noise limit -1/ln(b) - log(K)";
        } else if (rep.k <= tol) {
            branch = "K=0 reduction log(tau/|1-tau|)";
        } else {
            branch = "general infinite-power limit";
        }
    } else {
        // tau <= 0 classes are entanglement breaking; the limit formula does
        // not apply and the coherent information tends to -inf.
        rep.coh_info_limit = -kInf;
        branch = "tau <= 0: outside the loss/amplifier families";
    }
    rep.lower_bound = std::max(0.0, rep.coh_info_limit);

    switch (rep.status) {
        case CapacityStatus::Zero:
            rep.exact_value = 0.0;
            rep.notes = "antidegradable composition region (y >= tau): capacity 0";
            if (near(tau, 0.5, tol) && near(y, 0.5, tol)) {
                rep.notes += "; degradable and antidegradable";
            } else if (near(y, tau, tol)) {
                rep.notes += "; on the y = tau boundary";
            }
            if (is_entanglement_breaking(tau, y)) {
                rep.notes += "; entanglement breaking";
            }
            break;
        case CapacityStatus::Exact:
            rep.exact_value = rep.coh_info_limit;
            rep.notes = "degradable boundary: single-letter capacity";
            break;
        case CapacityStatus::Infinite:
            rep.exact_value = kInf;
            rep.notes = "noiseless identity channel: capacity diverges";
            break;
        case CapacityStatus::PositiveLowerBound:
            rep.notes = "coherent-information lower bound is positive";
            break;
        case CapacityStatus::Unknown:
            rep.notes = "coherent information <= 0: capacity unknown in this region";
            break;
    }
    rep.notes += "; branch: " + branch;
    return rep;
}

}  // namespace omgbh
