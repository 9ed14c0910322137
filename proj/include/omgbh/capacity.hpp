// capacity.hpp — Gaussian entropies, coherent information at finite and
// infinite input power, and capacity reports for (tau, y) channel points.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omgbh/omg_channel.hpp"
#include "omgbh/symplectic.hpp"

namespace omgbh {

// Logarithm base for every entropic quantity. All outputs scale as 1/ln(base);
// base 2 gives bits/qubits, base e nats.
class LogBase {
public:
    explicit LogBase(double base = 2.0);

    static LogBase bits() { return LogBase(2.0); }
    static LogBase nats();

    double base() const { return base_; }
    double ln_base() const { return ln_base_; }
    double log(double x) const { return std::log(x) / ln_base_; }
    double log1p_(double x) const { return std::log1p(x) / ln_base_; }

private:
    double base_;
    double ln_base_;
};

// g(x) = (1+x) log(1+x) - x log(x), g(0) = 0: entropy of a thermal state with
// mean photon number x.
double g_entropy(double x, LogBase base = LogBase::bits());

// K = (y - |1 - tau|)/2, the added classical noise above the CP minimum.
double k_noise(double tau, double y);

// Coherent information of the (tau, y) channel on a thermal code with mean
// photon number mean_n: g(N') - g(x+) - g(x-). Requires tau > 0, tau != 1.
double coherent_info_at(double tau, double y, double mean_n,
                        LogBase base = LogBase::bits());

// Infinite-power limit of coherent_info_at. For tau != 1:
//   k log k - (1+k) log(1+k) + log(tau/|1-tau|),  k = K/|1-tau|,
// which reduces to log(tau/|1-tau|) at K = 0. For tau = 1 (classical-noise
// class) the limit is -1/ln(base) - log(K), diverging to +inf at K = 0.
double coherent_info_limit(double tau, double y, LogBase base = LogBase::bits());

struct CapacityReport {
    double tau = 0.0;
    double y = 0.0;
    CapacityStatus status = CapacityStatus::Unknown;
    double k = 0.0;                // added classical noise
    double coh_info_limit = 0.0;   // may be +-inf
    double lower_bound = 0.0;      // max(0, coh_info_limit)
    std::optional<double> exact_value;  // set for Zero (0), Exact, Infinite
    std::string notes;
};

CapacityReport capacity_report(double tau, double y, LogBase base = LogBase::bits());

// Williamson spectrum: |eigenvalues of i Omega V|, one value per mode,
// sorted descending. Valid covariances give nu >= 1.
std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& V);

// Sum of g((nu_i - 1)/2) over the symplectic spectrum; zero for pure states.
double gaussian_entropy(const CovarianceMatrix& V, LogBase base = LogBase::bits());

// Mean photon number of a one-mode covariance: (tr V - 2)/4.
double mean_photon_number(const CovarianceMatrix& V);

struct PairCoherentInfo {
    double ic_a;   // H(a-out) - H(bc-out)
    double ic_bc;  // -ic_a: the two outputs share one Stinespring isometry
};

// Coherent information of the a-channel and of its bc complement for a
// thermal code with mean photon number mean_n, from the 6x6 output covariance.
PairCoherentInfo pair_coherent_info(const BlackHoleParams& p, double mean_n,
                                    LogBase base = LogBase::bits());

}  // namespace omgbh
