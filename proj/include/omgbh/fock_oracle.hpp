// fock_oracle.hpp — brute-force verification layer: the isometry exp(X) built
// in a truncated three-mode Fock space, evolved exactly, and compared against
// the symplectic / closed-form pipeline.

#pragma once

#include <Eigen/Dense>
#include <array>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "omgbh/capacity.hpp"
#include "omgbh/omg_channel.hpp"
#include "omgbh/symplectic.hpp"

namespace omgbh::fock {

// Index layout of the truncated space: one mode holds 0..cutoff photons
// (d = cutoff + 1 levels), linear index (na*d + nb)*d + nc.
struct FockLayout {
    int cutoff;
    int d;
    long dim;

    explicit FockLayout(int cutoff_in);
    long index(int na, int nb, int nc) const {
        return (static_cast<long>(na) * d + nb) * d + nc;
    }
    std::array<int, 3> occupation(long idx) const {
        const int nc = static_cast<int>(idx % d);
        const int nb = static_cast<int>((idx / d) % d);
        const int na = static_cast<int>(idx / (static_cast<long>(d) * d));
        return {na, nb, nc};
    }
};

// Operator on the truncated space. The generator X commutes with the charge
// na - nb + nc, so both X and exp(X) are stored block-diagonally over the
// charge sectors; X is real antisymmetric, exp(X) real orthogonal.
class TruncatedOp {
public:
    explicit TruncatedOp(const FockLayout& layout);

    const FockLayout& layout() const { return layout_; }
    long dim() const { return layout_.dim; }
    int sector_count() const { return static_cast<int>(blocks_.size()); }

    double element(long row, long col) const;
    Eigen::MatrixXd dense() const;  // refuses above dim 4096

    Eigen::VectorXd apply(const Eigen::VectorXd& v) const;
    Eigen::VectorXd apply_transpose(const Eigen::VectorXd& v) const;

    // max |B^t B - id| over the sector blocks
    double orthogonality_defect() const;
    // max |B + B^t| over the sector blocks
    double antisymmetry_defect() const;

    Eigen::MatrixXd& block(int sector) { return blocks_[static_cast<size_t>(sector)]; }
    const Eigen::MatrixXd& block(int sector) const {
        return blocks_[static_cast<size_t>(sector)];
    }
    const std::vector<long>& sector_states(int sector) const {
        return sector_states_[static_cast<size_t>(sector)];
    }
    int sector_of(long idx) const { return state_sector_[static_cast<size_t>(idx)]; }
    int pos_of(long idx) const { return state_pos_[static_cast<size_t>(idx)]; }

private:
    FockLayout layout_;
    std::vector<std::vector<long>> sector_states_;
    std::vector<int> state_sector_;
    std::vector<int> state_pos_;
    std::vector<Eigen::MatrixXd> blocks_;
};

// X = r kappa (a'b' - ab) + s (a'c - ac'), antisymmetric by construction;
// r kappa enters as sqrt(s^2 - r^2). Refuses cutoff < 2 and d^3 > 10^6.
TruncatedOp build_generator(const BlackHoleParams& p, int cutoff);

// Per-sector Padé scaling-and-squaring exponential.
TruncatedOp exponentiate(const TruncatedOp& X);

// Applies the exponential of a generator to states, exponentiating only the
// charge sectors a state actually touches. Thread-safe.
class Propagator {
public:
    explicit Propagator(TruncatedOp generator);

    const FockLayout& layout() const { return X_.layout(); }

    // e^{-X} v: the Schrodinger-picture evolution matching the Heisenberg
    // map O -> e^X O e^{-X}.
    Eigen::VectorXd propagate(const Eigen::VectorXd& v) const;
    // e^{X} v
    Eigen::VectorXd propagate_back(const Eigen::VectorXd& v) const;

    double orthogonality_defect_of_used_sectors() const;

private:
    const Eigen::MatrixXd& exp_block(int sector) const;
    Eigen::VectorXd apply_cached(const Eigen::VectorXd& v, bool transpose) const;

    TruncatedOp X_;
    mutable std::vector<std::unique_ptr<Eigen::MatrixXd>> cache_;
    mutable std::mutex mutex_;
};

// Single-mode ladder action on the three-mode tensor, mode in {0: a, 1: b,
// 2: c}. Truncation drops the component leaving the space.
Eigen::VectorXd apply_annihilation(const FockLayout& layout, const Eigen::VectorXd& v,
                                   int mode);
Eigen::VectorXd apply_creation(const FockLayout& layout, const Eigen::VectorXd& v,
                               int mode);

// Mixture of real pure states on the three-mode space.
struct StateMixture {
    std::vector<double> weights;
    std::vector<Eigen::VectorXd> states;
};

// |0,0,.> tensored with a vacuum / thermal / axis-squeezed c-mode state read
// off the covariance. Throws std::invalid_argument for anything else.
StateMixture synthesize_input(const FockLayout& layout, const CovarianceMatrix& v_c);

// Full 6x6 covariance (q_a, p_a, q_b, p_b, q_c, p_c) of a state mixture,
// from first and second quadrature moments, hbar = 2.
Eigen::Matrix<double, 6, 6> covariance_of(const FockLayout& layout,
                                          const StateMixture& mix);

double total_photon_number(const FockLayout& layout, const StateMixture& mix);
double mode_photon_number(const FockLayout& layout, const StateMixture& mix, int mode);

// Hermitian, trace-one, positive semidefinite matrix (real representation:
// every state this oracle evolves is real).
struct FockDensity {
    Eigen::MatrixXd rho;

    explicit FockDensity(Eigen::MatrixXd m);
    double entropy(LogBase base = LogBase::bits()) const;
};

FockDensity reduced_density_a(const FockLayout& layout, const StateMixture& mix);
FockDensity reduced_density_bc(const FockLayout& layout, const StateMixture& mix);

struct BogoliubovReport {
    double r = 0.0, s = 0.0;
    int cutoff = 0;
    std::array<double, 3> extracted{};  // coefficients of (a, b', c)
    std::array<double, 3> expected{};   // first row of L
    double coeff_deviation = 0.0;
    double residual = 0.0;  // relative off-span norm
    bool pass = false;
};

// Computes e^X a e^{-X} on the states with at most two photons, projects onto
// span{a, b', c} and compares with the first row of L.
BogoliubovReport verify_bogoliubov(const BlackHoleParams& p, int cutoff, double tol);

struct ChannelActionReport {
    double r = 0.0, s = 0.0;
    int cutoff = 0;
    std::string input_kind;
    double residual_a = 0.0;
    double residual_b = 0.0;
    double residual_c = 0.0;
    double residual_bc = 0.0;
    double max_residual = 0.0;
    double unitarity_defect = 0.0;
    bool pass = false;
};

// Evolves the synthesized input, extracts every mode covariance and the 4x4
// bc block, and compares with T V T^t + N and bc_complement_covariance. The
// closed forms are fed the measured covariance of the truncated input state,
// so the comparison isolates evolution error.
ChannelActionReport verify_channel_action(const BlackHoleParams& p,
                                          const CovarianceMatrix& v_in, int cutoff,
                                          double tol);

// S(rho_a) - S(rho_bc) for a thermal code with mean photon number mean_n on
// mode c. Requires mean_n <= cutoff/6.
double fock_coherent_info(const BlackHoleParams& p, double mean_n, int cutoff,
                          LogBase base = LogBase::bits());

}  // namespace omgbh::fock
