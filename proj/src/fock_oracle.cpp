#include "omgbh/fock_oracle.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

#include "omgbh/blackhole_map.hpp"

namespace omgbh::fock {

FockLayout::FockLayout(int cutoff_in) : cutoff(cutoff_in), d(cutoff_in + 1) {
    if (cutoff < 2) {
        throw std::invalid_argument("FockLayout: cutoff must be >= 2");
    }
    dim = static_cast<long>(d) * d * d;
    if (dim > 1000000) {
        throw std::invalid_argument("FockLayout: d^3 exceeds the 10^6 size guard");
    }
}

TruncatedOp::TruncatedOp(const FockLayout& layout) : layout_(layout) {
    // charge m = na - nb + nc runs from -cutoff to 2*cutoff
    const int n_sectors = 3 * layout_.cutoff + 1;
    sector_states_.resize(static_cast<size_t>(n_sectors));
    state_sector_.resize(static_cast<size_t>(layout_.dim));
    state_pos_.resize(static_cast<size_t>(layout_.dim));
    for (long idx = 0; idx < layout_.dim; ++idx) {
        const auto [na, nb, nc] = layout_.occupation(idx);
        const int sector = na - nb + nc + layout_.cutoff;
        state_sector_[static_cast<size_t>(idx)] = sector;
        state_pos_[static_cast<size_t>(idx)] =
            static_cast<int>(sector_states_[static_cast<size_t>(sector)].size());
        sector_states_[static_cast<size_t>(sector)].push_back(idx);
    }
    blocks_.reserve(static_cast<size_t>(n_sectors));
    for (const auto& states : sector_states_) {
        blocks_.emplace_back(Eigen::MatrixXd::Zero(static_cast<long>(states.size()),
                                                   static_cast<long>(states.size())));
    }
}

double TruncatedOp::element(long row, long col) const {
    const int sr = sector_of(row);
    if (sr != sector_of(col)) return 0.0;
    return blocks_[static_cast<size_t>(sr)](pos_of(row), pos_of(col));
}

Eigen::MatrixXd TruncatedOp::dense() const {
    if (dim() > 4096) {
        throw std::invalid_argument("TruncatedOp::dense: dimension too large");
    }
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dim(), dim());
    for (size_t s = 0; s < blocks_.size(); ++s) {
        const auto& states = sector_states_[s];
        for (size_t i = 0; i < states.size(); ++i) {
            for (size_t j = 0; j < states.size(); ++j) {
                M(states[i], states[j]) =
                    blocks_[s](static_cast<long>(i), static_cast<long>(j));
            }
        }
    }
    return M;
}

Eigen::VectorXd TruncatedOp::apply(const Eigen::VectorXd& v) const {
    if (v.size() != dim()) {
        throw std::invalid_argument("TruncatedOp::apply: dimension mismatch");
    }
    Eigen::VectorXd out = Eigen::VectorXd::Zero(dim());
    for (size_t s = 0; s < blocks_.size(); ++s) {
        const auto& states = sector_states_[s];
        if (states.empty()) continue;
        Eigen::VectorXd seg(static_cast<long>(states.size()));
        for (size_t i = 0; i < states.size(); ++i) {
            seg(static_cast<long>(i)) = v(states[i]);
        }
        if (seg.isZero(0.0)) continue;
        seg = blocks_[s] * seg;
        for (size_t i = 0; i < states.size(); ++i) {
            out(states[i]) = seg(static_cast<long>(i));
        }
    }
    return out;
}

Eigen::VectorXd TruncatedOp::apply_transpose(const Eigen::VectorXd& v) const {
    if (v.size() != dim()) {
        throw std::invalid_argument("TruncatedOp::apply_transpose: dimension mismatch");
    }
    Eigen::VectorXd out = Eigen::VectorXd::Zero(dim());
    for (size_t s = 0; s < blocks_.size(); ++s) {
        const auto& states = sector_states_[s];
        if (states.empty()) continue;
        Eigen::VectorXd seg(static_cast<long>(states.size()));
        for (size_t i = 0; i < states.size(); ++i) {
            seg(static_cast<long>(i)) = v(states[i]);
        }
        if (seg.isZero(0.0)) continue;
        seg = blocks_[s].transpose() * seg;
        for (size_t i = 0; i < states.size(); ++i) {
            out(states[i]) = seg(static_cast<long>(i));
        }
    }
    return out;
}

double TruncatedOp::orthogonality_defect() const {
    double defect = 0.0;
    for (const auto& B : blocks_) {
        if (B.rows() == 0) continue;
        const long n = B.rows();
        defect = std::max(defect, (B.transpose() * B -
                                   Eigen::MatrixXd::Identity(n, n))
                                      .cwiseAbs()
                                      .maxCoeff());
    }
    return defect;
}

double TruncatedOp::antisymmetry_defect() const {
    double defect = 0.0;
    for (const auto& B : blocks_) {
        if (B.rows() == 0) continue;
        defect = std::max(defect, (B + B.transpose()).cwiseAbs().maxCoeff());
    }
    return defect;
}

TruncatedOp build_generator(const BlackHoleParams& p, int cutoff) {
    FockLayout layout(cutoff);
    TruncatedOp X(layout);
    const double rk = p.r_kappa;
    const double s = p.s;
    // Fill from the creation-side terms only; each writes the (to, from) and
    // (from, to) slots with opposite sign, so X is antisymmetric exactly.
    for (long idx = 0; idx < layout.dim; ++idx) {
        const auto [na, nb, nc] = layout.occupation(idx);
        const int sector = X.sector_of(idx);
        auto& B = X.block(sector);
        const int pi = X.pos_of(idx);
        if (rk != 0.0 && na < cutoff && nb < cutoff) {
            const long to = layout.index(na + 1, nb + 1, nc);
            const double val = rk * std::sqrt(static_cast<double>((na + 1) * (nb + 1)));
            B(X.pos_of(to), pi) += val;
            B(pi, X.pos_of(to)) -= val;
        }
        if (s != 0.0 && na < cutoff && nc > 0) {
            const long to = layout.index(na + 1, nb, nc - 1);
            const double val = s * std::sqrt(static_cast<double>((na + 1) * nc));
            B(X.pos_of(to), pi) += val;
            B(pi, X.pos_of(to)) -= val;
        }
    }
    return X;
}

TruncatedOp exponentiate(const TruncatedOp& X) {
    TruncatedOp U(X.layout());
    for (int s = 0; s < X.sector_count(); ++s) {
        if (X.block(s).rows() == 0) continue;
        U.block(s) = X.block(s).exp();
    }
    return U;
}

Propagator::Propagator(TruncatedOp generator)
    : X_(std::move(generator)),
      cache_(static_cast<size_t>(X_.sector_count())) {}

const Eigen::MatrixXd& Propagator::exp_block(int sector) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = cache_[static_cast<size_t>(sector)];
    if (!slot) {
        slot = std::make_unique<Eigen::MatrixXd>(X_.block(sector).exp());
    }
    return *slot;
}

Eigen::VectorXd Propagator::apply_cached(const Eigen::VectorXd& v,
                                         bool transpose) const {
    if (v.size() != X_.dim()) {
        throw std::invalid_argument("Propagator: dimension mismatch");
    }
    Eigen::VectorXd out = Eigen::VectorXd::Zero(X_.dim());
    for (int s = 0; s < X_.sector_count(); ++s) {
        const auto& states = X_.sector_states(s);
        if (states.empty()) continue;
        Eigen::VectorXd seg(static_cast<long>(states.size()));
        for (size_t i = 0; i < states.size(); ++i) {
            seg(static_cast<long>(i)) = v(states[i]);
        }
        if (seg.isZero(0.0)) continue;
        const Eigen::MatrixXd& B = exp_block(s);
        seg = transpose ? Eigen::VectorXd(B.transpose() * seg)
                        : Eigen::VectorXd(B * seg);
        for (size_t i = 0; i < states.size(); ++i) {
            out(states[i]) = seg(static_cast<long>(i));
        }
    }
    return out;
}

Eigen::VectorXd Propagator::propagate(const Eigen::VectorXd& v) const {
    // e^{-X} = (e^X)^t for antisymmetric X
    return apply_cached(v, true);
}

Eigen::VectorXd Propagator::propagate_back(const Eigen::VectorXd& v) const {
    return apply_cached(v, false);
}

double Propagator::orthogonality_defect_of_used_sectors() const {
    std::lock_guard<std::mutex> lock(mutex_);
    double defect = 0.0;
    for (const auto& slot : cache_) {
        if (!slot || slot->rows() == 0) continue;
        const long n = slot->rows();
        defect = std::max(defect,
                          (slot->transpose() * *slot -
                           Eigen::MatrixXd::Identity(n, n))
                              .cwiseAbs()
                              .maxCoeff());
    }
    return defect;
}

// out = a_mode v (annihilation on one mode of the 3-mode tensor)
Eigen::VectorXd apply_annihilation(const FockLayout& L, const Eigen::VectorXd& v,
                                   int mode) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(L.dim);
    const long strides[3] = {static_cast<long>(L.d) * L.d, L.d, 1};
    const long stride = strides[mode];
    for (long idx = 0; idx < L.dim; ++idx) {
        const auto occ = L.occupation(idx);
        const int n = occ[static_cast<size_t>(mode)];
        if (n > 0) {
            out(idx - stride) += std::sqrt(static_cast<double>(n)) * v(idx);
        }
    }
    return out;
}

Eigen::VectorXd apply_creation(const FockLayout& L, const Eigen::VectorXd& v, int mode) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(L.dim);
    const long strides[3] = {static_cast<long>(L.d) * L.d, L.d, 1};
    const long stride = strides[mode];
    for (long idx = 0; idx < L.dim; ++idx) {
        const auto occ = L.occupation(idx);
        const int n = occ[static_cast<size_t>(mode)];
        if (n < L.cutoff) {
            out(idx + stride) += std::sqrt(static_cast<double>(n + 1)) * v(idx);
        }
    }
    return out;
}

namespace {

Eigen::VectorXd apply_q(const FockLayout& L, const Eigen::VectorXd& v, int mode) {
    return apply_annihilation(L, v, mode) + apply_creation(L, v, mode);
}

// p = i (a' - a); this returns (a' - a) v, the purely real factor.
Eigen::VectorXd apply_p_tilde(const FockLayout& L, const Eigen::VectorXd& v, int mode) {
    return apply_creation(L, v, mode) - apply_annihilation(L, v, mode);
}

Eigen::VectorXd basis_state(const FockLayout& L, int na, int nb, int nc) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(L.dim);
    v(L.index(na, nb, nc)) = 1.0;
    return v;
}

// mean photon number -> truncated, renormalized geometric weights
std::vector<double> thermal_weights(double mean_n, int cutoff) {
    std::vector<double> w(static_cast<size_t>(cutoff) + 1);
    const double q = mean_n / (mean_n + 1.0);
    double total = 0.0;
    double p = 1.0;
    for (int j = 0; j <= cutoff; ++j) {
        w[static_cast<size_t>(j)] = p;
        total += p;
        p *= q;
    }
    for (double& x : w) x /= total;
    return w;
}

}  // namespace

StateMixture synthesize_input(const FockLayout& layout, const CovarianceMatrix& v_c) {
    if (v_c.modes() != 1) {
        throw std::invalid_argument("synthesize_input: one-mode covariance expected");
    }
    const Eigen::MatrixXd& V = v_c.matrix();
    const double e = V(0, 0), f = V(1, 1), g = V(0, 1);
    if (std::abs(g) > 1e-9) {
        throw std::invalid_argument(
            "synthesize_input: rotated states unsupported (off-diagonal covariance)");
    }
    StateMixture mix;
    if (std::abs(e - f) <= 1e-9) {
        const double nu = 0.5 * (e + f);
        const double mean_n = 0.5 * (nu - 1.0);
        if (mean_n < -1e-9) {
            throw std::invalid_argument("synthesize_input: covariance below vacuum");
        }
        if (mean_n <= 1e-12) {
            mix.weights = {1.0};
            mix.states.push_back(basis_state(layout, 0, 0, 0));
            return mix;
        }
        if (mean_n > layout.cutoff / 4.0) {
            throw std::invalid_argument(
                "synthesize_input: thermal occupation too high for this cutoff");
        }
        mix.weights = thermal_weights(mean_n, layout.cutoff);
        for (int j = 0; j <= layout.cutoff; ++j) {
            mix.states.push_back(basis_state(layout, 0, 0, j));
        }
        return mix;
    }
    // axis-squeezed vacuum: diag(e^{2z}, e^{-2z})
    if (std::abs(e * f - 1.0) > 1e-6) {
        throw std::invalid_argument(
            "synthesize_input: unsupported input state class (mixed squeezed)");
    }
    const double zeta = 0.5 * std::log(e);
    if (std::abs(zeta) > 0.5 + 1e-9) {
        throw std::invalid_argument("synthesize_input: squeezing above 0.5 unsupported");
    }
    // single-mode squeeze exp((z/2)(a'^2 - a^2)) |0>, built at the c-mode cutoff
    const int d = layout.d;
    Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(d, d);
    for (int n = 0; n + 2 <= layout.cutoff; ++n) {
        const double val =
            0.5 * zeta * std::sqrt(static_cast<double>((n + 1) * (n + 2)));
        Z(n + 2, n) += val;
        Z(n, n + 2) -= val;
    }
    const Eigen::VectorXd sq = Eigen::MatrixXd(Z.exp()).col(0);
    Eigen::VectorXd state = Eigen::VectorXd::Zero(layout.dim);
    for (int j = 0; j <= layout.cutoff; ++j) {
        state(layout.index(0, 0, j)) = sq(j);
    }
    mix.weights = {1.0};
    mix.states.push_back(std::move(state));
    return mix;
}

Eigen::Matrix<double, 6, 6> covariance_of(const FockLayout& layout,
                                          const StateMixture& mix) {
    Eigen::Matrix<double, 6, 6> second = Eigen::Matrix<double, 6, 6>::Zero();
    Eigen::Matrix<double, 6, 1> first = Eigen::Matrix<double, 6, 1>::Zero();
    for (size_t k = 0; k < mix.states.size(); ++k) {
        const double w = mix.weights[k];
        const Eigen::VectorXd& psi = mix.states[k];
        std::array<Eigen::VectorXd, 3> qpsi, ppsi;
        for (int m = 0; m < 3; ++m) {
            qpsi[static_cast<size_t>(m)] = apply_q(layout, psi, m);
            ppsi[static_cast<size_t>(m)] = apply_p_tilde(layout, psi, m);
        }
        for (int m = 0; m < 3; ++m) {
            first(2 * m) += w * psi.dot(qpsi[static_cast<size_t>(m)]);
            // <p> = i <psi|(a'-a)|psi> = 0 for real psi
        }
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                const auto& qi = qpsi[static_cast<size_t>(i)];
                const auto& qj = qpsi[static_cast<size_t>(j)];
                const auto& pi = ppsi[static_cast<size_t>(i)];
                const auto& pj = ppsi[static_cast<size_t>(j)];
                // <q_i q_j>_sym; q is real symmetric
                second(2 * i, 2 * j) += w * 0.5 * (qi.dot(qj) + qj.dot(qi));
                // p_i p_j = -(a'-a)_i (a'-a)_j and (a'-a)^t = -(a'-a)
                second(2 * i + 1, 2 * j + 1) += w * 0.5 * (pi.dot(pj) + pj.dot(pi));
                // {q_i, p_j}/2 = (i/2)(<Q_i Pt_j> + <Pt_j Q_i>); the bracket is
                // antisymmetric under transpose for real states, hence zero
                second(2 * i, 2 * j + 1) += w * 0.5 * (qi.dot(pj) - pj.dot(qi));
                second(2 * i + 1, 2 * j) += w * 0.5 * (pi.dot(qj) - qj.dot(pi));
            }
        }
    }
    return second - first * first.transpose();
}

double mode_photon_number(const FockLayout& layout, const StateMixture& mix, int mode) {
    double n = 0.0;
    for (size_t k = 0; k < mix.states.size(); ++k) {
        const Eigen::VectorXd av = apply_annihilation(layout, mix.states[k], mode);
        n += mix.weights[k] * av.squaredNorm();
    }
    return n;
}

double total_photon_number(const FockLayout& layout, const StateMixture& mix) {
    return mode_photon_number(layout, mix, 0) + mode_photon_number(layout, mix, 1) +
           mode_photon_number(layout, mix, 2);
}

FockDensity::FockDensity(Eigen::MatrixXd m) : rho(std::move(m)) {
    if (rho.rows() != rho.cols()) {
        throw std::invalid_argument("FockDensity: matrix must be square");
    }
    if (std::abs(rho.trace() - 1.0) > 1e-10) {
        throw std::invalid_argument("FockDensity: trace must be 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) {
        throw std::invalid_argument("FockDensity: matrix not positive semidefinite");
    }
}

double FockDensity::entropy(LogBase base) const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rho, Eigen::EigenvaluesOnly);
    double h = 0.0;
    for (long i = 0; i < es.eigenvalues().size(); ++i) {
        const double lam = es.eigenvalues()(i);
        if (lam > 1e-15) {
            h -= lam * base.log(lam);
        }
    }
    return h;
}

FockDensity reduced_density_a(const FockLayout& layout, const StateMixture& mix) {
    const int d = layout.d;
    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(d, d);
    for (size_t k = 0; k < mix.states.size(); ++k) {
        Eigen::Map<const Eigen::MatrixXd> Phi(mix.states[k].data(),
                                              static_cast<long>(d) * d, d);
        // column-major map: column index is na, rows run over (nb, nc)
        rho += mix.weights[k] * (Phi.transpose() * Phi);
    }
    return FockDensity(rho);
}

FockDensity reduced_density_bc(const FockLayout& layout, const StateMixture& mix) {
    const int d = layout.d;
    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(static_cast<long>(d) * d,
                                                static_cast<long>(d) * d);
    for (size_t k = 0; k < mix.states.size(); ++k) {
        Eigen::Map<const Eigen::MatrixXd> Phi(mix.states[k].data(),
                                              static_cast<long>(d) * d, d);
        rho += mix.weights[k] * (Phi * Phi.transpose());
    }
    return FockDensity(rho);
}

namespace {

// States evolve with exp(-X): A = e^X a e^{-X} is the Heisenberg-picture map,
// so the matching Schrodinger propagator is the inverse exponential.
StateMixture evolve(const Propagator& U, const StateMixture& in) {
    StateMixture out;
    out.weights = in.weights;
    out.states.reserve(in.states.size());
    for (const auto& psi : in.states) {
        out.states.push_back(U.propagate(psi));
    }
    return out;
}

}  // namespace

BogoliubovReport verify_bogoliubov(const BlackHoleParams& p, int cutoff, double tol) {
    const FockLayout layout(cutoff);
    const Propagator U(build_generator(p, cutoff));

    BogoliubovReport rep;
    rep.r = p.r;
    rep.s = p.s;
    rep.cutoff = cutoff;
    const Mat3 L = build_L(p);
    rep.expected = {L(0, 0), L(0, 1), L(0, 2)};

    // probe states: every occupation with at most two photons in total
    std::vector<Eigen::VectorXd> probes;
    for (int na = 0; na <= 2; ++na) {
        for (int nb = 0; nb + na <= 2; ++nb) {
            for (int nc = 0; nc + nb + na <= 2; ++nc) {
                probes.push_back(basis_state(layout, na, nb, nc));
            }
        }
    }

    Eigen::Matrix3d gram = Eigen::Matrix3d::Zero();
    Eigen::Vector3d rhs = Eigen::Vector3d::Zero();
    double a_norm2 = 0.0;
    std::vector<Eigen::VectorXd> a_cols, cand_cols;
    for (const auto& x : probes) {
        // e^X a e^{-X} |x>
        const Eigen::VectorXd ax =
            U.propagate_back(apply_annihilation(layout, U.propagate(x), 0));
        std::array<Eigen::VectorXd, 3> cand = {apply_annihilation(layout, x, 0),
                                               apply_creation(layout, x, 1),
                                               apply_annihilation(layout, x, 2)};
        for (int i = 0; i < 3; ++i) {
            rhs(i) += cand[static_cast<size_t>(i)].dot(ax);
            for (int j = 0; j < 3; ++j) {
                gram(i, j) +=
                    cand[static_cast<size_t>(i)].dot(cand[static_cast<size_t>(j)]);
            }
        }
        a_norm2 += ax.squaredNorm();
        a_cols.push_back(ax);
        for (auto& c : cand) cand_cols.push_back(std::move(c));
    }
    const Eigen::Vector3d coeff = gram.ldlt().solve(rhs);
    rep.extracted = {coeff(0), coeff(1), coeff(2)};

    double off2 = 0.0;
    for (size_t k = 0; k < a_cols.size(); ++k) {
        Eigen::VectorXd resid = a_cols[k];
        for (int i = 0; i < 3; ++i) {
            resid -= coeff(i) * cand_cols[3 * k + static_cast<size_t>(i)];
        }
        off2 += resid.squaredNorm();
    }
    rep.residual = a_norm2 > 0.0 ? std::sqrt(off2 / a_norm2) : 0.0;
    rep.coeff_deviation = 0.0;
    for (int i = 0; i < 3; ++i) {
        rep.coeff_deviation =
            std::max(rep.coeff_deviation,
                     std::abs(rep.extracted[static_cast<size_t>(i)] -
                              rep.expected[static_cast<size_t>(i)]));
    }
    rep.pass = rep.coeff_deviation <= tol && rep.residual <= tol;
    return rep;
}

ChannelActionReport verify_channel_action(const BlackHoleParams& p,
                                          const CovarianceMatrix& v_in, int cutoff,
                                          double tol) {
    const FockLayout layout(cutoff);
    ChannelActionReport rep;
    rep.r = p.r;
    rep.s = p.s;
    rep.cutoff = cutoff;

    const StateMixture input = synthesize_input(layout, v_in);
    const Eigen::MatrixXd& vm = v_in.matrix();
    if ((vm - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12) {
        rep.input_kind = "vacuum";
    } else if (std::abs(vm(0, 0) - vm(1, 1)) <= 1e-9) {
        rep.input_kind = "thermal";
    } else {
        rep.input_kind = "squeezed";
    }

    const Eigen::Matrix<double, 6, 6> cov_in = covariance_of(layout, input);
    const CovarianceMatrix v_in_actual{Eigen::MatrixXd(cov_in.block<2, 2>(4, 4))};

    const Propagator U(build_generator(p, cutoff));
    const StateMixture output = evolve(U, input);
    rep.unitarity_defect = U.orthogonality_defect_of_used_sectors();
    const Eigen::Matrix<double, 6, 6> cov_out = covariance_of(layout, output);

    const auto block_residual = [&](int row, const OneModeChannel& ch) {
        const Eigen::Matrix2d expected =
            ch.T * v_in_actual.matrix() * ch.T.transpose() + ch.N;
        return (cov_out.block<2, 2>(row, row) - expected).cwiseAbs().maxCoeff();
    };
    rep.residual_a = block_residual(0, a_channel(p));
    rep.residual_b = block_residual(2, b_channel(p));
    rep.residual_c = block_residual(4, c_channel(p));
    const CovarianceMatrix bc = bc_complement_covariance(p, v_in_actual);
    rep.residual_bc =
        (cov_out.block<4, 4>(2, 2) - bc.matrix()).cwiseAbs().maxCoeff();
    rep.max_residual = std::max({rep.residual_a, rep.residual_b, rep.residual_c,
                                 rep.residual_bc});
    rep.pass = rep.max_residual <= tol;
    return rep;
}

double fock_coherent_info(const BlackHoleParams& p, double mean_n, int cutoff,
                          LogBase base) {
    if (!(mean_n >= 0.0)) {
        throw std::invalid_argument("fock_coherent_info: mean_n must be >= 0");
    }
    const FockLayout layout(cutoff);
    if (mean_n > cutoff / 6.0) {
        throw std::invalid_argument("fock_coherent_info: mean_n above cutoff/6");
    }
    const StateMixture input =
        synthesize_input(layout, CovarianceMatrix::thermal(mean_n));
    const Propagator U(build_generator(p, cutoff));
    const StateMixture output = evolve(U, input);
    const double h_a = reduced_density_a(layout, output).entropy(base);
    const double h_bc = reduced_density_bc(layout, output).entropy(base);
    return h_a - h_bc;
}

}  // namespace omgbh::fock
