#include "omgbh/blackhole_map.hpp"

#include <algorithm>
#include <cmath>

namespace omgbh {

Mat6 black_hole_symplectic(const BlackHoleParams& p) {
    return embed_and_quadrature(build_L(p));
}

OneModeChannel a_channel(const BlackHoleParams& p) {
    const double sc = sinc(p.r);
    const double tau_a = p.s * p.s * sc * sc;
    const double y_a = std::cos(2.0 * p.r) + tau_a;
    return make_channel(std::sqrt(tau_a) * Mat2::Identity(), y_a * Mat2::Identity());
}

OneModeChannel b_channel(const BlackHoleParams& p) {
    return extract_mode_channel(black_hole_symplectic(p), ModeTag::B);
}

OneModeChannel c_channel(const BlackHoleParams& p) {
    const double sc = sinc(p.r);
    const double cc = cosc(p.r);
    const double t_scalar = 1.0 - p.s * p.s * cc;  // can be negative; tau_c = t^2
    const double y_c = p.s * p.s * (sc * sc + p.r_kappa * p.r_kappa * cc * cc);
    return make_channel(t_scalar * Mat2::Identity(), y_c * Mat2::Identity());
}

namespace {

int mode_row(ModeTag mode) {
    switch (mode) {
        case ModeTag::A: return 0;
        case ModeTag::B: return 2;
        case ModeTag::C: return 4;
    }
    throw std::invalid_argument("unknown mode tag");
}

}  // namespace

OneModeChannel extract_mode_channel(const Mat6& S, ModeTag mode, double tol) {
    if (!is_symplectic(S, tol)) {
        throw std::invalid_argument("extract_mode_channel: S is not symplectic");
    }
    const int row = mode_row(mode);
    const Mat2 Sa = S.block<2, 2>(row, 0);
    const Mat2 Sb = S.block<2, 2>(row, 2);
    const Mat2 T = S.block<2, 2>(row, 4);
    const Mat2 N = Sa * Sa.transpose() + Sb * Sb.transpose();
    return make_channel(T, N);
}

CovarianceMatrix bc_complement_covariance(const BlackHoleParams& p,
                                          const CovarianceMatrix& v_in) {
    if (v_in.modes() != 1) {
        throw std::invalid_argument("bc_complement_covariance: one-mode input expected");
    }
    if (!v_in.is_physical()) {
        throw std::invalid_argument("bc_complement_covariance: invalid input covariance");
    }
    const Mat6 S = black_hole_symplectic(p);
    Mat6 V_in3 = Mat6::Identity();
    V_in3.block<2, 2>(4, 4) = v_in.matrix();
    const Mat6 V_out = S * V_in3 * S.transpose();
    return CovarianceMatrix(V_out.block<4, 4>(2, 2));
}

bool in_black_hole_region(double tau, double y) {
    return tau >= 0.0 && std::abs(y - tau) <= 1.0 && y >= std::abs(tau - 1.0);
}

namespace {

constexpr double kBoundaryTol = 1e-12;

}  // namespace

std::optional<BlackHoleParams> inverse_map(const BlackHolePoint& pt, Parity parity) {
    if (!in_black_hole_region(pt.tau_a, pt.y_a)) {
        throw NotInBlackHoleRegionError(
            "inverse_map: (tau_a, y_a) outside the black hole strip");
    }
    const double c2r = std::clamp(pt.cos2r(), -1.0, 1.0);
    if (parity == Parity::Odd && c2r >= 1.0 - kBoundaryTol) {
        if (pt.tau_a > kBoundaryTol) {
            return std::nullopt;  // sin r = 0 at r = pi: no finite s
        }
        return BlackHoleParams(M_PI, M_PI);  // degenerate (0, 1) corner
    }
    const double r = 0.5 * std::acos(c2r) + (parity == Parity::Odd ? M_PI : 0.0);
    const double s = std::sqrt(pt.tau_a) / std::abs(sinc(r));
    return BlackHoleParams(r, std::max(s, r));
}

std::optional<std::pair<double, double>> c_params_from_a(const BlackHolePoint& pt,
                                                         Parity parity) {
    auto p = inverse_map(pt, parity);
    if (!p) return std::nullopt;
    const double cr = std::cos(p->r);
    if (cr <= -1.0 + kBoundaryTol) {
        // r = pi corner (tau_a = 0): fall back to the (r, s) closed form.
        const OneModeChannel ch = c_channel(*p);
        return std::make_pair(ch.tau(), ch.y());
    }
    const double u = pt.tau_a / (1.0 + cr);
    const double v = (1.0 - cr) / (1.0 + cr);
    const double tau_c = (1.0 - u) * (1.0 - u);
    const double y_c = u * u + pt.tau_a * (1.0 - v);
    return std::make_pair(tau_c, y_c);
}

}  // namespace omgbh
