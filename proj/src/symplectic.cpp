#include "omgbh/symplectic.hpp"

#include <cmath>
#include <complex>

namespace omgbh {

double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

double cosc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 0.5 - x2 / 24.0 + x2 * x2 / 720.0;
    }
    return (1.0 - std::cos(x)) / (x * x);
}

BlackHoleParams::BlackHoleParams(double r_in, double s_in) : r(r_in), s(s_in) {
    if (!std::isfinite(r) || !std::isfinite(s)) {
        throw std::invalid_argument("BlackHoleParams: r, s must be finite");
    }
    if (r < 0.0) {
        throw std::invalid_argument("BlackHoleParams: r must be >= 0");
    }
    // Round-tripped parameters can land a few ulp below s = r.
    const double slack = 1e-12 * std::max(1.0, r);
    if (s < r - slack) {
        throw CpViolationError("BlackHoleParams: s < r violates complete positivity");
    }
    r_kappa = std::sqrt(std::max(s * s - r * r, 0.0));
}

Eigen::MatrixXd symplectic_form(int n_modes) {
    if (n_modes < 1) {
        throw std::invalid_argument("symplectic_form: n_modes must be >= 1");
    }
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
    for (int k = 0; k < n_modes; ++k) {
        omega(2 * k, 2 * k + 1) = 1.0;
        omega(2 * k + 1, 2 * k) = -1.0;
    }
    return omega;
}

BogoliubovCoeffs bogoliubov_coeffs(const BlackHoleParams& p) {
    const double sc = sinc(p.r);
    return {std::cos(p.r), p.r_kappa * sc, -p.s * sc};
}

Mat3 build_L(const BlackHoleParams& p) {
    const double c = std::cos(p.r);
    const double sc = sinc(p.r);
    const double cc = cosc(p.r);
    const double rk = p.r_kappa;
    const double s = p.s;

    Mat3 L;
    L << c,        -rk * sc,          -s * sc,
         -rk * sc,  c + s * s * cc,    s * rk * cc,
         s * sc,   -s * rk * cc,       1.0 - s * s * cc;
    return L;
}

Mat6 embed_and_quadrature(const Mat3& L) {
    using Cx = std::complex<double>;
    using Mat6c = Eigen::Matrix<Cx, 6, 6>;

    // Interleave L ⊕ L onto the ladder list {a, a', b, b', c, c'}.
    // Row pairs: (A, A'), (B, B'), (C, C'); L is real so conjugate rows reuse it.
    Mat6 M = Mat6::Zero();
    // A  = L00 a  + L01 b' + L02 c
    M(0, 0) = L(0, 0); M(0, 3) = L(0, 1); M(0, 4) = L(0, 2);
    // A' = L00 a' + L01 b  + L02 c'
    M(1, 1) = L(0, 0); M(1, 2) = L(0, 1); M(1, 5) = L(0, 2);
    // B  = L10 a' + L11 b  + L12 c'
    M(2, 1) = L(1, 0); M(2, 2) = L(1, 1); M(2, 5) = L(1, 2);
    // B' = L10 a  + L11 b' + L12 c
    M(3, 0) = L(1, 0); M(3, 3) = L(1, 1); M(3, 4) = L(1, 2);
    // C  = L20 a  + L21 b' + L22 c
    M(4, 0) = L(2, 0); M(4, 3) = L(2, 1); M(4, 4) = L(2, 2);
    // C' = L20 a' + L21 b  + L22 c'
    M(5, 1) = L(2, 0); M(5, 2) = L(2, 1); M(5, 5) = L(2, 2);

    Eigen::Matrix<Cx, 2, 2> sigma;
    sigma << Cx(1, 0), Cx(0, 1),
             Cx(1, 0), Cx(0, -1);
    Mat6c Sigma = Mat6c::Zero();
    for (int k = 0; k < 3; ++k) {
        Sigma.block<2, 2>(2 * k, 2 * k) = sigma;
    }

    Mat6c Sc = Sigma.inverse() * M.cast<Cx>() * Sigma;
    const double imag_max = Sc.imag().cwiseAbs().maxCoeff();
    if (imag_max > 1e-12) {
        throw InternalInconsistencyError(
            "embed_and_quadrature: quadrature matrix has imaginary part " +
            std::to_string(imag_max));
    }
    return Sc.real();
}

bool is_symplectic(const Eigen::MatrixXd& M, double tol) {
    if (M.rows() != M.cols()) {
        throw std::invalid_argument("is_symplectic: matrix must be square");
    }
    if (M.rows() % 2 != 0 || M.rows() == 0) {
        throw std::invalid_argument("is_symplectic: dimension must be even and positive");
    }
    const Eigen::MatrixXd omega = symplectic_form(static_cast<int>(M.rows() / 2));
    return (M * omega * M.transpose() - omega).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace omgbh
