// blackhole_map.hpp — the map from isometry parameters (r, s) to the three
// mode channels, its two-branch inverse, and the bc complement covariance.

#pragma once

#include <optional>
#include <utility>

#include "omgbh/omg_channel.hpp"
#include "omgbh/symplectic.hpp"

namespace omgbh {

enum class ModeTag { A, B, C };
enum class Parity { Even, Odd };

// A point (tau_a, y_a) of the a-channel plane; y_a - tau_a = cos(2r).
struct BlackHolePoint {
    double tau_a;
    double y_a;

    double cos2r() const { return y_a - tau_a; }
};

// S(r, s) = embed_and_quadrature(build_L(r, s)).
Mat6 black_hole_symplectic(const BlackHoleParams& p);

// Outgoing-mode channel in canonical form: T = sqrt(tau_a) id, N = y_a id,
// tau_a = s^2 sinc^2(r), y_a = cos(2r) + tau_a.
OneModeChannel a_channel(const BlackHoleParams& p);

// Interior-mode channel, extracted from S; T is proportional to sigma_z and
// tau_b <= 0 (conjugated class D, degenerating to A-type at s = r).
OneModeChannel b_channel(const BlackHoleParams& p);

// Across-horizon channel: T = (1 - s^2 cosc(r)) id (signed scalar),
// N = (s^2 sinc^2 r + s^2 (s^2 - r^2) cosc^2 r) id.
OneModeChannel c_channel(const BlackHoleParams& p);

// Reduce the three-mode symplectic S to the one-mode channel seen by `mode`
// when modes a, b start in vacuum: T = S[mode rows, c cols],
// N = S_ma S_ma^t + S_mb S_mb^t.
OneModeChannel extract_mode_channel(const Mat6& S, ModeTag mode, double tol = 1e-10);

// 4x4 (b, c) block of S (id ⊕ id ⊕ V_in) S^t.
CovarianceMatrix bc_complement_covariance(const BlackHoleParams& p,
                                          const CovarianceMatrix& v_in);

// tau >= 0, |y - tau| <= 1, y >= |tau - 1| (all inclusive).
bool in_black_hole_region(double tau, double y);

// r = acos(y - tau)/2 (+ pi for odd parity), s = sqrt(tau_a)/|sinc r|.
// Returns nullopt for odd parity on the boundary y - tau = 1 with tau_a > 0
// (sin r vanishes at r = pi, no finite s); the tau_a = 0 corner takes the
// minimal admissible s = r = pi. Throws NotInBlackHoleRegionError outside
// the strip.
std::optional<BlackHoleParams> inverse_map(const BlackHolePoint& pt, Parity parity);

// (tau_c, y_c) for the given parity, computed from (tau_a, r) directly:
//   u = tau_a/(1 + cos r),  v = (1 - cos r)/(1 + cos r),
//   tau_c = (1 - u)^2,      y_c = u^2 + tau_a (1 - v).
std::optional<std::pair<double, double>> c_params_from_a(const BlackHolePoint& pt,
                                                         Parity parity);

}  // namespace omgbh
