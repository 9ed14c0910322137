#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "omgbh/blackhole_map.hpp"
#include "omgbh/capacity.hpp"
#include "omgbh/verify_suites.hpp"

using namespace omgbh;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_SUITE("LogBase") {
    TEST_CASE("bases") {
        CHECK(LogBase::bits().base() == 2.0);
        CHECK(LogBase::nats().log(std::exp(1.0)) == doctest::Approx(1.0));
        CHECK_THROWS_AS(LogBase(1.0), std::invalid_argument);
        CHECK_THROWS_AS(LogBase(0.5), std::invalid_argument);
    }
}

TEST_SUITE("g_entropy") {
    TEST_CASE("fixed values") {
        CHECK(g_entropy(0.0) == 0.0);
        CHECK(g_entropy(1.0) == doctest::Approx(2.0).epsilon(1e-15));
        // 1.25 log2 1.25 + 0.25 log2 4
        CHECK(g_entropy(0.25) == doctest::Approx(0.9024101186092029).epsilon(1e-14));
        CHECK(g_entropy(0.75) == doctest::Approx(1.7241492380599394).epsilon(1e-14));
    }

    TEST_CASE("negative argument rejected") {
        CHECK_THROWS_AS(g_entropy(-0.1), std::invalid_argument);
    }

    TEST_CASE("monotone and concave") {
        double prev = g_entropy(0.0);
        double prev_diff = kInf;
        for (double x = 0.125; x <= 16.0; x += 0.125) {
            const double g = g_entropy(x);
            CHECK(g > prev);
            const double diff = g - prev;
            CHECK(diff <= prev_diff + 1e-12);
            prev = g;
            prev_diff = diff;
        }
    }

    TEST_CASE("base covariance") {
        SeededRng rng(21);
        for (int i = 0; i < 50; ++i) {
            const double x = rng.uniform(0.0, 20.0);
            CHECK(g_entropy(x, LogBase::bits()) * std::log(2.0) ==
                  doctest::Approx(g_entropy(x, LogBase::nats())).epsilon(1e-12));
        }
    }
}

TEST_SUITE("k_noise") {
    TEST_CASE("fixed values") {
        CHECK(k_noise(4.0, 3.0) == 0.0);
        CHECK(k_noise(1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(k_noise(0.5, 0.5) == 0.0);
    }

    TEST_CASE("CP violation throws") {
        CHECK_THROWS_AS(k_noise(0.5, 0.2), CpViolationError);
    }
}

TEST_SUITE("coherent_info_at") {
    TEST_CASE("worked point (0.75, 0.25, N=1)") {
        const double v = coherent_info_at(0.75, 0.25, 1.0);
        CHECK(v == doctest::Approx(0.8217391194507368).epsilon(1e-13));
        // x+ = 0, x- = 0.25, N' = 0.75: value = g(0.75) - g(0.25)
        CHECK(v == doctest::Approx(g_entropy(0.75) - g_entropy(0.25)).epsilon(1e-14));
    }

    TEST_CASE("vacuum code carries nothing") {
        CHECK(coherent_info_at(0.75, 0.25, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(coherent_info_at(2.3, 1.7, 0.0) == doctest::Approx(0.0).epsilon(1e-13));
    }

    TEST_CASE("below tau = 1/2 the value decreases with input power") {
        double prev = coherent_info_at(0.4, 0.6, 0.0);
        for (double n : {0.5, 1.0, 2.0, 5.0, 20.0, 100.0}) {
            const double v = coherent_info_at(0.4, 0.6, n);
            CHECK(v < prev + 1e-12);
            prev = v;
        }
        CHECK(prev < 0.0);
    }

    TEST_CASE("K = 0, tau > 1/2 is nondecreasing in input power") {
        for (double tau : {0.6, 0.8, 1.5, 3.0}) {
            const double y = std::abs(1.0 - tau);
            double prev = coherent_info_at(tau, y, 0.0);
            for (double n : {0.25, 1.0, 4.0, 16.0, 256.0}) {
                const double v = coherent_info_at(tau, y, n);
                CHECK(v >= prev - 1e-12);
                prev = v;
            }
        }
    }

    TEST_CASE("domain errors") {
        CHECK_THROWS_AS(coherent_info_at(-0.5, 2.0, 1.0), UnsupportedClassError);
        CHECK_THROWS_AS(coherent_info_at(0.0, 1.5, 1.0), UnsupportedClassError);
        CHECK_THROWS_AS(coherent_info_at(1.0, 0.5, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(coherent_info_at(0.75, 0.25, -1.0), std::invalid_argument);
    }

    TEST_CASE("large input power stays finite and clean") {
        // the N -> inf regime of the acceptance gate: no spurious negatives
        for (double tau : {0.55, 0.9999, 1.0001, 2.5}) {
            for (double k_extra : {0.0, 0.3}) {
                const double y = std::abs(1.0 - tau) + 2.0 * k_extra;
                const double v = coherent_info_at(tau, y, 1e7);
                CHECK(std::isfinite(v));
            }
        }
    }
}

TEST_SUITE("coherent_info_limit") {
    TEST_CASE("K = 0 reduction") {
        CHECK(coherent_info_limit(0.75, 0.25) ==
              doctest::Approx(std::log2(3.0)).epsilon(1e-14));
        CHECK(coherent_info_limit(4.0, 3.0) ==
              doctest::Approx(std::log2(4.0 / 3.0)).epsilon(1e-14));
        CHECK(coherent_info_limit(0.5, 0.5) == doctest::Approx(0.0).epsilon(1e-14));
    }

    TEST_CASE("tau = 1 singular branch") {
        // -1/ln 2 - log2(1/2) in bits; -1 - ln(1/2) in nats
        CHECK(coherent_info_limit(1.0, 1.0) ==
              doctest::Approx(-0.44269504088896340736).epsilon(1e-14));
        CHECK(coherent_info_limit(1.0, 1.0, LogBase::nats()) ==
              doctest::Approx(-0.30685281944005469059).epsilon(1e-14));
        CHECK(coherent_info_limit(1.0, 0.0) == kInf);
    }

    TEST_CASE("continuous across tau = 1 for K > 0") {
        const double at_one = coherent_info_limit(1.0, 1.0);
        CHECK(coherent_info_limit(1.0 + 1e-9, 1.0) ==
              doctest::Approx(at_one).epsilon(1e-7));
        CHECK(coherent_info_limit(1.0 - 1e-9, 1.0) ==
              doctest::Approx(at_one).epsilon(1e-7));
    }

    TEST_CASE("matches the high-power evaluation") {
        SeededRng rng(22);
        for (int i = 0; i < 50; ++i) {
            const double tau = rng.uniform(0.55, 3.0);
            const double y = std::abs(1.0 - tau) + rng.uniform(0.0, 1.5);
            const double lim = coherent_info_limit(tau, y);
            const double at = coherent_info_at(tau, y, 1e6);
            CHECK(std::abs(lim - at) <= 1e-3);
        }
    }

    TEST_CASE("unsupported class") {
        CHECK_THROWS_AS(coherent_info_limit(0.0, 1.0), UnsupportedClassError);
        CHECK_THROWS_AS(coherent_info_limit(-1.0, 2.5), UnsupportedClassError);
    }
}

TEST_SUITE("capacity_report") {
    TEST_CASE("degradable boundary point") {
        const auto rep = capacity_report(4.0, 3.0);
        CHECK(rep.status == CapacityStatus::Exact);
        REQUIRE(rep.exact_value.has_value());
        CHECK(*rep.exact_value == doctest::Approx(std::log2(4.0 / 3.0)).epsilon(1e-14));
        CHECK(rep.lower_bound == *rep.exact_value);
    }

    TEST_CASE("entanglement-breaking line has zero capacity") {
        const auto rep = capacity_report(1.0, 2.0);
        CHECK(rep.status == CapacityStatus::Zero);
        REQUIRE(rep.exact_value.has_value());
        CHECK(*rep.exact_value == 0.0);
        CHECK(rep.lower_bound == 0.0);
        CHECK(rep.notes.find("entanglement breaking") != std::string::npos);
    }

    TEST_CASE("identity point") {
        const auto rep = capacity_report(1.0, 0.0);
        CHECK(rep.status == CapacityStatus::Infinite);
        CHECK(rep.coh_info_limit == kInf);
        CHECK(*rep.exact_value == kInf);
    }

    TEST_CASE("both degradable and antidegradable at (1/2, 1/2)") {
        const auto rep = capacity_report(0.5, 0.5);
        CHECK(rep.status == CapacityStatus::Zero);
        CHECK(*rep.exact_value == 0.0);
        CHECK(rep.notes.find("degradable and antidegradable") != std::string::npos);
    }

    TEST_CASE("lower bound clamps the limit at zero") {
        SeededRng rng(23);
        for (int i = 0; i < 100; ++i) {
            const double tau = rng.uniform(0.05, 3.0);
            const double y = std::abs(1.0 - tau) + rng.uniform(0.0, 2.0);
            const auto rep = capacity_report(tau, y);
            CHECK(rep.lower_bound == std::max(0.0, rep.coh_info_limit));
        }
    }

    TEST_CASE("conjugated-class points report zero capacity") {
        const auto rep = capacity_report(-0.5, 2.0);
        CHECK(rep.status == CapacityStatus::Zero);
        CHECK(rep.coh_info_limit == -kInf);
        CHECK(rep.lower_bound == 0.0);
    }
}

TEST_SUITE("symplectic_eigenvalues") {
    TEST_CASE("pure and thermal one-mode states") {
        const auto nu_vac = symplectic_eigenvalues(CovarianceMatrix::vacuum());
        REQUIRE(nu_vac.size() == 1);
        CHECK(nu_vac[0] == doctest::Approx(1.0).epsilon(1e-12));

        const auto nu_sq =
            symplectic_eigenvalues(CovarianceMatrix::squeezed_vacuum(0.7));
        CHECK(nu_sq[0] == doctest::Approx(1.0).epsilon(1e-12));

        const auto nu_th = symplectic_eigenvalues(CovarianceMatrix::thermal(1.0));
        CHECK(nu_th[0] == doctest::Approx(3.0).epsilon(1e-12));
    }

    TEST_CASE("block-diagonal two-mode state") {
        Eigen::MatrixXd V = Eigen::MatrixXd::Identity(4, 4);
        V.block<2, 2>(0, 0) *= 5.0;
        V.block<2, 2>(2, 2) *= 3.0;
        const auto nus = symplectic_eigenvalues(CovarianceMatrix(V));
        REQUIRE(nus.size() == 2);
        CHECK(nus[0] == doctest::Approx(5.0).epsilon(1e-12));
        CHECK(nus[1] == doctest::Approx(3.0).epsilon(1e-12));
    }

    TEST_CASE("invalid covariance rejected") {
        CHECK_THROWS_AS(
            symplectic_eigenvalues(CovarianceMatrix(0.2 * Eigen::MatrixXd::Identity(2, 2))),
            std::invalid_argument);
    }
}

TEST_SUITE("gaussian_entropy") {
    TEST_CASE("fixed values") {
        CHECK(gaussian_entropy(CovarianceMatrix::vacuum()) == 0.0);
        CHECK(gaussian_entropy(CovarianceMatrix::thermal(1.0)) ==
              doctest::Approx(2.0).epsilon(1e-12));
        CHECK(gaussian_entropy(CovarianceMatrix::squeezed_vacuum(0.5)) <= 1e-12);
    }

    TEST_CASE("additive over direct sums") {
        SeededRng rng(24);
        for (int i = 0; i < 20; ++i) {
            const double n1 = rng.uniform(0.0, 3.0);
            const double n2 = rng.uniform(0.0, 3.0);
            Eigen::MatrixXd V = Eigen::MatrixXd::Identity(4, 4);
            V.block<2, 2>(0, 0) *= 2 * n1 + 1;
            V.block<2, 2>(2, 2) *= 2 * n2 + 1;
            const double joint = gaussian_entropy(CovarianceMatrix(V));
            const double parts = gaussian_entropy(CovarianceMatrix::thermal(n1)) +
                                 gaussian_entropy(CovarianceMatrix::thermal(n2));
            CHECK(joint == doctest::Approx(parts).epsilon(1e-10));
        }
    }

    TEST_CASE("mean photon extraction") {
        CHECK(mean_photon_number(CovarianceMatrix::thermal(1.7)) ==
              doctest::Approx(1.7).epsilon(1e-14));
        CHECK(mean_photon_number(CovarianceMatrix::vacuum()) ==
              doctest::Approx(0.0).epsilon(1e-14));
    }
}

TEST_SUITE("pair_coherent_info") {
    TEST_CASE("vacuum code gives zero both ways") {
        const auto pc = pair_coherent_info(BlackHoleParams(0.4, 0.7), 0.0);
        CHECK(std::abs(pc.ic_a) <= 1e-9);
        CHECK(pc.ic_bc == -pc.ic_a);
    }

    TEST_CASE("zero-region point feeds the complement") {
        // (tau_a, y_a) = (0.6, 0.9): y > tau, antidegradable side
        const auto p = inverse_map(BlackHolePoint{0.6, 0.9}, Parity::Even);
        REQUIRE(p.has_value());
        const auto pc = pair_coherent_info(*p, 5.0);
        CHECK(pc.ic_a < 0.0);
        CHECK(pc.ic_bc > 0.0);
        CHECK(pc.ic_a + pc.ic_bc == 0.0);
    }

    TEST_CASE("matches the closed-form coherent information") {
        SeededRng rng(25);
        int checked = 0;
        while (checked < 200) {
            const double tau = rng.uniform(0.05, 2.8);
            if (std::abs(tau - 1.0) < 0.02) continue;
            const double lo = std::abs(tau - 1.0);
            const double hi = tau + 1.0;
            const double y = lo + (hi - lo) * rng.uniform(0.02, 0.98);
            const Parity parity = (rng.next_u64() & 1) ? Parity::Odd : Parity::Even;
            const auto p = inverse_map(BlackHolePoint{tau, y}, parity);
            REQUIRE(p.has_value());
            const double n = rng.uniform(0.0, 50.0);
            const auto pc = pair_coherent_info(*p, n);
            const auto a = a_channel(*p);
            const double closed = coherent_info_at(a.tau(), a.y(), n);
            CHECK(std::abs(pc.ic_a - closed) <= 1e-8);
            ++checked;
        }
    }

    TEST_CASE("base covariance") {
        const BlackHoleParams p(0.5, 0.8);
        const auto bits = pair_coherent_info(p, 2.0, LogBase::bits());
        const auto nats = pair_coherent_info(p, 2.0, LogBase::nats());
        CHECK(bits.ic_a * std::log(2.0) == doctest::Approx(nats.ic_a).epsilon(1e-12));
    }
}
