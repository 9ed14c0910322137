#include "omgbh/verify_suites.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "omgbh/blackhole_map.hpp"
#include "omgbh/fock_oracle.hpp"

namespace omgbh {

std::uint64_t SeededRng::next_u64() {
    // splitmix64
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SeededRng::uniform(double lo, double hi) {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

bool SuiteReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return !checks.empty();
}

double SuiteReport::max_residual(const std::string& label_prefix) const {
    double m = 0.0;
    for (const auto& c : checks) {
        if (c.label.rfind(label_prefix, 0) == 0) {
            m = std::max(m, c.residual);
        }
    }
    return m;
}

namespace {

std::string param_tag(const BlackHoleParams& p) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "r=%.4f s=%.4f", p.r, p.s);
    return buf;
}

// small-squeezing draws keep the truncation error of the oracle well under
// the covariance threshold at the default cutoff
BlackHoleParams draw_small_params(SeededRng& rng) {
    const double r = rng.uniform(0.05, 0.35);
    const double rk = rng.uniform(0.05, 0.4);
    return {r, std::sqrt(r * r + rk * rk)};
}

}  // namespace

SuiteReport run_bogoliubov_suite(int cutoff, std::uint64_t seed) {
    SuiteReport report;
    SeededRng rng(seed);
    std::vector<BlackHoleParams> cases = {{0.0, 0.0}, {0.1, 0.12}};
    for (int i = 0; i < 10; ++i) {
        cases.push_back(draw_small_params(rng));
    }
    for (const auto& p : cases) {
        const auto rep = fock::verify_bogoliubov(p, cutoff, kBogoliubovThreshold);
        report.checks.push_back({"bogoliubov " + param_tag(p),
                                 std::max(rep.coeff_deviation, rep.residual),
                                 kBogoliubovThreshold, rep.pass});
    }
    return report;
}

SuiteReport run_channel_suite(int cutoff, std::uint64_t seed) {
    SuiteReport report;
    SeededRng rng(seed + 1);
    for (int i = 0; i < 20; ++i) {
        const BlackHoleParams p = draw_small_params(rng);
        CovarianceMatrix v_in = CovarianceMatrix::vacuum();
        std::string kind = "vacuum";
        switch (i % 3) {
            case 0:
                break;
            case 1:
                v_in = CovarianceMatrix::thermal(rng.uniform(0.2, 0.5));
                kind = "thermal";
                break;
            default:
                v_in = CovarianceMatrix::squeezed_vacuum(rng.uniform(0.1, 0.4));
                kind = "squeezed";
                break;
        }
        const auto rep =
            fock::verify_channel_action(p, v_in, cutoff, kCovarianceThreshold);
        report.checks.push_back({"channel " + param_tag(p) + " " + kind,
                                 rep.max_residual, kCovarianceThreshold, rep.pass});
    }
    return report;
}

SuiteReport run_entropy_suite(int cutoff, std::uint64_t seed, LogBase base) {
    SuiteReport report;
    SeededRng rng(seed + 2);

    const auto coherent_info_check = [&](const BlackHoleParams& p, double mean_n,
                                         const std::string& tag) {
        // the low-cutoff failure mode (occupation guard) counts as a failed
        // check rather than aborting the suite
        try {
            const OneModeChannel a = a_channel(p);
            const double closed = coherent_info_at(a.tau(), a.y(), mean_n, base);
            const double brute = fock::fock_coherent_info(p, mean_n, cutoff, base);
            const double resid = std::abs(closed - brute);
            report.checks.push_back({"coherent-info " + tag, resid,
                                     kCoherentInfoThreshold,
                                     resid <= kCoherentInfoThreshold});
        } catch (const std::invalid_argument& e) {
            report.checks.push_back({"coherent-info " + tag + " (" + e.what() + ")",
                                     std::numeric_limits<double>::infinity(),
                                     kCoherentInfoThreshold, false});
        }
    };

    // beam-splitter point mapped from (tau, y) = (0.75, 0.25), thermal code N=1
    coherent_info_check(BlackHoleParams(M_PI / 3.0, M_PI / 3.0), 1.0,
                        "r=s=pi/3 N=1");
    for (int i = 0; i < 4; ++i) {
        const BlackHoleParams p = draw_small_params(rng);
        coherent_info_check(p, rng.uniform(0.3, 1.0), param_tag(p));
    }

    // Gaussian vs Fock entropy of the outgoing mode for a thermal input
    {
        const BlackHoleParams p(0.2, 0.3);
        const double mean_n = 0.8;
        const fock::FockLayout layout(cutoff);
        const auto input =
            fock::synthesize_input(layout, CovarianceMatrix::thermal(mean_n));
        const fock::Propagator U(fock::build_generator(p, cutoff));
        fock::StateMixture output;
        output.weights = input.weights;
        for (const auto& psi : input.states) {
            output.states.push_back(U.propagate(psi));
        }
        const double h_fock = fock::reduced_density_a(layout, output).entropy(base);
        const auto cov = fock::covariance_of(layout, output);
        const double h_gauss = gaussian_entropy(
            CovarianceMatrix(Eigen::MatrixXd(cov.block<2, 2>(0, 0))), base);
        const double resid = std::abs(h_fock - h_gauss);
        report.checks.push_back({"entropy-match r=0.2 s=0.3 thermal", resid,
                                 kCoherentInfoThreshold,
                                 resid <= kCoherentInfoThreshold});
    }
    return report;
}

SuiteReport run_all_suites(int cutoff, std::uint64_t seed, LogBase base) {
    SuiteReport all;
    for (const auto& part : {run_bogoliubov_suite(cutoff, seed),
                             run_channel_suite(cutoff, seed),
                             run_entropy_suite(cutoff, seed, base)}) {
        all.checks.insert(all.checks.end(), part.checks.begin(), part.checks.end());
    }
    return all;
}

}  // namespace omgbh
