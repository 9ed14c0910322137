// omgbh — classify black-hole Gaussian channels, report capacities, scan the
// (tau, y) plane, tabulate the a->c mapping, and run the Fock-space oracle.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "omgbh/blackhole_map.hpp"
#include "omgbh/capacity.hpp"
#include "omgbh/cli.hpp"
#include "omgbh/verify_suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitCpViolation = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

using omgbh::cli::format_double;

omgbh::LogBase parse_base(const std::string& text) {
    if (text == "2") return omgbh::LogBase::bits();
    if (text == "e") return omgbh::LogBase::nats();
    throw CLI::ValidationError("--base must be 2 or e");
}

std::string default_base_text() {
    if (const char* env = std::getenv("OMGBH_DEFAULT_BASE")) {
        const std::string v(env);
        if (v == "2" || v == "e") return v;
        std::cerr << "warning: ignoring OMGBH_DEFAULT_BASE=" << v << "\n";
    }
    return "2";
}

void print_point_record(const omgbh::cli::PointRecord& rec,
                        omgbh::cli::OutputFormat format, std::ostream& os) {
    if (format == omgbh::cli::OutputFormat::Json) {
        os << omgbh::cli::to_json_object(rec) << "\n";
        return;
    }
    os << "tau=" << format_double(rec.tau) << " y=" << format_double(rec.y)
       << " cp=" << (rec.cp ? "true" : "false");
    if (rec.channel_class) os << " class=" << *rec.channel_class;
    if (rec.eb) os << " eb=" << (*rec.eb ? "true" : "false");
    if (rec.region) os << " region=" << omgbh::to_string(*rec.region);
    if (rec.k) os << " K=" << format_double(*rec.k);
    os << "\n";
}

struct WindowSpec {
    double tau_min = 0, tau_max = 3, y_min = 0, y_max = 3;
};

WindowSpec parse_window(const std::string& text) {
    WindowSpec w;
    double vals[4];
    size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        const size_t next = text.find(':', pos);
        const std::string tok = text.substr(pos, next == std::string::npos
                                                     ? std::string::npos
                                                     : next - pos);
        try {
            vals[i] = std::stod(tok);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--window expects tmin:tmax:ymin:ymax");
        }
        if (i < 3) {
            if (next == std::string::npos) {
                throw CLI::ValidationError("--window expects tmin:tmax:ymin:ymax");
            }
            pos = next + 1;
        }
    }
    w.tau_min = vals[0];
    w.tau_max = vals[1];
    w.y_min = vals[2];
    w.y_max = vals[3];
    return w;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-mode Gaussian black hole channels: classification, "
                 "capacity bounds, and Fock-space verification"};
    app.require_subcommand(1);

    std::string base_text = default_base_text();
    std::string format_text = "csv";
    std::string output_path;
    double tol = 1e-9;

    // classify
    auto* classify_cmd =
        app.add_subcommand("classify", "class, CP/EB flags and region of one point");
    std::optional<double> cl_tau, cl_y, cl_r, cl_s;
    classify_cmd->add_option("--tau", cl_tau, "channel transmissivity det T");
    classify_cmd->add_option("--y", cl_y, "noise determinant sqrt(det N)");
    classify_cmd->add_option("--r", cl_r, "isometry squeezing/rotation angle");
    classify_cmd->add_option("--s", cl_s, "isometry beam-splitter strength");
    classify_cmd->add_option("--base", base_text, "log base (2 or e)");
    classify_cmd->add_option("--tol", tol, "comparison tolerance");
    classify_cmd->add_option("--format", format_text, "plain or json record")
        ->check(CLI::IsMember({"csv", "json"}));

    // capacity
    auto* capacity_cmd =
        app.add_subcommand("capacity", "full capacity report for one point");
    double cap_tau = 0.0, cap_y = 0.0;
    capacity_cmd->add_option("--tau", cap_tau)->required();
    capacity_cmd->add_option("--y", cap_y)->required();
    capacity_cmd->add_option("--base", base_text, "log base (2 or e)");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "grid scan of the (tau, y) plane");
    std::string window_text = "0:3:0:3";
    int grid_n = 300;
    std::string filter_text = "all";
    scan_cmd->add_option("--window", window_text, "tmin:tmax:ymin:ymax");
    scan_cmd->add_option("--grid", grid_n, "points per axis");
    scan_cmd->add_option("--output", output_path, "output file (default stdout)");
    scan_cmd->add_option("--format", format_text, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    scan_cmd->add_option("--region-filter", filter_text, "all or black-hole-strip")
        ->check(CLI::IsMember({"all", "black-hole-strip"}));
    scan_cmd->add_option("--base", base_text, "log base (2 or e)");
    scan_cmd->add_option("--tol", tol, "comparison tolerance");

    // map
    auto* map_cmd =
        app.add_subcommand("map", "a-channel -> c-channel mapping, both parities");
    std::optional<double> map_tau, map_y;
    std::string preset;
    map_cmd->add_option("--tau", map_tau, "a-channel tau");
    map_cmd->add_option("--y", map_y, "a-channel y");
    map_cmd->add_option("--preset", preset, "fig5 (35 points) or fig6 (25 points)")
        ->check(CLI::IsMember({"fig5", "fig6"}));
    map_cmd->add_option("--output", output_path, "output file (default stdout)");
    map_cmd->add_option("--format", format_text, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "run the truncated-Fock oracle suites");
    std::string suite = "all";
    int cutoff = 20;
    std::uint64_t seed = 7;
    verify_cmd->add_option("--suite", suite, "bogoliubov, channel, entropy or all")
        ->check(CLI::IsMember({"bogoliubov", "channel", "entropy", "all"}));
    verify_cmd->add_option("--cutoff", cutoff, "photons per mode");
    verify_cmd->add_option("--seed", seed, "seed for the parameter draws");
    verify_cmd->add_option("--base", base_text, "log base (2 or e)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const omgbh::LogBase base = parse_base(base_text);
        const auto format = format_text == "json" ? omgbh::cli::OutputFormat::Json
                                                  : omgbh::cli::OutputFormat::Csv;

        if (classify_cmd->parsed()) {
            const bool have_point = cl_tau.has_value() && cl_y.has_value();
            const bool have_params = cl_r.has_value() && cl_s.has_value();
            if (have_point == have_params) {
                std::cerr << "classify: provide exactly one of (--tau, --y) or "
                             "(--r, --s)\n";
                return kExitUsage;
            }
            double tau, y;
            if (have_params) {
                const omgbh::OneModeChannel a =
                    omgbh::a_channel(omgbh::BlackHoleParams(*cl_r, *cl_s));
                tau = a.tau();
                y = a.y();
            } else {
                tau = *cl_tau;
                y = *cl_y;
            }
            const auto rec = omgbh::cli::classify_point(tau, y, base, tol);
            if (!rec.cp) {
                std::cerr << "classify: point (tau=" << format_double(tau)
                          << ", y=" << format_double(y)
                          << ") violates complete positivity (y < |tau-1|)\n";
                return kExitCpViolation;
            }
            print_point_record(rec, format, std::cout);
            return kExitOk;
        }

        if (capacity_cmd->parsed()) {
            const auto rep = omgbh::capacity_report(cap_tau, cap_y, base);
            std::cout << "tau=" << format_double(rep.tau)
                      << " y=" << format_double(rep.y) << "\n"
                      << "status=" << omgbh::to_string(rep.status) << "\n"
                      << "K=" << format_double(rep.k) << "\n"
                      << "coh_info_limit=" << format_double(rep.coh_info_limit)
                      << "\n"
                      << "lower_bound=" << format_double(rep.lower_bound) << "\n";
            if (rep.exact_value) {
                std::cout << "exact_value=" << format_double(*rep.exact_value)
                          << "\n";
            }
            std::cout << "notes=" << rep.notes << "\n";
            return kExitOk;
        }

        if (scan_cmd->parsed()) {
            const WindowSpec w = parse_window(window_text);
            omgbh::cli::ScanConfig config;
            config.tau_min = w.tau_min;
            config.tau_max = w.tau_max;
            config.y_min = w.y_min;
            config.y_max = w.y_max;
            config.grid_n = grid_n;
            config.base = base;
            config.tol = tol;
            config.format = format;
            config.filter = filter_text == "black-hole-strip"
                                ? omgbh::cli::RegionFilter::BlackHoleStrip
                                : omgbh::cli::RegionFilter::All;
            const auto records = omgbh::cli::run_scan(config);
            if (output_path.empty()) {
                omgbh::cli::write_scan(config, records, std::cout);
            } else {
                std::ofstream out(output_path);
                if (!out) {
                    std::cerr << "scan: cannot open " << output_path << "\n";
                    return kExitIo;
                }
                omgbh::cli::write_scan(config, records, out);
                if (!out.good()) {
                    std::cerr << "scan: write failed for " << output_path << "\n";
                    return kExitIo;
                }
            }
            return kExitOk;
        }

        if (map_cmd->parsed()) {
            std::vector<std::pair<double, double>> points;
            if (!preset.empty()) {
                points = omgbh::cli::map_preset(preset);
            } else if (map_tau && map_y) {
                points.emplace_back(*map_tau, *map_y);
            } else {
                std::cerr << "map: provide --tau/--y or --preset\n";
                return kExitUsage;
            }
            std::vector<omgbh::cli::MapRecord> records;
            records.reserve(points.size());
            for (const auto& [t, yy] : points) {
                records.push_back(omgbh::cli::map_point(t, yy));
            }
            if (output_path.empty()) {
                omgbh::cli::write_map(records, format, std::cout);
            } else {
                std::ofstream out(output_path);
                if (!out) {
                    std::cerr << "map: cannot open " << output_path << "\n";
                    return kExitIo;
                }
                omgbh::cli::write_map(records, format, out);
                if (!out.good()) {
                    std::cerr << "map: write failed for " << output_path << "\n";
                    return kExitIo;
                }
            }
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            omgbh::SuiteReport report;
            if (suite == "bogoliubov") {
                report = omgbh::run_bogoliubov_suite(cutoff, seed);
            } else if (suite == "channel") {
                report = omgbh::run_channel_suite(cutoff, seed);
            } else if (suite == "entropy") {
                report = omgbh::run_entropy_suite(cutoff, seed, base);
            } else {
                report = omgbh::run_all_suites(cutoff, seed, base);
            }
            int n_pass = 0;
            for (const auto& check : report.checks) {
                std::cout << (check.pass ? "PASS " : "FAIL ") << check.label
                          << "  residual=" << format_double(check.residual)
                          << " threshold=" << format_double(check.threshold) << "\n";
                n_pass += check.pass ? 1 : 0;
            }
            std::cout << "verify: " << n_pass << "/" << report.checks.size()
                      << " checks passed (cutoff=" << cutoff << ", seed=" << seed
                      << ", max covariance residual="
                      << format_double(report.max_residual("channel"))
                      << ", max coherent-info residual="
                      << format_double(report.max_residual("coherent-info")) << ")\n";
            return report.all_pass() ? kExitOk : kExitVerifyFailure;
        }
    } catch (const omgbh::CpViolationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCpViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
