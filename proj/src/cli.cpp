#include "omgbh/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <thread>

#include "json.hpp"

namespace omgbh::cli {

std::string format_double(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) {
        throw InternalInconsistencyError("format_double: NaN is never emitted");
    }
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

namespace {

std::string opt_str(const std::optional<double>& v) {
    return v ? format_double(*v) : "";
}

nlohmann::json opt_json(const std::optional<double>& v) {
    if (!v) return nullptr;
    if (std::isinf(*v)) return *v > 0 ? "inf" : "-inf";
    return *v;
}

}  // namespace

PointRecord classify_point(double tau, double y, LogBase base, double tol) {
    PointRecord rec;
    rec.tau = tau;
    rec.y = y;
    rec.cp = y >= std::abs(tau - 1.0) - tol && y >= -tol;
    if (!rec.cp) return rec;

    const OneModeChannel ch = canonical_channel(tau, y, tol);
    rec.channel_class = to_string(classify(ch, tol));
    rec.eb = is_entanglement_breaking(tau, y);
    const CapacityReport rep = capacity_report(tau, y, base);
    rec.region = rep.status;
    rec.k = rep.k;
    rec.coh_info_limit = rep.coh_info_limit;
    rec.lower_bound = rep.lower_bound;
    rec.exact_value = rep.exact_value;
    rec.notes = rep.notes;
    return rec;
}

std::string to_csv_row(const PointRecord& rec) {
    std::string row = format_double(rec.tau) + "," + format_double(rec.y) + "," +
                      (rec.cp ? "true" : "false") + ",";
    row += rec.channel_class.value_or("");
    row += ",";
    row += rec.eb ? (*rec.eb ? "true" : "false") : "";
    row += ",";
    row += rec.region ? to_string(*rec.region) : "";
    row += "," + opt_str(rec.k) + "," + opt_str(rec.coh_info_limit) + "," +
           opt_str(rec.lower_bound);
    return row;
}

std::string to_json_object(const PointRecord& rec) {
    nlohmann::json j;
    j["tau"] = rec.tau;
    j["y"] = rec.y;
    j["cp"] = rec.cp;
    j["class"] = rec.channel_class ? nlohmann::json(*rec.channel_class) : nullptr;
    j["eb"] = rec.eb ? nlohmann::json(*rec.eb) : nullptr;
    j["region"] = rec.region ? nlohmann::json(to_string(*rec.region)) : nullptr;
    j["K"] = opt_json(rec.k);
    j["coh_info_limit"] = opt_json(rec.coh_info_limit);
    j["lower_bound"] = opt_json(rec.lower_bound);
    j["exact_value"] = opt_json(rec.exact_value);
    if (!rec.notes.empty()) j["notes"] = rec.notes;
    return j.dump();
}

std::vector<PointRecord> run_scan(const ScanConfig& config) {
    if (config.grid_n < 2) {
        throw std::invalid_argument("run_scan: grid_n must be >= 2");
    }
    if (!(config.tau_max > config.tau_min) || !(config.y_max > config.y_min)) {
        throw std::invalid_argument("run_scan: window max must exceed min");
    }
    const int n = config.grid_n;
    const double dtau = (config.tau_max - config.tau_min) / (n - 1);
    const double dy = (config.y_max - config.y_min) / (n - 1);

    std::vector<std::pair<double, double>> points;
    points.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            points.emplace_back(config.tau_min + i * dtau, config.y_min + j * dy);
        }
    }
    if (config.filter == RegionFilter::BlackHoleStrip) {
        points.erase(std::remove_if(points.begin(), points.end(),
                                    [](const auto& p) {
                                        return !in_black_hole_region(p.first, p.second);
                                    }),
                     points.end());
    }

    std::vector<PointRecord> records(points.size());
    const auto worker = [&](size_t begin, size_t end) {
        for (size_t k = begin; k < end; ++k) {
            records[k] = classify_point(points[k].first, points[k].second,
                                        config.base, config.tol);
        }
    };
    const size_t hw = std::max<size_t>(1, std::thread::hardware_concurrency());
    const size_t n_threads = std::min(hw, points.size() ? points.size() : 1);
    if (n_threads <= 1 || points.size() < 256) {
        worker(0, points.size());
    } else {
        std::vector<std::thread> pool;
        const size_t chunk = (points.size() + n_threads - 1) / n_threads;
        for (size_t t = 0; t < n_threads; ++t) {
            const size_t b = t * chunk;
            const size_t e = std::min(points.size(), b + chunk);
            if (b < e) pool.emplace_back(worker, b, e);
        }
        for (auto& th : pool) th.join();
    }
    return records;
}

void write_scan(const ScanConfig& config, const std::vector<PointRecord>& records,
                std::ostream& os) {
    if (config.format == OutputFormat::Csv) {
        os << kScanCsvHeader << "\n";
        for (const auto& rec : records) {
            os << to_csv_row(rec) << "\n";
        }
    } else {
        os << "[";
        for (size_t i = 0; i < records.size(); ++i) {
            os << (i ? ",\n " : "\n ") << to_json_object(records[i]);
        }
        os << "\n]\n";
    }
}

MapRecord map_point(double tau_a, double y_a, double tol) {
    MapRecord rec;
    rec.tau_a = tau_a;
    rec.y_a = y_a;
    if (!in_black_hole_region(tau_a, y_a)) {
        rec.error = "outside-strip";
        return rec;
    }
    const BlackHolePoint pt{tau_a, y_a};
    const auto fill = [&](Parity parity, std::optional<double>& r_out,
                          std::optional<double>& s_out, std::optional<double>& tau_c,
                          std::optional<double>& y_c,
                          std::optional<std::string>& cls,
                          std::optional<CapacityStatus>& region) {
        const auto p = inverse_map(pt, parity);
        if (!p) return;
        r_out = p->r;
        s_out = p->s;
        const auto c = c_params_from_a(pt, parity);
        tau_c = c->first;
        y_c = c->second;
        cls = to_string(classify(c_channel(*p), tol));
        region = capacity_region(c->first, c->second, tol);
    };
    fill(Parity::Even, rec.r_even, rec.s_even, rec.tau_c_even, rec.y_c_even,
         rec.class_c_even, rec.region_c_even);
    fill(Parity::Odd, rec.r_odd, rec.s_odd, rec.tau_c_odd, rec.y_c_odd,
         rec.class_c_odd, rec.region_c_odd);
    return rec;
}

std::vector<std::pair<double, double>> map_preset(const std::string& name) {
    std::vector<double> taus;
    if (name == "fig5") {
        for (int i = 1; i <= 7; ++i) taus.push_back(0.25 * i);  // 7 x 5 = 35
    } else if (name == "fig6") {
        for (int i = 0; i < 5; ++i) taus.push_back(0.3 + 0.4 * i);  // 5 x 5 = 25
    } else {
        throw std::invalid_argument("map_preset: unknown preset " + name);
    }
    std::vector<std::pair<double, double>> points;
    for (double tau : taus) {
        const double lo = std::abs(tau - 1.0);
        const double hi = tau + 1.0;
        for (int i = 1; i <= 5; ++i) {
            points.emplace_back(tau, lo + (hi - lo) * i / 6.0);
        }
    }
    return points;
}

std::string to_csv_row(const MapRecord& rec) {
    const auto opt_status = [](const std::optional<CapacityStatus>& s) {
        return s ? to_string(*s) : "";
    };
    std::string row = format_double(rec.tau_a) + "," + format_double(rec.y_a);
    row += "," + opt_str(rec.r_even) + "," + opt_str(rec.s_even) + "," +
           opt_str(rec.tau_c_even) + "," + opt_str(rec.y_c_even) + "," +
           rec.class_c_even.value_or("") + "," + opt_status(rec.region_c_even);
    row += "," + opt_str(rec.r_odd) + "," + opt_str(rec.s_odd) + "," +
           opt_str(rec.tau_c_odd) + "," + opt_str(rec.y_c_odd) + "," +
           rec.class_c_odd.value_or("") + "," + opt_status(rec.region_c_odd);
    row += "," + rec.error;
    return row;
}

std::string to_json_object(const MapRecord& rec) {
    nlohmann::json j;
    j["tau_a"] = rec.tau_a;
    j["y_a"] = rec.y_a;
    const auto put = [&](const char* key, const std::optional<double>& v) {
        j[key] = opt_json(v);
    };
    put("r_even", rec.r_even);
    put("s_even", rec.s_even);
    put("tau_c_even", rec.tau_c_even);
    put("y_c_even", rec.y_c_even);
    j["class_c_even"] =
        rec.class_c_even ? nlohmann::json(*rec.class_c_even) : nullptr;
    j["region_c_even"] =
        rec.region_c_even ? nlohmann::json(to_string(*rec.region_c_even)) : nullptr;
    put("r_odd", rec.r_odd);
    put("s_odd", rec.s_odd);
    put("tau_c_odd", rec.tau_c_odd);
    put("y_c_odd", rec.y_c_odd);
    j["class_c_odd"] = rec.class_c_odd ? nlohmann::json(*rec.class_c_odd) : nullptr;
    j["region_c_odd"] =
        rec.region_c_odd ? nlohmann::json(to_string(*rec.region_c_odd)) : nullptr;
    if (!rec.error.empty()) j["error"] = rec.error;
    return j.dump();
}

void write_map(const std::vector<MapRecord>& records, OutputFormat format,
               std::ostream& os) {
    if (format == OutputFormat::Csv) {
        os << kMapCsvHeader << "\n";
        for (const auto& rec : records) {
            os << to_csv_row(rec) << "\n";
        }
    } else {
        os << "[";
        for (size_t i = 0; i < records.size(); ++i) {
            os << (i ? ",\n " : "\n ") << to_json_object(records[i]);
        }
        os << "\n]\n";
    }
}

}  // namespace omgbh::cli
