// cli.hpp — record types and runners behind the command-line surface:
// point classification, capacity reports, region scans, a->c mapping tables.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "omgbh/blackhole_map.hpp"
#include "omgbh/capacity.hpp"

namespace omgbh::cli {

enum class OutputFormat { Csv, Json };
enum class RegionFilter { All, BlackHoleStrip };

// Shortest decimal representation that round-trips the double; infinities
// serialize as "inf"/"-inf".
std::string format_double(double x);

struct ScanConfig {
    double tau_min = 0.0;
    double tau_max = 3.0;
    double y_min = 0.0;
    double y_max = 3.0;
    int grid_n = 300;  // points per axis
    LogBase base = LogBase::bits();
    double tol = 1e-9;
    OutputFormat format = OutputFormat::Csv;
    RegionFilter filter = RegionFilter::All;
};

// One (tau, y) evaluation; the optional fields stay empty when the point is
// not completely positive.
struct PointRecord {
    double tau = 0.0;
    double y = 0.0;
    bool cp = false;
    std::optional<std::string> channel_class;
    std::optional<bool> eb;
    std::optional<CapacityStatus> region;
    std::optional<double> k;
    std::optional<double> coh_info_limit;
    std::optional<double> lower_bound;
    std::optional<double> exact_value;
    std::string notes;
};

PointRecord classify_point(double tau, double y, LogBase base = LogBase::bits(),
                           double tol = 1e-9);

inline constexpr const char* kScanCsvHeader =
    "tau,y,cp,class,eb,region,K,coh_info_limit,lower_bound";

std::string to_csv_row(const PointRecord& rec);
std::string to_json_object(const PointRecord& rec);

// Deterministic row-major (tau outer, y inner) scan; grid points are
// evaluated with unordered parallelism and assembled in grid order.
std::vector<PointRecord> run_scan(const ScanConfig& config);
void write_scan(const ScanConfig& config, const std::vector<PointRecord>& records,
                std::ostream& os);

// Inverse map of one a-channel point, both parities.
struct MapRecord {
    double tau_a = 0.0;
    double y_a = 0.0;
    std::optional<double> r_even, s_even, tau_c_even, y_c_even;
    std::optional<std::string> class_c_even;
    std::optional<CapacityStatus> region_c_even;
    std::optional<double> r_odd, s_odd, tau_c_odd, y_c_odd;
    std::optional<std::string> class_c_odd;
    std::optional<CapacityStatus> region_c_odd;
    std::string error;  // row-level marker, e.g. outside the strip
};

MapRecord map_point(double tau_a, double y_a, double tol = 1e-9);

// Interior sample grids matching the published point counts: 35 (preset
// "fig5") and 25 (preset "fig6") points covering the strip near the origin.
std::vector<std::pair<double, double>> map_preset(const std::string& name);

inline constexpr const char* kMapCsvHeader =
    "tau_a,y_a,r_even,s_even,tau_c_even,y_c_even,class_c_even,region_c_even,"
    "r_odd,s_odd,tau_c_odd,y_c_odd,class_c_odd,region_c_odd,error";

std::string to_csv_row(const MapRecord& rec);
std::string to_json_object(const MapRecord& rec);
void write_map(const std::vector<MapRecord>& records, OutputFormat format,
               std::ostream& os);

}  // namespace omgbh::cli
