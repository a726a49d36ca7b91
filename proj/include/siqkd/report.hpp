#pragma once

#include <optional>
#include <string>
#include <vector>

#include "siqkd/config.hpp"
#include "siqkd/optimizer.hpp"

namespace siqkd {

/// One CSV row of a sweep. eta_att and q_z are populated only for the
/// baseline protocol; SI rows leave them blank.
struct SweepRow {
    double distance_km;
    std::string protocol;
    double mean_photon;
    double p_z;
    std::optional<double> eta_att;
    std::optional<double> q_z;
    double q_total_z;
    double qber_z;
    double qber_x;
    double phase_error_z;
    double key_length_bits;
    double skr_per_pulse;
};

extern const char* kCsvHeader;

SweepRow to_row(const KeyRatePoint& pt);

// Comma-separated, '\n' line endings, 17 significant digits per number.
std::string emit_csv(const std::vector<SweepRow>& rows);

// Inverse of emit_csv; re-serializing a parsed document is byte-identical.
std::vector<SweepRow> parse_csv(const std::string& text);

// Optimized sweep over the configured distance range, serialized as CSV.
std::string run_sweep(const RunConfig& config);

// Both protocols on one config, merged; optional externally supplied curve
// (same CSV schema) appended verbatim as additional rows.
std::string run_compare(const RunConfig& config, const std::string& overlay_csv = "");

}  // namespace siqkd
