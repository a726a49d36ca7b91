#pragma once

#include <string>

#include "siqkd/link.hpp"

namespace siqkd {

enum class SourceType { Sps, OddCat };
enum class Protocol { Si, SpsBb84 };

/// Fully validated run configuration. Defaults reproduce the standard
/// simulation setting; every field can be overridden from an INI file.
struct RunConfig {
    // [system]
    double eta_det = 0.8;
    double p_d = 1e-7;
    double e_d = 0.01;
    double alpha_db_per_km = 0.16;
    double f = 1.16;
    double eps_cor = 1e-15;
    double eps_sec = 1e-10;
    double n_pulses = 1e12;

    // [source]
    SourceType source_type = SourceType::Sps;
    double g2 = 0.01;          // sps source
    double mu = -1.0;          // odd cat: fixed mu when >= 0, otherwise optimized
    double mean = -1.0;        // sps: fixed mean when >= 0, otherwise optimized

    // [protocol]
    Protocol protocol = Protocol::Si;
    Routing routing = Routing::Active;
    double rep_rate = 0.0;     // baseline extras
    double dead_time = 0.0;

    // [sweep]
    double d_min = 0.0;
    double d_max = 450.0;
    double d_step = 10.0;

    // [optimizer]
    int si_grid = 40;
    int bb84_grid = 12;
    int refine_iters = 200;

    void validate() const;
};

// Parses INI-style `key = value` text with [section] headers and '#'
// comments. Unknown sections or keys are rejected with line diagnostics.
RunConfig parse_config(const std::string& text);

RunConfig load_config_file(const std::string& path);

}  // namespace siqkd
