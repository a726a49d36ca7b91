#include "siqkd/report.hpp"

#include <cstdio>
#include <sstream>

namespace siqkd {

const char* kCsvHeader =
    "distance_km,protocol,mean_photon,p_z,eta_att,q_z,q_total_z,qber_z,qber_x,"
    "phase_error_z,key_length_bits,skr_per_pulse";

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : ""; }

std::string protocol_name(Protocol p) { return p == Protocol::Si ? "si" : "sps_bb84"; }

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    cells.push_back(cur);
    return cells;
}

double to_double(const std::string& s) {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw ParseError("CSV: malformed number '" + s + "'");
    return v;
}

std::optional<double> to_opt(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return to_double(s);
}

}  // namespace

SweepRow to_row(const KeyRatePoint& pt) {
    SweepRow r;
    r.distance_km = pt.distance_km;
    r.protocol = protocol_name(pt.protocol);
    r.mean_photon = pt.mean_photon;
    r.p_z = pt.p_z;
    if (pt.protocol == Protocol::SpsBb84) {
        r.eta_att = pt.eta_att;
        r.q_z = pt.q_z;
    }
    r.q_total_z = pt.q_total_z;
    r.qber_z = pt.qber_z;
    r.qber_x = pt.qber_x;
    r.phase_error_z = pt.phase_error;
    r.key_length_bits = pt.key_length;
    r.skr_per_pulse = pt.skr;
    return r;
}

std::string emit_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << kCsvHeader << "\n";
    for (const SweepRow& r : rows) {
        out << fmt(r.distance_km) << ',' << r.protocol << ',' << fmt(r.mean_photon) << ','
            << fmt(r.p_z) << ',' << fmt(r.eta_att) << ',' << fmt(r.q_z) << ','
            << fmt(r.q_total_z) << ',' << fmt(r.qber_z) << ',' << fmt(r.qber_x) << ','
            << fmt(r.phase_error_z) << ',' << fmt(r.key_length_bits) << ','
            << fmt(r.skr_per_pulse) << "\n";
    }
    return out.str();
}

std::vector<SweepRow> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("CSV: empty document");
    if (line != kCsvHeader) throw ParseError("CSV: unexpected header '" + line + "'");
    std::vector<SweepRow> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto cells = split(line, ',');
        if (cells.size() != 12)
            throw ParseError("CSV line " + std::to_string(line_no) + ": expected 12 fields");
        SweepRow r;
        r.distance_km = to_double(cells[0]);
        r.protocol = cells[1];
        r.mean_photon = to_double(cells[2]);
        r.p_z = to_double(cells[3]);
        r.eta_att = to_opt(cells[4]);
        r.q_z = to_opt(cells[5]);
        r.q_total_z = to_double(cells[6]);
        r.qber_z = to_double(cells[7]);
        r.qber_x = to_double(cells[8]);
        r.phase_error_z = to_double(cells[9]);
        r.key_length_bits = to_double(cells[10]);
        r.skr_per_pulse = to_double(cells[11]);
        rows.push_back(r);
    }
    return rows;
}

std::string run_sweep(const RunConfig& config) {
    auto points = sweep(config, sweep_distances(config));
    std::vector<SweepRow> rows;
    rows.reserve(points.size());
    for (const auto& pt : points) rows.push_back(to_row(pt));
    return emit_csv(rows);
}

std::string run_compare(const RunConfig& config, const std::string& overlay_csv) {
    std::vector<SweepRow> rows;
    for (Protocol proto : {Protocol::Si, Protocol::SpsBb84}) {
        RunConfig c = config;
        c.protocol = proto;
        for (const auto& pt : sweep(c, sweep_distances(c))) rows.push_back(to_row(pt));
    }
    if (!overlay_csv.empty())
        for (const SweepRow& r : parse_csv(overlay_csv)) rows.push_back(r);
    return emit_csv(rows);
}

}  // namespace siqkd
