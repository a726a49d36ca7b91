#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "siqkd/report.hpp"
#include "siqkd/verify.hpp"

namespace {

siqkd::RunConfig load_or_default(const std::string& path) {
    if (path.empty()) return siqkd::RunConfig{};
    return siqkd::load_config_file(path);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw siqkd::ParseError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << text))
        throw std::runtime_error("cannot write output file '" + out_path + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-size secure key rate engine for interference-based QKD"};
    app.require_subcommand(1);

    std::string config_path, out_path, overlay_path;
    double distance = 0.0;

    auto* sweep_cmd = app.add_subcommand("sweep", "Optimized rate curve over a distance range");
    sweep_cmd->add_option("--config", config_path, "INI config file");
    sweep_cmd->add_option("--out", out_path, "Output CSV path (stdout when omitted)");

    auto* point_cmd = app.add_subcommand("point", "Optimized rate at a single distance");
    point_cmd->add_option("--distance", distance, "Fiber length Alice-Bob, km")->required();
    point_cmd->add_option("--config", config_path, "INI config file");
    point_cmd->add_option("--out", out_path, "Output CSV path (stdout when omitted)");

    auto* verify_cmd = app.add_subcommand("verify", "Run the oracle and statistics checks");

    auto* compare_cmd =
        app.add_subcommand("compare", "Both protocols on one config, merged CSV");
    compare_cmd->add_option("--config", config_path, "INI config file");
    compare_cmd->add_option("--overlay", overlay_path, "Externally supplied CSV curve to append");
    compare_cmd->add_option("--out", out_path, "Output CSV path (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep_cmd->parsed()) {
            write_out(siqkd::run_sweep(load_or_default(config_path)), out_path);
        } else if (point_cmd->parsed()) {
            auto cfg = load_or_default(config_path);
            auto pt = siqkd::optimize_point(cfg, distance);
            write_out(siqkd::emit_csv({siqkd::to_row(pt)}), out_path);
        } else if (verify_cmd->parsed()) {
            auto report = siqkd::run_verify();
            std::cout << report.to_string();
            return report.all_pass() ? 0 : 1;
        } else if (compare_cmd->parsed()) {
            std::string overlay = overlay_path.empty() ? "" : slurp(overlay_path);
            write_out(siqkd::run_compare(load_or_default(config_path), overlay), out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
