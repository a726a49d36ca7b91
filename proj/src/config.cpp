#include "siqkd/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace siqkd {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& value, int line) {
    size_t pos = 0;
    double v;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line) + ": expected a number, got '" + value + "'");
    }
    if (pos != value.size() || !std::isfinite(v))
        throw ParseError("line " + std::to_string(line) + ": expected a number, got '" + value + "'");
    return v;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw ValidationError(what);
}

}  // namespace

void RunConfig::validate() const {
    auto prob = [](double v) { return v >= 0.0 && v <= 1.0; };
    require(prob(eta_det), "eta_det must be in [0,1]");
    require(prob(p_d), "p_d must be in [0,1]");
    require(prob(e_d), "e_d must be in [0,1]");
    require(alpha_db_per_km >= 0.0, "alpha_db_per_km must be >= 0");
    require(f >= 1.0, "f must be >= 1");
    require(eps_cor > 0.0 && eps_cor < 1.0, "eps_cor must be in (0,1)");
    require(eps_sec > 0.0 && eps_sec < 1.0, "eps_sec must be in (0,1)");
    require(n_pulses >= 1.0, "N must be >= 1");
    require(g2 >= 0.0, "g2 must be >= 0");
    require(d_min >= 0.0 && d_max >= d_min, "sweep range must satisfy 0 <= d_min <= d_max");
    require(d_step > 0.0, "d_step must be > 0");
    require(si_grid >= 2 && bb84_grid >= 2, "grid resolution must be >= 2");
    require(refine_iters >= 0, "refine_iters must be >= 0");
    require(rep_rate >= 0.0 && dead_time >= 0.0, "R and tau must be >= 0");
    if (mean >= 0.0) require(mean > 0.0 && mean <= 1.0, "fixed mean must be in (0,1]");
    if (mu >= 0.0) require(mu > 0.0, "fixed mu must be > 0");
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    using Setter = std::function<void(RunConfig&, const std::string&, int)>;
    auto num = [](double RunConfig::* field) {
        return Setter([field](RunConfig& c, const std::string& v, int line) {
            c.*field = parse_number(v, line);
        });
    };
    auto integer = [](int RunConfig::* field) {
        return Setter([field](RunConfig& c, const std::string& v, int line) {
            double d = parse_number(v, line);
            if (d != std::floor(d))
                throw ParseError("line " + std::to_string(line) + ": expected an integer");
            c.*field = static_cast<int>(d);
        });
    };

    const std::map<std::string, std::map<std::string, Setter>> schema = {
        {"system",
         {{"eta_det", num(&RunConfig::eta_det)},
          {"p_d", num(&RunConfig::p_d)},
          {"e_d", num(&RunConfig::e_d)},
          {"alpha_db_per_km", num(&RunConfig::alpha_db_per_km)},
          {"f", num(&RunConfig::f)},
          {"eps_cor", num(&RunConfig::eps_cor)},
          {"eps_sec", num(&RunConfig::eps_sec)},
          {"N", num(&RunConfig::n_pulses)}}},
        {"source",
         {{"type",
           Setter([](RunConfig& c, const std::string& v, int line) {
               if (v == "sps") c.source_type = SourceType::Sps;
               else if (v == "odd_cat") c.source_type = SourceType::OddCat;
               else throw ParseError("line " + std::to_string(line) + ": unknown source type '" + v + "'");
           })},
          {"g2", num(&RunConfig::g2)},
          {"mu", num(&RunConfig::mu)},
          {"mean", num(&RunConfig::mean)}}},
        {"protocol",
         {{"name",
           Setter([](RunConfig& c, const std::string& v, int line) {
               if (v == "si") c.protocol = Protocol::Si;
               else if (v == "sps_bb84") c.protocol = Protocol::SpsBb84;
               else throw ParseError("line " + std::to_string(line) + ": unknown protocol '" + v + "'");
           })},
          {"routing",
           Setter([](RunConfig& c, const std::string& v, int line) {
               if (v == "active") c.routing = Routing::Active;
               else if (v == "passive") c.routing = Routing::Passive;
               else throw ParseError("line " + std::to_string(line) + ": unknown routing '" + v + "'");
           })},
          {"R", num(&RunConfig::rep_rate)},
          {"tau", num(&RunConfig::dead_time)}}},
        {"sweep",
         {{"d_min", num(&RunConfig::d_min)},
          {"d_max", num(&RunConfig::d_max)},
          {"d_step", num(&RunConfig::d_step)}}},
        {"optimizer",
         {{"si_grid", integer(&RunConfig::si_grid)},
          {"bb84_grid", integer(&RunConfig::bb84_grid)},
          {"refine_iters", integer(&RunConfig::refine_iters)}}},
    };

    std::istringstream in(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError("line " + std::to_string(line_no) + ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (!schema.count(section))
                throw ParseError("line " + std::to_string(line_no) + ": unknown section [" + section + "]");
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (section.empty())
            throw ParseError("line " + std::to_string(line_no) + ": key '" + key + "' outside any section");
        const auto& keys = schema.at(section);
        auto it = keys.find(key);
        if (it == keys.end())
            throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key +
                             "' in section [" + section + "]");
        it->second(cfg, value, line_no);
    }
    cfg.validate();
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace siqkd
