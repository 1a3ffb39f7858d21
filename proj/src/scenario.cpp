#include "qdet/scenario.hpp"
#include "qdet/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace qdet {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int edit_distance(const std::string& a, const std::string& b) {
    std::vector<int> prev(b.size() + 1), cur(b.size() + 1);
    for (size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<int>(j);
    for (size_t i = 1; i <= a.size(); ++i) {
        cur[0] = static_cast<int>(i);
        for (size_t j = 1; j <= b.size(); ++j) {
            const int sub = prev[j - 1] + (a[i - 1] != b[j - 1]);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

const std::map<std::string, std::vector<std::string>>& known_keys() {
    static const std::map<std::string, std::vector<std::string>> k = {
        {"physics", {"m", "omega_eg", "c1", "m_eg_abs", "g"}},
        {"source", {"y0", "y"}},
        {"detector", {"x", "t_i", "t_f", "kind"}},
        {"numerics",
         {"abs_tol", "rel_tol", "max_panels", "pv_excision", "uv_damping",
          "k_max"}}};
    return k;
}

[[noreturn]] void unknown_key(const std::string& section, const std::string& key,
                              int line) {
    std::string best;
    int best_d = 1 << 30;
    for (const auto& [sec, keys] : known_keys())
        for (const auto& cand : keys) {
            const int d = edit_distance(key, cand);
            if (d < best_d) {
                best_d = d;
                best = cand;
            }
        }
    std::string msg = "unknown key '" + key + "' in section [" + section + "]";
    if (best_d <= 3) msg += "; did you mean '" + best + "'?";
    throw ParseError(msg, line);
}

double parse_real(const std::string& v, int line, const std::string& key) {
    std::istringstream is(v);
    double x;
    if (!(is >> x) || !(is >> std::ws).eof())
        throw ParseError("value for '" + key + "' is not a real number: '" + v + "'",
                         line);
    return x;
}

int parse_int(const std::string& v, int line, const std::string& key) {
    std::istringstream is(v);
    int x;
    if (!(is >> x) || !(is >> std::ws).eof())
        throw ParseError("value for '" + key + "' is not an integer: '" + v + "'",
                         line);
    return x;
}

Vec3 parse_vec3(const std::string& v, int line, const std::string& key) {
    std::istringstream is(v);
    Vec3 out;
    if (!(is >> out.x >> out.y >> out.z) || !(is >> std::ws).eof())
        throw ParseError("value for '" + key + "' must be 3 reals: '" + v + "'",
                         line);
    return out;
}

} // namespace

ParsedScenario parse_scenario(const std::string& text) {
    ParsedScenario out;
    std::istringstream stream(text);
    std::string raw;
    std::string section;
    int line = 0;
    int line_window = 0;  // where t_i / t_f last appeared, for error anchoring
    while (std::getline(stream, raw)) {
        ++line;
        std::string s = raw;
        const auto hash = s.find_first_of("#;");
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw ParseError("unterminated section header", line);
            section = trim(s.substr(1, s.size() - 2));
            if (!known_keys().count(section))
                throw ParseError("unknown section [" + section + "]", line);
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value'", line);
        if (section.empty())
            throw ParseError("key outside any section", line);
        const std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));
        const auto& keys = known_keys().at(section);
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            unknown_key(section, key, line);

        Scenario& sc = out.scenario;
        QuadratureConfig& nm = out.numerics;
        if (section == "physics") {
            if (key == "m") sc.mass = parse_real(val, line, key);
            else if (key == "omega_eg") sc.omega_eg = parse_real(val, line, key);
            else if (key == "c1") sc.c1 = parse_real(val, line, key);
            else if (key == "m_eg_abs") sc.m_eg_abs = parse_real(val, line, key);
            else sc.g = parse_real(val, line, key);
        } else if (section == "source") {
            if (key == "y0") sc.source_time = parse_real(val, line, key);
            else sc.source_pos = parse_vec3(val, line, key);
        } else if (section == "detector") {
            if (key == "x") sc.detector_pos = parse_vec3(val, line, key);
            else if (key == "t_i") { sc.t_i = parse_real(val, line, key); line_window = line; }
            else if (key == "t_f") { sc.t_f = parse_real(val, line, key); line_window = line; }
            else {
                out.kind_given = true;
                if (val == "udd") out.kind = DetectorKind::UDD;
                else if (val == "gd") out.kind = DetectorKind::GD;
                else if (val == "md") out.kind = DetectorKind::MD;
                else throw ParseError("kind must be one of udd|gd|md, got '" + val + "'", line);
            }
        } else {  // numerics
            if (key == "abs_tol") nm.abs_tol = parse_real(val, line, key);
            else if (key == "rel_tol") nm.rel_tol = parse_real(val, line, key);
            else if (key == "max_panels") nm.max_panels = parse_int(val, line, key);
            else if (key == "pv_excision") nm.pv_excision = parse_real(val, line, key);
            else if (key == "uv_damping") nm.uv_damping = parse_real(val, line, key);
            else nm.k_max = parse_real(val, line, key);
        }
    }

    if (!(out.scenario.t_i < out.scenario.t_f))
        throw ParseError("invalid window: need t_i < t_f", line_window ? line_window : line);
    try {
        out.scenario.validate();
        out.numerics.validate();
    } catch (const DomainError& e) {
        throw ParseError(e.what(), line);
    }
    return out;
}

ParsedScenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open scenario file '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

} // namespace qdet
