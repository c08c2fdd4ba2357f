#include "w15j/config_file.hpp"

#include <fstream>
#include <sstream>

namespace w15j {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

SweepSpec parse_config_text(const std::string& text, const std::string& origin) {
    SweepSpec spec;
    std::array<bool, kNumLabels15> seen{};
    bool saw_formula = false, saw_small = false;
    std::string small_list;

    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.rfind("two_", 0) == 0) {
            Label15 lab;
            try {
                lab = label15_from_name(key.substr(4));
            } catch (const std::exception& e) {
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": " + e.what());
            }
            int t;
            try {
                std::size_t pos = 0;
                t = std::stoi(val, &pos);
                if (pos != val.size()) throw std::invalid_argument(val);
            } catch (const std::exception&) {
                throw ConfigError(origin + ":" + std::to_string(lineno) +
                                  ": bad doubled integer '" + val + "'");
            }
            if (t < 0)
                throw ConfigError(origin + ":" + std::to_string(lineno) +
                                  ": labels must be nonnegative");
            spec.labels[lab] = HalfInt::from_twice(t);
            seen[static_cast<int>(lab)] = true;
        } else if (key == "small") {
            saw_small = true;
            small_list = val;
        } else if (key == "varied") {
            try {
                spec.varied = label15_from_name(val);
            } catch (const std::exception& e) {
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": " + e.what());
            }
        } else if (key == "formula") {
            try {
                spec.formula = formula_from_name(val);
            } catch (const std::exception& e) {
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": " + e.what());
            }
            saw_formula = true;
        } else if (key == "range") {
            const auto dots = val.find("..");
            if (dots == std::string::npos)
                throw ConfigError(origin + ":" + std::to_string(lineno) +
                                  ": range must be <two_lo>..<two_hi>");
            try {
                const int lo = std::stoi(val.substr(0, dots));
                const int hi = std::stoi(val.substr(dots + 2));
                spec.range = {HalfInt::from_twice(lo), HalfInt::from_twice(hi)};
            } catch (const std::exception&) {
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": bad range");
            }
        } else {
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": unknown key '" + key + "'");
        }
    }
    if (!saw_formula) throw ConfigError(origin + ": missing 'formula'");
    for (int i = 0; i < kNumLabels15; ++i) {
        if (!seen[i] && static_cast<Label15>(i) != spec.varied)
            throw ConfigError(origin + ": missing label two_" +
                              label15_name(static_cast<Label15>(i)));
    }
    if (saw_small) {
        std::istringstream ss(small_list);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            try {
                spec.labels.small[static_cast<int>(label15_from_name(item))] = true;
            } catch (const std::exception& e) {
                throw ConfigError(origin + ": " + e.what());
            }
        }
    }
    try {
        check_small_flags(spec.labels, spec.formula);
    } catch (const std::exception& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    return spec;
}

SweepSpec parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

} // namespace w15j
