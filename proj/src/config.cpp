#include "rodsim/config.hpp"

#include <fstream>
#include <sstream>

namespace rodsim::bench {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str());
}

Config Config::parse_string(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line, section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw ConfigError("config line " + std::to_string(line_no) +
                                  ": malformed section header");
            section = trim(s.substr(1, s.size() - 2));
            if (section.empty())
                throw ConfigError("config line " + std::to_string(line_no) + ": empty section");
            cfg.sections_[section];
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
        if (section.empty())
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": key outside of a section");
        const std::string key = trim(s.substr(0, eq));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
        cfg.sections_[section][key] = trim(s.substr(eq + 1));
    }
    return cfg;
}

bool Config::has(const std::string& section, const std::string& key) const {
    const auto it = sections_.find(section);
    return it != sections_.end() && it->second.count(key) > 0;
}

std::string Config::get_string(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
    const auto it = sections_.find(section);
    if (it == sections_.end()) return fallback;
    const auto kit = it->second.find(key);
    return kit == it->second.end() ? fallback : kit->second;
}

namespace {

double parse_number(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double out = std::stod(v, &pos);
        if (pos != v.size()) throw ConfigError("");
        return out;
    } catch (const std::exception&) {
        throw ConfigError("config value is not a number: " + key + " = " + v);
    }
}

}  // namespace

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const {
    if (!has(section, key)) return fallback;
    return parse_number(key, get_string(section, key, ""));
}

int Config::get_int(const std::string& section, const std::string& key, int fallback) const {
    const double v = get_double(section, key, fallback);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw ConfigError("config value is not an integer: " + key);
    return i;
}

std::vector<double> Config::get_list(const std::string& section, const std::string& key,
                                     const std::vector<double>& fallback) const {
    if (!has(section, key)) return fallback;
    std::vector<double> out;
    std::istringstream in(get_string(section, key, ""));
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_number(key, trim(item)));
    return out;
}

std::vector<std::string> Config::get_string_list(const std::string& section,
                                                 const std::string& key,
                                                 const std::vector<std::string>& fallback) const {
    if (!has(section, key)) return fallback;
    std::vector<std::string> out;
    std::istringstream in(get_string(section, key, ""));
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto a = item.find_first_not_of(" \t");
        const auto b = item.find_last_not_of(" \t");
        out.push_back(a == std::string::npos ? "" : item.substr(a, b - a + 1));
    }
    return out;
}

void Config::validate(const std::map<std::string, std::set<std::string>>& schema) const {
    for (const auto& [section, values] : sections_) {
        const auto it = schema.find(section);
        if (it == schema.end()) throw ConfigError("unknown config section: [" + section + "]");
        for (const auto& [key, value] : values)
            if (!it->second.count(key))
                throw ConfigError("unknown key '" + key + "' in section [" + section + "]");
    }
}

}  // namespace rodsim::bench
