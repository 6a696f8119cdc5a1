#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "rodsim/types.hpp"

namespace rodsim::bench {

/// Flat `key = value` configuration with `[experiment]` sections. Lines starting
/// with '#' are comments. Values are free text up to the end of the line; lists
/// are comma separated.
class Config {
  public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text);

    bool has(const std::string& section, const std::string& key) const;
    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key, double fallback) const;
    int get_int(const std::string& section, const std::string& key, int fallback) const;
    std::vector<double> get_list(const std::string& section, const std::string& key,
                                 const std::vector<double>& fallback) const;
    std::vector<std::string> get_string_list(const std::string& section, const std::string& key,
                                             const std::vector<std::string>& fallback) const;

    /// Reject unknown sections and unknown keys per section.
    void validate(const std::map<std::string, std::set<std::string>>& schema) const;

  private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

}  // namespace rodsim::bench
