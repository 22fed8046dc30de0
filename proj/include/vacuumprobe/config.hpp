#ifndef VACUUMPROBE_CONFIG_HPP
#define VACUUMPROBE_CONFIG_HPP

// Scenario configuration: TOML for hand-edited files, JSON accepted as
// an alternate. The TOML reader covers the subset the schema needs
// ([table] headers, key = value with strings, numbers, booleans and flat
// arrays, # comments); both formats land in one json tree.

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace vacuumprobe::config {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json parse_toml(const std::string& text);

// Dispatches on the file extension: .json -> JSON, everything else TOML.
nlohmann::json load_config_file(const std::filesystem::path& path);

// Typed field access with path-style diagnostics ("sensitivity.m_eV").
double require_number(const nlohmann::json& node, const std::string& path);
double number_or(const nlohmann::json& node, const std::string& path, double fallback);
std::string require_string(const nlohmann::json& node, const std::string& path);
std::string string_or(const nlohmann::json& node, const std::string& path,
                      const std::string& fallback);
bool bool_or(const nlohmann::json& node, const std::string& path, bool fallback);
int int_or(const nlohmann::json& node, const std::string& path, int fallback);
std::vector<double> require_number_list(const nlohmann::json& node, const std::string& path);

const nlohmann::json* find_path(const nlohmann::json& root, const std::string& path);

} // namespace vacuumprobe::config

#endif
