#ifndef VACUUMPROBE_SCENARIOS_HPP
#define VACUUMPROBE_SCENARIOS_HPP

// Scenario execution behind the CLI: each run validates its config,
// delegates every number to the library modules, writes the artifacts
// plus a JSON run manifest, and returns the manifest. The CLI performs
// no arithmetic beyond formatting.

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

namespace vacuumprobe::cli {

inline constexpr const char* tool_name = "vacuumprobe";
inline constexpr const char* tool_version = "0.1.0";

struct RunOptions {
    std::filesystem::path out_dir = ".";
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

nlohmann::json run_table1(const nlohmann::json& cfg, const RunOptions& opt);
nlohmann::json run_image(const nlohmann::json& cfg, const RunOptions& opt);
nlohmann::json run_fit(const nlohmann::json& cfg, const RunOptions& opt);
nlohmann::json run_sensitivity(const nlohmann::json& cfg, const RunOptions& opt);
nlohmann::json run_kinematics(const nlohmann::json& cfg, const RunOptions& opt);

// Dispatch by scenario name; throws config::ValidationError for unknown
// scenarios or invalid configs.
nlohmann::json run_scenario(const std::string& name, const nlohmann::json& cfg,
                            const RunOptions& opt);

} // namespace vacuumprobe::cli

#endif
