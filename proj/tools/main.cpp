// Command-line front end: scenario selection, config ingestion, seeded
// reproducible runs. Exit codes: 0 ok, 2 validation, 3 domain error,
// 4 I/O error.

#include "vacuumprobe/config.hpp"
#include "vacuumprobe/report_io.hpp"
#include "vacuumprobe/scenarios.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <thread>

namespace {

unsigned parse_threads(const std::string& str) {
    if (str == "auto") {
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : hw;
    }
    const long v = std::strtol(str.c_str(), nullptr, 10);
    if (v < 1)
        throw vacuumprobe::config::ValidationError("--threads must be a positive count or 'auto'");
    return static_cast<unsigned>(v);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vacuum nonlinearity probes: phase-contrast focal-plane imaging and "
                 "quasi-parallel resonance sensitivity"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    std::string threads_str = "1";

    app.add_option("--config", config_path, "TOML (or JSON) scenario configuration");
    app.add_option("--out", out_dir, "output directory for artifacts");
    app.add_option("--seed", seed, "seed for synthetic perturbations");
    app.add_option("--threads", threads_str, "worker threads (count or 'auto')");

    for (const char* name : {"table1", "image", "fit", "sensitivity", "kinematics"})
        app.add_subcommand(name)->fallthrough();

    CLI11_PARSE(app, argc, argv);

    namespace vp = vacuumprobe;
    try {
        vp::cli::RunOptions opt;
        opt.out_dir = out_dir;
        opt.seed = seed;
        if (const char* env = std::getenv("VACUUMPROBE_THREADS"); env && threads_str == "1")
            threads_str = env;
        opt.threads = parse_threads(threads_str);

        nlohmann::json config = nlohmann::json::object();
        if (!config_path.empty())
            config = vp::config::load_config_file(config_path);

        const std::string scenario = app.get_subcommands().front()->get_name();
        const nlohmann::json manifest = vp::cli::run_scenario(scenario, config, opt);
        std::cout << scenario << ": wrote " << manifest["artifacts"].size() << " artifact(s) to "
                  << out_dir << "\n";
        return 0;
    } catch (const vp::config::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const vp::io::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
