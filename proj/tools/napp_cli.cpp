#include "napp/cli/scenario.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int cmd_run(const std::string& path, const std::string& out_path, bool cross_check, std::optional<std::uint64_t> seed)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read scenario " << path << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    napp::Scenario S;
    try {
        S = napp::parse_scenario(text);
    } catch (const napp::ScenarioError& e) {
        std::cerr << "error: " << path << ": " << e.what() << "\n";
        return 2;
    }
    if (seed)
        S.seed = *seed;
    napp::RunOutcome r;
    try {
        r = napp::run_scenario(S, text, cross_check);
    } catch (const napp::CrossCheckError& e) {
        std::cerr << "error: oracle mismatch: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    const std::string dump = r.report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << dump;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 1;
        }
        out << dump;
        for (const auto& line : r.summary)
            std::cout << line << "\n";
        std::cout << "report written to " << out_path << "\n";
    }
    return r.all_checks_passed ? 0 : 1;
}

int cmd_check(std::uint64_t seed)
{
    bool ok = true;
    for (const auto& r : napp::run_property_suite(seed)) {
        std::cout << napp::format_result(r) << std::endl;
        ok = ok && r.passed;
    }
    std::cout << (ok ? "all properties pass" : "property failures") << " (seed " << seed << ")\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact non-archimedean pluripotential computations on P^n with monomial flag ideals"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Run a scenario file and write a report");
    std::string scenario, out;
    bool cross = false;
    std::uint64_t run_seed = 0;
    run->add_option("scenario", scenario, "Scenario JSON file")->required();
    run->add_option("--out", out, "Report path (default: report JSON on stdout)");
    run->add_flag("--cross-check", cross, "Compute every intersection number with both algorithms");
    auto* seed_opt = run->add_option("--seed", run_seed, "Override the scenario seed");

    auto* check = app.add_subcommand("check", "Run the randomized property suite");
    std::uint64_t check_seed = 1;
    check->add_option("--seed", check_seed, "Suite seed");

    auto* demo = app.add_subcommand("demo", "Print a golden scenario");
    std::string which;
    demo->add_option("which", which, "p1 or p2")->required()->check(CLI::IsMember({"p1", "p2"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*run)
        return cmd_run(scenario, out, cross,
                       seed_opt->count() ? std::optional<std::uint64_t>(run_seed) : std::nullopt);
    if (*check)
        return cmd_check(check_seed);
    std::cout << napp::demo_scenario(which);
    return 0;
}
