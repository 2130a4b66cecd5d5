// One PASS/FAIL line per acceptance criterion.
// usage: napp_acceptance <path to napp executable> <demos directory>

#include "napp/cli/scenario.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <unistd.h>

using namespace napp;

namespace {

// Wall-clock limits in seconds.
constexpr double p1_limit = 1.0;
constexpr double p2_limit = 5.0;
constexpr double check_limit = 60.0;
constexpr std::uint64_t suite_seed = 1;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Line {
    int id;
    std::string title;
    bool passed;
    std::string detail;
};

std::vector<Line> lines;

void report(int id, const std::string& title, bool passed, const std::string& detail)
{
    lines.push_back({id, title, passed, detail});
    std::cout << (passed ? "PASS" : "FAIL") << " [" << id << "] " << title << ": " << detail << std::endl;
}

// Collects mismatches as "name=got (want w)".
struct Expect {
    std::vector<std::string> bad;
    void eq(const std::string& name, const Rational& got, const Rational& want)
    {
        if (got != want)
            bad.push_back(name + "=" + to_string(got) + " (want " + to_string(want) + ")");
    }
    void truth(const std::string& name, bool ok)
    {
        if (!ok)
            bad.push_back(name);
    }
    std::string str() const
    {
        std::string s;
        for (const auto& b : bad)
            s += (s.empty() ? "" : "; ") + b;
        return s;
    }
};

FlagIdeal golden_ideal(int n)
{
    std::vector<IVec> gens;
    for (int i = 0; i < n; ++i) {
        IVec e(n, 0);
        e[i] = 1;
        gens.push_back(e);
    }
    return FlagIdeal(n, 0, {{0, MonomialIdeal(n, gens)}, {1, MonomialIdeal::unit(n)}});
}

// Every number of the golden suite with both intersection algorithms compared
// on each product (a mismatch throws).
void golden(int id, int n, double limit, const Rational& E, const Rational& J, const Rational& H,
            const Rational& sbar, const Rational& M, std::optional<Rational> Ezeta, std::optional<Rational> norm,
            std::optional<Rational> ratio)
{
    std::ostringstream title;
    title << "P" << n << " golden suite";
    try {
        auto t0 = Clock::now();
        auto S = KahlerSetup::projective(n, 1, IntersectMode::cross_check);
        auto phi = phi_of_flag(golden_ideal(n));
        EnergyReport r = mabuchi(S, phi);
        double t = since(t0);
        Expect x;
        x.eq("mass", r.mass, 1);
        QVec vE(n, 1);
        for (const auto& a : r.ma.atoms) {
            if (a.v.base.values() == vE)
                x.eq("c_E", a.mass, 1);
            else
                x.eq("mass off v_E", a.mass, 0);
        }
        x.eq("E", r.E, E);
        x.eq("J", r.J, J);
        x.eq("H", r.H, H);
        x.eq("sbar", r.sbar, sbar);
        x.eq("M", r.M, M);
        if (Ezeta)
            x.eq("E_zeta", r.E_twisted, *Ezeta);
        if (norm) {
            x.truth("norm is rational", r.seminorm.exact.has_value());
            if (r.seminorm.exact)
                x.eq("norm", *r.seminorm.exact, *norm);
        }
        if (ratio) {
            x.truth("J > 0", r.delta_ratio.has_value());
            if (r.delta_ratio)
                x.eq("M/J", *r.delta_ratio, *ratio);
        }
        std::ostringstream d;
        d << "E=" << to_string(r.E) << " J=" << to_string(r.J) << " H=" << to_string(r.H) << " M=" << to_string(r.M)
          << ", both algorithms agree, " << std::fixed;
        d.precision(3);
        d << t << " s (limit " << limit << " s)";
        x.truth("time " + std::to_string(t) + " s over limit", t < limit);
        report(id, title.str(), x.bad.empty(), x.bad.empty() ? d.str() : x.str());
    } catch (const std::exception& e) {
        report(id, title.str(), false, std::string("exception: ") + e.what());
    }
}

// Each entry: a suite result and the minimum number of cases it must cover.
void property(int id, const std::string& title, const std::vector<std::pair<const PropertyResult*, long>>& rs)
{
    bool ok = true;
    std::string d;
    for (const auto& [r, min_cases] : rs) {
        ok = ok && r->passed && r->cases >= min_cases;
        d += (d.empty() ? "" : "; ") + r->name + " " + std::to_string(r->cases) + " cases";
        if (!r->passed)
            d += " FAILED: " + r->detail;
        else if (r->cases < min_cases)
            d += " (needs " + std::to_string(min_cases) + ")";
    }
    report(id, title, ok, d);
}

int run_command(const std::string& cmd) { return std::system((cmd + " > /dev/null 2>&1").c_str()); }

std::string results_section(const std::filesystem::path& p)
{
    std::ifstream in(p);
    json j = json::parse(in);
    return j.at("results").dump();
}

} // namespace

int main(int argc, char** argv)
{
    if (argc != 3) {
        std::cerr << "usage: napp_acceptance <napp executable> <demos directory>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::filesystem::path demos = argv[2];

    golden(1, 1, p1_limit, make_rational(-1, 2), make_rational(1, 2), 2, 2, 1, Rational(0), Rational(1), Rational(2));
    golden(2, 2, p2_limit, make_rational(-1, 3), make_rational(2, 3), 3, 6, 1, std::nullopt, std::nullopt,
           make_rational(3, 2));

    auto suite = run_property_suite(suite_seed);
    auto find = [&](const std::string& name) -> const PropertyResult* {
        for (const auto& r : suite)
            if (r.name == name)
                return &r;
        static PropertyResult missing{"missing " + name, false, 0, "not run", 0};
        return &missing;
    };
    property(3, "MA mass one", {{find("ma_mass_one"), 50}});
    property(4, "Zariski NSD", {{find("zariski_nsd"), 25}});
    property(5, "Gauss round trip", {{find("gauss_round_trip"), 100}});
    property(6, "integral-closure invariance", {{find("integral_closure"), 100}});
    property(7, "sup over Rees valuations", {{find("sup_over_rees"), 25}});
    property(8, "energy-pairing algebra", {{find("energy_pairing_algebra"), 1}});
    property(9, "energy derivative and concavity", {{find("energy_derivative_concavity"), 1}});
    property(10, "log discrepancy", {{find("log_discrepancy"), 1}});
    property(11, "intersection oracle equivalence", {{find("intersection_oracle"), 50}, {find("stellar_invariance"), 1}});
    property(12, "retraction and dictionary", {{find("retraction_dictionary"), 1}});

    {
        auto tmp = std::filesystem::temp_directory_path() / ("napp_acceptance_" + std::to_string(::getpid()));
        std::filesystem::create_directories(tmp);
        Expect x;
        for (const char* demo : {"p1.json", "p2.json"}) {
            auto a = tmp / (std::string("a_") + demo), b = tmp / (std::string("b_") + demo);
            const std::string base = cli + " run " + (demos / demo).string() + " --out ";
            int ea = run_command(base + a.string()), eb = run_command(base + b.string());
            x.truth(std::string(demo) + " run exit codes", ea == 0 && eb == 0);
            if (ea == 0 && eb == 0)
                x.truth(std::string(demo) + " results differ", results_section(a) == results_section(b));
        }
        auto t0 = Clock::now();
        int ec = run_command(cli + " check --seed " + std::to_string(suite_seed));
        double t = since(t0);
        x.truth("check exit code " + std::to_string(ec), ec == 0);
        x.truth("check took " + std::to_string(t) + " s", t < check_limit);
        std::filesystem::remove_all(tmp);
        std::ostringstream d;
        d << "p1/p2 results byte-identical across runs, check suite " << std::fixed;
        d.precision(1);
        d << t << " s (limit " << check_limit << " s)";
        report(13, "determinism and check time", x.bad.empty(), x.bad.empty() ? d.str() : x.str());
    }

    int failed = 0;
    for (const auto& l : lines)
        failed += !l.passed;
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all 13 criteria pass"))
              << std::endl;
    return failed ? 1 : 0;
}
