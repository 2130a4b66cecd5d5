#pragma once

#include "napp/cli/property_suite.hpp"
#include "napp/tropics/gelfand.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace napp {

inline constexpr const char* tool_version = "0.1.0";

// Malformed or invalid scenario; exit code 2.
struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

struct PLSpec {
    std::string plus, minus;
    long long m = 1, m_minus = 1;
    Rational constant = 0;
};

struct EvalPoint {
    int chart = 0;
    std::vector<TropicalValue> w;
};

struct Request {
    std::string type;
    std::string name;
    std::optional<PLSpec> phi;
    std::vector<PLSpec> family;
    std::vector<EvalPoint> points;
    std::vector<std::string> ideals;
};

struct Scenario {
    int n = 1;
    std::vector<std::string> charts;
    Rational alpha = 1;
    std::map<std::string, FlagIdeal> flag_ideals;
    std::vector<Request> requests;
    std::uint64_t seed = 0;
};

namespace detail {

inline std::string line_col(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] inline void invalid(const std::string& field, const std::string& msg)
{
    throw ScenarioError(field + ": " + msg);
}

inline Rational rational_field(const json& j, const std::string& field)
{
    if (j.is_number_integer())
        return make_rational(j.get<long long>());
    if (!j.is_string())
        invalid(field, "expected an exact rational string \"p/q\" or an integer");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
        invalid(field, "not a rational: \"" + j.get<std::string>() + "\"");
    }
}

inline long long int_field(const json& j, const std::string& field)
{
    if (!j.is_number_integer())
        invalid(field, "expected an integer");
    return j.get<long long>();
}

inline FlagIdeal parse_flag_ideal(const json& j, int n, const std::string& field)
{
    if (!j.is_object())
        invalid(field, "expected an object with \"chart\" and \"terms\"");
    int chart = 0;
    if (j.contains("chart"))
        chart = static_cast<int>(int_field(j["chart"], field + ".chart"));
    if (chart < -1 || chart > n)
        invalid(field + ".chart", "chart out of range (use 0..n, or -1 for homogeneous)");
    const int nv = chart < 0 ? n + 1 : n;
    if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].empty())
        invalid(field + ".terms", "expected a nonempty list of [lambda, [[exponents], ...]]");
    std::vector<std::pair<long long, MonomialIdeal>> terms;
    for (std::size_t k = 0; k < j["terms"].size(); ++k) {
        const std::string tf = field + ".terms[" + std::to_string(k) + "]";
        const json& t = j["terms"][k];
        if (!t.is_array() || t.size() != 2 || !t[1].is_array())
            invalid(tf, "expected [lambda, [[exponents], ...]]");
        long long lambda = int_field(t[0], tf + "[0]");
        std::vector<IVec> gens;
        for (std::size_t g = 0; g < t[1].size(); ++g) {
            const std::string gf = tf + "[1][" + std::to_string(g) + "]";
            const json& e = t[1][g];
            if (!e.is_array() || static_cast<int>(e.size()) != nv)
                invalid(gf, "expected " + std::to_string(nv) + " exponents");
            IVec v;
            for (const auto& x : e) {
                long long a = int_field(x, gf);
                if (a < 0)
                    invalid(gf, "negative exponent");
                v.push_back(a);
            }
            gens.push_back(v);
        }
        terms.emplace_back(lambda, MonomialIdeal(nv, gens, chart));
    }
    try {
        return FlagIdeal(n, chart, terms);
    } catch (const std::invalid_argument& e) {
        invalid(field, e.what());
    }
}

inline PLSpec parse_pl(const json& j, const Scenario& S, const std::string& field)
{
    auto known = [&](const std::string& name, const std::string& f) {
        if (!S.flag_ideals.count(name))
            invalid(f, "unknown flag ideal \"" + name + "\"");
    };
    PLSpec p;
    if (j.is_string()) {
        p.plus = j.get<std::string>();
        known(p.plus, field);
        return p;
    }
    if (!j.is_object())
        invalid(field, "expected a flag-ideal name or {plus, m, minus, m_minus, constant}");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "plus" && it.key() != "m" && it.key() != "minus" && it.key() != "m_minus" &&
            it.key() != "constant")
            invalid(field + "." + it.key(), "unknown field");
    if (j.contains("plus")) {
        if (!j["plus"].is_string())
            invalid(field + ".plus", "expected a flag-ideal name");
        p.plus = j["plus"].get<std::string>();
        known(p.plus, field + ".plus");
    }
    if (j.contains("minus")) {
        if (!j["minus"].is_string())
            invalid(field + ".minus", "expected a flag-ideal name");
        p.minus = j["minus"].get<std::string>();
        known(p.minus, field + ".minus");
    }
    if (j.contains("m"))
        p.m = int_field(j["m"], field + ".m");
    if (j.contains("m_minus"))
        p.m_minus = int_field(j["m_minus"], field + ".m_minus");
    if (p.m <= 0)
        invalid(field + ".m", "must be a positive integer");
    if (p.m_minus <= 0)
        invalid(field + ".m_minus", "must be a positive integer");
    if (j.contains("constant"))
        p.constant = rational_field(j["constant"], field + ".constant");
    return p;
}

inline EvalPoint parse_point(const json& j, int n, const std::string& field)
{
    if (!j.is_object() || !j.contains("w") || !j["w"].is_array())
        invalid(field, "expected {\"chart\": j, \"w\": [...]}");
    EvalPoint p;
    if (j.contains("chart"))
        p.chart = static_cast<int>(int_field(j["chart"], field + ".chart"));
    if (p.chart < 0 || p.chart > n)
        invalid(field + ".chart", "chart out of range");
    if (static_cast<int>(j["w"].size()) != n)
        invalid(field + ".w", "expected " + std::to_string(n) + " weights");
    for (std::size_t k = 0; k < j["w"].size(); ++k) {
        Rational r = rational_field(j["w"][k], field + ".w[" + std::to_string(k) + "]");
        if (r < 0)
            invalid(field + ".w[" + std::to_string(k) + "]", "weights must be nonnegative");
        p.w.emplace_back(r);
    }
    return p;
}

inline const std::vector<std::string>& request_types()
{
    static const std::vector<std::string> t{"eval", "dualcomplex", "ma", "energy", "mabuchi", "kstab", "check"};
    return t;
}

} // namespace detail

inline Scenario parse_scenario(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // Keep nlohmann's description, with our own position.
        std::string what = e.what();
        auto pos = what.find("parse error");
        if (pos != std::string::npos) {
            auto colon = what.find(": ", pos);
            what = colon == std::string::npos ? what.substr(pos) : what.substr(colon + 2);
        }
        throw ScenarioError("parse error at " + detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + what);
    }
    if (!j.is_object())
        throw ScenarioError("scenario: expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "base" && it.key() != "alpha" && it.key() != "flag_ideals" && it.key() != "requests" &&
            it.key() != "seed")
            detail::invalid(it.key(), "unknown field");

    Scenario S;
    if (!j.contains("base") || !j["base"].is_object() || !j["base"].contains("n"))
        detail::invalid("base.n", "missing");
    long long n = detail::int_field(j["base"]["n"], "base.n");
    if (n < 1 || n > 3)
        detail::invalid("base.n", "n out of supported range (1..3), got " + std::to_string(n));
    S.n = static_cast<int>(n);
    if (j["base"].contains("charts")) {
        const json& c = j["base"]["charts"];
        if (!c.is_array() || static_cast<int>(c.size()) != S.n + 1)
            detail::invalid("base.charts", "expected n + 1 chart labels");
        for (const auto& x : c) {
            if (!x.is_string())
                detail::invalid("base.charts", "labels must be strings");
            S.charts.push_back(x.get<std::string>());
        }
    } else {
        for (int i = 0; i <= S.n; ++i)
            S.charts.push_back("x" + std::to_string(i));
    }

    if (j.contains("alpha"))
        S.alpha = detail::rational_field(j["alpha"], "alpha");
    if (S.alpha <= 0)
        detail::invalid("alpha", "must be positive");

    if (j.contains("flag_ideals")) {
        if (!j["flag_ideals"].is_object())
            detail::invalid("flag_ideals", "expected an object of named flag ideals");
        for (auto it = j["flag_ideals"].begin(); it != j["flag_ideals"].end(); ++it)
            S.flag_ideals.emplace(it.key(),
                                  detail::parse_flag_ideal(it.value(), S.n, "flag_ideals." + it.key()));
    }

    if (j.contains("seed"))
        S.seed = static_cast<std::uint64_t>(detail::int_field(j["seed"], "seed"));

    if (!j.contains("requests") || !j["requests"].is_array() || j["requests"].empty())
        detail::invalid("requests", "at least one request is required");
    std::set<std::string> names;
    for (std::size_t k = 0; k < j["requests"].size(); ++k) {
        const std::string f = "requests[" + std::to_string(k) + "]";
        const json& r = j["requests"][k];
        Request q;
        if (r.is_string()) {
            q.type = r.get<std::string>();
        } else if (r.is_object() && r.contains("type") && r["type"].is_string()) {
            q.type = r["type"].get<std::string>();
            for (auto it = r.begin(); it != r.end(); ++it)
                if (it.key() != "type" && it.key() != "name" && it.key() != "phi" && it.key() != "family" &&
                    it.key() != "points" && it.key() != "ideals")
                    detail::invalid(f + "." + it.key(), "unknown field");
            if (r.contains("name")) {
                if (!r["name"].is_string())
                    detail::invalid(f + ".name", "expected a string");
                q.name = r["name"].get<std::string>();
            }
            if (r.contains("phi"))
                q.phi = detail::parse_pl(r["phi"], S, f + ".phi");
            if (r.contains("family")) {
                if (!r["family"].is_array())
                    detail::invalid(f + ".family", "expected a list of PL functions");
                for (std::size_t i = 0; i < r["family"].size(); ++i)
                    q.family.push_back(
                        detail::parse_pl(r["family"][i], S, f + ".family[" + std::to_string(i) + "]"));
            }
            if (r.contains("points")) {
                if (!r["points"].is_array())
                    detail::invalid(f + ".points", "expected a list of points");
                for (std::size_t i = 0; i < r["points"].size(); ++i)
                    q.points.push_back(
                        detail::parse_point(r["points"][i], S.n, f + ".points[" + std::to_string(i) + "]"));
            }
            if (r.contains("ideals")) {
                if (!r["ideals"].is_array())
                    detail::invalid(f + ".ideals", "expected a list of flag-ideal names");
                for (const auto& x : r["ideals"]) {
                    if (!x.is_string() || !S.flag_ideals.count(x.get<std::string>()))
                        detail::invalid(f + ".ideals", "unknown flag ideal " + x.dump());
                    q.ideals.push_back(x.get<std::string>());
                }
            }
        } else {
            detail::invalid(f, "expected a request type string or an object with \"type\"");
        }
        const auto& types = detail::request_types();
        if (std::find(types.begin(), types.end(), q.type) == types.end())
            detail::invalid(f + ".type", "unknown request type \"" + q.type + "\"");
        if (q.name.empty()) {
            std::ostringstream os;
            os.width(2);
            os.fill('0');
            os << k;
            q.name = os.str() + "_" + q.type;
        }
        if (!names.insert(q.name).second)
            detail::invalid(f + ".name", "duplicate request name \"" + q.name + "\"");
        bool needs_phi = q.type == "eval" || q.type == "ma" || q.type == "energy" || q.type == "mabuchi";
        if (needs_phi && !q.phi) {
            if (S.flag_ideals.size() != 1)
                detail::invalid(f + ".phi", "required unless the scenario has exactly one flag ideal");
            q.phi = PLSpec{S.flag_ideals.begin()->first, "", 1, 1, 0};
        }
        if (q.type == "eval" && q.points.empty())
            detail::invalid(f + ".points", "eval needs at least one point");
        if (q.type == "kstab" && q.family.empty()) {
            if (S.flag_ideals.empty())
                detail::invalid(f + ".family", "kstab needs a family or at least one flag ideal");
            for (const auto& [name, a] : S.flag_ideals)
                q.family.push_back(PLSpec{name, "", 1, 1, 0});
        }
        S.requests.push_back(q);
    }
    return S;
}

namespace detail {

inline PLFunction build_pl(const Scenario& S, const PLSpec& p)
{
    PLFunction f = pl_zero(S.n);
    if (!p.plus.empty())
        f.plus = PLPart{S.flag_ideals.at(p.plus), p.m};
    if (!p.minus.empty())
        f.minus = PLPart{S.flag_ideals.at(p.minus), p.m_minus};
    f.constant = p.constant;
    return f;
}

inline json weight_json(const Weight& v)
{
    json w = json::array();
    for (const auto& x : v.w)
        w.push_back(x.str());
    return json{{"chart", v.chart}, {"w", w}};
}

inline json measure_json(const ToricTestConfig& tc, const MAMeasure& mu)
{
    json atoms = json::array();
    for (const auto& a : mu.atoms) {
        if (a.mass == 0)
            continue;
        atoms.push_back(json{{"divisor", "E" + std::to_string(a.ray)},
                             {"b", tc.b[a.ray]},
                             {"valuation", weight_json(a.v.base)},
                             {"mass", to_string(a.mass)}});
    }
    return json{{"atoms", atoms}, {"total_mass", to_string(mu.total_mass())}};
}

inline bool relatively_nef(const KahlerSetup& K, const ToricTestConfig& tc, const PLFunction& phi)
{
    return is_relatively_nef(class_of(tc, K.alpha, phi), tc);
}

inline json run_request(const Scenario& S, const Request& q, IntersectMode mode)
{
    const KahlerSetup K = KahlerSetup::projective(S.n, S.alpha, mode);
    if (q.type == "eval") {
        PLFunction f = build_pl(S, *q.phi);
        json vals = json::array();
        for (const auto& p : q.points) {
            Weight v;
            v.chart = p.chart;
            v.w = p.w;
            vals.push_back(json{{"point", weight_json(v)}, {"value", to_string(gelfand_eval(v, f))}});
        }
        return json{{"type", q.type}, {"phi", f.str()}, {"values", vals}};
    }
    if (q.type == "dualcomplex") {
        std::vector<FlagIdeal> ideals;
        if (q.ideals.empty())
            for (const auto& [name, a] : S.flag_ideals)
                ideals.push_back(a);
        else
            for (const auto& name : q.ideals)
                ideals.push_back(S.flag_ideals.at(name));
        auto tc = build_testconfig(S.n, ideals);
        DualComplex dc = dual_complex(tc);
        json verts = json::array(), faces = json::array();
        for (const auto& v : dc.vertices) {
            json N = json::array();
            for (long long x : tc.fan.rays[v.ray])
                N.push_back(x);
            verts.push_back(json{{"divisor", "E" + std::to_string(v.ray)},
                                 {"ray", N},
                                 {"b", v.b},
                                 {"valuation", weight_json(v.weight)},
                                 {"log_discrepancy", to_string(log_discrepancy_vertex(tc, v.ray))}});
        }
        for (const auto& f : dc.faces) {
            json face = json::array();
            for (int r : f)
                face.push_back("E" + std::to_string(r));
            faces.push_back(face);
        }
        return json{{"type", q.type},
                    {"rays", tc.fan.rays.size()},
                    {"cones", tc.fan.cones.size()},
                    {"vertices", verts},
                    {"faces", faces}};
    }
    if (q.type == "ma") {
        PLFunction phi = build_pl(S, *q.phi);
        auto tc = common_testconfig(S.n, {phi});
        return json{{"type", q.type},
                    {"phi", phi.str()},
                    {"relatively_nef", relatively_nef(K, tc, phi)},
                    {"measure", measure_json(tc, ma_measure(K, tc, phi))}};
    }
    if (q.type == "energy") {
        PLFunction phi = build_pl(S, *q.phi);
        auto tc = common_testconfig(S.n, {phi});
        EnergyReport r = mabuchi(K, phi);
        return json{{"type", q.type},
                    {"phi", phi.str()},
                    {"relatively_nef", relatively_nef(K, tc, phi)},
                    {"E", to_string(r.E)},
                    {"E_zeta", to_string(r.E_twisted)},
                    {"I", to_string(r.I)},
                    {"J", to_string(r.J)},
                    {"mass", to_string(r.mass)}};
    }
    if (q.type == "mabuchi") {
        PLFunction phi = build_pl(S, *q.phi);
        auto tc = common_testconfig(S.n, {phi});
        EnergyReport r = mabuchi(K, phi);
        json norm{{"squared", to_string(r.seminorm.squared)}, {"value", r.seminorm.str()}};
        return json{{"type", q.type},
                    {"phi", phi.str()},
                    {"relatively_nef", relatively_nef(K, tc, phi)},
                    {"E", to_string(r.E)},
                    {"E_zeta", to_string(r.E_twisted)},
                    {"I", to_string(r.I)},
                    {"J", to_string(r.J)},
                    {"H", to_string(r.H)},
                    {"M", to_string(r.M)},
                    {"H_X", to_string(r.H_X)},
                    {"M_X", to_string(r.M_X)},
                    {"sbar", to_string(r.sbar)},
                    {"mass", to_string(r.mass)},
                    {"norm", norm},
                    {"M_over_J", r.delta_str()},
                    {"measure", measure_json(tc, r.ma)}};
    }
    if (q.type == "kstab") {
        std::vector<PLFunction> fam;
        json members = json::array();
        for (const auto& p : q.family) {
            fam.push_back(build_pl(S, p));
            members.push_back(fam.back().str());
        }
        CoercivityResult c = coercivity_scan(K, fam);
        return json{{"type", q.type},
                    {"family", members},
                    {"delta", to_string(c.delta)},
                    {"witness", c.witness},
                    {"destabilizer_found", c.destabilizer_found},
                    {"warnings", c.warnings}};
    }
    // check
    json props = json::object();
    bool all = true;
    for (const auto& r : run_property_suite(S.seed)) {
        props[r.name] = json{{"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}};
        all = all && r.passed;
    }
    return json{{"type", q.type}, {"seed", S.seed}, {"all_passed", all}, {"properties", props}};
}

inline std::string summary_line(const std::string& name, const json& r)
{
    std::ostringstream os;
    os << name << ": ";
    const std::string t = r["type"];
    if (t == "mabuchi")
        os << "E=" << r["E"].get<std::string>() << " J=" << r["J"].get<std::string>()
           << " H=" << r["H"].get<std::string>() << " M=" << r["M"].get<std::string>()
           << " M/J=" << r["M_over_J"].get<std::string>();
    else if (t == "energy")
        os << "E=" << r["E"].get<std::string>() << " I=" << r["I"].get<std::string>()
           << " J=" << r["J"].get<std::string>();
    else if (t == "ma")
        os << r["measure"]["atoms"].size() << " atoms, mass " << r["measure"]["total_mass"].get<std::string>();
    else if (t == "kstab")
        os << "delta=" << r["delta"].get<std::string>() << " at member " << r["witness"].get<std::size_t>();
    else if (t == "dualcomplex")
        os << r["vertices"].size() << " vertices, " << r["faces"].size() << " faces";
    else if (t == "eval")
        os << r["values"].size() << " values";
    else
        os << (r["all_passed"].get<bool>() ? "all properties pass" : "PROPERTY FAILURE");
    return os.str();
}

} // namespace detail

inline std::string fnv1a_hex(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

struct RunOutcome {
    json report;
    std::vector<std::string> summary;
    bool all_checks_passed = true;
};

// Requests run concurrently; results are assembled by request name.
inline RunOutcome run_scenario(const Scenario& S, const std::string& scenario_text, bool cross_check)
{
    auto t0 = std::chrono::steady_clock::now();
    const IntersectMode mode = cross_check ? IntersectMode::cross_check : IntersectMode::recursion;
    std::vector<std::future<json>> jobs;
    for (const auto& q : S.requests)
        jobs.push_back(std::async(std::launch::async, [&S, &q, mode] { return detail::run_request(S, q, mode); }));
    RunOutcome out;
    json results = json::object();
    std::exception_ptr first_error;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        try {
            json r = jobs[k].get();
            out.summary.push_back(detail::summary_line(S.requests[k].name, r));
            if (r["type"] == "check" && !r["all_passed"].get<bool>())
                out.all_checks_passed = false;
            results[S.requests[k].name] = std::move(r);
        } catch (...) {
            if (!first_error)
                first_error = std::current_exception();
        }
    }
    if (first_error)
        std::rethrow_exception(first_error);
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.report = json{{"results", results},
                      {"manifest",
                       {{"tool", "napp"},
                        {"version", tool_version},
                        {"scenario_hash", "fnv1a64:" + fnv1a_hex(scenario_text)},
                        {"seed", S.seed},
                        {"cross_check", cross_check},
                        {"wall_time_seconds", wall}}}};
    return out;
}

inline std::string demo_scenario(const std::string& which)
{
    if (which == "p1")
        return R"({
  "base": {"n": 1, "charts": ["x0", "x1"]},
  "alpha": "1",
  "flag_ideals": {
    "a": {"chart": 0, "terms": [[0, [[1]]], [1, [[0]]]]}
  },
  "requests": [
    {"type": "mabuchi", "name": "golden", "phi": "a"},
    {"type": "dualcomplex", "name": "complex"}
  ],
  "seed": 1
}
)";
    if (which == "p2")
        return R"({
  "base": {"n": 2, "charts": ["x0", "x1", "x2"]},
  "alpha": "1",
  "flag_ideals": {
    "a": {"chart": 0, "terms": [[0, [[1, 0], [0, 1]]], [1, [[0, 0]]]]}
  },
  "requests": [
    {"type": "mabuchi", "name": "golden", "phi": "a"},
    {"type": "dualcomplex", "name": "complex"}
  ],
  "seed": 1
}
)";
    throw ScenarioError("demo: expected p1 or p2");
}

} // namespace napp
