#include "affectus/simulation.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>
#include <ostream>
#include <set>

#include "affectus/emotion.hpp"
#include "affectus/error.hpp"
#include "affectus/groups.hpp"
#include "affectus/prng.hpp"

namespace affectus {

using json = nlohmann::json;

double ScenarioConfig::k(const std::string& from, const std::string& to) const {
    if (from == to) return 1.0;
    auto it = suggestibility.find({from, to});
    return it == suggestibility.end() ? default_suggestibility : it->second;
}

ContactResult contact(double r_L, double r_j, double k_jL, double k_Lj) {
    require(k_jL > 0.0, "k_jL", "suggestibility must be positive");
    require(k_Lj > 0.0, "k_Lj", "suggestibility must be positive");
    ContactResult c{r_L, r_j, Agitator::none};
    bool j_wins = k_jL * std::abs(r_j) > std::abs(r_L);
    bool L_wins = k_Lj * std::abs(r_L) > std::abs(r_j);
    if (j_wins) c.r_eff_L = k_jL * r_j;
    if (L_wins) c.r_eff_j = k_Lj * r_L;
    if (j_wins && L_wins)
        c.agitator = Agitator::both;
    else if (j_wins)
        c.agitator = Agitator::second;
    else if (L_wins)
        c.agitator = Agitator::first;
    return c;
}

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& message) {
    fail(ErrorCode::validation, field, message);
}

const json& member(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) invalid(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) invalid(path + "." + key, "missing field");
    return *it;
}

double number(const json& v, const std::string& path) {
    if (!v.is_number()) invalid(path, "expected a number");
    double x = v.get<double>();
    if (!std::isfinite(x)) invalid(path, "expected a finite number");
    return x;
}

}  // namespace

void validate(const ScenarioConfig& c) {
    std::set<std::string> ids;
    for (std::size_t i = 0; i < c.robots.size(); ++i) {
        const RobotProfile& r = c.robots[i];
        std::string p = "robots[" + std::to_string(i) + "]";
        if (r.id.empty()) invalid(p + ".id", "id must be non-empty");
        if (!ids.insert(r.id).second) invalid(p + ".id", "duplicate robot id");
        if (!(r.theta >= 0.0 && r.theta <= 1.0)) invalid(p + ".theta", "theta must lie in [0, 1]");
        if (!std::isfinite(r.R0)) invalid(p + ".R0", "R0 must be finite");
    }
    if (c.robots.size() < 2) invalid("robots", "need at least two robots");
    if (!(c.default_suggestibility > 0.0))
        invalid("default_suggestibility", "suggestibility must be positive");
    for (const auto& [key, k] : c.suggestibility) {
        std::string p = "suggestibility[" + key.first + "->" + key.second + "]";
        if (!ids.count(key.first) || !ids.count(key.second)) invalid(p, "unknown robot id");
        if (!(k > 0.0)) invalid(p + ".k", "suggestibility must be positive");
        if (key.first == key.second && k != 1.0) invalid(p + ".k", "self suggestibility is fixed at 1");
    }
    if (c.sim.ticks < 1) invalid("sim.ticks", "ticks must be at least 1");
    if (!(c.sim.r_lo > 0.0)) invalid("sim.r_magnitude[0]", "magnitudes must be positive");
    if (!(c.sim.r_hi >= c.sim.r_lo)) invalid("sim.r_magnitude[1]", "upper magnitude below lower");
    if (!(c.sim.conflict_epsilon > 0.0)) invalid("sim.conflict_epsilon", "epsilon must be positive");
}

ScenarioConfig parse_scenario(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        invalid("$", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) invalid("$", "scenario must be a JSON object");
    if (doc.contains("schema") && doc["schema"] != 1) invalid("schema", "unsupported schema version");

    ScenarioConfig c;
    const json& robots = member(doc, "robots", "$");
    if (!robots.is_array()) invalid("robots", "expected an array");
    for (std::size_t i = 0; i < robots.size(); ++i) {
        std::string p = "robots[" + std::to_string(i) + "]";
        const json& r = robots[i];
        RobotProfile rp;
        const json& id = member(r, "id", p);
        if (!id.is_string()) invalid(p + ".id", "expected a string");
        rp.id = id.get<std::string>();
        rp.theta = number(member(r, "theta", p), p + ".theta");
        rp.R0 = r.contains("R0") ? number(r["R0"], p + ".R0") : 0.0;
        if (r.contains("goal")) {
            if (!r["goal"].is_array()) invalid(p + ".goal", "expected an array");
            std::vector<double> g;
            for (std::size_t k = 0; k < r["goal"].size(); ++k)
                g.push_back(number(r["goal"][k], p + ".goal[" + std::to_string(k) + "]"));
            rp.goal = std::move(g);
        }
        c.robots.push_back(std::move(rp));
    }

    if (doc.contains("default_suggestibility"))
        c.default_suggestibility = number(doc["default_suggestibility"], "default_suggestibility");
    if (doc.contains("suggestibility")) {
        const json& s = doc["suggestibility"];
        if (!s.is_array()) invalid("suggestibility", "expected an array");
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::string p = "suggestibility[" + std::to_string(i) + "]";
            const json& from = member(s[i], "from", p);
            const json& to = member(s[i], "to", p);
            if (!from.is_string()) invalid(p + ".from", "expected a string");
            if (!to.is_string()) invalid(p + ".to", "expected a string");
            c.suggestibility[{from.get<std::string>(), to.get<std::string>()}] =
                number(member(s[i], "k", p), p + ".k");
        }
    }

    const json& sim = member(doc, "sim", "$");
    const json& ticks = member(sim, "ticks", "sim");
    if (!ticks.is_number_integer()) invalid("sim.ticks", "expected an integer");
    c.sim.ticks = ticks.get<long>();
    const json& seed = member(sim, "seed", "sim");
    if (seed.is_number_unsigned())
        c.sim.seed = seed.get<std::uint64_t>();
    else if (seed.is_number_integer() && seed.get<std::int64_t>() >= 0)
        c.sim.seed = static_cast<std::uint64_t>(seed.get<std::int64_t>());
    else
        invalid("sim.seed", "expected a non-negative 64-bit integer");
    if (sim.contains("r_magnitude")) {
        const json& m = sim["r_magnitude"];
        if (!m.is_array() || m.size() != 2) invalid("sim.r_magnitude", "expected [lo, hi]");
        c.sim.r_lo = number(m[0], "sim.r_magnitude[0]");
        c.sim.r_hi = number(m[1], "sim.r_magnitude[1]");
    }
    if (sim.contains("conflict_epsilon"))
        c.sim.conflict_epsilon = number(sim["conflict_epsilon"], "sim.conflict_epsilon");
    if (sim.contains("leader_mode")) {
        const json& m = sim["leader_mode"];
        if (m == "none")
            c.sim.leader_mode = LeaderMode::none;
        else if (m == "fixed_leader")
            c.sim.leader_mode = LeaderMode::fixed_leader;
        else
            invalid("sim.leader_mode", "expected \"none\" or \"fixed_leader\"");
    }
    validate(c);
    return c;
}

namespace {

std::size_t argmax_abs(const std::vector<double>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (std::abs(v[i]) > std::abs(v[best])) best = i;
    return best;
}

double signed_emotion(double magnitude, double prior, Xorshift64Star& rng) {
    if (prior > 0.0) return magnitude;
    if (prior < 0.0) return -magnitude;
    return rng.coin() ? -magnitude : magnitude;
}

}  // namespace

SimResult run_scenario(const ScenarioConfig& config) {
    validate(config);
    const auto& robots = config.robots;
    std::size_t n = robots.size();
    Xorshift64Star rng(config.sim.seed);

    std::vector<double> R(n);
    for (std::size_t i = 0; i < n; ++i) R[i] = robots[i].R0;
    std::size_t leader = argmax_abs(R);

    SimResult res;
    res.events.reserve(static_cast<std::size_t>(config.sim.ticks));
    for (long tick = 1; tick <= config.sim.ticks; ++tick) {
        std::size_t a, b;
        if (config.sim.leader_mode == LeaderMode::fixed_leader) {
            a = leader;
            b = rng.below(n - 1);
            if (b >= a) ++b;
        } else {
            a = rng.below(n);
            b = rng.below(n - 1);
            if (b >= a) ++b;
            if (b < a) std::swap(a, b);
        }
        double m_a = rng.uniform(config.sim.r_lo, config.sim.r_hi);
        double m_b = rng.uniform(config.sim.r_lo, config.sim.r_hi);
        double r_a = signed_emotion(m_a, R[a], rng);
        double r_b = signed_emotion(m_b, R[b], rng);

        const std::string& id_a = robots[a].id;
        const std::string& id_b = robots[b].id;
        ContactResult c = contact(r_a, r_b, config.k(id_b, id_a), config.k(id_a, id_b));
        R[a] = education_step(c.r_eff_L, robots[a].theta, R[a]);
        R[b] = education_step(c.r_eff_j, robots[b].theta, R[b]);

        EventRecord e;
        e.tick = tick;
        e.robot_a = a;
        e.robot_b = b;
        e.r_a = r_a;
        e.r_b = r_b;
        e.r_eff_a = c.r_eff_L;
        e.r_eff_b = c.r_eff_j;
        if (c.agitator == Agitator::first || c.agitator == Agitator::both) e.agitators.push_back(a);
        if (c.agitator == Agitator::second || c.agitator == Agitator::both) e.agitators.push_back(b);
        e.R_after = R;
        e.sum_education = sum_education(R);
        e.conflict = confrontation_check(R, config.sim.conflict_epsilon).confrontation;
        if (e.conflict) res.summary.conflict_ticks.push_back(tick);
        res.events.push_back(std::move(e));
    }
    res.summary.final_educations = R;
    res.summary.final_leader = argmax_abs(R);
    res.summary.fellowship_value = fellowship_value(R);
    return res;
}

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

void write_events_csv(std::ostream& out, const ScenarioConfig& config, const SimResult& result) {
    const auto& robots = config.robots;
    out << "tick,robot_a,robot_b,r_a,r_b,r_eff_a,r_eff_b,agitator,sum_education,conflict";
    for (const auto& r : robots) out << ",R_" << r.id;
    out << '\n';
    for (const EventRecord& e : result.events) {
        out << e.tick << ',' << robots[e.robot_a].id << ',' << robots[e.robot_b].id << ','
            << format_double(e.r_a) << ',' << format_double(e.r_b) << ','
            << format_double(e.r_eff_a) << ',' << format_double(e.r_eff_b) << ',';
        for (std::size_t k = 0; k < e.agitators.size(); ++k)
            out << (k ? ";" : "") << robots[e.agitators[k]].id;
        out << ',' << format_double(e.sum_education) << ',' << (e.conflict ? 1 : 0);
        for (double R : e.R_after) out << ',' << format_double(R);
        out << '\n';
    }
}

std::string summary_json(const ScenarioConfig& config, const SimResult& result) {
    nlohmann::ordered_json j;
    j["conflict_ticks"] = result.summary.conflict_ticks;
    j["final_leader"] = config.robots[result.summary.final_leader].id;
    nlohmann::ordered_json fin = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < config.robots.size(); ++i)
        fin[config.robots[i].id] = result.summary.final_educations[i];
    j["final_educations"] = fin;
    if (result.summary.fellowship_value)
        j["fellowship_value"] = *result.summary.fellowship_value;
    else
        j["fellowship_value"] = nullptr;
    return j.dump(2) + "\n";
}

}  // namespace affectus
