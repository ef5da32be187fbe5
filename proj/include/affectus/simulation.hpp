#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace affectus {

struct RobotProfile {
    std::string id;
    double theta = 1.0;
    double R0 = 0.0;
    std::optional<std::vector<double>> goal;
};

enum class LeaderMode { none, fixed_leader };

struct SimParams {
    long ticks = 1;
    std::uint64_t seed = 0;
    double r_lo = 0.5;
    double r_hi = 1.5;
    double conflict_epsilon = 0.1;
    LeaderMode leader_mode = LeaderMode::none;
};

struct ScenarioConfig {
    std::vector<RobotProfile> robots;
    // (from, to) -> k: how strongly `to` takes on emotions coming from `from`.
    std::map<std::pair<std::string, std::string>, double> suggestibility;
    double default_suggestibility = 1.0;
    SimParams sim;

    double k(const std::string& from, const std::string& to) const;
};

enum class Agitator { none, first, second, both };

struct ContactResult {
    double r_eff_L = 0.0;
    double r_eff_j = 0.0;
    Agitator agitator = Agitator::none;  // first: L agitates j; second: j agitates L
};

struct EventRecord {
    long tick = 0;
    std::size_t robot_a = 0;
    std::size_t robot_b = 0;
    double r_a = 0.0;
    double r_b = 0.0;
    double r_eff_a = 0.0;
    double r_eff_b = 0.0;
    std::vector<std::size_t> agitators;
    std::vector<double> R_after;
    double sum_education = 0.0;
    bool conflict = false;
};

struct SimSummary {
    std::vector<long> conflict_ticks;
    std::size_t final_leader = 0;
    std::vector<double> final_educations;
    std::optional<double> fellowship_value;
};

struct SimResult {
    std::vector<EventRecord> events;
    SimSummary summary;
};

ContactResult contact(double r_L, double r_j, double k_jL, double k_Lj);
// Throws ErrorCode::validation with a field path on bad documents.
ScenarioConfig parse_scenario(const std::string& json_text);
void validate(const ScenarioConfig& config);
SimResult run_scenario(const ScenarioConfig& config);
void write_events_csv(std::ostream& out, const ScenarioConfig& config, const SimResult& result);
std::string summary_json(const ScenarioConfig& config, const SimResult& result);
std::string format_double(double x);

}  // namespace affectus
