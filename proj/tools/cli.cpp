#include "affectus/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "affectus/clinic.hpp"
#include "affectus/emotion.hpp"
#include "affectus/equivfit.hpp"
#include "affectus/error.hpp"
#include "affectus/kernels.hpp"
#include "affectus/partition.hpp"
#include "affectus/selection.hpp"
#include "affectus/simulation.hpp"
#include "affectus/traits.hpp"

namespace affectus {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path, const char* field) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::validation, field, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json_file(const std::string& path, const char* field) {
    try {
        return json::parse(read_file(path, field));
    } catch (const json::parse_error& e) {
        fail(ErrorCode::validation, field, std::string("malformed JSON: ") + e.what());
    }
}

// Rows of numbers; blank lines and non-numeric header rows are skipped.
std::vector<std::vector<double>> read_csv(const std::string& path, const char* field) {
    std::istringstream in(read_file(path, field));
    std::vector<std::vector<double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        bool numeric = true;
        while (std::getline(cells, cell, ',')) {
            try {
                std::size_t used = 0;
                row.push_back(std::stod(cell, &used));
                if (cell.find_first_not_of(" \t", used) != std::string::npos) numeric = false;
            } catch (const std::exception&) {
                numeric = false;
            }
        }
        if (!numeric) {
            if (rows.empty()) continue;
            fail(ErrorCode::validation, std::string(field) + ":" + std::to_string(lineno),
                 "non-numeric cell");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) fail(ErrorCode::validation, field, "no numeric rows in " + path);
    return rows;
}

std::vector<double> read_series(const std::string& path) {
    std::vector<double> out;
    for (const auto& row : read_csv(path, "data")) out.insert(out.end(), row.begin(), row.end());
    return out;
}

int exit_code(ErrorCode code) {
    switch (code) {
    case ErrorCode::singular_fit:
    case ErrorCode::undefined_angle:
    case ErrorCode::undefined_selection:
    case ErrorCode::undefined_average:
    case ErrorCode::undefined_efficiency:
        return 3;
    default:
        return 2;
    }
}

void write_error(std::ostream& err, std::string_view code, const std::string& field,
                 const std::string& message) {
    json j;
    j["error"] = {{"code", code}, {"field", field}, {"message", message}};
    err << j.dump() << '\n';
}

json process_json(const EquivalentProcess& p) {
    json j;
    j["theta"] = p.theta;
    j["q"] = p.q;
    j["Z"] = p.theta >= 0.0 && p.theta < 1.0 ? json(p.q / (1.0 - p.theta)) : json(nullptr);
    j["residual"] = p.residual;
    j["valid"] = p.valid;
    if (p.step_map) j["step_map"] = *p.step_map;
    if (!p.warnings.empty()) j["warnings"] = p.warnings;
    return j;
}

const char* temperament_name(Temperament t) {
    switch (t) {
    case Temperament::melancholic: return "melancholic";
    case Temperament::phlegmatic: return "phlegmatic";
    case Temperament::sanguine: return "sanguine";
    case Temperament::choleric: return "choleric";
    }
    return "unknown";
}

EmotionCurve curve_from_json(const json& c, const std::string& path) {
    if (!c.is_object()) fail(ErrorCode::validation, path, "expected an object");
    if (c.contains("P")) {
        if (!c["P"].is_number() || !c.contains("t0") || !c["t0"].is_number())
            fail(ErrorCode::validation, path, "sine curves need numeric P and t0");
        int n = c.value("n", 201);
        return sine_emotion(c["P"].get<double>(), c["t0"].get<double>(), n);
    }
    if (!c.contains("samples") || !c["samples"].is_array() || !c.contains("dt") ||
        !c["dt"].is_number())
        fail(ErrorCode::validation, path, "sampled curves need samples and dt");
    std::vector<double> s;
    for (const auto& v : c["samples"]) {
        if (!v.is_number()) fail(ErrorCode::validation, path + ".samples", "expected numbers");
        s.push_back(v.get<double>());
    }
    return EmotionCurve(std::move(s), c["dt"].get<double>());
}

std::vector<double> parse_list(const std::string& text, const char* field) {
    std::vector<double> out;
    std::istringstream in(text);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(cell, &used));
            if (cell.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(cell);
        } catch (const std::exception&) {
            fail(ErrorCode::validation, field, "expected a comma-separated list of numbers");
        }
    }
    if (out.empty()) fail(ErrorCode::validation, field, "list is empty");
    return out;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical toolkit and contact simulator for emotional robot models", "affectus"};
    app.require_subcommand(1);

    // run
    std::string scenario_path, events_path, summary_path;
    auto* run = app.add_subcommand("run", "Run a contact simulation scenario");
    run->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    run->add_option("--out", events_path, "Events CSV output (default stdout)");
    run->add_option("--summary", summary_path, "Summary JSON output");

    // fit
    std::string fit_method, data_path;
    MismatchedGrid grid;
    GeneralFitOptions gopt;
    auto* fit = app.add_subcommand("fit", "Identify an equivalent education process");
    fit->add_option("method", fit_method, "linear | general | mismatched | absolute")
        ->required()
        ->check(CLI::IsMember({"linear", "general", "mismatched", "absolute"}));
    fit->add_option("--data", data_path, "CSV of educations R_1..R_n")->required();
    fit->add_option("--q-lo", grid.q_lo);
    fit->add_option("--q-hi", grid.q_hi);
    fit->add_option("--q-step", grid.q_step);
    fit->add_option("--theta-lo", grid.theta_lo);
    fit->add_option("--theta-hi", grid.theta_hi);
    fit->add_option("--theta-step", grid.theta_step);
    fit->add_option("--j-max", grid.j_max);
    fit->add_option("--delta", gopt.delta, "general fit: theta stays below 1 - delta");

    // partition
    std::string sizes_arg, educations_arg, extents_arg;
    double total = 0.0;
    auto* part = app.add_subcommand("partition", "Tantamount sub-group tools");
    part->require_subcommand(1);
    auto* lag = part->add_subcommand("lagrange", "Target averages for fixed group sizes");
    lag->add_option("--sizes", sizes_arg, "Comma-separated group sizes")->required();
    lag->add_option("--total", total, "Total education A")->required();
    auto* enu = part->add_subcommand("enumerate", "Exhaustive tantamount partition search");
    enu->add_option("--educations", educations_arg, "Comma-separated educations")->required();
    enu->add_option("--sizes", sizes_arg, "Comma-separated group sizes")->required();
    auto* pair = part->add_subcommand("pair", "Split by goal-achievement extents");
    pair->add_option("--extents", extents_arg, "Comma-separated extents")->required();

    // select
    std::string players_path, rule_name = "both";
    auto* sel = app.add_subcommand("select", "Alternate selection between players");
    sel->add_option("--players", players_path, "JSON {\"players\": [[...], ...]}")->required();
    sel->add_option("--rule", rule_name)->check(CLI::IsMember({"first", "second", "both"}));

    // diagnose
    std::string curve_path;
    double t_star = 0.0;
    auto* dia = app.add_subcommand("diagnose", "Check the emotion conditions on a sampled curve");
    dia->add_option("--curve", curve_path, "CSV with columns t,M")->required();
    dia->add_option("--tstar", t_star, "Subject end time")->required();

    // temperament
    std::string curves_path;
    auto* tem = app.add_subcommand("temperament", "Group temperament from emotion curves");
    tem->add_option("--curves", curves_path, "JSON {\"robots\": [[curve, ...], ...]}")->required();

    auto* info = app.add_subcommand("info", "Version, build and defaults");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        write_error(err, "usage", "argv", e.what());
        err << app.help();
        return 2;
    }

    try {
        if (*run) {
            ScenarioConfig cfg = parse_scenario(read_file(scenario_path, "scenario"));
            if (const char* s = std::getenv("AFFECTUS_SEED_OVERRIDE")) {
                char* end = nullptr;
                unsigned long long v = std::strtoull(s, &end, 10);
                if (!*s || *end) fail(ErrorCode::validation, "AFFECTUS_SEED_OVERRIDE", "expected an integer");
                cfg.sim.seed = v;
            }
            SimResult res = run_scenario(cfg);
            if (events_path.empty()) {
                write_events_csv(out, cfg, res);
            } else {
                std::ofstream f(events_path, std::ios::binary);
                if (!f) fail(ErrorCode::validation, "out", "cannot write " + events_path);
                write_events_csv(f, cfg, res);
            }
            std::string summary = summary_json(cfg, res);
            if (!summary_path.empty()) {
                std::ofstream f(summary_path, std::ios::binary);
                if (!f) fail(ErrorCode::validation, "summary", "cannot write " + summary_path);
                f << summary;
            } else if (!events_path.empty()) {
                out << summary;
            }
        } else if (*fit) {
            std::vector<double> R = read_series(data_path);
            json j;
            j["method"] = fit_method;
            if (fit_method == "linear") {
                j.update(process_json(fit_linear(R)));
            } else if (fit_method == "general") {
                j.update(process_json(fit_general(R, gopt)));
            } else if (fit_method == "mismatched") {
                j.update(process_json(fit_mismatched(R, grid)));
            } else {
                j["q"] = fit_absolute(R);
            }
            out << j.dump(2) << '\n';
        } else if (*lag) {
            std::vector<int> N;
            for (double v : parse_list(sizes_arg, "sizes")) N.push_back(static_cast<int>(v));
            json j;
            j["F"] = lagrange_targets(N, total);
            out << j.dump(2) << '\n';
        } else if (*enu) {
            std::vector<double> R = parse_list(educations_arg, "educations");
            std::vector<int> N;
            for (double v : parse_list(sizes_arg, "sizes")) N.push_back(static_cast<int>(v));
            TantamountResult r = enumerate_tantamount(R, N);
            json j;
            j["J_min"] = r.J_min;
            j["partitions"] = json::array();
            for (const Partition& p : r.best_partitions)
                j["partitions"].push_back({{"groups", p.groups}, {"averages", p.averages}});
            out << j.dump(2) << '\n';
        } else if (*pair) {
            GoalPairing g = pair_by_goal_extent(parse_list(extents_arg, "extents"));
            json j;
            j["A"] = g.group_a;
            j["B"] = g.group_b;
            out << j.dump(2) << '\n';
        } else if (*sel) {
            json doc = parse_json_file(players_path, "players");
            if (!doc.is_object() || !doc.contains("players") || !doc["players"].is_array())
                fail(ErrorCode::validation, "players", "expected {\"players\": [[...], ...]}");
            PlayerEducations players;
            for (std::size_t i = 0; i < doc["players"].size(); ++i) {
                const json& b = doc["players"][i];
                std::string p = "players[" + std::to_string(i) + "]";
                if (!b.is_array()) fail(ErrorCode::validation, p, "expected an array");
                std::vector<double> block;
                for (const auto& v : b) {
                    if (!v.is_number()) fail(ErrorCode::validation, p, "expected numbers");
                    block.push_back(v.get<double>());
                }
                players.push_back(std::move(block));
            }
            json j;
            auto emit = [&](SelectionRule rule, const char* name) {
                Selection s = select(players, rule);
                json r;
                r["winner"] = s.winner ? json(*s.winner) : json(nullptr);
                r["angles"] = s.angles;
                r["moduli"] = s.moduli;
                j[name] = r;
            };
            if (rule_name != "second") emit(SelectionRule::first, "first");
            if (rule_name != "first") emit(SelectionRule::second, "second");
            out << j.dump(2) << '\n';
        } else if (*dia) {
            auto rows = read_csv(curve_path, "curve");
            if (rows.size() < 3) fail(ErrorCode::validation, "curve", "need at least three samples");
            std::vector<double> M;
            for (std::size_t k = 0; k < rows.size(); ++k) {
                if (rows[k].size() != 2)
                    fail(ErrorCode::validation, "curve", "expected two columns t,M");
                M.push_back(rows[k][1]);
            }
            double dt = (rows.back()[0] - rows.front()[0]) / static_cast<double>(rows.size() - 1);
            for (std::size_t k = 1; k < rows.size(); ++k)
                if (std::abs(rows[k][0] - rows[k - 1][0] - dt) > 1e-6 * std::abs(dt))
                    fail(ErrorCode::validation, "curve", "time grid must be uniform");
            DiagnosisReport d = diagnose(EmotionCurve(M, dt, std::nullopt, INFINITY), t_star);
            json j;
            j["H"] = d.severity;
            j["X"] = d.symptoms;
            j["healthy"] = d.healthy;
            j["satisfied"] = d.satisfied;
            out << j.dump(2) << '\n';
        } else if (*tem) {
            json doc = parse_json_file(curves_path, "curves");
            if (!doc.is_object() || !doc.contains("robots") || !doc["robots"].is_array())
                fail(ErrorCode::validation, "curves", "expected {\"robots\": [[...], ...]}");
            std::vector<std::vector<EmotionCurve>> robots;
            for (std::size_t i = 0; i < doc["robots"].size(); ++i) {
                const json& r = doc["robots"][i];
                std::string p = "robots[" + std::to_string(i) + "]";
                if (!r.is_array()) fail(ErrorCode::validation, p, "expected an array of curves");
                std::vector<EmotionCurve> cs;
                for (std::size_t k = 0; k < r.size(); ++k)
                    cs.push_back(curve_from_json(r[k], p + "[" + std::to_string(k) + "]"));
                robots.push_back(std::move(cs));
            }
            TemperamentReport t = temperament(robots);
            json j;
            j["L"] = t.L_values;
            j["N"] = t.group_N;
            j["label"] = temperament_name(t.label);
            out << j.dump(2) << '\n';
        } else if (*info) {
            json j;
            j["name"] = "affectus";
            j["version"] = kVersion;
            j["kernels"] = kernels::active().name;
            j["compiler"] = __VERSION__;
            MismatchedGrid g;
            j["defaults"] = {
                {"epsilon", 1e-9},
                {"emotion_bound", kDefaultEmotionBound},
                {"max_step_seconds", kMaxStepSeconds},
                {"conflict_epsilon", SimParams{}.conflict_epsilon},
                {"default_suggestibility", 1.0},
                {"enumeration_limit", kMaxEnumeratedRobots},
                {"mismatched_grid",
                 {{"q", {g.q_lo, g.q_hi, g.q_step}},
                  {"theta", {g.theta_lo, g.theta_hi, g.theta_step}},
                  {"j_max", g.j_max}}},
            };
            out << j.dump(2) << '\n';
        }
    } catch (const Error& e) {
        write_error(err, to_string(e.code()), e.field(), e.what());
        return exit_code(e.code());
    } catch (const std::exception& e) {
        write_error(err, "internal", "", e.what());
        return 3;
    }
    return 0;
}

}  // namespace affectus
