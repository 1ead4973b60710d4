// Copyright 2026 The rydgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rydgate/error.h"
#include "rydgate/fidelity.h"
#include "rydgate/model.h"
#include "rydgate/optimize.h"
#include "rydgate/oracle.h"
#include "rydgate/propagator.h"
#include "rydgate/serialize.h"
#include "run_config.h"

namespace rydgate::cli {
namespace {

enum class Kind { kNumber, kInteger, kText, kSwitch };

struct Flag {
    std::string name;  // e.g. "--b2"; the config key drops the dashes and uses '_'
    Kind kind;
    std::string help;
};

struct Command {
    std::string name;
    std::string help;
    Json defaults;
    std::vector<Flag> flags;
    // Fills the writer and returns the exit code; output goes to `out`.
    std::function<int(const Json &, ArtifactWriter &, std::ostream &)> run;
};

std::string key_of(const std::string &flag) {
    std::string key = flag.substr(flag.find_first_not_of('-'));
    std::replace(key.begin(), key.end(), '-', '_');
    return key;
}

// ---------------------------------------------------------------------------
// Shared pieces.

const Flag kB2{"--b2", Kind::kNumber, "squared geometrical factor b^2 of the second qubit"};
const Flag kC2{"--c2", Kind::kNumber, "squared geometrical factor c^2 of the third qubit"};
const Flag kQubits{"--qubits", Kind::kInteger, "number of qubits (2 or 3)"};
const Flag kPulses{"--pulses", Kind::kInteger, "number of alternating pulses M"};
const Flag kGrid{"--grid", Kind::kText, "area grid lo:hi:step in units of pi, used for both axes"};
const Flag kFidelity{"--fidelity", Kind::kText, "fidelity definition: trace-sq, trace or average"};
const Flag kSeed{"--seed", Kind::kInteger, "random seed"};
const Flag kOut{"--out", Kind::kText, "output directory"};
const Flag kThreads{"--threads", Kind::kInteger, "worker threads (0 = all cores)"};
const Flag kSop{"--sop,!--no-sop", Kind::kSwitch, "orthogonal (SOP) odd/even vectors, or the non-orthogonal family"};
const Flag kOrth{"--orth", Kind::kText, "three-qubit orthogonality: full or subvector"};

Json common_defaults() {
    return Json{{"fidelity", "trace-sq"}, {"seed", 0}, {"out", "out"}, {"threads", 0}};
}

double factor(const Json &config, const std::string &key) {
    double sq = get_double(config, key);
    if (!(sq >= 0.0 && sq <= 1.0)) {
        throw ConfigError("'" + key + "' must lie in [0, 1]");
    }
    return std::sqrt(sq);
}

Orthogonality orthogonality(const Json &config) {
    std::string orth = get_string(config, "orth");
    if (orth == "full") {
        return Orthogonality::kFullVector;
    }
    if (orth == "subvector") {
        return Orthogonality::kSubVector;
    }
    throw ConfigError("'orth' must be full or subvector");
}

FidelityDefinition definition(const Json &config) {
    try {
        return parse_fidelity_definition(get_string(config, "fidelity"));
    } catch (const Error &e) {
        throw ConfigError(e.what());
    }
}

ProtocolFamily family(const Json &config) {
    int qubits = get_int(config, "qubits");
    int pulses = get_int(config, "pulses");
    double b = factor(config, "b2");
    if (qubits == 2) {
        return get_bool(config, "sop") ? ProtocolFamily::sop(b, pulses) : ProtocolFamily::non_orthogonal(b, pulses);
    }
    if (qubits == 3) {
        if (!get_bool(config, "sop")) {
            throw ConfigError("the three-qubit family is only available with --sop");
        }
        return ProtocolFamily::three_qubit(b, factor(config, "c2"), orthogonality(config), pulses);
    }
    throw ConfigError("'qubits' must be 2 or 3");
}

std::string map_csv(const FidelityMap &map) {
    std::ostringstream csv;
    write_map_csv(csv, map);
    return csv.str();
}

std::string lattice_json(const FidelityMap &map, double threshold) {
    try {
        return lattice_report_to_json(lattice_analysis(map, threshold), threshold) + "\n";
    } catch (const Error &e) {
        if (e.code() != ErrorCode::kNoMaximaFound) {
            throw;
        }
        Json doc{{"threshold", threshold}, {"error", e.what()}, {"maxima", Json::array()}};
        return doc.dump(2) + "\n";
    }
}

void print_map_summary(std::ostream &out, const FidelityMap &map) {
    auto best = std::max_element(map.values.begin(), map.values.end());
    auto cell = static_cast<std::size_t>(best - map.values.begin());
    out << "max F = " << format_number(*best) << " at (" << format_number(map.axis_odd[cell / map.cols()] / kPi)
        << ", " << format_number(map.axis_even[cell % map.cols()] / kPi) << ") pi\n";
}

std::pair<double, double> pair_in_pi(const Json &config, const std::string &key) {
    std::vector<double> values;
    const Json &value = config.at(key);
    if (value.is_string()) {
        std::stringstream in(value.get<std::string>());
        std::string item;
        while (std::getline(in, item, ':')) {
            Json probe{{key, item}};
            values.push_back(get_double(probe, key));
        }
    } else {
        values = get_list(config, key);
    }
    if (values.size() != 2) {
        throw ConfigError("'" + key + "' must be A_odd:A_even in units of pi");
    }
    return {values[0] * kPi, values[1] * kPi};
}

// "(2,2);(2,6)" or [[2, 2], [2, 6]] -> named area pairs in units of pi.
std::vector<std::pair<std::string, AreaPair>> protocol_list(const Json &config) {
    const Json &value = config.at("protocols");
    std::vector<std::pair<double, double>> pairs;
    if (value.is_string()) {
        std::string text = value.get<std::string>();
        text.erase(std::remove(text.begin(), text.end(), ' '), text.end());
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ';')) {
            if (item.size() < 5 || item.front() != '(' || item.back() != ')') {
                throw ConfigError("protocol '" + item + "' must look like (A_odd,A_even)");
            }
            Json probe{{"protocol", item.substr(1, item.size() - 2)}};
            std::vector<double> xy = get_list(probe, "protocol");
            if (xy.size() != 2) {
                throw ConfigError("protocol '" + item + "' must have two areas");
            }
            pairs.emplace_back(xy[0], xy[1]);
        }
    } else if (value.is_array()) {
        for (const Json &p : value) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
                throw ConfigError("'protocols' entries must be [A_odd, A_even]");
            }
            pairs.emplace_back(p[0].get<double>(), p[1].get<double>());
        }
    }
    if (pairs.empty()) {
        throw ConfigError("'protocols' must name at least one (A_odd,A_even) pair");
    }
    std::vector<std::pair<std::string, AreaPair>> named;
    for (auto [x, y] : pairs) {
        named.push_back({"(" + format_number(x) + "," + format_number(y) + ")", {x * kPi, y * kPi}});
    }
    return named;
}

// ---------------------------------------------------------------------------
// Commands.

int run_map(const Json &config, ArtifactWriter &writer, std::ostream &out) {
    ProtocolFamily fam = family(config);
    AreaGrid grid = get_grid(config, "grid");
    FidelityMap map = fidelity_map(fam, GateSignature::cphase(fam.n_qubits()), grid, grid, definition(config),
                                   get_int(config, "threads"));
    writer.add("map.csv", map_csv(map));
    writer.add("lattice.json", lattice_json(map, get_double(config, "threshold")));
    print_map_summary(out, map);
    return kExitOk;
}

int run_esop_map(const Json &config, ArtifactWriter &writer, std::ostream &out) {
    int pulses = get_int(config, "pulses");
    ProtocolFamily fam = ProtocolFamily::sop(factor(config, "b2"), pulses);
    AreaGrid grid = get_grid(config, "grid");
    FidelityMap map =
        fidelity_map(fam, GateSignature::cphase(2), grid, grid, definition(config), get_int(config, "threads"));
    writer.add("map.csv", map_csv(map));
    writer.add("lattice.json", lattice_json(map, get_double(config, "threshold")));
    if (pulses >= 2 && pulses <= 5) {
        // Reference closed form next to the propagator product.
        std::string csv = "theta_odd_over_pi,theta_even_over_pi,printed,product\n";
        for (double to : AreaGrid{0.0, 1.0, 0.05}.axis()) {
            for (double te : AreaGrid{0.0, 1.0, 0.05}.axis()) {
                csv += format_number(to) + "," + format_number(te) + "," +
                       format_number(u11v_esop(pulses, to * kPi, te * kPi)) + "," +
                       format_number(u11v_alternating_exact(pulses, to * kPi, te * kPi)) + "\n";
            }
        }
        writer.add("formula_check.csv", csv);
    }
    print_map_summary(out, map);
    return kExitOk;
}

int run_robustness(const Json &config, ArtifactWriter &writer, std::ostream &out) {
    std::vector<double> deltas = get_range(config, "delta");
    std::vector<double> fit;
    for (int k = 0; k <= 20; ++k) {
        fit.push_back(std::pow(10.0, -3.0 + 0.1 * k));
    }
    std::string csv = "b2,delta,state,amplitude\n";
    Json slopes = Json::array();
    for (double b2 : get_list(config, "b2_values")) {
        if (!(b2 >= 0.0 && b2 <= 1.0)) {
            throw ConfigError("'b2_values' entries must lie in [0, 1]");
        }
        Protocol protocol = build_sop_protocol(std::sqrt(b2));
        RobustnessCurves curves = robustness_scan(protocol, deltas);
        for (std::size_t s = 0; s < curves.states.size(); ++s) {
            for (std::size_t k = 0; k < deltas.size(); ++k) {
                csv += format_number(b2) + "," + format_number(deltas[k]) + "," + curves.states[s].label() + "," +
                       format_number(curves.amplitudes[s][k]) + "\n";
            }
        }
        RobustnessCurves fine = robustness_scan(protocol, fit);
        std::vector<double> y;
        for (double u : fine.amplitudes[0]) {
            y.push_back(u + 1.0);
        }
        double slope = loglog_slope(fit, y);
        slopes.push_back({{"b2", b2}, {"slope", slope}, {"fit_delta_min", fit.front()}, {"fit_delta_max", fit.back()}});
        out << "b2 = " << format_number(b2) << ": log-log slope " << format_number(slope) << "\n";
    }
    writer.add("robustness.csv", csv);
    writer.add("slopes.json", slopes.dump(2) + "\n");
    return kExitOk;
}

int run_bscan(const Json &config, ArtifactWriter &writer, std::ostream &out) {
    std::vector<double> b2 = get_range(config, "b2_grid");
    if (b2.front() < 0.0 || b2.back() > 1.0) {
        throw ConfigError("'b2_grid' must stay within [0, 1]");
    }
    FidelityDefinition def = definition(config);
    std::string csv = "protocol,a_odd_over_pi,a_even_over_pi,b2,orthogonal,non_orthogonal\n";
    for (const auto &[name, areas] : protocol_list(config)) {
        std::vector<BScanPoint> orth = b_scan(areas, b2, true, def);
        std::vector<BScanPoint> other = b_scan(areas, b2, false, def);
        for (std::size_t k = 0; k < b2.size(); ++k) {
            csv += "\"" + name + "\"," + format_number(areas.odd / kPi) + "," + format_number(areas.even / kPi) +
                   "," + format_number(b2[k]) + "," + format_number(orth[k].fidelity) + "," +
                   format_number(other[k].fidelity) + "\n";
        }
        out << name << ": F(b2=" << format_number(b2.back()) << ") orthogonal " << format_number(orth.back().fidelity)
            << ", non-orthogonal " << format_number(other.back().fidelity) << "\n";
    }
    writer.add("bscan.csv", csv);
    return kExitOk;
}

int run_optimize(const Json &config, ArtifactWriter &writer, std::ostream &out) {
    std::string mode = get_string(config, "mode");
    double b = factor(config, "b2");
    double c = factor(config, "c2");
    double min_sq = get_double(config, "min_sq");
    if (!(min_sq >= 0.0 && min_sq <= 1.0)) {
        throw ConfigError("'min_sq' must lie in [0, 1]");
    }
    NelderMeadOptions options;
    options.restarts = get_int(config, "restarts");
    options.max_evaluations = get_int(config, "max_evals");
    if (options.restarts < 1 || options.max_evaluations < 1) {
        throw ConfigError("'restarts' and 'max_evals' must be positive");
    }
    CellOptimizer optimizer;
    if (mode == "third-qubit") {
        optimizer = [=](AreaPair areas, std::uint64_t seed) {
            return optimize_third_qubit(areas, b, min_sq, c, seed, options);
        };
    } else if (mode == "all-factors") {
        if (2 * min_sq > 1 - c * c) {
            throw ConfigError("no structural vector satisfies min_sq with this c2");
        }
        optimizer = [=](AreaPair areas, std::uint64_t seed) {
            return optimize_all_factors(areas, c, min_sq, seed, options);
        };
    } else {
        throw ConfigError("'mode' must be third-qubit or all-factors");
    }
    AreaGrid grid = get_grid(config, "grid");
    OptimizedMap map = optimized_map(optimizer, 3, grid, grid, get_seed(config, "seed"), get_int(config, "threads"));
    std::ostringstream csv;
    write_optimized_map_csv(csv, map);
    writer.add("optimized_map.csv", csv.str());
    print_map_summary(out, map.map);
    return kExitOk;
}

int run_validate(const Json &config, ArtifactWriter &writer, std::ostream &out) {
    std::string path = get_string(config, "protocol");
    Protocol protocol = build_jp_protocol();
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) {
            throw ConfigError("cannot open protocol file " + path);
        }
        std::stringstream text;
        text << in.rdbuf();
        protocol = protocol_from_json(text.str());
    } else {
        auto [odd, even] = pair_in_pi(config, "areas");
        protocol = family(config).at(odd, even);
    }
    IntegrationSettings settings;
    try {
        settings.shape = parse_envelope_shape(get_string(config, "shape"));
    } catch (const Error &e) {
        throw ConfigError(e.what());
    }
    double tolerance = get_double(config, "tolerance");
    ValidationReport report = validate_protocol(protocol, tolerance, settings);
    writer.add("protocol.json", protocol_to_json(protocol) + "\n");
    writer.add("validation.json", validation_report_to_json(report) + "\n");
    out << (report.passed ? "PASS" : "FAIL") << ": max deviation " << format_number(report.max_deviation)
        << " (tolerance " << format_number(tolerance) << ")\n";
    return report.passed ? kExitOk : kExitValidation;
}

std::vector<Command> commands() {
    std::vector<Command> list;
    {
        Json d = common_defaults();
        d.update(Json{{"b2", 0.0}, {"c2", 0.0}, {"qubits", 2}, {"pulses", 3}, {"grid", "-8:8:0.05"},
                      {"sop", true}, {"orth", "full"}, {"threshold", 0.7}});
        list.push_back({"map", "fidelity map over (A_odd, A_even) with lattice report", d,
                        {kB2, kC2, kQubits, kPulses, kGrid, kFidelity, kSeed, kOut, kThreads, kSop, kOrth,
                         {"--threshold", Kind::kNumber, "minimum fidelity of reported maxima"}},
                        run_map});
    }
    {
        Json d = common_defaults();
        d.update(Json{{"b2", 0.1}, {"pulses", 4}, {"grid", "-8:8:0.05"}, {"threshold", 0.7}});
        list.push_back({"esop-map", "fidelity map of an M-pulse alternating protocol", d,
                        {kB2, kPulses, kGrid, kFidelity, kSeed, kOut, kThreads,
                         {"--threshold", Kind::kNumber, "minimum fidelity of reported maxima"}},
                        run_esop_map});
    }
    {
        Json d = common_defaults();
        d.update(Json{{"b2_values", "0,0.1,0.5"}, {"delta", "-0.5:0.5:0.01"}});
        list.push_back({"robustness", "amplitude deviation under pulse-area errors", d,
                        {{"--b2-values", Kind::kText, "comma separated b^2 values"},
                         {"--delta", Kind::kText, "area error grid lo:hi:step in radians"}, kSeed, kOut, kThreads},
                        run_robustness});
    }
    {
        Json d = common_defaults();
        d.update(Json{{"protocols", "(2,2);(2,6);(8,6);(-6.1,0.9);(14,0)"}, {"b2_grid", "0:0.5:0.01"}});
        list.push_back({"bscan", "fidelity against b^2 at fixed areas", d,
                        {{"--protocols", Kind::kText, "area pairs (A_odd,A_even) in units of pi, ';' separated"},
                         {"--b2-grid", Kind::kText, "b^2 grid lo:hi:step"}, kFidelity, kSeed, kOut, kThreads},
                        run_bscan});
    }
    {
        Json d = common_defaults();
        d.update(Json{{"mode", "third-qubit"}, {"b2", 0.1}, {"c2", 0.1}, {"min_sq", 0.1}, {"grid", "-4:4:0.2"},
                      {"restarts", 16}, {"max_evals", 2000}});
        list.push_back({"optimize", "three-qubit map with optimized geometrical factors", d,
                        {{"--mode", Kind::kText, "third-qubit or all-factors"}, kB2, kC2,
                         {"--min-sq", Kind::kNumber, "lower bound on every squared factor"}, kGrid,
                         {"--restarts", Kind::kInteger, "Nelder-Mead restarts per cell"},
                         {"--max-evals", Kind::kInteger, "objective evaluations per restart"}, kSeed, kOut, kThreads},
                        run_optimize});
    }
    {
        Json d = common_defaults();
        d.update(Json{{"protocol", ""}, {"b2", 0.1}, {"c2", 0.0}, {"qubits", 2}, {"pulses", 3}, {"sop", true},
                      {"orth", "full"}, {"areas", "2:2"}, {"tolerance", 1e-6}, {"shape", "squared-sine"}});
        list.push_back({"validate", "compare analytic amplitudes with time-dependent integration", d,
                        {{"--protocol", Kind::kText, "protocol JSON file (overrides the family flags)"}, kB2, kC2,
                         kQubits, kPulses, kSop, kOrth,
                         {"--areas", Kind::kText, "A_odd:A_even in units of pi"},
                         {"--tolerance", Kind::kNumber, "maximum allowed amplitude deviation"},
                         {"--shape", Kind::kText, "pulse envelope: squared-sine or gaussian"}, kSeed, kOut},
                        run_validate});
    }
    return list;
}

Json flag_value(const Flag &flag, const std::string &text) {
    const std::string key = key_of(flag.name);
    try {
        std::size_t used = 0;
        switch (flag.kind) {
            case Kind::kNumber: {
                double v = std::stod(text, &used);
                if (used == text.size()) {
                    return v;
                }
                break;
            }
            case Kind::kInteger: {
                long long v = std::stoll(text, &used);
                if (used == text.size()) {
                    return v;
                }
                break;
            }
            case Kind::kText:
                return text;
            case Kind::kSwitch:
                break;
        }
    } catch (const std::exception &) {
    }
    throw ConfigError("invalid value '" + text + "' for " + flag.name.substr(0, flag.name.find(',')));
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Gate fidelity landscapes of blockade-based multi-qubit phase gates"};
    app.require_subcommand(1);
    std::vector<Command> list = commands();
    struct Bound {
        CLI::App *sub;
        std::string config_path;
        std::vector<std::pair<CLI::Option *, std::shared_ptr<std::string>>> texts;
        std::vector<std::pair<CLI::Option *, std::shared_ptr<bool>>> switches;
    };
    std::vector<Bound> bound(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
        Bound &b = bound[i];
        b.sub = app.add_subcommand(list[i].name, list[i].help);
        b.sub->add_option("--config", b.config_path, "JSON config file; flags take precedence");
        for (const Flag &flag : list[i].flags) {
            if (flag.kind == Kind::kSwitch) {
                auto value = std::make_shared<bool>(false);
                b.switches.emplace_back(b.sub->add_flag(flag.name, *value, flag.help), value);
            } else {
                auto value = std::make_shared<std::string>();
                CLI::Option *opt = b.sub->add_option(flag.name, *value, flag.help);
                opt->allow_extra_args(false);
                b.texts.emplace_back(opt, value);
            }
        }
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitConfig;
    }

    for (std::size_t i = 0; i < list.size(); ++i) {
        Bound &b = bound[i];
        if (!b.sub->parsed()) {
            continue;
        }
        const Command &command = list[i];
        Json config;
        try {
            Json flags = Json::object();
            std::size_t t = 0, s = 0;
            for (const Flag &flag : command.flags) {
                if (flag.kind == Kind::kSwitch) {
                    auto &[opt, value] = b.switches[s++];
                    if (opt->count() > 0) {
                        flags[key_of(flag.name.substr(0, flag.name.find(',')))] = *value;
                    }
                } else {
                    auto &[opt, value] = b.texts[t++];
                    if (opt->count() > 0) {
                        flags[key_of(flag.name)] = flag_value(flag, *value);
                    }
                }
            }
            Json file = b.config_path.empty() ? Json() : load_config_file(b.config_path);
            config = resolve_config(command.defaults, file, flags);
            get_seed(config, "seed");
            if (get_int(config, "threads") < 0) {
                throw ConfigError("'threads' must be non-negative");
            }
            ArtifactWriter writer(command.name, config);
            int code = command.run(config, writer, out);
            writer.commit(get_string(config, "out"));
            return code;
        } catch (const ConfigError &e) {
            err << "config error: " << e.what() << "\n";
            return kExitConfig;
        } catch (const Error &e) {
            // Library argument errors come from the configuration values.
            err << "config error: " << e.what() << "\n";
            return kExitConfig;
        } catch (const std::exception &e) {
            err << "error: " << e.what() << "\n";
            return kExitRuntime;
        }
    }
    return kExitConfig;
}

}  // namespace rydgate::cli
