// SPDX-License-Identifier: Apache-2.0
#include "paswipt/sweep.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "paswipt/rng.hpp"

namespace paswipt {

namespace {

constexpr std::uint64_t k_receiver_tag = 0x5258;

std::uint64_t param_tag(SweepParam p) {
    switch (p) {
        case SweepParam::grid_points: return 1;
        case SweepParam::power_budget_dbm: return 2;
        case SweepParam::num_antennas: return 3;
    }
    return 0;
}

std::uint64_t algo_tag(const std::string& algo) {
    if (algo == "elementwise") return 1;
    if (algo == "pso") return 2;
    if (algo == "mimo") return 3;
    if (algo == "fixed") return 4;
    throw std::invalid_argument("unknown algorithm: " + algo);
}

void apply_value(SweepParam param, double value, ScenarioConfig& scfg, AlternationConfig& acfg) {
    switch (param) {
        case SweepParam::grid_points: {
            const auto d = static_cast<std::size_t>(value);
            if (static_cast<double>(d) != value || d < 2) {
                throw std::invalid_argument("sweep: D values must be integers >= 2");
            }
            acfg.elementwise.grid_points = d;
            break;
        }
        case SweepParam::power_budget_dbm:
            scfg.power_budget_dbm = value;
            break;
        case SweepParam::num_antennas: {
            const auto m = static_cast<std::size_t>(value);
            if (static_cast<double>(m) != value || m < 1) {
                throw std::invalid_argument("sweep: M values must be integers >= 1");
            }
            scfg.num_antennas = m;
            break;
        }
    }
}

ResultRow run_one(const SweepSpec& spec, const ScenarioConfig& base, double value,
                  std::size_t trial, const std::string& algo) {
    ScenarioConfig scfg = base;
    AlternationConfig acfg = spec.alt;
    apply_value(spec.param, value, scfg, acfg);

    const std::uint64_t rx_seed = derive_seed(spec.base_seed, k_receiver_tag, trial);
    const Scenario scenario = materialize(scfg, rx_seed);
    validate(scenario);

    ResultRow row;
    row.param = sweep_param_name(spec.param);
    row.value = value;
    row.algorithm = algo;
    row.trial = trial;
    row.seed = derive_seed(spec.base_seed,
                           param_tag(spec.param) ^ std::bit_cast<std::uint64_t>(value), trial,
                           algo_tag(algo));

    SolveReport rep;
    if (algo == "elementwise" || algo == "pso") {
        acfg.algo = algo == "pso" ? PositionAlgo::pso : PositionAlgo::elementwise;
        acfg.seed = row.seed;
        rep = alternate(scenario, acfg);
    } else if (algo == "mimo") {
        rep = baseline_mimo(scenario);
    } else {
        rep = baseline_fixed(scenario);
    }

    row.status = to_string(rep.status);
    row.objective_w = rep.status == SolveStatus::infeasible ? 0.0 : rep.objective_w;
    row.objective_dbm = row.objective_w > 0.0 ? watts_to_dbm(row.objective_w)
                                              : -std::numeric_limits<double>::infinity();
    row.outer_iterations = rep.outer_iterations;
    row.wall_time_s = rep.wall_time_s;
    return row;
}

std::vector<std::string> algo_list(const SweepSpec& spec) {
    std::vector<std::string> algos;
    if (spec.run_elementwise) algos.push_back("elementwise");
    if (spec.run_pso) algos.push_back("pso");
    algos.push_back("mimo");
    algos.push_back("fixed");
    return algos;
}

std::string fmt_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

constexpr const char* k_csv_header =
    "param,value,algorithm,trial,seed,status,objective_w,objective_dbm,outer_iterations";

}  // namespace

const char* sweep_param_name(SweepParam p) {
    switch (p) {
        case SweepParam::grid_points: return "D";
        case SweepParam::power_budget_dbm: return "P_B";
        case SweepParam::num_antennas: return "M";
    }
    return "?";
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec, const ScenarioConfig& base) {
    if (spec.values.empty()) throw std::invalid_argument("sweep: empty value list");
    if (spec.trials == 0) throw std::invalid_argument("sweep: trials must be >= 1");
    std::vector<ResultRow> rows;
    rows.reserve(spec.values.size() * spec.trials * 4);
    const std::vector<std::string> algos = algo_list(spec);
    for (double value : spec.values) {
        for (std::size_t trial = 0; trial < spec.trials; ++trial) {
            for (const std::string& algo : algos) {
                rows.push_back(run_one(spec, base, value, trial, algo));
            }
        }
    }
    return rows;
}

ResultRow replay_row(const SweepSpec& spec, const ScenarioConfig& base, const ResultRow& row) {
    return run_one(spec, base, row.value, row.trial, row.algorithm);
}

void write_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
    out << k_csv_header << "\n";
    for (const ResultRow& r : rows) {
        out << csv_field(r.param) << ',' << fmt_double(r.value) << ','
            << csv_field(r.algorithm) << ',' << r.trial << ',' << r.seed << ','
            << csv_field(r.status) << ',' << fmt_double(r.objective_w) << ','
            << fmt_double(r.objective_dbm) << ',' << r.outer_iterations << "\n";
    }
}

void write_json(const std::vector<ResultRow>& rows, std::ostream& out) {
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ResultRow& r = rows[i];
        out << "  {\"param\":\"" << r.param << "\",\"value\":" << fmt_double(r.value)
            << ",\"algorithm\":\"" << r.algorithm << "\",\"trial\":" << r.trial
            << ",\"seed\":" << r.seed << ",\"status\":\"" << r.status
            << "\",\"objective_w\":" << fmt_double(r.objective_w) << ",\"objective_dbm\":"
            << (std::isfinite(r.objective_dbm) ? fmt_double(r.objective_dbm) : "null")
            << ",\"outer_iterations\":" << r.outer_iterations << '}'
            << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    out << "]\n";
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

double parse_double(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str()) throw std::invalid_argument("bad number in results: " + s);
    return v;
}

}  // namespace

std::vector<ResultRow> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != k_csv_header) {
        throw std::invalid_argument("results csv: bad or missing header");
    }
    std::vector<ResultRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> f = split_csv_line(line);
        if (f.size() != 9) throw std::invalid_argument("results csv: wrong field count");
        ResultRow r;
        r.param = f[0];
        r.value = parse_double(f[1]);
        r.algorithm = f[2];
        r.trial = static_cast<std::size_t>(std::stoull(f[3]));
        r.seed = std::stoull(f[4]);
        r.status = f[5];
        r.objective_w = parse_double(f[6]);
        r.objective_dbm = parse_double(f[7]);
        r.outer_iterations = static_cast<std::size_t>(std::stoull(f[8]));
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<ResultRow> read_json(std::istream& in) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("results json: ") + e.what());
    }
    if (!root.is_array()) throw std::invalid_argument("results json: expected an array");
    std::vector<ResultRow> rows;
    for (const auto& j : root) {
        ResultRow r;
        r.param = j.at("param").get<std::string>();
        r.value = j.at("value").get<double>();
        r.algorithm = j.at("algorithm").get<std::string>();
        r.trial = j.at("trial").get<std::size_t>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.status = j.at("status").get<std::string>();
        r.objective_w = j.at("objective_w").get<double>();
        const auto& dbm = j.at("objective_dbm");
        r.objective_dbm =
            dbm.is_null() ? -std::numeric_limits<double>::infinity() : dbm.get<double>();
        r.outer_iterations = j.at("outer_iterations").get<std::size_t>();
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace paswipt
