// SPDX-License-Identifier: Apache-2.0
#include "paswipt/scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "paswipt/rng.hpp"
#include "paswipt/system_model.hpp"

namespace paswipt {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::invalid_argument("scenario config: " + path + ": " + what);
}

// Object wrapper that errors on missing and unknown keys, with field paths.
class StrictObject {
  public:
    StrictObject(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) fail(path_, "expected an object");
    }

    const json& at(const char* key) {
        seen_.insert(key);
        const auto it = j_.find(key);
        if (it == j_.end()) fail(path_ + "." + key, "missing field");
        return *it;
    }

    const json* maybe(const char* key) {
        seen_.insert(key);
        const auto it = j_.find(key);
        return it == j_.end() ? nullptr : &*it;
    }

    bool has(const char* key) const { return j_.contains(key); }

    void finish() const {
        for (const auto& [key, value] : j_.items()) {
            (void)value;
            if (!seen_.count(key)) fail(path_ + "." + key, "unknown field");
        }
    }

    const std::string& path() const { return path_; }

  private:
    const json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

double as_number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

std::size_t as_count(const json& j, const std::string& path) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        fail(path, "expected a non-negative integer");
    }
    return j.get<std::size_t>();
}

Point3 as_point(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 3) fail(path, "expected [x, y, z]");
    return Point3{as_number(j[0], path + "[0]"), as_number(j[1], path + "[1]"),
                  as_number(j[2], path + "[2]")};
}

std::vector<Point3> as_points(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of points");
    std::vector<Point3> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(as_point(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

json point_list(const std::vector<Point3>& pts) {
    json arr = json::array();
    for (const Point3& p : pts) arr.push_back(json::array({p.x, p.y, p.z}));
    return arr;
}

}  // namespace

ScenarioConfig parse_scenario_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("scenario config: ") + e.what());
    }
    StrictObject o(root, "$");
    ScenarioConfig cfg;
    cfg.carrier_frequency_ghz = as_number(o.at("carrier_frequency_ghz"), "$.carrier_frequency_ghz");
    if (const json* v = o.maybe("propagation_speed_mps")) {
        cfg.propagation_speed_mps = as_number(*v, "$.propagation_speed_mps");
    }
    if (const json* v = o.maybe("effective_refractive_index")) {
        cfg.effective_refractive_index = as_number(*v, "$.effective_refractive_index");
    }
    cfg.waveguide_length_m = as_number(o.at("waveguide_length_m"), "$.waveguide_length_m");
    cfg.waveguide_height_m = as_number(o.at("waveguide_height_m"), "$.waveguide_height_m");
    cfg.feed_x_m = as_number(o.at("feed_x_m"), "$.feed_x_m");
    cfg.region_x_m = as_number(o.at("region_x_m"), "$.region_x_m");
    cfg.region_y_m = as_number(o.at("region_y_m"), "$.region_y_m");
    cfg.num_antennas = as_count(o.at("num_antennas"), "$.num_antennas");
    if (const json* v = o.maybe("min_spacing_wavelengths")) {
        cfg.min_spacing_wavelengths = as_number(*v, "$.min_spacing_wavelengths");
        if (cfg.min_spacing_wavelengths <= 0.0) {
            fail("$.min_spacing_wavelengths", "must be > 0");
        }
    }
    if (const json* v = o.maybe("min_spacing_m")) {
        cfg.min_spacing_m = as_number(*v, "$.min_spacing_m");
        if (cfg.min_spacing_m <= 0.0) fail("$.min_spacing_m", "must be > 0");
    }
    cfg.power_budget_dbm = as_number(o.at("power_budget_dbm"), "$.power_budget_dbm");
    cfg.sinr_floor_db = as_number(o.at("sinr_floor_db"), "$.sinr_floor_db");
    cfg.energy_floor_uw = as_number(o.at("energy_floor_uw"), "$.energy_floor_uw");
    cfg.noise_power_dbm = as_number(o.at("noise_power_dbm"), "$.noise_power_dbm");

    StrictObject r(o.at("receivers"), "$.receivers");
    if (r.has("random")) {
        StrictObject rr(r.at("random"), "$.receivers.random");
        cfg.receivers.random = true;
        cfg.receivers.count_info = as_count(rr.at("info"), "$.receivers.random.info");
        cfg.receivers.count_energy = as_count(rr.at("energy"), "$.receivers.random.energy");
        rr.finish();
    } else {
        cfg.receivers.info = as_points(r.at("info"), "$.receivers.info");
        cfg.receivers.energy = as_points(r.at("energy"), "$.receivers.energy");
    }
    r.finish();
    o.finish();
    return cfg;
}

ScenarioConfig load_scenario_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_config(buf.str());
}

Scenario materialize(const ScenarioConfig& cfg, std::uint64_t receiver_seed) {
    Scenario s;
    s.consts.carrier_frequency_hz = cfg.carrier_frequency_ghz * 1e9;
    s.consts.propagation_speed_mps = cfg.propagation_speed_mps;
    s.consts.effective_refractive_index = cfg.effective_refractive_index;
    s.waveguide_length_m = cfg.waveguide_length_m;
    s.waveguide_height_m = cfg.waveguide_height_m;
    s.feed_x_m = cfg.feed_x_m;
    s.region_x_m = cfg.region_x_m;
    s.region_y_m = cfg.region_y_m;
    s.num_antennas = cfg.num_antennas;
    s.min_spacing_m = cfg.min_spacing_m > 0.0
                          ? cfg.min_spacing_m
                          : cfg.min_spacing_wavelengths * s.consts.wavelength_m();
    s.power_budget_w = dbm_to_watts(cfg.power_budget_dbm);
    s.sinr_floor = db_to_linear(cfg.sinr_floor_db);
    s.energy_floor_w = cfg.energy_floor_uw * 1e-6;

    if (cfg.receivers.random) {
        std::mt19937_64 rng(receiver_seed);
        auto draw = [&](std::size_t n) {
            std::vector<Point3> pts(n);
            for (Point3& p : pts) {
                p.x = uniform01(rng) * s.region_x_m;
                p.y = (uniform01(rng) - 0.5) * s.region_y_m;
                p.z = 0.0;
            }
            return pts;
        };
        s.info_receivers = draw(cfg.receivers.count_info);
        s.energy_receivers = draw(cfg.receivers.count_energy);
    } else {
        s.info_receivers = cfg.receivers.info;
        s.energy_receivers = cfg.receivers.energy;
    }
    s.noise_power_w.assign(s.info_receivers.size(), dbm_to_watts(cfg.noise_power_dbm));
    return s;
}

Scenario parse_scenario(const std::string& path, std::uint64_t receiver_seed) {
    const Scenario s = materialize(load_scenario_config(path), receiver_seed);
    validate(s);
    return s;
}

std::string serialize_scenario(const Scenario& s) {
    json j;
    j["carrier_frequency_hz"] = s.consts.carrier_frequency_hz;
    j["propagation_speed_mps"] = s.consts.propagation_speed_mps;
    j["effective_refractive_index"] = s.consts.effective_refractive_index;
    j["waveguide_length_m"] = s.waveguide_length_m;
    j["waveguide_height_m"] = s.waveguide_height_m;
    j["feed_x_m"] = s.feed_x_m;
    j["region_x_m"] = s.region_x_m;
    j["region_y_m"] = s.region_y_m;
    j["num_antennas"] = s.num_antennas;
    j["min_spacing_m"] = s.min_spacing_m;
    j["info_receivers"] = point_list(s.info_receivers);
    j["energy_receivers"] = point_list(s.energy_receivers);
    j["power_budget_w"] = s.power_budget_w;
    j["sinr_floor"] = s.sinr_floor;
    j["energy_floor_w"] = s.energy_floor_w;
    j["noise_power_w"] = s.noise_power_w;
    return j.dump(2);
}

Scenario parse_scenario_si(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("scenario: ") + e.what());
    }
    StrictObject o(root, "$");
    Scenario s;
    s.consts.carrier_frequency_hz = as_number(o.at("carrier_frequency_hz"), "$.carrier_frequency_hz");
    s.consts.propagation_speed_mps =
        as_number(o.at("propagation_speed_mps"), "$.propagation_speed_mps");
    s.consts.effective_refractive_index =
        as_number(o.at("effective_refractive_index"), "$.effective_refractive_index");
    s.waveguide_length_m = as_number(o.at("waveguide_length_m"), "$.waveguide_length_m");
    s.waveguide_height_m = as_number(o.at("waveguide_height_m"), "$.waveguide_height_m");
    s.feed_x_m = as_number(o.at("feed_x_m"), "$.feed_x_m");
    s.region_x_m = as_number(o.at("region_x_m"), "$.region_x_m");
    s.region_y_m = as_number(o.at("region_y_m"), "$.region_y_m");
    s.num_antennas = as_count(o.at("num_antennas"), "$.num_antennas");
    s.min_spacing_m = as_number(o.at("min_spacing_m"), "$.min_spacing_m");
    s.info_receivers = as_points(o.at("info_receivers"), "$.info_receivers");
    s.energy_receivers = as_points(o.at("energy_receivers"), "$.energy_receivers");
    s.power_budget_w = as_number(o.at("power_budget_w"), "$.power_budget_w");
    s.sinr_floor = as_number(o.at("sinr_floor"), "$.sinr_floor");
    s.energy_floor_w = as_number(o.at("energy_floor_w"), "$.energy_floor_w");
    const json& noise = o.at("noise_power_w");
    if (!noise.is_array()) fail("$.noise_power_w", "expected an array");
    s.noise_power_w.clear();
    for (std::size_t i = 0; i < noise.size(); ++i) {
        s.noise_power_w.push_back(as_number(noise[i], "$.noise_power_w[" + std::to_string(i) + "]"));
    }
    o.finish();
    return s;
}

namespace {

json report_object(const Scenario& s, const std::string& algorithm, const SolveReport& rep) {
    json j;
    j["scenario"] = json::parse(serialize_scenario(s));
    j["algorithm"] = algorithm;
    j["status"] = to_string(rep.status);
    j["layout_m"] = rep.layout;
    j["allocation_w"] = rep.allocation;
    j["objective_w"] = rep.objective_w;
    // Non-finite doubles serialize as null (an infeasible run has no dBm value).
    j["objective_dbm"] = rep.objective_w > 0.0 ? watts_to_dbm(rep.objective_w)
                                               : -std::numeric_limits<double>::infinity();
    j["ir_sinr"] = rep.ir_sinr;
    j["er_harvested_w"] = rep.er_harvested_w;
    j["trajectory_w"] = rep.trajectory_w;
    j["outer_iterations"] = rep.outer_iterations;
    j["restarts_used"] = rep.restarts_used;
    return j;
}

}  // namespace

std::string report_to_json(const Scenario& s, const std::string& algorithm,
                           const SolveReport& rep) {
    return report_object(s, algorithm, rep).dump(2);
}

std::string reports_to_json(const Scenario& s,
                            const std::vector<std::pair<std::string, SolveReport>>& reports) {
    json arr = json::array();
    for (const auto& [algorithm, rep] : reports) {
        arr.push_back(report_object(s, algorithm, rep));
    }
    return arr.dump(2);
}

namespace {

bool validate_report_object(const json& root, std::string& message) {
    try {
        StrictObject o(root, "$");
        const Scenario s = parse_scenario_si(o.at("scenario").dump());
        validate(s);
        const std::string algorithm = o.at("algorithm").get<std::string>();
        const std::string status = o.at("status").get<std::string>();
        const json& jl = o.at("layout_m");
        const json& ja = o.at("allocation_w");
        const double objective = as_number(o.at("objective_w"), "$.objective_w");
        o.maybe("objective_dbm");
        o.maybe("ir_sinr");
        o.maybe("er_harvested_w");
        o.maybe("trajectory_w");
        o.maybe("outer_iterations");
        o.maybe("restarts_used");
        o.finish();

        if (status == "infeasible") {
            message = "ok (infeasible report, nothing to re-evaluate)";
            return true;
        }
        PaLayout layout = jl.get<PaLayout>();
        PowerAllocation alloc = ja.get<PowerAllocation>();
        // The fixed-antenna baseline reports against a single-antenna variant
        // of the embedded scenario.
        Scenario eval_scenario = s;
        if (algorithm == "fixed") eval_scenario.num_antennas = 1;
        const SystemState st = evaluate(eval_scenario, layout, alloc);
        const double scale = std::max({1.0, std::fabs(objective), std::fabs(st.objective_w)});
        if (std::fabs(st.objective_w - objective) > 1e-9 * scale) {
            std::ostringstream os;
            os << "objective mismatch: stored " << objective << ", re-evaluated "
               << st.objective_w;
            message = os.str();
            return false;
        }
        if (!st.flags.all()) {
            message = "stored solution violates constraints on re-evaluation";
            return false;
        }
        message = "ok";
        return true;
    } catch (const std::exception& e) {
        message = e.what();
        return false;
    }
}

}  // namespace

bool validate_report_json(const std::string& json_text, std::string& message) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        message = std::string("report parse error: ") + e.what();
        return false;
    }
    // A solve over several algorithms writes an array of reports; accept both shapes.
    if (root.is_array()) {
        if (root.empty()) {
            message = "empty report array";
            return false;
        }
        for (std::size_t i = 0; i < root.size(); ++i) {
            std::string entry_message;
            if (!validate_report_object(root[i], entry_message)) {
                message = "entry " + std::to_string(i) + ": " + entry_message;
                return false;
            }
        }
        message = "ok (" + std::to_string(root.size()) + " reports)";
        return true;
    }
    return validate_report_object(root, message);
}

}  // namespace paswipt
