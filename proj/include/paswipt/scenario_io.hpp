// SPDX-License-Identifier: Apache-2.0
// Pinching-antenna SWIPT toolkit: scenario files, reports, unit conversions.
#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "paswipt/driver.hpp"
#include "paswipt/scenario.hpp"

namespace paswipt {

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// Receiver placement: either explicit ground-plane coordinates or a seeded
// uniform sampler over the region (x in [0, region_x], y centered on the
// waveguide, z = 0).  The sampler draws info receivers first, then energy
// receivers, x before y for each.
struct ReceiverSpec {
    bool random = false;
    std::vector<Point3> info;
    std::vector<Point3> energy;
    std::size_t count_info = 0;
    std::size_t count_energy = 0;
};

// Mirrors the scenario file: figure units (GHz, dBm, dB, uW) at the boundary,
// converted to SI exactly once in materialize().
struct ScenarioConfig {
    double carrier_frequency_ghz = 28.0;
    double propagation_speed_mps = 3e8;
    double effective_refractive_index = 1.4;
    double waveguide_length_m = 10.0;
    double waveguide_height_m = 3.0;
    double feed_x_m = 0.0;
    double region_x_m = 10.0;
    double region_y_m = 6.0;
    std::size_t num_antennas = 4;
    double min_spacing_wavelengths = 0.5;  // used unless min_spacing_m > 0
    double min_spacing_m = 0.0;
    double power_budget_dbm = 40.0;
    double sinr_floor_db = 15.0;
    double energy_floor_uw = 0.1;
    double noise_power_dbm = -90.0;
    ReceiverSpec receivers;
};

// Strict parse: unknown or missing fields raise std::invalid_argument with
// the field path.
ScenarioConfig parse_scenario_config(const std::string& json_text);
ScenarioConfig load_scenario_config(const std::string& path);

// Converts units, resolves the spacing and samples receivers if requested.
// Explicit receiver lists ignore the seed.
Scenario materialize(const ScenarioConfig& cfg, std::uint64_t receiver_seed);

// Convenience: load + materialize + validate.
Scenario parse_scenario(const std::string& path, std::uint64_t receiver_seed = 0);

// SI-unit echo of a materialized scenario (explicit receivers), used inside
// reports; parse_scenario_si() is its exact inverse.
std::string serialize_scenario(const Scenario& s);
Scenario parse_scenario_si(const std::string& json_text);

// Solve report serialization.  Wall time is deliberately not stored so that
// identical inputs produce identical bytes.
std::string report_to_json(const Scenario& s, const std::string& algorithm,
                           const SolveReport& rep);

// Several runs against the same scenario as one JSON array of reports,
// (algorithm, report) pairs in order.
std::string reports_to_json(const Scenario& s,
                            const std::vector<std::pair<std::string, SolveReport>>& reports);

// Parses a report (single object or array of them), re-evaluates each
// (layout, allocation) against the embedded scenario and checks the stored
// objective and constraint flags.  Returns true when everything matches;
// otherwise false with an explanation.
bool validate_report_json(const std::string& json_text, std::string& message);

}  // namespace paswipt
