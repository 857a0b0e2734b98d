// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "paswipt/scenario_io.hpp"

#include "test_util.hpp"

using paswipt::Scenario;
using paswipt::ScenarioConfig;
using paswipt::dbm_to_watts;
using paswipt::db_to_linear;
using paswipt::materialize;
using paswipt::parse_scenario_config;
using paswipt::parse_scenario_si;
using paswipt::report_to_json;
using paswipt::serialize_scenario;
using paswipt::validate_report_json;
using paswipt::watts_to_dbm;

namespace {

const char* k_minimal_json = R"({
  "carrier_frequency_ghz": 28.0,
  "waveguide_length_m": 10.0,
  "waveguide_height_m": 3.0,
  "feed_x_m": 0.0,
  "region_x_m": 10.0,
  "region_y_m": 6.0,
  "num_antennas": 4,
  "power_budget_dbm": 40.0,
  "sinr_floor_db": 15.0,
  "energy_floor_uw": 0.1,
  "noise_power_dbm": -90.0,
  "receivers": {"random": {"info": 2, "energy": 2}}
})";

void check_throws_mentioning(const std::string& text, const std::string& needle) {
    try {
        (void)parse_scenario_config(text);
        FAIL_CHECK("expected parse failure mentioning '" << needle << "'");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
}

std::string with_field(const std::string& base, const char* key, const char* raw_value) {
    nlohmann::json j = nlohmann::json::parse(base);
    j[key] = nlohmann::json::parse(raw_value);
    return j.dump();
}

std::string without_field(const std::string& base, const char* key) {
    nlohmann::json j = nlohmann::json::parse(base);
    j.erase(key);
    return j.dump();
}

}  // namespace

TEST_CASE("decibel conversions match their definitions") {
    CHECK(dbm_to_watts(40.0) == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(dbm_to_watts(30.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(dbm_to_watts(-90.0) == doctest::Approx(1e-12).epsilon(1e-15));
    CHECK(db_to_linear(15.0) == doctest::Approx(31.6228).epsilon(1e-4));
    CHECK(db_to_linear(15.0) == doctest::Approx(31.6227766016837933).epsilon(1e-12));
    CHECK(watts_to_dbm(10.0) == doctest::Approx(40.0).epsilon(1e-12));
    for (double dbm : {-100.0, -30.0, 0.0, 17.5, 40.0})
        CHECK(watts_to_dbm(dbm_to_watts(dbm)) == doctest::Approx(dbm).epsilon(1e-12));
}

TEST_CASE("minimal config parses with documented defaults") {
    const ScenarioConfig cfg = parse_scenario_config(k_minimal_json);
    CHECK(cfg.carrier_frequency_ghz == 28.0);
    CHECK(cfg.propagation_speed_mps == 3e8);           // default
    CHECK(cfg.effective_refractive_index == 1.4);      // default
    CHECK(cfg.min_spacing_wavelengths == 0.5);         // default
    CHECK(cfg.min_spacing_m == 0.0);                   // unset
    CHECK(cfg.num_antennas == 4);
    CHECK(cfg.receivers.random);
    CHECK(cfg.receivers.count_info == 2);
    CHECK(cfg.receivers.count_energy == 2);
}

TEST_CASE("strict parsing reports missing and unknown fields by path") {
    check_throws_mentioning(without_field(k_minimal_json, "region_x_m"), "$.region_x_m");
    check_throws_mentioning(with_field(k_minimal_json, "unexpected_knob", "1"),
                            "$.unexpected_knob");
    check_throws_mentioning(with_field(k_minimal_json, "receivers", R"({"info": 1})"),
                            "$.receivers.info");  // explicit list must be points
    check_throws_mentioning(with_field(k_minimal_json, "min_spacing_wavelengths", "0"),
                            "$.min_spacing_wavelengths");
    check_throws_mentioning(with_field(k_minimal_json, "min_spacing_m", "-1.0"),
                            "$.min_spacing_m");
    check_throws_mentioning(with_field(k_minimal_json, "num_antennas", "-3"),
                            "$.num_antennas");
    check_throws_mentioning("not json at all", "scenario config");
    check_throws_mentioning(
        with_field(k_minimal_json, "receivers",
                   R"({"info": [[1, 2]], "energy": []})"),
        "$.receivers.info[0]");
}

TEST_CASE("materialize converts figure units to SI exactly once") {
    const ScenarioConfig cfg = parse_scenario_config(k_minimal_json);
    const Scenario s = materialize(cfg, 1);
    CHECK(s.consts.carrier_frequency_hz == 28e9);
    CHECK(s.power_budget_w == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(s.sinr_floor == doctest::Approx(31.6227766016837933).epsilon(1e-12));
    CHECK(s.energy_floor_w == doctest::Approx(1e-7).epsilon(1e-15));
    REQUIRE(s.noise_power_w.size() == 2);
    CHECK(s.noise_power_w[0] == doctest::Approx(1e-12).epsilon(1e-15));
    CHECK(s.min_spacing_m == doctest::Approx(0.5 * 3e8 / 28e9).epsilon(1e-15));
    CHECK(s.spacing_m() == s.min_spacing_m);
}

TEST_CASE("random receivers are seed-deterministic and inside the region") {
    const ScenarioConfig cfg = parse_scenario_config(k_minimal_json);
    const Scenario a = materialize(cfg, 42);
    const Scenario b = materialize(cfg, 42);
    const Scenario c = materialize(cfg, 43);
    REQUIRE(a.info_receivers.size() == 2);
    REQUIRE(a.energy_receivers.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(a.info_receivers[i].x == b.info_receivers[i].x);
        CHECK(a.info_receivers[i].y == b.info_receivers[i].y);
        CHECK(a.energy_receivers[i].x == b.energy_receivers[i].x);
        CHECK(a.energy_receivers[i].y == b.energy_receivers[i].y);
    }
    bool any_differs = false;
    for (std::size_t i = 0; i < 2; ++i)
        any_differs |= (a.info_receivers[i].x != c.info_receivers[i].x);
    CHECK(any_differs);
    for (const auto& list : {a.info_receivers, a.energy_receivers}) {
        for (const paswipt::Point3& p : list) {
            CHECK(p.x >= 0.0);
            CHECK(p.x <= a.region_x_m);
            CHECK(std::fabs(p.y) <= a.region_y_m / 2.0);
            CHECK(p.z == 0.0);
        }
    }
}

TEST_CASE("sampler draws info receivers before energy receivers") {
    ScenarioConfig cfg = parse_scenario_config(k_minimal_json);
    const Scenario split = materialize(cfg, 7);
    cfg.receivers.count_info = 4;
    cfg.receivers.count_energy = 0;
    const Scenario merged = materialize(cfg, 7);
    // Same stream, different labeling: the first two points coincide and the
    // energy receivers continue where the info draw stopped.
    CHECK(merged.info_receivers[0].x == split.info_receivers[0].x);
    CHECK(merged.info_receivers[1].y == split.info_receivers[1].y);
    CHECK(merged.info_receivers[2].x == split.energy_receivers[0].x);
    CHECK(merged.info_receivers[3].y == split.energy_receivers[1].y);
}

TEST_CASE("explicit receivers ignore the seed") {
    const Scenario a = testutil::fixed_scenario();
    paswipt::ScenarioConfig cfg = testutil::default_config();
    cfg.receivers.random = false;
    cfg.receivers.info = {{2.0, 1.5, 0.0}, {7.0, -2.0, 0.0}};
    cfg.receivers.energy = {{4.0, -1.0, 0.0}, {5.0, 1.0, 0.0}};
    const Scenario b = materialize(cfg, 999);
    CHECK(a.info_receivers[0].x == b.info_receivers[0].x);
    CHECK(a.energy_receivers[1].y == b.energy_receivers[1].y);
}

TEST_CASE("scenario files load from disk and validate") {
    const std::string path = "/tmp/paswipt_test_scenario.json";
    {
        std::ofstream out(path);
        out << k_minimal_json;
    }
    const Scenario s = paswipt::parse_scenario(path, 5);
    CHECK(s.num_antennas == 4);
    CHECK(s.num_info() == 2);
    std::remove(path.c_str());
    CHECK_THROWS_AS(paswipt::parse_scenario(path, 5), std::runtime_error);
}

TEST_CASE("scenario validation rejects inconsistent setups") {
    Scenario s = testutil::fixed_scenario();
    SUBCASE("no antennas") {
        s.num_antennas = 0;
        CHECK_THROWS_AS(paswipt::validate(s), std::invalid_argument);
    }
    SUBCASE("antennas cannot fit at minimum spacing") {
        s.num_antennas = 4000;
        CHECK_THROWS_AS(paswipt::validate(s), std::invalid_argument);
    }
    SUBCASE("receiver outside the region") {
        s.info_receivers[0].x = 99.0;
        CHECK_THROWS_AS(paswipt::validate(s), std::invalid_argument);
    }
    SUBCASE("receiver off the ground plane") {
        s.energy_receivers[0].z = 1.0;
        CHECK_THROWS_AS(paswipt::validate(s), std::invalid_argument);
    }
    SUBCASE("noise vector length mismatch") {
        s.noise_power_w.pop_back();
        CHECK_THROWS_AS(paswipt::validate(s), std::invalid_argument);
    }
}

TEST_CASE("SI serialization round-trips bit-exactly") {
    const Scenario s = testutil::fixed_scenario();
    const Scenario t = parse_scenario_si(serialize_scenario(s));
    CHECK(t.consts.carrier_frequency_hz == s.consts.carrier_frequency_hz);
    CHECK(t.consts.propagation_speed_mps == s.consts.propagation_speed_mps);
    CHECK(t.consts.effective_refractive_index == s.consts.effective_refractive_index);
    CHECK(t.waveguide_length_m == s.waveguide_length_m);
    CHECK(t.waveguide_height_m == s.waveguide_height_m);
    CHECK(t.feed_x_m == s.feed_x_m);
    CHECK(t.region_x_m == s.region_x_m);
    CHECK(t.region_y_m == s.region_y_m);
    CHECK(t.num_antennas == s.num_antennas);
    CHECK(t.min_spacing_m == s.min_spacing_m);
    CHECK(t.power_budget_w == s.power_budget_w);
    CHECK(t.sinr_floor == s.sinr_floor);
    CHECK(t.energy_floor_w == s.energy_floor_w);
    REQUIRE(t.info_receivers.size() == s.info_receivers.size());
    REQUIRE(t.energy_receivers.size() == s.energy_receivers.size());
    for (std::size_t i = 0; i < s.info_receivers.size(); ++i) {
        CHECK(t.info_receivers[i].x == s.info_receivers[i].x);
        CHECK(t.info_receivers[i].y == s.info_receivers[i].y);
        CHECK(t.info_receivers[i].z == s.info_receivers[i].z);
    }
    CHECK(t.noise_power_w == s.noise_power_w);
}

TEST_CASE("reports serialize deterministically and validate") {
    const Scenario s = testutil::fixed_scenario();
    paswipt::AlternationConfig cfg;
    cfg.elementwise.grid_points = 512;
    const paswipt::SolveReport rep = paswipt::alternate(s, cfg);
    REQUIRE(rep.status == paswipt::SolveStatus::converged);

    const std::string a = report_to_json(s, "elementwise", rep);
    const std::string b = report_to_json(s, "elementwise", rep);
    CHECK(a == b);  // wall time is kept out of the serialization

    std::string msg;
    CHECK(validate_report_json(a, msg));
    CHECK(msg == "ok");

    nlohmann::json j = nlohmann::json::parse(a);
    CHECK(j["status"] == "converged");
    CHECK(j["objective_dbm"].get<double>() ==
          doctest::Approx(watts_to_dbm(rep.objective_w)).epsilon(1e-12));
    CHECK(j["outer_iterations"].get<std::size_t>() == rep.outer_iterations);

    SUBCASE("tampered objective is rejected") {
        j["objective_w"] = rep.objective_w * 1.01;
        CHECK_FALSE(validate_report_json(j.dump(), msg));
        CHECK(msg.find("objective mismatch") != std::string::npos);
    }
    SUBCASE("tampered layout is rejected") {
        j["layout_m"][0] = 0.0;
        j["layout_m"][1] = 0.0;  // also breaks spacing
        CHECK_FALSE(validate_report_json(j.dump(), msg));
    }
    SUBCASE("unknown report fields are rejected") {
        j["surprise"] = 1;
        CHECK_FALSE(validate_report_json(j.dump(), msg));
        CHECK(msg.find("surprise") != std::string::npos);
    }
}

TEST_CASE("fixed-baseline reports validate against the embedded scenario") {
    const Scenario s = testutil::fixed_scenario();
    const paswipt::SolveReport rep = paswipt::baseline_fixed(s);
    REQUIRE(rep.status == paswipt::SolveStatus::converged);
    std::string msg;
    CHECK(validate_report_json(report_to_json(s, "fixed", rep), msg));
    CHECK(msg == "ok");
}

TEST_CASE("multi-run reports form one JSON array and validate as a whole") {
    const Scenario s = testutil::fixed_scenario();
    paswipt::AlternationConfig ew_cfg;
    ew_cfg.elementwise.grid_points = 512;
    paswipt::AlternationConfig pso_cfg;
    pso_cfg.algo = paswipt::PositionAlgo::pso;
    pso_cfg.pso.max_iters = 40;
    const paswipt::SolveReport ew = paswipt::alternate(s, ew_cfg);
    const paswipt::SolveReport pso = paswipt::alternate(s, pso_cfg);
    REQUIRE(ew.status == paswipt::SolveStatus::converged);
    REQUIRE(pso.status == paswipt::SolveStatus::converged);

    const std::string text =
        paswipt::reports_to_json(s, {{"elementwise", ew}, {"pso", pso}});
    nlohmann::json arr = nlohmann::json::parse(text);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 2);
    CHECK(arr[0]["algorithm"] == "elementwise");
    CHECK(arr[1]["algorithm"] == "pso");

    std::string msg;
    CHECK(validate_report_json(text, msg));
    CHECK(msg == "ok (2 reports)");

    SUBCASE("a tampered entry is rejected with its index") {
        arr[1]["objective_w"] = pso.objective_w * 2.0;
        CHECK_FALSE(validate_report_json(arr.dump(), msg));
        CHECK(msg.find("entry 1") != std::string::npos);
    }
    SUBCASE("an empty array is rejected") {
        CHECK_FALSE(validate_report_json("[]", msg));
        CHECK(msg.find("empty") != std::string::npos);
    }
}

TEST_CASE("infeasible reports serialize with a null dBm objective") {
    Scenario s = testutil::fixed_scenario();
    s.energy_floor_w = 1.0;  // out of reach
    paswipt::AlternationConfig cfg;
    cfg.elementwise.grid_points = 256;
    cfg.restarts = 1;
    const paswipt::SolveReport rep = paswipt::alternate(s, cfg);
    REQUIRE(rep.status == paswipt::SolveStatus::infeasible);
    const std::string text = report_to_json(s, "elementwise", rep);
    nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j["objective_dbm"].is_null());
    CHECK(j["objective_w"].get<double>() == 0.0);
    std::string msg;
    CHECK(validate_report_json(text, msg));
    CHECK(msg.find("infeasible") != std::string::npos);
}
