// SPDX-License-Identifier: Apache-2.0
#include "paswipt/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace paswipt {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("scenario: " + what);
}

void check_receiver(const Scenario& s, const Point3& p, const std::string& name) {
    require(std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z),
            name + " has non-finite coordinates");
    require(p.x >= 0.0 && p.x <= s.region_x_m, name + ".x outside [0, region_x_m]");
    require(std::fabs(p.y) <= 0.5 * s.region_y_m, name + ".y outside [-region_y_m/2, region_y_m/2]");
    require(p.z == 0.0, name + ".z must be 0 (receivers lie in the ground plane)");
}

}  // namespace

void validate(const Scenario& s) {
    require(s.consts.carrier_frequency_hz > 0.0, "consts.carrier_frequency_hz must be > 0");
    require(s.consts.propagation_speed_mps > 0.0, "consts.propagation_speed_mps must be > 0");
    require(s.consts.effective_refractive_index >= 1.0,
            "consts.effective_refractive_index must be >= 1");
    require(s.waveguide_length_m > 0.0, "waveguide_length_m must be > 0");
    require(s.waveguide_height_m > 0.0, "waveguide_height_m must be > 0");
    require(s.feed_x_m >= 0.0 && s.feed_x_m <= s.waveguide_length_m,
            "feed_x_m outside [0, waveguide_length_m]");
    require(s.region_x_m > 0.0, "region_x_m must be > 0");
    require(s.region_y_m > 0.0, "region_y_m must be > 0");
    require(s.num_antennas >= 1, "num_antennas must be >= 1");
    require(s.min_spacing_m >= 0.0, "min_spacing_m must be >= 0");
    require(static_cast<double>(s.num_antennas) * s.spacing_m() <= s.waveguide_length_m,
            "num_antennas * spacing exceeds waveguide_length_m");
    require(!s.info_receivers.empty(), "info_receivers must be non-empty");
    require(!s.energy_receivers.empty(), "energy_receivers must be non-empty");
    for (std::size_t i = 0; i < s.info_receivers.size(); ++i) {
        check_receiver(s, s.info_receivers[i], "info_receivers[" + std::to_string(i) + "]");
    }
    for (std::size_t j = 0; j < s.energy_receivers.size(); ++j) {
        check_receiver(s, s.energy_receivers[j], "energy_receivers[" + std::to_string(j) + "]");
    }
    require(s.power_budget_w > 0.0, "power_budget_w must be > 0");
    require(s.sinr_floor > 0.0, "sinr_floor must be > 0");
    require(s.energy_floor_w >= 0.0, "energy_floor_w must be >= 0");
    require(s.noise_power_w.size() == s.info_receivers.size(),
            "noise_power_w must have one entry per info receiver");
    for (std::size_t i = 0; i < s.noise_power_w.size(); ++i) {
        require(s.noise_power_w[i] > 0.0, "noise_power_w[" + std::to_string(i) + "] must be > 0");
    }
}

PaLayout uniform_layout(const Scenario& s) {
    PaLayout xs(s.num_antennas);
    for (std::size_t m = 0; m < s.num_antennas; ++m) {
        xs[m] = (static_cast<double>(m) + 0.5) * s.waveguide_length_m /
                static_cast<double>(s.num_antennas);
    }
    return xs;
}

bool layout_within_bounds(const Scenario& s, const PaLayout& layout) {
    for (double x : layout) {
        if (!(x >= -k_abs_slack_m && x <= s.waveguide_length_m + k_abs_slack_m)) return false;
    }
    return true;
}

bool layout_spacing_ok(const Scenario& s, const PaLayout& layout) {
    const double delta = s.spacing_m();
    for (std::size_t a = 0; a < layout.size(); ++a) {
        for (std::size_t b = a + 1; b < layout.size(); ++b) {
            if (std::fabs(layout[a] - layout[b]) < delta - k_abs_slack_m) return false;
        }
    }
    return true;
}

}  // namespace paswipt
