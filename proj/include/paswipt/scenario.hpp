// SPDX-License-Identifier: Apache-2.0
// Pinching-antenna SWIPT toolkit: scenario description and validation.
#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

#include "paswipt/geometry.hpp"

namespace paswipt {

// Feasibility slack applied uniformly when checking constraints: relative
// slack for the SINR / harvested-energy / power-budget inequalities, absolute
// slack in meters for antenna spacing and waveguide bounds.
inline constexpr double k_rel_slack = 1e-9;
inline constexpr double k_abs_slack_m = 1e-12;

struct PhysicalConstants {
    double carrier_frequency_hz = 28e9;
    double propagation_speed_mps = 3e8;
    double effective_refractive_index = 1.4;

    double wavelength_m() const { return propagation_speed_mps / carrier_frequency_hz; }
    double guided_wavelength_m() const { return wavelength_m() / effective_refractive_index; }
    // Free-space amplitude constant: |h| = amplitude_constant / r.
    double amplitude_constant() const {
        return propagation_speed_mps / (4.0 * std::numbers::pi * carrier_frequency_hz);
    }
};

// One waveguide along the x axis at height z = waveguide_height_m, feed at
// x = feed_x_m, pinching antennas at (x_m, 0, waveguide_height_m).  Receivers
// lie in the z = 0 plane inside [0, region_x_m] x [-region_y_m/2, region_y_m/2].
struct Scenario {
    PhysicalConstants consts;

    double waveguide_length_m = 10.0;
    double waveguide_height_m = 3.0;
    double feed_x_m = 0.0;
    double region_x_m = 10.0;
    double region_y_m = 6.0;

    std::size_t num_antennas = 4;
    double min_spacing_m = 0.0;  // 0 means "use half a wavelength"

    std::vector<Point3> info_receivers;
    std::vector<Point3> energy_receivers;

    double power_budget_w = 10.0;
    double sinr_floor = 31.6227766016837933;      // 15 dB
    double energy_floor_w = 1e-7;                 // 0.1 uW
    std::vector<double> noise_power_w;            // per info receiver

    double spacing_m() const {
        return min_spacing_m > 0.0 ? min_spacing_m : 0.5 * consts.wavelength_m();
    }
    std::size_t num_info() const { return info_receivers.size(); }
    std::size_t num_energy() const { return energy_receivers.size(); }
};

// Antenna x positions along the waveguide, one entry per antenna.
using PaLayout = std::vector<double>;

// Per-antenna transmit power toward each info receiver, in watts; every
// antenna radiates the same per-receiver power, so the vector is indexed by
// info receiver only and the radiated total is num_antennas * sum(allocation).
using PowerAllocation = std::vector<double>;

// Permutation of info-receiver indices, earliest decoded first.
using DecodingOrder = std::vector<std::size_t>;

// Throws std::invalid_argument naming the offending field.
void validate(const Scenario& s);

// Uniformly spread layout used as the deterministic starting point:
// x_m = (m + 0.5) * waveguide_length / num_antennas.
PaLayout uniform_layout(const Scenario& s);

bool layout_within_bounds(const Scenario& s, const PaLayout& layout);
bool layout_spacing_ok(const Scenario& s, const PaLayout& layout);

}  // namespace paswipt
