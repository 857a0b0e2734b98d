// SPDX-License-Identifier: Apache-2.0
// Pinching-antenna SWIPT toolkit: NOMA downlink model built on the channel.
#pragma once

#include <cstddef>
#include <vector>

#include "paswipt/channel.hpp"
#include "paswipt/scenario.hpp"

namespace paswipt {

struct ConstraintFlags {
    bool sinr = false;      // every info receiver meets the SINR floor
    bool energy = false;    // every energy receiver meets the harvest floor
    bool budget = false;    // num_antennas * sum(allocation) within power budget
    bool spacing = false;   // pairwise antenna spacing respected
    bool bounds = false;    // antennas inside [0, waveguide_length]
    bool order = false;     // aggregate gains non-decreasing along the order

    bool all() const { return sinr && energy && budget && spacing && bounds && order; }
};

struct SystemState {
    std::vector<double> ir_gain;       // |aggregate channel|^2 per info receiver
    std::vector<double> er_gain;       // same per energy receiver
    DecodingOrder order;               // SIC order implied by ir_gain
    std::vector<double> sinr;          // per info receiver, original indexing
    std::vector<double> harvested_w;   // per energy receiver
    double objective_w = 0.0;          // total harvested power
    ConstraintFlags flags;
};

// SIC decoding order: ascending aggregate gain, ties broken by lower index.
DecodingOrder decoding_order(const std::vector<double>& ir_gains);

// SINR of each info receiver when decoding follows `order`: receivers decoded
// later contribute interference to those decoded earlier.
std::vector<double> sinr_values(const std::vector<double>& ir_gains,
                                const PowerAllocation& alloc,
                                const DecodingOrder& order,
                                const std::vector<double>& noise_w);

// Harvested power at each energy receiver: total radiated per-antenna power
// times the aggregate gain.
std::vector<double> harvested_values(const std::vector<double>& er_gains,
                                     const PowerAllocation& alloc);

// Full evaluation of a (layout, allocation) pair against the scenario.  The
// decoding order is derived from the layout; `evaluate_with_order` instead
// checks a caller-supplied order for validity.
SystemState evaluate(const Scenario& s, const PaLayout& layout, const PowerAllocation& alloc);
SystemState evaluate_with_order(const Scenario& s, const PaLayout& layout,
                                const PowerAllocation& alloc, const DecodingOrder& order);

}  // namespace paswipt
