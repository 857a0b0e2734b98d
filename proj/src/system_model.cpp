// SPDX-License-Identifier: Apache-2.0
#include "paswipt/system_model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace paswipt {

DecodingOrder decoding_order(const std::vector<double>& ir_gains) {
    DecodingOrder order(ir_gains.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return ir_gains[a] < ir_gains[b]; });
    return order;
}

std::vector<double> sinr_values(const std::vector<double>& ir_gains,
                                const PowerAllocation& alloc,
                                const DecodingOrder& order,
                                const std::vector<double>& noise_w) {
    const std::size_t k = ir_gains.size();
    if (alloc.size() != k || order.size() != k || noise_w.size() != k) {
        throw std::invalid_argument("sinr_values: mismatched sizes");
    }
    std::vector<double> out(k, 0.0);
    // Walk the order backwards, accumulating the power of yet-undecoded users.
    double undecoded = 0.0;
    for (std::size_t pos = k; pos-- > 0;) {
        const std::size_t i = order[pos];
        out[i] = alloc[i] * ir_gains[i] / (ir_gains[i] * undecoded + noise_w[i]);
        undecoded += alloc[i];
    }
    return out;
}

std::vector<double> harvested_values(const std::vector<double>& er_gains,
                                     const PowerAllocation& alloc) {
    const double total = std::accumulate(alloc.begin(), alloc.end(), 0.0);
    std::vector<double> out;
    out.reserve(er_gains.size());
    for (double g : er_gains) {
        out.push_back(total * g);
    }
    return out;
}

namespace {

bool order_valid(const std::vector<double>& gains, const DecodingOrder& order) {
    if (order.size() != gains.size()) return false;
    std::vector<bool> seen(gains.size(), false);
    for (std::size_t i : order) {
        if (i >= gains.size() || seen[i]) return false;
        seen[i] = true;
    }
    for (std::size_t pos = 0; pos + 1 < order.size(); ++pos) {
        if (gains[order[pos]] > gains[order[pos + 1]] * (1.0 + k_rel_slack)) return false;
    }
    return true;
}

}  // namespace

SystemState evaluate_with_order(const Scenario& s, const PaLayout& layout,
                                const PowerAllocation& alloc, const DecodingOrder& order) {
    if (layout.size() != s.num_antennas) {
        throw std::invalid_argument("evaluate: layout size != num_antennas");
    }
    if (alloc.size() != s.num_info()) {
        throw std::invalid_argument("evaluate: allocation size != number of info receivers");
    }
    SystemState st;
    st.ir_gain = aggregate_gains(s, layout, s.info_receivers);
    st.er_gain = aggregate_gains(s, layout, s.energy_receivers);
    st.order = order;
    st.sinr = sinr_values(st.ir_gain, alloc, order, s.noise_power_w);
    st.harvested_w = harvested_values(st.er_gain, alloc);
    st.objective_w = std::accumulate(st.harvested_w.begin(), st.harvested_w.end(), 0.0);

    const double total = std::accumulate(alloc.begin(), alloc.end(), 0.0);
    st.flags.sinr = std::all_of(st.sinr.begin(), st.sinr.end(), [&](double v) {
        return v >= s.sinr_floor * (1.0 - k_rel_slack);
    });
    st.flags.energy = std::all_of(st.harvested_w.begin(), st.harvested_w.end(), [&](double v) {
        return v >= s.energy_floor_w * (1.0 - k_rel_slack);
    });
    st.flags.budget = static_cast<double>(s.num_antennas) * total <=
                          s.power_budget_w * (1.0 + k_rel_slack) &&
                      std::all_of(alloc.begin(), alloc.end(), [](double p) { return p >= 0.0; });
    st.flags.spacing = layout_spacing_ok(s, layout);
    st.flags.bounds = layout_within_bounds(s, layout);
    st.flags.order = order_valid(st.ir_gain, order);
    return st;
}

SystemState evaluate(const Scenario& s, const PaLayout& layout, const PowerAllocation& alloc) {
    const std::vector<double> gains = aggregate_gains(s, layout, s.info_receivers);
    return evaluate_with_order(s, layout, alloc, decoding_order(gains));
}

}  // namespace paswipt
