// SPDX-License-Identifier: Apache-2.0
// Pinching-antenna SWIPT toolkit: near-field waveguide channel.
#pragma once

#include <complex>
#include <vector>

#include "paswipt/geometry.hpp"
#include "paswipt/scenario.hpp"

namespace paswipt {

// Complex baseband gain between the pinching antenna at x = pa_x on the
// waveguide and a receiver at `rx`:
//
//   h = (eta / r) * exp(-j 2 pi r / lambda) * exp(-j 2 pi |feed_x - pa_x| / lambda_g)
//
// where r is the free-space distance from the antenna to the receiver, the
// first phase term is the free-space propagation delay and the second is the
// in-guide delay from the feed to the pinch point.  Throws if r < 1e-6 m.
std::complex<double> channel_gain(const Scenario& s, double pa_x, const Point3& rx);

// Coherent sum of the per-antenna gains at one receiver.
std::complex<double> aggregate_channel(const Scenario& s, const PaLayout& layout, const Point3& rx);

// |aggregate_channel|^2 for every receiver in `rxs`.
std::vector<double> aggregate_gains(const Scenario& s, const PaLayout& layout,
                                    const std::vector<Point3>& rxs);

}  // namespace paswipt
