// SPDX-License-Identifier: Apache-2.0
#include "paswipt/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace paswipt {

namespace {

// Phase of exp(-j 2 pi len / period) computed as -2 pi frac(len / period).
// len / period reaches ~1e3 here, so reducing modulo the period first (in
// extended precision) keeps the angle accurate to ~1e-13 rad instead of
// losing ~3 digits to the multiplication by 2 pi.
double propagation_phase(double len, double period) {
    const long double frac = std::fmod(static_cast<long double>(len), static_cast<long double>(period));
    return static_cast<double>(-2.0L * std::numbers::pi_v<long double> * frac /
                               static_cast<long double>(period));
}

}  // namespace

std::complex<double> channel_gain(const Scenario& s, double pa_x, const Point3& rx) {
    const Point3 pa{pa_x, 0.0, s.waveguide_height_m};
    const double r = distance(pa, rx);
    if (r < 1e-6) {
        throw std::invalid_argument("channel_gain: receiver closer than 1e-6 m to the antenna");
    }
    const double phase = propagation_phase(r, s.consts.wavelength_m()) +
                         propagation_phase(std::fabs(s.feed_x_m - pa_x), s.consts.guided_wavelength_m());
    return std::polar(s.consts.amplitude_constant() / r, phase);
}

std::complex<double> aggregate_channel(const Scenario& s, const PaLayout& layout, const Point3& rx) {
    std::complex<double> sum{0.0, 0.0};
    for (double x : layout) {
        sum += channel_gain(s, x, rx);
    }
    return sum;
}

std::vector<double> aggregate_gains(const Scenario& s, const PaLayout& layout,
                                    const std::vector<Point3>& rxs) {
    std::vector<double> gains;
    gains.reserve(rxs.size());
    for (const Point3& rx : rxs) {
        gains.push_back(std::norm(aggregate_channel(s, layout, rx)));
    }
    return gains;
}

}  // namespace paswipt
