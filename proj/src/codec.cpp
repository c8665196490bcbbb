#include "qmb/codec.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmb {

namespace {

constexpr double kParamNormTol = 1e-12;

void check_bit(int value, const char* name) {
    if (value != 0 && value != 1) {
        throw std::invalid_argument(std::string(name) + " must be 0 or 1");
    }
}

}  // namespace

EncoderParams::EncoderParams(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("EncoderParams: amplitudes must be finite");
    }
    if (!(a > b && b > 0.0)) {
        throw std::invalid_argument("EncoderParams: requires a > b > 0");
    }
    if (std::abs(a * a + b * b - 1.0) > kParamNormTol) {
        throw std::invalid_argument("EncoderParams: requires a^2 + b^2 = 1");
    }
}

EncoderParams EncoderParams::from_major_amplitude(double a) {
    if (!(a > 0.0 && a < 1.0)) {
        throw std::invalid_argument("EncoderParams: major amplitude must lie in (0, 1)");
    }
    return EncoderParams(a, std::sqrt(1.0 - a * a));
}

EncoderParams EncoderParams::two_drawer_default() {
    return from_major_amplitude(std::cos(std::numbers::pi / 8.0));
}

EncoderParams EncoderParams::three_drawer_default() {
    const double p = 0.5 + std::sqrt(3.0) / 6.0;
    return EncoderParams(std::sqrt(p), std::sqrt(1.0 - p));
}

ChannelStats channel_stats(const EncoderParams& params) {
    // sqrt(p(1-p)) = a b for a unit pair, so q has a closed form in (a, b).
    return {params.a() * params.a(),
            0.5 + std::numbers::sqrt2 / 2.0 * params.a() * params.b()};
}

Basis basis_for_drawer(int drawer) {
    switch (drawer) {
        case 1: return Basis::B1;
        case 2: return Basis::B2;
        case 3: return Basis::B3;
        default: throw std::invalid_argument("drawer index must be 1, 2 or 3");
    }
}

QubitState encode2(const TwoDrawerBits& bits, const EncoderParams& params) {
    check_bit(bits.alpha, "alpha");
    check_bit(bits.beta, "beta");
    const double c0 = bits.alpha == 0 ? params.a() : params.b();
    const double c1 = bits.alpha == 0 ? params.b() : params.a();
    const double sign = bits.beta == 0 ? 1.0 : -1.0;
    return {Amplitude(c0, 0.0), Amplitude(sign * c1, 0.0)};
}

QubitState encode3(const ThreeDrawerBits& bits, const EncoderParams& params) {
    check_bit(bits.alpha, "alpha");
    check_bit(bits.beta, "beta");
    check_bit(bits.gamma, "gamma");
    const double c0 = bits.alpha == 0 ? params.a() : params.b();
    const double c1 = bits.alpha == 0 ? params.b() : params.a();
    const double h = std::numbers::sqrt2 / 2.0;
    const double re = bits.beta == 0 ? h : -h;
    const double im = bits.gamma == 0 ? h : -h;
    return {Amplitude(c0, 0.0), Amplitude(c1 * re, c1 * im)};
}

DecodeResult decode_drawer(const QubitState& state, int drawer, RngStream& rng) {
    const MeasurementResult result = measure(state, basis_for_drawer(drawer), rng);
    return {result.bit, result.state};
}

std::array<std::array<double, 3>, 8> three_drawer_probability_table(const EncoderParams& params) {
    std::array<std::array<double, 3>, 8> table{};
    for (int alpha = 0; alpha <= 1; ++alpha) {
        for (int beta = 0; beta <= 1; ++beta) {
            for (int gamma = 0; gamma <= 1; ++gamma) {
                const QubitState state = encode3({alpha, beta, gamma}, params);
                const int stored[3] = {alpha, beta, gamma};
                const int row = alpha * 4 + beta * 2 + gamma;
                for (int col = 0; col < 3; ++col) {
                    const double p0 = born_probability(state, basis_for_drawer(col + 1));
                    table[row][col] = stored[col] == 0 ? p0 : 1.0 - p0;
                }
            }
        }
    }
    return table;
}

}  // namespace qmb
