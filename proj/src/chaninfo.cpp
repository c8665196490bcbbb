#include "qmb/chaninfo.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace qmb {

namespace {

constexpr double kBisectTol = 1e-14;

double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw std::logic_error("bisect: endpoints do not bracket a root");
    }
    while (hi - lo > kBisectTol) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double binary_channel_information(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error("binary_channel_information: p must lie in [0, 1]");
    }
    const auto plog2 = [](double x) { return x > 0.0 ? x * std::log2(x) : 0.0; };
    return 1.0 + plog2(p) + plog2(1.0 - p);
}

double q_of_p(double p) {
    if (!(p >= 0.5 && p <= 1.0)) {
        throw std::domain_error("q_of_p: p must lie in [1/2, 1]");
    }
    return 0.5 + std::numbers::sqrt2 / 2.0 * std::sqrt(p * (1.0 - p));
}

double solve_symmetric_point_3() {
    // q(1/2) - 1/2 > 0 and q(1) - 1 < 0; the crossing is unique.
    return bisect([](double p) { return q_of_p(p) - p; }, 0.5, 1.0);
}

double solve_equal_info_angle_2() {
    const auto gap = [](double theta) {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        return c * c - (0.5 + s * c);
    };
    return bisect(gap, 1e-9, std::numbers::pi / 4.0);
}

double default_read_probability(int drawers) {
    switch (drawers) {
        case 2: {
            const double a = std::cos(std::numbers::pi / 8.0);
            return a * a;
        }
        case 3:
            return 0.5 + std::sqrt(3.0) / 6.0;
        default:
            throw std::invalid_argument("drawers must be 2 or 3");
    }
}

InformationReport information_report(double p, int drawers) {
    if (drawers != 2 && drawers != 3) {
        throw std::invalid_argument("drawers must be 2 or 3");
    }
    const double info = binary_channel_information(p);
    return {p, info, drawers, drawers * info, info};
}

QubitCost qubit_cost(long long payload_bits, int drawers) {
    if (payload_bits < 0) {
        throw std::invalid_argument("qubit_cost: payload_bits must be non-negative");
    }
    if (payload_bits == 0) return {0, 0};
    const double info = binary_channel_information(default_read_probability(drawers));
    return {payload_bits,
            static_cast<long long>(std::ceil(static_cast<double>(payload_bits) / info))};
}

}  // namespace qmb
