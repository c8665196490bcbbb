#include "qmb/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qmb {

namespace {

// One-sided Wilson score upper bound at z standard normal deviates.
double wilson_upper(int failures, int trials, double z) {
    const double n = trials;
    const double phat = static_cast<double>(failures) / n;
    const double z2 = z * z;
    const double center = phat + z2 / (2.0 * n);
    const double margin = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
    return (center + margin) / (1.0 + z2 / n);
}

constexpr double kCalibrationZ = 2.5758293035489004;  // 99.5% one-sided

struct RatePair {
    double false_positive;
    double false_negative;
    bool pass;
};

RatePair calibration_rates(int R, int T, double epsilon, int mc_runs, double threshold,
                           std::uint64_t seed) {
    RngStream seeder(seed, "calibrate:T=" + std::to_string(T));
    int false_pos = 0;
    int false_neg = 0;
    for (int run = 0; run < mc_runs; ++run) {
        ProtocolParams params;
        params.T = T;
        params.R = R;
        params.K = 1;
        params.epsilon = epsilon;

        params.alice_seed = seeder.next_u64();
        params.bob_seed = seeder.next_u64();
        {
            RngStream alice(params.alice_seed, "alice");
            const Preparation prep = alice_prepare(params, alice);
            RngStream bob(params.bob_seed, "bob");
            const BobMeasurement meas = bob_measure(prep.shipment, params, bob);
            if (detection_statistic(meas) < threshold) ++false_pos;
        }

        params.alice_seed = seeder.next_u64();
        params.bob_seed = seeder.next_u64();
        const std::uint64_t eve_seed = seeder.next_u64();
        {
            RngStream alice(params.alice_seed, "alice");
            Preparation prep = alice_prepare(params, alice);
            RngStream eve_rng(eve_seed, "eve");
            const EveStrategy eve{EveMode::two_qubit_fixed, eve_seed};
            const InterceptResult intercepted = eve_intercept(prep.shipment, eve, eve_rng);
            RngStream bob(params.bob_seed, "bob");
            const BobMeasurement meas = bob_measure(intercepted.shipment, params, bob);
            if (detection_statistic(meas) >= threshold) ++false_neg;
        }
    }
    const bool pass = wilson_upper(false_pos, mc_runs, kCalibrationZ) <= epsilon &&
                      wilson_upper(false_neg, mc_runs, kCalibrationZ) <= epsilon;
    return {static_cast<double>(false_pos) / mc_runs, static_cast<double>(false_neg) / mc_runs,
            pass};
}

}  // namespace

InterceptResult eve_intercept(const QuantumShipment& shipment, const EveStrategy& strategy,
                              RngStream& rng) {
    InterceptResult result{shipment, {}};
    if (strategy.mode == EveMode::none) return result;
    const int R = shipment.block_size();
    if (R < 2) {
        throw std::invalid_argument("eve_intercept: blocks must hold at least 2 qubits");
    }
    result.notes.reserve(shipment.blocks.size());
    for (auto& block : result.shipment.blocks) {
        int j1 = 0;
        int j2 = 1;
        if (strategy.mode == EveMode::two_qubit_random_positions) {
            j1 = static_cast<int>(rng.below(static_cast<std::uint64_t>(R)));
            j2 = static_cast<int>(rng.below(static_cast<std::uint64_t>(R - 1)));
            if (j2 >= j1) ++j2;
        }
        const MeasurementResult m1 = measure(block[j1], Basis::B1, rng);
        block[j1] = m1.state;
        const MeasurementResult m2 = measure(block[j2], Basis::B2, rng);
        block[j2] = m2.state;
        result.notes.push_back({j1, m1.bit, j2, m2.bit});
    }
    return result;
}

void eve_intercept_file(const std::string& in_path, const std::string& out_path,
                        const EveStrategy& strategy) {
    std::ifstream in(in_path);
    if (!in) throw std::runtime_error("eve_intercept_file: cannot open " + in_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const QuantumShipment shipment = parse_shipment(buffer.str());
    RngStream rng(strategy.eve_seed, "eve");
    const InterceptResult result = eve_intercept(shipment, strategy, rng);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("eve_intercept_file: cannot open " + out_path);
    out << serialize_shipment(result.shipment);
}

double detection_statistic(const BobMeasurement& meas) {
    const std::size_t T = meas.outcomes.size();
    if (T == 0 || meas.majority.size() != T) {
        throw std::invalid_argument("detection_statistic: malformed measurement");
    }
    long long agree = 0;
    long long total = 0;
    for (std::size_t i = 0; i < T; ++i) {
        const auto& row = meas.outcomes[i];
        if (row.empty()) throw std::invalid_argument("detection_statistic: empty block");
        for (const int bit : row) agree += bit == meas.majority[i];
        total += static_cast<long long>(row.size());
    }
    return static_cast<double>(agree) / static_cast<double>(total);
}

double expected_block_agreement(int R, bool attacked, double p) {
    if (R < 3 || R % 2 == 0) {
        throw std::invalid_argument("expected_block_agreement: R must be odd and at least 3");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("expected_block_agreement: p must lie in [0, 1]");
    }
    // pmf of S = number of reads matching the stored bit.
    std::vector<double> pmf;
    if (!attacked) {
        pmf = binomial_pmf(R, p);
    } else {
        const std::vector<double> base = binomial_pmf(R - 1, p);
        pmf.assign(R + 1, 0.0);
        for (int k = 0; k < R; ++k) {
            pmf[k] += 0.5 * base[k];
            pmf[k + 1] += 0.5 * base[k];
        }
    }
    double expectation = 0.0;
    for (int k = 0; k <= R; ++k) {
        expectation += pmf[k] * static_cast<double>(std::max(k, R - k));
    }
    return expectation / R;
}

DetectionReport detect(const BobMeasurement& meas, int R) {
    if (!meas.outcomes.empty() && static_cast<int>(meas.outcomes.front().size()) != R) {
        throw std::invalid_argument("detect: R does not match the measurement");
    }
    DetectionReport report;
    report.statistic = detection_statistic(meas);
    report.clean_mean = expected_block_agreement(R, false);
    report.attacked_mean = expected_block_agreement(R, true);
    report.threshold = 0.5 * (report.clean_mean + report.attacked_mean);
    report.eavesdropped = report.statistic < report.threshold;
    return report;
}

CalibrationResult calibrate(int R, double epsilon, int mc_runs, std::uint64_t seed) {
    if (R < 3 || R % 2 == 0) {
        throw std::invalid_argument("calibrate: R must be odd and at least 3");
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("calibrate: epsilon must lie in (0, 1)");
    }
    if (mc_runs < 1 || wilson_upper(0, mc_runs, kCalibrationZ) > epsilon) {
        throw std::invalid_argument(
            "calibrate: mc_runs too small to certify epsilon at the configured confidence");
    }

    const double clean_mean = expected_block_agreement(R, false);
    const double attacked_mean = expected_block_agreement(R, true);
    const double threshold = 0.5 * (clean_mean + attacked_mean);

    constexpr int kTMin = 4;
    constexpr int kTMax = 1 << 20;
    int lo = 0;  // largest T known to fail (0: none yet)
    int hi = -1;
    RatePair at_hi{};
    for (int T = kTMin; T <= kTMax; T *= 2) {
        const RatePair rates = calibration_rates(R, T, epsilon, mc_runs, threshold, seed);
        if (rates.pass) {
            hi = T;
            at_hi = rates;
            break;
        }
        lo = T;
    }
    if (hi < 0) throw std::runtime_error("calibrate: no T up to 2^20 met the budget");
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        if (mid < kTMin) break;
        const RatePair rates = calibration_rates(R, mid, epsilon, mc_runs, threshold, seed);
        if (rates.pass) {
            hi = mid;
            at_hi = rates;
        } else {
            lo = mid;
        }
    }
    return {R, hi, epsilon, at_hi.false_positive, at_hi.false_negative};
}

}  // namespace qmb
