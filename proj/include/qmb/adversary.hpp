#pragma once

#include "qmb/qkd.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qmb {

struct EveBlockNote {
    int b1_position = 0;  // 0-based index of the qubit measured in B1
    int b1_outcome = 0;
    int b2_position = 0;
    int b2_outcome = 0;
};

struct InterceptResult {
    QuantumShipment shipment;
    std::vector<EveBlockNote> notes;  // one per block; empty for mode none
};

/// Eve's attack: in every block she measures one qubit in B1 and one in
/// B2, forwarding the collapsed states (no resend preparation). Mode none
/// forwards the shipment untouched. Draw order per block: position draws
/// (random-positions mode only), then the B1 measurement, then the B2
/// measurement. Requires blocks of at least 2 qubits.
InterceptResult eve_intercept(const QuantumShipment& shipment, const EveStrategy& strategy,
                              RngStream& rng);

/// Same attack as a filter over the serialized shipment format, for use
/// between a writer and a reader of that stream.
void eve_intercept_file(const std::string& in_path, const std::string& out_path,
                        const EveStrategy& strategy);

/// Fraction of outcomes that agree with their block majority,
/// #{(i,j) : M_ij = B_i} / (R T).
double detection_statistic(const BobMeasurement& meas);

/// Exact expectation of the agreement statistic for one block, by
/// enumeration over the distribution of per-block match counts. Clean
/// blocks are R iid reads that each match the stored bit with probability
/// p. Under the two-qubit attack, the qubit Eve measured in Bob's basis
/// keeps the same p-level marginal (she already collapsed it onto that
/// basis), while the cross-basis one reads 50/50 -- whichever drawer Bob
/// opens -- so the count is Bin(R-1, p) + Bernoulli(1/2). Agreement with
/// the majority is max(S, R-S)/R. Small R biases the clean expectation
/// slightly above p; it converges to p from above as R grows.
double expected_block_agreement(int R, bool attacked, double p = default_read_probability(2));

/// Builds the report for a measurement: observed statistic, the two exact
/// expectations for its R, the midpoint threshold, and the verdict
/// (eavesdropped iff statistic < threshold).
DetectionReport detect(const BobMeasurement& meas, int R);

struct CalibrationResult {
    int R = 0;
    int T0 = 0;
    double epsilon = 0.0;
    double false_positive = 0.0;  // clean run flagged, at T0
    double false_negative = 0.0;  // attacked run passed, at T0
};

/// Finds the smallest T (doubling from 4, then bisecting) at which
/// mc_runs Monte-Carlo trials certify both verdict error rates at or
/// below epsilon. A candidate T passes when the one-sided 99.5% Wilson
/// upper bound of each estimated rate is <= epsilon, so the point
/// estimates satisfy the budget with margin and the returned T0 holds up
/// on fresh seeds. mc_runs must be large enough that a zero-failure
/// estimate can clear the bound (roughly > 6.6 (1 - eps)/eps trials);
/// otherwise std::invalid_argument is thrown.
CalibrationResult calibrate(int R, double epsilon, int mc_runs, std::uint64_t seed);

}  // namespace qmb
