#pragma once

namespace qmb {

struct InformationReport {
    double p;                // correct-read probability per drawer
    double info_per_drawer;  // Shannon bits carried by one drawer
    int drawers;
    double total_stored;     // drawers * info_per_drawer
    double retrievable;      // what one read can extract: a single drawer
};

struct QubitCost {
    long long payload_bits;
    long long qubits_needed;
};

/// Capacity of the binary symmetric channel seen by one drawer:
/// 1 + p log2(p) + (1-p) log2(1-p), with the 0 log 0 := 0 convention.
/// Throws std::domain_error outside [0, 1].
double binary_channel_information(double p);

/// Cross-basis correct-read probability as a function of the matched-basis
/// probability: 1/2 + (sqrt(2)/2) sqrt(p(1-p)). Domain [1/2, 1].
double q_of_p(double p);

/// The p in (1/2, 1) where cross-basis and matched-basis reads coincide
/// (all three channels symmetric), found by bisection to ~1e-14. Equals
/// 1/2 + sqrt(3)/6.
double solve_symmetric_point_3();

/// The angle where a = cos(theta) equalizes the two drawers of a
/// two-drawer box: cos^2(theta) = 1/2 + sin(theta)cos(theta). Found by
/// bisection to ~1e-14; equals pi/8.
double solve_equal_info_angle_2();

/// Default matched-basis read probability for an arity: cos^2(pi/8) for
/// two drawers, the symmetric point for three.
double default_read_probability(int drawers);

InformationReport information_report(double p, int drawers);

/// Shannon-limit qubit count for sending payload_bits through one drawer
/// at the arity's default operating point: ceil(N / info_per_drawer).
/// This is an asymptotic lower bound that ignores coding overhead; the
/// cost the repetition scheme actually achieves is reported by the
/// protocol layer (choose_R).
QubitCost qubit_cost(long long payload_bits, int drawers);

}  // namespace qmb
