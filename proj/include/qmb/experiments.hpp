#pragma once

#include "qmb/adversary.hpp"
#include "qmb/qkd.hpp"
#include "qmb/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qmb {

/// The one table every check tolerance comes from; flags override fields
/// per run and the version tag is echoed into the records.
struct ToleranceTable {
    double reference_digits = 1e-9;  // comparisons against 11-digit reference constants
    double closed_form = 1e-12;      // exact algebraic identities
    double root = 1e-10;             // numeric root-finder agreement
    double info_accounting = 5e-3;   // stored-information totals
    double mc_sigma = 5.0;           // sigma multiplier for frequency estimates
    double destruction_corr = 0.01;  // |corr| bound, calibrated at 1e5 trials
    double unopened_ber = 0.02;      // half-width around 1/2 for the unopened drawer

    static constexpr const char* version = "1";
};

/// Recomputes every reference constant and closed-form identity and
/// checks each at its table tolerance.
std::vector<ResultRecord> verify_constants(const ToleranceTable& tol = {});

struct McDrawerConfig {
    long long trials = 100000;
    int drawers = 2;
    std::uint64_t seed = 1;
};

/// Monte-Carlo per-drawer correct-read estimates plus post-read
/// destruction correlations for every ordered drawer pair.
std::vector<ResultRecord> mc_drawer(const McDrawerConfig& config, const ToleranceTable& tol = {});

struct DistributeConfig {
    std::vector<std::uint8_t> payload_a;
    std::vector<std::uint8_t> payload_b;
    std::vector<std::uint8_t> payload_c;  // required when drawers == 3
    int choose = 1;
    int repetition = 9;  // odd block size per payload bit
    int drawers = 2;
    std::uint64_t seed = 1;
};

struct DistributeResult {
    std::vector<std::uint8_t> recovered;  // the chosen payload as decoded
    int unopened_drawer = 0;
    double chosen_ber = 0.0;    // errors / chosen-payload bits
    double unopened_ber = 0.0;  // errors / unopened-payload bits, ~1/2
    double raw_read_rate = 0.0; // per-qubit matched-basis agreement before voting
    long long shannon_limit_qubits = 0;
    long long repetition_qubits = 0;
    std::vector<ResultRecord> records;
};

/// Content distribution: payload bits (MSB-first per byte, zero-padded to
/// the longest payload) ride one drawer each; the receiver majority-decodes
/// the chosen drawer, then re-reads the collapsed qubits in the next
/// drawer to exhibit that the unopened content is gone.
DistributeResult distribute(const DistributeConfig& config, const ToleranceTable& tol = {});

struct QkdRunConfig {
    ProtocolParams params;
    EveStrategy eve;
    std::vector<std::uint8_t> payload;  // optional demo payload to encrypt
};

struct QkdRunOutput {
    Transcript transcript;
    std::vector<std::uint8_t> ciphertext;  // empty unless a payload was given and the run completed
    std::vector<ResultRecord> records;
};

/// Wraps run_protocol: verifies the one-way property structurally, checks
/// the verdict against the configured interference mode, reports key
/// agreement, and (for a completed run with a payload) appends the
/// encrypted-message record to the transcript.
QkdRunOutput qkd_run(const QkdRunConfig& config, const ToleranceTable& tol = {});

std::vector<ResultRecord> calibration_records(const CalibrationResult& result,
                                              std::uint64_t seed, int mc_runs);

std::vector<int> bytes_to_bits_msb(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> bits_to_bytes_msb(const std::vector<int>& bits);

}  // namespace qmb
