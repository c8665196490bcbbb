#pragma once

#include "qmb/chaninfo.hpp"
#include "qmb/codec.hpp"
#include "qmb/qubit.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qmb {

/// Parameters of one key-distribution run. R must be odd so the majority
/// vote over a block can never tie.
struct ProtocolParams {
    int T = 0;  // number of blocks
    int R = 0;  // qubits per block
    int K = 0;  // key length, K <= T
    double epsilon = 1e-3;
    std::uint64_t alice_seed = 0;
    std::uint64_t bob_seed = 0;

    void validate() const;  // throws std::invalid_argument
};

struct AliceRecord {
    std::vector<TwoDrawerBits> pairs;  // one (alpha, beta) pair per block
};

struct QuantumShipment {
    std::vector<std::vector<QubitState>> blocks;  // T x R

    int block_count() const { return static_cast<int>(blocks.size()); }
    int block_size() const { return blocks.empty() ? 0 : static_cast<int>(blocks.front().size()); }
};

struct BobMeasurement {
    std::vector<int> control;                // c_i: 0 -> drawer 1 (B1), 1 -> drawer 2 (B2)
    std::vector<std::vector<int>> outcomes;  // M_ij, T x R
    std::vector<int> majority;               // B_i = majority_j(M_ij)
};

/// The only classical message of the protocol, sent from Bob to Alice:
/// which blocks form the key and which drawer each was read from. It
/// carries no outcome or key bit.
struct PublicMessage {
    std::vector<int> block_ids;  // 1-based, strictly increasing
    std::vector<int> control_bits;
};

struct KeyMaterial {
    std::vector<int> bits;
};

enum class EveMode {
    none,
    two_qubit_fixed,             // measures qubits 1 and 2 of every block
    two_qubit_random_positions,  // measures two random distinct positions
};

struct EveStrategy {
    EveMode mode = EveMode::none;
    std::uint64_t eve_seed = 0;
};

/// Outcome of the within-block consistency test. The statistic is the
/// fraction of per-qubit outcomes that agree with their block majority;
/// interference pushes it below the midpoint threshold.
struct DetectionReport {
    double statistic = 0.0;
    double clean_mean = 0.0;     // exact expectation with no interference
    double attacked_mean = 0.0;  // exact expectation under the two-qubit attack
    double threshold = 0.0;      // (clean_mean + attacked_mean) / 2
    bool eavesdropped = false;   // statistic < threshold
};

inline constexpr std::string_view kDirectionQuantumAliceToBob = "A→B(quantum)";
inline constexpr std::string_view kDirectionClassicalBobToAlice = "B→A(classical)";

struct TranscriptMessage {
    int step = 0;
    std::string direction;
    std::string kind;
    std::string payload;  // JSON object with stable key order
};

struct Transcript {
    ProtocolParams params;
    EveMode eve_mode = EveMode::none;
    AliceRecord record;
    std::string shipment_digest;
    BobMeasurement measurement;
    DetectionReport detection;
    bool aborted = false;  // detection fired; no classical message was sent
    std::optional<PublicMessage> message;
    std::optional<KeyMaterial> bob_key;
    std::optional<KeyMaterial> alice_key;
    std::vector<TranscriptMessage> messages;
};

struct Preparation {
    AliceRecord record;
    QuantumShipment shipment;
};

/// Draws T uniform bit pairs and packs each into a block of R identical
/// two-drawer encodings (default amplitudes, a = cos(pi/8)).
Preparation alice_prepare(const ProtocolParams& params, RngStream& rng);

/// Draws all T control bits first, then measures block-major, qubit-major;
/// each qubit consumes exactly one draw. Majority bits are computed per
/// block (R is odd, so there is no tie).
BobMeasurement bob_measure(const QuantumShipment& shipment, const ProtocolParams& params,
                           RngStream& rng);

struct KeySelection {
    KeyMaterial key;
    PublicMessage message;
};

/// Picks K distinct blocks uniformly at random, emits their majority bits
/// in ascending block-id order as the key, and the matching public
/// message. Must only be called after eavesdropping detection came back
/// clean; run_protocol enforces that sequencing.
KeySelection bob_select_key(const BobMeasurement& meas, const ProtocolParams& params,
                            RngStream& rng);

/// Rebuilds Bob's key from Alice's preparation record and the public
/// message: control bit 0 selects the pair's alpha, 1 its beta.
/// Throws std::out_of_range for ids outside [1, T] and
/// std::invalid_argument for duplicates.
KeyMaterial alice_reconstruct(const AliceRecord& record, const PublicMessage& msg);

/// Binomial pmf row [P(X=0), ..., P(X=n)] for X ~ Bin(n, p).
std::vector<double> binomial_pmf(int n, double p);

/// Exact probability that the R-vote majority read of one block is wrong:
/// P[Bin(R, p) <= (R-1)/2].
double majority_error_rate(int R, double p = default_read_probability(2));

/// Smallest odd R for which all K majority reads are simultaneously
/// correct with probability at least 1 - epsilon.
int choose_R(double epsilon, int K, double p = default_read_probability(2));

/// Full run: prepare, optionally intercept, measure, detect, and only on a
/// clean verdict select and publish the key blocks. A fired detection
/// aborts the run; the transcript then carries the report and no classical
/// message. Classical communication only ever flows Bob -> Alice.
Transcript run_protocol(const ProtocolParams& params, const EveStrategy& eve = {});

/// One line per qubit: "block index re0 im0 re1 im1", 1-based ids,
/// amplitudes printed to 17 significant digits (lossless round-trip).
/// Lines are emitted block-major, qubit-major; the parser requires that
/// canonical order.
std::string serialize_shipment(const QuantumShipment& shipment);
QuantumShipment parse_shipment(const std::string& text);

/// FNV-1a 64 over the raw amplitude bytes, as 16 hex digits.
std::string shipment_digest(const QuantumShipment& shipment);

/// JSONL: one message record per line with fields step, direction, kind,
/// payload, in that order.
std::string serialize_transcript(const Transcript& transcript);

/// Demonstration cipher for the payload the key protects: bitwise XOR,
/// MSB-first within each byte, cycling the key when the payload is longer.
/// Not a vetted construction; the protocol's deliverable is the key.
std::vector<std::uint8_t> xor_with_key(const std::vector<std::uint8_t>& payload,
                                       const KeyMaterial& key);

}  // namespace qmb
