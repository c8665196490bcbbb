#pragma once

#include "qmb/qubit.hpp"

#include <array>

namespace qmb {

/// Payload of a two-drawer box: alpha lives in drawer 1 (read in B1),
/// beta in drawer 2 (read in B2).
struct TwoDrawerBits {
    int alpha = 0;
    int beta = 0;
};

/// Payload of a three-drawer box; gamma lives in drawer 3 (read in B3).
struct ThreeDrawerBits {
    int alpha = 0;
    int beta = 0;
    int gamma = 0;
};

/// Amplitude split (a, b) used by the drawer encodings. Requires a > b > 0
/// with a^2 + b^2 = 1, so the matched-basis read probability p = a^2 stays
/// strictly between 1/2 and 1.
class EncoderParams {
  public:
    EncoderParams(double a, double b);

    static EncoderParams from_major_amplitude(double a);
    /// a = cos(pi/8): both drawers of a two-drawer box carry equal
    /// information (read probability 1/2 + sqrt(2)/4 each).
    static EncoderParams two_drawer_default();
    /// p = a^2 = 1/2 + sqrt(3)/6: the point where all three channels of a
    /// three-drawer box become symmetric (q = p).
    static EncoderParams three_drawer_default();

    double a() const { return a_; }
    double b() const { return b_; }
    double matched_read_probability() const { return a_ * a_; }

  private:
    double a_;
    double b_;
};

struct ChannelStats {
    double p;  // matched-basis correct-read probability, a^2
    double q;  // cross-channel correct-read probability, 1/2 + (sqrt(2)/2) a b
};

ChannelStats channel_stats(const EncoderParams& params);

/// Drawer 1 -> B1, 2 -> B2, 3 -> B3. Throws std::invalid_argument otherwise.
Basis basis_for_drawer(int drawer);

/// Two-drawer encoding: alpha = 1 swaps the major/minor amplitudes,
/// beta = 1 flips the sign of the |1> component.
QubitState encode2(const TwoDrawerBits& bits,
                   const EncoderParams& params = EncoderParams::two_drawer_default());

/// Three-drawer encoding: alpha = 1 swaps the major/minor amplitudes, and
/// (beta, gamma) selects one of the four diagonal unit phases on the |1>
/// component, with the real sign carrying beta and the imaginary sign
/// carrying gamma:
///   (0,0) -> e^{ i pi/4}   (0,1) -> e^{-i pi/4}
///   (1,0) -> e^{ 3i pi/4}  (1,1) -> e^{-3i pi/4}
QubitState encode3(const ThreeDrawerBits& bits,
                   const EncoderParams& params = EncoderParams::three_drawer_default());

struct DecodeResult {
    int bit;
    QubitState state;  // collapsed post-measurement state
};

/// Opens one drawer: measures in the drawer's basis and maps the outcome
/// with the fixed convention |0>,|+>,|u> -> 0 and |1>,|->,|d> -> 1.
/// The qubit carries no arity marker, so asking for drawer 3 on a
/// two-drawer state is permitted; the result simply has no stored-bit
/// semantics.
DecodeResult decode_drawer(const QubitState& state, int drawer, RngStream& rng);

/// For every three-drawer payload (rows in (alpha,beta,gamma) binary order
/// 000..111) and every basis (columns B1,B2,B3), the closed-form
/// probability that the measurement outcome equals the bit stored in the
/// matching drawer. Computed directly from the Born rule; with valid
/// params every B1 entry equals p and every B2/B3 entry equals q.
std::array<std::array<double, 3>, 8> three_drawer_probability_table(
    const EncoderParams& params = EncoderParams::three_drawer_default());

}  // namespace qmb
