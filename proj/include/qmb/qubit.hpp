#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace qmb {

using Amplitude = std::complex<double>;

/// Single-qubit pure state amp0|0> + amp1|1>. Global phase is not
/// normalized away; physical equality is tested with same_up_to_phase.
struct QubitState {
    Amplitude amp0{1.0, 0.0};
    Amplitude amp1{0.0, 0.0};
};

/// The three Pauli eigenbases: B1 = {|0>,|1>}, B2 = {|+>,|->} and
/// B3 = {|u>,|d>} with |u>,|d> = (|0> +- i|1>)/sqrt(2). Any eigenstate of
/// one basis has squared overlap exactly 1/2 with every eigenstate of a
/// different basis.
enum class Basis { B1, B2, B3 };

/// Eigenstate pair of a basis, in bit order: `zero` reads as 0, `one` as 1
/// (|0>,|+>,|u> -> 0 and |1>,|->,|d> -> 1).
struct BasisVectors {
    QubitState zero;
    QubitState one;
};

/// Deterministic per-party random stream. An identical (seed, label) pair
/// reproduces the exact same draw sequence on any platform: the engine is
/// std::mt19937_64 (whose raw output the standard pins down) and all
/// distributions are implemented locally, since std:: distribution output
/// is implementation-defined.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::string_view label);

    std::uint64_t next_u64();
    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform01();
    /// True with probability p; consumes exactly one draw.
    bool bernoulli(double p);
    /// Unbiased draw from [0, n); rejection-sampled.
    std::uint64_t below(std::uint64_t n);
    /// Fair coin.
    int bit();

    std::uint64_t seed() const { return seed_; }
    const std::string& label() const { return label_; }

  private:
    std::uint64_t seed_;
    std::string label_;
    std::mt19937_64 engine_;
};

struct MeasurementResult {
    int bit;
    QubitState state;  // exact eigenstate of the observed outcome
};

double norm_squared(const QubitState& s);
bool is_normalized(const QubitState& s, double tol = 1e-9);

/// <u|v>, conjugating u.
Amplitude inner_product(const QubitState& u, const QubitState& v);

/// True when u and v describe the same physical state, i.e. |<u|v>|^2 is
/// within tol of 1 for normalized inputs.
bool same_up_to_phase(const QubitState& u, const QubitState& v, double tol = 1e-9);

BasisVectors basis_vectors(Basis basis);

/// Probability of reading bit 0 when measuring `state` in `basis`.
/// Throws std::domain_error when the state norm deviates from 1 by more
/// than 1e-9 or any component is not finite.
double born_probability(const QubitState& state, Basis basis);

/// Projective measurement with collapse. Consumes exactly one draw from
/// `rng`; the returned state is the exact eigenstate of the outcome, so
/// repeated measurement in the same basis reproduces the outcome with
/// certainty.
MeasurementResult measure(const QubitState& state, Basis basis, RngStream& rng);

namespace detail {
std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t seed = 0xcbf29ce484222325ull);
std::uint64_t splitmix64(std::uint64_t x);
}  // namespace detail

}  // namespace qmb
