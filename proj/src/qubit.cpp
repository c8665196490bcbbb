#include "qmb/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qmb {

namespace detail {

std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t seed) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < size; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace detail

RngStream::RngStream(std::uint64_t seed, std::string_view label)
    : seed_(seed),
      label_(label),
      engine_(detail::splitmix64(seed ^ detail::fnv1a64(label.data(), label.size()))) {}

std::uint64_t RngStream::next_u64() { return engine_(); }

double RngStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool RngStream::bernoulli(double p) { return uniform01() < p; }

std::uint64_t RngStream::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("RngStream::below: n must be positive");
    // Accept only the largest prefix of the output range that is a
    // multiple of n, so the modulus is unbiased.
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % n;
}

int RngStream::bit() { return static_cast<int>(next_u64() >> 63); }

double norm_squared(const QubitState& s) {
    return std::norm(s.amp0) + std::norm(s.amp1);
}

bool is_normalized(const QubitState& s, double tol) {
    if (!std::isfinite(s.amp0.real()) || !std::isfinite(s.amp0.imag()) ||
        !std::isfinite(s.amp1.real()) || !std::isfinite(s.amp1.imag())) {
        return false;
    }
    return std::abs(norm_squared(s) - 1.0) <= tol;
}

Amplitude inner_product(const QubitState& u, const QubitState& v) {
    return std::conj(u.amp0) * v.amp0 + std::conj(u.amp1) * v.amp1;
}

bool same_up_to_phase(const QubitState& u, const QubitState& v, double tol) {
    return std::norm(inner_product(u, v)) >= 1.0 - tol;
}

BasisVectors basis_vectors(Basis basis) {
    const double h = 1.0 / std::numbers::sqrt2;
    switch (basis) {
        case Basis::B1:
            return {QubitState{Amplitude(1.0, 0.0), Amplitude(0.0, 0.0)},
                    QubitState{Amplitude(0.0, 0.0), Amplitude(1.0, 0.0)}};
        case Basis::B2:
            return {QubitState{Amplitude(h, 0.0), Amplitude(h, 0.0)},
                    QubitState{Amplitude(h, 0.0), Amplitude(-h, 0.0)}};
        case Basis::B3:
            return {QubitState{Amplitude(h, 0.0), Amplitude(0.0, h)},
                    QubitState{Amplitude(h, 0.0), Amplitude(0.0, -h)}};
    }
    throw std::invalid_argument("basis_vectors: unknown basis");
}

double born_probability(const QubitState& state, Basis basis) {
    if (!is_normalized(state)) {
        throw std::domain_error("born_probability: state is not normalized");
    }
    const BasisVectors vecs = basis_vectors(basis);
    const double p0 = std::norm(inner_product(vecs.zero, state));
    return std::clamp(p0, 0.0, 1.0);
}

MeasurementResult measure(const QubitState& state, Basis basis, RngStream& rng) {
    const double p0 = born_probability(state, basis);
    const BasisVectors vecs = basis_vectors(basis);
    const bool zero = rng.uniform01() < p0;
    return {zero ? 0 : 1, zero ? vecs.zero : vecs.one};
}

}  // namespace qmb
