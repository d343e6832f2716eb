#include "rng.hpp"

#include <cmath>
#include <numbers>

namespace cw {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

// Stafford variant 13 finalizer (the splitmix64 output function).
std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

} // namespace

std::uint64_t RandomStream::derive_base(std::uint64_t seed, std::string_view module_tag,
                                        std::uint64_t index) {
    std::uint64_t s = mix64(seed + kGamma);
    s = mix64(s + kGamma * fnv1a(module_tag));
    s = mix64(s + kGamma * (index + 1));
    return s;
}

std::uint64_t RandomStream::next_u64() {
    ++counter_;
    return mix64(base_ + counter_ * kGamma);
}

double RandomStream::uniform() {
    // (v >> 11) is uniform on [0, 2^53); the half-offset keeps the value
    // strictly inside (0, 1), so log() in Box-Muller is always finite.
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::pair<double, double> RandomStream::normal_pair() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(a), r * std::sin(a)};
}

std::complex<double> RandomStream::standard_complex() {
    const double x = normal();
    const double y = normal();
    return {x * std::numbers::sqrt2 / 2.0, y * std::numbers::sqrt2 / 2.0};
}

} // namespace cw
