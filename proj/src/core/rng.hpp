#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <utility>

namespace cw {

/// Counter-based uniform stream with O(1) random access.
///
/// The stream is a splitmix-style keyed sequence: draw j is a bijective
/// 64-bit mix of base + (j+1)*gamma, so seeking to an absolute offset is
/// constant time. This is what makes coefficient-indexed substreams and
/// coupled truncations reproducible: the k-th coefficient of a sample
/// always consumes the same uniforms, regardless of what was drawn before.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t base) : base_(base) {}

    RandomStream(std::uint64_t seed, std::string_view module_tag, std::uint64_t index)
        : base_(derive_base(seed, module_tag, index)) {}

    /// Mixes (seed, tag, index) into a stream key. Distinct tuples give
    /// distinct keys in practice; see the collision test.
    static std::uint64_t derive_base(std::uint64_t seed, std::string_view module_tag,
                                     std::uint64_t index);

    std::uint64_t next_u64();

    /// Uniform in the open interval (0, 1); consumes one 64-bit draw.
    double uniform();

    /// Absolute position in uniforms drawn so far.
    std::uint64_t position() const { return counter_; }

    /// Jump so that the next uniform is draw number `offset`.
    void seek(std::uint64_t offset) { counter_ = offset; }

    /// One standard normal via Box-Muller; consumes exactly 2 uniforms
    /// (the sine branch is discarded to keep the draw count fixed).
    double normal();

    /// Both Box-Muller branches from 2 uniforms.
    std::pair<double, double> normal_pair();

    /// Standard proper complex Gaussian CN(0,1,0), i.e. (X+iY)/sqrt(2)
    /// with X, Y standard real. Consumes 4 uniforms (2 per coordinate).
    std::complex<double> standard_complex();

private:
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

} // namespace cw
