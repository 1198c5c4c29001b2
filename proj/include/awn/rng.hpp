#pragma once

#include <cstdint>
#include <string_view>

#include "awn/bytes.hpp"

namespace awn {

/// splitmix64 step, used for seeding and seed derivation.
std::uint64_t splitmix64(std::uint64_t& state);

/// Derives an independent child seed from (seed, label). Same inputs, same
/// output, on every platform.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t index = 0);

/// Deterministic xoshiro256** stream. All randomness in the artifact flows
/// through instances of this class; there is no ambient entropy anywhere.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform in [0, bound) without modulo bias (rejection sampling).
    std::uint64_t next_below(std::uint64_t bound);

    /// Uniform double in [0, 1).
    double next_double();

    Bytes next_bytes(std::size_t n);

    /// Child stream seeded from this stream's output (for splitting).
    DetRng fork();

private:
    std::uint64_t s_[4];
};

}  // namespace awn
