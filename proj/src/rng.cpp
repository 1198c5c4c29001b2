#include "awn/rng.hpp"

namespace awn {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t index) {
    // FNV-1a over the label folded into a splitmix chain. Not cryptographic,
    // just a stable way to split one seed into many independent streams.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::uint64_t state = seed;
    splitmix64(state);
    state ^= h;
    splitmix64(state);
    state ^= index * 0x9e3779b97f4a7c15ULL;
    return splitmix64(state);
}

DetRng::DetRng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& s : s_) s = splitmix64(sm);
}

static inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

std::uint64_t DetRng::next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

std::uint64_t DetRng::next_below(std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % bound;
}

double DetRng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Bytes DetRng::next_bytes(std::size_t n) {
    Bytes out;
    out.reserve(n);
    while (out.size() < n) {
        std::uint64_t v = next_u64();
        for (int i = 0; i < 8 && out.size() < n; ++i) {
            out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
        }
    }
    return out;
}

DetRng DetRng::fork() {
    return DetRng(next_u64());
}

}  // namespace awn
