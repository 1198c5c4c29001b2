#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace awn {

using Bytes = std::vector<std::uint8_t>;

/// Fixed 8-byte node label. Shorter names are zero-padded on the right.
class NodeId {
public:
    static constexpr std::size_t kSize = 8;

    NodeId() : raw_{} {}

    explicit NodeId(std::string_view name) : raw_{} {
        if (name.size() > kSize) {
            throw std::invalid_argument("node id longer than 8 bytes: " + std::string(name));
        }
        std::memcpy(raw_.data(), name.data(), name.size());
    }

    static NodeId from_raw(std::span<const std::uint8_t> b) {
        if (b.size() != kSize) throw std::invalid_argument("node id must be 8 raw bytes");
        NodeId id;
        std::memcpy(id.raw_.data(), b.data(), kSize);
        return id;
    }

    const std::array<std::uint8_t, kSize>& raw() const { return raw_; }

    /// Printable form with trailing zero padding stripped.
    std::string str() const {
        std::size_t n = kSize;
        while (n > 0 && raw_[n - 1] == 0) --n;
        return std::string(reinterpret_cast<const char*>(raw_.data()), n);
    }

    bool operator==(const NodeId&) const = default;
    auto operator<=>(const NodeId&) const = default;

private:
    std::array<std::uint8_t, kSize> raw_;
};

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

inline Bytes to_bytes(const NodeId& id) {
    return Bytes(id.raw().begin(), id.raw().end());
}

inline void append(Bytes& out, std::span<const std::uint8_t> more) {
    out.insert(out.end(), more.begin(), more.end());
}

inline void append_u8(Bytes& out, std::uint8_t v) { out.push_back(v); }

inline void append_u16be(Bytes& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

inline void append_u32be(Bytes& out, std::uint32_t v) {
    for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>(v >> s));
}

inline void append_u64be(Bytes& out, std::uint64_t v) {
    for (int s = 56; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>(v >> s));
}

inline std::uint64_t read_u64be(std::span<const std::uint8_t> b) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < 8; ++i) v = (v << 8) | b[i];
    return v;
}

std::string to_hex(std::span<const std::uint8_t> b);
Bytes from_hex(std::string_view hex);

}  // namespace awn
