#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "awn/bytes.hpp"
#include "awn/rng.hpp"

namespace awn::crypto {

// ---------------------------------------------------------------------------
// Symmetric keys and nonces
// ---------------------------------------------------------------------------

/// Symmetric key of 128 or 256 bits.
class SymKey {
public:
    static SymKey from_bytes(Bytes material);
    static SymKey random(unsigned bits, DetRng& rng);

    unsigned bits() const { return static_cast<unsigned>(material_.size() * 8); }
    const Bytes& material() const { return material_; }

    bool operator==(const SymKey&) const = default;

private:
    explicit SymKey(Bytes material) : material_(std::move(material)) {}
    Bytes material_;
};

/// 128-bit freshness value, tagged with the node that generated it.
struct Nonce {
    static constexpr std::size_t kSize = 16;

    Bytes value;    // exactly kSize bytes
    NodeId origin;

    static Nonce generate(DetRng& rng, const NodeId& origin);
};

// ---------------------------------------------------------------------------
// Sealed boxes
// ---------------------------------------------------------------------------

enum class BoxScheme : std::uint8_t {
    SymmetricAead = 1,
    PublicKey = 2,
};

/// Carrier for every "{...}K" term that crosses the wire. Opening with the
/// wrong key, wrong associated data, or a tampered body fails cleanly.
struct SealedBox {
    BoxScheme scheme = BoxScheme::SymmetricAead;
    Bytes aad;   // associated data (authenticated, not encrypted)
    Bytes iv;    // 12 bytes for AEAD; empty for public-key boxes
    Bytes body;  // ciphertext
    Bytes tag;   // 16-byte integrity tag for AEAD; empty for public-key boxes

    Bytes serialize() const;
    static std::optional<SealedBox> deserialize(std::span<const std::uint8_t> b);

    bool operator==(const SealedBox&) const = default;
};

/// Per-key counter IV: 4-byte context || 8-byte big-endian counter.
Bytes make_iv(std::uint32_t context, std::uint64_t counter);

/// AES-GCM with a 128-bit tag. The caller owns the IV discipline; an IV must
/// never repeat under one key.
SealedBox aead_seal(const SymKey& key, std::span<const std::uint8_t> plaintext,
                    std::span<const std::uint8_t> aad, std::span<const std::uint8_t> iv);

/// Returns the plaintext iff key and aad match the sealing inputs and the box
/// is untampered; nullopt otherwise.
std::optional<Bytes> aead_open(const SymKey& key, const SealedBox& box,
                               std::span<const std::uint8_t> aad);

// ---------------------------------------------------------------------------
// RSA-2048 (encryption with randomized OAEP padding, deterministic
// PKCS#1 v1.5 signatures over SHA-256)
// ---------------------------------------------------------------------------

class RsaPublicKey {
public:
    RsaPublicKey() = default;
    RsaPublicKey(Bytes modulus_be, Bytes exponent_be);

    const Bytes& modulus() const { return n_; }
    const Bytes& exponent() const { return e_; }
    std::size_t modulus_bytes() const { return n_.size(); }
    unsigned modulus_bits() const;

    Bytes serialize() const;
    static std::optional<RsaPublicKey> deserialize(std::span<const std::uint8_t> b);

    bool operator==(const RsaPublicKey&) const = default;

private:
    Bytes n_;  // big-endian magnitude
    Bytes e_;
};

class RsaKeyPair {
public:
    const RsaPublicKey& public_key() const { return pub_; }

    /// Deterministic given the rng stream; always a valid pair.
    static RsaKeyPair generate(unsigned modulus_bits, DetRng& rng);

    bool operator==(const RsaKeyPair&) const = default;

private:
    friend std::optional<Bytes> pk_decrypt(const RsaKeyPair&, const SealedBox&);
    friend Bytes sign(const RsaKeyPair&, std::span<const std::uint8_t>);

    RsaPublicKey pub_;
    // Private half, big-endian magnitudes. CRT form for fast private ops.
    Bytes p_, q_, dp_, dq_, qinv_;
};

/// Largest plaintext a single OAEP-SHA256 block can carry for this modulus.
std::size_t pk_max_payload(const RsaPublicKey& pub);

/// Randomized-padding public-key encryption. Throws std::invalid_argument if
/// the plaintext exceeds pk_max_payload.
SealedBox pk_encrypt(const RsaPublicKey& pub, std::span<const std::uint8_t> plaintext,
                     DetRng& rng);

/// Returns the plaintext iff the box was produced for this key pair and is
/// intact; nullopt otherwise.
std::optional<Bytes> pk_decrypt(const RsaKeyPair& keypair, const SealedBox& box);

/// Deterministic signature (256 bytes for a 2048-bit modulus).
Bytes sign(const RsaKeyPair& keypair, std::span<const std::uint8_t> msg);

/// True iff sig was produced by the matching private key over exactly msg.
/// Never throws; malformed signatures simply verify false.
bool verify(const RsaPublicKey& pub, std::span<const std::uint8_t> msg,
            std::span<const std::uint8_t> sig);

// ---------------------------------------------------------------------------
// Key derivation
// ---------------------------------------------------------------------------

/// Extract-then-expand over HMAC-SHA256. Labels are length-prefixed before
/// extraction, so no two distinct label lists collide by concatenation.
/// out_bits must be 128 or 256; at least one label must be non-empty.
SymKey kdf(const std::vector<Bytes>& labels, unsigned out_bits);

// ---------------------------------------------------------------------------
// Ephemeral Diffie-Hellman (X25519)
// ---------------------------------------------------------------------------

struct DhKeyPair {
    Bytes public_part;  // 32 bytes
    Bytes secret_part;  // 32 bytes
};

DhKeyPair dh_keygen(DetRng& rng);

/// Shared secret, or nullopt for identity/low-order peer points.
std::optional<Bytes> dh_shared(const Bytes& secret_part, const Bytes& peer_public);

// ---------------------------------------------------------------------------
// Hash helpers
// ---------------------------------------------------------------------------

Bytes sha256(std::span<const std::uint8_t> data);
Bytes hmac_sha256(std::span<const std::uint8_t> key, std::span<const std::uint8_t> msg);

// ---------------------------------------------------------------------------
// Operation accounting (drives the simulator's virtual cost model)
// ---------------------------------------------------------------------------

struct OpCounts {
    std::uint64_t aead_seal = 0;
    std::uint64_t aead_open = 0;
    std::uint64_t pk_encrypt = 0;
    std::uint64_t pk_decrypt = 0;
    std::uint64_t sign = 0;
    std::uint64_t verify = 0;
    std::uint64_t dh_keygen = 0;
    std::uint64_t dh_shared = 0;
    std::uint64_t kdf = 0;

    OpCounts operator-(const OpCounts& o) const {
        return {aead_seal - o.aead_seal, aead_open - o.aead_open,
                pk_encrypt - o.pk_encrypt, pk_decrypt - o.pk_decrypt,
                sign - o.sign,             verify - o.verify,
                dh_keygen - o.dh_keygen,   dh_shared - o.dh_shared,
                kdf - o.kdf};
    }
    bool operator==(const OpCounts&) const = default;
};

}  // namespace awn::crypto
