#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "awn/bytes.hpp"
#include "awn/crypto.hpp"
#include "awn/errors.hpp"

namespace awn::wire {

// ---------------------------------------------------------------------------
// Protocol identifiers
// ---------------------------------------------------------------------------

enum class ProtocolKind : std::uint8_t {
    PskDirect = 0x01,
    PskMaster = 0x02,
    PskNetLayer = 0x03,
    TkdfSym = 0x04,
    TkdfSymUnfixed = 0x05,
    TkdfAsym = 0x06,
    TkdfAsymUnfixed = 0x07,
    OnDemandSts = 0x08,
};

/// All kinds, in protocol_id order.
const std::vector<ProtocolKind>& all_protocol_kinds();

/// Kinds accepted without --allow-insecure (the Unfixed variants exist only
/// as negative controls for the attack suite).
bool is_insecure_variant(ProtocolKind kind);

std::string kind_name(ProtocolKind kind);
std::optional<ProtocolKind> kind_from_name(std::string_view name);

/// Number of messages in the kind's happy-path flow.
unsigned flow_length(ProtocolKind kind);

// ---------------------------------------------------------------------------
// Payload fields
// ---------------------------------------------------------------------------

enum class FieldKind : std::uint8_t {
    Identity = 0x01,   // 8-byte node label
    Nonce = 0x02,      // 16 bytes
    Sealed = 0x03,     // serialized SealedBox
    PublicKey = 0x04,  // DH share or distributed RSA public key
    Signature = 0x05,  // raw signature bytes
    Timestamp = 0x06,  // u64 virtual microseconds, big-endian
};

struct Field {
    FieldKind kind;
    Bytes value;

    static Field identity(const NodeId& id) { return {FieldKind::Identity, to_bytes(id)}; }
    static Field nonce(const Bytes& n) { return {FieldKind::Nonce, n}; }
    static Field sealed(const crypto::SealedBox& box) { return {FieldKind::Sealed, box.serialize()}; }
    static Field public_key(Bytes raw) { return {FieldKind::PublicKey, std::move(raw)}; }
    static Field signature(Bytes raw) { return {FieldKind::Signature, std::move(raw)}; }
    static Field timestamp(std::uint64_t t) {
        Bytes b;
        append_u64be(b, t);
        return {FieldKind::Timestamp, std::move(b)};
    }

    bool operator==(const Field&) const = default;
};

// ---------------------------------------------------------------------------
// Messages
// ---------------------------------------------------------------------------

struct WireMessage {
    ProtocolKind protocol;
    std::uint8_t msg_index = 1;  // 1-based position in the flow
    NodeId sender;
    NodeId receiver;
    std::vector<Field> payload;

    bool operator==(const WireMessage&) const = default;
};

/// Field kinds required for (protocol, msg_index); empty optional when the
/// index is outside the flow.
std::optional<std::vector<FieldKind>> schema_for(ProtocolKind kind, unsigned msg_index);

/// Deterministic byte encoding: [protocol_id][msg_index][sender][receiver]
/// then one [kind][u16 length][bytes] unit per payload field. Throws
/// SchemaError when the payload does not match the flow schema.
Bytes encode(const WireMessage& msg);

/// Strict inverse of encode. Rejects truncation, trailing bytes, unknown
/// protocol ids, and payloads that do not match the schema.
std::optional<WireMessage> decode(std::span<const std::uint8_t> bytes,
                                  std::string* error = nullptr);

// ---------------------------------------------------------------------------
// Transcript (the monitor-mode view of everything on air)
// ---------------------------------------------------------------------------

struct TranscriptEntry {
    std::uint64_t time_us = 0;
    NodeId from;  // hop-level endpoints
    NodeId to;
    Bytes frame;
    bool delivered = false;
};

class Transcript {
public:
    void record(TranscriptEntry entry);
    const std::vector<TranscriptEntry>& entries() const { return entries_; }

    /// One JSON object per line: time, endpoints, delivered flag, hex bytes,
    /// and a decoded view when the frame parses as a protocol message.
    std::string to_jsonl() const;

private:
    std::vector<TranscriptEntry> entries_;
};

}  // namespace awn::wire
