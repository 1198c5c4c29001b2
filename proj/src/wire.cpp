#include "awn/wire.hpp"

#include <nlohmann/json.hpp>

namespace awn::wire {

const std::vector<ProtocolKind>& all_protocol_kinds() {
    static const std::vector<ProtocolKind> kinds = {
        ProtocolKind::PskDirect,      ProtocolKind::PskMaster,
        ProtocolKind::PskNetLayer,    ProtocolKind::TkdfSym,
        ProtocolKind::TkdfSymUnfixed, ProtocolKind::TkdfAsym,
        ProtocolKind::TkdfAsymUnfixed, ProtocolKind::OnDemandSts,
    };
    return kinds;
}

bool is_insecure_variant(ProtocolKind kind) {
    return kind == ProtocolKind::TkdfSymUnfixed || kind == ProtocolKind::TkdfAsymUnfixed;
}

std::string kind_name(ProtocolKind kind) {
    switch (kind) {
        case ProtocolKind::PskDirect: return "psk-direct";
        case ProtocolKind::PskMaster: return "psk-master";
        case ProtocolKind::PskNetLayer: return "psk-net";
        case ProtocolKind::TkdfSym: return "tkdf-sym";
        case ProtocolKind::TkdfSymUnfixed: return "tkdf-sym-unfixed";
        case ProtocolKind::TkdfAsym: return "tkdf-asym";
        case ProtocolKind::TkdfAsymUnfixed: return "tkdf-asym-unfixed";
        case ProtocolKind::OnDemandSts: return "on-demand-sts";
    }
    return "unknown";
}

std::optional<ProtocolKind> kind_from_name(std::string_view name) {
    for (ProtocolKind k : all_protocol_kinds()) {
        if (kind_name(k) == name) return k;
    }
    return std::nullopt;
}

unsigned flow_length(ProtocolKind kind) {
    switch (kind) {
        case ProtocolKind::PskDirect:
        case ProtocolKind::PskMaster:
        case ProtocolKind::PskNetLayer:
        case ProtocolKind::OnDemandSts: return 4;
        case ProtocolKind::TkdfSym: return 7;
        case ProtocolKind::TkdfSymUnfixed: return 5;
        case ProtocolKind::TkdfAsym:
        case ProtocolKind::TkdfAsymUnfixed: return 7;
    }
    return 0;
}

std::optional<std::vector<FieldKind>> schema_for(ProtocolKind kind, unsigned msg_index) {
    using F = FieldKind;
    if (msg_index == 0 || msg_index > flow_length(kind)) return std::nullopt;
    switch (kind) {
        case ProtocolKind::PskDirect:
        case ProtocolKind::PskNetLayer:
            switch (msg_index) {
                case 1: return {{F::Identity}};            // auth request
                case 2: return {{F::Nonce}};               // challenge
                case 3: return {{F::Sealed}};              // sealed challenge
                case 4: return {{F::Sealed}};              // sealed success
            }
            break;
        case ProtocolKind::PskMaster:
            switch (msg_index) {
                case 1: return {{F::Nonce}};
                case 2: return {{F::Nonce, F::Sealed}};    // Nb + MAC
                case 3: return {{F::Sealed}};              // initiator confirmation
                case 4: return {{F::Sealed}};              // responder confirmation
            }
            break;
        case ProtocolKind::TkdfSym:
            switch (msg_index) {
                case 1: return {{F::Identity}};                                  // A -> B: A
                case 2: return {{F::Sealed}};                                    // B -> A: {A,Nb'}Kbs
                case 3: return {{F::Identity, F::Identity, F::Nonce, F::Sealed}}; // A -> S
                case 4: return {{F::Sealed}};                                    // S -> A
                case 5: return {{F::Sealed}};                                    // ticket to B
                case 6: return {{F::Sealed}};                                    // {Nb}Kab
                case 7: return {{F::Sealed}};                                    // {Nb-1}Kab
            }
            break;
        case ProtocolKind::TkdfSymUnfixed:
            switch (msg_index) {
                case 1: return {{F::Identity, F::Identity, F::Nonce}};  // A -> S
                case 2: return {{F::Sealed}};                           // S -> A
                case 3: return {{F::Sealed}};                           // ticket to B
                case 4: return {{F::Sealed}};                           // {Nb}Kab
                case 5: return {{F::Sealed}};                           // {Nb-1}Kab
            }
            break;
        case ProtocolKind::TkdfAsym:
        case ProtocolKind::TkdfAsymUnfixed:
            switch (msg_index) {
                case 1: return {{F::Identity, F::Identity}};             // A -> S: A,B
                case 2: return {{F::PublicKey, F::Identity, F::Signature}};
                case 3: return {{F::Sealed}};                            // {Na,A}Kpb
                case 4: return {{F::Identity, F::Identity}};             // B -> S: B,A
                case 5: return {{F::PublicKey, F::Identity, F::Signature}};
                case 6: return {{F::Sealed}};                            // {Na,Nb[,B]}Kpa
                case 7: return {{F::Sealed}};                            // {Nb}Kpb
            }
            break;
        case ProtocolKind::OnDemandSts:
            switch (msg_index) {
                case 1: return {{F::PublicKey, F::Nonce}};
                case 2: return {{F::PublicKey, F::Nonce, F::Signature}};
                case 3: return {{F::Signature}};
                case 4: return {{F::Sealed}};  // confirmation MAC
            }
            break;
    }
    return std::nullopt;
}

namespace {

bool valid_kind_byte(std::uint8_t b) {
    return b >= 0x01 && b <= 0x08;
}

std::optional<WireMessage> fail(std::string* error, const std::string& why) {
    if (error) *error = why;
    return std::nullopt;
}

bool field_size_ok(FieldKind kind, std::size_t size) {
    switch (kind) {
        case FieldKind::Identity: return size == NodeId::kSize;
        case FieldKind::Nonce: return size == crypto::Nonce::kSize;
        case FieldKind::Timestamp: return size == 8;
        case FieldKind::Sealed:
        case FieldKind::PublicKey:
        case FieldKind::Signature: return size > 0;
    }
    return false;
}

}  // namespace

Bytes encode(const WireMessage& msg) {
    auto schema = schema_for(msg.protocol, msg.msg_index);
    if (!schema) {
        throw SchemaError("message index " + std::to_string(msg.msg_index) +
                          " outside flow of " + kind_name(msg.protocol));
    }
    if (schema->size() != msg.payload.size()) {
        throw SchemaError(kind_name(msg.protocol) + " message " + std::to_string(msg.msg_index) +
                          " requires " + std::to_string(schema->size()) + " fields, got " +
                          std::to_string(msg.payload.size()));
    }
    Bytes out;
    append_u8(out, static_cast<std::uint8_t>(msg.protocol));
    append_u8(out, msg.msg_index);
    append(out, msg.sender.raw());
    append(out, msg.receiver.raw());
    for (std::size_t i = 0; i < msg.payload.size(); ++i) {
        const Field& f = msg.payload[i];
        if (f.kind != (*schema)[i]) {
            throw SchemaError("field " + std::to_string(i) + " kind mismatch in " +
                              kind_name(msg.protocol) + " message " +
                              std::to_string(msg.msg_index));
        }
        if (!field_size_ok(f.kind, f.value.size())) {
            throw SchemaError("field " + std::to_string(i) + " has invalid size " +
                              std::to_string(f.value.size()));
        }
        if (f.value.size() > 0xffff) throw SchemaError("field too large");
        append_u8(out, static_cast<std::uint8_t>(f.kind));
        append_u16be(out, static_cast<std::uint16_t>(f.value.size()));
        append(out, f.value);
    }
    return out;
}

std::optional<WireMessage> decode(std::span<const std::uint8_t> bytes, std::string* error) {
    constexpr std::size_t kHeader = 2 + 2 * NodeId::kSize;
    if (bytes.size() < kHeader) return fail(error, "truncated header");
    if (!valid_kind_byte(bytes[0])) return fail(error, "unknown protocol id");

    WireMessage msg;
    msg.protocol = static_cast<ProtocolKind>(bytes[0]);
    msg.msg_index = bytes[1];
    msg.sender = NodeId::from_raw(bytes.subspan(2, NodeId::kSize));
    msg.receiver = NodeId::from_raw(bytes.subspan(2 + NodeId::kSize, NodeId::kSize));

    auto schema = schema_for(msg.protocol, msg.msg_index);
    if (!schema) return fail(error, "message index outside protocol flow");

    std::size_t pos = kHeader;
    for (FieldKind expected : *schema) {
        if (pos + 3 > bytes.size()) return fail(error, "truncated field header");
        auto kind = static_cast<FieldKind>(bytes[pos]);
        std::size_t len = (static_cast<std::size_t>(bytes[pos + 1]) << 8) | bytes[pos + 2];
        pos += 3;
        if (kind != expected) return fail(error, "field kind does not match schema");
        if (pos + len > bytes.size()) return fail(error, "truncated field value");
        if (!field_size_ok(kind, len)) return fail(error, "invalid field size");
        Field f;
        f.kind = kind;
        f.value.assign(bytes.begin() + pos, bytes.begin() + pos + len);
        msg.payload.push_back(std::move(f));
        pos += len;
    }
    if (pos != bytes.size()) return fail(error, "trailing bytes after payload");
    return msg;
}

void Transcript::record(TranscriptEntry entry) {
    entries_.push_back(std::move(entry));
}

std::string Transcript::to_jsonl() const {
    std::string out;
    for (const auto& e : entries_) {
        nlohmann::ordered_json line;
        line["t_us"] = e.time_us;
        line["from"] = e.from.str();
        line["to"] = e.to.str();
        line["delivered"] = e.delivered;
        line["hex"] = to_hex(e.frame);
        std::string err;
        if (auto msg = decode(e.frame, &err)) {
            nlohmann::ordered_json view;
            view["protocol"] = kind_name(msg->protocol);
            view["msg_index"] = msg->msg_index;
            view["sender"] = msg->sender.str();
            view["receiver"] = msg->receiver.str();
            nlohmann::ordered_json fields = nlohmann::ordered_json::array();
            for (const auto& f : msg->payload) {
                const char* kind = "?";
                switch (f.kind) {
                    case FieldKind::Identity: kind = "identity"; break;
                    case FieldKind::Nonce: kind = "nonce"; break;
                    case FieldKind::Sealed: kind = "sealed"; break;
                    case FieldKind::PublicKey: kind = "pubkey"; break;
                    case FieldKind::Signature: kind = "signature"; break;
                    case FieldKind::Timestamp: kind = "timestamp"; break;
                }
                fields.push_back({{"kind", kind}, {"hex", to_hex(f.value)}});
            }
            view["fields"] = std::move(fields);
            line["decoded"] = std::move(view);
        } else {
            line["decoded"] = nullptr;
        }
        out += line.dump();
        out += '\n';
    }
    return out;
}

}  // namespace awn::wire
