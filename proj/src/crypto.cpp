#include "awn/crypto.hpp"

#include <gmp.h>
#include <openssl/core_names.h>
#include <openssl/evp.h>

#include <cassert>
#include <cstring>
#include <memory>
#include <stdexcept>

namespace awn::crypto {

namespace {

constexpr std::size_t kHashLen = 32;
constexpr std::size_t kGcmIvLen = 12;
constexpr std::size_t kGcmTagLen = 16;

[[noreturn]] void openssl_fail(const char* what) {
    throw std::runtime_error(std::string("openssl failure in ") + what);
}

struct CipherCtxDeleter {
    void operator()(EVP_CIPHER_CTX* c) const { EVP_CIPHER_CTX_free(c); }
};
using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter>;

struct PkeyDeleter {
    void operator()(EVP_PKEY* p) const { EVP_PKEY_free(p); }
};
using Pkey = std::unique_ptr<EVP_PKEY, PkeyDeleter>;

struct PkeyCtxDeleter {
    void operator()(EVP_PKEY_CTX* p) const { EVP_PKEY_CTX_free(p); }
};
using PkeyCtx = std::unique_ptr<EVP_PKEY_CTX, PkeyCtxDeleter>;

const EVP_CIPHER* gcm_cipher_for(const SymKey& key) {
    switch (key.bits()) {
        case 128: return EVP_aes_128_gcm();
        case 256: return EVP_aes_256_gcm();
        default: throw std::invalid_argument("unsupported AEAD key size");
    }
}

// RAII wrapper over a GMP integer.
class Mpz {
public:
    Mpz() { mpz_init(z_); }
    explicit Mpz(unsigned long v) { mpz_init_set_ui(z_, v); }
    Mpz(const Mpz& o) { mpz_init_set(z_, o.z_); }
    Mpz(Mpz&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Mpz& operator=(const Mpz& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    ~Mpz() { mpz_clear(z_); }

    static Mpz from_bytes(std::span<const std::uint8_t> b) {
        Mpz r;
        if (!b.empty()) mpz_import(r.z_, b.size(), 1, 1, 1, 0, b.data());
        return r;
    }

    /// Big-endian magnitude, left-padded with zeros to `width` bytes.
    Bytes to_bytes(std::size_t width) const {
        Bytes out(width, 0);
        std::size_t count = 0;
        if (mpz_sgn(z_) != 0) {
            std::size_t need = (mpz_sizeinbase(z_, 2) + 7) / 8;
            if (need > width) throw std::runtime_error("integer wider than target buffer");
            mpz_export(out.data() + (width - need), &count, 1, 1, 1, 0, z_);
        }
        return out;
    }

    mpz_t& get() { return z_; }
    const mpz_t& get() const { return z_; }

private:
    mpz_t z_;
};

Mpz powm(const Mpz& base, const Mpz& exp, const Mpz& mod) {
    Mpz r;
    mpz_powm(r.get(), base.get(), exp.get(), mod.get());
    return r;
}

/// Random prime with the top two bits set, so products of two such primes
/// always reach the full modulus width.
Mpz random_prime(unsigned bits, DetRng& rng, const Mpz& must_be_coprime_to) {
    for (;;) {
        Bytes raw = rng.next_bytes(bits / 8);
        raw[0] |= 0xc0;
        raw[raw.size() - 1] |= 0x01;
        Mpz candidate = Mpz::from_bytes(raw);
        Mpz p;
        mpz_nextprime(p.get(), candidate.get());
        if (mpz_sizeinbase(p.get(), 2) != bits) continue;
        Mpz pm1(p), g;
        mpz_sub_ui(pm1.get(), pm1.get(), 1);
        mpz_gcd(g.get(), pm1.get(), must_be_coprime_to.get());
        if (mpz_cmp_ui(g.get(), 1) == 0) return p;
    }
}

Bytes mgf1(std::span<const std::uint8_t> seed, std::size_t out_len) {
    Bytes out;
    out.reserve(out_len + kHashLen);
    std::uint32_t counter = 0;
    while (out.size() < out_len) {
        Bytes block(seed.begin(), seed.end());
        append_u32be(block, counter++);
        Bytes digest = sha256(block);
        append(out, digest);
    }
    out.resize(out_len);
    return out;
}

void xor_into(Bytes& dst, std::span<const std::uint8_t> mask) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= mask[i];
}

// SHA-256 DigestInfo prefix for EMSA-PKCS1-v1_5.
constexpr std::uint8_t kSha256DigestInfo[] = {0x30, 0x31, 0x30, 0x0d, 0x06, 0x09, 0x60,
                                              0x86, 0x48, 0x01, 0x65, 0x03, 0x04, 0x02,
                                              0x01, 0x05, 0x00, 0x04, 0x20};

Bytes pkcs1_sign_encoding(std::span<const std::uint8_t> msg, std::size_t k) {
    Bytes h = sha256(msg);
    const std::size_t t_len = sizeof(kSha256DigestInfo) + h.size();
    Bytes em(k, 0xff);
    em[0] = 0x00;
    em[1] = 0x01;
    em[k - t_len - 1] = 0x00;
    std::memcpy(em.data() + k - t_len, kSha256DigestInfo, sizeof(kSha256DigestInfo));
    std::memcpy(em.data() + k - h.size(), h.data(), h.size());
    return em;
}

}  // namespace

// ---------------------------------------------------------------------------
// SymKey / Nonce
// ---------------------------------------------------------------------------

SymKey SymKey::from_bytes(Bytes material) {
    const std::size_t n = material.size();
    if (n != 16 && n != 32) {
        throw std::invalid_argument("symmetric key must be 128 or 256 bits, got " +
                                    std::to_string(n * 8));
    }
    return SymKey(std::move(material));
}

SymKey SymKey::random(unsigned bits, DetRng& rng) {
    if (bits != 128 && bits != 256) throw std::invalid_argument("key bits must be 128 or 256");
    return SymKey(rng.next_bytes(bits / 8));
}

Nonce Nonce::generate(DetRng& rng, const NodeId& origin) {
    return Nonce{rng.next_bytes(kSize), origin};
}

// ---------------------------------------------------------------------------
// SealedBox
// ---------------------------------------------------------------------------

Bytes SealedBox::serialize() const {
    Bytes out;
    append_u8(out, static_cast<std::uint8_t>(scheme));
    for (const Bytes* part : {&aad, &iv, &body, &tag}) {
        if (part->size() > 0xffff) throw std::invalid_argument("sealed box part too large");
        append_u16be(out, static_cast<std::uint16_t>(part->size()));
        append(out, *part);
    }
    return out;
}

std::optional<SealedBox> SealedBox::deserialize(std::span<const std::uint8_t> b) {
    if (b.size() < 1) return std::nullopt;
    std::uint8_t scheme = b[0];
    if (scheme != static_cast<std::uint8_t>(BoxScheme::SymmetricAead) &&
        scheme != static_cast<std::uint8_t>(BoxScheme::PublicKey)) {
        return std::nullopt;
    }
    SealedBox box;
    box.scheme = static_cast<BoxScheme>(scheme);
    std::size_t pos = 1;
    for (Bytes* part : {&box.aad, &box.iv, &box.body, &box.tag}) {
        if (pos + 2 > b.size()) return std::nullopt;
        std::size_t len = (static_cast<std::size_t>(b[pos]) << 8) | b[pos + 1];
        pos += 2;
        if (pos + len > b.size()) return std::nullopt;
        part->assign(b.begin() + pos, b.begin() + pos + len);
        pos += len;
    }
    if (pos != b.size()) return std::nullopt;
    return box;
}

Bytes make_iv(std::uint32_t context, std::uint64_t counter) {
    Bytes iv;
    iv.reserve(kGcmIvLen);
    append_u32be(iv, context);
    append_u64be(iv, counter);
    return iv;
}

// ---------------------------------------------------------------------------
// AEAD
// ---------------------------------------------------------------------------

SealedBox aead_seal(const SymKey& key, std::span<const std::uint8_t> plaintext,
                    std::span<const std::uint8_t> aad, std::span<const std::uint8_t> iv) {
    if (iv.size() != kGcmIvLen) throw std::invalid_argument("AEAD iv must be 12 bytes");
    CipherCtx ctx(EVP_CIPHER_CTX_new());
    if (!ctx) openssl_fail("EVP_CIPHER_CTX_new");
    if (EVP_EncryptInit_ex(ctx.get(), gcm_cipher_for(key), nullptr, key.material().data(),
                           iv.data()) != 1) {
        openssl_fail("EncryptInit");
    }
    int len = 0;
    if (!aad.empty() &&
        EVP_EncryptUpdate(ctx.get(), nullptr, &len, aad.data(), static_cast<int>(aad.size())) != 1) {
        openssl_fail("EncryptUpdate aad");
    }
    SealedBox box;
    box.scheme = BoxScheme::SymmetricAead;
    box.aad.assign(aad.begin(), aad.end());
    box.iv.assign(iv.begin(), iv.end());
    box.body.resize(plaintext.size());
    if (!plaintext.empty() &&
        EVP_EncryptUpdate(ctx.get(), box.body.data(), &len, plaintext.data(),
                          static_cast<int>(plaintext.size())) != 1) {
        openssl_fail("EncryptUpdate");
    }
    if (EVP_EncryptFinal_ex(ctx.get(), box.body.data() + box.body.size(), &len) != 1) {
        openssl_fail("EncryptFinal");
    }
    box.tag.resize(kGcmTagLen);
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_GET_TAG, kGcmTagLen, box.tag.data()) != 1) {
        openssl_fail("GET_TAG");
    }
    return box;
}

std::optional<Bytes> aead_open(const SymKey& key, const SealedBox& box,
                               std::span<const std::uint8_t> aad) {
    if (box.scheme != BoxScheme::SymmetricAead) return std::nullopt;
    if (box.iv.size() != kGcmIvLen || box.tag.size() != kGcmTagLen) return std::nullopt;
    CipherCtx ctx(EVP_CIPHER_CTX_new());
    if (!ctx) openssl_fail("EVP_CIPHER_CTX_new");
    if (EVP_DecryptInit_ex(ctx.get(), gcm_cipher_for(key), nullptr, key.material().data(),
                           box.iv.data()) != 1) {
        openssl_fail("DecryptInit");
    }
    int len = 0;
    if (!aad.empty() &&
        EVP_DecryptUpdate(ctx.get(), nullptr, &len, aad.data(), static_cast<int>(aad.size())) != 1) {
        return std::nullopt;
    }
    Bytes plain(box.body.size());
    if (!box.body.empty() &&
        EVP_DecryptUpdate(ctx.get(), plain.data(), &len, box.body.data(),
                          static_cast<int>(box.body.size())) != 1) {
        return std::nullopt;
    }
    Bytes tag = box.tag;
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_TAG, kGcmTagLen, tag.data()) != 1) {
        openssl_fail("SET_TAG");
    }
    if (EVP_DecryptFinal_ex(ctx.get(), plain.data() + plain.size(), &len) != 1) {
        return std::nullopt;  // tag mismatch: tampered, wrong key, or wrong aad
    }
    return plain;
}

// ---------------------------------------------------------------------------
// RSA
// ---------------------------------------------------------------------------

RsaPublicKey::RsaPublicKey(Bytes modulus_be, Bytes exponent_be)
    : n_(std::move(modulus_be)), e_(std::move(exponent_be)) {}

unsigned RsaPublicKey::modulus_bits() const {
    if (n_.empty()) return 0;
    unsigned bits = static_cast<unsigned>(n_.size() * 8);
    std::uint8_t top = n_[0];
    for (int i = 7; i >= 0 && !(top & (1u << i)); --i) --bits;
    return bits;
}

Bytes RsaPublicKey::serialize() const {
    Bytes out;
    append_u16be(out, static_cast<std::uint16_t>(n_.size()));
    append(out, n_);
    append_u16be(out, static_cast<std::uint16_t>(e_.size()));
    append(out, e_);
    return out;
}

std::optional<RsaPublicKey> RsaPublicKey::deserialize(std::span<const std::uint8_t> b) {
    std::size_t pos = 0;
    Bytes parts[2];
    for (Bytes& part : parts) {
        if (pos + 2 > b.size()) return std::nullopt;
        std::size_t len = (static_cast<std::size_t>(b[pos]) << 8) | b[pos + 1];
        pos += 2;
        if (pos + len > b.size()) return std::nullopt;
        part.assign(b.begin() + pos, b.begin() + pos + len);
        pos += len;
    }
    if (pos != b.size() || parts[0].empty() || parts[1].empty()) return std::nullopt;
    return RsaPublicKey(std::move(parts[0]), std::move(parts[1]));
}

RsaKeyPair RsaKeyPair::generate(unsigned modulus_bits, DetRng& rng) {
    if (modulus_bits % 16 != 0 || modulus_bits < 1024) {
        throw std::invalid_argument("unsupported RSA modulus size");
    }
    const Mpz e(65537);
    for (;;) {
        Mpz p = random_prime(modulus_bits / 2, rng, e);
        Mpz q = random_prime(modulus_bits / 2, rng, e);
        if (mpz_cmp(p.get(), q.get()) == 0) continue;
        // Keep p > q so the CRT recombination below needs no sign fixup.
        if (mpz_cmp(p.get(), q.get()) < 0) mpz_swap(p.get(), q.get());

        Mpz n, pm1, qm1, lambda, d;
        mpz_mul(n.get(), p.get(), q.get());
        if (mpz_sizeinbase(n.get(), 2) != modulus_bits) continue;
        mpz_sub_ui(pm1.get(), p.get(), 1);
        mpz_sub_ui(qm1.get(), q.get(), 1);
        mpz_lcm(lambda.get(), pm1.get(), qm1.get());
        if (mpz_invert(d.get(), e.get(), lambda.get()) == 0) continue;

        Mpz dp, dq, qinv;
        mpz_mod(dp.get(), d.get(), pm1.get());
        mpz_mod(dq.get(), d.get(), qm1.get());
        if (mpz_invert(qinv.get(), q.get(), p.get()) == 0) continue;

        const std::size_t k = modulus_bits / 8;
        const std::size_t half = k / 2;
        RsaKeyPair pair;
        pair.pub_ = RsaPublicKey(n.to_bytes(k), Bytes{0x01, 0x00, 0x01});
        pair.p_ = p.to_bytes(half);
        pair.q_ = q.to_bytes(half);
        pair.dp_ = dp.to_bytes(half);
        pair.dq_ = dq.to_bytes(half);
        pair.qinv_ = qinv.to_bytes(half);
        return pair;
    }
}

// Private-exponent operation via CRT.
static Mpz rsa_private_op_impl(const Bytes& pb, const Bytes& qb, const Bytes& dpb,
                               const Bytes& dqb, const Bytes& qinvb, const Mpz& c) {
    Mpz p = Mpz::from_bytes(pb);
    Mpz q = Mpz::from_bytes(qb);
    Mpz dp = Mpz::from_bytes(dpb);
    Mpz dq = Mpz::from_bytes(dqb);
    Mpz qinv = Mpz::from_bytes(qinvb);

    Mpz m1 = powm(c, dp, p);
    Mpz m2 = powm(c, dq, q);
    Mpz h;
    mpz_sub(h.get(), m1.get(), m2.get());
    mpz_mod(h.get(), h.get(), p.get());
    mpz_mul(h.get(), h.get(), qinv.get());
    mpz_mod(h.get(), h.get(), p.get());
    Mpz m;
    mpz_mul(m.get(), h.get(), q.get());
    mpz_add(m.get(), m.get(), m2.get());
    return m;
}

std::size_t pk_max_payload(const RsaPublicKey& pub) {
    const std::size_t k = pub.modulus_bytes();
    if (k < 2 * kHashLen + 2) return 0;
    return k - 2 * kHashLen - 2;
}

SealedBox pk_encrypt(const RsaPublicKey& pub, std::span<const std::uint8_t> plaintext,
                     DetRng& rng) {
    const std::size_t k = pub.modulus_bytes();
    if (plaintext.size() > pk_max_payload(pub)) {
        throw std::invalid_argument("plaintext exceeds OAEP capacity of " +
                                    std::to_string(pk_max_payload(pub)) + " bytes");
    }
    // EME-OAEP encode (SHA-256, empty label).
    const Bytes l_hash = sha256({});
    Bytes db;
    db.reserve(k - kHashLen - 1);
    append(db, l_hash);
    db.resize(k - kHashLen - 1 - plaintext.size() - 1, 0);
    db.push_back(0x01);
    append(db, plaintext);

    Bytes seed = rng.next_bytes(kHashLen);
    xor_into(db, mgf1(seed, db.size()));
    xor_into(seed, mgf1(db, kHashLen));

    Bytes em;
    em.reserve(k);
    em.push_back(0x00);
    append(em, seed);
    append(em, db);

    Mpz m = Mpz::from_bytes(em);
    Mpz n = Mpz::from_bytes(pub.modulus());
    Mpz e = Mpz::from_bytes(pub.exponent());
    Mpz c = powm(m, e, n);

    SealedBox box;
    box.scheme = BoxScheme::PublicKey;
    box.body = c.to_bytes(k);
    return box;
}

std::optional<Bytes> pk_decrypt(const RsaKeyPair& keypair, const SealedBox& box) {
    if (box.scheme != BoxScheme::PublicKey) return std::nullopt;
    const std::size_t k = keypair.public_key().modulus_bytes();
    if (box.body.size() != k) return std::nullopt;

    Mpz c = Mpz::from_bytes(box.body);
    Mpz n = Mpz::from_bytes(keypair.public_key().modulus());
    if (mpz_cmp(c.get(), n.get()) >= 0) return std::nullopt;
    Mpz m = rsa_private_op_impl(keypair.p_, keypair.q_, keypair.dp_, keypair.dq_,
                                keypair.qinv_, c);
    Bytes em = m.to_bytes(k);

    // EME-OAEP decode.
    if (em[0] != 0x00) return std::nullopt;
    Bytes seed(em.begin() + 1, em.begin() + 1 + kHashLen);
    Bytes db(em.begin() + 1 + kHashLen, em.end());
    xor_into(seed, mgf1(db, kHashLen));
    xor_into(db, mgf1(seed, db.size()));

    const Bytes l_hash = sha256({});
    if (!std::equal(l_hash.begin(), l_hash.end(), db.begin())) return std::nullopt;
    std::size_t i = kHashLen;
    while (i < db.size() && db[i] == 0x00) ++i;
    if (i >= db.size() || db[i] != 0x01) return std::nullopt;
    return Bytes(db.begin() + i + 1, db.end());
}

Bytes sign(const RsaKeyPair& keypair, std::span<const std::uint8_t> msg) {
    const std::size_t k = keypair.public_key().modulus_bytes();
    Bytes em = pkcs1_sign_encoding(msg, k);
    Mpz m = Mpz::from_bytes(em);
    Mpz s = rsa_private_op_impl(keypair.p_, keypair.q_, keypair.dp_, keypair.dq_,
                                keypair.qinv_, m);
    return s.to_bytes(k);
}

bool verify(const RsaPublicKey& pub, std::span<const std::uint8_t> msg,
            std::span<const std::uint8_t> sig) {
    const std::size_t k = pub.modulus_bytes();
    if (sig.size() != k || k == 0) return false;
    Mpz s = Mpz::from_bytes(sig);
    Mpz n = Mpz::from_bytes(pub.modulus());
    if (mpz_cmp(s.get(), n.get()) >= 0) return false;
    Mpz e = Mpz::from_bytes(pub.exponent());
    Mpz m = powm(s, e, n);
    Bytes em;
    try {
        em = m.to_bytes(k);
    } catch (const std::runtime_error&) {
        return false;
    }
    return em == pkcs1_sign_encoding(msg, k);
}

// ---------------------------------------------------------------------------
// KDF
// ---------------------------------------------------------------------------

SymKey kdf(const std::vector<Bytes>& labels, unsigned out_bits) {
    if (out_bits != 128 && out_bits != 256) {
        throw std::invalid_argument("kdf output must be 128 or 256 bits");
    }
    bool any_nonempty = false;
    for (const auto& l : labels) any_nonempty |= !l.empty();
    if (!any_nonempty) throw std::invalid_argument("kdf requires at least one non-empty label");

    Bytes encoded;
    for (const auto& l : labels) {
        append_u32be(encoded, static_cast<std::uint32_t>(l.size()));
        append(encoded, l);
    }
    const Bytes prk = hmac_sha256(to_bytes("awn-kdf-v1"), encoded);

    Bytes okm;
    Bytes t;
    std::uint8_t counter = 1;
    while (okm.size() < out_bits / 8) {
        Bytes block = t;
        append(block, to_bytes("awn-kdf-expand"));
        block.push_back(counter++);
        t = hmac_sha256(prk, block);
        append(okm, t);
    }
    okm.resize(out_bits / 8);
    return SymKey::from_bytes(std::move(okm));
}

// ---------------------------------------------------------------------------
// X25519
// ---------------------------------------------------------------------------

DhKeyPair dh_keygen(DetRng& rng) {
    Bytes secret = rng.next_bytes(32);
    Pkey key(EVP_PKEY_new_raw_private_key(EVP_PKEY_X25519, nullptr, secret.data(), secret.size()));
    if (!key) openssl_fail("X25519 private key");
    Bytes pub(32);
    std::size_t len = pub.size();
    if (EVP_PKEY_get_raw_public_key(key.get(), pub.data(), &len) != 1 || len != 32) {
        openssl_fail("X25519 public key");
    }
    return DhKeyPair{std::move(pub), std::move(secret)};
}

std::optional<Bytes> dh_shared(const Bytes& secret_part, const Bytes& peer_public) {
    if (secret_part.size() != 32 || peer_public.size() != 32) return std::nullopt;
    Pkey own(EVP_PKEY_new_raw_private_key(EVP_PKEY_X25519, nullptr, secret_part.data(),
                                          secret_part.size()));
    Pkey peer(EVP_PKEY_new_raw_public_key(EVP_PKEY_X25519, nullptr, peer_public.data(),
                                          peer_public.size()));
    if (!own || !peer) return std::nullopt;
    PkeyCtx ctx(EVP_PKEY_CTX_new(own.get(), nullptr));
    if (!ctx) return std::nullopt;
    if (EVP_PKEY_derive_init(ctx.get()) != 1) return std::nullopt;
    if (EVP_PKEY_derive_set_peer(ctx.get(), peer.get()) != 1) return std::nullopt;
    Bytes shared(32);
    std::size_t len = shared.size();
    if (EVP_PKEY_derive(ctx.get(), shared.data(), &len) != 1 || len != 32) {
        return std::nullopt;  // identity / low-order peer point
    }
    bool all_zero = true;
    for (std::uint8_t b : shared) all_zero &= (b == 0);
    if (all_zero) return std::nullopt;
    return shared;
}

// ---------------------------------------------------------------------------
// Hashes
// ---------------------------------------------------------------------------

Bytes sha256(std::span<const std::uint8_t> data) {
    Bytes out(kHashLen);
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != kHashLen) {
        openssl_fail("EVP_Digest");
    }
    return out;
}

Bytes hmac_sha256(std::span<const std::uint8_t> key, std::span<const std::uint8_t> msg) {
    struct MacDeleter {
        void operator()(EVP_MAC* m) const { EVP_MAC_free(m); }
    };
    struct MacCtxDeleter {
        void operator()(EVP_MAC_CTX* m) const { EVP_MAC_CTX_free(m); }
    };
    static const std::unique_ptr<EVP_MAC, MacDeleter> mac(
        EVP_MAC_fetch(nullptr, "HMAC", nullptr));
    if (!mac) openssl_fail("EVP_MAC_fetch");
    std::unique_ptr<EVP_MAC_CTX, MacCtxDeleter> ctx(EVP_MAC_CTX_new(mac.get()));
    if (!ctx) openssl_fail("EVP_MAC_CTX_new");
    char digest_name[] = "SHA256";
    OSSL_PARAM params[] = {
        OSSL_PARAM_construct_utf8_string(OSSL_MAC_PARAM_DIGEST, digest_name, 0),
        OSSL_PARAM_construct_end(),
    };
    if (EVP_MAC_init(ctx.get(), key.data(), key.size(), params) != 1) openssl_fail("EVP_MAC_init");
    if (EVP_MAC_update(ctx.get(), msg.data(), msg.size()) != 1) openssl_fail("EVP_MAC_update");
    Bytes out(kHashLen);
    std::size_t len = 0;
    if (EVP_MAC_final(ctx.get(), out.data(), &len, out.size()) != 1 || len != kHashLen) {
        openssl_fail("EVP_MAC_final");
    }
    return out;
}

}  // namespace awn::crypto
