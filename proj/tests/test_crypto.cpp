#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "awn/crypto.hpp"

using namespace awn;
using namespace awn::crypto;

namespace {

SymKey test_key_128() {
    Bytes material;
    for (int i = 0; i < 16; ++i) material.push_back(static_cast<std::uint8_t>(i));
    return SymKey::from_bytes(material);
}

}  // namespace

TEST_CASE("symkey accepts only 128 or 256 bits") {
    CHECK_NOTHROW(SymKey::from_bytes(Bytes(16, 0)));
    CHECK_NOTHROW(SymKey::from_bytes(Bytes(32, 0)));
    CHECK_THROWS_AS(SymKey::from_bytes(Bytes(8, 0)), std::invalid_argument);
    CHECK_THROWS_AS(SymKey::from_bytes(Bytes(24, 0)), std::invalid_argument);
}

TEST_CASE("aead seal/open roundtrip") {
    DetRng rng(1);
    SymKey key = SymKey::random(256, rng);
    Bytes pt = to_bytes("hello avionics");
    Bytes aad = to_bytes("header");
    SealedBox box = aead_seal(key, pt, aad, make_iv(1, 0));
    auto opened = aead_open(key, box, aad);
    REQUIRE(opened.has_value());
    CHECK(*opened == pt);
}

TEST_CASE("aead open fails on any single-bit mutation") {
    DetRng rng(2);
    SymKey key = SymKey::random(128, rng);
    Bytes pt = to_bytes("integrity matters");
    Bytes aad = to_bytes("aad");
    SealedBox box = aead_seal(key, pt, aad, make_iv(1, 1));

    for (std::size_t i = 0; i < box.body.size(); ++i) {
        SealedBox mutated = box;
        mutated.body[i] ^= 0x01;
        CHECK_FALSE(aead_open(key, mutated, aad).has_value());
    }
    SealedBox bad_tag = box;
    bad_tag.tag[0] ^= 0x80;
    CHECK_FALSE(aead_open(key, bad_tag, aad).has_value());
}

TEST_CASE("aead open fails with wrong aad") {
    DetRng rng(3);
    SymKey key = SymKey::random(128, rng);
    SealedBox box = aead_seal(key, to_bytes("m"), to_bytes("a"), make_iv(1, 2));
    CHECK_FALSE(aead_open(key, box, to_bytes("b")).has_value());
    CHECK(aead_open(key, box, to_bytes("a")).has_value());
}

TEST_CASE("aead open fails under every derived wrong key") {
    DetRng rng(4);
    SymKey key = SymKey::random(128, rng);
    SealedBox box = aead_seal(key, to_bytes("secret"), {}, make_iv(1, 3));
    for (int i = 0; i < 16; ++i) {
        Bytes other = key.material();
        other[i] ^= 0xff;
        CHECK_FALSE(aead_open(SymKey::from_bytes(other), box, {}).has_value());
    }
}

// Frozen from an independent AES-128-GCM reference implementation.
TEST_CASE("aead golden vector") {
    Bytes iv(12, 0);
    iv[11] = 0x01;
    SealedBox box = aead_seal(test_key_128(), to_bytes("awn secure channel test vector"),
                              to_bytes("awn/aad"), iv);
    CHECK(to_hex(box.body) ==
          "dba2c143be8ca95b3c21649f4bc4604ab9db494f922473f7c8b57abe45a0");
    CHECK(to_hex(box.tag) == "493280b0983af0b3135760574c7624ff");
}

TEST_CASE("sealed box serialization roundtrip and rejection") {
    DetRng rng(5);
    SymKey key = SymKey::random(256, rng);
    SealedBox box = aead_seal(key, to_bytes("payload"), to_bytes("ad"), make_iv(7, 9));
    Bytes raw = box.serialize();
    auto back = SealedBox::deserialize(raw);
    REQUIRE(back.has_value());
    CHECK(*back == box);

    Bytes truncated(raw.begin(), raw.end() - 1);
    CHECK_FALSE(SealedBox::deserialize(truncated).has_value());
    Bytes trailing = raw;
    trailing.push_back(0);
    CHECK_FALSE(SealedBox::deserialize(trailing).has_value());
}

TEST_CASE("pk encrypt/decrypt roundtrip") {
    DetRng rng(6);
    RsaKeyPair pair = RsaKeyPair::generate(2048, rng);
    CHECK(pair.public_key().modulus_bits() == 2048);
    Bytes pt = to_bytes("session key material goes here");
    SealedBox box = pk_encrypt(pair.public_key(), pt, rng);
    auto opened = pk_decrypt(pair, box);
    REQUIRE(opened.has_value());
    CHECK(*opened == pt);
}

TEST_CASE("pk decrypt under unrelated keypair fails") {
    DetRng rng(7);
    RsaKeyPair a = RsaKeyPair::generate(2048, rng);
    RsaKeyPair b = RsaKeyPair::generate(2048, rng);
    SealedBox box = pk_encrypt(a.public_key(), to_bytes("for a only"), rng);
    CHECK_FALSE(pk_decrypt(b, box).has_value());
    CHECK(pk_decrypt(a, box).has_value());
}

TEST_CASE("pk payload boundary follows the padding rules") {
    DetRng rng(8);
    RsaKeyPair pair = RsaKeyPair::generate(2048, rng);
    // 2048-bit modulus, SHA-256 OAEP: 256 - 2*32 - 2 = 190 bytes.
    CHECK(pk_max_payload(pair.public_key()) == 190);
    Bytes max_pt(190, 0xab);
    SealedBox box = pk_encrypt(pair.public_key(), max_pt, rng);
    auto opened = pk_decrypt(pair, box);
    REQUIRE(opened.has_value());
    CHECK(*opened == max_pt);
    Bytes too_long(191, 0xab);
    CHECK_THROWS_AS(pk_encrypt(pair.public_key(), too_long, rng), std::invalid_argument);
}

TEST_CASE("sign/verify") {
    DetRng rng(9);
    RsaKeyPair a = RsaKeyPair::generate(2048, rng);
    RsaKeyPair b = RsaKeyPair::generate(2048, rng);
    Bytes msg = to_bytes("authenticated statement");
    Bytes sig = sign(a, msg);
    CHECK(sig.size() == 256);
    CHECK(verify(a.public_key(), msg, sig));
    CHECK_FALSE(verify(a.public_key(), to_bytes("other statement"), sig));
    CHECK_FALSE(verify(b.public_key(), msg, sig));
    Bytes garbage(256, 0x5a);
    CHECK_FALSE(verify(a.public_key(), msg, garbage));
}

TEST_CASE("public key serialization roundtrip") {
    DetRng rng(10);
    RsaKeyPair pair = RsaKeyPair::generate(2048, rng);
    Bytes raw = pair.public_key().serialize();
    auto back = RsaPublicKey::deserialize(raw);
    REQUIRE(back.has_value());
    CHECK(*back == pair.public_key());
}

TEST_CASE("kdf determinism and label sensitivity") {
    std::vector<Bytes> labels = {to_bytes("master"), to_bytes("Na"), to_bytes("Nb")};
    SymKey k1 = kdf(labels, 256);
    SymKey k2 = kdf(labels, 256);
    CHECK(k1 == k2);

    std::vector<Bytes> permuted = {to_bytes("Na"), to_bytes("master"), to_bytes("Nb")};
    CHECK_FALSE(kdf(permuted, 256) == k1);

    // Length-prefixing means ("ab","c") and ("a","bc") must not collide.
    CHECK_FALSE(kdf({to_bytes("ab"), to_bytes("c")}, 256) ==
                kdf({to_bytes("a"), to_bytes("bc")}, 256));
}

// Frozen from an independent reference implementation of the
// extract-then-expand construction.
TEST_CASE("kdf golden vectors") {
    std::vector<Bytes> labels = {to_bytes("master"), to_bytes("Na"), to_bytes("Nb")};
    CHECK(to_hex(kdf(labels, 256).material()) ==
          "23cccdf1e2544382664d34f7fb8f9cee5b1faddf96265fb5d39a491f16c7a238");
    CHECK(to_hex(kdf(labels, 128).material()) == "23cccdf1e2544382664d34f7fb8f9cee");
}

TEST_CASE("kdf rejects bad output sizes and empty labels") {
    CHECK_THROWS_AS(kdf({to_bytes("x")}, 192), std::invalid_argument);
    CHECK_THROWS_AS(kdf({to_bytes("x")}, 0), std::invalid_argument);
    CHECK_THROWS_AS(kdf({Bytes{}}, 256), std::invalid_argument);
    CHECK_THROWS_AS(kdf({}, 256), std::invalid_argument);
}

TEST_CASE("nonce uniqueness over 10000 draws") {
    DetRng rng(11);
    NodeId origin("nodeA");
    std::set<Bytes> seen;
    for (int i = 0; i < 10000; ++i) {
        Nonce n = Nonce::generate(rng, origin);
        CHECK(n.value.size() == Nonce::kSize);
        seen.insert(n.value);
    }
    CHECK(seen.size() == 10000);
}

TEST_CASE("dh shared secret symmetry over random keypairs") {
    DetRng rng(12);
    for (int i = 0; i < 100; ++i) {
        DhKeyPair a = dh_keygen(rng);
        DhKeyPair b = dh_keygen(rng);
        auto s1 = dh_shared(a.secret_part, b.public_part);
        auto s2 = dh_shared(b.secret_part, a.public_part);
        REQUIRE(s1.has_value());
        REQUIRE(s2.has_value());
        CHECK(*s1 == *s2);
    }
}

TEST_CASE("dh rejects identity-element peer public") {
    DetRng rng(13);
    DhKeyPair a = dh_keygen(rng);
    CHECK_FALSE(dh_shared(a.secret_part, Bytes(32, 0)).has_value());
    CHECK_FALSE(dh_shared(a.secret_part, Bytes(31, 1)).has_value());
}

TEST_CASE("dh shared secret through kdf agrees on both sides") {
    DetRng rng(14);
    DhKeyPair a = dh_keygen(rng);
    DhKeyPair b = dh_keygen(rng);
    auto sa = dh_shared(a.secret_part, b.public_part);
    auto sb = dh_shared(b.secret_part, a.public_part);
    REQUIRE(sa.has_value());
    REQUIRE(sb.has_value());
    SymKey ka = kdf({*sa, to_bytes("Na"), to_bytes("Nb")}, 256);
    SymKey kb = kdf({*sb, to_bytes("Na"), to_bytes("Nb")}, 256);
    CHECK(ka == kb);
}

TEST_CASE("kdf is stable across rng state (pure function)") {
    // Interleave unrelated rng draws; kdf output must not change.
    SymKey before = kdf({to_bytes("a"), to_bytes("b")}, 128);
    DetRng rng(15);
    rng.next_bytes(1024);
    SymKey after = kdf({to_bytes("a"), to_bytes("b")}, 128);
    CHECK(before == after);
}

TEST_CASE("rsa generation is deterministic per seed") {
    DetRng r1(16), r2(16), r3(17);
    RsaKeyPair a = RsaKeyPair::generate(2048, r1);
    RsaKeyPair b = RsaKeyPair::generate(2048, r2);
    RsaKeyPair c = RsaKeyPair::generate(2048, r3);
    CHECK(a.public_key() == b.public_key());
    CHECK_FALSE(a.public_key() == c.public_key());
}
