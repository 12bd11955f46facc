#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "hvlcl/bits.hpp"
#include "hvlcl/image.hpp"

namespace hvlcl {

// Arbitrary-length key bytes. Two instances drive the pipeline: the
// encryption key and the data-hiding key.
struct KeySpec {
    std::vector<std::uint8_t> bytes;

    // Even-length, case-insensitive hex; empty string means empty key.
    static KeySpec from_hex(std::string_view hex);
};

// FNV-1a over the key bytes; a zero result is replaced with a fixed nonzero
// constant so the generator state is never zero.
std::uint64_t derive_seed(const KeySpec& key);

// Keyed byte stream (xorshift-multiply recurrence). NOT cryptographically
// secure: it exists to make the container format bit-identical across
// implementations, not to provide provable confidentiality.
class Keystream {
public:
    explicit Keystream(std::uint64_t seed);
    explicit Keystream(const KeySpec& key) : Keystream(derive_seed(key)) {}

    std::uint8_t next_byte();
    // Bits of the byte stream, MSB-first within each byte.
    bool next_bit();

private:
    std::uint64_t state_;
    std::uint8_t pending_ = 0;
    int pending_bits_ = 0;
};

std::vector<std::uint8_t> keystream_bytes(std::uint64_t seed, std::size_t count);

// XOR of every pixel against the keystream laid out row-major. Involution.
GrayImage xor_image(const GrayImage& img, const KeySpec& key);

// XOR of a bit sequence against the keystream expanded to bits. Involution.
BitVec xor_bits(const BitVec& bits, const KeySpec& key);

}  // namespace hvlcl
