#include "hvlcl/cipher.hpp"

#include <cctype>
#include <stdexcept>

namespace hvlcl {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;
constexpr std::uint64_t kZeroSeedSubstitute = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kOutputMultiplier = 0x2545F4914F6CDD1Dull;

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

KeySpec KeySpec::from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) throw std::invalid_argument("hex key must have even length");
    KeySpec key;
    key.bytes.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = hex_digit(hex[i]);
        int lo = hex_digit(hex[i + 1]);
        if (hi < 0 || lo < 0) throw std::invalid_argument("invalid hex digit in key");
        key.bytes.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
    }
    return key;
}

std::uint64_t derive_seed(const KeySpec& key) {
    std::uint64_t state = kFnvOffset;
    for (std::uint8_t b : key.bytes) {
        state ^= b;
        state *= kFnvPrime;
    }
    return state != 0 ? state : kZeroSeedSubstitute;
}

Keystream::Keystream(std::uint64_t seed) : state_(seed) {
    if (seed == 0) throw std::invalid_argument("keystream seed must be nonzero");
}

std::uint8_t Keystream::next_byte() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return static_cast<std::uint8_t>((state_ * kOutputMultiplier) >> 56);
}

bool Keystream::next_bit() {
    if (pending_bits_ == 0) {
        pending_ = next_byte();
        pending_bits_ = 8;
    }
    --pending_bits_;
    return (pending_ >> pending_bits_) & 1;
}

std::vector<std::uint8_t> keystream_bytes(std::uint64_t seed, std::size_t count) {
    Keystream ks(seed);
    std::vector<std::uint8_t> out(count);
    for (auto& b : out) b = ks.next_byte();
    return out;
}

GrayImage xor_image(const GrayImage& img, const KeySpec& key) {
    GrayImage out = img;
    Keystream ks(key);
    for (auto& px : out.pixels()) px ^= ks.next_byte();
    return out;
}

BitVec xor_bits(const BitVec& bits, const KeySpec& key) {
    BitVec out;
    Keystream ks(key);
    for (std::size_t i = 0; i < bits.size(); ++i) out.push_back(bits[i] ^ ks.next_bit());
    return out;
}

}  // namespace hvlcl
