#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hvlcl {

// Growable bit sequence, MSB-first within each backing byte. Appending is
// the write path; random access is read-only.
class BitVec {
public:
    BitVec() = default;

    void push_back(bool bit);
    // Appends the low `nbits` of `value`, most significant of those first.
    void append_uint(std::uint64_t value, int nbits);
    void append(const BitVec& other);

    bool operator[](std::size_t i) const {
        return (bytes_[i >> 3] >> (7 - (i & 7))) & 1;
    }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    // Backing bytes; bits past size() in the last byte are zero.
    std::span<const std::uint8_t> bytes() const { return bytes_; }

    static BitVec from_bytes(std::span<const std::uint8_t> data, std::size_t nbits);
    // Test/debug helper: parses "0100...", ignoring spaces.
    static BitVec from_string(std::string_view s);
    std::string to_string() const;

    bool operator==(const BitVec&) const = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t size_ = 0;
};

// Sequential reader over a bit sequence. Never yields bits past the declared
// length; throws std::runtime_error on underflow.
class BitReader {
public:
    explicit BitReader(const BitVec& bits)
        : data_(bits.bytes()), size_(bits.size()) {}
    BitReader(std::span<const std::uint8_t> data, std::size_t nbits);

    bool read_bit();
    std::uint64_t read_uint(int nbits);

    std::size_t pos() const { return pos_; }
    std::size_t remaining() const { return size_ - pos_; }

private:
    std::span<const std::uint8_t> data_;
    std::size_t size_ = 0;
    std::size_t pos_ = 0;
};

// FIFO bit buffer for the streaming label-map decode: codeword bits are
// popped from the front while harvested pixel bits are pushed at the back.
class BitQueue {
public:
    void push(bool bit) { bits_.push_back(bit ? 1 : 0); }
    void push_uint(std::uint64_t value, int nbits);

    std::optional<bool> pop();

    std::size_t size() const { return bits_.size() - head_; }
    BitVec take_remaining();

private:
    std::vector<std::uint8_t> bits_;
    std::size_t head_ = 0;
};

}  // namespace hvlcl
