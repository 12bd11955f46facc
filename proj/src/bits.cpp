#include "hvlcl/bits.hpp"

#include <stdexcept>

namespace hvlcl {

void BitVec::push_back(bool bit) {
    if ((size_ & 7) == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (size_ & 7));
    ++size_;
}

void BitVec::append_uint(std::uint64_t value, int nbits) {
    if (nbits < 0 || nbits > 64) throw std::invalid_argument("append_uint: bad bit count");
    for (int s = nbits - 1; s >= 0; --s) push_back((value >> s) & 1);
}

void BitVec::append(const BitVec& other) {
    for (std::size_t i = 0; i < other.size(); ++i) push_back(other[i]);
}

BitVec BitVec::from_bytes(std::span<const std::uint8_t> data, std::size_t nbits) {
    if (nbits > data.size() * 8) throw std::invalid_argument("from_bytes: not enough bytes");
    BitVec v;
    v.bytes_.assign(data.begin(), data.begin() + static_cast<std::ptrdiff_t>((nbits + 7) / 8));
    v.size_ = nbits;
    if (nbits & 7) v.bytes_.back() &= static_cast<std::uint8_t>(0xFF00u >> (nbits & 7));
    return v;
}

BitVec BitVec::from_string(std::string_view s) {
    BitVec v;
    for (char ch : s) {
        if (ch == ' ') continue;
        if (ch != '0' && ch != '1') throw std::invalid_argument("from_string: not a bit string");
        v.push_back(ch == '1');
    }
    return v;
}

std::string BitVec::to_string() const {
    std::string s;
    s.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) s.push_back((*this)[i] ? '1' : '0');
    return s;
}

BitReader::BitReader(std::span<const std::uint8_t> data, std::size_t nbits)
    : data_(data), size_(nbits) {
    if (nbits > data.size() * 8) throw std::invalid_argument("BitReader: not enough bytes");
}

bool BitReader::read_bit() {
    if (pos_ >= size_) throw std::runtime_error("bit reader underflow");
    bool bit = (data_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1;
    ++pos_;
    return bit;
}

std::uint64_t BitReader::read_uint(int nbits) {
    if (nbits < 0 || nbits > 64) throw std::invalid_argument("read_uint: bad bit count");
    std::uint64_t v = 0;
    for (int i = 0; i < nbits; ++i) v = (v << 1) | (read_bit() ? 1u : 0u);
    return v;
}

void BitQueue::push_uint(std::uint64_t value, int nbits) {
    for (int s = nbits - 1; s >= 0; --s) push((value >> s) & 1);
}

std::optional<bool> BitQueue::pop() {
    if (head_ >= bits_.size()) return std::nullopt;
    return bits_[head_++] != 0;
}

BitVec BitQueue::take_remaining() {
    BitVec v;
    while (auto b = pop()) v.push_back(*b);
    return v;
}

}  // namespace hvlcl
