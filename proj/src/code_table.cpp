#include "hvlcl/code_table.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hvlcl {

namespace {

constexpr std::array<Codeword, CodeTable::kSymbols> kCodewords = {{
    {0b00, 2},
    {0b01, 2},
    {0b100, 3},
    {0b101, 3},
    {0b1100, 4},
    {0b1101, 4},
    {0b1110, 4},
    {0b11110, 5},
    {0b11111, 5},
}};

// Codeword index for the `length`-bit value `value`, or -1 if no codeword
// ends here yet. The code is prefix-complete, so every bit path lands on
// some codeword within 5 bits.
int match_codeword(std::uint32_t value, int length) {
    switch (length) {
        case 2: return value <= 1 ? static_cast<int>(value) : -1;
        case 3: return value == 0b100 ? 2 : value == 0b101 ? 3 : -1;
        case 4: return value == 0b1100 ? 4 : value == 0b1101 ? 5 : value == 0b1110 ? 6 : -1;
        case 5: return value == 0b11110 ? 7 : value == 0b11111 ? 8 : -1;
        default: return -1;
    }
}

}  // namespace

const std::array<Codeword, CodeTable::kSymbols>& CodeTable::fixed_codewords() {
    return kCodewords;
}

int CodeTable::check_tag(int tag) {
    if (tag < 0 || tag >= kSymbols) throw std::invalid_argument("tag out of range");
    return tag;
}

CodeTable::CodeTable(const std::array<std::uint8_t, kSymbols>& index_of_tag)
    : index_of_tag_(index_of_tag) {
    std::array<bool, kSymbols> seen{};
    for (int t = 0; t < kSymbols; ++t) {
        std::uint8_t idx = index_of_tag_[t];
        if (idx >= kSymbols || seen[idx])
            throw std::invalid_argument("code table assignment is not a bijection");
        seen[idx] = true;
        tag_of_index_[idx] = static_cast<std::uint8_t>(t);
    }
}

CodeTable CodeTable::identity() {
    std::array<std::uint8_t, kSymbols> idx;
    std::iota(idx.begin(), idx.end(), 0);
    return CodeTable(idx);
}

CodeTable CodeTable::assign(const LabelHistogram& hist) {
    std::array<std::uint8_t, kSymbols> order;
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::uint8_t a, std::uint8_t b) {
        if (hist.counts[a] != hist.counts[b]) return hist.counts[a] > hist.counts[b];
        return a < b;
    });
    std::array<std::uint8_t, kSymbols> index_of_tag{};
    for (int i = 0; i < kSymbols; ++i) index_of_tag[order[i]] = static_cast<std::uint8_t>(i);
    return CodeTable(index_of_tag);
}

Codeword CodeTable::codeword(int tag) const {
    return kCodewords[index_of_tag_[check_tag(tag)]];
}

void CodeTable::serialize(BitVec& out) const {
    for (int t = 0; t < kSymbols; ++t) out.append_uint(index_of_tag_[t], 4);
}

CodeTable CodeTable::deserialize(BitReader& in) {
    std::array<std::uint8_t, kSymbols> idx;
    for (int t = 0; t < kSymbols; ++t) idx[t] = static_cast<std::uint8_t>(in.read_uint(4));
    return CodeTable(idx);
}

void CodeTable::encode(std::span<const std::int8_t> tags, BitVec& out) const {
    for (std::int8_t t : tags) {
        Codeword cw = codeword(t);
        out.append_uint(cw.bits, cw.length);
    }
}

int CodeTable::decode_next(BitReader& in) const {
    std::uint32_t value = 0;
    for (int len = 1; len <= 5; ++len) {
        value = (value << 1) | (in.read_bit() ? 1u : 0u);
        int idx = match_codeword(value, len);
        if (idx >= 0) return tag_of_index_[idx];
    }
    throw std::runtime_error("corrupt codeword");
}

std::optional<int> CodeTable::try_decode(BitQueue& queue) const {
    std::uint32_t value = 0;
    for (int len = 1; len <= 5; ++len) {
        auto bit = queue.pop();
        if (!bit) return std::nullopt;
        value = (value << 1) | (*bit ? 1u : 0u);
        int idx = match_codeword(value, len);
        if (idx >= 0) return tag_of_index_[idx];
    }
    return std::nullopt;  // unreachable: the code is prefix-complete
}

}  // namespace hvlcl
