#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "hvlcl/bits.hpp"
#include "hvlcl/prediction.hpp"

namespace hvlcl {

// One codeword of the fixed prefix code, right-aligned in `bits`.
struct Codeword {
    std::uint8_t bits;
    std::uint8_t length;
};

// The fixed 9-codeword prefix code {00, 01, 100, 101, 1100, 1101, 1110,
// 11110, 11111} plus an adaptive tag -> codeword assignment: shorter
// codewords go to more frequent tags. Only the assignment varies per image.
class CodeTable {
public:
    static constexpr int kSymbols = 9;
    static constexpr int kSerializedBits = kSymbols * 4;

    static const std::array<Codeword, kSymbols>& fixed_codewords();

    // Tag t maps to codeword index t.
    static CodeTable identity();

    // Tags sorted by count descending get codeword indices 0..8 in order;
    // ties broken by smaller tag first.
    static CodeTable assign(const LabelHistogram& hist);

    Codeword codeword(int tag) const;
    int index_of(int tag) const { return index_of_tag_[check_tag(tag)]; }
    int tag_at(int index) const { return tag_of_index_[check_tag(index)]; }

    // 36 bits: the 4-bit codeword index of each tag 0..8 in tag order.
    void serialize(BitVec& out) const;
    static CodeTable deserialize(BitReader& in);

    void encode(std::span<const std::int8_t> tags, BitVec& out) const;

    // Consumes exactly one codeword and returns its tag; throws on underflow.
    int decode_next(BitReader& in) const;
    // Same, over the streaming FIFO buffer; nullopt signals underflow
    // (bootstrap starvation).
    std::optional<int> try_decode(BitQueue& queue) const;

    bool operator==(const CodeTable&) const = default;

private:
    explicit CodeTable(const std::array<std::uint8_t, kSymbols>& index_of_tag);
    static int check_tag(int tag);

    std::array<std::uint8_t, kSymbols> index_of_tag_;
    std::array<std::uint8_t, kSymbols> tag_of_index_;
};

}  // namespace hvlcl
