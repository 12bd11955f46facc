#pragma once

#include <cstdint>

#include "hvlcl/bits.hpp"
#include "hvlcl/code_table.hpp"
#include "hvlcl/image.hpp"

namespace hvlcl {

// Container header, 84 bits on the wire, all fields big-endian:
//
//   bits  0..7    ref_rows  (8-bit unsigned, >= 1)
//   bits  8..15   ref_cols  (8-bit unsigned, >= 1)
//   bits 16..51   code table (9 x 4-bit codeword index, tag order)
//   bits 52..83   aux_len   (32-bit unsigned, bit length of the aux stream)
//
// ref_rows/ref_cols come first so a decoder can locate the reference region
// before parsing anything else.
struct AuxHeader {
    int ref_rows;
    int ref_cols;
    CodeTable table;
    std::uint32_t aux_len;
};

inline constexpr std::size_t kAuxHeaderBits = 84;

void write_header(const AuxHeader& h, BitVec& out);

// Inverse of write_header. Throws on zero ref_rows/ref_cols, a non-bijective
// table, or fewer than 84 bits.
AuxHeader read_header(BitReader& in);

// Reference pixel values, 8 bits each: rows 0..r-1 left to right across the
// full width, then columns 0..c-1 top to bottom over the remaining rows.
// Total 8 * (r*n + c*(m-r)) bits.
BitVec pack_reference_values(const GrayImage& img, int ref_rows, int ref_cols);

// Inverse of pack_reference_values; writes into the reference cells of img.
void unpack_reference_values(BitReader& in, GrayImage& img, int ref_rows, int ref_cols);

}  // namespace hvlcl
