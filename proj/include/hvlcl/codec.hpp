#pragma once

#include <cstdint>
#include <utility>

#include "hvlcl/bits.hpp"
#include "hvlcl/cipher.hpp"
#include "hvlcl/code_table.hpp"
#include "hvlcl/container.hpp"
#include "hvlcl/image.hpp"
#include "hvlcl/prediction.hpp"

namespace hvlcl {

// Bits a pixel with tag t can carry: t+1, capped at the 8-bit pixel width.
int capacity_of(int tag);

// Replaces the top capacity_of(tag) bits of xe with `bits` (all 8 bits when
// tag >= 7); the remaining low bits pass through.
std::uint8_t substitute_msbs(std::uint8_t xe, int tag, const BitVec& bits);

// The (t+1)-th MSB of the original pixel, recovered as the negation of the
// same bit of the prediction. Requires tag <= 7.
int recover_bit(std::uint8_t predicted, int tag);

struct CapacityReport {
    LabelHistogram hist;
    int ref_rows = 1;
    int ref_cols = 1;
    std::uint64_t total_capacity_bits = 0;  // sum of capacity_of over non-reference pixels
    std::uint64_t code_bits = 0;            // coded label map length
    std::uint64_t aux_stream_bits = 0;      // code_bits + 8 * ref_count
    std::uint64_t header_bits = kAuxHeaderBits;
    std::int64_t net_payload_bits = 0;      // total_capacity - code_bits - header_bits
};

struct OwnerOutput {
    GrayImage image;  // encrypted image carrying the embedded label map
    CapacityReport report;
};

// Content-owner stage: label, encrypt, and embed the coded label map plus
// reference values. Grows the reference region until the data hider's
// streaming decode is guaranteed to succeed; throws std::runtime_error
// ("insufficient bootstrap capacity") if no region works.
OwnerOutput owner_encode(const GrayImage& img, const KeySpec& encryption_key);

// Everything the streaming label-map decode recovers from an encoded image,
// without any key.
struct DecodedLayout {
    LabelMap map;
    CodeTable table;
    BitVec reference_values;          // 8 bits per reference pixel, pack order
    std::uint64_t payload_start = 0;  // bit offset into the capacity overlay
    std::uint64_t overlay_bits = 0;   // total capacity of non-reference pixels
};

DecodedLayout hider_decode_labels(const GrayImage& encoded);

struct EmbedReport {
    std::uint64_t payload_bits = 0;
    double embedding_rate = 0.0;  // payload_bits / (m*n)
};

struct EmbedResult {
    GrayImage image;
    EmbedReport report;
};

// Data-hider stage: ciphers a 32-bit length prefix plus the payload with the
// hiding key and writes it into the payload space.
EmbedResult hider_embed(const GrayImage& encoded, const BitVec& payload,
                        const KeySpec& hiding_key);

// Receiver stage, data path: recovers the exact embedded payload using only
// the hiding key.
BitVec receiver_extract(const GrayImage& marked, const KeySpec& hiding_key);

// Receiver stage, image path: reconstructs the original image bit-exactly
// using only the encryption key.
GrayImage receiver_recover(const GrayImage& marked, const KeySpec& encryption_key);

// Capacity analysis without touching a key: runs the same bootstrap search
// as owner_encode and reports the label statistics. When no reference region
// is feasible, the report is computed at (1, 1) and feasible is false.
struct ImageAnalysis {
    CapacityReport report;
    bool feasible = false;
    double er_bpp = 0.0;  // net_payload_bits / (m*n), signed
};

ImageAnalysis analyze_image(const GrayImage& img);

}  // namespace hvlcl
