#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "hvlcl/image.hpp"

namespace hvlcl {

// Median edge detection prediction from the top-left, top and left neighbors.
std::uint8_t med_predict(std::uint8_t top_left, std::uint8_t top, std::uint8_t left);

// Length of the shared most-significant-bit prefix of x and px, in [0, 8].
// 0 means the MSBs already differ, 8 means x == px.
int label_of(std::uint8_t x, std::uint8_t px);

// Per-pixel tag field. Cells in the first ref_rows rows or first ref_cols
// columns are reference pixels (tag kReference); all others carry a tag in
// [0, 8].
class LabelMap {
public:
    static constexpr std::int8_t kReference = -1;

    LabelMap(int rows, int cols, int ref_rows, int ref_cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int ref_rows() const { return ref_rows_; }
    int ref_cols() const { return ref_cols_; }

    bool is_reference(int i, int j) const { return i < ref_rows_ || j < ref_cols_; }
    std::int8_t tag(int i, int j) const {
        return tags_[static_cast<std::size_t>(i) * cols_ + j];
    }
    void set_tag(int i, int j, int tag);

    std::size_t ref_count() const {
        return static_cast<std::size_t>(ref_rows_) * cols_ +
               static_cast<std::size_t>(ref_cols_) * (rows_ - ref_rows_);
    }
    std::span<const std::int8_t> cells() const { return tags_; }

    bool operator==(const LabelMap&) const = default;

private:
    int rows_;
    int cols_;
    int ref_rows_;
    int ref_cols_;
    std::vector<std::int8_t> tags_;
};

// Tags every non-reference pixel with the shared-prefix length between its
// value and its MED prediction. Neighbors are taken from the original image.
LabelMap build_label_map(const GrayImage& img, int ref_rows = 1, int ref_cols = 1);

struct LabelHistogram {
    std::array<std::uint64_t, 9> counts{};
    std::uint64_t ref_count = 0;
};

LabelHistogram histogram(const LabelMap& map);

}  // namespace hvlcl
