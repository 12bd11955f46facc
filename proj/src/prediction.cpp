#include "hvlcl/prediction.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hvlcl {

std::uint8_t med_predict(std::uint8_t top_left, std::uint8_t top, std::uint8_t left) {
    int lo = std::min(top, left);
    int hi = std::max(top, left);
    if (top_left <= lo) return static_cast<std::uint8_t>(hi);
    if (top_left >= hi) return static_cast<std::uint8_t>(lo);
    return static_cast<std::uint8_t>(top + left - top_left);
}

int label_of(std::uint8_t x, std::uint8_t px) {
    // Shared MSB prefix length = leading zeros of the difference mask.
    return std::countl_zero(static_cast<std::uint8_t>(x ^ px));
}

LabelMap::LabelMap(int rows, int cols, int ref_rows, int ref_cols)
    : rows_(rows), cols_(cols), ref_rows_(ref_rows), ref_cols_(ref_cols) {
    if (rows < 2 || cols < 2) throw std::invalid_argument("label map needs a 2x2 image or larger");
    if (ref_rows < 1 || ref_cols < 1) throw std::invalid_argument("reference region must be at least one row and one column");
    if (ref_rows >= rows || ref_cols >= cols)
        throw std::invalid_argument("reference region covers entire image");
    tags_.assign(static_cast<std::size_t>(rows) * cols, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (is_reference(i, j)) tags_[static_cast<std::size_t>(i) * cols + j] = kReference;
}

void LabelMap::set_tag(int i, int j, int tag) {
    if (is_reference(i, j)) throw std::invalid_argument("cannot tag a reference pixel");
    if (tag < 0 || tag > 8) throw std::invalid_argument("tag out of range");
    tags_[static_cast<std::size_t>(i) * cols_ + j] = static_cast<std::int8_t>(tag);
}

LabelMap build_label_map(const GrayImage& img, int ref_rows, int ref_cols) {
    LabelMap map(img.rows(), img.cols(), ref_rows, ref_cols);
    for (int i = 0; i < img.rows(); ++i) {
        for (int j = 0; j < img.cols(); ++j) {
            if (map.is_reference(i, j)) continue;
            std::uint8_t px = med_predict(img(i - 1, j - 1), img(i - 1, j), img(i, j - 1));
            map.set_tag(i, j, label_of(img(i, j), px));
        }
    }
    return map;
}

LabelHistogram histogram(const LabelMap& map) {
    LabelHistogram h;
    for (std::int8_t t : map.cells()) {
        if (t == LabelMap::kReference)
            ++h.ref_count;
        else
            ++h.counts[static_cast<std::size_t>(t)];
    }
    return h;
}

}  // namespace hvlcl
