#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace hvlcl {

// 8-bit grayscale image, row-major. The minimum size is 2x2: every
// non-reference pixel needs a prior row and column for prediction.
class GrayImage {
public:
    GrayImage(int rows, int cols, std::uint8_t fill = 0);
    GrayImage(int rows, int cols, std::vector<std::uint8_t> pixels);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t pixel_count() const { return pixels_.size(); }

    std::uint8_t operator()(int i, int j) const {
        return pixels_[static_cast<std::size_t>(i) * cols_ + j];
    }
    std::uint8_t& operator()(int i, int j) {
        return pixels_[static_cast<std::size_t>(i) * cols_ + j];
    }

    std::span<const std::uint8_t> pixels() const { return pixels_; }
    std::span<std::uint8_t> pixels() { return pixels_; }

    bool operator==(const GrayImage&) const = default;

private:
    int rows_;
    int cols_;
    std::vector<std::uint8_t> pixels_;
};

// Binary PGM (P5), maxval 255, '#' comments allowed in the header.
// Anything else (P2, 16-bit, other formats) is rejected.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_pgm(const GrayImage& img);

GrayImage load_pgm(const std::filesystem::path& path);
void save_pgm(const GrayImage& img, const std::filesystem::path& path);

}  // namespace hvlcl
