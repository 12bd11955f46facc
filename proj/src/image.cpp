#include "hvlcl/image.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

namespace hvlcl {

namespace {

void check_dims(int rows, int cols) {
    if (rows < 2 || cols < 2) throw std::invalid_argument("image must be at least 2x2");
}

// Skips whitespace and '#' comments (which run to end of line), then reads
// one unsigned decimal token.
long read_pgm_field(std::span<const std::uint8_t> bytes, std::size_t& pos) {
    while (pos < bytes.size()) {
        if (std::isspace(bytes[pos])) {
            ++pos;
        } else if (bytes[pos] == '#') {
            while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
        } else {
            break;
        }
    }
    if (pos >= bytes.size() || !std::isdigit(bytes[pos]))
        throw std::runtime_error("malformed PGM header");
    long value = 0;
    while (pos < bytes.size() && std::isdigit(bytes[pos])) {
        value = value * 10 + (bytes[pos] - '0');
        if (value > 1 << 24) throw std::runtime_error("malformed PGM header");
        ++pos;
    }
    return value;
}

}  // namespace

GrayImage::GrayImage(int rows, int cols, std::uint8_t fill)
    : rows_(rows), cols_(cols) {
    check_dims(rows, cols);
    pixels_.assign(static_cast<std::size_t>(rows) * cols, fill);
}

GrayImage::GrayImage(int rows, int cols, std::vector<std::uint8_t> pixels)
    : rows_(rows), cols_(cols), pixels_(std::move(pixels)) {
    check_dims(rows, cols);
    if (pixels_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("pixel count does not match dimensions");
}

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
        if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '2')
            throw std::runtime_error("ASCII PGM (P2) not supported, use binary P5");
        throw std::runtime_error("malformed magic, expected P5");
    }
    std::size_t pos = 2;
    long cols = read_pgm_field(bytes, pos);
    long rows = read_pgm_field(bytes, pos);
    long maxval = read_pgm_field(bytes, pos);
    if (maxval != 255) throw std::runtime_error("unsupported maxval " + std::to_string(maxval));
    // Exactly one whitespace byte separates the header from the raster.
    if (pos >= bytes.size() || !std::isspace(bytes[pos]))
        throw std::runtime_error("malformed PGM header");
    ++pos;
    std::size_t npx = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    if (bytes.size() - pos < npx) throw std::runtime_error("PGM raster shorter than header promises");
    return GrayImage(static_cast<int>(rows), static_cast<int>(cols),
                     std::vector<std::uint8_t>(bytes.begin() + pos, bytes.begin() + pos + npx));
}

std::vector<std::uint8_t> write_pgm(const GrayImage& img) {
    char header[64];
    int n = std::snprintf(header, sizeof header, "P5\n%d %d\n255\n", img.cols(), img.rows());
    std::vector<std::uint8_t> out(header, header + n);
    out.insert(out.end(), img.pixels().begin(), img.pixels().end());
    return out;
}

GrayImage load_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return read_pgm(bytes);
}

void save_pgm(const GrayImage& img, const std::filesystem::path& path) {
    auto bytes = write_pgm(img);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace hvlcl
