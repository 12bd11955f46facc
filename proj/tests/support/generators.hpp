#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "hvlcl/cipher.hpp"
#include "hvlcl/image.hpp"
#include "hvlcl/prediction.hpp"

namespace testgen {

// Frozen label distribution of a 512x512 fixture image (tags 0..8): the
inline constexpr std::array<std::uint64_t, 9> kFixtureDistribution = {
    9818, 9742, 15247, 33246, 44509, 53359, 41758, 24353, 29089};

// and the codeword each tag must receive under frequency-rank assignment.
inline constexpr std::array<const char*, 9> kFixtureAssignment = {
    "11110", "11111", "1110", "101", "01", "00", "100", "1101", "1100"};

inline hvlcl::GrayImage constant_image(int m, int n, std::uint8_t value) {
    return hvlcl::GrayImage(m, n, value);
}

inline hvlcl::GrayImage noise_image(int m, int n, std::mt19937_64& rng) {
    std::vector<std::uint8_t> px(static_cast<std::size_t>(m) * n);
    for (auto& p : px) p = static_cast<std::uint8_t>(rng());
    return hvlcl::GrayImage(m, n, std::move(px));
}

// Low-frequency gradient with optional +-noise_amp uniform noise.
inline hvlcl::GrayImage gradient_image(int m, int n, std::mt19937_64& rng, int noise_amp = 0) {
    std::uniform_int_distribution<int> base_dist(0, 255);
    std::uniform_real_distribution<double> slope(-0.8, 0.8);
    double base = base_dist(rng);
    double di = slope(rng), dj = slope(rng);
    std::vector<std::uint8_t> px(static_cast<std::size_t>(m) * n);
    std::uniform_int_distribution<int> noise(-noise_amp, noise_amp);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            double v = base + di * i + dj * j;
            if (noise_amp > 0) v += noise(rng);
            px[static_cast<std::size_t>(i) * n + j] =
                static_cast<std::uint8_t>(std::clamp(static_cast<int>(v), 0, 255));
        }
    }
    return hvlcl::GrayImage(m, n, std::move(px));
}

// Builds an image whose label map, computed against an (r, c) reference
// region, carries exactly `tags` over the non-reference cells in raster
// order. Works because for any prediction px and target tag t a pixel value
// sharing exactly t leading bits with px always exists.
inline hvlcl::GrayImage image_from_tags(std::span<const int> tags, int m, int n, int r, int c,
                                        std::uint64_t seed) {
    if (tags.size() != static_cast<std::size_t>(m - r) * (n - c))
        throw std::invalid_argument("image_from_tags: tag count != non-reference cell count");
    std::mt19937_64 rng(seed);
    hvlcl::GrayImage img(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (i < r || j < c) img(i, j) = static_cast<std::uint8_t>(rng());
    std::size_t next = 0;
    for (int i = r; i < m; ++i) {
        for (int j = c; j < n; ++j) {
            std::uint8_t px = hvlcl::med_predict(img(i - 1, j - 1), img(i - 1, j), img(i, j - 1));
            int t = tags[next++];
            if (t == 8) {
                img(i, j) = px;
            } else {
                std::uint8_t flip = static_cast<std::uint8_t>(0x80u >> t);
                std::uint8_t low = static_cast<std::uint8_t>(flip - 1);
                img(i, j) = static_cast<std::uint8_t>(((px ^ flip) & ~low) |
                                                      (static_cast<std::uint8_t>(rng()) & low));
            }
        }
    }
    return img;
}

// Same, with the tag multiset given as per-tag counts, deterministically
// shuffled.
inline hvlcl::GrayImage image_from_histogram(const std::array<std::uint64_t, 9>& counts, int m,
                                             int n, int r, int c, std::uint64_t seed) {
    std::vector<int> tags;
    for (int t = 0; t < 9; ++t) tags.insert(tags.end(), counts[t], t);
    std::mt19937_64 rng(seed ^ 0x5eedULL);
    std::shuffle(tags.begin(), tags.end(), rng);
    return image_from_tags(tags, m, n, r, c, seed);
}

inline hvlcl::KeySpec random_key(std::mt19937_64& rng, std::size_t nbytes = 16) {
    hvlcl::KeySpec key;
    key.bytes.resize(nbytes);
    for (auto& b : key.bytes) b = static_cast<std::uint8_t>(rng());
    return key;
}

inline hvlcl::BitVec random_bits(std::mt19937_64& rng, std::size_t nbits) {
    hvlcl::BitVec v;
    for (std::size_t i = 0; i < nbits; ++i) v.push_back(rng() & 1);
    return v;
}

}  // namespace testgen
