#pragma once

#include <cstdint>

#include "hvlcl/image.hpp"

namespace hvlcl {

// Peak signal-to-noise ratio in dB; +infinity when the images are identical.
double psnr(const GrayImage& a, const GrayImage& b);

// Single-scale SSIM: 11x11 Gaussian window (sigma 1.5), K1=0.01, K2=0.03,
// L=255, averaged over all fully contained window positions. Requires both
// dimensions >= 11.
double ssim(const GrayImage& a, const GrayImage& b);

// Payload bits per pixel over all m*n pixels.
double embedding_rate(std::uint64_t payload_bits, int rows, int cols);

}  // namespace hvlcl
