#include "hvlcl/metrics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hvlcl {

namespace {

constexpr int kWindow = 11;
constexpr double kSigma = 1.5;
constexpr double kC1 = (0.01 * 255) * (0.01 * 255);
constexpr double kC2 = (0.03 * 255) * (0.03 * 255);

void check_same_dims(const GrayImage& a, const GrayImage& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("image dimensions differ");
}

std::array<double, kWindow * kWindow> gaussian_window() {
    std::array<double, kWindow * kWindow> w;
    double sum = 0.0;
    const int half = kWindow / 2;
    for (int u = 0; u < kWindow; ++u) {
        for (int v = 0; v < kWindow; ++v) {
            double du = u - half, dv = v - half;
            double g = std::exp(-(du * du + dv * dv) / (2.0 * kSigma * kSigma));
            w[u * kWindow + v] = g;
            sum += g;
        }
    }
    for (auto& g : w) g /= sum;
    return w;
}

}  // namespace

double psnr(const GrayImage& a, const GrayImage& b) {
    check_same_dims(a, b);
    double sum = 0.0;
    auto pa = a.pixels(), pb = b.pixels();
    for (std::size_t i = 0; i < pa.size(); ++i) {
        double d = static_cast<double>(pa[i]) - static_cast<double>(pb[i]);
        sum += d * d;
    }
    if (sum == 0.0) return std::numeric_limits<double>::infinity();
    double mse = sum / static_cast<double>(pa.size());
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double ssim(const GrayImage& a, const GrayImage& b) {
    check_same_dims(a, b);
    if (a.rows() < kWindow || a.cols() < kWindow)
        throw std::invalid_argument("image smaller than the 11x11 SSIM window");

    static const auto window = gaussian_window();
    double total = 0.0;
    std::size_t positions = 0;
    for (int i = 0; i + kWindow <= a.rows(); ++i) {
        for (int j = 0; j + kWindow <= a.cols(); ++j) {
            double mx = 0, my = 0, sxx = 0, syy = 0, sxy = 0;
            for (int u = 0; u < kWindow; ++u) {
                for (int v = 0; v < kWindow; ++v) {
                    double w = window[u * kWindow + v];
                    double x = a(i + u, j + v);
                    double y = b(i + u, j + v);
                    mx += w * x;
                    my += w * y;
                    sxx += w * (x * x);
                    syy += w * (y * y);
                    sxy += w * (x * y);  // grouped so ssim(a,b) == ssim(b,a) bitwise
                }
            }
            double vx = sxx - mx * mx;
            double vy = syy - my * my;
            double cov = sxy - mx * my;
            total += ((2 * mx * my + kC1) * (2 * cov + kC2)) /
                     ((mx * mx + my * my + kC1) * (vx + vy + kC2));
            ++positions;
        }
    }
    return total / static_cast<double>(positions);
}

double embedding_rate(std::uint64_t payload_bits, int rows, int cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("empty image");
    return static_cast<double>(payload_bits) /
           (static_cast<double>(rows) * static_cast<double>(cols));
}

}  // namespace hvlcl
