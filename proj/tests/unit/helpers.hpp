#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <wavefuse/wavefuse.hpp>

namespace testutil {

// Uniform real samples in [0,255].
inline wavefuse::Image random_real_image(std::size_t w, std::size_t h, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 255.0);
    wavefuse::Image img(w, h);
    for (std::size_t r = 0; r < h; ++r)
        for (std::size_t c = 0; c < w; ++c) img(r, c) = dist(rng);
    return img;
}

// Integer samples in [0,255], as loaded from an 8-bit file.
inline wavefuse::Image random_int_image(std::size_t w, std::size_t h, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(0, 255);
    wavefuse::Image img(w, h);
    for (std::size_t r = 0; r < h; ++r)
        for (std::size_t c = 0; c < w; ++c) img(r, c) = static_cast<double>(dist(rng));
    return img;
}

inline double rms_diff(const wavefuse::Image& a, const wavefuse::Image& b) {
    double acc = 0.0;
    for (std::size_t r = 0; r < a.height(); ++r)
        for (std::size_t c = 0; c < a.width(); ++c) {
            const double d = a(r, c) - b(r, c);
            acc += d * d;
        }
    return std::sqrt(acc / static_cast<double>(a.width() * a.height()));
}

inline double max_abs_diff(const wavefuse::Image& a, const wavefuse::Image& b) {
    double m = 0.0;
    for (std::size_t r = 0; r < a.height(); ++r)
        for (std::size_t c = 0; c < a.width(); ++c)
            m = std::max(m, std::abs(a(r, c) - b(r, c)));
    return m;
}

inline wavefuse::Image rolled(const wavefuse::Image& img, std::ptrdiff_t dr, std::ptrdiff_t dc) {
    const auto h = static_cast<std::ptrdiff_t>(img.height());
    const auto w = static_cast<std::ptrdiff_t>(img.width());
    wavefuse::Image out(img.width(), img.height());
    for (std::ptrdiff_t r = 0; r < h; ++r)
        for (std::ptrdiff_t c = 0; c < w; ++c)
            out(static_cast<std::size_t>(((r + dr) % h + h) % h),
                static_cast<std::size_t>(((c + dc) % w + w) % w)) =
                img(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    return out;
}

template <typename T>
double band_energy(const wavefuse::Matrix<T>& m) {
    double acc = 0.0;
    for (const T& v : m) acc += static_cast<double>(v) * static_cast<double>(v);
    return acc;
}

inline double band_energy(const wavefuse::ComplexMatrix& m) {
    double acc = 0.0;
    for (const auto& v : m) acc += std::norm(v);
    return acc;
}

inline std::vector<double> detail_energies(const wavefuse::Pyramid<double>& p) {
    std::vector<double> e;
    for (const auto& lvl : p.details) {
        e.push_back(band_energy(lvl.lh));
        e.push_back(band_energy(lvl.hl));
        e.push_back(band_energy(lvl.hh));
    }
    return e;
}

}  // namespace testutil
