#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"

namespace wavefuse {

struct Size {
    std::size_t width = 0;
    std::size_t height = 0;
    bool operator==(const Size&) const = default;
};

enum class ExtensionMode { periodic };

// Grayscale raster with double samples, nominal range [0,255].  origin_size
// remembers the pre-padding dimensions so reconstruction can crop back.
class Image {
public:
    Image() = default;

    Image(std::size_t width, std::size_t height, double fill = 0.0)
        : samples_(height, width, fill), origin_{width, height} {
        if (width < 1 || height < 1) throw std::invalid_argument("image dimensions must be >= 1");
    }

    explicit Image(RealMatrix samples)
        : samples_(std::move(samples)), origin_{samples_.cols(), samples_.rows()} {
        if (samples_.empty()) throw std::invalid_argument("image dimensions must be >= 1");
    }

    Image(RealMatrix samples, Size origin) : samples_(std::move(samples)), origin_(origin) {
        if (samples_.empty()) throw std::invalid_argument("image dimensions must be >= 1");
    }

    std::size_t width() const { return samples_.cols(); }
    std::size_t height() const { return samples_.rows(); }
    Size origin_size() const { return origin_; }

    double& operator()(std::size_t row, std::size_t col) { return samples_(row, col); }
    const double& operator()(std::size_t row, std::size_t col) const { return samples_(row, col); }

    RealMatrix& samples() { return samples_; }
    const RealMatrix& samples() const { return samples_; }

private:
    RealMatrix samples_;
    Size origin_;
};

// Periodic extension of a 1-D signal: out[i] = signal[(i - left) mod len].
inline std::vector<double> extend(const std::vector<double>& signal, std::size_t left,
                                  std::size_t right, ExtensionMode mode) {
    (void)mode;  // single variant
    if (signal.empty()) throw std::invalid_argument("extend: empty signal");
    const std::size_t n = signal.size();
    std::vector<double> out(n + left + right);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(left);
        j %= static_cast<std::ptrdiff_t>(n);
        if (j < 0) j += static_cast<std::ptrdiff_t>(n);
        out[i] = signal[static_cast<std::size_t>(j)];
    }
    return out;
}

// Round half away from zero, then clamp to [0,255]; the quantization used by
// save_image and the entropy histogram.
inline int quantize_sample(double v) {
    const double r = std::round(v);  // rounds half away from zero
    return static_cast<int>(std::clamp(r, 0.0, 255.0));
}

inline Image quantize_for_output(const Image& img) {
    RealMatrix q(img.height(), img.width());
    for (std::size_t r = 0; r < img.height(); ++r)
        for (std::size_t c = 0; c < img.width(); ++c)
            q(r, c) = static_cast<double>(quantize_sample(img(r, c)));
    return Image(std::move(q), img.origin_size());
}

// Pads both dimensions up to the next multiple of `block` by periodic
// repetition; a no-op when the dimensions already divide evenly.
inline Image pad_to_multiple(const Image& img, std::size_t block) {
    if (block == 0) throw std::invalid_argument("pad_to_multiple: zero block");
    const std::size_t h = img.height(), w = img.width();
    const std::size_t ph = (h + block - 1) / block * block;
    const std::size_t pw = (w + block - 1) / block * block;
    if (ph == h && pw == w) return img;
    RealMatrix out(ph, pw);
    for (std::size_t r = 0; r < ph; ++r)
        for (std::size_t c = 0; c < pw; ++c)
            out(r, c) = img(r % h, c % w);
    return Image(std::move(out), img.origin_size());
}

inline Image crop_to_origin(const Image& img) {
    const Size o = img.origin_size();
    if (o.height == img.height() && o.width == img.width()) return img;
    RealMatrix out(o.height, o.width);
    for (std::size_t r = 0; r < o.height; ++r)
        for (std::size_t c = 0; c < o.width; ++c)
            out(r, c) = img(r, c);
    return Image(std::move(out), o);
}

}  // namespace wavefuse
