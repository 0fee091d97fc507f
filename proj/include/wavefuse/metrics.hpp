#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "errors.hpp"
#include "image.hpp"

namespace wavefuse {

// Shannon entropy in bits over a 256-bin histogram of the quantized samples
// (same quantization as save_image, so on-disk and in-memory entropy agree).
inline double entropy(const Image& img) {
    std::array<std::size_t, 256> hist{};
    for (std::size_t r = 0; r < img.height(); ++r)
        for (std::size_t c = 0; c < img.width(); ++c) ++hist[quantize_sample(img(r, c))];
    const double total = static_cast<double>(img.width() * img.height());
    double e = 0.0;
    for (std::size_t count : hist) {
        if (count == 0) continue;
        const double p = static_cast<double>(count) / total;
        e -= p * std::log2(p);
    }
    return e;
}

inline double rmse(const Image& ref, const Image& fused) {
    if (ref.width() != fused.width() || ref.height() != fused.height())
        throw std::invalid_argument("rmse: dimension mismatch: " + std::to_string(ref.width()) +
                                    "x" + std::to_string(ref.height()) + " vs " +
                                    std::to_string(fused.width()) + "x" +
                                    std::to_string(fused.height()));
    double acc = 0.0;
    for (std::size_t r = 0; r < ref.height(); ++r)
        for (std::size_t c = 0; c < ref.width(); ++c) {
            const double d = ref(r, c) - fused(r, c);
            acc += d * d;
        }
    return std::sqrt(acc / static_cast<double>(ref.width() * ref.height()));
}

// PSNR = 10 log10(255^2 / RMSE^2); +infinity when RMSE is zero.
inline double psnr_from_rmse(double rmse_value) {
    if (rmse_value == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / (rmse_value * rmse_value));
}

inline double psnr(const Image& ref, const Image& fused) {
    return psnr_from_rmse(rmse(ref, fused));
}

// Universal image quality index from global statistics:
// 4 sigma_xy mean_x mean_y / ((mean_x^2 + mean_y^2)(sigma_x^2 + sigma_y^2)).
inline double iqi(const Image& x, const Image& y) {
    if (x.width() != y.width() || x.height() != y.height())
        throw std::invalid_argument("iqi: dimension mismatch");
    const double n = static_cast<double>(x.width() * x.height());
    double sx = 0.0, sy = 0.0;
    for (std::size_t r = 0; r < x.height(); ++r)
        for (std::size_t c = 0; c < x.width(); ++c) {
            sx += x(r, c);
            sy += y(r, c);
        }
    const double mx = sx / n, my = sy / n;
    double vx = 0.0, vy = 0.0, cxy = 0.0;
    for (std::size_t r = 0; r < x.height(); ++r)
        for (std::size_t c = 0; c < x.width(); ++c) {
            const double dx = x(r, c) - mx, dy = y(r, c) - my;
            vx += dx * dx;
            vy += dy * dy;
            cxy += dx * dy;
        }
    vx /= n;
    vy /= n;
    cxy /= n;
    const double denom = (mx * mx + my * my) * (vx + vy);
    if (denom == 0.0)
        throw undefined_metric("iqi undefined: zero denominator (constant or zero-mean inputs)");
    return 4.0 * cxy * mx * my / denom;
}

// MEAN uses |F| exactly as defined; SD is the population form.
inline std::pair<double, double> mean_sd(const Image& img) {
    const double n = static_cast<double>(img.width() * img.height());
    double s = 0.0;
    for (std::size_t r = 0; r < img.height(); ++r)
        for (std::size_t c = 0; c < img.width(); ++c) s += std::abs(img(r, c));
    const double mean = s / n;
    double acc = 0.0;
    for (std::size_t r = 0; r < img.height(); ++r)
        for (std::size_t c = 0; c < img.width(); ++c) {
            const double d = img(r, c) - mean;
            acc += d * d;
        }
    return {mean, std::sqrt(acc / n)};
}

enum class ReferencePolicy { vs_source1, vs_source2, mean_of_both };

// One benchmark row.  Under mean_of_both, rmse and iqi are the arithmetic
// means of the per-source values (raw values retained below) and psnr_db is
// derived from the reported rmse so the PSNR/RMSE identity holds rowwise.
struct MetricsReport {
    std::string method_name;
    ReferencePolicy policy = ReferencePolicy::mean_of_both;
    double entropy_bits = 0.0;
    double psnr_db = 0.0;
    double rmse = 0.0;
    double iqi = 0.0;
    double sd = 0.0;
    double mean = 0.0;
    double rmse_vs1 = 0.0, rmse_vs2 = 0.0;
    double psnr_vs1 = 0.0, psnr_vs2 = 0.0;
    double iqi_vs1 = 0.0, iqi_vs2 = 0.0;
};

inline MetricsReport report(const Image& fused, const Image& src1, const Image& src2,
                            ReferencePolicy policy = ReferencePolicy::mean_of_both) {
    MetricsReport rep;
    rep.policy = policy;
    rep.entropy_bits = entropy(fused);
    const auto [mean, sd] = mean_sd(fused);
    rep.mean = mean;
    rep.sd = sd;
    rep.rmse_vs1 = rmse(src1, fused);
    rep.rmse_vs2 = rmse(src2, fused);
    rep.psnr_vs1 = psnr_from_rmse(rep.rmse_vs1);
    rep.psnr_vs2 = psnr_from_rmse(rep.rmse_vs2);
    rep.iqi_vs1 = iqi(src1, fused);
    rep.iqi_vs2 = iqi(src2, fused);
    switch (policy) {
        case ReferencePolicy::vs_source1:
            rep.rmse = rep.rmse_vs1;
            rep.iqi = rep.iqi_vs1;
            break;
        case ReferencePolicy::vs_source2:
            rep.rmse = rep.rmse_vs2;
            rep.iqi = rep.iqi_vs2;
            break;
        case ReferencePolicy::mean_of_both:
            rep.rmse = 0.5 * (rep.rmse_vs1 + rep.rmse_vs2);
            rep.iqi = 0.5 * (rep.iqi_vs1 + rep.iqi_vs2);
            break;
    }
    rep.psnr_db = psnr_from_rmse(rep.rmse);
    return rep;
}

}  // namespace wavefuse
