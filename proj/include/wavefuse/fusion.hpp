#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "dtcwt.hpp"
#include "dwt.hpp"
#include "image.hpp"
#include "lifting.hpp"
#include "matrix.hpp"
#include "swt.hpp"

namespace wavefuse {

enum class DetailRule { max_magnitude };
enum class ApproxRule { average, max_magnitude };

struct FusionRule {
    DetailRule detail = DetailRule::max_magnitude;
    ApproxRule approx = ApproxRule::average;
};

enum class MethodVariant { dwt, swt, ilwt, dtcwt, qshift_dtcwt };

struct Method {
    MethodVariant variant = MethodVariant::dwt;
    std::string bank = "db4";
    std::size_t levels = 4;
};

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(std::int32_t v) { return std::abs(static_cast<double>(v)); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

}  // namespace detail

// Pointwise max-magnitude selection; ties keep the first input.  Complex
// coefficients compare by magnitude and are copied whole.
template <typename T>
Matrix<T> fuse_bands(const Matrix<T>& a, const Matrix<T>& b, DetailRule = DetailRule::max_magnitude) {
    if (!a.same_shape(b)) throw std::invalid_argument("fuse_bands: dimension mismatch");
    Matrix<T> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const T& x = a.data()[i];
        const T& y = b.data()[i];
        out.data()[i] = detail::magnitude(y) > detail::magnitude(x) ? y : x;
    }
    return out;
}

namespace detail {

inline RealMatrix fuse_approx(const RealMatrix& a, const RealMatrix& b, ApproxRule rule) {
    if (rule == ApproxRule::max_magnitude) return fuse_bands(a, b);
    RealMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) out.data()[i] = 0.5 * (a.data()[i] + b.data()[i]);
    return out;
}

// Integer average uses floor((a+b)/2) so lifted coefficients stay integral.
inline IntMatrix fuse_approx(const IntMatrix& a, const IntMatrix& b, ApproxRule rule) {
    if (rule == ApproxRule::max_magnitude) return fuse_bands(a, b);
    IntMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i)
        out.data()[i] = static_cast<std::int32_t>(floor_div(
            static_cast<std::int64_t>(a.data()[i]) + static_cast<std::int64_t>(b.data()[i]), 2));
    return out;
}

template <typename T>
Pyramid<T> fuse_pyramids(const Pyramid<T>& a, const Pyramid<T>& b, const FusionRule& rule) {
    Pyramid<T> out;
    out.kind = a.kind;
    out.bank_name = a.bank_name;
    out.origin = a.origin;
    out.approx = fuse_approx(a.approx, b.approx, rule.approx);
    out.details.reserve(a.details.size());
    for (std::size_t j = 0; j < a.details.size(); ++j)
        out.details.push_back({fuse_bands(a.details[j].lh, b.details[j].lh),
                               fuse_bands(a.details[j].hl, b.details[j].hl),
                               fuse_bands(a.details[j].hh, b.details[j].hh)});
    return out;
}

inline ComplexPyramid fuse_pyramids(const ComplexPyramid& a, const ComplexPyramid& b,
                                    const FusionRule& rule) {
    ComplexPyramid out;
    out.variant = a.variant;
    out.origin = a.origin;
    for (std::size_t c = 0; c < 4; ++c)
        out.approx[c] = fuse_approx(a.approx[c], b.approx[c], rule.approx);
    out.oriented.resize(a.oriented.size());
    for (std::size_t j = 0; j < a.oriented.size(); ++j)
        for (std::size_t o = 0; o < 6; ++o)
            out.oriented[j][o] = fuse_bands(a.oriented[j][o], b.oriented[j][o]);
    return out;
}

inline void clamp_in_place(Image& img) {
    for (double& v : img.samples()) v = std::clamp(v, 0.0, 255.0);
}

inline void require_same_size(const Image& a, const Image& b) {
    if (a.width() != b.width() || a.height() != b.height())
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.width()) + "x" +
                                    std::to_string(a.height()) + " vs " +
                                    std::to_string(b.width()) + "x" +
                                    std::to_string(b.height()));
}

}  // namespace detail

// Decompose both sources with the method's transform, fuse detail bands by
// max magnitude and approximation bands by the approx rule, reconstruct,
// crop, clamp to [0,255].
inline Image fuse_images(const Image& img1, const Image& img2, const Method& method,
                         const FusionRule& rule = {}) {
    detail::require_same_size(img1, img2);
    Image fused;
    switch (method.variant) {
        case MethodVariant::dwt: {
            const FilterBank bank = builtin_bank(method.bank);
            const auto p1 = dwt2_forward(img1, bank, method.levels);
            const auto p2 = dwt2_forward(img2, bank, method.levels);
            fused = dwt2_inverse(detail::fuse_pyramids(p1, p2, rule));
            break;
        }
        case MethodVariant::swt: {
            const FilterBank bank = builtin_bank(method.bank);
            const auto p1 = swt2_forward(img1, bank, method.levels);
            const auto p2 = swt2_forward(img2, bank, method.levels);
            fused = swt2_inverse(detail::fuse_pyramids(p1, p2, rule));
            break;
        }
        case MethodVariant::ilwt: {
            const LiftingScheme scheme;
            const auto p1 = lwt2_forward(img1, scheme, method.levels);
            const auto p2 = lwt2_forward(img2, scheme, method.levels);
            fused = lwt2_inverse(detail::fuse_pyramids(p1, p2, rule));
            break;
        }
        case MethodVariant::dtcwt:
        case MethodVariant::qshift_dtcwt: {
            const DualTreeFilterSet fs = DualTreeFilterSet::make(
                method.variant == MethodVariant::dtcwt ? DtcwtVariant::original
                                                       : DtcwtVariant::qshift);
            const auto p1 = dtcwt2_forward(img1, fs, method.levels);
            const auto p2 = dtcwt2_forward(img2, fs, method.levels);
            fused = dtcwt2_inverse(detail::fuse_pyramids(p1, p2, rule), fs);
            break;
        }
    }
    detail::clamp_in_place(fused);
    return fused;
}

}  // namespace wavefuse
