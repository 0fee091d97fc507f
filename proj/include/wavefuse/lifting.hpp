#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dwt.hpp"
#include "image.hpp"
#include "matrix.hpp"

namespace wavefuse {

// LeGall 5/3 integer lifting: predict = floored mean of the two even
// neighbours, update = floor((d[k-1] + d[k] + 2) / 4).  Exactly reversible
// on integer samples.
struct LiftingScheme {
    std::string name = "legall53";
};

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace detail

inline std::pair<std::vector<std::int32_t>, std::vector<std::int32_t>> lift_forward_1d(
    const std::vector<std::int32_t>& signal, const LiftingScheme& = {}) {
    if (signal.size() < 2 || signal.size() % 2 != 0)
        throw std::invalid_argument("lift_forward_1d: signal length must be even and >= 2");
    const std::size_t half = signal.size() / 2;
    std::vector<std::int32_t> low(half), high(half);
    for (std::size_t k = 0; k < half; ++k) {
        const std::int64_t even = signal[2 * k];
        const std::int64_t even_next = signal[2 * ((k + 1) % half)];
        high[k] = static_cast<std::int32_t>(signal[2 * k + 1] -
                                            detail::floor_div(even + even_next, 2));
    }
    for (std::size_t k = 0; k < half; ++k) {
        const std::int64_t d_prev = high[(k + half - 1) % half];
        low[k] = static_cast<std::int32_t>(signal[2 * k] +
                                           detail::floor_div(d_prev + high[k] + 2, 4));
    }
    return {std::move(low), std::move(high)};
}

inline std::vector<std::int32_t> lift_inverse_1d(const std::vector<std::int32_t>& low,
                                                 const std::vector<std::int32_t>& high,
                                                 const LiftingScheme& = {}) {
    if (low.size() != high.size())
        throw std::invalid_argument("lift_inverse_1d: band length mismatch");
    const std::size_t half = low.size();
    std::vector<std::int32_t> out(2 * half);
    for (std::size_t k = 0; k < half; ++k) {
        const std::int64_t d_prev = high[(k + half - 1) % half];
        out[2 * k] = static_cast<std::int32_t>(low[k] -
                                               detail::floor_div(d_prev + high[k] + 2, 4));
    }
    for (std::size_t k = 0; k < half; ++k) {
        const std::int64_t even = out[2 * k];
        const std::int64_t even_next = out[2 * ((k + 1) % half)];
        out[2 * k + 1] = static_cast<std::int32_t>(high[k] +
                                                   detail::floor_div(even + even_next, 2));
    }
    return out;
}

namespace detail {

inline IntMatrix to_int_matrix(const RealMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.size(); ++i) {
        const double v = m.data()[i];
        if (v != std::floor(v))
            throw std::invalid_argument("lwt2_forward: samples must be integer-valued");
        out.data()[i] = static_cast<std::int32_t>(v);
    }
    return out;
}

struct IntSubbands {
    IntMatrix ll, lh, hl, hh;
};

inline IntSubbands lift2d(const IntMatrix& a) {
    const std::size_t h = a.rows(), w = a.cols();
    IntMatrix lo(h, w / 2), hi(h, w / 2);
    std::vector<std::int32_t> row(w);
    for (std::size_t r = 0; r < h; ++r) {
        for (std::size_t c = 0; c < w; ++c) row[c] = a(r, c);
        auto [l, d] = lift_forward_1d(row);
        for (std::size_t c = 0; c < w / 2; ++c) {
            lo(r, c) = l[c];
            hi(r, c) = d[c];
        }
    }
    IntSubbands s{IntMatrix(h / 2, w / 2), IntMatrix(h / 2, w / 2), IntMatrix(h / 2, w / 2),
                  IntMatrix(h / 2, w / 2)};
    std::vector<std::int32_t> col(h);
    for (std::size_t c = 0; c < w / 2; ++c) {
        for (std::size_t r = 0; r < h; ++r) col[r] = lo(r, c);
        auto [l, d] = lift_forward_1d(col);
        for (std::size_t r = 0; r < h / 2; ++r) {
            s.ll(r, c) = l[r];
            s.lh(r, c) = d[r];
        }
        for (std::size_t r = 0; r < h; ++r) col[r] = hi(r, c);
        auto [l2, d2] = lift_forward_1d(col);
        for (std::size_t r = 0; r < h / 2; ++r) {
            s.hl(r, c) = l2[r];
            s.hh(r, c) = d2[r];
        }
    }
    return s;
}

inline IntMatrix unlift2d(const IntSubbands& s) {
    const std::size_t h = 2 * s.ll.rows(), w = 2 * s.ll.cols();
    IntMatrix lo(h, w / 2), hi(h, w / 2);
    std::vector<std::int32_t> low(h / 2), high(h / 2);
    for (std::size_t c = 0; c < w / 2; ++c) {
        for (std::size_t r = 0; r < h / 2; ++r) {
            low[r] = s.ll(r, c);
            high[r] = s.lh(r, c);
        }
        const auto col_lo = lift_inverse_1d(low, high);
        for (std::size_t r = 0; r < h; ++r) lo(r, c) = col_lo[r];
        for (std::size_t r = 0; r < h / 2; ++r) {
            low[r] = s.hl(r, c);
            high[r] = s.hh(r, c);
        }
        const auto col_hi = lift_inverse_1d(low, high);
        for (std::size_t r = 0; r < h; ++r) hi(r, c) = col_hi[r];
    }
    IntMatrix out(h, w);
    std::vector<std::int32_t> rlow(w / 2), rhigh(w / 2);
    for (std::size_t r = 0; r < h; ++r) {
        for (std::size_t c = 0; c < w / 2; ++c) {
            rlow[c] = lo(r, c);
            rhigh[c] = hi(r, c);
        }
        const auto row = lift_inverse_1d(rlow, rhigh);
        for (std::size_t c = 0; c < w; ++c) out(r, c) = row[c];
    }
    return out;
}

}  // namespace detail

// Separable integer lifting transform; exact integer round trip.
inline Pyramid<std::int32_t> lwt2_forward(const Image& img, const LiftingScheme& scheme,
                                          std::size_t levels) {
    detail::check_levels(levels, img.width(), img.height());
    const Image padded = pad_to_multiple(img, static_cast<std::size_t>(1) << levels);
    Pyramid<std::int32_t> p;
    p.kind = PyramidKind::lifted;
    p.bank_name = scheme.name;
    p.origin = img.origin_size();
    IntMatrix a = detail::to_int_matrix(padded.samples());
    for (std::size_t j = 0; j < levels; ++j) {
        detail::IntSubbands s = detail::lift2d(a);
        p.details.push_back({std::move(s.lh), std::move(s.hl), std::move(s.hh)});
        a = std::move(s.ll);
    }
    p.approx = std::move(a);
    return p;
}

inline Image lwt2_inverse(const Pyramid<std::int32_t>& p) {
    if (p.kind != PyramidKind::lifted)
        throw std::invalid_argument("lwt2_inverse: pyramid kind must be lifted");
    IntMatrix a = p.approx;
    for (std::size_t j = p.details.size(); j-- > 0;) {
        const DetailBands<std::int32_t>& d = p.details[j];
        if (d.lh.rows() != a.rows() || d.lh.cols() != a.cols())
            throw std::invalid_argument("lwt2_inverse: inconsistent band dimensions");
        a = detail::unlift2d({a, d.lh, d.hl, d.hh});
    }
    RealMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) out.data()[i] = static_cast<double>(a.data()[i]);
    return crop_to_origin(Image(std::move(out), p.origin));
}

}  // namespace wavefuse
