#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dwt.hpp"
#include "filterbank.hpp"
#include "image.hpp"
#include "matrix.hpp"

namespace wavefuse {

namespace detail {

// Undecimated correlation with dilated taps, skipping the inserted zeros:
// out[k] = sum_m taps[m] * x[(k + m*dilation) mod n].  Cost stays
// O(n * taps) per call at every level.
inline void correlate_full(const double* x, std::size_t n, const std::vector<double>& taps,
                           std::size_t dilation, double* out) {
    for (std::size_t k = 0; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t m = 0; m < taps.size(); ++m) acc += taps[m] * x[(k + m * dilation) % n];
        out[k] = acc;
    }
}

// Adjoint of correlate_full: out[k] = sum_m taps[m] * c[(k - m*dilation) mod n].
inline void correlate_adjoint(const double* c, std::size_t n, const std::vector<double>& taps,
                              std::size_t dilation, double* out) {
    for (std::size_t k = 0; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t m = 0; m < taps.size(); ++m)
            acc += taps[m] * c[pmod(static_cast<std::ptrdiff_t>(k) -
                                        static_cast<std::ptrdiff_t>(m * dilation),
                                    n)];
        out[k] = acc;
    }
}

inline RealMatrix swt_rows(const RealMatrix& m, const std::vector<double>& taps,
                           std::size_t dilation, bool adjoint) {
    RealMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (adjoint)
            correlate_adjoint(m.row_ptr(r), m.cols(), taps, dilation, out.row_ptr(r));
        else
            correlate_full(m.row_ptr(r), m.cols(), taps, dilation, out.row_ptr(r));
    }
    return out;
}

inline RealMatrix swt_cols(const RealMatrix& m, const std::vector<double>& taps,
                           std::size_t dilation, bool adjoint) {
    RealMatrix out(m.rows(), m.cols());
    std::vector<double> col(m.rows()), res(m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m(r, c);
        if (adjoint)
            correlate_adjoint(col.data(), col.size(), taps, dilation, res.data());
        else
            correlate_full(col.data(), col.size(), taps, dilation, res.data());
        for (std::size_t r = 0; r < m.rows(); ++r) out(r, c) = res[r];
    }
    return out;
}

inline RealMatrix matrix_mean(const RealMatrix& a, const RealMatrix& b) {
    RealMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) out.data()[i] = 0.5 * (a.data()[i] + b.data()[i]);
    return out;
}

}  // namespace detail

// Stationary (undecimated) 2-D wavelet transform via the a-trous algorithm:
// level j applies the bank's filters dilated by 2^(j-1), no decimation, for
// an O(pixels * taps * levels) total cost per axis.
inline Pyramid<double> swt2_forward(const Image& img, const FilterBank& bank,
                                    std::size_t levels) {
    if (levels < 1) throw std::invalid_argument("levels must be >= 1");
    const std::size_t block = static_cast<std::size_t>(1) << levels;
    if (block > img.width() || block > img.height())
        throw std::invalid_argument("swt2_forward: level count exceeds log2 of min dimension");
    const Image padded = pad_to_multiple(img, block);
    Pyramid<double> p;
    p.kind = PyramidKind::undecimated;
    p.bank_name = bank.name;
    p.origin = img.origin_size();
    RealMatrix a = padded.samples();
    for (std::size_t j = 1; j <= levels; ++j) {
        const std::size_t dilation = static_cast<std::size_t>(1) << (j - 1);
        const RealMatrix lo = detail::swt_rows(a, bank.h0, dilation, false);
        const RealMatrix hi = detail::swt_rows(a, bank.h1, dilation, false);
        DetailBands<double> d;
        d.lh = detail::swt_cols(lo, bank.h1, dilation, false);
        d.hl = detail::swt_cols(hi, bank.h0, dilation, false);
        d.hh = detail::swt_cols(hi, bank.h1, dilation, false);
        RealMatrix ll = detail::swt_cols(lo, bank.h0, dilation, false);
        p.details.push_back(std::move(d));
        a = std::move(ll);
    }
    p.approx = std::move(a);
    return p;
}

// Inverse as the average over decimation phases, realized directly as adjoint
// filtering with a 1/2 normalization per axis per level.
inline Image swt2_inverse(const Pyramid<double>& p) {
    if (p.kind != PyramidKind::undecimated)
        throw std::invalid_argument("swt2_inverse: pyramid kind must be undecimated");
    const FilterBank bank = builtin_bank(p.bank_name);
    RealMatrix a = p.approx;
    for (std::size_t j = p.details.size(); j-- > 0;) {
        const std::size_t dilation = static_cast<std::size_t>(1) << j;
        const DetailBands<double>& d = p.details[j];
        if (!d.lh.same_shape(a))
            throw std::invalid_argument("swt2_inverse: inconsistent band dimensions");
        const RealMatrix lo = detail::matrix_mean(detail::swt_cols(a, bank.h0, dilation, true),
                                                  detail::swt_cols(d.lh, bank.h1, dilation, true));
        const RealMatrix hi = detail::matrix_mean(detail::swt_cols(d.hl, bank.h0, dilation, true),
                                                  detail::swt_cols(d.hh, bank.h1, dilation, true));
        a = detail::matrix_mean(detail::swt_rows(lo, bank.h0, dilation, true),
                                detail::swt_rows(hi, bank.h1, dilation, true));
    }
    return crop_to_origin(Image(std::move(a), p.origin));
}

}  // namespace wavefuse
