#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "filterbank.hpp"
#include "image.hpp"
#include "matrix.hpp"

namespace wavefuse {

enum class PyramidKind { decimated, undecimated, lifted, dualtree };

template <typename T>
struct DetailBands {
    Matrix<T> lh;  // low-pass rows, high-pass columns: vertical-frequency detail
    Matrix<T> hl;
    Matrix<T> hh;
};

// Multi-level decomposition.  details[0] is the finest level (level 1);
// approx is the coarsest LL band.
template <typename T>
struct Pyramid {
    PyramidKind kind = PyramidKind::decimated;
    std::string bank_name;
    Size origin;
    Matrix<T> approx;
    std::vector<DetailBands<T>> details;

    std::size_t levels() const { return details.size(); }
};

namespace detail {

inline std::size_t pmod(std::ptrdiff_t i, std::size_t n) {
    const std::ptrdiff_t m = i % static_cast<std::ptrdiff_t>(n);
    return static_cast<std::size_t>(m < 0 ? m + static_cast<std::ptrdiff_t>(n) : m);
}

// Analysis branch: out[k] = sum_m taps[m] * x[(2k + phase + m) mod n].
inline void correlate_decimate(const double* x, std::size_t n, const std::vector<double>& taps,
                               std::size_t phase, double* out) {
    const std::size_t half = n / 2;
    for (std::size_t k = 0; k < half; ++k) {
        double acc = 0.0;
        const std::size_t base = 2 * k + phase;
        for (std::size_t m = 0; m < taps.size(); ++m) acc += taps[m] * x[(base + m) % n];
        out[k] = acc;
    }
}

// Synthesis branch (adjoint of the analysis indexing shifted by the bank's
// reconstruction delay): out[(2k + phase + anchor - j) mod n] += taps[j]*c[k].
inline void scatter_add(double* out, std::size_t n, const double* c, std::size_t half,
                        const std::vector<double>& taps, std::size_t anchor, std::size_t phase) {
    for (std::size_t k = 0; k < half; ++k) {
        const std::ptrdiff_t base = static_cast<std::ptrdiff_t>(2 * k + phase + anchor);
        for (std::size_t j = 0; j < taps.size(); ++j)
            out[pmod(base - static_cast<std::ptrdiff_t>(j), n)] += taps[j] * c[k];
    }
}

inline RealMatrix analyze_rows(const RealMatrix& m, const std::vector<double>& taps,
                               std::size_t phase) {
    RealMatrix out(m.rows(), m.cols() / 2);
    for (std::size_t r = 0; r < m.rows(); ++r)
        correlate_decimate(m.row_ptr(r), m.cols(), taps, phase, out.row_ptr(r));
    return out;
}

inline RealMatrix analyze_cols(const RealMatrix& m, const std::vector<double>& taps,
                               std::size_t phase) {
    RealMatrix out(m.rows() / 2, m.cols());
    std::vector<double> col(m.rows()), half(m.rows() / 2);
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m(r, c);
        correlate_decimate(col.data(), col.size(), taps, phase, half.data());
        for (std::size_t r = 0; r < half.size(); ++r) out(r, c) = half[r];
    }
    return out;
}

inline void synthesize_rows_add(RealMatrix& out, const RealMatrix& coeffs,
                                const std::vector<double>& taps, std::size_t anchor,
                                std::size_t phase) {
    for (std::size_t r = 0; r < out.rows(); ++r)
        scatter_add(out.row_ptr(r), out.cols(), coeffs.row_ptr(r), coeffs.cols(), taps, anchor,
                    phase);
}

inline void synthesize_cols_add(RealMatrix& out, const RealMatrix& coeffs,
                                const std::vector<double>& taps, std::size_t anchor,
                                std::size_t phase) {
    std::vector<double> col(out.rows()), half(coeffs.rows());
    for (std::size_t c = 0; c < out.cols(); ++c) {
        for (std::size_t r = 0; r < out.rows(); ++r) col[r] = out(r, c);
        for (std::size_t r = 0; r < half.size(); ++r) half[r] = coeffs(r, c);
        scatter_add(col.data(), col.size(), half.data(), half.size(), taps, anchor, phase);
        for (std::size_t r = 0; r < out.rows(); ++r) out(r, c) = col[r];
    }
}

// One separable analysis level; phases are per-axis decimation offsets.
struct Subbands {
    RealMatrix ll, lh, hl, hh;
};

inline Subbands analyze2d(const RealMatrix& a, const std::vector<double>& h0,
                          const std::vector<double>& h1, std::size_t row_phase,
                          std::size_t col_phase) {
    const RealMatrix lo = analyze_rows(a, h0, row_phase);
    const RealMatrix hi = analyze_rows(a, h1, row_phase);
    Subbands s;
    s.ll = analyze_cols(lo, h0, col_phase);
    s.lh = analyze_cols(lo, h1, col_phase);
    s.hl = analyze_cols(hi, h0, col_phase);
    s.hh = analyze_cols(hi, h1, col_phase);
    return s;
}

inline RealMatrix synthesize2d(const Subbands& s, const std::vector<double>& g0,
                               const std::vector<double>& g1, std::size_t anchor0,
                               std::size_t anchor1, std::size_t row_phase, std::size_t col_phase) {
    RealMatrix lo(2 * s.ll.rows(), s.ll.cols());
    synthesize_cols_add(lo, s.ll, g0, anchor0, col_phase);
    synthesize_cols_add(lo, s.lh, g1, anchor1, col_phase);
    RealMatrix hi(2 * s.hl.rows(), s.hl.cols());
    synthesize_cols_add(hi, s.hl, g0, anchor0, col_phase);
    synthesize_cols_add(hi, s.hh, g1, anchor1, col_phase);
    RealMatrix out(lo.rows(), 2 * lo.cols());
    synthesize_rows_add(out, lo, g0, anchor0, row_phase);
    synthesize_rows_add(out, hi, g1, anchor1, row_phase);
    return out;
}

inline void check_levels(std::size_t levels, std::size_t width, std::size_t height) {
    if (levels < 1) throw std::invalid_argument("levels must be >= 1");
    const std::size_t block = static_cast<std::size_t>(1) << levels;
    if (block > width || block > height)
        throw std::invalid_argument("level count too deep: bands would shrink past 1x1 for " +
                                    std::to_string(width) + "x" + std::to_string(height));
}

}  // namespace detail

// One analysis level of the fast wavelet transform on an even-length signal.
inline std::pair<std::vector<double>, std::vector<double>> analyze_1d(
    const std::vector<double>& signal, const FilterBank& bank) {
    if (signal.size() < 2 || signal.size() % 2 != 0)
        throw std::invalid_argument("analyze_1d: signal length must be even and >= 2");
    std::vector<double> approx(signal.size() / 2), det(signal.size() / 2);
    detail::correlate_decimate(signal.data(), signal.size(), bank.h0, 0, approx.data());
    detail::correlate_decimate(signal.data(), signal.size(), bank.h1, 0, det.data());
    return {std::move(approx), std::move(det)};
}

inline std::vector<double> synthesize_1d(const std::vector<double>& approx,
                                         const std::vector<double>& det, const FilterBank& bank) {
    if (approx.size() != det.size())
        throw std::invalid_argument("synthesize_1d: band length mismatch");
    std::vector<double> out(2 * approx.size(), 0.0);
    detail::scatter_add(out.data(), out.size(), approx.data(), approx.size(), bank.g0,
                        bank.g0.size() - 1, 0);
    detail::scatter_add(out.data(), out.size(), det.data(), det.size(), bank.g1,
                        bank.g1.size() - 1, 0);
    return out;
}

// Separable 2-D DWT: rows then columns per level, recursing on LL.  The image
// is padded periodically to a multiple of 2^levels first.
inline Pyramid<double> dwt2_forward(const Image& img, const FilterBank& bank,
                                    std::size_t levels) {
    detail::check_levels(levels, img.width(), img.height());
    const Image padded = pad_to_multiple(img, static_cast<std::size_t>(1) << levels);
    Pyramid<double> p;
    p.kind = PyramidKind::decimated;
    p.bank_name = bank.name;
    p.origin = img.origin_size();
    RealMatrix a = padded.samples();
    for (std::size_t j = 0; j < levels; ++j) {
        detail::Subbands s = detail::analyze2d(a, bank.h0, bank.h1, 0, 0);
        p.details.push_back({std::move(s.lh), std::move(s.hl), std::move(s.hh)});
        a = std::move(s.ll);
    }
    p.approx = std::move(a);
    return p;
}

inline Image dwt2_inverse(const Pyramid<double>& p) {
    if (p.kind != PyramidKind::decimated)
        throw std::invalid_argument("dwt2_inverse: pyramid kind must be decimated");
    const FilterBank bank = builtin_bank(p.bank_name);
    const std::size_t a0 = bank.g0.size() - 1, a1 = bank.g1.size() - 1;
    RealMatrix a = p.approx;
    for (std::size_t j = p.details.size(); j-- > 0;) {
        const DetailBands<double>& d = p.details[j];
        if (d.lh.rows() != a.rows() || d.lh.cols() != a.cols())
            throw std::invalid_argument("dwt2_inverse: inconsistent band dimensions");
        detail::Subbands s{a, d.lh, d.hl, d.hh};
        a = detail::synthesize2d(s, bank.g0, bank.g1, a0, a1, 0, 0);
    }
    return crop_to_origin(Image(std::move(a), p.origin));
}

// Per-band detail energies of a 1-level decomposition of img and of its
// (1,0) circular shift; exhibits the DWT's shift variance.
inline std::pair<std::vector<double>, std::vector<double>> shift_variance_demo(
    const Image& img, const FilterBank& bank) {
    if (img.width() < 8 || img.height() < 8)
        throw std::invalid_argument("shift_variance_demo: image must be at least 8x8");
    Image shifted(img.width(), img.height());
    for (std::size_t r = 0; r < img.height(); ++r)
        for (std::size_t c = 0; c < img.width(); ++c)
            shifted((r + 1) % img.height(), c) = img(r, c);

    const auto energies = [&bank](const Image& im) {
        const Pyramid<double> p = dwt2_forward(im, bank, 1);
        std::vector<double> e;
        for (const auto& lvl : p.details)
            for (const Matrix<double>* b : {&lvl.lh, &lvl.hl, &lvl.hh}) {
                double acc = 0.0;
                for (double v : *b) acc += v * v;
                e.push_back(acc);
            }
        return e;
    };
    return {energies(img), energies(shifted)};
}

}  // namespace wavefuse
