#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtcwt_coeffs.hpp"
#include "dwt.hpp"
#include "image.hpp"
#include "matrix.hpp"
#include "threads.hpp"

namespace wavefuse {

enum class DtcwtVariant { original, qshift };

// Analysis/synthesis filters plus decimation phase for one tree at one range
// of levels.  anchor0/anchor1 are the reconstruction delays of the low/high
// branches (the centre of the halfband product filter).
struct TreeStage {
    std::vector<double> h0, h1, g0, g1;
    std::size_t anchor0 = 0;
    std::size_t anchor1 = 0;
    std::size_t phase = 0;
};

namespace detail {

inline std::vector<double> modulate(const std::vector<double>& f, double sign) {
    std::vector<double> out(f.size());
    for (std::size_t n = 0; n < f.size(); ++n)
        out[n] = ((n % 2 == 0) ? sign : -sign) * f[n];
    return out;
}

// Level-1 biorthogonal stage from the (13,19)-tap pair.  The high-pass pair
// is the modulated complement: h1[n] = (-1)^n g0[n], g1[n] = -(-1)^n h0[n].
inline TreeStage level1_stage(std::size_t phase) {
    TreeStage s;
    s.h0 = dtcwt_coeffs::level1_analysis_lo();
    s.g0 = dtcwt_coeffs::level1_synthesis_lo();
    s.h1 = modulate(s.g0, 1.0);
    s.g1 = modulate(s.h0, -1.0);
    s.anchor0 = 15;
    s.anchor1 = 15;
    s.phase = phase;
    return s;
}

inline TreeStage orthonormal_stage(const std::vector<double>& h0, std::size_t phase) {
    TreeStage s;
    s.h0 = h0;
    s.h1 = quadrature_mirror(h0);
    s.g0 = reversed(s.h0);
    s.g1 = reversed(s.h1);
    s.anchor0 = s.g0.size() - 1;
    s.anchor1 = s.g1.size() - 1;
    s.phase = phase;
    return s;
}

}  // namespace detail

// The two trees' filters.  Level 1 uses the odd-length biorthogonal pair in
// both trees with a one-sample offset between them.  Levels >= 2: qshift uses
// the quarter-delay 14-tap pair with tree b as the time reverse of tree a;
// the original variant keeps the odd-length filters, tree b alternating its
// decimation phase by level so the inter-tree delay stays fractional.
struct DualTreeFilterSet {
    DtcwtVariant variant = DtcwtVariant::qshift;
    TreeStage level1_a, level1_b;
    TreeStage higher_a, higher_b;

    static DualTreeFilterSet make(DtcwtVariant v) {
        DualTreeFilterSet fs;
        fs.variant = v;
        fs.level1_a = detail::level1_stage(0);
        fs.level1_b = detail::level1_stage(1);
        if (v == DtcwtVariant::qshift) {
            const std::vector<double>& lo_a = dtcwt_coeffs::qshift_lo_a();
            fs.higher_a = detail::orthonormal_stage(lo_a, 0);
            fs.higher_b = detail::orthonormal_stage(detail::reversed(lo_a), 0);
        } else {
            fs.higher_a = detail::level1_stage(0);
            fs.higher_b = detail::level1_stage(1);
        }
        return fs;
    }

    // Stage for (tree, level); tree 0 = a, tree 1 = b.
    TreeStage stage(int tree, std::size_t level) const {
        if (level == 1) return tree == 0 ? level1_a : level1_b;
        TreeStage s = tree == 0 ? higher_a : higher_b;
        if (variant == DtcwtVariant::original && tree == 1)
            s.phase = (level % 2 == 0) ? 1 : 0;
        return s;
    }
};

// Six oriented complex bands of one level, ordered to match
// orientation_labels(): +15, +45, +75, -15, -45, -75 degrees.
using OrientedBands = std::array<ComplexMatrix, 6>;

inline const std::array<const char*, 6>& orientation_labels() {
    static const std::array<const char*, 6> labels = {"+15", "+45", "+75",
                                                      "-15", "-45", "-75"};
    return labels;
}

// Four real pyramids condensed: approx holds the four LL bands (tree combos
// aa, ab, ba, bb; first letter = row-pass tree, second = column-pass tree),
// oriented[j] the six complex bands of level j+1.
struct ComplexPyramid {
    DtcwtVariant variant = DtcwtVariant::qshift;
    Size origin;
    std::array<RealMatrix, 4> approx;
    std::vector<OrientedBands> oriented;

    std::size_t levels() const { return oriented.size(); }
};

namespace detail {

constexpr std::array<std::pair<int, int>, 4> kTreeCombos = {
    {{0, 0}, {0, 1}, {1, 0}, {1, 1}}};

struct RealTreePyramid {
    RealMatrix approx;
    std::vector<Subbands> levels;  // lh/hl/hh used; ll ignored except final
};

inline RealTreePyramid tree_forward(const RealMatrix& img, const DualTreeFilterSet& fs,
                                    int tree_row, int tree_col, std::size_t levels) {
    RealTreePyramid p;
    RealMatrix a = img;
    for (std::size_t j = 1; j <= levels; ++j) {
        const TreeStage sr = fs.stage(tree_row, j);
        const TreeStage sc = fs.stage(tree_col, j);
        const RealMatrix lo = analyze_rows(a, sr.h0, sr.phase);
        const RealMatrix hi = analyze_rows(a, sr.h1, sr.phase);
        Subbands out;
        out.ll = analyze_cols(lo, sc.h0, sc.phase);
        out.lh = analyze_cols(lo, sc.h1, sc.phase);
        out.hl = analyze_cols(hi, sc.h0, sc.phase);
        out.hh = analyze_cols(hi, sc.h1, sc.phase);
        a = out.ll;
        p.levels.push_back(std::move(out));
    }
    p.approx = std::move(a);
    return p;
}

inline RealMatrix tree_inverse(const RealTreePyramid& p, const DualTreeFilterSet& fs,
                               int tree_row, int tree_col) {
    RealMatrix a = p.approx;
    for (std::size_t j = p.levels.size(); j-- > 0;) {
        const TreeStage sr = fs.stage(tree_row, j + 1);
        const TreeStage sc = fs.stage(tree_col, j + 1);
        const Subbands& s = p.levels[j];
        RealMatrix lo(2 * a.rows(), a.cols());
        synthesize_cols_add(lo, a, sc.g0, sc.anchor0, sc.phase);
        synthesize_cols_add(lo, s.lh, sc.g1, sc.anchor1, sc.phase);
        RealMatrix hi(2 * a.rows(), a.cols());
        synthesize_cols_add(hi, s.hl, sc.g0, sc.anchor0, sc.phase);
        synthesize_cols_add(hi, s.hh, sc.g1, sc.anchor1, sc.phase);
        RealMatrix out(lo.rows(), 2 * lo.cols());
        synthesize_rows_add(out, lo, sr.g0, sr.anchor0, sr.phase);
        synthesize_rows_add(out, hi, sr.g1, sr.anchor1, sr.phase);
        a = std::move(out);
    }
    return a;
}

// (+o) = (aa - bb)/sqrt2 + i(ab + ba)/sqrt2
// (-o) = (aa + bb)/sqrt2 + i(ba - ab)/sqrt2
inline void pair_bands(const RealMatrix& aa, const RealMatrix& ab, const RealMatrix& ba,
                       const RealMatrix& bb, ComplexMatrix& plus, ComplexMatrix& minus) {
    const double k = 1.0 / std::sqrt(2.0);
    plus = ComplexMatrix(aa.rows(), aa.cols());
    minus = ComplexMatrix(aa.rows(), aa.cols());
    for (std::size_t i = 0; i < aa.size(); ++i) {
        const double paa = aa.data()[i], pab = ab.data()[i];
        const double pba = ba.data()[i], pbb = bb.data()[i];
        plus.data()[i] = {k * (paa - pbb), k * (pab + pba)};
        minus.data()[i] = {k * (paa + pbb), k * (pba - pab)};
    }
}

// Exact inverse of pair_bands.
inline void unpair_bands(const ComplexMatrix& plus, const ComplexMatrix& minus, RealMatrix& aa,
                         RealMatrix& ab, RealMatrix& ba, RealMatrix& bb) {
    const double k = 1.0 / std::sqrt(2.0);
    aa = RealMatrix(plus.rows(), plus.cols());
    ab = RealMatrix(plus.rows(), plus.cols());
    ba = RealMatrix(plus.rows(), plus.cols());
    bb = RealMatrix(plus.rows(), plus.cols());
    for (std::size_t i = 0; i < plus.size(); ++i) {
        const std::complex<double> p = plus.data()[i], m = minus.data()[i];
        aa.data()[i] = k * (p.real() + m.real());
        bb.data()[i] = k * (m.real() - p.real());
        ab.data()[i] = k * (p.imag() - m.imag());
        ba.data()[i] = k * (p.imag() + m.imag());
    }
}

}  // namespace detail

// Forward dual-tree transform: four real separable transforms (tree a/b on
// rows x columns) whose same-orientation bands pair into six complex bands
// per level.  Orientation order: +15, +45, +75 from HL, HH, LH and the
// conjugate pairings as -15, -45, -75.
inline ComplexPyramid dtcwt2_forward(const Image& img, const DualTreeFilterSet& filters,
                                     std::size_t levels) {
    detail::check_levels(levels, img.width(), img.height());
    const Image padded = pad_to_multiple(img, static_cast<std::size_t>(1) << levels);

    std::array<detail::RealTreePyramid, 4> trees;
    std::vector<std::function<void()>> tasks;
    for (std::size_t c = 0; c < 4; ++c)
        tasks.push_back([&, c] {
            trees[c] = detail::tree_forward(padded.samples(), filters,
                                            detail::kTreeCombos[c].first,
                                            detail::kTreeCombos[c].second, levels);
        });
    detail::run_tasks(std::move(tasks));

    ComplexPyramid p;
    p.variant = filters.variant;
    p.origin = img.origin_size();
    for (std::size_t c = 0; c < 4; ++c) p.approx[c] = std::move(trees[c].approx);
    p.oriented.resize(levels);
    for (std::size_t j = 0; j < levels; ++j) {
        OrientedBands& ob = p.oriented[j];
        detail::pair_bands(trees[0].levels[j].hl, trees[1].levels[j].hl, trees[2].levels[j].hl,
                           trees[3].levels[j].hl, ob[0], ob[3]);  // +15 / -15
        detail::pair_bands(trees[0].levels[j].hh, trees[1].levels[j].hh, trees[2].levels[j].hh,
                           trees[3].levels[j].hh, ob[1], ob[4]);  // +45 / -45
        detail::pair_bands(trees[0].levels[j].lh, trees[1].levels[j].lh, trees[2].levels[j].lh,
                           trees[3].levels[j].lh, ob[2], ob[5]);  // +75 / -75
    }
    return p;
}

// Unpairs back to the four real pyramids, inverts each tree, averages.
inline Image dtcwt2_inverse(const ComplexPyramid& p, const DualTreeFilterSet& filters) {
    if (p.oriented.empty()) throw std::invalid_argument("dtcwt2_inverse: empty pyramid");
    const std::size_t levels = p.oriented.size();

    std::array<detail::RealTreePyramid, 4> trees;
    for (std::size_t c = 0; c < 4; ++c) {
        trees[c].approx = p.approx[c];
        trees[c].levels.resize(levels);
    }
    for (std::size_t j = 0; j < levels; ++j) {
        const OrientedBands& ob = p.oriented[j];
        RealMatrix aa, ab, ba, bb;
        detail::unpair_bands(ob[0], ob[3], aa, ab, ba, bb);
        trees[0].levels[j].hl = std::move(aa);
        trees[1].levels[j].hl = std::move(ab);
        trees[2].levels[j].hl = std::move(ba);
        trees[3].levels[j].hl = std::move(bb);
        detail::unpair_bands(ob[1], ob[4], aa, ab, ba, bb);
        trees[0].levels[j].hh = std::move(aa);
        trees[1].levels[j].hh = std::move(ab);
        trees[2].levels[j].hh = std::move(ba);
        trees[3].levels[j].hh = std::move(bb);
        detail::unpair_bands(ob[2], ob[5], aa, ab, ba, bb);
        trees[0].levels[j].lh = std::move(aa);
        trees[1].levels[j].lh = std::move(ab);
        trees[2].levels[j].lh = std::move(ba);
        trees[3].levels[j].lh = std::move(bb);
    }

    std::array<RealMatrix, 4> recon;
    std::vector<std::function<void()>> tasks;
    for (std::size_t c = 0; c < 4; ++c)
        tasks.push_back([&, c] {
            recon[c] = detail::tree_inverse(trees[c], filters, detail::kTreeCombos[c].first,
                                            detail::kTreeCombos[c].second);
        });
    detail::run_tasks(std::move(tasks));

    RealMatrix out(recon[0].rows(), recon[0].cols());
    for (std::size_t i = 0; i < out.size(); ++i)
        out.data()[i] = 0.25 * (recon[0].data()[i] + recon[1].data()[i] + recon[2].data()[i] +
                                recon[3].data()[i]);
    return crop_to_origin(Image(std::move(out), p.origin));
}

// Relative magnitude-energy change of every oriented band under a circular
// shift; one entry per band, finest level first, orientation order as in
// orientation_labels().
inline std::vector<double> shift_invariance_score(const Image& img,
                                                  const DualTreeFilterSet& filters, int dx,
                                                  int dy, std::size_t levels = 4) {
    Image shifted(img.width(), img.height());
    for (std::size_t r = 0; r < img.height(); ++r)
        for (std::size_t c = 0; c < img.width(); ++c) {
            const std::size_t rr = detail::pmod(static_cast<std::ptrdiff_t>(r) + dy, img.height());
            const std::size_t cc = detail::pmod(static_cast<std::ptrdiff_t>(c) + dx, img.width());
            shifted(rr, cc) = img(r, c);
        }
    const ComplexPyramid p0 = dtcwt2_forward(img, filters, levels);
    const ComplexPyramid p1 = dtcwt2_forward(shifted, filters, levels);
    std::vector<double> scores;
    for (std::size_t j = 0; j < levels; ++j)
        for (std::size_t b = 0; b < 6; ++b) {
            double e0 = 0.0, e1 = 0.0;
            for (const auto& v : p0.oriented[j][b]) e0 += std::norm(v);
            for (const auto& v : p1.oriented[j][b]) e1 += std::norm(v);
            const double diff = std::abs(e1 - e0);
            scores.push_back(diff == 0.0 ? 0.0 : diff / e0);
        }
    return scores;
}

}  // namespace wavefuse
