#pragma once

#include <cmath>
#include <vector>

namespace wavefuse::dtcwt_coeffs {

// Level-1 biorthogonal pair: 13-tap analysis low-pass and 19-tap synthesis
// low-pass, both symmetric with exact rational taps.  The product filter is
// halfband with its centre at index 15, which is the reconstruction anchor.
// Scaled so each filter sums to sqrt(2).  Validity is established by the
// perfect-reconstruction property tests, not by trusting the digits.
inline const std::vector<double>& level1_analysis_lo() {
    static const std::vector<double> taps = [] {
        const double s = std::sqrt(2.0) / 5120.0;
        return std::vector<double>{-9 * s,   0 * s,    114 * s, -240 * s, -247 * s,
                                   1520 * s, 2844 * s, 1520 * s, -247 * s, -240 * s,
                                   114 * s,  0 * s,    -9 * s};
    }();
    return taps;
}

inline const std::vector<double>& level1_synthesis_lo() {
    static const std::vector<double> taps = [] {
        const double s = 1.0 / std::sqrt(2.0);
        const std::vector<double> half = {
            333.0 / 5734400.0,    0.0,               -8871.0 / 5734400.0,
            -111.0 / 71680.0,     991.0 / 89600.0,   161.0 / 5120.0,
            -60107.0 / 716800.0,  -7569.0 / 71680.0, 329317.0 / 573440.0,
            20633.0 / 17920.0};
        std::vector<double> full(19);
        for (int i = 0; i < 10; ++i) full[i] = half[i] * s;
        for (int i = 0; i < 9; ++i) full[10 + i] = half[8 - i] * s;
        return full;
    }();
    return taps;
}

// 14-tap quarter-sample-delay orthonormal low-pass for levels >= 2 (tree a;
// tree b is its time reverse).  Projected onto an exactly paraunitary
// lattice, so the two-channel bank is orthonormal to machine precision:
// sum = sqrt(2), zero at z = -1, group delay ~= 6.25 samples.
inline const std::vector<double>& qshift_lo_a() {
    static const std::vector<double> taps = {
        0.003253131214974679,   -0.0038831997191509067, 0.034660234309798484,
        -0.03887268786163166,   -0.11720401575612109,   0.2752954798538001,
        0.7561455341276572,     0.568810533987961,      0.01186597399100936,
        -0.10671168815208476,   0.023825378646102482,   0.01702521969000413,
        -0.00543945534686078,   -0.004556876612363099};
    return taps;
}

}  // namespace wavefuse::dtcwt_coeffs
