#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wavefuse {

// Two-channel perfect-reconstruction bank.  Synthesis filters are the time
// reverses of the analysis filters.
struct FilterBank {
    std::string name;
    std::vector<double> h0;  // analysis low-pass
    std::vector<double> h1;  // analysis high-pass
    std::vector<double> g0;  // synthesis low-pass = reverse(h0)
    std::vector<double> g1;  // synthesis high-pass = reverse(h1)
};

namespace detail {

inline std::vector<double> reversed(std::vector<double> v) {
    return {v.rbegin(), v.rend()};
}

// Conjugate quadrature mirror: h1[n] = (-1)^n h0[L-1-n].
inline std::vector<double> quadrature_mirror(const std::vector<double>& h0) {
    std::vector<double> h1(h0.size());
    for (std::size_t n = 0; n < h0.size(); ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        h1[n] = sign * h0[h0.size() - 1 - n];
    }
    return h1;
}

inline FilterBank make_orthonormal(std::string name, std::vector<double> h0) {
    FilterBank bank;
    bank.name = std::move(name);
    bank.h0 = std::move(h0);
    bank.h1 = quadrature_mirror(bank.h0);
    bank.g0 = reversed(bank.h0);
    bank.g1 = reversed(bank.h1);
    return bank;
}

}  // namespace detail

// Returns the named orthonormal bank.  Taps are generated from closed forms
// and validated by the perfect-reconstruction property tests.
inline FilterBank builtin_bank(const std::string& name) {
    const double rt2 = std::sqrt(2.0);
    if (name == "haar") {
        return detail::make_orthonormal("haar", {1.0 / rt2, 1.0 / rt2});
    }
    if (name == "db4") {
        const double rt3 = std::sqrt(3.0);
        const double k = 4.0 * rt2;
        return detail::make_orthonormal(
            "db4", {(1.0 + rt3) / k, (3.0 + rt3) / k, (3.0 - rt3) / k, (1.0 - rt3) / k});
    }
    throw std::invalid_argument("unknown filter bank: " + name);
}

// A-trous upsampling: factor-1 gaps of zeros between taps.
inline std::vector<double> upsample_taps(const std::vector<double>& f, std::size_t factor) {
    if (factor == 0 || (factor & (factor - 1)) != 0)
        throw std::invalid_argument("upsample_taps: factor must be a power of two");
    if (factor == 1 || f.empty()) return f;
    std::vector<double> out((f.size() - 1) * factor + 1, 0.0);
    for (std::size_t k = 0; k < f.size(); ++k) out[k * factor] = f[k];
    return out;
}

}  // namespace wavefuse
