#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace wavefuse;

namespace {

const Method kMethods[] = {{MethodVariant::dwt, "db4", 4},
                           {MethodVariant::swt, "db4", 4},
                           {MethodVariant::ilwt, "db4", 4},
                           {MethodVariant::dtcwt, "db4", 4},
                           {MethodVariant::qshift_dtcwt, "db4", 4}};

}  // namespace

TEST_CASE("fuse_bands picks the larger magnitude, first input on ties") {
    RealMatrix a(1, 2), b(1, 2);
    a(0, 0) = 3.0;
    a(0, 1) = -5.0;
    b(0, 0) = -4.0;
    b(0, 1) = 2.0;
    const RealMatrix f = fuse_bands(a, b);
    CHECK(f(0, 0) == -4.0);
    CHECK(f(0, 1) == -5.0);

    IntMatrix ia(1, 2), ib(1, 2);
    ia(0, 0) = -7;
    ia(0, 1) = 7;
    ib(0, 0) = 7;  // tie by magnitude: keep the first input
    ib(0, 1) = -9;
    const IntMatrix fi = fuse_bands(ia, ib);
    CHECK(fi(0, 0) == -7);
    CHECK(fi(0, 1) == -9);
}

TEST_CASE("fuse_bands compares complex values by magnitude, copies them whole") {
    ComplexMatrix a(1, 2), b(1, 2);
    a(0, 0) = {3.0, 4.0};   // |.| = 5
    b(0, 0) = {6.0, 0.0};   // |.| = 6, wins
    a(0, 1) = {3.0, 4.0};   // |.| = 5, tie
    b(0, 1) = {5.0, 0.0};   // |.| = 5, loses the tie
    const ComplexMatrix f = fuse_bands(a, b);
    CHECK(f(0, 0) == std::complex<double>{6.0, 0.0});
    CHECK(f(0, 1) == std::complex<double>{3.0, 4.0});
}

TEST_CASE("fuse_bands identity, symmetry and membership") {
    std::mt19937 rng(701);
    std::uniform_real_distribution<double> dist(-100.0, 100.0);
    RealMatrix a(8, 8), b(8, 8);
    for (std::size_t i = 0; i < a.size(); ++i) {
        a.data()[i] = dist(rng);
        b.data()[i] = dist(rng);
    }
    const RealMatrix fab = fuse_bands(a, b);
    const RealMatrix fba = fuse_bands(b, a);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double v = fab.data()[i];
        CHECK((v == a.data()[i] || v == b.data()[i]));
        if (std::abs(a.data()[i]) != std::abs(b.data()[i])) CHECK(v == fba.data()[i]);
    }
    const RealMatrix faa = fuse_bands(a, a);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(faa.data()[i] == a.data()[i]);

    RealMatrix small(2, 2);
    CHECK_THROWS_AS(fuse_bands(a, small), std::invalid_argument);
}

TEST_CASE("fusing an image with itself returns the image") {
    for (std::uint32_t seed : {801u, 802u}) {
        const Image img = testutil::random_int_image(32, 32, seed);
        for (const Method& m : kMethods) {
            const Image fused = fuse_images(img, img, m);
            if (m.variant == MethodVariant::ilwt)
                CHECK(testutil::max_abs_diff(fused, img) == 0.0);
            else
                CHECK(testutil::rms_diff(fused, img) < 1e-8);
        }
    }
}

TEST_CASE("average approx rule halves the approximation against a zero image") {
    const Image img = testutil::random_int_image(16, 16, 811);
    const Image zero(16, 16, 0.0);
    const FilterBank bank = builtin_bank("db4");
    const auto pa = dwt2_forward(img, bank, 2);
    const auto pz = dwt2_forward(zero, bank, 2);
    const auto fused = detail::fuse_pyramids(pa, pz, FusionRule{});
    for (std::size_t i = 0; i < fused.approx.size(); ++i)
        CHECK(fused.approx.data()[i] == 0.5 * pa.approx.data()[i]);
    for (std::size_t j = 0; j < fused.details.size(); ++j)
        for (std::size_t i = 0; i < fused.details[j].lh.size(); ++i)
            CHECK(fused.details[j].lh.data()[i] == pa.details[j].lh.data()[i]);
}

TEST_CASE("integer approx average floors toward minus infinity") {
    IntMatrix a(1, 3), b(1, 3);
    a(0, 0) = 3;
    b(0, 0) = 4;  // (3+4)/2 -> 3
    a(0, 1) = -3;
    b(0, 1) = -4;  // (-7)/2 -> -4
    a(0, 2) = 5;
    b(0, 2) = 5;  // exact
    const IntMatrix f = detail::fuse_approx(a, b, ApproxRule::average);
    CHECK(f(0, 0) == 3);
    CHECK(f(0, 1) == -4);
    CHECK(f(0, 2) == 5);
}

TEST_CASE("max-magnitude approx rule keeps the stronger approximation") {
    const Image img = testutil::random_int_image(16, 16, 821);
    const Image zero(16, 16, 0.0);
    const auto pa = lwt2_forward(img, LiftingScheme{}, 2);
    const auto pz = lwt2_forward(zero, LiftingScheme{}, 2);
    FusionRule rule;
    rule.approx = ApproxRule::max_magnitude;
    const auto fused = detail::fuse_pyramids(pa, pz, rule);
    for (std::size_t i = 0; i < fused.approx.size(); ++i)
        CHECK(fused.approx.data()[i] == pa.approx.data()[i]);
}

TEST_CASE("fused output stays inside the 8-bit range") {
    const Image a = testutil::random_int_image(32, 32, 831);
    Image b(32, 32);
    for (std::size_t r = 0; r < 32; ++r)
        for (std::size_t c = 0; c < 32; ++c) b(r, c) = ((r / 4 + c / 4) % 2) ? 255.0 : 0.0;
    for (const Method& m : kMethods) {
        const Image fused = fuse_images(a, b, m);
        CHECK(fused.width() == 32);
        CHECK(fused.height() == 32);
        for (std::size_t r = 0; r < 32; ++r)
            for (std::size_t c = 0; c < 32; ++c) {
                CHECK(fused(r, c) >= 0.0);
                CHECK(fused(r, c) <= 255.0);
            }
    }
}

TEST_CASE("fusion keeps the dominant source's strong edges") {
    // one source carries a bright bar on black, the other is flat gray;
    // the fused image must still show a clear brightness contrast at the bar
    Image bar(32, 32, 0.0);
    for (std::size_t c = 0; c < 32; ++c)
        for (std::size_t r = 14; r < 18; ++r) bar(r, c) = 255.0;
    const Image flat(32, 32, 128.0);
    const Image fused = fuse_images(bar, flat, {MethodVariant::swt, "db4", 2});
    double on = 0.0, off = 0.0;
    for (std::size_t c = 0; c < 32; ++c) {
        on += fused(15, c) + fused(16, c);
        off += fused(4, c) + fused(24, c);
    }
    CHECK(on / 64.0 > off / 64.0 + 50.0);
}

TEST_CASE("fuse_images rejects mismatched sizes with a diagnostic") {
    const Image a = testutil::random_int_image(16, 16, 841);
    const Image b = testutil::random_int_image(8, 8, 842);
    CHECK_THROWS_WITH(fuse_images(a, b, kMethods[0]),
                      Catch::Matchers::ContainsSubstring("dimension mismatch") &&
                          Catch::Matchers::ContainsSubstring("16x16") &&
                          Catch::Matchers::ContainsSubstring("8x8"));
}

TEST_CASE("odd-sized inputs fuse and come back at the original size") {
    const Image a = testutil::random_int_image(17, 11, 851);
    const Image b = testutil::random_int_image(17, 11, 852);
    for (const Method& m : kMethods) {
        Method shallow = m;
        shallow.levels = 2;
        const Image fused = fuse_images(a, b, shallow);
        CHECK(fused.width() == 17);
        CHECK(fused.height() == 11);
    }
}
