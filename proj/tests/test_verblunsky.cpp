#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "opuc/verblunsky.hpp"

using opuc::Cplx;
using opuc::VerblunskySequence;

TEST_CASE("construction accepts the open disk and rejects the rest") {
    CHECK_NOTHROW(VerblunskySequence({Cplx{0.99, 0.0}, Cplx{0.0, -0.99}}));
    CHECK_THROWS_AS(VerblunskySequence({Cplx{1.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(VerblunskySequence({Cplx{0.8, 0.8}}), std::invalid_argument);
    const double nan = std::nan("");
    CHECK_THROWS_AS(VerblunskySequence({Cplx{nan, 0.0}}), std::invalid_argument);
}

TEST_CASE("zero extension and normalizer") {
    const VerblunskySequence seq({Cplx{0.6, 0.0}});
    CHECK(seq.size() == 1);
    CHECK(seq.at(0) == Cplx{0.6, 0.0});
    CHECK(seq.at(1) == Cplx{0.0, 0.0});
    CHECK(seq.at(1000) == Cplx{0.0, 0.0});
    CHECK(seq.rho(0) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(seq.rho(5) == 1.0);
}

TEST_CASE("test sequence values") {
    const VerblunskySequence s1 = opuc::test_sequence(1, 3);
    REQUIRE(s1.size() == 3);
    CHECK(s1[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(s1[1].real() == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(s1[2].real() == doctest::Approx(1.0 / std::sqrt(4.0)).epsilon(1e-15));
    CHECK(s1[0].imag() == 0.0);

    const VerblunskySequence s2 = opuc::test_sequence(2, 1);
    CHECK(s2[0].real() == doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-15));

    CHECK_THROWS_AS(opuc::test_sequence(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(opuc::test_sequence(1, 0), std::invalid_argument);
}

TEST_CASE("test sequence summability splits at the critical power") {
    // For m = 1 the squares sum like log N: each decade adds about ln 10,
    // while the cubes saturate.
    auto power_sum = [](const VerblunskySequence& s, double p) {
        double acc = 0.0;
        for (std::size_t n = 0; n < s.size(); ++n) acc += std::pow(std::abs(s[n]), p);
        return acc;
    };
    const VerblunskySequence a = opuc::test_sequence(1, 1000);
    const VerblunskySequence b = opuc::test_sequence(1, 10000);
    const VerblunskySequence c = opuc::test_sequence(1, 100000);
    const double ln10 = std::log(10.0);
    CHECK(power_sum(b, 2.0) - power_sum(a, 2.0) == doctest::Approx(ln10).epsilon(0.01));
    CHECK(power_sum(c, 2.0) - power_sum(b, 2.0) == doctest::Approx(ln10).epsilon(0.01));
    const double inc3 = power_sum(c, 3.0) - power_sum(b, 3.0);
    CHECK(inc3 <= 0.01 * power_sum(b, 3.0));
}

TEST_CASE("power sequence values and domain") {
    const VerblunskySequence s = opuc::power_sequence(0.5, 0.9, 2);
    CHECK(s[0].real() == doctest::Approx(0.9 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(s[1].real() == doctest::Approx(0.9 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK_THROWS_AS(opuc::power_sequence(0.5, 1.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(opuc::power_sequence(0.5, 0.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(opuc::power_sequence(0.0, 0.5, 2), std::invalid_argument);
    CHECK_THROWS_AS(opuc::power_sequence(-1.0, 0.5, 2), std::invalid_argument);
}

TEST_CASE("power sequence fourth-power sums separate beta above and below 1/4") {
    auto p4 = [](double beta, std::size_t N) {
        const VerblunskySequence s = opuc::power_sequence(beta, 0.6, N);
        double acc = 0.0;
        for (std::size_t n = 0; n < N; ++n) acc += std::pow(std::abs(s[n]), 4.0);
        return acc;
    };
    // beta = 0.2: 4 beta < 1, the sums keep growing like N^{0.2} and each
    // decade contributes more than the last.
    CHECK(p4(0.2, 100000) / p4(0.2, 1000) >= 2.0);
    CHECK((p4(0.2, 100000) - p4(0.2, 10000)) / (p4(0.2, 10000) - p4(0.2, 1000)) >= 1.4);
    // beta = 0.3: convergent tail (n^{-1.2}), so decade increments shrink
    // geometrically even though the limit is approached slowly.
    CHECK((p4(0.3, 100000) - p4(0.3, 10000)) / (p4(0.3, 10000) - p4(0.3, 1000)) <= 0.75);
    CHECK(p4(0.3, 100000) / p4(0.3, 1000) <= 1.3);
}

TEST_CASE("lp norm hand values and monotonicity in p") {
    const VerblunskySequence s({Cplx{0.6, 0.0}, Cplx{0.0, 0.8}});
    CHECK(opuc::lp_norm(s, 1.0) == doctest::Approx(1.4).epsilon(1e-15));
    CHECK(opuc::lp_norm(s, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(opuc::lp_norm(s, 0.5), std::invalid_argument);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    std::vector<Cplx> a(40);
    for (auto& v : a) v = std::polar(0.95 * std::sqrt(U(rng)), 2.0 * M_PI * U(rng));
    const VerblunskySequence r(a);
    double prev = opuc::lp_norm(r, 1.0);
    for (double p : {1.5, 2.0, 3.0, 6.0}) {
        const double cur = opuc::lp_norm(r, p);
        CHECK(cur <= prev + 1e-12);
        prev = cur;
    }
}

TEST_CASE("forward difference ends with the negated last entry") {
    const VerblunskySequence s = opuc::test_sequence(1, 3);
    const std::vector<Cplx> d = opuc::forward_difference(s);
    REQUIRE(d.size() == 3);
    CHECK(d[0].real() ==
          doctest::Approx(1.0 / std::sqrt(3.0) - 1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(d[1].real() ==
          doctest::Approx(1.0 / std::sqrt(4.0) - 1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(d[2].real() == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(opuc::forward_difference(VerblunskySequence()).empty());
}

TEST_CASE("sequence CSV round trip is exact") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    std::vector<Cplx> a(25);
    for (auto& v : a) v = std::polar(0.999 * std::sqrt(U(rng)), 2.0 * M_PI * U(rng));
    const VerblunskySequence s(a);
    std::ostringstream out;
    opuc::write_sequence_csv(s, out);
    std::istringstream in(out.str());
    const VerblunskySequence back = opuc::read_sequence_csv(in);
    REQUIRE(back.size() == s.size());
    for (std::size_t n = 0; n < s.size(); ++n) {
        CHECK(back[n].real() == s[n].real());
        CHECK(back[n].imag() == s[n].imag());
    }
    // Identical input, identical bytes.
    std::ostringstream again;
    opuc::write_sequence_csv(s, again);
    CHECK(again.str() == out.str());
}
