#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "udm/channel.hpp"
#include "udm/rng.hpp"

using namespace udm;

namespace {

// closed form of the stuck-at entry, the independent oracle for the
// binomial sum the library evaluates
double sac_closed_form(int n, int d, double eps) {
    return std::pow(eps / 2.0, d) * std::pow(1.0 - eps / 2.0, n - d);
}

}  // namespace

TEST_CASE("bsc crossover entries") {
    const CrossoverMatrix m = bsc_crossover(3, 0.1);
    REQUIRE(m(0, 0) == Catch::Approx(0.729).margin(1e-15));
    REQUIRE(m(0b000, 0b111) == Catch::Approx(1.0e-3).margin(1e-15));
    REQUIRE(m(0b010, 0b011) == Catch::Approx(0.081).margin(1e-15));

    const CrossoverMatrix id = bsc_crossover(3, 0.0);
    for (Label k = 0; k < 8; ++k)
        for (Label kp = 0; kp < 8; ++kp) REQUIRE(id(k, kp) == (k == kp ? 1.0 : 0.0));
}

TEST_CASE("sac crossover entries") {
    const CrossoverMatrix m = sac_crossover(3, 0.1);
    REQUIRE(m(0b000, 0b001) == Catch::Approx(0.045125).margin(1e-12));
    REQUIRE(m(0b000, 0b111) == Catch::Approx(1.25e-4).margin(1e-15));

    const CrossoverMatrix id = sac_crossover(3, 0.0);
    for (Label k = 0; k < 8; ++k)
        for (Label kp = 0; kp < 8; ++kp) REQUIRE(id(k, kp) == (k == kp ? 1.0 : 0.0));
}

TEST_CASE("crossover rejects invalid epsilon") {
    REQUIRE_THROWS_AS(bsc_crossover(3, -0.1), std::invalid_argument);
    REQUIRE_THROWS_AS(sac_crossover(3, 1.1), std::invalid_argument);
    REQUIRE_THROWS_AS(sac_crossover(3, std::nan("")), std::invalid_argument);
}

TEST_CASE("rows are stochastic and entries depend only on hamming distance") {
    for (int n = 1; n <= 8; ++n) {
        for (double eps : {0.0, 0.01, 0.1, 0.5, 1.0}) {
            for (const CrossoverMatrix& m : {bsc_crossover(n, eps), sac_crossover(n, eps)}) {
                const int k_count = m.size();
                for (int k = 0; k < k_count; ++k) {
                    double sum = 0.0;
                    for (int kp = 0; kp < k_count; ++kp) {
                        const double v = m(k, kp);
                        REQUIRE(v >= 0.0);
                        REQUIRE(v <= 1.0);
                        // permutation symmetry: entry equals the distance-d entry of row 0
                        REQUIRE(v == m(0, static_cast<Label>(k ^ kp)));
                        sum += v;
                    }
                    REQUIRE(sum == Catch::Approx(1.0).margin(1e-12));
                }
            }
        }
    }
}

TEST_CASE("sac binomial sum equals the closed form and the half-epsilon bsc") {
    for (int n = 1; n <= 8; ++n) {
        for (double eps : {0.0, 0.01, 0.1, 0.5, 1.0}) {
            const CrossoverMatrix sac = sac_crossover(n, eps);
            const CrossoverMatrix bsc_half = bsc_crossover(n, eps / 2.0);
            for (int d = 0; d <= n; ++d) {
                const Label to = static_cast<Label>((1u << d) - 1);
                REQUIRE(sac(0, to) == Catch::Approx(sac_closed_form(n, d, eps)).margin(1e-12));
            }
            for (int k = 0; k < sac.size(); ++k)
                for (int kp = 0; kp < sac.size(); ++kp)
                    REQUIRE(sac(k, kp) == Catch::Approx(bsc_half(k, kp)).margin(1e-12));
        }
    }
}

TEST_CASE("bsc is pessimistic relative to sac at the plotted error rates") {
    for (int n = 1; n <= 8; ++n) {
        for (double eps : {1e-2, 1e-1}) {
            const CrossoverMatrix bsc = bsc_crossover(n, eps);
            const CrossoverMatrix sac = sac_crossover(n, eps);
            for (int d = 1; d <= n; ++d) {
                const Label to = static_cast<Label>((1u << d) - 1);
                REQUIRE(bsc(0, to) > sac(0, to));
            }
        }
    }
}

TEST_CASE("apply_channel is the sampling counterpart of the matrix") {
    const CrossoverMatrix frozen = sac_crossover(3, 0.0);
    Rng rng(5);
    for (Label l = 0; l < 8; ++l) REQUIRE(apply_channel(l, frozen, rng) == l);

    const CrossoverMatrix flip = bsc_crossover(3, 1.0);
    for (Label l = 0; l < 8; ++l) REQUIRE(apply_channel(l, flip, rng) == (l ^ 0b111));

    // empirical frequency of a one-bit crossover vs the matrix entry
    const CrossoverMatrix sac = sac_crossover(3, 0.1);
    const int trials = 1'000'000;
    int hits = 0;
    Rng rng2(12345);
    for (int t = 0; t < trials; ++t)
        if (apply_channel(0b000, sac, rng2) == 0b001) ++hits;
    const double p = sac(0b000, 0b001);
    const double sd = std::sqrt(p * (1.0 - p) / trials);
    REQUIRE(std::abs(hits / static_cast<double>(trials) - p) <= 3.0 * sd);
}

TEST_CASE("apply_channel empirical rows match matrix rows") {
    const CrossoverMatrix sac = sac_crossover(3, 0.2);
    const int trials = 200'000;
    std::vector<int> hist(8, 0);
    Rng rng(99);
    for (int t = 0; t < trials; ++t) ++hist[apply_channel(0b101, sac, rng)];
    for (Label kp = 0; kp < 8; ++kp) {
        const double p = sac(0b101, kp);
        const double sd = std::sqrt(p * (1.0 - p) / trials);
        REQUIRE(std::abs(hist[kp] / static_cast<double>(trials) - p) <= 4.0 * sd);
    }
}
