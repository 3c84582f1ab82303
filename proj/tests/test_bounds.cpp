#include <doctest.h>

#include <cmath>

#include "netfix/bounds.hpp"
#include "netfix/guessing.hpp"

using namespace netfix;

TEST_CASE("big binomials and their logarithms") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
    CHECK(log2_big(BigInt(1) << 200) == doctest::Approx(200.0));
    CHECK(log2_big(binomial(10, 5)) == doctest::Approx(std::log2(252.0)));
}

TEST_CASE("binary entropy") {
    CHECK(entropy(0.5) == doctest::Approx(1.0));
    CHECK(entropy(0.25) == doctest::Approx(0.8112781245));
    CHECK(entropy(0.0) == doctest::Approx(0.0));
    CHECK(entropy(1.0) == doctest::Approx(0.0));
    CHECK(entropy(0.3) == doctest::Approx(entropy(0.7)));
    CHECK_THROWS(entropy(-0.1));
    CHECK_THROWS(entropy(1.1));
}

TEST_CASE("packing and feedback bounds") {
    auto k4 = classic_bounds(positive_clique(4));
    CHECK(k4.c_plus == 2);
    CHECK(k4.k_plus == 3);

    auto c5 = classic_bounds(positive_cycle(5));
    CHECK(c5.c_plus == 1);
    CHECK(c5.k_plus == 1);

    auto frustrated = classic_bounds(signed_cycle({Sign::negative, Sign::positive, Sign::positive,
                                                   Sign::positive, Sign::positive}));
    CHECK(frustrated.c_plus == 0);
    CHECK(frustrated.k_plus == 0);
}

TEST_CASE("degree-based lower bounds") {
    CHECK(turan_lower(unsigned_clique(4)).raw == doctest::Approx(3 + 0 - 2.0));
    double k3m = 2 * std::log2(4.0 / 3.0) - std::log2(3.0);
    CHECK(turan_lower(negative_clique(3)).raw == doctest::Approx(k3m));
    CHECK(turan_lower(negative_clique(3)).clamped == doctest::Approx(0.0));

    CHECK_FALSE(typical_lower(positive_cycle(4)).has_value());  // delta = 1 < ln(16)/2
    auto k8 = typical_lower(negative_clique(8));
    REQUIRE(k8.has_value());
    double expect = 3.5 - std::sqrt(std::log(32.0) * 7 / 2) - 3 - 1;
    CHECK(k8->raw == doctest::Approx(expect));
    CHECK(k8->clamped == doctest::Approx(0.0));
}

TEST_CASE("sphere packing upper bound") {
    SignedDigraph seven(7);  // positive triangle on {0,1,2}, four isolated vertices
    seven.add_arc(0, 1, Sign::positive);
    seven.add_arc(1, 2, Sign::positive);
    seven.add_arc(2, 0, Sign::positive);
    auto forms = sphere_packing_upper(seven);
    CHECK(forms.exact_form == doctest::Approx(4.0));
    CHECK(forms.entropy_form >= forms.exact_form - 1e-12);

    SignedDigraph fifteen(15);
    for (int i = 0; i < 7; ++i) fifteen.add_arc(i, (i + 1) % 7, Sign::positive);
    CHECK(sphere_packing_upper(fifteen).exact_form ==
          doctest::Approx(15 - std::log2(1 + 15 + 105 + 455.0)));

    // no non-negative cycle: the bound collapses to zero
    CHECK(sphere_packing_upper(SignedDigraph(4)).exact_form == doctest::Approx(0.0));
}

TEST_CASE("the distance threshold phi") {
    CHECK(phi(positive_clique(4)) == 2);
    CHECK(phi(negative_clique(4)) == 2);
    CHECK(phi(unsigned_clique(4)) == 1);
    CHECK(phi_raw(unsigned_clique(5)) == doctest::Approx(1.0));
    CHECK(phi_raw(positive_clique(5)) == doctest::Approx(2.0));
}

TEST_CASE("coding lower bound routes through the oracle") {
    auto k7 = positive_clique(7);
    CodeSizeOracle exact_oracle;
    auto exact = coding_lower(k7, 2, exact_oracle);
    CHECK(exact.exact);
    // 7 <= A_m(7,2,2) <= A_H(7,4,2) = 20
    CHECK(std::exp2(exact.value) >= 7.0 - 1e-9);
    CHECK(std::exp2(exact.value) <= 20.0 + 1e-9);

    // a cap too small for the full search but large enough for the
    // constant-weight fallback: the bound drops to log2 A_H(7,4,3,2) = log2 7
    CodeSizeOracle small_oracle(64);
    auto fallback = coding_lower(k7, 2, small_oracle);
    CHECK_FALSE(fallback.exact);
    CHECK(fallback.value == doctest::Approx(std::log2(7.0)));
    CHECK(fallback.value <= exact.value + 1e-12);
}

TEST_CASE("gilbert-style corollary") {
    auto forms = gilbert_corollary_lower(positive_clique(7));  // phi = 2
    CHECK(forms.exact_form == doctest::Approx(std::log2(35.0) - 6));
    CHECK(forms.entropy_form <= forms.exact_form + 1e-12);
}

TEST_CASE("classical code bounds") {
    auto b = classical_code_bounds(7, 3);
    CHECK(b.gilbert_lower == 5);
    CHECK(b.sphere_packing_upper == 16);
    CHECK(b.singleton_upper == 32);

    CHECK(classical_code_bounds(4, 2).varshamov_upper == 5);
    CHECK(classical_code_bounds(5, 2, 3).singleton_upper == 81);
    CHECK_THROWS(classical_code_bounds(4, 5));

    CodeSizeOracle oracle;
    auto borden = borden_upper(4, 2, oracle);
    CHECK(borden.value == doctest::Approx(4.0));
    CHECK(borden.exact);

    // A_H(7,3,3,2) >= C(7,3)/2^7 * A_H(7,3,2) = 35 * 16 / 128
    CHECK(bassalygo_elias_lower(7, 3, 16.0) == doctest::Approx(4.375));
}

TEST_CASE("entropy brackets contain the exact values") {
    for (int n = 2; n <= 30; ++n) {
        for (int k = 1; k < n; ++k) {
            auto b = binomial_bracket(n, k);
            CHECK(b.contains);
            CHECK(b.lower <= b.exact + 1e-12);
            CHECK(b.exact <= b.upper + 1e-12);
        }
        for (int k = 1; 2 * k <= n; ++k) CHECK(binomial_sum_bracket(n, k).contains);
        CHECK(central_binomial_bracket(n).contains);
    }
}

TEST_CASE("asymptotic rate bounds") {
    CHECK(mrrw(0.0) == doctest::Approx(1.0));
    CHECK(mrrw(0.5) == doctest::Approx(0.0));
    CHECK(mrrw(0.7) == doctest::Approx(0.0));

    double previous = 1.0;
    for (int i = 1; i <= 9; ++i) {
        double dbar = 0.05 * i;
        double value = mrrw(dbar);
        CHECK(value <= previous + 1e-9);  // non-increasing
        CHECK(value >= 1 - entropy(dbar) - 1e-9);  // above the achievable rate
        CHECK(value <= 1.0);
        previous = value;
    }
}

TEST_CASE("asymptotic curve table") {
    std::vector<double> grid{0.0, 0.25, 0.5, 0.76, 1.0};
    auto points = asymptotic_curves(grid);
    REQUIRE(points.size() == grid.size());
    for (const auto& p : points) {
        CHECK(p.lower_delta_half >= 0);
        CHECK(p.upper_mrrw <= 1.0);
        CHECK(p.upper_feedback_frontier == doctest::Approx(1 - p.dbar));
    }
    CHECK(points[0].upper_mrrw == doctest::Approx(1.0));
    CHECK(points[2].upper_mrrw == doctest::Approx(0.0));
    CHECK(points[1].lower_gilbert == doctest::Approx(0.0));   // below the crossover
    CHECK(points[3].lower_gilbert > 0.0);                     // above it

    std::string csv = asymptotic_curves_csv(points);
    CHECK(csv.rfind("dbar,lower_delta_half,lower_gilbert,upper_mrrw,upper_feedback_frontier",
                    0) == 0);
}

TEST_CASE("coding bounds sandwich the exact guessing number") {
    std::vector<SignedDigraph> instances{positive_clique(3), negative_clique(3),
                                         positive_cycle(4), unsigned_clique(3)};
    SignedDigraph mixed(3);
    mixed.add_arc(0, 1, Sign::positive);
    mixed.add_arc(1, 2, Sign::negative);
    mixed.add_arc(2, 0, Sign::negative);
    instances.push_back(mixed);

    for (const auto& d : instances)
        for (int s : {2, 3}) {
            double g = alpha(d, s).g;
            CodeSizeOracle oracle;
            CHECK(coding_lower(d, s, oracle).value <= g + 1e-9);
            CHECK(coding_upper(d, s, oracle).value >= g - 1e-9);
        }
}

TEST_CASE("the assembled bound report") {
    auto k3m = bound_report(negative_clique(3), 2);
    double g = std::log2(3.0);
    CHECK(k3m.certified_lower <= g + 1e-9);
    CHECK(k3m.certified_upper >= g - 1e-9);
    CHECK(k3m.certified_lower >= 1.0 - 1e-9);  // the packing bound alone gives 1

    auto c4 = bound_report(positive_cycle(4), 2);
    CHECK(c4.certified_lower == doctest::Approx(1.0));
    CHECK(c4.certified_upper == doctest::Approx(1.0));

    SignedDigraph acyclic(3);
    acyclic.add_arc(0, 1, Sign::positive);
    auto empty = bound_report(acyclic, 2);
    CHECK(empty.certified_lower == doctest::Approx(0.0));
    CHECK(empty.certified_upper == doctest::Approx(0.0));

    for (const auto& entry : k3m.entries) {
        CHECK_FALSE(entry.name.empty());
        CHECK_FALSE(entry.method.empty());
        if (entry.applicable) {
            CHECK(entry.clamped >= -1e-12);
            CHECK(entry.clamped <= 3 + 1e-12);
        }
    }
}
