#include <cmath>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "tsetlin/errors.hpp"
#include "tsetlin/perceptron.hpp"

using namespace tsetlin;

namespace {

// AND of two bits with a bias coordinate, the smallest separable problem
// with a nonzero threshold.
const std::vector<std::vector<double>> kAndAug = {
    {0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}};
const std::vector<int> kAndLabels = {-1, -1, -1, 1};

// Certificate for kAndAug: w = (1, 1, -1.5) normalized, margin 0.5 / |w|.
std::vector<double> and_w_star() {
    const double norm = std::sqrt(4.25);
    return {1.0 / norm, 1.0 / norm, -1.5 / norm};
}
const double kAndGamma = 0.5 / std::sqrt(4.25);

}  // namespace

TEST_CASE("updates happen only on mistakes and add y times x") {
    const std::vector<std::vector<double>> xs = {{1, 0}, {0, 1}};
    const std::vector<int> ys = {1, -1};
    const PerceptronFit fit = perceptron_fit(xs, ys);

    // First pass: sample 0 scores 0, reads as -1, update to (1, 0); sample 1
    // scores 0, reads as -1, correct. Second pass is clean.
    CHECK(fit.converged);
    CHECK(fit.epochs_run == 2);
    CHECK(fit.state.updates == 1);
    CHECK(fit.state.weights == std::vector<double>{1.0, 0.0});
}

TEST_CASE("a zero score counts as the negative class") {
    // From the origin every score is 0, so an all-negative problem is solved
    // before any update.
    const PerceptronFit fit = perceptron_fit({{1.0}, {0.5}}, {-1, -1});
    CHECK(fit.converged);
    CHECK(fit.state.updates == 0);
    CHECK(fit.epochs_run == 1);

    // A positive label on the zero vector can never be satisfied: the update
    // adds nothing, so the fit runs out of epochs still making mistakes.
    const PerceptronFit stuck = perceptron_fit({{0.0}}, {1}, 10);
    CHECK_FALSE(stuck.converged);
    CHECK(stuck.epochs_run == 10);
    CHECK(stuck.state.updates == 10);
}

TEST_CASE("the perceptron separates AND and its weights check out") {
    const PerceptronFit fit = perceptron_fit(kAndAug, kAndLabels);
    REQUIRE(fit.converged);
    for (std::size_t i = 0; i < kAndAug.size(); ++i) {
        double score = 0.0;
        for (std::size_t k = 0; k < 3; ++k) score += fit.state.weights[k] * kAndAug[i][k];
        CHECK((score > 0.0 ? 1 : -1) == kAndLabels[i]);
    }
}

TEST_CASE("XOR never converges no matter how long it runs") {
    const std::vector<std::vector<double>> xs = {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}};
    const std::vector<int> ys = {-1, 1, 1, -1};
    const PerceptronFit fit = perceptron_fit(xs, ys, 200);
    CHECK_FALSE(fit.converged);
    CHECK(fit.epochs_run == 200);
    CHECK(fit.state.updates >= 200);  // at least one mistake per pass
}

TEST_CASE("input validation on fit") {
    CHECK_THROWS_AS(perceptron_fit({}, {}), InputError);
    CHECK_THROWS_AS(perceptron_fit({{1.0}}, {1, -1}), InputError);
    CHECK_THROWS_AS(perceptron_fit({{1.0}, {1.0, 2.0}}, {1, -1}), InputError);
    CHECK_THROWS_AS(perceptron_fit({{1.0}}, {0}), InputError);
    CHECK_THROWS_AS(perceptron_fit({{1.0}}, {1}, 0), InputError);
    CHECK_THROWS_AS(perceptron_fit({{}}, {1}), InputError);
}

TEST_CASE("bound formulas") {
    CHECK(convergence_bound(2.0, 0.5) == doctest::Approx(16.0));
    CHECK(convergence_bound(1.0, 1.0) == doctest::Approx(1.0));
    CHECK(convergence_bound_binary(4, 0.5) == doctest::Approx(16.0));
    CHECK_THROWS_AS(convergence_bound(0.0, 0.5), InputError);
    CHECK_THROWS_AS(convergence_bound(1.0, 0.0), InputError);
    CHECK_THROWS_AS(convergence_bound_binary(0, 0.5), InputError);
}

TEST_CASE("the certified bound holds on AND") {
    const BoundReport report = check_bound(kAndAug, kAndLabels, and_w_star(), kAndGamma);
    CHECK(report.converged);
    CHECK(report.binary_input);
    CHECK(report.dims == 3);
    CHECK(report.radius == doctest::Approx(std::sqrt(3.0)));
    // Binary bound: dims / gamma^2 = 3 * 4.25 / 0.25.
    CHECK(report.bound == doctest::Approx(51.0));
    CHECK(report.updates <= 51);
    CHECK(report.holds());

    // The JSON view parses and carries the verdict.
    const auto j = nlohmann::json::parse(report.to_json());
    CHECK(j.at("holds").get<bool>());
    CHECK(j.at("updates").get<std::int64_t>() == report.updates);
    CHECK(j.at("bound").get<double>() == doctest::Approx(51.0));
}

TEST_CASE("non-binary inputs fall back to the radius bound") {
    // Scale every coordinate by two: margins double along with the radius,
    // so (R / gamma)^2 is unchanged at 51, while the binary formula would
    // have said 12.75. Seeing 51 with binary_input false pins the choice.
    std::vector<std::vector<double>> xs = kAndAug;
    for (auto& x : xs)
        for (double& v : x) v *= 2.0;
    const BoundReport report = check_bound(xs, kAndLabels, and_w_star(), 2.0 * kAndGamma);
    CHECK_FALSE(report.binary_input);
    CHECK(report.radius == doctest::Approx(2.0 * std::sqrt(3.0)));
    CHECK(report.bound == doctest::Approx(51.0));
    CHECK(report.holds());
}

TEST_CASE("check_bound rejects a bad certificate before running anything") {
    // Unnormalized direction.
    CHECK_THROWS_AS(check_bound(kAndAug, kAndLabels, {1.0, 1.0, -1.5}, kAndGamma), InputError);
    // Margin claim too strong for the data.
    CHECK_THROWS_AS(check_bound(kAndAug, kAndLabels, and_w_star(), 0.9), InputError);
    // Wrong dimension.
    CHECK_THROWS_AS(check_bound(kAndAug, kAndLabels, {1.0, 0.0}, kAndGamma), InputError);
    // Non-positive margin.
    CHECK_THROWS_AS(check_bound(kAndAug, kAndLabels, and_w_star(), 0.0), InputError);
    // w_star that points the wrong way fails the margin check.
    auto flipped = and_w_star();
    for (double& v : flipped) v = -v;
    CHECK_THROWS_AS(check_bound(kAndAug, kAndLabels, flipped, kAndGamma), InputError);
}

TEST_CASE("margins computed from the data pass their own certificate") {
    // The slack in the margin check exists exactly for this round trip: take
    // gamma to be the measured minimum margin and the certificate must pass.
    const auto w = and_w_star();
    double gamma = 1e300;
    for (std::size_t i = 0; i < kAndAug.size(); ++i) {
        double score = 0.0;
        for (std::size_t k = 0; k < 3; ++k) score += w[k] * kAndAug[i][k];
        gamma = std::min(gamma, kAndLabels[i] * score);
    }
    CHECK(gamma == doctest::Approx(kAndGamma));
    const BoundReport report = check_bound(kAndAug, kAndLabels, w, gamma);
    CHECK(report.holds());
}

TEST_CASE("label conversion to the plus-minus-one convention") {
    CHECK(to_pm1({0, 1, 1, 0}) == std::vector<int>{-1, 1, 1, -1});
    CHECK(to_pm1({}) == std::vector<int>{});
    CHECK_THROWS_AS(to_pm1({2}), InputError);
    CHECK_THROWS_AS(to_pm1({-1}), InputError);
}
