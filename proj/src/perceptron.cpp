#include "tsetlin/perceptron.hpp"

#include <cmath>
#include <sstream>

#include "tsetlin/errors.hpp"

namespace tsetlin {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void check_inputs(const std::vector<std::vector<double>>& xs, const std::vector<int>& labels) {
    if (xs.empty()) throw InputError("perceptron: no samples");
    if (xs.size() != labels.size()) throw InputError("perceptron: sample/label count mismatch");
    const std::size_t d = xs.front().size();
    if (d == 0) throw InputError("perceptron: zero-dimensional samples");
    for (const auto& x : xs)
        if (x.size() != d) throw InputError("perceptron: ragged samples");
    for (int y : labels)
        if (y != -1 && y != 1) throw InputError("perceptron: labels must be -1 or +1");
}

}  // namespace

PerceptronFit perceptron_fit(const std::vector<std::vector<double>>& xs,
                             const std::vector<int>& labels, int max_epochs) {
    check_inputs(xs, labels);
    if (max_epochs < 1) throw InputError("perceptron: max_epochs must be >= 1");

    PerceptronFit fit;
    fit.state.weights.assign(xs.front().size(), 0.0);
    for (int epoch = 0; epoch < max_epochs; ++epoch) {
        bool clean = true;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const int predicted = dot(fit.state.weights, xs[i]) > 0.0 ? 1 : -1;
            if (predicted == labels[i]) continue;
            clean = false;
            ++fit.state.updates;
            for (std::size_t k = 0; k < xs[i].size(); ++k)
                fit.state.weights[k] += labels[i] * xs[i][k];
        }
        ++fit.epochs_run;
        if (clean) {
            fit.converged = true;
            break;
        }
    }
    return fit;
}

double convergence_bound(double radius, double gamma) {
    if (radius <= 0.0 || gamma <= 0.0)
        throw InputError("convergence bound needs positive radius and margin");
    const double ratio = radius / gamma;
    return ratio * ratio;
}

double convergence_bound_binary(int dims, double gamma) {
    if (dims < 1) throw InputError("convergence bound needs at least one dimension");
    return convergence_bound(std::sqrt(static_cast<double>(dims)), gamma);
}

std::string BoundReport::to_json() const {
    std::ostringstream out;
    out << "{\"updates\": " << updates << ", \"bound\": " << bound << ", \"radius\": " << radius
        << ", \"gamma\": " << gamma << ", \"converged\": " << (converged ? "true" : "false")
        << ", \"binary_input\": " << (binary_input ? "true" : "false")
        << ", \"dims\": " << dims << ", \"holds\": " << (holds() ? "true" : "false") << "}";
    return out.str();
}

BoundReport check_bound(const std::vector<std::vector<double>>& xs,
                        const std::vector<int>& labels, const std::vector<double>& w_star,
                        double gamma) {
    check_inputs(xs, labels);
    if (gamma <= 0.0) throw InputError("check_bound: gamma must be positive");
    if (w_star.size() != xs.front().size())
        throw InputError("check_bound: w_star dimension mismatch");

    const double norm = std::sqrt(dot(w_star, w_star));
    if (std::abs(norm - 1.0) > 1e-9)
        throw InputError("check_bound: w_star must have unit norm, got |w*| = " +
                         std::to_string(norm));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double m = labels[i] * dot(w_star, xs[i]);
        // A hair of slack so that margins computed in floating point and
        // passed back in do not fail their own certificate.
        if (m < gamma - 1e-9)
            throw InputError("check_bound: sample " + std::to_string(i) +
                             " has margin " + std::to_string(m) + " below gamma");
    }

    BoundReport report;
    report.gamma = gamma;
    report.dims = static_cast<int>(xs.front().size());
    report.binary_input = true;
    double r2 = 0.0;
    for (const auto& x : xs) {
        r2 = std::max(r2, dot(x, x));
        for (double v : x)
            if (v != 0.0 && v != 1.0) report.binary_input = false;
    }
    report.radius = std::sqrt(r2);
    report.bound = report.binary_input ? convergence_bound_binary(report.dims, gamma)
                                       : convergence_bound(report.radius, gamma);

    const PerceptronFit fit = perceptron_fit(xs, labels);
    report.updates = fit.state.updates;
    report.converged = fit.converged;
    return report;
}

std::vector<int> to_pm1(const std::vector<int>& zero_one) {
    std::vector<int> out;
    out.reserve(zero_one.size());
    for (int y : zero_one) {
        if (y != 0 && y != 1) throw InputError("to_pm1: labels must be 0 or 1");
        out.push_back(y == 1 ? 1 : -1);
    }
    return out;
}

}  // namespace tsetlin
