#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tsetlin {

// Classic mistake-driven perceptron, kept around as the reference point for
// the clause-weight learning rule: the weighted machine's per-clause weight
// update is exactly this algorithm run on the clause-output vector.
struct PerceptronState {
    std::vector<double> weights;   // starts at the origin
    std::int64_t updates = 0;      // mistakes made so far (the k of the bound)
};

struct PerceptronFit {
    PerceptronState state;
    bool converged = false;  // a full pass made no mistake
    int epochs_run = 0;
};

// Labels must be -1 or +1. Prediction is sign(w . x) with sign(0) = -1; on
// every mistake w += y * x. Samples are visited in the given order, pass
// after pass, until a clean pass or max_epochs.
PerceptronFit perceptron_fit(const std::vector<std::vector<double>>& xs,
                             const std::vector<int>& labels, int max_epochs = 1000);

// Update-count ceiling for linearly separable data: (R / gamma)^2 with
// R = max |x|. For binary {0,1} inputs R <= sqrt(D), giving D / gamma^2.
double convergence_bound(double radius, double gamma);
double convergence_bound_binary(int dims, double gamma);

struct BoundReport {
    std::int64_t updates = 0;
    double bound = 0.0;
    double radius = 0.0;
    double gamma = 0.0;
    bool converged = false;
    bool binary_input = false;
    int dims = 0;
    bool holds() const { return converged && static_cast<double>(updates) <= bound; }
    std::string to_json() const;
};

// Validates the certificate first: w_star must have unit norm and separate
// every sample with margin at least gamma (throws InputError otherwise).
// Then runs the perceptron and reports the update count against the bound;
// the binary variant of the bound is used when every input coordinate is 0
// or 1.
BoundReport check_bound(const std::vector<std::vector<double>>& xs,
                        const std::vector<int>& labels, const std::vector<double>& w_star,
                        double gamma);

// {0,1} labels to the {-1,+1} the perceptron wants.
std::vector<int> to_pm1(const std::vector<int>& zero_one);

}  // namespace tsetlin
