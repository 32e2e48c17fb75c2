#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lrc {

struct GmmConfig {
    int max_iter = 500;
    double tol = 1e-8;
    // Variances are floored at this fraction of the sample variance.
    double variance_floor_scale = 1e-6;
};

inline constexpr std::size_t kMinGmmValues = 10;

// Two-component 1-D Gaussian mixture; component 1 has the smaller mean.
struct GmmFit {
    double pi1 = 0.5;
    double pi2 = 0.5;
    double mu1 = 0.0;
    double mu2 = 0.0;
    double sigma1 = 1.0;
    double sigma2 = 1.0;
    double log_likelihood = 0.0;
    int iterations = 0;
    bool converged = false;
    double variance_floor = 0.0;
    // Log-likelihood of the initial parameters followed by one entry per EM
    // iteration.
    std::vector<double> log_likelihood_trace;
};

// EM with a deterministic half-split start: sort the values, component 1
// starts at the mean/std of the lower half, component 2 at the upper half.
// Throws ErrorKind::precondition on fewer than 10 values ("insufficient data")
// or zero variance ("degenerate data").
GmmFit fit_gmm2(std::span<const double> values, const GmmConfig& config = {});

double normal_pdf(double x, double mu, double sigma);
double mixture_density(const GmmFit& fit, double x);

// explicit_cutoff marks a user-supplied threshold that bypassed the fit.
enum class ThresholdMode { valley, degenerate_skip, explicit_cutoff };

const char* to_string(ThresholdMode mode);

struct ThresholdResult {
    std::optional<double> beta;
    ThresholdMode mode = ThresholdMode::degenerate_skip;
    double grid_argmin = 0.0;
    double density_at_beta = 0.0;
};

inline constexpr int kThresholdGridPoints = 2049;

// Location of the density minimum between the two means: 2049-point grid
// over [mu1, mu2], then golden-section refinement of the bracketing cells to
// 1e-10 width. A minimum within one cell of either mean means there is no
// interior valley and the result is degenerate_skip; so is a fit in which
// either component has collapsed onto the variance floor (a point mass, whose
// neighbouring density is a flat zero plateau with no unique minimum).
ThresholdResult find_threshold(const GmmFit& fit);

}  // namespace lrc
