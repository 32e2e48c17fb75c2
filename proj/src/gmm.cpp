#include "lrc/gmm.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <numeric>

#include "lrc/error.hpp"

namespace lrc {

namespace {

struct Moments {
    double mean = 0.0;
    double var = 0.0;
};

Moments moments(std::span<const double> xs) {
    Moments m;
    if (xs.empty()) return m;
    m.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    for (double x : xs) m.var += (x - m.mean) * (x - m.mean);
    m.var /= static_cast<double>(xs.size());
    return m;
}

double log_normal_pdf(double x, double mu, double var) {
    const double z = x - mu;
    return -0.5 * (std::log(2.0 * std::numbers::pi * var) + z * z / var);
}

struct Params {
    double pi1, pi2, mu1, mu2, var1, var2;
};

// Fills resp with component-1 responsibilities and returns the log-likelihood.
double e_step(std::span<const double> xs, const Params& p, std::vector<double>& resp) {
    const double lp1 = std::log(p.pi1);
    const double lp2 = std::log(p.pi2);
    double ll = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double a = lp1 + log_normal_pdf(xs[i], p.mu1, p.var1);
        const double b = lp2 + log_normal_pdf(xs[i], p.mu2, p.var2);
        const double hi = std::max(a, b);
        const double lse = hi + std::log(std::exp(a - hi) + std::exp(b - hi));
        resp[i] = std::exp(a - lse);
        ll += lse;
    }
    return ll;
}

bool m_step(std::span<const double> xs, const std::vector<double>& resp, double floor, Params& p) {
    double n1 = 0.0, s1 = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        n1 += resp[i];
        s1 += resp[i] * xs[i];
        s2 += (1.0 - resp[i]) * xs[i];
    }
    const double n = static_cast<double>(xs.size());
    const double n2 = n - n1;
    if (!(n1 > 0.0) || !(n2 > 0.0)) return false;
    Params next;
    next.mu1 = s1 / n1;
    next.mu2 = s2 / n2;
    double v1 = 0.0, v2 = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        v1 += resp[i] * (xs[i] - next.mu1) * (xs[i] - next.mu1);
        v2 += (1.0 - resp[i]) * (xs[i] - next.mu2) * (xs[i] - next.mu2);
    }
    next.var1 = std::max(v1 / n1, floor);
    next.var2 = std::max(v2 / n2, floor);
    next.pi1 = n1 / n;
    next.pi2 = n2 / n;
    if (!(next.pi1 > 0.0 && next.pi1 < 1.0)) return false;
    p = next;
    return true;
}

}  // namespace

GmmFit fit_gmm2(std::span<const double> values, const GmmConfig& config) {
    if (values.size() < kMinGmmValues) fail(ErrorKind::precondition, "insufficient data");
    const Moments all = moments(values);
    if (!(all.var > 0.0)) fail(ErrorKind::precondition, "degenerate data");
    const double floor = config.variance_floor_scale * all.var;

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t half = sorted.size() / 2;
    const Moments lower = moments(std::span<const double>(sorted).first(half));
    const Moments upper = moments(std::span<const double>(sorted).subspan(half));
    Params p{0.5, 0.5, lower.mean, upper.mean, std::max(lower.var, floor), std::max(upper.var, floor)};

    GmmFit fit;
    fit.variance_floor = floor;
    std::vector<double> resp(values.size());
    double ll = e_step(values, p, resp);
    fit.log_likelihood_trace.push_back(ll);
    for (int it = 0; it < config.max_iter; ++it) {
        if (!m_step(values, resp, floor, p)) break;
        const double next = e_step(values, p, resp);
        assert(next >= ll - 1e-9 * (1.0 + std::abs(ll)));
        fit.log_likelihood_trace.push_back(next);
        fit.iterations = it + 1;
        const bool done = std::abs(next - ll) < config.tol * (1.0 + std::abs(next));
        ll = next;
        if (done) {
            fit.converged = true;
            break;
        }
    }

    if (p.mu1 > p.mu2) {
        std::swap(p.mu1, p.mu2);
        std::swap(p.var1, p.var2);
        std::swap(p.pi1, p.pi2);
    }
    fit.pi1 = p.pi1;
    fit.pi2 = 1.0 - p.pi1;
    fit.mu1 = p.mu1;
    fit.mu2 = p.mu2;
    fit.sigma1 = std::sqrt(p.var1);
    fit.sigma2 = std::sqrt(p.var2);
    fit.log_likelihood = ll;
    return fit;
}

double normal_pdf(double x, double mu, double sigma) {
    const double z = (x - mu) / sigma;
    return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * std::numbers::pi));
}

double mixture_density(const GmmFit& fit, double x) {
    return fit.pi1 * normal_pdf(x, fit.mu1, fit.sigma1) + fit.pi2 * normal_pdf(x, fit.mu2, fit.sigma2);
}

const char* to_string(ThresholdMode mode) {
    switch (mode) {
        case ThresholdMode::valley: return "valley";
        case ThresholdMode::degenerate_skip: return "degenerate_skip";
        case ThresholdMode::explicit_cutoff: return "explicit";
    }
    return "unknown";
}

ThresholdResult find_threshold(const GmmFit& fit) {
    ThresholdResult result;
    if (!(fit.mu2 > fit.mu1)) return result;
    const double collapse = fit.variance_floor * (1.0 + 1e-9);
    if (fit.variance_floor > 0.0 &&
        (fit.sigma1 * fit.sigma1 <= collapse || fit.sigma2 * fit.sigma2 <= collapse)) {
        result.grid_argmin = fit.mu1;
        return result;
    }

    const int cells = kThresholdGridPoints - 1;
    const double h = (fit.mu2 - fit.mu1) / cells;
    auto grid_x = [&](int i) { return i == cells ? fit.mu2 : fit.mu1 + h * i; };
    int best = 0;
    double best_density = mixture_density(fit, grid_x(0));
    for (int i = 1; i <= cells; ++i) {
        const double d = mixture_density(fit, grid_x(i));
        if (d < best_density) {
            best = i;
            best_density = d;
        }
    }
    result.grid_argmin = grid_x(best);
    if (best <= 1 || best >= cells - 1) return result;

    // Golden-section search over the two cells around the grid minimum.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = grid_x(best - 1);
    double b = grid_x(best + 1);
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = mixture_density(fit, c);
    double fd = mixture_density(fit, d);
    while (b - a > 1e-10) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = mixture_density(fit, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = mixture_density(fit, d);
        }
    }
    const double beta = 0.5 * (a + b);
    result.beta = beta;
    result.mode = ThresholdMode::valley;
    result.density_at_beta = mixture_density(fit, beta);
    return result;
}

}  // namespace lrc
