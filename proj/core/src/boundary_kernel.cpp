// boundary_kernel.cpp — Mirror response functions and accelerated image sums

#include "mirrorcoh/boundary_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace mirrorcoh {

namespace {

// Maclaurin coefficients through zeta^6. Both functions are cosine transforms
// of polynomial weights on [-1,1]: (3/8)(1+u^2) and -(3/4)(1-u^2).
constexpr double kPar2 = -4.0 / 5.0;
constexpr double kPar4 = 6.0 / 35.0;
constexpr double kPar6 = -16.0 / 945.0;
constexpr double kPerp2 = 2.0 / 5.0;
constexpr double kPerp4 = -2.0 / 35.0;
constexpr double kPerp6 = 4.0 / 945.0;

constexpr int kFilterLevels = 6;
constexpr std::size_t kFirstCheckpoint = 64;
constexpr int kRichardsonLevels = 6;
// Closer than this to a multiple of pi, the tail phase 2d m advances slowly
// and the filter is applied with a lag of about half a period.
constexpr double kNearResonance = 0.25;
// The filter needs this many lags of runway below the first checkpoint.
constexpr std::size_t kRunwayPerLag = 32 * kFilterLevels;

struct CompensatedSum {
    double sum{0.0};
    double comp{0.0};

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + comp; }
};

// Partial sums whose error behaves like exp(+-i theta M) r(M) with r smooth.
// One pass of (S[M-L] + S[M+L] - 2 cos(theta L) S[M]) / (2 - 2 cos(theta L))
// keeps constants and turns r into O(L r'). For theta L = pi this is plain
// averaging of neighbours.
double frequency_filter(std::vector<double> window, double cos_theta, double denom) {
    while (window.size() > 1) {
        std::vector<double> next(window.size() - 2);
        for (std::size_t i = 0; i < next.size(); ++i) {
            next[i] = (window[i] + window[i + 2] - 2.0 * cos_theta * window[i + 1]) / denom;
        }
        window = std::move(next);
    }
    return window.front();
}

// Accelerated value from the stored terms[0..n]: the base partial sum up to
// n - 2KL plus the filtered short tail sums sampled every L terms, so the
// filter never sees the large common offset.
double filtered_partial_sum(const std::vector<double>& terms, std::size_t n, std::size_t lag,
                            double cos_theta, double denom) {
    const std::size_t width = 2 * kFilterLevels * lag;
    const std::size_t base_end = n - width;
    CompensatedSum base;
    for (std::size_t m = 0; m <= base_end; ++m) base.add(terms[m]);

    std::vector<double> window;
    window.reserve(2 * kFilterLevels + 1);
    window.push_back(0.0);
    CompensatedSum tail;
    for (std::size_t j = 1; j <= width; ++j) {
        tail.add(terms[base_end + j]);
        if (j % lag == 0) window.push_back(tail.value());
    }
    return base.value() + frequency_filter(std::move(window), cos_theta, denom);
}

// Richardson extrapolation in 1/N for checkpoints that double N.
class Richardson {
public:
    double push(double partial) {
        std::vector<double> row{partial};
        for (std::size_t k = 1; k <= prev_.size() && k <= kRichardsonLevels; ++k) {
            const double p = std::ldexp(1.0, static_cast<int>(k));
            row.push_back((p * row[k - 1] - prev_[k - 1]) / (p - 1.0));
        }
        prev_ = row;
        return row.back();
    }

private:
    std::vector<double> prev_;
};

double g_term(double x, const PolarizationWeights& pol) {
    return pol.in_plane() * f_parallel(x) - pol.alpha_z * f_perp(x);
}

double h_term(double x, const PolarizationWeights& pol) {
    return pol.in_plane() * f_parallel(x) + pol.alpha_z * f_perp(x);
}

}  // namespace

double f_parallel_closed(double zeta) {
    const double x = 2.0 * zeta;
    return 3.0 / (16.0 * zeta * zeta * zeta) * (x * std::cos(x) + (x * x - 1.0) * std::sin(x));
}

double f_perp_closed(double zeta) {
    const double x = 2.0 * zeta;
    return 3.0 / (8.0 * zeta * zeta * zeta) * (x * std::cos(x) - std::sin(x));
}

double f_parallel(double zeta) {
    const double z = std::abs(zeta);
    if (z < kSeriesSwitch) {
        const double z2 = z * z;
        return 1.0 + z2 * (kPar2 + z2 * (kPar4 + z2 * kPar6));
    }
    return f_parallel_closed(z);
}

double f_perp(double zeta) {
    const double z = std::abs(zeta);
    if (z < kSeriesSwitch) {
        const double z2 = z * z;
        return -1.0 + z2 * (kPerp2 + z2 * (kPerp4 + z2 * kPerp6));
    }
    return f_perp_closed(z);
}

double single_mirror_factor(double zeta0, const PolarizationWeights& pol) {
    return 1.0 - pol.in_plane() * f_parallel(zeta0) - pol.alpha_z * f_perp(zeta0);
}

ImageSumResult image_sums(double d, double zeta0, const PolarizationWeights& pol, double tol,
                          std::size_t max_terms) {
    const auto v = validate(DoubleMirror{d, zeta0}, pol);
    if (!v.ok()) throw std::invalid_argument(v.describe());
    if (!(tol > 0.0)) throw std::invalid_argument("tol: must be > 0");
    if (max_terms < 2 * kFilterLevels + 2) {
        throw std::invalid_argument("max_terms: too small for the accelerator");
    }

    // Lag L so that the tail phase 2 d L sits near pi (mod 2 pi). When even
    // that does not fit under the cap, 2d is effectively a multiple of 2 pi:
    // the tail no longer oscillates and Richardson extrapolation in 1/M is used.
    const double dist = std::abs(d - std::numbers::pi * std::round(d / std::numbers::pi));
    std::size_t lag = 1;
    bool resonant = false;
    if (dist < kNearResonance) {
        const double half_period = std::numbers::pi / (2.0 * dist);
        if (!(half_period * static_cast<double>(kRunwayPerLag) < static_cast<double>(max_terms))) {
            resonant = true;
        } else {
            lag = static_cast<std::size_t>(std::max(1.0, std::round(half_period)));
        }
    }
    const double phase = d * static_cast<double>(lag);
    const double cos_theta = std::cos(2.0 * phase);
    const double denom = 4.0 * std::sin(phase) * std::sin(phase);  // 2 - 2 cos(2 d L)

    // m = 0 holds the free-space term in G and the direct image in H; every
    // later entry pairs +m with -m.
    std::vector<double> g_terms{g_term(0.0, pol)};
    std::vector<double> h_terms{h_term(zeta0, pol)};
    CompensatedSum g_run, h_run;
    g_run.add(g_terms[0]);
    h_run.add(h_terms[0]);

    Richardson g_rich, h_rich;
    ImageSumResult result;
    bool have_previous = false;
    std::size_t checkpoint = kFirstCheckpoint;
    if (!resonant) {
        while (checkpoint < kRunwayPerLag * lag) checkpoint *= 2;
    }
    checkpoint = std::min(checkpoint, max_terms);

    for (std::size_t m = 1; m <= max_terms; ++m) {
        const double x = d * static_cast<double>(m);
        const double g = 2.0 * g_term(x, pol);
        const double h = h_term(zeta0 - x, pol) + h_term(zeta0 + x, pol);
        g_terms.push_back(g);
        h_terms.push_back(h);
        g_run.add(g);
        h_run.add(h);

        if (m != checkpoint) continue;

        double g_acc, h_acc;
        if (resonant) {
            g_acc = g_rich.push(g_run.value());
            h_acc = h_rich.push(h_run.value());
        } else {
            g_acc = filtered_partial_sum(g_terms, m, lag, cos_theta, denom);
            h_acc = filtered_partial_sum(h_terms, m, lag, cos_theta, denom);
        }

        if (have_previous) {
            result.est_error = std::max(std::abs(g_acc - result.g_sum), std::abs(h_acc - result.h_sum));
        } else {
            result.est_error = std::max(std::abs(g_acc), std::abs(h_acc));
        }
        result.g_sum = g_acc;
        result.h_sum = h_acc;
        result.terms_used = m;
        if (have_previous && result.est_error <= tol) {
            result.converged = true;
            return result;
        }
        have_previous = true;
        checkpoint = std::min(2 * checkpoint, max_terms);
    }
    return result;
}

GeometricFactor geometric_factor(const Geometry& geometry, const PolarizationWeights& pol,
                                 double tol) {
    const auto v = validate(geometry, pol);
    if (!v.ok()) throw std::invalid_argument(v.describe());

    if (std::holds_alternative<FreeSpace>(geometry)) return GeometricFactor::free_space();
    if (const auto* s = std::get_if<SingleMirror>(&geometry)) {
        return GeometricFactor::from_raw(single_mirror_factor(s->zeta0, pol));
    }
    const auto& dm = std::get<DoubleMirror>(geometry);
    const auto sums = image_sums(dm.d, dm.zeta0, pol, tol);
    if (!sums.converged) {
        throw ImageSumError("image sums did not converge for d = " + std::to_string(dm.d) +
                                ", zeta0 = " + std::to_string(dm.zeta0) + " (est_error " +
                                std::to_string(sums.est_error) + " after " +
                                std::to_string(sums.terms_used) + " terms)",
                            sums);
    }
    return GeometricFactor::from_raw(sums.difference());
}

}  // namespace mirrorcoh
