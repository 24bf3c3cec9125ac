#pragma once

#include "ratrec/aaa.hpp"
#include "ratrec/rational.hpp"
#include "ratrec/types.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <string>

namespace ratrec {

enum class NoiseTarget { coefficients, samples };

/// Multiplicative real Gaussian noise: every datum d becomes d * (1 + e) with
/// e ~ N(0, sigma^2), drawn from a seeded, fully specified generator.
struct NoiseSpec {
    double sigma = 0.0;
    int trials = 10;
    std::uint64_t seed = 0;
    NoiseTarget target = NoiseTarget::coefficients;

    void validate() const
    {
        if (sigma < 0)
            throw invalid_input("NoiseSpec: sigma must be nonnegative");
        if (trials < 1)
            throw invalid_input("NoiseSpec: need at least one trial");
    }
};

inline constexpr const char* noise_generator_name = "mt19937_64/box-muller";

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Per-trial substream so that trials are independent and order-free.
inline std::uint64_t substream_seed(std::uint64_t seed, int trial)
{
    return splitmix64(seed + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(trial) + 1));
}

/// Standard normal deviates from mt19937_64 via Box-Muller. Both pieces are
/// fully specified, so a seed pins the stream across platforms.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

    double operator()()
    {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    double uniform01() // (0, 1]: keeps the log argument positive
    {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1p-53;
    }

    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0;
};

template <typename Vec>
void apply_multiplicative_noise(Vec& v, double sigma, GaussianStream& g)
{
    for (Index i = 0; i < v.size(); ++i)
        v(i) *= (1.0 + sigma * g());
}

} // namespace detail

/// Noisy copy of a coefficient window. The negative and positive windows
/// receive independent draws (negative side first).
inline FourierWindow<double> perturb(const FourierWindow<double>& fw, double sigma,
                                     detail::GaussianStream& stream)
{
    FourierWindow<double> copy = fw;
    detail::apply_multiplicative_noise(copy.neg, sigma, stream);
    detail::apply_multiplicative_noise(copy.pos, sigma, stream);
    return copy;
}

inline UnitCircleSamples<double> perturb(const UnitCircleSamples<double>& samples, double sigma,
                                         detail::GaussianStream& stream)
{
    UnitCircleSamples<double> copy = samples;
    detail::apply_multiplicative_noise(copy.values, sigma, stream);
    return copy;
}

/// Single-shot variants seeded like trial 0 of an experiment.
inline FourierWindow<double> perturb(const FourierWindow<double>& fw, const NoiseSpec& spec)
{
    spec.validate();
    detail::GaussianStream stream(detail::substream_seed(spec.seed, 0));
    return perturb(fw, spec.sigma, stream);
}

inline UnitCircleSamples<double> perturb(const UnitCircleSamples<double>& samples,
                                         const NoiseSpec& spec)
{
    spec.validate();
    detail::GaussianStream stream(detail::substream_seed(spec.seed, 0));
    return perturb(samples, spec.sigma, stream);
}

/// Per-pole reconstruction-error statistics over the successful trials of a
/// Monte-Carlo run, plus the configuration that produced them.
struct ExperimentReport {
    // configuration echo
    Index n = 0, l = 0, m1 = 0, m2 = 0;
    double sigma = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    NoiseTarget target = NoiseTarget::coefficients;
    std::string generator = noise_generator_name;
    std::string method = "hankel-pencil";

    Eigen::VectorXcd poles;          // reference poles, row labels
    Eigen::MatrixXd pole_errors;     // trials x M, NaN rows for failed trials
    Eigen::VectorXd residue_errors;  // per-trial e(gamma), NaN when failed
    int failed_trials = 0;

    double pole_stat_min(Index j) const { return stat(pole_errors.col(j), Stat::min); }
    double pole_stat_max(Index j) const { return stat(pole_errors.col(j), Stat::max); }
    double pole_stat_avg(Index j) const { return stat(pole_errors.col(j), Stat::avg); }
    double egamma_min() const { return stat(residue_errors, Stat::min); }
    double egamma_max() const { return stat(residue_errors, Stat::max); }
    double egamma_avg() const { return stat(residue_errors, Stat::avg); }

private:
    enum class Stat { min, max, avg };

    template <typename Col>
    static double stat(const Col& values, Stat which)
    {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo, sum = 0;
        Index used = 0;
        for (Index t = 0; t < values.size(); ++t) {
            const double e = values(t);
            if (std::isnan(e))
                continue;
            lo = std::min(lo, e);
            hi = std::max(hi, e);
            sum += e;
            ++used;
        }
        if (used == 0)
            return std::numeric_limits<double>::quiet_NaN();
        switch (which) {
        case Stat::min: return lo;
        case Stat::max: return hi;
        default: return sum / static_cast<double>(used);
        }
    }
};

namespace detail {

inline void split_order(const RationalFunction<double>& r, Index& m1, Index& m2)
{
    m1 = m2 = 0;
    for (Index j = 0; j < r.order(); ++j)
        (std::abs(r.poles(j)) < 1.0 ? m1 : m2) += 1;
}

inline void record_trial(ExperimentReport& report, int trial,
                         const RationalFunction<double>& truth,
                         const RationalFunction<double>& estimate)
{
    const PoleMatching<double> match = match_poles(truth, estimate);
    for (Index j = 0; j < truth.order(); ++j)
        report.pole_errors(trial, j) = match.pole_errors(j);
    report.residue_errors(trial) = match.max_residue_error;
}

inline void record_failure(ExperimentReport& report, int trial)
{
    report.pole_errors.row(trial).setConstant(std::numeric_limits<double>::quiet_NaN());
    report.residue_errors(trial) = std::numeric_limits<double>::quiet_NaN();
    ++report.failed_trials;
}

inline ExperimentReport make_report(const RationalFunction<double>& r, Index n, Index l,
                                    const NoiseSpec& spec)
{
    ExperimentReport report;
    report.n = n;
    report.l = l;
    detail::split_order(r, report.m1, report.m2);
    report.sigma = spec.sigma;
    report.trials = spec.trials;
    report.seed = spec.seed;
    report.target = spec.target;
    report.poles = r.poles;
    report.pole_errors.setZero(spec.trials, r.order());
    report.residue_errors.setZero(spec.trials);
    return report;
}

} // namespace detail

/// Monte-Carlo recovery experiment: perturb, recover with the known split
/// orders, match against the reference, and aggregate. A trial whose recovery
/// throws is counted as failed, never dropped silently.
inline ExperimentReport run_experiment(const RationalFunction<double>& r, Index n, Index l,
                                       const NoiseSpec& spec)
{
    spec.validate();
    if (n < 1 || l < 1)
        throw invalid_input("run_experiment: N and L must be positive");

    ExperimentReport report = detail::make_report(r, n, l, spec);

    const FourierWindow<double> clean_fw = fourier_closed_form(r, n);
    UnitCircleSamples<double> clean_samples(Eigen::VectorXcd::Zero(4));
    if (spec.target == NoiseTarget::samples)
        clean_samples = unit_circle_samples(r, n);

    for (int trial = 0; trial < spec.trials; ++trial) {
        detail::GaussianStream stream(detail::substream_seed(spec.seed, trial));
        try {
            FourierWindow<double> fw =
                spec.target == NoiseTarget::coefficients
                    ? perturb(clean_fw, spec.sigma, stream)
                    : fourier_from_samples(perturb(clean_samples, spec.sigma, stream));
            const RationalFunction<double> estimate = recover(fw, l, report.m1, report.m2);
            detail::record_trial(report, trial, r, estimate);
        } catch (const std::exception&) {
            detail::record_failure(report, trial);
        }
    }
    return report;
}

/// Paired Hankel-pencil vs AAA runs on identical noisy unit-circle samples.
struct AaaComparison {
    ExperimentReport hankel;
    ExperimentReport aaa;
};

inline AaaComparison compare_aaa(const RationalFunction<double>& r, Index n, Index l,
                                 const NoiseSpec& spec)
{
    spec.validate();
    if (n < 1 || l < 1)
        throw invalid_input("compare_aaa: N and L must be positive");

    NoiseSpec sample_spec = spec;
    sample_spec.target = NoiseTarget::samples;

    AaaComparison cmp;
    cmp.hankel = detail::make_report(r, n, l, sample_spec);
    cmp.aaa = detail::make_report(r, n, l, sample_spec);
    cmp.aaa.method = "aaa";

    const UnitCircleSamples<double> clean = unit_circle_samples(r, n);
    const Index count = clean.count();
    Eigen::VectorXcd grid(count);
    for (Index i = 0; i < count; ++i)
        grid(i) = UnitCircleSamples<double>::grid_point(i, count);

    for (int trial = 0; trial < spec.trials; ++trial) {
        detail::GaussianStream stream(detail::substream_seed(spec.seed, trial));
        const UnitCircleSamples<double> noisy = perturb(clean, spec.sigma, stream);

        try {
            const FourierWindow<double> fw = fourier_from_samples(noisy);
            const RationalFunction<double> estimate = recover(fw, l, cmp.hankel.m1, cmp.hankel.m2);
            detail::record_trial(cmp.hankel, trial, r, estimate);
        } catch (const std::exception&) {
            detail::record_failure(cmp.hankel, trial);
        }

        try {
            const BarycentricModel model =
                aaa_fit(grid, noisy.values, r.order() + 1, /*rel_tol=*/0.0);
            const Eigen::VectorXcd poles = bary_poles(model);
            const Eigen::VectorXcd residues = bary_residues(model, poles);
            detail::record_trial(cmp.aaa, trial, r, RationalFunction<double>(poles, residues));
        } catch (const std::exception&) {
            detail::record_failure(cmp.aaa, trial);
        }
    }
    return cmp;
}

namespace detail {

inline std::string format17(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline void csv_config_rows(const ExperimentReport& r, std::ostream& out)
{
    out << ",,config_method," << r.method << "\n";
    out << ",,config_n," << r.n << "\n";
    out << ",,config_l," << r.l << "\n";
    out << ",,config_m1," << r.m1 << "\n";
    out << ",,config_m2," << r.m2 << "\n";
    out << ",,config_sigma," << format17(r.sigma) << "\n";
    out << ",,config_trials," << r.trials << "\n";
    out << ",,config_seed," << r.seed << "\n";
    out << ",,config_target,"
        << (r.target == NoiseTarget::coefficients ? "coefficients" : "samples") << "\n";
    out << ",,config_generator," << r.generator << "\n";
}

inline void csv_stat_rows(const ExperimentReport& r, std::ostream& out, const std::string& prefix)
{
    for (Index j = 0; j < r.poles.size(); ++j) {
        const std::string re = format17(r.poles(j).real());
        const std::string im = format17(r.poles(j).imag());
        out << re << "," << im << "," << prefix << "min," << format17(r.pole_stat_min(j)) << "\n";
        out << re << "," << im << "," << prefix << "max," << format17(r.pole_stat_max(j)) << "\n";
        out << re << "," << im << "," << prefix << "avg," << format17(r.pole_stat_avg(j)) << "\n";
    }
    out << ",," << prefix << "e_gamma_min," << format17(r.egamma_min()) << "\n";
    out << ",," << prefix << "e_gamma_max," << format17(r.egamma_max()) << "\n";
    out << ",," << prefix << "e_gamma_avg," << format17(r.egamma_avg()) << "\n";
    out << ",," << prefix << "failed_trials," << r.failed_trials << "\n";
}

} // namespace detail

/// CSV emission: a header row, then one row per (pole, statistic) with
/// columns pole_re, pole_im, stat, value. Configuration and aggregate rows
/// leave the pole columns empty. LF line endings, 17 significant digits.
inline void write_csv(const ExperimentReport& report, std::ostream& out)
{
    out << "pole_re,pole_im,stat,value\n";
    detail::csv_config_rows(report, out);
    detail::csv_stat_rows(report, out, "");
}

inline void write_csv(const AaaComparison& cmp, std::ostream& out)
{
    out << "pole_re,pole_im,stat,value\n";
    detail::csv_config_rows(cmp.hankel, out);
    detail::csv_stat_rows(cmp.hankel, out, "hankel_");
    detail::csv_stat_rows(cmp.aaa, out, "aaa_");
}

} // namespace ratrec
