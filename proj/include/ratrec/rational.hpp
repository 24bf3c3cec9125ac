#pragma once

#include "ratrec/exponential.hpp"
#include "ratrec/matching.hpp"
#include "ratrec/types.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

namespace ratrec {

/// A pole this close to the unit circle is rejected by window generation and
/// recovery: the contour-coefficient formulas assume none lies on the circle.
template <typename Real>
inline constexpr Real unit_circle_tol = Real(1e-12);

/// A pencil eigenvalue within this distance of the origin cannot be inverted
/// into an outside pole.
template <typename Real>
inline constexpr Real reciprocal_tol = Real(1e-14);

namespace detail {

template <typename Real>
void require_off_unit_circle(const RationalFunction<Real>& r)
{
    for (Index j = 0; j < r.order(); ++j)
        if (std::abs(std::abs(r.poles(j)) - Real(1)) < unit_circle_tol<Real>)
            throw invalid_input("rational recovery: pole on the unit circle");
}

} // namespace detail

/// Laurent coefficient windows of r on the unit circle, in closed form:
///   index -m (m >= 1): sum over poles inside the circle of  g_j z_j^(m-1)
///   index +k (k >= 1): minus sum over poles outside of      g_j z_j^-(k+1)
template <typename Real = double>
FourierWindow<Real> fourier_closed_form(const RationalFunction<Real>& r, Index n)
{
    if (n < 1)
        throw invalid_input("fourier_closed_form: N must be positive");
    detail::require_off_unit_circle(r);

    cvector_t<Real> neg = cvector_t<Real>::Zero(2 * n);
    cvector_t<Real> pos = cvector_t<Real>::Zero(2 * n);
    for (Index j = 0; j < r.order(); ++j) {
        const complex_t<Real> z = r.poles(j);
        const complex_t<Real> g = r.residues(j);
        if (std::abs(z) < Real(1)) {
            complex_t<Real> power(1); // z^(m-1)
            for (Index m = 1; m <= 2 * n; ++m) {
                neg(m - 1) += g * power;
                power *= z;
            }
        } else {
            const complex_t<Real> w = complex_t<Real>(1) / z;
            complex_t<Real> power = w * w; // z^-(k+1)
            for (Index k = 1; k <= 2 * n; ++k) {
                pos(k - 1) -= g * power;
                power *= w;
            }
        }
    }
    return FourierWindow<Real>(n, std::move(neg), std::move(pos));
}

/// Values of r on the 4N-point uniform unit-circle grid.
template <typename Real = double>
UnitCircleSamples<Real> unit_circle_samples(const RationalFunction<Real>& r, Index n)
{
    if (n < 1)
        throw invalid_input("unit_circle_samples: N must be positive");
    detail::require_off_unit_circle(r);
    const Index count = 4 * n;
    cvector_t<Real> values(count);
    for (Index i = 0; i < count; ++i)
        values(i) = r(UnitCircleSamples<Real>::grid_point(i, count));
    return UnitCircleSamples<Real>(std::move(values));
}

/// Coefficient windows from unit-circle values via the scaled DFT
///   R_j = (1/4N) sum_n r(t_n) e^(-2 pi i j n / 4N).
/// Bin j collects every Laurent index congruent to j mod 4N, so the window
/// entry of index k is read from bin (k mod 4N). The bin at 2N is shared by
/// the indices -2N and +2N, which alias on this grid; both edge entries are
/// filled from it. All entries therefore carry a geometric aliasing error.
template <typename Real = double>
FourierWindow<Real> fourier_from_samples(const UnitCircleSamples<Real>& samples)
{
    const Index count = samples.count(); // 4N, validated by the type
    const Index n = count / 4;

    cvector_t<Real> twiddle(count); // e^(-2 pi i t / count), exact modulo the grid
    const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
    for (Index t = 0; t < count; ++t)
        twiddle(t) = std::polar(Real(1), -two_pi * Real(t) / Real(count));

    cvector_t<Real> bins(count);
    for (Index j = 0; j < count; ++j) {
        complex_t<Real> acc(0);
        for (Index i = 0; i < count; ++i)
            acc += samples.values(i) * twiddle((j * i) % count);
        bins(j) = acc / Real(count);
    }

    cvector_t<Real> neg(2 * n), pos(2 * n);
    for (Index m = 1; m <= 2 * n; ++m)
        neg(m - 1) = bins(count - m);
    for (Index k = 1; k < 2 * n; ++k)
        pos(k - 1) = bins(k);
    pos(2 * n - 1) = bins(2 * n);
    return FourierWindow<Real>(n, std::move(neg), std::move(pos));
}

/// Poles inside the unit circle: ESPRIT on the sequence f(k) = coefficient of
/// index -(k+1), k = 0..2N-1. With exact data of a consistent order every
/// returned value has modulus below one.
template <typename Real = double>
cvector_t<Real> recover_poles_inside(const FourierWindow<Real>& fw, Index window,
                                     std::optional<Index> order = std::nullopt,
                                     Real rel_tol = default_rank_tol<Real>)
{
    return esprit<Real>(SampleGrid<Real>(fw.neg), window, order, rel_tol);
}

/// Poles outside the unit circle: ESPRIT on the sequence g(k) = coefficient
/// of index k+1 recovers the reciprocals 1/z, which are inverted here.
template <typename Real = double>
cvector_t<Real> recover_poles_outside(const FourierWindow<Real>& fw, Index window,
                                      std::optional<Index> order = std::nullopt,
                                      Real rel_tol = default_rank_tol<Real>)
{
    cvector_t<Real> eigs = esprit<Real>(SampleGrid<Real>(fw.pos), window, order, rel_tol);
    cvector_t<Real> poles(eigs.size());
    for (Index j = 0; j < eigs.size(); ++j) {
        if (std::abs(eigs(j)) <= reciprocal_tol<Real>)
            throw numerical_error("recover_poles_outside: pencil eigenvalue at the origin");
        poles(j) = complex_t<Real>(1) / eigs(j);
    }
    std::sort(poles.begin(), poles.end(), detail::lex_less<Real>);
    return poles;
}

/// Residues by two independent least-squares solves, one per side:
///   inside:  sum_n  c_n z_n^(k-1)        = coefficient(-k), k = 1..2N
///   outside: sum_n -c_n (1/z_n)^(k+1)    = coefficient(+k), k = 1..2N
template <typename Real = double>
std::pair<cvector_t<Real>, cvector_t<Real>>
recover_residues(const cvector_t<Real>& poles_in, const cvector_t<Real>& poles_out,
                 const FourierWindow<Real>& fw)
{
    if (2 * fw.half_order < std::max(poles_in.size(), poles_out.size()))
        throw invalid_input("recover_residues: window too short for the pole count");

    cvector_t<Real> res_in(0), res_out(0);
    if (poles_in.size() > 0)
        res_in = solve_coeffs<Real>(poles_in, SampleGrid<Real>(fw.neg));
    if (poles_out.size() > 0) {
        detail::require_nonzero<Real>(poles_out, "recover_residues outside poles");
        cvector_t<Real> recip = poles_out.cwiseInverse();
        // pos(k-1) = sum_n (-g_n / z_n^2) (1/z_n)^(k-1), so undo the prefactor.
        cvector_t<Real> c = solve_coeffs<Real>(recip, SampleGrid<Real>(fw.pos));
        res_out = -c.cwiseProduct(poles_out.cwiseProduct(poles_out));
    }
    return {std::move(res_in), std::move(res_out)};
}

/// Full pipeline: split pole recovery, then residues. The result lists inside
/// poles first, each side sorted by (real, imaginary) part.
template <typename Real = double>
RationalFunction<Real> recover(const FourierWindow<Real>& fw, Index window,
                               std::optional<Index> order_inside = std::nullopt,
                               std::optional<Index> order_outside = std::nullopt,
                               Real rel_tol = default_rank_tol<Real>)
{
    const cvector_t<Real> zin = recover_poles_inside(fw, window, order_inside, rel_tol);
    const cvector_t<Real> zout = recover_poles_outside(fw, window, order_outside, rel_tol);
    auto [gin, gout] = recover_residues(zin, zout, fw);

    if (zin.size() + zout.size() == 0)
        return RationalFunction<Real>();
    cvector_t<Real> poles(zin.size() + zout.size());
    cvector_t<Real> residues(poles.size());
    poles << zin, zout;
    residues << gin, gout;
    return RationalFunction<Real>(std::move(poles), std::move(residues));
}

/// Result of aligning an estimated rational function with a reference one.
template <typename Real = double>
struct PoleMatching {
    std::vector<Index> assignment; // truth index -> estimate index, -1 if unmatched
    rvector_t<Real> pole_errors;   // |z_j - z~_j| per truth pole, NaN if unmatched
    Real max_pole_error = 0;       // e(z) over matched pairs
    Real max_residue_error = 0;    // e(gamma) over matched pairs
    bool cardinality_mismatch = false;
};

/// Minimum-cost matching of estimated poles to reference poles under the
/// distance |z_j - z~_i|. With unequal counts the best partial matching is
/// reported alongside the mismatch flag; with no matchable pair the errors
/// are infinite.
template <typename Real = double>
PoleMatching<Real> match_poles(const RationalFunction<Real>& truth,
                               const RationalFunction<Real>& estimate)
{
    const Index n1 = truth.order();
    const Index n2 = estimate.order();
    const Index n = std::max(n1, n2);

    PoleMatching<Real> result;
    result.cardinality_mismatch = (n1 != n2);
    result.assignment.assign(static_cast<std::size_t>(n1), -1);
    result.pole_errors = rvector_t<Real>::Constant(n1, std::numeric_limits<Real>::quiet_NaN());
    if (n == 0)
        return result;

    // Zero-padding makes dummy pairs free, so the optimum is the cheapest
    // partial matching of size min(n1, n2).
    rmatrix_t<Real> cost = rmatrix_t<Real>::Zero(n, n);
    for (Index i = 0; i < n1; ++i)
        for (Index j = 0; j < n2; ++j)
            cost(i, j) = std::abs(truth.poles(i) - estimate.poles(j));

    const std::vector<Index> row_to_col = detail::min_cost_assignment(cost);

    bool any = false;
    Real ez = 0, eg = 0;
    for (Index i = 0; i < n1; ++i) {
        const Index j = row_to_col[static_cast<std::size_t>(i)];
        if (j >= n2)
            continue;
        any = true;
        result.assignment[static_cast<std::size_t>(i)] = j;
        result.pole_errors(i) = cost(i, j);
        ez = std::max(ez, cost(i, j));
        eg = std::max(eg, std::abs(truth.residues(i) - estimate.residues(j)));
    }
    if (!any && (n1 > 0 || n2 > 0)) {
        result.max_pole_error = std::numeric_limits<Real>::infinity();
        result.max_residue_error = std::numeric_limits<Real>::infinity();
    } else {
        result.max_pole_error = ez;
        result.max_residue_error = eg;
    }
    return result;
}

} // namespace ratrec
