#pragma once

#include <Eigen/Core>

#include <numbers>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace ratrec {

/// Thrown when an argument violates a documented precondition.
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a computation cannot be completed reliably
/// (rank-deficient systems, reciprocal overflow, solver failures).
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Index = Eigen::Index;

template <typename Real>
using complex_t = std::complex<Real>;

template <typename Real>
using cvector_t = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using cmatrix_t = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using rvector_t = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

template <typename Real>
using rmatrix_t = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

template <typename Real>
void require_pairwise_distinct(const cvector_t<Real>& v, const char* what)
{
    for (Index i = 0; i < v.size(); ++i)
        for (Index j = i + 1; j < v.size(); ++j)
            if (v(i) == v(j))
                throw invalid_input(std::string(what) + ": entries must be pairwise distinct");
}

template <typename Real>
void require_nonzero(const cvector_t<Real>& v, const char* what)
{
    for (Index i = 0; i < v.size(); ++i)
        if (v(i) == complex_t<Real>(0))
            throw invalid_input(std::string(what) + ": entries must be nonzero");
}

// z^k for integer k >= 0 by binary exponentiation.
template <typename Real>
complex_t<Real> pow_int(complex_t<Real> z, Index k)
{
    complex_t<Real> acc(1);
    while (k > 0) {
        if (k & 1)
            acc *= z;
        z *= z;
        k >>= 1;
    }
    return acc;
}

// Deterministic ordering for complex outputs: by real part, then imaginary part.
template <typename Real>
bool lex_less(const complex_t<Real>& a, const complex_t<Real>& b)
{
    if (a.real() != b.real())
        return a.real() < b.real();
    return a.imag() < b.imag();
}

} // namespace detail

/// Uniform samples f(0), f(1), ..., f(2N-1) of a sequence on the nonnegative
/// integers. The even length is what the Hankel pencil machinery expects.
template <typename Real = double>
struct SampleGrid {
    cvector_t<Real> values;

    explicit SampleGrid(cvector_t<Real> v) : values(std::move(v))
    {
        if (values.size() < 2 || values.size() % 2 != 0)
            throw invalid_input("SampleGrid: length must be even and >= 2");
    }

    Index size() const { return values.size(); }
    Index half() const { return values.size() / 2; } // the N in 2N samples
};

/// f(t) = sum_j coeffs[j] * nodes[j]^t with pairwise distinct nodes and
/// nonzero coefficients.
template <typename Real = double>
struct ExponentialSum {
    cvector_t<Real> nodes;
    cvector_t<Real> coeffs;

    ExponentialSum(cvector_t<Real> nodes_, cvector_t<Real> coeffs_)
        : nodes(std::move(nodes_)), coeffs(std::move(coeffs_))
    {
        if (nodes.size() == 0 || nodes.size() != coeffs.size())
            throw invalid_input("ExponentialSum: need matching nonempty node/coefficient lists");
        detail::require_pairwise_distinct<Real>(nodes, "ExponentialSum nodes");
        detail::require_nonzero<Real>(coeffs, "ExponentialSum coefficients");
    }

    Index order() const { return nodes.size(); }

    complex_t<Real> sample(Index t) const
    {
        complex_t<Real> acc(0);
        for (Index j = 0; j < nodes.size(); ++j)
            acc += coeffs(j) * detail::pow_int<Real>(nodes(j), t);
        return acc;
    }

    SampleGrid<Real> sample_grid(Index count) const
    {
        cvector_t<Real> f(count);
        cvector_t<Real> power = cvector_t<Real>::Ones(nodes.size());
        for (Index t = 0; t < count; ++t) {
            f(t) = (coeffs.array() * power.array()).sum();
            power.array() *= nodes.array();
        }
        return SampleGrid<Real>(std::move(f));
    }
};

/// r(z) = sum_j residues[j] / (z - poles[j]): a strictly proper rational
/// function with simple, pairwise distinct poles. The default-constructed
/// value is the zero function (no poles).
template <typename Real = double>
struct RationalFunction {
    cvector_t<Real> poles;
    cvector_t<Real> residues;

    RationalFunction() : poles(0), residues(0) {}

    RationalFunction(cvector_t<Real> poles_, cvector_t<Real> residues_)
        : poles(std::move(poles_)), residues(std::move(residues_))
    {
        if (poles.size() != residues.size())
            throw invalid_input("RationalFunction: pole/residue counts differ");
        detail::require_pairwise_distinct<Real>(poles, "RationalFunction poles");
        detail::require_nonzero<Real>(residues, "RationalFunction residues");
    }

    Index order() const { return poles.size(); }

    complex_t<Real> operator()(const complex_t<Real>& z) const
    {
        complex_t<Real> acc(0);
        for (Index j = 0; j < poles.size(); ++j) {
            if (z == poles(j))
                throw invalid_input("RationalFunction: evaluation at a pole");
            acc += residues(j) / (z - poles(j));
        }
        return acc;
    }
};

/// Two windows of Laurent coefficients of a rational function on the unit
/// circle: neg(i) holds the coefficient of index -(i+1) and pos(i) the one of
/// index +(i+1), for i = 0..2N-1. Index 0 is deliberately absent.
template <typename Real = double>
struct FourierWindow {
    Index half_order = 0; // N
    cvector_t<Real> neg;  // indices -1, -2, ..., -2N
    cvector_t<Real> pos;  // indices +1, +2, ..., +2N

    FourierWindow() : neg(0), pos(0) {}

    FourierWindow(Index n, cvector_t<Real> neg_, cvector_t<Real> pos_)
        : half_order(n), neg(std::move(neg_)), pos(std::move(pos_))
    {
        if (half_order < 1)
            throw invalid_input("FourierWindow: N must be positive");
        if (neg.size() != 2 * half_order || pos.size() != 2 * half_order)
            throw invalid_input("FourierWindow: each side must hold exactly 2N coefficients");
    }

    /// Coefficient of signed index k (k != 0, |k| <= 2N).
    complex_t<Real> at(Index k) const
    {
        if (k == 0 || k < -2 * half_order || k > 2 * half_order)
            throw invalid_input("FourierWindow: index out of window (or zero)");
        return k < 0 ? neg(-k - 1) : pos(k - 1);
    }
};

/// Function values r(t_n) on the uniform grid t_n = exp(2 pi i n / count),
/// n = 0..count-1, with count divisible by four (count = 4N).
template <typename Real = double>
struct UnitCircleSamples {
    cvector_t<Real> values;

    explicit UnitCircleSamples(cvector_t<Real> v) : values(std::move(v))
    {
        if (values.size() < 4 || values.size() % 4 != 0)
            throw invalid_input("UnitCircleSamples: count must be a positive multiple of 4");
    }

    Index count() const { return values.size(); }
    Index half_order() const { return values.size() / 4; } // N

    static complex_t<Real> grid_point(Index n, Index count)
    {
        const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
        return std::polar(Real(1), two_pi * Real(n) / Real(count));
    }
};

} // namespace ratrec
