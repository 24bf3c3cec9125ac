#pragma once

#include "ratrec/types.hpp"

#include <Eigen/SVD>

#ifndef lapack_complex_float
#define lapack_complex_float std::complex<float>
#endif
#ifndef lapack_complex_double
#define lapack_complex_double std::complex<double>
#endif
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <vector>

namespace ratrec {

/// Eigenvalues of the barycentric pole pencil above this magnitude count as
/// the spurious infinite pair and are dropped.
inline constexpr double bary_infinite_cutoff = 1e13;

/// Barycentric rational interpolant sum_s w_s f_s/(z-t_s) / sum_s w_s/(z-t_s).
struct BarycentricModel {
    Eigen::VectorXcd support_points;
    Eigen::VectorXcd support_values;
    Eigen::VectorXcd weights; // unit 2-norm
    std::vector<double> residual_history; // max residual after each greedy step
};

inline std::complex<double> bary_eval(const BarycentricModel& model, std::complex<double> z)
{
    for (Index s = 0; s < model.support_points.size(); ++s)
        if (z == model.support_points(s))
            return model.support_values(s);
    std::complex<double> num(0), den(0);
    for (Index s = 0; s < model.support_points.size(); ++s) {
        const std::complex<double> c = model.weights(s) / (z - model.support_points(s));
        num += c * model.support_values(s);
        den += c;
    }
    return num / den;
}

/// Greedy AAA fit: repeatedly promote the point of largest residual to a
/// support point (lowest index wins ties) and recompute the weights as the
/// smallest right singular vector of the Loewner matrix over the remaining
/// points. Stops once the maximum residual drops to rel_tol * max|values| or
/// max_terms support points are placed.
inline BarycentricModel aaa_fit(const Eigen::VectorXcd& points, const Eigen::VectorXcd& values,
                                Index max_terms, double rel_tol)
{
    const Index count = points.size();
    if (values.size() != count)
        throw invalid_input("aaa_fit: point/value counts differ");
    if (max_terms < 2 || count < max_terms)
        throw invalid_input("aaa_fit: need K >= max_terms >= 2");
    if (rel_tol < 0)
        throw invalid_input("aaa_fit: negative tolerance");
    detail::require_pairwise_distinct<double>(points, "aaa_fit points");

    const double scale = values.cwiseAbs().maxCoeff();

    std::vector<char> is_support(static_cast<std::size_t>(count), 0);
    std::vector<Index> support;
    Eigen::VectorXd residual = (values.array() - values.mean()).abs();

    BarycentricModel model;
    for (Index m = 1; m <= max_terms; ++m) {
        Index pick = -1;
        double best = -1;
        for (Index i = 0; i < count; ++i) {
            if (!is_support[static_cast<std::size_t>(i)] && residual(i) > best) {
                best = residual(i);
                pick = i;
            }
        }
        is_support[static_cast<std::size_t>(pick)] = 1;
        support.push_back(pick);

        if (count - m < m)
            throw invalid_input("aaa_fit: over-saturated fit, fewer free points than weights");

        model.support_points.resize(m);
        model.support_values.resize(m);
        for (Index s = 0; s < m; ++s) {
            model.support_points(s) = points(support[static_cast<std::size_t>(s)]);
            model.support_values(s) = values(support[static_cast<std::size_t>(s)]);
        }

        Eigen::MatrixXcd loewner(count - m, m);
        Index row = 0;
        for (Index i = 0; i < count; ++i) {
            if (is_support[static_cast<std::size_t>(i)])
                continue;
            for (Index s = 0; s < m; ++s)
                loewner(row, s) = (values(i) - model.support_values(s)) /
                                  (points(i) - model.support_points(s));
            ++row;
        }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(loewner, Eigen::ComputeThinV);
        model.weights = svd.matrixV().col(m - 1); // unit norm by construction

        double max_resid = 0;
        for (Index i = 0; i < count; ++i) {
            if (is_support[static_cast<std::size_t>(i)]) {
                residual(i) = 0;
                continue;
            }
            residual(i) = std::abs(values(i) - bary_eval(model, points(i)));
            max_resid = std::max(max_resid, residual(i));
        }
        model.residual_history.push_back(max_resid);
        if (max_resid <= rel_tol * scale)
            break;
    }
    return model;
}

/// Poles of the barycentric denominator: the finite eigenvalues of the
/// (m+1) x (m+1) arrowhead pencil with first row (0, w), first column
/// (0, 1, ..., 1)^T and the support points on the diagonal, taken against
/// diag(0, 1, ..., 1). The two infinite eigenvalues are discarded.
inline Eigen::VectorXcd bary_poles(const BarycentricModel& model)
{
    const Index m = model.support_points.size();
    if (m < 2)
        throw invalid_input("bary_poles: need at least two support points");

    const Index n = m + 1;
    std::vector<std::complex<double>> a(static_cast<std::size_t>(n * n), 0.0);
    std::vector<std::complex<double>> b(static_cast<std::size_t>(n * n), 0.0);
    const auto at = [n](std::vector<std::complex<double>>& mat, Index i, Index j)
        -> std::complex<double>& { return mat[static_cast<std::size_t>(i + j * n)]; };
    for (Index s = 0; s < m; ++s) {
        at(a, 0, s + 1) = model.weights(s);
        at(a, s + 1, 0) = 1.0;
        at(a, s + 1, s + 1) = model.support_points(s);
        at(b, s + 1, s + 1) = 1.0;
    }

    std::vector<std::complex<double>> alpha(static_cast<std::size_t>(n));
    std::vector<std::complex<double>> beta(static_cast<std::size_t>(n));
    std::complex<double> dummy;
    const lapack_int info = LAPACKE_zggev(
        LAPACK_COL_MAJOR, 'N', 'N', static_cast<lapack_int>(n), a.data(),
        static_cast<lapack_int>(n), b.data(), static_cast<lapack_int>(n), alpha.data(),
        beta.data(), &dummy, 1, &dummy, 1);
    if (info != 0)
        throw numerical_error("bary_poles: generalized eigenvalue solver failed");

    std::vector<std::complex<double>> finite;
    for (Index i = 0; i < n; ++i) {
        if (beta[static_cast<std::size_t>(i)] == 0.0)
            continue;
        const std::complex<double> pole = alpha[static_cast<std::size_t>(i)] /
                                          beta[static_cast<std::size_t>(i)];
        if (std::abs(pole) > bary_infinite_cutoff)
            continue;
        finite.push_back(pole);
    }
    std::sort(finite.begin(), finite.end(), detail::lex_less<double>);
    Eigen::VectorXcd poles(static_cast<Index>(finite.size()));
    for (Index i = 0; i < poles.size(); ++i)
        poles(i) = finite[static_cast<std::size_t>(i)];
    return poles;
}

/// Residues at the extracted poles as numerator over denominator-derivative.
inline Eigen::VectorXcd bary_residues(const BarycentricModel& model,
                                      const Eigen::VectorXcd& poles)
{
    Eigen::VectorXcd residues(poles.size());
    for (Index j = 0; j < poles.size(); ++j) {
        std::complex<double> num(0), dden(0);
        for (Index s = 0; s < model.support_points.size(); ++s) {
            const std::complex<double> d = poles(j) - model.support_points(s);
            num += model.weights(s) * model.support_values(s) / d;
            dden -= model.weights(s) / (d * d);
        }
        residues(j) = num / dden;
    }
    return residues;
}

} // namespace ratrec
