#pragma once

#include "ratrec/types.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <optional>

namespace ratrec {

/// Relative singular-value threshold used for automatic order detection on
/// exact data. Noisy data should come with an explicit order instead.
template <typename Real>
inline constexpr Real default_rank_tol = Real(1e-10);

/// Vandermonde matrix V with V(k, j) = nodes[j]^k, k = 0..n_rows-1.
template <typename Real = double>
cmatrix_t<Real> vandermonde(const cvector_t<Real>& nodes, Index n_rows)
{
    if (nodes.size() == 0)
        throw invalid_input("vandermonde: empty node list");
    if (n_rows < 1)
        throw invalid_input("vandermonde: need at least one row");
    cmatrix_t<Real> v(n_rows, nodes.size());
    v.row(0).setOnes();
    for (Index k = 1; k < n_rows; ++k)
        v.row(k) = v.row(k - 1).cwiseProduct(nodes.transpose());
    return v;
}

/// Hankel matrix of size (2N-L) x (L+1) with entry (k, l) = f(k + l).
template <typename Real = double>
cmatrix_t<Real> hankel_full(const SampleGrid<Real>& samples, Index window)
{
    const Index n2 = samples.size();
    if (window < 1 || window > n2 - 1)
        throw invalid_input("hankel_full: window length out of range");
    cmatrix_t<Real> h(n2 - window, window + 1);
    for (Index k = 0; k < h.rows(); ++k)
        for (Index l = 0; l < h.cols(); ++l)
            h(k, l) = samples.values(k + l);
    return h;
}

/// Shifted Hankel window of size (2N-L) x L with entry (k, l) = f(k + l + s),
/// i.e. columns 1+s..L+s of hankel_full.
template <typename Real = double>
cmatrix_t<Real> hankel_window(const SampleGrid<Real>& samples, Index window, int shift)
{
    if (shift != 0 && shift != 1)
        throw invalid_input("hankel_window: shift must be 0 or 1");
    const Index n2 = samples.size();
    if (window < 1 || window > n2 - 1)
        throw invalid_input("hankel_window: window length out of range");
    cmatrix_t<Real> h(n2 - window, window);
    for (Index k = 0; k < h.rows(); ++k)
        for (Index l = 0; l < h.cols(); ++l)
            h(k, l) = samples.values(k + l + shift);
    return h;
}

/// Number of singular values above rel_tol times the largest one.
/// The input must be sorted in descending order; an empty or all-zero list
/// has rank zero.
template <typename Real = double>
Index numerical_rank(const rvector_t<Real>& singular_values, Real rel_tol)
{
    if (!(rel_tol > Real(0)))
        throw invalid_input("numerical_rank: tolerance must be positive");
    for (Index i = 0; i + 1 < singular_values.size(); ++i)
        if (singular_values(i) < singular_values(i + 1))
            throw invalid_input("numerical_rank: singular values must be sorted descending");
    if (singular_values.size() == 0 || !(singular_values(0) > Real(0)))
        return 0;
    const Real cutoff = rel_tol * singular_values(0);
    Index rank = 0;
    while (rank < singular_values.size() && singular_values(rank) > cutoff)
        ++rank;
    return rank;
}

/// ESPRIT node recovery. Builds the full Hankel matrix of the samples, takes
/// its SVD and returns the eigenvalues of pinv(W0^T) * W1^T, where W0/W1 are
/// the unshifted/shifted column windows of the leading M right singular rows.
///
/// `order` gives the number of nodes M; when absent it is detected as the
/// numerical rank of the Hankel matrix at rel_tol (exact data only). Returns
/// the nodes sorted by (real, imaginary) part; an automatic order of zero
/// yields an empty list.
template <typename Real = double>
cvector_t<Real> esprit(const SampleGrid<Real>& samples, Index window,
                       std::optional<Index> order = std::nullopt,
                       Real rel_tol = default_rank_tol<Real>)
{
    const Index n2 = samples.size();
    if (window < 1 || window > n2 - 1)
        throw invalid_input("esprit: window length out of range");
    if (order && *order < 0)
        throw invalid_input("esprit: negative order");

    const cmatrix_t<Real> h = hankel_full(samples, window);
    Eigen::JacobiSVD<cmatrix_t<Real>> svd(h, Eigen::ComputeThinV);

    const Index m = order ? *order : numerical_rank<Real>(svd.singularValues(), rel_tol);
    if (m == 0)
        return cvector_t<Real>(0);
    if (m > std::min(window, n2 - window))
        throw invalid_input("esprit: order exceeds what the window can resolve");

    // Rows of W in H = U D W are the adjoints of the right singular vectors.
    const cmatrix_t<Real> w = svd.matrixV().leftCols(m).adjoint(); // M x (L+1)
    const cmatrix_t<Real> a = w.leftCols(window).transpose();      // W(0)^T, L x M
    const cmatrix_t<Real> b = w.rightCols(window).transpose();     // W(1)^T, L x M

    Eigen::CompleteOrthogonalDecomposition<cmatrix_t<Real>> cod(a);
    if (cod.rank() < m)
        throw numerical_error("esprit: rank-deficient signal-space window");
    const cmatrix_t<Real> pencil = cod.solve(b); // pinv(W0^T) * W1^T, M x M

    Eigen::ComplexEigenSolver<cmatrix_t<Real>> eig(pencil, /*computeEigenvectors=*/false);
    if (eig.info() != Eigen::Success)
        throw numerical_error("esprit: eigenvalue iteration failed");

    cvector_t<Real> nodes = eig.eigenvalues();
    std::sort(nodes.begin(), nodes.end(), detail::lex_less<Real>);
    return nodes;
}

/// Least-squares coefficients of an exponential sum with known nodes:
/// minimizes || V_{2N,M}(nodes) c - f ||_2 through a rank-revealing
/// orthogonal factorization (never normal equations).
template <typename Real = double>
cvector_t<Real> solve_coeffs(const cvector_t<Real>& nodes, const SampleGrid<Real>& samples)
{
    if (nodes.size() == 0)
        throw invalid_input("solve_coeffs: empty node list");
    if (samples.size() < nodes.size())
        throw invalid_input("solve_coeffs: fewer samples than nodes");
    const cmatrix_t<Real> v = vandermonde<Real>(nodes, samples.size());
    Eigen::CompleteOrthogonalDecomposition<cmatrix_t<Real>> cod(v);
    if (cod.rank() < nodes.size())
        throw numerical_error("solve_coeffs: rank-deficient Vandermonde system (repeated nodes?)");
    return cod.solve(samples.values);
}

} // namespace ratrec
