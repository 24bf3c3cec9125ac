#pragma once

#include "ratrec/exponential.hpp"
#include "ratrec/rational.hpp"
#include "ratrec/types.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>
#include <vector>

namespace ratrec {

enum class PencilSide { generic, inside, outside };

/// A square Hankel pencil in factored form: H(s) = V(nodes) * diag(coeffs .*
/// nodes^s) * V(nodes)^T. `nodes` are the pencil eigenvalues and `coeffs` the
/// effective diagonal. For a pencil describing poles outside the unit circle
/// the eigenvalues are the reciprocals 1/z of the poles and the effective
/// diagonal is -g/z^2, which the factory below sets up.
template <typename Real = double>
struct PencilSpec {
    PencilSide side = PencilSide::generic;
    cvector_t<Real> nodes;
    cvector_t<Real> coeffs;

    static PencilSpec generic(cvector_t<Real> nodes, cvector_t<Real> coeffs)
    {
        return PencilSpec(PencilSide::generic, std::move(nodes), std::move(coeffs));
    }

    static PencilSpec for_inside_poles(cvector_t<Real> poles, cvector_t<Real> residues)
    {
        return PencilSpec(PencilSide::inside, std::move(poles), std::move(residues));
    }

    static PencilSpec for_outside_poles(const cvector_t<Real>& poles,
                                        const cvector_t<Real>& residues)
    {
        detail::require_nonzero<Real>(poles, "outside poles");
        cvector_t<Real> recip = poles.cwiseInverse();
        cvector_t<Real> eff = -residues.cwiseProduct(recip.cwiseProduct(recip));
        return PencilSpec(PencilSide::outside, std::move(recip), std::move(eff));
    }

    Index order() const { return nodes.size(); }

    /// The poles the rows of a report refer to. For the outside pencil the
    /// eigenvalues are reciprocals, but sensitivities are attributed to the
    /// pole itself.
    cvector_t<Real> poles() const
    {
        return side == PencilSide::outside ? cvector_t<Real>(nodes.cwiseInverse()) : nodes;
    }

private:
    PencilSpec(PencilSide s, cvector_t<Real> n, cvector_t<Real> c)
        : side(s), nodes(std::move(n)), coeffs(std::move(c))
    {
        if (nodes.size() != coeffs.size())
            throw invalid_input("PencilSpec: node/coefficient counts differ");
        detail::require_pairwise_distinct<Real>(nodes, "PencilSpec nodes");
        detail::require_nonzero<Real>(coeffs, "PencilSpec coefficients");
    }
};

/// Rebuild H(s) from the factorization, s in {0, 1}.
template <typename Real = double>
cmatrix_t<Real> pencil_hankel(const PencilSpec<Real>& spec, int shift)
{
    if (shift != 0 && shift != 1)
        throw invalid_input("pencil_hankel: shift must be 0 or 1");
    const Index m = spec.order();
    const cmatrix_t<Real> v = vandermonde<Real>(spec.nodes, m);
    cvector_t<Real> diag = spec.coeffs;
    if (shift == 1)
        diag = diag.cwiseProduct(spec.nodes);
    return v * diag.asDiagonal() * v.transpose();
}

/// Left/right eigenvectors of the factored pencil: column j solves
/// V(nodes)^T x = e_j. This normalization is assumed by every sensitivity
/// formula below; do not rescale the columns.
template <typename Real = double>
cmatrix_t<Real> pencil_eigvectors(const cvector_t<Real>& nodes)
{
    if (nodes.size() == 0)
        throw invalid_input("pencil_eigvectors: empty node list");
    detail::require_pairwise_distinct<Real>(nodes, "pencil_eigvectors nodes");
    const Index m = nodes.size();
    const cmatrix_t<Real> vt = vandermonde<Real>(nodes, m).transpose();
    Eigen::ColPivHouseholderQR<cmatrix_t<Real>> qr(vt);
    if (qr.rank() < m)
        throw numerical_error("pencil_eigvectors: singular Vandermonde transpose");
    return qr.solve(cmatrix_t<Real>::Identity(m, m));
}

/// First-order response of each pencil eigenvalue to norm-bounded arbitrary
/// perturbations of (H(0), H(1)), with the condition-number bounds that
/// accompany it.
template <typename Real = double>
struct UnstructuredReport {
    rvector_t<Real> rho;   // exact sensitivities
    rvector_t<Real> zeta;  // per-eigenvalue bound prefactors
    rvector_t<Real> bound; // zeta * kappa(V)^2, dominates rho
    Real kappa_v = 0;      // spectral condition number of V(nodes)
    Real l2_rho = 0, l2_bound = 0;
    Real l1_rho = 0, l1_bound = 0;
};

template <typename Real = double>
UnstructuredReport<Real> unstructured_sensitivities(const PencilSpec<Real>& spec)
{
    UnstructuredReport<Real> report;
    const Index m = spec.order();
    report.rho = rvector_t<Real>::Zero(m);
    report.zeta = rvector_t<Real>::Zero(m);
    report.bound = rvector_t<Real>::Zero(m);
    if (m == 0)
        return report;

    const cmatrix_t<Real> v = vandermonde<Real>(spec.nodes, m);
    const cmatrix_t<Real> p = pencil_eigvectors<Real>(spec.nodes); // (V^T)^-1

    const auto spectral_norm = [](const cmatrix_t<Real>& x) {
        return Eigen::JacobiSVD<cmatrix_t<Real>>(x).singularValues()(0);
    };
    const Real h0 = spectral_norm(pencil_hankel(spec, 0));
    const Real h1 = spectral_norm(pencil_hankel(spec, 1));

    const Real max_c = spec.coeffs.cwiseAbs().maxCoeff();
    const Real max_cz = spec.coeffs.cwiseProduct(spec.nodes).cwiseAbs().maxCoeff();

    for (Index j = 0; j < m; ++j) {
        const Real abs_c = std::abs(spec.coeffs(j));
        const Real abs_z = std::abs(spec.nodes(j));
        report.rho(j) = p.col(j).squaredNorm() / abs_c * (abs_z * h0 + h1);
        report.zeta(j) = (abs_z * max_c + max_cz) / abs_c;
    }

    Eigen::JacobiSVD<cmatrix_t<Real>> svd_v(v);
    const Real sigma_min = svd_v.singularValues()(m - 1);
    if (!(sigma_min > Real(0)))
        throw numerical_error("unstructured_sensitivities: singular Vandermonde matrix");
    report.kappa_v = svd_v.singularValues()(0) / sigma_min;

    const Real kappa_sq = report.kappa_v * report.kappa_v;
    report.bound = report.zeta * kappa_sq;
    report.l2_rho = report.rho.norm();
    report.l2_bound = report.zeta.norm() * kappa_sq;
    report.l1_rho = report.rho.template lpNorm<1>();
    // ||V^-1||_F equals ||(V^T)^-1||_F, which is already at hand.
    const Real v2 = svd_v.singularValues()(0);
    report.l1_bound = report.zeta.maxCoeff() * v2 * v2 * p.squaredNorm();
    return report;
}

/// First-order response of each pencil eigenvalue to Hankel-structured
/// perturbations, one column per perturbed measurement.
template <typename Real = double>
struct StructuredReport {
    cmatrix_t<Real> response;             // S, M x 2M: eigenvalue shift = S * delta
    rmatrix_t<Real> eta_per_measurement;  // |S|
    rvector_t<Real> eta;                  // row 2-norms of S
};

template <typename Real = double>
StructuredReport<Real> structured_sensitivities(const PencilSpec<Real>& spec)
{
    StructuredReport<Real> report;
    const Index m = spec.order();
    report.response = cmatrix_t<Real>::Zero(m, 2 * m);
    report.eta_per_measurement = rmatrix_t<Real>::Zero(m, 2 * m);
    report.eta = rvector_t<Real>::Zero(m);
    if (m == 0)
        return report;

    const cmatrix_t<Real> p = pencil_eigvectors<Real>(spec.nodes);
    for (Index j = 0; j < m; ++j) {
        const auto pj = p.col(j); // left and right eigenvector coincide
        const complex_t<Real> lambda = spec.nodes(j);
        for (Index mm = 1; mm <= 2 * m; ++mm) {
            complex_t<Real> shifted(0);   // p_k q_(m-k), the H(1) ridge
            complex_t<Real> unshifted(0); // p_k q_(m-k+1), the H(0) ridge
            for (Index k = std::max<Index>(1, mm - m); k <= std::min(m, mm - 1); ++k)
                shifted += pj(k - 1) * pj(mm - k - 1);
            for (Index k = std::max<Index>(1, mm - m + 1); k <= std::min(m, mm); ++k)
                unshifted += pj(k - 1) * pj(mm - k);
            report.response(j, mm - 1) = (shifted - lambda * unshifted) / spec.coeffs(j);
        }
    }
    report.eta_per_measurement = report.response.cwiseAbs();
    report.eta = report.eta_per_measurement.rowwise().norm();
    return report;
}

/// Predicted eigenvalue shifts S * delta for a Hankel perturbation vector
/// delta = (d_0, ..., d_(2M-1)) applied as H(s) += (d_(k+l+s)).
template <typename Real = double>
cvector_t<Real> first_order_prediction(const StructuredReport<Real>& report,
                                       const cvector_t<Real>& delta)
{
    if (delta.size() != report.response.cols())
        throw invalid_input("first_order_prediction: perturbation length must be 2M");
    return report.response * delta;
}

/// Everything known about one side of the pole split.
template <typename Real = double>
struct SideSensitivity {
    cvector_t<Real> poles;                 // labeled by the pole itself (not 1/z)
    std::vector<int> measurement_indices;  // signed coefficient index per column of S
    UnstructuredReport<Real> unstructured;
    StructuredReport<Real> structured;
};

template <typename Real = double>
struct SensitivityReport {
    SideSensitivity<Real> inside;
    SideSensitivity<Real> outside;
};

/// Sensitivity analysis of every pole of r under the split-pencil recovery:
/// the inside pencil is perturbed through the coefficients of index -m, the
/// outside pencil through those of index +m. Outside rows are attributed to
/// the pole z even though the pencil works on 1/z.
template <typename Real = double>
SensitivityReport<Real> rational_sensitivity_report(const RationalFunction<Real>& r)
{
    detail::require_off_unit_circle(r);

    std::vector<Index> in, out;
    for (Index j = 0; j < r.order(); ++j)
        (std::abs(r.poles(j)) < Real(1) ? in : out).push_back(j);

    const auto gather = [&](const std::vector<Index>& idx) {
        cvector_t<Real> z(static_cast<Index>(idx.size())), g(static_cast<Index>(idx.size()));
        for (Index i = 0; i < z.size(); ++i) {
            z(i) = r.poles(idx[static_cast<std::size_t>(i)]);
            g(i) = r.residues(idx[static_cast<std::size_t>(i)]);
        }
        return std::make_pair(z, g);
    };

    SensitivityReport<Real> report;

    const auto [zin, gin] = gather(in);
    report.inside.poles = zin;
    if (zin.size() > 0) {
        const auto spec = PencilSpec<Real>::for_inside_poles(zin, gin);
        report.inside.unstructured = unstructured_sensitivities(spec);
        report.inside.structured = structured_sensitivities(spec);
    }
    for (Index mm = 1; mm <= 2 * zin.size(); ++mm)
        report.inside.measurement_indices.push_back(static_cast<int>(-mm));

    const auto [zout, gout] = gather(out);
    report.outside.poles = zout;
    if (zout.size() > 0) {
        const auto spec = PencilSpec<Real>::for_outside_poles(zout, gout);
        report.outside.unstructured = unstructured_sensitivities(spec);
        report.outside.structured = structured_sensitivities(spec);
    }
    for (Index mm = 1; mm <= 2 * zout.size(); ++mm)
        report.outside.measurement_indices.push_back(static_cast<int>(mm));

    return report;
}

} // namespace ratrec
