#include "weyr/reduce.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace weyr {

namespace {

double max_abs(const FloatMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

using Eigen::Index;
using Eigen::VectorXcd;

FloatMatrix to_float_aug(const ExactMatrix& tangent,
                         const std::vector<std::pair<std::size_t, std::size_t>>& stars,
                         std::size_t target_rows_first, std::size_t mat_rows_first) {
    // Helper for the single-matrix case only; pairs are assembled inline.
    FloatMatrix aug(tangent.rows(), tangent.cols() + stars.size());
    aug.setZero();
    for (std::size_t r = 0; r < tangent.rows(); ++r)
        for (std::size_t c = 0; c < tangent.cols(); ++c)
            aug(static_cast<Index>(r), static_cast<Index>(c)) =
                tangent.at(r, c).to_double();
    (void)target_rows_first;
    for (std::size_t k = 0; k < stars.size(); ++k) {
        std::size_t idx = stars[k].first + stars[k].second * mat_rows_first;
        aug(static_cast<Index>(idx), static_cast<Index>(tangent.cols() + k)) = 1.0;
    }
    return aug;
}

VectorXcd vec_of(const FloatMatrix& m) {
    return Eigen::Map<const VectorXcd>(m.data(), m.size());
}

FloatMatrix pattern_eval(const PatternMatrix& pat,
                         const std::vector<std::complex<double>>& params) {
    FloatMatrix out(static_cast<Index>(pat.rows()), static_cast<Index>(pat.cols()));
    out.setZero();
    std::size_t k = 0;
    for (std::size_t r = 0; r < pat.rows(); ++r)
        for (std::size_t c = 0; c < pat.cols(); ++c)
            if (pat.is_param(r, c))
                out(static_cast<Index>(r), static_cast<Index>(c)) = params[k++];
    return out;
}

double cond_estimate(const FloatMatrix& s) {
    Eigen::JacobiSVD<FloatMatrix> svd(s);
    double smin = svd.singularValues().minCoeff();
    if (smin == 0.0) return std::numeric_limits<double>::infinity();
    return svd.singularValues().maxCoeff() / smin;
}

}  // namespace

FloatMatrix to_float(const ExactMatrix& m) {
    FloatMatrix out(static_cast<Index>(m.rows()), static_cast<Index>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(static_cast<Index>(r), static_cast<Index>(c)) = m.at(r, c).to_double();
    return out;
}

ReductionResult reduce_similarity(const Template& t, const FloatMatrix& e,
                                  const ReduceOptions& opts) {
    t.check();
    std::size_t n = t.base.rows();
    if (e.rows() != static_cast<Index>(n) || e.cols() != static_cast<Index>(n))
        throw std::invalid_argument("perturbation dimensions do not match the base");

    FloatMatrix a0 = to_float(t.base);
    auto stars = t.pattern.support();
    std::size_t k = stars.size();
    FloatMatrix aug = to_float_aug(tangent_matrix(t.base), stars, n * n, n);
    Eigen::CompleteOrthogonalDecomposition<FloatMatrix> cod(aug);

    ReductionResult res;
    res.transform = FloatMatrix::Identity(n, n);
    res.params.assign(k, 0.0);

    FloatMatrix perturbed = a0 + e;
    for (int iter = 0;; ++iter) {
        FloatMatrix a_cur =
            res.transform.partialPivLu().solve(perturbed * res.transform);
        FloatMatrix defect = a_cur - a0;
        res.residual =
            max_abs(defect - pattern_eval(t.pattern, res.params));
        res.iterations = iter;
        if (res.residual <= opts.tol) {
            res.status = ReduceStatus::Converged;
            break;
        }
        if (iter >= opts.max_iter) {
            res.status = ReduceStatus::NoConvergence;
            break;
        }
        VectorXcd sol = cod.solve(-vec_of(defect));
        FloatMatrix x =
            Eigen::Map<const FloatMatrix>(sol.data(), static_cast<Index>(n),
                                          static_cast<Index>(n));
        for (std::size_t j = 0; j < k; ++j)
            res.params[j] = -sol(static_cast<Index>(n * n + j));
        res.transform = res.transform * (FloatMatrix::Identity(n, n) + x);
        if (cond_estimate(res.transform) > opts.cond_cap) {
            res.status = ReduceStatus::SingularTransform;
            ++res.iterations;
            FloatMatrix a2 =
                res.transform.partialPivLu().solve(perturbed * res.transform);
            res.residual =
                max_abs(a2 - a0 - pattern_eval(t.pattern, res.params));
            break;
        }
    }
    return res;
}

std::vector<std::complex<double>> first_order_params(const Template& t,
                                                     const FloatMatrix& e) {
    t.check();
    std::size_t n = t.base.rows();
    auto stars = t.pattern.support();
    FloatMatrix aug = to_float_aug(tangent_matrix(t.base), stars, n * n, n);
    Eigen::CompleteOrthogonalDecomposition<FloatMatrix> cod(aug);
    VectorXcd sol = cod.solve(-vec_of(FloatMatrix(e)));
    std::vector<std::complex<double>> params(stars.size());
    for (std::size_t j = 0; j < stars.size(); ++j)
        params[j] = -sol(static_cast<Index>(n * n + j));
    return params;
}

PairReductionResult reduce_pair(const TemplatePair& tp, TangentKind kind,
                                const FloatMatrix& e_first,
                                const FloatMatrix& e_second,
                                const ReduceOptions& opts) {
    tp.first.check();
    tp.second.check();
    std::size_t m = tp.first.base.rows(), n = tp.first.base.cols();
    std::size_t mn = m * n;

    FloatMatrix a0 = to_float(tp.first.base);
    FloatMatrix b0 = to_float(tp.second.base);
    if (e_first.rows() != a0.rows() || e_first.cols() != a0.cols() ||
        e_second.rows() != b0.rows() || e_second.cols() != b0.cols())
        throw std::invalid_argument("perturbation dimensions do not match the pair");

    ExactMatrix tan = tangent_matrix(tp.first.base, tp.second.base, kind);
    auto stars1 = tp.first.pattern.support();
    auto stars2 = tp.second.pattern.support();
    std::size_t k = stars1.size() + stars2.size();
    FloatMatrix aug(static_cast<Index>(2 * mn), static_cast<Index>(tan.cols() + k));
    aug.setZero();
    for (std::size_t r = 0; r < tan.rows(); ++r)
        for (std::size_t c = 0; c < tan.cols(); ++c)
            aug(static_cast<Index>(r), static_cast<Index>(c)) =
                tan.at(r, c).to_double();
    for (std::size_t j = 0; j < stars1.size(); ++j)
        aug(static_cast<Index>(stars1[j].first + stars1[j].second * m),
            static_cast<Index>(tan.cols() + j)) = 1.0;
    for (std::size_t j = 0; j < stars2.size(); ++j)
        aug(static_cast<Index>(mn + stars2[j].first +
                               stars2[j].second * tp.second.base.rows()),
            static_cast<Index>(tan.cols() + stars1.size() + j)) = 1.0;
    Eigen::CompleteOrthogonalDecomposition<FloatMatrix> cod(aug);

    PairReductionResult res;
    res.left = FloatMatrix::Identity(m, m);
    res.right = FloatMatrix::Identity(n, n);
    res.params.assign(k, 0.0);

    FloatMatrix pa = a0 + e_first, pb = b0 + e_second;
    auto split_params = [&](std::vector<std::complex<double>>& p1,
                            std::vector<std::complex<double>>& p2) {
        p1.assign(res.params.begin(),
                  res.params.begin() + static_cast<long>(stars1.size()));
        p2.assign(res.params.begin() + static_cast<long>(stars1.size()),
                  res.params.end());
    };
    for (int iter = 0;; ++iter) {
        FloatMatrix a_cur = res.left.partialPivLu().solve(pa * res.right);
        FloatMatrix b_cur =
            kind == TangentKind::Contragredient
                ? FloatMatrix(res.right.partialPivLu().solve(pb * res.left))
                : FloatMatrix(res.left.partialPivLu().solve(pb * res.right));
        std::vector<std::complex<double>> p1, p2;
        split_params(p1, p2);
        FloatMatrix d1 = a_cur - a0, d2 = b_cur - b0;
        double r1 = max_abs(d1 - pattern_eval(tp.first.pattern, p1));
        double r2 = max_abs(d2 - pattern_eval(tp.second.pattern, p2));
        res.residual = std::max(r1, r2);
        res.iterations = iter;
        if (res.residual <= opts.tol) {
            res.status = ReduceStatus::Converged;
            break;
        }
        if (iter >= opts.max_iter) {
            res.status = ReduceStatus::NoConvergence;
            break;
        }
        VectorXcd rhs(static_cast<Index>(2 * mn));
        rhs << -vec_of(d1), -vec_of(d2);
        VectorXcd sol = cod.solve(rhs);
        FloatMatrix x = Eigen::Map<const FloatMatrix>(
            sol.data(), static_cast<Index>(m), static_cast<Index>(m));
        FloatMatrix y = Eigen::Map<const FloatMatrix>(
            sol.data() + m * m, static_cast<Index>(n), static_cast<Index>(n));
        for (std::size_t j = 0; j < k; ++j)
            res.params[j] = -sol(static_cast<Index>(m * m + n * n + j));
        res.left = res.left * (FloatMatrix::Identity(m, m) + x);
        res.right = res.right * (FloatMatrix::Identity(n, n) + y);
        if (cond_estimate(res.left) > opts.cond_cap ||
            cond_estimate(res.right) > opts.cond_cap) {
            res.status = ReduceStatus::SingularTransform;
            ++res.iterations;
            break;
        }
    }
    return res;
}

}  // namespace weyr
