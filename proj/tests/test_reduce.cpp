#include <random>

#include "doctest.h"
#include "weyr/random_gen.hpp"
#include "weyr/reduce.hpp"

using namespace weyr;

namespace {

SegreStructure single(long eig, std::vector<std::size_t> sizes) {
    SegreStructure s;
    s.eigenvalues.push_back({Scalar(eig), std::move(sizes)});
    return s;
}

FloatMatrix random_perturbation(std::mt19937_64& rng, Eigen::Index n,
                                double scale) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    FloatMatrix e(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) e(r, c) = {d(rng), d(rng)};
    return e * (scale / e.cwiseAbs().maxCoeff());
}

}  // namespace

TEST_CASE("zero perturbation is an exact fixed point") {
    Template t = deform_weyr(single(2, {3, 1}));
    FloatMatrix e = FloatMatrix::Zero(4, 4);
    ReductionResult r = reduce_similarity(t, e);
    CHECK(r.status == ReduceStatus::Converged);
    CHECK(r.iterations == 0);
    CHECK(r.residual == 0.0);
    CHECK(r.transform == FloatMatrix::Identity(4, 4));
    for (const auto& p : r.params) CHECK(p == std::complex<double>(0.0));
}

TEST_CASE("perturbation inside the pattern subspace is solved in one step") {
    Template t = deform_jordan(single(0, {2}));
    FloatMatrix e = FloatMatrix::Zero(2, 2);
    e(1, 0) = 1e-4;
    ReductionResult r = reduce_similarity(t, e);
    CHECK(r.status == ReduceStatus::Converged);
    CHECK(r.residual <= 1e-12);
    // Stars sit on the last row: (1,0) then (1,1).
    REQUIRE(r.params.size() == 2);
    CHECK(std::abs(r.params[0] - std::complex<double>(1e-4)) <= 1e-12);
    CHECK(std::abs(r.params[1]) <= 1e-12);
}

TEST_CASE("random perturbations of the worked example converge") {
    Template t = deform_weyr(single(0, {4, 2}));
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        FloatMatrix e = random_perturbation(rng, 6, 1e-3);
        ReductionResult r = reduce_similarity(t, e);
        CHECK(r.status == ReduceStatus::Converged);
        CHECK(r.residual <= 1e-10);
        CHECK(r.iterations <= 25);

        // Independent residual recomputation from the returned fields.
        FloatMatrix normal =
            r.transform.partialPivLu().solve((to_float(t.base) + e) * r.transform);
        FloatMatrix model = to_float(t.base);
        std::size_t k = 0;
        for (std::size_t rr = 0; rr < t.pattern.rows(); ++rr)
            for (std::size_t cc = 0; cc < t.pattern.cols(); ++cc)
                if (t.pattern.is_param(rr, cc))
                    model(static_cast<Eigen::Index>(rr),
                          static_cast<Eigen::Index>(cc)) += r.params[k++];
        CHECK((normal - model).cwiseAbs().maxCoeff() <= 1e-10 + 1e-12);
    }
}

TEST_CASE("recovered parameters scale to first order") {
    Template t = deform_weyr(single(0, {4, 2}));
    std::mt19937_64 rng(43);
    FloatMatrix e0 = random_perturbation(rng, 6, 1e-3);
    auto lin = first_order_params(t, e0);

    // The default tolerance would accept the tiniest perturbations with
    // zero parameters; tighten it so the solve actually runs.
    ReduceOptions opts;
    opts.tol = 1e-14;

    double worst = 0;
    for (int step = 2; step <= 7; ++step) {
        double scale = std::pow(10.0, -step);
        ReductionResult r = reduce_similarity(t, e0 * scale, opts);
        REQUIRE(r.status == ReduceStatus::Converged);
        for (std::size_t j = 0; j < lin.size(); ++j) {
            double denom = std::max(std::abs(lin[j]) * scale, 1e-30);
            double rel = std::abs(r.params[j] - lin[j] * scale) / denom;
            if (std::abs(lin[j]) * scale > 1e-14) worst = std::max(worst, rel);
        }
    }
    // The nonlinear correction vanishes with the scale.
    CHECK(worst <= 1e-4);
}

TEST_CASE("reduction is deterministic") {
    Template t = deform_weyr(single(1, {3, 2}));
    std::mt19937_64 rng(47);
    FloatMatrix e = random_perturbation(rng, 5, 1e-3);
    ReductionResult a = reduce_similarity(t, e);
    ReductionResult b = reduce_similarity(t, e);
    CHECK(a.residual == b.residual);
    CHECK(a.iterations == b.iterations);
    CHECK(a.transform == b.transform);
    CHECK(a.params == b.params);
}

TEST_CASE("oversized perturbations report failure instead of lying") {
    Template t = deform_weyr(single(0, {2}));
    FloatMatrix e(2, 2);
    e.setConstant(10.0);  // far outside any convergence radius
    ReduceOptions opts;
    opts.max_iter = 5;
    ReductionResult r = reduce_similarity(t, e, opts);
    CHECK(r.status != ReduceStatus::Converged);
}

TEST_CASE("experimental pair reduction handles small pencils") {
    PencilStructure ps;
    ps.left_indices = {2};
    ps.regular.eigenvalues.push_back({Scalar(1), {1}});
    TemplatePair tp = deform_pencil(ps);
    auto [m, n] = ps.dimensions();
    FloatMatrix e1 = FloatMatrix::Zero(static_cast<Eigen::Index>(m),
                                       static_cast<Eigen::Index>(n));
    FloatMatrix e2 = e1;
    e1(0, 0) = 1e-5;
    e2(1, 1) = -2e-5;
    PairReductionResult r = reduce_pair(tp, TangentKind::PencilEquivalence, e1,
                                        e2);
    CHECK(r.status == ReduceStatus::Converged);
    CHECK(r.residual <= 1e-10);
}
