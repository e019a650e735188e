#include <random>
#include <set>

#include "doctest.h"
#include "weyr/deformations.hpp"
#include "weyr/random_gen.hpp"
#include "weyr/verify.hpp"

using namespace weyr;

namespace {

SegreStructure single(long eig, std::vector<std::size_t> sizes) {
    SegreStructure s;
    s.eigenvalues.push_back({Scalar(eig), std::move(sizes)});
    return s;
}

using Support = std::set<std::pair<std::size_t, std::size_t>>;

Support support_of(const PatternMatrix& m) {
    auto v = m.support();
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("single-line matrices of the singular summands") {
    ExactMatrix f = f_single(3);  // ones on rows 1..r-1 of the diagonal
    CHECK(f.rows() == 3);
    CHECK(f.cols() == 2);
    CHECK(f.at(0, 0) == Scalar(1));
    CHECK(f.at(1, 1) == Scalar(1));
    CHECK(f.at(2, 0) == Scalar(0));
    CHECK(f.at(2, 1) == Scalar(0));
    ExactMatrix g = g_single(3);  // subdiagonal ones
    CHECK(g.at(0, 0) == Scalar(0));
    CHECK(g.at(1, 0) == Scalar(1));
    CHECK(g.at(2, 1) == Scalar(1));
    CHECK(f_single(1).cols() == 0);
}

TEST_CASE("Arnold deformation of a single Jordan block") {
    Template t = deform_jordan(single(0, {3}));
    CHECK(t.param_count() == 3);
    CHECK(support_of(t.pattern) == Support{{2, 0}, {2, 1}, {2, 2}});
}

TEST_CASE("Arnold deformation splits across eigenvalues") {
    SegreStructure s;
    s.eigenvalues.push_back({Scalar(0), {2}});
    s.eigenvalues.push_back({Scalar(1), {1}});
    Template t = deform_jordan(s);
    CHECK(t.param_count() == 3);
    // No coupling between the two eigenvalues.
    for (std::size_t r = 0; r < 2; ++r) CHECK(!t.pattern.is_param(r, 2));
    CHECK(!t.pattern.is_param(2, 0));
    CHECK(t.pattern.is_param(2, 2));
}

TEST_CASE("Weyr deformation of sizes [4,2]: the frozen worked example") {
    Template t = deform_weyr(single(0, {4, 2}), WeyrRoute::Direct);
    CHECK(t.param_count() == 10);
    // 1-based rows/cols of the 10 stars.
    Support expect = {{1, 0}, {3, 0}, {3, 1}, {3, 3}, {5, 0},
                      {5, 1}, {5, 2}, {5, 3}, {5, 4}, {5, 5}};
    CHECK(support_of(t.pattern) == expect);
    CHECK(is_block_triangular(t.pattern, t.partition, Orientation::Lower));
    CHECK_FALSE(is_block_triangular(t.pattern, t.partition, Orientation::Upper));
}

TEST_CASE("both Weyr construction routes have identical supports") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        SegreStructure s = random_segre(rng, 10);
        Template a = deform_weyr(s, WeyrRoute::Direct);
        Template b = deform_weyr(s, WeyrRoute::Permute);
        CHECK(a.base == b.base);
        CHECK(support_of(a.pattern) == support_of(b.pattern));
        CHECK(a.param_count() == codim_similarity_formula(s));
        CHECK(is_block_triangular(a.pattern, a.partition, Orientation::Lower));
    }
}

TEST_CASE("stars only overlap eigenvalue diagonal entries of the base") {
    // Structural ones of the base are never starred; the only overlap is
    // the eigenvalue on the diagonal.
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        SegreStructure s = random_segre(rng, 10);
        Template t = deform_weyr(s);
        for (const auto& [r, c] : t.pattern.support())
            CHECK((t.base.at(r, c).is_zero() || r == c));
    }
}

TEST_CASE("pencil deformation parameter counts on degenerate shapes") {
    PencilStructure lone_q;
    lone_q.right_indices = {2};
    CHECK(deform_pencil(lone_q).param_count() == 0);

    PencilStructure pq;
    pq.left_indices = {1};
    pq.right_indices = {1};
    CHECK(deform_pencil(pq).param_count() == 2);

    PencilStructure pp;  // interaction of two left summands
    pp.left_indices = {1, 3};
    CHECK(deform_pencil(pp).param_count() == 1);
}

TEST_CASE("pencil orderings are validated, not sorted") {
    PencilStructure bad;
    bad.left_indices = {3, 1};
    CHECK_THROWS_WITH_AS(bad.validate(),
                         "left minimal indices must be nondecreasing",
                         std::invalid_argument);
    CHECK(normalize_pencil(bad));
    bad.validate();
    CHECK_FALSE(normalize_pencil(bad));

    PencilStructure badq;
    badq.right_indices = {1, 2};
    CHECK_THROWS_AS(badq.validate(), std::invalid_argument);
    PencilStructure badinf;
    badinf.infinite = {1, 2};
    CHECK_THROWS_AS(deform_pencil(badinf), std::invalid_argument);
}

TEST_CASE("Kronecker and Weyr pencil orderings are permutation equivalent") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 30; ++trial) {
        PencilStructure ps = random_pencil(rng);
        TemplatePair wy = deform_pencil(ps);
        TemplatePair kr = deform_pencil_kronecker(ps);
        CHECK(wy.param_count() == kr.param_count());

        PencilLayoutMaps maps = pencil_layout_maps(ps);
        CHECK(permute_rows_cols(kr.first.base, maps.row_map, maps.col_map) ==
              wy.first.base);
        CHECK(permute_rows_cols(kr.second.base, maps.row_map, maps.col_map) ==
              wy.second.base);
        CHECK(support_of(permute_pattern(kr.first.pattern, maps.row_map,
                                         maps.col_map)) ==
              support_of(wy.first.pattern));
        CHECK(support_of(permute_pattern(kr.second.pattern, maps.row_map,
                                         maps.col_map)) ==
              support_of(wy.second.pattern));
    }
}

TEST_CASE("contragredient deformation of the two trivial zero parts") {
    ContraStructure cs;
    cs.ab_zero = {1};
    cs.ba_zero = {1};
    TemplatePair tp = deform_contragredient(cs);
    CHECK(tp.first.base.rows() == 2);
    CHECK(tp.first.base.cols() == 2);
    CHECK(tp.param_count() == 4);
}

TEST_CASE("contragredient orderings are validated") {
    ContraStructure bad;
    bad.left_indices = {1, 2};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK(normalize_contra(bad));
    bad.validate();

    ContraStructure zero_reg;
    zero_reg.regular.eigenvalues.push_back({Scalar(0), {1}});
    CHECK_THROWS_WITH_AS(
        zero_reg.validate(),
        "regular part of a contragredient pair must be nonsingular",
        std::invalid_argument);
}

TEST_CASE("triangularization certifies on both sides") {
    std::mt19937_64 rng(27);
    for (int trial = 0; trial < 30; ++trial) {
        ContraStructure cs = random_contra(rng);
        TemplatePair tp = deform_contragredient(cs);
        TriangularizedPair tri = triangularize_contragredient(tp, cs);
        CHECK(tri.pair.param_count() == tp.param_count());

        ContraPartitions parts = contra_triangular_partitions(cs);
        CHECK(is_block_triangular(tri.pair.first.pattern, parts.first,
                                  Orientation::Upper));
        CHECK(is_block_triangular(tri.pair.second.pattern, parts.second,
                                  Orientation::Lower));
    }
}

TEST_CASE("template check rejects mismatched partitions") {
    Template t = deform_weyr(single(0, {2}));
    t.partition.row_sizes = {1};
    CHECK_THROWS_AS(t.check(), std::invalid_argument);
}
