#include <random>

#include "doctest.h"
#include "weyr/random_gen.hpp"
#include "weyr/structures.hpp"

using namespace weyr;

namespace {

SegreStructure single(long eig, std::vector<std::size_t> sizes) {
    SegreStructure s;
    s.eigenvalues.push_back({Scalar(eig), std::move(sizes)});
    return s;
}

}  // namespace

TEST_CASE("Weyr characteristic is the conjugate partition") {
    CHECK(weyr_char_from_segre({4, 2}).s == std::vector<std::size_t>{2, 2, 1, 1});
    CHECK(weyr_char_from_segre({3, 3, 1}).s == std::vector<std::size_t>{3, 2, 2});
    CHECK(weyr_char_from_segre({5}).s == std::vector<std::size_t>{1, 1, 1, 1, 1});
    CHECK(weyr_char_from_segre({1, 1, 1}).s == std::vector<std::size_t>{3});
}

TEST_CASE("conjugate partition round trip") {
    CHECK(segre_from_weyr(WeyrCharacteristic{{2, 2, 1, 1}}) ==
          std::vector<std::size_t>{4, 2});
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto sizes = random_partition(rng, 9);
        CHECK(segre_from_weyr(weyr_char_from_segre(sizes)) == sizes);
    }
}

TEST_CASE("validation names the violated invariant") {
    CHECK_THROWS_WITH_AS(weyr_char_from_segre({2, 3}),
                         "sizes must be nonincreasing", std::invalid_argument);
    CHECK_THROWS_AS(weyr_char_from_segre({}), std::invalid_argument);
    CHECK_THROWS_AS(segre_from_weyr(WeyrCharacteristic{{1, 2}}),
                    std::invalid_argument);
    SegreStructure dup;
    dup.eigenvalues.push_back({Scalar(1), {1}});
    dup.eigenvalues.push_back({Scalar(1), {2}});
    CHECK_THROWS_AS(dup.validate(), std::invalid_argument);
}

TEST_CASE("Jordan-to-Weyr permutation for sizes [4,2]") {
    Permutation p = jordan_to_weyr_permutation(single(0, {4, 2}));
    CHECK(p.image == std::vector<std::size_t>{0, 2, 4, 5, 1, 3});
}

TEST_CASE("the permutation conjugates Jordan onto Weyr, brute-force checked") {
    // For sizes [2,1] enumerate all 3x3 permutations and confirm ours is
    // among those achieving the Weyr structure.
    SegreStructure s = single(0, {2, 1});
    ExactMatrix j = build_jordan(s);
    WeyrForm wf = build_weyr(s);
    Permutation ours = jordan_to_weyr_permutation(s);
    CHECK(ours.conjugate(j) == wf.matrix);

    std::vector<std::size_t> idx{0, 1, 2};
    bool found = false;
    do {
        Permutation p{idx};
        if (p.conjugate(j) == wf.matrix && p.image == ours.image) found = true;
    } while (std::next_permutation(idx.begin(), idx.end()));
    CHECK(found);
}

TEST_CASE("Weyr form block structure") {
    // Under the strip partition the only nonzero off-diagonal blocks sit
    // between consecutive positions of the same family (same eigenvalue),
    // and each such block is a full identity of the family multiplicity.
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        SegreStructure s = random_segre(rng, 10);
        WeyrForm wf = build_weyr(s);
        const auto& sizes = wf.partition.row_sizes;
        std::vector<std::size_t> off{0};
        for (std::size_t sz : sizes) off.push_back(off.back() + sz);

        // Recover the (eigenvalue, family, position) label of each strip.
        std::vector<std::size_t> strip_owner;
        std::vector<StripIndex> strip_label;
        for (std::size_t e = 0; e < s.eigenvalues.size(); ++e) {
            SegreStructure one;
            one.eigenvalues.push_back(s.eigenvalues[e]);
            for (const StripIndex& si :
                 strip_index_sequence(one, StripOrder::ColumnMajor)) {
                strip_owner.push_back(e);
                strip_label.push_back(si);
            }
        }
        REQUIRE(strip_label.size() == sizes.size());

        for (std::size_t bi = 0; bi < sizes.size(); ++bi)
            for (std::size_t bj = 0; bj < sizes.size(); ++bj) {
                bool linked = strip_owner[bi] == strip_owner[bj] &&
                              strip_label[bi].family == strip_label[bj].family &&
                              strip_label[bj].position ==
                                  strip_label[bi].position + 1;
                for (std::size_t r = off[bi]; r < off[bi + 1]; ++r)
                    for (std::size_t c = off[bj]; c < off[bj + 1]; ++c) {
                        const Scalar& v = wf.matrix.at(r, c);
                        if (bi == bj) {
                            CHECK(v == (r == c
                                            ? s.eigenvalues[strip_owner[bi]].value
                                            : Scalar(0)));
                        } else if (linked) {
                            // Same family, so the block is square: identity.
                            bool one = (r - off[bi]) == (c - off[bj]);
                            CHECK(v == (one ? Scalar(1) : Scalar(0)));
                        } else {
                            CHECK(v.is_zero());
                        }
                    }
            }
    }
}

TEST_CASE("rank-based Weyr characteristic agrees") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        SegreStructure s = random_segre(rng, 8, 2);
        WeyrForm wf = build_weyr(s);
        for (const auto& eb : s.eigenvalues)
            CHECK(weyr_char_of_matrix(wf.matrix, eb.value).s ==
                  weyr_char_from_segre(eb.sizes).s);
    }
}

TEST_CASE("strip widths and labels agree with the family decomposition") {
    // sizes [4,2]: families (4, mult 1), (2, mult 1); column-major strips
    // (1,1),(2,1),(1,2),(2,2),(1,3),(1,4).
    auto strips = strip_index_sequence(single(0, {4, 2}), StripOrder::ColumnMajor);
    REQUIRE(strips.size() == 6);
    CHECK(strips[0] == StripIndex{1, 1});
    CHECK(strips[1] == StripIndex{2, 1});
    CHECK(strips[2] == StripIndex{1, 2});
    CHECK(strips[3] == StripIndex{2, 2});
    CHECK(strips[4] == StripIndex{1, 3});
    CHECK(strips[5] == StripIndex{1, 4});
    CHECK(weyr_strip_widths({4, 2}) ==
          std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
    CHECK(weyr_strip_widths({2, 2, 1}) == std::vector<std::size_t>{2, 1, 2});
}
