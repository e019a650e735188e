#include "doctest.h"
#include "weyr/patterns.hpp"

using namespace weyr;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> stars(const PatternMatrix& m) {
    return m.support();
}

}  // namespace

TEST_CASE("corner block cases") {
    // p < q: first column; p >= q: last row.
    PatternMatrix tall = t_block(2, 4);
    CHECK(stars(tall) ==
          std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 0}});
    PatternMatrix wide = t_block(3, 2);
    CHECK(stars(wide) ==
          std::vector<std::pair<std::size_t, std::size_t>>{{2, 0}, {2, 1}});
    PatternMatrix square = t_block(3, 3);
    CHECK(square.param_count() == 3);
    CHECK(square.is_param(2, 2));
    CHECK(t_block(0, 3).param_count() == 0);
    CHECK(t_block(1, 0).param_count() == 0);
}

TEST_CASE("zero-tail blocks") {
    // z: first row, first max(0, cols-rows) entries.
    CHECK(stars(z_block(2, 5)) ==
          std::vector<std::pair<std::size_t, std::size_t>>{
              {0, 0}, {0, 1}, {0, 2}});
    CHECK(z_block(3, 3).param_count() == 0);
    CHECK(z_block(4, 2).param_count() == 0);
    // zt is the transpose: first column, max(0, rows-cols) entries.
    CHECK(stars(zt_block(5, 2)) ==
          std::vector<std::pair<std::size_t, std::size_t>>{
              {0, 0}, {1, 0}, {2, 0}});
    CHECK(zt_block(2, 4).param_count() == 0);
}

TEST_CASE("arrow and star blocks") {
    CHECK(arrow_block(ArrowDirection::Down, 3, 2).is_param(2, 0));
    CHECK(arrow_block(ArrowDirection::Down, 3, 2).param_count() == 2);
    CHECK(arrow_block(ArrowDirection::Right, 3, 2).param_count() == 3);
    CHECK(arrow_block(ArrowDirection::Up, 0, 2).param_count() == 0);
    CHECK(star_block(2, 3).param_count() == 6);
}

TEST_CASE("adjoined zero lines shift the block") {
    PatternMatrix base = t_block(2, 2);  // last row stars
    PatternMatrix up = adjoin_zero_row_top(base);
    CHECK(up.rows() == 3);
    CHECK(!up.is_param(0, 0));
    CHECK(up.is_param(2, 0));
    PatternMatrix right = adjoin_zero_col_right(base);
    CHECK(right.cols() == 3);
    CHECK(!right.is_param(1, 2));
    CHECK(right.is_param(1, 1));

    ExactMatrix m(1, 1);
    m.at(0, 0) = Scalar(3);
    CHECK(adjoin_zero_row_top(m).at(1, 0) == Scalar(3));
    CHECK(adjoin_zero_col_right(m).at(0, 1) == Scalar(0));
}

TEST_CASE("ids are contiguous row-major") {
    PatternMatrix m(2, 3);
    m.set_param(1, 2);
    m.set_param(0, 1);
    m.renumber();
    CHECK(m.param_id(0, 1) == 0);
    CHECK(m.param_id(1, 2) == 1);
    CHECK(m.param_count() == 2);
}

TEST_CASE("compose_blocks rejects ragged grids") {
    PatternMatrix a(2, 2), b(2, 3), c(1, 2), d(1, 3);
    PatternMatrix ok = compose_blocks({{a, b}, {c, d}});
    CHECK(ok.rows() == 3);
    CHECK(ok.cols() == 5);
    CHECK_THROWS_AS(compose_blocks({{a, b}, {d, c}}), std::invalid_argument);
    CHECK_THROWS_AS(compose_blocks({{a, b}, {c}}), std::invalid_argument);
}

TEST_CASE("pattern transpose and permutation") {
    PatternMatrix m = t_block(3, 2);
    CHECK(transpose(m).support() ==
          std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 2}});
    Permutation rp{{2, 0, 1}};
    Permutation cp{{1, 0}};
    PatternMatrix p = permute_pattern(m, rp, cp);
    // stars (2,0),(2,1) -> (rp[2], cp[0]) = (1,1) and (1,0)
    CHECK(p.support() ==
          std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}, {1, 1}});
}

TEST_CASE("ascii rendering marks stars and separators") {
    PatternMatrix m = t_block(2, 2);
    BlockPartition bp = BlockPartition::square({1, 1});
    std::string art = m.ascii(&bp);
    CHECK(art.find('*') != std::string::npos);
    CHECK(art.find('.') != std::string::npos);
    CHECK(art.find('|') != std::string::npos);
    std::size_t stars = 0;
    for (char ch : art)
        if (ch == '*') ++stars;
    CHECK(stars == m.param_count());
}
