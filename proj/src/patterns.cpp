#include "weyr/patterns.hpp"

#include <sstream>
#include <stdexcept>

namespace weyr {

std::size_t PatternMatrix::param_count() const {
    std::size_t n = 0;
    for (int id : ids_)
        if (id != kZero) ++n;
    return n;
}

void PatternMatrix::renumber() {
    int next = 0;
    for (int& id : ids_)
        if (id != kZero) id = next++;
}

void PatternMatrix::paste(std::size_t r0, std::size_t c0, const PatternMatrix& src) {
    if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_)
        throw std::invalid_argument("pattern paste out of bounds");
    for (std::size_t r = 0; r < src.rows_; ++r)
        for (std::size_t c = 0; c < src.cols_; ++c)
            ids_[(r0 + r) * cols_ + (c0 + c)] = src.ids_[r * src.cols_ + c];
}

std::vector<std::pair<std::size_t, std::size_t>> PatternMatrix::support() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (is_param(r, c)) out.push_back({r, c});
    return out;
}

std::string PatternMatrix::ascii(const BlockPartition* partition) const {
    std::vector<bool> hline(rows_, false), vline(cols_, false);
    if (partition) {
        std::size_t acc = 0;
        for (std::size_t i = 0; i + 1 < partition->row_sizes.size(); ++i) {
            acc += partition->row_sizes[i];
            if (acc < rows_) hline[acc] = true;
        }
        acc = 0;
        for (std::size_t i = 0; i + 1 < partition->col_sizes.size(); ++i) {
            acc += partition->col_sizes[i];
            if (acc < cols_) vline[acc] = true;
        }
    }
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (hline[r]) {
            for (std::size_t c = 0; c < cols_; ++c)
                os << (vline[c] ? "+--" : (c ? "--" : "-"));
            os << "\n";
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            if (vline[c]) os << "| ";
            else if (c) os << " ";
            os << (is_param(r, c) ? '*' : '.');
        }
        os << "\n";
    }
    return os.str();
}

PatternMatrix t_block(std::size_t p, std::size_t q) {
    PatternMatrix m(p, q);
    if (p == 0 || q == 0) return m;
    if (p < q) {
        for (std::size_t r = 0; r < p; ++r) m.set_param(r, 0);
    } else {
        for (std::size_t c = 0; c < q; ++c) m.set_param(p - 1, c);
    }
    m.renumber();
    return m;
}

PatternMatrix star_block(std::size_t rows, std::size_t cols) {
    PatternMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set_param(r, c);
    m.renumber();
    return m;
}

PatternMatrix arrow_block(ArrowDirection d, std::size_t rows, std::size_t cols) {
    PatternMatrix m(rows, cols);
    if (rows == 0 || cols == 0) return m;
    switch (d) {
        case ArrowDirection::Up:
            for (std::size_t c = 0; c < cols; ++c) m.set_param(0, c);
            break;
        case ArrowDirection::Down:
            for (std::size_t c = 0; c < cols; ++c) m.set_param(rows - 1, c);
            break;
        case ArrowDirection::Left:
            for (std::size_t r = 0; r < rows; ++r) m.set_param(r, 0);
            break;
        case ArrowDirection::Right:
            for (std::size_t r = 0; r < rows; ++r) m.set_param(r, cols - 1);
            break;
    }
    m.renumber();
    return m;
}

PatternMatrix z_block(std::size_t rows, std::size_t cols) {
    PatternMatrix m(rows, cols);
    if (rows == 0) return m;
    std::size_t stars = cols > rows ? cols - rows : 0;
    for (std::size_t c = 0; c < stars; ++c) m.set_param(0, c);
    m.renumber();
    return m;
}

PatternMatrix zt_block(std::size_t rows, std::size_t cols) {
    return transpose(z_block(cols, rows));
}

PatternMatrix adjoin_zero_row_top(const PatternMatrix& m) {
    PatternMatrix out(m.rows() + 1, m.cols());
    out.paste(1, 0, m);
    out.renumber();
    return out;
}

PatternMatrix adjoin_zero_col_right(const PatternMatrix& m) {
    PatternMatrix out(m.rows(), m.cols() + 1);
    out.paste(0, 0, m);
    out.renumber();
    return out;
}

ExactMatrix adjoin_zero_row_top(const ExactMatrix& m) {
    ExactMatrix out(m.rows() + 1, m.cols());
    out.paste(1, 0, m);
    return out;
}

ExactMatrix adjoin_zero_col_right(const ExactMatrix& m) {
    ExactMatrix out(m.rows(), m.cols() + 1);
    out.paste(0, 0, m);
    return out;
}

PatternMatrix compose_blocks(const std::vector<std::vector<PatternMatrix>>& grid) {
    if (grid.empty()) return {};
    std::size_t ncols_blocks = grid.front().size();
    std::vector<std::size_t> col_widths(ncols_blocks);
    std::vector<std::size_t> row_heights(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i].size() != ncols_blocks)
            throw std::invalid_argument("ragged block grid");
        row_heights[i] = grid[i].empty() ? 0 : grid[i][0].rows();
        for (std::size_t j = 0; j < ncols_blocks; ++j) {
            if (grid[i][j].rows() != row_heights[i])
                throw std::invalid_argument("block row heights disagree");
            if (i == 0) col_widths[j] = grid[i][j].cols();
            else if (grid[i][j].cols() != col_widths[j])
                throw std::invalid_argument("block column widths disagree");
        }
    }
    std::size_t rows = 0, cols = 0;
    for (std::size_t h : row_heights) rows += h;
    for (std::size_t w : col_widths) cols += w;
    PatternMatrix out(rows, cols);
    std::size_t r0 = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::size_t c0 = 0;
        for (std::size_t j = 0; j < ncols_blocks; ++j) {
            out.paste(r0, c0, grid[i][j]);
            c0 += col_widths[j];
        }
        r0 += row_heights[i];
    }
    out.renumber();
    return out;
}

PatternMatrix transpose(const PatternMatrix& m) {
    PatternMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.is_param(r, c)) out.set_param(c, r);
    out.renumber();
    return out;
}

PatternMatrix permute_pattern(const PatternMatrix& m, const Permutation& rp,
                              const Permutation& cp) {
    if (rp.size() != m.rows() || cp.size() != m.cols())
        throw std::invalid_argument("permutation/pattern size mismatch");
    PatternMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.is_param(r, c)) out.set_param(rp.image[r], cp.image[c]);
    out.renumber();
    return out;
}

}  // namespace weyr
