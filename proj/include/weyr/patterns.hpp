#ifndef WEYR_PATTERNS_HPP
#define WEYR_PATTERNS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "weyr/matrix.hpp"

namespace weyr {

/// Matrix over {zero, parameter}. Parameters carry distinct ids,
/// contiguous from 0 in row-major order of first appearance.
class PatternMatrix {
  public:
    static constexpr int kZero = -1;

    PatternMatrix() : rows_(0), cols_(0) {}
    PatternMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), ids_(rows * cols, kZero) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool is_param(std::size_t r, std::size_t c) const {
        return ids_[r * cols_ + c] != kZero;
    }
    int param_id(std::size_t r, std::size_t c) const { return ids_[r * cols_ + c]; }

    void set_param(std::size_t r, std::size_t c) { ids_[r * cols_ + c] = 0; }
    void set_zero(std::size_t r, std::size_t c) { ids_[r * cols_ + c] = kZero; }

    std::size_t param_count() const;

    /// Reassigns ids 0..k-1 in row-major order.
    void renumber();

    void paste(std::size_t r0, std::size_t c0, const PatternMatrix& src);

    /// Star positions, row-major.
    std::vector<std::pair<std::size_t, std::size_t>> support() const;

    friend bool operator==(const PatternMatrix&, const PatternMatrix&) = default;

    /// '*' for parameters, '.' for zeros; optional partition separators.
    std::string ascii(const BlockPartition* partition = nullptr) const;

  private:
    std::size_t rows_, cols_;
    std::vector<int> ids_;
};

/// The two-case corner pattern: p < q puts the parameters in the first
/// column, p >= q in the last row.
PatternMatrix t_block(std::size_t p, std::size_t q);

/// All entries parameters.
PatternMatrix star_block(std::size_t rows, std::size_t cols);

enum class ArrowDirection { Up, Down, Left, Right };

/// Parameters exactly on the named border line (first/last row/column).
PatternMatrix arrow_block(ArrowDirection d, std::size_t rows, std::size_t cols);

/// Parameters in the first row, positions 1..max(0, cols - rows).
PatternMatrix z_block(std::size_t rows, std::size_t cols);

/// Transpose of z_block(cols, rows): first-column parameters.
PatternMatrix zt_block(std::size_t rows, std::size_t cols);

PatternMatrix adjoin_zero_row_top(const PatternMatrix& m);
PatternMatrix adjoin_zero_col_right(const PatternMatrix& m);
ExactMatrix adjoin_zero_row_top(const ExactMatrix& m);
ExactMatrix adjoin_zero_col_right(const ExactMatrix& m);

/// Block concatenation of a rectangular grid; rejects ragged layouts.
/// Ids are renumbered row-major over the assembled matrix.
PatternMatrix compose_blocks(const std::vector<std::vector<PatternMatrix>>& grid);

PatternMatrix transpose(const PatternMatrix& m);

/// result(rp[a], cp[b]) is a parameter iff m(a, b) is; ids renumbered.
PatternMatrix permute_pattern(const PatternMatrix& m, const Permutation& rp,
                              const Permutation& cp);

}  // namespace weyr

#endif
