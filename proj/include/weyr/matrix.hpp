#ifndef WEYR_MATRIX_HPP
#define WEYR_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "weyr/scalar.hpp"

namespace weyr {

/// Dense matrix over exact complex rationals. Zero-dimension matrices are
/// first-class: F_1 in the pencil constructions is 1x0.
class ExactMatrix {
  public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix zero(std::size_t rows, std::size_t cols) {
        return ExactMatrix(rows, cols);
    }

    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& rhs) const;
    ExactMatrix operator+(const ExactMatrix& rhs) const;
    ExactMatrix operator-(const ExactMatrix& rhs) const;
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

    /// Copies src into this matrix with its top-left corner at (r0, c0).
    void paste(std::size_t r0, std::size_t c0, const ExactMatrix& src);

    static ExactMatrix direct_sum(const std::vector<ExactMatrix>& parts);

    bool is_zero() const;
    std::string str() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

/// Conformal partition of a matrix into blocks. Group counts on rows and
/// columns may differ; zero-size groups are allowed (they arise when a
/// singular pencil summand has one fewer column than rows).
struct BlockPartition {
    std::vector<std::size_t> row_sizes;
    std::vector<std::size_t> col_sizes;

    static BlockPartition square(std::vector<std::size_t> sizes) {
        return {sizes, sizes};
    }
};

/// Permutation stored as an explicit index map: image[i] is the new
/// position of old index i. Kept as indices (never a matrix) so exact
/// conjugation is O(n) and tests can compare images directly.
struct Permutation {
    std::vector<std::size_t> image;

    static Permutation identity(std::size_t n);
    std::size_t size() const { return image.size(); }
    bool is_valid() const;

    ExactMatrix to_matrix() const;  // P with P(i, image[i]) = 1

    /// P^T * M * P: entry (a,b) of M lands at (image[a], image[b]).
    ExactMatrix conjugate(const ExactMatrix& m) const;

    Permutation inverse() const;
    /// this applied after other.
    Permutation compose(const Permutation& other) const;
};

/// Relabels rows by rp and columns by cp: result(rp[a], cp[b]) = m(a, b).
ExactMatrix permute_rows_cols(const ExactMatrix& m, const Permutation& rp,
                              const Permutation& cp);

}  // namespace weyr

#endif
