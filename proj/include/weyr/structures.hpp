#ifndef WEYR_STRUCTURES_HPP
#define WEYR_STRUCTURES_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "weyr/matrix.hpp"

namespace weyr {

/// One eigenvalue with its descending Jordan block sizes.
struct EigenBlock {
    Scalar value;
    std::vector<std::size_t> sizes;  // n_1 >= n_2 >= ... >= 1
};

/// Segre characteristic: per-eigenvalue descending block sizes, with
/// pairwise distinct eigenvalues. Validated on construction.
struct SegreStructure {
    std::vector<EigenBlock> eigenvalues;

    void validate() const;  // throws std::invalid_argument
    std::size_t total_size() const;
};

/// Weyr characteristic s_1 >= s_2 >= ... >= s_k >= 1.
struct WeyrCharacteristic {
    std::vector<std::size_t> s;
};

/// Strip label (i, j): family i of equal-size Jordan blocks, position j
/// within that family's blocks. 1-based, matching the usual notation.
struct StripIndex {
    std::size_t family;
    std::size_t position;
    friend bool operator==(const StripIndex&, const StripIndex&) = default;
};

enum class StripOrder { RowMajor, ColumnMajor };

/// Distinct block sizes m_1 > ... > m_t with multiplicities r_i, derived
/// from one eigenvalue's descending size list.
struct FamilyDecomposition {
    std::vector<std::size_t> distinct_sizes;    // m_i
    std::vector<std::size_t> multiplicities;    // r_i
    static FamilyDecomposition from_sizes(const std::vector<std::size_t>& sizes);
};

ExactMatrix build_jordan(const SegreStructure& s);

WeyrCharacteristic weyr_char_from_segre(const std::vector<std::size_t>& sizes);
std::vector<std::size_t> segre_from_weyr(const WeyrCharacteristic& w);

struct WeyrForm {
    ExactMatrix matrix;
    BlockPartition partition;  // strip widths, square
};

WeyrForm build_weyr(const SegreStructure& s);

/// Strip widths of the Weyr form of one eigenvalue (column-major strip
/// order), i.e. the square partition refining each s_j-sized layer.
std::vector<std::size_t> weyr_strip_widths(const std::vector<std::size_t>& sizes);

/// P with P^T * build_jordan(s) * P == build_weyr(s).matrix, exactly.
Permutation jordan_to_weyr_permutation(const SegreStructure& s);

/// Strip labels of a single-eigenvalue structure in row-major
/// (lexicographic) or column-major (by position, then family) order.
std::vector<StripIndex> strip_index_sequence(const SegreStructure& s,
                                             StripOrder order);

/// s_k = rank((A - lambda I)^(k-1)) - rank((A - lambda I)^k), by exact
/// elimination; empty when lambda is not an eigenvalue.
WeyrCharacteristic weyr_char_of_matrix(const ExactMatrix& a, const Scalar& lambda);

}  // namespace weyr

#endif
