#ifndef WEYR_ELIMINATION_HPP
#define WEYR_ELIMINATION_HPP

#include <cstddef>
#include <vector>

#include "weyr/matrix.hpp"

namespace weyr {

/// Result of row reduction over the exact complex rationals. pivot_cols
/// lists the pivot column of each nonzero row of the echelon form, in
/// order; rank == pivot_cols.size().
struct EchelonForm {
    ExactMatrix reduced;  // reduced row echelon form
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

/// Serial reference implementation. Plain rational Gauss-Jordan with
/// column order fixed left-to-right, so rank of any column prefix can be
/// read off pivot_cols.
EchelonForm echelon_serial(ExactMatrix m);

/// OpenMP variant: identical pivot choice and arithmetic, row updates
/// distributed across threads. Must agree with echelon_serial bit-exactly.
EchelonForm echelon_omp(ExactMatrix m);

std::size_t rank_serial(const ExactMatrix& m);
std::size_t rank_omp(const ExactMatrix& m);

/// Default rank used by the library.
inline std::size_t exact_rank(const ExactMatrix& m) { return rank_omp(m); }

/// Ranks of the prefixes m[:, :split] and m, from one elimination.
struct SplitRank {
    std::size_t prefix_rank;
    std::size_t full_rank;
};
SplitRank split_rank(const ExactMatrix& m, std::size_t split);

/// Basis of the exact right nullspace, one matrix column per basis vector.
std::vector<std::vector<Scalar>> exact_nullspace(const ExactMatrix& m);

}  // namespace weyr

#endif
