#ifndef WEYR_DEFORMATIONS_HPP
#define WEYR_DEFORMATIONS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "weyr/matrix.hpp"
#include "weyr/patterns.hpp"
#include "weyr/structures.hpp"

namespace weyr {

/// A deformation template: canonical base matrix plus the positions of
/// the independent parameters, with a conformal block partition.
struct Template {
    ExactMatrix base;
    PatternMatrix pattern;
    BlockPartition partition;

    std::size_t param_count() const { return pattern.param_count(); }
    void check() const;  // dims agree, partition sums to them
};

/// Deformation of a matrix pair. Parameter ids run globally: first
/// matrix row-major, then second.
struct TemplatePair {
    Template first;
    Template second;

    std::size_t param_count() const {
        return first.param_count() + second.param_count();
    }
    /// Renumbers ids globally (first, then second).
    void renumber();
};

enum class WeyrRoute { Permute, Direct };

/// Pencil structure: left/right minimal index lists, a regular part with
/// finite eigenvalues, and the sizes of the infinite-eigenvalue part.
struct PencilStructure {
    std::vector<std::size_t> left_indices;   // p_1 <= ... <= p_l, each >= 1
    std::vector<std::size_t> right_indices;  // q_1 >= ... >= q_r, each >= 1
    SegreStructure regular;                  // may be empty
    std::vector<std::size_t> infinite;       // descending sizes, may be empty

    void validate() const;
    std::pair<std::size_t, std::size_t> dimensions() const;  // (m, n)
};

/// Contragredient structure: nonsingular regular part, left/right minimal
/// indices, and the two zero-eigenvalue parts (one on each composition
/// order of the pair).
struct ContraStructure {
    SegreStructure regular;                  // all eigenvalues nonzero
    std::vector<std::size_t> left_indices;   // p_1 >= ... >= p_l, each >= 1
    std::vector<std::size_t> ab_zero;        // descending, may be empty
    std::vector<std::size_t> ba_zero;        // descending, may be empty
    std::vector<std::size_t> right_indices;  // q_1 <= ... <= q_r, each >= 1

    void validate() const;
    std::pair<std::size_t, std::size_t> dimensions() const;  // (m, n)
};

/// F_r and G_r: r x (r-1) single-line matrices of the singular summands.
ExactMatrix f_single(std::size_t r);
ExactMatrix g_single(std::size_t r);

/// Arnold's deformation of a Jordan canonical matrix: corner patterns
/// within each eigenvalue, zero across eigenvalues.
Template deform_jordan(const SegreStructure& s);

/// Block triangular deformation of the Weyr canonical matrix. Permute
/// applies the Jordan-to-Weyr permutation to deform_jordan; Direct places
/// full star blocks by the strip rule. Identical supports either way.
Template deform_weyr(const SegreStructure& s, WeyrRoute route = WeyrRoute::Direct);

/// Block triangular deformation of a pencil in the Weyr-ordered canonical
/// form (singular left family, regular, infinite, singular right family).
TemplatePair deform_pencil(const PencilStructure& ps);

/// The Kronecker-ordered variant (Jordan regular parts); permutationally
/// equivalent to deform_pencil.
TemplatePair deform_pencil_kronecker(const PencilStructure& ps);

/// Row/column relabelings carrying the Kronecker-ordered deformation onto
/// the Weyr-ordered one (same row and column maps for both matrices).
struct PencilLayoutMaps {
    Permutation row_map;
    Permutation col_map;
};
PencilLayoutMaps pencil_layout_maps(const PencilStructure& ps);

/// Deformation of the contragredient canonical pair. The right singular
/// summands are carried as (G_q^T, F_q), which is the permutation-
/// equivalent representative the template layout is built around.
TemplatePair deform_contragredient(const ContraStructure& cs);

/// Result of the triangularizing permutations: row_map acts on rows of
/// the first matrix and columns of the second; col_map the other way.
struct TriangularizedPair {
    TemplatePair pair;
    Permutation row_map;
    Permutation col_map;
};

TriangularizedPair triangularize_contragredient(const TemplatePair& tp,
                                                const ContraStructure& cs);

/// Certifying partitions for the triangularized pair: the first matrix is
/// upper block triangular, the second lower, with every block all-zero or
/// all-parameter. Singular summands contribute singleton groups padded
/// with one empty group so row and column group counts agree.
struct ContraPartitions {
    BlockPartition first;
    BlockPartition second;
};
ContraPartitions contra_triangular_partitions(const ContraStructure& cs);

/// Sorted copies of the index lists for callers holding unordered data;
/// returns true when anything had to be reordered.
bool normalize_pencil(PencilStructure& ps);
bool normalize_contra(ContraStructure& cs);

}  // namespace weyr

#endif
