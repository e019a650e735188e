#ifndef WEYR_VERIFY_HPP
#define WEYR_VERIFY_HPP

#include <cstddef>
#include <vector>

#include "weyr/deformations.hpp"
#include "weyr/matrix.hpp"
#include "weyr/patterns.hpp"

namespace weyr {

enum class TangentKind { Similarity, PencilEquivalence, Contragredient };

/// Matrix of the tangent map on column-major vectorized inputs.
/// Similarity: S |-> AS - SA, n^2 x n^2.
/// Pencil: (S, R) |-> (AR - SA, BR - SB), 2mn x (m^2 + n^2), S columns first.
/// Contragredient: (S, R) |-> (AR - SA, BS - RB), same shape.
ExactMatrix tangent_matrix(const ExactMatrix& a);
ExactMatrix tangent_matrix(const ExactMatrix& a, const ExactMatrix& b,
                           TangentKind kind);

struct VersalityReport {
    std::size_t total_dim = 0;
    std::size_t tangent_rank = 0;
    std::size_t param_count = 0;
    bool versal = false;
    bool miniversal = false;
};

/// Rank certificate: versal iff [tangent | star unit vectors] spans the
/// target; miniversal iff additionally param_count equals the nullity of
/// the tangent map. Both ranks come from a single elimination.
VersalityReport certify(const Template& t);
VersalityReport certify(const TemplatePair& tp, TangentKind kind);

/// Exact basis of {X : AX = XA}, via the nullspace of the similarity
/// tangent matrix.
std::vector<ExactMatrix> centralizer_basis(const ExactMatrix& a);

enum class Orientation { Lower, Upper };

/// Commutants of Weyr canonical matrices are block triangular with this
/// orientation under the Weyr partition.
inline constexpr Orientation kCentralizerOrientation = Orientation::Upper;

/// True iff every partition block of the pattern is all-zero or
/// all-parameter and the parameter blocks sit on the allowed side of the
/// block diagonal. Throws on a non-conformal partition (sizes must sum to
/// the pattern dimensions with equally many row and column groups).
bool is_block_triangular(const PatternMatrix& pattern,
                         const BlockPartition& partition, Orientation o);

/// Same test for an exact matrix: nonzero entries confined to all-nonzero-
/// allowed blocks on one side of the block diagonal (blocks may be sparse;
/// only the side condition is checked).
bool is_block_triangular(const ExactMatrix& m, const BlockPartition& partition,
                         Orientation o);

/// Classical centralizer dimension: sum over eigenvalues of
/// sum_{i,j} min(n_i, n_j).
std::size_t codim_similarity_formula(const SegreStructure& s);

}  // namespace weyr

#endif
