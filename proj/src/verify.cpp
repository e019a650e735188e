#include "weyr/verify.hpp"

#include <numeric>
#include <stdexcept>

#include "weyr/elimination.hpp"

namespace weyr {

namespace {

// Column-major vectorization index.
std::size_t vec_idx(std::size_t r, std::size_t c, std::size_t rows) {
    return r + c * rows;
}

// Adds the coefficients of X |-> A X (left) or X |-> X A (right, negated
// when sub is set) into the block of `out` at (row0, col0), where X is
// rows x cols and the target is vectorized column-major.
void add_left_mul(ExactMatrix& out, std::size_t row0, std::size_t col0,
                  const ExactMatrix& a, std::size_t xcols, bool negate) {
    // (A X)_{ij} depends on X_{kj} with coefficient A_{ik}.
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& v = a.at(i, k);
            if (v.is_zero()) continue;
            for (std::size_t j = 0; j < xcols; ++j) {
                Scalar& slot = out.at(row0 + vec_idx(i, j, a.rows()),
                                      col0 + vec_idx(k, j, a.cols()));
                slot = negate ? slot - v : slot + v;
            }
        }
}

void add_right_mul(ExactMatrix& out, std::size_t row0, std::size_t col0,
                   const ExactMatrix& a, std::size_t xrows, bool negate) {
    // (X A)_{ij} depends on X_{ik} with coefficient A_{kj}.
    for (std::size_t k = 0; k < a.rows(); ++k)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& v = a.at(k, j);
            if (v.is_zero()) continue;
            for (std::size_t i = 0; i < xrows; ++i) {
                Scalar& slot = out.at(row0 + vec_idx(i, j, xrows),
                                      col0 + vec_idx(i, k, xrows));
                slot = negate ? slot - v : slot + v;
            }
        }
}

std::vector<std::size_t> star_target_indices(const PatternMatrix& pat,
                                             std::size_t row_offset) {
    std::vector<std::size_t> out;
    for (const auto& [r, c] : pat.support())
        out.push_back(row_offset + vec_idx(r, c, pat.rows()));
    return out;
}

VersalityReport certify_impl(const ExactMatrix& tangent,
                             const std::vector<std::size_t>& star_rows,
                             std::size_t total_dim, std::size_t param_count) {
    ExactMatrix aug(total_dim, tangent.cols() + star_rows.size());
    aug.paste(0, 0, tangent);
    for (std::size_t k = 0; k < star_rows.size(); ++k)
        aug.at(star_rows[k], tangent.cols() + k) = Scalar(1);

    SplitRank sr = split_rank(aug, tangent.cols());
    VersalityReport rep;
    rep.total_dim = total_dim;
    rep.tangent_rank = sr.prefix_rank;
    rep.param_count = param_count;
    rep.versal = sr.full_rank == total_dim;
    rep.miniversal = rep.versal && param_count == total_dim - sr.prefix_rank;
    return rep;
}

}  // namespace

ExactMatrix tangent_matrix(const ExactMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("similarity tangent map needs a square matrix");
    std::size_t n = a.rows();
    ExactMatrix t(n * n, n * n);
    add_left_mul(t, 0, 0, a, n, false);
    add_right_mul(t, 0, 0, a, n, true);
    return t;
}

ExactMatrix tangent_matrix(const ExactMatrix& a, const ExactMatrix& b,
                           TangentKind kind) {
    if (kind == TangentKind::Similarity)
        throw std::invalid_argument("similarity tangent map takes one matrix");
    std::size_t m = a.rows(), n = a.cols();
    if (kind == TangentKind::PencilEquivalence) {
        if (b.rows() != m || b.cols() != n)
            throw std::invalid_argument("pencil matrices must share dimensions");
        ExactMatrix t(2 * m * n, m * m + n * n);
        // First block row: AR - SA; second: BR - SB. S columns first.
        add_right_mul(t, 0, 0, a, m, true);
        add_left_mul(t, 0, m * m, a, n, false);
        add_right_mul(t, m * n, 0, b, m, true);
        add_left_mul(t, m * n, m * m, b, n, false);
        return t;
    }
    // Contragredient: a is m x n, b is n x m; map (AR - SA, BS - RB).
    if (b.rows() != n || b.cols() != m)
        throw std::invalid_argument(
            "contragredient matrices must have transposed dimensions");
    ExactMatrix t(2 * m * n, m * m + n * n);
    add_right_mul(t, 0, 0, a, m, true);
    add_left_mul(t, 0, m * m, a, n, false);
    add_left_mul(t, m * n, 0, b, m, false);
    add_right_mul(t, m * n, m * m, b, n, true);
    return t;
}

VersalityReport certify(const Template& t) {
    t.check();
    ExactMatrix tan = tangent_matrix(t.base);
    auto stars = star_target_indices(t.pattern, 0);
    return certify_impl(tan, stars, t.base.rows() * t.base.cols(),
                        t.param_count());
}

VersalityReport certify(const TemplatePair& tp, TangentKind kind) {
    tp.first.check();
    tp.second.check();
    ExactMatrix tan = tangent_matrix(tp.first.base, tp.second.base, kind);
    std::size_t mn = tp.first.base.rows() * tp.first.base.cols();
    auto stars = star_target_indices(tp.first.pattern, 0);
    auto stars2 = star_target_indices(tp.second.pattern, mn);
    stars.insert(stars.end(), stars2.begin(), stars2.end());
    return certify_impl(tan, stars, 2 * mn, tp.param_count());
}

std::vector<ExactMatrix> centralizer_basis(const ExactMatrix& a) {
    std::size_t n = a.rows();
    auto null_vecs = exact_nullspace(tangent_matrix(a));
    std::vector<ExactMatrix> basis;
    for (const auto& v : null_vecs) {
        ExactMatrix x(n, n);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t r = 0; r < n; ++r) x.at(r, c) = v[vec_idx(r, c, n)];
        basis.push_back(std::move(x));
    }
    return basis;
}

namespace {

struct GroupIndex {
    std::vector<std::size_t> group_of;  // entry index -> group number
};

GroupIndex index_groups(const std::vector<std::size_t>& sizes, std::size_t total,
                        const char* what) {
    GroupIndex gi;
    gi.group_of.reserve(total);
    for (std::size_t g = 0; g < sizes.size(); ++g)
        for (std::size_t k = 0; k < sizes[g]; ++k) gi.group_of.push_back(g);
    if (gi.group_of.size() != total)
        throw std::invalid_argument(std::string(what) +
                                    " partition does not sum to the dimension");
    return gi;
}

bool side_ok(std::size_t rg, std::size_t cg, Orientation o) {
    return o == Orientation::Lower ? rg >= cg : rg <= cg;
}

}  // namespace

bool is_block_triangular(const PatternMatrix& pattern,
                         const BlockPartition& partition, Orientation o) {
    if (partition.row_sizes.size() != partition.col_sizes.size())
        throw std::invalid_argument(
            "partition must have equally many row and column groups");
    GroupIndex rg = index_groups(partition.row_sizes, pattern.rows(), "row");
    GroupIndex cg = index_groups(partition.col_sizes, pattern.cols(), "column");

    std::size_t g = partition.row_sizes.size();
    // 0 = unseen, 1 = saw zero, 2 = saw param, 3 = mixed
    std::vector<unsigned char> seen(g * g, 0);
    for (std::size_t r = 0; r < pattern.rows(); ++r)
        for (std::size_t c = 0; c < pattern.cols(); ++c) {
            unsigned char& s = seen[rg.group_of[r] * g + cg.group_of[c]];
            s |= pattern.is_param(r, c) ? 2 : 1;
        }
    for (std::size_t br = 0; br < g; ++br)
        for (std::size_t bc = 0; bc < g; ++bc) {
            unsigned char s = seen[br * g + bc];
            if (s == 3) return false;
            if (s == 2 && !side_ok(br, bc, o)) return false;
        }
    return true;
}

bool is_block_triangular(const ExactMatrix& m, const BlockPartition& partition,
                         Orientation o) {
    if (partition.row_sizes.size() != partition.col_sizes.size())
        throw std::invalid_argument(
            "partition must have equally many row and column groups");
    GroupIndex rg = index_groups(partition.row_sizes, m.rows(), "row");
    GroupIndex cg = index_groups(partition.col_sizes, m.cols(), "column");
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero() &&
                !side_ok(rg.group_of[r], cg.group_of[c], o))
                return false;
    return true;
}

std::size_t codim_similarity_formula(const SegreStructure& s) {
    s.validate();
    std::size_t total = 0;
    for (const auto& eb : s.eigenvalues)
        for (std::size_t a : eb.sizes)
            for (std::size_t b : eb.sizes) total += std::min(a, b);
    return total;
}

}  // namespace weyr
