#include "weyr/deformations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace weyr {

namespace {

std::size_t sum(const std::vector<std::size_t>& v) {
    return std::accumulate(v.begin(), v.end(), std::size_t{0});
}

std::vector<std::size_t> offsets_of(const std::vector<std::size_t>& sizes,
                                    std::size_t base) {
    std::vector<std::size_t> off(sizes.size());
    std::size_t acc = base;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        off[i] = acc;
        acc += sizes[i];
    }
    return off;
}

SegreStructure zero_eig(const std::vector<std::size_t>& sizes) {
    SegreStructure s;
    if (!sizes.empty()) s.eigenvalues.push_back({Scalar(0), sizes});
    return s;
}

// Arnold's corner-pattern matrix for one eigenvalue's sizes, placed at
// (r0, c0) on the Jordan-block grid.
void place_arnold(PatternMatrix& pat, const std::vector<std::size_t>& sizes,
                  std::size_t r0, std::size_t c0) {
    auto roff = offsets_of(sizes, r0);
    auto coff = offsets_of(sizes, c0);
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (std::size_t j = 0; j < sizes.size(); ++j)
            pat.paste(roff[i], coff[j], t_block(sizes[i], sizes[j]));
}

// Star-block pattern of the Weyr deformation for one eigenvalue, on the
// column-major strip grid: strips (i, j) and (i', j') couple iff
// (i <= i' and j == m_i) or (i > i' and j' == 1).
void place_weyr_direct(PatternMatrix& pat, const std::vector<std::size_t>& sizes,
                       std::size_t r0, std::size_t c0) {
    SegreStructure s = zero_eig(sizes);
    if (s.eigenvalues.empty()) return;
    auto fd = FamilyDecomposition::from_sizes(sizes);
    auto strips = strip_index_sequence(s, StripOrder::ColumnMajor);
    std::vector<std::size_t> widths = weyr_strip_widths(sizes);
    auto roff = offsets_of(widths, r0);
    auto coff = offsets_of(widths, c0);
    for (std::size_t a = 0; a < strips.size(); ++a) {
        std::size_t i = strips[a].family, j = strips[a].position;
        for (std::size_t b = 0; b < strips.size(); ++b) {
            std::size_t ip = strips[b].family, jp = strips[b].position;
            bool star = (i <= ip && j == fd.distinct_sizes[i - 1]) ||
                        (i > ip && jp == 1);
            if (star) pat.paste(roff[a], coff[b], star_block(widths[a], widths[b]));
        }
    }
}

void fill_star_col(PatternMatrix& pat, std::size_t r0, std::size_t rows,
                   std::size_t col) {
    for (std::size_t r = 0; r < rows; ++r) pat.set_param(r0 + r, col);
}

void fill_star_row(PatternMatrix& pat, std::size_t row, std::size_t c0,
                   std::size_t cols) {
    for (std::size_t c = 0; c < cols; ++c) pat.set_param(row, c0 + c);
}

Permutation flip(std::size_t n) {
    Permutation p;
    p.image.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.image[i] = n - 1 - i;
    return p;
}

// Extends a local permutation to [offset, offset + k) of an identity map.
void embed(Permutation& global, std::size_t offset, const Permutation& local) {
    for (std::size_t i = 0; i < local.size(); ++i)
        global.image[offset + i] = offset + local.image[i];
}

std::vector<std::size_t> concat_strip_widths(const SegreStructure& s) {
    std::vector<std::size_t> widths;
    for (const auto& eb : s.eigenvalues) {
        auto w = weyr_strip_widths(eb.sizes);
        widths.insert(widths.end(), w.begin(), w.end());
    }
    return widths;
}

}  // namespace

void Template::check() const {
    if (base.rows() != pattern.rows() || base.cols() != pattern.cols())
        throw std::invalid_argument("template base/pattern size mismatch");
    if (sum(partition.row_sizes) != base.rows() ||
        sum(partition.col_sizes) != base.cols())
        throw std::invalid_argument("template partition does not sum to its size");
}

void TemplatePair::renumber() {
    // Global numbering: first matrix row-major, then second.
    first.pattern.renumber();
    second.pattern.renumber();
    // second's ids are shifted implicitly by readers via first.param_count();
    // id grids stay local per matrix, globalized at serialization time.
}

ExactMatrix f_single(std::size_t r) {
    if (r == 0) throw std::invalid_argument("singular summand index must be >= 1");
    ExactMatrix m(r, r - 1);
    for (std::size_t i = 0; i + 1 < r; ++i) m.at(i, i) = Scalar(1);
    return m;
}

ExactMatrix g_single(std::size_t r) {
    if (r == 0) throw std::invalid_argument("singular summand index must be >= 1");
    ExactMatrix m(r, r - 1);
    for (std::size_t i = 1; i < r; ++i) m.at(i, i - 1) = Scalar(1);
    return m;
}

Template deform_jordan(const SegreStructure& s) {
    s.validate();
    Template t;
    t.base = build_jordan(s);
    t.pattern = PatternMatrix(t.base.rows(), t.base.cols());
    std::vector<std::size_t> block_sizes;
    std::size_t off = 0;
    for (const auto& eb : s.eigenvalues) {
        place_arnold(t.pattern, eb.sizes, off, off);
        off += sum(eb.sizes);
        block_sizes.insert(block_sizes.end(), eb.sizes.begin(), eb.sizes.end());
    }
    t.pattern.renumber();
    t.partition = BlockPartition::square(block_sizes);
    return t;
}

Template deform_weyr(const SegreStructure& s, WeyrRoute route) {
    s.validate();
    WeyrForm wf = build_weyr(s);
    Template t;
    t.base = wf.matrix;
    t.partition = wf.partition;
    if (route == WeyrRoute::Permute) {
        Template j = deform_jordan(s);
        Permutation p = jordan_to_weyr_permutation(s);
        t.pattern = permute_pattern(j.pattern, p, p);
    } else {
        t.pattern = PatternMatrix(t.base.rows(), t.base.cols());
        std::size_t off = 0;
        for (const auto& eb : s.eigenvalues) {
            place_weyr_direct(t.pattern, eb.sizes, off, off);
            off += sum(eb.sizes);
        }
        t.pattern.renumber();
    }
    return t;
}

void PencilStructure::validate() const {
    for (std::size_t i = 0; i < left_indices.size(); ++i) {
        if (left_indices[i] == 0)
            throw std::invalid_argument("left minimal index must be >= 1");
        if (i > 0 && left_indices[i] < left_indices[i - 1])
            throw std::invalid_argument(
                "left minimal indices must be nondecreasing");
    }
    for (std::size_t i = 0; i < right_indices.size(); ++i) {
        if (right_indices[i] == 0)
            throw std::invalid_argument("right minimal index must be >= 1");
        if (i > 0 && right_indices[i] > right_indices[i - 1])
            throw std::invalid_argument(
                "right minimal indices must be nonincreasing");
    }
    if (!regular.eigenvalues.empty()) regular.validate();
    for (std::size_t i = 0; i < infinite.size(); ++i) {
        if (infinite[i] == 0)
            throw std::invalid_argument("infinite part block size must be >= 1");
        if (i > 0 && infinite[i] > infinite[i - 1])
            throw std::invalid_argument("infinite part sizes must be nonincreasing");
    }
}

std::pair<std::size_t, std::size_t> PencilStructure::dimensions() const {
    std::size_t nj = regular.total_size();
    std::size_t n0 = sum(infinite);
    std::size_t m = sum(left_indices) - left_indices.size() + nj + n0 +
                    sum(right_indices);
    std::size_t n = sum(left_indices) + nj + n0 + sum(right_indices) -
                    right_indices.size();
    return {m, n};
}

namespace {

// Section offsets for one layout of a pencil template.
struct PencilLayout {
    std::vector<std::size_t> row_groups, col_groups;  // group sizes in order
    std::vector<std::size_t> p_row, p_col;            // per left summand
    std::vector<std::size_t> q_row, q_col;            // per right summand
    std::size_t reg_row = 0, reg_col = 0, inf_row = 0, inf_col = 0;
    std::size_t nj = 0, n0 = 0;
    std::size_t rows = 0, cols = 0;
};

PencilLayout weyr_layout(const PencilStructure& ps) {
    PencilLayout L;
    L.nj = ps.regular.total_size();
    L.n0 = sum(ps.infinite);
    std::size_t r = 0, c = 0;
    for (std::size_t p : ps.left_indices) {
        L.p_row.push_back(r);
        L.p_col.push_back(c);
        r += p - 1;
        c += p;
    }
    L.reg_row = r;
    L.reg_col = c;
    r += L.nj;
    c += L.nj;
    L.inf_row = r;
    L.inf_col = c;
    r += L.n0;
    c += L.n0;
    for (std::size_t q : ps.right_indices) {
        L.q_row.push_back(r);
        L.q_col.push_back(c);
        r += q;
        c += q - 1;
    }
    L.rows = r;
    L.cols = c;
    return L;
}

PencilLayout kronecker_layout(const PencilStructure& ps) {
    PencilLayout L;
    L.nj = ps.regular.total_size();
    L.n0 = sum(ps.infinite);
    L.p_row.resize(ps.left_indices.size());
    L.p_col.resize(ps.left_indices.size());
    L.q_row.resize(ps.right_indices.size());
    L.q_col.resize(ps.right_indices.size());
    std::size_t r = 0, c = 0;
    for (std::size_t a = ps.right_indices.size(); a-- > 0;) {
        L.q_row[a] = r;
        L.q_col[a] = c;
        r += ps.right_indices[a];
        c += ps.right_indices[a] - 1;
    }
    L.reg_row = r;
    L.reg_col = c;
    r += L.nj;
    c += L.nj;
    L.inf_row = r;
    L.inf_col = c;
    r += L.n0;
    c += L.n0;
    for (std::size_t a = ps.left_indices.size(); a-- > 0;) {
        L.p_row[a] = r;
        L.p_col[a] = c;
        r += ps.left_indices[a] - 1;
        c += ps.left_indices[a];
    }
    L.rows = r;
    L.cols = c;
    return L;
}

}  // namespace

TemplatePair deform_pencil(const PencilStructure& ps) {
    ps.validate();
    PencilLayout L = weyr_layout(ps);
    const auto& p = ps.left_indices;
    const auto& q = ps.right_indices;

    TemplatePair tp;
    tp.first.base = ExactMatrix(L.rows, L.cols);
    tp.second.base = ExactMatrix(L.rows, L.cols);
    tp.first.pattern = PatternMatrix(L.rows, L.cols);
    tp.second.pattern = PatternMatrix(L.rows, L.cols);

    // Bases: (F^T, G^T) family, (I, Weyr regular), (Weyr zero, I), (F, G).
    for (std::size_t i = 0; i < p.size(); ++i) {
        tp.first.base.paste(L.p_row[i], L.p_col[i], f_single(p[i]).transpose());
        tp.second.base.paste(L.p_row[i], L.p_col[i], g_single(p[i]).transpose());
    }
    if (L.nj) {
        tp.first.base.paste(L.reg_row, L.reg_col, ExactMatrix::identity(L.nj));
        tp.second.base.paste(L.reg_row, L.reg_col, build_weyr(ps.regular).matrix);
    }
    if (L.n0) {
        tp.first.base.paste(L.inf_row, L.inf_col,
                            build_weyr(zero_eig(ps.infinite)).matrix);
        tp.second.base.paste(L.inf_row, L.inf_col, ExactMatrix::identity(L.n0));
    }
    for (std::size_t j = 0; j < q.size(); ++j) {
        tp.first.base.paste(L.q_row[j], L.q_col[j], f_single(q[j]));
        tp.second.base.paste(L.q_row[j], L.q_col[j], g_single(q[j]));
    }

    // First matrix pattern: the infinite part's Weyr deformation, plus
    // last-column couplings into the left family and last-row couplings
    // out of the right family.
    place_weyr_direct(tp.first.pattern, ps.infinite, L.inf_row, L.inf_col);
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::size_t last_col = L.p_col[i] + p[i] - 1;
        fill_star_col(tp.first.pattern, L.inf_row, L.n0, last_col);
        fill_star_col(tp.first.pattern, L.inf_row + L.n0, sum(q), last_col);
    }
    for (std::size_t j = 0; j < q.size(); ++j)
        fill_star_row(tp.first.pattern, L.q_row[j] + q[j] - 1, L.inf_col, L.n0);

    // Second matrix pattern: regular Weyr deformation, first-line
    // couplings, and the in-family zero-tail couplings.
    {
        std::size_t off = 0;
        for (const auto& eb : ps.regular.eigenvalues) {
            place_weyr_direct(tp.second.pattern, eb.sizes, L.reg_row + off,
                              L.reg_col + off);
            off += sum(eb.sizes);
        }
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        fill_star_col(tp.second.pattern, L.reg_row, L.nj, L.p_col[i]);
        for (std::size_t j = 0; j < i; ++j)
            tp.second.pattern.paste(L.p_row[i], L.p_col[j],
                                    zt_block(p[i] - 1, p[j]));
    }
    std::size_t p_cols_total = sum(p);
    for (std::size_t j = 0; j < q.size(); ++j) {
        fill_star_row(tp.second.pattern, L.q_row[j], 0, p_cols_total);
        fill_star_row(tp.second.pattern, L.q_row[j], L.reg_col, L.nj);
        for (std::size_t i = 0; i < j; ++i)
            tp.second.pattern.paste(L.q_row[j], L.q_col[i],
                                    z_block(q[j], q[i] - 1));
    }

    tp.first.pattern.renumber();
    tp.second.pattern.renumber();

    // Partition: strip widths on the regular parts, singletons elsewhere.
    auto& part1 = tp.first.partition;
    for (std::size_t pi : p) part1.row_sizes.insert(part1.row_sizes.end(), pi - 1, 1);
    auto reg_w = concat_strip_widths(ps.regular);
    auto inf_w = weyr_strip_widths(ps.infinite.empty() ? std::vector<std::size_t>{}
                                                       : ps.infinite);
    if (ps.infinite.empty()) inf_w.clear();
    part1.row_sizes.insert(part1.row_sizes.end(), reg_w.begin(), reg_w.end());
    part1.row_sizes.insert(part1.row_sizes.end(), inf_w.begin(), inf_w.end());
    for (std::size_t qi : q) part1.row_sizes.insert(part1.row_sizes.end(), qi, 1);
    for (std::size_t pi : p) part1.col_sizes.insert(part1.col_sizes.end(), pi, 1);
    part1.col_sizes.insert(part1.col_sizes.end(), reg_w.begin(), reg_w.end());
    part1.col_sizes.insert(part1.col_sizes.end(), inf_w.begin(), inf_w.end());
    for (std::size_t qi : q) part1.col_sizes.insert(part1.col_sizes.end(), qi - 1, 1);
    tp.second.partition = part1;

    tp.first.check();
    tp.second.check();
    return tp;
}

TemplatePair deform_pencil_kronecker(const PencilStructure& ps) {
    ps.validate();
    PencilLayout L = kronecker_layout(ps);
    const auto& p = ps.left_indices;
    const auto& q = ps.right_indices;

    TemplatePair tp;
    tp.first.base = ExactMatrix(L.rows, L.cols);
    tp.second.base = ExactMatrix(L.rows, L.cols);
    tp.first.pattern = PatternMatrix(L.rows, L.cols);
    tp.second.pattern = PatternMatrix(L.rows, L.cols);

    for (std::size_t j = 0; j < q.size(); ++j) {
        tp.first.base.paste(L.q_row[j], L.q_col[j], f_single(q[j]));
        tp.second.base.paste(L.q_row[j], L.q_col[j], g_single(q[j]));
    }
    if (L.nj) {
        tp.first.base.paste(L.reg_row, L.reg_col, ExactMatrix::identity(L.nj));
        tp.second.base.paste(L.reg_row, L.reg_col, build_jordan(ps.regular));
    }
    if (L.n0) {
        tp.first.base.paste(L.inf_row, L.inf_col,
                            build_jordan(zero_eig(ps.infinite)));
        tp.second.base.paste(L.inf_row, L.inf_col, ExactMatrix::identity(L.n0));
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        tp.first.base.paste(L.p_row[i], L.p_col[i], f_single(p[i]).transpose());
        tp.second.base.paste(L.p_row[i], L.p_col[i], g_single(p[i]).transpose());
    }

    // First matrix: Jordan deformation of the infinite part, last-row
    // couplings from the right family, last-column couplings into the
    // left family.
    if (L.n0) place_arnold(tp.first.pattern, ps.infinite, L.inf_row, L.inf_col);
    for (std::size_t j = 0; j < q.size(); ++j)
        fill_star_row(tp.first.pattern, L.q_row[j] + q[j] - 1, L.inf_col, L.n0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::size_t last_col = L.p_col[i] + p[i] - 1;
        fill_star_col(tp.first.pattern, 0, sum(q), last_col);
        fill_star_col(tp.first.pattern, L.inf_row, L.n0, last_col);
    }

    // Second matrix: Jordan deformation of the regular part, first-line
    // couplings, zero-tail couplings above the family diagonals.
    {
        std::size_t off = 0;
        for (const auto& eb : ps.regular.eigenvalues) {
            place_arnold(tp.second.pattern, eb.sizes, L.reg_row + off,
                         L.reg_col + off);
            off += sum(eb.sizes);
        }
    }
    for (std::size_t j = 0; j < q.size(); ++j)
        fill_star_row(tp.second.pattern, L.q_row[j], L.reg_col, L.nj);
    std::size_t p_col_base = L.inf_col + L.n0;
    std::size_t p_cols_total = sum(p);
    for (std::size_t j = 0; j < q.size(); ++j)
        fill_star_row(tp.second.pattern, L.q_row[j], p_col_base, p_cols_total);
    for (std::size_t i = 0; i < p.size(); ++i)
        fill_star_col(tp.second.pattern, L.reg_row, L.nj, L.p_col[i]);
    // In-family couplings sit above the diagonal in this ordering.
    for (std::size_t a = 0; a < q.size(); ++a)
        for (std::size_t b = 0; b < a; ++b)
            tp.second.pattern.paste(L.q_row[a], L.q_col[b],
                                    z_block(q[a], q[b] - 1));
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            tp.second.pattern.paste(L.p_row[b], L.p_col[a],
                                    zt_block(p[b] - 1, p[a]));

    tp.first.pattern.renumber();
    tp.second.pattern.renumber();

    auto& part1 = tp.first.partition;
    for (std::size_t a = q.size(); a-- > 0;)
        part1.row_sizes.insert(part1.row_sizes.end(), q[a], 1);
    std::vector<std::size_t> reg_blocks, inf_blocks;
    for (const auto& eb : ps.regular.eigenvalues)
        reg_blocks.insert(reg_blocks.end(), eb.sizes.begin(), eb.sizes.end());
    part1.row_sizes.insert(part1.row_sizes.end(), reg_blocks.begin(), reg_blocks.end());
    part1.row_sizes.insert(part1.row_sizes.end(), ps.infinite.begin(), ps.infinite.end());
    for (std::size_t a = p.size(); a-- > 0;)
        part1.row_sizes.insert(part1.row_sizes.end(), p[a] - 1, 1);
    for (std::size_t a = q.size(); a-- > 0;)
        part1.col_sizes.insert(part1.col_sizes.end(), q[a] - 1, 1);
    part1.col_sizes.insert(part1.col_sizes.end(), reg_blocks.begin(), reg_blocks.end());
    part1.col_sizes.insert(part1.col_sizes.end(), ps.infinite.begin(), ps.infinite.end());
    for (std::size_t a = p.size(); a-- > 0;)
        part1.col_sizes.insert(part1.col_sizes.end(), p[a], 1);
    tp.second.partition = part1;

    tp.first.check();
    tp.second.check();
    return tp;
}

PencilLayoutMaps pencil_layout_maps(const PencilStructure& ps) {
    ps.validate();
    PencilLayout kr = kronecker_layout(ps);
    PencilLayout wy = weyr_layout(ps);
    PencilLayoutMaps maps;
    maps.row_map.image.resize(kr.rows);
    maps.col_map.image.resize(kr.cols);

    for (std::size_t i = 0; i < ps.left_indices.size(); ++i) {
        for (std::size_t k = 0; k + 1 < ps.left_indices[i]; ++k)
            maps.row_map.image[kr.p_row[i] + k] = wy.p_row[i] + k;
        for (std::size_t k = 0; k < ps.left_indices[i]; ++k)
            maps.col_map.image[kr.p_col[i] + k] = wy.p_col[i] + k;
    }
    for (std::size_t j = 0; j < ps.right_indices.size(); ++j) {
        for (std::size_t k = 0; k < ps.right_indices[j]; ++k)
            maps.row_map.image[kr.q_row[j] + k] = wy.q_row[j] + k;
        for (std::size_t k = 0; k + 1 < ps.right_indices[j]; ++k)
            maps.col_map.image[kr.q_col[j] + k] = wy.q_col[j] + k;
    }
    Permutation reg = jordan_to_weyr_permutation(ps.regular);
    for (std::size_t t = 0; t < reg.size(); ++t) {
        maps.row_map.image[kr.reg_row + t] = wy.reg_row + reg.image[t];
        maps.col_map.image[kr.reg_col + t] = wy.reg_col + reg.image[t];
    }
    Permutation inf = jordan_to_weyr_permutation(zero_eig(ps.infinite));
    for (std::size_t t = 0; t < inf.size(); ++t) {
        maps.row_map.image[kr.inf_row + t] = wy.inf_row + inf.image[t];
        maps.col_map.image[kr.inf_col + t] = wy.inf_col + inf.image[t];
    }
    return maps;
}

void ContraStructure::validate() const {
    if (!regular.eigenvalues.empty()) {
        regular.validate();
        for (const auto& eb : regular.eigenvalues)
            if (eb.value.is_zero())
                throw std::invalid_argument(
                    "regular part of a contragredient pair must be nonsingular");
    }
    for (std::size_t i = 0; i < left_indices.size(); ++i) {
        if (left_indices[i] == 0)
            throw std::invalid_argument("left minimal index must be >= 1");
        if (i > 0 && left_indices[i] > left_indices[i - 1])
            throw std::invalid_argument("left minimal indices must be nonincreasing");
    }
    for (std::size_t i = 0; i < right_indices.size(); ++i) {
        if (right_indices[i] == 0)
            throw std::invalid_argument("right minimal index must be >= 1");
        if (i > 0 && right_indices[i] < right_indices[i - 1])
            throw std::invalid_argument("right minimal indices must be nondecreasing");
    }
    auto check_desc = [](const std::vector<std::size_t>& v, const char* what) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) throw std::invalid_argument(std::string(what) + ": zero size");
            if (i > 0 && v[i] > v[i - 1])
                throw std::invalid_argument(std::string(what) +
                                            ": sizes must be nonincreasing");
        }
    };
    check_desc(ab_zero, "zero part of (I, J(0))");
    check_desc(ba_zero, "zero part of (J'(0), I)");
}

std::pair<std::size_t, std::size_t> ContraStructure::dimensions() const {
    std::size_t nj = regular.total_size();
    std::size_t m0 = sum(ab_zero), n0 = sum(ba_zero);
    std::size_t m = nj + sum(left_indices) + m0 + n0 + sum(right_indices) -
                    right_indices.size();
    std::size_t n = nj + sum(left_indices) - left_indices.size() + m0 + n0 +
                    sum(right_indices);
    return {m, n};
}

namespace {

// Section offsets of the contragredient layout. The m side carries rows
// of the first matrix and columns of the second; the n side the opposite.
struct ContraLayout {
    std::size_t nj, m0, n0;
    std::vector<std::size_t> p_m, p_n;  // per left summand
    std::vector<std::size_t> q_m, q_n;  // per right summand
    std::size_t reg_m = 0, reg_n = 0;
    std::size_t ab_m = 0, ab_n = 0, ba_m = 0, ba_n = 0;
    std::size_t m = 0, n = 0;
    std::vector<std::size_t> ab_off, ba_off;  // Jordan block offsets, local
};

ContraLayout contra_layout(const ContraStructure& cs) {
    ContraLayout L;
    L.nj = cs.regular.total_size();
    L.m0 = sum(cs.ab_zero);
    L.n0 = sum(cs.ba_zero);
    std::size_t m = L.nj, n = L.nj;
    for (std::size_t p : cs.left_indices) {
        L.p_m.push_back(m);
        L.p_n.push_back(n);
        m += p;
        n += p - 1;
    }
    L.ab_m = m;
    L.ab_n = n;
    m += L.m0;
    n += L.m0;
    L.ba_m = m;
    L.ba_n = n;
    m += L.n0;
    n += L.n0;
    for (std::size_t q : cs.right_indices) {
        L.q_m.push_back(m);
        L.q_n.push_back(n);
        m += q - 1;
        n += q;
    }
    L.m = m;
    L.n = n;
    L.ab_off = offsets_of(cs.ab_zero, 0);
    L.ba_off = offsets_of(cs.ba_zero, 0);
    return L;
}

}  // namespace

TemplatePair deform_contragredient(const ContraStructure& cs) {
    cs.validate();
    ContraLayout L = contra_layout(cs);
    const auto& p = cs.left_indices;
    const auto& q = cs.right_indices;
    const auto& ab = cs.ab_zero;
    const auto& ba = cs.ba_zero;

    TemplatePair tp;
    tp.first.base = ExactMatrix(L.m, L.n);
    tp.first.pattern = PatternMatrix(L.m, L.n);
    tp.second.base = ExactMatrix(L.n, L.m);
    tp.second.pattern = PatternMatrix(L.n, L.m);

    // Bases. The right singular summands appear as (G_q^T, F_q).
    if (L.nj) {
        tp.first.base.paste(0, 0, ExactMatrix::identity(L.nj));
        tp.second.base.paste(0, 0, build_jordan(cs.regular));
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        tp.first.base.paste(L.p_m[i], L.p_n[i], f_single(p[i]));
        tp.second.base.paste(L.p_n[i], L.p_m[i], g_single(p[i]).transpose());
    }
    if (L.m0) {
        tp.first.base.paste(L.ab_m, L.ab_n, ExactMatrix::identity(L.m0));
        tp.second.base.paste(L.ab_n, L.ab_m, build_jordan(zero_eig(ab)));
    }
    if (L.n0) {
        tp.first.base.paste(L.ba_m, L.ba_n, build_jordan(zero_eig(ba)));
        tp.second.base.paste(L.ba_n, L.ba_m, ExactMatrix::identity(L.n0));
    }
    for (std::size_t j = 0; j < q.size(); ++j) {
        tp.first.base.paste(L.q_m[j], L.q_n[j], g_single(q[j]).transpose());
        tp.second.base.paste(L.q_n[j], L.q_m[j], f_single(q[j]));
    }

    // First matrix pattern (everything on or above the summand diagonal).
    auto& P1 = tp.first.pattern;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j)
            P1.paste(L.p_m[i], L.p_n[j], t_block(p[i], p[j] - 1));
        for (std::size_t k = 0; k < ab.size(); ++k)
            P1.paste(L.p_m[i], L.ab_n + L.ab_off[k],
                     adjoin_zero_row_top(t_block(p[i] - 1, ab[k])));
        for (std::size_t k = 0; k < ba.size(); ++k)
            P1.paste(L.p_m[i], L.ba_n + L.ba_off[k], t_block(p[i], ba[k]));
        for (std::size_t j = 0; j < q.size(); ++j)
            P1.paste(L.p_m[i], L.q_n[j], t_block(p[i], q[j]));
    }
    for (std::size_t k = 0; k < ab.size(); ++k) {
        for (std::size_t k2 = 0; k2 < ba.size(); ++k2)
            P1.paste(L.ab_m + L.ab_off[k], L.ba_n + L.ba_off[k2],
                     t_block(ab[k], ba[k2]));
        for (std::size_t j = 0; j < q.size(); ++j)
            P1.paste(L.ab_m + L.ab_off[k], L.q_n[j],
                     adjoin_zero_col_right(t_block(ab[k], q[j] - 1)));
    }
    if (L.n0) place_arnold(P1, ba, L.ba_m, L.ba_n);
    for (std::size_t k = 0; k < ba.size(); ++k)
        for (std::size_t j = 0; j < q.size(); ++j)
            P1.paste(L.ba_m + L.ba_off[k], L.q_n[j], t_block(ba[k], q[j]));
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j)
            P1.paste(L.q_m[i], L.q_n[j], t_block(q[i] - 1, q[j]));

    // Second matrix pattern (on or below the summand diagonal).
    auto& P2 = tp.second.pattern;
    {
        std::size_t off = 0;
        for (const auto& eb : cs.regular.eigenvalues) {
            place_arnold(P2, eb.sizes, off, off);
            off += sum(eb.sizes);
        }
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        P2.paste(L.p_n[i], L.p_m[i], t_block(p[i] - 1, p[i]));
        for (std::size_t j = 0; j < i; ++j)
            P2.paste(L.p_n[i], L.p_m[j], t_block(p[i] - 1, p[j]));
    }
    for (std::size_t k = 0; k < ab.size(); ++k)
        for (std::size_t i = 0; i < p.size(); ++i)
            P2.paste(L.ab_n + L.ab_off[k], L.p_m[i], t_block(ab[k], p[i]));
    if (L.m0) place_arnold(P2, ab, L.ab_n, L.ab_m);
    for (std::size_t k = 0; k < ba.size(); ++k) {
        for (std::size_t i = 0; i < p.size(); ++i)
            P2.paste(L.ba_n + L.ba_off[k], L.p_m[i],
                     adjoin_zero_col_right(t_block(ba[k], p[i] - 1)));
        for (std::size_t k2 = 0; k2 < ab.size(); ++k2)
            P2.paste(L.ba_n + L.ba_off[k], L.ab_m + L.ab_off[k2],
                     t_block(ba[k], ab[k2]));
    }
    for (std::size_t j = 0; j < q.size(); ++j) {
        for (std::size_t i = 0; i < p.size(); ++i)
            P2.paste(L.q_n[j], L.p_m[i], t_block(q[j], p[i]));
        for (std::size_t k = 0; k < ab.size(); ++k)
            P2.paste(L.q_n[j], L.ab_m + L.ab_off[k], t_block(q[j], ab[k]));
        for (std::size_t k = 0; k < ba.size(); ++k)
            P2.paste(L.q_n[j], L.ba_m + L.ba_off[k],
                     adjoin_zero_row_top(t_block(q[j] - 1, ba[k])));
        P2.paste(L.q_n[j], L.q_m[j], t_block(q[j], q[j] - 1));
        for (std::size_t i = 0; i < j; ++i)
            P2.paste(L.q_n[j], L.q_m[i], t_block(q[j], q[i] - 1));
    }

    tp.first.pattern.renumber();
    tp.second.pattern.renumber();

    // Coarse per-summand partitions (the certifying ones come from
    // contra_triangular_partitions).
    BlockPartition m_side, n_side;
    auto push = [](std::vector<std::size_t>& v, std::size_t x) { v.push_back(x); };
    if (L.nj) push(m_side.row_sizes, L.nj);
    for (std::size_t pi : p) push(m_side.row_sizes, pi);
    if (L.m0) push(m_side.row_sizes, L.m0);
    if (L.n0) push(m_side.row_sizes, L.n0);
    for (std::size_t qi : q) push(m_side.row_sizes, qi - 1);
    if (L.nj) push(n_side.row_sizes, L.nj);
    for (std::size_t pi : p) push(n_side.row_sizes, pi - 1);
    if (L.m0) push(n_side.row_sizes, L.m0);
    if (L.n0) push(n_side.row_sizes, L.n0);
    for (std::size_t qi : q) push(n_side.row_sizes, qi);
    tp.first.partition = {m_side.row_sizes, n_side.row_sizes};
    tp.second.partition = {n_side.row_sizes, m_side.row_sizes};

    tp.first.check();
    tp.second.check();
    return tp;
}

TriangularizedPair triangularize_contragredient(const TemplatePair& tp,
                                                const ContraStructure& cs) {
    cs.validate();
    ContraLayout L = contra_layout(cs);
    if (tp.first.base.rows() != L.m || tp.first.base.cols() != L.n)
        throw std::invalid_argument("template pair does not match the structure");

    Permutation s_map = Permutation::identity(L.m);  // first rows, second cols
    Permutation r_map = Permutation::identity(L.n);  // first cols, second rows

    Permutation reg = jordan_to_weyr_permutation(cs.regular);
    embed(s_map, 0, reg);
    embed(r_map, 0, reg);
    Permutation ab = jordan_to_weyr_permutation(zero_eig(cs.ab_zero));
    embed(s_map, L.ab_m, ab);
    embed(r_map, L.ab_n, ab);
    // The (J'(0), I) part additionally gets flipped to turn its lower
    // block triangular deformation into an upper one.
    Permutation ba = flip(sum(cs.ba_zero))
                         .compose(jordan_to_weyr_permutation(zero_eig(cs.ba_zero)));
    embed(s_map, L.ba_m, ba);
    embed(r_map, L.ba_n, ba);

    TriangularizedPair out;
    out.row_map = s_map;
    out.col_map = r_map;
    out.pair.first.base = permute_rows_cols(tp.first.base, s_map, r_map);
    out.pair.first.pattern = permute_pattern(tp.first.pattern, s_map, r_map);
    out.pair.second.base = permute_rows_cols(tp.second.base, r_map, s_map);
    out.pair.second.pattern = permute_pattern(tp.second.pattern, r_map, s_map);
    ContraPartitions parts = contra_triangular_partitions(cs);
    out.pair.first.partition = parts.first;
    out.pair.second.partition = parts.second;
    return out;
}

ContraPartitions contra_triangular_partitions(const ContraStructure& cs) {
    cs.validate();
    std::vector<std::size_t> reg_w = concat_strip_widths(cs.regular);
    std::vector<std::size_t> ab_w =
        cs.ab_zero.empty() ? std::vector<std::size_t>{} : weyr_strip_widths(cs.ab_zero);
    std::vector<std::size_t> ba_w =
        cs.ba_zero.empty() ? std::vector<std::size_t>{} : weyr_strip_widths(cs.ba_zero);
    std::reverse(ba_w.begin(), ba_w.end());  // the flipped part

    std::vector<std::size_t> m_side, n_side;
    auto append = [](std::vector<std::size_t>& v, const std::vector<std::size_t>& w) {
        v.insert(v.end(), w.begin(), w.end());
    };
    append(m_side, reg_w);
    append(n_side, reg_w);
    for (std::size_t p : cs.left_indices) {
        m_side.insert(m_side.end(), p, 1);
        n_side.insert(n_side.end(), p - 1, 1);
        n_side.push_back(0);  // pad so group counts agree
    }
    append(m_side, ab_w);
    append(n_side, ab_w);
    append(m_side, ba_w);
    append(n_side, ba_w);
    for (std::size_t q : cs.right_indices) {
        m_side.insert(m_side.end(), q - 1, 1);
        m_side.push_back(0);
        n_side.insert(n_side.end(), q, 1);
    }

    ContraPartitions out;
    out.first = {m_side, n_side};
    out.second = {n_side, m_side};
    return out;
}

bool normalize_pencil(PencilStructure& ps) {
    PencilStructure before = ps;
    std::sort(ps.left_indices.begin(), ps.left_indices.end());
    std::sort(ps.right_indices.begin(), ps.right_indices.end(), std::greater<>());
    std::sort(ps.infinite.begin(), ps.infinite.end(), std::greater<>());
    for (auto& eb : ps.regular.eigenvalues)
        std::sort(eb.sizes.begin(), eb.sizes.end(), std::greater<>());
    return !(before.left_indices == ps.left_indices &&
             before.right_indices == ps.right_indices &&
             before.infinite == ps.infinite);
}

bool normalize_contra(ContraStructure& cs) {
    ContraStructure before = cs;
    std::sort(cs.left_indices.begin(), cs.left_indices.end(), std::greater<>());
    std::sort(cs.right_indices.begin(), cs.right_indices.end());
    std::sort(cs.ab_zero.begin(), cs.ab_zero.end(), std::greater<>());
    std::sort(cs.ba_zero.begin(), cs.ba_zero.end(), std::greater<>());
    for (auto& eb : cs.regular.eigenvalues)
        std::sort(eb.sizes.begin(), eb.sizes.end(), std::greater<>());
    return !(before.left_indices == cs.left_indices &&
             before.right_indices == cs.right_indices &&
             before.ab_zero == cs.ab_zero && before.ba_zero == cs.ba_zero);
}

}  // namespace weyr
