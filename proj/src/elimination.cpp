#include "weyr/elimination.hpp"

#include <omp.h>

#include <limits>
#include <stdexcept>

namespace weyr {

namespace {

// Rough size of a rational in limbs; used to pick pivots that keep
// intermediate entries small. Exactness is unaffected by the choice.
std::size_t complexity(const Scalar& s) {
    return mpz_size(s.re.get_num_mpz_t()) + mpz_size(s.re.get_den_mpz_t()) +
           mpz_size(s.im.get_num_mpz_t()) + mpz_size(s.im.get_den_mpz_t());
}

struct Workspace {
    std::size_t rows, cols;
    std::vector<std::vector<Scalar>> a;

    explicit Workspace(const ExactMatrix& m) : rows(m.rows()), cols(m.cols()) {
        a.resize(rows);
        for (std::size_t r = 0; r < rows; ++r) {
            a[r].resize(cols);
            for (std::size_t c = 0; c < cols; ++c) a[r][c] = m.at(r, c);
        }
    }
};

void eliminate_row(std::vector<Scalar>& row, const std::vector<Scalar>& pivot_row,
                   std::size_t col, std::size_t cols) {
    if (row[col].is_zero()) return;
    Scalar f = row[col];
    row[col] = Scalar();
    for (std::size_t c = col + 1; c < cols; ++c) {
        const Scalar& p = pivot_row[c];
        if (!p.is_zero()) row[c] -= f * p;
    }
}

// Row echelon reduction; full=true also clears above the pivots (RREF).
// stop_at_cols lets rank computations skip trailing columns that can no
// longer produce pivots once every row is consumed.
void reduce(Workspace& w, bool full, bool use_omp,
            std::vector<std::size_t>& pivot_cols) {
    pivot_cols.clear();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < w.cols && lead < w.rows; ++col) {
        // Pivot: the structurally simplest nonzero entry in this column.
        std::size_t pivot = w.rows;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (std::size_t r = lead; r < w.rows; ++r) {
            if (w.a[r][col].is_zero()) continue;
            std::size_t cx = complexity(w.a[r][col]);
            if (cx < best) {
                best = cx;
                pivot = r;
                if (cx <= 4) break;  // a machine-word entry is good enough
            }
        }
        if (pivot == w.rows) continue;
        std::swap(w.a[lead], w.a[pivot]);
        pivot_cols.push_back(col);

        auto& prow = w.a[lead];
        Scalar inv = prow[col].inverse();
        prow[col] = Scalar(1);
        for (std::size_t c = col + 1; c < w.cols; ++c)
            if (!prow[c].is_zero()) prow[c] = inv * prow[c];

        std::size_t first = full ? 0 : lead + 1;
#pragma omp parallel for schedule(dynamic) if (use_omp)
        for (std::size_t r = first; r < w.rows; ++r) {
            if (r == lead) continue;
            eliminate_row(w.a[r], prow, col, w.cols);
        }
        ++lead;
    }
}

EchelonForm run(ExactMatrix m, bool use_omp) {
    Workspace w(m);
    EchelonForm out;
    reduce(w, /*full=*/true, use_omp, out.pivot_cols);
    out.reduced = ExactMatrix(w.rows, w.cols);
    for (std::size_t r = 0; r < w.rows; ++r)
        for (std::size_t c = 0; c < w.cols; ++c) out.reduced.at(r, c) = w.a[r][c];
    return out;
}

std::size_t run_rank(const ExactMatrix& m, bool use_omp) {
    Workspace w(m);
    std::vector<std::size_t> pivots;
    reduce(w, /*full=*/false, use_omp, pivots);
    return pivots.size();
}

}  // namespace

EchelonForm echelon_serial(ExactMatrix m) { return run(std::move(m), false); }
EchelonForm echelon_omp(ExactMatrix m) { return run(std::move(m), true); }

std::size_t rank_serial(const ExactMatrix& m) { return run_rank(m, false); }
std::size_t rank_omp(const ExactMatrix& m) { return run_rank(m, true); }

SplitRank split_rank(const ExactMatrix& m, std::size_t split) {
    Workspace w(m);
    std::vector<std::size_t> pivots;
    reduce(w, /*full=*/false, true, pivots);
    SplitRank out{0, pivots.size()};
    for (std::size_t c : pivots)
        if (c < split) ++out.prefix_rank;
    return out;
}

std::vector<std::vector<Scalar>> exact_nullspace(const ExactMatrix& m) {
    EchelonForm ef = echelon_omp(m);
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : ef.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(n);
        v[free_col] = Scalar(1);
        for (std::size_t i = 0; i < ef.pivot_cols.size(); ++i)
            v[ef.pivot_cols[i]] = -ef.reduced.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace weyr
