#include "weyr/structures.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "weyr/elimination.hpp"

namespace weyr {

void SegreStructure::validate() const {
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        const auto& eb = eigenvalues[i];
        if (eb.sizes.empty())
            throw std::invalid_argument("eigenvalue with no Jordan blocks");
        for (std::size_t k = 0; k < eb.sizes.size(); ++k) {
            if (eb.sizes[k] == 0)
                throw std::invalid_argument("Jordan block of size zero");
            if (k > 0 && eb.sizes[k] > eb.sizes[k - 1])
                throw std::invalid_argument("block sizes must be nonincreasing");
        }
        for (std::size_t j = i + 1; j < eigenvalues.size(); ++j)
            if (eb.value == eigenvalues[j].value)
                throw std::invalid_argument("eigenvalues must be pairwise distinct");
    }
}

std::size_t SegreStructure::total_size() const {
    std::size_t n = 0;
    for (const auto& eb : eigenvalues)
        n += std::accumulate(eb.sizes.begin(), eb.sizes.end(), std::size_t{0});
    return n;
}

FamilyDecomposition FamilyDecomposition::from_sizes(
    const std::vector<std::size_t>& sizes) {
    FamilyDecomposition fd;
    for (std::size_t sz : sizes) {
        if (!fd.distinct_sizes.empty() && fd.distinct_sizes.back() == sz) {
            ++fd.multiplicities.back();
        } else {
            fd.distinct_sizes.push_back(sz);
            fd.multiplicities.push_back(1);
        }
    }
    return fd;
}

namespace {

ExactMatrix jordan_block(const Scalar& lambda, std::size_t n) {
    ExactMatrix j(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        j.at(i, i) = lambda;
        if (i + 1 < n) j.at(i, i + 1) = Scalar(1);
    }
    return j;
}

// Column-major strip labels (position, then family) for one eigenvalue.
std::vector<StripIndex> strips_column_major(const FamilyDecomposition& fd) {
    std::vector<StripIndex> out;
    std::size_t max_size = fd.distinct_sizes.empty() ? 0 : fd.distinct_sizes.front();
    for (std::size_t j = 1; j <= max_size; ++j)
        for (std::size_t i = 0; i < fd.distinct_sizes.size(); ++i)
            if (j <= fd.distinct_sizes[i]) out.push_back({i + 1, j});
    return out;
}

// Permutation of one eigenvalue's Jordan rows into Weyr order: Jordan
// index (block b, inner position v) goes to the rank of (v, b) under
// lexicographic order by position first.
std::vector<std::size_t> single_eig_permutation(const std::vector<std::size_t>& sizes) {
    std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
    std::vector<std::pair<std::size_t, std::size_t>> keys;  // (position, block)
    keys.reserve(n);
    for (std::size_t b = 0; b < sizes.size(); ++b)
        for (std::size_t v = 0; v < sizes[b]; ++v) keys.push_back({v, b});
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return keys[a] < keys[b];
    });
    std::vector<std::size_t> image(n);
    for (std::size_t pos = 0; pos < n; ++pos) image[order[pos]] = pos;
    return image;
}

}  // namespace

ExactMatrix build_jordan(const SegreStructure& s) {
    s.validate();
    std::vector<ExactMatrix> blocks;
    for (const auto& eb : s.eigenvalues)
        for (std::size_t sz : eb.sizes) blocks.push_back(jordan_block(eb.value, sz));
    return ExactMatrix::direct_sum(blocks);
}

WeyrCharacteristic weyr_char_from_segre(const std::vector<std::size_t>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("empty size list");
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        if (sizes[k] == 0) throw std::invalid_argument("block of size zero");
        if (k > 0 && sizes[k] > sizes[k - 1])
            throw std::invalid_argument("sizes must be nonincreasing");
    }
    WeyrCharacteristic w;
    for (std::size_t i = 1; i <= sizes.front(); ++i) {
        std::size_t count = 0;
        for (std::size_t sz : sizes)
            if (sz >= i) ++count;
        w.s.push_back(count);
    }
    return w;
}

std::vector<std::size_t> segre_from_weyr(const WeyrCharacteristic& w) {
    if (w.s.empty()) throw std::invalid_argument("empty Weyr characteristic");
    for (std::size_t k = 0; k < w.s.size(); ++k) {
        if (w.s[k] == 0) throw std::invalid_argument("zero entry in Weyr characteristic");
        if (k > 0 && w.s[k] > w.s[k - 1])
            throw std::invalid_argument("Weyr characteristic must be nonincreasing");
    }
    std::vector<std::size_t> sizes;
    for (std::size_t b = 1; b <= w.s.front(); ++b) {
        std::size_t len = 0;
        for (std::size_t v : w.s)
            if (v >= b) ++len;
        sizes.push_back(len);
    }
    return sizes;
}

std::vector<std::size_t> weyr_strip_widths(const std::vector<std::size_t>& sizes) {
    auto fd = FamilyDecomposition::from_sizes(sizes);
    std::vector<std::size_t> widths;
    for (const auto& st : strips_column_major(fd))
        widths.push_back(fd.multiplicities[st.family - 1]);
    return widths;
}

Permutation jordan_to_weyr_permutation(const SegreStructure& s) {
    s.validate();
    Permutation p;
    std::size_t offset = 0;
    for (const auto& eb : s.eigenvalues) {
        auto local = single_eig_permutation(eb.sizes);
        for (std::size_t v : local) p.image.push_back(offset + v);
        offset += local.size();
    }
    return p;
}

WeyrForm build_weyr(const SegreStructure& s) {
    ExactMatrix j = build_jordan(s);
    Permutation p = jordan_to_weyr_permutation(s);
    WeyrForm wf;
    wf.matrix = p.conjugate(j);
    std::vector<std::size_t> widths;
    for (const auto& eb : s.eigenvalues) {
        auto w = weyr_strip_widths(eb.sizes);
        widths.insert(widths.end(), w.begin(), w.end());
    }
    wf.partition = BlockPartition::square(widths);
    return wf;
}

std::vector<StripIndex> strip_index_sequence(const SegreStructure& s,
                                             StripOrder order) {
    s.validate();
    if (s.eigenvalues.size() != 1)
        throw std::invalid_argument("strip labels require a single eigenvalue");
    auto fd = FamilyDecomposition::from_sizes(s.eigenvalues.front().sizes);
    if (order == StripOrder::ColumnMajor) return strips_column_major(fd);
    std::vector<StripIndex> out;
    for (std::size_t i = 0; i < fd.distinct_sizes.size(); ++i)
        for (std::size_t j = 1; j <= fd.distinct_sizes[i]; ++j)
            out.push_back({i + 1, j});
    return out;
}

WeyrCharacteristic weyr_char_of_matrix(const ExactMatrix& a, const Scalar& lambda) {
    if (a.rows() != a.cols()) throw std::invalid_argument("matrix must be square");
    std::size_t n = a.rows();
    ExactMatrix shifted = a;
    for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) -= lambda;

    WeyrCharacteristic w;
    ExactMatrix power = ExactMatrix::identity(n);
    std::size_t prev_rank = n;
    for (std::size_t k = 1; k <= n; ++k) {
        power = power * shifted;
        std::size_t r = exact_rank(power);
        std::size_t sk = prev_rank - r;
        if (sk == 0) break;
        w.s.push_back(sk);
        prev_rank = r;
    }
    return w;
}

}  // namespace weyr
