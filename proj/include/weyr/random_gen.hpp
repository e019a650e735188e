#ifndef WEYR_RANDOM_GEN_HPP
#define WEYR_RANDOM_GEN_HPP

#include <algorithm>
#include <random>

#include "weyr/deformations.hpp"
#include "weyr/structures.hpp"

namespace weyr {

// Seeded generators for test corpora and the CLI fuzz mode. All sizes are
// kept desk-scale so the exact rank certificates stay fast.

inline std::vector<std::size_t> random_partition(std::mt19937_64& rng,
                                                 std::size_t total) {
    std::vector<std::size_t> sizes;
    while (total > 0) {
        std::uniform_int_distribution<std::size_t> d(1, total);
        sizes.push_back(d(rng));
        total -= sizes.back();
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

inline Scalar random_eigenvalue(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    std::uniform_int_distribution<int> cplx(0, 2);
    Rational re(num(rng), den(rng));
    re.canonicalize();
    Rational im(0);
    if (cplx(rng) == 0) {
        im = Rational(num(rng), den(rng));
        im.canonicalize();
    }
    return {re, im};
}

inline SegreStructure random_segre(std::mt19937_64& rng, std::size_t max_n = 12,
                                   std::size_t max_eigs = 3,
                                   bool nonzero_eigs = false) {
    std::uniform_int_distribution<std::size_t> nd(1, max_n);
    std::size_t n = nd(rng);
    std::uniform_int_distribution<std::size_t> ed(1, std::min(max_eigs, n));
    std::size_t ne = ed(rng);

    SegreStructure s;
    std::size_t left = n;
    for (std::size_t e = 0; e < ne; ++e) {
        std::size_t remaining_eigs = ne - e - 1;
        std::size_t budget = left - remaining_eigs;
        std::uniform_int_distribution<std::size_t> bd(1, budget);
        std::size_t take = (e + 1 == ne) ? left : bd(rng);
        EigenBlock eb;
        eb.sizes = random_partition(rng, take);
        auto rejected = [&] {
            if (nonzero_eigs && eb.value.is_zero()) return true;
            for (const auto& prev : s.eigenvalues)
                if (prev.value == eb.value) return true;
            return false;
        };
        do {
            eb.value = random_eigenvalue(rng);
        } while (rejected());
        s.eigenvalues.push_back(std::move(eb));
        left -= take;
    }
    s.validate();
    return s;
}

/// Random pencil with both dimensions bounded by max_dim. Retries until
/// the bound holds.
inline PencilStructure random_pencil(std::mt19937_64& rng,
                                     std::size_t max_dim = 10) {
    for (;;) {
        PencilStructure ps;
        std::uniform_int_distribution<std::size_t> cnt(0, 2);
        std::uniform_int_distribution<std::size_t> idx(1, 3);
        for (std::size_t i = cnt(rng); i-- > 0;) ps.left_indices.push_back(idx(rng));
        std::sort(ps.left_indices.begin(), ps.left_indices.end());
        for (std::size_t i = cnt(rng); i-- > 0;) ps.right_indices.push_back(idx(rng));
        std::sort(ps.right_indices.begin(), ps.right_indices.end(),
                  std::greater<>());
        if (cnt(rng) > 0) ps.regular = random_segre(rng, 4, 2);
        if (cnt(rng) == 0) ps.infinite = random_partition(rng, idx(rng));
        auto [m, n] = ps.dimensions();
        if (m == 0 || n == 0 || m > max_dim || n > max_dim) continue;
        ps.validate();
        return ps;
    }
}

inline ContraStructure random_contra(std::mt19937_64& rng,
                                     std::size_t max_dim = 10) {
    for (;;) {
        ContraStructure cs;
        std::uniform_int_distribution<std::size_t> cnt(0, 2);
        std::uniform_int_distribution<std::size_t> idx(1, 3);
        for (std::size_t i = cnt(rng); i-- > 0;) cs.left_indices.push_back(idx(rng));
        std::sort(cs.left_indices.begin(), cs.left_indices.end(), std::greater<>());
        for (std::size_t i = cnt(rng); i-- > 0;) cs.right_indices.push_back(idx(rng));
        std::sort(cs.right_indices.begin(), cs.right_indices.end());
        if (cnt(rng) > 0) cs.regular = random_segre(rng, 4, 2, /*nonzero=*/true);
        if (cnt(rng) == 0) cs.ab_zero = random_partition(rng, idx(rng));
        if (cnt(rng) == 0) cs.ba_zero = random_partition(rng, idx(rng));
        auto [m, n] = cs.dimensions();
        if (m == 0 || n == 0 || m > max_dim || n > max_dim) continue;
        cs.validate();
        return cs;
    }
}

}  // namespace weyr

#endif
