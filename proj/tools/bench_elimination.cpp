// Compares the serial and OpenMP exact elimination kernels on the rank
// certificates the verify module actually runs.

#include <chrono>
#include <cstdio>
#include <random>

#include "weyr/elimination.hpp"
#include "weyr/random_gen.hpp"
#include "weyr/verify.hpp"

using namespace weyr;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t cases = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 10;
    std::mt19937_64 rng(1);

    double serial_total = 0, omp_total = 0;
    for (std::size_t i = 0; i < cases; ++i) {
        SegreStructure s = random_segre(rng, 10);
        ExactMatrix t = tangent_matrix(build_weyr(s).matrix);

        auto t0 = std::chrono::steady_clock::now();
        std::size_t r1 = rank_serial(t);
        serial_total += seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        std::size_t r2 = rank_omp(t);
        omp_total += seconds_since(t0);

        if (r1 != r2) {
            std::fprintf(stderr, "rank mismatch on case %zu: %zu vs %zu\n", i, r1,
                         r2);
            return 1;
        }
        std::printf("case %2zu: dim %4zu  rank %4zu\n", i, t.rows(), r1);
    }
    std::printf("serial: %.3fs  omp: %.3fs  (%zu cases)\n", serial_total,
                omp_total, cases);
    return 0;
}
