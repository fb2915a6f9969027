// Timing comparison of the serial reference kernels against the OpenMP
// paths: cone face scan, independent-set (Krull) scan, involutivity pair
// scan. Both paths merge by index, so outputs are asserted identical.
#include <chrono>
#include <cstring>
#include <iostream>
#include <random>

#include "weylkit/gkz.hpp"

using namespace weylkit;

namespace {

bool g_quick = false;

IntMatrix wide_cone(std::size_t cols) {
    // Cone over a zig-zag path: many subsets, nontrivial face structure.
    IntMatrix chi(3, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        chi.at(0, j) = 1;
        chi.at(1, j) = static_cast<long>(j % 5);
        chi.at(2, j) = static_cast<long>((j * j) % 7);
    }
    return chi;
}

// Monomial ideal with many minimal generators: the basis is immediate, so
// the subset scan dominates.
CIdeal monomial_forest(std::size_t sympl_n, int gens) {
    RingPtr ring = PolyRing::symplectic(sympl_n);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, 2 * sympl_n - 1);
    std::vector<Poly> out;
    for (int k = 0; k < gens; ++k) {
        MultiIndex e(2 * sympl_n, 0);
        for (int d = 0; d < 3; ++d) e[pick(rng)] += 1;
        out.push_back(Poly::monomial(ring, e));
    }
    return CIdeal::make(ring, out);
}

// Bound ideal of the rational normal curve torus of degree N-1; its reduced
// basis feeds a few thousand bracket reductions.
CIdeal rnc_bound_ideal(std::size_t N) {
    std::vector<std::vector<long>> rows(2, std::vector<long>(N));
    for (std::size_t j = 0; j < N; ++j) {
        rows[0][j] = 1;
        rows[1][j] = static_cast<long>(j);
    }
    GkzData d = make_gkz_data(IntMatrix::from_rows(rows), {Rat(1, 2), Rat(1, 3)});
    return bound_ideal_A(build_gkz(d));
}

template <class Fn>
void line(const char* name, Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn(par::Exec::serial);
    auto t1 = std::chrono::steady_clock::now();
    fn(par::Exec::openmp);
    auto t2 = std::chrono::steady_clock::now();
    double ts = std::chrono::duration<double>(t1 - t0).count();
    double tp = std::chrono::duration<double>(t2 - t1).count();
    std::cout << name << ": serial " << ts << " s, openmp " << tp << " s";
    if (tp > 0) std::cout << " (x" << ts / tp << ")";
    std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) g_quick = true;
    std::cout << "threads: " << par::thread_count() << "\n";

    IntMatrix cone = wide_cone(g_quick ? 9 : 15);
    std::size_t expected_faces = 0;
    line("face_scan", [&](par::Exec e) {
        auto witness = face_scan(cone, e);
        std::size_t faces = 0;
        for (const auto& w : witness)
            if (w) ++faces;
        if (expected_faces == 0) expected_faces = faces;
        if (faces != expected_faces) std::abort();
    });

    CIdeal forest = groebner(monomial_forest(g_quick ? 6 : 10, 60),
                             MonomialOrder::degrevlex());
    std::optional<int> expected_dim;
    line("krull_dimension", [&](par::Exec e) {
        auto d = krull_dimension(forest, e);
        if (!expected_dim) expected_dim = d;
        if (d != expected_dim) std::abort();
    });

    CIdeal bound = rnc_bound_ideal(g_quick ? 5 : 6);
    std::size_t expected_pairs = 0;
    line("involutivity", [&](par::Exec e) {
        auto rep = involutivity_certificate(bound, e);
        if (!rep.pass) std::abort();
        if (expected_pairs == 0) expected_pairs = rep.pairs_checked;
        if (rep.pairs_checked != expected_pairs) std::abort();
    });
    return 0;
}
