#pragma once

#include <optional>
#include <vector>

#include "weylkit/feasibility.hpp"
#include "weylkit/intmatrix.hpp"
#include "weylkit/weyl_groebner.hpp"

namespace weylkit {

// Torus action data: integral chi (n x N, rank n), rational parameter
// lambda, kernel lattice basis, and the homogeneity witness c with
// c chi = (1,...,1).
struct GkzData {
    IntMatrix chi;
    std::vector<Rat> lambda;
    IntMatrix lattice;          // N x l, column Hermite form
    std::vector<Int> witness;   // integral, c chi = ones

    std::size_t n() const { return chi.rows(); }
    std::size_t N() const { return chi.cols(); }
};

// Validates rank and the homogeneity condition; throws domain_error on
// rank-deficient chi or when no integral witness exists.
GkzData make_gkz_data(IntMatrix chi, std::vector<Rat> lambda);

// The witness alone (used by orbit_strata, which has no lambda).
std::vector<Int> homogeneity_witness(const IntMatrix& chi);

struct GkzSystem {
    GkzData data;
    std::vector<WeylOp> euler_ops;               // theta_i - lambda_i
    std::vector<WeylOp> box_ops;                 // one per toric basis binomial
    std::vector<std::vector<Int>> box_vectors;   // lattice vector of each box
    CIdeal toric;                                // saturated, in xi variables

    WIdeal ideal() const;  // euler ops then box ops
};

// Euler operators from the rows of chi, box operators from the saturated
// toric basis (binomial xi^u - xi^v maps to d^u - d^v, sign fixed so the
// lattice vector's first nonzero entry is positive).
GkzSystem build_gkz(const GkzData& data);

// (theta-bar_i, saturated toric binomials) in C[z, xi]; reduced degrevlex
// basis cached.
CIdeal bound_ideal_A(const GkzSystem& sys);

struct Stratum {
    std::vector<std::size_t> support;  // 0-based column indices, ascending
    std::vector<Rat> witness;          // w.chi_j = 0 on support, > 0 off it
    CIdeal conormal;                   // with reduced basis
    std::optional<int> dimension;
};

struct StrataReport {
    std::size_t n = 0;
    std::size_t N = 0;
    std::vector<Stratum> strata;  // sorted by (size, lexicographic support)
};

// Witness per column subset (index = bitmask; nullopt when the subset is
// not a face). The inner scan of orbit_strata, exposed for benchmarking.
std::vector<std::optional<std::vector<Rat>>> face_scan(
    const IntMatrix& chi, par::Exec exec = par::default_exec());

// Column-support subsets that are faces of the cone spanned by chi's
// columns, each with its conormal ideal. Requires the homogeneity witness.
StrataReport orbit_strata(const IntMatrix& chi,
                          par::Exec exec = par::default_exec());

struct GkzVerdicts {
    std::optional<int> dim_A;
    bool holonomic = false;          // dim A == N, squeezing against Bernstein
    bool homogeneous = false;        // all generators graded
    std::vector<int> generator_degrees;
    bool stability_pass = false;     // [theta_i, box] = mu box, exactly
    std::size_t strata_count = 0;
    bool finite_orbits = true;
    bool regular_holonomic = false;
    InvolutivityReport involutivity_A;
    StrataReport strata;
    CIdeal bound_A;
};

GkzVerdicts gkz_verdicts(const GkzSystem& sys,
                         par::Exec exec = par::default_exec());

// Optional comparison of the upper bound A with gr I computed from a left
// Groebner basis of the assembled ideal. Equality holds for normal orbit
// closures; it is reported, never assumed.
struct GrComparison {
    bool a_contained_in_gr = false;
    bool gr_contained_in_a = false;
    bool equal = false;
};
GrComparison compare_bound_with_gr(const GkzSystem& sys);

}  // namespace weylkit
