#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylkit/weyl_groebner.hpp"

namespace weylkit {

// Linear Lie algebra action on C^N: one N x N rational matrix per named
// basis element; optional structure constants c[s][t][r] with
// [theta_s, theta_t] = sum_r c_{st}^r theta_r.
struct LinearAction {
    std::vector<std::string> names;
    std::vector<std::vector<std::vector<Rat>>> matrices;
    std::optional<std::vector<std::vector<std::vector<Rat>>>> structure;

    std::size_t basis_size() const { return matrices.size(); }
    std::size_t dim() const { return matrices.empty() ? 0 : matrices[0].size(); }
};

// Validates shapes, and [A_s, A_t] = sum_r c_{st}^r A_r when structure
// constants are supplied.
void validate_action(const LinearAction& a);

// L_s = sum_{j,k} (A_s)_{jk} x_k d_j, the vector field of the action.
std::vector<WeylOp> fields_from_action(const LinearAction& a);

struct StabilityPair {
    std::size_t field = 0, gen = 0;
    bool pass = false;
    WeylOp bracket;  // witness when the bracket escapes the ideal
};

struct StabilityReport {
    bool pass = true;
    std::vector<StabilityPair> pairs;
};

// For linear fields and constant-coefficient generators, every bracket
// [L_s, P_k] is again constant-coefficient; membership is tested in the
// commutative ideal the generators span (d read as xi).
StabilityReport stability_check(const std::vector<WeylOp>& fields,
                                const std::vector<WeylOp>& constgens);

// lambda([theta_s, theta_t]) = 0 for all pairs; needs structure constants.
bool character_check(const LinearAction& a, const std::vector<Rat>& lambda);

struct EquivariantSystem {
    std::size_t n = 0;
    std::vector<WeylOp> fields;      // L_s (or their Fourier images)
    std::vector<Rat> lambda;         // character values, one per field
    std::vector<WeylOp> constgens;   // P_k
    std::vector<WeylOp> generators() const;  // {L_s - lambda_s} then {P_k}
    WIdeal ideal() const;
};

// Validates the assembly shape: fields first-order with zero constant term,
// constgens free of position variables.
EquivariantSystem assemble(std::vector<WeylOp> fields, std::vector<Rat> lambda,
                           std::vector<WeylOp> constgens);

// Image of every generator under the Fourier substitution; shape invariants
// of assemble() do not apply to the image.
EquivariantSystem fourier_system(const EquivariantSystem& sys);

struct HomogeneityReport {
    std::vector<std::optional<int>> degrees;  // one per generator
    bool homogeneous = false;                 // all degrees defined
    std::optional<bool> finite_orbits;        // externally supplied
    bool regular_holonomic_criterion = false; // homogeneous && finite orbits
};

HomogeneityReport homogeneity_report(const EquivariantSystem& sys,
                                     std::optional<bool> finite_orbits = {});

}  // namespace weylkit
