#pragma once

#include <optional>
#include <vector>

#include "weylkit/groebner.hpp"
#include "weylkit/weyl_op.hpp"

namespace weylkit {

// Left ideal of the Weyl algebra with an optional cached reduced left
// Groebner basis. Bases are computed under the d-degree-compatible order
// weyl_term_order(N) so that leading symbols generate gr I.
struct WIdeal {
    std::size_t n = 0;
    std::vector<WeylOp> gens;
    std::optional<std::vector<WeylOp>> basis;  // reduced, monic, sorted

    static WIdeal make(std::size_t n, std::vector<WeylOp> gens);
    bool is_unit() const {
        return basis && basis->size() == 1 && (*basis)[0].is_constant() &&
               !(*basis)[0].is_zero();
    }
};

// Full left normal form modulo the listed operators.
WeylOp weyl_normal_form(const WeylOp& f, const std::vector<WeylOp>& basis);

// Left Buchberger adapted to the Heisenberg relations. Orders other than
// weyl_term_order(N) are rejected: gr-correctness needs d-degree
// compatibility. Structured desk-scale inputs (Euler fields, boxes, ODEs)
// finish instantly; dense inhomogeneous generators can blow up doubly
// exponentially, as left bases do.
WIdeal weyl_groebner(WIdeal ideal);
WIdeal weyl_groebner(WIdeal ideal, const MonomialOrder& order);

bool weyl_membership(const WeylOp& f, const WIdeal& ideal);

// Commutative ideal generated by the principal symbols of the reduced left
// basis; equals gr I because the basis order is d-degree compatible.
CIdeal gr_ideal(const WIdeal& ideal, const RingPtr& symplectic_ring);
CIdeal gr_ideal(const WIdeal& ideal);

struct CharReport {
    std::size_t n = 0;
    WIdeal ideal;                 // with basis
    CIdeal graded;                // gr I, with reduced degrevlex basis
    std::optional<int> dimension; // nullopt: unit ideal, empty variety
    bool module_is_zero = false;  // unit ideal
    bool bernstein_ok = false;    // dim >= N, or zero module
    bool holonomic = false;       // dim == N, or zero module
    bool connection_like = false; // every xi_i lies in gr I
    InvolutivityReport involutivity;
};

CharReport characteristic_report(WIdeal ideal,
                                 par::Exec exec = par::default_exec());

}  // namespace weylkit
