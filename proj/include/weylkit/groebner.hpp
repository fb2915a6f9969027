#pragma once

#include <optional>
#include <vector>

#include "weylkit/parallel.hpp"
#include "weylkit/poly.hpp"

namespace weylkit {

// Reduced Groebner basis: monic, no leading term divides another, tails
// reduced, sorted ascending by leading monomial. Canonical for its order.
struct GroebnerBasis {
    std::vector<Poly> polys;
    MonomialOrder order = MonomialOrder::degrevlex();

    bool contains_one() const {
        return polys.size() == 1 && polys[0].is_constant() && !polys[0].is_zero();
    }
};

// Ideal of a commutative polynomial ring; carries a cached reduced basis
// once groebner() has run.
struct CIdeal {
    RingPtr ring;
    std::vector<Poly> gens;
    std::optional<GroebnerBasis> basis;

    static CIdeal make(RingPtr ring, std::vector<Poly> gens);
};

// Full normal form of f modulo basis (deterministic reducer choice: first
// listed divisor, order-largest reducible term first).
Poly normal_form(const Poly& f, const std::vector<Poly>& basis,
                 const MonomialOrder& order);

// Buchberger with normal selection strategy (increasing lcm degree, ties by
// generator index pair). Returns the ideal with its reduced basis cached.
CIdeal groebner(CIdeal ideal, const MonomialOrder& order);

bool membership(const Poly& f, const CIdeal& ideal, const MonomialOrder& order);

// Krull dimension of the quotient ring via the maximal independent variable
// set of the initial ideal (reduced degrevlex basis, exhaustive subset scan).
// nullopt encodes the unit ideal (empty variety). The scan costs 2^vars and
// is capped at 20 variables; fine at desk scale, a cliff beyond it.
std::optional<int> krull_dimension(const CIdeal& ideal,
                                   par::Exec exec = par::default_exec());

// (ideal : f^inf) by one auxiliary variable and block elimination.
CIdeal saturate(const CIdeal& ideal, const Poly& f);

// Intersection via the t / (1 - t) trick.
CIdeal intersect(const CIdeal& a, const CIdeal& b);

// f in rad(ideal), by Rabinowitsch.
bool radical_membership(const Poly& f, const CIdeal& ideal);

// Canonical Poisson bracket on a symplectic ring:
// {f, g} = sum_i (df/dxi_i dg/dz_i - dg/dxi_i df/dz_i).
Poly poisson_bracket(const Poly& f, const Poly& g);

struct InvolutivityPair {
    std::size_t a = 0, b = 0;
    bool pass = false;
    Poly bracket_normal_form;  // nonzero witness on failure
};

struct InvolutivityReport {
    bool pass = true;
    std::size_t pairs_checked = 0;
    std::vector<InvolutivityPair> failures;
};

// For every pair of reduced-basis elements, tests membership of their
// Poisson bracket in the ideal.
InvolutivityReport involutivity_certificate(const CIdeal& ideal,
                                            par::Exec exec = par::default_exec());

}  // namespace weylkit
