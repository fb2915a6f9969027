#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylkit/poly.hpp"

namespace weylkit {

// c * x_1^{e_1} ... x_N^{e_N} with rational (possibly non-integer) exponents.
// Formal solutions of Euler-type equations live here.
struct TwistedPower {
    Rat coeff;
    std::vector<Rat> exps;

    bool operator==(const TwistedPower& o) const {
        return coeff == o.coeff && exps == o.exps;
    }
    std::string str() const;
};

// Element of the Weyl algebra D(C^N) in normal order: a finite sum
// sum c_{ab} x^a d^b with all x factors left of all d factors. The stored
// map is the canonical form, so equality is map equality.
class WeylOp {
public:
    using Key = std::pair<MultiIndex, MultiIndex>;  // (x exponents, d exponents)

    WeylOp() = default;
    explicit WeylOp(std::size_t n) : n_(n) {}

    static WeylOp constant(std::size_t n, const Rat& c);
    static WeylOp x_var(std::size_t n, std::size_t i);   // x_{i+1}
    static WeylOp d_var(std::size_t n, std::size_t i);   // d_{i+1}
    static WeylOp monomial(std::size_t n, MultiIndex a, MultiIndex b,
                           const Rat& c = Rat(1));
    // x_i d_i Euler term builder: sum_j w_j x_j d_j.
    static WeylOp euler(std::size_t n, const std::vector<Rat>& w);

    std::size_t dim() const { return n_; }
    const std::map<Key, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 &&
                                  is_zero_index(terms_.begin()->first.first) &&
                                  is_zero_index(terms_.begin()->first.second));
    }

    void add_term(const MultiIndex& a, const MultiIndex& b, const Rat& c);

    WeylOp operator-() const;
    WeylOp& operator+=(const WeylOp& o);
    WeylOp& operator-=(const WeylOp& o);
    friend WeylOp operator+(WeylOp a, const WeylOp& b) { a += b; return a; }
    friend WeylOp operator-(WeylOp a, const WeylOp& b) { a -= b; return a; }
    WeylOp scaled(const Rat& c) const;

    bool operator==(const WeylOp& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    std::string str() const;  // x<i>/d<i> tokens, leading term first

private:
    std::size_t n_ = 0;
    std::map<Key, Rat> terms_;
};

// Normally ordered product; the Leibniz expansion
//   d^b x^g = sum_v C(b,v) C(g,v) v! x^{g-v} d^{b-v}
// with exact multinomials. Associative and bilinear.
WeylOp multiply(const WeylOp& p, const WeylOp& q);

// p q - q p.
WeylOp commutator(const WeylOp& p, const WeylOp& q);

// Max total d-degree of the stored terms; nullopt is the order of the zero
// operator (the -infinity sentinel).
std::optional<int> op_order(const WeylOp& p);

// sigma_m(P): the terms of d-degree exactly m, as a polynomial in the
// symplectic ring (z, xi). Requires m >= op_order(p); m above the order
// gives 0. Defaults to the principal symbol at m = op_order(p).
Poly principal_symbol(const WeylOp& p, int m, const RingPtr& symplectic_ring);
Poly principal_symbol(const WeylOp& p, const RingPtr& symplectic_ring);

// The anti-automorphism fixing x_i, sending d_i -> -d_i, reversing products.
WeylOp formal_adjoint(const WeylOp& p);

// Algebra isomorphism x_i -> -d_i, d_i -> x_i (in the coordinates of the
// dual space), re-normal-ordered.
WeylOp fourier_transform(const WeylOp& p);

// Degree under deg d_i = 1, deg x_i = -1 when every term agrees; nullopt
// means inhomogeneous. The zero operator reports 0.
std::optional<int> grading_degree(const WeylOp& p);

// Formal action on c x^e (d_i : x^e -> e_i x^{e - eps_i}), like exponents
// collected, zero coefficients dropped, sorted by exponent vector.
std::vector<TwistedPower> apply_twisted(const WeylOp& p, const TwistedPower& t);

// Action on an ordinary polynomial in the position variables z_1..z_N.
Poly apply_poly(const WeylOp& p, const Poly& f);

// The term order used throughout for leading terms of Weyl operators:
// d-degree first (weight 0 on x, 1 on d), ties by degrevlex on (x|d).
MonomialOrder weyl_term_order(std::size_t n);

// Leading (x,d) exponent pair under weyl_term_order; op must be nonzero.
WeylOp::Key weyl_leading_key(const WeylOp& p);

}  // namespace weylkit
