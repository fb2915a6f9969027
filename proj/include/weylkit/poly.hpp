#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weylkit/monomial_order.hpp"
#include "weylkit/multiindex.hpp"
#include "weylkit/rational.hpp"

namespace weylkit {

// Variable universe of a commutative polynomial ring. `symplectic_n > 0`
// marks the ring C[z_1..z_n, xi_1..xi_n] with the pairing z_i <-> xi_i that
// the Poisson bracket needs.
class PolyRing {
public:
    static std::shared_ptr<const PolyRing> symplectic(std::size_t n);
    static std::shared_ptr<const PolyRing> named(std::vector<std::string> vars);
    // xi_1..xi_n only (toric computations on the dual space).
    static std::shared_ptr<const PolyRing> xi_only(std::size_t n);
    // New ring with variable `name` prepended (elimination block of size 1).
    static std::shared_ptr<const PolyRing> extended_front(
        const std::shared_ptr<const PolyRing>& base, const std::string& name);

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var(std::size_t i) const { return vars_[i]; }
    std::size_t symplectic_n() const { return symplectic_n_; }
    bool is_symplectic() const { return symplectic_n_ > 0; }
    std::optional<std::size_t> var_index(const std::string& name) const;

    bool same(const PolyRing& o) const {
        return vars_ == o.vars_ && symplectic_n_ == o.symplectic_n_;
    }

private:
    std::vector<std::string> vars_;
    std::size_t symplectic_n_ = 0;
};

using RingPtr = std::shared_ptr<const PolyRing>;

// Commutative polynomial with exact rational coefficients, canonical form
// (no zero terms stored).
class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    Poly(RingPtr ring, const Rat& c);  // constant

    static Poly monomial(RingPtr ring, MultiIndex e, const Rat& c = Rat(1));
    static Poly variable(RingPtr ring, std::size_t i);

    const RingPtr& ring() const { return ring_; }
    const std::map<MultiIndex, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && is_zero_index(terms_.begin()->first));
    }
    std::size_t size() const { return terms_.size(); }
    int degree() const;  // total degree, -1 for zero

    void add_term(const MultiIndex& e, const Rat& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly scaled(const Rat& c) const;
    Poly shifted(const MultiIndex& e, const Rat& c) const;  // c x^e * this

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    // Leading data under an order; poly must be nonzero.
    const MultiIndex& leading_monomial(const MonomialOrder& o) const;
    const Rat& leading_coeff(const MonomialOrder& o) const;

    Poly derivative(std::size_t var) const;

    // Substitute variables of this poly into images living in another ring.
    Poly substituted(const RingPtr& target,
                     const std::vector<Poly>& images) const;

    std::string str() const;  // deterministic rendering, degrevlex-descending

private:
    RingPtr ring_;
    std::map<MultiIndex, Rat> terms_;
};

}  // namespace weylkit
