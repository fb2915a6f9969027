#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylkit/gkz.hpp"

namespace weylkit {

// Operator on the quotient torus: a sum of terms x^m p(th_1..th_l) with
// integer (possibly negative) monomial prefactors and commuting Euler
// symbols th_k = x_k d_k. Normal form keeps prefactors left of the th
// polynomial; products respect th x_k = x_k (th_k + 1).
class ThetaOp {
public:
    using Prefactor = std::vector<long>;            // exponent of x^m, m in Z^l
    using ThetaPoly = std::map<MultiIndex, Rat>;    // polynomial in th

    ThetaOp() = default;
    explicit ThetaOp(std::size_t l) : l_(l) {}

    static ThetaOp constant(std::size_t l, const Rat& c);
    static ThetaOp theta(std::size_t l, std::size_t k);      // th_{k+1}
    static ThetaOp linear(std::size_t l, const std::vector<Rat>& coeffs,
                          const Rat& constant);              // sum c_k th_k + c
    static ThetaOp prefactor(std::size_t l, Prefactor m);    // x^m

    std::size_t nvars() const { return l_; }
    const std::map<Prefactor, ThetaPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Prefactor& m, const MultiIndex& e, const Rat& c);

    ThetaOp operator-() const;
    ThetaOp& operator+=(const ThetaOp& o);
    ThetaOp& operator-=(const ThetaOp& o);
    friend ThetaOp operator+(ThetaOp a, const ThetaOp& b) { a += b; return a; }
    friend ThetaOp operator-(ThetaOp a, const ThetaOp& b) { a -= b; return a; }
    friend ThetaOp operator*(const ThetaOp& a, const ThetaOp& b);
    ThetaOp scaled(const Rat& c) const;

    bool operator==(const ThetaOp& o) const { return l_ == o.l_ && terms_ == o.terms_; }

    std::string str() const;  // expanded rendering

private:
    std::size_t l_ = 0;
    std::map<Prefactor, ThetaPoly> terms_;
};

// One linear factor (pi_j th + c) of a Pochhammer block, kept for the
// factored rendering and the pFq readout (l = 1 only).
struct LinearFactor {
    Rat lead;      // coefficient of th (= pi_j)
    Rat constant;  // c
};

struct ReducedOperator {
    std::vector<Int> lattice_vector;           // the a this operator came from
    std::vector<long> prefactor;               // m with z^a = x^m
    ThetaOp op;                                // A - x^m B
    std::vector<LinearFactor> plus_factors;    // factors of the constant slack A
    std::vector<LinearFactor> minus_factors;   // factors of the x-multiplied slack B
};

struct ReductionData {
    GkzData data;
    std::vector<Rat> capital_lambda;  // chi Lambda = lambda, exact
    IntMatrix pi;                     // N x l kernel basis (column Hermite)
    std::vector<ReducedOperator> operators;
};

// Lambda = solve_rational(chi, lambda) unless overridden; pi = the kernel
// basis; one reduced operator per lattice generator (defaults to the kernel
// basis columns). The override must satisfy chi Lambda = lambda exactly.
ReductionData reduce(const GkzData& data,
                     const std::vector<std::vector<Int>>& lattice_gens,
                     const std::optional<std::vector<Rat>>& lambda_cap_override = {});
ReductionData reduce(const GkzData& data,
                     const std::optional<std::vector<Rat>>& lambda_cap_override = {});

// Substitute z_j d_j -> sum_k pi_jk th_k + Lambda_j into an Euler-type row;
// used for the pullback consistency check on theta_i - lambda_i.
ThetaOp pullback_euler_row(const ReductionData& rd, std::size_t row);

struct PfqReport {
    int p = 0;                      // sum of positive pi entries
    bool pfq_form = false;          // a plain th factor exists to absorb m!
    std::vector<Rat> upper;         // factor order (ascending j, then step)
    std::vector<Rat> lower;         // same order, shifted by +1
    Rat argument_scale = Rat(1);    // operator is A - scale * x * B after monic
    std::string note;               // set when parameters are reported raw
    std::vector<Rat> raw_plus;      // monic constants of A's factors
    std::vector<Rat> raw_minus;     // monic constants of B's factors
    ThetaOp normalized;             // monic A(th) - scale x B(th)
    std::string rendering;          // factored deterministic text
};

// l = 1 specialization: the single reduced operator with parameters read off
// the linear factors. Throws unless the kernel rank is 1.
PfqReport fuchsian_l1(const ReductionData& rd);

// Coefficient recurrence of the series sum A_m x^m solving (A(th) - x B(th)) v = 0
// with A_0 = 1: ratio(m) = B(m) / A(m+1).
class SeriesRecurrence {
public:
    SeriesRecurrence(std::vector<Rat> a_coeffs, std::vector<Rat> b_coeffs);

    // Built from a two-slack l = 1 operator; throws otherwise.
    static SeriesRecurrence from_op(const ThetaOp& op);

    Rat eval_a(const Rat& t) const;
    Rat eval_b(const Rat& t) const;

    // B(m)/A(m+1); nullopt marks an obstruction (A(m+1) = 0).
    std::optional<Rat> ratio(long m) const;

    // A_0..A_count; stops at an obstruction.
    struct Coefficients {
        std::vector<Rat> values;
        std::optional<long> obstruction_at;
    };
    Coefficients coefficients(long count) const;

private:
    std::vector<Rat> a_, b_;  // ascending power coefficients
};

}  // namespace weylkit
