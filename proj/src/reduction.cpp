#include "weylkit/reduction.hpp"

#include <algorithm>
#include <sstream>

namespace weylkit {

ThetaOp ThetaOp::constant(std::size_t l, const Rat& c) {
    ThetaOp t(l);
    t.add_term(Prefactor(l, 0), MultiIndex(l, 0), c);
    return t;
}

ThetaOp ThetaOp::theta(std::size_t l, std::size_t k) {
    ThetaOp t(l);
    MultiIndex e(l, 0);
    e[k] = 1;
    t.add_term(Prefactor(l, 0), e, Rat(1));
    return t;
}

ThetaOp ThetaOp::linear(std::size_t l, const std::vector<Rat>& coeffs, const Rat& c) {
    ThetaOp t(l);
    for (std::size_t k = 0; k < l; ++k) {
        if (coeffs[k].is_zero()) continue;
        MultiIndex e(l, 0);
        e[k] = 1;
        t.add_term(Prefactor(l, 0), e, coeffs[k]);
    }
    t.add_term(Prefactor(l, 0), MultiIndex(l, 0), c);
    return t;
}

ThetaOp ThetaOp::prefactor(std::size_t l, Prefactor m) {
    ThetaOp t(l);
    t.add_term(m, MultiIndex(l, 0), Rat(1));
    return t;
}

void ThetaOp::add_term(const Prefactor& m, const MultiIndex& e, const Rat& c) {
    if (c.is_zero()) return;
    auto& poly = terms_[m];
    auto it = poly.find(e);
    if (it == poly.end()) {
        poly.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) poly.erase(it);
    }
    if (poly.empty()) terms_.erase(m);
}

ThetaOp ThetaOp::operator-() const {
    ThetaOp r(l_);
    for (const auto& [m, poly] : terms_)
        for (const auto& [e, c] : poly) r.add_term(m, e, -c);
    return r;
}

ThetaOp& ThetaOp::operator+=(const ThetaOp& o) {
    if (terms_.empty() && l_ == 0) l_ = o.l_;
    for (const auto& [m, poly] : o.terms_)
        for (const auto& [e, c] : poly) add_term(m, e, c);
    return *this;
}

ThetaOp& ThetaOp::operator-=(const ThetaOp& o) {
    if (terms_.empty() && l_ == 0) l_ = o.l_;
    for (const auto& [m, poly] : o.terms_)
        for (const auto& [e, c] : poly) add_term(m, e, -c);
    return *this;
}

namespace {

// p(th + m): multivariate shift, exact.
ThetaOp::ThetaPoly shift_poly(const ThetaOp::ThetaPoly& p, const ThetaOp::Prefactor& m,
                              std::size_t l) {
    ThetaOp::ThetaPoly out;
    for (const auto& [e, c] : p) {
        // expand prod_k (th_k + m_k)^{e_k}
        std::vector<std::pair<MultiIndex, Rat>> acc{{MultiIndex(l, 0), c}};
        for (std::size_t k = 0; k < l; ++k) {
            if (e[k] == 0) continue;
            std::vector<std::pair<MultiIndex, Rat>> next;
            for (const auto& [base, coeff] : acc) {
                for (int j = 0; j <= e[k]; ++j) {
                    Rat binom = Rat(binomial(e[k], j));
                    Rat shift_pow = 1;
                    for (int s = 0; s < e[k] - j; ++s) shift_pow *= Rat(m[k]);
                    MultiIndex ne = base;
                    ne[k] += j;
                    Rat nc = coeff * binom * shift_pow;
                    if (!nc.is_zero()) next.emplace_back(std::move(ne), nc);
                }
            }
            acc = std::move(next);
        }
        for (auto& [ne, nc] : acc) {
            auto it = out.find(ne);
            if (it == out.end()) out.emplace(ne, nc);
            else {
                it->second += nc;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

}  // namespace

ThetaOp operator*(const ThetaOp& a, const ThetaOp& b) {
    std::size_t l = a.l_ ? a.l_ : b.l_;
    ThetaOp r(l);
    for (const auto& [ma, pa] : a.terms_) {
        for (const auto& [mb, pb] : b.terms_) {
            // x^ma pa(th) x^mb pb(th) = x^{ma+mb} pa(th + mb) pb(th)
            ThetaOp::Prefactor m(l);
            for (std::size_t k = 0; k < l; ++k) m[k] = ma[k] + mb[k];
            ThetaOp::ThetaPoly shifted = shift_poly(pa, mb, l);
            for (const auto& [ea, ca] : shifted)
                for (const auto& [eb, cb] : pb)
                    r.add_term(m, index_add(ea, eb), ca * cb);
        }
    }
    return r;
}

ThetaOp ThetaOp::scaled(const Rat& c) const {
    ThetaOp r(l_);
    if (c.is_zero()) return r;
    for (const auto& [m, poly] : terms_)
        for (const auto& [e, k] : poly) r.add_term(m, e, k * c);
    return r;
}

std::string ThetaOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [m, poly] : terms_) {
        for (const auto& [e, c] : poly) {
            Rat a = c;
            if (first_term) {
                if (a.sign() < 0) { os << "-"; a = -a; }
            } else {
                os << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) a = -a;
            }
            first_term = false;
            bool has_var = !std::all_of(m.begin(), m.end(), [](long v) { return v == 0; }) ||
                           !is_zero_index(e);
            bool coeff_shown = !a.is_one() || !has_var;
            if (coeff_shown) os << a.str();
            bool need_star = coeff_shown;
            for (std::size_t k = 0; k < l_; ++k) {
                if (m[k] == 0) continue;
                if (need_star) os << "*";
                os << (l_ == 1 ? "x" : "x" + std::to_string(k + 1));
                if (m[k] < 0) os << "^(" << m[k] << ")";
                else if (m[k] != 1) os << "^" << m[k];
                need_star = true;
            }
            for (std::size_t k = 0; k < l_; ++k) {
                if (e[k] == 0) continue;
                if (need_star) os << "*";
                os << (l_ == 1 ? "th" : "th" + std::to_string(k + 1));
                if (e[k] > 1) os << "^" << e[k];
                need_star = true;
            }
        }
    }
    return os.str();
}

namespace {

std::vector<long> coords_in_kernel_basis(const IntMatrix& pi, const std::vector<Int>& a) {
    // Solve pi m = a exactly; columns of pi are independent.
    std::vector<Rat> rhs(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) rhs[i] = Rat(a[i]);
    std::vector<Rat> m = solve_rational(pi, rhs);
    // solve_rational returns the unique solution (full column rank); it must
    // be integral and reproduce a.
    auto check = mat_apply(pi, m);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(check[i] == rhs[i]))
            throw domain_error("lattice generator outside the kernel span");
    std::vector<long> out(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (!m[k].is_integer())
            throw domain_error("lattice generator has non-integral kernel coordinates");
        out[k] = static_cast<long>(m[k].num().get_si());
    }
    return out;
}

}  // namespace

ReductionData reduce(const GkzData& data,
                     const std::vector<std::vector<Int>>& lattice_gens,
                     const std::optional<std::vector<Rat>>& lambda_cap_override) {
    ReductionData rd;
    rd.data = data;
    rd.pi = data.lattice;
    std::size_t N = data.N();
    std::size_t l = rd.pi.cols();

    if (lambda_cap_override) {
        if (lambda_cap_override->size() != N)
            throw domain_error("Lambda override length must be N");
        auto image = mat_apply(data.chi, *lambda_cap_override);
        for (std::size_t i = 0; i < data.n(); ++i)
            if (!(image[i] == data.lambda[i]))
                throw domain_error("Lambda override does not solve chi Lambda = lambda");
        rd.capital_lambda = *lambda_cap_override;
    } else {
        rd.capital_lambda = solve_rational(data.chi, data.lambda);
    }

    for (const auto& a : lattice_gens) {
        if (a.size() != N) throw domain_error("lattice vector length must be N");
        ReducedOperator op;
        op.lattice_vector = a;
        op.prefactor = coords_in_kernel_basis(rd.pi, a);

        ThetaOp plus = ThetaOp::constant(l, Rat(1));
        ThetaOp minus = ThetaOp::constant(l, Rat(1));
        for (std::size_t j = 0; j < N; ++j) {
            if (!a[j].fits_slong_p()) throw domain_error("lattice entry too large");
            long aj = a[j].get_si();
            if (aj == 0) continue;
            std::vector<Rat> dj(l);
            for (std::size_t k = 0; k < l; ++k) dj[k] = Rat(rd.pi.at(j, k));
            if (aj > 0) {
                // (D_j + Lambda_j - a_j + 1)_{a_j}
                for (long s = 0; s < aj; ++s) {
                    Rat c = rd.capital_lambda[j] - Rat(aj) + Rat(1) + Rat(s);
                    plus = plus * ThetaOp::linear(l, dj, c);
                    op.plus_factors.push_back(LinearFactor{l == 1 ? dj[0] : Rat(0), c});
                }
            } else {
                // (D_j + Lambda_j + a_j + 1)_{|a_j|}
                for (long s = 0; s < -aj; ++s) {
                    Rat c = rd.capital_lambda[j] + Rat(aj) + Rat(1) + Rat(s);
                    minus = minus * ThetaOp::linear(l, dj, c);
                    op.minus_factors.push_back(LinearFactor{l == 1 ? dj[0] : Rat(0), c});
                }
            }
        }
        op.op = plus - ThetaOp::prefactor(l, op.prefactor) * minus;
        rd.operators.push_back(std::move(op));
    }
    return rd;
}

ReductionData reduce(const GkzData& data,
                     const std::optional<std::vector<Rat>>& lambda_cap_override) {
    std::vector<std::vector<Int>> gens;
    for (std::size_t k = 0; k < data.lattice.cols(); ++k)
        gens.push_back(data.lattice.col(k));
    return reduce(data, gens, lambda_cap_override);
}

ThetaOp pullback_euler_row(const ReductionData& rd, std::size_t row) {
    std::size_t N = rd.data.N(), l = rd.pi.cols();
    ThetaOp acc(l);
    for (std::size_t j = 0; j < N; ++j) {
        std::vector<Rat> dj(l);
        for (std::size_t k = 0; k < l; ++k) dj[k] = Rat(rd.pi.at(j, k));
        ThetaOp sub = ThetaOp::linear(l, dj, rd.capital_lambda[j]);
        acc += sub.scaled(Rat(rd.data.chi.at(row, j)));
    }
    acc -= ThetaOp::constant(l, rd.data.lambda[row]);
    return acc;
}

namespace {

std::string factor_str(const Rat& c) {
    std::ostringstream os;
    os << "(th ";
    if (c.sign() < 0) os << "- " << (-c).str();
    else os << "+ " << c.str();
    os << ")";
    return os.str();
}

}  // namespace

PfqReport fuchsian_l1(const ReductionData& rd) {
    if (rd.pi.cols() != 1) throw domain_error("fuchsian_l1 needs a rank-1 kernel");
    if (rd.operators.size() != 1)
        throw domain_error("fuchsian_l1 expects exactly one reduced operator");
    const ReducedOperator& op = rd.operators[0];

    PfqReport rep;
    for (std::size_t j = 0; j < rd.data.N(); ++j) {
        long pj = rd.pi.at(j, 0).get_si();
        if (pj > 0) rep.p += static_cast<int>(pj);
    }

    Rat alpha(1), beta(1);
    for (const auto& f : op.plus_factors) {
        alpha *= f.lead;
        rep.raw_plus.push_back(f.constant / f.lead);
    }
    for (const auto& f : op.minus_factors) {
        beta *= f.lead;
        rep.raw_minus.push_back(f.constant / f.lead);
    }
    rep.argument_scale = beta / alpha;

    // Monic form A(th) - scale x B(th).
    ThetaOp monic_a = ThetaOp::constant(1, Rat(1));
    for (const auto& c : rep.raw_plus)
        monic_a = monic_a * ThetaOp::linear(1, {Rat(1)}, c);
    ThetaOp monic_b = ThetaOp::constant(1, Rat(1));
    for (const auto& c : rep.raw_minus)
        monic_b = monic_b * ThetaOp::linear(1, {Rat(1)}, c);
    rep.normalized =
        monic_a - (ThetaOp::prefactor(1, {1}) * monic_b).scaled(rep.argument_scale);

    // Classical readout: one factor th on the constant slack turns into the
    // m! of the series; the rest shift by one into lower parameters.
    auto zero_it = std::find(rep.raw_plus.begin(), rep.raw_plus.end(), Rat(0));
    if (zero_it != rep.raw_plus.end()) {
        rep.pfq_form = true;
        rep.upper = rep.raw_minus;
        for (auto it = rep.raw_plus.begin(); it != rep.raw_plus.end(); ++it)
            if (it != zero_it) rep.lower.push_back(*it + Rat(1));
    } else {
        rep.note = "no plain th factor; parameters reported raw";
    }

    std::ostringstream os;
    for (std::size_t i = 0; i < rep.raw_plus.size(); ++i)
        os << (i ? "*" : "") << factor_str(rep.raw_plus[i]);
    if (rep.raw_plus.empty()) os << "1";
    Rat s = rep.argument_scale;
    if (s.sign() >= 0) os << " - ";
    else { os << " + "; s = -s; }
    if (!s.is_one()) os << s.str() << "*";
    os << "x";
    for (const auto& c : rep.raw_minus) os << "*" << factor_str(c);
    rep.rendering = os.str();
    return rep;
}

SeriesRecurrence::SeriesRecurrence(std::vector<Rat> a, std::vector<Rat> b)
    : a_(std::move(a)), b_(std::move(b)) {}

SeriesRecurrence SeriesRecurrence::from_op(const ThetaOp& op) {
    if (op.nvars() != 1) throw domain_error("series recurrence needs l = 1");
    std::vector<Rat> a, b;
    for (const auto& [m, poly] : op.terms()) {
        std::vector<Rat>* dst = nullptr;
        Rat sign(1);
        if (m[0] == 0) {
            dst = &a;
        } else if (m[0] == 1) {
            dst = &b;
            sign = Rat(-1);  // operator is A - x B
        } else {
            throw domain_error("operator is not in two-slack form A(th) - x B(th)");
        }
        for (const auto& [e, c] : poly) {
            std::size_t deg = static_cast<std::size_t>(e[0]);
            if (dst->size() <= deg) dst->resize(deg + 1, Rat(0));
            (*dst)[deg] += sign * c;
        }
    }
    if (a.empty()) throw domain_error("operator is not in two-slack form A(th) - x B(th)");
    return SeriesRecurrence(std::move(a), std::move(b));
}

Rat SeriesRecurrence::eval_a(const Rat& t) const {
    Rat acc(0), pow(1);
    for (const auto& c : a_) {
        acc += c * pow;
        pow *= t;
    }
    return acc;
}

Rat SeriesRecurrence::eval_b(const Rat& t) const {
    Rat acc(0), pow(1);
    for (const auto& c : b_) {
        acc += c * pow;
        pow *= t;
    }
    return acc;
}

std::optional<Rat> SeriesRecurrence::ratio(long m) const {
    Rat denom = eval_a(Rat(m + 1));
    if (denom.is_zero()) return std::nullopt;
    return eval_b(Rat(m)) / denom;
}

SeriesRecurrence::Coefficients SeriesRecurrence::coefficients(long count) const {
    Coefficients out;
    out.values.push_back(Rat(1));
    for (long m = 0; m < count; ++m) {
        auto r = ratio(m);
        if (!r) {
            out.obstruction_at = m;
            break;
        }
        out.values.push_back(out.values.back() * *r);
    }
    return out;
}

}  // namespace weylkit
