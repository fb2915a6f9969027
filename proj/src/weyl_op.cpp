#include "weylkit/weyl_op.hpp"

#include <algorithm>
#include <sstream>

namespace weylkit {

std::string TwistedPower::str() const {
    std::ostringstream os;
    os << coeff.str();
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i].is_zero()) continue;
        os << "*x" << (i + 1);
        if (!exps[i].is_one()) os << "^(" << exps[i].str() << ")";
    }
    return os.str();
}

WeylOp WeylOp::constant(std::size_t n, const Rat& c) {
    WeylOp p(n);
    p.add_term(MultiIndex(n, 0), MultiIndex(n, 0), c);
    return p;
}

WeylOp WeylOp::x_var(std::size_t n, std::size_t i) {
    MultiIndex a(n, 0), b(n, 0);
    a[i] = 1;
    return monomial(n, a, b);
}

WeylOp WeylOp::d_var(std::size_t n, std::size_t i) {
    MultiIndex a(n, 0), b(n, 0);
    b[i] = 1;
    return monomial(n, a, b);
}

WeylOp WeylOp::monomial(std::size_t n, MultiIndex a, MultiIndex b, const Rat& c) {
    WeylOp p(n);
    p.add_term(a, b, c);
    return p;
}

WeylOp WeylOp::euler(std::size_t n, const std::vector<Rat>& w) {
    WeylOp p(n);
    for (std::size_t j = 0; j < n; ++j) {
        MultiIndex a(n, 0), b(n, 0);
        a[j] = 1;
        b[j] = 1;
        p.add_term(a, b, w[j]);
    }
    return p;
}

void WeylOp::add_term(const MultiIndex& a, const MultiIndex& b, const Rat& c) {
    if (c.is_zero()) return;
    if (a.size() != n_ || b.size() != n_) throw domain_error("multi-index length mismatch");
    Key k{a, b};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylOp WeylOp::operator-() const {
    WeylOp r(n_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
    if (terms_.empty() && n_ == 0) n_ = o.n_;
    if (n_ != o.n_) throw domain_error("ambient dimension mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
    if (terms_.empty() && n_ == 0) n_ = o.n_;
    if (n_ != o.n_) throw domain_error("ambient dimension mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

WeylOp WeylOp::scaled(const Rat& c) const {
    WeylOp r(n_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

WeylOp multiply(const WeylOp& p, const WeylOp& q) {
    if (p.dim() != q.dim()) throw domain_error("ambient dimension mismatch");
    std::size_t n = p.dim();
    WeylOp r(n);
    for (const auto& [kp, cp] : p.terms()) {
        const auto& [a, b] = kp;
        for (const auto& [kq, cq] : q.terms()) {
            const auto& [g, d] = kq;
            // d^b x^g expansion, v running below min(b, g) componentwise.
            MultiIndex vmax = index_min(b, g);
            MultiIndex v(n, 0);
            while (true) {
                Int num = 1;
                for (std::size_t i = 0; i < n; ++i) {
                    if (v[i] == 0) continue;
                    num *= binomial(b[i], v[i]) * binomial(g[i], v[i]) * factorial(v[i]);
                }
                MultiIndex xa = index_add(a, index_sub(g, v));
                MultiIndex db = index_add(d, index_sub(b, v));
                r.add_term(xa, db, cp * cq * Rat(num));
                // odometer over v <= vmax
                std::size_t i = 0;
                while (i < n && v[i] == vmax[i]) {
                    v[i] = 0;
                    ++i;
                }
                if (i == n) break;
                ++v[i];
            }
        }
    }
    return r;
}

WeylOp commutator(const WeylOp& p, const WeylOp& q) {
    return multiply(p, q) - multiply(q, p);
}

std::optional<int> op_order(const WeylOp& p) {
    if (p.is_zero()) return std::nullopt;
    int m = 0;
    for (const auto& [k, c] : p.terms()) m = std::max(m, total_degree(k.second));
    return m;
}

Poly principal_symbol(const WeylOp& p, int m, const RingPtr& ring) {
    if (ring->nvars() != 2 * p.dim())
        throw domain_error("symbol ring must have 2N variables");
    auto ord = op_order(p);
    if (ord && m < *ord) throw domain_error("symbol level below operator order");
    Poly s(ring);
    for (const auto& [k, c] : p.terms()) {
        if (total_degree(k.second) != m) continue;
        MultiIndex e(2 * p.dim(), 0);
        for (std::size_t i = 0; i < p.dim(); ++i) {
            e[i] = k.first[i];
            e[p.dim() + i] = k.second[i];
        }
        s.add_term(e, c);
    }
    return s;
}

Poly principal_symbol(const WeylOp& p, const RingPtr& ring) {
    auto ord = op_order(p);
    if (!ord) return Poly(ring);
    return principal_symbol(p, *ord, ring);
}

namespace {

// Normal order of d^b x^a.
WeylOp reorder(std::size_t n, const MultiIndex& b, const MultiIndex& a) {
    return multiply(WeylOp::monomial(n, MultiIndex(n, 0), b),
                    WeylOp::monomial(n, a, MultiIndex(n, 0)));
}

}  // namespace

WeylOp formal_adjoint(const WeylOp& p) {
    std::size_t n = p.dim();
    WeylOp r(n);
    for (const auto& [k, c] : p.terms()) {
        // (x^a d^b)* = (-1)^{|b|} d^b x^a
        int sign = total_degree(k.second) % 2 ? -1 : 1;
        r += reorder(n, k.second, k.first).scaled(c * Rat(sign));
    }
    return r;
}

WeylOp fourier_transform(const WeylOp& p) {
    std::size_t n = p.dim();
    WeylOp r(n);
    for (const auto& [k, c] : p.terms()) {
        // x^a d^b -> (-d)^a x^b, re-normal-ordered in the dual coordinates.
        int sign = total_degree(k.first) % 2 ? -1 : 1;
        r += reorder(n, k.first, k.second).scaled(c * Rat(sign));
    }
    return r;
}

std::optional<int> grading_degree(const WeylOp& p) {
    if (p.is_zero()) return 0;
    std::optional<int> deg;
    for (const auto& [k, c] : p.terms()) {
        int d = total_degree(k.second) - total_degree(k.first);
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg;
}

std::vector<TwistedPower> apply_twisted(const WeylOp& p, const TwistedPower& t) {
    if (t.exps.size() != p.dim()) throw domain_error("exponent length mismatch");
    std::map<std::vector<Rat>, Rat> acc;
    for (const auto& [k, c] : p.terms()) {
        const auto& [a, b] = k;
        Rat factor = t.coeff * c;
        std::vector<Rat> e = t.exps;
        for (std::size_t i = 0; i < p.dim() && !factor.is_zero(); ++i) {
            for (int s = 0; s < b[i]; ++s) {
                factor *= e[i] - Rat(s);  // falling factorial
            }
            e[i] = e[i] - Rat(b[i]) + Rat(a[i]);
        }
        if (factor.is_zero()) continue;
        acc[e] += factor;
    }
    std::vector<TwistedPower> out;
    for (auto& [e, c] : acc)
        if (!c.is_zero()) out.push_back(TwistedPower{c, e});
    return out;
}

Poly apply_poly(const WeylOp& p, const Poly& f) {
    if (!f.ring() || f.ring()->nvars() != p.dim())
        throw domain_error("polynomial ring dimension mismatch");
    Poly r(f.ring());
    for (const auto& [k, c] : p.terms()) {
        const auto& [a, b] = k;
        for (const auto& [g, cg] : f.terms()) {
            Rat factor = c * cg;
            MultiIndex e(p.dim(), 0);
            bool dead = false;
            for (std::size_t i = 0; i < p.dim(); ++i) {
                if (b[i] > g[i]) { dead = true; break; }
                for (int s = 0; s < b[i]; ++s) factor *= Rat(g[i] - s);
                e[i] = g[i] - b[i] + a[i];
            }
            if (!dead) r.add_term(e, factor);
        }
    }
    return r;
}

MonomialOrder weyl_term_order(std::size_t n) {
    std::vector<long> w(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) w[n + i] = 1;
    return MonomialOrder::weighted(std::move(w));
}

WeylOp::Key weyl_leading_key(const WeylOp& p) {
    if (p.is_zero()) throw domain_error("leading key of zero operator");
    MonomialOrder ord = weyl_term_order(p.dim());
    const WeylOp::Key* best = nullptr;
    MultiIndex best_cat;
    for (const auto& [k, c] : p.terms()) {
        MultiIndex cat(k.first);
        cat.insert(cat.end(), k.second.begin(), k.second.end());
        if (!best || ord.less(best_cat, cat)) {
            best = &k;
            best_cat = std::move(cat);
        }
    }
    return *best;
}

std::string WeylOp::str() const {
    if (terms_.empty()) return "0";
    MonomialOrder ord = weyl_term_order(n_);
    std::vector<const std::pair<const Key, Rat>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    auto cat = [&](const Key& k) {
        MultiIndex c(k.first);
        c.insert(c.end(), k.second.begin(), k.second.end());
        return c;
    };
    std::stable_sort(ts.begin(), ts.end(), [&](auto* u, auto* v) {
        return ord.less(cat(v->first), cat(u->first));
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        const auto& [k, c] = *t;
        Rat a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool has_var = !is_zero_index(k.first) || !is_zero_index(k.second);
        bool coeff_shown = !a.is_one() || !has_var;
        if (coeff_shown) os << a.str();
        bool need_star = coeff_shown;
        auto emit = [&](const char* base, const MultiIndex& e) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (need_star) os << "*";
                os << base << (i + 1);
                if (e[i] > 1) os << "^" << e[i];
                need_star = true;
            }
        };
        emit("x", k.first);
        emit("d", k.second);
    }
    return os.str();
}

}  // namespace weylkit
