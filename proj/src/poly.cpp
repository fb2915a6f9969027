#include "weylkit/poly.hpp"

#include <algorithm>
#include <sstream>

namespace weylkit {

std::shared_ptr<const PolyRing> PolyRing::symplectic(std::size_t n) {
    auto r = std::make_shared<PolyRing>();
    for (std::size_t i = 1; i <= n; ++i) r->vars_.push_back("z" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) r->vars_.push_back("xi" + std::to_string(i));
    r->symplectic_n_ = n;
    return r;
}

std::shared_ptr<const PolyRing> PolyRing::named(std::vector<std::string> vars) {
    auto r = std::make_shared<PolyRing>();
    r->vars_ = std::move(vars);
    return r;
}

std::shared_ptr<const PolyRing> PolyRing::xi_only(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= n; ++i) v.push_back("xi" + std::to_string(i));
    return named(std::move(v));
}

std::shared_ptr<const PolyRing> PolyRing::extended_front(
    const std::shared_ptr<const PolyRing>& base, const std::string& name) {
    std::vector<std::string> v;
    v.push_back(name);
    for (const auto& x : base->vars()) v.push_back(x);
    return named(std::move(v));
}

std::optional<std::size_t> PolyRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

Poly::Poly(RingPtr ring, const Rat& c) : ring_(std::move(ring)) {
    if (!c.is_zero()) terms_.emplace(MultiIndex(ring_->nvars(), 0), c);
}

Poly Poly::monomial(RingPtr ring, MultiIndex e, const Rat& c) {
    Poly p(std::move(ring));
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
}

Poly Poly::variable(RingPtr ring, std::size_t i) {
    MultiIndex e(ring->nvars(), 0);
    e[i] = 1;
    return monomial(std::move(ring), std::move(e));
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

void Poly::add_term(const MultiIndex& e, const Rat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (!ring_) ring_ = o.ring_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (!ring_) ring_ = o.ring_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.ring_ ? a.ring_ : b.ring_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(index_add(ea, eb), ca * cb);
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Poly Poly::shifted(const MultiIndex& e, const Rat& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(index_add(m, e), k * c);
    return r;
}

const MultiIndex& Poly::leading_monomial(const MonomialOrder& o) const {
    const MultiIndex* best = nullptr;
    for (const auto& [e, c] : terms_)
        if (!best || o.less(*best, e)) best = &e;
    if (!best) throw domain_error("leading monomial of zero polynomial");
    return *best;
}

const Rat& Poly::leading_coeff(const MonomialOrder& o) const {
    return terms_.at(leading_monomial(o));
}

Poly Poly::derivative(std::size_t var) const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        MultiIndex d = e;
        d[var] -= 1;
        r.add_term(d, c * Rat(e[var]));
    }
    return r;
}

Poly Poly::substituted(const RingPtr& target, const std::vector<Poly>& images) const {
    if (images.size() != ring_->nvars())
        throw domain_error("substitution image count mismatch");
    Poly r(target);
    for (const auto& [e, c] : terms_) {
        Poly t(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= images[i];
        r += t;
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    // Descending degrevlex listing.
    auto drl = MonomialOrder::degrevlex();
    std::vector<const std::pair<const MultiIndex, Rat>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) { return drl.less(b->first, a->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        const auto& [e, c] = *t;
        Rat a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool has_var = !is_zero_index(e);
        bool coeff_shown = !a.is_one() || !has_var;
        if (coeff_shown) os << a.str();
        bool need_star = coeff_shown;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << ring_->var(i);
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace weylkit
