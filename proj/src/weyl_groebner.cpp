#include "weylkit/weyl_groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace weylkit {

namespace {

MultiIndex cat(const WeylOp::Key& k) {
    MultiIndex c(k.first);
    c.insert(c.end(), k.second.begin(), k.second.end());
    return c;
}

bool key_divides(const WeylOp::Key& a, const WeylOp::Key& b) {
    return index_divides(a.first, b.first) && index_divides(a.second, b.second);
}

WeylOp::Key key_lcm(const WeylOp::Key& a, const WeylOp::Key& b) {
    return {index_lcm(a.first, b.first), index_lcm(a.second, b.second)};
}

WeylOp::Key key_sub(const WeylOp::Key& a, const WeylOp::Key& b) {
    return {index_sub(a.first, b.first), index_sub(a.second, b.second)};
}

}  // namespace

WIdeal WIdeal::make(std::size_t n, std::vector<WeylOp> gens) {
    WIdeal i;
    i.n = n;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.dim() != n) throw domain_error("generator dimension mismatch");
        i.gens.push_back(std::move(g));
    }
    return i;
}

WeylOp weyl_normal_form(const WeylOp& f, const std::vector<WeylOp>& basis) {
    if (f.is_zero()) return f;
    std::size_t n = f.dim();
    std::vector<const WeylOp*> gs;
    std::vector<WeylOp::Key> lead_keys;
    std::vector<Rat> lead_coeffs;
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        gs.push_back(&g);
        lead_keys.push_back(weyl_leading_key(g));
        lead_coeffs.push_back(g.terms().at(lead_keys.back()));
    }
    WeylOp p = f;
    WeylOp remainder(n);
    // reduce the leading term; irreducible leading terms migrate to the
    // remainder (reductions only add strictly smaller terms)
    while (!p.is_zero()) {
        WeylOp::Key lt = weyl_leading_key(p);
        Rat c = p.terms().at(lt);
        std::size_t hit = gs.size();
        for (std::size_t k = 0; k < gs.size(); ++k)
            if (key_divides(lead_keys[k], lt)) {
                hit = k;
                break;
            }
        if (hit == gs.size()) {
            remainder.add_term(lt.first, lt.second, c);
            p.add_term(lt.first, lt.second, -c);
            continue;
        }
        WeylOp::Key shift = key_sub(lt, lead_keys[hit]);
        p -= multiply(WeylOp::monomial(n, shift.first, shift.second, c / lead_coeffs[hit]),
                      *gs[hit]);
    }
    return remainder;
}

WIdeal weyl_groebner(WIdeal ideal) {
    return weyl_groebner(std::move(ideal), weyl_term_order(0));
}

WIdeal weyl_groebner(WIdeal ideal, const MonomialOrder& order) {
    std::size_t n = ideal.n;
    // Only the d-degree-compatible weighted order is accepted: with any other
    // order the symbols of the basis need not generate gr I.
    if (!(order == weyl_term_order(0)) && !(order == weyl_term_order(n)))
        throw domain_error("weyl_groebner requires the d-degree-compatible order");
    if (ideal.basis) return ideal;
    MonomialOrder ord = weyl_term_order(n);

    std::vector<WeylOp> g;
    for (const auto& p : ideal.gens)
        if (!p.is_zero()) g.push_back(p);

    using PairKey = std::tuple<int, std::size_t, std::size_t>;
    std::set<PairKey> queue;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            auto l = key_lcm(weyl_leading_key(g[i]), weyl_leading_key(g[j]));
            queue.emplace(total_degree(l.first) + total_degree(l.second), i, j);
        }
    };
    for (std::size_t j = 0; j < g.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        // No product criterion here: x_i and d_i do not commute, so the
        // commutative shortcut is unsound for left ideals.
        WeylOp::Key ki = weyl_leading_key(g[i]);
        WeylOp::Key kj = weyl_leading_key(g[j]);
        WeylOp::Key l = key_lcm(ki, kj);
        WeylOp::Key si = key_sub(l, ki);
        WeylOp::Key sj = key_sub(l, kj);
        WeylOp s =
            multiply(WeylOp::monomial(n, si.first, si.second, Rat(1) / g[i].terms().at(ki)), g[i]) -
            multiply(WeylOp::monomial(n, sj.first, sj.second, Rat(1) / g[j].terms().at(kj)), g[j]);
        WeylOp nf = weyl_normal_form(s, g);
        if (nf.is_zero()) continue;
        g.push_back(nf);
        push_pairs(g.size() - 1);
    }

    // Reduced basis: minimal, tail-reduced, monic, sorted by leading key.
    g.erase(std::remove_if(g.begin(), g.end(), [](const WeylOp& p) { return p.is_zero(); }),
            g.end());
    std::stable_sort(g.begin(), g.end(), [&](const WeylOp& a, const WeylOp& b) {
        return ord.less(cat(weyl_leading_key(a)), cat(weyl_leading_key(b)));
    });
    std::vector<WeylOp> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto lk = weyl_leading_key(g[i]);
        bool dominated = false;
        for (std::size_t j = 0; j < g.size() && !dominated; ++j) {
            if (j == i) continue;
            auto ok = weyl_leading_key(g[j]);
            if (key_divides(ok, lk) && (ok != lk || j < i)) dominated = true;
        }
        if (!dominated) minimal.push_back(g[i]);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<WeylOp> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            WeylOp nf = weyl_normal_form(minimal[i], others);
            if (!(nf == minimal[i])) {
                minimal[i] = nf;
                changed = true;
            }
        }
    }
    for (auto& p : minimal) {
        auto lk = weyl_leading_key(p);
        p = p.scaled(Rat(1) / p.terms().at(lk));
    }
    std::stable_sort(minimal.begin(), minimal.end(), [&](const WeylOp& a, const WeylOp& b) {
        return ord.less(cat(weyl_leading_key(a)), cat(weyl_leading_key(b)));
    });
    ideal.basis = std::move(minimal);
    return ideal;
}

bool weyl_membership(const WeylOp& f, const WIdeal& ideal) {
    WIdeal with = ideal.basis ? ideal : weyl_groebner(ideal);
    return weyl_normal_form(f, *with.basis).is_zero();
}

CIdeal gr_ideal(const WIdeal& ideal, const RingPtr& ring) {
    if (!ideal.basis) throw domain_error("gr_ideal needs a computed basis");
    std::vector<Poly> gens;
    for (const auto& p : *ideal.basis) gens.push_back(principal_symbol(p, ring));
    return CIdeal::make(ring, std::move(gens));
}

CIdeal gr_ideal(const WIdeal& ideal) {
    return gr_ideal(ideal, PolyRing::symplectic(ideal.n));
}

CharReport characteristic_report(WIdeal ideal, par::Exec exec) {
    CharReport rep;
    rep.n = ideal.n;
    rep.ideal = weyl_groebner(std::move(ideal));
    rep.graded = groebner(gr_ideal(rep.ideal), MonomialOrder::degrevlex());
    rep.dimension = krull_dimension(rep.graded, exec);
    rep.module_is_zero = !rep.dimension.has_value();
    int n = static_cast<int>(rep.n);
    rep.bernstein_ok = rep.module_is_zero || *rep.dimension >= n;
    rep.holonomic = rep.module_is_zero || *rep.dimension == n;
    rep.connection_like = true;
    for (std::size_t i = 0; i < rep.n && rep.connection_like; ++i) {
        Poly xi = Poly::variable(rep.graded.ring, rep.n + i);
        if (!membership(xi, rep.graded, MonomialOrder::degrevlex()))
            rep.connection_like = false;
    }
    rep.involutivity = involutivity_certificate(rep.graded, exec);
    return rep;
}

}  // namespace weylkit
