#include "weylkit/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>

namespace weylkit {

CIdeal CIdeal::make(RingPtr ring, std::vector<Poly> gens) {
    CIdeal i;
    i.ring = std::move(ring);
    for (auto& g : gens)
        if (!g.is_zero()) i.gens.push_back(std::move(g));
    return i;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis,
                 const MonomialOrder& order) {
    std::vector<const Poly*> gs;
    std::vector<const MultiIndex*> lead_mons;
    std::vector<Rat> lead_coeffs;
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        gs.push_back(&g);
        lead_mons.push_back(&g.leading_monomial(order));
        lead_coeffs.push_back(g.terms().at(*lead_mons.back()));
    }
    Poly p = f;
    Poly remainder(f.ring());
    while (!p.is_zero()) {
        const MultiIndex& lm = p.leading_monomial(order);
        const Rat lc = p.terms().at(lm);
        std::size_t hit = gs.size();
        for (std::size_t k = 0; k < gs.size(); ++k)
            if (index_divides(*lead_mons[k], lm)) {
                hit = k;
                break;
            }
        if (hit == gs.size()) {
            remainder.add_term(lm, lc);
            p.add_term(lm, -lc);
            continue;
        }
        p -= gs[hit]->shifted(index_sub(lm, *lead_mons[hit]), lc / lead_coeffs[hit]);
    }
    return remainder;
}

namespace {

// Minimalize + tail-reduce + monic + sort: the unique reduced basis.
std::vector<Poly> reduce_basis(std::vector<Poly> g, const MonomialOrder& order) {
    g.erase(std::remove_if(g.begin(), g.end(), [](const Poly& p) { return p.is_zero(); }),
            g.end());
    std::stable_sort(g.begin(), g.end(), [&](const Poly& a, const Poly& b) {
        return order.less(a.leading_monomial(order), b.leading_monomial(order));
    });
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& lm = g[i].leading_monomial(order);
        bool dominated = false;
        for (std::size_t j = 0; j < g.size() && !dominated; ++j) {
            if (j == i) continue;
            const auto& other = g[j].leading_monomial(order);
            if (index_divides(other, lm) && (other != lm || j < i)) dominated = true;
        }
        if (!dominated) minimal.push_back(g[i]);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Poly> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Poly nf = normal_form(minimal[i], others, order);
            if (!(nf == minimal[i])) {
                minimal[i] = nf;
                changed = true;
            }
        }
    }
    for (auto& p : minimal) p = p.scaled(Rat(1) / p.leading_coeff(order));
    std::stable_sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
        return order.less(a.leading_monomial(order), b.leading_monomial(order));
    });
    return minimal;
}

}  // namespace

CIdeal groebner(CIdeal ideal, const MonomialOrder& order) {
    if (ideal.basis && ideal.basis->order == order) return ideal;
    std::vector<Poly> g;
    for (const auto& p : ideal.gens)
        if (!p.is_zero()) g.push_back(p);

    using PairKey = std::tuple<int, std::size_t, std::size_t>;
    std::set<PairKey> queue;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            const auto lcm = index_lcm(g[i].leading_monomial(order),
                                       g[j].leading_monomial(order));
            queue.emplace(total_degree(lcm), i, j);
        }
    };
    for (std::size_t j = 0; j < g.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        const auto& fi = g[i];
        const auto& fj = g[j];
        const auto& mi = fi.leading_monomial(order);
        const auto& mj = fj.leading_monomial(order);
        if (index_disjoint(mi, mj)) continue;  // product criterion
        MultiIndex lcm = index_lcm(mi, mj);
        Poly s = fi.shifted(index_sub(lcm, mi), Rat(1) / fi.terms().at(mi)) -
                 fj.shifted(index_sub(lcm, mj), Rat(1) / fj.terms().at(mj));
        Poly nf = normal_form(s, g, order);
        if (nf.is_zero()) continue;
        g.push_back(nf);
        push_pairs(g.size() - 1);
    }

    GroebnerBasis basis;
    basis.order = order;
    basis.polys = reduce_basis(std::move(g), order);
    ideal.basis = std::move(basis);
    return ideal;
}

bool membership(const Poly& f, const CIdeal& ideal, const MonomialOrder& order) {
    CIdeal with = ideal.basis ? ideal : groebner(ideal, order);
    return normal_form(f, with.basis->polys, with.basis->order).is_zero();
}

std::optional<int> krull_dimension(const CIdeal& ideal, par::Exec exec) {
    CIdeal with = groebner(ideal, MonomialOrder::degrevlex());
    if (with.basis->contains_one()) return std::nullopt;
    std::size_t v = ideal.ring->nvars();
    if (v > 20) throw domain_error("independent-set scan limited to 20 variables");
    std::vector<std::uint32_t> lm_masks;
    for (const auto& p : with.basis->polys) {
        std::uint32_t m = 0;
        const auto& lm = p.leading_monomial(with.basis->order);
        for (std::size_t k = 0; k < v; ++k)
            if (lm[k] > 0) m |= (1u << k);
        lm_masks.push_back(m);
    }
    std::size_t count = std::size_t(1) << v;
    std::size_t blocks = std::min<std::size_t>(count, 256);
    std::size_t per_block = count / blocks;
    std::vector<int> best_of(blocks, 0);
    par::for_index(blocks, exec, [&](std::size_t b) {
        int best = 0;
        for (std::size_t s = b * per_block; s < (b + 1) * per_block; ++s) {
            std::uint32_t subset = static_cast<std::uint32_t>(s);
            bool independent = true;
            for (std::uint32_t m : lm_masks)
                if ((m & ~subset) == 0) {  // some initial monomial lives in subset
                    independent = false;
                    break;
                }
            if (independent) best = std::max(best, __builtin_popcount(subset));
        }
        best_of[b] = best;
    });
    int best = 0;
    for (int sc : best_of) best = std::max(best, sc);
    return best;
}

namespace {

// Lift into a ring with the auxiliary variable in front.
Poly lift_front(const Poly& p, const RingPtr& ext) {
    Poly r(ext);
    for (const auto& [e, c] : p.terms()) {
        MultiIndex m(e.size() + 1, 0);
        std::copy(e.begin(), e.end(), m.begin() + 1);
        r.add_term(m, c);
    }
    return r;
}

std::vector<Poly> eliminate_front(const CIdeal& ext_ideal, const RingPtr& base) {
    CIdeal gb = groebner(ext_ideal, MonomialOrder::block_elim(1));
    std::vector<Poly> out;
    for (const auto& p : gb.basis->polys) {
        bool has_aux = false;
        for (const auto& [e, c] : p.terms())
            if (e[0] > 0) { has_aux = true; break; }
        if (has_aux) continue;
        Poly q(base);
        for (const auto& [e, c] : p.terms())
            q.add_term(MultiIndex(e.begin() + 1, e.end()), c);
        out.push_back(q);
    }
    return out;
}

}  // namespace

CIdeal saturate(const CIdeal& ideal, const Poly& f) {
    if (f.is_zero()) throw domain_error("saturation by zero");
    if (f.is_constant()) return ideal;
    RingPtr ext = PolyRing::extended_front(ideal.ring, "t");
    std::vector<Poly> gens;
    for (const auto& g : ideal.gens) gens.push_back(lift_front(g, ext));
    // 1 - t f
    Poly tf = lift_front(f, ext);
    MultiIndex t(ext->nvars(), 0);
    t[0] = 1;
    Poly cut = Poly(ext, Rat(1)) - tf.shifted(t, Rat(1));
    gens.push_back(cut);
    auto contracted = eliminate_front(CIdeal::make(ext, std::move(gens)), ideal.ring);
    return groebner(CIdeal::make(ideal.ring, std::move(contracted)),
                    MonomialOrder::degrevlex());
}

CIdeal intersect(const CIdeal& a, const CIdeal& b) {
    if (!a.ring->same(*b.ring)) throw domain_error("intersection across rings");
    RingPtr ext = PolyRing::extended_front(a.ring, "t");
    MultiIndex t(ext->nvars(), 0);
    t[0] = 1;
    std::vector<Poly> gens;
    for (const auto& g : a.gens) gens.push_back(lift_front(g, ext).shifted(t, Rat(1)));
    for (const auto& g : b.gens) {
        Poly lifted = lift_front(g, ext);
        gens.push_back(lifted - lifted.shifted(t, Rat(1)));  // (1 - t) g
    }
    auto contracted = eliminate_front(CIdeal::make(ext, std::move(gens)), a.ring);
    return groebner(CIdeal::make(a.ring, std::move(contracted)),
                    MonomialOrder::degrevlex());
}

bool radical_membership(const Poly& f, const CIdeal& ideal) {
    if (f.is_zero()) return true;
    RingPtr ext = PolyRing::extended_front(ideal.ring, "t");
    std::vector<Poly> gens;
    for (const auto& g : ideal.gens) gens.push_back(lift_front(g, ext));
    Poly tf = lift_front(f, ext);
    MultiIndex t(ext->nvars(), 0);
    t[0] = 1;
    gens.push_back(Poly(ext, Rat(1)) - tf.shifted(t, Rat(1)));
    CIdeal gb = groebner(CIdeal::make(ext, std::move(gens)), MonomialOrder::degrevlex());
    return gb.basis->contains_one();
}

Poly poisson_bracket(const Poly& f, const Poly& g) {
    const RingPtr& ring = f.ring() ? f.ring() : g.ring();
    if (!ring || !ring->is_symplectic())
        throw domain_error("Poisson bracket needs a symplectic ring");
    std::size_t n = ring->symplectic_n();
    Poly acc(ring);
    for (std::size_t i = 0; i < n; ++i) {
        acc += f.derivative(n + i) * g.derivative(i);
        acc -= g.derivative(n + i) * f.derivative(i);
    }
    return acc;
}

InvolutivityReport involutivity_certificate(const CIdeal& ideal, par::Exec exec) {
    CIdeal with = groebner(ideal, MonomialOrder::degrevlex());
    const auto& basis = with.basis->polys;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a; b < basis.size(); ++b) pairs.emplace_back(a, b);
    std::vector<InvolutivityPair> results(pairs.size());
    par::for_index(pairs.size(), exec, [&](std::size_t k) {
        auto [a, b] = pairs[k];
        Poly br = poisson_bracket(basis[a], basis[b]);
        Poly nf = normal_form(br, basis, with.basis->order);
        results[k] = InvolutivityPair{a, b, nf.is_zero(), nf};
    });
    InvolutivityReport rep;
    rep.pairs_checked = results.size();
    for (auto& r : results) {
        if (!r.pass) {
            rep.pass = false;
            rep.failures.push_back(r);
        }
    }
    return rep;
}

}  // namespace weylkit
