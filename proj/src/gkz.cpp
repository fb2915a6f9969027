#include "weylkit/gkz.hpp"

#include <algorithm>

namespace weylkit {

std::vector<Int> homogeneity_witness(const IntMatrix& chi) {
    // c chi = (1,...,1): overdetermined once rank chi = n, so the rational
    // solution is unique; it must come out integral.
    std::size_t n = chi.rows(), N = chi.cols();
    IntMatrix t(N, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < N; ++j) t.at(j, i) = chi.at(i, j);
    std::vector<Rat> ones(N, Rat(1));
    std::vector<Rat> c;
    try {
        c = solve_rational(t, ones);
    } catch (const domain_error&) {
        throw domain_error("homogeneity condition fails: c chi = (1,...,1) has no solution");
    }
    std::vector<Int> out;
    for (const auto& x : c) {
        if (!x.is_integer())
            throw domain_error("homogeneity condition fails: witness is not integral");
        out.push_back(x.num());
    }
    return out;
}

GkzData make_gkz_data(IntMatrix chi, std::vector<Rat> lambda) {
    std::size_t n = chi.rows();
    if (lambda.size() != n) throw domain_error("lambda length must equal the row count of chi");
    if (rank(chi) != n) throw domain_error("chi must have full row rank");
    GkzData d;
    d.witness = homogeneity_witness(chi);
    d.lattice = integer_kernel(chi);
    d.chi = std::move(chi);
    d.lambda = std::move(lambda);
    return d;
}

namespace {

// d^{a+} - d^{a-} for a lattice vector with sign normalized so the first
// nonzero entry is positive.
std::vector<Int> sign_normalized(std::vector<Int> a) {
    for (const auto& x : a) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : a) y = -y;
        break;
    }
    return a;
}

WeylOp box_from_vector(std::size_t N, const std::vector<Int>& a) {
    MultiIndex up(N, 0), dn(N, 0), zero(N, 0);
    for (std::size_t j = 0; j < N; ++j) {
        if (!a[j].fits_slong_p()) throw domain_error("lattice entry too large");
        long v = a[j].get_si();
        if (v > 0) up[j] = static_cast<int>(v);
        if (v < 0) dn[j] = static_cast<int>(-v);
    }
    WeylOp box(N);
    box.add_term(zero, up, Rat(1));
    box.add_term(zero, dn, Rat(-1));
    return box;
}

Poly binomial_from_vector(const RingPtr& ring, const std::vector<Int>& a,
                          std::size_t offset) {
    MultiIndex up(ring->nvars(), 0), dn(ring->nvars(), 0);
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (!a[j].fits_slong_p()) throw domain_error("lattice entry too large");
        long v = a[j].get_si();
        if (v > 0) up[offset + j] = static_cast<int>(v);
        if (v < 0) dn[offset + j] = static_cast<int>(-v);
    }
    Poly p(ring);
    p.add_term(up, Rat(1));
    p.add_term(dn, Rat(-1));
    return p;
}

// Saturated toric ideal of a lattice basis, in the given xi ring.
CIdeal toric_ideal(const RingPtr& ring, const IntMatrix& lattice) {
    std::vector<Poly> gens;
    for (std::size_t k = 0; k < lattice.cols(); ++k)
        gens.push_back(binomial_from_vector(ring, sign_normalized(lattice.col(k)), 0));
    CIdeal raw = CIdeal::make(ring, std::move(gens));
    if (raw.gens.empty()) return groebner(raw, MonomialOrder::degrevlex());
    MultiIndex all(ring->nvars(), 0);
    for (std::size_t j = 0; j < ring->nvars(); ++j) all[j] = 1;
    return saturate(raw, Poly::monomial(ring, all));
}

}  // namespace

WIdeal GkzSystem::ideal() const {
    std::vector<WeylOp> gens = euler_ops;
    gens.insert(gens.end(), box_ops.begin(), box_ops.end());
    return WIdeal::make(data.N(), std::move(gens));
}

GkzSystem build_gkz(const GkzData& data) {
    GkzSystem sys;
    sys.data = data;
    std::size_t n = data.n(), N = data.N();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> w(N);
        for (std::size_t j = 0; j < N; ++j) w[j] = Rat(data.chi.at(i, j));
        WeylOp theta = WeylOp::euler(N, w);
        theta -= WeylOp::constant(N, data.lambda[i]);
        sys.euler_ops.push_back(theta);
    }
    sys.toric = toric_ideal(PolyRing::xi_only(N), data.lattice);
    for (const auto& p : sys.toric.basis->polys) {
        if (p.size() != 2) throw domain_error("toric basis element is not a binomial");
        auto it = p.terms().begin();
        const auto& [e1, c1] = *it;
        ++it;
        const auto& [e2, c2] = *it;
        if (!((c1.is_one() && c2 == Rat(-1)) || (c2.is_one() && c1 == Rat(-1))))
            throw domain_error("toric basis element is not a difference of monomials");
        std::vector<Int> a(N);
        for (std::size_t j = 0; j < N; ++j) a[j] = Int(e1[j] - e2[j]);
        a = sign_normalized(a);
        sys.box_vectors.push_back(a);
        sys.box_ops.push_back(box_from_vector(N, a));
    }
    return sys;
}

CIdeal bound_ideal_A(const GkzSystem& sys) {
    std::size_t n = sys.data.n(), N = sys.data.N();
    RingPtr ring = PolyRing::symplectic(N);
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < n; ++i) {
        Poly tb(ring);
        for (std::size_t j = 0; j < N; ++j) {
            MultiIndex e(2 * N, 0);
            e[j] = 1;
            e[N + j] = 1;
            tb.add_term(e, Rat(sys.data.chi.at(i, j)));
        }
        gens.push_back(tb);
    }
    for (const auto& a : sys.box_vectors)
        gens.push_back(binomial_from_vector(ring, a, N));
    return groebner(CIdeal::make(ring, std::move(gens)), MonomialOrder::degrevlex());
}

std::vector<std::optional<std::vector<Rat>>> face_scan(const IntMatrix& chi,
                                                       par::Exec exec) {
    std::size_t N = chi.cols();
    if (N > 20) throw domain_error("face scan limited to 20 columns");
    std::size_t count = std::size_t(1) << N;
    std::vector<std::optional<std::vector<Rat>>> witness(count);
    par::for_index(count, exec, [&](std::size_t mask) {
        std::vector<std::vector<Int>> eq, pos;
        for (std::size_t j = 0; j < N; ++j) {
            auto cj = chi.col(j);
            if (mask & (std::size_t(1) << j)) eq.push_back(cj);
            else pos.push_back(cj);
        }
        witness[mask] = strict_feasible(eq, pos);
    });
    return witness;
}

StrataReport orbit_strata(const IntMatrix& chi, par::Exec exec) {
    homogeneity_witness(chi);  // (star) failure is an error here too
    std::size_t n = chi.rows(), N = chi.cols();
    if (N > 10) throw domain_error("strata scan limited to 10 columns");
    std::size_t count = std::size_t(1) << N;
    auto witness = face_scan(chi, exec);

    std::vector<std::size_t> face_masks;
    for (std::size_t mask = 0; mask < count; ++mask)
        if (witness[mask]) face_masks.push_back(mask);

    RingPtr ring = PolyRing::symplectic(N);
    std::vector<Stratum> strata(face_masks.size());
    par::for_index(face_masks.size(), exec, [&](std::size_t idx) {
        std::size_t mask = face_masks[idx];
        Stratum st;
        for (std::size_t j = 0; j < N; ++j)
            if (mask & (std::size_t(1) << j)) st.support.push_back(j);
        st.witness = *witness[mask];

        std::vector<Poly> gens;
        for (std::size_t j = 0; j < N; ++j) {
            if (mask & (std::size_t(1) << j)) continue;
            gens.push_back(Poly::variable(ring, N + j));
        }
        // Toric part of the face: lattice vectors supported on the face.
        if (!st.support.empty()) {
            IntMatrix sub(n, st.support.size());
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < st.support.size(); ++k)
                    sub.at(i, k) = chi.at(i, st.support[k]);
            RingPtr face_ring = PolyRing::xi_only(st.support.size());
            CIdeal face_toric = toric_ideal(face_ring, integer_kernel(sub));
            for (const auto& p : face_toric.basis->polys) {
                Poly lifted(ring);
                for (const auto& [e, c] : p.terms()) {
                    MultiIndex m(2 * N, 0);
                    for (std::size_t k = 0; k < st.support.size(); ++k)
                        m[N + st.support[k]] = e[k];
                    lifted.add_term(m, c);
                }
                gens.push_back(lifted);
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            Poly tb(ring);
            for (std::size_t j = 0; j < N; ++j) {
                MultiIndex e(2 * N, 0);
                e[j] = 1;
                e[N + j] = 1;
                tb.add_term(e, Rat(chi.at(i, j)));
            }
            gens.push_back(tb);
        }
        st.conormal = groebner(CIdeal::make(ring, std::move(gens)),
                               MonomialOrder::degrevlex());
        st.dimension = krull_dimension(st.conormal, par::Exec::serial);
        strata[idx] = std::move(st);
    });

    std::stable_sort(strata.begin(), strata.end(), [](const Stratum& a, const Stratum& b) {
        if (a.support.size() != b.support.size())
            return a.support.size() < b.support.size();
        return a.support < b.support;
    });
    StrataReport rep;
    rep.n = n;
    rep.N = N;
    rep.strata = std::move(strata);
    return rep;
}

GkzVerdicts gkz_verdicts(const GkzSystem& sys, par::Exec exec) {
    GkzVerdicts v;
    std::size_t n = sys.data.n(), N = sys.data.N();
    v.bound_A = bound_ideal_A(sys);
    v.dim_A = krull_dimension(v.bound_A, exec);
    v.holonomic = v.dim_A && *v.dim_A == static_cast<int>(N);
    v.homogeneous = true;
    for (const auto& op : sys.euler_ops) {
        auto d = grading_degree(op);
        v.homogeneous = v.homogeneous && d.has_value();
        v.generator_degrees.push_back(d.value_or(0));
    }
    for (const auto& op : sys.box_ops) {
        auto d = grading_degree(op);
        v.homogeneous = v.homogeneous && d.has_value();
        v.generator_degrees.push_back(d.value_or(0));
    }
    v.stability_pass = true;
    for (std::size_t i = 0; i < n && v.stability_pass; ++i) {
        std::vector<Rat> w(N);
        for (std::size_t j = 0; j < N; ++j) w[j] = Rat(sys.data.chi.at(i, j));
        WeylOp theta = WeylOp::euler(N, w);
        for (std::size_t b = 0; b < sys.box_ops.size(); ++b) {
            Rat mu(0);
            for (std::size_t j = 0; j < N; ++j)
                if (sys.box_vectors[b][j] > 0)
                    mu -= Rat(sys.data.chi.at(i, j)) * Rat(sys.box_vectors[b][j]);
            if (!(commutator(theta, sys.box_ops[b]) == sys.box_ops[b].scaled(mu)))
                v.stability_pass = false;
        }
    }
    v.strata = orbit_strata(sys.data.chi, exec);
    v.strata_count = v.strata.strata.size();
    v.finite_orbits = true;
    v.regular_holonomic = v.holonomic && v.homogeneous && v.finite_orbits;
    v.involutivity_A = involutivity_certificate(v.bound_A, exec);
    return v;
}

GrComparison compare_bound_with_gr(const GkzSystem& sys) {
    GrComparison cmp;
    WIdeal gb = weyl_groebner(sys.ideal());
    CIdeal gr = groebner(gr_ideal(gb), MonomialOrder::degrevlex());
    CIdeal a = bound_ideal_A(sys);
    cmp.a_contained_in_gr = true;
    for (const auto& g : a.basis->polys)
        if (!membership(g, gr, MonomialOrder::degrevlex())) cmp.a_contained_in_gr = false;
    cmp.gr_contained_in_a = true;
    for (const auto& g : gr.basis->polys)
        if (!membership(g, a, MonomialOrder::degrevlex())) cmp.gr_contained_in_a = false;
    cmp.equal = cmp.a_contained_in_gr && cmp.gr_contained_in_a;
    return cmp;
}

}  // namespace weylkit
