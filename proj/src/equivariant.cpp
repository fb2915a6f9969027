#include "weylkit/equivariant.hpp"

namespace weylkit {

namespace {

bool is_constant_coefficient(const WeylOp& p) {
    for (const auto& [k, c] : p.terms())
        if (!is_zero_index(k.first)) return false;
    return true;
}

bool is_linear_field(const WeylOp& p) {
    // first order, no constant term, coefficients linear in x
    for (const auto& [k, c] : p.terms()) {
        if (total_degree(k.second) != 1) return false;
        if (total_degree(k.first) > 1) return false;
    }
    return true;
}

// Constant-coefficient operator read as a polynomial in xi.
Poly as_xi_poly(const WeylOp& p, const RingPtr& ring) {
    Poly q(ring);
    for (const auto& [k, c] : p.terms()) {
        if (!is_zero_index(k.first))
            throw domain_error("operator has position-variable coefficients");
        q.add_term(k.second, c);
    }
    return q;
}

}  // namespace

void validate_action(const LinearAction& a) {
    if (a.names.size() != a.matrices.size())
        throw domain_error("one name per action matrix required");
    std::size_t n = a.dim();
    for (const auto& m : a.matrices) {
        if (m.size() != n) throw domain_error("action matrices must share one size");
        for (const auto& row : m)
            if (row.size() != n) throw domain_error("action matrix is not square");
    }
    if (!a.structure) return;
    const auto& c = *a.structure;
    std::size_t s = a.basis_size();
    if (c.size() != s) throw domain_error("structure constant shape mismatch");
    for (const auto& row : c) {
        if (row.size() != s) throw domain_error("structure constant shape mismatch");
        for (const auto& v : row)
            if (v.size() != s) throw domain_error("structure constant shape mismatch");
    }
    // [A_s, A_t] = sum_r c_{st}^r A_r, entrywise exact.
    for (std::size_t p = 0; p < s; ++p)
        for (std::size_t q = 0; q < s; ++q)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    Rat lhs(0);
                    for (std::size_t k = 0; k < n; ++k)
                        lhs += a.matrices[p][i][k] * a.matrices[q][k][j] -
                               a.matrices[q][i][k] * a.matrices[p][k][j];
                    Rat rhs(0);
                    for (std::size_t r = 0; r < s; ++r)
                        rhs += c[p][q][r] * a.matrices[r][i][j];
                    if (!(lhs == rhs))
                        throw domain_error("structure constants disagree with matrices");
                }
}

std::vector<WeylOp> fields_from_action(const LinearAction& a) {
    validate_action(a);
    std::size_t n = a.dim();
    std::vector<WeylOp> out;
    for (const auto& m : a.matrices) {
        WeylOp field(n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (m[j][k].is_zero()) continue;
                MultiIndex xa(n, 0), db(n, 0);
                xa[k] = 1;
                db[j] = 1;
                field.add_term(xa, db, m[j][k]);
            }
        out.push_back(field);
    }
    return out;
}

StabilityReport stability_check(const std::vector<WeylOp>& fields,
                                const std::vector<WeylOp>& constgens) {
    StabilityReport rep;
    if (constgens.empty()) return rep;
    std::size_t n = constgens[0].dim();
    RingPtr ring = PolyRing::xi_only(n);
    std::vector<Poly> gens;
    for (const auto& g : constgens) gens.push_back(as_xi_poly(g, ring));
    CIdeal ideal = groebner(CIdeal::make(ring, gens), MonomialOrder::degrevlex());
    for (std::size_t s = 0; s < fields.size(); ++s) {
        if (!is_linear_field(fields[s]))
            throw domain_error("stability check needs linear fields");
        for (std::size_t k = 0; k < constgens.size(); ++k) {
            WeylOp br = commutator(fields[s], constgens[k]);
            if (!is_constant_coefficient(br))
                throw domain_error("bracket is not constant-coefficient");
            bool ok = membership(as_xi_poly(br, ring), ideal, MonomialOrder::degrevlex());
            StabilityPair pair{s, k, ok, br};
            if (!ok) rep.pass = false;
            rep.pairs.push_back(std::move(pair));
        }
    }
    return rep;
}

bool character_check(const LinearAction& a, const std::vector<Rat>& lambda) {
    if (!a.structure) throw domain_error("character check needs structure constants");
    if (lambda.size() != a.basis_size())
        throw domain_error("one character value per basis element required");
    const auto& c = *a.structure;
    for (std::size_t s = 0; s < a.basis_size(); ++s)
        for (std::size_t t = 0; t < a.basis_size(); ++t) {
            Rat acc(0);
            for (std::size_t r = 0; r < a.basis_size(); ++r)
                acc += c[s][t][r] * lambda[r];
            if (!acc.is_zero()) return false;
        }
    return true;
}

std::vector<WeylOp> EquivariantSystem::generators() const {
    std::vector<WeylOp> gens;
    for (std::size_t s = 0; s < fields.size(); ++s) {
        WeylOp g = fields[s];
        g -= WeylOp::constant(n, lambda[s]);
        gens.push_back(g);
    }
    gens.insert(gens.end(), constgens.begin(), constgens.end());
    return gens;
}

WIdeal EquivariantSystem::ideal() const { return WIdeal::make(n, generators()); }

EquivariantSystem assemble(std::vector<WeylOp> fields, std::vector<Rat> lambda,
                           std::vector<WeylOp> constgens) {
    if (fields.size() != lambda.size())
        throw domain_error("one character value per field required");
    EquivariantSystem sys;
    sys.n = fields.empty() ? (constgens.empty() ? 0 : constgens[0].dim()) : fields[0].dim();
    for (const auto& f : fields) {
        if (f.dim() != sys.n) throw domain_error("field dimension mismatch");
        for (const auto& [k, c] : f.terms())
            if (total_degree(k.second) != 1)
                throw domain_error("fields must be first order with zero constant term");
    }
    for (const auto& g : constgens) {
        if (g.dim() != sys.n) throw domain_error("generator dimension mismatch");
        if (!is_constant_coefficient(g))
            throw domain_error("constant-coefficient generators must avoid x");
    }
    sys.fields = std::move(fields);
    sys.lambda = std::move(lambda);
    sys.constgens = std::move(constgens);
    return sys;
}

EquivariantSystem fourier_system(const EquivariantSystem& sys) {
    EquivariantSystem out;
    out.n = sys.n;
    out.lambda = sys.lambda;
    for (const auto& f : sys.fields) out.fields.push_back(fourier_transform(f));
    for (const auto& g : sys.constgens) out.constgens.push_back(fourier_transform(g));
    return out;
}

HomogeneityReport homogeneity_report(const EquivariantSystem& sys,
                                     std::optional<bool> finite_orbits) {
    HomogeneityReport rep;
    rep.homogeneous = true;
    for (const auto& g : sys.generators()) {
        auto d = grading_degree(g);
        rep.degrees.push_back(d);
        if (!d) rep.homogeneous = false;
    }
    rep.finite_orbits = finite_orbits;
    rep.regular_holonomic_criterion =
        rep.homogeneous && finite_orbits.value_or(false);
    return rep;
}

}  // namespace weylkit
