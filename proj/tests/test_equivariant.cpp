#include <doctest.h>

#include "weylkit/equivariant.hpp"
#include "weylkit/gkz.hpp"
#include "weylkit/parse.hpp"

using namespace weylkit;

namespace {

// Adjoint action of sl2 on itself, basis (e, h, f).
LinearAction sl2_adjoint() {
    LinearAction a;
    a.names = {"e", "h", "f"};
    auto R = [](long x) { return Rat(x); };
    a.matrices = {
        {{R(0), R(-2), R(0)}, {R(0), R(0), R(1)}, {R(0), R(0), R(0)}},
        {{R(2), R(0), R(0)}, {R(0), R(0), R(0)}, {R(0), R(0), R(-2)}},
        {{R(0), R(0), R(0)}, {R(-1), R(0), R(0)}, {R(0), R(2), R(0)}}};
    std::vector<std::vector<std::vector<Rat>>> c(
        3, std::vector<std::vector<Rat>>(3, std::vector<Rat>(3, Rat(0))));
    c[0][1] = {R(-2), R(0), R(0)};  // [e,h] = -2e
    c[1][0] = {R(2), R(0), R(0)};
    c[0][2] = {R(0), R(1), R(0)};   // [e,f] = h
    c[2][0] = {R(0), R(-1), R(0)};
    c[1][2] = {R(0), R(0), R(-2)};  // [h,f] = -2f
    c[2][1] = {R(0), R(0), R(2)};
    a.structure = c;
    return a;
}

LinearAction torus_row(std::vector<long> weights) {
    LinearAction a;
    a.names = {"t"};
    std::size_t n = weights.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t j = 0; j < n; ++j) m[j][j] = Rat(weights[j]);
    a.matrices = {m};
    return a;
}

}  // namespace

TEST_CASE("vector fields from a torus weight row") {
    auto fields = fields_from_action(torus_row({1, 1, 1, 1}));
    REQUIRE(fields.size() == 1);
    CHECK(fields[0] == parse_weyl_op("x1*d1 + x2*d2 + x3*d3 + x4*d4", 4));
}

TEST_CASE("vector fields from ad h") {
    auto fields = fields_from_action(sl2_adjoint());
    REQUIRE(fields.size() == 3);
    CHECK(fields[1] == parse_weyl_op("2*x1*d1 - 2*x3*d3", 3));
}

TEST_CASE("the zero matrix gives the zero field") {
    LinearAction a;
    a.names = {"z"};
    a.matrices = {{{Rat(0), Rat(0)}, {Rat(0), Rat(0)}}};
    auto fields = fields_from_action(a);
    REQUIRE(fields.size() == 1);
    CHECK(fields[0].is_zero());
}

TEST_CASE("fields represent the lie bracket up to the action-convention sign") {
    // With the positive Euler convention L_theta = sum A_jk x_k d_j the map is
    // an anti-homomorphism: [L_s, L_t] = L_{[theta_t, theta_s]}. The e^{-t
    // theta} convention flips the sign; either way the generated ideals agree.
    LinearAction a = sl2_adjoint();
    validate_action(a);  // checks [A_s, A_t] = sum c A_r entrywise
    auto fields = fields_from_action(a);
    const auto& c = *a.structure;
    for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t t = 0; t < 3; ++t) {
            WeylOp expected(3);
            for (std::size_t r = 0; r < 3; ++r)
                expected += fields[r].scaled(c[t][s][r]);
            CHECK(commutator(fields[s], fields[t]) == expected);
        }
}

TEST_CASE("structure constants that disagree with the matrices are rejected") {
    LinearAction a = sl2_adjoint();
    (*a.structure)[0][1] = {Rat(1), Rat(0), Rat(0)};
    CHECK_THROWS_AS(validate_action(a), domain_error);
}

TEST_CASE("torus stability: euler-box brackets stay in the ideal") {
    GkzData d = make_gkz_data(
        IntMatrix::from_rows({{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}),
        {Rat(-5, 6), Rat(1, 4), Rat(5, 12)});
    GkzSystem sys = build_gkz(d);
    std::vector<WeylOp> thetas;
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<Rat> w(4);
        for (std::size_t j = 0; j < 4; ++j) w[j] = Rat(d.chi.at(i, j));
        thetas.push_back(WeylOp::euler(4, w));
    }
    StabilityReport rep = stability_check(thetas, sys.box_ops);
    CHECK(rep.pass);
    CHECK(rep.pairs.size() == 3);
}

TEST_CASE("sl2 casimir stability") {
    auto fields = fields_from_action(sl2_adjoint());
    WeylOp casimir = parse_weyl_op("d1*d3 + 1/4*d2^2", 3);
    StabilityReport rep = stability_check(fields, {casimir});
    CHECK(rep.pass);
    // the h-weights of d_e and d_f cancel exactly
    CHECK(commutator(fields[1], parse_weyl_op("d1*d3", 3)).is_zero());
}

TEST_CASE("stability failure carries a witness") {
    // field x1 d2 moves d1 out of (d1)
    WeylOp field = parse_weyl_op("x1*d2", 2);
    WeylOp gen = parse_weyl_op("d1", 2);
    StabilityReport rep = stability_check({field}, {gen});
    CHECK(!rep.pass);
    REQUIRE(rep.pairs.size() == 1);
    CHECK(!rep.pairs[0].pass);
    CHECK(rep.pairs[0].bracket == parse_weyl_op("-d2", 2));
}

TEST_CASE("character check") {
    // abelian: all structure constants vanish
    LinearAction torus = torus_row({1, 1});
    torus.structure = std::vector<std::vector<std::vector<Rat>>>(
        1, std::vector<std::vector<Rat>>(1, std::vector<Rat>(1, Rat(0))));
    CHECK(character_check(torus, {Rat(7, 3)}));

    LinearAction sl2 = sl2_adjoint();
    CHECK(character_check(sl2, {Rat(0), Rat(0), Rat(0)}));
    // [e,f] = h forces lambda(h) = 0
    CHECK(!character_check(sl2, {Rat(0), Rat(1), Rat(0)}));
}

TEST_CASE("assembled GKZ data reproduces build_gkz generator-for-generator") {
    GkzData d = make_gkz_data(
        IntMatrix::from_rows({{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}),
        {Rat(-5, 6), Rat(1, 4), Rat(5, 12)});
    GkzSystem sys = build_gkz(d);

    std::vector<WeylOp> fields;
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<Rat> w(4);
        for (std::size_t j = 0; j < 4; ++j) w[j] = Rat(d.chi.at(i, j));
        fields.push_back(WeylOp::euler(4, w));
    }
    EquivariantSystem es = assemble(fields, d.lambda, sys.box_ops);
    auto gens = es.generators();
    auto expected = sys.ideal().gens;
    REQUIRE(gens.size() == expected.size());
    for (std::size_t i = 0; i < gens.size(); ++i) CHECK(gens[i] == expected[i]);
}

TEST_CASE("assembly validates shapes") {
    CHECK_THROWS_AS(assemble({parse_weyl_op("x1*d1 + 1", 1)}, {Rat(0)}, {}), domain_error);
    CHECK_THROWS_AS(assemble({parse_weyl_op("d1^2", 1)}, {Rat(0)}, {}), domain_error);
    CHECK_THROWS_AS(assemble({}, {}, {parse_weyl_op("x1*d1", 1)}), domain_error);
}

TEST_CASE("fourier image of a system") {
    GkzData d = make_gkz_data(
        IntMatrix::from_rows({{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}),
        {Rat(-5, 6), Rat(1, 4), Rat(5, 12)});
    GkzSystem sys = build_gkz(d);
    std::vector<WeylOp> fields;
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<Rat> w(4);
        for (std::size_t j = 0; j < 4; ++j) w[j] = Rat(d.chi.at(i, j));
        fields.push_back(WeylOp::euler(4, w));
    }
    EquivariantSystem es = assemble(fields, d.lambda, sys.box_ops);
    EquivariantSystem hat = fourier_system(es);
    // boxes become multiplication operators xi^u - xi^v
    CHECK(hat.constgens[0] == parse_weyl_op("x1*x4 - x2*x3", 4));
    // theta_1 becomes -sum (x_j d_j + 1)
    CHECK(hat.fields[0] ==
          parse_weyl_op("-x1*d1 - x2*d2 - x3*d3 - x4*d4 - 4", 4));
    // applying the substitution twice is the antipode, generator by generator
    EquivariantSystem twice = fourier_system(hat);
    auto once = es.generators();
    auto gens = twice.generators();
    REQUIRE(gens.size() == once.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        WeylOp antipode(once[i].dim());
        for (const auto& [k, c] : once[i].terms()) {
            int sign = (total_degree(k.first) + total_degree(k.second)) % 2 ? -1 : 1;
            antipode.add_term(k.first, k.second, c * Rat(sign));
        }
        CHECK(gens[i] == antipode);
    }
}

TEST_CASE("homogeneity reports") {
    GkzData d = make_gkz_data(
        IntMatrix::from_rows({{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}),
        {Rat(-5, 6), Rat(1, 4), Rat(5, 12)});
    GkzSystem sys = build_gkz(d);
    std::vector<WeylOp> fields;
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<Rat> w(4);
        for (std::size_t j = 0; j < 4; ++j) w[j] = Rat(d.chi.at(i, j));
        fields.push_back(WeylOp::euler(4, w));
    }
    EquivariantSystem es = assemble(fields, d.lambda, sys.box_ops);
    HomogeneityReport rep = homogeneity_report(es, true);
    CHECK(rep.homogeneous);
    CHECK(rep.regular_holonomic_criterion);
    REQUIRE(rep.degrees.size() == 4);
    CHECK(rep.degrees[0] == 0);
    CHECK(rep.degrees[3] == 2);

    // the exponential system d - lambda is inhomogeneous
    EquivariantSystem exp_sys;
    exp_sys.n = 1;
    exp_sys.fields = {parse_weyl_op("d1", 1)};
    exp_sys.lambda = {Rat(3)};
    HomogeneityReport bad = homogeneity_report(exp_sys);
    CHECK(!bad.homogeneous);
    CHECK(!bad.regular_holonomic_criterion);

    EquivariantSystem empty;
    HomogeneityReport triv = homogeneity_report(empty, true);
    CHECK(triv.homogeneous);
    CHECK(triv.regular_holonomic_criterion);
}
