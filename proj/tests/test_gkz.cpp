#include <doctest.h>

#include <random>
#include <set>

#include "weylkit/equivariant.hpp"
#include "weylkit/gkz.hpp"
#include "weylkit/parse.hpp"

using namespace weylkit;

namespace {

const MonomialOrder kDrl = MonomialOrder::degrevlex();

GkzData data_2f1() {
    return make_gkz_data(IntMatrix::from_rows({{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}),
                         {Rat(-5, 6), Rat(1, 4), Rat(5, 12)});
}

GkzData data_twisted_cubic() {
    return make_gkz_data(IntMatrix::from_rows({{1, 1, 1, 1}, {0, 1, 2, 3}}),
                         {Rat(1, 2), Rat(-2, 3)});
}

GkzData data_identity(std::size_t n) {
    std::vector<std::vector<long>> rows(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
    std::vector<Rat> lambda(n, Rat(1, 3));
    return make_gkz_data(IntMatrix::from_rows(rows), lambda);
}

std::vector<std::vector<std::size_t>> support_list(const StrataReport& rep) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& st : rep.strata) out.push_back(st.support);
    return out;
}

}  // namespace

TEST_CASE("2F1 system: euler operators, lattice, box") {
    GkzData d = data_2f1();
    CHECK(d.witness == std::vector<Int>{1, 0, 0});
    REQUIRE(d.lattice.cols() == 1);
    CHECK(d.lattice.col(0) == std::vector<Int>{1, -1, -1, 1});

    GkzSystem sys = build_gkz(d);
    REQUIRE(sys.euler_ops.size() == 3);
    CHECK(sys.euler_ops[0] ==
          parse_weyl_op("x1*d1 + x2*d2 + x3*d3 + x4*d4 + 5/6", 4));
    CHECK(sys.euler_ops[1] == parse_weyl_op("x2*d2 + x4*d4 - 1/4", 4));
    CHECK(sys.euler_ops[2] == parse_weyl_op("x3*d3 + x4*d4 - 5/12", 4));
    REQUIRE(sys.box_ops.size() == 1);
    CHECK(sys.box_ops[0] == parse_weyl_op("d1*d4 - d2*d3", 4));
    CHECK(sys.box_vectors[0] == std::vector<Int>{1, -1, -1, 1});
    CHECK(grading_degree(sys.box_ops[0]) == 2);
}

TEST_CASE("identity action has no boxes") {
    GkzSystem sys = build_gkz(data_identity(3));
    CHECK(sys.box_ops.empty());
    CHECK(sys.toric.basis->polys.empty());
    REQUIRE(sys.euler_ops.size() == 3);
    CHECK(sys.euler_ops[1] == parse_weyl_op("x2*d2 - 1/3", 3));
}

TEST_CASE("twisted cubic cone: three toric generators after saturation") {
    GkzSystem sys = build_gkz(data_twisted_cubic());
    REQUIRE(sys.toric.basis->polys.size() == 3);
    auto ring = sys.toric.ring;
    CHECK(membership(parse_poly("xi1*xi3 - xi2^2", ring), sys.toric, kDrl));
    CHECK(membership(parse_poly("xi2*xi4 - xi3^2", ring), sys.toric, kDrl));
    CHECK(membership(parse_poly("xi1*xi4 - xi2*xi3", ring), sys.toric, kDrl));
    CHECK(sys.box_ops.size() == 3);
    for (const auto& a : sys.box_vectors) {
        Int sum = 0;
        for (const auto& x : a) sum += x;
        CHECK(sum == 0);  // forced by the homogeneity witness
    }
}

TEST_CASE("bound ideal dimensions") {
    CHECK(krull_dimension(bound_ideal_A(build_gkz(data_2f1()))) == 4);
    CHECK(krull_dimension(bound_ideal_A(build_gkz(data_twisted_cubic()))) == 4);
    GkzSystem id2 = build_gkz(data_identity(2));
    CIdeal a = bound_ideal_A(id2);
    CHECK(krull_dimension(a) == 2);
    // coordinate-cross product: (z_i xi_i)
    CHECK(membership(parse_poly("z1*xi1", a.ring), a, kDrl));
    CHECK(membership(parse_poly("z2*xi2", a.ring), a, kDrl));
    REQUIRE(a.basis->polys.size() == 2);
}

TEST_CASE("2F1 orbit strata are exactly the ten faces of the cone over the square") {
    StrataReport rep = orbit_strata(data_2f1().chi);
    REQUIRE(rep.strata.size() == 10);
    std::vector<std::vector<std::size_t>> expected{
        {}, {0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 1, 2, 3}};
    CHECK(support_list(rep) == expected);
    for (const auto& st : rep.strata) {
        CHECK(st.dimension == 4);
        // witness validity: orthogonal on the support, positive off it
        for (std::size_t j = 0; j < 4; ++j) {
            Rat dot(0);
            for (std::size_t i = 0; i < 3; ++i)
                dot += st.witness[i] * Rat(data_2f1().chi.at(i, j));
            bool in = std::find(st.support.begin(), st.support.end(), j) != st.support.end();
            if (in) CHECK(dot == Rat(0));
            else CHECK(dot > Rat(0));
        }
    }
}

TEST_CASE("identity and simplicial cones have the full subset fan") {
    StrataReport id2 = orbit_strata(IntMatrix::from_rows({{1, 0}, {0, 1}}));
    CHECK(id2.strata.size() == 4);
    StrataReport simp = orbit_strata(IntMatrix::from_rows({{1, 1}, {0, 1}}));
    CHECK(simp.strata.size() == 4);
}

TEST_CASE("twisted cubic cone has four strata") {
    StrataReport rep = orbit_strata(data_twisted_cubic().chi);
    std::vector<std::vector<std::size_t>> expected{{}, {0}, {3}, {0, 1, 2, 3}};
    CHECK(support_list(rep) == expected);
    for (const auto& st : rep.strata) CHECK(st.dimension == 4);
}

TEST_CASE("strata supports are closed under intersection") {
    for (const auto& chi :
         {data_2f1().chi, data_twisted_cubic().chi, IntMatrix::from_rows({{1, 1}, {0, 1}})}) {
        StrataReport rep = orbit_strata(chi);
        std::set<std::vector<std::size_t>> supports;
        for (const auto& st : rep.strata) supports.insert(st.support);
        for (const auto& a : supports)
            for (const auto& b : supports) {
                std::vector<std::size_t> meet;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(meet));
                CHECK(supports.count(meet) == 1);
            }
    }
}

TEST_CASE("strata agree between serial and openmp paths") {
    IntMatrix chi = data_2f1().chi;
    StrataReport serial = orbit_strata(chi, par::Exec::serial);
    StrataReport openmp = orbit_strata(chi, par::Exec::openmp);
    REQUIRE(serial.strata.size() == openmp.strata.size());
    for (std::size_t i = 0; i < serial.strata.size(); ++i) {
        CHECK(serial.strata[i].support == openmp.strata[i].support);
        CHECK(serial.strata[i].witness == openmp.strata[i].witness);
        CHECK(serial.strata[i].conormal.basis->polys == openmp.strata[i].conormal.basis->polys);
    }
}

TEST_CASE("gkz verdicts for the corpus") {
    GkzVerdicts v = gkz_verdicts(build_gkz(data_2f1()));
    CHECK(v.dim_A == 4);
    CHECK(v.holonomic);
    CHECK(v.homogeneous);
    CHECK(v.stability_pass);
    CHECK(v.strata_count == 10);
    CHECK(v.finite_orbits);
    CHECK(v.regular_holonomic);
    CHECK(v.involutivity_A.pass);

    GkzVerdicts vid = gkz_verdicts(build_gkz(data_identity(2)));
    CHECK(vid.dim_A == 2);
    CHECK(vid.holonomic);
    CHECK(vid.strata_count == 4);  // 2^N subsets all faces

    GkzVerdicts vtc = gkz_verdicts(build_gkz(data_twisted_cubic()));
    CHECK(vtc.holonomic);
    CHECK(vtc.homogeneous);
    CHECK(vtc.regular_holonomic);
}

TEST_CASE("euler-box commutator is the expected multiple of the box") {
    GkzSystem sys = build_gkz(data_2f1());
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<Rat> w(4);
        for (std::size_t j = 0; j < 4; ++j) w[j] = Rat(sys.data.chi.at(i, j));
        WeylOp theta = WeylOp::euler(4, w);
        Rat mu(0);
        for (std::size_t j = 0; j < 4; ++j)
            if (sys.box_vectors[0][j] > 0) mu -= w[j] * Rat(sys.box_vectors[0][j]);
        CHECK(commutator(theta, sys.box_ops[0]) == sys.box_ops[0].scaled(mu));
    }
    // frozen value for the first row: mu = -(1 + 1) = -2
    std::vector<Rat> ones(4, Rat(1));
    CHECK(commutator(WeylOp::euler(4, ones), sys.box_ops[0]) ==
          sys.box_ops[0].scaled(Rat(-2)));
}

TEST_CASE("stability holds for random small matrices with a homogeneity witness") {
    std::mt19937_64 rng(2025);
    std::uniform_int_distribution<long> entry(0, 3);
    int built = 0;
    for (int trial = 0; trial < 40 && built < 12; ++trial) {
        std::size_t n = 2, N = 4;
        std::vector<std::vector<long>> rows(n, std::vector<long>(N));
        rows[0].assign(N, 1);  // ones row forces the witness
        for (std::size_t j = 0; j < N; ++j) rows[1][j] = entry(rng);
        IntMatrix chi = IntMatrix::from_rows(rows);
        if (rank(chi) != n) continue;
        GkzData d = make_gkz_data(chi, std::vector<Rat>(n, Rat(1, 7)));
        GkzSystem sys = build_gkz(d);
        ++built;
        GkzVerdicts v = gkz_verdicts(sys, par::Exec::serial);
        CHECK(v.stability_pass);
        CHECK(v.homogeneous);
        for (std::size_t idx = 0; idx < sys.box_vectors.size(); ++idx) {
            Int sum = 0;
            int pos = 0;
            for (const auto& x : sys.box_vectors[idx]) {
                sum += x;
                if (x > 0) pos += static_cast<int>(x.get_si());
            }
            CHECK(sum == 0);
            // grading degree equals the positive part of the vector
            CHECK(grading_degree(sys.box_ops[idx]) == pos);
        }
        // the generic stability check reaches the same verdict
        std::vector<WeylOp> thetas;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rat> w(N);
            for (std::size_t j = 0; j < N; ++j) w[j] = Rat(chi.at(i, j));
            thetas.push_back(WeylOp::euler(N, w));
        }
        CHECK(stability_check(thetas, sys.box_ops).pass);
    }
    CHECK(built >= 12);
}

TEST_CASE("bound ideal is contained in every conormal ideal") {
    for (auto make : {&data_2f1, &data_twisted_cubic}) {
        GkzData d = make();
        GkzSystem sys = build_gkz(d);
        CIdeal a = bound_ideal_A(sys);
        StrataReport rep = orbit_strata(d.chi);
        for (const auto& st : rep.strata)
            for (const auto& g : a.basis->polys)
                CHECK(membership(g, st.conormal, kDrl));
    }
}

TEST_CASE("strata conormals cut the same radical locus as the bound ideal") {
    for (auto d : {data_identity(2), data_2f1(), data_twisted_cubic()}) {
        GkzSystem sys = build_gkz(d);
        CIdeal a = bound_ideal_A(sys);
        StrataReport rep = orbit_strata(d.chi);
        REQUIRE(!rep.strata.empty());
        CIdeal meet = rep.strata[0].conormal;
        for (std::size_t i = 1; i < rep.strata.size(); ++i)
            meet = intersect(meet, rep.strata[i].conormal);
        for (const auto& g : meet.basis->polys) CHECK(radical_membership(g, a));
        for (const auto& g : a.basis->polys) CHECK(radical_membership(g, meet));
    }
}

TEST_CASE("the bound ideal equals gr I on the normal orbit closures") {
    for (auto d : {data_2f1(), data_twisted_cubic()}) {
        GrComparison cmp = compare_bound_with_gr(build_gkz(d));
        CHECK(cmp.a_contained_in_gr);
        CHECK(cmp.gr_contained_in_a);
        CHECK(cmp.equal);
    }
}

TEST_CASE("validation errors") {
    CHECK_THROWS_AS(make_gkz_data(IntMatrix::from_rows({{1, 1}, {2, 2}}),
                                  {Rat(0), Rat(0)}),
                    domain_error);
    // no integral homogeneity witness: c * 1 = 1 and c * 2 = 1 conflict
    CHECK_THROWS_AS(make_gkz_data(IntMatrix::from_rows({{1, 2}}), {Rat(0)}), domain_error);
    CHECK_THROWS_AS(make_gkz_data(IntMatrix::from_rows({{2, 2}}), {Rat(0)}), domain_error);
    CHECK_THROWS_AS(make_gkz_data(IntMatrix::from_rows({{1, 1}}), {Rat(0), Rat(1)}),
                    domain_error);
}
