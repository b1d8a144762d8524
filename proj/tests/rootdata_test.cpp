#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "covlat/rootdata.hpp"

using namespace covlat;

namespace {

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

TEST_CASE("preset data match the printed bases") {
    RootDatum gsp = standard_datum(Family::GSpI, 2);
    CHECK(gsp.rank == 3);
    CHECK(gsp.simple_coroots[1] == Vec{Int(0), Int(1), Int(0)});     // alpha_2^vee = e_2
    CHECK(gsp.simple_roots[1] == Vec{Int(0), Int(2), Int(-1)});      // alpha_2 = 2e_2^* - e_0^*

    RootDatum so3 = standard_datum(Family::SO3, 1);
    CHECK(so3.rank == 1);
    CHECK(so3.simple_coroots[0] == Vec{Int(2)});

    RootDatum sl2 = standard_datum(Family::SL, 2);
    CHECK(sl2.rank == 1);
    CHECK(sl2.simple_coroots[0] == Vec{Int(1)});

    RootDatum gspin = standard_datum(Family::GSpinOdd, 3);
    CHECK(gspin.simple_coroots[2] == Vec{Int(0), Int(0), Int(2), Int(-1)});  // 2e_r - e_0
    CHECK(gspin.simple_roots[2] == Vec{Int(0), Int(0), Int(1), Int(0)});     // e_r^*
}

TEST_CASE("reflections square to one and permute positive coroots minus one") {
    for (Family f : {Family::GL, Family::Sp, Family::GSpI, Family::SpinOdd, Family::GSpinOdd}) {
        int r = (f == Family::GL) ? 3 : 2;
        RootDatum d = standard_datum(f, r);
        auto pos = d.positive_pairs();
        for (int i = 0; i < d.nsimple(); ++i) {
            IntMat m = d.reflection_matrix(i);
            CHECK(m.mul(m) == IntMat::identity(d.rank));
            // w_alpha permutes the positive coroots other than alpha^vee itself
            for (auto& p : pos) {
                if (p.second == d.simple_coroots[i]) continue;
                Vec img = m.mul_vec_left(p.second);
                bool found = false;
                for (auto& q : pos)
                    if (q.second == img) found = true;
                CHECK(found);
            }
        }
    }
}

TEST_CASE("Weyl group orders match the classical counts") {
    CHECK(weyl_group(standard_datum(Family::SL, 2)).size() == 2);
    for (int r = 2; r <= 5; ++r)
        CHECK(Int(weyl_group(standard_datum(Family::GL, r + 1)).size()) == factorial(r + 1));
    for (int r = 1; r <= 4; ++r) {
        Int expect = factorial(r);
        for (int i = 0; i < r; ++i) expect *= 2;
        CHECK(Int(weyl_group(standard_datum(Family::Sp, r)).size()) == expect);
        CHECK(Int(weyl_group(standard_datum(Family::GSpI, r)).size()) == expect);
    }
    CHECK(weyl_group(standard_datum(Family::GSpI, 2)).size() == 8);  // Sp_4 count
    CHECK(weyl_group(standard_datum(Family::GL, 3)).size() == 6);
}

TEST_CASE("Weyl words are reduced and consistent with matrices and signs") {
    RootDatum d = standard_datum(Family::GSpI, 2);
    for (auto& w : weyl_group(d)) {
        CHECK(int(w.word.size()) == w.length);
        CHECK(w.sign == (w.length % 2 == 0 ? 1 : -1));
        IntMat m = IntMat::identity(d.rank);
        for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
            m = m.mul(d.reflection_matrix(*it));
        CHECK(m == w.matrix);
    }
}

TEST_CASE("rho values") {
    RootDatum sl2 = standard_datum(Family::SL, 2);
    CHECK(sl2.rho() == QVec{Rat(1, 2)});

    RootDatum sp4 = standard_datum(Family::Sp, 2);
    QVec rho = sp4.rho();
    CHECK(rho[0] == Rat(3, 2));
    CHECK(rho[1] == Rat(1, 2));

    RootDatum gl2 = standard_datum(Family::GL, 2);
    QVec rho2 = gl2.rho();
    CHECK(rho2[0] == Rat(1, 2));
    CHECK(rho2[1] == Rat(-1, 2));
}

TEST_CASE("w_alpha(rho) = rho - alpha^vee for simple reflections") {
    for (Family f : {Family::GL, Family::Sp, Family::GSpI, Family::SpinOdd}) {
        RootDatum d = standard_datum(f, 3);
        QVec rho = d.rho();
        for (int i = 0; i < d.nsimple(); ++i) {
            QVec moved = d.reflect_cochar_q(i, rho);
            for (int k = 0; k < d.rank; ++k)
                CHECK(moved[k] == rho[k] - Rat(d.simple_coroots[i][k]));
        }
    }
}

TEST_CASE("derived and center cocharacter lattices") {
    RootDatum gl3 = standard_datum(Family::GL, 3);
    LatticeBasis y0 = gl3.derived_cochar();
    CHECK(y0.contains(Vec{Int(1), Int(-1), Int(0)}));
    CHECK(!y0.contains(Vec{Int(1), Int(0), Int(0)}));
    LatticeBasis yc = gl3.center_cochar();
    CHECK(yc == LatticeBasis(3, {Vec{Int(1), Int(1), Int(1)}}));

    RootDatum gsp = standard_datum(Family::GSpI, 3);
    LatticeBasis ycg = gsp.center_cochar();
    CHECK(ycg == LatticeBasis(4, {Vec{Int(1), Int(1), Int(1), Int(2)}}));  // e_c = 2e_0 + sum e_i

    RootDatum gspin = standard_datum(Family::GSpinOdd, 2);
    CHECK(gspin.center_cochar() == LatticeBasis(3, {Vec{Int(0), Int(0), Int(1)}}));  // Z e_0

    // derived lattice equals the coroot span on simply-connected-derived
    // presets and strictly contains it for SO_3
    for (Family f : {Family::GL, Family::Sp, Family::GSpI, Family::GSpinOdd}) {
        RootDatum d = standard_datum(f, 2);
        CHECK(d.derived_cochar() == d.coroot_span());
    }
    RootDatum so3 = standard_datum(Family::SO3, 1);
    CHECK(so3.derived_cochar() == LatticeBasis::full(1));
    CHECK(so3.coroot_span() == LatticeBasis(1, {Vec{Int(2)}}));
}

TEST_CASE("disconnected centers are rejected") {
    CHECK(!standard_datum(Family::SL, 2).center_connected());
    CHECK_THROWS_AS(standard_datum(Family::SL, 2).center_cochar(), compute_error);
    CHECK(!standard_datum(Family::Sp, 2).center_connected());
    CHECK(standard_datum(Family::SO3, 1).center_connected());
}

TEST_CASE("levi data") {
    RootDatum gsp = standard_datum(Family::GSpI, 2);
    LeviDatum m = levi(gsp, {0});  // GL_2 block
    CHECK(m.datum.nsimple() == 1);
    CHECK(m.datum.rank == gsp.rank);
    LeviDatum full = levi(gsp, {0, 1});
    CHECK(full.datum.simple_roots == gsp.simple_roots);
    LeviDatum torus = levi(gsp, {});
    CHECK(torus.datum.nsimple() == 0);
    CHECK(levi_center_cochar(gsp, {}) == LatticeBasis::full(3));
}

TEST_CASE("coweight dual of the root lattice is the coweight lattice") {
    RootDatum sl2 = standard_datum(Family::SL, 2);
    // P(X^sc) for SL_2 is Z(alpha^vee/2) = Z omega in coweight coordinates
    LatticeBasis p = coweight_dual(sl2, QLattice::integral(sl2.root_span()));
    CHECK(p == LatticeBasis::full(1));
    // P(X) is the proper sublattice 2 Z omega
    LatticeBasis px = coweight_dual(sl2, QLattice::integral(LatticeBasis::full(1)));
    CHECK(px == LatticeBasis(1, {Vec{Int(2)}}));
}
