#include <random>

#include "cag/ideals.hpp"
#include "cag/parser.hpp"
#include "doctest.h"

using namespace cag;
using namespace cag::ideals;
using namespace cag::poly;
using arith::NFElem;
using arith::NumberField;
using arith::Rat;
using arith::RatPoly;

namespace {

arith::FieldPtr QQ() { return NumberField::rationals(); }

arith::FieldPtr Qr() {
    return NumberField::make(RatPoly(std::vector<Rat>{Rat(2), Rat(0), Rat(1)}), "r");
}

MultiPoly rnd(const RingPtr& R, std::mt19937_64& rng, int maxdeg = 2, int nt = 3) {
    std::uniform_int_distribution<int> e(0, maxdeg);
    std::uniform_int_distribution<long> c(-5, 5);
    std::vector<Term> ts;
    for (int i = 0; i < nt; ++i) {
        Monomial m(R->nvars());
        for (auto& x : m.e) x = e(rng);
        ts.push_back({m, NFElem::from_rat(R->field(), Rat(c(rng)))});
    }
    return MultiPoly(R, std::move(ts));
}

}  // namespace

TEST_CASE("buchberger on simple ideals") {
    auto R = PolyRing::make(QQ(), {"x", "y"}, MonomialOrder::Lex());
    Ideal I(R, {parse_poly("x-y", R), parse_poly("x+y", R)});
    GroebnerBasis G = buchberger(I);
    REQUIRE(G.basis().size() == 2);
    CHECK(G.basis()[0] == parse_poly("x", R));
    CHECK(G.basis()[1] == parse_poly("y", R));

    // twisted cubic, lex z > y > x
    auto R3 = PolyRing::make(QQ(), {"z", "y", "x"}, MonomialOrder::Lex());
    Ideal T(R3, {parse_poly("y-x^2", R3), parse_poly("z-x^3", R3)});
    GroebnerBasis GT = buchberger(T);
    CHECK(member(parse_poly("z-x^3", R3), GT));
    CHECK(member(parse_poly("y-x^2", R3), GT));
    CHECK(member(parse_poly("z*x - y^2", R3), GT));
    CHECK(!member(parse_poly("z-x^2", R3), GT));
}

TEST_CASE("normal form and inconsistent systems") {
    auto R = PolyRing::make(QQ(), {"x"}, MonomialOrder::Lex());
    GroebnerBasis G = buchberger(Ideal(R, {parse_poly("x", R)}));
    CHECK(normal_form(parse_poly("x^2", R), G).is_zero());

    GroebnerBasis G2 = buchberger(Ideal(R, {parse_poly("x-1", R), parse_poly("x", R)}));
    CHECK(G2.contains_one());
    CHECK(normal_form(parse_poly("1", R), G2).is_zero());
}

TEST_CASE("reduced basis invariants and S-polynomial reduction") {
    std::mt19937_64 rng(20260810);
    auto R = PolyRing::make(QQ(), {"x", "y", "z"});
    int tested = 0;
    while (tested < 30) {
        std::vector<MultiPoly> gens{rnd(R, rng), rnd(R, rng), rnd(R, rng)};
        Ideal I(R, gens);
        if (I.gens.empty()) continue;
        ++tested;
        GroebnerBasis G;
        try {
            G = buchberger(I);
        } catch (const budget_exceeded&) {
            continue;
        }
        const auto& B = G.basis();
        for (size_t i = 0; i < B.size(); ++i) {
            CHECK(B[i].lead().c.is_one());
            // no head term divides another head term
            for (size_t j = 0; j < B.size(); ++j)
                if (i != j) CHECK(!B[j].lead().m.divides(B[i].lead().m));
        }
        // every S-polynomial reduces to zero
        for (size_t i = 0; i < B.size(); ++i)
            for (size_t j = i + 1; j < B.size(); ++j) {
                Monomial l = B[i].lead().m.lcm(B[j].lead().m);
                MultiPoly s =
                    MultiPoly::monomial(R, l.div(B[i].lead().m), NFElem::one(QQ())) * B[i] -
                    MultiPoly::monomial(R, l.div(B[j].lead().m), NFElem::one(QQ())) * B[j];
                CHECK(normal_form(s, G).is_zero());
            }
        // membership is order-independent
        auto Rlex = PolyRing::make(QQ(), {"x", "y", "z"}, MonomialOrder::Lex());
        std::vector<MultiPoly> lex_gens;
        for (const auto& g : gens)
            if (!g.is_zero()) lex_gens.push_back(g.to_ring(Rlex));
        GroebnerBasis Glex = buchberger(Ideal(Rlex, lex_gens));
        for (int k = 0; k < 5; ++k) {
            MultiPoly f = rnd(R, rng);
            if (f.is_zero()) continue;
            CHECK(member(f, G) == member(f.to_ring(Rlex), Glex));
        }
    }
}

TEST_CASE("elimination ideal basics") {
    auto R = PolyRing::make(QQ(), {"x", "y"});
    Ideal I(R, {parse_poly("x-y", R), parse_poly("x+y", R)});
    Ideal E = elimination_ideal(I, {"x"});
    REQUIRE(E.gens.size() == 1);
    CHECK(E.gens[0] == parse_poly("y", E.ring));

    Ideal C(R, {parse_poly("x^2+y^2-1", R)});
    Ideal E2 = elimination_ideal(C, {"y"});
    CHECK(E2.gens.empty());
}

TEST_CASE("elimination soundness: generators remain members") {
    auto R = PolyRing::make(QQ(), {"x", "y", "z"});
    Ideal I(R, {parse_poly("x^2-y", R), parse_poly("x*z-y^2", R)});
    Ideal E = elimination_ideal(I, {"x"});
    GroebnerBasis G = buchberger(I);
    for (const auto& g : E.gens) {
        CHECK(member(g.to_ring(R), G));
    }
}

TEST_CASE("triple-root elimination reproduces the two invariants") {
    // coefficients of (u x + v z)^3 (m x + n z) against a..e, then eliminate
    auto R = PolyRing::make(QQ(), {"u", "v", "m", "n", "a", "b", "c", "d", "e"});
    std::vector<MultiPoly> gens{
        parse_poly("a - u^3*m", R),
        parse_poly("b - (u^3*n + 3*u^2*v*m)", R),
        parse_poly("c - (3*u^2*v*n + 3*u*v^2*m)", R),
        parse_poly("d - (3*u*v^2*n + v^3*m)", R),
        parse_poly("e - v^3*n", R)};
    Ideal I(R, std::move(gens));
    Budget big;
    big.max_pairs = 500000;
    Ideal E = elimination_ideal(I, {"u", "v", "m", "n"}, big);

    auto S = E.ring;
    MultiPoly inv_i = parse_poly("12*a*e-3*b*d+c^2", S);
    MultiPoly inv_j = parse_poly("27*a*d^2+27*b^2*e-27*b*c*d+8*c^3", S);
    Ideal expected(S, {inv_i, inv_j});
    CHECK(ideal_equal(E, expected, big));
}

TEST_CASE("solve_zero_dim") {
    auto Kr = Qr();
    auto R = PolyRing::make(Kr, {"x", "y"});
    NFElem r = NFElem::generator(Kr);

    Ideal I(R, {parse_poly("x^2+2", R), parse_poly("y-1", R)});
    SolutionSet S = solve_zero_dim(I);
    REQUIRE(S.points.size() == 2);
    CHECK(S.residual.empty());
    bool saw_r = false, saw_mr = false;
    for (auto& p : S.points) {
        CHECK(p[1].is_one());
        if (p[0] == r) saw_r = true;
        if (p[0] == -r) saw_mr = true;
    }
    CHECK(saw_r);
    CHECK(saw_mr);

    // sqrt(3) is not in Q(sqrt(-2)): residual survives
    auto R1 = PolyRing::make(Kr, {"x"});
    SolutionSet S2 = solve_zero_dim(Ideal(R1, {parse_poly("x^2-3", R1)}));
    CHECK(S2.points.empty());
    REQUIRE(S2.residual.size() == 1);
    CHECK(S2.residual[0].first == "x");
    CHECK(S2.residual[0].second.deg() == 2);

    // not zero-dimensional
    auto R2 = PolyRing::make(Kr, {"x", "y"});
    CHECK_THROWS_AS(solve_zero_dim(Ideal(R2, {parse_poly("x*y-1", R2)})), error);
}

TEST_CASE("budget exhaustion is a distinct outcome") {
    auto R = PolyRing::make(QQ(), {"x", "y", "z"});
    Ideal I(R, {parse_poly("x^2*y-z^2", R), parse_poly("y^3-x*z+1", R),
                parse_poly("z^3*x - y + 3", R)});
    Budget tiny;
    tiny.max_pairs = 2;
    CHECK_THROWS_AS(buchberger(I, tiny), budget_exceeded);
}
