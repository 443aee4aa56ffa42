#include <random>

#include "cag/numberfield.hpp"
#include "doctest.h"

using namespace cag;
using namespace cag::arith;

namespace {

FieldPtr q_sqrt_m2() {
    return NumberField::make(RatPoly({Rat(2), Rat(0), Rat(1)}), "r");  // t^2+2
}

FieldPtr q_zeta8() {
    return NumberField::make(RatPoly({Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)}), "t");
}

NFElem random_elem(const FieldPtr& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    std::vector<Rat> c(f->degree());
    for (auto& q : c) q = Rat(num(rng), den(rng));
    return NFElem(f, std::move(c));
}

}  // namespace

TEST_CASE("Rat canonical form and arithmetic") {
    Rat a(6, -4);
    CHECK(a == Rat(-3, 2));
    CHECK(a.den() == 2);
    CHECK(a.num() == -3);
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK((Rat(2, 3) * Rat(9, 4)) == Rat(3, 2));
    CHECK_THROWS_AS(Rat(1, 0), error);
    CHECK_THROWS_AS(Rat(1) / Rat(0), error);
    CHECK(Rat::from_string("-22/7") == Rat(-22, 7));
    CHECK(Rat::from_string("9/16").str() == "9/16");
}

TEST_CASE("rational square roots") {
    CHECK(rat_sqrt(Rat(9, 16)) == Rat(3, 4));
    CHECK(!rat_sqrt(Rat(2)));
    CHECK(!rat_sqrt(Rat(-4)));
    CHECK(rat_sqrt(Rat(0)) == Rat(0));
}

TEST_CASE("number field construction checks irreducibility") {
    CHECK_NOTHROW(q_sqrt_m2());
    CHECK_NOTHROW(q_zeta8());
    // t^2-1 has rational roots
    CHECK_THROWS_AS(NumberField::make(RatPoly({Rat(-1), Rat(0), Rat(1)})), error);
    // t^4+4 = (t^2+2t+2)(t^2-2t+2): caught by the quadratic-factor sweep
    CHECK_THROWS_AS(NumberField::make(RatPoly({Rat(4), Rat(0), Rat(0), Rat(0), Rat(1)})),
                    error);
    // non-monic rejected
    CHECK_THROWS_AS(NumberField::make(RatPoly({Rat(1), Rat(0), Rat(2)})), error);
}

TEST_CASE("arithmetic in Q(sqrt(-2))") {
    auto K = q_sqrt_m2();
    NFElem r = NFElem::generator(K);
    NFElem one = NFElem::one(K);
    CHECK((one + r) * (one - r) == NFElem::from_rat(K, Rat(3)));
    // (1+r)^{-1} = (1-r)/3
    NFElem inv = (one + r).inv();
    CHECK(inv == (one - r) / NFElem::from_rat(K, Rat(3)));
    CHECK_THROWS_AS(NFElem::zero(K).inv(), error);
}

TEST_CASE("arithmetic in Q(zeta_8)") {
    auto K = q_zeta8();
    NFElem t = NFElem::generator(K);
    // (t + t^3)^2 + 2 = 0, i.e. t+t^3 = sqrt(-2)
    NFElem s = t + t.pow(3);
    CHECK((s * s + NFElem::from_rat(K, Rat(2))).is_zero());
    // t^2 = i
    CHECK((t.pow(2) * t.pow(2) + NFElem::one(K)).is_zero());
}

TEST_CASE("field mismatch is rejected") {
    auto K1 = q_sqrt_m2();
    auto K2 = q_zeta8();
    CHECK_THROWS_AS(NFElem::generator(K1) + NFElem::generator(K2), error);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(20260810);
    for (auto K : {q_sqrt_m2(), q_zeta8()}) {
        for (int it = 0; it < 60; ++it) {
            NFElem a = random_elem(K, rng), b = random_elem(K, rng), c = random_elem(K, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK((a * a.inv()).is_one());
        }
    }
}

TEST_CASE("nf_embed maps sqrt(-2) into Q(zeta_8)") {
    auto K = q_sqrt_m2();
    auto L = q_zeta8();
    NFElem t = NFElem::generator(L);
    NFElem image = t + t.pow(3);

    NFElem r = NFElem::generator(K);
    CHECK(nf_embed(r, L, image) == image);

    // rationals are fixed
    CHECK(nf_embed(NFElem::from_rat(K, Rat(3, 5)), L, image) ==
          NFElem::from_rat(L, Rat(3, 5)));

    // a wrong generator image is rejected
    CHECK_THROWS_AS(nf_embed(r, L, t), error);

    // ring homomorphism on random elements
    std::mt19937_64 rng(7);
    for (int it = 0; it < 50; ++it) {
        NFElem a = random_elem(K, rng), b = random_elem(K, rng);
        CHECK(nf_embed(a * b, L, image) == nf_embed(a, L, image) * nf_embed(b, L, image));
        CHECK(nf_embed(a + b, L, image) == nf_embed(a, L, image) + nf_embed(b, L, image));
    }
}

TEST_CASE("nf_sqrt on the scenario fields") {
    auto Q = NumberField::rationals();
    auto K = q_sqrt_m2();
    auto L = q_zeta8();

    CHECK(nf_sqrt(NFElem::from_rat(Q, Rat(9, 4))) == NFElem::from_rat(Q, Rat(3, 2)));
    CHECK(!nf_sqrt(NFElem::from_rat(Q, Rat(2))));

    NFElem r = NFElem::generator(K);
    auto s = nf_sqrt(NFElem::from_rat(K, Rat(-2)));
    REQUIRE(s);
    CHECK((*s == r || *s == -r));

    NFElem t = NFElem::generator(L);
    auto i = nf_sqrt(NFElem::from_rat(L, Rat(-1)));
    REQUIRE(i);
    CHECK((*i == t.pow(2) || *i == -t.pow(2)));

    // sqrt(-8) in Q(zeta8) exists: 2(t+t^3)
    auto m8 = nf_sqrt(NFElem::from_rat(L, Rat(-8)));
    REQUIRE(m8);
    CHECK((*m8) * (*m8) == NFElem::from_rat(L, Rat(-8)));

    // sqrt(s^2) = ±s randomized
    std::mt19937_64 rng(99);
    for (auto F : {Q, K, L}) {
        for (int it = 0; it < 40; ++it) {
            NFElem a = random_elem(F, rng);
            auto b = nf_sqrt(a * a);
            REQUIRE(b);
            CHECK((*b == a || *b == -a));
        }
    }
}

TEST_CASE("rational_roots by divisor bounds") {
    // (2x-3)(x+5)(x^2+1)
    RatPoly p = RatPoly({Rat(2), Rat(0), Rat(-3)}) * RatPoly({Rat(5), Rat(1)}) *
                RatPoly({Rat(1), Rat(0), Rat(1)});
    // note first factor written low-to-high: 2 - 3x? fix below
    p = RatPoly({Rat(-3), Rat(2)}) * RatPoly({Rat(5), Rat(1)}) *
        RatPoly({Rat(1), Rat(0), Rat(1)});
    auto roots = rational_roots(p);
    CHECK(roots.size() == 2);
    CHECK(std::count(roots.begin(), roots.end(), Rat(3, 2)) == 1);
    CHECK(std::count(roots.begin(), roots.end(), Rat(-5)) == 1);
}
