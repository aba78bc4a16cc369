#include <b2hecke/hecke.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using b2hecke::GaussianRational;
using b2hecke::HeckeElement;
using b2hecke::Parameters;
using b2hecke::WeightVector;
using b2hecke::WeylElem;

namespace {

Parameters generic_params() { return Parameters(GaussianRational(5), GaussianRational(3)); }

HeckeElement gen(const Parameters& pr, const std::string& name) {
    return HeckeElement::generator(pr, name);
}

}  // namespace

TEST_CASE("parameter validation", "[hecke]") {
    CHECK_THROWS_AS(Parameters(GaussianRational(0), GaussianRational(3)), std::invalid_argument);
    CHECK_THROWS_AS(Parameters(GaussianRational(1), GaussianRational(3)), std::invalid_argument);
    CHECK_THROWS_AS(Parameters(GaussianRational(5), -GaussianRational::i()),
                    std::invalid_argument);
    CHECK_NOTHROW(Parameters(GaussianRational(3) * GaussianRational::i(), GaussianRational(3)));
}

TEST_CASE("quadratic relation", "[hecke]") {
    Parameters pr = generic_params();
    HeckeElement t1 = gen(pr, "T1");
    GaussianRational qdiff = pr.q - pr.q.inv();
    CHECK(t1 * t1 == qdiff * t1 + HeckeElement::one(pr));
    HeckeElement t2 = gen(pr, "T2");
    GaussianRational pdiff = pr.p - pr.p.inv();
    CHECK(t2 * t2 == pdiff * t2 + HeckeElement::one(pr));
}

TEST_CASE("commutation rule spot check", "[hecke]") {
    Parameters pr = generic_params();
    // X^{eps2} T2 = T2 X^{-eps2} + (p - 1/p) X^{eps2}
    HeckeElement lhs = gen(pr, "X2") * gen(pr, "T2");
    HeckeElement expected =
        HeckeElement::monomial(pr, WeylElem::s(2), {0, -1}) +
        (pr.p - pr.p.inv()) * HeckeElement::monomial(pr, WeylElem::identity(), {0, 1});
    CHECK(lhs == expected);
}

TEST_CASE("defining relations vanish in normal form", "[hecke]") {
    Parameters pr = generic_params();
    HeckeElement t1 = gen(pr, "T1"), t2 = gen(pr, "T2");
    HeckeElement x1 = gen(pr, "X1"), x2 = gen(pr, "X2");
    HeckeElement x2inv = gen(pr, "X2inv");

    CHECK((t1 * t2 * t1 * t2 - t2 * t1 * t2 * t1).is_zero());
    CHECK((x1 * x2 - x2 * x1).is_zero());
    CHECK(t1 * x2 * t1 == x1);
    CHECK(t2 * x2inv * t2 == x2);
    CHECK((t2 * x1 - x1 * t2).is_zero());
    CHECK(gen(pr, "X1inv") * x1 == HeckeElement::one(pr));
    CHECK(x2inv * x2 == HeckeElement::one(pr));
}

TEST_CASE("Bernstein rule matches the rational identity", "[hecke]") {
    // (X^l T_i - T_i X^{s_i l}) (1 - X^{-alpha_i}) == (q_i - 1/q_i)(X^l - X^{s_i l})
    Parameters pr = generic_params();
    for (int i : {1, 2}) {
        WeylElem si = WeylElem::s(i);
        HeckeElement ti = HeckeElement::t_w(pr, si);
        WeightVector alpha = i == 1 ? b2hecke::kAlpha1Coroot : b2hecke::kAlpha2Coroot;
        GaussianRational qdiff = pr.qi(i) - pr.qi(i).inv();
        HeckeElement one = HeckeElement::one(pr);
        HeckeElement x_neg_alpha =
            HeckeElement::monomial(pr, WeylElem::identity(), {-alpha.a, -alpha.b});
        for (long long a = -3; a <= 3; ++a) {
            for (long long b = -3; b <= 3; ++b) {
                WeightVector lam{a, b};
                HeckeElement xl = HeckeElement::monomial(pr, WeylElem::identity(), lam);
                HeckeElement xsl = HeckeElement::monomial(pr, WeylElem::identity(), si.act(lam));
                HeckeElement lhs = (xl * ti - ti * xsl) * (one - x_neg_alpha);
                HeckeElement rhs = qdiff * (xl - xsl);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("associativity on random monomials", "[hecke]") {
    Parameters pr = generic_params();
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> widx(0, 7);
    std::uniform_int_distribution<long long> coord(-2, 2);
    std::uniform_int_distribution<int> cnum(-4, 4);
    auto random_monomial = [&] {
        GaussianRational c(0);
        while (c.is_zero()) c = GaussianRational(cnum(rng));
        return HeckeElement::monomial(pr, WeylElem::all()[widx(rng)], {coord(rng), coord(rng)}, c);
    };
    for (int trial = 0; trial < 200; ++trial) {
        HeckeElement a = random_monomial(), b = random_monomial(), c = random_monomial();
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("parameter mismatch is rejected", "[hecke]") {
    Parameters pr = generic_params();
    Parameters other(GaussianRational(7), GaussianRational(3));
    CHECK_THROWS_AS(gen(pr, "T1") * gen(other, "T1"), std::invalid_argument);
}

TEST_CASE("serialization order is deterministic", "[hecke]") {
    Parameters pr = generic_params();
    HeckeElement e = gen(pr, "T1") * gen(pr, "T1");
    CHECK(e.to_string() == "1 * T[e] * X[0,0] + 8/3 * T[1] * X[0,0]");
    CHECK(HeckeElement::zero(pr).to_string() == "0");
}
