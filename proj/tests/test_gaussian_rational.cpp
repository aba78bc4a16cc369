#include <b2hecke/gaussian_rational.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using b2hecke::GaussianRational;

namespace {

GaussianRational gr(long long n) { return GaussianRational(n); }
GaussianRational frac(long long n, long long d) { return GaussianRational::fraction(n, d); }

// Small random nonzero-friendly sample, deterministic across runs.
GaussianRational sample(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    return GaussianRational(b2hecke::BigInt(num(rng)), b2hecke::BigInt(den(rng)),
                            b2hecke::BigInt(num(rng)), b2hecke::BigInt(den(rng)));
}

}  // namespace

TEST_CASE("arithmetic on spot values", "[field]") {
    GaussianRational i = GaussianRational::i();
    CHECK((gr(1) + i) * (gr(1) - i) == gr(2));
    CHECK(GaussianRational(b2hecke::BigInt(2), b2hecke::BigInt(4)) + gr(0) == frac(1, 2));
    CHECK(frac(3, 5) * frac(5, 3) == gr(1));
    CHECK(gr(2) - gr(2) == gr(0));
    CHECK((-gr(3)) + gr(3) == GaussianRational());
}

TEST_CASE("inverses", "[field]") {
    GaussianRational i = GaussianRational::i();
    CHECK((gr(3) * i).inv() == GaussianRational(b2hecke::BigInt(0), b2hecke::BigInt(1),
                                                b2hecke::BigInt(-1), b2hecke::BigInt(3)));
    CHECK(gr(1).inv() == gr(1));
    CHECK((gr(2) + i).inv() == frac(2, 5) - frac(1, 5) * i);
    CHECK_THROWS_AS(gr(0).inv(), std::domain_error);
}

TEST_CASE("roots of unity in Q(i)", "[field]") {
    CHECK((-GaussianRational::i()).is_root_of_unity());
    CHECK(gr(1).is_root_of_unity());
    CHECK(gr(-1).is_root_of_unity());
    CHECK_FALSE(gr(5).is_root_of_unity());
    // norm 1 but infinite multiplicative order
    GaussianRational z = frac(3, 5) + frac(4, 5) * GaussianRational::i();
    CHECK(z.norm() == gr(1));
    CHECK_FALSE(z.is_root_of_unity());
}

TEST_CASE("canonical form is unique", "[field]") {
    CHECK(GaussianRational(b2hecke::BigInt(2), b2hecke::BigInt(-4)) == frac(-1, 2));
    CHECK(GaussianRational(b2hecke::BigInt(0), b2hecke::BigInt(7)) == gr(0));
    GaussianRational a = frac(6, 4);
    CHECK(a.re_num() == 3);
    CHECK(a.re_den() == 2);
}

TEST_CASE("field axioms on random samples", "[field]") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        GaussianRational a = sample(rng), b = sample(rng), c = sample(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inv() == gr(1));
    }
}

TEST_CASE("powers add exponents", "[field]") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        GaussianRational a = sample(rng);
        if (a.is_zero()) continue;
        for (long long m : {-3LL, -1LL, 0LL, 2LL, 4LL})
            for (long long n : {-2LL, 1LL, 3LL}) CHECK(a.pow(m) * a.pow(n) == a.pow(m + n));
    }
}

TEST_CASE("serialization round trips", "[field]") {
    CHECK(GaussianRational::parse("3") == gr(3));
    CHECK(GaussianRational::parse("3/1") == gr(3));
    CHECK(GaussianRational::parse("-2/4") == frac(-1, 2));
    CHECK(GaussianRational::parse("i") == GaussianRational::i());
    CHECK(GaussianRational::parse("-i") == -GaussianRational::i());
    CHECK(GaussianRational::parse("3i") == gr(3) * GaussianRational::i());
    CHECK(GaussianRational::parse("1/2+3/4*i") ==
          frac(1, 2) + frac(3, 4) * GaussianRational::i());
    CHECK(GaussianRational::parse("1-2/3*i") == gr(1) - frac(2, 3) * GaussianRational::i());
    CHECK(GaussianRational::parse("3/5 + 4/5*i") ==
          frac(3, 5) + frac(4, 5) * GaussianRational::i());

    CHECK(gr(0).to_string() == "0");
    CHECK(frac(-1, 2).to_string() == "-1/2");
    CHECK((gr(1) - frac(2, 3) * GaussianRational::i()).to_string() == "1-2/3*i");
    CHECK((gr(3) * GaussianRational::i()).to_string() == "3*i");
    CHECK((-GaussianRational::i()).to_string() == "-i");

    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        GaussianRational a = sample(rng);
        CHECK(GaussianRational::parse(a.to_string()) == a);
    }
    CHECK_THROWS_AS(GaussianRational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(GaussianRational::parse("x"), std::invalid_argument);
}
