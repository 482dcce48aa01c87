#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ffram/poly.hpp"

using namespace ffram;

// brute-force gcd oracle: the unique highest-degree common monic divisor
static Poly gcd_oracle(const Poly& a, const Poly& b) {
    const FieldCtx& F = a.ctx();
    Poly best = Poly::one(F);
    int cap = std::min(a.is_zero() ? b.deg() : a.deg(), b.is_zero() ? a.deg() : b.deg());
    for (int d = 1; d <= cap; ++d)
        for_each_monic(F, d, [&](const Poly& g) {
            bool da = a.is_zero() || divrem(a, g).second.is_zero();
            bool db = b.is_zero() || divrem(b, g).second.is_zero();
            if (da && db) best = g;
        });
    return best;
}

// integer Moebius for the necklace count
static int int_mu(int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            m = -m;
        }
    if (n > 1) m = -m;
    return m;
}

TEST_CASE("parse and format over F_2") {
    FieldCtx F(2, 1);
    CHECK(parse_poly(F, "X^2+X") == Poly::from_indices(F, {0, 1, 1}));
    CHECK(to_string(Poly::from_indices(F, {1, 0, 1})) == "X^2+1");
    CHECK(to_string(Poly::zero(F)) == "0");
    CHECK(parse_poly(F, "0").is_zero());
    CHECK(parse_poly(F, " X ^ 3 + 1 ") == Poly::from_indices(F, {1, 0, 0, 1}));
    CHECK(parse_poly(F, "X+X").is_zero());  // terms accumulate in the field

    CHECK_THROWS_AS(parse_poly(F, "2X^3+1"), ParseError);  // coefficient out of field
    CHECK_THROWS_AS(parse_poly(F, "X^2+"), ParseError);
    CHECK_THROWS_AS(parse_poly(F, "X*X"), ParseError);
    CHECK_THROWS_AS(parse_poly(F, ""), ParseError);
    CHECK_THROWS_AS(parse_poly(F, "X^"), ParseError);
    CHECK_THROWS_AS(parse_poly(F, "X^65"), ParseError);  // exponent cap
    CHECK_THROWS_AS(parse_poly(F, "+X"), ParseError);
    try {
        parse_poly(F, "X^2+3");
    } catch (const ParseError& e) {
        CHECK(e.pos == 4);  // error position points at the bad coefficient
    }
}

TEST_CASE("parse and format over an extension field") {
    FieldCtx F(2, 2);
    Poly f = parse_poly(F, "[1,1]X^2+[1,0]");
    CHECK(f.deg() == 2);
    CHECK(f.coeff(2) == F.from_digits({1, 1}));
    CHECK(f.coeff(0) == F.from_digits({0, 1}));
    CHECK(to_string(f) == "[1,1]X^2+[1,0]");
    // unit coefficient is omitted, constants keep the bracket form
    CHECK(to_string(parse_poly(F, "X^2+[0,1]")) == "X^2+[0,1]");
    // bare integers embed through the prime subfield
    CHECK(parse_poly(F, "X+1") == parse_poly(F, "X+[0,1]"));
    CHECK_THROWS_AS(parse_poly(F, "[2,0]X"), ParseError);
    CHECK_THROWS_AS(parse_poly(F, "[1]X"), ParseError);
    FieldCtx P(3, 1);
    CHECK_THROWS_AS(parse_poly(P, "[1,0]X"), ParseError);
}

TEST_CASE("round trip on every monic polynomial of small degree") {
    for (auto [p, t] : {std::pair<long, int>{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
        FieldCtx F(p, t);
        for (int d = 0; d <= 3; ++d)
            for_each_monic(F, d, [&](const Poly& f) {
                REQUIRE(parse_poly(F, to_string(f)) == f);
                REQUIRE(Poly::from_code(F, f.code()) == f);
            });
    }
}

TEST_CASE("divrem") {
    FieldCtx F(2, 1);
    Poly X = Poly::x(F);
    auto [q1, r1] = divrem(parse_poly(F, "X^2+X"), X);
    CHECK(q1 == parse_poly(F, "X+1"));
    CHECK(r1.is_zero());
    auto [q2, r2] = divrem(parse_poly(F, "X^2+1"), parse_poly(F, "X+1"));
    CHECK(q2 == parse_poly(F, "X+1"));
    CHECK(r2.is_zero());
    auto [q3, r3] = divrem(X, parse_poly(F, "X^2"));
    CHECK(q3.is_zero());
    CHECK(r3 == X);
    CHECK_THROWS_AS(divrem(X, Poly::zero(F)), std::invalid_argument);
}

TEST_CASE("divrem invariant on random pairs") {
    std::mt19937 rng(99);
    for (auto [p, t] : {std::pair<long, int>{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        FieldCtx F(p, t);
        for (int iter = 0; iter < 300; ++iter) {
            std::vector<Fq> ca(rng() % 7 + 1), cb(rng() % 4 + 1);
            for (auto& c : ca) c = F.from_index(rng() % F.q());
            for (auto& c : cb) c = F.from_index(rng() % F.q());
            Poly a(F, ca), b(F, cb);
            if (b.is_zero()) continue;
            auto [q, r] = divrem(a, b);
            REQUIRE(q * b + r == a);
            REQUIRE((r.is_zero() || r.deg() < b.deg()));
        }
    }
}

TEST_CASE("gcd against the brute-force oracle") {
    FieldCtx F(2, 1);
    CHECK(gcd(parse_poly(F, "X^2+X"), parse_poly(F, "X^2+1")) == parse_poly(F, "X+1"));
    CHECK(gcd(parse_poly(F, "X"), parse_poly(F, "X+1")).is_one());
    CHECK(gcd(parse_poly(F, "X^2+X"), Poly::zero(F)) == parse_poly(F, "X^2+X"));
    CHECK_THROWS_AS(gcd(Poly::zero(F), Poly::zero(F)), std::invalid_argument);

    FieldCtx F3(3, 1);
    // gcd(f, 0) = monic(f)
    CHECK(gcd(Poly::from_indices(F3, {0, 2}), Poly::zero(F3)) == Poly::x(F3));

    std::mt19937 rng(4242);
    for (const FieldCtx& F : {FieldCtx(2, 1), FieldCtx(3, 1)}) {
        for (int iter = 0; iter < 200; ++iter) {
            std::vector<Fq> ca(rng() % 5 + 1), cb(rng() % 5 + 1);
            for (auto& c : ca) c = F.from_index(rng() % F.q());
            for (auto& c : cb) c = F.from_index(rng() % F.q());
            Poly a(F, ca), b(F, cb);
            if (a.is_zero() && b.is_zero()) continue;
            REQUIRE(gcd(a, b) == gcd_oracle(a, b));
        }
    }
}

TEST_CASE("monic enumeration order and counts") {
    FieldCtx F2(2, 1);
    auto d1 = monic_enum(F2, 1);
    REQUIRE(d1.size() == 2);
    CHECK(to_string(d1[0]) == "X");
    CHECK(to_string(d1[1]) == "X+1");

    auto d0 = monic_enum(F2, 0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].is_one());

    FieldCtx F3(3, 1);
    CHECK(monic_enum(F3, 2).size() == 9);

    // lexicographic, low-degree coefficient most significant
    auto d2 = monic_enum(F2, 2);
    CHECK(to_string(d2[0]) == "X^2");
    CHECK(to_string(d2[1]) == "X^2+X");
    CHECK(to_string(d2[2]) == "X^2+1");
    CHECK(to_string(d2[3]) == "X^2+X+1");
    for (size_t i = 1; i < d2.size(); ++i) CHECK(poly_less(d2[i - 1], d2[i]));
}

TEST_CASE("irreducibility") {
    FieldCtx F(2, 1);
    CHECK(irreducible_test(parse_poly(F, "X^2+X+1")));
    CHECK_FALSE(irreducible_test(parse_poly(F, "X^2+1")));  // (X+1)^2
    CHECK(irreducible_test(Poly::x(F)));
    CHECK_THROWS_AS(irreducible_test(Poly::one(F)), std::invalid_argument);
    FieldCtx F3(3, 1);
    CHECK_THROWS_AS(irreducible_test(Poly::from_indices(F3, {0, 2})), std::invalid_argument);
}

TEST_CASE("sieve counts match the necklace formula and brute force") {
    for (auto [p, t] : {std::pair<long, int>{2, 1}, {3, 1}, {2, 2}}) {
        FieldCtx F(p, t);
        long q = F.q();
        for (int d = 1; d <= 4; ++d) {
            long necklace = 0;
            for (int e = 1; e <= d; ++e)
                if (d % e == 0) {
                    long term = int_mu(e);
                    for (int k = 0; k < d / e; ++k) term *= q;
                    necklace += term;
                }
            necklace /= d;
            CHECK(static_cast<long>(irreducibles(F, d).size()) == necklace);

            if (d <= 3) {
                // brute force: no monic divisor of degree 1..d-1
                long brute = 0;
                for_each_monic(F, d, [&](const Poly& f) {
                    for (int dd = 1; dd < d; ++dd) {
                        bool divisible = false;
                        for_each_monic(F, dd, [&](const Poly& g) {
                            if (divrem(f, g).second.is_zero()) divisible = true;
                        });
                        if (divisible) return;
                    }
                    ++brute;
                });
                CHECK(brute == necklace);
            }
        }
    }
}

TEST_CASE("factorization") {
    FieldCtx F(2, 1);
    Factorization fac = factorize(parse_poly(F, "X^4+X"));
    REQUIRE(fac.factors.size() == 3);
    CHECK(to_string(fac.factors[0].first) == "X");
    CHECK(to_string(fac.factors[1].first) == "X+1");
    CHECK(to_string(fac.factors[2].first) == "X^2+X+1");
    for (auto& [p, m] : fac.factors) CHECK(m == 1);

    Poly irr = parse_poly(F, "X^3+X+1");
    Factorization f2 = factorize(irr);
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].first == irr);
    CHECK(f2.factors[0].second == 1);

    CHECK(factorize(Poly::one(F)).factors.empty());
    CHECK_THROWS_AS(factorize(Poly::zero(F)), std::invalid_argument);

    FieldCtx F3(3, 1);
    Factorization f3 = factorize(Poly::from_indices(F3, {0, 0, 2}));  // 2X^2
    CHECK(f3.unit == F3.from_index(2));
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0].second == 2);
}

TEST_CASE("factorize round trip on random products") {
    std::mt19937 rng(31337);
    for (const FieldCtx& F : {FieldCtx(2, 1), FieldCtx(3, 1), FieldCtx(2, 2)}) {
        for (int iter = 0; iter < 120; ++iter) {
            Poly prod = Poly::one(F);
            int parts = 1 + rng() % 3;
            for (int i = 0; i < parts; ++i) {
                int d = 1 + rng() % 3;
                std::vector<Fq> c(d + 1);
                for (auto& v : c) v = F.from_index(rng() % F.q());
                c[d] = F.one();
                prod = prod * Poly(F, c);
            }
            Factorization fac = factorize(prod);
            Poly back = Poly::constant(F, fac.unit);
            std::set<uint64_t> seen;
            for (auto& [p, m] : fac.factors) {
                REQUIRE(p.is_monic());
                REQUIRE(irreducible_test(p));
                REQUIRE(seen.insert(p.code()).second);  // pairwise distinct
                for (int e = 0; e < m; ++e) back = back * p;
            }
            REQUIRE(back == prod);
            for (size_t i = 1; i < fac.factors.size(); ++i)
                REQUIRE(poly_less(fac.factors[i - 1].first, fac.factors[i].first));
        }
    }
}

TEST_CASE("divisors") {
    FieldCtx F(2, 1);
    auto divs = divisors(parse_poly(F, "X^2+X"));
    REQUIRE(divs.size() == 4);
    CHECK(to_string(divs[0]) == "1");
    CHECK(to_string(divs[1]) == "X");
    CHECK(to_string(divs[2]) == "X+1");
    CHECK(to_string(divs[3]) == "X^2+X");

    Poly P = parse_poly(F, "X^2+X+1");
    auto dp2 = divisors(P * P);
    REQUIRE(dp2.size() == 3);
    CHECK(dp2[0].is_one());
    CHECK(dp2[1] == P);
    CHECK(dp2[2] == P * P);

    auto d1 = divisors(Poly::one(F));
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].is_one());

    // count = prod(alpha_i + 1) on a worked case
    Poly f = parse_poly(F, "X^3+X^2");  // X^2 (X+1)
    CHECK(divisors(f).size() == 6);
}

TEST_CASE("residue systems") {
    FieldCtx F(2, 1);
    auto full = residues(Poly::x(F), false);
    REQUIRE(full.size() == 2);
    CHECK(full[0].is_zero());
    CHECK(full[1].is_one());

    auto red = residues(parse_poly(F, "X^2"), true);
    REQUIRE(red.size() == 2);
    CHECK(to_string(red[0]) == "1");
    CHECK(to_string(red[1]) == "X+1");

    auto one_full = residues(Poly::one(F), false);
    REQUIRE(one_full.size() == 1);
    CHECK(one_full[0].is_zero());
    auto one_red = residues(Poly::one(F), true);
    REQUIRE(one_red.size() == 1);

    CHECK_THROWS_AS(residues(Poly::zero(F), false), std::invalid_argument);
    // oversized residue systems are refused instead of exhausting memory
    FieldCtx F9(3, 2);
    CHECK_THROWS_AS(residues(parse_poly(F9, "X^9"), false), std::invalid_argument);

    // full residue count is q^deg and the order is canonical
    FieldCtx F3(3, 1);
    auto fr = residues(parse_poly(F3, "X^2"), false);
    REQUIRE(fr.size() == 9);
    for (size_t i = 1; i < fr.size(); ++i) CHECK(poly_less(fr[i - 1], fr[i]));
}

TEST_CASE("gcd multiplicativity under the coprimality conditions") {
    // (h1 h2, f1 f2) = (h1, f1) (h2, f2) whenever
    // (h1,h2) = (f1,f2) = (h1,f2) = (h2,f1) = 1
    for (auto [p, maxd] : {std::pair<long, int>{2, 2}, {3, 1}}) {
        FieldCtx F(p, 1);
        std::vector<Poly> all;
        for (int d = 0; d <= maxd; ++d)
            for_each_monic(F, d, [&](const Poly& f) { all.push_back(f); });
        long cases = 0;
        for (const Poly& h1 : all)
            for (const Poly& h2 : all)
                for (const Poly& f1 : all)
                    for (const Poly& f2 : all) {
                        if (!gcd(h1, h2).is_one() || !gcd(f1, f2).is_one()) continue;
                        if (!gcd(h1, f2).is_one() || !gcd(h2, f1).is_one()) continue;
                        ++cases;
                        REQUIRE(gcd(h1 * h2, f1 * f2) == gcd(h1, f1) * gcd(h2, f2));
                    }
        CHECK(cases > 0);
    }
}

TEST_CASE("mixed context arithmetic is rejected") {
    FieldCtx a(2, 1), b(3, 1);
    CHECK_THROWS_AS(Poly::x(a) + Poly::x(b), std::invalid_argument);
    // equal parameters are compatible even across distinct context objects
    FieldCtx a2(2, 1);
    CHECK(Poly::x(a) * Poly::x(a2) == parse_poly(a, "X^2"));
}
