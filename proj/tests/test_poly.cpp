#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "househunter/cyclotomic.hpp"
#include "househunter/poly.hpp"
#include "househunter/poly_text.hpp"

using namespace hh;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int max_deg, int max_abs) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> co(-max_abs, max_abs);
    std::vector<mpz_class> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& a : c) a = co(rng);
    IntPoly p{std::move(c)};
    if (p.is_zero()) return IntPoly{{1, 1}};
    return p;
}

IntPoly random_reciprocal(std::mt19937_64& rng, int half_deg) {
    std::uniform_int_distribution<int> co(-3, 3);
    const long d = 2 * half_deg;
    std::vector<mpz_class> c(static_cast<size_t>(d) + 1);
    for (long k = 0; 2 * k <= d; ++k) {
        int v = co(rng);
        if (k == 0 && v == 0) v = 1;
        c[k] = v;
        c[d - k] = v;
    }
    return IntPoly{std::move(c)};
}

IntPoly random_antireciprocal(std::mt19937_64& rng, int half_deg) {
    std::uniform_int_distribution<int> co(-3, 3);
    const long d = 2 * half_deg + 1;
    std::vector<mpz_class> c(static_cast<size_t>(d) + 1);
    for (long k = 0; 2 * k < d; ++k) {
        int v = co(rng);
        if (k == 0 && v == 0) v = 1;
        c[d - k] = v;
        c[k] = -v;
    }
    return IntPoly{std::move(c)};
}

}  // namespace

TEST_CASE("reciprocal predicate") {
    CHECK(parse_monomial_string("x^2 + 3x + 1").is_reciprocal());
    CHECK_FALSE(parse_monomial_string("x^3 + x").is_reciprocal());
    CHECK(parse_monomial_string("x^15 + x^13 - x^12 - x^3 + x^2 + 1").is_reciprocal());
    CHECK_THROWS_AS(IntPoly::zero().is_reciprocal(), std::domain_error);
}

TEST_CASE("antireciprocal predicate") {
    CHECK(parse_monomial_string("x^5 - x^3 + x^2 - 1").is_antireciprocal());
    CHECK_FALSE(parse_monomial_string("x^2 + 3x + 1").is_antireciprocal());
    CHECK(parse_monomial_string("x^9 - x^8 + x^7 - x^2 + x - 1").is_antireciprocal());
    CHECK_THROWS_AS(IntPoly::zero().is_antireciprocal(), std::domain_error);
    // even degree forces a zero middle coefficient
    CHECK_FALSE(parse_monomial_string("x^4 + x^2 - 1").is_antireciprocal());
}

TEST_CASE("primitivity predicate") {
    CHECK_FALSE(parse_monomial_string("x^4 + x^2 + 1").is_primitive());
    CHECK(parse_monomial_string("x^2 + 3x + 1").is_primitive());
    CHECK_FALSE(parse_monomial_string("x^6 + 3x^3 + 1").is_primitive());
    CHECK_THROWS_AS(IntPoly{{5}}.is_primitive(), std::domain_error);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == parse_monomial_string("x - 1"));
    CHECK(cyclotomic(12) == parse_monomial_string("x^4 - x^2 + 1"));
    CHECK(cyclotomic(10) == parse_monomial_string("x^4 - x^3 + x^2 - x + 1"));
    CHECK(cyclotomic(8) == parse_monomial_string("x^4 + 1"));
    for (long n : {1L, 2L, 3L, 5L, 9L, 36L, 105L}) CHECK(cyclotomic(n).degree() == euler_phi(n));
}

TEST_CASE("cyclotomic product identity up to 630") {
    for (long n = 1; n <= 630; ++n) {
        IntPoly prod = IntPoly::one();
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) prod *= cyclotomic(d);
        REQUIRE(prod == IntPoly::power_minus_one(n));
    }
}

TEST_CASE("multiplication and exact division") {
    CHECK(*divide_exact(parse_monomial_string("x^2 - 1"), parse_monomial_string("x - 1")) ==
          parse_monomial_string("x + 1"));

    const IntPoly table_row = parse_monomial_string("x^15 + x^13 - x^12 - x^3 + x^2 + 1");
    auto q = divide_exact(table_row, cyclotomic(2) * cyclotomic(10));
    REQUIRE(q.has_value());
    CHECK(q->degree() == 10);
    CHECK(*q * cyclotomic(2) * cyclotomic(10) == table_row);

    CHECK_FALSE(divide_exact(parse_monomial_string("x^2 + 1"), parse_monomial_string("x - 1")).has_value());
    CHECK_FALSE(divide_exact(parse_monomial_string("x^2 - 1"), parse_monomial_string("2x - 2")).has_value());
    CHECK_THROWS_AS(divide_exact(IntPoly::one(), IntPoly::zero()), std::domain_error);
}

TEST_CASE("compose_power") {
    CHECK(compose_power(parse_monomial_string("x^2 + 3x + 1"), 2) ==
          parse_monomial_string("x^4 + 3x^2 + 1"));
    CHECK(compose_power(parse_monomial_string("x^2 + 3x + 1"), 1) ==
          parse_monomial_string("x^2 + 3x + 1"));
}

TEST_CASE("divide(mul(p,q), q) == p on random inputs") {
    std::mt19937_64 rng(20240811);
    for (int it = 0; it < 300; ++it) {
        IntPoly p = random_poly(rng, 18, 5);
        IntPoly q = random_poly(rng, 12, 5);
        auto back = divide_exact(p * q, q);
        REQUIRE(back.has_value());
        CHECK(*back == p);
    }
}

TEST_CASE("products preserve mirror structure") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        IntPoly p = random_reciprocal(rng, 1 + it % 6);
        IntPoly q = random_reciprocal(rng, 1 + (it / 2) % 5);
        CHECK((p * q).is_reciprocal());
        IntPoly a = random_antireciprocal(rng, 1 + it % 5);
        CHECK((p * a).is_antireciprocal());
    }
}

TEST_CASE("compose_power never yields a primitive polynomial") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 100; ++it) {
        IntPoly p = random_poly(rng, 10, 3);
        if (p.degree() < 1) continue;
        for (long k = 2; k <= 4; ++k) CHECK_FALSE(compose_power(p, k).is_primitive());
    }
}

TEST_CASE("half-coefficient encoding") {
    const IntPoly r2 = parse_monomial_string("x^2 + 3x + 1");
    CHECK(to_string(encode_half(r2)) == "1 3");
    CHECK(decode_half(parse_half_string("1 0 0 -1 1"), 8) ==
          parse_monomial_string("x^8 - x^5 + x^4 - x^3 + 1"));
    CHECK(decode_half(parse_half_string("1 1 3"), 4) ==
          parse_monomial_string("x^4 + x^3 + 3x^2 + x + 1"));
    CHECK_THROWS_AS(encode_half(parse_monomial_string("x^3 + x")), std::domain_error);

    // unicode minus from table transcriptions is accepted
    CHECK(parse_half_string("1 0 0 \xE2\x88\x92" "1 1").half[3] == -1);
}

TEST_CASE("decode_half inverts encode_half") {
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 200; ++it) {
        IntPoly p = random_reciprocal(rng, 1 + it % 9);
        CHECK(decode_half(encode_half(p), p.degree()) == p);
    }
    // odd degrees round-trip as well
    const IntPoly odd = parse_monomial_string("x^15 + x^13 - x^12 - x^3 + x^2 + 1");
    CHECK(decode_half(encode_half(odd), 15) == odd);
}

TEST_CASE("monomial text round trip") {
    for (const char* s : {"x^15 + x^13 - x^12 - x^3 + x^2 + 1", "x^2 + 3x + 1", "x^4 - x^2 + 1",
                          "-x^3 + 2x - 7", "x", "5"}) {
        CHECK(to_monomial_string(parse_monomial_string(s)) == s);
    }
    CHECK(parse_monomial_string("x^2+3*x+1") == parse_monomial_string("x^2 + 3x + 1"));
}

TEST_CASE("sparse form round trip") {
    std::mt19937_64 rng(31337);
    for (int it = 0; it < 200; ++it) {
        IntPoly p = random_poly(rng, 30, 9);
        CHECK(SparsePoly::from_poly(p).to_poly() == p);
    }
    CHECK_THROWS_AS(SparsePoly({{0, 1}, {0, 2}}), std::domain_error);
    CHECK_THROWS_AS(SparsePoly({{1, 0}}), std::domain_error);
}
