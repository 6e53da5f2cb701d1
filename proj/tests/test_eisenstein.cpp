#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eisenfoil/eisrat.hpp"

using namespace eisenfoil;

namespace {
std::mt19937_64 rng(0xE15E57EEDULL);

EisInt random_eis(std::int64_t range) {
    std::uniform_int_distribution<std::int64_t> d(-range, range);
    return {BigInt(d(rng)), BigInt(d(rng))};
}
}  // namespace

TEST_CASE("norm basics") {
    CHECK(norm(EisInt::one()) == 1);
    CHECK(norm(EisInt{BigInt(2), BigInt(1)}) == 3);
    CHECK(norm(EisInt::zero()) == 0);
    CHECK(norm(EisInt::tau()) == 1);
}

TEST_CASE("ring laws and norm multiplicativity") {
    for (int i = 0; i < 1000; ++i) {
        EisInt x = random_eis(1000), y = random_eis(1000), z = random_eis(1000);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(norm(x * y) == norm(x) * norm(y));
        CHECK((norm(x) == 0) == x.is_zero());
        CHECK(norm(x.conj()) == norm(x));
    }
    // w^2 = -1 - w
    EisInt w = EisInt::tau();
    CHECK(w * w == EisInt{BigInt(-1), BigInt(-1)});
    CHECK(w * w * w == EisInt::one());
}

TEST_CASE("divmod is Euclidean") {
    for (int i = 0; i < 2000; ++i) {
        EisInt x = random_eis(1000000);
        EisInt y = random_eis(1000000);
        if (y.is_zero()) continue;
        auto [q, r] = divmod(x, y);
        CHECK(x == q * y + r);
        CHECK(norm(r) < norm(y));
    }
    CHECK_THROWS_AS(divmod(EisInt::one(), EisInt::zero()), std::domain_error);

    auto [q1, r1] = divmod(EisInt{BigInt(5), BigInt(0)}, EisInt{BigInt(2), BigInt(0)});
    CHECK(norm(r1) <= 1);
    auto [q2, r2] = divmod(EisInt{BigInt(1), BigInt(1)}, EisInt{BigInt(1), BigInt(1)});
    CHECK(q2 == EisInt::one());
    CHECK(r2.is_zero());
    auto [q3, r3] = divmod(EisInt{BigInt(7), BigInt(3)}, EisInt{BigInt(2), BigInt(1)});
    CHECK(norm(r3) < 3);
}

TEST_CASE("canonical associate is unique") {
    for (int i = 0; i < 1000; ++i) {
        EisInt x = random_eis(500);
        if (x.is_zero()) continue;
        int hits = 0;
        for (const auto& u : eis_units<BigInt>())
            if (is_canonical(u * x)) ++hits;
        CHECK(hits == 1);
        auto [cx, u] = canonical_associate(x);
        CHECK(cx == u * x);
        CHECK(is_canonical(cx));
    }
    auto [c1, u1] = canonical_associate(EisInt::tau());
    CHECK(c1 == EisInt::one());
    auto [c2, u2] = canonical_associate(EisInt{BigInt(2), BigInt(1)});
    CHECK(c2 == EisInt{BigInt(2), BigInt(1)});
    CHECK(u2 == EisInt::one());
    auto [c3, u3] = canonical_associate(EisInt{BigInt(1), BigInt(1)});
    CHECK(is_canonical(c3));
    CHECK(c3 != EisInt{BigInt(1), BigInt(1)});  // 60-degree boundary excluded
}

TEST_CASE("gcd properties") {
    CHECK(gcd(EisInt{BigInt(6), BigInt(0)}, EisInt{BigInt(4), BigInt(0)}) ==
          EisInt{BigInt(2), BigInt(0)});
    CHECK(gcd(EisInt{BigInt(1), BigInt(1)}, EisInt{BigInt(0), BigInt(1)}) == EisInt::one());
    CHECK_THROWS_AS(gcd(EisInt::zero(), EisInt::zero()), std::domain_error);
    for (int i = 0; i < 1000; ++i) {
        EisInt x = random_eis(300), y = random_eis(300), z = random_eis(300);
        if (x.is_zero() && y.is_zero()) continue;
        EisInt g = gcd(x, y);
        CHECK(is_canonical(g));
        CHECK(divmod(x, g).second.is_zero());
        CHECK(divmod(y, g).second.is_zero());
        if (!x.is_zero()) CHECK(gcd(x, x) == canonical_associate(x).first);
        if (!z.is_zero() && !(y.is_zero() && z.is_zero())) {
            // associativity up to units
            EisInt l = gcd(gcd(x, y), z);
            EisInt r = gcd(x, gcd(y, z));
            CHECK(l == r);  // both canonical, so equal outright
        }
        // every common divisor divides the gcd: spot-check with d = gcd itself
        // and with products
        EisInt d = random_eis(10);
        if (!d.is_zero()) {
            EisInt gg = gcd(x * d, y * d);
            CHECK(divmod(gg, d).second.is_zero());
        }
    }
}

TEST_CASE("parse and format round-trip") {
    CHECK(parse_eisrat("1").value() == EisRat::integer(1));
    CHECK(parse_eisrat("2-1*w").value() == EisRat::integer(2) - EisRat::tau());
    CHECK(parse_eisrat("-1/3+2/3*w").value() ==
          EisRat(EisInt{BigInt(-1), BigInt(2)}, EisInt{BigInt(3), BigInt(0)}));
    CHECK(parse_eisrat("inf").is_infinity());
    CHECK(parse_eisrat(" 2 - w ").value() == EisRat::integer(2) - EisRat::tau());
    CHECK(format_eisrat(ExtEisRat::infinity()) == "inf");
    CHECK(format_eisrat(EisRat()) == "0");
    CHECK_THROWS_AS(parse_eisrat("1++w"), ParseError);
    CHECK_THROWS_AS(parse_eisrat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_eisrat("w+w"), ParseError);
    try {
        parse_eisrat("2+*");
    } catch (const ParseError& e) {
        CHECK(e.pos > 0);
    }
    for (int i = 0; i < 1000; ++i) {
        EisInt n = random_eis(50);
        EisInt d = random_eis(50);
        if (d.is_zero()) continue;
        EisRat q(n, d);
        ExtEisRat back = parse_eisrat(format_eisrat(q));
        CHECK_FALSE(back.is_infinity());
        CHECK(back.value() == q);
    }
}

TEST_CASE("EisRat reduction invariants") {
    for (int i = 0; i < 1000; ++i) {
        EisInt n = random_eis(200), d = random_eis(200);
        if (d.is_zero()) continue;
        EisRat q(n, d);
        CHECK(is_canonical(q.den()));
        if (!q.num().is_zero()) CHECK(is_unit(gcd(q.num(), q.den())));
        EisRat again(q.num(), q.den());
        CHECK(again == q);
    }
}
