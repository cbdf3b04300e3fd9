#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sc/engine.hpp"
#include "sc/padic.hpp"
#include "sc/primes.hpp"
#include "sc/rational.hpp"

using namespace sc;

TEST_CASE("rat basics") {
    CHECK(rat(6, 4) == rat(3, 2));
    CHECK(rat(-6, 4) == rat(-3, 2));
    CHECK(rat_str(rat(-3, 2)) == "-3/2");
    CHECK_THROWS_AS(rat(1, 0), zero_divide);
}

TEST_CASE("parse_rat") {
    CHECK(parse_rat("-1/2") == rat(-1, 2));
    CHECK(parse_rat("7") == rat(7));
    CHECK(parse_rat("+2/6") == rat(1, 3));
    CHECK_THROWS_AS(parse_rat(""), malformed_params);
    CHECK_THROWS_AS(parse_rat("1/0"), malformed_params);
    CHECK_THROWS_AS(parse_rat("x"), malformed_params);
    CHECK_THROWS_AS(parse_rat("0x10"), malformed_params);
}

TEST_CASE("vp and p-integrality") {
    CHECK(vp(rat(49, 20), 7) == 2);
    CHECK(vp(rat(3, 7), 7) == -1);
    CHECK(vp(rat(5), 3) == 0);
    CHECK_THROWS_AS(vp(rat(0), 5), zero_input);
    CHECK(p_integral(rat(3, 10), 7));
    CHECK(!p_integral(rat(3, 10), 5));
}

TEST_CASE("residue_mod") {
    CHECK(residue_mod(rat(1, 2), 7) == 4);
    CHECK(residue_mod(rat(-1, 3), 7) == 2);
    CHECK(residue_mod(rat(49, 20), 343) == 49 * invmod_u64(20, 343) % 343);
    CHECK_THROWS_AS(residue_mod(rat(1, 7), 49), not_p_integral);
}

TEST_CASE("alpha_split examples") {
    auto s1 = alpha_split(rat(5), 7);
    CHECK(s1.a == 5);
    CHECK(s1.t == 0);

    auto s2 = alpha_split(rat(-1, 2), 7);
    CHECK(s2.a == 3);
    CHECK(s2.t == rat(-1, 2));

    auto s3 = alpha_split(rat(-1, 3), 7);
    CHECK(s3.a == 2);
    CHECK(s3.t == rat(-1, 3));

    CHECK_THROWS_AS(alpha_split(rat(1, 7), 7), not_p_integral);
}

TEST_CASE("alpha_split exactness on random inputs") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<i64> num(-10000, 10000), den(1, 10000);
    for (u64 p : {5ull, 7ull, 11ull, 13ull}) {
        for (int i = 0; i < 200; ++i) {
            i64 d = den(rng);
            if (d % static_cast<i64>(p) == 0) continue;
            Rat alpha = rat(num(rng), d);
            auto sp = alpha_split(alpha, p);
            CHECK(sp.a < p);
            CHECK(rat(static_cast<i64>(sp.a)) + rat(static_cast<i64>(p)) * sp.t == alpha);
            CHECK(p_integral(sp.t, p));
        }
    }
}

TEST_CASE("vp_and_unit examples") {
    auto one = vp_and_unit(rat(1), 7, 3);
    CHECK(one.v == 0);
    CHECK(one.u == 1);

    auto x = vp_and_unit(rat(3, 7), 7, 3);
    CHECK(x.v == -1);
    CHECK(x.u == 3);

    // H_6 = 49/20
    auto h6 = vp_and_unit(rat(49, 20), 7, 2);
    CHECK(h6.v == 2);
    CHECK(h6.u == invmod_u64(20, 49));
    CHECK(h6.u == 27);

    CHECK_THROWS_AS(vp_and_unit(rat(0), 7, 3), zero_input);
}

TEST_CASE("padic round-trip vs residue_mod") {
    std::mt19937_64 rng(987);
    std::uniform_int_distribution<i64> num(-999999, 999999), den(1, 999999);
    for (u64 p : {5ull, 7ull, 11ull, 13ull}) {
        int checked = 0;
        while (checked < 250) {
            i64 n = num(rng), d = den(rng);
            if (n == 0 || d % static_cast<i64>(p) == 0) continue;
            Rat x = rat(n, d);
            int N = static_cast<int>(vp(x, p)) + 1 + static_cast<int>(rng() % 4);
            PAdic a = PAdic::from_rat(x, p, N);
            if (a.v >= 0) {
                CHECK(a.residue(N) == residue_mod(x, pw_u64(p, N)));
                ++checked;
            } else {
                ++checked;  // negative valuation: unit itself is the contract
                Rat unit = x * pow_rat(rat(static_cast<i64>(p)), static_cast<unsigned>(-a.v));
                CHECK(a.u == residue_mod(unit, pw_u64(p, N)));
            }
        }
    }
}

TEST_CASE("padic arithmetic keeps precision honest") {
    const u64 p = 7;
    const int N = 4;

    SECTION("multiplication keeps relative digits") {
        PAdic a = PAdic::from_rat(rat(3, 5), p, N);
        PAdic b = PAdic::from_rat(rat(14), p, N);
        PAdic c = a * b;
        CHECK(c.v == 1);
        CHECK(c.d == N);
        CHECK(c.abs_prec() == 1 + N);
    }

    SECTION("cancellation strips digits, precision tracks it") {
        PAdic one = PAdic::from_int(1, p, N);
        PAdic x = PAdic::from_rat(rat(1 + 49 * 3), p, N);  // 1 + 3p^2
        PAdic diff = x - one;
        CHECK(diff.v == 2);
        CHECK(diff.d == N - 2);
        CHECK(diff.u == 3);
    }

    SECTION("exact cancellation yields zero-to-precision, not a fake unit") {
        PAdic a = PAdic::from_rat(rat(22, 5), p, N);
        PAdic z = a - a;
        CHECK(z.zeroish());
        CHECK(!z.exact_zero());
        CHECK(z.v == N);  // both operands have abs precision N
    }

    SECTION("exact zero propagates") {
        PAdic z = PAdic::zero(p);
        PAdic a = PAdic::from_int(6, p, N);
        CHECK((z * a).exact_zero());
        CHECK((a + z).u == a.u);
        CHECK((a - z).v == a.v);
        CHECK((z / a).exact_zero());
    }

    SECTION("division by zero states") {
        PAdic a = PAdic::from_int(6, p, N);
        CHECK_THROWS_AS(a / PAdic::zero(p), zero_divide);
        CHECK_THROWS_AS(a / PAdic::zero_to(p, 3), precision_loss);
    }

    SECTION("adding values of different valuation") {
        PAdic a = PAdic::from_int(3, p, N);       // abs prec 4
        PAdic b = PAdic::from_rat(rat(49), p, N); // v=2, abs prec 6
        PAdic s = a + b;
        CHECK(s.v == 0);
        CHECK(s.abs_prec() == 4);
        CHECK(s.residue(3) == (3 + 49) % 343);
    }

    SECTION("zero-to-precision masks low digits of a sum") {
        PAdic ztp = PAdic::zero_to(p, 2);  // O(p^2)
        PAdic a = PAdic::from_int(3, p, N);
        PAdic s = a + ztp;
        CHECK(s.abs_prec() == 2);
        CHECK(s.residue(2) == 3);
    }
}

TEST_CASE("padic engine equivalence with exact rationals") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<i64> num(-5000, 5000), den(1, 5000);
    for (u64 p : {5ull, 7ull, 11ull, 13ull}) {
        const int N = 6;
        const u64 pn = pw_u64(p, N);
        int done = 0;
        while (done < 1000) {
            i64 n1 = num(rng), d1 = den(rng), n2 = num(rng), d2 = den(rng);
            if (n1 == 0 || n2 == 0) continue;
            if (d1 % static_cast<i64>(p) == 0 || d2 % static_cast<i64>(p) == 0) continue;
            Rat x = rat(n1, d1), y = rat(n2, d2);
            PAdic a = PAdic::from_rat(x, p, N), b = PAdic::from_rat(y, p, N);
            int op = static_cast<int>(rng() % 4);
            Rat ex;
            PAdic got = PAdic::zero(p);
            switch (op) {
                case 0: ex = x + y; got = a + b; break;
                case 1: ex = x - y; got = a - b; break;
                case 2: ex = x * y; got = a * b; break;
                default: ex = x / y; got = a / b; break;
            }
            if (got.zeroish()) {
                // the engine may only claim a valuation bound
                if (ex != 0) CHECK(vp(ex, p) >= got.v);
            } else {
                REQUIRE(ex != 0);
                CHECK(vp(ex, p) == got.v);
                Rat unit = got.v >= 0
                               ? Rat(ex / pow_rat(rat(static_cast<i64>(p)), static_cast<unsigned>(got.v)))
                               : Rat(ex * pow_rat(rat(static_cast<i64>(p)), static_cast<unsigned>(-got.v)));
                CHECK(got.u == residue_mod(unit, pw_u64(p, got.d)));
            }
            (void)pn;
            ++done;
        }
    }
}

TEST_CASE("binom_rat examples") {
    CHECK(binom_rat(rat(9, 7), 0) == 1);
    CHECK(binom_rat(rat(-1, 2), 2) == rat(3, 8));
    // binom(2k,k) = (-4)^k binom(-1/2,k) at k = 3
    CHECK(pow_rat(rat(-4), 3) * binom_rat(rat(-1, 2), 3) == rat(20));
    CHECK(binom_rat(rat(6), 3) == rat(20));
}

TEST_CASE("binom central identity k <= 50") {
    for (u64 k = 0; k <= 50; ++k) {
        Rat lhs = binom_rat(rat(2 * static_cast<i64>(k)), k);
        CHECK(lhs == pow_rat(rat(-4), static_cast<unsigned>(k)) * binom_rat(rat(-1, 2), k));
    }
}

TEST_CASE("binom Pascal property") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<i64> num(-50, 50), den(1, 20);
    for (int i = 0; i < 100; ++i) {
        Rat alpha = rat(num(rng), den(rng));
        u64 k = 1 + rng() % 30;
        CHECK(binom_rat(alpha, k) == binom_rat(alpha - 1, k) + binom_rat(alpha - 1, k - 1));
    }
}

TEST_CASE("congruent_mod exact examples") {
    Rat x = rat(355, 113);
    auto eq = congruent_mod(x, x, 7, 3);
    CHECK(eq.pass);
    CHECK(eq.achieved.infinite);

    auto w = congruent_mod(rat(49, 20), rat(0), 7, 2);
    CHECK(w.pass);
    CHECK(w.achieved.v == 2);

    auto c = congruent_mod(rat(1, 20), rat(1, 20) + rat(343, 3), 7, 3);
    CHECK(c.pass);
    CHECK(c.achieved.v == 3);

    CHECK_THROWS_AS(congruent_mod(rat(1, 7), rat(0), 7, 1), not_p_integral);
}

TEST_CASE("congruent_mod padic verdicts") {
    const u64 p = 5;
    PAdic a = PAdic::from_rat(rat(2 + 125), p, 5);
    PAdic b = PAdic::from_int(2, p, 5);
    auto v = congruent_mod(a, b, p, 3);
    CHECK(v.pass);
    CHECK(v.achieved.v == 3);
    CHECK(!v.achieved.capped);

    auto same = congruent_mod(a, a, p, 3);
    CHECK(same.pass);
    CHECK(same.achieved.capped);  // zero to working precision, not proven exact
    CHECK(same.achieved.v == 5);

    PAdic tight = PAdic::from_int(7, p, 2);
    CHECK_THROWS_AS(congruent_mod(tight, tight, p, 3), precision_loss);
}

TEST_CASE("pw_u64 overflow guard") {
    CHECK(pw_u64(3, 4) == 81);
    CHECK_THROWS_AS(pw_u64(1000003, 4), config_error);
}

TEST_CASE("deterministic primality") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(97));
    CHECK(is_prime_u64(299993));
    CHECK(!is_prime_u64(1));
    CHECK(!is_prime_u64(561));        // Carmichael
    CHECK(!is_prime_u64(299994));
    CHECK(is_prime_u64(2305843009213693951ull));  // 2^61 - 1
    auto ps = primes_in(5, 30);
    CHECK(ps == std::vector<u64>{5, 7, 11, 13, 17, 19, 23, 29});
}

static_assert(Engine<ExactEngine>);
static_assert(Engine<PadicEngine>);

TEST_CASE("engines share one generic surface") {
    ExactEngine ex{7, 0};
    PadicEngine pd{7, 5};
    auto f = [](const auto& eng) {
        auto x = eng.make(rat(-1, 2));
        auto y = eng.make(3);
        return (x * y - eng.make(1)) / eng.make(rat(5, 4));
    };
    XRat exact = f(ex);
    PAdic fast = f(pd);
    CHECK(exact.q == rat(-2));
    CHECK(fast.residue(4) == residue_mod(rat(-2), pw_u64(7, 4)));
}
