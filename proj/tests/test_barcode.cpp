#include <doctest.h>

#include "cohid/random.hpp"
#include "helpers.hpp"

using namespace cohid;
using testing::bar;
using testing::inf;
using testing::q;
using testing::ray;

TEST_SUITE_BEGIN("barcode");

TEST_CASE("bars reject empty intervals") {
    CHECK_THROWS_AS(bar(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(bar(4, 1), std::invalid_argument);
    CHECK(bar(0, 4).length() == q(4));
    CHECK(ray(2).length().is_infinite());
}

TEST_CASE("interval distance") {
    CHECK(interval_distance(bar(0, 4), std::nullopt) == q(2));
    CHECK(interval_distance(bar(3, 7), bar(0, 7)) == q(3));
    CHECK(interval_distance(ray(2), ray(5)) == q(3));
    CHECK(interval_distance(bar(1, 6), bar(1, 6)) == q(0));
    CHECK(interval_distance(ray(0), bar(1, 2)) == inf);
    CHECK(interval_distance(ray(0), std::nullopt) == inf);
    CHECK(interval_distance(std::nullopt, std::nullopt) == q(0));
    // Matching is cheaper than deleting both.
    CHECK(interval_distance(bar(0, 10), bar(1, 11)) == q(1));
}

TEST_CASE("bottleneck distance") {
    Barcode units{bar(0, 1), bar(1, 2), bar(2, 3), bar(3, 4), bar(4, 5)};
    Barcode whole{bar(0, 5)};
    CHECK(bottleneck_distance(units, whole) == q(2));
    CHECK(bottleneck_distance(units, units) == q(0));
    Barcode m0{bar(0, 4), bar(3, 7)};
    Barcode m1{bar(0, 7), bar(3, 4)};
    CHECK(bottleneck_distance(m0, m1) == q(3));
    CHECK(bottleneck_distance(Barcode{ray(0)}, Barcode{bar(0, 1)}) == inf);
    CHECK(bottleneck_distance(Barcode{}, Barcode{}) == q(0));
    CHECK(bottleneck_distance(Barcode{ray(0), ray(4)}, Barcode{ray(1), ray(2)}) == q(2));
}

TEST_CASE("brute force agrees on the worked examples") {
    Barcode units{bar(0, 1), bar(1, 2), bar(2, 3), bar(3, 4), bar(4, 5)};
    CHECK(bottleneck_bruteforce(units, Barcode{bar(0, 5)}) == q(2));
    CHECK(bottleneck_bruteforce(Barcode{bar(0, 4), bar(3, 7)}, Barcode{bar(0, 7), bar(3, 4)}) == q(3));
    CHECK(bottleneck_bruteforce(Barcode{ray(0)}, Barcode{bar(0, 1)}) == inf);
    Barcode big{bar(0, 1), bar(0, 1), bar(0, 1), bar(0, 1), bar(0, 1)};
    CHECK_THROWS(bottleneck_bruteforce(big, big));
}

TEST_CASE("random pairs agree with brute force") {
    Rng rng(2024);
    int with_inf = 0;
    int half = 0;
    for (int trial = 0; trial < 400; ++trial) {
        Barcode s = random_barcode(rng, 4);
        Barcode t = random_barcode(rng, 4);
        if (s.size() + t.size() > 8) continue;
        auto fast = bottleneck_distance(s, t);
        auto slow = bottleneck_bruteforce(s, t);
        CHECK_MESSAGE(fast == slow, s.str() << " vs " << t.str());
        if (s.has_infinite() || t.has_infinite()) ++with_inf;
        if (fast.is_finite() && !fast.value().is_integer()) ++half;
    }
    CHECK(with_inf > 20);
    CHECK(half > 20);
}

TEST_CASE("interleaving feasibility") {
    Barcode s{bar(0, 4), bar(3, 7)};
    Barcode t{bar(0, 7), bar(3, 4)};
    CHECK(is_interleaved(s, s, Rational(0)));
    CHECK_FALSE(is_interleaved(s, t, Rational(5, 2)));
    CHECK(is_interleaved(s, t, Rational(3)));
    CHECK(is_interleaved(s, t, Rational(100)));
    CHECK_THROWS_AS(is_interleaved(s, t, Rational(-1)), std::invalid_argument);
    CHECK_FALSE(is_interleaved(Barcode{ray(0)}, Barcode{}, Rational(1000)));
}

TEST_CASE("pseudometric axioms on random triples") {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Barcode a = random_barcode(rng, 3), b = random_barcode(rng, 3), c = random_barcode(rng, 3);
        auto ab = bottleneck_distance(a, b);
        CHECK(ab == bottleneck_distance(b, a));
        CHECK(bottleneck_distance(a, a) == q(0));
        CHECK(ab <= bottleneck_distance(a, c) + bottleneck_distance(c, b));
    }
}

TEST_CASE("multiset equality ignores order") {
    CHECK(Barcode{bar(0, 2), bar(1, 3)} == Barcode{bar(1, 3), bar(0, 2)});
    CHECK_FALSE(Barcode{bar(0, 2), bar(0, 2)} == Barcode{bar(0, 2)});
    CHECK(Barcode{bar(3, 7), bar(0, 4)}.str() == "[0,4) [3,7)");
    CHECK(Barcode{}.str() == "(empty)");
    CHECK(Barcode{ray(2)}.str() == "[2,inf)");
}

TEST_SUITE_END();
