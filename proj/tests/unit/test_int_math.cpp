#include <doctest.h>

#include "bchlab/error.hpp"
#include "bchlab/int_math.hpp"

using namespace bchlab;

namespace {

bool naive_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("ipow matches repeated multiplication and rejects overflow")
{
    for (std::uint64_t b = 0; b < 12; ++b) {
        std::uint64_t v = 1;
        for (unsigned e = 0; e < 12; ++e) {
            CHECK(ipow(b, e) == v);
            v *= b;
        }
    }
    CHECK(ipow(2, 63) == (1ull << 63));
    CHECK_THROWS_AS(ipow(2, 64), Error);
    CHECK(big_pow(3, 50) == BigInt("717897987691852588770249"));
}

TEST_CASE("primality and prime powers against trial division")
{
    for (std::uint64_t n = 0; n < 3000; ++n) {
        CHECK(is_prime(n) == naive_prime(n));
    }
    for (std::uint64_t q = 2; q < 600; ++q) {
        std::optional<PrimePower> expect;
        for (std::uint32_t p = 2; p <= q && !expect; ++p) {
            if (!naive_prime(p)) {
                continue;
            }
            std::uint64_t v = p;
            std::uint32_t s = 1;
            while (v < q) {
                v *= p;
                ++s;
            }
            if (v == q) {
                expect = PrimePower{p, s};
            }
        }
        const auto got = as_prime_power(q);
        REQUIRE(got.has_value() == expect.has_value());
        if (got) {
            CHECK(got->p == expect->p);
            CHECK(got->s == expect->s);
        }
    }
}

TEST_CASE("modular helpers against brute force")
{
    for (std::uint64_t n = 2; n < 60; ++n) {
        for (std::uint64_t a = 0; a < n; ++a) {
            std::uint64_t acc = 1 % n;
            for (std::uint64_t e = 0; e < 10; ++e) {
                CHECK(pow_mod(a, e, n) == acc);
                acc = acc * a % n;
            }
            std::uint64_t g = n;
            for (std::uint64_t t = a; t != 0;) {
                const std::uint64_t r = g % t;
                g = t;
                t = r;
            }
            if (g == 1) {
                CHECK(inverse_mod(a, n) * a % n == 1);
                std::uint64_t t = 1;
                std::uint64_t x = a % n;
                while (x != 1 % n) {
                    x = x * a % n;
                    ++t;
                }
                CHECK(multiplicative_order(a, n) == t);
            } else {
                CHECK(multiplicative_order(a, n) == 0);
            }
        }
    }
    CHECK(reduce_mod(-1, 13) == 12);
    CHECK(reduce_mod(-27, 13) == 12);
    CHECK(reduce_mod(40, 13) == 1);
    CHECK(ceil_div(7, 3) == 3);
    CHECK(ceil_div(6, 3) == 2);
    CHECK(mul_mod(1ull << 62, 6, (1ull << 62) + 1) == ((1ull << 62) + 1) - 6);
}

TEST_CASE("prime factors are the distinct primes, ascending")
{
    CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(prime_factors(728) == std::vector<std::uint64_t>{2, 7, 13});
    CHECK(prime_factors(97) == std::vector<std::uint64_t>{97});
}
