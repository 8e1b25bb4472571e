#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bchlab {

using BigInt = boost::multiprecision::cpp_int;

// Throws SizeExceeded on 64-bit overflow.
std::uint64_t ipow(std::uint64_t base, unsigned exp);
BigInt big_pow(std::uint64_t base, unsigned exp);

bool is_prime(std::uint64_t n);

struct PrimePower {
    std::uint32_t p = 0;
    std::uint32_t s = 0;
};
std::optional<PrimePower> as_prime_power(std::uint64_t q);

std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t n);

// [a]_n: the representative of a in [0, n).
std::uint64_t reduce_mod(std::int64_t a, std::uint64_t n);

// Smallest t >= 1 with q^t = 1 mod n, or 0 if gcd(q, n) != 1.
std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t n);

// Inverse of a modulo n; requires gcd(a, n) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n);

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b);

} // namespace bchlab
