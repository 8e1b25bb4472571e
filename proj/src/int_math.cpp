#include "bchlab/int_math.hpp"

#include <numeric>
#include <string>

#include "bchlab/error.hpp"

namespace bchlab {

const char* errc_name(Errc code)
{
    switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::SizeExceeded: return "SizeExceeded";
    case Errc::NoPrimitivePolyFound: return "NoPrimitivePolyFound";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::EvenPrime: return "EvenPrime";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::CoefficientNotInSubfield: return "CoefficientNotInSubfield";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::OddM: return "OddM";
    case Errc::EvenQ: return "EvenQ";
    case Errc::MTooSmallForDelta3: return "MTooSmallForDelta3";
    case Errc::UnsupportedResidue: return "UnsupportedResidue";
    case Errc::QTooSmall: return "QTooSmall";
    case Errc::BadDelta: return "BadDelta";
    case Errc::OutOfProvenRange: return "OutOfProvenRange";
    case Errc::LambdaOne: return "LambdaOne";
    case Errc::KindParityMismatch: return "KindParityMismatch";
    case Errc::UnsupportedParams: return "UnsupportedParams";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

std::uint64_t ipow(std::uint64_t base, unsigned exp)
{
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) {
            throw Error(Errc::SizeExceeded, std::to_string(base) + "^" + std::to_string(exp) + " overflows");
        }
        r *= base;
    }
    return r;
}

BigInt big_pow(std::uint64_t base, unsigned exp)
{
    BigInt r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        r *= base;
    }
    return r;
}

bool is_prime(std::uint64_t n)
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

std::optional<PrimePower> as_prime_power(std::uint64_t q)
{
    if (q < 2) {
        return std::nullopt;
    }
    std::uint64_t p = 2;
    while (q % p != 0) {
        ++p;
    }
    std::uint32_t s = 0;
    while (q % p == 0) {
        q /= p;
        ++s;
    }
    if (q != 1) {
        return std::nullopt;
    }
    return PrimePower{static_cast<std::uint32_t>(p), s};
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t n)
{
    std::uint64_t r = 1 % n;
    a %= n;
    while (e > 0) {
        if (e & 1) {
            r = mul_mod(r, a, n);
        }
        a = mul_mod(a, a, n);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce_mod(std::int64_t a, std::uint64_t n)
{
    if (a >= 0) {
        return static_cast<std::uint64_t>(a) % n;
    }
    std::uint64_t r = static_cast<std::uint64_t>(-(a + 1)) % n;
    return n - 1 - r;
}

std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t n)
{
    if (n == 1) {
        return 1;
    }
    if (std::gcd(q, n) != 1) {
        return 0;
    }
    std::uint64_t t = 1;
    std::uint64_t x = q % n;
    while (x != 1) {
        x = mul_mod(x, q, n);
        ++t;
    }
    return t;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n)
{
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(a % n);
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) {
        throw Error(Errc::InvalidArgument, "no inverse of " + std::to_string(a) + " mod " + std::to_string(n));
    }
    return reduce_mod(t, n);
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b)
{
    return (a + b - 1) / b;
}

} // namespace bchlab
