#include <doctest.h>

#include <cmath>
#include <complex>

#include "bchlab/characters.hpp"
#include "bchlab/cycint.hpp"
#include "bchlab/field_ctx.hpp"

using namespace bchlab;

namespace {

CycInt sample(std::uint32_t p, std::int64_t seed)
{
    CycInt x(p);
    for (std::uint32_t k = 0; k < p; ++k) {
        x += CycInt::zeta_power(p, k) * (((seed * 31 + k * 17) % 11) - 5);
    }
    return x;
}

bool close(std::complex<long double> a, std::complex<long double> b)
{
    return std::abs(a - b) < 1e-9L * (1 + std::abs(a));
}

} // namespace

TEST_CASE("ring operations agree with complex evaluation")
{
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
        for (std::int64_t s = 0; s < 12; ++s) {
            const CycInt a = sample(p, s);
            const CycInt b = sample(p, s + 5);
            CHECK(close((a + b).to_complex(), a.to_complex() + b.to_complex()));
            CHECK(close((a - b).to_complex(), a.to_complex() - b.to_complex()));
            CHECK(close((a * b).to_complex(), a.to_complex() * b.to_complex()));
            CHECK(close(a.conj().to_complex(), std::conj(a.to_complex())));
            CHECK(a * b == b * a);
            CHECK((a + b) * a == a * a + b * a);
        }
    }
}

TEST_CASE("roots of unity and normal form")
{
    for (std::uint32_t p : {3u, 5u, 7u}) {
        CHECK(CycInt::zeta_power(p, p) == CycInt::integer(p, 1));
        CHECK(CycInt::zeta_power(p, -1) == CycInt::zeta_power(p, p - 1));
        // 1 + zeta + ... + zeta^{p-1} = 0
        std::vector<std::int64_t> ones(p, 1);
        CHECK(CycInt::from_counts(p, ones).is_zero());
        CHECK(CycInt::integer(p, -4).as_integer().value() == -4);
        CHECK_FALSE(CycInt::zeta_power(p, 1).as_integer().has_value());
    }
}

TEST_CASE("quadratic Gauss sums square to eta(-1) q")
{
    for (auto [p, s] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {3, 2}, {5, 2}, {3, 3}, {7, 2}}) {
        const FieldCtx ctx = build_field_ctx(p, s, 1);
        const CycInt g = gaussian_sum_numeric(ctx.sub());
        const std::int64_t q = static_cast<std::int64_t>(ctx.q());
        const std::int64_t eta_m1 = (q % 4 == 1) ? 1 : -1;
        CHECK((g * g).as_integer().value() == eta_m1 * q);
        CHECK(closed_form_matches(gaussian_sum_closed(p, s), g));
        CHECK(std::abs(std::abs(g.to_complex()) - std::sqrt(static_cast<long double>(q))) < 1e-9L);
    }
}

TEST_CASE("sum of eta(y^r) over nonzero y")
{
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const FieldCtx ctx = build_field_ctx(p, 1, 1);
        const auto& F = ctx.sub();
        for (std::uint64_t r = 0; r < 7; ++r) {
            std::int64_t sum = 0;
            for (std::uint32_t l = 1; l < p; ++l) {
                sum += ctx.quadratic_character(F.pow(F.from_label(l), r));
            }
            CHECK(eta_power_sum(F, r) == sum);
            CHECK(sum == (r % 2 == 0 ? static_cast<std::int64_t>(p) - 1 : 0));
        }
    }
}

TEST_CASE("Gauss identity for quadratic polynomials")
{
    const FieldCtx ctx = build_field_ctx(5, 1, 1);
    for (std::uint32_t l = 1; l < 5; ++l) {
        CHECK(quadratic_gauss_identity_check(ctx.sub(), ctx.sub().from_label(l)));
    }
}
