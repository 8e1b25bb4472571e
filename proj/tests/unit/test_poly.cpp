#include <doctest.h>

#include "bchlab/cosets.hpp"
#include "bchlab/error.hpp"
#include "bchlab/field_ctx.hpp"
#include "bchlab/poly.hpp"

using namespace bchlab;

namespace {

Poly make(const Subfield& F, std::uint32_t seed, std::size_t deg)
{
    std::vector<std::uint32_t> labels(deg + 1);
    for (std::size_t i = 0; i <= deg; ++i) {
        labels[i] = static_cast<std::uint32_t>((seed * 7 + i * 13 + i * i) % F.order());
    }
    labels[deg] = 1 + labels[deg] % (F.order() - 1);
    return Poly::from_labels(F, labels);
}

// g(theta^j) in GF(q^m)
Fqm eval_ext(const FieldCtx& ctx, const Poly& g, Fqm x)
{
    Fqm acc = Fqm::zero();
    for (long i = g.degree(); i >= 0; --i) {
        acc = ctx.ext().add(ctx.ext().mul(acc, x), ctx.embed(g.coeff(static_cast<std::size_t>(i))));
    }
    return acc;
}

} // namespace

TEST_CASE("division with remainder")
{
    for (auto [p, s] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        const FieldCtx ctx = build_field_ctx(p, s, 1);
        const auto& F = ctx.sub();
        for (std::uint32_t seed = 0; seed < 20; ++seed) {
            const Poly a = make(F, seed, 3 + seed % 6);
            const Poly b = make(F, seed + 3, 1 + seed % 4);
            const auto [quot, rem] = poly_divmod(F, a, b);
            CHECK(poly_add(F, poly_mul(F, quot, b), rem) == a);
            CHECK(rem.degree() < b.degree());
            const Poly g = poly_gcd(F, a, b);
            CHECK(poly_mod(F, a, g).is_zero());
            CHECK(poly_mod(F, b, g).is_zero());
            CHECK(g.leading() == F.one());
            const Poly l = poly_lcm(F, a, b);
            CHECK(poly_mod(F, l, poly_monic(F, a)).is_zero());
            CHECK(poly_mod(F, l, poly_monic(F, b)).is_zero());
            CHECK(poly_sub(F, a, a).is_zero());
        }
        CHECK_THROWS_AS(poly_divmod(F, make(F, 1, 2), Poly()), Error);
    }
}

TEST_CASE("evaluation is a ring homomorphism")
{
    const FieldCtx ctx = build_field_ctx(3, 1, 1);
    const auto& F = ctx.sub();
    const Poly a = make(F, 4, 5);
    const Poly b = make(F, 9, 3);
    for (std::uint32_t l = 0; l < 3; ++l) {
        const Fq x = F.from_label(l);
        CHECK(poly_eval(F, poly_mul(F, a, b), x) == F.mul(poly_eval(F, a, x), poly_eval(F, b, x)));
        CHECK(poly_eval(F, poly_add(F, a, b), x) == F.add(poly_eval(F, a, x), poly_eval(F, b, x)));
    }
}

TEST_CASE("minimal polynomials factor x^n - 1")
{
    for (auto [q, m, lambda] : std::vector<std::tuple<std::uint64_t, std::uint32_t, std::uint64_t>>{
             {3, 3, 2}, {3, 4, 2}, {2, 4, 1}, {4, 3, 3}, {5, 2, 4}, {7, 2, 2}, {9, 2, 4}}) {
        const FieldCtx ctx = build_field_ctx_q(q, m);
        const auto& F = ctx.sub();
        CosetSpace space(q, m, lambda);
        const std::uint64_t n = space.n();
        const Fqm theta = ctx.alpha_pow(lambda);
        Poly prod = Poly::constant(F.one());
        for (const auto& rec : all_leaders(space, true)) {
            const Poly mp = minimal_polynomial(ctx, n, rec.leader);
            CHECK(mp.degree() == static_cast<long>(rec.size));
            CHECK(mp.leading() == F.one());
            for (auto j : rec.members) {
                CHECK(eval_ext(ctx, mp, ctx.ext().pow(theta, j)).is_zero());
            }
            CHECK(poly_from_roots(ctx, n, rec.members) == mp);
            prod = poly_mul(F, prod, mp);
        }
        CHECK(prod == x_pow_minus_one(F, n));
    }
}

TEST_CASE("parity check polynomial")
{
    const FieldCtx ctx = build_field_ctx_q(3, 3);
    const auto& F = ctx.sub();
    const Poly g = poly_mul(F, minimal_polynomial(ctx, 13, 1), minimal_polynomial(ctx, 13, 2));
    const Poly h = parity_check(ctx, 13, g);
    CHECK(poly_mul(F, g, h) == x_pow_minus_one(F, 13));
    CHECK(h.degree() == 13 - g.degree());
}

TEST_CASE("labels round trip and trailing zeros are trimmed")
{
    const FieldCtx ctx = build_field_ctx_q(4, 1);
    const auto& F = ctx.sub();
    const Poly a = Poly::from_labels(F, {1, 2, 3, 0, 0});
    CHECK(a.degree() == 2);
    CHECK(a.labels(F) == std::vector<std::uint32_t>{1, 2, 3});
    CHECK(Poly::from_labels(F, {0, 0}).is_zero());
    CHECK(Poly().degree() == -1);
}
