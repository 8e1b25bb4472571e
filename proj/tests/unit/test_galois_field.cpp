#include <doctest.h>

#include <vector>

#include "bchlab/error.hpp"
#include "bchlab/field_ctx.hpp"
#include "bchlab/galois_field.hpp"
#include "bchlab/int_math.hpp"

using namespace bchlab;

namespace {

using Digits = std::vector<std::uint32_t>;

Digits to_digits(std::uint32_t label, std::uint32_t p, std::uint32_t d)
{
    Digits out(d);
    for (auto& v : out) {
        v = label % p;
        label /= p;
    }
    return out;
}

std::uint32_t from_digits(const Digits& ds, std::uint32_t p)
{
    std::uint32_t v = 0;
    for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
        v = v * p + *it;
    }
    return v;
}

// Schoolbook product modulo the monic defining polynomial.
std::uint32_t naive_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p, const Digits& poly)
{
    const std::uint32_t d = static_cast<std::uint32_t>(poly.size()) - 1;
    const Digits x = to_digits(a, p, d);
    const Digits y = to_digits(b, p, d);
    Digits prod(2 * d, 0);
    for (std::uint32_t i = 0; i < d; ++i) {
        for (std::uint32_t j = 0; j < d; ++j) {
            prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
        }
    }
    for (std::uint32_t k = 2 * d - 1; k >= d; --k) {
        const std::uint32_t c = prod[k];
        if (c != 0) {
            for (std::uint32_t t = 0; t <= d; ++t) {
                prod[k - d + t] = (prod[k - d + t] + (p - c) * poly[t]) % p;
            }
        }
        if (k == d) {
            break;
        }
    }
    prod.resize(d);
    return from_digits(prod, p);
}

struct Shape {
    std::uint32_t p;
    std::uint32_t d;
};

const std::vector<Shape> kShapes = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 6}, {3, 1}, {3, 2}, {3, 3},
                                    {3, 4}, {5, 1}, {5, 2}, {5, 3}, {7, 1}, {7, 2}, {11, 1}, {13, 2}};

} // namespace

TEST_CASE("primitive polynomials generate the full multiplicative group")
{
    for (const auto& sh : kShapes) {
        const auto poly = find_primitive_polynomial(sh.p, sh.d);
        REQUIRE(poly.size() == sh.d + 1);
        CHECK(poly.back() == 1);
        const std::uint32_t order = static_cast<std::uint32_t>(ipow(sh.p, sh.d)) - 1;
        const std::uint32_t x = sh.d == 1 ? (sh.p - poly[0]) % sh.p : sh.p;
        std::uint32_t cur = 1;
        for (std::uint32_t e = 1; e <= order; ++e) {
            cur = naive_mul(cur, x, sh.p, poly);
            if (e < order) {
                CHECK(cur != 1);
            }
        }
        CHECK(cur == 1);
    }
}

TEST_CASE("Zech arithmetic matches polynomial-basis arithmetic")
{
    for (const auto& sh : kShapes) {
        const auto poly = find_primitive_polynomial(sh.p, sh.d);
        const ExtensionField F(sh.p, sh.d, poly);
        const std::uint32_t order = F.order();
        REQUIRE(order == ipow(sh.p, sh.d));
        for (std::uint32_t a = 0; a < order; ++a) {
            CHECK(F.label(F.from_label(a)) == a);
            for (std::uint32_t b = 0; b < order; b += (order > 64 ? 7 : 1)) {
                const auto x = F.from_label(a);
                const auto y = F.from_label(b);
                Digits s = to_digits(a, sh.p, sh.d);
                const Digits t = to_digits(b, sh.p, sh.d);
                for (std::uint32_t i = 0; i < sh.d; ++i) {
                    s[i] = (s[i] + t[i]) % sh.p;
                }
                CHECK(F.label(F.add(x, y)) == from_digits(s, sh.p));
                CHECK(F.label(F.mul(x, y)) == naive_mul(a, b, sh.p, poly));
                CHECK(F.add(F.sub(x, y), y) == x);
            }
            const auto x = F.from_label(a);
            CHECK(F.add(x, F.neg(x)).is_zero());
            if (a != 0) {
                CHECK(F.mul(x, F.inv(x)) == F.one());
                CHECK(F.pow(x, order - 1) == F.one());
            }
        }
    }
}

TEST_CASE("prime subfield embedding and absolute trace")
{
    const ExtensionField F(3, 3, find_primitive_polynomial(3, 3));
    for (std::int64_t v = -4; v < 7; ++v) {
        const auto e = F.from_int(v);
        CHECK(F.prime_value(e).value() == static_cast<std::uint32_t>(reduce_mod(v, 3)));
    }
    // Tr(x) = x + x^3 + x^9, landing in GF(3)
    for (std::uint32_t l = 0; l < 27; ++l) {
        const auto x = F.from_label(l);
        const auto t = F.add(F.add(x, F.pow(x, 3)), F.pow(x, 9));
        CHECK(F.prime_value(t).value() == F.absolute_trace(x));
    }
}

TEST_CASE("FieldCtx embeds GF(q) and computes traces")
{
    for (auto [p, s, m] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
             {3, 1, 3}, {3, 1, 4}, {2, 2, 3}, {5, 1, 2}, {3, 2, 2}, {2, 3, 2}, {7, 1, 3}, {2, 2, 4}}) {
        const FieldCtx ctx = build_field_ctx(p, s, m);
        const auto& E = ctx.ext();
        const auto& F = ctx.sub();
        const std::uint64_t q = ctx.q();
        CHECK(ctx.qm() == ipow(q, m));
        CHECK(ctx.subfield_stride() == (ctx.qm() - 1) / (q - 1));
        for (std::uint32_t l = 0; l < q; ++l) {
            const Fq a = F.from_label(l);
            const Fqm x = ctx.embed(a);
            CHECK(ctx.frobenius(x, 1) == x);
            CHECK(ctx.descend(x).value() == a);
            for (std::uint32_t l2 = 0; l2 < q; ++l2) {
                const Fq b = F.from_label(l2);
                CHECK(ctx.embed(F.add(a, b)) == E.add(x, ctx.embed(b)));
                CHECK(ctx.embed(F.mul(a, b)) == E.mul(x, ctx.embed(b)));
            }
        }
        for (std::uint64_t e = 0; e < ctx.qm() - 1; e += 1 + ctx.qm() / 200) {
            const Fqm x = ctx.alpha_pow(e);
            // Tr as the sum of conjugates
            Fqm sum = Fqm::zero();
            Fqm c = x;
            for (std::uint32_t i = 0; i < m; ++i) {
                sum = E.add(sum, c);
                c = E.pow(c, q);
            }
            CHECK(c == x);
            CHECK(ctx.descend(sum).value() == ctx.trace(x));
            CHECK(ctx.trace_to_prime(x) == ctx.trace_to_prime(ctx.trace(x)));
            CHECK(ctx.frobenius(x, 1) == E.pow(x, q));
            // Tr_q^{q^m} = Tr_q^{q^d} o Tr_{q^d}^{q^m}
            for (std::uint32_t d = 1; d <= m; ++d) {
                if (m % d != 0) {
                    continue;
                }
                Fqm inner = Fqm::zero();
                for (std::uint32_t i = 0; i < m / d; ++i) {
                    inner = E.add(inner, ctx.frobenius(x, d * i));
                }
                CHECK(ctx.in_subfield(inner, d));
                CHECK(ctx.descend(ctx.relative_trace(inner, d)).value() == ctx.trace(x));
            }
        }
        if (p != 2) {
            for (std::uint32_t l = 1; l < q; ++l) {
                const Fq a = F.from_label(l);
                const Fq r = F.pow(a, (q - 1) / 2);
                CHECK(ctx.quadratic_character(a) == (r == F.one() ? 1 : -1));
            }
        }
    }
}

TEST_CASE("trace is GF(q)-linear and onto")
{
    const FieldCtx ctx = build_field_ctx(3, 1, 4);
    const auto& E = ctx.ext();
    const auto& F = ctx.sub();
    std::vector<std::uint64_t> hits(3, 0);
    for (std::uint64_t l = 0; l < ctx.qm(); ++l) {
        const Fqm x = E.from_label(static_cast<std::uint32_t>(l));
        ++hits[F.label(ctx.trace(x))];
        const Fqm y = E.from_label(static_cast<std::uint32_t>((l * 7 + 5) % ctx.qm()));
        CHECK(ctx.trace(E.add(x, y)) == F.add(ctx.trace(x), ctx.trace(y)));
        const Fq c = F.from_label(2);
        CHECK(ctx.trace(E.mul(ctx.embed(c), x)) == F.mul(c, ctx.trace(x)));
    }
    CHECK(hits == std::vector<std::uint64_t>{27, 27, 27});
}

TEST_CASE("a different primitive polynomial gives a different but valid field")
{
    FieldOptions alt;
    alt.ext_poly_index = 1;
    const FieldCtx a = build_field_ctx(3, 1, 3);
    const FieldCtx b = build_field_ctx(3, 1, 3, alt);
    CHECK(a.ext().primitive_polynomial() != b.ext().primitive_polynomial());
    CHECK(b.ext().order() == 27);
}

TEST_CASE("field construction rejects bad parameters")
{
    CHECK_THROWS_AS(build_field_ctx(4, 1, 2), Error);
    CHECK_THROWS_AS(build_field_ctx_q(6, 2), Error);
    FieldOptions tiny;
    tiny.max_order = 100;
    CHECK_THROWS_AS(build_field_ctx(3, 1, 5, tiny), Error);
}
