#include <doctest.h>

#include <set>

#include "bchlab/error.hpp"
#include "bchlab/quadform.hpp"

using namespace bchlab;

namespace {

// sum over all x of zeta^{Tr_p(y Q(x))}, straight from the definition
CycInt naive_sum(const FieldCtx& ctx, const QuadFormSpec& spec, Fq y)
{
    std::vector<std::int64_t> counts(ctx.p(), 0);
    for (std::uint32_t label = 0; label < ctx.qm(); ++label) {
        const Fqm x = ctx.ext().from_label(label);
        ++counts[ctx.trace_to_prime(ctx.sub().mul(y, evaluate_form(ctx, spec, x)))];
    }
    return CycInt::from_counts(ctx.p(), counts);
}

QuadFormSpec spec_at(const FieldCtx& ctx, const PairTable& t, std::uint64_t ia, std::uint64_t ib)
{
    return {t.kind, pair_a(ctx, t.kind, ia), pair_b(ctx, ib)};
}

PairTable table_for(const FieldCtx& ctx, unsigned threads = 1)
{
    PairOptions opts;
    opts.threads = threads;
    opts.max_qm = 5000;
    return t_pair_table(ctx, opts);
}

} // namespace

TEST_CASE("zero form")
{
    for (std::uint32_t m : {3, 4}) {
        const FieldCtx ctx = build_field_ctx_q(3, m);
        const QuadFormSpec zero{form_kind_for(m), Fqm::zero(), Fqm::zero()};
        CHECK(quadratic_form_rank(ctx, zero) == 0);
        CHECK(exponential_sum(ctx, zero) == CycInt::integer(3, static_cast<std::int64_t>(ctx.qm())));
    }
    CHECK(form_kind_for(5) == FormKind::OddM);
    CHECK(form_kind_for(6) == FormKind::EvenM);
}

TEST_CASE("linearized rank agrees with the Gram matrix rank")
{
    for (auto [q, m] : {std::pair<std::uint64_t, std::uint32_t>{3, 3}, {5, 3}, {3, 4}, {9, 2}, {3, 5}}) {
        const FieldCtx ctx = build_field_ctx_q(q, m);
        const auto t = table_for(ctx);
        const std::uint64_t stride = t.a_count * t.b_count > 4000 ? 37 : 1;
        for (std::uint64_t idx = 0; idx < t.a_count * t.b_count; idx += stride) {
            const auto spec = spec_at(ctx, t, idx / t.b_count, idx % t.b_count);
            const auto r = quadratic_form_rank(ctx, spec);
            CHECK(r == quadratic_form_rank_bilinear(ctx, spec));
            CHECK(r == t.ranks[idx]);
        }
    }
}

TEST_CASE("rank sets")
{
    for (std::uint32_t m : {3, 5}) {
        const FieldCtx ctx = build_field_ctx_q(3, m);
        const auto t = table_for(ctx);
        const std::set<std::uint32_t> seen(t.ranks.begin(), t.ranks.end());
        CHECK(seen == std::set<std::uint32_t>{0, m - 2, m - 1, m});
    }
}

TEST_CASE("exponential sums match the definition")
{
    for (auto [q, m] : {std::pair<std::uint64_t, std::uint32_t>{3, 3}, {5, 3}, {3, 4}, {9, 3}}) {
        const FieldCtx ctx = build_field_ctx_q(q, m);
        const auto t = table_for(ctx);
        const std::uint64_t stride = t.a_count * t.b_count > 2000 ? 401 : 3;
        for (std::uint64_t idx = 0; idx < t.a_count * t.b_count; idx += stride) {
            const auto spec = spec_at(ctx, t, idx / t.b_count, idx % t.b_count);
            const auto value = naive_sum(ctx, spec, ctx.sub().one());
            CHECK(value == t.values[idx]);
            CHECK(value == exponential_sum(ctx, spec));
            const Fq y = ctx.sub().from_label(2);
            CHECK(naive_sum(ctx, spec, y) == exponential_sum(ctx, spec, y));
        }
    }
}

TEST_CASE("square of an exponential sum")
{
    for (auto [q, m] : {std::pair<std::uint64_t, std::uint32_t>{3, 3}, {5, 3}, {3, 4}, {7, 3}, {3, 5}}) {
        const FieldCtx ctx = build_field_ctx_q(q, m);
        const auto t = table_for(ctx);
        const std::int64_t eta_m1 = ctx.quadratic_character(ctx.sub().neg(ctx.sub().one()));
        for (std::size_t i = 0; i < t.values.size(); ++i) {
            const std::uint32_t r = t.ranks[i];
            BigInt expected = 1;
            for (std::uint32_t j = 0; j < r; ++j) {
                expected *= eta_m1 * static_cast<std::int64_t>(q);
            }
            for (std::uint32_t j = r; j < m; ++j) {
                expected *= static_cast<std::int64_t>(q * q);
            }
            const auto sq = (t.values[i] * t.values[i]).as_integer();
            REQUIRE(sq.has_value());
            CHECK(BigInt(*sq) == expected);
            CHECK(t.values[i].as_integer().has_value() == (r % 2 == 0));
        }
    }
}

TEST_CASE("sign twist by a nonsquare")
{
    for (auto [q, m] : {std::pair<std::uint64_t, std::uint32_t>{3, 3}, {5, 3}, {3, 4}, {5, 4}}) {
        const FieldCtx ctx = build_field_ctx_q(q, m);
        const auto t = table_for(ctx);
        for (std::uint64_t idx = 1; idx < t.a_count * t.b_count; idx += 17) {
            const auto spec = spec_at(ctx, t, idx / t.b_count, idx % t.b_count);
            for (std::uint32_t y = 1; y < q; ++y) {
                CHECK(eta_twist_check(ctx, spec, ctx.sub().from_label(y)));
            }
        }
    }
}

TEST_CASE("value distribution: enumeration, closed form, moments, side conditions")
{
    for (auto [q, m] : {std::pair<std::uint64_t, std::uint32_t>{3, 3}, {5, 3}, {3, 4}, {5, 4}, {7, 3}, {3, 5}}) {
        const FieldCtx ctx = build_field_ctx_q(q, m);
        const auto t = table_for(ctx, 2);
        const auto dist = t_distribution(t);
        CHECK_MESSAGE(dist == t_distribution_closed(ctx), "q=", q, " m=", m);
        CHECK(dist == t_distribution(t_pair_table(ctx, {1, 5000})));
        CHECK(dist.total() == BigInt(t.a_count * t.b_count));
        if (m % 2 == 1) {
            for (const auto& mc : t_moment_check(ctx, t)) {
                CHECK_MESSAGE(mc.ok, mc.name);
            }
            CHECK(value_side_conditions(ctx, dist).ok);
        } else {
            CHECK_THROWS_AS(t_moment_check(ctx, t), Error);
        }
        const auto wf = weight_formula_check(ctx, t, 2);
        CHECK(wf.ok());
        CHECK(wf.pairs == t.a_count * t.b_count - 1);  // the zero pair is skipped
    }
}

TEST_CASE("pair indexing")
{
    const FieldCtx ctx = build_field_ctx_q(3, 3);
    for (std::uint64_t ib = 0; ib < ctx.qm(); ++ib) {
        CHECK(pair_index_of(ctx, pair_b(ctx, ib)) == ib);
    }
}

TEST_CASE("pair table limits")
{
    PairOptions small;
    small.max_qm = 30;
    CHECK_THROWS_AS(t_pair_table(build_field_ctx_q(3, 4), small), Error);
    CHECK_THROWS_AS(t_pair_table(build_field_ctx_q(3, 1)), Error);
    CHECK_THROWS_AS(t_pair_table(build_field_ctx_q(4, 3)), Error);
}
