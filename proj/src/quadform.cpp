#include "bchlab/quadform.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <utility>

#include "bchlab/characters.hpp"
#include "bchlab/error.hpp"
#include "bchlab/linear_code.hpp"

namespace bchlab {

namespace {

std::uint64_t group_of(const FieldCtx& ctx) { return ctx.qm() - 1; }

std::uint64_t half_stride(const FieldCtx& ctx)
{
    return group_of(ctx) / (ipow(ctx.q(), ctx.m() / 2) - 1);
}

void require_odd_q(const FieldCtx& ctx)
{
    if (ctx.p() == 2) {
        throw Error(Errc::EvenCharacteristic, "quadratic-form machinery needs odd q");
    }
}

void require_kind(const FieldCtx& ctx, FormKind kind)
{
    if (form_kind_for(ctx.m()) != kind) {
        throw Error(Errc::KindParityMismatch, "form kind does not match the parity of m");
    }
}

// Exponents of x in the two terms.
std::pair<std::uint64_t, std::uint64_t> form_exponents(const FieldCtx& ctx, FormKind kind)
{
    const std::uint64_t q = ctx.q();
    const std::uint32_t m = ctx.m();
    if (kind == FormKind::OddM) {
        return {ipow(q, (m - 1) / 2) + 1, ipow(q, (m - 3) / 2) + 1};
    }
    return {ipow(q, m / 2) + 1, ipow(q, m / 2 - 1) + 1};
}

// Label lookups shared by the pair enumerations.
struct FormTables {
    FormKind kind;
    std::uint64_t group;
    std::uint64_t e1, e2;
    SmallFieldTables T;
    std::vector<std::uint8_t> tr_full;  // Tr_q^{q^m}(alpha^e) by e
    std::vector<std::uint8_t> tr_half;  // Tr_q^{q^h}(alpha^e) for e in GF(q^h)
    std::vector<std::uint8_t> tr_prime; // Tr_p^q by subfield label
    std::vector<std::uint64_t> e1t, e2t;

    FormTables(const FieldCtx& ctx, FormKind k) : kind(k), group(group_of(ctx)), T(ctx.sub())
    {
        std::tie(e1, e2) = form_exponents(ctx, k);
        const auto& F = ctx.sub();
        tr_full.resize(group);
        for (std::uint64_t e = 0; e < group; ++e) {
            tr_full[e] = static_cast<std::uint8_t>(F.label(ctx.trace(ctx.alpha_pow(e))));
        }
        if (k == FormKind::EvenM) {
            tr_half.assign(group, 0);
            const std::uint64_t st = half_stride(ctx);
            for (std::uint64_t e = 0; e < group; e += st) {
                tr_half[e] = static_cast<std::uint8_t>(F.label(*ctx.descend(ctx.relative_trace(ctx.alpha_pow(e), ctx.m() / 2))));
            }
        }
        tr_prime.resize(ctx.q());
        for (std::uint32_t l = 0; l < ctx.q(); ++l) {
            tr_prime[l] = static_cast<std::uint8_t>(ctx.trace_to_prime(F.from_label(l)));
        }
        e1t.resize(group);
        e2t.resize(group);
        for (std::uint64_t t = 0; t < group; ++t) {
            e1t[t] = mul_mod(e1, t, group);
            e2t[t] = mul_mod(e2, t, group);
        }
    }

    // Label of Q(alpha^t).
    std::uint8_t form_at(Fqm a, Fqm b, std::uint64_t t) const
    {
        std::uint8_t l1 = 0;
        std::uint8_t l2 = 0;
        if (!a.is_zero()) {
            std::uint64_t e = a.exponent() + e1t[t];
            e = e >= group ? e - group : e;
            l1 = kind == FormKind::OddM ? tr_full[e] : tr_half[e];
        }
        if (!b.is_zero()) {
            std::uint64_t e = b.exponent() + e2t[t];
            e = e >= group ? e - group : e;
            l2 = tr_full[e];
        }
        return T.add(l1, l2);
    }

    CycInt sum(std::uint32_t p, Fqm a, Fqm b, std::uint8_t y) const
    {
        std::vector<std::int64_t> counts(p, 0);
        counts[0] = 1;  // x = 0
        for (std::uint64_t t = 0; t < group; ++t) {
            ++counts[tr_prime[T.mul(y, form_at(a, b, t))]];
        }
        return CycInt::from_counts(p, counts);
    }
};

std::uint32_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p)
{
    std::uint32_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) {
            ++piv;
        }
        if (piv == rows.size()) {
            continue;
        }
        std::swap(rows[piv], rows[rank]);
        const std::uint64_t inv = inverse_mod(rows[rank][c], p);
        for (auto& v : rows[rank]) {
            v = static_cast<std::uint32_t>(v * inv % p);
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) {
                continue;
            }
            const std::uint64_t f = rows[r][c];
            for (std::size_t j = 0; j < cols; ++j) {
                rows[r][j] = static_cast<std::uint32_t>((rows[r][j] + (p - f) * rows[rank][j]) % p);
            }
        }
        ++rank;
    }
    return rank;
}

bool cyc_less(const CycInt& a, const CycInt& b) { return a.coefficients() < b.coefficients(); }

CycInt big_cyc(std::uint32_t p, const BigInt& v) { return CycInt::integer(p, v.convert_to<std::int64_t>()); }

template <typename Fn>
void parallel_rows(std::uint64_t count, unsigned threads, Fn fn)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(count, 64))));
    if (threads == 1) {
        for (std::uint64_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (std::uint64_t i = w; i < count; i += threads) {
                fn(i);
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
}

} // namespace

FormKind form_kind_for(std::uint32_t m) { return m % 2 == 1 ? FormKind::OddM : FormKind::EvenM; }

Fq evaluate_form(const FieldCtx& ctx, const QuadFormSpec& spec, Fqm x)
{
    require_kind(ctx, spec.kind);
    const auto [e1, e2] = form_exponents(ctx, spec.kind);
    const auto& E = ctx.ext();
    const auto& F = ctx.sub();
    Fq t2 = ctx.trace(E.mul(spec.b, E.pow(x, e2)));
    if (spec.kind == FormKind::OddM) {
        return F.add(ctx.trace(E.mul(spec.a, E.pow(x, e1))), t2);
    }
    Fqm u = E.mul(spec.a, E.pow(x, e1));
    return F.add(*ctx.descend(ctx.relative_trace(u, ctx.m() / 2)), t2);
}

std::uint32_t quadratic_form_rank(const FieldCtx& ctx, const QuadFormSpec& spec)
{
    require_odd_q(ctx);
    require_kind(ctx, spec.kind);
    const std::uint32_t m = ctx.m();
    const std::uint32_t p = ctx.p();
    const std::uint32_t sm = ctx.s() * m;
    const auto& E = ctx.ext();
    auto fr = [&](Fqm x, std::uint32_t j) { return ctx.frobenius(x, j % m); };

    auto g = [&](Fqm x) {
        const Fqm a = spec.a;
        const Fqm b = spec.b;
        if (spec.kind == FormKind::OddM) {
            const std::uint32_t j3 = (m + 3) / 2, j1 = (m + 1) / 2, jm1 = (m - 1) / 2, jm3 = (m - 3) / 2;
            Fqm r = E.mul(fr(b, j3), fr(x, j3));
            r = E.add(r, E.mul(fr(a, j1), fr(x, j1)));
            r = E.add(r, E.mul(a, fr(x, jm1)));
            return E.add(r, E.mul(b, fr(x, jm3)));
        }
        const std::uint32_t h = m / 2;
        Fqm r = E.mul(a, fr(x, h));
        r = E.add(r, E.mul(b, fr(x, h - 1)));
        return E.add(r, E.mul(fr(b, h + 1), fr(x, h + 1)));
    };

    // Row i: GF(p) digits of g(alpha^i); g is GF(p)-linear.
    std::vector<std::vector<std::uint32_t>> rows(sm, std::vector<std::uint32_t>(sm, 0));
    for (std::uint32_t i = 0; i < sm; ++i) {
        std::uint64_t lab = E.label(g(ctx.alpha_pow(i)));
        for (std::uint32_t d = 0; d < sm; ++d) {
            rows[i][d] = static_cast<std::uint32_t>(lab % p);
            lab /= p;
        }
    }
    const std::uint32_t kernel_p = sm - rank_mod_p(std::move(rows), p);
    return m - kernel_p / ctx.s();
}

std::uint32_t quadratic_form_rank_bilinear(const FieldCtx& ctx, const QuadFormSpec& spec)
{
    require_odd_q(ctx);
    const std::uint32_t m = ctx.m();
    const auto& F = ctx.sub();
    const auto& E = ctx.ext();
    SmallFieldTables T(F);
    GeneratorMatrix B;
    B.length = m;
    for (std::uint32_t i = 0; i < m; ++i) {
        std::vector<std::uint8_t> row(m);
        const Fqm ei = ctx.alpha_pow(i);
        for (std::uint32_t j = 0; j < m; ++j) {
            const Fqm ej = ctx.alpha_pow(j);
            Fq v = F.sub(evaluate_form(ctx, spec, E.add(ei, ej)), evaluate_form(ctx, spec, ei));
            v = F.sub(v, evaluate_form(ctx, spec, ej));
            row[j] = static_cast<std::uint8_t>(F.label(v));
        }
        B.rows.push_back(std::move(row));
    }
    return static_cast<std::uint32_t>(matrix_rank(T, std::move(B)));
}

CycInt exponential_sum(const FieldCtx& ctx, const QuadFormSpec& spec, Fq y)
{
    require_kind(ctx, spec.kind);
    const auto& F = ctx.sub();
    std::vector<std::int64_t> counts(ctx.p(), 0);
    counts[0] = 1;
    for (std::uint64_t t = 0; t < group_of(ctx); ++t) {
        ++counts[ctx.trace_to_prime(F.mul(y, evaluate_form(ctx, spec, ctx.alpha_pow(t))))];
    }
    return CycInt::from_counts(ctx.p(), counts);
}

CycInt exponential_sum(const FieldCtx& ctx, const QuadFormSpec& spec)
{
    return exponential_sum(ctx, spec, ctx.sub().one());
}

void ValueDistribution::add(std::uint32_t rank, const CycInt& value, const BigInt& mult)
{
    if (mult == 0) {
        return;
    }
    for (auto& e : entries) {
        if (e.rank == rank && e.value == value) {
            e.multiplicity += mult;
            return;
        }
    }
    entries.push_back({rank, value, mult});
    std::sort(entries.begin(), entries.end(), [](const ValueEntry& x, const ValueEntry& y) {
        if (x.rank != y.rank) {
            return x.rank > y.rank;
        }
        return cyc_less(x.value, y.value);
    });
}

BigInt ValueDistribution::total() const
{
    BigInt t = 0;
    for (const auto& e : entries) {
        t += e.multiplicity;
    }
    return t;
}

BigInt ValueDistribution::multiplicity(std::uint32_t rank, const CycInt& value) const
{
    for (const auto& e : entries) {
        if (e.rank == rank && e.value == value) {
            return e.multiplicity;
        }
    }
    return 0;
}

BigInt ValueDistribution::value_count(const CycInt& value) const
{
    BigInt t = 0;
    for (const auto& e : entries) {
        if (e.value == value) {
            t += e.multiplicity;
        }
    }
    return t;
}

bool ValueDistribution::operator==(const ValueDistribution& o) const
{
    if (entries.size() != o.entries.size()) {
        return false;
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& x = entries[i];
        const auto& y = o.entries[i];
        if (x.rank != y.rank || !(x.value == y.value) || x.multiplicity != y.multiplicity) {
            return false;
        }
    }
    return true;
}

Fqm pair_a(const FieldCtx& ctx, FormKind kind, std::uint64_t ia)
{
    if (ia == 0) {
        return Fqm::zero();
    }
    const std::uint64_t step = kind == FormKind::OddM ? 1 : half_stride(ctx);
    return ctx.alpha_pow(mul_mod(ia - 1, step, group_of(ctx)));
}

Fqm pair_b(const FieldCtx& ctx, std::uint64_t ib)
{
    return ib == 0 ? Fqm::zero() : ctx.alpha_pow(ib - 1);
}

std::uint64_t pair_index_of(const FieldCtx& /*ctx*/, Fqm x)
{
    return x.is_zero() ? 0 : static_cast<std::uint64_t>(x.exponent()) + 1;
}

PairTable t_pair_table(const FieldCtx& ctx, const PairOptions& opts)
{
    require_odd_q(ctx);
    if (ctx.qm() > opts.max_qm) {
        throw Error(Errc::SizeExceeded, "q^m = " + std::to_string(ctx.qm()) + " exceeds the pair budget");
    }
    const FormKind kind = form_kind_for(ctx.m());
    if (kind == FormKind::OddM && ctx.m() < 3) {
        throw Error(Errc::UnsupportedParams, "odd-m form needs m >= 3");
    }
    FormTables tabs(ctx, kind);
    PairTable table;
    table.kind = kind;
    table.a_count = kind == FormKind::OddM ? ctx.qm() : ipow(ctx.q(), ctx.m() / 2);
    table.b_count = ctx.qm();
    table.values.resize(table.a_count * table.b_count);
    table.ranks.resize(table.a_count * table.b_count);
    const std::uint8_t one = 1;
    parallel_rows(table.a_count, opts.threads, [&](std::uint64_t ia) {
        const Fqm a = pair_a(ctx, kind, ia);
        for (std::uint64_t ib = 0; ib < table.b_count; ++ib) {
            const Fqm b = pair_b(ctx, ib);
            const auto idx = table.index(ia, ib);
            table.values[idx] = tabs.sum(ctx.p(), a, b, one);
            table.ranks[idx] = static_cast<std::uint8_t>(quadratic_form_rank(ctx, {kind, a, b}));
        }
    });
    return table;
}

ValueDistribution t_distribution(const PairTable& table)
{
    std::map<std::pair<std::uint32_t, std::vector<std::int64_t>>, std::pair<CycInt, std::uint64_t>> acc;
    for (std::size_t i = 0; i < table.values.size(); ++i) {
        auto& slot = acc[{table.ranks[i], table.values[i].coefficients()}];
        if (slot.second == 0) {
            slot.first = table.values[i];
        }
        ++slot.second;
    }
    ValueDistribution d;
    for (const auto& [key, v] : acc) {
        d.add(key.first, v.first, BigInt(v.second));
    }
    return d;
}

ValueDistribution t_distribution(const FieldCtx& ctx, const PairOptions& opts)
{
    return t_distribution(t_pair_table(ctx, opts));
}

ValueDistribution t_distribution_closed(const FieldCtx& ctx)
{
    require_odd_q(ctx);
    const std::uint64_t q = ctx.q();
    const std::uint32_t m = ctx.m();
    const std::uint32_t p = ctx.p();
    const CycInt G = gaussian_sum_numeric(ctx.sub());
    auto P = [q](std::uint32_t e) { return big_pow(q, e); };
    const BigInt Q = P(m);
    const BigInt bq = q;
    auto div = [](const BigInt& a, const BigInt& b) {
        if (a % b != 0) {
            throw Error(Errc::InvalidArgument, "value-distribution multiplicity is not integral");
        }
        return BigInt(a / b);
    };
    ValueDistribution d;
    if (m % 2 == 1) {
        if (m < 3) {
            throw Error(Errc::OutOfProvenRange, "odd m must be at least 3");
        }
        const CycInt top = big_cyc(p, P((m - 1) / 2)) * G;
        const CycInt low = big_cyc(p, P((m + 1) / 2)) * G;
        const BigInt top_mult = div((Q - 1) * (P(m + 2) - P(m + 1) - Q + bq * bq), 2 * (bq * bq - 1));
        d.add(m, top, top_mult);
        d.add(m, -top, top_mult);
        d.add(m - 1, big_cyc(p, P((m + 1) / 2)), div((Q - 1) * (P(m - 1) + P((m - 1) / 2)), 2));
        d.add(m - 1, -big_cyc(p, P((m + 1) / 2)), div((Q - 1) * (P(m - 1) - P((m - 1) / 2)), 2));
        const BigInt low_mult = div((Q - 1) * (P(m - 1) - 1), 2 * (bq * bq - 1));
        d.add(m - 2, low, low_mult);
        d.add(m - 2, -low, low_mult);
    } else {
        const std::uint32_t h = m / 2;
        d.add(m, big_cyc(p, P(h)), div((Q - 1) * (P(h + 1) + bq), 2 * (bq + 1)));
        d.add(m, -big_cyc(p, P(h)), div((P(h) - 1) * (P(m + 1) - 2 * Q + bq), 2 * (bq - 1)));
        const CycInt mid = big_cyc(p, P(h)) * G;
        const BigInt mid_mult = div((Q - 1) * P(h - 1), 2);
        d.add(m - 1, mid, mid_mult);
        d.add(m - 1, -mid, mid_mult);
        d.add(m - 2, -big_cyc(p, P(h + 1)), div((Q - 1) * (P(h - 1) - 1), bq * bq - 1));
    }
    d.add(0, big_cyc(p, Q), 1);
    return d;
}

std::vector<MomentCheck> t_moment_check(const FieldCtx& ctx, const PairTable& table)
{
    if (table.kind != FormKind::OddM) {
        throw Error(Errc::KindParityMismatch, "moment identities are stated for odd m");
    }
    const std::uint32_t p = ctx.p();
    const std::uint64_t q = ctx.q();
    const std::uint32_t m = ctx.m();
    CycInt s1(p), s2(p), s3(p), sS(p);
    for (const auto& t : table.values) {
        s1 += t;
        const CycInt t2 = t * t;
        s2 += t2;
        s3 += t2 * t;
    }
    const auto& E = ctx.ext();
    std::vector<Fqm> ys;
    for (std::uint64_t e = 0; e + 1 < q; ++e) {
        ys.push_back(ctx.embed(Fq::from_exponent(static_cast<std::uint32_t>(e))));
    }
    for (std::uint64_t ia = 0; ia < table.a_count; ++ia) {
        const Fqm a = pair_a(ctx, table.kind, ia);
        for (std::uint64_t ib = 0; ib < table.b_count; ++ib) {
            const Fqm b = pair_b(ctx, ib);
            CycInt S(p);
            for (const Fqm y : ys) {
                S += table.values[table.index(pair_index_of(ctx, E.mul(a, y)), pair_index_of(ctx, E.mul(b, y)))];
            }
            sS += S * S;
        }
    }
    const BigInt Q = big_pow(q, m);
    const BigInt q2m = Q * Q;
    std::vector<MomentCheck> out;
    out.push_back({"sum T", s1, q2m, false});
    out.push_back({"sum T^2", s2, q % 4 == 1 ? (2 * Q - 1) * q2m : q2m, false});
    out.push_back({"sum T^3", s3, (Q + big_pow(q, m - 1) - 1) * q2m * q, false});
    out.push_back({"sum S^2", sS, BigInt(q - 1) * BigInt(q - 1) * Q * q2m, false});
    for (auto& c : out) {
        const auto v = c.computed.as_integer();
        c.ok = v && BigInt(*v) == c.expected;
    }
    return out;
}

SideConditions value_side_conditions(const FieldCtx& ctx, const ValueDistribution& dist)
{
    const std::uint32_t p = ctx.p();
    const std::uint64_t q = ctx.q();
    const std::uint32_t m = ctx.m();
    if (m % 2 == 0) {
        throw Error(Errc::KindParityMismatch, "side conditions are stated for odd m");
    }
    auto count = [&](const BigInt& v) {
        BigInt t = 0;
        const CycInt c = big_cyc(p, v);
        for (const auto& e : dist.entries) {
            if (e.rank != 0 && e.value == c) {
                t += e.multiplicity;
            }
        }
        return t;
    };
    SideConditions sc;
    const BigInt v3 = big_pow(q, (m + 3) / 2);
    const BigInt v1 = big_pow(q, (m + 1) / 2);
    sc.n_plus3 = count(v3);
    sc.n_minus3 = count(-v3);
    sc.n_plus1 = count(v1);
    sc.n_minus1 = count(-v1);
    sc.expected_difference = (big_pow(q, m) - 1) * big_pow(q, (m - 1) / 2);
    sc.ok = sc.n_plus3 == 0 && sc.n_minus3 == 0 && sc.n_plus1 - sc.n_minus1 == sc.expected_difference;
    return sc;
}

bool eta_twist_check(const FieldCtx& ctx, const QuadFormSpec& spec, Fq y)
{
    require_odd_q(ctx);
    if (y.is_zero()) {
        throw Error(Errc::InvalidArgument, "twist needs nonzero y");
    }
    const std::uint32_t r = quadratic_form_rank(ctx, spec);
    const int eta = ctx.quadratic_character(ctx.sub().pow(y, r));
    return exponential_sum(ctx, spec, y) == exponential_sum(ctx, spec) * eta;
}

WeightFormulaReport weight_formula_check(const FieldCtx& ctx, const PairTable& table, unsigned threads)
{
    FormTables tabs(ctx, table.kind);
    const std::uint64_t q = ctx.q();
    const std::uint32_t m = ctx.m();
    const std::uint32_t p = ctx.p();
    const std::uint64_t n = group_of(ctx) / 2;
    const std::int64_t base = static_cast<std::int64_t>((q - 1) * ipow(q, m));
    std::vector<std::uint64_t> bad(table.a_count, 0), odd(table.a_count, 0), seen(table.a_count, 0);
    parallel_rows(table.a_count, threads, [&](std::uint64_t ia) {
        const Fqm a = pair_a(ctx, table.kind, ia);
        for (std::uint64_t ib = 0; ib < table.b_count; ++ib) {
            if (ia == 0 && ib == 0) {
                continue;
            }
            const Fqm b = pair_b(ctx, ib);
            std::int64_t w = 0;
            for (std::uint64_t l = 0; l < n; ++l) {
                w += tabs.form_at(a, b, l) != 0;
            }
            const auto idx = table.index(ia, ib);
            const std::int64_t sr = eta_power_sum(ctx.sub(), table.ranks[idx]);
            const auto rhs = (CycInt::integer(p, base) - table.values[idx] * sr).as_integer();
            ++seen[ia];
            if (!rhs || *rhs % static_cast<std::int64_t>(2 * q) != 0) {
                ++odd[ia];
            } else if (*rhs / static_cast<std::int64_t>(2 * q) != w) {
                ++bad[ia];
            }
        }
    });
    WeightFormulaReport rep;
    for (std::uint64_t i = 0; i < table.a_count; ++i) {
        rep.pairs += seen[i];
        rep.mismatches += bad[i];
        rep.non_integral += odd[i];
    }
    return rep;
}

} // namespace bchlab
