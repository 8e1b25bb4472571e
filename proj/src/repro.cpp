#include "bchlab/repro.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "bchlab/bch.hpp"
#include "bchlab/cosets.hpp"
#include "bchlab/error.hpp"
#include "bchlab/families.hpp"
#include "bchlab/field_ctx.hpp"
#include "bchlab/int_math.hpp"
#include "bchlab/poly.hpp"
#include "bchlab/quadform.hpp"
#include "bchlab/tables.hpp"

namespace bchlab {

namespace {

std::string params(std::uint64_t q, std::uint32_t m)
{
    return "q=" + std::to_string(q) + " m=" + std::to_string(m);
}

// Collects failure notes; ok while none were added.
struct Notes {
    std::vector<std::string> items;
    std::size_t checked = 0;

    void check(bool cond, const std::string& what)
    {
        ++checked;
        if (!cond && items.size() < 8) {
            items.push_back(what);
        } else if (!cond) {
            items.push_back("...");
        }
    }

    ClaimOutcome outcome(std::string provenance) const
    {
        ClaimOutcome o;
        o.ok = items.empty();
        o.provenance = std::move(provenance);
        if (o.ok) {
            o.detail = std::to_string(checked) + " checks";
        } else {
            std::ostringstream os;
            for (std::size_t i = 0; i < items.size(); ++i) {
                os << (i ? "; " : "") << items[i];
            }
            o.detail = os.str();
        }
        return o;
    }
};

EnumerationOptions enum_opts(const ReproOptions& o)
{
    EnumerationOptions e;
    e.max_codewords = o.max_codewords;
    e.threads = o.threads;
    return e;
}

// AC1 ---------------------------------------------------------------------

struct Fixture {
    std::string id;
    FamilyKind kind;
    std::uint64_t q;
    std::uint32_t m;
    std::uint64_t n, k, d;
    std::string enumerator;
};

ClaimOutcome run_fixture(const Fixture& f, const ReproOptions& o)
{
    Notes notes;
    const FieldCtx ctx = build_field_ctx_q(f.q, f.m);
    const auto fam = build_family(f.kind, ctx);
    const auto wf = enumerate_weights(fam, enum_opts(o));
    const auto wc = closed_form_distribution(f.kind, f.q, f.m);
    auto expect = [&](const WeightDistribution& w, const std::string& path) {
        notes.check(w.enumerator() == f.enumerator, path + " gave " + w.enumerator());
        notes.check(w.length() == f.n && w.k() == f.k && w.min_distance() == f.d,
                    path + " parameters [" + std::to_string(w.length()) + "," + std::to_string(w.k()) + "," +
                        std::to_string(w.min_distance()) + "]");
    };
    expect(wf, "family enumeration");
    expect(wc, "closed form");
    std::string prov = "trace-family enumeration, closed form";
    if (f.kind != FamilyKind::V3) {
        const auto code = build_bch(ctx, family_code_descriptor(f.kind, f.q, f.m));
        notes.check(code.n == f.n && code.dimension == f.k, "BCH construction has n=" + std::to_string(code.n) +
                                                                 " k=" + std::to_string(code.dimension));
        expect(code_weight_distribution(ctx, code, enum_opts(o)), "generator-matrix enumeration");
        prov += ", generator-matrix enumeration";
    }
    return notes.outcome(prov);
}

// AC2 ---------------------------------------------------------------------

ClaimOutcome run_dimension_grid(std::uint64_t q, std::uint32_t m)
{
    Notes notes;
    for (std::uint64_t lambda = 1; lambda < q; ++lambda) {
        if ((q - 1) % lambda != 0 || (m % 2 == 0 && lambda < 2)) {
            continue;
        }
        const std::uint64_t n = (ipow(q, m) - 1) / lambda;
        if (n > 100000) {
            continue;
        }
        CosetSpace space(q, m, lambda);
        const std::uint64_t top = std::min(closed_dim_max_delta(q, m, lambda), n);
        const auto dims = bch_dimension_sweep(space, top);
        for (std::uint64_t d = 2; d <= top; ++d) {
            const std::uint64_t k = m % 2 == 1 ? dim_closed_odd(q, m, lambda, d) : dim_closed_even(q, m, lambda, d).k;
            notes.check(k == dims[d], "lambda=" + std::to_string(lambda) + " delta=" + std::to_string(d) +
                                          " closed=" + std::to_string(k) + " scan=" + std::to_string(dims[d]));
        }
    }
    return notes.outcome("closed-form dimension vs coset-union count");
}

// AC3 ---------------------------------------------------------------------

ClaimOutcome run_half_leaders(std::uint64_t q, const ReproOptions& o)
{
    Notes notes;
    for (std::uint32_t m = 2; m <= 6; ++m) {
        CosetSpace space(q, m, 2);
        if (space.n() > o.max_codewords) {
            continue;
        }
        const auto lead = largest_leaders_half(q, m, m == 6);
        auto all = all_leaders(space);
        std::sort(all.begin(), all.end(), [](const CosetRecord& a, const CosetRecord& b) { return a.leader > b.leader; });
        const std::string tag = params(q, m);
        notes.check(all.size() >= 2, tag + " fewer than two leaders");
        if (all.size() < 2) {
            continue;
        }
        notes.check(all[0].leader == lead.delta1 && all[0].size == lead.size1,
                    tag + " first leader " + std::to_string(all[0].leader) + " vs " + std::to_string(lead.delta1));
        notes.check(all[1].leader == lead.delta2 && all[1].size == lead.size2,
                    tag + " second leader " + std::to_string(all[1].leader) + " vs " + std::to_string(lead.delta2));
        if (m == 6) {
            notes.check(lead.delta3 && all.size() >= 3 && all[2].leader == *lead.delta3 && all[2].size == lead.size3,
                        tag + " third leader " + std::to_string(all[2].leader));
        }
    }
    return notes.outcome("closed form vs full coset scan");
}

ClaimOutcome run_qm1_leader(std::uint64_t q, std::uint32_t m)
{
    Notes notes;
    CosetSpace space(q, m, q - 1);
    const auto lead = largest_leader_qm1(q, m);
    const auto all = all_leaders(space);
    const auto& top = all.back();
    notes.check(top.leader == lead.delta, params(q, m) + " scan max " + std::to_string(top.leader) + " vs closed " +
                                              std::to_string(lead.delta));
    notes.check(top.size == lead.size, params(q, m) + " size " + std::to_string(top.size) + " vs closed " +
                                           std::to_string(lead.size));
    return notes.outcome("closed form vs full coset scan");
}

// AC4 / AC6 ---------------------------------------------------------------

ClaimOutcome run_value_distribution(std::uint64_t q, std::uint32_t m, const ReproOptions& o)
{
    Notes notes;
    const FieldCtx ctx = build_field_ctx_q(q, m);
    PairOptions po;
    po.threads = o.threads;
    po.max_qm = std::max<std::uint64_t>(po.max_qm, ctx.qm());
    const auto table = t_pair_table(ctx, po);
    const auto dist = t_distribution(table);
    notes.check(dist == t_distribution_closed(ctx), "enumerated value distribution differs from the closed form");
    notes.check(dist.total() == big_pow(q, 2 * m), "multiplicities do not sum to q^(2m)");
    for (const auto& c : t_moment_check(ctx, table)) {
        notes.check(c.ok, c.name + " = " + c.computed.to_string() + ", expected " + c.expected.str());
    }
    const auto sc = value_side_conditions(ctx, dist);
    notes.check(sc.ok, "side conditions: n(+q^((m+3)/2))=" + sc.n_plus3.str() + " n(-)=" + sc.n_minus3.str() +
                           " difference " + BigInt(sc.n_plus1 - sc.n_minus1).str() + " vs " +
                           sc.expected_difference.str());
    return notes.outcome("pair enumeration vs closed form and moment identities");
}

ClaimOutcome run_weight_formula(std::uint64_t q, std::uint32_t m, const ReproOptions& o)
{
    const FieldCtx ctx = build_field_ctx_q(q, m);
    PairOptions po;
    po.threads = o.threads;
    po.max_qm = std::max<std::uint64_t>(po.max_qm, ctx.qm());
    const auto table = t_pair_table(ctx, po);
    const auto rep = weight_formula_check(ctx, table, o.threads);
    ClaimOutcome out;
    out.ok = rep.ok();
    out.provenance = "character-sum weight vs zero-count weight";
    out.detail = std::to_string(rep.pairs) + " pairs, " + std::to_string(rep.mismatches) + " mismatches, " +
                 std::to_string(rep.non_integral) + " non-integral";
    return out;
}

// AC5 ---------------------------------------------------------------------

ClaimOutcome run_one_weight(FamilyKind kind, std::uint64_t q, std::uint32_t m, const ReproOptions& o,
                            char expected_case)
{
    Notes notes;
    const FieldCtx ctx = build_field_ctx_q(q, m);
    if (expected_case != 0) {
        const auto lead = largest_leader_qm1(q, m);
        notes.check(lead.case_id == expected_case, "residue case " + std::string(1, lead.case_id));
    }
    const auto fam = build_family(kind, ctx);
    const auto w = enumerate_weights(fam, enum_opts(o));
    const std::uint64_t d = closed_form_min_distance(kind, q, m);
    notes.check(w.nonzero_weight_count() == 1, "nonzero weights: " + w.enumerator());
    notes.check(w.min_distance() == d, "weight " + std::to_string(w.min_distance()) + " vs stated " + std::to_string(d));
    notes.check(w == closed_form_distribution(kind, q, m), "closed form differs: " + w.enumerator());
    const auto code = build_bch(ctx, family_code_descriptor(kind, q, m));
    notes.check(code.n == w.length() && code.dimension == w.k(), "code parameters differ from the family");
    const auto g = griesmer_check(code.n, code.dimension, w.min_distance(), q);
    notes.check(g == Griesmer::Meets, std::string("griesmer: ") + griesmer_name(g));
    return notes.outcome("trace-family enumeration, closed form, Griesmer bound");
}

// AC7 ---------------------------------------------------------------------

struct SpaceParams {
    std::uint64_t q;
    std::uint32_t m;
    std::uint64_t lambda;
};

std::vector<SpaceParams> small_spaces(std::uint64_t max_n)
{
    std::vector<SpaceParams> out;
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        for (std::uint32_t m = 2; m <= 6; ++m) {
            for (std::uint64_t lambda = 1; lambda < q || lambda == 1; ++lambda) {
                if ((q - 1) % lambda != 0) {
                    continue;
                }
                if ((ipow(q, m) - 1) / lambda <= max_n) {
                    out.push_back({q, m, lambda});
                }
            }
        }
    }
    return out;
}

ClaimOutcome run_coset_partition()
{
    Notes notes;
    for (const auto& sp : small_spaces(20000)) {
        CosetSpace space(sp.q, sp.m, sp.lambda);
        const auto all = all_leaders(space, true);
        std::vector<std::uint8_t> seen(space.n(), 0);
        for (const auto& r : all) {
            notes.check(sp.m % r.size == 0, "size does not divide m");
            notes.check(r.members.size() == r.size && r.members.front() == r.leader, "member list malformed");
            for (auto i : r.members) {
                notes.check(seen[i]++ == 0, "index in two cosets");
                notes.check(std::binary_search(r.members.begin(), r.members.end(), space.times_q(i)),
                            "coset not closed under q");
            }
        }
        notes.check(std::all_of(seen.begin(), seen.end(), [](std::uint8_t s) { return s == 1; }),
                    "cosets do not cover Z_n for q=" + std::to_string(sp.q));
    }
    return notes.outcome("orbit enumeration");
}

ClaimOutcome run_leader_necessity()
{
    Notes notes;
    auto scan = [&](std::uint64_t q, std::uint32_t m, std::uint64_t lambda) {
        CosetSpace space(q, m, lambda);
        for (const auto& r : all_leaders(space)) {
            if (r.leader != 0) {
                notes.check(leader_digit_conditions(space, r.leader),
                            params(q, m) + " lambda=" + std::to_string(lambda) + " leader " + std::to_string(r.leader));
            }
        }
    };
    for (const auto& sp : small_spaces(100000)) {
        if (sp.lambda >= 2) {
            scan(sp.q, sp.m, sp.lambda);
        }
    }
    for (auto [q, m] : {std::pair<std::uint64_t, std::uint32_t>{5, 5}, {5, 6}, {4, 6}, {7, 7}}) {
        scan(q, m, q - 1);
    }
    return notes.outcome("digit conditions on every scanned leader");
}

std::uint64_t largest_field(const std::vector<SpaceParams>& spaces)
{
    std::uint64_t top = 0;
    for (const auto& sp : spaces) {
        top = std::max(top, ipow(sp.q, sp.m));
    }
    return top;
}

std::vector<BchDescriptor> small_codes()
{
    std::vector<BchDescriptor> out;
    for (const auto& sp : small_spaces(400)) {
        const std::uint64_t n = (ipow(sp.q, sp.m) - 1) / sp.lambda;
        for (std::uint64_t d = 2; d <= std::min<std::uint64_t>(n, 12); ++d) {
            out.push_back({sp.q, sp.m, sp.lambda, d, 1, false});
        }
    }
    return out;
}

ClaimOutcome run_gh_identity()
{
    Notes notes;
    for (const auto& desc : small_codes()) {
        const FieldCtx ctx = build_field_ctx_q(desc.q, desc.m);
        const auto code = build_bch(ctx, desc);
        const auto& F = ctx.sub();
        const Poly h = parity_check(ctx, code.n, code.generator);
        notes.check(poly_mul(F, code.generator, h) == x_pow_minus_one(F, code.n),
                    params(desc.q, desc.m) + " delta=" + std::to_string(desc.delta));
        notes.check(static_cast<std::uint64_t>(code.generator.degree()) == code.n - code.dimension, "deg g != n-k");
    }
    return notes.outcome("polynomial product");
}

ClaimOutcome run_hat_dimension()
{
    Notes notes;
    for (auto desc : small_codes()) {
        const FieldCtx ctx = build_field_ctx_q(desc.q, desc.m);
        CosetSpace space(desc.q, desc.m, desc.lambda);
        const auto full = bch_dimension(space, desc);
        desc.hat = true;
        const auto hat = bch_dimension(space, desc);
        const auto built = build_bch(ctx, desc);
        notes.check(hat + 1 == full && built.dimension == hat,
                    params(desc.q, desc.m) + " delta=" + std::to_string(desc.delta));
    }
    return notes.outcome("defining-set count and generator degree");
}

ClaimOutcome run_bch_bound(const ReproOptions& o)
{
    Notes notes;
    std::size_t measured = 0;
    for (const auto& desc : small_codes()) {
        const FieldCtx ctx = build_field_ctx_q(desc.q, desc.m);
        const auto code = build_bch(ctx, desc);
        std::uint64_t words = 1;
        for (std::uint64_t i = 0; i < code.dimension && words <= 200000; ++i) {
            words *= desc.q;
        }
        if (code.dimension == 0 || words > 200000) {
            continue;
        }
        EnumerationOptions e = enum_opts(o);
        const auto d = min_distance_bruteforce(ctx, code, e);
        ++measured;
        notes.check(bch_bound_check(code, d), params(desc.q, desc.m) + " delta=" + std::to_string(desc.delta) +
                                                  " d=" + std::to_string(d));
    }
    notes.check(measured > 50, "too few codes measured");
    return notes.outcome("exhaustive minimum distance on " + std::to_string(measured) + " codes");
}

ClaimOutcome run_eta_twist()
{
    Notes notes;
    for (auto [q, m] : {std::pair<std::uint64_t, std::uint32_t>{3, 3}, {5, 3}, {3, 4}, {5, 4}, {7, 3}, {3, 5}}) {
        const FieldCtx ctx = build_field_ctx_q(q, m);
        const FormKind kind = form_kind_for(m);
        const std::uint64_t a_count = kind == FormKind::OddM ? ctx.qm() : ipow(q, m / 2);
        for (std::uint64_t t = 0; t < 100; ++t) {
            const Fqm a = pair_a(ctx, kind, (7 * t + 1) % a_count);
            const Fqm b = pair_b(ctx, (13 * t + 3) % ctx.qm());
            const Fq y = Fq::from_exponent(static_cast<std::uint32_t>(t % (q - 1)));
            notes.check(eta_twist_check(ctx, {kind, a, b}, y), params(q, m) + " triple " + std::to_string(t));
        }
    }
    return notes.outcome("exact cyclotomic sums");
}

ClaimOutcome run_primitive_invariance(const ReproOptions& o)
{
    Notes notes;
    const std::vector<std::tuple<FamilyKind, std::uint64_t, std::uint32_t>> cases = {
        {FamilyKind::V1, 3, 3},     {FamilyKind::V2, 3, 4},    {FamilyKind::V3, 5, 3},
        {FamilyKind::V4, 3, 3},     {FamilyKind::V5, 3, 4},    {FamilyKind::HatD1, 5, 4},
        {FamilyKind::CDelta1, 5, 3}, {FamilyKind::Qm1OneWeight, 5, 5},
    };
    for (const auto& [kind, q, m] : cases) {
        FieldOptions alt;
        alt.ext_poly_index = 1;
        const auto w0 = enumerate_weights(build_family(kind, build_field_ctx_q(q, m)), enum_opts(o));
        const FieldCtx other = build_field_ctx_q(q, m, alt);
        const auto w1 = enumerate_weights(build_family(kind, other), enum_opts(o));
        notes.check(w0 == w1, std::string(family_name(kind)) + " " + params(q, m));
    }
    return notes.outcome("enumeration under two primitive polynomials");
}

} // namespace

const char* claim_status_name(ClaimStatus s)
{
    switch (s) {
    case ClaimStatus::Pass:
        return "PASS";
    case ClaimStatus::Fail:
        return "FAIL";
    case ClaimStatus::Skip:
        return "SKIP";
    }
    return "?";
}

std::vector<Claim> claim_registry()
{
    std::vector<Claim> out;

    const std::vector<Fixture> fixtures = {
        {"c-delta1-3-3", FamilyKind::CDelta1, 3, 3, 13, 4, 7, "1+26z^7+26z^9+26z^10+2z^13"},
        {"hat-delta2-3-3", FamilyKind::V1, 3, 3, 13, 6, 6, "1+156z^6+494z^9+78z^12"},
        {"c-delta2-3-3", FamilyKind::V4, 3, 3, 13, 7, 4, "1+26z^4+156z^6+624z^7+494z^9+780z^10+78z^12+28z^13"},
        {"c-delta2-3-4", FamilyKind::V5, 3, 4, 40, 7, 22,
         "1+280z^22+300z^24+336z^25+240z^27+600z^28+168z^30+240z^31+20z^36+2z^40"},
        {"c-delta1-5-3", FamilyKind::CDelta1, 5, 3, 62, 4, 47, "1+248z^47+124z^50+248z^52+4z^62"},
        {"v3-5-3", FamilyKind::V3, 5, 3, 31, 6, 20, "1+1860z^20+12524z^25+1240z^30"},
    };
    for (const auto& f : fixtures) {
        out.push_back({"ac1." + f.id, "AC1",
                       "[" + std::to_string(f.n) + "," + std::to_string(f.k) + "," + std::to_string(f.d) + "] " +
                           family_name(f.kind) + " " + params(f.q, f.m),
                       ipow(f.q, f.m), [f](const ReproOptions& o) { return run_fixture(f, o); }});
    }

    for (std::uint64_t q : {3, 4, 5, 7, 8, 9}) {
        for (std::uint32_t m = 3; m <= 6; ++m) {
            const std::uint64_t lambda_min = m % 2 == 0 ? 2 : 1;
            bool any = false;
            for (std::uint64_t l = lambda_min; l < q || l == 1; ++l) {
                any = any || ((q - 1) % l == 0 && (ipow(q, m) - 1) / l <= 100000);
            }
            if (!any) {
                continue;
            }
            out.push_back({"ac2.dim-" + std::to_string(q) + "-" + std::to_string(m), "AC2",
                           "closed-form dimension grid " + params(q, m), ipow(q, m),
                           [q, m](const ReproOptions&) { return run_dimension_grid(q, m); }});
        }
    }

    for (std::uint64_t q : {3, 5, 7}) {
        out.push_back({"ac3.half-" + std::to_string(q), "AC3", "largest leaders mod (q^m-1)/2, q=" + std::to_string(q),
                       ipow(q, 6), [q](const ReproOptions& o) { return run_half_leaders(q, o); }});
    }
    for (auto [q, m] : {std::pair<std::uint64_t, std::uint32_t>{5, 5}, {5, 6}, {4, 6}, {7, 7}}) {
        out.push_back({"ac3.qm1-" + std::to_string(q) + "-" + std::to_string(m), "AC3",
                       "largest leader mod (q^m-1)/(q-1), " + params(q, m), ipow(q, m),
                       [q = q, m = m](const ReproOptions&) { return run_qm1_leader(q, m); }});
    }

    const std::vector<std::pair<std::uint64_t, std::uint32_t>> pair_grid = {{3, 3}, {3, 5}, {5, 3}};
    for (auto [q, m] : pair_grid) {
        out.push_back({"ac4.values-" + std::to_string(q) + "-" + std::to_string(m), "AC4",
                       "value distribution and moments, " + params(q, m), ipow(q, m),
                       [q = q, m = m](const ReproOptions& o) { return run_value_distribution(q, m, o); }});
    }

    for (auto [q, m] : {std::pair<std::uint64_t, std::uint32_t>{3, 3}, {3, 4}, {5, 3}, {5, 4}}) {
        out.push_back({"ac5.hat-delta1-" + std::to_string(q) + "-" + std::to_string(m), "AC5",
                       "one-weight hat-delta1 code, " + params(q, m), ipow(q, m), [q = q, m = m](const ReproOptions& o) {
                           return run_one_weight(FamilyKind::HatD1, q, m, o, 0);
                       }});
    }
    out.push_back({"ac5.qm1-5-5", "AC5", "one-weight code lambda=q-1, q=5 m=5", ipow(5, 5),
                   [](const ReproOptions& o) { return run_one_weight(FamilyKind::Qm1OneWeight, 5, 5, o, 'i'); }});
    out.push_back({"ac5.qm1-5-6", "AC5", "one-weight code lambda=q-1, q=5 m=6", ipow(5, 6),
                   [](const ReproOptions& o) { return run_one_weight(FamilyKind::Qm1OneWeight, 5, 6, o, 'j'); }});

    for (auto [q, m] : pair_grid) {
        out.push_back({"ac6.weight-formula-" + std::to_string(q) + "-" + std::to_string(m), "AC6",
                       "character-sum weight vs zero count, " + params(q, m), ipow(q, m),
                       [q = q, m = m](const ReproOptions& o) { return run_weight_formula(q, m, o); }});
    }

    out.push_back({"ac7.coset-partition", "AC7", "cosets partition Z_n with sizes dividing m", largest_field(small_spaces(20000)),
                   [](const ReproOptions&) { return run_coset_partition(); }});
    out.push_back({"ac7.leader-necessity", "AC7", "digit conditions hold on every leader",
                   std::max(ipow(7, 7), largest_field(small_spaces(100000))),
                   [](const ReproOptions&) { return run_leader_necessity(); }});
    out.push_back({"ac7.gh-identity", "AC7", "g*h = x^n - 1", largest_field(small_spaces(400)),
                   [](const ReproOptions&) { return run_gh_identity(); }});
    out.push_back({"ac7.hat-dimension", "AC7", "dim(hat C) = dim(C) - 1", largest_field(small_spaces(400)),
                   [](const ReproOptions&) { return run_hat_dimension(); }});
    out.push_back({"ac7.bch-bound", "AC7", "measured d >= delta", largest_field(small_spaces(400)),
                   [](const ReproOptions& o) { return run_bch_bound(o); }});
    out.push_back({"ac7.eta-twist", "AC7", "quadratic twist identity on 100 triples per field", ipow(3, 5),
                   [](const ReproOptions&) { return run_eta_twist(); }});
    out.push_back({"ac7.primitive-invariance", "AC7", "weights independent of the primitive polynomial", ipow(5, 5),
                   [](const ReproOptions& o) { return run_primitive_invariance(o); }});
    return out;
}

std::vector<ClaimResult> run_claims(const std::vector<Claim>& claims, const ReproOptions& opts,
                                    const std::function<void(const ClaimResult&)>& on_result)
{
    std::vector<ClaimResult> results;
    for (const auto& c : claims) {
        ClaimResult r{c.id, c.criterion, c.description, ClaimStatus::Skip, "", "", 0.0};
        if (opts.max_field != 0 && c.field_size > opts.max_field) {
            r.detail = "field size " + std::to_string(c.field_size) + " exceeds --max-field";
        } else {
            const auto t0 = std::chrono::steady_clock::now();
            try {
                const auto o = c.run(opts);
                r.status = o.ok ? ClaimStatus::Pass : ClaimStatus::Fail;
                r.provenance = o.provenance;
                r.detail = o.detail;
            } catch (const std::exception& e) {
                r.status = ClaimStatus::Fail;
                r.detail = e.what();
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
        if (on_result) {
            on_result(r);
        }
        results.push_back(std::move(r));
    }
    return results;
}

std::uint64_t parse_field_size(const std::string& text)
{
    const auto caret = text.find('^');
    try {
        std::size_t used = 0;
        if (caret == std::string::npos) {
            const auto v = std::stoull(text, &used);
            if (used != text.size()) {
                throw Error(Errc::InvalidArgument, "bad field size: " + text);
            }
            return v;
        }
        const std::string base_text = text.substr(0, caret);
        const std::string exp_text = text.substr(caret + 1);
        const auto base = std::stoull(base_text, &used);
        if (used != base_text.size()) {
            throw Error(Errc::InvalidArgument, "bad field size: " + text);
        }
        const auto e = std::stoul(exp_text, &used);
        if (used != exp_text.size()) {
            throw Error(Errc::InvalidArgument, "bad field size: " + text);
        }
        return ipow(base, static_cast<std::uint32_t>(e));
    } catch (const std::logic_error&) {
        throw Error(Errc::InvalidArgument, "bad field size: " + text);
    }
}

} // namespace bchlab
