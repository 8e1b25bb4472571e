#include "bchlab/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bchlab/cosets.hpp"
#include "bchlab/error.hpp"
#include "bchlab/int_math.hpp"

namespace bchlab {

namespace {

struct KindName {
    FamilyKind kind;
    const char* name;
};

constexpr KindName kNames[] = {
    {FamilyKind::V1, "V1"},
    {FamilyKind::V2, "V2"},
    {FamilyKind::V3, "V3"},
    {FamilyKind::V4, "V4"},
    {FamilyKind::V5, "V5"},
    {FamilyKind::HatD1, "hat-delta1"},
    {FamilyKind::CDelta1, "C-delta1"},
    {FamilyKind::Qm1OneWeight, "qm1-one-weight"},
    {FamilyKind::FromCode, "from-code"},
};

bool needs_odd_m(FamilyKind k) { return k == FamilyKind::V1 || k == FamilyKind::V4; }
bool needs_even_m(FamilyKind k) { return k == FamilyKind::V2 || k == FamilyKind::V5; }

Fq coordinate(const FieldCtx& ctx, const TraceTerm& t, Fqm a, std::uint64_t l)
{
    if (a.is_zero()) {
        return Fq::zero();
    }
    const std::uint64_t group = ctx.qm() - 1;
    Fqm x = ctx.ext().mul(a, ctx.alpha_pow(mul_mod(t.exponent % group, l % group, group)));
    if (t.degree == ctx.m()) {
        return ctx.trace(x);
    }
    return *ctx.descend(ctx.relative_trace(x, t.degree));
}

// GF(q)-basis 1, w, ..., w^{d-1} of GF(q^d), w a generator of GF(q^d)*.
std::vector<Fqm> subfield_basis(const FieldCtx& ctx, std::uint32_t d)
{
    const std::uint64_t group = ctx.qm() - 1;
    const std::uint64_t step = group / (ipow(ctx.q(), d) - 1);
    std::vector<Fqm> basis;
    for (std::uint32_t i = 0; i < d; ++i) {
        basis.push_back(ctx.alpha_pow(mul_mod(step, i, group)));
    }
    return basis;
}

} // namespace

const char* family_name(FamilyKind kind)
{
    for (const auto& kn : kNames) {
        if (kn.kind == kind) {
            return kn.name;
        }
    }
    return "?";
}

std::optional<FamilyKind> parse_family(const std::string& name)
{
    for (const auto& kn : kNames) {
        if (name == kn.name) {
            return kn.kind;
        }
    }
    if (name == "HAT_D1" || name == "hat-d1") {
        return FamilyKind::HatD1;
    }
    if (name == "QM1" || name == "QM1_ONEWEIGHT") {
        return FamilyKind::Qm1OneWeight;
    }
    return std::nullopt;
}

std::uint64_t TraceFamily::message_dimension() const
{
    std::uint64_t k = constant ? 1 : 0;
    for (const auto& t : terms) {
        k += t.degree;
    }
    return k;
}

TraceFamily build_family(FamilyKind kind, const FieldCtx& ctx)
{
    const std::uint64_t q = ctx.q();
    const std::uint32_t m = ctx.m();
    const std::uint64_t group = ctx.qm() - 1;
    if (kind == FamilyKind::FromCode) {
        throw Error(Errc::InvalidArgument, "use family_from_code for code-derived families");
    }
    if (needs_odd_m(kind) && m % 2 == 0) {
        throw Error(Errc::KindParityMismatch, std::string(family_name(kind)) + " needs odd m");
    }
    if (needs_even_m(kind) && m % 2 == 1) {
        throw Error(Errc::KindParityMismatch, std::string(family_name(kind)) + " needs even m");
    }

    TraceFamily fam{kind, ctx};
    fam.kind = kind;
    fam.ctx = ctx;

    if (kind == FamilyKind::Qm1OneWeight) {
        const auto lead = largest_leader_qm1(q, m);
        fam.length = ctx.subfield_stride();
        if (lead.case_id == 'i' || (lead.case_id == 'j' && q % 2 == 0)) {
            fam.terms.push_back({m, reduce_mod(-static_cast<std::int64_t>(mul_mod(q - 1, lead.delta, group)), group)});
        } else if (lead.case_id == 'j') {
            const std::uint32_t h = m / 2;
            fam.terms.push_back({h, (q - 1) / 2 * (ipow(q, h) + 1)});
        } else {
            throw Error(Errc::UnsupportedParams, "one-weight family needs residue b in {0, 1}");
        }
        return fam;
    }

    if (q % 2 == 0) {
        throw Error(Errc::EvenQ, "lambda = 2 families need odd q");
    }
    const bool odd = m % 2 == 1;
    const std::uint32_t h = m / 2;
    fam.length = kind == FamilyKind::V3 ? ctx.subfield_stride() : group / 2;

    switch (kind) {
    case FamilyKind::V1:
    case FamilyKind::V2:
    case FamilyKind::V3:
    case FamilyKind::V4:
    case FamilyKind::V5:
        if (odd) {
            if (m < 3) {
                throw Error(Errc::UnsupportedParams, "odd-m family needs m >= 3");
            }
            fam.terms.push_back({m, ipow(q, (m - 1) / 2) + 1});
            fam.terms.push_back({m, ipow(q, (m - 3) / 2) + 1});
        } else {
            fam.terms.push_back({h, ipow(q, h) + 1});
            fam.terms.push_back({m, ipow(q, h - 1) + 1});
        }
        fam.constant = kind == FamilyKind::V4 || kind == FamilyKind::V5;
        break;
    case FamilyKind::HatD1:
    case FamilyKind::CDelta1:
        if (odd) {
            fam.terms.push_back({m, ipow(q, m - 1) + ipow(q, (m - 1) / 2)});
        } else {
            fam.terms.push_back({h, ipow(q, h) + 1});
        }
        fam.constant = kind == FamilyKind::CDelta1;
        break;
    default:
        break;
    }
    return fam;
}

BchDescriptor family_code_descriptor(FamilyKind kind, std::uint64_t q, std::uint32_t m)
{
    BchDescriptor d;
    d.q = q;
    d.m = m;
    switch (kind) {
    case FamilyKind::HatD1:
    case FamilyKind::CDelta1: {
        const auto ll = largest_leaders_half(q, m);
        d.lambda = 2;
        d.delta = ll.delta1;
        d.hat = kind == FamilyKind::HatD1;
        return d;
    }
    case FamilyKind::V1:
    case FamilyKind::V2:
    case FamilyKind::V4:
    case FamilyKind::V5: {
        const auto ll = largest_leaders_half(q, m);
        d.lambda = 2;
        d.delta = ll.delta2;
        d.hat = kind == FamilyKind::V1 || kind == FamilyKind::V2;
        return d;
    }
    case FamilyKind::Qm1OneWeight: {
        const auto lead = largest_leader_qm1(q, m);
        d.lambda = q - 1;
        d.delta = lead.delta;
        d.hat = true;
        return d;
    }
    default:
        throw Error(Errc::UnsupportedParams, std::string(family_name(kind)) + " is not a BCH code");
    }
}

TraceFamily family_from_code(const FieldCtx& ctx, const BchDescriptor& desc)
{
    desc.validate();
    CosetSpace space(desc.q, desc.m, desc.lambda);
    const std::uint64_t group = ctx.qm() - 1;
    TraceFamily fam{FamilyKind::FromCode, ctx};
    fam.kind = FamilyKind::FromCode;
    fam.ctx = ctx;
    fam.length = space.n();
    for (auto i : nonzero_leaders(space, desc)) {
        if (i == 0) {
            fam.constant = true;
            continue;
        }
        const auto e = reduce_mod(-static_cast<std::int64_t>(mul_mod(desc.lambda, i, group)), group);
        fam.terms.push_back({space.coset_size(i), e});
    }
    return fam;
}

std::vector<std::uint8_t> evaluate(const TraceFamily& fam, const Message& msg)
{
    if (msg.coeffs.size() != fam.terms.size()) {
        throw Error(Errc::InvalidArgument, "message arity does not match family");
    }
    const auto& ctx = fam.ctx;
    const auto& F = ctx.sub();
    std::vector<std::uint8_t> word(fam.length);
    for (std::uint64_t l = 0; l < fam.length; ++l) {
        Fq acc = fam.constant ? msg.constant : Fq::zero();
        for (std::size_t j = 0; j < fam.terms.size(); ++j) {
            acc = F.add(acc, coordinate(ctx, fam.terms[j], msg.coeffs[j], l));
        }
        word[l] = static_cast<std::uint8_t>(F.label(acc));
    }
    return word;
}

GeneratorMatrix family_generator_matrix(const TraceFamily& fam)
{
    const auto& ctx = fam.ctx;
    const std::uint64_t group = ctx.qm() - 1;
    GeneratorMatrix G;
    G.length = fam.length;
    for (std::size_t j = 0; j < fam.terms.size(); ++j) {
        const auto& t = fam.terms[j];
        if (ctx.m() % t.degree != 0 || mul_mod(t.exponent, ipow(ctx.q(), t.degree) - 1, group) != 0) {
            throw Error(Errc::InvalidArgument, "term exponent does not land in GF(q^" + std::to_string(t.degree) + ")");
        }
        for (Fqm b : subfield_basis(ctx, t.degree)) {
            Message msg;
            msg.coeffs.assign(fam.terms.size(), Fqm::zero());
            msg.coeffs[j] = b;
            TraceFamily single = fam;
            single.constant = false;
            G.rows.push_back(evaluate(single, msg));
        }
    }
    if (fam.constant) {
        G.rows.emplace_back(fam.length, static_cast<std::uint8_t>(1));
    }
    return G;
}

WeightDistribution enumerate_weights(const TraceFamily& fam, const EnumerationOptions& opts)
{
    SmallFieldTables T(fam.ctx.sub());
    auto G = family_generator_matrix(fam);
    const auto r = matrix_rank(T, G);
    if (r != G.rows.size()) {
        throw Error(Errc::InvalidArgument, "family generator rows are dependent (rank " + std::to_string(r) + " of " +
                                               std::to_string(G.rows.size()) + ")");
    }
    return enumerate_weight_distribution(T, G, opts);
}

EquivalenceWitness equivalence_witness(const TraceFamily& code, const TraceFamily& fam)
{
    EquivalenceWitness w;
    const auto& ctx = code.ctx;
    const std::uint64_t group = ctx.qm() - 1;
    if (code.constant != fam.constant || code.terms.size() != fam.terms.size() || code.length != fam.length) {
        w.detail = "shape differs";
        return w;
    }
    std::vector<bool> used(code.terms.size(), false);
    for (const auto& ft : fam.terms) {
        bool matched = false;
        for (std::size_t c = 0; c < code.terms.size() && !matched; ++c) {
            const auto& ct = code.terms[c];
            if (used[c] || ct.degree != ft.degree) {
                continue;
            }
            for (std::uint32_t j = 0; j < ctx.m(); ++j) {
                if (mul_mod(pow_mod(ctx.q(), j, group), ct.exponent, group) == ft.exponent % group) {
                    used[c] = matched = true;
                    w.terms.push_back({WitnessKind::Frobenius, static_cast<std::uint32_t>(c), j, {}});
                    break;
                }
            }
        }
        if (!matched && fam.terms.size() == 1) {
            // alpha^{e l}, l < length, lists the subgroup <alpha^e> length/ord times.
            const auto& ct = code.terms[0];
            const std::uint64_t gc = std::gcd(ct.exponent % group, group);
            const std::uint64_t gf = std::gcd(ft.exponent % group, group);
            const std::uint64_t ord = group / gc;
            if (gc != gf || ct.degree != ft.degree || fam.length % ord != 0) {
                break;
            }
            std::vector<std::vector<std::uint64_t>> slots(ord);
            for (std::uint64_t l = 0; l < fam.length; ++l) {
                slots[mul_mod(ft.exponent % group, l, group) / gf].push_back(l);
            }
            std::vector<std::size_t> next(ord, 0);
            std::vector<std::uint64_t> perm(fam.length);
            bool fits = true;
            for (std::uint64_t l = 0; l < code.length && fits; ++l) {
                const std::uint64_t v = mul_mod(ct.exponent % group, l, group) / gc;
                if (next[v] >= slots[v].size()) {
                    fits = false;
                } else {
                    perm[l] = slots[v][next[v]++];
                }
            }
            std::vector<std::uint64_t> sorted = perm;
            std::sort(sorted.begin(), sorted.end());
            for (std::uint64_t l = 0; fits && l < sorted.size(); ++l) {
                fits = sorted[l] == l;
            }
            for (std::uint64_t l = 0; fits && l < code.length; ++l) {
                fits = mul_mod(ct.exponent % group, l, group) == mul_mod(ft.exponent % group, perm[l], group);
            }
            if (fits) {
                matched = true;
                w.terms.push_back({WitnessKind::Permutation, 0, 0, std::move(perm)});
            }
        }
        if (!matched) {
            w.detail = "no witness for exponent " + std::to_string(ft.exponent);
            return w;
        }
    }
    w.ok = w.terms.size() == fam.terms.size();
    if (!w.ok && w.detail.empty()) {
        w.detail = "no witness";
    }
    return w;
}

const char* concat_name(ConcatKind kind)
{
    switch (kind) {
    case ConcatKind::HatD1Even:
        return "HAT_D1_even";
    case ConcatKind::V3FromV2:
        return "V3_from_V2";
    case ConcatKind::Qm1:
        return "QM1";
    }
    return "?";
}

bool concat_structure_check(const FieldCtx& ctx, ConcatKind kind)
{
    TraceFamily longf{FamilyKind::FromCode, ctx};
    TraceFamily shortf{FamilyKind::FromCode, ctx};
    // scale[i]: GF(q) factor applied to block i
    std::vector<Fq> scale;
    const auto& F = ctx.sub();
    switch (kind) {
    case ConcatKind::HatD1Even: {
        if (ctx.m() % 2 != 0) {
            throw Error(Errc::KindParityMismatch, "HAT_D1 concatenation needs even m");
        }
        longf = build_family(FamilyKind::HatD1, ctx);
        shortf = longf;
        shortf.length = ipow(ctx.q(), ctx.m() / 2) - 1;
        scale.assign(longf.length / shortf.length, F.one());
        break;
    }
    case ConcatKind::V3FromV2: {
        longf = build_family(ctx.m() % 2 ? FamilyKind::V1 : FamilyKind::V2, ctx);
        shortf = build_family(FamilyKind::V3, ctx);
        // gamma = alpha^N generates GF(q)*; block i is scaled by gamma^{2i}
        const Fq gamma = *ctx.descend(ctx.alpha_pow(ctx.subfield_stride()));
        for (std::uint64_t i = 0; i < (ctx.q() - 1) / 2; ++i) {
            scale.push_back(F.pow(gamma, 2 * i));
        }
        break;
    }
    case ConcatKind::Qm1: {
        longf = build_family(FamilyKind::Qm1OneWeight, ctx);
        if (longf.terms[0].degree != ctx.m() / 2 || ctx.m() % 2 != 0) {
            throw Error(Errc::KindParityMismatch, "concatenation form applies to residue b=1 with odd q");
        }
        shortf = longf;
        shortf.length = 2 * (ipow(ctx.q(), ctx.m() / 2) - 1) / (ctx.q() - 1);
        scale.assign(longf.length / shortf.length, F.one());
        break;
    }
    }
    if (shortf.length * scale.size() != longf.length) {
        return false;
    }
    auto rows_long = family_generator_matrix(longf).rows;
    auto rows_short = family_generator_matrix(shortf).rows;
    rows_long.emplace_back(longf.length, 0);
    rows_short.emplace_back(shortf.length, 0);
    for (std::size_t r = 0; r < rows_long.size(); ++r) {
        for (std::size_t blk = 0; blk < scale.size(); ++blk) {
            for (std::uint64_t l = 0; l < shortf.length; ++l) {
                const Fq expect = F.mul(scale[blk], F.from_label(rows_short[r][l]));
                if (rows_long[r][blk * shortf.length + l] != F.label(expect)) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace bchlab
