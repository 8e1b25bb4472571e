#include "bchlab/bch.hpp"

#include <algorithm>
#include <string>

#include "bchlab/error.hpp"
#include "bchlab/int_math.hpp"

namespace bchlab {

std::uint64_t BchDescriptor::n() const
{
    return (ipow(q, m) - 1) / lambda;
}

void BchDescriptor::validate() const
{
    if (!as_prime_power(q)) {
        throw Error(Errc::NotPrime, "q=" + std::to_string(q) + " is not a prime power");
    }
    if (lambda == 0 || (q - 1) % lambda != 0) {
        throw Error(Errc::NotADivisor, "lambda must divide q-1");
    }
    const std::uint64_t len = n();
    if (delta < 2 || delta > len) {
        throw Error(Errc::BadDelta, "delta=" + std::to_string(delta) + " outside [2, n]");
    }
    if (hat && b != 1) {
        throw Error(Errc::BadDelta, "the hat variant is defined for b = 1 only");
    }
}

std::vector<std::uint64_t> defining_set(const CosetSpace& space, const BchDescriptor& desc)
{
    desc.validate();
    const std::uint64_t n = space.n();
    std::vector<std::uint8_t> in(n, 0);
    for (std::uint64_t j = 0; j + 2 <= desc.delta; ++j) {
        std::uint64_t start = (desc.b + j) % n;
        if (in[start]) {
            continue;
        }
        std::uint64_t x = start;
        do {
            in[x] = 1;
            x = space.times_q(x);
        } while (x != start);
    }
    if (desc.hat) {
        in[0] = 1;
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (in[i]) {
            out.push_back(i);
        }
    }
    return out;
}

std::uint64_t bch_dimension(const CosetSpace& space, const BchDescriptor& desc)
{
    return space.n() - defining_set(space, desc).size();
}

std::vector<std::uint64_t> bch_dimension_sweep(const CosetSpace& space, std::uint64_t max_delta)
{
    const std::uint64_t n = space.n();
    max_delta = std::min(max_delta, n);
    std::vector<std::uint64_t> dims(max_delta + 1, 0);
    std::vector<std::uint8_t> in(n, 0);
    std::uint64_t covered = 0;
    for (std::uint64_t delta = 2; delta <= max_delta; ++delta) {
        const std::uint64_t start = (delta - 1) % n;
        if (!in[start]) {
            std::uint64_t x = start;
            do {
                in[x] = 1;
                ++covered;
                x = space.times_q(x);
            } while (x != start);
        }
        dims[delta] = n - covered;
    }
    return dims;
}

std::vector<std::uint64_t> nonzero_leaders(const CosetSpace& space, const BchDescriptor& desc)
{
    const auto d = defining_set(space, desc);
    std::vector<std::uint8_t> in(space.n(), 0);
    for (auto z : d) {
        in[z] = 1;
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < space.n(); ++i) {
        if (!in[i] && space.is_leader(i)) {
            out.push_back(i);
        }
    }
    return out;
}

BchCode build_bch(const FieldCtx& ctx, const BchDescriptor& desc, const BuildOptions& opts)
{
    desc.validate();
    if (ctx.q() != desc.q || ctx.m() != desc.m) {
        throw Error(Errc::InvalidArgument, "field context does not match descriptor");
    }
    const std::uint64_t n = desc.n();
    if (n > opts.max_length) {
        throw Error(Errc::SizeExceeded, "code length " + std::to_string(n) + " exceeds build cap");
    }
    CosetSpace space(desc.q, desc.m, desc.lambda);
    BchCode code;
    code.desc = desc;
    code.n = n;
    code.defining_set = defining_set(space, desc);
    code.dimension = n - code.defining_set.size();

    const auto& F = ctx.sub();
    Poly g = Poly::constant(F.one());
    std::vector<std::uint8_t> done(n, 0);
    for (auto z : code.defining_set) {
        if (done[z]) {
            continue;
        }
        auto rec = space.coset_of(z);
        for (auto x : rec.members) {
            done[x] = 1;
        }
        g = poly_mul(F, g, poly_from_roots(ctx, n, rec.members));
    }
    if (static_cast<std::uint64_t>(g.degree()) != code.defining_set.size()) {
        throw Error(Errc::InvalidArgument, "generator degree disagrees with defining set");
    }
    code.generator = std::move(g);
    return code;
}

std::uint64_t dim_closed_odd(std::uint64_t q, std::uint32_t m, std::uint64_t lambda, std::uint64_t delta)
{
    if (m < 3 || m % 2 == 0) {
        throw Error(Errc::OutOfProvenRange, "needs odd m >= 3");
    }
    if (lambda == 0 || (q - 1) % lambda != 0) {
        throw Error(Errc::NotADivisor, "lambda must divide q-1");
    }
    if (delta < 2 || delta - 1 > (ipow(q, (m + 1) / 2) - 1) / lambda) {
        throw Error(Errc::OutOfProvenRange, "delta outside the proven range");
    }
    const std::uint64_t n = (ipow(q, m) - 1) / lambda;
    return n - m * ceil_div((delta - 1) * (q - 1), q);
}

std::uint64_t closed_dim_max_delta(std::uint64_t q, std::uint32_t m, std::uint64_t lambda)
{
    if (m % 2 == 1) {
        return (ipow(q, (m + 1) / 2) - 1) / lambda + 1;
    }
    return (ipow(q, m / 2 + 1) - 1) / lambda + 1;
}

ClosedDimension dim_closed_even(std::uint64_t q, std::uint32_t m, std::uint64_t lambda, std::uint64_t delta)
{
    if (m < 4 || m % 2 == 1) {
        throw Error(Errc::OutOfProvenRange, "needs even m >= 4");
    }
    if (lambda == 0 || (q - 1) % lambda != 0) {
        throw Error(Errc::NotADivisor, "lambda must divide q-1");
    }
    if (lambda == 1) {
        throw Error(Errc::LambdaOne, "closed form stated for lambda >= 2");
    }
    const std::uint32_t h = m / 2;
    const std::int64_t qh = static_cast<std::int64_t>(ipow(q, h));
    if (delta < 2 || delta - 1 > (ipow(q, h + 1) - 1) / lambda) {
        throw Error(Errc::OutOfProvenRange, "delta outside the proven range");
    }
    const std::int64_t Q = static_cast<std::int64_t>(q);
    const std::int64_t L = static_cast<std::int64_t>(lambda);
    const std::int64_t M = m;
    const std::int64_t D = static_cast<std::int64_t>(delta);
    const std::int64_t n = static_cast<std::int64_t>((ipow(q, m) - 1) / lambda);
    const std::int64_t dm1 = D - 1;
    const std::int64_t dh = dm1 / qh;
    const std::int64_t d0 = dm1 % Q;
    const std::int64_t dbar = static_cast<std::int64_t>(ceil_div(static_cast<std::uint64_t>(dm1 * (Q - 1)), q));
    const std::int64_t step = (qh - 1) / L;

    // All branch values are accumulated doubled to keep the halves exact.
    std::int64_t two_k = 2 * n - 2 * M * dbar;
    std::string branch;
    if (D <= qh + 1) {
        const std::int64_t eps = (D - 2) * L / (qh - 1);
        if (eps < L / 2) {
            branch = "(i)/eps<floor(lambda/2)";
        } else if (eps < L) {
            two_k += M * (2 * eps - (L - 1));
            branch = "(i)/floor(lambda/2)<=eps<lambda";
        } else {
            two_k += M * (L - 1);
            branch = "(i)/eps=lambda";
        }
    } else if (dh < (Q - 1) / L) {
        const std::int64_t base = M * L * dh * dh;
        const std::int64_t th = (D - 2 - dh * qh) * L / (qh - 1);
        if (D <= dh * qh + dh) {
            two_k += M * (L * dh * dh + 2 * (d0 - dh) + 1);
            branch = "(ii)/a";
        } else if (D <= dh * qh + step + 1) {
            two_k += base;
            branch = "(ii)/b";
        } else {
            const std::int64_t hi = dh * qh + th * step + dh + 1;
            std::int64_t extra = 0;
            if (D <= hi) {
                extra = 2 * M * ((th - 1) * dh + d0 - th * (Q - 1) / L);
                if (2 * th <= L) {
                    branch = "(ii)/c";
                } else {
                    extra += M * (2 * th - L - 1);
                    branch = "(ii)/d";
                }
            } else {
                extra = 2 * M * th * dh;
                if (2 * th < L) {
                    branch = "(ii)/e";
                } else {
                    extra += M * (2 * th - L + 1);
                    branch = "(ii)/f";
                }
            }
            two_k += base + extra;
        }
    } else {
        if (D <= dh * qh + dh) {
            two_k += M * (L * dh * dh + 2 * (d0 - dh) + 1);
            branch = "(iii)/a";
        } else {
            two_k += M * L * dh * dh;
            branch = "(iii)/b";
        }
    }
    if (two_k < 0 || two_k % 2 != 0) {
        throw Error(Errc::InvalidArgument, "closed form produced a non-integer dimension");
    }
    return {static_cast<std::uint64_t>(two_k / 2), branch};
}

GeneratorMatrix code_generator_matrix(const Subfield& F, const BchCode& code)
{
    GeneratorMatrix G;
    G.length = code.n;
    const auto g = code.generator.labels(F);
    for (std::uint64_t i = 0; i < code.dimension; ++i) {
        std::vector<std::uint8_t> row(code.n, 0);
        for (std::size_t j = 0; j < g.size(); ++j) {
            row[i + j] = static_cast<std::uint8_t>(g[j]);
        }
        G.rows.push_back(std::move(row));
    }
    return G;
}

WeightDistribution code_weight_distribution(const FieldCtx& ctx, const BchCode& code, const EnumerationOptions& opts)
{
    SmallFieldTables T(ctx.sub());
    return enumerate_weight_distribution(T, code_generator_matrix(ctx.sub(), code), opts);
}

std::uint64_t min_distance_bruteforce(const FieldCtx& ctx, const BchCode& code, const EnumerationOptions& opts)
{
    return code_weight_distribution(ctx, code, opts).min_distance();
}

bool bch_bound_check(const BchCode& code, std::uint64_t d_actual)
{
    return d_actual >= code.desc.delta;
}

const char* griesmer_name(Griesmer g)
{
    switch (g) {
    case Griesmer::Meets: return "meets";
    case Griesmer::Satisfies: return "satisfies";
    case Griesmer::Violates: return "violates";
    }
    return "?";
}

Griesmer griesmer_check(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q)
{
    if (k == 0) {
        throw Error(Errc::InvalidArgument, "k must be at least 1");
    }
    BigInt sum = 0;
    BigInt qi = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        BigInt term = (BigInt(d) + qi - 1) / qi;
        sum += term;
        qi *= q;
    }
    if (sum == n) {
        return Griesmer::Meets;
    }
    return sum < n ? Griesmer::Satisfies : Griesmer::Violates;
}

} // namespace bchlab
