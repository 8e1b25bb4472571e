#include "bchlab/field_ctx.hpp"

#include <numeric>
#include <string>

#include "bchlab/error.hpp"
#include "bchlab/int_math.hpp"

namespace bchlab {

namespace {

constexpr std::uint32_t kNoTrace = 0xFFFFFFFFu;

} // namespace

FieldCtx build_field_ctx(std::uint32_t p, std::uint32_t s, std::uint32_t m, const FieldOptions& opts)
{
    if (!is_prime(p)) {
        throw Error(Errc::NotPrime, std::to_string(p));
    }
    if (s == 0 || m == 0) {
        throw Error(Errc::InvalidArgument, "s and m must be positive");
    }
    const std::uint32_t total = s * m;
    if (total > 63 || ipow(p, total) > opts.max_order) {
        throw Error(Errc::SizeExceeded, std::to_string(p) + "^" + std::to_string(total) + " exceeds field cap");
    }
    const std::uint64_t q = ipow(p, s);
    const std::uint64_t qm = ipow(p, total);

    Subfield sub(p, s, find_primitive_polynomial(p, s, opts.sub_poly_index));
    ExtensionField ext(p, total, find_primitive_polynomial(p, total, opts.ext_poly_index));

    auto impl = std::make_shared<FieldCtx::Impl>(FieldCtx::Impl{p, s, m, q, qm, (qm - 1) / (q - 1), std::move(sub), std::move(ext), 1, 1, {}, {}, {}});
    const std::uint64_t group = qm - 1;
    const std::uint64_t stride = impl->stride;

    // Locate the root alpha^{stride * j0} of the subfield's defining polynomial.
    const auto& f = impl->sub.primitive_polynomial();
    bool found = false;
    for (std::uint32_t j = 1; j < q - 1 || (q == 2 && j == 1); ++j) {
        if (std::gcd<std::uint64_t>(j, q - 1) != 1) {
            continue;
        }
        Fqm root = impl->ext.power_of_generator(stride * j);
        Fqm acc = Fqm::zero();
        Fqm pw = impl->ext.one();
        for (std::uint32_t c : f) {
            acc = impl->ext.add(acc, impl->ext.mul(impl->ext.from_int(c), pw));
            pw = impl->ext.mul(pw, root);
        }
        if (acc.is_zero()) {
            impl->j0 = j;
            found = true;
            break;
        }
    }
    if (!found) {
        throw Error(Errc::NoPrimitivePolyFound, "subfield generator not located in extension");
    }
    impl->j0_inv = q == 2 ? 1 : static_cast<std::uint32_t>(inverse_mod(impl->j0, q - 1));

    // Tr_q^{q^m} and Tr_p^{q^m} tables, both by direct Frobenius sums.
    const auto& E = impl->ext;
    impl->trace_q.assign(group, kNoTrace);
    impl->trace_p_ext.assign(group, 0);
    for (std::uint64_t e = 0; e < group; ++e) {
        Fqm x = Fqm::from_exponent(static_cast<std::uint32_t>(e));
        Fqm acc = Fqm::zero();
        Fqm y = x;
        for (std::uint32_t j = 0; j < m; ++j) {
            acc = E.add(acc, y);
            y = E.pow(y, q);
        }
        impl->trace_q[e] = acc.raw();
        impl->trace_p_ext[e] = static_cast<std::uint8_t>(E.absolute_trace(x));
    }
    const auto& S = impl->sub;
    impl->trace_p_sub.assign(q - 1, 0);
    for (std::uint64_t e = 0; e + 1 < q; ++e) {
        impl->trace_p_sub[e] = static_cast<std::uint8_t>(S.absolute_trace(Fq::from_exponent(static_cast<std::uint32_t>(e))));
    }
    return FieldCtx(std::move(impl));
}

FieldCtx build_field_ctx_q(std::uint64_t q, std::uint32_t m, const FieldOptions& opts)
{
    auto pp = as_prime_power(q);
    if (!pp) {
        throw Error(Errc::NotPrime, "q=" + std::to_string(q) + " is not a prime power");
    }
    return build_field_ctx(pp->p, pp->s, m, opts);
}

Fqm FieldCtx::embed(Fq x) const
{
    if (x.is_zero()) {
        return Fqm::zero();
    }
    const std::uint64_t group = qm() - 1;
    const std::uint64_t base = mul_mod(impl_->stride, impl_->j0, group);
    return ext().power_of_generator(mul_mod(base, x.exponent(), group));
}

std::optional<Fq> FieldCtx::descend(Fqm x) const
{
    if (x.is_zero()) {
        return Fq::zero();
    }
    const std::uint64_t e = x.exponent();
    if (e % impl_->stride != 0) {
        return std::nullopt;
    }
    const std::uint64_t t = e / impl_->stride;
    if (q() == 2) {
        return Fq::from_exponent(0);
    }
    return Fq::from_exponent(static_cast<std::uint32_t>(mul_mod(t, impl_->j0_inv, q() - 1)));
}

Fq FieldCtx::trace(Fqm x) const
{
    if (x.is_zero()) {
        return Fq::zero();
    }
    std::uint32_t r = impl_->trace_q[x.exponent()];
    if (r == kNoTrace) {
        return Fq::zero();
    }
    return *descend(Fqm::from_exponent(r));
}

std::uint32_t FieldCtx::trace_to_prime(Fqm x) const
{
    return x.is_zero() ? 0 : impl_->trace_p_ext[x.exponent()];
}

std::uint32_t FieldCtx::trace_to_prime(Fq x) const
{
    return x.is_zero() ? 0 : impl_->trace_p_sub[x.exponent()];
}

Fqm FieldCtx::frobenius(Fqm x, std::uint32_t j) const
{
    if (x.is_zero()) {
        return x;
    }
    const std::uint64_t group = qm() - 1;
    return ext().power_of_generator(mul_mod(x.exponent(), pow_mod(q(), j, group), group));
}

bool FieldCtx::in_subfield(Fqm x, std::uint32_t d) const
{
    return frobenius(x, d) == x;
}

Fqm FieldCtx::relative_trace(Fqm x, std::uint32_t d) const
{
    if (d == 0 || m() % d != 0) {
        throw Error(Errc::InvalidArgument, "subfield degree " + std::to_string(d) + " does not divide m");
    }
    Fqm acc = Fqm::zero();
    Fqm y = x;
    for (std::uint32_t j = 0; j < d; ++j) {
        acc = ext().add(acc, y);
        y = ext().pow(y, q());
    }
    return acc;
}

int FieldCtx::quadratic_character(Fq x) const
{
    if (p() == 2) {
        throw Error(Errc::EvenCharacteristic, "quadratic character needs odd q");
    }
    if (x.is_zero()) {
        return 0;
    }
    return x.exponent() % 2 == 0 ? 1 : -1;
}

int FieldCtx::quadratic_character(Fqm x) const
{
    if (p() == 2) {
        throw Error(Errc::EvenCharacteristic, "quadratic character needs odd order");
    }
    if (x.is_zero()) {
        return 0;
    }
    return x.exponent() % 2 == 0 ? 1 : -1;
}

} // namespace bchlab
