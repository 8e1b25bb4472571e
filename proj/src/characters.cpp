#include "bchlab/characters.hpp"

#include <cmath>

#include "bchlab/error.hpp"
#include "bchlab/int_math.hpp"

namespace bchlab {

CycInt gaussian_sum_numeric(const FieldCtx& ctx, FieldChoice which)
{
    return which == FieldChoice::Sub ? gaussian_sum_numeric(ctx.sub()) : gaussian_sum_numeric(ctx.ext());
}

GaussClosedForm gaussian_sum_closed(std::uint32_t p, std::uint32_t s)
{
    if (p == 2) {
        throw Error(Errc::EvenPrime, "Gaussian sum closed form needs odd p");
    }
    if (!is_prime(p)) {
        throw Error(Errc::NotPrime, std::to_string(p));
    }
    GaussClosedForm g;
    g.p = p;
    g.s = s;
    g.q = ipow(p, s);
    g.sign = (s % 2 == 1) ? 1 : -1;
    g.i_power = (p % 4 == 1) ? 0 : s % 4;
    return g;
}

bool closed_form_matches(const GaussClosedForm& closed, const CycInt& value)
{
    if (value.prime() != closed.p) {
        return false;
    }
    const auto q = static_cast<std::int64_t>(closed.q);
    if (value * value.conj() != CycInt::integer(closed.p, q)) {
        return false;
    }
    // (sign i^k sqrt q)^2 = (-1)^k q
    const std::int64_t sq = (closed.i_power % 2 == 0) ? q : -q;
    if (value * value != CycInt::integer(closed.p, sq)) {
        return false;
    }
    // Two candidates remain, +-X; they are 2 sqrt(q) apart.
    const long double r = std::sqrt(static_cast<long double>(q));
    std::complex<long double> expected;
    switch (closed.i_power % 4) {
    case 0: expected = {r, 0}; break;
    case 1: expected = {0, r}; break;
    case 2: expected = {-r, 0}; break;
    default: expected = {0, -r}; break;
    }
    expected *= static_cast<long double>(closed.sign);
    return std::abs(value.to_complex() - expected) < r;
}

bool quadratic_gauss_identity_check(const Subfield& F, Fq a)
{
    if (a.is_zero()) {
        throw Error(Errc::InvalidArgument, "a must be nonzero");
    }
    const std::uint32_t p = F.characteristic();
    std::vector<std::int64_t> counts(p, 0);
    for (std::uint32_t e = 0; e < F.group_order(); ++e) {
        auto x = Fq::from_exponent(e);
        counts[F.absolute_trace(F.mul(a, F.mul(x, x)))] += 1;
    }
    CycInt lhs = CycInt::from_counts(p, counts);
    const int eta = F.is_square(a) ? 1 : -1;
    CycInt rhs = gaussian_sum_numeric(F) * eta - CycInt::integer(p, 1);
    return lhs == rhs;
}

std::int64_t eta_power_sum(const Subfield& F, std::uint64_t r)
{
    if (F.characteristic() == 2) {
        throw Error(Errc::EvenCharacteristic, "eta needs odd q");
    }
    std::int64_t acc = 0;
    for (std::uint32_t e = 0; e < F.group_order(); ++e) {
        auto y = F.pow(Fq::from_exponent(e), r);
        acc += F.is_square(y) ? 1 : -1;
    }
    return acc;
}

} // namespace bchlab
