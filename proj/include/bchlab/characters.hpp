#pragma once

#include <cstdint>
#include <vector>

#include "bchlab/cycint.hpp"
#include "bchlab/error.hpp"
#include "bchlab/field_ctx.hpp"
#include "bchlab/galois_field.hpp"

namespace bchlab {

enum class FieldChoice { Sub, Ext };

// sum over x != 0 of eta(x) zeta_p^{Tr_p(x)}
template <typename Tag>
CycInt gaussian_sum_numeric(const GaloisField<Tag>& F)
{
    if (F.characteristic() == 2) {
        throw Error(Errc::EvenCharacteristic, "Gaussian sum needs odd order");
    }
    const std::uint32_t p = F.characteristic();
    std::vector<std::int64_t> counts(p, 0);
    for (std::uint32_t e = 0; e < F.group_order(); ++e) {
        auto x = FieldElem<Tag>::from_exponent(e);
        counts[F.absolute_trace(x)] += (e % 2 == 0) ? 1 : -1;
    }
    return CycInt::from_counts(p, counts);
}

CycInt gaussian_sum_numeric(const FieldCtx& ctx, FieldChoice which);

// sign * i^i_power * sqrt(q)
struct GaussClosedForm {
    std::uint32_t p = 0;
    std::uint32_t s = 0;
    std::uint64_t q = 0;
    int sign = 1;
    unsigned i_power = 0;
};

GaussClosedForm gaussian_sum_closed(std::uint32_t p, std::uint32_t s);

// Exact squared-modulus and square checks, then a quadrant check to fix the sign.
bool closed_form_matches(const GaussClosedForm& closed, const CycInt& value);

bool quadratic_gauss_identity_check(const Subfield& F, Fq a);

// sum over y in GF(q)* of eta(y^r): q-1 for even r, 0 for odd r.
std::int64_t eta_power_sum(const Subfield& F, std::uint64_t r);

} // namespace bchlab
