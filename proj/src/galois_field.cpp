#include "bchlab/galois_field.hpp"

#include <array>
#include <string>

#include "bchlab/error.hpp"
#include "bchlab/int_math.hpp"

namespace bchlab {

namespace {

constexpr std::uint32_t kMaxDegree = 64;

// Multiplicative order of x modulo the monic polynomial with the given low
// coefficients, capped at `cap` steps (returns 0 when not reached).
std::uint64_t order_of_x(std::uint32_t p, std::uint32_t degree, const std::vector<std::uint32_t>& low,
                         std::uint64_t cap)
{
    std::array<std::uint32_t, kMaxDegree> state{};
    state[0] = 1;
    for (std::uint64_t e = 1; e <= cap; ++e) {
        std::uint32_t top = state[degree - 1];
        for (std::uint32_t i = degree - 1; i > 0; --i) {
            state[i] = state[i - 1];
        }
        state[0] = 0;
        if (top != 0) {
            for (std::uint32_t i = 0; i < degree; ++i) {
                state[i] = (state[i] + (p - top) * low[i]) % p;
            }
        }
        bool is_one = state[0] == 1;
        for (std::uint32_t i = 1; is_one && i < degree; ++i) {
            is_one = state[i] == 0;
        }
        if (is_one) {
            return e;
        }
    }
    return 0;
}

} // namespace

std::vector<std::uint32_t> find_primitive_polynomial(std::uint32_t p, std::uint32_t degree, std::uint32_t skip)
{
    if (!is_prime(p)) {
        throw Error(Errc::NotPrime, std::to_string(p));
    }
    if (degree == 0 || degree > kMaxDegree) {
        throw Error(Errc::InvalidArgument, "degree " + std::to_string(degree));
    }
    std::uint64_t group = ipow(p, degree) - 1;
    std::uint64_t candidates = ipow(p, degree);
    std::vector<std::uint32_t> low(degree);
    for (std::uint64_t code = 0; code < candidates; ++code) {
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < degree; ++i) {
            low[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        if (low[0] == 0) {
            continue;
        }
        if (order_of_x(p, degree, low, group) != group) {
            continue;
        }
        if (skip > 0) {
            --skip;
            continue;
        }
        std::vector<std::uint32_t> out = low;
        out.push_back(1);
        return out;
    }
    throw Error(Errc::NoPrimitivePolyFound, "GF(" + std::to_string(p) + "^" + std::to_string(degree) + ")");
}

FieldTables::FieldTables(std::uint32_t p, std::uint32_t degree, std::vector<std::uint32_t> prim_poly)
    : p_(p), degree_(degree), prim_poly_(std::move(prim_poly))
{
    if (!is_prime(p)) {
        throw Error(Errc::NotPrime, std::to_string(p));
    }
    if (prim_poly_.size() != degree + 1 || prim_poly_.back() != 1) {
        throw Error(Errc::InvalidArgument, "defining polynomial must be monic of the field degree");
    }
    std::uint64_t order = ipow(p, degree);
    if (order > (1ull << 31)) {
        throw Error(Errc::SizeExceeded, "field order " + std::to_string(order));
    }
    order_ = static_cast<std::uint32_t>(order);
    const std::uint32_t group = order_ - 1;

    std::vector<std::uint32_t> pw(degree);
    for (std::uint32_t i = 0; i < degree; ++i) {
        pw[i] = static_cast<std::uint32_t>(ipow(p, i));
    }

    exp_.assign(group, 0);
    log_.assign(order_, kZero);
    std::array<std::uint32_t, kMaxDegree> state{};
    state[0] = 1;
    for (std::uint32_t e = 0; e < group; ++e) {
        std::uint32_t label = 0;
        for (std::uint32_t i = 0; i < degree; ++i) {
            label += state[i] * pw[i];
        }
        if (log_[label] != kZero) {
            throw Error(Errc::NoPrimitivePolyFound, "defining polynomial is not primitive");
        }
        exp_[e] = label;
        log_[label] = e;
        std::uint32_t top = state[degree - 1];
        for (std::uint32_t i = degree - 1; i > 0; --i) {
            state[i] = state[i - 1];
        }
        state[0] = 0;
        if (top != 0) {
            for (std::uint32_t i = 0; i < degree; ++i) {
                state[i] = (state[i] + (p - top) * prim_poly_[i]) % p;
            }
        }
    }

    zech_.assign(group, kZero);
    for (std::uint32_t e = 0; e < group; ++e) {
        std::uint32_t label = exp_[e];
        std::uint32_t d0 = label % p;
        std::uint32_t plus_one = d0 + 1 < p ? label + 1 : label + 1 - p;
        zech_[e] = log_[plus_one];
    }
    neg_one_ = p == 2 ? 0 : group / 2;

    int_to_rep_.assign(p, kZero);
    std::uint32_t acc = kZero;
    for (std::uint32_t v = 1; v < p; ++v) {
        acc = add_rep(acc, 0);
        int_to_rep_[v] = acc;
    }
}

std::uint32_t FieldTables::pow_rep(std::uint32_t a, std::uint64_t k) const
{
    if (k == 0) {
        return 0;
    }
    if (a == kZero) {
        return kZero;
    }
    return static_cast<std::uint32_t>(mul_mod(a, k % group_order(), group_order()));
}

std::uint32_t FieldTables::int_rep(std::int64_t v) const
{
    return int_to_rep_[reduce_mod(v, p_)];
}

std::optional<std::uint32_t> FieldTables::prime_value_rep(std::uint32_t a) const
{
    for (std::uint32_t v = 0; v < p_; ++v) {
        if (int_to_rep_[v] == a) {
            return v;
        }
    }
    return std::nullopt;
}

std::uint32_t FieldTables::absolute_trace_rep(std::uint32_t a) const
{
    std::uint32_t acc = kZero;
    std::uint32_t x = a;
    for (std::uint32_t j = 0; j < degree_; ++j) {
        acc = add_rep(acc, x);
        x = pow_rep(x, p_);
    }
    auto v = prime_value_rep(acc);
    if (!v) {
        throw Error(Errc::CoefficientNotInSubfield, "absolute trace left the prime field");
    }
    return *v;
}

} // namespace bchlab
