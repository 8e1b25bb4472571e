#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bchlab/field_ctx.hpp"

namespace bchlab {

// Polynomial over GF(q), lowest degree first, no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Fq> coeffs);

    static Poly constant(Fq c);
    static Poly monomial(Fq c, std::size_t degree);
    // Parse subfield labels (lowest degree first).
    static Poly from_labels(const Subfield& F, const std::vector<std::uint32_t>& labels);

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Fq>& coeffs() const { return c_; }
    Fq coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Fq::zero(); }
    Fq leading() const { return c_.empty() ? Fq::zero() : c_.back(); }

    std::vector<std::uint32_t> labels(const Subfield& F) const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();
    std::vector<Fq> c_;
};

Poly poly_add(const Subfield& F, const Poly& a, const Poly& b);
Poly poly_sub(const Subfield& F, const Poly& a, const Poly& b);
Poly poly_mul(const Subfield& F, const Poly& a, const Poly& b);
Poly poly_scale(const Subfield& F, const Poly& a, Fq c);
std::pair<Poly, Poly> poly_divmod(const Subfield& F, const Poly& a, const Poly& b);
Poly poly_mod(const Subfield& F, const Poly& a, const Poly& b);
Poly poly_monic(const Subfield& F, const Poly& a);
Poly poly_gcd(const Subfield& F, Poly a, Poly b);
Poly poly_lcm(const Subfield& F, const Poly& a, const Poly& b);
Fq poly_eval(const Subfield& F, const Poly& a, Fq x);

// x^n - 1
Poly x_pow_minus_one(const Subfield& F, std::uint64_t n);

// prod over j in C_i of (x - theta^j), theta = alpha^{(q^m-1)/n}.
Poly minimal_polynomial(const FieldCtx& ctx, std::uint64_t n, std::uint64_t i);

// prod over z in roots of (x - theta^z), descended to GF(q).
Poly poly_from_roots(const FieldCtx& ctx, std::uint64_t n, const std::vector<std::uint64_t>& exponents);

// (x^n - 1) / g, exact.
Poly parity_check(const FieldCtx& ctx, std::uint64_t n, const Poly& g);

} // namespace bchlab
