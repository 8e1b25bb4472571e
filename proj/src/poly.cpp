#include "bchlab/poly.hpp"

#include <string>

#include <algorithm>

#include "bchlab/int_math.hpp"
#include "bchlab/error.hpp"

namespace bchlab {

Poly::Poly(std::vector<Fq> coeffs) : c_(std::move(coeffs))
{
    trim();
}

void Poly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

Poly Poly::constant(Fq c)
{
    return Poly(std::vector<Fq>{c});
}

Poly Poly::monomial(Fq c, std::size_t degree)
{
    std::vector<Fq> v(degree + 1, Fq::zero());
    v[degree] = c;
    return Poly(std::move(v));
}

Poly Poly::from_labels(const Subfield& F, const std::vector<std::uint32_t>& labels)
{
    std::vector<Fq> v;
    v.reserve(labels.size());
    for (auto l : labels) {
        if (l >= F.order()) {
            throw Error(Errc::OutOfRange, "label " + std::to_string(l));
        }
        v.push_back(F.from_label(l));
    }
    return Poly(std::move(v));
}

std::vector<std::uint32_t> Poly::labels(const Subfield& F) const
{
    std::vector<std::uint32_t> out;
    out.reserve(c_.size());
    for (auto c : c_) {
        out.push_back(F.label(c));
    }
    return out;
}

Poly poly_add(const Subfield& F, const Poly& a, const Poly& b)
{
    std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
    std::vector<Fq> v(len);
    for (std::size_t i = 0; i < len; ++i) {
        v[i] = F.add(a.coeff(i), b.coeff(i));
    }
    return Poly(std::move(v));
}

Poly poly_sub(const Subfield& F, const Poly& a, const Poly& b)
{
    std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
    std::vector<Fq> v(len);
    for (std::size_t i = 0; i < len; ++i) {
        v[i] = F.sub(a.coeff(i), b.coeff(i));
    }
    return Poly(std::move(v));
}

Poly poly_mul(const Subfield& F, const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Fq> v(a.coeffs().size() + b.coeffs().size() - 1, Fq::zero());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            v[i + j] = F.add(v[i + j], F.mul(a.coeffs()[i], b.coeffs()[j]));
        }
    }
    return Poly(std::move(v));
}

Poly poly_scale(const Subfield& F, const Poly& a, Fq c)
{
    std::vector<Fq> v = a.coeffs();
    for (auto& x : v) {
        x = F.mul(x, c);
    }
    return Poly(std::move(v));
}

std::pair<Poly, Poly> poly_divmod(const Subfield& F, const Poly& a, const Poly& b)
{
    if (b.is_zero()) {
        throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
    }
    if (a.degree() < b.degree()) {
        return {Poly(), a};
    }
    std::vector<Fq> rem = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Fq> quot(rem.size() - db, Fq::zero());
    const Fq lead_inv = F.inv(b.leading());
    for (std::size_t k = quot.size(); k-- > 0;) {
        Fq c = F.mul(rem[k + db], lead_inv);
        quot[k] = c;
        if (c.is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j <= db; ++j) {
            rem[k + j] = F.sub(rem[k + j], F.mul(c, b.coeffs()[j]));
        }
    }
    rem.resize(db);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_mod(const Subfield& F, const Poly& a, const Poly& b)
{
    return poly_divmod(F, a, b).second;
}

Poly poly_monic(const Subfield& F, const Poly& a)
{
    if (a.is_zero()) {
        return a;
    }
    return poly_scale(F, a, F.inv(a.leading()));
}

Poly poly_gcd(const Subfield& F, Poly a, Poly b)
{
    while (!b.is_zero()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

Poly poly_lcm(const Subfield& F, const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    Poly g = poly_gcd(F, a, b);
    return poly_monic(F, poly_divmod(F, poly_mul(F, a, b), g).first);
}

Fq poly_eval(const Subfield& F, const Poly& a, Fq x)
{
    Fq acc = Fq::zero();
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        acc = F.add(F.mul(acc, x), a.coeffs()[i]);
    }
    return acc;
}

Poly x_pow_minus_one(const Subfield& F, std::uint64_t n)
{
    std::vector<Fq> v(n + 1, Fq::zero());
    v[0] = F.neg(F.one());
    v[n] = F.add(v[n], F.one());
    return Poly(std::move(v));
}

Poly poly_from_roots(const FieldCtx& ctx, std::uint64_t n, const std::vector<std::uint64_t>& exponents)
{
    const auto& E = ctx.ext();
    const std::uint64_t group = ctx.qm() - 1;
    if (n == 0 || group % n != 0) {
        throw Error(Errc::NotADivisor, "n must divide q^m - 1");
    }
    const std::uint64_t lambda = group / n;
    std::vector<Fqm> acc{E.one()};
    for (std::uint64_t z : exponents) {
        Fqm root = E.power_of_generator((z % n) * lambda);
        Fqm neg_root = E.neg(root);
        acc.push_back(Fqm::zero());
        for (std::size_t k = acc.size() - 1; k > 0; --k) {
            acc[k] = E.add(acc[k - 1], E.mul(neg_root, acc[k]));
        }
        acc[0] = E.mul(neg_root, acc[0]);
    }
    std::vector<Fq> out;
    out.reserve(acc.size());
    for (auto c : acc) {
        auto d = ctx.descend(c);
        if (!d) {
            throw Error(Errc::CoefficientNotInSubfield, "product of roots has a coefficient outside GF(q)");
        }
        out.push_back(*d);
    }
    return Poly(std::move(out));
}

Poly minimal_polynomial(const FieldCtx& ctx, std::uint64_t n, std::uint64_t i)
{
    if (n == 0 || i >= n) {
        throw Error(Errc::OutOfRange, "i must lie in [0, n)");
    }
    std::vector<std::uint64_t> members;
    std::uint64_t j = i;
    do {
        members.push_back(j);
        j = mul_mod(j, ctx.q(), n);
    } while (j != i);
    return poly_from_roots(ctx, n, members);
}

Poly parity_check(const FieldCtx& ctx, std::uint64_t n, const Poly& g)
{
    auto [h, r] = poly_divmod(ctx.sub(), x_pow_minus_one(ctx.sub(), n), g);
    if (!r.is_zero()) {
        throw Error(Errc::NotADivisor, "g does not divide x^n - 1");
    }
    return h;
}

} // namespace bchlab
