#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace bchlab {

struct SubfieldTag {};
struct ExtensionTag {};

// A field element in log form: ZERO, or the exponent e of the generator.
template <typename Tag>
class FieldElem {
public:
    static constexpr std::uint32_t kZeroRep = 0xFFFFFFFFu;

    constexpr FieldElem() = default;

    static constexpr FieldElem zero() { return FieldElem(); }
    static constexpr FieldElem from_exponent(std::uint32_t e) { return FieldElem(e); }

    constexpr bool is_zero() const { return rep_ == kZeroRep; }
    constexpr std::uint32_t exponent() const { return rep_; }
    constexpr std::uint32_t raw() const { return rep_; }

    auto operator<=>(const FieldElem&) const = default;

private:
    constexpr explicit FieldElem(std::uint32_t e) : rep_(e) {}
    std::uint32_t rep_ = kZeroRep;
};

using Fq = FieldElem<SubfieldTag>;
using Fqm = FieldElem<ExtensionTag>;

// Monic primitive polynomial of the given degree over GF(p), coefficients
// lowest degree first (leading 1 included). Candidates are ranked by the
// integer sum c_i p^i over the non-leading coefficients; `skip` selects the
// skip-th primitive one in that order.
std::vector<std::uint32_t> find_primitive_polynomial(std::uint32_t p, std::uint32_t degree,
                                                     std::uint32_t skip = 0);

// Log/exp/Zech tables of GF(p^d). Labels are the polynomial-basis integers
// sum c_i p^i of the residue modulo the defining polynomial.
class FieldTables {
public:
    FieldTables(std::uint32_t p, std::uint32_t degree, std::vector<std::uint32_t> prim_poly);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return degree_; }
    std::uint32_t order() const { return order_; }
    std::uint32_t group_order() const { return order_ - 1; }
    const std::vector<std::uint32_t>& primitive_polynomial() const { return prim_poly_; }

protected:
    std::uint32_t add_rep(std::uint32_t a, std::uint32_t b) const
    {
        if (a == kZero) {
            return b;
        }
        if (b == kZero) {
            return a;
        }
        std::uint32_t d = b >= a ? b - a : b + group_order() - a;
        std::uint32_t z = zech_[d];
        if (z == kZero) {
            return kZero;
        }
        std::uint32_t r = a + z;
        return r >= group_order() ? r - group_order() : r;
    }
    std::uint32_t neg_rep(std::uint32_t a) const
    {
        if (a == kZero) {
            return kZero;
        }
        std::uint32_t r = a + neg_one_;
        return r >= group_order() ? r - group_order() : r;
    }
    std::uint32_t mul_rep(std::uint32_t a, std::uint32_t b) const
    {
        if (a == kZero || b == kZero) {
            return kZero;
        }
        std::uint64_t r = static_cast<std::uint64_t>(a) + b;
        return static_cast<std::uint32_t>(r % group_order());
    }
    std::uint32_t pow_rep(std::uint32_t a, std::uint64_t k) const;
    std::uint32_t label_rep(std::uint32_t a) const { return a == kZero ? 0 : exp_[a]; }
    std::uint32_t rep_of_label(std::uint32_t label) const { return log_[label]; }
    std::uint32_t int_rep(std::int64_t v) const;
    std::optional<std::uint32_t> prime_value_rep(std::uint32_t a) const;
    std::uint32_t absolute_trace_rep(std::uint32_t a) const;

    static constexpr std::uint32_t kZero = 0xFFFFFFFFu;

private:
    std::uint32_t p_;
    std::uint32_t degree_;
    std::uint32_t order_;
    std::vector<std::uint32_t> prim_poly_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> zech_;
    std::uint32_t neg_one_;
    std::vector<std::uint32_t> int_to_rep_;
};

template <typename Tag>
class GaloisField : public FieldTables {
public:
    using Elem = FieldElem<Tag>;

    using FieldTables::FieldTables;

    Elem zero() const { return Elem::zero(); }
    Elem one() const { return Elem::from_exponent(0); }
    Elem generator() const { return Elem::from_exponent(group_order() == 1 ? 0 : 1); }
    Elem power_of_generator(std::uint64_t e) const
    {
        return Elem::from_exponent(static_cast<std::uint32_t>(e % group_order()));
    }

    Elem add(Elem a, Elem b) const { return wrap(add_rep(a.raw(), b.raw())); }
    Elem neg(Elem a) const { return wrap(neg_rep(a.raw())); }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const { return wrap(mul_rep(a.raw(), b.raw())); }
    Elem inv(Elem a) const
    {
        return a.is_zero() ? a : Elem::from_exponent(a.exponent() == 0 ? 0 : group_order() - a.exponent());
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t k) const { return wrap(pow_rep(a.raw(), k)); }

    std::uint32_t label(Elem a) const { return label_rep(a.raw()); }
    Elem from_label(std::uint32_t label) const { return wrap(rep_of_label(label)); }
    // The element v * 1 of the prime subfield.
    Elem from_int(std::int64_t v) const { return wrap(int_rep(v)); }
    // v in [0, p) when a lies in the prime subfield.
    std::optional<std::uint32_t> prime_value(Elem a) const { return prime_value_rep(a.raw()); }
    // Tr from this field down to GF(p), as an integer in [0, p).
    std::uint32_t absolute_trace(Elem a) const { return absolute_trace_rep(a.raw()); }

    bool is_square(Elem a) const { return !a.is_zero() && a.exponent() % 2 == 0; }

private:
    static Elem wrap(std::uint32_t r) { return r == kZero ? Elem::zero() : Elem::from_exponent(r); }
};

using Subfield = GaloisField<SubfieldTag>;
using ExtensionField = GaloisField<ExtensionTag>;

} // namespace bchlab
