#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "bchlab/galois_field.hpp"

namespace bchlab {

struct FieldOptions {
    std::uint64_t max_order = 1ull << 24;
    // Index into the ordered list of primitive polynomials (0 = smallest).
    std::uint32_t ext_poly_index = 0;
    std::uint32_t sub_poly_index = 0;
};

// GF(q) inside GF(q^m), q = p^s, both realized over GF(p). Immutable and
// cheap to copy; copies share the tables.
class FieldCtx {
public:
    std::uint32_t p() const { return impl_->p; }
    std::uint32_t s() const { return impl_->s; }
    std::uint32_t m() const { return impl_->m; }
    std::uint64_t q() const { return impl_->q; }
    std::uint64_t qm() const { return impl_->qm; }
    // (q^m - 1) / (q - 1)
    std::uint64_t subfield_stride() const { return impl_->stride; }

    const Subfield& sub() const { return impl_->sub; }
    const ExtensionField& ext() const { return impl_->ext; }

    Fqm alpha_pow(std::uint64_t e) const { return ext().power_of_generator(e); }

    Fqm embed(Fq x) const;
    std::optional<Fq> descend(Fqm x) const;

    // Tr_q^{q^m}
    Fq trace(Fqm x) const;
    // Tr_p^{q^m} as an integer in [0, p)
    std::uint32_t trace_to_prime(Fqm x) const;
    // Tr_p^q as an integer in [0, p)
    std::uint32_t trace_to_prime(Fq x) const;

    // x^{q^j}
    Fqm frobenius(Fqm x, std::uint32_t j) const;
    bool in_subfield(Fqm x, std::uint32_t d) const;
    // Tr_q^{q^d}(x) for x in GF(q^d), d | m; the result lies in the embedded GF(q).
    Fqm relative_trace(Fqm x, std::uint32_t d) const;

    int quadratic_character(Fq x) const;
    int quadratic_character(Fqm x) const;

    std::uint32_t embedding_exponent() const { return impl_->j0; }

    friend FieldCtx build_field_ctx(std::uint32_t p, std::uint32_t s, std::uint32_t m, const FieldOptions& opts);

private:
    struct Impl {
        std::uint32_t p, s, m;
        std::uint64_t q, qm, stride;
        Subfield sub;
        ExtensionField ext;
        std::uint32_t j0 = 1;
        std::uint32_t j0_inv = 1;
        std::vector<std::uint32_t> trace_q;     // by exponent; kZero for 0
        std::vector<std::uint8_t> trace_p_ext;  // by exponent
        std::vector<std::uint8_t> trace_p_sub;  // by exponent
    };
    explicit FieldCtx(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

FieldCtx build_field_ctx(std::uint32_t p, std::uint32_t s, std::uint32_t m, const FieldOptions& opts = {});
// Convenience: q must be a prime power.
FieldCtx build_field_ctx_q(std::uint64_t q, std::uint32_t m, const FieldOptions& opts = {});

} // namespace bchlab
