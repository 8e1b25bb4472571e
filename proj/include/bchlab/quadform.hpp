#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bchlab/cycint.hpp"
#include "bchlab/field_ctx.hpp"
#include "bchlab/int_math.hpp"

namespace bchlab {

enum class FormKind { OddM, EvenM };

// Odd m:  Q(x) = Tr_q^{q^m}(a x^{q^{(m-1)/2}+1} + b x^{q^{(m-3)/2}+1})
// Even m: Q(x) = Tr_q^{q^h}(a x^{q^h+1}) + Tr_q^{q^m}(b x^{q^{h-1}+1}), a in GF(q^h), h = m/2
struct QuadFormSpec {
    FormKind kind = FormKind::OddM;
    Fqm a = Fqm::zero();
    Fqm b = Fqm::zero();
};

FormKind form_kind_for(std::uint32_t m);

Fq evaluate_form(const FieldCtx& ctx, const QuadFormSpec& spec, Fqm x);

// m - dim_q ker g_{a,b}, where g_{a,b} is the linearized polynomial with
// Q(x+y) - Q(x) - Q(y) = Tr(g(x) y). The kernel is found over GF(p).
std::uint32_t quadratic_form_rank(const FieldCtx& ctx, const QuadFormSpec& spec);

// Rank of the Gram matrix B(e_i, e_j) over GF(q) in the basis 1, alpha, ..., alpha^{m-1}.
std::uint32_t quadratic_form_rank_bilinear(const FieldCtx& ctx, const QuadFormSpec& spec);

// sum_x zeta_p^{Tr_p^q(y Q(x))}
CycInt exponential_sum(const FieldCtx& ctx, const QuadFormSpec& spec, Fq y);
CycInt exponential_sum(const FieldCtx& ctx, const QuadFormSpec& spec);

struct ValueEntry {
    std::uint32_t rank = 0;
    CycInt value;
    BigInt multiplicity;
};

struct ValueDistribution {
    std::vector<ValueEntry> entries;  // sorted by (rank desc, value coefficients)

    void add(std::uint32_t rank, const CycInt& value, const BigInt& mult);
    BigInt total() const;
    BigInt multiplicity(std::uint32_t rank, const CycInt& value) const;
    // Multiplicity summed over ranks.
    BigInt value_count(const CycInt& value) const;
    bool operator==(const ValueDistribution& o) const;
};

struct PairOptions {
    unsigned threads = 1;
    // Pair enumeration budget on q^m.
    std::uint64_t max_qm = 250;
};

// T(a, b) and rank for every pair, a running over GF(q^m) (odd m) or GF(q^h) (even m).
struct PairTable {
    FormKind kind = FormKind::OddM;
    std::uint64_t a_count = 0;
    std::uint64_t b_count = 0;
    std::vector<CycInt> values;
    std::vector<std::uint8_t> ranks;

    std::uint64_t index(std::uint64_t ia, std::uint64_t ib) const { return ia * b_count + ib; }
};

// Element of the a-range (index 0 is zero).
Fqm pair_a(const FieldCtx& ctx, FormKind kind, std::uint64_t ia);
// Element of GF(q^m) (index 0 is zero).
Fqm pair_b(const FieldCtx& ctx, std::uint64_t ib);
std::uint64_t pair_index_of(const FieldCtx& ctx, Fqm x);

PairTable t_pair_table(const FieldCtx& ctx, const PairOptions& opts = {});
ValueDistribution t_distribution(const PairTable& table);
ValueDistribution t_distribution(const FieldCtx& ctx, const PairOptions& opts = {});

// Closed-form distribution for the parity of m, values expressed through G_q.
ValueDistribution t_distribution_closed(const FieldCtx& ctx);

struct MomentCheck {
    std::string name;
    CycInt computed;
    BigInt expected;
    bool ok = false;
};

// sum T, sum T^2, sum T^3, sum S^2 with S(a,b) = sum_{y != 0} T(ay, by). Odd m only.
std::vector<MomentCheck> t_moment_check(const FieldCtx& ctx, const PairTable& table);

struct SideConditions {
    BigInt n_plus3;
    BigInt n_minus3;
    BigInt n_plus1;
    BigInt n_minus1;
    BigInt expected_difference;
    bool ok = false;
};

// Counts of the nonzero pairs with T = +-q^{(m+3)/2} (must be 0) and T = +-q^{(m+1)/2}
// (difference must be (q^m-1) q^{(m-1)/2}). Odd m.
SideConditions value_side_conditions(const FieldCtx& ctx, const ValueDistribution& dist);

// sum_x zeta^{Tr(y Q(x))} = eta(y^r) sum_x zeta^{Tr(Q(x))}
bool eta_twist_check(const FieldCtx& ctx, const QuadFormSpec& spec, Fq y);

struct WeightFormulaReport {
    std::uint64_t pairs = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t non_integral = 0;
    bool ok() const { return pairs > 0 && mismatches == 0 && non_integral == 0; }
};

// Zero-count weight of v(a,b) against (q-1)q^{m-1}/2 - T(a,b)/(2q) sum_{y != 0} eta(y^r),
// over every nonzero pair. v is V1 (odd m) or V2 (even m).
WeightFormulaReport weight_formula_check(const FieldCtx& ctx, const PairTable& table, unsigned threads = 1);

} // namespace bchlab
