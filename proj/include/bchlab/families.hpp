#pragma once

#include <utility>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bchlab/bch.hpp"
#include "bchlab/field_ctx.hpp"
#include "bchlab/linear_code.hpp"

namespace bchlab {

enum class FamilyKind { V1, V2, V3, V4, V5, HatD1, CDelta1, Qm1OneWeight, FromCode };

const char* family_name(FamilyKind kind);
std::optional<FamilyKind> parse_family(const std::string& name);

// Coordinate l of a codeword: sum_j Tr_q^{q^{degree_j}}(a_j alpha^{exponent_j * l}) (+ c).
struct TraceTerm {
    std::uint32_t degree = 0;
    std::uint64_t exponent = 0;
};

struct TraceFamily {
    TraceFamily(FamilyKind k, FieldCtx c) : kind(k), ctx(std::move(c)) {}

    FamilyKind kind = FamilyKind::FromCode;
    FieldCtx ctx;
    std::vector<TraceTerm> terms;
    bool constant = false;
    std::uint64_t length = 0;

    std::uint64_t message_dimension() const;
};

struct Message {
    std::vector<Fqm> coeffs;  // coeffs[j] in GF(q^{degree_j})
    Fq constant = Fq::zero();
};

TraceFamily build_family(FamilyKind kind, const FieldCtx& ctx);

// The BCH code a family stands in for; V3 has none (it is a punctured code).
BchDescriptor family_code_descriptor(FamilyKind kind, std::uint64_t q, std::uint32_t m);

// Trace representation of a cyclic BCH code from its nonzeros.
TraceFamily family_from_code(const FieldCtx& ctx, const BchDescriptor& desc);

// Codeword as subfield labels.
std::vector<std::uint8_t> evaluate(const TraceFamily& fam, const Message& msg);

// One row per GF(q)-basis element of each message component.
GeneratorMatrix family_generator_matrix(const TraceFamily& fam);

WeightDistribution enumerate_weights(const TraceFamily& fam, const EnumerationOptions& opts = {});

enum class WitnessKind { Frobenius, Permutation };

struct TermWitness {
    WitnessKind kind = WitnessKind::Frobenius;
    std::uint32_t code_term = 0;
    std::uint32_t frobenius_power = 0;
    // coordinate l of the code term equals coordinate permutation[l] of the family term
    std::vector<std::uint64_t> permutation;
};

struct EquivalenceWitness {
    bool ok = false;
    std::vector<TermWitness> terms;
    std::string detail;
};

// Checks that `fam` has the same weight distribution as `code` term by term:
// either e_fam = q^j e_code mod q^m - 1 (same codeword set), or, for a
// single term, an explicit coordinate permutation carrying one onto the other.
EquivalenceWitness equivalence_witness(const TraceFamily& code, const TraceFamily& fam);

enum class ConcatKind { HatD1Even, V3FromV2, Qm1 };

const char* concat_name(ConcatKind kind);

// Compares the long codeword with the concatenation of scaled short words on
// every generator row and on the zero message; both sides are linear in the
// message, so this covers the whole code.
bool concat_structure_check(const FieldCtx& ctx, ConcatKind kind);

} // namespace bchlab
