#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bchlab/cosets.hpp"
#include "bchlab/field_ctx.hpp"
#include "bchlab/linear_code.hpp"
#include "bchlab/poly.hpp"

namespace bchlab {

struct BchDescriptor {
    std::uint64_t q = 0;
    std::uint32_t m = 0;
    std::uint64_t lambda = 1;
    std::uint64_t delta = 2;
    std::uint64_t b = 1;
    // Extended defining set with C_0 added (the even-like subcode).
    bool hat = false;

    std::uint64_t n() const;
    void validate() const;
};

struct BchCode {
    BchDescriptor desc;
    std::uint64_t n = 0;
    Poly generator;
    std::uint64_t dimension = 0;
    std::vector<std::uint64_t> defining_set;  // sorted
};

// Union of C_{b+j}, 0 <= j <= delta-2, plus {0} when hat.
std::vector<std::uint64_t> defining_set(const CosetSpace& space, const BchDescriptor& desc);

// Coset-union dimension n - |D|, no polynomials involved.
std::uint64_t bch_dimension(const CosetSpace& space, const BchDescriptor& desc);

// dims[delta] for delta in [2, max_delta] (narrow sense, b = 1, no hat),
// computed incrementally; entries below 2 are unused.
std::vector<std::uint64_t> bch_dimension_sweep(const CosetSpace& space, std::uint64_t max_delta);

// Leaders of the cosets outside the defining set (the code's nonzeros).
std::vector<std::uint64_t> nonzero_leaders(const CosetSpace& space, const BchDescriptor& desc);

struct BuildOptions {
    std::uint64_t max_length = 20000;
};

BchCode build_bch(const FieldCtx& ctx, const BchDescriptor& desc, const BuildOptions& opts = {});

std::uint64_t dim_closed_odd(std::uint64_t q, std::uint32_t m, std::uint64_t lambda, std::uint64_t delta);

struct ClosedDimension {
    std::uint64_t k = 0;
    std::string branch;
};

ClosedDimension dim_closed_even(std::uint64_t q, std::uint32_t m, std::uint64_t lambda, std::uint64_t delta);

// Upper end of the delta range covered by dim_closed_odd / dim_closed_even.
std::uint64_t closed_dim_max_delta(std::uint64_t q, std::uint32_t m, std::uint64_t lambda);

// Rows x^i g(x), i < k.
GeneratorMatrix code_generator_matrix(const Subfield& F, const BchCode& code);
WeightDistribution code_weight_distribution(const FieldCtx& ctx, const BchCode& code,
                                            const EnumerationOptions& opts = {});
std::uint64_t min_distance_bruteforce(const FieldCtx& ctx, const BchCode& code, const EnumerationOptions& opts = {});

bool bch_bound_check(const BchCode& code, std::uint64_t d_actual);

enum class Griesmer { Meets, Satisfies, Violates };
const char* griesmer_name(Griesmer g);
Griesmer griesmer_check(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q);

} // namespace bchlab
