#pragma once

#include <cstdint>
#include <string>

#include "bchlab/families.hpp"
#include "bchlab/linear_code.hpp"

namespace bchlab {

// Closed-form weight distribution of a family. Rows with zero frequency are
// dropped and rows that coincide in weight are merged.
WeightDistribution closed_form_distribution(FamilyKind kind, std::uint64_t q, std::uint32_t m);

// Short description of the closed form used, e.g. "four-weight table, odd m".
std::string closed_form_source(FamilyKind kind, std::uint32_t m);

// Minimum distance claimed alongside the distribution, when one is stated.
std::uint64_t closed_form_min_distance(FamilyKind kind, std::uint64_t q, std::uint32_t m);

} // namespace bchlab
