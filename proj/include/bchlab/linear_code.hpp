#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bchlab/galois_field.hpp"
#include "bchlab/int_math.hpp"

namespace bchlab {

// Dense addition/multiplication tables of GF(q) over subfield labels.
class SmallFieldTables {
public:
    explicit SmallFieldTables(const Subfield& F);

    std::uint32_t q() const { return q_; }
    std::uint8_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
    std::uint8_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
    std::uint8_t neg(std::uint32_t a) const { return neg_[a]; }
    std::uint8_t inv(std::uint32_t a) const { return inv_[a]; }

private:
    std::uint32_t q_;
    std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

// Rows of subfield labels; all rows share one length.
struct GeneratorMatrix {
    std::size_t length = 0;
    std::vector<std::vector<std::uint8_t>> rows;
};

std::size_t matrix_rank(const SmallFieldTables& T, GeneratorMatrix G);

class WeightDistribution {
public:
    WeightDistribution() = default;
    WeightDistribution(std::uint64_t length, std::uint64_t k) : length_(length), k_(k) {}

    void add(std::uint64_t weight, const BigInt& freq);
    std::uint64_t length() const { return length_; }
    std::uint64_t k() const { return k_; }
    const std::map<std::uint64_t, BigInt>& entries() const { return entries_; }
    BigInt frequency(std::uint64_t w) const;
    BigInt total() const;
    // Smallest nonzero weight with positive frequency; 0 if none.
    std::uint64_t min_distance() const;
    std::size_t nonzero_weight_count() const;
    // "1+26z^7+..."
    std::string enumerator() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

private:
    std::uint64_t length_ = 0;
    std::uint64_t k_ = 0;
    std::map<std::uint64_t, BigInt> entries_;
};

struct EnumerationOptions {
    std::uint64_t max_codewords = 10'000'000;
    unsigned threads = 1;
};

// Exhaustive weight distribution of the row space of G (rows must be
// independent). Codewords are visited by a q-ary digit walk that adds one
// scaled row per step and tracks weight incrementally.
WeightDistribution enumerate_weight_distribution(const SmallFieldTables& T, const GeneratorMatrix& G,
                                                 const EnumerationOptions& opts = {});

} // namespace bchlab
