#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace bchlab {

struct CosetRecord {
    std::uint64_t leader = 0;
    std::uint32_t size = 0;
    std::vector<std::uint64_t> members;  // sorted; may be empty when not requested
};

// q-cyclotomic cosets modulo n = (q^m - 1) / lambda.
class CosetSpace {
public:
    CosetSpace(std::uint64_t q, std::uint32_t m, std::uint64_t lambda);

    std::uint64_t q() const { return q_; }
    std::uint32_t m() const { return m_; }
    std::uint64_t lambda() const { return lambda_; }
    std::uint64_t n() const { return n_; }

    std::uint64_t times_q(std::uint64_t i) const { return static_cast<std::uint64_t>((static_cast<unsigned __int128>(i) * q_) % n_); }
    // [a]_n
    std::uint64_t reduce(std::int64_t a) const;

    CosetRecord coset_of(std::uint64_t i, bool with_members = true) const;
    // Orbit walk with early exit on the first smaller member.
    bool is_leader(std::uint64_t i) const;
    std::uint32_t coset_size(std::uint64_t i) const;
    std::uint64_t leader_of(std::uint64_t i) const;
    // q-adic digits of i, m of them, least significant first.
    std::vector<std::uint32_t> digits(std::uint64_t i) const;

private:
    void check(std::uint64_t i) const;

    std::uint64_t q_;
    std::uint32_t m_;
    std::uint64_t lambda_;
    std::uint64_t n_;
};

struct LeaderScan {
    std::uint64_t begin = 0;
    std::vector<std::uint8_t> leader;  // per index in [begin, end)
    std::vector<std::uint8_t> size;

    bool is_leader(std::uint64_t i) const { return leader[i - begin] != 0; }
    std::uint32_t coset_size(std::uint64_t i) const { return size[i - begin]; }
    std::uint64_t end() const { return begin + leader.size(); }
};

// Full orbits for every index in [begin, end); the ground truth for every
// closed form in this module. Work is split across `threads` workers.
LeaderScan bruteforce_leader_scan(const CosetSpace& space, std::uint64_t begin, std::uint64_t end,
                                  unsigned threads = 1, std::uint64_t cap = 10'000'000);

// All coset leaders in increasing order, with sizes.
std::vector<CosetRecord> all_leaders(const CosetSpace& space, bool with_members = false,
                                     std::uint64_t cap = 10'000'000);

bool leader_digit_conditions(const CosetSpace& space, std::uint64_t i);

struct NonLeaderSets {
    std::uint32_t h = 0;
    std::vector<std::uint64_t> delta0, delta1, delta2;  // sorted
    std::vector<std::uint64_t> delta;                   // size-h indices, sorted
    std::uint64_t bound = 0;                            // (q^{h+1} - 1) / lambda

    bool is_nonleader(std::uint64_t i) const;
    bool has_half_size(std::uint64_t i) const;
};

NonLeaderSets nonleader_sets_even_m(const CosetSpace& space);
std::uint64_t smallest_nonleader_even_m(const CosetSpace& space);
// Smallest i not divisible by q that is not a leader, by scan.
std::uint64_t smallest_nonleader_scan(const CosetSpace& space);

struct LargestLeadersHalf {
    std::uint64_t delta1 = 0, delta2 = 0;
    std::optional<std::uint64_t> delta3;
    std::uint32_t size1 = 0, size2 = 0, size3 = 0;
};

// lambda = 2, q odd. delta3 is filled only when want_delta3 and m >= 6.
LargestLeadersHalf largest_leaders_half(std::uint64_t q, std::uint32_t m, bool want_delta3 = false);

struct LargestLeaderQm1 {
    std::uint64_t delta = 0;
    std::uint32_t size = 0;
    char case_id = '?';  // 'i': b = 0, 'j': b = 1, 'k': b = q - 2
    std::uint64_t a = 0;
    std::uint64_t b = 0;
};

// lambda = q - 1, q > 3, m >= q, residue b of m - 1 mod q - 1 in {0, 1, q - 2}.
LargestLeaderQm1 largest_leader_qm1(std::uint64_t q, std::uint32_t m);

const char* qm1_residue_name(char case_id);

} // namespace bchlab
