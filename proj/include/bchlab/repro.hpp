#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bchlab {

enum class ClaimStatus { Pass, Fail, Skip };
const char* claim_status_name(ClaimStatus s);

struct ReproOptions {
    unsigned threads = 1;
    // Claims touching a field larger than this are skipped; 0 means no limit.
    std::uint64_t max_field = 0;
    std::uint64_t max_codewords = 10'000'000;
};

struct ClaimOutcome {
    bool ok = false;
    std::string provenance;
    std::string detail;
};

struct Claim {
    std::string id;
    std::string criterion;  // "AC1" .. "AC7"
    std::string description;
    std::uint64_t field_size = 0;  // largest q^m the claim touches
    std::function<ClaimOutcome(const ReproOptions&)> run;
};

struct ClaimResult {
    std::string id;
    std::string criterion;
    std::string description;
    ClaimStatus status = ClaimStatus::Fail;
    std::string provenance;
    std::string detail;
    double seconds = 0.0;
};

// The full acceptance grid, in a fixed order.
std::vector<Claim> claim_registry();

// Runs every claim; exceptions are reported as failures. on_result fires after each claim.
std::vector<ClaimResult> run_claims(const std::vector<Claim>& claims, const ReproOptions& opts,
                                    const std::function<void(const ClaimResult&)>& on_result = {});

// "3^4" or "81".
std::uint64_t parse_field_size(const std::string& text);

} // namespace bchlab
