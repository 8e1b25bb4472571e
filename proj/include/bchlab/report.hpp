#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bchlab/bch.hpp"
#include "bchlab/cosets.hpp"
#include "bchlab/field_ctx.hpp"
#include "bchlab/linear_code.hpp"
#include "bchlab/quadform.hpp"

namespace bchlab {

using Json = nlohmann::ordered_json;

const char* version_string();

// {p, s, m, prim_poly_q, prim_poly_qm}; coefficients lowest degree first.
Json field_json(const FieldCtx& ctx);

Json leaders_json(const CosetSpace& space, const std::vector<CosetRecord>& leaders);
Json code_json(const FieldCtx& ctx, const BchCode& code, std::optional<std::uint64_t> d_bruteforce = std::nullopt);

// source is "closed_form" or "enumeration".
Json weights_json(const std::string& family, std::uint64_t q, std::uint32_t m, const WeightDistribution& w,
                  const std::string& source);
// Header row plus one row per weight: family,q,m,length,k,weight,frequency,source
std::string weights_csv(const std::string& family, std::uint64_t q, std::uint32_t m, const WeightDistribution& w,
                        const std::string& source);

Json value_distribution_json(const ValueDistribution& d);

struct Verdict {
    std::string name;
    bool ok = false;
    std::string provenance;  // which paths were compared
    std::string detail;
};

struct RunManifest {
    std::string command;
    Json parameters = Json::object();
    std::vector<FieldCtx> fields;
    std::optional<double> seconds;  // only when timing was requested
    std::vector<Verdict> verdicts;

    bool all_ok() const;
    Json to_json() const;
};

// Wraps a payload together with its manifest.
Json make_report(const RunManifest& manifest, Json payload);

void write_text_file(const std::string& path, const std::string& text);

} // namespace bchlab
