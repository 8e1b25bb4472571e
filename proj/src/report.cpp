#include "bchlab/report.hpp"

#include <fstream>
#include <sstream>

#include "bchlab/error.hpp"

#ifndef BCHLAB_VERSION
#define BCHLAB_VERSION "0.0.0"
#endif

namespace bchlab {

const char* version_string() { return BCHLAB_VERSION; }

Json field_json(const FieldCtx& ctx)
{
    Json j;
    j["p"] = ctx.p();
    j["s"] = ctx.s();
    j["m"] = ctx.m();
    j["prim_poly_q"] = ctx.sub().primitive_polynomial();
    j["prim_poly_qm"] = ctx.ext().primitive_polynomial();
    return j;
}

Json leaders_json(const CosetSpace& space, const std::vector<CosetRecord>& leaders)
{
    Json j;
    j["n"] = space.n();
    j["q"] = space.q();
    j["lambda"] = space.lambda();
    Json arr = Json::array();
    for (const auto& r : leaders) {
        Json e;
        e["leader"] = r.leader;
        e["size"] = r.size;
        if (!r.members.empty()) {
            e["members"] = r.members;
        }
        arr.push_back(std::move(e));
    }
    j["leaders"] = std::move(arr);
    return j;
}

Json code_json(const FieldCtx& ctx, const BchCode& code, std::optional<std::uint64_t> d_bruteforce)
{
    Json j;
    j["q"] = code.desc.q;
    j["m"] = code.desc.m;
    j["lambda"] = code.desc.lambda;
    j["delta"] = code.desc.delta;
    j["b"] = code.desc.b;
    j["hat"] = code.desc.hat;
    j["n"] = code.n;
    j["k"] = code.dimension;
    j["generator"] = code.generator.labels(ctx.sub());
    j["defining_set_size"] = code.defining_set.size();
    if (d_bruteforce) {
        j["d_bruteforce"] = *d_bruteforce;
    } else {
        j["d_bruteforce"] = nullptr;
    }
    return j;
}

Json weights_json(const std::string& family, std::uint64_t q, std::uint32_t m, const WeightDistribution& w,
                  const std::string& source)
{
    Json j;
    j["family"] = family;
    j["q"] = q;
    j["m"] = m;
    j["length"] = w.length();
    j["k"] = w.k();
    Json arr = Json::array();
    for (const auto& [weight, freq] : w.entries()) {
        arr.push_back(Json::array({weight, freq.str()}));
    }
    j["entries"] = std::move(arr);
    j["source"] = source;
    return j;
}

std::string weights_csv(const std::string& family, std::uint64_t q, std::uint32_t m, const WeightDistribution& w,
                        const std::string& source)
{
    std::ostringstream os;
    os << "family,q,m,length,k,weight,frequency,source\n";
    for (const auto& [weight, freq] : w.entries()) {
        os << family << ',' << q << ',' << m << ',' << w.length() << ',' << w.k() << ',' << weight << ',' << freq.str()
           << ',' << source << '\n';
    }
    return os.str();
}

Json value_distribution_json(const ValueDistribution& d)
{
    Json arr = Json::array();
    for (const auto& e : d.entries) {
        Json row;
        row["rank"] = e.rank;
        row["value"] = e.value.to_string();
        row["multiplicity"] = e.multiplicity.str();
        arr.push_back(std::move(row));
    }
    return arr;
}

bool RunManifest::all_ok() const
{
    for (const auto& v : verdicts) {
        if (!v.ok) {
            return false;
        }
    }
    return true;
}

Json RunManifest::to_json() const
{
    Json j;
    j["command"] = command;
    j["parameters"] = parameters;
    Json fs = Json::array();
    for (const auto& f : fields) {
        fs.push_back(field_json(f));
    }
    j["fields"] = std::move(fs);
    j["version"] = version_string();
    if (seconds) {
        j["timing"] = {{"seconds", *seconds}};
    }
    Json vs = Json::array();
    for (const auto& v : verdicts) {
        vs.push_back({{"name", v.name}, {"ok", v.ok}, {"provenance", v.provenance}, {"detail", v.detail}});
    }
    j["verdicts"] = std::move(vs);
    return j;
}

Json make_report(const RunManifest& manifest, Json payload)
{
    Json j;
    j["manifest"] = manifest.to_json();
    j["result"] = std::move(payload);
    return j;
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(Errc::InvalidArgument, "cannot open " + path + " for writing");
    }
    out << text;
    if (!out) {
        throw Error(Errc::InvalidArgument, "write to " + path + " failed");
    }
}

} // namespace bchlab
