// bchlab: cosets, BCH codes and weight distributions from the command line.
//
// Exit codes: 0 every verdict agrees, 2 some verdict disagrees, 1 usage or
// parameter error.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bchlab/bch.hpp"
#include "bchlab/cosets.hpp"
#include "bchlab/error.hpp"
#include "bchlab/families.hpp"
#include "bchlab/field_ctx.hpp"
#include "bchlab/int_math.hpp"
#include "bchlab/quadform.hpp"
#include "bchlab/report.hpp"
#include "bchlab/repro.hpp"
#include "bchlab/tables.hpp"

namespace {

using namespace bchlab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

struct Common {
    std::uint64_t q = 0;
    std::uint32_t m = 0;
    std::uint64_t lambda = 1;
    std::uint64_t delta = 2;
    std::uint64_t b = 1;
    bool hat = false;
    unsigned threads = 1;
    std::string json_path;
    std::string csv_path;
    std::string max_field;
    bool timing = false;
};

void add_common(CLI::App* app, Common& c)
{
    app->add_option("--q", c.q, "subfield order q (prime power)");
    app->add_option("--m", c.m, "extension degree m");
    app->add_option("--lambda", c.lambda, "lambda dividing q-1; n = (q^m-1)/lambda");
    app->add_option("--delta", c.delta, "designed distance");
    app->add_option("--b", c.b, "first root exponent (1 = narrow sense)");
    app->add_flag("--hat", c.hat, "use the even-like subcode");
    app->add_option("--threads", c.threads, "worker threads (BCHLAB_THREADS overrides)");
    app->add_option("--json", c.json_path, "write the JSON report here ('-' for stdout)");
    app->add_option("--csv", c.csv_path, "write a CSV mirror here ('-' for stdout)");
    app->add_option("--max-field", c.max_field, "skip claims over fields larger than p^k");
    app->add_flag("--timing", c.timing, "record wall-clock time in the manifest");
}

void require(bool cond, const std::string& what)
{
    if (!cond) {
        throw CLI::ValidationError(what);
    }
}

void emit(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        return;
    }
    if (path == "-") {
        std::cout << text;
    } else {
        write_text_file(path, text);
    }
}

std::string verdict_word(bool ok) { return ok ? "OK" : "MISMATCH"; }

class Runner {
public:
    explicit Runner(Common& c, std::string command) : c_(c), start_(std::chrono::steady_clock::now())
    {
        manifest_.command = std::move(command);
    }

    RunManifest& manifest() { return manifest_; }

    // Text goes to stdout unless the JSON report does.
    std::ostream& out() { return c_.json_path == "-" || c_.csv_path == "-" ? sink_ : std::cout; }

    void verdict(const std::string& name, bool ok, const std::string& provenance, const std::string& detail)
    {
        manifest_.verdicts.push_back({name, ok, provenance, detail});
        out() << name << ": " << verdict_word(ok) << " [" << provenance << "] " << detail << "\n";
    }

    int finish(Json payload)
    {
        if (c_.timing) {
            manifest_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        }
        emit(c_.json_path, make_report(manifest_, std::move(payload)).dump(2) + "\n");
        return manifest_.all_ok() ? kExitOk : kExitMismatch;
    }

private:
    Common& c_;
    RunManifest manifest_;
    std::ostringstream sink_;
    std::chrono::steady_clock::time_point start_;
};

Json base_params(const Common& c)
{
    return Json{{"q", c.q}, {"m", c.m}, {"lambda", c.lambda}};
}

// cosets -------------------------------------------------------------------

struct CosetArgs {
    std::optional<unsigned> largest;
    bool smallest_nonleader = false;
    bool members = false;
    std::uint64_t max_members = 2000;
};

int run_cosets(Common& c, const CosetArgs& a)
{
    require(c.q >= 2 && c.m >= 1, "--q and --m are required");
    CosetSpace space(c.q, c.m, c.lambda);
    Runner r(c, "cosets");
    Json params = base_params(c);
    Json payload;
    r.out() << "n = " << space.n() << "\n";

    if (a.largest) {
        params["largest"] = *a.largest;
        require(*a.largest >= 1, "--largest must be positive");
        auto all = all_leaders(space);
        Json rows = Json::array();
        auto compare = [&](const std::string& name, std::size_t rank, std::uint64_t closed, std::uint32_t size) {
            const bool present = all.size() > rank;
            const auto& rec = all[all.size() - 1 - std::min(rank, all.size() - 1)];
            const bool ok = present && rec.leader == closed && rec.size == size;
            r.verdict(name, ok, "closed form vs full scan",
                      std::to_string(closed) + " (size " + std::to_string(size) + "), scan " +
                          (present ? std::to_string(rec.leader) + " (size " + std::to_string(rec.size) + ")" : "n/a"));
            rows.push_back({{"name", name}, {"closed", closed}, {"size", size},
                            {"scan", present ? Json(rec.leader) : Json(nullptr)}});
        };
        if (c.lambda == 2 && c.q % 2 == 1) {
            require(*a.largest <= 3, "--largest takes 1, 2 or 3 for lambda = 2");
            const auto lead = largest_leaders_half(c.q, c.m, *a.largest >= 3);
            compare("delta1", 0, lead.delta1, lead.size1);
            if (*a.largest >= 2) {
                compare("delta2", 1, lead.delta2, lead.size2);
            }
            if (*a.largest >= 3) {
                require(lead.delta3.has_value(), "the third leader closed form needs m >= 6");
                compare("delta3", 2, *lead.delta3, lead.size3);
            }
        } else if (c.lambda == c.q - 1) {
            require(*a.largest == 1, "--largest takes 1 for lambda = q - 1");
            const auto lead = largest_leader_qm1(c.q, c.m);
            r.out() << "residue case " << qm1_residue_name(lead.case_id) << ", a = " << lead.a << ", b = " << lead.b
                    << "\n";
            compare("delta", 0, lead.delta, lead.size);
            payload["case"] = qm1_residue_name(lead.case_id);
        } else {
            throw CLI::ValidationError("--largest needs lambda = 2 (odd q) or lambda = q - 1");
        }
        payload["largest"] = std::move(rows);
    }

    if (a.smallest_nonleader) {
        params["smallest_nonleader"] = true;
        const auto closed = smallest_nonleader_even_m(space);
        const auto scan = smallest_nonleader_scan(space);
        r.verdict("smallest_nonleader", closed == scan, "closed form vs scan",
                  std::to_string(closed) + ", scan " + std::to_string(scan));
        payload["smallest_nonleader"] = {{"closed", closed}, {"scan", scan}};
    }

    if (!a.largest && !a.smallest_nonleader) {
        const bool with_members = a.members && space.n() <= a.max_members;
        const auto all = all_leaders(space, with_members);
        r.out() << all.size() << " cosets\n";
        for (const auto& rec : all) {
            r.out() << "  " << rec.leader << " size " << rec.size;
            if (with_members) {
                r.out() << " {";
                for (std::size_t i = 0; i < rec.members.size(); ++i) {
                    r.out() << (i ? "," : "") << rec.members[i];
                }
                r.out() << "}";
            }
            r.out() << "\n";
        }
        payload = leaders_json(space, all);
    }
    r.manifest().parameters = std::move(params);
    return r.finish(std::move(payload));
}

// bch ----------------------------------------------------------------------

struct BchArgs {
    bool dim_closed = false;
    bool min_distance = false;
};

int run_bch(Common& c, const BchArgs& a)
{
    require(c.q >= 2 && c.m >= 1, "--q and --m are required");
    const FieldCtx ctx = build_field_ctx_q(c.q, c.m);
    BchDescriptor desc{c.q, c.m, c.lambda, c.delta, c.b, c.hat};
    const auto code = build_bch(ctx, desc);
    Runner r(c, "bch");
    r.manifest().fields.push_back(ctx);
    Json params = base_params(c);
    params["delta"] = c.delta;
    params["b"] = c.b;
    params["hat"] = c.hat;
    params["dim_closed"] = a.dim_closed;
    params["min_distance"] = a.min_distance;
    r.manifest().parameters = params;

    r.out() << (c.hat ? "hat-C" : "C") << "(q=" << c.q << ", m=" << c.m << ", lambda=" << c.lambda
            << ", delta=" << c.delta << ", b=" << c.b << "): n = " << code.n << ", k = " << code.dimension << "\n";

    Json payload = code_json(ctx, code);
    std::optional<std::uint64_t> closed_k;
    std::string branch;
    try {
        if (c.b != 1) {
            throw Error(Errc::OutOfProvenRange, "closed form covers narrow-sense codes");
        }
        if (c.m % 2 == 1) {
            closed_k = dim_closed_odd(c.q, c.m, c.lambda, c.delta);
            branch = "odd m";
        } else {
            const auto cd = dim_closed_even(c.q, c.m, c.lambda, c.delta);
            closed_k = cd.k;
            branch = cd.branch;
        }
        if (c.hat) {
            *closed_k -= 1;
        }
    } catch (const Error& e) {
        if (a.dim_closed) {
            throw;
        }
        r.out() << "closed-form dimension: not applicable (" << e.what() << ")\n";
    }
    if (closed_k) {
        r.verdict("dimension", *closed_k == code.dimension, "closed form vs coset union",
                  "k = " + std::to_string(*closed_k) + ", branch " + branch);
        payload["k_closed"] = *closed_k;
        payload["branch"] = branch;
    }
    if (a.min_distance) {
        EnumerationOptions e;
        e.threads = c.threads;
        const auto d = min_distance_bruteforce(ctx, code, e);
        payload["d_bruteforce"] = d;
        r.out() << "d = " << d << " (exhaustive)\n";
        r.verdict("bch_bound", bch_bound_check(code, d), "exhaustive d vs designed distance",
                  "d = " + std::to_string(d) + ", delta = " + std::to_string(c.delta));
        const auto g = griesmer_check(code.n, code.dimension, d, c.q);
        r.out() << "griesmer: " << griesmer_name(g) << "\n";
        payload["griesmer"] = griesmer_name(g);
        r.verdict("griesmer", g != Griesmer::Violates, "Griesmer bound", griesmer_name(g));
    }
    return r.finish(std::move(payload));
}

// weights ------------------------------------------------------------------

struct WeightArgs {
    std::string family;
    bool table = false;
    bool enumerate = false;
    bool verify = false;
};

std::string params_text(const WeightDistribution& w)
{
    return "[" + std::to_string(w.length()) + "," + std::to_string(w.k()) + "," + std::to_string(w.min_distance()) +
           "]";
}

int run_t_distribution(Common& c, Runner& r)
{
    const FieldCtx ctx = build_field_ctx_q(c.q, c.m);
    r.manifest().fields.push_back(ctx);
    PairOptions po;
    po.threads = c.threads;
    const auto table = t_pair_table(ctx, po);
    const auto dist = t_distribution(table);
    const auto closed = t_distribution_closed(ctx);
    r.out() << "rank  value  multiplicity\n";
    for (const auto& e : dist.entries) {
        r.out() << "  " << e.rank << "  " << e.value.to_string() << "  " << e.multiplicity.str() << "\n";
    }
    r.verdict("value_distribution", dist == closed, "pair enumeration vs closed form",
              "total " + dist.total().str());
    Json payload{{"family", "T-dist"}, {"q", c.q}, {"m", c.m}, {"entries", value_distribution_json(dist)},
                 {"closed_form_entries", value_distribution_json(closed)}};
    if (c.m % 2 == 1) {
        Json moments = Json::array();
        for (const auto& mc : t_moment_check(ctx, table)) {
            r.verdict(mc.name, mc.ok, "exact cyclotomic sum vs identity",
                      mc.computed.to_string() + " vs " + mc.expected.str());
            moments.push_back({{"name", mc.name}, {"computed", mc.computed.to_string()},
                               {"expected", mc.expected.str()}, {"ok", mc.ok}});
        }
        payload["moments"] = std::move(moments);
        const auto sc = value_side_conditions(ctx, dist);
        r.verdict("side_conditions", sc.ok, "enumerated value counts",
                  "n(+1,1) - n(-1,1) = " + BigInt(sc.n_plus1 - sc.n_minus1).str());
        const auto eq = weight_formula_check(ctx, table, c.threads);
        r.verdict("weight_formula", eq.ok(), "character-sum weight vs zero count",
                  std::to_string(eq.pairs) + " pairs, " + std::to_string(eq.mismatches) + " mismatches");
    }
    return r.finish(std::move(payload));
}

int run_weights(Common& c, WeightArgs a)
{
    require(c.q >= 2 && c.m >= 1, "--q and --m are required");
    Runner r(c, "weights");
    Json params = base_params(c);
    params.erase("lambda");
    params["family"] = a.family;
    if (!a.table && !a.enumerate) {
        a.verify = true;
    }
    params["mode"] = a.verify ? "verify" : (a.table ? "table" : "enumerate");
    r.manifest().parameters = params;

    if (a.family == "T-dist" || a.family == "t-dist") {
        return run_t_distribution(c, r);
    }
    const auto kind = parse_family(a.family);
    require(kind.has_value() && *kind != FamilyKind::FromCode, "unknown family '" + a.family + "'");

    std::optional<WeightDistribution> closed;
    std::optional<WeightDistribution> enumerated;
    if (a.table || a.verify) {
        closed = closed_form_distribution(*kind, c.q, c.m);
        r.out() << "closed_form " << params_text(*closed) << ": " << closed->enumerator() << "\n";
    }
    if (a.enumerate || a.verify) {
        const FieldCtx ctx = build_field_ctx_q(c.q, c.m);
        r.manifest().fields.push_back(ctx);
        EnumerationOptions e;
        e.threads = c.threads;
        enumerated = enumerate_weights(build_family(*kind, ctx), e);
        r.out() << "enumeration " << params_text(*enumerated) << ": " << enumerated->enumerator() << "\n";
    }

    const std::string name = family_name(*kind);
    Json payload;
    std::string csv;
    if (closed && enumerated) {
        const bool ok = *closed == *enumerated;
        r.out() << (ok ? "MATCH" : "MISMATCH") << " " << params_text(*enumerated) << "\n";
        r.manifest().verdicts.push_back(
            {"weight_distribution", ok, "closed form vs enumeration", params_text(*enumerated)});
        payload = Json{{"closed_form", weights_json(name, c.q, c.m, *closed, "closed_form")},
                       {"enumeration", weights_json(name, c.q, c.m, *enumerated, "enumeration")},
                       {"match", ok}};
        csv = weights_csv(name, c.q, c.m, *closed, "closed_form");
        const auto more = weights_csv(name, c.q, c.m, *enumerated, "enumeration");
        csv += more.substr(more.find('\n') + 1);
    } else if (closed) {
        payload = weights_json(name, c.q, c.m, *closed, "closed_form");
        csv = weights_csv(name, c.q, c.m, *closed, "closed_form");
    } else {
        payload = weights_json(name, c.q, c.m, *enumerated, "enumeration");
        csv = weights_csv(name, c.q, c.m, *enumerated, "enumeration");
    }
    emit(c.csv_path, csv);
    return r.finish(std::move(payload));
}

// repro-all ----------------------------------------------------------------

int run_repro_all(Common& c, const std::string& only)
{
    Runner r(c, "repro-all");
    ReproOptions o;
    o.threads = c.threads;
    if (!c.max_field.empty()) {
        o.max_field = parse_field_size(c.max_field);
    }
    r.manifest().parameters = Json{{"threads", c.threads}, {"max_field", o.max_field}, {"only", only}};

    std::vector<Claim> claims;
    for (auto& cl : claim_registry()) {
        if (only.empty() || cl.id.rfind(only, 0) == 0 || cl.criterion == only) {
            claims.push_back(std::move(cl));
        }
    }
    require(!claims.empty(), "no claim matches '" + only + "'");

    Json rows = Json::array();
    std::size_t pass = 0, fail = 0, skip = 0;
    run_claims(claims, o, [&](const ClaimResult& res) {
        char line[96];
        std::snprintf(line, sizeof line, "%-4s %-28s %s", res.criterion.c_str(), res.id.c_str(),
                      claim_status_name(res.status));
        r.out() << line << "  " << res.detail << "\n";
        r.out().flush();
        pass += res.status == ClaimStatus::Pass;
        fail += res.status == ClaimStatus::Fail;
        skip += res.status == ClaimStatus::Skip;
        if (res.status != ClaimStatus::Skip) {
            r.manifest().verdicts.push_back({res.id, res.status == ClaimStatus::Pass, res.provenance, res.detail});
        }
        Json row{{"id", res.id},
                 {"criterion", res.criterion},
                 {"description", res.description},
                 {"status", claim_status_name(res.status)},
                 {"provenance", res.provenance},
                 {"detail", res.detail}};
        if (c.timing) {
            row["seconds"] = res.seconds;
        }
        rows.push_back(std::move(row));
    });
    r.out() << pass << " PASS, " << fail << " FAIL, " << skip << " SKIP\n";
    return r.finish(Json{{"claims", std::move(rows)}, {"pass", pass}, {"fail", fail}, {"skip", skip}});
}

unsigned env_threads(unsigned fallback)
{
    if (const char* v = std::getenv("BCHLAB_THREADS")) {
        try {
            const unsigned long t = std::stoul(v);
            if (t >= 1 && t <= 1024) {
                return static_cast<unsigned>(t);
            }
        } catch (const std::exception&) {
        }
        std::cerr << "ignoring BCHLAB_THREADS=" << v << "\n";
    }
    return fallback;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"BCH code workbench: cosets, dimensions and weight distributions"};
    app.set_version_flag("--version", std::string(version_string()));
    app.require_subcommand(1);

    Common common;

    auto* cosets = app.add_subcommand("cosets", "cyclotomic coset leaders and leader closed forms");
    add_common(cosets, common);
    CosetArgs cargs;
    cosets->add_option("--largest", cargs.largest, "check the k largest leaders against closed forms");
    cosets->add_flag("--smallest-nonleader", cargs.smallest_nonleader, "smallest non-leader coprime to q (even m)");
    cosets->add_flag("--members", cargs.members, "list coset members");
    cosets->add_option("--max-members", cargs.max_members, "omit members when n exceeds this");

    auto* bch = app.add_subcommand("bch", "construct a BCH code");
    add_common(bch, common);
    BchArgs bargs;
    bch->add_flag("--dim-closed", bargs.dim_closed, "require the closed-form dimension");
    bch->add_flag("--min-distance", bargs.min_distance, "exhaustive minimum distance");

    auto* weights = app.add_subcommand("weights", "weight distributions of the trace families");
    add_common(weights, common);
    WeightArgs wargs;
    weights->add_option("--family", wargs.family, "V1..V5, hat-delta1, C-delta1, qm1-one-weight, T-dist")->required();
    auto* mode = weights->add_option_group("mode");
    mode->add_flag("--table", wargs.table, "closed form only");
    mode->add_flag("--enumerate", wargs.enumerate, "enumeration only");
    mode->add_flag("--verify", wargs.verify, "both, and compare (default)");
    mode->require_option(0, 1);

    auto* repro = app.add_subcommand("repro-all", "run the acceptance grid");
    add_common(repro, common);
    std::string only;
    repro->add_option("--only", only, "restrict to a criterion (AC4) or claim-id prefix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }
    common.threads = env_threads(common.threads);

    try {
        if (cosets->parsed()) {
            return run_cosets(common, cargs);
        }
        if (bch->parsed()) {
            return run_bch(common, bargs);
        }
        if (weights->parsed()) {
            return run_weights(common, wargs);
        }
        return run_repro_all(common, only);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kExitUsage;
}
