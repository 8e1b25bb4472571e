#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bchlab/bch.hpp"
#include "bchlab/cosets.hpp"
#include "bchlab/error.hpp"
#include "bchlab/families.hpp"
#include "bchlab/quadform.hpp"
#include "bchlab/repro.hpp"
#include "bchlab/report.hpp"
#include "bchlab/tables.hpp"

namespace py = pybind11;
using namespace bchlab;

// Structured results cross the boundary as JSON text; the Python side decodes them.
namespace {

FamilyKind family_or_throw(const std::string& name)
{
    const auto kind = parse_family(name);
    if (!kind || *kind == FamilyKind::FromCode) {
        throw Error(Errc::InvalidArgument, "unknown family " + name);
    }
    return *kind;
}

std::string field(std::uint64_t q, std::uint32_t m)
{
    return field_json(build_field_ctx_q(q, m)).dump();
}

std::string leaders(std::uint64_t q, std::uint32_t m, std::uint64_t lambda, bool members)
{
    CosetSpace space(q, m, lambda);
    return leaders_json(space, all_leaders(space, members)).dump();
}

std::string code(std::uint64_t q, std::uint32_t m, std::uint64_t lambda, std::uint64_t delta, std::uint64_t b,
                 bool hat, bool min_distance)
{
    const FieldCtx ctx = build_field_ctx_q(q, m);
    const auto c = build_bch(ctx, {q, m, lambda, delta, b, hat});
    std::optional<std::uint64_t> d;
    if (min_distance) {
        d = min_distance_bruteforce(ctx, c);
    }
    return code_json(ctx, c, d).dump();
}

std::uint64_t dim_closed(std::uint64_t q, std::uint32_t m, std::uint64_t lambda, std::uint64_t delta)
{
    return m % 2 ? dim_closed_odd(q, m, lambda, delta) : dim_closed_even(q, m, lambda, delta).k;
}

std::string weights(const std::string& family, std::uint64_t q, std::uint32_t m, const std::string& source,
                    unsigned threads)
{
    const auto kind = family_or_throw(family);
    if (source == "closed_form") {
        return weights_json(family, q, m, closed_form_distribution(kind, q, m), source).dump();
    }
    if (source == "enumeration") {
        EnumerationOptions opts;
        opts.threads = threads;
        return weights_json(family, q, m, enumerate_weights(build_family(kind, build_field_ctx_q(q, m)), opts), source)
            .dump();
    }
    throw Error(Errc::InvalidArgument, "source must be closed_form or enumeration");
}

std::string t_dist(std::uint64_t q, std::uint32_t m, bool closed, unsigned threads)
{
    const FieldCtx ctx = build_field_ctx_q(q, m);
    if (closed) {
        return value_distribution_json(t_distribution_closed(ctx)).dump();
    }
    PairOptions opts;
    opts.threads = threads;
    return value_distribution_json(t_distribution(ctx, opts)).dump();
}

std::string claims(const std::string& only, std::uint64_t max_field, unsigned threads)
{
    std::vector<Claim> picked;
    for (auto& c : claim_registry()) {
        if (only.empty() || c.criterion == only || c.id.rfind(only, 0) == 0) {
            picked.push_back(std::move(c));
        }
    }
    ReproOptions opts;
    opts.threads = threads;
    opts.max_field = max_field;
    Json out = Json::array();
    for (const auto& r : run_claims(picked, opts)) {
        out.push_back({{"id", r.id},
                       {"criterion", r.criterion},
                       {"status", claim_status_name(r.status)},
                       {"provenance", r.provenance},
                       {"detail", r.detail}});
    }
    return out.dump();
}

} // namespace

PYBIND11_MODULE(_core, mod)
{
    mod.doc() = "bchlab core bindings";
    static py::exception<Error> error_type(mod, "BchlabError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error& e) {
            PyErr_SetString(error_type.ptr(), e.what());
        }
    });

    mod.def("version", [] { return std::string(version_string()); });
    mod.def("field_json", &field, py::arg("q"), py::arg("m"));
    mod.def("leaders_json", &leaders, py::arg("q"), py::arg("m"), py::arg("lam"), py::arg("members") = false);
    mod.def("code_json", &code, py::arg("q"), py::arg("m"), py::arg("lam"), py::arg("delta"), py::arg("b") = 1,
            py::arg("hat") = false, py::arg("min_distance") = false);
    mod.def("dim_closed", &dim_closed, py::arg("q"), py::arg("m"), py::arg("lam"), py::arg("delta"));
    mod.def(
        "largest_leaders_half",
        [](std::uint64_t q, std::uint32_t m) {
            const auto ll = largest_leaders_half(q, m);
            return py::make_tuple(ll.delta1, ll.delta2);
        },
        py::arg("q"), py::arg("m"));
    mod.def(
        "griesmer",
        [](std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q) {
            return std::string(griesmer_name(griesmer_check(n, k, d, q)));
        },
        py::arg("n"), py::arg("k"), py::arg("d"), py::arg("q"));
    mod.def("weights_json", &weights, py::arg("family"), py::arg("q"), py::arg("m"),
            py::arg("source") = "closed_form", py::arg("threads") = 1);
    mod.def("t_distribution_json", &t_dist, py::arg("q"), py::arg("m"), py::arg("closed") = false,
            py::arg("threads") = 1);
    mod.def("claims_json", &claims, py::arg("only") = "", py::arg("max_field") = 0, py::arg("threads") = 1);
}
