#include <doctest.h>

#include "bchlab/error.hpp"
#include "bchlab/families.hpp"
#include "bchlab/int_math.hpp"
#include "bchlab/tables.hpp"

using namespace bchlab;

namespace {

const FamilyKind kAll[] = {FamilyKind::V1, FamilyKind::V2, FamilyKind::V3, FamilyKind::V4,
                           FamilyKind::V5, FamilyKind::HatD1, FamilyKind::CDelta1, FamilyKind::Qm1OneWeight};

std::string closed(FamilyKind k, std::uint64_t q, std::uint32_t m)
{
    return closed_form_distribution(k, q, m).enumerator();
}

} // namespace

TEST_CASE("worked enumerators")
{
    CHECK(closed(FamilyKind::CDelta1, 3, 3) == "1+26z^7+26z^9+26z^10+2z^13");
    CHECK(closed(FamilyKind::V1, 3, 3) == "1+156z^6+494z^9+78z^12");
    CHECK(closed(FamilyKind::V4, 3, 3) == "1+26z^4+156z^6+624z^7+494z^9+780z^10+78z^12+28z^13");
    CHECK(closed(FamilyKind::CDelta1, 5, 3) == "1+248z^47+124z^50+248z^52+4z^62");
    CHECK(closed(FamilyKind::V3, 5, 3) == "1+1860z^20+12524z^25+1240z^30");
    const auto v5 = closed_form_distribution(FamilyKind::V5, 3, 4);
    CHECK(v5.length() == 40);
    CHECK(v5.k() == 7);
    CHECK(v5.min_distance() == 22);
}

TEST_CASE("closed forms match enumeration")
{
    std::size_t compared = 0;
    for (std::uint64_t q : {3, 4, 5, 7, 8, 9}) {
        for (std::uint32_t m = 2; m <= 6; ++m) {
            if (ipow(q, m) > 20000) {
                continue;
            }
            for (auto kind : kAll) {
                WeightDistribution cf;
                try {
                    cf = closed_form_distribution(kind, q, m);
                } catch (const Error&) {
                    continue;
                }
                CHECK(cf.frequency(0) == 1);
                CHECK(cf.total() == big_pow(q, static_cast<unsigned>(cf.k())));
                CHECK(cf.min_distance() == closed_form_min_distance(kind, q, m));
                CHECK_FALSE(closed_form_source(kind, m).empty());
                if (ipow(q, static_cast<unsigned>(cf.k())) * cf.length() > 40000000) {
                    continue;
                }
                const auto fam = build_family(kind, build_field_ctx_q(q, m));
                EnumerationOptions opts;
                opts.threads = 2;
                CHECK_MESSAGE(enumerate_weights(fam, opts) == cf, family_name(kind), " q=", q, " m=", m);
                ++compared;
            }
        }
    }
    CHECK(compared >= 25);
}

TEST_CASE("one-weight families")
{
    for (auto [q, m] : {std::pair<std::uint64_t, std::uint32_t>{5, 5}, {5, 6}, {4, 4}, {4, 5}, {7, 7}}) {
        WeightDistribution cf;
        try {
            cf = closed_form_distribution(FamilyKind::Qm1OneWeight, q, m);
        } catch (const Error& e) {
            CHECK_MESSAGE(e.code() == Errc::OutOfProvenRange, q, " ", m, " ", std::string(e.what()));
            continue;
        }
        CHECK(cf.nonzero_weight_count() == 1);
    }
    CHECK_THROWS_AS(closed_form_distribution(FamilyKind::Qm1OneWeight, 3, 3), Error);
    CHECK(closed_form_distribution(FamilyKind::HatD1, 3, 4).nonzero_weight_count() == 1);
}

TEST_CASE("outside the proven range")
{
    CHECK_THROWS_AS(closed_form_distribution(FamilyKind::V4, 3, 4), Error);
    CHECK_THROWS_AS(closed_form_distribution(FamilyKind::V5, 3, 3), Error);
    CHECK_THROWS_AS(closed_form_distribution(FamilyKind::V1, 4, 3), Error);
    CHECK_THROWS_AS(closed_form_distribution(FamilyKind::FromCode, 3, 3), Error);
    try {
        closed_form_distribution(FamilyKind::CDelta1, 3, 2);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::OutOfProvenRange);
    }
}
