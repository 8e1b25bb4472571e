#include "bchlab/tables.hpp"

#include <vector>

#include "bchlab/cosets.hpp"
#include "bchlab/error.hpp"
#include "bchlab/int_math.hpp"

namespace bchlab {

namespace {

BigInt exact_div(const BigInt& a, const BigInt& b)
{
    if (b == 0 || a % b != 0) {
        throw Error(Errc::InvalidArgument, "closed form is not integral: " + a.str() + " / " + b.str());
    }
    return a / b;
}

std::uint64_t as_weight(const BigInt& w)
{
    if (w < 0) {
        throw Error(Errc::InvalidArgument, "negative weight in closed form");
    }
    return w.convert_to<std::uint64_t>();
}

struct Row {
    BigInt weight2;  // twice the weight
    BigInt freq;
};

void check_lambda2(std::uint64_t q, std::uint32_t m, std::uint32_t min_even_m)
{
    if (q % 2 == 0) {
        throw Error(Errc::EvenQ, "lambda = 2 tables need odd q");
    }
    if (m % 2 == 1 && m < 3) {
        throw Error(Errc::OutOfProvenRange, "odd m must be at least 3");
    }
    if (m % 2 == 0 && m < min_even_m) {
        throw Error(Errc::OutOfProvenRange, "even m must be at least " + std::to_string(min_even_m));
    }
}

} // namespace

std::string closed_form_source(FamilyKind kind, std::uint32_t m)
{
    const std::string parity = m % 2 == 1 ? ", odd m" : ", even m";
    switch (kind) {
    case FamilyKind::HatD1:
    case FamilyKind::Qm1OneWeight:
        return "one-weight formula" + parity;
    case FamilyKind::CDelta1:
        return (m % 2 == 1 ? "four-weight table" : "three-weight table") + parity;
    case FamilyKind::V1:
    case FamilyKind::V2:
        return "three-weight table" + parity;
    case FamilyKind::V3:
        return "punctured-code table" + parity;
    case FamilyKind::V4:
    case FamilyKind::V5:
        return "extended table" + parity;
    default:
        return "none";
    }
}

WeightDistribution closed_form_distribution(FamilyKind kind, std::uint64_t q, std::uint32_t m)
{
    const bool odd = m % 2 == 1;
    const std::uint32_t h = m / 2;
    auto P = [q](std::uint32_t e) { return big_pow(q, e); };
    const BigInt Q = P(m);
    const BigInt bq = q;

    std::vector<Row> rows;
    std::uint64_t length = (Q - 1).convert_to<std::uint64_t>() / 2;

    switch (kind) {
    case FamilyKind::HatD1:
        check_lambda2(q, m, 2);
        if (odd) {
            rows.push_back({(bq - 1) * P(m - 1), Q - 1});
        } else {
            rows.push_back({(bq - 1) * (P(m - 1) + P(h - 1)), P(h) - 1});
        }
        break;
    case FamilyKind::CDelta1:
        check_lambda2(q, m, 4);
        if (odd) {
            const BigInt r = P((m - 1) / 2);
            rows.push_back({Q - P(m - 1) - r - 1, exact_div((bq - 1) * (Q - 1), 2)});
            rows.push_back({Q - P(m - 1), Q - 1});
            rows.push_back({Q - P(m - 1) + r - 1, exact_div((bq - 1) * (Q - 1), 2)});
            rows.push_back({Q - 1, bq - 1});
        } else {
            rows.push_back({Q - P(m - 1) - P(h - 1) - 1, (bq - 1) * (P(h) - 1)});
            rows.push_back({(bq - 1) * (P(m - 1) + P(h - 1)), P(h) - 1});
            rows.push_back({Q - 1, bq - 1});
        }
        break;
    case FamilyKind::V1:
    case FamilyKind::V2:
    case FamilyKind::V3: {
        if (kind == FamilyKind::V1 && !odd) {
            throw Error(Errc::KindParityMismatch, "V1 needs odd m");
        }
        if (kind == FamilyKind::V2 && odd) {
            throw Error(Errc::KindParityMismatch, "V2 needs even m");
        }
        check_lambda2(q, m, kind == FamilyKind::V3 ? 2 : 4);
        if (odd) {
            const BigInt r = P((m - 1) / 2);
            rows.push_back({(bq - 1) * (P(m - 1) - r), exact_div((Q - 1) * (P(m - 1) + r), 2)});
            rows.push_back({(bq - 1) * P(m - 1), (Q - 1) * (Q - P(m - 1) + 1)});
            rows.push_back({(bq - 1) * (P(m - 1) + r), exact_div((Q - 1) * (P(m - 1) - r), 2)});
        } else {
            rows.push_back({(bq - 1) * (P(m - 1) - P(h - 1)), exact_div((Q - 1) * (P(h + 1) + bq), 2 * (bq + 1))});
            rows.push_back({(bq - 1) * P(m - 1), P(h - 1) * (Q - 1)});
            rows.push_back({(bq - 1) * (P(m - 1) + P(h - 1)),
                            exact_div((P(h + 1) - bq) * (Q - 2 * P(m - 1) + 1), 2 * (bq - 1))});
            rows.push_back({(bq - 1) * (P(m - 1) + P(h)), exact_div((Q - 1) * (P(h - 1) - 1), bq * bq - 1)});
        }
        if (kind == FamilyKind::V3) {
            // Weights shrink by (q-1)/2 under the puncturing.
            for (auto& r : rows) {
                r.weight2 = exact_div(r.weight2, bq - 1) * 2;
            }
            length = ((Q - 1) / (bq - 1)).convert_to<std::uint64_t>();
        }
        break;
    }
    case FamilyKind::V4:
    case FamilyKind::V5: {
        if (kind == FamilyKind::V4 && !odd) {
            throw Error(Errc::KindParityMismatch, "V4 needs odd m");
        }
        if (kind == FamilyKind::V5 && odd) {
            throw Error(Errc::KindParityMismatch, "V5 needs even m");
        }
        check_lambda2(q, m, 2);
        const BigInt base = Q - P(m - 1);
        if (odd) {
            const BigInt r = P((m - 1) / 2);
            const BigInt r1 = P((m + 1) / 2);
            const BigInt r3 = P((m + 3) / 2);
            rows.push_back({base - r1 - 1, exact_div((Q - 1) * (P(m - 1) - 1), 2 * (bq + 1))});
            rows.push_back({base - r1 + r, exact_div((Q - 1) * (P(m - 1) + r), 2)});
            rows.push_back({base - r - 1, exact_div((Q - 1) * (P(m + 2) - Q - P(m - 1) - r3 + r + bq * bq), 2 * (bq + 1))});
            rows.push_back({base, (Q - 1) * (Q - P(m - 1) + 1)});
            rows.push_back({base + r - 1, exact_div((Q - 1) * (P(m + 2) - Q - P(m - 1) + r3 - r + bq * bq), 2 * (bq + 1))});
            rows.push_back({base + r1 - r, exact_div((Q - 1) * (P(m - 1) - r), 2)});
            rows.push_back({base + r1 - 1, exact_div((Q - 1) * (P(m - 1) - 1), 2 * (bq + 1))});
            rows.push_back({Q - 1, bq - 1});
        } else {
            rows.push_back({base - P(h) - 1, exact_div((Q - 1) * (P(h + 1) + P(h - 1) - 2), 2 * (bq + 1))});
            rows.push_back({base - P(h) + P(h - 1), exact_div((Q - 1) * (P(h + 1) + bq), 2 * (bq + 1))});
            rows.push_back({base - P(h - 1) - 1, exact_div((P(h) - 1) * (P(m + 1) - 2 * Q + bq), 2)});
            rows.push_back({base, (Q - 1) * P(h - 1)});
            rows.push_back({base + P(h - 1) - 1, exact_div((Q - 1) * (P(h + 1) + bq) * (bq - 1), 2 * (bq + 1))});
            rows.push_back({base + P(h) - P(h - 1), exact_div((P(h + 1) - bq) * (Q - 2 * P(m - 1) + 1), 2 * (bq - 1))});
            rows.push_back({base + P(h) - 1, exact_div((Q - 1) * (P(h) - P(h - 1)), 2)});
            rows.push_back({base + P(h + 1) - P(h), exact_div((Q - 1) * (P(h - 1) - 1), bq * bq - 1)});
            rows.push_back({Q - 1, bq - 1});
        }
        break;
    }
    case FamilyKind::Qm1OneWeight: {
        const auto lead = largest_leader_qm1(q, m);
        length = ((Q - 1) / (bq - 1)).convert_to<std::uint64_t>();
        if (lead.case_id == 'i' || (lead.case_id == 'j' && q % 2 == 0)) {
            rows.push_back({2 * P(m - 1), Q - 1});
        } else if (lead.case_id == 'j') {
            rows.push_back({2 * (P(h) + 1) * P(h - 1), P(h) - 1});
        } else {
            throw Error(Errc::OutOfProvenRange, "one-weight formula covers residues b in {0, 1}");
        }
        break;
    }
    default:
        throw Error(Errc::UnsupportedParams, "no closed form for this family");
    }

    WeightDistribution wd;
    BigInt total = 1;
    for (const auto& r : rows) {
        total += r.freq;
    }
    // k from the total count q^k
    std::uint64_t k = 0;
    BigInt t = total;
    while (t > 1 && t % q == 0) {
        t /= q;
        ++k;
    }
    if (t != 1) {
        throw Error(Errc::InvalidArgument, "closed-form frequencies do not sum to a power of q");
    }
    wd = WeightDistribution(length, k);
    wd.add(0, 1);
    for (const auto& r : rows) {
        if (r.freq < 0) {
            throw Error(Errc::InvalidArgument, "negative frequency in closed form");
        }
        wd.add(as_weight(exact_div(r.weight2, 2)), r.freq);
    }
    return wd;
}

std::uint64_t closed_form_min_distance(FamilyKind kind, std::uint64_t q, std::uint32_t m)
{
    const bool odd = m % 2 == 1;
    const std::uint32_t h = m / 2;
    auto P = [q](std::uint32_t e) { return ipow(q, e); };
    switch (kind) {
    case FamilyKind::HatD1:
        return odd ? (q - 1) * P(m - 1) / 2 : (q - 1) * (P(m - 1) + P(h - 1)) / 2;
    case FamilyKind::CDelta1:
        return largest_leaders_half(q, m).delta1;
    case FamilyKind::V1:
    case FamilyKind::V2:
        return odd ? (q - 1) * (P(m - 1) - P((m - 1) / 2)) / 2 : (q - 1) * (P(m - 1) - P(h - 1)) / 2;
    case FamilyKind::V3:
        return odd ? P(m - 1) - P((m - 1) / 2) : P(m - 1) - P(h - 1);
    case FamilyKind::V4:
    case FamilyKind::V5:
        return largest_leaders_half(q, m).delta2;
    case FamilyKind::Qm1OneWeight: {
        const auto lead = largest_leader_qm1(q, m);
        if (lead.case_id == 'j' && q % 2 == 1) {
            return (P(h) + 1) * P(h - 1);
        }
        return P(m - 1);
    }
    default:
        throw Error(Errc::UnsupportedParams, "no stated minimum distance for this family");
    }
}

} // namespace bchlab
