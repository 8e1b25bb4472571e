#include <doctest.h>

#include <map>
#include <set>

#include "bchlab/error.hpp"
#include "bchlab/field_ctx.hpp"
#include "bchlab/linear_code.hpp"

using namespace bchlab;

namespace {

GeneratorMatrix make_matrix(std::uint32_t q, std::size_t k, std::size_t n, std::uint32_t seed)
{
    GeneratorMatrix G;
    G.length = n;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::uint8_t> row(n);
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = static_cast<std::uint8_t>((seed * 31 + i * 17 + j * j * 7 + i * j * 3) % q);
        }
        row[i] = 1;  // keeps small examples independent most of the time
        G.rows.push_back(std::move(row));
    }
    return G;
}

// Every message, every coordinate: the slowest possible oracle.
std::pair<std::map<std::uint64_t, std::uint64_t>, std::size_t> naive(const SmallFieldTables& T,
                                                                       const GeneratorMatrix& G)
{
    const std::uint32_t q = T.q();
    const std::size_t k = G.rows.size();
    std::map<std::uint64_t, std::uint64_t> hist;
    std::set<std::vector<std::uint8_t>> words;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= q;
    }
    for (std::uint64_t msg = 0; msg < total; ++msg) {
        std::vector<std::uint8_t> word(G.length, 0);
        std::uint64_t rest = msg;
        for (std::size_t i = 0; i < k; ++i) {
            const std::uint32_t c = rest % q;
            rest /= q;
            for (std::size_t j = 0; j < G.length; ++j) {
                word[j] = T.add(word[j], T.mul(c, G.rows[i][j]));
            }
        }
        std::uint64_t w = 0;
        for (auto v : word) {
            w += v != 0;
        }
        ++hist[w];
        words.insert(word);
    }
    return {hist, words.size()};
}

} // namespace

TEST_CASE("small field tables agree with the field")
{
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        const FieldCtx ctx = build_field_ctx_q(q, 1);
        const auto& F = ctx.sub();
        SmallFieldTables T(F);
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(T.add(a, b) == F.label(F.add(F.from_label(a), F.from_label(b))));
                CHECK(T.mul(a, b) == F.label(F.mul(F.from_label(a), F.from_label(b))));
            }
            CHECK(T.add(a, T.neg(a)) == 0);
            if (a != 0) {
                CHECK(T.mul(a, T.inv(a)) == 1);
            }
        }
    }
}

TEST_CASE("enumeration matches the naive oracle")
{
    for (std::uint64_t q : {2, 3, 4, 5, 7}) {
        const FieldCtx ctx = build_field_ctx_q(q, 1);
        SmallFieldTables T(ctx.sub());
        for (std::uint32_t seed = 0; seed < 6; ++seed) {
            const std::size_t k = 1 + seed % 4;
            const std::size_t n = k + 3 + seed;
            const auto G = make_matrix(static_cast<std::uint32_t>(q), k, n, seed);
            const auto [hist, distinct] = naive(T, G);
            // distinct codewords count q^rank, whatever the row dependence
            CHECK(distinct == static_cast<std::size_t>(ipow(q, static_cast<unsigned>(matrix_rank(T, G)))));
            const auto w = enumerate_weight_distribution(T, G);
            EnumerationOptions three;
            three.threads = 3;
            CHECK(enumerate_weight_distribution(T, G, three) == w);
            CHECK(w.k() == k);
            CHECK(w.length() == n);
            CHECK(w.frequency(0) >= 1);
            CHECK(w.total() == big_pow(q, static_cast<unsigned>(k)));
            for (const auto& [weight, count] : hist) {
                CHECK(w.frequency(weight) == count);
            }
        }
    }
}

TEST_CASE("rank over GF(q)")
{
    const FieldCtx ctx = build_field_ctx_q(3, 1);
    SmallFieldTables T(ctx.sub());
    GeneratorMatrix G;
    G.length = 4;
    G.rows = {{1, 2, 0, 1}, {2, 1, 0, 2}, {0, 0, 1, 1}};
    CHECK(matrix_rank(T, G) == 2);
    G.rows.push_back({0, 1, 0, 0});
    CHECK(matrix_rank(T, G) == 3);
    G.rows.clear();
    CHECK(matrix_rank(T, G) == 0);
}

TEST_CASE("weight distribution bookkeeping")
{
    WeightDistribution w(13, 4);
    w.add(0, 1);
    w.add(7, 26);
    w.add(9, 26);
    w.add(10, 26);
    w.add(13, 2);
    w.add(11, 0);
    CHECK(w.enumerator() == "1+26z^7+26z^9+26z^10+2z^13");
    CHECK(w.min_distance() == 7);
    CHECK(w.nonzero_weight_count() == 4);
    CHECK(w.total() == 81);
    CHECK(w.frequency(11) == 0);
    w.add(7, 1);
    CHECK(w.frequency(7) == 27);
}

TEST_CASE("enumeration cap")
{
    const FieldCtx ctx = build_field_ctx_q(3, 1);
    SmallFieldTables T(ctx.sub());
    const auto G = make_matrix(3, 6, 10, 1);
    EnumerationOptions tiny;
    tiny.max_codewords = 100;
    CHECK_THROWS_AS(enumerate_weight_distribution(T, G, tiny), Error);
}
