#include "bchlab/linear_code.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <thread>

#include "bchlab/error.hpp"

namespace bchlab {

SmallFieldTables::SmallFieldTables(const Subfield& F) : q_(F.order())
{
    if (q_ > 256) {
        throw Error(Errc::SizeExceeded, "small-field tables need q <= 256");
    }
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        auto ea = F.from_label(a);
        neg_[a] = static_cast<std::uint8_t>(F.label(F.neg(ea)));
        inv_[a] = static_cast<std::uint8_t>(F.label(F.inv(ea)));
        for (std::uint32_t b = 0; b < q_; ++b) {
            auto eb = F.from_label(b);
            add_[a * q_ + b] = static_cast<std::uint8_t>(F.label(F.add(ea, eb)));
            mul_[a * q_ + b] = static_cast<std::uint8_t>(F.label(F.mul(ea, eb)));
        }
    }
}

std::size_t matrix_rank(const SmallFieldTables& T, GeneratorMatrix G)
{
    std::size_t rank = 0;
    auto& rows = G.rows;
    for (std::size_t col = 0; col < G.length && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) {
            ++piv;
        }
        if (piv == rows.size()) {
            continue;
        }
        std::swap(rows[piv], rows[rank]);
        const std::uint8_t inv = T.inv(rows[rank][col]);
        for (auto& v : rows[rank]) {
            v = T.mul(v, inv);
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) {
                continue;
            }
            const std::uint8_t f = T.neg(rows[r][col]);
            for (std::size_t c = 0; c < G.length; ++c) {
                rows[r][c] = T.add(rows[r][c], T.mul(f, rows[rank][c]));
            }
        }
        ++rank;
    }
    return rank;
}

void WeightDistribution::add(std::uint64_t weight, const BigInt& freq)
{
    if (freq == 0) {
        return;
    }
    entries_[weight] += freq;
}

BigInt WeightDistribution::frequency(std::uint64_t w) const
{
    auto it = entries_.find(w);
    return it == entries_.end() ? BigInt(0) : it->second;
}

BigInt WeightDistribution::total() const
{
    BigInt t = 0;
    for (const auto& [w, f] : entries_) {
        t += f;
    }
    return t;
}

std::uint64_t WeightDistribution::min_distance() const
{
    for (const auto& [w, f] : entries_) {
        if (w > 0 && f > 0) {
            return w;
        }
    }
    return 0;
}

std::size_t WeightDistribution::nonzero_weight_count() const
{
    std::size_t c = 0;
    for (const auto& [w, f] : entries_) {
        c += (w > 0 && f > 0) ? 1 : 0;
    }
    return c;
}

std::string WeightDistribution::enumerator() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, f] : entries_) {
        if (!first) {
            os << "+";
        }
        first = false;
        if (w == 0) {
            os << f;
        } else {
            if (f != 1) {
                os << f;
            }
            os << "z^" << w;
        }
    }
    return os.str();
}

namespace {

struct Walker {
    const SmallFieldTables& T;
    std::size_t length;
    std::size_t k;
    // steps[level][t]: row `level` scaled by (e_{t+1} - e_t), labels in order 0..q-1 cyclically.
    std::vector<std::vector<std::vector<std::uint8_t>>> steps;
    std::vector<std::uint8_t> word;
    std::size_t weight = 0;
    std::vector<std::uint64_t> hist;

    void apply(const std::vector<std::uint8_t>& v)
    {
        for (std::size_t c = 0; c < length; ++c) {
            if (v[c] == 0) {
                continue;
            }
            const std::uint8_t old = word[c];
            const std::uint8_t nw = T.add(old, v[c]);
            word[c] = nw;
            weight += (nw != 0) - (old != 0);
        }
    }

    void walk(std::size_t level)
    {
        if (level == k) {
            ++hist[weight];
            return;
        }
        const std::uint32_t q = T.q();
        for (std::uint32_t t = 0; t < q; ++t) {
            walk(level + 1);
            apply(steps[level][t]);
        }
    }
};

} // namespace

WeightDistribution enumerate_weight_distribution(const SmallFieldTables& T, const GeneratorMatrix& G,
                                                 const EnumerationOptions& opts)
{
    const std::size_t k = G.rows.size();
    const std::uint32_t q = T.q();
    BigInt count = 1;
    for (std::size_t i = 0; i < k; ++i) {
        count *= q;
    }
    if (count > opts.max_codewords) {
        throw Error(Errc::SizeExceeded, "q^k = " + count.str() + " exceeds the enumeration cap");
    }
    for (const auto& r : G.rows) {
        if (r.size() != G.length) {
            throw Error(Errc::InvalidArgument, "ragged generator matrix");
        }
    }

    std::vector<std::vector<std::vector<std::uint8_t>>> steps(k, std::vector<std::vector<std::uint8_t>>(q));
    for (std::size_t lvl = 0; lvl < k; ++lvl) {
        for (std::uint32_t t = 0; t < q; ++t) {
            // e_t -> e_{t+1} for t < q-1, and e_{q-1} -> e_0 = 0 at the end.
            const std::uint32_t from = t;
            const std::uint32_t to = (t + 1) % q;
            const std::uint8_t diff = T.add(static_cast<std::uint8_t>(to), T.neg(static_cast<std::uint8_t>(from)));
            auto& v = steps[lvl][t];
            v.resize(G.length);
            for (std::size_t c = 0; c < G.length; ++c) {
                v[c] = T.mul(diff, G.rows[lvl][c]);
            }
        }
    }

    std::vector<std::uint64_t> hist(G.length + 1, 0);
    if (k == 0) {
        hist[0] = 1;
    } else {
        const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, q));
        std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(G.length + 1, 0));
        auto run = [&](unsigned worker) {
            Walker w{T, G.length, k, steps, std::vector<std::uint8_t>(G.length, 0), 0, std::vector<std::uint64_t>(G.length + 1, 0)};
            for (std::uint32_t t = 0; t < q; ++t) {
                // Top digit t: word = t * row 0.
                if (t % threads == worker) {
                    std::fill(w.word.begin(), w.word.end(), 0);
                    w.weight = 0;
                    for (std::size_t c = 0; c < G.length; ++c) {
                        w.word[c] = T.mul(static_cast<std::uint8_t>(t), G.rows[0][c]);
                        w.weight += w.word[c] != 0;
                    }
                    w.walk(1);
                }
            }
            partial[worker] = std::move(w.hist);
        };
        if (threads == 1) {
            run(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned i = 0; i < threads; ++i) {
                pool.emplace_back(run, i);
            }
            for (auto& th : pool) {
                th.join();
            }
        }
        for (const auto& part : partial) {
            for (std::size_t i = 0; i <= G.length; ++i) {
                hist[i] += part[i];
            }
        }
    }

    WeightDistribution wd(G.length, k);
    for (std::size_t i = 0; i <= G.length; ++i) {
        wd.add(i, BigInt(hist[i]));
    }
    return wd;
}

} // namespace bchlab
