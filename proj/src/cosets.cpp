#include "bchlab/cosets.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "bchlab/error.hpp"
#include "bchlab/int_math.hpp"

namespace bchlab {

CosetSpace::CosetSpace(std::uint64_t q, std::uint32_t m, std::uint64_t lambda) : q_(q), m_(m), lambda_(lambda)
{
    if (!as_prime_power(q)) {
        throw Error(Errc::NotPrime, "q=" + std::to_string(q) + " is not a prime power");
    }
    if (m < 1) {
        throw Error(Errc::InvalidArgument, "m must be positive");
    }
    if (lambda == 0 || (q - 1) % lambda != 0) {
        throw Error(Errc::NotADivisor, "lambda=" + std::to_string(lambda) + " does not divide q-1");
    }
    const std::uint64_t qm = ipow(q, m);
    if (qm > (1ull << 62)) {
        throw Error(Errc::SizeExceeded, "q^m too large");
    }
    n_ = (qm - 1) / lambda;
    if (n_ > 1 && multiplicative_order(q, n_) != m) {
        throw Error(Errc::InvalidArgument, "ord_n(q) != m");
    }
}

std::uint64_t CosetSpace::reduce(std::int64_t a) const
{
    return reduce_mod(a, n_);
}

void CosetSpace::check(std::uint64_t i) const
{
    if (i >= n_) {
        throw Error(Errc::OutOfRange, "index " + std::to_string(i) + " not below n=" + std::to_string(n_));
    }
}

CosetRecord CosetSpace::coset_of(std::uint64_t i, bool with_members) const
{
    check(i);
    CosetRecord rec;
    rec.leader = i;
    std::uint64_t j = i;
    do {
        rec.leader = std::min(rec.leader, j);
        ++rec.size;
        if (with_members) {
            rec.members.push_back(j);
        }
        j = times_q(j);
    } while (j != i);
    std::sort(rec.members.begin(), rec.members.end());
    return rec;
}

bool CosetSpace::is_leader(std::uint64_t i) const
{
    check(i);
    for (std::uint64_t j = times_q(i); j != i; j = times_q(j)) {
        if (j < i) {
            return false;
        }
    }
    return true;
}

std::uint32_t CosetSpace::coset_size(std::uint64_t i) const
{
    return coset_of(i, false).size;
}

std::uint64_t CosetSpace::leader_of(std::uint64_t i) const
{
    return coset_of(i, false).leader;
}

std::vector<std::uint32_t> CosetSpace::digits(std::uint64_t i) const
{
    std::vector<std::uint32_t> d(m_);
    for (std::uint32_t k = 0; k < m_; ++k) {
        d[k] = static_cast<std::uint32_t>(i % q_);
        i /= q_;
    }
    return d;
}

LeaderScan bruteforce_leader_scan(const CosetSpace& space, std::uint64_t begin, std::uint64_t end, unsigned threads,
                                  std::uint64_t cap)
{
    end = std::min(end, space.n());
    if (begin > end) {
        begin = end;
    }
    if (end - begin > cap) {
        throw Error(Errc::SizeExceeded, "scan range exceeds oracle cap");
    }
    LeaderScan scan;
    scan.begin = begin;
    scan.leader.assign(end - begin, 0);
    scan.size.assign(end - begin, 0);
    auto work = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            std::uint64_t min = i;
            std::uint32_t size = 0;
            std::uint64_t j = i;
            do {
                min = std::min(min, j);
                ++size;
                j = space.times_q(j);
            } while (j != i);
            scan.leader[i - begin] = min == i ? 1 : 0;
            scan.size[i - begin] = static_cast<std::uint8_t>(size);
        }
    };
    threads = std::max(1u, threads);
    const std::uint64_t total = end - begin;
    if (threads == 1 || total < 4096) {
        work(begin, end);
        return scan;
    }
    std::vector<std::thread> pool;
    const std::uint64_t chunk = ceil_div(total, threads);
    for (unsigned t = 0; t < threads; ++t) {
        std::uint64_t lo = begin + t * chunk;
        std::uint64_t hi = std::min(end, lo + chunk);
        if (lo < hi) {
            pool.emplace_back(work, lo, hi);
        }
    }
    for (auto& th : pool) {
        th.join();
    }
    return scan;
}

std::vector<CosetRecord> all_leaders(const CosetSpace& space, bool with_members, std::uint64_t cap)
{
    if (space.n() > cap) {
        throw Error(Errc::SizeExceeded, "n exceeds coset cap");
    }
    std::vector<std::uint8_t> seen(space.n(), 0);
    std::vector<CosetRecord> out;
    for (std::uint64_t i = 0; i < space.n(); ++i) {
        if (seen[i]) {
            continue;
        }
        CosetRecord rec;
        rec.leader = i;
        std::uint64_t j = i;
        do {
            seen[j] = 1;
            ++rec.size;
            if (with_members) {
                rec.members.push_back(j);
            }
            j = space.times_q(j);
        } while (j != i);
        std::sort(rec.members.begin(), rec.members.end());
        out.push_back(std::move(rec));
    }
    return out;
}

bool leader_digit_conditions(const CosetSpace& space, std::uint64_t i)
{
    if (i == 0 || i >= space.n()) {
        throw Error(Errc::OutOfRange, "index must lie in [1, n-1]");
    }
    const std::uint32_t m = space.m();
    const std::uint64_t q = space.q();
    const auto d = space.digits(i);
    const std::uint64_t top_bound = (q - 1) / space.lambda();
    if (d[m - 1] + 1 > top_bound) {
        return false;
    }
    for (std::uint32_t l = 0; l + 1 < m; ++l) {
        if (d[l] < d[m - 1]) {
            return false;
        }
    }
    if (space.lambda() == q - 1 && q > 3 && m >= q) {
        const std::uint64_t a = (m - 1) / (q - 1);
        const std::uint64_t b = (m - 1) % (q - 1);
        const std::uint64_t eps = b == q - 2 ? a + 1 : a;
        bool block = true;
        for (std::uint64_t l = m - 1 - eps; l + 1 < m; ++l) {
            block = block && d[l] == q - 1;
        }
        if (block) {
            for (std::uint32_t l = 1; l + 1 < m; ++l) {
                if (d[l - 1] < 1 || d[l - 1] > d[l]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool NonLeaderSets::is_nonleader(std::uint64_t i) const
{
    return std::binary_search(delta0.begin(), delta0.end(), i) || std::binary_search(delta1.begin(), delta1.end(), i) ||
           std::binary_search(delta2.begin(), delta2.end(), i);
}

bool NonLeaderSets::has_half_size(std::uint64_t i) const
{
    return std::binary_search(delta.begin(), delta.end(), i);
}

NonLeaderSets nonleader_sets_even_m(const CosetSpace& space)
{
    const std::uint32_t m = space.m();
    if (m % 2 != 0 || m < 4) {
        throw Error(Errc::OddM, "needs even m >= 4");
    }
    const std::uint64_t q = space.q();
    const std::uint64_t lam = space.lambda();
    NonLeaderSets out;
    out.h = m / 2;
    const std::uint64_t qh = ipow(q, out.h);
    const std::uint64_t step = (qh - 1) / lam;
    const std::uint64_t r = (q - 1) / lam;
    out.bound = (ipow(q, out.h + 1) - 1) / lam;
    auto f = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) { return a * qh + b * step + c; };

    for (std::uint64_t a = 1; a <= r; ++a) {
        for (std::uint64_t c = 1; c < a; ++c) {
            out.delta0.push_back(f(a, 0, c));
        }
    }
    for (std::uint64_t a = 1; a < r; ++a) {
        for (std::uint64_t b = 1; b < lam; ++b) {
            for (std::uint64_t c = 1; c <= a; ++c) {
                out.delta1.push_back(f(a, b, c));
            }
        }
    }
    for (std::uint64_t a = 0; a < r; ++a) {
        for (std::uint64_t b = lam / 2 + 1; b < lam; ++b) {
            out.delta2.push_back(f(a, b, a + 1));
        }
    }
    if (lam % 2 == 1) {
        for (std::uint64_t c = 1; c <= r; ++c) {
            out.delta.push_back(c * (qh + 1));
        }
    } else {
        for (std::uint64_t c = 1; c <= 2 * r; ++c) {
            out.delta.push_back(c * (qh + 1) / 2);
        }
    }
    for (auto* v : {&out.delta0, &out.delta1, &out.delta2, &out.delta}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
        if (!v->empty() && v->back() > out.bound) {
            throw Error(Errc::OutOfRange, "set element beyond (q^{h+1}-1)/lambda");
        }
    }
    return out;
}

std::uint64_t smallest_nonleader_even_m(const CosetSpace& space)
{
    const std::uint32_t m = space.m();
    if (m % 2 != 0 || m < 4) {
        throw Error(Errc::OddM, "needs even m >= 4");
    }
    const std::uint64_t lam = space.lambda();
    if (lam == 1) {
        throw Error(Errc::LambdaOne, "closed form stated for lambda >= 2");
    }
    const std::uint64_t qh = ipow(space.q(), m / 2);
    if (lam == 2) {
        return (3 * qh + 1) / 2;
    }
    if (lam % 2 == 1) {
        return ((lam + 1) * qh + lam - 1) / (2 * lam);
    }
    return ((lam + 2) * qh + lam - 2) / (2 * lam);
}

std::uint64_t smallest_nonleader_scan(const CosetSpace& space)
{
    for (std::uint64_t i = 1; i < space.n(); ++i) {
        if (i % space.q() == 0) {
            continue;
        }
        if (space.leader_of(i) != i) {
            return i;
        }
    }
    return 0;
}

LargestLeadersHalf largest_leaders_half(std::uint64_t q, std::uint32_t m, bool want_delta3)
{
    if (q % 2 == 0) {
        throw Error(Errc::EvenQ, "lambda = 2 needs odd q");
    }
    if (m < 2) {
        throw Error(Errc::InvalidArgument, "m must be at least 2");
    }
    if (want_delta3 && m < 6) {
        throw Error(Errc::MTooSmallForDelta3, "third largest leader needs m >= 6");
    }
    const std::uint64_t qm = ipow(q, m);
    const std::uint64_t top = ipow(q, m - 1);
    LargestLeadersHalf out;
    out.delta1 = (qm - 1 - top - ipow(q, (m - 1) / 2)) / 2;
    out.delta2 = (qm - 1 - top - ipow(q, (m + 1) / 2)) / 2;
    out.size1 = m % 2 == 1 ? m : m / 2;
    out.size2 = m;
    if (want_delta3) {
        out.delta3 = (qm - 1 - top - ipow(q, (m + 3) / 2)) / 2;
        out.size3 = m;
    }
    return out;
}

LargestLeaderQm1 largest_leader_qm1(std::uint64_t q, std::uint32_t m)
{
    if (q <= 3) {
        throw Error(Errc::QTooSmall, "needs q > 3");
    }
    if (m < q) {
        throw Error(Errc::UnsupportedParams, "needs m >= q");
    }
    LargestLeaderQm1 out;
    out.a = (m - 1) / (q - 1);
    out.b = (m - 1) % (q - 1);
    const std::uint64_t a = out.a;
    BigInt num = big_pow(q, m) - 1 - big_pow(q, m - 1);
    if (out.b == 0) {
        for (std::uint64_t l = 1; l <= q - 2; ++l) {
            num -= big_pow(q, static_cast<unsigned>(a * l));
        }
        out.case_id = 'i';
        out.size = m;
    } else if (out.b == 1) {
        const std::uint64_t A = (q - 1) / 2;
        for (std::uint64_t l = 1; l <= A; ++l) {
            num -= big_pow(q, static_cast<unsigned>(a * l));
        }
        for (std::uint64_t l = A + 1; l <= q - 2; ++l) {
            num -= big_pow(q, static_cast<unsigned>(a * l + 1));
        }
        out.case_id = 'j';
        out.size = q % 2 == 1 ? m / 2 : m;
    } else if (out.b == q - 2) {
        for (std::uint64_t l = 1; l <= q - 2; ++l) {
            num -= big_pow(q, static_cast<unsigned>((a + 1) * l - 1));
        }
        out.case_id = 'k';
        out.size = static_cast<std::uint32_t>(a + 1);
    } else {
        throw Error(Errc::UnsupportedResidue, "residue b=" + std::to_string(out.b) + " not in {0, 1, q-2}");
    }
    if (num % (q - 1) != 0) {
        throw Error(Errc::InvalidArgument, "closed form is not an integer");
    }
    out.delta = static_cast<std::uint64_t>(num / (q - 1));
    return out;
}

const char* qm1_residue_name(char case_id)
{
    switch (case_id) {
    case 'i': return "b=0";
    case 'j': return "b=1";
    case 'k': return "b=q-2";
    default: return "?";
    }
}

} // namespace bchlab
