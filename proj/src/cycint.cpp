#include "bchlab/cycint.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "bchlab/error.hpp"
#include "bchlab/int_math.hpp"

namespace bchlab {

namespace {

// Reduce a length-p vector modulo x^p - 1 and 1 + x + ... + x^{p-1}.
std::vector<std::int64_t> canonical(const std::vector<std::int64_t>& full)
{
    const std::size_t p = full.size();
    std::vector<std::int64_t> out(p - 1);
    for (std::size_t i = 0; i + 1 < p; ++i) {
        out[i] = full[i] - full[p - 1];
    }
    return out;
}

void check_same(const CycInt& a, const CycInt& b)
{
    if (a.prime() != b.prime()) {
        throw Error(Errc::InvalidArgument, "cyclotomic integers over different primes");
    }
}

} // namespace

CycInt::CycInt(std::uint32_t p) : p_(p), c_(p - 1, 0)
{
    if (!is_prime(p)) {
        throw Error(Errc::NotPrime, std::to_string(p));
    }
}

CycInt CycInt::integer(std::uint32_t p, std::int64_t v)
{
    CycInt r(p);
    r.c_[0] = v;
    return r;
}

CycInt CycInt::zeta_power(std::uint32_t p, std::int64_t k)
{
    std::vector<std::int64_t> full(p, 0);
    full[reduce_mod(k, p)] = 1;
    CycInt r(p);
    r.c_ = canonical(full);
    return r;
}

CycInt CycInt::from_counts(std::uint32_t p, std::span<const std::int64_t> counts)
{
    if (counts.size() != p) {
        throw Error(Errc::InvalidArgument, "count vector must have length p");
    }
    CycInt r(p);
    r.c_ = canonical(std::vector<std::int64_t>(counts.begin(), counts.end()));
    return r;
}

CycInt& CycInt::operator+=(const CycInt& o)
{
    check_same(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o)
{
    check_same(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] -= o.c_[i];
    }
    return *this;
}

CycInt& CycInt::operator*=(std::int64_t k)
{
    for (auto& v : c_) {
        v *= k;
    }
    return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b)
{
    check_same(a, b);
    const std::uint32_t p = a.p_;
    std::vector<std::int64_t> full(p, 0);
    for (std::uint32_t i = 0; i + 1 < p; ++i) {
        if (a.c_[i] == 0) {
            continue;
        }
        for (std::uint32_t j = 0; j + 1 < p; ++j) {
            full[(i + j) % p] += a.c_[i] * b.c_[j];
        }
    }
    CycInt r(p);
    r.c_ = canonical(full);
    return r;
}

CycInt CycInt::conj() const
{
    std::vector<std::int64_t> full(p_, 0);
    for (std::uint32_t i = 0; i + 1 < p_; ++i) {
        full[(p_ - i) % p_] += c_[i];
    }
    CycInt r(p_);
    r.c_ = canonical(full);
    return r;
}

bool CycInt::is_zero() const
{
    for (auto v : c_) {
        if (v != 0) {
            return false;
        }
    }
    return true;
}

std::optional<std::int64_t> CycInt::as_integer() const
{
    for (std::size_t i = 1; i < c_.size(); ++i) {
        if (c_[i] != 0) {
            return std::nullopt;
        }
    }
    return c_.empty() ? 0 : c_[0];
}

std::complex<long double> CycInt::to_complex() const
{
    std::complex<long double> z = 0;
    for (std::uint32_t i = 0; i < c_.size(); ++i) {
        long double ang = 2.0L * std::numbers::pi_v<long double> * i / p_;
        z += static_cast<long double>(c_[i]) * std::complex<long double>(std::cos(ang), std::sin(ang));
    }
    return z;
}

std::string CycInt::to_string() const
{
    if (auto v = as_integer()) {
        return std::to_string(*v);
    }
    std::ostringstream os;
    bool first = true;
    for (std::uint32_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) {
            continue;
        }
        std::int64_t v = c_[i];
        if (!first) {
            os << (v < 0 ? " - " : " + ");
        } else if (v < 0) {
            os << "-";
        }
        std::int64_t mag = v < 0 ? -v : v;
        if (i == 0) {
            os << mag;
        } else {
            if (mag != 1) {
                os << mag << "*";
            }
            os << "z" << p_ << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace bchlab
