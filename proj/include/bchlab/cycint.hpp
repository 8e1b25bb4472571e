#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bchlab {

// Exact element of Z[zeta_p] in the basis 1, zeta, ..., zeta^{p-2}.
class CycInt {
public:
    CycInt() = default;
    explicit CycInt(std::uint32_t p);

    static CycInt integer(std::uint32_t p, std::int64_t v);
    static CycInt zeta_power(std::uint32_t p, std::int64_t k);
    // sum_t counts[t] zeta^t, counts.size() == p
    static CycInt from_counts(std::uint32_t p, std::span<const std::int64_t> counts);

    std::uint32_t prime() const { return p_; }
    const std::vector<std::int64_t>& coefficients() const { return c_; }

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt& operator*=(std::int64_t k);
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(CycInt a, std::int64_t k) { return a *= k; }
    friend CycInt operator*(std::int64_t k, CycInt a) { return a *= k; }
    CycInt operator-() const { return *this * -1; }
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    friend bool operator==(const CycInt& a, const CycInt& b) = default;

    // zeta -> zeta^{-1}
    CycInt conj() const;
    bool is_zero() const;
    std::optional<std::int64_t> as_integer() const;
    // Approximate value; used for display and quadrant tests only.
    std::complex<long double> to_complex() const;
    std::string to_string() const;

private:
    std::uint32_t p_ = 0;
    std::vector<std::int64_t> c_;
};

} // namespace bchlab
