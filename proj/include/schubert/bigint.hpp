#ifndef SCHUBERT_BIGINT_HPP
#define SCHUBERT_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

/*
  Signed arbitrary-precision integer, base 10^9 limbs (little-endian).
  Supports exactly what exact polynomial arithmetic needs: add, subtract,
  multiply, compare, decimal I/O. No division.
*/
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT: implicit by design, coefficients start as machine ints

    static BigInt from_string(std::string_view s);

    bool is_zero() const { return sign_ == 0; }
    int signum() const { return sign_; }

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

    friend bool operator==(const BigInt& a, const BigInt& b) = default;
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    std::string to_string() const;

    // Quotient by a small positive divisor that divides exactly;
    // ValidationError on a nonzero remainder.
    BigInt div_exact(std::uint32_t divisor) const;

    // Throws OverflowError when the value does not fit.
    long long to_int64() const;

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

  private:
    static constexpr std::uint32_t kBase = 1000000000u;

    int sign_ = 0;                      // -1, 0, +1
    std::vector<std::uint32_t> limbs_;  // empty iff sign_ == 0; no leading zero limb

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static void add_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static void sub_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
};

}  // namespace schubert

#endif
