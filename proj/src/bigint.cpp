#include "schubert/bigint.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "schubert/errors.hpp"

namespace schubert {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid overflow on negating LLONG_MIN
    unsigned long long mag = v < 0 ? ~static_cast<unsigned long long>(v) + 1ull
                                   : static_cast<unsigned long long>(v);
    while (mag > 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag % kBase));
        mag /= kBase;
    }
}

BigInt BigInt::from_string(std::string_view s) {
    if (s.empty()) throw ValidationError("BigInt: empty string");
    int sign = 1;
    if (s.front() == '+' || s.front() == '-') {
        sign = s.front() == '-' ? -1 : 1;
        s.remove_prefix(1);
    }
    if (s.empty()) throw ValidationError("BigInt: sign without digits");
    BigInt out;
    for (size_t chunk_end = s.size(); chunk_end > 0;) {
        size_t chunk_begin = chunk_end >= 9 ? chunk_end - 9 : 0;
        std::uint32_t limb = 0;
        for (size_t i = chunk_begin; i < chunk_end; ++i) {
            char c = s[i];
            if (c < '0' || c > '9') throw ValidationError("BigInt: bad digit");
            limb = limb * 10 + static_cast<std::uint32_t>(c - '0');
        }
        out.limbs_.push_back(limb);
        chunk_end = chunk_begin;
    }
    out.sign_ = sign;
    out.trim();
    return out;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i > 0; --i) {
        if (a[i - 1] != b[i - 1]) return a[i - 1] < b[i - 1] ? -1 : 1;
    }
    return 0;
}

void BigInt::add_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    std::uint32_t carry = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        std::uint64_t cur = static_cast<std::uint64_t>(a[i]) + carry;
        if (i < b.size()) cur += b[i];
        a[i] = static_cast<std::uint32_t>(cur % kBase);
        carry = static_cast<std::uint32_t>(cur / kBase);
    }
    if (carry) a.push_back(carry);
}

void BigInt::sub_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow;
        if (i < b.size()) cur -= b[i];
        if (cur < 0) {
            cur += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        a[i] = static_cast<std::uint32_t>(cur);
    }
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (rhs.sign_ == 0) return *this;
    if (sign_ == 0) return *this = rhs;
    if (sign_ == rhs.sign_) {
        add_mag(limbs_, rhs.limbs_);
        return *this;
    }
    int c = cmp_mag(limbs_, rhs.limbs_);
    if (c == 0) {
        sign_ = 0;
        limbs_.clear();
    } else if (c > 0) {
        sub_mag(limbs_, rhs.limbs_);
        trim();
    } else {
        std::vector<std::uint32_t> tmp = rhs.limbs_;
        sub_mag(tmp, limbs_);
        limbs_ = std::move(tmp);
        sign_ = rhs.sign_;
        trim();
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
    if (sign_ == 0 || rhs.sign_ == 0) {
        sign_ = 0;
        limbs_.clear();
        return *this;
    }
    std::vector<std::uint32_t> out(limbs_.size() + rhs.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j] +
                                out[i + j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        size_t k = i + rhs.limbs_.size();
        while (carry) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
            ++k;
        }
    }
    limbs_ = std::move(out);
    sign_ *= rhs.sign_;
    trim();
    return *this;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = BigInt::cmp_mag(a.limbs_, b.limbs_) * a.sign_;
    return c <=> 0;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::string out;
    if (sign_ < 0) out.push_back('-');
    out += std::to_string(limbs_.back());
    for (size_t i = limbs_.size() - 1; i > 0; --i) {
        std::string part = std::to_string(limbs_[i - 1]);
        out.append(9 - part.size(), '0');
        out += part;
    }
    return out;
}

BigInt BigInt::div_exact(std::uint32_t divisor) const {
    if (divisor == 0) throw ValidationError("BigInt: division by zero");
    if (divisor >= kBase) throw ValidationError("BigInt: divisor too large for div_exact");
    BigInt out;
    out.sign_ = sign_;
    out.limbs_.assign(limbs_.size(), 0);
    std::uint64_t rem = 0;
    for (size_t i = limbs_.size(); i > 0; --i) {
        std::uint64_t cur = rem * kBase + limbs_[i - 1];
        out.limbs_[i - 1] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    if (rem != 0) throw ValidationError("BigInt: div_exact with nonzero remainder");
    out.trim();
    return out;
}

long long BigInt::to_int64() const {
    // |int64 max| spans three base-1e9 limbs
    if (limbs_.size() > 3) throw OverflowError("BigInt: value exceeds 64-bit range");
    unsigned long long mag = 0;
    for (size_t i = limbs_.size(); i > 0; --i) {
        if (mag > (~0ull) / kBase) throw OverflowError("BigInt: value exceeds 64-bit range");
        mag = mag * kBase + limbs_[i - 1];
    }
    unsigned long long limit = sign_ < 0 ? 9223372036854775808ull : 9223372036854775807ull;
    if (mag > limit) throw OverflowError("BigInt: value exceeds 64-bit range");
    return sign_ < 0 ? -static_cast<long long>(mag - 1) - 1 : static_cast<long long>(mag);
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace schubert
