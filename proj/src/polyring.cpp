#include "schubert/polyring.hpp"

#include <numeric>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

}  // namespace

GradedPoly GradedPoly::constant(int arity, BigInt c) {
    GradedPoly p(arity);
    if (!c.is_zero()) p.terms_.emplace(Monomial(static_cast<size_t>(arity), 0), std::move(c));
    return p;
}

GradedPoly GradedPoly::variable(int arity, int index) {
    if (index < 1 || index > arity)
        throw IndexError("variable index " + std::to_string(index) + " out of range 1.." +
                         std::to_string(arity));
    Monomial m(static_cast<size_t>(arity), 0);
    m[static_cast<size_t>(index - 1)] = 1;
    return from_monomial(std::move(m), 1);
}

GradedPoly GradedPoly::from_monomial(Monomial m, BigInt c) {
    GradedPoly p(static_cast<int>(m.size()));
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

int GradedPoly::degree() const {
    if (terms_.empty()) throw GradingError("degree of the zero polynomial");
    return monomial_degree(terms_.begin()->first);
}

BigInt GradedPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt() : it->second;
}

void GradedPoly::add_term(const Monomial& m, const BigInt& c) {
    if (c.is_zero()) return;
    if (m.size() != static_cast<size_t>(arity_))
        throw GradingError("monomial arity mismatch");
    if (!terms_.empty() && monomial_degree(m) != degree())
        throw GradingError("term of degree " + std::to_string(monomial_degree(m)) +
                           " added to polynomial of degree " + std::to_string(degree()));
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& rhs) {
    if (arity_ != rhs.arity_) throw GradingError("adding polynomials of different arity");
    if (rhs.is_zero()) return *this;
    if (!is_zero() && degree() != rhs.degree())
        throw GradingError("adding homogeneous polynomials of degrees " +
                           std::to_string(degree()) + " and " + std::to_string(rhs.degree()));
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    if (a.arity_ != b.arity_) throw GradingError("multiplying polynomials of different arity");
    GradedPoly out(a.arity_);
    Monomial prod(static_cast<size_t>(a.arity_));
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (size_t i = 0; i < prod.size(); ++i) {
                unsigned e = static_cast<unsigned>(ma[i]) + mb[i];
                if (e > 0xffffu) throw OverflowError("monomial exponent overflow");
                prod[i] = static_cast<std::uint16_t>(e);
            }
            out.add_term(prod, ca * cb);
        }
    }
    return out;
}

GradedPoly add(const GradedPoly& p, const GradedPoly& q) { return p + q; }
GradedPoly multiply(const GradedPoly& p, const GradedPoly& q) { return p * q; }

std::vector<std::pair<int, GradedPoly>> GradedPoly::split_by_last_variable() const {
    if (arity_ < 1) throw GradingError("split needs arity >= 1");
    std::map<int, GradedPoly> parts;
    for (const auto& [m, c] : terms_) {
        int r = m.back();
        Monomial head(m.begin(), m.end() - 1);
        auto it = parts.find(r);
        if (it == parts.end()) it = parts.emplace(r, GradedPoly(arity_ - 1)).first;
        it->second.add_term(head, c);
    }
    std::vector<std::pair<int, GradedPoly>> out;
    out.reserve(parts.size());
    for (auto& [r, h] : parts) {
        if (!h.is_zero()) out.emplace_back(r, std::move(h));
    }
    return out;
}

void GradedPoly::for_each_term(
    const std::function<void(const Monomial&, const BigInt&)>& fn) const {
    for (const auto& [m, c] : terms_) fn(m, c);
}

std::string GradedPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigInt abs_c = c.signum() < 0 ? -c : c;
        if (first) {
            if (c.signum() < 0) out += "-";
        } else {
            out += c.signum() < 0 ? " - " : " + ";
        }
        first = false;
        std::string factors;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += "x" + std::to_string(i + 1);
            if (m[i] > 1) factors += "^" + std::to_string(m[i]);
        }
        if (factors.empty()) {
            out += abs_c.to_string();
        } else if (abs_c == BigInt(1)) {
            out += factors;
        } else {
            out += abs_c.to_string() + "*" + factors;
        }
    }
    return out;
}

GradedPoly power_of_linear_form(const std::vector<int>& coeffs, int e) {
    if (e < 0) throw ValidationError("negative exponent");
    int m = static_cast<int>(coeffs.size());
    GradedPoly out(m);
    if (e == 0) return GradedPoly::constant(m, 1);
    if (m == 0) return out;  // empty sum to a positive power
    // walk the compositions of e into m parts; coefficient is the running
    // multinomial times the power product
    Monomial expo(static_cast<size_t>(m), 0);
    // multinomial(e; r_1..r_m) built incrementally as C(e, r_1) C(e-r_1, r_2) ...
    std::function<void(int, int, BigInt)> rec = [&](int var, int remaining, BigInt coef) {
        if (var == m - 1) {
            if (coeffs[static_cast<size_t>(var)] == 0 && remaining > 0) return;
            expo[static_cast<size_t>(var)] = static_cast<std::uint16_t>(remaining);
            BigInt c = std::move(coef);
            for (int t = 0; t < remaining; ++t) c *= BigInt(coeffs[static_cast<size_t>(var)]);
            out.add_term(expo, c);
            expo[static_cast<size_t>(var)] = 0;
            return;
        }
        BigInt c = std::move(coef);  // multinomial so far, times coeff powers
        for (int r = 0; r <= remaining; ++r) {
            if (r > 0) {
                if (coeffs[static_cast<size_t>(var)] == 0) break;
                // extend the binomial C(remaining, r) incrementally;
                // C(n,r-1)*(n-r+1) is divisible by r
                c *= BigInt(remaining - r + 1);
                c = c.div_exact(static_cast<std::uint32_t>(r));
                c *= BigInt(coeffs[static_cast<size_t>(var)]);
            }
            expo[static_cast<size_t>(var)] = static_cast<std::uint16_t>(r);
            rec(var + 1, remaining - r, c);
        }
        expo[static_cast<size_t>(var)] = 0;
    };
    rec(0, e, BigInt(1));
    return out;
}

}  // namespace schubert
