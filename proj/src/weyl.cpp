#include "schubert/weyl.hpp"

#include <map>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

Coord checked_mul_sub(Coord v, Coord coeff, Coord cartan) {
    // v - coeff * cartan with wraparound detection
    Coord prod = 0;
    if (__builtin_mul_overflow(coeff, cartan, &prod))
        throw OverflowError("weight coordinate overflow");
    Coord out = 0;
    if (__builtin_sub_overflow(v, prod, &out))
        throw OverflowError("weight coordinate overflow");
    return out;
}

void check_letter(int k, int n) {
    if (k < 1 || k > n)
        throw IndexError("reflection index " + std::to_string(k) + " out of range 1.." +
                         std::to_string(n));
}

}  // namespace

WeightVector delta_weight(int n) { return WeightVector(static_cast<size_t>(n), 1); }

void apply_reflection_inplace(const CartanMatrix& c, int k, WeightVector& v) {
    int n = c.rank();
    check_letter(k, n);
    if (v.size() != static_cast<size_t>(n))
        throw ValidationError("weight vector size does not match rank");
    Coord vk = v[static_cast<size_t>(k - 1)];
    if (vk == 0) return;
    for (int j = 1; j <= n; ++j) {
        int ckj = c.at(k, j);
        if (ckj == 0) continue;
        v[static_cast<size_t>(j - 1)] = checked_mul_sub(v[static_cast<size_t>(j - 1)], vk, ckj);
    }
}

WeightVector apply_reflection(const CartanMatrix& c, int k, WeightVector v) {
    apply_reflection_inplace(c, k, v);
    return v;
}

BVector b_of_word(const CartanMatrix& c, const Word& w) {
    WeightVector v = delta_weight(c.rank());
    for (auto it = w.rbegin(); it != w.rend(); ++it) apply_reflection_inplace(c, *it, v);
    return v;
}

BVector b_of_word_substitution(const CartanMatrix& c, const Word& w) {
    int n = c.rank();
    // p as a formal sum of generators; substitute the last letter first
    std::map<int, Coord> terms;
    for (int i = 1; i <= n; ++i) terms[i] = 1;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        int k = *it;
        check_letter(k, n);
        auto pos = terms.find(k);
        if (pos == terms.end() || pos->second == 0) continue;
        Coord coeff = pos->second;
        // omega_k |-> omega_k - sum_j c_{kj} omega_j
        for (int j = 1; j <= n; ++j) {
            int ckj = c.at(k, j);
            if (ckj == 0) continue;
            terms[j] = checked_mul_sub(terms[j], coeff, ckj);
        }
    }
    BVector out(static_cast<size_t>(n), 0);
    for (const auto& [i, coeff] : terms) out[static_cast<size_t>(i - 1)] = coeff;
    return out;
}

BVector b_of_inverse(const CartanMatrix& c, const Word& w) {
    WeightVector v = delta_weight(c.rank());
    for (int letter : w) apply_reflection_inplace(c, letter, v);
    return v;
}

bool has_left_descent(const BVector& b, int i) {
    if (i < 1 || i > static_cast<int>(b.size()))
        throw IndexError("descent index " + std::to_string(i) + " out of range");
    return b[static_cast<size_t>(i - 1)] < 0;
}

int length(const CartanMatrix& c, const Word& w) {
    BVector b = b_of_word(c, w);
    int n = c.rank();
    int strips = 0;
    for (;;) {
        int descent = 0;
        for (int i = 1; i <= n; ++i) {
            if (b[static_cast<size_t>(i - 1)] < 0) {
                descent = i;
                break;
            }
        }
        if (descent == 0) return strips;  // b back at delta
        apply_reflection_inplace(c, descent, b);
        ++strips;
    }
}

bool is_min_rep_b(const ParabolicSubset& k_set, const BVector& b_inv) {
    for (int i : k_set.members()) {
        if (b_inv[static_cast<size_t>(i - 1)] < 0) return false;
    }
    return true;
}

bool is_min_rep(const CartanMatrix& c, const ParabolicSubset& k_set, const Word& w) {
    return is_min_rep_b(k_set, b_of_inverse(c, w));
}

std::string word_to_string(const Word& w) {
    if (w.empty()) return "id";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back('.');
        out += std::to_string(w[i]);
    }
    return out;
}

Word parse_word(const std::string& s, int n) {
    if (s == "id" || s.empty()) return {};
    Word out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t dot = s.find('.', pos);
        if (dot == std::string::npos) dot = s.size();
        if (dot == pos) throw ValidationError("malformed word '" + s + "'");
        int letter = 0;
        for (size_t i = pos; i < dot; ++i) {
            char ch = s[i];
            if (ch < '0' || ch > '9') throw ValidationError("malformed word '" + s + "'");
            letter = letter * 10 + (ch - '0');
            if (letter > n) break;
        }
        if (letter < 1 || letter > n)
            throw ValidationError("word letter out of range 1.." + std::to_string(n) + " in '" +
                                  s + "'");
        out.push_back(letter);
        pos = dot + 1;
    }
    if (!s.empty() && s.back() == '.') throw ValidationError("malformed word '" + s + "'");
    return out;
}

}  // namespace schubert
