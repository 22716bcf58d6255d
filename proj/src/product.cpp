#include "schubert/product.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <string>
#include <thread>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

GradedPoly select_naive(const CartanMatrix& c, const Word& w_word, const CosetElement& u) {
    int k = static_cast<int>(w_word.size());
    int r = u.len;
    GradedPoly poly(k);
    std::vector<int> subset(static_cast<size_t>(r));
    // ascending-index r-subsets of [1..k] in lexicographic order
    std::function<void(int, int)> rec = [&](int depth, int first) {
        if (depth == r) {
            WeightVector v = delta_weight(c.rank());
            for (int d = r; d > 0; --d)
                apply_reflection_inplace(c, w_word[static_cast<size_t>(subset[static_cast<size_t>(d - 1)] - 1)], v);
            if (v == u.b) {
                Monomial m(static_cast<size_t>(k), 0);
                for (int pos : subset) m[static_cast<size_t>(pos - 1)] = 1;
                poly.add_term(m, 1);
            }
            return;
        }
        for (int pos = first; pos <= k - (r - depth - 1); ++pos) {
            subset[static_cast<size_t>(depth)] = pos;
            rec(depth + 1, pos + 1);
        }
    };
    rec(0, 1);
    return poly;
}

GradedPoly select_pruned(const CartanMatrix& c, const Word& w_word, const CosetElement& u) {
    int k = static_cast<int>(w_word.size());
    int r = u.len;
    GradedPoly poly(k);
    std::vector<int> chosen(static_cast<size_t>(r));
    // b(subword^{-1}) accumulated left to right; a branch survives only while
    // each picked letter lengthens the subword (prefixes of a reduced word
    // are reduced, so this loses nothing)
    std::function<void(int, int, const BVector&)> rec = [&](int pos, int depth,
                                                            const BVector& b_inv) {
        if (depth == r) {
            if (b_inv == u.b_inv) {
                Monomial m(static_cast<size_t>(k), 0);
                for (int p : chosen) m[static_cast<size_t>(p - 1)] = 1;
                poly.add_term(m, 1);
            }
            return;
        }
        for (int p = pos; p <= k - (r - depth - 1); ++p) {
            int letter = w_word[static_cast<size_t>(p - 1)];
            if (b_inv[static_cast<size_t>(letter - 1)] < 0) continue;  // would shorten
            chosen[static_cast<size_t>(depth)] = p;
            rec(p + 1, depth + 1, apply_reflection(c, letter, b_inv));
        }
    };
    rec(1, 0, delta_weight(c.rank()));
    return poly;
}

}  // namespace

GradedPoly select_subwords_on_word(const CartanMatrix& c, const Word& w_word,
                                   const CosetElement& u, SelectMode mode) {
    int k = static_cast<int>(w_word.size());
    if (u.len > k) return GradedPoly::zero(k);
    if (u.len == 0) return GradedPoly::constant(k, 1);
    return mode == SelectMode::naive ? select_naive(c, w_word, u) : select_pruned(c, w_word, u);
}

SubwordSelection select_subwords(const CosetTable& table, const CosetElement& w,
                                 const CosetElement& u, SelectMode mode) {
    return SubwordSelection{
        {w.len, w.idx},
        {u.len, u.idx},
        select_subwords_on_word(table.cartan(), w.word, u, mode),
    };
}

std::int64_t structure_constant(const CosetTable& table, const CosetElement& u,
                                const CosetElement& v, const CosetElement& w, SelectMode mode) {
    if (u.len + v.len != w.len)
        throw PreconditionError("structure constant needs l(u)+l(v)=l(w), got " +
                                std::to_string(u.len) + "+" + std::to_string(v.len) +
                                " != " + std::to_string(w.len));
    const CartanMatrix& c = table.cartan();
    GradedPoly pu = select_subwords_on_word(c, w.word, u, mode);
    if (pu.is_zero()) return 0;
    GradedPoly pv = select_subwords_on_word(c, w.word, v, mode);
    if (pv.is_zero()) return 0;
    BigInt value = eval_T(word_cartan_matrix(c, w.word), pu * pv);
    return value.to_int64();
}

ProductExpansion expand_product(const CosetTable& table, const CosetElement& u,
                                const CosetElement& v, int jobs, SelectMode mode) {
    int degree = u.len + v.len;
    const auto& stratum = table.stratum(degree);  // DepthError when not built
    ProductExpansion out;
    out.u_ref = {u.len, u.idx};
    out.v_ref = {v.len, v.idx};
    out.degree = degree;
    out.coeffs.assign(stratum.size(), 0);
    if (stratum.empty()) return out;
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    size_t workers = std::min<size_t>(static_cast<size_t>(jobs), stratum.size());
    if (workers <= 1) {
        for (size_t i = 0; i < stratum.size(); ++i)
            out.coeffs[i] = structure_constant(table, u, v, stratum[i], mode);
        return out;
    }
    std::atomic<size_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= stratum.size()) return;
            try {
                out.coeffs[i] = structure_constant(table, u, v, stratum[i], mode);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

}  // namespace schubert
