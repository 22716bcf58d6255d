#include "schubert/coset.hpp"

#include <string>
#include <unordered_set>

#include "schubert/errors.hpp"

namespace schubert {

size_t CosetTable::total_size() const {
    size_t n = 0;
    for (const auto& s : strata_) n += s.size();
    return n;
}

bool CosetTable::has_stratum(int len) const {
    return len >= 0 && len < static_cast<int>(strata_.size());
}

const std::vector<CosetElement>& CosetTable::stratum(int len) const {
    if (!has_stratum(len))
        throw DepthError("stratum " + std::to_string(len) + " not built (table depth " +
                         std::to_string(top_length()) + ")");
    return strata_[static_cast<size_t>(len)];
}

const CosetElement& CosetTable::at(int len, int idx) const {
    const auto& s = stratum(len);
    if (idx < 1 || idx > static_cast<int>(s.size()))
        throw NotFoundError("no element w_{" + std::to_string(len) + "," + std::to_string(idx) +
                            "}: stratum has " + std::to_string(s.size()) + " elements");
    return s[static_cast<size_t>(idx - 1)];
}

const CosetElement* CosetTable::find_b(const BVector& b) const {
    auto it = index_.find(b);
    if (it == index_.end()) return nullptr;
    return &strata_[static_cast<size_t>(it->second.first)][static_cast<size_t>(it->second.second - 1)];
}

const CosetElement& CosetTable::lookup_word(const Word& w) const {
    BVector b = b_of_word(spec_.cartan, w);
    if (const CosetElement* e = find_b(b)) return *e;
    int len = length(spec_.cartan, w);
    if (!has_stratum(len) && !complete_)
        throw DepthError("word " + word_to_string(w) + " has length " + std::to_string(len) +
                         " beyond table depth " + std::to_string(top_length()));
    if (!is_min_rep(spec_.cartan, spec_.k_set, w))
        throw NotFoundError("word " + word_to_string(w) +
                            " is not a minimal coset representative");
    throw NotFoundError("word " + word_to_string(w) + " not found in table");
}

void CosetTable::push_stratum(std::vector<CosetElement> stratum) {
    int len = static_cast<int>(strata_.size());
    for (auto& e : stratum) {
        if (e.len != len)
            throw ValidationError("stratum element length " + std::to_string(e.len) +
                                  " does not match stratum " + std::to_string(len));
        auto [it, inserted] = index_.emplace(e.b, std::make_pair(len, e.idx));
        if (!inserted) throw ValidationError("duplicate fingerprint across table");
    }
    strata_.push_back(std::move(stratum));
}

std::vector<CosetElement> extend_stratum(const FlagSpec& spec,
                                         const std::vector<CosetElement>& prev) {
    const CartanMatrix& c = spec.cartan;
    int n = c.rank();
    std::vector<CosetElement> out;
    std::unordered_set<BVector, BVectorHash> seen;  // the set R of Algorithm A
    for (int i = 1; i <= n; ++i) {
        for (const CosetElement& p : prev) {
            // sigma_i * p: one reflection on the stored fingerprint
            BVector b = apply_reflection(c, i, p.b);
            if (b[static_cast<size_t>(i - 1)] >= 0) continue;  // not reduced
            if (seen.contains(b)) continue;                    // second decomposition
            // b(w^{-1}): fold the word forward from delta
            BVector b_inv = delta_weight(n);
            apply_reflection_inplace(c, i, b_inv);
            for (int letter : p.word) apply_reflection_inplace(c, letter, b_inv);
            if (!is_min_rep_b(spec.k_set, b_inv)) continue;
            CosetElement e;
            e.len = p.len + 1;
            e.idx = static_cast<int>(out.size()) + 1;
            e.word.reserve(p.word.size() + 1);
            e.word.push_back(i);
            e.word.insert(e.word.end(), p.word.begin(), p.word.end());
            e.b = std::move(b);
            e.b_inv = std::move(b_inv);
            seen.insert(e.b);
            out.push_back(std::move(e));
        }
    }
    return out;
}

CosetTable build_table(const FlagSpec& spec, const BuildOptions& options) {
    spec.validate();
    CosetTable table(spec);
    CosetElement identity;
    identity.len = 0;
    identity.idx = 1;
    identity.b = delta_weight(spec.cartan.rank());
    identity.b_inv = identity.b;
    table.push_stratum({identity});
    int len = 0;
    for (;;) {
        if (options.max_len && len >= *options.max_len) {
            table.mark_complete(false);
            break;
        }
        if (len + 1 > options.stratum_ceiling)
            throw NonTerminationError(
                "enumeration exceeded " + std::to_string(options.stratum_ceiling) +
                " strata; the matrix does not appear to define a finite group");
        std::vector<CosetElement> next = extend_stratum(spec, table.strata().back());
        if (next.empty()) {
            table.mark_complete(true);
            break;
        }
        table.push_stratum(std::move(next));
        ++len;
    }
    return table;
}

}  // namespace schubert
