#include "scx/pattern.hpp"

#include <stdexcept>

namespace scx {

namespace {

int positive_mod(int a, int k) { return ((a % k) + k) % k; }

void require_sizes(int k, int degree_cap) {
    if (k < 1) throw std::invalid_argument("pattern: matrix size must be positive");
    if (degree_cap < 0) throw std::invalid_argument("pattern: negative degree cap");
}

}  // namespace

const char* pattern_kind_name(PatternKind kind) {
    switch (kind) {
        case PatternKind::Bidisk: return "Bidisk";
        case PatternKind::Bk: return "Bk";
        case PatternKind::AkD2: return "AkD2";
        case PatternKind::AkDTensor: return "AkDTensor";
        case PatternKind::Bk2: return "Bk2";
        case PatternKind::Tensor: return "Tensor";
        case PatternKind::Generated: return "Generated";
        case PatternKind::Custom: return "Custom";
    }
    return "?";
}

Pattern::Pattern(int k, int degree_cap, PatternKind kind, std::set<MonomialKey> keys,
                 std::string label)
    : k_(k), cap_(degree_cap), kind_(kind), label_(std::move(label)), keys_(std::move(keys)) {
    require_sizes(k, degree_cap);
    for (const auto& key : keys_) {
        if (key.i < 0 || key.i >= k_ || key.j < 0 || key.j >= k_)
            throw std::invalid_argument("pattern: key index out of range");
        if (key.m < 0 || key.n < 0 || key.m + key.n > cap_)
            throw std::invalid_argument("pattern: key exponents out of range");
    }
    if (label_.empty()) label_ = pattern_kind_name(kind_);
}

std::vector<int> Pattern::keys_per_degree() const {
    std::vector<int> out(static_cast<size_t>(cap_) + 1, 0);
    for (const auto& key : keys_) ++out[static_cast<size_t>(key.m + key.n)];
    return out;
}

Pattern Pattern::restricted(int cap) const {
    if (cap < 0 || cap > cap_)
        throw std::invalid_argument("pattern: restriction cap out of range");
    std::set<MonomialKey> keys;
    for (const auto& key : keys_)
        if (key.m + key.n <= cap) keys.insert(key);
    return Pattern(k_, cap, kind_, std::move(keys), label_);
}

Pattern Pattern::relabeled(const std::vector<int>& pi) const {
    if (static_cast<int>(pi.size()) != k_)
        throw std::invalid_argument("pattern: relabeling size mismatch");
    std::set<MonomialKey> keys;
    for (const auto& key : keys_)
        keys.insert({pi[static_cast<size_t>(key.i)], pi[static_cast<size_t>(key.j)], key.m, key.n});
    if (keys.size() != keys_.size())
        throw std::invalid_argument("pattern: relabeling is not a bijection");
    return Pattern(k_, cap_, PatternKind::Custom, std::move(keys), label_ + " (relabeled)");
}

bool Pattern::has_all_diagonal_units() const {
    for (int i = 0; i < k_; ++i)
        if (!contains({i, i, 0, 0})) return false;
    return true;
}

Pattern pattern_bidisk(int degree_cap) {
    require_sizes(1, degree_cap);
    std::set<MonomialKey> keys;
    for (int m = 0; m <= degree_cap; ++m)
        for (int n = 0; m + n <= degree_cap; ++n) keys.insert({0, 0, m, n});
    return Pattern(1, degree_cap, PatternKind::Bidisk, std::move(keys));
}

Pattern pattern_bk(int k, int degree_cap) {
    require_sizes(k, degree_cap);
    std::set<MonomialKey> keys;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int m = positive_mod(i - j, k); m <= degree_cap; m += k)
                keys.insert({i, j, m, 0});
    return Pattern(k, degree_cap, PatternKind::Bk, std::move(keys),
                   "Bk(" + std::to_string(k) + ")");
}

Pattern pattern_bk2(int k, int degree_cap) {
    require_sizes(k, degree_cap);
    std::set<MonomialKey> keys;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int m = 0; m <= degree_cap; ++m)
                for (int n = 0; m + n <= degree_cap; ++n)
                    if (positive_mod(m + n - (i - j), k) == 0) keys.insert({i, j, m, n});
    return Pattern(k, degree_cap, PatternKind::Bk2, std::move(keys),
                   "Bk2(" + std::to_string(k) + ")");
}

Pattern pattern_akd2(int k, int degree_cap) {
    require_sizes(k, degree_cap);
    std::set<MonomialKey> keys;
    for (int m = 0; m <= degree_cap; ++m)
        for (int n = 0; m + n <= degree_cap; ++n)
            if ((m + n) % k == 0) keys.insert({0, 0, m, n});
    return Pattern(1, degree_cap, PatternKind::AkD2, std::move(keys),
                   "AkD2(" + std::to_string(k) + ")");
}

Pattern pattern_akd_tensor(int k, int l, int degree_cap) {
    require_sizes(k, degree_cap);
    require_sizes(l, degree_cap);
    std::set<MonomialKey> keys;
    for (int m = 0; m <= degree_cap; m += k)
        for (int n = 0; m + n <= degree_cap; n += l) keys.insert({0, 0, m, n});
    return Pattern(1, degree_cap, PatternKind::AkDTensor, std::move(keys),
                   "AkDTensor(" + std::to_string(k) + "," + std::to_string(l) + ")");
}

Pattern pattern_tensor(int k, int l, int degree_cap) {
    require_sizes(k, degree_cap);
    require_sizes(l, degree_cap);
    std::set<MonomialKey> keys;
    for (int i = 0; i < k; ++i)
        for (int ip = 0; ip < l; ++ip)
            for (int j = 0; j < k; ++j)
                for (int jp = 0; jp < l; ++jp) {
                    const int row = i * l + ip;
                    const int col = j * l + jp;
                    for (int m = positive_mod(i - j, k); m <= degree_cap; m += k)
                        for (int n = positive_mod(ip - jp, l); m + n <= degree_cap; n += l)
                            keys.insert({row, col, m, n});
                }
    return Pattern(k * l, degree_cap, PatternKind::Tensor, std::move(keys),
                   "Tensor(" + std::to_string(k) + "," + std::to_string(l) + ")");
}

std::optional<MonomialKey> mult_closure_witness(const Pattern& p) {
    // Keys grouped by row index for the right factor.
    std::vector<std::vector<MonomialKey>> by_row(static_cast<size_t>(p.size()));
    for (const auto& key : p.keys()) by_row[static_cast<size_t>(key.i)].push_back(key);
    for (const auto& a : p.keys())
        for (const auto& b : by_row[static_cast<size_t>(a.j)]) {
            if (a.m + b.m + a.n + b.n > p.degree_cap()) continue;
            const MonomialKey composite{a.i, b.j, a.m + b.m, a.n + b.n};
            if (!p.contains(composite)) return composite;
        }
    return std::nullopt;
}

bool is_mult_closed(const Pattern& p) { return !mult_closure_witness(p).has_value(); }

PatternDiff equal_to_degree(const Pattern& p, const Pattern& q, int degree_cap) {
    if (p.size() != q.size())
        throw std::invalid_argument("equal_to_degree: matrix sizes differ (" +
                                    std::to_string(p.size()) + " vs " + std::to_string(q.size()) +
                                    ")");
    std::set<MonomialKey> a, b;
    for (const auto& key : p.keys())
        if (key.m + key.n <= degree_cap) a.insert(key);
    for (const auto& key : q.keys())
        if (key.m + key.n <= degree_cap) b.insert(key);

    PatternDiff diff;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && *ia < *ib)) {
            diff.witness = *ia;
            diff.side = 0;
            return diff;
        }
        if (ia == a.end() || *ib < *ia) {
            diff.witness = *ib;
            diff.side = 1;
            return diff;
        }
        ++ia;
        ++ib;
    }
    diff.equal = true;
    return diff;
}

}  // namespace scx
