#include "scx/invariants.hpp"

#include "scx/matrix_poly.hpp"

#include <algorithm>
#include <sstream>

namespace scx {

const char* stratum_name(Stratum s) {
    switch (s) {
        case Stratum::Origin: return "origin";
        case Stratum::ZOnly: return "z_only";
        case Stratum::WOnly: return "w_only";
        case Stratum::Generic: return "generic";
    }
    return "?";
}

bool key_survives(const MonomialKey& key, Stratum s) {
    switch (s) {
        case Stratum::Origin: return key.m == 0 && key.n == 0;
        case Stratum::ZOnly: return key.n == 0;
        case Stratum::WOnly: return key.m == 0;
        case Stratum::Generic: return true;
    }
    return false;
}

SupportRelation stratum_support(const Pattern& p, Stratum s) {
    SupportRelation r;
    r.k = p.size();
    for (const auto& key : p.keys())
        if (key_survives(key, s)) r.pairs.insert({key.i, key.j});
    return r;
}

NotEquivalenceError::NotEquivalenceError(std::string what, std::pair<int, int> witness_)
    : std::runtime_error(std::move(what)), witness(witness_) {}

std::vector<std::vector<int>> support_classes(const SupportRelation& r) {
    const auto related = [&](int i, int j) { return r.pairs.count({i, j}) > 0; };
    for (int i = 0; i < r.k; ++i)
        if (!related(i, i))
            throw NotEquivalenceError(
                "support relation is not reflexive at " + std::to_string(i), {i, i});
    for (const auto& [i, j] : r.pairs)
        if (!related(j, i)) {
            std::ostringstream os;
            os << "support relation is not symmetric: (" << i << ", " << j << ") without ("
               << j << ", " << i << ")";
            throw NotEquivalenceError(os.str(), {i, j});
        }
    for (const auto& [i, j] : r.pairs)
        for (int t = 0; t < r.k; ++t)
            if (related(j, t) && !related(i, t)) {
                std::ostringstream os;
                os << "support relation is not transitive: (" << i << ", " << j << ") and ("
                   << j << ", " << t << ") without (" << i << ", " << t << ")";
                throw NotEquivalenceError(os.str(), {i, t});
            }

    std::vector<std::vector<int>> classes;
    std::vector<bool> seen(static_cast<size_t>(r.k), false);
    for (int i = 0; i < r.k; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        std::vector<int> cls;
        for (int j = i; j < r.k; ++j)
            if (related(i, j)) {
                cls.push_back(j);
                seen[static_cast<size_t>(j)] = true;
            }
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<int> support_blocks(const SupportRelation& r) {
    std::vector<int> sizes;
    for (const auto& cls : support_classes(r)) sizes.push_back(static_cast<int>(cls.size()));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::set<int> CodimInvariant::stratum_distinct(Stratum s) const {
    const auto it = stratum_dims.find(s);
    if (it == stratum_dims.end()) return {};
    return {it->second.begin(), it->second.end()};
}

CodimInvariant codim_invariant(const Pattern& p) {
    if (!p.has_all_diagonal_units())
        throw std::invalid_argument(
            "codim_invariant: pattern is missing diagonal constants (i, i, 0, 0)");

    CodimInvariant inv;
    inv.k = p.size();
    inv.degree_cap = p.degree_cap();
    inv.cap_warning = p.degree_cap() < 2 * p.size();

    // One scalar character per diagonal index at the origin.
    inv.stratum_dims[Stratum::Origin] = std::vector<int>(static_cast<size_t>(p.size()), 1);
    for (Stratum s : {Stratum::ZOnly, Stratum::WOnly, Stratum::Generic}) {
        std::vector<int> dims;
        for (int b : support_blocks(stratum_support(p, s))) dims.push_back(b * b);
        inv.stratum_dims[s] = std::move(dims);
    }
    for (const auto& [s, dims] : inv.stratum_dims) inv.distinct.insert(dims.begin(), dims.end());
    return inv;
}

const char* distinguish_verdict_name(DistinguishVerdict v) {
    return v == DistinguishVerdict::Distinguished ? "distinguished"
                                                  : "indistinguishable-by-this-invariant";
}

DistinguishResult distinguish(const Pattern& p, const Pattern& q) {
    DistinguishResult r;
    r.a = codim_invariant(p);
    r.b = codim_invariant(q);
    bool same = r.a.distinct == r.b.distinct;
    for (Stratum s : all_strata)
        same = same && r.a.stratum_distinct(s) == r.b.stratum_distinct(s);
    r.verdict = same ? DistinguishVerdict::Indistinguishable : DistinguishVerdict::Distinguished;
    return r;
}

int rank_oracle(const Pattern& p, const Rational& lambda, const Rational& mu) {
    std::vector<RationalMatrix> evaluated;
    evaluated.reserve(p.keys().size());
    for (const auto& key : p.keys()) {
        MatrixPoly monomial(p.size(), p.degree_cap());
        monomial.at(key.i, key.j).add_term(key.m, key.n, Rational(1));
        evaluated.push_back(monomial.evaluate(lambda, mu));
    }
    return rational_rank(evaluated);
}

}  // namespace scx
