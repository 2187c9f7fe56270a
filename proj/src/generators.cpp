#include "scx/generators.hpp"

#include <stdexcept>

namespace scx {

MonomialGenerator MonomialGenerator::from_permutation(int m, int n, const Permutation& p) {
    MonomialGenerator g{m, n, {}};
    for (int x = 0; x < p.size(); ++x) g.relation.insert({x, p(x)});
    return g;
}

GeneratorSet::GeneratorSet(int k, std::vector<MonomialGenerator> gens, bool include_diagonals)
    : k_(k), gens_(std::move(gens)), include_diagonals_(include_diagonals) {
    if (k < 1) throw std::invalid_argument("GeneratorSet: size must be positive");
    for (const auto& g : gens_) {
        if (g.m < 0 || g.n < 0)
            throw std::invalid_argument("GeneratorSet: negative generator exponent");
        if (g.relation.empty())
            throw std::invalid_argument("GeneratorSet: empty generator relation");
        for (const auto& [i, j] : g.relation)
            if (i < 0 || i >= k || j < 0 || j >= k)
                throw std::invalid_argument("GeneratorSet: relation entry out of range");
    }
}

std::vector<MonomialGenerator> GeneratorSet::materialized() const {
    std::vector<MonomialGenerator> out = gens_;
    if (include_diagonals_)
        for (int i = 0; i < k_; ++i) out.push_back({0, 0, {{i, i}}});
    return out;
}

MatrixPoly permutation_matrix(const Permutation& p, int degree_cap) {
    MatrixPoly out(p.size(), degree_cap);
    for (int j = 0; j < p.size(); ++j) out.at(j, p(j)).add_term(0, 0, Rational(1));
    return out;
}

GeneratorSet semicrossed_generators(const Z2Action& a) {
    std::vector<MonomialGenerator> gens;
    gens.push_back(MonomialGenerator::from_permutation(1, 0, a.sigma1()));
    gens.push_back(MonomialGenerator::from_permutation(0, 1, a.sigma2()));
    return GeneratorSet(a.size(), std::move(gens), true);
}

namespace {

// Dense index over the key universe: ((i*k + j)*(cap+1) + m)*(cap+1) + n.
struct KeyUniverse {
    int k, cap;

    size_t index(const MonomialKey& key) const {
        return ((static_cast<size_t>(key.i) * k + key.j) * (cap + 1) + key.m) * (cap + 1) + key.n;
    }
    size_t size() const {
        return static_cast<size_t>(k) * k * (cap + 1) * (cap + 1);
    }
};

}  // namespace

Pattern generated_pattern(const GeneratorSet& g, int degree_cap) {
    if (degree_cap < 0) throw std::invalid_argument("generated_pattern: negative degree cap");
    const int k = g.size();
    const KeyUniverse universe{k, degree_cap};
    std::vector<bool> present(universe.size(), false);

    std::vector<MonomialKey> worklist;
    std::vector<std::vector<MonomialKey>> by_row(static_cast<size_t>(k));
    std::vector<std::vector<MonomialKey>> by_col(static_cast<size_t>(k));

    const auto push = [&](const MonomialKey& key) {
        if (key.m + key.n > degree_cap) return;
        const size_t idx = universe.index(key);
        if (present[idx]) return;
        present[idx] = true;
        worklist.push_back(key);
        by_row[static_cast<size_t>(key.i)].push_back(key);
        by_col[static_cast<size_t>(key.j)].push_back(key);
    };

    for (const auto& gen : g.materialized())
        for (const auto& [i, j] : gen.relation) push({i, j, gen.m, gen.n});

    // by_row/by_col grow while iterating, so index rather than range-iterate.
    for (size_t next = 0; next < worklist.size(); ++next) {
        const MonomialKey key = worklist[next];
        const auto& right = by_row[static_cast<size_t>(key.j)];
        for (size_t t = 0; t < right.size(); ++t) {
            const MonomialKey other = right[t];
            push({key.i, other.j, key.m + other.m, key.n + other.n});
        }
        const auto& left = by_col[static_cast<size_t>(key.i)];
        for (size_t t = 0; t < left.size(); ++t) {
            const MonomialKey other = left[t];
            push({other.i, key.j, other.m + key.m, other.n + key.n});
        }
    }

    std::set<MonomialKey> keys(worklist.begin(), worklist.end());
    return Pattern(k, degree_cap, PatternKind::Generated, std::move(keys), "Generated");
}

Pattern closed_form_pattern(const Z2Action& a, int degree_cap) {
    if (degree_cap < 0) throw std::invalid_argument("closed_form_pattern: negative degree cap");
    std::set<MonomialKey> keys;
    for (int i = 0; i < a.size(); ++i) {
        int via_m = i;
        for (int m = 0; m <= degree_cap; ++m) {
            int j = via_m;
            for (int n = 0; m + n <= degree_cap; ++n) {
                keys.insert({i, j, m, n});
                j = a.sigma2()(j);
            }
            via_m = a.sigma1()(via_m);
        }
    }
    return Pattern(a.size(), degree_cap, PatternKind::Generated, std::move(keys),
                   "Generated (closed form)");
}

PatternDiff verify_identification(const Z2Action& a, const Pattern& target, int degree_cap,
                                  const std::optional<std::vector<int>>& relabel) {
    Pattern generated = generated_pattern(semicrossed_generators(a), degree_cap);
    if (relabel) generated = generated.relabeled(*relabel);
    return equal_to_degree(generated, target, degree_cap);
}

PatternDiff probe_generating_set(const GeneratorSet& candidate, const Pattern& target,
                                 int degree_cap) {
    return equal_to_degree(generated_pattern(candidate, degree_cap), target, degree_cap);
}

}  // namespace scx
