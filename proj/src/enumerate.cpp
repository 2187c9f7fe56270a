#include "scx/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace scx {

std::vector<Permutation> all_permutations(int k) {
    if (k < 1) throw std::invalid_argument("all_permutations: size must be positive");
    std::vector<int> im(static_cast<size_t>(k));
    std::iota(im.begin(), im.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

namespace {

void partitions_into(int remaining, int min_part, std::vector<int>& acc,
                     std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    for (int part = min_part; part <= remaining; ++part) {
        acc.push_back(part);
        partitions_into(remaining - part, part, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> integer_partitions(int k) {
    if (k < 1) throw std::invalid_argument("integer_partitions: size must be positive");
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    partitions_into(k, 1, acc, out);
    return out;
}

Permutation cycle_type_rep(const std::vector<int>& type) {
    std::vector<int> sorted = type;
    std::sort(sorted.begin(), sorted.end());
    const int k = std::accumulate(sorted.begin(), sorted.end(), 0);
    if (k < 1) throw std::invalid_argument("cycle_type_rep: empty type");
    std::vector<int> im(static_cast<size_t>(k));
    int start = 0;
    for (int len : sorted) {
        if (len < 1) throw std::invalid_argument("cycle_type_rep: nonpositive part");
        for (int t = 0; t < len - 1; ++t) im[static_cast<size_t>(start + t)] = start + t + 1;
        im[static_cast<size_t>(start + len - 1)] = start;
        start += len;
    }
    return Permutation::from_images(std::move(im));
}

Permutation conjugator_to_rep(const Permutation& p) {
    auto cycles = p.cycles();
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<int> g(static_cast<size_t>(p.size()));
    int start = 0;
    for (const auto& c : cycles) {
        for (size_t t = 0; t < c.size(); ++t)
            g[static_cast<size_t>(c[t])] = start + static_cast<int>(t);
        start += static_cast<int>(c.size());
    }
    return Permutation::from_images(std::move(g));
}

std::vector<Permutation> centralizer(const Permutation& p) {
    const int k = p.size();
    std::map<int, std::vector<std::vector<int>>> classes;  // length -> cycles
    for (auto& c : p.cycles()) classes[static_cast<int>(c.size())].push_back(std::move(c));

    // Per length class, every way to permute its cycles and rotate each one.
    std::vector<std::vector<std::vector<std::pair<int, int>>>> per_class;
    for (const auto& [len, cycles] : classes) {
        const int count = static_cast<int>(cycles.size());
        std::vector<std::vector<std::pair<int, int>>> assignments;
        std::vector<int> target(static_cast<size_t>(count));
        std::iota(target.begin(), target.end(), 0);
        do {
            std::vector<int> offset(static_cast<size_t>(count), 0);
            while (true) {
                std::vector<std::pair<int, int>> asg;
                asg.reserve(static_cast<size_t>(count) * len);
                for (int a = 0; a < count; ++a) {
                    const auto& from = cycles[static_cast<size_t>(a)];
                    const auto& to = cycles[static_cast<size_t>(target[static_cast<size_t>(a)])];
                    for (int t = 0; t < len; ++t)
                        asg.emplace_back(from[static_cast<size_t>(t)],
                                         to[static_cast<size_t>((t + offset[static_cast<size_t>(a)]) % len)]);
                }
                assignments.push_back(std::move(asg));
                int d = 0;
                while (d < count && ++offset[static_cast<size_t>(d)] == len) {
                    offset[static_cast<size_t>(d)] = 0;
                    ++d;
                }
                if (d == count) break;
            }
        } while (std::next_permutation(target.begin(), target.end()));
        per_class.push_back(std::move(assignments));
    }

    std::vector<std::vector<int>> images_list(1, std::vector<int>(static_cast<size_t>(k), -1));
    for (const auto& assignments : per_class) {
        std::vector<std::vector<int>> next;
        next.reserve(images_list.size() * assignments.size());
        for (const auto& im : images_list)
            for (const auto& asg : assignments) {
                auto im2 = im;
                for (const auto& [from, to] : asg) im2[static_cast<size_t>(from)] = to;
                next.push_back(std::move(im2));
            }
        images_list = std::move(next);
    }

    std::vector<Permutation> out;
    out.reserve(images_list.size());
    for (auto& im : images_list) out.push_back(Permutation::from_images(std::move(im)));
    std::sort(out.begin(), out.end());
    return out;
}

CanonicalPair canonical_pair(const Z2Action& a) {
    const Permutation rep1 = cycle_type_rep(a.sigma1().cycle_type());
    const Permutation g0 = conjugator_to_rep(a.sigma1());
    const Permutation moved2 = a.sigma2().conjugated_by(g0);

    if (rep1.is_identity())
        return {rep1.images(), cycle_type_rep(moved2.cycle_type()).images()};

    // Remaining freedom is exactly the centralizer of rep1.
    std::vector<int> best = moved2.images();
    for (const Permutation& c : centralizer(rep1)) {
        auto candidate = moved2.conjugated_by(c).images();
        if (candidate < best) best = std::move(candidate);
    }
    return {rep1.images(), std::move(best)};
}

std::vector<Z2Action> commuting_pairs(int k) {
    std::vector<Z2Action> out;
    for (const Permutation& s1 : all_permutations(k))
        for (const Permutation& s2 : centralizer(s1)) out.emplace_back(s1, s2);
    return out;
}

std::vector<CanonicalPair> canonical_commuting_pairs(int k) {
    std::set<CanonicalPair> seen;
    for (const auto& type : integer_partitions(k)) {
        const Permutation rep = cycle_type_rep(type);
        const auto cent = centralizer(rep);
        const bool trivial = rep.is_identity();
        for (const Permutation& s2 : cent) {
            if (trivial) {
                seen.insert({rep.images(), cycle_type_rep(s2.cycle_type()).images()});
                continue;
            }
            std::vector<int> best = s2.images();
            for (const Permutation& c : cent) {
                auto candidate = s2.conjugated_by(c).images();
                if (candidate < best) best = std::move(candidate);
            }
            seen.insert({rep.images(), std::move(best)});
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace scx
