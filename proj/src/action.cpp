#include "scx/action.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace scx {

namespace {

std::string not_commuting_message(int point, int via12, int via21) {
    std::ostringstream os;
    os << "permutations do not commute: at point " << point << ", sigma1(sigma2(" << point
       << ")) = " << via12 << " but sigma2(sigma1(" << point << ")) = " << via21;
    return os.str();
}

}  // namespace

NotCommutingError::NotCommutingError(int point_, int via12_, int via21_)
    : std::invalid_argument(not_commuting_message(point_, via12_, via21_)),
      point(point_),
      via12(via12_),
      via21(via21_) {}

Z2Action::Z2Action(Permutation sigma1, Permutation sigma2)
    : sigma1_(std::move(sigma1)), sigma2_(std::move(sigma2)) {
    if (sigma1_.size() != sigma2_.size())
        throw std::invalid_argument("Z2Action: permutations act on different sets");
    for (int x = 0; x < sigma1_.size(); ++x) {
        const int via12 = sigma1_(sigma2_(x));
        const int via21 = sigma2_(sigma1_(x));
        if (via12 != via21) throw NotCommutingError(x, via12, via21);
    }
}

int Z2Action::apply_word(int m, int n, int x) const {
    if (x < 0 || x >= size())
        throw std::out_of_range("apply_word: point " + std::to_string(x) + " out of range");
    int y = x;
    for (int t = 0; t < m; ++t) y = sigma1_(y);
    for (int t = 0; t < n; ++t) y = sigma2_(y);
    return y;
}

Orbit joint_orbit(const Z2Action& a, int x) {
    if (x < 0 || x >= a.size())
        throw std::out_of_range("joint_orbit: point " + std::to_string(x) + " out of range");
    Orbit o;
    std::vector<bool> seen(static_cast<size_t>(a.size()), false);
    std::deque<int> queue{x};
    seen[static_cast<size_t>(x)] = true;
    while (!queue.empty()) {
        const int y = queue.front();
        queue.pop_front();
        o.points.push_back(y);
        for (int z : {a.sigma1()(y), a.sigma2()(y)}) {
            if (!seen[static_cast<size_t>(z)]) {
                seen[static_cast<size_t>(z)] = true;
                queue.push_back(z);
            }
        }
    }
    return o;
}

bool is_transitive(const Z2Action& a) {
    return joint_orbit(a, 0).size() == a.size();
}

std::string PerpViolation::describe() const {
    std::ostringstream os;
    if (condition == Condition::OrbitIntersection) {
        os << "condition (i) fails: the sigma1-orbit of " << witness.first
           << " and the sigma2-orbit of " << witness.second
           << " do not intersect in exactly one point";
    } else {
        os << "condition (ii) fails: points " << witness.first << " and " << witness.second
           << " lie on orbits of different cardinality under the same generator";
    }
    return os.str();
}

std::optional<PerpViolation> check_perpendicular(const Z2Action& a) {
    const int k = a.size();
    std::vector<Orbit> o1(static_cast<size_t>(k)), o2(static_cast<size_t>(k));
    for (int x = 0; x < k; ++x) {
        o1[static_cast<size_t>(x)] = orbit(a.sigma1(), x);
        o2[static_cast<size_t>(x)] = orbit(a.sigma2(), x);
    }
    // (ii) uniform orbit cardinalities per generator
    for (const auto* v : {&o1, &o2})
        for (int x = 1; x < k; ++x)
            if ((*v)[static_cast<size_t>(x)].size() != (*v)[0].size())
                return PerpViolation{PerpViolation::Condition::OrbitCardinality, {0, x}};
    // (i) every sigma1-orbit meets every sigma2-orbit in exactly one point
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) {
            int hits = 0;
            for (int p : o1[static_cast<size_t>(x)].points)
                if (o2[static_cast<size_t>(y)].contains(p)) ++hits;
            if (hits != 1)
                return PerpViolation{PerpViolation::Condition::OrbitIntersection, {x, y}};
        }
    return std::nullopt;
}

bool is_perpendicular(const Z2Action& a) { return !check_perpendicular(a).has_value(); }

NotPerpendicularError::NotPerpendicularError(PerpViolation v)
    : std::invalid_argument("action is not perpendicular: " + v.describe()), violation(v) {}

std::pair<int, int> PerpDecomposition::h_index(int x) const {
    const auto& [p1, p2] = h[static_cast<size_t>(x)];
    return {X1.index_of(p1), X2.index_of(p2)};
}

std::vector<int> PerpDecomposition::tensor_relabeling() const {
    const int k1 = X1.size();
    const int k2 = X2.size();
    std::vector<int> out(static_cast<size_t>(h.size()));
    for (size_t x = 0; x < h.size(); ++x) {
        const auto [p, q] = h_index(static_cast<int>(x));
        const int a = (k1 - p) % k1;
        const int b = (k2 - q) % k2;
        out[x] = a * k2 + b;
    }
    return out;
}

bool PerpDecomposition::verify(const Z2Action& a) const {
    const int k = a.size();
    const int k1 = X1.size();
    const int k2 = X2.size();
    if (k1 * k2 != k || static_cast<int>(h.size()) != k) return false;
    if (tau1.size() != k1 || tau2.size() != k2) return false;
    if (orbit(tau1, 0).size() != k1 || orbit(tau2, 0).size() != k2) return false;

    std::vector<bool> hit(static_cast<size_t>(k), false);
    for (int x = 0; x < k; ++x) {
        const auto [p, q] = h_index(x);
        if (p < 0 || q < 0) return false;
        const int flat = p * k2 + q;
        if (hit[static_cast<size_t>(flat)]) return false;
        hit[static_cast<size_t>(flat)] = true;

        const auto [p1, q1] = h_index(a.sigma1()(x));
        if (p1 != tau1(p) || q1 != q) return false;
        const auto [p2, q2] = h_index(a.sigma2()(x));
        if (p2 != p || q2 != tau2(q)) return false;
    }
    return true;
}

PerpDecomposition perp_decompose(const Z2Action& a) {
    if (auto violation = check_perpendicular(a)) throw NotPerpendicularError(*violation);

    PerpDecomposition d;
    d.x0 = 0;
    d.X1 = orbit(a.sigma1(), d.x0);
    d.X2 = orbit(a.sigma2(), d.x0);
    const int k1 = d.X1.size();
    const int k2 = d.X2.size();

    // Both factor cycles advance positions by one step of orbit iteration.
    std::vector<int> t1(static_cast<size_t>(k1)), t2(static_cast<size_t>(k2));
    for (int p = 0; p < k1; ++p) t1[static_cast<size_t>(p)] = (p + 1) % k1;
    for (int q = 0; q < k2; ++q) t2[static_cast<size_t>(q)] = (q + 1) % k2;
    d.tau1 = Permutation::from_images(std::move(t1));
    d.tau2 = Permutation::from_images(std::move(t2));

    d.h.resize(static_cast<size_t>(a.size()));
    for (int x = 0; x < a.size(); ++x) {
        const Orbit ox1 = orbit(a.sigma1(), x);
        const Orbit ox2 = orbit(a.sigma2(), x);
        int y1 = -1, y2 = -1;
        for (int p : d.X1.points)
            if (ox2.contains(p)) y1 = p;
        for (int p : ox1.points)
            if (d.X2.contains(p)) y2 = p;
        d.h[static_cast<size_t>(x)] = {y1, y2};
    }
    return d;
}

Z2Action product_action(const Permutation& t1, const Permutation& t2) {
    const int k = t1.size();
    const int l = t2.size();
    std::vector<int> s1(static_cast<size_t>(k) * l), s2(static_cast<size_t>(k) * l);
    for (int i = 0; i < k; ++i)
        for (int ip = 0; ip < l; ++ip) {
            const size_t x = static_cast<size_t>(i) * l + ip;
            s1[x] = t1(i) * l + ip;
            s2[x] = i * l + t2(ip);
        }
    return Z2Action(Permutation::from_images(std::move(s1)),
                    Permutation::from_images(std::move(s2)));
}

}  // namespace scx
