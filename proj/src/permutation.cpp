#include "scx/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace scx {

Permutation Permutation::identity(int k) {
    if (k <= 0) throw std::invalid_argument("Permutation: size must be positive");
    std::vector<int> im(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) im[static_cast<size_t>(i)] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::shift(int k) {
    if (k <= 0) throw std::invalid_argument("Permutation: size must be positive");
    std::vector<int> im(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) im[static_cast<size_t>(i)] = (i + k - 1) % k;
    return Permutation(std::move(im));
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int k = static_cast<int>(images.size());
    if (k == 0) throw std::invalid_argument("Permutation: size must be positive");
    std::vector<bool> seen(static_cast<size_t>(k), false);
    for (int v : images) {
        if (v < 0 || v >= k)
            throw std::invalid_argument("Permutation: image " + std::to_string(v) + " out of range");
        if (seen[static_cast<size_t>(v)])
            throw std::invalid_argument("Permutation: image " + std::to_string(v) + " repeated");
        seen[static_cast<size_t>(v)] = true;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(const std::string& text, int k) {
    if (k <= 0) throw std::invalid_argument("Permutation: size must be positive");
    std::vector<int> im(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) im[static_cast<size_t>(i)] = i;
    std::vector<bool> used(static_cast<size_t>(k), false);

    size_t pos = 0;
    const auto skip_blank = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ','))
            ++pos;
    };
    skip_blank();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw std::invalid_argument("cycle notation: expected '(' at position " + std::to_string(pos));
        ++pos;
        std::vector<int> cyc;
        skip_blank();
        while (pos < text.size() && text[pos] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw std::invalid_argument("cycle notation: unexpected character '" +
                                            std::string(1, text[pos]) + "'");
            int v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + (text[pos] - '0');
                ++pos;
            }
            if (v >= k)
                throw std::invalid_argument("cycle notation: element " + std::to_string(v) +
                                            " out of range for k=" + std::to_string(k));
            if (used[static_cast<size_t>(v)])
                throw std::invalid_argument("cycle notation: element " + std::to_string(v) + " repeated");
            used[static_cast<size_t>(v)] = true;
            cyc.push_back(v);
            skip_blank();
        }
        if (pos == text.size())
            throw std::invalid_argument("cycle notation: unclosed '('");
        ++pos;  // ')'
        for (size_t t = 0; t < cyc.size(); ++t)
            im[static_cast<size_t>(cyc[t])] = cyc[(t + 1) % cyc.size()];
        skip_blank();
    }
    return Permutation(std::move(im));
}

int Permutation::at(int x) const {
    if (x < 0 || x >= size())
        throw std::out_of_range("Permutation: point " + std::to_string(x) + " out of range");
    return images_[static_cast<size_t>(x)];
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[static_cast<size_t>(images_[static_cast<size_t>(i)])] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
    if (g.size() != size()) throw std::invalid_argument("conjugated_by: size mismatch");
    std::vector<int> im(images_.size());
    for (int x = 0; x < size(); ++x) im[static_cast<size_t>(g(x))] = g((*this)(x));
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int s = 0; s < size(); ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<int> cyc;
        int x = s;
        do {
            seen[static_cast<size_t>(x)] = true;
            cyc.push_back(x);
            x = (*this)(x);
        } while (x != s);
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> type;
    for (const auto& c : cycles()) type.push_back(static_cast<int>(c.size()));
    std::sort(type.begin(), type.end());
    return type;
}

std::string Permutation::cycle_string() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& c : cycles()) {
        if (c.size() == 1) continue;
        any = true;
        os << '(';
        for (size_t t = 0; t < c.size(); ++t) os << (t ? " " : "") << c[t];
        os << ')';
    }
    return any ? os.str() : "id";
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> im(static_cast<size_t>(p.size()));
    for (int x = 0; x < p.size(); ++x) im[static_cast<size_t>(x)] = p(q(x));
    return Permutation::from_images(std::move(im));
}

bool Orbit::contains(int x) const {
    return std::find(points.begin(), points.end(), x) != points.end();
}

int Orbit::index_of(int x) const {
    auto it = std::find(points.begin(), points.end(), x);
    return it == points.end() ? -1 : static_cast<int>(it - points.begin());
}

Orbit orbit(const Permutation& p, int x) {
    if (x < 0 || x >= p.size())
        throw std::out_of_range("orbit: point " + std::to_string(x) + " out of range");
    Orbit o;
    int y = x;
    do {
        o.points.push_back(y);
        y = p(y);
    } while (y != x);
    return o;
}

std::vector<Orbit> orbits(const Permutation& p) {
    std::vector<Orbit> out;
    std::vector<bool> seen(static_cast<size_t>(p.size()), false);
    for (int s = 0; s < p.size(); ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        Orbit o = orbit(p, s);
        for (int y : o.points) seen[static_cast<size_t>(y)] = true;
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace scx
