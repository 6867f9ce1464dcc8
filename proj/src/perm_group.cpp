#include "h3avg/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace h3avg {

PermGroup PermGroup::generate(std::vector<Perm> gens, std::size_t cap) {
    if (gens.empty())
        throw std::invalid_argument("generate: need at least one generator");
    int n = gens[0].degree();
    for (const auto& g : gens)
        if (g.degree() != n)
            throw std::invalid_argument("generate: degree mismatch among generators");
    if (n > Perm::max_packed_degree)
        throw std::invalid_argument("generate: closure requires degree <= 16");

    std::unordered_set<std::uint64_t> seen;
    std::deque<Perm> todo;
    std::vector<Perm> elems;
    Perm id(n);
    seen.insert(id.packed());
    elems.push_back(id);
    todo.push_back(id);
    while (!todo.empty()) {
        Perm cur = std::move(todo.front());
        todo.pop_front();
        for (const auto& g : gens) {
            Perm nxt = g * cur;
            if (seen.insert(nxt.packed()).second) {
                if (elems.size() >= cap)
                    throw std::invalid_argument("generate: closure exceeds element cap");
                elems.push_back(nxt);
                todo.push_back(nxt);
            }
        }
    }
    std::sort(elems.begin(), elems.end());

    PermGroup G;
    G.degree_ = n;
    G.gens_ = std::move(gens);
    G.elements_ = std::move(elems);
    G.keys_.reserve(G.elements_.size());
    for (const auto& e : G.elements_) G.keys_.push_back(e.packed());
    std::sort(G.keys_.begin(), G.keys_.end());
    return G;
}

PermGroup PermGroup::generators_only(std::vector<Perm> gens) {
    if (gens.empty())
        throw std::invalid_argument("generators_only: need at least one generator");
    int n = gens[0].degree();
    for (const auto& g : gens)
        if (g.degree() != n)
            throw std::invalid_argument("generators_only: degree mismatch among generators");
    PermGroup G;
    G.degree_ = n;
    G.gens_ = std::move(gens);
    return G;
}

PermGroup PermGroup::trivial(int degree) {
    return generate({Perm(degree)});
}

PermGroup PermGroup::cyclic(int degree) {
    std::vector<int> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = (i + 1) % degree;
    return generate({Perm(img)});
}

PermGroup PermGroup::symmetric(int degree) {
    if (degree == 1) return trivial(1);
    std::vector<int> t(degree), c(degree);
    for (int i = 0; i < degree; ++i) { t[i] = i; c[i] = (i + 1) % degree; }
    std::swap(t[0], t[1]);
    return generate({Perm(t), Perm(c)});
}

PermGroup PermGroup::direct_product(const PermGroup& A, const PermGroup& B) {
    int a = A.degree(), b = B.degree(), n = a * b;
    if (n > Perm::max_degree)
        throw std::invalid_argument("direct_product: degree exceeds 16");
    std::vector<Perm> gens;
    for (const auto& g : A.generators()) {
        std::vector<int> img(n);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) img[i * b + j] = g[i] * b + j;
        gens.emplace_back(img);
    }
    for (const auto& g : B.generators()) {
        std::vector<int> img(n);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) img[i * b + j] = i * b + g[j];
        gens.emplace_back(img);
    }
    return generate(std::move(gens));
}

bool PermGroup::contains(const Perm& p) const {
    require_closure();
    if (p.degree() != degree_) return false;
    return std::binary_search(keys_.begin(), keys_.end(), p.packed());
}

bool PermGroup::is_transitive() const {
    return static_cast<int>(orbit_of(0).size()) == degree_;
}

bool PermGroup::is_abelian() const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (!(gens_[i] * gens_[j] == gens_[j] * gens_[i])) return false;
    return true;
}

std::vector<int> PermGroup::orbit_of(int x) const {
    std::vector<bool> in(degree_, false);
    std::vector<int> orb{x};
    in[x] = true;
    for (std::size_t i = 0; i < orb.size(); ++i) {
        for (const auto& g : gens_) {
            int y = g[orb[i]];
            if (!in[y]) { in[y] = true; orb.push_back(y); }
        }
    }
    std::sort(orb.begin(), orb.end());
    return orb;
}

bool PermGroup::same_elements(const PermGroup& other) const {
    require_closure();
    other.require_closure();
    return degree_ == other.degree_ && keys_ == other.keys_;
}

PermGroup wreath_c2(const PermGroup& H) {
    if (!H.is_transitive())
        throw std::invalid_argument("wreath_c2: H must be transitive");
    int n = H.degree();
    std::vector<Perm> gens;
    for (int i = 0; i < n; ++i) {
        std::vector<int> img(2 * n);
        for (int x = 0; x < 2 * n; ++x) img[x] = x;
        std::swap(img[2 * i], img[2 * i + 1]);
        gens.emplace_back(img);
    }
    for (const auto& g : H.generators()) {
        std::vector<int> img(2 * n);
        for (int i = 0; i < n; ++i) {
            img[2 * i] = 2 * g[i];
            img[2 * i + 1] = 2 * g[i] + 1;
        }
        gens.emplace_back(img);
    }
    if (2 * n > Perm::max_packed_degree)
        return PermGroup::generators_only(std::move(gens));

    PermGroup G = PermGroup::generate(std::move(gens));
    long long expect = H.order();
    for (int i = 0; i < n; ++i) expect *= 2;
    if (G.order() != expect)
        throw InternalCheckError("wreath_c2: closure order != 2^n * |H|");
    return G;
}

} // namespace h3avg
