#include "h3avg/enumerate.hpp"

#include "h3avg/sylow.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace h3avg {

PermGroup sylow_subgroup_of_symmetric(int p, int k) {
    int n = 1;
    for (int i = 0; i < k; ++i) n *= p;
    if (n > Perm::max_degree)
        throw std::invalid_argument("sylow_subgroup_of_symmetric: degree too large");
    std::vector<Perm> gens;
    int block = 1;
    for (int level = 0; level < k; ++level) {
        // cycle the p blocks of size `block` inside the first block*p points
        std::vector<int> img(n);
        for (int x = 0; x < n; ++x) img[x] = x;
        for (int x = 0; x < block * p; ++x) img[x] = (x + block) % (block * p);
        gens.emplace_back(img);
        block *= p;
    }
    return PermGroup::generate(std::move(gens));
}

namespace {

struct Mask {
    std::uint64_t w[2] = {0, 0};
    void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool operator==(const Mask& o) const { return w[0] == o.w[0] && w[1] == o.w[1]; }
    bool operator<(const Mask& o) const {
        return w[1] != o.w[1] ? w[1] < o.w[1] : w[0] < o.w[0];
    }
    int count() const { return __builtin_popcountll(w[0]) + __builtin_popcountll(w[1]); }
};

struct MaskHash {
    std::size_t operator()(const Mask& m) const {
        std::uint64_t h = m.w[0] * 0x9e3779b97f4a7c15ULL;
        h ^= m.w[1] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

struct GroupTables {
    int n = 0;  // group order
    std::vector<std::vector<int>> mul;   // mul[i][j] = index of e_i * e_j
    std::vector<int> inv;
    std::vector<std::vector<int>> conj;  // conj[w][g] = w g w^{-1}

    explicit GroupTables(const PermGroup& G) {
        const auto& el = G.elements();
        n = static_cast<int>(el.size());
        std::unordered_map<std::uint64_t, int> index;
        index.reserve(el.size() * 2);
        for (int i = 0; i < n; ++i) index[el[i].packed()] = i;
        mul.assign(n, std::vector<int>(n));
        inv.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                mul[i][j] = index.at((el[i] * el[j]).packed());
            inv[i] = index.at(el[i].inverse().packed());
        }
        conj.assign(n, std::vector<int>(n));
        for (int w = 0; w < n; ++w)
            for (int g = 0; g < n; ++g)
                conj[w][g] = mul[mul[w][g]][inv[w]];
    }

    int identity_index(const PermGroup& G) const {
        const auto& el = G.elements();
        for (int i = 0; i < n; ++i)
            if (el[i].is_identity()) return i;
        throw InternalCheckError("group has no identity element");
    }
};

std::vector<int> mask_to_indices(const Mask& m, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (m.test(i)) out.push_back(i);
    return out;
}

// p-group subgroup lattice by index-p normal extensions: every maximal
// subgroup of a p-group is normal, so walking upward through normalizer
// cosets reaches every subgroup exactly.
std::vector<Mask> subgroups_p_group(const GroupTables& T, int id, int p) {
    std::unordered_set<Mask, MaskHash> seen;
    Mask triv;
    triv.set(id);
    seen.insert(triv);
    std::vector<Mask> level{triv}, all{triv};
    while (!level.empty()) {
        std::vector<Mask> next;
        for (const Mask& S : level) {
            auto idx = mask_to_indices(S, T.n);
            for (int w = 0; w < T.n; ++w) {
                if (S.test(w)) continue;
                // w must normalize S and have w^p in S
                bool norm = true;
                for (int g : idx)
                    if (!S.test(T.conj[w][g])) { norm = false; break; }
                if (!norm) continue;
                int wp = w;
                for (int i = 1; i < p; ++i) wp = T.mul[wp][w];
                if (!S.test(wp)) continue;
                Mask U = S;
                int c = w;
                for (int i = 1; i < p; ++i) {
                    for (int g : idx) U.set(T.mul[g][c]);
                    c = T.mul[c][w];
                }
                if (seen.insert(U).second) next.push_back(U);
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return all;
}

std::vector<Mask> subgroups_generic(const GroupTables& T, int id) {
    auto closure = [&](Mask start) {
        std::vector<int> stack = mask_to_indices(start, T.n);
        Mask S = start;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            auto idx = mask_to_indices(S, T.n);
            for (int b : idx) {
                for (int c : {T.mul[a][b], T.mul[b][a]}) {
                    if (!S.test(c)) { S.set(c); stack.push_back(c); }
                }
            }
        }
        return S;
    };
    std::unordered_set<Mask, MaskHash> seen;
    Mask triv;
    triv.set(id);
    seen.insert(triv);
    std::vector<Mask> work{triv}, all{triv};
    while (!work.empty()) {
        Mask S = work.back();
        work.pop_back();
        for (int g = 0; g < T.n; ++g) {
            if (S.test(g)) continue;
            Mask U = S;
            U.set(g);
            U = closure(U);
            if (seen.insert(U).second) {
                work.push_back(U);
                all.push_back(U);
            }
        }
    }
    return all;
}

bool prime_power(long long n, int* p_out) {
    auto pf = prime_factors(n);
    if (pf.size() != 1) return false;
    if (p_out) *p_out = pf[0];
    return true;
}

std::vector<std::uint64_t> sorted_keys(const PermGroup& G) {
    std::vector<std::uint64_t> k;
    k.reserve(G.elements().size());
    for (const auto& e : G.elements()) k.push_back(e.packed());
    return k;
}

// invariant fingerprint used to bucket candidates before conjugacy search
std::vector<long long> fingerprint(const PermGroup& G) {
    std::map<std::vector<int>, int> hist;
    for (const auto& g : G.elements()) ++hist[g.cycle_lengths()];
    std::vector<long long> fp{G.order(), G.is_abelian() ? 1 : 0};
    for (const auto& [ct, c] : hist) {
        long long code = c;
        for (int l : ct) code = code * 31 + l;
        fp.push_back(code);
    }
    return fp;
}

} // namespace

std::vector<std::vector<int>> all_subgroups(const PermGroup& G) {
    if (G.order() > 128)
        throw std::invalid_argument("all_subgroups: group order exceeds 128");
    GroupTables T(G);
    int id = T.identity_index(G);
    int p = 0;
    std::vector<Mask> masks = prime_power(G.order(), &p) ? subgroups_p_group(T, id, p)
                                                         : subgroups_generic(T, id);
    std::sort(masks.begin(), masks.end());
    std::vector<std::vector<int>> out;
    out.reserve(masks.size());
    for (const auto& m : masks) out.push_back(mask_to_indices(m, T.n));
    return out;
}

bool are_conjugate_in_sn(const PermGroup& A, const PermGroup& B, Perm* sigma) {
    int n = A.degree();
    if (n != B.degree() || A.order() != B.order()) return false;
    if (n > 9)
        throw std::invalid_argument("are_conjugate_in_sn: degree exceeds 9");
    if (fingerprint(A) != fingerprint(B)) return false;

    std::unordered_set<std::uint64_t> bkeys;
    for (const auto& e : B.elements()) bkeys.insert(e.packed());
    const auto& gens = A.generators();

    std::array<int, 9> s{};
    for (int i = 0; i < n; ++i) s[i] = i;
    do {
        bool ok = true;
        for (const auto& g : gens) {
            // t = sigma g sigma^{-1}:  t[s[x]] = s[g[x]]
            std::uint64_t key = 0;
            int timg[9];
            for (int x = 0; x < n; ++x) timg[s[x]] = s[g[x]];
            for (int x = n - 1; x >= 0; --x) key = (key << 4) | static_cast<std::uint64_t>(timg[x]);
            if (!bkeys.count(key)) { ok = false; break; }
        }
        if (ok) {
            if (sigma) {
                std::vector<int> img(s.begin(), s.begin() + n);
                *sigma = Perm(img);
            }
            return true;
        }
    } while (std::next_permutation(s.begin(), s.begin() + n));
    return false;
}

namespace {

std::vector<PermGroup> dedupe_conjugacy(std::vector<PermGroup> raw) {
    // deterministic input order first
    std::sort(raw.begin(), raw.end(), [](const PermGroup& a, const PermGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return sorted_keys(a) < sorted_keys(b);
    });
    std::vector<PermGroup> reps;
    std::vector<std::vector<long long>> fps;
    for (auto& g : raw) {
        auto fp = fingerprint(g);
        bool dup = false;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (fps[i] != fp) continue;
            if (are_conjugate_in_sn(reps[i], g)) { dup = true; break; }
        }
        if (!dup) {
            reps.push_back(std::move(g));
            fps.push_back(std::move(fp));
        }
    }
    return reps;
}

std::vector<PermGroup> transitive_subgroups_of_sylow(int p, int k) {
    PermGroup W = sylow_subgroup_of_symmetric(p, k);
    const auto& el = W.elements();
    int n = W.degree();
    std::vector<PermGroup> raw;
    for (const auto& idx : all_subgroups(W)) {
        if (idx.size() < 2 && n > 1) continue;
        std::vector<bool> hit(n, false);
        int distinct = 0;
        for (int i : idx) {
            int y = el[i][0];
            if (!hit[y]) { hit[y] = true; ++distinct; }
        }
        if (distinct != n) continue;  // group orbit of 0 is the image set of 0
        std::vector<Perm> members;
        members.reserve(idx.size());
        for (int i : idx) members.push_back(el[i]);
        PermGroup S = PermGroup::generate(members);
        if (S.order() != static_cast<long long>(idx.size()))
            throw InternalCheckError("transitive_subgroups_of_sylow: subgroup set not closed");
        raw.push_back(std::move(S));
    }
    return dedupe_conjugacy(std::move(raw));
}

} // namespace

std::vector<PermGroup> enumerate_transitive_nilpotent(int n) {
    if (n < 2 || n > 9)
        throw std::invalid_argument("enumerate_transitive_nilpotent: degree must be in [2,9]");

    // n = prod p^(k_p)
    std::vector<std::pair<int, int>> pps;
    int m = n;
    for (int p : prime_factors(n)) {
        int k = 0;
        while (m % p == 0) { m /= p; ++k; }
        pps.push_back({p, k});
    }

    std::vector<PermGroup> out;
    if (pps.size() == 1) {
        out = transitive_subgroups_of_sylow(pps[0].first, pps[0].second);
    } else {
        // direct products of the prime-power lists (complete for nilpotent H)
        std::vector<std::vector<PermGroup>> lists;
        for (auto [p, k] : pps) {
            int d = 1;
            for (int i = 0; i < k; ++i) d *= p;
            lists.push_back(enumerate_transitive_nilpotent(d));
        }
        std::vector<PermGroup> raw;
        std::vector<std::size_t> pick(lists.size(), 0);
        for (;;) {
            PermGroup prod = lists[0][pick[0]];
            for (std::size_t i = 1; i < lists.size(); ++i)
                prod = PermGroup::direct_product(prod, lists[i][pick[i]]);
            raw.push_back(std::move(prod));
            std::size_t i = 0;
            while (i < lists.size() && ++pick[i] == lists[i].size()) pick[i++] = 0;
            if (i == lists.size()) break;
        }
        out = dedupe_conjugacy(std::move(raw));
    }
    return out;
}

} // namespace h3avg
