#include "h3avg/sylow.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace h3avg {

int orb_count(const Perm& h) {
    return h.orbit_count();
}

AInvariant a_invariant(const PermGroup& H) {
    if (H.order() <= 1)
        throw std::invalid_argument("a_invariant: group is trivial");
    int n = H.degree();
    AInvariant best;
    best.value = n + 1;
    for (const auto& h : H.elements()) {
        if (h.is_identity()) continue;
        int v = n - h.orbit_count();
        if (v < best.value) {
            best.value = v;
            best.witness = h;
        }
    }
    return best;
}

PCycleWitness homogeneous_p_cycle_witness(const PermGroup& H) {
    AInvariant a = a_invariant(H);
    long long o = a.witness.order();
    int p = prime_factors(o)[0];
    Perm h = a.witness.pow(o / p);
    int n = H.degree();
    if (h.is_identity() || n - h.orbit_count() != a.value)
        throw InternalCheckError("homogeneous_p_cycle_witness: power lost minimality");
    int m = a.value / (p - 1);
    if (a.value % (p - 1) != 0 || !h.is_product_of_cycles(p, m))
        throw InternalCheckError("homogeneous_p_cycle_witness: cycle shape mismatch");
    return PCycleWitness{p, m, h};
}

bool is_nilpotent(const PermGroup& H) {
    long long o = H.order();
    for (int p : prime_factors(o)) {
        std::vector<const Perm*> pelts;
        for (const auto& g : H.elements()) {
            long long go = g.order();
            while (go % p == 0) go /= p;
            if (go == 1) pelts.push_back(&g);
        }
        std::unordered_set<std::uint64_t> keys;
        for (const Perm* g : pelts) keys.insert(g->packed());
        for (const Perm* g : pelts)
            for (const Perm* h : pelts)
                if (!keys.count(((*g) * (*h)).packed())) return false;
    }
    return true;
}

std::vector<int> prime_factors(long long n) {
    std::vector<int> out;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(static_cast<int>(p));
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(static_cast<int>(n));
    return out;
}

Perm element_p_part(const Perm& g, int p) {
    long long o = g.order();
    long long pa = 1;
    while (o % p == 0) { pa *= p; o /= p; }
    long long m = o;  // coprime part
    if (pa == 1) return Perm(g.degree());
    // e = m * (m^{-1} mod pa): e = 1 mod pa, 0 mod m
    long long minv = 1;
    {
        long long t = m % pa;
        // pa is a prime power; brute-force inverse is fine at these sizes
        for (long long k = 1; k < pa; ++k)
            if ((t * k) % pa == 1) { minv = k; break; }
    }
    return g.pow(m * minv);
}

const SylowFactor* SylowDecomposition::factor_for(int p) const {
    for (const auto& f : factors)
        if (f.p == p) return &f;
    return nullptr;
}

long long SylowDecomposition::coprime_part_order(int p) const {
    long long o = 1;
    for (const auto& f : factors)
        if (f.p != p) o *= f.group.order();
    return o;
}

namespace {

Perm restrict_to(const Perm& g, const std::vector<int>& points) {
    // points must be g-invariant and ascending
    int k = static_cast<int>(points.size());
    std::vector<int> pos(g.degree(), -1);
    for (int i = 0; i < k; ++i) pos[points[i]] = i;
    std::vector<int> img(k);
    for (int i = 0; i < k; ++i) {
        int y = g[points[i]];
        if (pos[y] < 0)
            throw InternalCheckError("sylow_decompose: orbit not invariant");
        img[i] = pos[y];
    }
    return Perm(img);
}

} // namespace

SylowDecomposition sylow_decompose(const PermGroup& H) {
    if (!H.is_transitive())
        throw std::invalid_argument("sylow_decompose: group not transitive");
    if (!is_nilpotent(H))
        throw std::invalid_argument("sylow_decompose: group not nilpotent");

    int n = H.degree();
    long long order = H.order();
    std::vector<int> primes = prime_factors(order);

    SylowDecomposition dec;
    std::map<int, std::vector<Perm>> sylow_elems;
    for (int p : primes) {
        for (const auto& g : H.elements()) {
            long long go = g.order();
            while (go % p == 0) go /= p;
            if (go == 1) sylow_elems[p].push_back(g);
        }
    }

    // transversal: for each point x a group element g with g(0) = x
    std::vector<Perm> transversal(n, Perm(n));
    {
        std::vector<bool> have(n, false);
        have[0] = true;
        std::vector<int> frontier{0};
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int x : frontier) {
                for (const auto& g : H.generators()) {
                    int y = g[x];
                    if (!have[y]) {
                        have[y] = true;
                        transversal[y] = g * transversal[x];
                        next.push_back(y);
                    }
                }
            }
            frontier = std::move(next);
        }
    }

    for (int p : primes) {
        SylowFactor f;
        f.p = p;
        // Orbit of the base point under the Sylow p-subgroup
        std::vector<bool> in(n, false);
        std::vector<int> orb{0};
        in[0] = true;
        for (std::size_t i = 0; i < orb.size(); ++i)
            for (const auto& g : sylow_elems[p]) {
                int y = g[orb[i]];
                if (!in[y]) { in[y] = true; orb.push_back(y); }
            }
        std::sort(orb.begin(), orb.end());
        f.points = orb;

        std::vector<Perm> images;
        images.reserve(sylow_elems[p].size());
        for (const auto& g : sylow_elems[p]) images.push_back(restrict_to(g, orb));
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        if (static_cast<long long>(images.size()) != static_cast<long long>(sylow_elems[p].size()))
            throw InternalCheckError("sylow_decompose: Sylow restriction not faithful");
        std::vector<Perm> gens = images;  // the whole factor as generator set is fine here
        f.group = PermGroup::generate(std::move(gens));
        if (f.group.order() != static_cast<long long>(images.size()))
            throw InternalCheckError("sylow_decompose: factor closure grew");
        dec.factors.push_back(std::move(f));
    }

    // sanity: prod n_p = n with n_p the maximal p-power dividing n
    {
        long long prod = 1;
        for (const auto& f : dec.factors) {
            int np = static_cast<int>(f.points.size());
            long long pp = 1;
            int m = n;
            while (m % f.p == 0) { pp *= f.p; m /= f.p; }
            if (np != pp)
                throw InternalCheckError("sylow_decompose: |orbit| != maximal p-power in n");
            prod *= np;
        }
        if (prod != n)
            throw InternalCheckError("sylow_decompose: prod n_p != n");
    }

    // coordinates of x = g.0: per factor, position of (g_p).0 in that orbit
    std::size_t nf = dec.factors.size();
    dec.coords.assign(n, std::vector<int>(nf));
    dec.relabel.assign(n, 0);
    for (int x = 0; x < n; ++x) {
        const Perm& g = transversal[x];
        int code = 0;
        for (std::size_t i = 0; i < nf; ++i) {
            const auto& f = dec.factors[i];
            Perm gp = element_p_part(g, f.p);
            int pt = gp[0];
            auto it = std::lower_bound(f.points.begin(), f.points.end(), pt);
            if (it == f.points.end() || *it != pt)
                throw InternalCheckError("sylow_decompose: p-part leaves factor orbit");
            int c = static_cast<int>(it - f.points.begin());
            dec.coords[x][i] = c;
            code = code * static_cast<int>(f.points.size()) + c;
        }
        dec.relabel[x] = code;
    }
    {
        std::vector<int> sorted = dec.relabel;
        std::sort(sorted.begin(), sorted.end());
        for (int x = 0; x < n; ++x)
            if (sorted[x] != x)
                throw InternalCheckError("sylow_decompose: relabel is not a bijection");
    }

    // full elementwise verification: relabel conjugates H into the product action
    for (const auto& h : H.elements()) {
        std::vector<Perm> hp;
        hp.reserve(nf);
        for (std::size_t i = 0; i < nf; ++i)
            hp.push_back(restrict_to(element_p_part(h, dec.factors[i].p), dec.factors[i].points));
        for (int x = 0; x < n; ++x) {
            int y = h[x];
            for (std::size_t i = 0; i < nf; ++i)
                if (dec.coords[y][i] != hp[i][dec.coords[x][i]])
                    throw InternalCheckError("sylow_decompose: product action mismatch");
        }
    }
    return dec;
}

PPartDecomposition p_part_decompose_element(const PermGroup& H, const Perm& h) {
    if (h.is_identity())
        throw std::invalid_argument("p_part_decompose_element: h is the identity");
    long long o = h.order();
    auto pf = prime_factors(o);
    if (pf.size() != 1 || o != pf[0])
        throw std::invalid_argument("p_part_decompose_element: h must have prime order");
    int p = pf[0];
    auto lens = h.cycle_lengths();
    int m = 0;
    for (int l : lens) {
        if (l == 1) continue;
        if (l != p)
            throw std::invalid_argument("p_part_decompose_element: h not a product of p-cycles");
        ++m;
    }

    SylowDecomposition dec = sylow_decompose(H);
    PPartDecomposition out;
    out.h_prime_order = dec.coprime_part_order(p);
    if (m % out.h_prime_order != 0)
        throw InternalCheckError("p_part_decompose_element: |H'| does not divide m");
    out.m_p = static_cast<int>(m / out.h_prime_order);

    const SylowFactor* f = dec.factor_for(p);
    if (!f)
        throw InternalCheckError("p_part_decompose_element: missing Sylow factor");
    std::vector<int> pos(H.degree(), -1);
    for (std::size_t i = 0; i < f->points.size(); ++i) pos[f->points[i]] = static_cast<int>(i);
    std::vector<int> img(f->points.size());
    for (std::size_t i = 0; i < f->points.size(); ++i) {
        int y = h[f->points[i]];
        if (pos[y] < 0)
            throw InternalCheckError("p_part_decompose_element: h leaves the p-orbit");
        img[i] = pos[y];
    }
    out.verified = Perm(img).is_product_of_cycles(p, out.m_p);
    if (!out.verified)
        throw InternalCheckError("p_part_decompose_element: factor image has wrong cycle shape");
    return out;
}

} // namespace h3avg
