#ifndef H3AVG_PERM_HPP
#define H3AVG_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace h3avg {

// Permutation on {0,...,n-1}, n <= 32.  Points are 0-based internally;
// all human-facing I/O (cycle strings) is 1-based.  packed() and group
// closure need n <= 16.
class Perm {
public:
    static constexpr int max_degree = 32;
    static constexpr int max_packed_degree = 16;

    Perm() = default;
    explicit Perm(int degree);                       // identity
    explicit Perm(std::vector<int> images);          // 0-based image list

    static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
    // Accepts "(1 2 3)(4 5)" or a 1-based image list "2,3,1".
    static Perm parse(const std::string& text, int degree = 0);

    int degree() const { return degree_; }
    int operator[](int x) const { return img_[x]; }

    // (p*q)(x) = p(q(x))
    Perm operator*(const Perm& q) const;
    Perm inverse() const;
    Perm pow(long long e) const;

    bool is_identity() const;
    bool operator==(const Perm& o) const { return degree_ == o.degree_ && img_ == o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    // 4 bits per image; unique key for degree <= 16
    std::uint64_t packed() const;

    std::vector<std::vector<int>> cycles() const;    // nontrivial cycles only
    std::vector<int> cycle_lengths() const;          // fixed points included, sorted
    int orbit_count() const;                         // number of cycles incl. fixed points
    long long order() const;

    // true if every nontrivial cycle has length len and there are exactly m of them
    bool is_product_of_cycles(int len, int m) const;

    std::string to_cycle_string() const;             // 1-based, "()" for identity

    const std::vector<int>& images() const { return img_; }

private:
    int degree_ = 0;
    std::vector<int> img_;
};

struct CycleType {
    int degree = 0;
    std::vector<int> lengths;    // ascending, fixed points as 1s

    static CycleType of(const Perm& p);
    int orbit_count() const { return static_cast<int>(lengths.size()); }
    bool operator==(const CycleType& o) const = default;
    bool operator<(const CycleType& o) const
    { return lengths < o.lengths; }
};

} // namespace h3avg

#endif
