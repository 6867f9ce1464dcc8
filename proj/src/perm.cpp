#include "h3avg/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace h3avg {

Perm::Perm(int degree) : degree_(degree), img_(degree) {
    if (degree < 1 || degree > max_degree)
        throw std::invalid_argument("permutation degree must be in [1,32]");
    std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> images) : degree_(static_cast<int>(images.size())), img_(std::move(images)) {
    if (degree_ < 1 || degree_ > max_degree)
        throw std::invalid_argument("permutation degree must be in [1,32]");
    std::vector<bool> seen(degree_, false);
    for (int v : img_) {
        if (v < 0 || v >= degree_ || seen[v])
            throw std::invalid_argument("image list is not a bijection");
        seen[v] = true;
    }
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Perm p(degree);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            if (a < 0 || a >= degree)
                throw std::invalid_argument("cycle point out of range");
            if (p.img_[a] != a)
                throw std::invalid_argument("point repeated across cycles");
            p.img_[a] = b;
        }
    }
    Perm check(p.img_);  // revalidates bijectivity
    return check;
}

Perm Perm::parse(const std::string& text, int degree) {
    auto fail = [&] { throw std::invalid_argument("cannot parse permutation: " + text); };
    if (text.find('(') != std::string::npos) {
        std::vector<std::vector<int>> cycles;
        int maxpt = 0;
        std::size_t i = 0;
        while (i < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
            if (text[i] != '(') fail();
            std::size_t close = text.find(')', i);
            if (close == std::string::npos) fail();
            std::istringstream ss(text.substr(i + 1, close - i - 1));
            std::vector<int> cyc;
            std::string tok;
            while (ss >> tok) {
                for (char& c : tok) if (c == ',') c = ' ';
                std::istringstream ts(tok);
                int v;
                while (ts >> v) {
                    if (v < 1) fail();
                    maxpt = std::max(maxpt, v);
                    cyc.push_back(v - 1);
                }
            }
            if (!cyc.empty()) cycles.push_back(std::move(cyc));
            i = close + 1;
        }
        int n = degree > 0 ? degree : maxpt;
        if (n == 0) fail();
        return from_cycles(n, cycles);
    }
    // comma-separated 1-based image list
    std::vector<int> img;
    std::string tok;
    std::istringstream ss(text);
    while (std::getline(ss, tok, ',')) {
        img.push_back(std::stoi(tok) - 1);
    }
    if (degree > 0 && static_cast<int>(img.size()) != degree) fail();
    return Perm(img);
}

Perm Perm::operator*(const Perm& q) const {
    if (degree_ != q.degree_)
        throw std::invalid_argument("degree mismatch in permutation product");
    Perm r;
    r.degree_ = degree_;
    r.img_.resize(degree_);
    for (int x = 0; x < degree_; ++x) r.img_[x] = img_[q.img_[x]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.degree_ = degree_;
    r.img_.resize(degree_);
    for (int x = 0; x < degree_; ++x) r.img_[img_[x]] = x;
    return r;
}

Perm Perm::pow(long long e) const {
    long long o = order();
    e %= o;
    if (e < 0) e += o;
    Perm acc(degree_), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Perm::is_identity() const {
    for (int x = 0; x < degree_; ++x)
        if (img_[x] != x) return false;
    return true;
}

std::uint64_t Perm::packed() const {
    if (degree_ > max_packed_degree)
        throw std::logic_error("packed() requires degree <= 16");
    std::uint64_t k = 0;
    for (int x = degree_ - 1; x >= 0; --x) k = (k << 4) | static_cast<std::uint64_t>(img_[x]);
    return k;
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(degree_, false);
    for (int x = 0; x < degree_; ++x) {
        if (seen[x] || img_[x] == x) { seen[x] = true; continue; }
        std::vector<int> cyc;
        int y = x;
        while (!seen[y]) {
            seen[y] = true;
            cyc.push_back(y);
            y = img_[y];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> Perm::cycle_lengths() const {
    std::vector<int> out;
    std::vector<bool> seen(degree_, false);
    for (int x = 0; x < degree_; ++x) {
        if (seen[x]) continue;
        int len = 0, y = x;
        while (!seen[y]) {
            seen[y] = true;
            ++len;
            y = img_[y];
        }
        out.push_back(len);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Perm::orbit_count() const {
    return static_cast<int>(cycle_lengths().size());
}

long long Perm::order() const {
    long long o = 1;
    for (int len : cycle_lengths()) o = std::lcm(o, static_cast<long long>(len));
    return o;
}

bool Perm::is_product_of_cycles(int len, int m) const {
    int count = 0;
    for (int l : cycle_lengths()) {
        if (l == 1) continue;
        if (l != len) return false;
        ++count;
    }
    return count == m;
}

std::string Perm::to_cycle_string() const {
    auto cyc = cycles();
    if (cyc.empty()) return "()";
    std::string out;
    for (const auto& c : cyc) {
        out += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(c[i] + 1);
        }
        out += ')';
    }
    return out;
}

CycleType CycleType::of(const Perm& p) {
    return CycleType{p.degree(), p.cycle_lengths()};
}

} // namespace h3avg
