#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "words.hpp"

namespace smodpres {

//////////// Permutations ////////////

// Permutation of {1..m}, stored 0-based.
class Perm {
public:
    Perm() = default;
    explicit Perm(int m) : img_(m) { std::iota(img_.begin(), img_.end(), 0); }
    explicit Perm(std::vector<int> img) : img_(std::move(img)) {}

    int size() const { return static_cast<int>(img_.size()); }

    // 1-based application.
    int operator()(int x) const { return img_[x - 1] + 1; }

    // (p o q)(x) = p(q(x))
    Perm compose(const Perm& q) const {
        Perm r(size());
        for (int x = 0; x < size(); ++x) r.img_[x] = img_[q.img_[x]];
        return r;
    }

    Perm inverse() const {
        Perm r(size());
        for (int x = 0; x < size(); ++x) r.img_[img_[x]] = x;
        return r;
    }

    Perm pow(long long e) const {
        Perm base = e >= 0 ? *this : inverse();
        if (e < 0) e = -e;
        Perm r(size());
        while (e--) r = base.compose(r);
        return r;
    }

    bool is_identity() const {
        for (int x = 0; x < size(); ++x)
            if (img_[x] != x) return false;
        return true;
    }

    static Perm transposition(int m, int a, int b) {
        if (a < 1 || b < 1 || a > m || b > m || a == b) raise("IndexOutOfRange", "transposition (" + std::to_string(a) + " " + std::to_string(b) + ") in S_" + std::to_string(m));
        Perm r(m);
        std::swap(r.img_[a - 1], r.img_[b - 1]);
        return r;
    }

    // Cycle notation on 1-based points, fixed points omitted; identity is "()".
    std::string cycles() const {
        std::string s;
        std::vector<bool> seen(img_.size(), false);
        for (int x = 0; x < size(); ++x) {
            if (seen[x] || img_[x] == x) continue;
            s += "(";
            int y = x;
            bool first = true;
            while (!seen[y]) {
                seen[y] = true;
                if (!first) s += " ";
                s += std::to_string(y + 1);
                first = false;
                y = img_[y];
            }
            s += ")";
        }
        if (s.empty()) s = "()";
        return s;
    }

    const std::vector<int>& table() const { return img_; }

    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::vector<int> img_;
};

//////////// The symmetric-group shadow of the dictionary ////////////

// Image of one generator in S_m under the puncture action.
inline Perm psi(const Gen& g, int m) {
    switch (g.fam) {
        case Fam::Sigma:
            if (g.i + 1 > m) raise("IndexOutOfRange", to_string(g) + " in S_" + std::to_string(m));
            return Perm::transposition(m, g.i, g.i + 1);
        case Fam::H:
            if (g.i + 2 > m) raise("IndexOutOfRange", to_string(g) + " in S_" + std::to_string(m));
            return Perm::transposition(m, g.i, g.i + 2);
        case Fam::A:
            if (2 * g.i + 1 > m) raise("IndexOutOfRange", to_string(g) + " in S_" + std::to_string(m));
            return Perm::transposition(m, 2 * g.i - 1, 2 * g.i + 1);
        case Fam::B:
            if (2 * g.i + 2 > m) raise("IndexOutOfRange", to_string(g) + " in S_" + std::to_string(m));
            return Perm::transposition(m, 2 * g.i, 2 * g.i + 2);
        case Fam::T:
            if (g.j > m) raise("IndexOutOfRange", to_string(g) + " in S_" + std::to_string(m));
            return Perm(m);
        case Fam::Hij:
            if (g.j > m) raise("IndexOutOfRange", to_string(g) + " in S_" + std::to_string(m));
            return Perm::transposition(m, g.i, g.j);
        case Fam::R: {
            Perm r(m);
            std::vector<int> img(m);
            for (int x = 0; x < m; ++x) img[x] = m - 1 - x;
            return Perm(img);
        }
        default:
            raise("UnknownGenerator", to_string(g) + " has no puncture action");
    }
}

inline Perm psi(const Word& w, int m) {
    Perm p(m);
    for (const auto& l : w.letters()) p = p.compose(psi(l.g, m).pow(l.e));
    return p;
}

//////////// Parity classes and liftability ////////////

enum class ParityClass { Preserving, Reversing, Neither };

inline const char* to_string(ParityClass c) {
    switch (c) {
        case ParityClass::Preserving: return "preserving";
        case ParityClass::Reversing: return "reversing";
        case ParityClass::Neither: return "not-liftable";
    }
    return "?";
}

// Classifies p in S_m by its action on the odd/even blocks; m must be even.
inline ParityClass parity_class(const Perm& p) {
    int m = p.size();
    if (m % 2 != 0) raise("OddSize", "parity class needs even size, got " + std::to_string(m));
    bool pres = true, rev = true;
    for (int x = 1; x <= m; ++x) {
        bool flip = (x % 2) != (p(x) % 2);
        if (flip) pres = false;
        else rev = false;
    }
    if (pres) return ParityClass::Preserving;
    if (rev) return ParityClass::Reversing;
    return ParityClass::Neither;
}

inline ParityClass is_liftable(const Word& w, int n) {
    return parity_class(psi(w, 2 * n + 2));
}

// Membership in the marked parity group: parity-preserving and fixing m.
inline bool in_w_star(const Perm& p) {
    return parity_class(p) == ParityClass::Preserving && p(p.size()) == p.size();
}

//////////// Small permutation groups by closure ////////////

inline std::set<std::vector<int>> closure(const std::vector<Perm>& gens) {
    std::set<std::vector<int>> seen;
    if (gens.empty()) return seen;
    std::vector<Perm> queue{Perm(gens.front().size())};
    seen.insert(queue.front().table());
    while (!queue.empty()) {
        Perm p = queue.back();
        queue.pop_back();
        for (const auto& g : gens) {
            Perm q = g.compose(p);
            if (seen.insert(q.table()).second) queue.push_back(q);
        }
    }
    return seen;
}

}  // namespace smodpres
