#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "perm.hpp"
#include "words.hpp"

namespace smodpres {

// Automorphism of a free group on x_1..x_R, stored as the list of images.
using Auto = std::vector<Word>;

//////////// Dictionary: every generator as a braid word ////////////

inline Word sigma_word_of(const Gen& g, int m) {
    auto S = [](int i) { return Word(g_s(i)); };
    switch (g.fam) {
        case Fam::Sigma:
            if (g.i > m - 1) raise("IndexOutOfRange", to_string(g) + " with m=" + std::to_string(m));
            return S(g.i);
        case Fam::H:
            if (g.i + 2 > m) raise("IndexOutOfRange", to_string(g) + " with m=" + std::to_string(m));
            return S(g.i) * S(g.i + 1) * S(g.i);
        case Fam::T: {
            if (g.j > m) raise("IndexOutOfRange", to_string(g) + " with m=" + std::to_string(m));
            Word block;
            for (int a = g.i; a <= g.j - 1; ++a) block.append(g_s(a), 1);
            return block.pow(g.j - g.i + 1);
        }
        case Fam::A:
            if (2 * g.i + 1 > m) raise("IndexOutOfRange", to_string(g) + " with m=" + std::to_string(m));
            return S(2 * g.i) * S(2 * g.i - 1) * S(2 * g.i).inverse();
        case Fam::B:
            if (2 * g.i + 2 > m) raise("IndexOutOfRange", to_string(g) + " with m=" + std::to_string(m));
            return S(2 * g.i + 1) * S(2 * g.i) * S(2 * g.i + 1).inverse();
        case Fam::R: {
            Word w;
            for (int row = m - 1; row >= 1; --row)
                for (int a = 1; a <= row; ++a) w.append(g_s(a), 1);
            return w;
        }
        case Fam::Hij: {
            if (g.j > m) raise("IndexOutOfRange", to_string(g) + " with m=" + std::to_string(m));
            Word c;
            for (int a = g.j - 1; a >= g.i + 1; --a) c.append(g_s(a), 1);
            return c * S(g.i) * c.inverse();
        }
        default:
            raise("UnknownGenerator", to_string(g) + " is not a mapping class");
    }
}

inline Word sigma_word_of(const Word& w, int m) {
    Word r;
    for (const auto& l : w.letters()) r.append_pow(sigma_word_of(l.g, m), l.e);
    return r;
}

//////////// The point-pushing action on the free group ////////////

// Action of the m-punctured mapping classes on the fundamental group of the
// punctured disk (rank m) or sphere (rank m-1, the last loop eliminated).
class SphereRep {
public:
    SphereRep(int m, bool disk) : m_(m), disk_(disk), rank_(disk ? m : m - 1) {
        if (m < 3) raise("IndexOutOfRange", "need at least 3 punctures, got " + std::to_string(m));
    }

    int rank() const { return rank_; }
    int punctures() const { return m_; }

    Auto identity() const {
        Auto a(rank_);
        for (int i = 0; i < rank_; ++i) a[i] = Word(g_x(i + 1));
        return a;
    }

    static bool is_identity(const Auto& f) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            const auto& ls = f[i].letters();
            if (ls.size() != 1 || ls[0].g != g_x(static_cast<int>(i) + 1) || ls[0].e != 1) return false;
        }
        return true;
    }

    Word apply(const Auto& f, const Word& w) const {
        Word r;
        for (const auto& l : w.letters()) {
            if (l.g.fam != Fam::X || l.g.i < 1 || l.g.i > rank_) raise("MissingImage", to_string(l.g));
            r.append_pow(f[l.g.i - 1], l.e);
        }
        return r;
    }

    // (f o g)(x) = f(g(x))
    Auto compose(const Auto& f, const Auto& g) const {
        Auto r(rank_);
        for (int i = 0; i < rank_; ++i) r[i] = apply(f, g[i]);
        return r;
    }

    // Right-composition with one braid letter, touching only the images that change.
    void fold_sigma(Auto& a, int i, int sign) const {
        if (i < 1 || i > m_ - 1) raise("IndexOutOfRange", "s[" + std::to_string(i) + "] with m=" + std::to_string(m_));
        if (!disk_ && i == m_ - 1) {
            // on the sphere the last loop is the inverse of the product of the others
            Word img;
            if (sign > 0) {
                for (int l = m_ - 2; l >= 1; --l) img.append(g_x(l), -1);
                img.append(g_x(m_ - 1), -1);
                a[m_ - 2] = apply(a, img);
            } else {
                for (int l = 1; l <= m_ - 1; ++l) img.append(g_x(l), 1);
                a[m_ - 2] = apply(a, img.inverse());
            }
            return;
        }
        Word& xi = a[i - 1];
        Word& xi1 = a[i];
        if (sign > 0) {
            Word nxi = xi * xi1 * xi.inverse();
            xi1 = xi;
            xi = std::move(nxi);
        } else {
            Word nxi1 = xi1.inverse() * xi * xi1;
            xi = xi1;
            xi1 = std::move(nxi1);
        }
    }

    const Auto& of_gen(const Gen& g, long long e) {
        auto key = std::make_pair(g, e);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        Word w = sigma_word_of(g, m_).pow(e);
        Auto a = identity();
        for (const auto& l : w.letters())
            for (long long c = 0; c < (l.e >= 0 ? l.e : -l.e); ++c)
                fold_sigma(a, l.g.i, l.e >= 0 ? 1 : -1);
        return cache_.emplace(key, std::move(a)).first->second;
    }

    Auto of_word(const Word& w, long long* max_image = nullptr) {
        Auto a = identity();
        bool first = true;
        for (const auto& l : w.letters()) {
            const Auto& b = of_gen(l.g, l.e);
            a = first ? b : compose(a, b);
            first = false;
            if (max_image) {
                for (const auto& img : a) *max_image = std::max(*max_image, img.length());
            }
        }
        return a;
    }

private:
    int m_;
    bool disk_;
    int rank_;
    std::map<std::pair<Gen, long long>, Auto> cache_;
};

//////////// Inner automorphisms and equality of mapping classes ////////////

// If f is conjugation by u, returns u; candidate extraction goes through the
// cyclic reduction of f(x_1), with the leftover x_1-power pinned by f(x_2).
inline std::optional<Word> inner_conjugator(const SphereRep& rep, const Auto& f) {
    if (SphereRep::is_identity(f)) return Word();
    if (rep.rank() < 2) return std::nullopt;
    auto [core, conj] = f[0].cyclically_reduce();
    const auto& cl = core.letters();
    if (cl.size() != 1 || cl[0].g != g_x(1) || cl[0].e != 1) return std::nullopt;

    Word wd = conj.inverse() * f[1] * conj;
    long long s = 0;
    const auto& dl = wd.letters();
    if (dl.size() == 1 && dl[0].g == g_x(2) && dl[0].e == 1) {
        s = 0;
    } else if (dl.size() == 3 && dl[0].g == g_x(1) && dl[1].g == g_x(2) && dl[1].e == 1 &&
               dl[2].g == g_x(1) && dl[2].e == -dl[0].e) {
        s = dl[0].e;
    } else {
        return std::nullopt;
    }
    Word u = conj * Word(g_x(1), s);
    Word uinv = u.inverse();
    for (int i = 0; i < rep.rank(); ++i) {
        if (f[i] != u * Word(g_x(i + 1)) * uinv) return std::nullopt;
    }
    return u;
}

inline bool is_inner(const SphereRep& rep, const Auto& f) {
    return inner_conjugator(rep, f).has_value();
}

// Equality in the mapping class group of the m-punctured sphere.
inline bool equal_in_mod(const Word& w1, const Word& w2, int m, long long* max_image = nullptr) {
    SphereRep rep(m, false);
    Auto f = rep.of_word(w2.inverse() * w1, max_image);
    return is_inner(rep, f);
}

// Exact equality in the braid group of the disk on m strands.
inline bool equal_in_disk(const Word& w1, const Word& w2, int m, long long* max_image = nullptr) {
    SphereRep rep(m, true);
    Auto f = rep.of_word(w2.inverse() * w1, max_image);
    return SphereRep::is_identity(f);
}

}  // namespace smodpres
