#pragma once

#include <optional>
#include <string>
#include <vector>

#include "perm.hpp"
#include "words.hpp"

namespace smodpres {

//////////// Families ////////////

enum class Variant { Boundary, Marked, Closed };

enum class Family {
    LModBoundary,
    LModMarked,
    LModClosed,
    SModBoundary,
    SModMarked,
    SModClosed,
    PMod,
    W,
    WStar,
};

inline const char* to_string(Family f) {
    switch (f) {
        case Family::LModBoundary: return "lmod-boundary";
        case Family::LModMarked: return "lmod-marked";
        case Family::LModClosed: return "lmod-closed";
        case Family::SModBoundary: return "smod-boundary";
        case Family::SModMarked: return "smod-marked";
        case Family::SModClosed: return "smod-closed";
        case Family::PMod: return "pmod";
        case Family::W: return "w";
        case Family::WStar: return "wstar";
    }
    return "?";
}

inline std::optional<Family> family_from_string(const std::string& s) {
    for (Family f : {Family::LModBoundary, Family::LModMarked, Family::LModClosed,
                     Family::SModBoundary, Family::SModMarked, Family::SModClosed,
                     Family::PMod, Family::W, Family::WStar})
        if (s == to_string(f)) return f;
    return std::nullopt;
}

inline bool is_smod(Family f) {
    return f == Family::SModBoundary || f == Family::SModMarked || f == Family::SModClosed;
}

inline bool is_lmod(Family f) {
    return f == Family::LModBoundary || f == Family::LModMarked || f == Family::LModClosed;
}

inline std::optional<Variant> variant_of(Family f) {
    switch (f) {
        case Family::LModBoundary:
        case Family::SModBoundary: return Variant::Boundary;
        case Family::LModMarked:
        case Family::SModMarked: return Variant::Marked;
        case Family::LModClosed:
        case Family::SModClosed: return Variant::Closed;
        default: return std::nullopt;
    }
}

struct Relator {
    std::string tag;
    Word word;
};

struct Presentation {
    Family family = Family::LModBoundary;
    int n = 0;  // strand parameter; for PMod this is the puncture count m
    int k = 0;  // superelliptic degree, SMod families only
    std::vector<Gen> generators;
    std::vector<Relator> relators;
};

//////////// Twist curves on the 2n+2 sphere ////////////

// The curve of t_{i,j} for j up to 2n+2, folded onto the declared range
// 1 <= i < j <= 2n+1: index 2n+2 wraps around, and curves enclosing fewer
// than two or more than 2n of the first 2n+1 points on one side collapse.
inline Word t_curve(int i, int j, int n) {
    int m = 2 * n + 2;
    if (j == i - 1) return Word();  // empty interval
    if (i > j) std::swap(i, j);
    if (i == j) return Word();
    if (i < 1 || j > m) raise("IndexOutOfRange", "t[" + std::to_string(i) + "," + std::to_string(j) + "] with n=" + std::to_string(n));
    if (j == m) {
        if (i <= 2) return Word();
        return Word(g_t(1, i - 1));
    }
    return Word(g_t(i, j));
}

inline Word t_curve_pow(int i, int j, int n, long long e) {
    return t_curve(i, j, n).pow(e);
}

//////////// Relator words ////////////

// Word for t_{i,j} as a product of h's and elementary twists (j - i >= 2).
inline Word chain_word(int i, int j, int n) {
    if (j - i < 2 || i < 1 || j > 2 * n + 2) raise("IndexOutOfRange", "chain(" + std::to_string(i) + "," + std::to_string(j) + ") with n=" + std::to_string(n));
    Word w;
    int d = j - i;
    if (d == 2) {
        w.append(g_h(i), 2);
        return w;
    }
    if (d % 2 == 1) {
        long long e = (d - 3) / 2;
        for (int a = j - 1; a >= i; a -= 2) w.append(t_curve_pow(a, a + 1, n, -e));
        Word block;
        for (int a = j - 2; a >= i; --a) block.append(g_h(a), 1);
        w.append(block.pow((d + 1) / 2));
    } else {
        long long e = (d - 2) / 2;
        for (int a = j - 2; a >= i; a -= 2) w.append(t_curve_pow(a, a + 1, n, -e));
        for (int a = j - 2; a >= i; a -= 2) w.append(g_h(a), 1);
        for (int a = i; a <= j - 2; a += 2) w.append(g_h(a), 1);
        Word block;
        for (int a = j - 3; a >= i; --a) block.append(g_h(a), 1);
        w.append(block.pow(d / 2));
    }
    return w;
}

inline Word pentagon_word(int i, int j, int k, int l, int m5) {
    auto tt = [](int a, int b) { return Word(g_t(a, b)); };
    Word lhs = tt(j, m5 - 1).inverse() * tt(k, m5 - 1) * tt(j, l - 1) * tt(i, k - 1) * tt(i, l - 1).inverse();
    Word rhs = tt(i, l - 1).inverse() * tt(i, k - 1) * tt(j, l - 1) * tt(k, m5 - 1) * tt(j, m5 - 1).inverse();
    return lhs * rhs.inverse();
}

inline Word comm_word(const Word& u, const Word& v) {
    return u * v * u.inverse() * v.inverse();
}

// left = right as the relator left * right^-1
inline Word rel_word(const Word& left, const Word& right) {
    return left * right.inverse();
}

//////////// Commutation predicates ////////////

// Unordered pairs of twist curves that commute because the index intervals
// are disjoint or nested; emitted once per lexicographically ordered pair.
inline bool t_pair_commutes(int i, int j, int k, int l) {
    if (i < k) return j < k || l <= j;
    if (i == k) return j < l;
    return false;
}

inline bool h_t_commute(int k, int i, int j) {
    return k + 2 < i || (i <= k && k + 2 <= j) || j < k;
}

//////////// Builders ////////////

inline std::vector<Relator> braid_lift_relators(int n) {
    // Relator families shared by every variant: commutations, the h-twist
    // conjugation rules, pentagons, and the chain expressions for t_{i,j}.
    std::vector<Relator> rels;
    int hmax = 2 * n - 1;
    auto H = [](int i) { return Word(g_h(i)); };
    auto T = [](int i, int j) { return Word(g_t(i, j)); };

    // h_i and h_j with far-apart supports commute
    for (int i = 1; i <= hmax; ++i)
        for (int j = i + 3; j <= hmax; ++j)
            rels.push_back({"Comm(a," + std::to_string(i) + "," + std::to_string(j) + ")", comm_word(H(i), H(j))});

    // disjoint or nested twist curves commute
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = i + 1; j <= 2 * n + 1; ++j)
            for (int k = i; k <= 2 * n; ++k)
                for (int l = k + 1; l <= 2 * n + 1; ++l) {
                    if (k == i && l <= j) continue;  // only pairs after (i,j)
                    if (!t_pair_commutes(i, j, k, l)) continue;
                    rels.push_back({"Comm(b," + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + ")",
                                    comm_word(T(i, j), T(k, l))});
                }

    // h_k commutes with twist curves it does not cross
    for (int k = 1; k <= hmax; ++k)
        for (int i = 1; i <= 2 * n; ++i)
            for (int j = i + 1; j <= 2 * n + 1; ++j) {
                if (!h_t_commute(k, i, j)) continue;
                rels.push_back({"Comm(c," + std::to_string(k) + "," + std::to_string(i) + "," + std::to_string(j) + ")",
                                comm_word(H(k), T(i, j))});
            }

    // conjugation rules for elementary twists under h's
    for (int i = 1; i <= 2 * n - 1; ++i)
        for (int e : {1, -1})
            rels.push_back({"Conj(a," + std::to_string(i) + "," + std::to_string(e) + ")",
                            rel_word(H(i).pow(e) * T(i, i + 1), T(i + 1, i + 2) * H(i).pow(e))});
    for (int i = 1; i <= 2 * n - 2; ++i)
        for (int e : {1, -1})
            rels.push_back({"Conj(b," + std::to_string(i) + "," + std::to_string(e) + ")",
                            rel_word(H(i).pow(e) * H(i + 1).pow(e) * T(i, i + 1), T(i + 2, i + 3) * H(i).pow(e) * H(i + 1).pow(e))});
    for (int i = 1; i <= 2 * n - 3; ++i)
        for (int e : {1, -1})
            rels.push_back({"Conj(c," + std::to_string(i) + "," + std::to_string(e) + ")",
                            rel_word(H(i).pow(e) * H(i + 1).pow(e) * H(i + 2).pow(e) * H(i).pow(e),
                                     H(i + 2).pow(e) * H(i).pow(e) * H(i + 1).pow(e) * H(i + 2).pow(e))});
    for (int i = 1; i <= 2 * n - 2; ++i)
        rels.push_back({"Conj(d," + std::to_string(i) + ")",
                        rel_word(H(i) * H(i + 1) * T(i, i + 1), T(i, i + 1) * H(i + 1) * H(i))});
    for (int i = 1; i <= 2 * n - 3; ++i)
        rels.push_back({"Conj(e," + std::to_string(i) + ")",
                        rel_word(H(i) * H(i + 2) * H(i) * T(i + 1, i + 2).inverse(),
                                 T(i + 2, i + 3).inverse() * H(i + 2) * H(i) * H(i + 2))});

    // pentagons
    for (int i = 1; i <= 2 * n - 2; ++i)
        for (int j = i + 1; j <= 2 * n - 1; ++j)
            for (int k = j + 1; k <= 2 * n; ++k)
                for (int l = k + 1; l <= 2 * n + 1; ++l)
                    for (int m5 = l + 1; m5 <= 2 * n + 2; ++m5)
                        rels.push_back({"Pentagonal(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(m5) + ")",
                                        pentagon_word(i, j, k, l, m5)});

    // chain expressions for the non-elementary twists
    for (int i = 1; i <= 2 * n - 1; ++i)
        for (int j = i + 2; j <= 2 * n + 1; ++j)
            rels.push_back({"Chain(" + std::to_string(i) + "," + std::to_string(j) + ")",
                            T(i, j).inverse() * chain_word(i, j, n)});

    return rels;
}

inline void push_generators_lmodb(std::vector<Gen>& gens, int n, bool closed) {
    for (int i = 1; i <= (closed ? 2 * n : 2 * n - 1); ++i) gens.push_back(g_h(i));
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = i + 1; j <= 2 * n + 1; ++j) gens.push_back(g_t(i, j));
    if (closed) gens.push_back(g_r());
}

// Closed-surface extras: the filling relation for the outermost chain and the
// symmetry relations for the half-rotation r. RZeta relators only arise in the
// superelliptic closed family, where odd rotations pick up a deck factor.
inline void closed_relators(std::vector<Relator>& rels, int n, bool smod) {
    auto H = [](int i) { return Word(g_h(i)); };
    auto R = Word(g_r());

    if (smod)
        rels.push_back({"Comm(d)", comm_word(H(2 * n), Word(g_t(1, 2 * n + 1)))});

    rels.push_back({"Chain(1," + std::to_string(2 * n + 2) + ")", chain_word(1, 2 * n + 2, n)});

    rels.push_back({"LiftSym(a)", R * R});
    for (int i = 1; i <= 2 * n; ++i)
        rels.push_back({"LiftSym(b," + std::to_string(i) + ")",
                        rel_word(R * H(i), H(2 * n - i + 1) * R)});
    for (int i = 2; i <= 2 * n; ++i)
        rels.push_back({"LiftSym(c," + std::to_string(i) + ")",
                        rel_word(R * Word(g_t(i, i + 1)), t_curve(2 * n - i + 2, 2 * n - i + 3, n) * R)});
    for (int j = 2; j <= 2 * n; ++j) {
        if (smod && j % 2 == 1) continue;
        rels.push_back({"LiftSym(d," + std::to_string(j) + ")",
                        rel_word(R * Word(g_t(1, j)), t_curve(1, 2 * n - j + 2, n) * R)});
    }
    if (smod) {
        for (int j = 3; j <= 2 * n - 1; j += 2)
            rels.push_back({"RZeta(e," + std::to_string(j) + ")",
                            R * Word(g_t(1, j)) * R.inverse() * t_curve(1, 2 * n - j + 2, n).inverse() * Word(g_t(1, 2 * n + 1))});
        rels.push_back({"RZeta(f)", R * Word(g_t(1, 2 * n + 1)) * R.inverse() * Word(g_t(1, 2 * n + 1))});
    }
}

inline Presentation lmod_presentation(Variant v, int n) {
    if (n < 1) raise("IndexOutOfRange", "n must be >= 1, got " + std::to_string(n));
    Presentation p;
    p.family = v == Variant::Boundary ? Family::LModBoundary
             : v == Variant::Marked   ? Family::LModMarked
                                      : Family::LModClosed;
    p.n = n;
    push_generators_lmodb(p.generators, n, v == Variant::Closed);
    p.relators = braid_lift_relators(n);
    if (v != Variant::Boundary)
        p.relators.push_back({"Cap(1," + std::to_string(2 * n + 1) + ")", Word(g_t(1, 2 * n + 1))});
    if (v == Variant::Closed) closed_relators(p.relators, n, false);
    return p;
}

inline Presentation smod_presentation(Variant v, int n, int k) {
    if (n < 1) raise("IndexOutOfRange", "n must be >= 1, got " + std::to_string(n));
    if (k < 3) raise("InvalidK", "k must be >= 3, got " + std::to_string(k));
    Presentation p;
    p.family = v == Variant::Boundary ? Family::SModBoundary
             : v == Variant::Marked   ? Family::SModMarked
                                      : Family::SModClosed;
    p.n = n;
    p.k = k;
    push_generators_lmodb(p.generators, n, v == Variant::Closed);
    p.relators = braid_lift_relators(n);
    if (v != Variant::Boundary)
        p.relators.push_back({"Cap(1," + std::to_string(2 * n + 1) + ")", Word(g_t(1, 2 * n + 1), k)});
    if (v == Variant::Closed) closed_relators(p.relators, n, true);
    return p;
}

inline Presentation pmod_presentation(int m) {
    if (m < 1) raise("IndexOutOfRange", "m must be >= 1, got " + std::to_string(m));
    Presentation p;
    p.family = Family::PMod;
    p.n = m;
    auto declared = [m](int i, int j) {
        return 1 <= i && i < j && j <= m - 1 && !(i == 1 && j == m - 1);
    };
    for (int i = 1; i <= m - 2; ++i)
        for (int j = i + 1; j <= m - 1; ++j)
            if (declared(i, j)) p.generators.push_back(g_t(i, j));
    auto T = [](int i, int j) { return Word(g_t(i, j)); };
    for (int i = 1; i <= m - 2; ++i)
        for (int j = i + 1; j <= m - 1; ++j)
            for (int k = i; k <= m - 2; ++k)
                for (int l = k + 1; l <= m - 1; ++l) {
                    if (!declared(i, j) || !declared(k, l)) continue;
                    if (k == i && l <= j) continue;
                    if (!t_pair_commutes(i, j, k, l)) continue;
                    p.relators.push_back({"Comm(b," + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + ")",
                                          comm_word(T(i, j), T(k, l))});
                }
    for (int i = 1; i <= m - 4; ++i)
        for (int j = i + 1; j <= m - 3; ++j)
            for (int k = j + 1; k <= m - 2; ++k)
                for (int l = k + 1; l <= m - 1; ++l)
                    for (int m5 = l + 1; m5 <= m; ++m5)
                        p.relators.push_back({"Pentagonal(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(m5) + ")",
                                              pentagon_word(i, j, k, l, m5)});
    return p;
}

// Image of the liftable groups in the symmetric group: a pair of symmetric
// groups on the odd and even points, extended by the swap for the closed case.
inline Presentation w_presentation(int n, bool starred) {
    if (n < 1) raise("IndexOutOfRange", "n must be >= 1, got " + std::to_string(n));
    Presentation p;
    p.family = starred ? Family::WStar : Family::W;
    p.n = n;
    int hmax = starred ? 2 * n - 1 : 2 * n;
    auto H = [](int i) { return Word(g_h(i)); };
    for (int i = 1; i <= hmax; ++i) p.generators.push_back(g_h(i));
    if (!starred) p.generators.push_back(g_r());
    for (int i = 1; i <= hmax; ++i)
        p.relators.push_back({"Invol(" + std::to_string(i) + ")", Word(g_h(i), 2)});
    for (int i = 1; i <= hmax; ++i)
        for (int j = i + 1; j <= hmax; ++j)
            if (j - i == 1 || j - i >= 3)
                p.relators.push_back({"Comm(" + std::to_string(i) + "," + std::to_string(j) + ")", comm_word(H(i), H(j))});
    for (int i = 1; i + 2 <= hmax; ++i)
        p.relators.push_back({"Braid(" + std::to_string(i) + ")",
                              H(i) * H(i + 2) * H(i) * H(i + 2).inverse() * H(i).inverse() * H(i + 2).inverse()});
    if (!starred) {
        Word R(g_r());
        p.relators.push_back({"RInvol", R * R});
        for (int i = 1; i <= 2 * n; ++i)
            p.relators.push_back({"RConj(" + std::to_string(i) + ")",
                                  rel_word(R * H(i), H(2 * n - i + 1) * R)});
    }
    return p;
}

inline Presentation build_presentation(Family f, int n, int k = 0) {
    switch (f) {
        case Family::LModBoundary: return lmod_presentation(Variant::Boundary, n);
        case Family::LModMarked: return lmod_presentation(Variant::Marked, n);
        case Family::LModClosed: return lmod_presentation(Variant::Closed, n);
        case Family::SModBoundary: return smod_presentation(Variant::Boundary, n, k);
        case Family::SModMarked: return smod_presentation(Variant::Marked, n, k);
        case Family::SModClosed: return smod_presentation(Variant::Closed, n, k);
        case Family::PMod: return pmod_presentation(n);
        case Family::W: return w_presentation(n, false);
        case Family::WStar: return w_presentation(n, true);
    }
    raise("IndexOutOfRange", "unknown family");
}

inline const Relator* find_relator(const Presentation& p, const std::string& tag) {
    for (const auto& r : p.relators)
        if (r.tag == tag) return &r;
    return nullptr;
}

}  // namespace smodpres
