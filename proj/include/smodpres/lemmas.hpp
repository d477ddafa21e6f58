#pragma once

#include <string>
#include <utility>
#include <vector>

#include "presentations.hpp"
#include "sphere_rep.hpp"

namespace smodpres {

// A named word identity, instantiated at concrete indices.  Cases with
// context "boundary" hold exactly in the braid group B_{2n+1}; cases with
// context "closed" hold in Mod of the (2n+2)-marked sphere, i.e. up to an
// inner automorphism of the sphere representation.
struct LemmaCase {
    std::string name;
    std::string context;
    Word lhs;
    Word rhs;
};

struct LemmaOutcome {
    std::string name;
    std::string context;
    bool ok = false;
    long long max_image = 0;
};

namespace lemma_detail {

//////////////////////////////// instance context ////////////////////////////////

// Word factory for one identity instance.  Letters that fall outside the
// generator range of the requested context mark the instance as out of range
// instead of raising, so a single index loop serves both contexts.
struct Ctx {
    int n;
    bool closed;
    bool ok = true;

    Ctx(int n_, bool closed_) : n(n_), closed(closed_) {}

    int hmax() const { return closed ? 2 * n : 2 * n - 1; }
    int tmax() const { return closed ? 2 * n + 2 : 2 * n + 1; }

    Word H(int i, long long e = 1) {
        if (i < 1 || i > hmax()) {
            ok = false;
            return Word();
        }
        return Word(g_h(i), e);
    }

    Word T(int a, int b, long long e = 1) {
        if (b == a || b == a - 1) return Word();
        if (a > b) std::swap(a, b);
        if (a < 1 || b > tmax()) {
            ok = false;
            return Word();
        }
        if (closed) return t_curve(a, b, n).pow(e);
        return Word(g_t(a, b), e);
    }

    Word R() {
        if (!closed) {
            ok = false;
            return Word();
        }
        return Word(g_r());
    }

    Word chain(int i, int j) {
        if (i < 1 || j > tmax() || j - i < 2) {
            ok = false;
            return Word();
        }
        return chain_word(i, j, n);
    }

    // h_a h_{a-1} ... h_b (step -1); empty when a < b
    Word dn1(int a, int b) {
        Word w;
        for (int x = a; x >= b; --x) w.append(H(x));
        return w;
    }
    // h_a h_{a+1} ... h_b (step +1); empty when a > b
    Word up1(int a, int b) {
        Word w;
        for (int x = a; x <= b; ++x) w.append(H(x));
        return w;
    }
    // h_a h_{a-2} ... h_b (step -2)
    Word dn2(int a, int b) {
        Word w;
        for (int x = a; x >= b; x -= 2) w.append(H(x));
        return w;
    }
    // h_a h_{a+2} ... h_b (step +2)
    Word up2(int a, int b) {
        Word w;
        for (int x = a; x <= b; x += 2) w.append(H(x));
        return w;
    }
    // t_{a,a+1}^e t_{a+2,a+3}^e ... t_{b,b+1}^e (step +2)
    Word tup2(int a, int b, long long e) {
        Word w;
        for (int x = a; x <= b; x += 2) w.append(T(x, x + 1, e));
        return w;
    }
    // t_{a,a+1}^e t_{a-2,a-1}^e ... t_{b,b+1}^e (step -2)
    Word tdn2(int a, int b, long long e) {
        Word w;
        for (int x = a; x >= b; x -= 2) w.append(T(x, x + 1, e));
        return w;
    }
};

inline std::string nm(const char* base, std::initializer_list<long long> args) {
    std::string s(base);
    s += '(';
    bool first = true;
    for (long long a : args) {
        if (!first) s += ',';
        s += std::to_string(a);
        first = false;
    }
    s += ')';
    return s;
}

struct Emit {
    int n;
    bool closed;
    std::vector<LemmaCase>* out;

    template <class F>
    void operator()(const std::string& name, F&& make) const {
        Ctx c(n, closed);
        std::pair<Word, Word> p = make(c);
        if (!c.ok) return;
        out->push_back({name, closed ? "closed" : "boundary", std::move(p.first), std::move(p.second)});
    }
};

//////////////////////////////// case generation ////////////////////////////////

inline void build_cases(int n, bool closed, std::vector<LemmaCase>& out) {
    const Emit emit{n, closed, &out};
    const int M = 2 * n + 2;
    const int HM = 2 * n;

    ////// pairwise commutations between twists, half-twists, and mixtures

    for (int i = 1; i < M; ++i)
        for (int j = i + 1; j <= M; ++j)
            for (int k = i; k < M; ++k)
                for (int l = (k == i ? j + 1 : k + 1); l <= M; ++l) {
                    if (!t_pair_commutes(i, j, k, l)) continue;
                    emit(nm("comm-tt", {i, j, k, l}), [&](Ctx& c) {
                        Word a = c.T(i, j), b = c.T(k, l);
                        if (a.empty() || b.empty()) c.ok = false;
                        return std::make_pair(a * b, b * a);
                    });
                }

    for (int i = 1; i + 3 <= HM; ++i)
        for (int j = i + 3; j <= HM; ++j)
            emit(nm("comm-hh", {i, j}), [&](Ctx& c) {
                Word a = c.H(i), b = c.H(j);
                return std::make_pair(a * b, b * a);
            });

    for (int k = 1; k <= HM; ++k)
        for (int i = 1; i < M; ++i)
            for (int j = i + 1; j <= M; ++j) {
                if (!h_t_commute(k, i, j)) continue;
                emit(nm("comm-ht", {k, i, j}), [&](Ctx& c) {
                    Word a = c.H(k), b = c.T(i, j);
                    if (b.empty()) c.ok = false;
                    return std::make_pair(a * b, b * a);
                });
            }

    ////// half-twists conjugate adjacent twists up the index line

    for (int i = 1; i <= HM; ++i)
        for (int e : {1, -1}) {
            emit(nm("conj-shift", {i, e}), [&](Ctx& c) {
                return std::make_pair(c.H(i, e) * c.T(i, i + 1), c.T(i + 1, i + 2) * c.H(i, e));
            });
        }

    for (int i = 1; i + 1 <= HM; ++i)
        for (int e : {1, -1}) {
            emit(nm("conj-shift2", {i, e}), [&](Ctx& c) {
                Word hh = c.H(i, e) * c.H(i + 1, e);
                return std::make_pair(hh * c.T(i, i + 1), c.T(i + 2, i + 3) * hh);
            });
        }

    for (int i = 1; i + 2 <= HM; ++i)
        for (int e : {1, -1}) {
            emit(nm("braid-swap", {i, e}), [&](Ctx& c) {
                return std::make_pair(c.H(i, e) * c.H(i + 1, e) * c.H(i + 2, e) * c.H(i, e),
                                      c.H(i + 2, e) * c.H(i, e) * c.H(i + 1, e) * c.H(i + 2, e));
            });
        }

    ////// reversal conjugation (closed surface only)

    for (int i = 1; i <= HM; ++i)
        emit(nm("rev-h", {i}), [&](Ctx& c) {
            return std::make_pair(c.R() * c.H(i), c.H(2 * n - i + 1) * c.R());
        });

    for (int i = 1; i < M; ++i)
        for (int j = i + 1; j <= M; ++j)
            emit(nm("rev-t", {i, j}), [&](Ctx& c) {
                Word a = c.T(i, j), b = c.T(2 * n - j + 3, 2 * n - i + 3);
                if (a.empty() && b.empty()) c.ok = false;
                return std::make_pair(c.R() * a, b * c.R());
            });

    emit("rev-sq", [&](Ctx& c) { return std::make_pair(c.R() * c.R(), Word()); });

    ////// squares and commutators of half-twists as twists

    for (int i = 1; i <= HM; ++i)
        emit(nm("square-twist", {i}), [&](Ctx& c) {
            return std::make_pair(c.H(i, 2), c.T(i, i + 2));
        });

    for (int i = 1; i + 1 <= HM; ++i)
        emit(nm("commutator-tt", {i}), [&](Ctx& c) {
            Word lhs = c.H(i) * c.H(i + 1) * c.H(i, -1) * c.H(i + 1, -1);
            return std::make_pair(lhs, c.T(i, i + 1) * c.T(i + 2, i + 3, -1));
        });

    for (int i = 1; i + 2 <= HM; ++i)
        emit(nm("braid-tt", {i}), [&](Ctx& c) {
            Word lhs = c.H(i) * c.H(i + 2) * c.H(i) * c.H(i + 2, -1) * c.H(i, -1) * c.H(i + 2, -1);
            return std::make_pair(lhs, c.T(i + 1, i + 2) * c.T(i + 2, i + 3, -1));
        });

    ////// rearrangements of adjacent half-twist pairs and braid triples

    for (int i = 1; i + 1 <= HM; ++i) {
        emit(nm("pair-swap-0", {i}), [&](Ctx& c) {
            return std::make_pair(c.H(i) * c.H(i + 1) * c.T(i, i + 1), c.T(i, i + 1) * c.H(i + 1) * c.H(i));
        });
        emit(nm("pair-swap-a", {i}), [&](Ctx& c) {
            return std::make_pair(c.H(i) * c.H(i + 1) * c.T(i, i + 1), c.H(i + 1) * c.H(i) * c.T(i + 2, i + 3));
        });
        emit(nm("pair-swap-b", {i}), [&](Ctx& c) {
            return std::make_pair(c.T(i + 2, i + 3) * c.H(i) * c.H(i + 1), c.T(i, i + 1) * c.H(i + 1) * c.H(i));
        });
        emit(nm("pair-swap-c", {i}), [&](Ctx& c) {
            return std::make_pair(c.H(i) * c.H(i + 1),
                                  c.H(i + 1) * c.H(i) * c.T(i, i + 1, -1) * c.T(i + 2, i + 3));
        });
        emit(nm("pair-swap-d", {i}), [&](Ctx& c) {
            return std::make_pair(c.H(i) * c.H(i + 1),
                                  c.T(i, i + 1) * c.T(i + 2, i + 3, -1) * c.H(i + 1) * c.H(i));
        });
        emit(nm("pair-swap-e", {i}), [&](Ctx& c) {
            return std::make_pair(c.H(i + 1) * c.H(i),
                                  c.H(i) * c.H(i + 1) * c.T(i, i + 1) * c.T(i + 2, i + 3, -1));
        });
        emit(nm("pair-swap-f", {i}), [&](Ctx& c) {
            return std::make_pair(c.H(i + 1) * c.H(i),
                                  c.T(i, i + 1, -1) * c.T(i + 2, i + 3) * c.H(i) * c.H(i + 1));
        });
    }

    for (int i = 1; i + 2 <= HM; ++i) {
        emit(nm("triple-swap-0", {i}), [&](Ctx& c) {
            return std::make_pair(c.H(i) * c.H(i + 2) * c.H(i) * c.T(i + 1, i + 2, -1),
                                  c.T(i + 2, i + 3, -1) * c.H(i + 2) * c.H(i) * c.H(i + 2));
        });
        emit(nm("triple-swap-a", {i}), [&](Ctx& c) {
            return std::make_pair(c.T(i + 1, i + 2, -1) * c.H(i) * c.H(i + 2) * c.H(i),
                                  c.T(i + 2, i + 3, -1) * c.H(i + 2) * c.H(i) * c.H(i + 2));
        });
        emit(nm("triple-swap-b", {i}), [&](Ctx& c) {
            return std::make_pair(c.H(i) * c.H(i + 2) * c.H(i) * c.T(i + 1, i + 2, -1),
                                  c.H(i + 2) * c.H(i) * c.H(i + 2) * c.T(i + 2, i + 3, -1));
        });
        emit(nm("triple-swap-c", {i}), [&](Ctx& c) {
            return std::make_pair(c.T(i + 1, i + 2, -1) * c.H(i) * c.H(i + 2) * c.H(i),
                                  c.H(i + 2) * c.H(i) * c.H(i + 2) * c.T(i + 2, i + 3, -1));
        });
        emit(nm("triple-swap-d", {i}), [&](Ctx& c) {
            return std::make_pair(c.H(i) * c.H(i + 2) * c.H(i),
                                  c.T(i + 2, i + 3, -1) * c.H(i + 2) * c.H(i) * c.H(i + 2) * c.T(i + 1, i + 2));
        });
        emit(nm("triple-swap-e", {i}), [&](Ctx& c) {
            return std::make_pair(c.H(i) * c.H(i + 2) * c.H(i),
                                  c.T(i + 1, i + 2) * c.H(i + 2) * c.H(i) * c.H(i + 2) * c.T(i + 2, i + 3, -1));
        });
        emit(nm("triple-swap-f", {i}), [&](Ctx& c) {
            return std::make_pair(c.H(i) * c.H(i + 2) * c.H(i),
                                  c.T(i + 1, i + 2) * c.T(i + 2, i + 3, -1) * c.H(i + 2) * c.H(i) * c.H(i + 2));
        });
        emit(nm("triple-swap-g", {i}), [&](Ctx& c) {
            return std::make_pair(c.H(i) * c.H(i + 2) * c.H(i),
                                  c.H(i + 2) * c.H(i) * c.H(i + 2) * c.T(i + 2, i + 3, -1) * c.T(i + 1, i + 2));
        });
    }

    ////// every twist as a word in half-twist chains

    for (int i = 1; i < M; ++i)
        for (int j = i + 2; j <= M; ++j)
            emit(nm("chain", {i, j}), [&](Ctx& c) {
                return std::make_pair(c.T(i, j), c.chain(i, j));
            });

    ////// lantern-type conjugations of a twist by a nearby half-twist

    for (int i = 1; i < HM; ++i)
        for (int j = i + 1; j <= HM; ++j)
            emit(nm("lantern-a1", {i, j}), [&](Ctx& c) {
                Word lhs = c.H(j) * c.T(i, j) * c.H(j, -1);
                Word rhs = c.T(i, j - 1) * c.T(j, j + 1) * c.T(i, j + 2) * c.T(i, j + 1, -1) * c.T(j, j + 2, -1);
                return std::make_pair(lhs, rhs);
            });

    for (int i = 1; i <= 2 * n; ++i)
        for (int j = i + 1; j <= 2 * n + 1; ++j)
            emit(nm("lantern-a2", {i, j}), [&](Ctx& c) {
                Word lhs = c.H(j - 1) * c.T(i, j) * c.H(j - 1, -1);
                if (i + 1 == j) return std::make_pair(lhs, c.T(j, j + 1));
                Word rhs = c.T(i, j - 2) * c.T(j, j + 1) * c.T(i, j + 1) * c.T(i, j - 1, -1) * c.T(j - 1, j + 1, -1);
                return std::make_pair(lhs, rhs);
            });

    for (int i = 3; i <= 2 * n; ++i)
        for (int j = i + 1; j <= 2 * n + 1; ++j)
            emit(nm("lantern-b2", {i, j}), [&](Ctx& c) {
                Word lhs = c.H(i - 2) * c.T(i, j) * c.H(i - 2, -1);
                Word rhs = c.T(i + 1, j) * c.T(i - 1, i) * c.T(i - 2, j) * c.T(i - 1, j, -1) * c.T(i - 2, i, -1);
                return std::make_pair(lhs, rhs);
            });

    for (int i = 2; i <= 2 * n; ++i)
        for (int j = i + 1; j <= 2 * n + 1; ++j)
            emit(nm("lantern-b1", {i, j}), [&](Ctx& c) {
                Word lhs = c.H(i - 1) * c.T(i, j) * c.H(i - 1, -1);
                if (i + 1 == j) return std::make_pair(lhs, c.T(i - 1, i));
                Word rhs = c.T(i + 2, j) * c.T(i - 1, j) * c.T(i - 1, i) * c.T(i + 1, j, -1) * c.T(i - 1, i + 1, -1);
                return std::make_pair(lhs, rhs);
            });

    ////// odd-length chain powers

    for (int i = 1; i < M; ++i)
        for (int j = i + 3; j <= M; j += 2) {
            const long long e = (j - i + 1) / 2;

            for (int l = 1; l <= 2 * n + 1; ++l) {
                if ((l - i) % 2 != 0) continue;
                emit(nm("power-comm-t", {i, j, l}), [&](Ctx& c) {
                    Word p = c.dn1(j - 2, i).pow(e);
                    Word t = c.T(l, l + 1);
                    return std::make_pair(p * t, t * p);
                });
            }

            emit(nm("chain-shuffle", {i, j}), [&](Ctx& c) {
                Word lhs = c.dn1(j - 2, i) * c.up2(i + 1, j - 2);
                Word rhs = c.T(j - 1, j, (j - i - 3) / 2) * c.tup2(i + 1, j - 2, -1) * c.dn2(j - 2, i + 1) *
                           c.T(i, i + 1) * c.up2(i + 1, j - 2) * c.dn2(j - 3, i);
                return std::make_pair(lhs, rhs);
            });

            emit(nm("conj-comm", {i, j}), [&](Ctx& c) {
                Word b = c.tup2(i + 1, j - 2, -1) * c.dn2(j - 2, i + 1) * c.T(i, i + 1) * c.up2(i + 1, j - 2);
                Word w = c.dn1(j - 4, i).pow((j - i - 1) / 2);
                return std::make_pair(w * b, b * w);
            });

            emit(nm("power-reverse", {i, j}), [&](Ctx& c) {
                return std::make_pair(c.dn1(j - 2, i).pow(e), c.up1(i, j - 2).pow(e));
            });

            emit(nm("palin-t-swap", {i, j}), [&](Ctx& c) {
                Word lhs = c.dn2(j - 1, i) * c.up2(i + 2, j - 1) * c.tup2(i + 2, j - 1, -1);
                Word rhs = c.up2(i, j - 1) * c.dn2(j - 3, i) * c.tup2(i + 1, j - 2, -1);
                return std::make_pair(lhs, rhs);
            });

            emit(nm("mid-conj", {i, j}), [&](Ctx& c) {
                Word lhs = c.up2(i, j - 3).inverse() * c.dn2(j - 2, i + 1) * c.up2(i, j - 3);
                Word rhs = c.dn2(j - 2, i + 1) * c.T(i, i + 1) * c.T(j - 1, j, -1);
                return std::make_pair(lhs, rhs);
            });

            if (j <= 2 * n + 1) {
                emit(nm("run-split", {i, j}), [&](Ctx& c) {
                    Word rhs = c.T(i, i + 1, (j - i - 1) / 2) * c.up2(i, j - 1) * c.tup2(i + 2, j - 1, -1) *
                               c.up2(i + 1, j - 2);
                    return std::make_pair(c.up1(i, j - 1), rhs);
                });

                emit(nm("power-reverse-t", {i, j}), [&](Ctx& c) {
                    const long long t = -(j - i - 3) / 2;
                    Word lhs = c.tdn2(j - 1, i, t) * c.dn1(j - 2, i).pow(e);
                    Word rhs = c.tup2(i, j - 1, t) * c.up1(i, j - 2).pow(e);
                    return std::make_pair(lhs, rhs);
                });
            }

            if (j <= 2 * n) {
                emit(nm("absorb-1a", {i, j}), [&](Ctx& c) {
                    return std::make_pair(c.up2(i, j - 1) * c.dn1(j - 2, i).pow(e), c.dn1(j - 1, i).pow(e));
                });
                emit(nm("absorb-1b", {i, j}), [&](Ctx& c) {
                    return std::make_pair(c.up1(i, j - 2).pow(e) * c.dn2(j - 1, i), c.up1(i, j - 1).pow(e));
                });
                emit(nm("absorb-2a", {i, j}), [&](Ctx& c) {
                    return std::make_pair(c.up2(i + 1, j) * c.dn1(j - 1, i).pow(e), c.dn1(j, i).pow(e));
                });
                emit(nm("absorb-2b", {i, j}), [&](Ctx& c) {
                    return std::make_pair(c.up1(i, j - 1).pow(e) * c.dn2(j, i + 1), c.up1(i, j).pow(e));
                });
                emit(nm("absorb2-1a", {i, j}), [&](Ctx& c) {
                    return std::make_pair(c.dn2(j - 1, i) * c.up1(i + 1, j - 1).pow(e), c.up1(i, j - 1).pow(e));
                });
                emit(nm("absorb2-1b", {i, j}), [&](Ctx& c) {
                    return std::make_pair(c.dn1(j - 1, i + 1).pow(e) * c.up2(i, j - 1), c.dn1(j - 1, i).pow(e));
                });
                emit(nm("absorb2-2a", {i, j}), [&](Ctx& c) {
                    return std::make_pair(c.dn2(j - 1, i) * c.up1(i + 1, j).pow(e), c.up1(i, j).pow(e));
                });
                emit(nm("absorb2-2b", {i, j}), [&](Ctx& c) {
                    return std::make_pair(c.dn1(j, i + 1).pow(e) * c.up2(i, j - 1), c.dn1(j, i).pow(e));
                });

                emit(nm("interleave", {i, j}), [&](Ctx& c) {
                    Word lhs = c.dn2(j, i + 1) * c.dn2(j - 1, i);
                    Word rhs = c.T(j + 1, j + 2, -(j - i - 1) / 2) * c.dn1(j, i) * c.tup2(i + 3, j, 1);
                    return std::make_pair(lhs, rhs);
                });
            }
        }

    ////// even-length chain powers

    for (int i = 1; i < M; ++i)
        for (int j = i + 4; j <= M; j += 2) {
            const long long e = (j - i) / 2;
            const long long c2 = (j - i - 2) / 2;
            const long long c4 = (j - i - 4) / 2;

            for (int l = i; l <= j - 2; l += 2)
                emit(nm("palin-comm-t", {i, j, l}), [&](Ctx& c) {
                    Word a = c.T(l + 1, l + 2, 2);
                    Word p = c.dn2(j - 2, i) * a * c.up2(i, j - 2);
                    Word t = c.T(l, l + 1);
                    return std::make_pair(p * t, t * p);
                });

            for (int l = 1; l <= 2 * n + 1; ++l) {
                if ((l - i) % 2 != 0 || l == j) continue;
                emit(nm("palin-comm-t0", {i, j, l}), [&](Ctx& c) {
                    Word p = c.dn2(j - 2, i) * c.up2(i, j - 2);
                    Word t = c.T(l, l + 1);
                    return std::make_pair(p * t, t * p);
                });
            }

            for (int l = i; l <= j - 4; l += 2)
                emit(nm("palin-comm-hh", {i, j, l}), [&](Ctx& c) {
                    Word a;
                    if (l + 5 <= c.hmax())
                        a = c.H(l + 5);
                    else if (l - 2 >= 1)
                        a = c.H(l - 2);
                    Word p = c.dn2(j - 2, i) * a * c.up2(i, j - 2);
                    Word hh = c.H(l + 1) * c.H(l);
                    return std::make_pair(p * hh, hh * p);
                });

            emit(nm("palin-comm-pow", {i, j}), [&](Ctx& c) {
                Word p = c.dn2(j - 2, i) * c.up2(i, j - 2);
                Word q = c.dn1(j - 3, i).pow(e);
                return std::make_pair(p * q, q * p);
            });

            if (j <= 2 * n + 1) {
                emit(nm("even-reverse", {i, j}), [&](Ctx& c) {
                    Word lhs = c.tdn2(j - 2, i, -c2) * c.dn2(j - 2, i) * c.up2(i, j - 2) * c.dn1(j - 3, i).pow(e);
                    Word rhs = c.tup2(i + 1, j - 1, -c2) * c.up2(i, j - 2) * c.dn2(j - 2, i) * c.up1(i + 1, j - 2).pow(e);
                    return std::make_pair(lhs, rhs);
                });
            }

            if (j <= 2 * n) {
                emit(nm("even-square", {i, j}), [&](Ctx& c) {
                    Word lhs = c.dn2(j - 2, i) * c.dn1(j - 2, i).pow(e);
                    Word rhs = (c.H(j - 2) * c.dn1(j - 2, i)).pow(e);
                    return std::make_pair(lhs, rhs);
                });

                emit(nm("step-expand", {i, j}), [&](Ctx& c) {
                    Word lhs = c.H(j - 2) * c.dn1(j - 3, i);
                    Word rhs = c.dn1(j - 3, i) * c.T(i, i + 1, -c4) * c.dn2(j - 4, i).inverse() * c.H(j - 2) *
                               c.dn2(j - 4, i) * c.T(j - 1, j, -1) * c.T(i, i + 1, c2);
                    return std::make_pair(lhs, rhs);
                });

                emit(nm("step-shift", {i, j}), [&](Ctx& c) {
                    Word lhs = c.T(i, i + 1, -c4) * c.dn2(j - 4, i).inverse() * c.H(j - 2) * c.dn2(j - 4, i) *
                               c.T(j - 1, j, -1) * c.T(i, i + 1, c2) * c.dn1(j - 2, i);
                    Word rhs = c.dn1(j - 2, i) * c.T(i + 2, i + 3, -c4) * c.T(i, i + 1, -c2) * c.H(i) *
                               c.T(i + 2, i + 3, c2) * c.T(i, i + 1, c4);
                    return std::make_pair(lhs, rhs);
                });

                emit(nm("step-power", {i, j}), [&](Ctx& c) {
                    Word g = c.T(i + 2, i + 3, -c4) * c.T(i, i + 1, -c2) * c.H(i) * c.T(i + 2, i + 3, c2) *
                             c.T(i, i + 1, c4);
                    Word lhs = (g * c.dn1(j - 2, i)).pow(c4);
                    Word rhs = c.dn1(j - 2, i).pow(c4) * c.T(j - 2, j - 1, -c4) * c.tdn2(j - 4, i + 2, -c2) *
                               c.dn2(j - 4, i + 2) * c.T(i + 2, i + 3, c4) * c.tup2(i + 4, j - 2, c2);
                    return std::make_pair(lhs, rhs);
                });

                emit(nm("mid-palin", {i, j}), [&](Ctx& c) {
                    Word lhs = c.dn2(j - 4, i).inverse() * c.H(j - 2) * c.dn2(j - 4, i);
                    Word rhs = c.dn2(j - 2, i) * c.T(i + 1, i + 2, -1) * c.dn2(j - 2, i + 2).inverse() * c.T(j - 1, j);
                    return std::make_pair(lhs, rhs);
                });

                emit(nm("square-power", {i, j}), [&](Ctx& c) {
                    Word lhs = (c.H(j - 2) * c.dn1(j - 2, i)).pow(e);
                    Word rhs = c.dn1(j - 2, i).pow(e) * c.T(j - 2, j - 1, -c4) * c.tdn2(j - 4, i, -c2) *
                               c.dn2(j - 4, i) * c.dn2(j - 2, i) * c.T(i + 1, i + 2, -1) *
                               c.dn2(j - 2, i + 2).inverse() * c.tup2(i, j - 2, c2);
                    return std::make_pair(lhs, rhs);
                });
            }
        }
}

}  // namespace lemma_detail

//////////////////////////////// suite entry points ////////////////////////////////

inline std::vector<LemmaCase> lemma_suite(int n) {
    if (n < 1) raise("InvalidParams", "lemma_suite requires n >= 1");
    std::vector<LemmaCase> out;
    lemma_detail::build_cases(n, true, out);
    lemma_detail::build_cases(n, false, out);
    return out;
}

inline std::vector<LemmaOutcome> run_lemma_suite(int n) {
    std::vector<LemmaCase> cases = lemma_suite(n);
    SphereRep sphere(2 * n + 2, false);
    SphereRep disk(2 * n + 1, true);
    std::vector<LemmaOutcome> results;
    results.reserve(cases.size());
    for (const LemmaCase& c : cases) {
        long long mi = 0;
        Word w = c.lhs * c.rhs.inverse();
        bool ok;
        if (c.context == "closed")
            ok = is_inner(sphere, sphere.of_word(w, &mi));
        else
            ok = SphereRep::is_identity(disk.of_word(w, &mi));
        results.push_back({c.name, c.context, ok, mi});
    }
    return results;
}

}  // namespace smodpres
