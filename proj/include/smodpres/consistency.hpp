#pragma once

#include <map>
#include <string>
#include <vector>

#include "cover.hpp"
#include "perm.hpp"
#include "presentations.hpp"
#include "sphere_rep.hpp"
#include "words.hpp"

namespace smodpres {

struct CheckReport {
    std::string name;
    bool ok = false;
    std::string detail;
};

//////////// The symmetric-group shadow ////////////

inline long long factorial(int a) {
    long long r = 1;
    for (int i = 2; i <= a; ++i) r *= i;
    return r;
}

// The generators of the closed presentation land onto the full parity group
// (order 2((n+1)!)^2) and the marked ones onto its point-stabilizer
// (order (n+1)!n!); every image stays in its parity class.
inline CheckReport check_psi_surjectivity(int n) {
    CheckReport rep{"psi-surjectivity(n=" + std::to_string(n) + ")", true, ""};
    int m = 2 * n + 2;

    auto closure_of = [m](const Presentation& p) {
        std::vector<Perm> imgs;
        for (const auto& g : p.generators) imgs.push_back(psi(Word(g), m));
        return closure(imgs);
    };

    auto closed = closure_of(build_presentation(Family::LModClosed, n));
    long long want_closed = 2 * factorial(n + 1) * factorial(n + 1);
    bool sizes_ok = static_cast<long long>(closed.size()) == want_closed;
    bool classes_ok = true;
    bool saw_reversing = false;
    for (const auto& tbl : closed) {
        ParityClass c = parity_class(Perm(tbl));
        if (c == ParityClass::Neither) classes_ok = false;
        if (c == ParityClass::Reversing) saw_reversing = true;
    }

    auto marked = closure_of(build_presentation(Family::LModMarked, n));
    long long want_marked = factorial(n + 1) * factorial(n);
    bool marked_ok = static_cast<long long>(marked.size()) == want_marked;
    bool star_ok = true;
    for (const auto& tbl : marked)
        if (!in_w_star(Perm(tbl))) star_ok = false;

    rep.ok = sizes_ok && classes_ok && saw_reversing && marked_ok && star_ok;
    rep.detail = "closed closure " + std::to_string(closed.size()) + "/" + std::to_string(want_closed) +
                 ", marked closure " + std::to_string(marked.size()) + "/" + std::to_string(want_marked);
    if (!classes_ok) rep.detail += ", image leaves the parity group";
    if (!saw_reversing) rep.detail += ", no reversing element reached";
    if (!star_ok) rep.detail += ", marked image moves the last point";
    return rep;
}

//////////// Central boundary twist ////////////

// In the disk cover the lift of t_{1,2n+1} is a k-th root of the boundary
// twist: powers below k are nontrivial, the k-th power reproduces the
// conjugation chain of delta^k computed without the lift machinery (the
// boundary twist acts trivially on the lattice), and it commutes with every
// generator's lift.
inline CheckReport check_central_twist(int n, int k) {
    CheckReport rep{"central-twist(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")", true, ""};
    CoverModel model(n, k, Variant::Boundary);

    Mat c = lift_matrix(model, Word(g_t(1, 2 * n + 1)));
    Mat ck = c.pow(k);

    Word delta;
    for (int i = 1; i <= 2 * n + 1; ++i) delta.append(g_x(i), 1);
    Mat oracle = model.project(model.conj_matrix(delta.pow(k)));

    bool exact_order = ck.is_identity();
    for (int j = 1; j < k && exact_order; ++j)
        if (c.pow(j).is_identity()) exact_order = false;
    bool matches = ck == oracle;
    bool central = true;
    std::string offender;
    for (const auto& g : build_presentation(Family::SModBoundary, n, k).generators) {
        Mat lg = lift_matrix(model, Word(g));
        if (!(lg.mul(ck) == ck.mul(lg))) {
            central = false;
            offender = to_string(g);
            break;
        }
    }

    rep.ok = exact_order && matches && central;
    rep.detail = std::string("order ") + (exact_order ? "exactly k" : "NOT k") +
                 ", boundary chain " + (matches ? "matches" : "DIFFERS") +
                 (central ? ", central" : ", not central against " + offender);
    return rep;
}

//////////// Generation corollaries ////////////

// Words over the corollary generating sets: {h_1..h_{2n-1}, t_{1,2}} with a
// boundary or marked point, plus {h_odd, t_{1,2}, r} on the closed surface.
inline std::map<Gen, Word> generation_rewrites(Family f, int n) {
    if (!is_lmod(f) && !is_smod(f)) raise("InvalidParams", "generation recipe needs a liftable family");
    bool closed = variant_of(f) == Variant::Closed;
    std::map<Gen, Word> out;

    auto hword = [&](int i) {
        if (!closed || i % 2 == 1) return Word(g_h(i));
        return Word(g_r()) * Word(g_h(2 * n - i + 1)) * Word(g_r());
    };

    std::map<int, Word> elem;
    elem[1] = Word(g_t(1, 2));
    for (int i = 1; i <= 2 * n - 1; ++i)
        elem[i + 1] = hword(i) * elem[i] * hword(i).inverse();

    auto expand = [&](const Word& w) {
        Word r;
        for (const auto& l : w.letters()) {
            if (l.g.fam == Fam::H)
                r.append(hword(l.g.i).pow(l.e));
            else if (l.g.fam == Fam::T && l.g.j == l.g.i + 1)
                r.append(elem[l.g.i].pow(l.e));
            else
                raise("RewriteNotFound", "unexpected letter " + to_string(l.g) + " in a chain word");
        }
        return r;
    };

    for (int i = 1; i <= (closed ? 2 * n : 2 * n - 1); ++i) out[g_h(i)] = hword(i);
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = i + 1; j <= 2 * n + 1; ++j)
            out[g_t(i, j)] = j == i + 1 ? elem[i] : expand(chain_word(i, j, n));
    if (closed) out[g_r()] = Word(g_r());
    return out;
}

inline CheckReport check_generation(Family f, int n, int k = 0) {
    CheckReport rep{std::string("generation(") + to_string(f) + ",n=" + std::to_string(n) +
                        (is_smod(f) ? ",k=" + std::to_string(k) : "") + ")",
                    true, ""};
    auto rewrites = generation_rewrites(f, n);
    Variant v = *variant_of(f);

    SphereRep sphere(v == Variant::Boundary ? 2 * n + 1 : 2 * n + 2, v == Variant::Boundary);
    std::optional<CoverModel> model;
    if (is_smod(f)) model.emplace(n, k, v);

    int checked = 0;
    for (const auto& [g, w] : rewrites) {
        Word relator = Word(g) * w.inverse();
        bool ok;
        if (model) {
            ok = verify_smod_relator(*model, relator).outcome == LiftOutcome::Holds;
        } else if (v == Variant::Boundary) {
            ok = SphereRep::is_identity(sphere.of_word(relator));
        } else {
            ok = is_inner(sphere, sphere.of_word(relator));
        }
        if (!ok) {
            rep.ok = false;
            rep.detail = "rewrite for " + to_string(g) + " fails: " + w.str();
            return rep;
        }
        ++checked;
    }
    rep.detail = std::to_string(checked) + " generators rewritten and certified";
    return rep;
}

}  // namespace smodpres
