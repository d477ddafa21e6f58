#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "abelianize.hpp"
#include "perm.hpp"
#include "presentations.hpp"
#include "sphere_rep.hpp"
#include "words.hpp"

namespace smodpres {

// Homology model of the k-fold cyclic branched cover of the sphere (closed,
// marked) or of the k-fold cyclic cover of the disk (boundary).  The deck
// group is Z/k; a mapping class downstairs lifts iff its puncture permutation
// preserves or reverses the odd/even colouring, and the lift acts on the
// integral lattice carried here.

struct CoverModel {
    int n = 0, k = 0;
    Variant variant = Variant::Closed;
    int m = 0;           // strands downstairs: 2n+2 (sphere) or 2n+1 (disk)
    int genus = 0;       // n(k-1)
    int rank = 0;        // 2n(k-1) closed/marked, (2n+1)(k-1) boundary
    int basis_size = 0;  // ambient lattice before filling branch relations
    Mat P, S;            // quotient projection / section: rank x basis, basis x rank
    Mat Z;               // deck generator on the quotient lattice
    std::vector<Mat> zpow;
    SphereRep rep;

    CoverModel(int n_, int k_, Variant v);

    int eps(int i) const { return i % 2 == 1 ? 1 : -1; }
    int smod(int s) const { return ((s % k) + k) % k; }

    bool tree_edge(int i, int s) const {
        return variant != Variant::Boundary && i == 1 && s < k - 1;
    }

    int bidx(int i, int s) const {
        if (variant == Variant::Boundary) return (i - 1) * k + s;
        // non-tree edges: (1,k-1), then (i,s) for i >= 2
        if (i == 1) return 0;
        return 1 + (i - 2) * k + s;
    }

    // Trace a word through the cover starting on the given sheet; returns the
    // edge chain it sweeps out and the sheet it ends on.
    std::pair<std::vector<Int>, int> chain(const Word& w, int start) const {
        std::vector<Int> out(basis_size);
        int s = start;
        for (const auto& l : w.letters()) {
            if (l.g.fam != Fam::X) raise("UnknownGenerator", "cover chains want loop words, got " + to_string(l.g));
            int i = l.g.i;
            if (i < 1 || i > 2 * n + 1) raise("IndexOutOfRange", "loop index in cover chain");
            long long reps = l.e > 0 ? l.e : -l.e;
            int dir = l.e > 0 ? 1 : -1;
            for (long long c = 0; c < reps; ++c) {
                if (dir > 0) {
                    if (!tree_edge(i, s)) out[bidx(i, s)] += 1;
                    s = smod(s + eps(i));
                } else {
                    s = smod(s - eps(i));
                    if (!tree_edge(i, s)) out[bidx(i, s)] -= 1;
                }
            }
        }
        return {std::move(out), s};
    }

    // chain of a deck-invariant (sheet-0 closed) loop
    std::vector<Int> rewrite(const Word& w) const {
        auto [vec, end] = chain(w, 0);
        if (end != 0) raise("RewriteNotFound", "word does not lift closed: " + w.str());
        return vec;
    }

    Mat ambient_matrix(const Auto& f) const;
    Mat conj_matrix(const Word& u) const;  // action of conjugation by u (push along u)
    Mat project(const Mat& mk) const { return P.mul(mk.mul(S)); }
};

inline CoverModel::CoverModel(int n_, int k_, Variant v)
    : n(n_),
      k(k_),
      variant(v),
      m(v == Variant::Boundary ? 2 * n_ + 1 : 2 * n_ + 2),
      rep(v == Variant::Boundary ? 2 * n_ + 1 : 2 * n_ + 2, v == Variant::Boundary) {
    if (n < 1) raise("InvalidParams", "need n >= 1");
    if (k < 3) raise("InvalidK", "need k >= 3");
    genus = n * (k - 1);
    basis_size = variant == Variant::Boundary ? (2 * n + 1) * k : (2 * n + 1) * k - (k - 1);

    // branch/puncture filling relations
    std::vector<std::vector<Int>> fills;
    if (variant == Variant::Boundary) {
        for (int i = 1; i <= 2 * n + 1; ++i) {
            std::vector<Int> f(basis_size);
            for (int s = 0; s < k; ++s) f[bidx(i, s)] = 1;
            fills.push_back(std::move(f));
        }
    } else {
        for (int i = 1; i <= 2 * n + 1; ++i) fills.push_back(rewrite(Word(g_x(i)).pow(k)));
        Word delta;
        for (int i = 1; i <= 2 * n + 1; ++i) delta.append(g_x(i), 1);
        fills.push_back(rewrite(delta.pow(-k)));
    }

    Mat f(basis_size, static_cast<int>(fills.size()));
    for (int j = 0; j < f.cols; ++j)
        for (int i = 0; i < f.rows; ++i) f.at(i, j) = fills[j][i];

    Snf snf = smith_normal_form(f);
    int frank = snf.rank();
    if (frank != 2 * n + 1) raise("InvalidParams", "filling lattice has unexpected rank");
    for (const auto& d : snf.divisors())
        if (d != 1) raise("InvalidParams", "filling lattice is not primitive");

    rank = basis_size - frank;
    if (rank != (variant == Variant::Boundary ? 2 * genus + (k - 1) : 2 * genus))
        raise("InvalidParams", "cover lattice has unexpected rank");

    // quotient coordinates: bottom rows of U kill the fills; S sections them back
    P = Mat(rank, basis_size);
    S = Mat(basis_size, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < basis_size; ++j) {
            P.at(i, j) = snf.u.at(frank + i, j);
            S.at(j, i) = snf.uinv.at(j, frank + i);
        }

    if (variant == Variant::Boundary) {
        Mat zk(basis_size, basis_size);
        for (int i = 1; i <= 2 * n + 1; ++i)
            for (int s = 0; s < k; ++s) zk.at(bidx(i, smod(s + 1)), bidx(i, s)) = 1;
        Z = project(zk);
    } else {
        Z = project(conj_matrix(Word(g_x(1))));
    }
    zpow.assign(1, Mat::identity(rank));
    for (int j = 1; j < k; ++j) zpow.push_back(Z.mul(zpow.back()));
    if (!Z.mul(zpow.back()).is_identity()) raise("InvalidParams", "deck generator is not order k");
}

inline Mat CoverModel::ambient_matrix(const Auto& f) const {
    Mat m_(basis_size, basis_size);
    if (variant == Variant::Boundary) {
        for (int i = 1; i <= 2 * n + 1; ++i) {
            const Word& img = f[static_cast<std::size_t>(i) - 1];
            for (int s = 0; s < k; ++s) {
                auto [col, end] = chain(img, s);
                if (end != smod(s + eps(i))) raise("RewriteNotFound", "lift chain ends on a wrong sheet");
                for (int r_ = 0; r_ < basis_size; ++r_) m_.at(r_, bidx(i, s)) = col[r_];
            }
        }
    } else {
        Word x1(g_x(1));
        for (int i = 1; i <= 2 * n + 1; ++i)
            for (int s = 0; s < k; ++s) {
                if (tree_edge(i, s)) continue;
                int t = smod(s + eps(i));
                Word g = x1.pow(s) * Word(g_x(i)) * x1.pow(-t);
                auto col = rewrite(rep.apply(f, g));
                for (int r_ = 0; r_ < basis_size; ++r_) m_.at(r_, bidx(i, s)) = col[r_];
            }
    }
    return m_;
}

inline Mat CoverModel::conj_matrix(const Word& u) const {
    Auto f(static_cast<std::size_t>(m) - (variant == Variant::Boundary ? 0 : 1));
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = u * Word(g_x(static_cast<int>(i) + 1)) * u.inverse();
    return ambient_matrix(f);
}

//////////// Lifting mapping classes ////////////

inline void require_liftable(const CoverModel& model, const Word& w) {
    if (model.variant == Variant::Boundary) {
        Perm p = psi(w, 2 * model.n + 1);
        for (int i = 1; i <= 2 * model.n + 1; ++i)
            if ((p(i) - i) % 2 != 0) raise("NotLiftable", "word does not preserve the colouring: " + w.str());
    } else {
        if (is_liftable(w, model.n) == ParityClass::Neither)
            raise("NotLiftable", "word is not in the liftable subgroup: " + w.str());
    }
}

inline Mat lift_matrix(CoverModel& model, const Word& w, long long* max_image = nullptr) {
    require_liftable(model, w);
    Auto f = model.rep.of_word(w, max_image);
    return model.project(model.ambient_matrix(f));
}

inline Mat deck_matrix(const CoverModel& model) { return model.Z; }

//////////// Relator verification against both engines ////////////

enum class LiftOutcome { Holds, ZetaMismatch, MatrixMismatch };

inline std::string to_string(LiftOutcome o) {
    switch (o) {
        case LiftOutcome::Holds: return "holds";
        case LiftOutcome::ZetaMismatch: return "zeta-mismatch";
        case LiftOutcome::MatrixMismatch: return "matrix-mismatch";
    }
    return "?";
}

struct LiftCheck {
    LiftOutcome outcome = LiftOutcome::MatrixMismatch;
    bool projection_ok = false;   // relator dies in the group downstairs
    int zeta_exponent = -1;       // j with M == Z^j, if any
    long long max_image = 0;
};

inline LiftCheck verify_smod_relator(CoverModel& model, const Word& relator) {
    LiftCheck out;
    Mat mh = lift_matrix(model, relator, &out.max_image);
    for (int j = 0; j < model.k; ++j)
        if (mh == model.zpow[static_cast<std::size_t>(j)]) {
            out.zeta_exponent = j;
            break;
        }

    if (model.variant == Variant::Boundary) {
        out.projection_ok = SphereRep::is_identity(model.rep.of_word(relator));
    } else {
        out.projection_ok = is_inner(model.rep, model.rep.of_word(relator));
    }

    if (out.projection_ok && out.zeta_exponent == 0)
        out.outcome = LiftOutcome::Holds;
    else if (out.projection_ok && out.zeta_exponent > 0)
        out.outcome = LiftOutcome::ZetaMismatch;
    else
        out.outcome = LiftOutcome::MatrixMismatch;
    return out;
}

}  // namespace smodpres
