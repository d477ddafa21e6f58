#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "presentations.hpp"
#include "words.hpp"

namespace smodpres {

using Int = boost::multiprecision::cpp_int;

//////////// Dense exact matrices ////////////

struct Mat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Mat mul(const Mat& o) const {
        Mat r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int l = 0; l < cols; ++l) {
                const Int& x = at(i, l);
                if (x == 0) continue;
                for (int j = 0; j < o.cols; ++j) {
                    const Int& y = o.at(l, j);
                    if (y != 0) r.at(i, j) += x * y;
                }
            }
        return r;
    }

    Mat pow(long long e) const {
        Mat r = identity(rows);
        for (long long c = 0; c < e; ++c) r = r.mul(*this);
        return r;
    }

    bool is_identity() const {
        if (rows != cols) return false;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    friend bool operator==(const Mat&, const Mat&) = default;
};

// Fraction-free determinant (Bareiss).
inline Int det(Mat m) {
    if (m.rows != m.cols) raise("InvalidParams", "det of non-square matrix");
    int n = m.rows;
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int p = 0; p < n - 1; ++p) {
        if (m.at(p, p) == 0) {
            int q = p + 1;
            while (q < n && m.at(q, p) == 0) ++q;
            if (q == n) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(q, j));
            sign = -sign;
        }
        for (int i = p + 1; i < n; ++i)
            for (int j = p + 1; j < n; ++j)
                m.at(i, j) = (m.at(p, p) * m.at(i, j) - m.at(i, p) * m.at(p, j)) / prev;
        prev = m.at(p, p);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

//////////// Smith normal form ////////////

struct Snf {
    Mat d;     // u * a * v = d, diagonal with divisibility down the diagonal
    Mat u, v;  // unimodular
    Mat uinv;  // u^-1, kept for pulling quotient coordinates back

    int rank() const {
        int r = 0;
        for (int i = 0; i < std::min(d.rows, d.cols); ++i)
            if (d.at(i, i) != 0) ++r;
        return r;
    }

    std::vector<Int> divisors() const {
        std::vector<Int> out;
        for (int i = 0; i < std::min(d.rows, d.cols); ++i)
            if (d.at(i, i) != 0) out.push_back(d.at(i, i));
        return out;
    }
};

inline Snf smith_normal_form(Mat m) {
    Snf s;
    s.u = Mat::identity(m.rows);
    s.uinv = Mat::identity(m.rows);
    s.v = Mat::identity(m.cols);

    auto rswap = [&](int r1, int r2) {
        if (r1 == r2) return;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(r1, j), m.at(r2, j));
        for (int j = 0; j < s.u.cols; ++j) std::swap(s.u.at(r1, j), s.u.at(r2, j));
        for (int i = 0; i < s.uinv.rows; ++i) std::swap(s.uinv.at(i, r1), s.uinv.at(i, r2));
    };
    auto cswap = [&](int c1, int c2) {
        if (c1 == c2) return;
        for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, c1), m.at(i, c2));
        for (int i = 0; i < s.v.rows; ++i) std::swap(s.v.at(i, c1), s.v.at(i, c2));
    };
    auto raddmul = [&](int r1, int r2, const Int& c) {  // row r1 += c * row r2
        if (c == 0) return;
        for (int j = 0; j < m.cols; ++j) m.at(r1, j) += c * m.at(r2, j);
        for (int j = 0; j < s.u.cols; ++j) s.u.at(r1, j) += c * s.u.at(r2, j);
        for (int i = 0; i < s.uinv.rows; ++i) s.uinv.at(i, r2) -= c * s.uinv.at(i, r1);
    };
    auto caddmul = [&](int c1, int c2, const Int& c) {  // col c1 += c * col c2
        if (c == 0) return;
        for (int i = 0; i < m.rows; ++i) m.at(i, c1) += c * m.at(i, c2);
        for (int i = 0; i < s.v.rows; ++i) s.v.at(i, c1) += c * s.v.at(i, c2);
    };
    auto rneg = [&](int r) {
        for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
        for (int j = 0; j < s.u.cols; ++j) s.u.at(r, j) = -s.u.at(r, j);
        for (int i = 0; i < s.uinv.rows; ++i) s.uinv.at(i, r) = -s.uinv.at(i, r);
    };

    // At each step the smallest nonzero entry of the trailing block is
    // re-selected as pivot, which keeps the elimination quotients small.
    // Before moving on, the pivot is made to divide the whole trailing block,
    // so the diagonal comes out satisfying the divisibility chain.
    int p = 0;
    bool more = true;
    while (more && p < m.rows && p < m.cols) {
        for (;;) {
            int br = -1, bc = -1;
            for (int i = p; i < m.rows; ++i)
                for (int j = p; j < m.cols; ++j) {
                    if (m.at(i, j) == 0) continue;
                    if (br < 0 || abs(m.at(i, j)) < abs(m.at(br, bc))) {
                        br = i;
                        bc = j;
                    }
                }
            if (br < 0) {
                more = false;
                break;
            }
            rswap(p, br);
            cswap(p, bc);

            bool clean = true;
            for (int i = p + 1; i < m.rows; ++i) {
                if (m.at(i, p) == 0) continue;
                raddmul(i, p, -(m.at(i, p) / m.at(p, p)));
                if (m.at(i, p) != 0) clean = false;
            }
            for (int j = p + 1; j < m.cols; ++j) {
                if (m.at(p, j) == 0) continue;
                caddmul(j, p, -(m.at(p, j) / m.at(p, p)));
                if (m.at(p, j) != 0) clean = false;
            }
            if (!clean) continue;

            int bi = -1;
            for (int i = p + 1; i < m.rows && bi < 0; ++i)
                for (int j = p + 1; j < m.cols; ++j)
                    if (m.at(i, j) % m.at(p, p) != 0) {
                        bi = i;
                        break;
                    }
            if (bi < 0) break;
            raddmul(p, bi, 1);
        }
        if (!more) break;
        if (m.at(p, p) < 0) rneg(p);
        ++p;
    }

    s.d = std::move(m);
    return s;
}

//////////// First homology ////////////

struct H1 {
    long long free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, each dividing the next

    friend bool operator==(const H1&, const H1&) = default;
};

inline std::string to_string(const H1& h) {
    std::vector<std::string> parts;
    if (h.free_rank > 0) parts.push_back("Z^" + std::to_string(h.free_rank));
    for (const auto& d : h.torsion) parts.push_back("Z_" + d.str());
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " (+) " + parts[i];
    return s;
}

// rows = generators, cols = relators (exponent sums)
inline H1 h1_of_matrix(const Mat& rels) {
    Snf s = smith_normal_form(rels);
    H1 h;
    h.free_rank = rels.rows - s.rank();
    for (const auto& d : s.divisors())
        if (d != 1) h.torsion.push_back(d);
    return h;
}

inline Mat abelianized_matrix(const Presentation& p) {
    std::map<Gen, int> row;
    for (std::size_t i = 0; i < p.generators.size(); ++i) row[p.generators[i]] = static_cast<int>(i);

    std::vector<std::vector<Int>> cols;
    for (const auto& rel : p.relators) {
        std::vector<Int> col(p.generators.size());
        bool nonzero = false;
        for (const auto& l : rel.word.letters()) {
            auto it = row.find(l.g);
            if (it == row.end()) raise("UnknownGenerator", l.g.fam == Fam::T ? to_string(l.g) + " undeclared in " + rel.tag : to_string(l.g));
            col[it->second] += l.e;
        }
        for (const auto& c : col)
            if (c != 0) nonzero = true;
        if (nonzero) cols.push_back(std::move(col));
    }

    Mat m(static_cast<int>(p.generators.size()), static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols; ++j)
        for (int i = 0; i < m.rows; ++i) m.at(i, j) = cols[j][i];
    return m;
}

inline H1 h1_of_presentation(const Presentation& p) {
    return h1_of_matrix(abelianized_matrix(p));
}

//////////// Closed forms from the structure theorems ////////////

inline H1 expected_h1(Family f, int n, int k = 0) {
    auto z = [](long long r, std::vector<long long> tor) {
        H1 h;
        h.free_rank = r;
        for (long long d : tor) h.torsion.push_back(d);
        return h;
    };
    switch (f) {
        case Family::LModBoundary:
        case Family::SModBoundary:
            return n == 1 ? z(2, {}) : z(3, {});
        case Family::LModMarked:
            if (n == 1) return z(1, {2});
            return n % 2 == 0 ? z(2, {n}) : z(2, {2 * n});
        case Family::SModMarked:
            if (n == 1) return z(1, {2 * k});
            return n % 2 == 0 ? z(2, {static_cast<long long>(k) * n}) : z(2, {2LL * k * n});
        case Family::LModClosed:
            return n % 2 == 1 ? z(1, {2, 2}) : z(1, {2});
        case Family::SModClosed:
            if (n % 2 == 0) return z(1, {2});
            return k % 2 == 1 ? z(1, {2, 2}) : z(1, {2, 4});
        case Family::PMod: {
            long long m = n;
            long long r = m >= 3 ? m * (m - 3) / 2 : 0;
            return z(r, {});
        }
        case Family::W:
            return z(0, {2, 2});
        case Family::WStar:
            // two sign maps (odd and even half-twist blocks) once both exist
            return n == 1 ? z(0, {2}) : z(0, {2, 2});
    }
    raise("InvalidParams", "unknown family");
}

}  // namespace smodpres
