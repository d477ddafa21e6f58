#include <catch2/catch_amalgamated.hpp>

#include <smodpres/smodpres.hpp>

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

using namespace smodpres;

//////////// Naive single-letter oracles ////////////

namespace {

// A word as a flat list of single letters with exponent +-1.
using Flat = std::vector<std::pair<Gen, int>>;

Flat flatten(const Word& w) {
    Flat out;
    for (const auto& l : w.letters()) {
        int s = l.e >= 0 ? 1 : -1;
        for (long long c = 0; c < (l.e >= 0 ? l.e : -l.e); ++c) out.push_back({l.g, s});
    }
    return out;
}

Flat naive_reduce(const Flat& in) {
    Flat st;
    for (const auto& l : in) {
        if (!st.empty() && st.back().first == l.first && st.back().second == -l.second)
            st.pop_back();
        else
            st.push_back(l);
    }
    return st;
}

Flat naive_inverse(const Flat& in) {
    Flat out;
    for (auto it = in.rbegin(); it != in.rend(); ++it) out.push_back({it->first, -it->second});
    return out;
}

Flat naive_concat(Flat a, const Flat& b) {
    a.insert(a.end(), b.begin(), b.end());
    return naive_reduce(a);
}

const std::vector<Gen>& alphabet() {
    static const std::vector<Gen> a{g_s(1), g_s(2), g_h(1), g_h(3),
                                    g_t(1, 2), g_t(2, 5), g_r(), g_x(4)};
    return a;
}

// Random word plus the unreduced letter sequence it was built from.
std::pair<Word, Flat> random_word(std::mt19937_64& rng, int max_runs) {
    std::uniform_int_distribution<int> nruns(0, max_runs);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet().size() - 1);
    std::uniform_int_distribution<int> exp(-3, 3);
    Word w;
    Flat raw;
    int r = nruns(rng);
    for (int c = 0; c < r; ++c) {
        Gen g = alphabet()[pick(rng)];
        int e = exp(rng);
        w.append(g, e);
        int s = e >= 0 ? 1 : -1;
        for (int q = 0; q < (e >= 0 ? e : -e); ++q) raw.push_back({g, s});
    }
    return {std::move(w), std::move(raw)};
}

template <class F>
std::string error_kind(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind;
    }
    return "<no error>";
}

}  // namespace

//////////// Generators ////////////

TEST_CASE("generator factories validate indices and print canonically") {
    CHECK(to_string(g_t(1, 2)) == "t[1,2]");
    CHECK(to_string(g_h(3)) == "h[3]");
    CHECK(to_string(g_r()) == "r");
    CHECK(to_string(g_hij(2, 5)) == "hij[2,5]");

    CHECK(error_kind([] { g_t(2, 2); }) == "IndexOutOfRange");
    CHECK(error_kind([] { g_t(3, 1); }) == "IndexOutOfRange");
    CHECK(error_kind([] { g_h(0); }) == "IndexOutOfRange");
    CHECK(error_kind([] { make_gen(Fam::R, 1, 0); }) == "IndexOutOfRange");
}

TEST_CASE("append merges runs and cancels eagerly") {
    Word w;
    w.append(g_h(1), 2);
    w.append(g_h(1), -1);
    CHECK(w == Word(g_h(1)));
    w.append(g_h(1), -1);
    CHECK(w.empty());

    Word u(g_t(1, 2), 3);
    u.append(g_h(1), 0);
    CHECK(u.runs() == 1);
    CHECK(u.length() == 3);
    CHECK(u.str() == "t[1,2]^3");

    CHECK(identity_word().str() == "1");
    CHECK(Word(g_h(2), -3).str() == "h[2]^-3");
}

//////////// Seeded property suite against the naive oracles ////////////

TEST_CASE("word algebra agrees with the single-letter oracle on 10^4 seeded cases") {
    std::mt19937_64 rng(20240915);
    std::uniform_int_distribution<int> exp(-3, 3);

    for (int iter = 0; iter < 10000; ++iter) {
        auto [w, raw] = random_word(rng, 12);
        auto [v, rawv] = random_word(rng, 12);

        // reduction
        REQUIRE(flatten(w) == naive_reduce(raw));

        // concatenation
        REQUIRE(flatten(w * v) == naive_concat(raw, rawv));

        // inversion
        REQUIRE(flatten(w.inverse()) == naive_reduce(naive_inverse(raw)));
        REQUIRE((w * w.inverse()).empty());

        // powers
        int e = exp(rng);
        Flat pw;
        for (int c = 0; c < (e >= 0 ? e : -e); ++c)
            pw = naive_concat(std::move(pw), e >= 0 ? flatten(w) : flatten(w.inverse()));
        REQUIRE(flatten(w.pow(e)) == naive_reduce(pw));

        // substitution
        std::map<Gen, Word> images;
        Flat sub;
        {
            std::map<Gen, Flat> raw_images;
            for (const auto& g : alphabet()) {
                auto [img, ri] = random_word(rng, 3);
                images[g] = img;
                raw_images[g] = flatten(img);
            }
            for (const auto& l : flatten(w)) {
                const Flat& fi = raw_images[l.first];
                sub = naive_concat(std::move(sub), l.second > 0 ? fi : naive_inverse(fi));
            }
        }
        REQUIRE(flatten(w.substitute(images)) == sub);

        // cyclic reduction
        auto [core, conj] = w.cyclically_reduce();
        REQUIRE(conj * core * conj.inverse() == w);
        const auto& cl = core.letters();
        REQUIRE((cl.size() < 2 || cl.front().g != cl.back().g));
    }
}

TEST_CASE("cyclic reduction peels conjugators") {
    Word a(g_h(1)), b(g_t(1, 2));
    auto [core, conj] = (a * b * a.inverse()).cyclically_reduce();
    CHECK(core == b);
    CHECK(conj == a);

    auto [core2, conj2] = (a.pow(2) * b * a.pow(-2)).cyclically_reduce();
    CHECK(core2 == b);
    CHECK(conj2 == a.pow(2));

    auto [core3, conj3] = b.cyclically_reduce();
    CHECK(core3 == b);
    CHECK(conj3.empty());
}

TEST_CASE("substitute requires a complete image table") {
    Word w = Word(g_h(1)) * Word(g_t(1, 2));
    std::map<Gen, Word> images{{g_h(1), Word(g_s(1))}};
    CHECK(error_kind([&] { (void)w.substitute(images); }) == "MissingImage");
}

//////////// Parser ////////////

TEST_CASE("parse round-trips str on seeded random words") {
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 2000; ++iter) {
        auto [w, raw] = random_word(rng, 10);
        REQUIRE(Word::parse(w.str()) == w);
    }
}

TEST_CASE("parse accepts the worked forms") {
    CHECK(Word::parse("1").empty());
    CHECK(Word::parse(" h[2]^-3 * t[1,4] ") == Word(g_h(2), -3) * Word(g_t(1, 4)));
    CHECK(Word::parse("h[1] * h[1]") == Word(g_h(1), 2));
    CHECK(Word::parse("h[1] * 1 * h[1]^-1").empty());
    CHECK(Word::parse("r^2 * s[3]") == Word(g_r(), 2) * Word(g_s(3)));
    CHECK(Word::parse("x[2]^+4") == Word(g_x(2), 4));
}

TEST_CASE("parse rejects malformed input with ParseError") {
    for (const char* bad : {"", "foo", "t[1]", "h[2", "h[1]^", "h[1] t[2]", "* h[1]", "r[1]"})
        CHECK(error_kind([bad] { (void)Word::parse(bad); }) == "ParseError");
    for (const char* bad : {"h[0]", "t[3,2]", "t[2,2]"})
        CHECK(error_kind([bad] { (void)Word::parse(bad); }) == "IndexOutOfRange");
}
