#include <catch2/catch_amalgamated.hpp>

#include <smodpres/smodpres.hpp>

#include <set>
#include <string>
#include <vector>

using namespace smodpres;

namespace {

template <class F>
std::string error_kind(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind;
    }
    return "<no error>";
}

std::string serialize(const Presentation& p) {
    std::string s;
    for (const auto& g : p.generators) s += to_string(g) + "\n";
    for (const auto& r : p.relators) s += r.tag + " := " + r.word.str() + "\n";
    return s;
}

int count_tag_prefix(const Presentation& p, const std::string& prefix) {
    int c = 0;
    for (const auto& r : p.relators)
        if (r.tag.rfind(prefix, 0) == 0) ++c;
    return c;
}

const std::vector<Family> all_families{
    Family::LModBoundary, Family::LModMarked, Family::LModClosed,
    Family::SModBoundary, Family::SModMarked, Family::SModClosed,
    Family::PMod,         Family::W,          Family::WStar};

}  // namespace

//////////// Family names ////////////

TEST_CASE("family names round-trip") {
    for (Family f : all_families) {
        auto back = family_from_string(to_string(f));
        REQUIRE(back.has_value());
        CHECK(*back == f);
    }
    CHECK_FALSE(family_from_string("smod").has_value());
    CHECK(variant_of(Family::LModMarked) == Variant::Marked);
    CHECK(variant_of(Family::SModClosed) == Variant::Closed);
    CHECK_FALSE(variant_of(Family::PMod).has_value());
    CHECK(is_smod(Family::SModBoundary));
    CHECK_FALSE(is_smod(Family::LModBoundary));
    CHECK(is_lmod(Family::LModClosed));
}

//////////// Twist-curve folding on the closed sphere ////////////

TEST_CASE("t_curve folds indices through the last puncture") {
    CHECK(t_curve(2, 3, 1) == Word(g_t(2, 3)));
    CHECK(t_curve(3, 1, 1) == Word(g_t(1, 3)));  // reversed pairs normalize
    CHECK(t_curve(3, 3, 1).empty());
    CHECK(t_curve(3, 2, 1).empty());  // [i, i-1] is the empty interval
    CHECK(t_curve(4, 3, 2).empty());  // interval of one point

    // curves through the last puncture alias to complementary curves
    CHECK(t_curve(1, 4, 1).empty());
    CHECK(t_curve(2, 4, 1).empty());
    CHECK(t_curve(3, 4, 1) == Word(g_t(1, 2)));
    for (int n : {2, 3}) {
        int m = 2 * n + 2;
        CHECK(t_curve(2 * n + 1, m, n) == Word(g_t(1, 2 * n)));
        for (int i = 3; i <= 2 * n; ++i) CHECK(t_curve(i, m, n) == Word(g_t(1, i - 1)));
    }
    CHECK(error_kind([] { t_curve(1, 7, 2); }) == "IndexOutOfRange");
    CHECK(t_curve_pow(3, 4, 1, -2) == Word(g_t(1, 2), -2));
}

//////////// Commutation predicates ////////////

TEST_CASE("t_pair_commutes matches the interval criterion") {
    int top = 7;
    for (int i = 1; i <= top; ++i)
        for (int j = i + 1; j <= top; ++j)
            for (int k = i; k <= top; ++k)
                for (int l = k + 1; l <= top; ++l) {
                    if (k == i && l <= j) continue;
                    bool disjoint = j < k || l < i;
                    bool nested = (i <= k && l <= j) || (k <= i && j <= l);
                    CHECK(t_pair_commutes(i, j, k, l) == (disjoint || nested));
                }
}

TEST_CASE("h_t_commute spot values") {
    CHECK(h_t_commute(1, 1, 3));        // arc inside the curve
    CHECK(h_t_commute(3, 1, 2));        // curve left of the arc
    CHECK(h_t_commute(1, 4, 5));        // arc left of the curve
    CHECK_FALSE(h_t_commute(1, 2, 4));  // arc crosses the curve
    CHECK_FALSE(h_t_commute(2, 1, 3));
}

//////////// Chain words ////////////

TEST_CASE("chain words in the smallest cases") {
    CHECK(chain_word(1, 3, 1) == Word(g_h(1), 2));
    CHECK(chain_word(2, 4, 2) == Word(g_h(2), 2));
    CHECK(chain_word(1, 4, 2) == (Word(g_h(2)) * Word(g_h(1))).pow(2));
    CHECK(error_kind([] { chain_word(1, 2, 1); }) == "IndexOutOfRange");
    CHECK(error_kind([] { chain_word(0, 3, 1); }) == "IndexOutOfRange");
    CHECK(error_kind([] { chain_word(2, 7, 2); }) == "IndexOutOfRange");
}

TEST_CASE("chain words act trivially on punctures") {
    for (int n : {1, 2, 3})
        for (int i = 1; i <= 2 * n; ++i)
            for (int j = i + 2; j <= 2 * n + 2; ++j)
                CHECK(psi(chain_word(i, j, n), 2 * n + 2).is_identity());
}

//////////// Relator inventories ////////////

TEST_CASE("lmod-boundary n=1 has the worked generator and relator lists") {
    Presentation p = build_presentation(Family::LModBoundary, 1);
    REQUIRE(p.generators.size() == 4);
    CHECK(p.generators == std::vector<Gen>{g_h(1), g_t(1, 2), g_t(1, 3), g_t(2, 3)});

    std::vector<std::string> tags;
    for (const auto& r : p.relators) tags.push_back(r.tag);
    CHECK(tags == std::vector<std::string>{"Comm(b,1,2,1,3)", "Comm(b,1,3,2,3)", "Comm(c,1,1,3)",
                                           "Conj(a,1,1)", "Conj(a,1,-1)", "Chain(1,3)"});
    CHECK(find_relator(p, "Chain(1,3)")->word.str() == "t[1,3]^-1 * h[1]^2");
    CHECK(find_relator(p, "Cap(1,3)") == nullptr);
}

TEST_CASE("marked and closed variants extend the boundary inventory") {
    CHECK(build_presentation(Family::LModMarked, 1).relators.size() == 7);
    CHECK(build_presentation(Family::LModClosed, 1).relators.size() == 13);
    CHECK(build_presentation(Family::SModClosed, 1, 3).relators.size() == 15);

    Presentation marked = build_presentation(Family::LModMarked, 1);
    CHECK(find_relator(marked, "Cap(1,3)")->word == Word(g_t(1, 3)));

    Presentation smarked = build_presentation(Family::SModMarked, 1, 3);
    CHECK(find_relator(smarked, "Cap(1,3)")->word.str() == "t[1,3]^3");

    Presentation sclosed = build_presentation(Family::SModClosed, 2, 4);
    CHECK(find_relator(sclosed, "Comm(d)") != nullptr);
    CHECK(find_relator(sclosed, "RZeta(e,3)") != nullptr);
    CHECK(find_relator(sclosed, "RZeta(f)") != nullptr);
    CHECK(find_relator(sclosed, "LiftSym(d,3)") == nullptr);  // odd rotations move to RZeta
    CHECK(find_relator(sclosed, "LiftSym(d,4)") != nullptr);

    Presentation lclosed = build_presentation(Family::LModClosed, 2);
    CHECK(find_relator(lclosed, "LiftSym(d,3)") != nullptr);
    CHECK(count_tag_prefix(lclosed, "RZeta") == 0);

    // closed generator list gains h_{2n} and r
    CHECK(lclosed.generators.front() == g_h(1));
    CHECK(lclosed.generators.back() == g_r());
    std::set<Gen> gens(lclosed.generators.begin(), lclosed.generators.end());
    CHECK(gens.count(g_h(4)) == 1);
}

TEST_CASE("pmod matches its worked examples") {
    Presentation p4 = build_presentation(Family::PMod, 4);
    CHECK(p4.generators == std::vector<Gen>{g_t(1, 2), g_t(2, 3)});
    CHECK(p4.relators.empty());

    Presentation p7 = build_presentation(Family::PMod, 7);
    CHECK(p7.generators.size() == 14);  // C(6,2) - 1
    CHECK(count_tag_prefix(p7, "Pentagonal") == 21);

    for (const auto& r : p7.relators) CHECK(psi(r.word, 7).is_identity());
}

TEST_CASE("parity group presentations") {
    Presentation w = build_presentation(Family::W, 2);
    CHECK(w.generators.size() == 5);
    CHECK(w.relators.size() == 15);

    Presentation ws = build_presentation(Family::WStar, 2);
    CHECK(ws.generators.size() == 3);
    CHECK(ws.relators.size() == 6);
    CHECK(find_relator(ws, "RInvol") == nullptr);
}

//////////// Structural invariants over the grid ////////////

TEST_CASE("every relator acts trivially on punctures") {
    for (Family f : all_families) {
        if (f == Family::PMod) continue;
        for (int n : {1, 2, 3}) {
            Presentation p = build_presentation(f, n, is_smod(f) ? 3 : 0);
            for (const auto& r : p.relators) {
                INFO(to_string(f) << " n=" << n << " " << r.tag);
                CHECK(psi(r.word, 2 * n + 2).is_identity());
            }
        }
    }
    for (int m : {5, 6, 7})
        for (const auto& r : build_presentation(Family::PMod, m).relators)
            CHECK(psi(r.word, m).is_identity());
}

TEST_CASE("relator words only use declared generators") {
    for (Family f : all_families)
        for (int n : {1, 2, 3}) {
            Presentation p = build_presentation(f, n, is_smod(f) ? 4 : 0);
            std::set<Gen> gens(p.generators.begin(), p.generators.end());
            for (const auto& r : p.relators)
                for (const auto& l : r.word.letters()) {
                    INFO(to_string(f) << " n=" << n << " " << r.tag << " uses " << to_string(l.g));
                    CHECK(gens.count(l.g) == 1);
                }
        }
}

TEST_CASE("relator tags are unique") {
    for (Family f : all_families)
        for (int n : {1, 2, 3}) {
            Presentation p = build_presentation(f, n, is_smod(f) ? 3 : 0);
            std::set<std::string> tags;
            for (const auto& r : p.relators) tags.insert(r.tag);
            CHECK(tags.size() == p.relators.size());
        }
}

TEST_CASE("rebuilds are byte-identical") {
    for (Family f : all_families) {
        Presentation a = build_presentation(f, 2, is_smod(f) ? 5 : 0);
        Presentation b = build_presentation(f, 2, is_smod(f) ? 5 : 0);
        CHECK(serialize(a) == serialize(b));
    }
}

TEST_CASE("parameter validation") {
    CHECK(error_kind([] { build_presentation(Family::LModBoundary, 0); }) == "IndexOutOfRange");
    CHECK(error_kind([] { build_presentation(Family::SModBoundary, 1, 2); }) == "InvalidK");
    CHECK(error_kind([] { build_presentation(Family::SModClosed, 1, 0); }) == "InvalidK");
    CHECK(error_kind([] { build_presentation(Family::PMod, 0); }) == "IndexOutOfRange");
    CHECK(error_kind([] { build_presentation(Family::W, 0); }) == "IndexOutOfRange");
}
