#include <catch2/catch_amalgamated.hpp>

#include <smodpres/smodpres.hpp>

#include <set>
#include <string>

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

}  // namespace

TEST_CASE("psi surjects onto the parity groups") {
    for (int n : {1, 2}) {
        CheckReport rep = check_psi_surjectivity(n);
        INFO(rep.name << ": " << rep.detail);
        CHECK(rep.ok);
    }
    CHECK(check_psi_surjectivity(1).name == "psi-surjectivity(n=1)");
}

TEST_CASE("the boundary twist power is central and matches its chain") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 3}}) {
        CheckReport rep = check_central_twist(n, k);
        INFO(rep.name << ": " << rep.detail);
        CHECK(rep.ok);
    }
}

TEST_CASE("generation rewrites cover the declared generators") {
    for (Family f : {Family::LModBoundary, Family::LModMarked, Family::LModClosed}) {
        for (int n : {1, 2}) {
            auto rewrites = generation_rewrites(f, n);
            Presentation p = build_presentation(f, n);
            std::set<Gen> declared(p.generators.begin(), p.generators.end());
            REQUIRE(rewrites.size() == declared.size());
            for (const auto& [g, w] : rewrites) {
                CHECK(declared.count(g) == 1);
                // closed rewrites stay inside the small generating set
                for (const auto& l : w.letters()) {
                    bool small = l.g == g_t(1, 2) || l.g == g_r() ||
                                 (l.g.fam == Fam::H && l.g.i <= 2 * n - 1 &&
                                  (variant_of(f) != Variant::Closed || l.g.i % 2 == 1));
                    INFO(to_string(f) << " rewrite of " << to_string(g) << " uses " << to_string(l.g));
                    CHECK(small);
                }
            }
        }
    }
    CHECK(error_kind([] { generation_rewrites(Family::PMod, 4); }) == "InvalidParams");
}

TEST_CASE("generation rewrites are certified by the faithful engines") {
    for (Family f : {Family::LModBoundary, Family::LModMarked, Family::LModClosed}) {
        CheckReport rep = check_generation(f, 2);
        INFO(rep.name << ": " << rep.detail);
        CHECK(rep.ok);
    }
    for (Family f : {Family::SModBoundary, Family::SModMarked, Family::SModClosed}) {
        CheckReport rep = check_generation(f, 1, 3);
        INFO(rep.name << ": " << rep.detail);
        CHECK(rep.ok);
    }
}
