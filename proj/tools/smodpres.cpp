#include <smodpres/smodpres.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

using namespace smodpres;
using json = nlohmann::ordered_json;

namespace {

//////////// Shared plumbing ////////////

long long ms_since(std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
}

Family parse_family(const std::string& name) {
    auto f = family_from_string(name);
    if (!f) raise("InvalidParams", "unknown family \"" + name + "\"");
    return *f;
}

Presentation load_presentation(const std::string& family, int n, int k,
                               const std::vector<std::string>& corrupt) {
    Family f = parse_family(family);
    Presentation p = build_presentation(f, n, k);
    for (const std::string& tag : corrupt) {
        Relator* r = nullptr;
        for (auto& rel : p.relators)
            if (rel.tag == tag) r = &rel;
        if (!r) raise("InvalidParams", "no relator tagged \"" + tag + "\" to corrupt");
        if (r->word.empty()) raise("InvalidParams", "relator \"" + tag + "\" is empty");
        const Letter& last = r->word.letters().back();
        r->word.append(last.g, last.e > 0 ? -1 : 1);
    }
    return p;
}

// Symbol names for the computer-algebra export: t[1,2] -> t1_2.
std::string algebra_symbol(const Gen& g) {
    std::string s = fam_name(g.fam);
    if (arity(g.fam) >= 1) s += std::to_string(g.i);
    if (arity(g.fam) == 2) s += "_" + std::to_string(g.j);
    return s;
}

std::string algebra_word(const Word& w) {
    if (w.empty()) return "One(F)";
    std::string s;
    for (const auto& l : w.letters()) {
        if (!s.empty()) s += "*";
        s += algebra_symbol(l.g);
        if (l.e != 1) s += "^" + std::to_string(l.e);
    }
    return s;
}

//////////// Relator verification ////////////

struct Verdict {
    std::string tag;
    bool ok = false;
    long long max_image = 0;
    long long elapsed_ms = 0;
    std::string witness;
};

enum class Engine { Sphere, Cover, Both };

Engine parse_engine(const std::string& s) {
    if (s == "sphere") return Engine::Sphere;
    if (s == "cover") return Engine::Cover;
    if (s == "both") return Engine::Both;
    raise("InvalidParams", "unknown engine \"" + s + "\"");
}

// The faithful representation appropriate to the family: the permutation
// group itself for the parity families, the exact disk action for boundary
// variants, and the outer action on the punctured sphere otherwise.
struct SphereEngine {
    Family family;
    int n;
    std::optional<SphereRep> rep;

    SphereEngine(Family f, int n_) : family(f), n(n_) {
        if (f == Family::PMod)
            rep.emplace(n_, false);
        else if (is_lmod(f) || is_smod(f))
            rep.emplace(variant_of(f) == Variant::Boundary ? 2 * n_ + 1 : 2 * n_ + 2,
                        variant_of(f) == Variant::Boundary);
    }

    bool check(const Word& w, long long* mi) {
        if (!rep) return psi(w, 2 * n + 2).is_identity();
        Auto f = rep->of_word(w, mi);
        if (family == Family::PMod || variant_of(family) != Variant::Boundary)
            return is_inner(*rep, f);
        return SphereRep::is_identity(f);
    }
};

std::vector<Verdict> verify_relators(const Presentation& p, Engine engine, int k) {
    bool wants_cover = engine != Engine::Sphere;
    if (wants_cover && !(is_smod(p.family) || (p.family == Family::LModBoundary && k >= 3)))
        raise("InvalidParams",
              "engine cover needs an smod family, or lmod-boundary with an explicit --k");

    std::optional<SphereEngine> sphere;
    if (engine != Engine::Cover) sphere.emplace(p.family, p.n);
    std::optional<CoverModel> cover;
    if (wants_cover) cover.emplace(p.n, k, *variant_of(p.family));

    std::vector<Verdict> out;
    for (const auto& r : p.relators) {
        Verdict v;
        v.tag = r.tag;
        v.ok = true;
        auto t0 = std::chrono::steady_clock::now();
        if (sphere && !sphere->check(r.word, &v.max_image)) v.ok = false;
        if (cover) {
            LiftCheck c = verify_smod_relator(*cover, r.word);
            v.max_image = std::max(v.max_image, c.max_image);
            if (c.outcome != LiftOutcome::Holds) v.ok = false;
        }
        v.elapsed_ms = ms_since(t0);
        if (!v.ok) v.witness = r.word.str();
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), [](const Verdict& a, const Verdict& b) { return a.tag < b.tag; });
    return out;
}

int print_verdicts(const std::vector<Verdict>& verdicts, const std::string& format, json header) {
    bool all_ok = true;
    for (const auto& v : verdicts) all_ok = all_ok && v.ok;

    if (format == "json") {
        json out = std::move(header);
        out["ok"] = all_ok;
        out["relators"] = json::array();
        for (const auto& v : verdicts) {
            json jv{{"tag", v.tag}, {"ok", v.ok}, {"max_image", v.max_image}, {"elapsed_ms", v.elapsed_ms}};
            if (!v.ok) jv["witness"] = v.witness;
            out["relators"].push_back(std::move(jv));
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& v : verdicts)
            std::cout << v.tag << " " << (v.ok ? "OK" : "FAIL") << " " << v.max_image << " "
                      << v.elapsed_ms << "\n";
        for (const auto& v : verdicts)
            if (!v.ok) std::cout << "witness " << v.tag << " := " << v.witness << "\n";
    }
    return all_ok ? 0 : 2;
}

//////////// Subcommand bodies ////////////

int run_emit(const std::string& family, int n, int k, const std::string& format) {
    Presentation p = load_presentation(family, n, k, {});

    if (format == "json") {
        json out;
        out["generators"] = json::array();
        for (const auto& g : p.generators) out["generators"].push_back(to_string(g));
        out["relators"] = json::array();
        for (const auto& r : p.relators)
            out["relators"].push_back(json{{"tag", r.tag}, {"word", r.word.str()}});
        std::cout << out.dump() << "\n";
        return 0;
    }

    if (format == "algebra") {
        std::string names, symbols;
        for (const auto& g : p.generators) {
            if (!names.empty()) {
                names += ", ";
                symbols += ", ";
            }
            names += "\"" + algebra_symbol(g) + "\"";
            symbols += algebra_symbol(g);
        }
        std::cout << "F := FreeGroup( " << names << " );\n";
        std::cout << "AssignGeneratorVariables( F );\n";
        std::cout << "rels := [\n";
        for (std::size_t i = 0; i < p.relators.size(); ++i)
            std::cout << "  " << algebra_word(p.relators[i].word)
                      << (i + 1 < p.relators.size() ? "," : "") << "  # " << p.relators[i].tag << "\n";
        std::cout << "];\n";
        std::cout << "G := F / rels;\n";
        return 0;
    }

    std::cout << "family " << to_string(p.family) << "\n";
    std::cout << "n " << p.n << "\n";
    if (is_smod(p.family)) std::cout << "k " << p.k << "\n";
    std::cout << "generators " << p.generators.size() << "\n";
    for (const auto& g : p.generators) std::cout << "  " << to_string(g) << "\n";
    std::cout << "relators " << p.relators.size() << "\n";
    for (const auto& r : p.relators) std::cout << "  " << r.tag << " := " << r.word.str() << "\n";
    return 0;
}

int run_verify(const std::string& family, int n, int k, const std::string& engine,
               const std::string& format, const std::vector<std::string>& corrupt) {
    Presentation p = load_presentation(family, n, k, corrupt);
    auto verdicts = verify_relators(p, parse_engine(engine), k);
    json header{{"family", to_string(p.family)}, {"n", p.n}};
    if (is_smod(p.family)) header["k"] = p.k;
    header["engine"] = engine;
    return print_verdicts(verdicts, format, std::move(header));
}

int run_h1(const std::string& family, int n, int k, const std::string& format, bool expect,
           const std::vector<std::string>& corrupt) {
    Family f = parse_family(family);
    Presentation p = load_presentation(family, n, k, corrupt);
    H1 got = h1_of_presentation(p);
    H1 want = expected_h1(f, n, k);
    bool ok = !expect || got == want;

    if (format == "json") {
        json out{{"family", to_string(f)}, {"n", n}};
        if (is_smod(f)) out["k"] = k;
        out["h1"] = to_string(got);
        out["free_rank"] = got.free_rank;
        out["torsion"] = json::array();
        for (const auto& d : got.torsion) out["torsion"].push_back(d.convert_to<long long>());
        if (expect) {
            out["expected"] = to_string(want);
            out["ok"] = ok;
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << to_string(got) << "\n";
        if (expect && !ok) std::cout << "expected " << to_string(want) << "\n";
    }
    return ok ? 0 : 2;
}

int run_liftable(const std::string& text, int n, const std::string& format) {
    Word w = Word::parse(text);
    ParityClass c = is_liftable(w, n);
    std::string cycles = psi(w, 2 * n + 2).cycles();
    if (format == "json") {
        json out{{"word", w.str()}, {"n", n}, {"class", to_string(c)}, {"psi", cycles}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << to_string(c) << " " << cycles << "\n";
    }
    return 0;
}

int run_lemmas(int n, const std::string& format) {
    SphereRep sphere(2 * n + 2, false);
    SphereRep disk(2 * n + 1, true);
    struct Line {
        std::string tag;
        bool ok;
        long long max_image;
        long long elapsed_ms;
    };
    std::vector<Line> lines;
    for (const auto& c : lemma_suite(n)) {
        long long mi = 0;
        auto t0 = std::chrono::steady_clock::now();
        Word w = c.lhs * c.rhs.inverse();
        bool ok = c.context == "closed" ? is_inner(sphere, sphere.of_word(w, &mi))
                                        : SphereRep::is_identity(disk.of_word(w, &mi));
        lines.push_back({c.context + "/" + c.name, ok, mi, ms_since(t0)});
    }
    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.tag < b.tag; });

    bool all_ok = true;
    for (const auto& l : lines) all_ok = all_ok && l.ok;
    if (format == "json") {
        json out{{"n", n}, {"ok", all_ok}, {"cases", json::array()}};
        for (const auto& l : lines)
            out["cases"].push_back(json{{"tag", l.tag}, {"ok", l.ok}, {"max_image", l.max_image}, {"elapsed_ms", l.elapsed_ms}});
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& l : lines)
            std::cout << l.tag << " " << (l.ok ? "OK" : "FAIL") << " " << l.max_image << " "
                      << l.elapsed_ms << "\n";
    }
    return all_ok ? 0 : 2;
}

int run_report(const std::string& family, int n, int k, const std::string& format,
               unsigned long long seed, const std::vector<std::string>& corrupt) {
    Family f = parse_family(family);
    Presentation p = load_presentation(family, n, k, corrupt);
    Engine engine = is_smod(f) ? Engine::Both : Engine::Sphere;
    auto verdicts = verify_relators(p, engine, k);

    struct Check {
        std::string name;
        bool ok;
        long long elapsed_ms;
    };
    std::vector<Check> checks;
    auto push = [&checks](const std::string& name, bool ok, std::chrono::steady_clock::time_point t0) {
        checks.push_back({name, ok, ms_since(t0)});
    };

    {
        auto t0 = std::chrono::steady_clock::now();
        push("h1-expected", h1_of_presentation(p) == expected_h1(f, n, k), t0);
    }
    if (is_lmod(f) || is_smod(f)) {
        auto t0 = std::chrono::steady_clock::now();
        push("psi-surjectivity", check_psi_surjectivity(n).ok, t0);
        t0 = std::chrono::steady_clock::now();
        push("generation", check_generation(f, n, k).ok, t0);
    }
    if (is_smod(f)) {
        auto t0 = std::chrono::steady_clock::now();
        push("central-twist", check_central_twist(n, k).ok, t0);

        // seeded spot check that lifting is multiplicative
        t0 = std::chrono::steady_clock::now();
        CoverModel model(n, k, *variant_of(f));
        bool closed_dict = variant_of(f) != Variant::Boundary;
        std::vector<Gen> alpha;
        for (int i = 1; i <= (closed_dict ? 2 * n : 2 * n - 1); ++i) alpha.push_back(g_h(i));
        for (int i = 1; i <= 2 * n; ++i)
            for (int j = i + 1; j <= 2 * n + 1; ++j) alpha.push_back(g_t(i, j));
        if (closed_dict) alpha.push_back(g_r());
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, alpha.size() - 1);
        std::uniform_int_distribution<int> exp(-2, 2);
        bool mult_ok = true;
        for (int iter = 0; iter < 5; ++iter) {
            Word u, v;
            for (int c = 0; c < 3; ++c) u.append(alpha[pick(rng)], exp(rng));
            for (int c = 0; c < 3; ++c) v.append(alpha[pick(rng)], exp(rng));
            if (!(lift_matrix(model, u * v) == lift_matrix(model, u).mul(lift_matrix(model, v))))
                mult_ok = false;
        }
        push("lift-multiplicativity", mult_ok, t0);
    }

    bool all_ok = true;
    for (const auto& v : verdicts) all_ok = all_ok && v.ok;
    for (const auto& c : checks) all_ok = all_ok && c.ok;

    if (format == "json") {
        json out{{"family", to_string(f)}, {"n", n}};
        if (is_smod(f)) out["k"] = k;
        out["ok"] = all_ok;
        out["relators"] = json::array();
        for (const auto& v : verdicts) {
            json jv{{"tag", v.tag}, {"ok", v.ok}, {"max_image", v.max_image}, {"elapsed_ms", v.elapsed_ms}};
            if (!v.ok) jv["witness"] = v.witness;
            out["relators"].push_back(std::move(jv));
        }
        out["checks"] = json::array();
        for (const auto& c : checks)
            out["checks"].push_back(json{{"name", c.name}, {"ok", c.ok}, {"elapsed_ms", c.elapsed_ms}});
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& v : verdicts)
            std::cout << v.tag << " " << (v.ok ? "OK" : "FAIL") << " " << v.max_image << " "
                      << v.elapsed_ms << "\n";
        for (const auto& v : verdicts)
            if (!v.ok) std::cout << "witness " << v.tag << " := " << v.witness << "\n";
        for (const auto& c : checks)
            std::cout << c.name << " " << (c.ok ? "OK" : "FAIL") << " 0 " << c.elapsed_ms << "\n";
    }
    return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite presentations of liftable and balanced superelliptic mapping class groups"};
    app.require_subcommand(1);

    std::string family, format = "text", engine = "sphere", word_text;
    int n = 1, k = 0;
    bool expect = false;
    unsigned long long seed = 20240915ULL;
    std::vector<std::string> corrupt;

    auto add_family = [&](CLI::App* cmd, bool with_k = true) {
        cmd->add_option("--family", family, "group family")->required();
        cmd->add_option("--n", n, "strand parameter (puncture count for pmod)")->required();
        if (with_k) cmd->add_option("--k", k, "superelliptic degree (smod families)");
    };

    CLI::App* emit = app.add_subcommand("emit", "print a presentation");
    add_family(emit);
    emit->add_option("--format", format, "text|json|algebra");

    CLI::App* verify = app.add_subcommand("verify", "check every relator in a faithful representation");
    add_family(verify);
    verify->add_option("--engine", engine, "sphere|cover|both");
    verify->add_option("--format", format, "text|json");
    verify->add_option("--corrupt", corrupt, "inject an off-by-one exponent into the tagged relator");

    CLI::App* h1 = app.add_subcommand("h1", "print the abelianization");
    add_family(h1);
    h1->add_option("--format", format, "text|json");
    h1->add_flag("--expect", expect, "compare against the closed form and set the exit status");
    h1->add_option("--corrupt", corrupt, "inject an off-by-one exponent into the tagged relator");

    CLI::App* liftable = app.add_subcommand("liftable", "classify a word by its puncture action");
    liftable->add_option("word", word_text, "word over the generator dictionary")->required();
    liftable->add_option("--n", n, "strand parameter")->required();
    liftable->add_option("--format", format, "text|json");

    CLI::App* lemmas = app.add_subcommand("lemmas", "verify the supporting identity suite");
    lemmas->add_option("--n", n, "strand parameter")->required();
    lemmas->add_option("--format", format, "text|json");

    CLI::App* report = app.add_subcommand("report", "full verification battery for one family");
    add_family(report);
    report->add_option("--format", format, "text|json");
    report->add_option("--seed", seed, "seed for the randomized spot checks");
    report->add_option("--corrupt", corrupt, "inject an off-by-one exponent into the tagged relator");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (emit->parsed()) return run_emit(family, n, k, format);
        if (verify->parsed()) return run_verify(family, n, k, engine, format, corrupt);
        if (h1->parsed()) return run_h1(family, n, k, format, expect, corrupt);
        if (liftable->parsed()) return run_liftable(word_text, n, format);
        if (lemmas->parsed()) return run_lemmas(n, format);
        if (report->parsed()) return run_report(family, n, k, format, seed, corrupt);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 1;
}
