#pragma once

#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace smodpres {

struct Error : std::runtime_error {
    std::string kind;
    Error(std::string k, const std::string& what)
        : std::runtime_error(k + ": " + what), kind(std::move(k)) {}
};

[[noreturn]] inline void raise(const char* kind, const std::string& what) {
    throw Error(kind, what);
}

//////////// Generators ////////////

enum class Fam : std::uint8_t { Sigma, H, T, A, B, R, Hij, X, Zeta, Custom };

inline int arity(Fam f) {
    switch (f) {
        case Fam::R:
        case Fam::Zeta: return 0;
        case Fam::T:
        case Fam::Hij: return 2;
        default: return 1;
    }
}

inline const char* fam_name(Fam f) {
    switch (f) {
        case Fam::Sigma: return "s";
        case Fam::H: return "h";
        case Fam::T: return "t";
        case Fam::A: return "a";
        case Fam::B: return "b";
        case Fam::R: return "r";
        case Fam::Hij: return "hij";
        case Fam::X: return "x";
        case Fam::Zeta: return "zeta";
        case Fam::Custom: return "g";
    }
    return "?";
}

struct Gen {
    Fam fam = Fam::R;
    int i = 0, j = 0;

    friend auto operator<=>(const Gen&, const Gen&) = default;
};

inline std::string to_string(const Gen& g) {
    std::string s = fam_name(g.fam);
    switch (arity(g.fam)) {
        case 1: s += "[" + std::to_string(g.i) + "]"; break;
        case 2: s += "[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]"; break;
        default: break;
    }
    return s;
}

inline Gen make_gen(Fam f, int i = 0, int j = 0) {
    switch (arity(f)) {
        case 0:
            if (i != 0 || j != 0) raise("IndexOutOfRange", std::string(fam_name(f)) + " takes no index");
            break;
        case 1:
            if (i < 1 || j != 0) raise("IndexOutOfRange", std::string(fam_name(f)) + "[" + std::to_string(i) + "]");
            break;
        case 2:
            if (i < 1 || j <= i) raise("IndexOutOfRange", std::string(fam_name(f)) + "[" + std::to_string(i) + "," + std::to_string(j) + "]");
            break;
    }
    return Gen{f, i, j};
}

inline Gen g_s(int i) { return make_gen(Fam::Sigma, i); }
inline Gen g_h(int i) { return make_gen(Fam::H, i); }
inline Gen g_t(int i, int j) { return make_gen(Fam::T, i, j); }
inline Gen g_a(int i) { return make_gen(Fam::A, i); }
inline Gen g_b(int i) { return make_gen(Fam::B, i); }
inline Gen g_r() { return make_gen(Fam::R); }
inline Gen g_hij(int i, int j) { return make_gen(Fam::Hij, i, j); }
inline Gen g_x(int i) { return make_gen(Fam::X, i); }
inline Gen g_zeta() { return make_gen(Fam::Zeta); }
inline Gen g_custom(int i) { return make_gen(Fam::Custom, i); }

//////////// Words ////////////

struct Letter {
    Gen g;
    long long e = 1;

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Freely reduced word with run-length exponents; reduction is eager, so two
// Words are equal in the free group iff they compare equal.
class Word {
public:
    Word() = default;
    explicit Word(Gen g, long long e = 1) { append(g, e); }

    void append(Gen g, long long e) {
        if (e == 0) return;
        if (!ls_.empty() && ls_.back().g == g) {
            ls_.back().e += e;
            if (ls_.back().e == 0) ls_.pop_back();
        } else {
            ls_.push_back({g, e});
        }
    }

    void append(const Word& w) {
        for (const auto& l : w.ls_) append(l.g, l.e);
    }

    void append_pow(const Word& w, long long e) {
        if (e >= 0) {
            for (long long c = 0; c < e; ++c) append(w);
        } else {
            Word inv = w.inverse();
            for (long long c = 0; c < -e; ++c) append(inv);
        }
    }

    Word operator*(const Word& o) const {
        Word r = *this;
        r.append(o);
        return r;
    }

    Word& operator*=(const Word& o) {
        append(o);
        return *this;
    }

    Word inverse() const {
        Word r;
        r.ls_.reserve(ls_.size());
        for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) r.ls_.push_back({it->g, -it->e});
        return r;
    }

    Word pow(long long e) const {
        Word r;
        r.append_pow(*this, e);
        return r;
    }

    Word substitute(const std::map<Gen, Word>& images) const {
        Word r;
        for (const auto& l : ls_) {
            auto it = images.find(l.g);
            if (it == images.end()) raise("MissingImage", to_string(l.g));
            r.append_pow(it->second, l.e);
        }
        return r;
    }

    // Returns (core, conjugator) with *this == conjugator * core * conjugator^-1
    // and core cyclically reduced.
    std::pair<Word, Word> cyclically_reduce() const {
        std::vector<Letter> c = ls_;
        Word conj;
        while (c.size() >= 2 && c.front().g == c.back().g) {
            Letter front = c.front();
            long long sum = front.e + c.back().e;
            conj.append(front.g, front.e);
            c.erase(c.begin());
            c.pop_back();
            if (sum != 0) {
                if (!c.empty() && c.back().g == front.g) {
                    c.back().e += sum;  // unreachable for reduced input, kept for safety
                    if (c.back().e == 0) c.pop_back();
                } else {
                    c.push_back({front.g, sum});
                }
            }
        }
        Word core;
        core.ls_ = std::move(c);
        return {core, conj};
    }

    bool empty() const { return ls_.empty(); }
    std::size_t runs() const { return ls_.size(); }

    long long length() const {
        long long n = 0;
        for (const auto& l : ls_) n += l.e >= 0 ? l.e : -l.e;
        return n;
    }

    const std::vector<Letter>& letters() const { return ls_; }

    std::string str() const {
        if (ls_.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < ls_.size(); ++i) {
            if (i) s += " * ";
            s += to_string(ls_[i].g);
            if (ls_[i].e != 1) s += "^" + std::to_string(ls_[i].e);
        }
        return s;
    }

    static Word parse(const std::string& text);

    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Letter> ls_;
};

inline Word identity_word() { return Word(); }

//////////// Parser ////////////

namespace detail {

struct Cursor {
    const std::string& s;
    std::size_t p = 0;

    void skip_ws() {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    }
    bool done() {
        skip_ws();
        return p >= s.size();
    }
    bool eat(char c) {
        skip_ws();
        if (p < s.size() && s[p] == c) {
            ++p;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        raise("ParseError", what + " at offset " + std::to_string(p) + " in \"" + s + "\"");
    }
    long long integer() {
        skip_ws();
        std::size_t q = p;
        bool neg = false;
        if (q < s.size() && (s[q] == '-' || s[q] == '+')) {
            neg = s[q] == '-';
            ++q;
        }
        if (q >= s.size() || !std::isdigit(static_cast<unsigned char>(s[q]))) fail("expected integer");
        long long v = 0;
        while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) {
            v = v * 10 + (s[q] - '0');
            ++q;
        }
        p = q;
        return neg ? -v : v;
    }
};

inline bool word_char(char c) { return std::isalpha(static_cast<unsigned char>(c)); }

}  // namespace detail

inline Word Word::parse(const std::string& text) {
    detail::Cursor c{text};
    Word w;
    bool first = true;
    while (true) {
        c.skip_ws();
        if (c.p >= text.size()) {
            if (first) c.fail("empty word");
            break;
        }
        if (!first && !c.eat('*')) c.fail("expected '*'");
        c.skip_ws();
        if (c.p < text.size() && text[c.p] == '1') {
            ++c.p;  // identity term
        } else {
            std::size_t q = c.p;
            while (q < text.size() && detail::word_char(text[q])) ++q;
            std::string name = text.substr(c.p, q - c.p);
            c.p = q;
            Fam fam;
            if (name == "s") fam = Fam::Sigma;
            else if (name == "h") fam = Fam::H;
            else if (name == "t") fam = Fam::T;
            else if (name == "a") fam = Fam::A;
            else if (name == "b") fam = Fam::B;
            else if (name == "r") fam = Fam::R;
            else if (name == "hij") fam = Fam::Hij;
            else if (name == "x") fam = Fam::X;
            else if (name == "zeta") fam = Fam::Zeta;
            else if (name == "g") fam = Fam::Custom;
            else c.fail("unknown generator family \"" + name + "\"");

            int i = 0, j = 0;
            if (arity(fam) > 0) {
                if (!c.eat('[')) c.fail("expected '['");
                i = static_cast<int>(c.integer());
                if (arity(fam) == 2) {
                    if (!c.eat(',')) c.fail("expected ','");
                    j = static_cast<int>(c.integer());
                }
                if (!c.eat(']')) c.fail("expected ']'");
            }
            long long e = 1;
            if (c.eat('^')) e = c.integer();
            w.append(make_gen(fam, i, j), e);
        }
        first = false;
        c.skip_ws();
        if (c.p >= text.size()) break;
    }
    return w;
}

}  // namespace smodpres
