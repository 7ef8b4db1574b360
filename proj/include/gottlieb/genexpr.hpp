#ifndef GOTTLIEB_GENEXPR_HPP
#define GOTTLIEB_GENEXPR_HPP

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gottlieb {

/// Symbolic elements of homotopy groups, written in a small prefix grammar:
///
///   atom     := name '(' int ')'            dimension-indexed element, e.g. nu(5)
///             | 'a' '(' i ',' p ',' n ')'   alpha_{i,p}(n), e.g. a(1,3,4)
///   node     := 'E' '(' expr ')'            suspension
///             | 'cmp' '(' expr ',' expr ')' composition x o y
///             | 'wh' '(' expr ',' expr ')'  Whitehead product [x, y]
///             | 'scl' '(' int ',' expr ')'  integer multiple
///             | 'gam' '(' expr ')'          image under the top-cell map
///             | 'ir'|'ic'|'ih'|'ik' '(' expr ')'   image under the bottom-cell inclusion
///
/// Primes are part of atom names (nu', sg''', eps', rho'', ...).
/// Expressions are never evaluated; they are validated for dimension
/// consistency and carried as citations of the printed generators.
struct GenExpr {
    enum class Kind { Atom, Alpha, Susp, Compose, Bracket, Scalar, GammaPush, IncPush };

    Kind kind = Kind::Atom;
    std::string name;          // Atom: atom name; IncPush: ir/ic/ih/ik
    long long dim = 0;         // Atom/Alpha: the sphere the element lives on
    long long a_i = 0, a_p = 0;  // Alpha indices
    long long scalar = 1;      // Scalar
    std::vector<GenExpr> kids;

    std::string str() const {
        switch (kind) {
            case Kind::Atom:
                return name + "(" + std::to_string(dim) + ")";
            case Kind::Alpha:
                return "a(" + std::to_string(a_i) + "," + std::to_string(a_p) + "," +
                       std::to_string(dim) + ")";
            case Kind::Susp:
                return "E(" + kids[0].str() + ")";
            case Kind::Compose:
                return "cmp(" + kids[0].str() + "," + kids[1].str() + ")";
            case Kind::Bracket:
                return "wh(" + kids[0].str() + "," + kids[1].str() + ")";
            case Kind::Scalar:
                return "scl(" + std::to_string(scalar) + "," + kids[0].str() + ")";
            case Kind::GammaPush:
                return "gam(" + kids[0].str() + ")";
            case Kind::IncPush:
                return name + "(" + kids[0].str() + ")";
        }
        return "?";
    }
};

namespace genexpr_detail {

struct AtomInfo {
    long long stem;       // element of pi_{dim+stem}(S^dim)
    long long fixed_dim;  // -1 if the atom exists on a range of spheres
    long long min_dim;
};

// stem table for the named elements that appear in the catalog and rules
inline const std::map<std::string, AtomInfo>& atoms() {
    static const std::map<std::string, AtomInfo> table = {
        {"iota", {0, -1, 1}},  {"eta", {1, -1, 2}},    {"nu", {3, -1, 4}},
        {"nu'", {3, 3, 3}},    {"sg", {7, -1, 8}},     {"sg'", {7, 7, 7}},
        {"sg''", {7, 6, 6}},   {"sg'''", {7, 5, 5}},   {"eps", {8, -1, 3}},
        {"eps'", {10, 3, 3}},  {"epsb", {15, -1, 3}},  {"mu", {9, -1, 3}},
        {"mu'", {11, 3, 3}},   {"mub", {17, -1, 6}},   {"ka", {14, -1, 7}},
        {"kab", {20, -1, 7}},  {"ze", {11, -1, 5}},    {"rho", {15, -1, 5}},
        {"rho''", {15, 7, 7}}, {"xi", {18, -1, 12}},   {"om", {3, 3, 3}},
        {"nub", {8, -1, 6}},   {"b1", {10, -1, 5}},    {"ap3", {11, -1, 5}},
    };
    return table;
}

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& src) : s(src) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("generator expression: " + msg + " at offset " +
                                    std::to_string(pos) + " in \"" + s + "\"");
    }

    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    std::string ident() {
        size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '\''))
            ++pos;
        if (start == pos) fail("expected a name");
        return s.substr(start, pos - start);
    }

    long long integer() {
        size_t start = pos;
        if (peek() == '-') ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos || (s[start] == '-' && pos == start + 1)) fail("expected an integer");
        return std::stoll(s.substr(start, pos - start));
    }

    GenExpr expr() {
        std::string id = ident();
        GenExpr e;
        if (id == "E") {
            e.kind = GenExpr::Kind::Susp;
            expect('(');
            e.kids.push_back(expr());
            expect(')');
        } else if (id == "cmp" || id == "wh") {
            e.kind = id == "cmp" ? GenExpr::Kind::Compose : GenExpr::Kind::Bracket;
            expect('(');
            e.kids.push_back(expr());
            expect(',');
            e.kids.push_back(expr());
            expect(')');
        } else if (id == "scl") {
            e.kind = GenExpr::Kind::Scalar;
            expect('(');
            e.scalar = integer();
            expect(',');
            e.kids.push_back(expr());
            expect(')');
        } else if (id == "gam") {
            e.kind = GenExpr::Kind::GammaPush;
            expect('(');
            e.kids.push_back(expr());
            expect(')');
        } else if (id == "ir" || id == "ic" || id == "ih" || id == "ik") {
            e.kind = GenExpr::Kind::IncPush;
            e.name = id;
            expect('(');
            e.kids.push_back(expr());
            expect(')');
        } else if (id == "a") {
            e.kind = GenExpr::Kind::Alpha;
            expect('(');
            e.a_i = integer();
            expect(',');
            e.a_p = integer();
            expect(',');
            e.dim = integer();
            expect(')');
        } else {
            if (!atoms().count(id)) fail("unknown atom '" + id + "'");
            e.kind = GenExpr::Kind::Atom;
            e.name = id;
            expect('(');
            e.dim = integer();
            expect(')');
        }
        return e;
    }
};

}  // namespace genexpr_detail

inline GenExpr parse_genexpr(const std::string& text) {
    genexpr_detail::Parser p(text);
    GenExpr e = p.expr();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

/// Where an expression lives: an element of pi_source(target sphere), or of
/// pi_source of a projective space after a push (target = -1, space recorded).
struct GenDims {
    long long source = 0;
    long long target = 0;     // sphere dimension; -1 after gam/i pushes
    std::string space;        // nonempty after a push: "gam", "ir", "ic", "ih", "ik"
};

/// Validate dimension consistency, returning source/target degrees.
/// Throws std::invalid_argument on mismatch.
inline GenDims check_dims(const GenExpr& e) {
    using K = GenExpr::Kind;
    auto bad = [&](const std::string& msg) -> GenDims {
        throw std::invalid_argument("generator expression '" + e.str() + "': " + msg);
    };
    switch (e.kind) {
        case K::Atom: {
            const auto& info = genexpr_detail::atoms().at(e.name);
            if (info.fixed_dim >= 0 && e.dim != info.fixed_dim)
                return bad("atom " + e.name + " lives on S^" + std::to_string(info.fixed_dim));
            if (e.dim < info.min_dim)
                return bad("atom " + e.name + " needs dimension >= " + std::to_string(info.min_dim));
            return {e.dim + info.stem, e.dim, ""};
        }
        case K::Alpha: {
            if (e.a_p < 3 || e.a_p % 2 == 0) return bad("alpha prime index must be an odd prime");
            if (e.a_i < 1 || e.dim < 3) return bad("bad alpha indices");
            long long stem = 2 * e.a_i * (e.a_p - 1) - 1;   // alpha_{i,p} stem
            return {e.dim + stem, e.dim, ""};
        }
        case K::Susp: {
            GenDims d = check_dims(e.kids[0]);
            if (!d.space.empty()) return bad("cannot suspend a pushed element");
            return {d.source + 1, d.target + 1, ""};
        }
        case K::Compose: {
            GenDims x = check_dims(e.kids[0]);
            GenDims y = check_dims(e.kids[1]);
            if (!x.space.empty() || !y.space.empty()) return bad("cannot compose pushed elements");
            if (x.source != y.target)
                return bad("composition mismatch: left is on S^" + std::to_string(x.source) +
                           ", right lands on S^" + std::to_string(y.target));
            return {y.source, x.target, ""};
        }
        case K::Bracket: {
            GenDims x = check_dims(e.kids[0]);
            GenDims y = check_dims(e.kids[1]);
            if (!x.space.empty() || !y.space.empty()) return bad("cannot bracket pushed elements");
            if (x.target != y.target) return bad("Whitehead product needs a common target");
            return {x.source + y.source - 1, x.target, ""};
        }
        case K::Scalar:
            return check_dims(e.kids[0]);
        case K::GammaPush: {
            GenDims d = check_dims(e.kids[0]);
            if (!d.space.empty()) return bad("cannot push twice");
            return {d.source, -1, "gam"};
        }
        case K::IncPush: {
            GenDims d = check_dims(e.kids[0]);
            if (!d.space.empty()) return bad("cannot push twice");
            return {d.source, -1, e.name};
        }
    }
    return {};
}

/// Odd primes mentioned by alpha/beta-family atoms inside the expression.
/// Used to attribute printed generators to odd-primary components.
inline void odd_primary_atoms(const GenExpr& e, std::vector<long long>& primes) {
    using K = GenExpr::Kind;
    if (e.kind == K::Alpha) primes.push_back(e.a_p);
    if (e.kind == K::Atom && (e.name == "b1" || e.name == "ap3")) primes.push_back(3);
    for (const auto& k : e.kids) odd_primary_atoms(k, primes);
}

inline bool mentions_odd_prime(const GenExpr& e, long long p) {
    std::vector<long long> primes;
    odd_primary_atoms(e, primes);
    for (auto q : primes)
        if (q == p) return true;
    return false;
}

}  // namespace gottlieb

#endif
