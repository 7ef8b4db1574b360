#ifndef GOTTLIEB_CATALOG_HPP
#define GOTTLIEB_CATALOG_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "fga.hpp"
#include "genexpr.hpp"

namespace gottlieb {

/// One catalogued homotopy group: pi_k (or its p-primary part) of a sphere,
/// a classical group, or the Cayley plane.
///
/// Record line format, pipe separated:
///   kind|space|k|rank|torsion|generators|citation
/// with kind in {pi, pip2, pip3, pip5}, space in {s<n>, so<n>, su<n>, sp<n>, kp2},
/// torsion a comma list in invariant factor form, generators a semicolon list
/// in the generator expression grammar. The first record must be `version|1`.
/// Lines starting with `#` and blank lines are ignored.
struct TableEntry {
    std::string kind;
    std::string space;
    long long k = 0;
    FgAbGroup group;
    std::string citation;
    bool stable = false;  // sphere rows only: k - n <= n - 2

    std::string line() const {
        std::string tor;
        for (size_t i = 0; i < group.torsion.size(); ++i) {
            if (i) tor += ',';
            tor += std::to_string(group.torsion[i]);
        }
        std::string gens;
        for (size_t i = 0; i < group.gens.size(); ++i) {
            if (i) gens += ';';
            gens += group.gens[i];
        }
        return kind + "|" + space + "|" + std::to_string(k) + "|" +
               std::to_string(group.free_rank) + "|" + tor + "|" + gens + "|" + citation;
    }
};

struct CatalogError : std::runtime_error {
    enum class Code { ParseError, DuplicateKey, SchemaMismatch, IoError };
    Code code;
    int line;

    CatalogError(Code c, int ln, const std::string& msg)
        : std::runtime_error(name(c) + std::string(" at line ") + std::to_string(ln) + ": " + msg),
          code(c),
          line(ln) {}

    static const char* name(Code c) {
        switch (c) {
            case Code::ParseError: return "ParseError";
            case Code::DuplicateKey: return "DuplicateKey";
            case Code::SchemaMismatch: return "SchemaMismatch";
            case Code::IoError: return "IoError";
        }
        return "?";
    }
};

namespace catalog_detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// "s5" -> ("s",5), "so12" -> ("so",12), "kp2" -> ("kp",2)
inline std::optional<std::pair<std::string, long long>> parse_space(const std::string& sp) {
    size_t i = 0;
    while (i < sp.size() && std::isalpha(static_cast<unsigned char>(sp[i]))) ++i;
    if (i == 0 || i == sp.size()) return std::nullopt;
    std::string fam = sp.substr(0, i);
    if (fam != "s" && fam != "so" && fam != "su" && fam != "sp" && fam != "kp") return std::nullopt;
    for (size_t j = i; j < sp.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(sp[j]))) return std::nullopt;
    long long n = std::stoll(sp.substr(i));
    if (n < 1) return std::nullopt;
    if (fam == "kp" && n != 2) return std::nullopt;
    return std::make_pair(fam, n);
}

inline uint64_t fnv1a(uint64_t h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace catalog_detail

class Catalog {
  public:
    using Key = std::tuple<std::string, std::string, long long>;  // kind, space, k

    static Catalog load_text(const std::string& text) {
        Catalog cat;
        std::istringstream in(text);
        std::string raw;
        int ln = 0;
        bool saw_version = false;
        while (std::getline(in, raw)) {
            ++ln;
            std::string line = catalog_detail::trim(raw);
            if (line.empty() || line[0] == '#') continue;
            auto fields = catalog_detail::split(line, '|');
            if (!saw_version) {
                if (fields.size() != 2 || fields[0] != "version")
                    throw CatalogError(CatalogError::Code::SchemaMismatch, ln,
                                       "first record must be version|1");
                if (fields[1] != "1")
                    throw CatalogError(CatalogError::Code::SchemaMismatch, ln,
                                       "unsupported catalog version " + fields[1]);
                saw_version = true;
                continue;
            }
            if (fields.size() == 2 && fields[0] == "version")
                throw CatalogError(CatalogError::Code::SchemaMismatch, ln, "repeated version record");
            if (fields.size() != 7)
                throw CatalogError(CatalogError::Code::ParseError, ln,
                                   "expected 7 fields, got " + std::to_string(fields.size()));
            cat.add_record(fields, ln);
        }
        if (!saw_version)
            throw CatalogError(CatalogError::Code::SchemaMismatch, 0, "empty catalog, no version record");
        return cat;
    }

    static Catalog load_file(const std::string& path) {
        std::ifstream f(path);
        if (!f)
            throw CatalogError(CatalogError::Code::IoError, 0, "cannot open catalog file " + path);
        std::ostringstream buf;
        buf << f.rdbuf();
        return load_text(buf.str());
    }

    const TableEntry* lookup(const std::string& kind, const std::string& space, long long k) const {
        auto it = entries_.find(Key{kind, space, k});
        return it == entries_.end() ? nullptr : &it->second;
    }

    /// pi_k(S^n) with the trivial cases synthesized: below-degree groups vanish,
    /// pi_n(S^n) = Z, and S^1 is aspherical above degree 1. Everything else comes
    /// from the table; a miss means the group is outside the calculator's range.
    std::optional<TableEntry> pi_sphere(long long n, long long k) const {
        if (n < 1 || k < 1) return std::nullopt;
        if (k < n) return synth(n, k, FgAbGroup::zero(), "[conn]");
        if (n == 1)
            return k == 1 ? synth(1, 1, FgAbGroup::free(1, {"iota(1)"}), "[deg]")
                          : synth(1, k, FgAbGroup::zero(), "[asph]");
        if (const TableEntry* e = lookup("pi", "s" + std::to_string(n), k)) return *e;
        if (k == n) return synth(n, n, FgAbGroup::free(1, {"iota(" + std::to_string(n) + ")"}), "[deg]");
        return std::nullopt;
    }

    /// p-primary part of pi_k(S^n): from the pi row when present, otherwise from
    /// a dedicated pip<p> row (used where only one primary part is catalogued).
    std::optional<TableEntry> pi_sphere_p(long long n, long long k, long long p) const {
        if (auto e = pi_sphere(n, k)) return p_part(*e, p);
        if (p == 2 || p == 3 || p == 5)
            if (const TableEntry* e = lookup("pip" + std::to_string(p), "s" + std::to_string(n), k))
                return *e;
        return std::nullopt;
    }

    std::optional<TableEntry> lookup_p(const std::string& space, long long k, long long p) const {
        if (const TableEntry* e = lookup("pi", space, k)) return p_part(*e, p);
        if (p == 2 || p == 3 || p == 5)
            if (const TableEntry* e = lookup("pip" + std::to_string(p), space, k)) return *e;
        return std::nullopt;
    }

    /// p-primary part with generator attribution: for odd p keep the printed
    /// generators that involve the odd-primary alpha and beta families at p,
    /// for p = 2 keep the ones that involve none.
    static TableEntry p_part(const TableEntry& e, long long p) {
        TableEntry out = e;
        out.kind = "pip" + std::to_string(p);
        PComponent pc = p_component(e.group, p);
        out.group = pc.part;
        out.group.gens.clear();
        if (!out.group.is_zero()) {
            for (const auto& g : e.group.gens) {
                try {
                    GenExpr ge = parse_genexpr(g);
                    std::vector<long long> primes;
                    odd_primary_atoms(ge, primes);
                    bool keep = p == 2 ? primes.empty() : mentions_odd_prime(ge, p);
                    if (keep) out.group.gens.push_back(g);
                } catch (const std::invalid_argument&) {
                    // unparsed generator names stay with the full group only
                }
            }
        }
        return out;
    }

    const std::map<Key, TableEntry>& entries() const { return entries_; }

    /// Canonical serialization: version record first, then all records sorted
    /// by space family, index, kind, degree. Byte stable across loads.
    std::string export_text() const {
        std::vector<const TableEntry*> rows;
        rows.reserve(entries_.size());
        for (const auto& [key, e] : entries_) rows.push_back(&e);
        std::sort(rows.begin(), rows.end(), [](const TableEntry* a, const TableEntry* b) {
            auto ka = sort_key(*a), kb = sort_key(*b);
            return ka < kb;
        });
        std::string out = "version|1\n";
        for (const TableEntry* e : rows) out += e->line() + "\n";
        return out;
    }

    uint64_t checksum() const {
        uint64_t h = 14695981039346656037ULL;
        h = catalog_detail::fnv1a(h, export_text());
        return h;
    }

  private:
    std::map<Key, TableEntry> entries_;

    static std::tuple<std::string, long long, std::string, long long> sort_key(const TableEntry& e) {
        auto sp = catalog_detail::parse_space(e.space);
        return {sp->first, sp->second, e.kind, e.k};
    }

    static std::optional<TableEntry> synth(long long n, long long k, FgAbGroup g,
                                           const std::string& cite) {
        TableEntry e;
        e.kind = "pi";
        e.space = "s" + std::to_string(n);
        e.k = k;
        e.group = std::move(g);
        e.citation = cite;
        e.stable = k - n <= n - 2;
        return e;
    }

    void add_record(const std::vector<std::string>& f, int ln) {
        auto fail = [&](const std::string& msg) {
            throw CatalogError(CatalogError::Code::ParseError, ln, msg);
        };
        TableEntry e;
        e.kind = f[0];
        if (e.kind != "pi" && e.kind != "pip2" && e.kind != "pip3" && e.kind != "pip5")
            fail("unknown kind '" + e.kind + "'");
        e.space = f[1];
        auto sp = catalog_detail::parse_space(e.space);
        if (!sp) fail("unknown space '" + e.space + "'");
        try {
            e.k = std::stoll(f[2]);
            e.group.free_rank = static_cast<int>(std::stoll(f[3]));
        } catch (const std::exception&) {
            fail("degree and rank must be integers");
        }
        if (e.k < 0 || e.group.free_rank < 0) fail("degree and rank must be nonnegative");
        if (!f[4].empty()) {
            for (const auto& part : catalog_detail::split(f[4], ',')) {
                try {
                    e.group.torsion.push_back(std::stoll(part));
                } catch (const std::exception&) {
                    fail("bad torsion entry '" + part + "'");
                }
            }
        }
        if (!e.group.chain_ok())
            fail("torsion " + f[4] + " is not an invariant factor chain");
        if (!f[5].empty()) {
            for (const auto& g : catalog_detail::split(f[5], ';')) {
                try {
                    GenExpr ge = parse_genexpr(g);
                    GenDims d = check_dims(ge);
                    if (sp->first == "s") {
                        if (!d.space.empty())
                            fail("generator '" + g + "' is pushed off the sphere");
                        if (d.source != e.k || d.target != sp->second)
                            fail("generator '" + g + "' lives in pi_" + std::to_string(d.source) +
                                 "(S^" + std::to_string(d.target) + "), row wants pi_" +
                                 std::to_string(e.k) + "(S^" + std::to_string(sp->second) + ")");
                    } else if (sp->first == "kp") {
                        if (d.space != "ik" && d.space != "gam")
                            fail("generator '" + g + "' is not pushed into the Cayley plane");
                        if (d.source != e.k)
                            fail("generator '" + g + "' has degree " + std::to_string(d.source) +
                                 ", row wants " + std::to_string(e.k));
                    }
                    // so/su/sp rows carry no expression generators
                } catch (const std::invalid_argument& ex) {
                    fail(ex.what());
                }
                e.group.gens.push_back(g);
            }
        }
        e.citation = f[6];
        if (e.citation.empty()) fail("missing citation");
        e.stable = sp->first == "s" && e.k - sp->second <= sp->second - 2;
        Key key{e.kind, e.space, e.k};
        if (entries_.count(key))
            throw CatalogError(CatalogError::Code::DuplicateKey, ln,
                               e.kind + "|" + e.space + "|" + std::to_string(e.k) +
                                   " appears twice");
        entries_.emplace(std::move(key), std::move(e));
    }
};

}  // namespace gottlieb

#endif
