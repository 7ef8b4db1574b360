#ifndef GOTTLIEB_FGA_HPP
#define GOTTLIEB_FGA_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gottlieb {

/// Order of a group element or group: a positive integer or infinity.
/// Infinity is a distinct state, never a sentinel integer.
struct Order {
    bool infinite = false;
    long long value = 1;

    static Order inf() { return Order{true, 0}; }
    static Order of(long long v) { return Order{false, v}; }

    friend bool operator==(const Order& a, const Order& b) {
        if (a.infinite != b.infinite) return false;
        return a.infinite || a.value == b.value;
    }
    friend bool operator!=(const Order& a, const Order& b) { return !(a == b); }

    // infinity absorbs
    friend Order operator*(const Order& a, const Order& b) {
        if (a.infinite || b.infinite) return inf();
        return of(a.value * b.value);
    }

    /// a | b, with everything dividing infinity and infinity dividing only infinity.
    static bool divides(const Order& a, const Order& b) {
        if (a.infinite) return b.infinite;
        if (b.infinite) return true;
        return a.value != 0 && b.value % a.value == 0;
    }

    std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

inline long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }
inline long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

/// Greatest common divisor, restricted to positive arguments. The order
/// rules use this form so a nonpositive operand is a bug, not a zero.
inline long long gcd24(long long a, long long b) {
    if (a <= 0 || b <= 0) throw std::invalid_argument("gcd24: arguments must be positive");
    return std::gcd(a, b);
}

/// Least common multiple, restricted to positive arguments.
inline long long lcm_pair(long long a, long long b) {
    if (a <= 0 || b <= 0) throw std::invalid_argument("lcm_pair: arguments must be positive");
    return lcm_ll(a, b);
}

inline std::map<long long, int> factorize(long long n) {
    std::map<long long, int> f;
    for (long long p = 2; p * p <= n; ++p)
        while (n % p == 0) { ++f[p]; n /= p; }
    if (n > 1) ++f[n];
    return f;
}

/// Isomorphism type of a finitely generated abelian group in invariant-factor
/// form: Z^free_rank + Z_{d_1} + ... + Z_{d_t} with d_1 | d_2 | ... | d_t, d_i >= 2.
/// Equality is equality of (free_rank, torsion); generator names are advisory.
struct FgAbGroup {
    int free_rank = 0;
    std::vector<long long> torsion;       // ascending divisibility chain
    std::vector<std::string> gens;        // advisory generating set, ignored by ==

    FgAbGroup() = default;
    FgAbGroup(int rank, std::vector<long long> t) : free_rank(rank), torsion(std::move(t)) {}

    static FgAbGroup zero() { return FgAbGroup{}; }
    static FgAbGroup free(int rank, std::vector<std::string> names = {}) {
        FgAbGroup g{rank, {}};
        g.gens = std::move(names);
        return g;
    }
    static FgAbGroup cyclic(long long d) {
        if (d == 0) return free(1);
        return d == 1 ? zero() : FgAbGroup{0, {d}};
    }

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }

    bool chain_ok() const {
        for (auto d : torsion)
            if (d < 2) return false;
        for (size_t i = 0; i + 1 < torsion.size(); ++i)
            if (torsion[i + 1] % torsion[i] != 0) return false;
        return true;
    }

    friend bool operator==(const FgAbGroup& a, const FgAbGroup& b) {
        return a.free_rank == b.free_rank && a.torsion == b.torsion;
    }
    friend bool operator!=(const FgAbGroup& a, const FgAbGroup& b) { return !(a == b); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        if (free_rank == 1) s = "Z";
        else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
        for (auto d : torsion) {
            if (!s.empty()) s += "+";
            s += "Z_" + std::to_string(d);
        }
        return s;
    }
};

/// Rebuild the invariant-factor chain from an arbitrary list of cyclic orders.
inline std::vector<long long> invariant_factors(const std::vector<long long>& cyclic_orders) {
    // primary decomposition, then recombine greedily: the j-th largest factor
    // collects the j-th largest p-power of every prime
    std::map<long long, std::vector<int>> primary;   // p -> exponents, desc
    for (long long d : cyclic_orders) {
        if (d <= 1) continue;
        for (auto& [p, e] : factorize(d)) primary[p].push_back(e);
    }
    size_t layers = 0;
    for (auto& [p, es] : primary) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        layers = std::max(layers, es.size());
    }
    std::vector<long long> desc(layers, 1);
    for (auto& [p, es] : primary)
        for (size_t j = 0; j < es.size(); ++j) {
            long long pw = 1;
            for (int i = 0; i < es[j]; ++i) pw *= p;
            desc[j] *= pw;
        }
    std::sort(desc.begin(), desc.end());
    return desc;
}

inline FgAbGroup canonical(int free_rank, const std::vector<long long>& cyclic_orders,
                           std::vector<std::string> names = {}) {
    FgAbGroup g;
    g.free_rank = free_rank;
    g.torsion = invariant_factors(cyclic_orders);
    g.gens = std::move(names);
    return g;
}

inline FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<long long> all = a.torsion;
    all.insert(all.end(), b.torsion.begin(), b.torsion.end());
    FgAbGroup g = canonical(a.free_rank + b.free_rank, all);
    g.gens = a.gens;
    g.gens.insert(g.gens.end(), b.gens.begin(), b.gens.end());
    return g;
}

inline Order order(const FgAbGroup& g) {
    if (g.free_rank > 0) return Order::inf();
    long long o = 1;
    for (auto d : g.torsion) o *= d;
    return Order::of(o);
}

/// Isomorphism type of m*g: Z stays Z, Z_d becomes Z_{d/(d,m)}.
inline FgAbGroup multiple_subgroup(const FgAbGroup& g, long long m) {
    if (m <= 0) throw std::invalid_argument("multiple_subgroup: m must be positive");
    std::vector<long long> t;
    for (auto d : g.torsion) {
        long long r = d / std::gcd(d, m);
        if (r > 1) t.push_back(r);
    }
    return canonical(g.free_rank, t);
}

/// [g : m*g] = m^rank * prod gcd(d_i, m); always finite.
inline Order index_of_multiple(const FgAbGroup& g, long long m) {
    if (m <= 0) throw std::invalid_argument("index_of_multiple: m must be positive");
    long long idx = 1;
    for (int i = 0; i < g.free_rank; ++i) idx *= m;
    for (auto d : g.torsion) idx *= std::gcd(d, m);
    return Order::of(idx);
}

/// The p-primary component of the torsion part. `had_free` reports whether a
/// free part was dropped.
struct PComponent {
    FgAbGroup part;
    bool had_free = false;
};

inline PComponent p_component(const FgAbGroup& g, long long p) {
    PComponent out;
    out.had_free = g.free_rank > 0;
    std::vector<long long> t;
    for (auto d : g.torsion) {
        long long pw = 1;
        while (d % p == 0) { pw *= p; d /= p; }
        if (pw > 1) t.push_back(pw);
    }
    out.part = canonical(0, t);
    return out;
}

/// Subgroup descriptions as the source theorems state them.
/// GeneratedBy carries, when the theorem prints them, the isomorphism type of
/// the generated subgroup and its index in the ambient group; a subgroup
/// embedding is not recoverable from the isomorphism type alone.
struct SubgroupSpec {
    enum class Kind { Zero, Whole, Multiple, GeneratedBy, DirectSum };

    Kind kind = Kind::Zero;
    long long mult = 1;                                  // Multiple
    std::vector<std::string> generators;                 // GeneratedBy (rendered exprs)
    std::optional<FgAbGroup> gen_iso;                    // GeneratedBy: stated iso type
    std::optional<long long> gen_index;                  // GeneratedBy: stated index
    std::vector<std::pair<std::string, SubgroupSpec>> summands;   // DirectSum: tag -> spec

    static SubgroupSpec zero() { return SubgroupSpec{}; }
    static SubgroupSpec whole() {
        SubgroupSpec s; s.kind = Kind::Whole; return s;
    }
    static SubgroupSpec multiple(long long m) {
        if (m <= 0) throw std::invalid_argument("SubgroupSpec::multiple: m must be positive");
        if (m == 1) return whole();
        SubgroupSpec s; s.kind = Kind::Multiple; s.mult = m; return s;
    }
    static SubgroupSpec generated_by(std::vector<std::string> gens,
                                     std::optional<FgAbGroup> iso = std::nullopt,
                                     std::optional<long long> index = std::nullopt) {
        SubgroupSpec s;
        s.kind = Kind::GeneratedBy;
        s.generators = std::move(gens);
        s.gen_iso = std::move(iso);
        s.gen_index = index;
        return s;
    }
    static SubgroupSpec direct_sum(std::vector<std::pair<std::string, SubgroupSpec>> parts) {
        SubgroupSpec s; s.kind = Kind::DirectSum; s.summands = std::move(parts);
        for (size_t i = 0; i < s.summands.size(); ++i)
            for (size_t j = i + 1; j < s.summands.size(); ++j)
                if (s.summands[i].first == s.summands[j].first)
                    throw std::invalid_argument("SubgroupSpec::direct_sum: duplicate tag");
        return s;
    }

    bool is_zero() const { return kind == Kind::Zero; }
    bool is_whole() const { return kind == Kind::Whole; }

    std::string str() const {
        switch (kind) {
            case Kind::Zero: return "0";
            case Kind::Whole: return "whole";
            case Kind::Multiple: return "mult(" + std::to_string(mult) + ")";
            case Kind::GeneratedBy: {
                std::string s = "gen{";
                for (size_t i = 0; i < generators.size(); ++i) {
                    if (i) s += ",";
                    s += generators[i];
                }
                return s + "}";
            }
            case Kind::DirectSum: {
                std::string s = "sum(";
                for (size_t i = 0; i < summands.size(); ++i) {
                    if (i) s += ",";
                    s += summands[i].first + "=" + summands[i].second.str();
                }
                return s + ")";
            }
        }
        return "?";
    }
};

/// Normalize a spec against a known ambient group: anything over a zero
/// ambient -> Zero, a multiple of index one -> Whole, and a multiple that
/// kills a finite ambient -> Zero.
inline SubgroupSpec normalize(const SubgroupSpec& s, const FgAbGroup& ambient) {
    if (ambient.is_zero()) return SubgroupSpec::zero();
    if (s.kind == SubgroupSpec::Kind::Multiple) {
        Order idx = index_of_multiple(ambient, s.mult);
        if (!idx.infinite && idx.value == 1) return SubgroupSpec::whole();
        if (multiple_subgroup(ambient, s.mult).is_zero() && ambient.free_rank == 0)
            return SubgroupSpec::zero();
    }
    return s;
}

/// Isomorphism type of the subgroup a spec cuts out of `ambient`.
/// GeneratedBy resolves only through its stated iso type.
inline std::optional<FgAbGroup> resolve(const SubgroupSpec& s, const FgAbGroup& ambient) {
    switch (s.kind) {
        case SubgroupSpec::Kind::Zero: return FgAbGroup::zero();
        case SubgroupSpec::Kind::Whole: return ambient;
        case SubgroupSpec::Kind::Multiple: return multiple_subgroup(ambient, s.mult);
        case SubgroupSpec::Kind::GeneratedBy:
            if (s.gen_iso) return *s.gen_iso;
            return std::nullopt;
        case SubgroupSpec::Kind::DirectSum:
            return std::nullopt;   // needs the ambient decomposition, see projspace
    }
    return std::nullopt;
}

/// [ambient : spec]. Infinite when the subgroup drops free rank.
inline std::optional<Order> index_in(const SubgroupSpec& s, const FgAbGroup& ambient) {
    switch (s.kind) {
        case SubgroupSpec::Kind::Zero:
            return order(ambient);
        case SubgroupSpec::Kind::Whole:
            return Order::of(1);
        case SubgroupSpec::Kind::Multiple:
            return index_of_multiple(ambient, s.mult);
        case SubgroupSpec::Kind::GeneratedBy:
            if (s.gen_index) return Order::of(*s.gen_index);
            if (s.gen_iso && s.gen_iso->free_rank < ambient.free_rank) return Order::inf();
            return std::nullopt;
        case SubgroupSpec::Kind::DirectSum:
            return std::nullopt;
    }
    return std::nullopt;
}

/// Intersection where the rule calculus needs it: with Zero, Whole, and
/// between Multiples (same cyclic ambient: lcm of the multipliers).
inline std::optional<SubgroupSpec> intersect(const SubgroupSpec& a, const SubgroupSpec& b) {
    using K = SubgroupSpec::Kind;
    if (a.kind == K::Zero || b.kind == K::Zero) return SubgroupSpec::zero();
    if (a.kind == K::Whole) return b;
    if (b.kind == K::Whole) return a;
    if (a.kind == K::Multiple && b.kind == K::Multiple)
        return SubgroupSpec::multiple(lcm_ll(a.mult, b.mult));
    return std::nullopt;
}

}  // namespace gottlieb

#endif
