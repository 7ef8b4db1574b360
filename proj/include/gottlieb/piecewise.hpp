#ifndef GOTTLIEB_PIECEWISE_HPP
#define GOTTLIEB_PIECEWISE_HPP

#include <functional>
#include <initializer_list>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gottlieb {

/// Conditions on a single integer parameter, covering the shapes the rule
/// tables actually use: congruences with lower bounds, finite sets, ranges,
/// the families n = 2^i - c, conjunction, negation, and a catch-all.
struct Cond {
    std::function<bool(long long)> pred;
    std::string text;
    bool is_otherwise = false;

    bool operator()(long long n) const { return is_otherwise || pred(n); }

    static Cond mod(long long a, long long m) {
        return {[=](long long n) { return ((n % m) + m) % m == a % m; },
                "n=" + std::to_string(a) + " mod " + std::to_string(m), false};
    }
    static Cond mod_ge(long long a, long long m, long long lo) {
        return {[=](long long n) { return n >= lo && ((n % m) + m) % m == a % m; },
                "n=" + std::to_string(a) + " mod " + std::to_string(m) + ", n>=" +
                    std::to_string(lo),
                false};
    }
    static Cond in(std::initializer_list<long long> vs) {
        std::set<long long> s(vs);
        std::string t = "n in {";
        bool first = true;
        for (auto v : s) {
            if (!first) t += ",";
            t += std::to_string(v);
            first = false;
        }
        t += "}";
        return {[s](long long n) { return s.count(n) > 0; }, t, false};
    }
    static Cond eq(long long v) { return in({v}); }
    static Cond range(long long lo, long long hi) {
        return {[=](long long n) { return lo <= n && n <= hi; },
                std::to_string(lo) + "<=n<=" + std::to_string(hi), false};
    }
    static Cond ge(long long lo) {
        return {[=](long long n) { return n >= lo; }, "n>=" + std::to_string(lo), false};
    }
    /// n = 2^i - c with i >= imin
    static Cond pow2_minus(long long c, long long imin) {
        return {[=](long long n) {
                    long long v = n + c;
                    if (v < (1LL << imin)) return false;
                    return (v & (v - 1)) == 0;
                },
                "n=2^i-" + std::to_string(c) + ", i>=" + std::to_string(imin), false};
    }
    static Cond all(std::vector<Cond> cs) {
        std::string t;
        for (size_t i = 0; i < cs.size(); ++i) {
            if (i) t += " and ";
            t += cs[i].text;
        }
        return {[cs](long long n) {
                    for (const auto& c : cs)
                        if (!c(n)) return false;
                    return true;
                },
                t, false};
    }
    static Cond neg(Cond c) {
        auto inner = c;
        return {[inner](long long n) { return !inner(n); }, "not(" + c.text + ")", false};
    }
    static Cond otherwise() { return {nullptr, "otherwise", true}; }
};

/// A rule table: named arms over one integer parameter. Evaluation demands
/// one-hot coverage; audit() proves it over a scan range so a table with
/// overlapping or leaky arms fails loudly instead of answering wrong.
template <class T>
struct Piecewise {
    std::string name;
    std::vector<std::pair<Cond, T>> arms;

    Piecewise(std::string nm, std::vector<std::pair<Cond, T>> as)
        : name(std::move(nm)), arms(std::move(as)) {}

    const T& eval(long long n) const {
        const T* hit = nullptr;
        const T* fallback = nullptr;
        for (const auto& [c, v] : arms) {
            if (c.is_otherwise) {
                if (fallback) throw std::logic_error(name + ": two otherwise arms");
                fallback = &v;
            } else if (c(n)) {
                if (hit)
                    throw std::logic_error(name + ": overlapping arms at n=" + std::to_string(n));
                hit = &v;
            }
        }
        if (hit) return *hit;
        if (fallback) return *fallback;
        throw std::logic_error(name + ": no arm covers n=" + std::to_string(n));
    }

    /// Scan [lo, hi]; every defect is reported as one line.
    std::vector<std::string> audit(long long lo, long long hi) const {
        std::vector<std::string> bad;
        int otherwise_count = 0;
        for (const auto& [c, v] : arms)
            if (c.is_otherwise) ++otherwise_count;
        if (otherwise_count > 1) bad.push_back(name + ": multiple otherwise arms");
        for (long long n = lo; n <= hi; ++n) {
            int hits = 0;
            std::string which;
            for (const auto& [c, v] : arms) {
                if (!c.is_otherwise && c(n)) {
                    ++hits;
                    if (!which.empty()) which += " / ";
                    which += c.text;
                }
            }
            if (hits > 1)
                bad.push_back(name + ": arms overlap at n=" + std::to_string(n) + " (" + which + ")");
            if (hits == 0 && otherwise_count == 0)
                bad.push_back(name + ": no arm covers n=" + std::to_string(n));
        }
        return bad;
    }
};

}  // namespace gottlieb

#endif
