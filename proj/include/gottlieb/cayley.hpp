#ifndef GOTTLIEB_CAYLEY_HPP
#define GOTTLIEB_CAYLEY_HPP

#include <optional>
#include <string>
#include <utility>

#include "catalog.hpp"
#include "result.hpp"

namespace gottlieb {

/// The Cayley plane KP^2. No fibration over it splits the way the other
/// towers do, so everything here is a direct table over the catalog rows.
inline constexpr const char* kCayleyLabel = "KP^2";

namespace cayley_detail {

inline std::optional<FgAbGroup> ambient(const Catalog& cat, long long k) {
    if (k >= 1 && k <= 7) return FgAbGroup::zero();
    if (const TableEntry* e = cat.lookup("pi", "kp2", k)) return e->group;
    return std::nullopt;
}

inline std::string table_cite(const Catalog& cat, long long k) {
    if (k >= 1 && k <= 7) return "[conn]";
    if (const TableEntry* e = cat.lookup("pi", "kp2", k)) return e->citation;
    return "";
}

inline std::string cite2(const std::string& a, const std::string& b) {
    return join_citations(a, b);
}

}  // namespace cayley_detail

/// pi_k(KP^2). Known for k <= 25; at k = 26 only the 2-primary part and a
/// short exact sequence are on record, so the full group is not covered.
inline GroupResult pi_kp2(const Catalog& cat, long long k) {
    std::string subject = "pi_" + std::to_string(k) + "(" + kCayleyLabel + ")";
    auto amb = cayley_detail::ambient(cat, k);
    if (!amb) return GroupResult::not_covered(subject, k == 26 ? "[JT]" : "-");
    return GroupResult::exact(subject, SubgroupSpec::whole(), *amb,
                              cayley_detail::table_cite(cat, k));
}

inline GroupResult pi_kp2_p(const Catalog& cat, long long k, long long p) {
    std::string subject =
        "pi_" + std::to_string(k) + "(" + std::string(kCayleyLabel) + ";" + std::to_string(p) + ")";
    if (k >= 1 && k <= 7)
        return GroupResult::exact(subject, SubgroupSpec::whole(), FgAbGroup::zero(), "[conn]");
    if (auto e = cat.lookup_p("kp2", k, p))
        return GroupResult::exact(subject, SubgroupSpec::whole(), e->group, e->citation);
    return GroupResult::not_covered(subject);
}

/// The degree-26 extension on record: the 2-primary part sits in
///   0 -> Z_24 + Z_2 -> pi_26(KP^2) -> Z_24 -> 0.
struct CayleyK26 {
    FgAbGroup sub = canonical(0, {2, 24});
    FgAbGroup quotient = canonical(0, {24});
    FgAbGroup two_primary = canonical(0, {2, 64});
    const char* citation = "[JT]";
};

inline CayleyK26 cayley_k26_relation() { return {}; }

/// P_k(KP^2).
inline GroupResult p_kp2(const Catalog& cat, long long k) {
    std::string subject = "P_" + std::to_string(k) + "(" + kCayleyLabel + ")";
    auto amb = cayley_detail::ambient(cat, k);
    if (!amb) return GroupResult::not_covered(subject);
    std::string tc = cayley_detail::table_cite(cat, k);
    auto ex = [&](SubgroupSpec v, const char* c) {
        return GroupResult::exact(subject, std::move(v), *amb, cayley_detail::cite2(c, tc));
    };
    if (amb->is_zero()) return ex(SubgroupSpec::whole(), "[zero]");
    switch (k) {
        case 9:
        case 10:
        case 14: return ex(SubgroupSpec::zero(), "[o2]");
        case 11: return ex(SubgroupSpec::multiple(8), "[o2]");
        case 16: {
            SubgroupSpec lo = SubgroupSpec::generated_by({"ik(E(cmp(sg'(7),eta(14))))"},
                                                         canonical(0, {2}), 4);
            SubgroupSpec hi = SubgroupSpec::generated_by(
                {"ik(E(cmp(sg'(7),eta(14))))", "ik(cmp(eta(8),sg(9)))"}, canonical(0, {2, 2}), 2);
            return GroupResult::bounds(subject, std::move(lo), std::move(hi), amb,
                                       cayley_detail::cite2("[o2]", tc));
        }
        case 17: {
            SubgroupSpec lo = SubgroupSpec::generated_by(
                {"ik(E(cmp(sg'(7),cmp(eta(14),eta(15)))))"}, canonical(0, {2}), 8);
            SubgroupSpec hi = SubgroupSpec::generated_by(
                {"ik(E(cmp(sg'(7),cmp(eta(14),eta(15)))))", "ik(cmp(eta(8),cmp(eta(9),sg(10))))"},
                canonical(0, {2, 2}), 4);
            return GroupResult::bounds(subject, std::move(lo), std::move(hi), amb,
                                       cayley_detail::cite2("[o2]", tc));
        }
        case 18:
            return ex(SubgroupSpec::generated_by({"ik(cmp(nu(8),sg(11)))", "ik(b1(8))"},
                                                 canonical(0, {24}), 2),
                      "[o2]");
        case 19: return ex(SubgroupSpec::generated_by({}, canonical(0, {126}), 8), "[o2]");
        case 21: return ex(SubgroupSpec::whole(), "[o2]");
        default: return GroupResult::not_covered(subject, "-", amb);
    }
}

/// G_k(KP^2).
inline GroupResult g_kp2(const Catalog& cat, long long k) {
    std::string subject = "G_" + std::to_string(k) + "(" + kCayleyLabel + ")";
    auto amb = cayley_detail::ambient(cat, k);
    if (!amb) return GroupResult::not_covered(subject);
    std::string tc = cayley_detail::table_cite(cat, k);
    auto ex = [&](SubgroupSpec v, const char* c) {
        return GroupResult::exact(subject, std::move(v), *amb, cayley_detail::cite2(c, tc));
    };
    if (amb->is_zero()) return ex(SubgroupSpec::whole(), "[zero]");
    GroupResult P = p_kp2(cat, k);
    switch (k) {
        case 8: return ex(SubgroupSpec::zero(), "[o2]");
        case 9:
        case 10:
        case 14: return ex(SubgroupSpec::zero(), "[sub]+[o2]");
        case 11: return ex(SubgroupSpec::multiple(8), "[o2]");
        case 15: return GroupResult::lower(subject, SubgroupSpec::multiple(8), amb, "[o2]");
        case 16:
        case 17:
            return GroupResult::upper_only(subject, *P.upper, amb,
                                           cayley_detail::cite2("[sub]", P.citation));
        case 19:
            return GroupResult::upper_only(subject, *P.value, amb,
                                           cayley_detail::cite2("[sub]", P.citation));
        case 18:
            return GroupResult::bounds(subject, SubgroupSpec::multiple(8), *P.value, amb,
                                       cayley_detail::cite2("[o2]", P.citation));
        case 21: return GroupResult::lower(subject, SubgroupSpec::multiple(2), amb, "[o2]");
        default: return GroupResult::not_covered(subject, "-", amb);
    }
}

inline GroupResult cayley_not_covered(const Catalog& cat, const char* what, long long k) {
    std::string subject = std::string(what) + "_" + std::to_string(k) + "(" + kCayleyLabel + ")";
    return GroupResult::not_covered(subject, "-", cayley_detail::ambient(cat, k));
}

}  // namespace gottlieb

#endif
