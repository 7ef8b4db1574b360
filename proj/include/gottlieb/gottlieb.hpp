#ifndef GOTTLIEB_GOTTLIEB_HPP
#define GOTTLIEB_GOTTLIEB_HPP

#include <optional>
#include <string>
#include <utility>

#include "projspace.hpp"

namespace gottlieb {

namespace g_detail {

using proj_detail::joincite;

/// Derive what can be derived about G from P alone, through G <= P.
inline GroupResult g_from_p(const GroupResult& P, std::string subject, const char* rel = "[sub]") {
    std::optional<FgAbGroup> amb = P.ambient;
    if (P.status == Status::Exact && P.value) {
        bool zero = P.value->is_zero() || (P.value_iso && P.value_iso->is_zero());
        if (zero)
            return GroupResult::exact(std::move(subject), SubgroupSpec::zero(), amb,
                                      joincite(rel, P.citation));
        SubgroupSpec nv = amb ? normalize(*P.value, *amb) : *P.value;
        if (!nv.is_whole())
            return GroupResult::upper_only(std::move(subject), *P.value, amb,
                                           joincite(rel, P.citation));
        return GroupResult::not_covered(std::move(subject), "-", amb);
    }
    if ((P.status == Status::Bounds || P.status == Status::UpperBound) && P.upper) {
        SubgroupSpec nu = amb ? normalize(*P.upper, *amb) : *P.upper;
        if (!nu.is_whole())
            return GroupResult::upper_only(std::move(subject), *P.upper, amb,
                                           joincite(rel, P.citation));
    }
    return GroupResult::not_covered(std::move(subject), "-", amb);
}

/// Upper half of a P result, if it says anything.
inline std::optional<SubgroupSpec> upper_of(const GroupResult& P) {
    if (P.status == Status::Exact) return P.value;
    if (P.status == Status::Bounds || P.status == Status::UpperBound) return P.upper;
    return std::nullopt;
}

inline bool informative(const std::optional<SubgroupSpec>& s,
                        const std::optional<FgAbGroup>& amb) {
    if (!s) return false;
    SubgroupSpec n = amb ? normalize(*s, *amb) : *s;
    return !n.is_whole();
}

}  // namespace g_detail

/// G_k(RP^n).
inline GroupResult g_rp(const Catalog& cat, long long n, long long k) {
    using namespace g_detail;
    std::string subject = "G_" + std::to_string(k) + "(" + space_label('R', n) + ")";
    ProjAmbient a = proj_ambient(cat, 'R', n, k);
    std::optional<FgAbGroup> amb = a.total_opt();
    if (n == 1) {
        if (!amb) return GroupResult::not_covered(subject);
        return GroupResult::exact(subject, SubgroupSpec::whole(), *amb, "[GO]");
    }
    if (k == 1) {
        SubgroupSpec v = n % 2 == 1 ? SubgroupSpec::whole() : SubgroupSpec::zero();
        return GroupResult::exact(subject, std::move(v), *amb, "[GO]");
    }
    if (!amb) return GroupResult::not_covered(subject);
    if (amb->is_zero()) return GroupResult::exact(subject, SubgroupSpec::whole(), *amb, "[zero]");
    if (n == 2) {
        if (k == 2) return GroupResult::exact(subject, SubgroupSpec::zero(), *amb, "[PW]");
        return GroupResult::exact(subject, SubgroupSpec::whole(), *amb, "[GO]");
    }
    if (k == n) {
        if (n % 2 == 0) return GroupResult::exact(subject, SubgroupSpec::zero(), *amb, "[PW]");
        if (n == 3 || n == 7)
            return GroupResult::exact(subject, SubgroupSpec::whole(), *amb, "[PW]");
        return GroupResult::exact(subject, SubgroupSpec::multiple(2), *amb, "[PW]");
    }
    long long koff = k - n;
    // cells excluded from the equality theorem, with their salvaged bounds
    if (koff == 3 && n == 4) {
        SubgroupSpec hi = proj_detail::wrap_spec(g_spec_s4_7(), "gam");
        return GroupResult::bounds(subject, SubgroupSpec::multiple(12), std::move(hi), amb,
                                   "[main]+[GM]");
    }
    if ((koff == 4 || koff == 5) && n == 4) {
        GroupResult P = p_rp(cat, n, k);
        return g_from_p(P, subject, "[main]");
    }
    if (koff == 6 && n == 4) {
        GroupResult P = p_rp(cat, n, k);
        auto up = upper_of(P);
        return GroupResult::bounds(subject, SubgroupSpec::multiple(3), *up, amb,
                                   joincite("[main]", P.citation));
    }
    if (koff == 5 && n == 6) {
        GroupResult P = p_rp(cat, n, k);
        auto up = upper_of(P);
        return GroupResult::bounds(subject, SubgroupSpec::multiple(30), *up, amb,
                                   joincite("[main]", P.citation));
    }
    if (koff == 7 && n == 8) {
        GroupResult P = p_rp(cat, n, k);
        auto up = upper_of(P);
        return GroupResult::bounds(subject, SubgroupSpec::multiple(2520), *up, amb,
                                   joincite("[main]", P.citation));
    }
    if (koff == 7 && n == 11)
        return GroupResult::lower(subject, SubgroupSpec::multiple(2), amb, "[main]");
    if (koff == 3 && is_pow2_minus(n, 3, 4))
        return GroupResult::lower(subject, SubgroupSpec::multiple(2), amb, "[main]");
    if (koff == 6 && is_pow2_minus(n, 5, 5))
        return GroupResult::not_covered(subject, "-", amb);
    if (koff >= 1 && koff <= 7) {
        GroupResult sp = sphere_P(cat, n, k);
        if (sp.status != Status::Exact) return GroupResult::not_covered(subject, "-", amb);
        return proj_detail::retarget(sp, subject, amb, "[main]");
    }
    if (koff >= 8 && koff <= 10) {
        if (n % 4 == 3) return GroupResult::exact(subject, SubgroupSpec::whole(), *amb, "[8910]");
        if (n % 8 == 0 && n >= 16)
            return GroupResult::exact(subject, SubgroupSpec::zero(), *amb, "[8910]");
    }
    return g_from_p(p_rp(cat, n, k), subject);
}

/// G_k(CP^n).
inline GroupResult g_cp(const Catalog& cat, long long n, long long k) {
    using namespace g_detail;
    std::string subject = "G_" + std::to_string(k) + "(" + space_label('C', n) + ")";
    if (n == 1) {
        GroupResult r = sphere_G_s2(cat, k);
        r.subject = subject;
        return r;
    }
    ProjAmbient a = proj_ambient(cat, 'C', n, k);
    std::optional<FgAbGroup> amb = a.total_opt();
    if (k == 1)
        return GroupResult::exact(subject, SubgroupSpec::whole(), FgAbGroup::zero(), "[conn]");
    if (k == 2) return GroupResult::exact(subject, SubgroupSpec::zero(), *amb, "[GCP]");
    long long N = 2 * n + 1, koff = k - N;
    if (koff == 21 || koff == 22) {
        if (n % 4 == 3) return GroupResult::exact(subject, SubgroupSpec::whole(), amb, "[GCP1]");
    }
    if (!amb) return GroupResult::not_covered(subject);
    if (amb->is_zero()) return GroupResult::exact(subject, SubgroupSpec::whole(), *amb, "[zero]");
    std::string tc = a.sphere_cite;
    switch (koff) {
        case 0: {
            if (n == 2)
                return GroupResult::exact(subject, SubgroupSpec::multiple(2), *amb,
                                          joincite("[GCP]", tc));
            GroupResult P = p_cp(cat, n, k);
            auto up = upper_of(P);
            auto fact = factorial_checked(n);
            if (!fact) return g_from_p(P, subject, "[c4]");
            SubgroupSpec lo = SubgroupSpec::multiple(*fact);
            if (informative(up, amb))
                return GroupResult::bounds(subject, std::move(lo), *up, amb,
                                           joincite("[c4]", P.citation));
            return GroupResult::lower(subject, std::move(lo), amb, joincite("[c4]", tc));
        }
        case 1:
        case 2: {
            SubgroupSpec v = n % 2 == 0 ? SubgroupSpec::zero() : SubgroupSpec::whole();
            return GroupResult::exact(subject, std::move(v), *amb, joincite("[GCP]", tc));
        }
        case 3: {
            long long m = n % 2 == 0 ? gcd24(24, n) : gcd24(24, n + 3) / 2;
            SubgroupSpec lo = SubgroupSpec::multiple(m);
            GroupResult P = p_cp(cat, n, k);
            auto up = upper_of(P);
            if (!up) return GroupResult::lower(subject, std::move(lo), amb, joincite("[GCP]", tc));
            std::optional<Order> li = index_in(normalize(lo, *amb), *amb);
            std::optional<Order> ui = index_in(normalize(*up, *amb), *amb);
            if (li && ui && *li == *ui)
                return GroupResult::exact(subject, std::move(lo), *amb,
                                          joincite("[GCP]", P.citation));
            return GroupResult::bounds(subject, std::move(lo), *up, amb,
                                       joincite("[GCP]", P.citation));
        }
        case 5:
            return GroupResult::exact(subject, SubgroupSpec::whole(), *amb, joincite("[GCP]", tc));
        case 6:
            if (n % 4 == 2 || n % 4 == 3)
                return GroupResult::exact(subject, SubgroupSpec::whole(), *amb,
                                          joincite("[GCP]", tc));
            return g_from_p(p_cp(cat, n, k), subject);
        case 7:
            if (n == 2)
                return GroupResult::exact(subject, SubgroupSpec::whole(), *amb,
                                          joincite("[GCP1]", tc));
            return g_from_p(p_cp(cat, n, k), subject);
        case 8:
            if (n % 4 == 1 && n >= 9)
                return GroupResult::exact(subject, SubgroupSpec::whole(), *amb,
                                          joincite("[GCP1]", tc));
            return g_from_p(p_cp(cat, n, k), subject);
        default: return g_from_p(p_cp(cat, n, k), subject);
    }
}

/// G_k(HP^n).
inline GroupResult g_hp(const Catalog& cat, long long n, long long k) {
    using namespace g_detail;
    std::string subject = "G_" + std::to_string(k) + "(" + space_label('H', n) + ")";
    if (n == 1) {
        GroupResult r = sphere_G_s4(cat, k);
        r.subject = subject;
        return r;
    }
    ProjAmbient a = proj_ambient(cat, 'H', n, k);
    std::optional<FgAbGroup> amb = a.total_opt();
    long long N = 4 * n + 3;
    // the printed lower bounds on small quaternionic spaces, fiber part dead
    if (n == 2 && k == 19) {
        SubgroupSpec lo = SubgroupSpec::generated_by({"gam(cmp(eta(11),sg(12)))"},
                                                     canonical(0, {2}), std::nullopt);
        GroupResult P = p_hp(cat, n, k);
        auto up = upper_of(P);
        if (informative(up, amb))
            return GroupResult::bounds(subject, std::move(lo), *up, amb,
                                       joincite("[exa]", P.citation));
        return GroupResult::lower(subject, std::move(lo), amb, "[exa]");
    }
    if (n == 2 && k == 20) {
        SubgroupSpec lo = SubgroupSpec::generated_by({"gam(cmp(eta(11),cmp(eta(12),sg(13))))"},
                                                     canonical(0, {2}), std::nullopt);
        return GroupResult::lower(subject, std::move(lo), amb, "[exa]");
    }
    if (n == 2 && k == 22) {
        SubgroupSpec lo = SubgroupSpec::generated_by({"scl(8,gam(ze(11)))"}, canonical(0, {63}),
                                                     std::nullopt);
        return GroupResult::lower(subject, std::move(lo), std::nullopt, "[CHP2]");
    }
    if ((n == 2 && (k == 18 || k == 21)) || (n == 3 && k == 22)) {
        long long m = k == 18 ? 40 : (k == 21 ? 2 : 4);
        Decomposition dec = a.decomposition();
        SubgroupSpec lo = SubgroupSpec::direct_sum(
            {{"sphere", SubgroupSpec::multiple(m)}, {"fiber", SubgroupSpec::zero()}});
        GroupResult P = p_hp(cat, n, k);
        auto up = upper_of(P);
        if (informative(up, amb))
            return GroupResult::bounds(subject, std::move(lo), *up, amb,
                                       joincite("[CHP2]", P.citation), &dec);
        return GroupResult::lower(subject, std::move(lo), amb, joincite("[CHP2]", a.cite()), &dec);
    }
    if (k >= 4 && k <= 6) {
        if (!amb) return GroupResult::not_covered(subject);
        return GroupResult::exact(subject, SubgroupSpec::zero(), *amb, "[hthm]");
    }
    if (!amb && k < N) return GroupResult::not_covered(subject);
    if (amb && amb->is_zero())
        return GroupResult::exact(subject, SubgroupSpec::whole(), *amb, "[zero]");
    if ((k == 12 || k == 13) && n >= 3)
        return GroupResult::exact(subject, SubgroupSpec::zero(), *amb, "[hthm]");
    long long koff = k - N;
    if (koff == 0) {
        GroupResult P = p_hp(cat, n, k);
        auto up = upper_of(P);
        auto fact = factorial_checked(2 * n + 1);
        std::optional<long long> m;
        if (fact) {
            if (n % 2 == 0) m = *fact;
            else if (*fact <= (1LL << 61)) m = 2 * *fact;
        }
        if (!m) return g_from_p(P, subject, "[hthm]");
        Decomposition dec = a.decomposition();
        SubgroupSpec lo = SubgroupSpec::direct_sum(
            {{"sphere", SubgroupSpec::multiple(*m)}, {"fiber", SubgroupSpec::zero()}});
        if (informative(up, amb))
            return GroupResult::bounds(subject, std::move(lo), *up, amb,
                                       joincite("[hthm]", P.citation), &dec);
        return GroupResult::lower(subject, std::move(lo), amb, joincite("[hthm]", a.cite()), &dec);
    }
    if (koff == 3) {
        GroupResult P = p_hp(cat, n, k);
        auto up = upper_of(P);
        Decomposition dec = a.decomposition();
        SubgroupSpec lo = SubgroupSpec::direct_sum(
            {{"sphere", SubgroupSpec::multiple(gcd24(24, n + 2))}, {"fiber", SubgroupSpec::zero()}});
        if (informative(up, amb))
            return GroupResult::bounds(subject, std::move(lo), *up, amb,
                                       joincite("[hthm]", P.citation), &dec);
        return GroupResult::lower(subject, std::move(lo), amb, joincite("[hthm]", a.cite()), &dec);
    }
    return g_from_p(p_hp(cat, n, k), subject);
}

inline GroupResult g_proj(const Catalog& cat, char f, long long n, long long k) {
    switch (f) {
        case 'R': return g_rp(cat, n, k);
        case 'C': return g_cp(cat, n, k);
        case 'H': return g_hp(cat, n, k);
    }
    throw std::invalid_argument("field must be R, C or H");
}

/// G'_k(FP^n). Over R and C the fiber contributes nothing, so G' = G.
/// Over H the chain G <= G' <= P' anchors the derived arms.
inline GroupResult g_prime(const Catalog& cat, char f, long long n, long long k) {
    using namespace g_detail;
    std::string subject = "G'_" + std::to_string(k) + "(" + space_label(f, n) + ")";
    if (f == 'R' || f == 'C') {
        GroupResult r = g_proj(cat, f, n, k);
        r.subject = subject;
        if (r.status != Status::NotCovered) r.citation = joincite("[newP]", r.citation);
        return r;
    }
    if (n == 1) {
        GroupResult r = sphere_G_s4(cat, k);
        return GroupResult::not_covered(subject, "-", r.ambient);
    }
    ProjAmbient a = proj_ambient(cat, 'H', n, k);
    std::optional<FgAbGroup> amb = a.total_opt();
    if (amb && amb->is_zero())
        return GroupResult::exact(subject, SubgroupSpec::whole(), *amb, "[zero]");
    long long N = 4 * n + 3, koff = k - N;
    if (koff == 21 || (koff == 22 && n >= 1))
        return GroupResult::exact(subject, SubgroupSpec::whole(), amb, "[HGP2]");
    if (koff == 6 && n % 2 == 0) {
        if (!amb) return GroupResult::not_covered(subject);
        return GroupResult::exact(subject, SubgroupSpec::zero(), *amb, "[GHP1]");
    }
    if (koff == 6 && n % 2 == 1) {
        if (!amb) return GroupResult::not_covered(subject);
        return GroupResult::exact(subject, SubgroupSpec::whole(), *amb, "[GHP1]");
    }
    if (koff == 3 && n % 2 == 1 && (2 * n + 1) % 3 != 0) {
        if (!amb) return GroupResult::not_covered(subject);
        return GroupResult::exact(subject, SubgroupSpec::whole(), *amb, "[GHP1]");
    }
    if (koff == 11) {
        bool in12 = (n % 12 == 5 || n % 12 == 9) && n >= 5;
        bool in24 = n % 24 == 15 || n % 24 == 23;
        if (in12 || in24) {
            if (!amb) return GroupResult::not_covered(subject);
            return GroupResult::exact(subject, SubgroupSpec::whole(), *amb, "[GHP1]");
        }
    }
    GroupResult pp = p_prime(cat, 'H', n, k);
    if (pp.status == Status::Exact && pp.value_iso && pp.value_iso->is_zero())
        return GroupResult::exact(subject, SubgroupSpec::zero(), pp.ambient,
                                  joincite("[sub]", pp.citation));
    GroupResult g = g_hp(cat, n, k);
    if (g.status == Status::Exact && g.value && amb && normalize(*g.value, *amb).is_whole())
        return GroupResult::exact(subject, SubgroupSpec::whole(), *amb,
                                  joincite("[sub]", g.citation));
    return GroupResult::not_covered(subject, "-", amb);
}

/// Does G_k = P_k here? Unknown cells answer nothing.
inline std::optional<bool> g_equals_p(const Catalog& cat, char f, long long n, long long k) {
    if (f == 'R' && (k == 1 || k == n)) return true;
    if (f == 'C' && n == 2 && k == 5) return true;
    GroupResult P = p_proj(cat, f, n, k);
    GroupResult G = g_proj(cat, f, n, k);
    if (P.status == Status::Exact && P.value_iso && P.value_iso->is_zero()) return true;
    if (P.status == Status::Exact && G.status == Status::Exact && P.ambient && G.ambient) {
        std::optional<Order> pi = P.value_index(), gi = G.value_index();
        if (pi && gi && *pi == *gi) return true;
    }
    return std::nullopt;
}

}  // namespace gottlieb

#endif
