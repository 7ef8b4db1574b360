#ifndef GOTTLIEB_PROJSPACE_HPP
#define GOTTLIEB_PROJSPACE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "fga.hpp"
#include "result.hpp"
#include "whitehead.hpp"

namespace gottlieb {

/// Projective spaces over R, C, H. The Cayley plane has its own module.
/// Degrees follow the splitting
///   pi_k(FP^n) = gam* pi_k(S^{d(n+1)-1})  +  i* E pi_{k-1}(S^{d-1})
/// so every ambient group carries a sphere part and a fiber part.
inline long long field_dim(char f) {
    switch (f) {
        case 'R': return 1;
        case 'C': return 2;
        case 'H': return 4;
    }
    throw std::invalid_argument("field must be R, C or H");
}

inline std::string space_label(char f, long long n) {
    return std::string(1, f) + "P^" + std::to_string(n);
}

inline long long top_sphere(char f, long long n) { return field_dim(f) * (n + 1) - 1; }

namespace proj_detail {

inline std::string wrap(const std::string& g, const std::string& push) {
    return push + "(" + g + ")";
}

inline FgAbGroup wrap_group(FgAbGroup g, const std::string& push) {
    for (auto& s : g.gens) s = wrap(s, push);
    return g;
}

inline SubgroupSpec wrap_spec(SubgroupSpec s, const std::string& push) {
    if (s.kind == SubgroupSpec::Kind::GeneratedBy)
        for (auto& g : s.generators) g = wrap(g, push);
    return s;
}

/// Push a fiber-level generating set through the inclusion after suspending.
inline SubgroupSpec fiber_push(SubgroupSpec s) {
    if (s.kind == SubgroupSpec::Kind::GeneratedBy)
        for (auto& g : s.generators) g = "ih(E(" + g + "))";
    return s;
}

inline std::string joincite(const std::string& a, const std::string& b) {
    return join_citations(a, b);
}

}  // namespace proj_detail

/// The two-part ambient of pi_k(FP^n), with generators already pushed into
/// the projective space. Parts can be independently unknown.
struct ProjAmbient {
    bool sphere_known = false;
    bool fiber_known = false;
    FgAbGroup sphere;   // gam* pi_k(S^{d(n+1)-1})
    FgAbGroup fiber;    // i* E pi_{k-1}(S^{d-1})
    std::string sphere_cite, fiber_cite;

    bool total_known() const { return sphere_known && fiber_known; }
    FgAbGroup total() const { return direct_sum(sphere, fiber); }
    std::optional<FgAbGroup> total_opt() const {
        if (!total_known()) return std::nullopt;
        return total();
    }
    Decomposition decomposition() const {
        Decomposition d;
        if (sphere_known) d.parts.push_back({"sphere", sphere});
        if (fiber_known) d.parts.push_back({"fiber", fiber});
        return d;
    }
    std::string cite() const { return proj_detail::joincite(sphere_cite, fiber_cite); }
};

inline ProjAmbient proj_ambient(const Catalog& cat, char f, long long n, long long k) {
    ProjAmbient a;
    long long N = top_sphere(f, n);
    if (f == 'R') {
        a.fiber_known = true;  // S^0 contributes nothing
        if (k == 1) {
            a.sphere_known = true;
            a.sphere = n == 1 ? FgAbGroup::free(1) : canonical(0, {2});
            a.sphere_cite = "[cov]";
            return a;
        }
        if (auto e = cat.pi_sphere(n, k)) {
            a.sphere_known = true;
            a.sphere = proj_detail::wrap_group(e->group, "gam");
            a.sphere_cite = e->citation;
        }
        return a;
    }
    if (f == 'C') {
        a.fiber_known = true;
        a.fiber = k == 2 ? FgAbGroup::free(1, {"ic(E(iota(1)))"}) : FgAbGroup::zero();
        a.fiber_cite = k == 2 ? "[BJS]" : "";
        if (k == 1) {
            a.sphere_known = true;
            return a;
        }
        if (auto e = cat.pi_sphere(N, k)) {
            a.sphere_known = true;
            a.sphere = proj_detail::wrap_group(e->group, "gam");
            a.sphere_cite = e->citation;
        }
        return a;
    }
    // H
    if (auto e = cat.pi_sphere(N, k)) {
        a.sphere_known = true;
        a.sphere = proj_detail::wrap_group(e->group, "gam");
        a.sphere_cite = e->citation;
    }
    if (k <= 1) {
        a.fiber_known = true;
    } else if (auto e = cat.pi_sphere(3, k - 1)) {
        a.fiber_known = true;
        for (const auto& g : e->group.gens) a.fiber.gens.push_back("ih(E(" + g + "))");
        a.fiber.free_rank = e->group.free_rank;
        a.fiber.torsion = e->group.torsion;
        a.fiber_cite = e->citation;
    }
    return a;
}

/// pi_k(FP^n), assembled from the splitting. Exact or not covered.
inline GroupResult pi_proj(const Catalog& cat, char f, long long n, long long k) {
    std::string subject = "pi_" + std::to_string(k) + "(" + space_label(f, n) + ")";
    ProjAmbient a = proj_ambient(cat, f, n, k);
    if (!a.total_known()) return GroupResult::not_covered(subject);
    std::string cite = f == 'R' ? proj_detail::joincite("[cov]", k == 1 ? "" : a.sphere_cite)
                                : proj_detail::joincite("[BJS]", a.cite());
    if (f == 'R' && k == 1) cite = "[cov]";
    return GroupResult::exact(subject, SubgroupSpec::whole(), a.total(), cite);
}

/// p-primary part of pi_k(FP^n); falls back to the single-prime rows where
/// only one primary component is catalogued.
inline GroupResult pi_proj_p(const Catalog& cat, char f, long long n, long long k, long long p) {
    std::string subject =
        "pi_" + std::to_string(k) + "(" + space_label(f, n) + ";" + std::to_string(p) + ")";
    long long N = top_sphere(f, n);
    std::optional<TableEntry> sph, fib;
    std::string cite;
    if (f == 'R') {
        if (k == 1) {
            FgAbGroup g = n == 1 ? FgAbGroup::free(1) : canonical(0, {2});
            return GroupResult::exact(subject, SubgroupSpec::whole(), p_component(g, p).part,
                                      "[cov]");
        }
        sph = cat.pi_sphere_p(n, k, p);
        if (!sph) return GroupResult::not_covered(subject);
        FgAbGroup g = proj_detail::wrap_group(sph->group, "gam");
        return GroupResult::exact(subject, SubgroupSpec::whole(), g,
                                  proj_detail::joincite("[cov]", sph->citation));
    }
    if (f == 'C') {
        if (k == 1 || k == 2)
            return GroupResult::exact(subject, SubgroupSpec::whole(), FgAbGroup::zero(), "[BJS]");
        sph = cat.pi_sphere_p(N, k, p);
        if (!sph) return GroupResult::not_covered(subject);
        return GroupResult::exact(subject, SubgroupSpec::whole(),
                                  proj_detail::wrap_group(sph->group, "gam"),
                                  proj_detail::joincite("[BJS]", sph->citation));
    }
    sph = cat.pi_sphere_p(N, k, p);
    if (k <= 1)
        fib = TableEntry{};
    else
        fib = cat.pi_sphere_p(3, k - 1, p);
    if (!sph || !fib) return GroupResult::not_covered(subject);
    FgAbGroup g = proj_detail::wrap_group(sph->group, "gam");
    FgAbGroup fpart;
    fpart.free_rank = fib->group.free_rank;
    fpart.torsion = fib->group.torsion;
    for (const auto& x : fib->group.gens) fpart.gens.push_back("ih(E(" + x + "))");
    return GroupResult::exact(subject, SubgroupSpec::whole(), direct_sum(g, fpart),
                              proj_detail::joincite("[BJS]", proj_detail::joincite(sph->citation,
                                                                                  fib->citation)));
}

// ---- the auxiliary subgroup tables -----------------------------------------

/// Q_k inside pi_k(S^3), 3 <= k <= 18. Everything below degree 3 is whole.
struct RulePiece {
    Status status = Status::NotCovered;
    SubgroupSpec value;
    std::optional<SubgroupSpec> upper;
    std::string cite;

    static RulePiece exact(SubgroupSpec v, std::string c) {
        return {Status::Exact, std::move(v), std::nullopt, std::move(c)};
    }
    static RulePiece bounds(SubgroupSpec lo, SubgroupSpec hi, std::string c) {
        return {Status::Bounds, std::move(lo), std::move(hi), std::move(c)};
    }
    static RulePiece none() { return {}; }
};

inline RulePiece q_subgroup(long long k) {
    auto ex = [](SubgroupSpec s) { return RulePiece::exact(std::move(s), "[Q]"); };
    if (k <= 2) return RulePiece::exact(SubgroupSpec::whole(), "[conn]");
    switch (k) {
        case 3: return ex(SubgroupSpec::multiple(12));
        case 4:
        case 5:
        case 11:
        case 12: return ex(SubgroupSpec::zero());
        case 6:
        case 10: return ex(SubgroupSpec::multiple(3));
        case 7:
        case 8:
        case 9:
        case 14:
        case 15:
        case 17: return ex(SubgroupSpec::whole());
        case 13:
            return ex(SubgroupSpec::generated_by({"eps'(3)", "cmp(a(1,3,3),a(2,3,6))"},
                                                 canonical(0, {12}), 2));
        case 16:
            return ex(SubgroupSpec::generated_by({"cmp(nu'(3),cmp(eta(6),mu(7)))"},
                                                 canonical(0, {2}), 3));
        case 18: return ex(SubgroupSpec::multiple(6));
        default: return RulePiece::none();
    }
}

/// L_k inside pi_{k-1}(S^3), the fiber input of the quaternionic tower:
/// the intersection of Q_{k-1} with the range condition piece.
inline RulePiece l_subgroup(long long n, long long k) {
    RulePiece lp = q_subgroup(k - 1);
    if (lp.status != Status::Exact) return RulePiece::none();
    SubgroupSpec lpp;
    std::string cite2;
    if (k <= 3) {
        lpp = SubgroupSpec::whole();
        cite2 = "[conn]";
    } else if (k == 4) {
        lpp = SubgroupSpec::multiple(24 / gcd24(24, n + 1));
        cite2 = "[e2]";
    } else if ((n >= 2 && k >= 5 && k <= 22) || (k >= 5 && k <= 4 * n + 2)) {
        lpp = SubgroupSpec::whole();
        cite2 = "[LQ]";
    } else {
        return RulePiece::none();
    }
    auto meet = intersect(lp.value, lpp);
    if (!meet) return RulePiece::none();
    return RulePiece::exact(*meet, proj_detail::joincite(lp.cite, cite2));
}

/// M_k: the part of pi_k of the top sphere that survives into the projective
/// space calculus. Exposed for cross-checks; the P tables do not recompute it.
inline GroupResult m_subgroup(const Catalog& cat, char f, long long n, long long k) {
    std::string subject = "M_" + std::to_string(k) + "(" + space_label(f, n) + ")";
    long long N = top_sphere(f, n);
    auto row = cat.pi_sphere(N, k);
    std::optional<FgAbGroup> amb;
    std::string tcite;
    if (row) {
        amb = row->group;
        tcite = row->citation;
    }
    auto ex = [&](SubgroupSpec s, const std::string& c) {
        return GroupResult::exact(subject, std::move(s), amb, proj_detail::joincite(c, tcite));
    };
    if (f == 'R') {
        if (n % 2 == 1) return ex(SubgroupSpec::whole(), "[PM]");
        if (n == 2) return k == 2 ? ex(SubgroupSpec::zero(), "[PM]") : ex(SubgroupSpec::whole(), "[PM]");
        return GroupResult::not_covered(subject, "-", amb);
    }
    if (f == 'C') {
        if (n % 2 == 1) return ex(SubgroupSpec::whole(), "[PM]");
        if (n == 2 && k == 7) return ex(SubgroupSpec::zero(), "[ex1]");
        if (n == 4 && k == 12) return ex(SubgroupSpec::whole(), "[ex1]");
        if (n == 2 && k >= 8 && k <= 12) return ex(SubgroupSpec::whole(), "[ex1]");
        return GroupResult::not_covered(subject, "-", amb);
    }
    // H
    if ((n + 1) % 24 == 0) return ex(SubgroupSpec::whole(), "[PM]");
    if (k == N) return ex(SubgroupSpec::multiple(24 / gcd24(24, n + 1)), "[e2]");
    if (k == N + 3)
        return n % 2 == 1 ? ex(SubgroupSpec::whole(), "[ex1]")
                          : ex(SubgroupSpec::multiple(2), "[ex1]");
    if (n % 2 == 0 && k > N) {
        long long m = n / 2;
        switch (k - N) {
            case 1:
            case 2:
            case 4:
            case 5:
            case 8:
            case 9: return ex(SubgroupSpec::whole(), "[PM]");
            case 6: return ex(SubgroupSpec::multiple(2), "[PM]");
            case 7:
            case 10:
                if (m % 3 == 1) return ex(SubgroupSpec::whole(), "[PM]");
                {
                    GroupResult r = GroupResult::bounds(subject, SubgroupSpec::multiple(3),
                                                        SubgroupSpec::whole(), amb,
                                                        proj_detail::joincite("[PM]", tcite));
                    return r;
                }
            default: break;
        }
    }
    return GroupResult::not_covered(subject, "-", amb);
}

// ---- P groups ---------------------------------------------------------------

namespace proj_detail {

/// Rebuild a sphere-level result as a projective-space result: same statuses
/// and specs, generators pushed through gam, ambient replaced.
inline GroupResult retarget(const GroupResult& src, std::string subject,
                            std::optional<FgAbGroup> amb, const std::string& rule_cite) {
    GroupResult out;
    out.status = src.status;
    out.subject = std::move(subject);
    out.ambient = std::move(amb);
    out.citation = joincite(rule_cite, src.citation);
    if (src.value) out.set_value(wrap_spec(*src.value, "gam"));
    if (src.upper) out.set_upper(wrap_spec(*src.upper, "gam"));
    return out;
}

inline bool rp_main0_exception(long long n, long long stem) {
    return n == 4 && (stem == 4 || stem == 5 || stem == 6);
}

}  // namespace proj_detail

/// P_k(RP^n).
inline GroupResult p_rp(const Catalog& cat, long long n, long long k) {
    using proj_detail::retarget;
    std::string subject = "P_" + std::to_string(k) + "(" + space_label('R', n) + ")";
    ProjAmbient a = proj_ambient(cat, 'R', n, k);
    std::optional<FgAbGroup> amb = a.total_opt();
    if (k == 1) {
        FgAbGroup g = *amb;
        if (n % 2 == 1)
            return GroupResult::exact(subject, SubgroupSpec::whole(), g, "[pi1]");
        return GroupResult::exact(subject, SubgroupSpec::zero(), g, "[pi1]");
    }
    if (n == 1) {
        if (!amb) return GroupResult::not_covered(subject);
        return GroupResult::exact(subject, SubgroupSpec::whole(), *amb, "[W1]");
    }
    if (!amb) return GroupResult::not_covered(subject);
    if (amb->is_zero()) return GroupResult::exact(subject, SubgroupSpec::whole(), *amb, "[zero]");
    if (n % 2 == 1)
        return retarget(sphere_P(cat, n, k), subject, amb, "[rc1]");
    if (n == 2)
        return retarget(sphere_P(cat, n, k), subject, amb, "[rc1]");
    long long stem = k - n;
    if (proj_detail::rp_main0_exception(n, stem)) {
        // the three cells where the covering loses part of the sphere value
        if (k == 8 || k == 9)
            return GroupResult::exact(
                subject, SubgroupSpec::generated_by({}, canonical(0, {2}), 2), amb, "[main0]");
        return GroupResult::exact(
            subject, SubgroupSpec::generated_by({}, canonical(0, {24}), 3), amb, "[main0]");
    }
    if (stem <= 7) return retarget(sphere_P(cat, n, k), subject, amb, "[main0]");
    if (stem >= 8 && stem <= n - 2) return retarget(sphere_P(cat, n, k), subject, amb, "[rc1]");
    return GroupResult::not_covered(subject, "-", amb);
}

/// P_k(CP^n), the piecewise table over the offset from the top sphere.
inline GroupResult p_cp(const Catalog& cat, long long n, long long k) {
    using proj_detail::retarget;
    std::string subject = "P_" + std::to_string(k) + "(" + space_label('C', n) + ")";
    if (n == 1) {
        GroupResult r = sphere_P(cat, 2, k);
        r.subject = subject;
        return r;
    }
    ProjAmbient a = proj_ambient(cat, 'C', n, k);
    std::optional<FgAbGroup> amb = a.total_opt();
    if (k == 1) return GroupResult::exact(subject, SubgroupSpec::whole(), FgAbGroup::zero(), "[conn]");
    if (k == 2) {
        SubgroupSpec v = n % 2 == 0 ? SubgroupSpec::multiple(2) : SubgroupSpec::whole();
        return GroupResult::exact(subject, std::move(v), *amb, "[ex2]");
    }
    if (!amb) return GroupResult::not_covered(subject);
    if (amb->is_zero()) return GroupResult::exact(subject, SubgroupSpec::whole(), *amb, "[zero]");
    long long N = 2 * n + 1, koff = k - N;
    auto ex = [&](SubgroupSpec v) {
        return GroupResult::exact(subject, std::move(v), *amb,
                                  proj_detail::joincite("[ex2]", a.sphere_cite));
    };
    switch (koff) {
        case 0: return ex(n == 3 ? SubgroupSpec::whole() : SubgroupSpec::multiple(2));
        case 1:
        case 2: return ex(n % 2 == 0 ? SubgroupSpec::zero() : SubgroupSpec::whole());
        case 3:
            if (n % 4 == 3 || is_pow2_minus(n, 2, 2)) return ex(SubgroupSpec::whole());
            return ex(SubgroupSpec::multiple(2));
        case 4:
        case 5: return ex(SubgroupSpec::whole());  // nonzero ambient only at n = 2
        case 6:
            if (n % 4 == 2 || n % 4 == 3 || is_pow2_minus(n, 3, 3)) return ex(SubgroupSpec::whole());
            return ex(SubgroupSpec::zero());
        case 7:
            if (n == 2 || n == 3 || n == 5 || n % 8 == 7) return ex(SubgroupSpec::whole());
            return ex(SubgroupSpec::multiple(2));
        default:
            if (koff >= 8 && n % 2 == 1)
                return retarget(sphere_P(cat, N, k), subject, amb, "[rc1]");
            return GroupResult::not_covered(subject, "-", amb);
    }
}

namespace proj_detail {

/// The sphere-part subgroup of P for the quaternionic tower, by offset.
/// Returns an empty optional outside the covered band.
inline std::optional<std::pair<SubgroupSpec, std::string>> hp_sphere_part(const Catalog& cat,
                                                                          long long n,
                                                                          long long koff) {
    long long N = 4 * n + 3;
    switch (koff) {
        case 0:
            return std::make_pair(
                SubgroupSpec::multiple(lcm_pair(24 / gcd24(24, n + 1), 2)), std::string("[PHP1]"));
        case 1:
        case 2:
        case 4:
        case 5:
        case 8:
        case 9:
        case 10: return std::make_pair(SubgroupSpec::whole(), std::string("[PHP1]"));
        case 3:
            return std::make_pair(
                n % 2 == 0 ? SubgroupSpec::multiple(2) : SubgroupSpec::whole(), std::string("[PHP1]"));
        case 6:
            return std::make_pair(n % 2 == 0 ? SubgroupSpec::zero() : SubgroupSpec::whole(),
                                  std::string("[PHP1]"));
        case 7:
            return std::make_pair(
                (n % 4 == 3 || n == 2) ? SubgroupSpec::whole() : SubgroupSpec::multiple(2),
                std::string("[PHP1]"));
        case 11: {
            GroupResult sp = sphere_P(cat, N, N + 11);
            if (sp.status == Status::Exact && sp.value)
                return std::make_pair(*sp.value, std::string("[rem]"));
            return std::nullopt;
        }
        default: return std::nullopt;
    }
}

}  // namespace proj_detail

/// P_k(HP^n): fiber band through the S^3 calculus, sphere band through the
/// offset table, glued along the splitting.
inline GroupResult p_hp(const Catalog& cat, long long n, long long k) {
    std::string subject = "P_" + std::to_string(k) + "(" + space_label('H', n) + ")";
    if (n == 1) {
        GroupResult r = sphere_P(cat, 4, k);
        r.subject = subject;
        return r;
    }
    ProjAmbient a = proj_ambient(cat, 'H', n, k);
    std::optional<FgAbGroup> amb = a.total_opt();
    if (amb && amb->is_zero())
        return GroupResult::exact(subject, SubgroupSpec::whole(), *amb, "[zero]");
    long long N = 4 * n + 3;
    if (k < N) {
        // pure fiber band: P_k = i* E L_k
        if (!a.fiber_known) return GroupResult::not_covered(subject);
        RulePiece L = l_subgroup(n, k);
        if (L.status != Status::Exact) return GroupResult::not_covered(subject, "-", amb);
        SubgroupSpec v = proj_detail::fiber_push(L.value);
        std::string cite = proj_detail::joincite(k == 4 ? "[hp4]" : "[rc12]", L.cite);
        return GroupResult::exact(subject, std::move(v), *amb,
                                  proj_detail::joincite(cite, a.fiber_cite));
    }
    // sphere band
    if (!a.sphere_known) return GroupResult::not_covered(subject);
    long long koff = k - N;
    auto part = proj_detail::hp_sphere_part(cat, n, koff);
    if (!part) return GroupResult::not_covered(subject, "-", amb);
    RulePiece L = l_subgroup(n, k);
    Decomposition dec = a.decomposition();
    std::string base_cite = proj_detail::joincite(part->second, a.cite());
    if (a.fiber_known && L.status == Status::Exact) {
        SubgroupSpec v = SubgroupSpec::direct_sum(
            {{"sphere", part->first}, {"fiber", proj_detail::fiber_push(L.value)}});
        return GroupResult::exact(subject, std::move(v), amb,
                                  proj_detail::joincite(base_cite, L.cite), &dec);
    }
    if (a.fiber_known) {
        // fiber group known, its P part not: bracket it
        SubgroupSpec lo = SubgroupSpec::direct_sum(
            {{"sphere", part->first}, {"fiber", SubgroupSpec::zero()}});
        SubgroupSpec hi = SubgroupSpec::direct_sum(
            {{"sphere", part->first}, {"fiber", SubgroupSpec::whole()}});
        return GroupResult::bounds(subject, std::move(lo), std::move(hi), amb, base_cite, &dec);
    }
    // fiber group unknown: the sphere part alone is a certified lower bound
    SubgroupSpec lo =
        SubgroupSpec::direct_sum({{"sphere", part->first}, {"fiber", SubgroupSpec::zero()}});
    return GroupResult::lower(subject, std::move(lo), std::nullopt, base_cite, &dec);
}

inline GroupResult p_proj(const Catalog& cat, char f, long long n, long long k) {
    switch (f) {
        case 'R': return p_rp(cat, n, k);
        case 'C': return p_cp(cat, n, k);
        case 'H': return p_hp(cat, n, k);
    }
    throw std::invalid_argument("field must be R, C or H");
}

// ---- the split parts of P ---------------------------------------------------

/// P'_k(FP^n): the sphere-part summand of P.
inline GroupResult p_prime(const Catalog& cat, char f, long long n, long long k) {
    std::string subject = "P'_" + std::to_string(k) + "(" + space_label(f, n) + ")";
    if (f == 'R') {
        GroupResult r = p_rp(cat, n, k);
        r.subject = subject;
        r.citation = proj_detail::joincite("[newP]", r.citation);
        return r;
    }
    if (f == 'C') {
        if (k == 2) {
            ProjAmbient a = proj_ambient(cat, 'C', n, k);
            return GroupResult::exact(subject, SubgroupSpec::zero(), a.total(), "[newP]");
        }
        GroupResult r = p_cp(cat, n, k);
        r.subject = subject;
        r.citation = proj_detail::joincite("[newP]", r.citation);
        return r;
    }
    // H
    if (n == 1) {
        // the sphere has no preferred splitting of P into the two parts
        GroupResult r = sphere_P(cat, 4, k);
        return GroupResult::not_covered(subject, "-", r.ambient);
    }
    ProjAmbient a = proj_ambient(cat, 'H', n, k);
    long long N = 4 * n + 3;
    if (k < N) {
        std::optional<FgAbGroup> amb = a.total_opt();
        if (!amb) return GroupResult::not_covered(subject);
        return GroupResult::exact(subject, SubgroupSpec::zero(), *amb, "[newP]");
    }
    if (!a.sphere_known) return GroupResult::not_covered(subject);
    auto part = proj_detail::hp_sphere_part(cat, n, k - N);
    if (!part) return GroupResult::not_covered(subject, "-", a.total_opt());
    Decomposition dec = a.decomposition();
    SubgroupSpec v =
        SubgroupSpec::direct_sum({{"sphere", part->first}, {"fiber", SubgroupSpec::zero()}});
    return GroupResult::exact(subject, std::move(v), a.total_opt(),
                              proj_detail::joincite("[newP]", proj_detail::joincite(part->second,
                                                                                   a.sphere_cite)),
                              &dec);
}

/// P''_k(FP^n): the fiber-part summand of P.
inline GroupResult p_dprime(const Catalog& cat, char f, long long n, long long k) {
    std::string subject = "P''_" + std::to_string(k) + "(" + space_label(f, n) + ")";
    if (f == 'R') {
        ProjAmbient a = proj_ambient(cat, 'R', n, k);
        std::optional<FgAbGroup> amb = a.total_opt();
        return GroupResult::exact(subject, SubgroupSpec::zero(), amb ? *amb : FgAbGroup::zero(),
                                  "[newP]");
    }
    if (f == 'C') {
        GroupResult base = p_cp(cat, n, k);
        if (k == 2) {
            base.subject = subject;
            base.citation = proj_detail::joincite("[newP]", base.citation);
            return base;
        }
        ProjAmbient a = proj_ambient(cat, 'C', n, k);
        std::optional<FgAbGroup> amb = a.total_opt();
        return GroupResult::exact(subject, SubgroupSpec::zero(), amb ? *amb : FgAbGroup::zero(),
                                  "[newP]");
    }
    // H
    if (n == 1) {
        GroupResult r = sphere_P(cat, 4, k);
        return GroupResult::not_covered(subject, "-", r.ambient);
    }
    ProjAmbient a = proj_ambient(cat, 'H', n, k);
    if (!a.fiber_known) return GroupResult::not_covered(subject);
    RulePiece L = l_subgroup(n, k);
    if (L.status != Status::Exact) return GroupResult::not_covered(subject, "-", a.total_opt());
    Decomposition dec = a.decomposition();
    SubgroupSpec v = SubgroupSpec::direct_sum(
        {{"sphere", SubgroupSpec::zero()}, {"fiber", proj_detail::fiber_push(L.value)}});
    return GroupResult::exact(subject, std::move(v), a.total_opt(),
                              proj_detail::joincite("[newP]", L.cite), &dec);
}

}  // namespace gottlieb

#endif
