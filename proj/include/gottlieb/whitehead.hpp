#ifndef GOTTLIEB_WHITEHEAD_HPP
#define GOTTLIEB_WHITEHEAD_HPP

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "fga.hpp"
#include "piecewise.hpp"
#include "result.hpp"

namespace gottlieb {

/// Elements whose Whitehead products with the identity class, and whose
/// boundary images, the rule tables cover. The first six generate the stems
/// 0..3, 6, 7 on general spheres; the middle block is special to S^4, S^6,
/// S^8; the last block is the stable basis of stems 8..10.
enum class WElem {
    Iota, Eta, Eta2, Nu, Nu2, Sigma,
    ENuP, EOmega, NuEta, ENuPEta, NuEta2, ENuPEta2, BracketIota6, ESigmaP,
    Eps, EtaSigma, Nub, Mu, EtaEps, Eta2Sigma, Nu3, EtaMu, Beta1
};

inline const char* welem_name(WElem e) {
    switch (e) {
        case WElem::Iota: return "iota";
        case WElem::Eta: return "eta";
        case WElem::Eta2: return "eta2";
        case WElem::Nu: return "nu";
        case WElem::Nu2: return "nu2";
        case WElem::Sigma: return "sg";
        case WElem::ENuP: return "Enu'";
        case WElem::EOmega: return "Eom";
        case WElem::NuEta: return "nu eta";
        case WElem::ENuPEta: return "Enu' eta";
        case WElem::NuEta2: return "nu eta2";
        case WElem::ENuPEta2: return "Enu' eta2";
        case WElem::BracketIota6: return "[iota6,iota6]";
        case WElem::ESigmaP: return "Esg'";
        case WElem::Eps: return "eps";
        case WElem::EtaSigma: return "eta sg";
        case WElem::Nub: return "nub";
        case WElem::Mu: return "mu";
        case WElem::EtaEps: return "eta eps";
        case WElem::Eta2Sigma: return "eta2 sg";
        case WElem::Nu3: return "nu3";
        case WElem::EtaMu: return "eta mu";
        case WElem::Beta1: return "b1";
    }
    return "?";
}

inline bool is_pow2_minus(long long n, long long c, long long imin) {
    long long v = n + c;
    return v >= (1LL << imin) && (v & (v - 1)) == 0;
}

// ---- orders of [iota_n, x] ------------------------------------------------

inline const Piecewise<Order>& w_iota_table() {
    static const Piecewise<Order> t{
        "order[iota,iota]",
        {{Cond::in({1, 3, 7}), Order::of(1)},
         {Cond::all({Cond::mod(1, 2), Cond::neg(Cond::in({1, 3, 7}))}), Order::of(2)},
         {Cond::mod(0, 2), Order::inf()}}};
    return t;
}

inline const Piecewise<Order>& w_eta_table() {
    static const Piecewise<Order> t{"order[iota,eta]",
                                    {{Cond::in({2, 6}), Order::of(1)},
                                     {Cond::mod(3, 4), Order::of(1)},
                                     {Cond::otherwise(), Order::of(2)}}};
    return t;
}

inline const Piecewise<Order>& w_eta2_table() {
    static const Piecewise<Order> t{"order[iota,eta2]",
                                    {{Cond::mod(2, 4), Order::of(1)},
                                     {Cond::mod(3, 4), Order::of(1)},
                                     {Cond::otherwise(), Order::of(2)}}};
    return t;
}

inline const Piecewise<Order>& w_nu_table() {
    static const Piecewise<Order> t{
        "order[iota,nu]",
        {{Cond::eq(4), Order::of(12)},
         {Cond::eq(12), Order::of(12)},
         {Cond::mod_ge(2, 4, 6), Order::of(12)},
         {Cond::all({Cond::mod(0, 4), Cond::ge(8), Cond::neg(Cond::eq(12))}), Order::of(24)},
         {Cond::mod(7, 8), Order::of(1)},
         {Cond::pow2_minus(3, 3), Order::of(1)},
         {Cond::all({Cond::mod(1, 2), Cond::neg(Cond::mod(7, 8)), Cond::neg(Cond::pow2_minus(3, 3))}),
          Order::of(2)}}};
    return t;
}

inline const Piecewise<Order>& w_nu2_table() {
    static const Piecewise<Order> t{"order[iota,nu2]",
                                    {{Cond::mod(4, 8), Order::of(1)},
                                     {Cond::mod(5, 8), Order::of(1)},
                                     {Cond::mod(7, 8), Order::of(1)},
                                     {Cond::pow2_minus(5, 4), Order::of(1)},
                                     {Cond::otherwise(), Order::of(2)}}};
    return t;
}

inline const Piecewise<Order>& w_sigma_table() {
    static const Piecewise<Order> t{
        "order[iota,sg]",
        {{Cond::eq(8), Order::of(120)},
         {Cond::all({Cond::mod(0, 2), Cond::ge(10)}), Order::of(240)},
         {Cond::eq(11), Order::of(1)},
         {Cond::mod(15, 16), Order::of(1)},
         {Cond::all({Cond::mod(1, 2), Cond::neg(Cond::eq(11)), Cond::neg(Cond::mod(15, 16))}),
          Order::of(2)}}};
    return t;
}

// ---- orders of the boundary images for the real tower ----------------------

inline const Piecewise<Order>& d_nu_table() {
    static const Piecewise<Order> t{
        "order D(nu)",
        {{Cond::eq(4), Order::of(12)},
         {Cond::eq(12), Order::of(12)},
         {Cond::mod_ge(2, 4, 6), Order::of(12)},
         {Cond::all({Cond::mod(0, 4), Cond::ge(8), Cond::neg(Cond::eq(12))}), Order::of(24)},
         {Cond::eq(5), Order::of(1)},
         {Cond::mod(7, 8), Order::of(1)},
         {Cond::all({Cond::mod(1, 2), Cond::ge(9), Cond::neg(Cond::mod(7, 8))}), Order::of(2)}}};
    return t;
}

inline const Piecewise<Order>& d_nu2_table() {
    static const Piecewise<Order> t{"order D(nu2)",
                                    {{Cond::mod(4, 8), Order::of(1)},
                                     {Cond::mod(5, 8), Order::of(1)},
                                     {Cond::mod(7, 8), Order::of(1)},
                                     {Cond::otherwise(), Order::of(2)}}};
    return t;
}

inline const Piecewise<Order>& d_sigma_table() {
    static const Piecewise<Order> t{
        "order D(sg)",
        {{Cond::eq(8), Order::of(2520)},
         {Cond::all({Cond::mod(0, 2), Cond::ge(10)}), Order::of(240)},
         {Cond::eq(11), Order::of(2)},
         {Cond::mod(15, 16), Order::of(1)},
         {Cond::all({Cond::mod(1, 2), Cond::neg(Cond::eq(11)), Cond::neg(Cond::mod(15, 16))}),
          Order::of(2)}}};
    return t;
}

struct AuditedTable {
    const Piecewise<Order>* table;
    long long lo;
};

inline std::vector<AuditedTable> all_order_tables() {
    return {{&w_iota_table(), 1}, {&w_eta_table(), 2},  {&w_eta2_table(), 2},
            {&w_nu_table(), 4},   {&w_nu2_table(), 4},  {&w_sigma_table(), 8},
            {&d_nu_table(), 4},   {&d_nu2_table(), 4},  {&d_sigma_table(), 8}};
}

/// Order of [iota_n, x]. Empty when the tables do not cover the pair.
inline std::optional<Order> w_order(long long n, WElem e) {
    switch (e) {
        case WElem::Iota: return n >= 1 ? std::optional(w_iota_table().eval(n)) : std::nullopt;
        case WElem::Eta: return n >= 2 ? std::optional(w_eta_table().eval(n)) : std::nullopt;
        case WElem::Eta2: return n >= 2 ? std::optional(w_eta2_table().eval(n)) : std::nullopt;
        case WElem::Nu: return n >= 4 ? std::optional(w_nu_table().eval(n)) : std::nullopt;
        case WElem::Nu2: return n >= 4 ? std::optional(w_nu2_table().eval(n)) : std::nullopt;
        case WElem::Sigma: return n >= 8 ? std::optional(w_sigma_table().eval(n)) : std::nullopt;
        case WElem::ENuP: return n == 4 ? std::optional(Order::of(2)) : std::nullopt;
        case WElem::EOmega: return n == 4 ? std::optional(Order::of(6)) : std::nullopt;
        case WElem::NuEta:
        case WElem::ENuPEta:
        case WElem::NuEta2:
        case WElem::ENuPEta2: return n == 4 ? std::optional(Order::of(1)) : std::nullopt;
        case WElem::BracketIota6: return n == 6 ? std::optional(Order::of(3)) : std::nullopt;
        case WElem::ESigmaP: return n == 8 ? std::optional(Order::of(60)) : std::nullopt;
        default: break;
    }
    // stable stems 8..10
    if (n < 11) return std::nullopt;
    if (n % 4 == 3) return Order::of(1);
    if (n % 8 == 0 && n >= 16) return Order::of(e == WElem::Beta1 ? 3 : 2);
    return std::nullopt;
}

/// Order of the boundary image of x for the real tower at S^n.
inline std::optional<Order> delta_r_order(long long n, WElem e) {
    switch (e) {
        case WElem::Iota: return n >= 1 ? std::optional(w_iota_table().eval(n)) : std::nullopt;
        case WElem::Eta: return n >= 2 ? std::optional(w_eta_table().eval(n)) : std::nullopt;
        case WElem::Eta2: return n >= 2 ? std::optional(w_eta2_table().eval(n)) : std::nullopt;
        case WElem::Nu: return n >= 4 ? std::optional(d_nu_table().eval(n)) : std::nullopt;
        case WElem::Nu2: return n >= 4 ? std::optional(d_nu2_table().eval(n)) : std::nullopt;
        case WElem::Sigma: return n >= 8 ? std::optional(d_sigma_table().eval(n)) : std::nullopt;
        case WElem::ENuP: return n == 4 ? std::optional(Order::of(4)) : std::nullopt;
        case WElem::EOmega: return n == 4 ? std::optional(Order::of(6)) : std::nullopt;
        case WElem::NuEta:
        case WElem::ENuPEta:
        case WElem::NuEta2:
        case WElem::ENuPEta2: return n == 4 ? std::optional(Order::of(2)) : std::nullopt;
        case WElem::BracketIota6: return n == 6 ? std::optional(Order::of(30)) : std::nullopt;
        case WElem::ESigmaP: return n == 8 ? std::optional(Order::of(120)) : std::nullopt;
        default: break;
    }
    if (n < 11) return std::nullopt;
    if (n % 4 == 3) return Order::of(1);
    if (n % 8 == 0 && n >= 16) return Order::of(e == WElem::Beta1 ? 3 : 2);
    return std::nullopt;
}

/// True exactly where the boundary order exceeds the bracket order: there the
/// bracket vanishing does not pull back through the tower.
inline bool delta_gap(long long n, WElem e) {
    switch (e) {
        case WElem::ENuP:
        case WElem::NuEta:
        case WElem::ENuPEta:
        case WElem::NuEta2:
        case WElem::ENuPEta2: return n == 4;
        case WElem::BracketIota6: return n == 6;
        case WElem::ESigmaP: return n == 8;
        case WElem::Sigma: return n == 8 || n == 11;
        case WElem::Nu: return is_pow2_minus(n, 3, 4);
        case WElem::Nu2: return is_pow2_minus(n, 5, 4);
        default: return false;
    }
}

// ---- boundary orders for the complex and quaternionic towers ----------------

inline std::optional<long long> factorial_checked(long long n) {
    long long f = 1;
    for (long long i = 2; i <= n; ++i) {
        if (f > std::numeric_limits<long long>::max() / i) return std::nullopt;
        f *= i;
    }
    return f;
}

/// n is the complex projective index; elements live on S^{2n+1}.
inline std::optional<Order> delta_c_order(long long n, WElem e) {
    if (n < 1) return std::nullopt;
    switch (e) {
        case WElem::Iota: {
            auto f = factorial_checked(n);
            return f ? std::optional(Order::of(*f)) : std::nullopt;
        }
        case WElem::Eta:
        case WElem::Eta2: return Order::of(n % 2 == 0 ? 2 : 1);
        case WElem::Nu:
            if (n % 2 == 0) return Order::of(gcd_ll(24, n));
            if (n >= 3) return Order::of(gcd_ll(24, n + 3) / 2);
            return std::nullopt;
        case WElem::Nu2:
            if (n % 4 == 2 || n % 4 == 3) return Order::of(1);
            if (n >= 4) return Order::of(2);
            return std::nullopt;
        default: return std::nullopt;
    }
}

/// n is the quaternionic projective index; elements live on S^{4n+3}.
inline std::optional<Order> delta_h_order(long long n, WElem e) {
    if (n < 1) return std::nullopt;
    switch (e) {
        case WElem::Iota: {
            auto f = factorial_checked(2 * n + 1);
            if (!f) return std::nullopt;
            if (n % 2 == 0) return Order::of(*f);
            if (*f > std::numeric_limits<long long>::max() / 2) return std::nullopt;
            return Order::of(2 * *f);
        }
        case WElem::Eta:
        case WElem::Eta2: return Order::of(2);
        case WElem::Nu: return Order::of(gcd_ll(24, n + 2));
        default: return std::nullopt;
    }
}

// ---- the vanishing-bracket and cyclic subgroups of spheres ------------------

namespace whitehead_detail {

inline SubgroupSpec mult_of(const Order& o) {
    if (o.infinite) return SubgroupSpec::zero();
    return SubgroupSpec::multiple(o.value);
}

inline std::string cite2(const std::string& rule, const std::string& table) {
    return join_citations(rule, table);
}

}  // namespace whitehead_detail

/// P_7(S^4): the classes with vanishing bracket inside Z{nu} + Z_12{Eom}.
inline SubgroupSpec p_spec_s4_7() {
    return SubgroupSpec::generated_by(
        {"scl(12,nu(4))", "wh(iota(4),iota(4))", "scl(6,E(om(3)))"}, canonical(1, {2}), 12);
}

/// G_7(S^4), strictly smaller than P_7(S^4).
inline SubgroupSpec g_spec_s4_7() {
    return SubgroupSpec::generated_by({"scl(3,wh(iota(4),iota(4)))", "scl(2,E(nu'(3)))"},
                                      canonical(1, {2}), 36);
}

/// P_15(S^8) inside Z{sg} + Z_120{Esg'}.
inline SubgroupSpec p_spec_s8_15() {
    return SubgroupSpec::generated_by({"wh(iota(8),iota(8))", "scl(60,E(sg'(7)))"},
                                      canonical(1, {2}), 120);
}

/// P_k(S^n): the kernel of [iota_n, -] on pi_k(S^n), cell by cell.
inline GroupResult sphere_P(const Catalog& cat, long long n, long long k) {
    using whitehead_detail::cite2;
    using whitehead_detail::mult_of;
    std::string subject = "P_" + std::to_string(k) + "(S^" + std::to_string(n) + ")";
    auto row = cat.pi_sphere(n, k);
    if (!row) return GroupResult::not_covered(subject);
    const FgAbGroup& amb = row->group;
    auto ex = [&](SubgroupSpec s, const std::string& c) {
        return GroupResult::exact(subject, std::move(s), amb, cite2(c, row->citation));
    };
    auto nc = [&]() { return GroupResult::not_covered(subject, "-", amb); };
    if (amb.is_zero()) return ex(SubgroupSpec::whole(), "[zero]");
    if (n == 1 || n == 3 || n == 7) return ex(SubgroupSpec::whole(), "[W1]");
    if (n == 2)
        return k == 2 ? ex(SubgroupSpec::zero(), "[W1]") : ex(SubgroupSpec::whole(), "[W2]");
    if (k == n)
        return n % 2 == 0 ? ex(SubgroupSpec::zero(), "[W1]") : ex(SubgroupSpec::multiple(2), "[W1]");
    if (k < n) return ex(SubgroupSpec::whole(), "[conn]");
    switch (k - n) {
        case 1: return ex(mult_of(w_eta_table().eval(n)), "[W2]");
        case 2: return ex(mult_of(w_eta2_table().eval(n)), "[W3]");
        case 3:
            if (n == 4) return ex(p_spec_s4_7(), "[W40]");
            return ex(mult_of(w_nu_table().eval(n)), "[W4]");
        case 4: return ex(SubgroupSpec::whole(), "[GM]");
        case 5:
            if (n == 6) return ex(SubgroupSpec::multiple(3), "[Wx]");
            return ex(SubgroupSpec::whole(), "[GM]");
        case 6:
            if (n == 4) return ex(SubgroupSpec::whole(), "[GM]");
            return ex(mult_of(w_nu2_table().eval(n)), "[W5]");
        case 7:
            if (n == 4) return ex(SubgroupSpec::zero(), "[odd]");
            if (n == 5) return ex(SubgroupSpec::whole(), "[Wx]");
            if (n == 6) return ex(SubgroupSpec::zero(), "[Wx]");
            if (n == 8) return ex(p_spec_s8_15(), "[W60]");
            return ex(mult_of(w_sigma_table().eval(n)), "[W6]");
        case 8:
        case 9:
        case 10:
            if (n % 4 == 3) return ex(SubgroupSpec::whole(), "[j1]");
            if (n % 8 == 0 && n >= 16) return ex(SubgroupSpec::zero(), "[8910]");
            return nc();
        case 11:
            if (n % 2 == 1 && n % 128 != 115) return ex(SubgroupSpec::whole(), "[GM]");
            return nc();
        case 13:
            if (n % 2 == 1) return ex(SubgroupSpec::whole(), "[odd]");
            return nc();
        default: return nc();
    }
}

/// G_k(S^2): the rotation action fills everything above the bottom cell.
inline GroupResult sphere_G_s2(const Catalog& cat, long long k) {
    std::string subject = "G_" + std::to_string(k) + "(S^2)";
    auto row = cat.pi_sphere(2, k);
    if (!row) return GroupResult::not_covered(subject);
    if (k == 2)
        return GroupResult::exact(subject, SubgroupSpec::zero(), row->group,
                                  whitehead_detail::cite2("[W1]", row->citation));
    return GroupResult::exact(subject, SubgroupSpec::whole(), row->group,
                              whitehead_detail::cite2("[GO]", row->citation));
}

/// G_k(S^4), needed as the bottom case of the quaternionic tower.
inline GroupResult sphere_G_s4(const Catalog& cat, long long k) {
    using whitehead_detail::cite2;
    std::string subject = "G_" + std::to_string(k) + "(S^4)";
    auto row = cat.pi_sphere(4, k);
    if (!row) return GroupResult::not_covered(subject);
    const FgAbGroup& amb = row->group;
    if (amb.is_zero())
        return GroupResult::exact(subject, SubgroupSpec::whole(), amb, cite2("[zero]", row->citation));
    if (k < 4) return GroupResult::exact(subject, SubgroupSpec::whole(), amb, cite2("[conn]", row->citation));
    switch (k) {
        case 4:
            return GroupResult::exact(subject, SubgroupSpec::zero(), amb, cite2("[W1]", row->citation));
        case 5:
            return GroupResult::exact(subject, SubgroupSpec::zero(), amb, cite2("[W2]", row->citation));
        case 6:
            return GroupResult::exact(subject, SubgroupSpec::zero(), amb, cite2("[W3]", row->citation));
        case 7:
            return GroupResult::exact(subject, g_spec_s4_7(), amb, cite2("[GM]", row->citation));
        case 8:
        case 9:
            return GroupResult::upper_only(subject, SubgroupSpec::whole(), amb,
                                           cite2("[GM]", row->citation));
        case 10: {
            Decomposition dec;
            dec.parts = {{"sphere", canonical(0, {24}, {"cmp(nu(4),nu(7))"})},
                         {"fiber", canonical(0, {3}, {"cmp(a(1,3,4),a(1,3,7))"})}};
            SubgroupSpec lo = SubgroupSpec::direct_sum(
                {{"sphere", SubgroupSpec::multiple(3)}, {"fiber", SubgroupSpec::zero()}});
            GroupResult r = GroupResult::bounds(subject, std::move(lo), SubgroupSpec::whole(), amb,
                                               cite2("[hthm]+[GM]", row->citation), &dec);
            return r;
        }
        case 11:
            return GroupResult::exact(subject, SubgroupSpec::zero(), amb, cite2("[odd]", row->citation));
        default: return GroupResult::not_covered(subject, "-", amb);
    }
}

}  // namespace gottlieb

#endif
