#ifndef GOTTLIEB_SELFCHECK_HPP
#define GOTTLIEB_SELFCHECK_HPP

#include <string>
#include <vector>

#include "catalog.hpp"
#include "cayley.hpp"
#include "gottlieb.hpp"
#include "projspace.hpp"
#include "whitehead.hpp"

namespace gottlieb {

/// One internal consistency check: a name, a verdict, and on failure a short
/// account of the first thing that went wrong.
struct CheckReport {
    std::string name;
    bool ok = true;
    std::string detail;

    explicit CheckReport(std::string n) : name(std::move(n)) {}
};

struct SelfcheckResult {
    std::vector<CheckReport> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

namespace selfcheck_detail {

inline bool order_divides(const Order& a, const Order& b) {
    if (b.infinite) return true;
    if (a.infinite) return false;
    return b.value % a.value == 0;
}

inline bool order_eq(const Order& a, const Order& b) {
    if (a.infinite || b.infinite) return a.infinite && b.infinite;
    return a.value == b.value;
}

inline void fail(CheckReport& r, const std::string& detail) {
    if (!r.ok) return;
    r.ok = false;
    r.detail = detail;
}

}  // namespace selfcheck_detail

/// Every breakage mode here is a wrong answer waiting to be served, so the
/// checks favour exhaustive scans over spot samples wherever a scan is cheap.
inline SelfcheckResult run_selfcheck(const Catalog& cat) {
    using selfcheck_detail::fail;
    using selfcheck_detail::order_divides;
    using selfcheck_detail::order_eq;
    SelfcheckResult out;

    // Each piecewise order table must cover its domain with exactly one arm.
    {
        CheckReport r{"order-tables-one-hot"};
        for (const auto& t : all_order_tables()) {
            auto bad = t.table->audit(t.lo, 1000);
            if (!bad.empty()) fail(r, bad.front());
        }
        out.checks.push_back(r);
    }

    // The boundary order is a multiple of the bracket order wherever both are
    // tabulated, and exceeds it exactly on the flagged gap cells.
    {
        CheckReport r{"boundary-dominates-bracket"};
        const WElem elems[] = {WElem::Iota, WElem::Eta, WElem::Eta2,
                               WElem::Nu,   WElem::Nu2, WElem::Sigma};
        for (WElem e : elems) {
            for (long long n = 1; n <= 600; ++n) {
                auto w = w_order(n, e);
                auto d = delta_r_order(n, e);
                if (!w || !d) continue;
                std::string at = std::string(welem_name(e)) + " at n=" + std::to_string(n);
                if (!order_divides(*w, *d)) fail(r, "bracket order does not divide boundary order for " + at);
                bool strict = !order_eq(*w, *d);
                if (strict != delta_gap(n, e))
                    fail(r, (strict ? "unflagged gap for " : "flagged non-gap for ") + at);
            }
        }
        out.checks.push_back(r);
    }

    // The complex and quaternionic boundary orders are defined on the whole
    // advertised domain, modulo factorial overflow on the degree-one class.
    {
        CheckReport r{"tower-boundaries-defined"};
        for (long long n = 1; n <= 200; ++n) {
            for (WElem e : {WElem::Eta, WElem::Eta2}) {
                if (!delta_c_order(n, e)) fail(r, "complex boundary undefined at n=" + std::to_string(n));
                if (!delta_h_order(n, e)) fail(r, "quaternionic boundary undefined at n=" + std::to_string(n));
            }
            if (n >= 3 && !delta_c_order(n, WElem::Nu))
                fail(r, "complex nu boundary undefined at n=" + std::to_string(n));
            if (!delta_h_order(n, WElem::Nu))
                fail(r, "quaternionic nu boundary undefined at n=" + std::to_string(n));
            if (n <= 20 && !delta_c_order(n, WElem::Iota))
                fail(r, "complex degree boundary undefined at n=" + std::to_string(n));
            if (n <= 9 && !delta_h_order(n, WElem::Iota))
                fail(r, "quaternionic degree boundary undefined at n=" + std::to_string(n));
        }
        out.checks.push_back(r);
    }

    // Export must re-load to an identical table: same rows, same checksum.
    {
        CheckReport r{"catalog-roundtrip"};
        try {
            Catalog again = Catalog::load_text(cat.export_text());
            if (again.checksum() != cat.checksum()) fail(r, "checksum changed across export/load");
            if (again.entries().size() != cat.entries().size())
                fail(r, "row count changed across export/load");
        } catch (const CatalogError& e) {
            fail(r, std::string("exported table failed to load: ") + e.what());
        }
        out.checks.push_back(r);
    }

    // A few table rows whose groups are pinned by independent sources.
    {
        CheckReport r{"catalog-spot-values"};
        struct Spot {
            const char* space;
            long long k;
            const char* group;
        };
        const Spot spots[] = {
            {"s2", 3, "Z"},          {"s3", 6, "Z_12"},    {"s4", 7, "Z+Z_12"},
            {"s5", 9, "Z_2"},        {"s6", 11, "Z"},      {"s7", 14, "Z_120"},
            {"s8", 15, "Z+Z_120"},   {"s3", 14, "Z_2+Z_2+Z_84"},
            {"s13", 24, "Z_504"},    {"kp2", 18, "Z_2+Z_24"},
        };
        for (const auto& s : spots) {
            const TableEntry* e = cat.lookup("pi", s.space, s.k);
            if (!e) {
                fail(r, std::string("missing row ") + s.space + " k=" + std::to_string(s.k));
            } else if (e->group.str() != s.group) {
                fail(r, std::string(s.space) + " k=" + std::to_string(s.k) + " reads " +
                            e->group.str() + ", expected " + s.group);
            }
        }
        out.checks.push_back(r);
    }

    // Splitting assembly: parts multiply, and the fiber summand vanishes for
    // the real and complex towers away from their single special degree.
    {
        CheckReport r{"splitting-assembly"};
        for (char f : {'R', 'C', 'H'}) {
            for (long long n = 1; n <= 5; ++n) {
                for (long long k = 1; k <= 24; ++k) {
                    ProjAmbient a = proj_ambient(cat, f, n, k);
                    std::string at = space_label(f, n) + " k=" + std::to_string(k);
                    if (f == 'R' && !(a.fiber_known && a.fiber.is_zero()))
                        fail(r, "real tower grew a fiber summand at " + at);
                    if (f == 'C' && k != 2 && a.fiber_known && !a.fiber.is_zero())
                        fail(r, "complex fiber summand away from k=2 at " + at);
                    if (a.total_known()) {
                        Order lhs = order(a.total());
                        Order rhs = order(a.sphere) * order(a.fiber);
                        if (!order_eq(lhs, rhs)) fail(r, "part orders do not multiply at " + at);
                    }
                }
            }
        }
        out.checks.push_back(r);
    }

    // Frozen answers spanning every front-door query path.
    {
        CheckReport r{"frozen-answers"};
        auto expect = [&](const GroupResult& g, Status st, const char* iso, const std::string& at) {
            if (g.status != st) {
                fail(r, at + " status " + status_name(g.status) + ", expected " + status_name(st));
                return;
            }
            if (iso) {
                if (!g.value_iso) fail(r, at + " has no resolved value");
                else if (g.value_iso->str() != iso)
                    fail(r, at + " resolved to " + g.value_iso->str() + ", expected " + iso);
            }
        };
        expect(sphere_P(cat, 4, 7), Status::Exact, nullptr, "P_7(S^4)");
        expect(sphere_P(cat, 8, 15), Status::Exact, nullptr, "P_15(S^8)");
        expect(p_proj(cat, 'H', 2, 11), Status::Exact, "Z+Z_5", "P_11(HP^2)");
        expect(p_proj(cat, 'R', 4, 10), Status::Exact, "Z_24", "P_10(RP^4)");
        expect(p_proj(cat, 'C', 3, 8), Status::Exact, nullptr, "P_8(CP^3)");
        expect(p_kp2(cat, 11), Status::Exact, "Z_3", "P_11(KP^2)");
        expect(g_proj(cat, 'R', 3, 4), Status::Exact, "Z_2", "G_4(RP^3)");
        expect(g_kp2(cat, 18), Status::Bounds, "Z_3", "G_18(KP^2)");
        expect(pi_proj(cat, 'C', 4, 9), Status::Exact, "Z", "pi_9(CP^4)");
        expect(pi_kp2(cat, 15), Status::Exact, "Z_120", "pi_15(KP^2)");
        auto g47 = sphere_G_s4(cat, 7);
        if (g47.status != Status::Exact) fail(r, "G_7(S^4) not exact");
        auto gi = g47.value_index();
        auto pi = sphere_P(cat, 4, 7).value_index();
        if (!gi || !pi || gi->infinite || pi->infinite || gi->value % pi->value != 0 ||
            gi->value == pi->value)
            fail(r, "G_7(S^4) does not sit strictly inside P_7(S^4)");
        out.checks.push_back(r);
    }

    // The KP^2 degree-26 relation: the catalogued 2-primary group extends the
    // recorded subgroup by the recorded quotient.
    {
        CheckReport r{"cayley-top-relation"};
        CayleyK26 rel = cayley_k26_relation();
        Order tot = order(rel.sub) * order(rel.quotient);
        Order two = order(rel.two_primary);
        if (tot.infinite || two.infinite) {
            fail(r, "degree-26 pieces are not finite");
        } else {
            long long two_part = 1;
            for (long long t = tot.value; t % 2 == 0; t /= 2) two_part *= 2;
            if (two_part != two.value)
                fail(r, "extension order disagrees with the 2-primary group");
        }
        const TableEntry* row = cat.lookup("pip2", "kp2", 26);
        if (!row) fail(r, "missing 2-primary row at k=26");
        else if (row->group.str() != rel.two_primary.str())
            fail(r, "catalog row disagrees with the recorded 2-primary group");
        out.checks.push_back(r);
    }

    return out;
}

}  // namespace gottlieb

#endif
