// Command-line front end: query one group, dump or export the catalog, or run
// the internal consistency checks.
//
// Exit codes: 0 answered (not_covered is an answer), 1 selfcheck failure,
// 2 usage error, 3 catalog load error.

#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>
#include <gottlieb/cayley.hpp>
#include <gottlieb/gottlieb.hpp>
#include <gottlieb/projspace.hpp>
#include <gottlieb/selfcheck.hpp>
#include <gottlieb/whitehead.hpp>

#ifndef GOTTLIEB_DEFAULT_CATALOG
#define GOTTLIEB_DEFAULT_CATALOG "data/catalog.txt"
#endif

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int usage_error(const std::string& msg) {
    std::fprintf(stderr, "gottlieb: %s\n", msg.c_str());
    return 2;
}

gottlieb::Catalog load_catalog(const std::string& flag_path) {
    std::string path;
    if (const char* env = std::getenv("GOTTLIEB_CATALOG"))
        path = env;
    else if (!flag_path.empty())
        path = flag_path;
    else
        path = GOTTLIEB_DEFAULT_CATALOG;
    return gottlieb::Catalog::load_file(path);
}

gottlieb::GroupResult run_query(const gottlieb::Catalog& cat, const std::string& what,
                                char field, long long n, long long k, long long p) {
    using namespace gottlieb;
    if (field == 'K') {
        if (what == "pi") return p > 0 ? pi_kp2_p(cat, k, p) : pi_kp2(cat, k);
        if (what == "P") return p_kp2(cat, k);
        if (what == "G") return g_kp2(cat, k);
        if (what == "Pprime") return cayley_not_covered(cat, "P'", k);
        if (what == "Pdoubleprime") return cayley_not_covered(cat, "P''", k);
        return cayley_not_covered(cat, "G'", k);
    }
    if (what == "pi") return p > 0 ? pi_proj_p(cat, field, n, k, p) : pi_proj(cat, field, n, k);
    if (what == "P") return p_proj(cat, field, n, k);
    if (what == "Pprime") return p_prime(cat, field, n, k);
    if (what == "Pdoubleprime") return p_dprime(cat, field, n, k);
    if (what == "G") return g_proj(cat, field, n, k);
    return g_prime(cat, field, n, k);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"queryable calculator for homotopy groups, Whitehead center "
                 "subgroups, and evaluation subgroups of projective spaces"};
    app.set_version_flag("--version", "gottlieb 1.0.0");

    std::string catalog_path;
    app.add_option("--catalog", catalog_path,
                   "homotopy table file (GOTTLIEB_CATALOG overrides)");

    auto* query = app.add_subcommand("query", "compute one group");
    std::string what = "pi";
    std::string field_s = "R";
    std::string format = "human";
    long long n = -1, k = -1, p = 0;
    query->add_option("--what", what, "pi | P | Pprime | Pdoubleprime | G | Gprime")
        ->check(CLI::IsMember({"pi", "P", "Pprime", "Pdoubleprime", "G", "Gprime"}));
    query->add_option("--field", field_s, "R | C | H | K")
        ->check(CLI::IsMember({"R", "C", "H", "K"}))
        ->required();
    query->add_option("--n", n, "projective index");
    query->add_option("--k", k, "homotopy degree")->required();
    query->add_option("--p", p, "restrict to the p-primary component (pi only)");
    query->add_option("--format", format, "human | machine")
        ->check(CLI::IsMember({"human", "machine"}));

    auto* dump = app.add_subcommand("dump", "list the catalog rows");
    std::string space_filter;
    dump->add_option("--space", space_filter, "only rows for this space, e.g. s3");

    app.add_subcommand("selfcheck", "run the internal consistency checks");
    app.add_subcommand("export", "write the catalog in canonical form");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (app.get_subcommands().empty()) {
        std::fprintf(stderr, "%s\n", app.help().c_str());
        return 2;
    }

    gottlieb::Catalog cat;
    try {
        cat = load_catalog(catalog_path);
    } catch (const gottlieb::CatalogError& e) {
        std::fprintf(stderr, "gottlieb: %s\n", e.what());
        return 3;
    }

    if (query->parsed()) {
        char field = field_s[0];
        if (field == 'K') {
            if (n == -1) n = 2;
            if (n != 2) return usage_error("the Cayley tower has index 2 only");
        } else {
            if (n == -1) return usage_error("--n is required for fields R, C, H");
            if (n < 1) return usage_error("--n must be at least 1");
        }
        if (k < 1) return usage_error("--k must be at least 1");
        if (p != 0) {
            if (what != "pi") return usage_error("--p applies only to --what pi");
            if (!is_prime(p)) return usage_error("--p must be a prime");
        }
        gottlieb::GroupResult r = run_query(cat, what, field, n, k, p);
        if (format == "machine")
            std::printf("%s\n", r.machine().c_str());
        else
            std::fputs(r.pretty().c_str(), stdout);
        return 0;
    }

    if (dump->parsed()) {
        for (const auto& [key, e] : cat.entries()) {
            if (!space_filter.empty() && e.space != space_filter) continue;
            std::printf("%s\n", e.line().c_str());
        }
        return 0;
    }

    if (app.get_subcommand("selfcheck")->parsed()) {
        auto res = gottlieb::run_selfcheck(cat);
        for (const auto& c : res.checks)
            std::printf("%s %s%s%s\n", c.ok ? "ok  " : "FAIL", c.name.c_str(),
                        c.ok ? "" : ": ", c.detail.c_str());
        std::printf("catalog checksum %016llx\n", (unsigned long long)cat.checksum());
        return res.ok() ? 0 : 1;
    }

    std::fputs(cat.export_text().c_str(), stdout);
    return 0;
}
