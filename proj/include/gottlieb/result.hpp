#ifndef GOTTLIEB_RESULT_HPP
#define GOTTLIEB_RESULT_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fga.hpp"

namespace gottlieb {

/// How much the calculator knows about a subgroup:
///   Exact       the subgroup is determined
///   LowerBound  a subgroup contained in it is determined
///   UpperBound  a subgroup containing it is determined
///   Bounds      both of the above, not equal
///   NotCovered  outside the encoded range; an answer, not an error
enum class Status { Exact, LowerBound, UpperBound, Bounds, NotCovered };

inline std::string status_name(Status s) {
    switch (s) {
        case Status::Exact: return "exact";
        case Status::LowerBound: return "lower_bound";
        case Status::UpperBound: return "upper_bound";
        case Status::Bounds: return "bounds";
        case Status::NotCovered: return "not_covered";
    }
    return "?";
}

namespace result_detail {

inline std::vector<std::string> scaled_gens(const FgAbGroup& ambient, long long m) {
    std::vector<std::string> out;
    if (multiple_subgroup(ambient, m).is_zero()) return out;
    for (const auto& g : ambient.gens) out.push_back("scl(" + std::to_string(m) + "," + g + ")");
    return out;
}

}  // namespace result_detail

/// Joins two ``+``-separated citation strings, dropping repeated labels so a
/// rule that inherits its table row's citation does not state it twice.
inline std::string join_citations(const std::string& a, const std::string& b) {
    std::vector<std::string> seen;
    std::string out;
    auto add = [&](const std::string& s) {
        size_t pos = 0;
        while (pos < s.size()) {
            size_t next = s.find('+', pos);
            if (next == std::string::npos) next = s.size();
            std::string label = s.substr(pos, next - pos);
            pos = next + 1;
            if (label.empty() || label == "-") continue;
            if (std::find(seen.begin(), seen.end(), label) != seen.end()) continue;
            seen.push_back(label);
            if (!out.empty()) out += "+";
            out += label;
        }
    };
    add(a);
    add(b);
    return out;
}

/// Ambient group split into tagged direct summands, e.g. the image of the
/// covering projection and the image of the fiber inclusion. DirectSum
/// subgroup specs resolve part by part against it.
struct Decomposition {
    std::vector<std::pair<std::string, FgAbGroup>> parts;

    FgAbGroup total() const {
        FgAbGroup t = FgAbGroup::zero();
        for (const auto& [tag, g] : parts) t = direct_sum(t, g);
        return t;
    }

    const FgAbGroup* part(const std::string& tag) const {
        for (const auto& [t, g] : parts)
            if (t == tag) return &g;
        return nullptr;
    }

    std::optional<FgAbGroup> resolve(const SubgroupSpec& s) const {
        if (s.kind != SubgroupSpec::Kind::DirectSum) return gottlieb::resolve(s, total());
        FgAbGroup out = FgAbGroup::zero();
        for (const auto& [tag, g] : parts) {
            const SubgroupSpec* piece = nullptr;
            for (const auto& [t, sp] : s.summands)
                if (t == tag) piece = &sp;
            if (!piece) continue;  // unmentioned part contributes nothing
            auto r = gottlieb::resolve(*piece, g);
            if (!r) return std::nullopt;
            if (piece->kind == SubgroupSpec::Kind::Multiple)
                r->gens = result_detail::scaled_gens(g, piece->mult);
            out = direct_sum(out, *r);
        }
        return canonical(out.free_rank, out.torsion, out.gens);
    }

    std::optional<Order> index(const SubgroupSpec& s) const {
        if (s.kind != SubgroupSpec::Kind::DirectSum) return index_in(s, total());
        Order idx{false, 1};
        for (const auto& [tag, g] : parts) {
            const SubgroupSpec* piece = nullptr;
            for (const auto& [t, sp] : s.summands)
                if (t == tag) piece = &sp;
            std::optional<Order> part_idx =
                piece ? index_in(*piece, g) : std::make_optional(order(g));
            if (!part_idx) return std::nullopt;
            idx = idx * *part_idx;
        }
        return idx;
    }
};

/// The answer to one query. `value` is the determined subgroup (or the lower
/// bound); `upper` is set for UpperBound and Bounds. Isomorphism types are
/// resolved against the ambient group when that is possible.
struct GroupResult {
    Status status = Status::NotCovered;
    std::string subject;    // e.g. "P_11(HP^2)", set by the caller
    std::optional<FgAbGroup> ambient;
    std::optional<SubgroupSpec> value;
    std::optional<SubgroupSpec> upper;
    std::optional<FgAbGroup> value_iso;
    std::optional<FgAbGroup> upper_iso;
    std::vector<std::string> generators;
    std::string citation;
    std::optional<Decomposition> split;  // how the ambient decomposes, when known

    static GroupResult not_covered(std::string subject, std::string cite = "-",
                                   std::optional<FgAbGroup> amb = std::nullopt) {
        GroupResult r;
        r.status = Status::NotCovered;
        r.subject = std::move(subject);
        r.ambient = std::move(amb);
        r.citation = std::move(cite);
        return r;
    }

    static GroupResult exact(std::string subject, SubgroupSpec v, std::optional<FgAbGroup> amb,
                             std::string cite, const Decomposition* dec = nullptr) {
        GroupResult r;
        r.status = Status::Exact;
        r.subject = std::move(subject);
        r.ambient = std::move(amb);
        r.citation = std::move(cite);
        r.set_value(std::move(v), dec);
        if (dec) r.split = *dec;
        return r;
    }

    static GroupResult lower(std::string subject, SubgroupSpec lo, std::optional<FgAbGroup> amb,
                             std::string cite, const Decomposition* dec = nullptr) {
        GroupResult r = exact(std::move(subject), std::move(lo), std::move(amb), std::move(cite), dec);
        r.status = Status::LowerBound;
        return r;
    }

    static GroupResult upper_only(std::string subject, SubgroupSpec hi, std::optional<FgAbGroup> amb,
                                  std::string cite, const Decomposition* dec = nullptr) {
        GroupResult r;
        r.status = Status::UpperBound;
        r.subject = std::move(subject);
        r.ambient = std::move(amb);
        r.citation = std::move(cite);
        r.set_upper(std::move(hi), dec);
        if (dec) r.split = *dec;
        return r;
    }

    static GroupResult bounds(std::string subject, SubgroupSpec lo, SubgroupSpec hi,
                              std::optional<FgAbGroup> amb, std::string cite,
                              const Decomposition* dec = nullptr) {
        GroupResult r = exact(std::move(subject), std::move(lo), std::move(amb), std::move(cite), dec);
        r.status = Status::Bounds;
        r.set_upper(std::move(hi), dec);
        return r;
    }

    void set_value(SubgroupSpec v, const Decomposition* dec = nullptr) {
        if (ambient) v = normalize(v, *ambient);
        value_iso = materialize(v, dec);
        if (value_iso) generators = value_iso->gens;
        if (generators.empty() && v.kind == SubgroupSpec::Kind::GeneratedBy)
            generators = v.generators;
        value = std::move(v);
    }

    void set_upper(SubgroupSpec u, const Decomposition* dec = nullptr) {
        if (ambient) u = normalize(u, *ambient);
        upper_iso = materialize(u, dec);
        upper = std::move(u);
    }

    std::optional<Order> value_index(const Decomposition* dec = nullptr) const {
        if (!value) return std::nullopt;
        if (!dec && split) dec = &*split;
        if (dec) return dec->index(*value);
        if (!ambient) return std::nullopt;
        return index_in(*value, *ambient);
    }

    std::optional<Order> upper_index(const Decomposition* dec = nullptr) const {
        if (!upper) return std::nullopt;
        if (!dec && split) dec = &*split;
        if (dec) return dec->index(*upper);
        if (!ambient) return std::nullopt;
        return index_in(*upper, *ambient);
    }

    /// status|ambient|value|upper|generators|citation  (byte stable)
    std::string machine() const {
        auto spec_str = [](const std::optional<SubgroupSpec>& s,
                           const std::optional<FgAbGroup>& iso) -> std::string {
            if (!s) return "-";
            return s->str() + "->" + (iso ? iso->str() : "?");
        };
        std::string gens;
        for (size_t i = 0; i < generators.size(); ++i) {
            if (i) gens += ';';
            gens += generators[i];
        }
        if (gens.empty()) gens = "-";
        return status_name(status) + "|" + (ambient ? ambient->str() : "?") + "|" +
               spec_str(value, value_iso) + "|" + spec_str(upper, upper_iso) + "|" + gens + "|" +
               (citation.empty() ? "-" : citation);
    }

    std::string pretty() const {
        std::string out = subject + ": " + status_name(status) + "\n";
        if (ambient) out += "  ambient " + ambient->str() + "\n";
        auto line = [&](const char* label, const std::optional<SubgroupSpec>& s,
                        const std::optional<FgAbGroup>& iso) {
            if (!s) return;
            out += std::string("  ") + label + " " + s->str();
            if (iso) out += " = " + iso->str();
            out += "\n";
        };
        if (status == Status::Exact) {
            line("value", value, value_iso);
        } else {
            line("lower", value, value_iso);
            line("upper", upper, upper_iso);
        }
        if (!generators.empty()) {
            out += "  generators ";
            for (size_t i = 0; i < generators.size(); ++i) {
                if (i) out += "; ";
                out += generators[i];
            }
            out += "\n";
        }
        out += "  cite " + (citation.empty() ? std::string("-") : citation) + "\n";
        return out;
    }

  private:
    std::optional<FgAbGroup> materialize(const SubgroupSpec& s, const Decomposition* dec) {
        if (dec) {
            auto r = dec->resolve(s);
            if (r) return r;
        }
        if (!ambient) {
            if (s.kind == SubgroupSpec::Kind::Zero) return FgAbGroup::zero();
            if (s.kind == SubgroupSpec::Kind::GeneratedBy && s.gen_iso) return s.gen_iso;
            return std::nullopt;
        }
        if (s.kind == SubgroupSpec::Kind::Multiple) {
            FgAbGroup m = multiple_subgroup(*ambient, s.mult);
            m.gens = result_detail::scaled_gens(*ambient, s.mult);
            return m;
        }
        return gottlieb::resolve(s, *ambient);
    }
};

}  // namespace gottlieb

#endif
