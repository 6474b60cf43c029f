#pragma once

#include <gmpxx.h>
#include <json.hpp>

#include <algorithm>
#include <exception>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "qmg/dedekind.hpp"
#include "qmg/families.hpp"
#include "qmg/galois4.hpp"

namespace qmg {

/* Polynomial text form: whitespace-separated integer coefficients in
 * descending degree order, so "1 0 4 0 1" is x^4 + 4x^2 + 1.
 */
inline IntPoly parse_poly(const std::string& text) {
    std::istringstream in(text);
    std::vector<mpz_class> desc;
    std::string tok;
    while (in >> tok) {
        try {
            desc.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("parse_poly: bad coefficient '" + tok + "'");
        }
    }
    if (desc.empty()) throw std::invalid_argument("parse_poly: no coefficients");
    std::reverse(desc.begin(), desc.end());
    return IntPoly(std::move(desc));
}

inline std::string format_poly(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        out += p.coeff(i).get_str();
        if (i > 0) out += ' ';
    }
    return out;
}

// "2^4*5^3" with a leading minus for negative values; complete inputs only.
inline std::string format_factored(const FactoredInt& f) {
    if (!f.complete) throw std::invalid_argument("format_factored: factorization is incomplete");
    std::string out = f.sign < 0 ? "-" : "";
    if (f.prime_powers.empty()) return out + "1";
    bool first = true;
    for (const auto& [p, e] : f.prime_powers) {
        if (!first) out += '*';
        first = false;
        out += p.get_str();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

inline const char* tristate_name(Tristate t) {
    switch (t) {
        case Tristate::True: return "true";
        case Tristate::False: return "false";
        case Tristate::Unknown: return "unknown";
    }
    throw std::invalid_argument("tristate_name: bad value");
}

inline const char* monogenic_status_name(MonogenicStatus s) {
    switch (s) {
        case MonogenicStatus::Monogenic: return "monogenic";
        case MonogenicStatus::NotMonogenic: return "not_monogenic";
        case MonogenicStatus::Unknown: return "unknown";
    }
    throw std::invalid_argument("monogenic_status_name: bad value");
}

struct ScanRow {
    FamilyId family = FamilyId::X2;
    mpz_class t;
    GaloisLabel group = GaloisLabel::C4;
    mpz_class disc;
    std::string disc_factored;  // empty when the factorization is incomplete
    bool disc_matches_formula = false;
    Tristate condition = Tristate::Unknown;
    MonogenicStatus verdict = MonogenicStatus::Unknown;
    bool agree = false;
};

// The verdict reproduces the condition exactly, unknowns included.
inline bool scan_agree(Tristate condition, MonogenicStatus verdict) {
    switch (verdict) {
        case MonogenicStatus::Monogenic: return condition == Tristate::True;
        case MonogenicStatus::NotMonogenic: return condition == Tristate::False;
        case MonogenicStatus::Unknown: return condition == Tristate::Unknown;
    }
    throw std::invalid_argument("scan_agree: bad verdict");
}

inline ScanRow scan_one(FamilyId id, const mpz_class& t, const Budget& budget = {}) {
    ScanRow row;
    row.family = id;
    row.t = t;
    const IntPoly f = gen(id, t);
    row.group = classify(f, budget).first;
    row.disc = discriminant(f);
    const FactoredInt fd = factor(row.disc, budget);
    if (fd.complete) row.disc_factored = format_factored(fd);
    row.disc_matches_formula = row.disc == closed_form_disc(id, t);
    row.condition = condition_holds(id, t, budget);
    row.verdict = is_monogenic(f, budget).status;
    row.agree = scan_agree(row.condition, row.verdict);
    return row;
}

/* Sweep one of X2..X5 over an inclusive range.  Rows come back in ascending
 * t; each is a pure function of (family, t, budget), so the worker count
 * changes nothing but wall time.
 */
inline std::vector<ScanRow> run_scan(FamilyId id, long t_min, long t_max, int workers = 1,
                                     const Budget& budget = {}) {
    if (id != FamilyId::X2 && id != FamilyId::X3 && id != FamilyId::X4 && id != FamilyId::X5)
        throw std::invalid_argument("run_scan: scans cover families X2 through X5");
    if (t_min > t_max) throw std::invalid_argument("run_scan: empty range");

    const std::size_t n = static_cast<std::size_t>(t_max - t_min + 1);
    std::vector<ScanRow> rows(n);
    const int w = static_cast<int>(std::clamp<long>(workers, 1, static_cast<long>(n)));

    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(w));
    for (int k = 0; k < w; ++k) {
        pool.emplace_back([&, k] {
            try {
                for (std::size_t i = static_cast<std::size_t>(k); i < n; i += static_cast<std::size_t>(w))
                    rows[i] = scan_one(id, mpz_class(t_min + static_cast<long>(i)), budget);
            } catch (...) {
                errors[static_cast<std::size_t>(k)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

inline nlohmann::ordered_json row_json(const ScanRow& r) {
    nlohmann::ordered_json j;
    j["family"] = family_name(r.family);
    if (r.t.fits_slong_p())
        j["t"] = r.t.get_si();
    else
        j["t"] = r.t.get_str();
    j["group"] = label_code(r.group);
    j["disc"] = r.disc.get_str();
    j["disc_factored"] = r.disc_factored;
    j["disc_matches_formula"] = r.disc_matches_formula;
    j["condition"] = tristate_name(r.condition);
    j["verdict"] = monogenic_status_name(r.verdict);
    j["agree"] = r.agree;
    return j;
}

inline const char* csv_header() {
    return "family,t,group,disc,disc_factored,disc_matches_formula,condition,verdict,agree";
}

inline std::string row_csv(const ScanRow& r) {
    std::string out;
    out += family_name(r.family);
    out += ',';
    out += r.t.get_str();
    out += ',';
    out += label_code(r.group);
    out += ',';
    out += r.disc.get_str();
    out += ',';
    out += r.disc_factored;
    out += ',';
    out += r.disc_matches_formula ? "true" : "false";
    out += ',';
    out += tristate_name(r.condition);
    out += ',';
    out += monogenic_status_name(r.verdict);
    out += ',';
    out += r.agree ? "true" : "false";
    return out;
}

struct ScanSummary {
    long rows = 0;
    long disagreements = 0;   // strict condition/verdict mismatches
    long contradictions = 0;  // definite-versus-definite mismatches
    long unknowns = 0;        // rows with an unknown condition or verdict
};

inline ScanSummary summarize(const std::vector<ScanRow>& rows) {
    ScanSummary s;
    s.rows = static_cast<long>(rows.size());
    for (const ScanRow& r : rows) {
        if (!r.agree) ++s.disagreements;
        const bool cond_def = r.condition != Tristate::Unknown;
        const bool verd_def = r.verdict != MonogenicStatus::Unknown;
        if (!cond_def || !verd_def) ++s.unknowns;
        if (cond_def && verd_def && !r.agree) ++s.contradictions;
    }
    return s;
}

struct ExemplarReport {
    std::string name;
    GaloisLabel got_group = GaloisLabel::C4;
    mpz_class got_disc;
    MonogenicStatus got_status = MonogenicStatus::Unknown;
    bool group_ok = false;
    bool disc_ok = false;
    bool monogenic_ok = false;
    bool pass() const { return group_ok && disc_ok && monogenic_ok; }
};

inline std::vector<ExemplarReport> verify_exemplars(const std::vector<Exemplar>& registry,
                                                    const Budget& budget = {},
                                                    const std::string& only = "") {
    std::vector<ExemplarReport> out;
    bool matched = only.empty();
    for (const Exemplar& ex : registry) {
        if (!only.empty() && ex.name != only) continue;
        matched = true;
        ExemplarReport rep;
        rep.name = ex.name;
        rep.got_group = classify(ex.poly, budget).first;
        rep.got_disc = discriminant(ex.poly);
        rep.got_status = is_monogenic(ex.poly, budget).status;
        rep.group_ok = rep.got_group == ex.expected_group;
        rep.disc_ok = rep.got_disc == ex.expected_disc;
        rep.monogenic_ok = rep.got_status == MonogenicStatus::Monogenic;
        out.push_back(std::move(rep));
    }
    if (!matched) throw std::invalid_argument("verify_exemplars: no exemplar named '" + only + "'");
    return out;
}

enum class OverlapPair { X5SmithB, X5SmithD, X5GSS, X2JonesC2C2, X3JonesD4 };

inline const char* overlap_pair_name(OverlapPair p) {
    switch (p) {
        case OverlapPair::X5SmithB: return "X5-vs-SmithB";
        case OverlapPair::X5SmithD: return "X5-vs-SmithD";
        case OverlapPair::X5GSS: return "X5-vs-GSS";
        case OverlapPair::X2JonesC2C2: return "X2-vs-JonesC2C2";
        case OverlapPair::X3JonesD4: return "X3-vs-JonesD4";
    }
    throw std::invalid_argument("overlap_pair_name: bad pair");
}

inline std::optional<OverlapPair> parse_overlap_pair(std::string_view s) {
    using P = OverlapPair;
    for (P p : {P::X5SmithB, P::X5SmithD, P::X5GSS, P::X2JonesC2C2, P::X3JonesD4})
        if (s == overlap_pair_name(p)) return p;
    return std::nullopt;
}

struct OverlapReport {
    OverlapPair pair = OverlapPair::X5SmithB;
    long bound = 0;
    long lhs_candidates = 0;  // condition-satisfying members on the X-family side
    long rhs_candidates = 0;  // admissible members (or parameter pairs) on the other side
    long collisions = 0;
    std::vector<std::pair<mpz_class, mpz_class>> collision_params;
    std::string reason;  // set for the valuation-based comparisons
};

namespace detail {

inline unsigned long two_adic_valuation(const mpz_class& n) {
    if (n == 0) throw std::invalid_argument("two_adic_valuation: zero");
    const mpz_class a = abs(n);
    return mpz_scan1(a.get_mpz_t(), 0);
}

}  // namespace detail

/* Compare discriminant reach of an X family against one of the literature
 * families, counting only members that satisfy their own monogenicity
 * conditions.  The Smith/GSS comparisons look for literal value collisions;
 * the Jones comparisons show the 2-adic valuations on the two sides never
 * meet, which rules out collisions wholesale.
 */
inline OverlapReport run_overlap(OverlapPair pair, long bound, const Budget& budget = {}) {
    if (bound < 1) throw std::invalid_argument("run_overlap: bound must be positive");
    OverlapReport rep;
    rep.pair = pair;
    rep.bound = bound;

    if (pair == OverlapPair::X5SmithB || pair == OverlapPair::X5SmithD ||
        pair == OverlapPair::X5GSS) {
        std::map<mpz_class, std::vector<long>> by_disc;
        for (long t = -bound; t <= bound; ++t) {
            if (condition_holds(FamilyId::X5, t, budget) != Tristate::True) continue;
            ++rep.lhs_candidates;
            by_disc[closed_form_disc(FamilyId::X5, t)].push_back(t);
        }
        const FamilyId other = pair == OverlapPair::X5SmithB   ? FamilyId::SmithB
                               : pair == OverlapPair::X5SmithD ? FamilyId::SmithD
                                                               : FamilyId::GSS;
        for (long u = -bound; u <= bound; ++u) {
            bool ok = true;
            if (other == FamilyId::SmithB) ok = smith_b_condition(u, budget) == Tristate::True;
            if (other == FamilyId::SmithD) ok = smith_d_condition(u, budget) == Tristate::True;
            if (!ok) continue;
            ++rep.rhs_candidates;
            const auto it = by_disc.find(closed_form_disc(other, u));
            if (it == by_disc.end()) continue;
            for (long t : it->second) {
                ++rep.collisions;
                rep.collision_params.emplace_back(t, u);
            }
        }
        return rep;
    }

    const bool mod9 = pair == OverlapPair::X2JonesC2C2;
    const FamilyId xfam = mod9 ? FamilyId::X2 : FamilyId::X3;
    const FamilyId jfam = mod9 ? FamilyId::JonesC2C2 : FamilyId::JonesD4Plus;
    const mpz_class pr_modulus = mod9 ? 9 : 25;

    std::set<unsigned long> lhs_v2;
    for (long t = -bound; t <= bound; ++t) {
        if (condition_holds(xfam, t, budget) != Tristate::True) continue;
        ++rep.lhs_candidates;
        lhs_v2.insert(detail::two_adic_valuation(closed_form_disc(xfam, t)));
    }
    std::vector<long> primes;
    for (std::uint32_t p : small_primes()) {
        if (static_cast<long>(p) > bound) break;
        primes.push_back(static_cast<long>(p));
    }
    for (long r : primes) {
        if (r < 3 || !is_primitive_root(r, pr_modulus, budget)) continue;
        for (long p : primes) {
            const Tristate cond = mod9 ? jones_c2c2_condition(r, p, budget)
                                       : jones_d4_condition(r, p, budget);
            if (cond != Tristate::True) continue;
            ++rep.rhs_candidates;
            const auto v = detail::two_adic_valuation(
                closed_form_disc(jfam, std::vector<mpz_class>{r, p}));
            if (lhs_v2.count(v)) {
                ++rep.collisions;
                rep.collision_params.emplace_back(r, p);
            }
        }
    }
    rep.reason = "2-adic valuation mismatch";
    return rep;
}

inline nlohmann::ordered_json overlap_json(const OverlapReport& rep) {
    nlohmann::ordered_json j;
    j["pair"] = overlap_pair_name(rep.pair);
    j["bound"] = rep.bound;
    j["lhs_candidates"] = rep.lhs_candidates;
    j["rhs_candidates"] = rep.rhs_candidates;
    j["collisions"] = rep.collisions;
    auto params = nlohmann::ordered_json::array();
    for (const auto& [a, b] : rep.collision_params)
        params.push_back({a.get_str(), b.get_str()});
    j["collision_params"] = params;
    if (!rep.reason.empty()) j["reason"] = rep.reason;
    return j;
}

}  // namespace qmg
