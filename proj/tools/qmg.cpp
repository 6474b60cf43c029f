#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "qmg/harness.hpp"

namespace {

constexpr int exit_ok = 0;        // requested checks all came out clean
constexpr int exit_disagree = 1;  // a definite mathematical disagreement
constexpr int exit_usage = 2;     // bad arguments or malformed input
constexpr int exit_unknown = 3;   // some verdict stayed undecided

nlohmann::ordered_json poly_header(const qmg::IntPoly& f) {
    nlohmann::ordered_json j;
    j["poly"] = qmg::format_poly(f);
    return j;
}

int cmd_classify(const std::string& text, const qmg::Budget& budget) {
    const qmg::IntPoly f = qmg::parse_poly(text);
    const auto [label, ev] = qmg::classify(f, budget);
    auto j = poly_header(f);
    j["group"] = qmg::label_code(label);
    j["group_name"] = qmg::group_name(label);
    j["disc"] = ev.disc.get_str();
    const auto fd = qmg::factor(ev.disc, budget);
    if (fd.complete) j["disc_factored"] = qmg::format_factored(fd);
    j["disc_is_square"] = ev.disc_is_square;
    j["resolvent"] = qmg::format_poly(ev.resolvent);
    auto roots = nlohmann::ordered_json::array();
    for (const auto& r : ev.resolvent_roots) roots.push_back(r.get_str());
    j["resolvent_roots"] = roots;
    std::cout << j.dump() << "\n";
    return exit_ok;
}

int cmd_resolvent(const std::string& text) {
    const qmg::IntPoly f = qmg::parse_poly(text);
    auto j = poly_header(f);
    j["resolvent"] = qmg::format_poly(qmg::resolvent_cubic(f));
    std::cout << j.dump() << "\n";
    return exit_ok;
}

int cmd_disc(const std::string& text, const qmg::Budget& budget) {
    const qmg::IntPoly f = qmg::parse_poly(text);
    auto j = poly_header(f);
    const mpz_class d = qmg::discriminant(f);
    j["disc"] = d.get_str();
    if (d != 0) {
        const auto fd = qmg::factor(d, budget);
        if (fd.complete) j["disc_factored"] = qmg::format_factored(fd);
    }
    std::cout << j.dump() << "\n";
    return exit_ok;
}

int cmd_monogenic(const std::string& text, const qmg::Budget& budget) {
    const qmg::IntPoly f = qmg::parse_poly(text);
    const auto v = qmg::is_monogenic(f, budget);
    auto j = poly_header(f);
    j["status"] = qmg::monogenic_status_name(v.status);
    if (v.witness_prime) j["witness_prime"] = v.witness_prime->get_str();
    auto checked = nlohmann::ordered_json::array();
    for (const auto& [q, divides] : v.checked_primes)
        checked.push_back({{"prime", q.get_str()}, {"divides_index", divides}});
    j["checked_primes"] = checked;
    if (v.unfactored_cofactor) j["unfactored_cofactor"] = v.unfactored_cofactor->get_str();
    if (v.field_disc) j["field_disc"] = v.field_disc->get_str();
    std::cout << j.dump() << "\n";
    return v.status == qmg::MonogenicStatus::Unknown ? exit_unknown : exit_ok;
}

std::pair<long, long> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("range must look like MIN:MAX, got '" + text + "'");
    std::size_t used = 0;
    long lo = 0, hi = 0;
    try {
        lo = std::stol(text.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("");
        const std::string rest = text.substr(colon + 1);
        hi = std::stol(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("range must look like MIN:MAX, got '" + text + "'");
    }
    if (lo > hi) throw std::invalid_argument("range is empty: " + text);
    return {lo, hi};
}

int cmd_scan(const std::string& family, const std::string& range, int workers, bool csv,
             const qmg::Budget& budget) {
    const auto id = qmg::parse_family(family);
    if (!id) throw std::invalid_argument("unknown family '" + family + "'");
    const auto [lo, hi] = parse_range(range);
    const auto rows = qmg::run_scan(*id, lo, hi, workers, budget);
    if (csv) {
        std::cout << qmg::csv_header() << "\n";
        for (const auto& r : rows) std::cout << qmg::row_csv(r) << "\n";
    } else {
        for (const auto& r : rows) std::cout << qmg::row_json(r).dump() << "\n";
    }
    const auto s = qmg::summarize(rows);
    nlohmann::ordered_json sj;
    sj["rows"] = s.rows;
    sj["disagreements"] = s.disagreements;
    sj["contradictions"] = s.contradictions;
    sj["unknowns"] = s.unknowns;
    std::cerr << sj.dump() << "\n";
    if (s.contradictions > 0) return exit_disagree;
    if (s.disagreements > 0 || s.unknowns > 0) return exit_unknown;
    return exit_ok;
}

int cmd_verify_exemplars(const std::string& only, const qmg::Budget& budget) {
    const auto reports = qmg::verify_exemplars(qmg::exemplars(), budget, only);
    bool hard_fail = false;
    bool soft_unknown = false;
    long passed = 0;
    for (const auto& rep : reports) {
        nlohmann::ordered_json j;
        j["name"] = rep.name;
        j["pass"] = rep.pass();
        j["group"] = qmg::label_code(rep.got_group);
        j["disc"] = rep.got_disc.get_str();
        j["status"] = qmg::monogenic_status_name(rep.got_status);
        j["group_ok"] = rep.group_ok;
        j["disc_ok"] = rep.disc_ok;
        j["monogenic_ok"] = rep.monogenic_ok;
        std::cout << j.dump() << "\n";
        if (rep.pass()) ++passed;
        if (rep.got_status == qmg::MonogenicStatus::Unknown) soft_unknown = true;
        if (!rep.group_ok || !rep.disc_ok ||
            rep.got_status == qmg::MonogenicStatus::NotMonogenic)
            hard_fail = true;
    }
    nlohmann::ordered_json sj;
    sj["exemplars"] = static_cast<long>(reports.size());
    sj["passed"] = passed;
    std::cerr << sj.dump() << "\n";
    if (hard_fail) return exit_disagree;
    if (soft_unknown) return exit_unknown;
    return exit_ok;
}

int cmd_overlap(const std::string& pair, long bound, const qmg::Budget& budget) {
    const auto p = qmg::parse_overlap_pair(pair);
    if (!p) throw std::invalid_argument("unknown pair '" + pair + "'");
    const auto rep = qmg::run_overlap(*p, bound, budget);
    std::cout << qmg::overlap_json(rep).dump() << "\n";
    return rep.collisions == 0 ? exit_ok : exit_disagree;
}

int cmd_frobenius(const std::string& text, unsigned long bound) {
    const qmg::IntPoly f = qmg::parse_poly(text);
    const auto prof = qmg::frobenius_cycle_types(f, bound);
    auto j = poly_header(f);
    j["prime_bound"] = bound;
    j["primes_used"] = prof.primes_used;
    nlohmann::ordered_json counts;
    for (qmg::CycleType t : {qmg::CycleType::T1111, qmg::CycleType::T112, qmg::CycleType::T22,
                             qmg::CycleType::T13, qmg::CycleType::T4}) {
        const auto it = prof.counts.find(t);
        counts[qmg::cycle_type_name(t)] = it == prof.counts.end() ? 0 : it->second;
    }
    j["counts"] = counts;
    if (prof.inferred)
        j["inferred"] = qmg::label_code(*prof.inferred);
    else
        j["inferred"] = nullptr;
    std::cout << j.dump() << "\n";
    return prof.inferred ? exit_ok : exit_unknown;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Galois groups and monogenicity of monic integer quartics"};
    app.require_subcommand(1);

    qmg::Budget defaults;
    unsigned long long budget_iters = defaults.rho_iterations;
    unsigned long seed = defaults.seed;
    auto* budget_opt =
        app.add_option("--budget", budget_iters, "factoring effort (Pollard rho iterations)");
    app.add_option("--seed", seed, "factoring RNG seed");

    std::string poly_text;
    std::string family;
    std::string range;
    std::string pair;
    std::string only;
    int workers = 1;
    bool csv = false;
    long bound = 1000;
    unsigned long prime_bound = 10000;

    auto* c_classify = app.add_subcommand("classify", "Galois group of an irreducible quartic");
    c_classify->add_option("--poly", poly_text, "coefficients, descending degree")->required();

    auto* c_resolvent = app.add_subcommand("resolvent", "resolvent cubic of a quartic");
    c_resolvent->add_option("--poly", poly_text, "coefficients, descending degree")->required();

    auto* c_disc = app.add_subcommand("disc", "discriminant of a polynomial");
    c_disc->add_option("--poly", poly_text, "coefficients, descending degree")->required();

    auto* c_monogenic = app.add_subcommand("monogenic", "Dedekind monogenicity check");
    c_monogenic->add_option("--poly", poly_text, "coefficients, descending degree")->required();

    auto* c_scan = app.add_subcommand("scan", "sweep a family, comparing verdicts to conditions");
    c_scan->add_option("--family", family, "X2, X3, X4, or X5")->required();
    c_scan->add_option("--range", range, "inclusive parameter range MIN:MAX")->required();
    c_scan->add_option("--workers", workers, "worker threads");
    c_scan->add_flag("--csv", csv, "emit CSV instead of JSON lines");

    auto* c_exemplars = app.add_subcommand("verify-exemplars", "check the cyclic exemplars");
    c_exemplars->add_option("--only", only, "restrict to one exemplar by name");

    auto* c_overlap = app.add_subcommand("overlap", "discriminant overlap between two families");
    c_overlap->add_option("--pair", pair, "e.g. X5-vs-SmithB")->required();
    c_overlap->add_option("--bound", bound, "parameter bound");

    auto* c_frobenius = app.add_subcommand("frobenius", "factorization shapes modulo primes");
    c_frobenius->add_option("--poly", poly_text, "coefficients, descending degree")->required();
    c_frobenius->add_option("--bound", prime_bound, "use primes up to this bound");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (budget_opt->count() == 0) {
        if (const char* env = std::getenv("QMG_BUDGET"); env != nullptr && *env != '\0') {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (end == nullptr || *end != '\0') {
                std::cerr << "error: QMG_BUDGET is not a number: '" << env << "'\n";
                return exit_usage;
            }
            budget_iters = v;
        }
    }
    const qmg::Budget budget{budget_iters, seed};

    try {
        if (*c_classify) return cmd_classify(poly_text, budget);
        if (*c_resolvent) return cmd_resolvent(poly_text);
        if (*c_disc) return cmd_disc(poly_text, budget);
        if (*c_monogenic) return cmd_monogenic(poly_text, budget);
        if (*c_scan) return cmd_scan(family, range, workers, csv, budget);
        if (*c_exemplars) return cmd_verify_exemplars(only, budget);
        if (*c_overlap) return cmd_overlap(pair, bound, budget);
        if (*c_frobenius) return cmd_frobenius(poly_text, prime_bound);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_unknown;
    }
    return exit_usage;
}
