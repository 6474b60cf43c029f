#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>

#include <gmpxx.h>

namespace {

struct CmdResult {
    int status = -1;
    std::string out;
};

// Runs the CLI through the shell; an env prefix like "QMG_BUDGET=0" may be
// passed in front.  stderr is dropped unless the caller redirects it.
CmdResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env.empty() ? std::string() : env + " ";
    cmd += QMG_CLI_PATH;
    cmd += " " + args + " 2>/dev/null";
    CmdResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    const int raw = pclose(pipe);
    res.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return res;
}

}  // namespace

TEST_CASE("cli classify output is byte-stable") {
    const auto r = run_cli("classify --poly \"1 0 4 0 1\"");
    REQUIRE(r.status == 0);
    REQUIRE(r.out ==
            "{\"poly\":\"1 0 4 0 1\",\"group\":\"4T2\",\"group_name\":\"C2xC2\","
            "\"disc\":\"2304\",\"disc_factored\":\"2^8*3^2\",\"disc_is_square\":true,"
            "\"resolvent\":\"1 -4 -4 16\",\"resolvent_roots\":[\"-2\",\"2\",\"4\"]}\n");
}

TEST_CASE("cli resolvent and disc") {
    const auto r1 = run_cli("resolvent --poly \"1 0 4 0 1\"");
    REQUIRE(r1.status == 0);
    REQUIRE(r1.out == "{\"poly\":\"1 0 4 0 1\",\"resolvent\":\"1 -4 -4 16\"}\n");

    const auto r2 = run_cli("disc --poly \"1 -10 25 -20 5\"");
    REQUIRE(r2.status == 0);
    REQUIRE(r2.out == "{\"poly\":\"1 -10 25 -20 5\",\"disc\":\"2000\",\"disc_factored\":\"2^4*5^3\"}\n");
}

TEST_CASE("cli monogenic verdicts") {
    const auto bad = run_cli("monogenic --poly \"1 0 -5\"");
    REQUIRE(bad.status == 0);
    REQUIRE(bad.out ==
            "{\"poly\":\"1 0 -5\",\"status\":\"not_monogenic\",\"witness_prime\":\"2\","
            "\"checked_primes\":[{\"prime\":\"2\",\"divides_index\":true}]}\n");

    const auto good = run_cli("monogenic --poly \"1 -1 -1\"");
    REQUIRE(good.status == 0);
    REQUIRE(good.out ==
            "{\"poly\":\"1 -1 -1\",\"status\":\"monogenic\",\"checked_primes\":[],"
            "\"field_disc\":\"5\"}\n");
}

TEST_CASE("cli scan output and worker independence") {
    const auto a = run_cli("scan --family X3 --range -15:15 --workers 1");
    const auto b = run_cli("scan --family X3 --range -15:15 --workers 6");
    REQUIRE(a.status == 0);
    REQUIRE(b.status == 0);
    REQUIRE(a.out == b.out);
    REQUIRE(std::count(a.out.begin(), a.out.end(), '\n') == 31);

    const auto c = run_cli("scan --family X2 --range 1:1 --csv");
    REQUIRE(c.status == 0);
    REQUIRE(c.out ==
            "family,t,group,disc,disc_factored,disc_matches_formula,condition,verdict,agree\n"
            "X2,1,4T2,2304,2^8*3^2,true,true,monogenic,true\n");

    // Repeated runs are byte-identical.
    const auto a2 = run_cli("scan --family X3 --range -15:15 --workers 1");
    REQUIRE(a.out == a2.out);
}

TEST_CASE("cli verify-exemplars") {
    const auto all = run_cli("verify-exemplars");
    REQUIRE(all.status == 0);
    REQUIRE(std::count(all.out.begin(), all.out.end(), '\n') == 8);
    REQUIRE(all.out.find("\"pass\":false") == std::string::npos);

    const auto one = run_cli("verify-exemplars --only f_2");
    REQUIRE(one.status == 0);
    REQUIRE(one.out ==
            "{\"name\":\"f_2\",\"pass\":true,\"group\":\"4T1\",\"disc\":\"2000\","
            "\"status\":\"monogenic\",\"group_ok\":true,\"disc_ok\":true,"
            "\"monogenic_ok\":true}\n");

    REQUIRE(run_cli("verify-exemplars --only missing").status == 2);
}

TEST_CASE("cli overlap") {
    const auto r = run_cli("overlap --pair X5-vs-SmithB --bound 60");
    REQUIRE(r.status == 0);
    REQUIRE(r.out.find("\"collisions\":0") != std::string::npos);

    const auto j = run_cli("overlap --pair X3-vs-JonesD4 --bound 40");
    REQUIRE(j.status == 0);
    REQUIRE(j.out.find("\"reason\":\"2-adic valuation mismatch\"") != std::string::npos);
}

TEST_CASE("cli frobenius") {
    const auto r = run_cli("frobenius --poly \"1 0 0 0 1\" --bound 10000");
    REQUIRE(r.status == 0);
    REQUIRE(r.out ==
            "{\"poly\":\"1 0 0 0 1\",\"prime_bound\":10000,\"primes_used\":1228,"
            "\"counts\":{\"1111\":295,\"112\":0,\"22\":933,\"13\":0,\"4\":0},"
            "\"inferred\":\"4T2\"}\n");
}

TEST_CASE("cli exit codes") {
    REQUIRE(run_cli("nonsense").status == 2);
    REQUIRE(run_cli("").status == 2);
    REQUIRE(run_cli("--help").status == 0);
    REQUIRE(run_cli("classify --poly \"1 x\"").status == 2);
    REQUIRE(run_cli("classify --poly \"1 0 -1 0 0\"").status == 2);  // reducible
    REQUIRE(run_cli("scan --family X9 --range 0:1").status == 2);
    REQUIRE(run_cli("scan --family GSS --range 0:1").status == 2);
    REQUIRE(run_cli("scan --family X2 --range 5:1").status == 2);
    REQUIRE(run_cli("scan --family X2 --range 0..1").status == 2);
    REQUIRE(run_cli("overlap --pair X1-vs-X2").status == 2);
    REQUIRE(run_cli("disc --poly \"1 1\"", "QMG_BUDGET=banana").status == 2);
}

TEST_CASE("cli budget: flag beats environment") {
    // Semiprime with two certified Mersenne prime factors; the trial
    // division sieve cannot touch it, so splitting needs rho iterations.
    const mpz_class m31 = (mpz_class(1) << 31) - 1;
    const mpz_class m89 = (mpz_class(1) << 89) - 1;
    const mpz_class n = m31 * m89;
    const std::string poly = "\"1 0 -" + n.get_str() + "\"";

    const auto rich = run_cli("disc --poly " + poly);
    REQUIRE(rich.status == 0);
    REQUIRE(rich.out.find("disc_factored") != std::string::npos);

    const auto starved = run_cli("disc --budget 0 --poly " + poly);
    REQUIRE(starved.status == 0);
    REQUIRE(starved.out.find("disc_factored") == std::string::npos);

    const auto env_starved = run_cli("disc --poly " + poly, "QMG_BUDGET=0");
    REQUIRE(env_starved.status == 0);
    REQUIRE(env_starved.out.find("disc_factored") == std::string::npos);

    // An explicit flag overrides the starved environment, and vice versa.
    const auto flag_wins = run_cli("disc --budget 67108864 --poly " + poly, "QMG_BUDGET=0");
    REQUIRE(flag_wins.status == 0);
    REQUIRE(flag_wins.out.find("disc_factored") != std::string::npos);

    const auto flag_wins2 = run_cli("disc --budget 0 --poly " + poly, "QMG_BUDGET=67108864");
    REQUIRE(flag_wins2.status == 0);
    REQUIRE(flag_wins2.out.find("disc_factored") == std::string::npos);
}
