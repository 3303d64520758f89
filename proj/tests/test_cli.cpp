// Integration tests that drive the installed CLI binary end to end.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct run_result {
    int exit_code = -1;
    std::string output; // stdout and stderr interleaved
};

run_result run(const std::string& args, const std::string& stdin_text = "") {
    std::string command = std::string(PARALOGIC_CLI_PATH) + " " + args + " 2>&1";
    if (!stdin_text.empty())
        command = "printf '%s' '" + stdin_text + "' | " + command;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    run_result result;
    char buffer[4096];
    while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe))
        result.output.append(buffer, n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("check: verdicts drive the exit code") {
    run_result valid = run("check --logic cl 'p & q |- p'");
    CHECK(valid.exit_code == 0);
    CHECK(valid.output == "VALID\n");

    run_result invalid = run("check --logic bdl 'p, ~p |- q'");
    CHECK(invalid.exit_code == 1);
    CHECK(invalid.output == "INVALID\ncountermodel: p = b, q = n\n");
}

TEST_CASE("check: the four logics disagree as documented") {
    CHECK(run("check --logic cl 'p, ~p |- q'").exit_code == 0);
    CHECK(run("check --logic lp 'p, ~p |- q'").exit_code == 1);
    CHECK(run("check --logic k3 'p, ~p |- q'").exit_code == 0);
    CHECK(run("check --logic bdl 'p, ~p |- q'").exit_code == 1);
}

TEST_CASE("check: --witness prints the proof tree") {
    run_result r = run("check --logic cl --witness 'p & q |- p'");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "VALID\n"
                      "p & q |- p  (and_left on p & q)\n"
                      "  p, q |- p  (closed: overlap on p)\n");

    run_result inv = run("check --logic bdl --witness 'p, ~p |- q'");
    CHECK(inv.exit_code == 1);
    CHECK(contains(inv.output, "INVALID"));
    CHECK(contains(inv.output, "countermodel: p = b, q = n"));
    CHECK(contains(inv.output, "open leaf: p, ~p |- q"));
    CHECK(contains(inv.output, "leaf countermodel: p = b, q = f"));
}

TEST_CASE("check: general engine is classical only") {
    run_result ok = run("check --logic cl --engine general '|- ~#'");
    CHECK(ok.exit_code == 0);

    run_result bad = run("check --logic bdl --engine general 'p |- p'");
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.output, "general"));
}

TEST_CASE("check: json output") {
    run_result r = run("--format json check --logic lp 'p |- p & q'");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, R"("command":"check")"));
    CHECK(contains(r.output, R"("logic":"lp")"));
    CHECK(contains(r.output, R"("sequent":"p |- p & q")"));
    CHECK(contains(r.output, R"("valid":false)"));
    CHECK(contains(r.output, R"("countermodel":{"p":"t","q":"f"})"));
    CHECK(contains(r.output, R"("elapsed_us":)"));
    CHECK(r.output.back() == '\n');
}

TEST_CASE("classify: one verdict per logic") {
    run_result r = run("classify 'p, ~p |- q'");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "cl\tVALID\nlp\tINVALID\nk3\tVALID\nbdl\tINVALID\n");

    run_result json = run("--format json classify '|- p | ~p'");
    CHECK(contains(json.output,
                   R"("verdicts":{"cl":true,"lp":true,"k3":false,"bdl":false})"));
}

TEST_CASE("table: text and json") {
    run_result r = run("table --logic lp '~p'");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "p | ~p\n"
                      "--+---\n"
                      "t | f\n"
                      "b | b *\n"
                      "f | t *\n");

    run_result json = run("--format json table --logic cl 'p'");
    CHECK(json.exit_code == 0);
    CHECK(contains(json.output, R"("command":"table")"));
    CHECK(contains(json.output, R"("rows":[)"));
}

TEST_CASE("embed: shows translation and verdicts") {
    run_result r = run("embed 'p, ~p |- q'");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "source:     p, ~p |- q"));
    CHECK(contains(r.output, "translated: p, p_neg |- q"));
    CHECK(contains(r.output, "bdl(source):     INVALID"));
    CHECK(contains(r.output, "cl(translated):  INVALID"));
}

TEST_CASE("diff: streams the gap with countermodels") {
    run_result r = run("diff --from cl --to bdl --limit 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "~p |- p -> q  ::  p = b, q = n"));
    CHECK(contains(r.output, "found 2"));

    run_result json = run("--format json diff --from cl --to lp --limit 1");
    CHECK(json.exit_code == 0);
    CHECK(contains(json.output, R"("sequent":)"));
    CHECK(contains(json.output, R"("summary":{"scanned":)"));
}

TEST_CASE("diff: empty gap for equal logics") {
    run_result r = run("diff --from cl --to cl --atoms 1 --depth 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "found 0"));
}

TEST_CASE("selftest: small run passes") {
    run_result r =
        run("selftest --atoms 1 --depth 1 --per-side 1 --axiom-samples 50");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "selftest: PASS"));
    CHECK(contains(r.output, "prover/matrix disagreements:  0"));
}

TEST_CASE("stdin input via -") {
    run_result r = run("check --logic cl -", "p & q |- p");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "VALID\n");

    run_result c = run("classify -", "p & q |- p");
    CHECK(c.exit_code == 0);
    CHECK(contains(c.output, "bdl\tVALID"));
}

TEST_CASE("parse errors exit 2 with offsets") {
    run_result r = run("check --logic cl 'p & |- q'");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "syntax error at offset 4"));

    run_result f = run("table --logic cl 'p @'");
    CHECK(f.exit_code == 2);
    CHECK(contains(f.output, "offset 2"));
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("check --logic xy 'p |- p'").exit_code == 2);
    CHECK(run("check 'p |- p'").exit_code == 2);     // missing --logic
    CHECK(run("frobnicate").exit_code == 2);         // unknown subcommand
    CHECK(run("check --logic cl").exit_code == 2);   // missing sequent
    CHECK(run("--format yaml classify 'p |- p'").exit_code == 2);
}

TEST_CASE("embedding collisions exit 2") {
    run_result r = run("embed 'p_neg |- q'");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "p_neg"));
}

TEST_CASE("resource limits exit 3") {
    run_result r = run(
        "table --logic cl 'a1 | a2 | a3 | a4 | a5 | a6 | a7 | a8 | a9'");
    CHECK(r.exit_code == 3);
    CHECK(contains(r.output, "error"));

    // Lowering the cap below the requirement trips the same path.
    run_result capped = run("--max-atoms 1 table --logic cl 'p & q'");
    CHECK(capped.exit_code == 3);
}

TEST_CASE("help exits 0") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("check --help").exit_code == 0);
}
