#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paralogic/embedding.hpp"
#include "paralogic/enumerate.hpp"
#include "paralogic/parser.hpp"
#include "paralogic/printer.hpp"
#include "paralogic/prover.hpp"
#include "paralogic/semantics.hpp"

#include <stdexcept>
#include <vector>

using namespace paralogic;

namespace {
formula nnf_of(const char* text) { return nnf(parse_formula(text)).get(); }
} // namespace

TEST_CASE("is_nnf recognizes literal-level negation only") {
    CHECK(is_nnf(parse_formula("p")));
    CHECK(is_nnf(parse_formula("~p")));
    CHECK(is_nnf(parse_formula("#")));
    CHECK(is_nnf(parse_formula("~p & (q | ~r)")));
    CHECK(is_nnf(parse_formula("~p -> ~q")));
    CHECK_FALSE(is_nnf(parse_formula("~~p")));
    CHECK_FALSE(is_nnf(parse_formula("~(p & q)")));
    CHECK_FALSE(is_nnf(parse_formula("~#")));
    CHECK_FALSE(is_nnf(parse_formula("p & ~(q | r)")));
}

TEST_CASE("nnf_formula constructor validates") {
    CHECK_NOTHROW(nnf_formula(parse_formula("~p & q")));
    CHECK_THROWS_AS(nnf_formula(parse_formula("~(p & q)")),
                    std::invalid_argument);
}

TEST_CASE("nnf rewrites, case by case") {
    CHECK(nnf_of("~~p") == parse_formula("p"));
    CHECK(nnf_of("~~~p") == parse_formula("~p"));
    CHECK(nnf_of("~(p & q)") == parse_formula("~p | ~q"));
    CHECK(nnf_of("~(p | q)") == parse_formula("~p & ~q"));
    CHECK(nnf_of("~(p -> q)") == parse_formula("p & ~q"));
    CHECK(nnf_of("~#") == parse_formula("# -> #"));
    CHECK(nnf_of("p") == parse_formula("p"));
    CHECK(nnf_of("~p") == parse_formula("~p"));
    CHECK(nnf_of("#") == parse_formula("#"));
    // Positive connectives recurse without changing shape.
    CHECK(nnf_of("p -> ~(q & r)") == parse_formula("p -> ~q | ~r"));
    CHECK(nnf_of("~(p & (q | #))") ==
          parse_formula("~p | ~q & (# -> #)"));
    CHECK(nnf_of("~(p -> ~(q | r))") == parse_formula("p & (q | r)"));
}

TEST_CASE("nnf output is in nnf, and nnf is idempotent") {
    for (const formula& f : enumerate_formulas(2, 2)) {
        formula once = nnf(f).get();
        CHECK(is_nnf(once));
        CHECK(nnf(once).get() == once);
    }
}

TEST_CASE("nnf preserves designation in every logic") {
    std::vector<formula> stock = enumerate_formulas(2, 2);
    for (logic_id id : all_logics) {
        const matrix& m = matrix::for_logic(id);
        for (const formula& f : stock) {
            formula g = nnf(f).get();
            for_each_valuation(m, atoms_of(f), [&](const valuation& v) {
                REQUIRE(m.designated(eval(m, v, f)) ==
                        m.designated(eval(m, v, g)));
                return true;
            });
        }
    }
}

TEST_CASE("nnf does not preserve values, only designation") {
    // ~(p -> q) and its nnf p & ~q differ at p = b, q = n.
    valuation v;
    v.assign("p", truth_value::b);
    v.assign("q", truth_value::n);
    formula before = parse_formula("~(p -> q)");
    formula after = nnf(before).get();
    CHECK(after == parse_formula("p & ~q"));
    CHECK(eval(logic_id::bdl, v, before) == truth_value::n);
    CHECK(eval(logic_id::bdl, v, after) == truth_value::f);
}

TEST_CASE("rename_literals maps negated atoms to fresh positives") {
    CHECK(rename_literals(nnf(parse_formula("~p"))) ==
          parse_formula("p_neg"));
    CHECK(rename_literals(nnf(parse_formula("~(p & q)"))) ==
          parse_formula("p_neg | q_neg"));
    CHECK(rename_literals(nnf(parse_formula("p & ~p"))) ==
          parse_formula("p & p_neg"));
    CHECK(rename_literals(nnf(parse_formula("p | q"))) ==
          parse_formula("p | q"));
    CHECK(rename_literals(nnf(parse_formula("~#"))) ==
          parse_formula("# -> #"));
}

TEST_CASE("renamed output contains no negation") {
    for (const formula& f : enumerate_formulas(2, 2)) {
        formula g = embed_formula(f);
        // No negation anywhere: nnf then rename removes every ~.
        std::vector<formula> todo = {g};
        while (!todo.empty()) {
            formula cur = todo.back();
            todo.pop_back();
            REQUIRE(cur.kind() != connective::negation);
            if (cur.is_atom() || cur.is_falsum())
                continue;
            todo.push_back(cur.lhs());
            todo.push_back(cur.rhs());
        }
    }
}

TEST_CASE("reserved suffix collisions are rejected") {
    CHECK_THROWS_AS(rename_literals(nnf(parse_formula("p_neg"))),
                    atom_collision_error);
    CHECK_THROWS_AS(embed_formula(parse_formula("~q_neg | p")),
                    atom_collision_error);
    CHECK_THROWS_AS(embed_sequent(parse_sequent("p_neg |- q")),
                    atom_collision_error);
    // Only the exact suffix is reserved.
    CHECK_NOTHROW(embed_formula(parse_formula("p_negative")));
    CHECK_NOTHROW(embed_formula(parse_formula("neg | p_ne")));
}

TEST_CASE("embed_sequent translates both sides") {
    CHECK(embed_sequent(parse_sequent("p, ~p |- q")) ==
          parse_sequent("p, p_neg |- q"));
    CHECK(embed_sequent(parse_sequent("|- p | ~p")) ==
          parse_sequent("|- p | p_neg"));
    CHECK(embed_sequent(parse_sequent("~(p & q) |- ~p | ~q")) ==
          parse_sequent("p_neg | q_neg |- p_neg | q_neg"));
    CHECK(embed_sequent(parse_sequent("|-")) == parse_sequent("|-"));
}

TEST_CASE("embedding preserves and reflects validity") {
    // Both directions of the biconditional, exhaustively over singleton
    // sides from the depth-1 stock plus hand-picked multi-member cases.
    std::vector<formula> stock = enumerate_formulas(2, 1);
    prover_options fast;
    fast.build_proof = false;
    for_each_sequent_index(
        stock.size(), 1,
        [&](std::span<const std::size_t> li, std::span<const std::size_t> ri) {
            sequent s = make_sequent(stock, li, ri);
            REQUIRE(prove(logic_id::bdl, s, fast).valid() ==
                    prove(logic_id::cl, embed_sequent(s), fast).valid());
            return true;
        });

    for (const char* text :
         {"p, ~p |- q", "|- p | ~p", "~(p & q) |- ~p | ~q",
          "p -> q, q -> r |- p -> r", "p, ~p |- q, ~q",
          "~~p, ~q |- p & ~q", "|- ((p -> q) -> p) -> p"}) {
        sequent s = parse_sequent(text);
        CHECK(prove(logic_id::bdl, s).valid() ==
              prove(logic_id::cl, embed_sequent(s)).valid());
    }
}

TEST_CASE("embedding keeps classically divergent verdicts divergent") {
    // p, ~p |- q is classically valid but its translation is not: the
    // translation decouples p from p_neg.
    sequent s = parse_sequent("p, ~p |- q");
    CHECK(prove(logic_id::cl, s).valid());
    CHECK_FALSE(prove(logic_id::cl, embed_sequent(s)).valid());
}

TEST_CASE("embedding is stable under re-embedding of positive formulas") {
    // A negation-free formula with no reserved atoms embeds to itself.
    for (const char* text : {"p", "p & q", "p -> q | #", "(p | q) -> p"}) {
        formula f = parse_formula(text);
        CHECK(embed_formula(f) == f);
    }
}
