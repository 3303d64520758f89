#include "paralogic/selfcheck.hpp"

#include "paralogic/printer.hpp"

#include <algorithm>
#include <random>

namespace paralogic {

namespace {

std::size_t ix(logic_id id) { return static_cast<std::size_t>(id); }

void note(std::vector<std::string>& failures, std::string message) {
    if (failures.size() < 16)
        failures.push_back(std::move(message));
}

} // namespace

designation_oracle::designation_oracle(const std::vector<formula>& stock,
                                       std::size_t atom_count)
    : atom_count_(atom_count) {
    if (atom_count > 3)
        throw resource_limit_error(
            "designation oracle supports at most 3 atoms (64-bit grid), "
            "requested " +
                std::to_string(atom_count),
            3, atom_count);
    std::vector<std::string> atoms = enumeration_atoms(atom_count);
    for (logic_id id : all_logics) {
        const matrix& m = matrix::for_logic(id);
        std::vector<valuation> grid;
        for_each_valuation(m, atoms, [&](const valuation& v) {
            grid.push_back(v);
            return true;
        });
        full_[ix(id)] = grid.size() == 64
                            ? ~std::uint64_t{0}
                            : (std::uint64_t{1} << grid.size()) - 1;
        std::vector<std::uint64_t>& masks = masks_[ix(id)];
        masks.assign(stock.size(), 0);
        for (std::size_t fi = 0; fi < stock.size(); ++fi) {
            std::uint64_t mask = 0;
            for (std::size_t vi = 0; vi < grid.size(); ++vi)
                if (m.designated(eval(m, grid[vi], stock[fi])))
                    mask |= std::uint64_t{1} << vi;
            masks[fi] = mask;
        }
    }
}

namespace {

// Termination measure for the calculus: atoms and falsum cost 1,
// negation adds 1, binary connectives add 2.  Every rule strictly
// decreases the sequent total (plain node counts would not: the
// de-Morgan-style rules trade one binary connective for one extra
// negation per operand).
std::uint64_t measure(const formula::node* n) {
    switch (n->kind) {
    case connective::atom:
    case connective::falsum:
        return 1;
    case connective::negation:
        return measure(n->lhs.get()) + 1;
    default:
        return measure(n->lhs.get()) + measure(n->rhs.get()) + 2;
    }
}

std::uint64_t measure(const sequent& s) {
    std::uint64_t total = 0;
    for (const formula& f : s.left())
        total += measure(f.raw());
    for (const formula& f : s.right())
        total += measure(f.raw());
    return total;
}

// Structural audit of a proof tree: inner nodes strictly decrease the
// termination measure toward the leaves, no rule has more than two
// premises, leaves carry a closure reason.
bool audit_proof(const proof_node& node) {
    if (node.is_leaf())
        return true;
    if (node.premises().empty() || node.premises().size() > 2)
        return false;
    for (const proof_node& child : node.premises()) {
        if (measure(child.conclusion()) >= measure(node.conclusion()))
            return false;
        if (!audit_proof(child))
            return false;
    }
    return true;
}

// True iff v refutes s under the logic's matrix with every value inside
// the carrier.
bool refutes(logic_id id, const valuation& v, const sequent& s) {
    const matrix& m = matrix::for_logic(id);
    for (const auto& [atom, value] : v)
        if (!m.in_carrier(value))
            return false;
    for (const formula& f : s.left())
        if (!m.designated(eval(m, v, f)))
            return false;
    for (const formula& f : s.right())
        if (m.designated(eval(m, v, f)))
            return false;
    return true;
}

struct battery_state {
    const battery_params& params;
    const std::vector<formula>& stock;
    const std::vector<formula>& embedded;
    const designation_oracle& oracle;
    battery_report report;

    void check_one(std::span<const std::size_t> left,
                   std::span<const std::size_t> right) {
        const std::uint64_t index = report.sequents++;
        const bool audit =
            params.audit_all_proofs ||
            (params.audit_stride != 0 && index % params.audit_stride == 0);
        const bool crosscheck = params.crosscheck_stride != 0 &&
                                index % params.crosscheck_stride == 0;

        sequent s = make_sequent(stock, left, right);
        prover_options opts;
        opts.build_proof = audit;

        std::array<bool, 4> valid{};
        std::array<proof_result, 4> results = {
            prove(logic_id::cl, s, opts), prove(logic_id::lp, s, opts),
            prove(logic_id::k3, s, opts), prove(logic_id::bdl, s, opts)};
        for (logic_id id : all_logics) {
            const proof_result& r = results[ix(id)];
            valid[ix(id)] = r.valid();
            if (r.valid()) {
                ++report.valid_count[ix(id)];
                if (audit) {
                    ++report.proofs_audited;
                    if (!r.proof() || r.proof()->conclusion() != s ||
                        !audit_proof(*r.proof())) {
                        ++report.proof_audit_failures;
                        note(report.failures, "proof audit failed: " +
                                                  to_string(s) + " [" +
                                                  std::string(name_of(id)) +
                                                  "]");
                    }
                }
            } else {
                ++report.invalid_verdicts;
                if (!r.counter() || !refutes(id, *r.counter(), s)) {
                    ++report.countermodel_failures;
                    note(report.failures,
                         "countermodel failed to refute: " + to_string(s) +
                             " [" + std::string(name_of(id)) + "] " +
                             (r.counter() ? to_string(*r.counter())
                                          : std::string("<missing>")));
                }
            }
            // Criterion: prover vs matrix oracle.
            if (oracle.consequence(id, left, right) != r.valid()) {
                ++report.prover_matrix_disagreements;
                note(report.failures,
                     "prover/matrix disagreement: " + to_string(s) + " [" +
                         std::string(name_of(id)) + "] prover=" +
                         (r.valid() ? "valid" : "invalid"));
            }
        }

        // Criterion: general classical engine.
        prover_options fast;
        fast.build_proof = false;
        if (prove_cl_general(s, fast).valid() != valid[ix(logic_id::cl)]) {
            ++report.general_disagreements;
            note(report.failures,
                 "general-engine disagreement: " + to_string(s));
        }

        // Criterion: inclusion chain.
        bool chain_ok =
            (!valid[ix(logic_id::bdl)] || valid[ix(logic_id::lp)]) &&
            (!valid[ix(logic_id::bdl)] || valid[ix(logic_id::k3)]) &&
            (!valid[ix(logic_id::lp)] || valid[ix(logic_id::cl)]) &&
            (!valid[ix(logic_id::k3)] || valid[ix(logic_id::cl)]);
        if (!chain_ok) {
            ++report.inclusion_violations;
            note(report.failures, "inclusion violation: " + to_string(s));
        }

        // Criterion: countermodels witnessing CL \ BDL use b or n.
        if (valid[ix(logic_id::cl)] && !valid[ix(logic_id::bdl)]) {
            ++report.cl_minus_bdl;
            const auto& counter = results[ix(logic_id::bdl)].counter();
            bool has_gap_or_glut = false;
            if (counter)
                for (const auto& [atom, value] : *counter)
                    if (value == truth_value::b || value == truth_value::n)
                        has_gap_or_glut = true;
            if (!has_gap_or_glut) {
                ++report.shape_violations;
                note(report.failures,
                     "two-valued countermodel for CL-minus-BDL sequent: " +
                         to_string(s));
            }
        }

        // Criterion: law-flag ablations reproduce LP and K3.
        if (params.ablations) {
            bool lp_ablated =
                prove_with_laws({/*lnc=*/false, /*lem=*/true}, s, fast)
                    .valid();
            bool k3_ablated =
                prove_with_laws({/*lnc=*/true, /*lem=*/false}, s, fast)
                    .valid();
            if (lp_ablated != valid[ix(logic_id::lp)] ||
                k3_ablated != valid[ix(logic_id::k3)]) {
                ++report.ablation_disagreements;
                note(report.failures,
                     "ablation disagreement: " + to_string(s));
            }
        }

        // Criterion: embedding preserves and reflects validity.
        sequent emb = make_sequent(embedded, left, right);
        if (prove(logic_id::cl, emb, fast).valid() !=
            valid[ix(logic_id::bdl)]) {
            ++report.embedding_disagreements;
            note(report.failures,
                 "embedding disagreement: " + to_string(s) + "  =>  " +
                     to_string(emb));
        }

        // Periodic slow-path cross-checks.
        if (crosscheck) {
            ++report.crosschecks;
            for (logic_id id : all_logics)
                if (matrix_consequence(id, s) !=
                    oracle.consequence(id, left, right)) {
                    ++report.crosscheck_failures;
                    note(report.failures,
                         "oracle/matrix_consequence mismatch: " +
                             to_string(s) + " [" +
                             std::string(name_of(id)) + "]");
                }
            if (embed_sequent(s) != emb) {
                ++report.crosscheck_failures;
                note(report.failures,
                     "embed_sequent mismatch: " + to_string(s));
            }
        }
    }
};

} // namespace

battery_report run_battery(const battery_params& params,
                           const progress_fn& progress) {
    std::vector<formula> stock =
        enumerate_formulas(params.atoms, params.depth, params.formula_cap);
    std::vector<formula> embedded;
    embedded.reserve(stock.size());
    for (const formula& f : stock)
        embedded.push_back(embed_formula(f));
    designation_oracle oracle(stock, params.atoms);

    battery_state state{params, stock, embedded, oracle, {}};

    if (params.samples == 0) {
        std::uint64_t side = count_side_subsets(stock.size(), params.per_side);
        std::uint64_t total = side * side; // saturation not a concern at desk scale
        for_each_sequent_index(
            stock.size(), params.per_side,
            [&](std::span<const std::size_t> left,
                std::span<const std::size_t> right) {
                state.check_one(left, right);
                if (progress && state.report.sequents % 262144 == 0)
                    progress(state.report.sequents, total);
                return true;
            });
        if (progress)
            progress(state.report.sequents, total);
    } else {
        std::mt19937_64 rng(params.seed);
        std::vector<std::size_t> left, right;
        auto draw_side = [&](std::vector<std::size_t>& side) {
            side.clear();
            std::size_t k = static_cast<std::size_t>(
                rng() % (params.per_side + 1));
            for (std::size_t i = 0; i < k; ++i)
                side.push_back(static_cast<std::size_t>(rng() % stock.size()));
        };
        for (std::uint64_t n = 0; n < params.samples; ++n) {
            draw_side(left);
            draw_side(right);
            state.check_one(left, right);
            if (progress && state.report.sequents % 262144 == 0)
                progress(state.report.sequents, params.samples);
        }
        if (progress)
            progress(state.report.sequents, params.samples);
    }
    return state.report;
}

axiom_report run_axiom_checks(const axiom_check_params& params) {
    axiom_report report;
    std::vector<formula> stock =
        enumerate_formulas(params.atoms, params.depth, params.formula_cap);
    std::vector<formula> targets = enumerate_formulas(
        params.atoms, std::min<std::size_t>(params.depth, 1),
        params.formula_cap);
    std::vector<std::string> atom_names = enumeration_atoms(params.atoms);
    std::mt19937_64 rng(params.seed);
    prover_options fast;
    fast.build_proof = false;

    auto draw_formula = [&]() { return stock[rng() % stock.size()]; };
    auto draw_side = [&]() {
        std::vector<formula> side;
        std::size_t k =
            static_cast<std::size_t>(rng() % (params.per_side + 1));
        for (std::size_t i = 0; i < k; ++i)
            side.push_back(draw_formula());
        return side;
    };
    auto draw_sequent = [&]() { return sequent(draw_side(), draw_side()); };
    auto draw_valid_sequent = [&](logic_id id,
                                  std::optional<sequent>& out) {
        for (int attempt = 0; attempt < 1000; ++attempt) {
            sequent s = draw_sequent();
            if (prove(id, s, fast).valid()) {
                out = std::move(s);
                return true;
            }
        }
        return false;
    };

    for (logic_id id : all_logics) {
        // Overlap: Γ∩Δ ≠ ∅ forces validity.
        for (std::uint64_t n = 0; n < params.samples; ++n) {
            formula shared = draw_formula();
            std::vector<formula> left = draw_side();
            std::vector<formula> right = draw_side();
            left.push_back(shared);
            right.push_back(shared);
            sequent s(std::move(left), std::move(right));
            ++report.overlap_checked;
            if (!prove(id, s, fast).valid()) {
                ++report.overlap_failures;
                note(report.failures, "overlap axiom failed: " + to_string(s) +
                                          " [" + std::string(name_of(id)) +
                                          "]");
            }
        }
        // Weakening: validity survives adding formulas to either side.
        for (std::uint64_t n = 0; n < params.samples; ++n) {
            std::optional<sequent> base;
            if (!draw_valid_sequent(id, base))
                break;
            std::vector<formula> left = base->left();
            std::vector<formula> right = base->right();
            if (rng() % 2 == 0)
                left.push_back(draw_formula());
            else
                right.push_back(draw_formula());
            sequent s(std::move(left), std::move(right));
            ++report.weakening_checked;
            if (!prove(id, s, fast).valid()) {
                ++report.weakening_failures;
                note(report.failures, "weakening failed: " + to_string(*base) +
                                          " => " + to_string(s) + " [" +
                                          std::string(name_of(id)) + "]");
            }
        }
        // Cut: from Γ ⊢ Δ, A and A, Γ' ⊢ Δ' conclude Γ∪Γ' ⊢ Δ∪Δ'.
        std::uint64_t cut_target = params.samples;
        for (std::uint64_t attempt = 0;
             attempt < params.samples * 200 && cut_target > 0; ++attempt) {
            formula a = draw_formula();
            std::vector<formula> g1 = draw_side(), d1 = draw_side();
            std::vector<formula> g2 = draw_side(), d2 = draw_side();
            std::vector<formula> d1a = d1;
            d1a.push_back(a);
            std::vector<formula> g2a = g2;
            g2a.push_back(a);
            if (!prove(id, sequent(g1, std::move(d1a)), fast).valid() ||
                !prove(id, sequent(std::move(g2a), d2), fast).valid())
                continue;
            std::vector<formula> gu = g1;
            gu.insert(gu.end(), g2.begin(), g2.end());
            std::vector<formula> du = d1;
            du.insert(du.end(), d2.begin(), d2.end());
            sequent conclusion(std::move(gu), std::move(du));
            ++report.cut_checked;
            --cut_target;
            if (!prove(id, conclusion, fast).valid()) {
                ++report.cut_failures;
                note(report.failures, "cut failed: " + to_string(conclusion) +
                                          " [" + std::string(name_of(id)) +
                                          "]");
            }
        }
        // Structurality: substitution instances of valid sequents.
        for (std::uint64_t n = 0; n < params.samples; ++n) {
            std::optional<sequent> base;
            if (!draw_valid_sequent(id, base))
                break;
            substitution sub;
            for (const std::string& atom : atom_names)
                sub.bind(atom, targets[rng() % targets.size()]);
            sequent instance = substitute(sub, *base);
            ++report.structurality_checked;
            if (!prove(id, instance, fast).valid()) {
                ++report.structurality_failures;
                note(report.failures,
                     "structurality failed: " + to_string(*base) + " => " +
                         to_string(instance) + " [" +
                         std::string(name_of(id)) + "]");
            }
        }
    }

    // Non-triviality: p |- q invalid everywhere (prover and matrix).
    {
        sequent s({formula::atom("p")}, {formula::atom("q")});
        report.nontriviality_ok = true;
        for (logic_id id : all_logics)
            if (prove(id, s, fast).valid() || matrix_consequence(id, s))
                report.nontriviality_ok = false;
        if (!report.nontriviality_ok)
            note(report.failures, "non-triviality failed: p |- q");
    }

    // Deduction biconditional on the matrix relation, per logic.
    for (logic_id id : all_logics) {
        for (std::uint64_t n = 0; n < params.samples; ++n) {
            std::vector<formula> g = draw_side(), d = draw_side();
            formula a = draw_formula(), b = draw_formula();
            std::vector<formula> d_impl = d;
            d_impl.push_back(a >> b);
            std::vector<formula> g_a = g;
            g_a.push_back(a);
            std::vector<formula> d_b = d;
            d_b.push_back(b);
            bool lhs = matrix_consequence(id, sequent(g, std::move(d_impl)));
            bool rhs = matrix_consequence(
                id, sequent(std::move(g_a), std::move(d_b)));
            ++report.deduction_checked;
            if (lhs != rhs) {
                ++report.deduction_failures;
                note(report.failures,
                     "deduction biconditional failed [" +
                         std::string(name_of(id)) + "]: G=" +
                         to_string(sequent(g, d)) + " A=" + to_string(a) +
                         " B=" + to_string(b));
            }
        }
    }

    // General-negation biconditional, CL only.
    for (std::uint64_t n = 0; n < params.samples; ++n) {
        std::vector<formula> g = draw_side(), d = draw_side();
        formula a = draw_formula();
        std::vector<formula> d_not = d;
        d_not.push_back(~a);
        std::vector<formula> g_a = g;
        g_a.push_back(a);
        bool lhs =
            matrix_consequence(logic_id::cl, sequent(g, std::move(d_not)));
        bool rhs =
            matrix_consequence(logic_id::cl, sequent(std::move(g_a), d));
        ++report.general_negation_checked;
        if (lhs != rhs) {
            ++report.general_negation_failures;
            note(report.failures, "CL general-negation biconditional failed");
        }
    }

    // Documented BDL counterexample to the general-negation
    // biconditional: Γ = {~p}, Δ = ∅, A = p.
    {
        formula p = formula::atom("p");
        bool lhs = matrix_consequence(logic_id::bdl, sequent({~p}, {~p}));
        bool rhs = matrix_consequence(logic_id::bdl, sequent({~p, p}, {}));
        report.bdl_counterexample_ok = lhs && !rhs;
        if (!report.bdl_counterexample_ok)
            note(report.failures,
                 "expected BDL counterexample to the general-negation "
                 "biconditional is missing");
    }

    return report;
}

} // namespace paralogic
