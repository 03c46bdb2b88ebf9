#include "brauer/suites.hpp"

#include "brauer/enhanced.hpp"
#include "brauer/invariants.hpp"
#include "brauer/rewrite.hpp"
#include "brauer/semantics.hpp"
#include "brauer/sigma.hpp"

#include <functional>
#include <random>
#include <stdexcept>

namespace bk {

namespace {

std::string num(std::size_t n) { return std::to_string(n); }

DiagramSum at(const DiagramSum& x, int d0) { return specialize(x, Rational(d0)); }

DiagramSum mul(const DiagramSum& a, const DiagramSum& b, int d0) { return at(compose(a, b), d0); }

void add_sum_equal(Report& rep, const std::string& claim, const DiagramSum& lhs, const DiagramSum& rhs) {
    const bool pass = lhs == rhs;
    // small sums are shown in full, larger ones only by verdict
    if (lhs.size() + rhs.size() <= 8)
        rep.add(claim, lhs.str(), rhs.str(), pass);
    else
        rep.add_equal(claim, pass);
}

void add_zero(Report& rep, const std::string& claim, bool is_zero) {
    rep.add(claim, is_zero ? "0" : "nonzero", "0", is_zero);
}

template <class Sem>
void add_relations(Report& rep, const std::string& where, const std::vector<RelationSpec>& rels, const Sem& sem) {
    for (const auto& r : rels) rep.add_equal(where + r.name + ": " + to_string(r.lhs) + " = " + to_string(r.rhs),
                                             relation_holds(r, sem));
}

// sub-report checks keep the sub-report's name as context
void append_named(Report& rep, const Report& sub) {
    for (const auto& c : sub.checks) rep.add(sub.name + ": " + c.claim, c.lhs, c.rhs, c.pass);
}

} // namespace

const std::vector<SuiteInfo>& suite_catalog() {
    static const std::vector<SuiteInfo> cat = {
        {"presentation", {1}, "Brauer relations and their */# images on diagrams with symbolic delta"},
        {"completeness", {2}, "rewrite traces join two random words for every diagram with k+l <= 8"},
        {"sigma-lemmas", {3}, "antisymmetrizer recursion, strand closure, hook and cup-cap identities, r <= 5"},
        {"functor-relations", {4}, "generator images on O(1..3), Sp(2), OSp(2|2) and GL(1|0), (2|0), (1|1), (2|1)"},
        {"enhanced", {5}, "Delta_m relations, forced delta = m, Sigma_{m+1} vanishing and fullness for m = 2, 3"},
        {"phi", {6}, "Phi(n): sum of all diagrams, quasi-idempotence, e_i annihilation, kernel on Sp, trace sum"},
        {"ep", {7}, "E_p against its closed formula and the E_p identities for m <= 3"},
        {"fft", {8}, "functor rank against the equivariant oracle on O(2), O(3), Sp(2), GL(2|1)"},
        {"sft", {9}, "kernels of the functor against the ideals of E_1, Phi and e(1,0); tensor ideal vanishing"},
        {"oriented", {10}, "oriented relations under the GL functor, walled Brauer dimensions, arc counts"},
        {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, "every suite above in order"},
    };
    return cat;
}

Report presentation_suite() {
    Report rep{"presentation", {}};
    add_relations(rep, "", brauer_relations(true), DiagramSemantics{});
    return rep;
}

Report completeness_suite(int max_nodes) {
    Report rep{"completeness", {}};
    std::size_t diagrams = 0, joined = 0;
    std::string first_failure;
    for (int n = 0; n <= max_nodes; n += 2)
        for (int k = 0; k <= n; ++k)
            for (const Diagram& d : enumerate_diagrams(k, n - k)) {
                ++diagrams;
                const auto seed = static_cast<std::uint64_t>(d.hash());
                const Word a = random_word(d, seed), b = random_word(d, seed ^ 0x9e3779b97f4a7c15ULL);
                const TraceResult t = rewrite_trace(a, b);
                bool ok = t.ok;
                if (ok) {
                    const CountedWord end = replay(a, t.steps);
                    ok = end.word == b && end.counter == t.delta;
                }
                if (ok)
                    ++joined;
                else if (first_failure.empty())
                    first_failure = to_string(d) + ": " + t.diagnostic;
            }
    rep.add("rewrite_trace joins two random words for every diagram with k+l <= " + std::to_string(max_nodes),
            num(joined), num(diagrams), joined == diagrams);
    if (!first_failure.empty()) rep.add("first failure", first_failure, "none", false);
    return rep;
}

Report sigma_suite() {
    Report rep{"sigma-lemmas", {}};
    for (const auto& c : sigma_identities(5, 2)) rep.add_equal(c.name, c.holds());
    return rep;
}

Report functor_relations_suite() {
    Report rep{"functor-relations", {}};
    for (const GroupSpec& g : {GroupSpec::O(1), GroupSpec::O(2), GroupSpec::O(3), GroupSpec::Sp(2), GroupSpec::OSp(2, 2)}) {
        FunctorSemantics sem{g};
        add_relations(rep, g.name() + " ", osp_functor_relations(), sem);
        const TensorOperator loop = compose(generator_op(g, "A"), generator_op(g, "U"));
        rep.add(g.name() + " C^.Cv = sdim V", to_string(loop.entry(0, 0)), std::to_string(g.sdim()),
                loop.entry(0, 0) == g.sdim());
    }
    for (const GroupSpec& g : {GroupSpec::GL(1, 0), GroupSpec::GL(2, 0), GroupSpec::GL(1, 1), GroupSpec::GL(2, 1)}) {
        FunctorSemantics sem{g};
        add_relations(rep, g.name() + " ", gl_functor_relations(), sem);
        for (const char* cc : {"A- ; U+", "A+ ; U-"}) {
            const TensorOperator loop = evaluate_expr(parse_expr(cc), sem);
            rep.add(g.name() + " " + cc + " = sdim V", to_string(loop.entry(0, 0)), std::to_string(g.sdim()),
                    loop.entry(0, 0) == g.sdim());
        }
    }
    return rep;
}

Report enhanced_suite() {
    Report rep{"enhanced", {}};
    for (int m = 2; m <= 3; ++m) {
        Report r = check_relations(m);
        for (auto& c : r.checks) c.claim = "m=" + std::to_string(m) + " " + c.claim;
        rep.append(r);
        const ForcedParameters fp = forced_parameters(m);
        std::string roots;
        for (const auto& q : fp.common) roots += (roots.empty() ? "" : ",") + to_string(q);
        rep.add("m=" + std::to_string(m) + " common rational roots of the product rule and f_m", "{" + roots + "}",
                "{" + std::to_string(m) + "}", fp.common == std::vector<Rational>{m});
    }
    for (int m = 1; m <= 3; ++m) add_zero(rep, "F(Sigma_{+1}(" + std::to_string(m + 1) + ")) on SO(" + std::to_string(m) + ")",
                                          sigma_vanishing(m));
    for (int m = 2; m <= 3; ++m)
        for (int s = 0; s <= 4; ++s)
            for (int t = 0; s + t <= 4; ++t) {
                const FullnessResult f = fullness_check(m, s, t);
                rep.add("fullness SO(" + std::to_string(m) + ") (" + std::to_string(s) + "," + std::to_string(t) +
                            "): brauer+delta rank = combined = oracle",
                        num(f.brauer_rank) + "+" + num(f.delta_rank) + "=" + num(f.combined_rank), num(f.oracle_dim),
                        f.pass());
            }
    return rep;
}

Report phi_suite() {
    Report rep{"phi", {}};
    add_sum_equal(rep, "Phi(1) = 1 + s + e", Phi(1),
                  DiagramSum(identity(2)) + DiagramSum(cross()) + DiagramSum(e_i(2, 1)));
    for (int n = 1; n <= 3; ++n) {
        const std::string tag = "n=" + std::to_string(n) + " ";
        const DiagramSum P = Phi(n);
        const int d0 = -2 * n;
        add_sum_equal(rep, tag + "Phi(n) is the sum of all diagrams", P, sum_of_all(n + 1, n + 1));
        add_sum_equal(rep, tag + "Phi^2 = (n+1)! Phi at delta = -2n", mul(P, P, d0), P * Poly(factorial(n + 1)));
        for (int i = 1; i <= n; ++i) {
            const DiagramSum e(e_i(n + 1, i));
            add_zero(rep, tag + "e_" + std::to_string(i) + " Phi = 0", mul(e, P, d0).is_zero());
            add_zero(rep, tag + "Phi e_" + std::to_string(i) + " = 0", mul(P, e, d0).is_zero());
        }
    }
    add_zero(rep, "F(Phi(1)) on Sp(2)", functor(GroupSpec::Sp(2), Phi(1)).is_zero());
    add_zero(rep, "F(Phi(2)) on Sp(4)", functor(GroupSpec::Sp(4), Phi(2)).is_zero());
    for (int n = 1; n <= 4; ++n) {
        const Rational b = phi_binomial_sum(n), t = phi_trace_formula(n);
        rep.add("n=" + std::to_string(n) + " sum_k (-1)^k C(n,k) C(2n-2k,n-1) = 0", to_string(b), "0", b == 0);
        rep.add("n=" + std::to_string(n) + " supertrace of Phi through the a_k = 0", to_string(t), "0", t == 0);
    }
    return rep;
}

Report ep_suite() {
    Report rep{"ep", {}};
    for (int m = 1; m <= 3; ++m) {
        const int r = m + 1;
        for (int p = 0; p <= r; ++p) {
            const std::string tag = "m=" + std::to_string(m) + " p=" + std::to_string(p) + " ";
            const DiagramSum E = E_p(m, p);
            add_sum_equal(rep, tag + "E_p equals the closed formula", E, E_p_formula(m, p));
            add_sum_equal(rep, tag + "*E_p = E_{m+1-p}", star(sharp(E)), E_p(m, r - p));
            const DiagramSum F = F_p(m, p);
            const DiagramSum want = E * Poly(factorial(p) * factorial(r - p));
            add_sum_equal(rep, tag + "F_p E_p = p!(m+1-p)! E_p", mul(F, E, m), want);
            add_sum_equal(rep, tag + "E_p F_p = p!(m+1-p)! E_p", mul(E, F, m), want);
            for (int i = 1; i <= m; ++i) {
                const DiagramSum e(e_i(r, i));
                add_zero(rep, tag + "e_" + std::to_string(i) + " E_p = 0", mul(e, E, m).is_zero());
                add_zero(rep, tag + "E_p e_" + std::to_string(i) + " = 0", mul(E, e, m).is_zero());
            }
            std::size_t killed = 0, tried = 0;
            for (const Diagram& d : enumerate_diagrams(r, r)) {
                if (d.through_strings() == r) continue;
                ++tried;
                if (mul(DiagramSum(d), E, m).is_zero() && mul(E, DiagramSum(d), m).is_zero()) ++killed;
            }
            rep.add(tag + "D E_p = E_p D = 0 for diagrams with fewer than m+1 through strings", num(killed), num(tried),
                    killed == tried);
            add_sum_equal(rep, tag + "X E_p X = E_{m+1-p}",
                          chain({DiagramSum(X_cross(p, r - p)), E, DiagramSum(X_cross(r - p, p))}), E_p(m, r - p));
        }
    }
    return rep;
}

Report fft_suite() {
    Report rep{"fft", {}};
    const auto sweep = [&](const GroupSpec& g, int max_nodes) {
        for (int k = 0; k <= max_nodes; ++k)
            for (int l = 0; k + l <= max_nodes; ++l) append_named(rep, verify_fft(g, k, l));
    };
    sweep(GroupSpec::O(2), 6);
    sweep(GroupSpec::O(3), 6);
    sweep(GroupSpec::Sp(2), 4);
    for (int r = 0; r <= 2; ++r) {
        const Signs w(static_cast<std::size_t>(r), '+');
        append_named(rep, verify_fft(GroupSpec::GL(2, 1), w, w));
    }
    for (int r = 2; r <= 3; ++r) {
        const Signs w(static_cast<std::size_t>(r), '+');
        const std::size_t got = equivariant_dim(GroupSpec::O(3), w, w);
        std::size_t want = 1;
        for (int j = 2 * r - 1; j > 1; j -= 2) want *= static_cast<std::size_t>(j);
        rep.add("dim End_O(3)(V^" + std::to_string(r) + ") = (2r-1)!!", num(got), num(want), got == want);
    }
    return rep;
}

Report sft_suite() {
    Report rep{"sft", {}};
    append_named(rep, verify_sft(GroupSpec::O(1), 2));
    append_named(rep, verify_sft(GroupSpec::Sp(2), 2));
    append_named(rep, verify_sft(GroupSpec::GL(1, 0), 2));
    // J(1,2): generator e(1,2) at δ = 1 − 2 = −1, threshold (m+1)(n+1) = 4
    const DiagramSum gen = young_idempotent(1, 2).element;
    for (auto [k, l] : std::vector<std::pair<int, int>>{{0, 0}, {0, 2}, {1, 1}, {2, 0}}) {
        const std::size_t dim = tensor_ideal_span(gen, DiagramBasis(k, l), -1).dim();
        rep.add("J(1,2)_" + std::to_string(k) + "^" + std::to_string(l) + " = 0 below k+l = 4", num(dim), "0",
                dim == 0);
    }
    return rep;
}

Report oriented_suite() {
    Report rep{"oriented", {}};
    for (const GroupSpec& g : {GroupSpec::GL(2, 0), GroupSpec::GL(1, 1)})
        add_relations(rep, g.name() + " ", oriented_relations(), FunctorSemantics{g});
    for (int r = 0; r <= 4; ++r)
        for (int s = 0; r + s <= 4; ++s) {
            const std::size_t got = walled_brauer_basis(r, s).size();
            const std::size_t want = static_cast<std::size_t>(factorial(r + s).get_num().get_ui());
            rep.add("walled Brauer B_{" + std::to_string(r) + "," + std::to_string(s) + "} has (r+s)! diagrams",
                    num(got), num(want), got == want);
        }
    std::mt19937_64 rng(20240601);
    std::size_t hold = 0;
    for (int i = 0; i < 1000; ++i) {
        const int n = 2 * static_cast<int>(rng() % 5);
        const int k = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
        if (arc_count_identity(random_oriented(k, n - k, rng()))) ++hold;
    }
    rep.add("arc-count identity on 1000 random oriented diagrams", num(hold), "1000", hold == 1000);
    return rep;
}

Report run_suite(const std::string& name) {
    static const std::vector<std::pair<std::string, std::function<Report()>>> table = {
        {"presentation", presentation_suite},
        {"completeness", [] { return completeness_suite(8); }},
        {"sigma-lemmas", sigma_suite},
        {"functor-relations", functor_relations_suite},
        {"enhanced", enhanced_suite},
        {"phi", phi_suite},
        {"ep", ep_suite},
        {"fft", fft_suite},
        {"sft", sft_suite},
        {"oriented", oriented_suite},
    };
    if (name == "all") {
        Report all{"all", {}};
        for (const auto& [n, fn] : table) {
            Report r = fn();
            for (auto& c : r.checks) c.claim = n + ": " + c.claim;
            all.append(r);
        }
        return all;
    }
    for (const auto& [n, fn] : table)
        if (n == name) return fn();
    throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace bk
