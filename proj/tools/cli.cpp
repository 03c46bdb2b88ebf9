#include "cli.hpp"

#include "brauer/enhanced.hpp"
#include "brauer/invariants.hpp"
#include "brauer/json_io.hpp"
#include "brauer/rewrite.hpp"
#include "brauer/semantics.hpp"
#include "brauer/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace bk::cli {

namespace {

struct Usage : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Context {
    std::ostream& out;
    bool pretty = false;

    int emit(const json& j) const {
        out << (pretty ? j.dump(2) : j.dump()) << '\n';
        return 0;
    }

    int emit(const Report& r) const {
        if (!pretty) {
            emit(to_json(r));
        } else {
            out << r.name << '\n';
            for (const auto& c : r.checks)
                out << (c.pass ? "PASS  " : "FAIL  ") << c.claim << "  [" << c.lhs << " | " << c.rhs << "]\n";
            out << (r.ok() ? "all " + std::to_string(r.checks.size()) + " checks passed"
                           : std::to_string(r.failures()) + " of " + std::to_string(r.checks.size()) + " checks failed")
                << '\n';
        }
        return r.ok() ? 0 : 1;
    }
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw Usage("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// inline JSON when it looks like an object or array, else a path ("-" is stdin)
json load_json(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\n");
    const std::string text = first != std::string::npos && (arg[first] == '{' || arg[first] == '[') ? arg : slurp(arg);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Usage(std::string("invalid JSON: ") + e.what());
    }
}

// a path to a word file, or inline word text with ';' as line separator
Word load_word(const std::string& arg) {
    std::string text;
    if (arg == "-" || std::ifstream(arg).good()) {
        text = slurp(arg);
    } else {
        text = arg;
        for (char& c : text)
            if (c == ';') c = '\n';
    }
    return parse_word(text);
}

GroupSpec load_group(const std::string& s) { return GroupSpec::parse(s); }

Signs signs_arg(const std::string& s) {
    const Signs out = s == "." ? Signs() : s;
    check_signs(out);
    return out;
}

// a Brauer diagram, an oriented diagram or a sum
struct Morphism {
    enum class Kind { Diagram, Oriented, Sum } kind = Kind::Diagram;
    Diagram d;
    OrientedDiagram od;
    DiagramSum sum;
};

Morphism load_morphism(const std::string& arg) {
    const json j = load_json(arg);
    Morphism m;
    if (is_sum_json(j)) {
        m.kind = Morphism::Kind::Sum;
        m.sum = sum_from_json(j);
    } else if (is_oriented_json(j)) {
        m.kind = Morphism::Kind::Oriented;
        m.od = oriented_from_json(j);
    } else {
        m.d = diagram_from_json(j);
    }
    return m;
}

DiagramSum as_sum(const Morphism& m) {
    if (m.kind == Morphism::Kind::Oriented) throw Usage("expected an unoriented diagram or a sum");
    return m.kind == Morphism::Kind::Sum ? m.sum : DiagramSum(m.d);
}

json scaled_json(const ScaledOriented& s) {
    json j;
    j["diagram"] = to_json(s.diagram);
    j["loops"] = s.loops;
    return j;
}

TensorOperator image(const GroupSpec& g, const Morphism& m) {
    switch (m.kind) {
    case Morphism::Kind::Diagram:
        return functor(g, m.d);
    case Morphism::Kind::Oriented:
        return functor(g, m.od);
    case Morphism::Kind::Sum:
        return functor(g, m.sum);
    }
    return {};
}

std::string render_sum(const DiagramSum& x) {
    std::ostringstream os;
    if (x.is_zero()) os << "0 in B(" << x.k() << "," << x.ell() << ")\n";
    for (const auto& [d, c] : x.terms()) os << "coefficient " << c.str() << '\n' << render(d) << '\n';
    return os.str();
}

// Subcommands register their options on `app` and a runner that is called
// after parsing.
using Runner = std::function<int(const Context&)>;

struct Registry {
    CLI::App& app;
    std::vector<std::pair<CLI::App*, Runner>> runners;

    CLI::App* add(const std::string& name, const std::string& help) { return app.add_subcommand(name, help); }
    void on(CLI::App* sub, Runner r) { runners.emplace_back(sub, std::move(r)); }
};

void diagram_commands(Registry& reg) {
    struct Two {
        std::string a, b;
    };
    auto two = std::make_shared<Two>();

    auto* c = reg.add("compose", "compose --a after --b (diagrams, oriented diagrams or sums)");
    c->add_option("--a", two->a, "applied last")->required();
    c->add_option("--b", two->b, "applied first")->required();
    reg.on(c, [two](const Context& ctx) {
        const Morphism a = load_morphism(two->a), b = load_morphism(two->b);
        if (a.kind == Morphism::Kind::Oriented || b.kind == Morphism::Kind::Oriented) {
            if (a.kind != b.kind) throw Usage("cannot compose an oriented diagram with an unoriented one");
            return ctx.emit(scaled_json(compose(a.od, b.od)));
        }
        if (a.kind == Morphism::Kind::Sum || b.kind == Morphism::Kind::Sum)
            return ctx.emit(to_json(compose(as_sum(a), as_sum(b))));
        return ctx.emit(to_json(compose(a.d, b.d)));
    });

    auto* t = reg.add("tensor", "tensor product --a ⊗ --b");
    t->add_option("--a", two->a, "left factor")->required();
    t->add_option("--b", two->b, "right factor")->required();
    reg.on(t, [two](const Context& ctx) {
        const Morphism a = load_morphism(two->a), b = load_morphism(two->b);
        if (a.kind == Morphism::Kind::Oriented || b.kind == Morphism::Kind::Oriented) {
            if (a.kind != b.kind) throw Usage("cannot tensor an oriented diagram with an unoriented one");
            return ctx.emit(to_json(tensor(a.od, b.od)));
        }
        if (a.kind == Morphism::Kind::Sum || b.kind == Morphism::Kind::Sum)
            return ctx.emit(to_json(tensor(as_sum(a), as_sum(b))));
        return ctx.emit(to_json(tensor(a.d, b.d)));
    });

    auto in = std::make_shared<std::string>();
    for (const char* name : {"star", "sharp"}) {
        const bool is_star = std::string(name) == "star";
        auto* s = reg.add(name, is_star ? "reflect top and bottom" : "reflect left and right");
        s->add_option("--in", *in, "diagram or sum")->required();
        reg.on(s, [in, is_star](const Context& ctx) {
            const Morphism m = load_morphism(*in);
            if (m.kind == Morphism::Kind::Oriented) throw Usage("star/sharp take unoriented input");
            if (m.kind == Morphism::Kind::Sum) return ctx.emit(to_json(is_star ? star(m.sum) : sharp(m.sum)));
            return ctx.emit(to_json(is_star ? star(m.d) : sharp(m.d)));
        });
    }

    auto* r = reg.add("render", "ASCII picture of a diagram or of each term of a sum");
    r->add_option("--in", *in, "diagram, oriented diagram or sum")->required();
    reg.on(r, [in](const Context& ctx) {
        const Morphism m = load_morphism(*in);
        switch (m.kind) {
        case Morphism::Kind::Diagram:
            ctx.out << render(m.d) << '\n';
            break;
        case Morphism::Kind::Oriented:
            ctx.out << "target " << (m.od.target().empty() ? "." : m.od.target()) << '\n'
                    << render(m.od.diagram()) << '\n'
                    << "source " << (m.od.source().empty() ? "." : m.od.source()) << '\n';
            break;
        case Morphism::Kind::Sum:
            ctx.out << render_sum(m.sum);
            break;
        }
        return 0;
    });

    struct Enum {
        int k = 0, l = 0;
        bool count_only = false;
    };
    auto en = std::make_shared<Enum>();
    auto* e = reg.add("enumerate", "all Brauer diagrams of valency (k,l)");
    e->add_option("--k", en->k)->required()->check(CLI::NonNegativeNumber);
    e->add_option("--l", en->l)->required()->check(CLI::NonNegativeNumber);
    e->add_flag("--count", en->count_only, "only the number of diagrams");
    reg.on(e, [en](const Context& ctx) {
        if ((en->k + en->l) % 2) throw ValencyError("k+l must be even");
        if (en->k + en->l > 30) throw Usage("k+l too large to count");
        const std::uint64_t n = count_diagrams(en->k, en->l);
        json j;
        j["k"] = en->k;
        j["ell"] = en->l;
        j["count"] = n;
        if (!en->count_only) {
            check_budget(static_cast<std::size_t>(n), "diagram listing");
            json list = json::array();
            for (const auto& d : enumerate_diagrams(en->k, en->l)) list.push_back(to_json(d)["pairs"]);
            j["diagrams"] = std::move(list);
        }
        return ctx.emit(j);
    });
}

void word_commands(Registry& reg) {
    struct Args {
        std::string a, b, in;
    };
    auto args = std::make_shared<Args>();

    auto* ev = reg.add("eval-word", "evaluate a regular expression to a scaled diagram");
    ev->add_option("--word", args->a, "word file or inline text, lines separated by ';'")->required();
    reg.on(ev, [args](const Context& ctx) {
        const Word w = load_word(args->a);
        json j = to_json(evaluate(w));
        j["slices"] = w.size();
        return ctx.emit(j);
    });

    auto* fd = reg.add("from-diagram", "the canonical regular expression of a diagram");
    fd->add_option("--in", args->in, "diagram")->required();
    reg.on(fd, [args](const Context& ctx) {
        const Diagram d = diagram_from_json(load_json(args->in));
        const Word w = from_diagram(d);
        if (ctx.pretty) {
            ctx.out << format_word(w);
            return 0;
        }
        json j;
        j["word"] = format_word(w);
        j["slices"] = w.size();
        return ctx.emit(j);
    });

    auto* eq = reg.add("equiv", "whether two words evaluate to the same diagram");
    eq->add_option("--a", args->a)->required();
    eq->add_option("--b", args->b)->required();
    reg.on(eq, [args](const Context& ctx) {
        const Word a = load_word(args->a), b = load_word(args->b);
        json j;
        j["equivalent"] = equivalent(a, b);
        j["loops"] = {evaluate(a).loops, evaluate(b).loops};
        return ctx.emit(j);
    });

    auto* tr = reg.add("trace", "a rewrite trace turning --a into --b");
    tr->add_option("--a", args->a)->required();
    tr->add_option("--b", args->b)->required();
    reg.on(tr, [args](const Context& ctx) {
        const Word a = load_word(args->a), b = load_word(args->b);
        const TraceResult t = rewrite_trace(a, b);
        bool replayed = false;
        if (t.ok) {
            const CountedWord end = replay(a, t.steps);
            replayed = end.word == b && end.counter == t.delta;
        }
        json j;
        j["ok"] = t.ok && replayed;
        j["delta"] = t.delta;
        json steps = json::array();
        for (const auto& s : t.steps) steps.push_back(to_string(s));
        j["steps"] = std::move(steps);
        if (!t.diagnostic.empty()) j["diagnostic"] = t.diagnostic;
        ctx.emit(j);
        return t.ok && replayed ? 0 : 1;
    });
}

void oriented_commands(Registry& reg) {
    struct Args {
        std::string source, target, a, b, in, group;
        int r = 0, s = 0;
    };
    auto args = std::make_shared<Args>();

    auto* en = reg.add("oriented-enumerate", "oriented diagrams between two sign sequences ('.' is empty)");
    en->add_option("--source", args->source)->required();
    en->add_option("--target", args->target)->required();
    reg.on(en, [args](const Context& ctx) {
        const Signs s = signs_arg(args->source), t = signs_arg(args->target);
        if (s.size() + t.size() > 16) throw Usage("sign sequences too long");
        const auto list = enumerate_oriented(s, t);
        json j;
        j["source"] = s;
        j["target"] = t;
        j["count"] = list.size();
        json arr = json::array();
        for (const auto& d : list) arr.push_back(to_json(d));
        j["diagrams"] = std::move(arr);
        return ctx.emit(j);
    });

    auto* co = reg.add("oriented-compose", "compose oriented diagrams --a after --b");
    co->add_option("--a", args->a)->required();
    co->add_option("--b", args->b)->required();
    reg.on(co, [args](const Context& ctx) {
        return ctx.emit(scaled_json(compose(oriented_from_json(load_json(args->a)), oriented_from_json(load_json(args->b)))));
    });

    auto* te = reg.add("oriented-tensor", "tensor product of oriented diagrams");
    te->add_option("--a", args->a)->required();
    te->add_option("--b", args->b)->required();
    reg.on(te, [args](const Context& ctx) {
        return ctx.emit(to_json(tensor(oriented_from_json(load_json(args->a)), oriented_from_json(load_json(args->b)))));
    });

    auto* wb = reg.add("oriented-walled", "walled Brauer basis on (+)^r(-)^s");
    wb->add_option("--r", args->r)->required()->check(CLI::Range(0, 6));
    wb->add_option("--s", args->s)->required()->check(CLI::Range(0, 6));
    reg.on(wb, [args](const Context& ctx) {
        const auto list = walled_brauer_basis(args->r, args->s);
        json j;
        j["r"] = args->r;
        j["s"] = args->s;
        j["count"] = list.size();
        json arr = json::array();
        for (const auto& d : list) arr.push_back(to_json(d));
        j["diagrams"] = std::move(arr);
        return ctx.emit(j);
    });

    auto* tp = reg.add("oriented-transport", "move an endomorphism to the sorted sign sequence");
    tp->add_option("--in", args->in, "oriented endomorphism")->required();
    reg.on(tp, [args](const Context& ctx) {
        const OrientedDiagram d = oriented_from_json(load_json(args->in));
        if (d.source() != d.target()) throw Usage("oriented-transport needs an endomorphism");
        const TransportIso iso = transport_iso(d.source());
        const ScaledOriented fwd = iso.forward(d);
        const ScaledOriented back = iso.backward(fwd.diagram);
        json j = scaled_json(fwd);
        j["round_trip"] = back.diagram == d && back.loops + fwd.loops == 0;
        return ctx.emit(j);
    });

    auto* wd = reg.add("oriented-word", "a slice expression for an oriented diagram");
    wd->add_option("--in", args->in)->required();
    reg.on(wd, [args](const Context& ctx) {
        const OrientedDiagram d = oriented_from_json(load_json(args->in));
        const Expr e = oriented_word_expr(d);
        json j;
        j["expr"] = to_string(e);
        j["evaluates_back"] = evaluate_expr(e, OrientedSemantics{}).diagram == d;
        return ctx.emit(j);
    });

    auto* rl = reg.add("oriented-relations", "oriented presentation relations on diagrams or under a GL functor");
    rl->add_option("--group", args->group, "e.g. gl2|0; omitted means diagram semantics");
    reg.on(rl, [args](const Context& ctx) {
        Report rep;
        rep.name = args->group.empty() ? "oriented relations" : "oriented relations on " + args->group;
        const auto rels = oriented_relations();
        if (args->group.empty()) {
            for (const auto& r : rels) rep.add_equal(r.name, relation_holds(r, OrientedSemantics{}));
        } else {
            const GroupSpec g = load_group(args->group);
            if (g.kind != GroupKind::GL) throw Usage("oriented relations need a GL group");
            for (const auto& r : rels) rep.add_equal(r.name, relation_holds(r, FunctorSemantics{g}));
        }
        return ctx.emit(rep);
    });
}

void functor_commands(Registry& reg) {
    struct Args {
        std::string group, in, word;
    };
    auto args = std::make_shared<Args>();

    auto* f = reg.add("functor", "the matrix of F(D) for a diagram, oriented diagram, sum or word");
    f->add_option("--group", args->group, "o3, so2, sp2, osp1|2, gl2|1")->required();
    auto* in_opt = f->add_option("--in", args->in);
    auto* word_opt = f->add_option("--word", args->word, "word file or inline text");
    in_opt->excludes(word_opt);
    reg.on(f, [args](const Context& ctx) {
        const GroupSpec g = load_group(args->group);
        if (args->in.empty() == args->word.empty()) throw Usage("give exactly one of --in or --word");
        return ctx.emit(to_json(args->word.empty() ? image(g, load_morphism(args->in)) : functor(g, load_word(args->word))));
    });

    auto* a = reg.add("adjoint", "F(D)* and the check F(D*) = F(D)*");
    a->add_option("--group", args->group)->required();
    a->add_option("--in", args->in, "diagram or sum")->required();
    reg.on(a, [args](const Context& ctx) {
        const GroupSpec g = load_group(args->group);
        const DiagramSum x = as_sum(load_morphism(args->in));
        const TensorOperator adj = adjoint(g, functor(g, x));
        const bool ok = adj == functor(g, star(x));
        json j;
        j["adjoint"] = to_json(adj);
        j["matches_star"] = ok;
        ctx.emit(j);
        return ok ? 0 : 1;
    });

    auto* s = reg.add("supertrace", "supertrace of F(x) against the closure of x at δ = sdim V");
    s->add_option("--group", args->group)->required();
    s->add_option("--in", args->in, "endomorphism diagram or sum")->required();
    reg.on(s, [args](const Context& ctx) {
        const GroupSpec g = load_group(args->group);
        const DiagramSum x = as_sum(load_morphism(args->in));
        if (x.k() != x.ell()) throw ValencyError("supertrace needs an endomorphism");
        const Rational str = supertrace(g, functor(g, x));
        const Rational cl = closure(x).eval(Rational(g.sdim()));
        json j;
        j["supertrace"] = to_string(str);
        j["closure"] = to_string(cl);
        j["pass"] = str == cl;
        ctx.emit(j);
        return str == cl ? 0 : 1;
    });
}

void invariant_commands(Registry& reg) {
    struct Args {
        std::string group, check = "all", gen, source, target, gen_source, gen_target, delta = "0";
        int m = 2, k = 0, l = 0, r = 2, n = 1, p = 0, s = -1, t = -1;
        bool tensor = false, permutations = false;
    };
    auto args = std::make_shared<Args>();

    auto* en = reg.add("enhanced", "Δ_m checks on SO(m) as a pass/fail table");
    en->add_option("--m", args->m)->required()->check(CLI::Range(2, 4));
    en->add_option("--check", args->check, "all, relations, forced, sigma, fullness")
        ->check(CLI::IsMember({"all", "relations", "forced", "sigma", "fullness"}));
    en->add_option("--s", args->s, "fullness domain length (default: sweep s+t <= 4)");
    en->add_option("--t", args->t, "fullness codomain length");
    reg.on(en, [args](const Context& ctx) {
        const int m = args->m;
        const std::string M = std::to_string(m);
        Report rep;
        rep.name = "enhanced m=" + M;
        const bool all = args->check == "all";
        if (all || args->check == "relations") rep.append(check_relations(m));
        if (all || args->check == "forced") {
            const ForcedParameters fp = forced_parameters(m);
            std::string roots;
            for (const auto& q : fp.common) roots += (roots.empty() ? "" : ",") + to_string(q);
            rep.add("common rational roots of " + fp.product_rule.str() + " and " + fp.f_m.str(), "{" + roots + "}",
                    "{" + M + "}", fp.common == std::vector<Rational>{m});
        }
        if (all || args->check == "sigma") {
            const bool z = sigma_vanishing(m);
            rep.add("F(Σ_{+1}(" + std::to_string(m + 1) + ")) = 0 on SO(" + M + ")", z ? "0" : "nonzero", "0", z);
        }
        if (all || args->check == "fullness") {
            std::vector<std::pair<int, int>> st;
            if (args->s >= 0 && args->t >= 0)
                st.emplace_back(args->s, args->t);
            else
                for (int s = 0; s <= 4; ++s)
                    for (int t = 0; s + t <= 4; ++t) st.emplace_back(s, t);
            for (auto [s, t] : st) {
                const FullnessResult f = fullness_check(m, s, t);
                rep.add("fullness (" + std::to_string(s) + "," + std::to_string(t) + ")",
                        std::to_string(f.brauer_rank) + "+" + std::to_string(f.delta_rank) + "=" +
                            std::to_string(f.combined_rank),
                        std::to_string(f.oracle_dim), f.pass());
            }
        }
        return ctx.emit(rep);
    });

    auto* fft = reg.add("fft", "rank of F on Brauer diagrams against the equivariant oracle");
    fft->add_option("--group", args->group)->required();
    fft->add_option("--k", args->k)->check(CLI::NonNegativeNumber);
    fft->add_option("--l", args->l)->check(CLI::NonNegativeNumber);
    fft->add_option("--source", args->source, "signs for GL ('.' is empty)");
    fft->add_option("--target", args->target);
    reg.on(fft, [args](const Context& ctx) {
        const GroupSpec g = load_group(args->group);
        if (!args->source.empty() || !args->target.empty())
            return ctx.emit(verify_fft(g, signs_arg(args->source.empty() ? "." : args->source),
                                       signs_arg(args->target.empty() ? "." : args->target)));
        if ((args->k + args->l) % 2 && g.kind != GroupKind::GL) throw ValencyError("k+l must be even");
        return ctx.emit(verify_fft(g, args->k, args->l));
    });

    auto* sft = reg.add("sft", "kernel of F on End(V^r) against the ideal of its generator");
    sft->add_option("--group", args->group, "o<m>, sp<2n> or gl<m>|0")->required();
    sft->add_option("--r", args->r)->required()->check(CLI::Range(0, 6));
    reg.on(sft, [args](const Context& ctx) { return ctx.emit(verify_sft(load_group(args->group), args->r)); });

    auto* phi = reg.add("phi", "Φ(n) in B_{n+1}^{n+1}");
    phi->add_option("--n", args->n)->required()->check(CLI::Range(1, 4));
    reg.on(phi, [args](const Context& ctx) {
        const int n = args->n;
        json j;
        j["n"] = n;
        json coeffs = json::array();
        for (int k = 0; 2 * k <= n + 1; ++k) coeffs.push_back(to_string(a_coefficient(n, k)));
        j["a"] = std::move(coeffs);
        j["phi"] = to_json(Phi(n));
        return ctx.emit(j);
    });

    auto* ep = reg.add("ep", "E_p in B_{m+1}^{m+1} and the closed-formula check");
    ep->add_option("--m", args->m)->required()->check(CLI::Range(1, 4));
    ep->add_option("--p", args->p)->required()->check(CLI::NonNegativeNumber);
    reg.on(ep, [args](const Context& ctx) {
        if (args->p > args->m + 1) throw Usage("need 0 <= p <= m+1");
        const DiagramSum e = E_p(args->m, args->p);
        const bool ok = e == E_p_formula(args->m, args->p);
        json j;
        j["m"] = args->m;
        j["p"] = args->p;
        j["E_p"] = to_json(e);
        j["matches_formula"] = ok;
        ctx.emit(j);
        return ok ? 0 : 1;
    });

    auto* y = reg.add("young", "the rectangle quasi-idempotent e(m,l)");
    y->add_option("--m", args->m)->required()->check(CLI::NonNegativeNumber);
    y->add_option("--l", args->l)->required()->check(CLI::NonNegativeNumber);
    reg.on(y, [args](const Context& ctx) {
        const YoungRectangleIdempotent e = young_idempotent(args->m, args->l);
        json j;
        j["m"] = e.m;
        j["ell"] = e.ell;
        j["kappa"] = to_string(e.kappa);
        j["rows"] = e.rows;
        j["columns"] = e.columns;
        j["element"] = to_json(e.element);
        return ctx.emit(j);
    });

    auto* id = reg.add("ideal", "span of the algebra ideal (default) or tensor ideal of a generator");
    id->add_option("--gen", args->gen, "generator sum or diagram")->required();
    id->add_option("--delta", args->delta, "value of δ, e.g. -2 or 1/2")->required();
    id->add_flag("--tensor", args->tensor, "tensor ideal component of valency (k,l)");
    id->add_option("--k", args->k)->check(CLI::NonNegativeNumber);
    id->add_option("--l", args->l)->check(CLI::NonNegativeNumber);
    id->add_flag("--permutations", args->permutations, "restrict to permutation diagrams");
    id->add_option("--gen-source", args->gen_source, "orient the tensor ideal: generator source signs");
    id->add_option("--gen-target", args->gen_target);
    id->add_option("--source", args->source);
    id->add_option("--target", args->target);
    reg.on(id, [args](const Context& ctx) {
        const DiagramSum gen = as_sum(load_morphism(args->gen));
        const Rational d0 = parse_rational(args->delta);
        std::optional<DiagramBasis> basis;
        SpanResult span;
        if (args->tensor) {
            basis.emplace(args->k, args->l, args->permutations);
            std::optional<OrientedFrame> frame;
            if (!args->gen_source.empty() || !args->source.empty())
                frame = OrientedFrame{signs_arg(args->gen_source), signs_arg(args->gen_target), signs_arg(args->source),
                                      signs_arg(args->target)};
            span = tensor_ideal_span(gen, *basis, d0, frame);
        } else {
            if (gen.k() != gen.ell()) throw ValencyError("algebra ideal needs an endomorphism");
            basis.emplace(gen.k(), gen.k(), args->permutations);
            span = algebra_ideal_span({gen}, *basis, d0);
        }
        json j;
        j["valency"] = {basis->k(), basis->ell()};
        j["delta"] = to_string(d0);
        j["dim"] = span.dim();
        json rows = json::array();
        for (const auto& v : span.basis) rows.push_back(to_json(basis->sum_of(v)));
        j["basis"] = std::move(rows);
        return ctx.emit(j);
    });

    struct SuiteArgs {
        std::string name;
        bool list = false;
    };
    auto sa = std::make_shared<SuiteArgs>();
    auto* su = reg.add("suite", "run a named acceptance suite");
    su->add_option("--name", sa->name, "presentation, completeness, sigma-lemmas, functor-relations, enhanced, phi, "
                                       "ep, fft, sft, oriented, all");
    su->add_flag("--list", sa->list, "list the suites and the criteria they cover");
    reg.on(su, [sa](const Context& ctx) {
        if (sa->list) {
            json arr = json::array();
            for (const auto& s : suite_catalog()) arr.push_back({{"name", s.name}, {"criteria", s.criteria}, {"summary", s.summary}});
            return ctx.emit(arr);
        }
        if (sa->name.empty()) throw Usage("suite needs --name or --list");
        bool known = false;
        for (const auto& s : suite_catalog()) known = known || s.name == sa->name;
        if (!known) throw Usage("unknown suite '" + sa->name + "'");
        return ctx.emit(run_suite(sa->name));
    });
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Brauer-category computations", "brauer-kit"};
    app.require_subcommand(1);
    bool pretty = false;
    std::size_t max_entries = 0;
    unsigned threads = 1;
    app.add_flag("--pretty", pretty, "human-readable output");
    app.add_option("--max-entries", max_entries, "entry budget per operator (default 20000 or $BRAUER_KIT_BUDGET)")
        ->check(CLI::PositiveNumber);
    app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));

    Registry reg{app, {}};
    diagram_commands(reg);
    word_commands(reg);
    oriented_commands(reg);
    functor_commands(reg);
    invariant_commands(reg);
    // global flags are accepted after the subcommand too
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    set_budget(max_entries ? max_entries : default_budget());
    set_threads(threads);
    const Context ctx{out, pretty};
    try {
        for (auto& [sub, runner] : reg.runners)
            if (sub->parsed()) return runner(ctx);
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace bk::cli
