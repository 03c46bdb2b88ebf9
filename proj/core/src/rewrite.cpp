#include "brauer/rewrite.hpp"

#include <algorithm>
#include <map>

namespace bk {

namespace {

struct PatSlice {
    Gen gen;
    int left;
};

struct Pattern {
    std::vector<PatSlice> lhs, rhs;
    int loops = 0; // δ factor picked up going left to right
};

// a is the abscissa of the top slice of the left-hand side
Pattern pattern(Relation r, int a) {
    const int l = a - 1;
    switch (r) {
    case Relation::XX: return {{{Gen::X, l}, {Gen::X, l}}, {}, 0};
    case Relation::Braid:
        return {{{Gen::X, l}, {Gen::X, l + 1}, {Gen::X, l}}, {{Gen::X, l + 1}, {Gen::X, l}, {Gen::X, l + 1}}, 0};
    case Relation::AX: return {{{Gen::A, l}, {Gen::X, l}}, {{Gen::A, l}}, 0};
    case Relation::AXStar: return {{{Gen::X, l}, {Gen::U, l}}, {{Gen::U, l}}, 0};
    case Relation::AU: return {{{Gen::A, l}, {Gen::U, l}}, {}, 1};
    case Relation::Slide: return {{{Gen::A, l}, {Gen::X, l + 1}}, {{Gen::A, l + 1}, {Gen::X, l}}, 0};
    case Relation::SlideStar: return {{{Gen::X, l}, {Gen::U, l - 1}}, {{Gen::X, l - 1}, {Gen::U, l}}, 0};
    case Relation::Straight: return {{{Gen::A, l}, {Gen::U, l + 1}}, {}, 0};
    case Relation::StraightSharp: return {{{Gen::A, l}, {Gen::U, l - 1}}, {}, 0};
    case Relation::Commute: break;
    }
    throw std::logic_error("no pattern for commute");
}

int in_extra(Gen g) { return g == Gen::U ? 0 : 2; }
int out_extra(Gen g) { return g == Gen::A ? 0 : 2; }

[[noreturn]] void fail(const RewriteStep& s, const std::string& why) {
    throw WordError("cannot apply " + to_string(s) + ": " + why);
}

} // namespace

std::string relation_name(Relation r) {
    switch (r) {
    case Relation::XX: return "xx";
    case Relation::Braid: return "braid";
    case Relation::AX: return "ax";
    case Relation::AXStar: return "ax*";
    case Relation::AU: return "au";
    case Relation::Slide: return "slide";
    case Relation::SlideStar: return "slide*";
    case Relation::Straight: return "straight";
    case Relation::StraightSharp: return "straight#";
    case Relation::Commute: return "commute";
    }
    return "?";
}

Relation relation_from_name(const std::string& s) {
    static const std::map<std::string, Relation> names = {
        {"xx", Relation::XX},           {"braid", Relation::Braid},       {"ax", Relation::AX},
        {"ax*", Relation::AXStar},      {"au", Relation::AU},             {"slide", Relation::Slide},
        {"slide*", Relation::SlideStar}, {"straight", Relation::Straight}, {"straight#", Relation::StraightSharp},
        {"commute", Relation::Commute}};
    auto it = names.find(s);
    if (it == names.end()) throw WordError("unknown relation '" + s + "'");
    return it->second;
}

std::string to_string(const RewriteStep& s) {
    return relation_name(s.relation) + (s.forward ? "" : "^-1") + "@" + std::to_string(s.position) +
           " a=" + std::to_string(s.abscissa);
}

void apply_step(CountedWord& cw, const RewriteStep& step) {
    const Word& w = cw.word;
    const int n = static_cast<int>(w.size());
    const int p = step.position;
    std::vector<Slice> sl = w.slices();
    if (step.relation == Relation::Commute) {
        if (p < 0 || p + 1 >= n) fail(step, "position out of range");
        Slice up = sl[static_cast<std::size_t>(p)], lo = sl[static_cast<std::size_t>(p) + 1];
        if (up.abscissa() != step.abscissa) fail(step, "abscissa mismatch");
        const int top_w = up.out_width(), bot_w = lo.in_width();
        Slice nu, nl;
        if (step.forward) {
            if (lo.left + out_extra(lo.gen) > up.left)
                fail(step, "lower block is not left of the upper block");
            nu = {lo.left, lo.gen, 0};
            nl = {up.left - out_extra(lo.gen) + in_extra(lo.gen), up.gen, 0};
        } else {
            if (up.left + in_extra(up.gen) > lo.left) fail(step, "upper block is not left of the lower block");
            nl = {up.left, up.gen, 0};
            nu = {lo.left - in_extra(up.gen) + out_extra(up.gen), lo.gen, 0};
        }
        nu.right = top_w - nu.left - out_extra(nu.gen);
        nl.right = bot_w - nl.left - in_extra(nl.gen);
        if (nu.right < 0 || nl.right < 0) fail(step, "bad widths");
        sl[static_cast<std::size_t>(p)] = nu;
        sl[static_cast<std::size_t>(p) + 1] = nl;
        cw.word = Word(w.k(), w.ell(), std::move(sl));
        return;
    }
    Pattern pat = pattern(step.relation, step.abscissa);
    const auto& src = step.forward ? pat.lhs : pat.rhs;
    const auto& dst = step.forward ? pat.rhs : pat.lhs;
    const int m = static_cast<int>(src.size());
    if (p < 0 || p + m > n) fail(step, "position out of range");
    for (int i = 0; i < m; ++i) {
        const Slice& s = sl[static_cast<std::size_t>(p + i)];
        if (s.gen != src[static_cast<std::size_t>(i)].gen || s.left != src[static_cast<std::size_t>(i)].left)
            fail(step, "pattern not found");
    }
    int width = w.width_at(static_cast<std::size_t>(p));
    std::vector<Slice> repl;
    for (const auto& ps : dst) {
        Slice s{ps.left, ps.gen, width - ps.left - out_extra(ps.gen)};
        if (s.right < 0 || s.left < 0) fail(step, "pattern does not fit the width");
        repl.push_back(s);
        width = s.in_width();
    }
    if (width != w.width_at(static_cast<std::size_t>(p + m))) fail(step, "width mismatch");
    sl.erase(sl.begin() + p, sl.begin() + p + m);
    sl.insert(sl.begin() + p, repl.begin(), repl.end());
    cw.word = Word(w.k(), w.ell(), std::move(sl));
    cw.counter += step.forward ? pat.loops : -pat.loops;
}

RewriteStep inverse_step(const RewriteStep& step, const Word& result) {
    RewriteStep inv = step;
    inv.forward = !step.forward;
    if (step.relation == Relation::Commute) inv.abscissa = result[static_cast<std::size_t>(step.position)].abscissa();
    return inv;
}

CountedWord replay(const Word& w, const std::vector<RewriteStep>& steps) {
    CountedWord cw{w, 0};
    for (const auto& s : steps) apply_step(cw, s);
    return cw;
}

namespace {

struct Tracer {
    CountedWord cw;
    std::vector<RewriteStep> steps;

    const Slice& at(int i) const { return cw.word[static_cast<std::size_t>(i)]; }
    int size() const { return static_cast<int>(cw.word.size()); }

    void apply(Relation r, int pos, bool fwd, int a) {
        RewriteStep s{r, pos, fwd, a};
        apply_step(cw, s);
        steps.push_back(s);
    }
    // swaps slice i with slice i+1
    void commute_down(int i) {
        const Slice& up = at(i);
        const Slice& lo = at(i + 1);
        bool fwd = lo.left + out_extra(lo.gen) <= up.left;
        apply(Relation::Commute, i, fwd, up.abscissa());
    }
    void commute_down(int i, int times) {
        for (int t = 0; t < times; ++t) commute_down(i + t);
    }
};

struct Stall {
    std::string why;
};

// One round of the shortening strategy on the U at index u (first U at or
// below `start`).
StackOutcome reduce_round(Tracer& tr, int start, int u) {
    const int a = tr.at(u).abscissa();
    int s = 0;
    while (u - s - 1 >= start && tr.at(u - s - 1).gen == Gen::X && tr.at(u - s - 1).abscissa() == a + s + 1) ++s;
    const int e = u - s - 1;
    if (e < start) throw Stall{"rising stack reaches the top of the active region"};
    const Gen g = tr.at(e).gen;
    const int b = tr.at(e).abscissa();
    if (b <= a - 2 || b >= a + s + 2) {
        tr.commute_down(e, s + 1);
        return StackOutcome::MovedThrough;
    }
    if (g == Gen::X) {
        if (b == a - 1) {
            tr.commute_down(e, s);
            tr.apply(Relation::SlideStar, u - 1, false, a);
            return StackOutcome::Extended;
        }
        if (s >= 1 && b == a + s) {
            tr.apply(Relation::XX, e, true, b);
            return StackOutcome::Shortened;
        }
        if (b == a && s == 0) {
            tr.apply(Relation::AXStar, e, true, a);
            return StackOutcome::Shortened;
        }
        if (b == a) {
            tr.commute_down(e, s - 1);
            tr.apply(Relation::SlideStar, u - 1, true, a + 1);
            tr.apply(Relation::XX, u - 2, true, a);
            return StackOutcome::Shortened;
        }
        if (b >= a + 1 && b <= a + s - 1) {
            const int i = b - a;
            tr.commute_down(e, s - i - 1);
            tr.apply(Relation::Braid, u - i - 2, true, b);
            tr.commute_down(u - i, i);
            return StackOutcome::MovedThrough;
        }
        throw Stall{"crossing above a rising stack in an impossible place"};
    }
    if (g == Gen::A) {
        if (b == a - 1) {
            tr.commute_down(e, s);
            tr.apply(Relation::Straight, u - 1, true, a - 1);
            return StackOutcome::Shortened;
        }
        if (b == a + s + 1) {
            int uu = u, ss = s;
            while (ss > 0) {
                tr.apply(Relation::Slide, uu - ss - 1, false, a + ss);
                tr.commute_down(uu - ss, ss);
                --uu;
                --ss;
            }
            tr.apply(Relation::StraightSharp, uu - 1, true, a + 1);
            return StackOutcome::Shortened;
        }
        if (s >= 1 && b == a + s) {
            tr.apply(Relation::AX, e, true, b);
            return StackOutcome::Shortened;
        }
        if (b == a && s == 0) {
            tr.apply(Relation::AU, e, true, a);
            return StackOutcome::Shortened;
        }
        if (b >= a && b <= a + s - 1) {
            const int i = b - a + 1;
            tr.commute_down(e, s - i);
            tr.apply(Relation::Slide, u - i - 1, true, b);
            if (i > 1) tr.apply(Relation::XX, u - i, true, b);
            else tr.apply(Relation::AXStar, u - 1, true, b);
            return StackOutcome::Shortened;
        }
        throw Stall{"cap above a rising stack in an impossible place"};
    }
    throw Stall{"unexpected cup above the first cup"};
}

// Rewrites the region [start, end) of a word whose bottom width is 0 into U slices only.
void reduce_closed(Tracer& tr, int start) {
    const long n0 = tr.size();
    const long cap = 64 * (n0 + 8) * (n0 + 8);
    long rounds = 0;
    while (true) {
        while (start < tr.size() && tr.at(start).gen == Gen::U) ++start;
        if (start >= tr.size()) return;
        int u = start;
        while (u < tr.size() && tr.at(u).gen != Gen::U) ++u;
        if (u >= tr.size()) throw Stall{"closed region has no cup at the bottom"};
        if (++rounds > cap) throw Stall{"iteration cap exceeded"};
        reduce_round(tr, start, u);
    }
}

void sort_cups(Tracer& tr, int start) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = start; i + 1 < tr.size(); ++i) {
            if (tr.at(i).left <= tr.at(i + 1).left) {
                tr.apply(Relation::Commute, i, false, tr.at(i).abscissa());
                changed = true;
            }
        }
    }
}

// closed words only (k == 0)
void closed_normal_form(Tracer& tr) {
    const Word& w = tr.cw.word;
    Diagram d = evaluate(w).diagram;
    std::vector<int> img(static_cast<std::size_t>(d.ell()));
    int j = 0;
    for (auto [x, y] : d.pairs()) {
        img[static_cast<std::size_t>(d.pos(x - 1))] = 2 * j;
        img[static_cast<std::size_t>(d.pos(y - 1))] = 2 * j + 1;
        ++j;
    }
    Word pw = permutation_word(img);
    const int s = static_cast<int>(pw.size());
    for (int i = 0; i < s; ++i) tr.apply(Relation::XX, i, false, pw[static_cast<std::size_t>(s - 1 - i)].abscissa());
    reduce_closed(tr, s);
    sort_cups(tr, s);
}

} // namespace

NormalForm normal_form(const Word& w) {
    NormalForm nf;
    const int k = w.k();
    Word rk = w;
    for (int i = 0; i < k; ++i) rk = raise(rk);
    Word wk = rk;
    for (int i = 0; i < k; ++i) wk = lower(wk);
    try {
        // collapse W_k back to w, then run it backwards
        Tracer col{{wk, 0}, {}};
        std::vector<RewriteStep> back;
        for (int round = 0; round < k; ++round) {
            int idx = k - 1 - round;
            while (idx < col.size() - 2) {
                col.commute_down(idx);
                back.push_back(inverse_step(col.steps.back(), col.cw.word));
                ++idx;
            }
            col.apply(Relation::StraightSharp, idx, true, col.at(idx).abscissa());
            back.push_back(inverse_step(col.steps.back(), col.cw.word));
        }
        if (!(col.cw.word == w)) throw Stall{"collapse did not return the input word"};
        std::reverse(back.begin(), back.end());

        Tracer closed{{rk, 0}, {}};
        closed_normal_form(closed);

        nf.steps = std::move(back);
        for (RewriteStep s : closed.steps) {
            s.position += k;
            nf.steps.push_back(s);
        }
        Word res = closed.cw.word;
        for (int i = 0; i < k; ++i) res = lower(res);
        nf.result = {res, closed.cw.counter};
        nf.ok = true;
    } catch (const Stall& st) {
        nf.diagnostic = st.why;
    } catch (const WordError& e) {
        nf.diagnostic = e.what();
    }
    return nf;
}

TraceResult rewrite_trace(const Word& w1, const Word& w2) {
    TraceResult tr;
    if (w1.k() != w2.k() || w1.ell() != w2.ell())
        throw ValencyError("words of valency " + to_string(Valency{w1.k(), w1.ell()}) + " and " +
                           to_string(Valency{w2.k(), w2.ell()}));
    ScaledDiagram e1 = evaluate(w1), e2 = evaluate(w2);
    if (e1.diagram != e2.diagram) {
        tr.diagnostic = "words denote different diagrams";
        return tr;
    }
    tr.delta = e1.loops - e2.loops;
    if (w1 == w2) {
        tr.ok = true;
        return tr;
    }
    NormalForm n1 = normal_form(w1), n2 = normal_form(w2);
    if (!n1.ok || !n2.ok) {
        tr.diagnostic = "normal form stalled: " + (n1.ok ? n2.diagnostic : n1.diagnostic);
        return tr;
    }
    if (!(n1.result.word == n2.result.word)) {
        tr.diagnostic = "normal forms differ";
        return tr;
    }
    // invert the second half
    std::vector<RewriteStep> second;
    {
        CountedWord cw{w2, 0};
        for (const auto& s : n2.steps) {
            apply_step(cw, s);
            second.push_back(inverse_step(s, cw.word));
        }
        std::reverse(second.begin(), second.end());
    }
    std::vector<RewriteStep> all = n1.steps;
    all.insert(all.end(), second.begin(), second.end());
    // cancel adjacent step/inverse pairs
    std::vector<RewriteStep> kept, kept_inv;
    CountedWord cw{w1, 0};
    for (const auto& s : all) {
        apply_step(cw, s);
        RewriteStep inv = inverse_step(s, cw.word);
        if (!kept.empty() && kept_inv.back() == s) {
            kept.pop_back();
            kept_inv.pop_back();
        } else {
            kept.push_back(s);
            kept_inv.push_back(inv);
        }
    }
    CountedWord check = replay(w1, kept);
    if (!(check.word == w2) || check.counter != tr.delta) {
        tr.diagnostic = "trace replay does not reach the target";
        return tr;
    }
    tr.steps = std::move(kept);
    tr.ok = true;
    return tr;
}

StackStepResult stack_step(const Word& w, int u_index) {
    if (u_index < 0 || u_index >= static_cast<int>(w.size()) || w[static_cast<std::size_t>(u_index)].gen != Gen::U)
        throw WordError("stack_step: no cup at the given index");
    Tracer tr{{w, 0}, {}};
    StackOutcome out;
    try {
        out = reduce_round(tr, 0, u_index);
    } catch (const Stall& st) {
        throw WordError("stack_step: " + st.why);
    }
    return {out, tr.cw, tr.steps};
}

CountedWord canonical_cups(const Word& w, std::vector<RewriteStep>* steps) {
    for (const auto& s : w.slices())
        if (s.gen != Gen::U) throw WordError("canonical_cups: word has a non-cup slice");
    Tracer tr{{w, 0}, {}};
    sort_cups(tr, 0);
    if (steps) *steps = tr.steps;
    return tr.cw;
}

} // namespace bk
