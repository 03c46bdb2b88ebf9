#pragma once

#include "brauer/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bk {

enum class Relation { XX, Braid, AX, AXStar, AU, Slide, SlideStar, Straight, StraightSharp, Commute };

std::string relation_name(Relation r);
Relation relation_from_name(const std::string& s);

// position: index of the top slice of the matched pattern.
// abscissa: abscissa of the top slice of the left-hand pattern (for commute:
// of the upper slice being moved).
// forward rewrites left to right (for commute: lower block left of upper).
struct RewriteStep {
    Relation relation = Relation::XX;
    int position = 0;
    bool forward = true;
    int abscissa = 1;
    bool operator==(const RewriteStep&) const = default;
};

std::string to_string(const RewriteStep& s);

// A word together with a δ counter: the value is δ^counter · evaluate(word).
struct CountedWord {
    Word word;
    int counter = 0;
};

// Applies one step; throws WordError if the pattern is absent.
void apply_step(CountedWord& cw, const RewriteStep& step);
// The step undoing `step`, given the word it produced.
RewriteStep inverse_step(const RewriteStep& step, const Word& result);
// Replays a whole trace.
CountedWord replay(const Word& w, const std::vector<RewriteStep>& steps);

struct TraceResult {
    bool ok = false;
    std::vector<RewriteStep> steps;
    // loops(w1) − loops(w2); applying the trace adds it to the counter
    int delta = 0;
    std::string diagnostic;
};

TraceResult rewrite_trace(const Word& w1, const Word& w2);

struct NormalForm {
    bool ok = false;
    CountedWord result;
    std::vector<RewriteStep> steps;
    std::string diagnostic;
};
// Rewrites w into a form that depends only on its underlying diagram.
NormalForm normal_form(const Word& w);

enum class StackOutcome { MovedThrough, Shortened, Extended };
struct StackStepResult {
    StackOutcome outcome;
    CountedWord result;
    std::vector<RewriteStep> steps;
};
// One reduction round on the U slice at u_index and the slice sitting above
// its stack of rising crossings.
StackStepResult stack_step(const Word& w, int u_index);

// Sorts a word made only of U slices into the canonical order.
CountedWord canonical_cups(const Word& w, std::vector<RewriteStep>* steps = nullptr);

} // namespace bk
