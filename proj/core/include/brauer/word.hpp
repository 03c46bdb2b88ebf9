#pragma once

#include "brauer/diagram.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bk {

enum class Gen { A, U, X };

char gen_char(Gen g);
Gen gen_from_char(char c);

// I^{⊗left} ⊗ Y ⊗ I^{⊗right}
struct Slice {
    int left = 0;
    Gen gen = Gen::X;
    int right = 0;

    int in_width() const { return left + right + (gen == Gen::U ? 0 : 2); }
    int out_width() const { return left + right + (gen == Gen::A ? 0 : 2); }
    int abscissa() const { return left + 1; }
    Diagram diagram() const;
    bool operator==(const Slice&) const = default;
};

class WordError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Slices are listed top to bottom: slices()[0] is applied last.
class Word {
public:
    Word() = default;
    Word(int k, int ell, std::vector<Slice> slices);
    static Word identity(int r) { return Word(r, r, {}); }

    int k() const { return k_; }
    int ell() const { return ell_; }
    std::size_t size() const { return slices_.size(); }
    bool empty() const { return slices_.empty(); }
    const std::vector<Slice>& slices() const { return slices_; }
    const Slice& operator[](std::size_t i) const { return slices_[i]; }

    // width of the wire just above slice i; width_at(size()) == k
    int width_at(std::size_t i) const;

    bool operator==(const Word&) const = default;

private:
    int k_ = 0;
    int ell_ = 0;
    std::vector<Slice> slices_;
};

ScaledDiagram evaluate(const Word& w);
Word from_diagram(const Diagram& d);
// an independently randomised regular expression for d
Word random_word(const Diagram& d, std::uint64_t seed);
// word for a permutation diagram by adjacent transpositions, bubble order
Word permutation_word(const std::vector<int>& img);

// R(w) = (w⊗I)∘(I^{k−1}⊗U) and L(w) = (I^{ℓ−1}⊗A)∘(w⊗I)
Word raise(const Word& w);
Word lower(const Word& w);

// throws ValencyError on valency mismatch
bool equivalent(const Word& w1, const Word& w2);

Word parse_word(const std::string& text);
std::string format_word(const Word& w);

// gtest pretty-printing hook
void PrintTo(const Word& w, std::ostream* os);

} // namespace bk
