#include "brauer/word.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace bk {

char gen_char(Gen g) {
    switch (g) {
    case Gen::A: return 'A';
    case Gen::U: return 'U';
    case Gen::X: return 'X';
    }
    return '?';
}

Gen gen_from_char(char c) {
    switch (c) {
    case 'A': return Gen::A;
    case 'U': return Gen::U;
    case 'X': return Gen::X;
    default: throw WordError(std::string("unknown generator '") + c + "'");
    }
}

Diagram Slice::diagram() const {
    Diagram g = gen == Gen::A ? cap() : gen == Gen::U ? cup() : cross();
    return tensor(tensor(bk::identity(left), g), bk::identity(right));
}

Word::Word(int k, int ell, std::vector<Slice> slices) : k_(k), ell_(ell), slices_(std::move(slices)) {
    if (k < 0 || ell < 0) throw WordError("negative valency");
    int w = k;
    for (std::size_t i = slices_.size(); i-- > 0;) {
        const Slice& s = slices_[i];
        if (s.left < 0 || s.right < 0) throw WordError("slice " + std::to_string(i) + " has negative padding");
        if (s.in_width() != w)
            throw WordError("slice " + std::to_string(i) + " expects width " + std::to_string(s.in_width()) +
                            " but receives " + std::to_string(w));
        w = s.out_width();
    }
    if (w != ell) throw WordError("word ends at width " + std::to_string(w) + ", valency says " + std::to_string(ell));
}

int Word::width_at(std::size_t i) const {
    return i < slices_.size() ? slices_[i].out_width() : k_;
}

ScaledDiagram evaluate(const Word& w) {
    ScaledDiagram acc{bk::identity(w.k()), 0};
    for (std::size_t i = w.size(); i-- > 0;) {
        auto s = compose(w[i].diagram(), acc.diagram);
        acc.diagram = std::move(s.diagram);
        acc.loops += s.loops;
    }
    return acc;
}

namespace {

// Sort targets by adjacent swaps; pick(i-candidates) chooses which inversion to fix.
// Returns the swap positions in application order (bottom first).
template <class Pick>
std::vector<int> bubble_swaps(std::vector<int> target, Pick pick) {
    std::vector<int> swaps;
    std::vector<int> cand;
    while (true) {
        cand.clear();
        for (std::size_t i = 0; i + 1 < target.size(); ++i)
            if (target[i] > target[i + 1]) cand.push_back(static_cast<int>(i));
        if (cand.empty()) break;
        int i = pick(cand);
        std::swap(target[static_cast<std::size_t>(i)], target[static_cast<std::size_t>(i) + 1]);
        swaps.push_back(i);
    }
    return swaps;
}

// append X slices (bottom first order given) on a wire of width w to a bottom-first list
void push_swaps(std::vector<Slice>& bottom_first, const std::vector<int>& swaps, int w) {
    for (int i : swaps) bottom_first.push_back({i, Gen::X, w - i - 2});
}

Word finish(int k, int ell, std::vector<Slice> bottom_first) {
    std::reverse(bottom_first.begin(), bottom_first.end());
    return Word(k, ell, std::move(bottom_first));
}

struct Arcs {
    std::vector<std::pair<int, int>> through; // (bottom pos, top pos)
    std::vector<std::pair<int, int>> caps;    // bottom positions, ascending
    std::vector<std::pair<int, int>> cups;    // top positions, ascending
};

Arcs arcs_of(const Diagram& d) {
    Arcs a;
    for (int n = 0; n < d.nodes(); ++n) {
        int q = d.partner(n);
        if (q < n) continue;
        bool nt = d.is_top(n), qt = d.is_top(q);
        if (!nt && qt) a.through.emplace_back(d.pos(n), d.pos(q));
        else if (!nt && !qt) a.caps.emplace_back(d.pos(n), d.pos(q));
        else a.cups.emplace_back(d.pos(n), d.pos(q));
    }
    return a;
}

} // namespace

Word permutation_word(const std::vector<int>& img) {
    const int r = static_cast<int>(img.size());
    auto swaps = bubble_swaps(img, [](const std::vector<int>& c) { return c.front(); });
    std::vector<Slice> bf;
    push_swaps(bf, swaps, r);
    return finish(r, r, std::move(bf));
}

Word from_diagram(const Diagram& d) {
    const int k = d.k(), ell = d.ell();
    Arcs a = arcs_of(d);
    const int t = static_cast<int>(a.through.size());
    // bottom arrangement: through strings by bottom end, then caps by left end
    std::vector<int> img(static_cast<std::size_t>(k));
    int p = 0;
    for (auto [b, tp] : a.through) img[static_cast<std::size_t>(b)] = p++;
    for (auto [x, y] : a.caps) {
        img[static_cast<std::size_t>(x)] = p++;
        img[static_cast<std::size_t>(y)] = p++;
    }
    std::vector<Slice> bf;
    push_swaps(bf, bubble_swaps(img, [](const std::vector<int>& c) { return c.front(); }), k);
    int w = k;
    for (std::size_t j = 0; j < a.caps.size(); ++j) {
        bf.push_back({t, Gen::A, w - t - 2});
        w -= 2;
    }
    // cups: last pair first so the topmost U makes the leftmost pair
    const int u = static_cast<int>(a.cups.size());
    for (int j = u - 1; j >= 0; --j) {
        bf.push_back({t, Gen::U, w - t});
        w += 2;
    }
    // middle position -> top position
    std::vector<int> top(static_cast<std::size_t>(ell));
    for (int j = 0; j < t; ++j) top[static_cast<std::size_t>(j)] = a.through[static_cast<std::size_t>(j)].second;
    for (int j = 0; j < u; ++j) {
        top[static_cast<std::size_t>(t + 2 * j)] = a.cups[static_cast<std::size_t>(j)].first;
        top[static_cast<std::size_t>(t + 2 * j + 1)] = a.cups[static_cast<std::size_t>(j)].second;
    }
    push_swaps(bf, bubble_swaps(top, [](const std::vector<int>& c) { return c.front(); }), ell);
    return finish(k, ell, std::move(bf));
}

Word random_word(const Diagram& d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto coin = [&] { return (rng() & 1u) != 0; };
    auto pick = [&](const std::vector<int>& c) {
        return c[static_cast<std::size_t>(rng() % c.size())];
    };
    const int k = d.k(), ell = d.ell();
    Arcs a = arcs_of(d);
    const int t = static_cast<int>(a.through.size());
    std::shuffle(a.through.begin(), a.through.end(), rng);
    std::shuffle(a.caps.begin(), a.caps.end(), rng);
    std::shuffle(a.cups.begin(), a.cups.end(), rng);
    for (auto& c : a.caps)
        if (coin()) std::swap(c.first, c.second);
    for (auto& c : a.cups)
        if (coin()) std::swap(c.first, c.second);

    // bottom arrangement: random interleaving of through strings and cap blocks.
    // block ids: through j -> j, cap j -> t + j
    auto interleave = [&](int nt, int nc) {
        std::vector<int> blocks(static_cast<std::size_t>(nt + nc));
        std::iota(blocks.begin(), blocks.end(), 0);
        std::shuffle(blocks.begin(), blocks.end(), rng);
        // keep through strings in their chosen order
        std::vector<int> out;
        int next_t = 0;
        for (int b : blocks) out.push_back(b < nt ? next_t++ : b);
        return out;
    };
    std::vector<int> bottom_blocks = interleave(t, static_cast<int>(a.caps.size()));
    std::vector<int> img(static_cast<std::size_t>(k));
    std::vector<int> arrangement; // block id per position
    {
        int p = 0;
        for (int b : bottom_blocks) {
            if (b < t) {
                img[static_cast<std::size_t>(a.through[static_cast<std::size_t>(b)].first)] = p++;
                arrangement.push_back(b);
            } else {
                auto [x, y] = a.caps[static_cast<std::size_t>(b - t)];
                img[static_cast<std::size_t>(x)] = p++;
                img[static_cast<std::size_t>(y)] = p++;
                arrangement.push_back(b);
                arrangement.push_back(b);
            }
        }
    }
    std::vector<Slice> bf;
    push_swaps(bf, bubble_swaps(img, pick), k);
    // close caps in random order
    std::vector<int> cap_order(a.caps.size());
    std::iota(cap_order.begin(), cap_order.end(), t);
    std::shuffle(cap_order.begin(), cap_order.end(), rng);
    for (int b : cap_order) {
        int pos = static_cast<int>(std::find(arrangement.begin(), arrangement.end(), b) - arrangement.begin());
        int w = static_cast<int>(arrangement.size());
        bf.push_back({pos, Gen::A, w - pos - 2});
        arrangement.erase(arrangement.begin() + pos, arrangement.begin() + pos + 2);
    }
    // arrangement now lists through strings 0..t-1 in order; permute them randomly
    std::vector<int> through_perm(static_cast<std::size_t>(t));
    std::iota(through_perm.begin(), through_perm.end(), 0);
    std::shuffle(through_perm.begin(), through_perm.end(), rng);
    // strand at middle position j ends at position through_perm[j]
    push_swaps(bf, bubble_swaps(through_perm, pick), t);
    std::vector<int> mid(static_cast<std::size_t>(t));
    for (int j = 0; j < t; ++j) mid[static_cast<std::size_t>(through_perm[static_cast<std::size_t>(j)])] = j;
    // open cups at random places, in random order
    std::vector<int> top_arr(mid.begin(), mid.end()); // through ids, then cup ids t + j
    const int u = static_cast<int>(a.cups.size());
    for (int j = 0; j < u; ++j) {
        int w = static_cast<int>(top_arr.size());
        int pos = static_cast<int>(rng() % static_cast<std::uint64_t>(w + 1));
        bf.push_back({pos, Gen::U, w - pos});
        top_arr.insert(top_arr.begin() + pos, 2, t + j);
    }
    std::vector<int> top(static_cast<std::size_t>(ell));
    std::vector<int> seen(static_cast<std::size_t>(u), 0);
    for (int p = 0; p < ell; ++p) {
        int b = top_arr[static_cast<std::size_t>(p)];
        if (b < t) {
            top[static_cast<std::size_t>(p)] = a.through[static_cast<std::size_t>(b)].second;
        } else {
            auto [x, y] = a.cups[static_cast<std::size_t>(b - t)];
            top[static_cast<std::size_t>(p)] = seen[static_cast<std::size_t>(b - t)]++ ? y : x;
        }
    }
    push_swaps(bf, bubble_swaps(top, pick), ell);
    // pad with cancelling crossings
    std::vector<Slice> padded;
    int w = k;
    for (std::size_t i = 0; i <= bf.size(); ++i) {
        if (w >= 2 && rng() % 4 == 0) {
            int l = static_cast<int>(rng() % static_cast<std::uint64_t>(w - 1));
            padded.push_back({l, Gen::X, w - l - 2});
            padded.push_back({l, Gen::X, w - l - 2});
        }
        if (i < bf.size()) {
            padded.push_back(bf[i]);
            w = bf[i].out_width();
        }
    }
    return finish(k, ell, std::move(padded));
}

Word raise(const Word& w) {
    if (w.k() < 1) throw ValencyError("raise needs k >= 1");
    std::vector<Slice> s = w.slices();
    for (auto& x : s) ++x.right;
    s.push_back({w.k() - 1, Gen::U, 0});
    return Word(w.k() - 1, w.ell() + 1, std::move(s));
}

Word lower(const Word& w) {
    if (w.ell() < 1) throw ValencyError("lower needs ell >= 1");
    std::vector<Slice> s;
    s.reserve(w.size() + 1);
    s.push_back({w.ell() - 1, Gen::A, 0});
    for (Slice x : w.slices()) {
        ++x.right;
        s.push_back(x);
    }
    return Word(w.k() + 1, w.ell() - 1, std::move(s));
}

bool equivalent(const Word& w1, const Word& w2) {
    if (w1.k() != w2.k() || w1.ell() != w2.ell())
        throw ValencyError("words of valency " + to_string(Valency{w1.k(), w1.ell()}) + " and " +
                           to_string(Valency{w2.k(), w2.ell()}));
    return evaluate(w1) == evaluate(w2);
}

Word parse_word(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Slice> slices;
    bool have_valency = false;
    int k = 0, ell = 0, lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        auto bad = [&](const std::string& why) {
            return WordError("line " + std::to_string(lineno) + ": " + why);
        };
        if (first == "valency") {
            if (!(ls >> k >> ell)) throw bad("expected 'valency K L'");
            have_valency = true;
        } else {
            Slice s;
            std::string g;
            try {
                s.left = std::stoi(first);
            } catch (const std::exception&) {
                throw bad("expected 'left GEN right'");
            }
            if (!(ls >> g >> s.right) || g.size() != 1) throw bad("expected 'left GEN right'");
            s.gen = gen_from_char(g[0]);
            slices.push_back(s);
        }
        std::string extra;
        if (ls >> extra) throw bad("trailing text '" + extra + "'");
    }
    if (!have_valency) {
        if (slices.empty()) throw WordError("empty word needs a 'valency K L' line");
        k = slices.back().in_width();
        ell = slices.front().out_width();
    }
    return Word(k, ell, std::move(slices));
}

std::string format_word(const Word& w) {
    std::ostringstream os;
    os << "valency " << w.k() << " " << w.ell() << "\n";
    for (const auto& s : w.slices()) os << s.left << " " << gen_char(s.gen) << " " << s.right << "\n";
    return os.str();
}

void PrintTo(const Word& w, std::ostream* os) { *os << "\n" << format_word(w); }

} // namespace bk
