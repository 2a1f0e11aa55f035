// suffix_automaton.hpp -- generalized suffix automaton over the binary
// alphabet. Used as an exact acceptor for the factor language and to count
// distinct factors of each length in one pass.

#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace subcomplex::detail {

class SuffixAutomaton {
public:
    SuffixAutomaton() { states_.push_back(State{0, -1, {-1, -1}}); }

    /// Insert one string; substrings of all inserted strings are recognized.
    void insert(std::string_view s) {
        int last = 0;
        for (char c : s)
            last = extend(last, c == 'a' ? 0 : 1);
    }

    bool contains(std::string_view s) const {
        int v = 0;
        for (char c : s) {
            v = states_[v].next[c == 'a' ? 0 : 1];
            if (v < 0) return false;
        }
        return true;
    }

    std::size_t state_count() const noexcept { return states_.size(); }

    /// counts[n] = number of distinct substrings of length n, for 1 <= n <= max_len.
    /// counts[0] is left as 0 (the empty word is counted by the caller).
    std::vector<std::int64_t> count_by_length(std::size_t max_len) const {
        std::vector<std::int64_t> diff(max_len + 2, 0);
        for (std::size_t i = 1; i < states_.size(); ++i) {
            std::int64_t lo = states_[states_[i].link].len + 1;
            std::int64_t hi = states_[i].len;
            if (hi > static_cast<std::int64_t>(max_len)) hi = static_cast<std::int64_t>(max_len);
            if (lo > hi) continue;
            diff[static_cast<std::size_t>(lo)] += 1;
            diff[static_cast<std::size_t>(hi) + 1] -= 1;
        }
        std::vector<std::int64_t> counts(max_len + 1, 0);
        std::int64_t run = 0;
        for (std::size_t n = 1; n <= max_len; ++n) {
            run += diff[n];
            counts[n] = run;
        }
        return counts;
    }

private:
    struct State {
        int len;
        int link;
        std::array<int, 2> next;
    };

    int clone_of(int q, int new_len) {
        State c = states_[q];
        c.len = new_len;
        states_.push_back(c);
        return static_cast<int>(states_.size()) - 1;
    }

    // Generalized extension: reuses existing states so that repeated or
    // overlapping strings do not corrupt the substring ranges.
    int extend(int last, int c) {
        if (states_[last].next[c] >= 0) {
            int q = states_[last].next[c];
            if (states_[q].len == states_[last].len + 1) return q;
            int clone = clone_of(q, states_[last].len + 1);
            states_[q].link = clone;
            int p = last;
            while (p >= 0 && states_[p].next[c] == q) {
                states_[p].next[c] = clone;
                p = states_[p].link;
            }
            return clone;
        }
        int cur = static_cast<int>(states_.size());
        states_.push_back(State{states_[last].len + 1, -1, {-1, -1}});
        int p = last;
        while (p >= 0 && states_[p].next[c] < 0) {
            states_[p].next[c] = cur;
            p = states_[p].link;
        }
        if (p < 0) {
            states_[cur].link = 0;
        } else {
            int q = states_[p].next[c];
            if (states_[p].len + 1 == states_[q].len) {
                states_[cur].link = q;
            } else {
                int clone = clone_of(q, states_[p].len + 1);
                while (p >= 0 && states_[p].next[c] == q) {
                    states_[p].next[c] = clone;
                    p = states_[p].link;
                }
                states_[q].link = clone;
                states_[cur].link = clone;
            }
        }
        return cur;
    }

    std::vector<State> states_;
};

} // namespace subcomplex::detail
