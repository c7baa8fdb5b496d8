#include "uqp/weyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace uqp {

namespace {

SignedAction identity_action() {
    return SignedAction{std::make_pair(0, 1), std::make_pair(1, 1)};
}

SignedAction generator_action(int s) {
    if (s == 1) return SignedAction{std::make_pair(1, 1), std::make_pair(0, 1)};
    if (s == 2) return SignedAction{std::make_pair(0, 1), std::make_pair(1, -1)};
    throw std::invalid_argument("generator index must be 1 or 2");
}

// (a o b)(eps_i) = a(b(eps_i))
SignedAction compose(const SignedAction& a, const SignedAction& b) {
    SignedAction r;
    for (int i = 0; i < 2; ++i) {
        auto [j, s] = b[static_cast<std::size_t>(i)];
        auto [k, t] = a[static_cast<std::size_t>(j)];
        r[static_cast<std::size_t>(i)] = {k, s * t};
    }
    return r;
}

SignedAction action_of_word(const std::vector<int>& word) {
    SignedAction a = identity_action();
    for (int s : word) a = compose(a, generator_action(s));
    return a;
}

std::string word_name(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::string n;
    for (int s : word) n += "s" + std::to_string(s);
    return n;
}

} // namespace

std::vector<WeylElement> weyl_b2() {
    static const std::vector<WeylElement> group = [] {
        std::vector<WeylElement> out;
        std::map<SignedAction, bool> seen;
        std::vector<std::vector<int>> frontier{{}};
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& w : frontier) {
                SignedAction a = action_of_word(w);
                if (seen.count(a)) continue;
                seen[a] = true;
                out.push_back(WeylElement{word_name(w), w, a});
                for (int s : {1, 2}) {
                    auto nw = w;
                    nw.push_back(s);
                    next.push_back(std::move(nw));
                }
            }
            frontier = std::move(next);
        }
        return out;
    }();
    return group;
}

const WeylElement& weyl_element(const std::string& name) {
    static const std::vector<WeylElement> group = weyl_b2();
    for (const auto& w : group)
        if (w.name == name) return w;
    // accept any word spelling, e.g. "s2s1s2s1" for the longest element
    std::vector<int> word;
    std::string rest = name;
    if (rest != "e") {
        while (!rest.empty()) {
            if (rest.size() < 2 || rest[0] != 's' || (rest[1] != '1' && rest[1] != '2'))
                throw std::invalid_argument("unknown Weyl element '" + name + "'");
            word.push_back(rest[1] - '0');
            rest = rest.substr(2);
        }
    }
    SignedAction a = action_of_word(word);
    for (const auto& w : group)
        if (w.action == a) return w;
    throw std::invalid_argument("unknown Weyl element '" + name + "'");
}

std::vector<std::vector<int>> weyl_reduced_words(const WeylElement& w) {
    const int len = w.length();
    std::vector<std::vector<int>> words;
    std::vector<int> cur(static_cast<std::size_t>(len), 1);
    // enumerate all words of the minimal length and keep the ones with the
    // right action; 2^len candidates, len <= 4
    const int total = 1 << len;
    for (int mask = 0; mask < total; ++mask) {
        for (int i = 0; i < len; ++i)
            cur[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? 2 : 1;
        if (action_of_word(cur) == w.action) words.push_back(cur);
    }
    return words;
}

bool bruhat_leq(const WeylElement& x, const WeylElement& y) {
    if (x.length() > y.length()) return false;
    auto xs = weyl_reduced_words(x);
    const auto& yw = y.word;
    const int m = static_cast<int>(yw.size());
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < m; ++i)
            if (mask & (1 << i)) sub.push_back(yw[static_cast<std::size_t>(i)]);
        if (static_cast<int>(sub.size()) != x.length()) continue;
        for (const auto& cand : xs)
            if (cand == sub) return true;
    }
    return false;
}

} // namespace uqp
