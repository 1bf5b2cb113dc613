#pragma once

// Brute-force reference implementations. Nothing here calls into the
// library; paths are token strings and every statistic is a direct scan.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;

struct Tok {
    char kind;  // 'u', 'd', 'l'
    int a = 1;
    int b = 0;
};

inline std::string show(const std::vector<Tok>& toks) {
    std::string s;
    for (const Tok& t : toks) {
        if (t.kind == 'l') s += "l" + std::to_string(t.a) + "_" + std::to_string(t.b);
        else s += t.kind;
    }
    return s;
}

inline std::vector<Tok> tokens(const std::string& s) {
    std::vector<Tok> out;
    for (std::size_t i = 0; i < s.size();) {
        if (s[i] == 'l') {
            std::size_t us = s.find('_', i);
            std::size_t end = us + 1;
            while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
            out.push_back({'l', std::stoi(s.substr(i + 1, us - i - 1)), std::stoi(s.substr(us + 1, end - us - 1))});
            i = end;
        } else {
            out.push_back({s[i]});
            ++i;
        }
    }
    return out;
}

inline std::vector<int> heights(const std::vector<Tok>& toks, int k, int start = 0) {
    std::vector<int> h{start};
    for (const Tok& t : toks) h.push_back(h.back() + (t.kind == 'u' ? 1 : t.kind == 'd' ? -k : 0));
    return h;
}

/// Every token string of the family, filtered for validity only at the end.
/// levels: a -> c. Graded by down-size when by_length is false.
inline std::vector<std::string> all_paths(int k, const std::map<int, int>& levels, int m, bool by_length, int size) {
    std::vector<Tok> alphabet{{'u'}, {'d'}};
    for (auto [a, c] : levels)
        for (int b = 1; b <= c; ++b) alphabet.push_back({'l', a, b});
    std::vector<std::string> out;
    std::vector<Tok> cur;
    std::function<void(int, int)> rec = [&](int budget, int downs) {
        if (by_length ? budget == 0 : cur.size() == static_cast<std::size_t>((k + 1) * size + m)) {
            if (!by_length && downs != size) return;
            auto h = heights(cur, k);
            if (h.back() != m) return;
            if (std::any_of(h.begin(), h.end(), [](int x) { return x < 0; })) return;
            out.push_back(show(cur));
            return;
        }
        for (const Tok& t : alphabet) {
            if (by_length && t.a > budget) continue;
            if (!by_length && t.kind == 'l') continue;
            cur.push_back(t);
            rec(budget - t.a, downs + (t.kind == 'd'));
            cur.pop_back();
        }
    };
    rec(by_length ? size : 0, 0);
    return out;
}

/// (pk_0..pk_{k-1}, dd) by direct scan. weak admits u.l, a leading l, and l.d;
/// starred keeps the rightmost peak.
inline std::vector<int> stats(const std::string& path, int k, bool weak, bool starred) {
    auto toks = tokens(path);
    auto h = heights(toks, k);
    std::vector<std::pair<std::size_t, int>> pk;  // (index, height)
    int dd = 0;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        const char a = toks[i].kind;
        const char b = i + 1 < toks.size() ? toks[i + 1].kind : '\0';
        if (a == 'u' && b == 'd') pk.push_back({i, h[i + 1]});
        if (weak && a == 'u' && b == 'l') pk.push_back({i, h[i + 1]});
        if (weak && a == 'l' && i == 0) pk.push_back({i, h[i]});
        if (a == 'd' && b == 'd') ++dd;
        if (weak && a == 'l' && b == 'd') ++dd;
    }
    std::sort(pk.begin(), pk.end());
    if (!starred && !pk.empty()) pk.pop_back();
    std::vector<int> out(static_cast<std::size_t>(k) + 1, 0);
    for (auto [idx, height] : pk) ++out[static_cast<std::size_t>(height % k)];
    out[static_cast<std::size_t>(k)] = dd;
    return out;
}

using Tally = std::map<std::vector<int>, long>;

inline Tally tally(const std::vector<std::string>& paths, int k, bool weak, bool starred) {
    Tally t;
    for (const auto& p : paths) ++t[stats(p, k, weak, starred)];
    return t;
}

inline Big binom(int n, int r) {
    if (r < 0 || n < 0 || r > n) return 0;
    std::vector<Big> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<Big> next(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j) next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(r)];
}

/// Number of k-Dyck paths of down-size n, by a height-indexed walk count.
inline Big dyck_count(int k, int n) {
    const int steps = (k + 1) * n;
    std::vector<Big> ways(static_cast<std::size_t>(steps) + 1, 0);
    ways[0] = 1;
    for (int s = 0; s < steps; ++s) {
        std::vector<Big> next(ways.size(), 0);
        for (std::size_t h = 0; h < ways.size(); ++h) {
            if (ways[h] == 0) continue;
            if (h + 1 < ways.size()) next[h + 1] += ways[h];
            if (h >= static_cast<std::size_t>(k)) next[h - static_cast<std::size_t>(k)] += ways[h];
        }
        ways = std::move(next);
    }
    return ways[0];
}

/// Positional m-ary trees on n nodes: t(n) = sum over (n_1..n_m), sum = n-1, of prod t(n_i).
inline Big tree_count(int m, int n) {
    std::vector<Big> t(static_cast<std::size_t>(n) + 1, 0);
    t[0] = 1;
    for (int size = 1; size <= n; ++size) {
        // forest[j] = ways to fill the m positions with j nodes in total
        std::vector<Big> forest(static_cast<std::size_t>(size), 0);
        forest[0] = 1;
        for (int pos = 0; pos < m; ++pos) {
            std::vector<Big> next(forest.size(), 0);
            for (std::size_t have = 0; have < forest.size(); ++have)
                for (std::size_t add = 0; have + add < forest.size(); ++add) next[have + add] += forest[have] * t[add];
            forest = std::move(next);
        }
        t[static_cast<std::size_t>(size)] = forest[static_cast<std::size_t>(size - 1)];
    }
    return t[static_cast<std::size_t>(n)];
}

/// One cyclic shift: blocks between the last-passage up-steps are rotated
/// within each group of k slots (slot j takes block j-1, slot 0 of a group
/// takes the group's last block). Pure paths only.
inline std::string kappa1(const std::string& path, int k) {
    auto toks = tokens(path);
    if (toks.empty()) return path;
    std::size_t n = 0;
    while (n < toks.size() && toks[toks.size() - 1 - n].kind == 'd') ++n;
    const std::size_t body = toks.size() - n;  // ends with the peak u
    auto h = heights(toks, k);
    const int top = static_cast<int>(k * n);
    std::vector<std::size_t> sep(static_cast<std::size_t>(top));
    // scan right to left: the separator for height j is the rightmost u starting at height j
    for (int j = top - 1; j >= 0; --j) {
        for (std::size_t t = body; t-- > 0;) {
            if (toks[t].kind == 'u' && h[t] == j) {
                sep[static_cast<std::size_t>(j)] = t;
                break;
            }
        }
    }
    std::vector<std::string> blocks;
    std::size_t begin = 0;
    for (int j = 0; j < top; ++j) {
        blocks.push_back(show({toks.begin() + static_cast<long>(begin), toks.begin() + static_cast<long>(sep[static_cast<std::size_t>(j)])}));
        begin = sep[static_cast<std::size_t>(j)] + 1;
    }
    std::string out;
    for (int j = 0; j < top; ++j) {
        const int src = j % k == 0 ? j + k - 1 : j - 1;
        out += blocks[static_cast<std::size_t>(src)] + "u";
    }
    return out + std::string(n, 'd');
}

}  // namespace oracle
