// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "peakmod/bijections.hpp"
#include "peakmod/counting.hpp"
#include "peakmod/enumeration.hpp"
#include "peakmod/statistics.hpp"
#include "peakmod/transforms.hpp"

using namespace peakmod;

namespace {

struct Criterion {
    std::vector<std::string> problems;

    void require(bool ok, const std::string& what) {
        if (!ok && problems.size() < 5) problems.push_back(what);
    }
};

oracle::Tally to_tally(const Histogram& h) {
    oracle::Tally t;
    for (const auto& [key, count] : h.entries()) t[key] = static_cast<long>(count);
    return t;
}

oracle::Tally to_tally(const Polynomial& p) {
    oracle::Tally t;
    for (const auto& [key, count] : p.terms()) t[key] = static_cast<long>(count);
    return t;
}

std::string show(const std::vector<int>& v) {
    std::ostringstream s;
    s << '(';
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    s << ')';
    return s.str();
}

// Slot i of `v` moves to sigma[i] - 1.
std::vector<int> move_slots(const std::vector<int>& sigma, const std::vector<int>& v) {
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(sigma[i] - 1)] = v[i];
    return out;
}

oracle::Tally permute_tally(const oracle::Tally& t, const std::vector<int>& sigma) {
    oracle::Tally out;
    for (const auto& [key, count] : t) out[move_slots(sigma, key)] += count;
    return out;
}

std::vector<std::vector<int>> perms_of(int m) {
    std::vector<int> p(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

const FamilySpec motzkin = FamilySpec::make(1, {{1, 1}}, 0);
const FamilySpec schroeder = FamilySpec::make(1, {{2, 1}}, 0);

void two_dyck_tally(Criterion& c) {
    const oracle::Tally want{{{0, 0, 2}, 1}, {{0, 1, 1}, 3}, {{1, 0, 1}, 3}, {{1, 1, 0}, 3}, {{0, 2, 0}, 1}, {{2, 0, 0}, 1}};
    const Histogram h = histogram(gen_k_dyck(2, 3), Variant::Plain, 2);
    c.require(to_tally(h) == want, "tally " + h.to_json());
    c.require(h.total() == 12, "total " + h.total().str());
}

void motzkin_tally(Criterion& c) {
    const oracle::Tally want{{{0, 0}, 2}, {{0, 1}, 5}, {{1, 0}, 5}, {{1, 1}, 7}, {{2, 0}, 1}, {{0, 2}, 1}};
    const Histogram h = histogram(gen_kac(motzkin, 5), Variant::Weak, 1);
    c.require(to_tally(h) == want, "tally " + h.to_json());
    c.require(h.total() == 21, "total " + h.total().str());
}

void worked_example(Criterion& c) {
    const FamilySpec two = FamilySpec::k_dyck(2);
    const std::string shifted = render_path(kappa(parse_path("uuduuuuududd", two)));
    c.require(shifted == "uuuduuuduudd", "kappa gave " + shifted);
    const LatticePath big = parse_path("uuduuuuududduuuduuuuududduuudd", two);
    c.require(big.down_size() == 10, "down-size");
    const PositionalTree t = psi_with_labels(big);
    const std::string want =
        R"({"label":"r","1":{"label":"p0_2","1":{"label":"p0_1"},"3":{"label":"dd_1","2":{"label":"p1_1"}}},)"
        R"("2":{"label":"p1_3","2":{"label":"p1_2"},"3":{"label":"dd_2","1":{"label":"p0_3"}}},"3":{"label":"dd_3"}})";
    c.require(t.size() == 10 && t.arity() == 3, "tree shape");
    c.require(e_vector(t) == std::vector<int>{3, 3, 3}, "e-vector " + show(e_vector(t)));
    c.require(tree_to_json(t) == want, "labelled tree " + tree_to_json(t));
}

void joint_symmetry(Criterion& c) {
    for (auto [k, max_n] : {std::pair{1, 10}, std::pair{2, 6}, std::pair{3, 4}}) {
        const auto perms = perms_of(k + 1);
        for (int n = 0; n <= max_n; ++n) {
            const auto paths = gen_k_dyck(k, n);
            c.require(static_cast<oracle::Big>(paths.size()) == oracle::dyck_count(k, n), "family size");
            oracle::Tally tally;
            std::set<std::string> family;
            for (const auto& p : paths) {
                const std::string s = render_path(p);
                ++tally[oracle::stats(s, k, false, false)];
                family.insert(s);
            }
            for (const auto& sigma : perms) {
                const std::string where = "k=" + std::to_string(k) + " n=" + std::to_string(n) + " sigma=" + show(sigma);
                c.require(permute_tally(tally, sigma) == tally, "histogram not invariant at " + where);
                std::set<std::string> images;
                for (const auto& p : paths) {
                    const std::string q = render_path(stat_permuter(p, sigma));
                    images.insert(q);
                    c.require(oracle::stats(q, k, false, false) == move_slots(sigma, oracle::stats(render_path(p), k, false, false)),
                              "statistics not permuted at " + where);
                }
                c.require(images == family, "not a bijection at " + where);
            }
        }
    }
}

void bijection_transport(Criterion& c) {
    for (int k = 1; k <= 3; ++k) {
        for (int n = 0; n <= 5; ++n) {
            for (const auto& p : gen_k_dyck(k, n)) {
                const PositionalTree t = psi(p);
                const std::string s = render_path(p);
                c.require(psi_inv(t, k) == p, "psi-inv(psi(" + s + "))");
                c.require(e_vector(t) == oracle::stats(s, k, false, false), "transport on " + s);
            }
            const auto trees = gen_trees(k + 1, n);
            c.require(static_cast<oracle::Big>(trees.size()) == oracle::tree_count(k + 1, n), "tree count");
            for (const auto& t : trees) {
                const LatticePath p = psi_inv(t, k);
                c.require(psi(p) == t, "psi(psi-inv(" + tree_to_json(t) + "))");
                c.require(e_vector(t) == oracle::stats(render_path(p), k, false, false), "transport on tree");
            }
        }
    }
}

void closed_form_counts(Criterion& c) {
    for (int k = 1; k <= 3; ++k) {
        for (int n = 1; n <= 5; ++n) {
            const auto tally = oracle::tally(oracle::all_paths(k, {}, 0, false, n), k, false, false);
            // every r-vector in the box [0, n-1]^{k+1}, including those off the n-1 hyperplane
            std::vector<int> r(static_cast<std::size_t>(k) + 1, 0);
            while (true) {
                auto it = tally.find(r);
                const long want = it == tally.end() ? 0 : it->second;
                const std::string where = "k=" + std::to_string(k) + " n=" + std::to_string(n) + " r=" + show(r);
                c.require(count_joint(k, n, r) == want, "count_joint at " + where);
                c.require(lagrange_coefficient(k, n, r) == want, "lagrange at " + where);
                int i = k;
                while (i >= 0 && r[static_cast<std::size_t>(i)] == n - 1) r[static_cast<std::size_t>(i--)] = 0;
                if (i < 0) break;
                ++r[static_cast<std::size_t>(i)];
            }
            std::map<int, long> pk;
            std::vector<std::map<int, long>> slot(static_cast<std::size_t>(k) + 1);
            for (const auto& [key, count] : tally) {
                int s = 0;
                for (int i = 0; i < k; ++i) s += key[static_cast<std::size_t>(i)];
                pk[s] += count;
                for (int i = 0; i <= k; ++i) slot[static_cast<std::size_t>(i)][key[static_cast<std::size_t>(i)]] += count;
            }
            for (int x = 0; x < n; ++x) {
                c.require(count_marginal(k, n, x) == count_pk(k, n, n - 1 - x), "reversal");
                c.require(count_pk(k, n, x) == pk[x], "count_pk");
                for (int i = 0; i <= k; ++i) c.require(count_marginal(k, n, x) == slot[static_cast<std::size_t>(i)][x], "marginal");
            }
        }
    }
}

void functional_equations(Criterion& c) {
    for (int k = 1; k <= 2; ++k) {
        const auto perms = perms_of(k + 1);
        const TruncSeries f = solve_f(k, 5);
        for (int n = 1; n <= 5; ++n) {
            c.require(to_tally(f[n]) == oracle::tally(oracle::all_paths(k, {}, 0, false, n), k, false, false), "f coefficient");
            for (const auto& sigma : perms) c.require(f[n].permuted(sigma) == f[n], "f symmetry");
        }
        for (int m = 0; m <= 3; ++m) {
            const TruncSeries g = solve_g(k, m, 4);
            const int r = m % k;
            for (int n = 0; n <= 4; ++n) {
                c.require(to_tally(g[n]) == oracle::tally(oracle::all_paths(k, {}, m, false, n), k, false, true),
                          "g coefficient k=" + std::to_string(k) + " m=" + std::to_string(m) + " n=" + std::to_string(n));
                for (const auto& sigma : perms) {
                    bool grouped = sigma[static_cast<std::size_t>(k)] == k + 1;
                    for (int i = 0; i < k; ++i) grouped = grouped && ((i <= r) == (sigma[static_cast<std::size_t>(i)] - 1 <= r));
                    if (grouped) c.require(g[n].permuted(sigma) == g[n], "g grouped symmetry");
                }
            }
        }
    }
    for (const FamilySpec& spec : {motzkin, schroeder}) {
        const TruncSeries f = solve_f_kac(spec, 8);
        for (int len = 1; len <= 8; ++len) {
            c.require(to_tally(f[len]) == oracle::tally(oracle::all_paths(1, spec.levels, 0, true, len), 1, true, false),
                      "f_kac coefficient " + render_levels(spec.levels) + " length " + std::to_string(len));
            for (const auto& sigma : perms_of(2)) c.require(f[len].permuted(sigma) == f[len], "f_kac symmetry");
        }
    }
}

void ballot_closed_form(Criterion& c) {
    c.require(gen_ballot(2, 1, 2).size() == 7, "(2,1) ballot paths of down-size 2");
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 4; ++n) {
            const auto tally = oracle::tally(oracle::all_paths(2, {}, m, false, n), 2, false, true);
            for (int s0 = 0; s0 <= n; ++s0) {
                for (int s1 = 0; s0 + s1 <= n; ++s1) {
                    const std::vector<int> s{s0, s1, n - s0 - s1};
                    auto it = tally.find(s);
                    const long want = it == tally.end() ? 0 : it->second;
                    c.require(count_ballot_joint(2, m / 2, m % 2, n, s) == want,
                              "m=" + std::to_string(m) + " n=" + std::to_string(n) + " s=" + show(s));
                }
            }
        }
    }
}

void ballot_recurrence(Criterion& c) {
    for (int k = 1; k <= 3; ++k) {
        for (int m = 0; m <= 4; ++m) {
            const int ell = m / k;
            const int r = m % k;
            for (int n = 0; n <= 3; ++n) {
                for (const auto& p : gen_ballot(k, m, n)) {
                    const std::string s = render_path(p);
                    const auto star = oracle::stats(s, k, false, true);
                    const auto parts = ballot_decompose(p, m).parts;
                    for (int i = 0; i < k; ++i) {
                        int total = 0;
                        for (int j = 0; j <= m; ++j) {
                            total += oracle::stats(render_path(kappa(parts[static_cast<std::size_t>(j)], j)), k, false, false)[static_cast<std::size_t>(i)];
                        }
                        const int top = i <= r ? ell : ell - 1;
                        for (int j = 0; j <= top; ++j) total += parts[static_cast<std::size_t>(k * j + i)].empty() ? 0 : 1;
                        c.require(total == star[static_cast<std::size_t>(i)],
                                  "k=" + std::to_string(k) + " m=" + std::to_string(m) + " " + s + " i=" + std::to_string(i));
                    }
                }
            }
        }
    }
}

void deutsch_and_narayana(Criterion& c) {
    for (int n = 0; n <= 8; ++n) {
        for (const auto& p : gen_k_dyck(1, n)) {
            const LatticePath q = deutsch(p);
            c.require(deutsch(q) == p, "not an involution on " + render_path(p));
            auto a = oracle::stats(render_path(p), 1, false, false);
            auto b = oracle::stats(render_path(q), 1, false, false);
            c.require(a[0] == b[1] && a[1] == b[0], "no swap on " + render_path(p));
        }
    }
    for (int n = 1; n <= 10; ++n) {
        std::map<int, long> peaks;  // all peaks, rightmost included
        for (const auto& s : oracle::all_paths(1, {}, 0, false, n)) ++peaks[oracle::stats(s, 1, false, true)[0]];
        for (int r = 1; r <= n; ++r) {
            c.require(peaks[r] == peaks[n + 1 - r], "histogram reversal n=" + std::to_string(n));
            c.require(narayana(n, r) == peaks[r], "narayana n=" + std::to_string(n) + " r=" + std::to_string(r));
        }
    }
}

void totals(Criterion& c) {
    for (int k = 1; k <= 3; ++k) {
        for (int n = 0; n <= 5; ++n) {
            const oracle::Big num = oracle::binom((k + 1) * n, n);
            const oracle::Big den = k * n + 1;
            c.require(num % den == 0, "inexact");
            c.require(static_cast<oracle::Big>(gen_k_dyck(k, n).size()) == num / den,
                      "k=" + std::to_string(k) + " n=" + std::to_string(n));
        }
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
        {"2-Dyck down-size 3 tally", two_dyck_tally},
        {"Motzkin length 5 weak tally", motzkin_tally},
        {"cyclic shift and labelled tree of the worked example", worked_example},
        {"joint symmetry and stat permuter (k<=3)", joint_symmetry},
        {"path/tree bijection and statistic transport", bijection_transport},
        {"joint, Lagrange and marginal counts", closed_form_counts},
        {"functional equations against enumeration", functional_equations},
        {"ballot closed form (k=2, m<=3, n<=4)", ballot_closed_form},
        {"ballot decomposition identity", ballot_recurrence},
        {"Deutsch involution and Narayana reversal", deutsch_and_narayana},
        {"Fuss-Catalan totals", totals},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.problems.push_back(std::string("exception: ") + e.what());
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        const bool ok = c.problems.empty();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << ms
                  << " ms)\n";
        for (const auto& p : c.problems) std::cout << "    " << p << '\n';
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
