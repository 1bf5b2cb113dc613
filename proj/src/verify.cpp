#include "peakmod/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include <json.hpp>

#include "peakmod/bijections.hpp"
#include "peakmod/counting.hpp"
#include "peakmod/series.hpp"
#include "peakmod/statistics.hpp"
#include "peakmod/transforms.hpp"

namespace peakmod {

bool VerifyReport::expect(bool holds, std::string check, std::string inputs, std::string expected, std::string got) {
    ++checks_run;
    if (!holds) failures.push_back({std::move(check), std::move(inputs), std::move(expected), std::move(got)});
    return holds;
}

std::string VerifyReport::to_text() const {
    std::string out = "suite " + suite;
    for (const auto& [key, value] : params) out += " " + key + "=" + value;
    out += ": " + std::to_string(checks_run) + " checks, " + std::to_string(failures.size()) + " failures\n";
    for (const VerifyFailure& f : failures) {
        out += "FAIL " + f.check + " [" + f.inputs + "] expected " + f.expected + " got " + f.got + "\n";
    }
    out += ok() ? "OK\n" : "FAILED\n";
    return out;
}

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : params) j["params"][key] = value;
    j["checks_run"] = checks_run;
    j["failures"] = nlohmann::ordered_json::array();
    for (const VerifyFailure& f : failures) {
        j["failures"].push_back({{"check", f.check}, {"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
    }
    j["ok"] = ok();
    return j.dump();
}

namespace {

std::string join(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

std::string kn(int k, int n) { return "k=" + std::to_string(k) + " n=" + std::to_string(n); }

std::string terms_json(const std::map<std::vector<int>, BigCount>& terms) {
    Histogram h;
    for (const auto& [key, count] : terms) h.add(key, count);
    return h.to_json();
}

// Calls fn on every vector of `size` entries in [0, max].
void for_each_box(int size, int max, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> v(static_cast<std::size_t>(size), 0);
    while (true) {
        fn(v);
        int i = size - 1;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == max) v[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) return;
        ++v[static_cast<std::size_t>(i)];
    }
}

int sum(const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
}

// Permutations of 1..k+1 that fix slot k+1 and keep {1..r+1} and {r+2..k} in place as sets.
std::vector<std::vector<int>> grouped_permutations(int k, int r) {
    std::vector<std::vector<int>> out;
    for (auto& sigma : all_permutations(k + 1)) {
        bool keeps = sigma[static_cast<std::size_t>(k)] == k + 1;
        for (int i = 0; i < k && keeps; ++i) {
            keeps = (i <= r) == (sigma[static_cast<std::size_t>(i)] - 1 <= r);
        }
        if (keeps) out.push_back(sigma);
    }
    return out;
}

std::vector<int> ks_or(const VerifyOptions& o, std::vector<int> defaults) {
    if (o.k) return {*o.k};
    return defaults;
}

void require_positive(std::optional<int> v, const char* name, int min) {
    if (v && *v < min) throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be at least " + std::to_string(min));
}

void check_options(const VerifyOptions& o) {
    require_positive(o.k, "k", 1);
    require_positive(o.max_n, "max-n", 0);
    require_positive(o.max_m, "max-m", 0);
    require_positive(o.max_length, "max-length", 0);
}

}  // namespace

VerifyReport verify_equidistribution(const VerifyOptions& o) {
    check_options(o);
    VerifyReport rep;
    rep.suite = "equidistribution";
    for (int k : ks_or(o, {1, 2, 3})) {
        const int max_n = o.max_n.value_or(k == 1 ? 10 : k == 2 ? 6 : 4);
        rep.params.emplace_back("k", std::to_string(k));
        rep.params.emplace_back("max_n", std::to_string(max_n));
        const auto perms = all_permutations(k + 1);
        for (int n = 0; n <= max_n; ++n) {
            const auto paths = collect_paths(FamilyQuery::by_down_size(FamilySpec::k_dyck(k), n), o.limits, o.jobs);
            const Histogram h = histogram(paths, Variant::Plain, k);
            std::set<Steps> family;
            for (const auto& p : paths) family.insert(p.steps());
            for (const auto& sigma : perms) {
                const std::string in = kn(k, n) + " sigma=" + join(sigma);
                const Histogram hp = h.permuted(sigma);
                rep.expect(hp == h, "histogram-invariant", in, h.to_json(), hp.to_json());

                std::set<Steps> images;
                bool transported = true;
                std::string bad;
                for (const auto& p : paths) {
                    LatticePath q = stat_permuter(p, sigma);
                    auto before = stat_vector(p, Variant::Plain).tuple();
                    auto after = stat_vector(q, Variant::Plain).tuple();
                    std::vector<int> want(before.size());
                    for (std::size_t i = 0; i < before.size(); ++i) want[static_cast<std::size_t>(sigma[i] - 1)] = before[i];
                    if (after != want && transported) {
                        transported = false;
                        bad = render_path(p) + " -> " + render_path(q);
                    }
                    images.insert(q.steps());
                }
                rep.expect(transported, "stat-permuter-transport", in, "permuted statistics", bad);
                rep.expect(images == family, "stat-permuter-bijective", in, std::to_string(family.size()) + " images",
                           std::to_string(images.size()) + " distinct images");
            }
        }
    }
    return rep;
}

VerifyReport verify_bijection(const VerifyOptions& o) {
    check_options(o);
    VerifyReport rep;
    rep.suite = "bijection";
    for (int k : ks_or(o, {1, 2, 3})) {
        const int max_n = o.max_n.value_or(5);
        rep.params.emplace_back("k", std::to_string(k));
        rep.params.emplace_back("max_n", std::to_string(max_n));
        for (int n = 0; n <= max_n; ++n) {
            const std::string in = kn(k, n);
            const auto paths = collect_paths(FamilyQuery::by_down_size(FamilySpec::k_dyck(k), n), o.limits, o.jobs);
            for (const auto& p : paths) {
                const std::string pin = in + " path=" + render_path(p);
                const PositionalTree t = psi(p);
                const LatticePath back = psi_inv(t, k);
                rep.expect_eq("psi-inv-psi", pin, render_path(p), render_path(back));
                rep.expect_eq("statistic-transport", pin, join(stat_vector(p, Variant::Plain).tuple()), join(e_vector(t)));
                rep.expect(static_cast<int>(t.size()) == n, "node-count", pin, std::to_string(n), std::to_string(t.size()));

                LatticePath iter = p;
                for (int i = 1; i <= k; ++i) {
                    iter = kappa(iter);
                    rep.expect_eq("kappa-power", pin + " i=" + std::to_string(i), render_path(iter),
                                  render_path(kappa(p, i)));
                }
                rep.expect_eq("kappa-order-k", pin, render_path(p), render_path(iter));

                if (p.empty()) continue;
                const PositionalTree labelled = psi_with_labels(p);
                std::set<NodeLabel> seen;
                bool agree = labelled.root()->label == NodeLabel::rightmost();
                std::function<void(const TreeNode&)> walk = [&](const TreeNode& node) {
                    if (node.label) seen.insert(*node.label);
                    for (const TreeNode& c : node.children) {
                        if (!c.label) {
                            agree = false;
                        } else if (c.position == k + 1) {
                            agree = agree && c.label->kind == NodeLabel::Kind::DoubleDescent;
                        } else {
                            agree = agree && c.label->kind == NodeLabel::Kind::Peak && c.label->residue == c.position - 1;
                        }
                        walk(c);
                    }
                };
                walk(*labelled.root());
                std::set<NodeLabel> features;
                for (const auto& [idx, label] : label_features(p)) features.insert(label);
                rep.expect(agree, "label-position-agreement", pin, "label class matches position", tree_to_json(labelled));
                rep.expect(seen == features && static_cast<int>(seen.size()) == n,
                           "labels-are-features", pin, std::to_string(features.size()), std::to_string(seen.size()));
            }
            const auto trees = gen_trees(k + 1, n, o.limits);
            rep.expect_eq("tree-count", in, fuss_catalan(k, n).str(), std::to_string(trees.size()));
            for (const auto& t : trees) {
                const std::string tin = in + " tree=" + tree_to_json(t);
                rep.expect_eq("psi-psi-inv", tin, tree_to_json(t), tree_to_json(psi(psi_inv(t, k))));
            }
        }
    }
    return rep;
}

VerifyReport verify_closed_forms(const VerifyOptions& o) {
    check_options(o);
    VerifyReport rep;
    rep.suite = "closed-forms";
    for (int k : ks_or(o, {1, 2, 3})) {
        const int max_n = o.max_n.value_or(5);
        rep.params.emplace_back("k", std::to_string(k));
        rep.params.emplace_back("max_n", std::to_string(max_n));
        for (int n = 0; n <= max_n; ++n) {
            const std::string in = kn(k, n);
            const auto paths = collect_paths(FamilyQuery::by_down_size(FamilySpec::k_dyck(k), n), o.limits, o.jobs);
            rep.expect_eq("fuss-catalan", in, fuss_catalan(k, n).str(), std::to_string(paths.size()));
            if (n == 0) continue;
            const Histogram h = histogram(paths, Variant::Plain, k);
            for (const auto& key : h.entries()) {
                rep.expect(sum(key.first) == n - 1, "stat-sum", in + " stats=" + join(key.first), std::to_string(n - 1),
                           std::to_string(sum(key.first)));
            }
            for_each_box(k + 1, n - 1, [&](const std::vector<int>& r) {
                const std::string rin = in + " r=" + join(r);
                const BigCount brute = h.count(r);
                rep.expect_eq("count-joint", rin, brute.str(), count_joint(k, n, r).str());
                rep.expect_eq("lagrange", rin, brute.str(), lagrange_coefficient(k, n, r).str());
            });
            std::map<int, BigCount> peaks;
            for (const auto& [key, count] : h.entries()) {
                int total = 0;
                for (int i = 0; i < k; ++i) total += key[static_cast<std::size_t>(i)];
                peaks[total] += count;
            }
            for (int r = 0; r <= n - 1; ++r) {
                const std::string rin = in + " r=" + std::to_string(r);
                for (int slot = 0; slot <= k; ++slot) {
                    auto m = h.marginal(static_cast<std::size_t>(slot));
                    rep.expect_eq("count-marginal", rin + " slot=" + std::to_string(slot), m[r].str(),
                                  count_marginal(k, n, r).str());
                }
                rep.expect_eq("count-pk", rin, peaks[r].str(), count_pk(k, n, r).str());
                rep.expect_eq("marginal-reversal", rin, count_marginal(k, n, r).str(), count_pk(k, n, n - 1 - r).str());
            }
        }
    }
    return rep;
}

namespace {

void check_symmetric(VerifyReport& rep, const Polynomial& p, const std::vector<std::vector<int>>& perms,
                     const std::string& check, const std::string& in) {
    for (const auto& sigma : perms) {
        rep.expect_eq(check, in + " sigma=" + join(sigma), p.to_string(), p.permuted(sigma).to_string());
    }
}

FamilySpec named_spec(const std::string& name) {
    return name == "motzkin" ? FamilySpec::make(1, {{1, 1}}, 0) : FamilySpec::make(1, {{2, 1}}, 0);
}

}  // namespace

VerifyReport verify_series(const VerifyOptions& o) {
    check_options(o);
    VerifyReport rep;
    rep.suite = "series";
    const int max_n = o.max_n.value_or(5);
    const int max_length = o.max_length.value_or(8);
    const int max_m = o.max_m.value_or(3);
    const int ballot_n = o.max_n.value_or(4);
    rep.params.emplace_back("max_n", std::to_string(max_n));
    rep.params.emplace_back("max_length", std::to_string(max_length));
    rep.params.emplace_back("max_m", std::to_string(max_m));

    for (int k : ks_or(o, {1, 2})) {
        rep.params.emplace_back("k", std::to_string(k));
        const auto perms = all_permutations(k + 1);
        const TruncSeries f = solve_f(k, max_n);
        const TruncSeries plain = solve_f(k, max_n, false);
        rep.expect(f[0].is_zero(), "f-constant-term", "k=" + std::to_string(k), "0", f[0].to_string());
        for (int n = 1; n <= max_n; ++n) {
            const std::string in = kn(k, n);
            const Histogram h = histogram(FamilyQuery::by_down_size(FamilySpec::k_dyck(k), n), Variant::Plain, o.limits, o.jobs);
            rep.expect_eq("f-vs-enumeration", in, h.to_json(), terms_json(f[n].terms()));
            rep.expect_eq("f-fuss-catalan", in, fuss_catalan(k, n).str(), plain[n].sum().str());
            check_symmetric(rep, f[n], perms, "f-symmetric", in);
        }

        for (int m = 0; m <= max_m; ++m) {
            const FamilySpec spec = FamilySpec::ballot(k, m);
            const TruncSeries g = solve_g(k, m, ballot_n);
            const auto group = grouped_permutations(k, spec.residue());
            for (int n = 0; n <= ballot_n; ++n) {
                const std::string in = kn(k, n) + " m=" + std::to_string(m);
                const Histogram h = histogram(FamilyQuery::by_down_size(spec, n), Variant::PlainStarred, o.limits, o.jobs);
                rep.expect_eq("g-vs-enumeration", in, h.to_json(), terms_json(g[n].terms()));
                check_symmetric(rep, g[n], group, "g-grouped-symmetric", in);
            }
        }
    }

    for (const std::string name : {"motzkin", "schroeder"}) {
        const FamilySpec spec = named_spec(name);
        const auto perms = all_permutations(spec.k + 1);
        const TruncSeries f = solve_f_kac(spec, max_length);
        for (int len = 1; len <= max_length; ++len) {
            const std::string in = name + " length=" + std::to_string(len);
            const Histogram h = histogram(FamilyQuery::by_length(spec, len), Variant::Weak, o.limits, o.jobs);
            rep.expect_eq("f-kac-vs-enumeration", in, h.to_json(), terms_json(f[len].terms()));
            check_symmetric(rep, f[len], perms, "f-kac-symmetric", in);
        }
        for (int m = 0; m <= max_m; ++m) {
            const TruncSeries g = solve_g_kac(spec, m, max_length);
            const auto group = grouped_permutations(spec.k, m % spec.k);
            for (int len = 0; len <= max_length; ++len) {
                const std::string in = name + " m=" + std::to_string(m) + " length=" + std::to_string(len);
                const Histogram h =
                    histogram(FamilyQuery::by_length(spec.with_end_height(m), len), Variant::WeakStarred, o.limits, o.jobs);
                rep.expect_eq("g-kac-vs-enumeration", in, h.to_json(), terms_json(g[len].terms()));
                check_symmetric(rep, g[len], group, "g-kac-grouped-symmetric", in);
            }
        }
    }
    return rep;
}

VerifyReport verify_ballot(const VerifyOptions& o) {
    check_options(o);
    VerifyReport rep;
    rep.suite = "ballot";
    const int max_m = o.max_m.value_or(4);
    const int max_n = o.max_n.value_or(4);
    rep.params.emplace_back("max_m", std::to_string(max_m));
    rep.params.emplace_back("max_n", std::to_string(max_n));
    for (int k : ks_or(o, {1, 2, 3})) {
        rep.params.emplace_back("k", std::to_string(k));
        for (int m = 0; m <= max_m; ++m) {
            const FamilySpec spec = FamilySpec::ballot(k, m);
            const int ell = spec.ell();
            const int r = spec.residue();
            const auto group = grouped_permutations(k, r);
            for (int n = 0; n <= max_n; ++n) {
                const std::string in = kn(k, n) + " m=" + std::to_string(m);
                const auto paths = gen_ballot(k, m, n, o.limits);
                const Histogram h = histogram(paths, Variant::PlainStarred, k);
                for (const auto& sigma : group) {
                    rep.expect(h.permuted(sigma) == h, "grouped-symmetry", in + " sigma=" + join(sigma), h.to_json(),
                               h.permuted(sigma).to_json());
                }
                for (const auto& p : paths) {
                    const std::string pin = in + " path=" + render_path(p);
                    const auto star = stat_vector(p, Variant::PlainStarred);
                    const auto parts = ballot_decompose(p, m).parts;
                    rep.expect_eq("decomposition-roundtrip", pin, render_path(p),
                                  render_path(BallotDecomposition{spec, parts}.reassemble()));
                    for (int i = 0; i < k; ++i) {
                        int lifted = 0;
                        int shifted = 0;
                        int nonempty = 0;
                        for (int j = 0; j <= m; ++j) {
                            const LatticePath& part = parts[static_cast<std::size_t>(j)];
                            lifted += stat_vector(lift(part, j), Variant::PlainStarred).pk[static_cast<std::size_t>(i)];
                            shifted += stat_vector(kappa(part, j), Variant::Plain).pk[static_cast<std::size_t>(i)];
                        }
                        const int top = i <= r ? ell : ell - 1;
                        for (int j = 0; j <= top; ++j) nonempty += parts[static_cast<std::size_t>(k * j + i)].empty() ? 0 : 1;
                        const std::string iin = pin + " i=" + std::to_string(i);
                        const std::string want = std::to_string(star.pk[static_cast<std::size_t>(i)]);
                        rep.expect_eq("ballot-rec-lifted", iin, want, std::to_string(lifted));
                        rep.expect_eq("ballot-rec-kappa", iin, want, std::to_string(shifted + nonempty));
                    }
                }
                if (n == 0) continue;
                for_each_box(k + 1, n, [&](const std::vector<int>& s) {
                    if (sum(s) != n) return;
                    const std::string sin = in + " s=" + join(s);
                    rep.expect_eq("ballot-closed-form", sin, h.count(s).str(), count_ballot_joint(k, ell, r, n, s).str());
                    if (m == 0 && s[0] >= 1) {
                        std::vector<int> shifted = s;
                        --shifted[0];
                        rep.expect_eq("ballot-reduces-to-joint", sin, count_joint(k, n, shifted).str(),
                                      count_ballot_joint(k, 0, 0, n, s).str());
                    }
                });
            }
        }
    }
    return rep;
}

VerifyReport verify_figures(const VerifyOptions& o) {
    VerifyReport rep;
    rep.suite = "figures";
    {
        Histogram want(2, Variant::Plain);
        for (auto [key, c] : std::vector<std::pair<std::vector<int>, int>>{
                 {{0, 0, 2}, 1}, {{0, 1, 1}, 3}, {{1, 0, 1}, 3}, {{1, 1, 0}, 3}, {{0, 2, 0}, 1}, {{2, 0, 0}, 1}}) {
            want.add(key, c);
        }
        const Histogram got = histogram(gen_k_dyck(2, 3, o.limits), Variant::Plain, 2);
        rep.expect_eq("2-dyck-n3-tally", "k=2 n=3", want.to_json(), got.to_json());
    }
    {
        Histogram want(1, Variant::Weak);
        for (auto [key, c] : std::vector<std::pair<std::vector<int>, int>>{
                 {{0, 0}, 2}, {{0, 1}, 5}, {{1, 0}, 5}, {{1, 1}, 7}, {{2, 0}, 1}, {{0, 2}, 1}}) {
            want.add(key, c);
        }
        const FamilySpec motzkin = FamilySpec::make(1, {{1, 1}}, 0);
        const Histogram got = histogram(gen_kac(motzkin, 5, o.limits), Variant::Weak, 1);
        rep.expect_eq("motzkin-5-tally", "k=1 levels=1:1 length=5", want.to_json(), got.to_json());
    }
    const FamilySpec two = FamilySpec::k_dyck(2);
    rep.expect_eq("kappa-example", "uuduuuuududd", "uuuduuuduudd",
                  render_path(kappa(parse_path("uuduuuuududd", two))));
    {
        const LatticePath big = parse_path("uuduuuuududduuuduuuuududduuudd", two);
        const std::string want =
            R"({"label":"r","1":{"label":"p0_2","1":{"label":"p0_1"},"3":{"label":"dd_1","2":{"label":"p1_1"}}},)"
            R"("2":{"label":"p1_3","2":{"label":"p1_2"},"3":{"label":"dd_2","1":{"label":"p0_3"}}},"3":{"label":"dd_3"}})";
        const PositionalTree t = psi_with_labels(big);
        rep.expect_eq("labelled-psi-example", render_path(big), want, tree_to_json(t));
        rep.expect_eq("example-e-vector", render_path(big), "(3,3,3)", join(e_vector(t)));
        rep.expect_eq("example-size", render_path(big), "10", std::to_string(t.size()));
        rep.expect_eq("example-roundtrip", render_path(big), render_path(big),
                      render_path(psi_inv(tree_from_json(want, 3), 2)));
    }
    rep.expect_eq("ballot-2-1-n2", "k=2 m=1 n=2", "7", std::to_string(gen_ballot(2, 1, 2, o.limits).size()));
    return rep;
}

VerifyReport verify_deutsch(const VerifyOptions& o) {
    check_options(o);
    VerifyReport rep;
    rep.suite = "deutsch";
    const int max_n = o.max_n.value_or(8);
    const int narayana_n = o.max_n.value_or(10);
    rep.params.emplace_back("max_n", std::to_string(max_n));
    rep.params.emplace_back("narayana_max_n", std::to_string(narayana_n));
    for (int n = 0; n <= max_n; ++n) {
        for (const auto& p : gen_k_dyck(1, n, o.limits)) {
            const std::string in = "n=" + std::to_string(n) + " path=" + render_path(p);
            const LatticePath q = deutsch(p);
            rep.expect_eq("involution", in, render_path(p), render_path(deutsch(q)));
            auto s = stat_vector(p, Variant::Plain).tuple();
            std::reverse(s.begin(), s.end());
            rep.expect_eq("swaps-pk-dd", in, join(s), join(stat_vector(q, Variant::Plain).tuple()));
        }
    }
    for (int n = 1; n <= narayana_n; ++n) {
        const Histogram h = histogram(gen_k_dyck(1, n, o.limits), Variant::Plain, 1);
        const auto pk = h.marginal(0);
        const auto dd = h.marginal(1);
        for (int r = 0; r <= n - 1; ++r) {
            const std::string in = "n=" + std::to_string(n) + " r=" + std::to_string(r);
            auto at = [](const std::map<int, BigCount>& m, int key) {
                auto it = m.find(key);
                return it == m.end() ? BigCount(0) : it->second;
            };
            rep.expect_eq("pk-reversal", in, at(pk, r).str(), at(pk, n - 1 - r).str());
            rep.expect_eq("pk-dd-reversal", in, at(pk, r).str(), at(dd, n - 1 - r).str());
            rep.expect_eq("narayana", in, at(pk, r).str(), narayana(n, r + 1).str());
            rep.expect_eq("narayana-symmetry", in, narayana(n, r + 1).str(), narayana(n, n - r).str());
        }
    }
    return rep;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"equidistribution", "bijection", "closed-forms", "series",
                                                "ballot",           "figures",   "deutsch"};
    return names;
}

VerifyReport run_suite(std::string_view name, const VerifyOptions& options) {
    if (name == "equidistribution") return verify_equidistribution(options);
    if (name == "bijection") return verify_bijection(options);
    if (name == "closed-forms") return verify_closed_forms(options);
    if (name == "series") return verify_series(options);
    if (name == "ballot") return verify_ballot(options);
    if (name == "figures") return verify_figures(options);
    if (name == "deutsch") return verify_deutsch(options);
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + std::string(name) + "'");
}

}  // namespace peakmod
