#include "peakmod/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <thread>

namespace peakmod {

EnumerationLimits EnumerationLimits::from_env() {
    EnumerationLimits limits;
    if (const char* env = std::getenv("PEAKMOD_MAX_OBJECTS")) {
        char* end = nullptr;
        unsigned long long value = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0') {
            throw Error(ErrorCode::InvalidArgument, "PEAKMOD_MAX_OBJECTS must be a nonnegative integer");
        }
        limits.max_objects = value;
    }
    return limits;
}

namespace {

class PathSearch {
public:
    struct State {
        int height = 0;
        int ups_left = 0;
        int downs_left = 0;
        int length_left = 0;
    };

    PathSearch(const FamilyQuery& query, const EnumerationLimits& limits, std::atomic<std::uint64_t>& produced)
        : query_(query), limits_(limits), produced_(produced) {
        const FamilySpec& spec = query.spec;
        if (query.size < 0) throw Error(ErrorCode::InvalidArgument, "family size must be nonnegative");
        alphabet_.push_back(Step::up());
        alphabet_.push_back(Step::down());
        for (const auto& [a, c] : spec.levels) {
            for (int b = 1; b <= c; ++b) alphabet_.push_back(Step::level(a, b));
        }
        if (query.grade == FamilyQuery::Grade::DownSize) {
            if (spec.has_levels()) {
                throw Error(ErrorCode::InvalidArgument, "families with level steps must be graded by length");
            }
        } else {
            build_reach();
        }
    }

    State initial() const {
        State s;
        if (query_.grade == FamilyQuery::Grade::DownSize) {
            s.ups_left = query_.spec.k * query_.size + query_.spec.end_height;
            s.downs_left = query_.size;
        } else {
            s.length_left = query_.size;
        }
        return s;
    }

    bool viable(const State& s) const {
        if (query_.grade == FamilyQuery::Grade::DownSize) return true;
        return reachable(s.height, s.length_left);
    }

    bool complete(const State& s) const {
        if (query_.grade == FamilyQuery::Grade::DownSize) return s.ups_left == 0 && s.downs_left == 0;
        return s.length_left == 0;
    }

    std::optional<State> advance(const State& s, const Step& step) const {
        State next = s;
        const int k = query_.spec.k;
        if (query_.grade == FamilyQuery::Grade::DownSize) {
            if (step.is_up()) {
                if (s.ups_left == 0) return std::nullopt;
                --next.ups_left;
                ++next.height;
            } else if (step.is_down()) {
                if (s.downs_left == 0 || s.height < k) return std::nullopt;
                --next.downs_left;
                next.height -= k;
            } else {
                return std::nullopt;
            }
            return next;
        }
        if (step.length > s.length_left) return std::nullopt;
        next.length_left -= step.length;
        if (step.is_up()) next.height += 1;
        if (step.is_down()) {
            if (s.height < k) return std::nullopt;
            next.height -= k;
        }
        if (!reachable(next.height, next.length_left)) return std::nullopt;
        return next;
    }

    /// Visits every completion of the prefix, in canonical order.
    void complete_from(Steps& prefix, const State& s, const PathVisitor& visit) const {
        if (complete(s)) {
            emit(prefix, visit);
            return;
        }
        for (const Step& step : alphabet_) {
            if (auto next = advance(s, step)) {
                prefix.push_back(step);
                complete_from(prefix, *next, visit);
                prefix.pop_back();
            }
        }
    }

    /// Prefixes of exactly `depth` steps (or complete paths, if shorter).
    void prefixes(Steps& prefix, const State& s, int depth, std::vector<Steps>& out) const {
        if (depth == 0 || complete(s)) {
            out.push_back(prefix);
            return;
        }
        for (const Step& step : alphabet_) {
            if (auto next = advance(s, step)) {
                prefix.push_back(step);
                prefixes(prefix, *next, depth - 1, out);
                prefix.pop_back();
            }
        }
    }

    State replay(const Steps& prefix) const {
        State s = initial();
        for (const Step& step : prefix) s = *advance(s, step);
        return s;
    }

private:
    void emit(const Steps& steps, const PathVisitor& visit) const {
        if (++produced_ > limits_.max_objects) {
            throw Error(ErrorCode::ResourceLimit,
                        "more than " + std::to_string(limits_.max_objects) + " objects requested");
        }
        visit(LatticePath::trusted(query_.spec, steps));
    }

    void build_reach() {
        const FamilySpec& spec = query_.spec;
        const int length = query_.size;
        max_height_ = length + spec.end_height + spec.k;
        reach_.assign(static_cast<std::size_t>(length) + 1,
                      std::vector<char>(static_cast<std::size_t>(max_height_) + 1, 0));
        reach_[0][static_cast<std::size_t>(spec.end_height)] = 1;
        for (int r = 1; r <= length; ++r) {
            auto& row = reach_[static_cast<std::size_t>(r)];
            const auto& prev = reach_[static_cast<std::size_t>(r - 1)];
            for (int h = 0; h <= max_height_; ++h) {
                bool ok = (h + 1 <= max_height_ && prev[static_cast<std::size_t>(h + 1)]) ||
                          (h >= spec.k && prev[static_cast<std::size_t>(h - spec.k)]);
                for (const auto& [a, c] : spec.levels) {
                    if (!ok && a <= r) ok = reach_[static_cast<std::size_t>(r - a)][static_cast<std::size_t>(h)];
                }
                row[static_cast<std::size_t>(h)] = ok;
            }
        }
    }

    bool reachable(int height, int length_left) const {
        if (height < 0 || height > max_height_ || length_left < 0) return false;
        return reach_[static_cast<std::size_t>(length_left)][static_cast<std::size_t>(height)] != 0;
    }

    const FamilyQuery& query_;
    const EnumerationLimits& limits_;
    std::atomic<std::uint64_t>& produced_;
    Steps alphabet_;
    int max_height_ = 0;
    std::vector<std::vector<char>> reach_;
};

}  // namespace

void for_each_path(const FamilyQuery& query, const PathVisitor& visit, const EnumerationLimits& limits) {
    std::atomic<std::uint64_t> produced{0};
    PathSearch search(query, limits, produced);
    auto start = search.initial();
    if (!search.viable(start)) return;
    Steps prefix;
    search.complete_from(prefix, start, visit);
}

std::vector<LatticePath> collect_paths(const FamilyQuery& query, const EnumerationLimits& limits, int jobs) {
    std::vector<LatticePath> out;
    if (jobs <= 1) {
        for_each_path(query, [&](const LatticePath& p) { out.push_back(p); }, limits);
        return out;
    }

    std::atomic<std::uint64_t> produced{0};
    PathSearch search(query, limits, produced);
    auto start = search.initial();
    if (!search.viable(start)) return out;

    std::vector<Steps> prefixes;
    Steps scratch;
    search.prefixes(scratch, start, 6, prefixes);

    std::vector<std::vector<LatticePath>> results(prefixes.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < prefixes.size(); i = next++) {
                    Steps prefix = prefixes[i];
                    search.complete_from(prefix, search.replay(prefixes[i]),
                                         [&](const LatticePath& p) { results[i].push_back(p); });
                }
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
                next = prefixes.size();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    for (auto& r : results) {
        std::move(r.begin(), r.end(), std::back_inserter(out));
    }
    return out;
}

std::vector<LatticePath> gen_k_dyck(int k, int n, const EnumerationLimits& limits) {
    return collect_paths(FamilyQuery::by_down_size(FamilySpec::k_dyck(k), n), limits);
}

std::vector<LatticePath> gen_kac(const FamilySpec& spec, int length, const EnumerationLimits& limits) {
    return collect_paths(FamilyQuery::by_length(spec, length), limits);
}

std::vector<LatticePath> gen_ballot(int k, int m, int n, const EnumerationLimits& limits) {
    return collect_paths(FamilyQuery::by_down_size(FamilySpec::ballot(k, m), n), limits);
}

// ---------------------------------------------------------------------------
// Trees
// ---------------------------------------------------------------------------

namespace {

class TreeFactory {
public:
    TreeFactory(int arity, const EnumerationLimits& limits) : arity_(arity), limits_(limits) {}

    // All nonempty trees with exactly n nodes (n >= 1).
    const std::vector<TreeNode>& of_size(int n) {
        if (static_cast<int>(memo_.size()) <= n) memo_.resize(static_cast<std::size_t>(n) + 1);
        auto& slot = memo_[static_cast<std::size_t>(n)];
        if (slot) return *slot;
        std::vector<TreeNode> trees;
        std::vector<int> sizes(static_cast<std::size_t>(arity_), 0);
        compositions(n - 1, 0, sizes, trees);
        slot = std::move(trees);
        return *slot;
    }

private:
    void compositions(int remaining, std::size_t pos, std::vector<int>& sizes, std::vector<TreeNode>& out) {
        if (pos + 1 == sizes.size()) {
            sizes[pos] = remaining;
            TreeNode root;
            product(sizes, 0, root, out);
            return;
        }
        for (int s = remaining; s >= 0; --s) {
            sizes[pos] = s;
            compositions(remaining - s, pos + 1, sizes, out);
        }
    }

    void product(const std::vector<int>& sizes, std::size_t pos, TreeNode& root, std::vector<TreeNode>& out) {
        if (pos == sizes.size()) {
            if (out.size() >= limits_.max_objects) {
                throw Error(ErrorCode::ResourceLimit,
                            "more than " + std::to_string(limits_.max_objects) + " objects requested");
            }
            out.push_back(root);
            return;
        }
        if (sizes[pos] == 0) {
            product(sizes, pos + 1, root, out);
            return;
        }
        // memo_ was sized by the outermost call, so this reference stays valid.
        const std::vector<TreeNode>& subtrees = of_size(sizes[pos]);
        for (const TreeNode& sub : subtrees) {
            TreeNode child = sub;
            child.position = static_cast<int>(pos) + 1;
            root.children.push_back(std::move(child));
            product(sizes, pos + 1, root, out);
            root.children.pop_back();
        }
    }

    int arity_;
    const EnumerationLimits& limits_;
    std::vector<std::optional<std::vector<TreeNode>>> memo_;
};

}  // namespace

std::vector<PositionalTree> gen_trees(int m, int n, const EnumerationLimits& limits) {
    if (m < 1 || n < 0) throw Error(ErrorCode::InvalidArgument, "gen_trees needs m >= 1 and n >= 0");
    if (n == 0) return {PositionalTree::make(m, std::nullopt)};
    TreeFactory factory(m, limits);
    std::vector<PositionalTree> out;
    for (const TreeNode& root : factory.of_size(n)) out.push_back(PositionalTree::make(m, root));
    return out;
}

// ---------------------------------------------------------------------------
// Histogram
// ---------------------------------------------------------------------------

void Histogram::add(const Key& stats, const BigCount& count) {
    if (count == 0) return;
    entries_[stats] += count;
}

void Histogram::merge(const Histogram& other) {
    for (const auto& [key, count] : other.entries_) add(key, count);
}

BigCount Histogram::total() const {
    BigCount t = 0;
    for (const auto& [key, count] : entries_) t += count;
    return t;
}

BigCount Histogram::count(const Key& stats) const {
    auto it = entries_.find(stats);
    return it == entries_.end() ? BigCount(0) : it->second;
}

Histogram Histogram::permuted(std::span<const int> sigma) const {
    Histogram out(k_, variant_);
    for (const auto& [key, count] : entries_) {
        if (sigma.size() != key.size()) throw Error(ErrorCode::BadPermutation, "permutation size mismatch");
        Key moved(key.size());
        for (std::size_t i = 0; i < key.size(); ++i) moved[static_cast<std::size_t>(sigma[i] - 1)] = key[i];
        out.add(moved, count);
    }
    return out;
}

std::map<int, BigCount> Histogram::marginal(std::size_t slot) const {
    std::map<int, BigCount> out;
    for (const auto& [key, count] : entries_) out[key.at(slot)] += count;
    return out;
}

std::string Histogram::to_json() const {
    std::string out = "{\"total\":" + total().str() + ",\"entries\":[";
    bool first = true;
    for (const auto& [key, count] : entries_) {
        if (!first) out += ',';
        first = false;
        out += "{\"stats\":[";
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(key[i]);
        }
        out += "],\"count\":" + count.str() + "}";
    }
    out += "]}";
    return out;
}

std::string Histogram::to_csv() const {
    std::string out;
    for (int i = 0; i < k_; ++i) out += "pk" + std::to_string(i) + ",";
    out += "dd,count\n";
    for (const auto& [key, count] : entries_) {
        for (int v : key) out += std::to_string(v) + ",";
        out += count.str() + "\n";
    }
    return out;
}

Histogram histogram(std::span<const LatticePath> paths, Variant variant, int k) {
    Histogram h(k, variant);
    for (const LatticePath& p : paths) h.add(stat_vector(p, variant).tuple());
    return h;
}

Histogram histogram(const FamilyQuery& query, Variant variant, const EnumerationLimits& limits, int jobs) {
    if (jobs <= 1) {
        Histogram h(query.spec.k, variant);
        for_each_path(query, [&](const LatticePath& p) { h.add(stat_vector(p, variant).tuple()); }, limits);
        return h;
    }
    auto paths = collect_paths(query, limits, jobs);
    return histogram(paths, variant, query.spec.k);
}

std::vector<std::vector<int>> all_permutations(int m) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace peakmod
