#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "peakmod/core.hpp"
#include "peakmod/numeric.hpp"
#include "peakmod/statistics.hpp"

namespace peakmod {

struct EnumerationLimits {
    std::uint64_t max_objects = 10'000'000;

    /// Default cap, overridden by PEAKMOD_MAX_OBJECTS when set.
    static EnumerationLimits from_env();
};

/// Which family to generate and how it is graded: by down-size (pure paths
/// only; level steps would make the family infinite) or by total length |P|.
struct FamilyQuery {
    enum class Grade { DownSize, Length };

    FamilySpec spec;
    Grade grade = Grade::DownSize;
    int size = 0;

    static FamilyQuery by_down_size(FamilySpec spec, int n) { return {std::move(spec), Grade::DownSize, n}; }
    static FamilyQuery by_length(FamilySpec spec, int length) { return {std::move(spec), Grade::Length, length}; }
};

using PathVisitor = std::function<void(const LatticePath&)>;

/// Depth-first generation in canonical step order (Up < Down < Level by (a, b)).
/// Throws Error(ResourceLimit) once more than limits.max_objects paths are produced.
void for_each_path(const FamilyQuery& query, const PathVisitor& visit, const EnumerationLimits& limits = {});

/// Every path of the query, optionally partitioned over `jobs` workers by
/// fixed prefixes; the result order is independent of `jobs`.
std::vector<LatticePath> collect_paths(const FamilyQuery& query, const EnumerationLimits& limits = {}, int jobs = 1);

/// All pure k-Dyck paths of down-size n.
std::vector<LatticePath> gen_k_dyck(int k, int n, const EnumerationLimits& limits = {});
/// All paths of the spec's family with |P| = length (spec.end_height may be nonzero).
std::vector<LatticePath> gen_kac(const FamilySpec& spec, int length, const EnumerationLimits& limits = {});
/// All pure (k,m)-ballot paths of down-size n.
std::vector<LatticePath> gen_ballot(int k, int m, int n, const EnumerationLimits& limits = {});
/// All positional m-ary trees on n nodes (n = 0 gives the empty tree).
std::vector<PositionalTree> gen_trees(int m, int n, const EnumerationLimits& limits = {});

/// Exact multiset of statistic tuples.
class Histogram {
public:
    using Key = std::vector<int>;

    Histogram() = default;
    Histogram(int k, Variant variant) : k_(k), variant_(variant) {}

    void add(const Key& stats, const BigCount& count = 1);
    void merge(const Histogram& other);

    int k() const { return k_; }
    Variant variant() const { return variant_; }
    const std::map<Key, BigCount>& entries() const { return entries_; }
    BigCount total() const;
    BigCount count(const Key& stats) const;
    bool empty() const { return entries_.empty(); }

    /// Coordinate i of every key moves to sigma[i-1] (1-based slots).
    Histogram permuted(std::span<const int> sigma) const;
    /// Distribution of a single coordinate.
    std::map<int, BigCount> marginal(std::size_t slot) const;

    /// {"total":T,"entries":[{"stats":[...],"count":C}]}, entries sorted by stats.
    std::string to_json() const;
    /// Header `s0,...,sk,count`.
    std::string to_csv() const;

    bool operator==(const Histogram& other) const { return entries_ == other.entries_; }

private:
    int k_ = 1;
    Variant variant_ = Variant::Plain;
    std::map<Key, BigCount> entries_;
};

Histogram histogram(std::span<const LatticePath> paths, Variant variant, int k);
Histogram histogram(const FamilyQuery& query, Variant variant, const EnumerationLimits& limits = {}, int jobs = 1);

/// Every permutation of 1..m in lexicographic order.
std::vector<std::vector<int>> all_permutations(int m);

}  // namespace peakmod
