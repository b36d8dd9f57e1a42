#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treepoly/canonical.hpp"
#include "treepoly/fingerprint.hpp"

namespace treepoly {

inline constexpr int kDefaultMaxN = 16;
inline constexpr int kLargeMaxN = 19;
inline constexpr const char* kCacheEnvVar = "TREEPOLY_CACHE_DIR";
inline constexpr int kCacheVersion = 1;

struct ClassifyOptions {
    int n = 1;
    InvariantTag tag = InvariantTag::hdp;
    int jobs = 1;
    bool allow_large = false;       // raise the cap from 16 to 19
    std::size_t chunk_size = 512;   // trees per work item
    /// Group by full payload instead of digest (the collision-safety reference).
    bool full_comparison = false;
    /// Directory for cached reports; empty means use kCacheEnvVar if set.
    std::string cache_dir;
    bool use_cache = false;
};

struct ClassMember {
    CanonicalCode code;
    Tree tree;  // canonical form
};

struct ClassReport {
    int n = 0;
    InvariantTag tag = InvariantTag::hdp;
    std::uint64_t num_trees = 0;
    /// Non-singleton classes; members sorted by code, classes by first member.
    std::vector<std::vector<ClassMember>> classes;
    /// class size -> number of classes of that size (singletons included).
    std::map<std::size_t, std::uint64_t> histogram;
    double elapsed_ms = 0;
    bool from_cache = false;

    std::uint64_t count_of_size(std::size_t size) const;
    /// Sum over the histogram of size * count.
    std::uint64_t trees_in_classes() const;

    /// {n, invariant, num_trees, classes:[{size, members:[{code, edges}]}],
    ///  histogram, elapsed_ms}. Without timing the output is deterministic.
    std::string to_json(bool include_timing = true) const;
    static ClassReport from_json(const std::string& text);
};

/// Throws DomainError when n is outside 1..cap.
ClassReport classify(const ClassifyOptions& options);

/// Class id of every free tree on n vertices (generator order) under `tag`,
/// computed by full payload comparison. Ids number classes by first appearance.
std::vector<int> class_ids(int n, InvariantTag tag);

struct RefinementResult {
    InvariantTag finer;
    InvariantTag coarser;
    bool refines = false;
    /// When refinement fails: two trees equal under `finer`, distinct under `coarser`.
    std::optional<std::pair<Tree, Tree>> counterexample;
};

struct RefinementReport {
    int n = 0;
    std::vector<RefinementResult> results;  // every ordered pair of gdp, hdp, stp, soup
    std::map<InvariantTag, std::size_t> class_counts;

    const RefinementResult& get(InvariantTag finer, InvariantTag coarser) const;
    bool same_partition(InvariantTag a, InvariantTag b) const;
    std::string to_json() const;
};

RefinementReport compare_invariants(int n, bool allow_large = false);

} // namespace treepoly
