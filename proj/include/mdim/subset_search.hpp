#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

enum class Parameter { resolving, doubly, strong };

std::string to_string(Parameter kind);
Parameter parse_parameter(const std::string& text);

struct SearchBudget {
    std::uint64_t max_subsets = 200'000'000;
    std::chrono::milliseconds timeout{0};  // zero: no wall-clock limit
};

/// Thrown when a search hits its budget; never replaced by a guess.
class ResourceExhausted : public std::runtime_error {
public:
    ResourceExhausted(std::uint64_t subsets, const std::string& why);
    std::uint64_t subsets_examined() const noexcept { return subsets_; }

private:
    std::uint64_t subsets_;
};

/// Counts examined subsets against a budget.
class BudgetMeter {
public:
    explicit BudgetMeter(const SearchBudget& budget);

    void tick() {
        if (++count_ > budget_.max_subsets) throw ResourceExhausted(count_ - 1, "subset budget exceeded");
        if ((count_ & 0x3ff) == 0 && budget_.timeout.count() > 0) check_clock();
    }
    std::uint64_t count() const noexcept { return count_; }
    double elapsed_seconds() const;

private:
    void check_clock() const;

    SearchBudget budget_;
    std::uint64_t count_ = 0;
    std::chrono::steady_clock::time_point start_;
};

/// Constraints shared by the exact searches. Every accepted set contains all
/// of `forced` and meets every group in `required_groups` (groups disjoint).
struct SearchConstraints {
    std::vector<VertexId> forced;
    std::vector<std::vector<VertexId>> required_groups;
    std::size_t min_size = 1;
};

/// Plain enumeration: sizes ascending, subsets in lexicographic order, each
/// checked with the full verifier. `forced` is ignored.
std::optional<std::vector<VertexId>> naive_min_search(Parameter kind, const DistanceMatrix& d,
                                                      const SearchConstraints& constraints, BudgetMeter& meter);

/// Same search order and answer as the naive search restricted to supersets
/// of `forced`, with incremental state and suffix-feasibility pruning.
std::optional<std::vector<VertexId>> pruned_min_search(Parameter kind, const DistanceMatrix& d,
                                                       const SearchConstraints& constraints, BudgetMeter& meter);

}  // namespace mdim
