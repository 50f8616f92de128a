#include "mdim/subset_search.hpp"

#include <algorithm>
#include <numeric>

#include "mdim/bitset.hpp"
#include "mdim/resolving.hpp"

namespace mdim {

std::string to_string(Parameter kind) {
    switch (kind) {
        case Parameter::resolving: return "resolving";
        case Parameter::doubly: return "doubly";
        case Parameter::strong: return "strong";
    }
    return "?";
}

Parameter parse_parameter(const std::string& text) {
    if (text == "resolving") return Parameter::resolving;
    if (text == "doubly") return Parameter::doubly;
    if (text == "strong") return Parameter::strong;
    throw std::invalid_argument("unknown kind '" + text + "' (expected resolving, doubly or strong)");
}

ResourceExhausted::ResourceExhausted(std::uint64_t subsets, const std::string& why)
    : std::runtime_error(why + " after " + std::to_string(subsets) + " subsets"), subsets_(subsets) {}

BudgetMeter::BudgetMeter(const SearchBudget& budget) : budget_(budget), start_(std::chrono::steady_clock::now()) {}

double BudgetMeter::elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

void BudgetMeter::check_clock() const {
    if (std::chrono::steady_clock::now() - start_ > budget_.timeout) {
        throw ResourceExhausted(count_, "timeout exceeded");
    }
}

namespace {

bool verify(Parameter kind, const DistanceMatrix& d, const std::vector<VertexId>& set) {
    OrderedVertexSet s(set);
    switch (kind) {
        case Parameter::resolving: return is_resolving(d, s);
        case Parameter::doubly: return is_doubly_resolving(d, s);
        case Parameter::strong: return is_strong_resolving(d, s);
    }
    return false;
}

std::size_t smallest_size(Parameter kind, const SearchConstraints& c) {
    std::size_t lo = std::max<std::size_t>(c.min_size, 1);
    if (kind == Parameter::doubly) lo = std::max<std::size_t>(lo, 2);
    return lo;
}

bool meets_groups(const std::vector<std::vector<VertexId>>& groups, const std::vector<VertexId>& sorted_set) {
    for (const auto& g : groups) {
        bool hit = std::any_of(g.begin(), g.end(), [&](VertexId v) {
            return std::binary_search(sorted_set.begin(), sorted_set.end(), v);
        });
        if (!hit) return false;
    }
    return true;
}

std::size_t pair_index(std::size_t n, VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    // Row-major upper triangle without the diagonal.
    return std::size_t{u} * (2 * n - u - 1) / 2 + (v - u - 1);
}

// Depth-first lexicographic search over the free candidates for one fixed size.
class PrunedSearch {
public:
    PrunedSearch(Parameter kind, const DistanceMatrix& d, const SearchConstraints& c, BudgetMeter& meter)
        : kind_(kind), d_(d), n_(d.order()), meter_(meter), forced_(c.forced) {
        std::sort(forced_.begin(), forced_.end());
        std::vector<bool> is_forced(n_, false);
        for (VertexId v : forced_) is_forced[v] = true;
        for (VertexId v = 0; v < n_; ++v) {
            if (!is_forced[v]) candidates_.push_back(v);
        }
        cand_pos_.assign(n_, -1);
        for (std::size_t i = 0; i < candidates_.size(); ++i) cand_pos_[candidates_[i]] = static_cast<int>(i);

        group_of_.assign(n_, -1);
        for (const auto& g : c.required_groups) {
            int gi = static_cast<int>(group_last_.size());
            int last = -1;
            bool hit = false;
            for (VertexId v : g) {
                if (group_of_[v] != -1) throw std::invalid_argument("required groups must be disjoint");
                group_of_[v] = gi;
                if (is_forced[v]) hit = true;
                last = std::max(last, cand_pos_[v]);
            }
            group_last_.push_back(last);
            group_hits_.push_back(hit ? 1 : 0);
            if (!hit) ++open_groups_;
        }

        if (kind_ == Parameter::doubly) {
            init_difference_tables();
        } else {
            init_cover_tables();
        }
    }

    std::optional<std::vector<VertexId>> run(std::size_t size) {
        if (size < forced_.size()) return std::nullopt;
        std::size_t need = size - forced_.size();
        if (need > candidates_.size()) return std::nullopt;
        chosen_.clear();
        bool found = false;
        if (kind_ == Parameter::doubly) {
            std::vector<VertexId> cls(n_, 0);
            std::optional<VertexId> anchor;
            std::size_t classes = 1;
            for (VertexId f : forced_) classes = add_anchor_or_refine(cls, anchor, f, classes);
            found = dfs_partition(0, need, cls, anchor, classes);
        } else {
            Bitset uncovered(pair_count());
            uncovered.set_all();
            for (VertexId f : forced_) uncovered.subtract(cover_[f]);
            found = dfs_cover(0, need, uncovered);
        }
        if (!found) return std::nullopt;
        std::vector<VertexId> out = forced_;
        out.insert(out.end(), chosen_.begin(), chosen_.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    std::size_t candidate_count() const noexcept { return candidates_.size(); }

private:
    std::size_t pair_count() const noexcept { return n_ * (n_ - 1) / 2; }

    // --- group bookkeeping -------------------------------------------------

    bool groups_feasible(std::size_t pos, std::size_t left) const {
        if (open_groups_ > left) return false;
        if (open_groups_ == 0) return true;
        for (std::size_t g = 0; g < group_last_.size(); ++g) {
            if (group_hits_[g] == 0 && (group_last_[g] < 0 || static_cast<std::size_t>(group_last_[g]) < pos)) {
                return false;
            }
        }
        return true;
    }

    void push(VertexId v) {
        chosen_.push_back(v);
        if (int g = group_of_[v]; g >= 0 && group_hits_[static_cast<std::size_t>(g)]++ == 0) --open_groups_;
    }

    void pop() {
        VertexId v = chosen_.back();
        chosen_.pop_back();
        if (int g = group_of_[v]; g >= 0 && --group_hits_[static_cast<std::size_t>(g)] == 0) ++open_groups_;
    }

    // --- resolving / strong: pair coverage ---------------------------------

    void init_cover_tables() {
        const std::size_t pairs = pair_count();
        cover_.assign(n_, Bitset(pairs));
        for (VertexId u = 0; u < n_; ++u) {
            for (VertexId v = u + 1; v < n_; ++v) {
                std::size_t p = pair_index(n_, u, v);
                for (VertexId w = 0; w < n_; ++w) {
                    bool hit = kind_ == Parameter::resolving ? d_(u, w) != d_(v, w) : strongly_resolves(d_, w, u, v);
                    if (hit) cover_[w].set(p);
                }
            }
        }
        suffix_cover_.assign(candidates_.size() + 1, Bitset(pairs));
        for (std::size_t i = candidates_.size(); i-- > 0;) {
            suffix_cover_[i] = suffix_cover_[i + 1];
            suffix_cover_[i] |= cover_[candidates_[i]];
        }
    }

    bool dfs_cover(std::size_t pos, std::size_t left, const Bitset& uncovered) {
        if (left == 0) return uncovered.none() && open_groups_ == 0;
        for (std::size_t j = pos; j + left <= candidates_.size(); ++j) {
            // Every open pair must stay coverable by what is still selectable.
            if (uncovered.intersects_complement_of(suffix_cover_[j])) return false;
            if (!groups_feasible(j, left)) return false;
            meter_.tick();
            VertexId v = candidates_[j];
            Bitset next = uncovered;
            next.subtract(cover_[v]);
            push(v);
            if (dfs_cover(j + 1, left - 1, next)) return true;
            pop();
        }
        return false;
    }

    // --- doubly: refinement by distance differences ------------------------

    void init_difference_tables() {
        const std::size_t pairs = pair_count();
        tail_value_.assign(pairs, 0);
        last_differ_.assign(pairs, -1);
        if (candidates_.empty()) return;
        const VertexId tail = candidates_.back();
        for (VertexId u = 0; u < n_; ++u) {
            for (VertexId v = u + 1; v < n_; ++v) {
                std::size_t p = pair_index(n_, u, v);
                int tv = d_(u, tail) - d_(v, tail);
                tail_value_[p] = tv;
                for (std::size_t j = candidates_.size(); j-- > 0;) {
                    VertexId w = candidates_[j];
                    if (d_(u, w) - d_(v, w) != tv) {
                        last_differ_[p] = static_cast<int>(j);
                        break;
                    }
                }
            }
        }
    }

    std::size_t add_anchor_or_refine(std::vector<VertexId>& cls, std::optional<VertexId>& anchor, VertexId w,
                                     std::size_t classes) const {
        if (!anchor) {
            anchor = w;
            return classes;
        }
        // Key each vertex by (class, d(u,w) - d(u,anchor)) and renumber.
        std::vector<std::pair<std::uint64_t, VertexId>> keyed(n_);
        for (VertexId u = 0; u < n_; ++u) {
            auto diff = static_cast<std::int64_t>(d_(u, w)) - d_(u, *anchor) + static_cast<std::int64_t>(n_);
            keyed[u] = {(std::uint64_t{cls[u]} << 32) | static_cast<std::uint64_t>(diff), u};
        }
        std::sort(keyed.begin(), keyed.end());
        VertexId next = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (i > 0 && keyed[i].first != keyed[i - 1].first) ++next;
            cls[keyed[i].second] = next;
        }
        return static_cast<std::size_t>(next) + 1;
    }

    // Some still-merged pair can no longer be split by candidates at index >= pos.
    bool stuck_pair(const std::vector<VertexId>& cls, VertexId anchor, std::size_t pos) {
        if (pos >= candidates_.size()) return true;
        // Counting sort by class id, then inspect pairs inside each run.
        bucket_start_.assign(n_ + 1, 0);
        for (VertexId u = 0; u < n_; ++u) ++bucket_start_[cls[u] + 1];
        for (std::size_t c = 0; c < n_; ++c) bucket_start_[c + 1] += bucket_start_[c];
        by_class_.resize(n_);
        fill_.assign(bucket_start_.begin(), bucket_start_.end() - 1);
        for (VertexId u = 0; u < n_; ++u) by_class_[fill_[cls[u]]++] = u;
        for (std::size_t c = 0; c < n_; ++c) {
            for (std::size_t a = bucket_start_[c]; a < bucket_start_[c + 1]; ++a) {
                for (std::size_t b = a + 1; b < bucket_start_[c + 1]; ++b) {
                    VertexId x = by_class_[a];
                    VertexId y = by_class_[b];
                    std::size_t p = pair_index(n_, x, y);
                    if (last_differ_[p] >= static_cast<int>(pos)) continue;
                    int mu = d_(x, anchor) - d_(y, anchor);
                    if (tail_value_[p] == mu) return true;
                }
            }
        }
        return false;
    }

    bool dfs_partition(std::size_t pos, std::size_t left, const std::vector<VertexId>& cls,
                       std::optional<VertexId> anchor, std::size_t classes) {
        if (left == 0) return classes == n_ && open_groups_ == 0;
        for (std::size_t j = pos; j + left <= candidates_.size(); ++j) {
            if (anchor && classes < n_ && stuck_pair(cls, *anchor, j)) return false;
            if (!groups_feasible(j, left)) return false;
            meter_.tick();
            VertexId v = candidates_[j];
            std::vector<VertexId> next = cls;
            std::optional<VertexId> next_anchor = anchor;
            std::size_t next_classes = add_anchor_or_refine(next, next_anchor, v, classes);
            push(v);
            if (dfs_partition(j + 1, left - 1, next, next_anchor, next_classes)) return true;
            pop();
        }
        return false;
    }

    Parameter kind_;
    const DistanceMatrix& d_;
    std::size_t n_;
    BudgetMeter& meter_;
    std::vector<VertexId> forced_;
    std::vector<VertexId> candidates_;
    std::vector<int> cand_pos_;
    std::vector<VertexId> chosen_;

    std::vector<int> group_of_;
    std::vector<int> group_last_;
    std::vector<int> group_hits_;
    std::size_t open_groups_ = 0;

    std::vector<Bitset> cover_;
    std::vector<Bitset> suffix_cover_;

    std::vector<int> tail_value_;
    std::vector<int> last_differ_;
    std::vector<std::size_t> bucket_start_;
    std::vector<std::size_t> fill_;
    std::vector<VertexId> by_class_;
};

}  // namespace

std::optional<std::vector<VertexId>> naive_min_search(Parameter kind, const DistanceMatrix& d,
                                                      const SearchConstraints& constraints, BudgetMeter& meter) {
    const std::size_t n = d.order();
    for (std::size_t k = smallest_size(kind, constraints); k <= n; ++k) {
        std::vector<VertexId> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            meter.tick();
            if (meets_groups(constraints.required_groups, idx) && verify(kind, d, idx)) return idx;
            // Advance to the next k-combination in lexicographic order.
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

std::optional<std::vector<VertexId>> pruned_min_search(Parameter kind, const DistanceMatrix& d,
                                                       const SearchConstraints& constraints, BudgetMeter& meter) {
    const std::size_t n = d.order();
    if (n < 2) return naive_min_search(kind, d, constraints, meter);
    PrunedSearch search(kind, d, constraints, meter);
    std::size_t lo = std::max(smallest_size(kind, constraints), constraints.forced.size());
    lo = std::max(lo, constraints.required_groups.size());
    for (std::size_t k = lo; k <= n; ++k) {
        if (auto found = search.run(k)) return found;
    }
    return std::nullopt;
}

}  // namespace mdim
