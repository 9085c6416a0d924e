#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

namespace bikernel {

/// Maximum bipartite matching by Hopcroft-Karp. Adjacency is sorted before
/// solving, so the result depends only on the edge set.
class BipartiteMatching {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    BipartiteMatching(std::size_t left, std::size_t right) : adj_(left), mate_left_(left, npos), mate_right_(right, npos) {}

    void add_edge(std::size_t l, std::size_t r) { adj_.at(l).push_back(r); (void)mate_right_.at(r); }

    std::size_t left_size() const noexcept { return adj_.size(); }
    std::size_t right_size() const noexcept { return mate_right_.size(); }
    const std::vector<std::size_t>& neighbors(std::size_t l) const { return adj_.at(l); }

    std::size_t solve() {
        for (auto& list : adj_) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
        std::fill(mate_left_.begin(), mate_left_.end(), npos);
        std::fill(mate_right_.begin(), mate_right_.end(), npos);
        size_ = 0;
        while (layer()) {
            for (std::size_t l = 0; l < adj_.size(); ++l) {
                if (mate_left_[l] == npos && augment(l)) ++size_;
            }
        }
        return size_;
    }

    std::size_t size() const noexcept { return size_; }
    bool saturates_left() const noexcept { return size_ == adj_.size(); }

    std::optional<std::size_t> mate_of_left(std::size_t l) const {
        return mate_left_.at(l) == npos ? std::nullopt : std::optional(mate_left_[l]);
    }
    std::optional<std::size_t> mate_of_right(std::size_t r) const {
        return mate_right_.at(r) == npos ? std::nullopt : std::optional(mate_right_[r]);
    }

    /// After solve(): a left set W with |N(W)| < |W| (alternating-path closure
    /// of the smallest unmatched left vertex), or empty if every left vertex
    /// is matched.
    std::vector<std::size_t> hall_violator() const {
        std::size_t start = npos;
        for (std::size_t l = 0; l < adj_.size(); ++l) {
            if (mate_left_[l] == npos) {
                start = l;
                break;
            }
        }
        if (start == npos) return {};
        std::vector<bool> seen_left(adj_.size(), false), seen_right(mate_right_.size(), false);
        std::vector<std::size_t> queue{start};
        seen_left[start] = true;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            for (std::size_t r : adj_[queue[i]]) {
                if (seen_right[r]) continue;
                seen_right[r] = true;
                std::size_t l = mate_right_[r];  // matched: the matching is maximum
                if (l != npos && !seen_left[l]) {
                    seen_left[l] = true;
                    queue.push_back(l);
                }
            }
        }
        std::sort(queue.begin(), queue.end());
        return queue;
    }

private:
    bool layer() {
        std::queue<std::size_t> q;
        dist_.assign(adj_.size(), npos);
        for (std::size_t l = 0; l < adj_.size(); ++l) {
            if (mate_left_[l] == npos) {
                dist_[l] = 0;
                q.push(l);
            }
        }
        bool reachable_free = false;
        while (!q.empty()) {
            std::size_t l = q.front();
            q.pop();
            for (std::size_t r : adj_[l]) {
                std::size_t next = mate_right_[r];
                if (next == npos) {
                    reachable_free = true;
                } else if (dist_[next] == npos) {
                    dist_[next] = dist_[l] + 1;
                    q.push(next);
                }
            }
        }
        return reachable_free;
    }

    bool augment(std::size_t l) {
        for (std::size_t r : adj_[l]) {
            std::size_t next = mate_right_[r];
            if (next == npos || (dist_[next] == dist_[l] + 1 && augment(next))) {
                mate_left_[l] = r;
                mate_right_[r] = l;
                return true;
            }
        }
        dist_[l] = npos;
        return false;
    }

    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> mate_left_;
    std::vector<std::size_t> mate_right_;
    std::vector<std::size_t> dist_;
    std::size_t size_ = 0;
};

}  // namespace bikernel
