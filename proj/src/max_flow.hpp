#pragma once

#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace flexdp::detail {

/// Dinic's algorithm on integer capacities.
class MaxFlow {
public:
    explicit MaxFlow(int node_count) :
        adjacency_(static_cast<std::size_t>(node_count)),
        level_(static_cast<std::size_t>(node_count)),
        cursor_(static_cast<std::size_t>(node_count))
    {
    }

    void add_edge(int from, int to, std::int64_t capacity)
    {
        adjacency_[from].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, capacity});
        adjacency_[to].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, 0});
    }

    std::int64_t run(int source, int sink)
    {
        std::int64_t flow = 0;
        while (build_levels(source, sink)) {
            std::fill(cursor_.begin(), cursor_.end(), 0);
            while (std::int64_t pushed = augment(source, sink, std::numeric_limits<std::int64_t>::max()))
                flow += pushed;
        }
        return flow;
    }

    /// After run(): nodes reachable from the source in the residual graph.
    std::vector<char> source_side(int source) const
    {
        std::vector<char> seen(adjacency_.size(), 0);
        std::vector<int> stack{source};
        seen[source] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int a : adjacency_[x])
                if (arcs_[a].capacity > 0 && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = 1;
                    stack.push_back(arcs_[a].to);
                }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        std::int64_t capacity;
    };

    bool build_levels(int source, int sink)
    {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> queue;
        level_[source] = 0;
        queue.push(source);
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop();
            for (int a : adjacency_[x])
                if (arcs_[a].capacity > 0 && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[x] + 1;
                    queue.push(arcs_[a].to);
                }
        }
        return level_[sink] >= 0;
    }

    std::int64_t augment(int x, int sink, std::int64_t limit)
    {
        if (x == sink)
            return limit;
        for (auto & i = cursor_[x]; i < adjacency_[x].size(); ++i) {
            int a = adjacency_[x][i];
            Arc & arc = arcs_[a];
            if (arc.capacity <= 0 || level_[arc.to] != level_[x] + 1)
                continue;
            if (std::int64_t pushed = augment(arc.to, sink, std::min(limit, arc.capacity))) {
                arc.capacity -= pushed;
                arcs_[a ^ 1].capacity += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<int> level_;
    std::vector<std::size_t> cursor_;
};

} // namespace flexdp::detail
