#include "flexdp/structure.hpp"

#include <algorithm>

namespace flexdp {

namespace {

class OddCycleSearch {
public:
    OddCycleSearch(const Multigraph & g, int m) :
        g_(g),
        length_(2 * m + 1),
        used_(static_cast<std::size_t>(g.vertex_count()), 0)
    {
    }

    bool from(Vertex start)
    {
        std::fill(used_.begin(), used_.end(), 0);
        path_.assign(1, start);
        used_[start] = 1;
        bool found = extend();
        used_[start] = 0;
        return found;
    }

    const std::vector<Vertex> & path() const { return path_; }

private:
    // Step k joins path[k] and path[k+1]; even steps are the doubled ones.
    int required(std::size_t step) const { return step % 2 == 0 ? 2 : 1; }

    bool extend()
    {
        Vertex last = path_.back();
        if (static_cast<int>(path_.size()) == length_)
            return g_.multiplicity(last, path_.front()) >= 1;
        for (Vertex next : g_.neighbors(last)) {
            if (used_[next] || g_.multiplicity(last, next) < required(path_.size() - 1))
                continue;
            used_[next] = 1;
            path_.push_back(next);
            if (extend())
                return true;
            path_.pop_back();
            used_[next] = 0;
        }
        return false;
    }

    const Multigraph & g_;
    int length_;
    std::vector<char> used_;
    std::vector<Vertex> path_;
};

} // namespace

std::optional<ISubgraphWitness> find_i_subgraph(const Multigraph & g)
{
    for (int m = 1; 2 * m + 1 <= g.vertex_count(); ++m) {
        OddCycleSearch search(g, m);
        for (Vertex start = 0; start < g.vertex_count(); ++start)
            if (search.from(start))
                return ISubgraphWitness{m, search.path()};
    }
    return std::nullopt;
}

} // namespace flexdp
