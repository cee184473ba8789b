#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mrmp/geometry.hpp"

namespace mrmp {

// One level of a cell address. The first entry indexes the base l x l grid;
// every subsequent entry indexes a 2x2 split, so ix, iy are in {0, 1}.
struct CellIndex {
    int ix = 0;
    int iy = 0;

    friend bool operator==(const CellIndex&, const CellIndex&) = default;
    friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

struct CellId {
    std::vector<CellIndex> path;

    int depth() const { return static_cast<int>(path.size()) - 1; }
    std::string to_string() const;

    friend bool operator==(const CellId&, const CellId&) = default;
    friend auto operator<=>(const CellId&, const CellId&) = default;
};

struct CellIdHash {
    size_t operator()(const CellId& c) const {
        size_t h = 0xcbf29ce484222325ULL;
        for (const CellIndex& e : c.path) {
            h = (h ^ static_cast<size_t>(e.ix * 73856093 + e.iy * 19349663 + 1)) *
                0x100000001b3ULL;
        }
        return h;
    }
};

using CellSet = std::vector<CellId>;

// Refinable grid decomposition of the workspace. Leaves tile the bounds
// exactly; each refinement replaces a leaf with its 2x2 subdivision.
class Decomposition {
  public:
    Decomposition() = default;

    const Environment& environment() const { return env_; }
    int base_resolution() const { return l_; }
    double occupancy_threshold() const { return threshold_; }
    double min_cell_side() const { return min_cell_side_; }

    // All leaf cells in deterministic (lexicographic CellId) order.
    CellSet leaves() const;
    size_t leaf_count() const { return leaf_count_; }

    bool is_leaf(const CellId& c) const;
    Rect cell_rect(const CellId& c) const;
    bool occupied(const CellId& c) const;
    double overlap_fraction(const CellId& c) const;

    // Leaf containing p under the half-open convention (cells touching the
    // workspace max boundary are closed on that side). Throws
    // std::out_of_range if p lies outside bounds.
    CellId project(const Config& p) const;

    // Splits each listed leaf k times (2x2 per level), skipping splits that
    // would produce a side below min_cell_side. Occupancy is recomputed per
    // subcell. Returns the depth actually applied per input cell.
    std::vector<std::pair<CellId, int>> refine(const CellSet& cells, int k);

    // Unoccupied leaves sharing a positive-length cardinal boundary with c.
    CellSet neighbors(const CellId& c) const;

    // All leaves sharing a positive-length cardinal boundary with c,
    // regardless of occupancy.
    CellSet all_neighbors(const CellId& c) const;

    // Leaves within Chebyshev distance `layer` of the seed set, measured in
    // base-grid coordinates. layer 0 returns the seed set itself.
    CellSet expand_region(const CellSet& seed, int layer) const;

    friend Decomposition grid_decompose(const Environment& env, int l,
                                        double threshold, double min_cell_side);

  private:
    struct Node {
        CellId id;
        Rect rect;
        bool occupied = false;
        double overlap = 0.0;
        int first_child = -1;  // index of 4 consecutive children; -1 for leaf
    };

    int node_index(const CellId& c) const;  // -1 if absent
    int leaf_index_at(double x, double y) const;
    void split_node(int idx);
    bool splittable(const Node& n) const;
    double compute_overlap(const Rect& r) const;
    void collect_leaves(int idx, CellSet& out) const;

    Environment env_;
    int l_ = 0;
    double threshold_ = 0.5;
    double min_cell_side_ = 0.0;
    std::vector<Node> nodes_;  // first l*l entries are the base grid
    size_t leaf_count_ = 0;
};

// Uniform l x l decomposition with occupancy flags set from the exact
// obstacle overlap fraction of each cell. Throws std::invalid_argument when
// the requested resolution would violate min_cell_side.
Decomposition grid_decompose(const Environment& env, int l, double threshold,
                             double min_cell_side = 0.0);

// Free-function forms of the member operations.
inline CellId project(const Decomposition& d, const Config& p) { return d.project(p); }

struct RefineReport {
    std::vector<std::pair<CellId, int>> applied;
};

inline Decomposition refine(const Decomposition& d, const CellSet& cells, int k,
                            RefineReport* report = nullptr) {
    Decomposition out = d;
    auto applied = out.refine(cells, k);
    if (report) report->applied = std::move(applied);
    return out;
}

inline CellSet expand_region(const Decomposition& d, const CellSet& seed, int layer) {
    return d.expand_region(seed, layer);
}

inline CellSet neighbors(const Decomposition& d, const CellId& c) {
    return d.neighbors(c);
}

// Adjacency graph over the unoccupied leaves of a decomposition.
struct RegionGraph {
    std::vector<CellId> vertices;  // lexicographically sorted
    std::vector<Rect> rects;
    std::vector<std::vector<int>> adj;  // sorted vertex indices
    int capacity = 1;
    std::unordered_map<CellId, int, CellIdHash> index;

    int vertex_of(const CellId& c) const {
        auto it = index.find(c);
        return it == index.end() ? -1 : it->second;
    }
};

RegionGraph build_region_graph(const Decomposition& d, int capacity);

}  // namespace mrmp
