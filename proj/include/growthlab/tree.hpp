// tree.hpp — append-only growing tree with a degree-class index.
//
// Nodes carry dense ids in birth order (the seed edge is nodes 0 and 1).
// Growth only ever adds leaves, so parent[i] < i for all i >= 1 and the
// degree-class index can move a node between buckets in O(1).
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "growthlab/model.hpp"

namespace growthlab {

inline constexpr NodeId kNoParent = 0xFFFFFFFFu;

// For each occupied degree value d: the member node ids (unordered) and
// their count n_d. Buckets for empty degrees are erased, so iteration over
// classes() visits exactly the occupied degree values in ascending order.
class DegreeClassIndex {
public:
    using ClassMap = std::map<std::uint32_t, std::vector<NodeId>>;

    void insert(NodeId node, std::uint32_t degree);
    void move(NodeId node, std::uint32_t from, std::uint32_t to);

    std::uint32_t min_degree() const { return buckets_.begin()->first; }
    std::uint32_t max_degree() const { return buckets_.rbegin()->first; }

    std::size_t count(std::uint32_t degree) const;
    std::span<const NodeId> bucket(std::uint32_t degree) const;
    NodeId member(std::uint32_t degree, std::size_t k) const { return bucket(degree)[k]; }

    const ClassMap& classes() const { return buckets_; }
    std::size_t size() const { return size_; }

    void reserve(std::size_t nodes) { pos_.reserve(nodes); }

private:
    ClassMap buckets_;
    std::vector<std::uint32_t> pos_;  // node id -> index within its bucket
    std::size_t size_ = 0;
};

class GrowingTree {
public:
    // The seed graph: nodes 0 and 1 joined by one edge.
    GrowingTree();

    // Attaches a new leaf to attach_to and returns its id (== old n).
    // Throws std::out_of_range if attach_to is not an existing node.
    NodeId add_leaf(NodeId attach_to);

    std::size_t n() const { return degree_.size(); }
    std::uint32_t degree(NodeId i) const { return degree_[i]; }
    NodeId parent(NodeId i) const { return parent_[i]; }
    std::span<const NodeId> neighbors(NodeId i) const { return adj_[i]; }

    const DegreeClassIndex& degree_index() const { return index_; }
    const std::vector<NodeId>& parents() const { return parent_; }

    void reserve(std::size_t nodes);

private:
    std::vector<NodeId> parent_;             // parent_[0] == kNoParent
    std::vector<std::vector<NodeId>> adj_;
    std::vector<std::uint32_t> degree_;
    DegreeClassIndex index_;
};

}  // namespace growthlab
