#include "growthlab/tree.hpp"

#include <stdexcept>
#include <string>

namespace growthlab {

void DegreeClassIndex::insert(NodeId node, std::uint32_t degree) {
    auto& bucket = buckets_[degree];
    if (pos_.size() <= node) pos_.resize(node + 1);
    pos_[node] = static_cast<std::uint32_t>(bucket.size());
    bucket.push_back(node);
    ++size_;
}

void DegreeClassIndex::move(NodeId node, std::uint32_t from, std::uint32_t to) {
    auto it = buckets_.find(from);
    auto& old_bucket = it->second;
    const std::uint32_t p = pos_[node];
    // swap-remove keeps the move O(1)
    const NodeId last = old_bucket.back();
    old_bucket[p] = last;
    pos_[last] = p;
    old_bucket.pop_back();
    if (old_bucket.empty()) buckets_.erase(it);

    auto& new_bucket = buckets_[to];
    pos_[node] = static_cast<std::uint32_t>(new_bucket.size());
    new_bucket.push_back(node);
}

std::size_t DegreeClassIndex::count(std::uint32_t degree) const {
    auto it = buckets_.find(degree);
    return it == buckets_.end() ? 0 : it->second.size();
}

std::span<const NodeId> DegreeClassIndex::bucket(std::uint32_t degree) const {
    auto it = buckets_.find(degree);
    if (it == buckets_.end()) return {};
    return it->second;
}

GrowingTree::GrowingTree() {
    parent_ = {kNoParent, 0};
    adj_ = {{1}, {0}};
    degree_ = {1, 1};
    index_.insert(0, 1);
    index_.insert(1, 1);
}

NodeId GrowingTree::add_leaf(NodeId attach_to) {
    if (attach_to >= n()) {
        throw std::out_of_range("add_leaf: invalid node " + std::to_string(attach_to) +
                                " in tree of size " + std::to_string(n()));
    }
    const NodeId id = static_cast<NodeId>(n());
    parent_.push_back(attach_to);
    adj_.emplace_back().push_back(attach_to);
    adj_[attach_to].push_back(id);
    const std::uint32_t d = degree_[attach_to];
    degree_[attach_to] = d + 1;
    degree_.push_back(1);
    index_.move(attach_to, d, d + 1);
    index_.insert(id, 1);
    return id;
}

void GrowingTree::reserve(std::size_t nodes) {
    parent_.reserve(nodes);
    adj_.reserve(nodes);
    degree_.reserve(nodes);
    index_.reserve(nodes);
}

}  // namespace growthlab
