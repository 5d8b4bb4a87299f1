#include "growthlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace growthlab {

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

double round9(double v) { return std::strtod(fmt9(v).c_str(), nullptr); }

void save_parents_csv(const GrowingTree& tree, std::ostream& out) {
    out << "node,parent\n";
    for (NodeId i = 1; i < tree.n(); ++i) {
        out << i << ',' << tree.parent(i) << '\n';
    }
}

void save_parents_binary(const GrowingTree& tree, std::ostream& out) {
    for (NodeId i = 1; i < tree.n(); ++i) {
        const std::uint32_t p = tree.parent(i);
        const unsigned char bytes[4] = {
            static_cast<unsigned char>(p & 0xFF),
            static_cast<unsigned char>((p >> 8) & 0xFF),
            static_cast<unsigned char>((p >> 16) & 0xFF),
            static_cast<unsigned char>((p >> 24) & 0xFF),
        };
        out.write(reinterpret_cast<const char*>(bytes), 4);
    }
}

namespace {

GrowingTree tree_from_parents(const std::vector<NodeId>& parents) {
    if (parents.empty()) throw std::runtime_error("parent array: no records");
    if (parents[0] != 0) {
        throw std::runtime_error("parent array: node 1 must attach to node 0");
    }
    GrowingTree tree;
    tree.reserve(parents.size() + 1);
    for (std::size_t i = 1; i < parents.size(); ++i) {
        const NodeId node = static_cast<NodeId>(i + 1);
        if (parents[i] >= node) {
            throw std::runtime_error("parent array: parent of node " +
                                     std::to_string(node) + " is not older");
        }
        tree.add_leaf(parents[i]);
    }
    return tree;
}

}  // namespace

GrowingTree load_parents_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "node,parent") {
        throw std::runtime_error("parent CSV: missing node,parent header");
    }
    std::vector<NodeId> parents;
    std::size_t expect = 1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        unsigned long node = 0, parent = 0;
        if (std::sscanf(line.c_str(), "%lu,%lu", &node, &parent) != 2) {
            throw std::runtime_error("parent CSV: bad record: " + line);
        }
        if (node != expect) {
            throw std::runtime_error("parent CSV: records must cover nodes 1..n-1 in order");
        }
        parents.push_back(static_cast<NodeId>(parent));
        ++expect;
    }
    return tree_from_parents(parents);
}

GrowingTree load_parents_binary(std::istream& in) {
    std::vector<NodeId> parents;
    unsigned char bytes[4];
    while (in.read(reinterpret_cast<char*>(bytes), 4)) {
        parents.push_back(static_cast<NodeId>(bytes[0]) |
                          (static_cast<NodeId>(bytes[1]) << 8) |
                          (static_cast<NodeId>(bytes[2]) << 16) |
                          (static_cast<NodeId>(bytes[3]) << 24));
    }
    if (in.gcount() != 0) {
        throw std::runtime_error("parent binary: trailing partial record");
    }
    return tree_from_parents(parents);
}

void write_histogram_csv(const DegreeHistogram& hist, std::ostream& out) {
    out << "degree,count\n";
    for (std::uint32_t d = 1; d <= hist.max_degree(); ++d) {
        if (hist.count(d)) out << d << ',' << hist.count(d) << '\n';
    }
}

DegreeHistogram read_histogram_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "degree,count") {
        throw std::runtime_error("histogram CSV: missing degree,count header");
    }
    DegreeHistogram h;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        unsigned long d = 0, c = 0;
        if (std::sscanf(line.c_str(), "%lu,%lu", &d, &c) != 2 || d < 1) {
            throw std::runtime_error("histogram CSV: bad record: " + line);
        }
        if (h.counts.size() <= d) h.counts.resize(d + 1, 0);
        h.counts[d] = c;
        h.n += c;
    }
    return h;
}

nlohmann::json summary_json(const RunSummary& summary, const ModelParams& params,
                            std::uint64_t seed, std::uint64_t replica) {
    nlohmann::json j;
    j["n"] = summary.n;
    j["leaf_fraction"] = round9(summary.leaf_fraction);
    j["d1"] = summary.d1;
    j["d2"] = summary.d2;
    j["argmax_id"] = summary.argmax_id;
    j["diameter"] = summary.diameter;
    j["lead_changes"] = summary.lead_changes;
    if (summary.eta_cv) {
        j["eta_cv"] = round9(*summary.eta_cv);
    } else {
        j["eta_cv"] = nullptr;
    }
    j["model"] = to_string(params.family);
    if (std::isinf(params.alpha)) {
        j["alpha"] = format_alpha(params.alpha);
    } else {
        j["alpha"] = round9(params.alpha);
    }
    j["r"] = round9(params.r);
    j["seed"] = seed;
    j["replica"] = replica;
    return j;
}

}  // namespace growthlab
