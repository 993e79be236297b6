#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ofa/commonality_index.hpp"
#include "ofa/cost_model.hpp"
#include "ofa/dp_solver.hpp"
#include "ofa/string_tuple.hpp"

namespace ofa {

using NodeId = std::uint32_t;

struct FaEdge {
  Symbol symbol;
  NodeId target;
};

// One node of the automaton. Internal nodes carry the position they
// test plus their ordered children; leaves carry the index of the
// string they represent and the string that the serialized form claims
// for them (validation recomputes the path spelling independently).
struct FaNode {
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t position = kNone;    // internal nodes, 0-based
  std::size_t leaf_index = kNone;  // leaves, 0-based
  std::u32string spelled;          // leaves
  std::vector<FaEdge> children;    // left-to-right sibling order

  bool is_leaf() const { return leaf_index != kNone; }
};

// Ordered rooted tree of depth m with n leaves. Nodes live in an
// arena; the first node added is the root. Treat as immutable once
// built; the builder methods exist for the constructor functions and
// for tests that assemble automata by hand.
class FactoringAutomaton {
public:
  FactoringAutomaton(std::size_t n, std::size_t m) : n_(n), m_(m) {}

  NodeId add_internal(std::size_t position);
  NodeId add_leaf(std::size_t leaf_index, std::u32string spelled);
  // Appends an edge; sibling order is call order.
  void link(NodeId parent, Symbol symbol, NodeId child);

  std::size_t strings() const { return n_; }    // n
  std::size_t positions() const { return m_; }  // m
  NodeId root() const { return 0; }
  std::size_t node_count() const { return nodes_.size(); }
  const FaNode& node(NodeId id) const { return nodes_[id]; }

private:
  std::size_t n_, m_;
  std::vector<FaNode> nodes_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string message) {
    ok = false;
    violations.push_back(std::move(message));
  }
};

// Rebuilds the optimal automaton from the DP tables: a chain for the
// positions common to the whole tuple, then recursively a choice node
// on kstar(i, i') whose subtrees are the runs of part(i, i', kstar),
// each entered through a chain of its newly common positions. Chains
// list positions in ascending order. O(nm).
FactoringAutomaton construct_fa(const StringTuple& t, const CommonalityIndex& ix,
                                const DpTables& tables);

// Checks every defining property against `t`: tree shape, n leaves all
// at depth m, each position tested exactly once per path, consecutive
// sibling edge labels distinct, leaves ordered 1..n, and the path to
// leaf i spelling S_i. Violations are reported, not thrown.
ValidationReport validate_fa(const FactoringAutomaton& fa, const StringTuple& t);

// Number of edges.
std::size_t fa_size(const FactoringAutomaton& fa);

// Sum of c_unify(position of parent, symbol) over edges plus
// c_choice(position) over internal nodes with two or more children.
// Throws CostModelMismatch when the model covers the wrong number of
// positions.
Cost fa_cost(const FactoringAutomaton& fa, const CostModel& costs);

// Presentation-only rendering: circles labeled "p=<position>" for
// internal nodes (1-based), boxes with the spelled string for leaves.
std::string to_dot(const FactoringAutomaton& fa);

// Canonical machine format, round-trippable via from_json. Positions
// and leaf indices are 1-based in the serialized form.
std::string to_json(const FactoringAutomaton& fa);

// Throws std::invalid_argument on schema violations and
// nlohmann::json::parse_error on malformed JSON.
FactoringAutomaton from_json(std::string_view text);

// Same dimensions and identical trees: labels, leaf indices, spelled
// strings, edge symbols, and sibling order all match.
bool structurally_equal(const FactoringAutomaton& a, const FactoringAutomaton& b);

}  // namespace ofa
