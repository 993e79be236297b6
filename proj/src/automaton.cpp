#include "ofa/automaton.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "ofa/errors.hpp"
#include "ofa/utf8.hpp"

namespace ofa {

NodeId FactoringAutomaton::add_internal(std::size_t position) {
  FaNode node;
  node.position = position;
  nodes_.push_back(std::move(node));
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId FactoringAutomaton::add_leaf(std::size_t leaf_index, std::u32string spelled) {
  FaNode node;
  node.leaf_index = leaf_index;
  node.spelled = std::move(spelled);
  nodes_.push_back(std::move(node));
  return static_cast<NodeId>(nodes_.size() - 1);
}

void FactoringAutomaton::link(NodeId parent, Symbol symbol, NodeId child) {
  assert(parent < nodes_.size() && child < nodes_.size());
  nodes_[parent].children.push_back(FaEdge{symbol, child});
}

namespace {

// com(j, j2) \ com(i, i2) without `skip`, ascending. These are the
// positions that become common when the interval narrows to the run,
// i.e. the chain above the run's subtree.
std::vector<std::size_t> newly_common(const CommonalityIndex& ix, std::size_t i, std::size_t i2,
                                      std::size_t j, std::size_t j2, std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < ix.positions(); ++k)
    if (k != skip && ix.is_common(j, j2, k) && !ix.is_common(i, i2, k)) out.push_back(k);
  return out;
}

}  // namespace

FactoringAutomaton construct_fa(const StringTuple& t, const CommonalityIndex& ix,
                                const DpTables& tables) {
  assert(ix.tuple() == t && tables.size() == t.size());
  const std::size_t n = t.size();
  const std::size_t m = t.length();
  FactoringAutomaton fa(n, m);

  // Subtree for S_i..S_i2, assuming every position of com(i, i2) was
  // already tested higher up the path. Nesting depth is at most m + 1:
  // each level consumes kstar at least.
  auto rec = [&](auto&& self, std::size_t i, std::size_t i2) -> NodeId {
    if (i == i2) return fa.add_leaf(i, std::u32string(t[i]));
    const std::size_t k = tables.kstar(i, i2);
    const NodeId v = fa.add_internal(k);
    for (const Run& r : ix.runs(i, i2, k)) {
      // Entering the run consumes k (the choice edge), then the rest of
      // its newly common positions as a chain, restoring the premise
      // for the recursive call.
      NodeId attach = v;
      Symbol edge_symbol = r.symbol;
      for (std::size_t p : newly_common(ix, i, i2, r.first, r.last, k)) {
        const NodeId w = fa.add_internal(p);
        fa.link(attach, edge_symbol, w);
        attach = w;
        edge_symbol = t.at(r.first, p);
      }
      fa.link(attach, edge_symbol, self(self, r.first, r.last));
    }
    return v;
  };

  std::vector<std::size_t> head = ix.com_positions(0, n - 1);
  if (head.empty()) {
    rec(rec, 0, n - 1);  // becomes node 0, the root
    return fa;
  }
  NodeId attach = fa.add_internal(head[0]);
  for (std::size_t idx = 1; idx < head.size(); ++idx) {
    const NodeId w = fa.add_internal(head[idx]);
    fa.link(attach, t.at(0, head[idx - 1]), w);
    attach = w;
  }
  fa.link(attach, t.at(0, head.back()), rec(rec, 0, n - 1));
  return fa;
}

ValidationReport validate_fa(const FactoringAutomaton& fa, const StringTuple& t) {
  ValidationReport report;
  const std::size_t n = t.size();
  const std::size_t m = t.length();
  if (fa.strings() != n || fa.positions() != m) {
    report.fail("dimension mismatch: automaton claims " + std::to_string(fa.strings()) + "x" +
                std::to_string(fa.positions()) + ", tuple is " + std::to_string(n) + "x" +
                std::to_string(m));
    return report;
  }
  if (fa.node_count() == 0) {
    report.fail("automaton has no nodes");
    return report;
  }

  std::vector<char> visited(fa.node_count(), 0);
  std::u32string spelled(m, U'\0');
  std::vector<std::size_t> used(m, 0);  // tests of each position on the current path
  std::size_t leaf_cursor = 0;

  auto enter = [&](NodeId id, std::size_t depth) {
    const FaNode& v = fa.node(id);
    if (v.is_leaf()) {
      const std::string which = "leaf #" + std::to_string(leaf_cursor + 1);
      if (!v.children.empty()) report.fail(which + " has children");
      if (depth != m)
        report.fail(which + " sits at depth " + std::to_string(depth) + ", expected " +
                    std::to_string(m));
      bool complete = depth == m;
      for (std::size_t k = 0; k < m; ++k)
        if (used[k] != 1) {
          report.fail("path to " + which + " tests position " + std::to_string(k + 1) + " " +
                      std::to_string(used[k]) + " times");
          complete = false;
        }
      if (v.leaf_index >= n) {
        report.fail(which + " carries string index " + std::to_string(v.leaf_index + 1) +
                    ", outside 1.." + std::to_string(n));
      } else {
        if (v.leaf_index != leaf_cursor)
          report.fail(which + " carries string index " + std::to_string(v.leaf_index + 1));
        if (complete && spelled != t[v.leaf_index])
          report.fail("path to " + which + " produces \"" + utf8::encode(spelled) +
                      "\", expected \"" + utf8::encode(t[v.leaf_index]) + "\"");
      }
      if (complete && v.spelled != spelled)
        report.fail(which + " stores \"" + utf8::encode(v.spelled) + "\" but its path produces \"" +
                    utf8::encode(spelled) + "\"");
      ++leaf_cursor;
    } else {
      if (v.position >= m)
        report.fail("internal node labeled with position " + std::to_string(v.position + 1) +
                    ", outside 1.." + std::to_string(m));
      if (v.children.empty()) report.fail("internal node with no children");
      for (std::size_t c = 1; c < v.children.size(); ++c)
        if (v.children[c].symbol == v.children[c - 1].symbol)
          report.fail("consecutive sibling edges share label \"" +
                      utf8::encode(v.children[c].symbol) + "\"");
    }
  };

  struct Frame {
    NodeId id;
    std::size_t next_child;
    std::size_t via_pos;  // position tested by the incoming edge, kNone at the root
    char32_t prev_sym;    // spelled[via_pos] before this edge, for restore on pop
  };
  std::vector<Frame> stack;
  visited[fa.root()] = 1;
  stack.push_back({fa.root(), 0, FaNode::kNone, U'\0'});
  enter(fa.root(), 0);

  while (!stack.empty()) {
    Frame& f = stack.back();
    const FaNode& v = fa.node(f.id);
    if (v.is_leaf() || f.next_child >= v.children.size()) {
      if (f.via_pos != FaNode::kNone) {
        --used[f.via_pos];
        spelled[f.via_pos] = f.prev_sym;
      }
      stack.pop_back();
      continue;
    }
    const FaEdge e = v.children[f.next_child++];
    if (e.target >= fa.node_count()) {
      report.fail("edge to nonexistent node");
      continue;
    }
    if (visited[e.target]) {
      report.fail("node reachable along two paths, not a tree");
      continue;
    }
    visited[e.target] = 1;
    std::size_t via = FaNode::kNone;
    char32_t prev = U'\0';
    if (v.position < m) {
      via = v.position;
      prev = spelled[via];
      ++used[via];
      spelled[via] = e.symbol;
    }
    stack.push_back({e.target, 0, via, prev});
    enter(e.target, stack.size() - 1);
  }

  if (leaf_cursor != n)
    report.fail("automaton has " + std::to_string(leaf_cursor) + " leaves, expected " +
                std::to_string(n));
  std::size_t reached = 0;
  for (char flag : visited) reached += static_cast<std::size_t>(flag);
  if (reached != fa.node_count())
    report.fail(std::to_string(fa.node_count() - reached) + " nodes unreachable from the root");
  return report;
}

std::size_t fa_size(const FactoringAutomaton& fa) {
  std::size_t edges = 0;
  for (NodeId id = 0; id < fa.node_count(); ++id) edges += fa.node(id).children.size();
  return edges;
}

Cost fa_cost(const FactoringAutomaton& fa, const CostModel& costs) {
  if (costs.positions() != fa.positions())
    throw CostModelMismatch("cost model covers " + std::to_string(costs.positions()) +
                            " positions, automaton has " + std::to_string(fa.positions()));
  Cost total = 0;
  for (NodeId id = 0; id < fa.node_count(); ++id) {
    const FaNode& v = fa.node(id);
    if (v.is_leaf()) continue;
    if (v.children.size() >= 2) total += costs.choice(v.position);
    for (const FaEdge& e : v.children) total += costs.unify(v.position, e.symbol);
  }
  return total;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

nlohmann::ordered_json node_to_json(const FactoringAutomaton& fa, NodeId id) {
  const FaNode& v = fa.node(id);
  nlohmann::ordered_json j;
  if (v.is_leaf()) {
    j["leaf"] = v.leaf_index + 1;
    j["string"] = utf8::encode(v.spelled);
    return j;
  }
  j["position"] = v.position + 1;
  auto kids = nlohmann::ordered_json::array();
  for (const FaEdge& e : v.children) {
    nlohmann::ordered_json entry;
    entry["label"] = utf8::encode(e.symbol);
    entry["node"] = node_to_json(fa, e.target);
    kids.push_back(std::move(entry));
  }
  j["children"] = std::move(kids);
  return j;
}

const nlohmann::json& json_field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string("automaton JSON: missing \"") + key + "\"");
  return j.at(key);
}

std::size_t json_index(const nlohmann::json& j, const char* key) {
  const nlohmann::json& v = json_field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw std::invalid_argument(std::string("automaton JSON: \"") + key +
                                "\" must be a positive integer");
  return static_cast<std::size_t>(v.get<long long>());
}

std::u32string json_utf8(const nlohmann::json& j, const char* key) {
  const nlohmann::json& v = json_field(j, key);
  if (!v.is_string())
    throw std::invalid_argument(std::string("automaton JSON: \"") + key + "\" must be a string");
  std::u32string out;
  if (!utf8::decode(v.get<std::string>(), out))
    throw std::invalid_argument(std::string("automaton JSON: \"") + key + "\" is not valid UTF-8");
  return out;
}

NodeId node_from_json(const nlohmann::json& j, FactoringAutomaton& fa) {
  if (!j.is_object()) throw std::invalid_argument("automaton JSON: node must be an object");
  const bool leaf = j.contains("leaf");
  const bool internal = j.contains("position");
  if (leaf == internal)
    throw std::invalid_argument("automaton JSON: node needs exactly one of \"leaf\", \"position\"");
  if (leaf) return fa.add_leaf(json_index(j, "leaf") - 1, json_utf8(j, "string"));

  const NodeId v = fa.add_internal(json_index(j, "position") - 1);
  const nlohmann::json& kids = json_field(j, "children");
  if (!kids.is_array())
    throw std::invalid_argument("automaton JSON: \"children\" must be an array");
  for (const nlohmann::json& entry : kids) {
    const std::u32string label = json_utf8(entry, "label");
    if (label.size() != 1)
      throw std::invalid_argument("automaton JSON: edge label must be a single symbol");
    fa.link(v, label[0], node_from_json(json_field(entry, "node"), fa));
  }
  return v;
}

}  // namespace

std::string to_dot(const FactoringAutomaton& fa) {
  std::string out = "digraph fa {\n";
  for (NodeId id = 0; id < fa.node_count(); ++id) {
    const FaNode& v = fa.node(id);
    out += "  n" + std::to_string(id);
    if (v.is_leaf())
      out += " [shape=box, label=\"" + dot_escape(utf8::encode(v.spelled)) + "\"];\n";
    else
      out += " [shape=circle, label=\"p=" + std::to_string(v.position + 1) + "\"];\n";
  }
  for (NodeId id = 0; id < fa.node_count(); ++id)
    for (const FaEdge& e : fa.node(id).children)
      out += "  n" + std::to_string(id) + " -> n" + std::to_string(e.target) + " [label=\"" +
             dot_escape(utf8::encode(e.symbol)) + "\"];\n";
  out += "}\n";
  return out;
}

std::string to_json(const FactoringAutomaton& fa) {
  assert(fa.node_count() > 0);
  nlohmann::ordered_json j;
  j["n"] = fa.strings();
  j["m"] = fa.positions();
  j["root"] = node_to_json(fa, fa.root());
  return j.dump(2) + "\n";
}

FactoringAutomaton from_json(std::string_view text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  FactoringAutomaton fa(json_index(j, "n"), json_index(j, "m"));
  node_from_json(json_field(j, "root"), fa);
  return fa;
}

bool structurally_equal(const FactoringAutomaton& a, const FactoringAutomaton& b) {
  if (a.strings() != b.strings() || a.positions() != b.positions()) return false;
  if (a.node_count() == 0 || b.node_count() == 0) return a.node_count() == b.node_count();
  std::vector<std::pair<NodeId, NodeId>> stack{{a.root(), b.root()}};
  while (!stack.empty()) {
    const auto [x, y] = stack.back();
    stack.pop_back();
    const FaNode& u = a.node(x);
    const FaNode& v = b.node(y);
    if (u.position != v.position || u.leaf_index != v.leaf_index || u.spelled != v.spelled ||
        u.children.size() != v.children.size())
      return false;
    for (std::size_t c = 0; c < u.children.size(); ++c) {
      if (u.children[c].symbol != v.children[c].symbol) return false;
      stack.emplace_back(u.children[c].target, v.children[c].target);
    }
  }
  return true;
}

}  // namespace ofa
