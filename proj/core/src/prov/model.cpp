#include "capsula/prov/model.hpp"

#include "capsula/error.hpp"
#include "capsula/sha256.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace capsula::prov {

NodeId NodeId::parse(const std::string& text) {
  auto pos = text.find(':');
  if (pos == std::string::npos || pos == 0 || pos + 1 == text.size())
    fail(Errc::MalformedDocument, "node id must be 'namespace:local', got '" + text + "'");
  return NodeId{text.substr(0, pos), text.substr(pos + 1)};
}

const char* node_kind_name(NodeKind k) {
  switch (k) {
  case NodeKind::Entity: return "entity";
  case NodeKind::Activity: return "activity";
  case NodeKind::Agent: return "agent";
  }
  return "?";
}

const char* subkind_name(EntitySubkind k) {
  switch (k) {
  case EntitySubkind::None: return "";
  case EntitySubkind::DataValue: return "data-value";
  case EntitySubkind::File: return "file";
  case EntitySubkind::Library: return "library";
  case EntitySubkind::RngState: return "rng-state";
  case EntitySubkind::Console: return "console";
  }
  return "?";
}

const char* edge_kind_name(EdgeKind k) {
  switch (k) {
  case EdgeKind::Used: return "used";
  case EdgeKind::WasGeneratedBy: return "wasGeneratedBy";
  case EdgeKind::WasInformedBy: return "wasInformedBy";
  case EdgeKind::WasAssociatedWith: return "wasAssociatedWith";
  }
  return "?";
}

ProvNode& ProvenanceGraph::add_node(ProvNode node) {
  auto key = node.id.full();
  if (index_.contains(key))
    fail(Errc::InvalidGraph, "duplicate node id '" + key + "'");
  index_[key] = nodes_.size();
  nodes_.push_back(std::move(node));
  return nodes_.back();
}

void ProvenanceGraph::add_edge(EdgeKind kind, NodeId src, NodeId dst) {
  edges_.push_back(ProvEdge{kind, std::move(src), std::move(dst)});
}

const ProvNode* ProvenanceGraph::find(const NodeId& id) const {
  return find(id.full());
}

const ProvNode* ProvenanceGraph::find(const std::string& full_id) const {
  auto it = index_.find(full_id);
  if (it == index_.end()) return nullptr;
  return &nodes_[it->second];
}

std::vector<const ProvNode*> ProvenanceGraph::sorted_nodes() const {
  std::vector<const ProvNode*> out;
  out.reserve(nodes_.size());
  for (const auto& n : nodes_) out.push_back(&n);
  std::sort(out.begin(), out.end(), [](const ProvNode* a, const ProvNode* b) {
    if (a->kind != b->kind) return a->kind < b->kind;
    return a->id < b->id;
  });
  return out;
}

std::vector<ProvEdge> ProvenanceGraph::sorted_edges() const {
  std::vector<ProvEdge> out(edges_.begin(), edges_.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const ProvenanceGraph& a, const ProvenanceGraph& b) {
  if (a.nodes_.size() != b.nodes_.size() || a.edges_.size() != b.edges_.size())
    return false;
  auto an = a.sorted_nodes();
  auto bn = b.sorted_nodes();
  for (std::size_t i = 0; i < an.size(); ++i)
    if (!(*an[i] == *bn[i])) return false;
  return a.sorted_edges() == b.sorted_edges();
}

namespace {

bool parse_int(const std::string& s, long long& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

void check_attr_int(const ProvNode& n, const std::string& key, long long min,
                    std::vector<Violation>& out) {
  auto it = n.attrs.find(key);
  if (it == n.attrs.end()) {
    out.push_back({"node-attributes", "missing attribute '" + key + "'", n.id.full()});
    return;
  }
  long long v = 0;
  if (!parse_int(it->second, v) || v < min)
    out.push_back({"node-attributes",
                   "attribute '" + key + "' must be an integer >= " + std::to_string(min),
                   n.id.full()});
}

void check_attr_present(const ProvNode& n, const std::string& key,
                        std::vector<Violation>& out) {
  if (!n.attrs.contains(key))
    out.push_back({"node-attributes", "missing attribute '" + key + "'", n.id.full()});
}

void check_node_attrs(const ProvNode& n, std::vector<Violation>& out) {
  switch (n.kind) {
  case NodeKind::Activity:
    check_attr_int(n, "source-line", 1, out);
    check_attr_int(n, "instance", 0, out);
    check_attr_present(n, "text", out);
    return;
  case NodeKind::Agent:
    check_attr_present(n, "name", out);
    return;
  case NodeKind::Entity:
    break;
  }
  switch (n.subkind) {
  case EntitySubkind::DataValue:
    check_attr_present(n, "variable", out);
    check_attr_int(n, "version", 1, out);
    check_attr_present(n, "value-text", out);
    break;
  case EntitySubkind::File: {
    check_attr_present(n, "path", out);
    auto it = n.attrs.find("sha256");
    if (it == n.attrs.end() || !is_sha256_hex(it->second))
      out.push_back({"node-attributes", "missing or malformed 'sha256' attribute",
                     n.id.full()});
    break;
  }
  case EntitySubkind::Library:
    check_attr_present(n, "name", out);
    check_attr_present(n, "version", out);
    break;
  case EntitySubkind::RngState:
    check_attr_int(n, "version", 1, out);
    check_attr_present(n, "state", out);
    break;
  case EntitySubkind::Console:
    check_attr_int(n, "version", 1, out);
    break;
  case EntitySubkind::None:
    out.push_back({"node-attributes", "entity has no subkind (prov:type)", n.id.full()});
    break;
  }
}

std::string edge_desc(const ProvEdge& e) {
  return std::string(edge_kind_name(e.kind)) + "(" + e.src.full() + " -> " + e.dst.full() + ")";
}

} // namespace

bool derivation_acyclic(const ProvenanceGraph& g) {
  // Derivation digraph: src depends on dst for used and wasGeneratedBy edges.
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& e : g.edges()) {
    if (e.kind == EdgeKind::Used || e.kind == EdgeKind::WasGeneratedBy)
      adj[e.src.full()].push_back(e.dst.full());
  }
  std::map<std::string, int> state; // 0 unseen, 1 on stack, 2 done
  // Iterative DFS; graphs from long scripts can be deep.
  for (const auto& [start, _] : adj) {
    if (state[start]) continue;
    std::vector<std::pair<std::string, std::size_t>> stack{{start, 0}};
    state[start] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      auto it = adj.find(node);
      if (it == adj.end() || next >= it->second.size()) {
        state[node] = 2;
        stack.pop_back();
        continue;
      }
      const std::string& child = it->second[next++];
      int s = state[child];
      if (s == 1) return false;
      if (s == 0) {
        state[child] = 1;
        stack.emplace_back(child, 0);
      }
    }
  }
  return true;
}

ValidationReport validate_graph(const ProvenanceGraph& g) {
  ValidationReport report;
  auto& out = report.violations;

  for (const auto& n : g.nodes()) check_node_attrs(n, out);

  std::map<std::string, int> generation_count;
  for (const auto& e : g.edges()) {
    const ProvNode* src = g.find(e.src);
    const ProvNode* dst = g.find(e.dst);
    if (!src || !dst) {
      out.push_back({"dangling-edge", "edge endpoint not in graph", edge_desc(e)});
      continue;
    }
    NodeKind want_src{}, want_dst{};
    switch (e.kind) {
    case EdgeKind::Used: want_src = NodeKind::Activity; want_dst = NodeKind::Entity; break;
    case EdgeKind::WasGeneratedBy: want_src = NodeKind::Entity; want_dst = NodeKind::Activity; break;
    case EdgeKind::WasInformedBy: want_src = NodeKind::Activity; want_dst = NodeKind::Activity; break;
    case EdgeKind::WasAssociatedWith: want_src = NodeKind::Activity; want_dst = NodeKind::Agent; break;
    }
    if (src->kind != want_src || dst->kind != want_dst)
      out.push_back({"edge-endpoint",
                     std::string(edge_kind_name(e.kind)) + " must connect " +
                         node_kind_name(want_src) + " -> " + node_kind_name(want_dst),
                     edge_desc(e)});
    if (e.kind == EdgeKind::WasGeneratedBy) generation_count[e.src.full()] += 1;
  }

  for (const auto& [entity, count] : generation_count) {
    if (count > 1)
      out.push_back({"single-generation",
                     "entity has " + std::to_string(count) + " wasGeneratedBy edges",
                     entity});
  }

  if (!derivation_acyclic(g))
    out.push_back({"acyclic-derivation", "used/wasGeneratedBy relation has a cycle", ""});

  report.ok = report.violations.empty();
  return report;
}

std::vector<OutputInfo> list_outputs(const ProvenanceGraph& g) {
  // Generating activity per entity, for producing-line lookup.
  std::map<std::string, const ProvNode*> generator;
  for (const auto& e : g.edges()) {
    if (e.kind != EdgeKind::WasGeneratedBy) continue;
    if (const ProvNode* a = g.find(e.dst)) generator[e.src.full()] = a;
  }

  auto line_of = [](const ProvNode* activity) {
    if (!activity) return 0;
    auto it = activity->attrs.find("source-line");
    if (it == activity->attrs.end()) return 0;
    long long v = 0;
    parse_int(it->second, v);
    return static_cast<int>(v);
  };

  // Highest generated version per file path.
  struct Best { long long version; const ProvNode* node; };
  std::map<std::string, Best> files;
  const ProvNode* last_console = nullptr;
  long long last_console_version = 0;

  for (const auto& n : g.nodes()) {
    if (n.kind != NodeKind::Entity) continue;
    if (!generator.contains(n.id.full())) continue; // inputs are not outputs
    if (n.subkind == EntitySubkind::File) {
      auto path_it = n.attrs.find("path");
      if (path_it == n.attrs.end()) continue;
      long long version = 1;
      if (auto it = n.attrs.find("version"); it != n.attrs.end()) parse_int(it->second, version);
      auto [pos, inserted] = files.try_emplace(path_it->second, Best{version, &n});
      if (!inserted && version > pos->second.version) pos->second = Best{version, &n};
    } else if (n.subkind == EntitySubkind::Console) {
      long long version = 1;
      if (auto it = n.attrs.find("version"); it != n.attrs.end()) parse_int(it->second, version);
      if (!last_console || version > last_console_version) {
        last_console = &n;
        last_console_version = version;
      }
    }
  }

  std::vector<OutputInfo> out;
  for (const auto& [path, best] : files)
    out.push_back({best.node->id, path, false, line_of(generator[best.node->id.full()])});
  if (last_console)
    out.push_back({last_console->id, "console", true,
                   line_of(generator[last_console->id.full()])});
  return out;
}

} // namespace capsula::prov
