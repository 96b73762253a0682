#include "capsula/prov/projson.hpp"

#include "capsula/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>

namespace capsula::prov {

namespace {

// nlohmann::json with std::map object storage keeps keys sorted, which is
// exactly the canonical ordering the document format requires.
using json = nlohmann::json;

struct EdgeSpec {
  EdgeKind kind;
  const char* section;
  const char* src_key;
  const char* dst_key;
  char id_prefix;
};

constexpr std::array<EdgeSpec, 4> kEdgeSpecs = {{
    {EdgeKind::Used, "used", "prov:activity", "prov:entity", 'u'},
    {EdgeKind::WasGeneratedBy, "wasGeneratedBy", "prov:entity", "prov:activity", 'g'},
    {EdgeKind::WasInformedBy, "wasInformedBy", "prov:informed", "prov:informant", 'i'},
    {EdgeKind::WasAssociatedWith, "wasAssociatedWith", "prov:activity", "prov:agent", 'w'},
}};

EntitySubkind parse_subkind(const std::string& s) {
  if (s == "data-value") return EntitySubkind::DataValue;
  if (s == "file") return EntitySubkind::File;
  if (s == "library") return EntitySubkind::Library;
  if (s == "rng-state") return EntitySubkind::RngState;
  if (s == "console") return EntitySubkind::Console;
  fail(Errc::UnknownKind, "unknown entity subkind '" + s + "'");
}

AttrMap parse_attrs(const json& obj, const std::string& where) {
  AttrMap attrs;
  for (const auto& [key, value] : obj.items()) {
    if (!value.is_string())
      fail(Errc::MalformedDocument,
           "attribute '" + key + "' of " + where + " must be a string");
    attrs[key] = value.get<std::string>();
  }
  return attrs;
}

void parse_node_section(const json& doc, const char* section, NodeKind kind,
                        ProvenanceGraph& g) {
  if (!doc.contains(section)) return;
  const json& sec = doc.at(section);
  if (!sec.is_object())
    fail(Errc::MalformedDocument, std::string("section '") + section + "' must be an object");
  for (const auto& [id_text, body] : sec.items()) {
    if (!body.is_object())
      fail(Errc::MalformedDocument, "record '" + id_text + "' must be an object");
    ProvNode node;
    node.id = NodeId::parse(id_text);
    node.kind = kind;
    node.attrs = parse_attrs(body, id_text);
    if (kind == NodeKind::Entity) {
      auto it = node.attrs.find("prov:type");
      if (it != node.attrs.end()) {
        node.subkind = parse_subkind(it->second);
        node.attrs.erase(it);
      }
    } else if (node.attrs.contains("prov:type")) {
      fail(Errc::MalformedDocument, "prov:type is only valid on entities: " + id_text);
    }
    if (g.find(node.id))
      fail(Errc::MalformedDocument, "duplicate node id '" + id_text + "'");
    g.add_node(std::move(node));
  }
}

std::string require_endpoint(const json& record, const char* key, const std::string& where) {
  if (!record.contains(key) || !record.at(key).is_string())
    fail(Errc::MalformedDocument,
         "edge record '" + where + "' is missing string key '" + key + "'");
  return record.at(key).get<std::string>();
}

} // namespace

ProvenanceGraph parse_prov_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::MalformedDocument, e.what());
  }
  if (!doc.is_object())
    fail(Errc::MalformedDocument, "top level must be an object");

  static const std::array<const char*, 3> node_sections = {"entity", "activity", "agent"};
  for (const auto& [key, _] : doc.items()) {
    bool known = std::any_of(node_sections.begin(), node_sections.end(),
                             [&](const char* s) { return key == s; }) ||
                 std::any_of(kEdgeSpecs.begin(), kEdgeSpecs.end(),
                             [&](const EdgeSpec& s) { return key == s.section; });
    if (!known) fail(Errc::UnknownKind, "unknown section '" + key + "'");
  }

  ProvenanceGraph g;
  parse_node_section(doc, "entity", NodeKind::Entity, g);
  parse_node_section(doc, "activity", NodeKind::Activity, g);
  parse_node_section(doc, "agent", NodeKind::Agent, g);

  for (const auto& spec : kEdgeSpecs) {
    if (!doc.contains(spec.section)) continue;
    const json& sec = doc.at(spec.section);
    if (!sec.is_object())
      fail(Errc::MalformedDocument,
           std::string("section '") + spec.section + "' must be an object");
    for (const auto& [edge_id, record] : sec.items()) {
      if (!record.is_object())
        fail(Errc::MalformedDocument, "edge record '" + edge_id + "' must be an object");
      NodeId src = NodeId::parse(require_endpoint(record, spec.src_key, edge_id));
      NodeId dst = NodeId::parse(require_endpoint(record, spec.dst_key, edge_id));
      if (!g.find(src))
        fail(Errc::DanglingEdge, "edge '" + edge_id + "' references missing node '" +
                                     src.full() + "'");
      if (!g.find(dst))
        fail(Errc::DanglingEdge, "edge '" + edge_id + "' references missing node '" +
                                     dst.full() + "'");
      g.add_edge(spec.kind, std::move(src), std::move(dst));
    }
  }

  if (!derivation_acyclic(g))
    fail(Errc::CycleDetected, "used/wasGeneratedBy relation has a cycle");
  return g;
}

std::string serialize_prov_document(const ProvenanceGraph& g) {
  json doc = json::object();

  for (const ProvNode* node : g.sorted_nodes()) {
    json body = json::object();
    if (node->kind == NodeKind::Entity && node->subkind != EntitySubkind::None)
      body["prov:type"] = subkind_name(node->subkind);
    for (const auto& [k, v] : node->attrs) body[k] = v;
    doc[node_kind_name(node->kind)][node->id.full()] = std::move(body);
  }

  auto edges = g.sorted_edges();
  for (const auto& spec : kEdgeSpecs) {
    int seq = 0;
    for (const auto& e : edges) {
      if (e.kind != spec.kind) continue;
      char id[16];
      std::snprintf(id, sizeof id, "_:%c%06d", spec.id_prefix, ++seq);
      json record = json::object();
      record[spec.src_key] = e.src.full();
      record[spec.dst_key] = e.dst.full();
      doc[spec.section][id] = std::move(record);
    }
  }

  return doc.dump(2) + "\n";
}

} // namespace capsula::prov
