#include "trifree/json_io.hpp"

#include <nlohmann/json.hpp>

namespace trifree {

using nlohmann::json;

namespace {

json rat(const Rat& r) { return r.str(); }

Rat get_rat(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw FormatError(std::string("missing rational '") + key + "'");
  try {
    return Rat::parse(j[key].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("bad rational '") + key + "': " + e.what());
  }
}

json rect(const Rect& r) {
  return {{"x_lo", rat(r.x_lo)}, {"x_hi", rat(r.x_hi)}, {"y_lo", rat(r.y_lo)}, {"y_hi", rat(r.y_hi)}};
}

Rect get_rect(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_object()) throw FormatError(std::string("missing rectangle '") + key + "'");
  const json& r = j[key];
  try {
    return Rect(get_rat(r, "x_lo"), get_rat(r, "x_hi"), get_rat(r, "y_lo"), get_rat(r, "y_hi"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

json segment(const Seg& s) {
  return {{"o", s.is_horizontal() ? "H" : "V"}, {"fixed", rat(s.fixed)}, {"lo", rat(s.lo)}, {"hi", rat(s.hi)}};
}

json segments(std::span<const Seg> segs) {
  json out = json::array();
  for (const Seg& s : segs) out.push_back(segment(s));
  return out;
}

json shape_json(const CatalogEntry& entry) {
  const ShapeFeatures& f = entry.features;
  json j = {{"name", entry.shape->name()},
            {"segments", segments(entry.shape->segments())},
            {"features",
             {{"bbox", rect(f.bbox)},
              {"empty_rect", rect(f.empty_rect)},
              {"left_stabber", segments(f.left_stabber)},
              {"right_stabber", segments(f.right_stabber)},
              {"w1", rat(f.w1)},
              {"w2", rat(f.w2)}}}};
  if (entry.anchored) {
    j["anchor"] = {{"name", entry.anchored->shape->name()},
                   {"rule", entry.anchored->rule},
                   {"segments", segments(entry.anchored->shape->segments())}};
  }
  return j;
}

json copy_json(const TransformedCopy& c) {
  const XYTransform& t = c.transform();
  return {{"sx", rat(t.sx())}, {"sy", rat(t.sy())}, {"tx", rat(t.tx())}, {"ty", rat(t.ty())},
          {"lineage", c.lineage().str()}};
}

json probe_json(const Probe& p) {
  return {{"rect", rect(p.rect)}, {"root", rect(p.root)}, {"root_cut_x", rat(p.root_cut_x)}, {"pierced", p.pierced}};
}

json params_json(const UniformParams& p) {
  return {{"k", p.k},         {"epsilon", rat(p.epsilon)},   {"s_min", rat(p.s_min)},
          {"s_max", rat(p.s_max)}, {"m", rat(p.m)},          {"epsilon1", rat(p.epsilon1)},
          {"side", rat(p.side)},   {"t", rat(p.t)},          {"outer_epsilon", rat(p.outer_epsilon)}};
}

json node_json(const StrategyTree& tree, std::size_t id) {
  const StrategyNode& node = tree.nodes[id];
  json transcript = json::array();
  const auto branch = tree.branch(id);
  for (std::size_t i = 0; i + 1 < branch.size(); ++i) {
    const StrategyNode& a = tree.nodes[branch[i]];
    transcript.push_back({{"lo", rat(a.interval.lo)}, {"hi", rat(a.interval.hi)}, {"color", node.prefix[i]}});
  }
  json children = json::array();
  for (const auto& [color, child] : node.children) children.push_back(node_json(tree, child));
  return {{"id", id},
          {"interval", {{"lo", rat(node.interval.lo)}, {"hi", rat(node.interval.hi)}}},
          {"slot", {{"lo", rat(node.y_lo)}, {"hi", rat(node.y_hi)}}},
          {"response", node.response},
          {"transcript", std::move(transcript)},
          {"children", std::move(children)}};
}

json tree_json(const StrategyTree& tree) {
  return {{"k", tree.k}, {"budget", tree.budget}, {"nodes", tree.nodes.size()}, {"root", node_json(tree, 0)}};
}

void parse_node(const json& j, std::optional<std::size_t> parent, StrategyTree& tree) {
  StrategyNode node;
  const json& iv = j.at("interval");
  const json& slot = j.at("slot");
  try {
    node.interval = Interval(get_rat(iv, "lo"), get_rat(iv, "hi"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  node.y_lo = get_rat(slot, "lo");
  node.y_hi = get_rat(slot, "hi");
  node.parent = parent;
  node.response = j.at("response").get<int>();
  for (const json& m : j.at("transcript")) node.prefix.push_back(m.at("color").get<int>());
  const std::size_t id = tree.nodes.size();
  if (j.contains("id") && j["id"].get<std::size_t>() != id) throw FormatError("tree nodes are not in preorder");
  tree.nodes.push_back(std::move(node));
  if (parent) tree.nodes[*parent].children.emplace_back(tree.nodes[id].response, id);
  for (const json& c : j.at("children")) parse_node(c, id, tree);
}

}  // namespace

std::string shape_to_json(const CatalogEntry& entry) { return shape_json(entry).dump(2); }

std::string tree_to_json(const StrategyTree& tree) { return tree_json(tree).dump(2); }

std::string family_to_json(const FamilyDocument& doc) {
  json j;
  j["shape"] = shape_json(catalog_entry(doc.shape));
  j["mode"] = to_string(doc.mode);
  j["k"] = doc.k;
  if (doc.epsilon) j["epsilon"] = rat(*doc.epsilon);
  j["augmented"] = doc.augmented;
  j["copies"] = json::array();
  for (const auto& c : doc.copies) j["copies"].push_back(copy_json(c));
  j["probes"] = json::array();
  for (const auto& p : doc.probes) j["probes"].push_back(probe_json(p));
  if (!doc.params.empty()) {
    j["params"] = json::array();
    for (const auto& p : doc.params) j["params"].push_back(params_json(p));
  }
  if (doc.tree) j["tree"] = tree_json(*doc.tree);
  return j.dump(2) + "\n";
}

FamilyDocument family_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  try {
    FamilyDocument doc;
    doc.mode = parse_mode(j.at("mode").get<std::string>());
    const json& shape = j.at("shape");
    doc.shape = shape.is_string() ? shape.get<std::string>() : shape.at("name").get<std::string>();
    const auto base = document_shape(doc.mode, doc.shape);
    doc.k = j.at("k").get<int>();
    if (j.contains("epsilon")) doc.epsilon = get_rat(j, "epsilon");
    doc.augmented = j.value("augmented", true);
    for (const json& c : j.at("copies")) {
      XYTransform t(get_rat(c, "sx"), get_rat(c, "sy"), get_rat(c, "tx"), get_rat(c, "ty"));
      doc.copies.emplace_back(base, t, Lineage::parse(c.at("lineage").get<std::string>()));
    }
    for (const json& p : j.value("probes", json::array())) {
      Probe probe{get_rect(p, "rect"), get_rect(p, "root"), get_rat(p, "root_cut_x"),
                  p.at("pierced").get<std::vector<std::size_t>>()};
      doc.probes.push_back(std::move(probe));
    }
    for (const json& p : j.value("params", json::array())) {
      doc.params.push_back({p.at("k").get<int>(), get_rat(p, "epsilon"), get_rat(p, "s_min"), get_rat(p, "s_max"),
                            get_rat(p, "m"), get_rat(p, "epsilon1"), get_rat(p, "side"), get_rat(p, "t"),
                            get_rat(p, "outer_epsilon")});
    }
    if (j.contains("tree")) {
      StrategyTree tree;
      tree.k = j["tree"].at("k").get<int>();
      tree.budget = j["tree"].at("budget").get<int>();
      parse_node(j["tree"].at("root"), std::nullopt, tree);
      doc.tree = std::move(tree);
    }
    return doc;
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(std::string("bad family document: ") + e.what());
  }
}

std::string transcript_to_json(const GameResult& result, int k, std::string_view painter) {
  json moves = json::array();
  for (const auto& m : result.transcript.moves()) {
    moves.push_back({{"lo", rat(m.interval.lo)}, {"hi", rat(m.interval.hi)}, {"color", m.color}});
  }
  json certs = json::array();
  for (const auto& c : result.certificates) {
    certs.push_back({{"level", c.level}, {"point", rat(c.point)}, {"chain", c.chain}, {"colors", c.colors}});
  }
  json j = {{"k", k},
            {"painter", std::string(painter)},
            {"intervals", result.transcript.size()},
            {"colors_used", result.colors_used},
            {"point", rat(result.point)},
            {"moves", std::move(moves)},
            {"certificates", std::move(certs)}};
  return j.dump(2) + "\n";
}

std::string coloring_to_json(const Coloring& coloring) {
  json j = json::object();
  for (std::size_t v = 0; v < coloring.size(); ++v) j[std::to_string(v)] = coloring[v];
  return j.dump(2) + "\n";
}

std::string chromatic_to_json(const ChromaticResult& result, const Graph& g) {
  json witness = json::object();
  for (std::size_t v = 0; v < result.witness.size(); ++v) witness[std::to_string(v)] = result.witness[v];
  json cert;
  if (result.certificate.kind == LowerBoundCertificate::Kind::clique) {
    cert = {{"kind", "clique"}, {"clique", result.certificate.clique}};
  } else {
    cert = {{"kind", "exhausted-search"}, {"refuted_colors", result.certificate.refuted_colors}};
  }
  json j = {{"vertices", g.size()},
            {"edges", g.edge_count()},
            {"lower", result.lower},
            {"upper", result.upper},
            {"exact", result.exact()},
            {"timed_out", result.timed_out},
            {"nodes", result.nodes},
            {"certificate", std::move(cert)},
            {"witness", std::move(witness)}};
  return j.dump(2) + "\n";
}

}  // namespace trifree
