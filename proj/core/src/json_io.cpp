#include "taulike/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace taulike {

namespace {

[[noreturn]] void fail(const std::string& detail) { throw Error(ErrorCode::ParseError, detail); }

ElementId as_id(const Json& v, std::string_view where) {
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    fail(std::string(where) + ": expected a non-negative integer id, got " + v.dump());
  }
  return v.get<ElementId>();
}

std::vector<ElementId> as_ids(const Json& v, std::string_view where) {
  if (!v.is_array()) fail(std::string(where) + ": expected an array");
  std::vector<ElementId> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(as_id(x, where));
  return out;
}

std::int64_t as_int(const Json& v, std::string_view where) {
  if (!v.is_number_integer()) fail(std::string(where) + ": expected an integer, got " + v.dump());
  return v.get<std::int64_t>();
}

void require_object(const Json& doc, std::string_view what) {
  if (!doc.is_object()) fail(std::string(what) + " document must be a JSON object");
}

void reject_unknown(const Json& doc, std::initializer_list<std::string_view> allowed, std::string_view what) {
  for (const auto& [key, _] : doc.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) fail(std::string(what) + ": unknown key '" + key + "'");
  }
}

const Json& member(const Json& doc, const char* key, std::string_view what) {
  auto it = doc.find(key);
  if (it == doc.end()) fail(std::string(what) + ": missing key '" + key + "'");
  return *it;
}

OrderKind kind_from(const Json& v) {
  if (!v.is_string()) fail("kind must be a string");
  auto k = parse_order_kind(v.get<std::string>());
  if (!k) fail("unknown kind '" + v.get<std::string>() + "'");
  return *k;
}

Json blocks_to_json(const BlockSeq& blocks) {
  Json out = Json::array();
  for (const auto& b : blocks) {
    out.push_back({{"pivot", b.pivot}, {"members", b.members}, {"side", std::string(to_string(b.side))}});
  }
  return out;
}

}  // namespace

Json poset_to_json(const FinitePoset& poset) {
  Json rel = Json::array();
  for (const auto& [x, y] : poset.cover_relation()) rel.push_back({x, y});
  return {{"schema", schema::kPoset},
          {"elements", std::vector<ElementId>(poset.elements().begin(), poset.elements().end())},
          {"relation", rel}};
}

FinitePoset poset_from_json(const Json& doc) {
  require_object(doc, "poset");
  reject_unknown(doc, {"schema", "elements", "relation", "meta"}, "poset");
  auto elements = as_ids(member(doc, "elements", "poset"), "elements");
  std::vector<IdPair> pairs;
  if (auto it = doc.find("relation"); it != doc.end()) {
    if (!it->is_array()) fail("relation: expected an array of pairs");
    for (const auto& p : *it) {
      if (!p.is_array() || p.size() != 2) fail("relation: each entry must be a pair [x, y], got " + p.dump());
      pairs.emplace_back(as_id(p[0], "relation"), as_id(p[1], "relation"));
    }
  }
  return build_poset(std::move(elements), pairs);
}

FinitePoset load_poset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path.string() + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  return poset_from_json(doc);
}

Json order_to_json(const LinearOrder& order) {
  return {{"order", std::vector<ElementId>(order.elements().begin(), order.elements().end())},
          {"anchor", order.anchor()},
          {"growth", std::string(to_string(order.growth()))}};
}

LinearOrder order_from_json(const Json& doc) {
  if (doc.is_array()) return LinearOrder(as_ids(doc, "order"));
  require_object(doc, "order");
  auto ids = as_ids(member(doc, "order", "order"), "order");
  std::size_t anchor = 0;
  if (auto it = doc.find("anchor"); it != doc.end()) anchor = static_cast<std::size_t>(as_id(*it, "anchor"));
  return LinearOrder(std::move(ids), anchor);
}

Json linearization_to_json(const Linearization& lin, OrderKind kind) {
  Json out = order_to_json(lin.order);
  out["schema"] = schema::kLinearization;
  out["kind"] = to_string(kind);
  out["blocks"] = blocks_to_json(lin.blocks);
  out["exhausted"] = lin.exhausted;
  return out;
}

Json split_to_json(const SplitLinearization& split) {
  Json out = order_to_json(split.order);
  out["schema"] = schema::kLinearization;
  out["kind"] = to_string(OrderKind::OmegaPlusOmegaStar);
  Json sides = Json::array();
  for (Side s : split.sides) sides.push_back(to_string(s));
  out["sides"] = sides;
  out["lower_blocks"] = blocks_to_json(split.lower.blocks);
  out["upper_blocks"] = blocks_to_json(split.upper.blocks);
  out["exhausted"] = split.lower.exhausted && split.upper.exhausted;
  return out;
}

Json coordinate_to_json(const CanonicalPoint& p) {
  if (p.kind == OrderKind::OmegaPlusOmegaStar) return Json::array({p.side, p.rank});
  return p.rank;
}

CanonicalPoint coordinate_from_json(OrderKind kind, const Json& coord) {
  switch (kind) {
    case OrderKind::Omega:
    case OrderKind::OmegaStar: {
      const auto k = as_int(coord, "coordinate");
      if (k < 0) fail("coordinate: ranks of " + std::string(to_string(kind)) + " are natural numbers");
      return kind == OrderKind::Omega ? CanonicalPoint::omega(k) : CanonicalPoint::omega_star(k);
    }
    case OrderKind::OmegaPlusOmegaStar: {
      if (!coord.is_array() || coord.size() != 2) fail("coordinate: omega-omega-star points are [side, k]");
      const auto side = as_int(coord[0], "side");
      const auto k = as_int(coord[1], "coordinate");
      if ((side != 0 && side != 1) || k < 0) fail("coordinate: side must be 0 or 1 and k natural");
      return CanonicalPoint::omega_plus_omega_star(static_cast<int>(side), k);
    }
    case OrderKind::Zeta:
      return CanonicalPoint::zeta(as_int(coord, "coordinate"));
  }
  fail("unknown kind");
}

Json embedding_to_json(const Embedding& e) {
  Json map = Json::array();
  for (const auto& [x, p] : e.assignments()) map.push_back({x, coordinate_to_json(p)});
  return {{"schema", schema::kEmbedding}, {"kind", to_string(e.kind())}, {"map", map}};
}

Embedding embedding_from_json(const Json& doc) {
  require_object(doc, "embedding");
  reject_unknown(doc, {"schema", "kind", "map"}, "embedding");
  const OrderKind kind = kind_from(member(doc, "kind", "embedding"));
  const Json& map = member(doc, "map", "embedding");
  if (!map.is_array()) fail("map: expected an array");
  std::vector<Embedding::Assignment> out;
  for (const auto& entry : map) {
    if (!entry.is_array() || entry.size() != 2) fail("map: each entry must be [element, coordinate]");
    out.emplace_back(as_id(entry[0], "map"), coordinate_from_json(kind, entry[1]));
  }
  return Embedding(kind, std::move(out));
}

FufVariant parse_fuf_variant(std::string_view text) {
  for (auto v : {FufVariant::Omega, FufVariant::OmegaStar, FufVariant::Zeta}) {
    if (text == to_string(v)) return v;
  }
  fail("unknown FUF variant '" + std::string(text) + "'");
}

Json fuf_gadget_to_json(const FufGadget& g) {
  Json doc = poset_to_json(g.base);
  Json meta = {{"gadget", "fuf"},
               {"variant", to_string(g.variant)},
               {"parts", g.parts},
               {"top_markers", g.top_markers},
               {"union_size", g.union_size()}};
  if (g.variant == FufVariant::Zeta) meta["bottom_markers"] = g.bottom_markers;
  doc["meta"] = meta;
  return doc;
}

FufGadget fuf_gadget_from_json(const Json& doc) {
  FufGadget g;
  g.base = poset_from_json(doc);
  const Json& meta = member(doc, "meta", "FUF gadget");
  require_object(meta, "meta");
  if (meta.value("gadget", std::string{}) != "fuf") fail("meta.gadget must be \"fuf\"");
  const Json& variant = member(meta, "variant", "meta");
  if (!variant.is_string()) fail("meta.variant must be a string");
  g.variant = parse_fuf_variant(variant.get<std::string>());
  const Json& parts = member(meta, "parts", "meta");
  if (!parts.is_array()) fail("meta.parts: expected an array of arrays");
  for (const auto& p : parts) g.parts.push_back(as_ids(p, "meta.parts"));
  g.top_markers = as_ids(member(meta, "top_markers", "meta"), "meta.top_markers");
  if (auto it = meta.find("bottom_markers"); it != meta.end()) g.bottom_markers = as_ids(*it, "meta.bottom_markers");
  if (g.top_markers.size() != g.parts.size()) fail("meta: one top marker per part is required");
  std::set<ElementId> seen;
  auto check = [&](ElementId x) {
    if (!g.base.contains(x)) fail("meta: element " + std::to_string(x) + " is not in the poset");
  };
  for (const auto& p : g.parts) std::for_each(p.begin(), p.end(), check);
  std::for_each(g.top_markers.begin(), g.top_markers.end(), check);
  std::for_each(g.bottom_markers.begin(), g.bottom_markers.end(), check);
  return g;
}

Json violation_to_json(const OracleViolation& v) {
  Json out = {{"kind", to_string(v.kind)}, {"oracle", to_string(v.oracle)}, {"subject", v.subject}, {"detail", v.detail}};
  if (v.other) out["other"] = *v.other;
  if (v.offending) out["offending"] = *v.offending;
  return out;
}

Json validation_to_json(const ValidationReport& report) {
  Json entries = Json::array();
  for (const auto& v : report.entries) entries.push_back(violation_to_json(v));
  return {{"schema", schema::kValidation},
          {"prefix_size", report.prefix_size},
          {"passed", report.passed()},
          {"entries", entries}};
}

Json tau_report_to_json(const TauReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) violations.push_back(violation_to_json(v));
  Json counts = Json::array();
  for (const auto& c : report.counts) {
    counts.push_back({{"id", c.id},
                      {"predecessors", c.predecessors ? Json(*c.predecessors) : Json()},
                      {"successors", c.successors ? Json(*c.successors) : Json()}});
  }
  return {{"kind", to_string(report.kind)},
          {"prefix_size", report.prefix_size},
          {"passed", report.passed()},
          {"max_predecessors", report.max_predecessors},
          {"max_successors", report.max_successors},
          {"max_interval", report.max_interval},
          {"counts", counts},
          {"violations", violations}};
}

}  // namespace taulike
