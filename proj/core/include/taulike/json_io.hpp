#pragma once

#include <filesystem>
#include <string_view>

#include <nlohmann/json.hpp>

#include "taulike/embedder.hpp"
#include "taulike/gadgets.hpp"
#include "taulike/harness.hpp"
#include "taulike/linearizer.hpp"
#include "taulike/poset.hpp"
#include "taulike/stream.hpp"

namespace taulike {

using Json = nlohmann::json;

/// Schema identifiers written into every document.
namespace schema {
inline constexpr std::string_view kPoset = "taulike/poset/1";
inline constexpr std::string_view kLinearization = "taulike/linearization/1";
inline constexpr std::string_view kEmbedding = "taulike/embedding/1";
inline constexpr std::string_view kValidation = "taulike/validation/1";
inline constexpr std::string_view kDecode = "taulike/decode/1";
inline constexpr std::string_view kVerify = "taulike/verify/1";
inline constexpr std::string_view kError = "taulike/error/1";
}  // namespace schema

/// {"schema", "elements", "relation"} with the cover relation as generators.
Json poset_to_json(const FinitePoset& poset);
/// Accepts "elements", "relation", and optionally "schema" and "meta"; any
/// other key is a ParseError. Relation pairs are closed on load.
FinitePoset poset_from_json(const Json& doc);
FinitePoset load_poset(const std::filesystem::path& path);

Json order_to_json(const LinearOrder& order);
/// A bare id array, or an object with "order" (and optional "anchor").
LinearOrder order_from_json(const Json& doc);

Json linearization_to_json(const Linearization& lin, OrderKind kind);
Json split_to_json(const SplitLinearization& split);

/// Coordinates: a natural for omega / omega*, [side,k] for omega+omega*, a
/// signed integer for zeta.
Json coordinate_to_json(const CanonicalPoint& p);
CanonicalPoint coordinate_from_json(OrderKind kind, const Json& coord);
Json embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const Json& doc);

/// Poset document plus "meta": variant, parts, markers.
Json fuf_gadget_to_json(const FufGadget& g);
FufGadget fuf_gadget_from_json(const Json& doc);

FufVariant parse_fuf_variant(std::string_view text);

Json validation_to_json(const ValidationReport& report);
Json violation_to_json(const OracleViolation& v);
Json tau_report_to_json(const TauReport& report);

}  // namespace taulike
