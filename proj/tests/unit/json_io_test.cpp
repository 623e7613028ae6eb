#include <gtest/gtest.h>

#include "taulike/json_io.hpp"

using namespace taulike;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no taulike::Error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(PosetJson, ExampleFileShape) {
  auto p = poset_from_json(Json::parse(R"({"elements":[0,1,2],"relation":[[0,1],[1,2]]})"));
  EXPECT_EQ(p, chain(3));
}

TEST(PosetJson, RoundTripIsIdentical) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto p = random_poset(1 + seed % 15, 0.35, seed);
    const auto doc = poset_to_json(p);
    EXPECT_EQ(doc.at("schema"), schema::kPoset);
    EXPECT_EQ(poset_from_json(Json::parse(doc.dump())), p);
  }
  const std::vector<IdPair> gens{{30, 7}};
  auto odd = build_poset({30, 7, 1000}, gens);
  EXPECT_EQ(poset_from_json(poset_to_json(odd)), odd);
}

TEST(PosetJson, Rejections) {
  EXPECT_EQ(code_of([] { poset_from_json(Json::parse(R"({"elements":[0],"edges":[]})")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { poset_from_json(Json::parse(R"({"relation":[]})")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { poset_from_json(Json::parse(R"({"elements":[-1]})")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { poset_from_json(Json::parse(R"({"elements":[0,1],"relation":[[0]]})")); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { poset_from_json(Json::parse(R"([0,1])")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { poset_from_json(Json::parse(R"({"elements":[0,1],"relation":[[0,1],[1,0]]})")); }),
            ErrorCode::CycleError);
  EXPECT_EQ(code_of([] { poset_from_json(Json::parse(R"({"elements":[0],"relation":[[0,4]]})")); }),
            ErrorCode::UnknownIdError);
  EXPECT_EQ(code_of([] { load_poset("/nonexistent/poset.json"); }), ErrorCode::ParseError);
}

TEST(EmbeddingJson, CoordinateShapes) {
  Embedding w(OrderKind::OmegaPlusOmegaStar,
              {{0, CanonicalPoint::omega_plus_omega_star(0, 0)}, {5, CanonicalPoint::omega_plus_omega_star(1, 3)}});
  auto doc = embedding_to_json(w);
  EXPECT_EQ(doc.at("kind"), "omega-omega-star");
  EXPECT_EQ(doc.at("map"), Json::parse("[[0,[0,0]],[5,[1,3]]]"));

  Embedding z(OrderKind::Zeta, {{1, CanonicalPoint::zeta(-1)}, {0, CanonicalPoint::zeta(0)}});
  EXPECT_EQ(embedding_to_json(z).at("map"), Json::parse("[[1,-1],[0,0]]"));

  for (const auto& e : {w, z}) {
    auto back = embedding_from_json(embedding_to_json(e));
    ASSERT_EQ(back.size(), e.size());
    for (const auto& [x, p] : e.assignments()) EXPECT_EQ(back.at(x), p);
  }
  EXPECT_EQ(code_of([] { embedding_from_json(Json::parse(R"({"kind":"omega","map":[[0,-2]]})")); }),
            ErrorCode::ParseError);
}

TEST(FufJson, RoundTrip) {
  const std::vector<std::size_t> sizes{1, 2, 0};
  for (auto v : {FufVariant::Omega, FufVariant::OmegaStar, FufVariant::Zeta}) {
    auto g = make_fuf_gadget_from_sizes(sizes, v);
    auto doc = fuf_gadget_to_json(g);
    EXPECT_EQ(doc.at("meta").at("union_size"), 3);
    auto back = fuf_gadget_from_json(Json::parse(doc.dump()));
    EXPECT_EQ(back.base, g.base);
    EXPECT_EQ(back.parts, g.parts);
    EXPECT_EQ(back.top_markers, g.top_markers);
    EXPECT_EQ(back.bottom_markers, g.bottom_markers);
    EXPECT_EQ(back.variant, v);
    // The dump is still a plain poset document.
    EXPECT_EQ(poset_from_json(doc), g.base);
  }
}

TEST(LinearizationJson, Fields) {
  auto lin = omega_linearize(omega_stream(), 3);
  auto doc = linearization_to_json(lin, OrderKind::Omega);
  EXPECT_EQ(doc.at("order"), Json::parse("[0,1,2]"));
  EXPECT_EQ(doc.at("blocks").size(), 3u);
  EXPECT_EQ(doc.at("growth"), "right");
  EXPECT_EQ(order_from_json(doc), LinearOrder({0, 1, 2}));
  EXPECT_EQ(order_from_json(Json::parse("[4,2]")), LinearOrder({4, 2}));
}
