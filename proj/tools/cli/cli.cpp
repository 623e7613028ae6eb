#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "taulike/embedder.hpp"
#include "taulike/gadgets.hpp"
#include "taulike/harness.hpp"
#include "taulike/json_io.hpp"
#include "taulike/linearizer.hpp"

namespace taulike::cli {

namespace {

constexpr std::size_t kDefaultBlocks = 10;
constexpr std::size_t kDefaultElements = 20;
constexpr std::size_t kDefaultOraclePrefix = 100;
constexpr std::size_t kDefaultHorizon = 500;
constexpr std::size_t kDefaultStages = 50;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string target;
  std::string input;
  std::string family;
  std::string f;
  std::string sets;
  std::string kind;
  std::string out;
  std::string order;
  std::optional<std::size_t> blocks;
  std::optional<std::size_t> elements;
  std::optional<std::size_t> horizon;
  std::optional<std::size_t> size;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  double density = 0.3;
};

std::vector<std::uint64_t> parse_numbers(std::string_view text, char sep, std::string_view what) {
  std::vector<std::uint64_t> out;
  if (text.empty()) throw UsageError(std::string(what) + " must not be empty");
  std::size_t start = 0;
  while (true) {
    const auto end = text.find(sep, start);
    const auto piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw UsageError("bad number '" + std::string(piece) + "' in " + std::string(what));
    }
    out.push_back(v);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::optional<OrderKind> optional_kind(const Options& o) {
  if (o.kind.empty()) return std::nullopt;
  auto k = parse_order_kind(o.kind);
  if (!k) throw UsageError("unknown --kind '" + o.kind + "' (omega, omega-star, omega-omega-star, zeta)");
  return k;
}

OrderKind require_kind(const Options& o) {
  auto k = optional_kind(o);
  if (!k) throw UsageError(o.command + " needs --kind");
  return *k;
}

FufVariant fuf_variant(const Options& o) {
  const auto k = optional_kind(o).value_or(OrderKind::Omega);
  switch (k) {
    case OrderKind::Omega: return FufVariant::Omega;
    case OrderKind::OmegaStar: return FufVariant::OmegaStar;
    case OrderKind::Zeta: return FufVariant::Zeta;
    case OrderKind::OmegaPlusOmegaStar: break;
  }
  throw UsageError("FUF gadgets come in omega, omega-star and zeta variants");
}

FufGadget fuf_from_sets(const Options& o) {
  if (o.sets.empty()) throw UsageError("FUF gadgets need --sets, e.g. --sets \"1;2\"");
  const auto raw = parse_numbers(o.sets, ';', "--sets");
  const std::vector<std::size_t> sizes(raw.begin(), raw.end());
  return make_fuf_gadget_from_sizes(sizes, fuf_variant(o));
}

InjectiveFunction require_f(const Options& o) {
  if (o.f.empty()) throw UsageError(o.command + " " + o.target + " needs --f");
  return InjectiveFunction::parse(o.f);
}

std::size_t require_size(const Options& o) {
  if (!o.size) throw UsageError("family '" + o.family + "' needs --size");
  return *o.size;
}

StreamPoset family_stream(const Options& o) {
  const std::string& n = o.family;
  if (n == "omega") return omega_stream();
  if (n == "omega-star") return omega_star_stream();
  if (n == "antichain") return antichain_stream();
  if (n == "omega-omega-star") return omega_plus_omega_star_stream();
  if (n == "zeta") return zeta_stream(ZetaEnumeration::Alternate);
  if (n == "zeta-positive") return zeta_stream(ZetaEnumeration::AlternatePositive);
  if (n == "zeta-skewed") return zeta_stream(ZetaEnumeration::Skewed);
  if (n == "chain") return finite_stream(chain(require_size(o)), "chain");
  if (n == "fence") return finite_stream(fence(require_size(o)), "fence");
  if (n == "random") return finite_stream(random_poset(require_size(o), o.density, o.seed), "random");
  if (n == "fuf") return finite_stream(fuf_from_sets(o).base, "fuf");
  if (n == "range") return make_range_gadget(require_f(o)).stream;
  if (n == "embed-gadget") return make_embed_gadget(require_f(o)).stream;
  throw UsageError("unknown --family '" + n +
                   "' (omega, omega-star, antichain, omega-omega-star, zeta, zeta-positive, zeta-skewed, chain, "
                   "fence, random, fuf, range, embed-gadget)");
}

StreamPoset source_stream(const Options& o) {
  if (!o.input.empty()) return finite_stream(load_poset(o.input), o.input);
  if (!o.family.empty()) return family_stream(o);
  throw UsageError(o.command + " needs --input FILE or --family NAME");
}

BlockLinearizer::Mode mode_of(OrderKind k) {
  switch (k) {
    case OrderKind::Omega: return BlockLinearizer::Mode::Omega;
    case OrderKind::OmegaStar: return BlockLinearizer::Mode::OmegaStar;
    case OrderKind::Zeta: return BlockLinearizer::Mode::Zeta;
    case OrderKind::OmegaPlusOmegaStar: break;
  }
  throw UsageError("omega-omega-star has no block mode");
}

Linearization block_run(const StreamPoset& s, OrderKind kind, const Options& o) {
  if (o.elements) return linearize_elements(s, mode_of(kind), *o.elements);
  BlockLinearizer lin(s, mode_of(kind));
  lin.run_blocks(o.blocks.value_or(kDefaultBlocks));
  return lin.result();
}

SplitLinearization split_run(const StreamPoset& s, const Options& o) {
  if (o.blocks) throw UsageError("omega-omega-star budgets count elements; use --elements");
  return split_linearize(s, o.elements.value_or(kDefaultElements));
}

Json cmd_linearize(const Options& o) {
  const auto kind = require_kind(o);
  const auto s = source_stream(o);
  Json doc = kind == OrderKind::OmegaPlusOmegaStar ? split_to_json(split_run(s, o))
                                                   : linearization_to_json(block_run(s, kind, o), kind);
  doc["source"] = s.name();
  return doc;
}

Json cmd_embed(const Options& o) {
  const auto kind = require_kind(o);
  const auto s = source_stream(o);
  Embedding e;
  switch (kind) {
    case OrderKind::Omega: e = embed_omega(block_run(s, kind, o).order); break;
    case OrderKind::OmegaStar: e = embed_omega_star(block_run(s, kind, o).order); break;
    case OrderKind::Zeta: e = embed_zeta(block_run(s, kind, o).order); break;
    case OrderKind::OmegaPlusOmegaStar: {
      const auto split = split_run(s, o);
      e = embed_omega_plus_omega_star(split.order, split.sides);
      break;
    }
  }
  return embedding_to_json(e);
}

Json cmd_gadget(const Options& o) {
  if (o.target == "fuf") return fuf_gadget_to_json(fuf_from_sets(o));
  const auto f = require_f(o);
  const std::size_t n = o.elements.value_or(kDefaultElements);
  if (o.target == "range") {
    const auto g = make_range_gadget(f);
    const auto ids = enumerate_prefix(g.stream, n);
    Json doc = poset_to_json(prefix(g.stream, n));
    Json a = Json::array(), b = Json::array(), false_stages = Json::array();
    for (ElementId x : ids) {
      if (range_ids::is_a(x)) {
        a.push_back({x, range_ids::index(x)});
        if (!f.is_true_stage(range_ids::index(x))) false_stages.push_back(range_ids::index(x));
      } else {
        b.push_back({x, range_ids::index(x)});
      }
    }
    doc["meta"] = {{"gadget", "range"}, {"f", f.spec()}, {"a", a}, {"b", b}, {"false_stages", false_stages}};
    return doc;
  }
  const auto g = make_embed_gadget(f);
  const auto ids = enumerate_prefix(g.stream, n);
  Json doc = poset_to_json(prefix(g.stream, n));
  Json a = Json::array(), b = Json::array();
  for (ElementId x : ids) {
    if (embed_ids::is_a(x)) {
      a.push_back({x, x / 2});
    } else {
      const auto [stage, j] = unpair_id((x - 1) / 2);
      b.push_back({x, stage, j});
    }
  }
  doc["meta"] = {{"gadget", "embed"}, {"f", f.spec()}, {"a", a}, {"b", b}};
  return doc;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "'" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<ElementId> order_option(const Options& o) {
  const auto raw = parse_numbers(o.order, ',', "--order");
  return {raw.begin(), raw.end()};
}

Json cmd_decode(const Options& o) {
  if (o.target == "fuf") {
    if (o.input.empty()) throw UsageError("decode fuf needs --input GADGET.json");
    const auto g = fuf_gadget_from_json(read_json_file(o.input));
    const LinearOrder l = o.order.empty() ? szpilrajn_extend(g.base) : LinearOrder(order_option(o));
    const std::size_t bound = fuf_decode(l, g);
    return {{"schema", schema::kDecode},
            {"decoder", "fuf"},
            {"variant", to_string(g.variant)},
            {"order", std::vector<ElementId>(l.elements().begin(), l.elements().end())},
            {"bound", bound},
            {"union_size", g.union_size()},
            {"bound_holds", bound >= g.union_size()}};
  }
  const auto f = require_f(o);
  if (o.target == "false-stages") {
    const std::size_t horizon = o.horizon.value_or(kDefaultHorizon);
    const std::size_t s = o.elements.value_or(std::min(kDefaultStages, horizon));
    const auto g = make_range_gadget(f);
    const auto split = split_linearize(g.stream, 2 * horizon);
    const auto d = decode_false_stages(split.order, s);
    const auto truth = f.false_stages_below(s);
    return {{"schema", schema::kDecode}, {"decoder", "false-stages"}, {"f", f.spec()},
            {"horizon", d.horizon},      {"stages", s},               {"false_stages", d.false_stages},
            {"ground_truth", truth},     {"exact", d.false_stages == truth}};
  }
  const std::size_t k = o.elements.value_or(kDefaultStages);
  if (k == 0) throw UsageError("decode range needs --elements >= 1");
  const auto g = make_embed_gadget(f);
  const auto h = embed_poset(g.stream, OrderKind::Omega, embed_gadget_budget(g, k));
  std::int64_t top = 0;
  for (std::size_t m = 0; m < k; ++m) top = std::max(top, h.at(embed_ids::a(m)).rank);
  const auto values = f.values(static_cast<std::size_t>(top) + 1);
  std::vector<std::uint64_t> members, truth;
  for (std::size_t m = 0; m < k; ++m) {
    if (decode_range(h, values, m)) members.push_back(m);
    if (f.in_range(m)) truth.push_back(m);
  }
  return {{"schema", schema::kDecode}, {"decoder", "range"},    {"f", f.spec()},
          {"below", k},                {"members", members},    {"ground_truth", truth},
          {"exact", members == truth}};
}

Json cmd_verify(const Options& o) {
  if (o.input.empty()) {
    const auto s = source_stream(o);
    const auto kind = require_kind(o);
    Json doc = tau_report_to_json(check_tau_like(s, o.elements.value_or(kDefaultOraclePrefix), kind));
    doc["schema"] = schema::kVerify;
    doc["source"] = s.name();
    return doc;
  }
  const auto p = load_poset(o.input);
  Json tau = Json::object();
  const auto only = optional_kind(o);
  for (auto k : {OrderKind::Omega, OrderKind::OmegaStar, OrderKind::OmegaPlusOmegaStar, OrderKind::Zeta}) {
    if (!only || *only == k) tau[std::string(to_string(k))] = tau_report_to_json(check_tau_like(p, k));
  }
  Json doc = {{"schema", schema::kVerify},
              {"source", o.input},
              {"elements", p.size()},
              {"relation_size", p.relation().size()},
              {"cover_relation", p.cover_relation()},
              {"order_axioms", p.satisfies_order_axioms()},
              {"tau_like", tau}};
  if (p.size() <= kExhaustiveLimit) {
    doc["linear_extensions"] = all_linear_extensions(p, kExhaustiveLimit, o.jobs).size();
  }
  if (!o.order.empty()) {
    const auto check = is_linear_extension(order_option(o), p);
    Json c = {{"ok", check.ok()}, {"reason", to_string(check.reason)}};
    if (check.witness) c["witness"] = {check.witness->first, check.witness->second};
    doc["extension_check"] = c;
  }
  return doc;
}

Json cmd_oracle(const Options& o) {
  const auto s = source_stream(o);
  Json doc = validation_to_json(validate_oracles(s, o.elements.value_or(kDefaultOraclePrefix)));
  doc["source"] = s.name();
  return doc;
}

void add_common(CLI::App* sub, Options& o) {
  auto* input = sub->add_option("--input", o.input, "Poset JSON file (or gadget dump for decode fuf)");
  auto* family = sub->add_option("--family", o.family, "Built-in stream family");
  input->excludes(family);
  sub->add_option("--f", o.f, "Injective function: identity | perm:1,0,2 | swap:k | prefix:5,3,9 | values:..;tail:N");
  sub->add_option("--sets", o.sets, "FUF part sizes, semicolon separated, e.g. \"1;2\"");
  sub->add_option("--kind", o.kind, "omega | omega-star | omega-omega-star | zeta");
  auto* blocks = sub->add_option("--blocks", o.blocks, "Block budget");
  auto* elements = sub->add_option("--elements", o.elements, "Element budget / prefix length / stage count");
  blocks->excludes(elements);
  sub->add_option("--horizon", o.horizon, "Range gadget horizon M (a_0..a_{M-1}, b_0..b_{M-1})");
  sub->add_option("--seed", o.seed, "Seed for --family random");
  sub->add_option("--jobs", o.jobs, "Threads for exhaustive enumeration")->check(CLI::Range(1u, 256u));
  sub->add_option("--out", o.out, "Write the result JSON to FILE instead of stdout");
  sub->add_option("--size", o.size, "Size of finite families (chain, fence, random)");
  sub->add_option("--density", o.density, "Edge density for --family random")->check(CLI::Range(0.0, 1.0));
  sub->add_option("--order", o.order, "Comma-separated linear order to check or decode");
}

Json error_json(std::string_view code, std::string_view detail) {
  return {{"schema", schema::kError}, {"error", {{"code", code}, {"detail", detail}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Linearize, embed and probe tau-like partial orders", "taulike"};
  app.require_subcommand(1, 1);
  app.get_formatter()->column_width(34);

  struct Entry {
    const char* name;
    const char* help;
  };
  for (const auto& [name, help] : {Entry{"linearize", "Run the block linearizer matching --kind"},
                                   Entry{"embed", "Linearize, then rank-embed into the canonical order"},
                                   Entry{"gadget", "Dump a gadget: fuf | range | embed"},
                                   Entry{"decode", "Run a decoder: fuf | false-stages | range"},
                                   Entry{"verify", "Check a poset file (or a stream prefix with --kind)"},
                                   Entry{"oracle", "Cross-check a stream's oracles on a prefix"}}) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, o);
    sub->callback([&o, n = std::string(name)] { o.command = n; });
    if (std::string_view(name) == "gadget") {
      sub->add_option("target", o.target)->required()->check(CLI::IsMember({"fuf", "range", "embed"}));
    } else if (std::string_view(name) == "decode") {
      sub->add_option("target", o.target)->required()->check(CLI::IsMember({"fuf", "false-stages", "range"}));
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Json result;
  try {
    if (o.command == "linearize") result = cmd_linearize(o);
    else if (o.command == "embed") result = cmd_embed(o);
    else if (o.command == "gadget") result = cmd_gadget(o);
    else if (o.command == "decode") result = cmd_decode(o);
    else if (o.command == "verify") result = cmd_verify(o);
    else result = cmd_oracle(o);
  } catch (const UsageError& e) {
    err << "taulike " << o.command << ": " << e.what() << "\nRun with --help for more information.\n";
    return kExitUsage;
  } catch (const Error& e) {
    out << error_json(e.code_name(), e.what()).dump(2) << '\n';
    err << "taulike " << o.command << ": " << e.code_name() << ": " << e.what() << '\n';
    return kExitDomain;
  }

  if (!o.out.empty()) {
    std::ofstream file(o.out);
    if (!file || !(file << result.dump(2) << '\n')) {
      out << error_json("InvalidArgument", "cannot write '" + o.out + "'").dump(2) << '\n';
      err << "taulike: cannot write '" << o.out << "'\n";
      return kExitDomain;
    }
    return kExitOk;
  }
  out << result.dump(2) << '\n';
  return kExitOk;
}

}  // namespace taulike::cli
