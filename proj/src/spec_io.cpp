#include "decay/spec_io.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace decay {

namespace {

[[noreturn]] void fail_at(const YAML::Node& node, const std::string& message) {
  const auto mark = node.Mark();
  if (mark.is_null()) throw SpecError(message);
  throw SpecError(message, mark.line + 1, mark.column + 1);
}

void require_map(const YAML::Node& node, const std::string& what) {
  if (!node.IsMap()) fail_at(node, what + " must be a mapping");
}

void allow_keys(const YAML::Node& node, std::initializer_list<const char*> keys) {
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.contains(key)) fail_at(kv.first, "unknown key '" + key + "'");
  }
}

YAML::Node required(const YAML::Node& node, const char* key) {
  const auto child = node[key];
  if (!child) fail_at(node, std::string("missing key '") + key + "'");
  return child;
}

double as_double(const YAML::Node& node, const std::string& what) {
  if (!node.IsScalar()) fail_at(node, what + " must be a number");
  const auto& text = node.Scalar();
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) fail_at(node, what + " must be a finite number, got '" + text + "'");
  return value;
}

long long as_integer(const YAML::Node& node, const std::string& what) {
  if (!node.IsScalar()) fail_at(node, what + " must be an integer");
  const auto& text = node.Scalar();
  long long value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) fail_at(node, what + " must be an integer, got '" + text + "'");
  return value;
}

std::vector<ScalarFn> parse_terms(const YAML::Node& node);

ScalarFn parse_fn(const YAML::Node& node) {
  if (node.IsScalar()) {
    const auto& text = node.Scalar();
    if (text == "id") return ScalarFn::identity();
    if (text == "zero") return ScalarFn::zero();
    return ScalarFn::linear(as_double(node, "gain coefficient"));
  }
  require_map(node, "function");
  const auto type = required(node, "type").as<std::string>();
  if (type == "zero") {
    allow_keys(node, {"type"});
    return ScalarFn::zero();
  }
  if (type == "linear") {
    allow_keys(node, {"type", "coef"});
    return ScalarFn::linear(as_double(required(node, "coef"), "coef"));
  }
  if (type == "power") {
    allow_keys(node, {"type", "exponent"});
    return ScalarFn::power(as_double(required(node, "exponent"), "exponent"));
  }
  if (type == "scaled_power") {
    allow_keys(node, {"type", "coef", "exponent"});
    return ScalarFn::scaled_power(as_double(required(node, "coef"), "coef"),
                                  as_double(required(node, "exponent"), "exponent"));
  }
  if (type == "sum" || type == "max") {
    allow_keys(node, {"type", "terms"});
    auto terms = parse_terms(required(node, "terms"));
    return type == "sum" ? ScalarFn::sum(std::move(terms)) : ScalarFn::max(std::move(terms));
  }
  fail_at(node["type"], "unknown function type '" + type + "' (expected zero, linear, power, scaled_power, sum, max)");
}

std::vector<ScalarFn> parse_terms(const YAML::Node& node) {
  if (!node.IsSequence() || node.size() == 0) fail_at(node, "terms must be a nonempty list");
  std::vector<ScalarFn> out;
  for (const auto& item : node) out.push_back(parse_fn(item));
  return out;
}

MapSpec parse_node(const YAML::Node& node);

// Semantic checks run through the library constructors; their messages name the invariant.
template <class F>
auto checked(const YAML::Node& node, const std::string& what, F&& build) {
  try {
    return build();
  } catch (const std::invalid_argument& e) {
    fail_at(node, what + ": " + e.what());
  }
}

MapSpec parse_linear(const YAML::Node& node) {
  allow_keys(node, {"kind", "matrix"});
  const auto rows = required(node, "matrix");
  if (!rows.IsSequence() || rows.size() == 0) fail_at(rows, "matrix must be a nonempty list of rows");
  const std::size_t n = rows.size();
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = rows[i];
    if (!row.IsSequence() || row.size() != n) {
      fail_at(row, "matrix must be square: row " + std::to_string(i + 1) + " needs " + std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) = as_double(row[j], "matrix entry");
  }
  return checked(rows, "linear", [&] { return MapSpec{LinearSpec{NonnegativeMatrix(m)}}; });
}

MapSpec parse_chain(const YAML::Node& node) {
  allow_keys(node, {"kind", "n"});
  const auto n_node = required(node, "n");
  const auto n = as_integer(n_node, "n");
  if (n < 2) fail_at(n_node, "chain: n must be >= 2");
  return MapSpec{ChainSpec{static_cast<std::size_t>(n)}};
}

MapSpec parse_flipflop(const YAML::Node& node) {
  allow_keys(node, {"kind", "lambda"});
  const auto l_node = required(node, "lambda");
  const double lambda = as_double(l_node, "lambda");
  if (!(lambda > 0.0 && lambda < 1.0)) fail_at(l_node, "flipflop: lambda must lie in (0, 1)");
  return MapSpec{FlipflopSpec{lambda}};
}

MapSpec parse_maxpreserving(const YAML::Node& node) {
  allow_keys(node, {"kind", "n", "gains"});
  const auto n_node = required(node, "n");
  const auto n = as_integer(n_node, "n");
  if (n < 1) fail_at(n_node, "maxpreserving: n must be >= 1");
  GainTable table(static_cast<std::size_t>(n));
  std::set<std::pair<long long, long long>> seen;
  const auto gains = node["gains"];
  if (gains) {
    if (!gains.IsSequence()) fail_at(gains, "gains must be a list of {i, j, fn} entries");
    for (const auto& entry : gains) {
      require_map(entry, "gain entry");
      allow_keys(entry, {"i", "j", "fn"});
      const auto i = as_integer(required(entry, "i"), "i");
      const auto j = as_integer(required(entry, "j"), "j");
      if (i < 1 || i > n || j < 1 || j > n) fail_at(entry, "gain index out of range 1.." + std::to_string(n));
      if (!seen.insert({i, j}).second) fail_at(entry, "duplicate gain for (" + std::to_string(i) + "," + std::to_string(j) + ")");
      auto fn = parse_fn(required(entry, "fn"));
      checked(entry, "maxpreserving", [&] {
        table.set(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), std::move(fn));
        return 0;
      });
    }
  }
  return MapSpec{MaxPreservingSpec{std::move(table)}};
}

MapSpec parse_diagonal(const YAML::Node& node) {
  allow_keys(node, {"kind", "functions"});
  const auto fns = required(node, "functions");
  if (!fns.IsSequence() || fns.size() == 0) fail_at(fns, "functions must be a nonempty list");
  std::vector<ScalarFn> functions;
  for (const auto& item : fns) {
    auto f = parse_fn(item);
    if (const auto why = k_infinity_violation(f); !why.empty()) fail_at(item, "diagonal: " + why);
    functions.push_back(std::move(f));
  }
  return MapSpec{DiagonalSpec{std::move(functions)}};
}

MapSpec parse_composition(const YAML::Node& node) {
  allow_keys(node, {"kind", "outer", "inner"});
  auto outer = std::make_shared<const MapSpec>(parse_node(required(node, "outer")));
  auto inner = std::make_shared<const MapSpec>(parse_node(required(node, "inner")));
  if (outer->dimension() != inner->dimension()) {
    fail_at(node, "composition: dimension mismatch (outer n=" + std::to_string(outer->dimension()) +
                      ", inner n=" + std::to_string(inner->dimension()) + ")");
  }
  return MapSpec{CompositionSpec{std::move(outer), std::move(inner)}};
}

MapSpec parse_node(const YAML::Node& node) {
  require_map(node, "map spec");
  const auto kind_node = required(node, "kind");
  const auto kind = kind_node.as<std::string>();
  if (kind == "linear") return parse_linear(node);
  if (kind == "chain") return parse_chain(node);
  if (kind == "flipflop") return parse_flipflop(node);
  if (kind == "maxpreserving") return parse_maxpreserving(node);
  if (kind == "diagonal") return parse_diagonal(node);
  if (kind == "composition") return parse_composition(node);
  fail_at(kind_node, "unknown kind '" + kind + "' (expected linear, chain, flipflop, maxpreserving, diagonal, composition)");
}

void emit_fn(YAML::Emitter& out, const ScalarFn& f) {
  using K = ScalarFn::Kind;
  out << YAML::Flow << YAML::BeginMap;
  switch (f.kind()) {
    case K::Zero:
      out << YAML::Key << "type" << YAML::Value << "zero";
      break;
    case K::Linear:
      out << YAML::Key << "type" << YAML::Value << "linear" << YAML::Key << "coef" << YAML::Value << format_double(f.coef());
      break;
    case K::Power:
      out << YAML::Key << "type" << YAML::Value << "power" << YAML::Key << "exponent" << YAML::Value
          << format_double(f.exponent());
      break;
    case K::ScaledPower:
      out << YAML::Key << "type" << YAML::Value << "scaled_power" << YAML::Key << "coef" << YAML::Value
          << format_double(f.coef()) << YAML::Key << "exponent" << YAML::Value << format_double(f.exponent());
      break;
    case K::Sum:
    case K::Max:
      out << YAML::Key << "type" << YAML::Value << (f.kind() == K::Sum ? "sum" : "max") << YAML::Key << "terms"
          << YAML::Value << YAML::BeginSeq;
      for (const auto& term : f.terms()) emit_fn(out, term);
      out << YAML::EndSeq;
      break;
  }
  out << YAML::EndMap;
}

void emit_spec(YAML::Emitter& out, const MapSpec& spec) {
  out << YAML::BeginMap << YAML::Key << "kind" << YAML::Value << spec.kind_name();
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, LinearSpec>) {
          out << YAML::Key << "matrix" << YAML::Value << YAML::BeginSeq;
          for (std::size_t i = 0; i < s.matrix.size(); ++i) {
            out << YAML::Flow << YAML::BeginSeq;
            for (double v : s.matrix.matrix().row(i)) out << format_double(v);
            out << YAML::EndSeq;
          }
          out << YAML::EndSeq;
        } else if constexpr (std::is_same_v<S, ChainSpec>) {
          out << YAML::Key << "n" << YAML::Value << s.n;
        } else if constexpr (std::is_same_v<S, FlipflopSpec>) {
          out << YAML::Key << "lambda" << YAML::Value << format_double(s.lambda);
        } else if constexpr (std::is_same_v<S, MaxPreservingSpec>) {
          const std::size_t n = s.gains.size();
          out << YAML::Key << "n" << YAML::Value << n << YAML::Key << "gains" << YAML::Value << YAML::BeginSeq;
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
              if (s.gains(i, j).is_zero()) continue;
              out << YAML::Flow << YAML::BeginMap << YAML::Key << "i" << YAML::Value << i + 1 << YAML::Key << "j"
                  << YAML::Value << j + 1 << YAML::Key << "fn" << YAML::Value;
              emit_fn(out, s.gains(i, j));
              out << YAML::EndMap;
            }
          out << YAML::EndSeq;
        } else if constexpr (std::is_same_v<S, DiagonalSpec>) {
          out << YAML::Key << "functions" << YAML::Value << YAML::BeginSeq;
          for (const auto& f : s.functions) emit_fn(out, f);
          out << YAML::EndSeq;
        } else {
          out << YAML::Key << "outer" << YAML::Value;
          emit_spec(out, *s.outer);
          out << YAML::Key << "inner" << YAML::Value;
          emit_spec(out, *s.inner);
        }
      },
      spec.kind);
  out << YAML::EndMap;
}

}  // namespace

SpecError::SpecError(const std::string& message, std::optional<int> line, std::optional<int> column)
    : std::runtime_error(line ? "line " + std::to_string(*line) + ", column " + std::to_string(column.value_or(0)) +
                                    ": " + message
                              : message),
      line_(line),
      column_(column) {}

std::string format_double(double x) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

MapSpec parse_map_spec(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw SpecError(e.msg, e.mark.line + 1, e.mark.column + 1);
  }
  if (!root || root.IsNull()) throw SpecError("empty map spec");
  try {
    return parse_node(root);
  } catch (const YAML::Exception& e) {
    if (e.mark.is_null()) throw SpecError(e.msg);
    throw SpecError(e.msg, e.mark.line + 1, e.mark.column + 1);
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
}

MapSpec load_map_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open map file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_map_spec(text.str());
}

std::string serialize_map_spec(const MapSpec& spec) {
  YAML::Emitter out;
  emit_spec(out, spec);
  return std::string(out.c_str()) + "\n";
}

}  // namespace decay
