#include "itm/serialize.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace itm {
namespace {

using Json = nlohmann::ordered_json;

Json rational_node(const Rational& r) { return Json(format_rational(r)); }

Json interval_node(const Interval& v) {
  return Json::array({format_rational(v.left()), format_rational(v.right())});
}

Json set_node(const IntervalSet& set) {
  Json node = Json::array();
  for (const Interval& v : set.pieces()) {
    node.push_back(interval_node(v));
  }
  return node;
}

Json map_node(const Map& map) {
  Json breakpoints = Json::array();
  for (const Rational& b : map.interior_breakpoints()) {
    breakpoints.push_back(rational_node(b));
  }
  Json translations = Json::array();
  for (const Rational& g : map.translations()) {
    translations.push_back(rational_node(g));
  }
  return Json{{"breakpoints", breakpoints}, {"translations", translations}};
}

Json conjugacy_node(const AffineConjugacy& conj) {
  return Json{{"offset", rational_node(conj.offset)},
              {"scale", rational_node(conj.scale)}};
}

Json double_rotation_node(const DoubleRotation& rotation) {
  return Json{{"a", rational_node(rotation.a())},
              {"b", rational_node(rotation.b())},
              {"c", rational_node(rotation.c())}};
}

Json verdict_node(const TypeVerdict& verdict) {
  if (const auto* finite = std::get_if<FiniteType>(&verdict)) {
    return Json{{"verdict", "finite"},
                {"steps", finite->steps},
                {"limit", set_node(finite->limit)}};
  }
  const auto& undecided = std::get<Undecided>(verdict);
  return Json{{"verdict", "undecided"}, {"budget", undecided.budget_spent}};
}

Json cell_node(const Cell& cell) {
  return Json{{"j", cell.j}, {"k", cell.k}, {"tie", cell.tie}};
}

Json system_node(const ReturnSystem& system) {
  Json pieces = Json::array();
  for (const ReturnPiece& piece : system.pieces) {
    pieces.push_back(Json{{"domain", interval_node(piece.domain)},
                          {"translation", rational_node(piece.translation)},
                          {"return_time", piece.return_time}});
  }
  return Json{{"base", interval_node(system.base)}, {"pieces", pieces}};
}

Json terminal_node(const Terminal& terminal) {
  if (std::holds_alternative<Identity>(terminal)) {
    return Json{{"kind", "identity"}};
  }
  if (const auto* rotation = std::get_if<DoubleRotation>(&terminal)) {
    return Json{{"kind", "double-rotation"},
                {"a", rational_node(rotation->a())},
                {"b", rational_node(rotation->b())},
                {"c", rational_node(rotation->c())}};
  }
  if (const auto* rotation = std::get_if<Rotation>(&terminal)) {
    return Json{{"kind", "rotation"},
                {"trap", interval_node(rotation->trap)},
                {"shift", rational_node(rotation->shift)}};
  }
  const auto& stop = std::get<BoundaryStop>(terminal);
  return Json{{"kind", "boundary"}, {"witness", stop.witness}};
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

const Json& require_field(const Json& node, const char* key) {
  if (!node.is_object()) {
    throw std::invalid_argument("expected a JSON object");
  }
  const auto it = node.find(key);
  if (it == node.end()) {
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

Rational rational_from(const Json& node) {
  if (!node.is_string()) {
    throw std::invalid_argument("expected a rational as a \"p/q\" string");
  }
  return parse_rational(node.get<std::string>());
}

std::vector<Rational> rational_list(const Json& node, const char* what) {
  if (!node.is_array()) {
    throw std::invalid_argument(std::string("field \"") + what +
                                "\" must be an array");
  }
  std::vector<Rational> values;
  values.reserve(node.size());
  for (const Json& element : node) {
    values.push_back(rational_from(element));
  }
  return values;
}

std::string list_text(const std::vector<Rational>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += format_rational(values[i]);
  }
  out += "]";
  return out;
}

std::string interval_text(const Interval& v) {
  return "[" + format_rational(v.left()) + ", " + format_rational(v.right()) +
         ")";
}

std::string set_text(const IntervalSet& set) {
  if (set.empty()) {
    return "(empty)";
  }
  std::string out;
  for (std::size_t i = 0; i < set.piece_count(); ++i) {
    if (i > 0) {
      out += " ";
    }
    out += interval_text(set.pieces()[i]);
  }
  return out;
}

std::string map_text(const Map& map) {
  return "breakpoints " + list_text(map.interior_breakpoints()) +
         ", translations " + list_text(map.translations());
}

std::string conjugacy_text(const AffineConjugacy& conj) {
  return "x = " + format_rational(conj.offset) + " + " +
         format_rational(conj.scale) + " * u";
}

std::string terminal_text(const Terminal& terminal) {
  if (std::holds_alternative<Identity>(terminal)) {
    return "identity";
  }
  if (const auto* rotation = std::get_if<DoubleRotation>(&terminal)) {
    return "double rotation a=" + format_rational(rotation->a()) +
           ", b=" + format_rational(rotation->b()) +
           ", c=" + format_rational(rotation->c());
  }
  if (const auto* rotation = std::get_if<Rotation>(&terminal)) {
    return "rotation of " + interval_text(rotation->trap) + " by " +
           format_rational(rotation->shift);
  }
  return "boundary: " + std::get<BoundaryStop>(terminal).witness;
}

std::string verdict_text(const TypeVerdict& verdict) {
  if (const auto* finite = std::get_if<FiniteType>(&verdict)) {
    return "finite, " + std::to_string(finite->steps) + " steps, limit " +
           set_text(finite->limit);
  }
  const auto& undecided = std::get<Undecided>(verdict);
  return "undecided after " + std::to_string(undecided.budget_spent) +
         " images";
}

}  // namespace

std::string to_json(const Map& map) { return map_node(map).dump(); }

Map map_from_json(const std::string& text) {
  const Json node = parse_text(text);
  return Map(rational_list(require_field(node, "breakpoints"), "breakpoints"),
             rational_list(require_field(node, "translations"),
                           "translations"));
}

std::string to_json(const DoubleRotation& rotation) {
  return double_rotation_node(rotation).dump();
}

DoubleRotation double_rotation_from_json(const std::string& text) {
  const Json node = parse_text(text);
  return DoubleRotation(rational_from(require_field(node, "a")),
                        rational_from(require_field(node, "b")),
                        rational_from(require_field(node, "c")));
}

std::string to_json(const IntervalSet& set) { return set_node(set).dump(); }

std::string to_json(const TypeVerdict& verdict) {
  return verdict_node(verdict).dump();
}

std::string to_json(const ReductionTrace& trace) {
  Json node;
  node["input"] = map_node(trace.input);
  node["canonical"] = map_node(trace.canonical);
  node["reducibility"] = to_string(trace.reducibility);
  node["drop"] = trace.drop
                     ? Json{{"map", map_node(trace.drop->map)},
                            {"conjugacy", conjugacy_node(trace.drop->conj)},
                            {"side", to_string(trace.drop->side)}}
                     : Json();
  node["trap"] =
      trace.trap_interval ? interval_node(*trace.trap_interval) : Json();
  node["cell"] = trace.first_cell ? cell_node(*trace.first_cell) : Json();
  node["fitted"] = trace.fitted ? map_node(*trace.fitted) : Json();
  node["fit_conjugacy"] =
      trace.fit_conjugacy ? conjugacy_node(*trace.fit_conjugacy) : Json();
  node["mirrored"] = trace.mirrored;
  node["label"] = trace.label ? Json(to_string(*trace.label)) : Json();
  node["induction"] =
      trace.induction ? system_node(*trace.induction) : Json();
  node["induced"] = trace.induced ? map_node(*trace.induced) : Json();
  node["induction_conjugacy"] = trace.induction_conjugacy
                                    ? conjugacy_node(*trace.induction_conjugacy)
                                    : Json();
  node["degenerate_rotation"] = trace.degenerate_rotation;
  node["terminal"] = terminal_node(trace.terminal);
  node["terminal_type"] =
      trace.terminal_type ? verdict_node(*trace.terminal_type) : Json();
  return node.dump();
}

std::string pretty_trace(const ReductionTrace& trace) {
  std::ostringstream out;
  out << "input:        " << map_text(trace.input) << "\n";
  if (trace.canonical == trace.input) {
    out << "canonical:    same as input\n";
  } else {
    out << "canonical:    " << map_text(trace.canonical) << "\n";
  }
  out << "reducibility: " << to_string(trace.reducibility) << "\n";
  if (trace.drop) {
    out << "drop:         kept side rescaled to " << map_text(trace.drop->map)
        << "\n";
  }
  if (trace.trap_interval) {
    out << "trap:         " << interval_text(*trace.trap_interval) << "\n";
  }
  if (trace.first_cell) {
    out << "cell:         j=" << trace.first_cell->j
        << ", k=" << trace.first_cell->k
        << (trace.first_cell->tie ? " (tie)" : "") << "\n";
  }
  if (trace.fitted) {
    out << "fitted:       " << map_text(*trace.fitted) << "\n";
  }
  if (trace.fit_conjugacy) {
    out << "              via " << conjugacy_text(*trace.fit_conjugacy)
        << "\n";
  }
  if (trace.label) {
    out << "mirrored:     " << (trace.mirrored ? "yes" : "no") << "\n";
    out << "label:        " << to_string(*trace.label) << "\n";
  }
  if (trace.induction) {
    out << "induction:    base " << interval_text(trace.induction->base)
        << "\n";
    for (const ReturnPiece& piece : trace.induction->pieces) {
      out << "              " << interval_text(piece.domain) << " + "
          << format_rational(piece.translation) << ", return time "
          << piece.return_time << "\n";
    }
  }
  if (trace.induced) {
    out << "induced:      " << map_text(*trace.induced);
    if (trace.degenerate_rotation) {
      out << " (merged to a rotation)";
    }
    out << "\n";
  }
  if (trace.induction_conjugacy) {
    out << "              via " << conjugacy_text(*trace.induction_conjugacy)
        << "\n";
  }
  out << "terminal:     " << terminal_text(trace.terminal) << "\n";
  if (trace.terminal_type) {
    out << "type:         " << verdict_text(*trace.terminal_type) << "\n";
  }
  return out.str();
}

}  // namespace itm
