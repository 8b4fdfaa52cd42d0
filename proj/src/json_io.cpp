#include "hypernorm/json_io.hpp"

#include "hypernorm/errors.hpp"

namespace hypernorm::json_io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw StructuralError(std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

std::size_t count_from_json(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw StructuralError(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    auto part = [](const json& v) {
      if (v.is_string()) return BigInt(v.get<std::string>(), 10);
      if (v.is_number_integer()) return BigInt(std::to_string(v.get<std::int64_t>()));
      throw StructuralError("rational component must be a string or integer");
    };
    return make_rational(part(j.at("num")), part(j.at("den")));
  }
  throw StructuralError("expected a rational, got " + j.dump());
}

json to_json(const Rational& r) { return hypernorm::to_string(r); }

std::vector<Rational> rationals_from_json(const json& j) {
  if (!j.is_array()) throw StructuralError("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

json to_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

json to_json(const Interval& interval) {
  return {{"lo", to_json(interval.lo)}, {"hi", to_json(interval.hi)}};
}

SetFamily family_from_json(const json& j) {
  const std::size_t n = count_from_json(field(j, "n"), "n");
  const json& sets = field(j, "sets");
  if (!sets.is_array()) throw StructuralError("\"sets\" must be an array");
  std::vector<CoordSet> members;
  for (const auto& s : sets) {
    if (!s.is_array()) throw StructuralError("each set must be an array of coordinates");
    std::vector<std::size_t> coords;
    for (const auto& c : s) coords.push_back(count_from_json(c, "coordinate"));
    members.push_back(CoordSet::from_coordinates(coords));
  }
  return SetFamily(n, std::move(members));
}

json to_json(const SetFamily& family) {
  json sets = json::array();
  for (const auto& s : family.sets()) sets.push_back(s.coordinates());
  return {{"n", family.n()}, {"sets", sets}};
}

json to_json(const NormResult& result) {
  json out;
  if (result.is_infinite()) {
    out["value"] = "inf";
  } else {
    out["value"] = to_json(*result.value);
    out["primal"] = to_json(result.primal->values);
    out["dual"] = to_json(result.dual->values);
  }
  out["reciprocal"] = to_json(result.reciprocal());
  out["warnings"] = result.warnings;
  return out;
}

FiniteRelation relation_from_json(const json& j) {
  const json& sizes_json = field(j, "sizes");
  const json& tuples_json = field(j, "tuples");
  if (!sizes_json.is_array() || !tuples_json.is_array()) {
    throw StructuralError("\"sizes\" and \"tuples\" must be arrays");
  }
  std::vector<std::uint32_t> sizes;
  for (const auto& s : sizes_json) {
    sizes.push_back(static_cast<std::uint32_t>(count_from_json(s, "size")));
  }
  std::vector<Tuple> tuples;
  for (const auto& t : tuples_json) {
    if (!t.is_array()) throw StructuralError("each tuple must be an array");
    Tuple tuple;
    for (const auto& e : t) tuple.push_back(static_cast<std::uint32_t>(count_from_json(e, "entry")));
    tuples.push_back(std::move(tuple));
  }
  return FiniteRelation(std::move(sizes), std::move(tuples));
}

json to_json(const FiniteRelation& rel) {
  return {{"sizes", rel.sizes()}, {"tuples", rel.tuples()}};
}

json to_json(const Comparison& cmp) {
  return {{"lhs", to_json(cmp.lhs)},
          {"rhs", to_json(cmp.rhs)},
          {"holds", cmp.holds()},
          {"equality", cmp.equality()}};
}

json to_json(const SymbolicBox& box) {
  return {{"base", to_json(box.base)},
          {"exponents", to_json(box.exponents)},
          {"measure_exponent", to_json(box.measure_exponent())}};
}

Approximation approximation_from_json(const json& j) {
  const json& stages_json = field(j, "stages");
  if (!stages_json.is_array()) throw StructuralError("\"stages\" must be an array");
  std::vector<std::string> stages;
  for (const auto& s : stages_json) {
    if (!s.is_string()) throw StructuralError("each stage must be a binary string");
    stages.push_back(s.get<std::string>());
  }
  if (j.contains("length")) {
    return Approximation(count_from_json(j.at("length"), "length"), std::move(stages));
  }
  return Approximation(std::move(stages));
}

json to_json(const Approximation& approx) {
  return {{"length", approx.length()}, {"stages", approx.stages()}};
}

LeftCEApprox beta_from_json(const json& j) { return LeftCEApprox(rationals_from_json(j)); }

json to_json(const CostReport& report) {
  json charges = json::array();
  for (const auto& c : report.charges) charges.push_back({c.position, c.stage});
  return {{"value", to_json(report.value)}, {"exact", report.exact}, {"charges", charges}};
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Hold: return "hold";
    case Verdict::Violate: return "violate";
    case Verdict::Undecided: return "undecided";
  }
  return "undecided";
}

}  // namespace hypernorm::json_io
