#include "chorex/io.hpp"

namespace chorex {

Rational number_from_json(const Json& j, const char* what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw SchemaError(std::string(what) + " must be a rational string");
}

Json parse_doc(std::string_view text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw SchemaError("invalid JSON");
  return doc;
}

namespace {

Json number_to_json(const Rational& q) { return rational_str(q); }

}  // namespace

Json instance_to_json(const Instance& inst) {
  Json doc;
  doc["n"] = inst.agents();
  Json rows = Json::array();
  for (int i = 0; i < inst.agents(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < inst.agents(); ++j) {
      Json segs = Json::array();
      for (const DensitySegment& s : inst.density(i, j).segments()) {
        Json seg;
        seg["lo"] = number_to_json(s.interval.lo);
        seg["hi"] = number_to_json(s.interval.hi);
        seg["a"] = number_to_json(s.a);
        if (s.b != 0) seg["b"] = number_to_json(s.b);
        segs.push_back(std::move(seg));
      }
      row.push_back(std::move(segs));
    }
    rows.push_back(std::move(row));
  }
  doc["densities"] = std::move(rows);
  return doc;
}

Instance instance_from_json(const Json& doc, Instance::Normalization policy,
                            std::vector<Rational>* scales_out) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("densities"))
    throw SchemaError("instance document needs \"n\" and \"densities\"");
  if (!doc["n"].is_number_integer())
    throw SchemaError("\"n\" must be an integer");
  int n = doc["n"].get<int>();
  if (n < 1) throw SchemaError("\"n\" must be >= 1");
  const Json& rows = doc["densities"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw SchemaError("\"densities\" must be an n-by-n matrix");
  std::vector<std::vector<PiecewiseDensity>> dens;
  for (const Json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw SchemaError("\"densities\" must be an n-by-n matrix");
    std::vector<PiecewiseDensity> drow;
    for (const Json& segs : row) {
      if (!segs.is_array() || segs.empty())
        throw SchemaError("density must be a non-empty segment array");
      std::vector<DensitySegment> parsed;
      for (const Json& seg : segs) {
        if (!seg.is_object() || !seg.contains("lo") || !seg.contains("hi") ||
            !seg.contains("a"))
          throw SchemaError("segment needs \"lo\", \"hi\", \"a\"");
        DensitySegment s;
        s.interval.lo = number_from_json(seg["lo"], "\"lo\"");
        s.interval.hi = number_from_json(seg["hi"], "\"hi\"");
        s.a = number_from_json(seg["a"], "\"a\"");
        s.b = seg.contains("b") ? number_from_json(seg["b"], "\"b\"") : Rational(0);
        parsed.push_back(std::move(s));
      }
      drow.emplace_back(std::move(parsed));
    }
    dens.push_back(std::move(drow));
  }
  return Instance::make(std::move(dens), policy, scales_out);
}

Instance parse_instance(std::string_view text, Instance::Normalization policy,
                        std::vector<Rational>* scales_out) {
  return instance_from_json(parse_doc(text), policy, scales_out);
}

Json allocation_to_json(const Allocation& alloc) {
  Json doc;
  Json pieces = Json::array();
  for (const Piece& p : alloc.pieces) {
    Json ivs = Json::array();
    for (const Interval& iv : p.intervals()) {
      Json o;
      o["lo"] = number_to_json(iv.lo);
      o["hi"] = number_to_json(iv.hi);
      ivs.push_back(std::move(o));
    }
    pieces.push_back(std::move(ivs));
  }
  doc["pieces"] = std::move(pieces);
  return doc;
}

Allocation allocation_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("pieces") || !doc["pieces"].is_array())
    throw SchemaError("allocation document needs a \"pieces\" array");
  Allocation alloc;
  for (const Json& piece : doc["pieces"]) {
    if (!piece.is_array()) throw SchemaError("each piece must be an interval array");
    std::vector<Interval> ivs;
    for (const Json& iv : piece) {
      if (!iv.is_object() || !iv.contains("lo") || !iv.contains("hi"))
        throw SchemaError("interval needs \"lo\" and \"hi\"");
      Interval parsed{number_from_json(iv["lo"], "\"lo\""),
                      number_from_json(iv["hi"], "\"hi\"")};
      if (parsed.lo > parsed.hi)
        throw SchemaError("interval with lo > hi");
      ivs.push_back(parsed);
    }
    alloc.pieces.push_back(Piece::of(std::move(ivs)));
  }
  return alloc;
}

Allocation parse_allocation(std::string_view text) {
  return allocation_from_json(parse_doc(text));
}

Json violation_to_json(const Violation& v) {
  Json o;
  switch (v.kind) {
    case Violation::Kind::ProportionalExcess:
      o["kind"] = "proportional_excess";
      o["agent"] = v.i + 1;
      o["value"] = number_to_json(v.lhs);
      o["bound"] = number_to_json(v.rhs);
      break;
    case Violation::Kind::SwapEnvy:
      o["kind"] = "swap_envy";
      o["i"] = v.i + 1;
      o["j"] = v.j + 1;
      o["lhs"] = number_to_json(v.lhs);
      o["rhs"] = number_to_json(v.rhs);
      break;
    case Violation::Kind::SwapInstability:
      o["kind"] = "swap_instability";
      o["i"] = v.i + 1;
      o["j"] = v.j + 1;
      o["k"] = v.k + 1;
      o["lhs"] = number_to_json(v.lhs);
      o["rhs"] = number_to_json(v.rhs);
      break;
  }
  return o;
}

Json verdict_to_json(const FairnessVerdict& v) {
  Json o;
  o["notion"] = notion_name(v.notion);
  o["epsilon"] = number_to_json(v.epsilon);
  o["holds"] = v.holds;
  Json ws = Json::array();
  for (const Violation& w : v.witnesses) ws.push_back(violation_to_json(w));
  o["witnesses"] = std::move(ws);
  return o;
}

Json report_to_json(const FairnessReport& rep) {
  Json o;
  Json vals = Json::array();
  for (const Rational& v : rep.values) vals.push_back(number_to_json(v));
  o["values"] = std::move(vals);
  o["social_cost"] = number_to_json(rep.social_cost);
  o["cuts"] = rep.cuts;
  o["verdicts"] = Json::array({verdict_to_json(rep.proportional),
                               verdict_to_json(rep.swap_ef),
                               verdict_to_json(rep.swap_stable)});
  return o;
}

Json validity_to_json(const ValidityReport& rep) {
  Json o;
  o["valid"] = rep.valid();
  o["dimension_ok"] = rep.dimension_ok;
  o["in_range"] = rep.in_range;
  o["disjoint"] = rep.disjoint;
  o["complete"] = rep.complete;
  Json overlaps = Json::array();
  for (const OverlapWitness& w : rep.overlaps) {
    Json e;
    e["agents"] = Json::array({w.agent_a + 1, w.agent_b + 1});
    e["lo"] = rational_str(w.where.lo);
    e["hi"] = rational_str(w.where.hi);
    overlaps.push_back(std::move(e));
  }
  o["overlaps"] = std::move(overlaps);
  Json gaps = Json::array();
  for (const Interval& g : rep.gaps) {
    Json e;
    e["lo"] = rational_str(g.lo);
    e["hi"] = rational_str(g.hi);
    gaps.push_back(std::move(e));
  }
  o["gaps"] = std::move(gaps);
  return o;
}

}  // namespace chorex
