// Copyright 2026 The bohrseq Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bohrseq/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "bohrseq/errors.hpp"

namespace bohrseq {

namespace {

std::string rat(const Rational& q) { return to_string(q); }

std::vector<Integer> integers_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInputError("expected an array of integers");
  std::vector<Integer> out;
  for (const Json& x : j) out.push_back(integer_from_json(x));
  return out;
}

Json integer_to_json(const Integer& z) {
  if (fits_int64(z)) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInputError("malformed JSON in " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInputError("cannot write " + path);
  out << text;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(static_cast<unsigned long>(j.get<std::uint64_t>()));
    return Integer(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    Rational q = parse_rational(j.get<std::string>());
    if (q.get_den() != 1) throw InvalidInputError("expected an integer, got " + j.dump());
    return q.get_num();
  }
  throw InvalidInputError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInputError("expected a rational (integer or \"p/q\" string), got " + j.dump());
}

TorusPoint point_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw InvalidInputError("point descriptor needs a string field 'kind'");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "rational") {
    if (!j.contains("num") || !j.contains("den")) {
      throw InvalidInputError("rational descriptor needs num and den");
    }
    Integer num = integer_from_json(j["num"]);
    Integer den = integer_from_json(j["den"]);
    if (den == 0) throw InvalidInputError("rational descriptor with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return TorusPoint::rational(q);
  }
  if (kind == "sqrt") {
    if (!j.contains("radicand")) throw InvalidInputError("sqrt descriptor needs radicand");
    Rational coeff = j.contains("coeff") ? rational_from_json(j["coeff"]) : Rational(1);
    Rational offset = j.contains("offset") ? rational_from_json(j["offset"]) : Rational(0);
    return TorusPoint::surd(integer_from_json(j["radicand"]), coeff, offset);
  }
  if (kind == "cfrac") {
    std::vector<Integer> head, period;
    if (j.contains("head")) head = integers_from_json(j["head"]);
    if (j.contains("period")) period = integers_from_json(j["period"]);
    return TorusPoint::cfrac(head, period);
  }
  if (kind == "combination") {
    TorusPoint p = TorusPoint::rational(j.contains("offset") ? rational_from_json(j["offset"])
                                                             : Rational(0));
    if (j.contains("terms")) {
      for (const Json& term : j["terms"]) {
        p = p + TorusPoint::surd(integer_from_json(term.at("radicand")),
                                 rational_from_json(term.at("coeff")));
      }
    }
    return p;
  }
  throw InvalidInputError("unknown point kind '" + kind + "'");
}

Json point_to_json(const TorusPoint& p) {
  if (p.is_rational()) {
    return Json{{"kind", "rational"},
                {"num", integer_to_json(p.offset().get_num())},
                {"den", integer_to_json(p.offset().get_den())}};
  }
  if (p.terms().size() == 1) {
    return Json{{"kind", "sqrt"},
                {"radicand", integer_to_json(p.terms()[0].radicand)},
                {"coeff", rat(p.terms()[0].coeff)},
                {"offset", rat(p.offset())}};
  }
  Json terms = Json::array();
  for (const SurdTerm& t : p.terms()) {
    terms.push_back({{"coeff", rat(t.coeff)}, {"radicand", integer_to_json(t.radicand)}});
  }
  return Json{{"kind", "combination"}, {"offset", rat(p.offset())}, {"terms", terms}};
}

std::vector<TorusPoint> points_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInputError("expected an array of point descriptors");
  std::vector<TorusPoint> out;
  for (const Json& x : j) out.push_back(point_from_json(x));
  return out;
}

GroupSpec group_from_json(const Json& j) {
  GroupSpec g;
  if (j.is_array()) {
    g.generators = points_from_json(j);
  } else if (j.is_object() && j.contains("generators")) {
    g.generators = points_from_json(j["generators"]);
  } else if (j.is_object() && j.contains("kind")) {
    g.generators.push_back(point_from_json(j));
  } else {
    throw InvalidInputError("group JSON needs a 'generators' array");
  }
  if (g.generators.empty()) throw InvalidInputError("group needs at least one generator");
  return g;
}

BetaSpec beta_from_json(const Json& j) {
  BetaSpec b;
  b.beta = point_from_json(j);
  if (j.contains("combination")) {
    b.combination = integers_from_json(j["combination"]);
    b.has_combination = true;
  }
  return b;
}

Json arcs_to_json(const ArcSet& arcs) {
  Json out = Json::array();
  for (const Arc& a : arcs.arcs()) out.push_back({{"lo", rat(a.lo)}, {"hi", rat(a.hi)}});
  return out;
}

Json cover_to_json(const GapCover& cover) {
  Json gens = Json::array();
  for (const Generator& g : cover.generators) gens.push_back({{"n", g.n}, {"K", g.K}});
  return Json{{"generators", gens},
              {"achieved_a", rat(cover.achieved_a)},
              {"achieved_b", rat(cover.achieved_b)},
              {"R", cover.R()},
              {"c1", cover.c1},
              {"containment_verified", cover.containment_verified},
              {"method", cover.method}};
}

Json stage_to_json(const StageArtifacts& s) {
  Json certs{{"ii", s.certificates.ii},
             {"ordering", s.certificates.ordering},
             {"term", s.certificates.term},
             {"eps_c1", s.certificates.eps_c1},
             {"find_n", s.certificates.find_n},
             {"anchor", s.certificates.anchor}};
  Json sums = Json::array();
  for (const Rational& x : s.S.sums_hi) sums.push_back(rat(x));
  return Json{{"t", s.t},
              {"generators_used", s.alphas.size()},
              {"eps_t", rat(s.plan.eps)},
              {"N_t", s.plan.N},
              {"M_t", s.plan.M},
              {"delta_t", rat(s.plan.delta)},
              {"ball_points", s.ball ? s.ball->size() : 0},
              {"V_arcs", s.plan.V.arc_count()},
              {"H_size", s.H.members.size()},
              {"c1", s.c1},
              {"c1_estimate", s.c1_estimate},
              {"c2", s.c2},
              {"term_t", rat(s.term.hi)},
              {"term_t_lo", rat(s.term.lo)},
              {"term_t_hi", rat(s.term.hi)},
              {"S_size", s.S.members.size()},
              {"anchor_m", s.S.m},
              {"bound_ii", rat(s.S.bound_ii)},
              {"sums_hi", sums},
              {"cover", cover_to_json(s.cover)},
              {"terminal", s.terminal},
              {"rebuilds", s.rebuilds},
              {"certificates", certs}};
}

Json report_to_json(const StreamResult& result, const GroupSpec& group) {
  Json gens = Json::array();
  for (const TorusPoint& p : group.generators) gens.push_back(point_to_json(p));
  Json stages = Json::array();
  for (const StageArtifacts& s : result.stages) stages.push_back(stage_to_json(s));
  Json out{{"group", {{"generators", gens}}},
           {"status", result.complete ? "complete" : "aborted"},
           {"stages", stages}};
  if (!result.complete) out["error"] = result.error;
  return out;
}

std::string sequence_csv(const std::vector<StageArtifacts>& stages) {
  std::ostringstream os;
  os << "stage,t_index,n\n";
  for (const StageArtifacts& s : stages) {
    for (std::size_t i = 0; i < s.S.members.size(); ++i) {
      os << s.t << ',' << i << ',' << s.S.members[i] << '\n';
    }
  }
  return os.str();
}

std::vector<StageData> load_stages(const std::string& seq_csv, const Json& report) {
  std::map<int, StageData> by_stage;
  if (!report.is_object() || !report.contains("stages")) {
    throw InvalidInputError("report JSON has no 'stages' array");
  }
  for (const Json& s : report["stages"]) {
    StageData d;
    d.t = s.at("t").get<int>();
    d.term.lo = rational_from_json(s.at("term_t_lo"));
    d.term.hi = rational_from_json(s.at("term_t_hi"));
    by_stage[d.t] = d;
  }
  std::ifstream in(seq_csv);
  if (!in) throw InvalidInputError("cannot open " + seq_csv);
  std::string line;
  if (!std::getline(in, line) || line.rfind("stage,t_index,n", 0) != 0) {
    throw InvalidInputError(seq_csv + ": expected header stage,t_index,n");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string a, b, c;
    if (!std::getline(ls, a, ',') || !std::getline(ls, b, ',') || !std::getline(ls, c)) {
      throw InvalidInputError(seq_csv + ": malformed row '" + line + "'");
    }
    try {
      int t = std::stoi(a);
      auto it = by_stage.find(t);
      if (it == by_stage.end()) throw InvalidInputError("stage " + a + " missing from report");
      it->second.S.push_back(std::stoll(c));
    } catch (const std::logic_error&) {
      throw InvalidInputError(seq_csv + ": malformed row '" + line + "'");
    }
  }
  std::vector<StageData> out;
  for (auto& [t, d] : by_stage) out.push_back(std::move(d));
  return out;
}

std::string member_csv(const VerificationReport& rep) {
  std::ostringstream os;
  os << "stage,n,norm_hi,partial_sum_hi\n";
  for (const MemberRow& r : rep.member_rows) {
    os << r.stage << ',' << r.n << ',' << rat(r.norm_hi) << ',' << rat(r.partial_sum_hi) << '\n';
  }
  return os.str();
}

std::string nonmember_csv(const VerificationReport& rep) {
  std::ostringstream os;
  os << "stage,witness_n,witness_norm_lo\n";
  for (const NonmemberRow& r : rep.nonmember_rows) {
    os << r.stage << ',' << (r.witness_n ? std::to_string(*r.witness_n) : std::string()) << ','
       << rat(r.witness_norm_lo) << '\n';
  }
  return os.str();
}

Json verification_to_json(const VerificationReport& rep) {
  Json out{{"beta", point_to_json(rep.beta)}, {"mode", rep.mode}, {"verdict", rep.verdict}};
  if (rep.mode == "member") {
    Json stages = Json::array();
    for (const MemberStageRow& s : rep.stage_rows) {
      stages.push_back({{"t", s.stage},
                        {"contribution_hi", rat(s.contribution_hi)},
                        {"partial_sum_hi", rat(s.partial_sum_hi)},
                        {"term_t_lo", rat(s.term.lo)},
                        {"tail", s.tail},
                        {"within_term", s.within_term}});
    }
    out["r"] = rat(rep.r);
    out["t0"] = rep.t0;
    out["tail_m"] = rep.tail_m;
    out["tail_stages"] = rep.tail_stages;
    out["tail_within_terms"] = rep.tail_within_terms;
    out["tail_term_sum_hi"] = rat(rep.tail_term_sum_hi);
    out["combination_factor_hi"] = rat(rep.combination_factor_hi);
    out["stages"] = stages;
  } else {
    out["threshold"] = rat(rep.threshold);
    out["witness_stages"] = rep.witness_stages;
  }
  return out;
}

}  // namespace bohrseq
