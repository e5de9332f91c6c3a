#include "psos/json_io.hpp"

#include "psos/poly_io.hpp"

namespace psos {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::string s(long v) { return std::to_string(v); }

Json point(const ValuationPoint& p) { return Json::array({s(p.index), s(p.valuation)}); }

Json ints(const std::vector<Integer>& v) {
  Json j = Json::array();
  for (const auto& z : v) j.push_back(to_string(z));
  return j;
}

Json factors_json(const std::vector<F2Factor>& fs) {
  Json j = Json::array();
  for (const auto& f : fs) j.push_back({{"factor", f.factor.to_string()}, {"multiplicity", s(f.multiplicity)}});
  return j;
}

Json trace_json(const std::vector<TraceStep>& t) {
  Json j = Json::array();
  for (const auto& step : t) j.push_back({{"step", step.step}, {"outcome", step.outcome}});
  return j;
}

const char* tag_name(RootTag t) {
  switch (t) {
    case RootTag::RootExists:
      return "RootExists";
    case RootTag::NoRoot:
      return "NoRoot";
    case RootTag::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

}  // namespace

Json to_json(const RatPoly& f) {
  Json j = Json::array();
  if (f.is_zero()) j.push_back("0");
  for (const auto& c : f.coeffs()) j.push_back(to_string(c));
  return j;
}

RatPoly poly_from_json(const Json& j) { return parse_poly(j.dump()); }

Json to_json(const PositivityCertificate& c) {
  return {{"degree", s(c.degree)},
          {"rank", s(c.rank)},
          {"signature", s(c.signature)},
          {"leading_sign", s(c.leading_sign)},
          {"constant_sign", s(c.constant_sign)},
          {"squarefree_part_used", c.squarefree_part_used},
          {"positive", c.verdict}};
}

Json to_json(const NewtonDiagram& d) {
  Json pts = Json::array();
  for (const auto& p : d.points) pts.push_back(point(p));
  Json verts = Json::array();
  for (const auto& p : d.vertices) verts.push_back(point(p));
  Json segs = Json::array();
  for (const auto& seg : d.segments) {
    segs.push_back({{"start", point(seg.start)},
                    {"end", point(seg.end)},
                    {"slope", to_string(seg.slope)},
                    {"lattice_length", s(seg.lattice_length)}});
  }
  return {{"points", pts}, {"vertices", verts}, {"segments", segs}};
}

Json to_json(const RootStatus& st) {
  Json j = {{"tag", tag_name(st.tag)},
            {"sieve_depth", s(st.sieve_depth)},
            {"reversed_sieve_depth", s(st.reversed_sieve_depth)},
            {"normalization", st.normalization}};
  if (st.witness) {
    j["witness"] = {{"gamma", to_string(st.witness->gamma)},
                    {"delta", s(st.witness->delta)},
                    {"modulus_exponent", s(st.witness->modulus_exponent)},
                    {"reversed", st.witness->reversed}};
  }
  return j;
}

Json to_json(const Evidence& e) {
  Json payload = std::visit(
      Overloaded{
          [](const evidence::None&) { return Json::object(); },
          [](const evidence::NotPositive&) { return Json::object(); },
          [](const evidence::NoOddMultiplicityFactors&) { return Json::object(); },
          [](const evidence::OddSquareSplit& x) {
            return Json{{"A", to_json(x.witness.a)}, {"c", to_string(x.witness.c)}, {"reversed", x.witness.reversed}};
          },
          [](const evidence::SimpleZ2Root& x) {
            return Json{{"root_status", to_json(x.status)}, {"discriminant_nonzero", x.discriminant_nonzero}};
          },
          [](const evidence::EisensteinIrreducibleEvenDegree& x) { return Json{{"diagram", to_json(x.diagram)}}; },
          [](const evidence::PureEvenDivisor& x) { return Json{{"diagram", to_json(x.diagram)}, {"e", s(x.e)}}; },
          [](const evidence::Mod2EvenDegrees& x) { return Json{{"factors", factors_json(x.factors)}}; },
          [](const evidence::HenselNoRootSplit& x) {
            return Json{{"factors", factors_json(x.factors)},
                        {"g", ints(x.lifted.g.coeffs())},
                        {"h", ints(x.lifted.h.coeffs())},
                        {"precision", s(x.lifted.g.precision())},
                        {"root_status", to_json(x.status)}};
          },
      },
      e);
  return {{"rule", rule_name(e)}, {"payload", payload}};
}

Json to_json(const Sos4Certificate& c) {
  Json rules = Json::array();
  for (const auto& o : c.outcomes) rules.push_back({{"rule", o.rule}, {"outcome", o.outcome}});
  return {{"verdict", to_string(c.verdict)},
          {"positivity", to_json(c.positivity)},
          {"odd_part", to_json(c.odd_part)},
          {"evidence", to_json(c.evidence)},
          {"rules", rules}};
}

Json to_json(const ReductionResult& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  return {{"kind", "reduction"},
          {"input", to_json(r.input)},
          {"input_hash", r.input_hash},
          {"method", to_string(r.method)},
          {"h", to_json(r.h)},
          {"h_text", format_poly(r.h)},
          {"parameters", params},
          {"residual", to_json(r.residual)},
          {"certified_residual", to_json(r.certified)},
          {"multiplier", to_json(r.multiplier)},
          {"shift", to_string(r.shift)},
          {"residual_certificate", to_json(r.residual_certificate)},
          {"trace", trace_json(r.trace)}};
}

Json to_json(const NonTermination& n) {
  Json its = Json::array();
  for (const auto& it : n.iterates) {
    its.push_back({{"l", s(it.l)},
                   {"branch_a",
                    {{"poly", to_json(it.branch_a)}, {"eisenstein", it.a_eisenstein}, {"certificate", to_json(it.a)}}},
                   {"branch_b",
                    {{"poly", to_json(it.branch_b)}, {"eisenstein", it.b_eisenstein}, {"certificate", to_json(it.b)}}}});
  }
  return {{"kind", "non-termination"}, {"input", to_json(n.input)}, {"cap", s(n.cap)}, {"iterates", its}};
}

Json to_json(const PickyObstruction& p) {
  return {{"kind", "picky-obstruction"},
          {"input", to_json(p.input)},
          {"l", s(p.l)},
          {"a", s(p.a)},
          {"q", to_json(p.q)},
          {"residual", to_json(p.residual)},
          {"gamma", to_string(p.gamma)},
          {"delta", s(p.delta)},
          {"discriminant_at_l", to_string(p.discriminant_at_l)},
          {"refined_root", to_string(p.refined_root)},
          {"refined_precision", s(p.refined_precision)},
          {"residual_certificate", to_json(p.residual_certificate)},
          {"trace", trace_json(p.trace)}};
}

Json to_json(const Inconclusive& i) {
  return {{"kind", "inconclusive"},
          {"input", to_json(i.input)},
          {"reason", i.reason},
          {"koprowski_obstruction", i.koprowski_obstruction},
          {"trace", trace_json(i.trace)}};
}

std::string status_of(const DispatchOutcome& o) {
  if (std::holds_alternative<NonTermination>(o)) return "non-termination";
  if (std::holds_alternative<Inconclusive>(o)) return "inconclusive";
  return "ok";
}

Json to_json(const DispatchOutcome& o) {
  return std::visit([](const auto& x) { return to_json(x); }, o);
}

}  // namespace psos
