#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <sstream>

#include "psos/hankel.hpp"
#include "psos/json_io.hpp"
#include "psos/padic.hpp"
#include "psos/poly_io.hpp"
#include "psos/resultant.hpp"

namespace psos {

namespace {

struct Args {
  std::string poly;
  std::string poly_file;
  std::string method = "auto";
  int cap = kDefaultAlg9Cap;
  int budget = -1;
  std::string witness;
  long k = 0;
  long n = 65;
  long a = 1;
  std::string g;
  unsigned precision = kDefaultPadicPrecision;
  std::string value;
  std::string out_file;
};

struct Reply {
  std::string status = "ok";
  Json result;
};

RatPoly input_poly(const Args& args) {
  if (!args.poly.empty() && !args.poly_file.empty()) throw PreconditionError("give --poly or --poly-file, not both");
  if (!args.poly.empty()) return parse_poly(args.poly);
  if (!args.poly_file.empty()) {
    std::ifstream in(args.poly_file);
    if (!in) throw PreconditionError("cannot read " + args.poly_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_poly(buf.str());
  }
  throw PreconditionError("missing --poly or --poly-file");
}

std::optional<SquareSplitWitness> input_witness(const Args& args) {
  if (args.witness.empty()) return std::nullopt;
  const auto colon = args.witness.rfind(':');
  if (colon == std::string::npos) throw ParseError("witness must be 'A:c'", 0);
  return SquareSplitWitness{parse_poly(args.witness.substr(0, colon)), parse_rational(args.witness.substr(colon + 1)),
                            false};
}

Rational input_value(const Args& args) {
  if (args.value.empty()) throw PreconditionError("missing --value");
  return parse_rational(args.value);
}

Reply cmd_positivity(const Args& args) {
  return {"ok", {{"positivity", to_json(is_positive_on_reals(input_poly(args)))}}};
}

Reply cmd_hankel(const Args& args) {
  const RatPoly f = input_poly(args);
  const SymMatrix m = hankel_matrix(f);
  Json rows = Json::array();
  for (const auto& row : m.entries()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    rows.push_back(r);
  }
  Json sums = Json::array();
  for (const auto& x : power_sums(f)) sums.push_back(to_string(x));
  const Inertia in = rank_signature(m);
  return {"ok",
          {{"power_sums", sums},
           {"matrix", rows},
           {"rank", std::to_string(in.rank)},
           {"signature", std::to_string(in.signature)},
           {"distinct_roots", std::to_string(in.rank)},
           {"real_roots", std::to_string(in.signature)}}};
}

Reply cmd_sturm(const Args& args) {
  return {"ok", {{"real_roots", std::to_string(sturm_real_root_count(input_poly(args)))}}};
}

Reply cmd_discriminant(const Args& args) {
  const RatPoly f = input_poly(args);
  const Rational d = discriminant(f);
  return {"ok", {{"discriminant", to_string(d)}, {"squarefree", d != 0}}};
}

Reply cmd_newton_polygon(const Args& args) {
  const RatPoly f = input_poly(args);
  const NewtonDiagram d = newton_diagram(f);
  const bool pure = is_pure(d, f.constant_term() != 0);
  Json j = {{"diagram", to_json(d)}, {"pure", pure}, {"eisenstein_irreducible", eisenstein_irreducible(f)}};
  if (pure) j["factor_degree_divisor"] = std::to_string(factor_degree_divisor(d));
  return {"ok", j};
}

Reply cmd_padic_square(const Args& args) {
  const Rational q = input_value(args);
  Json j = {{"value", to_string(q)}, {"is_square", is_square_in_q2(q)}};
  if (q != 0) {
    const TwoAdicSplit sp = ord2(q);
    j["valuation"] = std::to_string(sp.valuation);
    j["unit"] = to_string(sp.unit);
  }
  return {"ok", j};
}

Reply cmd_padic_sqrt(const Args& args) {
  const Rational q = input_value(args);
  const PadicApprox r = padic_sqrt(q, args.precision);
  return {"ok",
          {{"value", to_string(q)},
           {"prime", std::to_string(r.prime)},
           {"valuation", std::to_string(r.valuation)},
           {"unit_residue", to_string(r.unit_residue)},
           {"precision", std::to_string(r.precision)}}};
}

Reply cmd_certify(const Args& args) {
  CertifyOptions opts;
  if (args.budget >= 0) opts.root_budget = args.budget;
  const Sos4Certificate c = certify_sos4(input_poly(args), input_witness(args), opts);
  return {c.verdict == Verdict::INCONCLUSIVE ? "inconclusive" : "ok", {{"certificate", to_json(c)}}};
}

Reply cmd_reduce(const Args& args) {
  DispatchOptions opts;
  opts.alg9_cap = args.cap;
  if (args.budget >= 0) opts.nos.max_l = args.budget;
  if (args.method != "auto") {
    opts.method = parse_method(args.method);
    if (!opts.method) throw PreconditionError("unknown method '" + args.method + "'");
  }
  const DispatchOutcome o = reduce_dispatch(input_poly(args), opts);
  return {status_of(o), to_json(o)};
}

Reply cmd_alg9_demo(const Args& args) {
  const FamilyMember m = make_fkN(args.k, args.n);
  auto out = algorithm9(m.f, args.cap, m.witness);
  DispatchOutcome o = std::visit([](auto&& v) -> DispatchOutcome { return v; }, std::move(out));
  return {status_of(o), to_json(o)};
}

Reply cmd_family(const Args& args) {
  const FamilyMember m = args.g.empty() ? make_fkN(args.k, args.n) : make_dos(parse_poly(args.g), args.a);
  Json j = {{"f", to_json(m.f)},
            {"f_text", format_poly(m.f)},
            {"witness", {{"A", to_json(m.witness.a)}, {"c", to_string(m.witness.c)}}}};
  if (args.g.empty()) {
    j["family"] = "fkN";
    j["k"] = std::to_string(args.k);
    j["N"] = std::to_string(args.n);
  } else {
    j["family"] = "dos";
    j["a"] = std::to_string(args.a);
  }
  return {"ok", j};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact 2-adic sum-of-squares certificates and reductions", "padic-sos"};
  app.require_subcommand(1);
  Args args;

  using Handler = std::function<Reply(const Args&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h, bool poly) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (poly) {
      sub->add_option("--poly", args.poly, "polynomial, JSON array or human form");
      sub->add_option("--poly-file", args.poly_file, "file holding the polynomial");
    }
    sub->add_option("--out", args.out_file, "write JSON here instead of standard output");
    commands.emplace_back(sub, std::move(h));
    return sub;
  };

  add("positivity", "positivity on R via the Hankel signature", cmd_positivity, true);
  add("hankel", "Hankel matrix of power sums, rank and signature", cmd_hankel, true);
  add("sturm", "real root count via a Sturm chain", cmd_sturm, true);
  add("discriminant", "Res(f, f')", cmd_discriminant, true);
  add("newton-polygon", "2-adic Newton diagram", cmd_newton_polygon, true);
  add("padic-square", "is --value a square in Q_2", cmd_padic_square, false)->add_option("--value", args.value);
  {
    CLI::App* sub = add("padic-sqrt", "2-adic square root of --value", cmd_padic_sqrt, false);
    sub->add_option("--value", args.value);
    sub->add_option("--precision", args.precision);
  }
  {
    CLI::App* sub = add("sos4-certify", "decide sum of four squares", cmd_certify, true);
    sub->add_option("--witness", args.witness, "split witness A:c with f = A^2 + c");
    sub->add_option("--budget", args.budget, "2-adic root sieve depth");
  }
  {
    CLI::App* sub = add("reduce", "find h with f - h^2 a certified sum of four squares", cmd_reduce, true);
    sub->add_option("--method", args.method)
        ->check(CLI::IsMember({"auto", "alg6", "algn", "alg9", "nos", "gr4", "picky"}));
    sub->add_option("--cap", args.cap, "iteration cap for alg9");
    sub->add_option("--budget", args.budget, "largest l tried by nos");
  }
  {
    CLI::App* sub = add("alg9-demo", "run alg9 on f_{k,N}", cmd_alg9_demo, false);
    sub->add_option("--k", args.k);
    sub->add_option("--N", args.n);
    sub->add_option("--cap", args.cap);
  }
  {
    CLI::App* sub = add("family", "f_{k,N} (--k, --N) or g^2 + 8a - 1 (--g, --a)", cmd_family, false);
    sub->add_option("--k", args.k);
    sub->add_option("--N", args.n);
    sub->add_option("--g", args.g);
    sub->add_option("--a", args.a);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  std::string command;
  Handler handler;
  for (const auto& [sub, h] : commands) {
    if (sub->parsed()) {
      command = sub->get_name();
      handler = h;
    }
  }

  Json doc = {{"schema", kSchema}, {"command", command}};
  int code = 0;
  try {
    Reply r = handler(args);
    doc["status"] = r.status;
    doc["result"] = std::move(r.result);
    code = r.status == "ok" ? 0 : 2;
  } catch (const std::exception& e) {
    doc["status"] = "error";
    doc["message"] = e.what();
    err << "error: " << e.what() << "\n";
    code = 1;
  }

  const std::string text = doc.dump(2) + "\n";
  if (!args.out_file.empty()) {
    std::ofstream file(args.out_file);
    if (!file) {
      err << "error: cannot write " << args.out_file << "\n";
      return 1;
    }
    file << text;
  } else {
    out << text;
  }
  return code;
}

}  // namespace psos
