#include "dvf/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "dvf/ctrexgame.hpp"
#include "dvf/inflator.hpp"
#include "dvf/model_io.hpp"
#include "dvf/newton.hpp"
#include "dvf/parse.hpp"
#include "dvf/report.hpp"
#include "dvf/suites.hpp"

namespace dvf {

namespace {

struct Options {
  std::string model_path;
  std::string precision;
  std::uint64_t seed = 1;
  bool json = false;
  std::vector<std::string> args;
  std::string base, arg, center, radius, a, b, gamma, u, adversary, bprime, cprime;
};

// Comma-separated lists may also be given as separate arguments.
std::vector<std::string> split_list(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    std::size_t start = 0;
    for (std::size_t i = 0; i <= a.size(); ++i)
      if (i == a.size() || a[i] == ',') {
        out.push_back(a.substr(start, i - start));
        start = i + 1;
      }
  }
  return out;
}

// Rank of the first bracketed exponent among `texts`, else 1.
std::size_t infer_rank(const std::vector<std::string>& texts) {
  for (const auto& t : texts)
    if (auto open = t.find('['); open != std::string::npos) {
      const auto close = t.find(']', open);
      return 1 + std::count(t.begin() + open, close == std::string::npos ? t.end() : t.begin() + close, ';');
    }
  return 1;
}

class Session {
 public:
  Session(const Options& o, bool needs_model, const std::vector<std::string>& texts) : o_(o) {
    if (!o.model_path.empty())
      model_ = load_model(o.model_path);
    else if (needs_model)
      model_ = DVModel::base();
    rank_ = model_ ? model_->rank() : infer_rank(texts);
    if (!o.precision.empty()) precision_ = parse_group_elem(o.precision, rank_);
    if (model_ && precision_) model_->set_working_precision(*precision_);
    if (model_) precision_ = model_->working_precision();
    start_generators_ = model_ ? model_->generator_log().size() : 0;
  }

  DVModel& model() { return *model_; }
  std::size_t rank() const { return rank_; }

  HahnSeries series(const std::string& text) const {
    HahnSeries s = parse_series(text, {rank_, precision_});
    if (model_) model_->validate(s);
    return s;
  }

  std::vector<HahnSeries> list(const std::vector<std::string>& args) const {
    std::vector<HahnSeries> out;
    for (const auto& t : split_list(args)) out.push_back(series(t));
    return out;
  }

  GroupElem group_elem(const std::string& text) const { return parse_group_elem(text, rank_); }

  Report report(std::string operation) const {
    Report r;
    r.operation = std::move(operation);
    if (!o_.model_path.empty()) r.inputs["model"] = o_.model_path;
    r.precision_used = precision_ ? to_string(*precision_) : "exact";
    return r;
  }

  // Appends the adjoined generators and writes the grown model beside the input.
  void finish(Report& r) {
    if (!model_) return;
    const auto log = model_->generator_log();
    if (log.size() == start_generators_) return;
    r.witness_ledger.assign(log.begin() + static_cast<std::ptrdiff_t>(start_generators_), log.end());
    if (!o_.model_path.empty()) {
      const std::string grown = grown_model_path(o_.model_path);
      save_model(*model_, grown);
      r.output["grown_model"] = grown;
    }
  }

 private:
  const Options& o_;
  std::optional<DVModel> model_;
  std::size_t rank_ = 1;
  std::optional<GroupElem> precision_;
  std::size_t start_generators_ = 0;
};

const std::string& single(const std::vector<std::string>& args, const char* what) {
  if (args.size() != 1) throw ParseError(std::string("expected exactly one ") + what, 0);
  return args.front();
}

Json series_list_json(const std::vector<std::string>& texts) {
  Json j = Json::array();
  for (const auto& t : texts) j.push_back(t);
  return j;
}

Report cmd_eval(const Options& o, const std::string& op) {
  const std::string& text = single(o.args, "series");
  Session s(o, op == "wres" || op == "classify", {text});
  const HahnSeries x = s.series(text);
  Report r = s.report(op);
  r.inputs["series"] = text;
  if (op == "eval") {
    r.output["series"] = x.to_string();
  } else if (op == "val") {
    r.output["val"] = to_string(x.val());
  } else if (op == "res") {
    r.output["res"] = x.res().to_string();
  } else if (op == "wres") {
    r.output["wres"] = dual_json(wres(s.model(), x));
  } else {
    const RingTag tag = classify_ring(s.model(), x);
    r.output["ring"] = to_string(tag);
    r.output["val"] = to_string(x.val());
    if (in_O(tag)) r.output["val_partial"] = to_string(val_partial(s.model(), x));
    if (!x.definitely_zero()) {
      const TameClass tc = classify_tame(s.model(), x);
      r.output["tame"] = to_string(tc.kind);
      if (tc.kind != TameClass::Kind::Wild) {
        r.output["probe"] = to_string(tc.probe);
        r.output["wres"] = dual_json(tc.value);
      }
    }
  }
  return r;
}

Report cmd_specialize(const Options& o) {
  const std::vector<std::string> texts = split_list(o.args);
  Session s(o, true, texts);
  const Line line(s.list(o.args));
  Report r = s.report("specialize");
  r.inputs["line"] = series_list_json(texts);
  r.output = specialization_json(specialize_line(s.model(), line, default_window(s.model())));
  return r;
}

Report cmd_mutate(const Options& o) {
  const std::vector<std::string> base = split_list({o.base}), arg = split_list({o.arg});
  std::vector<std::string> all = base;
  all.insert(all.end(), arg.begin(), arg.end());
  Session s(o, true, all);
  const Line lb(s.list(base)), la(s.list(arg));
  Report r = s.report("mutate");
  r.inputs["base"] = series_list_json(base);
  r.inputs["arg"] = series_list_json(arg);
  r.output = specialization_json(mutate_line(s.model(), lb, la, default_window(s.model())));
  Json map = Json::array();
  for (std::size_t i = 0; i < arg.size(); ++i)
    for (std::size_t j = 0; j < base.size(); ++j)
      map.push_back("arg[" + std::to_string(i) + "]*base[" + std::to_string(j) + "]");
  r.output["index_map"] = std::move(map);
  return r;
}

Report cmd_newton(const Options& o, bool rolle) {
  std::vector<std::string> texts = split_list(o.args);
  if (rolle) texts.push_back(o.center);
  Session s(o, false, texts);
  const ValuedPoly p(s.list(o.args));
  Report r = s.report(rolle ? "rolle" : "newton");
  r.inputs["coefficients"] = series_list_json(split_list(o.args));
  if (rolle) {
    r.inputs["center"] = o.center;
    r.inputs["radius"] = o.radius;
    const RolleVerdict v = rolle_check(p, s.series(o.center), s.group_elem(o.radius));
    r.output = Json{{"roots_in_ball", v.roots_in_ball},
                    {"derivative_roots_in_ball", v.derivative_roots_in_ball},
                    {"certified", v.certified}};
    return r;
  }
  const NewtonPolygon poly = polygon(p);
  Json vertices = Json::array(), segments = Json::array();
  for (const auto& v : poly.vertices) vertices.push_back(Json{{"index", v.index}, {"val", to_string(v.value)}});
  for (const auto& g : poly.segments)
    segments.push_back(Json{{"slope", to_string(g.slope)}, {"length", g.length}, {"root_val", to_string(-g.slope)}});
  r.output = Json{{"vertices", std::move(vertices)}, {"segments", std::move(segments)}, {"roots_in_O", count_roots_in_O(p)}};
  return r;
}

Report cmd_density(const Options& o) {
  Session s(o, true, {o.a, o.b});
  const HahnSeries a = s.series(o.a), b = s.series(o.b);
  const GroupElem gamma = s.group_elem(o.gamma);
  Report r = s.report("density");
  r.inputs = Json{{"a", o.a}, {"b", o.b}, {"gamma", o.gamma}};
  if (!o.model_path.empty()) r.inputs["model"] = o.model_path;
  r.output["x"] = solve_density(s.model(), a, b, gamma).to_string();
  s.finish(r);
  return r;
}

Report cmd_reduce3(const Options& o) {
  const std::vector<std::string> texts = split_list(o.args);
  if (texts.size() != 3) throw ParseError("reduce3 takes exactly three series", 0);
  Session s(o, true, texts);
  const std::vector<HahnSeries> e = s.list(o.args);
  Report r = s.report("reduce3");
  r.inputs["elements"] = series_list_json(texts);
  const TripleRelation t = reduce_triple(s.model(), e[0], e[1], e[2]);
  r.output = Json{{"index", t.index}, {"j", t.j}, {"k", t.k}, {"q1", t.q1.to_string()}, {"q2", t.q2.to_string()}};
  s.finish(r);
  return r;
}

Report cmd_game(const Options& o, bool check) {
  std::vector<std::string> texts{o.adversary};
  if (!o.u.empty()) texts.push_back(o.u);
  const std::size_t rank = 2;
  const SeriesParseOptions po{rank, std::nullopt};
  const GameModel gm = o.u.empty() ? GameModel() : GameModel(parse_series(o.u, po));
  const GameTranscript t = sigma_refute(gm, parse_series(o.adversary, po));
  Report r;
  r.operation = check ? "game-check" : "game";
  r.inputs["u"] = gm.u().to_string();
  r.inputs["adversary"] = o.adversary;
  r.precision_used = "exact";
  if (check) {
    r.inputs["bprime"] = o.bprime;
    r.inputs["cprime"] = o.cprime;
    r.output["violated"] = sigma_check_triple(gm, t, parse_series(o.bprime, po), parse_series(o.cprime, po));
    return r;
  }
  r.output["outcome"] = t.matched_u ? "matched-u" : "refuted";
  r.output["a"] = t.a.to_string();
  r.output["a_prime"] = t.a_prime.to_string();
  if (!t.matched_u) {
    r.output["val_diff"] = to_string(*t.val_diff);
    r.output["n"] = t.n;
    r.output["b"] = t.b.to_string();
    r.output["c"] = t.c.to_string();
  }
  return r;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string& name = single(o.args, "suite name");
  Json suites = Json::array();
  std::size_t failures = 0;
  bool found = false;
  for (const auto& info : math_suites()) {
    if (name != "all" && info.name != name) continue;
    found = true;
    const SuiteResult res = info.run(o.seed);
    failures += res.failures + (res.cases == 0);
    // Wall time stays off the report so that reports are byte-stable.
    err << res.name << ": " << res.cases << " cases, " << res.failures << " failures, " << res.seconds << " s\n";
    Json j{{"suite", res.name}, {"cases", res.cases}, {"failures", res.failures}};
    if (!res.passed()) j["first_counterexample"] = res.first_counterexample;
    suites.push_back(std::move(j));
  }
  if (!found) throw DomainError("unknown suite '" + name + "'");
  Report r;
  r.operation = "check";
  r.inputs = Json{{"suite", name}, {"seed", o.seed}};
  r.output = Json{{"suites", std::move(suites)}, {"failures", failures}};
  r.precision_used = "exact";
  out << dump(o.json ? r.to_json() : r.output);
  return failures == 0 ? kExitOk : kExitSuiteFailure;
}

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::Precision: return kExitPrecision;
    case ErrorCode::Parse: return kExitParse;
    default: return kExitDomain;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact arithmetic in valued fields with derivations", "dvf"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--model", o.model_path, "Model file");
  app.add_option("--precision", o.precision, "Working precision exponent");
  app.add_option("--seed", o.seed, "Seed for check suites");
  app.add_flag("--json", o.json, "Print the full report record");

  auto positional = [&](CLI::App* c, const char* what) { c->add_option("args", o.args, what); };
  std::string op;
  for (const char* name : {"eval", "val", "res", "wres", "classify"})
    positional(app.add_subcommand(name, std::string(name) + " of one series"), "Series");
  positional(app.add_subcommand("specialize", "Specialization of a line (comma-separated coordinates)"), "Coordinates");
  auto* mutate = app.add_subcommand("mutate", "Mutation of an inflator along a base line");
  mutate->add_option("--base", o.base, "Base line")->required();
  mutate->add_option("--arg", o.arg, "Argument line")->required();
  positional(app.add_subcommand("newton", "Newton polygon (coefficients, constant term first)"), "Coefficients");
  auto* rolle = app.add_subcommand("rolle", "Derivative root in a ball holding two roots");
  positional(rolle, "Coefficients");
  rolle->add_option("--center", o.center, "Ball center")->required();
  rolle->add_option("--radius", o.radius, "Ball radius exponent")->required();
  auto* density = app.add_subcommand("density", "x with val(x - a) > gamma and delta x = b");
  density->add_option("--a", o.a, "Approximation target")->required();
  density->add_option("--b", o.b, "Prescribed derivative")->required();
  density->add_option("--gamma", o.gamma, "Radius exponent")->required();
  positional(app.add_subcommand("reduce3", "Relation among three generators"), "Elements");
  auto* game = app.add_subcommand("game", "Refutation transcript for an adversary play");
  game->add_option("--u", o.u, "The unit u (default 1 + t)");
  game->add_option("--adversary", o.adversary, "The adversary's a'")->required();
  auto* game_check = game->add_subcommand("check", "Index of a failing identity for (b', c')");
  game_check->fallthrough();
  game_check->add_option("--bprime", o.bprime, "b'")->required();
  game_check->add_option("--cprime", o.cprime, "c'")->required();
  positional(app.add_subcommand("check", "Run an invariant suite, or all"), "Suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    out << dump(error_json("parse", e.what(), nullptr));
    return kExitParse;
  }

  try {
    op = app.get_subcommands().front()->get_name();
    if (op == "check") return cmd_check(o, out, err);
    Report r;
    if (op == "specialize")
      r = cmd_specialize(o);
    else if (op == "mutate")
      r = cmd_mutate(o);
    else if (op == "newton" || op == "rolle")
      r = cmd_newton(o, op == "rolle");
    else if (op == "density")
      r = cmd_density(o);
    else if (op == "reduce3")
      r = cmd_reduce3(o);
    else if (op == "game")
      r = cmd_game(o, game_check->parsed());
    else
      r = cmd_eval(o, op);
    out << dump(o.json ? r.to_json() : r.output);
    return kExitOk;
  } catch (const ParseError& e) {
    const std::size_t offset = e.offset();
    out << dump(error_json(to_string(e.code()), e.what(), &offset));
    return kExitParse;
  } catch (const Error& e) {
    out << dump(error_json(to_string(e.code()), e.what(), nullptr));
    return exit_code(e.code());
  } catch (const std::exception& e) {
    out << dump(error_json("internal", e.what(), nullptr));
    return kExitDomain;
  }
}

}  // namespace dvf
