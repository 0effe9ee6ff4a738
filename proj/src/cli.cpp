#include "dgsep/cli.hpp"

#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "dgsep/demos.hpp"
#include "dgsep/examples.hpp"

namespace dgsep {

namespace {

struct Options {
  std::string file;
  std::vector<std::string> demo;
  std::vector<int> window;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string base = "target";
  int count = 20;
  int maxDim = 4;
};

/// Whatever the input provides; commands pick the object they need.
struct Input {
  std::string name;
  std::optional<DgAlgebra> algebra;
  std::optional<DgExtension> extension;
  std::optional<SesDocument> ses;
  std::optional<DgModule> module;
};

bool hasConstruct(const Json& doc, std::initializer_list<const char*> kinds) {
  if (!doc.contains("construct")) return false;
  auto k = doc.at("construct").get<std::string>();
  return std::any_of(kinds.begin(), kinds.end(), [&](const char* s) { return k == s; });
}

Input loadInput(const Options& opt) {
  Input in;
  if (!opt.demo.empty()) {
    std::string name;
    for (const auto& t : opt.demo) name += (name.empty() ? "" : " ") + t;
    auto d = findDemo(name);
    if (!d) throw FormatError("unknown demo '" + name + "'; run 'demo' for the catalog");
    in.name = d->name;
    in.algebra = d->algebra;
    in.extension = d->extension;
    in.ses = d->ses;
    return in;
  }
  if (opt.file.empty()) throw FormatError("no input: give a JSON file or --demo NAME");
  in.name = opt.file;
  Json doc = loadJson(opt.file);
  if (!doc.is_object()) throw FormatError("top level must be an object");
  if (doc.contains("demo")) {
    auto d = findDemo(doc.at("demo").get<std::string>());
    if (!d) throw FormatError("unknown demo");
    in.algebra = d->algebra;
    in.extension = d->extension;
    in.ses = d->ses;
  } else if (doc.contains("L")) {
    in.ses = parseSES(doc);
    in.extension = in.ses->extension;
    in.algebra = in.ses->ses.M.algebra();
  } else if (doc.contains("source") || hasConstruct(doc, {"identity", "ground_field_extension", "laurent_extension",
                                                          "cycle_extension"})) {
    in.extension = parseExtension(doc);
    in.algebra = in.extension->target();
  } else if (hasConstruct(doc, {"tensor"})) {
    auto ext = parseExtension(doc.at("extension"));
    in.algebra = ext.target();
    in.extension = ext;
    in.module = parseModule(doc, *in.algebra);
  } else if (doc.contains("action") || doc.contains("module")) {
    in.algebra = parseDgAlgebra(doc.at("algebra"));
    in.module = parseModule(doc.contains("module") ? doc.at("module") : doc, *in.algebra);
  } else {
    in.algebra = parseDgAlgebra(doc);
  }
  return in;
}

template <typename T>
const T& need(const std::optional<T>& v, const char* what) {
  if (!v) throw FormatError(std::string("this command needs ") + what);
  return *v;
}

std::optional<DegreeWindow> windowOf(const Options& opt) {
  if (opt.window.empty()) return std::nullopt;
  if (opt.window[0] > opt.window[1]) throw FormatError("--window needs LO <= HI");
  return DegreeWindow{opt.window[0], opt.window[1]};
}

std::string windowText(const DegreeWindow& w) {
  return "[" + std::to_string(w.lo) + ", " + std::to_string(w.hi) + "]";
}

std::string basisText(const GradedBasis& b) {
  std::ostringstream os;
  for (int i = 0; i < b.size(); ++i) os << (i ? ", " : "") << b.label(i) << " (" << b.degree(i) << ")";
  if (b.period()) os << "; period unit z of degree " << *b.period();
  return os.str();
}

std::string describe(const DgExtension& ext) {
  std::ostringstream os;
  os << "source: " << basisText(ext.source().basis()) << "\n"
     << "target: " << basisText(ext.target().basis()) << "\n"
     << "left basis:";
  for (const auto& m : ext.leftBasis()) os << " " << m.str(ext.target().basis());
  os << "\n";
  return os.str();
}

class Reporter {
 public:
  Reporter(const Options& opt, std::ostream& out) : json_(opt.format == "json"), out_(out) {}
  bool json() const { return json_; }
  Json& doc() { return doc_; }
  std::ostream& text() { return json_ ? sink_ : out_; }
  void verdict(const std::string& v) {
    doc_["verdict"] = v;
    text() << "verdict: " << v << "\n";
  }
  void report(const ValidationReport& r, const std::string& key) {
    doc_[key] = toJson(r);
    text() << r.str();
  }
  void finish() {
    if (json_) out_ << pretty(doc_) << "\n";
  }

 private:
  bool json_;
  std::ostream& out_;
  std::ostringstream sink_;
  Json doc_ = Json::object();
};

int cmdValidate(const Options& opt, Reporter& rep) {
  Input in = loadInput(opt);
  ValidationReport all;
  if (in.ses) {
    if (in.ses->extension) all.merge(validateExtension(*in.ses->extension), "extension: ");
    all.merge(validateSES(in.ses->ses), "sequence: ");
  } else if (in.module) {
    all.merge(validateModule(*in.module), "module: ");
  } else if (in.extension) {
    all.merge(validateExtension(*in.extension), "extension: ");
  } else {
    const auto& a = need(in.algebra, "an algebra");
    all.merge(validateAlgebra(a.algebra()), "algebra: ");
    all.merge(validateDifferential(a), "differential: ");
  }
  rep.text() << "input: " << in.name << "\n";
  rep.report(all, "report");
  rep.doc()["valid"] = all.ok();
  rep.text() << (all.ok() ? "valid\n" : "invalid\n");
  return all.ok() ? kDecisionCompleted : kValidationFailure;
}

/// Algebra inputs are validated before any decision runs on them.
void requireValid(const ValidationReport& r, Reporter& rep) {
  if (r.ok()) return;
  rep.report(r, "report");
  throw ConsistencyError("input fails validation");
}

int cmdHomology(const Options& opt, Reporter& rep) {
  const auto a = need(loadInput(opt).algebra, "an algebra");
  requireValid(validateDifferential(a), rep);
  auto h = homology(a, windowOf(opt));
  rep.doc()["homology"] = toJson(h);
  auto& os = rep.text();
  os << "window: " << windowText(h.window) << "\n";
  for (int n = h.window.lo; n <= h.window.hi; ++n)
    os << "H^" << n << " = " << h.at(n) << "  (cycles " << h.cycleDimensions.at(n - h.window.lo) << ")\n";
  os << (h.acyclicOnWindow() ? "acyclic-on-window\n" : "not acyclic on window\n");
  return kDecisionCompleted;
}

int cmdCycles(const Options& opt, Reporter& rep) {
  const auto a = need(loadInput(opt).algebra, "an algebra");
  requireValid(validateDifferential(a), rep);
  auto c = cycles(a, windowOf(opt));
  Json inc = Json::array();
  for (const auto& v : c.inclusion) inc.push_back(toJson(v, a.field()));
  rep.doc()["cycles"] = toJson(c.algebra);
  rep.doc()["inclusion"] = inc;
  rep.doc()["window"] = toJson(c.window);
  auto& os = rep.text();
  os << "window: " << windowText(c.window) << "\n";
  os << "cycle basis: " << basisText(c.algebra.basis()) << "\n";
  for (int i = 0; i < c.algebra.size(); ++i)
    os << "  " << c.algebra.basis().label(i) << " = " << c.inclusion[i].str(a.basis()) << "\n";
  os << "graded-commutative: " << (isGradedCommutative(c.algebra) ? "yes" : "no") << "\n";
  return kDecisionCompleted;
}

void classificationOut(const GrDivisionClassification& c, Reporter& rep) {
  rep.doc()["classification"] = {{"verdict", to_string(c.verdict)},
                                 {"generator_degree", c.generatorDegree},
                                 {"base_dimension", c.baseDimension},
                                 {"base_field", c.baseField},
                                 {"reason", c.reason},
                                 {"window", toJson(c.window)}};
  auto& os = rep.text();
  os << "classification: " << to_string(c.verdict) << "\n";
  if (c.isGrDivision()) {
    os << "degree-0 field: " << c.baseField << "\n";
    os << "generator degree: " << c.generatorDegree << "\n";
  } else {
    os << "reason: " << c.reason << "\n";
  }
  os << "window: " << windowText(c.window) << "\n";
}

int cmdGrDiv(const Options& opt, Reporter& rep) {
  const auto a = need(loadInput(opt).algebra, "an algebra");
  requireValid(validateAlgebra(a.algebra()), rep);
  classificationOut(classifyGrDivision(a.algebra(), windowOf(opt)), rep);
  return kDecisionCompleted;
}

int cmdDgDiv(const Options& opt, Reporter& rep) {
  const auto a = need(loadInput(opt).algebra, "an algebra");
  requireValid(validateDifferential(a), rep);
  auto r = isDgDivision(a);
  rep.doc()["dg_division"] = r.division;
  rep.text() << "dg-division: " << (r.division ? "yes" : "no") << "\n";
  rep.text() << "cycle basis: " << basisText(r.cycles.algebra.basis()) << "\n";
  classificationOut(r.classification, rep);
  return kDecisionCompleted;
}

int cmdTensor(const Options& opt, Reporter& rep) {
  const auto ext = need(loadInput(opt).extension, "an extension");
  requireValid(validateExtension(ext), rep);
  TensorBimodule t(ext);
  DgModule m = tensorLeftModule(t);
  DegreeWindow w = windowOf(opt).value_or(m.window());
  Json dims = Json::object();
  auto& os = rep.text();
  os << describe(ext);
  os << "tensor basis: " << basisText(t.basis()) << "\n";
  for (int n = w.lo; n <= w.hi; ++n) {
    dims[std::to_string(n)] = t.basis().dimension(n);
    os << "dim (B (x)_A B)_" << n << " = " << t.basis().dimension(n) << "\n";
  }
  rep.doc()["window"] = toJson(w);
  rep.doc()["dimensions"] = dims;
  rep.doc()["module"] = toJson(m);
  rep.report(validateModule(m), "left_module_report");
  return kDecisionCompleted;
}

Json casimirJson(const DgExtension& ext, const CasimirResult& r) {
  TensorBimodule t(ext);
  Json out = Json::object();
  if (r.certificate) {
    out["omega"] = toJson(r.certificate->omega, ext.target().field());
    out["omega_text"] = r.certificate->omega.str(t.basis());
    out["tensor_basis"] = Json::array();
    for (const auto& l : t.basis().labels()) out["tensor_basis"].push_back(l);
    Json gens = Json::array();
    for (const auto& g : r.certificate->generators) gens.push_back(g.str(ext.target().basis()));
    out["generators"] = gens;
    out["witnesses"] = toJson(r.certificate->witnesses);
  } else {
    const auto& ns = *r.refutation;
    out["tensor_dimension"] = ns.tensorDimension;
    out["constraint_rows"] = ns.constraintRows;
    out["constraint_rank"] = ns.constraintRank;
    out["augmented_rank"] = ns.augmentedRank;
    out["central_cycle_dimension"] = ns.centralCycleDimension;
    out["transcript"] = ns.transcript;
  }
  return out;
}

void casimirText(const DgExtension& ext, const CasimirResult& r, std::ostream& os) {
  if (r.certificate) {
    os << "omega = " << r.certificate->omega.str(TensorBimodule(ext).basis()) << "\n";
    os << r.certificate->witnesses.str();
  } else {
    os << r.refutation->transcript;
    if (r.refutation->transcript.empty() || r.refutation->transcript.back() != '\n') os << "\n";
  }
}

int cmdSeparable(const Options& opt, Reporter& rep) {
  const auto ext = need(loadInput(opt).extension, "an extension");
  requireValid(validateExtension(ext), rep);
  rep.text() << describe(ext);
  auto r = findCasimir(ext);
  rep.doc()["certificate"] = casimirJson(ext, r);
  rep.doc()["window"] = toJson(ext.freenessWindow());
  rep.verdict(r.separable() ? "SEPARABLE" : "NOT_SEPARABLE");
  casimirText(ext, r, rep.text());
  return kDecisionCompleted;
}

Json theoremJson(const TheoremCheck& c) {
  return {{"branch", c.branch},
          {"predicted", to_string(c.predicted)},
          {"computed", c.computed.separable() ? "SEPARABLE" : "NOT_SEPARABLE"},
          {"verdict", c.verdict()},
          {"mismatch", c.mismatch()},
          {"notes", c.notes}};
}

int cmdMainTheorem(const Options& opt, Reporter& rep) {
  auto& os = rep.text();
  if (opt.file.empty() && opt.demo.empty()) {
    Json rows = Json::array();
    int mismatches = 0;
    auto catalog = mainTheoremCatalog();
    for (const auto& name : {"laurent-into-acyclic F2 w=0", "acyclic-laurent F2 2", "laurent F2 2"})
      catalog.push_back({name, *findDemo(name)->extension});
    for (const auto& e : catalog) {
      auto c = checkMainTheorem(e.extension);
      mismatches += c.mismatch();
      Json row = theoremJson(c);
      row["name"] = e.name;
      rows.push_back(row);
      os << e.name << ": " << c.branch << "; predicted " << to_string(c.predicted) << ", computed "
         << (c.computed.separable() ? "SEPARABLE" : "NOT_SEPARABLE") << (c.mismatch() ? "  MISMATCH" : "") << "\n";
    }
    rep.doc()["instances"] = rows;
    rep.doc()["mismatches"] = mismatches;
    os << "mismatches: " << mismatches << "\n";
    return kDecisionCompleted;
  }
  const auto ext = need(loadInput(opt).extension, "an extension");
  requireValid(validateExtension(ext), rep);
  auto c = checkMainTheorem(ext);
  rep.doc()["check"] = theoremJson(c);
  rep.doc()["certificate"] = casimirJson(ext, c.computed);
  os << "branch: " << c.branch << "\n";
  for (const auto& n : c.notes) os << "note: " << n << "\n";
  os << "predicted: " << to_string(c.predicted) << "\n";
  os << "computed: " << (c.computed.separable() ? "SEPARABLE" : "NOT_SEPARABLE") << "\n";
  if (c.mismatch()) os << "MISMATCH\n";
  rep.verdict(c.verdict());
  return kDecisionCompleted;
}

void splittingOut(const std::string& key, const ShortExactSequence& s, const SplittingResult& r, Reporter& rep) {
  Json j = {{"split", r.split()},
            {"unknowns", r.unknowns},
            {"constraint_rank", r.constraintRank},
            {"augmented_rank", r.augmentedRank},
            {"transcript", r.transcript}};
  if (r.sigma) {
    const auto& field = s.M.algebra().field();
    j["sigma"] = toJson(*r.sigma, field);
    j["blocks"] = blocksToJson(*r.sigma, s.N.basis(), s.M.basis(), s.N.window());
    j["witnesses"] = toJson(r.witnesses);
  }
  rep.doc()[key] = j;
  auto& os = rep.text();
  os << key << ": " << (r.split() ? "SPLIT" : "NOT_SPLIT") << " (" << r.unknowns << " unknowns, rank "
     << r.constraintRank << ", augmented rank " << r.augmentedRank << ")\n";
  if (r.sigma) {
    for (int i = 0; i < s.N.size(); ++i)
      os << "  sigma(" << s.N.basis().label(i) << ") = " << r.sigma->onLabels[i].str(s.M.basis()) << "\n";
  }
}

int cmdSesSplit(const Options& opt, Reporter& rep) {
  Input in = loadInput(opt);
  const auto& doc = need(in.ses, "a short exact sequence");
  requireValid(validateSES(doc.ses), rep);
  if (opt.base == "source") {
    const auto& ext = need(doc.extension, "an extension for --base source");
    auto r = findDgSplitting(doc.ses, ext);
    splittingOut("source", restrictSES(ext, doc.ses), r, rep);
    rep.verdict(r.split() ? "SPLIT" : "NOT_SPLIT");
  } else {
    auto r = findDgSplitting(doc.ses);
    splittingOut("target", doc.ses, r, rep);
    rep.verdict(r.split() ? "SPLIT" : "NOT_SPLIT");
  }
  return kDecisionCompleted;
}

int cmdLiftSplit(const Options& opt, Reporter& rep) {
  Input in = loadInput(opt);
  const auto& doc = need(in.ses, "a short exact sequence");
  const auto& ext = need(doc.extension, "an extension");
  requireValid(validateExtension(ext), rep);
  requireValid(validateSES(doc.ses), rep);
  auto& os = rep.text();
  auto source = findDgSplitting(doc.ses, ext);
  splittingOut("source", restrictSES(ext, doc.ses), source, rep);
  auto casimir = findCasimir(ext);
  rep.doc()["separable"] = casimir.separable();
  os << "extension: " << (casimir.separable() ? "SEPARABLE" : "NOT_SEPARABLE") << "\n";
  if (source.split() && casimir.separable()) {
    auto lifted = liftSplitting(ext, *casimir.certificate, doc.ses, *source.sigma);
    const auto& field = ext.target().field();
    rep.doc()["tau"] = toJson(lifted.tau, field);
    rep.doc()["blocks"] = blocksToJson(lifted.tau, doc.ses.N.basis(), doc.ses.M.basis(), doc.ses.N.window());
    for (int i = 0; i < doc.ses.N.size(); ++i)
      os << "  tau(" << doc.ses.N.basis().label(i) << ") = " << lifted.tau.onLabels[i].str(doc.ses.M.basis()) << "\n";
    rep.report(lifted.witnesses, "witnesses");
    rep.verdict(lifted.witnesses.ok() ? "SPLIT" : "NOT_SPLIT");
    return lifted.witnesses.ok() ? kDecisionCompleted : kValidationFailure;
  }
  auto target = findDgSplitting(doc.ses);
  splittingOut("target", doc.ses, target, rep);
  rep.verdict(target.split() ? "SPLIT" : "NOT_SPLIT");
  return kDecisionCompleted;
}

int cmdEquivalence(const Options& opt, Reporter& rep) {
  Input in = loadInput(opt);
  const auto& a = need(in.algebra, "an algebra");
  requireValid(validateDifferential(a), rep);
  auto& os = rep.text();
  auto cyc = cycles(a);
  DgAlgebra base(cyc.algebra);
  std::vector<DgModule> inputs;
  if (in.module) {
    inputs.push_back(*in.module);
  } else {
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < opt.count; ++i) inputs.push_back(randomFreeModule(base, rng, opt.maxDim));
  }
  Json rows = Json::array();
  int ok = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto& n = inputs[i];
    DgModule induced = induceFromCycles(a, n);
    CycleModule back = cyclesModule(induced);
    auto iso = findModuleIsomorphism(back.module, n, opt.seed + i);
    bool good = iso.iso.has_value() && iso.witnesses.ok() && validateModule(induced).ok();
    ok += good;
    rows.push_back({{"degrees", n.basis().degrees()},
                    {"induced_dimension", induced.size()},
                    {"isomorphism", good},
                    {"attempts", iso.attempts}});
    os << "module " << i + 1 << ": " << basisText(n.basis()) << " -> induced dim " << induced.size() << ", "
       << (good ? "isomorphic" : "NOT isomorphic") << " after " << iso.attempts << " attempt(s)\n";
  }
  rep.doc()["seed"] = opt.seed;
  rep.doc()["modules"] = rows;
  rep.doc()["isomorphic"] = ok;
  rep.doc()["total"] = inputs.size();
  os << ok << "/" << inputs.size() << " round trips verified\n";
  return ok == static_cast<int>(inputs.size()) ? kDecisionCompleted : kValidationFailure;
}

int cmdDemo(const Options& opt, Reporter& rep) {
  auto& os = rep.text();
  if (opt.demo.empty() && opt.file.empty()) {
    Json list = Json::array();
    for (const auto& e : listDemos()) {
      list.push_back({{"name", e.name}, {"description", e.description}});
      os << e.name << "\n    " << e.description << "\n";
    }
    rep.doc()["demos"] = list;
    return kDecisionCompleted;
  }
  Options named = opt;
  if (named.demo.empty()) named.demo = {opt.file};
  Input in = loadInput(named);
  Json obj;
  if (in.ses) {
    obj = toJson(*in.ses);
  } else if (in.extension) {
    obj = toJson(*in.extension);
  } else {
    obj = toJson(need(in.algebra, "an object"));
  }
  rep.doc()["name"] = in.name;
  rep.doc()["object"] = obj;
  os << pretty(obj) << "\n";
  return kDecisionCompleted;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"dg-separability toolkit", "dgsep"};
  app.require_subcommand(1);
  Options opt;

  using Handler = int (*)(const Options&, Reporter&);
  const std::vector<std::tuple<std::string, std::string, Handler>> commands{
      {"validate", "check the axioms of an algebra, extension, module or sequence", cmdValidate},
      {"homology", "homology dimensions of a dg-algebra", cmdHomology},
      {"cycles", "the cycle algebra ker(d)", cmdCycles},
      {"grdiv-classify", "classify a graded-commutative algebra as gr-division or not", cmdGrDiv},
      {"dgdiv-check", "decide whether a dg-algebra is dg-division", cmdDgDiv},
      {"tensor", "the bimodule B (x)_A B of an extension", cmdTensor},
      {"separable", "search for a Casimir element", cmdSeparable},
      {"main-theorem", "predicted versus computed separability", cmdMainTheorem},
      {"ses-split", "search for a dg-splitting of a short exact sequence", cmdSesSplit},
      {"lift-split", "lift a splitting over the source to the target", cmdLiftSplit},
      {"equivalence-check", "round trip modules through cycles and induction", cmdEquivalence},
      {"demo", "list demos, or print one as JSON", cmdDemo},
  };
  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (const auto& [name, help, handler] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.file, "JSON input");
    sub->add_option("--demo", opt.demo, "built-in demo; several tokens, e.g. --demo laurent F2 3");
    sub->add_option("--window", opt.window, "degree window LO HI")->expected(2);
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", opt.seed, "seed for randomized searches");
    if (name == "ses-split")
      sub->add_option("--base", opt.base, "algebra the splitting is linear over")
          ->check(CLI::IsMember({"target", "source"}));
    if (name == "equivalence-check") {
      sub->add_option("--count", opt.count, "number of random modules");
      sub->add_option("--max-dim", opt.maxDim, "largest module dimension");
    }
    subs.emplace_back(sub, handler);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kDecisionCompleted;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kDecisionCompleted;
    }
    err << "error: " << e.what() << "\n";
    return kFormatError;
  }

  for (auto& [sub, handler] : subs) {
    if (!sub->parsed()) continue;
    Reporter rep(opt, out);
    rep.doc()["command"] = sub->get_name();
    int code;
    try {
      code = handler(opt, rep);
    } catch (const FormatError& e) {
      err << "format error: " << e.what() << "\n";
      return kFormatError;
    } catch (const WindowTooSmall& e) {
      err << "window insufficient: " << e.what() << "\n";
      return kWindowInsufficient;
    } catch (const ClosureEscape& e) {
      err << "window insufficient: " << e.what() << "\n";
      return kWindowInsufficient;
    } catch (const Error& e) {
      rep.doc()["error"] = e.what();
      rep.finish();
      err << "validation failure: " << e.what() << "\n";
      return kValidationFailure;
    } catch (const Json::exception& e) {
      err << "format error: " << e.what() << "\n";
      return kFormatError;
    }
    rep.finish();
    return code;
  }
  return kFormatError;
}

}  // namespace dgsep
