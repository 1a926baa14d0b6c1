// ctw — command-line front end for the compositional-truth workbench.
// Talks to the library exclusively through the public C interface.
//
// Exit codes: 0 success / all checks pass, 1 check failure, 2 usage or
// input error.  Output is deterministic: same argv + environment ⇒ same
// bytes.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ctw/ctw.h"

namespace {

[[noreturn]] void fail(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(2);
}

// Releases the message and aborts with exit 2 on a failed call.
void need(ctw_status st, char* err) {
  if (st == CTW_OK) {
    ctw_string_free(err);
    return;
  }
  std::string msg = err ? err : "unknown error";
  ctw_string_free(err);
  fail(msg);
}

struct Str {
  char* p = nullptr;
  ~Str() { ctw_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct FormulaH {
  ctw_formula* p = nullptr;
  ~FormulaH() { ctw_formula_free(p); }
};

struct BundleH {
  ctw_bundle* p = nullptr;
  ~BundleH() { ctw_bundle_free(p); }
};

struct InterpH {
  ctw_interp* p = nullptr;
  ~InterpH() { ctw_interp_free(p); }
};

struct ReportH {
  ctw_report* p = nullptr;
  ~ReportH() { ctw_report_free(p); }
};

struct Pool {
  ctw_formula** arr = nullptr;
  size_t n = 0;
  ~Pool() { ctw_formula_list_free(arr, n); }
};

// Inputs are files or inline S-expressions: a leading '(' means inline.
std::string readInput(const std::string& arg) {
  if (!arg.empty() && arg[0] == '(') return arg;
  std::ifstream in(arg);
  if (!in) fail("cannot open input file '" + arg + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void parsePoolText(const std::string& text, Pool& pool) {
  char* err = nullptr;
  need(ctw_parse_formulas(text.c_str(), &pool.arr, &pool.n, &err), err);
}

void parsePoolArgs(const std::vector<std::string>& args, Pool& pool) {
  std::string text;
  for (const std::string& a : args) {
    text += readInput(a);
    text.push_back('\n');
  }
  parsePoolText(text, pool);
}

void parseOne(const std::string& arg, FormulaH& f) {
  char* err = nullptr;
  need(ctw_parse_formula(readInput(arg).c_str(), &f.p, &err), err);
}

std::string jsonEscape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

struct Config {
  std::string fuel = "64";
  std::string budget = "1000000";
  std::string format = "sexpr";
  std::string out;
  std::string corpus;

  void validate() const {
    auto decimal = [](const std::string& s) {
      return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
    };
    if (!decimal(fuel) || fuel == "0") fail("--fuel must be a natural >= 1");
    if (!decimal(budget)) fail("--budget must be a natural");
    if (budget.size() < 4) fail("--budget must be >= 1000");
    if (format != "sexpr" && format != "json") fail("--format must be sexpr or json");
  }

  void write(const std::string& text) const {
    if (out.empty()) {
      std::cout << text;
      if (text.empty() || text.back() != '\n') std::cout << "\n";
      return;
    }
    std::ofstream f(out);
    if (!f) fail("cannot open output file '" + out + "'");
    f << text;
    if (text.empty() || text.back() != '\n') f << "\n";
  }

  // Formula-like payloads honor --format; kind tags the JSON wrapper.
  void writeTagged(const std::string& kind, const std::string& text) const {
    if (format == "json")
      write("{\"" + kind + "\": \"" + jsonEscape(text) + "\"}");
    else
      write(text);
  }

  std::string corpusText() const {
    if (!corpus.empty()) return readInput(corpus);
    if (const char* env = std::getenv("CTW_SEED_CORPUS"); env && *env)
      return readInput(env);
    Str text;
    char* err = nullptr;
    need(ctw_seed_corpus(&text.p, &err), err);
    return text.str();
  }
};

std::string renderOf(const ctw_formula* f) {
  Str s;
  char* err = nullptr;
  need(ctw_render_formula(f, &s.p, &err), err);
  return s.str();
}

// ---------- check orchestration ----------

struct SuiteOutcome {
  std::vector<std::string> reports;  // JSON objects
  bool pass = true;
};

void runReport(ctw_report* owned, SuiteOutcome& outcome) {
  ReportH r;
  r.p = owned;
  Str json;
  char* err = nullptr;
  need(ctw_report_to_json(r.p, &json.p, &err), err);
  int pass = 0;
  need(ctw_report_pass(r.p, &pass, &err), err);
  outcome.reports.push_back(json.str());
  outcome.pass = outcome.pass && pass == 1;
}

void suiteDcCc(const Config& cfg, size_t sMax, SuiteOutcome& outcome) {
  Pool corpus;
  parsePoolText(cfg.corpusText(), corpus);
  char* err = nullptr;
  ctw_report* r = nullptr;
  need(ctw_check_dc(corpus.arr, corpus.n, sMax, cfg.fuel.c_str(), &r, &err), err);
  runReport(r, outcome);
  r = nullptr;
  need(ctw_check_cc(corpus.arr, corpus.n, sMax, cfg.fuel.c_str(), &r, &err), err);
  runReport(r, outcome);
}

void suiteStar(const Config& cfg, SuiteOutcome& outcome) {
  Pool corpus;
  parsePoolText(cfg.corpusText(), corpus);
  char* err = nullptr;
  ctw_report* r = nullptr;
  need(ctw_check_star(corpus.arr, corpus.n, cfg.fuel.c_str(), &r, &err), err);
  runReport(r, outcome);
}

void suiteTriangle(const Config& cfg, SuiteOutcome& outcome) {
  Pool corpus;
  parsePoolText(cfg.corpusText(), corpus);
  char* err = nullptr;
  ctw_report* r = nullptr;
  need(ctw_check_triangle(corpus.arr, corpus.n, 2, "3", cfg.fuel.c_str(),
                          cfg.budget.c_str(), &r, &err),
       err);
  runReport(r, outcome);
}

void suitePc(const Config& cfg, SuiteOutcome& outcome) {
  char* err = nullptr;
  FormulaH always, even;
  need(ctw_parse_formula("(eq (var x) (var x))", &always.p, &err), err);
  need(ctw_parse_formula("(ex-le y (var x) (eq (+ (var y) (var y)) (var x)))", &even.p,
                         &err),
       err);
  ctw_report* r = nullptr;
  need(ctw_check_piecewise(always.p, "16", cfg.fuel.c_str(), &r, &err), err);
  runReport(r, outcome);
  r = nullptr;
  need(ctw_check_piecewise(even.p, "12", cfg.fuel.c_str(), &r, &err), err);
  runReport(r, outcome);
}

void suiteDtb(const Config& cfg, SuiteOutcome& outcome) {
  Pool corpus;
  parsePoolText(cfg.corpusText(), corpus);
  char* err = nullptr;
  FormulaH psi;
  need(ctw_parse_formula("(eq z (s z))", &psi.p, &err), err);
  size_t n = corpus.n < 2 ? corpus.n : 2;
  ctw_report* r = nullptr;
  need(ctw_check_dtb(psi.p, corpus.arr, n, "5", cfg.fuel.c_str(), &r, &err), err);
  runReport(r, outcome);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic workbench for compositional truth, finite-stage "
               "interpretations, and prover exports"};
  app.fallthrough(true);
  Config cfg;
  app.add_option("--fuel", cfg.fuel, "evaluator fuel (default 64)");
  app.add_option("--budget", cfg.budget, "node budget (default 1000000)");
  app.add_option("--format", cfg.format, "output format: sexpr|json (default sexpr)");
  app.add_option("--out", cfg.out, "write output to PATH instead of stdout");
  app.add_option("--corpus", cfg.corpus, "corpus file (default: builtin seed corpus; "
                                         "CTW_SEED_CORPUS overrides)");
  app.require_subcommand(1);

  std::vector<std::string> poolArg;
  std::string formulaArg, alphaArg = "a", kindArg, psiArg, phiArg, deltaArg,
              stageArg = "0", decimalArg;
  bool indexedFlag = false, desugarFlag = false;
  size_t sArg = 4;

  auto* cParse = app.add_subcommand("parse", "parse a formula; print canonical form");
  cParse->add_option("formula", formulaArg, "inline S-expression or file")->required();

  auto* cRender = app.add_subcommand("render", "re-render a formula canonically");
  cRender->add_option("formula", formulaArg)->required();
  cRender->add_flag("--desugar", desugarFlag, "lower to the not/or/exists core first");

  auto* cEncode = app.add_subcommand("encode", "print the code of a formula");
  cEncode->add_option("formula", formulaArg)->required();

  auto* cDecode = app.add_subcommand("decode", "decode a value to a term or formula");
  cDecode->add_option("value", decimalArg, "decimal code")->required();

  auto* cBigor = app.add_subcommand("bigor", "left-grouped disjunction of a pool");
  cBigor->add_option("--pool", poolArg)->required();

  auto* cBigand = app.add_subcommand("bigand", "left-grouped conjunction of a pool");
  cBigand->add_option("--pool", poolArg)->required();

  auto* cRel = app.add_subcommand("relativize", "restrict index quantifiers below alpha");
  cRel->add_option("formula", formulaArg)->required();
  cRel->add_option("--alpha", alphaArg, "index variable (default a)");

  auto* cAxioms = app.add_subcommand("axioms", "emit an axiom bundle or object formula");
  cAxioms->add_option("--kind", kindArg,
                      "q|order|tarski|dtb|hbl|loeb|ind|ic|pc|pcu|pcof")
      ->required();
  cAxioms->add_option("--pool", poolArg, "sentence pool (tarski/dtb/loeb)");
  cAxioms->add_option("--psi", psiArg, "unary formula (ind/ic, hbl second argument)");
  cAxioms->add_option("--phi", phiArg, "formula argument (pc/pcof/hbl)");

  auto* cTheta = app.add_subcommand("theta", "indicator disjunction or indexed-truth theta");
  cTheta->add_option("--pool", poolArg, "pool for the indicator disjunction");
  cTheta->add_flag("--indexed", indexedFlag, "emit the universal indexed-truth form");

  auto* cFix = app.add_subcommand("fixedpoint", "diagonal fixed point of a unary formula");
  cFix->add_option("--delta", deltaArg)->required();

  auto* cIota = app.add_subcommand("iota", "build the stage-n interpretation");
  cIota->add_option("--psi", psiArg)->required();
  cIota->add_option("--pool", poolArg)->required();
  cIota->add_option("--n", stageArg)->required();

  auto* cTranslate = app.add_subcommand("translate", "translate through a stage");
  cTranslate->add_option("formula", formulaArg)->required();
  cTranslate->add_option("--psi", psiArg)->required();
  cTranslate->add_option("--pool", poolArg)->required();
  cTranslate->add_option("--n", stageArg)->required();

  auto* cSize = app.add_subcommand("size-profile", "translation growth per stage (CSV)");
  cSize->add_option("--psi", psiArg)->required();
  cSize->add_option("--pool", poolArg)->required();
  cSize->add_option("--n", stageArg)->required();

  auto* cCheck = app.add_subcommand("check", "run a check suite; JSON report array");
  std::string suiteArg;
  cCheck->add_option("suite", suiteArg, "dc|star|triangle|pc|dtb|all")->required();
  cCheck->add_option("--s", sArg, "max pool size for dc (default 4)");

  auto* cExport = app.add_subcommand("export-tptp", "emit a prover problem file");
  cExport->add_option("--kind", kindArg, "q|order|tarski|dtb|loeb")->required();
  cExport->add_option("--pool", poolArg, "sentence pool");

  CLI11_PARSE(app, argc, argv);
  cfg.validate();

  char* err = nullptr;

  if (cParse->parsed() || cRender->parsed()) {
    FormulaH f;
    parseOne(formulaArg, f);
    if (desugarFlag) {
      FormulaH lowered;
      need(ctw_desugar_formula(f.p, &lowered.p, &err), err);
      cfg.writeTagged("formula", renderOf(lowered.p));
    } else {
      cfg.writeTagged("formula", renderOf(f.p));
    }
    return 0;
  }

  if (cEncode->parsed()) {
    FormulaH f;
    parseOne(formulaArg, f);
    Str code;
    need(ctw_encode_formula(f.p, &code.p, &err), err);
    cfg.writeTagged("code", code.str());
    return 0;
  }

  if (cDecode->parsed()) {
    Str text;
    int isFormula = 0;
    need(ctw_decode(decimalArg.c_str(), &text.p, &isFormula, &err), err);
    cfg.writeTagged(isFormula ? "formula" : "term", text.str());
    return 0;
  }

  if (cBigor->parsed() || cBigand->parsed()) {
    Pool pool;
    parsePoolArgs(poolArg, pool);
    FormulaH f;
    need(cBigor->parsed() ? ctw_big_or(pool.arr, pool.n, &f.p, &err)
                          : ctw_big_and(pool.arr, pool.n, &f.p, &err),
         err);
    cfg.writeTagged("formula", renderOf(f.p));
    return 0;
  }

  if (cRel->parsed()) {
    FormulaH f;
    parseOne(formulaArg, f);
    FormulaH out;
    need(ctw_relativize(f.p, alphaArg.c_str(), &out.p, &err), err);
    cfg.writeTagged("formula", renderOf(out.p));
    return 0;
  }

  if (cAxioms->parsed()) {
    auto bundleOut = [&](ctw_bundle* owned) {
      BundleH b;
      b.p = owned;
      Str text;
      need(ctw_bundle_to_text(b.p, &text.p, &err), err);
      cfg.writeTagged("bundle", text.str());
    };
    auto formulaOut = [&](ctw_formula* owned) {
      FormulaH f;
      f.p = owned;
      cfg.writeTagged("formula", renderOf(f.p));
    };
    Pool pool;
    if (!poolArg.empty()) parsePoolArgs(poolArg, pool);
    ctw_bundle* b = nullptr;
    ctw_formula* f = nullptr;
    if (kindArg == "q") {
      need(ctw_bundle_q(&b, &err), err);
      bundleOut(b);
    } else if (kindArg == "order") {
      need(ctw_bundle_order(&b, &err), err);
      bundleOut(b);
    } else if (kindArg == "tarski") {
      need(ctw_bundle_tarski(pool.arr, pool.n, &b, &err), err);
      bundleOut(b);
    } else if (kindArg == "dtb") {
      need(ctw_bundle_dtb(pool.arr, pool.n, &b, &err), err);
      bundleOut(b);
    } else if (kindArg == "loeb") {
      need(ctw_bundle_loeb(pool.arr, pool.n, &b, &err), err);
      bundleOut(b);
    } else if (kindArg == "hbl") {
      if (phiArg.empty() || psiArg.empty()) fail("--kind hbl needs --phi and --psi");
      FormulaH phi, psi;
      parseOne(phiArg, phi);
      parseOne(psiArg, psi);
      need(ctw_bundle_hbl(phi.p, psi.p, &b, &err), err);
      bundleOut(b);
    } else if (kindArg == "ind" || kindArg == "ic") {
      if (psiArg.empty()) fail("--kind " + kindArg + " needs --psi");
      FormulaH psi;
      parseOne(psiArg, psi);
      need(kindArg == "ind" ? ctw_ind_sentence(psi.p, &f, &err)
                            : ctw_ic_instance(psi.p, &f, &err),
           err);
      formulaOut(f);
    } else if (kindArg == "pcu") {
      need(ctw_pc_u(&f, &err), err);
      formulaOut(f);
    } else if (kindArg == "pc" || kindArg == "pcof") {
      if (phiArg.empty()) fail("--kind " + kindArg + " needs --phi");
      FormulaH phi;
      parseOne(phiArg, phi);
      need(kindArg == "pc" ? ctw_pc_phi(phi.p, &f, &err) : ctw_pc_of(phi.p, &f, &err),
           err);
      formulaOut(f);
    } else {
      fail("unknown --kind '" + kindArg + "'");
    }
    return 0;
  }

  if (cTheta->parsed()) {
    FormulaH f;
    if (indexedFlag) {
      if (!poolArg.empty()) fail("theta takes --pool or --indexed, not both");
      need(ctw_theta_indexed(&f.p, &err), err);
    } else {
      if (poolArg.empty()) fail("theta needs --pool or --indexed");
      Pool pool;
      parsePoolArgs(poolArg, pool);
      need(ctw_theta_disjunction(pool.arr, pool.n, &f.p, &err), err);
    }
    cfg.writeTagged("formula", renderOf(f.p));
    return 0;
  }

  if (cFix->parsed()) {
    FormulaH delta;
    parseOne(deltaArg, delta);
    FormulaH gamma, deltaPrime, unfolded;
    need(ctw_fixed_point(delta.p, &gamma.p, &deltaPrime.p, &unfolded.p, &err), err);
    if (cfg.format == "json") {
      std::string j = "{\"gamma\": \"" + jsonEscape(renderOf(gamma.p)) +
                      "\", \"delta\": \"" + jsonEscape(renderOf(deltaPrime.p)) +
                      "\", \"unfolded\": \"" + jsonEscape(renderOf(unfolded.p)) + "\"}";
      cfg.write(j);
    } else {
      std::string s = "(fixedpoint\n  (gamma " + renderOf(gamma.p) + ")\n  (delta " +
                      renderOf(deltaPrime.p) + ")\n  (unfolded " + renderOf(unfolded.p) +
                      ")\n)";
      cfg.write(s);
    }
    return 0;
  }

  if (cIota->parsed() || cTranslate->parsed() || cSize->parsed()) {
    FormulaH psi;
    parseOne(psiArg, psi);
    Pool pool;
    parsePoolArgs(poolArg, pool);
    if (cSize->parsed()) {
      Str csv;
      need(ctw_size_profile_csv(psi.p, pool.arr, pool.n, stageArg.c_str(),
                                cfg.budget.c_str(), &csv.p, &err),
           err);
      cfg.write(csv.str());
      return 0;
    }
    InterpH iota;
    need(ctw_build_iota(psi.p, pool.arr, pool.n, stageArg.c_str(), &iota.p, &err), err);
    if (cIota->parsed()) {
      Str text;
      need(ctw_interp_to_text(iota.p, &text.p, &err), err);
      cfg.writeTagged("interpretation", text.str());
    } else {
      FormulaH f;
      parseOne(formulaArg, f);
      FormulaH out;
      need(ctw_translate(iota.p, f.p, &out.p, &err), err);
      cfg.writeTagged("formula", renderOf(out.p));
    }
    return 0;
  }

  if (cCheck->parsed()) {
    SuiteOutcome outcome;
    if (suiteArg == "dc") {
      suiteDcCc(cfg, sArg, outcome);
    } else if (suiteArg == "star") {
      suiteStar(cfg, outcome);
    } else if (suiteArg == "triangle") {
      suiteTriangle(cfg, outcome);
    } else if (suiteArg == "pc") {
      suitePc(cfg, outcome);
    } else if (suiteArg == "dtb") {
      suiteDtb(cfg, outcome);
    } else if (suiteArg == "all") {
      suiteDcCc(cfg, sArg, outcome);
      suiteStar(cfg, outcome);
      suiteTriangle(cfg, outcome);
      suitePc(cfg, outcome);
      suiteDtb(cfg, outcome);
    } else {
      fail("unknown suite '" + suiteArg + "'");
    }
    std::string joined = "[\n";
    for (size_t i = 0; i < outcome.reports.size(); ++i) {
      joined += outcome.reports[i];
      if (i + 1 < outcome.reports.size()) joined += ",";
      joined += "\n";
    }
    joined += "]";
    cfg.write(joined);
    return outcome.pass ? 0 : 1;
  }

  if (cExport->parsed()) {
    Pool pool;
    if (!poolArg.empty()) parsePoolArgs(poolArg, pool);
    BundleH b;
    if (kindArg == "q") {
      need(ctw_bundle_q(&b.p, &err), err);
    } else if (kindArg == "order") {
      need(ctw_bundle_order(&b.p, &err), err);
    } else if (kindArg == "tarski") {
      need(ctw_bundle_tarski(pool.arr, pool.n, &b.p, &err), err);
    } else if (kindArg == "dtb") {
      need(ctw_bundle_dtb(pool.arr, pool.n, &b.p, &err), err);
    } else if (kindArg == "loeb") {
      need(ctw_bundle_loeb(pool.arr, pool.n, &b.p, &err), err);
    } else {
      fail("unknown --kind '" + kindArg + "'");
    }
    Str text, warnings;
    need(ctw_bundle_to_tptp(b.p, &text.p, &warnings.p, &err), err);
    size_t guarded = 0;
    need(ctw_tptp_selfcheck(text.p, &guarded, &err), err);
    if (!warnings.str().empty()) std::cerr << warnings.str() << "\n";
    cfg.write(text.str());
    return 0;
  }

  fail("no subcommand selected");
}
