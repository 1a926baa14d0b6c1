#include "serial.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "sexpr.hpp"
#include "syntax.hpp"

namespace ctw {

namespace {

using Json = nlohmann::ordered_json;

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

const SExpr& expectList(const SExpr& e, const char* what) {
  if (e.isAtom) throw ParseError(std::string("expected ") + what + " list", e.pos);
  return e;
}

const std::string& expectAtom(const SExpr& e, const char* what) {
  if (!e.isAtom) throw ParseError(std::string("expected ") + what + " atom", e.pos);
  return e.atom;
}

void expectHead(const SExpr& e, const char* head) {
  expectList(e, head);
  if (e.items.empty() || !e.items[0].isAtom || e.items[0].atom != head)
    throw ParseError(std::string("expected (") + head + " ...)", e.pos);
}

Nat natFromAtom(const SExpr& e) {
  const std::string& s = expectAtom(e, "numeric");
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected a decimal natural, got '" + s + "'", e.pos);
  return Nat(s);
}

}  // namespace

// ---------- bundles ----------

std::string bundleToText(const AxiomBundle& b) {
  std::ostringstream out;
  out << "(bundle " << b.name << "\n";
  out << "  (provenance " << quoted(b.provenance) << ")\n";
  for (const NamedSentence& s : b.sentences)
    out << "  (ax " << s.name << " " << roleName(s.role) << " " << renderFormula(s.body)
        << ")\n";
  out << ")";
  return out.str();
}

AxiomBundle bundleFromText(const std::string& text) {
  SExpr e = sexprParseOne(text);
  expectHead(e, "bundle");
  if (e.items.size() < 2) throw ParseError("bundle needs a name", e.pos);
  AxiomBundle b;
  b.name = expectAtom(e.items[1], "bundle name");
  for (std::size_t i = 2; i < e.items.size(); ++i) {
    const SExpr& item = expectList(e.items[i], "bundle entry");
    if (item.items.empty() || !item.items[0].isAtom)
      throw ParseError("expected (provenance ...) or (ax ...)", item.pos);
    const std::string& head = item.items[0].atom;
    if (head == "provenance") {
      if (item.items.size() != 2) throw ParseError("provenance takes one string", item.pos);
      b.provenance = expectAtom(item.items[1], "provenance text");
    } else if (head == "ax") {
      if (item.items.size() != 4)
        throw ParseError("expected (ax NAME ROLE FORMULA)", item.pos);
      NamedSentence s;
      s.name = expectAtom(item.items[1], "sentence name");
      s.role = roleFromName(expectAtom(item.items[2], "role"));
      s.body = formulaFromSExpr(item.items[3]);
      b.sentences.push_back(std::move(s));
    } else {
      throw ParseError("unknown bundle entry '" + head + "'", item.pos);
    }
  }
  validateBundle(b);
  return b;
}

// ---------- interpretations ----------

std::string interpretationToText(const Interpretation& iota) {
  std::ostringstream out;
  out << "(interpretation\n";
  out << "  (n " << iota.n.str() << ")\n";
  out << "  (psi " << renderFormula(iota.psi) << ")\n";
  out << "  (pool";
  for (const FormulaPtr& phi : iota.pool) out << " " << renderFormula(phi);
  out << ")\n";
  out << "  (domain " << iota.domainVar << " " << renderFormula(iota.domainFormula) << ")\n";
  out << "  (truth " << iota.truthVarY << " " << iota.truthVarX << " "
      << renderFormula(iota.truthFormula) << ")\n";
  out << ")";
  return out.str();
}

Interpretation interpretationFromText(const std::string& text) {
  SExpr e = sexprParseOne(text);
  expectHead(e, "interpretation");
  Interpretation iota;
  bool sawN = false, sawPsi = false, sawPool = false, sawDomain = false, sawTruth = false;
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    const SExpr& item = expectList(e.items[i], "interpretation field");
    if (item.items.empty() || !item.items[0].isAtom)
      throw ParseError("expected a named interpretation field", item.pos);
    const std::string& head = item.items[0].atom;
    if (head == "n") {
      if (item.items.size() != 2) throw ParseError("(n N) takes one numeral", item.pos);
      iota.n = natFromAtom(item.items[1]);
      sawN = true;
    } else if (head == "psi") {
      if (item.items.size() != 2) throw ParseError("(psi F) takes one formula", item.pos);
      iota.psi = formulaFromSExpr(item.items[1]);
      sawPsi = true;
    } else if (head == "pool") {
      for (std::size_t k = 1; k < item.items.size(); ++k)
        iota.pool.push_back(formulaFromSExpr(item.items[k]));
      sawPool = true;
    } else if (head == "domain") {
      if (item.items.size() != 3) throw ParseError("expected (domain VAR F)", item.pos);
      iota.domainVar = expectAtom(item.items[1], "domain variable");
      iota.domainFormula = formulaFromSExpr(item.items[2]);
      sawDomain = true;
    } else if (head == "truth") {
      if (item.items.size() != 4) throw ParseError("expected (truth YVAR XVAR F)", item.pos);
      iota.truthVarY = expectAtom(item.items[1], "truth variable");
      iota.truthVarX = expectAtom(item.items[2], "truth variable");
      iota.truthFormula = formulaFromSExpr(item.items[3]);
      sawTruth = true;
    } else {
      throw ParseError("unknown interpretation field '" + head + "'", item.pos);
    }
  }
  if (!sawN || !sawPsi || !sawPool || !sawDomain || !sawTruth)
    throw ParseError("interpretation needs n, psi, pool, domain, and truth fields", e.pos);
  return iota;
}

// ---------- check reports ----------

std::string reportToJson(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["pass"] = r.pass;
  if (r.fuel <= Nat(std::numeric_limits<std::uint64_t>::max()))
    j["fuel"] = r.fuel.convert_to<std::uint64_t>();
  else
    j["fuel"] = r.fuel.str();
  j["total"] = r.total;
  j["mismatches"] = r.mismatches;
  j["unknowns"] = r.unknowns;
  Json arr = Json::array();
  for (const CheckInstance& inst : r.instances) {
    Json o;
    o["input"] = inst.input;
    o["expected"] = inst.expected;
    o["got"] = inst.got;
    o["verdict"] = inst.verdict;
    arr.push_back(std::move(o));
  }
  j["instances"] = std::move(arr);
  return j.dump(2);
}

CheckReport reportFromJson(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(std::string("bad report JSON: ") + ex.what(),
                     static_cast<std::size_t>(ex.byte));
  }
  try {
    CheckReport r;
    r.check = j.at("check").get<std::string>();
    r.pass = j.at("pass").get<bool>();
    const Json& fuel = j.at("fuel");
    r.fuel = fuel.is_string() ? Nat(fuel.get<std::string>()) : Nat(fuel.get<std::uint64_t>());
    r.total = j.at("total").get<std::size_t>();
    r.mismatches = j.at("mismatches").get<std::size_t>();
    r.unknowns = j.at("unknowns").get<std::size_t>();
    for (const Json& o : j.at("instances")) {
      CheckInstance inst;
      inst.input = o.at("input").get<std::string>();
      inst.expected = o.at("expected").get<std::string>();
      inst.got = o.at("got").get<std::string>();
      inst.verdict = o.at("verdict").get<std::string>();
      r.instances.push_back(std::move(inst));
    }
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad report JSON: ") + ex.what(), 0);
  }
}

}  // namespace ctw
