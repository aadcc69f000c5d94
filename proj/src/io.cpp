#include "canext/io.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "canext/error.hpp"

namespace canext {

using nlohmann::json;

namespace {

void rejectUnknownKeys(const json& obj, std::initializer_list<const char*> allowed,
                       const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) throw SchemaError("unknown field \"" + it.key() + "\"", where);
  }
}

const json& requireField(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(std::string("missing field \"") + key + "\"", where);
  return *it;
}

std::vector<std::string> parseElements(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw SchemaError("\"elements\" must be a nonempty array of strings", where);
  std::vector<std::string> out;
  for (const json& e : j) {
    if (!e.is_string()) throw SchemaError("element labels must be strings", where);
    out.push_back(e.get<std::string>());
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t k = i + 1; k < out.size(); ++k)
      if (out[i] == out[k])
        throw SchemaError("duplicate element label \"" + out[i] + "\"", where);
  return out;
}

int labelIndex(const std::vector<std::string>& labels, const std::string& s,
               const std::string& where) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == s) return static_cast<int>(i);
  throw SchemaError("unknown element \"" + s + "\"", where);
}

Preorder parsePreorder(const json& obj, const std::string& where) {
  rejectUnknownKeys(obj, {"elements", "leq"}, where);
  std::vector<std::string> labels = parseElements(requireField(obj, "elements", where), where);
  const json& leq = requireField(obj, "leq", where);
  if (!leq.is_array()) throw SchemaError("\"leq\" must be an array of pairs", where);
  std::vector<std::pair<int, int>> pairs;
  for (const json& p : leq) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw SchemaError("\"leq\" entries must be [lo, hi] label pairs", where);
    pairs.emplace_back(labelIndex(labels, p[0].get<std::string>(), where),
                       labelIndex(labels, p[1].get<std::string>(), where));
  }
  return Preorder::saturate(static_cast<int>(labels.size()), pairs, labels);
}

Poset parsePoset(const json& obj, const std::string& where) {
  Preorder p = parsePreorder(obj, where);
  try {
    return Poset(p);
  } catch (const PreconditionError& e) {
    throw SchemaError(e.what(), where);
  }
}

FiniteLattice parseLattice(const json& obj, const std::string& where) {
  rejectUnknownKeys(obj, {"elements", "leq", "bottom", "top"}, where);
  json core;
  core["elements"] = obj.at("elements");
  core["leq"] = obj.at("leq");
  Poset p = parsePoset(core, where);
  FiniteLattice lat;
  try {
    lat = FiniteLattice::fromPoset(p);
  } catch (const NotALatticeError& e) {
    throw SchemaError(e.what(), where);
  }
  if (obj.contains("bottom")) {
    int b = labelIndex(p.labels(), obj.at("bottom").get<std::string>(), where);
    if (b != lat.bottom())
      throw SchemaError("declared bottom \"" + p.label(b) + "\" is not the least element", where);
  }
  if (obj.contains("top")) {
    int t = labelIndex(p.labels(), obj.at("top").get<std::string>(), where);
    if (t != lat.top())
      throw SchemaError("declared top \"" + p.label(t) + "\" is not the greatest element", where);
  }
  return lat;
}

// Tables come either as nested label arrays (depth = arity) or as rows of
// [arg..., value] labels. Nullary tables may be a bare label.
void fillTable(const json& j, const FiniteLattice& lat, int arity,
               std::vector<int>& values, std::vector<int>& prefix,
               const std::string& where) {
  if (static_cast<int>(prefix.size()) == arity) {
    if (!j.is_string()) throw SchemaError("table leaf must be an element label", where);
    std::size_t idx = 0;
    for (int a : prefix) idx = idx * lat.size() + static_cast<std::size_t>(a);
    values[idx] = labelIndex(lat.poset().labels(), j.get<std::string>(), where);
    return;
  }
  if (!j.is_array() || static_cast<int>(j.size()) != lat.size())
    throw SchemaError("nested table level must list one entry per element", where);
  for (int v = 0; v < lat.size(); ++v) {
    prefix.push_back(v);
    fillTable(j[v], lat, arity, values, prefix, where);
    prefix.pop_back();
  }
}

OpTable parseOpTable(const json& j, const FiniteLattice& lat, int arity,
                     const std::string& where) {
  std::vector<int> values(OpTable::tableSize(lat.size(), arity), -1);
  bool rowForm = false;
  if (j.is_array() && !j.empty() && j[0].is_array() &&
      static_cast<int>(j[0].size()) == arity + 1)
    rowForm = arity != 1 || !j[0][0].is_array();
  if (arity > 0 && rowForm) {
    for (const json& row : j) {
      if (!row.is_array() || static_cast<int>(row.size()) != arity + 1)
        throw SchemaError("table rows must be [args..., value]", where);
      std::size_t idx = 0;
      for (int i = 0; i < arity; ++i)
        idx = idx * lat.size() +
              static_cast<std::size_t>(labelIndex(lat.poset().labels(),
                                                  row[i].get<std::string>(), where));
      values[idx] = labelIndex(lat.poset().labels(), row[arity].get<std::string>(), where);
    }
    for (int v : values)
      if (v < 0) throw SchemaError("table rows do not cover every argument tuple", where);
  } else if (arity == 0) {
    const json& leaf = j.is_array() && j.size() == 1 ? j[0] : j;
    if (!leaf.is_string()) throw SchemaError("nullary table must be a label", where);
    values[0] = labelIndex(lat.poset().labels(), leaf.get<std::string>(), where);
  } else {
    std::vector<int> prefix;
    fillTable(j, lat, arity, values, prefix, where);
  }
  return OpTable(lat.size(), arity, std::move(values));
}

OrderedAlgebra parseAlgebra(const json& obj, const std::string& where) {
  rejectUnknownKeys(obj, {"lattice", "ops"}, where);
  FiniteLattice lat = parseLattice(requireField(obj, "lattice", where), where + ".lattice");
  const json& ops = requireField(obj, "ops", where);
  if (!ops.is_object()) throw SchemaError("\"ops\" must be an object", where);
  std::vector<Signature::Symbol> symbols;
  std::vector<OpTable> tables;
  for (auto it = ops.begin(); it != ops.end(); ++it) {
    const std::string opWhere = where + ".ops." + it.key();
    rejectUnknownKeys(*it, {"arity", "table"}, opWhere);
    int arity = requireField(*it, "arity", opWhere).get<int>();
    if (arity < 0) throw SchemaError("negative arity", opWhere);
    symbols.push_back({it.key(), arity});
    tables.push_back(parseOpTable(requireField(*it, "table", opWhere), lat, arity, opWhere));
  }
  try {
    return OrderedAlgebra(lat, Signature(std::move(symbols)), std::move(tables));
  } catch (const PreconditionError& e) {
    throw SchemaError(e.what(), where);
  }
}

Presentation parsePresentation(const json& obj, const std::string& where,
                               Presentation::Kind kind) {
  rejectUnknownKeys(obj, {"kind", "presentation_kind", "preorder", "covers"}, where);
  Preorder base = parsePreorder(requireField(obj, "preorder", where), where + ".preorder");
  std::vector<Cover> covers;
  const json& cs = requireField(obj, "covers", where);
  if (!cs.is_array()) throw SchemaError("\"covers\" must be an array", where);
  for (const json& c : cs) {
    rejectUnknownKeys(c, {"lhs", "rhs"}, where + ".covers");
    int lhs = labelIndex(base.labels(), requireField(c, "lhs", where).get<std::string>(), where);
    Subset rhs(base.size());
    for (const json& r : requireField(c, "rhs", where))
      rhs.set(labelIndex(base.labels(), r.get<std::string>(), where));
    covers.push_back({lhs, rhs});
  }
  std::sort(covers.begin(), covers.end(), [](const Cover& a, const Cover& b) {
    return a.lhs != b.lhs ? a.lhs < b.lhs : a.rhs.bits() < b.rhs.bits();
  });
  try {
    return Presentation::extensional(std::move(base), kind, std::move(covers));
  } catch (const PreconditionError& e) {
    throw SchemaError(e.what(), where);
  }
}

struct TermToken {
  enum Type { LParen, RParen, Atom } type;
  std::string text;
};

std::vector<TermToken> tokenizeTerm(const std::string& s) {
  std::vector<TermToken> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      out.push_back({TermToken::LParen, "("});
      ++i;
    } else if (c == ')') {
      out.push_back({TermToken::RParen, ")"});
      ++i;
    } else {
      std::size_t j = i;
      while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) &&
             s[j] != '(' && s[j] != ')')
        ++j;
      out.push_back({TermToken::Atom, s.substr(i, j - i)});
      i = j;
    }
  }
  return out;
}

Term parseTermTokens(const std::vector<TermToken>& toks, std::size_t& pos,
                     const Signature& sig, std::vector<std::string>& varNames,
                     bool closedVars) {
  if (pos >= toks.size()) throw SchemaError("unexpected end of term");
  const TermToken& t = toks[pos];
  if (t.type == TermToken::Atom) {
    ++pos;
    int s = sig.indexOf(t.text);
    if (s >= 0 && sig.symbols()[s].arity == 0) return Term::apply(t.text);
    for (std::size_t i = 0; i < varNames.size(); ++i)
      if (varNames[i] == t.text) return Term::variable(static_cast<int>(i));
    if (closedVars) throw SchemaError("unknown atom \"" + t.text + "\"");
    varNames.push_back(t.text);
    return Term::variable(static_cast<int>(varNames.size()) - 1);
  }
  if (t.type != TermToken::LParen) throw SchemaError("unexpected \")\" in term");
  ++pos;
  if (pos >= toks.size() || toks[pos].type != TermToken::Atom)
    throw SchemaError("expected a symbol after \"(\"");
  std::string head = toks[pos].text;
  ++pos;
  std::vector<Term> args;
  while (pos < toks.size() && toks[pos].type != TermToken::RParen)
    args.push_back(parseTermTokens(toks, pos, sig, varNames, closedVars));
  if (pos >= toks.size()) throw SchemaError("missing \")\" in term");
  ++pos;
  int s = sig.indexOf(head);
  if (s >= 0 && sig.symbols()[s].arity != static_cast<int>(args.size()))
    throw SchemaError("arity mismatch for symbol \"" + head + "\"");
  return Term::apply(std::move(head), std::move(args));
}

std::string termTextWithNames(const Term& t, const std::vector<std::string>& names) {
  if (t.isVariable()) return names[t.varIndex()];
  if (t.args().empty()) return t.symbol();
  std::string out = "(" + t.symbol();
  for (const Term& a : t.args()) out += " " + termTextWithNames(a, names);
  return out + ")";
}

json serializeOrder(const Preorder& p) {
  json j;
  j["elements"] = p.labels();
  json pairs = json::array();
  if (p.isAntisymmetric()) {
    for (auto [a, b] : hasseEdges(Poset(p)))
      pairs.push_back(json::array({p.label(a), p.label(b)}));
  } else {
    for (int a = 0; a < p.size(); ++a)
      for (int b = 0; b < p.size(); ++b)
        if (a != b && p.leq(a, b)) pairs.push_back(json::array({p.label(a), p.label(b)}));
  }
  j["leq"] = std::move(pairs);
  return j;
}

json serializeTableNested(const OpTable& t, const FiniteLattice& lat,
                          std::vector<int>& prefix) {
  if (static_cast<int>(prefix.size()) == t.arity())
    return lat.label(t.apply(prefix));
  json arr = json::array();
  for (int v = 0; v < lat.size(); ++v) {
    prefix.push_back(v);
    arr.push_back(serializeTableNested(t, lat, prefix));
    prefix.pop_back();
  }
  return arr;
}

json documentToJson(const Document& doc);

json corpusEntryToJson(const Document& doc) {
  json j;
  j["name"] = doc.name;
  j["doc"] = documentToJson(doc);
  return j;
}

json documentToJson(const Document& doc) {
  json j;
  switch (doc.kind) {
    case Document::Kind::Poset: {
      j = serializeOrder(*doc.poset);
      j["kind"] = "poset";
      break;
    }
    case Document::Kind::Lattice: {
      j = serializeOrder(doc.lattice->poset());
      j["kind"] = "lattice";
      j["bottom"] = doc.lattice->label(doc.lattice->bottom());
      j["top"] = doc.lattice->label(doc.lattice->top());
      break;
    }
    case Document::Kind::Algebra: {
      j["kind"] = "algebra";
      const FiniteLattice& lat = doc.algebra->lattice();
      json latj = serializeOrder(lat.poset());
      latj["bottom"] = lat.label(lat.bottom());
      latj["top"] = lat.label(lat.top());
      j["lattice"] = std::move(latj);
      json ops = json::object();
      for (int s = 0; s < doc.algebra->sig().size(); ++s) {
        const auto& sym = doc.algebra->sig().symbols()[s];
        json op;
        op["arity"] = sym.arity;
        if (sym.arity == 0) {
          op["table"] = lat.label(doc.algebra->interp(s).apply({}));
        } else {
          std::vector<int> prefix;
          op["table"] = serializeTableNested(doc.algebra->interp(s), lat, prefix);
        }
        ops[sym.name] = std::move(op);
      }
      j["ops"] = std::move(ops);
      break;
    }
    case Document::Kind::Presentation: {
      j["kind"] = "presentation";
      j["presentation_kind"] =
          doc.presentation->kind() == Presentation::Kind::Dcpo ? "dcpo" : "suplattice";
      j["preorder"] = serializeOrder(doc.presentation->base());
      json cs = json::array();
      for (const Cover& c : doc.presentation->covers()) {
        json cj;
        cj["lhs"] = doc.presentation->base().label(c.lhs);
        json rhs = json::array();
        c.rhs.forEach([&](int y) { rhs.push_back(doc.presentation->base().label(y)); });
        cj["rhs"] = std::move(rhs);
        cs.push_back(std::move(cj));
      }
      j["covers"] = std::move(cs);
      break;
    }
    case Document::Kind::Inequation: {
      j["kind"] = "inequation";
      j["vars"] = doc.varNames;
      j["text"] = "(leq " + termTextWithNames(doc.inequation->lhs, doc.varNames) + " " +
                  termTextWithNames(doc.inequation->rhs, doc.varNames) + ")";
      break;
    }
    case Document::Kind::Corpus: {
      j["kind"] = "corpus";
      json entries = json::array();
      for (const Document& e : doc.entries) entries.push_back(corpusEntryToJson(e));
      j["entries"] = std::move(entries);
      break;
    }
  }
  return j;
}

Document parseDocumentJson(const json& j, const std::string& where);

Document parseCorpusEntry(const json& j, const std::string& where) {
  rejectUnknownKeys(j, {"name", "doc"}, where);
  Document d = parseDocumentJson(requireField(j, "doc", where), where + ".doc");
  d.name = requireField(j, "name", where).get<std::string>();
  return d;
}

Document parseDocumentJson(const json& j, const std::string& where) {
  if (!j.is_object()) throw SchemaError("document must be a JSON object", where);
  std::string kind = requireField(j, "kind", where).get<std::string>();
  Document doc;
  if (kind == "poset") {
    json core = j;
    core.erase("kind");
    doc.kind = Document::Kind::Poset;
    doc.poset = parsePoset(core, where);
  } else if (kind == "lattice") {
    json core = j;
    core.erase("kind");
    doc.kind = Document::Kind::Lattice;
    doc.lattice = parseLattice(core, where);
  } else if (kind == "algebra") {
    json core = j;
    core.erase("kind");
    doc.kind = Document::Kind::Algebra;
    doc.algebra = parseAlgebra(core, where);
    doc.lattice = doc.algebra->lattice();
  } else if (kind == "presentation") {
    doc.kind = Document::Kind::Presentation;
    std::string pk = requireField(j, "presentation_kind", where).get<std::string>();
    if (pk != "dcpo" && pk != "suplattice")
      throw SchemaError("presentation_kind must be dcpo or suplattice", where);
    doc.presentation = parsePresentation(
        j, where, pk == "dcpo" ? Presentation::Kind::Dcpo : Presentation::Kind::Suplattice);
  } else if (kind == "inequation") {
    rejectUnknownKeys(j, {"kind", "vars", "text"}, where);
    doc.kind = Document::Kind::Inequation;
    if (j.contains("vars"))
      for (const json& v : j.at("vars")) doc.varNames.push_back(v.get<std::string>());
    bool closed = !doc.varNames.empty();
    std::string text = requireField(j, "text", where).get<std::string>();
    std::vector<TermToken> toks = tokenizeTerm(text);
    std::size_t pos = 0;
    if (toks.empty() || toks[pos].type != TermToken::LParen)
      throw SchemaError("inequation must be (leq s t)", where);
    ++pos;
    if (toks[pos].type != TermToken::Atom || toks[pos].text != "leq")
      throw SchemaError("inequation must be (leq s t)", where);
    ++pos;
    Signature empty;
    Term lhs = parseTermTokens(toks, pos, empty, doc.varNames, closed);
    Term rhs = parseTermTokens(toks, pos, empty, doc.varNames, closed);
    if (pos >= toks.size() || toks[pos].type != TermToken::RParen)
      throw SchemaError("inequation must be (leq s t)", where);
    ++pos;
    if (pos != toks.size()) throw SchemaError("trailing tokens after inequation", where);
    doc.inequation = Inequation{lhs, rhs, static_cast<int>(doc.varNames.size())};
  } else if (kind == "corpus") {
    rejectUnknownKeys(j, {"kind", "entries"}, where);
    doc.kind = Document::Kind::Corpus;
    const json& entries = requireField(j, "entries", where);
    int i = 0;
    for (const json& e : entries)
      doc.entries.push_back(parseCorpusEntry(e, where + ".entries[" + std::to_string(i++) + "]"));
  } else {
    throw SchemaError("unknown document kind \"" + kind + "\"", where);
  }
  return doc;
}

}  // namespace

const char* Document::kindName(Kind k) {
  switch (k) {
    case Kind::Poset: return "poset";
    case Kind::Lattice: return "lattice";
    case Kind::Algebra: return "algebra";
    case Kind::Presentation: return "presentation";
    case Kind::Inequation: return "inequation";
    case Kind::Corpus: return "corpus";
  }
  return "?";
}

Document parseDocument(const std::string& jsonText) {
  json j;
  try {
    j = json::parse(jsonText);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  return parseDocumentJson(j, "$");
}

std::string serializeDocument(const Document& doc) {
  return documentToJson(doc).dump(2) + "\n";
}

bool documentsEqual(const Document& a, const Document& b) {
  // Structural equality via the canonical serialization.
  return documentToJson(a) == documentToJson(b);
}

Term parseTermText(const std::string& text, const Signature& sig,
                   std::vector<std::string>& varNames) {
  std::vector<TermToken> toks = tokenizeTerm(text);
  std::size_t pos = 0;
  bool closed = !varNames.empty();
  Term t = parseTermTokens(toks, pos, sig, varNames, closed);
  if (pos != toks.size()) throw SchemaError("trailing tokens after term");
  return t;
}

Inequation parseInequationText(const std::string& text, const Signature& sig) {
  std::vector<TermToken> toks = tokenizeTerm(text);
  std::size_t pos = 0;
  if (toks.empty() || toks[pos].type != TermToken::LParen)
    throw SchemaError("inequation must be (leq s t)");
  ++pos;
  if (pos >= toks.size() || toks[pos].type != TermToken::Atom || toks[pos].text != "leq")
    throw SchemaError("inequation must be (leq s t)");
  ++pos;
  std::vector<std::string> varNames;
  Term lhs = parseTermTokens(toks, pos, sig, varNames, false);
  Term rhs = parseTermTokens(toks, pos, sig, varNames, false);
  if (pos >= toks.size() || toks[pos].type != TermToken::RParen)
    throw SchemaError("inequation must be (leq s t)");
  ++pos;
  if (pos != toks.size()) throw SchemaError("trailing tokens after inequation");
  return {lhs, rhs, static_cast<int>(varNames.size())};
}

std::string emitDot(const Poset& p) {
  std::ostringstream out;
  out << "digraph order {\n";
  out << "  rankdir=BT;\n";
  for (int i = 0; i < p.size(); ++i) {
    std::string label = p.label(i);
    std::string escaped;
    for (char c : label) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    out << "  n" << i << " [label=\"" << escaped << "\"];\n";
  }
  for (auto [a, b] : hasseEdges(p)) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

struct DotToken {
  enum Type { Ident, String, Symbol, End } type;
  std::string text;
};

class DotLexer {
 public:
  explicit DotLexer(const std::string& s) : s_(s) {}
  DotToken next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ >= s_.size()) return {DotToken::End, ""};
    char c = s_[i_];
    if (c == '"') {
      std::string text;
      ++i_;
      while (i_ < s_.size() && s_[i_] != '"') {
        if (s_[i_] == '\\' && i_ + 1 < s_.size()) ++i_;
        text += s_[i_++];
      }
      if (i_ >= s_.size()) return {DotToken::Symbol, "!unterminated"};
      ++i_;
      return {DotToken::String, text};
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      DotToken t{DotToken::Ident, s_.substr(i_, j - i_)};
      i_ = j;
      return t;
    }
    if (c == '-' && i_ + 1 < s_.size() && s_[i_ + 1] == '>') {
      i_ += 2;
      return {DotToken::Symbol, "->"};
    }
    ++i_;
    return {DotToken::Symbol, std::string(1, c)};
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

bool validateDot(const std::string& dot, std::string* error) {
  DotLexer lex(dot);
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg;
    return false;
  };
  DotToken t = lex.next();
  if (t.type != DotToken::Ident || t.text != "digraph") return fail("expected digraph");
  t = lex.next();
  if (t.type == DotToken::Ident) t = lex.next();  // optional graph name
  if (t.type != DotToken::Symbol || t.text != "{") return fail("expected {");
  t = lex.next();
  while (!(t.type == DotToken::Symbol && t.text == "}")) {
    if (t.type != DotToken::Ident) return fail("expected identifier in statement");
    std::string head = t.text;
    t = lex.next();
    if (t.type == DotToken::Symbol && t.text == "=") {
      // graph attribute, e.g. rankdir=BT
      t = lex.next();
      if (t.type != DotToken::Ident && t.type != DotToken::String)
        return fail("expected attribute value");
      t = lex.next();
    } else {
      if (t.type == DotToken::Symbol && t.text == "->") {
        t = lex.next();
        if (t.type != DotToken::Ident) return fail("expected edge target");
        t = lex.next();
      }
      if (t.type == DotToken::Symbol && t.text == "[") {
        t = lex.next();
        while (!(t.type == DotToken::Symbol && t.text == "]")) {
          if (t.type != DotToken::Ident) return fail("expected attribute name");
          t = lex.next();
          if (!(t.type == DotToken::Symbol && t.text == "=")) return fail("expected =");
          t = lex.next();
          if (t.type != DotToken::Ident && t.type != DotToken::String)
            return fail("expected attribute value");
          t = lex.next();
          if (t.type == DotToken::Symbol && t.text == ",") t = lex.next();
        }
        t = lex.next();
      }
    }
    if (!(t.type == DotToken::Symbol && t.text == ";")) return fail("expected ;");
    t = lex.next();
  }
  t = lex.next();
  if (t.type != DotToken::End) return fail("trailing content after }");
  return true;
}

Report checkDocument(const Document& doc, const Limits& limits) {
  Report report(std::string("check ") + Document::kindName(doc.kind) +
                (doc.name.empty() ? "" : " " + doc.name));
  switch (doc.kind) {
    case Document::Kind::Poset: {
      const Poset& p = *doc.poset;
      bool refl = true, trans = true;
      for (int i = 0; i < p.size(); ++i) refl = refl && p.leq(i, i);
      for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j)
          for (int k = 0; k < p.size(); ++k)
            if (p.leq(i, j) && p.leq(j, k) && !p.leq(i, k)) trans = false;
      report.add("reflexive", refl);
      report.add("transitive", trans);
      report.add("antisymmetric", p.isAntisymmetric());
      break;
    }
    case Document::Kind::Lattice: {
      const FiniteLattice& lat = *doc.lattice;
      bool laws = true;
      for (int i = 0; i < lat.size() && laws; ++i)
        for (int j = 0; j < lat.size() && laws; ++j) {
          if (lat.meet(i, j) != lat.meet(j, i) || lat.join(i, j) != lat.join(j, i)) laws = false;
          if (lat.meet(i, lat.join(i, j)) != i) laws = false;
        }
      report.add("meet/join tables satisfy the lattice laws", laws);
      report.add("bounded", lat.bottom() >= 0 && lat.top() >= 0,
                 "bottom=" + lat.label(lat.bottom()) + " top=" + lat.label(lat.top()));
      DistributivityReport d = isDistributive(lat);
      report.add("distributivity (informational)", true, d.distributive ? "yes" : "no");
      break;
    }
    case Document::Kind::Algebra: {
      const OrderedAlgebra& alg = *doc.algebra;
      for (int s = 0; s < alg.sig().size(); ++s) {
        const auto& sym = alg.sig().symbols()[s];
        report.add("interpretation of " + sym.name + " is order-preserving", true);
        OperatorReport op = isOperator(alg, s);
        report.add("operator status of " + sym.name + " (informational)", true,
                   op.isOperator ? "operator" : op.describe(alg.lattice()));
      }
      break;
    }
    case Document::Kind::Presentation: {
      const Presentation& pres = *doc.presentation;
      bool directed = true;
      if (pres.kind() == Presentation::Kind::Dcpo)
        for (const Cover& c : pres.covers())
          if (!isDirected(pres.base(), c.rhs)) directed = false;
      report.add("covers respect the presentation kind", directed,
                 std::to_string(pres.covers().size()) + " covers");
      break;
    }
    case Document::Kind::Inequation: {
      report.add("inequation parses", true,
                 std::to_string(doc.inequation->vars) + " variables");
      break;
    }
    case Document::Kind::Corpus: {
      for (const Document& e : doc.entries) report.merge(checkDocument(e, limits));
      break;
    }
  }
  return report;
}

}  // namespace canext
