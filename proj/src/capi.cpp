#include "canext.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "canext/corpus.hpp"
#include "canext/error.hpp"
#include "canext/io.hpp"

using namespace canext;

struct canext_doc {
  Document doc;
};

namespace {

thread_local std::string lastError;

char* dupString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Limits limitsFrom(const canext_opts* opts) {
  Limits l;
  if (opts && opts->max_size > 0) l.maxCarrier = opts->max_size;
  return l;
}

std::string renderReport(const Report& r, const canext_opts* opts) {
  return opts && opts->json ? r.json() : r.text();
}

// Runs `body`, mapping exceptions to CANEXT_ERROR and a failing report to
// CANEXT_FAIL.
template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    lastError = e.what();
    return CANEXT_ERROR;
  } catch (const std::exception& e) {
    lastError = e.what();
    return CANEXT_ERROR;
  }
}

int reportResult(const Report& r, const canext_opts* opts, char** out) {
  if (out) *out = dupString(renderReport(r, opts));
  return r.ok() ? CANEXT_OK : CANEXT_FAIL;
}

const Document& need(const canext_doc* doc) {
  if (!doc) throw PreconditionError("null document handle");
  return doc->doc;
}

const FiniteLattice& needLattice(const canext_doc* doc) {
  const Document& d = need(doc);
  if (!d.lattice) throw PreconditionError("document does not carry a lattice");
  return *d.lattice;
}

const Presentation& needPresentation(const canext_doc* doc) {
  const Document& d = need(doc);
  if (!d.presentation) throw PreconditionError("document is not a presentation");
  return *d.presentation;
}

std::string carrierDocument(const FiniteLattice& lat) {
  Document d;
  d.kind = Document::Kind::Lattice;
  d.lattice = lat;
  return serializeDocument(d);
}

Report familyReport(const std::string& title, const Preorder& base,
                    const std::vector<Subset>& sets) {
  Report r(title);
  for (const Subset& s : sets) r.add(s.describe(base.labels()), true);
  r.add("count", true, std::to_string(sets.size()));
  return r;
}

}  // namespace

extern "C" {

void canext_opts_init(canext_opts* opts) {
  if (!opts) return;
  opts->seed = 0;
  opts->max_size = 0;
  opts->json = 0;
}

const char* canext_last_error(void) { return lastError.c_str(); }

void canext_free_str(char* s) { std::free(s); }

int canext_parse(const char* json_text, canext_doc** out) {
  return guarded([&]() {
    if (!json_text || !out) throw PreconditionError("null argument");
    auto* handle = new canext_doc{parseDocument(json_text)};
    *out = handle;
    return CANEXT_OK;
  });
}

int canext_parse_file(const char* path, canext_doc** out) {
  return guarded([&]() {
    if (!path || !out) throw PreconditionError("null argument");
    std::ifstream in(path);
    if (!in) throw SchemaError(std::string("cannot open file ") + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    auto* handle = new canext_doc{parseDocument(buf.str())};
    *out = handle;
    return CANEXT_OK;
  });
}

const char* canext_doc_kind(const canext_doc* doc) {
  if (!doc) return "";
  return Document::kindName(doc->doc.kind);
}

int canext_serialize(const canext_doc* doc, char** out_text) {
  return guarded([&]() {
    if (!out_text) throw PreconditionError("null argument");
    *out_text = dupString(serializeDocument(need(doc)));
    return CANEXT_OK;
  });
}

void canext_doc_free(canext_doc* doc) { delete doc; }

int canext_check(const canext_doc* doc, const canext_opts* opts, char** report) {
  return guarded([&]() {
    return reportResult(checkDocument(need(doc), limitsFrom(opts)), opts, report);
  });
}

int canext_complete(const canext_doc* doc, const char* which, const canext_opts* opts,
                    char** report, char** carrier_doc) {
  return guarded([&]() {
    const FiniteLattice& lat = needLattice(doc);
    const Limits limits = limitsFrom(opts);
    std::string mode = which ? which : "filters";
    Report r("completion");
    if (mode == "filters") {
      FilterCompletion fc = filterCompletion(lat, limits);
      r.add("filters", true, std::to_string(fc.filters.size()));
      for (std::size_t i = 0; i < fc.filters.size(); ++i)
        r.add(fc.carrier.label(static_cast<int>(i)), true,
              fc.filters[i].describe(lat.poset().labels()));
      r.merge(checkCoCompletionAxioms(fc, limits));
      if (carrier_doc) *carrier_doc = dupString(carrierDocument(fc.carrier));
    } else if (mode == "ideals") {
      IdealCompletion ic = idealCompletion(lat, limits);
      r.add("ideals", true, std::to_string(ic.ideals.size()));
      for (std::size_t i = 0; i < ic.ideals.size(); ++i)
        r.add(ic.carrier.label(static_cast<int>(i)), true,
              ic.ideals[i].describe(lat.poset().labels()));
      if (carrier_doc) *carrier_doc = dupString(carrierDocument(ic.carrier));
    } else {
      throw PreconditionError("complete: mode must be \"filters\" or \"ideals\"");
    }
    return reportResult(r, opts, report);
  });
}

int canext_present_close(const canext_doc* pres, const char* set_csv,
                         const canext_opts* opts, char** report) {
  return guarded([&]() {
    const Presentation& p = needPresentation(pres);
    Subset start(p.base().size());
    std::string csv = set_csv ? set_csv : "";
    std::size_t pos = 0;
    while (pos < csv.size()) {
      std::size_t comma = csv.find(',', pos);
      if (comma == std::string::npos) comma = csv.size();
      std::string label = csv.substr(pos, comma - pos);
      if (!label.empty()) {
        int idx = -1;
        for (int i = 0; i < p.base().size(); ++i)
          if (p.base().label(i) == label) idx = i;
        if (idx < 0) throw SchemaError("unknown element \"" + label + "\"");
        start.set(idx);
      }
      pos = comma + 1;
    }
    Subset closed = cIdealClosure(p, start);
    Report r("closure");
    r.add("input", true, start.describe(p.base().labels()));
    r.add("closure", true, closed.describe(p.base().labels()));
    return reportResult(r, opts, report);
  });
}

int canext_present_enumerate(const canext_doc* pres, const canext_opts* opts,
                             char** report) {
  return guarded([&]() {
    const Presentation& p = needPresentation(pres);
    CIdealFamily fam = allCIdeals(p, limitsFrom(opts));
    return reportResult(familyReport("C-ideals", p.base(), fam.ideals), opts, report);
  });
}

int canext_present_free(const canext_doc* pres, const canext_opts* opts, char** report) {
  return guarded([&]() {
    const Presentation& p = needPresentation(pres);
    FreeDcpo fd = freeDcpo(p, limitsFrom(opts));
    return reportResult(familyReport("free dcpo carrier", p.base(), fd.family), opts,
                        report);
  });
}

int canext_present_verify_universal(const canext_doc* pres, const canext_doc* target,
                                    const canext_opts* opts, char** report) {
  return guarded([&]() {
    const Presentation& p = needPresentation(pres);
    const FiniteLattice& d = needLattice(target);
    return reportResult(universalPropertyOracle(p, d, limitsFrom(opts)), opts, report);
  });
}

int canext_canon_ext(const canext_doc* lattice, const canext_opts* opts, char** report,
                     char** carrier_doc) {
  return guarded([&]() {
    const FiniteLattice& lat = needLattice(lattice);
    const Limits limits = limitsFrom(opts);
    CanonicalExtension ce = canonicalExtension(lat, limits);
    Report r("canonical extension");
    r.add("carrier size", true, std::to_string(ce.carrier.size()));
    for (int i = 0; i < ce.carrier.size(); ++i)
      r.add(ce.carrier.label(i), true);
    r.add("closed elements", true, std::to_string(closedElements(ce, limits).size()));
    if (carrier_doc) *carrier_doc = dupString(carrierDocument(ce.carrier));
    return reportResult(r, opts, report);
  });
}

int canext_canon_verify(const canext_doc* lattice, const canext_opts* opts,
                        char** report) {
  return guarded([&]() {
    const FiniteLattice& lat = needLattice(lattice);
    const Limits limits = limitsFrom(opts);
    CanonicalExtension ce = canonicalExtension(lat, limits);
    Report r = verifyDensityCompactness(ce, limits);
    bool iso = ce.carrier.size() == lat.size();
    std::vector<bool> hit(ce.carrier.size(), false);
    for (int x : ce.embed) hit[x] = true;
    for (bool h : hit) iso = iso && h;
    r.add("embedding is an order-isomorphism (finite collapse)", iso);
    return reportResult(r, opts, report);
  });
}

int canext_canon_check_eq(const canext_doc* algebra, const char* inequation,
                          const canext_opts* opts, char** report) {
  return guarded([&]() {
    const Document& d = need(algebra);
    if (!d.algebra) throw PreconditionError("document is not an algebra");
    if (!inequation) throw PreconditionError("missing inequation");
    Inequation ineq = parseInequationText(inequation, d.algebra->sig());
    Report r = checkCanonicity(*d.algebra, ineq, limitsFrom(opts));
    if (r.ok() && r.items().size() > 1) {
      Report wrapped("canonicity: " + ineq.text());
      wrapped.merge(r);
      wrapped.add("canonical", true);
      return reportResult(wrapped, opts, report);
    }
    return reportResult(r, opts, report);
  });
}

int canext_corpus_run(const canext_opts* opts, char** report) {
  return guarded([&]() {
    const Limits limits = limitsFrom(opts);
    Report r = corpus::runAcceptance(opts ? opts->seed : 0, limits);
    return reportResult(r, opts, report);
  });
}

int canext_emit_dot(const canext_doc* doc, char** dot_text) {
  return guarded([&]() {
    if (!dot_text) throw PreconditionError("null argument");
    const Document& d = need(doc);
    const Poset* p = nullptr;
    if (d.poset)
      p = &*d.poset;
    else if (d.lattice)
      p = &d.lattice->poset();
    else if (d.presentation) {
      if (!d.presentation->base().isAntisymmetric())
        throw PreconditionError("presentation base is not a poset");
      static thread_local Poset tmp;
      tmp = Poset(d.presentation->base());
      p = &tmp;
    } else {
      throw PreconditionError("document has no poset-like structure");
    }
    *dot_text = dupString(emitDot(*p));
    return CANEXT_OK;
  });
}

}  // extern "C"
