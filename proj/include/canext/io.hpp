#pragma once

#include <optional>
#include <string>
#include <variant>

#include "canext/canonical.hpp"
#include "canext/presentation.hpp"

namespace canext {

// A parsed input document. Order pairs are saturated on load; unknown fields
// are rejected.
struct Document {
  enum class Kind { Poset, Lattice, Algebra, Presentation, Inequation, Corpus };
  Kind kind;
  std::string name;  // corpus entries only

  std::optional<Poset> poset;                // Poset
  std::optional<FiniteLattice> lattice;      // Lattice, Algebra
  std::optional<OrderedAlgebra> algebra;     // Algebra
  std::optional<Presentation> presentation;  // Presentation
  std::optional<Inequation> inequation;      // Inequation
  std::vector<std::string> varNames;         // Inequation
  std::vector<Document> entries;             // Corpus

  static const char* kindName(Kind k);
};

Document parseDocument(const std::string& jsonText);
std::string serializeDocument(const Document& doc);
bool documentsEqual(const Document& a, const Document& b);

// Prefix term syntax: atoms are variables or nullary symbols of `sig`;
// compounds are (symbol arg...). Variables get indices from an explicit
// list when given, else by first occurrence.
Term parseTermText(const std::string& text, const Signature& sig,
                   std::vector<std::string>& varNames);
// Inequations are (leq s t).
Inequation parseInequationText(const std::string& text, const Signature& sig);

// One node per element, one edge per covering pair, ranked bottom to top.
std::string emitDot(const Poset& p);
// Minimal grammar check of the digraphs this library emits.
bool validateDot(const std::string& dot, std::string* error = nullptr);

// Structure validation report per document kind.
Report checkDocument(const Document& doc, const Limits& limits = {});

}  // namespace canext
