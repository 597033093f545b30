// JSON bridge: parsing of input documents (matrix, field data, budget,
// datum flags) and canonical report builders for the classify, growth,
// verdict, and witness commands.  Reports are built with ordered_json and
// fixed key order, so a fixed input yields byte-identical output.

#ifndef TWINLAT_JSON_IO_HPP
#define TWINLAT_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "twinlat/gcm.hpp"
#include "twinlat/growth.hpp"
#include "twinlat/hyperbolic.hpp"
#include "twinlat/roots.hpp"
#include "twinlat/verdict.hpp"

namespace twinlat {

using OrderedJson = nlohmann::ordered_json;

// A parsed input file: exactly one of gcm / coxeter, plus the optional
// field data the verdict pipeline consumes.
struct InputDocument {
  std::optional<IntMat> gcm;
  std::optional<CoxeterMatrix> coxeter;
  std::optional<BigInt> q;
  std::vector<BigInt> root_group_orders;
  std::optional<BigInt> torus_order;
  bool split_kac_moody = true;
  bool root_groups_finite_nilpotent = true;
  bool rank_one_lie_type = true;
  bool center_finite = true;
  bool derived_group_dense = true;
  SearchBudget budget;
};

// Strict parse: unknown keys, malformed matrices, and bad numbers all raise
// InvalidInput with a field-specific message.
InputDocument parse_input_document(const std::string& text);

// The Coxeter matrix of the document, whichever form it came in.
CoxeterMatrix coxeter_of_document(const InputDocument& doc);

// The verdict-pipeline input; requires the gcm form and q.
LatticeInput lattice_input_of(const InputDocument& doc);

// Root literal {"simple": i, "word": [..], "sign": "+"|"-"}; word defaults
// to the empty word and sign to "+".
Root parse_root_literal(const RootCalculus& calc, const std::string& text);

// Numbers are emitted as JSON integers when they fit in 64 bits and as
// decimal strings beyond that; rationals as integers when integral, as
// "p/q" strings otherwise.
OrderedJson bigint_json(const BigInt& x);
OrderedJson bigrat_json(const BigRat& x);

OrderedJson classification_json(const TypeClassification& cls);
OrderedJson root_json(const Root& r);
OrderedJson relation_json(const HalfspaceRelation& rel);
OrderedJson triple_json(const TripleWitness& w);
OrderedJson simplicity_witness_json(const SimplicityWitness& w);
OrderedJson verdict_json(const Verdict& v);

// Full command reports.
OrderedJson classify_report(const InputDocument& doc);
OrderedJson growth_report(const InputDocument& doc, std::optional<int> coeffs,
                          const std::optional<BigInt>& eval_q);
OrderedJson verdict_report(const InputDocument& doc);
// h >= 1 builds the translated configuration for that h; h = 0 builds a
// disjoint triple instead (from beta_literal if given, else from a search).
OrderedJson witness_report(const InputDocument& doc, const std::string& alpha_literal,
                           const std::string& beta_literal, int h);

} // namespace twinlat

#endif
