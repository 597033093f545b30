#include "twinlat/json_io.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>

#include "twinlat/errors.hpp"

namespace twinlat {

namespace {

[[noreturn]] void bad(const std::string& msg) { fail(ErrorCode::InvalidInput, msg); }

void require_keys(const OrderedJson& obj, const std::vector<std::string>& allowed,
                  const char* where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const auto& k : allowed)
      if (item.key() == k) known = true;
    if (!known) bad(std::string("unknown key \"") + item.key() + "\" in " + where);
  }
}

long long to_int(const OrderedJson& v, const char* what) {
  if (!v.is_number_integer()) bad(std::string(what) + " must be an integer");
  return v.get<long long>();
}

BigInt to_bigint(const OrderedJson& v, const char* what) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
    return BigInt(v.get<long long>());
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) bad(std::string(what) + " is not a decimal integer");
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        bad(std::string(what) + " is not a decimal integer");
    return BigInt(s);
  }
  bad(std::string(what) + " must be an integer or a decimal string");
}

IntMat parse_gcm_matrix(const OrderedJson& v) {
  if (!v.is_array() || v.empty()) bad("\"gcm\" must be a non-empty array of rows");
  const int n = static_cast<int>(v.size());
  IntMat a(n, 0);
  for (int i = 0; i < n; ++i) {
    const auto& row = v[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      bad("\"gcm\" must be square");
    for (int j = 0; j < n; ++j)
      a.at(i, j) = to_int(row[static_cast<size_t>(j)], "gcm entry");
  }
  validate_gcm(a);
  return a;
}

CoxeterMatrix parse_coxeter_matrix(const OrderedJson& v) {
  if (!v.is_array() || v.empty()) bad("\"coxeter\" must be a non-empty array of rows");
  const int n = static_cast<int>(v.size());
  std::vector<std::vector<int>> m(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto& row = v[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      bad("\"coxeter\" must be square");
    for (int j = 0; j < n; ++j) {
      const auto& e = row[static_cast<size_t>(j)];
      if (e.is_string()) {
        if (e.get<std::string>() != "inf") bad("coxeter entries are integers or \"inf\"");
        m[static_cast<size_t>(i)].push_back(kInfiniteOrder);
      } else {
        long long x = to_int(e, "coxeter entry");
        if (x < 1 || x > kInfiniteOrder) bad("coxeter entry out of range");
        m[static_cast<size_t>(i)].push_back(static_cast<int>(x));
      }
    }
  }
  return CoxeterMatrix::from_entries(m);
}

SearchBudget parse_budget(const OrderedJson& v) {
  if (!v.is_object()) bad("\"budget\" must be an object");
  require_keys(v, {"ball_cap", "radius_schedule"}, "budget");
  SearchBudget b;
  if (v.contains("ball_cap")) {
    long long cap = to_int(v.at("ball_cap"), "ball_cap");
    if (cap < 1) bad("ball_cap must be positive");
    b.ball_cap = static_cast<std::size_t>(cap);
  }
  if (v.contains("radius_schedule")) {
    const auto& sched = v.at("radius_schedule");
    if (!sched.is_array() || sched.empty()) bad("radius_schedule must be a non-empty array");
    b.radius_schedule.clear();
    for (const auto& e : sched) {
      long long r = to_int(e, "radius_schedule entry");
      if (r < 0 || r > 64) bad("radius_schedule entry out of range");
      b.radius_schedule.push_back(static_cast<int>(r));
    }
  }
  return b;
}

bool to_bool(const OrderedJson& v, const char* what) {
  if (!v.is_boolean()) bad(std::string(what) + " must be a boolean");
  return v.get<bool>();
}

std::string word_string(const Word& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << w[i];
  }
  return os.str();
}

std::string quadrant_string(const QuadrantSign& q) {
  std::string s;
  s += q.first_positive ? '+' : '-';
  s += q.second_positive ? '+' : '-';
  return s;
}

const char* relation_kind_string(RelationKind k) {
  switch (k) {
    case RelationKind::Equal: return "equal";
    case RelationKind::Opposite: return "opposite";
    case RelationKind::Crossing: return "crossing";
    case RelationKind::Nested: return "nested";
  }
  fail(ErrorCode::Internal, "unknown relation kind");
}

const char* diagram_kind_string(DiagramKind k) {
  switch (k) {
    case DiagramKind::Spherical: return "spherical";
    case DiagramKind::Affine: return "affine";
    case DiagramKind::Indefinite: return "indefinite";
  }
  fail(ErrorCode::Internal, "unknown diagram kind");
}

OrderedJson intvec_json(const IntVec& v) {
  OrderedJson a = OrderedJson::array();
  for (const auto& x : v) a.push_back(bigint_json(x));
  return a;
}

OrderedJson poly_json(const Poly& p) {
  OrderedJson a = OrderedJson::array();
  for (const auto& c : p.coeffs()) a.push_back(bigint_json(c));
  return a;
}

OrderedJson evaluation_json(const Evaluation& e) {
  OrderedJson j = OrderedJson::object();
  j["finite"] = e.finite;
  if (e.finite) j["value"] = bigrat_json(e.value);
  return j;
}

} // namespace

InputDocument parse_input_document(const std::string& text) {
  OrderedJson j;
  try {
    j = OrderedJson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("input is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("input document must be a JSON object");
  require_keys(j,
               {"gcm", "coxeter", "q", "root_group_orders", "torus_order", "budget",
                "split_kac_moody", "root_groups_finite_nilpotent", "rank_one_lie_type",
                "center_finite", "derived_group_dense"},
               "the input document");

  InputDocument doc;
  if (j.contains("gcm") == j.contains("coxeter"))
    bad("exactly one of \"gcm\" and \"coxeter\" is required");
  if (j.contains("gcm")) doc.gcm = parse_gcm_matrix(j.at("gcm"));
  if (j.contains("coxeter")) doc.coxeter = parse_coxeter_matrix(j.at("coxeter"));

  if (j.contains("q")) {
    doc.q = to_bigint(j.at("q"), "\"q\"");
    if (*doc.q < 2) bad("\"q\" must be at least 2");
  }
  if (j.contains("root_group_orders")) {
    const auto& arr = j.at("root_group_orders");
    if (!arr.is_array() || arr.empty()) bad("\"root_group_orders\" must be a non-empty array");
    for (const auto& e : arr)
      doc.root_group_orders.push_back(to_bigint(e, "root group order"));
  }
  if (j.contains("torus_order")) doc.torus_order = to_bigint(j.at("torus_order"), "\"torus_order\"");
  if (j.contains("budget")) doc.budget = parse_budget(j.at("budget"));
  if (j.contains("split_kac_moody"))
    doc.split_kac_moody = to_bool(j.at("split_kac_moody"), "\"split_kac_moody\"");
  if (j.contains("root_groups_finite_nilpotent"))
    doc.root_groups_finite_nilpotent =
        to_bool(j.at("root_groups_finite_nilpotent"), "\"root_groups_finite_nilpotent\"");
  if (j.contains("rank_one_lie_type"))
    doc.rank_one_lie_type = to_bool(j.at("rank_one_lie_type"), "\"rank_one_lie_type\"");
  if (j.contains("center_finite"))
    doc.center_finite = to_bool(j.at("center_finite"), "\"center_finite\"");
  if (j.contains("derived_group_dense"))
    doc.derived_group_dense = to_bool(j.at("derived_group_dense"), "\"derived_group_dense\"");
  return doc;
}

CoxeterMatrix coxeter_of_document(const InputDocument& doc) {
  if (doc.coxeter) return *doc.coxeter;
  return coxeter_of(*doc.gcm);
}

LatticeInput lattice_input_of(const InputDocument& doc) {
  if (!doc.gcm) bad("this command requires the \"gcm\" input form");
  if (!doc.q) bad("this command requires \"q\"");
  LatticeInput in(*doc.gcm, *doc.q);
  in.root_group_orders = doc.root_group_orders;
  in.torus_order = doc.torus_order;
  in.split_kac_moody = doc.split_kac_moody;
  in.root_groups_finite_nilpotent = doc.root_groups_finite_nilpotent;
  in.rank_one_lie_type = doc.rank_one_lie_type;
  in.center_finite = doc.center_finite;
  in.derived_group_dense = doc.derived_group_dense;
  in.budget = doc.budget;
  return in;
}

Root parse_root_literal(const RootCalculus& calc, const std::string& text) {
  OrderedJson j;
  try {
    j = OrderedJson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("root literal is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("root literal must be a JSON object");
  require_keys(j, {"simple", "word", "sign"}, "the root literal");
  if (!j.contains("simple")) bad("root literal requires \"simple\"");
  long long simple = to_int(j.at("simple"), "\"simple\"");
  Word word;
  if (j.contains("word")) {
    const auto& arr = j.at("word");
    if (!arr.is_array()) bad("\"word\" must be an array of generator indices");
    for (const auto& e : arr) word.push_back(static_cast<int>(to_int(e, "word entry")));
  }
  bool positive = true;
  if (j.contains("sign")) {
    if (!j.at("sign").is_string()) bad("\"sign\" must be \"+\" or \"-\"");
    const std::string s = j.at("sign").get<std::string>();
    if (s == "+") positive = true;
    else if (s == "-") positive = false;
    else bad("\"sign\" must be \"+\" or \"-\"");
  }
  return calc.from_witness(word, static_cast<int>(simple), positive);
}

OrderedJson bigint_json(const BigInt& x) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (x >= lo && x <= hi) return OrderedJson(x.convert_to<std::int64_t>());
  return OrderedJson(x.str());
}

OrderedJson bigrat_json(const BigRat& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return bigint_json(num);
  return OrderedJson(num.str() + "/" + den.str());
}

OrderedJson classification_json(const TypeClassification& cls) {
  OrderedJson j = OrderedJson::object();
  j["type"] = cls.type_string();
  j["kind"] = diagram_kind_string(cls.kind);
  j["irreducible"] = cls.irreducible;
  OrderedJson comps = OrderedJson::array();
  for (const auto& c : cls.components) {
    OrderedJson cj = OrderedJson::object();
    cj["kind"] = diagram_kind_string(c.kind);
    cj["label"] = c.label();
    cj["vertices"] = c.vertices;
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  return j;
}

OrderedJson root_json(const Root& r) {
  OrderedJson j = OrderedJson::object();
  j["word"] = r.witness_word();
  j["simple"] = r.witness_simple();
  j["vec"] = intvec_json(r.vec());
  j["covec"] = intvec_json(r.covec());
  return j;
}

OrderedJson relation_json(const HalfspaceRelation& rel) {
  OrderedJson j = OrderedJson::object();
  j["kind"] = relation_kind_string(rel.kind);
  if (rel.kind == RelationKind::Nested) {
    j["empty_quadrant"] = quadrant_string(rel.empty_quadrant);
    OrderedJson ws = OrderedJson::array();
    for (const auto& w : rel.witnesses) {
      OrderedJson wj = OrderedJson::object();
      wj["quadrant"] = quadrant_string(w.quadrant);
      wj["chamber"] = word_string(w.chamber.word());
      ws.push_back(std::move(wj));
    }
    j["witnesses"] = std::move(ws);
  }
  j["radius_used"] = rel.radius_used;
  return j;
}

OrderedJson triple_json(const TripleWitness& w) {
  OrderedJson j = OrderedJson::object();
  j["alpha"] = root_json(w.alpha);
  j["beta"] = root_json(w.beta);
  j["gamma"] = root_json(w.gamma);
  j["alpha_beta"] = relation_json(w.rel_alpha_beta);
  j["alpha_gamma"] = relation_json(w.rel_alpha_gamma);
  j["beta_gamma"] = relation_json(w.rel_beta_gamma);
  j["search_radius"] = w.search_radius;
  return j;
}

OrderedJson simplicity_witness_json(const SimplicityWitness& w) {
  OrderedJson j = OrderedJson::object();
  j["alpha"] = root_json(w.alpha);
  j["h"] = w.h;
  j["eta"] = root_json(w.eta);
  j["tau"] = word_string(w.tau.word());
  j["beta"] = root_json(w.beta);
  j["xi"] = root_json(w.xi);
  j["tau_prime"] = word_string(w.tau_prime.word());
  j["gamma"] = root_json(w.gamma);
  j["triple"] = triple_json(w.triple);
  return j;
}

OrderedJson verdict_json(const Verdict& v) {
  OrderedJson j = OrderedJson::object();
  j["classification"] = classification_json(v.classification);
  OrderedJson orders = OrderedJson::array();
  for (const auto& o : v.root_group_orders) orders.push_back(bigint_json(o));
  j["root_group_orders"] = std::move(orders);
  j["q_min"] = bigint_json(v.q_min);
  j["torus_order"] = bigint_json(v.torus_order);
  j["irreducible"] = v.irreducible;
  j["infinite"] = v.infinite;
  j["non_affine"] = v.non_affine;
  j["two_spherical"] = v.two_spherical;
  OrderedJson pairs = OrderedJson::array();
  for (const auto& p : v.critical_pairs) pairs.push_back(OrderedJson::array({p.first, p.second}));
  j["critical_pairs"] = std::move(pairs);
  j["simply_laced"] = v.simply_laced;
  j["lattice"] = v.lattice;
  j["growth_value"] = evaluation_json(v.growth_value);
  j["rank_one_perfect"] = v.rank_one_perfect;
  j["simplicity"] = to_string(v.simplicity);
  j["finite_quotient_bound"] = bigint_json(v.finite_quotient_bound);
  j["quotients_trivial"] = v.quotients_trivial;
  j["quotient_conditions"] = v.quotient_conditions;
  j["kazhdan"] = v.kazhdan;
  j["kazhdan_threshold"] = bigint_json(v.kazhdan_threshold_value);
  j["finitely_presented"] = v.finitely_presented;
  j["flat_rank_geq_2"] = v.flat_rank_geq_2;
  j["fprs_guaranteed"] = v.fprs_guaranteed;
  j["commensurator_discrete"] = v.commensurator_discrete;
  OrderedJson trail = OrderedJson::object();
  for (const auto& [flag, checks] : v.trail) {
    OrderedJson list = OrderedJson::array();
    for (const auto& c : checks) {
      OrderedJson cj = OrderedJson::object();
      cj["check"] = c.name;
      cj["holds"] = c.holds;
      list.push_back(std::move(cj));
    }
    trail[flag] = std::move(list);
  }
  j["trail"] = std::move(trail);
  return j;
}

OrderedJson classify_report(const InputDocument& doc) {
  const CoxeterMatrix cox = coxeter_of_document(doc);
  const TypeClassification cls = classify(cox);
  OrderedJson j = classification_json(cls);
  j["rank"] = cox.rank();
  j["two_spherical"] = is_two_spherical(cox);
  j["simply_laced"] = is_simply_laced(cox);
  j["crystallographic"] = is_crystallographic(cox);
  return j;
}

OrderedJson growth_report(const InputDocument& doc, std::optional<int> coeffs,
                          const std::optional<BigInt>& eval_q) {
  const CoxeterMatrix cox = coxeter_of_document(doc);
  const GrowthSeries s = growth_series(cox);
  OrderedJson j = OrderedJson::object();
  j["num"] = poly_json(s.num);
  j["den"] = poly_json(s.den);
  j["display"] = "(" + s.num.to_string() + ") / (" + s.den.to_string() + ")";
  if (s.radius) {
    OrderedJson r = OrderedJson::object();
    r["lo"] = bigrat_json(s.radius->lo);
    r["hi"] = bigrat_json(s.radius->hi);
    j["radius"] = std::move(r);
  } else {
    j["radius"] = nullptr;
  }
  if (coeffs) {
    if (*coeffs < 0) bad("the coefficient count must be non-negative");
    OrderedJson a = OrderedJson::array();
    for (const auto& c : taylor_coefficients(s, *coeffs)) a.push_back(bigint_json(c));
    j["coefficients"] = std::move(a);
  }
  if (eval_q) {
    if (*eval_q < 1) bad("the evaluation point q must be at least 1");
    OrderedJson e = evaluation_json(evaluate_at(s, BigRat(BigInt(1), *eval_q)));
    OrderedJson out = OrderedJson::object();
    out["q"] = bigint_json(*eval_q);
    for (auto& item : e.items()) out[item.key()] = item.value();
    j["eval"] = std::move(out);
  }
  return j;
}

OrderedJson verdict_report(const InputDocument& doc) {
  return verdict_json(analyze(lattice_input_of(doc)));
}

OrderedJson witness_report(const InputDocument& doc, const std::string& alpha_literal,
                           const std::string& beta_literal, int h) {
  if (!doc.gcm) bad("this command requires the \"gcm\" input form");
  if (h < 0) bad("h must be non-negative");
  WeylSystem sys(*doc.gcm);
  RootCalculus calc(sys);
  HyperbolicSearch search(calc, doc.budget);
  if (alpha_literal.empty()) bad("a root literal for alpha is required");
  const Root alpha = parse_root_literal(calc, alpha_literal);
  if (h >= 1) {
    if (!beta_literal.empty()) bad("beta cannot be combined with h");
    return simplicity_witness_json(search.simplicity_witness(alpha, h));
  }
  Root beta = beta_literal.empty() ? search.find_disjoint_root(alpha).eta
                                   : parse_root_literal(calc, beta_literal);
  return triple_json(search.find_disjoint_triple(alpha, beta));
}

} // namespace twinlat
