// Batch front-end over the C API: reads a JSON input document from a file
// or stdin, dispatches one subcommand, and prints the report as JSON or as
// a human-readable text summary whose lines carry the theorem tags.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "twinlat.h"

namespace {

using Json = nlohmann::ordered_json;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Session {
  twinlat_session* s = twinlat_session_new();
  ~Session() { twinlat_session_free(s); }
};

const char* yesno(const Json& j) { return j.get<bool>() ? "yes" : "no"; }

// Numbers beyond 64 bits arrive as decimal strings; render both uniformly.
std::string display(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render_classify(const Json& j, std::ostream& os) {
  os << "type: " << j.at("type").get<std::string>() << "\n";
  os << "irreducible: " << yesno(j.at("irreducible")) << "\n";
  os << "rank: " << j.at("rank") << "\n";
  os << "components:";
  for (const auto& c : j.at("components")) os << " " << c.at("label").get<std::string>();
  os << "\n";
  os << "two-spherical: " << yesno(j.at("two_spherical")) << "\n";
  os << "simply laced: " << yesno(j.at("simply_laced")) << "\n";
  os << "crystallographic: " << yesno(j.at("crystallographic")) << "\n";
}

void render_growth(const Json& j, std::ostream& os) {
  os << "series: " << j.at("display").get<std::string>() << "\n";
  if (j.at("radius").is_null())
    os << "radius of convergence: infinite\n";
  else
    os << "radius of convergence: in (" << display(j.at("radius").at("lo")) << ", "
       << display(j.at("radius").at("hi")) << "]\n";
  if (j.contains("coefficients")) os << "coefficients: " << j.at("coefficients").dump() << "\n";
  if (j.contains("eval")) {
    const Json& e = j.at("eval");
    if (e.at("finite").get<bool>())
      os << "W(1/" << display(e.at("q")) << ") = " << display(e.at("value")) << "\n";
    else
      os << "W(1/" << display(e.at("q")) << ") divergent\n";
  }
}

std::string simplicity_line(const std::string& verdict) {
  if (verdict == "SimpleModCenter") return "simple mod center -- Theorem 5.6";
  if (verdict == "VirtuallySimple") return "virtually simple -- Theorem 5.5";
  if (verdict == "Inapplicable") return "inapplicable -- Theorem 5.6 hypotheses fail";
  return "inconclusive -- Theorem 5.6 hypotheses not settled";
}

void render_verdict(const Json& j, std::ostream& os) {
  os << "classification: " << j.at("classification").at("type").get<std::string>() << "\n";
  os << "q_min: " << display(j.at("q_min")) << "\n";
  os << "irreducible: " << yesno(j.at("irreducible")) << " -- Theorem 5.6 hypothesis\n";
  os << "infinite: " << yesno(j.at("infinite")) << " -- Theorem 5.6 hypothesis\n";
  os << "non-affine: " << yesno(j.at("non_affine")) << " -- Theorem 5.6 hypothesis\n";
  os << "two-spherical: " << yesno(j.at("two_spherical")) << " -- Corollary 5.2 condition (4)\n";
  os << "simply laced: " << yesno(j.at("simply_laced")) << " -- Corollary 5.2 condition (5)\n";
  os << "critical rank-2 pairs: ";
  if (j.at("critical_pairs").empty())
    os << "none";
  else
    os << j.at("critical_pairs").dump();
  os << " -- condition (2-sph)\n";
  const Json& gv = j.at("growth_value");
  os << "lattice: " << yesno(j.at("lattice"));
  if (gv.at("finite").get<bool>()) os << ", W(1/q_min) = " << display(gv.at("value"));
  os << " -- Proposition 1.3\n";
  os << "rank-one groups perfect: " << yesno(j.at("rank_one_perfect"))
     << " -- Theorem 5.5 (S3+)\n";
  os << "simplicity: " << simplicity_line(j.at("simplicity").get<std::string>()) << "\n";
  os << "finite quotient bound: " << display(j.at("finite_quotient_bound"))
     << " -- Corollary 5.2\n";
  os << "quotients trivial: " << yesno(j.at("quotients_trivial"));
  if (!j.at("quotient_conditions").empty())
    os << " via conditions " << j.at("quotient_conditions").dump();
  os << " -- Corollary 5.2\n";
  os << "kazhdan: " << yesno(j.at("kazhdan")) << " (threshold "
     << display(j.at("kazhdan_threshold")) << ") -- Corollary 5.8\n";
  os << "finitely presented: " << yesno(j.at("finitely_presented")) << " -- Corollary 5.8\n";
  os << "flat rank >= 2: " << yesno(j.at("flat_rank_geq_2")) << " -- Section 8.4\n";
  os << "fprs guaranteed: " << yesno(j.at("fprs_guaranteed")) << " -- Proposition 3.1\n";
  os << "commensurator discrete: " << yesno(j.at("commensurator_discrete"))
     << " -- Corollary 5.4\n";
}

void render_root(const char* name, const Json& r, std::ostream& os) {
  std::string w;
  for (const auto& x : r.at("word")) {
    if (!w.empty()) w += ' ';
    w += x.dump();
  }
  os << name << ": vec " << r.at("vec").dump() << " (word \"" << w << "\", simple "
     << r.at("simple") << ")\n";
}

void render_relation(const char* name, const Json& rel, std::ostream& os) {
  os << name << ": " << rel.at("kind").get<std::string>();
  if (rel.contains("empty_quadrant"))
    os << ", empty quadrant " << rel.at("empty_quadrant").get<std::string>();
  os << ", radius " << rel.at("radius_used") << "\n";
}

void render_triple(const Json& t, std::ostream& os) {
  render_root("alpha", t.at("alpha"), os);
  render_root("beta", t.at("beta"), os);
  render_root("gamma", t.at("gamma"), os);
  render_relation("alpha/beta", t.at("alpha_beta"), os);
  render_relation("alpha/gamma", t.at("alpha_gamma"), os);
  render_relation("beta/gamma", t.at("beta_gamma"), os);
  os << "pairwise disjoint triple certified, search radius " << t.at("search_radius")
     << " -- Theorem 4.2\n";
}

void render_witness(const Json& j, std::ostream& os) {
  if (!j.contains("h")) {
    render_triple(j, os);
    return;
  }
  render_root("alpha", j.at("alpha"), os);
  os << "h: " << j.at("h") << "\n";
  render_root("eta", j.at("eta"), os);
  os << "tau: \"" << j.at("tau").get<std::string>() << "\"\n";
  render_root("beta", j.at("beta"), os);
  render_root("xi", j.at("xi"), os);
  os << "tau_prime: \"" << j.at("tau_prime").get<std::string>() << "\"\n";
  render_root("gamma", j.at("gamma"), os);
  os << "translated configuration beta = tau^h(-alpha), gamma = tau'^h(-beta)"
     << " -- Theorem 5.1\n";
  render_triple(j.at("triple"), os);
}

int emit(twinlat_status st, twinlat_session* s, char* out, const std::string& format,
         void (*render)(const Json&, std::ostream&)) {
  if (st != TWINLAT_OK) {
    std::cerr << "error: " << twinlat_last_error(s) << "\n";
    return static_cast<int>(st);
  }
  if (format == "json") {
    std::cout << out << "\n";
  } else {
    render(Json::parse(out), std::cout);
  }
  twinlat_string_free(out);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision tool for twin building lattice hypotheses"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string cls_file, gro_file, ver_file, wit_file;
  auto* cls = app.add_subcommand("classify", "diagram classification of the input matrix");
  cls->add_option("file", cls_file, "input document (default stdin)");

  auto* gro = app.add_subcommand("growth", "growth series of the Weyl group");
  gro->add_option("file", gro_file, "input document (default stdin)");
  int coeffs = -1;
  gro->add_option("--coeffs", coeffs, "print Taylor coefficients c_0..c_N")
      ->check(CLI::NonNegativeNumber);
  std::string eval_q;
  gro->add_option("--eval", eval_q, "evaluate the series at 1/q");

  auto* ver = app.add_subcommand("verdict", "full hypothesis and bound report");
  ver->add_option("file", ver_file, "input document (default stdin)");

  auto* wit = app.add_subcommand("witness", "certified disjointness witnesses");
  // Frees the short -h so the option below can use the long name --h.
  wit->set_help_flag("--help", "print this help message and exit");
  wit->add_option("file", wit_file, "input document (default stdin)");
  std::string alpha, beta;
  wit->add_option("--alpha", alpha, "root literal for alpha")->required();
  wit->add_option("--beta", beta, "root literal pairing alpha in a triple");
  int h = 0;
  wit->add_option("--h", h, "translation power; 0 builds a disjoint triple instead")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  Session session;
  if (!session.s) {
    std::cerr << "error: cannot create session\n";
    return static_cast<int>(TWINLAT_INTERNAL);
  }

  if (const char* env = std::getenv("TWINLAT_BUDGET")) {
    char* end = nullptr;
    unsigned long long cap = std::strtoull(env, &end, 10);
    if (!end || *end != '\0' || cap == 0) {
      std::cerr << "error: TWINLAT_BUDGET must be a positive integer\n";
      return static_cast<int>(TWINLAT_INVALID_INPUT);
    }
    twinlat_set_ball_cap(session.s, static_cast<size_t>(cap));
  }

  try {
    char* out = nullptr;
    if (*cls) {
      const std::string doc = read_input(cls_file);
      const twinlat_status st = twinlat_classify(session.s, doc.c_str(), &out);
      return emit(st, session.s, out, format, render_classify);
    }
    if (*gro) {
      const std::string doc = read_input(gro_file);
      const twinlat_status st =
          twinlat_growth(session.s, doc.c_str(), coeffs,
                         eval_q.empty() ? nullptr : eval_q.c_str(), &out);
      return emit(st, session.s, out, format, render_growth);
    }
    if (*ver) {
      const std::string doc = read_input(ver_file);
      const twinlat_status st = twinlat_verdict(session.s, doc.c_str(), &out);
      return emit(st, session.s, out, format, render_verdict);
    }
    const std::string doc = read_input(wit_file);
    const twinlat_status st =
        twinlat_witness(session.s, doc.c_str(), alpha.c_str(),
                        beta.empty() ? nullptr : beta.c_str(), h, &out);
    return emit(st, session.s, out, format, render_witness);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(TWINLAT_INVALID_INPUT);
  }
}
