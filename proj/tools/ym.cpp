// Command-line front end: every subcommand prints one JSON document to
// standard output (or --output) and a short human-readable summary to
// standard error. Identical invocations produce byte-identical JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include "ymcas/acceptance.hpp"
#include "ymcas/errors.hpp"
#include "ymcas/koszul.hpp"
#include "ymcas/orbit.hpp"
#include "ymcas/series.hpp"
#include "ymcas/weyl.hpp"
#include "ymcas/ymquotient.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

using json = nlohmann::ordered_json;
using namespace ymcas;

namespace {

void emit(const json& j, const std::string& output) {
  const std::string text = j.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write output file " + output);
    out << text;
  }
}

json series_to_json(const TruncatedSeries& s) {
  json arr = json::array();
  for (const mpz_class& c : s.coeffs) arr.push_back(c.get_str());
  return arr;
}

Functional load_functional(const GradedNilpotentLie& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open functional file " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("functional file " + path + ": " + e.what());
  }
  if (j.contains("algebra")) {
    const json& a = j.at("algebra");
    if (a.contains("n") && a.at("n").get<int>() != g.n())
      throw std::invalid_argument("functional file declares n = " +
                                  std::to_string(a.at("n").get<int>()) +
                                  ", command line says n = " + std::to_string(g.n()));
    if (a.contains("l") && a.at("l").get<int>() != g.cls())
      throw std::invalid_argument("functional file declares l = " +
                                  std::to_string(a.at("l").get<int>()) +
                                  ", command line says l = " + std::to_string(g.cls()));
  }
  if (!j.contains("coords") || !j.at("coords").is_object())
    throw std::invalid_argument("functional file needs a \"coords\" object");
  std::map<std::string, std::string> coords;
  for (const auto& [label, value] : j.at("coords").items()) {
    if (value.is_string())
      coords.emplace(label, value.get<std::string>());
    else if (value.is_number_integer())
      coords.emplace(label, std::to_string(value.get<long long>()));
    else
      throw std::invalid_argument("coordinate " + label +
                                  " must be a rational string or an integer");
  }
  return functional_from_labels(g, coords);
}

json image_to_json(const WeylElement& w) {
  json terms = json::array();
  for (const auto& [key, c] : w.terms) {
    json alpha = json::array(), beta = json::array();
    for (int e : key.first) alpha.push_back(e);
    for (int e : key.second) beta.push_back(e);
    terms.push_back(json::array({json::array({alpha, beta}), c.str()}));
  }
  return terms;
}

int run_series(int n, int D, const std::string& output) {
  const TruncatedSeries h = hilbert_ym(n, D);
  const DimTable dims = lie_dims_moebius(n, D);
  const TruncatedSeries w = w_series(n, D);

  json j;
  j["n"] = n;
  j["D"] = D;
  j["hilbert"] = series_to_json(h);
  json lie = json::array();
  for (int d = 1; d <= D; ++d) lie.push_back(dims.at(d).get_str());
  j["lie_dims"] = lie;
  j["w"] = series_to_json(w);
  j["pbw_check"] = pbw_check(n, dims, D);
  j["freeness"] = freeness_identity(n, D);
  emit(j, output);

  std::cerr << "ym(" << n << ") graded dimensions up to degree " << D << "\n";
  std::cerr << "  deg :";
  for (int d = 1; d <= D; ++d) std::cerr << " " << d;
  std::cerr << "\n  dim :";
  for (int d = 1; d <= D; ++d) std::cerr << " " << dims.at(d).get_str();
  std::cerr << "\n  pbw_check " << (j["pbw_check"].get<bool>() ? "ok" : "FAIL")
            << ", freeness " << (j["freeness"].get<bool>() ? "ok" : "FAIL") << "\n";
  return 0;
}

int run_quotient(int n, int l, bool verify_paper, bool identities,
                 const std::string& output) {
  const GradedNilpotentLie g = GradedNilpotentLie::build(n, l);

  json j;
  j["n"] = n;
  j["l"] = l;
  j["dim"] = g.dim();
  json dims = json::array();
  for (std::size_t d : g.dims()) dims.push_back(d);
  j["dims"] = dims;
  json labels = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i) labels.push_back(g.label_str(i));
  j["labels"] = labels;

  if (verify_paper) {
    const std::vector<PaperBasisElement> basis = paper_basis(g);
    json pb;
    pb["size"] = basis.size();
    json elems = json::array();
    for (const PaperBasisElement& e : basis) {
      json entry;
      entry["label"] = "x" + word_str(e.label);
      json coords;
      for (const auto& [i, c] : e.coords) coords[g.label_str(i)] = c.str();
      entry["coords"] = coords;
      elems.push_back(entry);
    }
    pb["elements"] = elems;
    j["paper_basis"] = pb;
  }
  if (identities) {
    json ids = json::array();
    for (const auto& [name, holds] : paper_identities(g)) {
      json entry;
      entry["name"] = name;
      entry["holds"] = holds;
      ids.push_back(entry);
    }
    j["identities"] = ids;
  }
  emit(j, output);

  std::cerr << "ym(" << n << ")/C^" << l << ": dim " << g.dim() << " (per degree:";
  for (std::size_t d : g.dims()) std::cerr << " " << d;
  std::cerr << ")\n";
  if (verify_paper)
    std::cerr << "  presentation basis verified, size "
              << j["paper_basis"]["size"].get<std::size_t>() << "\n";
  if (identities)
    for (const auto& entry : j["identities"])
      std::cerr << "  identity " << entry["name"].get<std::string>() << ": "
                << (entry["holds"].get<bool>() ? "holds" : "FAILS") << "\n";
  return 0;
}

int run_koszul(int n, int maxp, const std::string& output) {
  json j;
  j["n"] = n;
  j["max_p"] = maxp;
  json slices = json::array();
  for (int p = 0; p <= maxp; ++p) {
    const HomologyDims h = homology_dims(n, p);
    json s;
    s["p"] = p;
    s["dims"] = json::array({h.h0, h.h1, h.h2, h.h3});
    slices.push_back(s);
  }
  j["slices"] = slices;
  json w = json::array();
  for (std::size_t v : w_dims(n, maxp + 1)) w.push_back(v);
  j["w"] = w;
  emit(j, output);

  std::cerr << "Koszul homology of ym(" << n << "), slices 0.." << maxp << "\n";
  std::cerr << "   p   h0  h1  h2  h3\n";
  for (const auto& s : j["slices"])
    std::cerr << "  " << s["p"].get<int>() << "    " << s["dims"][0].get<std::size_t>()
              << "   " << s["dims"][1].get<std::size_t>() << "   "
              << s["dims"][2].get<std::size_t>() << "   "
              << s["dims"][3].get<std::size_t>() << "\n";
  return 0;
}

int run_orbit(int n, int l, const std::string& fpath, const std::string& output) {
  if (fpath.empty()) throw std::invalid_argument("orbit needs --functional");
  const GradedNilpotentLie g = GradedNilpotentLie::build(n, l);
  const Functional f = load_functional(g, fpath);
  const PolarizationReport rep = standard_polarization(g, f);

  json j;
  j["n"] = n;
  j["l"] = l;
  j["radical_dim"] = rep.radical_dim;
  j["weight"] = rep.weight;
  json basis = json::array();
  for (const auto& row : rep.polarization.basis) {
    json r = json::array();
    for (const Rational& c : row) r.push_back(c.str());
    basis.push_back(r);
  }
  j["polarization_basis"] = basis;
  emit(j, output);

  std::cerr << "ym(" << n << ")/C^" << l << ", functional " << fpath << "\n";
  std::cerr << "  radical dim " << rep.radical_dim << ", polarization dim "
            << rep.polarization.dim() << ", weight " << rep.weight << "\n";
  return 0;
}

int run_weylmap(int n, int l, const std::string& fpath, int depth, int pull_degree,
                const std::string& output) {
  if (fpath.empty()) throw std::invalid_argument("weylmap needs --functional");
  const GradedNilpotentLie g = GradedNilpotentLie::build(n, l);
  const Functional f = load_functional(g, fpath);
  const WeylMapReport rep = ym_weyl_map(g, f, depth);

  json j;
  j["n"] = n;
  j["l"] = l;
  j["weight"] = rep.polarization.weight;
  j["radical_dim"] = rep.polarization.radical_dim;
  json labels = json::array();
  for (const std::string& s : rep.labels) labels.push_back(s);
  j["labels"] = labels;
  json images;
  for (std::size_t i = 0; i < rep.images.size(); ++i)
    images[rep.labels[i]] = image_to_json(rep.images[i]);
  j["images"] = images;
  j["relator_check"] = rep.relator_check;
  j["lie_hom_check"] = rep.lie_hom_check;
  json surj;
  surj["surjective"] = rep.surjectivity.surjective;
  surj["depth"] = rep.surjectivity.depth;
  json wit;
  for (const auto& [target, terms] : rep.surjectivity.witnesses) {
    json arr = json::array();
    for (const WitnessTerm& t : terms) {
      json entry;
      entry["coeff"] = t.coeff.str();
      json word = json::array();
      for (std::size_t idx : t.word) word.push_back(rep.labels[idx]);
      entry["word"] = word;
      arr.push_back(entry);
    }
    wit[target] = arr;
  }
  surj["witnesses"] = wit;
  j["surjectivity"] = surj;

  if (pull_degree >= 0) {
    const PullbackModule mod = pullback_module(rep, pull_degree);
    json pj;
    pj["D"] = mod.D;
    json mons = json::array();
    for (const auto& m : mod.monomials) {
      json mm = json::array();
      for (int e : m) mm.push_back(e);
      mons.push_back(mm);
    }
    pj["monomials"] = mons;
    pj["relator_annihilation"] = mod.relator_annihilation;
    json acts = json::array();
    for (int i = 0; i < n; ++i) {
      const RatMatrix& M = mod.action[static_cast<std::size_t>(i)];
      json entries = json::array();
      for (std::size_t row = 0; row < M.rows(); ++row)
        for (std::size_t col = 0; col < M.cols(); ++col)
          if (!M.at(row, col).is_zero())
            entries.push_back(json::array({row, col, M.at(row, col).str()}));
      json a;
      a["generator"] = "x" + std::to_string(i + 1);
      a["entries"] = entries;
      acts.push_back(a);
    }
    pj["action"] = acts;
    j["pullback"] = pj;
  }
  emit(j, output);

  std::cerr << "ym(" << n << ")/C^" << l << " -> A_" << rep.polarization.weight
            << " via " << fpath << "\n";
  for (std::size_t i = 0; i < rep.images.size(); ++i)
    std::cerr << "  " << rep.labels[i] << " -> " << rep.images[i].str() << "\n";
  std::cerr << "  relators "
            << (rep.relator_check ? "annihilated" : "NOT annihilated")
            << ", bracket compatibility "
            << (rep.lie_hom_check ? "holds" : "FAILS") << "\n";
  if (rep.surjectivity.surjective)
    std::cerr << "  surjective at word length " << rep.surjectivity.depth << "\n";
  else
    std::cerr << "  surjectivity inconclusive at depth " << depth << "\n";
  return 0;
}

int run_verify_all(const std::string& output) {
  const std::vector<CriterionResult> results = run_all();

  json j;
  json arr = json::array();
  bool all = true;
  for (const CriterionResult& r : results) {
    json entry;
    entry["id"] = r.id;
    entry["name"] = r.name;
    entry["passed"] = r.passed;
    entry["detail"] = r.detail;
    arr.push_back(entry);
    all = all && r.passed;
  }
  j["criteria"] = arr;
  j["all_passed"] = all;
  emit(j, output);

  for (const CriterionResult& r : results) {
    std::fprintf(stderr, "%s  criterion %2d  %-34s (%.2fs)  %s\n",
                 r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                 r.detail.c_str());
  }
  std::fprintf(stderr, "%s\n", all ? "all criteria passed" : "FAILURES present");
  return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computer algebra for Yang-Mills Lie algebras: graded "
               "dimensions, nilpotent quotients, Koszul homology, the orbit "
               "method and Weyl-algebra realizations."};
  app.footer("Environment: YMCAS_DEGREE_CAP overrides the built-in degree caps.");
  app.require_subcommand(1);

  int n = 3, l = 3, D = 10, maxp = 4, depth = 3, pull_degree = -1;
  std::string functional, output;

  CLI::App* series = app.add_subcommand("series", "Hilbert series and graded dimension tables");
  series->add_option("--n", n, "number of generators")->required();
  series->add_option("--D", D, "truncation degree")->required();
  series->add_option("--output", output, "write JSON here instead of stdout");

  bool verify_paper = false, identities = false;
  CLI::App* quotient = app.add_subcommand("quotient", "build ym(n)/C^l with exact structure constants");
  quotient->add_option("--n", n, "number of generators")->required();
  quotient->add_option("--l", l, "nilpotency class")->required();
  quotient->add_flag("--verify-paper-basis", verify_paper, "verify the published n=3 bases B_1..B_4");
  quotient->add_flag("--identities", identities, "check the published rewriting identities");
  quotient->add_option("--output", output, "write JSON here instead of stdout");

  CLI::App* koszul = app.add_subcommand("koszul", "Koszul homology slice table and W(n)");
  koszul->add_option("--n", n, "number of generators")->required();
  koszul->add_option("--max-p", maxp, "largest slice index")->required();
  koszul->add_option("--output", output, "write JSON here instead of stdout");

  CLI::App* orbit = app.add_subcommand("orbit", "radical, standard polarization and weight of a functional");
  orbit->add_option("--n", n, "number of generators")->required();
  orbit->add_option("--l", l, "nilpotency class")->required();
  orbit->add_option("--functional", functional, "JSON functional file")->required();
  orbit->add_option("--output", output, "write JSON here instead of stdout");

  CLI::App* weylmap = app.add_subcommand("weylmap", "induced representation and the map into a Weyl algebra");
  weylmap->add_option("--n", n, "number of generators")->required();
  weylmap->add_option("--l", l, "nilpotency class")->required();
  weylmap->add_option("--functional", functional, "JSON functional file")->required();
  weylmap->add_option("--surjectivity-depth", depth, "word-length bound for the surjectivity search");
  weylmap->add_option("--pullback-degree", pull_degree, "also emit generator actions on polynomials of this degree");
  weylmap->add_option("--output", output, "write JSON here instead of stdout");

  CLI::App* verify = app.add_subcommand("verify-all", "run the full acceptance suite");
  verify->add_option("--output", output, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (series->parsed()) return run_series(n, D, output);
    if (quotient->parsed()) return run_quotient(n, l, verify_paper, identities, output);
    if (koszul->parsed()) return run_koszul(n, maxp, output);
    if (orbit->parsed()) return run_orbit(n, l, functional, output);
    if (weylmap->parsed()) return run_weylmap(n, l, functional, depth, pull_degree, output);
    if (verify->parsed()) return run_verify_all(output);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error (bad input): " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error (bad input): " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "error (invariant): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
