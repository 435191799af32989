#include <CLI11.hpp>
#include <dres/dres.hpp>
#include <dres/json_io.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

struct Options {
  std::string file;
  bool json = false;
  std::string perturbation;
  bool no_fallback = false;
  bool certificate = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dres::SemanticError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json strings(const std::vector<dres::LinPoly>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(dres::to_string(p));
  return a;
}

template <typename R>
json matrix_json(const dres::Matrix<R>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(dres::to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

// Which perturbation to use: nullopt for the default (with fallback).
std::optional<dres::Perturbation> chosen_perturbation(const Options& o, const dres::Document& doc) {
  if (o.perturbation.empty()) return doc.phi;
  if (o.perturbation == "default") return std::nullopt;
  return dres::parse_perturbation(o.perturbation, doc.sys.field, doc.sys.n());
}

void print_certificate(const dres::Certificate& c) {
  std::cout << "rank_S: " << c.rank_S << "\n"
            << "L: " << c.L << "\n"
            << "N: " << c.N << "\n"
            << "D_phi: " << c.D_phi << "\n"
            << "c_A: " << (c.c_A ? std::to_string(*c.c_A) : "-") << "\n"
            << "rank_ML1: " << (c.rank_ML1 ? std::to_string(*c.rank_ML1) : "-") << "\n"
            << "step: " << c.step << "\n"
            << "A_D: " << dres::to_string(c.A_D) << "\n"
            << "content: " << dres::to_string(c.content) << "\n";
  std::cout << "perturbation:";
  for (std::size_t i = 0; i < c.perturbation.phi.size(); ++i)
    std::cout << (i ? ", " : " ") << dres::to_string(c.perturbation.phi[i]);
  std::cout << "\npermutation:";
  for (int k : c.permutation) std::cout << " " << k;
  std::cout << "\nfallback_used: " << (c.fallback_used ? "true" : "false") << "\n";
}

int cmd_implicitize(const Options& o) {
  const auto doc = dres::parse_document(read_file(o.file));
  if (o.perturbation == "none") throw dres::SemanticError("implicitize needs a perturbation");
  dres::RunOptions ro;
  ro.perturbation = chosen_perturbation(o, doc);
  ro.allow_fallback = !o.no_fallback;
  const auto d = dres::run(doc.sys, ro);
  if (o.json) {
    std::cout << dres::to_json(d).dump(2) << "\n";
    return 0;
  }
  if (d.implicit)
    std::cout << "implicit equation: " << dres::to_string(d.A) << " = 0\n";
  else
    std::cout << "dimension less than n-1\n";
  if (o.certificate) print_certificate(d.cert);
  return 0;
}

int cmd_resultant(const Options& o) {
  const auto doc = dres::parse_document(read_file(o.file));
  const auto pr = dres::profile(doc.sys);
  dres::PerturbedSystem ps;
  std::optional<dres::Perturbation> phi;
  if (o.perturbation == "none") {
    ps = dres::perturb(doc.sys, dres::Perturbation{std::vector<dres::LinPoly>(static_cast<std::size_t>(doc.sys.n()))});
  } else {
    phi = chosen_perturbation(o, doc);
    if (!phi) phi = dres::default_phi(doc.sys, pr);
    ps = dres::perturb(doc.sys, *phi);
  }
  const auto dc = dres::dcres(ps, pr);
  std::optional<dres::PertPoly> h;
  if (pr.N > 0) h = dres::dcres_h(ps, pr);
  if (o.json) {
    json j = {{"dcres", dres::to_string(dc)}, {"dcres_h", h ? json(dres::to_string(*h)) : json(nullptr)}};
    j["perturbation"] = phi ? strings(phi->phi) : json(nullptr);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (phi) {
    std::cout << "perturbation:";
    for (std::size_t i = 0; i < phi->phi.size(); ++i) std::cout << (i ? ", " : " ") << dres::to_string(phi->phi[i]);
    std::cout << "\n";
  }
  std::cout << "dcres: " << dres::to_string(dc) << "\n";
  std::cout << "dcres_h: " << (h ? dres::to_string(*h) : std::string("-")) << "\n";
  return 0;
}

int cmd_profile(const Options& o) {
  const auto doc = dres::parse_document(read_file(o.file));
  dres::validate(doc.sys);
  const auto pr = dres::profile(doc.sys);
  const auto S = dres::leading_matrix(doc.sys, pr);
  const int rS = dres::rank(S);
  const int rM = dres::rank_ML1(doc.sys, pr);
  if (o.json) {
    json j = {{"n", pr.n},     {"o", pr.o},   {"gamma_j", pr.gamma_j}, {"gamma", pr.gamma},
              {"N", pr.N},     {"L", pr.L},   {"Lh", pr.Lh},           {"S", matrix_json(S)},
              {"rank_S", rS},  {"rank_ML1", rM}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  auto list = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s;
  };
  std::cout << "n: " << pr.n << "\no: " << list(pr.o) << "\ngamma_j: " << list(pr.gamma_j) << "\ngamma: " << pr.gamma
            << "\nN: " << pr.N << "\nL: " << pr.L << "\nLh: " << pr.Lh << "\nS:\n"
            << dres::to_string(S) << "rank_S: " << rS << "\nrank_ML1: " << rM << "\n";
  return 0;
}

int cmd_oracle(const Options& o) {
  const auto doc = dres::parse_document(read_file(o.file));
  dres::validate(doc.sys);
  const auto pr = dres::profile(doc.sys);
  const auto cs = dres::charset(doc.sys);
  const int n = doc.sys.n();
  std::vector<std::string> leaders;
  for (const auto& a : cs.A0) leaders.push_back(dres::to_string(*a.lead()));
  const bool full = cs.full_dimension();
  if (o.json) {
    json j = {{"G0_size", cs.basis.G0.size()},
              {"L_minus_rank_ML1", pr.L - dres::rank_ML1(doc.sys, pr)},
              {"A0", strings(cs.A0)},
              {"A0_leaders", leaders},
              {"leaders_distinct", cs.leaders_distinct},
              {"dimension", cs.dimension(n)},
              {"decision", full ? "implicit" : "lower_dim"}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "|G0|: " << cs.basis.G0.size() << "\n|A0|: " << cs.A0.size() << "\nA0 leaders:";
  for (const auto& l : leaders) std::cout << " " << l;
  std::cout << "\n";
  if (!cs.leaders_distinct) std::cout << "warning: characteristic set leaders share a variable\n";
  std::cout << "dimension: " << cs.dimension(n) << "\n"
            << (full ? "dimension n-1" : "dimension less than n-1") << "\n";
  return 0;
}

int report(const Options& o, const dres::Error& e, int code) {
  if (o.json) {
    json j = {{"error", {{"kind", e.kind()}, {"message", e.what()}}}};
    if (auto* se = dynamic_cast<const dres::SyntaxError*>(&e)) {
      j["error"]["line"] = se->line;
      j["error"]["column"] = se->column;
    }
    std::cout << j.dump(2) << "\n";
  }
  std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Implicitization of linear differential parametric equations"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "input system (.dppe)")->required();
    sub->add_flag("--json", o.json, "machine-readable output");
  };
  auto add_perturbation = [&](CLI::App* sub) {
    sub->add_option("--perturbation", o.perturbation, "comma-separated list, 'none' or 'default'");
  };
  auto* imp = app.add_subcommand("implicitize", "decide the dimension and compute the implicit equation");
  add_common(imp);
  add_perturbation(imp);
  imp->add_flag("--no-fallback", o.no_fallback, "do not retry with other perturbations");
  imp->add_flag("--certificate", o.certificate, "print the certificate");
  auto* res = app.add_subcommand("resultant", "print the perturbed resultant and its homogeneous part");
  add_common(res);
  add_perturbation(res);
  auto* prof = app.add_subcommand("profile", "print orders, sizes, the leading matrix and ranks");
  add_common(prof);
  auto* orc = app.add_subcommand("oracle", "verify the dimension by linear elimination");
  add_common(orc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*imp) return cmd_implicitize(o);
    if (*res) return cmd_resultant(o);
    if (*prof) return cmd_profile(o);
    return cmd_oracle(o);
  } catch (const dres::ZeroResultant& e) {
    return report(o, e, 3);
  } catch (const dres::SyntaxError& e) {
    return report(o, e, 2);
  } catch (const dres::SemanticError& e) {
    return report(o, e, 2);
  } catch (const dres::InvalidSystem& e) {
    return report(o, e, 2);
  } catch (const dres::OrderEscalation& e) {
    return report(o, e, 2);
  } catch (const dres::Error& e) {
    return report(o, e, 1);
  } catch (const std::exception& e) {
    if (o.json) std::cout << json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
