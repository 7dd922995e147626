// Acceptance checks 1-10. Prints one line per criterion and exits nonzero
// if any criterion fails or exceeds its time limit.
//
// usage: acceptance <brunnel binary> <cli-examples file>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "brunnel/alexpoly.hpp"
#include "brunnel/catalog.hpp"
#include "brunnel/codec.hpp"
#include "brunnel/grouppres.hpp"
#include "brunnel/jsj.hpp"
#include "brunnel/nk.hpp"
#include "brunnel/satellite.hpp"
#include "brunnel/surface.hpp"
#include "oracles.hpp"
#include "random_history.hpp"

using namespace brunnel;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure.
struct Checker {
  Outcome out;
  void expect(bool ok, const std::string& what) {
    if (!ok && out.pass) {
      out.pass = false;
      out.detail = what;
    }
  }
};

bool run_criterion(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit_seconds;
  const bool pass = o.pass && in_time;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(3);
  line << "criterion " << id << " [" << name << "]: " << (pass ? "PASS" : "FAIL") << " (" << secs << " s, limit "
       << limit_seconds << " s";
  if (!in_time) line << ", over time";
  if (!o.detail.empty()) line << "; " << o.detail;
  line << ")";
  std::cout << line.str() << std::endl;
  return pass;
}

oracle::Poly to_oracle(const LaurentPolynomial& p) {
  const LaurentPolynomial n = p.normalized();
  oracle::Poly out;
  for (int e = 0; e <= n.max_exponent(); ++e) out.push_back(n.coeff(e).get_si());
  return out;
}

const std::vector<std::string> kCorpus = {"trefoil", "figure-eight", "5_1", "5_2", "granny", "square"};

Outcome catalog_dt_fidelity() {
  Checker c;
  const DtCode a = parse_dt(slice_knot_dt());
  c.expect(a.components.size() == 1 && a.crossing_count == 42, "slice knot code is not 1 component / 42 crossings");
  c.expect(serialize_dt(a) == slice_knot_dt(), "slice knot code does not round trip");
  c.expect(dt_to_diagram(a).crossing_count() == 42, "slice knot reconstruction lost crossings");
  const DtCode b = parse_dt(jsj_link_dt());
  c.expect(b.components.size() == 3 && b.components[0].size() == 16 && b.components[1].size() == 15 &&
               b.components[2].size() == 4 && b.crossing_count == 35,
           "JSJ link code is not 16/15/4 with 35 crossings");
  c.expect(serialize_dt(b) == jsj_link_dt(), "JSJ link code does not round trip");
  return c.out;
}

Outcome presentations() {
  Checker c;
  for (const std::string r : {"X1 x1 X2 X1 x2", "x1 X1 X1 x1 x2 X1 X2"}) {
    const GroupPresentation g(2, {parse_word(r)});
    c.expect(is_infinite_cyclic_certificate(g, 50), "not certified: " + r);
    const Abelianization ab = abelianization(g);
    c.expect(ab.free_rank == 1 && ab.torsion.empty(), "abelianization is not Z: " + r);
  }
  return c.out;
}

Outcome alexander_suite() {
  Checker c;
  const LaurentPolynomial one = LaurentPolynomial::constant(1);
  const LaurentPolynomial u = alexander_of_knot(LinkDiagram::unknot());
  c.expect(u == one && factor_count(u) == 0, "unknot");
  const LaurentPolynomial t = alexander_of_knot(catalog_diagram("trefoil"));
  c.expect(t == LaurentPolynomial::parse("t^2 - t + 1") && factor_count(t) == 1, "trefoil");
  for (int n = 1; n <= 4; ++n) {
    const LaurentPolynomial p = alexander_of_knot(catalog_diagram("trefoil#" + std::to_string(n)));
    c.expect(factor_count(p) == n, "trefoil#" + std::to_string(n) + " factor count");
  }
  c.expect(alexander_of_knot(whitehead_double(catalog_diagram("trefoil"), 0, 1)) == one, "Wh+(trefoil)");
  const auto table = oracle::seifert_table();
  for (const auto& name : kCorpus) {
    c.expect(to_oracle(alexander_of_knot(catalog_diagram(name))) == oracle::seifert_alexander(table.at(name)),
             "Fox calculus disagrees with the Seifert matrix on " + name);
  }
  c.out.detail = c.out.pass ? "6-knot corpus matches the Seifert oracle" : c.out.detail;
  return c.out;
}

Outcome bing_properties() {
  Checker c;
  std::vector<std::string> inputs = kCorpus;
  inputs.push_back("hopf");
  for (const auto& name : inputs) {
    const LinkDiagram k = catalog_diagram(name);
    const LinkDiagram b = bing_double(k, 0);
    const IntMatrix lk = linking_matrix(b);
    c.expect(lk[0][1] == 0, name + ": new components link");
    c.expect(b.self_writhe(0) == 0 && b.self_writhe(1) == 0, name + ": framing not 0");
    for (int drop = 0; drop < 2; ++drop) {
      std::vector<int> keep;
      for (int i = 0; i < b.component_count(); ++i) {
        if (i != drop) keep.push_back(i);
      }
      const LinkDiagram rest = simplify(sublink(b, keep));
      // The old link minus the doubled component, plus a split unknot; the
      // corpus inputs have at most one other component, which is unknotted.
      const int expect_components = k.component_count();
      c.expect(rest.component_count() == expect_components && rest.crossing_count() == 0,
               name + ": deleting a new component does not leave old link + unknot");
    }
  }
  return c.out;
}

Outcome jsj_calculus() {
  Checker c;
  JsjTree t = knot_exterior_tree("K");
  for (int n = 1; n <= 6; ++n) {
    const JsjTree n_fold = [&] {
      JsjTree x = knot_exterior_tree("K");
      for (int i = 0; i < n; ++i) x = bing_extend(x);
      return x;
    }();
    c.expect(n_fold.vertex_count() == n + 1, "n extensions do not give n+1 vertices");
    const JsjTree tree = bing_extend(n_fold);
    int borromean = 0, knot = 0;
    for (const auto& l : tree.vertices()) {
      borromean += l.kind == PieceKind::BorromeanExterior;
      knot += l.kind == PieceKind::HyperbolicKnotExterior;
    }
    const std::string tag = "n = " + std::to_string(n);
    c.expect(tree.vertex_count() == n + 2 && tree.is_path(), tag + ": not a path on n+2 vertices");
    c.expect(borromean == n + 1 && knot == 1, tag + ": wrong piece counts");
    c.expect(automorphisms(tree).size() == 1, tag + ": nontrivial automorphism");
    c.expect(automorphisms(covering_tree(tree)).size() == 2, tag + ": covering tree group is not of order 2");
    c.expect(automorphisms(covering_tree(n_fold)).size() == 2, tag + ": covering tree group is not of order 2");
  }
  std::vector<int> sizes;
  const auto trees = oracle::all_trees(9, &sizes);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const int n = sizes[i];
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : trees[i]) {
      ++degree[static_cast<std::size_t>(a)];
      ++degree[static_cast<std::size_t>(b)];
    }
    std::vector<PieceLabel> v;
    std::vector<std::string> labels;
    for (int x = 0; x < n; ++x) {
      const int d = degree[static_cast<std::size_t>(x)];
      v.push_back(PieceLabel{PieceKind::Other, "piece", std::max(1, d), d == 0 ? 1 : 0});
      labels.push_back("piece");
    }
    const JsjTree tree(v, trees[i]);
    c.expect(automorphisms(tree) == oracle::brute_force_automorphisms(n, trees[i], labels),
             "brute force disagrees on tree " + std::to_string(i));
  }
  if (c.out.pass) c.out.detail = std::to_string(trees.size()) + " trees up to 9 vertices cross-checked";
  return c.out;
}

Outcome tree_conditions() {
  Checker c;
  const JsjTree disk_pair = bing_extend(knot_exterior_tree("K"));
  const JsjTree genus_one({PieceLabel{PieceKind::HyperbolicLinkExterior, "L", 3, 2},
                           PieceLabel{PieceKind::HyperbolicLinkExterior, "whitehead", 2, 0},
                           PieceLabel{PieceKind::Other, "trefoil", 1, 0}},
                          {{0, 1}, {1, 2}});
  const JsjTree two_borromean = bing_extend(disk_pair);
  c.expect(classify_tree(disk_pair) == TreeCondition::ConditionII, "disk pair tree is not condition II");
  c.expect(classify_tree(genus_one) == TreeCondition::ConditionI, "genus one tree is not condition I");
  c.expect(classify_tree(two_borromean) == TreeCondition::Neither, "two-Borromean tree is not neither");
  return c.out;
}

Outcome descriptor_round_trip() {
  Checker c;
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const SurfaceLinkDescriptor s = testing_support::random_descriptor(rng);
    const SurfaceLinkDescriptor b = bing_double_first(s);
    c.expect(covering_lift(b, 2).descriptor == s, "round trip failed on history " + std::to_string(trial));
    if (s.brunnian_status() == BrunnianStatus::Brunnian) {
      c.expect(b.brunnian_status() == BrunnianStatus::Brunnian, "Brunnian flag lost");
    }
  }
  for (const auto& name : base_names()) {
    const SurfaceLinkDescriptor s = base_descriptor(name);
    if (s.brunnian_status() == BrunnianStatus::Brunnian && s.component(0).is_disk()) {
      c.expect(bing_double_first(s).brunnian_status() == BrunnianStatus::Brunnian, "Brunnian flag lost on " + name);
    }
  }
  for (int n = 2; n <= 10; ++n) {
    c.expect(iterate_bing_double_first(base_descriptor("disk-genus1"), n - 2).component_count() == n,
             "BD^(n-2) component count");
  }
  return c.out;
}

Outcome omega_ledger() {
  Checker c;
  const SurfaceLinkDescriptor base = base_descriptor("disk");
  std::vector<SurfaceLinkDescriptor> family;
  for (int n = 1; n <= 4; ++n) {
    const SurfaceLinkDescriptor s = rim_surgery(base, "c", "trefoil#" + std::to_string(n));
    c.expect(omega_of(s, OmegaValue::finite(0)) == OmegaValue::finite(n), "Omega of J_" + std::to_string(n));
    c.expect(rim_surgery_omega(OmegaValue::finite(0), knot_factor_count("trefoil#" + std::to_string(n))) ==
                 OmegaValue::finite(n),
             "rim surgery Omega");
    c.expect(omega_of(s, OmegaValue::bottom()).is_bottom(), "bottom does not absorb");
    family.push_back(s);
  }
  const DistinctnessLedger l = distinctness_ledger(family, OmegaValue::finite(0));
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i != j) c.expect(l.verdicts[i][j] == Verdict::DistinguishedByOmega, "pair not distinguished by Omega");
    }
  }
  return c.out;
}

Outcome nk_brunnian() {
  Checker c;
  const SurfaceLinkDescriptor base = base_descriptor("nontrivial-disk");
  int constructions = 0;
  for (int n = 2; n <= 5; ++n) {
    const NkConstruction all = generate_nk(n, n, base);
    c.expect(all.merged == iterate_bing_double_first(base, n - 1), "Sigma_{n,n} is not BD^{n-1}(D)");
    SurfaceLinkDescriptor split = base;
    for (int i = 1; i < n; ++i) split = adjoin(split, base);
    c.expect(generate_nk(n, 1, base).merged == split, "Sigma_{n,1} is not the split union");
    for (int k = 1; k <= n; ++k) {
      const NkConstruction con = generate_nk(n, k, base);
      const NkReport r = check_nk(con);
      const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
      c.expect(r.passed, tag + " failed");
      c.expect(static_cast<long>(r.subsets.size()) == (1L << n) - 2, tag + " missing subsets");
      c.expect(nk_report_to_json(r).dump() == nk_report_to_json(check_nk(generate_nk(n, k, base))).dump(),
               tag + " traces not deterministic");
      c.expect(nk_report_to_json(r) == nk_report_to_json(check_nk_serial(con)), tag + " parallel and serial differ");
      ++constructions;
    }
  }
  if (c.out.pass) c.out.detail = std::to_string(constructions) + " constructions checked";
  return c.out;
}

struct ShellResult {
  int status = 0;
  std::string output;
};

ShellResult shell(const std::string& command) {
  ShellResult r;
  FILE* p = popen(command.c_str(), "r");
  if (!p) throw std::runtime_error("popen failed");
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.output.append(buf.data(), n);
  r.status = pclose(p);
  return r;
}

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char ch : s) q += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return q + "'";
}

Outcome cli_determinism(const std::string& binary, const std::string& examples) {
  Checker c;
  std::ifstream f(examples);
  c.expect(static_cast<bool>(f), "cannot read " + examples);
  const std::string dir = std::filesystem::absolute(binary).parent_path().string();
  const std::string work = std::filesystem::absolute(examples).parent_path().string();
  std::string line;
  int count = 0;
  while (std::getline(f, line)) {
    if (line.rfind("$ ", 0) != 0) continue;
    const std::string cmd = "cd " + quote(work) + " && PATH=" + quote(dir) + ":\"$PATH\" sh -c " + quote(line.substr(2)) + " 2>&1";
    const ShellResult a = shell(cmd);
    const ShellResult b = shell(cmd);
    c.expect(a.status == 0, "example failed: " + line.substr(2));
    c.expect(a.status == b.status && a.output == b.output, "output differs between runs: " + line.substr(2));
    ++count;
  }
  c.expect(count > 0, "no examples found");
  if (c.out.pass) c.out.detail = std::to_string(count) + " examples byte-identical across two runs";
  return c.out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <brunnel binary> <cli-examples file>\n";
    return 2;
  }
  const std::string binary = argv[1], examples = argv[2];
  bool ok = true;
  ok &= run_criterion(1, "catalog DT codes", 1.0, catalog_dt_fidelity);
  ok &= run_criterion(2, "infinite cyclic presentations", 1.0, presentations);
  ok &= run_criterion(3, "Alexander suite", 10.0, alexander_suite);
  ok &= run_criterion(4, "Bing double properties", 5.0, bing_properties);
  ok &= run_criterion(5, "JSJ calculus", 30.0, jsj_calculus);
  ok &= run_criterion(6, "tree conditions", 1.0, tree_conditions);
  ok &= run_criterion(7, "descriptor round trip", 1.0, descriptor_round_trip);
  ok &= run_criterion(8, "Omega ledger", 1.0, omega_ledger);
  ok &= run_criterion(9, "(n,k)-Brunnian", 60.0, nk_brunnian);
  ok &= run_criterion(10, "CLI determinism", 120.0, [&] { return cli_determinism(binary, examples); });
  std::cout << (ok ? "all criteria passed" : "some criteria failed") << std::endl;
  return ok ? 0 : 1;
}
