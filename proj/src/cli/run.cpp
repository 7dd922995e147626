#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "brunnel/alexpoly.hpp"
#include "brunnel/catalog.hpp"
#include "brunnel/cli.hpp"
#include "brunnel/codec.hpp"
#include "brunnel/diagram_json.hpp"
#include "brunnel/errors.hpp"
#include "brunnel/nk.hpp"
#include "brunnel/satellite.hpp"

namespace brunnel {

using nlohmann::json;

namespace {

std::string plural(long n, const std::string& word, const std::string& many = "") {
  return std::to_string(n) + " " + (n == 1 ? word : (many.empty() ? word + "s" : many));
}

std::string summary(const LinkDiagram& d) {
  return plural(d.component_count(), "component") + ", " + plural(d.crossing_count(), "crossing");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

struct Output {
  bool as_json = false;
  std::ostringstream text;

  void emit(const json& j) { text << j.dump(2) << "\n"; }
  void line(const std::string& s) { text << s << "\n"; }
};

void emit_diagram(Output& o, const LinkDiagram& d) {
  if (o.as_json) {
    o.emit(diagram_to_json(d));
    return;
  }
  o.line(to_pd(d));
  o.line(summary(d));
}

void emit_tree(Output& o, const JsjTree& t, bool dot) {
  if (dot) {
    o.text << jsj_to_dot(t);
    return;
  }
  if (o.as_json) {
    o.emit(jsj_to_json(t));
    return;
  }
  o.line(plural(t.vertex_count(), "vertex", "vertices"));
  for (int v = 0; v < t.vertex_count(); ++v) {
    const auto& l = t.label(v);
    std::string s = "  " + std::to_string(v) + " " + piece_kind_name(l.kind);
    if (!l.name.empty()) s += " " + l.name;
    s += " boundary " + std::to_string(l.boundary_count) + " external " + std::to_string(l.external);
    o.line(s);
  }
  std::string e = "edges";
  for (const auto& [a, b] : t.edges()) e += " " + std::to_string(a) + "-" + std::to_string(b);
  o.line(e);
  o.line("distinguished " + (t.distinguished() ? std::to_string(*t.distinguished()) : std::string("none")));
}

void emit_descriptor(Output& o, const SurfaceLinkDescriptor& s) {
  if (o.as_json) {
    o.emit(descriptor_to_json(s));
    return;
  }
  o.line(plural(s.component_count(), "component") + ", status " + brunnian_status_name(s.brunnian_status()));
  o.line("  index genus trivial knotted color");
  for (int i = 0; i < s.component_count(); ++i) {
    const auto& c = s.component(i);
    std::ostringstream row;
    row << "  " << i << " " << c.genus << " " << (c.trivial_disk ? "yes" : "no") << " "
        << (c.knotted_boundary ? "yes" : "no") << " " << c.color.value_or("-");
    o.line(row.str());
  }
  std::string h = "history";
  for (const auto& step : s.history()) {
    h += " " + step_kind_name(step.kind);
    if (step.kind == StepKind::Base || step.kind == StepKind::Adjoin) h += "(" + step.name + ")";
    if (step.kind == StepKind::Band) h += "(" + std::to_string(step.i) + "," + std::to_string(step.j) + ")";
    if (step.kind == StepKind::RimSurgery) h += "(" + step.curve + "," + step.knot + ")";
  }
  o.line(h);
  o.line("boundary " + (s.boundary() ? summary(*s.boundary()) : std::string("none")));
  if (!s.assumptions().empty()) {
    o.line("assumptions");
    for (const auto& a : s.assumptions()) o.line("  " + a);
  }
}

OmegaValue parse_omega(const std::string& s) {
  if (s == "-inf" || s == "bottom") return OmegaValue::bottom();
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos == s.size() && v >= 0) return OmegaValue::finite(v);
  } catch (const std::exception&) {
  }
  throw ValidationError("omega must be a nonnegative integer or -inf, got '" + s + "'");
}

SurfaceLinkDescriptor with_rim(SurfaceLinkDescriptor s, const std::string& knots) {
  if (knots == "none") return s;
  std::stringstream ss(knots);
  std::string k;
  int n = 0;
  while (std::getline(ss, k, '+')) s = rim_surgery(s, "c" + std::to_string(++n), trim(k));
  return s;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args, std::istream& in) {
  CLI::App app{"Bing doubling, Alexander polynomials, JSJ trees and Brunnian surface links", "brunnel"};
  app.require_subcommand(1);
  app.fallthrough();
  Output o;
  app.add_flag("--json", o.as_json, "JSON output");

  std::string input;
  int component = 0, times = 1, sign = 1, budget = 50, degree = 2, n = 0, k = 0, i = 0, j = 0;
  std::string label = "K", base = "disk", base_omega = "0", boundary_knot;
  std::vector<std::string> rims, family;
  bool dot = false, serial = false, trace = false;

  auto add_input = [&](CLI::App* s) { s->add_option("input", input, "path, '-' for stdin, or literal text"); };

  auto* parse_dt_cmd = app.add_subcommand("parse-dt", "validate and normalize a DT code");
  add_input(parse_dt_cmd);
  auto* dt_to_pd_cmd = app.add_subcommand("dt-to-pd", "reconstruct a knot diagram from a DT code");
  add_input(dt_to_pd_cmd);
  auto* bing_cmd = app.add_subcommand("bing-double", "Bing double one component");
  add_input(bing_cmd);
  bing_cmd->add_option("--component", component, "component index");
  bing_cmd->add_option("--times", times, "number of iterations")->check(CLI::NonNegativeNumber);
  auto* wh_cmd = app.add_subcommand("whitehead", "untwisted Whitehead double of one component");
  add_input(wh_cmd);
  wh_cmd->add_option("--component", component, "component index");
  wh_cmd->add_option("--sign", sign, "clasp sign")->check(CLI::IsMember({-1, 1}));
  auto* linking_cmd = app.add_subcommand("linking", "linking matrix");
  add_input(linking_cmd);
  auto* alexander_cmd = app.add_subcommand("alexander", "Alexander polynomial of a knot");
  add_input(alexander_cmd);
  auto* factor_cmd = app.add_subcommand("factor-count", "irreducible factors over Q of a Laurent polynomial");
  add_input(factor_cmd);
  auto* pi1_cmd = app.add_subcommand("pi1", "Wirtinger presentation, Tietze simplification, abelianization");
  add_input(pi1_cmd);
  pi1_cmd->add_option("--budget", budget, "Tietze move budget")->check(CLI::PositiveNumber);

  auto* jsj_cmd = app.add_subcommand("jsj", "JSJ tree calculus");
  jsj_cmd->require_subcommand(1);
  auto* jsj_extend = jsj_cmd->add_subcommand("extend", "attach Borromean pieces at the distinguished vertex");
  add_input(jsj_extend);
  jsj_extend->add_option("--times", times, "number of extensions")->check(CLI::NonNegativeNumber);
  auto* jsj_cover = jsj_cmd->add_subcommand("cover", "tree of the 2-fold covering link");
  add_input(jsj_cover);
  auto* jsj_aut = jsj_cmd->add_subcommand("aut", "label-preserving automorphisms");
  add_input(jsj_aut);
  auto* jsj_check = jsj_cmd->add_subcommand("check69", "classify a tree by the Borromean and keychain condition");
  add_input(jsj_check);
  for (auto* s : {jsj_extend, jsj_cover}) s->add_flag("--dot", dot, "Graphviz output");

  auto* desc_cmd = app.add_subcommand("descriptor", "surface-link descriptors");
  desc_cmd->require_subcommand(1);
  auto* desc_bd = desc_cmd->add_subcommand("bd", "Bing double component 0");
  add_input(desc_bd);
  desc_bd->add_option("--times", times, "number of iterations")->check(CLI::NonNegativeNumber);
  auto* desc_cover = desc_cmd->add_subcommand("cover", "covering lift of a final Bing doubling");
  add_input(desc_cover);
  desc_cover->add_option("--degree", degree, "cover degree")->check(CLI::PositiveNumber);
  auto* desc_omega = desc_cmd->add_subcommand("omega", "Omega after rim surgeries, or a distinctness ledger");
  add_input(desc_omega);
  desc_omega->add_option("--rim", rims, "rim surgery knot (repeatable)");
  desc_omega->add_option("--family", family, "family member as knot+knot or none (repeatable)");
  desc_omega->add_option("--base-omega", base_omega, "Omega of the base");
  auto* desc_band = desc_cmd->add_subcommand("band", "band join two components");
  add_input(desc_band);
  desc_band->add_option("--i", i, "first component")->required();
  desc_band->add_option("--j", j, "second component")->required();

  auto* nk_gen = app.add_subcommand("nk-generate", "(n,k)-Brunnian disk link construction");
  auto* nk_chk = app.add_subcommand("nk-check", "sublink collapse check of the construction");
  for (auto* s : {nk_gen, nk_chk}) {
    s->add_option("--n", n, "number of components")->required();
    s->add_option("--k", k, "sublink size")->required();
    s->add_option("--base", base, "base disk name");
  }
  nk_gen->add_option("--boundary-knot", boundary_knot, "also realize the boundary link on this catalog knot");
  nk_chk->add_flag("--serial", serial, "use the serial reference checker");
  nk_chk->add_flag("--trace", trace, "print per-subset traces");

  auto* export_cmd = app.add_subcommand("export-verify", "external hyperbolicity verification script");
  add_input(export_cmd);
  export_cmd->add_option("--label", label, "variable name in the script");

  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    result.out = out.str();
    if (code != 0) {
      result.exit_code = 2;
      result.diagnostics.push_back(one_line(trim(err.str())));
    }
    return result;
  }

  try {
    auto source = [&]() { return cli::read_source(input, in); };
    if (*parse_dt_cmd) {
      const DtCode code = parse_dt(trim(source()));
      std::vector<int> sizes;
      for (const auto& c : code.components) sizes.push_back(static_cast<int>(c.size()));
      if (o.as_json) {
        o.emit({{"schema", "brunnel.dt/1"},
                {"dt", serialize_dt(code)},
                {"components", code.components.size()},
                {"crossings", code.crossing_count},
                {"component_sizes", sizes}});
      } else {
        o.line(serialize_dt(code));
        o.line(plural(static_cast<long>(code.components.size()), "component") + ", " +
               plural(code.crossing_count, "crossing"));
        if (sizes.size() > 1) {
          std::string s = "component sizes";
          for (int v : sizes) s += " " + std::to_string(v);
          o.line(s);
        }
      }
    } else if (*dt_to_pd_cmd) {
      emit_diagram(o, cli::parse_diagram_input(source()));
    } else if (*bing_cmd) {
      LinkDiagram d = cli::parse_diagram_input(source());
      for (int t = 0; t < times; ++t) d = bing_double(d, component);
      emit_diagram(o, d);
    } else if (*wh_cmd) {
      emit_diagram(o, whitehead_double(cli::parse_diagram_input(source()), component, sign));
    } else if (*linking_cmd) {
      const IntMatrix m = linking_matrix(cli::parse_diagram_input(source()));
      if (o.as_json) {
        o.emit({{"schema", "brunnel.linking/1"}, {"matrix", matrix_to_json(m)}});
      } else {
        for (const auto& row : m) {
          std::string s;
          for (long v : row) s += (s.empty() ? "" : " ") + std::to_string(v);
          o.line(s);
        }
      }
    } else if (*alexander_cmd) {
      const LaurentPolynomial p = alexander_of_knot(cli::parse_diagram_input(source()));
      const int count = factor_count(p);
      if (o.as_json) {
        o.emit({{"schema", "brunnel.alexander/1"}, {"polynomial", p.to_string()}, {"factor_count", count}});
      } else {
        o.line(p.to_string());
        o.line("factor count " + std::to_string(count));
      }
    } else if (*factor_cmd) {
      const LaurentPolynomial p = LaurentPolynomial::parse(trim(source()));
      const int count = factor_count(p);
      if (o.as_json) {
        o.emit({{"schema", "brunnel.factor-count/1"},
                {"polynomial", p.is_zero() ? std::string("0") : p.normalized().to_string()},
                {"factor_count", count}});
      } else {
        o.line(std::to_string(count));
      }
    } else if (*pi1_cmd) {
      const std::string text = trim(source());
      const GroupPresentation g =
          !text.empty() && text.front() == '<' ? cli::parse_presentation(text) : wirtinger(cli::parse_diagram_input(text));
      const TietzeResult t = tietze_simplify(g, budget);
      const Abelianization ab = abelianization(g);
      const bool certified = is_infinite_cyclic_certificate(g, budget);
      if (o.as_json) {
        o.emit({{"schema", "brunnel.pi1/1"},
                {"presentation", g.to_string()},
                {"simplified", t.presentation.to_string()},
                {"moves", t.moves},
                {"exhausted", t.exhausted},
                {"abelianization", ab.to_string()},
                {"infinite_cyclic_certified", certified}});
      } else {
        o.line("presentation " + g.to_string());
        o.line("simplified " + t.presentation.to_string() + " after " + plural(t.moves, "move") +
               (t.exhausted ? " (budget exhausted)" : ""));
        o.line("abelianization " + ab.to_string());
        o.line(certified ? "certified infinite cyclic" : "not certified");
      }
    } else if (*jsj_extend) {
      JsjTree t = cli::parse_jsj_input(source());
      for (int s = 0; s < times; ++s) t = bing_extend(t);
      emit_tree(o, t, dot);
    } else if (*jsj_cover) {
      emit_tree(o, covering_tree(cli::parse_jsj_input(source())), dot);
    } else if (*jsj_aut) {
      const auto auts = automorphisms(cli::parse_jsj_input(source()));
      if (o.as_json) {
        o.emit({{"schema", "brunnel.jsj-automorphisms/1"}, {"count", auts.size()}, {"automorphisms", auts}});
      } else {
        o.line(plural(static_cast<long>(auts.size()), "automorphism"));
        for (const auto& p : auts) {
          std::string s;
          for (int v : p) s += (s.empty() ? "  " : " ") + std::to_string(v);
          o.line(s);
        }
      }
    } else if (*jsj_check) {
      const TreeCondition c = classify_tree(cli::parse_jsj_input(source()));
      if (o.as_json) {
        o.emit({{"schema", "brunnel.jsj-condition/1"}, {"condition", tree_condition_name(c)}});
      } else {
        o.line(tree_condition_name(c));
      }
    } else if (*desc_bd) {
      emit_descriptor(o, iterate_bing_double_first(cli::parse_descriptor_input(source()), times));
    } else if (*desc_cover) {
      const CoverResult r = covering_lift(cli::parse_descriptor_input(source()), degree);
      if (o.as_json) {
        o.emit({{"schema", "brunnel.cover/1"},
                {"descriptor", descriptor_to_json(r.descriptor)},
                {"cover_boundary", r.cover_boundary ? diagram_to_json(*r.cover_boundary) : json(nullptr)}});
      } else {
        emit_descriptor(o, r.descriptor);
        o.line("cover boundary " + (r.cover_boundary ? summary(*r.cover_boundary) : std::string("none")));
      }
    } else if (*desc_omega) {
      const SurfaceLinkDescriptor s = cli::parse_descriptor_input(source());
      const OmegaValue b = parse_omega(base_omega);
      if (family.empty()) {
        SurfaceLinkDescriptor r = s;
        for (const auto& knot : rims) r = with_rim(r, knot);
        const OmegaValue w = omega_of(r, b);
        if (o.as_json) {
          o.emit({{"schema", "brunnel.omega/1"}, {"descriptor", descriptor_to_json(r)}, {"omega", omega_to_json(w)}});
        } else {
          emit_descriptor(o, r);
          o.line("omega " + w.to_string());
        }
      } else {
        std::vector<SurfaceLinkDescriptor> members;
        for (const auto& f : family) members.push_back(with_rim(s, f));
        const DistinctnessLedger l = distinctness_ledger(members, b);
        if (o.as_json) {
          o.emit(ledger_to_json(l));
        } else {
          for (std::size_t a = 0; a < l.labels.size(); ++a) o.line(l.labels[a] + " omega " + l.omega[a].to_string());
          for (std::size_t a = 0; a < l.labels.size(); ++a) {
            for (std::size_t c = a + 1; c < l.labels.size(); ++c) {
              o.line(l.labels[a] + " vs " + l.labels[c] + ": " + verdict_name(l.verdicts[a][c]));
            }
          }
        }
      }
    } else if (*desc_band) {
      emit_descriptor(o, band_join(cli::parse_descriptor_input(source()), i, j));
    } else if (*nk_gen) {
      const NkConstruction c = generate_nk(n, k, base_descriptor(base));
      std::optional<LinkDiagram> boundary;
      if (!boundary_knot.empty()) boundary = nk_boundary(c, catalog_diagram(boundary_knot));
      if (o.as_json) {
        json j = nk_to_json(c);
        if (boundary) j["boundary"] = diagram_to_json(*boundary);
        o.emit(j);
      } else {
        o.line("(" + std::to_string(n) + "," + std::to_string(k) + ") on base " + base + ": " +
               plural(static_cast<long>(c.colors.size()), "copy", "copies") + ", " +
               plural(static_cast<long>(c.bands.size()), "band"));
        for (std::size_t s = 0; s < c.colors.size(); ++s) {
          o.line("  copy " + std::to_string(s + 1) + ": " + color_set_name(c.colors[s]));
        }
        for (const auto& b : c.bands) {
          o.line("  band C" + std::to_string(b.color + 1) + ": copy " + std::to_string(b.copy + 1) + " -> copy " +
                 std::to_string(b.target + 1));
        }
        std::string g = "merged " + plural(c.merged.component_count(), "component") + ", genera";
        for (const auto& comp : c.merged.components()) g += " " + std::to_string(comp.genus);
        o.line(g);
        if (boundary) o.line("boundary on " + boundary_knot + ": " + summary(*boundary));
      }
    } else if (*nk_chk) {
      const NkConstruction c = generate_nk(n, k, base_descriptor(base));
      const NkReport r = serial ? check_nk_serial(c) : check_nk(c);
      if (o.as_json) {
        o.emit(nk_report_to_json(r));
      } else {
        o.line("(" + std::to_string(n) + "," + std::to_string(k) + ") on base " + base + ": " +
               plural(static_cast<long>(r.subsets.size()), "subset") + ", " + (r.passed ? "all passed" : "FAILED"));
        for (const auto& s : r.subsets) {
          o.line("  " + color_set_name(s.kept) + ": " + nk_token_name(s.token, k) + (s.passed ? " pass" : " FAIL"));
          if (trace) {
            for (const auto& t : s.trace) o.line("    " + t);
          }
        }
      }
      if (!r.passed) result.exit_code = 1;
    } else if (*export_cmd) {
      const std::string text = trim(source());
      const DtCode code =
          text.rfind("DT", 0) == 0 ? parse_dt(text) : diagram_to_dt(cli::parse_diagram_input(text));
      const std::string script = export_verification_script(code, label);
      if (o.as_json) {
        o.emit({{"schema", "brunnel.export/1"}, {"label", label}, {"dt", serialize_dt(code)}, {"script", script}});
      } else {
        o.text << script;
      }
    }
  } catch (const Error& e) {
    result.exit_code = 1;
    result.diagnostics.push_back("error: " + one_line(e.what()));
    return result;
  } catch (const json::exception& e) {
    result.exit_code = 1;
    result.diagnostics.push_back("error: malformed document: " + one_line(e.what()));
    return result;
  }
  result.out = o.text.str();
  if (result.exit_code != 0) result.diagnostics.push_back("error: some subset checks failed");
  return result;
}

}  // namespace brunnel
