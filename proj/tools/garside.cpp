// garside - exact computations over Garside germs: normal forms, homology of
// the finite classifying complex, poset checkers, coset-complex geometry.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "garside/garside.hpp"

namespace {

using nlohmann::json;
using namespace garside;

json group_json(const HomologyGroup& h) {
  return json{{"rank", h.rank}, {"torsion", h.torsion}};
}

json graded_json(const std::vector<GradedGroup>& groups) {
  json arr = json::array();
  for (const auto& g : groups)
    arr.push_back(
        {{"degree", g.degree}, {"rank", g.group.rank}, {"torsion", g.group.torsion}});
  return arr;
}

json poset_report_json(const Germ& germ, const PosetReport& r) {
  json j;
  j["poset"] = r.label;
  if (r.avoided) j["avoided"] = germ.name_of(*r.avoided);
  j["groups"] = graded_json(r.groups);
  j["empty"] = r.empty_poset;
  j["torsion_free"] = r.torsion_free;
  j["all_zero"] = r.all_zero;
  if (r.concentrated_degree) j["concentrated_degree"] = *r.concentrated_degree;
  return j;
}

json rational_json(const Rational& r) {
  return json{{"num", r.num}, {"den", r.den}, {"value", r.value()}};
}

struct Options {
  bool json_out = false;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

Vertex parse_vertex(const Germ& g, const std::string& text) {
  GroupElement e = parse_element(g, text);
  if (e.exp() != 0)
    throw ParseError("vertices are delta-free positive words, got '" + text +
                     "'");
  return Vertex::of(e);
}

std::string vertex_str(const Vertex& v) {
  return render_word(v.germ(), v.rep().letters());
}

int run(CLI::App& app, const Options& opt, int argc, char** argv);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations over Garside germs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json_out, "structured JSON output");

  try {
    return run(app, opt, argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

namespace {

int run(CLI::App& app, const Options& opt, int argc, char** argv) {
  std::string file, word, elt_a, elt_b, out_path, avoid_name;
  std::string build_kind, build_family;
  int rank = 0, dim = -1, max_power = 6;
  std::vector<std::string> vertex_args;

  auto* validate = app.add_subcommand("validate", "check a germ file");
  validate->add_option("file", file)->required();

  auto* build = app.add_subcommand("build", "build a classical or dual germ");
  build->add_option("kind", build_kind)
      ->required()
      ->check(CLI::IsMember({"classical", "dual"}));
  build->add_option("family", build_family)
      ->required()
      ->check(CLI::IsMember({"A", "I2"}));
  build->add_option("rank", rank)->required();
  build->add_option("-o,--output", out_path, "write germ JSON to a file");

  auto* nf = app.add_subcommand("nf", "greedy normal form of a positive word");
  nf->add_option("file", file)->required();
  nf->add_option("word", word)->required();

  auto* dnf = app.add_subcommand("dnf", "Deligne normal form of an element");
  dnf->add_option("file", file)->required();
  dnf->add_option("element", word)->required();

  auto* mult_cmd = app.add_subcommand("mult", "product of two elements");
  mult_cmd->add_option("file", file)->required();
  mult_cmd->add_option("lhs", elt_a)->required();
  mult_cmd->add_option("rhs", elt_b)->required();

  auto* inv_cmd = app.add_subcommand("inv", "inverse of an element");
  inv_cmd->add_option("file", file)->required();
  inv_cmd->add_option("g", elt_a)->required();

  auto* eq_cmd = app.add_subcommand("eq", "word problem: are g and h equal");
  eq_cmd->add_option("file", file)->required();
  eq_cmd->add_option("lhs", elt_a)->required();
  eq_cmd->add_option("rhs", elt_b)->required();

  auto* gcd_cmd = app.add_subcommand("gcd", "left gcd of positive elements");
  gcd_cmd->add_option("file", file)->required();
  gcd_cmd->add_option("u", elt_a)->required();
  gcd_cmd->add_option("v", elt_b)->required();

  auto* norm_cmd = app.add_subcommand("norm", "atom norm of a positive element");
  norm_cmd->add_option("file", file)->required();
  norm_cmd->add_option("u", elt_a)->required();

  auto* cells_cmd = app.add_subcommand("cells", "cell counts of the complex");
  cells_cmd->add_option("file", file)->required();
  cells_cmd->add_option("-k,--dim", dim, "list the cells of one dimension");

  auto* hom = app.add_subcommand("homology", "integral homology of the group");
  hom->add_option("file", file)->required();

  auto* cohom = app.add_subcommand("cohomology", "integral cohomology");
  cohom->add_option("file", file)->required();

  auto* ph = app.add_subcommand("poset-homology",
                                "reduced homology of a divisor poset");
  ph->add_option("file", file)->required();
  ph->add_option("--avoid", avoid_name,
                 "use the subposet avoiding multiples of this simple");

  auto* dual = app.add_subcommand("duality-check", "duality group verdict");
  dual->add_option("file", file)->required();

  auto* endc = app.add_subcommand("end-connectivity",
                                  "connectivity at infinity verdict");
  endc->add_option("file", file)->required();

  auto* links = app.add_subcommand("links", "ascending/descending vertex links");
  links->add_option("file", file)->required();
  links->add_option("word", word, "delta-free coset representative")->required();

  auto* dist = app.add_subcommand("distance", "nonsymmetric distance");
  dist->add_option("file", file)->required();
  dist->add_option("v", elt_a)->required();
  dist->add_option("w", elt_b)->required();

  auto* geo = app.add_subcommand("geodesic", "geodesic edge labels and profile");
  geo->add_option("file", file)->required();
  geo->add_option("v", elt_a)->required();
  geo->add_option("w", elt_b)->required();

  auto* cent = app.add_subcommand("centers", "circumscribed radius and centers");
  cent->add_option("file", file)->required();
  cent->add_option("vertices", vertex_args, "vertex words")->required();

  auto* subs = app.add_subcommand("subgroups",
                                  "finite subgroups of G/<delta^m>");
  subs->add_option("file", file)->required();

  auto* tame = app.add_subcommand("tameness", "norms of delta powers");
  tame->add_option("file", file)->required();
  tame->add_option("-N,--max-power", max_power, "largest power (default 6)");

  int tameness_power = 0;
  auto* trans = app.add_subcommand("translation-length",
                                   "translation length estimate");
  trans->add_option("file", file)->required();
  trans->add_option("g", elt_a)->required();
  trans->add_option("-N,--max-power", max_power, "largest power (default 6)");
  trans->add_option("--with-bound", tameness_power,
                    "also probe ||delta^n|| up to this power and print the "
                    "1/(c*d) lower bound");

  app.parse(argc, argv);

  auto load = [&] { return load_germ_file(file); };

  if (validate->parsed()) {
    Germ g = load();
    if (opt.json_out) {
      emit(json{{"valid", true},
                {"name", g.name()},
                {"simples", g.size()},
                {"atoms", g.atoms().size()},
                {"delta_norm", g.delta_norm()},
                {"sigma_order", g.sigma_order()}});
    } else {
      std::cout << "ok: " << g.name() << " (" << g.size() << " simples, "
                << g.atoms().size() << " atoms, ||delta|| = " << g.delta_norm()
                << ", m = " << g.sigma_order() << ")\n";
    }
    return 0;
  }

  if (build->parsed()) {
    CoxeterSpec spec{build_family == "A" ? CoxeterSpec::Family::A
                                         : CoxeterSpec::Family::I2,
                     rank};
    Germ g = build_kind == "classical" ? classical_artin(spec)
                                       : dual_artin(spec);
    if (out_path.empty()) {
      save_germ(g, std::cout);
    } else {
      std::ofstream out(out_path);
      if (!out) throw Error("cannot write '" + out_path + "'");
      save_germ(g, out);
      if (!opt.json_out)
        std::cout << "wrote " << g.name() << " (" << g.size()
                  << " simples) to " << out_path << "\n";
      else
        emit(json{{"name", g.name()}, {"simples", g.size()}, {"file", out_path}});
    }
    return 0;
  }

  Germ g = load();

  if (nf->parsed() || dnf->parsed()) {
    GroupElement e = parse_element(g, word);
    if (nf->parsed() && e.exp() < 0)
      throw ParseError("nf expects a positive word");
    if (opt.json_out)
      emit(json{{"word", render_word(g, e.prefix().letters())},
                {"exp", e.exp()},
                {"canonical", render(e)}});
    else
      std::cout << render(e) << "\n";
    return 0;
  }

  if (mult_cmd->parsed() || inv_cmd->parsed() || eq_cmd->parsed() ||
      gcd_cmd->parsed()) {
    GroupElement a = parse_element(g, elt_a);
    if (inv_cmd->parsed()) {
      GroupElement r = inverse(a);
      opt.json_out ? emit(json{{"result", render(r)}})
                   : void(std::cout << render(r) << "\n");
      return 0;
    }
    GroupElement b = parse_element(g, elt_b);
    if (mult_cmd->parsed()) {
      GroupElement r = mult(a, b);
      opt.json_out ? emit(json{{"result", render(r)}})
                   : void(std::cout << render(r) << "\n");
      return 0;
    }
    if (eq_cmd->parsed()) {
      bool r = equals(a, b);
      opt.json_out ? emit(json{{"equal", r}})
                   : void(std::cout << (r ? "true" : "false") << "\n");
      return 0;
    }
    GroupElement r = left_gcd(a, b);
    opt.json_out ? emit(json{{"result", render(r)}})
                 : void(std::cout << render(r) << "\n");
    return 0;
  }

  if (norm_cmd->parsed()) {
    long long n = norm(parse_element(g, elt_a));
    opt.json_out ? emit(json{{"norm", n}})
                 : void(std::cout << n << "\n");
    return 0;
  }

  if (cells_cmd->parsed()) {
    int d = g.delta_norm();
    if (dim >= 0) {
      if (dim > d) throw Error("dimension exceeds ||delta||");
      auto cs = cells(g, dim);
      if (opt.json_out) {
        json arr = json::array();
        for (const auto& c : cs) {
          json tuple = json::array();
          for (SimpleId x : c.entries) tuple.push_back(g.name_of(x));
          arr.push_back({{"entries", tuple}, {"total", g.name_of(c.total)}});
        }
        emit(json{{"dim", dim}, {"count", cs.size()}, {"cells", arr}});
      } else {
        std::cout << "D_" << dim << ": " << cs.size() << "\n";
        for (const auto& c : cs) {
          std::string s = "[";
          for (size_t i = 0; i < c.entries.size(); ++i)
            s += (i ? "|" : "") + g.name_of(c.entries[i]);
          std::cout << s << "] -> " << g.name_of(c.total) << "\n";
        }
      }
      return 0;
    }
    std::vector<long long> counts;
    long long euler = 0;
    for (int k = 0; k <= d; ++k) {
      counts.push_back(static_cast<long long>(cells(g, k).size()));
      euler += (k % 2 == 0 ? 1 : -1) * counts.back();
    }
    if (opt.json_out) {
      emit(json{{"counts", counts}, {"euler", euler}});
    } else {
      for (int k = 0; k <= d; ++k)
        std::cout << "D_" << k << ": " << counts[k] << "\n";
      std::cout << "euler: " << euler << "\n";
    }
    return 0;
  }

  if (hom->parsed() || cohom->parsed()) {
    bool co = cohom->parsed();
    auto groups = co ? cohomology(g) : homology(g);
    if (opt.json_out) {
      json arr = json::array();
      for (size_t k = 0; k < groups.size(); ++k) {
        json entry = group_json(groups[k]);
        entry["dim"] = k;
        arr.push_back(entry);
      }
      emit(arr);
    } else {
      for (size_t k = 0; k < groups.size(); ++k)
        std::cout << "H" << (co ? "^" : "_") << k << " = "
                  << to_string(groups[k]) << "\n";
    }
    return 0;
  }

  if (ph->parsed()) {
    FinitePoset p;
    std::string label = "proper";
    if (avoid_name.empty()) {
      p = proper_poset(g);
    } else {
      auto mu = g.id_of(avoid_name);
      if (!mu) throw UnknownSimple("unknown simple '" + avoid_name + "'");
      p = avoid_poset(g, *mu);
      label = "avoid " + avoid_name;
    }
    auto groups = reduced_poset_homology(p);
    if (opt.json_out) {
      json j;
      j["poset"] = label;
      json elems = json::array();
      for (SimpleId x : p.elements) elems.push_back(g.name_of(x));
      j["elements"] = elems;
      j["groups"] = graded_json(groups);
      emit(j);
    } else {
      for (const auto& gg : groups)
        std::cout << "H~_" << gg.degree << " = " << to_string(gg.group) << "\n";
    }
    return 0;
  }

  if (dual->parsed()) {
    DualityReport r = duality_check(g);
    if (opt.json_out) {
      json j;
      j["is_duality"] = r.is_duality ? "yes" : "inconclusive";
      if (r.n) j["n"] = *r.n;
      if (!r.reason.empty()) j["reason"] = r.reason;
      json posets = json::array();
      for (const auto& p : r.posets) posets.push_back(poset_report_json(g, p));
      j["posets"] = posets;
      emit(j);
    } else if (r.is_duality) {
      std::cout << "duality: yes, n = " << *r.n << " (" << r.posets.size()
                << " posets checked)\n";
    } else {
      std::cout << "duality: inconclusive (" << r.reason << ")\n";
    }
    return 0;
  }

  if (endc->parsed()) {
    EndConnectivityReport r = end_connectivity_check(g);
    if (opt.json_out) {
      json j;
      j["conclusive"] = r.conclusive;
      if (r.conclusive) {
        j["n"] = r.n;
        j["conclusion"] = r.conclusion;
      } else {
        j["reason"] = r.reason;
      }
      json posets = json::array();
      for (const auto& p : r.posets) posets.push_back(poset_report_json(g, p));
      j["posets"] = posets;
      emit(j);
    } else if (r.conclusive) {
      std::cout << "end connectivity: " << r.conclusion << " (n = " << r.n
                << ")\n";
    } else {
      std::cout << "end connectivity: inconclusive (" << r.reason << ")\n";
    }
    return 0;
  }

  if (links->parsed()) {
    GroupElement e = parse_element(g, word);
    if (e.exp() != 0) throw ParseError("links expects a delta-free word");
    FinitePoset down = descending_link(g, e.prefix());
    FinitePoset up = ascending_link(g, e.prefix());
    auto names = [&](const FinitePoset& p) {
      std::vector<std::string> out;
      for (SimpleId x : p.elements) out.push_back(g.name_of(x));
      return out;
    };
    if (opt.json_out) {
      emit(json{{"descending",
                 {{"elements", names(down)},
                  {"groups", graded_json(reduced_poset_homology(down))}}},
                {"ascending",
                 {{"elements", names(up)},
                  {"groups", graded_json(reduced_poset_homology(up))}}}});
    } else {
      auto show = [&](const char* label, const FinitePoset& p) {
        std::cout << label << ":";
        for (const auto& n : names(p)) std::cout << " " << n;
        std::cout << "\n";
      };
      show("descending", down);
      show("ascending", up);
    }
    return 0;
  }

  if (dist->parsed() || geo->parsed()) {
    Geometry geom(g);
    Vertex v = parse_vertex(g, elt_a);
    Vertex w = parse_vertex(g, elt_b);
    if (dist->parsed()) {
      long long d = geom.distance(v, w);
      opt.json_out ? emit(json{{"distance", d}})
                   : void(std::cout << d << "\n");
      return 0;
    }
    auto labels = geom.geodesic(v, w);
    auto profile = geom.orientation_profile(v, w);
    auto cosets = geom.geodesic_cosets(v, w);
    std::vector<std::string> profile_s;
    for (auto o : profile)
      profile_s.push_back(o == EdgeOrientation::down ? "down" : "up");
    if (opt.json_out) {
      json j;
      j["labels"] = json::array();
      for (SimpleId b : labels) j["labels"].push_back(g.name_of(b));
      j["profile"] = profile_s;
      j["cosets"] = json::array();
      for (const auto& c : cosets) j["cosets"].push_back(vertex_str(c));
      emit(j);
    } else {
      std::cout << "labels: " << render_word(g, labels) << "\n";
      std::cout << "profile:";
      for (const auto& s : profile_s) std::cout << " " << s;
      std::cout << "\n";
    }
    return 0;
  }

  if (cent->parsed()) {
    Geometry geom(g);
    std::vector<Vertex> t;
    for (const auto& s : vertex_args) t.push_back(parse_vertex(g, s));
    CenterReport r = geom.centers(t);
    if (opt.json_out) {
      json centers = json::array();
      for (const auto& c : r.centers) centers.push_back(vertex_str(c));
      emit(json{{"radius", r.radius}, {"centers", centers}});
    } else {
      std::cout << "radius: " << r.radius << "\ncenters:";
      for (const auto& c : r.centers) std::cout << " '" << vertex_str(c) << "'";
      std::cout << "\n";
    }
    return 0;
  }

  if (subs->parsed()) {
    auto records = finite_subgroups(g);
    if (opt.json_out) {
      json arr = json::array();
      for (const auto& r : records) {
        json j{{"mu", g.name_of(r.mu)}, {"j", r.j},     {"t", r.t},
               {"order", r.order},      {"type", r.type}};
        if (r.type == 2) j["k"] = r.k;
        arr.push_back(j);
      }
      emit(arr);
    } else {
      for (const auto& r : records) {
        std::cout << "type " << r.type << ": <" << g.name_of(r.mu) << " delta^"
                  << r.j << ">, t = " << r.t << ", order " << r.order;
        if (r.type == 2) std::cout << " (with delta^" << r.k << ")";
        std::cout << "\n";
      }
    }
    return 0;
  }

  if (tame->parsed()) {
    TamenessReport r = tameness_probe(g, max_power);
    if (opt.json_out) {
      json rows = json::array();
      for (auto [n, nrm] : r.norms) rows.push_back({{"n", n}, {"norm", nrm}});
      emit(json{{"rows", rows}, {"c", rational_json(r.c)}});
    } else {
      for (auto [n, nrm] : r.norms)
        std::cout << "||delta^" << n << "|| = " << nrm << "\n";
      std::cout << "c_" << max_power << " = " << r.c.num << "/" << r.c.den
                << "\n";
    }
    return 0;
  }

  if (trans->parsed()) {
    TranslationEstimate r = translation_length(parse_element(g, elt_a),
                                               max_power);
    std::optional<Rational> bound;
    if (tameness_power > 0) {
      TamenessReport probe = tameness_probe(g, tameness_power);
      // nontrivial elements satisfy tau >= 1/(c*d) when delta is c-tame
      bound = Rational::of(probe.c.den,
                           checked_mul(probe.c.num, g.delta_norm()));
    }
    if (opt.json_out) {
      json j{{"estimate", rational_json(r.estimate)},
             {"best_n", r.best_n},
             {"lengths", r.lengths}};
      if (bound) j["tame_lower_bound"] = rational_json(*bound);
      emit(j);
    } else {
      std::cout << "tau <= " << r.estimate.num << "/" << r.estimate.den
                << " (at n = " << r.best_n << ")\n";
      if (bound)
        std::cout << "tame lower bound 1/(c*d) = " << bound->num << "/"
                  << bound->den << "\n";
    }
    return 0;
  }

  return 2;
}

}  // namespace
