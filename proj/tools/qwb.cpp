#include <iostream>

#include "CLI11.hpp"
#include "qwb/distributivity.hpp"
#include "qwb/enumerate.hpp"
#include "qwb/karoubi.hpp"
#include "qwb/parse.hpp"
#include "qwb/suites.hpp"
#include "qwb/ultra.hpp"

using namespace qwb;

namespace {

struct Common {
  std::string quantale;
  int max = -1;
  std::uint64_t cap = kDefaultCap;
  bool sampled = false;
  unsigned seed = 0;
  std::string format = "text";
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--quantale", c.quantale, "builtin quantale name (boolean, chain(n))");
  app->add_option("--max", c.max, "maximum instance size");
  app->add_option("--cap", c.cap, "enumeration candidate cap");
  app->add_flag("--sampled", c.sampled, "thin heavy enumerations deterministically");
  app->add_option("--seed", c.seed, "seed for --sampled");
  app->add_option("--format", c.format, "text | machine")
      ->check(CLI::IsMember({"text", "machine"}));
}

void print_vec_line(const Quantale& q, const Vec& v) {
  std::cout << "psi:";
  for (Elem e : v) std::cout << ' ' << q.label(e);
  std::cout << '\n';
}

int cmd_check(const std::string& file) {
  Document doc = parse_file(file);
  for (const auto& [kind, name] : doc.order)
    std::cout << "ok [" << kind << "] " << name << '\n';
  std::cout << doc.order.size() << " section(s) valid\n";
  return 0;
}

int cmd_presheaf(const std::string& file, const Common& c) {
  Document doc = parse_file(file);
  for (const auto& [kind, name] : doc.order) {
    if (kind != "vcat") continue;
    const VCat& X = doc.vcats.at(name);
    PresheafCat PX = build_presheaves(X, c.cap);
    std::cout << "[vcat " << name << "] " << PX.size() << " presheaves\n";
    for (int i = 0; i < PX.size(); ++i) print_vec_line(*X.q, PX.at(i));
  }
  return 0;
}

int cmd_ccd(const std::string& file, const Common& c) {
  Document doc = parse_file(file);
  int rc = 0;
  for (const auto& [kind, name] : doc.order) {
    if (kind != "vcat") continue;
    const VCat& X = doc.vcats.at(name);
    auto w = ccd_witness(X, c.cap);
    if (w) {
      std::cout << "[vcat " << name << "] completely distributive; totally-below:\n";
      for (int x = 0; x < X.size(); ++x) {
        std::cout << " ";
        for (int y = 0; y < X.size(); ++y)
          std::cout << ' ' << X.q->label(w->theta.rel.at(x, y));
        std::cout << '\n';
      }
      continue;
    }
    rc = 1;
    PresheafCat PX = build_presheaves(X, c.cap);
    bool found = false;
    for (int i = 0; i < PX.size() && !found; ++i)
      if (!supremum(X, PX.at(i))) {
        std::cout << "[vcat " << name << "] obstruction: no supremum for";
        for (Elem e : PX.at(i)) std::cout << ' ' << X.q->label(e);
        std::cout << '\n';
        found = true;
      }
    if (!found)
      std::cout << "[vcat " << name
                << "] cocomplete but Sup has no left adjoint (not completely distributive)\n";
  }
  return rc;
}

int cmd_dualize(const std::string& file, const Common& c) {
  Document doc = parse_file(file);
  for (const auto& [kind, name] : doc.order) {
    if (kind != "vcat") continue;
    const VCat& X = doc.vcats.at(name);
    PresheafCat PX = build_presheaves(X, c.cap);
    std::cout << "[vcat " << name << "] DX (" << PX.size() << " presheaves):\n";
    for (int i = 0; i < PX.size(); ++i) print_vec_line(*X.q, PX.at(i));
    auto w = ccd_witness(X, c.cap);
    if (w) {
      std::cout << "SL (totally compact elements):";
      for (int x : totally_compact(*w)) std::cout << ' ' << X.objects[static_cast<size_t>(x)];
      std::cout << '\n';
    } else {
      std::cout << "SL: not completely distributive, no equaliser\n";
    }
  }
  return 0;
}

PhiFamily family_by_name(const std::string& s) {
  for (PhiFamily f : {family_all(), family_inhabited(), family_finite_sup(), family_tensor()})
    if (f.name == s) return f;
  throw std::runtime_error("unknown family '" + s + "' (all, inhabited, finite-sup, tensor)");
}

int cmd_phi(const std::string& famname, const std::string& file, const std::string& check,
            const Common& c) {
  PhiFamily fam = family_by_name(famname);
  Document doc = parse_file(file);
  int rc = 0;
  for (const auto& [kind, name] : doc.order) {
    if (kind != "vcat") continue;
    const VCat& X = doc.vcats.at(name);
    bool ok = false;
    if (check == "cocomplete") {
      ok = phi_sup(phi_presheaves(X, fam, c.cap)).has_value();
    } else if (check == "distributive") {
      ok = phi_ccd_witness(X, fam, c.cap).has_value();
    } else if (check == "algebraic") {
      auto w = phi_ccd_witness(X, fam, c.cap);
      ok = w && is_phi_algebraic(*w);
    } else if (check == "sober") {
      ok = is_phi_sober(X, fam, c.cap);
    }
    std::cout << "[vcat " << name << "] " << check << " (" << fam.name << "): "
              << (ok ? "yes" : "no") << '\n';
    if (!ok) rc = 1;
  }
  return rc;
}

int cmd_split(const std::string& file, const Common& c) {
  Document doc = parse_file(file);
  int rc = 0;
  for (const auto& [kind, name] : doc.order) {
    if (kind != "vmod") continue;
    const VModule& th = doc.vmods.at(name);
    if (!(th.dom == th.cod)) continue;
    if (!(mod_compose(th, th) == th)) {
      std::cout << "[vmod " << name << "] not idempotent, skipped\n";
      continue;
    }
    KarObject k{th.dom, th, family_all()};
    SplitS sp = split_S(k, c.cap);
    std::cout << "[vmod " << name << "] S has " << sp.S.size() << " object(s):\n";
    for (int i : sp.s_objs) print_vec_line(*th.dom.q, sp.PhiX.at(i));
    std::cout << "r (retraction on presheaf indices):";
    for (int v : sp.r) std::cout << ' ' << v;
    std::cout << "\ns (section, presheaf indices):";
    for (int v : sp.s_objs) std::cout << ' ' << v;
    std::cout << '\n';
    RoundtripReport rep = roundtrip_IS(k, c.cap);
    std::cout << "roundtrip: " << (rep.ok() ? "PASS" : "FAIL") << '\n';
    for (const auto& n : rep.notes) std::cout << "  " << n << '\n';
    if (!rep.ok()) rc = 1;
  }
  return rc;
}

int cmd_frames(const std::string& file, const Common&) {
  Document doc = parse_file(file);
  int rc = 0;
  for (const auto& [kind, name] : doc.order) {
    if (kind == "lattice") {
      const MeetSemilattice& L = doc.lattices.at(name);
      FilterSpace FL = filter_space(L);
      bool ok = true;
      for (int x = 0; x < L.size(); ++x)
        if (beta_by_meet(FL, alpha(FL, x)) != x) ok = false;
      for (std::uint32_t A : FL.space.opens) {
        auto bj = beta_by_join(FL, A);
        if (!bj || *bj != beta_by_meet(FL, A)) ok = false;
      }
      RhoVerdict rv = rho_check(L);
      std::cout << "[lattice " << name << "] " << FL.filters.size()
                << " filter(s); alpha/beta roundtrip: " << (ok ? "PASS" : "FAIL")
                << "; rho: "
                << (rv.applies ? (rv.iso ? "order-iso" : "FAIL") : "n/a (not a frame)") << '\n';
      if (!ok || (rv.applies && !rv.iso)) rc = 1;
    } else if (kind == "space") {
      const FiniteSpace& X = doc.spaces.at(name);
      SigmaVerdict sv = sigma_check(X);
      std::cout << "[space " << name << "] sigma: "
                << (sv.applies ? (sv.homeo ? "homeomorphism" : "FAIL") : "n/a") << '\n';
      if (sv.applies && !sv.homeo) rc = 1;
    }
  }
  return rc;
}

int run_and_print(const std::string& name, const SuiteOptions& so, const std::string& format) {
  SuiteReport r = run_suite(name, so);
  std::cout << format_report(r, format == "machine");
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model workbench for quantale-enriched order theory"};
  app.require_subcommand(1);
  Common c;
  std::string file, famname, check = "distributive", suite_name = "all";
  int verify_n = 3;

  auto* s_check = app.add_subcommand("check", "parse and validate a workbench file");
  s_check->add_option("file", file)->required();
  add_common(s_check, c);

  auto* s_psh = app.add_subcommand("presheaf", "list the presheaves of each vcat section");
  s_psh->add_option("file", file)->required();
  add_common(s_psh, c);

  auto* s_ccd = app.add_subcommand("ccd", "complete-distributivity witness or obstruction");
  s_ccd->add_option("file", file)->required();
  add_common(s_ccd, c);

  auto* s_dual = app.add_subcommand("dualize", "print SL and DX tables");
  s_dual->add_option("file", file)->required();
  add_common(s_dual, c);

  auto* s_phi = app.add_subcommand("phi", "family-relative checks");
  s_phi->add_option("family", famname, "all | inhabited | finite-sup | tensor")->required();
  s_phi->add_option("file", file)->required();
  s_phi->add_option("--check", check, "cocomplete | distributive | algebraic | sober")
      ->check(CLI::IsMember({"cocomplete", "distributive", "algebraic", "sober"}));
  add_common(s_phi, c);

  auto* s_split = app.add_subcommand("split", "split the idempotent vmod sections");
  s_split->add_option("file", file)->required();
  add_common(s_split, c);

  auto* s_frames = app.add_subcommand("frames", "filter-space roundtrips");
  s_frames->add_option("--roundtrip", file, "workbench file with lattice/space sections")
      ->required();
  add_common(s_frames, c);

  auto* s_ultra = app.add_subcommand("ultra", "ultrafilter-module laws");
  s_ultra->add_option("--verify", verify_n, "carrier bound (<= 4)");
  add_common(s_ultra, c);

  auto* s_suite = app.add_subcommand("suite", "run an acceptance suite");
  s_suite->add_option("name", suite_name, "suite name or 'all'");
  add_common(s_suite, c);

  auto* s_enum = app.add_subcommand("enumerate", "count labeled structures per size");
  add_common(s_enum, c);

  CLI11_PARSE(app, argc, argv);

  try {
    if (s_check->parsed()) return cmd_check(file);
    if (s_psh->parsed()) return cmd_presheaf(file, c);
    if (s_ccd->parsed()) return cmd_ccd(file, c);
    if (s_dual->parsed()) return cmd_dualize(file, c);
    if (s_phi->parsed()) return cmd_phi(famname, file, check, c);
    if (s_split->parsed()) return cmd_split(file, c);
    if (s_frames->parsed()) return cmd_frames(file, c);
    if (s_ultra->parsed()) {
      SuiteOptions so{c.cap, verify_n, c.sampled, c.seed, c.quantale};
      return run_and_print("ultra", so, c.format);
    }
    if (s_suite->parsed()) {
      SuiteOptions so{c.cap, c.max, c.sampled, c.seed, c.quantale};
      int rc = 0;
      if (suite_name == "all") {
        for (const auto& n : suite_names()) rc |= run_and_print(n, so, c.format);
      } else {
        rc = run_and_print(suite_name, so, c.format);
      }
      return rc;
    }
    if (s_enum->parsed()) {
      QuantalePtr q = resolve_quantale({}, c.quantale.empty() ? "boolean" : c.quantale);
      int nmax = c.max < 0 ? (q->size() == 2 ? 4 : 3) : c.max;
      for (int n = 0; n <= nmax; ++n) {
        auto cats = enumerate_vcats(q, n, static_cast<long long>(c.cap));
        if (c.format == "machine")
          std::cout << "enumerate " << q->name() << " n=" << n << " count=" << cats.size()
                    << '\n';
        else
          std::cout << q->name() << ", " << n << " object(s): " << cats.size()
                    << " labeled structure(s)\n";
        if (q->size() == 2 && n <= 4 && cats.size() !=
            static_cast<size_t>(count_preorders_via_closure(n))) {
          std::cout << "MISMATCH with transitive-closure count\n";
          return 1;
        }
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
