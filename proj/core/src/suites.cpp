#include "qpc/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "qpc/contraction.hpp"
#include "qpc/errors.hpp"
#include "qpc/hopf.hpp"
#include "qpc/king.hpp"
#include "qpc/mutation.hpp"
#include "qpc/preprojective.hpp"
#include "qpc/scattering.hpp"

namespace qpc {

void SuiteReport::check(bool ok, const std::string& what) {
  ++cases;
  if (!ok) {
    passed = false;
    details.push_back("FAIL " + what);
  }
}

std::string SuiteReport::to_string() const {
  std::ostringstream os;
  os << name << ": " << (passed ? "PASS" : "FAIL") << " (" << cases << " cases)\n";
  for (const auto& d : details) os << "  " << d << "\n";
  return os.str();
}

namespace {

std::size_t scaled(const SuiteOptions& opt, std::size_t n) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(static_cast<double>(n) * opt.scale + 0.5));
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Path word_path(const PathAlgebra& alg, std::initializer_list<const char*> ids) {
  Word w;
  for (const char* id : ids) w.push_back({id, false});
  return alg.path(std::move(w));
}

std::string describe(const Quiver& q) {
  std::string s;
  for (const auto& a : q.arrows()) s += a.id + ":" + a.source + "->" + a.target + " ";
  return s;
}

Quiver named_quiver(std::vector<std::string> vs, std::vector<Arrow> as) {
  return Quiver(std::move(vs), std::move(as));
}

}  // namespace

// ---------------------------------------------------------------------------
// Fixtures

std::string example31_text() {
  return "quiver Example31\n"
         "vertices: i+, i-, 1, 2\n"
         "arrows: a0: i+ -> i-; a2: i+ -> i-; a1: i- -> i+; l1: i- -> i-; l2: i- -> i-; "
         "b: i- -> 1; c: 1 -> 2; d: 2 -> i-\n"
         "potential: 1 * a1.l1.l1.l2.l2.l2.a0 + 1 * l1.d.c.b\n";
}

QuiverWithPotential example31() {
  QuiverWithPotential qp;
  qp.quiver = named_quiver({"i+", "i-", "1", "2"},
                           {{"a0", "i+", "i-"}, {"a2", "i+", "i-"}, {"a1", "i-", "i+"},
                            {"l1", "i-", "i-"}, {"l2", "i-", "i-"}, {"b", "i-", "1"},
                            {"c", "1", "2"}, {"d", "2", "i-"}});
  PathAlgebra alg = qp.algebra();
  qp.potential.add(word_path(alg, {"a1", "l1", "l1", "l2", "l2", "l2", "a0"}), 1);
  qp.potential.add(word_path(alg, {"l1", "d", "c", "b"}), 1);
  return qp;
}

QuiverWithPotential example31_expected_contraction() {
  const char* L1 = "a0^-1*l1*a0";
  const char* L2 = "a0^-1*l2*a0";
  QuiverWithPotential qp;
  qp.quiver = named_quiver({"i+", "1", "2"},
                           {{"a0^-1*a2", "i+", "i+"}, {"a1*a0", "i+", "i+"}, {L1, "i+", "i+"},
                            {L2, "i+", "i+"}, {"b*a0", "i+", "1"}, {"c", "1", "2"},
                            {"a0^-1*d", "2", "i+"}});
  PathAlgebra alg = qp.algebra();
  qp.potential.add(word_path(alg, {"a1*a0", L1, L1, L2, L2, L2}), 1);
  qp.potential.add(word_path(alg, {L1, "a0^-1*d", "c", "b*a0"}), 1);
  return qp;
}

Contractible random_contractible(Rng& rng, int max_vertices, int max_arrows, bool loops) {
  int n = uniform(rng, 2, std::max(2, max_vertices));
  std::vector<std::string> vs;
  for (int i = 1; i <= n; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<Arrow> as{{"a0", "v1", "v2"}};
  int extra = uniform(rng, 0, std::max(0, max_arrows - 1));
  for (int k = 1; k <= extra; ++k) {
    std::string s = vs[static_cast<std::size_t>(uniform(rng, 0, n - 1))];
    std::string t = vs[static_cast<std::size_t>(uniform(rng, 0, n - 1))];
    if (s == t && !loops) continue;
    as.push_back({"a" + std::to_string(k), s, t});
  }
  return {Quiver(vs, as), "a0"};
}

DimVector random_equal_sector(Rng& rng, const Quiver& q, const std::string& a0, int max_rank,
                              long max_total) {
  ContractionShape sh = contraction_shape(q, a0);
  for (;;) {
    DimVector g = DimVector::zero(q);
    for (const auto& v : q.vertices()) g.set(v, uniform(rng, 0, max_rank));
    g.set(sh.minus, g[sh.plus]);
    if (!g.is_zero() && g.total() <= max_total) return g;
  }
}

SymPoly random_sympoly(Rng& rng, const DimVector& gamma, int max_degree) {
  std::vector<Var> vars = slot_variables(gamma);
  Poly h;
  int terms = uniform(rng, 1, 3);
  for (int t = 0; t < terms; ++t) {
    int c = uniform(rng, -3, 3);
    if (c == 0) c = 1;
    Poly m = Poly::constant(c);
    int budget = uniform(rng, 0, max_degree);
    for (int e = 0; e < budget && !vars.empty(); ++e)
      m = m * Poly::variable(vars[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(vars.size()) - 1))]);
    h += m;
  }
  Poly s = symmetrize(h, gamma);
  if (s.is_zero()) s = Poly::constant(1);
  return SymPoly(gamma, s);
}

namespace {

// Simple cycles through a0 (as written words ending in a0), length in [min_len, max_len].
std::vector<Word> cycles_through(const Quiver& q, const std::string& a0, std::size_t min_len,
                                 std::size_t max_len) {
  const Arrow& first = q.arrow(a0);
  std::vector<Word> out;
  std::vector<std::string> trail{first.id};
  std::vector<std::string> seen{first.source, first.target};
  std::function<void(const std::string&)> walk = [&](const std::string& at) {
    if (trail.size() >= max_len) return;
    for (const Arrow* a : q.arrows_out_of(at)) {
      if (a->target == first.source) {
        if (trail.size() + 1 >= min_len) {
          Word w;
          w.push_back({a->id, false});
          for (auto it = trail.rbegin(); it != trail.rend(); ++it) w.push_back({*it, false});
          out.push_back(std::move(w));
        }
        continue;
      }
      if (std::find(seen.begin(), seen.end(), a->target) != seen.end()) continue;
      trail.push_back(a->id);
      seen.push_back(a->target);
      walk(a->target);
      trail.pop_back();
      seen.pop_back();
    }
  };
  walk(first.target);
  return out;
}

}  // namespace

std::vector<QuiverWithPotential> mutation_family(Rng& rng, char which, std::size_t count) {
  std::vector<QuiverWithPotential> out;
  const std::vector<std::string> vs{"i+", "i-", "u", "v", "w"};
  for (int attempt = 0; attempt < 5000 && out.size() < count; ++attempt) {
    std::vector<Arrow> as{{"a0", "i+", "i-"}};
    int extra = uniform(rng, 3, 6);
    for (int k = 1; k <= extra; ++k) {
      const std::string& s = vs[static_cast<std::size_t>(uniform(rng, 0, 4))];
      const std::string& t = vs[static_cast<std::size_t>(uniform(rng, 0, 4))];
      if (s == t) continue;
      if (which == 'A' && s == "i+") continue;
      if (which == 'B' && t == "i-") continue;
      as.push_back({"b" + std::to_string(k), s, t});
    }
    QuiverWithPotential qp;
    qp.quiver = Quiver(vs, as);
    std::vector<Word> cyc = cycles_through(qp.quiver, "a0", 4, 6);
    if (cyc.empty()) continue;
    PathAlgebra alg = qp.algebra();
    int picks = uniform(rng, 1, std::min<int>(2, static_cast<int>(cyc.size())));
    for (int k = 0; k < picks; ++k) {
      const Word& w = cyc[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(cyc.size()) - 1))];
      qp.potential.add(alg.path(w), uniform(rng, 0, 1) ? 1 : -1);
    }
    if (qp.potential.is_zero()) continue;
    try {
      TheoremCheck t = theorem_check_366(qp, "a0");
      if (t.sequence_case != which) continue;
    } catch (const AssumptionViolation&) {
      continue;
    } catch (const UnsupportedError&) {
      continue;
    }
    out.push_back(std::move(qp));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suites

SuiteReport suite_example31(const SuiteOptions&) {
  SuiteReport r;
  r.name = "example31";
  QuiverWithPotential got = contract_qp(example31(), "a0");
  QuiverWithPotential want = example31_expected_contraction();
  r.check(got.quiver.vertices().size() == 3, "vertex count " + std::to_string(got.quiver.vertices().size()));
  r.check(got.quiver.arrows().size() == 7, "arrow count " + std::to_string(got.quiver.arrows().size()));
  r.check(got.quiver.same_as(want.quiver), "contracted quiver: " + describe(got.quiver));
  r.check(got.potential == want.potential, "contracted potential: " + got.potential.to_string());
  return r;
}

SuiteReport suite_homomorphism(const SuiteOptions& opt) {
  SuiteReport r;
  r.name = "homomorphism";
  Rng rng(opt.seed);
  std::size_t n = scaled(opt, 100);
  for (std::size_t k = 0; k < n; ++k) {
    Contractible c = random_contractible(rng, 4, 6);
    DimVector g1 = random_equal_sector(rng, c.quiver, c.a0, 2, 4);
    DimVector g2 = random_equal_sector(rng, c.quiver, c.a0, 2, 6 - g1.total());
    SymPoly f = random_sympoly(rng, g1, 3), g = random_sympoly(rng, g2, 3);
    Quiver qh = contract_quiver(c.quiver, c.a0);
    SymPoly lhs = contract_shuffle(c.quiver, c.a0, shuffle_mul(c.quiver, f, g, opt.threads));
    SymPoly rhs = shuffle_mul(qh, contract_shuffle(c.quiver, c.a0, f),
                              contract_shuffle(c.quiver, c.a0, g), opt.threads);
    r.check(lhs == rhs, "case " + std::to_string(k) + " on " + describe(c.quiver));
  }
  return r;
}

SuiteReport suite_euler(const SuiteOptions& opt) {
  SuiteReport r;
  r.name = "euler";
  Rng rng(opt.seed ^ 0x45554c4552ULL);
  std::size_t n = scaled(opt, 200);
  for (std::size_t k = 0; k < n; ++k) {
    Contractible c = random_contractible(rng, 5, 8);
    DimVector g1 = random_equal_sector(rng, c.quiver, c.a0, 3, 100);
    DimVector g2 = random_equal_sector(rng, c.quiver, c.a0, 3, 100);
    Quiver qh = contract_quiver(c.quiver, c.a0);
    long lhs = euler_form(c.quiver, g1, g2);
    long rhs = euler_form(qh, contract_dim(c.quiver, c.a0, g1), contract_dim(c.quiver, c.a0, g2));
    r.check(lhs == rhs, "case " + std::to_string(k) + ": " + std::to_string(lhs) +
                            " vs " + std::to_string(rhs));
  }
  return r;
}

SuiteReport suite_mutation366(const SuiteOptions& opt) {
  SuiteReport r;
  r.name = "mutation366";
  Rng rng(opt.seed ^ 0x366ULL);
  std::size_t n = scaled(opt, 5);
  for (char which : {'A', 'B'}) {
    auto family = mutation_family(rng, which, n);
    if (family.size() < n)
      r.check(false, std::string("only ") + std::to_string(family.size()) + " admissible quivers in case " + which);
    for (const auto& qp : family) {
      TheoremCheck t = theorem_check_366(qp, "a0");
      std::string what = std::string("case ") + which + " on " + describe(qp.quiver) +
                         "W = " + qp.potential.to_string();
      for (const auto& d : t.diff) what += "; " + d;
      r.check(t.holds, what);
    }
  }
  return r;
}

SuiteReport suite_adhm(const SuiteOptions& opt) {
  SuiteReport r;
  r.name = "adhm";
  auto run = [&](const Quiver& q, const std::string& a0, const std::string& label) {
    r.check(contract_triple_check(q, a0), "triple contraction on " + label);
    r.check(adhm_elimination_check(q, a0), "ADHM elimination on " + label);
  };
  run(Quiver({"1", "2"}, {{"a0", "1", "2"}}), "a0", "A2");
  run(Quiver({"1", "2"}, {{"a0", "1", "2"}, {"a1", "1", "2"}}), "a0", "Kronecker");
  Rng rng(opt.seed ^ 0xADA0ULL);
  std::size_t n = scaled(opt, 12);
  for (std::size_t k = 0; k < n; ++k) {
    Contractible c = random_contractible(rng, 4, 5);
    run(c.quiver, c.a0, describe(c.quiver));
  }
  return r;
}

SuiteReport suite_hopf(const SuiteOptions& opt) {
  SuiteReport r;
  r.name = "hopf";
  Rng rng(opt.seed ^ 0x40BFULL);
  std::size_t n = scaled(opt, 20);
  for (std::size_t k = 0; k < n; ++k) {
    Contractible c = random_contractible(rng, 4, 6);
    DimVector g = random_equal_sector(rng, c.quiver, c.a0, 2, 6);
    r.check(contraction_ratio_check(c.quiver, c.a0, g),
            "psi ratio on " + describe(c.quiver));
  }
  std::size_t m = scaled(opt, 12);
  for (std::size_t k = 0; k < m; ++k) {
    Contractible c = random_contractible(rng, 3, 5);
    ContractionShape sh = contraction_shape(c.quiver, c.a0);
    DimVector g = DimVector::zero(c.quiver);
    g.set(sh.plus, 1);
    g.set(sh.minus, 1);
    SymPoly f = random_sympoly(rng, g, 2), h = random_sympoly(rng, g, 2);
    r.check(coproduct_contraction_check(c.quiver, c.a0, f),
            "coproduct restriction for " + f.to_string() + " on " + describe(c.quiver));
    r.check(double_cross_check(c.quiver, c.a0, f, h),
            "cross relation for " + f.to_string() + ", " + h.to_string() + " on " + describe(c.quiver));
  }
  for (std::size_t k = 0; k < m; ++k) {
    Contractible c = random_contractible(rng, 3, 4);
    DimVector g = random_equal_sector(rng, c.quiver, c.a0, 2, 5);
    DimVector gh = contract_dim(c.quiver, c.a0, g);
    SymPoly h = random_sympoly(rng, gh, 2);
    r.check(pairing_normalization_check(c.quiver, c.a0, g, h.poly()),
            "symmetrizer normalization on " + describe(c.quiver));
  }
  return r;
}

namespace {

GComplex two_wall_diagram(const Quiver& q, int truncation) {
  GComplex d;
  d.torus = {q, truncation};
  for (const auto& v : {std::string("1"), std::string("2")}) {
    Wall w;
    w.normal = unit_vector(q, v);
    w.element = QTElement::basis(w.normal);
    w.label = "e" + v;
    d.walls.push_back(std::move(w));
  }
  return d;
}

JointSample origin_joint() {
  return {{{"1", 0}, {"2", 0}}, {{"1", 1}, {"2", 0}}, {{"1", 0}, {"2", 1}}, 1};
}

}  // namespace

SuiteReport suite_eta(const SuiteOptions& opt) {
  SuiteReport r;
  r.name = "eta";
  KingLimits lim;
  lim.threads = opt.threads;

  // A2 wall list: e1 and e2 walls everywhere on their hyperplanes, (1,1) only where kappa_2 <= 0.
  Quiver a2({"1", "2"}, {{"a", "1", "2"}});
  for (unsigned p : opt.fields) {
    DimVector top{{"1", 1}, {"2", 1}};
    for (const auto& e : wall_support_scan(a2, top, p, lim)) {
      for (const auto& s : e.samples) {
        bool want = e.gamma.total() == 1 || s.kappa.at("2") <= 0;
        r.check(s.semistable == want, "A2 over F_" + std::to_string(p) + " at gamma=" +
                                          std::to_string(e.gamma["1"]) + "," +
                                          std::to_string(e.gamma["2"]) + " kappa=" + to_string(s.kappa));
      }
    }
  }

  // j attached to i+ or i- in either orientation; contraction gives A2.
  std::vector<std::pair<std::string, Arrow>> fams{{"b: j -> i-", {"b", "j", "i-"}},
                                                  {"b: i- -> j", {"b", "i-", "j"}},
                                                  {"b: j -> i+", {"b", "j", "i+"}},
                                                  {"b: i+ -> j", {"b", "i+", "j"}}};
  for (const auto& [label, b] : fams) {
    Quiver q({"j", "i+", "i-"}, {{"a0", "i+", "i-"}, b});
    EtaReport rep = eta_check(q, "a0", opt.fields, default_eta_grid(), lim);
    std::string miss;
    for (const auto& s : rep.samples)
      if (s.working_k.empty()) miss += " " + to_string(s.kappa_hat);
    r.check(!rep.samples.empty() && rep.all_embedded, "family " + label + " unembedded:" + miss);
  }

  // Commuting walls are consistent; A2 walls alone miss the e1+e2 wall.
  Quiver pair0({"1", "2"}, {});
  r.check(consistency_check(two_wall_diagram(pair0, opt.truncation), {origin_joint()}),
          "commuting two-wall diagram reported inconsistent");
  r.check(!consistency_check(two_wall_diagram(a2, opt.truncation), {origin_joint()}),
          "A2 two-wall diagram reported consistent");
  return r;
}

SuiteReport suite_fermion(const SuiteOptions& opt) {
  SuiteReport r;
  r.name = "fermion";
  Quiver point({"o"}, {});
  Quiver jordan({"o"}, {{"l", "o", "o"}});
  SymPoly one = generator(point, "o", 0);
  r.check(shuffle_mul(point, one, one).is_zero(), "1*1 on the point quiver");
  SymPoly jone = generator(jordan, "o", 0);
  r.check(shuffle_mul(jordan, jone, jone).poly() == Poly::constant(2), "1*1 on the Jordan quiver");

  // f*g = (f(x1)g(x2) - f(x2)g(x1))/(x2 - x1) at a loop-free vertex.
  Rng rng(opt.seed ^ 0xFE41ULL);
  const Var x1 = Var::x("o", 1), x2 = Var::x("o", 2);
  for (std::size_t k = 0; k < scaled(opt, 20); ++k) {
    int a = uniform(rng, 0, 4), b = uniform(rng, 0, 4);
    SymPoly f = generator(point, "o", a), g = generator(point, "o", b);
    Poly fx1 = f.poly(), gx1 = g.poly();
    Poly fx2 = fx1.rename({{x1, x2}}), gx2 = gx1.rename({{x1, x2}});
    Poly num = fx1 * gx2 - fx2 * gx1;
    auto q = num.divide_linear(x2, x1);
    SymPoly got = shuffle_mul(point, f, g);
    r.check(q && got.poly() == *q, "closed form for x^" + std::to_string(a) + " * x^" + std::to_string(b));
  }

  std::size_t n = scaled(opt, 500);
  for (std::size_t k = 0; k < n; ++k) {
    Contractible c = random_contractible(rng, 3, 4);
    auto small = [&] {
      for (;;) {
        DimVector g = DimVector::zero(c.quiver);
        for (const auto& v : c.quiver.vertices()) g.set(v, uniform(rng, 0, 1));
        if (!g.is_zero()) return g;
      }
    };
    SymPoly f = random_sympoly(rng, small(), 2), g = random_sympoly(rng, small(), 2);
    try {
      shuffle_mul(c.quiver, f, g, opt.threads);
      r.check(true, "");
    } catch (const InternalError& e) {
      r.check(false, std::string("product ") + std::to_string(k) + ": " + e.what());
    }
  }
  return r;
}

SuiteReport suite_spherical(const SuiteOptions&) {
  SuiteReport r;
  r.name = "spherical";
  SphericalReport s = spherical_counterexample();
  r.details.push_back("contracted product " + s.contracted.to_string() + ": " + to_string(s.product));
  r.check(s.product == Membership::NotMember, "contracted C3 product is " + to_string(s.product));
  for (const auto& [label, m] : s.generators)
    r.check(m == Membership::Member, "generator " + label + " is " + to_string(m));
  return r;
}

SphericalReport spherical_counterexample(int max_degree) {
  Quiver c3({"1", "2", "3"}, {{"a1", "1", "2"}, {"a2", "2", "3"}, {"a3", "3", "1"}});
  const std::string a0 = "a1";
  Quiver c2 = contract_quiver(c3, a0);
  SphericalReport rep;
  // Ordered i-, i- + 1, ..., i+ around the cycle.
  SymPoly prod = shuffle_mul(c3, shuffle_mul(c3, generator(c3, "2", 0), generator(c3, "3", 0)),
                             generator(c3, "1", 0));
  rep.contracted = contract_shuffle(c3, a0, prod);
  rep.product = spherical_membership(c2, rep.contracted, max_degree);
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b) {
      SymPoly xp = generator(c3, "1", a), xm = generator(c3, "2", b);
      std::string tag = "x1^" + std::to_string(a) + ", x2^" + std::to_string(b);
      rep.generators.emplace_back(
          "c(" + tag + ")", spherical_membership(c2, contract_shuffle(c3, a0, shuffle_mul(c3, xp, xm)), max_degree));
      rep.generators.emplace_back(
          "c(" + tag + " reversed)",
          spherical_membership(c2, contract_shuffle(c3, a0, shuffle_mul(c3, xm, xp)), max_degree));
    }
  return rep;
}

std::vector<std::string> suite_names() {
  return {"example31", "homomorphism", "euler", "mutation366", "adhm",
          "hopf",      "eta",          "fermion", "spherical"};
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& opt) {
  static const std::map<std::string, std::function<SuiteReport(const SuiteOptions&)>, std::less<>> table{
      {"example31", suite_example31}, {"homomorphism", suite_homomorphism},
      {"euler", suite_euler},         {"mutation366", suite_mutation366},
      {"adhm", suite_adhm},           {"hopf", suite_hopf},
      {"eta", suite_eta},             {"fermion", suite_fermion},
      {"spherical", suite_spherical}};
  auto it = table.find(name);
  if (it == table.end()) throw LookupError("unknown suite '" + std::string(name) + "'");
  return it->second(opt);
}

}  // namespace qpc
