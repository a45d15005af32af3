#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "qpc/suites.hpp"

using namespace qpc;

namespace {

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  std::function<SuiteReport()> run;
};

SuiteReport spherical_criterion() {
  SuiteReport r;
  r.name = "spherical";
  SphericalReport s = spherical_counterexample(4);
  r.check(s.product == Membership::NotMember,
          "contracted C3 product " + s.contracted.to_string() + " outside the C2 spherical span");
  for (const auto& [label, m] : s.generators) r.check(m == Membership::Member, label + " in image");
  return r;
}

}  // namespace

int main() {
  SuiteOptions opt;
  const std::vector<Criterion> criteria = {
      {1, "two-loop contraction example", 1.0, [&] { return suite_example31(opt); }},
      {2, "shuffle kernel sanity", 30.0, [&] { return suite_fermion(opt); }},
      {3, "contraction homomorphism", 300.0, [&] { return suite_homomorphism(opt); }},
      {4, "Euler form preservation", 5.0, [&] { return suite_euler(opt); }},
      {5, "mutation theorem", 60.0, [&] { return suite_mutation366(opt); }},
      {6, "ADHM reduction", 60.0, [&] { return suite_adhm(opt); }},
      {7, "Hopf compatibility", 120.0, [&] { return suite_hopf(opt); }},
      {8, "stability and eta embedding", 600.0, [&] { return suite_eta(opt); }},
      {9, "spherical counterexample", 120.0, spherical_criterion},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    SuiteReport rep;
    std::string error;
    try {
      rep = c.run();
    } catch (const std::exception& e) {
      rep.passed = false;
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = rep.passed && error.empty() && secs < c.limit_seconds;
    if (!ok) ++failures;
    std::printf("criterion %d: %s (%s, %zu cases, %.3fs, limit %.0fs)\n", c.number, ok ? "PASS" : "FAIL",
                c.title, rep.cases, secs, c.limit_seconds);
    if (!ok) {
      if (!error.empty()) std::printf("  exception: %s\n", error.c_str());
      for (const auto& d : rep.details)
        if (d.rfind("FAIL", 0) == 0) std::printf("  %s\n", d.c_str());
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
