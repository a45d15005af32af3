#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qpc/contraction.hpp"
#include "qpc/errors.hpp"
#include "qpc/hopf.hpp"
#include "qpc/io.hpp"
#include "qpc/king.hpp"
#include "qpc/mutation.hpp"
#include "qpc/shuffle.hpp"
#include "qpc/suites.hpp"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kPrecondition = 3, kUnsupported = 4 };

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qpc::PreconditionError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<unsigned> parse_fields(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(static_cast<unsigned>(std::stoul(item)));
    } catch (const std::exception&) {
      throw qpc::PreconditionError("bad field list '" + text + "'");
    }
  }
  if (out.empty()) throw qpc::PreconditionError("empty field list");
  return out;
}

struct Defaults {
  int truncation = 3;
  std::vector<unsigned> fields{2, 3};

  static Defaults from_env() {
    Defaults d;
    if (const char* t = std::getenv("QPCONTRACT_TRUNCATION")) {
      try {
        d.truncation = std::stoi(t);
      } catch (const std::exception&) {
        throw qpc::PreconditionError("QPCONTRACT_TRUNCATION is not an integer");
      }
    }
    if (const char* f = std::getenv("QPCONTRACT_FIELDS")) d.fields = parse_fields(f);
    return d;
  }
};

std::vector<qpc::SymPoly> entries(const qpc::QPDocument& doc, std::size_t at_least) {
  if (doc.shuffle.size() < at_least)
    throw qpc::PreconditionError("need " + std::to_string(at_least) + " `gamma: ...; poly: ...` lines");
  std::vector<qpc::SymPoly> out;
  for (const auto& e : doc.shuffle) out.emplace_back(e.gamma, e.poly);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quiver-with-potential edge contraction toolkit"};
  app.require_subcommand(1);

  std::string file, arrow, vertex, gamma_text, max_text, fields_text, suite;
  unsigned threads = 1, field = 0;
  int degree = 4;
  double scale = 1.0;
  std::uint64_t seed = qpc::SuiteOptions{}.seed;
  bool check_members = false;

  auto* contract = app.add_subcommand("contract", "Contract an arrow of a quiver with potential");
  contract->add_option("--arrow", arrow, "arrow to contract")->required();
  contract->add_option("file", file, "QP file ('-' for stdin)")->required();

  auto* higgs_cmd = app.add_subcommand("higgs", "Higgs an arrow and compare with contraction");
  higgs_cmd->add_option("--arrow", arrow)->required();
  higgs_cmd->add_option("file", file)->required();

  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate at a vertex and reduce");
  mutate_cmd->add_option("--vertex", vertex)->required();
  mutate_cmd->add_option("file", file)->required();

  auto* mul = app.add_subcommand("shuffle-mul", "Multiply the shuffle elements listed in FILE");
  mul->add_option("file", file)->required();
  mul->add_option("--threads", threads);

  auto* cshuf = app.add_subcommand("contract-shuffle", "Contract each shuffle element in FILE");
  cshuf->add_option("--arrow", arrow)->required();
  cshuf->add_option("file", file)->required();

  auto* span = app.add_subcommand("spherical-span", "Basis of the spherical part in one degree");
  span->add_option("--gamma", gamma_text, "dimension vector, e.g. 1=1,2=1")->required();
  span->add_option("--degree", degree, "polynomial degree bound");
  span->add_flag("--member", check_members, "test the shuffle elements of FILE for membership");
  span->add_option("file", file)->required();

  auto* pair_cmd = app.add_subcommand("pair", "Skew pairing of the first two shuffle elements");
  pair_cmd->add_option("file", file)->required();

  auto* walls = app.add_subcommand("walls", "King wall support scan over a finite field");
  walls->add_option("--max", max_text, "largest dimension vector (default all ones)");
  walls->add_option("--field", field, "prime p <= 7 (default: first configured field)");
  walls->add_option("--threads", threads);
  walls->add_option("file", file)->required();

  auto* eta = app.add_subcommand("eta-check", "Embed contracted walls into the original stability space");
  eta->add_option("--arrow", arrow)->required();
  eta->add_option("--fields", fields_text, "comma separated primes");
  eta->add_option("--threads", threads);
  eta->add_option("file", file)->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(qpc::suite_names()));
  verify->add_option("--seed", seed);
  verify->add_option("--threads", threads);
  verify->add_option("--scale", scale, "multiplier on the number of random cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  std::string source;
  try {
    Defaults defaults = Defaults::from_env();
    auto load = [&] {
      source = read_source(file);
      return qpc::parse_qp(source);
    };

    if (*contract) {
      qpc::QPDocument doc = load();
      std::cout << qpc::print_qp(qpc::contract_qp(doc.qp, arrow), doc.name);
    } else if (*higgs_cmd) {
      qpc::QPDocument doc = load();
      qpc::HiggsResult h = qpc::higgs(doc.qp, arrow);
      std::cout << qpc::print_qp(h.higgsed, doc.name)
                << "# cubic terms integrated: " << (h.cubic_terms_integrated ? "yes" : "no") << "\n"
                << "# agrees with contraction: " << (h.agrees_with_contraction ? "yes" : "no") << "\n";
    } else if (*mutate_cmd) {
      qpc::QPDocument doc = load();
      std::cout << qpc::print_qp(qpc::mutate(doc.qp, vertex).reduced, doc.name);
    } else if (*mul) {
      qpc::QPDocument doc = load();
      auto fs = entries(doc, 2);
      qpc::SymPoly acc = fs[0];
      for (std::size_t k = 1; k < fs.size(); ++k) acc = qpc::shuffle_mul(doc.qp.quiver, acc, fs[k], threads);
      std::cout << qpc::print_sympoly(acc) << "\n";
    } else if (*cshuf) {
      qpc::QPDocument doc = load();
      for (const auto& f : entries(doc, 1))
        std::cout << qpc::print_sympoly(qpc::contract_shuffle(doc.qp.quiver, arrow, f)) << "\n";
    } else if (*span) {
      qpc::QPDocument doc = load();
      qpc::DimVector g = qpc::parse_gamma(doc.qp.quiver, gamma_text);
      if (check_members) {
        for (const auto& f : entries(doc, 1))
          std::cout << qpc::print_sympoly(f) << " -> "
                    << qpc::to_string(qpc::spherical_membership(doc.qp.quiver, f, degree)) << "\n";
      } else {
        auto basis = qpc::spherical_span(doc.qp.quiver, g, degree);
        std::cout << "# dimension " << basis.size() << "\n";
        for (const auto& b : basis) std::cout << qpc::print_sympoly(b) << "\n";
      }
    } else if (*pair_cmd) {
      qpc::QPDocument doc = load();
      auto fs = entries(doc, 2);
      std::cout << qpc::skew_pairing(doc.qp.quiver, fs[0], fs[1]).to_string() << "\n";
    } else if (*walls) {
      qpc::QPDocument doc = load();
      qpc::DimVector top = qpc::DimVector::zero(doc.qp.quiver);
      if (max_text.empty()) {
        for (const auto& v : doc.qp.quiver.vertices()) top.set(v, 1);
      } else {
        top = qpc::parse_gamma(doc.qp.quiver, max_text);
      }
      qpc::KingLimits lim;
      lim.threads = threads;
      unsigned p = field ? field : defaults.fields.front();
      std::cout << qpc::export_wall_scan(qpc::wall_support_scan(doc.qp.quiver, top, p, lim));
    } else if (*eta) {
      qpc::QPDocument doc = load();
      qpc::KingLimits lim;
      lim.threads = threads;
      auto fields = fields_text.empty() ? defaults.fields : parse_fields(fields_text);
      qpc::EtaReport rep = qpc::eta_check(doc.qp.quiver, arrow, fields, qpc::default_eta_grid(), lim);
      for (const auto& s : rep.samples) {
        std::cout << "F_" << s.p << " gamma=(" << qpc::print_gamma(s.gamma_hat) << ") kappa="
                  << qpc::to_string(s.kappa_hat) << " k:";
        for (const auto& k : s.working_k) std::cout << " " << qpc::to_string(k);
        std::cout << "\n";
      }
      std::cout << "common k: " << (rep.common_k ? qpc::to_string(*rep.common_k) : "none") << "\n"
                << "all embedded: " << (rep.all_embedded ? "yes" : "no") << "\n";
      return rep.all_embedded ? kOk : kVerifyFailed;
    } else if (*verify) {
      qpc::SuiteOptions opt;
      opt.seed = seed;
      opt.threads = threads;
      opt.scale = scale;
      opt.truncation = defaults.truncation;
      opt.fields = defaults.fields;
      qpc::SuiteReport r = qpc::run_suite(suite, opt);
      std::cout << r.to_string();
      return r.passed ? kOk : kVerifyFailed;
    }
  } catch (const qpc::ParseError& e) {
    for (const auto& d : e.diagnostics()) std::cerr << file << ":" << d.to_string(source) << "\n";
    return kParse;
  } catch (const qpc::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const qpc::UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const qpc::Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kOk;
}
