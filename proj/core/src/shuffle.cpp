#include "qpc/shuffle.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "qpc/errors.hpp"
#include "qpc/matrix.hpp"

namespace qpc {

std::vector<Var> slot_variables(const DimVector& gamma) {
  std::vector<Var> vs;
  for (const auto& [v, n] : gamma.entries())
    for (long a = 1; a <= n; ++a) vs.push_back(Var::x(v, static_cast<int>(a)));
  return vs;
}

bool is_symmetric(const Poly& p, const DimVector& gamma) {
  for (const auto& [v, n] : gamma.entries())
    for (long a = 1; a < n; ++a) {
      Var x1 = Var::x(v, static_cast<int>(a)), x2 = Var::x(v, static_cast<int>(a + 1));
      if (!(p.rename({{x1, x2}, {x2, x1}}) == p)) return false;
    }
  return true;
}

SymPoly::SymPoly(DimVector gamma, const Poly& p) : gamma_(std::move(gamma)) {
  poly_ = p.over(slot_variables(gamma_));
  if (!is_symmetric(poly_, gamma_))
    throw PreconditionError("polynomial " + p.to_string() + " is not symmetric");
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
  if (!(gamma_ == o.gamma_)) throw DimensionVectorError("adding shuffle elements of different degree");
  return SymPoly(gamma_, poly_ + o.poly_);
}

SymPoly SymPoly::operator*(const Rational& c) const { return SymPoly(gamma_, poly_ * c); }

std::string SymPoly::to_string() const {
  std::string g;
  for (const auto& [v, n] : gamma_.entries()) {
    if (!g.empty()) g += ",";
    g += v + "=" + std::to_string(n);
  }
  return "gamma: " + g + "; poly: " + poly_.to_string();
}

DimVector unit_vector(const Quiver& q, std::string_view vertex) {
  if (!q.has_vertex(vertex)) throw LookupError("no vertex '" + std::string(vertex) + "'");
  DimVector e = DimVector::zero(q);
  e.set(std::string(vertex), 1);
  return e;
}

SymPoly generator(const Quiver& q, std::string_view vertex, int k) {
  Poly p = Poly::constant(1);
  Var x = Var::x(std::string(vertex), 1);
  for (int i = 0; i < k; ++i) p = p * Poly::variable(x);
  return SymPoly(unit_vector(q, vertex), p);
}

void ShuffleElement::add(const SymPoly& f) {
  auto it = parts_.find(f.gamma());
  if (it == parts_.end()) {
    if (!f.is_zero()) parts_.emplace(f.gamma(), f);
    return;
  }
  it->second = it->second + f;
  if (it->second.is_zero()) parts_.erase(it);
}

FactoredFn fac_factored(const Quiver& q, const DimVector& g1, const DimVector& g2) {
  check_keys(q, g1.entries());
  check_keys(q, g2.entries());
  FactoredFn r(1);
  for (const auto& a : q.arrows())
    for (long a1 = 1; a1 <= g1[a.source]; ++a1)
      for (long a2 = 1; a2 <= g2[a.target]; ++a2)
        r = r * FactoredFn::factor(Var::x(a.target, static_cast<int>(g1[a.target] + a2)),
                                   Var::x(a.source, static_cast<int>(a1)));
  for (const auto& v : q.vertices())
    for (long a1 = 1; a1 <= g1[v]; ++a1)
      for (long a2 = 1; a2 <= g2[v]; ++a2)
        r = r * FactoredFn::factor(Var::x(v, static_cast<int>(g1[v] + a2)),
                                   Var::x(v, static_cast<int>(a1)), -1);
  return r;
}

RationalFn fac_kernel(const Quiver& q, const DimVector& g1, const DimVector& g2) {
  return RationalFn::from(fac_factored(q, g1, g2));
}

namespace {

struct Shuffle {
  std::map<Var, Var> first;   // block-one slot -> position
  std::map<Var, Var> second;  // block-two slot -> position
};

std::vector<Shuffle> enumerate_shuffles(const DimVector& g1, const DimVector& g2) {
  std::vector<Shuffle> out{Shuffle{}};
  for (const auto& [v, n1] : g1.entries()) {
    long n2 = g2[v], n = n1 + n2;
    std::vector<Shuffle> next;
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + n1, true);
    // prev_permutation walks all subsets of size n1 from the lexicographically largest.
    do {
      for (const auto& s : out) {
        Shuffle t = s;
        int i1 = 0, i2 = 0;
        for (long p = 0; p < n; ++p) {
          Var pos = Var::x(v, static_cast<int>(p + 1));
          if (pick[static_cast<std::size_t>(p)])
            t.first.emplace(Var::x(v, ++i1), pos);
          else
            t.second.emplace(Var::x(v, static_cast<int>(n1 + ++i2)), pos);
        }
        next.push_back(std::move(t));
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    out = std::move(next);
  }
  return out;
}

FactoredFn vandermonde(const DimVector& g) {
  FactoredFn d(1);
  for (const auto& [v, n] : g.entries())
    for (long a = 1; a <= n; ++a)
      for (long b = a + 1; b <= n; ++b)
        d = d * FactoredFn::factor(Var::x(v, static_cast<int>(b)), Var::x(v, static_cast<int>(a)));
  return d;
}

Poly expand(const FactoredFn& f) {
  Poly p = Poly::constant(f.constant());
  for (const auto& [lf, e] : f.exponents()) {
    if (e < 0) throw InternalError("shuffle term has a denominator outside the Vandermonde");
    for (int k = 0; k < e; ++k) p = p.mul_linear(lf.lead, lf.tail);
  }
  return p;
}

}  // namespace

SymPoly shuffle_mul(const Quiver& q, const SymPoly& f, const SymPoly& g, unsigned threads) {
  const DimVector& g1 = f.gamma();
  const DimVector& g2 = g.gamma();
  check_keys(q, g1.entries());
  check_keys(q, g2.entries());
  DimVector gamma = g1 + g2;

  // Block-two variables of g are shifted past block one.
  std::map<Var, Var> shift;
  for (const auto& [v, n] : g2.entries())
    for (long b = 1; b <= n; ++b)
      shift.emplace(Var::x(v, static_cast<int>(b)), Var::x(v, static_cast<int>(g1[v] + b)));
  const Poly gs = g.poly().rename(shift);
  const FactoredFn kernel = fac_factored(q, g1, g2);
  const FactoredFn vdm = vandermonde(gamma);
  const std::vector<Shuffle> shuffles = enumerate_shuffles(g1, g2);

  auto partial = [&](std::size_t begin, std::size_t step) {
    Poly acc;
    for (std::size_t k = begin; k < shuffles.size(); k += step) {
      std::map<Var, Var> sigma = shuffles[k].first;
      sigma.insert(shuffles[k].second.begin(), shuffles[k].second.end());
      // sigma(f g fac) * V with V the Vandermonde of gamma, which clears every denominator.
      FactoredFn scaled = kernel.rename(sigma) * vdm;
      acc += f.poly().rename(sigma) * gs.rename(sigma) * expand(scaled);
    }
    return acc;
  };

  Poly numerator;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(shuffles.size())));
  if (threads == 1) {
    numerator = partial(0, 1);
  } else {
    std::vector<Poly> parts(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] { parts[t] = partial(t, threads); });
    for (auto& th : pool) th.join();
    for (const auto& p : parts) numerator += p;
  }

  std::map<LinearFactor, int> den;
  for (const auto& [lf, e] : vdm.exponents()) den[lf] = e;
  RationalFn r(numerator * Rational(1 / vdm.constant()), den);
  if (!r.is_polynomial())
    throw InternalError("shuffle product is not a polynomial: " + r.to_string());
  return SymPoly(gamma, r.numerator());
}

ShuffleElement shuffle_mul(const Quiver& q, const ShuffleElement& f, const ShuffleElement& g) {
  ShuffleElement out;
  for (const auto& [a, x] : f.components())
    for (const auto& [b, y] : g.components()) out.add(shuffle_mul(q, x, y));
  return out;
}

DimVector contract_dim(const Quiver& q, std::string_view a0, const DimVector& gamma) {
  ContractionShape sh = contraction_shape(q, a0);
  check_keys(q, gamma.entries());
  if (gamma[sh.plus] != gamma[sh.minus])
    throw EqualRankError("ranks at '" + sh.plus + "' and '" + sh.minus + "' differ");
  auto e = gamma.entries();
  e.erase(sh.minus);
  return DimVector(std::move(e));
}

SymPoly contract_shuffle(const Quiver& q, std::string_view a0, const SymPoly& f) {
  ContractionShape sh = contraction_shape(q, a0);
  DimVector gh = contract_dim(q, a0, f.gamma());
  std::map<Var, Var> sub;
  for (long a = 1; a <= f.gamma()[sh.minus]; ++a)
    sub.emplace(Var::x(sh.minus, static_cast<int>(a)), Var::x(sh.plus, static_cast<int>(a)));
  return SymPoly(gh, f.poly().rename(sub));
}

namespace {

std::vector<std::vector<std::string>> arrangements(const DimVector& gamma) {
  std::vector<std::string> letters;
  for (const auto& [v, n] : gamma.entries())
    for (long k = 0; k < n; ++k) letters.push_back(v);
  std::vector<std::vector<std::string>> out;
  std::sort(letters.begin(), letters.end());
  do out.push_back(letters);
  while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

// Rows of the reduced echelon form, as polynomials over vars.
std::vector<Poly> row_basis(const std::vector<Poly>& polys, const std::vector<Var>& vars) {
  std::map<Monomial, std::size_t, GrLexGreater> cols;
  std::vector<Poly> lifted;
  for (const auto& p : polys) {
    lifted.push_back(p.over(vars));
    for (const auto& [m, c] : lifted.back().terms()) cols.emplace(m, 0);
  }
  std::size_t j = 0;
  std::vector<Monomial> monos;
  for (auto& [m, idx] : cols) {
    idx = j++;
    monos.push_back(m);
  }
  Matrix<Rational> mat(lifted.size(), cols.size(), FieldSpec{});
  for (std::size_t i = 0; i < lifted.size(); ++i)
    for (const auto& [m, c] : lifted[i].terms()) mat(i, cols.at(m)) = c;
  std::size_t rank = mat.row_reduce().size();
  std::vector<Poly> out;
  for (std::size_t i = 0; i < rank; ++i) {
    Poly p;
    for (std::size_t k = 0; k < monos.size(); ++k) {
      if (mat(i, k) == 0) continue;
      Poly term = Poly::constant(mat(i, k));
      for (std::size_t v = 0; v < vars.size(); ++v)
        for (int e = 0; e < monos[k][v]; ++e) term = term * Poly::variable(vars[v]);
      p += term;
    }
    out.push_back(p);
  }
  return out;
}

std::vector<Poly> span_products(const Quiver& q, const DimVector& gamma, int max_degree) {
  std::vector<Poly> products;
  if (gamma.is_zero()) {
    products.push_back(Poly::constant(1));
    return products;
  }
  for (const auto& word : arrangements(gamma)) {
    long delta = 0;
    for (std::size_t s = 0; s < word.size(); ++s)
      for (std::size_t t = s + 1; t < word.size(); ++t)
        delta += q.arrow_count(word[s], word[t]) - (word[s] == word[t] ? 1 : 0);
    long budget = max_degree - delta;
    if (budget < 0) continue;
    std::function<void(std::size_t, const SymPoly&, long)> walk = [&](std::size_t pos,
                                                                      const SymPoly& acc,
                                                                      long left) {
      if (pos == word.size()) {
        if (!acc.is_zero()) products.push_back(acc.poly());
        return;
      }
      for (long k = 0; k <= left; ++k) {
        SymPoly next = pos == 0 ? generator(q, word[0], static_cast<int>(k))
                                : shuffle_mul(q, acc, generator(q, word[pos], static_cast<int>(k)));
        walk(pos + 1, next, left - k);
      }
    };
    walk(0, SymPoly(), budget);
  }
  return products;
}

}  // namespace

std::vector<SymPoly> spherical_span(const Quiver& q, const DimVector& gamma, int max_degree) {
  check_keys(q, gamma.entries());
  std::vector<SymPoly> out;
  for (const auto& p : row_basis(span_products(q, gamma, max_degree), slot_variables(gamma)))
    out.emplace_back(gamma, p);
  return out;
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::Member: return "member";
    case Membership::NotMember: return "not-member";
    case Membership::Inconclusive: return "inconclusive";
  }
  return "?";
}

Membership spherical_membership(const Quiver& q, const SymPoly& f, int max_degree) {
  if (f.poly().degree() > max_degree) return Membership::Inconclusive;
  std::vector<Poly> basis;
  for (const auto& b : spherical_span(q, f.gamma(), max_degree)) basis.push_back(b.poly());
  std::size_t r = basis.size();
  basis.push_back(f.poly());
  return row_basis(basis, slot_variables(f.gamma())).size() == r ? Membership::Member
                                                                   : Membership::NotMember;
}

}  // namespace qpc
