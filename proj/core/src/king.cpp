#include "qpc/king.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "qpc/contraction.hpp"
#include "qpc/errors.hpp"
#include "qpc/matrix.hpp"
#include "qpc/shuffle.hpp"

namespace qpc {

std::string FpRep::to_string() const {
  std::string s = "F_" + std::to_string(p) + ":";
  for (const auto& [a, m] : maps) {
    s += " " + a + "=[";
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r) s += ";";
      for (std::size_t c = 0; c < m[r].size(); ++c) s += (c ? "," : "") + std::to_string(m[r][c]);
    }
    s += "]";
  }
  return s;
}

namespace {

// All subspaces of F_p^n; vectors are base-p codes.
struct SubspaceTable {
  unsigned p = 2;
  int n = 0;
  unsigned size = 1;  // p^n
  std::vector<std::vector<char>> member;
  std::vector<std::vector<unsigned>> basis;
  std::vector<int> dim;
};

unsigned add_codes(unsigned a, unsigned b, unsigned p, int n) {
  unsigned r = 0, scale = 1;
  for (int k = 0; k < n; ++k, scale *= p) r += ((a / scale % p + b / scale % p) % p) * scale;
  return r;
}

unsigned scale_code(unsigned a, unsigned c, unsigned p, int n) {
  unsigned r = 0, scale = 1;
  for (int k = 0; k < n; ++k, scale *= p) r += (a / scale % p * c % p) * scale;
  return r;
}

SubspaceTable build_table(unsigned p, int n) {
  SubspaceTable t;
  t.p = p;
  t.n = n;
  for (int k = 0; k < n; ++k) t.size *= p;
  std::set<std::vector<char>> seen;
  std::vector<std::pair<std::vector<char>, std::vector<unsigned>>> queue;
  std::vector<char> zero(t.size, 0);
  zero[0] = 1;
  queue.push_back({zero, {}});
  seen.insert(zero);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [mem, basis] = queue[head];
    t.member.push_back(mem);
    t.basis.push_back(basis);
    t.dim.push_back(static_cast<int>(basis.size()));
    for (unsigned v = 1; v < t.size; ++v) {
      if (mem[v]) continue;
      std::vector<char> next = mem;
      for (unsigned u = 0; u < t.size; ++u) {
        if (!mem[u]) continue;
        for (unsigned c = 1; c < p; ++c) next[add_codes(u, scale_code(v, c, p, n), p, n)] = 1;
      }
      if (seen.insert(next).second) {
        auto b = basis;
        b.push_back(v);
        queue.push_back({next, b});
      }
    }
  }
  return t;
}

const SubspaceTable& table(unsigned p, int n) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, int>, SubspaceTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_table(p, n)).first;
  return it->second;
}

unsigned apply(const std::vector<std::vector<unsigned>>& m, unsigned code, unsigned p, int cols) {
  std::vector<unsigned> x(static_cast<std::size_t>(cols));
  for (int k = 0; k < cols; ++k) {
    x[static_cast<std::size_t>(k)] = code % p;
    code /= p;
  }
  unsigned r = 0, scale = 1;
  for (const auto& row : m) {
    unsigned s = 0;
    for (int k = 0; k < cols; ++k) s += row[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(k)];
    r += (s % p) * scale;
    scale *= p;
  }
  return r;
}

// Calls f with the subspace index of each vertex (in q.vertices() order) for every
// subrepresentation; stops when f returns false.
void for_each_subrep(const Quiver& q, const FpRep& rep,
                     const std::function<bool(const std::vector<int>&)>& f) {
  const auto& vs = q.vertices();
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = i;
  std::vector<const SubspaceTable*> tabs;
  for (const auto& v : vs) tabs.push_back(&table(rep.p, static_cast<int>(rep.dims[v])));
  // Arrows checked once both endpoints are chosen.
  std::vector<std::vector<const Arrow*>> ready(vs.size());
  for (const auto& a : q.arrows()) ready[std::max(pos[a.source], pos[a.target])].push_back(&a);

  std::vector<int> choice(vs.size(), 0);
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (stop) return;
    if (i == vs.size()) {
      if (!f(choice)) stop = true;
      return;
    }
    const SubspaceTable& t = *tabs[i];
    for (std::size_t s = 0; s < t.member.size() && !stop; ++s) {
      choice[i] = static_cast<int>(s);
      bool ok = true;
      for (const Arrow* a : ready[i]) {
        std::size_t si = pos[a->source], ti = pos[a->target];
        const SubspaceTable &ts = *tabs[si], &tt = *tabs[ti];
        const auto& m = rep.maps.at(a->id);
        for (unsigned b : ts.basis[static_cast<std::size_t>(choice[si])])
          if (!tt.member[static_cast<std::size_t>(choice[ti])][apply(m, b, rep.p, ts.n)]) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (ok) rec(i + 1);
    }
  };
  rec(0);
}

DimVector dims_of(const Quiver& q, const FpRep& rep, const std::vector<int>& choice) {
  DimVector d = DimVector::zero(q);
  for (std::size_t i = 0; i < q.vertices().size(); ++i) {
    const auto& v = q.vertices()[i];
    d.set(v, table(rep.p, static_cast<int>(rep.dims[v])).dim[static_cast<std::size_t>(choice[i])]);
  }
  return d;
}

void check_inputs(const Quiver& q, const DimVector& gamma, unsigned p, const KingLimits& limits) {
  check_keys(q, gamma.entries());
  if (!is_small_prime(p) || p > 7) throw PreconditionError("brute force needs a prime field F_p with p <= 7");
  if (gamma.total() > limits.max_total)
    throw UnsupportedError("total dimension " + std::to_string(gamma.total()) +
                           " exceeds the brute-force bound " + std::to_string(limits.max_total));
}

}  // namespace

bool is_semistable(const Quiver& q, const FpRep& rep, const Stability& kappa) {
  bool ok = true;
  for_each_subrep(q, rep, [&](const std::vector<int>& c) {
    if (pair(kappa, dims_of(q, rep, c)) > 0) ok = false;
    return ok;
  });
  return ok;
}

std::vector<DimVector> subrep_dimensions(const Quiver& q, const FpRep& rep) {
  std::vector<DimVector> out;
  for_each_subrep(q, rep, [&](const std::vector<int>& c) {
    out.push_back(dims_of(q, rep, c));
    return true;
  });
  return out;
}

std::vector<DimVector> hn_factors(const Quiver& q, const FpRep& rep, const Stability& kappa) {
  std::vector<std::vector<int>> subs;
  for_each_subrep(q, rep, [&](const std::vector<int>& c) {
    subs.push_back(c);
    return true;
  });
  const auto& vs = q.vertices();
  auto contains = [&](const std::vector<int>& big, const std::vector<int>& small) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const auto& t = table(rep.p, static_cast<int>(rep.dims[vs[i]]));
      for (unsigned b : t.basis[static_cast<std::size_t>(small[i])])
        if (!t.member[static_cast<std::size_t>(big[i])][b]) return false;
    }
    return true;
  };
  std::vector<DimVector> factors;
  std::vector<int> current(vs.size(), 0);
  DimVector cur = DimVector::zero(q);
  while (cur.total() < rep.dims.total()) {
    const std::vector<int>* best = nullptr;
    Rational best_slope;
    long best_size = 0;
    for (const auto& s : subs) {
      DimVector d = dims_of(q, rep, s);
      long size = d.total() - cur.total();
      if (size <= 0 || !contains(s, current)) continue;
      Rational slope = (pair(kappa, d) - pair(kappa, cur)) / size;
      if (!best || slope > best_slope || (slope == best_slope && size > best_size)) {
        best = &s;
        best_slope = slope;
        best_size = size;
      }
    }
    if (!best) throw InternalError("HN filtration stalled");
    DimVector d = dims_of(q, rep, *best);
    DimVector f = DimVector::zero(q);
    for (const auto& v : vs) f.set(v, d[v] - cur[v]);
    factors.push_back(f);
    current = *best;
    cur = d;
  }
  return factors;
}

KingResult king_semistable_exists(const Quiver& q, const DimVector& gamma, const Stability& kappa,
                                  unsigned p, const KingLimits& limits) {
  check_inputs(q, gamma, p, limits);
  if (pair(kappa, gamma) != 0)
    throw PreconditionError("kappa(gamma) = " + to_string(pair(kappa, gamma)) + ", expected 0");
  struct Slot {
    std::string arrow;
    std::size_t row, col;
  };
  std::vector<Slot> slots;
  for (const auto& a : q.arrows())
    for (long r = 0; r < gamma[a.target]; ++r)
      for (long c = 0; c < gamma[a.source]; ++c)
        slots.push_back({a.id, static_cast<std::size_t>(r), static_cast<std::size_t>(c)});
  unsigned long long count = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    count *= p;
    if (count > limits.max_representations)
      throw UnsupportedError("more than " + std::to_string(limits.max_representations) +
                             " representations to enumerate");
  }
  auto decode = [&](unsigned long long idx) {
    FpRep rep;
    rep.p = p;
    rep.dims = gamma;
    for (const auto& a : q.arrows())
      rep.maps[a.id] = std::vector<std::vector<unsigned>>(
          static_cast<std::size_t>(gamma[a.target]),
          std::vector<unsigned>(static_cast<std::size_t>(gamma[a.source]), 0));
    for (const auto& s : slots) {
      rep.maps[s.arrow][s.row][s.col] = static_cast<unsigned>(idx % p);
      idx /= p;
    }
    return rep;
  };

  unsigned threads = std::max(1u, limits.threads);
  std::vector<unsigned long long> first(threads, count);
  auto work = [&](unsigned t) {
    for (unsigned long long idx = t; idx < count; idx += threads)
      if (is_semistable(q, decode(idx), kappa)) {
        first[t] = idx;
        return;
      }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  KingResult r;
  r.representations = count;
  unsigned long long best = *std::min_element(first.begin(), first.end());
  if (best < count) {
    r.exists = true;
    r.witness = decode(best);
  }
  return r;
}

bool WallScanEntry::is_wall() const {
  return std::any_of(samples.begin(), samples.end(), [](const WallSample& s) { return s.semistable; });
}

std::vector<Stability> perp_samples(const Quiver& q, const DimVector& gamma) {
  check_keys(q, gamma.entries());
  const auto& vs = q.vertices();
  std::string pivot;
  for (const auto& v : vs)
    if (gamma[v] != 0) {
      pivot = v;
      break;
    }
  std::vector<Stability> basis;
  for (const auto& v : vs) {
    if (v == pivot) continue;
    Stability b;
    for (const auto& w : vs) b[w] = 0;
    if (pivot.empty()) {
      b[v] = 1;
    } else {
      b[v] = gamma[pivot];
      b[pivot] = -gamma[v];
    }
    basis.push_back(b);
  }
  Stability zero;
  for (const auto& w : vs) zero[w] = 0;
  if (basis.empty()) return {zero};
  std::vector<Stability> out;
  std::vector<int> coef(basis.size(), -1);
  while (true) {
    bool nonzero = std::any_of(coef.begin(), coef.end(), [](int c) { return c != 0; });
    if (nonzero) {
      Stability k = zero;
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (const auto& [w, x] : basis[i]) k[w] += x * coef[i];
      out.push_back(k);
    }
    std::size_t i = 0;
    while (i < coef.size() && coef[i] == 1) coef[i++] = -1;
    if (i == coef.size()) break;
    ++coef[i];
  }
  return out;
}

std::vector<WallScanEntry> wall_support_scan(const Quiver& q, const DimVector& max_gamma, unsigned p,
                                             const KingLimits& limits) {
  check_keys(q, max_gamma.entries());
  const auto& vs = q.vertices();
  std::vector<WallScanEntry> out;
  std::vector<long> cur(vs.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < vs.size() && cur[i] == max_gamma[vs[i]]) cur[i++] = 0;
    if (i == vs.size()) break;
    ++cur[i];
    DimVector g = DimVector::zero(q);
    for (std::size_t k = 0; k < vs.size(); ++k) g.set(vs[k], cur[k]);
    if (g.total() > limits.max_total) continue;
    WallScanEntry e{g, {}};
    for (const auto& k : perp_samples(q, g))
      e.samples.push_back({k, king_semistable_exists(q, g, k, p, limits).exists});
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(),
            [](const WallScanEntry& a, const WallScanEntry& b) {
              return std::make_pair(a.gamma.total(), a.gamma) < std::make_pair(b.gamma.total(), b.gamma);
            });
  return out;
}

std::string export_wall_scan(const std::vector<WallScanEntry>& entries) {
  std::string s;
  for (const auto& e : entries) {
    std::string g;
    for (const auto& [v, n] : e.gamma.entries()) g += (g.empty() ? "" : ",") + v + "=" + std::to_string(n);
    for (const auto& smp : e.samples)
      s += "gamma=(" + g + "); normal=(" + g + "); kappa=" + to_string(smp.kappa) +
           "; verdict=" + (smp.semistable ? "semistable" : "none") + "\n";
  }
  return s;
}

std::vector<Rational> default_eta_grid() {
  std::vector<Rational> g;
  for (auto [a, b] : {std::pair{1, 4}, {1, 3}, {1, 2}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}) g.emplace_back(a, b);
  for (auto [a, b] : {std::pair{-1, 4}, {-1, 3}, {-1, 2}, {-2, 1}, {-3, 1}, {-4, 1}}) g.emplace_back(a, b);
  return g;
}

EtaReport eta_check(const Quiver& q, std::string_view a0, const std::vector<unsigned>& fields,
                    const std::vector<Rational>& grid, const KingLimits& limits) {
  ContractionShape sh = contraction_shape(q, a0);
  if (q.arrow_count(sh.plus, sh.minus) != 1)
    throw AssumptionViolation("a0 must be the only arrow from i+ to i-");
  if (q.arrow_count(sh.minus, sh.minus) != 0) throw AssumptionViolation("no loop allowed at i-");
  Quiver qh = contract_quiver(q, a0);

  // gamma-hat ranges so that the lifted total stays within the bound.
  DimVector max_hat = DimVector::zero(qh);
  for (const auto& v : qh.vertices()) max_hat.set(v, v == sh.plus ? limits.max_total / 2 : limits.max_total);

  EtaReport rep;
  std::optional<std::vector<Rational>> common;
  for (unsigned p : fields) {
    KingLimits hat_limits = limits;
    for (const auto& e : wall_support_scan(qh, max_hat, p, hat_limits)) {
      if (e.gamma.total() + e.gamma[sh.plus] > limits.max_total) continue;
      DimVector lifted = DimVector::zero(q);
      for (const auto& v : q.vertices()) lifted.set(v, v == sh.minus ? e.gamma[sh.plus] : e.gamma[v]);
      for (const auto& smp : e.samples) {
        if (!smp.semistable) continue;
        EtaSample s{p, e.gamma, smp.kappa, {}};
        for (const auto& k : grid) {
          if (k == -1) continue;
          if (king_semistable_exists(q, lifted, eta_embed(q, a0, smp.kappa, k), p, limits).exists)
            s.working_k.push_back(k);
        }
        if (!common) {
          common = s.working_k;
        } else {
          std::vector<Rational> keep;
          for (const auto& k : *common)
            if (std::find(s.working_k.begin(), s.working_k.end(), k) != s.working_k.end()) keep.push_back(k);
          common = keep;
        }
        rep.samples.push_back(std::move(s));
      }
    }
  }
  rep.all_embedded = std::all_of(rep.samples.begin(), rep.samples.end(),
                                 [](const EtaSample& s) { return !s.working_k.empty(); });
  if (common && !common->empty()) rep.common_k = common->front();
  return rep;
}

}  // namespace qpc
