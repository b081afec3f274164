// Copyright 2026 The zclosure Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zclosure/closure.hpp"

#include <chrono>
#include <map>
#include <memory>

#include "zclosure/jordan.hpp"
#include "zclosure/linalg.hpp"
#include "zclosure/multrel.hpp"
#include "zclosure/torus.hpp"

namespace zc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

long largest_cyclotomic_order(long d) {
  long best = 1;
  for (long m = 1; m <= 2 * d * d + 2; ++m)
    if (totient(m) <= d) best = m;
  return best;
}

// s^M = I for M = lcm of every root of unity order possible in degree
// deg(minpoly) * [base : Q]. Tested on the minimal polynomial.
template <class F>
bool has_finite_order(const Matrix<F>& s, const FieldPtr& base) {
  const Poly<F> mp = min_poly(s);
  const long d = mp.degree() * base->degree();
  Integer big_m = 1;
  for (long m = 2, top = largest_cyclotomic_order(d); m <= top; ++m)
    if (totient(m) <= d) big_m = big_m / gcd(big_m, Integer(m)) * m;
  Poly<F> acc(F(1)), sq = Poly<F>::x() % mp;
  for (size_t i = 0, bits = mpz_sizeinbase(big_m.get_mpz_t(), 2); i < bits; ++i) {
    if (mpz_tstbit(big_m.get_mpz_t(), i)) acc = (acc * sq) % mp;
    sq = (sq * sq) % mp;
  }
  return acc == (Poly<F>(F(1)) % mp);
}

template <class F>
struct SemisimpleLieRun {
  SemisimpleLie<F> result;
  bool relation_called = false;
  double relation_time = 0;
};

template <class F>
SemisimpleLieRun<F> semisimple_lie_run(const Matrix<F>& s, const FieldPtr& base, const FieldLimits& limits) {
  const size_t n = s.rows();
  if (s.cols() != n) throw DomainError("matrix is not square");
  SemisimpleLieRun<F> run;
  run.result.lie = LieSubalgebra<F>(n);
  if (has_finite_order(s, base)) return run;
  const DiagonalizedTorus<F> T = diagonalize_toral(std::vector<Matrix<F>>{s}, n, base, limits);
  // Relations among the distinct eigenvalues; repeated eigenvalues share a
  // weight coordinate, which is the same as imposing e_i - e_j.
  const auto t0 = Clock::now();
  const RelationLattice rl = relations(T.roots);
  run.relation_called = true;
  run.relation_time = seconds_since(t0);
  const auto elems = rational_toral_elements(T, toral_diagonals_of_lattice(rl.lattice, T.rank()));
  std::vector<std::vector<F>> flat;
  for (const auto& e : elems) flat.push_back(e.flatten());
  run.result.lie = LieSubalgebra<F>::from_space(n, Subspace<F>::span(n * n, flat));
  run.result.certified = rl.certified;
  run.result.field_degree = T.ext.field()->degree();
  return run;
}

template <class F>
bool member_connected_impl(const LieSubalgebra<F>& lie, const Matrix<F>& g, const JordanPair<F>& j,
                           const FieldPtr& base, const ClosureConfig& config) {
  const size_t n = lie.n();
  if (g.rows() != n || g.cols() != n) throw DomainError("matrix size differs from the Lie algebra");
  if (lie.dim() == 0) return g.is_identity();
  if (!j.unipotent.is_identity() && !lie.contains(log_unipotent(j.unipotent))) return false;
  const Matrix<F> s_inv = inverse(j.semisimple);
  if (conjugate_subalgebra(j.semisimple, s_inv, lie) != lie) return false;
  if (j.semisimple.is_identity()) return true;
  const LieSubalgebra<F> z = centralizer_in(lie, j.semisimple);
  CartanOptions copts;
  copts.seed = config.seed;
  const LieSubalgebra<F> h = cartan_subalgebra(z, copts);
  const auto [t, u] = split_semisimple_nilpotent(h);
  const DiagonalizedTorus<F> T = diagonalize_toral(basis_matrices(t, n), n, base, config.limits, &j.semisimple);
  return torus_contains(T, j.semisimple);
}

// Caches and counters shared by one closure run.
template <class F>
class Engine {
 public:
  Engine(FieldPtr base, const ClosureConfig& config)
      : base_(std::move(base)), config_(config), start_(Clock::now()) {}

  ClosureTrace& trace() { return trace_; }
  bool certified() const { return certified_; }

  void check_time() {
    trace_.total_time = seconds_since(start_);
    if (config_.time_budget && trace_.total_time > *config_.time_budget)
      throw BudgetExhausted("budget exhausted: time", trace_);
  }

  const JordanPair<F>& jordan(const Matrix<F>& g) {
    const std::string k = g.key();
    auto it = jordan_.find(k);
    if (it == jordan_.end()) it = jordan_.emplace(k, multiplicative_jordan(g)).first;
    return it->second;
  }

  const LieSubalgebra<F>& unipotent_lie(const Matrix<F>& u) {
    const std::string k = u.key();
    auto it = lie_.find(k);
    if (it == lie_.end()) it = lie_.emplace(k, lie_of_unipotent(u)).first;
    return it->second;
  }

  const LieSubalgebra<F>& semisimple_lie(const Matrix<F>& s) {
    const std::string k = s.key();
    auto it = lie_.find(k);
    if (it != lie_.end()) return it->second;
    const auto run = semisimple_lie_run(s, base_, config_.limits);
    if (run.relation_called) {
      ++trace_.multrel_calls;
      trace_.multrel_time += run.relation_time;
      trace_.max_field_degree = std::max(trace_.max_field_degree, run.result.field_degree);
    }
    certified_ = certified_ && run.result.certified;
    return lie_.emplace(k, run.result.lie).first->second;
  }

  bool member(const LieSubalgebra<F>& lie, const std::string& lie_key, const Matrix<F>& g) {
    const std::string k = lie_key + "|" + g.key();
    auto it = member_.find(k);
    if (it != member_.end()) return it->second;
    const auto t0 = Clock::now();
    const bool r = member_connected_impl(lie, g, jordan(g), base_, config_);
    ++trace_.membership_calls;
    trace_.membership_time += seconds_since(t0);
    member_.emplace(k, r);
    return r;
  }

 private:
  FieldPtr base_;
  ClosureConfig config_;
  Clock::time_point start_;
  ClosureTrace trace_;
  bool certified_ = true;
  std::map<std::string, JordanPair<F>> jordan_;
  std::map<std::string, LieSubalgebra<F>> lie_;
  std::map<std::string, bool> member_;
};

template <class F>
void append_part(std::vector<Matrix<F>>& a, std::map<std::string, bool>& seen, const Matrix<F>& m) {
  if (m.is_identity()) return;
  if (seen.emplace(m.key(), true).second) a.push_back(m);
}

}  // namespace

template <class F>
LieSubalgebra<F> lie_of_unipotent(const Matrix<F>& u) {
  const size_t n = u.rows();
  LieSubalgebra<F> L(n);
  if (u.is_identity()) return L;
  return generated_subalgebra(n, std::vector<Matrix<F>>{log_unipotent(u)});
}

template <class F>
SemisimpleLie<F> lie_of_semisimple(const Matrix<F>& s, const FieldPtr& base, const FieldLimits& limits) {
  return semisimple_lie_run(s, base, limits).result;
}

template <class F>
bool member_connected(const LieSubalgebra<F>& lie, const Matrix<F>& g, const FieldPtr& base,
                      const ClosureConfig& config) {
  return member_connected_impl(lie, g, multiplicative_jordan(g), base, config);
}

template <class F>
ClosureResult<F> zariski_closure(const std::vector<Matrix<F>>& gens, const FieldPtr& base,
                                 const ClosureConfig& config) {
  if (gens.empty()) throw DomainError("no generators");
  const size_t n = gens[0].rows();
  for (const auto& g : gens)
    if (g.rows() != n || g.cols() != n) throw DomainError("generators differ in size");
  Engine<F> eng(base, config);
  ClosureTrace& tr = eng.trace();

  // Working set: Jordan parts of the generators and of their inverses.
  std::vector<Matrix<F>> a;
  std::map<std::string, bool> seen;
  for (const auto& g : gens) {
    for (const Matrix<F>& h : {g, inverse(g)}) {
      const auto& j = eng.jordan(h);
      append_part(a, seen, j.semisimple);
      append_part(a, seen, j.unipotent);
    }
  }

  for (;;) {
    eng.check_time();
    if (tr.rounds >= config.max_restarts) throw BudgetExhausted("budget exhausted: restarts", tr);
    ++tr.rounds;

    // Step 1: algebra generated by Lie(G(a)) for a in A.
    std::vector<Matrix<F>> lie_gens;
    for (const auto& m : a) {
      const auto& j = eng.jordan(m);
      const auto& L = j.unipotent.is_identity() ? eng.semisimple_lie(m) : eng.unipotent_lie(m);
      for (auto b : L.basis()) lie_gens.push_back(std::move(b));
    }
    LieSubalgebra<F> lie = generated_subalgebra(n, lie_gens);

    // Step 2: close under conjugation by A.
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& m : a) {
        const LieSubalgebra<F> c = conjugate_subalgebra(m, lie);
        if (c == lie) continue;
        std::vector<Matrix<F>> g2 = lie.basis();
        for (auto b : c.basis()) g2.push_back(std::move(b));
        lie = generated_subalgebra(n, g2);
        changed = true;
      }
      eng.check_time();
    }
    if (!tr.dim_history.empty())
      ZC_ASSERT(lie.dim() > tr.dim_history.back(), "Lie algebra dimension did not increase on restart");
    tr.dim_history.push_back(lie.dim());
    const std::string lie_key = lie.key();

    // Step 3: coset representatives by products of increasing length.
    std::vector<Matrix<F>> reps{Matrix<F>::identity(n)};
    std::vector<Matrix<F>> reps_inv{Matrix<F>::identity(n)};
    std::vector<Matrix<F>> frontier{Matrix<F>::identity(n)};
    tr.bfs_lengths.push_back(0);
    bool restart = false;
    for (size_t len = 1; !frontier.empty() && !restart; ++len) {
      if (len > config.max_bfs_length) throw BudgetExhausted("budget exhausted: BFS length", tr);
      tr.bfs_lengths.back() = len;
      std::vector<Matrix<F>> next;
      for (size_t fi = 0; fi < frontier.size() && !restart; ++fi)
        for (size_t ai = 0; ai < a.size() && !restart; ++ai) {
          eng.check_time();
          const Matrix<F> p = frontier[fi] * a[ai];
          bool known = false;
          for (size_t ci = 0; ci < reps.size() && !known; ++ci) known = eng.member(lie, lie_key, p * reps_inv[ci]);
          if (known) continue;
          const auto j = eng.jordan(p);
          const bool s_in = lie.contains(eng.semisimple_lie(j.semisimple));
          const bool u_in = lie.contains(eng.unipotent_lie(j.unipotent));
          if (!s_in || !u_in) {
            append_part(a, seen, j.semisimple);
            append_part(a, seen, j.unipotent);
            restart = true;
            break;
          }
          reps.push_back(p);
          reps_inv.push_back(inverse(p));
          next.push_back(p);
        }
      frontier = std::move(next);
    }
    if (restart) continue;

    eng.check_time();
    ClosureResult<F> out;
    out.group.n = n;
    out.group.field = base;
    out.group.lie_algebra = std::move(lie);
    out.group.components = std::move(reps);
    out.group.certified = eng.certified();
    out.trace = tr;
    return out;
  }
}

FieldPtr entry_field(const std::vector<Matrix<Rational>>&) { return NumberField::rationals(); }

FieldPtr entry_field(const std::vector<Matrix<NfElem>>& ms) {
  FieldPtr K = NumberField::rationals();
  for (const auto& m : ms)
    for (const auto& x : m.flatten())
      if (x.field() && !x.field()->is_rationals()) {
        if (!K->is_rationals() && !same_field(K, x.field()))
          throw DomainError("entries lie in different number fields");
        K = x.field();
      }
  return K;
}

template <class F>
std::vector<std::string> check_closure_invariants(const std::vector<Matrix<F>>& gens, const ClosureResult<F>& r,
                                                  const ClosureConfig& config) {
  std::vector<std::string> bad;
  const auto& G = r.group;
  if (!is_bracket_closed(G.lie_algebra)) bad.push_back("Lie algebra is not bracket closed");
  for (size_t i = 0; i < gens.size(); ++i)
    if (conjugate_subalgebra(gens[i], G.lie_algebra) != G.lie_algebra)
      bad.push_back("generator " + std::to_string(i) + " does not normalize the Lie algebra");
  for (size_t i = 0; i < G.components.size(); ++i)
    if (conjugate_subalgebra(G.components[i], G.lie_algebra) != G.lie_algebra)
      bad.push_back("component " + std::to_string(i) + " does not normalize the Lie algebra");
  if (G.components.empty() || !G.components[0].is_identity()) bad.push_back("first component is not the identity");
  for (size_t i = 0; i < G.components.size(); ++i) {
    const Matrix<F> inv = inverse(G.components[i]);
    for (size_t j = 0; j < i; ++j)
      if (member_connected(G.lie_algebra, G.components[j] * inv, G.field, config))
        bad.push_back("components " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
  for (size_t i = 1; i < r.trace.dim_history.size(); ++i)
    if (r.trace.dim_history[i] <= r.trace.dim_history[i - 1]) bad.push_back("dimension history is not increasing");
  return bad;
}

#define ZC_INSTANTIATE(F)                                                                                   \
  template LieSubalgebra<F> lie_of_unipotent<F>(const Matrix<F>&);                                          \
  template SemisimpleLie<F> lie_of_semisimple<F>(const Matrix<F>&, const FieldPtr&, const FieldLimits&);    \
  template bool member_connected<F>(const LieSubalgebra<F>&, const Matrix<F>&, const FieldPtr&,              \
                                    const ClosureConfig&);                                                  \
  template ClosureResult<F> zariski_closure<F>(const std::vector<Matrix<F>>&, const FieldPtr&,              \
                                               const ClosureConfig&);                                       \
  template std::vector<std::string> check_closure_invariants<F>(const std::vector<Matrix<F>>&,              \
                                                                const ClosureResult<F>&, const ClosureConfig&);

ZC_INSTANTIATE(Rational)
ZC_INSTANTIATE(NfElem)

}  // namespace zc
