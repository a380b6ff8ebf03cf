#include "mkpkit/solver.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <thread>

namespace mkpkit {

// ----------------------------------------------------------------- ansatz

namespace {

void jet_monomials_rec(const std::vector<VarKey>& vars, std::size_t from,
                       int degree_left, const Monomial& acc,
                       std::vector<Monomial>& out) {
  out.push_back(acc);
  if (degree_left == 0) return;
  for (std::size_t i = from; i < vars.size(); ++i)
    jet_monomials_rec(vars, i, degree_left - 1,
                      acc.times(Monomial::var(vars[i])), out);
}

}  // namespace

Ansatz build_ansatz(const AnsatzBounds& bounds) {
  if (bounds.max_jet_order < 0 || bounds.max_jet_degree < 0 ||
      bounds.max_poly_degree < 0)
    throw Error("build_ansatz: bounds must be non-negative");

  std::vector<VarKey> jet_vars;
  for (int t = 0; t <= bounds.max_jet_order; ++t)
    for (int x = 0; t + x <= bounds.max_jet_order; ++x)
      for (int y = 0; t + x + y <= bounds.max_jet_order; ++y)
        jet_vars.push_back(VarKey::jet({t, x, y}));

  std::vector<Monomial> jet_part;
  jet_monomials_rec(jet_vars, 0, bounds.max_jet_degree, Monomial::one(),
                    jet_part);

  const int p = bounds.max_poly_degree;
  const int cap = bounds.ladder_closure ? p + 1 : p;
  std::vector<Monomial> poly_part;
  for (int a = 0; a <= (bounds.ladder_closure ? p : cap); ++a)
    for (int b = 0; a + b <= cap; ++b)
      for (int c = 0; a + b + c <= cap; ++c) {
        Monomial m = Monomial::var(VarKey::indep(Dir::T), a)
                         .times(Monomial::var(VarKey::indep(Dir::X), b))
                         .times(Monomial::var(VarKey::indep(Dir::Y), c));
        poly_part.push_back(m);
      }

  std::set<Monomial, bool (*)(const Monomial&, const Monomial&)> dedup(
      +[](const Monomial& a, const Monomial& b) {
        return Monomial::cmp(a, b) == std::strong_ordering::less;
      });
  for (const auto& pm : poly_part)
    for (const auto& jm : jet_part) dedup.insert(pm.times(jm));

  Ansatz out;
  out.bounds = bounds;
  out.basis.assign(dedup.begin(), dedup.end());
  return out;
}

int scaling_weight(const Monomial& m) {
  int w = 0;
  for (const auto& [v, exp] : m.factors()) {
    switch (v.kind()) {
      case VarKey::Kind::Indep: {
        static constexpr int kIndep[3] = {3, 1, 2};  // t, x, y
        w += kIndep[int(v.indep_dir())] * exp;
        break;
      }
      case VarKey::Kind::Jet: {
        DerivIndex i = v.jet_index();
        w -= (3 * i.t + i.x + 2 * i.y) * exp;
        break;
      }
      case VarKey::Kind::TimeFunc:
        throw Error("scaling_weight: time-function symbols have no weight");
    }
  }
  return w;
}

// --------------------------------------------------------------- assembly

std::size_t DeterminingSystem::nonzeros() const {
  std::size_t n = 0;
  for (const auto& col : columns) n += col.size();
  return n;
}

DeterminingSystem assemble_system(const CaseParams& params, const Ansatz& ansatz,
                                  const JetOptions& opts) {
  DeterminingSystem sys;
  sys.params = params;
  sys.ansatz = ansatz;
  const JetExpr G = pde_expression(params);

  std::map<Monomial, int, bool (*)(const Monomial&, const Monomial&)> row_ids(
      +[](const Monomial& a, const Monomial& b) {
        return Monomial::cmp(a, b) == std::strong_ordering::less;
      });

  sys.columns.resize(ansatz.basis.size());
  for (std::size_t j = 0; j < ansatz.basis.size(); ++j) {
    JetExpr image =
        euler_operator(G * JetExpr::monomial(ansatz.basis[j], Scalar(1)), opts);
    auto& col = sys.columns[j];
    col.reserve(image.term_count());
    for (const auto& [m, c] : image.terms()) {
      auto [it, fresh] = row_ids.emplace(m, int(row_ids.size()));
      col.emplace_back(it->second, c);
    }
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  sys.row_monomials.resize(row_ids.size());
  for (const auto& [m, id] : row_ids) sys.row_monomials[id] = m;
  return sys;
}

// -------------------------------------------------------------- nullspace

namespace {

// Exact kernel of one weight block. Column order inside the block follows
// the canonical basis order, which fixes pivots and hence the output.
//
// Stage 1 is a structural cascade: a row with a single surviving entry
// forces its column's coefficient to zero, which may expose new singleton
// rows. No arithmetic happens, so the cascade is exact and cheap; on these
// determining systems it eliminates almost every column (the split with
// respect to high-order jet variables).
//
// Stage 2 runs exact Gauss-Jordan elimination on the small remainder with
// column pivoting by sparsity (ties broken by canonical column order).
struct BlockKernel {
  std::vector<std::vector<Scalar>> vectors;  // over block-local columns
};

BlockKernel block_kernel(const std::vector<std::vector<std::pair<int, Scalar>>>& cols) {
  const int ncols = int(cols.size());

  // row-major copy
  std::map<int, std::map<int, Scalar>> rows;  // row id -> col -> coef
  for (int j = 0; j < ncols; ++j)
    for (const auto& [r, c] : cols[j]) rows[r][j] = c;

  std::vector<char> col_dead(ncols, 0);

  // singleton cascade
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = rows.begin(); it != rows.end();) {
      auto& entries = it->second;
      for (auto e = entries.begin(); e != entries.end();) {
        if (col_dead[e->first])
          e = entries.erase(e);
        else
          ++e;
      }
      if (entries.empty()) {
        it = rows.erase(it);
      } else if (entries.size() == 1) {
        col_dead[entries.begin()->first] = 1;
        it = rows.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }

  // dense-ish Gauss-Jordan on the remainder
  std::vector<std::map<int, Scalar>> work;
  work.reserve(rows.size());
  for (auto& [rid, entries] : rows)
    if (!entries.empty()) work.push_back(std::move(entries));

  std::vector<int> alive;
  for (int j = 0; j < ncols; ++j)
    if (!col_dead[j]) alive.push_back(j);

  std::map<int, int> pivot_row_of_col;
  std::vector<char> row_used(work.size(), 0);

  for (;;) {
    // column counts over unused rows
    std::map<int, int> count;
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (row_used[r]) continue;
      for (const auto& [j, c] : work[r]) count[j] += 1;
    }
    int best_col = -1, best_count = 0;
    for (int j : alive) {
      if (pivot_row_of_col.count(j)) continue;
      auto it = count.find(j);
      if (it == count.end() || it->second == 0) continue;
      if (best_col < 0 || it->second < best_count) {
        best_col = j;
        best_count = it->second;
      }
    }
    if (best_col < 0) break;

    // pivot row: sparsest unused row hitting the column
    int prow = -1;
    std::size_t psize = 0;
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (row_used[r] || !work[r].count(best_col)) continue;
      if (prow < 0 || work[r].size() < psize) {
        prow = int(r);
        psize = work[r].size();
      }
    }
    row_used[prow] = 1;
    pivot_row_of_col[best_col] = prow;

    const Scalar pval = work[prow].at(best_col);
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (int(r) == prow) continue;
      auto hit = work[r].find(best_col);
      if (hit == work[r].end()) continue;
      Scalar factor = hit->second / pval;
      for (const auto& [j, c] : work[prow]) {
        auto [it, fresh] = work[r].emplace(j, Scalar(0));
        it->second -= factor * c;
        if (it->second.is_zero()) work[r].erase(it);
      }
    }
  }

  // free columns -> kernel vectors
  BlockKernel out;
  for (int f : alive) {
    if (pivot_row_of_col.count(f)) continue;
    std::vector<Scalar> v(ncols, Scalar(0));
    v[f] = Scalar(1);
    for (const auto& [c, r] : pivot_row_of_col) {
      auto hit = work[r].find(f);
      if (hit != work[r].end()) v[c] = -(hit->second / work[r].at(c));
    }
    out.vectors.push_back(std::move(v));
  }
  return out;
}

// scale to a primitive integral vector with positive leading entry
void canonicalize_vector(std::vector<Scalar>& v) {
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const Scalar& s : v) {
    for (const Rational* q : {&s.rat_part(), &s.irr_part()}) {
      if (*q == 0) continue;
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
              q->get_den().get_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
              q->get_num().get_mpz_t());
    }
  }
  if (num_gcd == 0) return;  // zero vector
  Scalar scale{Rational(den_lcm) / Rational(num_gcd)};
  int lead_sign = 0;
  for (Scalar& s : v) {
    s *= scale;
    if (lead_sign == 0 && !s.is_zero()) lead_sign = s.sign();
  }
  if (lead_sign < 0)
    for (Scalar& s : v) s = -s;
}

}  // namespace

KernelBasis nullspace(const DeterminingSystem& sys) {
  const auto& basis = sys.ansatz.basis;
  const int n = int(basis.size());

  // partition columns by scaling weight; the determining operator is
  // homogeneous (weight -4), which the assembled rows must confirm
  std::map<int, std::vector<int>> blocks;
  for (int j = 0; j < n; ++j)
    blocks[scaling_weight(basis[j])].push_back(j);
  for (const auto& [w, cols] : blocks)
    for (int j : cols)
      for (const auto& [r, c] : sys.columns[j])
        if (scaling_weight(sys.row_monomials[r]) != w - 4)
          throw Error("nullspace: weight grading violated; assembly bug");

  KernelBasis out;
  out.params = sys.params;
  out.ansatz = sys.ansatz;

  for (const auto& [w, cols] : blocks) {
    // block-local row interning
    std::map<int, int> local_row;
    std::vector<std::vector<std::pair<int, Scalar>>> local_cols(cols.size());
    for (std::size_t jj = 0; jj < cols.size(); ++jj)
      for (const auto& [r, c] : sys.columns[cols[jj]]) {
        auto [it, fresh] = local_row.emplace(r, int(local_row.size()));
        local_cols[jj].emplace_back(it->second, c);
      }
    BlockKernel bk = block_kernel(local_cols);
    for (auto& lv : bk.vectors) {
      std::vector<Scalar> v(n, Scalar(0));
      for (std::size_t jj = 0; jj < cols.size(); ++jj) v[cols[jj]] = lv[jj];
      canonicalize_vector(v);
      out.vectors.push_back(std::move(v));
    }
  }

  // deterministic order: by leading (canonical) basis index
  std::sort(out.vectors.begin(), out.vectors.end(),
            [](const auto& a, const auto& b) {
              for (std::size_t i = 0; i < a.size(); ++i) {
                bool za = a[i].is_zero(), zb = b[i].is_zero();
                if (za != zb) return !za;
                if (!za && a[i] != b[i]) return a[i].rat_part() < b[i].rat_part();
              }
              return false;
            });

  for (const auto& v : out.vectors) {
    JetExpr e;
    for (int j = 0; j < n; ++j)
      if (!v[j].is_zero()) e += JetExpr::monomial(basis[j], v[j]);
    out.multipliers.push_back({MultLabel::Q1, sys.params, e});
  }
  return out;
}

bool in_kernel_span(const KernelBasis& kernel, const JetExpr& q) {
  const auto& basis = kernel.ansatz.basis;
  std::map<Monomial, int, bool (*)(const Monomial&, const Monomial&)> index(
      +[](const Monomial& a, const Monomial& b) {
        return Monomial::cmp(a, b) == std::strong_ordering::less;
      });
  for (int j = 0; j < int(basis.size()); ++j) index.emplace(basis[j], j);

  std::vector<Scalar> target(basis.size(), Scalar(0));
  for (const auto& [m, c] : q.terms()) {
    auto it = index.find(m);
    if (it == index.end()) return false;  // outside the ansatz support
    target[it->second] = c;
  }

  // eliminate target against the kernel rows
  std::vector<std::vector<Scalar>> rows = kernel.vectors;
  for (const auto& row : rows) {
    int lead = -1;
    for (std::size_t i = 0; i < row.size(); ++i)
      if (!row[i].is_zero()) {
        lead = int(i);
        break;
      }
    if (lead < 0) continue;
    if (target[lead].is_zero()) continue;
    Scalar factor = target[lead] / row[lead];
    for (std::size_t i = 0; i < row.size(); ++i)
      target[i] -= factor * row[i];
  }
  for (const auto& s : target)
    if (!s.is_zero()) return false;
  return true;
}

std::vector<ScanEntry> case_scan(std::vector<Rational> kappa_sqs,
                                 const std::vector<std::pair<int, int>>& sign_pairs,
                                 const AnsatzBounds& bounds) {
  // deduplicate kappa^2 values, preserving first-seen order
  std::vector<Rational> ks;
  for (auto& k : kappa_sqs) {
    k.canonicalize();
    if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
  }

  Ansatz ansatz = build_ansatz(bounds);
  std::vector<std::pair<Rational, std::pair<int, int>>> cells;
  for (const auto& k : ks)
    for (const auto& sp : sign_pairs) cells.emplace_back(k, sp);

  std::vector<std::future<int>> dims;
  for (const auto& cell : cells)
    dims.push_back(std::async(std::launch::async, [&ansatz, cell] {
      CaseParams params =
          make_case(cell.second.first, cell.second.second, cell.first);
      return nullspace(assemble_system(params, ansatz)).dimension();
    }));

  std::vector<ScanEntry> out;
  for (std::size_t i = 0; i < cells.size(); ++i)
    out.push_back({cells[i].first, cells[i].second.first,
                   cells[i].second.second, dims[i].get()});
  return out;
}

}  // namespace mkpkit
