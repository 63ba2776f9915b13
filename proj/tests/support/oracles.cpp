#include "oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oracle {

using mrdi::algebra::RingElem;

namespace {

void trim(DensePoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

DensePoly mul(const DensePoly& a, const DensePoly& b) {
  if (a.empty() || b.empty()) return {};
  DensePoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

void add_into(DensePoly& acc, const DensePoly& b, int sign) {
  if (acc.size() < b.size()) acc.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) acc[i] += sign * b[i];
  trim(acc);
}

}  // namespace

DensePoly dense_of(const RingElem& p) {
  DensePoly d;
  for (const auto& term : p.terms()) {
    const std::size_t k = term.monomial[0];
    if (d.size() <= k) d.resize(k + 1, 0);
    d[k] = term.coefficient.as_integer();
  }
  trim(d);
  return d;
}

RingElem from_dense(mrdi::algebra::Context ring, const DensePoly& d) {
  std::vector<mrdi::algebra::Term> terms;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] != 0) {
      terms.push_back({mrdi::algebra::Monomial({static_cast<std::uint32_t>(k)}), RingElem::integer(d[k])});
    }
  }
  return RingElem::polynomial(ring, terms);
}

DensePoly cofactor_det(const std::vector<std::vector<DensePoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return {mpz_class(1)};
  if (n == 1) return m[0][0];
  DensePoly total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].empty()) continue;
    std::vector<std::vector<DensePoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<DensePoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    add_into(total, mul(m[0][j], cofactor_det(minor)), j % 2 == 0 ? 1 : -1);
  }
  return total;
}

RingElem cofactor_det(const mrdi::algebra::ExactMatrix& m) {
  std::vector<std::vector<DensePoly>> d(m.rows(), std::vector<DensePoly>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = dense_of(m(r, c));
  return from_dense(m.ring(), cofactor_det(d));
}

std::int64_t crt_by_search(const std::vector<std::int64_t>& residues,
                           const std::vector<std::int64_t>& moduli) {
  std::int64_t product = 1;
  for (auto m : moduli) product *= m;
  for (std::int64_t x = 0; x < product; ++x) {
    bool ok = true;
    for (std::size_t i = 0; i < moduli.size() && ok; ++i) {
      ok = ((x - residues[i]) % moduli[i] + moduli[i]) % moduli[i] == 0;
    }
    if (ok) return x;
  }
  throw std::runtime_error("no CRT solution");
}

std::vector<Exponents> all_monomials(std::size_t n, std::uint32_t t) {
  std::vector<Exponents> out;
  Exponents e(n, 0);
  // odometer over [0, t]^n, keeping vectors with the right sum
  while (true) {
    std::uint32_t sum = 0;
    for (auto x : e) sum += x;
    if (sum == t) out.push_back(e);
    std::size_t i = 0;
    while (i < n && e[i] == t) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  return out;
}

std::size_t rank_of(std::vector<QVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<QVector> solve_nullspace(std::vector<QVector> a, std::size_t cols) {
  // Gauss-Jordan, then read off one solution per free column.
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    mpq_class inv = 1 / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      mpq_class f = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_cols.push_back(c);
    ++row;
  }
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    QVector v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free];
    basis.push_back(v);
  }
  return basis;
}

BruteKernel brute_force_kernel(const mrdi::algebra::MonomialMap& phi, std::uint32_t t) {
  const std::size_t n = phi.source().arity();
  const std::size_t k = phi.target().arity();
  std::vector<Exponents> img_exp;
  std::vector<mpq_class> img_coeff;
  for (const RingElem& img : phi.images()) {
    const auto& term = img.terms()[0];
    img_exp.emplace_back(term.monomial.exponents().begin(), term.monomial.exponents().end());
    img_coeff.push_back(term.coefficient.as_rational());
  }

  // Image of each source monomial: target exponent vector and coefficient.
  std::map<std::vector<std::int64_t>, std::vector<Exponents>> groups;
  std::map<Exponents, std::pair<Exponents, mpq_class>> image_of;
  for (const Exponents& e : all_monomials(n, t)) {
    Exponents target(k, 0);
    mpq_class c = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::uint32_t r = 0; r < e[i]; ++r) {
        c *= img_coeff[i];
        for (std::size_t j = 0; j < k; ++j) target[j] += img_exp[i][j];
      }
    }
    image_of[e] = {target, c};
    std::vector<std::int64_t> md(target.begin(), target.end());
    groups[md].push_back(e);
  }

  BruteKernel out;
  for (auto& [md, monos] : groups) {
    // One equation per distinct target monomial.
    std::map<Exponents, QVector> eqs;
    for (std::size_t i = 0; i < monos.size(); ++i) {
      const auto& [target, c] = image_of[monos[i]];
      auto& row = eqs[target];
      if (row.empty()) row.assign(monos.size(), 0);
      row[i] += c;
    }
    std::vector<QVector> a;
    for (auto& [target, row] : eqs) a.push_back(row);
    auto basis = solve_nullspace(a, monos.size());
    if (!basis.empty()) out.blocks[md] = {monos, basis};
  }
  return out;
}

QVector coefficients_over(const RingElem& p, const std::vector<Exponents>& monos) {
  QVector v(monos.size(), 0);
  for (const auto& term : p.terms()) {
    Exponents e(term.monomial.exponents().begin(), term.monomial.exponents().end());
    auto it = std::find(monos.begin(), monos.end(), e);
    if (it == monos.end()) throw std::runtime_error("term outside the multidegree block");
    v[it - monos.begin()] = term.coefficient.as_rational();
  }
  return v;
}

bool kernel_matches(const mrdi::algebra::MonomialMap& phi, std::uint32_t d,
                    const mrdi::workloads::KernelComponents& got, bool minimalize) {
  using mrdi::algebra::Monomial;
  using mrdi::algebra::Multidegree;
  std::set<std::pair<std::uint64_t, Multidegree>> seen;
  for (std::uint32_t t = 1; t <= d; ++t) {
    const auto brute = brute_force_kernel(phi, t);
    for (const auto& [md, block] : brute.blocks) {
      const auto& [monos, basis] = block;
      const Multidegree key(md);
      seen.insert({t, key});
      std::vector<QVector> ours;
      std::size_t emitted = 0;
      if (got.count(key)) {
        for (const auto& g : got.at(key)) {
          if (g.terms()[0].monomial.total_degree() != t) continue;
          ours.push_back(coefficients_over(g, monos));
          ++emitted;
        }
      }
      if (minimalize) {
        for (const auto& [gmd, gens] : got) {
          for (const auto& g : gens) {
            const auto gdeg = g.terms()[0].monomial.total_degree();
            if (gdeg >= t) continue;
            for (const auto& m : all_monomials(phi.source().arity(), static_cast<std::uint32_t>(t - gdeg))) {
              const RingElem prod = g * RingElem::term(phi.source(), Monomial(m), RingElem::rational(1));
              bool inside = true;
              for (const auto& term : prod.terms()) {
                Exponents e(term.monomial.exponents().begin(), term.monomial.exponents().end());
                inside &= std::find(monos.begin(), monos.end(), e) != monos.end();
              }
              if (inside) ours.push_back(coefficients_over(prod, monos));
            }
          }
        }
      }
      std::vector<QVector> both = basis;
      both.insert(both.end(), ours.begin(), ours.end());
      if (rank_of(ours) != basis.size() || rank_of(both) != basis.size()) return false;
      if (!minimalize && emitted != basis.size()) return false;
    }
  }
  for (const auto& [md, gens] : got) {
    for (const auto& g : gens) {
      if (!seen.count({g.terms()[0].monomial.total_degree(), md})) return false;
      // evaluate by hand: every term must cancel in the target
      std::map<Exponents, mpq_class> image;
      for (const auto& term : g.terms()) {
        Exponents target(phi.target().arity(), 0);
        mpq_class c = term.coefficient.as_rational();
        for (std::size_t i = 0; i < term.monomial.arity(); ++i) {
          const auto& it = phi.images()[i].terms()[0];
          for (std::uint32_t r = 0; r < term.monomial[i]; ++r) {
            c *= it.coefficient.as_rational();
            for (std::size_t j = 0; j < target.size(); ++j) target[j] += it.monomial[j];
          }
        }
        std::vector<std::int64_t> tmd(target.begin(), target.end());
        if (Multidegree(tmd) != md) return false;
        image[target] += c;
      }
      for (const auto& [e, c] : image) {
        if (c != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace oracle
