#include "mrdi/workloads/kernel.hpp"

#include "mrdi/algebra/linalg.hpp"
#include "mrdi/error.hpp"
#include "mrdi/ipc/pool.hpp"

namespace mrdi::workloads {

using algebra::BigRational;
using algebra::Monomial;
using algebra::Multidegree;
using algebra::Polynomial;
using algebra::RingElem;

Polynomial evaluate_map(const algebra::MonomialMap& phi, const Polynomial& p) {
  if (!(p.parent() == phi.source())) {
    throw ContextError("evaluate_map: polynomial over " + p.parent().to_string() +
                       ", map source is " + phi.source().to_string());
  }
  const algebra::Context target = phi.target();
  RingElem out = RingElem::zero(target);
  for (const algebra::Term& term : p.terms()) {
    RingElem image = RingElem::term(target, Monomial::one(target.arity()), term.coefficient);
    for (std::size_t i = 0; i < term.monomial.arity(); ++i) {
      for (std::uint32_t e = 0; e < term.monomial[i]; ++e) image *= phi.images()[i];
    }
    out += image;
  }
  return out;
}

namespace {

const Monomial& single_monomial(const Polynomial& p) {
  if (p.terms().size() != 1) throw ValidationError("kernel block expects monomials");
  return p.terms()[0].monomial;
}

}  // namespace

std::vector<Polynomial> kernel_block(const std::vector<Polynomial>& monomials,
                                     const std::vector<Polynomial>& images,
                                     const std::vector<Polynomial>& span) {
  if (monomials.size() != images.size()) {
    throw ValidationError("kernel block: monomial and image counts differ");
  }
  const std::size_t n = monomials.size();
  if (n == 0) return {};
  const algebra::Context source = monomials[0].parent();

  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(single_monomial(monomials[i]), i);

  std::map<Monomial, std::size_t> targets;
  for (const Polynomial& img : images) {
    for (const algebra::Term& t : img.terms()) targets.emplace(t.monomial, 0);
  }
  std::size_t col = 0;
  for (auto& [mono, pos] : targets) pos = col++;

  // Transposed coefficient matrix: rows are target monomials.
  algebra::RationalMatrix at(targets.size(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const algebra::Term& t : images[i].terms()) at(targets[t.monomial], i) = t.coefficient.as_rational();
  }
  std::vector<algebra::RationalVector> basis = algebra::nullspace(at);

  auto to_vector = [&](const Polynomial& p) {
    algebra::RationalVector v(n);
    for (const algebra::Term& t : p.terms()) {
      auto it = index.find(t.monomial);
      if (it == index.end()) throw ValidationError("kernel block: span element outside the block");
      v[it->second] = t.coefficient.as_rational();
    }
    return v;
  };

  algebra::RationalMatrix spanned(0, n);
  auto append = [&](const algebra::RationalVector& v) {
    spanned.data.insert(spanned.data.end(), v.begin(), v.end());
    ++spanned.rows;
  };
  for (const Polynomial& s : span) append(to_vector(s));
  std::size_t current_rank = span.empty() ? 0 : algebra::rank(spanned);

  std::vector<Polynomial> out;
  for (const algebra::RationalVector& v : basis) {
    if (!span.empty()) {
      append(v);
      const std::size_t r = algebra::rank(spanned);
      if (r == current_rank) continue;
      current_rank = r;
    }
    std::vector<algebra::Term> terms;
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] != 0) terms.push_back({single_monomial(monomials[i]), RingElem::rational(v[i])});
    }
    out.push_back(RingElem::polynomial(source, std::move(terms)));
  }
  return out;
}

namespace {

struct Block {
  Multidegree degree;
  std::vector<Polynomial> monomials;
  std::vector<Polynomial> images;
  std::vector<Polynomial> span;
};

format::ValueVector as_vector(const std::vector<Polynomial>& ps) {
  format::ValueVector v;
  for (const Polynomial& p : ps) v.items.emplace_back(p);
  return v;
}

std::vector<Polynomial> as_polys(const format::Value& v) {
  std::vector<Polynomial> out;
  for (const format::Value& item : v.vector_items()) out.push_back(item.elem());
  return out;
}

}  // namespace

KernelComponents components_of_kernel(const algebra::MonomialMap& phi, std::uint32_t d,
                                      ipc::WorkerPool* pool, bool minimalize) {
  if (d == 0) throw ValidationError("total degree must be at least 1");
  const algebra::Context source = phi.source();
  const std::vector<Multidegree> grading = phi.grading();
  const BigRational one(1);

  std::vector<std::map<Multidegree, std::vector<Monomial>>> by_degree(d + 1);
  struct Generator {
    std::uint32_t degree;
    Multidegree multidegree;
    Polynomial poly;
  };
  std::vector<Generator> generators;
  KernelComponents out;

  for (std::uint32_t t = 1; t <= d; ++t) {
    by_degree[t] = algebra::monomials_by_multidegree(source, grading, t);
    std::vector<Block> blocks;
    for (const auto& [md, monos] : by_degree[t]) {
      if (monos.size() < 2) continue;
      Block b;
      b.degree = md;
      for (const Monomial& m : monos) {
        Polynomial p = RingElem::term(source, m, RingElem::rational(one));
        b.images.push_back(evaluate_map(phi, p));
        b.monomials.push_back(std::move(p));
      }
      if (minimalize) {
        for (const Generator& g : generators) {
          const auto& lower = by_degree[t - g.degree];
          auto it = lower.find(md - g.multidegree);
          if (it == lower.end()) continue;
          for (const Monomial& m : it->second) {
            b.span.push_back(g.poly * RingElem::term(source, m, RingElem::rational(one)));
          }
        }
      }
      blocks.push_back(std::move(b));
    }

    std::vector<std::vector<Polynomial>> results;
    if (pool != nullptr && !blocks.empty()) {
      std::vector<format::ValueTuple> items;
      for (const Block& b : blocks) {
        items.push_back(format::make_tuple(as_vector(b.monomials), as_vector(b.images), as_vector(b.span)));
      }
      for (const format::Value& v : pool->parallel_map("kernel_block", items)) {
        results.push_back(as_polys(v));
      }
    } else {
      for (const Block& b : blocks) results.push_back(kernel_block(b.monomials, b.images, b.span));
    }

    // A multidegree can recur at several total degrees when the images
    // differ in total degree; its entries then accumulate in degree order.
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (results[i].empty()) continue;
      auto& slot = out[blocks[i].degree];
      for (Polynomial& g : results[i]) {
        if (!(g.parent() == source)) throw ContextError("kernel element in the wrong ring");
        generators.push_back({t, blocks[i].degree, g});
        slot.push_back(std::move(g));
      }
    }
  }
  return out;
}

format::Value components_to_value(const KernelComponents& components) {
  format::ValueVector out;
  for (const auto& [md, polys] : components) {
    format::ValueVector degree;
    for (std::int64_t c : md.components) degree.items.emplace_back(RingElem::integer(algebra::BigInt(c)));
    out.items.emplace_back(format::make_tuple(std::move(degree), as_vector(polys)));
  }
  return out;
}

KernelComponents components_from_value(const format::Value& value) {
  KernelComponents out;
  for (const format::Value& entry : value.vector_items()) {
    const auto& parts = entry.tuple_items();
    if (parts.size() != 2) throw ValidationError("kernel entry must be a pair");
    Multidegree md;
    for (const format::Value& c : parts[0].vector_items()) {
      const algebra::BigInt& n = c.elem().as_integer();
      if (!n.fits_slong_p()) throw ValidationError("multidegree component out of range");
      md.components.push_back(n.get_si());
    }
    out[md] = as_polys(parts[1]);
  }
  return out;
}

}  // namespace mrdi::workloads
