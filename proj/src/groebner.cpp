#include "puniv/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace puniv {

namespace {

// One full division step chain: totally reduce p by the (monic) divisors.
Polynomial reduce_full(Polynomial p, const std::vector<Polynomial>& divisors) {
  if (divisors.empty()) return p;
  const CtxPtr& ctx = p.context();
  Polynomial remainder(ctx);
  while (!p.is_zero()) {
    bool reduced = false;
    const Monomial& lm = p.leading_monomial();
    for (const Polynomial& g : divisors) {
      if (!mono_divides(g.leading_monomial(), lm)) continue;
      Monomial q = mono_quotient(lm, g.leading_monomial());
      // g is monic, so the cofactor is just the leading coefficient of p
      p = p - g.times_term(q, p.leading_coefficient());
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial lead = Polynomial::term(ctx, lm, p.leading_coefficient());
      remainder = remainder + lead;
      p = p - lead;
    }
  }
  return remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  // both monic
  Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.times_term(mono_quotient(l, f.leading_monomial()), Scalar::one(f.context()->field));
  Polynomial b = g.times_term(mono_quotient(l, g.leading_monomial()), Scalar::one(g.context()->field));
  return a - b;
}

std::vector<Polynomial> autoreduce(std::vector<Polynomial> basis) {
  if (basis.empty()) return basis;
  const CtxPtr& ctx = basis.front().context();
  // minimal basis: drop any element whose leading monomial another divides
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (!mono_divides(basis[j].leading_monomial(), basis[i].leading_monomial())) continue;
      // on equal leading monomials keep the earlier element
      if (basis[j].leading_monomial() == basis[i].leading_monomial() && j > i) continue;
      redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // tail-reduce every element against the others until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial r = reduce_full(minimal[i], others).monic();
      if (r != minimal[i]) {
        minimal[i] = r;
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return mono_compare(a.leading_monomial(), b.leading_monomial(), ctx->order) < 0;
  });
  return minimal;
}

}  // namespace

bool IdealBasis::contains(const Polynomial& p) const {
  return normal_form(p, *this).is_zero();
}

IdealBasis buchberger(const std::vector<Polynomial>& gens) {
  IdealBasis out;
  std::vector<Polynomial> work;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    if (!out.ctx) out.ctx = g.context();
    else if (!out.ctx->compatible(*g.context()))
      throw input_error("generators from incompatible rings");
    work.push_back(g.monic());
    out.generators.push_back(g);
  }
  if (!work.empty()) {
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < work.size(); ++i)
      for (std::size_t j = i + 1; j < work.size(); ++j)
        pairs.emplace_back(i, j);
    while (!pairs.empty()) {
      // normal selection: smallest lcm first
      auto best = pairs.begin();
      Monomial best_lcm = mono_lcm(work[best->first].leading_monomial(),
                                   work[best->second].leading_monomial());
      for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
        Monomial l = mono_lcm(work[it->first].leading_monomial(),
                              work[it->second].leading_monomial());
        if (mono_compare(l, best_lcm, out.ctx->order) < 0) {
          best = it;
          best_lcm = l;
        }
      }
      auto [i, j] = *best;
      pairs.erase(best);
      if (mono_coprime(work[i].leading_monomial(), work[j].leading_monomial()))
        continue;  // product criterion
      Polynomial r = reduce_full(s_polynomial(work[i], work[j]), work);
      if (r.is_zero()) continue;
      work.push_back(r.monic());
      for (std::size_t k = 0; k + 1 < work.size(); ++k)
        pairs.emplace_back(k, work.size() - 1);
    }
  }
  out.basis = autoreduce(std::move(work));
  return out;
}

IdealBasis buchberger(const std::vector<Polynomial>& gens, TermOrder order) {
  if (gens.empty()) return buchberger(gens);
  const CtxPtr& old = gens.front().context();
  if (old->order == order) return buchberger(gens);
  CtxPtr fresh = make_context(old->field, old->vars, order);
  std::vector<Polynomial> moved;
  moved.reserve(gens.size());
  for (const Polynomial& g : gens) moved.push_back(g.with_context(fresh));
  return buchberger(moved);
}

Polynomial normal_form(const Polynomial& p, const IdealBasis& ideal) {
  if (!ideal.ctx) return p;  // zero ideal with no recorded ring
  if (!p.context()->compatible(*ideal.ctx))
    throw input_error("normal form: polynomial and ideal from incompatible rings");
  return reduce_full(p, ideal.basis);
}

bool ideal_equal(const IdealBasis& a, const IdealBasis& b) {
  if (!a.ctx || !b.ctx) {
    // at least one is the zero ideal with no ring recorded
    return a.basis.empty() && b.basis.empty();
  }
  if (!a.ctx->same_ring(*b.ctx))
    throw input_error("ideal comparison across different rings");
  const std::vector<Polynomial>* lhs = &a.basis;
  std::vector<Polynomial> recomputed;
  if (a.ctx->order != b.ctx->order) {
    recomputed = buchberger(b.basis, a.ctx->order).basis;
  } else {
    recomputed = b.basis;
  }
  if (lhs->size() != recomputed.size()) return false;
  for (std::size_t i = 0; i < recomputed.size(); ++i) {
    if (!((*lhs)[i] == recomputed[i].with_context(a.ctx))) return false;
  }
  return true;
}

IdealBasis assume_reduced_basis(CtxPtr ctx, std::vector<Polynomial> basis) {
  IdealBasis out;
  out.ctx = std::move(ctx);
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return mono_compare(a.leading_monomial(), b.leading_monomial(), out.ctx->order) < 0;
  });
  out.generators = basis;
  out.basis = std::move(basis);
#ifndef NDEBUG
  IdealBasis check = buchberger(out.generators);
  assert(check.basis.size() == out.basis.size());
  for (std::size_t i = 0; i < check.basis.size(); ++i)
    assert(check.basis[i] == out.basis[i]);
#endif
  return out;
}

}  // namespace puniv
