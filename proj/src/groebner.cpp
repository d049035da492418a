#include "evoiso/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

// The engine works on a dense exponent representation permuted into the
// order's significance coordinates, with term lists kept sorted descending.
// Public polynomials are converted at the boundary.

namespace evoiso {

namespace {

using Expv = std::vector<std::uint16_t>;

struct OTerm {
  Expv e;
  std::uint32_t deg;
  Scalar c;
};

using OPoly = std::vector<OTerm>;  // descending under the active order

int cmp_exp(const Expv& a, const Expv& b, std::uint32_t dega, std::uint32_t degb,
            MonomialOrder::Kind kind) {
  if (kind == MonomialOrder::Kind::Lex) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  if (dega != degb) return dega > degb ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

struct Ctx {
  const MonomialOrder& order;
  Field field;
  VarSetPtr vars;

  int cmp(const OTerm& x, const OTerm& y) const {
    return cmp_exp(x.e, y.e, x.deg, y.deg, order.kind());
  }

  OPoly to_internal(const Polynomial& p) const {
    const auto& sig = order.significance();
    OPoly out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
      OTerm ot;
      ot.e.resize(sig.size(), 0);
      std::uint32_t deg = 0;
      for (std::size_t k = 0; k < sig.size(); ++k) {
        const std::uint32_t e = t.mono.exponent(sig[k]);
        ot.e[k] = std::uint16_t(e);
        deg += e;
      }
      ot.deg = deg;
      ot.c = t.coeff;
      out.push_back(std::move(ot));
    }
    std::sort(out.begin(), out.end(), [&](const OTerm& x, const OTerm& y) {
      return cmp(x, y) > 0;
    });
    return out;
  }

  Polynomial from_internal(const OPoly& p) const {
    const auto& sig = order.significance();
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p) {
      Monomial m;
      for (std::size_t k = 0; k < sig.size(); ++k)
        if (t.e[k] > 0) m = m * Monomial::var(sig[k], t.e[k]);
      terms.push_back({std::move(m), t.c});
    }
    return Polynomial::from_terms(field, vars, std::move(terms));
  }
};

bool exp_divides(const Expv& a, const Expv& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool exp_coprime(const Expv& a, const Expv& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

// r = a - c * x^shift * b, all inputs sorted descending.
OPoly sub_scaled_shifted(const Ctx& ctx, const OPoly& a, const OPoly& b, const Scalar& c,
                         const Expv& shift, std::uint32_t shift_deg) {
  OPoly r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  OTerm tb;
  tb.e.resize(shift.size());
  while (i < a.size() || j < b.size()) {
    int rel;
    if (i == a.size())
      rel = -1;
    else if (j == b.size())
      rel = 1;
    else {
      tb.deg = b[j].deg + shift_deg;
      for (std::size_t k = 0; k < shift.size(); ++k)
        tb.e[k] = std::uint16_t(b[j].e[k] + shift[k]);
      rel = ctx.cmp(a[i], tb);
    }
    if (rel > 0) {
      r.push_back(a[i++]);
    } else if (rel < 0) {
      tb.deg = b[j].deg + shift_deg;
      for (std::size_t k = 0; k < shift.size(); ++k)
        tb.e[k] = std::uint16_t(b[j].e[k] + shift[k]);
      OTerm t = tb;
      t.c = -(c * b[j].c);
      if (!t.c.is_zero()) r.push_back(std::move(t));
      ++j;
    } else {
      Scalar nc = a[i].c - c * b[j].c;
      if (!nc.is_zero()) {
        OTerm t = a[i];
        t.c = std::move(nc);
        r.push_back(std::move(t));
      }
      ++i;
      ++j;
    }
  }
  return r;
}

OPoly make_monic(OPoly p) {
  if (p.empty() || p[0].c.is_one()) return p;
  const Scalar inv = p[0].c.inverse();
  for (auto& t : p) t.c *= inv;
  return p;
}

bool opoly_equal(const OPoly& a, const OPoly& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].e != b[i].e || a[i].c != b[i].c) return false;
  return true;
}

OPoly normal_form_internal(const Ctx& ctx, OPoly f, const std::vector<OPoly>& basis) {
  OPoly rem;
  while (!f.empty()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.empty() || !exp_divides(g[0].e, f[0].e)) continue;
      Expv shift(f[0].e.size());
      for (std::size_t k = 0; k < shift.size(); ++k)
        shift[k] = std::uint16_t(f[0].e[k] - g[0].e[k]);
      const std::uint32_t shift_deg = f[0].deg - g[0].deg;
      const Scalar factor = f[0].c / g[0].c;
      f = sub_scaled_shifted(ctx, f, g, factor, shift, shift_deg);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(std::move(f.front()));
      f.erase(f.begin());
    }
  }
  return rem;
}

OPoly s_polynomial_internal(const Ctx& ctx, const OPoly& f, const OPoly& g) {
  const std::size_t n = f[0].e.size();
  Expv sf(n), sg(n);
  std::uint32_t dsf = 0, dsg = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint16_t l = std::max(f[0].e[k], g[0].e[k]);
    sf[k] = std::uint16_t(l - f[0].e[k]);
    sg[k] = std::uint16_t(l - g[0].e[k]);
    dsf += sf[k];
    dsg += sg[k];
  }
  // (1/lc f) x^sf f - (1/lc g) x^sg g, built as a single merge
  OPoly lhs;
  lhs.reserve(f.size());
  const Scalar invf = f[0].c.inverse();
  for (const auto& t : f) {
    OTerm nt;
    nt.e.resize(n);
    for (std::size_t k = 0; k < n; ++k) nt.e[k] = std::uint16_t(t.e[k] + sf[k]);
    nt.deg = t.deg + dsf;
    nt.c = t.c * invf;
    lhs.push_back(std::move(nt));
  }
  return sub_scaled_shifted(ctx, lhs, g, g[0].c.inverse(), sg, dsg);
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order) {
  Ctx ctx{order, f.field(), f.vars()};
  std::vector<OPoly> b;
  for (const auto& g : basis)
    if (!g.is_zero()) b.push_back(ctx.to_internal(g));
  return ctx.from_internal(normal_form_internal(ctx, ctx.to_internal(f), b));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("s_polynomial of the zero polynomial");
  Ctx ctx{order, f.field(), f.vars()};
  return ctx.from_internal(s_polynomial_internal(ctx, ctx.to_internal(f), ctx.to_internal(g)));
}

std::vector<Polynomial> buchberger(const Ideal& ideal, const MonomialOrder& order,
                                   const GroebnerBudget& budget) {
  Ctx ctx{order, ideal.field, ideal.vars};
  std::vector<OPoly> g;
  for (const auto& p : ideal.generators)
    if (!p.is_zero()) g.push_back(make_monic(ctx.to_internal(p)));

  struct Pair {
    Expv lcm;
    std::uint32_t deg;
    std::size_t i, j;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    const int c = cmp_exp(a.lcm, b.lcm, a.deg, b.deg, order.kind());
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::multiset<Pair, decltype(pair_less)> queue(pair_less);

  auto push_pairs_with = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (exp_coprime(g[i][0].e, g[j][0].e)) continue;  // first criterion
      Pair p;
      p.i = i;
      p.j = j;
      p.lcm.resize(g[i][0].e.size());
      p.deg = 0;
      for (std::size_t k = 0; k < p.lcm.size(); ++k) {
        p.lcm[k] = std::max(g[i][0].e[k], g[j][0].e[k]);
        p.deg += p.lcm[k];
      }
      queue.insert(std::move(p));
    }
  };
  for (std::size_t j = 0; j < g.size(); ++j) push_pairs_with(j);

  std::uint64_t steps = 0;
  while (!queue.empty()) {
    const Pair p = *queue.begin();
    queue.erase(queue.begin());
    if (++steps > budget.max_pair_reductions)
      throw budget_exceeded("buchberger: pair-reduction budget exceeded");
    OPoly s = s_polynomial_internal(ctx, g[p.i], g[p.j]);
    OPoly h = normal_form_internal(ctx, std::move(s), g);
    if (h.empty()) continue;
    g.push_back(make_monic(std::move(h)));
    push_pairs_with(g.size() - 1);
  }

  std::vector<Polynomial> out;
  out.reserve(g.size());
  for (const auto& p : g) out.push_back(ctx.from_internal(p));
  return out;
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis,
                                     const MonomialOrder& order) {
  if (basis.empty()) return basis;
  Ctx ctx{order, basis.front().field(), basis.front().vars()};
  std::vector<OPoly> g;
  for (const auto& p : basis)
    if (!p.is_zero()) g.push_back(make_monic(ctx.to_internal(p)));

  // deterministic processing order: ascending leading monomial, then size
  std::sort(g.begin(), g.end(), [&](const OPoly& a, const OPoly& b) {
    const int c = ctx.cmp(a[0], b[0]);
    if (c != 0) return c < 0;
    return a.size() < b.size();
  });

  // minimalize: drop any element whose leading monomial another kept
  // element's leading monomial divides
  std::vector<bool> dropped(g.size(), false);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size() && !dropped[i]; ++j) {
      if (i == j || dropped[j]) continue;
      if (exp_divides(g[j][0].e, g[i][0].e) &&
          !(j > i && g[j][0].e == g[i][0].e))
        dropped[i] = true;
    }
  }
  std::vector<OPoly> kept;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!dropped[i]) kept.push_back(std::move(g[i]));

  // tail-reduce to a fixpoint; leading monomials are pairwise non-divisible
  // so they never change
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<OPoly> others;
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j]);
      OPoly r = normal_form_internal(ctx, kept[i], others);
      r = make_monic(std::move(r));
      if (!opoly_equal(r, kept[i])) {
        kept[i] = std::move(r);
        changed = true;
      }
    }
  }

  std::sort(kept.begin(), kept.end(),
            [&](const OPoly& a, const OPoly& b) { return ctx.cmp(a[0], b[0]) < 0; });
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (const auto& p : kept) out.push_back(ctx.from_internal(p));
  return out;
}

std::vector<Polynomial> reduced_groebner_basis(const Ideal& ideal,
                                               const MonomialOrder& order,
                                               const GroebnerBudget& budget) {
  return reduce_basis(buchberger(ideal, order, budget), order);
}

}  // namespace evoiso
