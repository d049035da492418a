#include "evoiso/variety.hpp"

#include <algorithm>
#include <limits>

namespace evoiso {

namespace {

struct GenTerm {
  std::uint32_t c;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> powers;  // (var, exp)
};

struct Gen {
  std::vector<GenTerm> terms;
  std::vector<std::uint32_t> vars;
};

std::uint32_t eval_gen(const Gen& g, const std::vector<std::uint32_t>& point,
                       std::uint64_t p) {
  std::uint64_t acc = 0;
  for (const auto& t : g.terms) {
    std::uint64_t v = t.c;
    for (const auto& [var, e] : t.powers)
      for (std::uint32_t k = 0; k < e && v != 0; ++k) v = (v * point[var]) % p;
    acc = (acc + v) % p;
  }
  return std::uint32_t(acc);
}

// Static variable order chosen to close generators as early as possible:
// repeatedly pick the variable whose tightest open generator has the fewest
// unassigned variables left (fail-first), breaking ties toward variables
// that appear in more generators. Variables outside every generator go last.
std::vector<std::uint32_t> choose_order(std::size_t nvars, const std::vector<Gen>& gens) {
  std::vector<std::uint32_t> occurrences(nvars, 0);
  for (const auto& g : gens)
    for (std::uint32_t v : g.vars) ++occurrences[v];

  std::vector<std::uint32_t> remaining;
  remaining.reserve(gens.size());
  for (const auto& g : gens) remaining.push_back(std::uint32_t(g.vars.size()));

  std::vector<bool> chosen(nvars, false);
  std::vector<std::uint32_t> order;
  order.reserve(nvars);
  for (std::size_t step = 0; step < nvars; ++step) {
    std::uint32_t best = 0;
    std::uint64_t best_score = std::numeric_limits<std::uint64_t>::max();
    std::uint32_t best_occ = 0;
    bool found = false;
    for (std::uint32_t v = 0; v < nvars; ++v) {
      if (chosen[v]) continue;
      std::uint64_t score = std::numeric_limits<std::uint64_t>::max();
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        if (remaining[gi] == 0) continue;
        bool contains = std::find(gens[gi].vars.begin(), gens[gi].vars.end(), v) !=
                        gens[gi].vars.end();
        if (contains) score = std::min<std::uint64_t>(score, remaining[gi]);
      }
      if (!found || score < best_score ||
          (score == best_score && (occurrences[v] > best_occ ||
                                   (occurrences[v] == best_occ && v < best)))) {
        best = v;
        best_score = score;
        best_occ = occurrences[v];
        found = true;
      }
    }
    chosen[best] = true;
    order.push_back(best);
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
      if (remaining[gi] > 0 &&
          std::find(gens[gi].vars.begin(), gens[gi].vars.end(), best) != gens[gi].vars.end())
        --remaining[gi];
  }
  return order;
}

}  // namespace

void scan_variety(const Ideal& ideal, const VarietyBudget& budget,
                  const std::function<bool(std::span<const std::uint32_t>)>& visit) {
  if (!ideal.field.is_prime_field())
    throw field_error("variety enumeration requires a finite field");
  const std::uint64_t p = ideal.field.prime();
  const std::size_t nvars = ideal.vars->size();
  if (nvars > budget.max_variables)
    throw budget_exceeded("variety enumeration: " + std::to_string(nvars) +
                          " variables exceed the budget of " +
                          std::to_string(budget.max_variables));

  std::vector<Gen> gens;
  for (const auto& poly : ideal.generators) {
    if (poly.is_zero()) continue;
    Gen g;
    for (const auto& t : poly.terms()) {
      GenTerm gt;
      gt.c = std::uint32_t(t.coeff.residue());
      gt.powers.assign(t.mono.factors().begin(), t.mono.factors().end());
      g.terms.push_back(std::move(gt));
      for (const auto& [var, e] : t.mono.factors())
        if (std::find(g.vars.begin(), g.vars.end(), var) == g.vars.end())
          g.vars.push_back(var);
    }
    if (g.vars.empty()) return;  // nonzero constant generator: empty variety
    gens.push_back(std::move(g));
  }

  const std::vector<std::uint32_t> order = choose_order(nvars, gens);

  // generators grouped by the depth at which their last variable is assigned
  std::vector<std::uint32_t> position(nvars, 0);
  for (std::size_t d = 0; d < nvars; ++d) position[order[d]] = std::uint32_t(d);
  std::vector<std::vector<std::uint32_t>> closing(nvars);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    std::uint32_t last = 0;
    for (std::uint32_t v : gens[gi].vars) last = std::max(last, position[v]);
    closing[last].push_back(std::uint32_t(gi));
  }

  std::vector<std::uint32_t> point(nvars, 0);
  if (nvars == 0) {
    visit(point);
    return;
  }

  // iterative depth-first scan, values ascending
  std::vector<std::uint32_t> value(nvars, 0);
  std::size_t depth = 0;
  bool descending = true;
  while (true) {
    if (descending) {
      value[depth] = 0;
    } else {
      if (++value[depth] >= p) {
        if (depth == 0) return;
        --depth;
        descending = false;
        continue;
      }
    }
    point[order[depth]] = value[depth];
    bool ok = true;
    for (std::uint32_t gi : closing[depth])
      if (eval_gen(gens[gi], point, p) != 0) {
        ok = false;
        break;
      }
    if (!ok) {
      descending = false;
      continue;
    }
    if (depth + 1 == nvars) {
      if (!visit(point)) return;
      descending = false;
    } else {
      ++depth;
      descending = true;
    }
  }
}

std::vector<Point> variety_points(const Ideal& ideal, const VarietyBudget& budget) {
  std::vector<std::vector<std::uint32_t>> raw;
  scan_variety(ideal, budget, [&](std::span<const std::uint32_t> pt) {
    raw.emplace_back(pt.begin(), pt.end());
    return true;
  });
  std::sort(raw.begin(), raw.end());
  std::vector<Point> out;
  out.reserve(raw.size());
  for (const auto& r : raw) {
    Point pt;
    pt.reserve(r.size());
    for (std::uint32_t v : r) pt.push_back(Scalar::from_residue(ideal.field, v));
    out.push_back(std::move(pt));
  }
  return out;
}

std::uint64_t variety_size(const Ideal& ideal, const VarietyBudget& budget) {
  std::uint64_t n = 0;
  scan_variety(ideal, budget, [&](std::span<const std::uint32_t>) {
    ++n;
    return true;
  });
  return n;
}

}  // namespace evoiso
