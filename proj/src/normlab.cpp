#include "sl2wb/normlab.hpp"

#include "sl2wb/error.hpp"

#include <algorithm>
#include <thread>

namespace sl2wb {

namespace {

// BFS over the conjugation-closed set `step` (a union of classes).
NormProfile ball_search(const GroupTable& group, std::span<const Index> generators, const std::vector<Index>& step) {
  NormProfile p;
  p.generators.assign(generators.begin(), generators.end());
  p.norm.assign(group.order(), kInfiniteNorm);
  p.norm[group.identity()] = 0;
  std::vector<Index> frontier{group.identity()};
  std::size_t reached = 1;
  p.ball_sizes.push_back(1);
  for (unsigned level = 1; !frontier.empty(); ++level) {
    std::vector<Index> next;
    for (Index x : frontier)
      for (Index s : step) {
        const Index y = group.mul(x, s);
        if (p.norm[y] == kInfiniteNorm) {
          p.norm[y] = level;
          next.push_back(y);
        }
      }
    if (next.empty())
      break;
    reached += next.size();
    p.ball_sizes.push_back(reached);
    frontier = std::move(next);
  }
  if (reached == group.order())
    p.diameter = unsigned(p.ball_sizes.size() - 1);
  return p;
}

std::vector<Index> step_set(const GroupTable& group, const ClassPartition& classes, std::span<const Index> generators) {
  std::vector<std::uint32_t> ids;
  for (Index t : generators) {
    ids.push_back(classes.class_of[t]);
    ids.push_back(classes.class_of[group.inv(t)]);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Index> step;
  for (auto c : ids)
    step.insert(step.end(), classes.classes[c].begin(), classes.classes[c].end());
  return step;
}

std::size_t binomial_sum(std::size_t m, unsigned k, std::size_t cap) {
  // sum_{s=1..k} C(m, s), saturating at cap + 1.
  std::size_t total = 0;
  long double c = 1;
  for (unsigned s = 1; s <= k && s <= m; ++s) {
    c = c * (long double)(m - s + 1) / s;
    total += std::size_t(std::min<long double>(c, (long double)cap + 1));
    if (total > cap)
      return cap + 1;
  }
  return total;
}

} // namespace

NormProfile norm_and_diameter(const GroupTable& group, std::span<const Index> generators) {
  std::vector<Index> step;
  std::vector<bool> seen(group.order(), false);
  for (Index t : generators)
    for (Index y : {t, group.inv(t)})
      if (!seen[y])
        for (Index z : conjugacy_class(group, y)) {
          seen[z] = true;
          step.push_back(z);
        }
  std::sort(step.begin(), step.end());
  return ball_search(group, generators, step);
}

NormProfile norm_and_diameter(const GroupTable& group, const ClassPartition& classes,
                              std::span<const Index> generators) {
  return ball_search(group, generators, step_set(group, classes, generators));
}

DeltaReport delta_k(const GroupTable& group, unsigned k, const DeltaOptions& options) {
  if (k == 0)
    throw Error(ErrorKind::InvalidArgument, "delta_k needs k >= 1");
  const ClassPartition classes = conjugacy_classes(group);
  const auto identity_class = classes.class_of[group.identity()];

  // Each candidate picks classes up to inversion: C and C^-1 give the same norm.
  std::vector<std::uint32_t> pairs;
  for (std::uint32_t c = 0; c < classes.classes.size(); ++c) {
    if (c == identity_class)
      continue;
    const auto inv_class = classes.class_of[group.inv(classes.classes[c].front())];
    if (inv_class >= c)
      pairs.push_back(c);
  }

  DeltaReport report;
  report.k = k;
  report.search_space = binomial_sum(pairs.size(), k, options.budget);

  std::vector<std::vector<std::uint32_t>> candidates;
  const unsigned max_size = unsigned(std::min<std::size_t>(k, pairs.size()));
  for (unsigned size = 1; size <= max_size && candidates.size() < options.budget; ++size) {
    std::vector<unsigned> pick(size);
    for (unsigned i = 0; i < size; ++i)
      pick[i] = i;
    for (;;) {
      std::vector<std::uint32_t> cand;
      for (unsigned i : pick)
        cand.push_back(pairs[i]);
      candidates.push_back(std::move(cand));
      if (candidates.size() >= options.budget)
        break;
      int i = int(size) - 1;
      while (i >= 0 && pick[i] == pairs.size() - size + i)
        --i;
      if (i < 0)
        break;
      ++pick[i];
      for (unsigned j = unsigned(i) + 1; j < size; ++j)
        pick[j] = pick[j - 1] + 1;
    }
  }
  report.partial = report.search_space > candidates.size();
  report.examined = candidates.size();

  std::vector<std::optional<unsigned>> diameters(candidates.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < candidates.size(); i += stride) {
      std::vector<Index> reps;
      for (auto c : candidates[i])
        reps.push_back(classes.classes[c].front());
      diameters[i] = norm_and_diameter(group, classes, reps).diameter;
    }
  };
  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(work, w, workers);
    for (auto& t : pool)
      t.join();
  }

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!diameters[i])
      continue;
    ++report.generating_sets;
    if (!report.value || *diameters[i] > *report.value) {
      report.value = diameters[i];
      report.witness_classes = candidates[i];
    }
  }
  for (auto c : report.witness_classes)
    report.witness.push_back(classes.classes[c].front());
  return report;
}

std::vector<Ideal> pi_set(const FiniteRing& ring, std::span<const Mat2> elements) {
  std::vector<Ideal> out;
  for (const Ideal& p : maximal_ideals(ring)) {
    const RingQuotient residue = quotient_ring(ring, p);
    const bool all_scalar = std::all_of(elements.begin(), elements.end(), [&](const Mat2& m) {
      const Mat2 r{residue.image[m.a], residue.image[m.b], residue.image[m.c], residue.image[m.d]};
      return is_scalar(residue.ring, r) && residue.ring.mul(r.a, r.a) == residue.ring.one();
    });
    if (all_scalar)
      out.push_back(p);
  }
  return out;
}

Ideal level_sum(const FiniteRing& ring, std::span<const Mat2> elements) {
  Ideal sum = ring.zero_ideal();
  for (const Mat2& m : elements)
    sum = sum + level_ideal(ring, m);
  return sum;
}

NormalGenerationVerdict normally_generates(const GroupTable& group, std::span<const Index> elements) {
  return normally_generates(group, abelianization(group), elements);
}

NormalGenerationVerdict normally_generates(const GroupTable& group, const AbelianInvariants& ab,
                                           std::span<const Index> elements) {
  NormalGenerationVerdict v;
  v.closure_is_group = normal_closure(group, elements).size() == group.order();
  std::vector<Mat2> mats;
  for (Index i : elements)
    mats.push_back(group.element(i));
  v.pi = pi_set(group.ring(), mats);
  v.pi_empty = v.pi.empty();
  v.ab_generates = ab.generated_by(elements);
  return v;
}

BoundSearchResult bound_search(const GroupTable& group, const Mat2& a, Elem x, Elem b, unsigned k_max) {
  const FiniteRing& r = group.ring();
  if (!r.contains(level_ideal(r, a), x))
    throw Error(ErrorKind::NotInLevelIdeal, r.format(x) + " is not in the level ideal of " + format_matrix(r, a));
  BoundSearchResult out;
  out.target = self_reproducing(r, r.mul(b, r.pow(x, 3)));
  const Index target = group.index_of(out.target);
  const Index gen = group.index_of(a);
  std::vector<Index> step = conjugacy_class(group, gen);
  for (Index y : conjugacy_class(group, group.inv(gen)))
    step.push_back(y);
  std::sort(step.begin(), step.end());
  step.erase(std::unique(step.begin(), step.end()), step.end());

  std::vector<bool> seen(group.order(), false);
  seen[group.identity()] = true;
  std::vector<Index> frontier{group.identity()};
  if (target == group.identity()) {
    out.k = 0;
    return out;
  }
  for (unsigned level = 1; level <= k_max && !frontier.empty(); ++level) {
    std::vector<Index> next;
    for (Index f : frontier)
      for (Index s : step) {
        const Index y = group.mul(f, s);
        if (!seen[y]) {
          seen[y] = true;
          next.push_back(y);
        }
      }
    if (seen[target]) {
      out.k = level;
      return out;
    }
    frontier = std::move(next);
  }
  return out;
}

GeneratorConstruction construct_generators(const FiniteRing& ring, unsigned k) {
  enum class Type { Unramified, Ramified, Three, Helper };
  const auto& factors = ring.factors();
  std::vector<Type> types;
  for (const auto& f : factors) {
    if (f.residue_field_order() == 2)
      types.push_back(f.kind == ChainLocalRing::Kind::PolynomialQuotient && f.length >= 2 ? Type::Ramified
                                                                                           : Type::Unramified);
    else if (f.residue_field_order() == 3)
      types.push_back(Type::Three);
    else
      types.push_back(Type::Helper);
  }
  GeneratorConstruction out;
  out.k = k;
  for (Type t : types) {
    out.r1 += t == Type::Unramified;
    out.r2 += t == Type::Ramified;
    out.q += t == Type::Three;
  }
  out.v = std::max(2 * out.r2 + out.r1, out.q);
  if (k < out.v) {
    out.refused = true;
    out.reason = "rank obstruction: the abelianization F2^" + std::to_string(2 * out.r2) + " x Z4^" +
                 std::to_string(out.r1) + " x F3^" + std::to_string(out.q) + " has rank " + std::to_string(out.v) +
                 ", so no set of " + std::to_string(k) + " elements maps onto a generating set";
    return out;
  }

  // Slots: unramified units, then ramified units, then ramified uniformizers;
  // the F3-type factors get their own slots 0..q-1.
  const unsigned two_slots = 2 * out.r2 + out.r1;
  std::vector<unsigned> unit_slot(factors.size(), 0), uniformizer_slot(factors.size(), 0);
  unsigned next_unram = 0, next_ram = 0, next_three = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    switch (types[i]) {
    case Type::Unramified: unit_slot[i] = next_unram++; break;
    case Type::Ramified:
      unit_slot[i] = out.r1 + next_ram;
      uniformizer_slot[i] = out.r1 + out.r2 + next_ram;
      ++next_ram;
      break;
    case Type::Three: unit_slot[i] = next_three++; break;
    case Type::Helper: break;
    }
  }
  std::vector<unsigned> uniformizer(factors.size(), 0);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const FiniteRing local({factors[i]});
    for (Elem x = 0; x < local.order(); ++x)
      if (local.valuation(x, 0) == 1) {
        uniformizer[i] = local.component(x, 0);
        break;
      }
  }
  for (unsigned u = 0; u < k; ++u) {
    std::vector<unsigned> comps(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      switch (types[i]) {
      case Type::Helper: comps[i] = 1; break;
      case Type::Unramified: comps[i] = u >= two_slots || u == unit_slot[i] ? 1 : 0; break;
      case Type::Ramified:
        comps[i] = u >= two_slots || u == unit_slot[i] ? 1 : u == uniformizer_slot[i] ? uniformizer[i] : 0;
        break;
      case Type::Three: comps[i] = u >= out.q || u == unit_slot[i] ? 1 : 0; break;
      }
    }
    const Elem s = ring.compose(comps);
    out.entries.push_back(s);
    out.elements.push_back(e12(ring, s));
  }
  return out;
}

} // namespace sl2wb
