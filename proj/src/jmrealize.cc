#include "jmrealize.hh"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace gorb {

namespace {

using BoxKey = std::array<int, 3>;
BoxKey key_of(const IBox& b) { return {b.i, b.j, b.k}; }

std::map<BoxKey, long long> coefficient_by_box(const CoefficientFunction& c) {
  std::map<BoxKey, long long> out;
  const auto& orbs = c.orbits();
  for (std::size_t k = 0; k < orbs.size(); ++k)
    for (const IBox& b : orbs[k].boxes)
      out[key_of(b)] = c.values[k];
  return out;
}

// Boxes holding i in their support with a nonzero coefficient, by descending
// coefficient, ties broken by the canonical box order.
std::vector<IBox> boxes_at(const GradingSpec& spec, const std::map<BoxKey, long long>& cmap,
                           int i, bool (*filter)(const IBox&) = nullptr) {
  std::vector<IBox> out;
  for (const IBox& b : enumerate_boxes(spec)) {
    auto it = cmap.find(key_of(b));
    if (it == cmap.end() || it->second == 0 || !supp_contains(b, i))
      continue;
    if (filter && !filter(b))
      continue;
    out.push_back(b);
  }
  std::stable_sort(out.begin(), out.end(), [&](const IBox& x, const IBox& y) {
    long long cx = cmap.at(key_of(x)), cy = cmap.at(key_of(y));
    if (cx != cy)
      return cx > cy;
    return compare_boxes(x, y) < 0;
  });
  return out;
}

bool crosses_middle(const GradingSpec& spec, const IBox& b) {
  return spec.odd_case() ? (b.j <= 0 && 0 <= b.i) : (b.j <= -1 && 1 <= b.i);
}

// The canonical above-diagonal box used to present the second half of a
// split orbit: largest shift, ties broken by the box order.
IBox swap_box(const GradingSpec& spec, const std::map<BoxKey, long long>& cmap) {
  const IBox* best = nullptr;
  std::vector<IBox> store;
  for (const IBox& b : enumerate_boxes(spec)) {
    auto it = cmap.find(key_of(b));
    if (it == cmap.end() || it->second == 0)
      continue;
    if (!above_diagonal(b) || !supp_contains(b, 0))
      continue;
    store.push_back(b);
  }
  for (const IBox& b : store)
    if (!best || lambda_of(b) > lambda_of(*best) ||
        (lambda_of(b) == lambda_of(*best) && compare_boxes(b, *best) < 0))
      best = &b;
  if (!best)
    throw std::logic_error("realize: split orbit without an off-diagonal middle box");
  return *best;
}

} // namespace

Realization realize(const CoefficientFunction& c, SplitTag half) {
  const GradingSpec& spec = c.spec;
  if (half == SplitTag::DoublePrime && !splits(spec, c))
    throw std::invalid_argument("realize: only a split orbit has a second half");
  auto cmap = coefficient_by_box(c);

  Realization r{spec, c, half == SplitTag::DoublePrime, {}, {}, {}, {}, {}};

  // Degree blocks, highest degree first. Negative degrees mirror the order
  // of the positive ones through the duality, so that the pairing between
  // opposite blocks is the identity in matching positions.
  for (int deg : spec.interval()) {
    if (deg > 0) {
      for (const IBox& b : boxes_at(spec, cmap, deg))
        for (long long s = 1; s <= cmap.at(key_of(b)); ++s)
          r.labels.push_back(BasisLabel{b, s, deg});
    } else if (deg < 0) {
      for (const IBox& b : boxes_at(spec, cmap, -deg))
        for (long long s = 1; s <= cmap.at(key_of(b)); ++s)
          r.labels.push_back(BasisLabel{tau(spec, b), s, deg});
    } else if (spec.epsilon() == -1) {
      // Symplectic middle block: coefficient orbits come in dual pairs; list
      // the upper members first, then their partners in the same order.
      std::vector<IBox> upper;
      for (const IBox& b : boxes_at(spec, cmap, 0))
        if (above_diagonal(b) || (on_diagonal(b) && b.k == 0))
          upper.push_back(b);
      for (const IBox& b : upper)
        for (long long s = 1; s <= cmap.at(key_of(b)); ++s)
          r.labels.push_back(BasisLabel{b, s, 0});
      for (const IBox& b : upper)
        for (long long s = 1; s <= cmap.at(key_of(b)); ++s)
          r.labels.push_back(BasisLabel{tau(spec, b), s, 0});
    } else {
      // Orthogonal middle block: strictly upper boxes, then the self-dual
      // diagonal ones, then the lower mirrors.
      std::vector<IBox> upper = boxes_at(spec, cmap, 0, above_diagonal);
      std::vector<IBox> diag = boxes_at(spec, cmap, 0, on_diagonal);
      for (const IBox& b : upper)
        for (long long s = 1; s <= cmap.at(key_of(b)); ++s)
          r.labels.push_back(BasisLabel{b, s, 0});
      for (const IBox& b : diag)
        for (long long s = 1; s <= cmap.at(key_of(b)); ++s)
          r.labels.push_back(BasisLabel{b, s, 0});
      for (const IBox& b : upper)
        for (long long s = 1; s <= cmap.at(key_of(b)); ++s)
          r.labels.push_back(BasisLabel{tau(spec, b), s, 0});
    }
  }

  std::size_t n = r.labels.size();
  std::map<std::array<long long, 5>, std::size_t> index;
  for (std::size_t a = 0; a < n; ++a) {
    const BasisLabel& l = r.labels[a];
    index[{l.i, l.b.i, l.b.j, l.b.k, l.s}] = a;
  }
  auto find = [&](const IBox& b, long long s, int i) {
    auto it = index.find({i, b.i, b.j, b.k, s});
    if (it == index.end())
      throw std::logic_error("realize: missing basis label");
    return it->second;
  };

  int eps = spec.epsilon();

  r.gram = RatMatrix(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const BasisLabel& la = r.labels[a];
    const IBox tb = tau(spec, la.b);
    for (std::size_t b2 = 0; b2 < n; ++b2) {
      const BasisLabel& lb = r.labels[b2];
      if (lb.s != la.s || lb.b != tb || la.i + lb.i != 0)
        continue;
      Rat v;
      if (la.i > 0)
        v = 1;
      else if (la.i < 0)
        v = eps;
      else if (above_diagonal(la.b))
        v = 1;
      else if (below_diagonal(la.b))
        v = eps;
      else if (tb == la.b)
        v = 1; // self-dual diagonal line
      else
        v = la.b.k == 0 ? 1 : eps; // doubled diagonal, by copy index
      r.gram(a, b2) = v;
    }
  }

  r.H = RatMatrix(n, n);
  for (std::size_t a = 0; a < n; ++a)
    r.H(a, a) = h_coeff(spec, r.labels[a].b, r.labels[a].i);

  r.E = RatMatrix(n, n);
  r.F = RatMatrix(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const BasisLabel& l = r.labels[a];
    const IBox& b = l.b;
    bool ov = crosses_middle(spec, b);
    // Scalar picked up when the raising map crosses the middle of the
    // diagram; +-1 elsewhere, so that the triple preserves the form.
    if (l.i != b.i) {
      Rat coeff;
      if (!ov)
        coeff = l.i > 0 ? 1 : -1;
      else if (!spec.odd_case()) {
        if (l.i >= 1)
          coeff = 1;
        else if (l.i < -1)
          coeff = -1;
        else if (below_diagonal(b))
          coeff = 1;
        else if (above_diagonal(b))
          coeff = -eps;
        else
          coeff = b.k == 0 ? 1 : -eps;
      } else {
        if (l.i > 0)
          coeff = 1;
        else if (l.i < 0)
          coeff = -1;
        else if (below_diagonal(b))
          coeff = eps;
        else if (above_diagonal(b))
          coeff = 1;
        else
          coeff = b.k == 0 ? 1 : eps;
      }
      r.E(find(b, l.s, l.i + 2), a) = coeff;
    }
    if (l.i != b.j) {
      Rat f = f_coeff(spec, b, l.i);
      Rat coeff;
      if (!ov)
        coeff = l.i > 0 ? f : -f;
      else if (!spec.odd_case()) {
        if (l.i > 1)
          coeff = f;
        else if (l.i <= -1)
          coeff = -f;
        else if (below_diagonal(b))
          coeff = f;
        else if (above_diagonal(b))
          coeff = -eps * f;
        else
          coeff = b.k == 0 ? f : -eps * f;
      } else {
        if (l.i > 2)
          coeff = f;
        else if (l.i <= 0)
          coeff = -f;
        else if (below_diagonal(b))
          coeff = eps * f;
        else if (above_diagonal(b))
          coeff = f;
        else
          coeff = b.k == 0 ? f : eps * f;
      }
      r.F(find(b, l.s, l.i - 2), a) = coeff;
    }
  }

  if (r.swapped) {
    IBox bp = swap_box(spec, cmap);
    long long top = cmap.at(key_of(bp));
    std::size_t a1 = find(bp, top, 0);
    std::size_t a2 = find(tau(spec, bp), top, 0);
    RatMatrix p = RatMatrix::identity(n);
    p(a1, a1) = p(a2, a2) = 0;
    p(a1, a2) = p(a2, a1) = 1;
    r.E = p * r.E * p;
    r.H = p * r.H * p;
    r.F = p * r.F * p;
  }

  return r;
}

namespace {

RatMatrix bracket(const RatMatrix& x, const RatMatrix& y) { return x * y - y * x; }

void check(bool ok, const char* what) {
  if (!ok)
    throw std::logic_error(std::string("triple check failed: ") + what);
}

} // namespace

void verify_triple(const Realization& r) {
  std::size_t n = r.dim();
  check(bracket(r.H, r.E) == r.E.scaled(2), "[H,E] = 2E");
  check(bracket(r.H, r.F) == r.F.scaled(-2), "[H,F] = -2F");
  check(bracket(r.E, r.F) == r.H, "[E,F] = H");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int da = r.degree_of(a), db = r.degree_of(b);
      if (!(r.E(a, b) == 0))
        check(da == db + 2, "E raises degree by 2");
      if (!(r.F(a, b) == 0))
        check(da == db - 2, "F lowers degree by 2");
      if (!(r.H(a, b) == 0))
        check(da == db, "H preserves degree");
      check(r.gram(b, a) == Rat(r.c.spec.epsilon()) * r.gram(a, b), "form symmetry");
    }
  for (const RatMatrix* x : {&r.E, &r.H, &r.F})
    check((x->transpose() * r.gram + r.gram * *x).is_zero(), "form invariance");
  check(rank(r.gram) == n, "nondegenerate form");
}

namespace {

std::vector<RatMatrix> power_table(const RatMatrix& e, std::size_t up_to) {
  std::vector<RatMatrix> pw;
  pw.push_back(RatMatrix::identity(e.rows()));
  for (std::size_t p = 1; p <= up_to; ++p)
    pw.push_back(pw.back() * e);
  return pw;
}

} // namespace

RankTableau rank_tableau_from_matrices(const Realization& r) {
  RankTableau out(r.spec);
  auto pw = power_table(r.E, static_cast<std::size_t>(r.spec.max_index()));
  for (auto& [cell, v] : out.entries) {
    auto [i, j] = cell;
    const RatMatrix& m = pw[static_cast<std::size_t>((i - j) / 2)];
    std::vector<std::size_t> rows, cols;
    for (std::size_t a = 0; a < r.dim(); ++a) {
      if (r.degree_of(a) == i)
        rows.push_back(a);
      if (r.degree_of(a) == j)
        cols.push_back(a);
    }
    RatMatrix block(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < cols.size(); ++b)
        block(a, b) = m(rows[a], cols[b]);
    v = static_cast<long long>(rank(block));
  }
  return out;
}

Partition jordan_from_matrices(const Realization& r) {
  std::vector<long long> ranks; // rank of E^p
  RatMatrix p = RatMatrix::identity(r.dim());
  while (true) {
    long long rk = static_cast<long long>(rank(p));
    ranks.push_back(rk);
    if (rk == 0)
      break;
    p = p * r.E;
  }
  ranks.push_back(0);
  std::vector<long long> parts;
  for (std::size_t k = 1; k + 1 < ranks.size(); ++k) {
    long long mult = ranks[k - 1] - 2 * ranks[k] + ranks[k + 1];
    for (long long t = 0; t < mult; ++t)
      parts.push_back(static_cast<long long>(k));
  }
  return Partition::from_multiset(std::move(parts));
}

std::vector<RatMatrix> isometry_component(const Realization& r, int step) {
  std::size_t n = r.dim();
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (r.degree_of(a) == r.degree_of(b) + step)
        unknowns.push_back({a, b});
  std::vector<std::pair<std::size_t, std::size_t>> eqs;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (r.degree_of(q) == -r.degree_of(p) - step)
        eqs.push_back({p, q});
  // Rows: (X^t G + G X)_{p,q} = 0 over the unknown entries of X.
  RatMatrix sys(eqs.size(), unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    auto [a, b] = unknowns[u];
    for (std::size_t e = 0; e < eqs.size(); ++e) {
      auto [p, q] = eqs[e];
      Rat coeff = 0;
      if (b == p)
        coeff += r.gram(a, q);
      if (b == q)
        coeff += r.gram(p, a);
      sys(e, u) = coeff;
    }
  }
  RatMatrix ker = kernel_basis(sys);
  std::vector<RatMatrix> out;
  for (std::size_t col = 0; col < ker.cols(); ++col) {
    RatMatrix x(n, n);
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      x(unknowns[u].first, unknowns[u].second) = ker(u, col);
    out.push_back(std::move(x));
  }
  return out;
}

Int g0_dimension_from_matrices(const Realization& r) {
  return Int(isometry_component(r, 0).size());
}

Int g2_dimension_from_matrices(const Realization& r) {
  return Int(isometry_component(r, 2).size());
}

namespace {

// Dimension of the part of the span of `basis` on which ad(H) acts with an
// eigenvalue >= threshold. H is diagonal, so each matrix position is an
// eigenvector; the span decomposes accordingly.
Int eigen_dimension_at_least(const Realization& r, const std::vector<RatMatrix>& basis,
                             const Rat& threshold) {
  if (basis.empty())
    return 0;
  std::size_t n = r.dim();
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      bool used = false;
      for (const RatMatrix& x : basis)
        if (!(x(a, b) == 0))
          used = true;
      if (used)
        positions.push_back({a, b});
    }
  std::set<Rat> eigenvalues;
  for (auto [a, b] : positions)
    eigenvalues.insert(r.H(a, a) - r.H(b, b));
  Int total = 0;
  for (const Rat& ev : eigenvalues) {
    if (ev < threshold)
      continue;
    // Vectors of the span supported only on positions of eigenvalue ev.
    std::vector<std::size_t> other;
    for (std::size_t k = 0; k < positions.size(); ++k) {
      auto [a, b] = positions[k];
      if (!(r.H(a, a) - r.H(b, b) == ev))
        other.push_back(k);
    }
    RatMatrix sys(other.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col)
      for (std::size_t row = 0; row < other.size(); ++row) {
        auto [a, b] = positions[other[row]];
        sys(row, col) = basis[col](a, b);
      }
    total += Int(basis.size() - rank(sys));
  }
  return total;
}

} // namespace

Int dimension_by_eigencount(const Realization& r) {
  std::vector<RatMatrix> g0 = isometry_component(r, 0);
  std::vector<RatMatrix> g2 = isometry_component(r, 2);
  Int p0 = eigen_dimension_at_least(r, g0, Rat(0));
  Int p2 = eigen_dimension_at_least(r, g2, Rat(2));
  return Int(g0.size()) - p0 + p2;
}

Int dimension_by_tangent_rank(const Realization& r) {
  std::vector<RatMatrix> g0 = isometry_component(r, 0);
  std::size_t n = r.dim();
  RatMatrix sys(n * n, g0.size());
  for (std::size_t col = 0; col < g0.size(); ++col) {
    RatMatrix t = bracket(g0[col], r.E);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        sys(a * n + b, col) = t(a, b);
  }
  return Int(rank(sys));
}

IsotropicData isotropic_subspace(const Realization& r) {
  if (!jordan_type(r.c).totally_even())
    throw std::logic_error("isotropic subspace: needs a totally even type");
  std::set<std::size_t> span;
  for (std::size_t a = 0; a < r.dim(); ++a) {
    const BasisLabel& l = r.labels[a];
    if (supp_top_contains(r.spec, l.b, l.i))
      span.insert(a);
  }
  if (r.swapped) {
    auto cmap = coefficient_by_box(r.c);
    IBox bp = swap_box(r.spec, cmap);
    long long top = cmap.at(key_of(bp));
    IBox tb = tau(r.spec, bp);
    for (std::size_t a = 0; a < r.dim(); ++a) {
      const BasisLabel& l = r.labels[a];
      if (l.i != 0 || l.s != top)
        continue;
      if (l.b == tb)
        span.erase(a);
      if (l.b == bp)
        span.insert(a);
    }
  }
  IsotropicData out{{span.begin(), span.end()}, 0, 0};
  for (std::size_t a : out.span) {
    const BasisLabel& l = r.labels[a];
    if (l.i < 0)
      ++out.negative_count;
    if (l.i == 0 && below_diagonal(l.b))
      ++out.zero_below_count;
  }
  return out;
}

Parity parity_from_isotropic(const Realization& r) {
  IsotropicData d = isotropic_subspace(r);
  return (d.negative_count + d.zero_below_count) % 2 == 0 ? Parity::Even : Parity::Odd;
}

Ambient embed(const Realization& r) {
  const GradingSpec& spec = r.spec;
  DimensionVector delta = dimension_vector(r.c);
  int eps = spec.epsilon();
  Ambient amb;
  for (int deg : spec.interval()) {
    long long d = delta.at(deg);
    if (deg == 0 && eps == -1) {
      for (long long j = 1; j <= d / 2; ++j)
        amb.labels.push_back({0, j});
      for (long long j = 1; j <= d / 2; ++j)
        amb.labels.push_back({0, -j});
    } else {
      for (long long j = 1; j <= d; ++j)
        amb.labels.push_back({deg, j});
    }
  }
  std::size_t n = amb.labels.size();
  if (n != r.dim())
    throw std::logic_error("embed: dimension mismatch");

  amb.gram = QuarticMatrix(n, n);
  long long d0 = delta.at(0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto [ia, ra] = amb.labels[a];
      auto [ib, rb] = amb.labels[b];
      if (ia + ib != 0)
        continue;
      if (ia > 0 && ra == rb)
        amb.gram(a, b) = Quartic(1);
      else if (ia < 0 && ra == rb)
        amb.gram(a, b) = Quartic(eps);
      else if (ia == 0 && ib == 0) {
        if (eps == 1 && ra + rb == d0 + 1)
          amb.gram(a, b) = Quartic(1);
        if (eps == -1 && ra + rb == 0)
          amb.gram(a, b) = Quartic(ra > 0 ? 1 : eps);
      }
    }

  amb.T = QuarticMatrix(n, n);
  if (spec.odd_case() && eps == 1) {
    // The middle block mixes dual pairs of reference vectors; everything
    // else matches up one to one.
    std::size_t zero_begin = 0;
    while (zero_begin < n && r.degree_of(zero_begin) != 0)
      ++zero_begin;
    long long upper = 0, diag = 0;
    for (std::size_t a = zero_begin; a < n && r.degree_of(a) == 0; ++a) {
      if (above_diagonal(r.labels[a].b))
        ++upper;
      if (on_diagonal(r.labels[a].b))
        ++diag;
    }
    Quartic inv_sqrt2 = Quartic::sqrt2() * Quartic(Rat(1, 2));
    Quartic inv_sqrt_m2 = -Quartic::sqrt_minus2() * Quartic(Rat(1, 2));
    for (std::size_t a = 0; a < n; ++a) {
      if (r.degree_of(a) != 0) {
        amb.T(a, a) = Quartic(1);
        continue;
      }
      long long pos = static_cast<long long>(a - zero_begin) + 1; // 1-based in the block
      const BasisLabel& l = r.labels[a];
      auto row_of = [&](long long j) { return zero_begin + static_cast<std::size_t>(j - 1); };
      if (above_diagonal(l.b)) {
        amb.T(row_of(pos), a) = Quartic(1);
      } else if (below_diagonal(l.b)) {
        long long j = pos - upper - diag; // position among the lower mirrors
        amb.T(row_of(d0 + 1 - j), a) = Quartic(1);
      } else {
        long long t = pos - upper; // position among the self-dual lines
        long long jp = upper + t;
        if (2 * t <= diag) {
          amb.T(row_of(jp), a) = inv_sqrt2;
          amb.T(row_of(d0 + 1 - jp), a) = inv_sqrt2;
        } else if (diag % 2 == 1 && 2 * t == diag + 1) {
          amb.T(row_of(jp), a) = Quartic(1);
        } else {
          amb.T(row_of(jp), a) = inv_sqrt_m2;
          amb.T(row_of(d0 + 1 - jp), a) = -inv_sqrt_m2;
        }
      }
    }
  } else {
    for (std::size_t a = 0; a < n; ++a)
      amb.T(a, a) = Quartic(1);
  }
  return amb;
}

void verify_embedding(const Realization& r, const Ambient& a) {
  std::size_t n = r.dim();
  if (a.T.rows() != n || a.gram.rows() != n)
    throw std::logic_error("embedding check failed: size mismatch");
  QuarticMatrix lifted(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      lifted(x, y) = Quartic(r.gram(x, y));
  if (!(a.T.transpose() * a.gram * a.T == lifted))
    throw std::logic_error("embedding check failed: not an isometry");
}

} // namespace gorb
