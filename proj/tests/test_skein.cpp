#include "ohtsuki/diagram_io.hpp"
#include "ohtsuki/diagram_ops.hpp"
#include "ohtsuki/corpus.hpp"
#include "ohtsuki/skein.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <numeric>
#include <random>

using namespace ohtsuki;

namespace ohtsuki {
inline void PrintTo(const HalfLaurent& p, std::ostream* os) { *os << format_half_laurent(p); }
inline void PrintTo(const PolyZ& p, std::ostream* os) { *os << p.to_string(); }
}  // namespace ohtsuki

namespace {

HalfLaurent t_pow(int twice, long c = 1) { return HalfLaurent::monomial(twice, BigInt(c)); }

const LinkDiagram& trefoil_plus() {
  static const LinkDiagram d = parse_diagram("braid:2:1,1,1");
  return d;
}
const LinkDiagram& trefoil_minus() {
  static const LinkDiagram d = parse_diagram("braid:2:-1,-1,-1");
  return d;
}
const LinkDiagram& figure8() {
  static const LinkDiagram d = parse_diagram("braid:3:1,-2,1,-2");
  return d;
}

std::vector<CorpusEntry> corpus_knots() {
  std::vector<CorpusEntry> out;
  for (auto& e : load_corpus(OHTSUKI_DATA_DIR "/knots.txt"))
    if (e.diagram().is_knot()) out.push_back(e);
  return out;
}

// Bracket by summing over all 2^n states, loops counted with union-find.
Laurent<BigInt> state_sum_bracket(const LinkDiagram& d) {
  const int n = d.crossing_count();
  int free_loops = d.component_count();
  {
    std::vector<bool> has(d.component_count(), false);
    for (int e = 0; e < d.edge_count(); ++e) has[d.component_of_edge(e)] = true;
    for (bool h : has) free_loops -= h ? 1 : 0;
  }
  const Laurent<BigInt> loop = Laurent<BigInt>::monomial(2, BigInt(-1)) + Laurent<BigInt>::monomial(-2, BigInt(-1));
  Laurent<BigInt> total;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<int> parent(d.edge_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto join = [&](int a, int b) { parent[find(a)] = find(b); };
    int a_count = 0;
    for (int x = 0; x < n; ++x) {
      const auto& e = d.crossing(x).edges;
      if ((mask >> x) & 1ul) {
        join(e[0], e[1]);
        join(e[2], e[3]);
        ++a_count;
      } else {
        join(e[0], e[3]);
        join(e[1], e[2]);
      }
    }
    int loops = free_loops;
    for (int e = 0; e < d.edge_count(); ++e) loops += find(e) == e ? 1 : 0;
    total += Laurent<BigInt>::monomial(a_count - (n - a_count)) * loop.pow(loops - 1);
  }
  return total;
}

// Conway polynomial of a knot from its Alexander matrix: one Fox-calculus row
// per crossing over the arcs, a row and column deleted, the determinant
// interpolated from exact evaluations and normalized to a symmetric
// polynomial with value 1 at t = 1.
PolyZ alexander_conway(const LinkDiagram& k) {
  const int n = k.crossing_count();
  if (n == 0) return PolyZ::constant(1);
  std::vector<int> arc(k.edge_count());
  std::iota(arc.begin(), arc.end(), 0);
  auto find = [&](int x) {
    while (arc[x] != x) x = arc[x] = arc[arc[x]];
    return x;
  };
  for (int e = 0; e < k.edge_count(); ++e)
    if (k.head(e).slot != 0) arc[find(e)] = find(k.next_edge(e));
  std::map<int, int> arc_index;
  for (int e = 0; e < k.edge_count(); ++e) arc_index.emplace(find(e), static_cast<int>(arc_index.size()));
  EXPECT_EQ(static_cast<int>(arc_index.size()), n);

  auto det_at = [&](const Rational& t) {
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
    for (int x = 0; x < n; ++x) {
      const Crossing& c = k.crossing(x);
      const int over = arc_index[find(c.edges[1])];
      const int in = arc_index[find(c.edges[0])];
      const int out = arc_index[find(c.edges[2])];
      if (c.sign > 0) {
        m[x][over] += 1 - t;
        m[x][in] += t;
        m[x][out] -= 1;
      } else {
        m[x][over] += t - 1;
        m[x][in] += 1;
        m[x][out] -= t;
      }
    }
    const int size = n - 1;
    Rational det = 1;
    for (int col = 0; col < size; ++col) {
      int piv = col;
      while (piv < size && m[piv][col] == 0) ++piv;
      if (piv == size) return Rational(0);
      if (piv != col) {
        std::swap(m[piv], m[col]);
        det = -det;
      }
      det *= m[col][col];
      for (int r = col + 1; r < size; ++r) {
        const Rational f = m[r][col] / m[col][col];
        for (int cc = col; cc < size; ++cc) m[r][cc] -= f * m[col][cc];
      }
    }
    return det;
  };

  // Newton interpolation through t = 0..n-1 (degree <= n-1)
  std::vector<Rational> xs, coef;
  for (int i = 0; i < n; ++i) {
    xs.emplace_back(i);
    coef.push_back(det_at(xs.back()));
  }
  for (int j = 1; j < n; ++j)
    for (int i = n - 1; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  std::vector<Rational> poly(n, 0);  // power basis
  for (int i = n - 1; i >= 0; --i) {
    std::vector<Rational> next(n, 0);
    for (int p = 0; p + 1 < n; ++p) next[p + 1] += poly[p];
    for (int p = 0; p < n; ++p) next[p] -= poly[p] * xs[i];
    next[0] += coef[i];
    poly = next;
  }
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  std::size_t lo = 0;
  while (lo < poly.size() && poly[lo] == 0) ++lo;
  std::vector<BigInt> delta;
  for (std::size_t p = lo; p < poly.size(); ++p) {
    EXPECT_TRUE(is_integer(poly[p]));
    delta.push_back(num(poly[p]));
  }
  BigInt at_one = 0;
  for (const auto& c : delta) at_one += c;
  EXPECT_TRUE(at_one == 1 || at_one == -1);
  if (at_one == -1)
    for (auto& c : delta) c = -c;
  const int deg = static_cast<int>(delta.size()) - 1;
  EXPECT_EQ(deg % 2, 0);
  for (int p = 0; p <= deg; ++p) EXPECT_EQ(delta[p], delta[deg - p]);

  // symmetric Laurent polynomial in t -> polynomial in z^2 = t - 2 + t^-1
  std::map<int, BigInt> sym;
  for (int p = 0; p <= deg; ++p)
    if (delta[p] != 0) sym[p - deg / 2] = delta[p];
  std::vector<BigInt> out(deg + 1, 0);
  for (int top = deg / 2; top >= 0; --top) {
    const BigInt a = sym.count(top) ? sym[top] : BigInt(0);
    if (a == 0) continue;
    out[2 * top] = a;
    // subtract a (t - 2 + t^-1)^top
    std::map<int, BigInt> power{{0, 1}};
    for (int k = 0; k < top; ++k) {
      std::map<int, BigInt> next;
      for (const auto& [e, c] : power) {
        next[e + 1] += c;
        next[e] -= 2 * c;
        next[e - 1] += c;
      }
      power = next;
    }
    for (const auto& [e, c] : power) sym[e] -= a * c;
  }
  for (const auto& [e, c] : sym) EXPECT_EQ(c, 0);
  return PolyZ(out);
}

}  // namespace

TEST(Jones, GoldenValues) {
  EXPECT_EQ(jones(parse_diagram("braid:1:")), HalfLaurent(BigInt(1)));
  EXPECT_EQ(jones(trefoil_plus()), t_pow(2) + t_pow(6) - t_pow(8));
  EXPECT_EQ(jones(figure8()), t_pow(0) + t_pow(-4) + t_pow(4) - t_pow(-2) - t_pow(2));
  EXPECT_EQ(format_half_laurent(jones(trefoil_plus())), "t + t^3 - t^4");
  EXPECT_THROW(jones(LinkDiagram()), std::domain_error);
}

TEST(Jones, LinkNormalization) {
  // Hopf link and 2-component unlink
  EXPECT_EQ(jones(parse_diagram("braid:2:1,1")), t_pow(1) + t_pow(5));
  EXPECT_EQ(jones(LinkDiagram::unlink(2)), t_pow(-1) + t_pow(1));
}

TEST(Jones, BracketMatchesStateSum) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int strands = 2 + trial % 3;
    const LinkDiagram d = braid_closure(test_support::random_braid(rng, strands, 2 + trial % 9));
    EXPECT_EQ(kauffman_bracket(d), state_sum_bracket(d)) << to_pd(d);
  }
  for (const auto& e : corpus_knots()) {
    const LinkDiagram d = e.diagram();
    if (d.crossing_count() <= 14) { EXPECT_EQ(kauffman_bracket(d), state_sum_bracket(d)) << e.name; }
  }
}

TEST(Jones, ResourceLimit) {
  SkeinConfig cfg;
  cfg.bracket.max_crossings = 2;
  EXPECT_THROW(jones(trefoil_plus(), cfg), ResourceLimitError);
}

TEST(Jones, SkeinRelationOnRandomTriples) {
  const HalfLaurent t = t_pow(2), ti = t_pow(-2), s = t_pow(1) - t_pow(-1);
  for (const auto& tr : test_support::random_triples(60, 31))
    EXPECT_EQ(t * jones(tr.plus) - ti * jones(tr.minus) - s * jones(tr.zero), HalfLaurent())
        << to_pd(tr.plus);
}

TEST(Conway, GoldenValues) {
  EXPECT_EQ(conway(parse_diagram("braid:1:")), PolyZ::constant(1));
  EXPECT_EQ(conway(LinkDiagram()), PolyZ());
  const PolyZ z = PolyZ::z();
  EXPECT_EQ(conway(trefoil_plus()), PolyZ::constant(1) + z * z);
  EXPECT_EQ(conway(trefoil_minus()), PolyZ::constant(1) + z * z);
  EXPECT_EQ(conway(figure8()), PolyZ::constant(1) - z * z);
  EXPECT_EQ(conway(LinkDiagram::unlink(2)), PolyZ());
  EXPECT_EQ(conway(parse_diagram("braid:3:1,-2,1,-2,1,-2")), z * z * z * z);
}

TEST(Conway, Coefficients) {
  EXPECT_EQ(conway_coefficient(trefoil_plus(), 2), 1);
  EXPECT_EQ(conway_coefficient(trefoil_plus(), 4), 0);
  for (int k : {2, 4, 6}) EXPECT_EQ(conway_coefficient(parse_diagram("braid:1:"), k), 0);
  EXPECT_THROW(conway_coefficient(parse_diagram("braid:2:1,1"), 2), std::invalid_argument);
}

TEST(Conway, SkeinRelationOnRandomTriples) {
  const PolyZ z = PolyZ::z();
  for (const auto& tr : test_support::random_triples(60, 37))
    EXPECT_EQ(conway(tr.plus) - conway(tr.minus) + z * conway(tr.zero), PolyZ()) << to_pd(tr.plus);
}

TEST(Conway, MatchesAlexanderOracleOnCorpus) {
  for (const auto& e : corpus_knots()) {
    const LinkDiagram d = e.diagram();
    const PolyZ c = conway(d);
    EXPECT_EQ(c, alexander_conway(d)) << e.name;
    if (auto c2 = e.expect("c2")) { EXPECT_EQ(Rational(c.coeff(2)), *c2) << e.name; }
    if (auto c4 = e.expect("c4")) { EXPECT_EQ(Rational(c.coeff(4)), *c4) << e.name; }
    if (auto det = e.expect("det")) {
      // |Delta(-1)| = |grad(2i)| = |sum c_2k (-4)^k|
      BigInt v = 0, p = 1;
      for (int k = 0; 2 * k <= c.degree(); ++k, p *= -4) v += c.coeff(2 * k) * p;
      EXPECT_EQ(Rational(abs(v)), *det) << e.name;
    }
  }
}

TEST(Conway, MatchesAlexanderOracleOnRandomKnots) {
  std::mt19937 rng(41);
  int checked = 0;
  while (checked < 30) {
    const LinkDiagram d = braid_closure(test_support::random_braid(rng, 3 + checked % 2, 5 + static_cast<int>(rng() % 7)));
    if (!d.is_knot()) continue;
    ++checked;
    EXPECT_EQ(conway(d), alexander_conway(d)) << to_pd(d);
  }
}

TEST(VDerivative, Examples) {
  EXPECT_EQ(v_derivative(trefoil_plus(), 2), -6);
  EXPECT_EQ(v_derivative(trefoil_plus(), 3), -36);
  EXPECT_EQ(v_derivative(trefoil_minus(), 3), 36);
  EXPECT_EQ(v_derivative(figure8(), 2), 6);
  EXPECT_EQ(v_derivative(figure8(), 3), 0);
  EXPECT_THROW(v_derivative(parse_diagram("braid:2:1,1"), 2), std::invalid_argument);
}

TEST(VDerivative, CorpusProperties) {
  for (const auto& e : corpus_knots()) {
    const LinkDiagram k = e.diagram();
    EXPECT_EQ(v_derivative(k, 0), 1) << e.name;
    EXPECT_EQ(v_derivative(k, 1), 0) << e.name;
    const BigInt v2 = v_derivative(k, 2), v3 = v_derivative(k, 3);
    EXPECT_EQ(v2, -6 * conway_coefficient(k, 2)) << e.name;
    EXPECT_EQ(v2 % 6, 0) << e.name;
    EXPECT_EQ(v3 % 36, 0) << e.name;
    const LinkDiagram m = mirror(k);
    EXPECT_EQ(v_derivative(m, 2), v2) << e.name;
    EXPECT_EQ(v_derivative(m, 3), -v3) << e.name;
    if (auto want = e.expect("v2")) { EXPECT_EQ(Rational(v2), *want) << e.name; }
    if (auto want = e.expect("v3")) { EXPECT_EQ(Rational(v3), *want) << e.name; }
  }
}

TEST(XValue, Examples) {
  EXPECT_EQ(X_value(parse_diagram("braid:1:")), RationalFn::constant(1));
  EXPECT_EQ(X_value(LinkDiagram()), RationalFn::constant(1));
  const RationalFn x = X_value(LinkDiagram::unlink(2));
  EXPECT_EQ(x.denom_exponent, 1);
  EXPECT_EQ(x.numerator, quantum_two());
  EXPECT_EQ(series_expand_rationalfn(x, 4), TruncSeries::constant(1, 4));
}

TEST(Phi, Examples) {
  EXPECT_TRUE(phi_exact(parse_diagram("braid:1:")).is_zero());
  EXPECT_TRUE(phi_exact(LinkDiagram()).is_zero());
  for (const auto* k : {&trefoil_plus(), &figure8()})
    EXPECT_EQ(phi_exact(*k), RationalFn({jones(*k) - HalfLaurent(BigInt(1)), 0}));
  EXPECT_TRUE(phi_exact(LinkDiagram::unlink(3)).is_zero());
}

TEST(Phi, Derivatives) {
  EXPECT_EQ(phi_i(trefoil_plus(), 2), -6);
  EXPECT_EQ(phi_i(parse_diagram("braid:1:"), 1), 0);
  EXPECT_EQ(phi_i(parse_diagram("braid:3:1,-2,1,-2,1,-2"), 0), 0);
  EXPECT_EQ(phi_i(parse_diagram("braid:2:1,1"), 0), 0);
  EXPECT_EQ(phi_small(trefoil_plus(), 1), 6);
  EXPECT_EQ(phi_small(parse_diagram("braid:1:"), 1), 0);
  EXPECT_EQ(phi_small(LinkDiagram(), 2), 0);
  EXPECT_THROW(phi_i(phi(trefoil_plus(), 2), 3), PrecisionError);
}

TEST(Phi, VanishingOrderExamples) {
  EXPECT_GE(vanishing_order(phi(trefoil_plus(), 6)).value(), 2);
  EXPECT_GE(vanishing_order(phi_cable(trefoil_plus(), {2}, 8)).value(), 4);
  EXPECT_FALSE(vanishing_order(phi(LinkDiagram(), 4)).has_value());
}

TEST(Phi, CableMatchesDirectSublinkSum) {
  const LinkDiagram k2 = cable(figure8(), {2});
  EXPECT_EQ(phi_cable_exact(figure8(), {2}), phi_exact(k2));
  const LinkDiagram b = parse_diagram("braid:3:1,-2,1,-2,1,-2");
  EXPECT_EQ(phi_cable_exact(b, {1, 2, 0}), phi_exact(cable(b, {1, 2, 0})));
}

TEST(Phi, VanishingOrderOnKnotCables) {
  for (const auto* k : {&trefoil_plus(), &trefoil_minus(), &figure8()})
    for (int i = 1; i <= 3; ++i) {
      const auto vo = vanishing_order(phi_cable(*k, {i}, 2 * i + 2));
      ASSERT_TRUE(vo.has_value());
      EXPECT_GE(*vo, 2 * i) << "cable " << i;
    }
}

TEST(Phi, VanishingOrderOnBorromeanCables) {
  const LinkDiagram b = parse_diagram("braid:3:1,-2,1,-2,1,-2");
  for (const auto& t : enumerate_tuples(3, 2)) {
    if (tuple_size(t) == 0) continue;
    const int bound = tuple_size(t) + tuple_max(t);
    const PhiValue p = phi_cable(b, t, bound + 1);
    if (auto vo = vanishing_order(p)) { EXPECT_GE(*vo, bound); }
  }
}

TEST(Cache, OnAndOffAgree) {
  InvariantCache cache;
  SkeinConfig with;
  with.cache = &cache;
  std::mt19937 rng(43);
  std::vector<LinkDiagram> ds;
  for (int k = 0; k < 15; ++k) ds.push_back(braid_closure(test_support::random_braid(rng, 3, 6)));
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& d : ds) {
      EXPECT_EQ(jones(d, with), jones(d));
      EXPECT_EQ(conway(d, with), conway(d));
    }
  EXPECT_GE(cache.hits(), 30u);
}

TEST(Cache, FileRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / ("ohtsuki-cache-test-" + std::to_string(::getpid()));
  const auto file = dir / "cache.tsv";
  std::filesystem::remove_all(dir);
  std::vector<LinkDiagram> ds{trefoil_plus(), figure8(), parse_diagram("braid:2:1,1"), cable(trefoil_plus(), {2})};
  {
    InvariantCache cache(file);
    SkeinConfig cfg;
    cfg.cache = &cache;
    for (const auto& d : ds) {
      jones(d, cfg);
      conway(d, cfg);
    }
    cache.save();
  }
  ASSERT_TRUE(std::filesystem::exists(file));
  InvariantCache reloaded(file);
  EXPECT_EQ(reloaded.size(), 2 * ds.size());
  for (const auto& d : ds) {
    ASSERT_TRUE(reloaded.jones(d.encode()).has_value());
    EXPECT_EQ(*reloaded.jones(d.encode()), jones(d));
    ASSERT_TRUE(reloaded.conway(d.encode()).has_value());
    EXPECT_EQ(*reloaded.conway(d.encode()), conway(d));
  }
  std::filesystem::remove_all(dir);
}
