#include "sno/schur.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace sno {

namespace {

constexpr std::array<std::pair<Property, const char*>, 6> kPropertyNames{{
    {Property::increasing, "Increasing"},
    {Property::decreasing, "Decreasing"},
    {Property::schur_convex, "SchurConvex"},
    {Property::schur_concave, "SchurConcave"},
    {Property::convex_affine, "ConvexAffine"},
    {Property::concave_affine, "ConcaveAffine"},
}};

using Cvec = std::vector<std::complex<double>>;

}  // namespace

std::vector<std::string> property_names(PropertySet s) {
  std::vector<std::string> out;
  for (auto [p, name] : kPropertyNames)
    if (has(s, p)) out.emplace_back(name);
  return out;
}

Property property_from_name(const std::string& name) {
  for (auto [p, n] : kPropertyNames)
    if (name == n) return p;
  fail(ErrorCode::schema_violation, "unknown property \"" + name + "\"");
}

SymmetricFunction SymmetricFunction::builtin(const std::string& name, std::size_t arity) {
  if (name == "sum")
    return custom(
        name, arity,
        [](const Cvec& x) {
          std::complex<double> s = 0.0;
          for (auto v : x) s += v;
          return s;
        },
        [](const Cvec& x) { return Cvec(x.size(), 1.0); });
  if (name == "sumsq")
    return custom(
        name, arity,
        [](const Cvec& x) {
          std::complex<double> s = 0.0;
          for (auto v : x) s += v * v;
          return s;
        },
        [](const Cvec& x) {
          Cvec g(x.size());
          for (std::size_t k = 0; k < x.size(); ++k) g[k] = 2.0 * x[k];
          return g;
        });
  if (name == "product")
    return custom(
        name, arity,
        [](const Cvec& x) {
          std::complex<double> p = 1.0;
          for (auto v : x) p *= v;
          return p;
        },
        [](const Cvec& x) {
          Cvec g(x.size(), 1.0);
          for (std::size_t k = 0; k < x.size(); ++k)
            for (std::size_t t = 0; t < x.size(); ++t)
              if (t != k) g[k] *= x[t];
          return g;
        });
  fail(ErrorCode::schema_violation, "unknown builtin function \"" + name + "\"");
}

SymmetricFunction SymmetricFunction::polynomial(std::vector<Term> terms, std::size_t arity) {
  for (const auto& t : terms)
    if (t.powers.size() != arity)
      fail(ErrorCode::dimension_mismatch, "each term needs one power per variable");
  return custom("polynomial", arity, [terms = std::move(terms)](const Cvec& x) {
    std::complex<double> s = 0.0;
    for (const auto& t : terms) {
      std::complex<double> m = t.coefficient;
      for (std::size_t k = 0; k < x.size(); ++k) m *= std::pow(x[k], static_cast<int>(t.powers[k]));
      s += m;
    }
    return s;
  });
}

SymmetricFunction SymmetricFunction::custom(std::string name, std::size_t arity, Value value,
                                            Gradient gradient) {
  SymmetricFunction f;
  f.name_ = std::move(name);
  f.arity_ = arity;
  f.value_ = std::move(value);
  f.gradient_ = std::move(gradient);
  return f;
}

std::complex<double> SymmetricFunction::value(const Cvec& x) const {
  if (x.size() != arity_) fail(ErrorCode::dimension_mismatch, "wrong number of arguments");
  return value_(x);
}

Scalar SymmetricFunction::value(const ComplexVector& x) const {
  Cvec z;
  double eps = kDefaultEpsilon;
  for (const auto& s : x) {
    z.push_back(s.to_complex());
    if (!s.is_exact()) eps = s.epsilon();
  }
  return Scalar::floating(value(z), eps);
}

Cvec SymmetricFunction::gradient(const Cvec& x) const {
  if (x.size() != arity_) fail(ErrorCode::dimension_mismatch, "wrong number of arguments");
  Cvec g;
  if (gradient_) {
    g = gradient_(x);
  } else {
    g.resize(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
      const double h = 1e-6 * std::max(1.0, std::abs(x[k]));
      Cvec a = x, b = x;
      a[k] += h;
      b[k] -= h;
      const std::complex<double> du = (value_(a) - value_(b)) / (2.0 * h);
      a = x;
      b = x;
      a[k] += std::complex<double>(0.0, h);
      b[k] -= std::complex<double>(0.0, h);
      const std::complex<double> dv = (value_(a) - value_(b)) / (2.0 * h);
      // Wirtinger derivative; equals f'(x_k) when f is holomorphic in x_k.
      g[k] = 0.5 * (du - std::complex<double>(0.0, 1.0) * dv);
    }
  }
  for (auto v : g)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      fail(ErrorCode::gradient_unavailable, name_ + " has no finite gradient at the sample");
  return g;
}

bool SymmetricFunction::looks_symmetric(std::uint64_t seed, int trials) const {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < trials; ++t) {
    Cvec x(arity_);
    for (auto& v : x) v = {u(rng), u(rng)};
    Cvec p = x;
    std::shuffle(p.begin(), p.end(), rng);
    auto a = value(x), b = value(p);
    if (std::abs(a - b) > 1e-9 * std::max(1.0, std::abs(a))) return false;
  }
  return true;
}

void DomainBox::validate() const {
  if (c1 < 0.0) fail(ErrorCode::schema_violation, "domain box needs c1 >= 0");
  if (c2 > c3) fail(ErrorCode::schema_violation, "domain box needs c2 <= c3");
}

OstrowskiReport schur_ostrowski_check(const SymmetricFunction& f, const DomainBox& box,
                                      const std::vector<ComplexVector>& samples) {
  box.validate();
  const double tol = box.tolerance;
  OstrowskiReport report;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const ComplexVector& x = samples[s];
    Cvec z;
    for (const auto& v : x) z.push_back(v.to_complex());
    const Cvec g = f.gradient(z);
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (i == j || cmp_total(x[i], x[j]) == OrderOutcome::less) continue;
        OstrowskiEntry e{s, i, j, (g[i] - g[j]).real(), (g[i] - g[j]).imag(), 1, true};
        const bool dr_nonneg = e.dr >= -tol;
        const bool di_nonneg = e.di >= -tol;
        if (dr_nonneg && di_nonneg) {
          e.matched_case = 1;
          e.pass = box.c3 * e.di <= tol;
        } else if (dr_nonneg) {
          e.matched_case = 2;
          e.pass = box.c2 * e.di <= tol;
        } else if (di_nonneg) {
          e.matched_case = 3;
          e.pass = box.c1 * e.dr >= box.c3 * e.di - tol;
        } else {
          e.matched_case = 4;
          e.pass = box.c1 * e.dr >= box.c2 * e.di - tol;
        }
        report.pass = report.pass && e.pass;
        report.entries.push_back(e);
      }
    }
  }
  return report;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

FalsifyResult schur_convex_falsify(const SymmetricFunction& f, std::size_t n, std::size_t trials,
                                   std::uint64_t seed, const SampleDomain& domain) {
  if (n != f.arity()) fail(ErrorCode::dimension_mismatch, "arity does not match the function");
  FalsifyResult result;
  const Backend backend = Backend::floating();
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(trial_seed(seed, t));
    std::uniform_real_distribution<double> re(domain.re_lo, domain.re_hi);
    std::uniform_real_distribution<double> im(domain.im_lo, domain.im_hi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> index(0, n - 1);
    ComplexVector y;
    for (std::size_t k = 0; k < n; ++k)
      y.push_back(Scalar::floating({re(rng), domain.im_lo == domain.im_hi ? domain.im_lo : im(rng)},
                                   backend.epsilon));
    ComplexVector x = y;
    const std::size_t steps = 1 + index(rng);
    for (std::size_t s = 0; s < steps && n > 1; ++s) {
      std::size_t i = index(rng), j = index(rng);
      if (i == j) continue;
      x = t_transform_apply(x, {i, j, Scalar::floating(unit(rng), 0.0, backend.epsilon)});
    }
    ++result.trials_run;
    if (majorize_check(x, y) != MajorizationVerdict::strict) {
      ++result.skipped;
      continue;
    }
    Scalar fx = f.value(x), fy = f.value(y);
    if (cmp_total(fx, fy) == OrderOutcome::greater) {
      result.counterexample = Counterexample{x, y, fx, fy, t};
      return result;
    }
  }
  return result;
}

namespace {

struct Row {
  PropertySet g;
  PropertySet h;
  PropertySet f;
};

using P = Property;

const std::vector<Row>& table1() {
  static const std::vector<Row> rows{
      {props({P::increasing}), props({P::schur_convex}), props({P::schur_convex})},
      {props({P::increasing}), props({P::schur_concave}), props({P::schur_concave})},
      {props({P::decreasing}), props({P::schur_convex}), props({P::schur_concave})},
      {props({P::decreasing}), props({P::schur_concave}), props({P::schur_convex})},
      {props({P::increasing}), props({P::increasing, P::schur_convex}), props({P::increasing, P::schur_convex})},
      {props({P::increasing}), props({P::increasing, P::schur_concave}), props({P::increasing, P::schur_concave})},
      {props({P::decreasing}), props({P::decreasing, P::schur_convex}), props({P::decreasing, P::schur_concave})},
      {props({P::decreasing}), props({P::decreasing, P::schur_concave}), props({P::decreasing, P::schur_convex})},
      {props({P::increasing}), props({P::decreasing, P::schur_convex}), props({P::decreasing, P::schur_convex})},
      {props({P::increasing}), props({P::increasing, P::schur_concave}), props({P::increasing, P::schur_concave})},
      {props({P::decreasing}), props({P::decreasing, P::schur_convex}), props({P::increasing, P::schur_concave})},
      {props({P::decreasing}), props({P::increasing, P::schur_concave}), props({P::decreasing, P::schur_convex})},
  };
  return rows;
}

const std::vector<Row>& table2() {
  static const std::vector<Row> rows{
      {props({P::increasing, P::schur_convex}), props({P::convex_affine}), props({P::schur_convex})},
      {props({P::decreasing, P::schur_convex}), props({P::concave_affine}), props({P::schur_convex})},
      {props({P::increasing, P::schur_convex}), props({P::increasing, P::convex_affine}), props({P::increasing, P::schur_convex})},
      {props({P::decreasing, P::schur_convex}), props({P::decreasing, P::concave_affine}), props({P::increasing, P::schur_convex})},
      {props({P::increasing, P::schur_convex}), props({P::decreasing, P::convex_affine}), props({P::decreasing, P::schur_convex})},
      {props({P::decreasing, P::schur_convex}), props({P::increasing, P::concave_affine}), props({P::decreasing, P::schur_convex})},
      {props({P::decreasing, P::schur_concave}), props({P::convex_affine}), props({P::schur_concave})},
      {props({P::increasing, P::schur_concave}), props({P::concave_affine}), props({P::schur_concave})},
      {props({P::decreasing, P::schur_concave}), props({P::increasing, P::convex_affine}), props({P::decreasing, P::schur_concave})},
      {props({P::increasing, P::schur_concave}), props({P::decreasing, P::concave_affine}), props({P::decreasing, P::schur_concave})},
      {props({P::decreasing, P::schur_concave}), props({P::decreasing, P::convex_affine}), props({P::increasing, P::schur_concave})},
      {props({P::increasing, P::schur_concave}), props({P::increasing, P::concave_affine}), props({P::increasing, P::schur_concave})},
  };
  return rows;
}

CompositionResult lookup(const std::vector<Row>& rows, PropertySet g, PropertySet h) {
  CompositionResult out;
  PropertySet derived = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if ((g & rows[r].g) == rows[r].g && (h & rows[r].h) == rows[r].h) {
      derived |= rows[r].f;
      out.rows.push_back(static_cast<int>(r + 1));
    }
  }
  if (!out.rows.empty()) out.derived = derived;
  return out;
}

}  // namespace

CompositionResult compose_table1(PropertySet g, PropertySet h) { return lookup(table1(), g, h); }

CompositionResult compose_table2(PropertySet g, PropertySet h, bool cdm_verified) {
  if (!cdm_verified) return {};
  return lookup(table2(), g, h);
}

bool cdm_condition_check(const AnalyticFunction& h, const Scalar& y1, const Scalar& y2,
                         const Scalar& alpha) {
  const Scalar h1 = h(y1), h2 = h(y2);
  const Scalar rest = alpha.one_like() - alpha;
  ComplexVector mixed{alpha * h1 + rest * h2, alpha * h2 + rest * h1};
  return majorize_check(mixed, {h1, h2}) == MajorizationVerdict::strict;
}

namespace {

constexpr int kSegmentSamples = 16;

struct Partials {
  Scalar re_u, re_v, im_u, im_v;
};

Partials partials_at(const AnalyticFunction& f, const Scalar& z) {
  Scalar d = f.derivative(z, 1);
  return {d.real(), -d.imag(), d.imag(), d.real()};
}

// Points a + (b - a) k / K for k = 0..K.
ComplexVector segment(const Scalar& a, const Scalar& b) {
  ComplexVector out;
  const Backend backend = a.backend();
  for (int k = 0; k <= kSegmentSamples; ++k)
    out.push_back(a + (b - a) * Scalar::from_rational(mpq_class(k, kSegmentSamples), backend));
  return out;
}

bool all_of_segment(const AnalyticFunction& f, const ComplexVector& pts,
                    const std::function<bool(const Partials&)>& pred) {
  return std::all_of(pts.begin(), pts.end(),
                     [&](const Scalar& z) { return pred(partials_at(f, z)); });
}

// Monotonicity case for p < q, or 0 when no case applies.
int pair_case(const AnalyticFunction& f, const Scalar& p, const Scalar& q, int sign) {
  const Scalar zero = p.zero_like();
  auto pos = [&](const Scalar& v) { return sign > 0 ? v > zero : v < zero; };
  auto nonneg = [&](const Scalar& v) { return sign > 0 ? v >= zero : v <= zero; };
  auto null = [&](const Scalar& v) { return v == zero; };
  const Scalar u1 = p.real(), v1 = p.imag(), u2 = q.real(), v2 = q.imag();
  const Scalar i = Scalar::exact(0, 1).to_backend(p.backend());
  if (!(u1 == u2)) {
    // Along Re at height v2, then up or down the line u = u1.
    const ComplexVector horizontal = segment(u1 + v2 * i, q);
    const ComplexVector vertical = segment(p, u1 + v2 * i);
    const Scalar dv = v2 - v1;
    if (all_of_segment(f, horizontal, [&](const Partials& d) { return pos(d.re_u); }) &&
        all_of_segment(f, vertical, [&](const Partials& d) { return nonneg(dv * d.re_v); }))
      return 1;
    const ComplexVector box = segment(p, q);
    if (all_of_segment(f, box, [&](const Partials& d) { return null(d.re_u) && null(d.re_v); }) &&
        all_of_segment(f, horizontal, [&](const Partials& d) { return pos(d.im_u); }) &&
        all_of_segment(f, vertical, [&](const Partials& d) { return nonneg(dv * d.im_v); }))
      return 2;
    return 0;
  }
  const ComplexVector vertical = segment(p, q);
  if (all_of_segment(f, vertical, [&](const Partials& d) { return pos(d.re_v); })) return 3;
  if (all_of_segment(f, vertical,
                     [&](const Partials& d) { return null(d.re_v) && pos(d.im_v); }))
    return 4;
  return 0;
}

}  // namespace

MonotonicityEvidence monotone_on_points(const AnalyticFunction& f, const ComplexVector& points,
                                        MonotoneDirection direction) {
  MonotonicityEvidence ev;
  ComplexVector pts = points;
  if (!f.is_polynomial())
    for (auto& p : pts) p = p.to_backend(Backend::floating(p.is_exact() ? kDefaultEpsilon : p.epsilon()));
  pts = sort_desc(pts);
  std::reverse(pts.begin(), pts.end());
  const int sign = direction == MonotoneDirection::increasing ? 1 : -1;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const Scalar& p = pts[k];
    const Scalar& q = pts[k + 1];
    if (p == q) {
      ev.cases.push_back(0);
      continue;
    }
    const int c = pair_case(f, p, q, sign);
    if (c == 0) {
      ev.reason = "no monotonicity case applies between " + p.to_string() + " and " + q.to_string();
      return ev;
    }
    const OrderOutcome direct = cmp_total(f(p), f(q));
    if (direct != (sign > 0 ? OrderOutcome::less : OrderOutcome::greater)) {
      ev.reason = "direct evaluation contradicts monotonicity between " + p.to_string() + " and " +
                  q.to_string();
      return ev;
    }
    ev.cases.push_back(c);
  }
  ev.holds = true;
  return ev;
}

std::string_view to_string(PreservingVerdict v) {
  switch (v) {
    case PreservingVerdict::certified_increasing: return "CertifiedIncreasing";
    case PreservingVerdict::certified_decreasing: return "CertifiedDecreasing";
    case PreservingVerdict::certified_entrywise: return "CertifiedEntrywise";
    case PreservingVerdict::not_certified: return "NotCertified";
  }
  return "NotCertified";
}

PreservingReport majorization_preserving_check(const AnalyticFunction& f, const ComplexVector& x,
                                               const ComplexVector& y) {
  if (majorize_check(x, y) == MajorizationVerdict::none)
    fail(ErrorCode::not_weakly_majorized, "x is not weakly majorized by y");
  const ComplexVector xs = sort_desc(x), ys = sort_desc(y);
  const std::size_t n = xs.size();
  ComplexVector points = xs;
  points.insert(points.end(), ys.begin(), ys.end());

  PreservingReport report;
  if (n == 0) {
    report.verdict = PreservingVerdict::certified_increasing;
    return report;
  }
  ComplexVector fx, fy;
  for (std::size_t k = 0; k < n; ++k) {
    fx.push_back(f(xs[k]));
    fy.push_back(f(ys[k]));
  }
  const auto inc = monotone_on_points(f, points, MonotoneDirection::increasing);
  if (inc.holds) {
    Scalar sx = fx[0].zero_like(), sy = sx;
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) {
      sx += fx[k];
      sy += fy[k];
      ok = sx <= sy;
    }
    if (ok) {
      report.verdict = PreservingVerdict::certified_increasing;
      return report;
    }
    report.reason = "difference-sum condition fails for the increasing case";
  }
  const auto dec = monotone_on_points(f, points, MonotoneDirection::decreasing);
  if (dec.holds) {
    Scalar sx = fx[0].zero_like(), sy = sx;
    bool ok = true;
    for (std::size_t k = n; k-- > 0 && ok;) {
      sx += fx[k];
      sy += fy[k];
      ok = sx <= sy;
    }
    if (ok) {
      report.verdict = PreservingVerdict::certified_decreasing;
      return report;
    }
    report.reason = "difference-sum condition fails for the decreasing case";
  }
  bool entrywise = true;
  for (std::size_t k = 0; k < n; ++k) entrywise = entrywise && xs[k] <= ys[k];
  if (entrywise && (inc.holds || dec.holds)) {
    report.verdict = PreservingVerdict::certified_entrywise;
    report.reversed = !inc.holds;
    report.reason.clear();
    return report;
  }
  if (!inc.holds && !dec.holds) report.reason = inc.reason + "; " + dec.reason;
  return report;
}

}  // namespace sno
