#pragma once

// The compiled-in catalog: every claim as parameter domain plus legs.

#include <limits>

#include "logmaj/means.hpp"
#include "logmaj/registry_types.hpp"

namespace logmaj {

namespace lab {

using L = LabReal;
using LM = Matrix<L>;
using LP = Psd<L>;
using LV = std::vector<L>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline const std::vector<double> kSchattenSpot = {1.0, 1.5, 2.0, 3.0, kInf};

inline LM pw(const LP& a, L t) { return matrix_power(a, t).matrix(); }
inline LP pwp(const LP& a, L t) { return matrix_power(a, t); }
inline LP mean(const LP& a, const LP& b, L r, L t) { return generalized_mean_rt(a, b, r, t, L(0)); }
inline LP gmean(const LP& a, const LP& b, L t) { return geometric_mean_t(a, b, t, L(0)); }
inline LP natnat(const LP& a, const LP& b) { return natural_natural(a, b, L(0)); }

inline LV sv(const LM& m) { return singular_values(m).vector(); }

/// Squared singular values: lambda(W W*) without forming W W*.
inline LV sv2(const LM& m) {
  LV s = sv(m);
  for (L& v : s) v *= v;
  return s;
}

inline LV eig(const LM& m) { return eigenvalues(Hermitian<L>::from(m)).vector(); }
inline LV prod(const LP& a, const LP& b) { return eigenvalues_of_product(a, b).vector(); }
inline LV moduli(const LM& m) { return eigenvalue_moduli(m).vector(); }

inline LV powv(LV v, L p) {
  for (L& x : v) x = x > L(0) ? std::pow(x, p) : L(0);
  return v;
}

inline LegValues pair(LV lhs, LV rhs) { return {std::move(lhs), std::move(rhs), {}}; }

inline LegValues loewner(const LM& lhs, const LM& rhs) {
  return {eig(lhs), eig(rhs), eig(rhs - lhs)};
}

/// |det| as the product of clamped singular values, so a singular side is
/// exactly zero, consistent with the spectra of the majorization legs.
inline LegValues abs_dets(const LM& lhs, const LM& rhs) {
  const auto abs_det = [](const LM& m) {
    const LV s = sv(m);
    const LabReal floor = zero_clamp<LabReal>(m.rows()) * s.front();
    LabReal d = 1;
    for (LabReal x : s) d *= x < floor ? LabReal(0) : x;
    return d;
  };
  return {{abs_det(lhs)}, {abs_det(rhs)}, {}};
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::DomainViolation, what);
}

constexpr double kSlack = 1e-12;

inline bool within(double v, double lo, double hi) { return v >= lo - kSlack && v <= hi + kSlack; }

inline double lerp(double lo, double hi, double u) { return lo + (hi - lo) * u; }

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

/// t interval of the p-power generalized mean theorem.
inline std::pair<double, double> t_interval(double p, double r, double s) {
  return {(r * p - r) / ((r + s) * p), (r * p + s) / ((r + s) * p)};
}

}  // namespace lab

inline std::vector<Entry> build_catalog() {
  using namespace lab;
  std::vector<Entry> c;

  const std::vector<InputSpec> psd_ab = {{"A", InputClass::psd}, {"B", InputClass::psd}};
  const std::vector<InputSpec> pd_ab = {{"A", InputClass::pd}, {"B", InputClass::pd}};
  auto no_params = [](const std::vector<double>&) { return Params{}; };
  auto no_check = [](const Params&) {};
  auto load = [](double e) { return [e](const Params&) { return e; }; };

  // A^t (A #_t B) B^{1-t}
  auto twisted = [](const LP& a, const LP& b, L t) { return LM(pw(a, t) * gmean(a, b, t).matrix() * pw(b, L(1) - t)); };
  auto t_box = [](double lo, double hi) {
    return [lo, hi](const std::vector<double>& x) { return Params{{"t", lerp(lo, hi, x[0])}}; };
  };
  auto t_check = [](double lo, double hi) {
    return [lo, hi](const Params& p) { require(within(p.get("t"), lo, hi), "t outside [" + fmt(lo) + ", " + fmt(hi) + "]"); };
  };

  c.push_back({
      .id = "ZOU-1",
      .statement = "s(A^{1/2}(A#B)B^{1/2}) <_log s(AB)",
      .anchor = "proved the following inequality",
      .status = Status::theorem,
      .inputs = psd_ab,
      .domain = "none",
      .legs = {{"claim", Relation::log, "s(A^{1/2}(A#B)B^{1/2})", "s(AB)"}},
      .psd_stated = true,
      .map = no_params,
      .check = no_check,
      .exponent_load = load(3),
      .evaluate =
          [](const std::vector<LabInput>& in, const Params&) {
            const LP &a = in[0].psd(), &b = in[1].psd();
            return std::vector<LegValues>{
                pair(sv(pw(a, 0.5L) * gmean(a, b, 0.5L).matrix() * pw(b, 0.5L)), sv(a.matrix() * b.matrix()))};
          },
  });

  auto conj11_eval = [twisted](const std::vector<LabInput>& in, const Params& p) {
    const LP &a = in[0].psd(), &b = in[1].psd();
    return std::vector<LegValues>{pair(sv(twisted(a, b, p.get("t"))), sv(a.matrix() * b.matrix()))};
  };
  c.push_back({
      .id = "CONJ-1.1",
      .statement = "s(A^t(A#_tB)B^{1-t}) <_log s(AB), 0 <= t <= 1",
      .anchor = "gives rise to the following conjecture",
      .status = Status::conjecture,
      .inputs = psd_ab,
      .coords = {{"t", 0, 1}},
      .domain = "0 <= t <= 1",
      .legs = {{"claim", Relation::log, "s(A^t(A#_tB)B^{1-t})", "s(AB)"}},
      .psd_stated = true,
      .map = t_box(0, 1),
      .check = t_check(0, 1),
      .exponent_load = load(4),
      .evaluate = conj11_eval,
  });

  // Two-mean product family.
  auto rs_load = [](const Params& p) {
    const double r = p.get("r"), s = p.get("s");
    return std::max(std::abs(r) + std::abs(s) + 2.0, std::abs(r + s - 1) + 1.0);
  };
  auto rs_box = [](const std::vector<double>& x) {
    double r = x[0], s = x[1];
    if (std::abs(r + s) < 0.05) s = (r + s >= 0 ? 0.05 : -0.05) - r;
    return Params{{"r", r}, {"s", s}, {"t", x[2]}};
  };
  auto rs_check = [](const Params& p) {
    require(within(p.get("t"), 0, 1), "t outside [0, 1]");
    require(std::abs(p.get("r") + p.get("s")) >= 0.05 - kSlack, "|r + s| below 0.05");
  };
  auto pair_means = [](const std::vector<LabInput>& in, const Params& p) {
    const LP &a = in[0].psd(), &b = in[1].psd();
    const L r = p.get("r"), s = p.get("s"), t = p.get("t");
    return std::pair{mean(a, b, r, t), mean(a, b, s, L(1) - t)};
  };
  c.push_back({
      .id = "LS-EIG",
      .statement = "lambda((A#_{r,t}B)(A#_{s,1-t}B)) <_log lambda(A^{r+s-1}B)",
      .anchor = "In the same paper they proved",
      .status = Status::theorem,
      .inputs = psd_ab,
      .coords = {{"r", -1, 2}, {"s", -1, 2}, {"t", 0, 1}},
      .domain = "r, s in [-1, 2], |r + s| >= 0.05, 0 <= t <= 1",
      .legs = {{"claim", Relation::log, "lambda((A#_{r,t}B)(A#_{s,1-t}B))", "lambda(A^{r+s-1}B)"}},
      .psd_stated = true,
      .map = rs_box,
      .check = rs_check,
      .exponent_load = rs_load,
      .evaluate =
          [pair_means](const std::vector<LabInput>& in, const Params& p) {
            const auto [m1, m2] = pair_means(in, p);
            const LP& a = in[0].psd();
            return std::vector<LegValues>{
                pair(prod(m1, m2), prod(pwp(a, L(p.get("r") + p.get("s") - 1)), in[1].psd()))};
          },
  });

  auto conj12_eval = [pair_means](const std::vector<LabInput>& in, const Params& p) {
    const auto [m1, m2] = pair_means(in, p);
    const LP& a = in[0].psd();
    return std::vector<LegValues>{pair(sv(m1.matrix() * m2.matrix()),
                                       sv(pw(a, L(p.get("r") + p.get("s") - 1)) * in[1].psd().matrix()))};
  };
  const LegInfo conj12_leg{"claim", Relation::log, "s((A#_{r,t}B)(A#_{s,1-t}B))", "s(A^{r+s-1}B)"};
  c.push_back({
      .id = "CONJ-1.2",
      .statement = "s((A#_{r,t}B)(A#_{s,1-t}B)) <_log s(A^{r+s-1}B)",
      .anchor = "conjectured the following inequality",
      .status = Status::conjecture,
      .refuted_by = "EX-2.1",
      .inputs = psd_ab,
      .coords = {{"r", -1, 2}, {"s", -1, 2}, {"t", 0, 1}},
      .domain = "r, s in [-1, 2], |r + s| >= 0.05, 0 <= t <= 1",
      .legs = {conj12_leg},
      .psd_stated = true,
      .map = rs_box,
      .check = rs_check,
      .exponent_load = rs_load,
      .evaluate = conj12_eval,
  });

  c.push_back({
      .id = "CONJ-1.2-RMK1.1",
      .statement = "s((A#_{r,t}B)(A#_{s,1-t}B)) <_log s(A^{r+s-1}B) for r, s >= 0, r/(r+s) <= 2t <= (2r+s)/(r+s)",
      .anchor = "precisely for",
      .status = Status::theorem,
      .inputs = psd_ab,
      .coords = {{"r", 0, 2}, {"s", 0, 2}, {"u", 0, 1}},
      .domain = "r, s in [0, 2], r + s >= 0.05, r/(2(r+s)) <= t <= (2r+s)/(2(r+s))",
      .legs = {conj12_leg},
      .psd_stated = true,
      .map =
          [](const std::vector<double>& x) {
            double r = x[0], s = x[1];
            if (r + s < 0.05) s = 0.05 - r;
            const double lo = r / (2 * (r + s)), hi = (2 * r + s) / (2 * (r + s));
            return Params{{"r", r}, {"s", s}, {"t", lerp(lo, hi, x[2])}};
          },
      .check =
          [](const Params& p) {
            const double r = p.get("r"), s = p.get("s"), t = p.get("t");
            require(r >= -kSlack && s >= -kSlack && r + s >= 0.05 - kSlack, "r, s must be nonnegative with r + s >= 0.05");
            require(within(t, r / (2 * (r + s)), (2 * r + s) / (2 * (r + s))), "t outside the remark's interval");
          },
      .exponent_load = rs_load,
      .evaluate = conj12_eval,
  });

  // lambda(A^p B A^{-q} B) = s(A^{-q/2} B A^{p/2})^2
  c.push_back({
      .id = "LEM-2.1",
      .statement = "lambda(A^p B A^{-q} B) >_log lambda(A^{p-q} B^2), A > 0, B Hermitian, p, q >= 0",
      .anchor = "\\lambda(A^p B A^{-q} B) \\succ_{log}",
      .status = Status::lemma,
      .inputs = {{"A", InputClass::pd}, {"B", InputClass::hermitian}},
      .coords = {{"p", 0, 2}, {"q", 0, 2}},
      .domain = "p, q in [0, 2]",
      .legs = {{"claim", Relation::reverse_log, "lambda(A^p B A^{-q} B)", "lambda(A^{p-q} B^2)"}},
      .map = [](const std::vector<double>& x) { return Params{{"p", x[0]}, {"q", x[1]}}; },
      .check =
          [](const Params& p) {
            require(within(p.get("p"), 0, 2) && within(p.get("q"), 0, 2), "p, q outside [0, 2]");
          },
      .exponent_load = [](const Params& p) { return p.get("p") + p.get("q") + 2; },
      .evaluate =
          [](const std::vector<LabInput>& in, const Params& p) {
            const LP& a = in[0].psd();
            const LM& b = in[1].m();
            const L pp = p.get("p"), q = p.get("q");
            return std::vector<LegValues>{
                pair(sv2(pw(a, -q / 2) * b * pw(a, pp / 2)), sv2(pw(a, (pp - q) / 2) * b))};
          },
  });

  c.push_back({
      .id = "EX-2.1",
      .statement = "at t = 0 with s - 1 <= 0 <= 2r + s - 1: s((A#_{r,0}B)(A#_{s,1}B))^2 = lambda(A^{2r+s-1}BA^{s-1}B) "
                   ">_log lambda(A^{r+s-1}B)^2, contradicting the two-mean singular value conjecture",
      .anchor = "is not valid in its current setting",
      .status = Status::example_refutation,
      .inputs = pd_ab,
      .coords = {{"s", -1, 1}, {"u", 0, 1}},
      .domain = "t = 0, s in [-1, 1], (1 - s)/2 <= r <= (1 - s)/2 + 1.5",
      .legs = {{"claim", Relation::log, "s((A#_{r,0}B)(A#_{s,1}B))", "s(A^{r+s-1}B)"},
               {"identity", Relation::spectrum_equality, "s((A#_{r,0}B)(A#_{s,1}B))^2", "lambda(A^{2r+s-1}BA^{s-1}B)",
                false},
               {"lemma-step", Relation::reverse_log, "lambda(A^{2r+s-1}BA^{s-1}B)", "lambda(A^{2r+2s-2}B^2)", false}},
      .map =
          [](const std::vector<double>& x) {
            const double s = x[0];
            return Params{{"r", lerp((1 - s) / 2, (1 - s) / 2 + 1.5, x[1])}, {"s", s}, {"t", 0.0}};
          },
      .check =
          [](const Params& p) {
            const double r = p.get("r"), s = p.get("s");
            require(p.get("t") == 0.0, "t must be 0");
            require(s - 1 <= kSlack && 2 * r + s - 1 >= -kSlack, "needs s <= 1 and 2r + s >= 1");
          },
      .exponent_load = rs_load,
      .evaluate =
          [pair_means](const std::vector<LabInput>& in, const Params& p) {
            const auto [m1, m2] = pair_means(in, p);
            const LP &a = in[0].psd(), &b = in[1].psd();
            const L r = p.get("r"), s = p.get("s");
            LV lhs2 = sv2(m1.matrix() * m2.matrix());
            const std::vector<WordFactor<L>> word = {WordFactor<L>::of(pwp(a, 2 * r + s - 1)), WordFactor<L>::of(b),
                                                     WordFactor<L>::of(pwp(a, s - 1)), WordFactor<L>::of(b)};
            LV middle = real_eigenvalues_general<L>(word).moduli().vector();
            LV rhs2 = sv2(pw(a, r + s - 1) * b.matrix());
            return std::vector<LegValues>{pair(sv(m1.matrix() * m2.matrix()), sv(pw(a, r + s - 1) * b.matrix())),
                                          pair(lhs2, middle), pair(middle, rhs2)};
          },
  });

  c.push_back({
      .id = "LEM-2.2",
      .statement = "0 < Y <= X, 0 < p' <= 1, 0 < q' <= 1, -1 <= r' < 0 with (C1) and ((C2) or (C3)): "
                   "(X^{r'/2} Y^{p'} X^{r'/2})^{1/q'} <= X^{(p'+r')/q'}",
      .anchor = "Furuta inequality with negative powers",
      .status = Status::lemma,
      .inputs = {{"Y", InputClass::pd}, {"D", InputClass::psd}},
      .coords = {{"q'", 0.25, 1}, {"r'", -1, -0.01}, {"u", 0, 1}},
      .domain = "X = Y + D; q' in [0.25, 1], r' in [-1, -0.01], p' in (0, 1] within (C1), and within (C3) when q' < 1/2",
      .legs = {{"claim", Relation::loewner_leq, "(X^{r'/2} Y^{p'} X^{r'/2})^{1/q'}", "X^{(p'+r')/q'}"}},
      .psd_stated = true,
      .map =
          [](const std::vector<double>& x) {
            const double q = x[0], r = x[1];
            double lo = std::max(-r * (1 - q), 1e-3), hi = std::min(q - r * (1 - q), 1.0);
            if (q < 0.5) {
              lo = std::max(lo, (-r * (1 - q) - q) / (1 - 2 * q));
              hi = std::min(hi, -r * (1 - q) / (1 - 2 * q));
            }
            if (lo > hi) throw Error(ErrorCode::EmptyDomain, "no admissible p' for these q', r'");
            return Params{{"p'", lerp(lo, hi, x[2])}, {"q'", q}, {"r'", r}};
          },
      .check =
          [](const Params& p) {
            const double pp = p.get("p'"), q = p.get("q'"), r = p.get("r'");
            require(pp > 0 && pp <= 1 + kSlack && q > 0 && q <= 1 + kSlack && r >= -1 - kSlack && r < 0,
                    "p', q', r' outside their ranges");
            require(within(pp, -r * (1 - q), q - r * (1 - q)), "(C1) fails");
            if (q < 0.5) require(within(pp, (-r * (1 - q) - q) / (1 - 2 * q), -r * (1 - q) / (1 - 2 * q)), "(C3) fails");
          },
      .exponent_load = [](const Params& p) { return (p.get("p'") - p.get("r'")) / p.get("q'") + 1; },
      .evaluate =
          [](const std::vector<LabInput>& in, const Params& p) {
            const LP& y = in[0].psd();
            const LP x = LP::constructed(y.matrix() + in[1].psd().matrix());
            const L pp = p.get("p'"), q = p.get("q'"), r = p.get("r'");
            const LM inner = pw(x, r / 2) * pw(y, pp) * pw(x, r / 2);
            return std::vector<LegValues>{loewner(pw(LP::constructed(inner), 1 / q), pw(x, (pp + r) / q))};
          },
  });

  // p-power family: (p, sign, |r|, |s|, u) with t = lerp over the theorem's interval.
  auto prs_box = [](double plo, double phi) {
    return [plo, phi](const std::vector<double>& x) {
      const double p = lerp(plo, phi, x[0]);
      const double sign = x[1] < 0.5 ? 1.0 : -1.0;
      const double r = sign * x[2], s = sign * x[3];
      const auto [lo, hi] = t_interval(p, r, s);
      return Params{{"p", p}, {"r", r}, {"s", s}, {"t", lerp(lo, hi, x[4])}};
    };
  };
  auto prs_coords = std::vector<Coord>{{"p", 0, 1}, {"sign", 0, 1}, {"|r|", 0.05, 2}, {"|s|", 0.05, 2}, {"u", 0, 1}};
  auto prs_check = [](double plo, double phi) {
    return [plo, phi](const Params& q) {
      const double p = q.get("p"), r = q.get("r"), s = q.get("s"), t = q.get("t");
      require(within(p, plo, phi), "p outside [" + fmt(plo) + ", " + fmt(phi) + "]");
      require(r * s > 0, "r and s must be nonzero with the same sign");
      const auto [lo, hi] = t_interval(p, r, s);
      require(within(t, lo, hi), "t outside the theorem's interval");
    };
  };
  auto prs_load = [](const Params& q) {
    const double p = q.get("p"), r = q.get("r"), s = q.get("s");
    return p * std::max(std::abs(r) + std::abs(s) + 2.0, std::abs(r + s - 1) + 1.0);
  };
  auto power_pair = [](const std::vector<LabInput>& in, const Params& q) {
    const LP &a = in[0].psd(), &b = in[1].psd();
    const L p = q.get("p"), r = q.get("r"), s = q.get("s"), t = q.get("t");
    return std::pair{pwp(mean(a, b, r, t), p), pwp(mean(a, b, s, L(1) - t), p)};
  };
  auto thm21_eval = [power_pair](const std::vector<LabInput>& in, const Params& q) {
    const auto [m1p, m2p] = power_pair(in, q);
    const L p = q.get("p"), r = q.get("r"), s = q.get("s");
    return std::vector<LegValues>{pair(prod(m1p, m2p), powv(prod(pwp(in[0].psd(), r + s - 1), in[1].psd()), p))};
  };
  c.push_back({
      .id = "THM-2.1",
      .statement = "lambda((A#_{r,t}B)^p (A#_{s,1-t}B)^p) <_log lambda(A^{r+s-1}B)^p, 1 <= p <= 2, r, s of the same sign, "
                   "(rp - r)/((r+s)p) <= t <= (rp + s)/((r+s)p)",
      .anchor = "with similar signs and",
      .status = Status::theorem,
      .inputs = psd_ab,
      .coords = prs_coords,
      .domain = "p in [1, 2], r, s same sign with |r|, |s| in [0.05, 2], t in [(rp-r)/((r+s)p), (rp+s)/((r+s)p)]",
      .legs = {{"claim", Relation::log, "lambda((A#_{r,t}B)^p (A#_{s,1-t}B)^p)", "lambda(A^{r+s-1}B)^p"}},
      .psd_stated = true,
      .map = prs_box(1, 2),
      .check = prs_check(1, 2),
      .exponent_load = prs_load,
      .evaluate = thm21_eval,
  });

  c.push_back({
      .id = "THM-2.1-STEPS",
      .statement = "with B scaled so that A^{(r+s-1)/2} B A^{(r+s-1)/2} <= I: (A#_{r,t}B)^p <= A^{rp-(r+s)pt}, "
                   "A^{rp-(r+s)pt} <= (A#_{s,1-t}B)^{-p}, and (A#_{s,1-t}B)^{p/2}(A#_{r,t}B)^p(A#_{s,1-t}B)^{p/2} <= I",
      .anchor = "which is the same as",
      .status = Status::internal_check,
      .inputs = pd_ab,
      .coords = prs_coords,
      .domain = "as THM-2.1",
      .legs = {{"step-3", Relation::loewner_leq, "(A#_{r,t}B')^p", "A^{rp-(r+s)pt}"},
               {"step-4", Relation::loewner_leq, "A^{rp-(r+s)pt}", "(A#_{s,1-t}B')^{-p}"},
               {"implication", Relation::loewner_leq, "(A#_{s,1-t}B')^{p/2}(A#_{r,t}B')^p(A#_{s,1-t}B')^{p/2}", "I"}},
      .map = prs_box(1, 2),
      .check = prs_check(1, 2),
      .exponent_load = prs_load,
      .evaluate =
          [](const std::vector<LabInput>& in, const Params& q) {
            const LP& a = in[0].psd();
            const L p = q.get("p"), r = q.get("r"), s = q.get("s"), t = q.get("t");
            const L top = prod(pwp(a, r + s - 1), in[1].psd()).front();
            const LP b = in[1].psd().apply([top](L v) { return v / top; });
            const LP m1p = pwp(mean(a, b, r, t), p);
            const LP m2 = mean(a, b, s, L(1) - t);
            const LM mid = pw(a, r * p - (r + s) * p * t);
            const LM half = pw(m2, p / 2);
            const Index n = a.dim();
            return std::vector<LegValues>{loewner(m1p.matrix(), mid), loewner(mid, pw(m2, -p)),
                                          loewner(half * m1p.matrix() * half, identity<L>(n))};
          },
  });

  c.push_back({
      .id = "ZZ-CHAIN",
      .statement = "lambda(A^{r+s-1}B)^p <_log lambda(A^{p(r+s-1)}B^p), p >= 1",
      .anchor = "Araki-Lieb-Thirring inequality",
      .status = Status::theorem,
      .inputs = psd_ab,
      .coords = prs_coords,
      .domain = "as THM-2.1",
      .legs = {{"claim", Relation::log, "lambda(A^{r+s-1}B)^p", "lambda(A^{p(r+s-1)}B^p)"}},
      .psd_stated = true,
      .map = prs_box(1, 2),
      .check = prs_check(1, 2),
      .exponent_load = [](const Params& q) { return q.get("p") * (std::abs(q.get("r") + q.get("s") - 1) + 1); },
      .evaluate =
          [](const std::vector<LabInput>& in, const Params& q) {
            const LP &a = in[0].psd(), &b = in[1].psd();
            const L p = q.get("p"), k = q.get("r") + q.get("s") - 1;
            return std::vector<LegValues>{pair(powv(prod(pwp(a, k), b), p), prod(pwp(a, p * k), pwp(b, p)))};
          },
  });

  auto rs1_box = [](double plo, double phi) {
    return [plo, phi](const std::vector<double>& x) {
      const double p = lerp(plo, phi, x[0]);
      return Params{{"p", p}, {"r", 1.0}, {"s", 1.0}, {"t", lerp((p - 1) / (2 * p), (p + 1) / (2 * p), x[1])}};
    };
  };
  auto rs1_check = [](double plo, double phi) {
    return [plo, phi](const Params& q) {
      const double p = q.get("p");
      require(within(p, plo, phi), "p outside [" + fmt(plo) + ", " + fmt(phi) + "]");
      require(q.get("r") == 1.0 && q.get("s") == 1.0, "r = s = 1 required");
      require(within(q.get("t"), (p - 1) / (2 * p), (p + 1) / (2 * p)), "t outside [(p-1)/2p, (p+1)/2p]");
    };
  };
  c.push_back({
      .id = "COR-2.1",
      .statement = "lambda((A#_tB)^p (A#_{1-t}B)^p) <_log lambda(AB)^p, 1 <= p <= 2, (p-1)/2p <= t <= (p+1)/2p",
      .anchor = "for the case $r = s = 1$",
      .status = Status::corollary,
      .inputs = psd_ab,
      .coords = {{"p", 0, 1}, {"u", 0, 1}},
      .domain = "p in [1, 2], (p-1)/2p <= t <= (p+1)/2p",
      .legs = {{"claim", Relation::log, "lambda((A#_tB)^p (A#_{1-t}B)^p)", "lambda(AB)^p"}},
      .psd_stated = true,
      .map = rs1_box(1, 2),
      .check = rs1_check(1, 2),
      .exponent_load = [](const Params& q) { return 4 * q.get("p"); },
      .evaluate = thm21_eval,
  });

  c.push_back({
      .id = "THM-2.2",
      .statement = "lambda((A#_tB)^p (A#_{1-t}B)^p) <_log lambda(AB)^p, p >= 2, (p-1)/2p <= t <= (p+1)/2p",
      .anchor = "by making use of condition",
      .status = Status::theorem,
      .inputs = psd_ab,
      .coords = {{"p", 0, 1}, {"u", 0, 1}},
      .domain = "r = s = 1, p in [2, 4], (p-1)/2p <= t <= (p+1)/2p",
      .legs = {{"claim", Relation::log, "lambda((A#_tB)^p (A#_{1-t}B)^p)", "lambda(AB)^p"}},
      .psd_stated = true,
      .map = rs1_box(2, 4),
      .check = rs1_check(2, 4),
      .exponent_load = [](const Params& q) { return 4 * q.get("p"); },
      .evaluate = thm21_eval,
  });

  c.push_back({
      .id = "CONJ-2.1",
      .statement = "lambda((A#_{r,t}B)^p (A#_{s,1-t}B)^p) <_log lambda(A^{p(r+s-1)}B^p), p >= 1, 0 <= t <= 1, "
                   "r, s >= 1 or r, s <= 0",
      .anchor = "the following more general conjecture",
      .status = Status::conjecture,
      .inputs = psd_ab,
      .coords = {{"p", 1, 3}, {"t", 0, 1}, {"branch", 0, 1}, {"ur", 0, 1}, {"us", 0, 1}},
      .domain = "p in [1, 3], t in [0, 1], (r, s in [1, 2]) or (r, s in [-1, 0])",
      .legs = {{"claim", Relation::log, "lambda((A#_{r,t}B)^p (A#_{s,1-t}B)^p)", "lambda(A^{p(r+s-1)}B^p)"}},
      .psd_stated = true,
      .map =
          [](const std::vector<double>& x) {
            const bool upper = x[2] < 0.5;
            const double r = upper ? 1 + x[3] : -x[3], s = upper ? 1 + x[4] : -x[4];
            return Params{{"p", x[0]}, {"r", r}, {"s", s}, {"t", x[1]}};
          },
      .check =
          [](const Params& q) {
            const double r = q.get("r"), s = q.get("s");
            require(within(q.get("p"), 1, 3), "p outside [1, 3]");
            require(within(q.get("t"), 0, 1), "t outside [0, 1]");
            require((r >= 1 - kSlack && s >= 1 - kSlack) || (r <= kSlack && s <= kSlack), "needs r, s >= 1 or r, s <= 0");
          },
      .exponent_load = prs_load,
      .evaluate =
          [power_pair](const std::vector<LabInput>& in, const Params& q) {
            const auto [m1p, m2p] = power_pair(in, q);
            const L p = q.get("p"), k = q.get("r") + q.get("s") - 1;
            return std::vector<LegValues>{pair(prod(m1p, m2p), prod(pwp(in[0].psd(), p * k), pwp(in[1].psd(), p)))};
          },
  });

  c.push_back({
      .id = "LEM-3.1",
      .statement = "M = [[A, B], [B*, C]] >= 0: |lambda(B)| <_log s(B) <_wlog lambda(A)^{1/2} o lambda(C)^{1/2}",
      .anchor = "represents the Hadamard product",
      .status = Status::lemma,
      .inputs = {{"M", InputClass::psd, 2}},
      .domain = "none",
      .legs = {{"moduli", Relation::log, "|lambda(B)|", "s(B)"},
               {"hadamard", Relation::weak_log, "s(B)", "lambda(A)^{1/2} o lambda(C)^{1/2}"}},
      .psd_stated = true,
      .map = no_params,
      .check = no_check,
      .exponent_load = load(2),
      .evaluate =
          [](const std::vector<LabInput>& in, const Params&) {
            const LM& m = in[0].m();
            const Index n = m.rows() / 2;
            const LM b = m.topRightCorner(n, n);
            LV sb = sv(b);
            const auto ra = Spectrum<L>::from_unsorted(eig(m.topLeftCorner(n, n))).pow(0.5L);
            const auto rc = Spectrum<L>::from_unsorted(eig(m.bottomRightCorner(n, n))).pow(0.5L);
            return std::vector<LegValues>{pair(moduli(b), sb), pair(sb, hadamard(ra, rc).vector())};
          },
  });

  c.push_back({
      .id = "THM-3.1",
      .statement = "s(A^{1/2}(A#B)B^{1/2}) <_log lambda(AB) <_log s(AB)",
      .anchor = "Taking into account that the determinants",
      .status = Status::theorem,
      .inputs = psd_ab,
      .domain = "none",
      .legs = {{"left", Relation::log, "s(A^{1/2}(A#B)B^{1/2})", "lambda(AB)"},
               {"right", Relation::log, "lambda(AB)", "s(AB)"},
               {"determinant", Relation::det_equality, "|det(A^{1/2}(A#B)B^{1/2})|", "|det(AB)|"}},
      .psd_stated = true,
      .map = no_params,
      .check = no_check,
      .exponent_load = load(3),
      .evaluate =
          [](const std::vector<LabInput>& in, const Params&) {
            const LP &a = in[0].psd(), &b = in[1].psd();
            const LM w = pw(a, 0.5L) * gmean(a, b, 0.5L).matrix() * pw(b, 0.5L);
            const LM ab = a.matrix() * b.matrix();
            LV eab = prod(a, b);
            return std::vector<LegValues>{pair(sv(w), eab), pair(eab, sv(ab)), abs_dets(w, ab)};
          },
  });

  c.push_back({
      .id = "RMK-3.1",
      .statement = "s(A^t(A#_tB)B^{1-t}) <_log lambda(AB), 0 <= t <= 1 (fails at t = 0, where the left side is s(AB))",
      .anchor = "Unfortunately it is not, since",
      .status = Status::example_refutation,
      .inputs = pd_ab,
      .coords = {{"t", 0, 1}},
      .domain = "0 <= t <= 1",
      .legs = {{"claim", Relation::log, "s(A^t(A#_tB)B^{1-t})", "lambda(AB)"}},
      .map = t_box(0, 1),
      .check = t_check(0, 1),
      .exponent_load = load(4),
      .evaluate =
          [twisted](const std::vector<LabInput>& in, const Params& p) {
            const LP &a = in[0].psd(), &b = in[1].psd();
            return std::vector<LegValues>{pair(sv(twisted(a, b, p.get("t"))), prod(a, b))};
          },
  });

  c.push_back({
      .id = "THM-3.2",
      .statement = "|lambda(A^t(A#_tB)B^{1-t})| <_log lambda(AB), 0 <= t <= 1",
      .anchor = "replacing the singular values with eigenvalues",
      .status = Status::theorem,
      .inputs = psd_ab,
      .coords = {{"t", 0, 1}},
      .domain = "0 <= t <= 1",
      .legs = {{"claim", Relation::log, "|lambda(A^t(A#_tB)B^{1-t})|", "lambda(AB)"}},
      .psd_stated = true,
      .map = t_box(0, 1),
      .check = t_check(0, 1),
      .exponent_load = load(4),
      .evaluate =
          [twisted](const std::vector<LabInput>& in, const Params& p) {
            const LP &a = in[0].psd(), &b = in[1].psd();
            return std::vector<LegValues>{pair(moduli(twisted(a, b, p.get("t"))), prod(a, b))};
          },
  });

  c.push_back({
      .id = "THM-3.2-STEP",
      .statement = "lambda(B^{1/2-t}A^{1/2}X^tA^{2t}X^tA^{1/2}B^{1/2-t}) <_log lambda(AB), 0 <= t <= 1/2, X = A^{-1/2}BA^{-1/2}",
      .anchor = "Applying Lowner-Heinz inequality",
      .status = Status::internal_check,
      .inputs = pd_ab,
      .coords = {{"t", 0, 0.5}},
      .domain = "0 <= t <= 1/2",
      .legs = {{"claim", Relation::log, "lambda(B^{1/2-t}A^{1/2}X^tA^{2t}X^tA^{1/2}B^{1/2-t})", "lambda(AB)"}},
      .map = t_box(0, 0.5),
      .check = t_check(0, 0.5),
      .exponent_load = load(4),
      .evaluate =
          [](const std::vector<LabInput>& in, const Params& p) {
            const LP &a = in[0].psd(), &b = in[1].psd();
            const L t = p.get("t");
            const LM ir = pw(a, -0.5L);
            const LP x = LP::constructed(ir * b.matrix() * ir);
            const LM w = pw(b, 0.5L - t) * pw(a, 0.5L) * pw(x, t) * pw(a, t);
            return std::vector<LegValues>{pair(sv2(w), prod(a, b))};
          },
  });

  c.push_back({
      .id = "LEM-3.2",
      .statement = "lambda(A^p B A^q B) <_log lambda(A^{p+q} B^2), A >= 0, B Hermitian, p, q >= 0",
      .anchor = "\\lambda(A^p B A^{q} B) \\prec_{log}",
      .status = Status::lemma,
      .inputs = {{"A", InputClass::psd}, {"B", InputClass::hermitian}},
      .coords = {{"p", 0, 2}, {"q", 0, 2}},
      .domain = "p, q in [0, 2]",
      .legs = {{"claim", Relation::log, "lambda(A^p B A^q B)", "lambda(A^{p+q} B^2)"}},
      .psd_stated = true,
      .map = [](const std::vector<double>& x) { return Params{{"p", x[0]}, {"q", x[1]}}; },
      .check =
          [](const Params& p) {
            require(within(p.get("p"), 0, 2) && within(p.get("q"), 0, 2), "p, q outside [0, 2]");
          },
      .exponent_load = [](const Params& p) { return p.get("p") + p.get("q") + 2; },
      .evaluate =
          [](const std::vector<LabInput>& in, const Params& p) {
            const LP& a = in[0].psd();
            const LM& b = in[1].m();
            const L pp = p.get("p"), q = p.get("q");
            return std::vector<LegValues>{pair(sv2(pw(a, pp / 2) * b * pw(a, q / 2)), sv2(pw(a, (pp + q) / 2) * b))};
          },
  });

  c.push_back({
      .id = "THM-3.3a",
      .statement = "s(A^t(A#_tB)B^{1-t}) <_log s(A^{3/2}BA^{-1/2}), 1/2 <= t <= 1, A, B > 0",
      .anchor = "strengthens Conjecture 1.1",
      .status = Status::theorem,
      .inputs = pd_ab,
      .coords = {{"t", 0.5, 1}},
      .domain = "1/2 <= t <= 1",
      .legs = {{"claim", Relation::log, "s(A^t(A#_tB)B^{1-t})", "s(A^{3/2}BA^{-1/2})"}},
      .map = t_box(0.5, 1),
      .check = t_check(0.5, 1),
      .exponent_load = load(4),
      .evaluate =
          [twisted](const std::vector<LabInput>& in, const Params& p) {
            const LP &a = in[0].psd(), &b = in[1].psd();
            return std::vector<LegValues>{
                pair(sv(twisted(a, b, p.get("t"))), sv(pw(a, 1.5L) * b.matrix() * pw(a, -0.5L)))};
          },
  });

  c.push_back({
      .id = "THM-3.3b",
      .statement = "s(A^t(A#_tB)B^{1-t}) <_log s(B^{3/2}AB^{-1/2}), 0 <= t <= 1/2, A, B > 0",
      .anchor = "strengthens Conjecture 1.1",
      .status = Status::theorem,
      .inputs = pd_ab,
      .coords = {{"t", 0, 0.5}},
      .domain = "0 <= t <= 1/2",
      .legs = {{"claim", Relation::log, "s(A^t(A#_tB)B^{1-t})", "s(B^{3/2}AB^{-1/2})"}},
      .map = t_box(0, 0.5),
      .check = t_check(0, 0.5),
      .exponent_load = load(4),
      .evaluate =
          [twisted](const std::vector<LabInput>& in, const Params& p) {
            const LP &a = in[0].psd(), &b = in[1].psd();
            return std::vector<LegValues>{
                pair(sv(twisted(a, b, p.get("t"))), sv(pw(b, 1.5L) * a.matrix() * pw(b, -0.5L)))};
          },
  });

  c.push_back({
      .id = "REM-3-CLOSE",
      .statement = "s(AB) <_log s(A^{3/2}BA^{-1/2}) and s(AB) <_log s(B^{3/2}AB^{-1/2}), A, B > 0",
      .anchor = "in view of Lemma 2.1",
      .status = Status::corollary,
      .inputs = pd_ab,
      .domain = "none",
      .legs = {{"A-side", Relation::log, "s(AB)", "s(A^{3/2}BA^{-1/2})"},
               {"B-side", Relation::log, "s(AB)", "s(B^{3/2}AB^{-1/2})"}},
      .map = no_params,
      .check = no_check,
      .exponent_load = load(3),
      .evaluate =
          [](const std::vector<LabInput>& in, const Params&) {
            const LP &a = in[0].psd(), &b = in[1].psd();
            const LV sab = sv(a.matrix() * b.matrix());
            return std::vector<LegValues>{pair(sab, sv(pw(a, 1.5L) * b.matrix() * pw(a, -0.5L))),
                                          pair(sab, sv(pw(b, 1.5L) * a.matrix() * pw(b, -0.5L)))};
          },
  });

  // Norm family. S = A + B + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}.
  auto cross = [](const LP& a, const LP& b) {
    const LM ra = pw(a, 0.5L), rb = pw(b, 0.5L);
    return LM(a.matrix() + b.matrix() + ra * rb + rb * ra);
  };
  auto infos_norm = [](std::string lhs, std::string rhs, std::vector<double> ps, bool gating = true) {
    return LegInfo{"schatten", Relation::norm_leq, std::move(lhs), std::move(rhs), gating, std::move(ps)};
  };

  c.push_back({
      .id = "BLY-11",
      .statement = "||A + B + 2(A#B)||_p <= ||A + B + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}||_p, 1 <= p <= inf",
      .anchor = "showed the following norm inequality",
      .status = Status::theorem,
      .inputs = psd_ab,
      .domain = "p in {1, 1.5, 2, 3, inf}",
      .legs = {infos_norm("A + B + 2(A#B)", "A + B + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}", kSchattenSpot),
               {"fan-exploratory", Relation::fan_dominance, "A + B + 2(A#B)", "A + B + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}",
                false}},
      .psd_stated = true,
      .map = no_params,
      .check = no_check,
      .exponent_load = load(2),
      .evaluate =
          [cross](const std::vector<LabInput>& in, const Params&) {
            const LP &a = in[0].psd(), &b = in[1].psd();
            const LV l = sv(a.matrix() + b.matrix() + 2 * gmean(a, b, 0.5L).matrix());
            const LV r = sv(cross(a, b));
            return std::vector<LegValues>{pair(l, r), pair(l, r)};
          },
  });

  c.push_back({
      .id = "PROP-4.1",
      .statement = "spectrum of [[A, B], [B, A]] = lambda(A + B) union lambda(A - B)",
      .anchor = "the union of the eigenvalues",
      .status = Status::proposition,
      .inputs = {{"A", InputClass::hermitian}, {"B", InputClass::hermitian}},
      .domain = "none",
      .legs = {{"claim", Relation::spectrum_union_equality, "lambda([[A, B], [B, A]])", "lambda(A + B) u lambda(A - B)"}},
      .map = no_params,
      .check = no_check,
      .exponent_load = load(1),
      .evaluate =
          [](const std::vector<LabInput>& in, const Params&) {
            const LM &a = in[0].m(), &b = in[1].m();
            const Index n = a.rows();
            LM block(2 * n, 2 * n);
            block << a, b, b, a;
            LV u = eig(a + b);
            const LV d = eig(a - b);
            u.insert(u.end(), d.begin(), d.end());
            std::sort(u.begin(), u.end(), std::greater<L>());
            return std::vector<LegValues>{pair(eig(block), u)};
          },
  });

  c.push_back({
      .id = "THM-4.1",
      .statement = "C >= A + B: s_j(C + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}) <= s_j(C + A#B + A##B) for every j",
      .anchor = "such that $C \\geq A + B$",
      .status = Status::theorem,
      .inputs = {{"A", InputClass::pd}, {"B", InputClass::pd}, {"D", InputClass::pd}},
      .domain = "C = A + B + D",
      .legs = {{"singular", Relation::singular_value_wise_leq, "s(C + A^{1/2}B^{1/2} + B^{1/2}A^{1/2})", "s(C + A#B + A##B)"},
               {"eigen", Relation::eigenvalue_wise_leq, "lambda(C + A^{1/2}B^{1/2} + B^{1/2}A^{1/2})",
                "lambda(C + A#B + A##B)"}},
      .map = no_params,
      .check = no_check,
      .exponent_load = load(2),
      .evaluate =
          [](const std::vector<LabInput>& in, const Params&) {
            const LP &a = in[0].psd(), &b = in[1].psd();
            const LM cm = a.matrix() + b.matrix() + in[2].psd().matrix();
            const LM ra = pw(a, 0.5L), rb = pw(b, 0.5L);
            const LM l = cm + ra * rb + rb * ra;
            const LM r = cm + gmean(a, b, 0.5L).matrix() + natnat(a, b).matrix();
            return std::vector<LegValues>{pair(sv(l), sv(r)), pair(eig(l), eig(r))};
          },
  });

  c.push_back({
      .id = "COR-4.1",
      .statement = "|||A + B + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}||| <= |||A + B + A#B + A##B||| for every unitarily invariant norm",
      .anchor = "a complement of inequality",
      .status = Status::corollary,
      .inputs = pd_ab,
      .domain = "Ky Fan k = 1..n; Schatten p in {1, 1.5, 2, 3, inf}",
      .legs = {{"fan", Relation::fan_dominance, "A + B + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}", "A + B + A#B + A##B"},
               infos_norm("A + B + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}", "A + B + A#B + A##B", kSchattenSpot)},
      .map = no_params,
      .check = no_check,
      .exponent_load = load(2),
      .evaluate =
          [cross](const std::vector<LabInput>& in, const Params&) {
            const LP &a = in[0].psd(), &b = in[1].psd();
            const LV l = sv(cross(a, b));
            const LV r = sv(a.matrix() + b.matrix() + gmean(a, b, 0.5L).matrix() + natnat(a, b).matrix());
            return std::vector<LegValues>{pair(l, r), pair(l, r)};
          },
  });

  auto thm42_eval = [](const std::vector<LabInput>& in, const Params&) {
    const LP &a = in[0].psd(), &b = in[1].psd();
    const LM nn = natnat(a, b).matrix();
    return std::vector<LegValues>{pair(sv(a.matrix() + b.matrix() + gmean(a, b, 0.5L).matrix() + nn),
                                       sv(a.matrix() + b.matrix() + 2 * nn))};
  };
  c.push_back({
      .id = "THM-4.2",
      .statement = "||A + B + A#B + A##B||_p <= ||A + B + 2(A##B)||_p, p = 1, 2",
      .anchor = "Then, for $p = 1, 2$",
      .status = Status::theorem,
      .inputs = pd_ab,
      .domain = "p in {1, 2}",
      .legs = {infos_norm("A + B + A#B + A##B", "A + B + 2(A##B)", {1.0, 2.0})},
      .map = no_params,
      .check = no_check,
      .exponent_load = load(2),
      .evaluate = thm42_eval,
  });

  c.push_back({
      .id = "CONJ-4.1",
      .statement = "||A + B + A#B + A##B||_p <= ||A + B + 2(A##B)||_p, 1 <= p <= inf",
      .anchor = "conclude the paper with the following",
      .status = Status::conjecture,
      .inputs = pd_ab,
      .domain = "p in {1, 1.5, 2, 3, inf}",
      .legs = {infos_norm("A + B + A#B + A##B", "A + B + 2(A##B)", kSchattenSpot)},
      .map = no_params,
      .check = no_check,
      .exponent_load = load(2),
      .evaluate = thm42_eval,
  });

  c.push_back({
      .id = "LEM-4.1",
      .statement = "lambda(A#B) <_log lambda(A##B)",
      .anchor = "is due to M. Lin",
      .status = Status::lemma,
      .inputs = pd_ab,
      .domain = "none",
      .legs = {{"claim", Relation::log, "lambda(A#B)", "lambda(A##B)"}},
      .map = no_params,
      .check = no_check,
      .exponent_load = load(2),
      .evaluate =
          [](const std::vector<LabInput>& in, const Params&) {
            const LP &a = in[0].psd(), &b = in[1].psd();
            return std::vector<LegValues>{
                pair(gmean(a, b, 0.5L).eigenvalues().vector(), natnat(a, b).eigenvalues().vector())};
          },
  });

  auto left_factor = [](bool use_b) {
    return [use_b](const std::vector<LabInput>& in, const Params&) {
      const LP &a = in[0].psd(), &b = in[1].psd();
      const LP& f = use_b ? b : a;
      return std::vector<LegValues>{pair(prod(f, gmean(a, b, 0.5L)), prod(f, natnat(a, b)))};
    };
  };
  c.push_back({
      .id = "LEM-4.2",
      .statement = "lambda(A(A#B)) <_log lambda(A(A##B))",
      .anchor = "Recalling first an inequality from",
      .status = Status::lemma,
      .inputs = pd_ab,
      .domain = "none",
      .legs = {{"claim", Relation::log, "lambda(A(A#B))", "lambda(A(A##B))"}},
      .map = no_params,
      .check = no_check,
      .exponent_load = load(3),
      .evaluate = left_factor(false),
  });

  c.push_back({
      .id = "REL-W",
      .statement = "lambda(A^{k/2}(A^{-1/2}BA^{-1/2})^tA^{k/2}) <_log lambda(A^{k-t}B^t) for 0 <= t <= 1, k >= t; "
                   "lambda(A^{k-t}B^t) <_log lambda(A^{k/2}(B^{1/2}A^{-1}B^{1/2})^tA^{k/2}) for k <= 2",
      .anchor = "which is a complement of",
      .status = Status::lemma,
      .inputs = pd_ab,
      .coords = {{"t", 0, 1}, {"u", 0, 1}, {"k2", 0, 2}},
      .domain = "t in [0, 1], k1 in [t, 3], k2 in [0, 2]",
      .legs = {{"furuta", Relation::log, "lambda(A^{k1/2}(A^{-1/2}BA^{-1/2})^tA^{k1/2})", "lambda(A^{k1-t}B^t)"},
               {"complement", Relation::log, "lambda(A^{k2-t}B^t)", "lambda(A^{k2/2}(B^{1/2}A^{-1}B^{1/2})^tA^{k2/2})"}},
      .map =
          [](const std::vector<double>& x) {
            const double t = x[0];
            return Params{{"t", t}, {"k1", lerp(t, 3, x[1])}, {"k2", x[2]}};
          },
      .check =
          [](const Params& p) {
            const double t = p.get("t");
            require(within(t, 0, 1), "t outside [0, 1]");
            require(within(p.get("k1"), t, 3), "k1 outside [t, 3]");
            require(within(p.get("k2"), 0, 2), "k2 outside [0, 2]");
          },
      .exponent_load = [](const Params& p) { return p.get("k1") + 3; },
      .evaluate =
          [](const std::vector<LabInput>& in, const Params& p) {
            const LP &a = in[0].psd(), &b = in[1].psd();
            const L t = p.get("t"), k1 = p.get("k1"), k2 = p.get("k2");
            const LM ir = pw(a, -0.5L);
            const LP x = LP::constructed(ir * b.matrix() * ir);
            const LM rb = pw(b, 0.5L);
            const LP y = LP::constructed(rb * pw(a, -1) * rb);
            const LP bt = pwp(b, t);
            return std::vector<LegValues>{
                pair(eig(pw(a, k1 / 2) * pw(x, t) * pw(a, k1 / 2)), prod(pwp(a, k1 - t), bt)),
                pair(prod(pwp(a, k2 - t), bt), eig(pw(a, k2 / 2) * pw(y, t) * pw(a, k2 / 2)))};
          },
  });

  c.push_back({
      .id = "LEM-4.3",
      .statement = "lambda(B(A#B)) <_log lambda(B(A##B))",
      .anchor = "By Schur's complement we know",
      .status = Status::lemma,
      .inputs = pd_ab,
      .domain = "none",
      .legs = {{"claim", Relation::log, "lambda(B(A#B))", "lambda(B(A##B))"}},
      .map = no_params,
      .check = no_check,
      .exponent_load = load(3),
      .evaluate = left_factor(true),
  });

  c.push_back({
      .id = "FINAL-CHAIN",
      .statement = "||A + B + 2(A#B)||_p <= ||A + B + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}||_p <= ||A + B + 2(A##B)||_p",
      .anchor = "the validation of the previous conjecture",
      .status = Status::conditional,
      .inputs = pd_ab,
      .domain = "p in {1, 1.5, 2, 3, inf}; the second leg depends on the open norm conjecture",
      .legs = {infos_norm("A + B + 2(A#B)", "A + B + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}", kSchattenSpot),
               {"conditional", Relation::norm_leq, "A + B + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}", "A + B + 2(A##B)", false,
                kSchattenSpot}},
      .map = no_params,
      .check = no_check,
      .exponent_load = load(2),
      .evaluate =
          [cross](const std::vector<LabInput>& in, const Params&) {
            const LP &a = in[0].psd(), &b = in[1].psd();
            const LV mid = sv(cross(a, b));
            return std::vector<LegValues>{pair(sv(a.matrix() + b.matrix() + 2 * gmean(a, b, 0.5L).matrix()), mid),
                                          pair(mid, sv(a.matrix() + b.matrix() + 2 * natnat(a, b).matrix()))};
          },
  });

  return c;
}

}  // namespace logmaj
