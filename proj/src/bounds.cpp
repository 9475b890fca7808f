#include "cubicrank/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <tuple>

#include "cubicrank/rng.hpp"

namespace cubicrank {

Json schedule_to_json(const SubstSchedule& s) {
  Json j;
  j["steps"] = Json::array();
  for (const SubstStep& st : s.steps) {
    Json step;
    step["mode"] = st.mode;
    step["index"] = st.index;
    j["steps"].push_back(step);
  }
  return j;
}

SubstSchedule schedule_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("steps") || !j.at("steps").is_array())
    throw SchemaError("schedule needs a \"steps\" array");
  SubstSchedule s;
  for (auto& step : j.at("steps")) {
    if (!step.contains("mode") || !step.at("mode").is_number_integer() ||
        !step.contains("index") || !step.at("index").is_number_integer())
      throw SchemaError("schedule step needs integer \"mode\" and \"index\"");
    SubstStep st{step.at("mode").get<int>(), step.at("index").get<int>()};
    if (st.mode < 1 || st.mode > 3 || st.index < 0)
      throw SchemaError("schedule step out of range");
    s.steps.push_back(st);
  }
  return s;
}

Json bound_report_to_json(const BoundReport& r) {
  Json j;
  j["lower"] = r.lower;
  if (r.upper)
    j["upper"] = *r.upper;
  else
    j["upper"] = nullptr;
  j["field"] = r.field == BoundField::Complex ? "complex" : "real";
  j["certificates"] = Json::array();
  for (const Json& c : r.certificates) j["certificates"].push_back(c);
  return j;
}

int unfolding_rank(const GeneralTensor& t, int mode) {
  auto [d1, d2, d3] = t.dims;
  ExactMatrix m;
  if (mode == 1) {
    m = ExactMatrix(d1, d2 * d3);
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d2; ++j)
        for (int k = 0; k < d3; ++k) m.at(i, j * d3 + k) = t.at(i, j, k);
  } else if (mode == 2) {
    m = ExactMatrix(d2, d1 * d3);
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d2; ++j)
        for (int k = 0; k < d3; ++k) m.at(j, i * d3 + k) = t.at(i, j, k);
  } else if (mode == 3) {
    m = ExactMatrix(d3, d1 * d2);
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d2; ++j)
        for (int k = 0; k < d3; ++k) m.at(k, i * d2 + j) = t.at(i, j, k);
  } else {
    throw std::invalid_argument("mode must be 1, 2 or 3");
  }
  return rank_exact(m);
}

int flattening_lower_bound(const GeneralTensor& t) {
  int r = 0;
  for (int m = 1; m <= 3; ++m) r = std::max(r, unfolding_rank(t, m));
  return r;
}

// ------------------------------------------------- symbolic schedule runner

namespace {

struct PolyTensor {
  std::array<int, 3> dims{0, 0, 0};
  std::vector<FPoly> a;

  PolyTensor(int n1, int n2, int n3, int nl)
      : dims{n1, n2, n3}, a((size_t)n1 * n2 * n3, FPoly(nl)) {}
  FPoly& at(int i, int j, int k) {
    return a[((size_t)i * dims[1] + j) * dims[2] + k];
  }
  const FPoly& at(int i, int j, int k) const {
    return a[((size_t)i * dims[1] + j) * dims[2] + k];
  }
};

// a removed slice, recorded against original indices of the other two modes
// so slices of the same mode stay comparable across later removals
using SliceRecord = std::map<std::tuple<int, int, Exp>, FieldElement>;

SliceRecord record_slice(const PolyTensor& t, int mode, int idx,
                         const std::array<std::vector<int>, 3>& alive) {
  SliceRecord rec;
  auto [d1, d2, d3] = t.dims;
  auto add = [&](int oa, int ob, const FPoly& p) {
    for (const auto& [e, c] : p.t) rec[{oa, ob, e}] = c;
  };
  if (mode == 1)
    for (int j = 0; j < d2; ++j)
      for (int k = 0; k < d3; ++k) add(alive[1][j], alive[2][k], t.at(idx, j, k));
  else if (mode == 2)
    for (int i = 0; i < d1; ++i)
      for (int k = 0; k < d3; ++k) add(alive[0][i], alive[2][k], t.at(i, idx, k));
  else
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d2; ++j) add(alive[0][i], alive[1][j], t.at(i, j, idx));
  return rec;
}

bool independent_of(const std::vector<SliceRecord>& prev,
                    const SliceRecord& cur) {
  std::vector<std::tuple<int, int, Exp>> keys;
  for (const auto& r : prev)
    for (const auto& [k, v] : r) keys.push_back(k);
  for (const auto& [k, v] : cur) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  ExactMatrix m((int)prev.size() + 1, (int)keys.size());
  auto fill = [&](int row, const SliceRecord& r) {
    for (const auto& [k, v] : r) {
      auto it = std::lower_bound(keys.begin(), keys.end(), k);
      m.at(row, (int)(it - keys.begin())) = v;
    }
  };
  for (size_t i = 0; i < prev.size(); ++i) fill((int)i, prev[i]);
  fill((int)prev.size(), cur);
  return rank_exact(m) == (int)prev.size() + 1;
}

struct ReductionResult {
  FPoly final_det;
  int removals = 0;
  int final_size = 0;
  int nl = 0;
};

ReductionResult run_symbolic(const GeneralTensor& t, const SubstSchedule& s) {
  auto [d1, d2, d3] = t.dims;
  // first pass: count lambda variables and validate shapes
  std::array<int, 3> cur{d1, d2, d3};
  int nl = 0;
  for (size_t k = 0; k < s.steps.size(); ++k) {
    const SubstStep& st = s.steps[k];
    std::string where = "substitution schedule step " + std::to_string(k + 1);
    if (st.mode < 1 || st.mode > 3)
      throw std::invalid_argument(where + ": mode out of range");
    int& d = cur[st.mode - 1];
    if (d < 2) throw std::invalid_argument(where + ": mode already exhausted");
    if (st.index < 0 || st.index >= d)
      throw std::invalid_argument(where + ": slice index out of range");
    nl += d - 1;
    --d;
  }
  PolyTensor pt(d1, d2, d3, nl);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j)
      for (int k = 0; k < d3; ++k)
        if (!t.at(i, j, k).is_zero())
          pt.at(i, j, k).add_term(Exp(nl, 0), t.at(i, j, k));
  std::array<std::vector<int>, 3> alive;
  for (int m = 0; m < 3; ++m)
    for (int i = 0; i < pt.dims[m]; ++i) alive[m].push_back(i);
  std::array<std::vector<SliceRecord>, 3> removed;
  int base = 0;
  for (size_t k = 0; k < s.steps.size(); ++k) {
    const SubstStep& st = s.steps[k];
    std::string where = "substitution schedule step " + std::to_string(k + 1);
    int m = st.mode - 1, idx = st.index;
    SliceRecord rec = record_slice(pt, st.mode, idx, alive);
    if (rec.empty()) throw std::invalid_argument(where + ": zero slice");
    if (!independent_of(removed[m], rec))
      throw std::invalid_argument(
          where + ": slice depends on earlier removals of this mode");
    removed[m].push_back(std::move(rec));
    auto nd = pt.dims;
    --nd[m];
    PolyTensor np(nd[0], nd[1], nd[2], nl);
    for (int a = 0; a < nd[m]; ++a) {
      int ka = a < idx ? a : a + 1;
      FPoly lam(nl);
      Exp e(nl, 0);
      e[base + a] = 1;
      lam.add_term(e, FieldElement(1));
      auto combine = [&](const FPoly& kept, const FPoly& rem) {
        return kept - lam * rem;
      };
      if (m == 0)
        for (int j = 0; j < nd[1]; ++j)
          for (int c = 0; c < nd[2]; ++c)
            np.at(a, j, c) = combine(pt.at(ka, j, c), pt.at(idx, j, c));
      else if (m == 1)
        for (int i = 0; i < nd[0]; ++i)
          for (int c = 0; c < nd[2]; ++c)
            np.at(i, a, c) = combine(pt.at(i, ka, c), pt.at(i, idx, c));
      else
        for (int i = 0; i < nd[0]; ++i)
          for (int j = 0; j < nd[1]; ++j)
            np.at(i, j, a) = combine(pt.at(i, j, ka), pt.at(i, j, idx));
    }
    base += pt.dims[m] - 1;
    alive[m].erase(alive[m].begin() + idx);
    pt = std::move(np);
  }
  int done = -1;
  for (int m = 0; m < 3 && done < 0; ++m)
    if (pt.dims[m] == 1) done = m;
  if (done < 0)
    throw std::invalid_argument(
        "substitution schedule leaves no mode of size one");
  int r = pt.dims[done == 0 ? 1 : 0], c = pt.dims[done == 2 ? 1 : 2];
  if (r != c)
    throw std::invalid_argument("final substitution slice is not square");
  ExactMatrix slice = ExactMatrix::poly(r, c, nl);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      slice.pat(i, j) = done == 0   ? pt.at(0, i, j)
                        : done == 1 ? pt.at(i, 0, j)
                                    : pt.at(i, j, 0);
  ReductionResult res;
  res.final_det = det_poly(slice);
  res.removals = (int)s.steps.size();
  res.final_size = r;
  res.nl = nl;
  return res;
}

Json final_det_json(const FPoly& det) {
  try {
    return qpoly_to_json(to_qpoly(det));
  } catch (const FieldMismatch&) {
    return det.str();
  }
}

}  // namespace

std::optional<BoundReport> subst_lower_bound(const GeneralTensor& t,
                                             const SubstSchedule& s) {
  ReductionResult res = run_symbolic(t, s);
  if (res.final_det.is_zero() || res.final_det.degree() > 0)
    return std::nullopt;  // determinant vanishes somewhere over C
  BoundReport rep;
  rep.lower = res.removals + res.final_size;
  rep.field = BoundField::Complex;
  Json cert;
  cert["kind"] = "substitution";
  cert["schedule"] = schedule_to_json(s);
  cert["removals"] = res.removals;
  cert["final_size"] = res.final_size;
  cert["final_det"] = final_det_json(res.final_det);
  rep.certificates.push_back(std::move(cert));
  return rep;
}

BoundReport subst_schedule_search(const GeneralTensor& t, int per_mode_cap,
                                  bool parallel) {
  int best_mode = 1, fl = 0;
  for (int m = 1; m <= 3; ++m) {
    int r = unfolding_rank(t, m);
    if (r > fl) {
      fl = r;
      best_mode = m;
    }
  }
  // candidate schedules: reduce one mode to a single slice, trying every
  // removal order (indices are positions in the shrinking tensor)
  std::vector<SubstSchedule> candidates;
  for (int mode = 1; mode <= 3; ++mode) {
    int d = t.dims[mode - 1];
    if (d - 1 > per_mode_cap || d < 1) continue;
    if (d == 1) {
      candidates.push_back({});
      continue;
    }
    std::vector<int> order(d);
    for (int i = 0; i < d; ++i) order[i] = i;
    // all ordered selections of d-1 original slices, lexicographic
    std::vector<int> stack;
    std::vector<bool> used(d, false);
    std::function<void()> rec = [&]() {
      if ((int)stack.size() == d - 1) {
        SubstSchedule s;
        std::vector<int> aliveIds(order);
        for (int orig : stack) {
          int pos = (int)(std::find(aliveIds.begin(), aliveIds.end(), orig) -
                          aliveIds.begin());
          s.steps.push_back({mode, pos});
          aliveIds.erase(aliveIds.begin() + pos);
        }
        candidates.push_back(std::move(s));
        return;
      }
      for (int v = 0; v < d; ++v)
        if (!used[v]) {
          used[v] = true;
          stack.push_back(v);
          rec();
          stack.pop_back();
          used[v] = false;
        }
    };
    rec();
  }
  std::vector<std::optional<BoundReport>> results(candidates.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < (long)candidates.size(); ++i) {
    try {
      results[i] = subst_lower_bound(t, candidates[i]);
    } catch (const std::invalid_argument&) {
      results[i] = std::nullopt;
    }
  }
  // deterministic merge: enumeration order is lexicographic per mode, so the
  // first maximum is the canonical winner
  int best = -1;
  long best_i = -1;
  for (long i = 0; i < (long)results.size(); ++i)
    if (results[i] && results[i]->lower > best) {
      best = results[i]->lower;
      best_i = i;
    }
  BoundReport rep;
  rep.field = BoundField::Complex;
  rep.lower = std::max(fl, best);
  Json fcert;
  fcert["kind"] = "flattening";
  fcert["rank"] = fl;
  fcert["mode"] = best_mode;
  rep.certificates.push_back(std::move(fcert));
  if (best_i >= 0)
    for (const Json& c : results[best_i]->certificates)
      rep.certificates.push_back(c);
  return rep;
}

namespace {

bool is_real(const FieldElement& x) {
  switch (x.tag()) {
    case FieldElement::Tag::Rational:
      return true;
    case FieldElement::Tag::Quadratic:
      return x.quad_d() > 0;
    default:
      return x.to_complex().imag() == 0.0;
  }
}

}  // namespace

GeneralTensor real_subst_reduce(const GeneralTensor& t, int mode, int index,
                                const std::vector<FieldElement>& lambda) {
  if (mode < 1 || mode > 3)
    throw std::invalid_argument("mode must be 1, 2 or 3");
  int m = mode - 1, d = t.dims[m];
  if (d < 2) throw std::invalid_argument("mode has no slice to remove");
  if (index < 0 || index >= d)
    throw std::invalid_argument("slice index out of range");
  if ((int)lambda.size() != d - 1)
    throw std::invalid_argument("lambda must have one entry per kept slice");
  for (const FieldElement& x : t.a)
    if (!is_real(x))
      throw std::invalid_argument("real substitution needs a real tensor");
  for (const FieldElement& x : lambda)
    if (!is_real(x))
      throw std::invalid_argument("real substitution needs real multipliers");
  bool zero = true;
  auto [d1, d2, d3] = t.dims;
  for (int i = 0; i < d1 && zero; ++i)
    for (int j = 0; j < d2 && zero; ++j)
      for (int k = 0; k < d3 && zero; ++k) {
        bool in_slice = (m == 0 && i == index) || (m == 1 && j == index) ||
                        (m == 2 && k == index);
        if (in_slice && !t.at(i, j, k).is_zero()) zero = false;
      }
  if (zero) throw std::domain_error("removed slice is zero");
  auto nd = t.dims;
  --nd[m];
  GeneralTensor out(nd[0], nd[1], nd[2]);
  for (int a = 0; a < nd[m]; ++a) {
    int ka = a < index ? a : a + 1;
    if (m == 0)
      for (int j = 0; j < nd[1]; ++j)
        for (int k = 0; k < nd[2]; ++k)
          out.at(a, j, k) = t.at(ka, j, k) - lambda[a] * t.at(index, j, k);
    else if (m == 1)
      for (int i = 0; i < nd[0]; ++i)
        for (int k = 0; k < nd[2]; ++k)
          out.at(i, a, k) = t.at(i, ka, k) - lambda[a] * t.at(i, index, k);
    else
      for (int i = 0; i < nd[0]; ++i)
        for (int j = 0; j < nd[1]; ++j)
          out.at(i, j, a) = t.at(i, j, ka) - lambda[a] * t.at(i, j, index);
  }
  return out;
}

// ----------------------------------------------------------------- SOS

Json sos_to_json(const SosCertificate& c) {
  Json j;
  j["target"] = qpoly_to_json(c.target);
  j["squares"] = Json::array();
  for (const QPoly& q : c.squares) j["squares"].push_back(qpoly_to_json(q));
  Json k;
  k["num"] = c.constant.get_num().get_str();
  k["den"] = c.constant.get_den().get_str();
  j["constant"] = std::move(k);
  return j;
}

SosCertificate sos_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("target") || !j.contains("squares") ||
      !j.at("squares").is_array() || !j.contains("constant"))
    throw SchemaError("SOS certificate needs target, squares and constant");
  SosCertificate c;
  c.target = qpoly_from_json(j.at("target"));
  for (auto& q : j.at("squares")) c.squares.push_back(qpoly_from_json(q));
  const Json& k = j.at("constant");
  if (!k.is_object() || !k.contains("num") || !k.at("num").is_string())
    throw SchemaError("SOS constant needs a \"num\" string");
  std::string den = k.contains("den") ? k.at("den").get<std::string>() : "1";
  try {
    c.constant = rat_from_strings(k.at("num").get<std::string>(), den);
  } catch (const std::invalid_argument&) {
    throw SchemaError("SOS constant is not rational");
  }
  if (c.constant < 0) throw SchemaError("SOS constant must be nonnegative");
  return c;
}

namespace {

std::string monomial_str(const Exp& e) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

SosCheck verify_sos(const SosCertificate& c) {
  int nv = c.target.nv;
  for (const QPoly& q : c.squares) nv = std::max(nv, q.nv);
  QPoly diff = c.target.extend_vars(nv);
  for (const QPoly& q : c.squares) {
    QPoly qe = q.extend_vars(nv);
    diff = diff - qe * qe;
  }
  if (c.constant != 0) {
    QPoly k(nv);
    k.add_term(Exp(nv, 0), c.constant);
    diff = diff - k;
  }
  SosCheck out;
  if (diff.is_zero()) {
    out.ok = true;
    return out;
  }
  out.first_diff = monomial_str(diff.t.begin()->first);
  return out;
}

// ---------------------------------------------------------------- ladder

namespace {

const InvariantData& aronhold_cached() {
  static const InvariantData inv = load_aronhold();
  return inv;
}

const InvariantData& salmon_cached() {
  static const InvariantData inv = load_salmon();
  return inv;
}

Json stage_cert(const std::string& stage, int level) {
  Json c;
  c["kind"] = "border-ladder";
  c["stage"] = stage;
  c["level"] = level;
  return c;
}

}  // namespace

BoundReport border_rank_ladder(const CubicForm& f, std::uint64_t seed,
                               int trials, bool parallel) {
  BoundReport rep;
  rep.field = BoundField::Complex;
  int fr = flattening_rank(f);
  if (fr <= 2) {
    // flattening minors settle levels 0, 1, 2 exactly
    rep.lower = rep.upper.emplace(fr);
    rep.certificates.push_back(stage_cert("flattening-minors", fr));
    return rep;
  }
  if (fr == 3) {
    CubicForm core = f.n == 3 ? f : compress_cone(f).form;
    if (core.n != 3)
      throw std::logic_error("flattening-3 compression must give 3 variables");
    Rat ar = aronhold_eval(aronhold_cached(), core);
    int level = ar == 0 ? 3 : 4;
    Json cert = stage_cert("core-aronhold", level);
    cert["aronhold"] = ar.get_str();
    try {
      bool st = strassen_brank3_test(embed_general(core), seed);
      if (st != (ar == 0))
        throw std::logic_error("Aronhold and Strassen certificates disagree");
      cert["strassen_commutes"] = st;
    } catch (const std::domain_error&) {
      cert["strassen_commutes"] = "degenerate";
    }
    rep.lower = rep.upper.emplace(level);
    rep.certificates.push_back(std::move(cert));
    return rep;
  }
  if (f.n == 4) {  // fr == 4
    MembershipReport mem =
        sigma4_membership(f, salmon_cached(), seed, trials, parallel);
    int level = mem.member ? 4 : 5;
    Json cert = stage_cert("sigma4-membership", level);
    cert["member"] = mem.member;
    cert["trials"] = mem.trials;
    cert["seed"] = seed;
    if (!mem.member) cert["witness_trial"] = mem.witness_trial;
    rep.lower = rep.upper.emplace(level);
    rep.certificates.push_back(std::move(cert));
    return rep;
  }
  // n > 4 with flattening rank >= 4: only the partial ladder applies
  rep.lower = fr;
  Json cert;
  cert["kind"] = "flattening";
  cert["rank"] = fr;
  cert["note"] = "ladder stages beyond flattening need n <= 4";
  rep.certificates.push_back(std::move(cert));
  return rep;
}

ComonVerdict comon_verdict(const CubicForm& f, const Decomposition& d) {
  if (d.kind != DecompKind::SymmetricPowers)
    throw std::invalid_argument(
        "comon verdict needs a symmetric-powers decomposition");
  d.validate();
  for (const DecompTerm& t : d.terms) {
    if (!t.coef.exact())
      throw std::invalid_argument("certificate coefficients must be exact");
    for (const auto& v : t.vectors)
      for (const FieldElement& x : v)
        if (!x.exact())
          throw std::invalid_argument("certificate vectors must be exact");
  }
  if (!(evaluate_powers(d) == f))
    throw std::invalid_argument("certificate does not reproduce the form");
  ComonVerdict v;
  v.sym_ub = d.length();
  v.flattening = flattening_rank(f);
  v.coincide = v.sym_ub <= v.flattening + 2;
  v.reasoning =
      v.coincide
          ? "verified symmetric rank bound " + std::to_string(v.sym_ub) +
                " <= flattening rank " + std::to_string(v.flattening) +
                " + 2, so rank and symmetric rank coincide"
          : "bound " + std::to_string(v.sym_ub) + " exceeds flattening rank " +
                std::to_string(v.flattening) + " + 2: undetermined by Friedland";
  return v;
}

RealInfimumReport real_det_infimum(const GeneralTensor& t,
                                   const SubstSchedule& s, std::uint64_t seed,
                                   int restarts) {
  ReductionResult res = run_symbolic(t, s);
  struct Term {
    double c;
    Exp e;
  };
  std::vector<Term> terms;
  for (const auto& [e, c] : res.final_det.t)
    terms.push_back({c.to_complex().real(), e});
  auto eval = [&](const std::vector<double>& x) {
    double v = 0;
    for (const Term& tm : terms) {
      double m = tm.c;
      for (int i = 0; i < res.nl; ++i)
        for (int p = 0; p < tm.e[i]; ++p) m *= x[i];
      v += m;
    }
    return std::fabs(v);
  };
  RealInfimumReport rep;
  rep.restarts = restarts;
  if (res.nl == 0) {
    rep.infimum = eval({});
    return rep;
  }
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    Rng rng(seed, "infimum-start-" + std::to_string(r));
    std::vector<double> x(res.nl);
    for (double& xi : x) xi = (double)rng.int_in(-2000, 2000) / 1000.0;
    double cur = eval(x), step = 0.5;
    for (int iter = 0; iter < 400 && step > 1e-9; ++iter) {
      bool improved = false;
      for (int i = 0; i < res.nl; ++i) {
        for (double delta : {step, -step}) {
          x[i] += delta;
          double v = eval(x);
          if (v < cur) {
            cur = v;
            improved = true;
          } else {
            x[i] -= delta;
          }
        }
      }
      if (!improved) step *= 0.6;
    }
    best = std::min(best, cur);
  }
  rep.infimum = best;
  return rep;
}

}  // namespace cubicrank
