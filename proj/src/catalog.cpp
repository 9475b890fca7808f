#include "cubicrank/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include "cubicrank/bounds.hpp"
#include "cubicrank/decompose.hpp"
#include "cubicrank/invariants.hpp"

namespace cubicrank {

namespace {

// ---------------------------------------------------------------- builders

CubicForm mk_form(int n, const std::vector<std::pair<Exp, Rat>>& terms) {
  FPoly p(n);
  for (auto& [e, c] : terms) p.add_term(e, FieldElement(c));
  return CubicForm(p);
}

FieldElement fe(long num, long den = 1) { return FieldElement(ratio(num, den)); }

// i / sqrt(3): the square is -1/3
FieldElement om() { return FieldElement::quad(0, ratio(1, 3), -3); }

Decomposition powers(
    int n, const std::string& field,
    const std::vector<std::pair<FieldElement, std::vector<FieldElement>>>& t) {
  Decomposition d;
  d.kind = DecompKind::SymmetricPowers;
  d.n = n;
  d.field = field;
  for (auto& [c, v] : t) {
    DecompTerm tm;
    tm.coef = c;
    tm.vectors = {v};
    d.terms.push_back(tm);
  }
  d.validate();
  return d;
}

Json dec_cert(const std::string& id, const Decomposition& d) {
  Json c;
  c["id"] = id;
  c["type"] = "decomposition";
  c["length"] = d.length();
  c["exact"] = true;
  c["decomposition"] = decomposition_to_json(d);
  return c;
}

Json flat_cert(int value) {
  Json c;
  c["id"] = "flattening";
  c["type"] = "flattening";
  c["value"] = value;
  return c;
}

Json ladder_cert(int level, bool exact) {
  Json c;
  c["id"] = "ladder";
  c["type"] = "border-ladder";
  c["level"] = level;
  c["exact"] = exact;
  c["seed"] = 1;
  c["trials"] = 24;
  return c;
}

Json const_qpoly(int nv, const std::string& num, const std::string& den) {
  Json t;
  t["exp"] = Json::array();
  for (int i = 0; i < nv; i++) t["exp"].push_back(0);
  t["num"] = num;
  t["den"] = den;
  Json j;
  j["nv"] = nv;
  j["terms"] = Json::array({t});
  return j;
}

Json subst_cert(int bound, const Json& final_det) {
  SubstSchedule s{{{1, 1}, {1, 1}, {1, 1}}};
  Json c;
  c["id"] = "substitution";
  c["type"] = "substitution";
  c["bound"] = bound;
  c["schedule"] = schedule_to_json(s);
  c["final_det"] = final_det;
  return c;
}

Json hyperdet_cert(const std::vector<int>& vars, const CubicForm& binary,
                   const Rat& value) {
  Json c;
  c["id"] = "block-hyperdet";
  c["type"] = "hyperdet";
  c["vars"] = vars;
  c["binary"] = form_to_json(binary);
  c["value"]["num"] = value.get_num().get_str();
  c["value"]["den"] = value.get_den().get_str();
  c["sign"] = value > 0 ? 1 : value < 0 ? -1 : 0;
  return c;
}

Json binrank_cert(const std::vector<int>& vars, const CubicForm& binary,
                  int crank, int rrank, const std::string& id = "block-rank") {
  Json c;
  c["id"] = id;
  c["type"] = "binary-rank";
  c["vars"] = vars;
  c["binary"] = form_to_json(binary);
  c["rank"] = crank;
  c["real_rank"] = rrank;
  return c;
}

Json sos_cert(const std::string& id, const SosCertificate& sc, bool positive,
              const std::string& role) {
  Json c;
  c["id"] = id;
  c["type"] = "sos";
  c["positive"] = positive;
  c["role"] = role;
  c["certificate"] = sos_to_json(sc);
  return c;
}

Json comon_cert(const std::string& dec_id) {
  Json c;
  c["id"] = "comon";
  c["type"] = "comon";
  c["decomposition_id"] = dec_id;
  c["coincide"] = true;
  return c;
}

Json genericity_cert(bool vanishes, int dim, int degree, bool distinct) {
  Json c;
  c["id"] = "genericity";
  c["type"] = "genericity";
  c["seed"] = 1;
  c["vanishes"] = vanishes;
  c["dim"] = dim;
  c["degree"] = degree;
  c["distinct"] = distinct;
  c["generic"] = false;
  return c;
}

Json nonsingular_cert() {
  Json c;
  c["id"] = "non-singular";
  c["type"] = "non-singular";
  return c;
}

Json piece_cert(const std::vector<std::pair<std::string, Rat>>& pieces) {
  Json c;
  c["id"] = "pieces";
  c["type"] = "piece-sum";
  c["pieces"] = Json::array();
  for (auto& [id, r] : pieces) {
    Json p;
    p["id"] = id;
    p["num"] = r.get_num().get_str();
    p["den"] = r.get_den().get_str();
    c["pieces"].push_back(p);
  }
  return c;
}

CatalogClaim CL(const std::string& kind, const std::string& field, int lo,
                std::optional<int> up, const std::string& lt,
                const std::string& ut, std::vector<std::string> ev,
                const std::string& note, int ev_restarts = 8,
                int ev_iters = 600) {
  CatalogClaim c;
  c.kind = kind;
  c.field = field;
  c.lower = lo;
  c.upper = up;
  c.lower_tag = lt;
  c.upper_tag = ut;
  c.evidence = std::move(ev);
  c.note = note;
  c.evidence_restarts = ev_restarts;
  c.evidence_iters = ev_iters;
  return c;
}

// x*y^2 in the two listed slots of an n-variable form
Decomposition xyy_triple(int n, int x, int y, const std::string& field = "Q") {
  auto vec = [&](long cx, long cy) {
    std::vector<FieldElement> v(n, fe(0));
    v[x] = fe(cx);
    v[y] = fe(cy);
    return v;
  };
  return powers(n, field,
                {{fe(1, 6), vec(1, 1)}, {fe(1, 6), vec(1, -1)}, {fe(-1, 3), vec(1, 0)}});
}

// x^2*y = ((x+y)^3 - (x-y)^3 - 2 y^3) / 6 in the two listed slots
Decomposition xxy_triple(int n, int x, int y) {
  auto vec = [&](long cx, long cy) {
    std::vector<FieldElement> v(n, fe(0));
    v[x] = fe(cx);
    v[y] = fe(cy);
    return v;
  };
  return powers(n, "Q",
                {{fe(1, 6), vec(1, 1)}, {fe(-1, 6), vec(1, -1)}, {fe(-1, 3), vec(0, 1)}});
}

// x^3 - x*y^2 over Q(sqrt -3): (1/2)(x + i y/sqrt 3)^3 + (1/2)(x - i y/sqrt 3)^3
std::vector<std::pair<FieldElement, std::vector<FieldElement>>> cube_pair(
    int n, int x, int y) {
  std::vector<FieldElement> a(n, fe(0)), b(n, fe(0));
  a[x] = fe(1);
  a[y] = om();
  b[x] = fe(1);
  b[y] = FieldElement(fe(0)) - om();
  return {{fe(1, 2), a}, {fe(1, 2), b}};
}

// x^3 - x*y^2 over Q: -(1/6)(x+y)^3 - (1/6)(x-y)^3 + (4/3) x^3
std::vector<std::pair<FieldElement, std::vector<FieldElement>>> real_pair(
    int n, int x, int y) {
  auto vec = [&](long cx, long cy) {
    std::vector<FieldElement> v(n, fe(0));
    v[x] = fe(cx);
    v[y] = fe(cy);
    return v;
  };
  return {{fe(-1, 6), vec(1, 1)}, {fe(-1, 6), vec(1, -1)}, {fe(4, 3), vec(1, 0)}};
}

std::vector<FieldElement> vec4(const std::vector<Rat>& c) {
  std::vector<FieldElement> v;
  for (auto& r : c) v.push_back(FieldElement(r));
  return v;
}

// --------------------------------------------------- the built-in entries

CatalogEntry fermat_entry() {
  CatalogEntry e;
  e.id = "fermat";
  e.title = "x1^3 + x2^3 + x3^3 + x4^3";
  e.form = mk_form(4, {{{3, 0, 0, 0}, 1}, {{0, 3, 0, 0}, 1}, {{0, 0, 3, 0}, 1}, {{0, 0, 0, 3}, 1}});
  std::vector<std::pair<FieldElement, std::vector<FieldElement>>> t;
  for (int i = 0; i < 4; i++) {
    std::vector<FieldElement> v(4, fe(0));
    v[i] = fe(1);
    t.push_back({fe(1), v});
  }
  e.certificates = {flat_cert(4), dec_cert("four-cubes", powers(4, "Q", t)),
                    ladder_cert(4, true),
                    comon_cert("four-cubes"),
                    genericity_cert(false, 1, 6, false)};
  std::string note = "diagonal form; flattening meets the four-cube decomposition";
  for (std::string fld : {"C", "R"}) {
    e.claims.push_back(CL("rank", fld, 4, 4, "certified", "certified",
                          {"flattening", "four-cubes", "comon"}, note));
    e.claims.push_back(CL("symmetric-rank", fld, 4, 4, "certified", "certified",
                          {"flattening", "four-cubes"}, note));
    e.claims.push_back(CL("border-rank", fld, 4, 4, "certified", "certified",
                          {"flattening", "four-cubes"}, note));
    e.claims.push_back(CL("symmetric-border-rank", fld, 4, 4, "certified",
                          "certified", {"flattening", "four-cubes"}, note));
  }
  e.notes = {"the Hessian surface x1 x2 x3 x4 = 0 has singular lines, so the"
             " genericity test reports a positive-dimensional singular locus"};
  return e;
}

CatalogEntry x1sqx2_entry() {
  CatalogEntry e;
  e.id = "x1sq-x2";
  e.title = "x1^2 x2";
  e.form = mk_form(4, {{{2, 1, 0, 0}, 1}});
  CubicForm bin = mk_form(2, {{{2, 1}, 1}});
  e.certificates = {flat_cert(2), ladder_cert(2, true),
                    dec_cert("three-cubes", xxy_triple(4, 0, 1)),
                    binrank_cert({0, 1}, bin, 3, 3),
                    hyperdet_cert({0, 1}, bin, Rat(0))};
  std::string rn = "binary cubic with a repeated root that is not a perfect"
                   " cube: rank three over both fields";
  for (std::string fld : {"C", "R"}) {
    e.claims.push_back(CL("rank", fld, 3, 3, "certified", "certified",
                          {"block-rank", "three-cubes"}, rn));
    e.claims.push_back(CL("symmetric-rank", fld, 3, 3, "certified", "certified",
                          {"block-rank", "three-cubes"}, rn));
  }
  e.claims.push_back(CL("border-rank", "C", 2, 2, "certified", "certified",
                        {"flattening", "ladder"},
                        "flattening matches the exact low-level ladder"));
  e.claims.push_back(CL("symmetric-border-rank", "C", 2, 2, "certified",
                        "certified", {"flattening", "ladder"},
                        "flattening matches the exact low-level ladder"));
  e.notes = {"smallest rank/border-rank gap: border rank two, rank three"};
  return e;
}

CatalogEntry x3cube_entry() {
  CatalogEntry e;
  e.id = "x3-cube";
  e.title = "x3^3";
  e.form = mk_form(4, {{{0, 0, 3, 0}, 1}});
  std::vector<FieldElement> v(4, fe(0));
  v[2] = fe(1);
  e.certificates = {flat_cert(1),
                    dec_cert("one-cube", powers(4, "Q", {{fe(1), v}})),
                    ladder_cert(1, true)};
  for (std::string fld : {"C", "R"}) {
    for (std::string k : {"rank", "symmetric-rank", "border-rank",
                          "symmetric-border-rank"})
      e.claims.push_back(CL(k, fld, 1, 1, "certified", "certified",
                            {"flattening", "one-cube"}, "a single cube"));
  }
  return e;
}

CatalogEntry x3x4sq_entry() {
  CatalogEntry e;
  e.id = "x3-x4sq";
  e.title = "x3 x4^2";
  e.form = mk_form(4, {{{0, 0, 1, 2}, 1}});
  CubicForm bin = mk_form(2, {{{1, 2}, 1}});
  e.certificates = {flat_cert(2), ladder_cert(2, true),
                    dec_cert("three-cubes", xyy_triple(4, 2, 3)),
                    binrank_cert({2, 3}, bin, 3, 3),
                    hyperdet_cert({2, 3}, bin, Rat(0))};
  std::string rn = "binary cubic with a repeated root that is not a perfect"
                   " cube: rank three over both fields";
  for (std::string fld : {"C", "R"}) {
    e.claims.push_back(CL("rank", fld, 3, 3, "certified", "certified",
                          {"block-rank", "three-cubes"}, rn));
    e.claims.push_back(CL("symmetric-rank", fld, 3, 3, "certified", "certified",
                          {"block-rank", "three-cubes"}, rn));
  }
  e.claims.push_back(CL("border-rank", "C", 2, 2, "certified", "certified",
                        {"flattening", "ladder"},
                        "flattening matches the exact low-level ladder"));
  e.claims.push_back(CL("symmetric-border-rank", "C", 2, 2, "certified",
                        "certified", {"flattening", "ladder"},
                        "flattening matches the exact low-level ladder"));
  return e;
}

CatalogEntry border4_entry() {
  CatalogEntry e;
  e.id = "border4-surface";
  e.title = "x1^2 x2 + x3^3 - x3 x4^2";
  e.form = mk_form(4, {{{2, 1, 0, 0}, 1}, {{0, 0, 3, 0}, 1}, {{0, 0, 1, 2}, -1}});
  CubicForm bin = mk_form(2, {{{3, 0}, 1}, {{1, 2}, -1}});

  // complex: three cubes for x1^2 x2 plus two conjugate cubes for the block
  Decomposition c5 = xxy_triple(4, 0, 1);
  c5.field = "Qsqrt:-3";
  for (auto& [c, v] : cube_pair(4, 2, 3)) {
    DecompTerm tm;
    tm.coef = c;
    tm.vectors = {v};
    c5.terms.push_back(tm);
  }
  c5.validate();
  // real: three cubes for x1^2 x2 plus three real cubes for the block
  Decomposition r6 = xxy_triple(4, 0, 1);
  for (auto& [c, v] : real_pair(4, 2, 3)) {
    DecompTerm tm;
    tm.coef = c;
    tm.vectors = {v};
    r6.terms.push_back(tm);
  }
  r6.validate();

  e.certificates = {piece_cert({{"x1sq-x2", Rat(1)}, {"x3-cube", Rat(1)}, {"x3-x4sq", Rat(-1)}}),
                    flat_cert(4),
                    ladder_cert(4, true),
                    hyperdet_cert({2, 3}, bin, ratio(-4, 27)),
                    binrank_cert({2, 3}, bin, 2, 3),
                    dec_cert("cx-five-cubes", c5),
                    dec_cert("real-six-cubes", r6),
                    comon_cert("cx-five-cubes")};

  e.claims.push_back(CL("border-rank", "C", 4, 4, "certified", "certified",
                        {"flattening", "ladder"},
                        "flattening four and quintic membership at level four"));
  e.claims.push_back(CL("symmetric-border-rank", "C", 4, 4, "certified",
                        "certified", {"flattening", "ladder"},
                        "membership is decided on the symmetric secant"));
  e.claims.push_back(CL("border-rank", "R", 5, 5, "literature-cited",
                        "literature-cited", {"block-hyperdet", "block-rank"},
                        "the binary block has negative hyperdeterminant, so the"
                        " real rank-two test fails on it and no real level-four"
                        " degeneration exists; level five is reached by"
                        " degenerating each piece separately",
                        8, 20000));
  e.claims.push_back(CL("rank", "C", 5, 5, "literature-cited", "certified",
                        {"cx-five-cubes", "comon"},
                        "lower bound by additivity over the disjoint pieces"));
  e.claims.push_back(CL("symmetric-rank", "C", 5, 5, "literature-cited",
                        "certified", {"cx-five-cubes"},
                        "lower bound by additivity over the disjoint pieces"));
  e.claims.push_back(CL("rank", "R", 6, 6, "literature-cited", "certified",
                        {"real-six-cubes"},
                        "real lower bound by additivity: the block needs three"
                        " real cubes"));
  e.claims.push_back(CL("symmetric-rank", "R", 6, 6, "literature-cited",
                        "certified", {"real-six-cubes"},
                        "real lower bound by additivity: the block needs three"
                        " real cubes"));
  e.notes = {"signed sum of the three monomial piece entries",
             "the x3,x4 block x3^3 - x3 x4^2 factors into three distinct real"
             " lines: complex rank two, real rank three"};
  return e;
}

CatalogEntry fivevar_entry() {
  CatalogEntry e;
  e.id = "fivevar-threefold";
  e.title = "x1(x1 x2 + x3^2) + x4^3 - x4 x5^2";
  e.form = mk_form(5, {{{2, 1, 0, 0, 0}, 1}, {{1, 0, 2, 0, 0}, 1}, {{0, 0, 0, 3, 0}, 1}, {{0, 0, 0, 1, 2}, -1}});

  // x1(x1 x2 + x3^2) as five rational cubes, with y = x2 - x1/3:
  //   (1/6)(x1+x3)^3 + (1/6)(x1-x3)^3 + (1/6)(x1+y)^3 - (1/6)(x1-y)^3 - (1/3)y^3
  std::vector<std::pair<FieldElement, std::vector<FieldElement>>> five = {
      {fe(1, 6), vec4({1, 0, 1, 0, 0})},
      {fe(1, 6), vec4({1, 0, -1, 0, 0})},
      {fe(1, 6), vec4({ratio(2, 3), 1, 0, 0, 0})},
      {fe(-1, 6), vec4({ratio(4, 3), -1, 0, 0, 0})},
      {fe(-1, 3), vec4({ratio(-1, 3), 1, 0, 0, 0})}};
  Decomposition c7 = powers(5, "Qsqrt:-3", five);
  for (auto& [c, v] : cube_pair(5, 3, 4)) {
    DecompTerm tm;
    tm.coef = c;
    tm.vectors = {v};
    c7.terms.push_back(tm);
  }
  c7.validate();
  Decomposition r8 = powers(5, "Q", five);
  for (auto& [c, v] : real_pair(5, 3, 4)) {
    DecompTerm tm;
    tm.coef = c;
    tm.vectors = {v};
    r8.terms.push_back(tm);
  }
  r8.validate();

  CubicForm bin = mk_form(2, {{{3, 0}, 1}, {{1, 2}, -1}});
  e.certificates = {flat_cert(5), dec_cert("cx-seven-cubes", c7),
                    dec_cert("real-eight-cubes", r8),
                    hyperdet_cert({3, 4}, bin, ratio(-4, 27)),
                    binrank_cert({3, 4}, bin, 2, 3)};

  e.claims.push_back(CL("border-rank", "C", 5, 5, "certified",
                        "literature-cited", {"flattening"},
                        "flattening five; upper bound three plus two for the"
                        " conic-with-tangent piece and the binary block",
                        8, 20000));
  e.claims.push_back(CL("rank", "C", 7, 7, "literature-cited", "certified",
                        {"cx-seven-cubes"},
                        "lower bound by additivity over the disjoint pieces:"
                        " five plus two"));
  e.claims.push_back(CL("symmetric-rank", "C", 7, 7, "literature-cited",
                        "certified", {"cx-seven-cubes"},
                        "lower bound by additivity over the disjoint pieces"));
  e.claims.push_back(CL("rank", "R", 8, 8, "literature-cited", "certified",
                        {"real-eight-cubes"},
                        "real block needs three cubes: five plus three"));
  e.claims.push_back(CL("symmetric-rank", "R", 8, 8, "literature-cited",
                        "certified", {"real-eight-cubes"},
                        "real block needs three cubes: five plus three"));
  e.notes = {"five-variable threefold exercising the n > 4 code paths",
             "the x1(x1 x2 + x3^2) piece is a conic with a tangent line:"
             " border rank three, rank five"};
  return e;
}

CatalogEntry family_a_entry(int k, long l1, long l2, long l3, long l4, int dim,
                            int degree) {
  CatalogEntry e;
  e.id = "family-a-" + std::to_string(k);
  std::ostringstream t;
  t << "x1^3 + x2^3 + x3^3 + x4^2(" << l1 << " x1 + " << l2 << " x2 + " << l3
    << " x3 + " << l4 << " x4)";
  e.title = t.str();
  e.form = mk_form(4, {{{3, 0, 0, 0}, 1},
                       {{0, 3, 0, 0}, 1},
                       {{0, 0, 3, 0}, 1},
                       {{1, 0, 0, 2}, l1},
                       {{0, 1, 0, 2}, l2},
                       {{0, 0, 1, 2}, l3},
                       {{0, 0, 0, 3}, l4}});
  e.certificates = {nonsingular_cert(), genericity_cert(false, dim, degree, false),
                    flat_cert(4)};
  e.claims.push_back(CL("symmetric-rank", "C", 6, 6, "literature-cited",
                        "literature-cited", {"genericity"},
                        "rank-six family: symmetric rank six at every"
                        " non-singular parameter choice (classical"
                        " classification of cubic surfaces)"));
  e.claims.push_back(CL("rank", "C", 6, 6, "literature-cited",
                        "literature-cited", {"flattening"},
                        "six is within flattening + 2, so rank and symmetric"
                        " rank coincide for the cited value"));
  e.notes = {"first rank-six normal-form family, sampled at a fixed"
             " non-singular parameter choice",
             "the degenerate Hessian profile separates the family from"
             " generic surfaces"};
  return e;
}

CatalogEntry family_b_entry(int k, long m1, long m2, int dim, int degree) {
  CatalogEntry e;
  e.id = "family-b-" + std::to_string(k);
  std::ostringstream t;
  t << m1 << " x1^3 + x2^3 + x3^3 - 3 x1(" << m2
    << " x1 x2 + x1 x3 + x4^2)";
  e.title = t.str();
  e.form = mk_form(4, {{{3, 0, 0, 0}, m1},
                       {{0, 3, 0, 0}, 1},
                       {{0, 0, 3, 0}, 1},
                       {{2, 1, 0, 0}, -3 * m2},
                       {{2, 0, 1, 0}, -3},
                       {{1, 0, 0, 2}, -3}});
  e.certificates = {nonsingular_cert(), genericity_cert(false, dim, degree, false),
                    flat_cert(4)};
  e.claims.push_back(CL("symmetric-rank", "C", 6, 6, "literature-cited",
                        "literature-cited", {"genericity"},
                        "second rank-six family: symmetric rank six at every"
                        " non-singular parameter choice (classical"
                        " classification of cubic surfaces)"));
  e.claims.push_back(CL("rank", "C", 6, 6, "literature-cited",
                        "literature-cited", {"flattening"},
                        "six is within flattening + 2, so rank and symmetric"
                        " rank coincide for the cited value"));
  e.notes = {"second rank-six normal-form family, sampled at a fixed"
             " non-singular parameter choice"};
  return e;
}

CatalogEntry ball_entry() {
  CatalogEntry e;
  e.id = "ball-cubic";
  e.title = "x1(x1^2 + x2^2 + x3^2 + x4^2)";
  e.form = mk_form(4, {{{3, 0, 0, 0}, 1}, {{1, 2, 0, 0}, 1}, {{1, 0, 2, 0}, 1}, {{1, 0, 0, 2}, 1}});
  e.certificates = {flat_cert(4)};
  e.claims.push_back(CL("symmetric-rank", "C", 6, 6, "literature-cited",
                        "literature-cited", {},
                        "variable times a full-rank quadric: symmetric rank"
                        " six (cited)", 16, 4000));
  e.claims.push_back(CL("rank", "C", 6, 6, "literature-cited",
                        "literature-cited", {"flattening"},
                        "six is within flattening + 2, so rank and symmetric"
                        " rank coincide for the cited value", 16, 4000));
  return e;
}

CatalogEntry cone_entry() {
  CatalogEntry e;
  e.id = "round-cone";
  e.title = "x1(x2^2 + x3^2 + x4^2)";
  e.form = mk_form(4, {{{1, 2, 0, 0}, 1}, {{1, 0, 2, 0}, 1}, {{1, 0, 0, 2}, 1}});
  e.certificates = {flat_cert(4)};
  e.claims.push_back(CL("symmetric-rank", "C", 6, 6, "literature-cited",
                        "literature-cited", {},
                        "variable times a rank-three quadric avoiding it:"
                        " symmetric rank six (cited)"));
  e.claims.push_back(CL("rank", "C", 6, 6, "literature-cited",
                        "literature-cited", {"flattening"},
                        "six is within flattening + 2, so rank and symmetric"
                        " rank coincide for the cited value"));
  return e;
}

CatalogEntry rank7a_entry() {
  CatalogEntry e;
  e.id = "rank7-a";
  e.title = "x1(x1 x2 + x3^2 + x4^2)";
  e.form = mk_form(4, {{{2, 1, 0, 0}, 1}, {{1, 0, 2, 0}, 1}, {{1, 0, 0, 2}, 1}});
  // seven real cubes:
  //   (1/6)l1^3 - (1/6)l2^3 + (1/3)l3^3 + (1/3)l4^3 - (1/3)l5^3
  //   + (1/3)l6^3 - (1/3)l7^3
  Decomposition d7 = powers(
      4, "Q",
      {{fe(1, 6), vec4({ratio(1, 3), 1, -1, -1})},
       {fe(-1, 6), vec4({ratio(5, 3), -1, 1, 1})},
       {fe(1, 3), vec4({ratio(2, 3), -1, 1, 1})},
       {fe(1, 3), vec4({1, 0, 1, 0})},
       {fe(-1, 3), vec4({0, 0, 1, 0})},
       {fe(1, 3), vec4({1, 0, 0, 1})},
       {fe(-1, 3), vec4({0, 0, 0, 1})}});
  e.certificates = {subst_cert(7, const_qpoly(6, "-1", "81")),
                    dec_cert("seven-cubes", d7), flat_cert(4)};
  std::string note = "substitution bound seven meets the explicit seven"
                     " real cubes";
  for (std::string fld : {"C", "R"}) {
    e.claims.push_back(CL("rank", fld, 7, 7, "certified", "certified",
                          {"substitution", "seven-cubes"}, note));
    e.claims.push_back(CL("symmetric-rank", fld, 7, 7, "certified", "certified",
                          {"substitution", "seven-cubes"}, note));
  }
  e.notes = {"the substitution determinant is the constant -1/81, so the"
             " lower bound holds over every subfield of C"};
  return e;
}

CatalogEntry rank7b_entry() {
  CatalogEntry e;
  e.id = "rank7-b";
  e.title = "x1^2 x2 + x1 x3 x4 + x3^3";
  e.form = mk_form(4, {{{2, 1, 0, 0}, 1}, {{1, 0, 1, 1}, 1}, {{0, 0, 3, 0}, 1}});
  e.certificates = {subst_cert(7, const_qpoly(6, "1", "324")), flat_cert(4)};
  e.claims.push_back(CL("rank", "C", 7, 7, "certified", "literature-cited",
                        {"substitution"},
                        "upper bound seven is quoted without a printed"
                        " decomposition; evidenced numerically", 16, 4000));
  e.claims.push_back(CL("symmetric-rank", "C", 7, 7, "certified",
                        "literature-cited", {"substitution"},
                        "upper bound seven is quoted without a printed"
                        " decomposition; evidenced numerically", 16, 4000));
  e.claims.push_back(CL("rank", "R", 7, std::nullopt, "certified", "unknown",
                        {"substitution"},
                        "the constant-determinant bound holds over R; no real"
                        " upper bound is on record"));
  e.open = {"exact seven-cube certificate for the upper bound"};
  return e;
}

CatalogEntry split_entry() {
  CatalogEntry e;
  e.id = "split-pair";
  e.title = "x1 x2^2 + x3 x4^2";
  e.form = mk_form(4, {{{1, 2, 0, 0}, 1}, {{0, 0, 1, 2}, 1}});
  Decomposition d6 = xyy_triple(4, 0, 1);
  for (auto& t : xyy_triple(4, 2, 3).terms) d6.terms.push_back(t);
  d6.validate();
  CubicForm bin = mk_form(2, {{{1, 2}, 1}});
  e.certificates = {flat_cert(4), ladder_cert(4, true),
                    dec_cert("six-cubes", d6), comon_cert("six-cubes"),
                    binrank_cert({0, 1}, bin, 3, 3, "block-rank-12"),
                    binrank_cert({2, 3}, bin, 3, 3, "block-rank-34")};
  for (std::string fld : {"C", "R"}) {
    e.claims.push_back(CL("rank", fld, 6, 6, "literature-cited", "certified",
                          {"six-cubes", "comon"},
                          "lower bound by additivity of the two binary"
                          " blocks, three each", 16, 1200));
    e.claims.push_back(CL("symmetric-rank", fld, 6, 6, "literature-cited",
                          "certified", {"six-cubes"},
                          "lower bound by additivity of the two binary"
                          " blocks, three each", 16, 1200));
  }
  e.claims.push_back(CL("border-rank", "C", 4, 4, "certified", "certified",
                        {"flattening", "ladder"},
                        "each block degenerates to border rank two"));
  e.claims.push_back(CL("symmetric-border-rank", "C", 4, 4, "certified",
                        "certified", {"flattening", "ladder"},
                        "each block degenerates to border rank two"));
  return e;
}

CatalogEntry e6_entry() {
  CatalogEntry e;
  e.id = "e6-cubic";
  e.title = "x1^2 x4 + x1 x3^2 + x2^3";
  e.form = mk_form(4, {{{2, 0, 0, 1}, 1}, {{1, 0, 2, 0}, 1}, {{0, 3, 0, 0}, 1}});
  // (1/6)x4^3 + (1/6)(2x1+x4)^3 - (1/3)(x1+x4)^3 + x2^3
  //   - (1/2)(x1 + i x3/sqrt 3)^3 - (1/2)(x1 - i x3/sqrt 3)^3
  FieldElement w = om();
  Decomposition d6 = powers(
      4, "Qsqrt:-3",
      {{fe(1, 6), vec4({0, 0, 0, 1})},
       {fe(1, 6), vec4({2, 0, 0, 1})},
       {fe(-1, 3), vec4({1, 0, 0, 1})},
       {fe(1), vec4({0, 1, 0, 0})},
       {fe(-1, 2), {fe(1), fe(0), w, fe(0)}},
       {fe(-1, 2), {fe(1), fe(0), fe(0) - w, fe(0)}}});
  e.certificates = {dec_cert("six-cubes", d6), flat_cert(4),
                    ladder_cert(4, true), comon_cert("six-cubes"),
                    genericity_cert(false, 2, 2, false)};
  e.claims.push_back(CL("symmetric-rank", "C", 4, 6, "certified", "certified",
                        {"flattening", "six-cubes"},
                        "six cubes verified exactly; the gap to the flattening"
                        " bound is not closed here"));
  e.claims.push_back(CL("rank", "C", 4, 6, "certified", "certified",
                        {"flattening", "six-cubes", "comon"},
                        "rank and symmetric rank coincide: the verified bound"
                        " six is within flattening + 2"));
  e.claims.push_back(CL("border-rank", "C", 4, 4, "certified", "certified",
                        {"flattening", "ladder"},
                        "flattening four and quintic membership at level four"));
  e.notes = {"singular cubic surface with degenerate Hessian (dimension-two"
             " singular locus of the Hessian surface)"};
  return e;
}

SosCertificate sos_dependent() {
  auto var = [](int i) { return QPoly::variable(12, i); };
  QPoly u1 = var(4), u2 = var(5), v1 = var(6), v2 = var(7), w1 = var(8);
  QPoly one = QPoly::constant(12, 1);
  QPoly A00 = u1 * u1 + v1 * v1 + one;
  QPoly A01 = -(u1 * u2) - v1 * v2 - w1;
  QPoly A10 = u1 * u2 + v1 * v2 - w1;
  QPoly A11 = -(u2 * u2) - v2 * v2 - one;
  SosCertificate c;
  c.target = -(A00 * A11 - A01 * A10);
  c.squares = {u2 * v1 - u1 * v2, u1, u2, v1, v2, w1};
  c.constant = 1;
  return c;
}

SosCertificate sos_elim1() {
  auto var = [](int i) { return QPoly::variable(12, i); };
  QPoly s1 = var(0), s2 = var(1), u1 = var(4), u2 = var(5), v1 = var(6),
        v2 = var(7);
  SosCertificate c;
  c.squares = {s2 * u1 + s1 * u2, s1 - u1, s2 + u2,
               s2 * v1 + u2 * v1 + s1 * v2 - u1 * v2};
  c.constant = 0;
  c.target = QPoly(12);
  for (auto& q : c.squares) c.target = c.target + q * q;
  return c;
}

SosCertificate sos_elim2() {
  auto var = [](int i) { return QPoly::variable(12, i); };
  QPoly t1 = var(2), t2 = var(3), u1 = var(4), u2 = var(5), v1 = var(6);
  SosCertificate c;
  c.squares = {t2 * u1 + t1 * u2, u1 * u2 - t2 * v1, t1, t2, u1, u2};
  c.constant = 1;
  c.target = QPoly::constant(12, 1);
  for (auto& q : c.squares) c.target = c.target + q * q;
  return c;
}

CatalogEntry minkowski_entry() {
  CatalogEntry e;
  e.id = "minkowski-cubic";
  e.title = "x1(x1^2 - x2^2 - x3^2 - x4^2)";
  e.form = mk_form(4, {{{3, 0, 0, 0}, 1}, {{1, 2, 0, 0}, -1}, {{1, 0, 2, 0}, -1}, {{1, 0, 0, 2}, -1}});

  // 2 x1^3 - (1/6) sum over i=2..4 of (x1+xi)^3 + (x1-xi)^3
  std::vector<std::pair<FieldElement, std::vector<FieldElement>>> seven = {
      {fe(2), vec4({1, 0, 0, 0})}};
  for (int i = 1; i < 4; i++)
    for (int s : {1, -1}) {
      std::vector<Rat> v(4, Rat(0));
      v[0] = 1;
      v[i] = s;
      seven.push_back({fe(-1, 6), vec4(v)});
    }
  Decomposition d7 = powers(4, "Q", seven);

  Json rs;
  rs["id"] = "real-reduction";
  rs["type"] = "real-substitution";
  rs["bound"] = 7;
  rs["scaled_form"] = form_to_json(mk_form(
      4, {{{3, 0, 0, 0}, 1}, {{1, 2, 0, 0}, -3}, {{1, 0, 2, 0}, -3}, {{1, 0, 0, 2}, -3}}));
  rs["scaling_d"] = 3;
  rs["diag"] = Json::array();
  rs["diag"].push_back(field_element_to_json(fe(1)));
  for (int i = 0; i < 3; i++)
    rs["diag"].push_back(field_element_to_json(FieldElement::quad(0, 1, 3)));
  rs["schedule"] = Json::array();
  auto step = [&](int mode, int index) {
    Json s;
    s["mode"] = mode;
    s["index"] = index;
    rs["schedule"].push_back(s);
  };
  step(3, 3);
  step(3, 2);
  step(2, 3);
  step(2, 2);
  step(1, 1);
  step(1, 1);
  rs["multipliers"] = Json::array({Json::array({"2", "3", "0"}),
                                   Json::array({"-5", "-7"}),
                                   Json::array({"-11", "-13", "0"}),
                                   Json::array({"17", "19"}),
                                   Json::array({"-23", "0", "-29"}),
                                   Json::array({"31", "37"})});
  rs["S1"] = Json::array({Json::array({"-264", "346"}), Json::array({"-491", "171"})});
  rs["S2"] = Json::array({Json::array({"-453", "233"}), Json::array({"-745", "0"})});

  e.certificates = {dec_cert("seven-cubes", d7),
                    rs,
                    sos_cert("sos-elim-first", sos_elim1(), false,
                             "vanishing forces the two leading multiplier"
                             " pairs to agree up to sign"),
                    sos_cert("sos-elim-second", sos_elim2(), true,
                             "after that identification the system contains a"
                             " polynomial bounded below by one"),
                    sos_cert("sos-dependent", sos_dependent(), true,
                             "determinant obstruction when the third slice"
                             " pair is linearly dependent"),
                    flat_cert(4)};

  std::string note = "real reduction schedule with no real exit: the sampled"
                     " closed forms and the sum-of-squares obstructions rule"
                     " out six real terms; seven real cubes are explicit";
  e.claims.push_back(CL("rank", "R", 7, 7, "certified", "certified",
                        {"real-reduction", "sos-elim-first", "sos-elim-second",
                         "sos-dependent", "seven-cubes"},
                        note));
  e.claims.push_back(CL("symmetric-rank", "R", 7, 7, "certified", "certified",
                        {"real-reduction", "sos-elim-first", "sos-elim-second",
                         "sos-dependent", "seven-cubes"},
                        note));
  e.claims.push_back(CL("rank", "C", 6, 6, "literature-cited",
                        "literature-cited", {},
                        "over C the form is equivalent to the sum-type cone"
                        " x1(x1^2 + x2^2 + x3^2 + x4^2) of rank six"));
  e.claims.push_back(CL("symmetric-rank", "C", 6, 6, "literature-cited",
                        "literature-cited", {},
                        "over C the form is equivalent to the sum-type cone"
                        " of symmetric rank six"));
  e.notes = {"real/complex rank gap: real rank seven, complex rank six",
             "the stored reduction acts on the scaled tensor; the diagonal"
             " scaling over Q(sqrt 3) is re-verified exactly"};
  return e;
}

}  // namespace

std::vector<CatalogEntry> builtin_catalog_entries() {
  std::vector<CatalogEntry> v;
  v.push_back(fermat_entry());
  v.push_back(x1sqx2_entry());
  v.push_back(x3cube_entry());
  v.push_back(x3x4sq_entry());
  v.push_back(border4_entry());
  v.push_back(fivevar_entry());
  v.push_back(family_a_entry(1, 1, 1, 1, 1, 0, 13));
  v.push_back(family_a_entry(2, 1, 0, 0, 1, 1, 6));
  v.push_back(family_a_entry(3, 1, 2, 0, 1, 1, 3));
  v.push_back(family_a_entry(4, 2, 1, 1, 3, 0, 13));
  v.push_back(family_a_entry(5, 1, 1, 2, 1, 0, 13));
  v.push_back(family_b_entry(1, 1, 1, 0, 16));
  v.push_back(family_b_entry(2, 2, 1, 0, 16));
  v.push_back(family_b_entry(3, 1, 2, 0, 16));
  v.push_back(family_b_entry(4, 3, 1, 0, 16));
  v.push_back(family_b_entry(5, 2, 3, 0, 16));
  v.push_back(ball_entry());
  v.push_back(cone_entry());
  v.push_back(rank7a_entry());
  v.push_back(rank7b_entry());
  v.push_back(split_entry());
  v.push_back(e6_entry());
  v.push_back(minkowski_entry());
  std::sort(v.begin(), v.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.id < b.id; });
  return v;
}

// ------------------------------------------------------------- JSON layer

namespace {

Json claim_to_json(const CatalogClaim& c) {
  Json j;
  j["kind"] = c.kind;
  j["field"] = c.field;
  j["lower"] = c.lower;
  if (c.upper) j["upper"] = *c.upper;
  else j["upper"] = nullptr;
  j["lower_tag"] = c.lower_tag;
  j["upper_tag"] = c.upper_tag;
  j["evidence"] = c.evidence;
  j["note"] = c.note;
  j["evidence_restarts"] = c.evidence_restarts;
  j["evidence_iters"] = c.evidence_iters;
  return j;
}

CatalogClaim claim_from_json(const Json& j) {
  CatalogClaim c;
  c.kind = j.at("kind").get<std::string>();
  c.field = j.at("field").get<std::string>();
  c.lower = j.at("lower").get<int>();
  if (!j.at("upper").is_null()) c.upper = j.at("upper").get<int>();
  c.lower_tag = j.at("lower_tag").get<std::string>();
  c.upper_tag = j.at("upper_tag").get<std::string>();
  for (auto& s : j.at("evidence")) c.evidence.push_back(s.get<std::string>());
  c.note = j.at("note").get<std::string>();
  c.evidence_restarts = j.at("evidence_restarts").get<int>();
  c.evidence_iters = j.at("evidence_iters").get<int>();
  return c;
}

}  // namespace

Json entry_to_json(const CatalogEntry& e) {
  Json j;
  j["id"] = e.id;
  j["title"] = e.title;
  j["form"] = form_to_json(e.form);
  j["claims"] = Json::array();
  for (auto& c : e.claims) j["claims"].push_back(claim_to_json(c));
  j["certificates"] = Json::array();
  for (auto& c : e.certificates) j["certificates"].push_back(c);
  j["notes"] = e.notes;
  if (!e.open.empty()) j["open"] = e.open;
  return j;
}

CatalogEntry entry_from_json(const Json& j) {
  try {
    CatalogEntry e;
    e.id = j.at("id").get<std::string>();
    e.title = j.at("title").get<std::string>();
    e.form = form_from_json(j.at("form"));
    for (auto& c : j.at("claims")) e.claims.push_back(claim_from_json(c));
    for (auto& c : j.at("certificates")) e.certificates.push_back(c);
    for (auto& s : j.at("notes")) e.notes.push_back(s.get<std::string>());
    if (j.contains("open"))
      for (auto& s : j.at("open")) e.open.push_back(s.get<std::string>());
    return e;
  } catch (const Json::exception& ex) {
    throw SchemaError(std::string("catalog entry: ") + ex.what());
  }
}

std::string catalog_dir() {
  const char* env = std::getenv("CUBICRANK_CATALOG_DIR");
  if (env && *env) return env;
  return std::string(CUBICRANK_SOURCE_DIR) + "/catalog";
}

std::vector<std::string> catalog_ids(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> ids;
  if (!fs::is_directory(dir))
    throw SchemaError("catalog directory not found: " + dir);
  for (auto& de : fs::directory_iterator(dir))
    if (de.path().extension() == ".json") ids.push_back(de.path().stem().string());
  std::sort(ids.begin(), ids.end());
  return ids;
}

CatalogEntry load_entry(const std::string& id, const std::string& dir) {
  std::string path = dir + "/" + id + ".json";
  if (!std::filesystem::exists(path))
    throw SchemaError("unknown catalog entry: " + id);
  CatalogEntry e = entry_from_json(load_json_file(path));
  if (e.id != id)
    throw SchemaError("catalog entry id mismatch in " + path);
  return e;
}

// ----------------------------------------------------------- verification

namespace {

std::string rat_str(const Rat& r) { return r.get_str(); }

CubicForm restrict_to_vars(const CubicForm& f, const std::vector<int>& vars) {
  FPoly p((int)vars.size());
  for (auto& [e, c] : f.poly.t) {
    Exp sub(vars.size(), 0);
    int outside = 0;
    for (int i = 0; i < f.n; i++) {
      auto it = std::find(vars.begin(), vars.end(), i);
      if (it != vars.end()) sub[it - vars.begin()] = e[i];
      else outside += e[i];
    }
    if (outside == 0) p.add_term(sub, c);
  }
  return CubicForm(p);
}

struct BinaryClass {
  int crank = 0;
  int rrank = 0;
  Rat hyperdet;
};

// exact classification of a nonzero binary cubic by the cube test and the
// hyperdeterminant: cube -> 1; distinct roots -> complex rank 2 (real rank 2
// when one root is real, 3 when all three are); repeated non-cube -> 3
BinaryClass classify_binary(const CubicForm& b) {
  if (b.n != 2 || b.is_zero())
    throw std::invalid_argument("binary classification needs a nonzero binary cubic");
  Rat c0 = b.coeff({3, 0}).as_rat(), c1 = b.coeff({2, 1}).as_rat(),
      c2 = b.coeff({1, 2}).as_rat(), c3 = b.coeff({0, 3}).as_rat();
  BinaryClass r;
  r.hyperdet = hyperdet_222(b);
  bool cube = c1 * c1 == 3 * c0 * c2 && c2 * c2 == 3 * c1 * c3 &&
              9 * c0 * c3 == c1 * c2;
  if (cube) {
    r.crank = r.rrank = 1;
  } else if (r.hyperdet != 0) {
    r.crank = 2;
    r.rrank = r.hyperdet > 0 ? 2 : 3;
  } else {
    r.crank = 3;
    r.rrank = 3;
  }
  return r;
}

std::vector<int> vars_of(const Json& cert) {
  std::vector<int> v;
  for (auto& x : cert.at("vars")) v.push_back(x.get<int>());
  return v;
}

// lower bound a certificate implies for one claim side, if any
std::optional<int> implied_lower(const Json& cert, const std::string& kind,
                                 const std::string& field) {
  std::string type = cert.at("type").get<std::string>();
  bool rank_kind = kind == "rank" || kind == "symmetric-rank";
  if (type == "flattening") return cert.at("value").get<int>();
  if (type == "substitution" && rank_kind) return cert.at("bound").get<int>();
  if (type == "border-ladder") return cert.at("level").get<int>();
  if (type == "binary-rank" && rank_kind)
    return cert.at(field == "R" ? "real_rank" : "rank").get<int>();
  if (type == "real-substitution" && rank_kind && field == "R")
    return cert.at("bound").get<int>();
  return std::nullopt;
}

std::optional<int> implied_upper(const Json& cert, const std::string& kind,
                                 const std::string& field) {
  std::string type = cert.at("type").get<std::string>();
  if (type == "decomposition") {
    std::string df = cert.at("decomposition").at("field").get<std::string>();
    bool real_ok = df == "Q" || df == "R" ||
                   (df.rfind("Qsqrt:", 0) == 0 && df.find('-') == std::string::npos);
    if (field == "R" && !real_ok) return std::nullopt;
    return cert.at("length").get<int>();
  }
  bool border_kind = kind == "border-rank" || kind == "symmetric-border-rank";
  if (type == "border-ladder" && border_kind && field == "C" &&
      cert.value("exact", false))
    return cert.at("level").get<int>();
  return std::nullopt;
}

struct Sink {
  std::vector<CatalogCheck>& out;
  const std::string& eid;
  int& failures;
  void add(const std::string& check, bool ok, const std::string& detail) {
    out.push_back({eid, check, ok, detail});
    if (!ok) failures++;
  }
};

void verify_one_cert(const CatalogEntry& e, const Json& cert,
                     const std::map<std::string, const Json*>& by_id,
                     const std::string& dir, bool parallel, Sink& sink) {
  std::string id = cert.at("id").get<std::string>();
  std::string type = cert.at("type").get<std::string>();
  std::ostringstream d;
  bool ok = false;

  if (type == "decomposition") {
    Decomposition dec = decomposition_from_json(cert.at("decomposition"));
    VerifyResult vr = verify_decomposition(e.form, dec);
    ok = vr.ok && vr.exact == cert.at("exact").get<bool>() &&
         dec.length() == cert.at("length").get<int>();
    d << "length=" << dec.length() << " exact=" << vr.exact
      << " residual=" << vr.residual;
  } else if (type == "piece-sum") {
    FPoly acc(e.form.n);
    bool loaded = true;
    for (auto& p : cert.at("pieces")) {
      CatalogEntry pe = load_entry(p.at("id").get<std::string>(), dir);
      if (pe.form.n != e.form.n) { loaded = false; break; }
      Rat c = rat_from_strings(p.at("num").get<std::string>(),
                               p.at("den").get<std::string>());
      acc += FieldElement(c) * pe.form.poly;
    }
    ok = loaded && acc == e.form.poly;
    d << (ok ? "signed sum of pieces matches" : "piece sum mismatch");
  } else if (type == "flattening") {
    int fr = flattening_rank(e.form);
    ok = fr == cert.at("value").get<int>();
    d << "flattening rank " << fr;
  } else if (type == "substitution") {
    SubstSchedule s = schedule_from_json(cert.at("schedule"));
    auto rep = subst_lower_bound(embed_general(e.form), s);
    ok = rep.has_value() && rep->lower == cert.at("bound").get<int>() &&
         rep->certificates.at(0).at("final_det") == cert.at("final_det");
    if (rep)
      d << "bound " << rep->lower << " det "
        << rep->certificates.at(0).at("final_det").dump();
    else
      d << "inconclusive schedule";
  } else if (type == "border-ladder") {
    BoundReport br = border_rank_ladder(e.form, cert.at("seed").get<std::uint64_t>(),
                                        cert.at("trials").get<int>(), parallel);
    int level = cert.at("level").get<int>();
    ok = br.lower == level &&
         (!cert.at("exact").get<bool>() || (br.upper && *br.upper == level));
    d << "ladder [" << br.lower << ","
      << (br.upper ? std::to_string(*br.upper) : "?") << "]";
  } else if (type == "hyperdet") {
    CubicForm bin = form_from_json(cert.at("binary"));
    CubicForm res = restrict_to_vars(e.form, vars_of(cert));
    Rat h = hyperdet_222(bin);
    Rat want = rat_from_strings(cert.at("value").at("num").get<std::string>(),
                                cert.at("value").at("den").get<std::string>());
    int sign = h > 0 ? 1 : h < 0 ? -1 : 0;
    ok = res == bin && h == want && sign == cert.at("sign").get<int>();
    d << "hyperdet " << rat_str(h) << " sign " << sign;
  } else if (type == "binary-rank") {
    CubicForm bin = form_from_json(cert.at("binary"));
    CubicForm res = restrict_to_vars(e.form, vars_of(cert));
    BinaryClass bc = classify_binary(bin);
    ok = res == bin && bc.crank == cert.at("rank").get<int>() &&
         bc.rrank == cert.at("real_rank").get<int>();
    d << "complex rank " << bc.crank << " real rank " << bc.rrank
      << " hyperdet " << rat_str(bc.hyperdet);
  } else if (type == "sos") {
    SosCertificate sc = sos_from_json(cert.at("certificate"));
    SosCheck ck = verify_sos(sc);
    bool pos = sc.constant > 0;
    ok = ck.ok && pos == cert.at("positive").get<bool>();
    d << (ck.ok ? "identity verified" : "first difference " + ck.first_diff)
      << ", constant " << rat_str(sc.constant);
  } else if (type == "real-substitution") {
    CubicForm scaled = form_from_json(cert.at("scaled_form"));
    long sd = cert.at("scaling_d").get<long>();
    std::string fld = "Qsqrt:" + std::to_string(sd);
    ExactMatrix M(e.form.n, e.form.n);
    for (int i = 0; i < e.form.n; i++)
      M.at(i, i) = field_element_from_json(cert.at("diag").at(i), fld);
    bool scale_ok = apply_gl(e.form, M) == scaled;
    GeneralTensor T = embed_general(scaled);
    auto& sched = cert.at("schedule");
    auto& mult = cert.at("multipliers");
    for (size_t k = 0; k < sched.size(); k++) {
      std::vector<FieldElement> lam;
      for (auto& s : mult.at(k))
        lam.push_back(FieldElement(Rat(s.get<std::string>())));
      T = real_subst_reduce(T, sched.at(k).at("mode").get<int>(),
                            sched.at(k).at("index").get<int>(), lam);
    }
    bool dims_ok = T.dims == std::array<int, 3>{2, 2, 2};
    bool slices_ok = dims_ok;
    if (dims_ok)
      for (int j = 0; j < 2; j++)
        for (int k = 0; k < 2; k++) {
          slices_ok = slices_ok &&
                      T.at(0, j, k).as_rat() ==
                          Rat(cert.at("S1").at(j).at(k).get<std::string>()) &&
                      T.at(1, j, k).as_rat() ==
                          Rat(cert.at("S2").at(j).at(k).get<std::string>());
        }
    ok = scale_ok && slices_ok;
    d << "scaling " << (scale_ok ? "exact" : "MISMATCH") << ", sampled slices "
      << (slices_ok ? "match" : "MISMATCH");
  } else if (type == "genericity") {
    GenericityReport g = hessian_genericity(e.form, cert.at("seed").get<std::uint64_t>());
    ok = g.hessian_vanishes == cert.at("vanishes").get<bool>() &&
         g.dim == cert.at("dim").get<int>() &&
         g.degree == cert.at("degree").get<int>() &&
         g.distinct == cert.at("distinct").get<bool>() &&
         g.generic() == cert.at("generic").get<bool>();
    d << "dim=" << g.dim << " degree=" << g.degree << " distinct=" << g.distinct;
  } else if (type == "non-singular") {
    SingularReport sr = is_singular(e.form);
    ok = !sr.singular;
    d << (sr.singular ? "singular locus found" : "empty singular locus");
  } else if (type == "comon") {
    auto it = by_id.find(cert.at("decomposition_id").get<std::string>());
    if (it == by_id.end()) {
      d << "referenced decomposition certificate missing";
    } else {
      Decomposition dec = decomposition_from_json(it->second->at("decomposition"));
      ComonVerdict v = comon_verdict(e.form, dec);
      ok = v.coincide == cert.at("coincide").get<bool>();
      d << "sym_ub=" << v.sym_ub << " flattening=" << v.flattening;
    }
  } else {
    d << "unknown certificate type " << type;
  }
  sink.add(id, ok, d.str());
}

struct EvidenceReq {
  int value = 0;
  bool complex_field = true;
  int restarts = 8;
  int iters = 600;
};

void verify_entry(const CatalogEntry& e, std::uint64_t seed, bool parallel,
                  const std::string& dir, std::vector<CatalogCheck>& out,
                  int& failures) {
  Sink sink{out, e.id, failures};
  std::map<std::string, const Json*> by_id;
  for (auto& c : e.certificates)
    by_id[c.at("id").get<std::string>()] = &c;

  for (auto& cert : e.certificates) {
    try {
      verify_one_cert(e, cert, by_id, dir, parallel, sink);
    } catch (const std::exception& ex) {
      sink.add(cert.value("id", "?"), false, std::string("exception: ") + ex.what());
    }
  }

  static const std::set<std::string> kinds = {
      "rank", "symmetric-rank", "border-rank", "symmetric-border-rank"};
  std::map<std::string, EvidenceReq> als_requests;  // key: field/value

  for (auto& cl : e.claims) {
    std::string cid = "claim:" + cl.kind + "/" + cl.field;
    std::ostringstream d;
    bool ok = true;
    if (!kinds.count(cl.kind) || (cl.field != "C" && cl.field != "R")) {
      ok = false;
      d << "unknown kind or field; ";
    }
    if (cl.upper && cl.lower > *cl.upper) {
      ok = false;
      d << "lower exceeds upper; ";
    }
    if ((cl.upper_tag == "unknown") != !cl.upper) {
      ok = false;
      d << "unknown tag must match an absent upper bound; ";
    }
    std::optional<int> best_lower, best_upper;
    for (auto& ev : cl.evidence) {
      auto it = by_id.find(ev);
      if (it == by_id.end()) {
        ok = false;
        d << "missing evidence certificate " << ev << "; ";
        continue;
      }
      if (auto lo = implied_lower(*it->second, cl.kind, cl.field))
        best_lower = std::max(best_lower.value_or(*lo), *lo);
      if (auto up = implied_upper(*it->second, cl.kind, cl.field))
        best_upper = std::min(best_upper.value_or(*up), *up);
    }
    auto queue_evidence = [&](int value, int restarts, int iters) {
      std::string key = cl.field + "/" + std::to_string(value);
      EvidenceReq& r = als_requests[key];
      r.value = value;
      r.complex_field = cl.field == "C";
      r.restarts = std::max(r.restarts, restarts);
      r.iters = std::max(r.iters, iters);
    };
    if (cl.lower_tag == "certified") {
      if (!best_lower || *best_lower != cl.lower) {
        ok = false;
        d << "certified lower " << cl.lower << " not established (certificates give "
          << (best_lower ? std::to_string(*best_lower) : std::string("none"))
          << "); ";
      }
    } else if (cl.lower_tag == "literature-cited") {
      queue_evidence(cl.upper.value_or(cl.lower), cl.evidence_restarts,
                     cl.evidence_iters);
    } else {
      ok = false;
      d << "bad lower tag " << cl.lower_tag << "; ";
    }
    if (cl.upper_tag == "certified") {
      if (!cl.upper || !best_upper || *best_upper != *cl.upper) {
        ok = false;
        d << "certified upper not established (certificates give "
          << (best_upper ? std::to_string(*best_upper) : std::string("none"))
          << "); ";
      }
    } else if (cl.upper_tag == "literature-cited") {
      if (cl.upper) queue_evidence(*cl.upper, cl.evidence_restarts, cl.evidence_iters);
      else { ok = false; d << "cited upper without a value; "; }
    } else if (cl.upper_tag != "unknown") {
      ok = false;
      d << "bad upper tag " << cl.upper_tag << "; ";
    }
    if (ok)
      d << "interval [" << cl.lower << ","
        << (cl.upper ? std::to_string(*cl.upper) : "?") << "] tags "
        << cl.lower_tag << "/" << cl.upper_tag;
    sink.add(cid, ok, d.str());
  }

  for (auto& [key, req] : als_requests) {
    std::ostringstream d;
    bool ok = false;
    try {
      FitResult fr = als_fit(e.form, req.value, req.complex_field, req.restarts,
                             seed, parallel, req.iters);
      ok = fr.residual < 1e-6;
      d << "residual " << fr.residual << " at rank " << req.value << " over "
        << (req.complex_field ? "C" : "R");
    } catch (const std::exception& ex) {
      d << "exception: " << ex.what();
    }
    sink.add("als-evidence:" + key, ok, d.str());
  }
}

}  // namespace

Json catalog_report_to_json(const CatalogReport& r) {
  Json j;
  j["scope"] = r.scope;
  j["seed"] = r.seed;
  j["entries"] = r.entries;
  j["failures"] = r.failures;
  j["ok"] = r.ok();
  j["checks"] = Json::array();
  for (auto& c : r.checks) {
    Json k;
    k["entry"] = c.entry;
    k["check"] = c.check;
    k["ok"] = c.ok;
    k["detail"] = c.detail;
    j["checks"].push_back(k);
  }
  return j;
}

CatalogReport catalog_verify(const std::string& id_or_all, std::uint64_t seed,
                             bool parallel, const std::string& dir) {
  std::vector<std::string> ids;
  if (id_or_all == "all") ids = catalog_ids(dir);
  else ids.push_back(id_or_all);
  std::vector<CatalogEntry> entries;
  for (auto& id : ids) entries.push_back(load_entry(id, dir));

  std::vector<std::vector<CatalogCheck>> per(entries.size());
  std::vector<int> fails(entries.size(), 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < (int)entries.size(); i++) {
    try {
      verify_entry(entries[i], seed, parallel, dir, per[i], fails[i]);
    } catch (const std::exception& ex) {
      per[i].push_back({entries[i].id, "entry", false,
                        std::string("exception: ") + ex.what()});
      fails[i]++;
    }
  }

  CatalogReport rep;
  rep.scope = id_or_all;
  rep.seed = seed;
  rep.entries = (int)entries.size();
  for (size_t i = 0; i < entries.size(); i++) {
    rep.failures += fails[i];
    for (auto& c : per[i]) rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace cubicrank
