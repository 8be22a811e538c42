#include "okubo/checks.hpp"

#include "okubo/catalog.hpp"
#include "okubo/conductor.hpp"
#include "okubo/okubo_matrix.hpp"
#include "okubo/stabilizer.hpp"

#include <sstream>

namespace okubo {

namespace {

template <typename Seq, typename F>
std::string join(const Seq& seq, F fmt, const char* sep = ",") {
  std::string out;
  bool first = true;
  for (const auto& x : seq) {
    if (!first) out += sep;
    out += fmt(x);
    first = false;
  }
  return out;
}

std::string tuple_str(const std::vector<Integer>& v) {
  return "(" + join(v, [](const Integer& x) { return x.get_str(); }) + ")";
}

std::string tuple_str(const ScalingVector& v) {
  return "(" + join(v, [](int x) { return std::to_string(x); }) + ")";
}

std::string qstr(const QuadExt& x) { return x.str(); }

std::string expansion_str(const std::array<QuadExt, kDim>& c) {
  std::string out;
  for (int k = 0; k < kDim; ++k) {
    if (c[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c[k].str() + ")*b" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::string violation_str(const Violation& v) {
  return "c[" + std::to_string(v.i) + "][" + std::to_string(v.j) + "][" + std::to_string(v.k) + "]=" +
         v.coefficient.str();
}

struct Builder {
  const Algebra& alg;
  std::vector<CheckReport> out;

  void add(std::string id, std::string anchor, Status st, std::string expected, Provenance p, std::string actual,
           std::string details = {}) {
    out.push_back({std::move(id), std::move(anchor), alg.convention_id(), st, {std::move(expected), p},
                   std::move(actual), std::move(details)});
  }
  void check(std::string id, std::string anchor, bool ok, std::string expected, Provenance p, std::string actual,
             std::string details = {}) {
    add(std::move(id), std::move(anchor), pass_if(ok), std::move(expected), p, std::move(actual), std::move(details));
  }
  /// Equality is reported as pass; a mismatch is recorded but not a failure.
  void diff(std::string id, std::string anchor, bool equal, std::string expected, Provenance p, std::string actual,
            std::string details = {}) {
    add(std::move(id), std::move(anchor), equal ? Status::Pass : Status::DiffRecorded, std::move(expected), p,
        std::move(actual), std::move(details));
  }
};

std::string count_str(std::size_t ok, std::size_t total) { return std::to_string(ok) + "/" + std::to_string(total); }

AlgebraElem sample_elem(std::uint64_t seed, std::size_t index) { return sample_coords(seed, index); }

/// Solves u o b = f(b) and b o u = f(b) for all basis b; true if some u exists.
template <typename Mul, typename Target>
bool has_two_sided(const Mul& mul, const Target& target) {
  Matrix<QuadExt> rows(kDim);
  std::vector<QuadExt> rhs;
  for (int k = 0; k < kDim; ++k)
    for (int b = 0; b < kDim; ++b) {
      for (const auto& v : mul(basis_elem(k), basis_elem(b))) rows[k].push_back(v);
      for (const auto& v : mul(basis_elem(b), basis_elem(k))) rows[k].push_back(v);
    }
  for (int b = 0; b < kDim; ++b)
    for (int t = 0; t < 2; ++t)
      for (const auto& v : target(basis_elem(b))) rhs.push_back(v);
  return coordinates_in(rows, rhs).has_value();
}

}  // namespace

std::vector<CheckReport> check_para_closure(const Algebra& alg, const std::optional<StructureConstants>& fixture) {
  Builder b{alg, {}};
  const StructureConstants sc = fixture ? *fixture : structure_constants(alg, Product::Para, cd_basis(alg));
  const auto rep = closure_test(sc, RingTag::Z);
  b.check("para-closure", "the Coxeter-Dickson order is closed under the para-octonion product", rep.pass,
          "0 violations over Z", Provenance::Published, std::to_string(rep.violations.size()) + " violations over Z",
          rep.violations.empty() ? "" : "first " + violation_str(rep.violations.front()));
  if (fixture) return b.out;
  bool rational = true;
  for (const auto& a : sc.c)
    for (const auto& r : a)
      for (const auto& x : r) rational = rational && x.is_rational();
  b.check("para-constants-rational", "para-octonion structure constants have no sqrt 3 part", rational, "true",
          Provenance::Trivial, rational ? "true" : "false");
  b.check("para-reconstruction", "para-octonion structure constants reproduce every basis product",
          reconstruction_holds(alg, sc), "64/64", Provenance::Derived,
          reconstruction_holds(alg, sc) ? "64/64" : "mismatch");
  const auto oc = structure_constants(alg, Product::Octonion, cd_basis(alg));
  const auto orep = closure_test(oc, RingTag::Z);
  b.check("octonion-closure", "the Coxeter-Dickson order is closed under octonion multiplication", orep.pass,
          "0 violations over Z", Provenance::Published, std::to_string(orep.violations.size()) + " violations over Z");
  return b.out;
}

std::vector<CheckReport> check_okubo_obstruction(const Algebra& alg) {
  Builder b{alg, {}};
  const OrderBasis cd = cd_basis(alg);
  const auto sc = structure_constants(alg, Product::Okubo, cd);
  const auto rz = closure_test(sc, RingTag::Z);
  const auto rr = closure_test(sc, RingTag::Zsqrt3);
  const Violation* witness = nullptr;
  for (const auto& v : rr.violations)
    if (is_half_odd_sqrt3(v.coefficient)) {
      witness = &v;
      break;
    }
  b.check("okubo-obstruction", "the Coxeter-Dickson order is not closed under the Okubo product",
          !rz.pass && !rr.pass && witness != nullptr,
          "some c_ij^k outside Z[sqrt3] with sqrt3 part odd/2", Provenance::Published,
          std::to_string(rz.violations.size()) + " violations over Z, " + std::to_string(rr.violations.size()) +
              " over Z[sqrt3]",
          witness ? "witness " + violation_str(*witness) : "no half-odd sqrt3 witness");
  const auto got = okubo_b0_b2(alg);
  const auto pub = published_b0_b2();
  std::string delta;
  for (int k = 0; k < kDim; ++k)
    if (got[k] != pub[k]) delta += " b" + std::to_string(k) + ": " + pub[k].str() + " vs " + got[k].str() + ";";
  b.diff("okubo-b0-b2", "explicit expansion of b0 * b2 in the Coxeter-Dickson basis", got == pub,
         expansion_str(pub), Provenance::Published, expansion_str(got),
         delta.empty() ? "coefficientwise equal" : "differs:" + delta);
  const auto dens = denominators(sc);
  bool in124 = true;
  for (const auto& d : dens) in124 = in124 && (d == 1 || d == 2 || d == 4);
  b.check("okubo-denominators", "Okubo structure constants in the Coxeter-Dickson basis have denominators in {1,2,4}",
          in124, "subset of {1,2,4}", Provenance::Published, "{" + join(dens, [](const Integer& x) { return x.get_str(); }) + "}",
          "512 constants");
  const bool rec = reconstruction_holds(alg, sc);
  b.check("okubo-reconstruction", "Okubo structure constants reproduce every basis product", rec, "64/64",
          Provenance::Derived, rec ? "64/64" : "mismatch");
  bool has_irr = false;
  for (const auto& a : sc.c)
    for (const auto& r : a)
      for (const auto& x : r) has_irr = has_irr || !x.is_rational();
  b.check("okubo-constants-irrational", "some Okubo structure constant has a sqrt 3 part", has_irr, "true",
          Provenance::Published, has_irr ? "true" : "false");
  return b.out;
}

std::vector<CheckReport> check_scaling_search(const Algebra& alg, int max_exp) {
  Builder b{alg, {}};
  const OrderBasis cd = cd_basis(alg);
  const auto sc = structure_constants(alg, Product::Okubo, cd);
  try {
    const auto res = scaling_search(sc, max_exp);
    const bool unique = res.minimal.size() == 1 && res.minimal[0] == kOkuboScaling;
    b.check("scaling-search", "unique componentwise-minimal 2-adic scaling for R-integrality", unique,
            "{(1,1,1,1,2,2,2,2)}", Provenance::Published,
            "{" + join(res.minimal, [](const ScalingVector& v) { return tuple_str(v); }) + "}",
            "max_exp=" + std::to_string(max_exp) + " solutions=" + std::to_string(res.solutions) +
                " nodes=" + std::to_string(res.nodes));
  } catch (const NoScalingError& e) {
    b.check("scaling-search", "unique componentwise-minimal 2-adic scaling for R-integrality", false,
            "{(1,1,1,1,2,2,2,2)}", Provenance::Published, "no solution", e.what());
  }
  std::size_t broken = 0;
  std::size_t lowered = 0;
  for (int t = 0; t < kDim; ++t) {
    ScalingVector a = kOkuboScaling;
    if (a[t] == 0) continue;
    --a[t];
    ++lowered;
    if (!scaling_is_integral(sc, a)) ++broken;
  }
  b.check("scaling-minimality", "lowering any exponent of (1,1,1,1,2,2,2,2) breaks R-integrality",
          broken == lowered && scaling_is_integral(sc, kOkuboScaling), count_str(lowered, lowered),
          Provenance::Derived, count_str(broken, lowered));
  const auto oc = structure_constants(alg, Product::Octonion, cd);
  const auto ores = scaling_search(oc, max_exp);
  const bool zero_min = ores.minimal.size() == 1 && ores.minimal[0] == ScalingVector{};
  b.check("scaling-octonion", "octonion constants are already integral, so the zero scaling is the minimum",
          zero_min, "{(0,0,0,0,0,0,0,0)}", Provenance::Derived,
          "{" + join(ores.minimal, [](const ScalingVector& v) { return tuple_str(v); }) + "}");
  return b.out;
}

std::vector<CheckReport> check_scaled_order(const Algebra& alg) {
  Builder b{alg, {}};
  const auto rep = scaled_order_verify(alg, kOkuboScaling);
  b.check("scaled-order", "the scaled Okubo order O0 is closed under the Okubo product over Z[sqrt3]",
          rep.violations.empty(), "0 of 512 constants outside Z[sqrt3]", Provenance::Published,
          std::to_string(rep.violations.size()) + " of 512 constants outside Z[sqrt3]",
          rep.violations.empty() ? "" : "first " + violation_str(rep.violations.front()));
  std::size_t bad = 0;
  for (const auto* vals : {&rep.trace_values, &rep.norm_values})
    for (const auto& v : *vals)
      if (!is_member(v, RingTag::Zsqrt3)) ++bad;
  const std::size_t total = rep.trace_values.size() + rep.norm_values.size();
  b.check("scaled-order-forms", "relative trace, norm and bilinear form are Z[sqrt3]-valued on the scaled basis",
          bad == 0, count_str(total, total) + " in Z[sqrt3]", Provenance::Published,
          count_str(total - bad, total) + " in Z[sqrt3]", "tr_e(u_i), n(u_i), <u_i,u_j>, tr_e(u_i*u_j)");
  const OrderBasis u = scaled_basis(cd_basis(alg), kOkuboScaling);
  const QuadExt n0 = norm(u.b[0]);
  const QuadExt g44 = inner(u.b[4], u.b[4]);
  b.check("scaled-order-samples", "n(u0) = 4 and <u4,u4> = 32", n0 == QuadExt(4) && g44 == QuadExt(32),
          "n(u0)=4 <u4,u4>=32", Provenance::Derived, "n(u0)=" + n0.str() + " <u4,u4>=" + g44.str());
  return b.out;
}

std::vector<CheckReport> check_algebra_laws(const Algebra& alg, std::uint64_t seed) {
  Builder b{alg, {}};
  const std::size_t samples = kDefaultSamples;
  for (Product p : {Product::Octonion, Product::Para, Product::Okubo}) {
    std::size_t ok = 0;
    std::size_t total = 0;
    auto test = [&](const AlgebraElem& x, const AlgebraElem& y) {
      ++total;
      const AlgebraElem xy = alg.mul(p, x, y);
      const bool zero_ok = is_zero(x) || is_zero(y) || !is_zero(xy);
      if (norm(xy) == norm(x) * norm(y) && zero_ok) ++ok;
    };
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) test(basis_elem(i), basis_elem(j));
    for (std::size_t s = 0; s < samples; ++s) test(sample_elem(seed, 2 * s), sample_elem(seed, 2 * s + 1));
    b.check("algebra-composition-" + std::string(to_string(p)),
            "n(x o y) = n(x) n(y) and no zero divisors for the " + std::string(to_string(p)) + " product",
            ok == total, count_str(total, total), Provenance::Derived, count_str(ok, total),
            "64 basis pairs and " + std::to_string(samples) + " seeded samples");
  }
  {
    std::size_t ok = 0;
    std::size_t total = 0;
    auto test = [&](const AlgebraElem& x, const AlgebraElem& y) {
      ++total;
      if (alg.oct_mul(x, alg.oct_mul(x, y)) == alg.oct_mul(alg.oct_mul(x, x), y) &&
          alg.oct_mul(alg.oct_mul(y, x), x) == alg.oct_mul(y, alg.oct_mul(x, x)))
        ++ok;
    };
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) test(basis_elem(i), basis_elem(j));
    for (std::size_t s = 0; s < samples; ++s) test(sample_elem(seed, 2 * s), sample_elem(seed, 2 * s + 1));
    b.check("algebra-octonion-alternative", "the octonion product is alternative", ok == total,
            count_str(total, total), Provenance::Trivial, count_str(ok, total));
  }
  {
    std::size_t ok = 0;
    std::size_t total = 0;
    std::string witness;
    auto test = [&](const AlgebraElem& x, const AlgebraElem& y) {
      ++total;
      if (alg.okubo_mul(x, alg.okubo_mul(y, x)) == alg.okubo_mul(alg.okubo_mul(x, y), x)) ++ok;
      if (witness.empty() && alg.okubo_mul(x, alg.okubo_mul(x, y)) != alg.okubo_mul(alg.okubo_mul(x, x), y))
        witness = "x=" + to_string(x) + " y=" + to_string(y);
    };
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) test(basis_elem(i), basis_elem(j));
    for (std::size_t s = 0; s < samples; ++s) test(sample_elem(seed, 2 * s), sample_elem(seed, 2 * s + 1));
    b.check("algebra-okubo-flexible", "the Okubo product is flexible", ok == total, count_str(total, total),
            Provenance::Published, count_str(ok, total));
    b.check("algebra-okubo-not-alternative", "the Okubo product is not alternative", !witness.empty(),
            "a witness pair", Provenance::Published, witness.empty() ? "none found" : "found", witness);
  }
  auto okubo = [&](const AlgebraElem& x, const AlgebraElem& y) { return alg.okubo_mul(x, y); };
  auto para = [&](const AlgebraElem& x, const AlgebraElem& y) { return alg.para_mul(x, y); };
  auto ident = [](const AlgebraElem& x) { return x; };
  auto bar = [](const AlgebraElem& x) { return conj(x); };
  const bool ok_unit = has_two_sided(okubo, ident);
  const bool ok_para = has_two_sided(okubo, bar);
  b.check("algebra-okubo-no-unit", "the Okubo algebra has neither a unit nor a paraunit", !ok_unit && !ok_para,
          "no solution", Provenance::Published,
          std::string(ok_unit ? "unit exists" : "no unit") + ", " + (ok_para ? "paraunit exists" : "no paraunit"),
          "linear systems u*x = x, x*u = x and u*x = conj(x), x*u = conj(x) solved exactly over K");
  const bool p_unit = has_two_sided(para, ident);
  bool paraunit = true;
  for (int k = 0; k < kDim; ++k) paraunit = paraunit && alg.para_mul(basis_elem(0), basis_elem(k)) == conj(basis_elem(k));
  for (std::size_t s = 0; s < samples; ++s) {
    const AlgebraElem x = sample_elem(seed, s);
    paraunit = paraunit && alg.para_mul(basis_elem(0), x) == conj(x) && alg.para_mul(x, basis_elem(0)) == conj(x);
  }
  b.check("algebra-para-paraunit", "1 is a paraunit: 1 o x = x o 1 = conj(x)", paraunit, "true", Provenance::Trivial,
          paraunit ? "true" : "false");
  b.check("algebra-para-no-unit", "the para-octonions have no two-sided unit", !p_unit, "no solution",
          Provenance::Trivial, p_unit ? "unit exists" : "no unit");
  {
    const QuadExt h(Rational(1, 2));
    const AlgebraElem v1 = h * (basis_elem(1) + basis_elem(2) + basis_elem(3));
    const AlgebraElem v2 = QuadExt(Rational(0), Rational(1, 2)) * basis_elem(5);
    const AlgebraElem v3 = basis_elem(1);
    const bool r1 = para_idempotent_check(alg, v1);
    const bool r2 = para_idempotent_check(alg, v2);
    const bool r3 = para_idempotent_check(alg, v3);
    std::size_t sphere = 0;
    std::size_t sphere_ok = 0;
    for (int i = 1; i < kDim; ++i)
      for (int j = i + 1; j < kDim; ++j)
        for (int k = j + 1; k < kDim; ++k) {
          ++sphere;
          if (para_idempotent_check(alg, h * (basis_elem(i) + basis_elem(j) - basis_elem(k)))) ++sphere_ok;
        }
    b.check("algebra-para-idempotents", "x = -1/2 + v is a para-idempotent exactly when n(v) = 3/4",
            r1 && r2 && !r3 && sphere_ok == sphere, "true,true,false; " + count_str(sphere, sphere),
            Provenance::Derived,
            std::string(r1 ? "true" : "false") + "," + (r2 ? "true" : "false") + "," + (r3 ? "true" : "false") +
                "; " + count_str(sphere_ok, sphere),
            "v = (e1+e2+e3)/2, (sqrt3/2) e5, e1; then (e_i+e_j-e_k)/2 for all triples");
  }
  return b.out;
}

std::vector<CheckReport> check_bridges(const Algebra& alg, std::uint64_t seed) {
  Builder b{alg, {}};
  const AlgebraElem one = basis_elem(0);
  auto tau = [&](const AlgebraElem& x, int p = 1) { return alg.tau(x, p); };
  auto ok = [&](const AlgebraElem& x, const AlgebraElem& y) { return alg.okubo_mul(x, y); };
  auto pa = [&](const AlgebraElem& x, const AlgebraElem& y) { return alg.para_mul(x, y); };
  auto oc = [&](const AlgebraElem& x, const AlgebraElem& y) { return alg.oct_mul(x, y); };

  struct Binary {
    const char* id;
    const char* anchor;
    std::function<bool(const AlgebraElem&, const AlgebraElem&)> holds;
  };
  const std::vector<Binary> binary = {
      {"bridge-okubo-from-para", "x * y = tau(x) o tau^2(y)",
       [&](const auto& x, const auto& y) { return ok(x, y) == pa(tau(x), tau(y, 2)); }},
      {"bridge-para-from-okubo", "x o y = tau^2(x) * tau(y)",
       [&](const auto& x, const auto& y) { return pa(x, y) == ok(tau(x, 2), tau(y)); }},
      {"bridge-octonion-from-para", "x . y = (1 o x) o (y o 1)",
       [&](const auto& x, const auto& y) { return oc(x, y) == pa(pa(one, x), pa(y, one)); }},
  };
  for (const auto& br : binary) {
    std::size_t good = 0;
    std::string witness;
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) {
        if (br.holds(basis_elem(i), basis_elem(j)))
          ++good;
        else if (witness.empty())
          witness = "e" + std::to_string(i) + ",e" + std::to_string(j);
      }
    std::size_t sgood = 0;
    for (std::size_t s = 0; s < kDefaultSamples; ++s)
      if (br.holds(sample_elem(seed, 2 * s), sample_elem(seed, 2 * s + 1))) ++sgood;
    b.check(br.id, br.anchor, good == 64 && sgood == kDefaultSamples, "64/64", Provenance::Published,
            count_str(good, 64), "samples " + count_str(sgood, kDefaultSamples) + (witness.empty() ? "" : "; first failure " + witness));
  }
  struct Unary {
    const char* id;
    const char* anchor;
    std::function<bool(const AlgebraElem&)> holds;
  };
  const std::vector<Unary> unary = {
      {"bridge-tau-from-conj", "tau(x) = conj(x) * e with e = 1",
       [&](const auto& x) { return tau(x) == ok(conj(x), one); }},
      {"bridge-conj-from-tau", "conj(x) = tau(e * x) with e = 1",
       [&](const auto& x) { return conj(x) == tau(ok(one, x)); }},
      {"bridge-conj-cube", "conj(x) = ((x * e) * e) * e with e = 1",
       [&](const auto& x) { return conj(x) == ok(ok(ok(x, one), one), one); }},
      {"bridge-tau-fourth", "tau(x) = (((x * e) * e) * e) * e with e = 1",
       [&](const auto& x) { return tau(x) == ok(ok(ok(ok(x, one), one), one), one); }},
  };
  for (const auto& br : unary) {
    std::size_t good = 0;
    for (int i = 0; i < kDim; ++i)
      if (br.holds(basis_elem(i))) ++good;
    std::size_t sgood = 0;
    for (std::size_t s = 0; s < kDefaultSamples; ++s)
      if (br.holds(sample_elem(seed, s))) ++sgood;
    b.check(br.id, br.anchor, good == kDim && sgood == kDefaultSamples, "8/8", Provenance::Published,
            count_str(good, kDim), "samples " + count_str(sgood, kDefaultSamples));
  }
  return b.out;
}

std::vector<CheckReport> check_tau(const Algebra& alg) {
  Builder b{alg, {}};
  const AutMatrix t = tau_matrix();
  const AutMatrix t3 = mat_mul(t, mat_mul(t, t));
  const bool order3 = t3 == identity_matrix() && t != identity_matrix() && mat_mul(t, t) != identity_matrix();
  b.check("tau-order", "tau has order exactly 3", order3, "tau^3 = id, tau != id, tau^2 != id", Provenance::Published,
          order3 ? "tau^3 = id, tau != id, tau^2 != id" : "order is not 3");
  std::size_t aut = 0;
  std::size_t iso = 0;
  for (int i = 0; i < kDim; ++i) {
    if (norm(alg.tau(basis_elem(i))) == QuadExt(1)) ++iso;
    for (int j = 0; j < kDim; ++j)
      if (alg.tau(alg.oct_mul(basis_elem(i), basis_elem(j))) ==
          alg.oct_mul(alg.tau(basis_elem(i)), alg.tau(basis_elem(j))))
        ++aut;
  }
  // Isometry on all pairs via the Gram.
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (inner(alg.tau(basis_elem(i)), alg.tau(basis_elem(j))) != inner(basis_elem(i), basis_elem(j))) iso = 0;
  b.check("tau-automorphism", "tau is an automorphism of the octonion product", aut == 64, "64/64",
          Provenance::Published, count_str(aut, 64));
  b.check("tau-isometry", "tau preserves the norm form", iso == kDim, "8/8 and Gram preserved", Provenance::Published,
          iso == kDim ? "8/8 and Gram preserved" : "not an isometry");
  const AlgebraElem t2 = alg.tau(basis_elem(2));
  const AlgebraElem want = QuadExt(Rational(-1, 2)) * basis_elem(2) + QuadExt(Rational(0), Rational(1, 2)) * basis_elem(5);
  b.check("tau-e2", "tau(e2) = -1/2 e2 + (sqrt3/2) e5", t2 == want, to_string(want), Provenance::Published,
          to_string(t2));
  const auto tm = tau_membership(alg);
  b.check("tau-okubo-automorphism", "tau preserves the Okubo product over K", tm.automorphism_pairs == 64, "64/64",
          Provenance::Derived, count_str(tm.automorphism_pairs, 64));
  auto coords = [](const std::array<QuadExt, kDim>& c) { return "(" + join(c, qstr) + ")"; };
  b.check("tau-not-stabilizer", "tau(u2) leaves the scaled order O0", tm.outside_order,
          "some coordinate outside Z[sqrt3]", Provenance::Published, tm.outside_order ? "outside" : "inside",
          "tau(u2) = " + coords(tm.tau_u2) + "; tau^2(u2) = " + coords(tm.tau2_u2));
  const QuadExt pub1(Rational(0), Rational(-3, 2));
  const QuadExt pub2(Rational(0), Rational(3, 2));
  b.diff("tau-u2-u0", "u0-coefficient of tau(u2)", tm.tau_u2[0] == pub1, pub1.str(), Provenance::Published,
         tm.tau_u2[0].str());
  b.diff("tau2-u2-u0", "u0-coefficient of tau^2(u2)", tm.tau2_u2[0] == pub2, pub2.str(), Provenance::Published,
         tm.tau2_u2[0].str());
  return b.out;
}

std::vector<CheckReport> check_matrix_laws(const Algebra& alg, std::uint64_t seed) {
  Builder b{alg, {}};
  const auto r = verify_laws(kDefaultSamples, seed);
  const std::size_t total = 64 + r.samples;
  auto zero = [&](const char* id, const char* anchor, std::size_t failures, Provenance p) {
    b.check(id, anchor, failures == 0, count_str(total, total), p, count_str(total - failures, total),
            "64 basis pairs and " + std::to_string(r.samples) + " seeded samples");
  };
  const MatrixBasis mb = build_basis();
  b.check("matrix-idempotent", "e = diag(2,-1,-1) satisfies e * e = e and n(e) = 1",
          r.idempotent && matrix_norm(mb.e) == QuadExt(1), "true", Provenance::Published,
          r.idempotent ? "true" : "false");
  zero("matrix-type-closure", "products stay Hermitian traceless", r.type_failures + r.trace_failures,
       Provenance::Derived);
  zero("matrix-flexible", "x * (y * x) = (x * y) * x in the matrix model", r.flexibility_failures,
       Provenance::Published);
  zero("matrix-composition", "n(x * y) = n(x) n(y) with n(x) = Tr(x^2)/6", r.composition_failures,
       Provenance::Derived);
  zero("matrix-form-associative", "<x * z, y> = <x, z * y>", r.form_assoc_failures, Provenance::Published);
  const std::string sig = r.signature ? "(" + std::to_string(r.signature->first) + "," +
                                            std::to_string(r.signature->second) + ")"
                                      : "degenerate";
  b.check("matrix-signature", "the norm on span(e, e1..e7) has signature (8,0)", sig == "(8,0)", "(8,0)",
          Provenance::Published, sig,
          "Gram: " + join(r.gram, [](const std::vector<QuadExt>& row) { return "[" + join(row, qstr) + "]"; }, " "));
  b.check("matrix-no-unit", "the matrix Okubo algebra has no two-sided unit", !r.has_unit, "no solution",
          Provenance::Published, r.has_unit ? "unit exists" : "no unit", "linear system solved exactly over K");
  b.check("matrix-kaplansky-unit", "e is a two-sided unit for x . y = (e * x) * (y * e)", r.kaplansky_unit_failures == 0,
          "8/8", Provenance::Published, count_str(kDim - r.kaplansky_unit_failures, kDim));
  zero("matrix-kaplansky-alternative", "the Kaplansky product is alternative", r.kaplansky_alternative_failures,
       Provenance::Derived);
  zero("matrix-kaplansky-composition", "the Kaplansky product is a composition product",
       r.kaplansky_composition_failures, Provenance::Published);
  b.check("matrix-jordan-fixture", "mu = 1/2 without the trace term gives a commutative product that leaves the type",
          r.jordan_commutative_failures == 0 && r.jordan_leaves_type, "commutative, not closed", Provenance::Published,
          std::string(r.jordan_commutative_failures == 0 ? "commutative" : "not commutative") + ", " +
              (r.jordan_leaves_type ? "not closed" : "closed"));
  const auto cr = cross_realization(alg);
  std::string detail = "raw basis orthonormal: " + std::string(cr.raw_basis_orthonormal ? "yes" : "no") +
                       "; e->1, e_k->e_k intertwines " + count_str(cr.raw_matches, 64) +
                       "; orthonormalized basis (e4 -> 2e4 - sqrt3 e) intertwines " +
                       count_str(cr.orthonormal_matches, 64);
  if (cr.intertwiner) {
    detail += "; signed permutation intertwiner f_k -> ";
    for (int k = 0; k < kDim; ++k)
      detail += (cr.intertwiner->sign[k] < 0 ? "-e" : "e") + std::to_string(cr.intertwiner->perm[k]) +
                (k + 1 < kDim ? " " : "");
  } else {
    detail += "; no signed permutation of the orthonormalized basis intertwines";
  }
  b.check("matrix-petersson-isomorphism", "the matrix model is isomorphic to the Petersson Okubo algebra",
          cr.intertwiner.has_value(), "a signed permutation of an orthonormal basis intertwines the products",
          Provenance::Derived, cr.intertwiner ? "found" : "none", detail);
  b.diff("matrix-cross-realization", "the matrix basis corresponds to the Petersson basis", cr.raw_matches == 64,
         "64/64 under e->1, e_k->e_k", Provenance::Published, count_str(cr.raw_matches, 64), detail);
  return b.out;
}

std::vector<CheckReport> check_e8(const Algebra& alg) {
  Builder b{alg, {}};
  const auto cd = cd_basis_and_gram(alg);
  const bool even = is_even(cd.gram);
  b.check("cd-gram", "the Coxeter-Dickson Gram is even unimodular with 240 roots",
          cd.det == Rational(1) && even && cd.minimum == Rational(2) && cd.kissing == 240, "det=1 even min=2 roots=240",
          Provenance::Published,
          "det=" + cd.det.str() + (even ? " even" : " odd") + " min=" + cd.minimum.str() +
              " roots=" + std::to_string(cd.kissing));
  auto mism = [](const std::vector<PolyMismatch>& v) {
    return join(v, [](const PolyMismatch& m) {
      const std::string term = m.j < 0 ? "a" + std::to_string(m.i)
                                       : (m.i == m.j ? "a" + std::to_string(m.i) + "^2"
                                                     : "a" + std::to_string(m.i) + "a" + std::to_string(m.j));
      return term + ": " + m.published.str() + " vs " + m.computed.str();
    }, "; ");
  };
  b.diff("cd-norm-polynomial", "explicit norm polynomial of the Coxeter-Dickson order", cd.norm_mismatches.empty(),
         "published coefficients", Provenance::Published,
         std::to_string(cd.norm_mismatches.size()) + " coefficient(s) differ", mism(cd.norm_mismatches));
  b.diff("cd-trace-polynomial", "tr(x) = 2a0 - a5 - a6 - a7", cd.trace_mismatches.empty(), "2a0-a5-a6-a7",
         Provenance::Published,
         "(" + join(cd.trace_poly, [](const Rational& q) { return q.str(); }) + ")", mism(cd.trace_mismatches));
  const auto u = units240(alg);
  b.check("units240-count", "the order has 240 units", u.units.size() == 240, "240", Provenance::Published,
          std::to_string(u.units.size()));
  b.check("units240-closure", "the 240 units are closed under multiplication and inversion",
          u.products_not_units == 0 && u.missing_inverses == 0 && u.products_checked == 57600,
          "57600/57600 products are units, 240/240 inverses", Provenance::Derived,
          count_str(u.products_checked - u.products_not_units, u.products_checked) + " products are units, " +
              count_str(u.units.size() - u.missing_inverses, u.units.size()) + " inverses");
  b.diff("units240-shapes", "every listed shape of unit occurs (positional naming e0..e7 = 1,i,j,k,l,il,jl,kl)",
         u.missing_shapes.empty() && u.axes_present, "16 axis units and 14 half-unit shapes", Provenance::Published,
         std::to_string(14 - u.missing_shapes.size()) + "/14 shapes, axes " + (u.axes_present ? "present" : "missing"),
         join(u.missing_shapes, [](const std::array<int, 4>& s) {
           return "{" + join(s, [](int x) { return std::to_string(x); }) + "}";
         }, " "));
  return b.out;
}

std::vector<CheckReport> check_lattice_invariants(const Algebra& alg) {
  Builder b{alg, {}};
  const auto r = conductor_report(alg);
  b.check("conductor-index", "[Lambda : L_Ok] = |det D| = 4096", r.inv.index == 4096, "4096", Provenance::Published,
          r.inv.index.get_str());
  b.check("conductor-det", "det L_Ok = index^2 det Lambda = 2^24",
          r.inv.det_l == Rational(16777216) && r.inv.det_l == Rational(Integer(r.inv.index * r.inv.index)) * r.inv.det_m,
          "16777216", Provenance::Published, r.inv.det_l.str(), "det Lambda = " + r.inv.det_m.str());
  b.check("conductor-smith", "Smith invariants of L_Ok in Lambda", tuple_str(r.inv.smith) == "(2,2,2,2,4,4,4,4)",
          "(2,2,2,2,4,4,4,4)", Provenance::Published, tuple_str(r.inv.smith));
  const bool l_in_lambda = true;  // relative_coordinates succeeded
  b.check("conductor-chain", "4 Lambda in L_Ok in 2 Lambda in Lambda", r.inv.contains_4m && r.inv.inside_2m && l_in_lambda,
          "true", Provenance::Published,
          std::string("4L<L_Ok ") + (r.inv.contains_4m ? "yes" : "no") + ", L_Ok<2L " + (r.inv.inside_2m ? "yes" : "no"));
  b.check("conductor-even", "L_Ok is even and positive definite", r.even && r.positive_definite, "even, positive definite",
          Provenance::Published,
          std::string(r.even ? "even" : "odd") + ", " + (r.positive_definite ? "positive definite" : "not definite"));
  b.check("conductor-min", "min L_Ok = 8 attained by 2 b0, no roots of norm 2",
          r.minimum == Rational(8) && r.witness_2b0 && r.below_8 == 0 && r.norm_2 == 0,
          "min=8 witness=2b0 norm2=0", Provenance::Published,
          "min=" + r.minimum.str() + " witness=" + (r.witness_2b0 ? "2b0" : "none") +
              " norm2=" + std::to_string(r.norm_2),
          std::to_string(r.minimal_vectors) + " vectors of norm 8");
  const auto a = discriminant_group_and_form(conductor_lattice(alg));
  b.check("discriminant-group", "A_{L_Ok} = L_Ok*/L_Ok has order det L_Ok = 2^24",
          a.order() == 16777216 && tuple_str(a.invariants) == "(8,8,8,8,8,8,8,8)",
          "order 16777216, invariants (8,8,8,8,8,8,8,8)", Provenance::Derived,
          "order " + a.order().get_str() + ", invariants " + tuple_str(a.invariants));
  return b.out;
}

std::vector<CheckReport> check_glue_saturate(const Algebra& alg, bool glue, bool saturate) {
  Builder b{alg, {}};
  const auto r = glue_report(alg);
  if (glue) {
    b.check("glue-h-invariants", "H = Lambda/L_Ok is (Z/2)^4 + (Z/4)^4 of order 4096",
            tuple_str(r.h_invariants) == "(2,2,2,2,4,4,4,4)" && r.h_order == 4096 && r.h_elements == 4096,
            "(2,2,2,2,4,4,4,4) order 4096", Provenance::Published,
            tuple_str(r.h_invariants) + " order " + r.h_order.get_str(),
            std::to_string(r.h_elements) + " elements enumerated");
    b.check("glue-isotropic", "q(h) = 0 mod 2Z for every h in H", r.q_nonzero == 0 && r.h_elements == 4096,
            "4096/4096", Provenance::Published, count_str(r.h_elements - r.q_nonzero, r.h_elements));
    b.check("glue-maximal", "|H|^2 = |A_{L_Ok}|, so H is maximal isotropic", r.maximal, "16777216",
            Provenance::Published, Integer(r.h_order * r.h_order).get_str() + " vs " + r.discriminant.order().get_str());
    b.check("glue-unimodular", "gluing L_Ok along H gives an even unimodular lattice equal to Lambda",
            r.glued_even && r.glued_det == Rational(1) && r.glued_is_lambda, "even, det 1, equal to Lambda",
            Provenance::Published,
            std::string(r.glued_even ? "even" : "odd") + ", det " + r.glued_det.str() + ", " +
                (r.glued_is_lambda ? "equal to Lambda" : "not Lambda"));
  }
  if (saturate) {
    b.check("saturation-e8", "the 2-adic saturation of L_Ok in Lambda is Lambda", r.saturation_is_lambda,
            "Lambda (mutual containment, equal HNF)", Provenance::Published,
            r.saturation_is_lambda ? "Lambda (mutual containment, equal HNF)" : "proper sublattice");
    b.check("saturation-idempotent", "Sat_2(Sat_2(L_Ok)) = Sat_2(L_Ok)", r.saturation_idempotent, "true",
            Provenance::Trivial, r.saturation_idempotent ? "true" : "false");
    b.check("saturation-okubo-fails", "the saturated lattice is not closed under the Okubo product",
            !r.okubo_closed_on_saturation, "not closed", Provenance::Published,
            r.okubo_closed_on_saturation ? "closed" : "not closed",
            std::to_string(r.okubo_violations.size()) + " constants outside Z[sqrt3]" +
                (r.okubo_violations.empty() ? "" : "; first " + violation_str(r.okubo_violations.front())));
  }
  return b.out;
}

std::vector<CheckReport> check_shells(const Algebra& alg, int maxn) {
  Builder b{alg, {}};
  const GramMatrix g = rational_gram(cd_basis(alg));
  for (const auto& row : shell_counts_vs_sigma3(g, maxn)) {
    const std::string n = std::to_string(row.n);
    b.check("shells-n" + n, "number of elements of norm n is 240 sigma3(n)", row.match, row.formula.get_str(),
            Provenance::Published,
            "n=" + n + " count=" + std::to_string(row.count) + " formula=" + row.formula.get_str());
  }
  return b.out;
}

std::vector<CheckReport> check_trace16(const Algebra& alg) {
  Builder b{alg, {}};
  const auto r = trace_lattice_16(alg);
  b.check("trace16-even", "the rank-16 trace lattice is even", r.even, "true", Provenance::Published,
          r.even ? "true" : "false");
  b.check("trace16-posdef", "the rank-16 trace lattice is positive definite (exact pivots)", r.positive_definite,
          "true", Provenance::Published, r.positive_definite ? "true" : "false");
  b.check("trace16-min", "the rank-16 trace lattice has minimum 16 and no shorter vectors",
          r.minimum == Rational(16) && r.below_16 == 0, "16", Provenance::Published, r.minimum.str(),
          std::to_string(r.minimal_vectors) + " minimal vectors, " + std::to_string(r.below_16) + " below 16");
  return b.out;
}

std::vector<CheckReport> check_stabilizer(const Algebra& alg) {
  Builder b{alg, {}};
  const auto r = stabilizer_search(alg);
  auto list = [](const std::vector<SignedBlockPerm>& v) {
    return join(v, [](const SignedBlockPerm& g) {
      std::string s = "[";
      for (int a = 0; a < kDim; ++a)
        s += (g.sign[a] < 0 ? "-u" : "u") + std::to_string(g.perm[a]) + (a + 1 < kDim ? " " : "]");
      return s;
    }, " ");
  };
  b.check("stabilizer-candidates", "the block signed-permutation class has 147456 candidates, all tested",
          r.candidates == kBlockCandidates, "147456", Provenance::Published, std::to_string(r.candidates));
  b.diff("stabilizer-metric", "exactly four candidates preserve the metric", r.metric.size() == 4, "4",
         Provenance::Published, std::to_string(r.metric.size()),
         "images of u0..u7: " + list(r.metric) + (r.metric_has_minus_identity ? "; contains -identity" : ""));
  const bool only_id = r.product.size() == 1 && r.product[0] == SignedBlockPerm::identity();
  b.diff("stabilizer-product", "only the identity also preserves the Okubo product", only_id, "{identity}",
         Provenance::Published, "{" + list(r.product) + "}");
  b.check("stabilizer-subset", "product-preserving candidates also preserve the metric", r.product_subset_metric,
          "true", Provenance::Derived, r.product_subset_metric ? "true" : "false");
  b.check("stabilizer-group", "the metric-preserving candidates form a group", r.metric_is_group, "true",
          Provenance::Derived, r.metric_is_group ? "true" : "false");
  return b.out;
}

std::vector<CheckReport> check_catalog(const Algebra& alg, std::string_view name) {
  Builder b{alg, {}};
  std::vector<std::string> names;
  if (name == "all")
    names = classical_names();
  else
    names.emplace_back(name);
  for (const auto& n : names) {
    const auto spec = build_classical(alg, n);
    const auto r = verify_classical(alg, spec);
    const std::string id = "catalog-" + n;
    b.check(id + "-units", "unit count of the " + n + " integers", r.units == spec.expected_units,
            std::to_string(spec.expected_units), Provenance::Published, std::to_string(r.units));
    b.check(id + "-closure", "units closed with inverses; basis products integral",
            r.unit_products_outside == 0 && r.missing_inverses == 0 && r.constant_violations == 0, "0 violations",
            Provenance::Derived,
            std::to_string(r.unit_products_outside + r.missing_inverses + r.constant_violations) + " violations");
    b.check(id + "-integrality", "traces, norms and inner products are integers", r.trace_norm_violations == 0,
            "0 violations", Provenance::Published, std::to_string(r.trace_norm_violations) + " violations");
    const std::string want = spec.lattice + " det=" + spec.expected_det.get_str() + " min=" +
                             spec.expected_min.get_str() + " kissing=" + std::to_string(spec.expected_kissing);
    const std::string got = spec.lattice + " det=" + r.det.str() + " min=" + r.minimum.str() +
                            " kissing=" + std::to_string(r.kissing);
    b.check(id + "-lattice", "lattice invariant triple of the " + n + " integers", want == got, want,
            Provenance::Published, got);
  }
  return b.out;
}

std::vector<CheckReport> check_all(const Algebra& alg, std::uint64_t seed) {
  std::vector<CheckReport> out;
  auto add = [&](std::vector<CheckReport> v) { out.insert(out.end(), v.begin(), v.end()); };
  add(check_para_closure(alg));
  add(check_okubo_obstruction(alg));
  add(check_scaling_search(alg));
  add(check_scaled_order(alg));
  add(check_algebra_laws(alg, seed));
  add(check_bridges(alg, seed));
  add(check_tau(alg));
  add(check_matrix_laws(alg, seed));
  add(check_e8(alg));
  add(check_lattice_invariants(alg));
  add(check_glue_saturate(alg, true, true));
  add(check_shells(alg, 4));
  add(check_trace16(alg));
  add(check_stabilizer(alg));
  add(check_catalog(alg, "all"));
  return sorted(std::move(out));
}

}  // namespace okubo
