// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "gen.hpp"
#include "hensel/cli/commands.hpp"
#include "hensel/cli/parser.hpp"
#include "hensel/error.hpp"
#include "hensel/etale.hpp"
#include "hensel/hensel.hpp"
#include "hensel/linalg.hpp"
#include "hensel/newton.hpp"
#include "oracles.hpp"
#include "process.hpp"

using namespace hensel;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Records the first failure; later ones only bump the count.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary + ", " + std::to_string(checks_) + " checks"};
    return {false, std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed; first: " + first_};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_;
};

Element e(const Field& f, long v) { return Element::integer(f, v); }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Independent evaluation of truncated polynomials and their partial derivatives.

Truncated eval_term(const Truncated& c, const Monomial& m, const std::vector<Truncated>& x, std::optional<std::size_t> d) {
  Truncated acc = c;
  for (std::size_t i = 0; i < x.size(); ++i) {
    unsigned k = m[i];
    if (d && *d == i) {
      if (k == 0) return c.zero();
      acc = acc * c.from_int(static_cast<long>(k));
      --k;
    }
    for (unsigned j = 0; j < k; ++j) acc = acc * x[i];
  }
  return acc;
}

Truncated eval_poly(const MultiPoly<Truncated>& f, const std::vector<Truncated>& x,
                    std::optional<std::size_t> d = std::nullopt) {
  Truncated acc = x.front().zero();
  for (const auto& [m, c] : f.terms()) acc = acc + eval_term(c, m, x, d);
  return acc;
}

bool zero_mod(const Truncated& x, long e) { return x.reduce(e).is_zero(); }

/// Re-checks every congruence family of a certificate from scratch.
bool congruences_hold(const NewtonSystem& s, const LiftCertificate& cert, std::string& why) {
  const long N = cert.precision;
  const std::size_t n = s.size();
  const auto polys = truncate_system(s, N);
  const auto& steps = cert.steps;
  if (steps.empty()) {
    why = "empty certificate";
    return false;
  }
  const long last = static_cast<long>(steps.size()) - 1;
  if (last >= 62 || (1L << last) < N || (last > 0 && (1L << (last - 1)) >= N)) {
    why = "schedule";
    return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(steps[0].point[i] - s.point[i].truncate(N)).reduce(N).is_zero()) {
      why = "seed";
      return false;
    }
  }
  for (long m = 0; m <= last; ++m) {
    const auto& st = steps[static_cast<std::size_t>(m)];
    const long e = std::min(N, 1L << m);
    for (const auto& f : polys) {
      if (!zero_mod(eval_poly(f, st.point), e)) {
        why = "residual at step " + std::to_string(m);
        return false;
      }
    }
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        Truncated acc = st.point.front().zero();
        for (std::size_t k = 0; k < n; ++k) acc = acc + st.inverse(r, k) * eval_poly(polys[k], st.point, c);
        if (r == c) acc = acc - acc.one();
        if (!zero_mod(acc, e)) {
          why = "inverse-jacobian at step " + std::to_string(m);
          return false;
        }
      }
    }
    if (m == last) break;
    const auto& nx = steps[static_cast<std::size_t>(m + 1)];
    for (std::size_t i = 0; i < n; ++i) {
      if (!zero_mod(nx.point[i] - st.point[i], e)) {
        why = "point-step at step " + std::to_string(m);
        return false;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (!zero_mod(nx.inverse(i, j) - st.inverse(i, j), e)) {
          why = "inverse-step at step " + std::to_string(m);
          return false;
        }
      }
    }
  }
  return true;
}

bool is_zero_of(const NewtonSystem& s, const std::vector<Truncated>& z) {
  for (const auto& f : truncate_system(s, z.front().precision())) {
    if (!eval_poly(f, z).is_zero()) return false;
  }
  return true;
}

bool root_mod(const ExactPoly& f, const Truncated& x) {
  Truncated acc = x.zero();
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * x + it->truncate(x.precision());
  return acc.is_zero();
}

Outcome criterion_1() {
  gen::Rng rng(1001);
  Tally t;
  const auto start = Clock::now();
  int systems = 0;
  for (const Field& f : gen::fields()) {
    for (int i = 0; i < 13; ++i) {
      const std::size_t n = static_cast<std::size_t>(1 + i % 3);
      const NewtonSystem s = gen::newton_system(rng, f, n, 3);
      const NewtonResult r = newton_solve(s, 32);
      const CertificateCheck lib = verify_certificate(s, r.certificate);
      t.check(lib.valid, f.descriptor() + " verify_certificate: " + lib.family + " " + lib.detail);
      std::string why;
      t.check(congruences_hold(s, r.certificate, why), f.descriptor() + " independent check: " + why);
      t.check(is_zero_of(s, r.zero), f.descriptor() + " zero does not vanish mod pi^32");
      ++systems;
    }
  }
  const double secs = seconds_since(start);
  t.check(systems >= 50, "fewer than 50 systems");
  t.check(secs < 10.0, "took " + std::to_string(secs) + " s");
  std::ostringstream s;
  s << systems << " systems at N = 32 in " << secs << " s";
  return t.outcome(s.str());
}

oracle::IntPoly random_int_poly(gen::Rng& rng, std::size_t n, unsigned deg) {
  oracle::IntPoly f;
  const long terms = gen::uniform(rng, 1, 4);
  for (long k = 0; k < terms; ++k) {
    std::vector<unsigned> exps(n, 0);
    const long budget = gen::uniform(rng, 0, deg);
    for (long b = 0; b < budget; ++b) exps[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<long>(n) - 1))]++;
    f.push_back({gen::uniform(rng, -6, 6), exps});
  }
  return f;
}

Outcome criterion_2() {
  gen::Rng rng(1002);
  Tally t;
  int compared = 0;
  for (long p : {2L, 3L, 5L, 7L}) {
    const Field f = Field::padic(p);
    for (int i = 0, here = 0; i < 5000 && here < 10; ++i) {
      const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 2));
      std::vector<oracle::IntPoly> sys;
      std::vector<long> a;
      NewtonSystem s{f, {}, {}};
      for (std::size_t j = 0; j < n; ++j) {
        sys.push_back(random_int_poly(rng, n, 3));
        a.push_back(gen::uniform(rng, 0, p - 1));
      }
      for (std::size_t j = 0; j < n; ++j) {
        MultiPoly<Element> poly(n, e(f, 0));
        for (const auto& term : sys[j]) poly.add_term(Monomial(term.exps.begin(), term.exps.end()), e(f, term.coeff));
        s.polys.push_back(poly);
        s.point.push_back(e(f, a[j]));
      }
      if (!validate(s).passed) continue;
      const long N = gen::uniform(rng, 1, 3);
      const auto roots = oracle::system_roots(sys, p, N, a);
      t.check(roots.size() == 1, "oracle found " + std::to_string(roots.size()) + " roots for p = " + std::to_string(p));
      if (roots.size() == 1) {
        const auto z = newton_solve(s, N).zero;
        bool same = true;
        for (std::size_t j = 0; j < n; ++j) same = same && z[j].integer_residue() == roots[0][j];
        t.check(same, "mismatch for p = " + std::to_string(p));
      }
      ++compared;
      ++here;
    }
  }
  t.check(compared >= 30, "only " + std::to_string(compared) + " systems");
  return t.outcome(std::to_string(compared) + " systems against exhaustive search");
}

Outcome criterion_3() {
  gen::Rng rng(1003);
  Tally t;
  int systems = 0;
  for (const Field& f : gen::fields()) {
    for (int i = 0; i < 10; ++i) {
      const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
      const NewtonSystem s = gen::newton_system(rng, f, n, 3);
      const long N = gen::uniform(rng, 1, 20);
      const Truncated zero = s.point.front().truncate(N).zero();

      auto randomized_run = [&](const NewtonSystem& sys) {
        const auto jac = evaluate(jacobian(truncate_system(sys, N)), truncate_point(sys.point, N));
        const auto u = invert_residue_matrix(residue_matrix(jac));
        Matrix<Truncated> lifted(n, n, zero);
        for (std::size_t r = 0; r < n; ++r) {
          for (std::size_t c = 0; c < n; ++c) {
            lifted(r, c) = Truncated::from_residue(f, N, u(r, c)) + gen::in_m(rng, f).truncate(N);
          }
        }
        NewtonOptions opt;
        opt.initial_inverse = lifted;
        return newton_solve(sys, N, opt).zero;
      };

      NewtonSystem moved = s;
      for (auto& x : moved.point) x = x + Element::uniformizer(f) * gen::integral(rng, f);
      const auto z1 = randomized_run(s);
      const auto z2 = randomized_run(moved);
      t.check(z1 == z2, f.descriptor() + " zeros differ");
      t.check(uniqueness_check(s, z1, z2), f.descriptor() + " uniqueness_check failed");
      ++systems;
    }
  }
  return t.outcome(std::to_string(systems) + " systems with randomized U^(0) and moved seeds");
}

Outcome criterion_4() {
  gen::Rng rng(1004);
  Tally t;
  const long N = 32;
  int count = 0;
  for (const Field& f : {Field::padic(7), Field::padic(5), Field::tadic()}) {
    const int runs = f.is_padic() ? 50 : 100;
    for (int i = 0; i < runs; ++i) {
      const long d = gen::uniform(rng, 2, 6);
      std::vector<Element> c{gen::in_m(rng, f, gen::uniform(rng, 1, 3)), gen::unit(rng, f)};
      for (long k = 2; k <= d; ++k) c.push_back(gen::integral(rng, f));
      if (c.back().is_zero()) c.back() = e(f, 1);
      const ExactPoly poly(e(f, 0), c);
      const SpecialPolynomial g = build_herve_polynomial(poly);
      t.check(static_cast<bool>(herve_identity_check(poly, g.to_poly())), f.descriptor() + " identity");

      // a0 g(X) = X^n f(-a0/(a1 X)), checked coefficientwise from the definition.
      const Element s = -c[0] / c[1];
      const auto gc = g.to_poly().coeffs();
      bool same = gc.size() == c.size();
      Element sk = e(f, 1);
      for (std::size_t k = 0; same && k < c.size(); ++k) {
        same = c[0] * gc[c.size() - 1 - k] == c[k] * sk;
        sk *= s;
      }
      t.check(same, f.descriptor() + " identity from the definition");

      const Truncated gamma = herve_lift(poly, N);
      t.check(root_mod(poly, gamma), f.descriptor() + " f(gamma) != 0 mod pi^32");
      t.check(gamma.order() >= std::min(N, c[0].valuation().value()), f.descriptor() + " v(gamma) < v(a0)");
      ++count;
    }
  }
  return t.outcome(std::to_string(count) + " polynomials over Q (p = 5, 7) and Q(t)");
}

Outcome criterion_5() {
  gen::Rng rng(1005);
  Tally t;
  int good = 0;
  int bad = 0;
  const auto fields = gen::fields();
  for (int i = 0; i < 100; ++i) {
    const Field& f = fields[static_cast<std::size_t>(i) % fields.size()];
    const long v1 = gen::uniform(rng, 0, 2);
    const long v0 = 2 * v1 + gen::uniform(rng, 1, 3);
    const long d = gen::uniform(rng, 1, 4);
    std::vector<Element> c{gen::in_m(rng, f, v0), gen::unit(rng, f) * Element::uniformizer(f).pow(v1)};
    for (long k = 2; k <= d; ++k) c.push_back(gen::integral(rng, f));
    const ExactPoly F(e(f, 0), c);
    const long N = gen::uniform(rng, 1, 24);
    const Truncated xi = hensel_newton(F, N);
    t.check(root_mod(F, xi), f.descriptor() + " F(xi) != 0");
    const ExtValuation va0 = c[0].valuation();
    if (!va0.is_infinite()) t.check(xi.order() >= std::min(N, va0.value() - v1), f.descriptor() + " v(xi) too small");
    ++good;

    std::vector<Element> violating(c);
    violating[0] = gen::unit(rng, f) * Element::uniformizer(f).pow(static_cast<unsigned long>(gen::uniform(rng, 0, 2 * v1)));
    try {
      hensel_newton(ExactPoly(e(f, 0), violating), N);
      t.check(false, f.descriptor() + " violating F accepted");
    } catch (const Error& err) {
      t.check(err.code() == ErrorCode::CriterionFailed, f.descriptor() + " wrong error code");
    }
    ++bad;
  }
  return t.outcome(std::to_string(good) + " meeting and " + std::to_string(bad) + " violating the criterion");
}

Outcome criterion_6() {
  gen::Rng rng(1006);
  Tally t;
  const Field Q = Field::padic(2);
  for (int i = 0; i < 200; ++i) {
    const long d = 1 + i % 8;
    std::vector<Element> c;
    std::vector<mpq_class> q;
    for (long k = 0; k < d; ++k) {
      q.emplace_back(gen::uniform(rng, -9, 9), gen::uniform(rng, 1, 4));
      q.back().canonicalize();
      c.push_back(Element::rational(Q, q.back()));
    }
    c.push_back(e(Q, 1));
    q.emplace_back(1);
    const ExactPoly f(e(Q, 0), c);
    const Element trace_det = det(trace_matrix(f).trace_matrix);
    t.check(trace_det == discriminant(f), "det(T) != discriminant at degree " + std::to_string(d));
    t.check(trace_det.as_rational() == oracle::sylvester_discriminant(q),
            "det(T) != Sylvester discriminant at degree " + std::to_string(d));
  }
  return t.outcome("200 monic polynomials of degree 1..8");
}

Outcome criterion_7() {
  gen::Rng rng(1007);
  Tally t;
  const long N = 16;
  int systems = 0;
  for (const Field& f : gen::fields()) {
    for (int i = 0; i < 8 && systems < 30; ++i) {
      const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 2));
      const NewtonSystem origin = translate_to_origin(gen::newton_system(rng, f, n, 2));
      const EtaleAugmentation aug = etale_augment(origin);
      const auto xi = newton_solve(origin, N).zero;
      const auto big = newton_solve(aug.augmented, N).zero;
      t.check(std::vector<Truncated>(big.begin(), big.begin() + static_cast<long>(n)) == xi,
              f.descriptor() + " projection differs");
      const Truncated eta = aug.eta(xi);
      std::vector<Truncated> ext(xi);
      ext.push_back(eta);
      t.check(eval_poly(truncate_system(aug.augmented, N).back(), ext).is_zero(), f.descriptor() + " f_(n+1)(xi, eta) != 0");

      // eta = Jac(0)/Jac(xi) - 1 from an independent Jacobian evaluation.
      const auto polys = truncate_system(origin, N);
      std::vector<std::vector<Truncated>> jm(n, std::vector<Truncated>(n, eta.zero()));
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) jm[r][c] = eval_poly(polys[r], xi, c);
      }
      const Truncated jac_xi = n == 1 ? jm[0][0] : jm[0][0] * jm[1][1] - jm[0][1] * jm[1][0];
      t.check((eta + eta.one()) * jac_xi == aug.jac0.truncate(N), f.descriptor() + " eta formula");
      ++systems;
    }
  }
  t.check(systems >= 30, "fewer than 30 systems");
  return t.outcome(std::to_string(systems) + " systems at N = 16");
}

Outcome criterion_8() {
  Tally t;
  const Field Z7 = Field::padic(7);
  const auto start = Clock::now();
  const ExactPoly f = cli::parse_poly("x^2 - 2", {"x"}, Z7).to_uni();
  const Truncated xi = refine_root(f, e(Z7, 10), 64);
  const NewtonSystem s{Z7, {cli::parse_poly("x^2 - 2", {"x"}, Z7)}, {e(Z7, 10)}};
  const NewtonResult r = newton_solve(s, 64);
  const CertificateCheck check = verify_certificate(s, r.certificate);
  const double secs = seconds_since(start);

  const mpz_class m = oracle::ipow(7, 64);
  const mpz_class x = xi.integer_residue();
  t.check(oracle::mod(x * x - 2, m) == 0, "xi^2 != 2 mod 7^64");
  t.check(oracle::mod(x - 3, 7) == 0, "xi is not congruent to 10 mod 7");
  t.check(r.zero.front() == xi, "newton_solve and refine_root disagree");
  t.check(check.valid, "verify_certificate: " + check.family + " " + check.detail);
  std::string why;
  t.check(congruences_hold(s, r.certificate, why), "independent check: " + why);
  t.check(secs < 1.0, "took " + std::to_string(secs) + " s");
  std::ostringstream out;
  out << "N = 64 in " << secs << " s, " << r.certificate.steps.size() << " certified steps";
  return t.outcome(out.str());
}

/// p-adic valuation computed from the integer factorization of num and den.
long padic_valuation(const mpq_class& q, long p) {
  auto v = [p](mpz_class z) {
    long k = 0;
    while (z % p == 0) {
      z /= p;
      ++k;
    }
    return k;
  };
  return v(q.get_num()) - v(q.get_den());
}

Outcome criterion_9() {
  gen::Rng rng(1009);
  Tally t;
  long pairs = 0;
  for (const Field& f : gen::fields()) {
    for (int i = 0; i < 1000; ++i) {
      const Element x = gen::any(rng, f);
      const Element y = gen::any(rng, f);
      const ExtValuation vx = x.valuation(), vy = y.valuation();
      t.check((x * y).valuation() == vx + vy, f.descriptor() + " v(xy) != v(x) + v(y)");
      const ExtValuation s = (x + y).valuation();
      t.check(s >= std::min(vx, vy), f.descriptor() + " ultrametric inequality");
      if (vx != vy) t.check(s == std::min(vx, vy), f.descriptor() + " equality case");
      if (f.is_padic() && !x.is_zero()) {
        t.check(vx.value() == padic_valuation(x.as_rational(), f.prime()), f.descriptor() + " valuation oracle");
      }

      std::vector<Element> xs;
      Element sum = e(f, 0);
      for (long k = gen::uniform(rng, 1, 5); k > 0; --k) {
        xs.push_back(gen::any(rng, f));
        sum += xs.back();
      }
      xs.push_back(-sum);
      ExtValuation lo = ExtValuation::infinity();
      for (const auto& z : xs) lo = std::min(lo, z.valuation());
      if (!lo.is_infinite()) {
        const auto hits = std::count_if(xs.begin(), xs.end(), [&](const Element& z) { return z.valuation() == lo; });
        t.check(hits >= 2, f.descriptor() + " two-minima lemma");
      }
      ++pairs;
    }
  }
  return t.outcome(std::to_string(pairs) + " pairs and zero-sum tuples over 4 fields");
}

Outcome criterion_10() {
  Tally t;
  const std::string cli = HENSEL_CLI_PATH;
  std::vector<std::filesystem::path> jobs;
  for (const auto& entry : std::filesystem::directory_iterator(HENSEL_JOBS_DIR)) {
    if (entry.path().extension() == ".json") jobs.push_back(entry.path());
  }
  std::sort(jobs.begin(), jobs.end());
  int round_trips = 0;
  for (const auto& path : jobs) {
    const std::string name = path.filename().string();
    const auto first = proc::run_tool(cli, "--job \"" + path.string() + "\"");
    t.check(first.exit_code == 0, name + " exit " + std::to_string(first.exit_code));
    t.check(proc::run_tool(cli, "--job \"" + path.string() + "\"").out == first.out, name + " output not deterministic");
    const auto doc = cli::json::parse(first.out, nullptr, false);
    if (doc.is_discarded() || !doc.contains("certificate")) continue;
    const std::string saved = proc::write_temp("hensel_acceptance_" + name, first.out);
    const auto verified = proc::run_tool(cli, "verify --job \"" + saved + "\"");
    const auto parsed = cli::json::parse(verified.out, nullptr, false);
    t.check(verified.exit_code == 0 && !parsed.is_discarded() && parsed.value("valid", false), name + " verify failed");
    t.check(proc::run_tool(cli, "verify", saved).out == verified.out, name + " verify via stdin differs");
    ++round_trips;
  }
  t.check(round_trips >= 3, "fewer than 3 certified jobs shipped");

  const auto bad = proc::run_tool(cli, "solve --field p-adic:7 --vars x --system \"x^2 -* 2\" --point 3 -N 4");
  const auto err = cli::json::parse(bad.out, nullptr, false);
  t.check(bad.exit_code == 2, "malformed input exit " + std::to_string(bad.exit_code));
  t.check(!err.is_discarded() && err.value("error", "") == "SYNTAX_ERROR", "malformed input is not a SYNTAX_ERROR");
  t.check(!err.is_discarded() && err.contains("position") && err["position"].value("line", 0) == 1 &&
              err["position"].value("column", 0) == 6,
          "syntax error position is not line 1, column 6");
  return t.outcome(std::to_string(round_trips) + " verify round trips over " + std::to_string(jobs.size()) +
                   " shipped jobs");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"quadratic congruence suite", criterion_1},   {"oracle equivalence", criterion_2},
      {"uniqueness", criterion_3},                   {"Herve identity", criterion_4},
      {"Hensel-Newton criterion", criterion_5},      {"trace/discriminant identity", criterion_6},
      {"etale augmentation round trip", criterion_7}, {"sqrt(2) worked example", criterion_8},
      {"valuation axiom suite", criterion_9},        {"CLI contract", criterion_10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    if (!o.pass) ++failed;
    std::cout << "CRITERION " << (i + 1) << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << o.detail << ")" << std::endl;
  }
  std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAILED") << std::endl;
  return failed == 0 ? 0 : 1;
}
