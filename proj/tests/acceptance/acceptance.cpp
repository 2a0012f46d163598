// Acceptance run: one PASS/FAIL line per criterion, each with a pinned time
// limit. Exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "affgebra/affgebra.hpp"

using namespace affgebra;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr double kGramSchmidtTolerance = 1e-12;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_ms;
  std::function<Outcome()> body;
};

template <ExactScalar S>
Matrix<S> parse_rows(const std::vector<std::vector<std::string>>& rows, Context<S> ctx = {}) {
  Matrix<S> out(rows.size(), ctx);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c) out(r, c) = parse_scalar<S>(rows[r][c], ctx);
  return out;
}

std::string first_failure(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.ok()) return r.check + " on " + r.subject + " [" + r.bracket + "]";
  return {};
}

ClassRequest request(ClassKind kind, std::size_t n, FieldDesc field = {}) {
  ClassRequest req;
  req.kind = kind;
  req.n = n;
  req.field = is_hermitian_kind(kind) && field.tag == FieldTag::Q ? FieldDesc{FieldTag::Qi, 0} : field;
  return req;
}

const ClassKind kClasses[] = {ClassKind::GNA, ClassKind::SNA, ClassKind::ONA, ClassKind::UNA, ClassKind::SUNA};

template <class Fn>
bool raises(ErrorCode code, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

Outcome closed_forms() {
  Outcome out;
  out.require(build_P<Rational>(2) == parse_rows<Rational>({{"1", "1", "1"}, {"0", "-1", "1"}, {"-1", "0", "1"}}), "P(2)");
  out.require(build_P_inverse<Rational>(2) ==
                  parse_rows<Rational>({{"1/3", "1/3", "-2/3"}, {"1/3", "-2/3", "1/3"}, {"1/3", "1/3", "1/3"}}),
              "P^-1(2)");
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto p = build_P<Rational>(n);
    const auto pinv = build_P_inverse<Rational>(n);
    const Rational c(7, 3);
    Matrix<Rational> corner(n + 1);
    corner(n, n) = c;
    out.require(p * corner * pinv == Matrix<Rational>::filled(n + 1, c / Rational(static_cast<long>(n + 1))),
                "P diag(0,..,0,c) P^-1 = c/(n+1) J at n=" + std::to_string(n));

    const MatrixClassSpec<Rational> gna(ClassKind::GNA, n);
    out.require(base_point(gna).value() == Matrix<Rational>::filled(n + 1, Rational(1, static_cast<long>(n + 1))),
                "gna base point at n=" + std::to_string(n));
    out.require(pinv * base_point(gna).value() * p == block_target(gna).base_block, "gna base image at n=" + std::to_string(n));

    const MatrixClassSpec<Rational> sna(ClassKind::SNA, n);
    Matrix<Rational> sna_block = Matrix<Rational>::diagonal(std::vector<Rational>(n + 1, Rational(-1, static_cast<long>(n))));
    sna_block(n, n) = Rational(1);
    Matrix<Rational> sna_display = Matrix<Rational>::filled(n + 1, Rational(1, static_cast<long>(n)));
    for (std::size_t k = 0; k <= n; ++k) sna_display(k, k) = Rational(0);
    out.require(block_target(sna).base_block == sna_block, "sna block base at n=" + std::to_string(n));
    out.require(p * sna_block * pinv == sna_display, "P sna-block P^-1 at n=" + std::to_string(n));
    out.require(base_point(sna).value() == sna_display, "sna base point at n=" + std::to_string(n));
  }
  return out;
}

Outcome p_invertibility() {
  Outcome out;
  for (std::size_t n = 1; n <= 8; ++n) {
    out.require(build_P<Rational>(n) * build_P_inverse<Rational>(n) == Matrix<Rational>::identity(n + 1),
                "P P^-1 over Q at n=" + std::to_string(n));
    const PrimeContext gf7{7};
    const bool singular = (n + 1) % 7 == 0;
    const bool reported = raises(ErrorCode::SingularMatrix, [&] { (void)inverse(build_P<PrimeFieldElement>(n, gf7)); });
    out.require(singular == reported, "GF(7) singularity report at n=" + std::to_string(n));
    if (!singular)
      out.require(build_P<PrimeFieldElement>(n, gf7) * build_P_inverse<PrimeFieldElement>(n, gf7) ==
                      Matrix<PrimeFieldElement>::identity(n + 1, gf7),
                  "P P^-1 over GF(7) at n=" + std::to_string(n));
  }
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::size_t n = 1; n <= 8; ++n) {
      const bool singular = (n + 1) % p == 0;
      const bool reported =
          raises(ErrorCode::SingularMatrix, [&] { (void)inverse(build_P<PrimeFieldElement>(n, PrimeContext{p})); });
      out.require(singular == reported, "GF(" + std::to_string(p) + ") singularity at n=" + std::to_string(n));
    }
  }
  return out;
}

Outcome u_orthogonality() {
  Outcome out;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto u = build_U(n);
    out.require(transpose(u) * u == Matrix<SurdReal>::identity(n + 1), "U^T U at n=" + std::to_string(n));
    out.require(u * transpose(u) == Matrix<SurdReal>::identity(n + 1), "U U^T at n=" + std::to_string(n));

    // Floating-point Gram-Schmidt on the columns of P: the constant column first, then n-1 down to 0.
    const std::size_t m = n + 1;
    const auto p = build_P<Rational>(n);
    std::vector<std::vector<double>> basis;
    std::vector<std::size_t> order{n};
    for (std::size_t k = n; k-- > 0;) order.push_back(k);
    for (std::size_t j : order) {
      std::vector<double> v(m);
      for (std::size_t r = 0; r < m; ++r) v[r] = p(r, j).to_double();
      for (const auto& q : basis) {
        double dot = 0;
        for (std::size_t r = 0; r < m; ++r) dot += q[r] * v[r];
        for (std::size_t r = 0; r < m; ++r) v[r] -= dot * q[r];
      }
      double norm = 0;
      for (double x : v) norm += x * x;
      for (double& x : v) x /= std::sqrt(norm);
      basis.push_back(v);
      for (std::size_t r = 0; r < m; ++r)
        out.require(std::abs(u(r, j).to_double() - v[r]) <= kGramSchmidtTolerance,
                    "Gram-Schmidt column " + std::to_string(j) + " at n=" + std::to_string(n));
    }
  }
  return out;
}

Outcome axiom_suite() {
  Outcome out;
  SuiteOptions options;
  options.trials = 100;
  options.checks = {CheckId::HeapAssoc,     CheckId::Malcev,           CheckId::HeapComm,           CheckId::ActAdd,
                    CheckId::ActHeap,       CheckId::ActAssoc,         CheckId::ActUnit,            CheckId::ActZero,
                    CheckId::ActBaseChange, CheckId::BracketLeftAffine, CheckId::BracketRightAffine, CheckId::Antisym,
                    CheckId::Jacobi,        CheckId::Closure};
  std::vector<ClassRequest> classes;
  for (ClassKind kind : kClasses)
    for (std::size_t n = 1; n <= 4; ++n) classes.push_back(request(kind, n));
  const auto reports = run_all(classes, {"commutator", "zeta:0", "zeta:1", "zeta:2", "zeta:-1"}, kSeed, options);
  out.require(reports.size() == classes.size() * 5 * options.checks.size(), "unexpected report count");
  for (const auto& r : reports) out.require(r.trials == 100, "short run for " + r.check);
  if (auto f = first_failure(reports); !f.empty()) out.require(false, f);
  out.detail = out.passed ? std::to_string(reports.size()) + " reports" : out.detail;
  return out;
}

Outcome block_conjugation_suite() {
  Outcome out;
  SuiteOptions options;
  options.trials = 50;
  options.checks = {CheckId::TheoremIso};
  std::vector<ClassRequest> classes;
  for (ClassKind kind : kClasses)
    for (std::size_t n = 1; n <= 4; ++n) classes.push_back(request(kind, n));
  for (ClassKind kind : {ClassKind::GNA, ClassKind::SNA})
    for (std::size_t n = 1; n <= 4; ++n)
      if (n % 7 != 0 && (n + 1) % 7 != 0) classes.push_back(request(kind, n, {FieldTag::GF, 7}));
  const auto reports = run_all(classes, {"commutator"}, kSeed, options);
  out.require(reports.size() == classes.size(), "unexpected report count");
  if (auto f = first_failure(reports); !f.empty()) out.require(false, f);
  return out;
}

Outcome retract_suite() {
  Outcome out;
  SuiteOptions options;
  options.trials = 100;
  options.checks = {CheckId::CorollaryRetract};
  std::vector<ClassRequest> classes;
  for (ClassKind kind : kClasses)
    for (std::size_t n = 1; n <= 4; ++n) classes.push_back(request(kind, n));
  if (auto f = first_failure(run_all(classes, {"commutator"}, kSeed, options)); !f.empty()) out.require(false, f);

  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t sq = n * n;
    auto expect = [&](const std::string& what, std::size_t got, std::size_t want) {
      out.require(got == want, what + " at n=" + std::to_string(n) + ": " + std::to_string(got) + " != " + std::to_string(want));
    };
    const MatrixClassSpec<Rational> gna(ClassKind::GNA, n), sna(ClassKind::SNA, n), ona(ClassKind::ONA, n);
    const MatrixClassSpec<GaussianRational> una(ClassKind::UNA, n), suna(ClassKind::SUNA, n);
    expect("gna/gl", dimension(gna), sq);
    expect("sna/sl", dimension(sna), sq - 1);
    expect("ona/o", dimension(ona), n * (n - 1) / 2);
    expect("una/u", dimension(una), sq);
    expect("suna/su", dimension(suna), sq - 1);
    expect("gl block", solve_block_algebra(block_target(gna)).dimension(), sq);
    expect("sl block", solve_block_algebra(block_target(sna)).dimension(), sq - 1);
    expect("o block", solve_block_algebra(block_target(ona)).dimension(), n * (n - 1) / 2);
    expect("u block", solve_block_algebra(block_target(una)).dimension(), sq);
    expect("su block", solve_block_algebra(block_target(suna)).dimension(), sq - 1);
  }
  return out;
}

Outcome zeta_triviality() {
  Outcome out;
  SuiteOptions options;
  options.trials = 100;
  options.checks = {CheckId::ZetaRetractTrivial};
  std::vector<ClassRequest> classes;
  for (ClassKind kind : kClasses)
    for (std::size_t n = 1; n <= 4; ++n) classes.push_back(request(kind, n));
  const auto reports = run_all(classes, {"zeta:0", "zeta:1", "zeta:3"}, kSeed, options);
  out.require(reports.size() == classes.size() * 3, "unexpected report count");
  if (auto f = first_failure(reports); !f.empty()) out.require(false, f);
  return out;
}

Outcome bullet_product() {
  Outcome out;
  SuiteOptions options;
  options.trials = 100;
  options.checks = {CheckId::BulletAssoc, CheckId::BulletCommutator};
  const auto reports = run_all({request(ClassKind::GNA, 3)}, {"commutator"}, kSeed, options);
  out.require(reports.size() == 2, "unexpected report count");
  if (auto f = first_failure(reports); !f.empty()) out.require(false, f);
  return out;
}

Outcome fault_injection() {
  Outcome out;
  VerifyOptions options;
  options.inject_fault = true;
  const MatrixVerifier<Rational> verifier(MatrixClassSpec<Rational>(ClassKind::GNA, 2), BracketKind<Rational>::commutator(),
                                          options);
  const CheckReport report = verifier.run_check(CheckId::Closure, kSeed, 100);
  out.require(!report.passed, "closure passed despite the fault");
  out.require(report.counterexample.has_value(), "no counterexample recorded");
  if (!out.passed) return out;
  // Replay from serialised text only: no seed, no verifier state.
  const Json reparsed = Json::parse(report.to_json().dump());
  const ReplayResult replay = replay_report(reparsed);
  out.require(replay.reproduced, "replay did not reproduce the failure");
  out.require(replay.mismatch && replay.mismatch->clause == reparsed["counterexample"]["clause"], "replayed clause differs");
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exact closed forms for P, P^-1 and base points", 1000, closed_forms},
      {2, "P P^-1 = I; singular exactly when p | n+1", 1000, p_invertibility},
      {3, "U orthogonal in surd arithmetic; Gram-Schmidt within 1e-12", 5000, u_orthogonality},
      {4, "axiom suite: 5 classes, n=1..4, commutator and zeta 0,1,2,-1, 100 trials", 60000, axiom_suite},
      {5, "conjugation onto block targets, 50 samples", 60000, block_conjugation_suite},
      {6, "retracts and classical dimensions", 30000, retract_suite},
      {7, "zeta retract is trivial for zeta 0,1,3", 10000, zeta_triviality},
      {8, "bullet product associative; retract bracket is its commutator", 10000, bullet_product},
      {9, "fault injection is caught and replays", 1000, fault_injection},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = ms <= c.limit_ms;
    const bool ok = outcome.passed && in_time;
    failures += ok ? 0 : 1;
    std::printf("criterion %d: %s  %s  [%.0f ms / limit %.0f ms]%s%s\n", c.number, ok ? "PASS" : "FAIL", c.title.c_str(), ms,
                c.limit_ms, outcome.detail.empty() ? "" : "  ", outcome.detail.c_str());
    if (!in_time) std::printf("  time limit exceeded\n");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
