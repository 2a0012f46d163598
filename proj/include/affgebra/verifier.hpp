#pragma once

// Property-check engine: samples witness tuples from a matrix class, evaluates
// catalogue identities exactly, and records a self-contained counterexample
// for the first failing trial.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "affgebra/affine.hpp"
#include "affgebra/error.hpp"
#include "affgebra/identities.hpp"
#include "affgebra/json_io.hpp"
#include "affgebra/matrix_classes.hpp"
#include "affgebra/random.hpp"
#include "affgebra/transforms.hpp"

namespace affgebra {

struct CheckReport {
  std::string check;
  std::string subject;
  std::string bracket;
  bool passed = true;
  std::size_t trials = 0;
  std::optional<Json> counterexample;
  double elapsed_ms = 0.0;
  bool empirical = false;

  /// Empirical checks never count against a run.
  bool ok() const { return passed || empirical; }

  Json to_json(bool with_elapsed = true) const {
    Json out = Json::object();
    out["check"] = check;
    out["passed"] = passed;
    out["trials"] = trials;
    out["counterexample"] = counterexample ? *counterexample : Json(nullptr);
    if (with_elapsed) out["elapsed_ms"] = elapsed_ms;
    out["class"] = subject;
    out["bracket"] = bracket;
    if (empirical) out["empirical"] = true;
    return out;
  }
};

template <ExactScalar S>
BracketKind<S> parse_bracket_kind(std::string_view text, const Context<S>& ctx) {
  if (text == "commutator") return BracketKind<S>::commutator();
  if (text.starts_with("zeta:")) return BracketKind<S>::zeta_bracket(parse_scalar<S>(text.substr(5), ctx));
  fail(ErrorCode::InvalidArgument, "bracket must be 'commutator' or 'zeta:<scalar>', got '" + std::string(text) + "'");
}

struct VerifyOptions {
  std::optional<Via> via;     // theorem/corollary conjugation; defaults per class
  bool inject_fault = false;  // add 1 to entry (0,0) of the first sampled point
  SampleBounds bounds{};
};

inline Via default_via(ClassKind kind) { return requires_unitary(kind) ? Via::U : Via::P; }

/// Runs catalogue checks for one class and bracket.
template <ExactScalar S>
class MatrixVerifier {
 public:
  using MatrixWitness = Witness<Matrix<S>, S>;

  MatrixVerifier(MatrixClassSpec<S> spec, BracketKind<S> kind, VerifyOptions options = {})
      : model_(std::move(spec), options.bounds), kind_(std::move(kind)), options_(options),
        space_(kind_, model_.spec().ctx) {
    if (kind_.is_zeta() && model_.spec().real_scalars_only() && !kind_.zeta.is_real())
      fail(ErrorCode::InvalidArgument, model_.spec().name() + " is a real affine space; zeta must be real");
    if (options_.via == Via::P && requires_unitary(model_.spec().kind))
      fail(ErrorCode::InvalidArgument, "conjugation by P does not preserve " + class_name(model_.spec().kind) + "; use U");
  }

  const MatrixClassSpec<S>& spec() const { return model_.spec(); }
  const ClassModel<S>& model() const { return model_; }
  const BracketKind<S>& kind() const { return kind_; }
  Via via() const { return options_.via.value_or(default_via(spec().kind)); }

  CheckReport run_check(CheckId id, std::uint64_t seed, std::size_t trials = 0) const {
    const CheckInfo& info = check_info(id);
    if (!check_applies(id, kind_.is_zeta()))
      fail(ErrorCode::NotApplicable, std::string(info.name) + " does not apply to bracket " + kind_.to_string());
    if (trials == 0) trials = info.default_trials;
    CheckReport report{std::string(info.name), spec().name(), kind_.to_string()};
    report.empirical = info.empirical;
    auto start = std::chrono::steady_clock::now();
    for (std::size_t t = 0; t < trials; ++t) {
      SampleRng rng(seed, t, static_cast<std::uint64_t>(id));
      MatrixWitness w = sample_witness(id, rng);
      report.trials = t + 1;
      if (auto mismatch = evaluate(id, w)) {
        report.passed = false;
        report.counterexample = counterexample_json(w, *mismatch);
        break;
      }
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
  }

  CheckReport verify_theorem(std::uint64_t seed, std::size_t samples = 50) const {
    return run_check(CheckId::TheoremIso, seed, samples);
  }
  CheckReport run_corollary(std::uint64_t seed, std::size_t trials = 100) const {
    return run_check(CheckId::CorollaryRetract, seed, trials);
  }

  MatrixWitness sample_witness(CheckId id, SampleRng& rng) const {
    const CheckInfo& info = check_info(id);
    MatrixWitness w;
    for (auto name : info.points) {
      const bool block_sample = (id == CheckId::TheoremIso && name == "y") ||
                                (id == CheckId::CorollaryRetract && (name == "x" || name == "y"));
      w.points.emplace_back(std::string(name),
                            block_sample ? sample_block_algebra(block_algebra(), rng, model_.bounds()) : model_.sample(rng));
    }
    for (auto name : info.scalars) w.scalars.emplace_back(std::string(name), model_.sample_scalar(rng));
    if (options_.inject_fault && !w.points.empty()) {
      Matrix<S>& victim = w.points.front().second;
      victim(0, 0) += victim.one();
    }
    return w;
  }

  std::optional<Mismatch> evaluate(CheckId id, const MatrixWitness& w) const {
    auto to_json = [](const Matrix<S>& m) { return matrix_to_json(m); };
    switch (id) {
      case CheckId::Closure: return evaluate_closure(w);
      case CheckId::TheoremIso: return with_conjugator([&](const auto& f) { return evaluate_theorem(f, w); });
      case CheckId::CorollaryRetract: return with_conjugator([&](const auto& f) { return evaluate_corollary(f, w); });
      default: return evaluate_identity(id, space_, w, to_json);
    }
  }

  Json counterexample_json(const MatrixWitness& w, const Mismatch& mismatch) const {
    Json out = Json::object();
    out["clause"] = mismatch.clause;
    out["class"] = spec().to_json();
    out["bracket"] = kind_.to_string();
    out["via"] = via_name(via());
    Json points = Json::object();
    for (const auto& [name, m] : w.points) points[name] = matrix_to_json(m);
    Json scalars = Json::object();
    for (const auto& [name, x] : w.scalars) scalars[name] = x.to_string();
    out["inputs"] = Json{{"points", std::move(points)}, {"scalars", std::move(scalars)}};
    out["expected"] = mismatch.expected;
    out["actual"] = mismatch.actual;
    return out;
  }

  MatrixWitness witness_from_json(const Json& inputs) const {
    MatrixWitness w;
    if (!inputs.is_object() || !inputs.contains("points")) fail(ErrorCode::ParseError, "counterexample lacks inputs");
    for (const auto& [name, m] : inputs["points"].items()) w.points.emplace_back(name, matrix_from_json<S>(m, spec().ctx));
    if (inputs.contains("scalars"))
      for (const auto& [name, x] : inputs["scalars"].items())
        w.scalars.emplace_back(name, parse_scalar<S>(x.template get<std::string>(), spec().ctx));
    return w;
  }

  /// The classical algebra block, solved once on demand.
  const AffineSubspace<S>& block_algebra() const {
    if (!block_algebra_) block_algebra_ = solve_block_algebra(block_target(spec()));
    return *block_algebra_;
  }

 private:
  std::optional<Mismatch> evaluate_closure(const MatrixWitness& w) const {
    const Matrix<S> &a = w.point("a"), &b = w.point("b"), &c = w.point("c");
    const S& alpha = w.scalar("alpha");
    const std::pair<const char*, Matrix<S>> results[] = {
        {"<a,b,c> in class", heap(a, b, c)},
        {"alpha|>_a b in class", action(alpha, a, b)},
        {"[a,b] in class", bracket(kind_, a, b)},
    };
    for (const auto& [clause, m] : results)
      if (auto why = class_violation(spec(), m))
        return Mismatch{clause, Json("member of " + spec().name()), Json{{"matrix", matrix_to_json(m)}, {"violation", *why}}};
    return std::nullopt;
  }

  template <class Fn>
  std::optional<Mismatch> with_conjugator(Fn&& fn) const {
    if (via() == Via::P) {
      if constexpr (S::tag == FieldTag::Surd || S::tag == FieldTag::SurdComplex) {
        fail(ErrorCode::UnsupportedField, "conjugation by P is run over Q, Qi or GF");
      } else {
        return fn(conjugator_P(spec()));
      }
    }
    if constexpr (SurdExtensible<S>) {
      return fn(conjugator_U(spec()));
    } else {
      fail(ErrorCode::UnsupportedField, "conjugation by U needs a subfield of C, not " + spec().field().to_string());
    }
  }

  template <ExactScalar T>
  MatrixClassSpec<T> spec_over() const {
    if constexpr (std::is_same_v<S, T>) return spec();
    else return lift_spec<T>(spec());
  }

  template <ExactScalar T>
  std::optional<Mismatch> evaluate_theorem(const Conjugator<S, T>& f, const MatrixWitness& w) const {
    using Conj = Conjugator<S, T>;
    std::optional<Mismatch> out;
    auto expect = [&](const char* clause, const Matrix<T>& expected, const Matrix<T>& actual) {
      if (!out && !(expected == actual)) out = Mismatch{clause, matrix_to_json(expected), matrix_to_json(actual)};
    };
    const Matrix<S> &a = w.point("a"), &b = w.point("b"), &c = w.point("c"), &y = w.point("y");
    const S& alpha = w.scalar("alpha");
    const BlockTarget<S> target_s = block_target(spec());
    const BlockTarget<T> target = target_s.template lift<T>();
    const auto commutator = BracketKind<S>::commutator();
    const auto commutator_t = BracketKind<T>::commutator();

    expect("f(base point) = base block", target.base_block, f.forward(model_.base()));
    const Matrix<T> fa = f.forward(a), fb = f.forward(b), fc = f.forward(c);
    for (const Matrix<T>* image : {&fa, &fb}) {
      if (out) break;
      if (auto why = block_violation(target, *image))
        out = Mismatch{"f(a) in block target", Json(target.description()), Json{{"matrix", matrix_to_json(*image)}, {"violation", *why}}};
    }
    expect("f([a,b]) = [f(a),f(b)]", bracket(commutator_t, fa, fb), f.forward(bracket(commutator, a, b)));
    expect("f(<a,b,c>) = <f(a),f(b),f(c)>", heap(fa, fb, fc), f.forward(heap(a, b, c)));
    expect("f(alpha|>_a b) = alpha|>_f(a) f(b)", action(Conj::lift(alpha), fa, fb), f.forward(action(alpha, a, b)));
    expect("f^-1(f(a)) = a", Conj::lift(a), f.backward(fa));
    if (!out) {
      const Matrix<T> preimage = f.backward(Conj::lift(target_s.base_block + y));
      if (auto why = class_violation(spec_over<T>(), preimage))
        out = Mismatch{"f^-1(base block + y) in class", Json("member of " + spec().name()),
                       Json{{"matrix", matrix_to_json(preimage)}, {"violation", *why}}};
      else
        expect("f(f^-1(base block + y)) = base block + y", Conj::lift(target_s.base_block + y), f.forward_lifted(preimage));
    }
    return out;
  }

  template <ExactScalar T>
  std::optional<Mismatch> evaluate_corollary(const Conjugator<S, T>& f, const MatrixWitness& w) const {
    std::optional<Mismatch> out;
    auto expect = [&](const char* clause, const auto& expected, const auto& actual) {
      if (!out && !(expected == actual)) out = Mismatch{clause, matrix_to_json(expected), matrix_to_json(actual)};
    };
    const auto commutator = BracketKind<S>::commutator();
    const BlockTarget<S> target = block_target(spec());

    // Block picture: o + x, o + y retract to o + (xy - yx).
    const Matrix<S>& o = target.base_block;
    const Matrix<S> &x = w.point("x"), &y = w.point("y");
    const Matrix<S> retracted = lie_retract_bracket(commutator, o, o + x, o + y);
    expect("[o+x,o+y]_o = o + (xy - yx)", o + (x * y - y * x), retracted);
    if (!out)
      if (auto why = block_violation(target, retracted))
        out = Mismatch{"[o+x,o+y]_o in block target", Json(target.description()), Json{{"matrix", matrix_to_json(retracted)}, {"violation", *why}}};

    // Class picture: the conjugated retract bracket is the plain commutator of conjugated differences.
    const Matrix<S> &a = w.point("a"), &b = w.point("b");
    const Matrix<S>& base = model_.base();
    const Matrix<T> fo = f.forward(base);
    const Matrix<T> xa = f.forward(a) - fo;
    const Matrix<T> xb = f.forward(b) - fo;
    expect("f([a,b]_o) - f(o) = [f(a)-f(o), f(b)-f(o)]", xa * xb - xb * xa,
           f.forward(lie_retract_bracket(commutator, base, a, b)) - fo);
    return out;
  }

  ClassModel<S> model_;
  BracketKind<S> kind_;
  VerifyOptions options_;
  MatrixAffineSpace<S> space_;
  mutable std::optional<AffineSubspace<S>> block_algebra_;
};

/// Runtime description of a class over any supported field.
struct ClassRequest {
  ClassKind kind = ClassKind::GNA;
  std::size_t n = 1;
  FieldDesc field{};
  std::string c = "1";
  bool traceless = false;

  Json to_json() const {
    Json out{{"kind", class_name(kind)}, {"n", n}, {"field", std::string(field_name(field.tag))}};
    if (field.tag == FieldTag::GF) out["p"] = field.p;
    if (kind == ClassKind::GA_C) out["c"] = c;
    if (traceless) out["traceless"] = true;
    return out;
  }

  static ClassRequest from_json(const Json& j) {
    ClassRequest out;
    if (!j.is_object() || !j.contains("kind") || !j.contains("n")) fail(ErrorCode::ParseError, "class spec needs kind and n");
    out.kind = parse_class_kind(j["kind"].get<std::string>());
    out.n = j["n"].get<std::size_t>();
    out.field = field_desc_from_json(j);
    if (j.contains("c")) out.c = j["c"].get<std::string>();
    out.traceless = j.value("traceless", false);
    return out;
  }
};

template <ExactScalar S>
MatrixClassSpec<S> make_spec(const ClassRequest& req, const Context<S>& ctx) {
  if (req.kind == ClassKind::GA_C) return MatrixClassSpec<S>::ga_c(parse_scalar<S>(req.c, ctx), req.n, req.traceless);
  return MatrixClassSpec<S>(req.kind, req.n, ctx);
}

struct SuiteOptions {
  std::vector<CheckId> checks;  // empty: every check that applies
  std::size_t trials = 0;       // 0: per-check default
  VerifyOptions verify{};
};

/// Cartesian run over classes × brackets in catalogue order. Bracket-independent
/// checks run once per class, with the first bracket. `on_report` sees each
/// report as soon as it is produced.
inline std::vector<CheckReport> run_all(const std::vector<ClassRequest>& classes, const std::vector<std::string>& brackets,
                                        std::uint64_t seed, const SuiteOptions& options = {},
                                        const std::function<void(const CheckReport&)>& on_report = {}) {
  std::vector<CheckReport> reports;
  for (const auto& req : classes) {
    dispatch_field(req.field, [&]<class S>(std::type_identity<S>, Context<S> ctx) {
      const MatrixClassSpec<S> spec = make_spec<S>(req, ctx);
      for (std::size_t k = 0; k < brackets.size(); ++k) {
        MatrixVerifier<S> verifier(spec, parse_bracket_kind<S>(brackets[k], ctx), options.verify);
        for (const auto& info : check_catalogue()) {
          if (!options.checks.empty() && std::find(options.checks.begin(), options.checks.end(), info.id) == options.checks.end())
            continue;
          if (!check_applies(info.id, verifier.kind().is_zeta())) continue;
          if (info.bracket == BracketRequirement::Ignored && k > 0) continue;
          reports.push_back(verifier.run_check(info.id, seed, options.trials));
          if (on_report) on_report(reports.back());
        }
      }
    });
  }
  return reports;
}

struct ReplayResult {
  bool reproduced = false;
  std::string check;
  std::optional<Mismatch> mismatch;
};

/// Re-evaluates the counterexample of a failed report on its recorded inputs.
inline ReplayResult replay_report(const Json& report) {
  if (!report.is_object() || !report.contains("check")) fail(ErrorCode::ParseError, "report lacks \"check\"");
  const Json& cx = report.contains("counterexample") ? report["counterexample"] : Json();
  if (!cx.is_object()) fail(ErrorCode::ParseError, "report has no counterexample to replay");
  const CheckId id = parse_check_id(report["check"].get<std::string>());
  const ClassRequest req = ClassRequest::from_json(cx.at("class"));
  ReplayResult result;
  result.check = report["check"].get<std::string>();
  dispatch_field(req.field, [&]<class S>(std::type_identity<S>, Context<S> ctx) {
    VerifyOptions options;
    if (cx.contains("via")) options.via = parse_via(cx["via"].get<std::string>());
    MatrixVerifier<S> verifier(make_spec<S>(req, ctx), parse_bracket_kind<S>(cx.at("bracket").get<std::string>(), ctx), options);
    result.mismatch = verifier.evaluate(id, verifier.witness_from_json(cx.at("inputs")));
  });
  result.reproduced = result.mismatch.has_value();
  return result;
}

}  // namespace affgebra
