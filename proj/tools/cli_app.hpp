#pragma once

// Command-line front end. stdout carries JSON only; diagnostics go to stderr.
// Exit codes: 0 success, 1 a check failed, 2 bad flags, bad input or a library error.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "affgebra/affgebra.hpp"

namespace affgebra::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

inline std::uint64_t default_seed() {
  if (const char* env = std::getenv("AFFGEBRA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidArgument, std::string("AFFGEBRA_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

/// Inline JSON text, "-" for stdin, or a file path.
inline std::string read_input_text(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  std::ostringstream buf;
  if (arg == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(arg);
    if (!in) fail(ErrorCode::InvalidArgument, "cannot read '" + arg + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

/// A whole JSON document, or a JSON-lines stream from which the first failed
/// report is taken.
inline Json read_report(const std::string& arg) {
  const std::string text = read_input_text(arg);
  auto unwrap = [](const Json& j) { return j.is_object() && j.contains("report") ? j["report"] : j; };
  if (Json whole = Json::parse(text, nullptr, false); !whole.is_discarded()) return unwrap(whole);
  std::istringstream lines(text);
  std::string line;
  std::optional<Json> first;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j = unwrap(parse_json_text(line));
    if (!first) first = j;
    if (j.is_object() && j.value("passed", true) == false) return j;
  }
  if (!first) fail(ErrorCode::ParseError, "no report found in input");
  return *first;
}

struct ClassFlags {
  std::string kind = "gna";
  std::size_t n = 1;
  std::string field;  // empty: Qi for una/suna, Q otherwise
  std::uint64_t p = 0;
  std::string c = "1";
  bool traceless = false;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--class", kind, "gna | sna | ona | una | suna | ga_c")->required();
    cmd.add_option("--n", n, "class parameter n (matrices are (n+1)x(n+1))")->required()->check(CLI::PositiveNumber);
    add_field(cmd);
    cmd.add_option("--c", c, "row/column sum for ga_c");
    cmd.add_flag("--traceless", traceless, "ga_c: restrict to trace zero");
  }

  void add_field(CLI::App& cmd) {
    cmd.add_option("--field", field, "Q | Qi | GF | surd | surd_c");
    cmd.add_option("--p", p, "prime modulus for GF");
  }

  FieldDesc field_desc(FieldTag fallback) const {
    FieldDesc desc{field.empty() ? fallback : parse_field_tag(field), 0};
    if (desc.tag == FieldTag::GF) {
      if (p == 0) fail(ErrorCode::InvalidArgument, "--field GF needs --p");
      desc.p = p;
    }
    return desc;
  }

  ClassRequest request() const {
    ClassRequest req;
    req.kind = parse_class_kind(kind);
    req.n = n;
    req.field = field_desc(is_hermitian_kind(req.kind) ? FieldTag::Qi : FieldTag::Q);
    req.c = c;
    req.traceless = traceless;
    return req;
  }
};

inline void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

template <ExactScalar S>
Json block_target_json(const BlockTarget<S>& target) {
  return Json{{"block", block_name(target.kind) + "(" + std::to_string(target.n) + ")"},
              {"base_block", matrix_to_json(target.base_block)}};
}

/// f(o) for the selected conjugation, as Matrix JSON.
template <ExactScalar S>
Json base_point_image(const MatrixClassSpec<S>& spec, Via via) {
  const Matrix<S> o = base_point(spec).value();
  if (via == Via::P) {
    if constexpr (S::tag == FieldTag::Surd || S::tag == FieldTag::SurdComplex)
      fail(ErrorCode::UnsupportedField, "conjugation by P is run over Q, Qi or GF");
    else
      return matrix_to_json(conjugator_P(spec).forward(o));
  }
  if constexpr (SurdExtensible<S>) return matrix_to_json(conjugator_U(spec).forward(o));
  else fail(ErrorCode::UnsupportedField, "conjugation by U needs a field inside the surd extension");
}

/// Checks each input against `--class` when given.
template <ExactScalar S>
void check_members(const std::optional<ClassFlags>& cls, const std::vector<std::pair<std::string, Matrix<S>>>& inputs,
                   const Context<S>& ctx) {
  if (!cls) return;
  for (const auto& [name, m] : inputs) {
    ClassFlags flags = *cls;
    flags.n = m.size() - 1;
    const MatrixClassSpec<S> spec = make_spec<S>(flags.request(), ctx);
    spec.validate();
    if (auto why = class_violation(spec, m)) fail(ErrorCode::ClassViolation, name + " not in " + spec.name() + ": " + *why);
  }
}

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact matrix Lie affgebras: construction, axiom checks and isomorphisms", "affgebra"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  ClassFlags cls;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::size_t trials = 0;
  std::vector<std::string> brackets{"commutator"};
  std::vector<std::string> checks;
  std::string via;
  bool inject_fault = false;
  std::string which;
  std::size_t count = 1;
  std::vector<std::string> inputs;
  std::string base_input;
  std::string member_class;

  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "sampling seed (default: $AFFGEBRA_SEED or 0)")->each([&](const std::string&) { seed_given = true; });
  };

  CLI::App* verify = app.add_subcommand("verify", "run catalogue checks on a class");
  cls.add_to(*verify);
  verify->add_option("--bracket", brackets, "commutator or zeta:<scalar>; comma-separated for several")->delimiter(',');
  add_seed(verify);
  verify->add_option("--trials", trials, "trials per check (0: catalogue default)");
  verify->add_option("--checks", checks, "comma-separated check names (default: all that apply)")->delimiter(',');
  verify->add_option("--via", via, "P or U for theorem/corollary checks");
  verify->add_flag("--inject-fault", inject_fault, "add 1 to entry (0,0) of the first sampled point");

  CLI::App* iso = app.add_subcommand("iso-check", "conjugate a class onto its block form and check the isomorphism");
  cls.add_to(*iso);
  iso->add_option("--via", via, "P or U (default: P for gna/sna/ga_c, U otherwise)");
  add_seed(iso);
  iso->add_option("--trials", trials, "samples (default 50)");

  CLI::App* corollary = app.add_subcommand("corollary", "check the retract at the base point is the classical algebra");
  cls.add_to(*corollary);
  corollary->add_option("--via", via, "P or U");
  add_seed(corollary);
  corollary->add_option("--trials", trials, "sampled pairs (default 100)");

  ClassFlags emit_flags;
  CLI::App* emit_cmd = app.add_subcommand("emit-matrix", "print P, its inverse, or U");
  emit_cmd->add_option("--which", which, "P | Pinv | U")->required()->check(CLI::IsMember({"P", "Pinv", "U"}));
  emit_cmd->add_option("--n", emit_flags.n, "class parameter n")->required()->check(CLI::PositiveNumber);
  emit_flags.add_field(*emit_cmd);

  CLI::App* bracket_cmd = app.add_subcommand("bracket", "bracket of two matrices");
  bracket_cmd->add_option("--bracket", brackets, "commutator or zeta:<scalar>")->expected(1);
  bracket_cmd->add_option("inputs", inputs, "two Matrix JSON documents (inline, file, or -)")->required()->expected(2);
  bracket_cmd->add_option("--class", member_class, "reject inputs outside this class");

  CLI::App* retract_cmd = app.add_subcommand("retract", "Lie retract bracket at a base point");
  retract_cmd->add_option("--bracket", brackets, "commutator or zeta:<scalar>")->expected(1);
  retract_cmd->add_option("-o,--base", base_input, "base point as Matrix JSON")->required();
  retract_cmd->add_option("inputs", inputs, "two Matrix JSON documents")->required()->expected(2);
  retract_cmd->add_option("--class", member_class, "reject inputs outside this class");

  CLI::App* dims = app.add_subcommand("dims", "dimension of the class (solver nullity)");
  cls.add_to(*dims);

  CLI::App* sample_cmd = app.add_subcommand("sample", "sample class members");
  cls.add_to(*sample_cmd);
  add_seed(sample_cmd);
  sample_cmd->add_option("--count", count, "number of samples");

  std::string report_input;
  CLI::App* replay = app.add_subcommand("replay", "re-evaluate a recorded counterexample");
  replay->add_option("report", report_input, "report JSON or JSON-lines stream (inline, file, or -)")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    if (!seed_given) seed = default_seed();
    VerifyOptions vopts;
    if (!via.empty()) vopts.via = parse_via(via);
    vopts.inject_fault = inject_fault;

    if (verify->parsed()) {
      const ClassRequest req = cls.request();
      SuiteOptions suite;
      suite.trials = trials;
      suite.verify = vopts;
      for (const auto& name : checks) {
        const CheckId id = parse_check_id(name);
        bool applies = false;
        for (const auto& b : brackets) applies = applies || check_applies(id, b.starts_with("zeta:"));
        if (!applies) fail(ErrorCode::NotApplicable, name + " does not apply to the requested bracket");
        suite.checks.push_back(id);
      }
      bool all_ok = true;
      run_all({req}, brackets, seed, suite, [&](const CheckReport& r) {
        all_ok = all_ok && r.ok();
        emit(out, r.to_json());
        if (!r.ok()) err << "FAIL " << r.check << " on " << r.subject << " [" << r.bracket << "]\n";
      });
      return all_ok ? kExitOk : kExitCheckFailed;
    }

    if (iso->parsed() || corollary->parsed()) {
      const ClassRequest req = cls.request();
      const bool theorem = iso->parsed();
      return dispatch_field(req.field, [&]<class S>(std::type_identity<S>, Context<S> ctx) {
        const MatrixClassSpec<S> spec = make_spec<S>(req, ctx);
        MatrixVerifier<S> verifier(spec, BracketKind<S>::commutator(), vopts);
        const BlockTarget<S> target = block_target(spec);
        Json line = Json::object();
        line["class"] = spec.name();
        line["via"] = via_name(verifier.via());
        line["block_target"] = block_target_json(target);
        if (theorem) {
          line["base_point_image"] = base_point_image(spec, verifier.via());
          line["report"] = verifier.verify_theorem(seed, trials ? trials : 50).to_json();
        } else {
          line["retract_dimension"] = verifier.block_algebra().dimension();
          line["report"] = verifier.run_corollary(seed, trials ? trials : 100).to_json();
        }
        const bool passed = line["report"]["passed"].template get<bool>();
        emit(out, line);
        if (!passed) err << "FAIL " << (theorem ? "theorem-iso" : "corollary-retract") << " on " << spec.name() << '\n';
        return passed ? kExitOk : kExitCheckFailed;
      });
    }

    if (emit_cmd->parsed()) {
      if (which == "U") {
        emit(out, matrix_to_json(build_U(emit_flags.n)));
        return kExitOk;
      }
      dispatch_field(emit_flags.field_desc(FieldTag::Q), [&]<class S>(std::type_identity<S>, Context<S> ctx) {
        emit(out, matrix_to_json(which == "P" ? build_P<S>(emit_flags.n, ctx) : build_P_inverse<S>(emit_flags.n, ctx)));
      });
      return kExitOk;
    }

    if (bracket_cmd->parsed() || retract_cmd->parsed()) {
      if (brackets.size() != 1) fail(ErrorCode::InvalidArgument, "give exactly one --bracket");
      std::vector<Json> docs;
      if (retract_cmd->parsed()) docs.push_back(parse_json_text(read_input_text(base_input)));
      for (const auto& in : inputs) docs.push_back(parse_json_text(read_input_text(in)));
      std::optional<ClassFlags> membership;
      if (!member_class.empty()) {
        membership = ClassFlags{};
        membership->kind = member_class;
      }
      dispatch_field(field_desc_from_json(docs.front()), [&]<class S>(std::type_identity<S>, Context<S> ctx) {
        std::vector<std::pair<std::string, Matrix<S>>> ms;
        const char* names[] = {"o", "a", "b"};
        const std::size_t offset = retract_cmd->parsed() ? 0 : 1;
        for (std::size_t k = 0; k < docs.size(); ++k) ms.emplace_back(names[k + offset], matrix_from_json<S>(docs[k], ctx));
        for (const auto& [name, m] : ms) ms.front().second.check_compatible(m);
        if (membership) {
          membership->field = std::string(field_name(describe<S>(ctx).tag));
          membership->p = describe<S>(ctx).p;
        }
        check_members<S>(membership, ms, ctx);
        const BracketKind<S> kind = parse_bracket_kind<S>(brackets.front(), ctx);
        if (retract_cmd->parsed()) emit(out, matrix_to_json(lie_retract_bracket(kind, ms[0].second, ms[1].second, ms[2].second)));
        else emit(out, matrix_to_json(bracket(kind, ms[0].second, ms[1].second)));
      });
      return kExitOk;
    }

    if (dims->parsed() || sample_cmd->parsed()) {
      const ClassRequest req = cls.request();
      dispatch_field(req.field, [&]<class S>(std::type_identity<S>, Context<S> ctx) {
        const MatrixClassSpec<S> spec = make_spec<S>(req, ctx);
        if (dims->parsed()) {
          out << dimension(spec) << '\n';
          return;
        }
        const ClassModel<S> model(spec);
        for (std::size_t i = 0; i < count; ++i) emit(out, matrix_to_json(model.sample(seed, i)));
      });
      return kExitOk;
    }

    if (replay->parsed()) {
      const ReplayResult result = replay_report(read_report(report_input));
      Json line{{"check", result.check}, {"reproduced", result.reproduced}};
      if (result.mismatch) {
        line["clause"] = result.mismatch->clause;
        line["expected"] = result.mismatch->expected;
        line["actual"] = result.mismatch->actual;
      }
      emit(out, line);
      if (!result.reproduced) err << "counterexample for " << result.check << " no longer fails\n";
      return result.reproduced ? kExitOk : kExitCheckFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << to_string(ErrorCode::ParseError) << ": " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace affgebra::cli
