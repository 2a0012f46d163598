#pragma once

// Carrier-independent catalogue of affine-space and Lie-affgebra identities.
// Each identity is evaluated exactly on a named witness tuple; the first
// clause that fails is returned together with both sides of the equation.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "affgebra/affine.hpp"
#include "affgebra/error.hpp"
#include "affgebra/json_io.hpp"

namespace affgebra {

enum class CheckId {
  HeapAssoc,
  Malcev,
  HeapComm,
  ActAdd,
  ActHeap,
  ActAssoc,
  ActUnit,
  ActZero,
  ActBaseChange,
  BracketLeftAffine,
  BracketRightAffine,
  Antisym,
  Jacobi,
  Closure,
  Idempotent,
  RetractGroup,
  RetractVector,
  RetractLie,
  ZetaRetractTrivial,
  BulletAssoc,
  BulletCommutator,
  TranslateGroupIso,
  TranslateLieIso,
  TheoremIso,
  CorollaryRetract,
};

/// Which bracket a check is meaningful for.
enum class BracketRequirement { Any, Zeta, Commutator, Ignored };

struct CheckInfo {
  CheckId id;
  std::string_view name;
  std::vector<std::string_view> points;
  std::vector<std::string_view> scalars;
  BracketRequirement bracket = BracketRequirement::Any;
  bool matrix_only = false;  // needs class membership or the transforms
  bool empirical = false;    // outcome is recorded, never asserted
  std::size_t default_trials = 100;
};

inline const std::vector<CheckInfo>& check_catalogue() {
  using R = BracketRequirement;
  static const std::vector<CheckInfo> catalogue = {
      {CheckId::HeapAssoc, "heap-assoc", {"a", "b", "c", "d", "e"}, {}},
      {CheckId::Malcev, "malcev", {"a", "b"}, {}},
      {CheckId::HeapComm, "heap-comm", {"a", "b", "c"}, {}},
      {CheckId::ActAdd, "act-add", {"a", "b"}, {"alpha", "beta", "gamma"}},
      {CheckId::ActHeap, "act-heap", {"a", "b", "c", "d"}, {"alpha"}},
      {CheckId::ActAssoc, "act-assoc", {"a", "b"}, {"alpha", "beta"}},
      {CheckId::ActUnit, "act-unit", {"a", "b"}, {}},
      {CheckId::ActZero, "act-zero", {"a", "b"}, {}},
      {CheckId::ActBaseChange, "act-base-change", {"a", "b", "c"}, {"alpha"}},
      {CheckId::BracketLeftAffine, "bracket-left-affine", {"a", "x", "y", "z"}, {"alpha"}},
      {CheckId::BracketRightAffine, "bracket-right-affine", {"a", "x", "y", "z"}, {"alpha"}},
      {CheckId::Antisym, "antisym", {"a", "b"}, {}},
      {CheckId::Jacobi, "jacobi", {"a", "b", "c"}, {}, R::Any, false, false, 50},
      {CheckId::Closure, "closure", {"a", "b", "c"}, {"alpha"}, R::Any, true},
      {CheckId::Idempotent, "idempotent", {"a"}, {}},
      {CheckId::RetractGroup, "retract-group", {"o", "a", "b", "c"}, {}},
      {CheckId::RetractVector, "retract-vector", {"o", "a", "b"}, {"alpha", "beta"}},
      {CheckId::RetractLie, "retract-lie", {"o", "a", "b", "c"}, {"alpha"}},
      {CheckId::ZetaRetractTrivial, "zeta-retract-trivial", {"o", "a", "b"}, {}, R::Zeta},
      {CheckId::BulletAssoc, "bullet-assoc", {"o", "a", "b", "c"}, {}, R::Ignored},
      {CheckId::BulletCommutator, "bullet-commutator", {"o", "a", "b"}, {}, R::Commutator},
      {CheckId::TranslateGroupIso, "translate-group-iso", {"o", "obar", "a", "b"}, {}},
      {CheckId::TranslateLieIso, "translate-lie-iso", {"o", "obar", "a", "b"}, {}, R::Any, false, true},
      {CheckId::TheoremIso, "theorem-iso", {"a", "b", "c", "y"}, {"alpha"}, R::Ignored, true, false, 50},
      {CheckId::CorollaryRetract, "corollary-retract", {"a", "b", "x", "y"}, {}, R::Ignored, true},
  };
  return catalogue;
}

inline const CheckInfo& check_info(CheckId id) {
  const auto& catalogue = check_catalogue();
  auto it = std::find_if(catalogue.begin(), catalogue.end(), [id](const CheckInfo& info) { return info.id == id; });
  return *it;
}

inline CheckId parse_check_id(std::string_view name) {
  for (const auto& info : check_catalogue())
    if (info.name == name) return info.id;
  fail(ErrorCode::UnknownCheck, "no check named '" + std::string(name) + "'");
}

inline bool check_applies(CheckId id, bool zeta_bracket) {
  switch (check_info(id).bracket) {
    case BracketRequirement::Zeta: return zeta_bracket;
    case BracketRequirement::Commutator: return !zeta_bracket;
    default: return true;
  }
}

/// Named inputs of one trial.
template <class P, class K>
struct Witness {
  std::vector<std::pair<std::string, P>> points;
  std::vector<std::pair<std::string, K>> scalars;

  const P& point(std::string_view name) const {
    for (const auto& [key, value] : points)
      if (key == name) return value;
    fail(ErrorCode::ParseError, "witness lacks point '" + std::string(name) + "'");
  }
  const K& scalar(std::string_view name) const {
    for (const auto& [key, value] : scalars)
      if (key == name) return value;
    fail(ErrorCode::ParseError, "witness lacks scalar '" + std::string(name) + "'");
  }
};

struct Mismatch {
  std::string clause;
  Json expected;
  Json actual;
};

/// Evaluates one carrier-independent identity. `to_json` renders points for
/// the counterexample. Returns the first failing clause, if any.
template <AffineCarrier C, class ToJson>
std::optional<Mismatch> evaluate_identity(CheckId id, const C& space,
                                          const Witness<typename C::point_type, typename C::scalar_type>& w,
                                          ToJson&& to_json) {
  using P = typename C::point_type;
  using K = typename C::scalar_type;
  std::optional<Mismatch> out;
  auto expect = [&](const char* clause, const P& expected, const P& actual) {
    if (out || space.equal(expected, actual)) return;
    out = Mismatch{clause, to_json(expected), to_json(actual)};
  };
  auto p = [&](std::string_view name) -> const P& { return w.point(name); };
  auto s = [&](std::string_view name) -> const K& { return w.scalar(name); };
  auto br = [&](const P& x, const P& y) { return space.bracket(x, y); };
  auto h = [&](const P& x, const P& y, const P& z) { return space.heap(x, y, z); };
  auto act = [&](const K& alpha, const P& base, const P& x) { return space.action(alpha, base, x); };

  switch (id) {
    case CheckId::HeapAssoc: {
      const P &a = p("a"), &b = p("b"), &c = p("c"), &d = p("d"), &e = p("e");
      expect("<<a,b,c>,d,e> = <a,b,<c,d,e>>", h(a, b, h(c, d, e)), h(h(a, b, c), d, e));
      break;
    }
    case CheckId::Malcev: {
      const P &a = p("a"), &b = p("b");
      expect("<a,b,b> = a", a, h(a, b, b));
      expect("<b,b,a> = a", a, h(b, b, a));
      break;
    }
    case CheckId::HeapComm: {
      const P &a = p("a"), &b = p("b"), &c = p("c");
      expect("<a,b,c> = <c,b,a>", h(c, b, a), h(a, b, c));
      break;
    }
    case CheckId::ActAdd: {
      const P &a = p("a"), &b = p("b");
      const K &al = s("alpha"), &be = s("beta"), &ga = s("gamma");
      expect("(alpha-beta+gamma)|>_a b = <alpha|>_a b, beta|>_a b, gamma|>_a b>",
             h(act(al, a, b), act(be, a, b), act(ga, a, b)), act(al - be + ga, a, b));
      break;
    }
    case CheckId::ActHeap: {
      const P &a = p("a"), &b = p("b"), &c = p("c"), &d = p("d");
      const K& al = s("alpha");
      expect("alpha|>_a <b,c,d> = <alpha|>_a b, alpha|>_a c, alpha|>_a d>",
             h(act(al, a, b), act(al, a, c), act(al, a, d)), act(al, a, h(b, c, d)));
      break;
    }
    case CheckId::ActAssoc: {
      const P &a = p("a"), &b = p("b");
      const K &al = s("alpha"), &be = s("beta");
      expect("(alpha beta)|>_a b = alpha|>_a (beta|>_a b)", act(al, a, act(be, a, b)), act(al * be, a, b));
      break;
    }
    case CheckId::ActUnit: {
      const P &a = p("a"), &b = p("b");
      expect("1|>_a b = b", b, act(space.scalar(1), a, b));
      break;
    }
    case CheckId::ActZero: {
      const P &a = p("a"), &b = p("b");
      expect("0|>_a b = a", a, act(space.scalar(0), a, b));
      break;
    }
    case CheckId::ActBaseChange: {
      const P &a = p("a"), &b = p("b"), &c = p("c");
      const K& al = s("alpha");
      expect("alpha|>_a b = <alpha|>_c b, alpha|>_c a, a>", h(act(al, c, b), act(al, c, a), a), act(al, a, b));
      break;
    }
    case CheckId::BracketLeftAffine: {
      const P &a = p("a"), &x = p("x"), &y = p("y"), &z = p("z");
      const K& al = s("alpha");
      expect("[<x,y,z>,a] = <[x,a],[y,a],[z,a]>", h(br(x, a), br(y, a), br(z, a)), br(h(x, y, z), a));
      expect("[alpha|>_x y, a] = alpha|>_[x,a] [y,a]", act(al, br(x, a), br(y, a)), br(act(al, x, y), a));
      break;
    }
    case CheckId::BracketRightAffine: {
      const P &a = p("a"), &x = p("x"), &y = p("y"), &z = p("z");
      const K& al = s("alpha");
      expect("[a,<x,y,z>] = <[a,x],[a,y],[a,z]>", h(br(a, x), br(a, y), br(a, z)), br(a, h(x, y, z)));
      expect("[a, alpha|>_x y] = alpha|>_[a,x] [a,y]", act(al, br(a, x), br(a, y)), br(a, act(al, x, y)));
      break;
    }
    case CheckId::Antisym: {
      const P &a = p("a"), &b = p("b");
      expect("<[a,b],[a,a],[b,a]> = [b,b]", br(b, b), h(br(a, b), br(a, a), br(b, a)));
      break;
    }
    case CheckId::Jacobi: {
      const P &a = p("a"), &b = p("b"), &c = p("c");
      expect("<[a,[b,c]],[a,a],[b,[c,a]],[b,b],[c,[a,b]]> = [c,c]", br(c, c),
             heap5(space, br(a, br(b, c)), br(a, a), br(b, br(c, a)), br(b, b), br(c, br(a, b))));
      break;
    }
    case CheckId::Idempotent: {
      const P& a = p("a");
      expect("[a,a] = a", a, br(a, a));
      break;
    }
    case CheckId::RetractGroup: {
      const P &o = p("o"), &a = p("a"), &b = p("b"), &c = p("c");
      auto add = [&](const P& x, const P& y) { return retract_add(space, o, x, y); };
      expect("(a+b)+c = a+(b+c)", add(a, add(b, c)), add(add(a, b), c));
      expect("a+b = b+a", add(b, a), add(a, b));
      expect("a+o = a", a, add(a, o));
      expect("a+(-a) = o", o, add(a, retract_neg(space, o, a)));
      break;
    }
    case CheckId::RetractVector: {
      const P &o = p("o"), &a = p("a"), &b = p("b");
      const K &al = s("alpha"), &be = s("beta");
      auto add = [&](const P& x, const P& y) { return retract_add(space, o, x, y); };
      auto scale = [&](const K& k, const P& x) { return retract_scale(space, o, k, x); };
      expect("alpha(a+b) = alpha a + alpha b", add(scale(al, a), scale(al, b)), scale(al, add(a, b)));
      expect("(alpha+beta)a = alpha a + beta a", add(scale(al, a), scale(be, a)), scale(al + be, a));
      expect("(alpha beta)a = alpha(beta a)", scale(al, scale(be, a)), scale(al * be, a));
      expect("1a = a", a, scale(space.scalar(1), a));
      expect("0a = o", o, scale(space.scalar(0), a));
      break;
    }
    case CheckId::RetractLie: {
      const P &o = p("o"), &a = p("a"), &b = p("b"), &c = p("c");
      const K& al = s("alpha");
      auto add = [&](const P& x, const P& y) { return retract_add(space, o, x, y); };
      auto scale = [&](const K& k, const P& x) { return retract_scale(space, o, k, x); };
      auto lb = [&](const P& x, const P& y) { return lie_retract_bracket(space, o, x, y); };
      expect("[a+b,c]_o = [a,c]_o + [b,c]_o", add(lb(a, c), lb(b, c)), lb(add(a, b), c));
      expect("[c,a+b]_o = [c,a]_o + [c,b]_o", add(lb(c, a), lb(c, b)), lb(c, add(a, b)));
      expect("[alpha a,b]_o = alpha[a,b]_o", scale(al, lb(a, b)), lb(scale(al, a), b));
      expect("[a,alpha b]_o = alpha[a,b]_o", scale(al, lb(a, b)), lb(a, scale(al, b)));
      expect("[a,a]_o = o", o, lb(a, a));
      expect("[a,[b,c]_o]_o + [b,[c,a]_o]_o + [c,[a,b]_o]_o = o", o,
             add(add(lb(a, lb(b, c)), lb(b, lb(c, a))), lb(c, lb(a, b))));
      break;
    }
    case CheckId::ZetaRetractTrivial: {
      const P &o = p("o"), &a = p("a"), &b = p("b");
      expect("[a,b]_o = o", o, lie_retract_bracket(space, o, a, b));
      break;
    }
    case CheckId::BulletAssoc:
    case CheckId::BulletCommutator: {
      if constexpr (MultiplicativeCarrier<C>) {
        const P &o = p("o"), &a = p("a"), &b = p("b");
        auto dot = [&](const P& x, const P& y) { return assoc_retract_product(space, o, x, y); };
        if (id == CheckId::BulletAssoc) {
          const P& c = p("c");
          expect("(a.b).c = a.(b.c)", dot(a, dot(b, c)), dot(dot(a, b), c));
        } else {
          expect("[a,b]_o = a.b - b.a", retract_sub(space, o, dot(a, b), dot(b, a)), lie_retract_bracket(space, o, a, b));
        }
      } else {
        fail(ErrorCode::NotApplicable, "carrier has no multiplication");
      }
      break;
    }
    case CheckId::TranslateGroupIso: {
      const P &o = p("o"), &ob = p("obar"), &a = p("a"), &b = p("b");
      auto tau = [&](const P& x) { return translate(space, o, ob, x); };
      expect("tau(o) = obar", ob, tau(o));
      expect("tau(a +_o b) = tau(a) +_obar tau(b)", retract_add(space, ob, tau(a), tau(b)), tau(retract_add(space, o, a, b)));
      expect("tau(-_o a) = -_obar tau(a)", retract_neg(space, ob, tau(a)), tau(retract_neg(space, o, a)));
      break;
    }
    case CheckId::TranslateLieIso: {
      const P &o = p("o"), &ob = p("obar"), &a = p("a"), &b = p("b");
      auto tau = [&](const P& x) { return translate(space, o, ob, x); };
      expect("tau([a,b]_o) = [tau a, tau b]_obar", lie_retract_bracket(space, ob, tau(a), tau(b)),
             tau(lie_retract_bracket(space, o, a, b)));
      break;
    }
    case CheckId::Closure:
    case CheckId::TheoremIso:
    case CheckId::CorollaryRetract:
      fail(ErrorCode::NotApplicable, std::string(check_info(id).name) + " needs a matrix class");
  }
  return out;
}

}  // namespace affgebra
