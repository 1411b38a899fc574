#include "evaluator.hpp"

#include <string_view>
#include <utility>
#include <vector>

#include "curb/error.hpp"

namespace curb::bridge::detail {

namespace {

using lang::Expr;
using lang::ExprKind;
using lang::Stmt;
using lang::StmtKind;

struct Value {
  bool is_bool = false;
  std::int64_t v = 0;
};

Value from_state(const StateValue& s) { return Value{s.is_boolean(), s.numeric()}; }

class Evaluator {
 public:
  Evaluator(const BindingSet* bindings, std::size_t fuel, CaptureChannel& channel)
      : bindings_(bindings), fuel_(fuel), channel_(channel) {}

  // Returns true once an emit has executed.
  bool block(const lang::Block& stmts) {
    const std::size_t mark = env_.size();
    for (const Stmt& s : stmts) {
      if (statement(s)) return true;
    }
    env_.resize(mark);
    return false;
  }

 private:
  void burn() {
    if (fuel_ == 0) throw RuleRuntimeError(RuntimeFault::FuelExhausted, "node-visit budget exceeded");
    --fuel_;
  }

  bool statement(const Stmt& s) {
    burn();
    switch (s.kind) {
      case StmtKind::Let:
        env_.emplace_back(s.name, eval(s.expr));
        return false;
      case StmtKind::If:
        if (eval(s.expr).v != 0) return block(s.then_block);
        if (s.has_else) return block(s.else_block);
        return false;
      case StmtKind::Emit: {
        Value out = eval(s.expr);
        channel_.write(out.is_bool ? (out.v != 0 ? "true" : "false") : std::to_string(out.v));
        return true;
      }
    }
    return false;
  }

  const BindingSet& bound(std::string_view what) const {
    if (bindings_ == nullptr) {
      throw Error(ErrorCode::Usage, "closed rule source still references " + std::string(what));
    }
    return *bindings_;
  }

  static Value integer(std::int64_t v) { return Value{false, v}; }
  static Value boolean(bool b) { return Value{true, b ? 1 : 0}; }

  [[noreturn]] static void overflow(const Expr& e) {
    throw RuleRuntimeError(RuntimeFault::ArithmeticOverflow, "in \"" + std::string(lang::spelling(e.kind)) + "\"");
  }

  Value eval(const Expr& e) {
    burn();
    switch (e.kind) {
      case ExprKind::IntLit:
        return integer(e.value);
      case ExprKind::BoolLit:
        return boolean(e.value != 0);
      case ExprKind::EntityState:
        return from_state(bound("entityState").entity_state());
      case ExprKind::MilieuSum:
        return integer(bound("milieuSum").milieu_sum());
      case ExprKind::MilieuCount:
        return integer(bound("milieuCount").milieu_count());
      case ExprKind::MilieuAt: {
        const BindingSet& b = bound("milieu");
        const std::int64_t k = eval(e.operands[0]).v;
        if (k < 0) throw RuleRuntimeError(RuntimeFault::NegativeMilieuIndex, "milieu [ " + std::to_string(k) + " ]");
        if (k >= b.milieu_count()) {
          throw RuleRuntimeError(RuntimeFault::MilieuIndexOutOfRange,
                                 "milieu [ " + std::to_string(k) + " ] with milieu size " +
                                     std::to_string(b.milieu_count()));
        }
        return from_state(b.milieu_states()[static_cast<std::size_t>(k)]);
      }
      case ExprKind::Ident:
        for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
          if (it->first == e.name) return it->second;
        }
        throw Error(ErrorCode::Usage, "unbound identifier \"" + e.name + "\" reached evaluation");
      case ExprKind::Not:
        return boolean(eval(e.operands[0]).v == 0);
      case ExprKind::Neg: {
        std::int64_t r = 0;
        if (__builtin_sub_overflow(std::int64_t{0}, eval(e.operands[0]).v, &r)) overflow(e);
        return integer(r);
      }
      case ExprKind::Or:
        if (eval(e.operands[0]).v != 0) return boolean(true);
        return boolean(eval(e.operands[1]).v != 0);
      case ExprKind::And:
        if (eval(e.operands[0]).v == 0) return boolean(false);
        return boolean(eval(e.operands[1]).v != 0);
      default:
        break;
    }

    const std::int64_t a = eval(e.operands[0]).v;
    const std::int64_t b = eval(e.operands[1]).v;
    std::int64_t r = 0;
    switch (e.kind) {
      case ExprKind::Eq: return boolean(a == b);
      case ExprKind::Ne: return boolean(a != b);
      case ExprKind::Lt: return boolean(a < b);
      case ExprKind::Le: return boolean(a <= b);
      case ExprKind::Gt: return boolean(a > b);
      case ExprKind::Ge: return boolean(a >= b);
      case ExprKind::Add:
        if (__builtin_add_overflow(a, b, &r)) overflow(e);
        return integer(r);
      case ExprKind::Sub:
        if (__builtin_sub_overflow(a, b, &r)) overflow(e);
        return integer(r);
      case ExprKind::Mul:
        if (__builtin_mul_overflow(a, b, &r)) overflow(e);
        return integer(r);
      case ExprKind::Div:
      case ExprKind::Mod:
        if (b == 0) throw RuleRuntimeError(RuntimeFault::DivisionByZero, std::to_string(a) + " " +
                                                                           std::string(lang::spelling(e.kind)) + " 0");
        if (a == INT64_MIN && b == -1) overflow(e);
        // Truncation toward zero; the remainder takes the dividend's sign.
        return integer(e.kind == ExprKind::Div ? a / b : a % b);
      default:
        throw Error(ErrorCode::Usage, "unknown expression kind");
    }
  }

  const BindingSet* bindings_;
  std::size_t fuel_;
  CaptureChannel& channel_;
  std::vector<std::pair<std::string_view, Value>> env_;
};

}  // namespace

void evaluate(const lang::Program& program, const BindingSet* bindings, std::size_t fuel,
              CaptureChannel& channel) {
  Evaluator(bindings, fuel, channel).block(program.statements);
}

}  // namespace curb::bridge::detail
