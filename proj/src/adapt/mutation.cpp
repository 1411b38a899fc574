#include "curb/adapt/mutation.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "curb/error.hpp"
#include "curb/lang/render.hpp"

namespace curb::adapt {

using lang::Block;
using lang::Expr;
using lang::ExprKind;
using lang::Program;
using lang::Stmt;
using lang::StmtKind;
using lang::TypeEnv;
using lang::ValueType;

std::string_view to_string(MutationOperator op) {
  switch (op) {
    case MutationOperator::SubstituteLiteral: return "SubstituteLiteral";
    case MutationOperator::SubstituteOperator: return "SubstituteOperator";
    case MutationOperator::SubstituteReference: return "SubstituteReference";
    case MutationOperator::InsertLet: return "InsertLet";
    case MutationOperator::DeleteUnusedLet: return "DeleteUnusedLet";
    case MutationOperator::WrapInIf: return "WrapInIf";
    case MutationOperator::UnwrapIf: return "UnwrapIf";
  }
  return "?";
}

MutationPolicy MutationPolicy::only(MutationOperator op) {
  MutationPolicy p;
  p.weights.fill(0.0);
  p.weights[static_cast<std::size_t>(op)] = 1.0;
  return p;
}

void MutationPolicy::check() const {
  double total = 0;
  for (double w : weights) {
    if (!(w >= 0)) throw Error(ErrorCode::Usage, "mutation weights must be non-negative");
    total += w;
  }
  if (total <= 0) throw Error(ErrorCode::Usage, "mutation weights must not all be zero");
  if (max_retries == 0) throw Error(ErrorCode::Usage, "max_retries must be at least 1");
}

bool OperatorPool::contains(ExprKind kind) const {
  return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
}

OperatorPool operator_pool(const StateDomain& domain) {
  if (domain.kind() == DomainKind::Boolean) {
    return {{ExprKind::And, ExprKind::Or, ExprKind::Not, ExprKind::Eq, ExprKind::Ne}};
  }
  return {{ExprKind::And, ExprKind::Or, ExprKind::Not, ExprKind::Eq, ExprKind::Ne, ExprKind::Lt, ExprKind::Le,
           ExprKind::Gt, ExprKind::Ge, ExprKind::Neg, ExprKind::Add, ExprKind::Sub, ExprKind::Mul, ExprKind::Div,
           ExprKind::Mod}};
}

std::string AstPath::text() const {
  std::string out = "/";
  for (const Step& s : block) out += std::to_string(s.statement) + (s.else_branch ? ".else/" : ".then/");
  out += std::to_string(statement);
  for (std::size_t i : expr) out += "." + std::to_string(i);
  return out;
}

// ---------------------------------------------------------------------------
// Edits

namespace {

Block& block_at(Program& p, const AstPath& path) {
  Block* b = &p.statements;
  for (const AstPath::Step& step : path.block) {
    Stmt& s = b->at(step.statement);
    if (s.kind != StmtKind::If || (step.else_branch && !s.has_else)) throw std::out_of_range("not a block");
    b = step.else_branch ? &s.else_block : &s.then_block;
  }
  return *b;
}

Expr& expr_at(Stmt& s, const std::vector<std::size_t>& path) {
  Expr* e = &s.expr;
  for (std::size_t i : path) e = &e->operands.at(i);
  return *e;
}

}  // namespace

Program apply_edit(const Program& parent, const Edit& edit) {
  Program child = parent;
  try {
    Block& block = block_at(child, edit.path);
    const auto at = static_cast<std::ptrdiff_t>(edit.path.statement);
    switch (edit.kind) {
      case Edit::Kind::ReplaceExpr:
        expr_at(block.at(edit.path.statement), edit.path.expr) = edit.expr;
        break;
      case Edit::Kind::InsertStatement:
        if (edit.path.statement > block.size()) throw std::out_of_range("insert position");
        block.insert(block.begin() + at, edit.statements.begin(), edit.statements.end());
        break;
      case Edit::Kind::RemoveStatement:
        block.at(edit.path.statement);
        block.erase(block.begin() + at);
        break;
      case Edit::Kind::ReplaceStatement:
        block.at(edit.path.statement);
        block.erase(block.begin() + at);
        block.insert(block.begin() + at, edit.statements.begin(), edit.statements.end());
        break;
    }
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::Usage, "edit path " + edit.path.text() + " does not resolve");
  }
  return child;
}

// ---------------------------------------------------------------------------
// Site collection

namespace {

enum class Context { Plain, EmitRoot, MilieuIndex, Divisor };

struct ExprSite {
  AstPath path;
  const Expr* node;
  ValueType type;
  Context context;
  const TypeEnv* env;
};

struct StmtSite {
  AstPath path;
  const Stmt* stmt;
  TypeEnv env;  // bindings visible just before the statement
};

std::optional<std::int64_t> literal_value(const Expr& e) {
  if (e.kind == ExprKind::IntLit) return e.value;
  if (e.kind == ExprKind::Neg && e.operands[0].kind == ExprKind::IntLit) return -e.operands[0].value;
  return std::nullopt;
}

bool contains_let(const Block& block) {
  return std::any_of(block.begin(), block.end(), [](const Stmt& s) {
    return s.kind == StmtKind::Let || contains_let(s.then_block) || contains_let(s.else_block);
  });
}

void count_uses(const Expr& e, std::set<std::string>& used) {
  if (e.kind == ExprKind::Ident) used.insert(e.name);
  for (const Expr& op : e.operands) count_uses(op, used);
}

void count_uses(const Block& block, std::set<std::string>& used) {
  for (const Stmt& s : block) {
    count_uses(s.expr, used);
    count_uses(s.then_block, used);
    count_uses(s.else_block, used);
  }
}

class Sites {
 public:
  Sites(const lang::RuleProgram& program) : program_(program) {
    stmts_.reserve(lang::node_count(program.ast()));
    walk_block(program.ast().statements, {}, {});
    for (std::size_t i = 0; i < stmts_.size(); ++i) walk_stmt_exprs(i);
  }

  const std::vector<ExprSite>& exprs() const { return exprs_; }
  const std::vector<StmtSite>& stmts() const { return stmts_; }

 private:
  void walk_block(const Block& block, const std::vector<AstPath::Step>& block_path, TypeEnv env) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      const Stmt& s = block[i];
      stmts_.push_back(StmtSite{AstPath{block_path, i, {}}, &s, env});
      if (s.kind == StmtKind::Let) {
        env.emplace_back(s.name, type(s.expr, env));
      } else if (s.kind == StmtKind::If) {
        auto then_path = block_path;
        then_path.push_back({i, false});
        walk_block(s.then_block, then_path, env);
        if (s.has_else) {
          auto else_path = block_path;
          else_path.push_back({i, true});
          walk_block(s.else_block, else_path, env);
        }
      }
    }
  }

  void walk_stmt_exprs(std::size_t index) {
    const StmtSite& site = stmts_[index];
    const Context root = site.stmt->kind == StmtKind::Emit ? Context::EmitRoot : Context::Plain;
    std::vector<std::size_t> expr_path;
    walk_expr(site.stmt->expr, site, expr_path, root);
  }

  void walk_expr(const Expr& e, const StmtSite& site, std::vector<std::size_t>& expr_path, Context ctx) {
    AstPath path = site.path;
    path.expr = expr_path;
    exprs_.push_back(ExprSite{std::move(path), &e, type(e, site.env), ctx, &site.env});
    if (literal_value(e)) return;  // a signed literal is one site
    for (std::size_t k = 0; k < e.operands.size(); ++k) {
      Context sub = Context::Plain;
      if (e.kind == ExprKind::MilieuAt) sub = Context::MilieuIndex;
      if ((e.kind == ExprKind::Div || e.kind == ExprKind::Mod) && k == 1) sub = Context::Divisor;
      expr_path.push_back(k);
      walk_expr(e.operands[k], site, expr_path, sub);
      expr_path.pop_back();
    }
  }

  ValueType type(const Expr& e, const TypeEnv& env) const {
    return lang::type_of(e, program_.domain(), program_.milieu_count(), env);
  }

  const lang::RuleProgram& program_;
  std::vector<StmtSite> stmts_;
  std::vector<ExprSite> exprs_;
};

// ---------------------------------------------------------------------------
// Generation

struct IntRange {
  std::int64_t lo;
  std::int64_t hi;
};

std::vector<std::int64_t> clip(IntRange range, std::vector<std::int64_t> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::erase_if(values, [&](std::int64_t v) { return v < range.lo || v > range.hi; });
  return values;
}

bool has_choice(IntRange range, const std::vector<std::int64_t>& excluded) {
  if (range.lo > range.hi) return false;
  const auto span = static_cast<std::uint64_t>(range.hi - range.lo) + 1;
  return span > clip(range, excluded).size();
}

/// Uniform draw from [lo, hi] minus `excluded`; nullopt when nothing is left.
std::optional<std::int64_t> draw_from(IntRange range, std::vector<std::int64_t> excluded, Rng& rng) {
  if (!has_choice(range, excluded)) return std::nullopt;
  excluded = clip(range, std::move(excluded));
  const auto span = static_cast<std::uint64_t>(range.hi - range.lo) + 1;
  std::int64_t v = range.lo + static_cast<std::int64_t>(rng.below(span - excluded.size()));
  for (std::int64_t x : excluded) {
    if (x <= v) ++v;
  }
  return v;
}

class Generator {
 public:
  Generator(const lang::RuleProgram& program, Rng& rng) : program_(program), rng_(rng) {
    pool_ = operator_pool(program.domain());
  }

  bool int_domain() const { return program_.domain().kind() == DomainKind::IntegerRange; }
  std::size_t milieu_count() const { return program_.milieu_count(); }

  /// Literal range for an integer literal in the given context.
  IntRange int_literal_range(Context ctx) const {
    if (ctx == Context::MilieuIndex) {
      return {0, static_cast<std::int64_t>(milieu_count()) - 1};
    }
    if (int_domain()) return {program_.domain().lo(), program_.domain().hi()};
    return {0, static_cast<std::int64_t>(milieu_count())};
  }

  std::optional<Expr> nonzero_literal() {
    auto v = draw_from(int_literal_range(Context::Plain), {0}, rng_);
    if (!v) return std::nullopt;
    return Expr::literal(StateValue::integer(*v));
  }

  /// Every reference expression of `type` that may replace `current`.
  std::vector<Expr> references(ValueType type, Context ctx, const TypeEnv& env) const {
    std::vector<Expr> out;
    const ValueType domain_type = lang::value_type_of(program_.domain());
    if (type == domain_type) {
      out.push_back(Expr::entity_state());
      for (std::size_t k = 0; k < milieu_count(); ++k) {
        out.push_back(Expr::milieu_at(Expr::int_lit(static_cast<std::int64_t>(k))));
      }
    }
    // An emitted reference must be a domain value by construction.
    if (ctx == Context::EmitRoot) return out;
    if (type == ValueType::Int) {
      out.push_back(Expr::milieu_sum());
      out.push_back(Expr::milieu_count());
    }
    for (const auto& [name, t] : env) {
      if (t == type) out.push_back(Expr::ident(name));
    }
    return out;
  }

  Expr atom(ValueType type, const TypeEnv& env) {
    std::vector<Expr> refs = references(type, Context::Plain, env);
    // Literals get the same weight as the whole reference family.
    if (refs.empty() || rng_.coin()) {
      if (type == ValueType::Bool) return Expr::bool_lit(rng_.coin());
      auto v = draw_from(int_literal_range(Context::Plain), {}, rng_);
      return Expr::literal(StateValue::integer(*v));
    }
    return refs[rng_.below(refs.size())];
  }

  Expr expression(ValueType type, std::size_t depth, const TypeEnv& env) {
    if (depth == 0 || rng_.coin()) return atom(type, env);
    if (type == ValueType::Int) {
      if (!int_domain()) return atom(type, env);
      static constexpr ExprKind kArith[] = {ExprKind::Add, ExprKind::Sub, ExprKind::Mul, ExprKind::Div,
                                            ExprKind::Mod, ExprKind::Neg};
      const ExprKind op = kArith[rng_.below(std::size(kArith))];
      if (op == ExprKind::Neg) return Expr::unary(op, expression(ValueType::Int, depth - 1, env));
      Expr lhs = expression(ValueType::Int, depth - 1, env);
      if (op == ExprKind::Div || op == ExprKind::Mod) {
        // Divisors are nonzero literals so generated code cannot divide by zero.
        if (auto divisor = nonzero_literal()) return Expr::binary(op, std::move(lhs), std::move(*divisor));
        return Expr::binary(ExprKind::Add, std::move(lhs), expression(ValueType::Int, depth - 1, env));
      }
      return Expr::binary(op, std::move(lhs), expression(ValueType::Int, depth - 1, env));
    }

    std::vector<ExprKind> bool_ops;
    for (ExprKind k : pool_.kinds) {
      if (k == ExprKind::Not || k == ExprKind::And || k == ExprKind::Or || lang::is_comparison(k)) {
        bool_ops.push_back(k);
      }
    }
    const ExprKind op = bool_ops[rng_.below(bool_ops.size())];
    if (op == ExprKind::Not) return Expr::unary(op, expression(ValueType::Bool, depth - 1, env));
    if (op == ExprKind::And || op == ExprKind::Or) {
      Expr lhs = expression(ValueType::Bool, depth - 1, env);
      return Expr::binary(op, std::move(lhs), expression(ValueType::Bool, depth - 1, env));
    }
    const ValueType operand =
        (op == ExprKind::Eq || op == ExprKind::Ne) && rng_.coin() ? ValueType::Bool : ValueType::Int;
    Expr lhs = expression(operand, depth - 1, env);
    return Expr::binary(op, std::move(lhs), expression(operand, depth - 1, env));
  }

  const OperatorPool& pool() const { return pool_; }
  Rng& rng() { return rng_; }

 private:
  const lang::RuleProgram& program_;
  Rng& rng_;
  OperatorPool pool_;
};

// Alternatives to a binary operator within the pool, same operand and result types.
std::vector<ExprKind> operator_alternatives(const ExprSite& site, const OperatorPool& pool,
                                            const lang::RuleProgram& program) {
  const Expr& e = *site.node;
  if (!lang::is_binary(e.kind)) return {};
  std::vector<ExprKind> family;
  if (e.kind == ExprKind::And || e.kind == ExprKind::Or) {
    family = {ExprKind::And, ExprKind::Or};
  } else if (lang::is_arithmetic(e.kind)) {
    family = {ExprKind::Add, ExprKind::Sub, ExprKind::Mul, ExprKind::Div, ExprKind::Mod};
  } else {
    const ValueType operand =
        lang::type_of(e.operands[0], program.domain(), program.milieu_count(), *site.env);
    if (operand == ValueType::Bool) {
      family = {ExprKind::Eq, ExprKind::Ne};
    } else {
      family = {ExprKind::Eq, ExprKind::Ne, ExprKind::Lt, ExprKind::Le, ExprKind::Gt, ExprKind::Ge};
    }
  }
  const auto divisor = literal_value(e.operands[1]);
  const bool safe_divisor = divisor && *divisor != 0;
  std::vector<ExprKind> out;
  for (ExprKind k : family) {
    if (k == e.kind || !pool.contains(k)) continue;
    if ((k == ExprKind::Div || k == ExprKind::Mod) && !safe_divisor) continue;
    out.push_back(k);
  }
  return out;
}

template <typename T, typename Pred>
std::vector<const T*> filter(const std::vector<T>& items, Pred pred) {
  std::vector<const T*> out;
  for (const T& item : items) {
    if (pred(item)) out.push_back(&item);
  }
  return out;
}

[[noreturn]] void no_site(MutationOperator op) {
  throw Error(ErrorCode::NoApplicableOperator, std::string(to_string(op)) + " has no site in the parent program");
}

std::string render_block(const std::vector<Stmt>& stmts) {
  std::string out;
  for (const Stmt& s : stmts) {
    if (!out.empty()) out += '\n';
    out += lang::render(s);
  }
  return out;
}

Edit replace_expr(const AstPath& path, Expr e) {
  Edit edit;
  edit.kind = Edit::Kind::ReplaceExpr;
  edit.path = path;
  edit.expr = std::move(e);
  return edit;
}

Edit statement_edit(Edit::Kind kind, AstPath path, std::vector<Stmt> stmts) {
  Edit edit;
  edit.kind = kind;
  path.expr.clear();
  edit.path = std::move(path);
  edit.statements = std::move(stmts);
  return edit;
}

}  // namespace

// ---------------------------------------------------------------------------
// Operators

Mutation mutate_with(MutationOperator op, const lang::RuleProgram& parent, const MutationPolicy& policy, Rng& rng,
                     IdentifierCounter& counter) {
  const std::uint64_t draws_before = rng.draws();
  const Sites sites(parent);
  Generator gen(parent, rng);

  MutationDescriptor d;
  d.op = op;

  switch (op) {
    case MutationOperator::SubstituteLiteral: {
      auto excluded = [](const ExprSite& s) {
        std::vector<std::int64_t> out{*literal_value(*s.node)};
        if (s.context == Context::Divisor) out.push_back(0);
        return out;
      };
      auto candidates = filter(sites.exprs(), [&](const ExprSite& s) {
        if (s.node->kind == ExprKind::BoolLit) return true;
        return literal_value(*s.node) && has_choice(gen.int_literal_range(s.context), excluded(s));
      });
      if (candidates.empty()) no_site(op);
      const ExprSite& site = *candidates[rng.below(candidates.size())];
      Expr replacement;
      if (site.node->kind == ExprKind::BoolLit) {
        replacement = Expr::bool_lit(site.node->value == 0);
      } else {
        auto v = draw_from(gen.int_literal_range(site.context), excluded(site), rng);
        if (!v) no_site(op);
        replacement = Expr::literal(StateValue::integer(*v));
      }
      d.path = site.path;
      d.before = lang::render(*site.node);
      d.after = lang::render(replacement);
      d.edit = replace_expr(site.path, std::move(replacement));
      break;
    }

    case MutationOperator::SubstituteOperator: {
      auto candidates = filter(sites.exprs(), [&](const ExprSite& s) {
        return !operator_alternatives(s, gen.pool(), parent).empty();
      });
      if (candidates.empty()) no_site(op);
      const ExprSite& site = *candidates[rng.below(candidates.size())];
      const auto alternatives = operator_alternatives(site, gen.pool(), parent);
      Expr replacement = *site.node;
      replacement.kind = alternatives[rng.below(alternatives.size())];
      d.path = site.path;
      d.before = lang::render(*site.node);
      d.after = lang::render(replacement);
      d.edit = replace_expr(site.path, std::move(replacement));
      break;
    }

    case MutationOperator::SubstituteReference: {
      auto options = [&](const ExprSite& s) {
        std::vector<Expr> refs = gen.references(s.type, s.context, *s.env);
        std::erase(refs, *s.node);
        return refs;
      };
      auto candidates = filter(sites.exprs(), [&](const ExprSite& s) {
        return lang::is_reference(s.node->kind) && !options(s).empty();
      });
      if (candidates.empty()) no_site(op);
      const ExprSite& site = *candidates[rng.below(candidates.size())];
      const std::vector<Expr> refs = options(site);
      Expr replacement = refs[rng.below(refs.size())];
      d.path = site.path;
      d.before = lang::render(*site.node);
      d.after = lang::render(replacement);
      d.edit = replace_expr(site.path, std::move(replacement));
      break;
    }

    case MutationOperator::InsertLet: {
      const auto& stmts = sites.stmts();
      const StmtSite& site = stmts[rng.below(stmts.size())];
      std::set<std::string> bound;
      for (const StmtSite& s : stmts) {
        if (s.stmt->kind == StmtKind::Let) bound.insert(s.stmt->name);
      }
      std::string name = generate_identifier(counter, policy.identifier_stem);
      while (bound.count(name) != 0) name = generate_identifier(counter, policy.identifier_stem);
      const ValueType type = rng.coin() ? ValueType::Int : ValueType::Bool;
      Stmt let = Stmt::let(std::move(name), gen.expression(type, policy.max_depth, site.env));
      d.path = site.path;
      d.before = "";
      d.after = lang::render(let);
      d.edit = statement_edit(Edit::Kind::InsertStatement, site.path, {std::move(let)});
      break;
    }

    case MutationOperator::DeleteUnusedLet: {
      std::set<std::string> used;
      count_uses(parent.ast().statements, used);
      auto candidates = filter(sites.stmts(), [&](const StmtSite& s) {
        return s.stmt->kind == StmtKind::Let && used.count(s.stmt->name) == 0;
      });
      if (candidates.empty()) no_site(op);
      const StmtSite& site = *candidates[rng.below(candidates.size())];
      d.path = site.path;
      d.before = lang::render(*site.stmt);
      d.after = "";
      d.edit = statement_edit(Edit::Kind::RemoveStatement, site.path, {});
      break;
    }

    case MutationOperator::WrapInIf: {
      auto candidates = filter(sites.stmts(), [](const StmtSite& s) {
        return s.stmt->kind != StmtKind::Let && !contains_let(s.stmt->then_block) &&
               !contains_let(s.stmt->else_block);
      });
      if (candidates.empty()) no_site(op);
      const StmtSite& site = *candidates[rng.below(candidates.size())];
      Expr cond = gen.expression(ValueType::Bool, policy.max_depth, site.env);
      Stmt wrapped = Stmt::if_else(std::move(cond), {*site.stmt}, {*site.stmt});
      d.path = site.path;
      d.before = lang::render(*site.stmt);
      d.after = lang::render(wrapped);
      d.edit = statement_edit(Edit::Kind::ReplaceStatement, site.path, {std::move(wrapped)});
      break;
    }

    case MutationOperator::UnwrapIf: {
      auto candidates = filter(sites.stmts(), [](const StmtSite& s) { return s.stmt->kind == StmtKind::If; });
      if (candidates.empty()) no_site(op);
      const StmtSite& site = *candidates[rng.below(candidates.size())];
      const bool take_else = site.stmt->has_else && rng.coin();
      std::vector<Stmt> branch = take_else ? site.stmt->else_block : site.stmt->then_block;
      d.path = site.path;
      d.before = lang::render(*site.stmt);
      d.after = render_block(branch);
      d.edit = statement_edit(Edit::Kind::ReplaceStatement, site.path, std::move(branch));
      break;
    }
  }

  d.path = d.edit.path;
  Mutation m{apply_edit(parent.ast(), d.edit), std::move(d)};
  m.descriptor.rng_draws = rng.draws() - draws_before;
  return m;
}

Mutation mutate(const lang::RuleProgram& parent, const MutationPolicy& policy, Rng& rng,
                IdentifierCounter& counter) {
  policy.check();
  const std::uint64_t draws_before = rng.draws();
  const double total = std::accumulate(policy.weights.begin(), policy.weights.end(), 0.0);
  double pick = rng.unit() * total;
  std::size_t chosen = kMutationOperatorCount - 1;
  for (std::size_t i = 0; i < kMutationOperatorCount; ++i) {
    if (policy.weights[i] <= 0) continue;
    chosen = i;
    if (pick < policy.weights[i]) break;
    pick -= policy.weights[i];
  }
  Mutation m = mutate_with(static_cast<MutationOperator>(chosen), parent, policy, rng, counter);
  m.descriptor.rng_draws = rng.draws() - draws_before;
  return m;
}

}  // namespace curb::adapt
