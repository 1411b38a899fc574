#include <gtest/gtest.h>

#include <random>

#include "curb/bridge/execute.hpp"
#include "curb/lang/render.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace curb::bridge {
namespace {

using lang::RuleSource;
using testing::error_code_of;

const StateDomain kBit = StateDomain::integer_range(0, 1);

StateValue I(std::int64_t v) { return StateValue::integer(v); }
StateValue B(bool v) { return StateValue::boolean(v); }

TEST(Bindings, DerivedValues) {
  const BindingSet b(I(1), {I(1), I(1), I(0)});
  EXPECT_EQ(b.milieu_sum(), 2);
  EXPECT_EQ(b.milieu_count(), 3);
  const BindingSet bools(B(false), {B(true), B(false), B(true)});
  EXPECT_EQ(bools.milieu_sum(), 2);
}

TEST(Interpolate, EntityState) {
  EXPECT_EQ(interpolate(RuleSource{"emit entityState ;"}, BindingSet(I(1), {})).text, "emit 1 ;");
}

TEST(Interpolate, PositionalMilieu) {
  EXPECT_EQ(interpolate(RuleSource{"emit milieu [ 0 ] + milieu [ 1 ] ;"}, BindingSet(I(0), {I(1), I(0)})).text,
            "emit 1 + 0 ;");
}

TEST(Interpolate, MilieuSumAndCount) {
  EXPECT_EQ(interpolate(RuleSource{"emit milieuSum ;"}, BindingSet(I(0), {I(1), I(1), I(0)})).text, "emit 2 ;");
  EXPECT_EQ(interpolate(RuleSource{"emit milieuCount ;"}, BindingSet(I(0), {I(1), I(1), I(0)})).text, "emit 3 ;");
}

TEST(Interpolate, TokenLevelNotSubstring) {
  // identifier names and neighbouring operators are left alone
  const BindingSet b(I(1), {I(0)});
  EXPECT_EQ(interpolate(RuleSource{"let identifier0=entityState;emit identifier0;"}, b).text,
            "let identifier0 = 1 ; emit identifier0 ;");
}

TEST(Interpolate, NegativesAndBooleans) {
  EXPECT_EQ(interpolate(RuleSource{"emit - entityState ;"}, BindingSet(I(-3), {})).text, "emit - - 3 ;");
  EXPECT_EQ(interpolate(RuleSource{"emit entityState ;"}, BindingSet(B(true), {})).text, "emit true ;");
}

TEST(Interpolate, NonConstantIndex) {
  EXPECT_EQ(error_code_of([] { interpolate(RuleSource{"emit milieu [ entityState ] ;"}, BindingSet(I(0), {I(1)})); }),
            ErrorCode::NonConstantMilieuIndex);
  EXPECT_EQ(error_code_of([] { interpolate(RuleSource{"emit milieu [ 0 + 1 ] ;"}, BindingSet(I(0), {I(1), I(0)})); }),
            ErrorCode::NonConstantMilieuIndex);
}

TEST(Interpolate, IndexBeyondBindings) {
  EXPECT_EQ(error_code_of([] { interpolate(RuleSource{"emit milieu [ 3 ] ;"}, BindingSet(I(0), {I(1)})); }),
            ErrorCode::RuleRuntimeError);
}

TEST(Interpolate, PropagatesLexErrors) {
  EXPECT_EQ(error_code_of([] { interpolate(RuleSource{"emit rm ;"}, BindingSet(I(0), {})); }),
            ErrorCode::VocabularyViolation);
}

TEST(ExecuteClosed, Constant) { EXPECT_EQ(execute_closed(RuleSource{"emit 1 ;"}, kBit), I(1)); }

TEST(ExecuteClosed, OutOfDomain) {
  EXPECT_EQ(error_code_of([] { execute_closed(RuleSource{"emit 1 + 1 ;"}, kBit); }),
            ErrorCode::EmittedValueOutOfDomain);
}

TEST(ExecuteClosed, FirstEmitWins) {
  EXPECT_EQ(execute_closed(RuleSource{"if 1 == 1 { emit 0 ; } emit 1 ;"}, kBit), I(0));
}

TEST(ExecuteClosed, RejectsFreeReferences) {
  EXPECT_EQ(error_code_of([] { execute_closed(RuleSource{"emit entityState ;"}, kBit); }), ErrorCode::Usage);
}

TEST(ExecuteClosed, RuntimeFaults) {
  auto fault = [](std::string text) {
    try {
      execute_closed(RuleSource{std::move(text)}, StateDomain::integer_range(-100, 100));
    } catch (const RuleRuntimeError& e) {
      return e.fault();
    }
    ADD_FAILURE() << "no runtime error";
    return RuntimeFault::FuelExhausted;
  };
  EXPECT_EQ(fault("emit 1 / 0 ;"), RuntimeFault::DivisionByZero);
  EXPECT_EQ(fault("emit 1 % ( 2 - 2 ) ;"), RuntimeFault::DivisionByZero);
  EXPECT_EQ(fault("emit 4611686018427387904 * 4 ;"), RuntimeFault::ArithmeticOverflow);
}

TEST(ExecuteClosed, TruncatingDivision) {
  const StateDomain d = StateDomain::integer_range(-10, 10);
  EXPECT_EQ(execute_closed(RuleSource{"emit - 7 / 2 ;"}, d), I(-3));
  EXPECT_EQ(execute_closed(RuleSource{"emit - 7 % 2 ;"}, d), I(-1));
  EXPECT_EQ(execute_closed(RuleSource{"emit 7 % - 2 ;"}, d), I(1));
}

TEST(ExecuteBound, Rule110TruthTableCell) {
  const auto program = lang::compile(testing::rule110_source(), kBit, 2);
  EXPECT_EQ(execute_bound(program, BindingSet(I(1), {I(1), I(0)})), I(1));
}

TEST(ExecuteBound, LifeBirth) {
  const auto program = lang::compile(testing::life_source(), kBit, 8);
  EXPECT_EQ(execute_bound(program, BindingSet(I(0), {I(1), I(1), I(1), I(0), I(0), I(0), I(0), I(0)})), I(1));
}

TEST(ExecuteBound, BooleanIdentity) {
  const auto program = lang::compile(RuleSource{"emit entityState ;"}, StateDomain::boolean(), 0);
  EXPECT_EQ(execute_bound(program, BindingSet(B(false), {})), B(false));
}

TEST(ExecuteBound, DynamicMilieuIndex) {
  const StateDomain d = StateDomain::integer_range(-1, 3);
  const auto program = lang::compile(RuleSource{"emit milieu [ entityState ] ;"}, d, 2);
  EXPECT_EQ(execute_bound(program, BindingSet(I(1), {I(3), I(2)})), I(2));
  try {
    execute_bound(program, BindingSet(I(3), {I(3), I(2)}));
    FAIL();
  } catch (const RuleRuntimeError& e) {
    EXPECT_EQ(e.fault(), RuntimeFault::MilieuIndexOutOfRange);
  }
  try {
    execute_bound(program, BindingSet(I(-1), {I(3), I(2)}));
    FAIL();
  } catch (const RuleRuntimeError& e) {
    EXPECT_EQ(e.fault(), RuntimeFault::NegativeMilieuIndex);
  }
}

TEST(ExecuteBound, ShortCircuit) {
  const StateDomain d = StateDomain::integer_range(0, 1);
  const auto program = lang::compile(RuleSource{"if false and 1 / 0 == 1 { emit 1 ; } emit 0 ;"}, d, 0);
  EXPECT_EQ(execute_bound(program, BindingSet(I(0), {})), I(0));
}

TEST(Capture, ParseExamples) {
  EXPECT_EQ(capture_parse("1", kBit), I(1));
  EXPECT_EQ(capture_parse("true", StateDomain::boolean()), B(true));
  EXPECT_EQ(error_code_of([] { capture_parse("7", kBit); }), ErrorCode::EmittedValueOutOfDomain);
  EXPECT_EQ(error_code_of([] { capture_parse("1", StateDomain::boolean()); }), ErrorCode::UnparsableCapture);
  EXPECT_EQ(error_code_of([] { capture_parse("0x1", kBit); }), ErrorCode::UnparsableCapture);
  EXPECT_EQ(error_code_of([] { capture_parse("", kBit); }), ErrorCode::UnparsableCapture);
  EXPECT_EQ(capture_parse("-3", StateDomain::integer_range(-5, 5)), I(-3));
}

TEST(Capture, ChannelDiscipline) {
  CaptureChannel empty;
  EXPECT_EQ(error_code_of([&] { empty.single(); }), ErrorCode::NoEmitExecuted);
  CaptureChannel one;
  one.write("1");
  EXPECT_EQ(one.single(), "1");
}

TEST(Execute, ModesAgreeOnReferenceRules) {
  const auto program = lang::compile(testing::rule110_source(), kBit, 2);
  for (int p = 0; p < 8; ++p) {
    const BindingSet b(I((p >> 1) & 1), {I((p >> 2) & 1), I(p & 1)});
    EXPECT_EQ(execute(ExecutionMode::Faithful, testing::rule110_source(), program, b),
              execute(ExecutionMode::Bound, testing::rule110_source(), program, b));
  }
}

TEST(Execute, FuelBudget) { EXPECT_EQ(fuel_for(7), 70u); }

TEST(ExecuteProperty, TransitionSoundnessSample) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    const StateDomain domain = testing::random_domain(rng);
    const std::size_t mc = rng() % 4;
    testing::ProgramGenerator gen(domain, mc, rng());
    const auto program = lang::validate(gen.program(), domain, mc);
    const RuleSource text = lang::render_source(program.ast());
    const BindingSet b = testing::random_bindings(domain, mc, rng);
    std::optional<StateValue> bound, faithful;
    std::optional<ErrorCode> bound_err, faithful_err;
    try { bound = execute_bound(program, b); } catch (const Error& e) { bound_err = e.code(); }
    try { faithful = execute_closed(interpolate(text, b), domain); } catch (const Error& e) { faithful_err = e.code(); }
    ASSERT_EQ(bound, faithful) << text.text;
    ASSERT_EQ(bound_err, faithful_err) << text.text;
  }
}

}  // namespace
}  // namespace curb::bridge
