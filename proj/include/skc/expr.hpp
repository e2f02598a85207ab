// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "skc/grcoulomb.hpp"
#include "skc/qdiff.hpp"
#include "skc/skeinrep.hpp"

namespace skc {

/// Malformed expression; pos is the 0-based character offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}
  size_t pos() const { return pos_; }

 private:
  size_t pos_;
};

enum class EvalAlgebra { XTorus, ZTrace, DZ, Graded };

/// Parse "xtorus", "ztrace", "dz" or "graded".
EvalAlgebra parse_eval_algebra(const std::string& name);

struct EvalContext {
  EvalAlgebra algebra;
  SurfaceParams surface;
};

/// Result of an expression: a coordinate/scalar function, an operator, a graded
/// element, or an unresolved skein generator.
using EvalValue = std::variant<Rat, OpElement, GradedElement, GeneratorId>;

/// Evaluate an expression.  Generators resolve lazily: in xtorus they mean their
/// polynomial-representation image, in ztrace their quantum-trace image.
EvalValue evaluate(const std::string& text, const EvalContext& ctx);

/// Canonical text of a value in the given context.
std::string render(const EvalValue& v, const EvalContext& ctx);

/// evaluate followed by render.
std::string eval_expression(const std::string& text, const EvalContext& ctx);

/// Equality after resolving generators in ctx.
bool same_value(const EvalValue& a, const EvalValue& b, const EvalContext& ctx);

}  // namespace skc
