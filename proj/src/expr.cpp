// SPDX-License-Identifier: Apache-2.0
#include "skc/expr.hpp"

#include <cctype>

#include "skc/monopole.hpp"
#include "skc/scalars.hpp"

namespace skc {

EvalAlgebra parse_eval_algebra(const std::string& name) {
  if (name == "xtorus") return EvalAlgebra::XTorus;
  if (name == "ztrace") return EvalAlgebra::ZTrace;
  if (name == "dz") return EvalAlgebra::DZ;
  if (name == "graded") return EvalAlgebra::Graded;
  throw std::invalid_argument("unknown algebra '" + name + "' (expected xtorus, ztrace, dz or graded)");
}

namespace {

const AlgebraSpec& context_spec(const EvalContext& ctx) {
  switch (ctx.algebra) {
    case EvalAlgebra::ZTrace:
      return ztrace();
    case EvalAlgebra::DZ:
      return dalg();
    default:
      return xtorus();
  }
}

struct Resolver {
  const EvalContext& ctx;
  size_t pos;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }

  // Generators become operators in the context algebra.
  EvalValue resolve(const EvalValue& v) const {
    const auto* g = std::get_if<GeneratorId>(&v);
    if (!g) return v;
    if (g->kind == GenKind::Theta) {
      if (ctx.algebra != EvalAlgebra::XTorus) fail("theta generators are only available in xtorus");
      return theta_principal(g->i, g->m, ctx.surface);
    }
    switch (ctx.algebra) {
      case EvalAlgebra::XTorus:
        return phi(*g, ctx.surface);
      case EvalAlgebra::ZTrace:
        return upsilon(*g, ctx.surface);
      default:
        fail("generator " + g->to_string() + " has no image in this algebra");
    }
  }

  OpElement as_op(const EvalValue& v, const AlgebraSpec& spec) const {
    if (const auto* r = std::get_if<Rat>(&v)) return OpElement(spec, *r);
    if (const auto* o = std::get_if<OpElement>(&v)) return *o;
    fail("expected an operator");
  }

  GradedElement as_graded(const EvalValue& v) const {
    if (const auto* r = std::get_if<Rat>(&v))
      return GradedElement::basis(ctx.surface.n, Coweight::zero(ctx.surface.n - 1), *r);
    if (const auto* g = std::get_if<GradedElement>(&v)) return *g;
    fail("cannot combine a graded element with an operator");
  }

  // Common algebra of two resolved operands, or nullptr when both are plain functions.
  const AlgebraSpec* op_spec(const EvalValue& a, const EvalValue& b) const {
    const auto* oa = std::get_if<OpElement>(&a);
    const auto* ob = std::get_if<OpElement>(&b);
    if (oa && ob && &oa->spec() != &ob->spec()) fail("operands live in different algebras");
    if (oa) return &oa->spec();
    if (ob) return &ob->spec();
    return nullptr;
  }

  bool graded(const EvalValue& a, const EvalValue& b) const {
    return std::holds_alternative<GradedElement>(a) || std::holds_alternative<GradedElement>(b);
  }

  EvalValue add(EvalValue a, EvalValue b, int sign) const {
    a = resolve(a);
    b = resolve(b);
    if (graded(a, b)) {
      GradedElement gb = as_graded(b);
      return sign > 0 ? as_graded(a) + gb : as_graded(a) - gb;
    }
    if (const AlgebraSpec* s = op_spec(a, b)) return sign > 0 ? as_op(a, *s) + as_op(b, *s) : as_op(a, *s) - as_op(b, *s);
    return sign > 0 ? std::get<Rat>(a) + std::get<Rat>(b) : std::get<Rat>(a) - std::get<Rat>(b);
  }

  EvalValue mul(EvalValue a, EvalValue b) const {
    a = resolve(a);
    b = resolve(b);
    if (graded(a, b)) return gr_mul(as_graded(a), as_graded(b), ctx.surface);
    if (const AlgebraSpec* s = op_spec(a, b)) return as_op(a, *s) * as_op(b, *s);
    return std::get<Rat>(a) * std::get<Rat>(b);
  }

  EvalValue div(EvalValue a, EvalValue b) const {
    a = resolve(a);
    b = resolve(b);
    const auto* ra = std::get_if<Rat>(&a);
    const auto* rb = std::get_if<Rat>(&b);
    if (!ra || !rb) fail("division is only defined between coordinate functions");
    if (rb->is_zero()) fail("division by zero");
    return *ra / *rb;
  }

  EvalValue power(EvalValue a, int e) const {
    a = resolve(a);
    if (const auto* r = std::get_if<Rat>(&a)) {
      if (e < 0 && r->is_zero()) fail("zero to a negative power");
      return r->pow(e);
    }
    if (const auto* o = std::get_if<OpElement>(&a)) {
      try {
        return o->pow(e);
      } catch (const std::exception& ex) {
        fail(ex.what());
      }
    }
    if (e < 0) fail("graded elements have no inverses");
    GradedElement g = std::get<GradedElement>(a);
    GradedElement r = as_graded(Rat(1));
    for (int k = 0; k < e; ++k) r = gr_mul(r, g, ctx.surface);
    return r;
  }
};

class Parser {
 public:
  Parser(const std::string& text, const EvalContext& ctx) : s_(text), ctx_(ctx) {}

  EvalValue parse() {
    EvalValue v = expr();
    skip();
    if (i_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
    return v;
  }

 private:
  const std::string& s_;
  const EvalContext& ctx_;
  size_t i_ = 0;

  Resolver at(size_t pos) const { return Resolver{ctx_, pos}; }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", i_);
    ++i_;
  }

  EvalValue expr() {
    EvalValue v = term();
    for (;;) {
      if (peek('+')) {
        const size_t p = i_++;
        v = at(p).add(v, term(), 1);
      } else if (peek('-')) {
        const size_t p = i_++;
        v = at(p).add(v, term(), -1);
      } else {
        return v;
      }
    }
  }

  EvalValue term() {
    EvalValue v = unary();
    for (;;) {
      if (peek('*')) {
        const size_t p = i_++;
        v = at(p).mul(v, unary());
      } else if (peek('/')) {
        const size_t p = i_++;
        v = at(p).div(v, unary());
      } else {
        return v;
      }
    }
  }

  EvalValue unary() {
    if (peek('-')) {
      const size_t p = i_++;
      return at(p).mul(Rat(-1), unary());
    }
    return power();
  }

  // Integer exponent, or k/2 when the slash follows without spacing.
  int exponent_halves() {
    skip();
    const size_t start = i_;
    bool neg = false;
    if (i_ < s_.size() && s_[i_] == '-') {
      neg = true;
      ++i_;
    }
    const long num = integer(start);
    long halves = 2 * num;
    if (i_ + 1 < s_.size() && s_[i_] == '/' && std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))) {
      ++i_;
      const long den = integer(i_);
      if (den == 2)
        halves = num;
      else if (den != 1)
        throw ParseError("exponent denominator must be 1 or 2", start);
    }
    return static_cast<int>(neg ? -halves : halves);
  }

  long integer(size_t err_pos) {
    const size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) throw ParseError("expected an integer", err_pos);
    if (i_ - start > 9) throw ParseError("integer too large", start);
    return std::stol(s_.substr(start, i_ - start));
  }

  EvalValue power() {
    const size_t start = i_;
    auto [v, half_base] = atom();
    if (!peek('^')) return v;
    const size_t p = i_++;
    const int h = exponent_halves();
    if (h % 2 == 0) return at(p).power(v, h / 2);
    // Half-integer powers only make sense on a single base variable.
    if (half_base < 0) throw ParseError("half-integer power of a compound expression", start);
    return Rat::var(half_base, h);
  }

  std::string ident() {
    const size_t start = i_;
    while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
    return s_.substr(start, i_ - start);
  }

  std::vector<int> colon_indices(size_t start) {
    std::vector<int> out;
    while (i_ < s_.size() && s_[i_] == ':') {
      ++i_;
      bool neg = false;
      if (i_ < s_.size() && s_[i_] == '-') {
        neg = true;
        ++i_;
      }
      const long v = integer(start);
      out.push_back(static_cast<int>(neg ? -v : v));
    }
    return out;
  }

  // Returns the value and, for a bare variable, the base variable it is a square of (or -1).
  std::pair<EvalValue, int> atom() {
    skip();
    if (i_ >= s_.size()) throw ParseError("unexpected end of expression", i_);
    const size_t start = i_;
    const char ch = s_[i_];
    if (ch == '(') {
      ++i_;
      EvalValue v = expr();
      expect(')');
      return {v, -1};
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return {Rat(mpz_class(s_.substr(start, i_ - start))), -1};
    }
    if (!std::isalpha(static_cast<unsigned char>(ch))) throw ParseError(std::string("unexpected '") + ch + "'", i_);
    const std::string id = ident();
    const Resolver r = at(start);
    const SurfaceParams& p = ctx_.surface;
    try {
      if (id == "gamma" || id == "delta" || id == "sigma" || id == "theta") {
        const std::vector<int> ix = colon_indices(start);
        std::string tok = id;
        for (int k : ix) tok += ":" + std::to_string(k);
        GeneratorId g = GeneratorId::parse(tok);
        if (g.kind == GenKind::Theta) {
          if (g.i < 1 || g.i > p.n - 1) throw std::out_of_range("generator " + tok + " out of range");
        } else {
          g.check(p);
        }
        return {g, -1};
      }
      if ((id == "E" || id == "F") && i_ < s_.size() && s_[i_] == ':') {
        const std::vector<int> ix = colon_indices(start);
        if (ix.size() != 2) throw ParseError(id + " needs the form " + id + ":i:m", start);
        return {id == "E" ? monopole_E(ix[0], ix[1], p) : monopole_F(ix[0], ix[1], p), -1};
      }
      if (id == "r" && peek('[')) {
        ++i_;
        std::vector<int> l;
        if (!peek(']')) {
          for (;;) {
            skip();
            l.push_back(static_cast<int>(integer(i_)));
            if (peek(']')) break;
            expect(',');
          }
        }
        expect(']');
        return {GradedElement::basis(p.n, Coweight(l)), -1};
      }
      if (id == "phi" || id == "psi" || id == "star") {
        expect('(');
        EvalValue inner = expr();
        expect(')');
        return {apply(id, inner, r), -1};
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::out_of_range&) {
      throw;
    } catch (const std::exception& ex) {
      throw ParseError(ex.what(), start);
    }
    if (id == "A") return {A_pow(1), -1};
    const int v = var_from_name(id, p.n);
    if (v >= 0) return {var::is_half(v) ? Rat::var(v, 2) : Rat::var(v), var::is_half(v) ? v : -1};
    if (auto sh = shift_token(id)) return {*sh, -1};
    throw ParseError("unknown symbol '" + id + "'", start);
  }

  std::optional<OpElement> shift_token(const std::string& id) const {
    const int n = ctx_.surface.n;
    for (const AlgebraSpec* spec : {&xtorus(), &ztrace(), &dalg()})
      for (int k = 0; k < spec->num_shifts(); ++k)
        if (spec->shift_names[k] == id) {
          const int node = spec->kind == AlgebraKind::D ? k / 2 + 1 : k + 1;
          if (node > n - 1) return std::nullopt;
          return OpElement::shift(*spec, k);
        }
    return std::nullopt;
  }

  EvalValue apply(const std::string& fn, const EvalValue& inner, const Resolver& r) const {
    const SurfaceParams& p = ctx_.surface;
    if (fn == "phi") {
      if (const auto* g = std::get_if<GeneratorId>(&inner)) {
        if (g->kind == GenKind::Theta) return theta_principal(g->i, g->m, p);
        return phi(*g, p);
      }
      const OpElement z = r.as_op(inner, ztrace());
      if (&z.spec() != &ztrace()) r.fail("phi expects a generator or an element of ztrace");
      return star(z);
    }
    if (fn == "star") {
      EvalValue z = inner;
      if (const auto* g = std::get_if<GeneratorId>(&inner)) z = upsilon(*g, p);
      const OpElement op = r.as_op(z, ztrace());
      if (&op.spec() != &ztrace()) r.fail("star expects an element of ztrace");
      return star(op);
    }
    const OpElement d = r.as_op(r.resolve(inner), dalg());
    if (&d.spec() != &dalg()) r.fail("psi expects an element of dz");
    return psi(d, p);
  }
};

}  // namespace

EvalValue evaluate(const std::string& text, const EvalContext& ctx) { return Parser(text, ctx).parse(); }

std::string render(const EvalValue& v, const EvalContext& ctx) {
  const Resolver r{ctx, 0};
  const EvalValue val = r.resolve(v);
  const int n = ctx.surface.n;
  if (const auto* g = std::get_if<GradedElement>(&val)) return g->to_string();
  if (const auto* o = std::get_if<OpElement>(&val)) return o->to_string(n);
  const Rat& f = std::get<Rat>(val);
  if (ctx.algebra == EvalAlgebra::Graded) return r.as_graded(f).to_string();
  return OpElement(context_spec(ctx), f).to_string(n);
}

std::string eval_expression(const std::string& text, const EvalContext& ctx) { return render(evaluate(text, ctx), ctx); }

bool same_value(const EvalValue& a, const EvalValue& b, const EvalContext& ctx) {
  const Resolver r{ctx, 0};
  const EvalValue x = r.resolve(a), y = r.resolve(b);
  if (std::holds_alternative<GradedElement>(x) || std::holds_alternative<GradedElement>(y) ||
      ctx.algebra == EvalAlgebra::Graded)
    return r.as_graded(x) == r.as_graded(y);
  const AlgebraSpec* s = r.op_spec(x, y);
  if (!s) return std::get<Rat>(x) == std::get<Rat>(y);
  return r.as_op(x, *s) == r.as_op(y, *s);
}

}  // namespace skc
