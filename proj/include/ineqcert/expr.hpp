#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ineqcert/domain.hpp"
#include "ineqcert/scalar.hpp"

namespace ineq {

enum class ExprKind { Constant, Variable, Add, Sub, Neg, Mul, Div, Pow };

// Immutable single-variable expression tree. Constants are exact scalars;
// Pow exponents are rationals with denominator in {1, 2, 3, 6} (the radicals
// the corpus needs). Construction does not simplify: certificates must be
// able to reference the syntactic form the user wrote.
class Expr {
public:
    Expr() = default;

    static Expr constant(Scalar v);
    static Expr constant(long v) { return constant(Scalar(Rational(v))); }
    static Expr constant(const Rational& v) { return constant(Scalar(v)); }
    static Expr variable();
    static Expr add(Expr l, Expr r);
    static Expr sub(Expr l, Expr r);
    static Expr neg(Expr u);
    static Expr mul(Expr l, Expr r);
    static Expr div(Expr l, Expr r);
    static Expr pow(Expr base, Rational exponent);
    static Expr sqrt(Expr u) { return pow(std::move(u), Rational(1, 2)); }

    bool valid() const { return node_ != nullptr; }
    ExprKind kind() const { return node_->kind; }
    const Scalar& value() const { return node_->value; }        // Constant only
    const Rational& exponent() const { return node_->exponent; } // Pow only
    const Expr& left() const { return node_->left; }   // also Neg/Pow operand
    const Expr& right() const { return node_->right; }

    bool is_constant() const { return node_->kind == ExprKind::Constant; }

private:
    struct Node {
        ExprKind kind;
        Scalar value;
        Rational exponent;
        Expr left;
        Expr right;
    };
    std::shared_ptr<const Node> node_;

    static Expr make(Node n);
};

// --- exprfront operations -------------------------------------------------

// Parses the expression grammar: infix + - * / ^, functions sqrt() and
// cbrt(), rational literals "p/q" (decimals are rejected), the variable x,
// and the exact irrational tokens sqrt2/sqrt3/sqrt5. Maximal constant
// subexpressions are folded exactly so that printing and parsing round-trip.
Expr parse_expr(const std::string& text);

// Inverse of parse_expr up to structural equality: parse(print(e)) == e.
std::string print_expr(const Expr& e);

// Symbolic derivative with respect to x. No simplification is applied.
Expr diff(const Expr& e);

// Exact evaluation at a point in Q or the active Q(sqrt(d)).
Scalar eval_exact(const Expr& e, const Scalar& point);

// Rigorous enclosure of the image of the interval x.
RatInterval eval_interval(const Expr& e, const RatInterval& x, const Precision& prec);

bool structural_equal(const Expr& a, const Expr& b);

// lcm of the exponent denominators over Pow nodes whose base is the bare
// variable; 1 when all such exponents are integers.
unsigned variable_power_lcm(const Expr& e);

// Substitutes x := x^q, turning fractional powers of the variable into
// integer ones. Throws ExponentNotClearedByQ if some exponent q' does not
// divide out.
Expr substitute_variable_power(const Expr& e, unsigned q);

// True if any Pow node with a non-integer exponent has a non-variable base
// (a compound radical such as sqrt(1-x)).
bool has_compound_radical(const Expr& e);

// Number of nodes, used for sanity limits in tests.
std::size_t expr_size(const Expr& e);

} // namespace ineq
