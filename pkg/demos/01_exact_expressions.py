#!/usr/bin/env python3
"""Walk-through of the exact expression layer.

Every scalar in the engine is a canonical rational function over the
rationals: two expressions are mathematically equal exactly when they are
structurally identical, which is what lets the proof layer test "is zero"
by construction.
"""

from fractions import Fraction

from starricci import Expr, SymbolTable, parse_expr, solve_quadratic

table = SymbolTable()
table.constant("x")

print("== canonical forms ==")
e = parse_expr("(x^2 - 1)/(x - 1)", table)
print("(x^2 - 1)/(x - 1)  canonicalizes to:", e)
print("equal to x + 1:", e == parse_expr("x + 1", table))
print("printing round-trips:", parse_expr(e.to_text(), table) == e)

print()
print("== substitution ==")
t2 = SymbolTable()
for name in ("alpha", "lambda", "nu", "c"):
    t2.constant(name)
basic = parse_expr("lambda*nu - (alpha/2)*(lambda + nu) - c/4", t2)
print("principal-curvature relation:", basic, "= 0")
sub = basic.substitute({t2.get("lambda"): parse_expr("-c/nu", t2)})
print("after lambda -> -c/nu:", sub, "= 0")
quad = parse_expr("2*alpha*nu^2 + 5*c*nu - 2*alpha*c", t2)
print("numerator / (2*alpha*nu^2 + 5*c*nu - 2*alpha*c) =",
      sub.num.exact_div(quad.num))

print()
print("== solving the resulting quadratic ==")
sol = solve_quadratic(quad, t2.get("nu"))
print("discriminant:", sol.discriminant)
for c_val, name in ((4, "projective plane"), (-4, "hyperbolic plane")):
    d = sol.discriminant.substitute({t2.get("c"): Expr.const(c_val)})
    print(f"at c = {c_val} ({name}):", d)
print("hyperbolic solvability boundary: alpha^2 = 400/64 =", Fraction(400, 64))

print()
print("== exact numeric evaluation ==")
print("relation at the horosphere data (alpha, lambda, nu, c) = (2, 1, 1, -4):",
      basic.eval({"alpha": 2, "lambda": 1, "nu": 1, "c": -4}))
