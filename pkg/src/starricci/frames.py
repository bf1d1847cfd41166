"""Moving-frame calculus on 3-dimensional real hypersurfaces.

Two orthonormal frame contexts are built, both with e3 = xi (the structure
vector field):

* non-Hopf: e1 = U, e2 = phi U, where A xi = alpha xi + beta U with beta
  treated as nonzero; the shape operator has columns
  A U = (gamma, delta, beta), A phiU = (delta, mu, 0), A xi = (beta, 0, alpha),
  and the connection table encodes the standard relations
  nabla_U xi = -delta U + gamma phiU, nabla_U U = kappa1 phiU + delta xi, etc.
* Hopf: e1 = W, e2 = phi W with A = diag(lambda, nu, alpha) at a point with a
  principal frame; alpha, lambda, nu are derivative-free point values.  Only
  the action of the connection on xi is pinned (nabla_X xi = phi A X); the
  free coefficients g(nabla_{e_i} W, phi W) become fresh function symbols
  h1, h2, h3.

Conventions (fixed here, used everywhere):

* the metric is the identity form on frame components;
* (nabla_X T) Y = nabla_X (T Y) - T (nabla_X Y);
* the star-Ricci trace form contracts the operator Z -> phi(R(X, phi Y) Z),
  i.e. g(S* X, Y) = (1/2) * trace(Z -> phi(R(X, phi Y) Z)), which agrees
  exactly with the closed form S* = -[(c n / 2) phi^2 + (phi A)^2] at n = 2.

Note the closed form makes S* symmetric in the Hopf context but *not* in the
non-Hopf one (S* xi = beta mu U - beta delta phiU has no counterpart in
S* U); the asymmetry is genuine and is never silently symmetrized.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Iterable, Union

from .parsing import parse_expr
from .rational import Expr
from .symbols import DIRECTIONS, Symbol, SymbolTable


class FrameIndex(Enum):
    E1 = 0
    E2 = 1
    E3 = 2

    @property
    def direction(self) -> str:
        return DIRECTIONS[self.value]


FRAME_INDICES = (FrameIndex.E1, FrameIndex.E2, FrameIndex.E3)

_Scalar = Union[int, Fraction, Expr]


def _expr(v: _Scalar) -> Expr:
    return v if isinstance(v, Expr) else Expr.const(v)


class VectorField:
    """Components over the orthonormal frame; the metric is the identity."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[_Scalar]):
        comps = tuple(_expr(c) for c in components)
        if len(comps) != 3:
            raise ValueError("a frame vector field has exactly 3 components")
        object.__setattr__(self, "components", comps)

    def __setattr__(self, *a):
        raise AttributeError("VectorField is immutable")

    def __getitem__(self, i: int) -> Expr:
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def __add__(self, other: "VectorField") -> "VectorField":
        return VectorField(a + b for a, b in zip(self, other))

    def __sub__(self, other: "VectorField") -> "VectorField":
        return VectorField(a - b for a, b in zip(self, other))

    def __neg__(self) -> "VectorField":
        return VectorField(-a for a in self)

    def scale(self, k: _Scalar) -> "VectorField":
        ke = _expr(k)
        return VectorField(ke * a for a in self)

    def dot(self, other: "VectorField") -> Expr:
        total = Expr.zero()
        for a, b in zip(self, other):
            total = total + a * b
        return total

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VectorField) and other.components == self.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return "VectorField(" + ", ".join(c.to_text() for c in self) + ")"

    @staticmethod
    def basis(i: FrameIndex | int) -> "VectorField":
        idx = i.value if isinstance(i, FrameIndex) else i
        return VectorField(1 if j == idx else 0 for j in range(3))

    @staticmethod
    def zero() -> "VectorField":
        return VectorField((0, 0, 0))


XI = VectorField.basis(2)


def eta(v: VectorField) -> Expr:
    """The dual 1-form of xi: the third frame component."""
    return v[2]


class Tensor11:
    """Type-(1,1) tensor field: 3x3 matrix of Expr; column j is the image of e_j."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[_Scalar]]):
        mat = tuple(tuple(_expr(x) for x in row) for row in rows)
        if len(mat) != 3 or any(len(r) != 3 for r in mat):
            raise ValueError("Tensor11 is a 3x3 matrix")
        object.__setattr__(self, "rows", mat)

    def __setattr__(self, *a):
        raise AttributeError("Tensor11 is immutable")

    def entry(self, i: int, j: int) -> Expr:
        """Component i of the image of e_j, i.e. g(T e_j, e_i)."""
        return self.rows[i][j]

    def column(self, j: FrameIndex | int) -> VectorField:
        idx = j.value if isinstance(j, FrameIndex) else j
        return VectorField(self.rows[i][idx] for i in range(3))

    def apply(self, v: VectorField) -> VectorField:
        return VectorField(
            sum((self.rows[i][j] * v[j] for j in range(3)), Expr.zero())
            for i in range(3)
        )

    def __matmul__(self, other: "Tensor11") -> "Tensor11":
        return Tensor11(
            tuple(
                sum((self.rows[i][k] * other.rows[k][j] for k in range(3)), Expr.zero())
                for j in range(3)
            )
            for i in range(3)
        )

    def __add__(self, other: "Tensor11") -> "Tensor11":
        return Tensor11(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)
        )

    def __sub__(self, other: "Tensor11") -> "Tensor11":
        return Tensor11(
            tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)
        )

    def __neg__(self) -> "Tensor11":
        return Tensor11(tuple(-a for a in row) for row in self.rows)

    def scale(self, k: _Scalar) -> "Tensor11":
        ke = _expr(k)
        return Tensor11(tuple(ke * a for a in row) for row in self.rows)

    def transpose(self) -> "Tensor11":
        return Tensor11(tuple(self.rows[j][i] for j in range(3)) for i in range(3))

    def is_symmetric(self) -> bool:
        return all(self.rows[i][j] == self.rows[j][i] for i in range(3) for j in range(i))

    def trace(self) -> Expr:
        return self.rows[0][0] + self.rows[1][1] + self.rows[2][2]

    def symbols(self) -> frozenset:
        out: set = set()
        for row in self.rows:
            for e in row:
                out |= e.symbols()
        return frozenset(out)

    def substitute(self, bindings) -> "Tensor11":
        return Tensor11(tuple(e.substitute(bindings) for e in row) for row in self.rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tensor11) and other.rows == self.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(e.to_text() for e in row) for row in self.rows)
        return f"Tensor11({body})"

    @staticmethod
    def identity() -> "Tensor11":
        return Tensor11(tuple(1 if i == j else 0 for j in range(3)) for i in range(3))

    @staticmethod
    def zero() -> "Tensor11":
        return Tensor11(tuple(0 for _ in range(3)) for _ in range(3))


class ConnectionTable:
    """entries[i][j][k] = g(nabla_{e_i} e_j, e_k), antisymmetric in (j, k)."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        table = tuple(
            tuple(tuple(_expr(x) for x in row) for row in slice_) for slice_ in entries
        )
        object.__setattr__(self, "entries", table)

    def __setattr__(self, *a):
        raise AttributeError("ConnectionTable is immutable")

    def coefficient(self, i: FrameIndex, j: FrameIndex, k: FrameIndex) -> Expr:
        return self.entries[i.value][j.value][k.value]

    def nabla(self, i: FrameIndex, j: FrameIndex | int) -> VectorField:
        """nabla_{e_i} e_j as a vector field."""
        jv = j.value if isinstance(j, FrameIndex) else j
        return VectorField(self.entries[i.value][jv])

    def is_metric_compatible(self) -> bool:
        for i in range(3):
            for j in range(3):
                for k in range(3):
                    if not (self.entries[i][j][k] + self.entries[i][k][j]).is_zero:
                        return False
        return True


@dataclass(frozen=True)
class FrameContext:
    """A frozen frame: structure tensor, shape operator, connection, curvature c.

    n is the complex dimension of the ambient space, fixed at 2 (real
    hypersurface dimension 3).
    """

    kind: str                 # "non-hopf" | "hopf"
    table: SymbolTable
    c: Expr
    A: Tensor11
    phi: Tensor11
    connection: ConnectionTable
    n: int = 2

    def sym(self, name: str) -> Expr:
        s = self.table.get(name)
        if s is None:
            raise KeyError(f"no symbol {name!r} in this context")
        return Expr.from_symbol(s)

    def symbol(self, name: str) -> Symbol:
        s = self.table.get(name)
        if s is None:
            raise KeyError(f"no symbol {name!r} in this context")
        return s

    def parse(self, text: str) -> Expr:
        return parse_expr(text, self.table)


def _structure_tensor() -> Tensor11:
    # phi e1 = e2, phi e2 = -e1, phi e3 = 0
    return Tensor11(((0, -1, 0), (1, 0, 0), (0, 0, 0)))


def _curvature_constant(table: SymbolTable, c) -> Expr:
    if c is None:
        return Expr.from_symbol(table.constant("c"))
    if isinstance(c, (int, Fraction)):
        return Expr.const(c)
    raise TypeError("c must be None (symbolic) or an exact number")


def build_nonhopf_context(c=None) -> FrameContext:
    """Frame {U, phiU, xi} with A xi = alpha xi + beta U, beta != 0 locally.

    c = None keeps the curvature constant symbolic; pass 4 or -4 for the
    projective/hyperbolic planes.
    """
    table = SymbolTable()
    al = table.function("alpha")
    be = table.function("beta")
    ga = table.function("gamma")
    de = table.function("delta")
    mu = table.function("mu")
    k1 = table.function("kappa1")
    k2 = table.function("kappa2")
    k3 = table.function("kappa3")
    ce = _curvature_constant(table, c)

    E = Expr.from_symbol
    A = Tensor11((
        (E(ga), E(de), E(be)),
        (E(de), E(mu), Expr.zero()),
        (E(be), Expr.zero(), E(al)),
    ))
    zero = Expr.zero()
    conn = ConnectionTable((
        # nabla_U .
        (
            (zero, E(k1), E(de)),            # nabla_U U       = kappa1 phiU + delta xi
            (-E(k1), zero, -E(ga)),          # nabla_U phiU    = -kappa1 U - gamma xi
            (-E(de), E(ga), zero),           # nabla_U xi      = -delta U + gamma phiU
        ),
        # nabla_phiU .
        (
            (zero, E(k2), E(mu)),            # nabla_phiU U    = kappa2 phiU + mu xi
            (-E(k2), zero, -E(de)),          # nabla_phiU phiU = -kappa2 U - delta xi
            (-E(mu), E(de), zero),           # nabla_phiU xi   = -mu U + delta phiU
        ),
        # nabla_xi .
        (
            (zero, E(k3), zero),             # nabla_xi U      = kappa3 phiU
            (-E(k3), zero, -E(be)),          # nabla_xi phiU   = -kappa3 U - beta xi
            (zero, E(be), zero),             # nabla_xi xi     = beta phiU
        ),
    ))
    return FrameContext("non-hopf", table, ce, A, _structure_tensor(), conn)


def build_hopf_context(c=None) -> FrameContext:
    """Principal frame {W, phiW, xi} at a point: A = diag(lambda, nu, alpha).

    alpha, lambda and nu are derivative-free point values.  The connection's
    action on xi is nabla_X xi = phi A X; the remaining coefficients
    g(nabla_{e_i} W, phi W) are unconstrained fresh symbols h1, h2, h3.
    """
    table = SymbolTable()
    al = table.constant("alpha")
    lam = table.constant("lambda")
    nu = table.constant("nu")
    hs = [table.function(f"h{i}") for i in (1, 2, 3)]
    ce = _curvature_constant(table, c)

    E = Expr.from_symbol
    A = Tensor11((
        (E(lam), 0, 0),
        (0, E(nu), 0),
        (0, 0, E(al)),
    ))
    phi = _structure_tensor()
    zero = Expr.zero()
    # nabla_{e_i} xi = phi A e_i
    xi_cols = [phi.apply(A.apply(VectorField.basis(i))) for i in range(3)]
    slices = []
    for i in range(3):
        h = E(hs[i])
        xc = xi_cols[i]
        slices.append((
            (zero, h, -xc[0]),
            (-h, zero, -xc[1]),
            (xc[0], xc[1], zero),
        ))
    conn = ConnectionTable(slices)
    return FrameContext("hopf", table, ce, A, phi, conn)


# -- covariant differentiation ---------------------------------------------

def covariant_derivative_vf(ctx: FrameContext, X: FrameIndex, Y: VectorField) -> VectorField:
    """nabla_X Y by the Leibniz rule over the connection table.

    Scalar components differentiate to formal derivative symbols.
    """
    comps = [Expr.zero(), Expr.zero(), Expr.zero()]
    for j in range(3):
        yj = Y[j]
        comps[j] = comps[j] + yj.derivative(X.direction)
        nab = ctx.connection.nabla(X, j)
        for k in range(3):
            comps[k] = comps[k] + yj * nab[k]
    return VectorField(comps)


def covariant_derivative_t11(ctx: FrameContext, X: FrameIndex, T: Tensor11) -> Tensor11:
    """(nabla_X T) as a matrix: column j is nabla_X(T e_j) - T(nabla_X e_j)."""
    cols = []
    for j in range(3):
        lead = covariant_derivative_vf(ctx, X, T.column(j))
        trail = T.apply(ctx.connection.nabla(X, j))
        cols.append(lead - trail)
    return Tensor11(tuple(cols[j][i] for j in range(3)) for i in range(3))


# -- curvature and the Ricci tensors ---------------------------------------

def curvature(ctx: FrameContext, X: VectorField, Y: VectorField, Z: VectorField) -> VectorField:
    """R(X, Y) Z of the Gauss equation for constant holomorphic curvature c.

    Purely algebraic: the result carries no formal derivative symbols.
    """
    phi, A = ctx.phi, ctx.A
    c4 = ctx.c / 4
    phiX, phiY, phiZ = phi.apply(X), phi.apply(Y), phi.apply(Z)
    AX, AY = A.apply(X), A.apply(Y)
    out = X.scale(c4 * Y.dot(Z))
    out = out - Y.scale(c4 * X.dot(Z))
    out = out + phiX.scale(c4 * phiY.dot(Z))
    out = out - phiY.scale(c4 * phiX.dot(Z))
    out = out - phiZ.scale(2 * c4 * phiX.dot(Y))
    out = out + AX.scale(AY.dot(Z))
    out = out - AY.scale(AX.dot(Z))
    return out


def curvature_operator(ctx: FrameContext, X: FrameIndex, Y: FrameIndex) -> Tensor11:
    """R(e_X, e_Y) as a (1,1) tensor (column k is R(e_X, e_Y) e_k)."""
    bx, by = VectorField.basis(X), VectorField.basis(Y)
    cols = [curvature(ctx, bx, by, VectorField.basis(k)) for k in range(3)]
    return Tensor11(tuple(cols[j][i] for j in range(3)) for i in range(3))


def ricci(ctx: FrameContext) -> Tensor11:
    """Ricci tensor: g(S e_j, e_k) = sum_i g(R(e_i, e_j) e_k, e_i)."""
    mat = [[Expr.zero()] * 3 for _ in range(3)]
    basis = [VectorField.basis(i) for i in range(3)]
    for j in range(3):
        for k in range(3):
            total = Expr.zero()
            for i in range(3):
                total = total + curvature(ctx, basis[i], basis[j], basis[k])[i]
            mat[k][j] = total  # component k of S e_j
    return Tensor11(mat)


def star_ricci_closed(ctx: FrameContext) -> Tensor11:
    """Closed form S* = -[(c n / 2) phi^2 + (phi A)^2] with n = 2."""
    phi, A = ctx.phi, ctx.A
    half_cn = ctx.c * Fraction(ctx.n, 2)
    phi2 = phi @ phi
    phiA = phi @ A
    return -(phi2.scale(half_cn) + (phiA @ phiA))


def star_ricci_trace(ctx: FrameContext) -> Tensor11:
    """Trace form: g(S* X, Y) = (1/2) trace(Z -> phi(R(X, phi Y) Z)).

    The contraction convention is fixed by exact agreement with
    star_ricci_closed; both are computed independently and compared in the
    test suite.
    """
    phi = ctx.phi
    basis = [VectorField.basis(i) for i in range(3)]
    half = Expr.const(Fraction(1, 2))
    mat = [[Expr.zero()] * 3 for _ in range(3)]
    for j in range(3):       # X = e_j
        for k in range(3):   # Y = e_k
            phiY = phi.apply(basis[k])
            total = Expr.zero()
            for i in range(3):
                total = total + phi.apply(curvature(ctx, basis[j], phiY, basis[i]))[i]
            mat[k][j] = half * total  # g(S* e_j, e_k)
    return Tensor11(mat)


def codazzi_residual(ctx: FrameContext, X: FrameIndex, Y: FrameIndex) -> VectorField:
    """(nabla_X A)Y - (nabla_Y A)X - (c/4)[eta(X) phi Y - eta(Y) phi X - 2 g(phi X, Y) xi].

    Vanishing of this field is the Codazzi constraint; it is exposed as
    equations, never assumed.
    """
    dAX = covariant_derivative_t11(ctx, X, ctx.A)
    dAY = covariant_derivative_t11(ctx, Y, ctx.A)
    out = dAX.column(Y) - dAY.column(X)
    c4 = ctx.c / 4
    eta_x = Expr.one() if X is FrameIndex.E3 else Expr.zero()
    eta_y = Expr.one() if Y is FrameIndex.E3 else Expr.zero()
    phiX = ctx.phi.column(X)
    phiY = ctx.phi.column(Y)
    g_phiX_Y = ctx.phi.entry(Y.value, X.value)
    correction = phiY.scale(c4 * eta_x) - phiX.scale(c4 * eta_y) - XI.scale(2 * c4 * g_phiX_Y)
    return out - correction


def with_shape_operator(ctx: FrameContext, A: Tensor11) -> FrameContext:
    """Context with A replaced (testing hook for algebraic operations only;
    the connection is left untouched and no longer matches nabla xi = phi A)."""
    return replace(ctx, A=A)
