"""Actor candidates as algebras of matrix pairs cut out by linear constraints.

Each candidate (derivations, bimultipliers, biderivations in two bracket
variants, multipliers) is the nullspace of a homogeneous linear system over
the entries of one or two dim x dim matrices.  The nullspace basis is
canonicalized by RREF over the flattened coordinates (row-major, left matrix
first), so identical inputs give byte-identical actors.

Every candidate carries a closure certificate: the product of any two basis
pairs is re-expressed in the basis, and a pair that escapes the span raises
ClosureError instead of silently producing garbage structure constants.
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import ActionPair, make_action
from .algebra import (
    Algebra,
    InputError,
    annihilator,
    derived_subspace,
    identity_suite,
    make_algebra,
)
from .fields import FieldError
from .linalg import Matrix, Vector, basis_vector, express_in_rref_rows
from .reporting import Report


class ConstructionError(RuntimeError):
    """A construction step failed in a way that signals a soundness bug."""


class ClosureError(ConstructionError):
    """A product of basis pairs left the candidate's own span."""


KINDS = ("der", "bim", "bider1", "bider2", "mult", "zero")

# category tag of the candidate's own bracket/product; for mult the product
# is composition, which is always associative but not always commutative
_KIND_CATEGORY = {
    "der": "lie",
    "bim": "associative",
    "bider1": "leibniz",
    "bider2": "leibniz",
    "mult": "associative",
    "zero": "module",
}

# kinds whose solution space lives on a single matrix; the right component
# is determined by the left one
_SINGLE = {"der", "mult", "zero"}


@dataclass(frozen=True)
class BiMap:
    """Pair of square matrices: left component b*(-), right component (-)*b."""

    left: Matrix
    right: Matrix


def _flatten(kind: str, bm: BiMap) -> Vector:
    flat = tuple(x for row in bm.left.rows for x in row)
    if kind in _SINGLE:
        return flat
    return flat + tuple(x for row in bm.right.rows for x in row)


@dataclass(frozen=True)
class ActorAlgebra:
    kind: str
    target: Algebra
    maps: tuple  # basis BiMaps
    tensor: tuple  # structure constants of the bracket/product in that basis
    basis_matrix: Matrix  # RREF rows over the flattened coordinates
    pivots: tuple

    @property
    def dim(self) -> int:
        return len(self.maps)

    def as_algebra(self) -> Algebra:
        names = tuple(f"{self.kind}{i}" for i in range(self.dim))
        return make_algebra(self.target.field, names, self.tensor, _KIND_CATEGORY[self.kind])

    def action_pair(self) -> ActionPair:
        """The action this candidate induces on its target: left by the left
        components, right by the right components."""
        A = self.target
        n = A.dim
        left = tuple(tuple(bm.left.col(j) for j in range(n)) for bm in self.maps)
        right = tuple(tuple(self.maps[b].right.col(i) for b in range(self.dim))
                      for i in range(n))
        return make_action(self.as_algebra(), A, left, right)

    def member_coords(self, bm: BiMap) -> Vector | None:
        """Coordinates of a pair in the basis, or None if outside the span."""
        if self.dim == 0:
            flat = _flatten(self.kind, bm)
            return () if all(x == self.target.field.zero for x in flat) else None
        return express_in_rref_rows(self.basis_matrix, self.pivots, _flatten(self.kind, bm))

    def to_json(self) -> dict:
        f = self.target.field
        return {
            "kind": self.kind,
            "basis": [{"L": [[f.to_json(x) for x in row] for row in bm.left.rows],
                       "R": [[f.to_json(x) for x in row] for row in bm.right.rows]}
                      for bm in self.maps],
            "tensor": [[[f.to_json(x) for x in v] for v in plane] for plane in self.tensor],
            "action": self.action_pair().to_json(),
        }


def actor_from_json(obj) -> ActorAlgebra:
    from .algebra import algebra_from_json
    if not isinstance(obj, dict) or set(obj) != {"kind", "basis", "tensor", "action"}:
        raise InputError("actor JSON needs exactly the keys kind, basis, tensor, action")
    kind = obj["kind"]
    if kind not in KINDS:
        raise InputError(f"unknown actor kind {kind!r}")
    if not isinstance(obj["action"], dict) or "A" not in obj["action"]:
        raise InputError("actor JSON action must contain the target algebra under 'A'")
    A = algebra_from_json(obj["action"]["A"])
    f = A.field
    n = A.dim
    maps = []
    try:
        for entry in obj["basis"]:
            if not isinstance(entry, dict) or set(entry) != {"L", "R"}:
                raise InputError("each basis entry needs exactly the keys L, R")
            L = Matrix.from_rows(f, [[f.parse(x) for x in row] for row in entry["L"]])
            R = Matrix.from_rows(f, [[f.parse(x) for x in row] for row in entry["R"]])
            if L.nrows != n or L.ncols != n or R.nrows != n or R.ncols != n:
                raise InputError("basis matrices must be dim x dim")
            maps.append(BiMap(L, R))
        m = len(maps)
        tensor = tuple(
            tuple(tuple(f.parse(x) for x in v) for v in plane) for plane in obj["tensor"])
    except FieldError as exc:
        raise InputError(str(exc)) from exc
    if len(tensor) != m or any(len(p) != m for p in tensor) \
            or any(len(v) != m for p in tensor for v in p):
        raise InputError("tensor must have shape m x m x m for m basis pairs")
    flats = [_flatten(kind, bm) for bm in maps]
    basis_matrix = Matrix.from_rows(f, flats)
    red, piv = basis_matrix.rref()
    if red.rows != basis_matrix.rows or len(piv) != m:
        raise InputError("basis pairs must be independent and RREF-canonical")
    actor = ActorAlgebra(kind, A, tuple(maps), tensor, basis_matrix, piv)
    if actor.action_pair().to_json() != obj["action"]:
        raise InputError("stored action does not match the one induced by the basis")
    return actor


# ---------------------------------------------------------------------------
# constraint assembly
#
# Unknown layout: vec(L) row-major, then vec(R) row-major when the kind has
# an independent right component.  Matrix convention: map(e_c) = sum_r
# M[r][c] e_r, so M.col(c) is the image of e_c.


def _zero_row(f, width):
    return [f.zero] * width


def _derivation_rows(A: Algebra):
    # D(e_i*e_j) = D(e_i)*e_j + e_i*D(e_j), coordinate m
    f, n, c = A.field, A.dim, A.tensor
    idx = lambda r, col: r * n + col
    rows = []
    for i in range(n):
        for j in range(n):
            for m in range(n):
                row = _zero_row(f, n * n)
                for k in range(n):
                    row[idx(m, k)] = f.add(row[idx(m, k)], c[i][j][k])
                for r in range(n):
                    row[idx(r, i)] = f.sub(row[idx(r, i)], c[r][j][m])
                    row[idx(r, j)] = f.sub(row[idx(r, j)], c[i][r][m])
                rows.append(tuple(row))
    return rows


def _bimultiplier_rows(A: Algebra):
    # L(x*y) = L(x)*y;  R(x*y) = x*R(y);  x*L(y) = R(x)*y
    f, n, c = A.field, A.dim, A.tensor
    nn = n * n
    li = lambda r, col: r * n + col
    ri = lambda r, col: nn + r * n + col
    rows = []
    for i in range(n):
        for j in range(n):
            for m in range(n):
                r1 = _zero_row(f, 2 * nn)
                r2 = _zero_row(f, 2 * nn)
                r3 = _zero_row(f, 2 * nn)
                for k in range(n):
                    r1[li(m, k)] = f.add(r1[li(m, k)], c[i][j][k])
                    r2[ri(m, k)] = f.add(r2[ri(m, k)], c[i][j][k])
                for r in range(n):
                    r1[li(r, i)] = f.sub(r1[li(r, i)], c[r][j][m])
                    r2[ri(r, j)] = f.sub(r2[ri(r, j)], c[i][r][m])
                    r3[li(r, j)] = f.add(r3[li(r, j)], c[i][r][m])
                    r3[ri(r, i)] = f.sub(r3[ri(r, i)], c[r][j][m])
                rows.extend((tuple(r1), tuple(r2), tuple(r3)))
    return rows


def _biderivation_rows(A: Algebra):
    # with L = [phi,-] and R = [-,phi]:
    #   R[x,y] = [x,R(y)] + [R(x),y]
    #   L[x,y] = [L(x),y] - [L(y),x]
    #   [x, L(y) + R(y)] = 0
    f, n, c = A.field, A.dim, A.tensor
    nn = n * n
    li = lambda r, col: r * n + col
    ri = lambda r, col: nn + r * n + col
    rows = []
    for i in range(n):
        for j in range(n):
            for m in range(n):
                r1 = _zero_row(f, 2 * nn)
                r2 = _zero_row(f, 2 * nn)
                r3 = _zero_row(f, 2 * nn)
                for k in range(n):
                    r1[ri(m, k)] = f.add(r1[ri(m, k)], c[i][j][k])
                    r2[li(m, k)] = f.add(r2[li(m, k)], c[i][j][k])
                for r in range(n):
                    r1[ri(r, j)] = f.sub(r1[ri(r, j)], c[i][r][m])
                    r1[ri(r, i)] = f.sub(r1[ri(r, i)], c[r][j][m])
                    r2[li(r, i)] = f.sub(r2[li(r, i)], c[r][j][m])
                    r2[li(r, j)] = f.add(r2[li(r, j)], c[r][i][m])
                    r3[li(r, j)] = f.add(r3[li(r, j)], c[i][r][m])
                    r3[ri(r, j)] = f.add(r3[ri(r, j)], c[i][r][m])
                rows.extend((tuple(r1), tuple(r2), tuple(r3)))
    return rows


def _multiplier_rows(A: Algebra):
    # f(x*y) = f(x)*y; commutativity of A makes the mirror condition redundant
    f, n, c = A.field, A.dim, A.tensor
    idx = lambda r, col: r * n + col
    rows = []
    for i in range(n):
        for j in range(n):
            for m in range(n):
                row = _zero_row(f, n * n)
                for k in range(n):
                    row[idx(m, k)] = f.add(row[idx(m, k)], c[i][j][k])
                for r in range(n):
                    row[idx(r, i)] = f.sub(row[idx(r, i)], c[r][j][m])
                rows.append(tuple(row))
    return rows


def _unflatten(f, n, flat) -> Matrix:
    return Matrix(f, tuple(tuple(flat[r * n + c] for c in range(n)) for r in range(n)))


def _maps_from_flat(kind: str, f, n: int, flat) -> BiMap:
    L = _unflatten(f, n, flat[: n * n])
    if kind == "der":
        return BiMap(L, L.neg())
    if kind in ("mult", "zero"):
        return BiMap(L, L)
    R = _unflatten(f, n, flat[n * n:])
    return BiMap(L, R)


def _product(kind: str, a: BiMap, b: BiMap) -> BiMap:
    if kind == "der":
        p = (a.left @ b.left).sub(b.left @ a.left)
        return BiMap(p, p.neg())
    if kind == "mult":
        p = a.left @ b.left
        return BiMap(p, p)
    if kind == "bim":
        return BiMap(a.left @ b.left, b.right @ a.right)
    if kind == "bider1":
        return BiMap((a.left @ b.left).add(b.right @ a.left),
                     (b.right @ a.right).sub(a.right @ b.right))
    if kind == "bider2":
        return BiMap((b.right @ a.left).sub(a.left @ b.right),
                     (b.right @ a.right).sub(a.right @ b.right))
    raise AssertionError(kind)


def _build_actor(kind: str, A: Algebra, constraint_rows) -> ActorAlgebra:
    f, n = A.field, A.dim
    null = Matrix.from_rows(f, constraint_rows).nullspace()
    basis_matrix, pivots = null.rref()
    basis_matrix = Matrix(f, basis_matrix.rows[: len(pivots)])
    maps = tuple(_maps_from_flat(kind, f, n, row) for row in basis_matrix.rows)
    m = len(maps)
    tensor = []
    for s in range(m):
        plane = []
        for t in range(m):
            prod = _product(kind, maps[s], maps[t])
            coeffs = express_in_rref_rows(basis_matrix, pivots, _flatten(kind, prod))
            if coeffs is None:
                raise ClosureError(
                    f"{kind}: product of basis pairs {s} and {t} leaves the span")
            plane.append(coeffs)
        tensor.append(tuple(plane))
    return ActorAlgebra(kind, A, maps, tuple(tensor), basis_matrix, pivots)


def _require_suite(A: Algebra, category: str, who: str):
    rep = identity_suite(A, category)
    if not rep.passed:
        raise InputError(f"{who} requires a {category} algebra; "
                         f"identity {rep.label!r} fails at {rep.witness}")


def derivations(A: Algebra) -> ActorAlgebra:
    """All D with D[x,y] = [D(x),y] + [x,D(y)], bracket = commutator."""
    _require_suite(A, "lie", "derivations")
    return _build_actor("der", A, _derivation_rows(A))


def bimultipliers(A: Algebra) -> ActorAlgebra:
    """All pairs (L,R) with L(xy)=L(x)y, R(xy)=xR(y), xL(y)=R(x)y."""
    _require_suite(A, "associative", "bimultipliers")
    return _build_actor("bim", A, _bimultiplier_rows(A))


def biderivations(A: Algebra, variant: int = 1) -> ActorAlgebra:
    """All pairs (L,R) satisfying the three biderivation constraints.

    The solution space does not depend on the variant; the bracket does.
    Variant 1 composes through the left components, variant 2 through the
    right ones; they agree exactly when the Condition-1 identity holds.
    """
    if variant not in (1, 2):
        raise InputError("variant must be 1 or 2")
    _require_suite(A, "leibniz", "biderivations")
    return _build_actor(f"bider{variant}", A, _biderivation_rows(A))


def multipliers(A: Algebra) -> ActorAlgebra:
    """All f with f(xy) = f(x)y on a commutative associative algebra."""
    _require_suite(A, "commutative", "multipliers")
    return _build_actor("mult", A, _multiplier_rows(A))


def zero_actor(A: Algebra) -> ActorAlgebra:
    """The empty candidate acting trivially; the actor of any zero-product
    algebra in the module category."""
    f = A.field
    return ActorAlgebra("zero", A, (), (), Matrix(f, ()), ())


# ---------------------------------------------------------------------------
# the canonical map and its crossed-module conditions


def canonical_d(A: Algebra, actor: ActorAlgebra) -> Matrix:
    """Coordinates of each basis element's multiplication pair in the actor.

    Row i holds the actor coordinates of (e_i * -, - * e_i).  A pair outside
    the actor's span means the candidate does not contain its own inner
    multiplications, which no valid input should produce; that raises
    ConstructionError rather than returning a partial answer.
    """
    if actor.target is not A and actor.target.tensor != A.tensor:
        raise InputError("actor was built for a different algebra")
    f, n = A.field, A.dim
    rows = []
    for i in range(n):
        pair = BiMap(A.left_mult_matrix(i), A.right_mult_matrix(i))
        if actor.kind == "der" and pair.right.rows != pair.left.neg().rows:
            raise ConstructionError(
                f"basis element {i}: right multiplication is not minus left; "
                "not expressible as a derivation pair")
        if actor.kind in ("mult", "zero") and pair.right.rows != pair.left.rows:
            raise ConstructionError(
                f"basis element {i}: right multiplication differs from left; "
                "not expressible as a multiplier pair")
        coords = actor.member_coords(pair)
        if coords is None:
            raise ConstructionError(
                f"multiplication pair of basis element {i} is outside the "
                f"{actor.kind} span")
        rows.append(coords)
    return Matrix.from_rows(f, rows)


def crossed_module_check(d: Matrix, act: ActionPair) -> Report:
    """Crossed-module conditions for a linear d: A -> B along an action.

    Rows of d are images in B coordinates.  The two group-shaped conditions
    hold automatically when addition is commutative and the dot action is
    trivial, and are reported as such; the two multiplicative conditions are
    checked on basis pairs.
    """
    A, B = act.A, act.B
    f = A.field
    if d.nrows != A.dim or (d.rows and len(d.rows[0]) != B.dim):
        raise InputError("d must be a dim(A) x dim(B) matrix of images")

    def dvec(v: Vector) -> Vector:
        out = [f.zero] * B.dim
        for r, x in enumerate(v):
            if x != f.zero:
                for c2, y in enumerate(d.rows[r]):
                    out[c2] = f.add(out[c2], f.mul(x, y))
        return tuple(out)

    auto = "auto-pass: addition commutes and the dot action is trivial"
    details = [
        {"condition": "i", "name": "d respects the dot action", "status": "pass", "note": auto},
        {"condition": "ii", "name": "dot action along d is conjugation", "status": "pass",
         "note": auto},
    ]
    for i in range(A.dim):
        di = d.rows[i] if A.dim else ()
        for j in range(A.dim):
            ej = basis_vector(f, A.dim, j)
            lhs = act.act_left(di, ej)
            if lhs != A.tensor[i][j]:
                return Report(False, label="d(a)*a' = a*a'", witness=(i, j),
                              lhs=lhs, rhs=A.tensor[i][j], details=details)
            rhs = act.act_right(ej, di)
            if rhs != A.tensor[j][i]:
                return Report(False, label="a'*d(a) = a'*a", witness=(j, i),
                              lhs=rhs, rhs=A.tensor[j][i], details=details)
    details.append({"condition": "iii", "name": "d(a)*a' = a*a' and a'*d(a) = a'*a",
                    "status": "pass"})
    for b in range(B.dim):
        eb = basis_vector(f, B.dim, b)
        for i in range(A.dim):
            lhs = dvec(act.left[b][i])
            rhs = B.multiply(eb, d.rows[i])
            if lhs != rhs:
                return Report(False, label="d(b*a) = b*d(a)", witness=(b, i),
                              lhs=lhs, rhs=rhs, details=details)
            lhs = dvec(act.right[i][b])
            rhs = B.multiply(d.rows[i], eb)
            if lhs != rhs:
                return Report(False, label="d(a*b) = d(a)*b", witness=(i, b),
                              lhs=lhs, rhs=rhs, details=details)
    details.append({"condition": "iv", "name": "d(b*a) = b*d(a) and d(a*b) = d(a)*b",
                    "status": "pass"})
    return Report(True, details=details)


# ---------------------------------------------------------------------------
# the two effective existence conditions
#
# Both conditions quantify over every algebra that could ever act on A.  The
# universality of the general actor lets a finite check stand in for that
# quantifier: every derived action factors through the candidate built above,
# so checking the identity on the candidate's basis pairs decides it for all
# actions at once.  This reduction is the whole point of the module.


def condition1_check(A: Algebra, bider: ActorAlgebra | None = None) -> Report:
    """[phi,[a,phi']] = -[phi,[phi',a]] over the biderivation basis."""
    if bider is None:
        bider = biderivations(A, 1)
    for s, f1 in enumerate(bider.maps):
        for t, f2 in enumerate(bider.maps):
            lhs = f1.left @ f2.right
            rhs = (f1.left @ f2.left).neg()
            if not lhs.equals(rhs):
                col = next(c for c in range(A.dim) if lhs.col(c) != rhs.col(c))
                return Report(False, label="[phi,[a,phi']] = -[phi,[phi',a]]",
                              witness=(s, t, col), lhs=lhs.col(col), rhs=rhs.col(col),
                              details=[{"bider_dim": bider.dim}])
    return Report(True, details=[{"bider_dim": bider.dim}])


def condition2_check(A: Algebra, bim: ActorAlgebra | None = None) -> Report:
    """(f*a)*f' = f*(a*f') over the bimultiplier basis."""
    if bim is None:
        bim = bimultipliers(A)
    for s, f1 in enumerate(bim.maps):
        for t, f2 in enumerate(bim.maps):
            lhs = f1.left @ f2.right
            rhs = f2.right @ f1.left
            if not lhs.equals(rhs):
                col = next(c for c in range(A.dim) if lhs.col(c) != rhs.col(c))
                return Report(False, label="f*(a*f') = (f*a)*f'",
                              witness=(s, t, col), lhs=lhs.col(col), rhs=rhs.col(col),
                              details=[{"bim_dim": bim.dim}])
    return Report(True, details=[{"bim_dim": bim.dim}])


def sufficient_conditions(A: Algebra) -> dict:
    """Two checkable properties, either of which forces the conditions above:
    trivial annihilator, or the products spanning the whole space."""
    return {
        "ann_zero": annihilator(A).dim == 0,
        "perfect": derived_subspace(A).dim == A.dim,
    }
