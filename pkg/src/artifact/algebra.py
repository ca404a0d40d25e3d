"""Finite-dimensional algebras given by structure constants.

An algebra is a field, a basis, and a tensor c with
e_i * e_j = sum_k c[i][j][k] e_k, plus a category tag naming the identity
suite the instance is supposed to satisfy.  Identity checks report the
lexicographically first failing basis tuple.  Over prime fields the
multilinear identities are evaluated through integer numpy contractions
(reduced mod p after every product, values stay far below 2^63), over Q
through exact Fraction loops; both paths produce identical reports.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .fields import QQ, Field, FieldError, PrimeField, field_from_json
from .linalg import (
    Matrix,
    Vector,
    basis_vector,
    express_in_rref_rows,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
    vec_zero,
)
from .reporting import Report

CATEGORIES = ("lie", "leibniz", "associative", "commutative", "alternative", "module", "raw")

# identity tags run for each category tag
SUITES = {
    "lie": ("anticommutativity", "jacobi"),
    "leibniz": ("leibniz",),
    "associative": ("associativity",),
    "commutative": ("associativity", "commutativity"),
    "alternative": ("alternative",),
    "module": ("zero",),
    "raw": (),
}


class InputError(ValueError):
    """Malformed or inconsistent input data."""


@dataclass(frozen=True)
class Algebra:
    field: Field
    dim: int
    basis: tuple[str, ...]
    tensor: tuple  # tensor[i][j] is the coefficient vector of e_i * e_j
    category: str

    def mul_basis(self, i: int, j: int) -> Vector:
        return self.tensor[i][j]

    def multiply(self, u: Vector, v: Vector) -> Vector:
        f = self.field
        out = list(vec_zero(f, self.dim))
        for i, a in enumerate(u):
            if a == f.zero:
                continue
            for j, b in enumerate(v):
                if b == f.zero:
                    continue
                s = f.mul(a, b)
                for k, c in enumerate(self.tensor[i][j]):
                    if c != f.zero:
                        out[k] = f.add(out[k], f.mul(s, c))
        return tuple(out)

    def left_mult_matrix(self, i: int) -> Matrix:
        """Matrix of x -> e_i * x."""
        f = self.field
        return Matrix(f, tuple(tuple(self.tensor[i][j][m] for j in range(self.dim))
                               for m in range(self.dim)))

    def right_mult_matrix(self, i: int) -> Matrix:
        """Matrix of x -> x * e_i."""
        f = self.field
        return Matrix(f, tuple(tuple(self.tensor[j][i][m] for j in range(self.dim))
                               for m in range(self.dim)))

    def to_json(self) -> dict:
        f = self.field
        products = []
        for i in range(self.dim):
            for j in range(self.dim):
                v = self.tensor[i][j]
                if not vec_is_zero(f, v):
                    products.append({"i": i, "j": j, "v": [f.to_json(x) for x in v]})
        return {
            "field": f.field_to_json(),
            "dim": self.dim,
            "basis": list(self.basis),
            "category": self.category,
            "products": products,
        }


def make_algebra(field: Field, basis, tensor, category: str) -> Algebra:
    """Build and validate an Algebra from an explicit structure tensor."""
    basis = tuple(str(b) for b in basis)
    dim = len(basis)
    if len(set(basis)) != dim:
        raise InputError("basis names must be unique")
    if category not in CATEGORIES:
        raise InputError(f"unknown category {category!r}, expected one of {CATEGORIES}")
    t = tuple(tuple(tuple(row) for row in plane) for plane in tensor)
    if len(t) != dim or any(len(p) != dim for p in t) or any(len(r) != dim for p in t for r in p):
        raise InputError("structure tensor must have shape dim x dim x dim")
    if category == "module":
        z = field.zero
        if any(x != z for p in t for r in p for x in r):
            raise InputError("category 'module' requires the zero tensor")
    return Algebra(field, dim, basis, t, category)


def make_algebra_from_products(field: Field, basis, products: dict, category: str) -> Algebra:
    """products maps (i, j) to a coefficient vector; missing pairs are zero."""
    dim = len(tuple(basis))
    zero = vec_zero(field, dim)
    tensor = [[zero for _ in range(dim)] for _ in range(dim)]
    for (i, j), v in products.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise InputError(f"product index ({i},{j}) out of range")
        if len(v) != dim:
            raise InputError(f"product vector for ({i},{j}) has wrong length")
        tensor[i][j] = tuple(v)
    return make_algebra(field, basis, tensor, category)


def algebra_from_json(obj) -> Algebra:
    if not isinstance(obj, dict):
        raise InputError("algebra JSON must be an object")
    required = {"field", "dim", "basis", "category"}
    allowed = required | {"products"}
    if not required <= set(obj) or not set(obj) <= allowed:
        raise InputError(f"algebra JSON keys must be {sorted(allowed)} (products optional)")
    try:
        field = field_from_json(obj["field"])
    except FieldError as exc:
        raise InputError(str(exc)) from exc
    dim = obj["dim"]
    basis = obj["basis"]
    if not isinstance(dim, int) or not isinstance(basis, list) or len(basis) != dim:
        raise InputError("dim must be an int equal to len(basis)")
    products = {}
    for entry in obj.get("products", []):
        if not isinstance(entry, dict) or set(entry) != {"i", "j", "v"}:
            raise InputError("each product entry needs exactly the keys i, j, v")
        i, j, v = entry["i"], entry["j"], entry["v"]
        if not isinstance(v, list) or len(v) != dim:
            raise InputError(f"product vector for ({i},{j}) must be a list of length {dim}")
        try:
            products[(i, j)] = tuple(field.parse(x) for x in v)
        except FieldError as exc:
            raise InputError(str(exc)) from exc
    return make_algebra_from_products(field, basis, products, obj["category"])


# ---------------------------------------------------------------------------
# identity checks

IDENTITY_TAGS = (
    "associativity",
    "commutativity",
    "anticommutativity",
    "jacobi",
    "leibniz",
    "alternative",
    "axiom1",
    "zero",
)


def _np_tensor(a: Algebra) -> np.ndarray:
    return np.array(a.tensor, dtype=np.int64)


def _np_pair_diffs(tag: str, c: np.ndarray, p: int):
    """Difference arrays for 2-index identities, list of (name, D[i,j,m])."""
    if tag == "commutativity":
        return [("x*y = y*x", (c - c.transpose(1, 0, 2)) % p)]
    if tag == "anticommutativity":
        return [("x*y = -y*x", (c + c.transpose(1, 0, 2)) % p)]
    raise AssertionError(tag)


def _np_triple_diffs(tag: str, c: np.ndarray, p: int):
    """Difference arrays for 3-index identities, list of (name, D[i,j,k,m])."""
    def e(spec):
        return np.einsum(spec, c, c)

    if tag == "associativity":
        return [("(x*y)*z = x*(y*z)", (e("ijr,rkm->ijkm") - e("jkr,irm->ijkm")) % p)]
    if tag == "jacobi":
        d = (e("ijr,rkm->ijkm") + e("jkr,rim->ijkm") + e("kir,rjm->ijkm")) % p
        return [("[[x,y],z]+[[y,z],x]+[[z,x],y] = 0", d)]
    if tag == "leibniz":
        d = (e("jkr,irm->ijkm") - e("ijr,rkm->ijkm") + e("ikr,rjm->ijkm")) % p
        return [("[x,[y,z]] = [[x,y],z]-[[x,z],y]", d)]
    if tag == "alternative":
        d1 = (e("jkr,irm->ijkm") - e("ijr,rkm->ijkm") - e("jir,rkm->ijkm") + e("ikr,jrm->ijkm")) % p
        d2 = (e("ijr,rkm->ijkm") - e("jkr,irm->ijkm") + e("ikr,rjm->ijkm") - e("kjr,irm->ijkm")) % p
        return [("x(yz) = (xy)z+(yx)z-y(xz)", d1), ("(xy)z = x(yz)-(xz)y+x(zy)", d2)]
    raise AssertionError(tag)


def _pure_pair_sides(tag: str, a: Algebra, i: int, j: int):
    f = a.field
    if tag == "commutativity":
        return a.tensor[i][j], a.tensor[j][i]
    if tag == "anticommutativity":
        return a.tensor[i][j], tuple(f.neg(x) for x in a.tensor[j][i])
    raise AssertionError(tag)


def _pure_triple_sides(tag: str, name: str, a: Algebra, i: int, j: int, k: int):
    f = a.field
    ei, ej, ek = (basis_vector(f, a.dim, x) for x in (i, j, k))
    m = a.multiply
    if tag == "associativity":
        return m(a.tensor[i][j], ek), m(ei, a.tensor[j][k])
    if tag == "jacobi":
        s = vec_add(f, vec_add(f, m(a.tensor[i][j], ek), m(a.tensor[j][k], ei)),
                    m(a.tensor[k][i], ej))
        return s, vec_zero(f, a.dim)
    if tag == "leibniz":
        lhs = m(ei, a.tensor[j][k])
        rhs = vec_sub(f, m(a.tensor[i][j], ek), m(a.tensor[i][k], ej))
        return lhs, rhs
    if tag == "alternative" and name.startswith("x(yz)"):
        lhs = m(ei, a.tensor[j][k])
        rhs = vec_sub(f, vec_add(f, m(a.tensor[i][j], ek), m(a.tensor[j][i], ek)),
                      m(ej, a.tensor[i][k]))
        return lhs, rhs
    if tag == "alternative":
        lhs = m(a.tensor[i][j], ek)
        rhs = vec_add(f, vec_sub(f, m(ei, a.tensor[j][k]), m(a.tensor[i][k], ej)),
                      m(ei, a.tensor[k][j]))
        return lhs, rhs
    raise AssertionError(tag)


_PAIR_TAGS = ("commutativity", "anticommutativity")
_TRIPLE_TAGS = ("associativity", "jacobi", "leibniz", "alternative")


def _triple_names(tag: str):
    if tag == "associativity":
        return ["(x*y)*z = x*(y*z)"]
    if tag == "jacobi":
        return ["[[x,y],z]+[[y,z],x]+[[z,x],y] = 0"]
    if tag == "leibniz":
        return ["[x,[y,z]] = [[x,y],z]-[[x,z],y]"]
    if tag == "alternative":
        return ["x(yz) = (xy)z+(yx)z-y(xz)", "(xy)z = x(yz)-(xz)y+x(zy)"]
    raise AssertionError(tag)


def check_identity(a: Algebra, tag: str) -> Report:
    """Check one identity tag on all basis tuples of the algebra."""
    if tag not in IDENTITY_TAGS:
        raise InputError(f"unknown identity tag {tag!r}")
    f = a.field
    n = a.dim
    if n == 0:
        return Report(True, details=[{"name": tag, "status": "pass", "note": "empty algebra"}])

    if tag == "zero":
        for i in range(n):
            for j in range(n):
                if not vec_is_zero(f, a.tensor[i][j]):
                    return Report(False, label="all products vanish", witness=(i, j),
                                  lhs=a.tensor[i][j], rhs=vec_zero(f, n))
        return Report(True, details=[{"name": "all products vanish", "status": "pass"}])

    if tag == "axiom1":
        # x1 + (x2*x3) = (x2*x3) + x1: vector addition commutes, evaluated literally
        for i, j, k in itertools.product(range(n), repeat=3):
            ei = basis_vector(f, n, i)
            prod = a.tensor[j][k]
            if vec_add(f, ei, prod) != vec_add(f, prod, ei):
                return Report(False, label="x1+(x2*x3) = (x2*x3)+x1", witness=(i, j, k))
        return Report(True, details=[{"name": "x1+(x2*x3) = (x2*x3)+x1",
                                      "status": "pass", "note": "addition is commutative"}])

    if tag in _PAIR_TAGS:
        witness = None
        if isinstance(f, PrimeField):
            name, d = _np_pair_diffs(tag, _np_tensor(a), f.p)[0]
            bad = np.argwhere(d.any(axis=2))
            if len(bad):
                witness = tuple(int(x) for x in bad[0])
        else:
            name = _np_pair_diffs(tag, np.zeros((1, 1, 1), dtype=np.int64), 2)[0][0]
            for i, j in itertools.product(range(n), repeat=2):
                lhs, rhs = _pure_pair_sides(tag, a, i, j)
                if lhs != rhs:
                    witness = (i, j)
                    break
        if witness is None:
            return Report(True, details=[{"name": name, "status": "pass"}])
        lhs, rhs = _pure_pair_sides(tag, a, *witness)
        return Report(False, label=name, witness=witness, lhs=lhs, rhs=rhs)

    # three-index identities
    names = _triple_names(tag)
    if isinstance(f, PrimeField):
        diffs = _np_triple_diffs(tag, _np_tensor(a), f.p)
        for name, d in diffs:
            bad = np.argwhere(d.any(axis=3))
            if len(bad):
                witness = tuple(int(x) for x in bad[0])
                lhs, rhs = _pure_triple_sides(tag, name, a, *witness)
                return Report(False, label=name, witness=witness, lhs=lhs, rhs=rhs)
    else:
        for name in names:
            for i, j, k in itertools.product(range(n), repeat=3):
                lhs, rhs = _pure_triple_sides(tag, name, a, i, j, k)
                if lhs != rhs:
                    return Report(False, label=name, witness=(i, j, k), lhs=lhs, rhs=rhs)

    if tag == "alternative" and f.char == 2:
        rep = _alternative_char2_exhaustive(a)
        if not rep.passed:
            return rep
        return Report(True, details=[{"name": nm, "status": "pass"} for nm in names]
                      + rep.details)
    return Report(True, details=[{"name": nm, "status": "pass"} for nm in names])


def _alternative_char2_exhaustive(a: Algebra) -> Report:
    """Over characteristic 2 the linearized laws are weaker than the
    quadratic ones, so check x(xy)=(xx)y and (yx)x=y(xx) on every vector x
    of the finite space against every basis y."""
    f = a.field
    n = a.dim
    if f.p ** n > 65536:
        raise InputError("char-2 exhaustive alternative check is too large")
    name = "char-2 exhaustive: (xx)y=x(xy), y(xx)=(yx)x"
    for coords in itertools.product(range(f.p), repeat=n):
        x = tuple(f.from_int(c) for c in coords)
        xx = a.multiply(x, x)
        for j in range(n):
            ey = basis_vector(f, n, j)
            if a.multiply(xx, ey) != a.multiply(x, a.multiply(x, ey)):
                return Report(False, label=name, witness=coords + (j,))
            if a.multiply(ey, xx) != a.multiply(a.multiply(ey, x), x):
                return Report(False, label=name, witness=coords + (j,))
    return Report(True, details=[{"name": name, "status": "pass"}])


def identity_suite(a: Algebra, category: Optional[str] = None) -> Report:
    """Run the identity tags of the (default: own) category tag."""
    cat = a.category if category is None else category
    if cat not in SUITES:
        raise InputError(f"unknown category {cat!r}")
    details = []
    for tag in SUITES[cat]:
        rep = check_identity(a, tag)
        if not rep.passed:
            rep.details = details + [{"name": tag, "status": "fail", "label": rep.label}]
            return rep
        details.append({"name": tag, "status": "pass"})
    return Report(True, details=details)


# ---------------------------------------------------------------------------
# subspaces, annihilator, derived subspace, ideals, quotients


@dataclass(frozen=True)
class Subspace:
    """Subspace of coordinate space, basis rows kept in RREF."""

    ambient: int
    basis: Matrix
    pivots: tuple[int, ...]

    @classmethod
    def from_spanning(cls, field: Field, ambient: int, rows) -> "Subspace":
        m = Matrix.from_rows(field, rows) if rows else Matrix(field, ())
        if m.nrows == 0:
            return cls(ambient, Matrix(field, ()), ())
        red, piv = m.rref()
        return cls(ambient, Matrix(field, red.rows[: len(piv)]), piv)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def contains(self, v: Vector) -> bool:
        return self.coords(v) is not None

    def coords(self, v: Vector) -> Optional[Vector]:
        if self.dim == 0:
            return () if all(x == self.basis.field.zero for x in v) else None
        return express_in_rref_rows(self.basis, self.pivots, v)

    def equals(self, other: "Subspace") -> bool:
        return self.ambient == other.ambient and self.basis.rows == other.basis.rows


def annihilator(a: Algebra) -> Subspace:
    """{x : x*e_j = 0 and e_j*x = 0 for all j}, canonical basis."""
    f = a.field
    n = a.dim
    if n == 0:
        return Subspace(0, Matrix(f, ()), ())
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append(tuple(a.tensor[i][j][k] for i in range(n)))  # x * e_j
            rows.append(tuple(a.tensor[j][i][k] for i in range(n)))  # e_j * x
    null = Matrix.from_rows(f, rows).nullspace()
    red, piv = null.rref() if null.nrows else (Matrix(f, ()), ())
    return Subspace(n, Matrix(f, red.rows[: len(piv)]), piv)


def derived_subspace(a: Algebra) -> Subspace:
    """Span of all basis products e_i * e_j, canonical basis."""
    rows = [a.tensor[i][j] for i in range(a.dim) for j in range(a.dim)]
    return Subspace.from_spanning(a.field, a.dim, rows)


def is_ideal(a: Algebra, s: Subspace) -> Report:
    """Two-sided ideal test for a subspace given by its canonical basis."""
    if s.ambient != a.dim:
        raise InputError("subspace ambient dimension mismatch")
    f = a.field
    for r, v in enumerate(s.basis.rows):
        for j in range(a.dim):
            ej = basis_vector(f, a.dim, j)
            right = a.multiply(v, ej)
            if not s.contains(right):
                return Report(False, label="v*e_j stays in subspace", witness=(r, j), lhs=right)
            left = a.multiply(ej, v)
            if not s.contains(left):
                return Report(False, label="e_j*v stays in subspace", witness=(r, j), lhs=left)
    return Report(True)


def quotient(a: Algebra, ideal: Subspace) -> tuple[Algebra, Matrix]:
    """Quotient algebra by a two-sided ideal plus the projection matrix.

    The complement is spanned by the coordinates outside the ideal's pivot
    columns; the projection reduces a vector by the ideal's RREF basis and
    reads off the complement coordinates.
    """
    rep = is_ideal(a, ideal)
    if not rep.passed:
        raise InputError("quotient requires a two-sided ideal")
    f = a.field
    n = a.dim
    pivset = set(ideal.pivots)
    qcols = [c for c in range(n) if c not in pivset]

    def project(v: Vector) -> Vector:
        residual = list(v)
        for row, pc in zip(ideal.basis.rows, ideal.pivots):
            c = residual[pc]
            if c != f.zero:
                for idx, x in enumerate(row):
                    if x != f.zero:
                        residual[idx] = f.sub(residual[idx], f.mul(c, x))
        return tuple(residual[q] for q in qcols)

    qdim = len(qcols)
    tensor = []
    for r in range(qdim):
        plane = []
        er = basis_vector(f, n, qcols[r])
        for s_ in range(qdim):
            es = basis_vector(f, n, qcols[s_])
            plane.append(project(a.multiply(er, es)))
        tensor.append(tuple(plane))
    names = tuple(a.basis[q] for q in qcols)
    proj = Matrix(f, tuple(zip(*(project(basis_vector(f, n, j)) for j in range(n)))))
    return make_algebra(f, names, tuple(tensor), a.category), proj
