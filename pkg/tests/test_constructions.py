"""Actor candidates against independent sympy oracles.

The oracles restate the defining equations symbolically (sympy matrices,
linear_eq_to_matrix, rank) with none of the package's row-assembly code, so
a bookkeeping slip on either side shows up as a dimension or membership
mismatch.  Expected dimensions were computed by these oracles first and are
frozen below.
"""

import pytest
import sympy as sp

from artifact.algebra import InputError, Subspace, identity_suite, is_ideal, make_algebra
from artifact.constructions import (BiMap, ClosureError, ConstructionError,
                                    actor_from_json, biderivations,
                                    bimultipliers, canonical_d,
                                    condition1_check, condition2_check,
                                    crossed_module_check, derivations,
                                    multipliers, sufficient_conditions,
                                    zero_actor)
from artifact.corpus import (a5_leibniz, abelian, dual_numbers, heisenberg,
                             m2_rationals, sl2, truncated_poly, zero_algebra)
from artifact.existence import bider_variants_agree
from artifact.fields import QQ
from artifact.linalg import Matrix


# ---------------------------------------------------------------------------
# oracle: symbolic nullspace of the defining equations


def _sym_mul(a, u, v):
    n = a.dim
    return [sp.expand(sum(u[i] * v[j] * sp.Rational(a.tensor[i][j][m])
                          for i in range(n) for j in range(n)))
            for m in range(n)]


def _sym_apply(M, vec, n):
    return [sum(M[r, c] * vec[c] for c in range(n)) for r in range(n)]


def oracle_constraints(a, kind):
    """Constraint matrix over the flattened unknowns, oracle route."""
    n = a.dim
    if kind in ("der", "mult"):
        syms = sp.symbols(f"u0:{n * n}")
        M = sp.Matrix(n, n, syms)
    else:
        syms = sp.symbols(f"u0:{2 * n * n}")
        L = sp.Matrix(n, n, syms[: n * n])
        R = sp.Matrix(n, n, syms[n * n:])
    e = [[sp.Integer(1) if r == i else sp.Integer(0) for r in range(n)]
         for i in range(n)]
    exprs = []
    for i in range(n):
        for j in range(n):
            x, y = e[i], e[j]
            xy = _sym_mul(a, x, y)
            if kind == "der":
                lhs = _sym_apply(M, xy, n)
                rhs = [p + q for p, q in zip(_sym_mul(a, _sym_apply(M, x, n), y),
                                             _sym_mul(a, x, _sym_apply(M, y, n)))]
                exprs.extend(p - q for p, q in zip(lhs, rhs))
            elif kind == "mult":
                lhs = _sym_apply(M, xy, n)
                rhs = _sym_mul(a, _sym_apply(M, x, n), y)
                exprs.extend(p - q for p, q in zip(lhs, rhs))
            elif kind == "bim":
                exprs.extend(p - q for p, q in zip(
                    _sym_apply(L, xy, n), _sym_mul(a, _sym_apply(L, x, n), y)))
                exprs.extend(p - q for p, q in zip(
                    _sym_apply(R, xy, n), _sym_mul(a, x, _sym_apply(R, y, n))))
                exprs.extend(p - q for p, q in zip(
                    _sym_mul(a, x, _sym_apply(L, y, n)),
                    _sym_mul(a, _sym_apply(R, x, n), y)))
            else:  # bider: L = [phi,-], R = [-,phi]
                Rx, Ry = _sym_apply(R, x, n), _sym_apply(R, y, n)
                Lx, Ly = _sym_apply(L, x, n), _sym_apply(L, y, n)
                exprs.extend(p - q - r for p, q, r in zip(
                    _sym_apply(R, xy, n), _sym_mul(a, x, Ry), _sym_mul(a, Rx, y)))
                exprs.extend(p - q + r for p, q, r in zip(
                    _sym_apply(L, xy, n), _sym_mul(a, Lx, y), _sym_mul(a, Ly, x)))
                exprs.extend(_sym_mul(a, x, [p + q for p, q in zip(Ly, Ry)]))
    mat, rhs = sp.linear_eq_to_matrix(exprs, list(syms))
    assert rhs == sp.zeros(len(exprs), 1)
    return mat, syms


def oracle_dim(a, kind):
    mat, syms = oracle_constraints(a, kind)
    return len(syms) - mat.rank()


def oracle_accepts(a, kind, flat):
    """Membership of a flattened (L,R) vector in the oracle's nullspace."""
    mat, syms = oracle_constraints(a, kind)
    vec = sp.Matrix([sp.Rational(x) for x in flat])
    return mat * vec == sp.zeros(mat.rows, 1)


def flat_maps(actor, s):
    bm = actor.maps[s]
    out = [x for row in bm.left.rows for x in row]
    if actor.kind not in ("der", "mult", "zero"):
        out += [x for row in bm.right.rows for x in row]
    return out


# frozen oracle outputs (recomputed below; values pinned for drift detection)
EXPECTED_DIMS = [
    ("der", sl2(), 3),
    ("der", heisenberg(), 6),
    ("der", abelian(QQ, 2), 4),
    ("der", abelian(QQ, 4), 16),
    ("bim", m2_rationals(), 4),
    ("bim", dual_numbers(), 2),
    ("bim", zero_algebra(QQ, 1, "associative"), 2),
    ("bider", a5_leibniz(), 3),
    ("bider", zero_algebra(QQ, 1, "leibniz"), 2),
    ("mult", truncated_poly(QQ, 2, "commutative"), 2),
    ("mult", zero_algebra(QQ, 1, "commutative"), 1),
    ("mult", truncated_poly(QQ, 1, "commutative"), 1),
]


def build(kind, a):
    if kind == "der":
        return derivations(a)
    if kind == "bim":
        return bimultipliers(a)
    if kind == "bider":
        return biderivations(a, 1)
    return multipliers(a)


@pytest.mark.parametrize("kind,a,expected", EXPECTED_DIMS,
                         ids=[f"{k}-{a.category}{a.dim}" for k, a, _ in EXPECTED_DIMS])
def test_actor_dimension_matches_oracle(kind, a, expected):
    okind = "bider" if kind == "bider" else kind
    assert oracle_dim(a, okind) == expected
    actor = build(kind, a)
    assert actor.dim == expected
    # every basis element of ours satisfies the oracle's equations
    for s in range(actor.dim):
        assert oracle_accepts(a, okind, flat_maps(actor, s))


def test_sl2_derivations_equal_adjoint_span():
    a = sl2()
    actor = derivations(a)
    ad_rows = []
    for i in range(3):
        lam = a.left_mult_matrix(i)
        ad_rows.append(tuple(x for row in lam.rows for x in row))
    der_rows = [tuple(flat_maps(actor, s)) for s in range(actor.dim)]
    stacked = Matrix.from_rows(QQ, der_rows + ad_rows)
    assert Matrix.from_rows(QQ, der_rows).rank() == 3
    assert stacked.rank() == 3  # adjoints add nothing: same span


def test_a5_biderivation_shape():
    # solution space is {L=[[0,u],[0,-s]], R=[[2s,t],[0,s]]}; three params
    actor = biderivations(a5_leibniz(), 1)
    assert actor.dim == 3
    for s in range(3):
        L, R = actor.maps[s].left, actor.maps[s].right
        assert L.entry(0, 0) == QQ.zero
        assert L.entry(1, 0) == QQ.zero
        assert R.entry(1, 0) == QQ.zero
        assert L.entry(1, 1) == QQ.neg(R.entry(1, 1))
        assert R.entry(0, 0) == QQ.mul(QQ.from_int(2), R.entry(1, 1))


def test_sl2_as_leibniz_contains_adjoint_pairs():
    a = make_algebra(QQ, sl2().basis, sl2().tensor, "leibniz")
    actor = biderivations(a, 1)
    d = canonical_d(a, actor)  # raises if any pair falls outside the span
    assert d.nrows == 3
    assert Matrix.from_rows(QQ, d.rows).rank() == 3  # center is 0


def test_actor_tensors_satisfy_their_categories():
    cases = [
        (derivations(sl2()), "lie"),
        (derivations(heisenberg()), "lie"),
        (bimultipliers(m2_rationals()), "associative"),
        (bimultipliers(dual_numbers()), "associative"),
        (biderivations(a5_leibniz(), 1), "leibniz"),
        (multipliers(truncated_poly(QQ, 3, "commutative")), "commutative"),
    ]
    for actor, cat in cases:
        assert identity_suite(actor.as_algebra(), cat).passed, (actor.kind, cat)


def test_closure_products_match_stored_tensor():
    # recompute each composite map pair from scratch and re-express it
    def der_combine(s, t):
        p = (s.left @ t.left).sub(t.left @ s.left)
        return BiMap(p, p.neg())

    for actor, combine in [
        (bimultipliers(m2_rationals()),
         lambda s, t: BiMap(s.left @ t.left, t.right @ s.right)),
        (derivations(sl2()), der_combine),
        (biderivations(a5_leibniz(), 1),
         lambda s, t: BiMap((s.left @ t.left).add(t.right @ s.left),
                            (t.right @ s.right).sub(s.right @ t.right))),
    ]:
        for s in range(actor.dim):
            for t in range(actor.dim):
                prod = combine(actor.maps[s], actor.maps[t])
                coords = actor.member_coords(prod)
                assert coords is not None
                assert coords == actor.tensor[s][t]


def test_kind_category_guards():
    with pytest.raises(InputError):
        derivations(m2_rationals())  # not anticommutative
    with pytest.raises(InputError):
        bimultipliers(sl2())  # not associative
    with pytest.raises(InputError):
        multipliers(m2_rationals())  # not commutative
    with pytest.raises(InputError):
        biderivations(a5_leibniz(), 3)


def test_bider_variants_agree_on_a5_and_zero():
    assert bider_variants_agree(a5_leibniz()).passed
    # 1-dim zero bracket: composition brackets differ (variant 2's L part is
    # -l r' + r' l = 0 for scalars, variant 1's is l l' + r' l) and indeed
    # condition 1 fails here, so no agreement is promised
    rep = bider_variants_agree(zero_algebra(QQ, 1, "leibniz"))
    assert not rep.passed
    assert rep.details[0]["condition1_passed"] is False


def test_canonical_d_injective_for_m2():
    a = m2_rationals()
    actor = bimultipliers(a)
    d = canonical_d(a, actor)
    assert Matrix.from_rows(QQ, d.rows).rank() == 4


def test_canonical_d_zero_map_for_zero_algebra():
    a = zero_algebra(QQ, 2, "module")
    actor = zero_actor(a)
    d = canonical_d(a, actor)
    assert d.nrows == 2 and all(len(r) == 0 for r in d.rows)


def test_canonical_d_fails_loudly_outside_span():
    a = heisenberg()
    with pytest.raises(ConstructionError):
        canonical_d(a, zero_actor(a))


def test_crossed_module_of_derivation_action():
    a = sl2()
    actor = derivations(a)
    d = canonical_d(a, actor)
    assert crossed_module_check(d, actor.action_pair()).passed


def test_crossed_module_fails_for_zero_map_with_products():
    a = sl2()
    actor = derivations(a)
    zero_d = Matrix.zeros(QQ, 3, actor.dim)
    rep = crossed_module_check(zero_d, actor.action_pair())
    assert not rep.passed and rep.witness is not None and rep.lhs is not None


def test_image_of_d_is_ideal_in_actor():
    for a, actor in [
        (sl2(), derivations(sl2())),
        (m2_rationals(), bimultipliers(m2_rationals())),
        (a5_leibniz(), biderivations(a5_leibniz(), 1)),
    ]:
        d = canonical_d(a, actor)
        img = Subspace.from_spanning(QQ, actor.dim, list(d.rows))
        assert is_ideal(actor.as_algebra(), img).passed


def test_condition_checks_on_fixtures():
    assert condition2_check(m2_rationals()).passed
    assert condition2_check(dual_numbers()).passed
    assert condition2_check(zero_algebra(QQ, 1, "associative")).passed
    assert not condition2_check(zero_algebra(QQ, 2, "associative")).passed
    assert condition1_check(a5_leibniz()).passed
    sl2_leib = make_algebra(QQ, sl2().basis, sl2().tensor, "leibniz")
    assert condition1_check(sl2_leib).passed
    assert not condition1_check(zero_algebra(QQ, 2, "leibniz")).passed


def test_sufficient_conditions_fixtures():
    assert sufficient_conditions(sl2()) == {"ann_zero": True, "perfect": True}
    assert sufficient_conditions(a5_leibniz()) == {"ann_zero": False, "perfect": False}
    assert sufficient_conditions(zero_algebra(QQ, 2, "raw")) == \
        {"ann_zero": False, "perfect": False}


def test_actor_json_round_trip_and_tamper_detection():
    actor = bimultipliers(dual_numbers())
    obj = actor.to_json()
    again = actor_from_json(obj)
    assert again.dim == actor.dim and again.tensor == actor.tensor
    assert all(again.maps[s].left.rows == actor.maps[s].left.rows
               for s in range(actor.dim))
    bad = actor.to_json()
    bad["action"]["left"][0][0][0] = 1 + bad["action"]["left"][0][0][0]
    with pytest.raises(InputError):
        actor_from_json(bad)
