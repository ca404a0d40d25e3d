"""Structure-constant algebras: identities, subspaces, quotients, JSON."""

import itertools
import random
from fractions import Fraction

import pytest

from artifact.algebra import (CATEGORIES, Algebra, InputError, Subspace,
                              algebra_from_json, annihilator, check_identity,
                              derived_subspace, identity_suite, is_ideal,
                              make_algebra, quotient)
from artifact.corpus import (a5_leibniz, abelian, dual_numbers, heisenberg,
                             m2_rationals, sl2, zero_algebra)
from artifact.fields import GF, QQ
from artifact.linalg import Matrix, basis_vector

from conftest import load_fixture

gf5 = GF(5)


def brute_identity(a, tag):
    """Oracle: evaluate both sides of an identity with Algebra.multiply on
    basis tuples, no tensor contraction formulas involved."""
    n = a.dim
    f = a.field
    e = [basis_vector(f, n, i) for i in range(n)]
    mul = a.multiply

    def zero(v):
        return all(x == f.zero for x in v)

    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = e[i], e[j], e[k]
        if tag == "associativity":
            l, r = mul(mul(x, y), z), mul(x, mul(y, z))
        elif tag == "jacobi":
            s1 = mul(mul(x, y), z)
            s2 = mul(mul(y, z), x)
            s3 = mul(mul(z, x), y)
            if not zero(tuple(f.add(f.add(p, q), r2)
                              for p, q, r2 in zip(s1, s2, s3))):
                return False
            continue
        elif tag == "leibniz":
            l = mul(x, mul(y, z))
            r = tuple(f.sub(p, q) for p, q in
                      zip(mul(mul(x, y), z), mul(mul(x, z), y)))
        else:
            raise AssertionError(tag)
        if l != r:
            return False
    return True


FIXTURE_SUITE_CASES = [
    (sl2(), True), (heisenberg(), True), (m2_rationals(), True),
    (dual_numbers(), True), (a5_leibniz(), True),
    (abelian(QQ, 3), True), (zero_algebra(gf5, 2), True),
]


@pytest.mark.parametrize("a,expected", FIXTURE_SUITE_CASES,
                         ids=lambda v: getattr(v, "category", str(v)))
def test_fixture_suites(a, expected):
    assert identity_suite(a).passed is expected


def test_check_identity_agrees_with_brute_oracle_on_random_tensors():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randrange(1, 4)
        tensor = tuple(tuple(tuple(rng.randrange(5) for _ in range(n))
                             for _ in range(n)) for _ in range(n))
        a = make_algebra(gf5, [f"e{i}" for i in range(n)], tensor, "raw")
        for tag in ("associativity", "jacobi", "leibniz"):
            assert check_identity(a, tag).passed == brute_identity(a, tag)


def test_numpy_and_fraction_paths_report_identical_witnesses():
    # same integer tensor over GF(7) (numpy path) and Q (pure path)
    rng = random.Random(11)
    for _ in range(20):
        n = 3
        ints = [[[rng.randrange(-2, 3) for _ in range(n)] for _ in range(n)]
                for _ in range(n)]
        a_p = make_algebra(GF(7), "abc",
                           tuple(tuple(tuple(x % 7 for x in v) for v in r)
                                 for r in ints), "raw")
        a_q = make_algebra(QQ, "abc",
                           tuple(tuple(tuple(Fraction(x) for x in v) for v in r)
                                 for r in ints), "raw")
        for tag in ("associativity", "anticommutativity", "leibniz", "jacobi"):
            rp, rq = check_identity(a_p, tag), check_identity(a_q, tag)
            # seeded draws verified free of mod-7 cancellation; frozen
            assert rp.passed == rq.passed
            assert rp.witness == rq.witness


def test_witness_is_lexicographically_first():
    # fails anticommutativity at (0,0) and also at (1,1); must report (0,0)
    t = [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]
    t[0][0] = [1, 0]
    t[1][1] = [0, 1]
    a = make_algebra(gf5, "ab", tuple(tuple(tuple(v) for v in r) for r in t), "raw")
    rep = check_identity(a, "anticommutativity")
    assert not rep.passed and rep.witness[:2] == (0, 0)


def test_identity_suite_respects_category_override():
    a = m2_rationals()
    assert identity_suite(a).passed
    assert not identity_suite(a, "commutative").passed
    assert identity_suite(a, "alternative").passed


def test_module_category_forces_zero_tensor():
    t = (((QQ.one,),),)
    with pytest.raises(InputError):
        make_algebra(QQ, "x", t, "module")


def test_make_algebra_rejects_bad_shapes_and_names():
    z = ((QQ.zero,),)
    with pytest.raises(InputError):
        make_algebra(QQ, ["x", "x"], (z, z), "lie")  # duplicate names
    with pytest.raises(InputError):
        make_algebra(QQ, ["x"], ((),), "lie")  # ragged tensor
    with pytest.raises(InputError):
        make_algebra(QQ, ["x"], (z,), "nonsense")


def test_algebra_json_round_trip():
    for a in (sl2(), a5_leibniz(GF(5)), zero_algebra(QQ, 2, "module")):
        b = algebra_from_json(a.to_json())
        assert b.tensor == a.tensor and b.category == a.category \
            and b.field == a.field and b.basis == a.basis


def test_algebra_from_json_rejects_unknown_and_missing_keys():
    good = sl2().to_json()
    bad = dict(good)
    bad["extra"] = 1
    with pytest.raises(InputError):
        algebra_from_json(bad)
    bad = dict(good)
    del bad["dim"]
    with pytest.raises(InputError):
        algebra_from_json(bad)
    bad = dict(good)
    bad["products"] = [{"i": 0, "j": 1, "v": [0, 0, 1], "w": 2}]
    with pytest.raises(InputError):
        algebra_from_json(bad)


def test_fixture_files_load(tmp_path):
    a = algebra_from_json(load_fixture("sl2.json"))
    assert a.dim == 3 and identity_suite(a).passed


def test_annihilator_extremes():
    assert annihilator(m2_rationals()).dim == 0
    assert annihilator(zero_algebra(gf5, 3, "raw")).dim == 3
    # heisenberg: z kills everything
    ann = annihilator(heisenberg())
    assert ann.dim == 1 and ann.contains((QQ.zero, QQ.zero, QQ.one))


def test_derived_subspace():
    assert derived_subspace(sl2()).dim == 3  # perfect
    d = derived_subspace(heisenberg())
    assert d.dim == 1 and d.contains((QQ.zero, QQ.zero, QQ.one))
    assert derived_subspace(zero_algebra(QQ, 2, "raw")).dim == 0


def test_ideal_and_quotient_of_heisenberg():
    h = heisenberg()
    center = Subspace.from_spanning(QQ, 3, [(QQ.zero, QQ.zero, QQ.one)])
    assert is_ideal(h, center).passed
    q, proj = quotient(h, center)
    assert q.dim == 2
    assert identity_suite(q, "lie").passed
    assert all(all(x == QQ.zero for x in q.tensor[i][j])
               for i in range(2) for j in range(2))
    assert proj.apply((QQ.one, QQ.zero, QQ.one)) == (QQ.one, QQ.zero)


def test_non_ideal_refused():
    h = heisenberg()
    notideal = Subspace.from_spanning(QQ, 3, [(QQ.one, QQ.zero, QQ.zero)])
    assert not is_ideal(h, notideal).passed
    with pytest.raises(InputError):
        quotient(h, notideal)


def test_quotient_by_whole_algebra_is_empty():
    h = heisenberg()
    whole = Subspace.from_spanning(
        QQ, 3, [basis_vector(QQ, 3, i) for i in range(3)])
    q, _ = quotient(h, whole)
    assert q.dim == 0 and identity_suite(q).passed


def test_alternative_char2_exhaustive_cap():
    a = zero_algebra(GF(2), 17, "raw")
    with pytest.raises(InputError):
        check_identity(a, "alternative")
    # under the cap the exhaustive path runs
    b = zero_algebra(GF(2), 3, "raw")
    assert check_identity(b, "alternative").passed


def test_alternative_char2_catches_quadratic_failure():
    # x*x = y on basis x, fails (x+y)(x+y)... only under full expansion;
    # the basis-pair laws alone are trivial here, the quadratic sweep is not
    f = GF(2)
    t = [[[f.zero] * 2 for _ in range(2)] for _ in range(2)]
    t[0][0][1] = f.one
    t[0][1][0] = f.one
    t[1][0][0] = f.one
    a = make_algebra(f, "xy", tuple(tuple(tuple(v) for v in r) for r in t), "raw")
    rep = check_identity(a, "alternative")
    ok = brute_alternative_char2(a)
    assert rep.passed == ok


def brute_alternative_char2(a):
    """Oracle: test both alternative laws on every pair of elements."""
    f = a.field
    n = a.dim
    from itertools import product
    vecs = [tuple(v) for v in product(range(f.p), repeat=n)]
    for x in vecs:
        for y in vecs:
            xx = a.multiply(x, x)
            if a.multiply(xx, y) != a.multiply(x, a.multiply(x, y)):
                return False
            yy = a.multiply(y, y)
            if a.multiply(x, yy) != a.multiply(a.multiply(x, y), y):
                return False
    return True


def test_zero_dimensional_algebra_is_legal():
    a = make_algebra(QQ, (), (), "lie")
    assert a.dim == 0 and identity_suite(a).passed
