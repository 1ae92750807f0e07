import numpy as np
import pytest

from tautilt.algebra import AlgebraSpec, Quiver, RelationSpec, build_algebra
from tautilt.corpus import corpus, dual_numbers, linear_a, semisimple
from tautilt.errors import AlgebraMismatch, InconsistentBound, NonAdmissibleRelation, PathExplosion


def commutative_square(field):
    # 0 -a-> 1 -b-> 3 and 0 -c-> 2 -d-> 3 with ab = cd
    q = Quiver(4, ((0, 0, 1), (1, 1, 3), (2, 0, 2), (3, 2, 3)))
    rel = RelationSpec(((1, (0, 1)), (-1, (2, 3))))
    return build_algebra(AlgebraSpec(q, (rel,), 3, field))


def test_a2_basis(field):
    A = linear_a(2, field)
    assert A.dim == 3
    assert [A.label(i) for i in range(3)] == ["e0", "e1", "a0"]


def test_semisimple(field):
    A = semisimple(3, field)
    assert A.dim == 3 and A.is_semisimple
    for i in range(3):
        for j in range(3):
            prod = A.mul(A.e(i), A.e(j))
            assert np.array_equal(prod, A.e(i) if i == j else A.zero())


def test_dual_numbers(field):
    A = dual_numbers(field)
    assert A.dim == 2
    x = A.arrow(0)
    assert not np.any(A.mul(x, x) != 0)


def test_commutative_square_reduces_one_path(field):
    A = commutative_square(field)
    # 4 idempotents, 4 arrows, one surviving length-2 path
    assert A.dim == 9
    ab = A.path((0, 1))
    cd = A.path((2, 3))
    assert np.array_equal(ab, cd)


def test_associativity_on_corpus(field):
    for A in corpus(field).values():
        assert A.check_associativity()
    assert commutative_square(field).check_associativity()


def test_unit(field):
    A = linear_a(3, field)
    one = A.one()
    for b in range(A.dim):
        u = A.unit(b)
        assert np.array_equal(A.mul(one, u), u)
        assert np.array_equal(A.mul(u, one), u)


def test_left_to_right_composition(field):
    A = linear_a(3, field)
    a0, a1 = A.arrow(0), A.arrow(1)
    assert not np.any(A.mul(a1, a0) != 0)
    assert np.any(A.mul(a0, a1) != 0)


def test_corner_dimensions(field):
    A = linear_a(3, field)
    # e_v A e_w is spanned by paths v -> w
    dims = [[len(A.corner[v][w]) for w in range(3)] for v in range(3)]
    assert dims == [[1, 1, 1], [0, 1, 1], [0, 0, 1]]


def test_relation_too_short():
    q = Quiver(2, ((0, 0, 1),))
    with pytest.raises(NonAdmissibleRelation):
        build_algebra(AlgebraSpec(q, (RelationSpec(((1, (0,)),)),), 2))


def test_relation_not_a_path():
    q = Quiver(3, ((0, 0, 1), (1, 1, 2)))
    with pytest.raises(NonAdmissibleRelation):
        build_algebra(AlgebraSpec(q, (RelationSpec(((1, (1, 0)),)),), 3))


def test_relation_mixed_endpoints():
    q = Quiver(2, ((0, 0, 1), (1, 1, 0)))
    rel = RelationSpec(((1, (0, 1)), (1, (1, 0))))
    with pytest.raises(NonAdmissibleRelation):
        build_algebra(AlgebraSpec(q, (rel,), 3))


def test_relation_beyond_bound_warns_but_is_honored(field):
    q = Quiver(3, ((0, 0, 1), (1, 1, 2)))
    with pytest.warns(InconsistentBound):
        A = build_algebra(AlgebraSpec(q, (RelationSpec(((1, (0, 1)),)),), 2, field))
    assert A.dim == 5


def test_path_cap():
    q = Quiver(1, ((0, 0, 0), (1, 0, 0)))
    with pytest.raises(PathExplosion):
        build_algebra(AlgebraSpec(q, (), 12), path_cap=100)


def test_mismatched_algebras_rejected():
    from tautilt.twoterm import Presentation, direct_sum
    f = Presentation.projective(linear_a(2), 0)
    g = Presentation.projective(linear_a(2), 0)
    with pytest.raises(AlgebraMismatch):
        direct_sum(f, g)
