import random
from fractions import Fraction

from littleweyl.limits import (
    float_flow_oracle,
    graded_direction,
    is_order_regular,
    limit_subspace,
    order_regular_hyperplanes,
)
from littleweyl.linalg import Subspace, identity, vec
from littleweyl.spherical import order_regular_chambers
from littleweyl.verify import limit_oracle_suite, random_order_regular, random_subspace

H, E, F = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def span(dim, *rows):
    return Subspace.from_spanning(dim, rows)


def test_graded_direction_partitions_basis(a1):
    gd = graded_direction(a1, (1,))
    assert gd.eigenvalues == (Fraction(-2), Fraction(0), Fraction(2))
    assert sorted(i for idx in gd.eigenspace_indices for i in idx) == [0, 1, 2]


def test_eigenline_is_fixed(a1):
    e = span(3, F)
    for x in ((1,), (-3,), (Fraction(1, 2),)):
        assert limit_subspace(a1, e, x) == e


def test_equal_weight_line_is_fixed_but_not_a_stable(a2):
    # alpha_1(X) = alpha_2(X) for X = coroot sum; the line e1 + e2 is then an
    # eigenline, so the limit is the line itself although it is not a-stable
    x = tuple(a + b for a, b in zip(a2.coroot((1, 0)), a2.coroot((0, 1))))
    f1 = a2.root_functional((1, 0))
    f2 = a2.root_functional((0, 1))
    assert sum(a * b for a, b in zip(f1, x)) == sum(a * b for a, b in zip(f2, x)) != 0
    rows = [[0] * 8]
    rows[0][a2.e_index(0)] = 1
    rows[0][a2.e_index(1)] = 1
    e = span(8, tuple(rows[0]))
    assert limit_subspace(a2, e, x) == e
    h1 = identity(8)[0]
    assert not e.contains_vector(a2.bracket(h1, e.basis_matrix[0]))


def test_sl2_generic_line_limits_to_top_weight(a1):
    e = span(3, (0, 1, 1))  # e + f
    lim = limit_subspace(a1, e, (1,))
    assert lim == span(3, E)
    report = float_flow_oracle(a1, e, (1,), t_max=20.0)
    assert report.converged and report.distance < 1e-8


def test_order_regular(a1, a2):
    assert is_order_regular(a1, (1,))
    assert not is_order_regular(a1, (0,))
    x = tuple(a + b for a, b in zip(a2.coroot((1, 0)), a2.coroot((0, 1))))
    assert not is_order_regular(a2, x)  # alpha_1 and alpha_2 agree there


def test_float_flow_trivial_cases(a1):
    e = span(3, F)
    assert float_flow_oracle(a1, e, (1,)).distance < 1e-12
    r = float_flow_oracle(a1, e, (0,))
    assert r.distance < 1e-12  # zero direction flows by the identity


def test_float_flow_flags_small_gaps(a2):
    x = tuple(a + b for a, b in zip(a2.coroot((1, 0)), a2.coroot((0, 1))))
    rows = [[0] * 8]
    rows[0][a2.e_index(0)] = 1
    rows[0][a2.e_index(1)] = 1
    r = float_flow_oracle(a2, span(8, tuple(rows[0])), x, tol=1e-9)
    assert r.converged  # equal eigenvalues merge into one level
    x2 = tuple(
        a + Fraction(1, 10**9) * b
        for a, b in zip(vec(x), vec(a2.coroot((1, 0))))
    )
    r2 = float_flow_oracle(a2, span(8, tuple(rows[0])), x2, tol=1e-3)
    assert not r2.converged


def test_dimension_preserved_random(a2):
    rng = random.Random(5)
    for _ in range(25):
        e = random_subspace(a2, rng, rng.randint(1, 4))
        x = random_order_regular(a2, rng)
        assert limit_subspace(a2, e, x).dim == e.dim


def test_subalgebra_closure(a2, so3_subalgebra):
    rng = random.Random(9)
    for _ in range(10):
        x = random_order_regular(a2, rng)
        lim = limit_subspace(a2, so3_subalgebra, x)
        assert a2.is_subalgebra(lim)


def test_a_stability_for_order_regular(a2):
    rng = random.Random(13)
    basis = identity(8)
    for _ in range(10):
        e = random_subspace(a2, rng, 3)
        x = random_order_regular(a2, rng)
        lim = limit_subspace(a2, e, x)
        for k in range(a2.dim_a):
            for b in lim.basis_matrix:
                assert lim.contains_vector(a2.bracket(basis[k], b))


def test_chamber_constancy_including_boundary(a2):
    rng = random.Random(17)
    chambers = order_regular_chambers(a2)
    for _ in range(6):
        e = random_subspace(a2, rng, 2)
        x = random_order_regular(a2, rng)
        ch = chambers.chamber_of(x)
        # same chamber, same limit
        assert limit_subspace(a2, e, x) == limit_subspace(a2, e, ch.representative)
        # X in the closure of the chamber, Y inside: (E_X)_Y = E_Y
        for facet in ch.cone._facet_inequalities():
            face = ch.cone.intersect(
                type(ch.cone).from_inequalities(2, [facet, tuple(-c for c in facet)])
            )
            x_bd = face.relative_interior_point()
            lim_bd = limit_subspace(a2, e, x_bd)
            assert limit_subspace(a2, lim_bd, x) == limit_subspace(a2, e, x)


def test_conjugation_compatibility(a2):
    # exp(tX) exp(n) exp(-tX) converges when n has nonpositive X-weights;
    # the limit is exp of the weight-zero part of n
    rng = random.Random(21)
    for _ in range(6):
        x = random_order_regular(a2, rng)
        e = random_subspace(a2, rng, 2)
        neg = [
            p
            for p in range(a2.num_pos)
            if sum(
                a * b
                for a, b in zip(a2.root_functional(a2.positive_roots[p]), x)
            )
            < 0
        ]
        if not neg:
            continue
        n = [Fraction(0)] * 8
        n[a2.e_index(neg[0])] = Fraction(rng.randint(1, 2))
        n = tuple(n)
        moved = e.transform(a2.exp_ad(n))
        # all chosen weights are strictly negative, so the conjugation limit is e
        assert limit_subspace(a2, moved, x) == limit_subspace(a2, e, x)
    # weight-zero part survives: X = (2, 1) kills alpha_2 and nothing else,
    # so for n with components at alpha_2 (weight 0) and -alpha_1-alpha_2
    # (weight -3) the conjugates converge to exp of the alpha_2 part
    x = (Fraction(2), Fraction(1))
    assert sum(a * b for a, b in zip(a2.root_functional((0, 1)), x)) == 0
    p2 = a2.root_index((0, 1))
    p12 = a2.root_index((1, 1))
    n = [Fraction(0)] * 8
    n[a2.e_index(p2)] = Fraction(1)
    n[a2.f_index(p12)] = Fraction(1)
    n = tuple(n)
    n0 = [Fraction(0)] * 8
    n0[a2.e_index(p2)] = Fraction(1)
    n0 = tuple(n0)
    e = a2.nbar_subspace().add(a2.a_subspace())
    lhs = limit_subspace(a2, e.transform(a2.exp_ad(n)), x)
    rhs = limit_subspace(a2, e, x).transform(a2.exp_ad(n0))
    assert lhs == rhs


def test_order_regular_hyperplane_count(a2):
    hyps = order_regular_hyperplanes(a2)
    assert len(set(hyps)) == 6  # three roots, their sums/differences, dedup


def test_oracle_suite_rank_two(a2):
    results = limit_oracle_suite(a2, count=30, seed=1)
    assert all(r.ok for r in results), [r for r in results if not r.ok]
