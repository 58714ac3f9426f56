from fractions import Fraction

from littleweyl.linalg import Subspace, identity, mat_mul, mat_vec, vec
from littleweyl.spherical import analyze, boundary_degeneration, compression_cone
from littleweyl.weyl import (
    QuotientSpace,
    coxeter_type_label,
    induced_form,
    limits_agree_with_walls,
    little_weyl_group,
    spherical_roots,
    wall_reflection,
    weyl_from_limits,
)


def span(dim, *rows):
    return Subspace.from_spanning(dim, rows)


# ---------------------------------------------------------------------------
# wall reflections
# ---------------------------------------------------------------------------


def test_wall_reflection_so2(a1, sl2_subalgebras):
    an = analyze(a1, sl2_subalgebras["so2"])
    wall = compression_cone(an).walls()[0]
    gen = wall_reflection(an, wall)
    assert gen.witness == ("root", (2,))  # the weight is twice the root
    assert gen.matrix_on_a == ((Fraction(-1),),)


def test_wall_reflection_orthogonal_pair(a1xa1, twisted_diagonal):
    an = analyze(a1xa1, twisted_diagonal)
    wall = compression_cone(an).walls()[0]
    gen = wall_reflection(an, wall)
    kind, beta, gamma, witness = gen.witness
    assert kind == "pair"
    assert beta == (1, 0) and gamma == (0, 1)
    # the three conditions: beta simple, beta orthogonal to gamma, and the
    # coroot span meets a_h
    assert sum(beta) == 1
    assert sum(
        a1xa1.symmetrizer[i] * a1xa1.cartan_matrix[i][j] * beta[i] * gamma[j]
        for i in range(2)
        for j in range(2)
    ) == 0
    assert witness == vec((1, -1))
    assert an.a_h.contains_vector(witness)
    # acts as -1 on a/a_h and fixes the wall
    assert gen.matrix_on_quotient == ((Fraction(-1),),)


def test_wall_reflections_so3(a2, so3_subalgebra):
    an = analyze(a2, so3_subalgebra)
    cone = compression_cone(an)
    gens = [wall_reflection(an, w) for w in cone.walls()]
    weights = sorted(g.weight.coords for g in gens)
    assert weights == [(0, 2), (2, 0)]
    for g in gens:
        # reflections in the simple roots alpha_2 and alpha_1
        root = tuple(c // 2 for c in g.weight.coords)
        cor = a2.coroot(root)
        f = a2.root_functional(root)
        for e in identity(2):
            expect = tuple(
                x - sum(a * b for a, b in zip(f, e)) * c for x, c in zip(e, cor)
            )
            assert mat_vec(g.matrix_on_a, e) == expect


# ---------------------------------------------------------------------------
# the group
# ---------------------------------------------------------------------------


def test_group_orders_and_types(a1, a1xa1, a2, sl2_subalgebras, twisted_diagonal, so3_subalgebra, a2_nbar):
    cases = [
        (a1, sl2_subalgebras["nbar"], 1, "trivial"),
        (a1, sl2_subalgebras["so2"], 2, "A1"),
        (a1, sl2_subalgebras["so11"], 2, "A1"),
        (a1xa1, twisted_diagonal, 2, "A1"),
        (a2, so3_subalgebra, 6, "A2"),
        (a2, a2_nbar, 1, "trivial"),
    ]
    for lie, h, order, label in cases:
        g = little_weyl_group(analyze(lie, h))
        assert g.order == order
        assert g.type_label == label


def test_group_axioms_so3(a2, so3_subalgebra):
    g = little_weyl_group(analyze(a2, so3_subalgebra))
    elems = set(g.elements)
    for m1 in elems:
        for m2 in elems:
            assert mat_mul(m1, m2) in elems
    ident = identity(g.quotient.dim)
    for m in elems:
        assert any(mat_mul(m, m2) == ident for m2 in elems)


def test_elements_are_isometries(a2, so3_subalgebra):
    an = analyze(a2, so3_subalgebra)
    g = little_weyl_group(an)
    form = induced_form(a2, g.quotient)
    for m in g.elements:
        mt = tuple(zip(*m))
        assert mat_mul(mat_mul(mt, form), m) == form


def test_edge_stability_group_case(a1xa1, twisted_diagonal):
    an = analyze(a1xa1, twisted_diagonal)
    g = little_weyl_group(an)
    edge = compression_cone(an).edge()
    for m in g.elements:
        moved = [
            g.quotient.lift(mat_vec(m, g.quotient.project(r)))
            for r in edge.basis_matrix
        ]
        assert Subspace.from_spanning(2, moved + list(an.a_h.basis_matrix)).contains(
            edge
        )


def test_coxeter_orders(a2, so3_subalgebra):
    g = little_weyl_group(analyze(a2, so3_subalgebra))
    assert g.coxeter_orders == ((1, 3), (3, 1))
    assert all(m in (1, 2, 3, 4, 6) for row in g.coxeter_orders for m in row)


def test_coset_labels_so3(a2, so3_subalgebra):
    g = little_weyl_group(analyze(a2, so3_subalgebra))
    assert sorted(g.coset_labels) == ["e", "s1", "s1*s2", "s1*s2*s1", "s2", "s2*s1"]


# ---------------------------------------------------------------------------
# the group from limits
# ---------------------------------------------------------------------------


def test_limit_cosets_nbar(a1, sl2_subalgebras):
    rep = weyl_from_limits(analyze(a1, sl2_subalgebras["nbar"]))
    assert rep.labels == ("e",)
    assert all(r.coset_label == "e" for r in rep.chambers)


def test_limit_cosets_so2(a1, sl2_subalgebras):
    rep = weyl_from_limits(analyze(a1, sl2_subalgebras["so2"]))
    assert rep.labels == ("e", "s1")
    per_chamber = {r.signs: r.coset_label for r in rep.chambers}
    assert per_chamber[(-1,)] == "e" and per_chamber[(1,)] == "s1"


def test_limit_cosets_twisted_diagonal(a1xa1, twisted_diagonal):
    rep = weyl_from_limits(analyze(a1xa1, twisted_diagonal))
    assert rep.labels == ("e", "s1*s2")


def test_agreement_everywhere(
    a1, a1xa1, a2, sl2_subalgebras, twisted_diagonal, so3_subalgebra, a2_nbar
):
    cases = [
        (a1, sl2_subalgebras["nbar"]),
        (a1, sl2_subalgebras["so2"]),
        (a1, sl2_subalgebras["so11"]),
        (a1xa1, twisted_diagonal),
        (a2, so3_subalgebra),
        (a2, a2_nbar),
    ]
    for lie, h in cases:
        an = analyze(lie, h)
        group = little_weyl_group(an)
        rep = weyl_from_limits(an)
        assert limits_agree_with_walls(an, group, rep)


def test_degeneration_wall_groups_have_order_two(a2, so3_subalgebra):
    an = analyze(a2, so3_subalgebra)
    group = little_weyl_group(an)
    cone = compression_cone(an)
    for wall, gen in zip(cone.walls(), group.generators):
        deg = boundary_degeneration(an, wall)
        sub = little_weyl_group(analyze(a2, deg.h_zf))
        assert sub.order == 2
        nontrivial = [m for m in sub.elements if m != identity(sub.quotient.dim)]
        assert nontrivial == [gen.matrix_on_quotient]


# ---------------------------------------------------------------------------
# spherical roots
# ---------------------------------------------------------------------------


def test_spherical_roots_trivial(a1, sl2_subalgebras):
    an = analyze(a1, sl2_subalgebras["nbar"])
    sr = spherical_roots(an, little_weyl_group(an))
    assert sr.roots == ()


def test_spherical_roots_so2_primitive(a1, sl2_subalgebras):
    an = analyze(a1, sl2_subalgebras["so2"])
    sr = spherical_roots(an, little_weyl_group(an))
    # S_z is {2 alpha} but the primitive lattice elements are +-alpha
    assert sr.roots == ((-1,), (1,))
    assert sr.lattice_basis == ((1,),)


def test_spherical_roots_group_case(a1xa1, twisted_diagonal):
    an = analyze(a1xa1, twisted_diagonal)
    sr = spherical_roots(an, little_weyl_group(an))
    assert sr.roots == ((-1, -1), (1, 1))
    assert sr.lattice_basis in (((1, 1),), ((-1, -1),))


def test_spherical_roots_so3_full_a2(a2, so3_subalgebra):
    an = analyze(a2, so3_subalgebra)
    sr = spherical_roots(an, little_weyl_group(an))
    assert set(sr.roots) == {
        (1, 0), (0, 1), (1, 1), (-1, 0), (0, -1), (-1, -1)
    }
    for r in sr.roots:
        assert tuple(-x for x in r) in sr.roots


def test_coxeter_type_labels():
    assert coxeter_type_label(()) == "trivial"
    assert coxeter_type_label(((1,),)) == "A1"
    assert coxeter_type_label(((1, 2), (2, 1))) == "A1 x A1"
    assert coxeter_type_label(((1, 3), (3, 1))) == "A2"
    assert coxeter_type_label(((1, 4), (4, 1))) == "B2"
    assert coxeter_type_label(((1, 6), (6, 1))) == "G2"
    assert (
        coxeter_type_label(((1, 3, 2), (3, 1, 3), (2, 3, 1))) == "A3"
    )


def test_quotient_space_roundtrip(a1xa1, twisted_diagonal):
    an = analyze(a1xa1, twisted_diagonal)
    q = QuotientSpace.of(an.a_h)
    assert q.dim == 1
    v = (Fraction(3), Fraction(1))
    assert q.project(q.lift(q.project(v))) == q.project(v)
    # projecting a_h gives zero
    assert q.project(an.a_h.basis_matrix[0]) == (Fraction(0),)
