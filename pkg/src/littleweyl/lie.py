"""Split real reductive Lie algebras from Cartan matrices.

A Chevalley basis is built for the semisimple part, an abelian center may be
appended, and all structure constants are exact integers.  The basis order is

    h_1 .. h_r,  z_1 .. z_c,  e_{b_1} .. e_{b_m},  f_{b_1} .. f_{b_m}

with the positive roots b_1 < ... < b_m sorted by height, then by coordinate
vector.  The Cartan subalgebra a is spanned by the h_i and z_j, so a-vectors
are the first r + c coordinates.

Structure constant signs follow the extraspecial pair convention: for each
non-simple positive root the decomposition with the smallest first summand
gets a positive constant, and all other constants are derived from the
standard bilinearity relations.  The Jacobi identity is verified on all basis
triples at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .linalg import (
    Mat,
    Subspace,
    Vec,
    dot,
    frac,
    identity,
    mat,
    mat_mul,
    mat_vec,
    rank,
    rref,
    solve,
    vec,
    vec_add,
    vec_scale,
    zero_vec,
)


class LieAlgebraError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Cartan matrices and root systems
# ---------------------------------------------------------------------------


def validate_cartan_matrix(a: Sequence[Sequence[int]]) -> list[int]:
    """Check that a is a generalized Cartan matrix of finite type.

    Returns the diagonal symmetrizer d (positive integers, gcd 1 per connected
    component) with d_i * a_ij symmetric.  Raises LieAlgebraError otherwise.
    """
    n = len(a)
    for i in range(n):
        if len(a[i]) != n:
            raise LieAlgebraError("Cartan matrix must be square")
        if a[i][i] != 2:
            raise LieAlgebraError(f"diagonal entry a[{i}][{i}] = {a[i][i]} != 2")
        for j in range(n):
            if int(a[i][j]) != a[i][j]:
                raise LieAlgebraError("Cartan matrix entries must be integers")
            if i != j:
                if a[i][j] > 0:
                    raise LieAlgebraError(f"off-diagonal entry a[{i}][{j}] > 0")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise LieAlgebraError(f"a[{i}][{j}] = 0 but a[{j}][{i}] != 0")
    # symmetrizer per connected component
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and a[i][j] != 0:
                    want = d[i] * Fraction(a[i][j], a[j][i])
                    if d[j] is None:
                        d[j] = want
                        stack.append(j)
                    elif d[j] != want:
                        raise LieAlgebraError("Cartan matrix is not symmetrizable")
    # scale to positive integers with gcd 1 per component
    denom_lcm = 1
    for x in d:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in d]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    # finite type iff the symmetrization is positive definite
    s = [[Fraction(ints[i] * a[i][j]) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        if _leading_minor(s, k) <= 0:
            raise LieAlgebraError(
                "Cartan matrix is not of finite type "
                f"(leading principal minor {k} is not positive)"
            )
    return ints


def _leading_minor(s: list[list[Fraction]], k: int) -> Fraction:
    m = [row[:k] for row in s[:k]]
    det = Fraction(1)
    for c in range(k):
        piv = None
        for r in range(c, k):
            if m[r][c] != 0:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, k):
            f = m[r][c] / m[c][c]
            m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


def positive_roots_of(a: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Positive roots in simple-root coordinates, by height then lexicographic."""
    n = len(a)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    frontier = list(simple)

    def pairing(beta, i):  # <beta, alpha_i^vee> = beta(h_i)
        return sum(a[i][j] * beta[j] for j in range(n))

    while frontier:
        new = []
        for beta in frontier:
            for i in range(n):
                p = 0
                cur = beta
                while True:
                    down = tuple(cur[j] - simple[i][j] for j in range(n))
                    if down in roots or all(x == 0 for x in down):
                        if all(x == 0 for x in down):
                            break
                        p += 1
                        cur = down
                    else:
                        break
                q = p - pairing(beta, i)
                if q >= 1:
                    up = tuple(beta[j] + simple[i][j] for j in range(n))
                    if up not in roots:
                        roots.add(up)
                        new.append(up)
        frontier = new
    # height first; ties broken so that earlier simple roots come first
    return sorted(roots, key=lambda r: (sum(r), tuple(-x for x in r)))


class _ChevalleyConstants:
    """Structure constants N(a, b) with [e_a, e_b] = N(a, b) e_{a+b}."""

    def __init__(self, cartan: Sequence[Sequence[int]], symmetrizer: Sequence[int]):
        self.a = cartan
        self.n = len(cartan)
        self.pos = positive_roots_of(cartan)
        self.index = {r: i for i, r in enumerate(self.pos)}
        self.all_roots = set(self.pos) | {tuple(-x for x in r) for r in self.pos}
        self.d = list(symmetrizer)
        self._memo: dict[tuple, Fraction] = {}
        self._special: dict[tuple, Fraction] = {}
        self._compute_special()

    def norm2(self, r: tuple[int, ...]) -> Fraction:
        s = Fraction(0)
        for i in range(self.n):
            for j in range(self.n):
                s += Fraction(self.d[i] * self.a[i][j]) * r[i] * r[j]
        return s

    def is_root(self, r) -> bool:
        return tuple(r) in self.all_roots

    def p_value(self, al, be) -> int:
        """Largest p with be - p*al a root."""
        p = 0
        cur = tuple(be)
        while True:
            cur = tuple(x - y for x, y in zip(cur, al))
            if cur in self.all_roots:
                p += 1
            else:
                return p

    def _compute_special(self):
        for gamma in self.pos:
            if sum(gamma) < 2:
                continue
            pairs = []
            for al in self.pos:
                be = tuple(g - x for g, x in zip(gamma, al))
                if be in self.index and self.index[al] < self.index[be]:
                    pairs.append((al, be))
            pairs.sort(key=lambda p: self.index[p[0]])
            a1, b1 = pairs[0]
            self._special[(a1, b1)] = Fraction(self.p_value(a1, b1) + 1)
            g2 = self.norm2(gamma)
            for al, be in pairs[1:]:
                t1 = Fraction(0)
                diff1 = tuple(x - y for x, y in zip(b1, al))
                if diff1 in self.all_roots:
                    t1 = (
                        self.N(b1, tuple(-x for x in al))
                        * self.N(a1, tuple(-x for x in be))
                        / self.norm2(diff1)
                    )
                t2 = Fraction(0)
                diff2 = tuple(x - y for x, y in zip(a1, al))
                if diff2 in self.all_roots:
                    t2 = (
                        self.N(tuple(-x for x in al), a1)
                        * self.N(b1, tuple(-x for x in be))
                        / self.norm2(diff2)
                    )
                val = g2 * (t1 + t2) / self._special[(a1, b1)]
                assert val.denominator == 1 and val != 0
                self._special[(al, be)] = val

    def N(self, mu, nu) -> Fraction:
        mu, nu = tuple(mu), tuple(nu)
        s = tuple(x + y for x, y in zip(mu, nu))
        if s not in self.all_roots:
            return Fraction(0)
        key = (mu, nu)
        if key in self._memo:
            return self._memo[key]
        mu_pos = mu in self.index
        nu_pos = nu in self.index
        if mu_pos and nu_pos:
            if self.index[mu] < self.index[nu]:
                val = self._special[(mu, nu)]
            else:
                val = -self.N(nu, mu)
        elif not mu_pos and not nu_pos:
            val = -self.N(tuple(-x for x in mu), tuple(-x for x in nu))
        elif mu_pos and not nu_pos:
            gamma = tuple(-x for x in s)
            if s in self.index:
                val = self.norm2(s) / self.norm2(mu) * self.N(nu, gamma)
            else:
                val = self.norm2(s) / self.norm2(nu) * self.N(gamma, mu)
        else:
            val = -self.N(nu, mu)
        self._memo[key] = val
        return val


# ---------------------------------------------------------------------------
# The Lie algebra container
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeylElement:
    """Element of N_G(a) given by a word in the simple reflections."""

    word: tuple[int, ...]
    action_on_a: Mat
    adjoint_lift: Mat


@dataclass(frozen=True)
class SignCharacter:
    """Sign assignment on the roots, multiplicative on sums."""

    label: tuple[int, ...]  # exponent vector of the lattice generators used
    values: tuple[int, ...]  # +-1 per positive root, chi(-b) = chi(b)

    def value(self, pos_index: int) -> int:
        return self.values[pos_index]

    def is_identity(self) -> bool:
        return all(v == 1 for v in self.values)


@dataclass(frozen=True)
class SignCharacterGroup:
    """Finite model of the adjoint action of M on the root spaces."""

    lattice: str
    generators: tuple[Vec, ...]
    elements: tuple[SignCharacter, ...]

    @property
    def order(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class LieAlgebraData:
    rank: int
    center_dim: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[tuple[int, ...], ...]
    basis_index: tuple[tuple, ...]
    structure: dict = field(hash=False, compare=False, repr=False)
    form_matrix: Mat = field(repr=False)
    theta_matrix: Mat = field(repr=False)
    weights: tuple[Vec, ...] = field(repr=False)  # a-functional per basis vector
    components: tuple[tuple[int, ...], ...] = ()

    # -- shape helpers ------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis_index)

    @property
    def dim_a(self) -> int:
        return self.rank + self.center_dim

    @property
    def num_pos(self) -> int:
        return len(self.positive_roots)

    def e_index(self, p: int) -> int:
        return self.dim_a + p

    def f_index(self, p: int) -> int:
        return self.dim_a + self.num_pos + p

    def root_index(self, root: Sequence[int]) -> int:
        root = tuple(root)
        for p, r in enumerate(self.positive_roots):
            if r == root:
                return p
        raise KeyError(f"not a positive root: {root}")

    def roots(self) -> list[tuple[int, ...]]:
        return list(self.positive_roots) + [
            tuple(-x for x in r) for r in self.positive_roots
        ]

    def root_functional(self, root: Sequence[int]) -> Vec:
        """The root as a functional on a (values on h_1..h_r, z_1..z_c)."""
        vals = [
            Fraction(sum(self.cartan_matrix[i][j] * root[j] for j in range(self.rank)))
            for i in range(self.rank)
        ]
        return tuple(vals) + zero_vec(self.center_dim)

    def root_norm2(self, root: Sequence[int]) -> Fraction:
        return sum(
            Fraction(self.symmetrizer[i] * self.cartan_matrix[i][j]) * root[i] * root[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def coroot(self, root: Sequence[int]) -> Vec:
        """Coroot as an a-vector (coordinates over h_1..h_r, zero on the center)."""
        n2 = self.root_norm2(root)
        coords = [
            Fraction(root[i]) * Fraction(2 * self.symmetrizer[i]) / n2
            for i in range(self.rank)
        ]
        for c in coords:
            if c.denominator != 1:
                raise LieAlgebraError("coroot is not integral")
        return tuple(coords) + zero_vec(self.center_dim)

    # -- bracket, form, involution -------------------------------------------

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        if i == j:
            return {}
        if i > j:
            return {k: -c for k, c in self.structure.get((j, i), {}).items()}
        return self.structure.get((i, j), {})

    def bracket(self, x: Sequence, y: Sequence) -> Vec:
        x, y = vec(x), vec(y)
        if len(x) != self.dim or len(y) != self.dim:
            raise LieAlgebraError("dimension mismatch in bracket")
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                for k, c in self.bracket_basis(i, j).items():
                    out[k] += xi * yj * c
        return tuple(out)

    def invariant_form(self, x: Sequence, y: Sequence) -> Fraction:
        return dot(mat_vec(self.form_matrix, vec(y)), vec(x))

    def theta(self, x: Sequence) -> Vec:
        return mat_vec(self.theta_matrix, vec(x))

    def ad(self, x: Sequence) -> Mat:
        cols = [self.bracket(x, e) for e in identity(self.dim)]
        return tuple(zip(*cols))

    def exp_ad(self, x: Sequence) -> Mat:
        """exp(ad x) for ad-nilpotent x, as an exact finite sum."""
        a = self.ad(x)
        out = identity(self.dim)
        term = identity(self.dim)
        k = 0
        while any(any(c != 0 for c in row) for row in term):
            k += 1
            if k > self.dim + 1:
                raise LieAlgebraError("exp_ad requires an ad-nilpotent argument")
            term = mat_mul(term, a)
            term = tuple(tuple(c / k for c in row) for row in term)
            out = tuple(
                tuple(o + t for o, t in zip(orow, trow))
                for orow, trow in zip(out, term)
            )
        return out

    def torus_ad(self, coweight: Sequence, scale) -> Mat:
        """Ad of the torus element scale^coweight; exact for rational scale.

        The coweight must pair integrally with every root.
        """
        coweight = vec(coweight)
        if len(coweight) != self.dim_a:
            raise LieAlgebraError("coweight must be an a-vector")
        scale = frac(scale)
        if scale == 0:
            raise LieAlgebraError("torus scale must be nonzero")
        diag = []
        for w in self.weights:
            k = dot(w, coweight)
            if k.denominator != 1:
                raise LieAlgebraError("coweight does not pair integrally with the roots")
            diag.append(scale ** int(k))
        return tuple(
            tuple(diag[i] if i == j else Fraction(0) for j in range(self.dim))
            for i in range(self.dim)
        )

    def sign_character_ad(self, chi: SignCharacter) -> Mat:
        diag = [Fraction(1)] * self.dim
        for p in range(self.num_pos):
            diag[self.e_index(p)] = Fraction(chi.value(p))
            diag[self.f_index(p)] = Fraction(chi.value(p))
        return tuple(
            tuple(diag[i] if i == j else Fraction(0) for j in range(self.dim))
            for i in range(self.dim)
        )

    # -- distinguished subspaces ---------------------------------------------

    def a_indices(self) -> list[int]:
        return list(range(self.dim_a))

    def a_subspace(self) -> Subspace:
        return Subspace.from_coordinates(self.dim, self.a_indices())

    def n_subspace(self) -> Subspace:
        return Subspace.from_coordinates(
            self.dim, [self.e_index(p) for p in range(self.num_pos)]
        )

    def nbar_subspace(self) -> Subspace:
        return Subspace.from_coordinates(
            self.dim, [self.f_index(p) for p in range(self.num_pos)]
        )

    def p_subspace(self) -> Subspace:
        """Minimal parabolic subalgebra a + n (m = 0 for split forms)."""
        return Subspace.from_coordinates(
            self.dim,
            self.a_indices() + [self.e_index(p) for p in range(self.num_pos)],
        )

    def a_vector_to_g(self, x: Sequence) -> Vec:
        x = vec(x)
        return x + zero_vec(self.dim - self.dim_a)

    def g_vector_to_a(self, x: Sequence) -> Vec:
        return vec(x)[: self.dim_a]

    def orthocomplement(self, e: Subspace) -> Subspace:
        """B-orthogonal complement in g."""
        if e.dim == 0:
            return Subspace.full(self.dim)
        from .linalg import kernel

        eqs = [mat_vec(self.form_matrix, row) for row in e.basis_matrix]
        return Subspace(self.dim, kernel(eqs, self.dim))

    def centralizer_in_g(self, v: Subspace) -> Subspace:
        """Z_g(V) = m + a + sum of the root spaces vanishing on V, for V in a."""
        if not self.a_subspace().contains(v):
            raise LieAlgebraError("centralizer_in_g requires a subspace of a")
        idx = self.a_indices()
        a_rows = [self.g_vector_to_a(row) for row in v.basis_matrix]
        for p, root in enumerate(self.positive_roots):
            f = self.root_functional(root)
            if all(dot(f, row) == 0 for row in a_rows):
                idx += [self.e_index(p), self.f_index(p)]
        return Subspace.from_coordinates(self.dim, idx)

    def is_subalgebra(self, e: Subspace) -> bool:
        for i in range(e.dim):
            for j in range(i + 1, e.dim):
                if not e.contains_vector(
                    self.bracket(e.basis_matrix[i], e.basis_matrix[j])
                ):
                    return False
        return True

    # -- Weyl group ----------------------------------------------------------

    def simple_reflection_on_a(self, i: int) -> Mat:
        cols = []
        cor = self.coroot(tuple(1 if j == i else 0 for j in range(self.rank)))
        alpha_i = self.root_functional(tuple(1 if j == i else 0 for j in range(self.rank)))
        for k in range(self.dim_a):
            ek = tuple(Fraction(1 if c == k else 0) for c in range(self.dim_a))
            cols.append(vec_add(ek, vec_scale(-dot(alpha_i, ek), cor)))
        return tuple(zip(*cols))

    def weyl_lift(self, word: Sequence[int]) -> WeylElement:
        """Lift of a Weyl word through products exp(ad e) exp(-ad f) exp(ad e)."""
        act = identity(self.dim_a)
        lift = identity(self.dim)
        for i in word:
            p = self.root_index(tuple(1 if j == i else 0 for j in range(self.rank)))
            e_vec = tuple(
                Fraction(1 if k == self.e_index(p) else 0) for k in range(self.dim)
            )
            f_vec = tuple(
                Fraction(1 if k == self.f_index(p) else 0) for k in range(self.dim)
            )
            n_i = mat_mul(
                mat_mul(self.exp_ad(e_vec), self.exp_ad(vec_scale(-1, f_vec))),
                self.exp_ad(e_vec),
            )
            act = mat_mul(act, self.simple_reflection_on_a(i))
            lift = mat_mul(lift, n_i)
        return WeylElement(tuple(word), act, lift)

    def weyl_group_on_a(self) -> list[tuple[tuple[int, ...], Mat]]:
        """All Weyl group elements as (shortest word, matrix on a), BFS order."""
        gens = [self.simple_reflection_on_a(i) for i in range(self.rank)]
        seen = {identity(self.dim_a): ()}
        frontier = [((), identity(self.dim_a))]
        out = [((), identity(self.dim_a))]
        while frontier:
            new = []
            for word, m in frontier:
                for i, g in enumerate(gens):
                    m2 = mat_mul(m, g)
                    if m2 not in seen:
                        w2 = word + (i,)
                        seen[m2] = w2
                        new.append((w2, m2))
                        out.append((w2, m2))
            new.sort(key=lambda t: t[0])
            frontier = new
        return out

    # -- sign characters -------------------------------------------------------

    def m_sign_characters(self, lattice: str = "coroot") -> SignCharacterGroup:
        """Sign characters chi_t(beta) = (-1)^{beta(t)} over the chosen lattice."""
        if lattice == "coroot":
            gens = [
                self.coroot(tuple(1 if j == i else 0 for j in range(self.rank)))
                for i in range(self.rank)
            ]
        elif lattice == "coweight":
            gens = self._fundamental_coweights()
        else:
            raise LieAlgebraError(f"unknown lattice {lattice!r}")
        chars: dict[tuple[int, ...], SignCharacter] = {}
        for mask in range(1 << len(gens)):
            t = zero_vec(self.dim_a)
            label = tuple((mask >> i) & 1 for i in range(len(gens)))
            for i, g in enumerate(gens):
                if label[i]:
                    t = vec_add(t, g)
            vals = []
            for root in self.positive_roots:
                k = dot(self.root_functional(root), t)
                assert k.denominator == 1
                vals.append(-1 if int(k) % 2 else 1)
            key = tuple(vals)
            if key not in chars:
                chars[key] = SignCharacter(label, key)
        elements = tuple(sorted(chars.values(), key=lambda c: c.values, reverse=True))
        return SignCharacterGroup(lattice, tuple(gens), elements)

    def _fundamental_coweights(self) -> list[Vec]:
        out = []
        for i in range(self.rank):
            rows = []
            rhs = []
            for j in range(self.rank):
                rows.append(
                    tuple(
                        Fraction(self.cartan_matrix[k][j]) if k < self.rank else Fraction(0)
                        for k in range(self.dim_a)
                    )
                )
                rhs.append(Fraction(1 if j == i else 0))
            for z in range(self.center_dim):
                row = [Fraction(0)] * self.dim_a
                row[self.rank + z] = Fraction(1)
                rows.append(tuple(row))
                rhs.append(Fraction(0))
            sol = solve(rows, rhs)
            assert sol is not None
            out.append(sol)
        return out

    def rho_q(self, sigma_q: Iterable[int]) -> Vec:
        """Half sum of the given positive roots, as an a-functional."""
        out = zero_vec(self.dim_a)
        for p in sigma_q:
            out = vec_add(out, self.root_functional(self.positive_roots[p]))
        return vec_scale(Fraction(1, 2), out)

    # -- validation ------------------------------------------------------------

    def validate(self) -> None:
        dim = self.dim
        basis = identity(dim)
        # Jacobi identity on all basis triples
        for i in range(dim):
            for j in range(i + 1, dim):
                bij = self.bracket(basis[i], basis[j])
                for k in range(j + 1, dim):
                    s = self.bracket(bij, basis[k])
                    s = vec_add(s, self.bracket(self.bracket(basis[j], basis[k]), basis[i]))
                    s = vec_add(s, self.bracket(self.bracket(basis[k], basis[i]), basis[j]))
                    if any(x != 0 for x in s):
                        raise LieAlgebraError(f"Jacobi identity fails on triple {(i, j, k)}")
        # invariance of the form and symmetry
        for i in range(dim):
            for j in range(dim):
                if self.form_matrix[i][j] != self.form_matrix[j][i]:
                    raise LieAlgebraError("form is not symmetric")
        # theta is an involutive automorphism with -B(x, theta x) > 0
        th = self.theta_matrix
        if mat_mul(th, th) != identity(dim):
            raise LieAlgebraError("theta is not an involution")
        gram = [
            [-self.invariant_form(basis[i], self.theta(basis[j])) for j in range(dim)]
            for i in range(dim)
        ]
        for k in range(1, dim + 1):
            if _leading_minor([row[:] for row in gram], k) <= 0:
                raise LieAlgebraError("-B(., theta .) is not positive definite")


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def build_from_cartan(
    cartan_matrix: Sequence[Sequence[int]], abelian_center_dim: int = 0
) -> LieAlgebraData:
    """Split reductive Lie algebra with the given Cartan matrix and center."""
    key = (tuple(tuple(int(x) for x in row) for row in cartan_matrix), abelian_center_dim)
    return _build_cached(key)


@lru_cache(maxsize=None)
def _build_cached(key) -> LieAlgebraData:
    cartan_matrix, abelian_center_dim = key
    a = [list(row) for row in cartan_matrix]
    n = len(a)
    if abelian_center_dim < 0:
        raise LieAlgebraError("center dimension must be nonnegative")
    d = validate_cartan_matrix(a) if n else []
    cc = _ChevalleyConstants(a, d) if n else None
    pos = cc.pos if cc else []
    m = len(pos)
    dim_a = n + abelian_center_dim
    dim = dim_a + 2 * m

    basis_index: list[tuple] = [("h", i) for i in range(n)]
    basis_index += [("z", i) for i in range(abelian_center_dim)]
    basis_index += [("e", p) for p in range(m)]
    basis_index += [("f", p) for p in range(m)]

    def e_idx(p):
        return dim_a + p

    def f_idx(p):
        return dim_a + m + p

    def signed_index(root):
        if root in cc.index:
            return e_idx(cc.index[root])
        neg = tuple(-x for x in root)
        return f_idx(cc.index[neg])

    structure: dict[tuple[int, int], dict[int, Fraction]] = {}

    def put(i, j, comp: dict[int, Fraction]):
        comp = {k: c for k, c in comp.items() if c != 0}
        if not comp:
            return
        if i > j:
            i, j = j, i
            comp = {k: -c for k, c in comp.items()}
        structure[(i, j)] = comp

    def root_of_basis(k):
        tag, p = basis_index[k]
        if tag == "e":
            return pos[p]
        if tag == "f":
            return tuple(-x for x in pos[p])
        return None

    def pairing(root, i):  # root(h_i)
        return sum(a[i][j] * root[j] for j in range(n))

    # [h_i, e/f]
    for i in range(n):
        for k in range(dim_a, dim):
            root = root_of_basis(k)
            c = pairing(root, i)
            if c:
                put(i, k, {k: Fraction(c)})
    # root vector brackets
    for ki in range(dim_a, dim):
        for kj in range(ki + 1, dim):
            mu = root_of_basis(ki)
            nu = root_of_basis(kj)
            s = tuple(x + y for x, y in zip(mu, nu))
            if all(x == 0 for x in s):
                # [e_b, f_b] = coroot of b
                b = mu if mu in cc.index else nu
                sign = 1 if mu in cc.index else -1
                n2 = cc.norm2(b)
                comp = {}
                for i in range(n):
                    ci = Fraction(b[i] * 2 * d[i]) / n2
                    assert ci.denominator == 1
                    if ci:
                        comp[i] = Fraction(sign) * ci
                put(ki, kj, comp)
            elif cc.is_root(s):
                put(ki, kj, {signed_index(s): cc.N(mu, nu)})

    # weights
    weights: list[Vec] = []
    for k in range(dim):
        root = root_of_basis(k)
        if root is None:
            weights.append(zero_vec(dim_a))
        else:
            vals = [Fraction(pairing(root, i)) for i in range(n)]
            weights.append(tuple(vals) + zero_vec(abelian_center_dim))

    data = LieAlgebraData(
        rank=n,
        center_dim=abelian_center_dim,
        cartan_matrix=tuple(tuple(row) for row in a),
        symmetrizer=tuple(d),
        positive_roots=tuple(pos),
        basis_index=tuple(basis_index),
        structure=structure,
        form_matrix=(),
        theta_matrix=(),
        weights=tuple(weights),
        components=_components(a),
    )

    # Killing form on the semisimple part, identity pairing on the center
    ads = [data.ad(e) for e in identity(dim)]
    form = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(i, dim):
            t = sum((dot(ads[i][r], tuple(row[r] for row in ads[j])) for r in range(dim)), Fraction(0))
            form[i][j] = form[j][i] = t
    for z in range(abelian_center_dim):
        form[n + z][n + z] = Fraction(1)

    theta = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(dim_a):
        theta[i][i] = Fraction(-1)
    for p in range(m):
        theta[f_idx(p)][e_idx(p)] = Fraction(-1)
        theta[e_idx(p)][f_idx(p)] = Fraction(-1)

    object.__setattr__(data, "form_matrix", tuple(tuple(r) for r in form))
    object.__setattr__(data, "theta_matrix", tuple(tuple(r) for r in theta))
    data.validate()
    return data


def _components(a: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    n = len(a)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and a[i][j] != 0:
                    seen[j] = True
                    stack.append(j)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


# ---------------------------------------------------------------------------
# Named Cartan types
# ---------------------------------------------------------------------------


def cartan_matrix_of_type(name: str) -> list[list[int]]:
    """Cartan matrix for names like "A2", "B3", "G2" or products "A1xA1"."""
    blocks = [_simple_type_matrix(part.strip()) for part in name.split("x")]
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(len(b)):
            for j in range(len(b)):
                out[off + i][off + j] = b[i][j]
        off += len(b)
    return out


def _simple_type_matrix(name: str) -> list[list[int]]:
    if len(name) < 2 or name[0] not in "ABCDEFG":
        raise LieAlgebraError(f"unknown Cartan type {name!r}")
    letter, rank_s = name[0], name[1:]
    if not rank_s.isdigit():
        raise LieAlgebraError(f"unknown Cartan type {name!r}")
    r = int(rank_s)
    if r < 1:
        raise LieAlgebraError(f"unknown Cartan type {name!r}")

    def chain(n):
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = 2
            if i + 1 < n:
                m[i][i + 1] = -1
                m[i + 1][i] = -1
        return m

    if letter == "A":
        return chain(r)
    if letter == "B" and r >= 2:
        m = chain(r)
        m[r - 1][r - 2] = -2
        return m
    if letter == "C" and r >= 2:
        m = chain(r)
        m[r - 2][r - 1] = -2
        return m
    if letter == "D" and r >= 3:
        m = chain(r - 1)
        for row in m:
            row.append(0)
        m.append([0] * r)
        m[r - 1][r - 1] = 2
        m[r - 1][r - 3] = -1
        m[r - 3][r - 1] = -1
        return m
    if letter == "E" and r in (6, 7, 8):
        m = chain(r - 1)
        for row in m:
            row.append(0)
        m.append([0] * r)
        m[r - 1][r - 1] = 2
        m[r - 1][2] = -1
        m[2][r - 1] = -1
        return m
    if letter == "F" and r == 4:
        m = chain(4)
        m[2][1] = -2
        m[1][2] = -1
        return m
    if letter == "G" and r == 2:
        return [[2, -1], [-3, 2]]
    raise LieAlgebraError(f"unknown Cartan type {name!r}")
