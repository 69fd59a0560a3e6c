"""Matrix presentations of Soergel-type bimodules and their morphisms.

A bimodule is presented as a free left module of finite rank over the
polynomial ring, with the right multiplication by each variable recorded as a
matrix in the chosen left basis.  Matrices act on coordinate columns:
``column l`` of ``right_action(j)`` holds the coordinates of
``basis[l] * X_j``, so the entry in row ``k``, column ``l`` is homogeneous of
degree ``deg[l] + 2 - deg[k]``.

The two building blocks are the twisted bimodule ``R_w`` (rank one, right
action through the word ``w``) and ``B_t`` for a reflection ``t`` (rank two
with basis ``{1 (x) 1, 1 (x) root}``, right action computed by Demazure
decomposition).  Tensor products stay free with the structured Kronecker
action, so every morphism question is finite-dimensional linear algebra over
Q(sqrt2).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from . import coxeter, linalg
from .coxeter import Reflection, demazure_decompose, make_reflection
from .polyring import Poly, format_poly, monomial_exponents
from .scalars import ONE, QSqrt2

Matrix = list  # list of rows of Poly


@lru_cache(maxsize=None)
def _zero(n: int) -> Poly:
    return Poly.zero(n)


@lru_cache(maxsize=None)
def _one(n: int) -> Poly:
    return Poly.one(n)


# -- polynomial matrices --------------------------------------------------------


def mat_zero(rows: int, cols: int, n: int) -> Matrix:
    z = _zero(n)
    return [[z] * cols for _ in range(rows)]


def mat_identity(rank: int, n: int) -> Matrix:
    z, o = _zero(n), _one(n)
    return [[o if i == j else z for j in range(rank)] for i in range(rank)]


def mat_mul(a: Matrix, b: Matrix, n: int) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[_zero(n)] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            aik = ai[k]
            if not aik:
                continue
            bk = b[k]
            for j in range(cols):
                if bk[j]:
                    oi[j] = oi[j] + aik * bk[j]
    return out


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c) -> Matrix:
    return [[x.scale(c) if x else x for x in row] for row in a]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def mat_vec(a: Matrix, v: Sequence[Poly], n: int) -> list:
    out = []
    for row in a:
        acc = _zero(n)
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


# -- bimodules -------------------------------------------------------------------


class Bimodule:
    """A graded bimodule presented by a left basis and right-action matrices."""

    __slots__ = (
        "n",
        "rank",
        "basis_degrees",
        "basis_labels",
        "actions",
        "factor_word",
        "block_spans",
        "_monomial_cache",
    )

    def __init__(
        self,
        n: int,
        basis_degrees: Sequence[int],
        basis_labels: Sequence[str],
        actions: Sequence[Matrix],
        factor_word: tuple,
        block_spans: Sequence[tuple] | None = None,
    ) -> None:
        self.n = n
        self.rank = len(basis_degrees)
        self.basis_degrees = tuple(basis_degrees)
        self.basis_labels = tuple(basis_labels)
        self.actions = tuple(actions)
        self.factor_word = factor_word
        self.block_spans = tuple(block_spans) if block_spans else ((0, self.rank),)
        self._monomial_cache: dict = {}

    # equality compares presentations (degrees and actions), not labels
    def __eq__(self, other) -> bool:
        if not isinstance(other, Bimodule):
            return NotImplemented
        return (
            self.n == other.n
            and self.basis_degrees == other.basis_degrees
            and all(mat_eq(a, b) for a, b in zip(self.actions, other.actions))
        )

    def __hash__(self) -> int:
        return hash((self.n, self.basis_degrees))

    def __repr__(self) -> str:
        word = "(x)".join(str(f) for f in self.factor_word) or "R"
        return f"Bimodule({word}, rank={self.rank}, degrees={list(self.basis_degrees)})"

    def is_zero(self) -> bool:
        return self.rank == 0

    def _monomial_action(self, exp: tuple) -> Matrix:
        cached = self._monomial_cache.get(exp)
        if cached is not None:
            return cached
        result = mat_identity(self.rank, self.n)
        for j, e in enumerate(exp):
            for _ in range(e):
                result = mat_mul(self.actions[j], result, self.n)
        self._monomial_cache[exp] = result
        return result

    def action_of(self, p: Poly) -> Matrix:
        """Right multiplication by an arbitrary polynomial, in the left basis."""
        out = mat_zero(self.rank, self.rank, self.n)
        for exp, c in p.terms.items():
            mono = self._monomial_action(exp)
            for i in range(self.rank):
                row = mono[i]
                oi = out[i]
                for j in range(self.rank):
                    if row[j]:
                        oi[j] = oi[j] + row[j].scale(c)
        return out

    def validate(self) -> None:
        """Check commuting right actions and the grading constraint."""
        for j, a in enumerate(self.actions):
            for k in range(self.rank):
                for l in range(self.rank):
                    entry = a[k][l]
                    if entry and not entry.is_homogeneous(
                        self.basis_degrees[l] + 2 - self.basis_degrees[k]
                    ):
                        raise ValueError(
                            f"action {j} entry ({k},{l}) = {entry} breaks the grading"
                        )
        for i in range(self.n):
            for j in range(i + 1, self.n):
                lhs = mat_mul(self.actions[i], self.actions[j], self.n)
                rhs = mat_mul(self.actions[j], self.actions[i], self.n)
                if not mat_eq(lhs, rhs):
                    raise ValueError(f"right actions {i} and {j} do not commute")


def bimodule_R(n: int) -> Bimodule:
    return Bimodule(
        n, [0], ["1"], [[[Poly.variable(n, j)]] for j in range(n)], ("R",)
    )


def bimodule_Rw(word, n: int) -> Bimodule:
    """Rank one, with ``a`` acting on the right as multiplication by ``w(a)``."""
    word = tuple(word)
    actions = [[[coxeter.act(word, Poly.variable(n, j))]] for j in range(n)]
    name = "R" if not word else "Rw[" + ",".join(map(str, word)) + "]"
    return Bimodule(n, [0], ["1"], actions, (name,))


def bimodule_Bs(t: Reflection) -> Bimodule:
    """Rank two with basis ``{1 (x) 1, 1 (x) root}`` over the t-invariants."""
    n = t.n
    actions = []
    for j in range(n):
        xj = Poly.variable(n, j)
        p0, q0 = demazure_decompose(t, xj)
        p1, q1 = demazure_decompose(t, xj * t.root)
        actions.append([[p0, p1], [q0, q1]])
    name = "B[" + ",".join(map(str, t.word)) + "]"
    return Bimodule(n, [0, 2], ["1(x)1", "1(x)r"], actions, (name,))


def zero_bimodule(n: int) -> Bimodule:
    return Bimodule(n, [], [], [[] for _ in range(n)], ("0",))


def shift(m: Bimodule, p: int) -> Bimodule:
    """Shift the internal grading: basis degrees go up by ``p``, actions unchanged."""
    if p == 0:
        return m
    return Bimodule(
        m.n,
        [d + p for d in m.basis_degrees],
        m.basis_labels,
        m.actions,
        m.factor_word + ((f"{{{p}}}",) if p else ()),
        m.block_spans,
    )


def tensor(m: Bimodule, other: Bimodule) -> Bimodule:
    """Tensor over the ring; the right action crosses the second factor first.

    ``(x (x) y) * X_j`` expands ``y * X_j`` in the second factor and moves the
    resulting polynomial coefficients through the first factor with its own
    right-action matrices.
    """
    if m.n != other.n:
        raise ValueError("bimodules over different variable counts")
    n = m.n
    rm, ro = m.rank, other.rank
    rank = rm * ro
    degrees = [
        m.basis_degrees[a] + other.basis_degrees[b]
        for a in range(rm)
        for b in range(ro)
    ]
    labels = [
        f"{m.basis_labels[a]}(x){other.basis_labels[b]}"
        for a in range(rm)
        for b in range(ro)
    ]
    actions = []
    for j in range(n):
        t = mat_zero(rank, rank, n)
        oj = other.actions[j]
        for c in range(ro):
            for b in range(ro):
                entry = oj[c][b]
                if not entry:
                    continue
                crossed = m.action_of(entry)
                for a2 in range(rm):
                    row = crossed[a2]
                    trow = t[a2 * ro + c]
                    for a in range(rm):
                        if row[a]:
                            col = a * ro + b
                            trow[col] = trow[col] + row[a]
        actions.append(t)
    if len(other.block_spans) == 1:
        spans = [(s * ro, e * ro) for s, e in m.block_spans]
    else:
        spans = [(0, rank)]
    return Bimodule(n, degrees, labels, actions, m.factor_word + other.factor_word, spans)


def tensor_many(factors: Iterable[Bimodule]) -> Bimodule:
    factors = list(factors)
    if not factors:
        raise ValueError("empty tensor product")
    out = factors[0]
    for f in factors[1:]:
        out = tensor(out, f)
    return out


def direct_sum(parts: Sequence[Bimodule]) -> Bimodule:
    parts = list(parts)
    if not parts:
        raise ValueError("empty direct sum (use zero_bimodule)")
    n = parts[0].n
    degrees: list = []
    labels: list = []
    spans: list = []
    factor_word: tuple = ()
    offset = 0
    for p in parts:
        degrees.extend(p.basis_degrees)
        labels.extend(p.basis_labels)
        for s, e in p.block_spans:
            spans.append((offset + s, offset + e))
        offset += p.rank
        factor_word = factor_word + (p.factor_word,)
    rank = offset
    actions = []
    for j in range(n):
        t = mat_zero(rank, rank, n)
        off = 0
        for p in parts:
            a = p.actions[j]
            for k in range(p.rank):
                for l in range(p.rank):
                    if a[k][l]:
                        t[off + k][off + l] = a[k][l]
            off += p.rank
        actions.append(t)
    return Bimodule(n, degrees, labels, actions, ("sum", factor_word), spans)


# -- morphisms --------------------------------------------------------------------


class Morphism:
    """A left-linear map given by its matrix on coordinate columns.

    The bimodule-map condition (commutation with every right action) is a
    real constraint and is verified, never assumed.
    """

    __slots__ = ("source", "target", "matrix", "degree_shift")

    def __init__(
        self,
        source: Bimodule,
        target: Bimodule,
        matrix: Matrix,
        degree_shift: int = 0,
    ) -> None:
        if len(matrix) != target.rank or any(len(r) != source.rank for r in matrix):
            raise ValueError(
                f"matrix shape {len(matrix)}x{len(matrix[0]) if matrix else 0} "
                f"does not map rank {source.rank} into rank {target.rank}"
            )
        self.source = source
        self.target = target
        self.matrix = matrix
        self.degree_shift = degree_shift

    @classmethod
    def identity(cls, m: Bimodule) -> "Morphism":
        return cls(m, m, mat_identity(m.rank, m.n))

    @classmethod
    def zero(cls, source: Bimodule, target: Bimodule, degree_shift: int = 0) -> "Morphism":
        return cls(source, target, mat_zero(target.rank, source.rank, source.n), degree_shift)

    def is_zero(self) -> bool:
        return all(not e for row in self.matrix for e in row)

    def morphism_failures(self) -> list:
        """Empty iff this is a graded bimodule morphism; entries name violations."""
        failures = []
        src, tgt = self.source, self.target
        for k in range(tgt.rank):
            for l in range(src.rank):
                entry = self.matrix[k][l]
                if entry and not entry.is_homogeneous(
                    src.basis_degrees[l] + self.degree_shift - tgt.basis_degrees[k]
                ):
                    failures.append(("grading", k, l, format_poly(entry)))
        for j in range(src.n):
            lhs = mat_mul(self.matrix, src.actions[j], src.n)
            rhs = mat_mul(tgt.actions[j], self.matrix, src.n)
            for k in range(tgt.rank):
                for l in range(src.rank):
                    if lhs[k][l] != rhs[k][l]:
                        failures.append(
                            (
                                f"action X{j}",
                                k,
                                l,
                                format_poly(lhs[k][l] - rhs[k][l]),
                            )
                        )
        return failures

    def is_morphism(self) -> bool:
        return not self.morphism_failures()

    def compose(self, other: "Morphism") -> "Morphism":
        """``self`` after ``other``."""
        if other.target is not self.source and other.target != self.source:
            raise ValueError("composition shape mismatch")
        if self.source.rank == 0:
            return Morphism.zero(
                other.source, self.target, self.degree_shift + other.degree_shift
            )
        return Morphism(
            other.source,
            self.target,
            mat_mul(self.matrix, other.matrix, self.source.n),
            self.degree_shift + other.degree_shift,
        )

    def __add__(self, other: "Morphism") -> "Morphism":
        return Morphism(self.source, self.target, mat_add(self.matrix, other.matrix), self.degree_shift)

    def __sub__(self, other: "Morphism") -> "Morphism":
        return Morphism(self.source, self.target, mat_sub(self.matrix, other.matrix), self.degree_shift)

    def scale(self, c) -> "Morphism":
        return Morphism(self.source, self.target, mat_scale(self.matrix, c), self.degree_shift)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.degree_shift == other.degree_shift
            and mat_eq(self.matrix, other.matrix)
        )

    def __repr__(self) -> str:
        return f"Morphism({self.source!r} -> {self.target!r})"

    def apply(self, coords: Sequence[Poly]) -> list:
        return mat_vec(self.matrix, coords, self.source.n)

    # -- graded inversion ---------------------------------------------------

    def graded_inverse(self) -> "Morphism | None":
        """Two-sided inverse of a degree-0 morphism, or None.

        Sorting both bases by internal degree makes the matrix block upper
        triangular with scalar diagonal blocks; the map is invertible exactly
        when all those scalar blocks are, and the inverse comes out of block
        back-substitution.
        """
        if self.degree_shift != 0:
            return None
        src, tgt = self.source, self.target
        n = src.n
        if sorted(src.basis_degrees) != sorted(tgt.basis_degrees):
            return None
        src_order = sorted(range(src.rank), key=lambda l: (src.basis_degrees[l], l))
        tgt_order = sorted(range(tgt.rank), key=lambda k: (tgt.basis_degrees[k], k))
        degrees = sorted(set(src.basis_degrees))
        src_groups = {
            d: [l for l in src_order if src.basis_degrees[l] == d] for d in degrees
        }
        tgt_groups = {
            d: [k for k in tgt_order if tgt.basis_degrees[k] == d] for d in degrees
        }
        # invert the scalar diagonal blocks
        diag_inv: dict = {}
        for d in degrees:
            S, T = src_groups[d], tgt_groups[d]
            if len(S) != len(T):
                return None
            block = [[self.matrix[k][l].constant_term() for l in S] for k in T]
            inv = linalg.dense_inverse(block)
            if inv is None:
                return None
            diag_inv[d] = inv
        # block back-substitution by increasing degree gap:
        # G[d][d'] = inv(F[dd]) (delta I - sum_{d<e<=d'} F[de] G[e][d'])
        gblocks: dict = {}
        for gap in range(len(degrees)):
            for di in range(len(degrees) - gap):
                d, dp = degrees[di], degrees[di + gap]
                T_d = tgt_groups[d]
                inv_poly = [
                    [Poly.constant(n, diag_inv[d][i][j]) for j in range(len(T_d))]
                    for i in range(len(T_d))
                ]
                if gap == 0:
                    gblocks[(d, dp)] = inv_poly
                    continue
                acc = mat_zero(len(T_d), len(tgt_groups[dp]), n)
                for e in degrees[di + 1 : di + gap + 1]:
                    fde = [[self.matrix[k][l] for l in src_groups[e]] for k in T_d]
                    acc = mat_add(acc, mat_mul(fde, gblocks[(e, dp)], n))
                gblocks[(d, dp)] = mat_scale(mat_mul(inv_poly, acc, n), QSqrt2(-1))
        inverse = mat_zero(src.rank, tgt.rank, n)
        for (d, dp), block in gblocks.items():
            for bi, l in enumerate(src_groups[d]):
                for bj, k in enumerate(tgt_groups[dp]):
                    inverse[l][k] = block[bi][bj]
        g = Morphism(tgt, src, inverse)
        if not mat_eq(mat_mul(g.matrix, self.matrix, n), mat_identity(src.rank, n)):
            return None
        if not mat_eq(mat_mul(self.matrix, g.matrix, n), mat_identity(tgt.rank, n)):
            return None
        return g


# -- the degree-0 morphism solver ---------------------------------------------


_PANE_CACHE: dict = {}


def _pane_signature(m: Bimodule, span: tuple) -> tuple:
    s, e = span
    degs = m.basis_degrees[s:e]
    mats = tuple(
        tuple(tuple(format_poly(a[k][l]) for l in range(s, e)) for k in range(s, e))
        for a in m.actions
    )
    return (degs, mats)


def solve_morphisms(m: Bimodule, target: Bimodule, degree_shift: int = 0) -> list:
    """A basis of the space of degree-``degree_shift`` morphisms ``m -> target``.

    Unknown matrix entries are homogeneous of the degree the grading forces;
    the commutation with every right action gives an exact linear system over
    Q(sqrt2).  The right actions are block diagonal, so the system splits into
    independent panes (one per pair of blocks), each solved and cached by its
    presentation.
    """
    if m.n != target.n:
        raise ValueError("bimodules over different variable counts")
    basis = []
    for tspan in target.block_spans:
        for sspan in m.block_spans:
            key = (
                m.n,
                degree_shift,
                _pane_signature(m, sspan),
                _pane_signature(target, tspan),
            )
            local = _PANE_CACHE.get(key)
            if local is None:
                local = _solve_pane(m, sspan, target, tspan, degree_shift)
                _PANE_CACHE[key] = local
            for mat in local:
                full = mat_zero(target.rank, m.rank, m.n)
                for (k, l), poly in mat.items():
                    full[tspan[0] + k][sspan[0] + l] = poly
                basis.append(Morphism(m, target, full, degree_shift))
    return basis


def _solve_pane(m, sspan, target, tspan, degree_shift):
    n = m.n
    ss, se = sspan
    ts, te = tspan
    src_deg = m.basis_degrees
    tgt_deg = target.basis_degrees
    # unknown slots per entry: (local k, local l) -> [(exponent, variable index)]
    entry_vars: dict = {}
    slots: list = []
    for k in range(te - ts):
        for l in range(se - ss):
            delta = src_deg[ss + l] + degree_shift - tgt_deg[ts + k]
            exps = monomial_exponents(n, delta)
            if exps:
                entry_vars[(k, l)] = [(exp, len(slots) + i) for i, exp in enumerate(exps)]
                slots.extend((k, l, exp) for exp in exps)
    if not slots:
        return []
    rows: list = []
    minus_one = QSqrt2(-1)
    for j in range(n):
        am = m.actions[j]
        at = target.actions[j]
        for k in range(te - ts):
            for l in range(se - ss):
                # residual entry (k, l) of F*A_src - A_tgt*F, expanded over monomials
                eq: dict = {}
                for mm in range(se - ss):
                    a = am[ss + mm][ss + l]
                    if a:
                        _accumulate(eq, entry_vars.get((k, mm)), a, ONE)
                for mm in range(te - ts):
                    b = at[ts + k][ts + mm]
                    if b:
                        _accumulate(eq, entry_vars.get((mm, l)), b, minus_one)
                for row in eq.values():
                    if row:
                        rows.append(row)
    kernel = linalg.kernel_basis(rows, len(slots))
    out = []
    for vec in kernel:
        entries: dict = {}
        for var, coeff in vec.items():
            k, l, exp = slots[var]
            poly = entries.get((k, l))
            add = Poly.monomial(exp, coeff)
            entries[(k, l)] = add if poly is None else poly + add
        out.append({kl: p for kl, p in entries.items() if p})
    return out


def _accumulate(eq, variables, known_poly, sign):
    """Add ``sign * known_poly * (unknown entry)`` to the residual equations."""
    if not variables:
        return
    for exp, var in variables:
        for aexp, ac in known_poly.terms.items():
            mono = tuple(x + y for x, y in zip(exp, aexp))
            row = eq.setdefault(mono, {})
            c = ac * sign
            prev = row.get(var)
            c = c if prev is None else prev + c
            if c:
                row[var] = c
            else:
                row.pop(var, None)


# -- named isomorphisms -----------------------------------------------------------


def iso_swap_Rw(word, t: Reflection, n: int):
    """The swap ``R_w (x) B_t -> B_{w t w^-1} (x) R_w``, with its inverse.

    On elements the map sends ``a (x) b`` to ``a (x) w(b)``; on the chosen
    bases that is Demazure bookkeeping because the conjugate reflection's
    root is exactly ``w(root of t)``.
    """
    word = tuple(word)
    src = tensor(bimodule_Rw(word, n), bimodule_Bs(t))
    conj_word = word + t.word + tuple(reversed(word))
    t2 = make_reflection(conj_word, n)
    tgt = tensor(bimodule_Bs(t2), bimodule_Rw(word, n))
    image_of_root = coxeter.act(word, t.root)
    p, q = demazure_decompose(t2, image_of_root)
    matrix = [
        [_one(n), p],
        [_zero(n), q],
    ]
    forward = Morphism(src, tgt, matrix)
    failures = forward.morphism_failures()
    if failures:
        raise ValueError(f"swap map is not a morphism: {failures[:3]}")
    inverse = forward.graded_inverse()
    if inverse is None:
        raise ValueError("swap map is not invertible")
    return forward, inverse


def _unit_column(m: Bimodule) -> list:
    """Coordinates of the everywhere-1 basis element (index 0 by construction)."""
    col = [_zero(m.n)] * m.rank
    col[0] = _one(m.n)
    return col


def phi(n: int):
    """The degree-0 isomorphism ``B_{s0} (x) B_{s1 s0 s1} -> B_{s1 s0 s1} (x) B_{s0}``.

    Anchored to its two defining values ``1(x)1(x)1 -> 1(x)1(x)1`` and
    ``1(x)X0(x)1 -> 1(x)1(x)X0`` and extended by right-linearity over the
    second factor's basis; everything else about it is then forced.
    Undefined for n = 2 in this anchored form (the defining data lives in
    three variables).
    """
    if n < 3:
        raise ValueError("phi needs at least three variables")
    t0 = make_reflection((0,), n)
    t101 = make_reflection((1, 0, 1), n)
    src = tensor(bimodule_Bs(t0), bimodule_Bs(t101))
    tgt = tensor(bimodule_Bs(t101), bimodule_Bs(t0))
    act_beta = tgt.action_of(t101.root)
    act_x0 = tgt.action_of(Poly.variable(n, 0))
    col0 = _unit_column(tgt)
    col1 = mat_vec(act_beta, col0, n)
    col2 = mat_vec(act_x0, col0, n)
    col3 = mat_vec(act_beta, col2, n)
    matrix = [[col0[k], col1[k], col2[k], col3[k]] for k in range(4)]
    morphism = Morphism(src, tgt, matrix)
    failures = morphism.morphism_failures()
    if failures:
        raise ValueError(f"phi failed the bimodule-map check: {failures[:3]}")
    return morphism


def middle_coords(m: Bimodule, t_first: Reflection, p: Poly) -> list:
    """Coordinates of ``1 (x) p (x) 1`` in a two-factor tensor of rank-2 pieces.

    ``t_first`` is the reflection of the first factor; splitting ``p`` over
    its invariants moves the invariant part to the far left.
    """
    if m.rank != 4:
        raise ValueError("middle insertion needs a rank-4 two-factor tensor")
    p0, p1 = demazure_decompose(t_first, p)
    coords = [_zero(m.n)] * 4
    coords[0] = p0
    coords[2] = p1
    return coords


def psi(n: int):
    """An invertible degree-0 morphism ``B_{s1} (x) B_{s0 s1 s0} -> B_{s0 s1 s0} (x) B_{s1}``.

    Found by the solver inside the unit-preserving affine slice of the
    degree-0 morphism space, then inverted and verified.
    """
    if n < 3:
        raise ValueError("psi needs at least three variables")
    t1 = make_reflection((1,), n)
    t010 = make_reflection((0, 1, 0), n)
    src = tensor(bimodule_Bs(t1), bimodule_Bs(t010))
    tgt = tensor(bimodule_Bs(t010), bimodule_Bs(t1))
    forward = find_unit_preserving_iso(src, tgt)
    if forward is None:
        raise RuntimeError("no unit-preserving isomorphism found for psi")
    inverse = forward.graded_inverse()
    return forward, inverse


def find_unit_preserving_iso(src: Bimodule, tgt: Bimodule):
    """Search the degree-0 morphism space for an invertible unit-preserving map."""
    basis = solve_morphisms(src, tgt, 0)
    if not basis:
        return None
    n = src.n
    unit = _unit_column(tgt)
    # affine constraint: column 0 of the combination equals the unit column
    rows: list = []
    rhs: list = []
    slot_of: dict = {}
    for k in range(tgt.rank):
        monos = set()
        for i, b in enumerate(basis):
            monos.update(b.matrix[k][0].terms)
        monos.update(unit[k].terms)
        for mono in sorted(monos, reverse=True):
            row = {}
            for i, b in enumerate(basis):
                c = b.matrix[k][0].coefficient(mono)
                if c:
                    row[i] = c
            rows.append(row)
            rhs.append(unit[k].coefficient(mono))
    particular = linalg.solve_affine(rows, rhs)
    if particular is None:
        return None
    kernel = linalg.kernel_basis(rows, len(basis))

    def build(coeffs: dict):
        mat = mat_zero(tgt.rank, src.rank, n)
        for i, c in coeffs.items():
            if c:
                mat = mat_add(mat, mat_scale(basis[i].matrix, c))
        return Morphism(src, tgt, mat)

    def combos():
        yield dict(particular)
        for k in kernel:
            for sgn in (ONE, QSqrt2(-1)):
                combo = dict(particular)
                for i, c in k.items():
                    combo[i] = combo.get(i, QSqrt2(0)) + c * sgn
                yield combo

    for coeffs in combos():
        candidate = build(coeffs)
        if candidate.graded_inverse() is not None and candidate.is_morphism():
            return candidate
    return None
