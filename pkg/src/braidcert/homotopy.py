"""Bounded cochain complexes of bimodules and machine-checked certificates.

A braid letter gets a two-term complex (positive crossing: twisted unit map
into the rank-two bimodule; negative crossing: multiplication out of it) and
a virtual letter the one-term complex holding the twisted bimodule.  Words
tensor these together with the Koszul sign ``d(x (x) y) = dx (x) y +
(-1)^p x (x) dy``; the rank-two piece of a positive letter sits in
cohomological degree 0, so positive letters live in degrees {-1, 0} and
negative ones in {0, 1}.

Certificates are explicit per-degree matrices (a chain isomorphism with its
inverse, or a homotopy equivalence with both homotopies) whose defining
identities are re-verified exactly, entry by entry.
"""

from __future__ import annotations

import itertools
import json
from functools import lru_cache

from . import linalg
from .bimodcalc import (
    Bimodule,
    Matrix,
    Morphism,
    bimodule_R,
    bimodule_Rw,
    bimodule_Bs,
    direct_sum,
    mat_eq,
    mat_identity,
    mat_zero,
    shift,
    solve_morphisms,
    tensor,
    zero_bimodule,
)
from .coxeter import make_reflection
from .polyring import Poly, format_poly, parse_poly
from .scalars import ONE, QSqrt2
from .words import Alphabet, BraidWord, format_word, parse_word, relator_table


class Complex:
    """A bounded cochain complex of bimodules with degree-0 differentials."""

    __slots__ = ("n", "objects", "diffs")

    def __init__(self, n: int, objects: dict, diffs: dict) -> None:
        self.n = n
        self.objects = {k: v for k, v in objects.items() if v.rank}
        self.diffs = {
            k: d for k, d in diffs.items() if d.source.rank and d.target.rank
        }

    def support(self) -> list:
        return sorted(self.objects)

    def object_at(self, k: int) -> Bimodule:
        return self.objects.get(k) or zero_bimodule(self.n)

    def diff_at(self, k: int) -> Morphism:
        d = self.diffs.get(k)
        if d is None:
            return Morphism.zero(self.object_at(k), self.object_at(k + 1))
        return d

    def __repr__(self) -> str:
        parts = ", ".join(f"{k}: rank {m.rank}" for k, m in sorted(self.objects.items()))
        return f"Complex({parts})"


def complex_failures(c: Complex) -> list:
    """Witnesses against d being a square-zero degree-0 morphism family."""
    failures = []
    for k, d in c.diffs.items():
        for tag, row, col, res in d.morphism_failures():
            failures.append((k, f"differential {tag}", row, col, res))
    for k in c.support():
        d1 = c.diffs.get(k)
        d2 = c.diffs.get(k + 1)
        if d1 is None or d2 is None:
            continue
        comp = d2.compose(d1)
        for row in range(comp.target.rank):
            for col in range(comp.source.rank):
                if comp.matrix[row][col]:
                    failures.append(
                        (k, "d.d != 0", row, col, format_poly(comp.matrix[row][col]))
                    )
    return failures


def verify_complex(c: Complex) -> bool:
    return not complex_failures(c)


# -- the functor on letters and words ----------------------------------------------


@lru_cache(maxsize=None)
def _letter_complex(kind: str, index: int, exp: int, n: int) -> Complex:
    if kind in ("z", "zet"):
        return Complex(n, {0: bimodule_Rw((index,), n)}, {})
    if kind in ("s", "sig"):
        b = bimodule_Bs(make_reflection((index,), n))
        xi = Poly.variable(n, index)
        if exp == 1:
            src = shift(bimodule_R(n), 2)
            d = Morphism(src, b, [[xi], [Poly.one(n)]])
            return Complex(n, {-1: src, 0: b}, {-1: d})
        src = shift(b, -2)
        tgt = shift(bimodule_R(n), -2)
        d = Morphism(src, tgt, [[Poly.one(n), xi]])
        return Complex(n, {0: src, 1: tgt}, {0: d})
    raise ValueError(f"no complex for letter kind {kind!r}")


def F_letter(letter, n: int) -> Complex:
    kind, index, exp = letter
    if not 0 <= index < n:
        raise IndexError(f"letter index {index} out of range for n={n}")
    return _letter_complex(kind, index, exp, n)


def F_one(n: int) -> Complex:
    return Complex(n, {0: bimodule_R(n)}, {})


def F_word(word, n: int) -> Complex:
    """The complex of a type-B word: the tensor of its letter complexes."""
    letters = word.letters if isinstance(word, BraidWord) else tuple(word)
    result = F_one(n)
    for letter in letters:
        result = tensor_complex(result, F_letter(letter, n))
    return result


def _morphism_tensor_id(f: Morphism, right: Bimodule) -> Matrix:
    """Matrix of ``f (x) id`` (plain Kronecker with the identity)."""
    r = right.rank
    n = f.source.n
    rows = f.target.rank * r
    cols = f.source.rank * r
    out = mat_zero(rows, cols, n)
    for a2 in range(f.target.rank):
        fa = f.matrix[a2]
        for a in range(f.source.rank):
            entry = fa[a]
            if entry:
                for b in range(r):
                    out[a2 * r + b][a * r + b] = entry
    return out


def _id_tensor_morphism(left: Bimodule, g: Morphism) -> Matrix:
    """Matrix of ``id (x) g``; g's coefficients cross the left factor."""
    n = left.n
    rl = left.rank
    rows = rl * g.target.rank
    cols = rl * g.source.rank
    out = mat_zero(rows, cols, n)
    for b2 in range(g.target.rank):
        for b in range(g.source.rank):
            entry = g.matrix[b2][b]
            if not entry:
                continue
            crossed = left.action_of(entry)
            for a2 in range(rl):
                row = crossed[a2]
                orow = out[a2 * g.target.rank + b2]
                for a in range(rl):
                    if row[a]:
                        orow[a * g.source.rank + b] = (
                            orow[a * g.source.rank + b] + row[a]
                        )
    return out


def tensor_complex(c: Complex, d: Complex) -> Complex:
    """Total complex of the product, with the Koszul sign on the second factor."""
    if c.n != d.n:
        raise ValueError("complexes over different variable counts")
    n = c.n
    pairs: dict = {}
    for p in c.support():
        for q in d.support():
            pairs.setdefault(p + q, []).append((p, q))
    for k in pairs:
        pairs[k].sort()
    objects: dict = {}
    offsets: dict = {}
    for k, pq in pairs.items():
        blocks = [tensor(c.objects[p], d.objects[q]) for p, q in pq]
        off: dict = {}
        pos = 0
        for (p, q), blk in zip(pq, blocks):
            off[(p, q)] = pos
            pos += blk.rank
        offsets[k] = off
        objects[k] = direct_sum(blocks) if len(blocks) > 1 else blocks[0]
    diffs: dict = {}
    for k in sorted(pairs):
        if k + 1 not in pairs:
            continue
        src, tgt = objects[k], objects[k + 1]
        matrix = mat_zero(tgt.rank, src.rank, n)
        for p, q in pairs[k]:
            soff = offsets[k][(p, q)]
            # d_C (x) id into block (p+1, q)
            if (p + 1, q) in offsets[k + 1] and (p in c.diffs):
                block = _morphism_tensor_id(c.diffs[p], d.objects[q])
                toff = offsets[k + 1][(p + 1, q)]
                _paste(matrix, block, toff, soff)
            # (-1)^p id (x) d_D into block (p, q+1)
            if (p, q + 1) in offsets[k + 1] and (q in d.diffs):
                block = _id_tensor_morphism(c.objects[p], d.diffs[q])
                if p % 2:
                    block = [[-e if e else e for e in row] for row in block]
                toff = offsets[k + 1][(p, q + 1)]
                _paste(matrix, block, toff, soff)
        diffs[k] = Morphism(src, tgt, matrix)
    return Complex(n, objects, diffs)


def _paste(big: Matrix, block: Matrix, row_off: int, col_off: int) -> None:
    for i, row in enumerate(block):
        target = big[row_off + i]
        for j, entry in enumerate(row):
            if entry:
                target[col_off + j] = entry


def tensor_complex_many(*complexes: Complex) -> Complex:
    if not complexes:
        raise ValueError("empty tensor product of complexes")
    out = complexes[0]
    for c in complexes[1:]:
        out = tensor_complex(out, c)
    return out


# -- chain maps ---------------------------------------------------------------------


class ChainMap:
    """Per-degree morphisms commuting with the differentials."""

    __slots__ = ("source", "target", "components")

    def __init__(self, source: Complex, target: Complex, components: dict) -> None:
        self.source = source
        self.target = target
        self.components = {
            k: f for k, f in components.items() if f.source.rank and f.target.rank
        }

    def component(self, k: int) -> Morphism:
        f = self.components.get(k)
        if f is None:
            return Morphism.zero(self.source.object_at(k), self.target.object_at(k))
        return f

    @classmethod
    def identity(cls, c: Complex) -> "ChainMap":
        return cls(c, c, {k: Morphism.identity(m) for k, m in c.objects.items()})

    def compose(self, other: "ChainMap") -> "ChainMap":
        degrees = set(self.components) | set(other.components)
        comps = {
            k: self.component(k).compose(other.component(k)) for k in degrees
        }
        return ChainMap(other.source, self.target, comps)

    def __repr__(self) -> str:
        return f"ChainMap(degrees={sorted(self.components)})"


def chain_map_failures(f: ChainMap) -> list:
    failures = []
    for k, comp in f.components.items():
        for tag, row, col, res in comp.morphism_failures():
            failures.append((k, f"component {tag}", row, col, res))
    degrees = set(f.source.objects) | set(f.target.objects)
    for k in sorted(degrees):
        lhs = f.component(k + 1).compose(f.source.diff_at(k))
        rhs = f.target.diff_at(k).compose(f.component(k))
        for row in range(lhs.target.rank):
            for col in range(lhs.source.rank):
                if lhs.matrix[row][col] != rhs.matrix[row][col]:
                    failures.append(
                        (
                            k,
                            "square",
                            row,
                            col,
                            format_poly(lhs.matrix[row][col] - rhs.matrix[row][col]),
                        )
                    )
    return failures


def verify_chain_map(f: ChainMap) -> bool:
    return not chain_map_failures(f)


def chain_iso_failures(f: ChainMap, g: ChainMap) -> list:
    failures = chain_map_failures(f)
    failures += chain_map_failures(g)
    degrees = set(f.source.objects) | set(f.target.objects)
    for k in sorted(degrees):
        src = f.source.object_at(k)
        tgt = f.target.object_at(k)
        gf = g.component(k).compose(f.component(k))
        if not mat_eq(gf.matrix, mat_identity(src.rank, f.source.n)):
            failures.append((k, "g.f != id", None, None, "composite not identity"))
        fg = f.component(k).compose(g.component(k))
        if not mat_eq(fg.matrix, mat_identity(tgt.rank, f.source.n)):
            failures.append((k, "f.g != id", None, None, "composite not identity"))
    return failures


def verify_chain_iso(f: ChainMap, g: ChainMap) -> bool:
    return not chain_iso_failures(f, g)


class HomotopyEquivalence:
    """Chain maps both ways plus homotopies contracting both composites.

    ``h_source[k]`` maps degree ``k`` of the source to degree ``k-1``; the
    identities ``id - g.f = d h + h d`` (and the mirror on the target side)
    are checked exactly.
    """

    __slots__ = ("forward", "backward", "h_source", "h_target")

    def __init__(self, forward: ChainMap, backward: ChainMap, h_source: dict, h_target: dict) -> None:
        self.forward = forward
        self.backward = backward
        self.h_source = h_source
        self.h_target = h_target


def _homotopy_side_failures(c: Complex, gf: dict, h: dict, side: str) -> list:
    failures = []
    n = c.n
    for k in c.support():
        obj = c.objects[k]
        acc = mat_zero(obj.rank, obj.rank, n)
        if k in gf:
            acc = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(acc, gf[k].matrix)]
        hk = h.get(k)
        if hk is not None and c.object_at(k - 1).rank:
            term = c.diff_at(k - 1).compose(hk)
            acc = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(acc, term.matrix)]
        hk1 = h.get(k + 1)
        if hk1 is not None and c.object_at(k + 1).rank:
            term = hk1.compose(c.diff_at(k))
            acc = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(acc, term.matrix)]
        ident = mat_identity(obj.rank, n)
        for row in range(obj.rank):
            for col in range(obj.rank):
                if acc[row][col] != ident[row][col]:
                    failures.append(
                        (
                            k,
                            f"{side}: g.f + dh + hd != id",
                            row,
                            col,
                            format_poly(acc[row][col] - ident[row][col]),
                        )
                    )
    return failures


def homotopy_failures(cert: HomotopyEquivalence) -> list:
    f, g = cert.forward, cert.backward
    failures = chain_map_failures(f) + chain_map_failures(g)
    for k, hk in cert.h_source.items():
        for tag, row, col, res in hk.morphism_failures():
            failures.append((k, f"h_source {tag}", row, col, res))
    for k, hk in cert.h_target.items():
        for tag, row, col, res in hk.morphism_failures():
            failures.append((k, f"h_target {tag}", row, col, res))
    gf = {
        k: g.component(k).compose(f.component(k))
        for k in f.source.support()
        if f.target.object_at(k).rank
    }
    failures += _homotopy_side_failures(f.source, gf, cert.h_source, "source")
    fg = {
        k: f.component(k).compose(g.component(k))
        for k in f.target.support()
        if f.source.object_at(k).rank
    }
    failures += _homotopy_side_failures(f.target, fg, cert.h_target, "target")
    return failures


def verify_homotopy(cert: HomotopyEquivalence) -> bool:
    return not homotopy_failures(cert)


# -- search -----------------------------------------------------------------------


def chain_map_space(c: Complex, d: Complex) -> list:
    """A basis of the space of degree-0 chain maps ``c -> d``.

    Per-degree morphism spaces are solved first; the commutation with the
    differentials is then a small linear system over their coefficients.
    """
    degrees = sorted(set(c.objects) | set(d.objects))
    per_degree: dict = {}
    var_of: dict = {}
    nvars = 0
    for k in degrees:
        ck, dk = c.object_at(k), d.object_at(k)
        basis = solve_morphisms(ck, dk) if ck.rank and dk.rank else []
        per_degree[k] = basis
        for i in range(len(basis)):
            var_of[(k, i)] = nvars
            nvars += 1
    if nvars == 0:
        return []
    rows: list = []
    for k in degrees:
        # d_D o f_k  =  f_{k+1} o d_C   as maps C_k -> D_{k+1}
        terms: list = []
        if c.object_at(k).rank and d.object_at(k + 1).rank:
            dd = d.diff_at(k)
            for i, b in enumerate(per_degree[k]):
                terms.append((var_of[(k, i)], dd.compose(b).matrix, ONE))
            dc = c.diff_at(k)
            for i, b in enumerate(per_degree.get(k + 1, [])):
                terms.append((var_of[(k + 1, i)], b.compose(dc).matrix, QSqrt2(-1)))
        rows.extend(_entrywise_rows(terms))
    kernel = linalg.kernel_basis(rows, nvars)
    maps = []
    for vec in kernel:
        comps: dict = {}
        for k in degrees:
            basis = per_degree[k]
            if not basis:
                continue
            total = None
            for i, b in enumerate(basis):
                coeff = vec.get(var_of[(k, i)])
                if coeff:
                    piece = b.scale(coeff)
                    total = piece if total is None else total + piece
            if total is not None and not total.is_zero():
                comps[k] = total
        maps.append(ChainMap(c, d, comps))
    return maps


def _entrywise_rows(terms) -> list:
    """Linear equations saying a sum of coefficient-weighted matrices vanishes."""
    if not terms:
        return []
    slots: dict = {}
    for var, matrix, sign in terms:
        for a, row in enumerate(matrix):
            for b, poly in enumerate(row):
                if not poly:
                    continue
                for mono, coeff in poly.terms.items():
                    eq = slots.setdefault((a, b, mono), {})
                    cur = eq.get(var)
                    add = coeff * sign
                    cur = add if cur is None else cur + add
                    if cur:
                        eq[var] = cur
                    else:
                        eq.pop(var, None)
    return [eq for eq in slots.values() if eq]


def _combo_candidates(dim: int, max_support: int = 3):
    """Deterministic coefficient vectors to probe a solution space with."""
    if dim == 0:
        return
    for i in range(dim):
        yield {i: ONE}
    if dim > 1:
        # a generic-looking weighted combination often hits the invertible locus
        primes = [1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
        yield {i: QSqrt2(primes[i % len(primes)]) for i in range(dim)}
    for size in (2, 3):
        if size > min(dim, max_support):
            break
        for combo in itertools.combinations(range(dim), size):
            for signs in itertools.product((1, -1), repeat=size - 1):
                coeffs = {combo[0]: ONE}
                for idx, sgn in zip(combo[1:], signs):
                    coeffs[idx] = QSqrt2(sgn)
                yield coeffs


def _build_chain_map(basis: list, coeffs: dict) -> ChainMap:
    degrees: set = set()
    for i in coeffs:
        degrees.update(basis[i].components)
    comps: dict = {}
    for k in degrees:
        total = None
        for i, coeff in coeffs.items():
            piece = basis[i].components.get(k)
            if piece is None or not coeff:
                continue
            scaled = piece.scale(coeff)
            total = scaled if total is None else total + scaled
        if total is not None and not total.is_zero():
            comps[k] = total
    return ChainMap(basis[0].source, basis[0].target, comps)


def _graded_ranks_match(c: Complex, d: Complex) -> bool:
    if set(c.objects) != set(d.objects):
        return False
    for k, obj in c.objects.items():
        if sorted(obj.basis_degrees) != sorted(d.objects[k].basis_degrees):
            return False
    return True


def find_chain_iso(c: Complex, d: Complex, max_candidates: int = 4000):
    """A chain isomorphism with verified inverse, or None.

    Searches the finite-dimensional chain-map space for an element whose
    every component inverts (decided degreewise through the scalar diagonal
    blocks); deterministic order, first hit wins.
    """
    if not _graded_ranks_match(c, d):
        return None
    basis = chain_map_space(c, d)
    if not basis:
        return None
    count = 0
    for coeffs in _combo_candidates(len(basis)):
        count += 1
        if count > max_candidates:
            break
        f = _build_chain_map(basis, coeffs)
        inverses: dict = {}
        ok = True
        for k in sorted(c.objects):
            comp = f.component(k)
            inv = comp.graded_inverse()
            if inv is None:
                ok = False
                break
            inverses[k] = inv
        if not ok:
            continue
        g = ChainMap(d, c, inverses)
        if verify_chain_iso(f, g):
            return f, g
    return None


def find_homotopy_equiv(c: Complex, d: Complex, degree_bound: int = 8, max_candidates: int = 200):
    """A verified homotopy equivalence certificate, or None.

    For each candidate forward map the remaining data (backward map and both
    homotopies) satisfies a linear system, solved exactly; the first
    candidate admitting a solution wins.  ``degree_bound`` caps the number of
    nonzero degrees considered.
    """
    if len(set(c.objects) | set(d.objects)) > degree_bound:
        return None
    fb = chain_map_space(c, d)
    gb = chain_map_space(d, c)
    hc_basis = _homotopy_spaces(c)
    hd_basis = _homotopy_spaces(d)
    candidates = list(_candidate_iter(fb, max_candidates))
    for f in candidates:
        cert = _solve_homotopy_for(c, d, f, gb, hc_basis, hd_basis)
        if cert is not None:
            return cert
    return None


def _candidate_iter(basis: list, max_candidates: int):
    count = 0
    for coeffs in _combo_candidates(len(basis)):
        count += 1
        if count > max_candidates:
            return
        yield _build_chain_map(basis, coeffs)


def _homotopy_spaces(c: Complex) -> dict:
    out: dict = {}
    for k in c.support():
        if c.object_at(k - 1).rank:
            out[k] = solve_morphisms(c.objects[k], c.objects[k - 1])
        else:
            out[k] = []
    return out


def _solve_homotopy_for(c, d, f, gb, hc_basis, hd_basis):
    n = c.n
    var_of: dict = {}
    nvars = 0
    for j in range(len(gb)):
        var_of[("g", j)] = nvars
        nvars += 1
    for k, basis in hc_basis.items():
        for i in range(len(basis)):
            var_of[("hc", k, i)] = nvars
            nvars += 1
    for k, basis in hd_basis.items():
        for i in range(len(basis)):
            var_of[("hd", k, i)] = nvars
            nvars += 1
    rows: list = []
    rhs: list = []
    # source side: sum_j y_j (g_j f)_k + (dh + hd)_k = id
    for k in c.support():
        obj = c.objects[k]
        terms = []
        for j, g in enumerate(gb):
            prod = g.component(k).compose(f.component(k))
            terms.append((var_of[("g", j)], prod.matrix, ONE))
        terms.extend(
            (var_of[("hc", kk, i)], m, s)
            for (kk, i), m, s in _indexed_homotopy_terms(c, hc_basis, k)
        )
        _extend_affine(rows, rhs, terms, mat_identity(obj.rank, n))
    # target side: sum_j y_j (f g_j)_k + (dh + hd)_k = id
    for k in d.support():
        obj = d.objects[k]
        terms = []
        for j, g in enumerate(gb):
            prod = f.component(k).compose(g.component(k))
            terms.append((var_of[("g", j)], prod.matrix, ONE))
        terms.extend(
            (var_of[("hd", kk, i)], m, s)
            for (kk, i), m, s in _indexed_homotopy_terms(d, hd_basis, k)
        )
        _extend_affine(rows, rhs, terms, mat_identity(obj.rank, n))
    solution = linalg.solve_affine(rows, rhs)
    if solution is None:
        return None
    g_comps: dict = {}
    for j, g in enumerate(gb):
        coeff = solution.get(var_of[("g", j)])
        if not coeff:
            continue
        for k, comp in g.components.items():
            piece = comp.scale(coeff)
            cur = g_comps.get(k)
            g_comps[k] = piece if cur is None else cur + piece
    g_map = ChainMap(d, c, g_comps)
    h_src = _assemble_homotopy(c, hc_basis, var_of, solution, "hc")
    h_tgt = _assemble_homotopy(d, hd_basis, var_of, solution, "hd")
    cert = HomotopyEquivalence(f, g_map, h_src, h_tgt)
    if homotopy_failures(cert):
        return None
    return cert


def _indexed_homotopy_terms(c: Complex, h_basis: dict, k: int):
    out = []
    for i, hk in enumerate(h_basis.get(k, [])):
        out.append(((k, i), c.diff_at(k - 1).compose(hk).matrix, ONE))
    for i, hk1 in enumerate(h_basis.get(k + 1, [])):
        out.append(((k + 1, i), hk1.compose(c.diff_at(k)).matrix, ONE))
    return out


def _extend_affine(rows: list, rhs: list, terms, target: Matrix) -> None:
    """Equations saying the weighted sum of matrices equals ``target``."""
    slots: dict = {}
    for var, matrix, sign in terms:
        for a, row in enumerate(matrix):
            for b, poly in enumerate(row):
                if not poly:
                    continue
                for mono, coeff in poly.terms.items():
                    eq = slots.setdefault((a, b, mono), {})
                    cur = eq.get(var)
                    add = coeff * sign
                    cur = add if cur is None else cur + add
                    if cur:
                        eq[var] = cur
                    else:
                        eq.pop(var, None)
    for a, row in enumerate(target):
        for b, poly in enumerate(row):
            for mono, coeff in poly.terms.items():
                slots.setdefault((a, b, mono), {})
    for (a, b, mono), eq in sorted(slots.items()):
        want = target[a][b].coefficient(mono) if a < len(target) else QSqrt2(0)
        if eq or want:
            rows.append(eq)
            rhs.append(want)


def _assemble_homotopy(c: Complex, h_basis: dict, var_of: dict, solution: dict, tag: str) -> dict:
    out: dict = {}
    for k, basis in h_basis.items():
        total = None
        for i, hk in enumerate(basis):
            coeff = solution.get(var_of[(tag, k, i)])
            if coeff:
                piece = hk.scale(coeff)
                total = piece if total is None else total + piece
        if total is not None and not total.is_zero():
            out[k] = total
    return out


# -- certificates -------------------------------------------------------------------

CERTIFICATE_FORMAT = "braidcert.certificate.v1"
REPORT_FORMAT = "braidcert.report.v1"

# which defining relations need the homotopy search rather than an on-the-nose
# isomorphism: the braid relations among the positive crossings
_HOMOTOPY_LABELS = ("relB2", "relB3")


def _components_to_json(components: dict) -> list:
    out = []
    for k in sorted(components):
        m = components[k]
        out.append(
            {
                "degree": k,
                "matrix": [[format_poly(e) for e in row] for row in m.matrix],
            }
        )
    return out


def _components_from_json(data, source: Complex, target: Complex, shift_by: int = 0):
    comps = {}
    for item in data:
        k = item["degree"]
        src = source.object_at(k)
        tgt = target.object_at(k + shift_by)
        matrix = [
            [parse_poly(s, source.n) for s in row] for row in item["matrix"]
        ]
        comps[k] = Morphism(src, tgt, matrix)
    return comps


def iso_certificate(label: str, n: int, lhs: BraidWord, rhs: BraidWord, f: ChainMap, g: ChainMap) -> dict:
    return {
        "format": CERTIFICATE_FORMAT,
        "relation": label,
        "kind": "iso",
        "group": "vbB",
        "n": n,
        "words": [format_word(lhs), format_word(rhs)],
        "forward": _components_to_json(f.components),
        "inverse": _components_to_json(g.components),
    }


def homotopy_certificate(label: str, n: int, lhs: BraidWord, rhs: BraidWord, cert: HomotopyEquivalence) -> dict:
    return {
        "format": CERTIFICATE_FORMAT,
        "relation": label,
        "kind": "homotopy",
        "group": "vbB",
        "n": n,
        "words": [format_word(lhs), format_word(rhs)],
        "forward": _components_to_json(cert.forward.components),
        "backward": _components_to_json(cert.backward.components),
        "homotopy_source": _components_to_json(cert.h_source),
        "homotopy_target": _components_to_json(cert.h_target),
    }


def verify_certificate_dict(data: dict) -> tuple:
    """Re-verify a serialized certificate from scratch; (ok, failure list)."""
    if data.get("format") != CERTIFICATE_FORMAT:
        return False, [(None, "format", None, None, str(data.get("format")))]
    n = data["n"]
    ab = Alphabet.vbB(n)
    lhs = F_word(parse_word(data["words"][0], ab), n)
    rhs = F_word(parse_word(data["words"][1], ab), n)
    if data["kind"] == "iso":
        f = ChainMap(lhs, rhs, _components_from_json(data["forward"], lhs, rhs))
        g = ChainMap(rhs, lhs, _components_from_json(data["inverse"], rhs, lhs))
        failures = chain_iso_failures(f, g)
        return not failures, failures
    if data["kind"] == "homotopy":
        f = ChainMap(lhs, rhs, _components_from_json(data["forward"], lhs, rhs))
        g = ChainMap(rhs, lhs, _components_from_json(data["backward"], rhs, lhs))
        h_src = _components_from_json(data["homotopy_source"], lhs, lhs, -1)
        h_tgt = _components_from_json(data["homotopy_target"], rhs, rhs, -1)
        cert = HomotopyEquivalence(f, g, h_src, h_tgt)
        failures = homotopy_failures(cert)
        return not failures, failures
    return False, [(None, "kind", None, None, str(data.get("kind")))]


def certify_pair(lhs: BraidWord, rhs: BraidWord, n: int, kind: str = "auto", degree_bound: int = 8):
    """Certify that two words have isomorphic / homotopy equivalent complexes.

    Returns ``(kind, certificate dict)`` or ``(None, None)`` when neither an
    isomorphism nor (for kind 'auto'/'homotopy') a homotopy equivalence is
    found.
    """
    c = F_word(lhs, n)
    d = F_word(rhs, n)
    label = f"{format_word(lhs)} ~ {format_word(rhs)}"
    if kind in ("auto", "iso"):
        found = find_chain_iso(c, d)
        if found is not None:
            return "iso", iso_certificate(label, n, lhs, rhs, *found)
        if kind == "iso":
            return None, None
    cert = find_homotopy_equiv(c, d, degree_bound=degree_bound)
    if cert is not None:
        return "homotopy", homotopy_certificate(label, n, lhs, rhs, cert)
    return None, None


def _relation_kind(label: str) -> str:
    return "homotopy" if label.startswith(_HOMOTOPY_LABELS) else "iso"


def relation_certificates(n: int) -> dict:
    """Certificates for every defining relation of the type-B virtual braid group.

    Isomorphism certificates for the virtual, mixed and commuting relations;
    homotopy certificates for the braid relations; plus both Reidemeister-II
    contractions per strand index and, for n >= 3, the two isomorphisms that
    hold on complexes even though the underlying words differ in the group.
    """
    ab = Alphabet.vbB(n)
    results = []
    all_ok = True

    def record(label, kind, lhs, rhs):
        nonlocal all_ok
        c, d = F_word(lhs, n), F_word(rhs, n)
        if kind == "iso":
            found = find_chain_iso(c, d)
            cert = None if found is None else iso_certificate(label, n, lhs, rhs, *found)
        else:
            found = find_homotopy_equiv(c, d)
            cert = None if found is None else homotopy_certificate(label, n, lhs, rhs, found)
        ok = cert is not None
        all_ok = all_ok and ok
        results.append(
            {
                "relation": label,
                "kind": kind,
                "status": "certified" if ok else "failed",
                "certificate": cert,
            }
        )

    for rel in relator_table("vbB", n):
        record(rel.label, _relation_kind(rel.label), rel.lhs, rel.rhs)
    empty = parse_word("", ab)
    for i in range(n):
        record(f"reid2a[{i}]", "homotopy", parse_word(f"s{i} s{i}^-1", ab), empty)
        record(f"reid2b[{i}]", "homotopy", parse_word(f"s{i}^-1 s{i}", ab), empty)
    if n >= 3:
        for i in range(n):
            record(
                f"remark_sz[{i}]",
                "iso",
                parse_word(f"s{i} z{i}", ab),
                parse_word(f"z{i} s{i}", ab),
            )
        record(
            "remark_zszs",
            "iso",
            parse_word("z0 s1 z0 s1", ab),
            parse_word("s1 z0 s1 z0", ab),
        )
    return {
        "format": REPORT_FORMAT,
        "kind": "relation-certificates",
        "group": "vbB",
        "n": n,
        "all_certified": all_ok,
        "results": results,
    }


def dump_certificates(report: dict, path) -> None:
    with open(path, "w") as fh:
        json.dump(report, fh, indent=1)


def load_certificates(path) -> dict:
    with open(path) as fh:
        return json.load(fh)
