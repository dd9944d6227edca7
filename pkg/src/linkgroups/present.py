"""Finite presentations of link groups and their simplification.

Builders turn a braid word b into the presentation with one relator
x_i^-1 * (image of x_i under the braid's representation) per strand.
Tietze simplification eliminates generators that occur exactly once in
some relator; abelian invariants come from the Smith normal form of the
exponent-sum matrix.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .braid import BraidWord
from .freegroup import (
    Ambient,
    Word,
    YID,
    format_word,
    gen_name,
    parse_word,
)
from . import reps

# Tietze substitution can blow up; stop once the total relator letter
# count passes this and report the condition instead of truncating.
TIETZE_BUDGET = 10 ** 5


def _ambient_for(gens: tuple[int, ...]) -> Ambient:
    nx = max((g for g in gens if g != YID), default=0)
    return Ambient(nx, YID in gens)


class Presentation:
    """Ordered generator list plus cyclically reduced relator words.

    Trivial relators are dropped at construction; every relator letter
    must name a listed generator.
    """

    __slots__ = ("generators", "relators", "ambient")

    def __init__(self, generators, relators=()):
        generators = tuple(generators)
        if len(set(generators)) != len(generators):
            raise ValueError("duplicate generators")
        ambient = _ambient_for(generators)
        gen_set = set(generators)
        cleaned = []
        for r in relators:
            if not isinstance(r, Word) or r.ambient != ambient:
                raise ValueError("relators must be words over the presentation ambient")
            core, _ = r.cyclic_reduce()
            if not core:
                continue
            for v in core.letters:
                if abs(v) not in gen_set:
                    raise ValueError(f"relator uses unknown generator {gen_name(abs(v))}")
            cleaned.append(core)
        self.generators = generators
        self.relators = tuple(cleaned)
        self.ambient = ambient

    def total_letters(self) -> int:
        return sum(len(r) for r in self.relators)

    def __eq__(self, other):
        return (
            isinstance(other, Presentation)
            and self.generators == other.generators
            and self.relators == other.relators
        )

    def __hash__(self):
        return hash((self.generators, self.relators))

    def __repr__(self):
        gens = " ".join(gen_name(g) for g in self.generators)
        return f"Presentation(<{gens} | {len(self.relators)} relators>)"


def _relators_from(rep: reps.Representation, b: BraidWord) -> Presentation:
    e = rep.evaluate(b)
    gens = rep.ambient.gens()
    relators = []
    for i in range(1, b.strands + 1):
        xi = Word(rep.ambient, (-i,))
        relators.append(xi * e.images[i])
    return Presentation(gens, relators)


def group_of_virtual_link(b: BraidWord) -> Presentation:
    """<x1..xn, y | x_i = (image of x_i)> for a virtual braid word."""
    if b.theory != "virtual":
        raise ValueError(f"expected a virtual braid, got {b.theory}")
    return _relators_from(reps.virtual(b.strands), b)


def group_of_welded_link(b: BraidWord) -> Presentation:
    """<x1..xn | x_i = (image of x_i)> for a welded braid word."""
    if b.theory != "welded":
        raise ValueError(f"expected a welded braid, got {b.theory}")
    return _relators_from(reps.welded(b.strands), b)


def group_of_classical_link(b: BraidWord) -> Presentation:
    """The link group presentation from the Artin action of a classical braid."""
    if b.theory != "classical":
        raise ValueError(f"expected a classical braid, got {b.theory}")
    return _relators_from(reps.artin(b.strands), b)


def wada_group(b: BraidWord, k: int, h: int = 1) -> Presentation:
    """The Wada group of type k (k = 1 or 2) of a welded braid word.

    Types 3 and 4 are rejected: they do not give welded invariants since
    the mixed relation alpha_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i
    alpha_{i+1} is not preserved by their automorphisms.
    """
    if b.theory != "welded":
        raise ValueError(f"expected a welded braid, got {b.theory}")
    if k not in (1, 2):
        raise ValueError(
            f"Wada type {k} does not induce a welded-braid homomorphism "
            "(the mixed relation alpha_i sigma_(i+1) sigma_i = "
            "sigma_(i+1) sigma_i alpha_(i+1) fails); only types 1 and 2 "
            "define link invariants"
        )
    return _relators_from(reps.wada(b.strands, k, h), b)


def quotient_y(p: Presentation) -> Presentation:
    """Kill the distinguished generator: remove y from the generator list
    and delete every y letter from every relator."""
    if YID not in p.generators:
        raise ValueError("presentation has no y generator")
    gens = tuple(g for g in p.generators if g != YID)
    ambient = _ambient_for(gens)
    relators = [
        Word(ambient, tuple(v for v in r.letters if abs(v) != YID)) for r in p.relators
    ]
    return Presentation(gens, relators)


# ---------------------------------------------------------------------------
# Tietze simplification


def _gen_sort_key(gid: int):
    # x generators by index, y always last
    return (1, 0) if gid == YID else (0, gid)


def tietze_step(p: Presentation) -> Optional[Presentation]:
    """One elimination: find the shortest relator containing a generator
    that occurs in it exactly once (lowest generator index breaking ties),
    solve for that generator, substitute everywhere, and drop both.

    Returns None at a fixpoint.
    """
    best = None
    for ri, r in enumerate(p.relators):
        counts: dict[int, int] = {}
        for v in r.letters:
            counts[abs(v)] = counts.get(abs(v), 0) + 1
        for gid, c in counts.items():
            if c == 1:
                key = (len(r), _gen_sort_key(gid), ri)
                if best is None or key < best[0]:
                    best = (key, ri, gid)
    if best is None:
        return None
    _, ri, gid = best
    rel = p.relators[ri].letters
    pos = next(k for k, v in enumerate(rel) if abs(v) == gid)
    u, eps, v = rel[:pos], rel[pos], rel[pos + 1 :]
    inv = lambda ls: tuple(-w for w in reversed(ls))
    if eps > 0:
        # u g v = 1  =>  g = u^-1 v^-1
        solved = inv(u) + inv(v)
    else:
        # u g^-1 v = 1  =>  g = v u
        solved = v + u

    def substitute(letters):
        out = []
        for w in letters:
            if abs(w) == gid:
                out.extend(solved if w > 0 else inv(solved))
            else:
                out.append(w)
        return out

    gens = tuple(g for g in p.generators if g != gid)
    new_ambient = p.ambient  # keep the ambient; membership is checked per generator list
    relators = [
        Word(new_ambient, substitute(r.letters))
        for k, r in enumerate(p.relators)
        if k != ri
    ]
    # rebuild against the shrunken generator list (same ambient indices)
    return _rebuild(gens, relators)


def _rebuild(gens, relator_words) -> Presentation:
    ambient = _ambient_for(gens)
    rebuilt = [Word(ambient, w.letters) for w in relator_words]
    return Presentation(gens, rebuilt)


@dataclass(frozen=True)
class TietzeResult:
    presentation: Presentation
    exhausted: bool
    steps: int


def tietze_simplify(p: Presentation, budget: int = TIETZE_BUDGET) -> TietzeResult:
    """Eliminate until no generator occurs exactly once in any relator, or
    until the total relator letter count exceeds the budget (in which case
    the smallest presentation seen so far is returned, flagged)."""
    best = p
    steps = 0
    current = p
    while True:
        nxt = tietze_step(current)
        if nxt is None:
            return TietzeResult(current, False, steps)
        steps += 1
        current = nxt
        if current.total_letters() <= best.total_letters():
            best = current
        if current.total_letters() > budget:
            return TietzeResult(best, True, steps)


def free_rank_certificate(p: Presentation, budget: int = TIETZE_BUDGET) -> Optional[int]:
    """The rank if simplification reaches zero relators; None is
    inconclusive, not a proof of non-freeness."""
    res = tietze_simplify(p, budget)
    if not res.exhausted and not res.presentation.relators:
        return len(res.presentation.generators)
    return None


# ---------------------------------------------------------------------------
# Integer matrices, Smith normal form, abelian invariants


class IntegerMatrix:
    """A rectangular matrix of exact integers."""

    __slots__ = ("rows", "_ncols")

    def __init__(self, rows, ncols: Optional[int] = None):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        self.rows = rows
        self._ncols = len(rows[0]) if rows else (ncols or 0)

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return self._ncols

    @staticmethod
    def identity(k: int) -> "IntegerMatrix":
        return IntegerMatrix([[1 if i == j else 0 for j in range(k)] for i in range(k)])

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = other.ncols
        return IntegerMatrix(
            [
                [sum(a * other.rows[k][j] for k, a in enumerate(row)) for j in range(cols)]
                for row in self.rows
            ]
        )

    def __eq__(self, other):
        return isinstance(other, IntegerMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"IntegerMatrix({[list(r) for r in self.rows]})"

    def determinant(self) -> int:
        """Fraction-free (Bareiss) determinant; square matrices only."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return 1
        a = [list(r) for r in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


def relation_matrix(p: Presentation) -> IntegerMatrix:
    """Rows = relators, columns = generators, entries = exponent sums."""
    col = {g: j for j, g in enumerate(p.generators)}
    rows = []
    for r in p.relators:
        row = [0] * len(p.generators)
        for v in r.letters:
            row[col[abs(v)]] += 1 if v > 0 else -1
        rows.append(row)
    return IntegerMatrix(rows, ncols=len(p.generators))


@dataclass(frozen=True)
class SmithForm:
    diagonal: tuple[int, ...]
    U: IntegerMatrix
    V: IntegerMatrix
    D: IntegerMatrix


def smith_normal_form(m: IntegerMatrix) -> SmithForm:
    """Diagonalize by unimodular row/column operations: U @ m @ V = D with
    d1 | d2 | ... and nonnegative diagonal.  The factorization is verified
    by multiplication before returning."""
    R, C = m.nrows, m.ncols
    a = [list(r) for r in m.rows]
    u = [[1 if i == j else 0 for j in range(R)] for i in range(R)]
    v = [[1 if i == j else 0 for j in range(C)] for i in range(C)]

    def row_sub(i, j, q):  # row i -= q * row j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_sub(i, j, q):  # col i -= q * col j
        for r in a:
            r[i] -= q * r[j]
        for r in v:
            r[i] -= q * r[j]

    t = 0
    while t < R and t < C:
        # pivot: smallest magnitude nonzero in the trailing block
        pivot = None
        for i in range(t, R):
            for j in range(t, C):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for r in a:
                r[t], r[pj] = r[pj], r[t]
            for r in v:
                r[t], r[pj] = r[pj], r[t]
        dirty = False
        for i in range(t + 1, R):
            if a[i][t]:
                q = a[i][t] // a[t][t]
                row_sub(i, t, q)
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, C):
            if a[t][j]:
                q = a[t][j] // a[t][t]
                col_sub(j, t, q)
                if a[t][j]:
                    dirty = True
        if dirty:
            continue  # remainders became new, smaller pivot candidates
        # pivot must divide the rest of the block
        offender = None
        for i in range(t + 1, R):
            for j in range(t + 1, C):
                if a[i][j] % a[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
            u[t] = [x + y for x, y in zip(u[t], u[offender])]
            continue
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    U = IntegerMatrix(u)
    V = IntegerMatrix(v)
    D = IntegerMatrix(a)
    if U @ m @ V != D:
        raise AssertionError("smith normal form verification failed")
    diag = tuple(a[k][k] for k in range(min(R, C)))
    for b, c in zip(diag, diag[1:]):
        if b and c % b:
            raise AssertionError("divisibility chain violated")
        if b == 0 and c != 0:
            raise AssertionError("zero before nonzero on the diagonal")
    return SmithForm(diag, U, V, D)


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self):
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def abelian_invariants(p: Presentation) -> AbelianInvariants:
    """Free rank and torsion coefficients of the abelianized group, from
    the Smith normal form of the relation matrix."""
    if not p.relators:
        return AbelianInvariants(len(p.generators), ())
    snf = smith_normal_form(relation_matrix(p))
    rank = sum(1 for d in snf.diagonal if d)
    torsion = tuple(d for d in snf.diagonal if d >= 2)
    return AbelianInvariants(len(p.generators) - rank, torsion)


# ---------------------------------------------------------------------------
# Text and structured serialization


def format_presentation(p: Presentation, structured: bool = False) -> str:
    if structured:
        payload = {
            "generators": [gen_name(g) for g in p.generators],
            "relators": [format_word(r) for r in p.relators],
        }
        return json.dumps(payload)
    lines = ["gens: " + " ".join(gen_name(g) for g in p.generators)]
    lines += ["rel: " + format_word(r) for r in p.relators]
    return "\n".join(lines)


def _gid_of(name: str) -> int:
    if name == "y":
        return YID
    if name.startswith("x") and name[1:].isdigit() and not name[1:].startswith("0"):
        return int(name[1:])
    raise ValueError(f"bad generator name {name!r}")


def parse_presentation(text: str) -> Presentation:
    """Read either the line-oriented text form or the structured JSON form."""
    text = text.strip()
    if not text:
        raise ValueError("empty presentation input")
    if text.startswith("{"):
        payload = json.loads(text)
        gens = tuple(_gid_of(n) for n in payload["generators"])
        ambient = _ambient_for(gens)
        relators = [parse_word(s, ambient) for s in payload.get("relators", [])]
        return Presentation(gens, relators)
    gens = None
    rel_lines = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("gens:"):
            if gens is not None:
                raise ValueError("duplicate gens line")
            names = line[len("gens:") :].split()
            gens = tuple(_gid_of(n) for n in names)
        elif line.startswith("rel:"):
            rel_lines.append(line[len("rel:") :].strip())
        else:
            raise ValueError(f"bad presentation line {line!r}")
    if gens is None:
        raise ValueError("missing gens line")
    ambient = _ambient_for(gens)
    return Presentation(gens, [parse_word(s, ambient) for s in rel_lines])
