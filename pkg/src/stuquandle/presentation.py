"""Stuck-link diagrams as finite presentations, and their coloring invariants.

A presentation lists relations out = op(lhs, rhs) over a set of generators
(the diagram arcs).  Crossing diagrams are a thin convenience layer that
compiles to presentations; colorings by a finite stuquandle are enumerated
with constraint propagation and backtracking.
"""

from __future__ import annotations

import itertools
import string
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .algebra import FiniteStuquandle, Subset, substuquandle_closure
from .errors import IndexOutOfRange
from .polynomial import PolynomialMultiset, substuquandle_polynomial

STAR = "*"
STAR_INV = "~*"
R1 = "R1"
R2 = "R2"
R3 = "R3"
R4 = "R4"
OPS = (STAR, STAR_INV, R1, R2, R3, R4)


@dataclass(frozen=True)
class Relation:
    """out = op(lhs, rhs) over generator indices."""

    out: int
    op: str
    lhs: int
    rhs: int

    def __post_init__(self):
        if self.op not in OPS:
            raise ValueError(f"unknown operation {self.op!r}")


@dataclass(frozen=True)
class Presentation:
    generator_count: int
    relations: tuple[Relation, ...] = ()
    name: str = ""
    generator_names: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))
        object.__setattr__(self, "generator_names", tuple(self.generator_names))
        if self.generator_count < 1:
            raise ValueError("a presentation needs at least one generator")
        if self.generator_names and len(self.generator_names) != self.generator_count:
            raise ValueError("generator_names length mismatch")
        for rel in self.relations:
            for idx in (rel.out, rel.lhs, rel.rhs):
                if not 0 <= idx < self.generator_count:
                    raise IndexOutOfRange(
                        f"generator index {idx} outside 0..{self.generator_count - 1}"
                    )

    def generator_label(self, i: int) -> str:
        if self.generator_names:
            return self.generator_names[i]
        if self.generator_count <= 26:
            return string.ascii_lowercase[i]
        return f"g{i}"

    def to_text(self) -> str:
        """One relation per line; infix for * and ~*, prefix for R1..R4."""
        lines = []
        for rel in self.relations:
            out = self.generator_label(rel.out)
            lhs = self.generator_label(rel.lhs)
            rhs = self.generator_label(rel.rhs)
            if rel.op in (STAR, STAR_INV):
                lines.append(f"{out} = {lhs} {rel.op} {rhs}")
            else:
                lines.append(f"{out} = {rel.op}({lhs}, {rhs})")
        return "\n".join(lines)


@dataclass(frozen=True)
class Classical:
    """Classical crossing: the under strand runs under_in -> under_out."""

    sign: int
    over: int
    under_in: int
    under_out: int

    def arcs(self):
        return (self.over, self.under_in, self.under_out)


@dataclass(frozen=True)
class Stuck:
    """Stuck crossing: strand one runs in1 -> out1, strand two in2 -> out2."""

    sign: int
    in1: int
    in2: int
    out1: int
    out2: int

    def arcs(self):
        return (self.in1, self.in2, self.out1, self.out2)


@dataclass(frozen=True)
class CrossingDiagram:
    """Arcs 0..arc_count-1 plus crossings; open_ends lists, per open strand,
    the (first_arc, last_arc) pair that self-closure will identify."""

    arc_count: int
    crossings: tuple = ()
    open_ends: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        object.__setattr__(self, "open_ends", tuple(self.open_ends))
        if self.arc_count < 1:
            raise ValueError("a diagram needs at least one arc")
        for c in self.crossings:
            if c.sign not in (1, -1):
                raise ValueError(f"crossing sign must be +1 or -1, got {c.sign}")
            for a in c.arcs():
                if not 0 <= a < self.arc_count:
                    raise IndexOutOfRange(f"arc index {a} outside 0..{self.arc_count - 1}")
        for first, last in self.open_ends:
            for a in (first, last):
                if not 0 <= a < self.arc_count:
                    raise IndexOutOfRange(f"arc index {a} outside 0..{self.arc_count - 1}")


def compile_diagram(d: CrossingDiagram, name: str = "") -> Presentation:
    """Translate crossings into relations.

    Classical, positive:  under_out = under_in * over
    Classical, negative:  under_out = under_in ~* over
    Stuck, positive:      out1 = R1(in1, in2),  out2 = R2(in1, in2)
    Stuck, negative:      out1 = R3(in1, in2),  out2 = R4(in1, in2)
    """
    relations = []
    for c in d.crossings:
        if isinstance(c, Classical):
            op = STAR if c.sign > 0 else STAR_INV
            relations.append(Relation(c.under_out, op, c.under_in, c.over))
        elif isinstance(c, Stuck):
            first, second = (R1, R2) if c.sign > 0 else (R3, R4)
            relations.append(Relation(c.out1, first, c.in1, c.in2))
            relations.append(Relation(c.out2, second, c.in1, c.in2))
        else:
            raise TypeError(f"unknown crossing type {type(c).__name__}")
    return Presentation(d.arc_count, tuple(relations), name=name)


def _op_tables(X: FiniteStuquandle) -> dict:
    return {
        STAR: X.star, STAR_INV: X.star_inv,
        R1: X.r1, R2: X.r2, R3: X.r3, R4: X.r4,
    }


def enumerate_colorings(P: Presentation, X: FiniteStuquandle, jobs: int = 1):
    """All relation-satisfying assignments, in lexicographic order.

    Backtracking over generators in index order; relations whose inputs
    are decided determine their output, and * / ~* relations propagate
    backwards through the column bijections.
    """
    ops = _op_tables(X)
    rels = tuple((r.out, ops[r.op], r.op, r.lhs, r.rhs) for r in P.relations)
    n = X.n

    def propagate(assign: list[int]) -> bool:
        changed = True
        while changed:
            changed = False
            for out, fn, op, lhs, rhs in rels:
                lv, rv, ov = assign[lhs], assign[rhs], assign[out]
                if lv >= 0 and rv >= 0:
                    v = fn(lv, rv)
                    if ov < 0:
                        assign[out] = v
                        changed = True
                    elif ov != v:
                        return False
                elif ov >= 0 and rv >= 0 and op in (STAR, STAR_INV):
                    back = X.star_inv if op == STAR else X.star
                    assign[lhs] = back(ov, rv)
                    changed = True
        return True

    def extend(assign: list[int], found: list):
        try:
            i = assign.index(-1)
        except ValueError:
            found.append(tuple(assign))
            return
        for v in range(n):
            trial = assign.copy()
            trial[i] = v
            if propagate(trial):
                extend(trial, found)

    seed = [-1] * P.generator_count
    if not propagate(seed):
        return []
    results: list[tuple[int, ...]] = []
    if jobs > 1 and seed[0] < 0:
        def branch(v: int):
            trial = seed.copy()
            trial[0] = v
            chunk: list = []
            if propagate(trial):
                extend(trial, chunk)
            return chunk

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(branch, range(n)):
                results.extend(chunk)
    else:
        extend(seed, results)
    return sorted(results)


def brute_force_colorings(P: Presentation, X: FiniteStuquandle):
    """Reference enumeration: sweep the full assignment space."""
    ops = _op_tables(X)
    rels = tuple((r.out, ops[r.op], r.lhs, r.rhs) for r in P.relations)
    out = []
    for assign in itertools.product(range(X.n), repeat=P.generator_count):
        if all(assign[o] == fn(assign[l], assign[r]) for o, fn, l, r in rels):
            out.append(assign)
    return out


def counting_invariant(P: Presentation, X: FiniteStuquandle) -> int:
    return len(enumerate_colorings(P, X))


def coloring_image(coloring, X: FiniteStuquandle) -> Subset:
    """Closure of the assigned values.

    The closure matters: the image of the full homomorphism contains every
    operation word in the generator images, not just the images themselves.
    """
    return substuquandle_closure(Subset(X, tuple(coloring)))


def phi_invariant(P: Presentation, X: FiniteStuquandle, jobs: int = 1) -> PolynomialMultiset:
    """Multiset of image polynomials, one entry per coloring."""
    polys = [
        substuquandle_polynomial(coloring_image(c, X))
        for c in enumerate_colorings(P, X, jobs=jobs)
    ]
    return PolynomialMultiset.from_polynomials(polys)


def add_kink(d: CrossingDiagram, arc: int, sign: int) -> CrossingDiagram:
    """Insert a classical self-crossing on the given arc.

    The new boundary arc x' satisfies x' = x * x (positive) or x' = x ~* x
    (negative), so every coloring forces x' = x.
    """
    if not 0 <= arc < d.arc_count:
        raise IndexOutOfRange(f"arc index {arc} outside 0..{d.arc_count - 1}")
    if sign not in (1, -1):
        raise ValueError(f"kink sign must be +1 or -1, got {sign}")
    new_arc = d.arc_count
    kink = Classical(sign, over=arc, under_in=arc, under_out=new_arc)
    return CrossingDiagram(d.arc_count + 1, d.crossings + (kink,), d.open_ends)


@dataclass(frozen=True)
class InvariantComparison:
    """Counting and multiset invariants of two presentations over one target."""

    left: str
    right: str
    counting_left: int
    counting_right: int
    phi_left: PolynomialMultiset
    phi_right: PolynomialMultiset

    @property
    def verdict(self) -> str:
        return "DISTINGUISHED" if self.phi_left != self.phi_right else "INCONCLUSIVE"

    def to_dict(self) -> dict:
        return {
            "left": {
                "name": self.left,
                "counting": self.counting_left,
                "phi": self.phi_left.render(),
            },
            "right": {
                "name": self.right,
                "counting": self.counting_right,
                "phi": self.phi_right.render(),
            },
            "verdict": self.verdict,
        }


def compare_invariants(P1: Presentation, P2: Presentation, X: FiniteStuquandle) -> InvariantComparison:
    phi1 = phi_invariant(P1, X)
    phi2 = phi_invariant(P2, X)
    return InvariantComparison(
        left=P1.name or "left",
        right=P2.name or "right",
        counting_left=phi1.total(),
        counting_right=phi2.total(),
        phi_left=phi1,
        phi_right=phi2,
    )
