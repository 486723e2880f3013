"""Arc diagrams of strand foldings and their conversion to stuck-link diagrams.

An arc diagram is a set of open strands with gray stripes pairing bond
sites.  Conversion replaces each stripe with one stuck crossing (the
stripe's sign decides which); classical crossings come only from strand
geometry supplied in the input.  Self-closure then joins each strand's two
loose ends, yielding a closed diagram ready for coloring.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import FiniteStuquandle
from .errors import DanglingEnd, MalformedStripe
from .polynomial import PolynomialMultiset
from .presentation import (
    Classical,
    CrossingDiagram,
    Presentation,
    Stuck,
    compile_diagram,
    counting_invariant,
    phi_invariant,
)


@dataclass(frozen=True)
class Stripe:
    """Gray stripe bonding (strand_a, position_a) to (strand_b, position_b)."""

    strand_a: int
    strand_b: int
    position_a: int
    position_b: int
    sign: int


@dataclass(frozen=True)
class StrandCrossing:
    """A classical crossing drawn between strand points: one passage over,
    one under, located by (strand, position)."""

    over_strand: int
    over_position: int
    under_strand: int
    under_position: int
    sign: int


@dataclass(frozen=True)
class ArcDiagram:
    strand_count: int
    stripes: tuple[Stripe, ...] = ()
    classicals: tuple[StrandCrossing, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "stripes", tuple(self.stripes))
        object.__setattr__(self, "classicals", tuple(self.classicals))
        if self.strand_count < 1:
            raise MalformedStripe("an arc diagram needs at least one strand")
        occupied = set()

        def claim(strand: int, position: int, what: str):
            if not 0 <= strand < self.strand_count:
                raise MalformedStripe(f"{what} references missing strand {strand}")
            if (strand, position) in occupied:
                raise MalformedStripe(
                    f"duplicate site at strand {strand}, position {position}"
                )
            occupied.add((strand, position))

        for st in self.stripes:
            if st.sign not in (1, -1):
                raise MalformedStripe(f"stripe sign must be +1 or -1, got {st.sign}")
            claim(st.strand_a, st.position_a, "stripe")
            claim(st.strand_b, st.position_b, "stripe")
        for c in self.classicals:
            if c.sign not in (1, -1):
                raise MalformedStripe(f"crossing sign must be +1 or -1, got {c.sign}")
            claim(c.over_strand, c.over_position, "crossing")
            claim(c.under_strand, c.under_position, "crossing")

    @property
    def positions(self) -> tuple[tuple[int, ...], ...]:
        """Per strand, the ordered bond sites (stripe endpoints)."""
        sites: list[list[int]] = [[] for _ in range(self.strand_count)]
        for st in self.stripes:
            sites[st.strand_a].append(st.position_a)
            sites[st.strand_b].append(st.position_b)
        return tuple(tuple(sorted(s)) for s in sites)


def to_crossing_diagram(a: ArcDiagram) -> CrossingDiagram:
    """Replace each stripe by one stuck crossing; strands stay open.

    Strand segments between cut points become arcs.  Stripe endpoints and
    classical under-passages cut the strand; over-passages do not.
    """
    # events: (position, kind, payload) per strand, kind in stripe/under/over
    events: list[list[tuple]] = [[] for _ in range(a.strand_count)]
    for i, st in enumerate(a.stripes):
        events[st.strand_a].append((st.position_a, "stripe", (i, 0)))
        events[st.strand_b].append((st.position_b, "stripe", (i, 1)))
    for i, c in enumerate(a.classicals):
        events[c.under_strand].append((c.under_position, "under", i))
        events[c.over_strand].append((c.over_position, "over", i))

    stripe_slots: dict[tuple[int, int], tuple[int, int]] = {}
    under_slots: dict[int, tuple[int, int]] = {}
    over_slots: dict[int, int] = {}
    open_ends = []
    arc_count = 0
    for strand in range(a.strand_count):
        current = arc_count
        arc_count += 1
        first = current
        for position, kind, payload in sorted(events[strand]):
            if kind == "over":
                over_slots[payload] = current
                continue
            incoming = current
            current = arc_count
            arc_count += 1
            if kind == "stripe":
                stripe_slots[payload] = (incoming, current)
            else:
                under_slots[payload] = (incoming, current)
        open_ends.append((first, current))

    crossings: list = []
    for i, st in enumerate(a.stripes):
        in1, out1 = stripe_slots[(i, 0)]
        in2, out2 = stripe_slots[(i, 1)]
        crossings.append(Stuck(st.sign, in1, in2, out1, out2))
    for i, c in enumerate(a.classicals):
        under_in, under_out = under_slots[i]
        crossings.append(Classical(c.sign, over_slots[i], under_in, under_out))
    return CrossingDiagram(arc_count, tuple(crossings), tuple(open_ends))


def _renumber_by_first_use(arc_count: int, crossings, remap) -> CrossingDiagram:
    """Compact arc ids, ordering them by first appearance in the crossing
    slots (then any untouched arcs in their old order)."""
    order: dict[int, int] = {}

    def visit(old: int):
        arc = remap[old]
        if arc not in order:
            order[arc] = len(order)

    for c in crossings:
        if isinstance(c, Stuck):
            for slot in (c.in1, c.in2, c.out1, c.out2):
                visit(slot)
        else:
            for slot in (c.over, c.under_in, c.under_out):
                visit(slot)
    for old in range(arc_count):
        visit(old)

    renamed = []
    for c in crossings:
        if isinstance(c, Stuck):
            renamed.append(Stuck(
                c.sign,
                order[remap[c.in1]], order[remap[c.in2]],
                order[remap[c.out1]], order[remap[c.out2]],
            ))
        else:
            renamed.append(Classical(
                c.sign,
                order[remap[c.over]], order[remap[c.under_in]], order[remap[c.under_out]],
            ))
    return CrossingDiagram(len(order), tuple(renamed), ())


def self_closure(d: CrossingDiagram, strand_map=None) -> CrossingDiagram:
    """Join the two ends of every open strand, identifying their boundary
    arcs, and renumber the surviving arcs canonically."""
    if strand_map is None:
        strand_map = d.open_ends
    strand_map = tuple(strand_map)
    if not strand_map:
        raise DanglingEnd("no open strand ends to close")

    remap = list(range(d.arc_count))

    def root(x: int) -> int:
        while remap[x] != x:
            x = remap[x]
        return x

    for first, last in strand_map:
        for arc in (first, last):
            if not 0 <= arc < d.arc_count:
                raise DanglingEnd(f"strand end references missing arc {arc}")
        a, b = root(first), root(last)
        if a != b:
            remap[max(a, b)] = min(a, b)
    resolved = [root(x) for x in range(d.arc_count)]
    return _renumber_by_first_use(d.arc_count, d.crossings, resolved)


@dataclass(frozen=True)
class FoldingReport:
    """Invariants of one folding: its presentation, coloring count, and
    coloring-image polynomial multiset."""

    presentation: Presentation
    counting: int
    phi: PolynomialMultiset

    def __post_init__(self):
        if self.counting != self.phi.total():
            raise ValueError("coloring count and multiset size disagree")


def folding_invariant(a: ArcDiagram, X: FiniteStuquandle, name: str = "") -> FoldingReport:
    """Convert, close, compile, then color by X."""
    closed = self_closure(to_crossing_diagram(a))
    pres = compile_diagram(closed, name=name)
    return FoldingReport(
        presentation=pres,
        counting=counting_invariant(pres, X),
        phi=phi_invariant(pres, X),
    )
