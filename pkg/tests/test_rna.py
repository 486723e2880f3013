import pytest

from stuquandle import (
    ArcDiagram,
    DanglingEnd,
    MalformedStripe,
    StrandCrossing,
    Stripe,
    Stuck,
    build_stuquandle,
    compile_diagram,
    enumerate_colorings,
    folding_invariant,
    self_closure,
    to_crossing_diagram,
)
from stuquandle.catalog import fixture
from stuquandle.presentation import Relation

X74 = fixture("X_ex74").payload
ONE = build_stuquandle(1, [[0]], [[0]], [[0]], [[0]], [[0]])

RNA1 = fixture("rna_K1_ex74").payload
RNA2 = fixture("rna_K2_ex74").payload


def test_stripe_free_strand_is_single_arc():
    d = to_crossing_diagram(ArcDiagram(1))
    assert d.arc_count == 1
    assert d.crossings == ()
    assert d.open_ends == ((0, 0),)


def test_stripe_free_strand_closes_to_unknot():
    pres = compile_diagram(self_closure(to_crossing_diagram(ArcDiagram(1))))
    assert pres.generator_count == 1
    assert pres.relations == ()


def test_one_stuck_crossing_per_stripe():
    for arc in (RNA1, RNA2):
        d = to_crossing_diagram(arc)
        stuck = [c for c in d.crossings if isinstance(c, Stuck)]
        assert len(stuck) == len(arc.stripes)


def test_two_strand_single_stripe_closure():
    # both strands close to themselves: one arc each, one stuck crossing
    arc = ArcDiagram(2, (Stripe(0, 1, 10, 10, 1),))
    closed = self_closure(to_crossing_diagram(arc))
    assert closed.arc_count == 2
    assert closed.crossings == (Stuck(1, 0, 1, 0, 1),)


def test_positions_listing():
    assert RNA1.positions == ((10, 30),)
    assert RNA2.positions == ((10,), (15,))


def test_malformed_stripes_rejected():
    with pytest.raises(MalformedStripe):
        ArcDiagram(1, (Stripe(0, 0, 10, 10, 1),))  # duplicate bond site
    with pytest.raises(MalformedStripe):
        ArcDiagram(1, (Stripe(0, 1, 10, 20, 1),))  # missing strand
    with pytest.raises(MalformedStripe):
        ArcDiagram(1, (Stripe(0, 0, 10, 20, 0),))  # bad sign
    with pytest.raises(MalformedStripe):
        ArcDiagram(
            1,
            (Stripe(0, 0, 10, 20, 1),),
            (StrandCrossing(0, 10, 0, 30, 1),),  # crossing on a bond site
        )


def test_double_closure_raises():
    closed = self_closure(to_crossing_diagram(RNA1))
    with pytest.raises(DanglingEnd):
        self_closure(closed)


def test_folding_converter_reference_presentations():
    pres1 = compile_diagram(self_closure(to_crossing_diagram(RNA1)))
    assert pres1.generator_count == 3
    assert pres1.relations == (
        Relation(2, "R3", 0, 1),
        Relation(0, "R4", 0, 1),
        Relation(1, "~*", 2, 0),
    )
    pres2 = compile_diagram(self_closure(to_crossing_diagram(RNA2)))
    assert pres2.generator_count == 3
    assert pres2.relations == (
        Relation(2, "R3", 0, 1),
        Relation(1, "R4", 0, 1),
        Relation(0, "~*", 2, 1),
    )


def test_folding_reference_coloring_sets():
    pres1 = compile_diagram(self_closure(to_crossing_diagram(RNA1)))
    assert enumerate_colorings(pres1, X74) == [
        (0, 0, 0), (1, 3, 3), (2, 2, 2), (3, 1, 1),
    ]
    pres2 = compile_diagram(self_closure(to_crossing_diagram(RNA2)))
    assert enumerate_colorings(pres2, X74) == [
        (0, 0, 0), (0, 2, 0), (2, 0, 2), (2, 2, 2),
    ]


def test_folding_invariant_reports():
    rep1 = folding_invariant(RNA1, X74)
    rep2 = folding_invariant(RNA2, X74)
    assert rep1.counting == rep2.counting == 4
    assert rep1.counting == rep1.phi.total()
    assert rep1.phi != rep2.phi  # the enhancement separates the foldings


def test_folding_invariant_matches_sweep():
    import oracles
    for arc in (RNA1, RNA2):
        rep = folding_invariant(arc, X74)
        assert rep.counting == len(oracles.sweep_colorings(rep.presentation, X74))


def test_stripe_free_with_one_element_target():
    assert folding_invariant(ArcDiagram(1), ONE).counting == 1


def test_folding_counting_for_stripe_free_strand():
    assert folding_invariant(ArcDiagram(1), X74).counting == X74.n
