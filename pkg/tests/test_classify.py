import importlib

import pytest

from dgroups.classify import (
    ClassificationInconsistency,
    classify,
    recognize,
    recognize_only,
)
from dgroups.families import (
    alternating,
    c4_frobenius,
    cyclic,
    dihedral,
    elementary_abelian,
    frobenius_pq,
    generalized_quaternion,
    mersenne_frobenius,
    psl2,
    symmetric,
)

classify_mod = importlib.import_module("dgroups.classify")


@pytest.mark.parametrize("G, defect, label", [
    (cyclic(1), 0, "Trivial"),
    (cyclic(11), 0, "Cp(11)"),
    (frobenius_pq(11, 5), 0, "FrobeniusPQ(11,5)"),
    (mersenne_frobenius(3), 1, "MersenneFrobenius(3,7)"),
    (mersenne_frobenius(5), 1, "MersenneFrobenius(5,31)"),
    (symmetric(4), 2, "OutsideD0D1(2)"),
    (psl2(7), 1, "PSL27"),
    (c4_frobenius(17), 1, "CqC4(17)"),
], ids=["C1", "C11", "F55", "E8C7", "E32C31", "S4", "PSL27", "C17C4"])
def test_classify(G, defect, label):
    v = classify(G)
    assert (v.defect, v.label) == (defect, label)
    assert ("order", G.order) in v.evidence


@pytest.mark.parametrize("G, claim, expected", [
    (alternating(4), "MersenneFrobenius(2,3)", True),
    (alternating(4), "MersenneFrobenius", True),
    (cyclic(9), "Cp", False),
    (dihedral(9), "D18", True),
    (dihedral(6), "D18", False),
    (psl2(5), "A5", True),
    (generalized_quaternion(8), "Q8", True),
    (dihedral(4), "Q8", False),
    (symmetric(3), "FrobeniusPQ(3,2)", True),
    (symmetric(3), "FrobeniusPQ(2,3)", False),
    (cyclic(6), "FrobeniusPQ", False),
])
def test_recognize_only(G, claim, expected):
    assert recognize_only(G, claim) is expected


def test_recognize_only_does_not_need_defect(monkeypatch):
    def boom(G):
        raise AssertionError("defect consulted")
    monkeypatch.setattr(classify_mod, "defect", boom)
    assert recognize_only(mersenne_frobenius(3), "MersenneFrobenius(3,7)")


def test_unknown_form():
    with pytest.raises(ValueError):
        recognize_only(cyclic(2), "Nope")


def test_inconsistency_is_raised(monkeypatch):
    monkeypatch.setitem(classify_mod._RECOGNIZERS, "Cp", lambda G, ev: None)
    with pytest.raises(ClassificationInconsistency):
        classify(cyclic(7))


def test_recognize_agrees_with_classify(corpus_groups):
    for name, G in corpus_groups:
        v = classify(G)
        if v.defect in (0, 1):
            assert recognize(G, v.form) == v.params, name


def test_form_invariant_split(corpus_groups):
    for name, G in corpus_groups:
        v = classify(G)
        if v.form in classify_mod.D0_FORMS:
            assert v.defect == 0
        elif v.form in classify_mod.D1_FORMS:
            assert v.defect == 1
        else:
            assert v.defect >= 2 and v.params == (v.defect,)
