import pytest

from fusionsys.classify import (
    enumerate_saturated,
    is_fusion_trivial,
    is_resistant,
)
from fusionsys.errors import ClassifierCapExceeded
from fusionsys.registry import named_group
from fusionsys.saturation import is_saturated


def test_classify_d8():
    P = named_group("D8").full_subgroup
    result = enumerate_saturated(P, 2)
    assert len(result) == 3
    ranks = sorted(cs.essentials.rank for cs in result.systems)
    assert ranks == [0, 1, 2]
    tags = {cs.essentials.rank: cs.realization for cs in result.systems}
    assert tags[1] == "S4"
    assert tags[2] == "GL(3,2)"
    for cs in result.systems:
        assert is_saturated(cs.system).saturated


def test_classify_d8_stats():
    P = named_group("D8").full_subgroup
    result = enumerate_saturated(P, 2)
    assert result.stats["generated_and_tested"] \
        >= result.stats["saturated_up_to_iso"] == 3


def test_classify_klein_four():
    P = named_group("V4").full_subgroup
    result = enumerate_saturated(P, 2)
    assert len(result) == 2
    counts = sorted(cs.system.iso_count() for cs in result.systems)
    assert counts[0] < counts[1]


def test_classify_q8():
    P = named_group("Q8").full_subgroup
    result = enumerate_saturated(P, 2)
    assert len(result) == 2
    tags = sorted(str(cs.realization) for cs in result.systems)
    assert "SL(2,3)" in tags


def test_classify_d16():
    P = named_group("D16").full_subgroup
    result = enumerate_saturated(P, 2)
    assert len(result) == 3
    tags = {cs.realization for cs in result.systems}
    assert "PGL(2,7)" in tags
    assert "PSL(2,17)" in tags


def test_resistance():
    # abelian p-groups are resistant; D8 carries the S4 and GL(3,2) systems
    assert is_resistant(named_group("V4").full_subgroup, 2) is True
    assert is_resistant(named_group("C4").full_subgroup, 2) is True
    assert is_resistant(named_group("D8").full_subgroup, 2) is False


def test_fusion_trivial_p_groups():
    assert is_fusion_trivial(named_group("C4xC2").full_subgroup, 2)
    assert not is_fusion_trivial(named_group("V4").full_subgroup, 2)
    assert not is_fusion_trivial(named_group("D8").full_subgroup, 2)


def test_metacyclic_odd_controlled():
    P = named_group("C9:C3").full_subgroup
    result = enumerate_saturated(P, 3)
    for cs in result.systems:
        assert cs.essentials.rank == 0


def test_classifier_cap():
    from fusionsys.config import Caps
    caps = Caps(classifier=8, classifier_max=8)
    with pytest.raises(ClassifierCapExceeded):
        enumerate_saturated(named_group("D16").full_subgroup, 2, caps=caps)


def test_classified_systems_pairwise_distinct():
    P = named_group("D8").full_subgroup
    result = enumerate_saturated(P, 2)
    tables = [frozenset((k, frozenset(m.key for m in v))
                        for k, v in cs.system._isos.items())
              for cs in result.systems]
    assert len(set(tables)) == len(tables)
