"""Tests for the size caps."""

import pytest
from pydantic import ValidationError

from sit_rings.config import Caps
from sit_rings.config import check_analysis
from sit_rings.config import check_construction
from sit_rings.config import get_caps
from sit_rings.config import use_caps
from sit_rings.exceptions import CapExceeded


def test_defaults():
    caps = get_caps()
    assert caps.construction == 65_536
    assert caps.analysis == 4_096


def test_uniform():
    assert Caps.uniform(10) == Caps(construction=10, analysis=10)


def test_caps_must_be_positive():
    with pytest.raises(ValidationError):
        Caps(analysis=0)


def test_use_caps_nests():
    with use_caps(Caps.uniform(50)):
        with use_caps(Caps.uniform(5)):
            assert get_caps().analysis == 5
        assert get_caps().analysis == 50
    assert get_caps() == Caps()


def test_checks():
    with use_caps(Caps(construction=8, analysis=4)):
        check_construction(8, "ring")
        check_analysis(4, "ring")
        with pytest.raises(CapExceeded, match="construction cap is 8"):
            check_construction(9, "ring")
        with pytest.raises(CapExceeded) as exc_info:
            check_analysis(5, "ring")
    assert exc_info.value.context == {"order": 5, "cap": 4, "what": "ring"}
