"""The acceptance gate: every top-level guarantee of the package, each
checked at exact equality, one test per criterion."""

import pytest

from genus_forge import acceptance


@pytest.mark.parametrize(
    "number,title,fn",
    acceptance.CRITERIA,
    ids=[f"{num:02d}-{title}" for num, title, _ in acceptance.CRITERIA])
def test_criterion(number, title, fn):
    ok, detail = fn(acceptance.DEFAULT_SEED)
    assert ok, f"criterion {number} ({title}): {detail}"
