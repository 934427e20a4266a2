import pytest

from milnorfibre.errors import Unsupported
from milnorfibre.validate import run_all, suite_for


def test_run_all_passes():
    reports = run_all()
    failed = [r.line() for r in reports if not r.passed]
    assert not failed, failed
    assert len(reports) > 200
    assert all(r.anchor for r in reports)


@pytest.mark.parametrize("descriptor", ["sym:3", "sym:4", "sym:5", "dihedral:7", "imprimitive:4,2,2", "table1:G4"])
def test_suite_for(descriptor):
    reports = suite_for(descriptor)
    assert reports and all(r.passed for r in reports)


def test_suite_for_unknown():
    with pytest.raises(Unsupported):
        suite_for("dihedral:99")
