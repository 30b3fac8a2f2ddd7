import pytest

import pyamalg

AXIS = """field p=101
ring A vars x:1 ideal:
ring B vars X:1, Y:1 ideal:
hom f A -> B : x -> X
ideal J in B : X, Y
amalgam W : f, J
"""


def test_present_and_classify():
    s = pyamalg.parse(AXIS)
    assert s.declaration_count == 5
    report = s.present("W")
    assert report.value("K") == "x*z1 - z1^2, x*z2 - z1*z2"
    assert report.value("certificate") == "Certified"
    c = pyamalg.classify(s, "W")
    assert (c["dim"], c["depth"], c["cm"]) == ("2", "1", "false")


def test_run_matches_direct_call():
    s = pyamalg.parse(AXIS, prime=32003)
    assert s.prime == 32003
    assert str(s.run("present W")) == str(s.present("W"))


def test_errors_are_translated():
    with pytest.raises(pyamalg.AmalgError) as info:
        pyamalg.parse("ring A vars x:1 ideal:\nhom f A -> Q : x -> x\n")
    assert info.value.code == "UnknownReference"
    assert "line 2" in str(info.value)


def test_verify_paper_report():
    report = pyamalg.verify_paper()
    lines = dict(report.lines)
    assert lines["item_1"] == "PASS"
    assert lines["item_10"] == "PASS"
    assert "result" in lines
