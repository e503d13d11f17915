import pytest

from starchi.starforest import PatternError, StarForest, parse_pattern


@pytest.mark.parametrize(
    "text, stars",
    [
        ("star:3+star:1+star:1", (1, 1, 3)),
        ("K1,3+2xK2", (1, 1, 3)),
        ("K_{1,2}", (2,)),
        ("K1", (0,)),
        ("3xstar:0", (0, 0, 0)),
        ("empty", ()),
        ("", ()),
        (" k2 + K1,2 ", (1, 2)),
    ],
)
def test_parse(text, stars):
    assert parse_pattern(text).stars == stars


@pytest.mark.parametrize("text", ["K3", "star:", "0xK2", "P4", "K1,3++K2"])
def test_parse_errors(text):
    with pytest.raises(PatternError):
        parse_pattern(text)


def test_canonical_and_order():
    h = StarForest([3, 0, 1])
    assert h.stars == (0, 1, 3)
    assert h.order == 7
    assert h == StarForest([1, 3, 0])
    assert h.without(3) == StarForest([0, 1])
    assert parse_pattern(str(h)) == h
    assert str(StarForest()) == "empty"


def test_negative_rejected():
    with pytest.raises(PatternError):
        StarForest([-1])
