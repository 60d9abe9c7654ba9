import pytest

from pcgroup.corpus import data_directory
from pcgroup.errors import ParseError, PresentationError
from pcgroup.parsing import format_presentation, load_presentation_file, parse_presentation, parse_word
from pcgroup.pcp.words import Commutator, FreeWord, Generator, comm, gen

HEADER = "prime 5\ngenerators a, b, u1\nrelators "


def test_power_relator():
    fp = parse_presentation(HEADER + "a^5")
    assert fp.relators == (gen("a", 5),)


def test_product_of_commutators():
    fp = parse_presentation(HEADER + "[b,a,a,a,b]*[a,u1]")
    (word,) = fp.relators
    first, second = word.factors
    assert isinstance(first, Commutator) and len(first.args) == 5
    assert second == Commutator((gen("a"), gen("u1")))
    assert word == comm("b", "a", "a", "a", "b") * comm("a", "u1")


def test_relation():
    fp = parse_presentation(HEADER + "[b,a]^5 = [b,a,a,a,b]")
    assert fp.relators == ()
    assert fp.relations == ((comm("b", "a", exponent=5), comm("b", "a", "a", "a", "b")),)


def test_juxtaposition_and_inverses():
    fp = parse_presentation(HEADER + "a b^-1 * u1^2")
    assert fp.relators == (FreeWord((Generator("a"), Generator("b", -1), Generator("u1", 2))),)


def test_identity_and_nested_commutators():
    fp = parse_presentation(HEADER + "[a*b, [b, a]] = 1")
    ((lhs, rhs),) = fp.relations
    assert rhs == FreeWord()
    assert lhs == comm(gen("a") * gen("b"), comm("b", "a"))


def test_headers():
    fp = parse_presentation("# a comment\nname demo\nprime 3\nclass 4\ngenerators x\nrelators x^9")
    assert (fp.name, fp.p, fp.max_class, fp.generators) == ("demo", 3, 4, ("x",))
    assert fp.comments == ("a comment",)


def test_parse_word():
    assert parse_word("[b,a,a,a]", ["a", "b"]) == comm("b", "a", "a", "a")
    with pytest.raises(ParseError):
        parse_word("a ]", ["a"])


@pytest.mark.parametrize(
    "text, line, column, message",
    [
        (HEADER + "a^5, c", 3, 15, "unknown generator"),
        (HEADER + "a^0", 3, 10, "zero exponent"),
        (HEADER + "[a]", 3, 10, "at least two entries"),
        (HEADER + "a % b", 3, 12, "unexpected character"),
        ("prime 5\nrelators a", 2, 1, "must follow the generators"),
        ("prime 5\nprime 7\ngenerators a", 2, 1, "duplicate header"),
        ("prime 4\ngenerators a", 1, 1, "prime"),
        ("prime 5\ngenerators a, a", 2, 15, "duplicate generator"),
    ],
)
def test_errors_carry_position(text, line, column, message):
    with pytest.raises(ParseError) as info:
        parse_presentation(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert message in str(info.value)


def test_missing_headers():
    with pytest.raises(ParseError, match="prime"):
        parse_presentation("generators a")
    with pytest.raises(ParseError, match="end of input"):
        parse_presentation("prime 5\ngenerators a\nrelators a^")


@pytest.mark.parametrize("path", sorted(data_directory().glob("*.grp")), ids=lambda p: p.stem)
def test_corpus_files_survive_formatting(path):
    fp = load_presentation_file(path)
    again = parse_presentation(format_presentation(fp))
    assert again == fp
    assert again.comments == fp.comments


def test_unreadable_file(tmp_path):
    with pytest.raises(PresentationError):
        load_presentation_file(tmp_path / "missing.grp")


def test_file_that_is_not_utf8(tmp_path):
    path = tmp_path / "latin1.grp"
    path.write_bytes(b"prime 3\ngenerators \xe9\nrelators \xe9^3\n")
    with pytest.raises(PresentationError, match="not UTF-8"):
        load_presentation_file(path)
