import random
from pathlib import Path

import pytest

from charfib.dsl import (DslError, parse_setup, pipeline_from_setup,
                         print_setup, render_cpn_setup)

SETUP_DIR = Path(__file__).parent.parent / "src" / "charfib" / "setups"
SETUP_FILES = sorted(SETUP_DIR.glob("*.k"))


@pytest.mark.parametrize("path", SETUP_FILES, ids=lambda p: p.stem)
def test_roundtrip_bundled_setups(path):
    spec = parse_setup(path.read_text())
    printed = print_setup(spec)
    again = parse_setup(printed)
    assert again == spec
    assert print_setup(again) == printed
    assert again.setup_hash() == spec.setup_hash()


@pytest.mark.parametrize("path", SETUP_FILES, ids=lambda p: p.stem)
def test_bundled_setups_build(path):
    pl = pipeline_from_setup(parse_setup(path.read_text()), label=path.stem)
    assert pl.rm is not None
    assert pl.lxi.validate() is None


def test_rendered_cpn_matches_bundled():
    bundled = parse_setup((SETUP_DIR / "cpn.k").read_text())
    rendered = parse_setup(render_cpn_setup(2, "complex"))
    assert bundled == rendered


def test_degree_mismatch_reports_location():
    text = ("fiber {\n  x: 4\n  y: 7\n  d y = x^2 + x\n}\n"
            "lie_model {\n  q1: 3 -> p1: 4\n}\n")
    with pytest.raises(DslError) as err:
        parse_setup(text)
    assert err.value.line == 4


def test_d_squared_checked():
    text = ("fiber {\n  u: 1\n  v: 2\n  d u = v\n  d v = u*v\n}\n"
            "lie_model {\n  q1: 3 -> p1: 4\n}\n")
    with pytest.raises(DslError):
        parse_setup(text)


def test_empty_xi_section_ok():
    text = ("fiber {\n  x: 5\n}\nlie_model {\n  q1: 3 -> p1: 4\n}\n"
            "xi {\n}\nholonomy {\n  z = dx\n}\n")
    spec = parse_setup(text)
    assert spec.xi == {}


def test_unknown_section_error():
    with pytest.raises(DslError) as err:
        parse_setup("bogus {\n}\n")
    assert "bogus" in str(err.value)


def test_missing_star_between_factors():
    with pytest.raises(DslError) as err:
        parse_setup("fiber {\n  x: 4\n  y: 7\n  d y = 2 x^2\n}\n"
                    "lie_model {\n  q1: 3 -> p1: 4\n}\n")
    assert "missing '*'" in str(err.value)


def test_hash_tracks_normalized_text():
    a = parse_setup("fiber {\n  x: 4\n  y: 7\n  d y = x^2\n}\n"
                    "lie_model {\n  q1: 3 -> p1: 4\n}\n")
    # whitespace and comments do not change the hash
    b = parse_setup("# comment\nfiber {  x: 4 ; y: 7 ; d y = x^2 }\n"
                    "lie_model { q1: 3 -> p1: 4 }\n")
    assert a.setup_hash() == b.setup_hash()
    c = parse_setup("fiber {\n  x: 4\n  y: 7\n  d y = 2*x^2\n}\n"
                    "lie_model {\n  q1: 3 -> p1: 4\n}\n")
    assert a.setup_hash() != c.setup_hash()


def test_parser_fuzz_never_crashes():
    rng = random.Random(41)
    seeds = [p.read_text() for p in SETUP_FILES]
    alphabet = "xyzpqe123 {}()^*+-=:;#\n->d"
    count = 0
    for _ in range(300):
        text = list(rng.choice(seeds))
        for _ in range(rng.randint(1, 8)):
            op = rng.randrange(3)
            pos = rng.randrange(len(text)) if text else 0
            if op == 0 and text:
                del text[pos]
            elif op == 1:
                text.insert(pos, rng.choice(alphabet))
            elif text:
                text[pos] = rng.choice(alphabet)
        try:
            parse_setup("".join(text))
        except DslError:
            pass
        count += 1
    assert count == 300
