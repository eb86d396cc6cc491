import os
from pathlib import Path

import pytest

import bwlf

ROOT = Path(os.environ.get("BWLF_SOURCE_DIR", Path(__file__).resolve().parents[2]))


def test_clean_line_defaults():
    assert bwlf.clean_line("LO, praise of the prowess of people-kings") == [
        "lo", "praise", "of", "the", "prowess", "of", "people", "kings",
    ]


def test_build_matrix_from_sample():
    rules = bwlf.load_rules(str(ROOT / "data" / "beowulf.rules"))
    text = (ROOT / "data" / "beowulf.txt").read_text(encoding="utf-8")
    records, warnings = bwlf.build_matrix(bwlf.mark_structure(text, rules), rules.keep_terminal)
    assert records[0].as_tuple() == (1, 1, "lo", 2, 0, 0)
    assert records[24].as_tuple() == (1, 3, "won!", 3, 0, 1)
    assert records[-1].line == 319
    assert warnings == []


def test_speech_and_strip():
    flags, spans, warnings = bwlf.detect_speech(['"who', "are", 'ye"', "then"])
    assert flags == [1, 1, 1, 0]
    assert spans == [(0, 2)]
    assert bwlf.strip_word('"who') == "who"
    assert bwlf.detect_eos("ruled....") == 1


def test_analyze_and_dictionary():
    d = bwlf.LexiconDictionary.parse("[posemo]\nprais*\nhonor\n")
    assert d.category_names == ["posemo"]
    assert bwlf.match_word("praise", d) == [1]
    records, _ = bwlf.build_matrix(bwlf.mark_structure("praise the prowess"))
    rows = bwlf.analyze(records, d)
    assert [r.sixltr for r in rows] == [0, 0, 100]
    assert [r.dic for r in rows] == [100, 0, 0]
    with pytest.raises(ValueError):
        bwlf.LexiconDictionary.parse("[a]\nx\n[a]\ny\n")


def test_rqa():
    plot = bwlf.recurrence_matrix(["a", "b", "a", "b"], "word")
    assert plot.off_diagonal_points() == [(1, 3), (2, 4), (3, 1), (4, 2)]
    m = bwlf.rqa(plot, 2)
    assert m.rr == pytest.approx(4 / 12)
    assert (m.det, m.maxline, m.meanline) == (1.0, 2, 2.0)
    with pytest.raises(ValueError):
        bwlf.rqa(plot, 1)


def test_cli_help():
    code, out, _ = bwlf.run_cli(["--help"])
    assert code == 0 and "pipeline" in out
