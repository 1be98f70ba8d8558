"""
Tests for the numeration command line
"""

import json
import sys
from pathlib import Path

import pytest

project_root = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(project_root))

from src.cfe.cfe_core import cfe_value, parse_cfe
from src.cli.main import build_parser, run
from src.exact_numbers.expression_parser import parse_exact
from src.numeration.digit_word import DigitWord, Tail, parse_word

GOLDEN = parse_exact("golden")
TWO_FIFTHS = parse_exact("2/5")


def _run(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip().splitlines(), captured.err


def test_cfe_of_rational(capsys):
    code, lines, _ = _run(capsys, "cfe", "9/4")
    assert code == 0
    assert lines == ["[2,3,1]"]


def test_cfe_of_irrational_needs_digits(capsys):
    code, lines, err = _run(capsys, "cfe", "golden")
    assert code == 2
    assert lines == []
    assert "error[usage]" in err

    code, lines, _ = _run(capsys, "cfe", "golden", "--digits", "5")
    assert code == 0
    assert lines == ["[0,1,1,1,1,...]"]


def test_cfe_period(capsys):
    code, lines, _ = _run(capsys, "cfe", "golden", "--period")
    assert code == 0
    assert lines == ["[0;(1)]"]


def test_value_of_cfe_list(capsys):
    code, lines, _ = _run(capsys, "value", "[0,2,1,1]")
    assert code == 0
    assert lines == ["2/5"]


def test_value_of_word(capsys):
    code, lines, _ = _run(capsys, "value", "--alpha", "2/5", "--word", "(2,1)|0")
    assert code == 0
    assert lines == ["3/5"]


def test_encode_integer(capsys):
    code, lines, _ = _run(capsys, "encode", "--alpha", "golden", "--int", "4")
    assert code == 0
    assert lines == ["(1,1,1)|0"]


def test_encode_with_oracle(capsys):
    code, lines, _ = _run(capsys, "encode", "--alpha", "2/5", "--int", "3", "--oracle")
    assert code == 0
    assert lines == ["(1,1)|0", "oracle: MATCH"]


def test_encode_off_grid_real_over_rational_alpha(capsys):
    code, lines, _ = _run(capsys, "encode", "--alpha", "2/5", "--real", "1/2", "--oracle")
    assert code == 0
    assert lines == ["(1)|0 eps=1/2", "oracle: MATCH"]

    code, _, err = _run(capsys, "encode", "--alpha", "2/5", "--real", "3/2")
    assert code == 1
    assert "error[domain]" in err


def test_encode_non_terminating_real(capsys):
    code, _, err = _run(capsys, "encode", "--alpha", "golden", "--real", "1/2")
    assert code == 2
    assert "--digits" in err

    code, lines, _ = _run(capsys, "encode", "--alpha", "golden", "--real", "1/2", "--digits", "4")
    assert code == 0
    assert lines == ["(1,1,1,0,...)"]


def test_decode(capsys):
    code, lines, _ = _run(capsys, "decode", "--alpha", "golden", "--word", "(1,1,1)|0")
    assert code == 0
    assert lines == ["4"]

    code, lines, _ = _run(capsys, "decode", "--alpha", "golden", "--word", "()|max")
    assert lines == ["-1"]


def test_complement(capsys):
    code, lines, _ = _run(capsys, "complement", "--alpha", "golden", "--word", "(1)|0")
    assert code == 0
    assert lines[-1] == "()|max"


def test_three_distance(capsys):
    code, lines, _ = _run(capsys, "three-distance", "--alpha", "2/5", "--n", "5")
    assert code == 0
    assert lines == ["1/5 x5"]


def test_three_distance_json(capsys):
    code, lines, _ = _run(capsys, "three-distance", "--alpha", "golden", "--n", "5", "--json", "--oracle")
    assert code == 0
    document = json.loads("\n".join(lines))
    assert document["oracle_match"] is True
    assert document["query"]["n"] == 5
    assert document["witness"]["matches"] is True
    total = sum(parse_exact(length) * count for length, count in document["result"])
    assert total == 1


def test_horizon_and_best_rational(capsys):
    code, lines, _ = _run(capsys, "horizon", "--alpha", "3/10", "--alpha2", "17/50", "--oracle")
    assert code == 0
    assert lines == ["3", "oracle: MATCH"]

    code, lines, _ = _run(capsys, "best-rational", "3/10", "17/50")
    assert lines == ["1/3"]


def test_semiconvergents(capsys):
    code, lines, _ = _run(capsys, "semiconvergents", "golden", "--max-denominator", "5", "--oracle")
    assert code == 0
    assert lines == ["1 1/2 2/3 3/5", "oracle: MATCH"]


def test_best_approx(capsys):
    code, lines, _ = _run(capsys, "best-approx", "--alpha", "2/5", "--beta", "3/5",
                          "--side", "left", "--n-max", "4", "--oracle")
    assert code == 0
    assert lines == ["0 1 4", "oracle: MATCH"]


def test_count_json(capsys):
    code, lines, _ = _run(capsys, "count", "--alpha", "golden", "--beta", "1/2", "--nu", "20", "--json", "--oracle")
    assert code == 0
    document = json.loads("\n".join(lines))
    assert document["result"] == 10
    assert document["oracle_match"] is True
    assert sum(row["term"] for row in document["witness"]["rows"]) == 10


def test_orbit(capsys):
    code, lines, _ = _run(capsys, "orbit", "--alpha", "golden", "--steps", "3", "--oracle")
    assert code == 0
    assert len(lines) == 5
    assert lines[0] == "0 ()|0 0"
    assert lines[-1] == "oracle: MATCH"


def test_skew(capsys):
    code, lines, _ = _run(capsys, "skew", "--alpha", "2/5", "--beta", "0", "--steps", "5")
    assert code == 0
    assert lines[0].startswith("1 (2,0)")


def test_domain_error_exit_code(capsys):
    code, _, err = _run(capsys, "encode", "--alpha", "2/5", "--int", "7")
    assert code == 1
    assert "error[out_of_range]" in err


def test_parse_error_exit_code(capsys):
    code, _, err = _run(capsys, "cfe", "1/")
    assert code == 2
    assert "error[parse]" in err


@pytest.mark.parametrize("argv", [
    [],
    ["cfe"],
    ["encode", "--alpha", "golden"],
    ["cfe", "2/5", "--log-level", "chatty"],
])
def test_usage_errors(capsys, argv):
    assert run(argv) == 2
    capsys.readouterr()


def test_sweep_command(capsys):
    code, lines, _ = _run(capsys, "sweep", "identity", "--limit", "10")
    assert code == 0
    assert "mismatches: 0" in lines


def test_parser_lists_every_subcommand():
    parser = build_parser()
    choices = parser._subparsers._group_actions[0].choices
    assert set(choices) == {
        "cfe", "value", "encode", "decode", "complement", "three-distance", "horizon",
        "best-approx", "count", "orbit", "skew", "semiconvergents", "best-rational", "sweep"
    }


@pytest.mark.parametrize("argv", [
    ["cfe", "9/4"],
    ["cfe", "3"],
    ["cfe", "golden", "--digits", "8"],
    ["cfe", "golden", "--period"],
    ["cfe", "(-3+sqrt(21))/6", "--period"],
    ["cfe", "sqrt(3)-1", "--digits", "10"],
    ["value", "[0,2,1,1]"],
    ["value", "--alpha", "2/5", "--word", "(2,1)|0"],
    ["value", "--alpha", "golden", "--word", "()|max"],
    ["encode", "--alpha", "golden", "--int", "4"],
    ["encode", "--alpha", "golden", "--int", "-4"],
    ["encode", "--alpha", "sqrt(3)-1", "--int", "17"],
    ["encode", "--alpha", "2/5", "--int", "3"],
    ["encode", "--alpha", "2/5", "--int", "-3"],
    ["encode", "--alpha", "2/5", "--real", "3/5"],
    ["encode", "--alpha", "2/5", "--real", "1/2"],
    ["encode", "--alpha", "2/5", "--real", "golden"],
    ["encode", "--alpha", "golden", "--real", "1/2", "--digits", "6"],
    ["decode", "--alpha", "golden", "--word", "(1,1,1)|0"],
    ["decode", "--alpha", "golden", "--word", "()|max"],
    ["decode", "--alpha", "2/5", "--word", "(1)|max"],
    ["decode", "--alpha", "golden", "--word", "(1,1,1)|0", "--real"],
    ["complement", "--alpha", "golden", "--word", "(1)|0"],
    ["complement", "--alpha", "2/5", "--word", "(1,1)|0"],
    ["three-distance", "--alpha", "2/5", "--n", "5"],
    ["horizon", "--alpha", "3/10", "--alpha2", "17/50"],
    ["best-approx", "--alpha", "golden", "--beta", "1/2", "--n-max", "40"],
    ["count", "--alpha", "2/5", "--beta", "3/5", "--nu", "5"],
    ["orbit", "--alpha", "golden", "--steps", "6"],
    ["skew", "--alpha", "golden", "--beta", "1/2", "--steps", "6"],
    ["skew", "--alpha", "2/5", "--beta", "0", "--steps", "5"],
    ["semiconvergents", "golden", "--max-denominator", "20"],
    ["best-rational", "3/10", "17/50"],
])
def test_every_subcommand_matches_its_oracle(capsys, argv):
    code, lines, _ = _run(capsys, *argv, "--oracle")
    assert code == 0
    assert lines[-1] == "oracle: MATCH"


def _word_from_json(alpha, document):
    return DigitWord(alpha, tuple(document["digits"]), Tail(document["tail"]))


def _exact_list(texts):
    return [parse_exact(text) for text in texts]


# argv, reading of the JSON result, reading of the text lines
JSON_CASES = [
    (["cfe", "9/4"],
     lambda r: cfe_value(r["digits"]), lambda lines: cfe_value(parse_cfe(lines[0]))),
    (["value", "[0,2,1,1]"],
     parse_exact, lambda lines: parse_exact(lines[0])),
    (["value", "--alpha", "2/5", "--word", "(2,1)|0"],
     parse_exact, lambda lines: parse_exact(lines[0])),
    (["encode", "--alpha", "golden", "--int", "-4"],
     lambda r: _word_from_json(GOLDEN, r), lambda lines: parse_word(GOLDEN, lines[0])),
    (["encode", "--alpha", "2/5", "--real", "3/5"],
     lambda r: _word_from_json(TWO_FIFTHS, r), lambda lines: parse_word(TWO_FIFTHS, lines[0])),
    (["encode", "--alpha", "2/5", "--real", "1/2"],
     lambda r: (_word_from_json(TWO_FIFTHS, r["word"]), parse_exact(r["eps"])),
     lambda lines: (parse_word(TWO_FIFTHS, lines[0].split(" eps=")[0]), parse_exact(lines[0].split(" eps=")[1]))),
    (["decode", "--alpha", "golden", "--word", "(1,0,1)|0"],
     int, lambda lines: int(lines[0])),
    (["decode", "--alpha", "golden", "--word", "(1,1)|max", "--real"],
     parse_exact, lambda lines: parse_exact(lines[0])),
    (["complement", "--alpha", "2/5", "--word", "(1,1)|0"],
     lambda r: _word_from_json(TWO_FIFTHS, r), lambda lines: parse_word(TWO_FIFTHS, lines[-1])),
    (["three-distance", "--alpha", "golden", "--n", "7"],
     lambda r: [(parse_exact(length), count) for length, count in r],
     lambda lines: [(parse_exact(line.split(" x")[0]), int(line.split(" x")[1])) for line in lines]),
    (["horizon", "--alpha", "3/10", "--alpha2", "17/50"],
     int, lambda lines: int(lines[0])),
    (["best-approx", "--alpha", "golden", "--beta", "1/3", "--side", "right", "--n-max", "30"],
     list, lambda lines: [int(n) for n in lines[0].split()]),
    (["count", "--alpha", "golden", "--beta", "1/3", "--nu", "30", "--inclusive"],
     int, lambda lines: int(lines[0])),
    (["orbit", "--alpha", "golden", "--steps", "4"],
     lambda r: [(row["k"], _word_from_json(GOLDEN, row["word"]), parse_exact(row["value"])) for row in r],
     lambda lines: [(int(k), parse_word(GOLDEN, word), parse_exact(value))
                    for k, word, value in (line.split(" ") for line in lines)]),
    (["skew", "--alpha", "golden", "--beta", "1/2", "--steps", "4"],
     lambda r: [(row["k"], tuple(row["digits"]), parse_exact(row["y"])) for row in r],
     lambda lines: [(int(k), tuple(int(d) for d in pair.strip("()").split(",")), parse_exact(y))
                    for k, pair, y in (line.split(" ") for line in lines)]),
    (["semiconvergents", "sqrt(3)-1", "--max-denominator", "30"],
     _exact_list, lambda lines: _exact_list(lines[0].split())),
    (["best-rational", "3/10", "17/50"],
     parse_exact, lambda lines: parse_exact(lines[0])),
]


@pytest.mark.parametrize("argv,from_json,from_text", JSON_CASES)
def test_json_result_reparses_to_text_result(capsys, argv, from_json, from_text):
    code, lines, _ = _run(capsys, *argv)
    assert code == 0
    code, json_lines, _ = _run(capsys, *argv, "--json")
    assert code == 0
    document = json.loads("\n".join(json_lines))
    assert set(document) == {"query", "result", "witness", "oracle_match"}
    assert from_json(document["result"]) == from_text(lines)


def test_sweep_json_matches_text_summary(capsys):
    argv = ("sweep", "three-distance", "--limit", "8")
    code, lines, _ = _run(capsys, *argv)
    assert code == 0
    text = dict(line.split(": ", 1) for line in lines)
    code, json_lines, _ = _run(capsys, *argv, "--json")
    assert code == 0
    document = json.loads("\n".join(json_lines))
    assert document["oracle_match"] is True
    for key in ("kind", "total_processed", "total_failed", "mismatches"):
        assert str(document["result"][key]) == text[key]
