import json

import pytest

from extshift.cli import main, parse_transform, RunConfig, UsageError
from extshift.complexes import SimplicialComplex, random_complex
from extshift.formats import ParseError, complex_from_json, complex_to_json, format_facets, parse_facets, parse_matrix
from extshift.field import FieldMatrix

TWO_EDGES_TXT = "# two disjoint edges\nn 4\n1 2\n3 4\n"


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {
        "two_edges": TWO_EDGES_TXT,
        "points": "n 2\n1\n2\n",
        "simplex": "n 3\n1 2 3\n",
        "susp": "n 6\n1 2 5\n1 2 6\n3 4 5\n3 4 6\n",
        "bad": "n 4\n1 x\n",
        "nohead": "1 2\n",
        "range": "n 3\n1 5\n",
        "matrix": "n 4\n0 1 0 0\n1 0 0 0\n0 0 1 0\n0 0 0 1\n",
    }.items():
        p = tmp_path / f"{name}.txt"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def test_parse_facets():
    sigma = parse_facets(TWO_EDGES_TXT)
    assert sigma == SimplicialComplex.from_facets(4, [[1, 2], [3, 4]])
    assert parse_facets(format_facets(sigma)) == sigma


@pytest.mark.parametrize(
    "text,line",
    [("n 4\n1 x\n", 2), ("1 2\n", 1), ("n 3\n\n# c\n1 5\n", 4), ("", None), ("n q\n", 1)],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as err:
        parse_facets(text)
    assert err.value.line == line


def test_parse_matrix():
    m = parse_matrix("3\n1 0 0\n0 1 0\n0 0 -1\n", 7)
    assert m == FieldMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 6]], 7)
    with pytest.raises(ParseError):
        parse_matrix("2\n1 0\n", 7)


def test_json_roundtrip():
    import random

    rng = random.Random(0)
    for _ in range(20):
        c = random_complex(rng.randint(1, 7), rng)
        assert complex_from_json(json.dumps(complex_to_json(c))) == c


def test_transform_specs():
    cfg = RunConfig()
    assert parse_transform("identity", 3, cfg) == FieldMatrix.identity(3)
    perm = parse_transform("permutation:2,1,3", 3, cfg)
    assert perm[1, 0] == 1 and perm[0, 1] == 1
    assert parse_transform("random", 4, cfg) == parse_transform("random", 4, cfg)
    u = parse_transform("unitriangular:5", 4, cfg)
    assert all(u[i, i] == 1 for i in range(4)) and all(u[i, j] == 0 for i in range(4) for j in range(i + 1, 4))
    b = parse_transform("block:2:1", 4, cfg)
    assert b[0, 0] == 1 and b[3, 3] == 1
    for bad in ("nonsense", "permutation:1,1,2", "block:5", "permutation:1,2"):
        with pytest.raises(UsageError):
            parse_transform(bad, 3, cfg)


def test_shift_command(files, capsys):
    assert main(["shift", files["two_edges"]]) == 0
    out = capsys.readouterr().out
    lines = [line for line in out.splitlines() if not line.startswith("#")]
    assert lines == ["n 4", "4", "1 2", "1 3"]
    assert main(["shift", files["simplex"]]) == 0
    assert capsys.readouterr().out.startswith("n 3\n1 2 3\n")


def test_shift_json(files, capsys):
    assert main(["shift", files["two_edges"], "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["fVector"] == [1, 4, 2]
    assert doc["meta"]["consensus"] is True and doc["meta"]["trials"] == 3
    assert complex_from_json(doc) == SimplicialComplex.from_facets(4, [[1, 2], [1, 3], [4]])


@pytest.mark.parametrize("name", ["bad", "nohead", "range"])
def test_parse_failures_exit_2(files, name, capsys):
    assert main(["shift", files[name]]) == 2
    err = capsys.readouterr().err
    assert "error" in err


def test_bad_prime_exit_2(files, capsys):
    assert main(["shift", files["two_edges"], "--prime", "100"]) == 2


def test_usage_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_check_corollary_nevo(files, capsys):
    assert main(["check", "corollary", files["two_edges"], files["points"], "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    strict = [m for m in doc["margins"] if m["margin"] > 0]
    assert strict == [{"S": [1, 2, 6], "left": 4, "right": 3, "margin": 1}]
    assert doc["verdict"] == "dominates"


def test_check_theorem(files, capsys):
    assert main(["check", "theorem", files["two_edges"], "--phi", "identity", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert all(m["margin"] == 0 for m in doc["margins"])
    assert main(["check", "theorem", files["susp"], "--phi", "block:4", "--count-order", "lex"]) == 1
    out = capsys.readouterr().out
    assert "witness: {1,3,4}" in out
    assert main(["check", "theorem", files["two_edges"], "--phi", f"file:{files['matrix']}"]) == 0
    assert main(["check", "theorem", files["susp"], "--phi", f"file:{files['matrix']}"]) == 2


def test_check_proposition(files, capsys):
    assert main(["check", "proposition", files["two_edges"], "--inner-order", "lex", "--gin-order", "revlex"]) == 0
    assert "verdict: pass" in capsys.readouterr().out


def test_fuzz_small_and_deterministic(capsys):
    assert main(["fuzz", "--cases", "0"]) == 0
    assert "result: PASS" in capsys.readouterr().out
    assert main(["fuzz", "--cases", "12", "--n-max", "5", "--seed", "3"]) == 0
    a = capsys.readouterr().out
    assert main(["fuzz", "--cases", "12", "--n-max", "5", "--seed", "3", "--jobs", "2"]) == 0
    b = capsys.readouterr().out
    assert a == b


def test_demo_nevo(capsys):
    assert main(["demo", "nevo"]) == 0
    out = capsys.readouterr().out
    assert "MISMATCH" not in out
    assert "{1,2,3} {1,2,4} {1,2,5} {1,2,6}" in out
    assert "{1,2,3} {1,2,4} {1,2,5} {1,3,4}" in out
    assert "2 vs 3" in out


@pytest.mark.parametrize("prime", ["1000000007", "2147483629"])
def test_demo_nevo_other_primes(prime, capsys):
    assert main(["demo", "nevo", "--prime", prime, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["shiftedSkeleton"] == [[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 3, 4]]
