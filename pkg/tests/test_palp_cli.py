import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from refpoly.cli import main
from refpoly.palp import PalpError, parse_palp, record_from_points, write_palp
from refpoly.report import emit_report
from refpoly.verify import cube, verify_theorem

CUBE = """3 8 cube
-1 -1 -1 -1  1  1  1  1
-1 -1  1  1 -1 -1  1  1
-1  1 -1  1 -1  1 -1  1
"""
TRIANGLE_ROWS = """3 2 rows
1 0
0 1
-1 -1
"""
NOT_REFLEXIVE = """2 3 fat
2 0 -2
0 2 -2
"""
BROKEN = """2 3 bad
1 0 x
0 1 -1
"""


class TestParse:
    def test_columns(self):
        (rec,) = parse_palp(CUBE)
        assert rec.comment == "cube" and len(rec.points()) == 8

    def test_rows(self):
        (rec,) = parse_palp(TRIANGLE_ROWS)
        assert rec.points() == ((1, 0), (0, 1), (-1, -1))
        assert rec.points(transpose=True) == ((1, 0, -1), (0, 1, -1))

    def test_several(self):
        assert len(parse_palp(CUBE + "\n\n" + TRIANGLE_ROWS)) == 2

    @pytest.mark.parametrize("text,msg", [
        (BROKEN, "non-integer"),
        ("2 3\n1 0 1\n", "expected 2 rows"),
        ("2 3\n1 0\n0 1 -1\n", "expected 3 entries"),
        ("0 3\n", "dimension 0"),
        ("3\n", "header"),
    ])
    def test_errors(self, text, msg):
        with pytest.raises(PalpError, match=msg):
            parse_palp(text)

    def test_lenient_skips(self):
        errors = []
        recs = parse_palp(BROKEN + CUBE, strict=False, errors=errors)
        assert [r.comment for r in recs] == ["cube"] and len(errors) == 1
        assert errors[0].line == 2

    @settings(max_examples=60)
    @given(st.integers(2, 4).flatmap(
        lambda n: st.lists(st.tuples(*[st.integers(-50, 50)] * n), min_size=1, max_size=9)))
    def test_roundtrip(self, pts):
        rec = record_from_points(pts, "c")
        (back,) = parse_palp(write_palp([rec]))
        assert back == rec
        assert write_palp(parse_palp(write_palp([rec]))) == write_palp([rec])
        if len(pts) > len(pts[0]):
            assert back.points() == tuple(pts)


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def palp_file(tmp_path):
    def make(text):
        p = tmp_path / "in.palp"
        p.write_text(text)
        return str(p)
    return make


class TestCli:
    def test_check(self, capsys, palp_file):
        code, out, _ = run(capsys, "check", palp_file(CUBE))
        d = json.loads(out)
        assert code == 0 and d["reflexive"] and len(d["dual"]) == 6

    def test_stdin(self, capsys, monkeypatch):
        code, out, _ = run(capsys, "roots", stdin=CUBE, monkeypatch=monkeypatch)
        assert code == 0 and len(json.loads(out)["roots"]) == 6

    def test_lambda(self, capsys, palp_file):
        code, out, _ = run(capsys, "lambda", "--k", "0", palp_file(TRIANGLE_ROWS))
        assert code == 0 and json.loads(out)["lambda"] == [{"k": 0, "index": 1, "free_rank": 0, "torsion": []}]

    def test_lemmas(self, capsys, palp_file):
        code, out, _ = run(capsys, "lemmas", palp_file(CUBE))
        assert code == 0 and json.loads(out)["violations"] == 0

    def test_not_reflexive_is_bad_input(self, capsys, palp_file):
        code, out, err = run(capsys, "roots", palp_file(NOT_REFLEXIVE))
        assert code == 2 and out == "" and "not reflexive" in err

    def test_verify_non_reflexive_reported(self, capsys, palp_file):
        code, out, _ = run(capsys, "verify", palp_file(NOT_REFLEXIVE))
        assert code == 0 and json.loads(out) == {"id": "fat", "n": 2, "reflexive": False}

    def test_lenient_default(self, capsys, palp_file):
        code, out, _ = run(capsys, "check", palp_file(BROKEN + CUBE))
        assert code == 2 and len(out.splitlines()) == 1

    def test_batch_strict(self, capsys, palp_file):
        code, out, err = run(capsys, "batch", palp_file(CUBE + BROKEN))
        assert code == 2 and out == "" and "non-integer" in err

    def test_missing_file(self, capsys):
        code, _, _ = run(capsys, "check", "/nonexistent/file")
        assert code == 2

    def test_degenerate_polytope(self, capsys, palp_file):
        code, out, _ = run(capsys, "verify", palp_file("2 3 flat\n0 1 2\n0 1 2\n" + CUBE))
        lines = [json.loads(ln) for ln in out.splitlines()]
        assert code == 2 and lines[0] == {"id": "flat", "error": "invalid polytope"} and lines[1]["id"] == "cube"

    def test_batch_order(self, capsys, palp_file, tmp_path):
        code, out, _ = run(capsys, "corpus", "--max-dim", "3")
        assert code == 0
        path = palp_file(out)
        code, out, _ = run(capsys, "batch", "--jobs", "2", "--certificates", path)
        lines = [json.loads(ln) for ln in out.splitlines()]
        assert code == 0 and len(lines) == 36
        assert [d["id"] for d in lines] == [r.comment for r in parse_palp(open(path).read())]
        assert all(d["flags"]["lambda_n-1=lambda_n"] for d in lines)
        assert all(len(d["certificates"]) == d["certificate_count"] for d in lines)

    def test_enumerate(self, capsys):
        code, out, _ = run(capsys, "enumerate-2d")
        assert code == 0
        assert out.splitlines()[-1] == "classes=16 exceptional=3 indices=2,2,3"

    def test_mirror(self, capsys, monkeypatch):
        code, out, _ = run(capsys, "corpus", "--max-dim", "4")
        four = [r for r in parse_palp(out) if r.comment == "cube-4"]
        code, out, _ = run(capsys, "mirror-check", stdin=write_palp(four), monkeypatch=monkeypatch)
        assert code == 0 and json.loads(out)["agree"]

    def test_mirror_wrong_dim(self, capsys, palp_file):
        code, _, err = run(capsys, "mirror-check", palp_file(CUBE))
        assert code == 2 and "dimension 4" in err

    def test_module_entry(self, palp_file):
        res = subprocess.run([sys.executable, "-m", "refpoly", "check", palp_file(CUBE)],
                             capture_output=True, text=True)
        assert res.returncode == 0 and json.loads(res.stdout)["n"] == 3


def test_emit_report_fields():
    d = json.loads(emit_report(verify_theorem(cube(3), "c"), certificates=True))
    assert set(d) == {"id", "n", "reflexive", "lambda", "flags", "certificate_count", "certificates", "lemmas"}
    assert d["lambda"][3] == {"k": 3, "index": 1, "free_rank": 0, "torsion": []}
    for c in d["certificates"]:
        assert [sum(a * g[i] for a, g in zip(c["coefficients"], c["generators"])) for i in range(3)] == c["root"]
