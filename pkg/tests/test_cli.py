import json

import pytest

from enrichedcut.cli import main
from enrichedcut.formats import parse_anchors, parse_graph

C4 = "prg 4\nedge 0 1 1\nedge 1 2 1\nedge 2 3 1\nedge 0 3 1\n"
K4 = "prg 4\n" + "".join(f"edge {a} {b} 1\n" for a in range(4) for b in range(a + 1, 4))
CLAUSE = "nae 3 1\n-1 2 3\n"


@pytest.fixture
def files(tmp_path):
    def put(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return put


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestSolve:
    def test_matching_cut(self, capsys, files):
        code, out, _ = run(capsys, "solve", "matching-cut", files("c4.prg", C4))
        assert code == 0 and out.startswith("yes\nA: ")
        code, out, _ = run(capsys, "solve", "matching-cut", files("k4.prg", K4))
        assert code == 1 and out.strip() == "no"

    def test_d_cut_json(self, capsys, files):
        code, out, _ = run(capsys, "solve", "d-cut", files("k4.prg", K4), "--d", "2", "--json")
        data = json.loads(out)
        assert code == 0 and data["answer"] == "yes" and len(data["A"]) + len(data["B"]) == 4

    def test_d_cut_needs_d(self, capsys, files):
        code, _, err = run(capsys, "solve", "d-cut", files("k4.prg", K4))
        assert code == 64 and "--d" in err

    def test_stable_cut_classes(self, capsys, files):
        path = files("c4.prg", C4)
        assert run(capsys, "solve", "stable-cut", path)[0] == 0
        code, out, _ = run(capsys, "solve", "stable-cut", path, "--class", "h2221-c3", "--k", "4")
        assert code == 0 and out.startswith("yes\ncut: ")
        assert run(capsys, "solve", "stable-cut", path, "--class", "bogus")[0] == 64

    def test_nae(self, capsys, files):
        code, out, _ = run(capsys, "solve", "nae01", files("f.nae", CLAUSE))
        assert code == 0 and "assignment:" in out

    def test_parse_error(self, capsys, files):
        code, _, err = run(capsys, "solve", "matching-cut", files("bad.prg", "prg 2\nedge 0 5 1\n"))
        assert code == 64 and "line 2" in err

    def test_missing_file(self, capsys):
        assert run(capsys, "solve", "matching-cut", "/nonexistent/x.prg")[0] == 64

    def test_invariant_exit_code(self, capsys, files):
        # a ring of loopless triangles on a looped cycle breaks the r = 1 bound
        m = 12
        lines = [f"prg {m + 12}"] + [f"loop {i}" for i in range(m)]
        edges = {tuple(sorted((i, (i + 1) % m))) for i in range(m)}
        for i in range(4):
            a, b, c = m + 3 * i, m + 3 * i + 1, m + 3 * i + 2
            edges |= {(a, b), (b, c), (a, c), (3 * i, a), (3 * i + 1, b), (3 * i + 2, c)}
        lines += [f"edge {u} {v} 1" for u, v in sorted(edges)]
        path = files("ring.prg", "\n".join(lines) + "\n")
        code, _, err = run(capsys, "solve", "stable-cut", path, "--class", "h1-rnet:1", "--trust-class")
        assert code == 70 and "internal error" in err


class TestGenerate:
    def test_stdout(self, capsys, files):
        code, out, _ = run(capsys, "generate", "mmc", files("f.nae", CLAUSE))
        assert code == 0 and parse_graph(out).n == 15

    def test_file_and_anchors(self, capsys, files, tmp_path):
        out_path = tmp_path / "g.prg"
        code, _, _ = run(capsys, "generate", "prsc-triangle", files("f.nae", CLAUSE), "-o", str(out_path))
        assert code == 0
        assert parse_graph(out_path.read_text()).n > 0
        _, _, params = parse_anchors((tmp_path / "g.prg.anchors").read_text())
        assert params["l"] == 4

    def test_dcut_and_cycle(self, capsys, files):
        f = files("f.nae", CLAUSE)
        assert run(capsys, "generate", "dcut", f, "--d", "3")[0] == 0
        assert run(capsys, "generate", "prsc-cycle", f)[0] == 0
        assert run(capsys, "generate", "mmc", f, "--k", "0")[0] == 64


class TestReduce:
    def test_gen_obs_yes(self, capsys, files):
        code, out, _ = run(capsys, "reduce", "gen-obs", files("p3.prg", "prg 3\nedge 0 1 1\nedge 1 2 1\n"))
        assert code == 0 and out.startswith("rule ")

    def test_h_obs_no(self, capsys, files):
        code, out, _ = run(capsys, "reduce", "h-obs", files("k4.prg", K4))
        assert code == 1 and "no" in out

    def test_reduced_json(self, capsys, files):
        text = "prg 5\n" + "".join(f"loop {i}\n" for i in range(5)) + "edge 0 1 1\nedge 1 2 1\nedge 2 3 1\nedge 3 4 1\nedge 0 4 1\n"
        code, out, _ = run(capsys, "reduce", "gen-obs", files("c5.prg", text), "--json")
        assert code == 2 and json.loads(out)["result"] == "reduced"

    def test_k_cap(self, capsys, files):
        path = files("c4.prg", C4)
        assert run(capsys, "reduce", "small-cut", path, "--k", "8")[0] == 64
        assert run(capsys, "reduce", "small-cut", path, "--k", "8", "--allow-large-k")[0] in (0, 1, 2)


class TestClassifyAndCheck:
    @pytest.mark.parametrize(
        "problem,forbid,code",
        [
            ("mmc", "P5", 0),
            ("prsc", "C3,H1p2_2_2_2", 1),
            ("prsc", "H1,N1_1_1", 0),
            ("prsc", "N2_2_2,H1p3_3_3_3", 2),
            ("dcut:2", "K4", 1),
        ],
    )
    def test_classify(self, capsys, problem, forbid, code):
        got, out, _ = run(capsys, "classify", "--problem", problem, "--forbid", forbid)
        assert got == code and out.split("\n")[0] in ("P", "NP-complete", "Unknown")

    def test_classify_bad(self, capsys):
        assert run(capsys, "classify", "--problem", "xyz", "--forbid", "P3")[0] == 64
        assert run(capsys, "classify", "--problem", "mmc", "--forbid", "Q9")[0] == 64

    def test_check(self, capsys, files):
        code, out, _ = run(capsys, "check", "free", files("k4.prg", K4), "--forbid", "C3,C5")
        assert code == 1 and out.strip() == "contains C3"
        assert run(capsys, "check", "class-s", "K1_3")[0] == 0
        assert run(capsys, "check", "class-s", "C3")[0] == 1
        code, out, _ = run(capsys, "check", "pendant", "N1_1_2", "--json")
        assert code == 0 and json.loads(out)["class"] == "NetSubdivision"


class TestFuzz:
    def test_clean_run(self, capsys):
        code, out, _ = run(capsys, "fuzz", "--trials", "5", "--suites", "kernels,poly", "--json", "--no-timings")
        data = json.loads(out)
        assert code == 0 and "seconds" not in data and set(data["counts"]) == {"kernels", "poly"}

    def test_save_and_replay(self, capsys, tmp_path):
        code, _, _ = run(capsys, "fuzz", "--trials", "20", "--suites", "bridges", "--save-dir", str(tmp_path))
        assert code == 1
        saved = sorted(tmp_path.glob("bridges-*.txt"))
        assert saved
        code, out, _ = run(capsys, "fuzz", "--replay", str(saved[0]))
        assert code == 1 and out.startswith("fail")

    def test_bad_args(self, capsys):
        assert run(capsys, "fuzz", "--loop-probability", "x")[0] == 64
        assert run(capsys, "fuzz", "--suites", "nope")[0] == 64
        assert run(capsys, "nonsense")[0] == 64
        assert run(capsys)[0] == 64
