import json
import subprocess
import sys

import pytest

from cyclord import serialize as S
from cyclord.cli import main
from cyclord.maps import OrderMap
from cyclord.orders import FiniteCircularOrder, FiniteLinearOrder
from cyclord.variation import SampledFunction

C = FiniteCircularOrder.standard
L = FiniteLinearOrder.standard


@pytest.fixture
def write(tmp_path):
    def _write(name, obj):
        p = tmp_path / name
        p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(p)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_order_pass(capsys, write):
    code, out, _ = run(capsys, "check-order", write("c5.json", S.dump(C(5))))
    assert code == 0 and out.strip() == "axioms: pass"


def test_check_order_relation_fail(capsys, write):
    rel = {"n": 3, "triples": [[0, 1, 2], [2, 1, 0]]}
    code, out, _ = run(capsys, "--format", "json", "check-order", write("r.json", rel))
    data = json.loads(out)
    assert code == 1 and data["ok"] is False and data["axiom"] == "Asymmetry"
    assert data["seed"] == 7


def test_cop_check(capsys, write):
    bad = OrderMap(C(4), C(2), {0: 1, 1: 0, 2: 1, 3: 0})
    code, out, _ = run(capsys, "cop-check", "--cycles", write("bad.json", S.dump(bad)))
    assert code == 1 and out.strip() == "cop: fail COP2 fiber of 0 not convex"
    ok = OrderMap.identity(C(4))
    code, out, _ = run(capsys, "cop-check", write("id.json", S.dump(ok)))
    assert code == 0 and out.strip() == "cop: pass"
    code, out, _ = run(capsys, "cop-check", "--mode", "lop", write("idl.json", S.dump(OrderMap.identity(L(3)))))
    assert code == 0 and out.strip() == "lop: pass"


def test_parse_errors_exit_2(capsys, write):
    assert run(capsys, "check-order", write("junk.json", "{not json"))[0] == 2
    assert run(capsys, "check-order", "/nonexistent/file.json")[0] == 2
    assert run(capsys, "no-such-command")[0] == 2
    f = {"domain": S.dump(L(2)), "values": {"0": "0.5", "1": "1"}}
    code, _, err = run(capsys, "variation", write("f.json", f))
    assert code == 2 and "rational" in err


def test_budget_exit_3(capsys):
    code, _, err = run(capsys, "sturmian", "compare", "--m", "1", "--n", "2", "--budget", "1")
    assert code == 3 and "budget" in err


def test_env_budget_independence(capsys, write, monkeypatch):
    X = L(16)
    fam = [SampledFunction.from_list(X, [(x >> i) & 1 for x in range(16)]) for i in range(4)]
    path = write("fam.json", [S.dump(f) for f in fam])
    monkeypatch.setenv("CYCLORD_BUDGET", "10")
    assert run(capsys, "independence", path)[0] == 3
    monkeypatch.delenv("CYCLORD_BUDGET")
    code, out, _ = run(capsys, "independence", path)
    assert code == 0 and out.strip() == "depth 4 at 1/4,3/4"


def test_intersect_and_convex(capsys):
    code, out, _ = run(capsys, "intersect", "--n", "6", "0", "3", "2", "5")
    assert code == 0 and out.startswith("case ")
    code, out, _ = run(capsys, "convex", "--n", "6", "5,0,1", "--complement")
    assert code == 0 and "complement" in out
    code, out, _ = run(capsys, "convex", "--n", "6", "0,2")
    assert code == 1 and out.strip() == "not convex"


def test_split_and_dot(capsys):
    code, out, _ = run(capsys, "split", "--n", "3", "--points", "0")
    assert code == 0 and out.strip() == "0- 1 2 0+"
    code, out, _ = run(capsys, "--format", "dot", "split", "--n", "2", "--points", "0,1")
    assert code == 0 and out.startswith("digraph split {")
    assert run(capsys, "--format", "dot", "convex", "--n", "3", "0")[0] == 2


def test_lexprod(capsys):
    code, out, _ = run(capsys, "lexprod", "--n", "2", "--m", "2")
    assert code == 0 and out.strip() == "(0,0) (0,1) (1,0) (1,1)"


def test_starcover(capsys):
    code, out, _ = run(capsys, "starcover", "--n", "12", "--cycle", "0,4,8", "--refine")
    assert code == 0
    assert out.splitlines()[1] == "star refinement: " + ",".join(map(str, range(12)))


def test_novak(capsys):
    code, out, _ = run(capsys, "novak-compare", "--n", "6", "0", "2", "4")
    assert code == 0 and out.strip() == "bracket: holds"
    code, out, _ = run(capsys, "novak-compare", "--n", "6", "0", "4", "2")
    assert code == 0 and out.strip() == "bracket: fails"


def test_invlimit(capsys):
    code, out, _ = run(capsys, "invlimit", "--n", "4", "--supports", "0,2;0,1,2,3", "--cofinal")
    assert code == 0 and out.strip() == "2 supports, 4 threads, limit is isomorphic to the host"
    assert run(capsys, "invlimit", "--n", "4", "--supports", "0,2", "--cofinal")[0] == 2


def test_variation_family(capsys, write):
    f = write("f.json", S.dump(SampledFunction.from_list(L(3), [1, 0, 2])))
    assert run(capsys, "variation", f)[1].strip() == "variation 3/1"
    assert run(capsys, "jordan", f)[1].splitlines() == ["u: 0/1 1/1 3/1", "v: -1/1 1/1 1/1"]
    g = write("g.json", S.dump(SampledFunction.from_list(L(5), [0, 1, 0, 1, 0])))
    assert run(capsys, "oscillation", "--epsilon", "1", g)[1].strip() == "3 pieces: 0,1 | 2,3 | 4"


def test_helly(capsys, write):
    X = L(3)
    seq = {"domain": S.dump(X), "functions": [{"0": "0", "1": str(i % 2), "2": "1"} for i in range(12)]}
    code, out, _ = run(capsys, "--format", "json", "helly", write("s.json", seq), "--depth", "3",
                       "--r", "2", "--lo", "0", "--hi", "1")
    data = json.loads(out)
    assert code == 0 and data["certified"] is True
    assert len({i % 2 for i in data["indices"]}) == 1


def test_sturmian_commands(capsys):
    code, out, _ = run(capsys, "sturmian", "code", "--indices", "0..9", "--arc", "0:alpha")
    assert code == 0 and out.strip() == "1010110101 (variation 2)"
    code, out, _ = run(capsys, "sturmian", "cycle", "--indices", "0..2", "--split", "")
    assert out.strip() == "0 2 1"
    code, out, _ = run(capsys, "sturmian", "compare", "--m", "2", "--n", "1")
    assert out.strip() == "{2a} < {1a}"
    code, out, _ = run(capsys, "sturmian", "act", "--indices", "0..4", "--k", "1")
    assert code == 0
    assert run(capsys, "sturmian", "code", "--arc", "nonsense")[0] == 2


def test_sweep_suite_maps(capsys):
    code, out, _ = run(capsys, "--seed", "3", "sweep", "--suite", "maps", "--n-max", "4")
    lines = out.splitlines()
    assert code == 0 and lines and all(line.startswith("[PASS]") for line in lines)
    assert run(capsys, "sweep", "--n-max", "0")[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cyclord", "lexprod", "--n", "1", "--m", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "(0,0) (0,1)"
