import json
import subprocess
import sys

import pytest

from connwidth import Guards
from connwidth.cli import main
from connwidth.config import load_guards
from connwidth.generators import GENERATORS, CorpusSpec, SplitMix64, render, write_instance
from connwidth.io import InstanceError, instance_from_system, load_instance, parse_instance


def _write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(payload if isinstance(payload, str) else json.dumps(payload))
    return str(path)


@pytest.fixture
def p3_file(tmp_path):
    return str(write_instance(CorpusSpec("path", 3), tmp_path))


@pytest.fixture
def k4_file(tmp_path):
    return str(write_instance(CorpusSpec("complete", 4), tmp_path))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines()]


# generators -----------------------------------------------------------------


def test_splitmix_reference_values():
    # published first outputs for seed 0
    rng = SplitMix64(0)
    assert [rng.next() for _ in range(3)] == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_gen_path_is_p3(tmp_path):
    inst = load_instance(write_instance(CorpusSpec("path", 3), tmp_path))
    assert inst.kind == "graph_cut" and inst.n == 3
    assert inst.edges == ((0, 1), (1, 2))
    k4 = load_instance(write_instance(CorpusSpec("complete", 4), tmp_path))
    assert len(k4.edges) == 6


def test_gen_random_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    for out in (a, b):
        assert main(["gen", "random", "--n", "6", "--p", "0.5", "--seed", "42", "--out", str(out)]) == 0
    name = "random-n6-p0.5-42.json"
    assert (a / name).read_bytes() == (b / name).read_bytes()
    capsys.readouterr()


@pytest.mark.parametrize("generator", GENERATORS)
@pytest.mark.parametrize("seed", [0, 1, 99])
def test_gen_output_validates(tmp_path, capsys, generator, seed):
    spec = CorpusSpec(generator, 5, 0.6, seed)
    path = write_instance(spec, tmp_path)
    code, [out] = run(capsys, "validate", str(path))
    assert code == 0 and out["valid"]


def test_gen_boundary_kind(tmp_path):
    path = write_instance(CorpusSpec("cycle", 4, kind="graph_boundary"), tmp_path)
    assert path.name == "cycle-n4-boundary-0.json"
    inst = load_instance(path)
    assert inst.kind == "graph_boundary" and inst.n == 4


def test_gen_unwritable(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert main(["gen", "path", "--n", "3", "--out", str(blocker / "sub")]) == 2


# instance parsing -----------------------------------------------------------


def test_instance_round_trip(named_systems):
    for s in named_systems.values():
        inst = instance_from_system(s)
        again = parse_instance(json.loads(json.dumps(inst.to_json())))
        assert again == inst
        assert (again.build().values == s.values).all()


@pytest.mark.parametrize(
    "payload,where",
    [
        ({"kind": "explicit", "n": 2, "values": [0, 1, 1]}, "values"),
        ({"kind": "magic", "n": 2}, "kind"),
        ({"kind": "graph_cut", "n": 3, "vertices": 3, "edges": [[0, 3]]}, "edges[0]"),
        ({"kind": "graph_cut", "n": 2, "vertices": 3, "edges": []}, "n"),
        ({"kind": "graph_boundary", "n": 1, "vertices": 2, "edges": [[1, 1]]}, "edges[0]"),
        ({"kind": "explicit", "n": 1, "values": [0, -1]}, "values[1]"),
        ({"kind": "explicit"}, "n"),
    ],
)
def test_instance_schema_errors(payload, where):
    with pytest.raises(InstanceError) as exc:
        parse_instance(payload)
    assert exc.value.where == where


# commands -------------------------------------------------------------------


def test_validate_exit_codes(tmp_path, capsys, p3_file):
    assert run(capsys, "validate", p3_file)[0] == 0
    broken = _write(tmp_path, "bad.json", {"name": "bad", "kind": "explicit", "n": 2, "values": [0, 1, 2, 0]})
    code, [out] = run(capsys, "validate", broken)
    assert code == 1
    sym = out["reports"][0]
    assert sym["axiom"] == "SYM" and sym["witnesses"] == [1, 2]
    truncated = _write(tmp_path, "trunc.json", '{"name": "x", "kind": "expl')
    assert main(["validate", truncated]) == 2
    assert "line 1" in capsys.readouterr().err


def test_width(capsys, p3_file, k4_file, tmp_path):
    code, [out] = run(capsys, "width", p3_file)
    assert code == 0 and out["width"] == 1
    code, [out] = run(capsys, "width", k4_file, "--oracle")
    assert code == 0 and out["width"] == out["oracle"]["width"] == 4
    big = _write(tmp_path, "big.json", {"name": "big", "kind": "explicit", "n": 30, "values": []})
    assert main(["width", big]) == 2
    assert "max_explicit_n" in capsys.readouterr().err


def test_check_family(tmp_path, capsys, k4_file, p3_file):
    fam = _write(tmp_path, "fam.json", {"members": [0, 1, 2, 4, 8]})
    code, [out] = run(capsys, "check-family", k4_file, fam, "--k", "3", "--ie")
    assert code == 0
    assert out["single_ideal"]["holds"] and out["linear_obstacle"]["holds"]

    fam = _write(tmp_path, "fam2.json", {"members": [0, 1]})
    code, [out] = run(capsys, "check-family", p3_file, fam, "--k", "2")
    assert code == 0
    assert [r["axiom"] for r in out["single_ideal"]["reports"]] == ["SIS"]
    assert [r["axiom"] for r in out["linear_obstacle"]["reports"]] == ["O3"]

    fam = _write(tmp_path, "fam3.json", {"members": [8]})
    assert main(["check-family", p3_file, fam, "--k", "2"]) == 2


def test_duality_and_theorem1_exit_codes(capsys, k4_file, p3_file, tmp_path):
    code, [rep] = run(capsys, "duality", k4_file, "--k", "3")
    assert code == 0 and rep["outcome"] == "confirmed" and rep["lw"] == 4

    code, [rep] = run(capsys, "theorem1", p3_file, "--k", "0")
    assert code == 3 and rep["outcome"] == "precondition_failed"

    code, [rep] = run(capsys, "theorem1", k4_file, "--k", "3", "--budget", "max_efficient=4")
    assert code == 3 and rep["outcome"] == "budget_exceeded"
    assert rep["counts"]["efficient_sets"] == 10

    # the reverse direction produces verified mismatches on K4 at k=3
    out = tmp_path / "report.json"
    assert main(["theorem1", k4_file, "--k", "3", "--out", str(out)]) == 1
    rep = json.loads(out.read_text())
    assert rep["counts"]["forward_mismatches"] == 0 and rep["counts"]["reverse_mismatches"] > 0


def test_default_k_sweep(capsys, p3_file):
    code, reps = run(capsys, "duality", p3_file)
    assert [r["k"] for r in reps] == [0, 1, 2, 3]
    assert [r["outcome"] for r in reps] == ["precondition_failed", "precondition_failed", "confirmed", "confirmed"]
    assert code == 3


def test_commands_are_byte_deterministic(k4_file, tmp_path):
    for argv in (["theorem1", k4_file, "--k", "3"], ["duality", k4_file], ["width", k4_file, "--oracle"], ["validate", k4_file]):
        outs = [subprocess.run([sys.executable, "-m", "connwidth.cli", *argv], capture_output=True).stdout for _ in range(2)]
        assert outs[0] == outs[1] and outs[0]


def test_stdout_is_json_only(k4_file):
    proc = subprocess.run([sys.executable, "-m", "connwidth.cli", "duality", k4_file, "--k", "3"], capture_output=True, text=True)
    assert proc.returncode == 0
    json.loads(proc.stdout)
    assert "confirmed" in proc.stderr


def test_guard_env_overrides(tmp_path):
    assert load_guards({}) == Guards()
    assert load_guards({"CONNWIDTH_GUARDS": "max_pairs=5,max_dp_n=10"}).max_pairs == 5
    assert load_guards({"CONNWIDTH_GUARDS": '{"max_efficient": 7}'}).max_efficient == 7
    cfg = tmp_path / "guards.json"
    cfg.write_text('{"max_validate_n": 9}')
    assert load_guards({"CONNWIDTH_GUARDS": str(cfg)}).max_validate_n == 9
    with pytest.raises(ValueError):
        load_guards({"CONNWIDTH_GUARDS": "bogus=1"})


def test_render_matches_file(tmp_path):
    spec = CorpusSpec("star", 4)
    assert write_instance(spec, tmp_path).read_text() == render(spec)
