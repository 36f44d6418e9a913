import json

import faults
from horolib import cli, splitlie


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_classify_a3(capsys):
    code, out = run(capsys, ["classify", "--type", "A", "--rank", "3"])
    assert code == 0
    assert out["reflexive_commutative"] == [[2]]
    assert out["heisenberg"] == [1, 3]
    assert out["heisenberg_coefficient_sum"] == 2


def test_classify_g2(capsys):
    code, out = run(capsys, ["classify", "--type", "G", "--rank", "2"])
    assert code == 0
    assert out["reflexive_commutative"] == []
    assert out["heisenberg"] == [2]


def test_classify_a1_heisenberg_rejected(capsys):
    code, out = run(capsys, ["classify", "--type", "A", "--rank", "1"])
    assert code == 0
    assert out["heisenberg"] is None
    assert "simple root" in out["heisenberg_error"]


def test_classify_theta_flag(capsys):
    code, out = run(capsys, ["classify", "--type", "A", "--rank", "3",
                             "--theta", "2"])
    assert out["reflexive"] is True and out["is_heisenberg"] is False


def test_classify_bad_type(capsys):
    code, _ = run(capsys, ["classify", "--type", "Z", "--rank", "9"])
    assert code == 2
    assert "error" in capsys.readouterr().err or True


def test_grade(capsys):
    code, out = run(capsys, ["grade", "--type", "C", "--rank", "3",
                             "--theta", "1"])
    assert code == 0
    assert out["depth"] == 2
    assert out["heisenberg"] is True
    levels = dict((tuple(r), lv) for r, lv in out["levels"])
    assert levels[(2, 2, 1)] == 2
    assert out["system"]["w0_perm"] == [1, 2, 3]


def test_classify_theta_out_of_range(capsys):
    code, _ = run(capsys, ["classify", "--type", "A", "--rank", "3",
                           "--theta", "9"])
    assert code == 2


def test_grade_theta_unparseable(capsys):
    code, _ = run(capsys, ["grade", "--type", "A", "--rank", "3",
                           "--theta", "x"])
    assert code == 2


def test_grade_theta_out_of_range(capsys):
    code, _ = run(capsys, ["grade", "--type", "A", "--rank", "3",
                           "--theta", "9"])
    assert code == 2


def test_eval_g_at_zero(capsys):
    code, out = run(capsys, [
        "eval", "--ctx", '{"family":"sl","size":3,"theta":[1,2]}',
        "--op", "G", "--at", "{}", "--at2", "{}"])
    assert code == 0 and out["value"] == "1/1"


def test_eval_f(capsys, tmp_path):
    element = {"E[1,0]": "1/1", "E[0,1]": "2/1", "E[1,1]": "3/1"}
    path = tmp_path / "x.json"
    path.write_text(json.dumps(element))
    code, out = run(capsys, [
        "eval", "--ctx", '{"family":"sl","size":3,"theta":[1,2]}',
        "--op", "F", "--at", f"@{path}"])
    assert code == 0
    num, den = out["value"].split("/")
    assert den == "1" or int(den) > 0


def test_eval_f_at_zero_vanishes(capsys):
    code, out = run(capsys, [
        "eval", "--ctx", '{"family":"sl","size":3,"theta":[1,2]}',
        "--op", "F", "--at", "{}"])
    assert code == 0 and out["value"] == "0/1"


def test_eval_chi_torus(capsys, ctx_sl3h):
    from horolib import adjointgrp
    g = adjointgrp.torus_element(ctx_sl3h.h_grading(), 2)
    code, out = run(capsys, [
        "eval", "--ctx", '{"family":"sl","size":3,"theta":[1,2]}',
        "--op", "chi", "--at", json.dumps(g.to_json())])
    assert code == 0 and out["value"] == "4/1"


def test_eval_m_matrix(capsys, sl4):
    from horolib import adjointgrp
    code, out = run(capsys, [
        "eval", "--ctx", '{"family":"sl","size":4,"theta":[2]}',
        "--op", "M", "--at", json.dumps(adjointgrp.identity(sl4).to_json())])
    assert code == 0
    assert out["value"] == [["1/1" if i == j else "0/1" for j in range(4)]
                            for i in range(4)]


def test_eval_phi_of_w0(capsys, sl4):
    from horolib import adjointgrp
    w0 = adjointgrp.w0_representative(sl4)
    code, out = run(capsys, [
        "eval", "--ctx", '{"family":"sl","size":4,"theta":[2]}',
        "--op", "phi", "--at", json.dumps(w0.to_json())])
    assert code == 0 and out["value"] == "0/1"


def test_eval_bad_element(capsys):
    code, _ = run(capsys, [
        "eval", "--ctx", '{"family":"sl","size":3,"theta":[1,2]}',
        "--op", "F", "--at", '{"Z[9]": "1/1"}'])
    assert code == 2


def test_eval_g_needs_two(capsys):
    code, _ = run(capsys, [
        "eval", "--ctx", '{"family":"sl","size":3,"theta":[1,2]}',
        "--op", "G", "--at", "{}"])
    assert code == 2


def test_verify_scoped(capsys):
    code, out = run(capsys, ["verify", "--suite", "structure",
                             "--scope", "sl3"])
    assert code == 0 and out["ok"]
    names = [c["name"] for c in out["checks"]]
    assert names == sorted(names)
    assert out["seed"] == 42


def test_verify_rootsys_suite(capsys):
    code, out = run(capsys, ["verify", "--suite", "rootsys"])
    assert code == 0 and out["ok"]


def test_verify_bad_scope(capsys):
    code, _ = run(capsys, ["verify", "--scope", "sl99"])
    assert code == 2


def test_verify_seed_env(capsys, monkeypatch):
    monkeypatch.setenv("HOROLIB_SEED", "7")
    code, out = run(capsys, ["verify", "--suite", "rootsys"])
    assert out["seed"] == 7
    code, out = run(capsys, ["verify", "--suite", "rootsys", "--seed", "9"])
    assert out["seed"] == 9          # flag beats the environment


def test_verify_output_stable(capsys):
    _, first = run(capsys, ["verify", "--suite", "structure", "--scope", "sl3"])
    _, second = run(capsys, ["verify", "--suite", "structure", "--scope", "sl3"])
    assert first == second


def test_verify_catches_corruption(capsys, monkeypatch, sl3):
    bad = faults.corrupt_structure_constant(sl3, 2, 5, 0, delta=1)

    def fake_build(family, size):
        if (family, size) == ("sl", 3):
            return bad
        return splitlie.SplitLieAlgebra(family, size)

    monkeypatch.setattr(splitlie, "build_algebra", fake_build)
    code, out = run(capsys, ["verify", "--suite", "structure",
                             "--scope", "sl3"])
    assert code == 1
    assert not out["ok"]
    assert any(c["status"] == "fail" for c in out["checks"])


def test_tables(capsys):
    code, out = run(capsys, ["tables"])
    assert code == 0 and out["ok"]
    types = {(r["type"], r["rank"]) for r in out["rows"] if "type" in r}
    assert ("E", 7) in types
    e7 = next(r for r in out["rows"] if r.get("type") == "E" and r["rank"] == 7)
    assert e7["commutative"] == [[7]]
    # even-rank A rows have no reflexive commutative nodes
    a4 = next(r for r in out["rows"] if r.get("type") == "A" and r["rank"] == 4)
    assert a4["commutative"] == []
    fixtures = [r for r in out["rows"] if r.get("source") == "fixture"]
    assert len(fixtures) == 4
    assert all(r["match"] for r in fixtures)


def test_lab_config_inline(capsys):
    code, out = run(capsys, [
        "lab", "--config",
        '{"algebra":"sl3","theta":[1,2],"lattice":"integer",'
        '"height":2,"words":30,"seed":42}'])
    assert code == 0 and out["ok"]
    assert out["seed"] == 42
    assert out["word_values"]["within_cap"]


def test_lab_config_file_and_seed_env(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "exp.json"
    cfg.write_text(json.dumps({"algebra": "sl3", "theta": [1, 2],
                               "height": 1, "words": 10, "seed": 5}))
    code, out = run(capsys, ["lab", "--config", f"@{cfg}"])
    assert out["seed"] == 5
    monkeypatch.setenv("HOROLIB_SEED", "11")
    code, out = run(capsys, ["lab", "--config", str(cfg)])
    assert out["seed"] == 11         # env beats the config file


def test_lab_bad_config(capsys):
    code, _ = run(capsys, ["lab", "--config", '{"theta": [1]}'])
    assert code == 2
